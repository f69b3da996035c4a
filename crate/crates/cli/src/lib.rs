//! Argument parsing, dispatch and rendering for the `vnum` binary.
//!
//! Kept as a library so the tests can drive [`parse_args`] and [`run`]
//! without spawning processes.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use vnum_core::asymptotics::{
    check_alpha_equality_class, check_edge_power_bounds, check_pure_power_class, check_v_le_reg,
    default_min_degree_generator, linear_bound_certificate, power_sequence, reg_gap_family,
    ClassReport, Cutoff,
};
use vnum_core::engine::{
    associated_primes, min_matrix_candidate, v_at_prime, v_bounds, v_oracle, v_oracle_all, VBounds,
};
use vnum_core::graph::{
    clique_sum_analysis, v_cycle_closed, v_graph, v_graph_all, v_join_closed, v_path_closed,
    CliqueSumKind,
};
use vnum_core::parse::{parse_graph, parse_ideal, parse_variable_set, GraphExpr, ParsedIdeal};
use vnum_core::{
    Error, Graph, Monomial, MonomialPrime, SearchConfig, StableWitness, VWitness, DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Version of the `--json` layout.
pub const SCHEMA: u32 = 1;

/// How far the certificate in `powers` follows the colon chain.
const CERTIFICATE_HORIZON: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    V,
    Ass,
    VAtPrime,
    VPrimary,
    VGraph,
    ClosedForm,
    Powers,
    Reg,
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    AlphaClass,
    PurePowerClass,
    EdgePowerBounds,
    RegGap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Ideal(ParsedIdeal),
    Graph(GraphExpr),
    GapFamily { a: Vec<u64>, u: u64, n: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
    pub max_n: u32,
    pub budget: u64,
    pub verify_oracle: bool,
    pub witness_all: bool,
    /// 1-based variable indices from `--prime`.
    pub prime: Option<BTreeSet<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub suite: Option<Suite>,
    pub target: Target,
    pub options: Options,
}

/// Rejected command line. `code` is 0 for `--help` and `--version`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub code: i32,
    pub message: String,
}

impl UsageError {
    fn new(message: impl Into<String>) -> Self {
        UsageError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Everything a run produces; `main` only prints it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "vnum",
    version,
    about = "Exact v-numbers of monomial ideals and edge ideals",
    after_help = "Ideals: \"x^2, x*y, y^3\" or \"x1^2, x1*x2\". \
                  Graphs: path(n), cycle(n), cliquesum(G,H), join(G,H), edges(n; 1-2,2-3).\n\
                  check suites take the suite name before the target, e.g. \
                  vnum check reg-gap \"a=5,5 u=1 n=2\"."
)]
struct Cli {
    verb: Verb,
    /// Ideal or graph expression; `check` takes a suite name first.
    #[arg(required = true, num_args = 1..=2)]
    args: Vec<String>,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Highest power (powers) or highest n (check suites).
    #[arg(long, default_value_t = 3)]
    max_n: u32,
    /// Grid points or subsets a single search may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Recompute with the definitional grid search and report agreement.
    #[arg(long)]
    verify_oracle: bool,
    /// List every minimum-degree witness.
    #[arg(long)]
    witness_all: bool,
    /// Variables of the prime for v-at-prime, e.g. "x,z".
    #[arg(long)]
    prime: Option<String>,
}

fn parse_failure(e: Error) -> UsageError {
    UsageError::new(format!("error: {e}"))
}

fn ideal_target(text: &str) -> Result<ParsedIdeal, UsageError> {
    parse_ideal(text).map_err(parse_failure)
}

fn graph_target(text: &str) -> Result<GraphExpr, UsageError> {
    parse_graph(text).map_err(parse_failure)
}

/// `a=5,5 u=1 n=2`, fields in any order, separated by whitespace.
fn gap_target(text: &str) -> Result<Target, UsageError> {
    let (mut a, mut u, mut n) = (None, None, None);
    for field in text.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| {
            UsageError::new(format!("error: expected key=value, found `{field}`"))
        })?;
        let number = |s: &str| {
            s.trim().parse::<u64>().map_err(|_| {
                UsageError::new(format!(
                    "error: `{s}` is not a non-negative integer in `{field}`"
                ))
            })
        };
        match key {
            "a" => {
                a = Some(
                    value
                        .split(',')
                        .map(number)
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
            "u" => u = Some(number(value)?),
            "n" => n = Some(number(value)?),
            _ => {
                return Err(UsageError::new(format!(
                    "error: unknown field `{key}`; expected a, u or n"
                )))
            }
        }
    }
    match (a, u, n) {
        (Some(a), Some(u), Some(n)) => Ok(Target::GapFamily { a, u, n }),
        _ => Err(UsageError::new(
            "error: reg-gap needs a=..., u=... and n=...",
        )),
    }
}

pub fn parse_args<I, T>(argv: I) -> Result<Command, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError {
        code: e.exit_code(),
        message: e.render().to_string(),
    })?;

    let (suite, text) = match (cli.verb, cli.args.as_slice()) {
        (Verb::Check, [suite, text]) => {
            let suite = Suite::from_str(suite, false).map_err(|_| {
                UsageError::new(format!(
                    "error: unknown suite `{suite}`; expected alpha-class, pure-power-class, edge-power-bounds or reg-gap"
                ))
            })?;
            (Some(suite), text.as_str())
        }
        (Verb::Check, _) => {
            return Err(UsageError::new("error: usage: vnum check <suite> <target>"))
        }
        (_, [text]) => (None, text.as_str()),
        _ => {
            return Err(UsageError::new(
                "error: expected exactly one target expression",
            ))
        }
    };

    let target = match (cli.verb, suite) {
        (Verb::VGraph | Verb::ClosedForm, _) | (_, Some(Suite::EdgePowerBounds)) => {
            Target::Graph(graph_target(text)?)
        }
        (_, Some(Suite::RegGap)) => gap_target(text)?,
        _ => Target::Ideal(ideal_target(text)?),
    };

    let prime = match (&cli.prime, cli.verb, &target) {
        (Some(p), Verb::VAtPrime, Target::Ideal(parsed)) => {
            Some(parse_variable_set(p, &parsed.names).map_err(parse_failure)?)
        }
        (None, Verb::VAtPrime, _) => {
            return Err(UsageError::new("error: v-at-prime needs --prime"))
        }
        (Some(_), _, _) => {
            return Err(UsageError::new("error: --prime only applies to v-at-prime"))
        }
        (None, _, _) => None,
    };

    Ok(Command {
        verb: cli.verb,
        suite,
        target,
        options: Options {
            json: cli.json,
            max_n: cli.max_n,
            budget: cli.budget,
            verify_oracle: cli.verify_oracle,
            witness_all: cli.witness_all,
            prime,
        },
    })
}

/// A successful report: JSON body, table, and the exit code it implies.
struct Report {
    json: Value,
    text: String,
    code: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            code: EXIT_OK,
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Parse { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

pub fn run(cmd: &Command) -> Output {
    let config = SearchConfig {
        budget: cmd.options.budget,
    };
    match dispatch(cmd, &config) {
        Ok(report) => {
            let mut json = report.json;
            json["schema"] = json!(SCHEMA);
            let stdout = if cmd.options.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json).expect("plain JSON values")
                )
            } else {
                report.text
            };
            Output {
                code: report.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = error_code(&e);
            let stdout = if cmd.options.json {
                let body = json!({
                    "schema": SCHEMA,
                    "error": { "code": code, "message": e.to_string() },
                });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&body).expect("plain JSON values")
                )
            } else {
                String::new()
            };
            Output {
                code,
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn dispatch(cmd: &Command, config: &SearchConfig) -> vnum_core::Result<Report> {
    let opts = &cmd.options;
    match (&cmd.target, cmd.verb, cmd.suite) {
        (Target::Ideal(p), Verb::V, _) => verb_v(p, opts, config, false),
        (Target::Ideal(p), Verb::VPrimary, _) => verb_v(p, opts, config, true),
        (Target::Ideal(p), Verb::Ass, _) => verb_ass(p, config),
        (Target::Ideal(p), Verb::VAtPrime, _) => {
            let support = opts.prime.clone().unwrap_or_default();
            verb_v_at_prime(p, &support, config)
        }
        (Target::Ideal(p), Verb::Powers, _) => verb_powers(p, opts.max_n, config),
        (Target::Ideal(p), Verb::Reg, _) => verb_reg(p, config),
        (Target::Graph(g), Verb::VGraph, _) => verb_v_graph(&g.build()?, opts, config),
        (Target::Graph(g), Verb::ClosedForm, _) => verb_closed_form(g, opts, config),
        (Target::Ideal(p), Verb::Check, Some(Suite::AlphaClass)) => {
            let r = check_alpha_equality_class(&p.ideal, opts.max_n, config)?;
            Ok(class_report("alpha-class", p, &r))
        }
        (Target::Ideal(p), Verb::Check, Some(Suite::PurePowerClass)) => {
            let r = check_pure_power_class(&p.ideal, opts.max_n, config)?;
            Ok(class_report("pure-power-class", p, &r))
        }
        (Target::Graph(g), Verb::Check, Some(Suite::EdgePowerBounds)) => {
            check_edge_powers(&g.build()?, opts.max_n, config)
        }
        (Target::GapFamily { a, u, n }, Verb::Check, Some(Suite::RegGap)) => {
            check_reg_gap(a, *u, *n, config)
        }
        _ => Err(Error::Internal("target does not fit the verb".into())),
    }
}

fn prime_names(prime: &MonomialPrime, names: &[String]) -> Vec<String> {
    prime
        .support()
        .iter()
        .map(|&i| names[i - 1].clone())
        .collect()
}

fn witness_json(w: &VWitness, names: &[String]) -> Value {
    json!({
        "value": w.value,
        "witness": w.witness.render(names),
        "prime": prime_names(&w.prime, names),
    })
}

fn bounds_json(b: &VBounds) -> Value {
    json!({ "lower": b.lower, "upper": b.upper })
}

fn bounds_text(b: &VBounds) -> String {
    match b.upper {
        Some(u) => format!("{} <= v <= {u}", b.lower),
        None => format!("{} <= v", b.lower),
    }
}

fn cutoff_json(c: &Option<Cutoff>) -> Value {
    match c {
        Some(c) => json!({ "n": c.n, "budget": c.budget, "required": c.required.to_string() }),
        None => Value::Null,
    }
}

fn verb_v(
    p: &ParsedIdeal,
    opts: &Options,
    config: &SearchConfig,
    require_matrix: bool,
) -> vnum_core::Result<Report> {
    let (ideal, names) = (&p.ideal, &p.names);
    if require_matrix && !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let mut json = json!({});
    let mut text = format!("I = <{}>\n", ideal.render(names));

    let (w, method) = if ideal.is_m_primary() {
        let sol = min_matrix_candidate(ideal, config)?;
        let rows: Vec<String> = sol.candidate.rows.iter().map(|r| r.render(names)).collect();
        writeln!(text, "matrix rows  {}", rows.join(", ")).ok();
        json["matrix_rows"] = json!(rows);
        (sol.witness, "matrix")
    } else {
        (v_oracle(ideal, config)?, "grid")
    };
    let bounds = v_bounds(ideal)?;
    writeln!(
        text,
        "v(I)         {}\nmethod       {method}\nwitness      {}\nprime        {}\nbounds       {}",
        w.value,
        w.witness.render(names),
        w.prime.render(names),
        bounds_text(&bounds)
    )
    .ok();

    let mut code = EXIT_OK;
    if opts.verify_oracle {
        let confirmed = method == "grid" || v_oracle(ideal, config)?.value == w.value;
        if !confirmed {
            code = EXIT_DOMAIN;
        }
        json["oracle_confirmed"] = json!(confirmed);
        writeln!(
            text,
            "oracle       {}",
            if confirmed { "agrees" } else { "DISAGREES" }
        )
        .ok();
    }
    if opts.witness_all {
        let all = v_oracle_all(ideal, config)?;
        json["witnesses"] = json!(all
            .iter()
            .map(|x| witness_json(x, names))
            .collect::<Vec<_>>());
        for x in &all {
            writeln!(
                text,
                "also         {} -> {}",
                x.witness.render(names),
                x.prime.render(names)
            )
            .ok();
        }
    }

    json["value"] = json!(w.value);
    json["witness"] = json!(w.witness.render(names));
    json["prime"] = json!(prime_names(&w.prime, names));
    json["method"] = json!(method);
    json["bounds"] = bounds_json(&bounds);
    Ok(Report { json, text, code })
}

fn verb_ass(p: &ParsedIdeal, config: &SearchConfig) -> vnum_core::Result<Report> {
    let (ideal, names) = (&p.ideal, &p.names);
    let mut entries = Vec::new();
    let mut text = format!(
        "I = <{}>\n{:<20} {:>4}  witness\n",
        ideal.render(names),
        "prime",
        "v_P"
    );
    let mut best: Option<VWitness> = None;
    for prime in associated_primes(ideal, config)? {
        let w = v_at_prime(ideal, &prime, config)?;
        writeln!(
            text,
            "{:<20} {:>4}  {}",
            prime.render(names),
            w.value,
            w.witness.render(names)
        )
        .ok();
        entries.push(witness_json(&w, names));
        if best.as_ref().is_none_or(|b| w.value < b.value) {
            best = Some(w);
        }
    }
    let best =
        best.ok_or_else(|| Error::Internal("proper ideal without associated primes".into()))?;
    writeln!(text, "v(I) = {}", best.value).ok();
    let mut json = witness_json(&best, names);
    json["method"] = json!("grid");
    json["bounds"] = bounds_json(&v_bounds(ideal)?);
    json["associated_primes"] = json!(entries);
    Ok(Report::ok(json, text))
}

fn verb_v_at_prime(
    p: &ParsedIdeal,
    support: &BTreeSet<usize>,
    config: &SearchConfig,
) -> vnum_core::Result<Report> {
    let (ideal, names) = (&p.ideal, &p.names);
    let prime = MonomialPrime::new(ideal.ambient(), support.iter().copied())?;
    let w = v_at_prime(ideal, &prime, config)?;
    let mut json = witness_json(&w, names);
    json["method"] = json!("grid");
    json["bounds"] = bounds_json(&v_bounds(ideal)?);
    let text = format!(
        "I = <{}>\nv_P(I)       {}\nprime        {}\nwitness      {}\n",
        ideal.render(names),
        w.value,
        prime.render(names),
        w.witness.render(names)
    );
    Ok(Report::ok(json, text))
}

fn stable_json(w: &StableWitness, graph: &Graph, names: &[String]) -> vnum_core::Result<Value> {
    let cover = graph.neighborhood(&w.stable_set)?;
    Ok(json!({
        "value": w.value,
        "stable_set": w.stable_set.iter().map(|&v| names[v - 1].clone()).collect::<Vec<_>>(),
        "witness": stable_monomial(w, graph.vertex_count())?.render(names),
        "prime": cover.iter().map(|&v| names[v - 1].clone()).collect::<Vec<_>>(),
    }))
}

/// The squarefree monomial of a stable set, a witness for the edge ideal.
fn stable_monomial(w: &StableWitness, n: usize) -> vnum_core::Result<Monomial> {
    Monomial::new(
        (1..=n)
            .map(|v| u64::from(w.stable_set.contains(&v)))
            .collect(),
    )
}

fn verb_v_graph(graph: &Graph, opts: &Options, config: &SearchConfig) -> vnum_core::Result<Report> {
    let names = graph.names();
    let ideal = graph.edge_ideal()?;
    let w = v_graph(graph, config)?;
    let mut json = stable_json(&w, graph, &names)?;
    json["method"] = json!("enumeration");
    let bounds = v_bounds(&ideal)?;
    json["bounds"] = bounds_json(&bounds);
    let set: Vec<&str> = w
        .stable_set
        .iter()
        .map(|&v| names[v - 1].as_str())
        .collect();
    let cover: Vec<&str> = graph
        .neighborhood(&w.stable_set)?
        .into_iter()
        .map(|v| names[v - 1].as_str())
        .collect();
    let mut text = format!(
        "vertices     {}\nedges        {}\nv(I(G))      {}\nstable set   {{{}}}\ncover        {{{}}}\nmethod       enumeration\n",
        graph.vertex_count(),
        graph.edges().len(),
        w.value,
        set.join(", "),
        cover.join(", ")
    );
    let mut code = EXIT_OK;
    if opts.verify_oracle {
        let confirmed = v_oracle(&ideal, config)?.value == w.value as u64;
        if !confirmed {
            code = EXIT_DOMAIN;
        }
        json["oracle_confirmed"] = json!(confirmed);
        writeln!(
            text,
            "oracle       {}",
            if confirmed { "agrees" } else { "DISAGREES" }
        )
        .ok();
    }
    if opts.witness_all {
        let all = v_graph_all(graph, config)?;
        let mut listed = Vec::new();
        for x in &all {
            listed.push(stable_json(x, graph, &names)?);
            let set: Vec<&str> = x
                .stable_set
                .iter()
                .map(|&v| names[v - 1].as_str())
                .collect();
            writeln!(text, "also         {{{}}}", set.join(", ")).ok();
        }
        json["witnesses"] = json!(listed);
    }
    Ok(Report { json, text, code })
}

fn clique_sum_kind(a: &GraphExpr, b: &GraphExpr) -> Option<CliqueSumKind> {
    match (a, b) {
        (GraphExpr::Cycle(c), GraphExpr::Path(p)) | (GraphExpr::Path(p), GraphExpr::Cycle(c)) => {
            Some(CliqueSumKind::CyclePath {
                cycle: *c,
                path: *p,
            })
        }
        (GraphExpr::Cycle(m), GraphExpr::Cycle(n)) => Some(CliqueSumKind::CycleCycle {
            first: *m,
            second: *n,
        }),
        _ => None,
    }
}

fn verb_closed_form(
    expr: &GraphExpr,
    opts: &Options,
    config: &SearchConfig,
) -> vnum_core::Result<Report> {
    let (value, lower, upper, formula) = match expr {
        GraphExpr::Path(n) => {
            let v = v_path_closed(*n)?;
            (Some(v), v, v, "path")
        }
        GraphExpr::Cycle(n) => {
            let v = v_cycle_closed(*n)?;
            (Some(v), v, v, "cycle")
        }
        GraphExpr::Join(a, b) => {
            let v = v_join_closed(&a.build()?, &b.build()?, config)?;
            (Some(v), v, v, "join")
        }
        GraphExpr::CliqueSum(a, b) => {
            let kind = clique_sum_kind(a, b).ok_or_else(|| {
                Error::InvalidParameter(
                    "closed forms cover clique sums of a cycle with a path or a cycle".into(),
                )
            })?;
            let r = clique_sum_analysis(kind)?;
            (r.exact, r.lower, r.upper, "clique-sum")
        }
        GraphExpr::Edges(..) => {
            return Err(Error::InvalidParameter(
                "no closed form for an explicit edge list; use v-graph".into(),
            ))
        }
    };
    let mut json = json!({
        "value": value,
        "method": "closed-form",
        "formula": formula,
        "bounds": { "lower": lower, "upper": upper },
    });
    let mut text = match value {
        Some(v) => format!("v            {v}\nformula      {formula}\n"),
        None => format!("v            in [{lower}, {upper}]\nformula      {formula}\n"),
    };
    let mut code = EXIT_OK;
    if opts.verify_oracle {
        let actual = v_graph(&expr.build()?, config)?.value;
        let confirmed = lower <= actual && actual <= upper;
        if !confirmed {
            code = EXIT_DOMAIN;
        }
        json["enumerated"] = json!(actual);
        json["oracle_confirmed"] = json!(confirmed);
        writeln!(text, "enumerated   {actual}").ok();
    }
    Ok(Report { json, text, code })
}

fn verb_powers(p: &ParsedIdeal, max_n: u32, config: &SearchConfig) -> vnum_core::Result<Report> {
    let (ideal, names) = (&p.ideal, &p.names);
    let seq = power_sequence(ideal, max_n, config)?;
    let mut text = format!(
        "I = <{}>, alpha = {}\n{:>3} {:>6} {:>10}  witness\n",
        ideal.render(names),
        seq.alpha,
        "n",
        "v(I^n)",
        "alpha(I^n)-1"
    );
    let mut rows = Vec::new();
    let mut all_hold = true;
    for e in &seq.values {
        let lower = e.alpha - 1;
        let holds = lower <= e.v.value;
        all_hold &= holds;
        writeln!(
            text,
            "{:>3} {:>6} {:>10}  {}",
            e.n,
            e.v.value,
            lower,
            e.v.witness.render(names)
        )
        .ok();
        rows.push(json!({
            "n": e.n,
            "value": e.v.value,
            "witness": e.v.witness.render(names),
            "prime": prime_names(&e.v.prime, names),
            "lower_bound": lower,
            "holds": holds,
        }));
    }
    if let Some(c) = &seq.cutoff {
        writeln!(
            text,
            "cut off at n = {}: needs {} grid points, budget {}",
            c.n, c.required, c.budget
        )
        .ok();
    }

    let certificate = default_min_degree_generator(ideal).and_then(|f| {
        linear_bound_certificate(
            ideal,
            &f,
            CERTIFICATE_HORIZON,
            max_n.saturating_sub(1).max(1),
            config,
        )
    });
    let certificate_json = match &certificate {
        Ok(c) => {
            writeln!(
                text,
                "certificate  f = {}, n0 = {}, d = {}, v(I^(n+1)) <= {} n + {} {}",
                c.f.render(names),
                c.n0,
                c.d,
                c.alpha,
                c.d,
                if c.holds() { "holds" } else { "FAILS" }
            )
            .ok();
            json!({
                "f": c.f.render(names),
                "n0": c.n0,
                "d": c.d,
                "stable_colon": c.stable_colon.render(names),
                "checks": c.checks,
                "holds": c.holds(),
                "cutoff": cutoff_json(&c.cutoff),
            })
        }
        Err(e) => {
            writeln!(text, "certificate  unavailable: {e}").ok();
            json!({ "error": e.to_string() })
        }
    };
    all_hold &= certificate.as_ref().map_or(true, |c| c.holds());

    let json = json!({
        "value": seq.values.first().map(|e| e.v.value),
        "method": "grid",
        "alpha": seq.alpha,
        "powers": rows,
        "certificate": certificate_json,
        "cutoff": cutoff_json(&seq.cutoff),
        "holds": all_hold,
    });
    let code = if seq.cutoff.is_some() {
        EXIT_BUDGET
    } else if !all_hold {
        EXIT_DOMAIN
    } else {
        EXIT_OK
    };
    Ok(Report { json, text, code })
}

fn verb_reg(p: &ParsedIdeal, config: &SearchConfig) -> vnum_core::Result<Report> {
    let (ideal, names) = (&p.ideal, &p.names);
    let reg = ideal.regularity_zero_dim()?;
    let r = check_v_le_reg(ideal, config)?;
    let json = json!({
        "value": reg,
        "method": "standard-monomials",
        "v": r.v,
        "holds": r.holds,
    });
    let text = format!(
        "I = <{}>\nreg(S/I)     {reg}\nv(I)         {}\nv <= reg     {}\n",
        ideal.render(names),
        r.v,
        if r.holds { "holds" } else { "FAILS" }
    );
    let code = if r.holds { EXIT_OK } else { EXIT_DOMAIN };
    Ok(Report { json, text, code })
}

fn verdict(holds: bool) -> (&'static str, i32) {
    if holds {
        ("holds", EXIT_OK)
    } else {
        ("FAILS", EXIT_DOMAIN)
    }
}

fn class_report(suite: &str, p: &ParsedIdeal, r: &ClassReport) -> Report {
    let (word, code) = verdict(r.holds());
    let mut text = format!(
        "I = <{}>, v = {}, alpha = {}\n{:>3} {:>10} {:>10}\n",
        p.ideal.render(&p.names),
        r.v,
        r.alpha,
        "n",
        "v(I^(n+1))",
        "v + n alpha"
    );
    for e in &r.entries {
        writeln!(text, "{:>3} {:>10} {:>10}", e.n, e.v, e.expected).ok();
    }
    writeln!(text, "{suite}: {word}").ok();
    let json = json!({
        "suite": suite,
        "value": r.v,
        "method": "grid",
        "holds": r.holds(),
        "report": r,
    });
    Report { json, text, code }
}

fn check_edge_powers(
    graph: &Graph,
    max_n: u32,
    config: &SearchConfig,
) -> vnum_core::Result<Report> {
    let r = check_edge_power_bounds(graph, max_n, config)?;
    let (word, mut code) = verdict(r.holds());
    let mut text = format!(
        "v(I(G)) = {}\n{:>3} {:>6} {:>6} {:>10}\n",
        r.v, "n", "lower", "upper", "v(I^(n+1))"
    );
    for e in &r.entries {
        writeln!(text, "{:>3} {:>6} {:>6} {:>10}", e.n, e.lower, e.upper, e.v).ok();
    }
    if let Some(c) = &r.cutoff {
        writeln!(
            text,
            "cut off at n = {}: needs {} grid points",
            c.n, c.required
        )
        .ok();
        if code == EXIT_OK {
            code = EXIT_BUDGET;
        }
    }
    writeln!(text, "edge-power-bounds: {word}").ok();
    let json = json!({
        "suite": "edge-power-bounds",
        "value": r.v,
        "method": "grid",
        "holds": r.holds(),
        "report": { "v": r.v, "entries": r.entries },
        "cutoff": cutoff_json(&r.cutoff),
    });
    Ok(Report { json, text, code })
}

fn check_reg_gap(a: &[u64], u: u64, n: u64, config: &SearchConfig) -> vnum_core::Result<Report> {
    let r = reg_gap_family(a, u, n, config)?;
    let (word, code) = verdict(r.holds());
    let text = format!(
        "I = {}\nv            {} (expected {})\nreg          {} (expected {})\ngap          {}\nreg-gap: {word}\n",
        r.ideal, r.v, r.expected_v, r.reg, r.expected_reg, r.gap
    );
    let json = json!({
        "suite": "reg-gap",
        "value": r.v,
        "method": "matrix",
        "holds": r.holds(),
        "ideal": r.ideal.render(&vnum_core::monomial::default_names(r.ideal.ambient())),
        "reg": r.reg,
        "gap": r.gap,
        "expected_v": r.expected_v,
        "expected_reg": r.expected_reg,
    });
    Ok(Report { json, text, code })
}

/// Parses and runs; usage errors become exit code 2 (or 0 for `--help`).
pub fn main_with_args<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cmd) => run(&cmd),
        Err(e) if e.code == EXIT_OK => Output {
            code: EXIT_OK,
            stdout: e.message,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: e.code,
            stdout: String::new(),
            stderr: if e.message.ends_with('\n') {
                e.message
            } else {
                format!("{}\n", e.message)
            },
        },
    }
}
