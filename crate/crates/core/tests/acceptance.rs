//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vnum_core::asymptotics::*;
use vnum_core::engine::*;
use vnum_core::graph::*;
use vnum_core::monomial::ExponentBox;
use vnum_core::{Graph, Monomial};

const CFG: SearchConfig = SearchConfig {
    budget: DEFAULT_BUDGET,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn graph_v(g: &Graph) -> usize {
    v_graph(g, &CFG).unwrap().value
}

fn path_table() -> Outcome {
    for n in 2..=14 {
        let v = graph_v(&Graph::path(n).unwrap());
        ensure!(v == v_path_closed(n).unwrap(), "P_{n}: enumeration {v}");
    }
    for (n, want) in [(4, 1), (5, 1), (6, 2), (10, 3)] {
        ensure!(
            graph_v(&Graph::path(n).unwrap()) == want,
            "v(P_{n}) != {want}"
        );
    }
    Ok("P_2..P_14 match the closed form".into())
}

fn cycle_recurrence() -> Outcome {
    for n in 5..=12 {
        let v = graph_v(&Graph::cycle(n).unwrap());
        ensure!(
            v == v_path_closed(n - 3).unwrap() + 1,
            "C_{n}: enumeration {v}"
        );
        ensure!(v == v_cycle_closed(n).unwrap(), "C_{n}: closed form");
    }
    for n in [3, 4] {
        ensure!(graph_v(&Graph::cycle(n).unwrap()) == 1, "v(C_{n}) != 1");
    }
    Ok("C_3..C_12".into())
}

fn non_additivity() -> Outcome {
    let g1 = Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
    let g2 = Graph::from_edges(5, [(1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
    let glued = Graph::clique_sum_1(&g1, &g2, 1, 1).unwrap();
    let (v1, v2, v) = (graph_v(&g1), graph_v(&g2), graph_v(&glued));
    ensure!(
        glued.vertex_count() == 10,
        "glued graph has {} vertices",
        glued.vertex_count()
    );
    let ideal_v = v_oracle(&glued.edge_ideal().unwrap(), &CFG).unwrap().value;
    ensure!(
        v1 == 1 && v2 == 1 && v == 3 && ideal_v == 3,
        "got {v1}, {v2}, {v}, {ideal_v}"
    );

    let a = ideal(&[&[1, 1, 0, 0, 0], &[0, 1, 1, 0, 0]]);
    let b = ideal(&[&[0, 0, 1, 1, 0], &[0, 0, 0, 1, 1]]);
    let p5 = a.sum(&b).unwrap();
    let vp = v_oracle(&p5, &CFG).unwrap().value;
    ensure!(vp == 1, "P_5 sum has v = {vp}");
    Ok("1 + 1 -> 3 on 10 variables; P_5 sum -> 1".into())
}

fn clique_sums() -> Outcome {
    let mut exact_hits = 0;
    for first in 5..=7 {
        for second in 5..=7 {
            let kind = CliqueSumKind::CycleCycle { first, second };
            let v = graph_v(&kind.graph().unwrap());
            let want = clique_sum_analysis(kind).unwrap().exact;
            ensure!(Some(v) == want, "C_{first}+C_{second}: {v} vs {want:?}");
        }
    }
    for path in 4..=8 {
        for cycle in 5..=8 {
            let kind = CliqueSumKind::CyclePath { cycle, path };
            let a = clique_sum_analysis(kind).unwrap();
            let v = graph_v(&kind.graph().unwrap());
            ensure!(
                a.lower <= v && v <= a.upper,
                "C_{cycle}+P_{path}: {v} not in [{}, {}]",
                a.lower,
                a.upper
            );
            let congruent = matches!(cycle % 4, 1 | 2) && path % 4 == 0;
            ensure!(
                congruent == a.exact.is_some(),
                "C_{cycle}+P_{path}: exactness flag"
            );
            if congruent {
                ensure!(v == a.lower, "C_{cycle}+P_{path}: {v} != lower {}", a.lower);
                exact_hits += 1;
            }
        }
    }
    Ok(format!(
        "9 cycle+cycle exact, 20 brackets, {exact_hits} at the lower end"
    ))
}

fn joins() -> Outcome {
    let graphs = [
        ("P_4", Graph::path(4).unwrap()),
        ("P_6", Graph::path(6).unwrap()),
        ("C_5", Graph::cycle(5).unwrap()),
        ("C_6", Graph::cycle(6).unwrap()),
    ];
    for (na, a) in &graphs {
        for (nb, b) in &graphs {
            let v = graph_v(&Graph::join(a, b).unwrap());
            let want = graph_v(a).min(graph_v(b));
            ensure!(v == want, "{na} * {nb}: {v} vs {want}");
        }
    }
    Ok("16 ordered pairs".into())
}

fn matrix_formula() -> Outcome {
    let corpus = m_primary_corpus(0xA6, 200);
    for i in &corpus {
        let m = v_primary_matrix(i, &CFG).unwrap();
        let o = v_oracle(i, &CFG).unwrap();
        ensure!(
            m.value == o.value,
            "{i}: matrix {} vs oracle {}",
            m.value,
            o.value
        );
        ensure!(m.is_valid_for(i), "{i}: matrix witness invalid");
    }
    let v = v_primary_matrix(&sample_ideal(), &CFG).unwrap().value;
    ensure!(v == 14, "sample ideal gives {v}");
    Ok("200 random ideals agree; sample ideal v = 14".into())
}

fn two_variable() -> Outcome {
    for i in two_variable_corpus(0xA7, 100) {
        let c = v_two_vars(&i).unwrap();
        let m = v_primary_matrix(&i, &CFG).unwrap().value;
        let o = v_oracle(&i, &CFG).unwrap().value;
        ensure!(c == m && m == o, "{i}: closed {c}, matrix {m}, oracle {o}");
    }
    let v = v_two_vars(&ideal(&[&[5, 0], &[0, 5], &[3, 2], &[2, 3]])).unwrap();
    ensure!(v == 4, "<x^5, y^5, x^3y^2, x^2y^3> gives {v}");
    Ok("100 random ideals agree; worked instance v = 4".into())
}

fn bounds() -> Outcome {
    let mut ideals = m_primary_corpus(0xA6, 200);
    ideals.extend(two_variable_corpus(0xA7, 100));
    ideals.extend(general_corpus(0xA8, 100));
    let (mut pure, mut mixed) = (0, 0);
    for i in &ideals {
        let v = v_oracle(i, &CFG).unwrap().value;
        let alpha = i.alpha().unwrap();
        ensure!(alpha - 1 <= v, "{i}: v {v} < alpha - 1");
        if let Some(a) = i.pure_power_exponents() {
            let upper = a.iter().sum::<u64>() - a.len() as u64;
            ensure!(v <= upper, "{i}: v {v} > {upper}");
            let is_pure = i.is_generated_by_pure_powers();
            ensure!(
                (v == upper) == is_pure,
                "{i}: equality {} but pure {is_pure}",
                v == upper
            );
            if is_pure {
                pure += 1;
            } else {
                mixed += 1;
            }
        }
    }
    Ok(format!(
        "{} ideals; {pure} pure-power, {mixed} mixed m-primary",
        ideals.len()
    ))
}

fn powers() -> Outcome {
    let c5 = Graph::cycle(5).unwrap().edge_ideal().unwrap();
    let p5 = Graph::path(5).unwrap().edge_ideal().unwrap();
    for (name, ideal, max_n) in [("C_5", &c5, 3u32), ("P_5", &p5, 2)] {
        let seq = power_sequence(ideal, max_n + 1, &CFG).unwrap();
        ensure!(seq.cutoff.is_none(), "{name}: cut off at {:?}", seq.cutoff);
        for n in 1..=max_n {
            let v = seq.v(n + 1).unwrap();
            ensure!(v == 2 * n as u64 + 1, "v(I({name})^{}) = {v}", n + 1);
        }
    }
    for i in [
        ideal(&[&[2, 0], &[0, 3]]),
        ideal(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 2]]),
    ] {
        let r = check_pure_power_class(&i, 3, &CFG).unwrap();
        ensure!(r.holds() && r.entries.len() == 3, "{i}: {r:?}");
    }
    let sample = sample_ideal();
    let v1 = v_oracle(&sample, &CFG).unwrap().value;
    let v2 = v_oracle(&sample.power(2).unwrap(), &CFG).unwrap().value;
    let alpha = sample.alpha().unwrap();
    ensure!(
        v2 == 17 && v2 != v1 + alpha,
        "sample ideal: v(I^2) = {v2}, v + alpha = {}",
        v1 + alpha
    );
    Ok("C_5, P_5 and pure-power sequences; sample ideal v(I^2) = 17 != 20".into())
}

fn certificate() -> Outcome {
    let c5 = Graph::cycle(5).unwrap().edge_ideal().unwrap();
    let ab = mono(&[1, 1, 0, 0, 0]);
    let cert = linear_bound_certificate(&c5, &ab, 10, 3, &CFG).unwrap();
    ensure!(cert.d == 1, "d = {}", cert.d);
    ensure!(
        cert.cutoff.is_none() && !cert.checks.is_empty(),
        "no computed powers"
    );
    for c in &cert.checks {
        ensure!(
            c.bound == 2 * c.n as u64 + 1 && c.v == c.bound,
            "n = {}: v {} bound {}",
            c.n,
            c.v,
            c.bound
        );
    }
    Ok(format!(
        "n0 = {}, d = 1, equality for n = {}..={}",
        cert.n0,
        cert.checks[0].n,
        cert.checks.last().unwrap().n
    ))
}

fn colon_decomposition() -> Outcome {
    let mut checked = 0;
    for i in m_primary_corpus(0xAB, 10)
        .iter()
        .chain(&general_corpus(0xAC, 10))
    {
        for n in 1..=2 {
            let r = v_colon_decomposition(i, n, &CFG).unwrap();
            ensure!(
                r.holds(),
                "{i} power {n}: {:?}",
                r.checks.iter().find(|c| !c.holds)
            );
            checked += r.checks.len();
        }
    }
    Ok(format!("20 ideals and squares, {checked} proper divisors"))
}

fn v_le_reg() -> Outcome {
    let mut ideals = m_primary_corpus(0xA6, 200);
    ideals.extend(two_variable_corpus(0xA7, 100));
    for i in &ideals {
        let r = check_v_le_reg(i, &CFG).unwrap();
        ensure!(r.holds, "{i}: {r:?}");
    }
    let mut families = 0;
    for (a, u) in [
        (vec![6u64, 7], 1u64),
        (vec![6, 7], 2),
        (vec![6, 7, 3], 1),
        (vec![6, 7, 3], 2),
    ] {
        let sum: u64 = a.iter().sum();
        let t = a.len() as u64;
        for n in 1..=3 {
            let r = reg_gap_family(&a, u, n, &CFG).unwrap();
            ensure!(
                r.gap == n && r.v == sum - (u + n + t) && r.reg == sum - (u + t),
                "a = {a:?}, u = {u}, n = {n}: {r:?}"
            );
            families += 1;
        }
    }
    Ok(format!(
        "{} corpus ideals; {families} gap-family members",
        ideals.len()
    ))
}

/// Checks each returned witness, every monomial below its degree, and random
/// monomials at or above it that are not witnesses.
fn oracle_soundness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xAD);
    let mut ideals = m_primary_corpus(0xAE, 40);
    ideals.extend(general_corpus(0xAF, 40));
    ideals.extend(
        graph_corpus(0xB0, 5)
            .iter()
            .map(|g| g.edge_ideal().unwrap()),
    );
    let mut sampled = 0;
    for i in &ideals {
        let w = v_oracle(i, &CFG).unwrap();
        let colon = i.colon(&w.witness).unwrap();
        ensure!(
            colon == w.prime.to_ideal(),
            "{i}: colon by {} is {colon}",
            w.witness
        );
        let caps = GridBound::of(i).caps().to_vec();
        for e in ExponentBox::new(caps.clone()) {
            let m = Monomial::new(e).unwrap();
            if m.degree() < w.value {
                ensure!(
                    colon_is_prime(i, &m).unwrap().is_none(),
                    "{i}: {m} below degree {}",
                    w.value
                );
            }
        }
        let all = v_oracle_all(i, &CFG).unwrap();
        let mut drawn = 0;
        let mut attempts = 0;
        while drawn < 50 && attempts < 5000 {
            attempts += 1;
            let m = Monomial::new(caps.iter().map(|&c| rng.gen_range(0..=c)).collect()).unwrap();
            if all.iter().any(|x| x.witness == m) {
                continue;
            }
            drawn += 1;
            let prime = colon_is_prime(i, &m).unwrap();
            let brute = brute_colon_prime(i, &m);
            ensure!(
                prime.as_ref().map(|p| p.support().clone()) == brute,
                "{i}: {m} fast {prime:?} vs brute {brute:?}"
            );
            if m.degree() == w.value {
                ensure!(prime.is_none(), "{i}: {m} is an unlisted witness");
            }
        }
        sampled += drawn;
    }
    Ok(format!(
        "{} ideals, {sampled} non-witness samples",
        ideals.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("path table", path_table),
        ("cycle recurrence", cycle_recurrence),
        ("non-additivity", non_additivity),
        ("clique sums", clique_sums),
        ("join", joins),
        ("m-primary matrix formula", matrix_formula),
        ("two-variable closed form", two_variable),
        ("bounds", bounds),
        ("powers", powers),
        ("linear-bound certificate", certificate),
        ("colon decomposition", colon_decomposition),
        ("v <= reg and gap family", v_le_reg),
        ("oracle soundness", oracle_soundness),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name} ({detail}; {secs:.2}s)", k + 1),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] criterion {}: {name} ({detail}; {secs:.2}s)", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
