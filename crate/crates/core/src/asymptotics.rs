//! v-numbers of powers `I^n`, the linear upper bound, and the equality classes.
//!
//! Statements about all large `n` are only checked on the computed window;
//! every report records exactly which `n` were computed.

use serde::Serialize;

use crate::engine::{v_oracle, v_primary_matrix, SearchConfig, VWitness};
use crate::error::{Error, Result};
use crate::graph::{v_graph, Graph};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerEntry {
    pub n: u32,
    pub alpha: u64,
    pub v: VWitness,
}

/// Where a power sequence stopped because the search budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cutoff {
    pub n: u32,
    pub budget: u64,
    pub required: u128,
}

fn cutoff_from(n: u32, err: Error) -> Result<Cutoff> {
    match err {
        Error::BudgetExceeded { budget, required } => Ok(Cutoff {
            n,
            budget,
            required,
        }),
        other => Err(other),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerSequence {
    pub ideal: MonomialIdeal,
    pub alpha: u64,
    /// `values[k]` is `I^(k+1)`.
    pub values: Vec<PowerEntry>,
    pub cutoff: Option<Cutoff>,
}

impl PowerSequence {
    /// `v(I^n)`, if computed.
    pub fn v(&self, n: u32) -> Option<u64> {
        self.values.iter().find(|e| e.n == n).map(|e| e.v.value)
    }
}

/// Exact `v(I^n)` for `n = 1..=max_n`; stops early with a cutoff marker when
/// a power no longer fits the budget.
pub fn power_sequence(
    ideal: &MonomialIdeal,
    max_n: u32,
    config: &SearchConfig,
) -> Result<PowerSequence> {
    if max_n == 0 {
        return Err(Error::InvalidParameter("max_n must be at least 1".into()));
    }
    let alpha = ideal.alpha()?;
    let mut values = Vec::new();
    let mut cutoff = None;
    let mut power = ideal.clone();
    for n in 1..=max_n {
        if n > 1 {
            power = power.product(ideal)?;
        }
        match v_oracle(&power, config) {
            Ok(v) => values.push(PowerEntry {
                n,
                alpha: power.alpha()?,
                v,
            }),
            Err(e) => {
                cutoff = Some(cutoff_from(n, e)?);
                break;
            }
        }
    }
    Ok(PowerSequence {
        ideal: ideal.clone(),
        alpha,
        values,
        cutoff,
    })
}

/// The lex-smallest generator of minimum degree.
pub fn default_min_degree_generator(ideal: &MonomialIdeal) -> Result<Monomial> {
    let alpha = ideal.alpha()?;
    ideal
        .generators()
        .iter()
        .find(|g| g.degree() == alpha)
        .cloned()
        .ok_or_else(|| Error::Internal("no generator of degree alpha".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub n: u32,
    /// `v(I^(n+1))`.
    pub v: u64,
    pub bound: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearBoundCertificate {
    pub f: Monomial,
    pub alpha: u64,
    pub n0: u32,
    pub d: u64,
    /// `(I^(n0+1) : f^n0)`, the stable member of the colon chain.
    pub stable_colon: MonomialIdeal,
    pub checks: Vec<BoundCheck>,
    pub cutoff: Option<Cutoff>,
}

impl LinearBoundCertificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Follows `J_n = (I^(n+1) : f^n)` until `J_(n+1) = J_n`, then checks
/// `v(I^(n+1)) <= n alpha(I) + v(J_n0)` for `n0 <= n <= check_up_to`.
///
/// `f` must be an element of `I` of degree `alpha(I)`.
pub fn linear_bound_certificate(
    ideal: &MonomialIdeal,
    f: &Monomial,
    horizon: u32,
    check_up_to: u32,
    config: &SearchConfig,
) -> Result<LinearBoundCertificate> {
    let alpha = ideal.alpha()?;
    if !ideal.contains(f)? || f.degree() != alpha {
        return Err(Error::InvalidParameter(format!(
            "{f} is not an element of degree alpha(I) = {alpha} in I"
        )));
    }
    let mut power = ideal.power(2)?;
    let mut f_pow = f.clone();
    let mut previous = power.colon(&f_pow)?;
    let mut n0 = None;
    for n in 1..horizon {
        power = power.product(ideal)?;
        f_pow = f_pow.mul(f)?;
        let next = power.colon(&f_pow)?;
        if next == previous {
            n0 = Some(n);
            break;
        }
        previous = next;
    }
    let n0 = n0.ok_or(Error::NoStabilization {
        horizon: horizon as usize,
    })?;
    let d = v_oracle(&previous, config)?.value;

    let mut checks = Vec::new();
    let mut cutoff = None;
    let mut power = ideal.power(n0 + 1)?;
    for n in n0..=check_up_to.max(n0) {
        if n > n0 {
            power = power.product(ideal)?;
        }
        match v_oracle(&power, config) {
            Ok(w) => {
                let bound = n as u64 * alpha + d;
                checks.push(BoundCheck {
                    n,
                    v: w.value,
                    bound,
                    holds: w.value <= bound,
                });
            }
            Err(e) => {
                cutoff = Some(cutoff_from(n + 1, e)?);
                break;
            }
        }
    }
    Ok(LinearBoundCertificate {
        f: f.clone(),
        alpha,
        n0,
        d,
        stable_colon: previous,
        checks,
        cutoff,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub n: u32,
    /// `v(I^(n+1))`.
    pub v: u64,
    /// `v(I) + n alpha(I)`.
    pub expected: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub v: u64,
    pub alpha: u64,
    pub entries: Vec<ClassEntry>,
}

impl ClassReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

fn linear_class_report(
    ideal: &MonomialIdeal,
    v: u64,
    max_n: u32,
    config: &SearchConfig,
) -> Result<ClassReport> {
    let alpha = ideal.alpha()?;
    let mut entries = Vec::new();
    let mut power = ideal.clone();
    for n in 1..=max_n {
        power = power.product(ideal)?;
        let value = v_oracle(&power, config)?.value;
        let expected = v + n as u64 * alpha;
        entries.push(ClassEntry {
            n,
            v: value,
            expected,
            holds: value == expected,
        });
    }
    Ok(ClassReport { v, alpha, entries })
}

/// For m-primary `I` with `v(I) = alpha(I) - 1`, checks
/// `v(I^(n+1)) = v(I) + n alpha(I)` for `n = 1..=max_n`.
pub fn check_alpha_equality_class(
    ideal: &MonomialIdeal,
    max_n: u32,
    config: &SearchConfig,
) -> Result<ClassReport> {
    if !ideal.is_m_primary() {
        return Err(Error::HypothesisNotMet("ideal is not m-primary".into()));
    }
    let v = v_primary_matrix(ideal, config)?.value;
    let alpha = ideal.alpha()?;
    if v + 1 != alpha {
        return Err(Error::HypothesisNotMet(format!(
            "v(I) = {v} but alpha(I) - 1 = {}",
            alpha - 1
        )));
    }
    linear_class_report(ideal, v, max_n, config)
}

/// For `I` generated by pure powers, checks `v(I^(n+1)) = v(I) + n alpha(I)`.
pub fn check_pure_power_class(
    ideal: &MonomialIdeal,
    max_n: u32,
    config: &SearchConfig,
) -> Result<ClassReport> {
    if !ideal.is_generated_by_pure_powers() {
        return Err(Error::HypothesisNotMet(
            "ideal has a generator that is not a pure power".into(),
        ));
    }
    let v = v_oracle(ideal, config)?.value;
    linear_class_report(ideal, v, max_n, config)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgePowerEntry {
    pub n: u32,
    /// `v(I^(n+1))`.
    pub v: u64,
    /// `2(n+1) - 1`.
    pub lower: u64,
    /// `2n + v(I)`.
    pub upper: u64,
    pub lower_ok: bool,
    pub upper_ok: bool,
    /// `v = 2n + 1`, only asserted when `v(I) = 1`.
    pub exact_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgePowerReport {
    pub v: u64,
    pub entries: Vec<EdgePowerEntry>,
    pub cutoff: Option<Cutoff>,
}

impl EdgePowerReport {
    pub fn holds(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.lower_ok && e.upper_ok && e.exact_ok != Some(false))
    }
}

/// Brackets `2(n+1) - 1 <= v(I(G)^(n+1)) <= 2n + v(I(G))` for `n = 1..=max_n`.
pub fn check_edge_power_bounds(
    graph: &Graph,
    max_n: u32,
    config: &SearchConfig,
) -> Result<EdgePowerReport> {
    let ideal = graph.edge_ideal()?;
    let v = v_graph(graph, config)?.value as u64;
    let mut entries = Vec::new();
    let mut cutoff = None;
    let mut power = ideal.clone();
    for n in 1..=max_n {
        power = power.product(&ideal)?;
        let value = match v_oracle(&power, config) {
            Ok(w) => w.value,
            Err(e) => {
                cutoff = Some(cutoff_from(n + 1, e)?);
                break;
            }
        };
        let lower = 2 * (n as u64 + 1) - 1;
        let upper = 2 * n as u64 + v;
        entries.push(EdgePowerEntry {
            n,
            v: value,
            lower,
            upper,
            lower_ok: lower <= value,
            upper_ok: value <= upper,
            exact_ok: (v == 1).then_some(value == 2 * n as u64 + 1),
        });
    }
    Ok(EdgePowerReport { v, entries, cutoff })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerLowerReport {
    pub s: u32,
    pub base_v: u64,
    /// `v(I^(s+1))`.
    pub power_v: u64,
    /// First `s >= 1` with `(s+1) alpha(I) - 1 >= sum a_i - t`.
    pub threshold_s: u32,
    pub holds: bool,
}

impl PowerLowerReport {
    /// `s` is past the threshold that guarantees the inequality.
    pub fn guaranteed(&self) -> bool {
        self.s >= self.threshold_s
    }
}

/// Checks `v(I^(s+1)) >= v(I)` for m-primary `I`.
pub fn check_power_lower_vs_base(
    ideal: &MonomialIdeal,
    s: u32,
    config: &SearchConfig,
) -> Result<PowerLowerReport> {
    let a = ideal.pure_power_exponents().ok_or(Error::NotMPrimary)?;
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let alpha = ideal.alpha()?;
    let upper = a.iter().sum::<u64>() - a.len() as u64;
    // smallest s with (s+1) alpha >= upper + 1
    let threshold_s = ((upper + 1).div_ceil(alpha)).saturating_sub(1).max(1) as u32;
    let base_v = v_oracle(ideal, config)?.value;
    let power_v = v_oracle(&ideal.power(s + 1)?, config)?.value;
    Ok(PowerLowerReport {
        s,
        base_v,
        power_v,
        threshold_s,
        holds: power_v >= base_v,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegGapReport {
    pub ideal: MonomialIdeal,
    pub v: u64,
    pub reg: u64,
    pub gap: u64,
    /// `sum a_i - (u + n + t)`.
    pub expected_v: u64,
    /// `sum a_i - (u + t)`.
    pub expected_reg: u64,
}

impl RegGapReport {
    pub fn holds(&self) -> bool {
        self.v == self.expected_v && self.reg == self.expected_reg && self.v <= self.reg
    }
}

/// `I = <x_i^(a_i)> + <x1^(a1-u) x2^(a2-(u+n))>`, whose regularity exceeds its
/// v-number by exactly `n`.
pub fn reg_gap_family(a: &[u64], u: u64, n: u64, config: &SearchConfig) -> Result<RegGapReport> {
    let t = a.len();
    if t < 2 {
        return Err(Error::InvalidParameter(
            "need at least two variables".into(),
        ));
    }
    if u == 0 || n == 0 {
        return Err(Error::InvalidParameter("u and n must be positive".into()));
    }
    if a[0] <= u || a[1] <= u + n {
        return Err(Error::InvalidParameter(format!(
            "need a1 - u > 0 and a2 - (u + n) > 0, got a1 = {}, a2 = {}, u = {u}, n = {n}",
            a[0], a[1]
        )));
    }
    let mut gens = (1..=t)
        .map(|i| Monomial::pure_power(t, i, a[i - 1]))
        .collect::<Result<Vec<_>>>()?;
    let mut mixed = vec![0; t];
    mixed[0] = a[0] - u;
    mixed[1] = a[1] - (u + n);
    gens.push(Monomial::new(mixed)?);
    let ideal = MonomialIdeal::minimalize(gens)?;

    let v = v_primary_matrix(&ideal, config)?.value;
    let reg = ideal.regularity_zero_dim()?;
    let total: u64 = a.iter().sum();
    Ok(RegGapReport {
        gap: reg.saturating_sub(v),
        expected_v: total - (u + n + t as u64),
        expected_reg: total - (u + t as u64),
        ideal,
        v,
        reg,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VRegReport {
    pub v: u64,
    pub reg: u64,
    pub holds: bool,
}

/// `v(I) <= reg(S/I)` for m-primary `I`.
pub fn check_v_le_reg(ideal: &MonomialIdeal, config: &SearchConfig) -> Result<VRegReport> {
    let v = v_primary_matrix(ideal, config)?.value;
    let reg = ideal.regularity_zero_dim()?;
    Ok(VRegReport {
        v,
        reg,
        holds: v <= reg,
    })
}
