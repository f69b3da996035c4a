//! v-numbers, localized v-numbers and associated primes of monomial ideals.
//!
//! The definitional route searches the finite grid `prod [0, caps_i]` where
//! `caps_i` is the largest exponent of `x_i` among the generators: capping a
//! monomial at these bounds never changes its colon, so every minimum-degree
//! witness lives in the grid. The m-primary route instead minimizes the trace
//! over admissible generator matrices.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{ExponentBox, Monomial, MonomialIdeal, MonomialPrime};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of grid points (or subsets, or matrix rows) visited.
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// A v-number with its certificate: `(I : witness) = prime` and
/// `deg(witness) = value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VWitness {
    pub value: u64,
    pub witness: Monomial,
    pub prime: MonomialPrime,
}

impl VWitness {
    /// Re-checks the certificate against `ideal`.
    pub fn is_valid_for(&self, ideal: &MonomialIdeal) -> bool {
        self.witness.degree() == self.value
            && matches!(ideal.colon(&self.witness), Ok(j) if j == self.prime.to_ideal())
    }
}

/// Search-space truncation for the definitional oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBound {
    caps: Vec<u64>,
}

impl GridBound {
    pub fn of(ideal: &MonomialIdeal) -> Self {
        GridBound {
            caps: ideal.max_exponents(),
        }
    }

    pub fn caps(&self) -> &[u64] {
        &self.caps
    }

    pub fn size(&self) -> u128 {
        ExponentBox::size(&self.caps)
    }

    pub fn max_degree(&self) -> u64 {
        self.caps.iter().sum()
    }

    pub fn cap(&self, f: &Monomial) -> Monomial {
        f.capped(&self.caps)
    }

    pub fn check(&self, config: &SearchConfig) -> Result<()> {
        let required = self.size();
        if required > config.budget as u128 {
            return Err(Error::BudgetExceeded {
                budget: config.budget,
                required,
            });
        }
        Ok(())
    }

    /// Visits every grid point of total degree `degree` in ascending lex order.
    pub fn for_each_of_degree<F>(&self, degree: u64, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[u64]) -> ControlFlow<()>,
    {
        // suffix_cap[i] = sum of caps[i..]
        let mut suffix_cap = vec![0u64; self.caps.len() + 1];
        for i in (0..self.caps.len()).rev() {
            suffix_cap[i] = suffix_cap[i + 1] + self.caps[i];
        }
        if degree > suffix_cap[0] {
            return ControlFlow::Continue(());
        }
        let mut current = vec![0u64; self.caps.len()];
        fill(&self.caps, &suffix_cap, 0, degree, &mut current, &mut visit)
    }

    /// Visits the grid in order of total degree, then lex.
    pub fn for_each_graded<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[u64]) -> ControlFlow<()>,
    {
        for d in 0..=self.max_degree() {
            self.for_each_of_degree(d, &mut visit)?;
        }
        ControlFlow::Continue(())
    }
}

fn fill<F>(
    caps: &[u64],
    suffix_cap: &[u64],
    pos: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    if pos == caps.len() {
        return if remaining == 0 {
            visit(current)
        } else {
            ControlFlow::Continue(())
        };
    }
    let lo = remaining.saturating_sub(suffix_cap[pos + 1]);
    let hi = remaining.min(caps[pos]);
    for e in lo..=hi {
        current[pos] = e;
        fill(caps, suffix_cap, pos + 1, remaining - e, current, visit)?;
    }
    current[pos] = 0;
    ControlFlow::Continue(())
}

/// Prime test on raw exponents, without building the colon ideal.
///
/// The colon is `<x_i : i in Z>` exactly when no quotient is `1` and every
/// quotient of degree > 1 is divisible by a linear quotient `x_i`.
fn colon_prime_exponents(ideal: &MonomialIdeal, f: &[u64]) -> Option<BTreeSet<usize>> {
    let t = ideal.ambient();
    let mut linear = vec![false; t];
    let mut higher: Vec<Vec<usize>> = Vec::new();
    for u in ideal.generators() {
        let mut degree = 0u64;
        let mut support = Vec::new();
        for (i, (&a, &b)) in u.exponents().iter().zip(f).enumerate() {
            let q = a.saturating_sub(b);
            if q > 0 {
                degree += q;
                support.push(i);
            }
        }
        match degree {
            0 => return None,
            1 => linear[support[0]] = true,
            _ => higher.push(support),
        }
    }
    if higher
        .iter()
        .any(|support| !support.iter().any(|&i| linear[i]))
    {
        return None;
    }
    let support: BTreeSet<usize> = (0..t).filter(|&i| linear[i]).map(|i| i + 1).collect();
    if support.is_empty() {
        None
    } else {
        Some(support)
    }
}

/// `Some(P)` iff `(I : f)` is the monomial prime `P`.
pub fn colon_is_prime(ideal: &MonomialIdeal, f: &Monomial) -> Result<Option<MonomialPrime>> {
    if ideal.ambient() != f.ambient() {
        return Err(Error::AmbientMismatch {
            expected: ideal.ambient(),
            found: f.ambient(),
        });
    }
    if ideal.is_unit() {
        return Ok(None);
    }
    colon_prime_exponents(ideal, f.exponents())
        .map(|support| MonomialPrime::new(ideal.ambient(), support))
        .transpose()
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

fn grid_for(ideal: &MonomialIdeal, config: &SearchConfig) -> Result<GridBound> {
    require_proper(ideal)?;
    let grid = GridBound::of(ideal);
    grid.check(config)?;
    Ok(grid)
}

fn witness(ideal: &MonomialIdeal, exps: &[u64], support: BTreeSet<usize>) -> Result<VWitness> {
    let witness = Monomial::new(exps.to_vec())?;
    Ok(VWitness {
        value: witness.degree(),
        witness,
        prime: MonomialPrime::new(ideal.ambient(), support)?,
    })
}

/// All primes `P = (I : f)` for monomials `f`.
pub fn associated_primes(
    ideal: &MonomialIdeal,
    config: &SearchConfig,
) -> Result<BTreeSet<MonomialPrime>> {
    let grid = grid_for(ideal, config)?;
    let mut supports = BTreeSet::new();
    for exps in ExponentBox::new(grid.caps().to_vec()) {
        if let Some(support) = colon_prime_exponents(ideal, &exps) {
            supports.insert(support);
        }
    }
    supports
        .into_iter()
        .map(|s| MonomialPrime::new(ideal.ambient(), s))
        .collect()
}

/// Minimum-degree search, optionally restricted to one prime. Returns every
/// witness of the minimum degree when `all` is set, otherwise the first.
fn graded_search(
    ideal: &MonomialIdeal,
    target: Option<&BTreeSet<usize>>,
    all: bool,
    config: &SearchConfig,
) -> Result<Vec<VWitness>> {
    let grid = grid_for(ideal, config)?;
    let mut found: Vec<(Vec<u64>, BTreeSet<usize>)> = Vec::new();
    for d in 0..=grid.max_degree() {
        let _ = grid.for_each_of_degree(d, |exps| match colon_prime_exponents(ideal, exps) {
            Some(s) if target.is_none_or(|t| *t == s) => {
                found.push((exps.to_vec(), s));
                if all {
                    ControlFlow::Continue(())
                } else {
                    ControlFlow::Break(())
                }
            }
            _ => ControlFlow::Continue(()),
        });
        if !found.is_empty() {
            break;
        }
    }
    found
        .into_iter()
        .map(|(exps, s)| witness(ideal, &exps, s))
        .collect()
}

/// `v(I)` by exhaustive graded search; the witness is the lex-smallest
/// exponent vector of minimum degree.
pub fn v_oracle(ideal: &MonomialIdeal, config: &SearchConfig) -> Result<VWitness> {
    graded_search(ideal, None, false, config)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("proper monomial ideal without associated prime".into()))
}

/// Every minimum-degree witness of `v(I)`, in lex order.
pub fn v_oracle_all(ideal: &MonomialIdeal, config: &SearchConfig) -> Result<Vec<VWitness>> {
    let all = graded_search(ideal, None, true, config)?;
    if all.is_empty() {
        return Err(Error::Internal(
            "proper monomial ideal without associated prime".into(),
        ));
    }
    Ok(all)
}

/// `v_P(I)`: minimum degree of `f` with `(I : f) = P`.
pub fn v_at_prime(
    ideal: &MonomialIdeal,
    prime: &MonomialPrime,
    config: &SearchConfig,
) -> Result<VWitness> {
    if prime.ambient() != ideal.ambient() {
        return Err(Error::AmbientMismatch {
            expected: ideal.ambient(),
            found: prime.ambient(),
        });
    }
    graded_search(ideal, Some(prime.support()), false, config)?
        .into_iter()
        .next()
        .ok_or(Error::PrimeNotAssociated)
}

/// `t` generators of an m-primary ideal viewed as the rows of a `t x t` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixCandidate {
    pub rows: Vec<Monomial>,
}

impl MatrixCandidate {
    pub fn trace(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.exponents()[i])
            .sum()
    }

    /// Column `i` is strictly dominated by its diagonal entry.
    pub fn is_diagonally_dominant(&self) -> bool {
        let t = self.rows.len();
        (0..t).all(|i| {
            let diag = self.rows[i].exponents()[i];
            (0..t).all(|l| l == i || self.rows[l].exponents()[i] < diag)
        })
    }

    /// The monomial `(a_11 - 1, ..., a_tt - 1)`.
    pub fn socle_monomial(&self) -> Option<Monomial> {
        let exps = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.exponents()[i].checked_sub(1))
            .collect::<Option<Vec<_>>>()?;
        Monomial::new(exps).ok()
    }

    pub fn is_admissible(&self, ideal: &MonomialIdeal) -> bool {
        self.rows.len() == ideal.ambient()
            && self.is_diagonally_dominant()
            && self
                .socle_monomial()
                .is_some_and(|m| !ideal.contains(&m).unwrap_or(true))
    }
}

/// Result of the matrix route: the optimal candidate and generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixSolution {
    pub witness: VWitness,
    pub candidate: MatrixCandidate,
    /// Positions of the chosen rows in `ideal.generators()`.
    pub row_indices: Vec<usize>,
}

/// Minimum trace over admissible candidates, with the lex-smallest
/// row-index selection among ties.
pub fn min_matrix_candidate(
    ideal: &MonomialIdeal,
    config: &SearchConfig,
) -> Result<MatrixSolution> {
    require_proper(ideal)?;
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let gens: Vec<&[u64]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    let t = ideal.ambient();
    let mut search = MatrixSearch {
        ideal,
        gens: &gens,
        t,
        chosen: Vec::with_capacity(t),
        best: None,
        visited: 0,
        budget: config.budget,
    };
    search.descend(0)?;
    let (trace, row_indices) = search.best.ok_or_else(|| {
        Error::Internal("no admissible generator matrix for an m-primary ideal".into())
    })?;
    let candidate = MatrixCandidate {
        rows: row_indices
            .iter()
            .map(|&k| ideal.generators()[k].clone())
            .collect(),
    };
    let witness = candidate
        .socle_monomial()
        .ok_or_else(|| Error::Internal("zero diagonal entry".into()))?;
    debug_assert_eq!(witness.degree() + t as u64, trace);
    Ok(MatrixSolution {
        witness: VWitness {
            value: witness.degree(),
            witness,
            prime: MonomialPrime::maximal(t)?,
        },
        candidate,
        row_indices,
    })
}

struct MatrixSearch<'a> {
    ideal: &'a MonomialIdeal,
    gens: &'a [&'a [u64]],
    t: usize,
    chosen: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
    visited: u64,
    budget: u64,
}

impl MatrixSearch<'_> {
    fn partial_trace(&self) -> u64 {
        self.chosen
            .iter()
            .enumerate()
            .map(|(i, &k)| self.gens[k][i])
            .sum()
    }

    fn descend(&mut self, row: usize) -> Result<()> {
        if row == self.t {
            let socle: Vec<u64> = (0..self.t)
                .map(|i| self.gens[self.chosen[i]][i] - 1)
                .collect();
            if !self.ideal.contains(&Monomial::new(socle)?)? {
                let trace = self.partial_trace();
                if self.best.as_ref().is_none_or(|(b, _)| trace < *b) {
                    self.best = Some((trace, self.chosen.clone()));
                }
            }
            return Ok(());
        }
        for k in 0..self.gens.len() {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                    required: self.visited as u128,
                });
            }
            let g = self.gens[k];
            let fits = self.chosen.iter().enumerate().all(|(l, &h)| {
                let h = self.gens[h];
                g[row] > h[row] && h[l] > g[l]
            });
            if !fits || g[row] == 0 {
                continue;
            }
            // every remaining diagonal entry is at least 1
            let lower = self.partial_trace() + g[row] + (self.t - row - 1) as u64;
            if self.best.as_ref().is_some_and(|(b, _)| lower >= *b) {
                continue;
            }
            self.chosen.push(k);
            self.descend(row + 1)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

/// `v(I)` for m-primary `I` as `min { tr(A) - t }` over admissible matrices.
pub fn v_primary_matrix(ideal: &MonomialIdeal, config: &SearchConfig) -> Result<VWitness> {
    Ok(min_matrix_candidate(ideal, config)?.witness)
}

/// Closed form in two variables: with generators `(a_0, 0) > (a_1, b_1) > ...
/// > (0, b_n)` in lex order, `v = min (a_i + b_{i+1} - 2)`.
pub fn v_two_vars(ideal: &MonomialIdeal) -> Result<u64> {
    require_proper(ideal)?;
    if ideal.ambient() != 2 {
        return Err(Error::InvalidParameter(format!(
            "two-variable formula needs 2 variables, got {}",
            ideal.ambient()
        )));
    }
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    // lex ascending is (0, b_n) < ... < (a_0, 0); walk it backwards
    let gens: Vec<&[u64]> = ideal
        .generators()
        .iter()
        .rev()
        .map(|g| g.exponents())
        .collect();
    gens.windows(2)
        .map(|w| w[0][0] + w[1][1] - 2)
        .min()
        .ok_or_else(|| Error::Internal("m-primary ideal in 2 variables with one generator".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VBounds {
    /// `alpha(I) - 1`, valid for every localized v-number.
    pub lower: u64,
    /// `sum a_i - t` for m-primary ideals.
    pub upper: Option<u64>,
}

pub fn v_bounds(ideal: &MonomialIdeal) -> Result<VBounds> {
    let alpha = ideal.alpha()?;
    let upper = ideal
        .pure_power_exponents()
        .map(|a| a.iter().sum::<u64>() - a.len() as u64);
    Ok(VBounds {
        lower: alpha - 1,
        upper,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorCheck {
    pub divisor: Monomial,
    pub colon_v: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColonDecomposition {
    pub power: u32,
    pub v: VWitness,
    pub checks: Vec<DivisorCheck>,
}

impl ColonDecomposition {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// For the witness `X^a` of `v(I^n)`, checks
/// `v(I^n : X^G) + deg X^G = v(I^n)` for every proper divisor `X^G`.
pub fn v_colon_decomposition(
    ideal: &MonomialIdeal,
    n: u32,
    config: &SearchConfig,
) -> Result<ColonDecomposition> {
    let power = ideal.power(n)?;
    let v = v_oracle(&power, config)?;
    let mut checks = Vec::new();
    for divisor in v.witness.divisors() {
        if divisor == v.witness {
            continue;
        }
        let colon = power.colon(&divisor)?;
        let colon_v = v_oracle(&colon, config)?.value;
        checks.push(DivisorCheck {
            holds: colon_v + divisor.degree() == v.value,
            divisor,
            colon_v,
        });
    }
    Ok(ColonDecomposition {
        power: n,
        v,
        checks,
    })
}

pub fn v_colon_decomposition_check(
    ideal: &MonomialIdeal,
    n: u32,
    config: &SearchConfig,
) -> Result<bool> {
    Ok(v_colon_decomposition(ideal, n, config)?.holds())
}
