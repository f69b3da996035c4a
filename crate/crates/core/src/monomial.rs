//! Exact monomial and monomial-ideal arithmetic.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set, sorted
//! lexicographically by exponent vector, so two ideals are equal exactly when
//! their generator lists are equal.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xt^et`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::ZeroAmbient);
        }
        Ok(Monomial { exponents })
    }

    pub fn one(ambient: usize) -> Result<Self> {
        Monomial::new(vec![0; ambient])
    }

    /// The variable `x_index` (1-based).
    pub fn var(ambient: usize, index: usize) -> Result<Self> {
        Monomial::pure_power(ambient, index, 1)
    }

    pub fn pure_power(ambient: usize, index: usize, exponent: u64) -> Result<Self> {
        if index == 0 || index > ambient {
            return Err(Error::InvalidParameter(format!(
                "variable index {index} outside 1..={ambient}"
            )));
        }
        let mut exponents = vec![0; ambient];
        exponents[index - 1] = exponent;
        Monomial::new(exponents)
    }

    pub fn ambient(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> u64 {
        self.exponents[index - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// 1-based indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch {
                expected: self.ambient(),
                found: other.ambient(),
            });
        }
        Ok(())
    }

    /// True iff `self` divides `other`. Both must share an ambient.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exponents })
    }

    pub fn pow(&self, n: u64) -> Result<Monomial> {
        let exponents = self
            .exponents
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exponents })
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        })
    }

    /// `self / gcd(self, f)`: each exponent becomes `max(self_i - f_i, 0)`.
    pub fn quotient_by_gcd(&self, f: &Monomial) -> Result<Monomial> {
        self.check_ambient(f)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&f.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        })
    }

    /// Exact quotient `self / divisor`; `None` if `divisor` does not divide.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if self.ambient() != divisor.ambient() || !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&divisor.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Componentwise `min(self_i, caps_i)`.
    pub fn capped(&self, caps: &[u64]) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(caps)
                .map(|(a, c)| *a.min(c))
                .collect(),
        }
    }

    /// Every divisor of `self`, including `1` and `self`, in lex order.
    pub fn divisors(&self) -> Vec<Monomial> {
        ExponentBox::new(self.exponents.clone())
            .map(|exponents| Monomial { exponents })
            .collect()
    }

    /// Renders with the given variable names (one per ambient variable).
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut factors = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], e)),
            }
        }
        factors.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.ambient())))
    }
}

/// `x1, ..., xt`.
pub fn default_names(ambient: usize) -> Vec<String> {
    (1..=ambient).map(|i| format!("x{i}")).collect()
}

/// Odometer over all exponent vectors in `prod [0, caps_i]`, lex order.
#[derive(Debug, Clone)]
pub struct ExponentBox {
    caps: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl ExponentBox {
    pub fn new(caps: Vec<u64>) -> Self {
        let next = Some(vec![0; caps.len()]);
        ExponentBox { caps, next }
    }

    /// Number of points in the box, saturating at `u128::MAX`.
    pub fn size(caps: &[u64]) -> u128 {
        caps.iter()
            .fold(1u128, |acc, &c| acc.saturating_mul(c as u128 + 1))
    }
}

impl Iterator for ExponentBox {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.caps[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The unit ideal only ever arises as a colon result; it is stored as the
/// single generator `1` with `is_unit` set.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<Monomial>,
    unit: bool,
}

/// Keeps the elements of `gens` not properly divisible by another element,
/// deduplicated and lex sorted.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reduced to its minimal generators.
    ///
    /// Rejects the empty set, mixed ambients and the constant `1`.
    pub fn minimalize<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let ideal = Self::from_generators_allow_unit(gens)?;
        if ideal.unit {
            return Err(Error::UnitIdeal);
        }
        Ok(ideal)
    }

    pub fn from_exponents(rows: Vec<Vec<u64>>) -> Result<Self> {
        Self::minimalize(
            rows.into_iter()
                .map(Monomial::new)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn unit(ambient: usize) -> Result<Self> {
        Ok(MonomialIdeal {
            ambient,
            generators: vec![Monomial::one(ambient)?],
            unit: true,
        })
    }

    fn from_generators_allow_unit<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let ambient = gens.first().ok_or(Error::ZeroIdeal)?.ambient();
        if let Some(bad) = gens.iter().find(|g| g.ambient() != ambient) {
            return Err(Error::AmbientMismatch {
                expected: ambient,
                found: bad.ambient(),
            });
        }
        if gens.iter().any(Monomial::is_one) {
            return Self::unit(ambient);
        }
        Ok(MonomialIdeal {
            ambient,
            generators: minimal_antichain(gens),
            unit: false,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The minimal generators, lex sorted.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    fn require_proper(&self) -> Result<()> {
        if self.unit {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_ambient(&self, ambient: usize) -> Result<()> {
        if self.ambient != ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                found: ambient,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_ambient(m.ambient())?;
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.divides(g))))
    }

    /// `(I : f)`, generated by `u / gcd(u, f)` over the minimal generators.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(f.ambient())?;
        let quotients = self
            .generators
            .iter()
            .map(|u| u.quotient_by_gcd(f))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators_allow_unit(quotients)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.ambient)?;
        Self::from_generators_allow_unit(self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.ambient)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for u in &self.generators {
            for v in &other.generators {
                gens.push(u.mul(v)?);
            }
        }
        Self::from_generators_allow_unit(gens)
    }

    /// `I^n` for `n >= 1`, minimalized after every multiplication.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::UnitIdeal);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Minimum generator degree.
    pub fn alpha(&self) -> Result<u64> {
        self.require_proper()?;
        Ok(self
            .generators
            .iter()
            .map(Monomial::degree)
            .min()
            .unwrap_or(0))
    }

    /// Maximum exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u64> {
        let mut caps = vec![0; self.ambient];
        for g in &self.generators {
            for (c, &e) in caps.iter_mut().zip(g.exponents()) {
                *c = (*c).max(e);
            }
        }
        caps
    }

    /// Exponents `a_i` of the pure powers `x_i^{a_i}` among the generators,
    /// if every variable has one (i.e. the ideal is m-primary).
    pub fn pure_power_exponents(&self) -> Option<Vec<u64>> {
        if self.unit {
            return None;
        }
        let mut found = vec![None; self.ambient];
        for g in &self.generators {
            if let [i] = g.support()[..] {
                found[i - 1] = Some(g.exponent(i));
            }
        }
        found.into_iter().collect()
    }

    pub fn is_m_primary(&self) -> bool {
        self.pure_power_exponents().is_some()
    }

    /// True iff every minimal generator is a pure power of one variable.
    pub fn is_generated_by_pure_powers(&self) -> bool {
        !self.unit && self.generators.iter().all(|g| g.support().len() == 1)
    }

    /// Monomials outside `I`, which span `S/I`. Only finite for m-primary ideals.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let caps = self.standard_box()?;
        Ok(ExponentBox::new(caps)
            .map(|exponents| Monomial { exponents })
            .filter(|m| !self.generators.iter().any(|g| g.divides(m)))
            .collect())
    }

    /// Largest degree of a standard monomial, i.e. reg(S/I) when `I` is m-primary.
    pub fn regularity_zero_dim(&self) -> Result<u64> {
        self.standard_monomials()?
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or_else(|| Error::Internal("m-primary ideal without standard monomials".into()))
    }

    fn standard_box(&self) -> Result<Vec<u64>> {
        let exps = self
            .pure_power_exponents()
            .ok_or(Error::StandardMonomialsInfinite)?;
        Ok(exps.into_iter().map(|a| a - 1).collect())
    }

    pub fn render(&self, names: &[String]) -> String {
        self.generators
            .iter()
            .map(|g| g.render(names))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.render(&default_names(self.ambient)))
    }
}

/// The prime `<x_i : i in support>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct MonomialPrime {
    ambient: usize,
    support: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new<I: IntoIterator<Item = usize>>(ambient: usize, support: I) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::ZeroAmbient);
        }
        let support: BTreeSet<usize> = support.into_iter().collect();
        if support.is_empty() {
            return Err(Error::InvalidParameter(
                "prime support must be non-empty".into(),
            ));
        }
        if let Some(&bad) = support.iter().find(|&&i| i == 0 || i > ambient) {
            return Err(Error::InvalidParameter(format!(
                "variable index {bad} outside 1..={ambient}"
            )));
        }
        Ok(MonomialPrime { ambient, support })
    }

    /// The homogeneous maximal ideal.
    pub fn maximal(ambient: usize) -> Result<Self> {
        MonomialPrime::new(ambient, 1..=ambient)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn is_maximal(&self) -> bool {
        self.support.len() == self.ambient
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal {
            ambient: self.ambient,
            generators: minimal_antichain(
                self.support
                    .iter()
                    .map(|&i| Monomial::var(self.ambient, i).expect("index validated"))
                    .collect(),
            ),
            unit: false,
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        let vars: Vec<&str> = self
            .support
            .iter()
            .map(|&i| names[i - 1].as_str())
            .collect();
        format!("<{}>", vars.join(", "))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.ambient)))
    }
}
