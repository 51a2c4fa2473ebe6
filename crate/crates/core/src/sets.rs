//! Set representation and the membership predicates for every family in the crate.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
pub type Count = BigUint;

/// A nonempty finite set of positive integers, stored as a strictly
/// increasing sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSet {
    elements: Vec<u64>,
}

impl FiniteSet {
    /// Builds a set from strictly increasing positive elements.
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidSet("set must be nonempty".into()));
        }
        if elements[0] == 0 {
            return Err(Error::InvalidSet("elements must be positive".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSet(format!(
                "elements must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(Self { elements })
    }

    /// Sorts and deduplicates arbitrary input before validating it.
    pub fn from_unsorted<I: IntoIterator<Item = u64>>(items: I) -> Result<Self> {
        let mut elements: Vec<u64> = items.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Self::new(elements)
    }

    /// The interval `{start, ..., end}`.
    pub fn interval(start: u64, end: u64) -> Result<Self> {
        if start == 0 || end < start {
            return Err(Error::InvalidSet(format!("bad interval [{start}, {end}]")));
        }
        Ok(Self {
            elements: (start..=end).collect(),
        })
    }

    pub fn smallest(&self) -> u64 {
        self.elements[0]
    }

    pub fn largest(&self) -> u64 {
        self.elements[self.elements.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept so `len` has its customary partner.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn into_elements(self) -> Vec<u64> {
        self.elements
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// The parameter pair `(p, q)` of the condition `q·min F ≥ p·|F|`.
///
/// Ratios are never reduced: `(2, 4)` and `(1, 2)` are distinct values that
/// describe the same family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ratio {
    p: u64,
    q: u64,
}

impl Ratio {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidRatio { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn q(self) -> u64 {
        self.q
    }

    /// `(k·p, k·q)`.
    pub fn scaled(self, k: u64) -> Result<Self> {
        Self::new(self.p * k, self.q * k)
    }

    /// Whether a set with smallest element `min` and `len` elements satisfies
    /// `q·min ≥ p·len`.
    pub fn admits(self, min: u64, len: u64) -> bool {
        u128::from(self.q) * u128::from(min) >= u128::from(self.p) * u128::from(len)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

pub fn is_generalized_schreier(set: &FiniteSet, ratio: Ratio) -> bool {
    ratio.admits(set.smallest(), set.len() as u64)
}

/// Membership in `S^{p/q}_n`: generalized Schreier with `max F = n`.
pub fn is_in_spq_family(set: &FiniteSet, ratio: Ratio, n: u64) -> bool {
    set.largest() == n && is_generalized_schreier(set, ratio)
}

/// True iff the set is a run of consecutive integers.
pub fn is_interval(set: &FiniteSet) -> bool {
    set.elements.windows(2).all(|w| w[1] == w[0] + 1)
}
