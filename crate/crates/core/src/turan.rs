//! Turán graph edge counts and interval-Schreier counts.
//!
//! `Sr(n, p)` counts intervals `F ⊆ {1..n}` with `p·min F ≥ |F|`; it equals
//! the number of edges of `T(n+1, p+1)` whenever `n ≥ p`. This module
//! computes both sides more than one way and compares them.

use num_integer::Integer;
use num_traits::Zero;

use crate::counting::binomial;
use crate::enumeration::count_interval_bruteforce;
use crate::error::{Error, Result};
use crate::sets::Count;

/// A balanced partition of `n` vertices into `p` parts.
///
/// Vertices `1..=n` are assigned to parts in contiguous blocks, larger parts
/// first. When `p > n` the trailing parts are empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranSpec {
    pub n: u64,
    pub p: u64,
    /// `n - p·⌊n/p⌋`: the number of parts of size `⌈n/p⌉`.
    pub residue: u64,
    pub part_sizes: Vec<u64>,
}

impl TuranSpec {
    pub fn new(n: u64, p: u64) -> Result<Self> {
        if n == 0 || p == 0 {
            return Err(Error::Precondition(format!(
                "Turán graph needs n ≥ 1 and p ≥ 1 (got n = {n}, p = {p})"
            )));
        }
        let (base, residue) = n.div_rem(&p);
        let part_sizes = (0..p)
            .map(|i| if i < residue { base + 1 } else { base })
            .collect();
        Ok(Self {
            n,
            p,
            residue,
            part_sizes,
        })
    }

    /// Index of the part containing vertex `v` (1-based vertex, 0-based part).
    pub fn part_of(&self, v: u64) -> Option<usize> {
        if v == 0 || v > self.n {
            return None;
        }
        let mut end = 0;
        self.part_sizes.iter().position(|&s| {
            end += s;
            v <= end
        })
    }

    /// Every edge `(u, v)` with `u < v`, by checking all vertex pairs.
    /// Quadratic in `n`; meant for small graphs.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (1..=self.n).flat_map(move |u| {
            (u + 1..=self.n)
                .filter(move |&v| self.part_of(u) != self.part_of(v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_balanced(&self) -> bool {
        let max = self.part_sizes.iter().max().copied().unwrap_or(0);
        let min = self.part_sizes.iter().min().copied().unwrap_or(0);
        max - min <= 1
    }

    /// `(n² - Σ s_i²) / 2`.
    pub fn edge_count(&self) -> Count {
        let n = Count::from(self.n);
        let squares: Count = self.part_sizes.iter().map(|&s| Count::from(s) * s).sum();
        (&n * &n - squares) >> 1u8
    }
}

/// Edge count of `T(n, p)` from the balanced part sizes.
pub fn turan_edges_construction(n: u64, p: u64) -> Result<Count> {
    Ok(TuranSpec::new(n, p)?.edge_count())
}

/// Edge count of `T(n, p)` as `(p-1)(n² - r²)/(2p) + C(r, 2)` with
/// `r = n mod p`. For `p > n` this delegates to the construction.
///
/// # Panics
///
/// If `(p-1)(n² - r²)` is not divisible by `2p`. That cannot happen; the
/// assertion is there so large-grid checks would notice if it did.
pub fn turan_edges_formula(n: u64, p: u64) -> Result<Count> {
    let spec = TuranSpec::new(n, p)?;
    if p > n {
        return Ok(spec.edge_count());
    }
    let r = Count::from(spec.residue);
    let n_big = Count::from(n);
    let numerator = (&n_big * &n_big - &r * &r) * (p - 1);
    let (quotient, remainder) = numerator.div_rem(&Count::from(2 * p));
    assert!(
        remainder.is_zero(),
        "(p-1)(n²-r²) not divisible by 2p at n = {n}, p = {p}"
    );
    Ok(quotient + binomial(spec.residue, 2))
}

/// `Δ = ⌊(n+1)/(p+1)⌋`, the last `m` with `p·m ≤ n+1-m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalCountParams {
    pub n: u64,
    pub p: u64,
    pub delta: u64,
}

impl IntervalCountParams {
    pub fn new(n: u64, p: u64) -> Result<Self> {
        check_np(n, p)?;
        Ok(Self {
            n,
            p,
            delta: (n + 1) / (p + 1),
        })
    }
}

fn check_np(n: u64, p: u64) -> Result<()> {
    if n == 0 || p == 0 {
        return Err(Error::Precondition(format!(
            "need n ≥ 1 and p ≥ 1 (got n = {n}, p = {p})"
        )));
    }
    Ok(())
}

/// `Sr(n, p) = Σ_{m=1}^{n} min(p·m, n+1-m)`.
pub fn interval_count_sum(n: u64, p: u64) -> Result<Count> {
    check_np(n, p)?;
    let total: u128 = (1..=n)
        .map(|m| (u128::from(p) * u128::from(m)).min(u128::from(n + 1 - m)))
        .sum();
    Ok(Count::from(total))
}

/// `Sr(n, p)` in closed form.
pub fn interval_count_closed(n: u64, p: u64) -> Result<Count> {
    let IntervalCountParams { delta, .. } = IntervalCountParams::new(n, p)?;
    if n == 1 {
        return Ok(Count::from(1u8));
    }
    if p > n {
        return Ok(binomial(n + 1, 2));
    }
    let (p, n, d) = (Count::from(p), Count::from(n), Count::from(delta));
    let twice = p * (&d + 1u8) * &d + (&n - &d + 1u8) * (&n - &d);
    debug_assert!(twice.is_even());
    Ok(twice >> 1u8)
}

/// All five computations behind `Sr(n, p) = T(n+1, p+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranIdentityReport {
    pub n: u64,
    pub p: u64,
    pub interval_sum: Count,
    pub interval_closed: Count,
    /// `None` when the enumeration leg was skipped.
    pub interval_enumerated: Option<Count>,
    pub turan_formula: Count,
    pub turan_construction: Count,
    pub pass: bool,
}

/// Computes `Sr(n, p)` three ways and `T(n+1, p+1)` two ways. Requires `n ≥ p`.
pub fn verify_turan_identity(n: u64, p: u64) -> Result<TuranIdentityReport> {
    verify_turan_identity_with(n, p, true)
}

/// As [`verify_turan_identity`], optionally skipping the quadratic
/// enumeration leg.
pub fn verify_turan_identity_with(n: u64, p: u64, enumerate: bool) -> Result<TuranIdentityReport> {
    check_np(n, p)?;
    if n < p {
        return Err(Error::Precondition(format!(
            "identity only holds for n ≥ p (got n = {n}, p = {p})"
        )));
    }
    let interval_sum = interval_count_sum(n, p)?;
    let interval_closed = interval_count_closed(n, p)?;
    let interval_enumerated = if enumerate {
        Some(count_interval_bruteforce(n, p)?)
    } else {
        None
    };
    let turan_formula = turan_edges_formula(n + 1, p + 1)?;
    let turan_construction = turan_edges_construction(n + 1, p + 1)?;
    let pass = interval_sum == interval_closed
        && interval_enumerated
            .as_ref()
            .is_none_or(|e| *e == interval_sum)
        && turan_formula == interval_sum
        && turan_construction == interval_sum;
    Ok(TuranIdentityReport {
        n,
        p,
        interval_sum,
        interval_closed,
        interval_enumerated,
        turan_formula,
        turan_construction,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn formula_examples() {
        assert_eq!(turan_edges_formula(4, 3).unwrap(), c(5));
        assert_eq!(turan_edges_formula(5, 2).unwrap(), c(6));
        assert_eq!(turan_edges_formula(4, 4).unwrap(), c(6));
        assert_eq!(turan_edges_formula(3, 9).unwrap(), c(3));
    }

    #[test]
    fn construction_examples() {
        assert_eq!(TuranSpec::new(7, 3).unwrap().part_sizes, [3, 2, 2]);
        assert_eq!(turan_edges_construction(7, 3).unwrap(), c(16));
        assert_eq!(turan_edges_construction(5, 3).unwrap(), c(8));
        assert_eq!(turan_edges_construction(3, 1).unwrap(), c(0));
        assert_eq!(turan_edges_construction(3, 5).unwrap(), c(3));
    }

    #[test]
    fn partition_shape() {
        let s = TuranSpec::new(11, 4).unwrap();
        assert_eq!(s.residue, 3);
        assert_eq!(s.part_sizes, [3, 3, 3, 2]);
        assert!(s.is_balanced());
        let s = TuranSpec::new(2, 5).unwrap();
        assert_eq!(s.part_sizes, [1, 1, 0, 0, 0]);
        assert!(s.is_balanced());
        assert!(TuranSpec::new(0, 1).is_err());
        assert!(TuranSpec::new(1, 0).is_err());
    }

    #[test]
    fn explicit_edges_match_count() {
        for n in 1..=14 {
            for p in 1..=16 {
                let s = TuranSpec::new(n, p).unwrap();
                assert_eq!(
                    Count::from(s.edges().count()),
                    s.edge_count(),
                    "n={n} p={p}"
                );
            }
        }
        let s = TuranSpec::new(5, 2).unwrap();
        assert_eq!(s.part_of(3), Some(0));
        assert_eq!(s.part_of(4), Some(1));
        assert_eq!(s.part_of(6), None);
    }

    #[test]
    fn interval_sum_examples() {
        assert_eq!(interval_count_sum(3, 2).unwrap(), c(5));
        assert_eq!(interval_count_sum(1, 1).unwrap(), c(1));
        assert_eq!(interval_count_sum(3, 5).unwrap(), c(6));
    }

    #[test]
    fn interval_closed_examples() {
        assert_eq!(interval_count_closed(3, 2).unwrap(), c(5));
        assert_eq!(interval_count_closed(4, 2).unwrap(), c(8));
        assert_eq!(interval_count_closed(2, 9).unwrap(), c(3));
        assert_eq!(interval_count_closed(1, 4).unwrap(), c(1));
        assert_eq!(IntervalCountParams::new(4, 2).unwrap().delta, 1);
    }

    #[test]
    fn identity_examples() {
        for (n, p, v) in [(3, 2, 5), (4, 4, 10), (4, 2, 8)] {
            let r = verify_turan_identity(n, p).unwrap();
            assert!(r.pass);
            for got in [
                &r.interval_sum,
                &r.interval_closed,
                r.interval_enumerated.as_ref().unwrap(),
                &r.turan_formula,
                &r.turan_construction,
            ] {
                assert_eq!(*got, c(v));
            }
        }
        assert!(matches!(
            verify_turan_identity(2, 3),
            Err(Error::Precondition(_))
        ));
    }
}
