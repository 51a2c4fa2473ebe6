//! Brute-force enumerators. These are the oracles: they walk every candidate
//! subset and apply the membership predicate, nothing more.

use crate::error::{Error, Result};
use crate::sets::{
    is_generalized_schreier, is_in_spq_family, is_interval, Count, FiniteSet, Ratio,
};

/// Largest `n` accepted by the subset oracle (2^(n-1) candidates).
pub const ORACLE_LIMIT: u64 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    /// `S^{p/q}_n`.
    Spq(Ratio),
    /// Intervals in `{1..n}` with `p·min F ≥ |F|`.
    Interval { p: u64 },
}

/// Members of one family.
///
/// `S^{p/q}_n` listings are ordered by cardinality, then lexicographically;
/// interval listings are in plain lexicographic order. Either way the order
/// is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyListing {
    pub n: u64,
    pub params: FamilyParams,
    pub members: Vec<FiniteSet>,
}

impl FamilyListing {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn check_guard(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n > ORACLE_LIMIT {
        return Err(Error::OracleGuard {
            n,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

/// Smallest element and size of the set `{i+1 : bit i of mask} ∪ {n}`.
fn mask_shape(mask: u64, n: u64) -> (u64, u64) {
    let min = if mask == 0 {
        n
    } else {
        u64::from(mask.trailing_zeros()) + 1
    };
    (min, u64::from(mask.count_ones()) + 1)
}

fn mask_to_set(mask: u64, n: u64) -> FiniteSet {
    let elements = (1..n)
        .filter(|i| mask & (1 << (i - 1)) != 0)
        .chain(std::iter::once(n))
        .collect();
    FiniteSet::new(elements).expect("mask elements are increasing and positive")
}

/// Every `F ⊆ {1..n}` with `max F = n` and `q·min F ≥ p·|F|`.
pub fn enumerate_spq(n: u64, ratio: Ratio) -> Result<FamilyListing> {
    check_guard(n)?;
    let mut members: Vec<FiniteSet> = (0..1u64 << (n - 1))
        .map(|mask| mask_to_set(mask, n))
        .filter(|f| is_in_spq_family(f, ratio, n))
        .collect();
    members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(FamilyListing {
        n,
        params: FamilyParams::Spq(ratio),
        members,
    })
}

/// `|S^{p/q}_n|` by walking all `2^(n-1)` candidate masks without allocating.
pub fn count_spq_bruteforce(n: u64, ratio: Ratio) -> Result<Count> {
    check_guard(n)?;
    let hits = (0..1u64 << (n - 1))
        .filter(|&mask| {
            let (min, len) = mask_shape(mask, n);
            ratio.admits(min, len)
        })
        .count();
    Ok(Count::from(hits))
}

/// Every interval `F ⊆ {1..n}` with `p·min F ≥ |F|`. No constraint on `max F`.
pub fn enumerate_interval_schreier(n: u64, p: u64) -> Result<FamilyListing> {
    let ratio = interval_ratio(n, p)?;
    let mut members = Vec::new();
    for start in 1..=n {
        for end in start..=n {
            let f = FiniteSet::interval(start, end)?;
            debug_assert!(is_interval(&f));
            if is_generalized_schreier(&f, ratio) {
                members.push(f);
            }
        }
    }
    Ok(FamilyListing {
        n,
        params: FamilyParams::Interval { p },
        members,
    })
}

/// `Sr(n, p)` by checking all `n(n+1)/2` intervals.
pub fn count_interval_bruteforce(n: u64, p: u64) -> Result<Count> {
    let ratio = interval_ratio(n, p)?;
    let mut hits: u64 = 0;
    for start in 1..=n {
        for end in start..=n {
            if ratio.admits(start, end - start + 1) {
                hits += 1;
            }
        }
    }
    Ok(Count::from(hits))
}

/// The interval condition `p·min F ≥ |F|` is the ratio `1/p`.
fn interval_ratio(n: u64, p: u64) -> Result<Ratio> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ratio::new(1, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: u64, q: u64) -> Ratio {
        Ratio::new(p, q).unwrap()
    }

    fn rendered(listing: &FamilyListing) -> Vec<String> {
        listing.members.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn spq_listings() {
        assert_eq!(
            rendered(&enumerate_spq(3, r(1, 1)).unwrap()),
            ["{3}", "{2,3}"]
        );
        assert_eq!(rendered(&enumerate_spq(1, r(1, 1)).unwrap()), ["{1}"]);
        assert_eq!(
            rendered(&enumerate_spq(4, r(1, 2)).unwrap()),
            ["{4}", "{1,4}", "{2,4}", "{3,4}", "{2,3,4}"]
        );
    }

    #[test]
    fn spq_counts() {
        assert_eq!(count_spq_bruteforce(2, r(1, 1)).unwrap(), Count::from(1u32));
        assert_eq!(count_spq_bruteforce(5, r(2, 1)).unwrap(), Count::from(2u32));
        assert_eq!(count_spq_bruteforce(4, r(1, 2)).unwrap(), Count::from(5u32));
        assert_eq!(
            rendered(&enumerate_spq(5, r(2, 1)).unwrap()),
            ["{5}", "{4,5}"]
        );
    }

    #[test]
    fn empty_family() {
        assert!(enumerate_spq(2, r(3, 1)).unwrap().is_empty());
    }

    #[test]
    fn guard() {
        assert_eq!(
            enumerate_spq(31, r(1, 1)).unwrap_err(),
            Error::OracleGuard { n: 31, limit: 30 }
        );
        assert!(count_spq_bruteforce(31, r(1, 1)).is_err());
        assert!(count_spq_bruteforce(0, r(1, 1)).is_err());
    }

    #[test]
    fn interval_listings() {
        assert_eq!(
            rendered(&enumerate_interval_schreier(3, 2).unwrap()),
            ["{1}", "{1,2}", "{2}", "{2,3}", "{3}"]
        );
        assert_eq!(
            rendered(&enumerate_interval_schreier(1, 1).unwrap()),
            ["{1}"]
        );
        assert_eq!(
            rendered(&enumerate_interval_schreier(2, 3).unwrap()),
            ["{1}", "{1,2}", "{2}"]
        );
    }

    #[test]
    fn interval_counts() {
        assert_eq!(count_interval_bruteforce(3, 2).unwrap(), Count::from(5u32));
        assert_eq!(count_interval_bruteforce(3, 5).unwrap(), Count::from(6u32));
        assert_eq!(count_interval_bruteforce(1, 7).unwrap(), Count::from(1u32));
        for n in 1..=12 {
            for p in 1..=5 {
                assert_eq!(
                    count_interval_bruteforce(n, p).unwrap(),
                    Count::from(enumerate_interval_schreier(n, p).unwrap().len())
                );
            }
        }
    }

    /// Independent double loop over every subset of {1..n} for tiny n.
    #[test]
    fn spq_listing_is_complete() {
        for n in 1..=9u64 {
            for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)] {
                let listing = enumerate_spq(n, r(p, q)).unwrap();
                let mut expected = Vec::new();
                for bits in 1u64..(1 << n) {
                    let elems: Vec<u64> = (1..=n).filter(|i| bits >> (i - 1) & 1 == 1).collect();
                    let min = elems[0];
                    let max = *elems.last().unwrap();
                    if max == n && q * min >= p * elems.len() as u64 {
                        expected.push(FiniteSet::new(elems).unwrap());
                    }
                }
                let mut got = listing.members.clone();
                got.sort();
                expected.sort();
                assert_eq!(got, expected, "n={n} p={p} q={q}");
                assert_eq!(
                    count_spq_bruteforce(n, r(p, q)).unwrap(),
                    Count::from(listing.len())
                );
            }
        }
    }
}
