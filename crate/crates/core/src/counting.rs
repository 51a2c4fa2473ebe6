//! Exact values of `|S^{p/q}_n|` without enumeration.
//!
//! Two independent routes are provided:
//!
//! * [`sequence_spq`] / [`count_spq_recurrence`] run the order-`(p+q)` linear
//!   recurrence
//!
//!   ```text
//!   |S_n| = Σ_{k=1..q} (-1)^{k+1} C(q,k) |S_{n-k}| + |S_{n-(p+q)}|,   n ≥ p+q
//!   ```
//!
//!   forward from base values, with `|S_0| = 0`.
//! * [`count_spq_direct`] conditions on `min F = m` and the number `j` of
//!   elements strictly between `m` and `n`:
//!
//!   ```text
//!   |S_n| = [q·n ≥ p] + Σ_{m=1}^{n-1} Σ_{j=0}^{min(n-m-1, ⌊qm/p⌋-2)} C(n-m-1, j)
//!   ```
//!
//! Base values `1 ≤ n < p+q` of the recurrence come from the direct formula,
//! so neither route is bounded by the enumeration limit.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sets::{Count, Ratio};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return Count::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Count::one();
    for i in 0..k {
        // acc = C(n, i) here; the product C(n,i)·(n-i) is divisible by i+1.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `Σ_{j=0}^{upto} C(len, j)` for `upto < len`.
fn binomial_prefix_sum(len: u64, upto: u64) -> Count {
    let mut term = Count::one();
    let mut sum = Count::one();
    for j in 0..upto {
        term *= len - j;
        term /= j + 1;
        sum += &term;
    }
    sum
}

/// `|S^{p/q}_n|` by summing over the smallest element.
pub fn count_spq_direct(n: u64, ratio: Ratio) -> Count {
    let (p, q) = (u128::from(ratio.p()), u128::from(ratio.q()));
    let mut total = if q * u128::from(n) >= p {
        Count::one()
    } else {
        Count::zero()
    };
    for m in 1..n {
        let cap = q * u128::from(m) / p;
        if cap < 2 {
            continue;
        }
        let free = n - m - 1;
        let upto = u64::try_from(cap - 2).unwrap_or(u64::MAX);
        if upto >= free {
            total += Count::one() << free;
        } else {
            total += binomial_prefix_sum(free, upto);
        }
    }
    total
}

/// The values `|S^{p/q}_n|` for `0 ≤ n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSequence {
    ratio: Ratio,
    values: Vec<Count>,
}

impl CountSequence {
    pub fn ratio(&self) -> Ratio {
        self.ratio
    }

    pub fn n_max(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<&Count> {
        self.values.get(usize::try_from(n).ok()?)
    }

    /// All values, index 0 included.
    pub fn values(&self) -> &[Count] {
        &self.values
    }

    /// Values for `n ≥ 1`.
    pub fn from_one(&self) -> &[Count] {
        &self.values[1..]
    }

    pub fn into_values(self) -> Vec<Count> {
        self.values
    }
}

/// Runs the recurrence with caller-supplied base values for `1 ≤ n < p+q`.
///
/// Fails with [`Error::NegativeTerm`] if the alternating sum ever goes below
/// zero, which can only happen with wrong base values.
pub fn sequence_spq_with_bases<B>(n_max: u64, ratio: Ratio, mut base: B) -> Result<CountSequence>
where
    B: FnMut(u64) -> Count,
{
    let order = ratio.p() + ratio.q();
    let q = ratio.q() as usize;
    let coeffs: Vec<Count> = (1..=q).map(|k| binomial(q as u64, k as i64)).collect();
    let mut values: Vec<Count> = Vec::with_capacity(n_max as usize + 1);
    values.push(Count::zero());
    for n in 1..=n_max {
        if n < order {
            values.push(base(n));
            continue;
        }
        let i = n as usize;
        let mut plus = values[i - order as usize].clone();
        let mut minus = Count::zero();
        for (k, c) in (1..=q).zip(&coeffs) {
            let term = c * &values[i - k];
            if k % 2 == 1 {
                plus += term;
            } else {
                minus += term;
            }
        }
        if minus > plus {
            return Err(Error::NegativeTerm { n });
        }
        values.push(plus - minus);
    }
    Ok(CountSequence { ratio, values })
}

/// `|S^{p/q}_n|` for `0 ≤ n ≤ n_max` in one forward pass.
pub fn sequence_spq(n_max: u64, ratio: Ratio) -> CountSequence {
    sequence_spq_with_bases(n_max, ratio, |n| count_spq_direct(n, ratio))
        .expect("recurrence stays nonnegative from exact base values")
}

/// `|S^{p/q}_n|` via the recurrence; `0` for `n = 0`.
pub fn count_spq_recurrence(n: u64, ratio: Ratio) -> Count {
    sequence_spq(n, ratio)
        .into_values()
        .pop()
        .expect("sequence has at least index 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: u64, q: u64) -> Ratio {
        Ratio::new(p, q).unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), c(10));
        assert_eq!(binomial(0, 0), c(1));
        assert_eq!(binomial(17, 0), c(1));
        assert_eq!(binomial(4, 5), c(0));
        assert_eq!(binomial(4, -1), c(0));
        assert_eq!(
            binomial(100, 49).to_string(),
            "98913082887808032681188722800"
        );
        // Pascal's rule
        for n in 1..40u64 {
            for k in 1..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(count_spq_recurrence(10, r(1, 1)), c(55));
        // Oracle value; 2·|S_4| - |S_3| + |S_2| = 10 - 3 + 2.
        assert_eq!(count_spq_recurrence(5, r(1, 2)), c(9));
        assert_eq!(count_spq_recurrence(5, r(2, 1)), c(2));
        assert_eq!(count_spq_recurrence(0, r(3, 4)), c(0));
    }

    #[test]
    fn sequence_examples() {
        let vals = |n, p, q| -> Vec<u64> {
            sequence_spq(n, r(p, q))
                .values()
                .iter()
                .map(|v| u64::try_from(v).unwrap())
                .collect()
        };
        assert_eq!(vals(6, 1, 1), [0, 1, 1, 2, 3, 5, 8]);
        assert_eq!(vals(5, 1, 2), [0, 1, 2, 3, 5, 9]);
        assert_eq!(vals(4, 2, 1), [0, 0, 1, 1, 1]);
    }

    #[test]
    fn direct_examples() {
        assert_eq!(count_spq_direct(3, r(1, 1)), c(2));
        assert_eq!(count_spq_direct(4, r(1, 2)), c(5));
        assert_eq!(count_spq_direct(1, r(3, 1)), c(0));
    }

    #[test]
    fn inflated_base_value_is_detected() {
        // |S_3| = 2·|S_2| - |S_1| + |S_0| goes negative once |S_1| is inflated.
        let ratio = r(1, 2);
        let bad = sequence_spq_with_bases(10, ratio, |n| {
            if n == 1 {
                c(100)
            } else {
                count_spq_direct(n, ratio)
            }
        });
        assert_eq!(bad.unwrap_err(), Error::NegativeTerm { n: 3 });
    }

    #[test]
    fn large_index_has_no_guard() {
        let v = count_spq_recurrence(2000, r(3, 2));
        assert!(v > c(u64::MAX));
    }
}
