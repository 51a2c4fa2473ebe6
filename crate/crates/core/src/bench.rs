//! Wall-clock comparison of the oracle, the recurrence and the direct formula.

use std::time::Instant;

use sha2::{Digest, Sha256};

use crate::counting::{count_spq_direct, count_spq_recurrence};
use crate::enumeration::{count_spq_bruteforce, ORACLE_LIMIT};
use crate::sets::{Count, Ratio};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub n: u64,
    pub method: &'static str,
    pub nanos: u128,
    pub digest: String,
}

impl BenchRow {
    /// `n<TAB>method<TAB>nanoseconds<TAB>digest`.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.n, self.method, self.nanos, self.digest
        )
    }
}

/// First 16 hex digits of the SHA-256 of the decimal value.
pub fn value_digest(value: &Count) -> String {
    let hash = Sha256::digest(value.to_string().as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn timed<F: FnOnce() -> Count>(n: u64, method: &'static str, f: F) -> BenchRow {
    let start = Instant::now();
    let value = f();
    let nanos = start.elapsed().as_nanos();
    BenchRow {
        n,
        method,
        nanos,
        digest: value_digest(&value),
    }
}

/// One row per `(n, method)`; the oracle is skipped beyond its guard.
pub fn bench_rows(ratio: Ratio, n_max: u64) -> Vec<BenchRow> {
    (1..=n_max).flat_map(|n| bench_at(ratio, n)).collect()
}

/// The rows for a single `n`.
pub fn bench_at(ratio: Ratio, n: u64) -> Vec<BenchRow> {
    let mut rows = Vec::with_capacity(3);
    if n <= ORACLE_LIMIT {
        rows.push(timed(n, "oracle", || {
            count_spq_bruteforce(n, ratio).expect("n within guard")
        }));
    }
    rows.push(timed(n, "recurrence", || count_spq_recurrence(n, ratio)));
    rows.push(timed(n, "direct", || count_spq_direct(n, ratio)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_agree_across_methods() {
        let rows = bench_rows(Ratio::new(1, 2).unwrap(), 10);
        assert_eq!(rows.len(), 30);
        for chunk in rows.chunks(3) {
            assert!(chunk.iter().all(|r| r.digest == chunk[0].digest));
        }
    }

    #[test]
    fn oracle_dropped_past_guard() {
        let rows = bench_at(Ratio::new(3, 2).unwrap(), 31);
        let methods: Vec<_> = rows.iter().map(|r| r.method).collect();
        assert_eq!(methods, ["recurrence", "direct"]);
        assert_eq!(rows[0].digest, rows[1].digest);
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(value_digest(&Count::from(55u8)).len(), 16);
        assert_eq!(
            value_digest(&Count::from(55u8)),
            value_digest(&"55".parse().unwrap())
        );
    }
}
