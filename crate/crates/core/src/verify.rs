//! Grid verification suites.
//!
//! Each suite walks a parameter grid, compares two or more independent
//! computations per cell, and reports the number of cases and the first
//! counterexample in grid order. Cells may run on worker threads; results
//! are collected in grid order so the report never depends on scheduling.

use std::fmt;

use rayon::prelude::*;

use crate::bijections::{
    check_gap_bijection, check_window_bijection, inclusion_exclusion_decomposition, GapSet,
};
use crate::counting::{binomial, count_spq_direct, sequence_spq, sequence_spq_with_bases};
use crate::enumeration::{count_spq_bruteforce, ORACLE_LIMIT};
use crate::error::{Error, Result};
use crate::sets::{Count, Ratio};
use crate::turan::verify_turan_identity_with;

/// Largest `n` at which the Turán suite also enumerates intervals.
pub const INTERVAL_ENUMERATION_CAP: u64 = 200;

/// Factors used by the scale-invariance suite.
pub const SCALE_FACTORS: [u64; 3] = [2, 3, 5];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Recurrence against the subset oracle.
    Recurrence,
    /// Recurrence against the direct binomial-sum formula.
    Direct,
    /// The relabeling maps and the inclusion–exclusion layers.
    Bijections,
    /// `Sr(n, p) = T(n+1, p+1)`.
    TuranIdentity,
    /// `(p, q)` and `(kp, kq)` give the same sequence.
    ScaleInvariance,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Recurrence,
        Suite::Direct,
        Suite::Bijections,
        Suite::TuranIdentity,
        Suite::ScaleInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence",
            Suite::Direct => "direct",
            Suite::Bijections => "bijections",
            Suite::TuranIdentity => "turan-identity",
            Suite::ScaleInvariance => "scale-invariance",
        }
    }

    /// Default bounds `(pmax, qmax, nmax)`; `qmax` is unused by the Turán suite.
    pub fn default_bounds(self) -> Bounds {
        let (pmax, qmax, nmax) = match self {
            Suite::Recurrence => (4, 4, 20),
            Suite::Direct => (6, 6, 300),
            Suite::Bijections => (3, 3, 14),
            Suite::TuranIdentity => (10, 1, 100),
            Suite::ScaleInvariance => (3, 3, 200),
        };
        Bounds { pmax, qmax, nmax }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub pmax: u64,
    pub qmax: u64,
    pub nmax: u64,
}

/// Deliberate corruption for exercising the failure path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Adds one to the recurrence's base value at `n = 1`.
    BaseCaseOffByOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub bounds: Bounds,
    pub cases: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    fn from_cells(suite: Suite, bounds: Bounds, cells: Vec<Vec<Option<String>>>) -> Self {
        let outcomes: Vec<Option<String>> = cells.into_iter().flatten().collect();
        let failures = outcomes.iter().filter(|o| o.is_some()).count();
        let first_counterexample = outcomes.iter().flatten().next().cloned();
        Self {
            suite,
            bounds,
            cases: outcomes.len(),
            failures,
            first_counterexample,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Bounds { pmax, qmax, nmax } = self.bounds;
        let grid = match self.suite {
            Suite::TuranIdentity => format!("p<={pmax} n<={nmax}"),
            _ => format!("p<={pmax} q<={qmax} n<={nmax}"),
        };
        write!(
            f,
            "{}\t{}\t{} cases\t{} failures\t{}",
            self.suite,
            grid,
            self.cases,
            self.failures,
            if self.pass() { "PASS" } else { "FAIL" }
        )?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

fn ratio_grid(pmax: u64, qmax: u64) -> Vec<Ratio> {
    (1..=pmax)
        .flat_map(|p| (1..=qmax).map(move |q| Ratio::new(p, q).expect("grid starts at 1")))
        .collect()
}

fn check_bounds(suite: Suite, b: Bounds) -> Result<()> {
    if b.pmax == 0 || b.qmax == 0 || b.nmax == 0 {
        return Err(Error::Precondition("bounds must be positive".into()));
    }
    let oracle = matches!(suite, Suite::Recurrence | Suite::Bijections);
    if oracle && b.nmax > ORACLE_LIMIT {
        return Err(Error::OracleGuard {
            n: b.nmax,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<VerifyReport> {
    run_suite_with_fault(suite, bounds, Fault::None)
}

pub fn run_suite_with_fault(suite: Suite, bounds: Bounds, fault: Fault) -> Result<VerifyReport> {
    check_bounds(suite, bounds)?;
    let cells = match suite {
        Suite::Recurrence => recurrence_cells(bounds, fault),
        Suite::Direct => direct_cells(bounds, fault),
        Suite::Bijections => bijection_cells(bounds),
        Suite::TuranIdentity => turan_cells(bounds),
        Suite::ScaleInvariance => scale_cells(bounds),
    };
    Ok(VerifyReport::from_cells(suite, bounds, cells))
}

fn recurrence_values(n_max: u64, ratio: Ratio, fault: Fault) -> Result<Vec<Count>> {
    let seq = sequence_spq_with_bases(n_max, ratio, |n| {
        let v = count_spq_direct(n, ratio);
        match fault {
            Fault::BaseCaseOffByOne if n == 1 => v + 1u8,
            _ => v,
        }
    })?;
    Ok(seq.into_values())
}

fn recurrence_cells(b: Bounds, fault: Fault) -> Vec<Vec<Option<String>>> {
    ratio_grid(b.pmax, b.qmax)
        .into_par_iter()
        .map(|ratio| match recurrence_values(b.nmax, ratio, fault) {
            Err(e) => vec![Some(format!("r={ratio}: {e}"))],
            Ok(values) => (1..=b.nmax)
                .map(|n| {
                    let oracle = count_spq_bruteforce(n, ratio).expect("n within guard");
                    let fast = &values[n as usize];
                    (fast != &oracle)
                        .then(|| format!("r={ratio} n={n}: recurrence {fast} != oracle {oracle}"))
                })
                .collect(),
        })
        .collect()
}

fn direct_cells(b: Bounds, fault: Fault) -> Vec<Vec<Option<String>>> {
    ratio_grid(b.pmax, b.qmax)
        .into_par_iter()
        .map(|ratio| match recurrence_values(b.nmax, ratio, fault) {
            Err(e) => vec![Some(format!("r={ratio}: {e}"))],
            Ok(values) => (1..=b.nmax)
                .into_par_iter()
                .map(|n| {
                    let direct = count_spq_direct(n, ratio);
                    let fast = &values[n as usize];
                    (fast != &direct)
                        .then(|| format!("r={ratio} n={n}: recurrence {fast} != direct {direct}"))
                })
                .collect(),
        })
        .collect()
}

fn bijection_cell(n: u64, ratio: Ratio) -> Vec<Option<String>> {
    let mut out = Vec::new();
    let gaps = match GapSet::all(n, ratio) {
        Ok(g) => g,
        Err(e) => return vec![Some(format!("r={ratio} n={n}: {e}"))],
    };
    for g in &gaps {
        out.push(check_gap_bijection(g).err().map(|e| e.to_string()));
    }
    out.push(
        check_window_bijection(n, ratio)
            .err()
            .map(|e| e.to_string()),
    );

    let decomposition = match inclusion_exclusion_decomposition(n, ratio) {
        Ok(d) => d,
        Err(e) => {
            out.push(Some(format!("r={ratio} n={n}: {e}")));
            return out;
        }
    };
    let oracle = count_spq_bruteforce(n, ratio).expect("n within guard");
    out.push((decomposition.assembled != oracle).then(|| {
        format!(
            "r={ratio} n={n}: inclusion-exclusion gives {} but oracle gives {oracle}",
            decomposition.assembled
        )
    }));
    let seq = sequence_spq(n, ratio);
    for (i, layer) in (1..).zip(&decomposition.layer_sums) {
        let expected = binomial(ratio.q(), i as i64) * &seq.values()[(n - i) as usize];
        out.push(
            (layer != &expected).then(|| {
                format!("r={ratio} n={n}: layer {i} sums to {layer}, expected {expected}")
            }),
        );
    }
    out
}

fn bijection_cells(b: Bounds) -> Vec<Vec<Option<String>>> {
    let grid: Vec<(Ratio, u64)> = ratio_grid(b.pmax, b.qmax)
        .into_iter()
        .flat_map(|r| (r.p() + r.q()..=b.nmax).map(move |n| (r, n)))
        .collect();
    grid.into_par_iter()
        .map(|(ratio, n)| bijection_cell(n, ratio))
        .collect()
}

fn turan_cells(b: Bounds) -> Vec<Vec<Option<String>>> {
    (1..=b.pmax)
        .into_par_iter()
        .map(|p| {
            (p..=b.nmax)
                .map(
                    |n| match verify_turan_identity_with(n, p, n <= INTERVAL_ENUMERATION_CAP) {
                        Err(e) => Some(format!("n={n} p={p}: {e}")),
                        Ok(r) if r.pass => None,
                        Ok(r) => Some(format!(
                        "n={n} p={p}: Sr sum {} closed {} enum {} vs T formula {} construction {}",
                        r.interval_sum,
                        r.interval_closed,
                        r.interval_enumerated
                            .map_or_else(|| "-".to_string(), |v| v.to_string()),
                        r.turan_formula,
                        r.turan_construction
                    )),
                    },
                )
                .collect()
        })
        .collect()
}

fn scale_cells(b: Bounds) -> Vec<Vec<Option<String>>> {
    ratio_grid(b.pmax, b.qmax)
        .into_par_iter()
        .map(|ratio| {
            let base = sequence_spq(b.nmax, ratio);
            SCALE_FACTORS
                .iter()
                .map(|&k| {
                    let scaled_ratio = ratio.scaled(k).expect("positive");
                    let scaled = sequence_spq(b.nmax, scaled_ratio);
                    let bad = base
                        .values()
                        .iter()
                        .zip(scaled.values())
                        .position(|(a, b)| a != b);
                    bad.map(|n| {
                        format!(
                            "r={ratio} vs {scaled_ratio} differ at n={n}: {} != {}",
                            base.values()[n],
                            scaled.values()[n]
                        )
                    })
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids_pass() {
        let small = Bounds {
            pmax: 2,
            qmax: 2,
            nmax: 10,
        };
        for suite in Suite::ALL {
            let report = run_suite(suite, small).unwrap();
            assert!(report.pass(), "{report}");
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn fault_is_reported() {
        let b = Suite::Recurrence.default_bounds();
        let report = run_suite_with_fault(Suite::Recurrence, b, Fault::BaseCaseOffByOne).unwrap();
        assert!(!report.pass());
        let first = report.first_counterexample.unwrap();
        assert!(first.starts_with("r=1/1 n=1:"), "{first}");
    }

    #[test]
    fn oracle_suites_respect_guard() {
        let b = Bounds {
            pmax: 1,
            qmax: 1,
            nmax: 31,
        };
        assert!(matches!(
            run_suite(Suite::Recurrence, b),
            Err(Error::OracleGuard { .. })
        ));
        assert!(run_suite(Suite::Direct, b).is_ok());
    }

    #[test]
    fn report_is_deterministic() {
        let b = Bounds {
            pmax: 3,
            qmax: 3,
            nmax: 12,
        };
        let a = run_suite_with_fault(Suite::Direct, b, Fault::BaseCaseOffByOne).unwrap();
        for _ in 0..3 {
            assert_eq!(
                a,
                run_suite_with_fault(Suite::Direct, b, Fault::BaseCaseOffByOne).unwrap()
            );
        }
    }
}
