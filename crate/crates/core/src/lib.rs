//! Exact counting and enumeration of generalized Schreier sets.
//!
//! A nonempty finite set `F` of positive integers is *generalized Schreier*
//! for the ratio `p/q` when `q·min F ≥ p·|F|`. The family
//! `S^{p/q}_n` collects those sets with `max F = n`; for `p = q = 1` its
//! sizes are the Fibonacci numbers.
//!
//! The crate provides:
//!
//! * [`sets`]: the set and ratio types and their predicates.
//! * [`enumeration`]: brute-force oracles over all subsets.
//! * [`counting`]: the order-`(p+q)` linear recurrence and an independent
//!   binomial-sum formula, both exact.
//! * [`bijections`]: the relabeling maps that prove the recurrence, checked
//!   element by element against the oracle.
//! * [`turan`]: interval-Schreier counts and Turán graph edge counts, and the
//!   identity `Sr(n, p) = T(n+1, p+1)`.
//! * [`verify`], [`bench`], [`bfile`], [`cli`]: grid verification, timing,
//!   b-file export and the `schreier` command line.
//!
//! ```
//! use schreier::{count_spq_recurrence, Ratio};
//!
//! let fib = Ratio::new(1, 1).unwrap();
//! assert_eq!(count_spq_recurrence(30, fib), 832040u32.into());
//! ```

pub mod bench;
pub mod bfile;
pub mod bijections;
pub mod cli;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod sets;
pub mod turan;
pub mod verify;

pub use bijections::{
    inclusion_exclusion_decomposition, phi_a, phi_a_inverse, phi_g, phi_g_inverse, psi_map, GapSet,
    IeDecomposition,
};
pub use counting::{binomial, count_spq_direct, count_spq_recurrence, sequence_spq, CountSequence};
pub use enumeration::{
    count_interval_bruteforce, count_spq_bruteforce, enumerate_interval_schreier, enumerate_spq,
    FamilyListing, ORACLE_LIMIT,
};
pub use error::{Error, Result};
pub use sets::{is_generalized_schreier, is_in_spq_family, is_interval, Count, FiniteSet, Ratio};
pub use turan::{
    interval_count_closed, interval_count_sum, turan_edges_construction, turan_edges_formula,
    verify_turan_identity, TuranIdentityReport, TuranSpec,
};
