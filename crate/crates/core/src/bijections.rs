//! The relabelings behind the recurrence for `|S^{p/q}_n|`, as executable maps.
//!
//! Fix `n ≥ p+q` and let `W = {n-q, ..., n-1}`.
//!
//! * For a nonempty gap set `G ⊆ W`, [`phi_g`] sends a member of
//!   `A_G = {F ∈ S_n : F ∩ G = ∅}` to `S_{n-|G|}` by closing up the gaps
//!   with the order-preserving relabeling [`psi_map`].
//! * [`phi_a`] sends a member of `A = {F ∈ S_n : W ⊆ F}` to `S_{n-(p+q)}` by
//!   dropping `{n-q+1, ..., n}` and shifting down by `p`.
//!
//! Every map validates its input domain and re-checks that its output lands
//! in the target family. [`inclusion_exclusion_decomposition`] counts every
//! `A_G` by filtering the oracle listing directly, so it checks the relabeling
//! lemma rather than assuming it.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::enumeration::enumerate_spq;
use crate::error::{Error, Result};
use crate::sets::{is_in_spq_family, Count, FiniteSet, Ratio};

/// A nonempty `G ⊆ {n-q, ..., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GapSet {
    n: u64,
    ratio: Ratio,
    members: Vec<u64>,
}

impl GapSet {
    pub fn new(n: u64, ratio: Ratio, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        let q = ratio.q();
        if n < q + 1 {
            return Err(Error::InvalidGapSet(format!(
                "n = {n} too small for window of width q = {q}"
            )));
        }
        let members: Vec<u64> = members
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if members.is_empty() {
            return Err(Error::InvalidGapSet("gap set must be nonempty".into()));
        }
        if let Some(&g) = members.iter().find(|&&g| g < n - q || g >= n) {
            return Err(Error::InvalidGapSet(format!(
                "{g} lies outside the window [{}, {}]",
                n - q,
                n - 1
            )));
        }
        Ok(Self { n, ratio, members })
    }

    /// Every nonempty subset of the window, smallest subsets first.
    pub fn all(n: u64, ratio: Ratio) -> Result<Vec<Self>> {
        let q = ratio.q();
        if n < q + 1 {
            return Err(Error::InvalidGapSet(format!(
                "n = {n} too small for window of width q = {q}"
            )));
        }
        if q >= 64 {
            return Err(Error::Precondition(format!(
                "window of width {q} is too wide"
            )));
        }
        let mut out: Vec<Self> = (1u64..1 << q)
            .map(|mask| {
                let members = (0..q).filter(|b| mask >> b & 1 == 1).map(|b| n - q + b);
                Self::new(n, ratio, members)
            })
            .collect::<Result<_>>()?;
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.members.cmp(&b.members))
        });
        Ok(out)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ratio(&self) -> Ratio {
        self.ratio
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// `n - |G|`, the index of the target family.
    pub fn target_n(&self) -> u64 {
        self.n - self.members.len() as u64
    }
}

/// The increasing bijection `{1..n} \ G → {1..n-|G|}`.
#[derive(Clone, Debug)]
pub struct Relabeling<'a> {
    gaps: &'a GapSet,
}

impl Relabeling<'_> {
    /// `i - |{g ∈ G : g < i}|`, or `None` when `i` is a gap or out of range.
    pub fn forward(&self, i: u64) -> Option<u64> {
        if i == 0 || i > self.gaps.n || self.gaps.contains(i) {
            return None;
        }
        let below = self.gaps.members.partition_point(|&g| g < i) as u64;
        Some(i - below)
    }

    pub fn backward(&self, j: u64) -> Option<u64> {
        if j == 0 || j > self.gaps.target_n() {
            return None;
        }
        // Walk the sorted gaps: each gap at or below the running image pushes it up.
        let mut i = j;
        for &g in &self.gaps.members {
            if g <= i {
                i += 1;
            }
        }
        Some(i)
    }

    /// The full table `(i, ψ(i))` in increasing order of `i`.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        (1..=self.gaps.n)
            .filter_map(|i| self.forward(i).map(|j| (i, j)))
            .collect()
    }
}

pub fn psi_map(gaps: &GapSet) -> Relabeling<'_> {
    Relabeling { gaps }
}

fn require_lemma_range(n: u64, ratio: Ratio) -> Result<()> {
    if n < ratio.p() + ratio.q() {
        return Err(Error::Domain(format!(
            "n = {n} is below p+q = {}",
            ratio.p() + ratio.q()
        )));
    }
    Ok(())
}

fn checked_image(elements: Vec<u64>, ratio: Ratio, n: u64) -> Result<FiniteSet> {
    let rendered = format!("{elements:?}");
    let image = FiniteSet::new(elements).map_err(|_| Error::ImageOutsideTarget {
        image: rendered,
        ratio: ratio.to_string(),
        n,
    })?;
    if !is_in_spq_family(&image, ratio, n) {
        return Err(Error::ImageOutsideTarget {
            image: image.to_string(),
            ratio: ratio.to_string(),
            n,
        });
    }
    Ok(image)
}

/// Closes up the gaps: `F ↦ {ψ_G(i) : i ∈ F}` on `A_G`.
pub fn phi_g(set: &FiniteSet, gaps: &GapSet) -> Result<FiniteSet> {
    let (n, ratio) = (gaps.n, gaps.ratio);
    require_lemma_range(n, ratio)?;
    if !is_in_spq_family(set, ratio, n) {
        return Err(Error::Domain(format!("{set} is not in S^{ratio}_{n}")));
    }
    if let Some(&g) = set.elements().iter().find(|&&x| gaps.contains(x)) {
        return Err(Error::Domain(format!("{set} meets the gap set at {g}")));
    }
    let psi = psi_map(gaps);
    let image = set
        .elements()
        .iter()
        .map(|&i| psi.forward(i).expect("non-gap element within range"))
        .collect();
    checked_image(image, ratio, gaps.target_n())
}

/// Reopens the gaps: `H ↦ {ψ_G⁻¹(j) : j ∈ H}`.
pub fn phi_g_inverse(set: &FiniteSet, gaps: &GapSet) -> Result<FiniteSet> {
    let (n, ratio) = (gaps.n, gaps.ratio);
    require_lemma_range(n, ratio)?;
    let target = gaps.target_n();
    if !is_in_spq_family(set, ratio, target) {
        return Err(Error::Domain(format!("{set} is not in S^{ratio}_{target}")));
    }
    let psi = psi_map(gaps);
    let preimage = set
        .elements()
        .iter()
        .map(|&j| psi.backward(j).expect("element within target range"))
        .collect();
    let out = checked_image(preimage, ratio, n)?;
    debug_assert!(out.elements().iter().all(|&x| !gaps.contains(x)));
    Ok(out)
}

/// Whether `{n-q, ..., n-1} ⊆ F`, i.e. `F` is in `A` (given `F ∈ S_n`).
pub fn contains_window(set: &FiniteSet, ratio: Ratio, n: u64) -> bool {
    n > ratio.q() && (n - ratio.q()..n).all(|x| set.contains(x))
}

/// `F ↦ (F \ {n-q+1, ..., n}) - p` on `A`.
pub fn phi_a(set: &FiniteSet, ratio: Ratio, n: u64) -> Result<FiniteSet> {
    require_lemma_range(n, ratio)?;
    if !is_in_spq_family(set, ratio, n) {
        return Err(Error::Domain(format!("{set} is not in S^{ratio}_{n}")));
    }
    if !contains_window(set, ratio, n) {
        return Err(Error::Domain(format!(
            "{set} does not contain {{{}, ..., {}}}",
            n - ratio.q(),
            n - 1
        )));
    }
    let (p, q) = (ratio.p(), ratio.q());
    let image: Vec<u64> = set
        .elements()
        .iter()
        .filter(|&&x| x <= n - q)
        .map(|&x| x.saturating_sub(p))
        .collect();
    checked_image(image, ratio, n - p - q)
}

/// `H ↦ (H + p) ∪ {n-q+1, ..., n}`.
pub fn phi_a_inverse(set: &FiniteSet, ratio: Ratio, n: u64) -> Result<FiniteSet> {
    let (p, q) = (ratio.p(), ratio.q());
    if n <= p + q {
        return Err(Error::Domain(format!(
            "S^{ratio}_{} is empty for n = {n}",
            n.saturating_sub(p + q)
        )));
    }
    let target = n - p - q;
    if !is_in_spq_family(set, ratio, target) {
        return Err(Error::Domain(format!("{set} is not in S^{ratio}_{target}")));
    }
    let pre: Vec<u64> = set
        .elements()
        .iter()
        .map(|&x| x + p)
        .chain(n - q + 1..=n)
        .collect();
    let out = checked_image(pre, ratio, n)?;
    debug_assert!(contains_window(&out, ratio, n));
    Ok(out)
}

/// Sizes of a bijection verified element by element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BijectionCheck {
    pub domain: usize,
    pub codomain: usize,
}

fn check_bijection<F, G>(
    label: &str,
    domain: &[FiniteSet],
    codomain: &[FiniteSet],
    forward: F,
    backward: G,
) -> Result<BijectionCheck>
where
    F: Fn(&FiniteSet) -> Result<FiniteSet>,
    G: Fn(&FiniteSet) -> Result<FiniteSet>,
{
    let fail = |msg: String| Error::Precondition(format!("{label}: {msg}"));
    let mut image = BTreeSet::new();
    for f in domain {
        let h = forward(f).map_err(|e| fail(format!("forward({f}) failed: {e}")))?;
        let back = backward(&h).map_err(|e| fail(format!("backward({h}) failed: {e}")))?;
        if &back != f {
            return Err(fail(format!("backward(forward({f})) = {back}")));
        }
        if !image.insert(h.clone()) {
            return Err(fail(format!("not injective: two sets map to {h}")));
        }
    }
    let expected: BTreeSet<FiniteSet> = codomain.iter().cloned().collect();
    if image != expected {
        let missing = expected.difference(&image).next();
        return Err(fail(match missing {
            Some(h) => format!("not surjective: {h} has no preimage"),
            None => "image escapes the target family".to_string(),
        }));
    }
    for h in codomain {
        let f = backward(h).map_err(|e| fail(format!("backward({h}) failed: {e}")))?;
        if &forward(&f)? != h {
            return Err(fail(format!("forward(backward({h})) differs")));
        }
    }
    Ok(BijectionCheck {
        domain: domain.len(),
        codomain: codomain.len(),
    })
}

/// Checks, against the oracle, that `phi_g` is a bijection `A_G → S_{n-|G|}`
/// with `phi_g_inverse` as two-sided inverse.
pub fn check_gap_bijection(gaps: &GapSet) -> Result<BijectionCheck> {
    let (n, ratio) = (gaps.n, gaps.ratio);
    require_lemma_range(n, ratio)?;
    let domain: Vec<FiniteSet> = enumerate_spq(n, ratio)?
        .members
        .into_iter()
        .filter(|f| gaps.members.iter().all(|&g| !f.contains(g)))
        .collect();
    let codomain = enumerate_spq(gaps.target_n(), ratio)?.members;
    check_bijection(
        &format!("phi_G at n={n}, r={ratio}, G={:?}", gaps.members),
        &domain,
        &codomain,
        |f| phi_g(f, gaps),
        |h| phi_g_inverse(h, gaps),
    )
}

/// Checks, against the oracle, that `phi_a` is a bijection `A → S_{n-(p+q)}`.
/// Both sides may be empty.
pub fn check_window_bijection(n: u64, ratio: Ratio) -> Result<BijectionCheck> {
    require_lemma_range(n, ratio)?;
    let domain: Vec<FiniteSet> = enumerate_spq(n, ratio)?
        .members
        .into_iter()
        .filter(|f| contains_window(f, ratio, n))
        .collect();
    let target = n - ratio.p() - ratio.q();
    let codomain = if target == 0 {
        Vec::new()
    } else {
        enumerate_spq(target, ratio)?.members
    };
    check_bijection(
        &format!("phi at n={n}, r={ratio}"),
        &domain,
        &codomain,
        |f| phi_a(f, ratio, n),
        |h| phi_a_inverse(h, ratio, n),
    )
}

/// The layered inclusion–exclusion count of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IeDecomposition {
    pub n: u64,
    pub ratio: Ratio,
    /// `|A|`.
    pub a_count: Count,
    /// `layer_sums[i-1] = Σ_{|G| = i} |A_G|` for `i = 1..=q`.
    pub layer_sums: Vec<Count>,
    /// `|A| + Σ_i (-1)^{i+1} layer_sums[i-1]`.
    pub assembled: Count,
}

pub fn inclusion_exclusion_decomposition(n: u64, ratio: Ratio) -> Result<IeDecomposition> {
    require_lemma_range(n, ratio)?;
    let members = enumerate_spq(n, ratio)?.members;
    let q = ratio.q() as usize;
    let a_count = Count::from(
        members
            .iter()
            .filter(|f| contains_window(f, ratio, n))
            .count(),
    );
    let mut layer_sums = vec![Count::zero(); q];
    for gaps in GapSet::all(n, ratio)? {
        let hits = members
            .iter()
            .filter(|f| gaps.members.iter().all(|&g| !f.contains(g)))
            .count();
        layer_sums[gaps.len() - 1] += hits;
    }
    let mut plus = a_count.clone();
    let mut minus = Count::zero();
    for (i, s) in layer_sums.iter().enumerate() {
        if i % 2 == 0 {
            plus += s;
        } else {
            minus += s;
        }
    }
    Ok(IeDecomposition {
        n,
        ratio,
        a_count,
        layer_sums,
        assembled: plus - minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: u64, q: u64) -> Ratio {
        Ratio::new(p, q).unwrap()
    }

    fn set(xs: &[u64]) -> FiniteSet {
        FiniteSet::new(xs.to_vec()).unwrap()
    }

    fn gap(n: u64, ratio: Ratio, xs: &[u64]) -> GapSet {
        GapSet::new(n, ratio, xs.iter().copied()).unwrap()
    }

    #[test]
    fn psi_tables() {
        let g = gap(4, r(1, 2), &[3]);
        assert_eq!(psi_map(&g).pairs(), [(1, 1), (2, 2), (4, 3)]);
        let g = gap(5, r(1, 1), &[4]);
        assert_eq!(psi_map(&g).pairs(), [(1, 1), (2, 2), (3, 3), (5, 4)]);
        let g = gap(3, r(1, 1), &[2]);
        assert_eq!(psi_map(&g).pairs(), [(1, 1), (3, 2)]);
    }

    #[test]
    fn psi_inverse_roundtrip() {
        let g = gap(9, r(1, 4), &[5, 7, 8]);
        let psi = psi_map(&g);
        let table = psi.pairs();
        assert_eq!(table.len(), 6);
        assert!(table.windows(2).all(|w| w[0].1 < w[1].1));
        for (i, j) in table {
            assert_eq!(psi.backward(j), Some(i));
        }
        assert_eq!(psi.forward(7), None);
        assert_eq!(psi.backward(7), None);
    }

    #[test]
    fn gap_set_validation() {
        assert!(GapSet::new(4, r(1, 2), []).is_err());
        assert!(GapSet::new(4, r(1, 2), [1]).is_err());
        assert!(GapSet::new(4, r(1, 2), [4]).is_err());
        assert!(GapSet::new(2, r(1, 2), [1]).is_err());
        assert_eq!(GapSet::all(6, r(1, 3)).unwrap().len(), 7);
    }

    #[test]
    fn phi_g_examples() {
        let g = gap(4, r(1, 2), &[3]);
        assert_eq!(phi_g(&set(&[2, 4]), &g).unwrap(), set(&[2, 3]));
        assert_eq!(phi_g(&set(&[4]), &g).unwrap(), set(&[3]));
        let g1 = gap(3, r(1, 1), &[2]);
        assert_eq!(phi_g(&set(&[3]), &g1).unwrap(), set(&[2]));
    }

    #[test]
    fn phi_g_inverse_examples() {
        let g = gap(4, r(1, 2), &[3]);
        assert_eq!(phi_g_inverse(&set(&[2, 3]), &g).unwrap(), set(&[2, 4]));
        assert_eq!(phi_g_inverse(&set(&[3]), &g).unwrap(), set(&[4]));
        let g1 = gap(3, r(1, 1), &[2]);
        assert_eq!(phi_g_inverse(&set(&[2]), &g1).unwrap(), set(&[3]));
    }

    #[test]
    fn phi_g_domain_errors() {
        let g = gap(4, r(1, 2), &[3]);
        assert!(matches!(phi_g(&set(&[3, 4]), &g), Err(Error::Domain(_))));
        assert!(matches!(phi_g(&set(&[1, 2, 4]), &g), Err(Error::Domain(_))));
        assert!(matches!(phi_g(&set(&[2, 3]), &g), Err(Error::Domain(_))));
        assert!(matches!(
            phi_g_inverse(&set(&[1, 2, 3]), &g),
            Err(Error::Domain(_))
        ));
        // n < p+q
        let g = gap(3, r(2, 2), &[2]);
        assert!(matches!(phi_g(&set(&[3]), &g), Err(Error::Domain(_))));
    }

    #[test]
    fn phi_a_examples() {
        assert_eq!(phi_a(&set(&[2, 3]), r(1, 1), 3).unwrap(), set(&[1]));
        assert_eq!(phi_a(&set(&[2, 3, 4]), r(1, 2), 4).unwrap(), set(&[1]));
        // {3,4} fails 1·3 ≥ 2·2, so A is empty for (2,1) at n=4.
        assert!(matches!(
            phi_a(&set(&[3, 4]), r(2, 1), 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            phi_a(&set(&[4]), r(1, 2), 4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn phi_a_inverse_examples() {
        assert_eq!(phi_a_inverse(&set(&[1]), r(1, 1), 3).unwrap(), set(&[2, 3]));
        assert_eq!(
            phi_a_inverse(&set(&[1]), r(1, 2), 4).unwrap(),
            set(&[2, 3, 4])
        );
        assert_eq!(phi_a_inverse(&set(&[2]), r(1, 1), 4).unwrap(), set(&[3, 4]));
        assert!(matches!(
            phi_a_inverse(&set(&[1]), r(1, 1), 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            phi_a_inverse(&set(&[2]), r(1, 1), 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn decomposition_examples() {
        let d = inclusion_exclusion_decomposition(4, r(1, 2)).unwrap();
        assert_eq!(d.a_count, Count::from(1u8));
        assert_eq!(d.layer_sums, [Count::from(6u8), Count::from(2u8)]);
        assert_eq!(d.assembled, Count::from(5u8));

        let d = inclusion_exclusion_decomposition(3, r(1, 1)).unwrap();
        assert_eq!(
            (d.a_count, d.layer_sums, d.assembled),
            (1u8.into(), vec![1u8.into()], 2u8.into())
        );

        let d = inclusion_exclusion_decomposition(2, r(1, 1)).unwrap();
        assert_eq!(
            (d.a_count, d.layer_sums, d.assembled),
            (0u8.into(), vec![1u8.into()], 1u8.into())
        );

        assert!(inclusion_exclusion_decomposition(2, r(1, 2)).is_err());
        assert!(matches!(
            inclusion_exclusion_decomposition(31, r(1, 1)),
            Err(Error::OracleGuard { .. })
        ));
    }

    #[test]
    fn small_bijection_checks() {
        let g = gap(6, r(1, 2), &[4, 5]);
        let c = check_gap_bijection(&g).unwrap();
        assert_eq!(c.domain, c.codomain);
        let c = check_window_bijection(4, r(2, 1)).unwrap();
        assert_eq!(
            c,
            BijectionCheck {
                domain: 0,
                codomain: 0
            }
        );
        let c = check_window_bijection(3, r(1, 2)).unwrap();
        assert_eq!(
            c,
            BijectionCheck {
                domain: 0,
                codomain: 0
            }
        );
    }
}
