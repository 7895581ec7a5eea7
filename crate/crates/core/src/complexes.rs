//! Complexes as graded term data: Koszul, generalized staircase, symplectic
//! staircase and secondary staircase complexes, the truncation classes `𝒦^α_l`,
//! and the K-theoretic exactness check.
//!
//! Differentials are not represented; every check is in the Grothendieck group
//! of equivariant bundles, expressed in the basis of Levi irreducibles.

use num_bigint::BigInt;
use num_traits::One;

use crate::bbw::{
    exterior, pullback, pushforward, symmetric, Projection, Space, Taut, VirtualBundle,
};
use crate::characters::Character;
use crate::error::{Error, Result};
use crate::staircase::Staircase;
use crate::weights::{is_diagram, is_dominant, negate};

/// One term of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexTerm {
    pub degree: i64,
    /// K-class of the term (all entries in degree 0).
    pub class: VirtualBundle,
    /// Human-readable description.
    pub label: String,
    /// LaTeX rendering.
    pub latex: String,
    /// Staircase index `i`, where meaningful.
    pub index: Option<i64>,
    /// `b^i`, where meaningful.
    pub b: Option<i64>,
}

/// A complex of (virtual) bundles on one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub name: String,
    pub space: Space,
    /// Terms in strictly increasing degree.
    pub terms: Vec<ComplexTerm>,
    /// Claimed cohomology, with degrees.
    pub claimed: Option<VirtualBundle>,
}

impl ChainComplex {
    /// Assemble a complex, dropping zero terms and checking degrees and spaces.
    pub fn new(
        name: String,
        space: Space,
        terms: Vec<ComplexTerm>,
        claimed: Option<VirtualBundle>,
    ) -> Result<Self> {
        let mut terms: Vec<ComplexTerm> =
            terms.into_iter().filter(|t| !t.class.is_zero()).collect();
        terms.sort_by_key(|t| t.degree);
        if terms.windows(2).any(|w| w[0].degree == w[1].degree) {
            return Err(Error::OutOfRange("two terms share a degree".into()));
        }
        for t in &terms {
            if let Some(s) = t.class.space()? {
                if s != space {
                    return Err(Error::SpaceMismatch(space.name(), s.name()));
                }
            }
        }
        if let Some(c) = &claimed {
            if let Some(s) = c.space()? {
                if s != space {
                    return Err(Error::SpaceMismatch(space.name(), s.name()));
                }
            }
        }
        Ok(ChainComplex {
            name,
            space,
            terms,
            claimed,
        })
    }

    /// `Σ (−1)^deg [term]` in degree 0.
    pub fn euler_class(&self) -> VirtualBundle {
        let mut acc = VirtualBundle::default();
        for t in &self.terms {
            acc.add_assign(&t.class.shifted(t.degree));
        }
        acc.euler_class()
    }
}

/// Outcome of [`check_ktheory_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KReport {
    pub exact_in_k: bool,
    /// `Σ(−1)^deg[term] − Σ(−1)^deg[claimed]` in the Levi-irreducible basis.
    pub defect: VirtualBundle,
}

impl KReport {
    /// The defect as a torus character of the Levi.
    pub fn defect_character(&self) -> Result<Character> {
        self.defect.torus_character()
    }
}

/// Compare the alternating sum of the terms with the claimed cohomology (or zero).
pub fn check_ktheory_exact(c: &ChainComplex) -> Result<KReport> {
    let mut all = VirtualBundle::default();
    for t in &c.terms {
        all.add_assign(&t.class);
    }
    all.space()?;
    let mut defect = c.euler_class();
    if let Some(cl) = &c.claimed {
        defect.add_assign(&cl.euler_class().negated());
    }
    defect.space()?;
    Ok(KReport {
        exact_in_k: defect.is_zero(),
        defect,
    })
}

// ---------------------------------------------------------------------------
// Helpers

fn levi_weight(space: &Space, blocks: &[&[i64]], sp: &[i64]) -> Vec<i64> {
    let mut w = Vec::with_capacity(space.rank());
    for (j, &size) in space.blocks().iter().enumerate() {
        let b = blocks.get(j).copied().unwrap_or(&[]);
        w.extend_from_slice(b);
        w.extend(std::iter::repeat_n(0, size.saturating_sub(b.len())));
    }
    w.extend_from_slice(sp);
    w.resize(space.rank(), 0);
    w
}

/// `Σ^λ U^∨ ⊗ Σ^μ_Sp S` on a Grassmannian-type space (first block is `U^∨`).
pub fn schur_bundle(space: &Space, lambda: &[i64], mu: &[i64]) -> Result<VirtualBundle> {
    VirtualBundle::irreducible(space, levi_weight(space, &[lambda], mu))
}

fn fmt_w(w: &[i64]) -> String {
    w.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn ambient_rank(space: &Space) -> usize {
    match space.sp_rank() {
        Some(_) => 2 * space.rank(),
        None => space.rank(),
    }
}

fn grassmannian_k(space: &Space) -> Result<usize> {
    let ok = match space.sp_rank() {
        Some(_) => space.blocks().len() == 1,
        None => space.blocks().len() == 2,
    };
    if !ok {
        return Err(Error::Unsupported(format!(
            "{} is not a (isotropic) Grassmannian",
            space.name()
        )));
    }
    Ok(space.blocks()[0])
}

// ---------------------------------------------------------------------------
// Koszul

/// `Λ^m Q^∨ → Λ^m V^∨ → Λ^{m−1}V^∨ ⊗ U^∨ → … → S^m U^∨`, twisted by `O(twist)`,
/// in degrees `0, 1, …, m+1`.
pub fn build_koszul(m: usize, space: &Space, twist: i64) -> Result<ChainComplex> {
    grassmannian_k(space)?;
    let mut terms = vec![ComplexTerm {
        degree: 0,
        class: exterior(space, Taut::QDual, m)?.twisted(twist),
        label: format!("Λ^{m} Q^∨({twist})"),
        latex: format!("\\Lambda^{{{m}}}\\mathcal{{Q}}^\\vee({twist})"),
        index: None,
        b: None,
    }];
    for j in 0..=m {
        let class = exterior(space, Taut::VDual, m - j)?
            .tensor(&symmetric(space, Taut::UDual, j)?)?
            .twisted(twist);
        terms.push(ComplexTerm {
            degree: j as i64 + 1,
            class,
            label: format!("Λ^{} V^∨ ⊗ S^{j} U^∨({twist})", m - j),
            latex: format!(
                "\\Lambda^{{{}}}V^\\vee\\otimes S^{{{j}}}\\mathcal{{U}}^\\vee({twist})",
                m - j
            ),
            index: Some(j as i64),
            b: None,
        });
    }
    ChainComplex::new(format!("koszul m={m}"), space.clone(), terms, None)
}

// ---------------------------------------------------------------------------
// Generalized staircase

/// The term `Λ^{b} V^∨ ⊗ Σ^{β} U^∨`.
fn wedge_v_times(space: &Space, b: i64, beta: &[i64]) -> Result<VirtualBundle> {
    if b < 0 || b as usize > ambient_rank(space) {
        return Ok(VirtualBundle::default());
    }
    exterior(space, Taut::VDual, b as usize)?.tensor(&schur_bundle(space, beta, &[])?)
}

/// Generalized staircase complex of `α = (α_1; ᾱ)` on `Gr(k, r)` or `IGr(k, 2n)`:
/// term `i` is `Λ^{b^i} V^∨ ⊗ Σ^{α^(i)} U^∨` in degree `−i`, `0 ≤ i ≤ 𝕞(α)`.
pub fn build_generalized_staircase(alpha: &[i64], space: &Space) -> Result<ChainComplex> {
    let k = grassmannian_k(space)?;
    if alpha.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: alpha.len(),
        });
    }
    let s = Staircase::new(alpha)?;
    let r = ambient_rank(space);
    let mut terms = Vec::new();
    for i in 0..=s.m(r) as i64 {
        let (b, ai) = (s.b(i), s.alpha_i(i));
        terms.push(ComplexTerm {
            degree: -i,
            class: wedge_v_times(space, b, &ai)?,
            label: format!("Λ^{b} V^∨ ⊗ Σ^({}) U^∨", fmt_w(&ai)),
            latex: format!(
                "\\Lambda^{{{b}}}V^\\vee\\otimes\\Sigma^{{{}}}\\mathcal{{U}}^\\vee",
                fmt_w(&ai)
            ),
            index: Some(i),
            b: Some(b),
        });
    }
    ChainComplex::new(
        format!("generalized staircase α=({})", fmt_w(alpha)),
        space.clone(),
        terms,
        None,
    )
}

// ---------------------------------------------------------------------------
// Truncation classes

/// The class of `𝒦^α_l`, computed from both halves of the generalized staircase complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    pub alpha: Vec<i64>,
    pub l: usize,
    pub space: Space,
    /// `δ = α_1 + 𝕧(α)`
    pub delta: i64,
    /// `𝕞(α)`
    pub m: usize,
    /// `r_α = #{j ≥ 2 : α_j > 0}`
    pub r_alpha: usize,
    /// `Σ_{i=0}^{δ} (−1)^{δ−i}[C_i]`
    pub kernels: VirtualBundle,
    /// `Σ_{i=δ+1}^{m} (−1)^{i−δ−1}[C_i]`
    pub cokernels: VirtualBundle,
}

impl KClass {
    pub fn class(&self) -> &VirtualBundle {
        &self.kernels
    }

    pub fn resolutions_agree(&self) -> bool {
        self.kernels == self.cokernels
    }
}

/// `𝒦^α_l` on `Gr(l, r)` or `IGr(l, 2n)`.
pub fn k_class(alpha: &[i64], space: &Space) -> Result<KClass> {
    let l = grassmannian_k(space)?;
    if alpha.len() != l {
        return Err(Error::LengthMismatch {
            expected: l,
            got: alpha.len(),
        });
    }
    let s = Staircase::new(alpha)?;
    let m = s.m(ambient_rank(space));
    let delta = s.delta();
    let mut kernels = VirtualBundle::default();
    let mut cokernels = VirtualBundle::default();
    for i in 0..=m as i64 {
        let c = wedge_v_times(space, s.b(i), &s.alpha_i(i))?;
        if i <= delta {
            let sign = if (delta - i) % 2 == 0 { 1 } else { -1 };
            kernels.add_scaled(&c, &BigInt::from(sign));
        } else {
            let sign = if (i - delta - 1) % 2 == 0 { 1 } else { -1 };
            cokernels.add_scaled(&c, &BigInt::from(sign));
        }
    }
    let r_alpha = alpha[1..].iter().filter(|&&a| a > 0).count();
    Ok(KClass {
        alpha: alpha.to_vec(),
        l,
        space: space.clone(),
        delta,
        m,
        r_alpha,
        kernels,
        cokernels,
    })
}

/// `𝒞^α_l = (𝒦^α_l)^∨`
pub fn c_class(alpha: &[i64], space: &Space) -> Result<VirtualBundle> {
    Ok(k_class(alpha, space)?.kernels.dual())
}

/// `𝔰(α) = (2n−l−α_1, −α_l, …, −α_2)`, where `ambient = 2n`.
pub fn dual_weight(alpha: &[i64], ambient: usize) -> Vec<i64> {
    let l = alpha.len() as i64;
    let mut w = vec![ambient as i64 - l - alpha[0]];
    w.extend(negate(&alpha[1..]));
    w
}

// ---------------------------------------------------------------------------
// Symplectic staircase

/// The self-dual complex on `IGr(2a, 2n)` for `μ ∈ YD_{n−2a}` with `μ_1 = a`,
/// in degrees `0, …, 2a+1`.
pub fn build_symplectic_staircase(mu: &[i64], n: usize) -> Result<ChainComplex> {
    let a = *mu
        .first()
        .ok_or_else(|| Error::OutOfRange("empty μ".into()))?;
    if a <= 0 || 2 * a as usize >= n {
        return Err(Error::OutOfRange(format!(
            "need 0 < μ_1 = {a} < n/2 = {n}/2"
        )));
    }
    let a_us = a as usize;
    if mu.len() != n - 2 * a_us {
        return Err(Error::LengthMismatch {
            expected: n - 2 * a_us,
            got: mu.len(),
        });
    }
    if !is_diagram(mu) {
        return Err(Error::NotDiagram(mu.to_vec()));
    }
    let space = Space::igr(2 * a_us, n)?;
    let s = Staircase::new(mu)?;
    let sp = |w: &[i64]| schur_bundle(&space, &[], w);
    let mut terms = Vec::new();
    let mut push =
        |degree: i64, class: VirtualBundle, label: String, latex: String, i: Option<i64>| {
            let b = i.map(|i| s.b(i));
            terms.push(ComplexTerm {
                degree,
                class,
                label,
                latex,
                index: i,
                b,
            });
        };
    push(
        0,
        sp(mu)?.twisted(-1),
        format!("Σ^({})_Sp S(−H)", fmt_w(mu)),
        format!(
            "\\Sigma^{{{}}}_{{\\mathrm{{Sp}}}}\\mathcal{{S}}(-H)",
            fmt_w(mu)
        ),
        None,
    );
    for i in 1..=a {
        let (b, mi) = (s.b(i), s.alpha_i(i));
        let class = exterior(&space, Taut::Q, b as usize)?
            .tensor(&sp(&mi)?)?
            .twisted(-1);
        push(
            i,
            class,
            format!("Λ^{b} Q ⊗ Σ^({})_Sp S(−H)", fmt_w(&mi)),
            format!("\\Lambda^{{{b}}}\\mathcal{{Q}}\\otimes\\Sigma^{{{}}}_{{\\mathrm{{Sp}}}}\\mathcal{{S}}(-H)", fmt_w(&mi)),
            Some(i),
        );
    }
    for j in 1..=a {
        let i = a + 1 - j;
        let (b, mi) = (s.b(i), s.alpha_i(i));
        let class = exterior(&space, Taut::QDual, b as usize)?.tensor(&sp(&mi)?)?;
        push(
            a + j,
            class,
            format!("Λ^{b} Q^∨ ⊗ Σ^({})_Sp S", fmt_w(&mi)),
            format!("\\Lambda^{{{b}}}\\mathcal{{Q}}^\\vee\\otimes\\Sigma^{{{}}}_{{\\mathrm{{Sp}}}}\\mathcal{{S}}", fmt_w(&mi)),
            Some(i),
        );
    }
    push(
        2 * a + 1,
        sp(mu)?,
        format!("Σ^({})_Sp S", fmt_w(mu)),
        format!("\\Sigma^{{{}}}_{{\\mathrm{{Sp}}}}\\mathcal{{S}}", fmt_w(mu)),
        None,
    );
    ChainComplex::new(
        format!("symplectic staircase μ=({})", fmt_w(mu)),
        space,
        terms,
        None,
    )
}

// ---------------------------------------------------------------------------
// Secondary staircase

/// `Φ_λ(E) = q_{k−2*}(Σ^λ(U_k/U_2) ⊗ p_{k−2}^* E)` for `E = Σ^θ_Sp S_{2(n−2)}` on `IGr(2, 2n)`.
pub fn phi(lambda: &[i64], theta: &[i64], k: usize, n: usize) -> Result<VirtualBundle> {
    if k < 2 || k > n || lambda.len() != k - 2 {
        return Err(Error::OutOfRange(format!(
            "Φ needs 2 ≤ k ≤ n and λ of length k−2 (k={k}, n={n})"
        )));
    }
    let src = Space::flag(vec![2, k - 2], Some(n - k))?;
    let base = Space::igr(2, n)?;
    let e = VirtualBundle::irreducible(&base, levi_weight(&base, &[&[0, 0]], theta))?;
    let pulled = pullback(&e, Projection::AbsorbLast, &src)?;
    let kernel = VirtualBundle::irreducible(
        &src,
        levi_weight(&src, &[&[0, 0], &negate(lambda)], &vec![0; n - k]),
    )?;
    let out = pushforward(&kernel.tensor(&pulled)?, Projection::MergeBlocks(0))?;
    Ok(out.with_space(&Space::igr(k, n)?))
}

fn lambda_sp(r: usize, m: usize) -> Vec<i64> {
    (0..m).map(|i| i64::from(i < r)).collect()
}

/// Claimed cohomology of the secondary staircase complex.
pub fn secondary_claimed(alpha: &[i64], k: usize, n: usize) -> Result<VirtualBundle> {
    let a1 = alpha[0];
    let lam: Vec<i64> = alpha[1..].iter().map(|x| x - 1).collect();
    let (nk, a1u) = (n as i64 - k as i64, a1);
    let (r, shift) = if (0..=nk).contains(&a1u) {
        ((a1 + k as i64 - 2) as usize, 0)
    } else if a1u == nk + 1 {
        return Ok(VirtualBundle::default());
    } else {
        ((2 * n as i64 - k as i64 - a1) as usize, 1)
    };
    let f = phi(&lam, &lambda_sp(r, n - 2), k, n)?;
    Ok(f.twisted(1).dual().shifted(shift))
}

/// The secondary staircase complex `ℋ_k^{(2n−k, α)}` on `IGr(k, 2n)`
/// for `α ∈ YD^{2n−k}_1 × YD^{2n−k}_{k−2}`.
///
/// Term `i` (for `0 ≤ i ≤ δ = α_1 + 𝕧(α)`) is `𝒦_k^{(2n−k−b^i, α^(i))}` in degree `δ − i`.
pub fn build_secondary_staircase(alpha: &[i64], k: usize, n: usize) -> Result<ChainComplex> {
    if k < 2 || k > n {
        return Err(Error::OutOfRange(format!("need 2 ≤ k ≤ n (k={k}, n={n})")));
    }
    if alpha.len() != k - 1 {
        return Err(Error::LengthMismatch {
            expected: k - 1,
            got: alpha.len(),
        });
    }
    let w = 2 * n as i64 - k as i64;
    if alpha[0] < 0
        || alpha[0] > w
        || !is_diagram(&alpha[1..])
        || alpha.get(1).is_some_and(|&x| x > w)
    {
        return Err(Error::OutOfRange(format!(
            "α=({}) outside YD^{w}_1 × YD^{w}_{}",
            fmt_w(alpha),
            k - 2
        )));
    }
    let space = Space::igr(k, n)?;
    let s = Staircase::new(alpha)?;
    let delta = s.delta();
    let mut terms = Vec::new();
    for i in 0..=delta {
        let b = s.b(i);
        let mut kw = vec![w - b];
        kw.extend(s.alpha_i(i));
        let kc = k_class(&kw, &space)?;
        terms.push(ComplexTerm {
            degree: delta - i,
            class: kc.kernels,
            label: format!("K_{k}^({})", fmt_w(&kw)),
            latex: format!("\\mathcal{{K}}_{{{k}}}^{{({})}}", fmt_w(&kw)),
            index: Some(i),
            b: Some(b),
        });
    }
    let claimed = secondary_claimed(alpha, k, n)?;
    ChainComplex::new(
        format!("secondary staircase H_{k}^(2n-k;{})", fmt_w(alpha)),
        space,
        terms,
        Some(claimed),
    )
}

/// The terms of a secondary staircase complex with `1 ≤ b^i ≤ t`, order preserved.
pub fn tau_truncate(h: &ChainComplex, t: i64) -> Vec<ComplexTerm> {
    h.terms
        .iter()
        .filter(|term| term.b.is_some_and(|b| 1 <= b && b <= t))
        .cloned()
        .collect()
}

/// The defining weights `(2n−k−b^i, α^(i))` of the τ-truncation, without building classes.
pub fn tau_weights(alpha: &[i64], k: usize, n: usize, t: i64) -> Result<Vec<Vec<i64>>> {
    let s = Staircase::new(alpha)?;
    let w = 2 * n as i64 - k as i64;
    Ok((0..=s.delta())
        .filter(|&i| (1..=t).contains(&s.b(i)))
        .map(|i| {
            let mut kw = vec![w - s.b(i)];
            kw.extend(s.alpha_i(i));
            kw
        })
        .collect())
}

/// Sanity helper: `Σ^λ U^∨` weight check used by builders.
pub fn is_gl_weight(w: &[i64]) -> bool {
    is_dominant(w)
}

/// `O` on a space, as a one-term class.
pub fn structure_sheaf(space: &Space) -> VirtualBundle {
    VirtualBundle::structure_sheaf(space)
}

/// Multiply a class by an integer.
pub fn scale(v: &VirtualBundle, k: i64) -> VirtualBundle {
    v.scaled(&(BigInt::one() * k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_small() {
        let s = Space::gr(2, 4).unwrap();
        for m in 0..=3 {
            let c = build_koszul(m, &s, 0).unwrap();
            assert!(check_ktheory_exact(&c).unwrap().exact_in_k, "m={m}");
        }
        let c = build_koszul(1, &Space::igr(2, 3).unwrap(), 0).unwrap();
        assert_eq!(c.terms.len(), 3);
        assert!(check_ktheory_exact(&c).unwrap().exact_in_k);
    }

    #[test]
    fn gsc_small() {
        let s = Space::gr(2, 4).unwrap();
        let c = build_generalized_staircase(&[-1, 2], &s).unwrap();
        assert!(check_ktheory_exact(&c).unwrap().exact_in_k);
    }

    #[test]
    fn ssc_small() {
        let c = build_symplectic_staircase(&[1], 3).unwrap();
        assert_eq!(c.terms.len(), 4);
        assert!(check_ktheory_exact(&c).unwrap().exact_in_k);
    }

    #[test]
    fn secondary_base_case() {
        for n in 2..=4usize {
            for b in 0..=(2 * n as i64 - 2) {
                let h = build_secondary_staircase(&[b], 2, n).unwrap();
                let r = check_ktheory_exact(&h).unwrap();
                assert!(r.exact_in_k, "n={n} b={b}: {:?}", r.defect);
            }
        }
    }
}
