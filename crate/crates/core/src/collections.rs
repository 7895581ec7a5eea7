//! Exceptional blocks on `IGr(k, 2n)`, the objects `ℱ^{λ;μ}_t = (ℰ^{λ;μ}_t)^∨`
//! as virtual bundles, and the verification suites.
//!
//! Cohomology of a non-irreducible bundle is computed from its class, i.e. from
//! the associated graded. For bundles this bounds the true cohomology degreewise
//! and agrees with it in Euler characteristic; reports record both.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bbw::{ext_groups, pullback, pushforward, Projection, Space, VirtualBundle};
use crate::error::{Error, Result};
use crate::weights::{
    binomial, enumerate_diagrams, is_diagram, kp_prec, negate, pad, total_order_key, BlockWeight,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    Small,
    Big,
}

/// A block of Levi weights `(λ; μ)` with `λ ∈ YD_t`, `μ ∈ YD_{n−k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub kind: BlockKind,
    pub a_t: i64,
    /// Sorted by [`total_order_key`].
    pub weights: Vec<BlockWeight>,
}

pub fn a_t(k: usize, t: usize) -> i64 {
    ((k - t) / 2) as i64
}

/// Width bound on `λ` for block `t`.
pub fn gl_width(n: usize, k: usize, t: usize, kind: BlockKind) -> i64 {
    let w = 2 * n as i64 - k as i64 - t as i64;
    match kind {
        BlockKind::Small => w,
        BlockKind::Big => w + 1,
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("need 1 ≤ k ≤ n (n={n}, k={k})")));
    }
    Ok(())
}

pub fn block(n: usize, k: usize, t: usize, kind: BlockKind) -> Result<Block> {
    check_nk(n, k)?;
    if t > k {
        return Err(Error::OutOfRange(format!("block index {t} > k = {k}")));
    }
    let a = a_t(k, t);
    let mut weights = Vec::new();
    for lam in enumerate_diagrams(t, gl_width(n, k, t, kind)) {
        for mu in enumerate_diagrams(n - k, a) {
            weights.push(BlockWeight::new(lam.to_vec(), mu.into_vec())?);
        }
    }
    weights.sort_by_key(total_order_key);
    Ok(Block {
        n,
        k,
        t,
        kind,
        a_t: a,
        weights,
    })
}

impl Block {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &BlockWeight) -> bool {
        self.weights
            .binary_search_by_key(&total_order_key(w), total_order_key)
            .is_ok()
    }

    pub fn space(&self) -> Result<Space> {
        Space::igr(self.k, self.n)
    }
}

/// `[B_0, …, B_k]` and `[B̃_0, …, B̃_k]`.
pub fn blocks(n: usize, k: usize) -> Result<(Vec<Block>, Vec<Block>)> {
    let small = (0..=k)
        .map(|t| block(n, k, t, BlockKind::Small))
        .collect::<Result<_>>()?;
    let big = (0..=k)
        .map(|t| block(n, k, t, BlockKind::Big))
        .collect::<Result<_>>()?;
    Ok((small, big))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub k: usize,
    pub sizes: Vec<usize>,
    pub total: u128,
    /// `2^k · C(n, k)`, the number of Schubert cells of `IGr(k, 2n)`.
    pub schubert_rank: u128,
    pub pass: bool,
}

pub fn census(n: usize, k: usize) -> Result<Census> {
    let (small, _) = blocks(n, k)?;
    let sizes: Vec<usize> = small.iter().map(Block::len).collect();
    let total = sizes.iter().map(|&s| s as u128).sum();
    let schubert_rank = (1u128 << k) * binomial(n as i64, k as i64);
    Ok(Census {
        n,
        k,
        sizes,
        total,
        schubert_rank,
        pass: total == schubert_rank,
    })
}

/// `Σ^λ U^∨ ⊗ Σ^μ_Sp S` on `IGr(k, 2n)` (the generator `U^{(λ;μ)}`), twisted by `O(twist)`.
pub fn generator(n: usize, k: usize, w: &BlockWeight, twist: i64) -> Result<VirtualBundle> {
    let space = Space::igr(k, n)?;
    if w.gl.len() > k || w.sp.len() != n - k {
        return Err(Error::LengthMismatch {
            expected: k + n - k,
            got: w.gl.len() + w.sp.len(),
        });
    }
    let mut lw = pad(&w.gl, k);
    lw.extend_from_slice(&w.sp);
    Ok(VirtualBundle::irreducible(&space, lw)?.twisted(twist))
}

/// `Σ^λ U_k ⊗ Σ^μ_Sp S`, the dual of the untwisted generator.
pub fn dual_generator(n: usize, k: usize, w: &BlockWeight) -> Result<VirtualBundle> {
    Ok(generator(n, k, w, 0)?.dual())
}

// ---------------------------------------------------------------------------
// ℱ objects

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FClassReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub virtual_class: VirtualBundle,
    /// All terms in degree 0 with positive multiplicity.
    pub concentrated_degree_zero: bool,
    /// Every constituent is `Σ^γ U_k ⊗ Σ^η_Sp S` with `(γ; η) ∈ B̃_t`.
    pub in_big_block_span: bool,
}

/// The block in which `(λ; μ)` must lie for `ℱ_t^{λ;μ}` to be described.
pub fn hypothesis_kind(k: usize, t: usize) -> BlockKind {
    if (k - t).is_multiple_of(2) {
        BlockKind::Big
    } else {
        BlockKind::Small
    }
}

/// `q_{t*}(Σ^{λ−a_t}(U_k/U_{k−t}) ⊗ p_t^* Σ^{μ̂}_Sp S_{2(n−k+t)})` for `1 ≤ t ≤ k−1`.
pub fn phi_hat(t: usize, lambda: &[i64], mu: &[i64], n: usize, k: usize) -> Result<VirtualBundle> {
    if t == 0 || t >= k {
        return Err(Error::OutOfRange(format!(
            "Φ̂^t needs 1 ≤ t ≤ k−1 (t={t}, k={k})"
        )));
    }
    if lambda.len() != t || mu.len() != n - k {
        return Err(Error::LengthMismatch {
            expected: t + n - k,
            got: lambda.len() + mu.len(),
        });
    }
    let a = a_t(k, t);
    let src = Space::ifl(k - t, k, n)?;
    let base = Space::igr(k - t, n)?;
    let mut hat = vec![a; t];
    hat.extend_from_slice(mu);
    let mut bw = vec![0; k - t];
    bw.extend(hat);
    let e = VirtualBundle::irreducible(&base, bw)?;
    let pulled = pullback(&e, Projection::AbsorbLast, &src)?;
    let shifted: Vec<i64> = lambda.iter().map(|x| x - a).collect();
    let mut kw = vec![0; k - t];
    kw.extend(negate(&shifted));
    kw.extend(std::iter::repeat_n(0, n - k));
    let kernel = VirtualBundle::irreducible(&src, kw)?;
    let out = pushforward(&kernel.tensor(&pulled)?, Projection::MergeBlocks(0))?;
    Ok(out.with_space(&Space::igr(k, n)?))
}

fn big_block_support(v: &VirtualBundle, n: usize, k: usize, t: usize) -> bool {
    let w = gl_width(n, k, t, BlockKind::Big);
    let a = a_t(k, t);
    v.terms().all(|((_, lw, _), _)| {
        let gamma = negate(&lw[..k]);
        let eta = &lw[k..];
        is_diagram(&gamma)
            && gamma[t..].iter().all(|&x| x == 0)
            && gamma.first().is_none_or(|&g| g <= w)
            && is_diagram(eta)
            && eta.first().is_none_or(|&e| e <= a)
    })
}

/// `ℱ_t^{λ;μ}` as a virtual bundle on `IGr(k, 2n)`.
pub fn f_class(t: usize, lambda: &[i64], mu: &[i64], n: usize, k: usize) -> Result<FClassReport> {
    check_nk(n, k)?;
    if t > k {
        return Err(Error::OutOfRange(format!("block index {t} > k = {k}")));
    }
    let w = BlockWeight::new(lambda.to_vec(), mu.to_vec())?;
    let blk = block(n, k, t, hypothesis_kind(k, t))?;
    if lambda.len() != t || !blk.contains(&w) {
        return Err(Error::OutOfRange(format!(
            "({w}) is not in the {:?} block {t} of IGr({k},{})",
            blk.kind,
            2 * n
        )));
    }
    let virtual_class = if t == 0 {
        generator(n, k, &w, 0)?
    } else if t + 1 >= k {
        dual_generator(n, k, &w)?
    } else {
        phi_hat(t, lambda, mu, n, k)?
    };
    let concentrated_degree_zero = virtual_class
        .terms()
        .all(|((_, _, d), m)| *d == 0 && *m > BigInt::zero());
    let in_big_block_span = big_block_support(&virtual_class, n, k, t);
    Ok(FClassReport {
        n,
        k,
        t,
        lambda: lambda.to_vec(),
        mu: mu.to_vec(),
        virtual_class,
        concentrated_degree_zero,
        in_big_block_span,
    })
}

// ---------------------------------------------------------------------------
// Dual characterization

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualRow {
    pub beta: BlockWeight,
    /// 1 on the diagonal, 0 below.
    pub expected: i64,
    /// Per-degree `dim Ext_G` computed from the class of ℱ.
    pub graded: BTreeMap<i64, BigInt>,
    pub euler: BigInt,
    pub graded_ok: bool,
    pub euler_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub weight: BlockWeight,
    pub rows: Vec<DualRow>,
    pub pass: bool,
}

/// One row of the δ-pattern: `Ext_G(Σ^β U_k ⊗ Σ^ν_Sp S, ℱ)` for `(β; ν) ⪯ (λ; μ)`.
pub fn dual_row(f: &FClassReport, beta: &BlockWeight) -> Result<DualRow> {
    let me = BlockWeight::new(f.lambda.clone(), f.mu.clone())?;
    if !kp_prec(beta, &me)? {
        return Err(Error::OutOfRange(format!("({beta}) is not below ({me})")));
    }
    let expected = i64::from(*beta == me);
    let graded = ext_groups(&dual_generator(f.n, f.k, beta)?, &f.virtual_class)?.invariant_dims();
    let euler: BigInt = graded
        .iter()
        .map(|(d, m)| if d % 2 == 0 { m.clone() } else { -m })
        .sum();
    let graded_ok = if expected == 1 {
        graded.len() == 1 && graded.get(&0).is_some_and(|m| m.is_one())
    } else {
        graded.is_empty()
    };
    let euler_ok = euler == BigInt::from(expected);
    Ok(DualRow {
        beta: beta.clone(),
        expected,
        graded,
        euler,
        graded_ok,
        euler_ok,
    })
}

/// The weights `(β; ν) ∈ B̃_t` with `(β; ν) ⪯ (λ; μ)`.
pub fn dual_candidates(t: usize, w: &BlockWeight, n: usize, k: usize) -> Result<Vec<BlockWeight>> {
    let big = block(n, k, t, BlockKind::Big)?;
    let mut out = Vec::new();
    for b in big.weights {
        if kp_prec(&b, w)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// Check `Ext_G(Σ^β U_k ⊗ Σ^ν_Sp S, ℱ^{λ;μ}_t)` against the δ-pattern over all
/// `(β; ν) ∈ B̃_t` with `(β; ν) ⪯ (λ; μ)`.
pub fn verify_dual_characterization(
    t: usize,
    lambda: &[i64],
    mu: &[i64],
    n: usize,
    k: usize,
) -> Result<DualReport> {
    let f = f_class(t, lambda, mu, n, k)?;
    let me = BlockWeight::new(lambda.to_vec(), mu.to_vec())?;
    let rows = dual_candidates(t, &me, n, k)?
        .iter()
        .map(|b| dual_row(&f, b))
        .collect::<Result<Vec<_>>>()?;
    let pass = rows.iter().all(|r| r.graded_ok);
    Ok(DualReport {
        n,
        k,
        t,
        weight: me,
        rows,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Exceptional blocks

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcFailure {
    pub alpha: BlockWeight,
    pub beta: BlockWeight,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub kind: BlockKind,
    pub pairs: usize,
    /// `dim Ext^i(U^α,U^β) = Σ_γ dim Ext_G^i(U^α,U^γ)·dim Hom(U^γ,U^β)` for all `i`.
    pub dimension_level_pass: bool,
    /// `Ext_G^•(U^α, U^β) = 0` whenever `α ≺ β` (the equivariant collection is
    /// ordered opposite to `⪯`).
    pub order_vanishing: bool,
    /// `Ext^{>0}(U^α, U^β) = 0` for all pairs.
    pub higher_ext_vanish: bool,
    pub failures: Vec<ExcFailure>,
}

impl ExcReport {
    pub fn pass(&self) -> bool {
        self.dimension_level_pass && self.order_vanishing
    }
}

pub fn verify_block_exceptionality(b: &Block) -> Result<ExcReport> {
    let gens: Vec<VirtualBundle> = b
        .weights
        .iter()
        .map(|w| generator(b.n, b.k, w, 0))
        .collect::<Result<_>>()?;
    let len = gens.len();
    let mut inv = vec![vec![BTreeMap::new(); len]; len];
    let mut full = vec![vec![BTreeMap::new(); len]; len];
    for i in 0..len {
        for j in 0..len {
            let g = ext_groups(&gens[i], &gens[j])?;
            inv[i][j] = g.invariant_dims();
            full[i][j] = g.dims()?;
        }
    }
    let mut failures = Vec::new();
    let (mut dim_ok, mut order_ok, mut higher_ok) = (true, true, true);
    let zero = BigInt::zero();
    for i in 0..len {
        for j in 0..len {
            let mut rhs: BTreeMap<i64, BigInt> = BTreeMap::new();
            for g in 0..len {
                let hom = full[g][j].get(&0).unwrap_or(&zero);
                if hom.is_zero() {
                    continue;
                }
                for (d, m) in &inv[i][g] {
                    *rhs.entry(*d).or_default() += m * hom;
                }
            }
            rhs.retain(|_, m| !m.is_zero());
            let (a, bw) = (&b.weights[i], &b.weights[j]);
            if rhs != full[i][j] {
                dim_ok = false;
                failures.push(ExcFailure {
                    alpha: a.clone(),
                    beta: bw.clone(),
                    reason: format!("dim Ext = {:?}, composition side = {:?}", full[i][j], rhs),
                });
            }
            if i != j && kp_prec(a, bw)? && !inv[i][j].is_empty() {
                order_ok = false;
                failures.push(ExcFailure {
                    alpha: a.clone(),
                    beta: bw.clone(),
                    reason: format!("Ext_G = {:?} although α ≺ β", inv[i][j]),
                });
            }
            if full[i][j].keys().any(|&d| d > 0) {
                higher_ok = false;
            }
        }
    }
    Ok(ExcReport {
        n: b.n,
        k: b.k,
        t: b.t,
        kind: b.kind,
        pairs: len * len,
        dimension_level_pass: dim_ok,
        order_vanishing: order_ok,
        higher_ext_vanish: higher_ok,
        failures,
    })
}

// ---------------------------------------------------------------------------
// Semiorthogonality

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiViolation {
    /// `(t', weight)` of the source, in block `t' > t`.
    pub source: (usize, BlockWeight),
    pub target: (usize, BlockWeight),
    pub ext_dims: BTreeMap<i64, BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiReport {
    pub n: usize,
    pub k: usize,
    pub total_pairs: usize,
    pub checked: usize,
    pub violations: Vec<SemiViolation>,
    pub pass: bool,
}

/// A generator of the collection: block index and weight.
pub type Placed = (usize, BlockWeight);

/// All cross-block generator pairs `(E' ∈ B_{t'}(t'), E ∈ B_t(t))` with `t' > t`.
pub fn semiorthogonality_pairs(n: usize, k: usize) -> Result<Vec<(Placed, Placed)>> {
    let (small, _) = blocks(n, k)?;
    let mut out = Vec::new();
    for hi in &small {
        for lo in small.iter().filter(|b| b.t < hi.t) {
            for a in &hi.weights {
                for b in &lo.weights {
                    out.push(((hi.t, a.clone()), (lo.t, b.clone())));
                }
            }
        }
    }
    Ok(out)
}

/// `Ext^•(E', E)` between twisted generators.
pub fn semi_pair_ext(
    n: usize,
    k: usize,
    src: &(usize, BlockWeight),
    dst: &(usize, BlockWeight),
) -> Result<BTreeMap<i64, BigInt>> {
    let a = generator(n, k, &src.1, src.0 as i64)?;
    let b = generator(n, k, &dst.1, dst.0 as i64)?;
    ext_groups(&a, &b)?.dims()
}

/// Check the pairs, evenly strided down to `budget` when given.
pub fn verify_collection_semiorthogonality(
    n: usize,
    k: usize,
    budget: Option<usize>,
) -> Result<SemiReport> {
    let pairs = semiorthogonality_pairs(n, k)?;
    let total_pairs = pairs.len();
    let step = match budget {
        Some(b) if b > 0 && b < total_pairs => total_pairs.div_ceil(b),
        _ => 1,
    };
    let mut violations = Vec::new();
    let mut checked = 0;
    for (src, dst) in pairs.into_iter().step_by(step) {
        checked += 1;
        let ext_dims = semi_pair_ext(n, k, &src, &dst)?;
        if !ext_dims.is_empty() {
            violations.push(SemiViolation {
                source: src,
                target: dst,
                ext_dims,
            });
        }
    }
    let pass = violations.is_empty();
    Ok(SemiReport {
        n,
        k,
        total_pairs,
        checked,
        violations,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_examples() {
        let c = census(3, 2).unwrap();
        assert_eq!(c.sizes, vec![2, 4, 6]);
        assert!(c.pass);
        for n in 1..=4 {
            let c = census(n, 1).unwrap();
            assert_eq!(c.sizes, vec![1, 2 * n - 1]);
        }
    }

    #[test]
    fn f_endpoints() {
        let r = f_class(0, &[], &[1], 3, 2).unwrap();
        assert!(r.concentrated_degree_zero);
        let r = f_class(2, &[1, 0], &[0], 3, 2).unwrap();
        assert_eq!(
            r.virtual_class,
            generator(3, 2, &BlockWeight::new(vec![1, 0], vec![0]).unwrap(), 0)
                .unwrap()
                .dual()
        );
        assert!(f_class(1, &[5], &[0], 3, 2).is_err());
    }

    #[test]
    fn semi_small() {
        assert!(
            verify_collection_semiorthogonality(3, 2, None)
                .unwrap()
                .pass
        );
    }
}
