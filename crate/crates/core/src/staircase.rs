//! Staircase combinatorics: vanishing values, the counting function `𝕕`,
//! the BBW map, the enumeration `z_i`, the weights `α^(i)` and `b^i`,
//! `𝕧`, `𝕞`, insertion `ins_{b,d}` and the marked-weight function `f`.
//!
//! Throughout, `α = (α_1; ᾱ)` with `ᾱ` weakly decreasing and `k = len(α) ≥ 1`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::weights::{is_diagram, is_dominant};

/// `𝐕(ᾱ) = {α_j − j + 1 : 2 ≤ j ≤ k}` (here `ᾱ = (α_2, …, α_k)`).
pub fn vanishing_set(abar: &[i64]) -> BTreeSet<i64> {
    abar.iter()
        .enumerate()
        .map(|(idx, a)| a - (idx as i64 + 2) + 1)
        .collect()
}

/// Symplectic vanishing values for `ᾱ ∈ YD_{l−1}`, `l = len(ᾱ) + 1`.
pub fn vanishing_set_sp(abar: &[i64]) -> BTreeSet<i64> {
    let l = abar.len() as i64 + 1;
    let v = vanishing_set(abar);
    let mut out: BTreeSet<i64> = v.iter().map(|x| -x - 2 * l).collect();
    out.insert(-l);
    out.extend(v);
    out
}

/// `𝕕_ᾱ(z) = |(z, ∞) ∩ 𝐕(ᾱ)| + 1`
pub fn d_of_z(abar: &[i64], z: i64) -> usize {
    abar.iter()
        .enumerate()
        .filter(|(idx, a)| **a - (*idx as i64 + 1) > z)
        .count()
        + 1
}

/// `BBW_ᾱ(z) = (α_2−1, …, α_d−1, z+d−1, α_{d+1}, …, α_k)`, `d = 𝕕_ᾱ(z)`.
pub fn bbw_map(abar: &[i64], z: i64) -> Vec<i64> {
    let d = d_of_z(abar, z);
    let mut out: Vec<i64> = abar[..d - 1].iter().map(|a| a - 1).collect();
    out.push(z + d as i64 - 1);
    out.extend_from_slice(&abar[d - 1..]);
    out
}

/// Staircase data attached to `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    alpha: Vec<i64>,
    vset: BTreeSet<i64>,
}

impl Staircase {
    pub fn new(alpha: &[i64]) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::OutOfRange("empty weight".into()));
        }
        if !is_dominant(&alpha[1..]) {
            return Err(Error::NotDominant(alpha[1..].to_vec()));
        }
        Ok(Staircase {
            alpha: alpha.to_vec(),
            vset: vanishing_set(&alpha[1..]),
        })
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn abar(&self) -> &[i64] {
        &self.alpha[1..]
    }

    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    pub fn vset(&self) -> &BTreeSet<i64> {
        &self.vset
    }

    /// `z_0`: the largest value `≤ α_1` outside `𝐕(ᾱ)`.
    pub fn z0(&self) -> i64 {
        let mut z = self.alpha[0];
        while self.vset.contains(&z) {
            z -= 1;
        }
        z
    }

    /// The decreasing enumeration of `ℤ ∖ 𝐕(ᾱ)` normalised by `z_0`.
    pub fn z(&self, i: i64) -> i64 {
        let mut z = self.z0();
        let step = if i >= 0 { -1 } else { 1 };
        for _ in 0..i.abs() {
            z += step;
            while self.vset.contains(&z) {
                z += step;
            }
        }
        z
    }

    pub fn d(&self, i: i64) -> usize {
        d_of_z(self.abar(), self.z(i))
    }

    /// `α^(i) = BBW_ᾱ(z_i)`
    pub fn alpha_i(&self, i: i64) -> Vec<i64> {
        bbw_map(self.abar(), self.z(i))
    }

    /// `b^i = α_1 − z_i`
    pub fn b(&self, i: i64) -> i64 {
        self.alpha[0] - self.z(i)
    }

    /// `𝕧(α) = |(α_1, ∞) ∩ 𝐕(ᾱ)|`
    pub fn v(&self) -> i64 {
        self.vset.range(self.alpha[0] + 1..).count() as i64
    }

    /// `𝕧(α) = 𝕕(α,0) − 1 + z_0 − α_1`
    pub fn v_from_definition(&self) -> i64 {
        self.d(0) as i64 - 1 + self.z0() - self.alpha[0]
    }

    /// `α^(i)` from the closed formula
    /// `(α_2−1, …, α_d−1, α_1−i+𝕧, α_{d+1}, …, α_k)`.
    pub fn alpha_i_explicit(&self, i: i64) -> Vec<i64> {
        let d = self.d_ineq(i);
        let a = self.abar();
        let mut out: Vec<i64> = a[..d - 1].iter().map(|x| x - 1).collect();
        out.push(self.alpha[0] - i + self.v());
        out.extend_from_slice(&a[d - 1..]);
        out
    }

    /// `𝕕(α,i) = max{1, j : α_1 − i + 𝕧 < α_j}`
    pub fn d_ineq(&self, i: i64) -> usize {
        let x = self.alpha[0] - i + self.v();
        (2..=self.k())
            .filter(|&j| x < self.alpha[j - 1])
            .max()
            .unwrap_or(1)
    }

    /// The non-vanishing values in the window `[α_1 − r, α_1]`, decreasing.
    pub fn window(&self, r: usize) -> Vec<i64> {
        let a1 = self.alpha[0];
        (a1 - r as i64..=a1)
            .rev()
            .filter(|z| !self.vset.contains(z))
            .collect()
    }

    /// `𝕞(α) = |[α_1 − r, α_1] ∖ 𝐕(ᾱ)| − 1`
    pub fn m(&self, r: usize) -> usize {
        self.window(r).len() - 1
    }

    /// `δ(α) = α_1 + 𝕧(α)`
    pub fn delta(&self) -> i64 {
        self.alpha[0] + self.v()
    }

    /// `i_α = 𝕧(α) + 1`
    pub fn i_alpha(&self) -> i64 {
        self.v() + 1
    }
}

/// One row of the staircase table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseRow {
    pub i: i64,
    pub z: i64,
    pub d: usize,
    pub b: i64,
    pub alpha_i: Vec<i64>,
}

/// All staircase data of `α` on an index window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseData {
    pub alpha: Vec<i64>,
    pub vset: Vec<i64>,
    /// `𝐕^Sp(ᾱ)`, present when `ᾱ` is a Young diagram.
    pub vset_sp: Option<Vec<i64>>,
    pub v: i64,
    /// `𝕞(α)` for the requested ambient rank.
    pub m: Option<usize>,
    pub rows: Vec<StaircaseRow>,
}

/// Populate the staircase table on `[i_min, i_max]`.
///
/// `α^(i)` is computed both by the BBW map on `z_i` and by the closed formula;
/// a mismatch is reported as an error.
pub fn staircase_data(
    alpha: &[i64],
    i_min: i64,
    i_max: i64,
    r: Option<usize>,
) -> Result<StaircaseData> {
    let s = Staircase::new(alpha)?;
    let mut rows = Vec::new();
    for i in i_min..=i_max {
        let a = s.alpha_i(i);
        if a != s.alpha_i_explicit(i) {
            return Err(Error::Unsupported(format!(
                "closed formula disagrees at i={i} for {alpha:?}"
            )));
        }
        rows.push(StaircaseRow {
            i,
            z: s.z(i),
            d: s.d(i),
            b: s.b(i),
            alpha_i: a,
        });
    }
    Ok(StaircaseData {
        alpha: alpha.to_vec(),
        vset: s.vset.iter().copied().collect(),
        vset_sp: is_diagram(s.abar()).then(|| vanishing_set_sp(s.abar()).into_iter().collect()),
        v: s.v(),
        m: r.map(|r| s.m(r)),
        rows,
    })
}

/// `ins_{b,d}(β) = (β_d + b − d + 1; β_1+1, …, β_{d−1}+1, β_{d+1}, …, β_t)`
pub fn ins(beta: &[i64], b: i64, d: usize) -> Result<Vec<i64>> {
    if d < 1 || d > beta.len() {
        return Err(Error::OutOfRange(format!(
            "d={d} outside [1,{}]",
            beta.len()
        )));
    }
    let mut out = vec![beta[d - 1] + b - d as i64 + 1];
    out.extend(beta[..d - 1].iter().map(|x| x + 1));
    out.extend_from_slice(&beta[d..]);
    Ok(out)
}

/// `ϱ = ins_{d,d}(β)`
pub fn varrho(beta: &[i64], d: usize) -> Result<Vec<i64>> {
    ins(beta, d as i64, d)
}

/// `f(β, d) = d² + Σ 2i·β_i`
pub fn marked_f(beta: &[i64], d: usize) -> i64 {
    let d = d as i64;
    d * d
        + beta
            .iter()
            .enumerate()
            .map(|(i, b)| 2 * (i as i64 + 1) * b)
            .sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_3221_example() {
        let s = Staircase::new(&[3, 2, 2, 1]).unwrap();
        assert_eq!(s.vset().iter().copied().collect::<Vec<_>>(), vec![-2, 0, 1]);
        let z: Vec<i64> = (-1..=5).map(|i| s.z(i)).collect();
        assert_eq!(z, vec![4, 3, 2, -1, -3, -4, -5]);
        let d: Vec<usize> = (-1..=5).map(|i| s.d(i)).collect();
        assert_eq!(d, vec![1, 1, 1, 3, 4, 4, 4]);
        assert_eq!(s.alpha_i(2), vec![1, 1, 1, 1]);
        assert_eq!(s.b(2), 4);
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(ins(&[1, 1], 1, 1).unwrap(), vec![2, 1]);
        assert_eq!(ins(&[0, 0, 0], 0, 1).unwrap(), vec![0, 0, 0]);
        assert!(ins(&[1], 0, 2).is_err());
        assert_eq!(marked_f(&[2, 1], 1), 9);
        assert_eq!(Staircase::new(&[2, 1, 0]).unwrap().i_alpha(), 1);
    }
}
