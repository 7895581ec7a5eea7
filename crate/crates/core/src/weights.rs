//! Integer weights, Young diagrams and the block order.

use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};

/// An arbitrary integer vector of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(pub Vec<i64>);

/// A weakly decreasing integer vector (an element of `Y_l`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DominantWeight(Vec<i64>);

/// A weakly decreasing non-negative vector, optionally with a width bound.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YoungDiagram {
    entries: Vec<i64>,
    width: Option<i64>,
}

/// A pair `(λ; μ)`: a GL weight and a symplectic Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BlockWeight {
    pub gl: DominantWeight,
    pub sp: YoungDiagram,
}

pub fn is_dominant(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

pub fn is_diagram(w: &[i64]) -> bool {
    is_dominant(w) && w.last().is_none_or(|&x| x >= 0)
}

pub fn size(w: &[i64]) -> i64 {
    w.iter().sum()
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }
}

impl Deref for Weight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if is_dominant(&entries) {
            Ok(DominantWeight(entries))
        } else {
            Err(Error::NotDominant(entries))
        }
    }

    pub fn zero(len: usize) -> Self {
        DominantWeight(vec![0; len])
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl Deref for DominantWeight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl YoungDiagram {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if is_diagram(&entries) {
            Ok(YoungDiagram {
                entries,
                width: None,
            })
        } else {
            Err(Error::NotDiagram(entries))
        }
    }

    pub fn with_width(entries: Vec<i64>, width: i64) -> Result<Self> {
        let d = Self::new(entries)?;
        if d.entries.first().copied().unwrap_or(0) > width {
            return Err(Error::WidthExceeded {
                entries: d.entries,
                width,
            });
        }
        Ok(YoungDiagram {
            width: Some(width),
            ..d
        })
    }

    pub fn zero(len: usize) -> Self {
        YoungDiagram {
            entries: vec![0; len],
            width: None,
        }
    }

    pub fn width(&self) -> Option<i64> {
        self.width
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.entries
    }
}

impl Deref for YoungDiagram {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.entries
    }
}

impl BlockWeight {
    pub fn new(gl: Vec<i64>, sp: Vec<i64>) -> Result<Self> {
        Ok(BlockWeight {
            gl: DominantWeight::new(gl)?,
            sp: YoungDiagram::new(sp)?,
        })
    }

    /// `|gl| + |sp|`
    pub fn total(&self) -> i64 {
        size(&self.gl) + size(&self.sp)
    }
}

fn fmt_entries(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(f, &self.0)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(f, &self.0)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(f, &self.entries)
    }
}

impl fmt::Display for BlockWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(f, &self.gl)?;
        write!(f, ";")?;
        fmt_entries(f, &self.sp)
    }
}

/// All Young diagrams with `l` rows and width at most `w`, in lexicographic order.
pub fn enumerate_diagrams(l: usize, w: i64) -> Vec<YoungDiagram> {
    enumerate_bounded(l, 0, w)
        .into_iter()
        .map(|entries| YoungDiagram {
            entries,
            width: Some(w.max(0)),
        })
        .collect()
}

/// All weakly decreasing vectors of length `l` with entries in `[lo, hi]`, lexicographically sorted.
pub fn enumerate_bounded(l: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if hi < lo && l > 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(l);
    fill_bounded(l, lo, hi, &mut cur, &mut out);
    out
}

// Entries are generated in increasing order at each slot, so the output is lex sorted.
fn fill_bounded(l: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == l {
        out.push(cur.clone());
        return;
    }
    let top = cur.last().copied().unwrap_or(hi);
    for x in lo..=top {
        cur.push(x);
        fill_bounded(l, lo, hi, cur, out);
        cur.pop();
    }
}

pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The block order: `a ⪯ b` iff `a.gl ≤ b.gl` entrywise and `|a| ≤ |b|`.
pub fn kp_prec(a: &BlockWeight, b: &BlockWeight) -> Result<bool> {
    if a.gl.len() != b.gl.len() {
        return Err(Error::LengthMismatch {
            expected: a.gl.len(),
            got: b.gl.len(),
        });
    }
    if a.sp.len() != b.sp.len() {
        return Err(Error::LengthMismatch {
            expected: a.sp.len(),
            got: b.sp.len(),
        });
    }
    let gl_le = a.gl.iter().zip(b.gl.iter()).all(|(x, y)| x <= y);
    Ok(gl_le && a.total() <= b.total())
}

/// A deterministic total order refining [`kp_prec`]:
/// lexicographic on `(|gl|+|sp|, gl, sp)`.
pub fn total_order_key(a: &BlockWeight) -> (i64, Vec<i64>, Vec<i64>) {
    (a.total(), a.gl.to_vec(), a.sp.to_vec())
}

/// The notation operators on weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// Drop the first entry.
    Bar,
    /// `(α_1..α_n) ↦ (−α_n..−α_1)`
    Negate,
    /// Subtract `m` from every entry.
    Shift(i64),
    /// Prefix `t` copies of `m`.
    Prepend { m: i64, t: usize },
    /// `μ ↦ ((a)^t, μ)`, defined for diagrams of width at most `a`.
    Hat { t: usize, a: i64 },
}

pub fn transform(alpha: &[i64], op: Transform) -> Result<Weight> {
    Ok(Weight(match op {
        Transform::Bar => alpha.iter().skip(1).copied().collect(),
        Transform::Negate => negate(alpha),
        Transform::Shift(m) => alpha.iter().map(|x| x - m).collect(),
        Transform::Prepend { m, t } => prepend(m, t, alpha),
        Transform::Hat { t, a } => {
            if !is_diagram(alpha) {
                return Err(Error::NotDiagram(alpha.to_vec()));
            }
            if alpha.first().copied().unwrap_or(0) > a {
                return Err(Error::WidthExceeded {
                    entries: alpha.to_vec(),
                    width: a,
                });
            }
            prepend(a, t, alpha)
        }
    }))
}

pub fn negate(alpha: &[i64]) -> Vec<i64> {
    alpha.iter().rev().map(|x| -x).collect()
}

pub fn prepend(m: i64, t: usize, alpha: &[i64]) -> Vec<i64> {
    let mut v = vec![m; t];
    v.extend_from_slice(alpha);
    v
}

/// Pad with zeros on the right to length `len`.
pub fn pad(alpha: &[i64], len: usize) -> Vec<i64> {
    let mut v = alpha.to_vec();
    v.resize(len.max(alpha.len()), 0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_counts() {
        assert_eq!(enumerate_diagrams(0, 5).len(), 1);
        let d: Vec<Vec<i64>> = enumerate_diagrams(2, 2)
            .into_iter()
            .map(|d| d.into_vec())
            .collect();
        assert_eq!(
            d,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0],
                vec![2, 1],
                vec![2, 2]
            ]
        );
        for l in 0..5 {
            for w in 0..5 {
                assert_eq!(
                    enumerate_diagrams(l, w).len() as u128,
                    binomial((l as i64) + w, l as i64)
                );
            }
        }
    }

    #[test]
    fn prec_examples() {
        let bw = |g: &[i64], s: &[i64]| BlockWeight::new(g.to_vec(), s.to_vec()).unwrap();
        assert!(kp_prec(&bw(&[0], &[0]), &bw(&[0], &[0])).unwrap());
        assert!(kp_prec(&bw(&[1, 0], &[1]), &bw(&[1, 1], &[0])).unwrap());
        assert!(!kp_prec(&bw(&[2, 0], &[0]), &bw(&[1, 1], &[5])).unwrap());
        assert!(kp_prec(&bw(&[1], &[]), &bw(&[1, 0], &[])).is_err());
    }

    #[test]
    fn transforms() {
        assert_eq!(
            transform(&[3, 1], Transform::Negate).unwrap().0,
            vec![-1, -3]
        );
        assert_eq!(
            transform(&[1, 0], Transform::Hat { t: 2, a: 1 }).unwrap().0,
            vec![1, 1, 1, 0]
        );
        assert_eq!(
            transform(&[3, 2, 2, 1], Transform::Bar).unwrap().0,
            vec![2, 2, 1]
        );
        assert_eq!(
            transform(&[3, 2], Transform::Shift(1)).unwrap().0,
            vec![2, 1]
        );
        assert!(transform(&[2, 0], Transform::Hat { t: 1, a: 1 }).is_err());
    }
}
