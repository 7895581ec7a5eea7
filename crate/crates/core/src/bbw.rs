//! Borel–Bott–Weil for `GL` and `Sp`, homogeneous spaces, virtual bundles,
//! pushforwards/pullbacks along one-step projections and cohomology.
//!
//! Conventions:
//! * A space is a list of GL block sizes plus an optional symplectic rank.
//!   Block `j` carries the weight of the dual subquotient `(U_{c_j}/U_{c_{j-1}})^∨`
//!   (for type A the last block is `Q^∨ = (V/U)^∨`).
//! * Degrees are cohomological: a Weyl element of length `ℓ` puts the result in degree `+ℓ`.
//! * The K-class of a term in degree `d` carries the sign `(-1)^d`.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::characters::{
    self, branch_sp_to_gl_sp, decompose, exterior_power, lr_tensor, product_character, restrict_gl,
    sp_tensor, weyl_dimension, Character, Group,
};
use crate::error::{Error, Result};
use crate::weights::{is_diagram, is_dominant, negate};

// ---------------------------------------------------------------------------
// BBW engines

/// Result of a Borel–Bott–Weil computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BbwResult {
    Vanishes,
    NonZero { dominant: Vec<i64>, shift: usize },
}

impl BbwResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BbwResult::Vanishes)
    }
}

/// GL BBW on the concatenation `(λ, μ)`.
pub fn bbw_gl(lambda: &[i64], mu: &[i64]) -> BbwResult {
    let mut w = lambda.to_vec();
    w.extend_from_slice(mu);
    bbw_gl_concat(&w)
}

/// GL BBW on an arbitrary weight of `GL(r)`, `ρ = (r, …, 1)`.
pub fn bbw_gl_concat(w: &[i64]) -> BbwResult {
    let r = w.len() as i64;
    let v: Vec<i64> = w
        .iter()
        .enumerate()
        .map(|(i, x)| x + r - i as i64)
        .collect();
    let mut shift = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Equal => return BbwResult::Vanishes,
                std::cmp::Ordering::Less => shift += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut s = v;
    s.sort_unstable_by(|a, b| b.cmp(a));
    let dominant = s
        .iter()
        .enumerate()
        .map(|(i, x)| x - (r - i as i64))
        .collect();
    BbwResult::NonZero { dominant, shift }
}

/// Symplectic BBW on the concatenation `(λ, μ)`, rank `len(λ)+len(μ)`.
pub fn bbw_sp(lambda: &[i64], mu: &[i64]) -> BbwResult {
    let mut w = lambda.to_vec();
    w.extend_from_slice(mu);
    bbw_sp_concat(&w)
}

/// Symplectic BBW on an arbitrary weight of `Sp(2r)`.
///
/// The shift is the number of positive roots `e_i−e_j, e_i+e_j, 2e_i`
/// pairing negatively with `w+ρ`, which is the length of the sorting element.
pub fn bbw_sp_concat(w: &[i64]) -> BbwResult {
    let r = w.len() as i64;
    let v: Vec<i64> = w
        .iter()
        .enumerate()
        .map(|(i, x)| x + r - i as i64)
        .collect();
    let mut shift = 0;
    for i in 0..v.len() {
        if v[i] == 0 {
            return BbwResult::Vanishes;
        }
        if v[i] < 0 {
            shift += 1;
        }
        for j in i + 1..v.len() {
            if v[i].abs() == v[j].abs() {
                return BbwResult::Vanishes;
            }
            if v[i] < v[j] {
                shift += 1;
            }
            if v[i] + v[j] < 0 {
                shift += 1;
            }
        }
    }
    let mut s: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let dominant = s
        .iter()
        .enumerate()
        .map(|(i, x)| x - (r - i as i64))
        .collect();
    BbwResult::NonZero { dominant, shift }
}

// ---------------------------------------------------------------------------
// Spaces

/// A partial (isotropic) flag variety `G/P`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Space {
    blocks: Vec<usize>,
    sp: Option<usize>,
}

impl Space {
    /// Generic constructor. Type A needs at least two blocks; type C at least one.
    pub fn flag(blocks: Vec<usize>, sp: Option<usize>) -> Result<Self> {
        let min = if sp.is_some() { 1 } else { 2 };
        if blocks.len() < min {
            return Err(Error::OutOfRange(format!(
                "flag needs at least {min} GL blocks"
            )));
        }
        Ok(Space { blocks, sp })
    }

    pub fn gr(l: usize, r: usize) -> Result<Self> {
        if !(0 < l && l < r) {
            return Err(Error::OutOfRange(format!("Gr({l},{r})")));
        }
        Ok(Space {
            blocks: vec![l, r - l],
            sp: None,
        })
    }

    pub fn fl(a: usize, b: usize, r: usize) -> Result<Self> {
        if !(0 < a && a < b && b < r) {
            return Err(Error::OutOfRange(format!("Fl({a},{b};{r})")));
        }
        Ok(Space {
            blocks: vec![a, b - a, r - b],
            sp: None,
        })
    }

    /// `IGr(l, 2n)`
    pub fn igr(l: usize, n: usize) -> Result<Self> {
        if !(0 < l && l <= n) {
            return Err(Error::OutOfRange(format!("IGr({l},{})", 2 * n)));
        }
        Ok(Space {
            blocks: vec![l],
            sp: Some(n - l),
        })
    }

    /// `IFl(a, b; 2n)`
    pub fn ifl(a: usize, b: usize, n: usize) -> Result<Self> {
        if !(0 < a && a < b && b <= n) {
            return Err(Error::OutOfRange(format!("IFl({a},{b};{})", 2 * n)));
        }
        Ok(Space {
            blocks: vec![a, b - a],
            sp: Some(n - b),
        })
    }

    /// `IFl(1, 2, k; 2n)`; `k = 2` gives an empty third block.
    pub fn ifl12(k: usize, n: usize) -> Result<Self> {
        if !(2 <= k && k <= n) {
            return Err(Error::OutOfRange(format!("IFl(1,2,{k};{})", 2 * n)));
        }
        Ok(Space {
            blocks: vec![1, 1, k - 2],
            sp: Some(n - k),
        })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn sp_rank(&self) -> Option<usize> {
        self.sp
    }

    pub fn is_symplectic(&self) -> bool {
        self.sp.is_some()
    }

    /// Number of torus variables of the Levi.
    pub fn rank(&self) -> usize {
        self.blocks.iter().sum::<usize>() + self.sp.unwrap_or(0)
    }

    /// `GL(r)` for type A, `Sp(2n)` for type C.
    pub fn ambient(&self) -> Group {
        match self.sp {
            None => Group::Gl(self.rank()),
            Some(_) => Group::Sp(self.rank()),
        }
    }

    pub fn levi(&self) -> Vec<Group> {
        let mut l: Vec<Group> = self.blocks.iter().map(|&b| Group::Gl(b)).collect();
        if let Some(m) = self.sp {
            l.push(Group::Sp(m));
        }
        l
    }

    /// Offsets of the blocks inside a concatenated Levi weight; the last entry is the Sp offset.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for b in &self.blocks {
            off.push(off.last().unwrap() + b);
        }
        off
    }

    /// Size of the top tautological subbundle `U`.
    pub fn sub_rank(&self) -> usize {
        match self.sp {
            None => self.blocks[..self.blocks.len() - 1].iter().sum(),
            Some(_) => self.blocks.iter().sum(),
        }
    }

    /// The weight of `O(1) = det U^∨` as a Levi weight.
    pub fn twist_vector(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        for x in v.iter_mut().take(self.sub_rank()) {
            *x = 1;
        }
        v
    }

    pub fn check_weight(&self, w: &[i64]) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        let off = self.offsets();
        for j in 0..self.blocks.len() {
            if !is_dominant(&w[off[j]..off[j + 1]]) {
                return Err(Error::NotDominant(w[off[j]..off[j + 1]].to_vec()));
            }
        }
        if self.sp.is_some() && !is_diagram(&w[*off.last().unwrap()..]) {
            return Err(Error::NotDiagram(w[*off.last().unwrap()..].to_vec()));
        }
        Ok(())
    }

    /// Split a Levi weight into (GL blocks, Sp part).
    pub fn split(&self, w: &[i64]) -> (Vec<Vec<i64>>, Vec<i64>) {
        let off = self.offsets();
        let gl = (0..self.blocks.len())
            .map(|j| w[off[j]..off[j + 1]].to_vec())
            .collect();
        (gl, w[*off.last().unwrap()..].to_vec())
    }

    pub fn name(&self) -> String {
        let mut cum = Vec::new();
        let mut acc = 0;
        for b in &self.blocks {
            acc += b;
            cum.push(acc);
        }
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.sp {
            None => {
                let inner = &cum[..cum.len() - 1];
                if inner.len() == 1 {
                    format!("Gr({},{})", inner[0], acc)
                } else {
                    format!("Fl({};{})", join(inner), acc)
                }
            }
            Some(m) => {
                let n2 = 2 * (acc + m);
                if cum.len() == 1 {
                    format!("IGr({},{})", cum[0], n2)
                } else {
                    format!("IFl({};{})", join(&cum), n2)
                }
            }
        }
    }

    /// Parse `Gr(l,r)`, `Fl(a,b,…;r)`, `IGr(l,2n)`, `IFl(a,b,…;2n)`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad space descriptor {s:?}"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let kind = &s[..open];
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let (marks, total) = match inner.split_once(';') {
            Some((a, b)) => (a, b),
            None => inner.rsplit_once(',').ok_or_else(bad)?,
        };
        let nums = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        let marks = nums(marks)?;
        let total: usize = total.trim().parse().map_err(|_| bad())?;
        if marks.windows(2).any(|p| p[0] > p[1]) || marks.is_empty() {
            return Err(bad());
        }
        let mut blocks = Vec::new();
        let mut prev = 0;
        for &m in &marks {
            blocks.push(m - prev);
            prev = m;
        }
        match kind {
            "Gr" | "Fl" => {
                if prev >= total || marks[0] == 0 {
                    return Err(bad());
                }
                blocks.push(total - prev);
                Space::flag(blocks, None)
            }
            "IGr" | "IFl" => {
                if !total.is_multiple_of(2) || prev > total / 2 || marks[0] == 0 {
                    return Err(bad());
                }
                Space::flag(blocks, Some(total / 2 - prev))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

// ---------------------------------------------------------------------------
// Bundles

/// An irreducible equivariant bundle with a twist, degree and multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleBundle {
    pub space: Space,
    /// One dominant weight per GL block.
    pub factors: Vec<Vec<i64>>,
    /// Symplectic weight (empty for type A).
    pub sp: Vec<i64>,
    pub twist: i64,
    pub degree: i64,
    pub mult: BigInt,
}

impl IrreducibleBundle {
    pub fn new(space: Space, factors: Vec<Vec<i64>>, sp: Vec<i64>) -> Result<Self> {
        let b = IrreducibleBundle {
            space,
            factors,
            sp,
            twist: 0,
            degree: 0,
            mult: BigInt::one(),
        };
        if b.factors.len() != b.space.blocks.len() {
            return Err(Error::LengthMismatch {
                expected: b.space.blocks.len(),
                got: b.factors.len(),
            });
        }
        b.space.check_weight(&b.levi_weight())?;
        Ok(b)
    }

    /// Levi weight with the twist folded in.
    pub fn levi_weight(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.factors.concat();
        w.extend_from_slice(&self.sp);
        if self.twist != 0 {
            for (x, t) in w.iter_mut().zip(self.space.twist_vector()) {
                *x += t * self.twist;
            }
        }
        w
    }

    pub fn to_virtual(&self) -> VirtualBundle {
        let mut v = VirtualBundle::default();
        v.add_term(
            self.space.clone(),
            self.levi_weight(),
            self.degree,
            self.mult.clone(),
        );
        v
    }
}

/// Key of a [`VirtualBundle`] term.
pub type TermKey = (Space, Vec<i64>, i64);

/// A ℤ-linear combination of irreducible bundles placed in degrees.
/// Stored in normal form: sorted, merged, zero-free.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VirtualBundle {
    terms: BTreeMap<TermKey, BigInt>,
}

impl VirtualBundle {
    pub fn irreducible(space: &Space, weight: Vec<i64>) -> Result<Self> {
        space.check_weight(&weight)?;
        let mut v = VirtualBundle::default();
        v.add_term(space.clone(), weight, 0, BigInt::one());
        Ok(v)
    }

    /// The trivial line bundle.
    pub fn structure_sheaf(space: &Space) -> Self {
        let mut v = VirtualBundle::default();
        v.add_term(space.clone(), vec![0; space.rank()], 0, BigInt::one());
        v
    }

    pub fn add_term(&mut self, space: Space, weight: Vec<i64>, degree: i64, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        let key = (space, weight, degree);
        let e = self.terms.entry(key.clone()).or_default();
        *e += mult;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, other: &VirtualBundle) {
        for ((s, w, d), m) in &other.terms {
            self.add_term(s.clone(), w.clone(), *d, m.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &VirtualBundle, k: &BigInt) {
        for ((s, w, d), m) in &other.terms {
            self.add_term(s.clone(), w.clone(), *d, m * k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The unique space of all terms.
    pub fn space(&self) -> Result<Option<Space>> {
        let mut it = self.terms.keys().map(|k| &k.0);
        let Some(first) = it.next() else {
            return Ok(None);
        };
        for s in it {
            if s != first {
                return Err(Error::SpaceMismatch(first.name(), s.name()));
            }
        }
        Ok(Some(first.clone()))
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-BigInt::one())
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        let mut v = VirtualBundle::default();
        v.add_scaled(self, k);
        v
    }

    pub fn shifted(&self, by: i64) -> Self {
        let mut v = VirtualBundle::default();
        for ((s, w, d), m) in &self.terms {
            v.add_term(s.clone(), w.clone(), d + by, m.clone());
        }
        v
    }

    /// All terms moved to degree 0 with sign `(-1)^degree`.
    pub fn euler_class(&self) -> Self {
        let mut v = VirtualBundle::default();
        for ((s, w, d), m) in &self.terms {
            let m = if d.rem_euclid(2) == 0 { m.clone() } else { -m };
            v.add_term(s.clone(), w.clone(), 0, m);
        }
        v
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|k| k.2).collect();
        d.dedup();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Tensor by `O(t)`.
    pub fn twisted(&self, t: i64) -> Self {
        let mut v = VirtualBundle::default();
        for ((s, w, d), m) in &self.terms {
            let tv = s.twist_vector();
            let w2 = w.iter().zip(tv).map(|(x, y)| x + y * t).collect();
            v.add_term(s.clone(), w2, *d, m.clone());
        }
        v
    }

    /// The dual: GL blocks `λ ↦ −rev λ`, Sp weights unchanged, degrees negated.
    pub fn dual(&self) -> Self {
        let mut v = VirtualBundle::default();
        for ((s, w, d), m) in &self.terms {
            let (gl, sp) = s.split(w);
            let mut w2: Vec<i64> = gl.iter().flat_map(|b| negate(b)).collect();
            w2.extend(sp);
            v.add_term(s.clone(), w2, -d, m.clone());
        }
        v
    }

    /// Tensor product; both sides must live on one space. Degrees add.
    pub fn tensor(&self, other: &VirtualBundle) -> Result<Self> {
        let mut out = VirtualBundle::default();
        for ((s1, w1, d1), m1) in &self.terms {
            for ((s2, w2, d2), m2) in &other.terms {
                if s1 != s2 {
                    return Err(Error::SpaceMismatch(s1.name(), s2.name()));
                }
                let m = m1 * m2;
                for (w, c) in tensor_irreducibles(s1, w1, w2)? {
                    out.add_term(s1.clone(), w, d1 + d2, &m * c);
                }
            }
        }
        Ok(out)
    }

    /// Torus character over the Levi, with sign `(-1)^degree`. Requires a single space.
    pub fn torus_character(&self) -> Result<Character> {
        let Some(space) = self.space()? else {
            return Ok(Character::zero(vec![]));
        };
        let mut c = Character::zero(space.levi());
        for ((_, w, d), m) in &self.terms {
            let sign = if d.rem_euclid(2) == 0 { m.clone() } else { -m };
            c.add_scaled(&product_character(&space.levi(), w)?, &sign);
        }
        Ok(c)
    }

    /// Same terms regarded on the same Levi of another (equal-Levi) space description.
    pub fn with_space(&self, space: &Space) -> Self {
        let mut v = VirtualBundle::default();
        for ((_, w, d), m) in &self.terms {
            v.add_term(space.clone(), w.clone(), *d, m.clone());
        }
        v
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|m| !m.is_negative())
    }
}

/// Decompose the tensor product of two Levi irreducibles.
pub fn tensor_irreducibles(
    space: &Space,
    w1: &[i64],
    w2: &[i64],
) -> Result<Vec<(Vec<i64>, BigInt)>> {
    let (g1, s1) = space.split(w1);
    let (g2, s2) = space.split(w2);
    let mut acc: Vec<(Vec<i64>, BigInt)> = vec![(Vec::new(), BigInt::one())];
    for (a, b) in g1.iter().zip(&g2) {
        let prod = lr_tensor(a, b)?;
        let mut next = Vec::with_capacity(acc.len() * prod.len());
        for (w, m) in &acc {
            for (g, c) in prod.iter() {
                let mut w2 = w.clone();
                w2.extend_from_slice(g);
                next.push((w2, m * BigInt::from(*c)));
            }
        }
        acc = next;
    }
    if let Some(m) = space.sp {
        let prod = sp_tensor(m, &s1, &s2)?;
        let mut next = Vec::new();
        for (w, c0) in &acc {
            for (g, c) in &prod.terms {
                let mut w2 = w.clone();
                w2.extend_from_slice(g);
                next.push((w2, c0 * c));
            }
        }
        acc = next;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Tautological bundles and their exterior/symmetric powers

/// Tautological bundles on a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Taut {
    /// The trivial bundle `V`.
    V,
    VDual,
    /// The top tautological subbundle `U`.
    U,
    UDual,
    /// `Q = V/U`.
    Q,
    QDual,
}

/// Torus weights of a tautological bundle, one unit vector per weight.
pub fn taut_weights(space: &Space, t: Taut) -> Vec<Vec<i64>> {
    let n = space.rank();
    let unit = |i: usize, s: i64| {
        let mut e = vec![0; n];
        e[i] = s;
        e
    };
    let u = space.sub_rank();
    let gl: usize = space.blocks.iter().sum();
    let udual: Vec<Vec<i64>> = (0..u).map(|i| unit(i, 1)).collect();
    let qdual: Vec<Vec<i64>> = match space.sp {
        None => (u..gl).map(|i| unit(i, 1)).collect(),
        Some(_) => (0..u)
            .map(|i| unit(i, -1))
            .chain((gl..n).flat_map(|i| [unit(i, 1), unit(i, -1)]))
            .collect(),
    };
    let neg = |v: &[Vec<i64>]| {
        v.iter()
            .map(|e| e.iter().map(|x| -x).collect())
            .collect::<Vec<_>>()
    };
    match t {
        Taut::UDual => udual,
        Taut::U => neg(&udual),
        Taut::QDual => qdual,
        Taut::Q => neg(&qdual),
        Taut::VDual => udual.iter().cloned().chain(qdual.iter().cloned()).collect(),
        Taut::V => neg(&udual).into_iter().chain(neg(&qdual)).collect(),
    }
}

type PowerCache = Mutex<HashMap<(Space, Taut, usize, bool), VirtualBundle>>;
static POWERS: LazyLock<PowerCache> = LazyLock::new(Default::default);

/// `Λ^b` of a tautological bundle, decomposed into Levi irreducibles (degree 0).
pub fn exterior(space: &Space, t: Taut, b: usize) -> Result<VirtualBundle> {
    power(space, t, b, false)
}

/// `S^b` of a tautological bundle, decomposed into Levi irreducibles (degree 0).
pub fn symmetric(space: &Space, t: Taut, b: usize) -> Result<VirtualBundle> {
    power(space, t, b, true)
}

fn power(space: &Space, t: Taut, b: usize, sym: bool) -> Result<VirtualBundle> {
    let key = (space.clone(), t, b, sym);
    if let Some(v) = POWERS.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let layout = space.levi();
    let monos = taut_weights(space, t);
    let c = if sym {
        symmetric_power(&layout, &monos, b)
    } else {
        exterior_power(&layout, &monos, b)
    };
    let d = decompose(&c)?;
    let mut v = VirtualBundle::default();
    for (w, m) in d.terms {
        v.add_term(space.clone(), w, 0, m);
    }
    POWERS.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn symmetric_power(layout: &[Group], monomials: &[Vec<i64>], b: usize) -> Character {
    let mut dp: Vec<Character> = (0..=b).map(|_| Character::zero(layout.to_vec())).collect();
    dp[0] = Character::one(layout.to_vec());
    for mono in monomials {
        let x = Character::monomial(layout.to_vec(), mono.clone(), BigInt::one());
        // h_j ← h_j + x·h_{j-1} (new), increasing j so x may be used repeatedly
        for j in 1..=b {
            let t = dp[j - 1].mul(&x);
            dp[j] = dp[j].add(&t);
        }
    }
    dp.swap_remove(b)
}

// ---------------------------------------------------------------------------
// Projections

/// A one-step projection between flag varieties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    /// Forget the flag step between GL blocks `j` and `j+1` (GL BBW on their concatenation).
    MergeBlocks(usize),
    /// Forget the last isotropic step (Sp BBW on last GL block + Sp part).
    AbsorbLast,
}

/// Named projections between the flag varieties in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedProjection {
    /// `ℙ(S) → X`: absorb a rank-one block.
    Pi,
    /// `p_t : IFl(k−t,k) → IGr(k−t)`
    P(usize),
    /// `q_t : IFl(k−t,k) → IGr(k)`
    Q(usize),
    /// `ψ_l : Fl(1,l;V) → Gr(l,V)`
    Psi,
    /// `φ_k : IFl(1,2,k) → IFl(1,k)`
    Phi,
    /// `q_{k−1} : IFl(1,k) → IGr(k)`
    QkMinus1,
    /// `q_{k−2} : IFl(2,k) → IGr(k)`
    QkMinus2,
}

impl NamedProjection {
    /// Resolve against a source space, validating its shape.
    pub fn resolve(self, src: &Space) -> Result<Projection> {
        let b = &src.blocks;
        let unsupported = || Error::Unsupported(format!("{self:?} on {}", src.name()));
        let c = src.is_symplectic();
        match self {
            NamedProjection::Pi if c && b.len() >= 2 && *b.last().unwrap() == 1 => {
                Ok(Projection::AbsorbLast)
            }
            NamedProjection::P(t) if c && b.len() == 2 && b[1] == t => Ok(Projection::AbsorbLast),
            NamedProjection::Q(t) if c && b.len() == 2 && b[1] == t => {
                Ok(Projection::MergeBlocks(0))
            }
            NamedProjection::Psi if !c && b.len() == 3 && b[0] == 1 => {
                Ok(Projection::MergeBlocks(0))
            }
            NamedProjection::Phi if c && b.len() == 3 && b[0] == 1 && b[1] == 1 => {
                Ok(Projection::MergeBlocks(1))
            }
            NamedProjection::QkMinus1 if c && b.len() == 2 && b[0] == 1 => {
                Ok(Projection::MergeBlocks(0))
            }
            NamedProjection::QkMinus2 if c && b.len() == 2 && b[0] == 2 => {
                Ok(Projection::MergeBlocks(0))
            }
            _ => Err(unsupported()),
        }
    }
}

impl Projection {
    pub fn target(self, src: &Space) -> Result<Space> {
        match self {
            Projection::MergeBlocks(j) => {
                if j + 1 >= src.blocks.len() {
                    return Err(Error::Unsupported(format!("merge {j} on {}", src.name())));
                }
                let mut blocks = src.blocks.clone();
                let b = blocks.remove(j + 1);
                blocks[j] += b;
                Space::flag(blocks, src.sp)
            }
            Projection::AbsorbLast => {
                let Some(m) = src.sp else {
                    return Err(Error::Unsupported(format!("absorb on {}", src.name())));
                };
                let mut blocks = src.blocks.clone();
                let t = blocks.pop().unwrap();
                Space::flag(blocks, Some(m + t))
            }
        }
    }
}

/// Derived pushforward of one Levi irreducible.
fn push_term(src: &Space, proj: Projection, w: &[i64]) -> Option<(Vec<i64>, i64)> {
    let off = src.offsets();
    match proj {
        Projection::MergeBlocks(j) => match bbw_gl_concat(&w[off[j]..off[j + 2]]) {
            BbwResult::Vanishes => None,
            BbwResult::NonZero { dominant, shift } => {
                let mut out = w[..off[j]].to_vec();
                out.extend(dominant);
                out.extend_from_slice(&w[off[j + 2]..]);
                Some((out, shift as i64))
            }
        },
        Projection::AbsorbLast => {
            let last = off[src.blocks.len() - 1];
            match bbw_sp_concat(&w[last..]) {
                BbwResult::Vanishes => None,
                BbwResult::NonZero { dominant, shift } => {
                    let mut out = w[..last].to_vec();
                    out.extend(dominant);
                    Some((out, shift as i64))
                }
            }
        }
    }
}

/// Derived pushforward; degrees shift by the BBW length.
pub fn pushforward(v: &VirtualBundle, proj: Projection) -> Result<VirtualBundle> {
    let mut out = VirtualBundle::default();
    for ((s, w, d), m) in v.terms() {
        let tgt = proj.target(s)?;
        if let Some((w2, sh)) = push_term(s, proj, w) {
            out.add_term(tgt, w2, d + sh, m.clone());
        }
    }
    Ok(out)
}

/// Pushforward along a named projection.
pub fn pushforward_named(v: &VirtualBundle, proj: NamedProjection) -> Result<VirtualBundle> {
    let Some(src) = v.space()? else {
        return Ok(VirtualBundle::default());
    };
    pushforward(v, proj.resolve(&src)?)
}

/// Pullback of a class on `proj.target(src)` to `src`, as a class in Levi irreducibles.
pub fn pullback(v: &VirtualBundle, proj: Projection, src: &Space) -> Result<VirtualBundle> {
    let tgt = proj.target(src)?;
    let off = tgt.offsets();
    let mut out = VirtualBundle::default();
    for ((s, w, d), m) in v.terms() {
        if *s != tgt {
            return Err(Error::SpaceMismatch(s.name(), tgt.name()));
        }
        match proj {
            Projection::MergeBlocks(j) => {
                let a = src.blocks[j];
                for (lam, mu, c) in restrict_gl(&w[off[j]..off[j + 1]], a)?.iter() {
                    let mut w2 = w[..off[j]].to_vec();
                    w2.extend_from_slice(lam);
                    w2.extend_from_slice(mu);
                    w2.extend_from_slice(&w[off[j + 1]..]);
                    out.add_term(src.clone(), w2, *d, m * BigInt::from(*c));
                }
            }
            Projection::AbsorbLast => {
                let t = *src.blocks.last().unwrap();
                let msrc = src.sp.unwrap();
                let spoff = *off.last().unwrap();
                for (g, eta, c) in branch_sp_to_gl_sp(&w[spoff..], t, msrc)?.iter() {
                    let mut w2 = w[..spoff].to_vec();
                    w2.extend_from_slice(g);
                    w2.extend_from_slice(eta);
                    out.add_term(src.clone(), w2, *d, m * c);
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Cohomology and Ext

/// Graded decomposition into irreducible representations of the ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graded {
    pub group: Group,
    /// `(degree, highest weight) → multiplicity`
    pub terms: BTreeMap<(i64, Vec<i64>), BigInt>,
}

impl Graded {
    pub fn new(group: Group) -> Self {
        Graded {
            group,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, deg: i64, w: Vec<i64>, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let key = (deg, w);
        let e = self.terms.entry(key.clone()).or_default();
        *e += m;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Per-degree multiplicity of the trivial representation.
    pub fn invariant_dims(&self) -> BTreeMap<i64, BigInt> {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for ((d, w), m) in &self.terms {
            if w.iter().all(|&x| x == 0) {
                *out.entry(*d).or_default() += m;
            }
        }
        out.retain(|_, m| !m.is_zero());
        out
    }

    /// Per-degree total dimension.
    pub fn dims(&self) -> Result<BTreeMap<i64, BigInt>> {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for ((d, w), m) in &self.terms {
            *out.entry(*d).or_default() += m * weyl_dimension(self.group, w)?;
        }
        out.retain(|_, m| !m.is_zero());
        Ok(out)
    }
}

/// Cohomology of a (virtual) bundle on `G/P` as a graded `G`-representation.
pub fn cohomology(v: &VirtualBundle) -> Result<Graded> {
    let Some(space) = v.space()? else {
        return Ok(Graded::new(Group::Gl(0)));
    };
    let mut out = Graded::new(space.ambient());
    for ((_, w, d), m) in v.terms() {
        let r = if space.is_symplectic() {
            bbw_sp_concat(w)
        } else {
            bbw_gl_concat(w)
        };
        if let BbwResult::NonZero { dominant, shift } = r {
            out.add(d + shift as i64, dominant, m.clone());
        }
    }
    Ok(out)
}

/// `Ext^•(A, B) = H^•(A^∨ ⊗ B)` as a graded representation.
pub fn ext_groups(a: &VirtualBundle, b: &VirtualBundle) -> Result<Graded> {
    if let (Some(sa), Some(sb)) = (a.space()?, b.space()?) {
        if sa != sb {
            return Err(Error::SpaceMismatch(sa.name(), sb.name()));
        }
    }
    cohomology(&a.dual().tensor(b)?)
}

/// Per-degree `dim Ext_G` (multiplicity of the trivial representation).
pub fn ext_invariant_dims(a: &VirtualBundle, b: &VirtualBundle) -> Result<BTreeMap<i64, BigInt>> {
    Ok(ext_groups(a, b)?.invariant_dims())
}

/// Per-degree `dim Ext`.
pub fn ext_dims(a: &VirtualBundle, b: &VirtualBundle) -> Result<BTreeMap<i64, BigInt>> {
    ext_groups(a, b)?.dims()
}

pub use characters::Decomposition;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bbw_examples() {
        assert_eq!(bbw_gl(&[-1], &[0]), BbwResult::Vanishes);
        assert_eq!(
            bbw_gl(&[-2], &[0]),
            BbwResult::NonZero {
                dominant: vec![-1, -1],
                shift: 1
            }
        );
        assert_eq!(
            bbw_gl(&[2, 1], &[0]),
            BbwResult::NonZero {
                dominant: vec![2, 1, 0],
                shift: 0
            }
        );
        assert_eq!(
            bbw_sp(&[0], &[0]),
            BbwResult::NonZero {
                dominant: vec![0, 0],
                shift: 0
            }
        );
        // (λ;0)+ρ hits zero at λ_1 = −l
        assert_eq!(bbw_sp(&[-3], &[0, 0]), BbwResult::Vanishes);
    }

    #[test]
    fn space_names_roundtrip() {
        let spaces = [
            Space::gr(2, 5).unwrap(),
            Space::fl(1, 3, 5).unwrap(),
            Space::igr(2, 3).unwrap(),
            Space::igr(3, 3).unwrap(),
            Space::ifl(1, 3, 4).unwrap(),
            Space::ifl12(2, 3).unwrap(),
            Space::ifl12(4, 5).unwrap(),
        ];
        for s in spaces {
            assert_eq!(Space::parse(&s.name()).unwrap(), s, "{}", s.name());
        }
        assert_eq!(Space::igr(2, 3).unwrap().name(), "IGr(2,6)");
        assert!(Space::parse("IGr(2,5)").is_err());
        assert!(Space::parse("Foo(1,2)").is_err());
    }

    #[test]
    fn tautological_ranks() {
        let s = Space::igr(2, 4).unwrap();
        assert_eq!(taut_weights(&s, Taut::VDual).len(), 8);
        assert_eq!(taut_weights(&s, Taut::QDual).len(), 6);
        let g = Space::gr(2, 5).unwrap();
        assert_eq!(taut_weights(&g, Taut::QDual).len(), 3);
    }
}
