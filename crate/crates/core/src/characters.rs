//! Exact torus characters for products of `GL_l` and `Sp_{2m}`.
//!
//! A [`Character`] is a Laurent polynomial with big-integer coefficients.
//! Irreducible characters come from the Weyl character formula, evaluated as
//! an exact quotient of alternants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weights::{is_diagram, is_dominant, pad};

/// A classical factor. `Sp(m)` denotes `Sp_{2m}` (rank `m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Gl(usize),
    Sp(usize),
}

impl Group {
    pub fn rank(self) -> usize {
        match self {
            Group::Gl(l) | Group::Sp(l) => l,
        }
    }

    pub fn is_dominant(self, w: &[i64]) -> bool {
        w.len() == self.rank()
            && match self {
                Group::Gl(_) => is_dominant(w),
                Group::Sp(_) => is_diagram(w),
            }
    }

    fn check(self, w: &[i64]) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        if !self.is_dominant(w) {
            return Err(match self {
                Group::Gl(_) => Error::NotDominant(w.to_vec()),
                Group::Sp(_) => Error::NotDiagram(w.to_vec()),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Gl(l) => write!(f, "GL({l})"),
            Group::Sp(m) => write!(f, "Sp({})", 2 * m),
        }
    }
}

fn nvars(layout: &[Group]) -> usize {
    layout.iter().map(|g| g.rank()).sum()
}

/// A Laurent polynomial over the maximal torus of a product of classical groups.
///
/// Variables are laid out factor by factor in the order of `layout`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    layout: Vec<Group>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl Character {
    pub fn zero(layout: Vec<Group>) -> Self {
        Character {
            layout,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(layout: Vec<Group>) -> Self {
        let n = nvars(&layout);
        Self::monomial(layout, vec![0; n], BigInt::one())
    }

    pub fn monomial(layout: Vec<Group>, exp: Vec<i64>, coeff: BigInt) -> Self {
        debug_assert_eq!(exp.len(), nvars(&layout));
        let mut c = Self::zero(layout);
        c.add_term(exp, coeff);
        c
    }

    pub fn layout(&self) -> &[Group] {
        &self.layout
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Character, k: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * k);
        }
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut r = self.clone();
        r.add_scaled(other, &BigInt::one());
        r
    }

    pub fn sub(&self, other: &Character) -> Character {
        let mut r = self.clone();
        r.add_scaled(other, &-BigInt::one());
        r
    }

    pub fn scale(&self, k: &BigInt) -> Character {
        let mut r = Character::zero(self.layout.clone());
        r.add_scaled(self, k);
        r
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut acc: HashMap<Vec<i64>, BigInt> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Character {
            layout: self.layout.clone(),
            terms,
        }
    }

    /// Character of the external product: the layouts are concatenated.
    pub fn outer(&self, other: &Character) -> Character {
        let mut layout = self.layout.clone();
        layout.extend_from_slice(&other.layout);
        let mut r = Character::zero(layout);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                e.extend_from_slice(e2);
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    /// Reinterpret the same variables under a different factorisation
    /// (restriction to a Levi subgroup sharing the maximal torus).
    pub fn relabel(&self, layout: Vec<Group>) -> Result<Character> {
        if nvars(&layout) != nvars(&self.layout) {
            return Err(Error::LengthMismatch {
                expected: nvars(&self.layout),
                got: nvars(&layout),
            });
        }
        Ok(Character {
            layout,
            terms: self.terms.clone(),
        })
    }

    /// Value at the identity of the torus.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn leading(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division; fails unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Character) -> Result<Character> {
        let (dl, dc) = divisor
            .leading()
            .ok_or_else(|| Error::OutOfRange("division by zero character".into()))?;
        let (dl, dc) = (dl.clone(), dc.clone());
        let mut rem = self.clone();
        let mut q = Character::zero(self.layout.clone());
        while let Some((el, ec)) = rem.leading() {
            if !(ec % &dc).is_zero() {
                return Err(Error::OutOfRange("inexact character division".into()));
            }
            let c = ec / &dc;
            let e: Vec<i64> = el.iter().zip(&dl).map(|(a, b)| a - b).collect();
            for (de, dcoef) in &divisor.terms {
                let m: Vec<i64> = e.iter().zip(de).map(|(a, b)| a + b).collect();
                rem.add_term(m, -(&c * dcoef));
            }
            q.add_term(e, c);
        }
        Ok(q)
    }

    /// Monomials `exp: coeff` in increasing lexicographic order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (e, c) in &self.terms {
            s.push_str(&format!("{e:?}: {c}\n"));
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Irreducible characters

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    // Lexicographic order; sign from inversion parity.
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        let inv = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        out.push((p.clone(), if inv % 2 == 0 { 1 } else { -1 }));
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// `Σ_w sgn(w) e^{w(v)}` over the Weyl group of a single factor.
fn alternant(group: Group, v: &[i64]) -> Character {
    let n = group.rank();
    let mut c = Character::zero(vec![group]);
    for (p, s) in permutations(n) {
        let base: Vec<i64> = p.iter().map(|&i| v[i]).collect();
        match group {
            Group::Gl(_) => c.add_term(base, BigInt::from(s)),
            Group::Sp(_) => {
                for mask in 0u32..(1 << n) {
                    let mut e = base.clone();
                    let mut sign = s;
                    for (i, x) in e.iter_mut().enumerate() {
                        if mask & (1 << i) != 0 {
                            *x = -*x;
                            sign = -sign;
                        }
                    }
                    c.add_term(e, BigInt::from(sign));
                }
            }
        }
    }
    c
}

/// Factors of the Weyl denominator, each with leading coefficient one.
fn denominator_factors(group: Group) -> Vec<Character> {
    let n = group.rank();
    let lay = vec![group];
    let unit = |i: usize, k: i64| {
        let mut e = vec![0; n];
        e[i] = k;
        e
    };
    let mut out = Vec::new();
    let one = BigInt::one();
    match group {
        Group::Gl(_) => {
            for i in 0..n {
                for j in i + 1..n {
                    let mut f = Character::monomial(lay.clone(), unit(i, 1), one.clone());
                    f.add_term(unit(j, 1), -one.clone());
                    out.push(f);
                }
            }
        }
        Group::Sp(_) => {
            for i in 0..n {
                let mut f = Character::monomial(lay.clone(), unit(i, 1), one.clone());
                f.add_term(unit(i, -1), -one.clone());
                out.push(f);
            }
            for i in 0..n {
                for j in i + 1..n {
                    let mut f = Character::monomial(lay.clone(), unit(i, 1), one.clone());
                    f.add_term(unit(i, -1), one.clone());
                    f.add_term(unit(j, 1), -one.clone());
                    f.add_term(unit(j, -1), -one.clone());
                    out.push(f);
                }
            }
        }
    }
    out
}

pub fn rho(group: Group) -> Vec<i64> {
    let n = group.rank() as i64;
    match group {
        Group::Gl(_) => (0..n).map(|i| n - 1 - i).collect(),
        Group::Sp(_) => (0..n).map(|i| n - i).collect(),
    }
}

type IrrCache = Mutex<HashMap<(Group, Vec<i64>), Arc<Character>>>;
static IRREDUCIBLE: LazyLock<IrrCache> = LazyLock::new(Default::default);

/// Character of the irreducible representation with the given highest weight.
pub fn irreducible_character(group: Group, weight: &[i64]) -> Result<Arc<Character>> {
    group.check(weight)?;
    let key = (group, weight.to_vec());
    if let Some(c) = IRREDUCIBLE.lock().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let c = Arc::new(weyl_character(group, weight)?);
    IRREDUCIBLE.lock().unwrap().insert(key, c.clone());
    Ok(c)
}

fn weyl_character(group: Group, weight: &[i64]) -> Result<Character> {
    if group.rank() == 0 {
        return Ok(Character::one(vec![group]));
    }
    // For GL, a uniform shift is a power of the determinant.
    let (shift, w): (i64, Vec<i64>) = match group {
        Group::Gl(_) => {
            let s = *weight.last().unwrap();
            (s, weight.iter().map(|x| x - s).collect())
        }
        Group::Sp(_) => (0, weight.to_vec()),
    };
    let v: Vec<i64> = w.iter().zip(rho(group)).map(|(a, b)| a + b).collect();
    let mut num = alternant(group, &v);
    for f in denominator_factors(group) {
        num = num.div_exact(&f)?;
    }
    if shift != 0 {
        let n = group.rank();
        num.terms = num
            .terms
            .into_iter()
            .map(|(e, c)| (e.into_iter().map(|x| x + shift).collect(), c))
            .collect();
        debug_assert_eq!(num.layout, vec![Group::Gl(n)]);
    }
    Ok(num)
}

/// Character of an irreducible of a product group: the outer product of factor characters.
pub fn product_character(layout: &[Group], weight: &[i64]) -> Result<Character> {
    if weight.len() != nvars(layout) {
        return Err(Error::LengthMismatch {
            expected: nvars(layout),
            got: weight.len(),
        });
    }
    let mut c = Character::one(vec![]);
    let mut off = 0;
    for &g in layout {
        let part = &weight[off..off + g.rank()];
        c = c.outer(&*irreducible_character(g, part)?);
        off += g.rank();
    }
    Ok(c)
}

/// Weyl dimension formula, exact.
pub fn weyl_dimension(group: Group, weight: &[i64]) -> Result<BigInt> {
    group.check(weight)?;
    let n = group.rank();
    let r = rho(group);
    let l: Vec<i64> = weight.iter().zip(&r).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= l[i] - l[j];
            den *= r[i] - r[j];
            if let Group::Sp(_) = group {
                num *= l[i] + l[j];
                den *= r[i] + r[j];
            }
        }
        if let Group::Sp(_) = group {
            num *= l[i];
            den *= r[i];
        }
    }
    Ok(num / den)
}

pub fn product_dimension(layout: &[Group], weight: &[i64]) -> Result<BigInt> {
    let mut d = BigInt::one();
    let mut off = 0;
    for &g in layout {
        d *= weyl_dimension(g, &weight[off..off + g.rank()])?;
        off += g.rank();
    }
    Ok(d)
}

// ---------------------------------------------------------------------------
// Decomposition

/// A (virtual) representation: dominant weights of the product group with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub terms: BTreeMap<Vec<i64>, BigInt>,
}

impl Decomposition {
    pub fn single(w: Vec<i64>) -> Self {
        let mut d = Decomposition::default();
        d.terms.insert(w, BigInt::one());
        d
    }

    pub fn add(&mut self, w: Vec<i64>, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += m;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|m| !m.is_negative())
    }

    pub fn multiplicity(&self, w: &[i64]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }
}

fn dominant_in_layout(layout: &[Group], w: &[i64]) -> bool {
    let mut off = 0;
    layout.iter().all(|&g| {
        let ok = g.is_dominant(&w[off..off + g.rank()]);
        off += g.rank();
        ok
    })
}

/// Greedy highest-weight extraction.
///
/// Fails with [`Error::NotInvariant`] if the character is not Weyl-invariant
/// (its lexicographically leading exponent is not dominant).
pub fn decompose(c: &Character) -> Result<Decomposition> {
    let layout = c.layout.clone();
    let mut rem = c.clone();
    let mut out = Decomposition::default();
    while let Some((e, k)) = rem.leading() {
        let (e, k) = (e.clone(), k.clone());
        if !dominant_in_layout(&layout, &e) {
            return Err(Error::NotInvariant(e));
        }
        let chi = product_character(&layout, &e)?;
        rem.add_scaled(&chi, &-k.clone());
        out.add(e, k);
    }
    Ok(out)
}

/// Character of a decomposition.
pub fn recompose(layout: &[Group], d: &Decomposition) -> Result<Character> {
    let mut c = Character::zero(layout.to_vec());
    for (w, m) in &d.terms {
        c.add_scaled(&product_character(layout, w)?, m);
    }
    Ok(c)
}

// ---------------------------------------------------------------------------
// Littlewood–Richardson

type LrCache = Mutex<HashMap<(Vec<i64>, Vec<i64>), Arc<BTreeMap<Vec<i64>, u64>>>>;
static LR: LazyLock<LrCache> = LazyLock::new(Default::default);

/// `Σ^α ⊗ Σ^β` for `GL_l`, by enumeration of LR tableaux. Entries may be negative.
pub fn lr_tensor(alpha: &[i64], beta: &[i64]) -> Result<Arc<BTreeMap<Vec<i64>, u64>>> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch {
            expected: alpha.len(),
            got: beta.len(),
        });
    }
    Group::Gl(alpha.len()).check(alpha)?;
    Group::Gl(beta.len()).check(beta)?;
    let key = (alpha.to_vec(), beta.to_vec());
    if let Some(r) = LR.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let l = alpha.len();
    let sa = alpha.last().map_or(0, |&x| -x.min(0));
    let sb = beta.last().map_or(0, |&x| -x.min(0));
    let a: Vec<i64> = alpha.iter().map(|x| x + sa).collect();
    let b: Vec<i64> = beta.iter().map(|x| x + sb).collect();
    let mut out = BTreeMap::new();
    if l == 0 {
        out.insert(vec![], 1);
    } else {
        let mut st = LrState {
            a: &a,
            b: &b,
            l,
            used: vec![0; l],
            rows: Vec::new(),
            out: &mut out,
        };
        st.row(0);
    }
    let out: BTreeMap<Vec<i64>, u64> = out
        .into_iter()
        .map(|(g, c)| (g.into_iter().map(|x| x - sa - sb).collect(), c))
        .collect();
    let out = Arc::new(out);
    LR.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

struct LrState<'a> {
    a: &'a [i64],
    b: &'a [i64],
    l: usize,
    // used[j]: letters j placed in completed rows
    used: Vec<i64>,
    // rows[i][j]: count of letter j in row i
    rows: Vec<Vec<i64>>,
    out: &'a mut BTreeMap<Vec<i64>, u64>,
}

impl LrState<'_> {
    fn row(&mut self, i: usize) {
        if i == self.l {
            if self.used.as_slice() == self.b {
                let g: Vec<i64> = (0..self.l)
                    .map(|r| self.a[r] + self.rows[r].iter().sum::<i64>())
                    .collect();
                *self.out.entry(g).or_default() += 1;
            }
            return;
        }
        let letters = (i + 1).min(self.l);
        let mut cur = vec![0; letters];
        self.letter(i, 0, &mut cur);
    }

    fn letter(&mut self, i: usize, j: usize, cur: &mut Vec<i64>) {
        if j == cur.len() {
            for (jj, c) in cur.iter().enumerate() {
                self.used[jj] += c;
            }
            self.rows.push(cur.clone());
            self.row(i + 1);
            self.rows.pop();
            for (jj, c) in cur.iter().enumerate() {
                self.used[jj] -= c;
            }
            return;
        }
        let avail = self.b[j] - self.used[j];
        let placed_le: i64 = cur[..j].iter().sum();
        for c in 0..=avail {
            // lattice: reading letters j before j-1 in this row
            if j > 0 && self.used[j - 1] < self.used[j] + c {
                break;
            }
            // column strictness against the row above
            if i > 0 {
                let above: i64 = self.a[i - 1] + self.rows[i - 1][..j].iter().sum::<i64>();
                if self.a[i] + placed_le + c > above {
                    break;
                }
            }
            cur[j] = c;
            self.letter(i, j + 1, cur);
        }
        cur[j] = 0;
    }
}

pub fn lr_coefficient(alpha: &[i64], beta: &[i64], gamma: &[i64]) -> Result<u64> {
    if gamma.len() != alpha.len() {
        return Err(Error::LengthMismatch {
            expected: alpha.len(),
            got: gamma.len(),
        });
    }
    Ok(lr_tensor(alpha, beta)?.get(gamma).copied().unwrap_or(0))
}

/// A term of a GL restriction: weights of the two factors and the multiplicity.
pub type RestrictTerm = (Vec<i64>, Vec<i64>, u64);

type RestrictCache = Mutex<HashMap<(Vec<i64>, usize), Arc<Vec<RestrictTerm>>>>;
static RESTRICT: LazyLock<RestrictCache> = LazyLock::new(Default::default);

/// Restriction `GL(a+b) → GL(a) × GL(b)` of `Σ^γ`: all `(λ, μ, c^γ_{λμ})`.
pub fn restrict_gl(gamma: &[i64], a: usize) -> Result<Arc<Vec<RestrictTerm>>> {
    let n = gamma.len();
    if a > n {
        return Err(Error::OutOfRange(format!(
            "block size {a} exceeds rank {n}"
        )));
    }
    Group::Gl(n).check(gamma)?;
    let key = (gamma.to_vec(), a);
    if let Some(r) = RESTRICT.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let b = n - a;
    let s = gamma.last().map_or(0, |&x| -x.min(0));
    let g: Vec<i64> = gamma.iter().map(|x| x + s).collect();
    let total: i64 = g.iter().sum();
    let mut out = Vec::new();
    // λ ⊂ g with at most a rows, μ with at most b rows and |μ| = |g| - |λ|
    let lambdas = contained(&g[..a]);
    for lam in lambdas {
        let rest = total - lam.iter().sum::<i64>();
        let mus = contained(&g[..b])
            .into_iter()
            .filter(|m| m.iter().sum::<i64>() == rest);
        for mu in mus {
            let c = lr_coefficient(&pad(&lam, n), &pad(&mu, n), &g)?;
            if c > 0 {
                out.push((
                    lam.iter().map(|x| x - s).collect(),
                    mu.iter().map(|x| x - s).collect(),
                    c,
                ));
            }
        }
    }
    let out = Arc::new(out);
    RESTRICT.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

// Partitions λ with λ_i ≤ bound_i (bound weakly decreasing, non-negative).
fn contained(bound: &[i64]) -> Vec<Vec<i64>> {
    fn go(bound: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == bound.len() {
            out.push(cur.clone());
            return;
        }
        let top = cur
            .last()
            .copied()
            .unwrap_or(i64::MAX)
            .min(bound[cur.len()]);
        for x in 0..=top {
            cur.push(x);
            go(bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bound, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Symplectic tensor products and branching, via the character oracle only

type SpTensorCache = Mutex<HashMap<(usize, Vec<i64>, Vec<i64>), Arc<Decomposition>>>;
static SP_TENSOR: LazyLock<SpTensorCache> = LazyLock::new(Default::default);

pub fn sp_tensor(m: usize, mu: &[i64], nu: &[i64]) -> Result<Arc<Decomposition>> {
    let (x, y) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (m, x.to_vec(), y.to_vec());
    if let Some(r) = SP_TENSOR.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let g = Group::Sp(m);
    let c = irreducible_character(g, x)?.mul(&*irreducible_character(g, y)?);
    let d = Arc::new(decompose(&c)?);
    SP_TENSOR.lock().unwrap().insert(key, d.clone());
    Ok(d)
}

/// A term of a branching: `GL(t)` weight, `Sp(2m)` weight, multiplicity.
pub type BranchTerm = (Vec<i64>, Vec<i64>, BigInt);

type BranchCache = Mutex<HashMap<(Vec<i64>, usize, usize), Arc<Vec<BranchTerm>>>>;
static BRANCH: LazyLock<BranchCache> = LazyLock::new(Default::default);

/// Restriction `Sp(2(m+t)) → GL(t) × Sp(2m)` along the torus specialisation
/// `(s'_1..s'_{m+t}) ↦ (y_1..y_t; s_1..s_m)`.
pub fn branch_sp_to_gl_sp(theta: &[i64], t: usize, m: usize) -> Result<Arc<Vec<BranchTerm>>> {
    if theta.len() != m + t {
        return Err(Error::LengthMismatch {
            expected: m + t,
            got: theta.len(),
        });
    }
    let key = (theta.to_vec(), t, m);
    if let Some(r) = BRANCH.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let chi = irreducible_character(Group::Sp(m + t), theta)?;
    let d = decompose(&chi.relabel(vec![Group::Gl(t), Group::Sp(m)])?)?;
    let out: Vec<BranchTerm> = d
        .terms
        .into_iter()
        .map(|(w, c)| (w[..t].to_vec(), w[t..].to_vec(), c))
        .collect();
    let out = Arc::new(out);
    BRANCH.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// Elementary symmetric polynomial `e_b` of a list of monomials, over `layout`.
pub fn exterior_power(layout: &[Group], monomials: &[Vec<i64>], b: usize) -> Character {
    let n = nvars(layout);
    // dp[j] = e_j of the monomials processed so far
    let mut dp: Vec<Character> = (0..=b).map(|_| Character::zero(layout.to_vec())).collect();
    dp[0] = Character::one(layout.to_vec());
    for mono in monomials {
        debug_assert_eq!(mono.len(), n);
        let x = Character::monomial(layout.to_vec(), mono.clone(), BigInt::one());
        for j in (1..=b).rev() {
            let t = dp[j - 1].mul(&x);
            dp[j] = dp[j].add(&t);
        }
    }
    dp.swap_remove(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::enumerate_bounded;

    fn ch(g: Group, w: &[i64]) -> Character {
        (*irreducible_character(g, w).unwrap()).clone()
    }

    fn mono(g: Group, e: &[i64]) -> Character {
        Character::monomial(vec![g], e.to_vec(), BigInt::one())
    }

    #[test]
    fn small_characters() {
        let g = Group::Gl(2);
        assert_eq!(ch(g, &[1, 0]), mono(g, &[1, 0]).add(&mono(g, &[0, 1])));
        assert_eq!(ch(g, &[1, 1]), mono(g, &[1, 1]));
        let s = Group::Sp(2);
        let std = [[1, 0], [-1, 0], [0, 1], [0, -1]]
            .iter()
            .fold(Character::zero(vec![s]), |acc, e| acc.add(&mono(s, e)));
        assert_eq!(ch(s, &[1, 0]), std);
        assert_eq!(
            ch(Group::Gl(2), &[-1, -2]),
            mono(g, &[-1, -2]).add(&mono(g, &[-2, -1]))
        );
    }

    #[test]
    fn dimensions_match_characters() {
        for l in 1..=3 {
            for w in enumerate_bounded(l, -2, 3) {
                let g = Group::Gl(l);
                assert_eq!(weyl_dimension(g, &w).unwrap(), ch(g, &w).eval_ones());
            }
        }
        for m in 1..=3 {
            for w in enumerate_bounded(m, 0, 3) {
                let g = Group::Sp(m);
                assert_eq!(weyl_dimension(g, &w).unwrap(), ch(g, &w).eval_ones());
            }
        }
        assert_eq!(
            weyl_dimension(Group::Gl(3), &[1, 1, 0]).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            weyl_dimension(Group::Sp(2), &[1, 1]).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            weyl_dimension(Group::Gl(4), &[0, 0, 0, 0]).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn decompose_examples() {
        let g = Group::Gl(2);
        let sq = ch(g, &[1, 0]).mul(&ch(g, &[1, 0]));
        let d = decompose(&sq).unwrap();
        assert_eq!(d.terms.len(), 2);
        assert_eq!(d.multiplicity(&[2, 0]), BigInt::one());
        assert_eq!(d.multiplicity(&[1, 1]), BigInt::one());

        let s = Group::Sp(2);
        let d = decompose(&ch(s, &[1, 0]).mul(&ch(s, &[1, 0]))).unwrap();
        assert_eq!(d, {
            let mut e = Decomposition::default();
            for w in [[2, 0], [1, 1], [0, 0]] {
                e.add(w.to_vec(), BigInt::one());
            }
            e
        });
        assert_eq!(
            decompose(&ch(Group::Sp(3), &[0, 0, 0])).unwrap(),
            Decomposition::single(vec![0, 0, 0])
        );
        // a non-invariant polynomial is rejected
        assert!(matches!(
            decompose(&mono(g, &[0, 1])),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&[1, 0], &[1, 0], &[2, 0]).unwrap(), 1);
        assert_eq!(
            lr_coefficient(&[2, 1, 0], &[2, 1, 0], &[3, 2, 1]).unwrap(),
            2
        );
        assert!(lr_coefficient(&[1], &[1, 0], &[2, 0]).is_err());
    }

    #[test]
    fn branching_small() {
        let b = branch_sp_to_gl_sp(&[1, 0], 1, 1).unwrap();
        let mut got: Vec<(Vec<i64>, Vec<i64>)> =
            b.iter().map(|(g, s, _)| (g.clone(), s.clone())).collect();
        got.sort();
        assert_eq!(
            got,
            vec![(vec![-1], vec![0]), (vec![0], vec![1]), (vec![1], vec![0])]
        );
        assert!(b.iter().all(|(_, _, c)| c.is_one()));
        let b = branch_sp_to_gl_sp(&[0, 0], 1, 1).unwrap();
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn exterior_of_standard_is_fundamental() {
        let g = Group::Gl(3);
        let monos: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| i64::from(i == j)).collect())
            .collect();
        assert_eq!(exterior_power(&[g], &monos, 2), ch(g, &[1, 1, 0]));
    }
}
