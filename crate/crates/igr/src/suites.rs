//! The ten acceptance sweeps. Each returns a [`CriterionReport`]; heavy sweeps
//! run data-parallel and report failures in input order.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use igr_core::bbw::{cohomology, ext_groups, Space, VirtualBundle};
use igr_core::characters::{
    branch_sp_to_gl_sp, decompose, irreducible_character, lr_coefficient, lr_tensor,
    weyl_dimension, Group,
};
use igr_core::collections::{
    block, blocks, census, dual_candidates, dual_row, f_class, generator, hypothesis_kind,
    verify_block_exceptionality, BlockKind,
};
use igr_core::complexes::{
    build_generalized_staircase, build_koszul, build_secondary_staircase,
    build_symplectic_staircase, check_ktheory_exact, tau_truncate,
};
use igr_core::staircase::{d_of_z, ins, marked_f, staircase_data, varrho, Staircase};
use igr_core::weights::{binomial, enumerate_bounded, enumerate_diagrams, size, BlockWeight};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// `(n, k)` of the seeded dual-characterization sample.
pub const DUAL_SAMPLED_CASE: (usize, usize) = (5, 3);
/// Seed of the sampled dual-characterization sweep.
pub const DUAL_SEED: u64 = 0x1d6f_2a71;
/// Number of sampled `((λ;μ), (β;ν))` pairs.
pub const DUAL_SAMPLES: usize = 256;
/// Wall-clock bound for the fixture and census criteria.
pub const FAST_LIMIT: Duration = Duration::from_secs(1);
/// Wall-clock bound for the staircase-invariant and f-machinery sweeps.
pub const MINUTE_LIMIT: Duration = Duration::from_secs(60);
/// Wall-clock bound for the complex, bundle-hood and dual sweeps.
pub const SWEEP_LIMIT: Duration = Duration::from_secs(600);

const MAX_LISTED: usize = 20;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// First few failure descriptions, in input order.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CriterionReport {
    pub fn within_limit(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed < l)
    }

    pub fn pass(&self) -> bool {
        self.failed == 0 && self.checked > 0 && self.within_limit()
    }

    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} {:<28} checked={} failed={} time={:.3}s",
            if self.pass() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.failed,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Running count of checks.
#[derive(Debug, Default)]
struct Tally {
    checked: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    fn absorb(&mut self, outcomes: Vec<Outcome>) {
        for o in outcomes {
            self.checked += o.checked;
            for f in o.failures {
                self.failed += 1;
                if self.failures.len() < MAX_LISTED {
                    self.failures.push(f);
                }
            }
        }
    }

    fn finish(
        self,
        id: u8,
        name: &'static str,
        start: Instant,
        limit: Option<Duration>,
        notes: Vec<String>,
    ) -> CriterionReport {
        CriterionReport {
            id,
            name,
            checked: self.checked,
            failed: self.failed,
            failures: self.failures,
            notes,
            elapsed: start.elapsed(),
            limit,
        }
    }
}

/// Result of one parallel work item.
#[derive(Debug, Default, Clone)]
pub struct Outcome {
    pub checked: usize,
    pub failures: Vec<String>,
    /// Euler-level dual checks whose per-degree bound is not sharp.
    pub graded_mismatches: usize,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(msg: String) -> Self {
        Outcome {
            checked: 1,
            failures: vec![msg],
            graded_mismatches: 0,
        }
    }
}

fn par_sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> Vec<Outcome> {
    items.par_iter().map(f).collect()
}

fn cat(a1: i64, abar: &[i64]) -> Vec<i64> {
    let mut v = vec![a1];
    v.extend_from_slice(abar);
    v
}

/// Cohomology dimensions of a class, as `degree → dim`.
fn dims(v: &VirtualBundle) -> igr_core::Result<BTreeMap<i64, BigInt>> {
    cohomology(v)?.dims()
}

// ---------------------------------------------------------------------------
// 1

pub fn criterion1() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    match staircase_data(&[3, 2, 2, 1], -1, 5, None) {
        Ok(d) => {
            t.check(d.vset == [-2, 0, 1], || format!("V = {:?}", d.vset));
            let z: Vec<i64> = d.rows.iter().map(|r| r.z).collect();
            t.check(z == [4, 3, 2, -1, -3, -4, -5], || format!("z = {z:?}"));
            let dd: Vec<usize> = d.rows.iter().map(|r| r.d).collect();
            t.check(dd == [1, 1, 1, 3, 4, 4, 4], || format!("d(α,i) = {dd:?}"));
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    if let Ok(s) = Staircase::new(&[3, 2, 2, 1]) {
        for i in 3..=40 {
            t.check(s.z(i) == -i, || format!("z_{i} = {}", s.z(i)));
        }
    }
    for (z, want) in [(2, 1), (3, 1), (4, 1), (-1, 3), (-3, 4), (-4, 4), (-5, 4)] {
        let got = d_of_z(&[2, 2, 1], z);
        t.check(got == want, || format!("d(ᾱ,{z}) = {got}, want {want}"));
    }
    t.finish(
        1,
        "staircase fixture (3,2,2,1)",
        start,
        Some(FAST_LIMIT),
        vec![],
    )
}

// ---------------------------------------------------------------------------
// 2

pub fn criterion2() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for n in 1..=6 {
        for k in 1..=n {
            match census(n, k) {
                Ok(c) => t.check(
                    c.pass && c.schubert_rank == (1u128 << k) * binomial(n as i64, k as i64),
                    || {
                        format!(
                            "IGr({k},{}): Σ|B_t| = {} ≠ {}",
                            2 * n,
                            c.total,
                            c.schubert_rank
                        )
                    },
                ),
                Err(e) => t.check(false, || e.to_string()),
            }
        }
    }
    t.finish(2, "rank census", start, Some(FAST_LIMIT), vec![])
}

// ---------------------------------------------------------------------------
// 3

enum KJob {
    Staircase(Vec<i64>, Space),
    Symplectic(Vec<i64>, usize),
    Koszul(usize, Space, i64),
    Secondary(Vec<i64>, usize, usize),
}

fn k_exact(job: &KJob) -> Outcome {
    let (built, what) = match job {
        KJob::Staircase(a, s) => (
            build_generalized_staircase(a, s),
            format!("staircase {a:?} on {s}"),
        ),
        KJob::Symplectic(mu, n) => (
            build_symplectic_staircase(mu, *n),
            format!("symplectic staircase μ={mu:?} n={n}"),
        ),
        KJob::Koszul(m, s, tw) => (
            build_koszul(*m, s, *tw),
            format!("koszul m={m} on {s} twist {tw}"),
        ),
        KJob::Secondary(a, k, n) => (
            build_secondary_staircase(a, *k, *n),
            format!("secondary {a:?} on IGr({k},{})", 2 * n),
        ),
    };
    let mut o = Outcome::default();
    match built.and_then(|c| check_ktheory_exact(&c).map(|r| (c, r))) {
        Ok((c, r)) => {
            o.check(r.exact_in_k, || format!("{what}: defect {:?}", r.defect));
            if let KJob::Secondary(a, k, n) = job {
                if a[0] == (n - k + 1) as i64 {
                    let zero = c.claimed.as_ref().is_some_and(VirtualBundle::is_zero);
                    o.check(zero, || format!("{what}: claimed class not zero"));
                }
            }
        }
        Err(e) => return Outcome::error(format!("{what}: {e}")),
    }
    o
}

fn k_jobs() -> igr_core::Result<(Vec<KJob>, BTreeMap<&'static str, usize>)> {
    let mut jobs = Vec::new();
    let mut counts = BTreeMap::new();
    let mut spaces = Vec::new();
    for r in 2..=8 {
        for k in 1..=3.min(r - 1) {
            spaces.push(Space::gr(k, r)?);
        }
    }
    for n in 1..=4 {
        for k in 1..=3.min(n) {
            spaces.push(Space::igr(k, n)?);
        }
    }
    for s in &spaces {
        let k = s.blocks()[0];
        for abar in enumerate_bounded(k - 1, -4, 4) {
            for a1 in -4..=4 {
                jobs.push(KJob::Staircase(cat(a1, &abar), s.clone()));
                *counts.entry("generalized staircase").or_default() += 1;
            }
        }
    }
    for n in 3..=5usize {
        for a in 1..=2i64 {
            if 2 * a as usize >= n {
                continue;
            }
            for rest in enumerate_diagrams(n - 2 * a as usize - 1, a) {
                jobs.push(KJob::Symplectic(cat(a, &rest), n));
                *counts.entry("symplectic staircase").or_default() += 1;
            }
        }
    }
    let koszul_spaces = [
        Space::gr(1, 4)?,
        Space::gr(2, 5)?,
        Space::gr(3, 7)?,
        Space::igr(2, 3)?,
        Space::igr(1, 4)?,
    ];
    for s in &koszul_spaces {
        for m in 0..=6 {
            for tw in -1..=1 {
                jobs.push(KJob::Koszul(m, s.clone(), tw));
                *counts.entry("koszul").or_default() += 1;
            }
        }
    }
    for n in 2..=5usize {
        for k in 2..=4.min(n) {
            let w = (2 * n - k) as i64;
            for a1 in 0..=w.min(3) {
                for abar in enumerate_diagrams(k - 2, w.min(3)) {
                    jobs.push(KJob::Secondary(cat(a1, &abar), k, n));
                    *counts.entry("secondary staircase").or_default() += 1;
                }
            }
        }
    }
    Ok((jobs, counts))
}

pub fn criterion3() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut notes = Vec::new();
    match k_jobs() {
        Ok((jobs, counts)) => {
            for (k, v) in &counts {
                notes.push(format!("{k}: {v} complexes"));
            }
            t.absorb(par_sweep(&jobs, k_exact));
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    t.finish(3, "K-exactness sweep", start, Some(SWEEP_LIMIT), notes)
}

// ---------------------------------------------------------------------------
// 4

pub const BUNDLE_CASES: [(usize, usize); 4] = [(3, 2), (4, 2), (4, 3), (5, 3)];

pub fn criterion4() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut items = Vec::new();
    for (n, k) in BUNDLE_CASES {
        for tt in 0..=k {
            match block(n, k, tt, hypothesis_kind(k, tt)) {
                Ok(b) => items.extend(b.weights.into_iter().map(|w| (n, k, tt, w))),
                Err(e) => t.check(false, || e.to_string()),
            }
        }
    }
    t.absorb(par_sweep(&items, |(n, k, tt, w)| {
        match f_class(*tt, &w.gl, &w.sp, *n, *k) {
            Ok(r) => {
                let mut o = Outcome::default();
                o.check(r.concentrated_degree_zero, || {
                    format!(
                        "IGr({k},{}) t={tt} ({w}): not a bundle: {:?}",
                        2 * n,
                        r.virtual_class
                    )
                });
                o
            }
            Err(e) => Outcome::error(format!("IGr({k},{}) t={tt} ({w}): {e}", 2 * n)),
        }
    }));
    t.finish(
        4,
        "F bundle-hood",
        start,
        Some(SWEEP_LIMIT),
        vec![format!("{} objects", items.len())],
    )
}

// ---------------------------------------------------------------------------
// 5

/// `(t, (λ;μ), (β;ν))`.
pub type DualPair = (usize, BlockWeight, BlockWeight);

/// All `(t, (λ;μ), (β;ν))` with `(λ;μ)` in the applicable block and `(β;ν) ⪯ (λ;μ)` in `B̃_t`.
pub fn dual_pairs(n: usize, k: usize) -> igr_core::Result<Vec<(usize, BlockWeight, BlockWeight)>> {
    let mut out = Vec::new();
    for t in 0..=k {
        for w in block(n, k, t, hypothesis_kind(k, t))?.weights {
            for b in dual_candidates(t, &w, n, k)? {
                out.push((t, w.clone(), b));
            }
        }
    }
    Ok(out)
}

/// Deterministic sample of `count` pairs (all pairs when there are fewer).
pub fn sample_dual_pairs(
    n: usize,
    k: usize,
    count: usize,
    seed: u64,
) -> igr_core::Result<(usize, Vec<DualPair>)> {
    let all = dual_pairs(n, k)?;
    let total = all.len();
    if count >= total {
        return Ok((total, all));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx = rand::seq::index::sample(&mut rng, total, count).into_vec();
    idx.sort_unstable();
    Ok((total, idx.into_iter().map(|i| all[i].clone()).collect()))
}

/// How strictly [`check_dual_pairs`] compares against the δ-pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualLevel {
    /// Every cohomological degree.
    Graded,
    /// Euler characteristic only; graded mismatches are counted in `Outcome::notes`.
    Euler,
}

/// Check the δ-pattern on a list of pairs, computing each ℱ once.
pub fn check_dual_pairs(
    n: usize,
    k: usize,
    pairs: &[(usize, BlockWeight, BlockWeight)],
    level: DualLevel,
) -> Vec<Outcome> {
    let mut groups: BTreeMap<(usize, BlockWeight), Vec<BlockWeight>> = BTreeMap::new();
    for (t, w, b) in pairs {
        groups.entry((*t, w.clone())).or_default().push(b.clone());
    }
    let groups: Vec<_> = groups.into_iter().collect();
    groups
        .par_iter()
        .map(|((t, w), betas)| {
            let f = match f_class(*t, &w.gl, &w.sp, n, k) {
                Ok(f) => f,
                Err(e) => {
                    return Outcome {
                        checked: betas.len(),
                        failures: vec![format!("t={t} ({w}): {e}")],
                        graded_mismatches: 0,
                    }
                }
            };
            let mut o = Outcome::default();
            for b in betas {
                o.checked += 1;
                match dual_row(&f, b) {
                    Ok(r) if r.graded_ok && r.euler_ok => {}
                    Ok(r) if level == DualLevel::Euler && r.euler_ok => o.graded_mismatches += 1,
                    Ok(r) => o.failures.push(format!(
                        "IGr({k},{}) t={t} ({w}) vs ({b}): Ext = {:?}, expected δ = {}",
                        2 * n,
                        r.graded,
                        r.expected
                    )),
                    Err(e) => o.failures.push(format!("t={t} ({w}) vs ({b}): {e}")),
                }
            }
            o
        })
        .collect()
}

pub fn criterion5() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut notes = Vec::new();
    for (n, k) in [(3, 2), (4, 2)] {
        match dual_pairs(n, k) {
            Ok(p) => {
                notes.push(format!("IGr({k},{}): {} pairs, exhaustive", 2 * n, p.len()));
                t.check(p.len() >= 200 || n == 3, || {
                    format!("IGr({k},{}): only {} pairs", 2 * n, p.len())
                });
                t.absorb(check_dual_pairs(n, k, &p, DualLevel::Graded));
            }
            Err(e) => t.check(false, || e.to_string()),
        }
    }
    // Seeded sample on a larger case. ℱ is only known through its associated
    // graded there, so per-degree Ext is an upper bound and the check is on
    // Euler characteristics.
    let (n, k) = DUAL_SAMPLED_CASE;
    match sample_dual_pairs(n, k, DUAL_SAMPLES, DUAL_SEED) {
        Ok((total, p)) => {
            notes.push(format!(
                "IGr({k},{}): {} of {total} pairs, seed {DUAL_SEED:#x}",
                2 * n,
                p.len()
            ));
            t.check(p.len() >= 200, || format!("only {} pairs sampled", p.len()));
            let outs = check_dual_pairs(n, k, &p, DualLevel::Euler);
            let loose: usize = outs.iter().map(|o| o.graded_mismatches).sum();
            notes.push(format!(
                "IGr({k},{}): Euler-level; {loose} pairs with cancelling degrees",
                2 * n
            ));
            t.absorb(outs);
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    t.finish(5, "dual characterization", start, Some(SWEEP_LIMIT), notes)
}

// ---------------------------------------------------------------------------
// 6

pub fn criterion6() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut cases = Vec::new();
    for (n, k) in [(3, 2), (4, 2), (4, 3)] {
        cases.push((n, k, k, BlockKind::Big, true));
    }
    cases.push((3, 2, 0, BlockKind::Small, false));
    cases.push((3, 2, 1, BlockKind::Big, false));
    let outs = par_sweep(&cases, |&(n, k, tt, kind, higher)| {
        let name = format!("IGr({k},{}) {kind:?} block t={tt}", 2 * n);
        match block(n, k, tt, kind).and_then(|b| verify_block_exceptionality(&b)) {
            Ok(r) => {
                let mut o = Outcome::default();
                o.check(r.dimension_level_pass, || {
                    format!("{name}: graded dimensions differ: {:?}", r.failures)
                });
                o.check(r.order_vanishing, || {
                    format!("{name}: order vanishing fails: {:?}", r.failures)
                });
                if higher {
                    o.check(r.higher_ext_vanish, || {
                        format!("{name}: Ext^>0 ≠ 0: {:?}", r.failures)
                    });
                }
                o
            }
            Err(e) => Outcome::error(format!("{name}: {e}")),
        }
    });
    t.absorb(outs);
    t.finish(6, "exceptionality", start, None, vec![])
}

// ---------------------------------------------------------------------------
// 7

fn staircase_invariants(alpha: &[i64]) -> Outcome {
    let mut o = Outcome::default();
    let s = match Staircase::new(alpha) {
        Ok(s) => s,
        Err(e) => return Outcome::error(format!("{alpha:?}: {e}")),
    };
    let v = s.v();
    o.check(
        v == s.v_from_definition() && (0..alpha.len() as i64).contains(&v),
        || {
            format!(
                "{alpha:?}: v = {v}, from definition {}",
                s.v_from_definition()
            )
        },
    );
    for i in -3..=alpha[0] + v + 3 {
        let (b, d) = (s.b(i), s.d(i) as i64);
        o.check(b == size(alpha) - size(&s.alpha_i(i)), || {
            format!("def:b {alpha:?} i={i}")
        });
        o.check(b == i - v + d - 1, || format!("b=i−v+d {alpha:?} i={i}"));
        o.check(s.d(i + 1) as i64 - d == s.z(i) - s.z(i + 1) - 1, || {
            format!("difference {alpha:?} i={i}")
        });
        o.check(s.d(i) == s.d_ineq(i), || format!("d-ineq {alpha:?} i={i}"));
        o.check(s.alpha_i(i) == s.alpha_i_explicit(i), || {
            format!("closed form {alpha:?} i={i}")
        });
    }
    o
}

/// Brute-force inverse of `α ↦ (α^(i), b^i, 𝕕(α,i))` over a box, for length `t`.
fn brute_force_inverse(t: usize) -> BTreeMap<(Vec<i64>, i64, usize), BTreeSet<Vec<i64>>> {
    let mut map: BTreeMap<_, BTreeSet<Vec<i64>>> = BTreeMap::new();
    for abar in enumerate_bounded(t - 1, -4, 6) {
        for a1 in -15..=15 {
            let alpha = cat(a1, &abar);
            let s = Staircase::new(&alpha).expect("dominant ᾱ");
            for i in -30..=30 {
                map.entry((s.alpha_i(i), s.b(i), s.d(i)))
                    .or_default()
                    .insert(alpha.clone());
            }
        }
    }
    map
}

pub fn criterion7() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut alphas = Vec::new();
    for len in 1..=5usize {
        for abar in enumerate_bounded(len - 1, -5, 5) {
            for a1 in -5..=5 {
                alphas.push(cat(a1, &abar));
            }
        }
    }
    t.absorb(par_sweep(&alphas, |a| staircase_invariants(a)));

    // Roundtrip: α = ins(β, b, d) realises (β, b, d) at exactly one index.
    let mut ins_cases = Vec::new();
    for len in 1..=5usize {
        for beta in enumerate_bounded(len, -5, 5) {
            for d in 1..=len {
                for b in -3..=8 {
                    ins_cases.push((beta.clone(), b, d));
                }
            }
        }
    }
    t.absorb(par_sweep(&ins_cases, |(beta, b, d)| {
        let mut o = Outcome::default();
        match ins(beta, *b, *d).and_then(|a| Staircase::new(&a).map(|s| (a, s))) {
            Ok((a, s)) => {
                let hits = (-40..=a[0] + 40)
                    .filter(|&i| s.alpha_i(i) == beta[..] && s.b(i) == *b && s.d(i) == *d)
                    .count();
                o.check(hits == 1, || {
                    format!("ins({beta:?},{b},{d}) = {a:?} realised {hits} times")
                });
            }
            Err(e) => o.check(false, || format!("ins({beta:?},{b},{d}): {e}")),
        }
        o
    }));

    // Uniqueness of the weight: no other α in a box realises (β, b, d).
    for len in 1..=3usize {
        let inverse = brute_force_inverse(len);
        for beta in enumerate_bounded(len, -2, 3) {
            for d in 1..=len {
                for b in -2..=5 {
                    let want = ins(&beta, b, d).ok();
                    let got = inverse.get(&(beta.clone(), b, d));
                    let ok = match (&want, got) {
                        (Some(w), Some(g)) => g.len() == 1 && g.contains(w),
                        _ => false,
                    };
                    t.check(ok, || {
                        format!("({beta:?},{b},{d}) realised by {got:?}, want {want:?}")
                    });
                }
            }
        }
    }

    // b = d: ϱ realises (β, d, d) at i_ϱ = 𝕧(ϱ)+1.
    for len in 1..=5usize {
        for beta in enumerate_diagrams(len, 5) {
            for d in 1..=len {
                let ok = varrho(&beta, d)
                    .and_then(|r| Staircase::new(&r).map(|s| (r, s)))
                    .is_ok_and(|(r, s)| {
                        let i = s.i_alpha();
                        r[0] == beta[d - 1] + 1
                            && i == s.v() + 1
                            && s.alpha_i(i) == beta[..]
                            && s.b(i) == d as i64
                            && s.d(i) == d
                    });
                t.check(ok, || format!("ϱ({beta:?},{d})"));
            }
        }
    }
    t.finish(
        7,
        "staircase invariants",
        start,
        Some(MINUTE_LIMIT),
        vec![format!("{} weights", alphas.len())],
    )
}

// ---------------------------------------------------------------------------
// 8

/// `(b^i, α^(i))` for the indices with `1 ≤ b^i ≤ t`, `0 ≤ i ≤ δ`.
fn tau_marks(s: &Staircase, t: i64) -> Vec<(i64, Vec<i64>)> {
    (0..=s.delta())
        .filter(|&i| (1..=t).contains(&s.b(i)))
        .map(|i| (s.b(i), s.alpha_i(i)))
        .collect()
}

pub fn criterion8() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for tt in 1..=3usize {
        for w in 0..=4i64 {
            for abar in enumerate_diagrams(tt - 1, w) {
                for a1 in 0..=w {
                    let alpha = cat(a1, &abar);
                    let s = match Staircase::new(&alpha) {
                        Ok(s) => s,
                        Err(e) => {
                            t.check(false, || e.to_string());
                            continue;
                        }
                    };
                    let window: Vec<i64> = (-10..=w + 12)
                        .filter(|&i| (1..=tt as i64).contains(&s.b(i)))
                        .collect();
                    let marked: Vec<i64> = window
                        .iter()
                        .copied()
                        .filter(|&i| s.b(i) == s.d(i) as i64)
                        .collect();
                    t.check(marked == [s.i_alpha()] && s.i_alpha() == s.v() + 1, || {
                        format!("α={alpha:?}: b=d at {marked:?}, i_α = {}", s.i_alpha())
                    });
                    let f = |i: i64| marked_f(&s.alpha_i(i), s.b(i) as usize);
                    let fmin = f(s.i_alpha());
                    t.check(
                        window.iter().all(|&i| i == s.i_alpha() || f(i) > fmin),
                        || format!("α={alpha:?}: f not strictly minimal at i_α"),
                    );
                    for i in -5..=w + 8 {
                        let lhs = marked_f(&s.alpha_i(i + 1), s.b(i + 1).max(0) as usize)
                            - marked_f(&s.alpha_i(i), s.b(i).max(0) as usize);
                        let rhs = (s.b(i + 1) - s.b(i)) * (1 + 2 * (s.b(i) - s.d(i) as i64));
                        if s.b(i) >= 0 {
                            t.check(lhs == rhs, || format!("f difference α={alpha:?} i={i}"));
                        }
                    }
                }
            }
            // Coverage: the τ-terms of all α ∈ (YD^{w+1}_1∖0) × YD^{w+1}_{t−1} are exactly YD^w_t × [1,t].
            let mut seen = BTreeSet::new();
            for abar in enumerate_diagrams(tt - 1, w + 1) {
                for a1 in 1..=w + 1 {
                    if let Ok(s) = Staircase::new(&cat(a1, &abar)) {
                        seen.extend(tau_marks(&s, tt as i64));
                    }
                }
            }
            let want: BTreeSet<(i64, Vec<i64>)> = enumerate_diagrams(tt, w)
                .into_iter()
                .flat_map(|b| (1..=tt as i64).map(move |d| (d, b.to_vec())))
                .collect();
            t.check(seen == want, || {
                format!(
                    "coverage t={tt} w={w}: {} terms vs {}",
                    seen.len(),
                    want.len()
                )
            });
            // The rectangle (w+1)^t has the single τ-term (t, w^t).
            let rect = vec![w + 1; tt];
            let marks = Staircase::new(&rect)
                .map(|s| tau_marks(&s, tt as i64))
                .unwrap_or_default();
            t.check(marks == [(tt as i64, vec![w; tt])], || {
                format!("rectangle {rect:?}: {marks:?}")
            });
        }
    }
    // The library truncation agrees with the combinatorial τ-terms on real complexes.
    for (n, k) in [(3, 2), (4, 3), (5, 3), (5, 4)] {
        let wd = (2 * n - k) as i64;
        for tt in 1..k {
            for a1 in 0..=wd.min(3) {
                for abar in enumerate_diagrams(k - 2, wd.min(3)) {
                    let alpha = cat(a1, &abar);
                    let ok = build_secondary_staircase(&alpha, k, n).is_ok_and(|h| {
                        let s = Staircase::new(&alpha).expect("valid");
                        // Terms are ordered by degree δ−i, i.e. by decreasing b.
                        let mut bs: Vec<i64> = tau_truncate(&h, tt as i64)
                            .iter()
                            .filter_map(|x| x.b)
                            .collect();
                        // Terms with zero K-class are dropped when the complex is assembled.
                        let present: BTreeSet<i64> = h.terms.iter().filter_map(|x| x.b).collect();
                        let want: Vec<i64> = tau_marks(&s, tt as i64)
                            .into_iter()
                            .map(|(b, _)| b)
                            .filter(|b| present.contains(b))
                            .collect();
                        bs.reverse();
                        bs == want
                    });
                    t.check(ok, || {
                        format!("τ_{tt} of secondary {alpha:?} on IGr({k},{})", 2 * n)
                    });
                }
            }
        }
    }
    t.finish(8, "f-machinery", start, Some(MINUTE_LIMIT), vec![])
}

// ---------------------------------------------------------------------------
// 9

pub fn criterion9() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for len in 1..=3usize {
        let ws = enumerate_bounded(len, 0, 3);
        let g = Group::Gl(len);
        for a in &ws {
            for b in &ws {
                let d = irreducible_character(g, a)
                    .and_then(|x| irreducible_character(g, b).map(|y| decompose(&x.mul(&y))));
                let d = match d {
                    Ok(Ok(d)) => d,
                    Ok(Err(e)) | Err(e) => {
                        t.check(false, || e.to_string());
                        continue;
                    }
                };
                let table = lr_tensor(a, b).ok();
                let agree = table.as_ref().is_some_and(|tab| {
                    tab.len() == d.terms.len()
                        && d.terms.iter().all(|(gm, m)| {
                            tab.get(gm).is_some_and(|c| BigInt::from(*c) == *m)
                                && lr_coefficient(a, b, gm).is_ok_and(|c| BigInt::from(c) == *m)
                        })
                });
                t.check(agree, || format!("LR {a:?} ⊗ {b:?}"));
            }
        }
    }
    for tt in 1..=2usize {
        for m in 0..=3usize {
            for a in 0..=3i64 {
                for mu in enumerate_diagrams(m, a) {
                    let theta = cat(a, &[vec![a; tt - 1], mu.to_vec()].concat());
                    let br = match branch_sp_to_gl_sp(&theta, tt, m) {
                        Ok(b) => b,
                        Err(e) => {
                            t.check(false, || e.to_string());
                            continue;
                        }
                    };
                    let total: Option<BigInt> = br
                        .iter()
                        .map(|(g, s, c)| {
                            Some(
                                c * weyl_dimension(Group::Gl(tt), g).ok()?
                                    * weyl_dimension(Group::Sp(m), s).ok()?,
                            )
                        })
                        .sum();
                    let whole = weyl_dimension(Group::Sp(m + tt), &theta).ok();
                    t.check(total.is_some() && total == whole, || {
                        format!("dimension of branching θ={theta:?} t={tt}")
                    });
                    if a <= 2 {
                        let lead = vec![-a; tt];
                        let mult: BigInt = br
                            .iter()
                            .filter(|(g, s, _)| *g == lead && s[..] == mu[..])
                            .map(|(_, _, c)| c.clone())
                            .sum();
                        t.check(mult == BigInt::from(1), || {
                            format!("multiplicity of (a^t; μ) in θ={theta:?}: {mult}")
                        });
                    }
                }
            }
        }
    }
    t.finish(9, "oracle agreement", start, None, vec![])
}

// ---------------------------------------------------------------------------
// 10

pub fn criterion10() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for n in 1..=4usize {
        let r = (2 * n - 1) as i64;
        let ambient = match Space::igr(1, n) {
            Ok(s) => s,
            Err(e) => {
                t.check(false, || e.to_string());
                continue;
            }
        };
        // The collection on IGr(1,2n) = ℙ^{2n−1} consists of O, O(1), …, O(2n−1).
        let mut twists = Vec::new();
        match blocks(n, 1) {
            Ok((small, _)) => {
                for b in &small {
                    for w in &b.weights {
                        let sp_zero = w.sp.iter().all(|&x| x == 0);
                        t.check(sp_zero, || {
                            format!("n={n}: block {} has an S factor ({w})", b.t)
                        });
                        twists.push(b.t as i64 + w.gl.first().copied().unwrap_or(0));
                    }
                }
            }
            Err(e) => t.check(false, || e.to_string()),
        }
        twists.sort_unstable();
        t.check(twists == (0..=r).collect::<Vec<_>>(), || {
            format!("n={n}: twists {twists:?}")
        });
        let lb = |d: i64| VirtualBundle::structure_sheaf(&ambient).twisted(d);
        for i in 0..=r {
            for j in i..=r {
                let e = ext_groups(&lb(j), &lb(i)).and_then(|g| g.dims());
                let ok = e.is_ok_and(|e| {
                    if i == j {
                        e.len() == 1 && e.get(&0) == Some(&BigInt::from(1))
                    } else {
                        e.is_empty()
                    }
                });
                t.check(ok, || format!("ℙ^{r}: Ext(O({j}),O({i}))"));
            }
        }
        let gens: Option<Vec<VirtualBundle>> = (0..=1)
            .flat_map(|tt| block(n, 1, tt, BlockKind::Small).ok().map(|b| (tt, b)))
            .flat_map(|(tt, b)| {
                b.weights
                    .into_iter()
                    .map(move |w| generator(n, 1, &w, tt as i64).ok())
            })
            .collect();
        let mut from_blocks: Vec<VirtualBundle> = gens.unwrap_or_default();
        from_blocks.sort_by_key(|v| format!("{v:?}"));
        let mut lines: Vec<VirtualBundle> = (0..=r).map(lb).collect();
        lines.sort_by_key(|v| format!("{v:?}"));
        t.check(from_blocks == lines, || {
            format!("n={n}: generators are not O(0..{r})")
        });
    }
    for r in 1..=5usize {
        let p = match Space::gr(1, r + 1) {
            Ok(p) => p,
            Err(e) => {
                t.check(false, || e.to_string());
                continue;
            }
        };
        let ri = r as i64;
        for d in -8..=8i64 {
            let mut want = BTreeMap::new();
            if d >= 0 {
                want.insert(0, BigInt::from(binomial(ri + d, ri)));
            } else if d < -ri {
                want.insert(ri, BigInt::from(binomial(-d - 1, ri)));
            }
            let got = dims(&VirtualBundle::structure_sheaf(&p).twisted(d));
            t.check(got.as_ref().is_ok_and(|g| *g == want), || {
                format!("H(ℙ^{r}, O({d})) = {got:?}, want {want:?}")
            });
        }
    }
    t.finish(10, "classical sanity", start, None, vec![])
}

pub fn criterion(id: u8) -> Option<CriterionReport> {
    Some(match id {
        1 => criterion1(),
        2 => criterion2(),
        3 => criterion3(),
        4 => criterion4(),
        5 => criterion5(),
        6 => criterion6(),
        7 => criterion7(),
        8 => criterion8(),
        9 => criterion9(),
        10 => criterion10(),
        _ => return None,
    })
}
