//! Argument model and dispatch for the `igr` binary.

use std::io::Read as _;

use clap::{Parser, Subcommand, ValueEnum};
use igr_core::bbw::{bbw_gl, bbw_sp, BbwResult, Space};
use igr_core::characters::{branch_sp_to_gl_sp, lr_tensor, sp_tensor};
use igr_core::collections::{
    blocks, census, f_class, semi_pair_ext, semiorthogonality_pairs, verify_block_exceptionality,
    verify_dual_characterization, Block, BlockKind,
};
use igr_core::complexes::{
    build_generalized_staircase, build_koszul, build_secondary_staircase,
    build_symplectic_staircase, check_ktheory_exact, k_class, ChainComplex,
};
use igr_core::staircase::{staircase_data, Staircase};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::format::{
    big_value, bundles_of, complex_from_json, complex_latex, complex_table, complex_to_json, fmt_w,
    latex_document, table, virtual_latex, virtual_text, BlockWeightJson, ComplexJson, Format,
};
use crate::parse::{parse_ints, parse_weight};
use crate::suites::{self, check_dual_pairs, dual_pairs, sample_dual_pairs, DualLevel, DUAL_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "igr",
    version,
    about = "Bundles, staircase complexes and exceptional blocks on isotropic Grassmannians"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Borel–Bott–Weil for a single weight.
    Bbw {
        #[command(subcommand)]
        group: BbwCmd,
    },
    /// Decompose a tensor product of irreducible representations.
    Tensor {
        #[command(subcommand)]
        group: TensorCmd,
    },
    /// Restrict an Sp(2(m+t)) irreducible to GL(t) × Sp(2m).
    Branch {
        #[arg(allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        t: usize,
    },
    /// Staircase table (i, z_i, d, b^i, α^(i)) of a weight.
    Staircase {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        from: i64,
        /// Last index (default α_1 + v + 3).
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
        /// Ambient rank for m(α).
        #[arg(long)]
        r: Option<usize>,
    },
    /// Build or check a complex.
    Complex {
        #[command(subcommand)]
        action: ComplexAction,
    },
    /// K-class of the truncation bundle K^α on Gr(l,r) or IGr(l,2n).
    Kclass {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        space: String,
    },
    /// Blocks, census and verification suites on IGr(k,2n).
    Kp {
        #[command(subcommand)]
        cmd: KpCmd,
    },
    /// Run the acceptance criteria.
    Accept {
        /// Comma-separated criterion numbers (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BbwCmd {
    /// GL(r) with parabolic block sizes (s, r−s).
    Gl {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(allow_hyphen_values = true, num_args = 1..)]
        weight: Vec<i64>,
    },
    /// Sp(2n); the first s entries form the GL part.
    Sp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(allow_hyphen_values = true, num_args = 1..)]
        weight: Vec<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TensorCmd {
    Gl {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Sp {
        a: String,
        b: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComplexAction {
    Build {
        #[command(subcommand)]
        kind: ComplexKind,
    },
    /// Check K-theoretic exactness against the claimed cohomology.
    Check {
        /// Read a complex in the JSON schema from a file (`-` for stdin).
        #[arg(long)]
        input: Option<String>,
        #[command(subcommand)]
        kind: Option<ComplexKind>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComplexKind {
    /// Λ^m Q^∨ resolved by Λ^{m−j}V^∨ ⊗ S^j U^∨.
    Koszul {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Generalized staircase complex of α.
    Gsc {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        space: String,
    },
    /// Symplectic staircase complex of μ on IGr(2μ_1, 2n).
    Ssc {
        mu: String,
        #[arg(long)]
        n: usize,
    },
    /// Secondary staircase complex of α on IGr(k, 2n).
    Secondary {
        alpha: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum KpCmd {
    Blocks {
        n: usize,
        k: usize,
    },
    Census {
        n: usize,
        k: usize,
    },
    /// The class of F_t^{λ;μ} and its dual-characterization rows; weight as "λ;μ".
    Fclass {
        n: usize,
        k: usize,
        #[arg(long)]
        t: usize,
        weight: String,
    },
    Verify {
        n: usize,
        k: usize,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Semiorthogonality: check at most this many pairs (evenly strided).
        #[arg(long)]
        budget: Option<usize>,
        /// Dual characterization: sample this many pairs instead of all.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DUAL_SEED)]
        seed: u64,
        /// Dual characterization: compare Euler characteristics only.
        #[arg(long)]
        euler: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Exc,
    Dual,
    Semi,
}

/// Weight, JSON multiplicity and its text.
type TensorTerm = (Vec<i64>, Value, String);

/// Machine-readable verdict of a checking command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub pass: bool,
    pub checked: usize,
    pub failed: usize,
}

impl Summary {
    pub fn line(&self) -> String {
        format!(
            "SUMMARY pass={} checked={} failed={}",
            self.pass, self.checked, self.failed
        )
    }
}

#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub summary: Option<Summary>,
}

/// A renderable result: JSON value plus a table with LaTeX-ready cells.
struct Doc {
    json: Value,
    title: String,
    header: Vec<&'static str>,
    /// `(plain, latex)` per cell.
    rows: Vec<Vec<(String, String)>>,
    /// `(plain, latex math)` notes printed below the table.
    notes: Vec<(String, String)>,
}

impl Doc {
    fn new(json: Value, title: impl Into<String>, header: Vec<&'static str>) -> Self {
        Doc {
            json,
            title: title.into(),
            header,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<(String, String)>) {
        self.rows.push(cells);
    }

    fn note(&mut self, s: String) {
        let t = format!("\\text{{{}}}", tex_escape(&s));
        self.notes.push((s, t));
    }

    fn render(&self, f: Format) -> String {
        match f {
            Format::Json => format!(
                "{}\n",
                serde_json::to_string_pretty(&self.json).expect("serializable")
            ),
            Format::Table => {
                let rows: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|c| c.0.clone()).collect())
                    .collect();
                let mut out = format!("{}\n{}", self.title, table(&self.header, &rows));
                for (n, _) in &self.notes {
                    out.push_str(n);
                    out.push('\n');
                }
                out
            }
            Format::Latex => {
                let cols = "l".repeat(self.header.len());
                let mut body = format!("\\begin{{array}}{{{cols}}}\n");
                body.push_str(
                    &self
                        .header
                        .iter()
                        .map(|h| format!("\\text{{{}}}", tex_escape(h)))
                        .collect::<Vec<_>>()
                        .join(" & "),
                );
                body.push_str(" \\\\ \\hline\n");
                for r in &self.rows {
                    body.push_str(
                        &r.iter()
                            .map(|c| c.1.clone())
                            .collect::<Vec<_>>()
                            .join(" & "),
                    );
                    body.push_str(" \\\\\n");
                }
                body.push_str("\\end{array}");
                let mut lines = vec![format!("\\text{{{}}}", tex_escape(&self.title)), body];
                lines.extend(self.notes.iter().map(|n| n.1.clone()));
                latex_document(&lines)
            }
        }
    }
}

/// Escape ASCII text for `\text{…}`; non-ASCII is dropped.
fn tex_escape(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '_' | '#' | '%' | '&' | '{' | '}' | '$' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            c if c.is_ascii() => out.push(c),
            _ => out.push('?'),
        }
    }
    out
}

/// A cell whose text is valid in math mode as-is (numbers, weights).
fn m(s: impl Into<String>) -> (String, String) {
    let s = s.into();
    (s.clone(), s)
}

/// A cell of ASCII words.
fn txt(s: impl Into<String>) -> (String, String) {
    let s = s.into();
    let t = format!("\\text{{{}}}", tex_escape(&s));
    (s, t)
}

fn bbw_result_json(r: &BbwResult) -> Value {
    match r {
        BbwResult::Vanishes => json!({"vanishes": true, "dominant": null, "degree": null}),
        BbwResult::NonZero { dominant, shift } => {
            json!({"vanishes": false, "dominant": dominant, "degree": shift})
        }
    }
}

fn bbw_doc(group: &str, weight: &[i64], r: &BbwResult) -> Doc {
    let mut d = Doc::new(
        json!({"group": group, "weight": weight, "result": bbw_result_json(r)}),
        format!("BBW for {group}"),
        vec!["weight", "result", "degree"],
    );
    match r {
        BbwResult::Vanishes => d.row(vec![m(fmt_w(weight)), txt("vanishes"), m("-")]),
        BbwResult::NonZero { dominant, shift } => d.row(vec![
            m(fmt_w(weight)),
            m(fmt_w(dominant)),
            m(shift.to_string()),
        ]),
    }
    d
}

fn check_len(what: &str, w: &[i64], len: usize) -> Result<()> {
    if w.len() != len {
        return Err(CliError::Input(format!(
            "{what} needs {len} entries, got {}",
            w.len()
        )));
    }
    Ok(())
}

fn build(kind: &ComplexKind) -> Result<ChainComplex> {
    Ok(match kind {
        ComplexKind::Koszul { m, space, twist } => build_koszul(*m, &Space::parse(space)?, *twist)?,
        ComplexKind::Gsc { alpha, space } => {
            build_generalized_staircase(&parse_ints(alpha)?, &Space::parse(space)?)?
        }
        ComplexKind::Ssc { mu, n } => build_symplectic_staircase(&parse_ints(mu)?, *n)?,
        ComplexKind::Secondary { alpha, k, n } => {
            build_secondary_staircase(&parse_ints(alpha)?, *k, *n)?
        }
    })
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn render_complex(c: &ChainComplex, f: Format) -> String {
    match f {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&complex_to_json(c)).expect("serializable")
        ),
        Format::Latex => complex_latex(c),
        Format::Table => complex_table(c),
    }
}

fn kind_name(k: BlockKind) -> &'static str {
    match k {
        BlockKind::Small => "small",
        BlockKind::Big => "big",
    }
}

fn block_json(b: &Block) -> Value {
    json!({
        "t": b.t,
        "kind": kind_name(b.kind),
        "a_t": b.a_t,
        "weights": b.weights.iter().map(BlockWeightJson::from).collect::<Vec<_>>(),
    })
}

fn doc_output(d: Doc, f: Format, summary: Option<Summary>) -> Output {
    Output {
        text: d.render(f),
        summary,
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Bbw { group } => {
            let d = match group {
                BbwCmd::Gl { r, s, weight } => {
                    check_len("GL weight", weight, *r)?;
                    if s > r {
                        return Err(CliError::Input(format!("--s {s} exceeds --r {r}")));
                    }
                    bbw_doc(
                        &format!("GL({r})"),
                        weight,
                        &bbw_gl(&weight[..*s], &weight[*s..]),
                    )
                }
                BbwCmd::Sp { n, s, weight } => {
                    check_len("Sp weight", weight, *n)?;
                    if s > n {
                        return Err(CliError::Input(format!("--s {s} exceeds --n {n}")));
                    }
                    bbw_doc(
                        &format!("Sp({})", 2 * n),
                        weight,
                        &bbw_sp(&weight[..*s], &weight[*s..]),
                    )
                }
            };
            Ok(doc_output(d, f, None))
        }
        Command::Tensor { group } => {
            let (name, a, b, terms): (String, Vec<i64>, Vec<i64>, Vec<TensorTerm>) = match group {
                TensorCmd::Gl { a, b } => {
                    let (a, b) = (parse_ints(a)?, parse_ints(b)?);
                    check_len("second factor", &b, a.len())?;
                    let t = lr_tensor(&a, &b)?;
                    let terms = t
                        .iter()
                        .map(|(g, c)| (g.clone(), json!(c), c.to_string()))
                        .collect();
                    (format!("GL({})", a.len()), a, b, terms)
                }
                TensorCmd::Sp { a, b } => {
                    let (a, b) = (parse_ints(a)?, parse_ints(b)?);
                    check_len("second factor", &b, a.len())?;
                    let t = sp_tensor(a.len(), &a, &b)?;
                    let terms = t
                        .terms
                        .iter()
                        .map(|(g, c)| (g.clone(), big_value(c), c.to_string()))
                        .collect();
                    (format!("Sp({})", 2 * a.len()), a, b, terms)
                }
            };
            let mut d = Doc::new(
                json!({"group": name, "a": a, "b": b,
                       "terms": terms.iter().map(|(g, c, _)| json!({"weight": g, "mult": c})).collect::<Vec<_>>()}),
                format!("{name}: {} x {}", fmt_w(&a), fmt_w(&b)),
                vec!["weight", "mult"],
            );
            for (g, _, c) in &terms {
                d.row(vec![m(fmt_w(g)), m(c.clone())]);
            }
            Ok(doc_output(d, f, None))
        }
        Command::Branch { theta, t } => {
            let theta = parse_ints(theta)?;
            if *t > theta.len() {
                return Err(CliError::Input(format!(
                    "t = {t} exceeds the rank {}",
                    theta.len()
                )));
            }
            let mm = theta.len() - t;
            let br = branch_sp_to_gl_sp(&theta, *t, mm)?;
            let mut d = Doc::new(
                json!({"theta": theta, "t": t, "m": mm,
                       "terms": br.iter().map(|(g, s, c)| json!({"gl": g, "sp": s, "mult": big_value(c)})).collect::<Vec<_>>()}),
                format!(
                    "Sp({}) -> GL({t}) x Sp({}): {}",
                    2 * theta.len(),
                    2 * mm,
                    fmt_w(&theta)
                ),
                vec!["gl", "sp", "mult"],
            );
            for (g, s, c) in br.iter() {
                d.row(vec![m(fmt_w(g)), m(fmt_w(s)), m(c.to_string())]);
            }
            Ok(doc_output(d, f, None))
        }
        Command::Staircase { alpha, from, to, r } => {
            let alpha = parse_ints(alpha)?;
            let s = Staircase::new(&alpha)?;
            let to = to.unwrap_or(alpha[0] + s.v() + 3);
            if to < *from {
                return Err(CliError::Input(format!(
                    "empty index window [{from}, {to}]"
                )));
            }
            let data = staircase_data(&alpha, *from, to, *r)?;
            let rows: Vec<Value> = data
                .rows
                .iter()
                .map(|r| json!({"i": r.i, "z": r.z, "d": r.d, "b": r.b, "alpha_i": r.alpha_i}))
                .collect();
            let mut d = Doc::new(
                json!({"alpha": data.alpha, "vset": data.vset, "vset_sp": data.vset_sp, "v": data.v, "m": data.m, "rows": rows}),
                format!("staircase of {}", fmt_w(&alpha)),
                vec!["i", "z_i", "d", "b^i", "alpha^(i)"],
            );
            for r in &data.rows {
                d.row(vec![
                    m(r.i.to_string()),
                    m(r.z.to_string()),
                    m(r.d.to_string()),
                    m(r.b.to_string()),
                    m(fmt_w(&r.alpha_i)),
                ]);
            }
            let set = |v: &[i64]| {
                format!(
                    "{{{}}}",
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            d.note(format!("V = {}", set(&data.vset)));
            if let Some(sp) = &data.vset_sp {
                d.note(format!("V^Sp = {}", set(sp)));
            }
            d.note(format!("v = {}", data.v));
            if let Some(mm) = data.m {
                d.note(format!("m = {mm}"));
            }
            Ok(doc_output(d, f, None))
        }
        Command::Complex { action } => match action {
            ComplexAction::Build { kind } => Ok(Output {
                text: render_complex(&build(kind)?, f),
                summary: None,
            }),
            ComplexAction::Check { input, kind } => {
                let c = match (input, kind) {
                    (Some(path), None) => {
                        let j: ComplexJson = serde_json::from_str(&read_input(path)?)?;
                        complex_from_json(&j)?
                    }
                    (None, Some(kind)) => build(kind)?,
                    _ => {
                        return Err(CliError::Input(
                            "give either --input or a complex kind".into(),
                        ))
                    }
                };
                let r = check_ktheory_exact(&c)?;
                let mut d = Doc::new(
                    json!({"complex": complex_to_json(&c), "exact_in_k": r.exact_in_k, "defect": bundles_of(&r.defect)}),
                    format!("K-theory check: {} on {}", c.name, c.space),
                    vec!["terms", "exact in K", "defect"],
                );
                d.row(vec![
                    m(c.terms.len().to_string()),
                    txt(if r.exact_in_k { "yes" } else { "no" }),
                    (virtual_text(&r.defect), virtual_latex(&r.defect)),
                ]);
                let summary = Summary {
                    pass: r.exact_in_k,
                    checked: 1,
                    failed: usize::from(!r.exact_in_k),
                };
                Ok(doc_output(d, f, Some(summary)))
            }
        },
        Command::Kclass { alpha, space } => {
            let alpha = parse_ints(alpha)?;
            let space = Space::parse(space)?;
            let kc = k_class(&alpha, &space)?;
            let mut d = Doc::new(
                json!({"alpha": kc.alpha, "space": kc.space.name(), "delta": kc.delta, "m": kc.m, "r_alpha": kc.r_alpha,
                       "class": bundles_of(kc.class()), "resolutions_agree": kc.resolutions_agree()}),
                format!("K^{} on {}", fmt_w(&alpha), space),
                vec!["delta", "m", "r_alpha", "resolutions agree", "class"],
            );
            d.row(vec![
                m(kc.delta.to_string()),
                m(kc.m.to_string()),
                m(kc.r_alpha.to_string()),
                txt(if kc.resolutions_agree() { "yes" } else { "no" }),
                (virtual_text(kc.class()), virtual_latex(kc.class())),
            ]);
            Ok(doc_output(d, f, None))
        }
        Command::Kp { cmd } => run_kp(cmd, f),
        Command::Accept { only } => {
            let ids: Vec<u8> = if only.is_empty() {
                (1..=10).collect()
            } else {
                only.clone()
            };
            let mut reports = Vec::new();
            for id in ids {
                reports.push(
                    suites::criterion(id)
                        .ok_or_else(|| CliError::Input(format!("no criterion {id}")))?,
                );
            }
            let mut d = Doc::new(
                Value::Array(
                    reports
                        .iter()
                        .map(|r| {
                            json!({"id": r.id, "name": r.name, "pass": r.pass(), "checked": r.checked, "failed": r.failed,
                                   "seconds": r.elapsed.as_secs_f64(), "failures": r.failures, "notes": r.notes})
                        })
                        .collect(),
                ),
                "acceptance",
                vec!["criterion", "name", "result", "checked", "failed", "seconds"],
            );
            for r in &reports {
                d.row(vec![
                    m(r.id.to_string()),
                    txt(r.name),
                    txt(if r.pass() { "PASS" } else { "FAIL" }),
                    m(r.checked.to_string()),
                    m(r.failed.to_string()),
                    m(format!("{:.3}", r.elapsed.as_secs_f64())),
                ]);
                for x in &r.failures {
                    d.note(format!("  [{}] {x}", r.id));
                }
            }
            let failed = reports.iter().filter(|r| !r.pass()).count();
            Ok(doc_output(
                d,
                f,
                Some(Summary {
                    pass: failed == 0,
                    checked: reports.len(),
                    failed,
                }),
            ))
        }
    }
}

fn run_kp(cmd: &KpCmd, f: Format) -> Result<Output> {
    match cmd {
        KpCmd::Blocks { n, k } => {
            let (small, big) = blocks(*n, *k)?;
            let mut d = Doc::new(
                json!({"n": n, "k": k, "space": Space::igr(*k, *n)?.name(),
                       "blocks": small.iter().chain(&big).map(block_json).collect::<Vec<_>>()}),
                format!("blocks on {}", Space::igr(*k, *n)?),
                vec!["t", "kind", "a_t", "size", "weights"],
            );
            for b in small.iter().chain(&big) {
                let ws = b
                    .weights
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                d.row(vec![
                    m(b.t.to_string()),
                    txt(kind_name(b.kind)),
                    m(b.a_t.to_string()),
                    m(b.len().to_string()),
                    txt(ws),
                ]);
            }
            Ok(doc_output(d, f, None))
        }
        KpCmd::Census { n, k } => {
            let c = census(*n, *k)?;
            let sizes = c
                .sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let mut d = Doc::new(
                json!({"n": n, "k": k, "sizes": c.sizes, "total": c.total.to_string(), "rank": c.schubert_rank.to_string(), "pass": c.pass}),
                format!("census on {}", Space::igr(*k, *n)?),
                vec!["sizes", "total", "rank", "result"],
            );
            d.row(vec![
                m(sizes),
                m(c.total.to_string()),
                m(c.schubert_rank.to_string()),
                txt(if c.pass { "PASS" } else { "FAIL" }),
            ]);
            Ok(doc_output(
                d,
                f,
                Some(Summary {
                    pass: c.pass,
                    checked: 1,
                    failed: usize::from(!c.pass),
                }),
            ))
        }
        KpCmd::Fclass { n, k, t, weight } => {
            let (gl, sp) = parse_weight(weight)?;
            let fc = f_class(*t, &gl, &sp, *n, *k)?;
            let dual = verify_dual_characterization(*t, &gl, &sp, *n, *k)?;
            let rows: Vec<Value> = dual
                .rows
                .iter()
                .map(|r| {
                    json!({"beta": BlockWeightJson::from(&r.beta), "expected": r.expected,
                           "ext": r.graded.iter().map(|(d, m)| (d.to_string(), big_value(m))).collect::<serde_json::Map<_, _>>(),
                           "ok": r.graded_ok})
                })
                .collect();
            let mut d = Doc::new(
                json!({"n": n, "k": k, "t": t, "weight": BlockWeightJson::from(&dual.weight),
                       "class": bundles_of(&fc.virtual_class), "bundle": fc.concentrated_degree_zero,
                       "in_big_block_span": fc.in_big_block_span, "dual_rows": rows, "pass": dual.pass}),
                format!("F_{t}^({}) on {}", dual.weight, Space::igr(*k, *n)?),
                vec!["beta", "expected", "ext", "ok"],
            );
            for r in &dual.rows {
                let ext = r
                    .graded
                    .iter()
                    .map(|(d, m)| format!("{d}:{m}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                d.row(vec![
                    txt(r.beta.to_string()),
                    m(r.expected.to_string()),
                    txt(ext),
                    txt(if r.graded_ok { "yes" } else { "no" }),
                ]);
            }
            d.notes.push((
                format!("class: {}", virtual_text(&fc.virtual_class)),
                format!("[\\mathcal{{F}}] = {}", virtual_latex(&fc.virtual_class)),
            ));
            d.note(format!("vector bundle: {}", fc.concentrated_degree_zero));
            let pass = dual.pass && fc.concentrated_degree_zero;
            let failed = dual.rows.iter().filter(|r| !r.graded_ok).count()
                + usize::from(!fc.concentrated_degree_zero);
            Ok(doc_output(
                d,
                f,
                Some(Summary {
                    pass,
                    checked: dual.rows.len() + 1,
                    failed,
                }),
            ))
        }
        KpCmd::Verify {
            n,
            k,
            suite,
            budget,
            samples,
            seed,
            euler,
        } => match suite {
            Suite::Exc => verify_exc(*n, *k, f),
            Suite::Dual => verify_dual(*n, *k, *samples, *seed, *euler, f),
            Suite::Semi => verify_semi(*n, *k, *budget, f),
        },
    }
}

fn verify_exc(n: usize, k: usize, f: Format) -> Result<Output> {
    let (small, big) = blocks(n, k)?;
    let all: Vec<Block> = small.into_iter().chain(big).collect();
    let reports = all
        .par_iter()
        .map(verify_block_exceptionality)
        .collect::<igr_core::Result<Vec<_>>>()?;
    let mut d = Doc::new(
        Value::Null,
        format!("exceptional blocks on {}", Space::igr(k, n)?),
        vec![
            "t",
            "kind",
            "pairs",
            "dimensions",
            "order",
            "Ext>0=0",
            "result",
        ],
    );
    let mut js = Vec::new();
    let mut failed = 0;
    for r in &reports {
        let pass = r.pass();
        failed += usize::from(!pass);
        let yn = |b: bool| txt(if b { "yes" } else { "no" });
        d.row(vec![
            m(r.t.to_string()),
            txt(kind_name(r.kind)),
            m(r.pairs.to_string()),
            yn(r.dimension_level_pass),
            yn(r.order_vanishing),
            yn(r.higher_ext_vanish),
            txt(if pass { "PASS" } else { "FAIL" }),
        ]);
        js.push(json!({
            "t": r.t, "kind": kind_name(r.kind), "pairs": r.pairs,
            "dimension_level_pass": r.dimension_level_pass, "order_vanishing": r.order_vanishing,
            "higher_ext_vanish": r.higher_ext_vanish, "pass": pass,
            "failures": r.failures.iter().map(|x| json!({"alpha": BlockWeightJson::from(&x.alpha), "beta": BlockWeightJson::from(&x.beta), "reason": x.reason})).collect::<Vec<_>>(),
        }));
    }
    d.json = json!({"n": n, "k": k, "suite": "exc", "blocks": js});
    Ok(doc_output(
        d,
        f,
        Some(Summary {
            pass: failed == 0,
            checked: reports.len(),
            failed,
        }),
    ))
}

fn verify_dual(
    n: usize,
    k: usize,
    samples: Option<usize>,
    seed: u64,
    euler: bool,
    f: Format,
) -> Result<Output> {
    let (total, pairs) = match samples {
        Some(c) => sample_dual_pairs(n, k, c, seed)?,
        None => {
            let p = dual_pairs(n, k)?;
            (p.len(), p)
        }
    };
    let level = if euler {
        DualLevel::Euler
    } else {
        DualLevel::Graded
    };
    let outs = check_dual_pairs(n, k, &pairs, level);
    let loose: usize = outs.iter().map(|o| o.graded_mismatches).sum();
    let checked: usize = outs.iter().map(|o| o.checked).sum();
    let failures: Vec<String> = outs.into_iter().flat_map(|o| o.failures).collect();
    let mut d = Doc::new(
        json!({"n": n, "k": k, "suite": "dual", "total_pairs": total, "checked": checked,
               "seed": samples.map(|_| seed), "level": if euler { "euler" } else { "graded" },
               "cancelling_pairs": loose, "failures": failures}),
        format!("dual characterization on {}", Space::igr(k, n)?),
        vec!["total pairs", "checked", "failed"],
    );
    d.row(vec![
        m(total.to_string()),
        m(checked.to_string()),
        m(failures.len().to_string()),
    ]);
    if samples.is_some() {
        d.note(format!("sampled with seed {seed}"));
    }
    if euler {
        d.note(format!(
            "Euler-level check; {loose} pairs with cancelling degrees"
        ));
    }
    let failed = failures.len();
    for x in failures.into_iter().take(20) {
        d.note(x);
    }
    Ok(doc_output(
        d,
        f,
        Some(Summary {
            pass: failed == 0 && checked > 0,
            checked,
            failed,
        }),
    ))
}

fn verify_semi(n: usize, k: usize, budget: Option<usize>, f: Format) -> Result<Output> {
    let pairs = semiorthogonality_pairs(n, k)?;
    let total = pairs.len();
    let step = match budget {
        Some(b) if b > 0 && b < total => total.div_ceil(b),
        _ => 1,
    };
    let chosen: Vec<_> = pairs.into_iter().step_by(step).collect();
    let exts = chosen
        .par_iter()
        .map(|(s, t)| semi_pair_ext(n, k, s, t))
        .collect::<igr_core::Result<Vec<_>>>()?;
    let mut violations = Vec::new();
    for ((s, t), e) in chosen.iter().zip(&exts) {
        if !e.is_empty() {
            violations.push(json!({
                "source": {"t": s.0, "weight": BlockWeightJson::from(&s.1)},
                "target": {"t": t.0, "weight": BlockWeightJson::from(&t.1)},
                "ext": e.iter().map(|(d, m)| (d.to_string(), big_value(m))).collect::<serde_json::Map<_, _>>(),
            }));
        }
    }
    let checked = chosen.len();
    let failed = violations.len();
    let mut d = Doc::new(
        json!({"n": n, "k": k, "suite": "semi", "total_pairs": total, "checked": checked, "violations": violations}),
        format!("semiorthogonality on {}", Space::igr(k, n)?),
        vec!["total pairs", "checked", "violations"],
    );
    d.row(vec![
        m(total.to_string()),
        m(checked.to_string()),
        m(failed.to_string()),
    ]);
    Ok(doc_output(
        d,
        f,
        Some(Summary {
            pass: failed == 0,
            checked,
            failed,
        }),
    ))
}
