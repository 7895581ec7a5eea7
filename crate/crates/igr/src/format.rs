//! JSON schemas and LaTeX/table rendering.

use std::fmt::Write as _;

use igr_core::bbw::{Space, VirtualBundle};
use igr_core::complexes::ChainComplex;
use igr_core::weights::BlockWeight;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Table,
}

/// Multiplicities are JSON numbers when they fit in `i64`, strings otherwise.
mod big {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use serde_json::Value;

    pub fn serialize<S: Serializer>(b: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(b) {
            Ok(x) => s.serialize_i64(x),
            Err(_) => s.serialize_str(&b.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Value::deserialize(d)? {
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| D::Error::custom("bad multiplicity")),
            Value::String(s) => s.parse().map_err(D::Error::custom),
            _ => Err(D::Error::custom("multiplicity must be a number or string")),
        }
    }
}

pub fn big_value(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(b.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockWeightJson {
    pub gl: Vec<i64>,
    pub sp: Vec<i64>,
}

impl From<&BlockWeight> for BlockWeightJson {
    fn from(w: &BlockWeight) -> Self {
        BlockWeightJson {
            gl: w.gl.to_vec(),
            sp: w.sp.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleJson {
    pub space: String,
    pub factors: Vec<Vec<i64>>,
    #[serde(default)]
    pub sp: Vec<i64>,
    #[serde(default)]
    pub twist: i64,
    #[serde(default)]
    pub degree: i64,
    #[serde(with = "big", default = "one")]
    pub mult: BigInt,
}

fn one() -> BigInt {
    BigInt::from(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub bundle: Vec<BundleJson>,
    pub degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub space: String,
    pub terms: Vec<TermJson>,
    #[serde(default)]
    pub claimed: Option<Vec<BundleJson>>,
}

pub fn bundles_of(v: &VirtualBundle) -> Vec<BundleJson> {
    v.terms()
        .map(|((space, w, d), m)| {
            let (factors, sp) = space.split(w);
            BundleJson {
                space: space.name(),
                factors,
                sp,
                twist: 0,
                degree: *d,
                mult: m.clone(),
            }
        })
        .collect()
}

pub fn virtual_of(bundles: &[BundleJson]) -> Result<VirtualBundle> {
    let mut v = VirtualBundle::default();
    for b in bundles {
        let space = Space::parse(&b.space)?;
        let ib = igr_core::bbw::IrreducibleBundle {
            space: space.clone(),
            factors: b.factors.clone(),
            sp: b.sp.clone(),
            twist: b.twist,
            degree: b.degree,
            mult: b.mult.clone(),
        };
        if b.factors.len() != space.blocks().len() {
            return Err(CliError::Input(format!(
                "{} needs {} factors",
                b.space,
                space.blocks().len()
            )));
        }
        let w = ib.levi_weight();
        space.check_weight(&w)?;
        v.add_term(space, w, b.degree, b.mult.clone());
    }
    Ok(v)
}

pub fn complex_to_json(c: &ChainComplex) -> ComplexJson {
    ComplexJson {
        name: Some(c.name.clone()),
        space: c.space.name(),
        terms: c
            .terms
            .iter()
            .map(|t| TermJson {
                bundle: bundles_of(&t.class),
                degree: t.degree,
                label: Some(t.label.clone()),
            })
            .collect(),
        claimed: c.claimed.as_ref().map(bundles_of),
    }
}

pub fn complex_from_json(j: &ComplexJson) -> Result<ChainComplex> {
    let space = Space::parse(&j.space)?;
    let mut terms = Vec::new();
    for t in &j.terms {
        let class = virtual_of(&t.bundle)?;
        let label = t
            .label
            .clone()
            .unwrap_or_else(|| format!("term {}", t.degree));
        terms.push(igr_core::complexes::ComplexTerm {
            degree: t.degree,
            latex: label.clone(),
            label,
            class,
            index: None,
            b: None,
        });
    }
    let claimed = j.claimed.as_deref().map(virtual_of).transpose()?;
    Ok(ChainComplex::new(
        j.name.clone().unwrap_or_else(|| "input".into()),
        space,
        terms,
        claimed,
    )?)
}

// ---------------------------------------------------------------------------
// Text rendering

pub fn fmt_w(w: &[i64]) -> String {
    format!(
        "({})",
        w.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn block_names(space: &Space) -> Vec<String> {
    let nb = space.blocks().len();
    (0..nb)
        .map(|j| {
            if j == 0 {
                "U^∨".to_string()
            } else if j + 1 == nb && !space.is_symplectic() {
                "Q^∨".to_string()
            } else {
                format!("W{j}^∨")
            }
        })
        .collect()
}

/// Human-readable name of one irreducible term.
pub fn irreducible_text(space: &Space, w: &[i64]) -> String {
    let (gl, sp) = space.split(w);
    let names = block_names(space);
    let mut parts: Vec<String> = gl
        .iter()
        .zip(&names)
        .filter(|(g, _)| g.iter().any(|&x| x != 0))
        .map(|(g, n)| format!("Σ^{} {n}", fmt_w(g)))
        .collect();
    if sp.iter().any(|&x| x != 0) {
        parts.push(format!("Σ^{}_Sp S", fmt_w(&sp)));
    }
    if parts.is_empty() {
        "O".into()
    } else {
        parts.join(" ⊗ ")
    }
}

pub fn irreducible_latex(space: &Space, w: &[i64]) -> String {
    let (gl, sp) = space.split(w);
    let nb = gl.len();
    let mut parts = Vec::new();
    for (j, g) in gl.iter().enumerate() {
        if g.iter().all(|&x| x == 0) {
            continue;
        }
        let name = if j == 0 {
            "\\mathcal{U}^\\vee".to_string()
        } else if j + 1 == nb && !space.is_symplectic() {
            "\\mathcal{Q}^\\vee".to_string()
        } else {
            format!("\\mathcal{{W}}_{{{j}}}^\\vee")
        };
        parts.push(format!("\\Sigma^{{{}}}{name}", fmt_w(g)));
    }
    if sp.iter().any(|&x| x != 0) {
        parts.push(format!(
            "\\Sigma^{{{}}}_{{\\mathrm{{Sp}}}}\\mathcal{{S}}",
            fmt_w(&sp)
        ));
    }
    if parts.is_empty() {
        "\\mathcal{O}".into()
    } else {
        parts.join("\\otimes ")
    }
}

/// `m·[bundle][−d]` listing of a virtual class.
pub fn virtual_text(v: &VirtualBundle) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.terms()
        .map(|((s, w, d), m)| format!("{m}·{} [deg {d}]", irreducible_text(s, w)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn virtual_latex(v: &VirtualBundle) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.terms()
        .map(|((s, w, d), m)| {
            let shift = if *d == 0 {
                String::new()
            } else {
                format!("[{}]", -d)
            };
            format!("{m}\\,{}{shift}", irreducible_latex(s, w))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Wrap display-math lines into a standalone document.
pub fn latex_document(lines: &[String]) -> String {
    let mut out = String::from(
        "\\documentclass{article}\n\\usepackage{amsmath,amssymb}\n\\begin{document}\n",
    );
    for l in lines {
        let _ = writeln!(out, "\\[\n{l}\n\\]");
    }
    out.push_str("\\end{document}\n");
    out
}

/// Left-aligned text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            widths[i] = widths[i].max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}{}", " ".repeat(widths[i] - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    out.push('\n');
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect()));
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.clone()));
        out.push('\n');
    }
    out
}

pub fn complex_latex(c: &ChainComplex) -> String {
    let mut chain = vec!["0".to_string()];
    chain.extend(
        c.terms
            .iter()
            .map(|t| format!("\\underset{{{}}}{{{}}}", t.degree, t.latex)),
    );
    chain.push("0".into());
    let mut lines = vec![chain.join(" \\to ")];
    if let Some(cl) = &c.claimed {
        lines.push(format!("\\mathcal{{H}}^\\bullet = {}", virtual_latex(cl)));
    }
    latex_document(&lines)
}

pub fn complex_table(c: &ChainComplex) -> String {
    let rows: Vec<Vec<String>> = c
        .terms
        .iter()
        .map(|t| {
            vec![
                t.degree.to_string(),
                t.index.map_or("-".into(), |i| i.to_string()),
                t.b.map_or("-".into(), |b| b.to_string()),
                t.label.clone(),
                t.class.len().to_string(),
            ]
        })
        .collect();
    let mut out = format!("{} on {}\n", c.name, c.space);
    out.push_str(&table(&["deg", "i", "b", "term", "#irreducibles"], &rows));
    if let Some(cl) = &c.claimed {
        let _ = writeln!(out, "claimed cohomology: {}", virtual_text(cl));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use igr_core::complexes::build_koszul;

    #[test]
    fn complex_json_roundtrip() {
        let c = build_koszul(2, &Space::gr(2, 4).unwrap(), 1).unwrap();
        let j = complex_to_json(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back: ComplexJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        let c2 = complex_from_json(&back).unwrap();
        assert_eq!(c2.terms.len(), c.terms.len());
        for (a, b) in c.terms.iter().zip(&c2.terms) {
            assert_eq!(a.class, b.class);
        }
    }

    #[test]
    fn big_multiplicities_are_strings() {
        let b = BundleJson {
            space: "Gr(1,2)".into(),
            factors: vec![vec![0], vec![0]],
            sp: vec![],
            twist: 0,
            degree: 0,
            mult: BigInt::from(i64::MAX) * 4,
        };
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.contains("\"36893488147419103228\""));
        let back: BundleJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn latex_is_a_document() {
        let c = build_koszul(1, &Space::gr(1, 3).unwrap(), 0).unwrap();
        let l = complex_latex(&c);
        assert!(l.starts_with("\\documentclass{article}"));
        assert!(l.trim_end().ends_with("\\end{document}"));
    }
}
