//! Text and structured export of codes.
//!
//! Text layout: one row per line as `x-part | z-part`. A code document lists
//! the generator rows, a `--` separator, the stabilizer rows, then `#`
//! comment lines carrying parameters and the validation summary. Comment and
//! blank lines are ignored when parsing.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::construct::{Provenance, QuantumCode, ValidationReport};
use crate::error::{Error, Result};
use crate::gf2::{BitVector, Gf2Matrix};
use crate::pauli::PauliVector;

const SEPARATOR: &str = "--";

pub fn matrix_to_text(m: &Gf2Matrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let p = PauliVector::from_row(row).expect("even width");
        writeln!(out, "{p}").unwrap();
    }
    out
}

fn parse_rows<'a>(lines: impl Iterator<Item = &'a str>) -> Result<Option<Gf2Matrix>> {
    let mut rows = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        rows.push(line.parse::<PauliVector>()?.to_row());
    }
    let Some(first) = rows.first() else {
        return Ok(None);
    };
    Ok(Some(Gf2Matrix::new(first.len(), rows)?))
}

/// Parses `x | z` rows. An input without rows yields an error since the
/// width is unknown.
pub fn matrix_from_text(text: &str) -> Result<Gf2Matrix> {
    parse_rows(text.lines())?.ok_or_else(|| Error::Parse("no matrix rows".into()))
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn code_to_text(code: &QuantumCode) -> String {
    let mut out = matrix_to_text(code.generator());
    out.push_str(SEPARATOR);
    out.push('\n');
    out.push_str(&matrix_to_text(code.stabilizer()));
    let d = code
        .nominal_distance()
        .map_or_else(|| "?".to_string(), |d| d.to_string());
    let report = code.report();
    writeln!(out, "# [[{},{},{}]]", code.n(), code.k(), d).unwrap();
    writeln!(out, "# provenance: {}", code.provenance()).unwrap();
    writeln!(
        out,
        "# validation: hg={} selfdual={} hxhzT={}",
        status(report.hg_ok),
        status(report.selfdual_ok),
        if report.hxhzt_zero { "zero" } else { "nonzero" }
    )
    .unwrap();
    if let Some(w) = report.witness {
        writeln!(
            out,
            "# validation failed: {:?} entry ({}, {}) of the {:?} product is 1",
            w.check, w.row, w.col, w.source
        )
        .unwrap();
    }
    out
}

/// Generator and stabilizer read back from [`code_to_text`] output.
pub fn code_from_text(text: &str) -> Result<(Gf2Matrix, Gf2Matrix)> {
    let lines: Vec<&str> = text.lines().collect();
    let split = lines
        .iter()
        .position(|l| l.trim() == SEPARATOR)
        .ok_or_else(|| Error::Parse("missing generator/stabilizer separator".into()))?;
    let generator = matrix_from_text(&lines[..split].join("\n"))?;
    let stabilizer = parse_rows(lines[split + 1..].iter().copied())?
        .unwrap_or_else(|| Gf2Matrix::empty(generator.n_cols()));
    Ok((generator, stabilizer))
}

/// Structured form of a code, halves listed separately as bit strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDocument {
    pub n: usize,
    pub k: i64,
    pub d: Option<u64>,
    pub provenance: Provenance,
    pub generator_x: Vec<String>,
    pub generator_z: Vec<String>,
    pub stabilizer_x: Vec<String>,
    pub stabilizer_z: Vec<String>,
    pub validation: ValidationReport,
}

fn halves(m: &Gf2Matrix) -> (Vec<String>, Vec<String>) {
    m.rows()
        .iter()
        .map(|r| {
            let p = PauliVector::from_row(r).expect("even width");
            (p.x().to_string(), p.z().to_string())
        })
        .unzip()
}

fn join_halves(n: usize, xs: &[String], zs: &[String]) -> Result<Gf2Matrix> {
    if xs.len() != zs.len() {
        return Err(Error::Parse(format!("{} x rows but {} z rows", xs.len(), zs.len())));
    }
    let rows = xs
        .iter()
        .zip(zs)
        .map(|(x, z)| Ok(x.parse::<BitVector>()?.concat(&z.parse::<BitVector>()?)))
        .collect::<Result<Vec<_>>>()?;
    Gf2Matrix::new(2 * n, rows)
}

impl CodeDocument {
    pub fn from_code(code: &QuantumCode) -> Self {
        let (generator_x, generator_z) = halves(code.generator());
        let (stabilizer_x, stabilizer_z) = halves(code.stabilizer());
        CodeDocument {
            n: code.n(),
            k: code.k(),
            d: code.nominal_distance(),
            provenance: code.provenance().clone(),
            generator_x,
            generator_z,
            stabilizer_x,
            stabilizer_z,
            validation: *code.report(),
        }
    }

    pub fn generator(&self) -> Result<Gf2Matrix> {
        join_halves(self.n, &self.generator_x, &self.generator_z)
    }

    pub fn stabilizer(&self) -> Result<Gf2Matrix> {
        join_halves(self.n, &self.stabilizer_x, &self.stabilizer_z)
    }
}
