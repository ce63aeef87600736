//! Text and JSON formats: ideal files, Betti table files, degree-matrix
//! JSON, report serialization, and the triangular pretty printer.
//!
//! Rationals are rendered as `p/q` strings in lowest terms (plain `p`
//! when integral); no floating point appears in any output.

use std::collections::BTreeMap;

use num::BigRational;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::betti::BettiTable;
use crate::checker::{BoundContext, BoundReport, Classification};
use crate::determinantal::DegreeMatrix;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A parsed ideal file: the ring's variable names plus the ideal.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub names: Vec<String>,
    pub ideal: MonomialIdeal,
}

fn parse_err(file: &str, line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        file: file.to_string(),
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses the ideal text format:
///
/// ```text
/// ring x0 x1 x2
/// # a comment
/// x0^2*x1
/// x2^6
/// ```
///
/// Line 1 names the variables; each following non-blank line is one
/// monomial in `name^exp` factors joined by `*` (a bare `1` is the
/// constant monomial). `#` starts a comment.
pub fn parse_ideal_str(src: &str, file: &str) -> Result<IdealFile> {
    let mut names: Option<Vec<String>> = None;
    let mut gens: Vec<Monomial> = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        match &names {
            None => {
                let mut toks = content.split_whitespace();
                if toks.next() != Some("ring") {
                    return Err(parse_err(
                        file,
                        line_no,
                        1,
                        "first line must be `ring <var> <var> ...`",
                    ));
                }
                let vars: Vec<String> = toks.map(str::to_string).collect();
                if vars.is_empty() {
                    return Err(parse_err(file, line_no, 5, "ring line names no variables"));
                }
                let mut seen = std::collections::BTreeSet::new();
                for v in &vars {
                    if !seen.insert(v.clone()) {
                        return Err(parse_err(
                            file,
                            line_no,
                            1,
                            format!("duplicate variable name `{v}`"),
                        ));
                    }
                }
                names = Some(vars);
            }
            Some(vars) => {
                gens.push(parse_monomial(content, vars, file, line_no)?);
            }
        }
    }
    let names = names.ok_or_else(|| parse_err(file, 1, 1, "empty file: missing ring line"))?;
    let n = names.len();
    let ideal = MonomialIdeal::minimalize(n, gens)?;
    Ok(IdealFile { names, ideal })
}

fn parse_monomial(line: &str, names: &[String], file: &str, line_no: usize) -> Result<Monomial> {
    let n = names.len();
    let mut exps = vec![0u32; n];
    // walk `*`-separated factors, tracking byte offsets for error columns
    let mut offset = 0;
    for piece in line.split('*') {
        let trimmed = piece.trim();
        let col = offset + piece.len() - piece.trim_start().len() + 1;
        offset += piece.len() + 1;
        if trimmed.is_empty() {
            return Err(parse_err(file, line_no, col, "empty factor"));
        }
        if trimmed == "1" {
            continue;
        }
        let (name, exp) = match trimmed.split_once('^') {
            Some((name, exp_str)) => {
                let exp: u32 = exp_str.trim().parse().map_err(|_| {
                    parse_err(
                        file,
                        line_no,
                        col,
                        format!("bad exponent `{}`", exp_str.trim()),
                    )
                })?;
                (name.trim(), exp)
            }
            None => (trimmed, 1),
        };
        let var = names.iter().position(|v| v == name).ok_or_else(|| {
            parse_err(file, line_no, col, format!("unknown variable `{name}`"))
        })?;
        exps[var] = exps[var].checked_add(exp).ok_or(Error::ExponentOverflow {
            context: "parsing a monomial",
        })?;
    }
    Ok(Monomial::new(exps))
}

pub fn monomial_str(m: &Monomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(names[i].clone());
        } else {
            parts.push(format!("{}^{}", names[i], e));
        }
    }
    parts.join("*")
}

/// Parses the Betti table text format:
///
/// ```text
/// pd 3 vars 4
/// 0 0 1
/// 1 2 4
/// ```
///
/// Header `pd P vars N`, then one `i j beta` triple per line.
pub fn parse_betti_str(src: &str, file: &str) -> Result<(BettiTable, usize)> {
    let mut header: Option<(u32, usize)> = None;
    let mut entries: BTreeMap<(u32, i64), u64> = BTreeMap::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                if toks.len() != 4 || toks[0] != "pd" || toks[2] != "vars" {
                    return Err(parse_err(file, line_no, 1, "expected header `pd P vars N`"));
                }
                let pd = toks[1]
                    .parse()
                    .map_err(|_| parse_err(file, line_no, 4, "bad projective dimension"))?;
                let vars = toks[3]
                    .parse()
                    .map_err(|_| parse_err(file, line_no, 1, "bad variable count"))?;
                header = Some((pd, vars));
            }
            Some(_) => {
                if toks.len() != 3 {
                    return Err(parse_err(file, line_no, 1, "expected `i j beta`"));
                }
                let i: u32 = toks[0]
                    .parse()
                    .map_err(|_| parse_err(file, line_no, 1, "bad homological index"))?;
                let j: i64 = toks[1]
                    .parse()
                    .map_err(|_| parse_err(file, line_no, 1, "bad internal degree"))?;
                let beta: u64 = toks[2]
                    .parse()
                    .map_err(|_| parse_err(file, line_no, 1, "bad multiplicity"))?;
                *entries.entry((i, j)).or_insert(0) += beta;
            }
        }
    }
    let (pd, vars) = header.ok_or_else(|| parse_err(file, 1, 1, "missing header"))?;
    let table = BettiTable::from_entries(entries)?;
    if table.pd() != pd {
        return Err(parse_err(
            file,
            1,
            1,
            format!("header says pd {pd} but entries reach {}", table.pd()),
        ));
    }
    Ok((table, vars))
}

pub fn betti_to_json(table: &BettiTable, vars: usize) -> Value {
    let entries: Vec<Value> = table
        .entries()
        .map(|(i, j, b)| json!([i, j, b]))
        .collect();
    json!({ "pd": table.pd(), "vars": vars, "entries": entries })
}

pub fn betti_from_json_str(src: &str, file: &str) -> Result<(BettiTable, usize)> {
    #[derive(Deserialize)]
    struct TableFile {
        pd: u32,
        vars: usize,
        entries: Vec<(u32, i64, u64)>,
    }
    let parsed: TableFile = serde_json::from_str(src)
        .map_err(|e| parse_err(file, e.line(), e.column(), e.to_string()))?;
    let mut entries: BTreeMap<(u32, i64), u64> = BTreeMap::new();
    for (i, j, b) in parsed.entries {
        *entries.entry((i, j)).or_insert(0) += b;
    }
    let table = BettiTable::from_entries(entries)?;
    if table.pd() != parsed.pd {
        return Err(parse_err(
            file,
            1,
            1,
            format!("pd field says {} but entries reach {}", parsed.pd, table.pd()),
        ));
    }
    Ok((table, parsed.vars))
}

/// Degree-matrix JSON: either `{"b": [...], "d": [...]}` or
/// `{"a": [[...], ...]}`.
pub fn degree_matrix_from_json_str(src: &str, file: &str) -> Result<DegreeMatrix> {
    #[derive(Deserialize)]
    struct DegreesFile {
        b: Option<Vec<i64>>,
        d: Option<Vec<i64>>,
        a: Option<Vec<Vec<i64>>>,
    }
    let parsed: DegreesFile = serde_json::from_str(src)
        .map_err(|e| parse_err(file, e.line(), e.column(), e.to_string()))?;
    match (parsed.b, parsed.d, parsed.a) {
        (Some(b), Some(d), None) => DegreeMatrix::from_twists(b, d),
        (None, None, Some(a)) => DegreeMatrix::from_grid(a),
        _ => Err(Error::Input(
            "degree matrix JSON needs either both `b` and `d`, or `a` alone".into(),
        )),
    }
}

pub fn ratio_str(r: &BigRational) -> String {
    r.to_string()
}

pub fn classification_str(c: Classification) -> &'static str {
    match c {
        Classification::Pure => "pure",
        Classification::QuasiPure => "quasi-pure",
        Classification::General => "general",
    }
}

pub fn context_str(c: BoundContext) -> &'static str {
    match c {
        BoundContext::Cyclic => "cyclic",
        BoundContext::Module => "module",
        BoundContext::Curve => "curve",
        BoundContext::Determinantal => "determinantal",
    }
}

pub fn report_to_json(r: &BoundReport) -> Value {
    json!({
        "context": context_str(r.context),
        "classification": classification_str(r.classification),
        "lower": r.lower_value.as_ref().map(ratio_str),
        "e": ratio_str(&r.e_value),
        "upper": ratio_str(&r.upper_value),
        "lower_holds": r.lower_holds,
        "upper_holds": r.upper_holds,
        "lower_sharp": r.lower_sharp,
        "upper_sharp": r.upper_sharp,
        "strong_lower": r.strong_lower.as_ref().map(|(v, holds)| json!({
            "value": ratio_str(v),
            "holds": holds,
        })),
        "vandermonde_ok": r.vandermonde_ok,
        "findings": r.findings,
    })
}

/// Triangular layout: column `i`, row `j - i`, with a `total` row.
///
/// ```text
///         0 1 2 3
/// total:  1 4 4 1
///     0:  1 . . .
///     1:  . 4 4 1
/// ```
pub fn render_betti_pretty(table: &BettiTable) -> String {
    let pd = table.pd();
    let rows: Vec<i64> = table.entries().map(|(i, j, _)| j - i as i64).collect();
    let row_lo = *rows.iter().min().unwrap();
    let row_hi = *rows.iter().max().unwrap();

    let mut col_cells: Vec<Vec<String>> = Vec::new();
    for i in 0..=pd {
        let mut cells = vec![i.to_string(), table.total(i).to_string()];
        for r in row_lo..=row_hi {
            let b = table.entry(i, r + i as i64);
            cells.push(if b == 0 { ".".to_string() } else { b.to_string() });
        }
        col_cells.push(cells);
    }
    let widths: Vec<usize> = col_cells
        .iter()
        .map(|cells| cells.iter().map(String::len).max().unwrap())
        .collect();
    let label_width = "total:".len().max(
        (row_lo..=row_hi)
            .map(|r| format!("{r}:").len())
            .max()
            .unwrap_or(0),
    );

    let mut out = String::new();
    let mut line = format!("{:>label_width$}", "");
    for (cells, w) in col_cells.iter().zip(&widths) {
        line.push_str(&format!(" {:>w$}", cells[0]));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    let mut line = format!("{:>label_width$}", "total:");
    for (cells, w) in col_cells.iter().zip(&widths) {
        line.push_str(&format!(" {:>w$}", cells[1]));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for (k, r) in (row_lo..=row_hi).enumerate() {
        let mut line = format!("{:>label_width$}", format!("{r}:"));
        for (cells, w) in col_cells.iter().zip(&widths) {
            line.push_str(&format!(" {:>w$}", cells[k + 2]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
