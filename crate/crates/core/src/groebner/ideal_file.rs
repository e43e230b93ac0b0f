//! Ideal files.
//!
//! ```text
//! # comment
//! grid 3 4              rows 1..=3 in columns 1..=4; `grid 0..3 4` adds row 0
//! order lex x(1,1) x(2,1) …    optional; keyword plus optional priority list
//! ungraded              optional; skip the homogeneity check
//! homogenize            optional; request multigraded homogenization
//! x(1,1)*x(2,2) - x(1,2)*x(2,1)
//! ```
//!
//! Header lines come first; every later non-blank line is one generator.

use super::IdealPresentation;
use crate::error::{Error, Result};
use crate::poly::{Grading, Parser, Polynomial, TermOrder, Variable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub ideal: IdealPresentation,
    pub order: TermOrder,
    pub homogenize: bool,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Column (1-based) of the `k`-th whitespace-separated word of `line`.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_u16(word: (usize, &str), line: usize) -> Result<u16> {
    word.1
        .parse()
        .map_err(|_| err(line, word.0, format!("expected a small integer, found '{}'", word.1)))
}

fn parse_grid(ws: &[(usize, &str)], line: usize) -> Result<Grading> {
    if ws.len() != 3 {
        return Err(err(line, 1, "usage: grid ROWS COLUMNS or grid FIRST..LAST COLUMNS"));
    }
    let rows = match ws[1].1.split_once("..") {
        Some((a, b)) => {
            let lo = parse_u16((ws[1].0, a), line)?;
            let hi = parse_u16((ws[1].0 + a.len() + 2, b), line)?;
            if lo > hi {
                return Err(err(line, ws[1].0, "empty row range"));
            }
            lo..=hi
        }
        None => 1..=parse_u16(ws[1], line)?,
    };
    let cols = parse_u16(ws[2], line)?;
    if cols == 0 {
        return Err(err(line, ws[2].0, "a grid needs at least one column"));
    }
    Ok(Grading::grid(rows, cols))
}

fn parse_order(text: &str, line: usize, grading: &Grading) -> Result<TermOrder> {
    let ws = words(text);
    let order = match ws.get(1).map(|w| w.1) {
        Some("lex") => TermOrder::lex(),
        Some("degrevlex") | Some("grevlex") => TermOrder::degrevlex(),
        Some(other) => return Err(err(line, ws[1].0, format!("unknown term order '{other}'"))),
        None => return Err(err(line, text.len() + 1, "expected a term order name")),
    };
    let mut priority = Vec::new();
    for &(col, word) in &ws[2..] {
        let word = word.trim_end_matches(',');
        let accept = |v: Variable| grading.contains(v);
        let p = Parser::new(word, line, &accept).parse().map_err(|e| match e {
            Error::Parse { column, message, .. } => err(line, col + column - 1, message),
            other => other,
        })?;
        let vars = p.variables();
        if vars.len() != 1 || p != Polynomial::var(vars[0]) {
            return Err(err(line, col, format!("'{word}' is not a variable")));
        }
        if priority.contains(&vars[0]) {
            return Err(err(line, col, format!("variable {} listed twice", vars[0])));
        }
        priority.push(vars[0]);
    }
    Ok(order.with_priority(priority))
}

/// Parses an ideal file; errors carry 1-based line and column.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut grading: Option<Grading> = None;
    let mut order_line: Option<(usize, String)> = None;
    let mut ungraded = false;
    let mut homogenize = false;
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let ws = words(line);
        let header = generators.is_empty();
        match ws[0].1 {
            "grid" if header => {
                if grading.is_some() {
                    return Err(err(line_no, ws[0].0, "duplicate grid header"));
                }
                grading = Some(parse_grid(&ws, line_no)?);
            }
            "order" if header => order_line = Some((line_no, line.to_string())),
            "ungraded" if header => ungraded = true,
            "homogenize" if header => homogenize = true,
            _ => {
                let g = grading
                    .as_ref()
                    .ok_or_else(|| err(line_no, 1, "a 'grid' header must precede the generators"))?;
                let accept = |v: Variable| g.contains(v);
                let p = Parser::new(line, line_no, &accept).parse()?;
                if !(ungraded || homogenize) && !g.is_homogeneous(&p) {
                    return Err(err(line_no, ws[0].0, "generator is not homogeneous for the grading"));
                }
                generators.push(p);
            }
        }
    }
    let grading = grading.ok_or_else(|| err(1, 1, "missing 'grid' header"))?;
    let order = match order_line {
        Some((line_no, text)) => parse_order(&text, line_no, &grading)?,
        None => TermOrder::lex(),
    };
    let ideal = if ungraded || homogenize {
        IdealPresentation::ungraded(generators, grading)?
    } else {
        IdealPresentation::new(generators, grading)?
    };
    Ok(IdealFile {
        ideal,
        order,
        homogenize,
    })
}
