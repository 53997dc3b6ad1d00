//! The line-oriented layout file format.
//!
//! ```text
//! layout bds mode cyrillic
//! E06 U+0036 U+003D U+2014 U+2014
//! E01 U+0031 U+0021 - -
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Keys that are not
//! listed get four empty registers.

use std::fmt::Write as _;

use crate::error::Error;
use crate::model::{CodePoint, KeyId, Layout, Mode, Register};

const EMPTY: &str = "-";

pub(crate) fn parse_header(line: &str, line_no: usize) -> Result<(String, Mode), Error> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    match fields.as_slice() {
        ["layout", name, "mode", mode] => {
            let mode = mode.parse::<Mode>().map_err(|e| e.at_line(line_no))?;
            Ok((name.to_string(), mode))
        }
        _ => Err(Error::parse(
            line_no,
            format!("malformed header `{line}` (expected `layout <name> mode <cyrillic|latin>`)"),
        )),
    }
}

pub(crate) fn format_header(layout: &Layout) -> String {
    format!("layout {} mode {}", layout.name(), layout.mode())
}

fn parse_cell(token: &str, line_no: usize) -> Result<Option<CodePoint>, Error> {
    if token == EMPTY {
        return Ok(None);
    }
    token.parse::<CodePoint>().map(Some).map_err(|e| e.at_line(line_no))
}

/// Yields `(line number, trimmed line)` for lines carrying content.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_layout(text: &str) -> Result<Layout, Error> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty layout file (missing header)"))?;
    let (name, mode) = parse_header(header, line_no)?;
    let mut layout = Layout::empty(name, mode);
    let mut seen = [false; KeyId::COUNT];

    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Error::parse(
                line_no,
                format!("expected `<KEYID> <r1> <r2> <r3> <r4>`, found {} fields", fields.len()),
            ));
        }
        let key: KeyId = fields[0].parse().map_err(|e: Error| e.at_line(line_no))?;
        if std::mem::replace(&mut seen[key.ordinal()], true) {
            return Err(Error::parse(line_no, format!("duplicate key line for {key}")));
        }
        for (reg, token) in Register::ALL.into_iter().zip(&fields[1..]) {
            layout.set(key, reg, parse_cell(token, line_no)?);
        }
    }
    Ok(layout)
}

pub fn serialize_layout(layout: &Layout) -> String {
    let mut out = format_header(layout);
    out.push('\n');
    for key in KeyId::all() {
        out.push_str(&key.to_string());
        for cell in layout.key(key).registers() {
            match cell {
                Some(cp) => write!(out, " {cp}").unwrap(),
                None => write!(out, " {EMPTY}").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}
