//! Unicode/keysym table in the shape of the reference tables.
//!
//! Each key takes two rows: registers 1 and 3, then registers 2 and 4. The
//! five columns are separated by exactly one space and an empty cell is an
//! empty string, so `E01 U+0031  1 ` is a key with an empty register 3. The
//! second row leaves the key column empty.

use crate::error::Error;
use crate::keysym::{codepoint_for_keysym, keysym_for};
use crate::layout_io::{format_header, parse_header};
use crate::model::{CodePoint, KeyId, Layout, Register};

const COLUMNS: &str = "# key | r1/r2 | r3/r4 | keysym r1/r2 | keysym r3/r4";

fn cells(cp: Option<CodePoint>) -> (String, String) {
    match cp {
        Some(cp) => (cp.to_string(), keysym_for(cp).to_string()),
        None => (String::new(), String::new()),
    }
}

pub fn emit_unicode_table(layout: &Layout) -> String {
    let mut out = String::new();
    out.push_str(&format_header(layout));
    out.push('\n');
    out.push_str(COLUMNS);
    out.push('\n');
    for key in KeyId::all() {
        let a = layout.key(key);
        for (label, low, high) in [
            (key.to_string(), Register::R1, Register::R3),
            (String::new(), Register::R2, Register::R4),
        ] {
            let (low_cp, low_sym) = cells(a.get(low));
            let (high_cp, high_sym) = cells(a.get(high));
            out.push_str(&[label, low_cp, high_cp, low_sym, high_sym].join(" "));
            out.push('\n');
        }
    }
    out
}

fn parse_cell(cp: &str, sym: &str, line: usize) -> Result<Option<CodePoint>, Error> {
    match (cp, sym) {
        ("", "") => Ok(None),
        ("", _) | (_, "") => Err(Error::parse(
            line,
            "code point and keysym columns disagree on emptiness",
        )),
        (cp, sym) => {
            let cp: CodePoint = cp.parse().map_err(|e: Error| e.at_line(line))?;
            let named = codepoint_for_keysym(sym).map_err(|e| e.at_line(line))?;
            if named != cp || keysym_for(cp) != sym {
                return Err(Error::parse(line, format!("keysym `{sym}` does not name {cp}")));
            }
            Ok(Some(cp))
        }
    }
}

/// Reads a table produced by [`emit_unicode_table`] back into a layout,
/// checking every keysym against its code point.
pub fn parse_unicode_table(text: &str) -> Result<Layout, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (n, header) = lines.next().ok_or_else(|| Error::parse(1, "empty table"))?;
    let (name, mode) = parse_header(header, n)?;
    let mut layout = Layout::empty(name, mode);
    let mut seen = [false; KeyId::COUNT];

    while let Some((n, first)) = lines.next() {
        let (m, second) = lines
            .next()
            .ok_or_else(|| Error::parse(n, "key row without its second row"))?;
        let first: Vec<&str> = first.split(' ').collect();
        let second: Vec<&str> = second.split(' ').collect();
        if first.len() != 5 {
            return Err(Error::parse(n, format!("expected 5 columns, found {}", first.len())));
        }
        if second.len() != 5 || !second[0].is_empty() {
            return Err(Error::parse(m, "malformed second row"));
        }
        let key: KeyId = first[0].parse().map_err(|e: Error| e.at_line(n))?;
        if std::mem::replace(&mut seen[key.ordinal()], true) {
            return Err(Error::parse(n, format!("duplicate key rows for {key}")));
        }
        layout.set(key, Register::R1, parse_cell(first[1], first[3], n)?);
        layout.set(key, Register::R3, parse_cell(first[2], first[4], n)?);
        layout.set(key, Register::R2, parse_cell(second[1], second[3], m)?);
        layout.set(key, Register::R4, parse_cell(second[2], second[4], m)?);
    }
    Ok(layout)
}
