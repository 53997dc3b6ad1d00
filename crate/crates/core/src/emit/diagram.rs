//! Fixed-width ASCII keyboard diagrams.
//!
//! Every key cell is 5 display columns wide and shows the upper register of
//! the selected pair above the lower one.

use crate::model::{CodePoint, KeyId, Layout, Register, Row};

const CELL: usize = 5;
const SPACE_BAR: usize = 41;
const SPACE_INDENT: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegisterPair {
    /// Registers 1 and 2.
    Low12,
    /// Registers 3 and 4.
    High34,
}

impl RegisterPair {
    fn registers(self) -> (Register, Register) {
        match self {
            RegisterPair::Low12 => (Register::R2, Register::R1),
            RegisterPair::High34 => (Register::R4, Register::R3),
        }
    }
}

fn is_combining(c: char) -> bool {
    matches!(c as u32, 0x0300..=0x036F | 0x1AB0..=0x1AFF | 0x1DC0..=0x1DFF | 0x20D0..=0x20FF | 0xFE20..=0xFE2F)
}

fn width(s: &str) -> usize {
    s.chars().filter(|&c| !is_combining(c)).count()
}

/// Printable form of a symbol inside a key cell.
pub fn glyph(cp: Option<CodePoint>) -> String {
    let Some(cp) = cp else {
        return String::new();
    };
    match cp.as_char() {
        '\u{2011}' => "/-/".into(),
        '\u{a0}' => "NBSP".into(),
        c if is_combining(c) => format!("\u{25CC}{c}"),
        c => c.to_string(),
    }
}

fn center(s: &str, w: usize) -> String {
    let pad = w.saturating_sub(width(s));
    format!("{}{s}{}", " ".repeat(pad / 2), " ".repeat(pad - pad / 2))
}

fn indent(row: Row) -> usize {
    match row {
        Row::E => 0,
        Row::D => 9,
        Row::C => 11,
        Row::B => 6,
    }
}

fn draw_row(out: &mut String, pad: usize, cells: &[(String, String)], cell_width: usize) {
    let border = format!(
        "{}+{}\n",
        " ".repeat(pad),
        vec!["-".repeat(cell_width); cells.len()].join("+") + "+"
    );
    let line = |pick: fn(&(String, String)) -> &String| {
        let parts: Vec<String> = cells.iter().map(|c| center(pick(c), cell_width)).collect();
        format!("{}|{}|\n", " ".repeat(pad), parts.join("|"))
    };
    out.push_str(&border);
    out.push_str(&line(|c| &c.0));
    out.push_str(&line(|c| &c.1));
    out.push_str(&border);
}

pub fn emit_ascii_diagram(layout: &Layout, pair: RegisterPair) -> String {
    let (upper, lower) = pair.registers();
    let cell = |key: KeyId| (glyph(layout.get(key, upper)), glyph(layout.get(key, lower)));
    let title = match pair {
        RegisterPair::Low12 => "registers 1 and 2",
        RegisterPair::High34 => "registers 3 and 4",
    };
    let mut out = format!("{} ({}): {title}\n", layout.name(), layout.mode());
    for row in Row::ALL {
        let cells: Vec<_> = row.keys().map(cell).collect();
        draw_row(&mut out, indent(row), &cells, CELL);
    }
    draw_row(&mut out, SPACE_INDENT, &[cell(KeyId::SPACE)], SPACE_BAR);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::builtin_layout;
    use crate::model::Mode;

    /// Content of the `n`-th cell on the two content lines of a row block.
    fn cell_at(diagram: &str, row: usize, n: usize) -> (String, String) {
        let lines: Vec<&str> = diagram.lines().skip(1 + row * 4).take(4).collect();
        let pick = |l: &str| l.trim_start().split('|').nth(n + 1).unwrap().trim().to_string();
        (pick(lines[1]), pick(lines[2]))
    }

    #[test]
    fn base_registers_upper_over_lower() {
        let d = emit_ascii_diagram(&builtin_layout("bds").unwrap(), RegisterPair::Low12);
        assert_eq!(cell_at(&d, 0, 0), (")".into(), "(".into()));
        assert_eq!(cell_at(&d, 2, 11), ("“".into(), "„".into()));
    }

    #[test]
    fn substitutions() {
        let d = emit_ascii_diagram(&builtin_layout("phonetic").unwrap(), RegisterPair::High34);
        assert_eq!(cell_at(&d, 0, 11), ("/-/".into(), "/-/".into()));
        assert_eq!(cell_at(&d, 3, 10), ("\u{25CC}\u{301}".into(), "\u{25CC}\u{300}".into()));
        assert_eq!(cell_at(&d, 4, 0), ("NBSP".into(), "NBSP".into()));
    }

    #[test]
    fn fixed_cell_width() {
        for name in ["bds", "latin"] {
            for pair in [RegisterPair::Low12, RegisterPair::High34] {
                let d = emit_ascii_diagram(&builtin_layout(name).unwrap(), pair);
                let lines: Vec<&str> = d.lines().skip(1).collect();
                for block in lines.chunks(4) {
                    let border = width(block[0]);
                    assert_eq!(block[0], block[3]);
                    for line in &block[1..3] {
                        assert_eq!(width(line), border, "{line:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn empty_upper_registers_draw_blank_grid() {
        let d = emit_ascii_diagram(&Layout::empty("blank", Mode::Latin), RegisterPair::High34);
        assert_eq!(d.lines().count(), 1 + 5 * 4);
        assert!(d.lines().skip(1).all(|l| l.chars().all(|c| " +-|".contains(c))));
    }
}
