//! XKB symbols output.

use std::fmt::Write as _;

use crate::error::Error;
use crate::keysym::keysym_for;
use crate::model::{KeyId, Layout, Mode, Register, Row};

/// XKB key name for an ISO 9995 position.
pub fn xkb_key_name(key: KeyId) -> String {
    match (key.row(), key.index()) {
        (Some(Row::E), Some(0)) => "TLDE".into(),
        (Some(Row::E), Some(i)) => format!("AE{i:02}"),
        (Some(Row::D), Some(i)) => format!("AD{i:02}"),
        (Some(Row::C), Some(12)) => "BKSL".into(),
        (Some(Row::C), Some(i)) => format!("AC{i:02}"),
        (Some(Row::B), Some(0)) => "LSGT".into(),
        (Some(Row::B), Some(i)) => format!("AB{i:02}"),
        _ => "SPCE".into(),
    }
}

fn key_line(layout: &Layout, key: KeyId) -> String {
    let a = layout.key(key);
    let levels = if a.get(Register::R3).is_none() && a.get(Register::R4).is_none() {
        &Register::ALL[..2]
    } else {
        &Register::ALL[..]
    };
    let syms: Vec<String> = levels
        .iter()
        .map(|&r| {
            a.get(r)
                .map_or_else(|| "NoSymbol".to_string(), |c| keysym_for(c).to_string())
        })
        .collect();
    format!("    key <{}> {{ [ {} ] }};", xkb_key_name(key), syms.join(", "))
}

/// One `xkb_symbols` block with a line per key in canonical order.
pub fn emit_xkb_block(layout: &Layout, group_name: &str, default: bool) -> String {
    let mut out = String::new();
    if default {
        out.push_str("default ");
    }
    out.push_str("partial alphanumeric_keys\n");
    writeln!(out, "xkb_symbols \"{}\" {{", layout.name()).unwrap();
    writeln!(out, "    name[Group1] = \"{group_name}\";").unwrap();
    out.push_str("    include \"level3(ralt_switch)\"\n");
    for key in KeyId::all() {
        out.push_str(&key_line(layout, key));
        out.push('\n');
    }
    out.push_str("};\n");
    out
}

/// Symbols file holding the Cyrillic layout (default) and the Latin one.
pub fn emit_xkb(cyr: &Layout, lat: &Layout, group_names: (&str, &str)) -> Result<String, Error> {
    for (layout, expected) in [(cyr, Mode::Cyrillic), (lat, Mode::Latin)] {
        if layout.mode() != expected {
            return Err(Error::ModeMismatch {
                layout: layout.name().to_string(),
                expected,
                found: layout.mode(),
            });
        }
    }
    let mut out = String::from("// Generated by kbforge. Levels 3 and 4 are reached with right Alt.\n\n");
    out.push_str(&emit_xkb_block(cyr, group_names.0, true));
    out.push('\n');
    out.push_str(&emit_xkb_block(lat, group_names.1, false));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::builtin_layout;

    #[test]
    fn key_names() {
        let names: Vec<String> = ["E00", "E01", "E12", "D01", "C11", "C12", "B00", "B10", "SPACE"]
            .iter()
            .map(|k| xkb_key_name(k.parse().unwrap()))
            .collect();
        assert_eq!(
            names,
            ["TLDE", "AE01", "AE12", "AD01", "AC11", "BKSL", "LSGT", "AB10", "SPCE"]
        );
    }

    #[test]
    fn golden_lines() {
        let out = emit_xkb(
            &builtin_layout("bds").unwrap(),
            &builtin_layout("latin").unwrap(),
            ("Bulgarian", "English"),
        )
        .unwrap();
        let (cyr, lat) = out.split_once("\npartial alphanumeric_keys").unwrap();
        assert!(cyr.contains("    key <AE06> { [ 6, equal, emdash, emdash ] };\n"));
        assert!(cyr.contains("    key <TLDE> { [ parenleft, parenright, bracketleft, bracketright ] };\n"));
        assert!(cyr.contains("    key <AE01> { [ 1, exclam ] };\n"));
        assert!(cyr.contains("    key <AE08> { [ 8, slash, U0300, U0301 ] };\n"));
        assert!(lat.contains("    key <LSGT> { [ less, greater, U2266, U2267 ] };\n"));
        for block in [cyr, lat] {
            assert_eq!(
                block.lines().filter(|l| l.trim_start().starts_with("key <")).count(),
                49
            );
        }
    }

    #[test]
    fn mode_checked() {
        let bds = builtin_layout("bds").unwrap();
        assert!(matches!(
            emit_xkb(&bds, &bds, ("a", "b")),
            Err(Error::ModeMismatch { .. })
        ));
    }
}
