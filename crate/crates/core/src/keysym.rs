//! Codepoint ↔ X keysym name mapping.
//!
//! The named table mirrors the names the layout tables print. Codepoints
//! outside it use the `U` + hex fallback, which is also what the tables use
//! for symbols such as `U045D` or `U2030` even where a newer X release might
//! carry a name.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::Error;
use crate::model::{parse_upper_hex, CodePoint};

/// An X keysym name, either from the named table or of the form `U` + hex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KeysymName(String);

impl KeysymName {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for KeysymName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl PartialEq<&str> for KeysymName {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

const ASCII: &[(u32, &str)] = &[
    (0x20, "space"),
    (0x21, "exclam"),
    (0x22, "quotedbl"),
    (0x23, "numbersign"),
    (0x24, "dollar"),
    (0x25, "percent"),
    (0x26, "ampersand"),
    (0x27, "apostrophe"),
    (0x28, "parenleft"),
    (0x29, "parenright"),
    (0x2A, "asterisk"),
    (0x2B, "plus"),
    (0x2C, "comma"),
    (0x2D, "minus"),
    (0x2E, "period"),
    (0x2F, "slash"),
    (0x3A, "colon"),
    (0x3B, "semicolon"),
    (0x3C, "less"),
    (0x3D, "equal"),
    (0x3E, "greater"),
    (0x3F, "question"),
    (0x40, "at"),
    (0x5B, "bracketleft"),
    (0x5C, "backslash"),
    (0x5D, "bracketright"),
    (0x5E, "asciicircum"),
    (0x5F, "underscore"),
    (0x60, "grave"),
    (0x7B, "braceleft"),
    (0x7C, "bar"),
    (0x7D, "braceright"),
    (0x7E, "asciitilde"),
];

const LATIN1: &[(u32, &str)] = &[
    (0xA0, "nobreakspace"),
    (0xA1, "exclamdown"),
    (0xA2, "cent"),
    (0xA3, "sterling"),
    (0xA4, "currency"),
    (0xA5, "yen"),
    (0xA6, "brokenbar"),
    (0xA7, "section"),
    (0xA8, "diaeresis"),
    (0xA9, "copyright"),
    (0xAA, "ordfeminine"),
    (0xAB, "guillemotleft"),
    (0xAC, "notsign"),
    (0xAD, "hyphen"),
    (0xAE, "registered"),
    (0xAF, "macron"),
    (0xB0, "degree"),
    (0xB1, "plusminus"),
    (0xB2, "twosuperior"),
    (0xB3, "threesuperior"),
    (0xB4, "acute"),
    (0xB5, "mu"),
    (0xB6, "paragraph"),
    (0xB7, "periodcentered"),
    (0xB8, "cedilla"),
    (0xB9, "onesuperior"),
    (0xBA, "masculine"),
    (0xBB, "guillemotright"),
    (0xBC, "onequarter"),
    (0xBD, "onehalf"),
    (0xBE, "threequarters"),
    (0xBF, "questiondown"),
    (0xD7, "multiply"),
    (0xF7, "division"),
];

const CYRILLIC_NAMES: [&str; 32] = [
    "A", "BE", "VE", "GHE", "DE", "IE", "ZHE", "ZE", "I", "SHORTI", "KA", "EL", "EM", "EN", "O", "PE", "ER", "ES",
    "TE", "U", "EF", "HA", "TSE", "CHE", "SHA", "SHCHA", "HARDSIGN", "YERU", "SOFTSIGN", "E", "YU", "YA",
];

// Greek capitals U+0391..U+03A9; U+03A2 is unassigned.
const GREEK_NAMES: [Option<&str>; 25] = [
    Some("ALPHA"),
    Some("BETA"),
    Some("GAMMA"),
    Some("DELTA"),
    Some("EPSILON"),
    Some("ZETA"),
    Some("ETA"),
    Some("THETA"),
    Some("IOTA"),
    Some("KAPPA"),
    Some("LAMBDA"),
    Some("MU"),
    Some("NU"),
    Some("XI"),
    Some("OMICRON"),
    Some("PI"),
    Some("RHO"),
    None,
    Some("SIGMA"),
    Some("TAU"),
    Some("UPSILON"),
    Some("PHI"),
    Some("CHI"),
    Some("PSI"),
    Some("OMEGA"),
];

const SYMBOLS: &[(u32, &str)] = &[
    (0x2013, "endash"),
    (0x2014, "emdash"),
    (0x2018, "leftsinglequotemark"),
    (0x2019, "rightsinglequotemark"),
    (0x201C, "leftdoublequotemark"),
    (0x201D, "rightdoublequotemark"),
    (0x201E, "doublelowquotemark"),
    (0x2020, "dagger"),
    (0x2022, "enfilledcircbullet"),
    (0x2026, "ellipsis"),
    (0x20AC, "EuroSign"),
    (0x2116, "numerosign"),
    (0x2122, "trademark"),
    (0x2207, "nabla"),
    (0x221E, "infinity"),
    (0x2227, "logicaland"),
    (0x2228, "logicalor"),
    (0x2229, "intersection"),
    (0x222A, "union"),
    (0x222B, "integral"),
    (0x2260, "notequal"),
    (0x2261, "identical"),
    (0x2282, "includedin"),
    (0x22A5, "downtack"),
];

struct Table {
    by_cp: HashMap<u32, String>,
    by_name: HashMap<String, u32>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut entries: Vec<(u32, String)> = Vec::new();
        // digits and letters are their own names
        for c in ('0'..='9').chain('A'..='Z').chain('a'..='z') {
            entries.push((c as u32, c.to_string()));
        }
        entries.extend(ASCII.iter().map(|&(c, n)| (c, n.to_string())));
        entries.extend(LATIN1.iter().map(|&(c, n)| (c, n.to_string())));
        for (i, name) in CYRILLIC_NAMES.iter().enumerate() {
            entries.push((0x410 + i as u32, format!("Cyrillic_{name}")));
            entries.push((0x430 + i as u32, format!("Cyrillic_{}", name.to_lowercase())));
        }
        entries.push((0x401, "Cyrillic_IO".into()));
        entries.push((0x451, "Cyrillic_io".into()));
        for (i, name) in GREEK_NAMES.iter().enumerate() {
            if let Some(name) = name {
                entries.push((0x391 + i as u32, format!("Greek_{name}")));
                entries.push((0x3B1 + i as u32, format!("Greek_{}", name.to_lowercase())));
            }
        }
        entries.push((0x3C2, "Greek_finalsmallsigma".into()));
        entries.extend(SYMBOLS.iter().map(|&(c, n)| (c, n.to_string())));

        let mut by_cp = HashMap::new();
        let mut by_name = HashMap::new();
        for (cp, name) in entries {
            let prev = by_cp.insert(cp, name.clone());
            debug_assert!(prev.is_none(), "duplicate codepoint {cp:#X}");
            let prev = by_name.insert(name, cp);
            debug_assert!(prev.is_none(), "duplicate keysym name");
        }
        Table { by_cp, by_name }
    })
}

/// Named keysym for `cp`, or `U` + uppercase hex when the table has none.
pub fn keysym_for(cp: CodePoint) -> KeysymName {
    match table().by_cp.get(&cp.value()) {
        Some(name) => KeysymName(name.clone()),
        None => KeysymName(format!("U{:04X}", cp.value())),
    }
}

pub fn codepoint_for_keysym(name: &str) -> Result<CodePoint, Error> {
    if let Some(&cp) = table().by_name.get(name) {
        return CodePoint::new(cp);
    }
    name.strip_prefix('U')
        .and_then(parse_upper_hex)
        .and_then(|v| CodePoint::new(v).ok())
        .ok_or_else(|| Error::UnknownKeysym(name.to_string()))
}

/// Every `(codepoint, name)` pair of the named table, sorted by codepoint.
pub fn named_entries() -> Vec<(CodePoint, KeysymName)> {
    let mut v: Vec<_> = table()
        .by_cp
        .iter()
        .filter_map(|(&c, n)| CodePoint::new(c).ok().map(|c| (c, KeysymName(n.clone()))))
        .collect();
    v.sort_by_key(|(c, _)| *c);
    v
}
