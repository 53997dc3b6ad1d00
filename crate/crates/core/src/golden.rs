//! Embedded reference layouts and rule files, layout diffing and profile
//! validation.

use std::fmt;

use crate::error::Error;
use crate::layout_io::parse_layout;
use crate::model::{CodePoint, KeyId, Layout, Mode, Register};
use crate::rules::{parse_rules, RuleList};

/// Names of the shipped layouts.
pub const BUILTIN_NAMES: [&str; 4] = ["bds", "phonetic", "phonetic-bds", "latin"];

/// Raw text of a shipped layout asset.
pub fn builtin_layout_text(name: &str) -> Result<&'static str, Error> {
    Ok(match name {
        "bds" => include_str!("../assets/bds.layout"),
        "phonetic" => include_str!("../assets/phonetic.layout"),
        "phonetic-bds" => include_str!("../assets/phonetic-bds.layout"),
        "latin" => include_str!("../assets/latin.layout"),
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    })
}

/// Raw text of a shipped rule asset.
pub fn builtin_rules_text(name: &str) -> Result<&'static str, Error> {
    Ok(match name {
        "bds" => include_str!("../assets/bds.rules"),
        "phonetic" => include_str!("../assets/phonetic.rules"),
        "phonetic-bds" => include_str!("../assets/phonetic-bds.rules"),
        "latin" => include_str!("../assets/latin.rules"),
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    })
}

/// The complete reference layout.
pub fn builtin_layout(name: &str) -> Result<Layout, Error> {
    parse_layout(builtin_layout_text(name)?)
}

/// The reference layout with registers 3 and 4 stripped.
pub fn builtin_base(name: &str) -> Result<Layout, Error> {
    builtin_layout(name).map(|l| l.base_only())
}

pub fn builtin_rules(name: &str) -> Result<RuleList, Error> {
    parse_rules(builtin_rules_text(name)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellDiff {
    pub key: KeyId,
    pub reg: Register,
    pub left: Option<CodePoint>,
    pub right: Option<CodePoint>,
}

/// Differing cells, in canonical key order then register order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LayoutDiff {
    pub entries: Vec<CellDiff>,
}

impl LayoutDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

impl fmt::Display for LayoutDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |c: Option<CodePoint>| c.map_or_else(|| "-".to_string(), |c| c.to_string());
        for e in &self.entries {
            writeln!(f, "{} {} {} {}", e.key, e.reg, cell(e.left), cell(e.right))?;
        }
        Ok(())
    }
}

/// Compares register contents only; names and modes are ignored.
pub fn diff_layouts(a: &Layout, b: &Layout) -> LayoutDiff {
    let entries = a
        .cells()
        .zip(b.cells())
        .filter(|((_, _, l), (_, _, r))| l != r)
        .map(|((key, reg, left), (_, _, right))| CellDiff { key, reg, left, right })
        .collect();
    LayoutDiff { entries }
}

/// Symbols that are checked together and reported as one finding when any
/// of them is missing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolGroup {
    pub label: String,
    pub symbols: Vec<CodePoint>,
}

impl SymbolGroup {
    pub fn new(label: impl Into<String>, symbols: impl IntoIterator<Item = char>) -> Self {
        SymbolGroup {
            label: label.into(),
            symbols: symbols.into_iter().map(CodePoint::from).collect(),
        }
    }

    fn each(symbols: impl IntoIterator<Item = char>) -> impl Iterator<Item = SymbolGroup> {
        symbols.into_iter().map(|c| SymbolGroup::new(c.to_string(), [c]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationProfile {
    pub name: String,
    pub mode: Mode,
    /// Must be reachable from register 1 or 2.
    pub required: Vec<SymbolGroup>,
    /// Capital letters, typed either from their own slot or with CapsLock
    /// from the small letter in register 1 or 2.
    pub capitals: Vec<SymbolGroup>,
    /// Must be reachable from any register.
    pub required_any: Vec<SymbolGroup>,
    /// Every key must define registers 1 and 2.
    pub base_registers_total: bool,
}

const BULGARIAN_LOWER: &str = "абвгдежзийклмнопрстуфхцчшщъьюя";

impl ValidationProfile {
    /// Bulgarian Cyrillic mode: the full alphabet in both cases, digits, and
    /// the signs a modern Bulgarian layout has to carry on the keycaps.
    pub fn bg_cyrillic() -> Self {
        let mut required: Vec<SymbolGroup> = SymbolGroup::each(BULGARIAN_LOWER.chars()).collect();
        required.extend(SymbolGroup::each('0'..='9'));
        required.push(SymbolGroup::new("double quotes", ['„', '“']));
        required.push(SymbolGroup::new("accented i", ['ѝ', 'Ѝ']));
        required.extend(SymbolGroup::each(['–', '€', '№', '§']));
        ValidationProfile {
            name: "bg-cyrillic".into(),
            mode: Mode::Cyrillic,
            required,
            capitals: SymbolGroup::each(BULGARIAN_LOWER.chars().flat_map(char::to_uppercase)).collect(),
            required_any: SymbolGroup::each(['—', '\u{2011}', '\u{a0}']).collect(),
            base_registers_total: true,
        }
    }

    /// English Latin mode: printable ASCII on the keycaps.
    pub fn en_latin() -> Self {
        ValidationProfile {
            name: "en-latin".into(),
            mode: Mode::Latin,
            required: SymbolGroup::each(' '..='~').collect(),
            capitals: Vec::new(),
            required_any: SymbolGroup::each(['—', '–', '€']).collect(),
            base_registers_total: true,
        }
    }

    pub fn by_name(name: &str) -> Result<Self, Error> {
        match name {
            "bg-cyrillic" => Ok(Self::bg_cyrillic()),
            "en-latin" => Ok(Self::en_latin()),
            other => Err(Error::UnknownProfile(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    BaseRegisters,
    /// Register 1 or 2, or the small letter under CapsLock.
    CapsLock,
    AnyRegister,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolCheck {
    pub symbol: CodePoint,
    pub scope: Scope,
    /// Slots in scope holding the symbol; empty when missing.
    pub found: Vec<(KeyId, Register)>,
}

impl SymbolCheck {
    pub fn present(&self) -> bool {
        !self.found.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    Missing {
        group: String,
        scope: Scope,
        symbols: Vec<CodePoint>,
    },
    IncompleteKey {
        key: KeyId,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub profile: String,
    pub checks: Vec<SymbolCheck>,
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn missing(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| matches!(f, Finding::Missing { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "profile {}", self.profile)?;
        for c in &self.checks {
            let scope = match c.scope {
                Scope::BaseRegisters => "base",
                Scope::CapsLock => "caps",
                Scope::AnyRegister => "any",
            };
            write!(
                f,
                "{} {} {}",
                c.symbol,
                scope,
                if c.present() { "present" } else { "missing" }
            )?;
            for (k, r) in &c.found {
                write!(f, " {k}/{r}")?;
            }
            writeln!(f)?;
        }
        for finding in &self.findings {
            match finding {
                Finding::Missing { group, symbols, .. } => {
                    let list: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
                    writeln!(f, "MISSING {group}: {}", list.join(" "))?;
                }
                Finding::IncompleteKey { key } => writeln!(f, "INCOMPLETE {key}: register 1 or 2 empty")?,
            }
        }
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn validate_profile(layout: &Layout, profile: &ValidationProfile) -> Result<ValidationReport, Error> {
    if layout.mode() != profile.mode {
        return Err(Error::ModeMismatch {
            layout: layout.name().to_string(),
            expected: profile.mode,
            found: layout.mode(),
        });
    }
    let mut checks = Vec::new();
    let mut findings = Vec::new();
    let groups = profile
        .required
        .iter()
        .map(|g| (g, Scope::BaseRegisters))
        .chain(profile.capitals.iter().map(|g| (g, Scope::CapsLock)))
        .chain(profile.required_any.iter().map(|g| (g, Scope::AnyRegister)));
    for (group, scope) in groups {
        let mut missing = Vec::new();
        for &symbol in &group.symbols {
            let mut found: Vec<_> = layout
                .occurrences_of(symbol)
                .into_iter()
                .filter(|(_, r)| scope == Scope::AnyRegister || r.is_base())
                .collect();
            if scope == Scope::CapsLock && found.is_empty() {
                let mut lower = symbol.as_char().to_lowercase();
                if let (Some(small), None) = (lower.next(), lower.next()) {
                    found = layout
                        .occurrences_of(small.into())
                        .into_iter()
                        .filter(|(_, r)| r.is_base())
                        .collect();
                }
            }
            if found.is_empty() {
                missing.push(symbol);
            }
            checks.push(SymbolCheck { symbol, scope, found });
        }
        if !missing.is_empty() {
            findings.push(Finding::Missing {
                group: group.label.clone(),
                scope,
                symbols: missing,
            });
        }
    }
    if profile.base_registers_total {
        for key in KeyId::all() {
            let a = layout.key(key);
            if a.get(Register::R1).is_none() || a.get(Register::R2).is_none() {
                findings.push(Finding::IncompleteKey { key });
            }
        }
    }
    Ok(ValidationReport {
        profile: profile.name.clone(),
        checks,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse() {
        for name in BUILTIN_NAMES {
            let l = builtin_layout(name).unwrap();
            assert_eq!(l.name(), name);
            assert!(!builtin_rules(name).unwrap().is_empty());
        }
        assert!(matches!(builtin_layout("dvorak"), Err(Error::UnknownBuiltin(_))));
        assert!(builtin_rules("dvorak").is_err());
        assert!(builtin_base("dvorak").is_err());
    }

    #[test]
    fn base_strips_upper_registers() {
        let base = builtin_base("bds").unwrap();
        let e08: KeyId = "E08".parse().unwrap();
        assert_eq!(
            base.key(e08).registers().map(|c| c.map(CodePoint::as_char)),
            [Some('8'), Some('/'), None, None]
        );
        let latin = builtin_base("latin").unwrap();
        assert_eq!(
            latin
                .key("E00".parse().unwrap())
                .registers()
                .map(|c| c.map(CodePoint::as_char)),
            [Some('`'), Some('~'), None, None]
        );
    }

    #[test]
    fn diff_lists_upper_cells_between_base_and_golden() {
        for name in BUILTIN_NAMES {
            let golden = builtin_layout(name).unwrap();
            let base = builtin_base(name).unwrap();
            let diff = diff_layouts(&base, &golden);
            let populated = golden.cells().filter(|(_, r, c)| !r.is_base() && c.is_some()).count();
            assert_eq!(diff.len(), populated);
            assert!(diff.entries.iter().all(|e| !e.reg.is_base() && e.left.is_none()));
            assert!(diff_layouts(&golden, &golden).is_empty());
        }
    }

    #[test]
    fn profile_mode_mismatch() {
        let latin = builtin_layout("latin").unwrap();
        assert!(matches!(
            validate_profile(&latin, &ValidationProfile::bg_cyrillic()),
            Err(Error::ModeMismatch { .. })
        ));
        assert!(ValidationProfile::by_name("fr-azerty").is_err());
    }

    #[test]
    fn bulgarian_alphabet_has_thirty_letters() {
        assert_eq!(BULGARIAN_LOWER.chars().count(), 30);
        let p = ValidationProfile::bg_cyrillic();
        assert_eq!(
            p.required.iter().map(|g| g.symbols.len()).sum::<usize>(),
            30 + 10 + 2 + 2 + 4
        );
        assert_eq!(p.capitals.len(), 30);
    }
}
