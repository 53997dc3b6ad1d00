//! Key event resolution under the register semantics.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::model::{CodePoint, KeyId, Layout, Mode, Register};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyEvent {
    pub key: KeyId,
    pub shift: bool,
    pub level3: bool,
    pub capslock: bool,
}

impl KeyEvent {
    pub fn plain(key: KeyId) -> Self {
        KeyEvent {
            key,
            shift: false,
            level3: false,
            capslock: false,
        }
    }

    pub fn register(&self) -> Register {
        match (self.shift, self.level3) {
            (false, false) => Register::R1,
            (true, false) => Register::R2,
            (false, true) => Register::R3,
            (true, true) => Register::R4,
        }
    }
}

/// Token syntax: `[S+][L3+][CL+]<KEYID>`, e.g. `S+D03`, `L3+E08`, `CL+C01`.
impl FromStr for KeyEvent {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let mut ev = KeyEvent::plain(KeyId::SPACE);
        let mut rest = token;
        loop {
            if let Some(r) = rest.strip_prefix("S+") {
                ev.shift = true;
                rest = r;
            } else if let Some(r) = rest.strip_prefix("L3+") {
                ev.level3 = true;
                rest = r;
            } else if let Some(r) = rest.strip_prefix("CL+") {
                ev.capslock = true;
                rest = r;
            } else {
                break;
            }
        }
        ev.key = rest.parse().map_err(|_| Error::BadEvent(token.to_string()))?;
        Ok(ev)
    }
}

impl fmt::Display for KeyEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift {
            f.write_str("S+")?;
        }
        if self.level3 {
            f.write_str("L3+")?;
        }
        if self.capslock {
            f.write_str("CL+")?;
        }
        write!(f, "{}", self.key)
    }
}

/// Parses whitespace-separated event tokens.
pub fn parse_events(text: &str) -> Result<Vec<KeyEvent>, Error> {
    text.split_whitespace().map(str::parse).collect()
}

/// Simple case toggle for cased letters; everything else is returned as is.
fn toggle_case(c: char) -> char {
    fn single(mut it: impl Iterator<Item = char>) -> Option<char> {
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }
    let mapped = if c.is_lowercase() {
        single(c.to_uppercase())
    } else if c.is_uppercase() {
        single(c.to_lowercase())
    } else {
        None
    };
    mapped.unwrap_or(c)
}

/// Keyboard state: the active layouts, the script mode and the CapsLock latch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimState {
    cyr: Layout,
    lat: Layout,
    mode: Mode,
    capslock: bool,
}

impl SimState {
    pub fn new(cyr: Layout, lat: Layout, mode: Mode) -> Result<Self, Error> {
        for (layout, expected) in [(&cyr, Mode::Cyrillic), (&lat, Mode::Latin)] {
            if layout.mode() != expected {
                return Err(Error::ModeMismatch {
                    layout: layout.name().to_string(),
                    expected,
                    found: layout.mode(),
                });
            }
        }
        Ok(SimState {
            cyr,
            lat,
            mode,
            capslock: false,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn capslock(&self) -> bool {
        self.capslock
    }

    pub fn active_layout(&self) -> &Layout {
        match self.mode {
            Mode::Cyrillic => &self.cyr,
            Mode::Latin => &self.lat,
        }
    }

    pub fn set_mode(&self, mode: Mode) -> SimState {
        SimState { mode, ..self.clone() }
    }

    pub fn set_capslock(&self, on: bool) -> SimState {
        SimState {
            capslock: on,
            ..self.clone()
        }
    }

    /// Symbol produced by `ev`, if its register is defined. CapsLock (latched
    /// in the state or carried by the event) toggles the case of letters in
    /// registers 1 and 2 only.
    pub fn resolve_event(&self, ev: &KeyEvent) -> Option<CodePoint> {
        let reg = ev.register();
        let cp = self.active_layout().get(ev.key, reg)?;
        if reg.is_base() && (ev.capslock || self.capslock) {
            Some(toggle_case(cp.as_char()).into())
        } else {
            Some(cp)
        }
    }

    pub fn type_sequence(&self, events: &[KeyEvent]) -> String {
        events
            .iter()
            .filter_map(|ev| self.resolve_event(ev))
            .map(CodePoint::as_char)
            .collect()
    }

    /// The state line a front end should surface to the user.
    pub fn indicator(&self) -> String {
        format!(
            "mode={} capslock={}",
            self.mode,
            if self.capslock { "on" } else { "off" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PasswordPolicy {
    AsciiOnly,
    AnyScript,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuardVerdict {
    Ok,
    MustSwitchToLatin,
    /// Any script is accepted, so the user has to see which layout and mode
    /// are active before typing blind.
    MustIndicateState,
}

pub fn password_guard(state: &SimState, policy: PasswordPolicy) -> GuardVerdict {
    match (policy, state.mode()) {
        (PasswordPolicy::AsciiOnly, Mode::Cyrillic) => GuardVerdict::MustSwitchToLatin,
        (PasswordPolicy::AsciiOnly, Mode::Latin) => GuardVerdict::Ok,
        (PasswordPolicy::AnyScript, _) => GuardVerdict::MustIndicateState,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::builtin_layout;

    fn state(cyr: &str, mode: Mode) -> SimState {
        SimState::new(builtin_layout(cyr).unwrap(), builtin_layout("latin").unwrap(), mode).unwrap()
    }

    fn ev(token: &str) -> KeyEvent {
        token.parse().unwrap()
    }

    fn resolve(s: &SimState, token: &str) -> Option<char> {
        s.resolve_event(&ev(token)).map(CodePoint::as_char)
    }

    #[test]
    fn registers_by_modifier() {
        let s = state("bds", Mode::Cyrillic);
        assert_eq!(resolve(&s, "D03"), Some('е'));
        assert_eq!(resolve(&s, "S+L3+E08"), Some('\u{301}'));
        assert_eq!(resolve(&s, "L3+E08"), Some('\u{300}'));
        assert_eq!(resolve(&s, "L3+E01"), None);
    }

    #[test]
    fn capslock() {
        let s = state("bds", Mode::Cyrillic);
        assert_eq!(resolve(&s, "CL+C01"), Some('Ь'));
        assert_eq!(resolve(&s, "S+CL+C01"), Some('Ѝ'));
        assert_eq!(resolve(&s, "CL+E01"), Some('1'));
        assert_eq!(resolve(&s, "CL+L3+D03"), Some('э'));
        assert_eq!(
            s.set_capslock(true).resolve_event(&ev("C01")).map(CodePoint::as_char),
            Some('Ь')
        );
        assert_eq!(toggle_case('ß'), 'ß');
        assert_eq!(toggle_case('Ѝ'), 'ѝ');
    }

    #[test]
    fn sequences() {
        let s = state("bds", Mode::Cyrillic);
        assert_eq!(s.type_sequence(&parse_events("S+D09 D03 D10").unwrap()), "Дез");
        assert_eq!(s.type_sequence(&[]), "");
        let p = state("phonetic", Mode::Cyrillic);
        assert_eq!(p.type_sequence(&parse_events("S+B08 C01 S+B09").unwrap()), "„а“");
    }

    #[test]
    fn mode_switching() {
        let s = state("bds", Mode::Cyrillic);
        let l = s.set_mode(Mode::Latin);
        assert_eq!(l.mode(), Mode::Latin);
        assert_eq!(l.set_mode(Mode::Latin), l);
        assert_eq!(resolve(&l, "D03"), Some('e'));
        assert_eq!(l.indicator(), "mode=latin capslock=off");
    }

    #[test]
    fn event_tokens() {
        let e = ev("S+L3+CL+E08");
        assert!(e.shift && e.level3 && e.capslock);
        assert_eq!(e.to_string(), "S+L3+CL+E08");
        assert!("Z+E01".parse::<KeyEvent>().is_err());
        assert!("S+".parse::<KeyEvent>().is_err());
        assert!(parse_events("D03 X99").is_err());
    }

    #[test]
    fn password_verdicts() {
        let cyr = state("bds", Mode::Cyrillic);
        let lat = cyr.set_mode(Mode::Latin);
        assert_eq!(
            password_guard(&cyr, PasswordPolicy::AsciiOnly),
            GuardVerdict::MustSwitchToLatin
        );
        assert_eq!(password_guard(&lat, PasswordPolicy::AsciiOnly), GuardVerdict::Ok);
        assert_eq!(
            password_guard(&lat, PasswordPolicy::AnyScript),
            GuardVerdict::MustIndicateState
        );
    }

    #[test]
    fn rejects_swapped_layouts() {
        let bds = builtin_layout("bds").unwrap();
        let latin = builtin_layout("latin").unwrap();
        assert!(SimState::new(latin, bds, Mode::Latin).is_err());
    }
}
