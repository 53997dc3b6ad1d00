//! Symbol, key-position, register and layout data model.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A Unicode scalar value. Written `U+XXXX` with 4 to 6 uppercase hex digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodePoint(char);

impl CodePoint {
    pub fn new(value: u32) -> Result<Self, Error> {
        char::from_u32(value)
            .map(CodePoint)
            .ok_or(Error::InvalidCodePoint(value))
    }

    pub const fn from_char(c: char) -> Self {
        CodePoint(c)
    }

    pub const fn value(self) -> u32 {
        self.0 as u32
    }

    pub const fn as_char(self) -> char {
        self.0
    }

    /// Parses the `U+XXXX` notation. Lowercase hex and short forms are rejected.
    pub fn parse_notation(s: &str) -> Option<Self> {
        let hex = s.strip_prefix("U+")?;
        parse_upper_hex(hex).and_then(|v| CodePoint::new(v).ok())
    }
}

/// Parses 4 to 6 uppercase hex digits.
pub(crate) fn parse_upper_hex(hex: &str) -> Option<u32> {
    if !(4..=6).contains(&hex.len()) || !hex.bytes().all(|b| b.is_ascii_digit() || (b'A'..=b'F').contains(&b)) {
        return None;
    }
    u32::from_str_radix(hex, 16).ok()
}

impl From<char> for CodePoint {
    fn from(c: char) -> Self {
        CodePoint(c)
    }
}

impl fmt::Display for CodePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U+{:04X}", self.value())
    }
}

impl FromStr for CodePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CodePoint::parse_notation(s).ok_or_else(|| Error::MalformedCodePoint(s.to_string()))
    }
}

/// Letter rows of the alphanumeric block, top to bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    E,
    D,
    C,
    B,
}

impl Row {
    pub const ALL: [Row; 4] = [Row::E, Row::D, Row::C, Row::B];

    fn first_index(self) -> u8 {
        match self {
            Row::E | Row::B => 0,
            Row::D | Row::C => 1,
        }
    }

    fn last_index(self) -> u8 {
        match self {
            Row::B => 10,
            _ => 12,
        }
    }

    fn offset(self) -> u8 {
        match self {
            Row::E => 0,
            Row::D => 13,
            Row::C => 25,
            Row::B => 37,
        }
    }

    fn letter(self) -> char {
        match self {
            Row::E => 'E',
            Row::D => 'D',
            Row::C => 'C',
            Row::B => 'B',
        }
    }

    /// Keys of this row in canonical order.
    pub fn keys(self) -> impl Iterator<Item = KeyId> {
        (self.first_index()..=self.last_index()).map(move |i| KeyId(self.offset() + i - self.first_index()))
    }
}

/// One of the 49 ISO 9995 key positions. The derived ordering is the
/// canonical scan order `E00 < … < E12 < D01 < … < B10 < SPACE`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KeyId(u8);

impl KeyId {
    pub const COUNT: usize = 49;
    pub const SPACE: KeyId = KeyId(48);
    /// C12, the XKB `<BKSL>` key.
    pub const BKSL: KeyId = KeyId(36);
    /// The extra key between left Shift and `Z`, `<LSGT>`.
    pub const LSGT: KeyId = KeyId(37);

    pub fn new(row: Row, index: u8) -> Option<KeyId> {
        (row.first_index()..=row.last_index())
            .contains(&index)
            .then(|| KeyId(row.offset() + index - row.first_index()))
    }

    /// Position of the key in canonical order, `0..49`.
    pub fn ordinal(self) -> usize {
        self.0 as usize
    }

    pub fn from_ordinal(ordinal: usize) -> Option<KeyId> {
        (ordinal < Self::COUNT).then_some(KeyId(ordinal as u8))
    }

    pub fn row(self) -> Option<Row> {
        Row::ALL
            .into_iter()
            .rev()
            .find(|r| self != Self::SPACE && self.0 >= r.offset())
    }

    /// Index within the row (`E00` → 0, `D01` → 1). `None` for the space bar.
    pub fn index(self) -> Option<u8> {
        self.row().map(|r| self.0 - r.offset() + r.first_index())
    }

    pub fn all() -> impl Iterator<Item = KeyId> + Clone {
        (0..Self::COUNT as u8).map(KeyId)
    }

    pub fn name(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for KeyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.row(), self.index()) {
            (Some(row), Some(index)) => write!(f, "{}{:02}", row.letter(), index),
            _ => f.write_str("SPACE"),
        }
    }
}

impl fmt::Debug for KeyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for KeyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || Error::UnknownKeyId(s.to_string());
        if s == "SPACE" {
            return Ok(KeyId::SPACE);
        }
        let mut chars = s.chars();
        let row = match chars.next() {
            Some('E') => Row::E,
            Some('D') => Row::D,
            Some('C') => Row::C,
            Some('B') => Row::B,
            _ => return Err(unknown()),
        };
        let digits = chars.as_str();
        if digits.len() != 2 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let index: u8 = digits.parse().map_err(|_| unknown())?;
        KeyId::new(row, index).ok_or_else(unknown)
    }
}

/// The 49 keys in canonical order.
pub fn key_order() -> Vec<KeyId> {
    KeyId::all().collect()
}

/// Symbol slot on a key: 1 plain, 2 Shift, 3 third level, 4 third level + Shift.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Register(u8);

impl Register {
    pub const R1: Register = Register(1);
    pub const R2: Register = Register(2);
    pub const R3: Register = Register(3);
    pub const R4: Register = Register(4);
    pub const ALL: [Register; 4] = [Self::R1, Self::R2, Self::R3, Self::R4];

    pub fn new(value: u8) -> Option<Register> {
        (1..=4).contains(&value).then_some(Register(value))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    fn slot(self) -> usize {
        self.0 as usize - 1
    }

    /// Registers 1 and 2 are the ones printed on the keycaps.
    pub fn is_base(self) -> bool {
        self.0 <= 2
    }
}

impl fmt::Debug for Register {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.0)
    }
}

impl fmt::Display for Register {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Cyrillic,
    Latin,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Cyrillic => "cyrillic",
            Mode::Latin => "latin",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cyrillic" => Ok(Mode::Cyrillic),
            "latin" => Ok(Mode::Latin),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

/// The four optional symbols of one key.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct KeyAssignment {
    regs: [Option<CodePoint>; 4],
}

impl KeyAssignment {
    pub const EMPTY: KeyAssignment = KeyAssignment { regs: [None; 4] };

    pub fn new(regs: [Option<CodePoint>; 4]) -> Self {
        KeyAssignment { regs }
    }

    pub fn get(&self, reg: Register) -> Option<CodePoint> {
        self.regs[reg.slot()]
    }

    pub fn set(&mut self, reg: Register, cp: Option<CodePoint>) {
        self.regs[reg.slot()] = cp;
    }

    pub fn registers(&self) -> [Option<CodePoint>; 4] {
        self.regs
    }
}

/// A named, mode-tagged assignment for all 49 keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layout {
    name: String,
    mode: Mode,
    keys: [KeyAssignment; KeyId::COUNT],
}

impl Layout {
    /// A layout with every register of every key empty.
    pub fn empty(name: impl Into<String>, mode: Mode) -> Self {
        Layout {
            name: name.into(),
            mode,
            keys: [KeyAssignment::EMPTY; KeyId::COUNT],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn key(&self, key: KeyId) -> &KeyAssignment {
        &self.keys[key.ordinal()]
    }

    pub fn key_mut(&mut self, key: KeyId) -> &mut KeyAssignment {
        &mut self.keys[key.ordinal()]
    }

    pub fn get(&self, key: KeyId, reg: Register) -> Option<CodePoint> {
        self.key(key).get(reg)
    }

    pub fn set(&mut self, key: KeyId, reg: Register, cp: Option<CodePoint>) {
        self.key_mut(key).set(reg, cp);
    }

    /// Iterates `(key, register, occupant)` over every slot in canonical order.
    pub fn cells(&self) -> impl Iterator<Item = (KeyId, Register, Option<CodePoint>)> + '_ {
        KeyId::all().flat_map(move |k| Register::ALL.into_iter().map(move |r| (k, r, self.get(k, r))))
    }

    /// All slots holding `cp`, by canonical key order then register.
    pub fn occurrences_of(&self, cp: CodePoint) -> Vec<(KeyId, Register)> {
        self.cells()
            .filter(|&(_, _, c)| c == Some(cp))
            .map(|(k, r, _)| (k, r))
            .collect()
    }

    /// Whether `cp` sits in register 1 or 2 of any key.
    pub fn in_base_registers(&self, cp: CodePoint) -> bool {
        self.keys
            .iter()
            .any(|a| a.get(Register::R1) == Some(cp) || a.get(Register::R2) == Some(cp))
    }

    /// A register-3/4 slot is free when it is empty, or when its occupant is
    /// also reachable from register 1 or 2 somewhere on the keyboard.
    pub fn is_free_slot(&self, key: KeyId, reg: Register) -> Result<bool, Error> {
        if reg.is_base() {
            return Err(Error::BaseRegister(reg.get()));
        }
        Ok(self.slot_free(key, reg))
    }

    pub(crate) fn slot_free(&self, key: KeyId, reg: Register) -> bool {
        match self.get(key, reg) {
            None => true,
            Some(cp) => self.in_base_registers(cp),
        }
    }

    /// Returns a copy with registers 3 and 4 emptied on every key.
    pub fn base_only(&self) -> Layout {
        let mut out = self.clone();
        for a in out.keys.iter_mut() {
            a.set(Register::R3, None);
            a.set(Register::R4, None);
        }
        out
    }
}
