//! Compiler and verification toolkit for extended Bulgarian keyboard layouts.
//!
//! The pipeline is: parse a base layout and an approximation rule file,
//! place the third/fourth-register symbols ([`run_placement`]), then check
//! the result against the shipped reference layouts or emit it as XKB
//! symbols, a Unicode/keysym table or an ASCII diagram.

pub mod emit;
pub mod error;
pub mod golden;
pub mod keysym;
pub mod layout_io;
pub mod model;
pub mod placement;
pub mod rules;
pub mod sim;

pub use error::Error;
pub use golden::{
    builtin_base, builtin_layout, builtin_layout_text, builtin_rules, builtin_rules_text, diff_layouts,
    validate_profile, CellDiff, Finding, LayoutDiff, Scope, SymbolGroup, ValidationProfile, ValidationReport,
    BUILTIN_NAMES,
};
pub use keysym::{codepoint_for_keysym, keysym_for, KeysymName};
pub use layout_io::{parse_layout, serialize_layout};
pub use model::{key_order, CodePoint, KeyAssignment, KeyId, Layout, Mode, Register, Row};
pub use placement::{
    finalize_registers, run_placement, try_place, Placement, PlacementOutcome, PlacementReport, Status, Step,
};
pub use rules::{parse_rules, Rule, RuleList};
pub use sim::{password_guard, GuardVerdict, KeyEvent, PasswordPolicy, SimState};
