//! Output backends: XKB symbols, Unicode/keysym tables and ASCII diagrams.

pub mod diagram;
pub mod table;
pub mod xkb;

pub use diagram::{emit_ascii_diagram, RegisterPair};
pub use table::{emit_unicode_table, parse_unicode_table};
pub use xkb::{emit_xkb, emit_xkb_block};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    XkbSymbols,
    UnicodeTable,
    AsciiDiagram(RegisterPair),
}
