use kbforge_core::emit::{emit_ascii_diagram, emit_unicode_table, emit_xkb, parse_unicode_table, RegisterPair};
use kbforge_core::{builtin_layout, builtin_layout_text, parse_layout, serialize_layout, BUILTIN_NAMES};

#[test]
fn serialize_then_parse_is_identity() {
    for name in BUILTIN_NAMES {
        let golden = builtin_layout(name).unwrap();
        let text = serialize_layout(&golden);
        assert_eq!(parse_layout(&text).unwrap(), golden, "{name}");
        assert_eq!(serialize_layout(&parse_layout(&text).unwrap()), text, "{name}");
    }
}

#[test]
fn shipped_assets_are_in_canonical_form() {
    for name in BUILTIN_NAMES {
        let text = builtin_layout_text(name).unwrap();
        let canonical = serialize_layout(&builtin_layout(name).unwrap());
        let body = |s: &str| {
            s.lines()
                .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
                .map(str::to_string)
                .collect::<Vec<_>>()
        };
        assert_eq!(body(text), body(&canonical), "{name}");
    }
}

#[test]
fn unicode_table_reimports_to_the_same_layout() {
    for name in BUILTIN_NAMES {
        let golden = builtin_layout(name).unwrap();
        assert_eq!(
            parse_unicode_table(&emit_unicode_table(&golden)).unwrap(),
            golden,
            "{name}"
        );
    }
}

#[test]
fn emitters_are_deterministic() {
    let latin = builtin_layout("latin").unwrap();
    for name in BUILTIN_NAMES {
        let run = || {
            let layout = builtin_layout(name).unwrap();
            let mut out = vec![
                serialize_layout(&layout),
                emit_unicode_table(&layout),
                emit_ascii_diagram(&layout, RegisterPair::Low12),
                emit_ascii_diagram(&layout, RegisterPair::High34),
            ];
            if name != "latin" {
                out.push(emit_xkb(&layout, &latin, ("Bulgarian", "English")).unwrap());
            }
            out.concat().into_bytes()
        };
        assert_eq!(run(), run(), "{name}");
    }
}
