use kbforge_core::{builtin_layout, keysym_for, KeyId, Register, BUILTIN_NAMES};

/// Printed keysym columns of the reference tables, one line per key.
fn printed(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/data/{name}.keysyms", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn every_cell_matches_the_printed_keysym() {
    for name in BUILTIN_NAMES {
        let layout = builtin_layout(name).unwrap();
        let text = printed(name);
        let mut compared = 0;
        let mut mismatches = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(fields.len(), 5, "{name}: {line}");
            let key: KeyId = fields[0].parse().unwrap();
            for (reg, &want) in Register::ALL.iter().zip(&fields[1..]) {
                let got = layout.get(key, *reg).map(|c| keysym_for(c).to_string());
                let want = (want != "-").then(|| want.to_string());
                if got != want {
                    mismatches.push(format!("{key} {reg:?}: {got:?} != {want:?}"));
                }
                compared += 1;
            }
        }
        assert_eq!(compared, 196, "{name}");
        assert!(mismatches.is_empty(), "{name}: {mismatches:#?}");
    }
}

#[test]
fn named_examples() {
    for (v, name) in [
        (0x2116, "numerosign"),
        (0x045D, "U045D"),
        (0x22A5, "downtack"),
        (0x2014, "emdash"),
    ] {
        let cp = kbforge_core::CodePoint::new(v).unwrap();
        assert_eq!(keysym_for(cp), name);
    }
}
