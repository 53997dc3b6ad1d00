use kbforge_core::{
    builtin_layout, password_guard, GuardVerdict, KeyEvent, KeyId, Mode, PasswordPolicy, Register, SimState,
};

fn state(cyr: &str, mode: Mode) -> SimState {
    SimState::new(builtin_layout(cyr).unwrap(), builtin_layout("latin").unwrap(), mode).unwrap()
}

fn event(key: KeyId, reg: Register) -> KeyEvent {
    KeyEvent {
        key,
        shift: reg == Register::R2 || reg == Register::R4,
        level3: !reg.is_base(),
        capslock: false,
    }
}

#[test]
fn every_modifier_combination_reads_its_table_cell() {
    let mut checks = 0;
    for cyr in ["bds", "phonetic", "phonetic-bds"] {
        for mode in [Mode::Cyrillic, Mode::Latin] {
            let s = state(cyr, mode);
            let table = builtin_layout(if mode == Mode::Cyrillic { cyr } else { "latin" }).unwrap();
            for key in KeyId::all() {
                for reg in Register::ALL {
                    let ev = event(key, reg);
                    assert_eq!(ev.register(), reg);
                    assert_eq!(s.resolve_event(&ev), table.get(key, reg), "{cyr} {mode} {key} {reg:?}");
                    checks += 1;
                }
            }
        }
    }
    assert_eq!(checks, 3 * 2 * 49 * 4);
}

#[test]
fn capslock_on_soft_sign_key_gives_capital() {
    let s = state("bds", Mode::Cyrillic);
    let ev: KeyEvent = "CL+C01".parse().unwrap();
    assert_eq!(s.resolve_event(&ev).map(|c| c.value()), Some(0x042C));
}

#[test]
fn password_guard_verdicts() {
    let cyr = state("bds", Mode::Cyrillic);
    let lat = cyr.set_mode(Mode::Latin);
    let got = (
        password_guard(&cyr, PasswordPolicy::AsciiOnly),
        password_guard(&lat, PasswordPolicy::AsciiOnly),
        password_guard(&lat, PasswordPolicy::AnyScript),
    );
    assert_eq!(
        got,
        (
            GuardVerdict::MustSwitchToLatin,
            GuardVerdict::Ok,
            GuardVerdict::MustIndicateState
        )
    );
}
