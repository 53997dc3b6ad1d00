//! Inputs shared by the criterion benches.

use kbforge_core::{builtin_base, builtin_rules, Layout, RuleList, BUILTIN_NAMES};

/// `(name, base, rules)` for every shipped layout.
pub fn workloads() -> Vec<(&'static str, Layout, RuleList)> {
    BUILTIN_NAMES
        .iter()
        .map(|&n| {
            (
                n,
                builtin_base(n).expect("builtin base"),
                builtin_rules(n).expect("builtin rules"),
            )
        })
        .collect()
}
