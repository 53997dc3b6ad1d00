//! Placement of third/fourth-register symbols next to their anchors.
//!
//! For each rule the engine looks for a live occurrence of an anchor `Y` on
//! some key `a` and tries, in order:
//!
//! | step | guard                                   | effect              |
//! |------|-----------------------------------------|---------------------|
//! | 4    | `Y = a1` and `a3` free                  | `a3 := X`           |
//! | 5    | `Y = a2` and `a4` free                  | `a4 := X`           |
//! | 6    | `a4` free                               | `a4 := X`           |
//! | 7    | `Y = a4` and `a3` free                  | `a3 := a4, a4 := X` |
//! | 8    | `a3` free                               | `a3 := X`           |
//!
//! A slot is free when it is empty or its occupant also sits in register 1
//! or 2 somewhere (see [`Layout::is_free_slot`]). Rules that find no slot are
//! retried in further passes until a pass places nothing; the result is then
//! finalized so that register 3 and 4 are either both set or both empty.

use std::fmt;

use crate::model::{CodePoint, KeyId, Layout, Register};
use crate::rules::{Rule, RuleList};

/// The clause of the cascade that produced a placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Anchor in register 1, target to register 3.
    BesideFirst,
    /// Anchor in register 2, target to register 4.
    BesideSecond,
    /// Register 4 free.
    FourthFree,
    /// Anchor in register 4: it moves down to register 3, target takes 4.
    ShiftDown,
    /// Register 3 free.
    ThirdFree,
}

impl Step {
    pub fn number(self) -> u8 {
        match self {
            Step::BesideFirst => 4,
            Step::BesideSecond => 5,
            Step::FourthFree => 6,
            Step::ShiftDown => 7,
            Step::ThirdFree => 8,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}", self.number())
    }
}

/// Where a target landed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub key: KeyId,
    /// Register the target was written to; always 3 or 4.
    pub reg: Register,
    pub step: Step,
    pub anchor: CodePoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    PlacedAt(Placement),
    /// No anchor of the rule is present on the keyboard.
    Skipped,
    /// Anchors are present but every occurrence stayed blocked at fixpoint.
    Unplaceable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlacementOutcome {
    /// Index of the rule instance in the input list.
    pub rule: usize,
    pub target: CodePoint,
    pub status: Status,
}

impl fmt::Display for PlacementOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{} {} ", self.rule + 1, self.target)?;
        match self.status {
            Status::PlacedAt(p) => write!(
                f,
                "placed at {} register {} via {} ({})",
                p.key, p.reg, p.anchor, p.step
            ),
            Status::Skipped => f.write_str("skipped (no anchor on the keyboard)"),
            Status::Unplaceable => f.write_str("unplaceable"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlacementReport {
    /// One outcome per rule instance, in the order they were resolved.
    pub outcomes: Vec<PlacementOutcome>,
    /// Number of passes over the pending rules, including the final one.
    pub passes: usize,
}

impl PlacementReport {
    pub fn placements(&self) -> impl Iterator<Item = (CodePoint, Placement)> + '_ {
        self.outcomes.iter().filter_map(|o| match o.status {
            Status::PlacedAt(p) => Some((o.target, p)),
            _ => None,
        })
    }

    pub fn placed(&self) -> usize {
        self.placements().count()
    }

    pub fn skipped(&self) -> usize {
        self.outcomes.iter().filter(|o| o.status == Status::Skipped).count()
    }

    pub fn unplaceable(&self) -> usize {
        self.outcomes.iter().filter(|o| o.status == Status::Unplaceable).count()
    }

    pub fn summary(&self) -> String {
        format!(
            "placed={} skipped={} unplaceable={} passes={}",
            self.placed(),
            self.skipped(),
            self.unplaceable(),
            self.passes
        )
    }
}

/// Runs the cascade for `target` at one occurrence of its anchor. On success
/// the layout is updated; on `None` it is left untouched.
pub fn try_place(layout: &mut Layout, target: CodePoint, at: (KeyId, Register)) -> Option<Placement> {
    let (key, anchor_reg) = at;
    let anchor = layout.get(key, anchor_reg)?;
    let free3 = layout.slot_free(key, Register::R3);
    let free4 = layout.slot_free(key, Register::R4);

    let (reg, step) = if anchor_reg == Register::R1 && free3 {
        (Register::R3, Step::BesideFirst)
    } else if anchor_reg == Register::R2 && free4 {
        (Register::R4, Step::BesideSecond)
    } else if free4 {
        (Register::R4, Step::FourthFree)
    } else if anchor_reg == Register::R4 && free3 {
        let moved = layout.get(key, Register::R4);
        layout.set(key, Register::R3, moved);
        (Register::R4, Step::ShiftDown)
    } else if free3 {
        (Register::R3, Step::ThirdFree)
    } else {
        return None;
    };
    layout.set(key, reg, Some(target));
    Some(Placement { key, reg, step, anchor })
}

enum Attempt {
    Placed(Placement),
    NoAnchor,
    Blocked,
}

fn attempt(layout: &mut Layout, rule: &Rule) -> Attempt {
    let mut any_anchor = false;
    for &anchor in &rule.anchors {
        for at in layout.occurrences_of(anchor) {
            any_anchor = true;
            if let Some(p) = try_place(layout, rule.target, at) {
                return Attempt::Placed(p);
            }
        }
    }
    if any_anchor {
        Attempt::Blocked
    } else {
        Attempt::NoAnchor
    }
}

/// Fills registers 3 and 4 of `base` from `rules` and finalizes the result.
pub fn run_placement(base: &Layout, rules: &RuleList) -> (Layout, PlacementReport) {
    let mut layout = base.clone();
    let mut report = PlacementReport::default();
    let mut pending: Vec<usize> = (0..rules.len()).collect();

    loop {
        report.passes += 1;
        let mut deferred = Vec::new();
        let mut progressed = false;
        for &i in &pending {
            let rule = &rules.rules[i];
            match attempt(&mut layout, rule) {
                Attempt::Placed(p) => {
                    progressed = true;
                    report.outcomes.push(PlacementOutcome {
                        rule: i,
                        target: rule.target,
                        status: Status::PlacedAt(p),
                    });
                }
                Attempt::NoAnchor => deferred.push((i, Status::Skipped)),
                Attempt::Blocked => deferred.push((i, Status::Unplaceable)),
            }
        }
        if deferred.is_empty() || !progressed {
            report
                .outcomes
                .extend(deferred.into_iter().map(|(i, status)| PlacementOutcome {
                    rule: i,
                    target: rules.rules[i].target,
                    status,
                }));
            break;
        }
        pending = deferred.into_iter().map(|(i, _)| i).collect();
    }

    (finalize_registers(&layout), report)
}

/// Duplicates a lone register-4 symbol into register 3, then a lone
/// register-3 symbol into register 4.
///
/// Register 3 is only filled when it is empty. An occupant that merely
/// duplicates a base-register symbol is kept; the reference tables rely on
/// this (e.g. `ы`/`Ы` on the BDS layout's C01 while `ы` also sits on D01).
pub fn finalize_registers(layout: &Layout) -> Layout {
    let mut out = layout.clone();
    for key in KeyId::all() {
        let a = out.key_mut(key);
        if let (None, Some(fourth)) = (a.get(Register::R3), a.get(Register::R4)) {
            a.set(Register::R3, Some(fourth));
        }
    }
    for key in KeyId::all() {
        let a = out.key_mut(key);
        if let (Some(third), None) = (a.get(Register::R3), a.get(Register::R4)) {
            a.set(Register::R4, Some(third));
        }
    }
    out
}
