//! Approximation rules: `place <target> after <anchor>[, <anchor> …] [# note]`.

use std::fmt;

use crate::error::Error;
use crate::layout_io::content_lines;
use crate::model::CodePoint;

/// A symbol to place in register 3/4 next to the first anchor that admits it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub target: CodePoint,
    /// Candidate anchors, tried in order. Never empty.
    pub anchors: Vec<CodePoint>,
    pub rationale: String,
}

impl Rule {
    pub fn new(target: CodePoint, anchors: Vec<CodePoint>) -> Result<Rule, Error> {
        if anchors.is_empty() {
            return Err(Error::parse(0, "rule has no anchors"));
        }
        if anchors.contains(&target) {
            return Err(Error::parse(0, format!("{target} is listed as its own anchor")));
        }
        Ok(Rule {
            target,
            anchors,
            rationale: String::new(),
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "place {} after ", self.target)?;
        for (i, a) in self.anchors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        if !self.rationale.is_empty() {
            write!(f, " # {}", self.rationale)?;
        }
        Ok(())
    }
}

/// Rules in processing order. Repeats are allowed and each one places again.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleList {
    pub rules: Vec<Rule>,
}

impl RuleList {
    pub fn new(rules: Vec<Rule>) -> Self {
        RuleList { rules }
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rule> {
        self.rules.iter()
    }
}

impl fmt::Display for RuleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

fn parse_rule(line: &str, line_no: usize) -> Result<Rule, Error> {
    let (body, rationale) = match line.split_once('#') {
        Some((b, r)) => (b.trim(), r.trim()),
        None => (line, ""),
    };
    let syntax = || {
        Error::parse(
            line_no,
            format!("expected `place U+XXXX after U+YYYY[, U+ZZZZ ...]`, found `{body}`"),
        )
    };
    let rest = body.strip_prefix("place").ok_or_else(syntax)?;
    let mut tokens = rest.split_whitespace();
    let target = match tokens.next() {
        Some("after") | None => return Err(Error::parse(line_no, "missing target code point")),
        Some(t) => t.parse::<CodePoint>().map_err(|e| e.at_line(line_no))?,
    };
    if tokens.next() != Some("after") {
        return Err(syntax());
    }
    let anchors = tokens
        .flat_map(|t| t.split(','))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<CodePoint>().map_err(|e| e.at_line(line_no)))
        .collect::<Result<Vec<_>, _>>()?;
    if anchors.is_empty() {
        return Err(Error::parse(line_no, "empty anchor list"));
    }
    let mut rule = Rule::new(target, anchors).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(line_no, message),
        other => other,
    })?;
    rule.rationale = rationale.to_string();
    Ok(rule)
}

pub fn parse_rules(text: &str) -> Result<RuleList, Error> {
    content_lines(text)
        .map(|(n, l)| parse_rule(l, n))
        .collect::<Result<Vec<_>, _>>()
        .map(RuleList::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(v: u32) -> CodePoint {
        CodePoint::new(v).unwrap()
    }

    #[test]
    fn single_anchor_with_note() {
        let rules = parse_rules("place U+2011 after U+002D # non-breaking hyphen\n").unwrap();
        assert_eq!(rules.len(), 1);
        let r = &rules.rules[0];
        assert_eq!(r.target, cp(0x2011));
        assert_eq!(r.anchors, vec![cp(0x2D)]);
        assert_eq!(r.rationale, "non-breaking hyphen");
    }

    #[test]
    fn anchor_candidates_keep_order() {
        let rules =
            parse_rules("# header\n\nplace U+21D4 after U+2266, U+003C\nplace U+21D2 after U+2267,U+003E\n").unwrap();
        assert_eq!(rules.rules[0].anchors, vec![cp(0x2266), cp(0x3C)]);
        assert_eq!(rules.rules[1].anchors, vec![cp(0x2267), cp(0x3E)]);
        assert_eq!(rules.rules[0].rationale, "");
    }

    #[test]
    fn duplicates_are_kept() {
        let rules = parse_rules("place U+00A9 after U+0441\nplace U+00A9 after U+0441\n").unwrap();
        assert_eq!(rules.len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("place after U+002D", "missing target"),
            ("place U+2011 after", "empty anchor list"),
            ("place U+2011 after U+2D", "malformed code point"),
            ("put U+2011 after U+002D", "expected"),
            ("place U+2011 near U+002D", "expected"),
            ("place U+2011 after U+2011", "own anchor"),
        ];
        for (line, needle) in cases {
            let text = format!("# comment\n{line}\n");
            match parse_rules(&text) {
                Err(Error::Parse { line: 2, message }) => assert!(message.contains(needle), "{line}: {message}"),
                other => panic!("{line}: {other:?}"),
            }
        }
    }

    #[test]
    fn display_reparses() {
        let text = "place U+21D4 after U+2266, U+003C # fallback\n";
        let rules = parse_rules(text).unwrap();
        assert_eq!(rules.to_string(), text);
    }
}
