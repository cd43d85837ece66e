//! Three-valued verdicts and the per-checker report record.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of a checker. `Unchecked` marks claims whose inputs are unavailable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    Unchecked,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    /// Fail dominates, then pass; all-N/A or all-unchecked stays as is.
    pub fn combine(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::NotApplicable;
        for v in items {
            out = match (out, v) {
                (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
                (Verdict::Pass, _) | (_, Verdict::Pass) => Verdict::Pass,
                (Verdict::Unchecked, _) | (_, Verdict::Unchecked) => Verdict::Unchecked,
                _ => Verdict::NotApplicable,
            };
        }
        out
    }
}

/// Uniform record emitted by every lemma checker.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub params: Value,
    pub holds: bool,
    pub verdict: Verdict,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl LemmaReport {
    pub fn new(lemma: &str, params: Value, verdict: Verdict, witness: Value) -> LemmaReport {
        LemmaReport { lemma: lemma.into(), params, holds: verdict != Verdict::Fail, verdict, witness, reason: None }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> LemmaReport {
        self.reason = Some(reason.into());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_order() {
        use Verdict::*;
        assert_eq!(Verdict::combine([Pass, NotApplicable]), Pass);
        assert_eq!(Verdict::combine([Pass, Fail, Unchecked]), Fail);
        assert_eq!(Verdict::combine([]), NotApplicable);
        assert_eq!(serde_json::to_string(&NotApplicable).unwrap(), "\"not-applicable\"");
    }
}
