//! Instance-level checks of regularity statements.
//!
//! Every check returns a [`CheckReport`] holding its inputs, the computed
//! quantities and a list of integer relations. The verdict is a function of
//! those relations alone, so a serialized report can be re-judged without
//! redoing any algebra.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::Field;
use crate::ideal::Ideal;

mod checks;
mod construction;
mod families;
mod suite;

pub use checks::*;
pub use construction::*;
pub use families::*;
pub use suite::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The hypotheses of the statement do not hold for this instance.
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

/// Relation between two integers. Truth values are encoded as 0 and 1 for
/// `Implies` and `Iff`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "==")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "=>")]
    Implies,
    #[serde(rename = "<=>")]
    Iff,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Implies => lhs == 0 || rhs != 0,
            Relation::Iff => (lhs != 0) == (rhs != 0),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "==",
            Relation::Ne => "!=",
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Implies => "=>",
            Relation::Iff => "<=>",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub lhs: i64,
    pub rel: Relation,
    pub rhs: i64,
}

impl Assertion {
    pub fn holds(&self) -> bool {
        self.rel.holds(self.lhs, self.rhs)
    }
}

/// A computed quantity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Ints(Vec<i64>),
    Text(String),
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<Vec<i64>> for Value {
    fn from(v: Vec<i64>) -> Self {
        Value::Ints(v)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub seed: Option<u64>,
    pub inputs: BTreeMap<String, String>,
    pub quantities: BTreeMap<String, Value>,
    pub assertions: Vec<Assertion>,
    pub applicable: bool,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl CheckReport {
    /// The verdict implied by `applicable` and the assertions.
    pub fn derive_verdict(&self) -> Verdict {
        if !self.applicable {
            Verdict::Inapplicable
        } else if self.assertions.iter().all(Assertion::holds) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Whether the stored verdict matches [`derive_verdict`](Self::derive_verdict).
    pub fn is_consistent(&self) -> bool {
        self.verdict == self.derive_verdict()
    }

    /// Pass or inapplicable.
    pub fn ok(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn quantity(&self, key: &str) -> Option<&Value> {
        self.quantities.get(key)
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        match self.quantities.get(key)? {
            Value::Int(v) => Some(*v),
            Value::Bool(b) => Some(*b as i64),
            _ => None,
        }
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        match self.quantities.get(key)? {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn failed_assertions(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.holds())
    }
}

/// Incremental construction of a [`CheckReport`].
pub(crate) struct Builder(CheckReport);

impl Builder {
    pub(crate) fn new(check: &str, instance: &str) -> Self {
        Builder(CheckReport {
            check: check.into(),
            instance: instance.into(),
            seed: None,
            inputs: BTreeMap::new(),
            quantities: BTreeMap::new(),
            assertions: Vec::new(),
            applicable: true,
            notes: Vec::new(),
            verdict: Verdict::Pass,
        })
    }

    pub(crate) fn seed(mut self, seed: Option<u64>) -> Self {
        self.0.seed = seed;
        self
    }

    pub(crate) fn input(&mut self, key: &str, value: impl Into<String>) {
        self.0.inputs.insert(key.into(), value.into());
    }

    pub(crate) fn ideal<F: Field>(&mut self, key: &str, ideal: &Ideal<F>) {
        self.input(key, ideal_text(ideal));
    }

    pub(crate) fn q(&mut self, key: &str, value: impl Into<Value>) {
        self.0.quantities.insert(key.into(), value.into());
    }

    pub(crate) fn rel(&mut self, name: &str, lhs: i64, rel: Relation, rhs: i64) {
        self.0.assertions.push(Assertion { name: name.into(), lhs, rel, rhs });
    }

    pub(crate) fn holds(&mut self, name: &str, b: bool) {
        self.rel(name, b as i64, Relation::Eq, 1);
    }

    pub(crate) fn implies(&mut self, name: &str, a: bool, b: bool) {
        self.rel(name, a as i64, Relation::Implies, b as i64);
    }

    pub(crate) fn iff(&mut self, name: &str, a: bool, b: bool) {
        self.rel(name, a as i64, Relation::Iff, b as i64);
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.0.notes.push(note.into());
    }

    pub(crate) fn inapplicable(mut self, reason: &str) -> CheckReport {
        self.0.applicable = false;
        self.0.notes.push(reason.into());
        self.finish()
    }

    pub(crate) fn finish(mut self) -> CheckReport {
        self.0.verdict = self.0.derive_verdict();
        self.0
    }
}

/// A failing report for a check that raised an error.
pub fn error_report(check: &str, instance: &str, seed: Option<u64>, err: &Error) -> CheckReport {
    let mut b = Builder::new(check, instance).seed(seed);
    b.rel("completed without error", 0, Relation::Eq, 1);
    b.note(err.to_string());
    b.finish()
}

/// Generators of an ideal as `[g1, g2, ...]`.
pub fn ideal_text<F: Field>(ideal: &Ideal<F>) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.render()).collect();
    alloc::format!("[{}]", gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_assertions() {
        let mut b = Builder::new("demo", "x");
        b.rel("1 <= 2", 1, Relation::Le, 2);
        b.implies("false => anything", false, false);
        let r = b.finish();
        assert_eq!(r.verdict, Verdict::Pass);
        let mut b = Builder::new("demo", "x");
        b.iff("true <=> false", true, false);
        let r = b.finish();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failed_assertions().count(), 1);
        let r = Builder::new("demo", "x").inapplicable("no");
        assert_eq!(r.verdict, Verdict::Inapplicable);
        assert!(r.is_consistent() && r.ok());
    }

    #[test]
    fn tampered_report_is_inconsistent() {
        let mut b = Builder::new("demo", "x");
        b.rel("reg <= xi", 5, Relation::Le, 4);
        let mut r = b.finish();
        assert_eq!(r.verdict, Verdict::Fail);
        r.verdict = Verdict::Pass;
        assert!(!r.is_consistent());
    }
}
