use serde_json::{Map, Value};

use crate::symfunc::SymFunc;

/// Outcome of checking one identity instance. Both sides are kept in full.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub claim: &'static str,
    pub params: Value,
    pub holds: bool,
    pub lhs: SymFunc,
    pub rhs: SymFunc,
    /// Extra per-claim fields, emitted after `rhs`.
    pub notes: Map<String, Value>,
}

impl Report {
    pub fn new(claim: &'static str, params: Value, lhs: SymFunc, rhs: SymFunc) -> Self {
        Self {
            claim,
            params,
            holds: lhs == rhs,
            lhs,
            rhs,
            notes: Map::new(),
        }
    }

    pub fn with_note(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.notes.insert(key.to_owned(), value.into());
        self
    }

    /// Records a secondary condition; the report holds only if it does too.
    pub fn require(mut self, key: &str, ok: bool) -> Self {
        self.holds &= ok;
        self.with_note(key, ok)
    }

    /// `{"claim":…,"params":{…},"holds":…,"lhs":…,"rhs":…}`
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("claim".into(), Value::from(self.claim));
        obj.insert("params".into(), self.params.clone());
        obj.insert("holds".into(), Value::from(self.holds));
        obj.insert("lhs".into(), self.lhs.to_json());
        obj.insert("rhs".into(), self.rhs.to_json());
        for (k, v) in &self.notes {
            obj.insert(k.clone(), v.clone());
        }
        Value::Object(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::Basis;
    use serde_json::json;

    #[test]
    fn json_layout() {
        let one = SymFunc::one(Basis::Schur);
        let r = Report::new("thm-two-headed", json!({"m1": 1}), one.clone(), one).with_note("positive", true);
        assert_eq!(
            r.to_json().to_string(),
            r#"{"claim":"thm-two-headed","params":{"m1":1},"holds":true,"lhs":{"degree":0,"basis":"schur","coeffs":{"":{"0":1}}},"rhs":{"degree":0,"basis":"schur","coeffs":{"":{"0":1}}},"positive":true}"#
        );
    }

    #[test]
    fn require_gates_holds() {
        let one = SymFunc::one(Basis::Schur);
        let r = Report::new("x", Value::Null, one.clone(), one).require("side", false);
        assert!(!r.holds);
    }
}
