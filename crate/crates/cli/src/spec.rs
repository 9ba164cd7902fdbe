//! Curve-spec documents: a JSON description of a curve as a union of
//! constructed components.
//!
//! ```json
//! {"field": {"prime": 32003}, "ambient": 4, "components": [{"named": {"no_secant": 4}}]}
//! ```

use std::fmt;
use std::str::FromStr;

use curvereg::curves::{
    no_secant_curve, line_component, plane_curve_component, random_connected_curve, rational_normal_curve, tree, twisted_config, Budget, Curve,
    TreeSpec,
};
use curvereg::field::is_prime;
use curvereg::geometry::LinearSubspace;
use curvereg::monomial::MAX_VARS;
use curvereg::{Field, Ring};
use serde::{Deserialize, Serialize};

/// A prime modulus, checked for primality while parsing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Prime {
    type Error = String;

    fn try_from(p: u64) -> Result<Self, String> {
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        if p >= 1 << 31 {
            return Err(format!("prime {p} too large (must be < 2^31)"));
        }
        Ok(Prime(p))
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Prime(Prime),
    Rational,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(Prime(curvereg::field::DEFAULT_PRIME as u64))
    }
}

impl FromStr for FieldSpec {
    type Err = String;

    /// `rational`, `QQ`, or a prime number.
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "rational" | "QQ" => Ok(FieldSpec::Rational),
            t => {
                let p: u64 = t.parse().map_err(|_| format!("expected a prime or \"rational\", got {t:?}"))?;
                Ok(FieldSpec::Prime(Prime::try_from(p)?))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{}", p.0),
            FieldSpec::Rational => f.write_str("QQ"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneCurveSpec {
    /// Linear forms cutting out the plane.
    pub subspace: Vec<String>,
    pub form: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRnc {
    degree: usize,
    rows: Vec<Vec<i64>>,
}

/// A rational normal curve: `rows[i]` holds the coefficients of `x_i` in
/// `s^d, s^{d-1} t, ..., t^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRnc")]
pub struct RncSpec {
    pub degree: usize,
    pub rows: Vec<Vec<i64>>,
}

impl TryFrom<RawRnc> for RncSpec {
    type Error = String;

    fn try_from(r: RawRnc) -> Result<Self, String> {
        if r.degree == 0 {
            return Err("rnc degree must be at least 1".into());
        }
        if let Some((i, row)) = r.rows.iter().enumerate().find(|(_, row)| row.len() != r.degree + 1) {
            return Err(format!("rnc row {i} has {} entries, expected degree + 1 = {}", row.len(), r.degree + 1));
        }
        Ok(RncSpec { degree: r.degree, rows: r.rows })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSpec {
    pub seed: u64,
    pub budget: Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedSpec {
    /// The degree `m + 2` curve in `P^4` with regularity `m` and no `m`-secant line.
    NoSecant(usize),
    TwistedConfig,
    Tree(TreeSpec),
    Random(RandomSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentSpec {
    /// A line cut out by linear forms.
    Linear(Vec<String>),
    PlaneCurve(PlaneCurveSpec),
    Rnc(RncSpec),
    Named(NamedSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpecDocument {
    pub field: FieldSpec,
    /// `n` for `P^n`.
    pub ambient: usize,
    pub components: Vec<ComponentSpec>,
}

/// A spec error with the line and column of the offending value when the
/// JSON reader knows it, and otherwise the path of the component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub path: Option<String>,
    pub message: String,
}

impl SpecError {
    fn at(path: String, message: impl Into<String>) -> Self {
        SpecError { line: None, column: None, path: Some(path), message: message.into() }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, "line {l}, column {c}: ")?;
        }
        if let Some(p) = &self.path {
            write!(f, "{p}: ")?;
        }
        f.write_str(&self.message)
    }
}

impl std::error::Error for SpecError {}

impl From<serde_json::Error> for SpecError {
    fn from(e: serde_json::Error) -> Self {
        let full = e.to_string();
        // serde_json appends " at line L column C"
        let message = match full.rfind(" at line ") {
            Some(i) if e.line() > 0 => full[..i].to_string(),
            _ => full,
        };
        let known = e.line() > 0;
        SpecError { line: known.then(|| e.line()), column: known.then(|| e.column()), path: None, message }
    }
}

/// Parses and validates a document. Validation covers everything that does
/// not need the field: ambient dimension, row counts and construction
/// ambients.
pub fn parse_spec(text: &str) -> Result<CurveSpecDocument, SpecError> {
    let doc: CurveSpecDocument = serde_json::from_str(text)?;
    doc.validate()?;
    Ok(doc)
}

impl CurveSpecDocument {
    pub fn validate(&self) -> Result<(), SpecError> {
        let n = self.ambient;
        if n == 0 || n + 1 > MAX_VARS {
            return Err(SpecError::at("ambient".into(), format!("ambient must be between 1 and {}, got {n}", MAX_VARS - 1)));
        }
        if self.components.is_empty() {
            return Err(SpecError::at("components".into(), "a curve needs at least one component"));
        }
        for (i, c) in self.components.iter().enumerate() {
            let path = format!("components[{i}]");
            match c {
                ComponentSpec::Linear(forms) if forms.len() + 2 > n + 1 => {
                    return Err(SpecError::at(path, format!("{} forms cannot cut out a line in P^{n}", forms.len())));
                }
                ComponentSpec::Rnc(r) if r.rows.len() != n + 1 => {
                    return Err(SpecError::at(path, format!("rnc needs one row per coordinate: expected {} rows for P^{n}, got {}", n + 1, r.rows.len())));
                }
                ComponentSpec::Named(NamedSpec::NoSecant(m)) => {
                    if *m < 4 {
                        return Err(SpecError::at(path, format!("no_secant needs m >= 4, got {m}")));
                    }
                    if n != 4 {
                        return Err(SpecError::at(path, format!("no_secant lives in P^4, but ambient is {n}")));
                    }
                }
                ComponentSpec::Named(NamedSpec::TwistedConfig) if n != 4 => {
                    return Err(SpecError::at(path, format!("twisted_config lives in P^4, but ambient is {n}")));
                }
                ComponentSpec::Named(NamedSpec::Tree(t)) if t.total_degree() > n => {
                    return Err(SpecError::at(path, format!("tree of total degree {} does not fit in P^{n}", t.total_degree())));
                }
                ComponentSpec::Named(NamedSpec::Random(r)) if r.budget.max_ambient > n => {
                    return Err(SpecError::at(path, format!("budget max_ambient {} exceeds ambient {n}", r.budget.max_ambient)));
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec documents always serialize")
    }

    /// Builds the curve over `field`, which may differ from the document's
    /// own field.
    pub fn build<F: Field>(&self, field: F) -> Result<Curve<F>, SpecError> {
        let ring = Ring::projective(field.clone(), self.ambient).map_err(|e| SpecError::at("ambient".into(), e.to_string()))?;
        let mut parts = Vec::with_capacity(self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            let path = format!("components[{i}]");
            let curve = build_component(&ring, c, &path)?;
            if curve.ring() != &ring {
                return Err(SpecError::at(path, format!("constructed curve lives in P^{}, but ambient is {}", curve.ring().nvars() - 1, self.ambient)));
            }
            parts.push(curve);
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        let refs: Vec<&Curve<F>> = parts.iter().collect();
        curvereg::curves::curve_union(&refs).map_err(|e| SpecError::at("components".into(), e.to_string()))
    }
}

fn parse_forms<F: Field>(ring: &Ring<F>, forms: &[String], path: &str) -> Result<Vec<curvereg::Polynomial<F>>, SpecError> {
    forms.iter().enumerate().map(|(k, s)| ring.parse(s).map_err(|e| SpecError::at(format!("{path}[{k}]"), e.to_string()))).collect()
}

fn build_component<F: Field>(ring: &Ring<F>, c: &ComponentSpec, path: &str) -> Result<Curve<F>, SpecError> {
    let f = ring.field().clone();
    let err = |sub: &str, e: curvereg::Error| SpecError::at(format!("{path}{sub}"), e.to_string());
    match c {
        ComponentSpec::Linear(forms) => {
            let p = format!("{path}.linear");
            let forms = parse_forms(ring, forms, &p)?;
            let sub = LinearSubspace::from_forms(ring, &forms).map_err(|e| err(".linear", e))?;
            if sub.dim() != 1 {
                return Err(SpecError::at(p, format!("forms cut out a subspace of dimension {}, not a line", sub.dim())));
            }
            let pts = sub.points();
            let comp = line_component(ring, &pts[0], &pts[1]).map_err(|e| err(".linear", e))?;
            Curve::from_components(ring, vec![comp]).map_err(|e| err(".linear", e))
        }
        ComponentSpec::PlaneCurve(pc) => {
            let p = format!("{path}.plane_curve");
            let forms = parse_forms(ring, &pc.subspace, &format!("{p}.subspace"))?;
            let form = ring.parse(&pc.form).map_err(|e| SpecError::at(format!("{p}.form"), e.to_string()))?;
            let plane = LinearSubspace::from_forms(ring, &forms).map_err(|e| err(".plane_curve.subspace", e))?;
            let comp = plane_curve_component(&plane, &form).map_err(|e| err(".plane_curve", e))?;
            Curve::from_components(ring, vec![comp]).map_err(|e| err(".plane_curve", e))
        }
        ComponentSpec::Rnc(r) => {
            let rows: Vec<Vec<F::Elem>> = r.rows.iter().map(|row| row.iter().map(|&x| f.from_i64(x)).collect()).collect();
            rational_normal_curve(ring, r.degree, &rows).map_err(|e| err(".rnc", e))
        }
        ComponentSpec::Named(NamedSpec::NoSecant(m)) => no_secant_curve(f, *m).map(|g| g.curve).map_err(|e| err(".named.no_secant", e)),
        ComponentSpec::Named(NamedSpec::TwistedConfig) => twisted_config(f).map(|t| t.curve).map_err(|e| err(".named.twisted_config", e)),
        ComponentSpec::Named(NamedSpec::Tree(t)) => tree(ring, t).map_err(|e| err(".named.tree", e)),
        ComponentSpec::Named(NamedSpec::Random(r)) => random_connected_curve(f, r.seed, r.budget).map(|c| c.curve).map_err(|e| err(".named.random", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use curvereg::PrimeField;

    #[test]
    fn no_secant_document_parses_and_builds() {
        let doc = parse_spec(r#"{"field":{"prime":32003},"ambient":4,"components":[{"named":{"no_secant":4}}]}"#).unwrap();
        assert_eq!(doc.field, FieldSpec::Prime(Prime(32003)));
        let c = doc.build(PrimeField::default()).unwrap();
        assert_eq!(c.degree().unwrap(), 6);
    }

    #[test]
    fn composite_prime_is_rejected_with_position() {
        let e = parse_spec(r#"{"field":{"prime":32004},"ambient":4,"components":[]}"#).unwrap_err();
        assert!(e.message.contains("not prime"), "{e}");
        assert_eq!(e.line, Some(1));
    }

    #[test]
    fn unknown_key_is_rejected() {
        let e = parse_spec("{\"field\":\"rational\",\n \"ambient\":3,\n \"colour\":1,\"components\":[]}").unwrap_err();
        assert!(e.message.contains("unknown field"), "{e}");
        assert_eq!(e.line, Some(3));
    }

    #[test]
    fn short_rnc_row_is_positioned() {
        let text = "{\"field\":\"rational\",\"ambient\":3,\"components\":[\n{\"rnc\":{\"degree\":3,\"rows\":[[1,0,0,0],[0,1,0],[0,0,1,0],[0,0,0,1]]}}]}";
        let e = parse_spec(text).unwrap_err();
        assert!(e.message.contains("row 1 has 3 entries"), "{e}");
        assert_eq!(e.line, Some(2));
    }

    #[test]
    fn rnc_row_count_must_match_ambient() {
        let text = r#"{"field":"rational","ambient":4,"components":[{"rnc":{"degree":1,"rows":[[1,0],[0,1]]}}]}"#;
        let e = parse_spec(text).unwrap_err();
        assert_eq!(e.path.as_deref(), Some("components[0]"));
    }

    #[test]
    fn named_ambient_is_checked() {
        let e = parse_spec(r#"{"field":"rational","ambient":3,"components":[{"named":"twisted_config"}]}"#).unwrap_err();
        assert!(e.message.contains("P^4"), "{e}");
    }

    #[test]
    fn field_flag_syntax() {
        assert_eq!("rational".parse::<FieldSpec>(), Ok(FieldSpec::Rational));
        assert_eq!("101".parse::<FieldSpec>(), Ok(FieldSpec::Prime(Prime(101))));
        assert!("100".parse::<FieldSpec>().unwrap_err().contains("not prime"));
    }

    #[test]
    fn two_lines_union() {
        let doc = parse_spec(r#"{"field":{"prime":101},"ambient":3,"components":[{"linear":["x2","x3"]},{"linear":["x1","x3"]}]}"#).unwrap();
        let c = doc.build(PrimeField::new(101).unwrap()).unwrap();
        assert_eq!(c.components().len(), 2);
        assert!(c.is_connected());
    }
}
