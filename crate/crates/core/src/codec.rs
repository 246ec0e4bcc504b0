//! JSON encoding.
//!
//! An element is `{"n": N, "terms": {"<blade key>": "<rational>"}}` with blade
//! keys the comma-joined generator indices (`""` for the unit) and rationals
//! written `p/q` or `p`. Output keys are sorted and zero terms never appear.
//! A supermatrix is `{"n": N, "a": E, "alpha": E, "beta": E, "b": E}`.
//!
//! On input a matrix entry may also be a bare rational string or integer,
//! read as a constant of the matrix's algebra.

use crate::error::AlgebraError;
use crate::grassmann::{Blade, GrassmannElement, Rational};
use crate::reduced::Reduced;
use crate::semigroups::{BandElement, BandParams};
use crate::supermatrix::{Mat2, OddMatrix, SuperMatrix};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::str::FromStr;

pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    Rational::from_str(s.trim()).map_err(|_| AlgebraError::BadCoefficient(s.to_string()))
}

impl Serialize for GrassmannElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: BTreeMap<String, String> =
            self.terms().map(|(b, q)| (b.key(), q.to_string())).collect();
        let mut st = serializer.serialize_struct("GrassmannElement", 2)?;
        st.serialize_field("n", &self.num_generators())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Wire form of an element before its algebra is known.
#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum ElementRepr {
    Integer(i64),
    Scalar(String),
    Full {
        n: Option<usize>,
        terms: BTreeMap<String, String>,
    },
}

impl ElementRepr {
    /// Builds the element; `context` is the generator count of the enclosing
    /// matrix, if any.
    pub fn resolve(self, context: Option<usize>) -> Result<GrassmannElement, String> {
        match self {
            ElementRepr::Integer(k) => context
                .map(|n| GrassmannElement::int(n, k))
                .ok_or_else(|| "a bare constant needs an enclosing generator count".into()),
            ElementRepr::Scalar(s) => {
                let n = context.ok_or("a bare constant needs an enclosing generator count")?;
                let q = parse_rational(&s).map_err(|e| e.to_string())?;
                Ok(GrassmannElement::constant(n, q))
            }
            ElementRepr::Full { n, terms } => {
                let n = match (n, context) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(AlgebraError::GeneratorMismatch { left: b, right: a }.to_string())
                    }
                    (Some(a), _) | (None, Some(a)) => a,
                    (None, None) => return Err("missing generator count \"n\"".into()),
                };
                let parsed = terms
                    .iter()
                    .map(|(k, v)| Ok((Blade::parse_key(k)?, parse_rational(v)?)))
                    .collect::<Result<Vec<_>, AlgebraError>>()
                    .map_err(|e| e.to_string())?;
                GrassmannElement::from_terms(n, parsed).map_err(|e| e.to_string())
            }
        }
    }
}

impl<'de> Deserialize<'de> for GrassmannElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        ElementRepr::deserialize(deserializer)?
            .resolve(None)
            .map_err(D::Error::custom)
    }
}

fn serialize_mat2<S: Serializer>(m: &Mat2, name: &'static str, serializer: S) -> Result<S::Ok, S::Error> {
    let mut st = serializer.serialize_struct(name, 5)?;
    st.serialize_field("n", &m.num_generators())?;
    st.serialize_field("a", &m.a)?;
    st.serialize_field("alpha", &m.alpha)?;
    st.serialize_field("beta", &m.beta)?;
    st.serialize_field("b", &m.b)?;
    st.end()
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_mat2(self, "Mat2", serializer)
    }
}

impl Serialize for SuperMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_mat2(self.as_mat2(), "SuperMatrix", serializer)
    }
}

impl Serialize for OddMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_mat2(self.as_mat2(), "OddMatrix", serializer)
    }
}

#[derive(Deserialize)]
struct MatrixRepr {
    n: usize,
    a: ElementRepr,
    alpha: ElementRepr,
    beta: ElementRepr,
    b: ElementRepr,
}

impl MatrixRepr {
    fn into_mat2(self) -> Result<Mat2, String> {
        let n = Some(self.n);
        Mat2::new(
            self.a.resolve(n)?,
            self.alpha.resolve(n)?,
            self.beta.resolve(n)?,
            self.b.resolve(n)?,
        )
        .map_err(|e| e.to_string())
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        MatrixRepr::deserialize(deserializer)?
            .into_mat2()
            .map_err(D::Error::custom)
    }
}

impl<'de> Deserialize<'de> for SuperMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let m = Mat2::deserialize(deserializer)?;
        SuperMatrix::from_mat2(m).map_err(D::Error::custom)
    }
}

impl<'de> Deserialize<'de> for OddMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let m = Mat2::deserialize(deserializer)?;
        OddMatrix::from_mat2(m).map_err(D::Error::custom)
    }
}

impl Serialize for Reduced {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Reduced", 2)?;
        st.serialize_field("kind", self.kind().name())?;
        st.serialize_field("matrix", self.matrix())?;
        st.end()
    }
}

impl Serialize for BandElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BandElement", 5)?;
        st.serialize_field("kind", &format!("{:?}", self.kind()))?;
        st.serialize_field("alpha", self.alpha())?;
        match self.params() {
            BandParams::Z { t } => st.serialize_field("t", t)?,
            BandParams::B { t, u } => {
                st.serialize_field("t", t)?;
                st.serialize_field("u", u)?;
            }
            BandParams::C { t, u, v } => {
                st.serialize_field("t", t)?;
                st.serialize_field("u", u)?;
                st.serialize_field("v", v)?;
            }
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::rational;
    use serde_json::json;

    #[test]
    fn element_encoding_is_canonical() {
        let x = GrassmannElement::from_terms(
            4,
            [
                (Blade::from_indices(&[1, 3]).unwrap(), rational(-2, 1)),
                (Blade::UNIT, rational(1, 2)),
                (Blade::from_indices(&[2]).unwrap(), rational(0, 1)),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":4,"terms":{"":"1/2","1,3":"-2"}}"#);
        let back: GrassmannElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn element_decoding_errors() {
        assert!(serde_json::from_str::<GrassmannElement>(r#"{"terms":{}}"#).is_err());
        assert!(serde_json::from_str::<GrassmannElement>(r#"{"n":2,"terms":{"3":"1"}}"#).is_err());
        assert!(serde_json::from_str::<GrassmannElement>(r#"{"n":2,"terms":{"2,1":"1"}}"#).is_err());
        assert!(serde_json::from_str::<GrassmannElement>(r#"{"n":2,"terms":{"1":"1/0"}}"#).is_err());
        assert!(serde_json::from_str::<GrassmannElement>(r#"{"n":2,"terms":{"1":"x"}}"#).is_err());
        // zero coefficients on input are dropped
        let z: GrassmannElement = serde_json::from_str(r#"{"n":2,"terms":{"1":"0"}}"#).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn matrix_field_order_and_shorthand() {
        let m: SuperMatrix = serde_json::from_value(json!({
            "n": 2, "a": "1", "alpha": {"terms": {"1": "1"}},
            "beta": {"n": 2, "terms": {"2": "1"}}, "b": 1
        }))
        .unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"a":{"n":2,"terms":{"":"1"}},"alpha":{"n":2,"terms":{"1":"1"}},"beta":{"n":2,"terms":{"2":"1"}},"b":{"n":2,"terms":{"":"1"}}}"#
        );
    }

    #[test]
    fn matrix_decoding_errors() {
        let odd_a = json!({"n": 2, "a": {"terms": {"1": "1"}}, "alpha": "0", "beta": "0", "b": "1"});
        assert!(serde_json::from_value::<SuperMatrix>(odd_a).is_err());
        let mismatch = json!({"n": 2, "a": {"n": 3, "terms": {}}, "alpha": "0", "beta": "0", "b": "1"});
        assert!(serde_json::from_value::<SuperMatrix>(mismatch).is_err());
        assert!(serde_json::from_value::<SuperMatrix>(json!({"n": 2})).is_err());
    }
}
