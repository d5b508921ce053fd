//! JSON documents. Every exact value is a string: an integer or `"p/q"`.

use rug::Rational;
use serde::{Deserialize, Serialize};
use shavis_core::arith::rational::{format_rational, parse_rational};
use shavis_core::arith::{BilinearForm, Mat3, TernaryCubic};
use shavis_core::ellcurve::WeierstrassModel;
use shavis_core::Error;

use crate::CliError;

pub const CUBIC_ORDER: &str = "x3,x2y,x2z,xy2,xyz,xz2,y3,y2z,yz2,z3";
pub const BILINEAR_ORDER: &str = "xu,xv,xw,yu,yv,yw,zu,zv,zw";

pub fn rat(r: &Rational) -> String {
    format_rational(r)
}

pub fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat).collect()
}

fn parse_list(v: &[String], n: usize, what: &str) -> Result<Vec<Rational>, CliError> {
    if v.len() != n {
        return Err(CliError::Parse(format!(
            "{what} needs {n} coefficients, got {}",
            v.len()
        )));
    }
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| CliError::Parse(e.to_string())))
        .collect()
}

/// Splits `"a,b,c"` (spaces allowed) into coefficient strings.
pub fn split_inline(s: &str) -> Vec<String> {
    s.split(',').map(|t| t.trim().to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubicDocument {
    pub monomial_order: String,
    pub coefficients: Vec<String>,
}

impl CubicDocument {
    pub fn from_cubic(c: &TernaryCubic<Rational>) -> Self {
        CubicDocument {
            monomial_order: CUBIC_ORDER.into(),
            coefficients: rats(&c.coeffs),
        }
    }

    pub fn to_cubic(&self) -> Result<TernaryCubic<Rational>, CliError> {
        if self.monomial_order != CUBIC_ORDER {
            return Err(CliError::Parse(format!(
                "unknown monomial order {:?}, expected {CUBIC_ORDER:?}",
                self.monomial_order
            )));
        }
        let v = parse_list(&self.coefficients, 10, "a cubic")?;
        Ok(TernaryCubic::new(v.try_into().expect("ten entries")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilinearDocument {
    pub monomial_order: String,
    pub coefficients: Vec<String>,
}

impl BilinearDocument {
    pub fn from_form(b: &BilinearForm) -> Self {
        BilinearDocument {
            monomial_order: BILINEAR_ORDER.into(),
            coefficients: rats(&b.entries()),
        }
    }

    pub fn to_form(&self) -> Result<BilinearForm, CliError> {
        if self.monomial_order != BILINEAR_ORDER {
            return Err(CliError::Parse(format!(
                "unknown monomial order {:?}, expected {BILINEAR_ORDER:?}",
                self.monomial_order
            )));
        }
        let v = parse_list(&self.coefficients, 9, "a bilinear form")?;
        Ok(BilinearForm::from_entries(&v).expect("nine entries"))
    }
}

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeierstrassDocument {
    pub a_invariants: Vec<String>,
}

impl WeierstrassDocument {
    pub fn from_model(w: &WeierstrassModel) -> Self {
        WeierstrassDocument {
            a_invariants: rats(&w.coeffs()),
        }
    }

    pub fn to_model(&self) -> Result<WeierstrassModel, CliError> {
        let v = parse_list(&self.a_invariants, 5, "a Weierstrass model")?;
        WeierstrassModel::new(v.try_into().expect("five entries")).map_err(CliError::from)
    }
}

/// Input of `visualize`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VisualizeDocument {
    pub e1: WeierstrassDocument,
    pub covering: CubicDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_e2: Option<WeierstrassDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_form: Option<BilinearDocument>,
}

pub fn matrix(m: &Mat3<Rational>) -> Vec<Vec<String>> {
    m.m.iter().map(|r| rats(r)).collect()
}

pub fn parse_matrix(v: &[Vec<String>]) -> Result<Mat3<Rational>, CliError> {
    if v.len() != 3 {
        return Err(CliError::Parse("a matrix needs 3 rows".into()));
    }
    let rows = v
        .iter()
        .map(|r| parse_list(r, 3, "a matrix row"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Mat3::from_rows(std::array::from_fn(|i| {
        rows[i].clone().try_into().expect("three entries")
    })))
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use shavis_core::data;

    #[test]
    fn cubic_round_trip() {
        let c = data::c2_681();
        let doc = CubicDocument::from_cubic(&c);
        let text = serde_json::to_string(&doc).unwrap();
        let back: CubicDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_cubic().unwrap(), c);
    }

    #[test]
    fn rationals_are_strings() {
        let c = TernaryCubic::new(std::array::from_fn(|i| Rational::from((i as i64 - 4, 3))));
        let doc = CubicDocument::from_cubic(&c);
        assert_eq!(doc.coefficients[0], "-4/3");
        assert_eq!(doc.coefficients[1], "-1");
        assert_eq!(doc.to_cubic().unwrap(), c);
    }

    #[test]
    fn wrong_length_is_rejected() {
        let doc = CubicDocument {
            monomial_order: CUBIC_ORDER.into(),
            coefficients: vec!["1".into(); 9],
        };
        assert!(matches!(doc.to_cubic(), Err(CliError::Parse(_))));
        let doc = CubicDocument {
            monomial_order: "x,y,z".into(),
            coefficients: vec!["1".into(); 10],
        };
        assert!(matches!(doc.to_cubic(), Err(CliError::Parse(_))));
    }

    #[test]
    fn bad_rational_is_rejected() {
        let mut doc = CubicDocument::from_cubic(&data::c1_681());
        doc.coefficients[3] = "1/0".into();
        assert!(doc.to_cubic().is_err());
        doc.coefficients[3] = "0.5".into();
        assert!(doc.to_cubic().is_err());
    }

    #[test]
    fn bilinear_and_matrix_round_trip() {
        let b = data::c_form_681();
        assert_eq!(BilinearDocument::from_form(&b).to_form().unwrap(), b);
        assert_eq!(parse_matrix(&matrix(&b.m)).unwrap(), b.m);
    }

    #[test]
    fn weierstrass_round_trip() {
        let w = data::e681c1();
        assert_eq!(WeierstrassDocument::from_model(&w).to_model().unwrap(), w);
    }
}
