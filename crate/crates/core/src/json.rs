//! JSON encodings. Numbers are written as decimal strings; on input, plain
//! JSON integers and decimal strings are accepted wherever an element is
//! expected.

use crate::base::{BaseElement, BaseField, BaseRational, SignVector};
use crate::cube::{Cube, CubeTranscript, GammaElement};
use crate::extension::ExtElement;
use crate::forms::QuadForm;
use crate::ideal::OrientedIdeal;
use crate::matrix::Mat2;
use crate::triple::BalancedTriple;
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::fmt;

/// Malformed input: wrong shape, missing key or unparsable number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

fn err<T>(msg: impl Into<String>) -> ParseResult<T> {
    Err(ParseError(msg.into()))
}

fn key<'a>(v: &'a Value, k: &str) -> ParseResult<&'a Value> {
    v.get(k).ok_or_else(|| ParseError(format!("missing key {k:?} in {v}")))
}

fn bigint(v: &Value) -> ParseResult<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| ParseError(format!("not an integer: {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integral JSON number")),
        _ => err(format!("not an integer: {v}")),
    }
}

fn int_str(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn element_to_json(x: &BaseElement) -> Value {
    json!({"u": int_str(x.u()), "v": int_str(x.v())})
}

/// `{"u": .., "v": ..}` (`v` optional), or a bare integer.
pub fn element_from_json(k: BaseField, v: &Value) -> ParseResult<BaseElement> {
    let (u, w) = match v {
        Value::Object(_) => {
            let u = bigint(key(v, "u")?)?;
            let w = v.get("v").map(bigint).transpose()?.unwrap_or_default();
            (u, w)
        }
        _ => (bigint(v)?, BigInt::default()),
    };
    if k == BaseField::Rational && w != BigInt::default() {
        return err(format!("element {v} has a sqrt2 part over Q"));
    }
    Ok(BaseElement::from_coords(k, &[u, w]))
}

pub fn rational_to_json(x: &BaseRational) -> Value {
    json!({"u": int_str(x.numer().u()), "v": int_str(x.numer().v()), "den": int_str(x.denom())})
}

/// An element object with an optional `"den"`.
pub fn rational_from_json(k: BaseField, v: &Value) -> ParseResult<BaseRational> {
    let num = element_from_json(k, v)?;
    let den = v.get("den").map(bigint).transpose()?.unwrap_or_else(|| BigInt::from(1));
    BaseRational::new(num, den).map_err(|e| ParseError(format!("bad rational {v}: {e}")))
}

pub fn ext_to_json(x: &ExtElement) -> Value {
    json!({"x": rational_to_json(&x.x_coord()), "y": rational_to_json(&x.y_coord())})
}

pub fn ext_from_json(k: BaseField, v: &Value) -> ParseResult<ExtElement> {
    Ok(ExtElement::from_rationals(&rational_from_json(k, key(v, "x")?)?, &rational_from_json(k, key(v, "y")?)?))
}

pub fn signs_to_json(s: &SignVector) -> Value {
    Value::Array(s.entries().iter().map(|&e| json!(e)).collect())
}

pub fn signs_from_json(k: BaseField, v: &Value) -> ParseResult<SignVector> {
    let Value::Array(xs) = v else { return err(format!("eps must be an array: {v}")) };
    let eps: Vec<i8> = xs
        .iter()
        .map(|x| match x.as_i64() {
            Some(1) => Ok(1),
            Some(-1) => Ok(-1),
            _ => err(format!("sign entries must be 1 or -1: {x}")),
        })
        .collect::<ParseResult<_>>()?;
    if eps.len() != k.r() {
        return err(format!("eps must have {} entries over {}", k.r(), k.name()));
    }
    Ok(SignVector::new(eps))
}

pub fn ideal_to_json(i: &OrientedIdeal) -> Value {
    json!({"alpha": ext_to_json(i.alpha()), "beta": ext_to_json(i.beta()), "eps": signs_to_json(i.eps())})
}

/// `{"alpha", "beta", "eps"}`; the basis is validated by the caller.
pub fn ideal_parts_from_json(k: BaseField, v: &Value) -> ParseResult<(ExtElement, ExtElement, SignVector)> {
    let eps = match v.get("eps") {
        Some(e) => signs_from_json(k, e)?,
        None => SignVector::positive(k.r()),
    };
    Ok((ext_from_json(k, key(v, "alpha")?)?, ext_from_json(k, key(v, "beta")?)?, eps))
}

pub fn form_to_json(q: &QuadForm) -> Value {
    json!({"a": element_to_json(&q.a), "b": element_to_json(&q.b), "c": element_to_json(&q.c)})
}

pub fn form_from_json(k: BaseField, v: &Value) -> ParseResult<QuadForm> {
    let e = |n: &str| element_from_json(k, key(v, n)?);
    Ok(QuadForm::new(e("a")?, e("b")?, e("c")?))
}

pub fn cube_to_json(c: &Cube) -> Value {
    json!({"entries": c.entries().iter().map(element_to_json).collect::<Vec<_>>()})
}

pub fn cube_from_json(k: BaseField, v: &Value) -> ParseResult<Cube> {
    let Some(Value::Array(xs)) = v.get("entries") else { return err(format!("cube needs an \"entries\" array: {v}")) };
    if xs.len() != 8 {
        return err(format!("cube needs 8 entries, got {}", xs.len()));
    }
    let e: Vec<BaseElement> = xs.iter().map(|x| element_from_json(k, x)).collect::<ParseResult<_>>()?;
    Ok(Cube::new(e.try_into().expect("length checked")))
}

/// `[p, q, r, s]`.
pub fn matrix_to_json(m: &Mat2) -> Value {
    Value::Array(m.entries().iter().map(|x| element_to_json(x)).collect())
}

pub fn matrix_from_json(k: BaseField, v: &Value) -> ParseResult<Mat2> {
    let xs: Vec<&Value> = match v {
        Value::Array(xs) if xs.len() == 4 => xs.iter().collect(),
        Value::Array(rows) if rows.len() == 2 => rows.iter().filter_map(Value::as_array).flatten().collect(),
        _ => vec![],
    };
    if xs.len() != 4 {
        return err(format!("matrix must be [p, q, r, s] or [[p, q], [r, s]]: {v}"));
    }
    let e = |i: usize| element_from_json(k, xs[i]);
    Ok(Mat2::new(e(0)?, e(1)?, e(2)?, e(3)?))
}

/// `{"t1", "t2", "t3", "u"}`, each optional (identity, `u = 1`).
pub fn gamma_from_json(k: BaseField, v: &Value) -> ParseResult<(Mat2, Mat2, Mat2, BaseElement)> {
    let m = |n: &str| v.get(n).map(|x| matrix_from_json(k, x)).transpose().map(|o| o.unwrap_or_else(|| Mat2::identity(k)));
    let u = v.get("u").map(|x| element_from_json(k, x)).transpose()?.unwrap_or_else(|| k.one());
    Ok((m("t1")?, m("t2")?, m("t3")?, u))
}

pub fn gamma_to_json(g: &GammaElement) -> Value {
    json!({"t1": matrix_to_json(&g.t[0]), "t2": matrix_to_json(&g.t[1]), "t3": matrix_to_json(&g.t[2]), "u": element_to_json(&g.u)})
}

pub fn transcript_to_json(t: &CubeTranscript) -> Value {
    json!({
        "steps": t.steps.iter().map(|(axis, m)| json!({"axis": axis, "matrix": matrix_to_json(m)})).collect::<Vec<_>>(),
        "scalar": element_to_json(&t.scalar),
    })
}

pub fn triple_to_json(t: &BalancedTriple) -> Value {
    json!({"ideals": t.ideals().iter().map(ideal_to_json).collect::<Vec<_>>(), "witness_u": element_to_json(t.witness_u())})
}

/// The three ideal descriptions of a triple; `witness_u` is recomputed.
pub fn triple_parts_from_json(v: &Value) -> ParseResult<[&Value; 3]> {
    match v.get("ideals") {
        Some(Value::Array(xs)) if xs.len() == 3 => Ok([&xs[0], &xs[1], &xs[2]]),
        _ => err(format!("triple needs an \"ideals\" array of length 3: {v}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::Extension;

    #[test]
    fn elements() {
        let k = BaseField::Sqrt2;
        let x = k.elem(-3, 7);
        let v = element_to_json(&x);
        assert_eq!(v, json!({"u": "-3", "v": "7"}));
        assert_eq!(element_from_json(k, &v).unwrap(), x);
        assert_eq!(element_from_json(k, &json!(5)).unwrap(), k.int(5));
        assert_eq!(element_from_json(k, &json!("-12")).unwrap(), k.int(-12));
        assert!(element_from_json(BaseField::Rational, &v).is_err());
        assert!(element_from_json(k, &json!(1.5)).is_err());
        let big = json!("123456789012345678901234567890");
        assert_eq!(element_to_json(&element_from_json(k, &big).unwrap())["u"], big);
    }

    #[test]
    fn round_trips() {
        let k = BaseField::Rational;
        let l = Extension::new(k.int(-20)).unwrap();
        let half = ExtElement::new(k.int(1), k.int(3), BigInt::from(2));
        assert_eq!(ext_from_json(k, &ext_to_json(&half)).unwrap(), half);
        let c = Cube::from_ints(k, [0, 1, 1, 0, 1, 0, 0, -5]);
        assert_eq!(cube_from_json(k, &cube_to_json(&c)).unwrap(), c);
        assert_eq!(cube_from_json(k, &json!({"entries": [0, 1, 1, 0, 1, 0, 0, -5]})).unwrap(), c);
        assert!(cube_from_json(k, &json!({"entries": [0, 1]})).is_err());
        let q = QuadForm::from_ints(k, 2, 2, 3);
        assert_eq!(form_from_json(k, &form_to_json(&q)).unwrap(), q);
        let i = OrientedIdeal::new(&l, l.from_base(&k.int(2)), &l.one() + &l.omega(), SignVector::new(vec![-1])).unwrap();
        let (a, b, e) = ideal_parts_from_json(k, &ideal_to_json(&i)).unwrap();
        assert_eq!(OrientedIdeal::new(&l, a, b, e).unwrap(), i);
        let m = Mat2::from_ints(k, 0, 1, -1, 0);
        assert_eq!(matrix_from_json(k, &matrix_to_json(&m)).unwrap(), m);
        assert_eq!(matrix_from_json(k, &json!([[0, 1], [-1, 0]])).unwrap(), m);
        assert!(signs_from_json(BaseField::Sqrt2, &json!([1])).is_err());
    }
}
