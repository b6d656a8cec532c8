use super::{canonical_associate, extended_gcd, residue_mod, BaseElement};
use crate::error::{Error, Result};

/// Canonical triangular basis `{(a, 0), (b, c)}` of a rank-2 `O_K`-submodule
/// of `O_K^2`.
///
/// `c` is the canonical gcd of all second coordinates, `a` the canonical
/// generator of the elements with vanishing second coordinate, and `b` is the
/// canonical residue of the off-diagonal entry modulo `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HnfBasis {
    pub a: BaseElement,
    pub b: BaseElement,
    pub c: BaseElement,
}

impl HnfBasis {
    pub fn rows(&self) -> [(BaseElement, BaseElement); 2] {
        let k = self.a.field();
        [(self.a.clone(), k.zero()), (self.b.clone(), self.c.clone())]
    }

    /// Coefficients `(s, t)` with `s*(a,0) + t*(b,c) = (p, q)`, if they are integral.
    pub fn coordinates_of(&self, p: &BaseElement, q: &BaseElement) -> Option<(BaseElement, BaseElement)> {
        let t = q.div_exact(&self.c)?;
        let rest = p - &(&t * &self.b);
        let s = rest.div_exact(&self.a)?;
        Some((s, t))
    }

    pub fn contains(&self, p: &BaseElement, q: &BaseElement) -> bool {
        self.coordinates_of(p, q).is_some()
    }

    /// Determinant `a*c` of the basis.
    pub fn det(&self) -> BaseElement {
        &self.a * &self.c
    }
}

/// Certificate for [`hnf_rank2`]: both bases expressed in terms of each other.
#[derive(Clone, Debug)]
pub struct HnfCertificate {
    /// `output[i] = sum_j output_from_input[i][j] * input[j]`.
    pub output_from_input: [Vec<BaseElement>; 2],
    /// `input[j] = s_j * output[0] + t_j * output[1]`.
    pub input_from_output: Vec<(BaseElement, BaseElement)>,
}

#[derive(Clone)]
struct Row {
    p: BaseElement,
    q: BaseElement,
    coeffs: Vec<BaseElement>,
}

impl Row {
    fn combine(s: &BaseElement, x: &Row, t: &BaseElement, y: &Row) -> Row {
        Row {
            p: &(s * &x.p) + &(t * &y.p),
            q: &(s * &x.q) + &(t * &y.q),
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| &(s * a) + &(t * b)).collect(),
        }
    }

    fn scale(&self, mu: &BaseElement) -> Row {
        Row {
            p: &self.p * mu,
            q: &self.q * mu,
            coeffs: self.coeffs.iter().map(|c| c * mu).collect(),
        }
    }
}

/// Fold `rows` into one row whose `key` coordinate is a gcd of all keys; the
/// remaining rows get key zero. Returns `(pivot, rest)`.
fn gather(rows: Vec<Row>, key: fn(&Row) -> &BaseElement) -> Option<(Row, Vec<Row>)> {
    let mut pivot: Option<Row> = None;
    let mut rest = Vec::new();
    for row in rows {
        if key(&row).is_zero() {
            rest.push(row);
            continue;
        }
        let Some(piv) = pivot.take() else {
            pivot = Some(row);
            continue;
        };
        let (g, s, t) = extended_gcd(key(&piv), key(&row));
        let rg = key(&row).div_exact(&g).expect("gcd divides");
        let pg = key(&piv).div_exact(&g).expect("gcd divides");
        let new_piv = Row::combine(&s, &piv, &t, &row);
        let new_rest = Row::combine(&rg, &piv, &-pg, &row);
        debug_assert!(key(&new_rest).is_zero());
        rest.push(new_rest);
        pivot = Some(new_piv);
    }
    pivot.map(|p| (p, rest))
}

/// Canonical basis of the `O_K`-module spanned by `generators`, with a
/// certificate of mutual inclusion.
pub fn hnf_rank2(generators: &[(BaseElement, BaseElement)]) -> Result<(HnfBasis, HnfCertificate)> {
    let Some((first, _)) = generators.first() else {
        return Err(Error::RankDeficient);
    };
    let k = first.field();
    if generators.iter().any(|(p, q)| p.field() != k || q.field() != k) {
        return Err(Error::DescriptorMismatch);
    }
    let n = generators.len();
    let rows: Vec<Row> = generators
        .iter()
        .enumerate()
        .map(|(i, (p, q))| Row {
            p: p.clone(),
            q: q.clone(),
            coeffs: (0..n).map(|j| if i == j { k.one() } else { k.zero() }).collect(),
        })
        .collect();

    let (second, rest) = gather(rows, |r| &r.q).ok_or(Error::RankDeficient)?;
    let (first, _) = gather(rest, |r| &r.p).ok_or(Error::RankDeficient)?;

    let c_canon = canonical_associate(&second.q);
    let second = second.scale(&c_canon.div_exact(&second.q).expect("associate"));
    let a_canon = canonical_associate(&first.p);
    let first = first.scale(&a_canon.div_exact(&first.p).expect("associate"));

    let b = residue_mod(&second.p, &first.p)?;
    let shift = (&second.p - &b).div_exact(&first.p).expect("residue differs by a multiple");
    let second = Row::combine(&k.one(), &second, &-shift, &first);
    debug_assert_eq!(second.p, b);

    let basis = HnfBasis { a: first.p.clone(), b: second.p.clone(), c: second.q.clone() };
    let input_from_output = generators
        .iter()
        .map(|(p, q)| basis.coordinates_of(p, q).expect("generators lie in their own span"))
        .collect();
    let cert = HnfCertificate { output_from_input: [first.coeffs, second.coeffs], input_from_output };
    Ok((basis, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseField;
    use proptest::prelude::*;

    fn pairs(k: BaseField, v: &[(i64, i64)]) -> Vec<(BaseElement, BaseElement)> {
        v.iter().map(|&(p, q)| (k.int(p), k.int(q))).collect()
    }

    #[test]
    fn examples() {
        let q = BaseField::Rational;
        let (b, _) = hnf_rank2(&pairs(q, &[(1, 0), (0, 1), (3, 5)])).unwrap();
        assert_eq!((b.a, b.b, b.c), (q.int(1), q.int(0), q.int(1)));
        let (b, cert) = hnf_rank2(&pairs(q, &[(4, 0), (2, 2), (-4, 2)])).unwrap();
        assert_eq!((b.a.clone(), b.b.clone(), b.c.clone()), (q.int(2), q.int(0), q.int(2)));
        // double inclusion, checked directly
        for (p, qq) in pairs(q, &[(4, 0), (2, 2), (-4, 2)]) {
            assert!(b.contains(&p, &qq));
        }
        let gens = pairs(q, &[(4, 0), (2, 2), (-4, 2)]);
        for (i, row) in b.rows().iter().enumerate() {
            let mut acc = (q.zero(), q.zero());
            for (c, (p, qq)) in cert.output_from_input[i].iter().zip(&gens) {
                acc = (&acc.0 + &(c * p), &acc.1 + &(c * qq));
            }
            assert_eq!(&acc, row);
        }
        assert_eq!(hnf_rank2(&pairs(q, &[(2, 0), (2, 0)])).unwrap_err(), Error::RankDeficient);
        assert_eq!(hnf_rank2(&[]).unwrap_err(), Error::RankDeficient);
    }

    fn gen() -> impl Strategy<Value = (BaseElement, BaseElement)> {
        (-20i64..20, -20i64..20, -20i64..20, -20i64..20)
            .prop_map(|(a, b, c, d)| (BaseField::Sqrt2.elem(a, b), BaseField::Sqrt2.elem(c, d)))
    }

    proptest! {
        #[test]
        fn idempotent_and_generator_invariant(
            gens in proptest::collection::vec(gen(), 2..5),
            mult in (-5i64..5, -5i64..5, -5i64..5, -5i64..5),
        ) {
            let k = BaseField::Sqrt2;
            let Ok((b, _)) = hnf_rank2(&gens) else { return Ok(()); };
            let (b2, _) = hnf_rank2(&b.rows()).unwrap();
            prop_assert_eq!(&b2, &b);
            // augment with a module element and permute
            let (s, t) = (k.elem(mult.0, mult.1), k.elem(mult.2, mult.3));
            let extra = (&(&s * &gens[0].0) + &(&t * &gens[1].0), &(&s * &gens[0].1) + &(&t * &gens[1].1));
            let mut more = gens.clone();
            more.reverse();
            more.push(extra);
            let (b3, _) = hnf_rank2(&more).unwrap();
            prop_assert_eq!(b3, b);
        }
    }
}
