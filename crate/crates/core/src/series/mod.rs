//! Hilbert functions in rational form `h(k) = [t^k] numerator / (1 - t)^p`.
//!
//! Every construction used here (finite tables, free modules, complete
//! intersections, sums, shifts, polynomial extensions) is closed under this
//! representation. Values are kept canonical: factors of `(1 - t)` are
//! divided out of the numerator while `p > 0`, so two functions are equal
//! exactly when their canonical forms are.

mod dsl;
mod laurent;

pub use dsl::{parse_spec, FunctionSpec, SpecError};
pub use laurent::LaurentPolynomial;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::numbers::{binomial, Integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("the zero function is not a Hilbert function of a nonzero module")]
    EmptyFunction,
    #[error("negative value {value} at degree {degree}")]
    NegativeValue { degree: i64, value: Integer },
    #[error("invalid arity: {0}")]
    InvalidArity(String),
    #[error("{forms} forms in {vars} variables cannot form a complete intersection")]
    TooManyForms { vars: i64, forms: usize },
    #[error("form degree {0} is below 1")]
    InvalidDegree(i64),
    #[error("malformed exchange form: {0}")]
    Malformed(String),
}

/// A Hilbert function in canonical rational form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertFunction {
    numerator: LaurentPolynomial,
    denom_power: u32,
}

impl HilbertFunction {
    /// Canonicalizes `numerator / (1 - t)^denom_power` and checks that the
    /// lowest nonzero value is positive.
    pub fn from_parts(numerator: LaurentPolynomial, denom_power: u32) -> Result<Self, SeriesError> {
        let mut numerator = numerator;
        let mut denom_power = denom_power;
        let lowest = match numerator.terms().next() {
            Some((e, c)) => (e, c.clone()),
            None => return Err(SeriesError::EmptyFunction),
        };
        if !lowest.1.is_positive() {
            return Err(SeriesError::NegativeValue {
                degree: lowest.0,
                value: lowest.1,
            });
        }
        while denom_power > 0 {
            match numerator.div_one_minus_t() {
                Some(q) => {
                    numerator = q;
                    denom_power -= 1;
                }
                None => break,
            }
        }
        Ok(Self {
            numerator,
            denom_power,
        })
    }

    /// Finite-support function given by its table of values.
    pub fn from_table(values: &BTreeMap<i64, Integer>) -> Result<Self, SeriesError> {
        if let Some((k, v)) = values.iter().find(|(_, v)| v.is_negative()) {
            return Err(SeriesError::NegativeValue {
                degree: *k,
                value: v.clone(),
            });
        }
        let numerator = LaurentPolynomial::from_terms(values.iter().map(|(k, v)| (*k, v.clone())));
        Self::from_parts(numerator, 0)
    }

    /// Convenience wrapper over [`from_table`](Self::from_table) for small values.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self, SeriesError> {
        let mut values = BTreeMap::new();
        for &(k, v) in pairs {
            *values.entry(k).or_insert_with(Integer::zero) += Integer::from(v);
        }
        Self::from_table(&values)
    }

    /// Hilbert function of the polynomial ring in `n` variables.
    pub fn polynomial_ring(n: u32) -> Result<Self, SeriesError> {
        if n < 1 {
            return Err(SeriesError::InvalidArity(
                "polynomial ring needs at least one variable".into(),
            ));
        }
        Self::from_parts(LaurentPolynomial::one(), n)
    }

    /// `S(a_1) + ... + S(a_m)` over `S` in `n` variables. Since
    /// `h_{S(a)}(k) = h_S(k + a)`, each summand contributes `t^-a`.
    pub fn free_module(n: u32, shifts: &[i64]) -> Result<Self, SeriesError> {
        if n < 1 {
            return Err(SeriesError::InvalidArity(
                "polynomial ring needs at least one variable".into(),
            ));
        }
        if shifts.is_empty() {
            return Err(SeriesError::InvalidArity(
                "free module needs at least one summand".into(),
            ));
        }
        let numerator = LaurentPolynomial::from_terms(shifts.iter().map(|a| (-a, Integer::one())));
        Self::from_parts(numerator, n)
    }

    /// `S / (f_1, ..., f_r)` for a regular sequence of forms of the given degrees.
    pub fn complete_intersection(n: u32, degrees: &[i64]) -> Result<Self, SeriesError> {
        if n < 1 {
            return Err(SeriesError::InvalidArity(
                "polynomial ring needs at least one variable".into(),
            ));
        }
        Self::complete_intersection_in(n, degrees)
    }

    /// Same as [`complete_intersection`](Self::complete_intersection) but also
    /// admits the zero-variable ring `K`, whose Hilbert function is `{0: 1}`.
    pub(crate) fn complete_intersection_in(n: u32, degrees: &[i64]) -> Result<Self, SeriesError> {
        if degrees.len() > n as usize {
            return Err(SeriesError::TooManyForms {
                vars: n as i64,
                forms: degrees.len(),
            });
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 1) {
            return Err(SeriesError::InvalidDegree(d));
        }
        let numerator = degrees.iter().fold(LaurentPolynomial::one(), |acc, &d| {
            &acc * &LaurentPolynomial::geometric(d as u32)
        });
        Self::from_parts(numerator, n - degrees.len() as u32)
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    /// Raw coefficient of `t^k`, without the nonnegativity check.
    pub fn coefficient(&self, k: i64) -> Integer {
        let p = self.denom_power as i64;
        if p == 0 {
            return self.numerator.coeff(k);
        }
        self.numerator
            .terms()
            .take_while(|(a, _)| *a <= k)
            .map(|(a, c)| c * binomial(k - a + p - 1, p - 1))
            .sum()
    }

    /// `h(k)`, which must be nonnegative for a genuine Hilbert function.
    pub fn evaluate(&self, k: i64) -> Result<Integer, SeriesError> {
        let value = self.coefficient(k);
        if value.is_negative() {
            return Err(SeriesError::NegativeValue { degree: k, value });
        }
        Ok(value)
    }

    /// Values `h(from), ..., h(to)`.
    pub fn values(&self, from: i64, to: i64) -> Result<Vec<Integer>, SeriesError> {
        (from..=to).map(|k| self.evaluate(k)).collect()
    }

    /// Lowest degree with a nonzero value. The canonical numerator's lowest
    /// coefficient survives division by `(1 - t)^p` unchanged.
    pub fn k0(&self) -> i64 {
        self.numerator
            .min_exp()
            .expect("canonical numerator is nonzero")
    }

    /// Highest degree with a nonzero value, when the support is finite.
    pub fn kf(&self) -> Option<i64> {
        (self.denom_power == 0).then(|| {
            self.numerator
                .max_exp()
                .expect("canonical numerator is nonzero")
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.denom_power.max(other.denom_power);
        let lift = |h: &Self| &h.numerator * &LaurentPolynomial::one_minus_t_pow(p - h.denom_power);
        let numerator = &lift(self) + &lift(other);
        Self::from_parts(numerator, p).expect("sum of Hilbert functions is a Hilbert function")
    }

    /// `h` repeated `r` times, i.e. the Hilbert function of `M^r`.
    pub fn scale(&self, r: u64) -> Result<Self, SeriesError> {
        if r < 1 {
            return Err(SeriesError::InvalidArity(
                "scale factor must be at least 1".into(),
            ));
        }
        Ok(Self {
            numerator: self.numerator.scaled(&Integer::from(r)),
            denom_power: self.denom_power,
        })
    }

    /// Hilbert function of `M(m)`: `k -> h(k + m)`.
    pub fn shift(&self, m: i64) -> Self {
        Self {
            numerator: self.numerator.shifted(-m),
            denom_power: self.denom_power,
        }
    }

    /// Hilbert function of `M[x_{n+1}]`: prefix sums of `h`.
    pub fn extend(&self) -> Self {
        Self::from_parts(self.numerator.clone(), self.denom_power + 1)
            .expect("extension keeps the lowest coefficient")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("exchange form always serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, SeriesError> {
        Self::deserialize(value).map_err(|e| SeriesError::Malformed(e.to_string()))
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / (1 - t)", self.numerator),
            p => write!(f, "({}) / (1 - t)^{p}", self.numerator),
        }
    }
}

// Exchange form: {"numerator": {"<exp>": "<coeff>", ...}, "denomPower": p}.
// Coefficients are decimal strings; exponents are emitted in increasing order.
impl Serialize for HilbertFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Numerator<'a>(&'a LaurentPolynomial);

        impl Serialize for Numerator<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (e, c) in self.0.terms() {
                    map.serialize_entry(&e.to_string(), &c.to_string())?;
                }
                map.end()
            }
        }

        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("numerator", &Numerator(&self.numerator))?;
        map.serialize_entry("denomPower", &self.denom_power)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for HilbertFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            numerator: BTreeMap<String, String>,
            #[serde(rename = "denomPower")]
            denom_power: u32,
        }

        let raw = Raw::deserialize(deserializer)?;
        let mut numerator = LaurentPolynomial::zero();
        for (e, c) in &raw.numerator {
            let exp: i64 = e
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            let coeff: Integer = c
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            numerator.add_term(exp, coeff);
        }
        Self::from_parts(numerator, raw.denom_power).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn table(pairs: &[(i64, i64)]) -> HilbertFunction {
        HilbertFunction::from_pairs(pairs).unwrap()
    }

    fn ev(h: &HilbertFunction, k: i64) -> Integer {
        h.evaluate(k).unwrap()
    }

    /// Series oracle: expand numerator * (1 + t + t^2 + ...)^p term by term
    /// using repeated prefix sums.
    fn series_oracle(h: &HilbertFunction, from: i64, to: i64) -> Vec<Integer> {
        let lo = h.numerator.min_exp().unwrap().min(from);
        let mut seq: Vec<Integer> = (lo..=to).map(|k| h.numerator.coeff(k)).collect();
        for _ in 0..h.denom_power {
            let mut run = Integer::zero();
            for v in seq.iter_mut() {
                run += &*v;
                *v = run.clone();
            }
        }
        seq[(from - lo) as usize..].to_vec()
    }

    #[test]
    fn from_table_examples() {
        let h = table(&[(0, 1)]);
        assert_eq!(ev(&h, 0), int(1));
        assert_eq!(ev(&h, 1), int(0));
        assert_eq!(ev(&h, -1), int(0));

        let h = table(&[(0, 1), (1, 3), (2, 3), (3, 1)]);
        assert_eq!((h.k0(), h.kf()), (0, Some(3)));
        assert_eq!(
            h.values(0, 3).unwrap(),
            vec![int(1), int(3), int(3), int(1)]
        );

        let h = table(&[(-2, 5)]);
        assert_eq!(h.k0(), -2);
        assert_eq!(ev(&h, -2), int(5));
    }

    #[test]
    fn from_table_errors() {
        assert_eq!(
            HilbertFunction::from_pairs(&[]),
            Err(SeriesError::EmptyFunction)
        );
        assert_eq!(
            HilbertFunction::from_pairs(&[(0, 0), (3, 0)]),
            Err(SeriesError::EmptyFunction)
        );
        assert!(matches!(
            HilbertFunction::from_pairs(&[(0, 1), (2, -1)]),
            Err(SeriesError::NegativeValue { degree: 2, .. })
        ));
    }

    #[test]
    fn polynomial_ring_examples() {
        let s3 = HilbertFunction::polynomial_ring(3).unwrap();
        assert_eq!(ev(&s3, 2), int(6));
        assert_eq!(ev(&s3, -1), int(0));
        let s1 = HilbertFunction::polynomial_ring(1).unwrap();
        assert!((0..50).all(|k| ev(&s1, k) == int(1)));
        assert_eq!(
            ev(&HilbertFunction::polynomial_ring(5).unwrap(), 3),
            int(35)
        );
        assert!(matches!(
            HilbertFunction::polynomial_ring(0),
            Err(SeriesError::InvalidArity(_))
        ));
        for n in 1..8u32 {
            let s = HilbertFunction::polynomial_ring(n).unwrap();
            assert_eq!(s.k0(), 0);
            for k in 0..20 {
                assert_eq!(ev(&s, k), binomial(n as i64 - 1 + k, k));
            }
        }
    }

    #[test]
    fn free_module_examples() {
        assert_eq!(
            HilbertFunction::free_module(2, &[0]).unwrap(),
            HilbertFunction::polynomial_ring(2).unwrap()
        );
        let f = HilbertFunction::free_module(3, &[2]).unwrap();
        assert_eq!(f.k0(), -2);
        assert_eq!(ev(&f, -2), int(1));
        let f = HilbertFunction::free_module(2, &[0, 0, -1]).unwrap();
        assert_eq!(ev(&f, 0), int(2));
        assert_eq!(ev(&f, 1), int(5));
        assert!(matches!(
            HilbertFunction::free_module(2, &[]),
            Err(SeriesError::InvalidArity(_))
        ));
    }

    #[test]
    fn complete_intersection_examples() {
        let ci = HilbertFunction::complete_intersection(3, &[3]).unwrap();
        assert_eq!(ci.kf(), None);
        // (1 + t + t^2) / (1 - t)^2: every quadric in three variables survives x1^3.
        assert_eq!(ev(&ci, 2), int(6));
        assert_eq!(ev(&ci, 3), int(9));
        assert_eq!(series_oracle(&ci, 0, 5), ci.values(0, 5).unwrap());

        let ci = HilbertFunction::complete_intersection(2, &[2, 2]).unwrap();
        assert_eq!(ci, table(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(ci.kf(), Some(2));

        assert_eq!(
            HilbertFunction::complete_intersection(4, &[]).unwrap(),
            HilbertFunction::polynomial_ring(4).unwrap()
        );
        assert_eq!(
            HilbertFunction::complete_intersection(2, &[1, 3]).unwrap(),
            HilbertFunction::complete_intersection(1, &[3]).unwrap()
        );
        assert_eq!(
            HilbertFunction::complete_intersection(1, &[2, 2]),
            Err(SeriesError::TooManyForms { vars: 1, forms: 2 })
        );
        assert_eq!(
            HilbertFunction::complete_intersection(3, &[2, 0]),
            Err(SeriesError::InvalidDegree(0))
        );
    }

    #[test]
    fn full_complete_intersection_has_product_length() {
        for degrees in [vec![2, 3], vec![4, 4, 2], vec![5], vec![2, 2, 2, 3]] {
            let n = degrees.len() as u32;
            let ci = HilbertFunction::complete_intersection(n, &degrees).unwrap();
            let kf = ci.kf().expect("finite support");
            let total: Integer = ci.values(0, kf).unwrap().into_iter().sum();
            assert_eq!(total, int(degrees.iter().product()));
        }
    }

    #[test]
    fn k0_and_kf() {
        assert_eq!(HilbertFunction::polynomial_ring(4).unwrap().k0(), 0);
        assert_eq!(
            HilbertFunction::polynomial_ring(2).unwrap().shift(5).k0(),
            -5
        );
        assert_eq!(table(&[(3, 7)]).k0(), 3);
        assert_eq!(table(&[(0, 1), (2, 1)]).kf(), Some(2));
        assert_eq!(HilbertFunction::polynomial_ring(1).unwrap().kf(), None);
    }

    #[test]
    fn add_examples() {
        let h = table(&[(0, 1)]);
        assert_eq!(h.add(&table(&[(1, 1)])), table(&[(0, 1), (1, 1)]));
        let s2 = HilbertFunction::polynomial_ring(2).unwrap();
        let doubled = s2.add(&s2);
        for k in 0..30 {
            assert_eq!(ev(&doubled, k), int(2) * binomial(k + 1, k));
        }
        assert_eq!(s2.scale(2).unwrap(), doubled);
        // mismatched denominators
        let mixed = s2.add(&h);
        assert_eq!(ev(&mixed, 0), int(2));
        assert_eq!(ev(&mixed, 4), int(5));
    }

    #[test]
    fn scale_and_shift_examples() {
        let h = table(&[(0, 2)]);
        assert_eq!(h.scale(1).unwrap(), h);
        assert_eq!(h.scale(3).unwrap(), table(&[(0, 6)]));
        assert!(matches!(h.scale(0), Err(SeriesError::InvalidArity(_))));
        assert_eq!(table(&[(0, 1)]).shift(2), table(&[(-2, 1)]));
        assert_eq!(h.shift(0), h);
    }

    #[test]
    fn extend_examples() {
        assert_eq!(
            table(&[(0, 1)]).extend(),
            HilbertFunction::polynomial_ring(1).unwrap()
        );
        for n in 1..6 {
            assert_eq!(
                HilbertFunction::polynomial_ring(n).unwrap().extend(),
                HilbertFunction::polynomial_ring(n + 1).unwrap()
            );
        }
        assert_eq!(ev(&table(&[(0, 1), (1, 1)]).extend(), 3), int(2));
        // (1 + t)(1 - t) / (1 - t) collapses to the finite table 1 + t.
        let h = HilbertFunction::from_parts(LaurentPolynomial::geometric(2).mul_one_minus_t(), 1)
            .unwrap();
        assert_eq!(h, table(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn canonical_form_divides_out_factors() {
        let num = &LaurentPolynomial::geometric(3) * &LaurentPolynomial::one_minus_t_pow(2);
        let h = HilbertFunction::from_parts(num, 3).unwrap();
        assert_eq!(h.denom_power(), 1);
        assert_eq!(h.numerator(), &LaurentPolynomial::geometric(3));
        let again = HilbertFunction::from_parts(h.numerator().clone(), h.denom_power()).unwrap();
        assert_eq!(again, h);
    }

    #[test]
    fn evaluate_flags_negative_values() {
        // (1 - 2t) / (1 - t): values 1, -1, -1, ...
        let num = LaurentPolynomial::from_terms([(0, int(1)), (1, int(-2))]);
        let h = HilbertFunction::from_parts(num, 1).unwrap();
        assert_eq!(ev(&h, 0), int(1));
        assert!(matches!(
            h.evaluate(1),
            Err(SeriesError::NegativeValue { degree: 1, .. })
        ));
    }

    #[test]
    fn json_exchange_form() {
        let h = HilbertFunction::complete_intersection(3, &[3])
            .unwrap()
            .shift(2);
        let v = h.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"numerator":{"-2":"1","-1":"1","0":"1"},"denomPower":2}"#
        );
        assert_eq!(HilbertFunction::from_json(&v).unwrap(), h);
        let big = HilbertFunction::from_table(&BTreeMap::from([(0, binomial(200, 100))])).unwrap();
        assert_eq!(HilbertFunction::from_json(&big.to_json()).unwrap(), big);
        // non-canonical input is canonicalized
        let v: serde_json::Value =
            serde_json::from_str(r#"{"numerator":{"0":"1","1":"-1"},"denomPower":2}"#).unwrap();
        assert_eq!(
            HilbertFunction::from_json(&v).unwrap(),
            HilbertFunction::polynomial_ring(1).unwrap()
        );
        let bad: serde_json::Value =
            serde_json::from_str(r#"{"numerator":{},"denomPower":0}"#).unwrap();
        assert!(HilbertFunction::from_json(&bad).is_err());
        let bad: serde_json::Value =
            serde_json::from_str(r#"{"numerator":{"x":"1"},"denomPower":0}"#).unwrap();
        assert!(HilbertFunction::from_json(&bad).is_err());
    }

    fn arb_hilbert() -> impl Strategy<Value = HilbertFunction> {
        (
            -4i64..4,
            prop::collection::vec(0i64..6, 0..6),
            1i64..6,
            0u32..4,
        )
            .prop_map(|(k0, rest, first, p)| {
                let mut terms = vec![(k0, Integer::from(first))];
                terms.extend(
                    rest.into_iter()
                        .enumerate()
                        .map(|(i, c)| (k0 + 1 + i as i64, Integer::from(c))),
                );
                HilbertFunction::from_parts(LaurentPolynomial::from_terms(terms), p).unwrap()
            })
    }

    proptest! {
        #[test]
        fn evaluation_matches_series_oracle(h in arb_hilbert()) {
            let k0 = h.k0();
            prop_assert_eq!(h.values(k0 - 3, k0 + 25).unwrap(), series_oracle(&h, k0 - 3, k0 + 25));
        }

        #[test]
        fn vanishes_below_k0(h in arb_hilbert()) {
            let k0 = h.k0();
            for k in k0 - 10..k0 {
                prop_assert!(ev(&h, k).is_zero());
            }
            prop_assert!(ev(&h, k0).is_positive());
        }

        #[test]
        fn extension_is_prefix_sum(h in arb_hilbert()) {
            let e = h.extend();
            for k in h.k0() - 1..=h.k0() + 40 {
                prop_assert_eq!(ev(&e, k) - ev(&e, k - 1), ev(&h, k));
            }
        }

        #[test]
        fn addition_is_pointwise(a in arb_hilbert(), b in arb_hilbert()) {
            let s = a.add(&b);
            let lo = a.k0().min(b.k0());
            for k in lo..lo + 40 {
                prop_assert_eq!(ev(&s, k), ev(&a, k) + ev(&b, k));
            }
        }

        #[test]
        fn shifts_compose(h in arb_hilbert(), a in -6i64..6, b in -6i64..6) {
            prop_assert_eq!(h.shift(a).shift(b), h.shift(a + b));
            for k in -10..10 {
                prop_assert_eq!(ev(&h.shift(a), k), ev(&h, k + a));
            }
        }

        #[test]
        fn canonical_form_is_unique(h in arb_hilbert(), extra in 0u32..3) {
            let padded = &h.numerator * &LaurentPolynomial::one_minus_t_pow(extra);
            let again = HilbertFunction::from_parts(padded, h.denom_power + extra).unwrap();
            prop_assert_eq!(&again, &h);
            let twice = HilbertFunction::from_parts(again.numerator.clone(), again.denom_power).unwrap();
            prop_assert_eq!(twice, again);
        }

        #[test]
        fn free_single_summand_is_shift(n in 1u32..6, a in -5i64..5) {
            // h_{S(a)}(k) = h_S(k + a)
            prop_assert_eq!(
                HilbertFunction::free_module(n, &[a]).unwrap(),
                HilbertFunction::polynomial_ring(n).unwrap().shift(a)
            );
        }

        #[test]
        fn json_round_trip(h in arb_hilbert()) {
            prop_assert_eq!(HilbertFunction::from_json(&h.to_json()).unwrap(), h);
        }
    }
}
