//! Exact coefficients: Laurent polynomials, the field Q(q), and scalars with
//! adjoined character symbols.

mod laurent;
mod parse;
mod ratfunc;
mod symbolic;

use std::fmt;

pub use laurent::LaurentPoly;
pub use parse::{parse_rf, parse_symbolic};
pub use ratfunc::{q_diff, q_number, rational, RationalFunction};
pub use symbolic::SymbolicScalar;

/// Coefficient ring interface used by the algebra engine.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rf(c: RationalFunction) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &RationalFunction) -> Self;
    /// The value as an element of Q(q), if it is one.
    fn to_rf(&self) -> Option<RationalFunction>;

    fn q_pow(e: i64) -> Self {
        Self::from_rf(RationalFunction::q_pow(e))
    }

    fn mul_q_pow(&self, e: i64) -> Self {
        self.scale(&RationalFunction::q_pow(e))
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_rf(c: RationalFunction) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &RationalFunction) -> Self {
        self * c
    }
    fn to_rf(&self) -> Option<RationalFunction> {
        Some(self.clone())
    }
    fn mul_q_pow(&self, e: i64) -> Self {
        RationalFunction::mul_q_pow(self, e)
    }
}

impl Scalar for SymbolicScalar {
    fn zero() -> Self {
        SymbolicScalar::zero()
    }
    fn one() -> Self {
        SymbolicScalar::one()
    }
    fn from_rf(c: RationalFunction) -> Self {
        SymbolicScalar::from_rf(c)
    }
    fn is_zero(&self) -> bool {
        SymbolicScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        SymbolicScalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        SymbolicScalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        SymbolicScalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        SymbolicScalar::neg(self)
    }
    fn scale(&self, c: &RationalFunction) -> Self {
        SymbolicScalar::scale(self, c)
    }
    fn to_rf(&self) -> Option<RationalFunction> {
        self.as_rf()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp_strategy() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..5, -3i64..4), 0..4)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, rational(c, 1)))))
    }

    fn rf_strategy() -> impl Strategy<Value = RationalFunction> {
        (lp_strategy(), lp_strategy()).prop_map(|(n, d)| {
            let d = if d.is_zero() { LaurentPoly::one() } else { d };
            RationalFunction::new(n, d).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in lp_strategy(), b in lp_strategy(), c in lp_strategy()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn canonical_form_matches_cross_multiplication(a in rf_strategy(), b in rf_strategy()) {
            let cross = a.numerator() * b.denominator() == b.numerator() * a.denominator();
            prop_assert_eq!(cross, a == b);
        }

        #[test]
        fn field_division(a in rf_strategy(), b in rf_strategy()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            let s = &a + &b;
            prop_assert_eq!(&s - &b, a);
        }

        #[test]
        fn display_round_trip(a in rf_strategy()) {
            prop_assert_eq!(parse_rf(&a.to_string()).unwrap(), a);
        }
    }

    #[test]
    fn quantum_integers_at_one() {
        for n in -20..=20 {
            assert_eq!(q_number(n, 1).eval_at(&rational(1, 1)).unwrap(), rational(n, 1));
        }
    }

    #[test]
    fn quantum_integer_addition_identity() {
        let qd = q_diff(1);
        for m in 0..=10 {
            for n in 0..=10 {
                let lhs = &q_number(m + n, 1) * &qd;
                let rhs = &(&RationalFunction::q_pow(n) * &q_diff(m)) + &(&RationalFunction::q_pow(-m) * &q_diff(n));
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }
}
