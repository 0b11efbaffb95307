use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Element of the rational function field Q(q).
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient one, coprime to the numerator.
/// All powers of `q` are carried by the numerator, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(r))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Build `num/den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (d, k) = den.strip();
        let num = num.shift(-k);
        if d.is_monomial() {
            let c = d.leading_coeff();
            return RationalFunction { num: num.scale(&(BigRational::one() / c)), den: LaurentPoly::one() };
        }
        let g = LaurentPoly::gcd(&num, &d);
        let (num, d) = if g.is_one() {
            (num, d)
        } else {
            let (ns, nk) = num.strip();
            let (nq, nr) = ns.div_rem(&g);
            let (dq, dr) = d.div_rem(&g);
            debug_assert!(nr.is_zero() && dr.is_zero());
            (nq.shift(nk), dq)
        };
        let lc = d.leading_coeff();
        if lc.is_one() {
            RationalFunction { num, den: d }
        } else {
            let inv = BigRational::one() / lc;
            RationalFunction { num: num.scale(&inv), den: d.scale(&inv) }
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Returns the exponent `e` when the value is exactly `q^e`.
    pub fn as_q_power(&self) -> Option<i64> {
        if self.den.is_one() && self.num.is_monomial() && self.num.leading_coeff().is_one() {
            Some(self.num.low_exp())
        } else {
            None
        }
    }

    /// Returns the rational constant when the value does not depend on `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_q_pow(&self, e: i64) -> Self {
        RationalFunction { num: self.num.shift(e), den: self.den.clone() }
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Substitute `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self::normalize(self.num.invert_q(), self.den.invert_q())
    }

    /// Exact value at a rational point.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::Pole("0".into()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }
}

/// The quantum integer `[n]` at `q^d`.
pub fn q_number(n: i64, d: i64) -> RationalFunction {
    assert!(d > 0, "q_number needs a positive dilation");
    if n < 0 {
        return -&q_number(-n, d);
    }
    let terms = (0..n).map(|k| (d * (n - 1 - 2 * k), BigRational::one()));
    RationalFunction::from_poly(LaurentPoly::from_terms(terms))
}

/// `q^d - q^{-d}`.
pub fn q_diff(d: i64) -> RationalFunction {
    RationalFunction::from_poly(&LaurentPoly::q_pow(d) - &LaurentPoly::q_pow(-d))
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RF({self})")
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = &self.num + &o.num;
            if self.den.is_one() {
                return RationalFunction { num, den: LaurentPoly::one() };
            }
            return RationalFunction::normalize(num, self.den.clone());
        }
        let g = LaurentPoly::gcd(&self.den, &o.den);
        let (a, _) = self.den.div_rem(&g);
        let (b, _) = o.den.div_rem(&g);
        let num = &(&self.num * &b) + &(&o.num * &a);
        RationalFunction::normalize(num, &a * &o.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RationalFunction { num: &self.num * &o.num, den: LaurentPoly::one() };
        }
        if self.num.is_monomial() && o.num.is_monomial() {
            // monomial numerators cannot share factors with the denominators
            let den = &self.den * &o.den;
            return RationalFunction { num: &self.num * &o.num, den };
        }
        RationalFunction::normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self.checked_div(o).expect("rational function division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
