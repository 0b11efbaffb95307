use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely from the lowest exponent upwards. The first and last
/// stored coefficients are nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: e, coeffs: vec![c] }
    }

    /// `q^e` with coefficient one.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out = &out + &Self::monomial(c, e);
        }
        out
    }

    fn from_dense(low: i64, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly { low: low + lead as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial is a single term `c q^e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn low_exp(&self) -> i64 {
        self.low
    }

    pub fn high_exp(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn lowest_coeff(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitute `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -self.high_exp(), coeffs }
    }

    /// Substitute `q -> q^d` for a positive `d`.
    pub fn dilate(&self, d: i64) -> Self {
        assert!(d > 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * d, c.clone())))
    }

    /// Evaluate at a nonzero rational point.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        assert!(!q0.is_zero() || self.low >= 0, "evaluation of q^-k at zero");
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        if self.low >= 0 {
            acc * pow_rat(q0, self.low as u64)
        } else {
            acc / pow_rat(q0, (-self.low) as u64)
        }
    }

    /// The same polynomial with the lowest exponent moved to zero, together
    /// with the exponent that was removed.
    pub fn strip(&self) -> (Self, i64) {
        (LaurentPoly { low: 0, coeffs: self.coeffs.clone() }, if self.is_zero() { 0 } else { self.low })
    }

    /// Division with remainder for ordinary polynomials (`low >= 0`).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        assert!(self.low >= 0 && d.low >= 0);
        let mut r = self.to_dense_from_zero();
        let dd = d.to_dense_from_zero();
        let dl = dd.len() - 1;
        if r.len() <= dl {
            return (Self::zero(), self.clone());
        }
        let lc = dd[dl].clone();
        let mut quot = vec![BigRational::zero(); r.len() - dl];
        for i in (dl..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] / &lc;
            for (j, c) in dd.iter().enumerate() {
                if !c.is_zero() {
                    let t = &f * c;
                    r[i - dl + j] -= t;
                }
            }
            quot[i - dl] = f;
        }
        (Self::from_dense(0, quot), Self::from_dense(0, r))
    }

    fn to_dense_from_zero(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.low as usize];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// Monic greatest common divisor of the stripped polynomials.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, _) = a.strip();
        let (mut y, _) = b.strip();
        if x.is_zero() {
            return y.monic();
        }
        if y.is_zero() {
            return x.monic();
        }
        if x.coeffs.len() < y.coeffs.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.coeffs.len() == 1 {
                return Self::one();
            }
            let (_, r) = x.div_rem(&y);
            let (r, _) = r.strip();
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&(BigRational::one() / lc))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

fn pow_rat(x: &BigRational, n: u64) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..n {
        out *= x;
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high_exp().max(o.high_exp());
        let mut v = vec![BigRational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(self.low - low) as usize + i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            v[(o.low - low) as usize + i] += c;
        }
        LaurentPoly::from_dense(low, v)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + o.low, v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q_pow(1)
    }

    #[test]
    fn sum_of_q_and_inverse() {
        let s = &q() + &LaurentPoly::q_pow(-1);
        assert_eq!(s.to_string(), "q + q^-1");
    }

    #[test]
    fn difference_of_squares() {
        let a = &q() - &LaurentPoly::q_pow(-1);
        let b = &q() + &LaurentPoly::q_pow(-1);
        assert_eq!(&a * &b, &LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-2));
    }

    #[test]
    fn cancellation_gives_empty_map() {
        let z = &LaurentPoly::one() + &LaurentPoly::from_int(-1);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(z.terms().count(), 0);
    }

    #[test]
    fn rendering_uses_descending_exponents() {
        let p = LaurentPoly::from_terms([(0, rat(-1)), (2, rat(1)), (-3, BigRational::new(3.into(), 2.into()))]);
        assert_eq!(p.to_string(), "q^2 - 1 + 3/2*q^-3");
    }

    #[test]
    fn division_with_remainder() {
        // (q^3 - 1) = (q - 1)(q^2 + q + 1)
        let a = &LaurentPoly::q_pow(3) - &LaurentPoly::one();
        let b = &q() - &LaurentPoly::one();
        let (d, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(d.to_string(), "q^2 + q + 1");
    }

    #[test]
    fn gcd_is_monic() {
        let a = (&LaurentPoly::q_pow(2) - &LaurentPoly::one()).scale(&rat(3));
        let b = (&q() + &LaurentPoly::one()).shift(-4);
        assert_eq!(LaurentPoly::gcd(&a, &b).to_string(), "q + 1");
    }

    #[test]
    fn evaluation() {
        let p = &q() + &LaurentPoly::q_pow(-1);
        assert_eq!(p.eval(&rat(2)), BigRational::new(5.into(), 2.into()));
    }
}
