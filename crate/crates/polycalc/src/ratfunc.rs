use crate::poly::{Mono, Poly};
use crate::CalcError;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;

/// Default degree guard: computations whose numerator or denominator exceed
/// this total degree abort with DEGREE_OVERFLOW instead of thrashing.
pub const DEGREE_GUARD: u32 = 64;

/// Rational function num/den over exact rationals.
///
/// Normal form: denominator nonzero, joint integer content one, denominator
/// leading coefficient (graded-lex) positive, and common monomial factors
/// cancelled. No full multivariate gcd is attempted; equality goes through
/// cross-multiplied expansion, which stays exact regardless.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn from_poly(num: Poly) -> RatFunc {
        let n = num.nvars();
        RatFunc { num, den: Poly::one(n) }.normalized()
    }

    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, CalcError> {
        if den.is_zero() {
            return Err(CalcError::DivideByZeroPoly);
        }
        Ok(RatFunc { num, den }.normalized())
    }

    pub fn zero(n: usize) -> RatFunc {
        RatFunc::from_poly(Poly::zero(n))
    }

    pub fn one(n: usize) -> RatFunc {
        RatFunc::from_poly(Poly::one(n))
    }

    pub fn constant(n: usize, c: BigRational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(n, c))
    }

    pub fn from_int(n: usize, v: i64) -> RatFunc {
        RatFunc::from_poly(Poly::from_int(n, v))
    }

    pub fn var(n: usize, i: usize) -> RatFunc {
        RatFunc::from_poly(Poly::var(n, i))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalized(mut self) -> RatFunc {
        if self.num.is_zero() {
            return RatFunc { num: Poly::zero(self.den.nvars()), den: Poly::one(self.den.nvars()) };
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = Poly::one(self.den.nvars());
        } else if let Some(q) = self.den.div_exact(&self.num) {
            // num/(num*q) = 1/q
            self.den = q;
            self.num = Poly::one(self.num.nvars());
        }
        // cancel common monomial factors
        let mn = self.num.monomial_content().unwrap();
        let md = self.den.monomial_content().unwrap();
        let common = Mono(mn.0.iter().zip(&md.0).map(|(a, b)| (*a).min(*b)).collect());
        if common.total_degree() > 0 {
            self.num = self.num.divide_by_monomial(&common);
            self.den = self.den.divide_by_monomial(&common);
        }
        // joint integer content
        let (ln, gn) = self.num.content_parts();
        let (ld, gd) = self.den.content_parts();
        let l = num::integer::lcm(ln, ld);
        let g = num::integer::gcd(gn, gd);
        let factor = BigRational::new(l, if g.is_zero() { BigInt::one() } else { g });
        self.num = self.num.scale(&factor);
        self.den = self.den.scale(&factor);
        if self.den.leading_coeff().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        self
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // exact-division fast paths keep iterated sums from squaring the
        // denominator (this is not a gcd; common denominators simply reuse)
        if self.den == rhs.den {
            return RatFunc { num: self.num.add(&rhs.num), den: self.den.clone() }.normalized();
        }
        if let Some(q) = rhs.den.div_exact(&self.den) {
            let num = self.num.mul(&q).add(&rhs.num);
            return RatFunc { num, den: rhs.den.clone() }.normalized();
        }
        if let Some(q) = self.den.div_exact(&rhs.den) {
            let num = self.num.add(&rhs.num.mul(&q));
            return RatFunc { num, den: self.den.clone() }.normalized();
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFunc { num, den }.normalized()
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        // cross-cancel exact divisors before expanding
        let (mut a, mut b, mut c, mut d) =
            (self.num.clone(), self.den.clone(), rhs.num.clone(), rhs.den.clone());
        if let Some(q) = a.div_exact(&d) {
            a = q;
            d = Poly::one(d.nvars());
        }
        if let Some(q) = c.div_exact(&b) {
            c = q;
            b = Poly::one(b.nvars());
        }
        RatFunc { num: a.mul(&c), den: b.mul(&d) }.normalized()
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, CalcError> {
        if rhs.is_zero() {
            return Err(CalcError::DivideByZeroPoly);
        }
        Ok(RatFunc { num: self.num.mul(&rhs.den), den: self.den.mul(&rhs.num) }.normalized())
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }.normalized()
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }.normalized()
    }

    /// Exact equality by cross-multiplied expansion.
    pub fn eq_exact(&self, rhs: &RatFunc) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    /// Quotient-rule partial derivative.
    pub fn partial(&self, var: usize) -> RatFunc {
        let num = self.num.partial(var).mul(&self.den).sub(&self.num.mul(&self.den.partial(var)));
        let den = self.den.mul(&self.den);
        RatFunc { num, den }.normalized()
    }

    /// Derivative along a vector field with RatFunc coordinate components.
    pub fn directional(&self, comps: &[RatFunc]) -> RatFunc {
        let mut acc = RatFunc::zero(self.nvars());
        for (i, c) in comps.iter().enumerate() {
            acc = acc.add(&c.mul(&self.partial(i)));
        }
        acc
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, CalcError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(CalcError::PoleAtPoint(format!("denominator {} vanishes", self.den)));
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.num.eval_f64(point) / self.den.eval_f64(point)
    }

    /// Pull back along a polynomial path: returns (num(t), den(t)).
    pub fn compose_univariate(&self, subs: &[Poly]) -> (Poly, Poly) {
        (self.num.compose_univariate(subs), self.den.compose_univariate(subs))
    }

    pub fn max_degree(&self) -> u32 {
        self.num.total_degree().max(self.den.total_degree())
    }

    pub fn check_degree(&self, limit: u32) -> Result<(), CalcError> {
        if self.max_degree() > limit {
            Err(CalcError::DegreeOverflow { degree: self.max_degree(), limit })
        } else {
            Ok(())
        }
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.num.terms().any(|(m, _)| m.0[var] > 0) || self.den.terms().any(|(m, _)| m.0[var] > 0)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match (self.num.constant_value(), self.den.constant_value()) {
            (Some(a), Some(b)) if !b.is_zero() => Some(a / b),
            _ => None,
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.eq_exact(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_value().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_sign_and_content() {
        let n = 1;
        // (2x)/( -4 + 2x ) -> denominator leading coeff positive, content 1
        let num = Poly::var(n, 0).scale(&BigRational::from_integer(2.into()));
        let den = Poly::var(n, 0)
            .scale(&BigRational::from_integer(2.into()))
            .add(&Poly::from_int(n, -4));
        let r = RatFunc::new(num, den).unwrap();
        assert!(!r.denominator().leading_coeff().is_negative());
        let (_, g) = r.numerator().content_parts();
        let (_, gd) = r.denominator().content_parts();
        assert!(num::integer::gcd(g, gd).is_one());
    }

    #[test]
    fn cross_multiplied_equality() {
        let n = 2;
        // x1/x2 == (x1*x2)/(x2^2) without any gcd computation
        let a = RatFunc::new(Poly::var(n, 0), Poly::var(n, 1)).unwrap();
        let b = RatFunc::new(
            Poly::var(n, 0).mul(&Poly::var(n, 1)),
            Poly::var(n, 1).mul(&Poly::var(n, 1)),
        )
        .unwrap();
        assert!(a.eq_exact(&b));
    }

    #[test]
    fn pole_detection() {
        let n = 2;
        let r = RatFunc::new(Poly::var(n, 0), Poly::var(n, 1).add(&Poly::one(n))).unwrap();
        let p = vec![BigRational::from_integer(2.into()), BigRational::from_integer((-1).into())];
        assert!(matches!(r.eval(&p), Err(CalcError::PoleAtPoint(_))));
        let q = vec![BigRational::from_integer(2.into()), BigRational::from_integer(1.into())];
        assert_eq!(r.eval(&q).unwrap(), BigRational::from_integer(1.into()));
    }
}
