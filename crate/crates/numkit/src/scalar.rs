use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    GaussRational,
    Float64,
}

/// One scalar value from one of the three backends.
///
/// Rationals are kept in lowest terms with positive denominator (the
/// `BigRational` constructor enforces this); Gaussian rationals store real
/// and imaginary part under the same invariant. Arithmetic between distinct
/// backends is a programming error and panics: every public kernel checks
/// backends up front and returns `NumError::MixedBackend` instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rat(BigRational),
    Gauss(BigRational, BigRational),
    F64(f64),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rat(_) => Backend::Rational,
            Scalar::Gauss(_, _) => Backend::GaussRational,
            Scalar::F64(_) => Backend::Float64,
        }
    }

    pub fn zero(backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rat(BigRational::zero()),
            Backend::GaussRational => Scalar::Gauss(BigRational::zero(), BigRational::zero()),
            Backend::Float64 => Scalar::F64(0.0),
        }
    }

    pub fn one(backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rat(BigRational::one()),
            Backend::GaussRational => Scalar::Gauss(BigRational::one(), BigRational::zero()),
            Backend::Float64 => Scalar::F64(1.0),
        }
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn rat(p: i64, q: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn gauss(re: BigRational, im: BigRational) -> Scalar {
        Scalar::Gauss(re, im)
    }

    pub fn gauss_i() -> Scalar {
        Scalar::Gauss(BigRational::zero(), BigRational::one())
    }

    pub fn from_big(r: BigRational) -> Scalar {
        Scalar::Rat(r)
    }

    pub fn as_rat(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Gauss(re, _) => re.to_f64().unwrap_or(f64::NAN),
            Scalar::F64(x) => *x,
        }
    }

    /// Exact zero test for exact backends; floats compare against `tol`.
    pub fn is_zero_tol(&self, tol: f64) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Gauss(a, b) => a.is_zero() && b.is_zero(),
            Scalar::F64(x) => x.abs() <= tol,
        }
    }

    /// Zero test on exact backends only; panics on the float backend, which
    /// must always supply a tolerance.
    pub fn is_zero_exact(&self) -> bool {
        match self {
            Scalar::F64(_) => panic!("float zero test without tolerance"),
            other => other.is_zero_tol(0.0),
        }
    }

    /// Pivot magnitude used for float pivoting; exact backends only need a
    /// nonzero test so any positive stand-in works.
    pub fn pivot_size(&self) -> f64 {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    0.0
                } else {
                    1.0
                }
            }
            Scalar::Gauss(a, b) => {
                if a.is_zero() && b.is_zero() {
                    0.0
                } else {
                    1.0
                }
            }
            Scalar::F64(x) => x.abs(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r.clone()),
            Scalar::Gauss(a, b) => Scalar::Gauss(-a.clone(), -b.clone()),
            Scalar::F64(x) => Scalar::F64(-x),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Gauss(a, b), Scalar::Gauss(c, d)) => Scalar::Gauss(a + c, b + d),
            (Scalar::F64(a), Scalar::F64(b)) => Scalar::F64(a + b),
            (a, b) => panic!("mixed backends in add: {:?} vs {:?}", a.backend(), b.backend()),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Gauss(a, b), Scalar::Gauss(c, d)) => {
                Scalar::Gauss(a * c - b * d, a * d + b * c)
            }
            (Scalar::F64(a), Scalar::F64(b)) => Scalar::F64(a * b),
            (a, b) => panic!("mixed backends in mul: {:?} vs {:?}", a.backend(), b.backend()),
        }
    }

    /// Exact division; the caller guarantees a nonzero divisor.
    pub fn div(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a / b),
            (Scalar::Gauss(a, b), Scalar::Gauss(c, d)) => {
                let n = c * c + d * d;
                Scalar::Gauss((a * c + b * d) / &n, (b * c - a * d) / &n)
            }
            (Scalar::F64(a), Scalar::F64(b)) => Scalar::F64(a / b),
            (a, b) => panic!("mixed backends in div: {:?} vs {:?}", a.backend(), b.backend()),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Gauss(a, b) => Scalar::Gauss(a.clone(), -b.clone()),
            other => other.clone(),
        }
    }

    /// Lift a scalar into the Gaussian backend (rationals embed as a+0i).
    pub fn to_gauss(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Gauss(r.clone(), BigRational::zero()),
            other => other.clone(),
        }
    }

    /// Exact square root of a nonnegative rational, when it exists.
    pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
        if r.is_negative() {
            return None;
        }
        let (n, d) = (r.numer().clone(), r.denom().clone());
        let sn = n.sqrt();
        let sd = d.sqrt();
        if &sn * &sn == n && &sd * &sd == d {
            Some(BigRational::new(sn, sd))
        } else {
            None
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Gauss(a, b) => {
                if b.is_zero() {
                    write!(f, "{}", a)
                } else if a.is_zero() {
                    write!(f, "{}i", b)
                } else {
                    write!(f, "{}{}{}i", a, if b.is_negative() { "" } else { "+" }, b)
                }
            }
            Scalar::F64(x) => write!(f, "{}", x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let s = Scalar::rat(6, -4);
        match s {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn gauss_mul_div_roundtrip() {
        let a = Scalar::gauss(BigRational::new(1.into(), 2.into()), BigRational::from_integer(3.into()));
        let b = Scalar::gauss(BigRational::from_integer((-2).into()), BigRational::new(1.into(), 5.into()));
        let p = a.mul(&b);
        let q = p.div(&b);
        assert_eq!(q, a);
    }

    #[test]
    fn sqrt_detects_perfect_squares() {
        let r = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(
            Scalar::rational_sqrt(&r),
            Some(BigRational::new(BigInt::from(3), BigInt::from(2)))
        );
        assert_eq!(Scalar::rational_sqrt(&BigRational::from_integer(2.into())), None);
    }
}
