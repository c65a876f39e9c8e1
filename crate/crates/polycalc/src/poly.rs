use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector under graded-lex order (total degree first, then lex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn unit(n: usize) -> Mono {
        Mono(vec![0; n])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            o => o,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over exact rationals in variables x1..xn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero(n: usize) -> Poly {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigRational) -> Poly {
        let mut p = Poly::zero(n);
        if !c.is_zero() {
            p.terms.insert(Mono::unit(n), c);
        }
        p
    }

    pub fn one(n: usize) -> Poly {
        Poly::constant(n, BigRational::one())
    }

    pub fn from_int(n: usize, v: i64) -> Poly {
        Poly::constant(n, BigRational::from_integer(BigInt::from(v)))
    }

    /// The variable x_{i+1} (zero-based index).
    pub fn var(n: usize, i: usize) -> Poly {
        assert!(i < n);
        let mut e = vec![0u16; n];
        e[i] = 1;
        let mut p = Poly::zero(n);
        p.terms.insert(Mono(e), BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Leading (graded-lex greatest) coefficient.
    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .last_key_value()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    fn insert_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "mixed variable counts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "mixed variable counts");
        let mut out = Poly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn partial(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut me = m.0.clone();
            me[var] -= 1;
            out.insert_term(Mono(me), c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.n);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64().unwrap_or(f64::NAN);
            for (i, &e) in m.0.iter().enumerate() {
                t *= point[i].powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Substitute univariate polynomials (in one parameter t) for each
    /// variable; the result is univariate. Used for pulling fields back
    /// along polynomial paths.
    pub fn compose_univariate(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.n);
        let mut acc = Poly::zero(1);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(1, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&subs[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Joint integer content data: (lcm of coefficient denominators,
    /// gcd of the resulting integer coefficients).
    pub fn content_parts(&self) -> (BigInt, BigInt) {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            let int_coeff = c.numer() * (&lcm / c.denom());
            gcd = num::integer::gcd(gcd, int_coeff);
        }
        (lcm, gcd.abs())
    }

    /// Per-variable minimum exponent across all terms (the monomial content).
    pub fn monomial_content(&self) -> Option<Mono> {
        if self.is_zero() {
            return None;
        }
        let mut min = vec![u16::MAX; self.n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                min[i] = min[i].min(e);
            }
        }
        Some(Mono(min))
    }

    pub fn divide_by_monomial(&self, m: &Mono) -> Poly {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| {
                    (
                        Mono(mm.0.iter().zip(&m.0).map(|(a, b)| a - b).collect()),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    /// Exact multivariate division self / q, None when q does not divide.
    /// Leading-term elimination in graded-lex order; no remainder tolerated.
    pub fn div_exact(&self, q: &Poly) -> Option<Poly> {
        assert_eq!(self.n, q.n);
        if q.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero(self.n));
        }
        let (qm, qc) = q.terms.last_key_value().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.n);
        while !rem.is_zero() {
            let (rm, rc) = rem.terms.last_key_value().map(|(m, c)| (m.clone(), c.clone()))?;
            if rm.0.iter().zip(&qm.0).any(|(a, b)| a < b) {
                return None;
            }
            let m = Mono(rm.0.iter().zip(&qm.0).map(|(a, b)| a - b).collect());
            let c = rc / &qc;
            let mut term = Poly::zero(self.n);
            term.terms.insert(m, c);
            rem = rem.sub(&term.mul(q));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// Derivative along a vector field given by coordinate components.
    pub fn directional(&self, comps: &[Poly]) -> Poly {
        let mut acc = Poly::zero(self.n);
        for (i, c) in comps.iter().enumerate() {
            acc = acc.add(&c.mul(&self.partial(i)));
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let ac = c.abs();
            let has_vars = m.total_degree() > 0;
            if !has_vars || !ac.is_one() {
                write!(f, "{}", ac)?;
                if has_vars {
                    write!(f, "*")?;
                }
            }
            let mut firstv = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !firstv {
                    write!(f, "*")?;
                }
                firstv = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_ordering() {
        // x1^2 > x1*x2 > x2^2 > x1 in graded-lex (higher degree first,
        // then lexicographic on exponents)
        let a = Mono(vec![2, 0]);
        let b = Mono(vec![1, 1]);
        let c = Mono(vec![0, 2]);
        let d = Mono(vec![1, 0]);
        assert!(a > b && b > c && c > d);
    }

    #[test]
    fn expand_square() {
        let n = 3;
        let p = Poly::var(n, 2).add(&Poly::one(n)); // 1 + x3
        let sq = p.pow(2);
        let expect = Poly::var(n, 2)
            .pow(2)
            .add(&Poly::var(n, 2).scale(&BigRational::from_integer(2.into())))
            .add(&Poly::one(n));
        assert_eq!(sq, expect);
    }

    #[test]
    fn partial_derivative() {
        let n = 2;
        // d/dx1 (x1^2 x2) = 2 x1 x2
        let p = Poly::var(n, 0).pow(2).mul(&Poly::var(n, 1));
        let d = p.partial(0);
        let expect = Poly::var(n, 0).mul(&Poly::var(n, 1)).scale(&BigRational::from_integer(2.into()));
        assert_eq!(d, expect);
    }
}
