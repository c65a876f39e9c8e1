use crate::ratfunc::RatFunc;
use crate::CalcError;
use num::rational::BigRational;
use numkit::{Backend, Mat, Scalar};

/// Dense matrix of rational functions; the workhorse for symbolic frame
/// tensors (metric, connection coefficients, curvature).
#[derive(Debug, Clone, PartialEq)]
pub struct RfMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<RatFunc>,
}

impl RfMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> RfMatrix {
        RfMatrix { rows, cols, nvars, entries: vec![RatFunc::zero(nvars); rows * cols] }
    }

    pub fn identity(n: usize, nvars: usize) -> RfMatrix {
        let mut m = RfMatrix::zeros(n, n, nvars);
        for i in 0..n {
            m.set(i, i, RatFunc::one(nvars));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, nvars: usize, f: impl Fn(usize, usize) -> RatFunc) -> RfMatrix {
        let mut m = RfMatrix::zeros(rows, cols, nvars);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn add(&self, rhs: &RfMatrix) -> RfMatrix {
        RfMatrix::from_fn(self.rows, self.cols, self.nvars, |i, j| self.at(i, j).add(rhs.at(i, j)))
    }

    pub fn sub(&self, rhs: &RfMatrix) -> RfMatrix {
        RfMatrix::from_fn(self.rows, self.cols, self.nvars, |i, j| self.at(i, j).sub(rhs.at(i, j)))
    }

    pub fn neg(&self) -> RfMatrix {
        RfMatrix::from_fn(self.rows, self.cols, self.nvars, |i, j| self.at(i, j).neg())
    }

    pub fn scale(&self, f: &RatFunc) -> RfMatrix {
        RfMatrix::from_fn(self.rows, self.cols, self.nvars, |i, j| self.at(i, j).mul(f))
    }

    pub fn mul(&self, rhs: &RfMatrix) -> RfMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = RfMatrix::zeros(self.rows, rhs.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = RatFunc::zero(self.nvars);
                for k in 0..self.cols {
                    if self.at(i, k).is_zero() || rhs.at(k, j).is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.at(i, k).mul(rhs.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &RfMatrix) -> RfMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> RfMatrix {
        RfMatrix::from_fn(self.cols, self.rows, self.nvars, |i, j| self.at(j, i).clone())
    }

    pub fn trace(&self) -> RatFunc {
        let mut acc = RatFunc::zero(self.nvars);
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Entry-wise partial derivative.
    pub fn partial(&self, var: usize) -> RfMatrix {
        RfMatrix::from_fn(self.rows, self.cols, self.nvars, |i, j| self.at(i, j).partial(var))
    }

    /// Entry-wise derivative along a vector field (coordinate components).
    pub fn directional(&self, comps: &[RatFunc]) -> RfMatrix {
        RfMatrix::from_fn(self.rows, self.cols, self.nvars, |i, j| self.at(i, j).directional(comps))
    }

    /// Exact Gauss-Jordan inverse over the rational-function field.
    pub fn inverse(&self) -> Result<RfMatrix, CalcError> {
        assert!(self.rows == self.cols, "inverse of non-square RfMatrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RfMatrix::identity(n, self.nvars);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a.at(r, col).is_zero());
            let Some(pr) = pivot_row else {
                return Err(CalcError::SingularMatrix);
            };
            if pr != col {
                for j in 0..n {
                    let t = a.at(pr, j).clone();
                    a.set(pr, j, a.at(col, j).clone());
                    a.set(col, j, t);
                    let t = inv.at(pr, j).clone();
                    inv.set(pr, j, inv.at(col, j).clone());
                    inv.set(col, j, t);
                }
            }
            let p = a.at(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.at(col, j).div(&p)?);
                inv.set(col, j, inv.at(col, j).div(&p)?);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for j in 0..n {
                    let va = a.at(col, j).mul(&f);
                    a.set(r, j, a.at(r, j).sub(&va));
                    let vi = inv.at(col, j).mul(&f);
                    inv.set(r, j, inv.at(r, j).sub(&vi));
                }
            }
        }
        Ok(inv)
    }

    /// Determinant by fraction-field elimination.
    pub fn det(&self) -> RatFunc {
        assert!(self.rows == self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = RatFunc::one(self.nvars);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a.at(r, col).is_zero());
            let Some(pr) = pivot_row else {
                return RatFunc::zero(self.nvars);
            };
            if pr != col {
                det = det.neg();
                for j in 0..n {
                    let t = a.at(pr, j).clone();
                    a.set(pr, j, a.at(col, j).clone());
                    a.set(col, j, t);
                }
            }
            let p = a.at(col, col).clone();
            det = det.mul(&p);
            for r in (col + 1)..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).div(&p).unwrap();
                for j in col..n {
                    let v = a.at(col, j).mul(&f);
                    a.set(r, j, a.at(r, j).sub(&v));
                }
            }
        }
        det
    }

    pub fn eval(&self, p: &[BigRational]) -> Result<Mat, CalcError> {
        let mut out = Mat::zeros(self.rows, self.cols, Backend::Rational);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, Scalar::Rat(self.at(i, j).eval(p)?));
            }
        }
        Ok(out)
    }

    pub fn eval_f64(&self, p: &[f64]) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).eval_f64(p)).collect())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.iter().map(|e| e.max_degree()).max().unwrap_or(0)
    }

    pub fn check_degree(&self, limit: u32) -> Result<(), CalcError> {
        for e in &self.entries {
            e.check_degree(limit)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn symbolic_inverse_roundtrip() {
        let n = 2;
        // [[1, x1],[0, 1+x2]]
        let mut m = RfMatrix::identity(2, n);
        m.set(0, 1, RatFunc::from_poly(Poly::var(n, 0)));
        m.set(1, 1, RatFunc::from_poly(Poly::var(n, 1).add(&Poly::one(n))));
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv);
        assert_eq!(prod, RfMatrix::identity(2, n));
    }

    #[test]
    fn determinant_of_triangular() {
        let n = 1;
        let mut m = RfMatrix::identity(3, n);
        m.set(1, 1, RatFunc::from_poly(Poly::var(n, 0)));
        m.set(0, 2, RatFunc::from_int(n, 5));
        assert!(m.det().eq_exact(&RatFunc::from_poly(Poly::var(n, 0))));
    }
}
