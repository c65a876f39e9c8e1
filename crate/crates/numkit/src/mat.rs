use crate::scalar::{Backend, Scalar};
use crate::subspace::SubspaceBasis;
use crate::{NumError, Result, DEFAULT_TOL};
use std::fmt;

/// Dense matrix over one scalar backend, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    backend: Backend,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        assert!(r > 0, "empty matrix");
        let c = rows[0].len();
        let backend = rows[0][0].backend();
        let mut entries = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(NumError::DimMismatch("ragged rows".into()));
            }
            for e in row {
                if e.backend() != backend {
                    return Err(NumError::MixedBackend(backend, e.backend()));
                }
                entries.push(e.clone());
            }
        }
        Ok(Mat { rows: r, cols: c, backend, entries })
    }

    /// Convenience constructor from integer entries (rational backend).
    pub fn from_i64(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    pub fn zeros(rows: usize, cols: usize, backend: Backend) -> Mat {
        Mat {
            rows,
            cols,
            backend,
            entries: vec![Scalar::zero(backend); rows * cols],
        }
    }

    pub fn identity(n: usize, backend: Backend) -> Mat {
        let mut m = Mat::zeros(n, n, backend);
        for i in 0..n {
            m.set(i, i, Scalar::one(backend));
        }
        m
    }

    pub fn construct(rows: usize, cols: usize, backend: Backend, f: impl Fn(usize, usize) -> Scalar) -> Mat {
        let mut m = Mat::zeros(rows, cols, backend);
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

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.backend(), self.backend, "backend mismatch in set");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::construct(self.cols, self.rows, self.backend, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat> {
        self.check_same_shape(rhs)?;
        Ok(Mat::construct(self.rows, self.cols, self.backend, |i, j| {
            self.at(i, j).add(rhs.at(i, j))
        }))
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat> {
        self.check_same_shape(rhs)?;
        Ok(Mat::construct(self.rows, self.cols, self.backend, |i, j| {
            self.at(i, j).sub(rhs.at(i, j))
        }))
    }

    pub fn neg(&self) -> Mat {
        Mat::construct(self.rows, self.cols, self.backend, |i, j| self.at(i, j).neg())
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        assert_eq!(c.backend(), self.backend, "backend mismatch in scale");
        Mat::construct(self.rows, self.cols, self.backend, |i, j| self.at(i, j).mul(c))
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.backend != rhs.backend {
            return Err(NumError::MixedBackend(self.backend, rhs.backend));
        }
        if self.cols != rhs.rows {
            return Err(NumError::DimMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols, self.backend);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                // structural-zero skip: the spin/holonomy matrices are very
                // sparse and this turns cubic work into nnz-proportional work
                if a.is_zero_tol(0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero_tol(0.0) {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &Mat) -> Result<Mat> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.backend);
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| e.is_zero_tol(tol))
    }

    pub fn is_zero_exact(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero_exact())
    }

    /// Row-major flattening, used to treat matrices as span vectors.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_flat(n_rows: usize, n_cols: usize, v: &[Scalar]) -> Mat {
        assert_eq!(v.len(), n_rows * n_cols);
        let backend = v[0].backend();
        Mat {
            rows: n_rows,
            cols: n_cols,
            backend,
            entries: v.to_vec(),
        }
    }

    pub fn map_to_gauss(&self) -> Mat {
        Mat::construct(self.rows, self.cols, Backend::GaussRational, |i, j| {
            self.at(i, j).to_gauss()
        })
    }

    pub fn map_to_f64(&self) -> Mat {
        Mat::construct(self.rows, self.cols, Backend::Float64, |i, j| {
            Scalar::F64(self.at(i, j).to_f64())
        })
    }

    fn check_same_shape(&self, rhs: &Mat) -> Result<()> {
        if self.backend != rhs.backend {
            return Err(NumError::MixedBackend(self.backend, rhs.backend));
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(NumError::DimMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    fn tol_for(&self, tol: Option<f64>) -> Result<f64> {
        match (self.backend, tol) {
            (Backend::Float64, None) => Err(NumError::MissingTolerance),
            (Backend::Float64, Some(t)) => Ok(t),
            (_, t) => Ok(t.unwrap_or(0.0)),
        }
    }

    /// Rank and right nullspace. Exact backends run fraction-free (Bareiss
    /// style) elimination so intermediate entries stay determinant-sized;
    /// the float backend runs partial-pivot elimination with `|pivot| <= tol`
    /// treated as zero (`tol` is then mandatory).
    pub fn rank_nullspace(&self, tol: Option<f64>) -> Result<(usize, SubspaceBasis)> {
        let tol = self.tol_for(tol)?;
        let exact = self.backend != Backend::Float64;
        let mut a = self.entries.clone();
        let (n_rows, n_cols) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * n_cols + j;

        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        let mut prev = Scalar::one(self.backend);
        for col in 0..n_cols {
            // pick pivot row
            let mut best: Option<(usize, f64)> = None;
            for r in rank..n_rows {
                let size = a[idx(r, col)].pivot_size();
                if size > tol {
                    match best {
                        Some((_, s)) if s >= size => {}
                        _ => best = Some((r, size)),
                    }
                    if exact {
                        break; // any nonzero pivot is fine for exact arithmetic
                    }
                }
            }
            let Some((prow, _)) = best else { continue };
            if prow != rank {
                for j in 0..n_cols {
                    a.swap(idx(prow, j), idx(rank, j));
                }
            }
            let p = a[idx(rank, col)].clone();
            for r in (rank + 1)..n_rows {
                let f = a[idx(r, col)].clone();
                for j in 0..n_cols {
                    let v = if exact {
                        // Bareiss step: (p*a[r][j] - f*a[rank][j]) / prev
                        p.mul(&a[idx(r, j)])
                            .sub(&f.mul(&a[idx(rank, j)]))
                            .div(&prev)
                    } else {
                        a[idx(r, j)].sub(&f.div(&p).mul(&a[idx(rank, j)]))
                    };
                    a[idx(r, j)] = v;
                }
            }
            prev = p;
            pivot_cols.push(col);
            rank += 1;
            if rank == n_rows {
                break;
            }
        }

        // Back-substitute for the nullspace: one vector per free column.
        let free_cols: Vec<usize> = (0..n_cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis: Vec<Vec<Scalar>> = Vec::new();
        for &fc in &free_cols {
            let mut v = vec![Scalar::zero(self.backend); n_cols];
            v[fc] = Scalar::one(self.backend);
            // rows are in echelon order; solve from the bottom up
            for r in (0..rank).rev() {
                let pc = pivot_cols[r];
                if pc > fc {
                    continue;
                }
                let mut acc = Scalar::zero(self.backend);
                for j in (pc + 1)..n_cols {
                    if !v[j].is_zero_tol(tol) {
                        acc = acc.add(&a[idx(r, j)].mul(&v[j]));
                    }
                }
                v[pc] = acc.neg().div(&a[idx(r, pc)]);
            }
            basis.push(v);
        }
        let ns = SubspaceBasis::from_vectors(n_cols, basis, tol);
        Ok((rank, ns))
    }

    /// Exact inverse (identity augmentation, Gauss-Jordan). Float input uses
    /// partial pivoting with the default tolerance.
    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(NumError::DimMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let tol = if self.backend == Backend::Float64 { DEFAULT_TOL } else { 0.0 };
        let mut a = self.clone();
        let mut inv = Mat::identity(n, self.backend);
        for col in 0..n {
            let mut prow = None;
            let mut best = tol;
            for r in col..n {
                let s = a.at(r, col).pivot_size();
                if s > best {
                    prow = Some(r);
                    best = s;
                    if self.backend != Backend::Float64 {
                        break;
                    }
                }
            }
            let Some(prow) = prow else {
                return Err(NumError::Singular);
            };
            if prow != col {
                for j in 0..n {
                    let t = a.at(prow, j).clone();
                    a.set(prow, j, a.at(col, j).clone());
                    a.set(col, j, t);
                    let t = inv.at(prow, j).clone();
                    inv.set(prow, j, inv.at(col, j).clone());
                    inv.set(col, j, t);
                }
            }
            let p = a.at(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.at(col, j).div(&p));
                inv.set(col, j, inv.at(col, j).div(&p));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.at(r, col).clone();
                if f.is_zero_tol(tol) {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.at(r, j).sub(&f.mul(a.at(col, j))));
                    inv.set(r, j, inv.at(r, j).sub(&f.mul(inv.at(col, j))));
                }
            }
        }
        Ok(inv)
    }

    /// Solve self * x = b for a single right-hand side (exact backends).
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        let inv = self.inverse()?;
        let bm = Mat::from_rows(b.iter().map(|s| vec![s.clone()]).collect())?;
        let x = inv.mul(&bm)?;
        Ok((0..x.rows()).map(|i| x.at(i, 0).clone()).collect())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_nullspace_identity_and_zero() {
        let id = Mat::identity(2, Backend::Rational);
        let (r, ns) = id.rank_nullspace(None).unwrap();
        assert_eq!((r, ns.dim()), (2, 0));

        let z = Mat::zeros(2, 2, Backend::Rational);
        let (r, ns) = z.rank_nullspace(None).unwrap();
        assert_eq!((r, ns.dim()), (0, 2));
    }

    #[test]
    fn rank_nullspace_derived_example() {
        // [[1,2,3],[2,4,6],[0,1,1]]: rank 2, nullspace spanned by (-1,-1,1).
        // Oracle: brute-force minor scan done by hand; all 3x3 minors vanish,
        // the top-left 2x2 minor of rows {0,2} is nonzero.
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let (r, ns) = m.rank_nullspace(None).unwrap();
        assert_eq!(r, 2);
        assert_eq!(ns.dim(), 1);
        let v = vec![Scalar::from_int(-1), Scalar::from_int(-1), Scalar::from_int(1)];
        assert!(ns.contains(&v, 0.0));
    }

    #[test]
    fn rank_requires_tol_for_floats() {
        let m = Mat::construct(2, 2, Backend::Float64, |i, j| {
            Scalar::F64(if i == j { 1.0 } else { 0.0 })
        });
        assert!(matches!(m.rank_nullspace(None), Err(NumError::MissingTolerance)));
        assert_eq!(m.rank_nullspace(Some(1e-9)).unwrap().0, 2);
    }

    #[test]
    fn inverse_symplectic_blocks() {
        // [[0,1],[-1,0]] -> [[0,-1],[1,0]]
        let j = Mat::from_i64(&[&[0, 1], &[-1, 0]]);
        let jinv = j.inverse().unwrap();
        assert_eq!(jinv, Mat::from_i64(&[&[0, -1], &[1, 0]]));

        // block [[0,I3],[-I3,0]] -> [[0,-I3],[I3,0]], checked by multiplying.
        let m = 3;
        let b = Mat::construct(2 * m, 2 * m, Backend::Rational, |i, j| {
            if i < m && j == i + m {
                Scalar::from_int(1)
            } else if i >= m && j + m == i {
                Scalar::from_int(-1)
            } else {
                Scalar::from_int(0)
            }
        });
        let binv = b.inverse().unwrap();
        assert_eq!(b.mul(&binv).unwrap(), Mat::identity(2 * m, Backend::Rational));
        assert_eq!(binv, b.neg());
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = Mat::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(m.inverse(), Err(NumError::Singular)));
    }

    #[test]
    fn mixed_backend_rejected() {
        let rows = vec![vec![Scalar::from_int(1), Scalar::F64(2.0)]];
        assert!(matches!(Mat::from_rows(rows), Err(NumError::MixedBackend(_, _))));
    }

    #[test]
    fn float_rank_matches_rational_rank() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let (r_exact, _) = m.rank_nullspace(None).unwrap();
        let (r_float, _) = m.map_to_f64().rank_nullspace(Some(1e-9)).unwrap();
        assert_eq!(r_exact, r_float);
    }
}
