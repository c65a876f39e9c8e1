use crate::LieError;
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use numkit::{Backend, Mat, Scalar, SubspaceBasis};

/// Structure constants C^k_{ij} of a finite-dimensional real Lie algebra,
/// stored dense over exact rationals, antisymmetric in (i,j) by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebraTable {
    dim: usize,
    c: Vec<BigRational>, // (i*dim + j)*dim + k
    pub labels: Option<Vec<String>>,
}

impl LieAlgebraTable {
    pub fn zero(dim: usize) -> LieAlgebraTable {
        LieAlgebraTable { dim, c: vec![BigRational::zero(); dim * dim * dim], labels: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Set C^k_{ij} and C^k_{ji} = -C^k_{ij} together.
    pub fn set_c(&mut self, i: usize, j: usize, k: usize, v: BigRational) {
        assert!(i != j || v.is_zero(), "diagonal structure constant must vanish");
        self.c[(i * self.dim + j) * self.dim + k] = v.clone();
        if i != j {
            self.c[(j * self.dim + i) * self.dim + k] = -v;
        }
    }

    /// Build from a sparse list of (i, j, k, C^k_{ij}) with i < j.
    pub fn from_sparse(
        dim: usize,
        entries: &[(usize, usize, usize, BigRational)],
        check_jacobi: bool,
    ) -> Result<LieAlgebraTable, LieError> {
        let mut t = LieAlgebraTable::zero(dim);
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(LieError::BadIndex(*i, *j, *k));
            }
            if i == j {
                return Err(LieError::BadIndex(*i, *j, *k));
            }
            t.set_c(*i, *j, *k, v.clone());
        }
        if check_jacobi {
            let r = t.jacobi_residual_max();
            if !r.is_zero() {
                return Err(LieError::JacobiFail { residual: r.to_string(), triple: t.worst_jacobi_triple() });
            }
        }
        Ok(t)
    }

    pub fn to_sparse(&self) -> Vec<(usize, usize, usize, BigRational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in 0..self.dim {
                    let v = self.c(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad_x acting on the algebra, columns indexed by basis.
    pub fn ad(&self, x: &[BigRational]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim, Backend::Rational);
        for j in 0..self.dim {
            let mut e = vec![BigRational::zero(); self.dim];
            e[j] = BigRational::from_integer(1.into());
            let col = self.bracket(x, &e);
            for k in 0..self.dim {
                m.set(k, j, Scalar::Rat(col[k].clone()));
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigRational> {
        let mut e = vec![BigRational::zero(); self.dim];
        e[i] = BigRational::from_integer(1.into());
        e
    }

    /// Max |coefficient| of the Jacobi defect over basis triples; 0 for a
    /// valid table.
    pub fn jacobi_residual_max(&self) -> BigRational {
        let mut max = BigRational::zero();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let d = self.jacobi_defect(i, j, k);
                    for c in d {
                        let a = c.abs();
                        if a > max {
                            max = a;
                        }
                    }
                }
            }
        }
        max
    }

    fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vec<BigRational> {
        let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
        let a = self.bracket(&self.bracket(&ei, &ej), &ek);
        let b = self.bracket(&self.bracket(&ej, &ek), &ei);
        let c = self.bracket(&self.bracket(&ek, &ei), &ej);
        (0..self.dim).map(|t| &a[t] + &b[t] + &c[t]).collect()
    }

    pub fn worst_jacobi_triple(&self) -> (usize, usize, usize) {
        let mut worst = (0, 1, 2);
        let mut max = BigRational::zero();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    for c in self.jacobi_defect(i, j, k) {
                        let a = c.abs();
                        if a > max {
                            max = a;
                            worst = (i, j, k);
                        }
                    }
                }
            }
        }
        worst
    }

    /// Killing form B(x, y) = tr(ad_x ad_y) on the basis.
    pub fn killing_matrix(&self) -> Mat {
        let ads: Vec<Mat> = (0..self.dim).map(|i| self.ad(&self.basis_vector(i))).collect();
        Mat::construct(self.dim, self.dim, Backend::Rational, |i, j| {
            ads[i].mul(&ads[j]).unwrap().trace()
        })
    }

    /// Conjugate the table by an invertible change of basis P (new basis
    /// vectors are the columns of P).
    pub fn change_basis(&self, p: &Mat) -> Result<LieAlgebraTable, LieError> {
        let pinv = p.inverse().map_err(|_| LieError::SingularBasisChange)?;
        let col = |j: usize| -> Vec<BigRational> {
            (0..self.dim).map(|i| p.at(i, j).as_rat().unwrap().clone()).collect()
        };
        let mut t = LieAlgebraTable::zero(self.dim);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let br = self.bracket(&col(i), &col(j));
                // decompose in the new basis: coeffs = P^{-1} * br
                for k in 0..self.dim {
                    let mut acc = BigRational::zero();
                    for l in 0..self.dim {
                        acc += pinv.at(k, l).as_rat().unwrap() * &br[l];
                    }
                    t.set_c(i, j, k, acc);
                }
            }
        }
        Ok(t)
    }

    /// Span-close `generators` under the bracket; returns the subspace and
    /// the induced structure constants on its echelon basis.
    pub fn subalgebra_closure(
        &self,
        generators: &[Vec<BigRational>],
    ) -> (SubspaceBasis, LieAlgebraTable) {
        let to_scalars = |v: &[BigRational]| -> Vec<Scalar> { v.iter().map(|r| Scalar::Rat(r.clone())).collect() };
        let from_scalars = |v: &[Scalar]| -> Vec<BigRational> { v.iter().map(|s| s.as_rat().unwrap().clone()).collect() };
        let mut span = SubspaceBasis::empty(self.dim, Backend::Rational);
        for g in generators {
            span.insert(to_scalars(g), 0.0);
        }
        loop {
            let basis: Vec<Vec<BigRational>> = span.vectors().iter().map(|v| from_scalars(v)).collect();
            let mut grew = false;
            for i in 0..basis.len() {
                for j in (i + 1)..basis.len() {
                    let b = self.bracket(&basis[i], &basis[j]);
                    if span.insert(to_scalars(&b), 0.0) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let basis: Vec<Vec<BigRational>> = span.vectors().iter().map(|v| from_scalars(v)).collect();
        let k = basis.len();
        let mut induced = LieAlgebraTable::zero(k);
        for i in 0..k {
            for j in (i + 1)..k {
                let b = self.bracket(&basis[i], &basis[j]);
                let coeffs = decompose_in(&span, &b).expect("closure is bracket-closed");
                for (t, v) in coeffs.into_iter().enumerate() {
                    induced.set_c(i, j, t, v);
                }
            }
        }
        (span, induced)
    }
}

/// Decompose a rational vector in an RREF rational subspace basis; None if
/// the vector lies outside the span.
pub fn decompose_in(span: &SubspaceBasis, v: &[BigRational]) -> Option<Vec<BigRational>> {
    let sv: Vec<Scalar> = v.iter().map(|r| Scalar::Rat(r.clone())).collect();
    if !span.contains(&sv, 0.0) {
        return None;
    }
    // RREF: coefficient on row k is the v-coordinate at that row's pivot.
    let mut coeffs = Vec::with_capacity(span.dim());
    for row in span.vectors() {
        let pivot = row.iter().position(|x| !x.is_zero_exact()).unwrap();
        coeffs.push(v[pivot].clone());
    }
    Some(coeffs)
}

/// Build a table from a list of linearly independent matrices closed under
/// commutators (errors if they are not).
pub fn table_from_matrix_algebra(basis: &[Mat]) -> Result<LieAlgebraTable, LieError> {
    let dim = basis.len();
    let n = basis[0].rows();
    let mut span = SubspaceBasis::empty(n * n, Backend::Rational);
    for b in basis {
        if !span.insert(b.flatten(), 0.0) {
            return Err(LieError::DependentBasis);
        }
    }
    // columns: echelon coordinates of each requested basis matrix
    let mut basis_in_echelon = Mat::zeros(dim, dim, Backend::Rational);
    for (j, b) in basis.iter().enumerate() {
        let flat: Vec<BigRational> = b.flatten().iter().map(|s| s.as_rat().unwrap().clone()).collect();
        let coeffs = decompose_in(&span, &flat).unwrap();
        for (i, c) in coeffs.into_iter().enumerate() {
            basis_in_echelon.set(i, j, Scalar::Rat(c));
        }
    }
    let echelon_coords_to_basis = basis_in_echelon.inverse().map_err(|_| LieError::DependentBasis)?;
    let mut t = LieAlgebraTable::zero(dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            let comm = basis[i].commutator(&basis[j]).map_err(|e| LieError::Num(e.to_string()))?;
            let flat: Vec<BigRational> = comm.flatten().iter().map(|s| s.as_rat().unwrap().clone()).collect();
            let in_echelon = decompose_in(&span, &flat).ok_or(LieError::NotClosed(i, j))?;
            for k in 0..dim {
                let mut acc = BigRational::zero();
                for l in 0..dim {
                    acc += echelon_coords_to_basis.at(k, l).as_rat().unwrap() * &in_echelon[l];
                }
                t.set_c(i, j, k, acc);
            }
        }
    }
    Ok(t)
}
