use crate::scalar::{Backend, Scalar};
use crate::Mat;

/// A subspace of an ambient coordinate space, stored as a reduced row
/// echelon basis (pivot columns strictly increasing, pivots normalized
/// to one, pivot columns cleared above and below).
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis {
    ambient: usize,
    backend: Backend,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize, backend: Backend) -> SubspaceBasis {
        SubspaceBasis { ambient, backend, basis: Vec::new(), pivots: Vec::new() }
    }

    /// Span-reduce a list of vectors into echelon form. `tol` is only used
    /// by the float backend.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>, tol: f64) -> SubspaceBasis {
        let backend = vectors
            .first()
            .and_then(|v| v.first())
            .map(|s| s.backend())
            .unwrap_or(Backend::Rational);
        let mut sb = SubspaceBasis::empty(ambient, backend);
        for v in vectors {
            sb.insert(v, tol);
        }
        sb
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn matrices(&self, rows: usize, cols: usize) -> Vec<Mat> {
        self.basis.iter().map(|v| Mat::from_flat(rows, cols, v)).collect()
    }

    /// Reduce `v` against the current basis; if a nonzero residue remains,
    /// insert it, keeping echelon form. Returns true when the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>, tol: f64) -> bool {
        assert_eq!(v.len(), self.ambient, "vector/ambient mismatch");
        if self.basis.is_empty() {
            self.backend = v[0].backend();
        }
        for k in 0..self.basis.len() {
            let pc = self.pivots[k];
            if !v[pc].is_zero_tol(tol) {
                let f = v[pc].clone();
                for j in 0..self.ambient {
                    let t = f.mul(&self.basis[k][j]);
                    v[j] = v[j].sub(&t);
                }
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero_tol(tol)) else {
            return false;
        };
        let p = v[lead].clone();
        for x in v.iter_mut() {
            *x = x.div(&p);
        }
        // clear this column in existing rows
        for row in self.basis.iter_mut() {
            if !row[lead].is_zero_tol(tol) {
                let f = row[lead].clone();
                for j in 0..self.ambient {
                    row[j] = row[j].sub(&f.mul(&v[j]));
                }
            }
        }
        let pos = self.pivots.iter().position(|&pc| pc > lead).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, lead);
        self.basis.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[Scalar], tol: f64) -> bool {
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(self.pivots.iter()) {
            if !w[pc].is_zero_tol(tol) {
                let f = w[pc].clone();
                for j in 0..self.ambient {
                    w[j] = w[j].sub(&f.mul(&row[j]));
                }
            }
        }
        w.iter().all(|x| x.is_zero_tol(tol))
    }

    pub fn contains_mat(&self, m: &Mat, tol: f64) -> bool {
        self.contains(&m.flatten(), tol)
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis, tol: f64) -> bool {
        self.basis.iter().all(|v| other.contains(v, tol))
    }

    pub fn equals(&self, other: &SubspaceBasis, tol: f64) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other, tol)
    }

    /// Intersection via the kernel of the stacked-bases map.
    pub fn intersect(&self, other: &SubspaceBasis, tol: f64) -> SubspaceBasis {
        if self.dim() == 0 || other.dim() == 0 {
            return SubspaceBasis::empty(self.ambient, self.backend);
        }
        // columns: coefficients on self.basis then other.basis; rows: ambient
        let cols = self.dim() + other.dim();
        let m = Mat::construct(self.ambient, cols, self.backend, |i, j| {
            if j < self.dim() {
                self.basis[j][i].clone()
            } else {
                other.basis[j - self.dim()][i].neg()
            }
        });
        let (_, ker) = m.rank_nullspace(if self.backend == Backend::Float64 { Some(tol) } else { None }).unwrap();
        let mut out = SubspaceBasis::empty(self.ambient, self.backend);
        for coef in ker.vectors() {
            let mut v = vec![Scalar::zero(self.backend); self.ambient];
            for (k, row) in self.basis.iter().enumerate() {
                for j in 0..self.ambient {
                    v[j] = v[j].add(&coef[k].mul(&row[j]));
                }
            }
            out.insert(v, tol);
        }
        out
    }

    pub fn sum(&self, other: &SubspaceBasis, tol: f64) -> SubspaceBasis {
        let mut out = self.clone();
        for v in other.vectors() {
            out.insert(v.clone(), tol);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(v: &[&[i64]]) -> Vec<Vec<Scalar>> {
        v.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()
    }

    #[test]
    fn echelon_pivots_increase() {
        let sb = SubspaceBasis::from_vectors(3, vecs(&[&[0, 1, 1], &[1, 1, 0], &[1, 2, 1]]), 0.0);
        assert_eq!(sb.dim(), 2);
        assert!(sb.pivots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = SubspaceBasis::from_vectors(3, vecs(&[&[1, 0, 0], &[0, 1, 0]]), 0.0);
        let b = SubspaceBasis::from_vectors(3, vecs(&[&[0, 1, 0], &[0, 0, 1]]), 0.0);
        let c = a.intersect(&b, 0.0);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[Scalar::from_int(0), Scalar::from_int(5), Scalar::from_int(0)], 0.0));
    }
}
