use crate::table::{decompose_in, LieAlgebraTable};
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use numkit::{Backend, Mat, Scalar, SubspaceBasis};

/// Basis-independent invariants used to tell the zoo algebras apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieFingerprint {
    pub dim: usize,
    /// Killing inertia (n_plus, n_zero, n_minus), Sylvester-exact.
    pub signature: (usize, usize, usize),
    pub derived_dims: Vec<usize>,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub semisimple: bool,
    /// Radical search is a saturation heuristic on non-semisimple input.
    pub radical_heuristic: bool,
}

/// Exact inertia of a symmetric rational matrix by congruence elimination.
/// Zero diagonal pivots are repaired on the exact level by adding a row/col
/// that turns a nonzero off-diagonal entry into a nonzero diagonal one.
pub fn symmetric_inertia(m: &Mat) -> (usize, usize, usize) {
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| m.at(i, j).as_rat().unwrap().clone()).collect())
        .collect();
    let (mut pos, mut zero, mut neg) = (0usize, 0usize, 0usize);
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&first) = active.first() {
        // prefer a nonzero diagonal pivot
        let diag = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let pivot = match diag {
            Some(p) => p,
            None => {
                // all remaining diagonal entries are zero; find off-diagonal
                let mut found = None;
                'search: for (ii, &i) in active.iter().enumerate() {
                    for &j in active.iter().skip(ii + 1) {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match found {
                    None => {
                        zero += active.len();
                        break;
                    }
                    Some((i, j)) => {
                        // congruence: row_i += row_j, col_i += col_j makes
                        // a[i][i] = 2 a[i][j] != 0
                        for k in 0..n {
                            let t = a[j][k].clone();
                            a[i][k] += t;
                        }
                        for k in 0..n {
                            let t = a[k][j].clone();
                            a[k][i] += t;
                        }
                        i
                    }
                }
            }
        };
        let _ = first;
        let p = a[pivot][pivot].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != pivot);
        // clear the pivot row/column on the remaining block
        for &i in active.clone().iter() {
            if a[i][pivot].is_zero() {
                continue;
            }
            let f = &a[i][pivot] / &p;
            for k in 0..n {
                let t = &f * &a[pivot][k];
                a[i][k] -= t;
            }
            for k in 0..n {
                let t = &f * &a[k][pivot];
                a[k][i] -= t;
            }
        }
    }
    (pos, zero, neg)
}

fn rational_span(dim: usize, vectors: &[Vec<BigRational>]) -> SubspaceBasis {
    let mut s = SubspaceBasis::empty(dim, Backend::Rational);
    for v in vectors {
        s.insert(v.iter().map(|r| Scalar::Rat(r.clone())).collect(), 0.0);
    }
    s
}

fn span_vectors(s: &SubspaceBasis) -> Vec<Vec<BigRational>> {
    s.vectors()
        .iter()
        .map(|v| v.iter().map(|x| x.as_rat().unwrap().clone()).collect())
        .collect()
}

/// Derived series dims (starting from dim g) until stable or zero.
pub fn derived_series_dims(t: &LieAlgebraTable) -> Vec<usize> {
    let dim = t.dim();
    let mut dims = vec![dim];
    let mut current: Vec<Vec<BigRational>> = (0..dim).map(|i| t.basis_vector(i)).collect();
    loop {
        let mut brackets = Vec::new();
        for i in 0..current.len() {
            for j in (i + 1)..current.len() {
                brackets.push(t.bracket(&current[i], &current[j]));
            }
        }
        let span = rational_span(dim, &brackets);
        let d = span.dim();
        dims.push(d);
        if d == 0 || d == *dims.iter().rev().nth(1).unwrap() {
            break;
        }
        current = span_vectors(&span);
    }
    dims
}

/// Center = {x : [x, e_i] = 0 for all i}.
pub fn center(t: &LieAlgebraTable) -> SubspaceBasis {
    let dim = t.dim();
    let mut rows = Vec::new();
    for i in 0..dim {
        // rows of the map x -> [x, e_i]
        for k in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                row.push(Scalar::Rat(t.c(j, i, k).clone()));
            }
            rows.push(row);
        }
    }
    let m = Mat::from_rows(rows).unwrap();
    let (_, ns) = m.rank_nullspace(None).unwrap();
    ns
}

fn is_solvable_subspace(t: &LieAlgebraTable, ideal: &SubspaceBasis) -> bool {
    let dim = t.dim();
    let mut current = span_vectors(ideal);
    let mut last = current.len();
    loop {
        let mut brackets = Vec::new();
        for i in 0..current.len() {
            for j in (i + 1)..current.len() {
                brackets.push(t.bracket(&current[i], &current[j]));
            }
        }
        let span = rational_span(dim, &brackets);
        if span.dim() == 0 {
            return true;
        }
        if span.dim() == last {
            return false;
        }
        last = span.dim();
        current = span_vectors(&span);
    }
}

/// Largest solvable ideal found by saturating the Killing radical with
/// centers of successive quotients. Exact on the zoo targets; flagged as a
/// heuristic for generic non-semisimple input.
pub fn radical_saturation(t: &LieAlgebraTable, killing: &Mat) -> SubspaceBasis {
    let dim = t.dim();
    let (_, killing_radical) = killing.rank_nullspace(None).unwrap();
    let mut ideal = killing_radical;
    loop {
        // preimage of the center of g/ideal: {x : [x, e_i] in ideal for all i}
        let mut rows = Vec::new();
        for i in 0..dim {
            for k_row in residue_rows(&ideal, dim) {
                // condition: k_row . [x, e_i] = 0
                let mut row = Vec::with_capacity(dim);
                for j in 0..dim {
                    let mut acc = BigRational::zero();
                    for k in 0..dim {
                        acc += &k_row[k] * t.c(j, i, k);
                    }
                    row.push(Scalar::Rat(acc));
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            // ideal is everything already
            return ideal;
        }
        let m = Mat::from_rows(rows).unwrap();
        let (_, pre) = m.rank_nullspace(None).unwrap();
        let grown = ideal.sum(&pre, 0.0);
        if grown.dim() == ideal.dim() {
            return ideal;
        }
        if !is_solvable_subspace(t, &grown) {
            return ideal;
        }
        ideal = grown;
    }
}

/// Linear functionals vanishing exactly on the given subspace (rows of the
/// quotient projection): a basis of the annihilator.
fn residue_rows(space: &SubspaceBasis, dim: usize) -> Vec<Vec<BigRational>> {
    let k = space.dim();
    if k == 0 {
        // annihilator is everything
        return (0..dim)
            .map(|i| {
                let mut v = vec![BigRational::zero(); dim];
                v[i] = BigRational::from_integer(1.into());
                v
            })
            .collect();
    }
    let m = Mat::construct(k, dim, Backend::Rational, |i, j| space.vectors()[i][j].clone());
    let (_, ns) = m.rank_nullspace(None).unwrap();
    span_vectors(&ns)
}

/// Killing form, exact inertia, derived series, center, radical.
pub fn killing_fingerprint(t: &LieAlgebraTable) -> LieFingerprint {
    let killing = t.killing_matrix();
    let signature = symmetric_inertia(&killing);
    let semisimple = signature.1 == 0;
    let radical = if semisimple {
        SubspaceBasis::empty(t.dim(), Backend::Rational)
    } else {
        radical_saturation(t, &killing)
    };
    LieFingerprint {
        dim: t.dim(),
        signature,
        derived_dims: derived_series_dims(t),
        center_dim: center(t).dim(),
        radical_dim: radical.dim(),
        semisimple,
        radical_heuristic: !semisimple,
    }
}

/// Ad-invariance check of the Killing form on given triples, used by tests.
pub fn killing_ad_invariance_defect(
    t: &LieAlgebraTable,
    x: &[BigRational],
    y: &[BigRational],
    z: &[BigRational],
) -> BigRational {
    let killing = t.killing_matrix();
    let b = |u: &[BigRational], v: &[BigRational]| -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                acc += &u[i] * &(killing.at(i, j).as_rat().unwrap() * &v[j]);
            }
        }
        acc
    };
    b(&t.bracket(x, y), z) + b(y, &t.bracket(x, z))
}

/// Decompose a vector in a subspace, re-exported convenience.
pub fn decompose(span: &SubspaceBasis, v: &[BigRational]) -> Option<Vec<BigRational>> {
    decompose_in(span, v)
}
