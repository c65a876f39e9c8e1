use crate::HolError;
use num::rational::BigRational;
use num::traits::Zero;
use numkit::{commutant, Backend, Mat, Scalar, SubspaceBasis};

#[derive(Debug, Clone)]
pub struct IsotypicBlock {
    pub dim: usize,
    /// Columns spanning the block inside the ambient space.
    pub basis: Vec<Vec<BigRational>>,
    /// Dimension of the commutant of the restricted action (1 real-type,
    /// 2 complex-type certify irreducibility).
    pub restricted_commutant_dim: usize,
    pub irreducible_certified: bool,
    pub restricted_algebra_dim: usize,
}

#[derive(Debug, Clone)]
pub struct IsotypicReport {
    pub d0_dim: usize,
    pub d0_basis: Vec<Vec<BigRational>>,
    pub blocks: Vec<IsotypicBlock>,
    pub split_complete: bool,
}

fn from_scalars(v: &[Scalar]) -> Vec<BigRational> {
    v.iter().map(|s| s.as_rat().unwrap().clone()).collect()
}

/// Columns of `cols` as an n×k matrix.
fn col_mat(n: usize, cols: &[Vec<BigRational>]) -> Mat {
    Mat::construct(n, cols.len(), Backend::Rational, |i, j| Scalar::Rat(cols[j][i].clone()))
}

/// Restrict the action of H (n×n) to an invariant block with column basis B:
/// solve H B = B H_B for the k×k matrix H_B.
fn restrict(h: &Mat, b: &Mat) -> Result<Mat, HolError> {
    // least-squares-free exact solve: (B^T B) H_B = B^T (H B); B has full
    // column rank, B^T B invertible over Q.
    let btb = b.transpose().mul(b).map_err(|e| HolError::Calc(e.to_string()))?;
    let rhs = b
        .transpose()
        .mul(&h.mul(b).map_err(|e| HolError::Calc(e.to_string()))?)
        .map_err(|e| HolError::Calc(e.to_string()))?;
    let inv = btb.inverse().map_err(|e| HolError::Calc(e.to_string()))?;
    let hb = inv.mul(&rhs).map_err(|e| HolError::Calc(e.to_string()))?;
    // consistency: H B = B H_B exactly (block truly invariant)
    let check = h
        .mul(b)
        .unwrap()
        .sub(&b.mul(&hb).unwrap())
        .map_err(|e| HolError::Calc(e.to_string()))?;
    if !check.is_zero_exact() {
        return Err(HolError::Calc("subspace is not invariant".into()));
    }
    Ok(hb)
}

/// Trace-form Casimir Σ (G^{-1})_{ij} H_i H_j; None when the Gram matrix of
/// tr(H_i H_j) degenerates on the family.
fn casimir(h: &[Mat]) -> Option<Mat> {
    let k = h.len();
    let n = h[0].rows();
    let gram = Mat::construct(k, k, Backend::Rational, |i, j| {
        h[i].mul(&h[j]).unwrap().trace()
    });
    let ginv = gram.inverse().ok()?;
    let mut cas = Mat::zeros(n, n, Backend::Rational);
    for i in 0..k {
        for j in 0..k {
            let c = ginv.at(i, j).clone();
            if c.is_zero_tol(0.0) {
                continue;
            }
            cas = cas.add(&h[i].mul(&h[j]).unwrap().scale(&c)).unwrap();
        }
    }
    Some(cas)
}

/// Split a block along rational eigenspaces of a candidate commuting matrix;
/// None when the candidate yields no complete rational split.
fn try_split(cand: &Mat) -> Option<Vec<SubspaceBasis>> {
    let k = cand.rows();
    let coeffs = contactgeo::pointwise::char_poly(cand);
    let (roots, full) = contactgeo::pointwise::rational_roots(&coeffs);
    if !full || roots.len() < 2 {
        return None;
    }
    let mut spaces = Vec::new();
    let mut total = 0usize;
    for (r, _) in &roots {
        let shifted = cand
            .sub(&Mat::identity(k, Backend::Rational).scale(&Scalar::Rat(r.clone())))
            .unwrap();
        let (_, ns) = shifted.rank_nullspace(None).ok()?;
        total += ns.dim();
        spaces.push(ns);
    }
    if total != k {
        return None; // not diagonalizable over Q
    }
    Some(spaces)
}

/// Common invariant-subspace decomposition: D⁰ = common kernel, then split
/// the complement on rational eigenspaces of commutant elements and the
/// Casimir-like sum Σ H_i², refining until blocks are certified irreducible
/// (restricted commutant of dimension 1 or 2) or no rational split remains.
pub fn isotypic_decomposition(h: &[Mat], g: &Mat) -> Result<IsotypicReport, HolError> {
    let n = g.rows();
    if h.is_empty() {
        return Ok(IsotypicReport {
            d0_dim: n,
            d0_basis: (0..n)
                .map(|i| {
                    let mut v = vec![BigRational::zero(); n];
                    v[i] = BigRational::from_integer(1.into());
                    v
                })
                .collect(),
            blocks: Vec::new(),
            split_complete: true,
        });
    }
    // D0 = common kernel
    let stacked = {
        let rows: Vec<Vec<Scalar>> = h
            .iter()
            .flat_map(|m| (0..n).map(move |i| (0..n).map(|j| m.at(i, j).clone()).collect()))
            .collect();
        Mat::from_rows(rows).map_err(|e| HolError::Calc(e.to_string()))?
    };
    let (_, d0) = stacked.rank_nullspace(None).map_err(|e| HolError::Calc(e.to_string()))?;
    let d0_basis: Vec<Vec<BigRational>> = d0.vectors().iter().map(|v| from_scalars(v)).collect();

    // complement: g-orthogonal complement of D0 (h-invariant since h ⊆ so(g))
    let complement: Vec<Vec<BigRational>> = if d0.dim() == 0 {
        (0..n)
            .map(|i| {
                let mut v = vec![BigRational::zero(); n];
                v[i] = BigRational::from_integer(1.into());
                v
            })
            .collect()
    } else {
        let rows: Vec<Vec<Scalar>> = d0_basis
            .iter()
            .map(|w| {
                (0..n)
                    .map(|j| {
                        let mut acc = BigRational::zero();
                        for i in 0..n {
                            acc += &w[i] * g.at(i, j).as_rat().unwrap();
                        }
                        Scalar::Rat(acc)
                    })
                    .collect()
            })
            .collect();
        let mcond = Mat::from_rows(rows).map_err(|e| HolError::Calc(e.to_string()))?;
        let (_, comp) = mcond.rank_nullspace(None).map_err(|e| HolError::Calc(e.to_string()))?;
        comp.vectors().iter().map(|v| from_scalars(v)).collect()
    };

    let mut complete = true;
    let mut blocks: Vec<IsotypicBlock> = Vec::new();
    let mut work: Vec<Vec<Vec<BigRational>>> = if complement.is_empty() {
        Vec::new()
    } else {
        vec![complement]
    };
    while let Some(cols) = work.pop() {
        let b = col_mat(n, &cols);
        let restricted: Vec<Mat> = h
            .iter()
            .map(|hm| restrict(hm, &b))
            .collect::<Result<Vec<_>, _>>()?;
        let restricted_nonzero: Vec<Mat> =
            restricted.iter().filter(|m| !m.is_zero_exact()).cloned().collect();
        let (comm_dim, candidates) = if restricted_nonzero.is_empty() {
            (cols.len() * cols.len(), Vec::new())
        } else {
            let c = commutant(&restricted_nonzero).map_err(|e| HolError::Calc(e.to_string()))?;
            let mut cands: Vec<Mat> = c.matrices(cols.len(), cols.len());
            // Casimir-like sum Σ (G^{-1})_{ij} H_i H_j with G the trace-form
            // Gram matrix; the bare Σ H_i² only commutes for orthonormal
            // bases, so every candidate is gated on actually commuting
            if let Some(cas) = casimir(&restricted_nonzero) {
                cands.push(cas);
            }
            let commuting: Vec<Mat> = cands
                .into_iter()
                .filter(|cand| {
                    restricted_nonzero
                        .iter()
                        .all(|hm| cand.commutator(hm).unwrap().is_zero_exact())
                })
                .collect();
            (c.dim(), commuting)
        };
        // split first: a 2-dimensional commutant can be R⊕R (two
        // inequivalent blocks) as well as complex-type irreducible, and only
        // a failed rational split plus commutant dim ≤ 2 certifies the latter
        let mut split = None;
        for cand in &candidates {
            // skip scalar candidates
            let lam = cand.at(0, 0).clone();
            let scalar = cand
                .sub(&Mat::identity(cols.len(), Backend::Rational).scale(&lam))
                .unwrap()
                .is_zero_exact();
            if scalar {
                continue;
            }
            if let Some(spaces) = try_split(cand) {
                split = Some(spaces);
                break;
            }
        }
        match split {
            Some(spaces) => {
                for s in spaces {
                    let sub: Vec<Vec<BigRational>> = s
                        .vectors()
                        .iter()
                        .map(|coef| {
                            // lift: block basis · coef
                            let mut v = vec![BigRational::zero(); n];
                            for (k, c) in coef.iter().enumerate() {
                                let c = c.as_rat().unwrap();
                                for i in 0..n {
                                    v[i] += &cols[k][i] * c;
                                }
                            }
                            v
                        })
                        .collect();
                    work.push(sub);
                }
            }
            None => {
                let certified = comm_dim <= 2;
                if !certified {
                    complete = false;
                }
                let alg_dim = {
                    let mut span = SubspaceBasis::empty(cols.len() * cols.len(), Backend::Rational);
                    for m in &restricted_nonzero {
                        span.insert(m.flatten(), 0.0);
                    }
                    span.dim()
                };
                blocks.push(IsotypicBlock {
                    dim: cols.len(),
                    basis: cols,
                    restricted_commutant_dim: comm_dim,
                    irreducible_certified: certified,
                    restricted_algebra_dim: alg_dim,
                });
            }
        }
    }
    blocks.sort_by_key(|b| b.dim);
    Ok(IsotypicReport { d0_dim: d0.dim(), d0_basis, blocks, split_complete: complete })
}
