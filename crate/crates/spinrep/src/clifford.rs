use crate::SpinError;
use num::rational::BigRational;
use num::traits::Zero;
use numkit::{Backend, Mat, Scalar};

/// The complex Spin(2m) spinor module Δ_{2m} ≅ Λ•C^m over Gaussian
/// rationals, realized with fermionic creation/annihilation operators on the
/// exterior algebra: γ(e_k) = a_k − a_k†, γ(Je_k) = i(a_k + a_k†), and
/// ρ(e_a∧e_b) = ¼[γ_a, γ_b]. Basis vectors of Δ are indexed by subsets of
/// {1..m} as bitmasks; level k (the Λ^k summand) is the set of masks of
/// popcount k. Sign convention: γ(v)² = −|v|².
pub struct SpinRep {
    pub m: usize,
    pub dim_delta: usize,
    /// γ(e_1..e_m, Je_1..Je_m), Gaussian-rational 2^m × 2^m.
    pub gamma: Vec<Mat>,
    /// ρ on the bivector basis: rho_pairs[(a,b)] for a < b.
    rho_pairs: Vec<Mat>,
}

pub const MAX_M: usize = 7;

fn creation(m: usize, k: usize) -> Mat {
    let n = 1usize << m;
    let mut out = Mat::zeros(n, n, Backend::GaussRational);
    for s in 0..n {
        if s & (1 << k) != 0 {
            continue;
        }
        let below = (s & ((1 << k) - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        out.set(s | (1 << k), s, Scalar::gauss(BigRational::from_integer(sign.into()), BigRational::zero()));
    }
    out
}

fn annihilation(m: usize, k: usize) -> Mat {
    creation(m, k).transpose()
}

impl SpinRep {
    pub fn build(m: usize) -> Result<SpinRep, SpinError> {
        if !(2..=MAX_M).contains(&m) {
            return Err(SpinError::SizeGuard(m));
        }
        let n = 1usize << m;
        let mut gamma = Vec::with_capacity(2 * m);
        let i_unit = Scalar::gauss_i();
        for k in 0..m {
            let a = annihilation(m, k);
            let adag = creation(m, k);
            gamma.push(a.sub(&adag).unwrap());
            gamma.push(a.add(&adag).unwrap().scale(&i_unit));
        }
        // interleave -> order e_1..e_m, Je_1..Je_m
        let mut ordered = Vec::with_capacity(2 * m);
        for k in 0..m {
            ordered.push(gamma[2 * k].clone());
        }
        for k in 0..m {
            ordered.push(gamma[2 * k + 1].clone());
        }
        let gamma = ordered;

        // Clifford relations γ_aγ_b + γ_bγ_a = −2δ_ab
        for a in 0..2 * m {
            for b in a..2 * m {
                let anti = gamma[a]
                    .mul(&gamma[b])
                    .unwrap()
                    .add(&gamma[b].mul(&gamma[a]).unwrap())
                    .unwrap();
                let want = if a == b {
                    Mat::identity(n, Backend::GaussRational).scale(&Scalar::gauss(
                        BigRational::from_integer((-2).into()),
                        BigRational::zero(),
                    ))
                } else {
                    Mat::zeros(n, n, Backend::GaussRational)
                };
                if anti != want {
                    return Err(SpinError::Construction(format!("Clifford relation fails at ({a},{b})")));
                }
            }
        }

        let quarter = Scalar::gauss(BigRational::new(1.into(), 4.into()), BigRational::zero());
        let mut rho_pairs = Vec::new();
        for a in 0..2 * m {
            for b in (a + 1)..2 * m {
                rho_pairs.push(gamma[a].commutator(&gamma[b]).unwrap().scale(&quarter));
            }
        }
        let rep = SpinRep { m, dim_delta: n, gamma, rho_pairs };

        // equivariance [ρ(A), γ(v)] = γ(Av) on the whole so(2m) × vector basis
        for a in 0..2 * m {
            for b in (a + 1)..2 * m {
                let rho_ab = rep.rho_pair(a, b);
                for v in 0..2 * m {
                    // (e_a∧e_b) e_v = δ_av e_b − δ_bv e_a
                    let mut want = Mat::zeros(n, n, Backend::GaussRational);
                    if v == a {
                        want = rep.gamma[b].clone();
                    } else if v == b {
                        want = rep.gamma[a].neg();
                    }
                    let comm = rho_ab.commutator(&rep.gamma[v]).unwrap();
                    if comm != want {
                        return Err(SpinError::Construction(format!(
                            "equivariance fails at (({a},{b}), {v})"
                        )));
                    }
                }
            }
        }

        // Lie homomorphism ρ([A,B]) = [ρ(A), ρ(B)] — full equivariance plus
        // tracelessness already forces it; verified directly on a
        // deterministic sample of bivector pairs
        let pairs: Vec<(usize, usize)> = (0..2 * m).flat_map(|a| ((a + 1)..2 * m).map(move |b| (a, b))).collect();
        let sample = if pairs.len() <= 10 { pairs.len() } else { 10 };
        for s in 0..sample {
            let (a1, b1) = pairs[s];
            let (a2, b2) = pairs[(s * 7 + 3) % pairs.len()];
            let m1 = wedge_so_matrix(2 * m, a1, b1);
            let m2 = wedge_so_matrix(2 * m, a2, b2);
            let comm = m1.commutator(&m2).unwrap();
            let lhs = rep.rho_of(&comm)?;
            let rhs = rep
                .rho_pair(a1, b1)
                .commutator(&rep.rho_pair(a2, b2))
                .unwrap();
            if lhs != rhs {
                return Err(SpinError::Construction(format!(
                    "ρ is not a homomorphism on pair ({a1},{b1}),({a2},{b2})"
                )));
            }
        }
        Ok(rep)
    }

    pub fn rho_pair(&self, a: usize, b: usize) -> Mat {
        debug_assert!(a < b);
        let d = 2 * self.m;
        let idx = a * (2 * d - a - 1) / 2 + (b - a - 1);
        self.rho_pairs[idx].clone()
    }

    /// ρ of a skew matrix A ∈ so(2m): A = Σ_{a<b} A_{ba} (e_a∧e_b).
    pub fn rho_of(&self, a_mat: &Mat) -> Result<Mat, SpinError> {
        let d = 2 * self.m;
        if a_mat.rows() != d || !a_mat.backend().eq(&Backend::Rational) {
            return Err(SpinError::Construction("ρ expects rational so(2m) matrices".into()));
        }
        // skewness check
        if !a_mat.add(&a_mat.transpose()).unwrap().is_zero_exact() {
            return Err(SpinError::Construction("ρ argument is not skew".into()));
        }
        let mut acc = Mat::zeros(self.dim_delta, self.dim_delta, Backend::GaussRational);
        for a in 0..d {
            for b in (a + 1)..d {
                let c = a_mat.at(b, a).as_rat().unwrap().clone();
                if c.is_zero() {
                    continue;
                }
                acc = acc
                    .add(&self.rho_pair(a, b).scale(&Scalar::gauss(c, BigRational::zero())))
                    .unwrap();
            }
        }
        Ok(acc)
    }

    /// ρ contracted with a bivector coefficient matrix β:
    /// ρ(β) = Σ_{a,b} β^{ab} ρ(e_a ∧ e_b).
    pub fn rho_of_bivector(&self, beta: &Mat) -> Result<Mat, SpinError> {
        let d = 2 * self.m;
        let mut acc = Mat::zeros(self.dim_delta, self.dim_delta, Backend::GaussRational);
        for a in 0..d {
            for b in (a + 1)..d {
                let c = beta.at(a, b).as_rat().unwrap() - beta.at(b, a).as_rat().unwrap();
                if c.is_zero() {
                    continue;
                }
                acc = acc
                    .add(&self.rho_pair(a, b).scale(&Scalar::gauss(c, BigRational::zero())))
                    .unwrap();
            }
        }
        Ok(acc)
    }

    /// The J-bivector coefficient matrix for the standard J (g = identity).
    pub fn j_bivector(&self) -> Mat {
        let m = self.m;
        Mat::construct(2 * m, 2 * m, Backend::Rational, |r, c| {
            if r < m && c == r + m {
                Scalar::from_int(1)
            } else if r >= m && c + m == r {
                Scalar::from_int(-1)
            } else {
                Scalar::from_int(0)
            }
        })
    }

    /// ρ(J) with the double-sum bivector convention: diagonal with
    /// eigenvalue (m−2k)i on Λ^k.
    pub fn rho_j(&self) -> Mat {
        self.rho_of_bivector(&self.j_bivector()).unwrap()
    }
}

/// e_a∧e_b as the so matrix E_{ba} − E_{ab}.
pub fn wedge_so_matrix(d: usize, a: usize, b: usize) -> Mat {
    let mut m = Mat::zeros(d, d, Backend::Rational);
    m.set(b, a, Scalar::from_int(1));
    m.set(a, b, Scalar::from_int(-1));
    m
}

/// The ρ(J) weight decomposition: level k has eigenvalue (m−2k)i·σ with
/// multiplicity binom(m,k); σ = +1 in this realization.
#[derive(Debug, Clone)]
pub struct WeightDecomposition {
    pub levels: Vec<WeightLevel>,
    pub global_sign: i32,
}

#[derive(Debug, Clone)]
pub struct WeightLevel {
    pub k: usize,
    /// Imaginary part of the ρ(J) eigenvalue.
    pub eigenvalue_im: BigRational,
    pub multiplicity: usize,
    /// Basis-vector indices (bitmasks of popcount k).
    pub basis: Vec<usize>,
}

pub fn weight_decomposition(rep: &SpinRep) -> Result<WeightDecomposition, SpinError> {
    let m = rep.m;
    let rho_j = rep.rho_j();
    let mut levels = Vec::new();
    for k in 0..=m {
        let basis: Vec<usize> = (0..rep.dim_delta).filter(|s| s.count_ones() as usize == k).collect();
        let want_im = BigRational::from_integer(((m as i64) - 2 * k as i64).into());
        // ρ(J) must act diagonally with this eigenvalue on every basis vector
        for &s in &basis {
            for r in 0..rep.dim_delta {
                let want = if r == s {
                    Scalar::gauss(BigRational::zero(), want_im.clone())
                } else {
                    Scalar::zero(Backend::GaussRational)
                };
                if rho_j.at(r, s) != &want {
                    return Err(SpinError::Construction(format!(
                        "ρ(J) is not diagonal with (m−2k)i on level {k}"
                    )));
                }
            }
        }
        let mult = basis.len();
        levels.push(WeightLevel { k, eigenvalue_im: want_im, multiplicity: mult, basis });
    }
    // binomials
    for l in &levels {
        let binom = (0..l.k).fold(1usize, |acc, i| acc * (m - i) / (i + 1));
        if l.multiplicity != binom {
            return Err(SpinError::Construction("weight multiplicity mismatch".into()));
        }
    }
    Ok(WeightDecomposition { levels, global_sign: 1 })
}
