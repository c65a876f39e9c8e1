use crate::SubsymError;
use liealg::{decompose_in, LieAlgebraTable};
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use numkit::{Backend, Mat, Scalar, SubspaceBasis};

/// Sub-symmetric quadruple (𝔤, s, 𝔨, B): Lie algebra table with the ±1
/// grading given by index sets, a codimension-one subalgebra 𝔨 ⊂ 𝔥 spanned
/// by `k_basis`, the distinguished complement direction ξ (a basis index),
/// and an ad_𝔨-invariant inner product B on 𝔭.
#[derive(Debug, Clone)]
pub struct SubSymQuadruple {
    pub table: LieAlgebraTable,
    pub h_indices: Vec<usize>,
    pub p_indices: Vec<usize>,
    pub k_basis: Vec<Vec<BigRational>>,
    pub xi_index: usize,
    pub b: Mat,
}

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct QuadrupleReport {
    pub checks: Vec<AxiomCheck>,
    pub all_pass: bool,
    pub transvection: bool,
    pub sub_torsion_free: bool,
    pub theta_nondegenerate: bool,
}

fn rational_span(dim: usize, vectors: &[Vec<BigRational>]) -> SubspaceBasis {
    let mut s = SubspaceBasis::empty(dim, Backend::Rational);
    for v in vectors {
        s.insert(v.iter().map(|r| Scalar::Rat(r.clone())).collect(), 0.0);
    }
    s
}

impl SubSymQuadruple {
    pub fn dim_p(&self) -> usize {
        self.p_indices.len()
    }

    /// ad of a 𝔤-vector restricted to 𝔭, in 𝔭-coordinates; errors if the
    /// image leaves 𝔭.
    pub fn ad_on_p(&self, x: &[BigRational]) -> Result<Mat, SubsymError> {
        let dp = self.dim_p();
        let mut out = Mat::zeros(dp, dp, Backend::Rational);
        for (col, &pj) in self.p_indices.iter().enumerate() {
            let br = self.table.bracket(x, &self.table.basis_vector(pj));
            for (i, v) in br.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                match self.p_indices.iter().position(|&p| p == i) {
                    Some(row) => out.set(row, col, Scalar::Rat(v.clone())),
                    None => {
                        return Err(SubsymError::Validation(format!(
                            "[x, p_{col}] leaves 𝔭 (component on basis {i})"
                        )))
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn ad_xi_on_p(&self) -> Result<Mat, SubsymError> {
        self.ad_on_p(&self.table.basis_vector(self.xi_index))
    }

    /// τ* from B(ad_ξ X, Y) + B(X, ad_ξ Y) = −2 τ*(X, Y), as a bilinear
    /// matrix on 𝔭.
    pub fn tau_star(&self) -> Result<Mat, SubsymError> {
        let m = self.ad_xi_on_p()?;
        let s = m.transpose().mul(&self.b).unwrap().add(&self.b.mul(&m).unwrap()).unwrap();
        Ok(s.scale(&Scalar::rat(-1, 2)))
    }

    /// A_ξ = ad_ξ + τ*♯, the B-skew part of ad_ξ on 𝔭.
    pub fn a_xi(&self) -> Result<Mat, SubsymError> {
        let m = self.ad_xi_on_p()?;
        let tau = self.tau_star()?;
        let b_inv = self.b.inverse().map_err(|e| SubsymError::Validation(e.to_string()))?;
        Ok(m.add(&b_inv.mul(&tau).unwrap()).unwrap())
    }

    /// Θ as the ξ-coefficient of [p_i, p_j] with respect to 𝔥 = 𝔨 ⊕ ⟨ξ⟩.
    pub fn theta_matrix(&self) -> Result<Mat, SubsymError> {
        let dim = self.table.dim();
        let dp = self.dim_p();
        // basis of 𝔥 in the order (k_basis…, ξ), to read off the ξ-coordinate
        let mut h_span = SubspaceBasis::empty(dim, Backend::Rational);
        for k in &self.k_basis {
            h_span.insert(k.iter().map(|r| Scalar::Rat(r.clone())).collect(), 0.0);
        }
        let k_dim = h_span.dim();
        let full = {
            let mut s = h_span.clone();
            s.insert(
                self.table
                    .basis_vector(self.xi_index)
                    .iter()
                    .map(|r| Scalar::Rat(r.clone()))
                    .collect(),
                0.0,
            );
            s
        };
        if full.dim() != k_dim + 1 {
            return Err(SubsymError::Validation("ξ lies in span(𝔨)".into()));
        }
        let mut theta = Mat::zeros(dp, dp, Backend::Rational);
        // coordinates: solve [p_i,p_j] = Σ a_l k_l + c ξ
        let mut cols: Vec<Vec<BigRational>> = self.k_basis.clone();
        cols.push(self.table.basis_vector(self.xi_index));
        let cm = Mat::construct(dim, cols.len(), Backend::Rational, |i, j| Scalar::Rat(cols[j][i].clone()));
        // solve via (CᵀC)x = Cᵀv (full column rank)
        let ctc = cm.transpose().mul(&cm).unwrap();
        let ctc_inv = ctc.inverse().map_err(|e| SubsymError::Validation(e.to_string()))?;
        for (a, &pi) in self.p_indices.iter().enumerate() {
            for (bb, &pj) in self.p_indices.iter().enumerate() {
                if a >= bb {
                    continue;
                }
                let br = self.table.bracket(&self.table.basis_vector(pi), &self.table.basis_vector(pj));
                let v = Mat::construct(dim, 1, Backend::Rational, |i, _| Scalar::Rat(br[i].clone()));
                let x = ctc_inv.mul(&cm.transpose().mul(&v).unwrap()).unwrap();
                // consistency: [p,p] ⊆ 𝔥
                let back = cm.mul(&x).unwrap();
                if !back.sub(&v).unwrap().is_zero_exact() {
                    return Err(SubsymError::Validation(format!(
                        "[p_{a}, p_{bb}] is not contained in 𝔥"
                    )));
                }
                let c = x.at(cols.len() - 1, 0).clone();
                theta.set(a, bb, c.clone());
                theta.set(bb, a, c.neg());
            }
        }
        Ok(theta)
    }
}

/// Each quadruple axiom as a pass/fail with witness; report-style, never an
/// error.
pub fn validate_quadruple(q: &SubSymQuadruple) -> QuadrupleReport {
    let dim = q.table.dim();
    let mut checks = Vec::new();

    // index sets partition the basis
    let mut part = q.h_indices.clone();
    part.extend(&q.p_indices);
    part.sort_unstable();
    let partition_ok = part == (0..dim).collect::<Vec<_>>();
    checks.push(AxiomCheck {
        name: "index_partition",
        pass: partition_ok,
        witness: (!partition_ok).then(|| "h/p index sets do not partition the basis".into()),
    });

    // grading rules ⇔ s is an automorphism
    let in_h = |i: usize| q.h_indices.contains(&i);
    let mut grading_witness = None;
    'outer: for &i in q.h_indices.iter().chain(q.p_indices.iter()) {
        for &j in q.h_indices.iter().chain(q.p_indices.iter()) {
            if i == j {
                continue;
            }
            let want_h = in_h(i) == in_h(j); // h,h or p,p land in h
            for k in 0..dim {
                if q.table.c(i, j, k).is_zero() {
                    continue;
                }
                if in_h(k) != want_h {
                    grading_witness = Some(format!("[e{i}, e{j}] has component on e{k}"));
                    break 'outer;
                }
            }
        }
    }
    checks.push(AxiomCheck {
        name: "involution_grading",
        pass: grading_witness.is_none(),
        witness: grading_witness,
    });

    // Jacobi
    let jac = q.table.jacobi_residual_max();
    checks.push(AxiomCheck {
        name: "jacobi",
        pass: jac.is_zero(),
        witness: (!jac.is_zero()).then(|| format!("max residual {jac}")),
    });

    // 𝔨 is a subalgebra of codimension one in 𝔥, not containing ξ
    let k_span = rational_span(dim, &q.k_basis);
    let mut k_sub = true;
    let mut k_witness = None;
    for i in 0..q.k_basis.len() {
        for j in (i + 1)..q.k_basis.len() {
            let br = q.table.bracket(&q.k_basis[i], &q.k_basis[j]);
            if decompose_in(&k_span, &br).is_none() {
                k_sub = false;
                k_witness = Some(format!("[k_{i}, k_{j}] leaves 𝔨"));
            }
        }
    }
    checks.push(AxiomCheck { name: "k_subalgebra", pass: k_sub, witness: k_witness });
    let codim_ok = k_span.dim() + 1 == q.h_indices.len() && {
        let mut s = k_span.clone();
        s.insert(
            q.table
                .basis_vector(q.xi_index)
                .iter()
                .map(|r| Scalar::Rat(r.clone()))
                .collect(),
            0.0,
        );
        s.dim() == q.h_indices.len()
    };
    checks.push(AxiomCheck {
        name: "k_codimension_one",
        pass: codim_ok,
        witness: (!codim_ok).then(|| "𝔥 ≠ 𝔨 ⊕ ⟨ξ⟩".into()),
    });

    // no nonzero ideal of 𝔤 inside 𝔨: saturate V ↦ {x ∈ V : [𝔤,x] ⊆ V}
    // downward; the fixpoint is the largest 𝔤-ideal contained in 𝔨
    let mut ideal = k_span.clone();
    loop {
        let vdim = ideal.dim();
        if vdim == 0 {
            break;
        }
        let vbasis: Vec<Vec<BigRational>> = ideal
            .vectors()
            .iter()
            .map(|v| v.iter().map(|s| s.as_rat().unwrap().clone()).collect())
            .collect();
        // annihilator functionals of V (rows of the quotient projection)
        let vm = Mat::construct(vdim, dim, Backend::Rational, |i, j| Scalar::Rat(vbasis[i][j].clone()));
        let (_, anni) = vm.rank_nullspace(None).unwrap();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for gj in 0..dim {
            let brackets: Vec<Vec<BigRational>> = vbasis
                .iter()
                .map(|v| q.table.bracket(v, &q.table.basis_vector(gj)))
                .collect();
            for phi in anni.vectors() {
                let row: Vec<Scalar> = brackets
                    .iter()
                    .map(|br| {
                        let mut acc = BigRational::zero();
                        for t in 0..dim {
                            acc += phi[t].as_rat().unwrap() * &br[t];
                        }
                        Scalar::Rat(acc)
                    })
                    .collect();
                rows.push(row);
            }
        }
        let next = if rows.is_empty() {
            ideal.clone()
        } else {
            let m = Mat::from_rows(rows).unwrap();
            let (_, coef) = m.rank_nullspace(None).unwrap();
            let mut s = SubspaceBasis::empty(dim, Backend::Rational);
            for c in coef.vectors() {
                let mut v = vec![BigRational::zero(); dim];
                for (k, ck) in c.iter().enumerate() {
                    let ck = ck.as_rat().unwrap();
                    for t in 0..dim {
                        v[t] += &vbasis[k][t] * ck;
                    }
                }
                s.insert(v.iter().map(|r| Scalar::Rat(r.clone())).collect(), 0.0);
            }
            s
        };
        if next.dim() == ideal.dim() {
            break;
        }
        ideal = next;
    }
    let no_ideal = ideal.dim() == 0;
    checks.push(AxiomCheck {
        name: "k_contains_no_ideal",
        pass: no_ideal,
        witness: (!no_ideal).then(|| format!("𝔨 contains a 𝔤-ideal of dim {}", ideal.dim())),
    });

    // B symmetric positive definite
    let dp = q.dim_p();
    let mut b_ok = q.b.rows() == dp && q.b.cols() == dp;
    if b_ok {
        'sym: for i in 0..dp {
            for j in 0..dp {
                if q.b.at(i, j) != q.b.at(j, i) {
                    b_ok = false;
                    break 'sym;
                }
            }
        }
    }
    if b_ok {
        for k in 1..=dp {
            let minor = Mat::construct(k, k, Backend::Rational, |i, j| q.b.at(i, j).clone());
            if !det_small(&minor).is_positive() {
                b_ok = false;
                break;
            }
        }
    }
    checks.push(AxiomCheck {
        name: "b_positive_definite",
        pass: b_ok,
        witness: (!b_ok).then(|| "B is not a symmetric positive-definite matrix".into()),
    });

    // B ad_𝔨-invariant
    let mut inv_ok = true;
    let mut inv_witness = None;
    for (ki, k) in q.k_basis.iter().enumerate() {
        if let Ok(m) = q.ad_on_p(k) {
            let defect = m.transpose().mul(&q.b).unwrap().add(&q.b.mul(&m).unwrap()).unwrap();
            if !defect.is_zero_exact() {
                inv_ok = false;
                inv_witness = Some(format!("B(ad_k X, Y) + B(X, ad_k Y) ≠ 0 for k_{ki}"));
                break;
            }
        } else {
            inv_ok = false;
            inv_witness = Some(format!("ad_k_{ki} does not preserve 𝔭"));
            break;
        }
    }
    checks.push(AxiomCheck { name: "b_adk_invariant", pass: inv_ok, witness: inv_witness });

    // Θ nontrivial (validator) / nondegenerate (constructors)
    let (theta_nontrivial, theta_nondeg) = match q.theta_matrix() {
        Ok(t) => (!t.is_zero_exact(), t.inverse().is_ok()),
        Err(_) => (false, false),
    };
    checks.push(AxiomCheck {
        name: "theta_nontrivial",
        pass: theta_nontrivial,
        witness: (!theta_nontrivial).then(|| "Θ vanishes".into()),
    });

    // transvection flag: span[𝔭,𝔭] + closure = 𝔥
    let transvection = {
        let mut brackets = Vec::new();
        for (a, &pi) in q.p_indices.iter().enumerate() {
            for &pj in q.p_indices.iter().skip(a + 1) {
                brackets.push(q.table.bracket(&q.table.basis_vector(pi), &q.table.basis_vector(pj)));
            }
        }
        let (span, _) = q.table.subalgebra_closure(&brackets);
        span.dim() == q.h_indices.len()
    };

    // sub-torsion-free: B also ad_ξ-invariant (τ* = 0)
    let sub_torsion_free = q.tau_star().map(|t| t.is_zero_exact()).unwrap_or(false);

    let all_pass = checks.iter().all(|c| c.pass);
    QuadrupleReport {
        checks,
        all_pass,
        transvection,
        sub_torsion_free,
        theta_nondegenerate: theta_nondeg,
    }
}

fn det_small(m: &Mat) -> BigRational {
    let k = m.rows();
    if k == 1 {
        return m.at(0, 0).as_rat().unwrap().clone();
    }
    let mut acc = BigRational::zero();
    for j in 0..k {
        let entry = m.at(k - 1, j).as_rat().unwrap().clone();
        if entry.is_zero() {
            continue;
        }
        let sub = Mat::construct(k - 1, k - 1, Backend::Rational, |r, c| {
            m.at(r, if c < j { c } else { c + 1 }).clone()
        });
        let sign = if (k - 1 + j) % 2 == 0 { 1 } else { -1 };
        acc += BigRational::from_integer(sign.into()) * entry * det_small(&sub);
    }
    acc
}

/// Restrict to the transvection quadruple: ĥ = ⟨[𝔭,𝔭]⟩, 𝔨̂ = 𝔨 ∩ ĥ, table
/// rebuilt on (𝔭, ĥ) and revalidated.
pub fn transvection_restrict(q: &SubSymQuadruple) -> Result<SubSymQuadruple, SubsymError> {
    let dim = q.table.dim();
    let mut gens: Vec<Vec<BigRational>> = Vec::new();
    for (a, &pi) in q.p_indices.iter().enumerate() {
        for &pj in q.p_indices.iter().skip(a + 1) {
            gens.push(q.table.bracket(&q.table.basis_vector(pi), &q.table.basis_vector(pj)));
        }
    }
    let (h_hat, _) = q.table.subalgebra_closure(&gens);

    // new basis: 𝔭 first, then ĥ (echelon basis), with ξ kept as a basis
    // direction when it lies in ĥ (it always does when Θ is nontrivial)
    let mut new_basis: Vec<Vec<BigRational>> = q
        .p_indices
        .iter()
        .map(|&i| q.table.basis_vector(i))
        .collect();
    let xi_vec = q.table.basis_vector(q.xi_index);
    let xi_scalars: Vec<Scalar> = xi_vec.iter().map(|r| Scalar::Rat(r.clone())).collect();
    let mut h_hat_vectors: Vec<Vec<BigRational>> = Vec::new();
    let k_span = rational_span(dim, &q.k_basis);
    let k_hat = {
        // 𝔨 ∩ ĥ
        let k_as_sub = k_span;
        let h_as_sub = h_hat.clone();
        k_as_sub.intersect(&h_as_sub, 0.0)
    };
    for v in k_hat.vectors() {
        h_hat_vectors.push(v.iter().map(|s| s.as_rat().unwrap().clone()).collect());
    }
    let xi_in_h_hat = h_hat.contains(&xi_scalars, 0.0);
    if !xi_in_h_hat {
        return Err(SubsymError::Validation(
            "ξ direction is lost under transvection restriction (Θ trivial?)".into(),
        ));
    }
    if h_hat_vectors.len() + 1 != h_hat.dim() {
        return Err(SubsymError::Validation(format!(
            "𝔨̂ has dim {} inside ĥ of dim {}",
            h_hat_vectors.len(),
            h_hat.dim()
        )));
    }
    new_basis.extend(h_hat_vectors.clone());
    new_basis.push(xi_vec);

    // induced table on the new basis
    let nb = new_basis.len();
    let span = rational_span(dim, &new_basis);
    if span.dim() != nb {
        return Err(SubsymError::Validation("restricted basis is dependent".into()));
    }
    // transition: coordinates of new-basis brackets in the new basis
    let coords = |v: &[BigRational]| -> Option<Vec<BigRational>> {
        // solve Σ x_i new_basis[i] = v exactly via the span's echelon data
        let cm = Mat::construct(dim, nb, Backend::Rational, |i, j| Scalar::Rat(new_basis[j][i].clone()));
        let ctc = cm.transpose().mul(&cm).unwrap();
        let ctc_inv = ctc.inverse().ok()?;
        let vm = Mat::construct(dim, 1, Backend::Rational, |i, _| Scalar::Rat(v[i].clone()));
        let x = ctc_inv.mul(&cm.transpose().mul(&vm).unwrap()).unwrap();
        let back = cm.mul(&x).unwrap();
        if !back.sub(&vm).unwrap().is_zero_exact() {
            return None;
        }
        Some((0..nb).map(|i| x.at(i, 0).as_rat().unwrap().clone()).collect())
    };
    let mut table = LieAlgebraTable::zero(nb);
    for i in 0..nb {
        for j in (i + 1)..nb {
            let br = q.table.bracket(&new_basis[i], &new_basis[j]);
            let c = coords(&br).ok_or_else(|| {
                SubsymError::Validation("restricted brackets leave the restricted algebra".into())
            })?;
            for (k, v) in c.into_iter().enumerate() {
                table.set_c(i, j, k, v);
            }
        }
    }
    let dp = q.dim_p();
    let k_hat_dim = h_hat_vectors.len();
    let out = SubSymQuadruple {
        table,
        h_indices: (dp..nb).collect(),
        p_indices: (0..dp).collect(),
        k_basis: (0..k_hat_dim)
            .map(|i| {
                let mut v = vec![BigRational::zero(); nb];
                v[dp + i] = BigRational::from_integer(1.into());
                v
            })
            .collect(),
        xi_index: nb - 1,
        b: q.b.clone(),
    };
    Ok(out)
}
