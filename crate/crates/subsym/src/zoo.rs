use crate::quadruple::{transvection_restrict, validate_quadruple, SubSymQuadruple};
use crate::SubsymError;
use holonomy::{classify_subalgebra, HolLabel};
use liealg::{
    killing_fingerprint, match_zoo, table_from_matrix_algebra, LieAlgebraTable, LieFingerprint,
    ZooMatch,
};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use numkit::{Backend, Mat, Scalar, SubspaceBasis};

#[derive(Debug, Clone, PartialEq)]
pub enum ZooKind {
    Heisenberg { m: usize },
    CpnSphere { m: usize },
    TorsionFamily { m: usize, lambda: BigRational, mu: BigRational },
    HrssCircle(HrssData),
}

/// User-supplied algebraic data of an S¹-bundle over a product of Hermitian
/// Riemannian symmetric spaces: per factor the holonomy table 𝔥ᵢ, its
/// representation on 𝔭ᵢ, the curvature map, the central complex structure
/// (as an 𝔥ᵢ-coordinate vector), and the dθ weights bᵢ.
#[derive(Debug, Clone, PartialEq)]
pub struct HrssData {
    pub factors: Vec<HrssFactor>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HrssFactor {
    pub h_table: LieAlgebraTable,
    /// rep[t] = action of the t-th 𝔥-basis vector on 𝔭ᵢ.
    pub rep: Vec<Mat>,
    /// Curvature R(X,Y) ∈ 𝔥ᵢ on the 𝔭-basis bivectors, R[a][b] for a < b.
    pub curvature: Vec<Vec<Vec<BigRational>>>,
    /// 𝔥ᵢ-coordinates of the central element whose rep is the complex
    /// structure Jᵢ.
    pub j_element: Vec<BigRational>,
    pub b_weight: BigRational,
}

#[derive(Debug, Clone)]
pub struct ZooResult {
    pub kind_name: String,
    pub quadruple: SubSymQuadruple,
    pub tau_star: Mat,
    pub tau_star_zero: bool,
    pub a_xi: Mat,
    pub ad_xi: Mat,
    pub hol_horizontal_dim: usize,
    pub hol_adapted_dim: usize,
    pub hol_horizontal_label: HolLabel,
    pub hol_adapted_label: HolLabel,
    pub fingerprint: LieFingerprint,
    pub zoo_match: ZooMatch,
    pub scal_tau: BigRational,
    pub jacobi_residual_zero: bool,
}

fn so_m_diag_matrices(m: usize) -> Vec<Mat> {
    let n = 2 * m;
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut mat = Mat::zeros(n, n, Backend::Rational);
            mat.set(i, j, Scalar::from_int(1));
            mat.set(j, i, Scalar::from_int(-1));
            mat.set(m + i, m + j, Scalar::from_int(1));
            mat.set(m + j, m + i, Scalar::from_int(-1));
            out.push(mat);
        }
    }
    out
}

fn std_j(m: usize) -> Mat {
    let n = 2 * m;
    Mat::construct(n, n, Backend::Rational, |r, c| {
        if r < m && c == r + m {
            Scalar::from_int(-1)
        } else if r >= m && c + m == r {
            Scalar::from_int(1)
        } else {
            Scalar::from_int(0)
        }
    })
}

/// Build a quadruple from local data per the bracket construction
/// [X,Y] = −R_W(X,Y) + Θ(X,Y)ξ, [ξ,X] = N_W(X), [A,X] = AX, [ξ,A] = 0.
/// A Jacobi failure signals that the inputs violate the locally-symmetric
/// identities and is reported with the offending triple.
pub fn from_local_data(
    dim_p: usize,
    r_w: &dyn Fn(usize, usize) -> Mat,
    theta: &Mat,
    n_w: &Mat,
    k_span: &[Mat],
    b: &Mat,
) -> Result<SubSymQuadruple, SubsymError> {
    let r = k_span.len();
    let dim = dim_p + r + 1;
    // span of k matrices for decomposition
    let mut span = SubspaceBasis::empty(dim_p * dim_p, Backend::Rational);
    for k in k_span {
        if !span.insert(k.flatten(), 0.0) {
            return Err(SubsymError::Validation("k_span matrices are dependent".into()));
        }
    }
    if theta.inverse().is_err() {
        return Err(SubsymError::Validation("Θ must be nondegenerate for the constructor".into()));
    }
    let decompose = |m: &Mat| -> Option<Vec<BigRational>> {
        let flat: Vec<BigRational> = m.flatten().iter().map(|s| s.as_rat().unwrap().clone()).collect();
        liealg::decompose_in(&span, &flat).map(|echelon| {
            // echelon coords -> k_span coords via the basis transition
            echelon
        })
    };
    // transition matrix from echelon coordinates to the k_span basis
    let mut basis_in_echelon = Mat::zeros(r, r, Backend::Rational);
    for (j, k) in k_span.iter().enumerate() {
        let flat: Vec<BigRational> = k.flatten().iter().map(|s| s.as_rat().unwrap().clone()).collect();
        let coeffs = liealg::decompose_in(&span, &flat).unwrap();
        for (i, c) in coeffs.into_iter().enumerate() {
            basis_in_echelon.set(i, j, Scalar::Rat(c));
        }
    }
    let ech_to_k = if r > 0 {
        Some(basis_in_echelon.inverse().map_err(|e| SubsymError::Validation(e.to_string()))?)
    } else {
        None
    };
    let to_k_coords = |m: &Mat| -> Result<Vec<BigRational>, SubsymError> {
        if r == 0 {
            return if m.is_zero_exact() {
                Ok(Vec::new())
            } else {
                Err(SubsymError::Validation("R_W value outside span(𝔨) = 0".into()))
            };
        }
        let ech = decompose(m)
            .ok_or_else(|| SubsymError::Validation("R_W value lies outside span(𝔨)".into()))?;
        let t = ech_to_k.as_ref().unwrap();
        Ok((0..r)
            .map(|i| {
                let mut acc = BigRational::zero();
                for (l, e) in ech.iter().enumerate() {
                    acc += t.at(i, l).as_rat().unwrap() * e;
                }
                acc
            })
            .collect())
    };

    let mut sparse: Vec<(usize, usize, usize, BigRational)> = Vec::new();
    // [p_i, p_j] = −R_W(i,j)|k-coords + Θ_ij ξ
    for i in 0..dim_p {
        for j in (i + 1)..dim_p {
            let rw = r_w(i, j);
            let kc = to_k_coords(&rw)?;
            for (t, v) in kc.iter().enumerate() {
                if !v.is_zero() {
                    sparse.push((i, j, dim_p + t, -v.clone()));
                }
            }
            let th = theta.at(i, j).as_rat().unwrap().clone();
            if !th.is_zero() {
                sparse.push((i, j, dim_p + r, th));
            }
        }
    }
    // [k_t, p_j] = K_t p_j
    for (t, k) in k_span.iter().enumerate() {
        for j in 0..dim_p {
            for i in 0..dim_p {
                let v = k.at(i, j).as_rat().unwrap().clone();
                if !v.is_zero() {
                    sparse.push((dim_p + t, j, i, v));
                }
            }
        }
    }
    // [ξ, p_j] = N_W p_j
    for j in 0..dim_p {
        for i in 0..dim_p {
            let v = n_w.at(i, j).as_rat().unwrap().clone();
            if !v.is_zero() {
                sparse.push((dim_p + r, j, i, v));
            }
        }
    }
    // [k_s, k_t] decomposed in k_span
    for s in 0..r {
        for t in (s + 1)..r {
            let comm = k_span[s].commutator(&k_span[t]).unwrap();
            let kc = to_k_coords(&comm)
                .map_err(|_| SubsymError::Validation("k_span is not a subalgebra".into()))?;
            for (u, v) in kc.iter().enumerate() {
                if !v.is_zero() {
                    sparse.push((dim_p + s, dim_p + t, dim_p + u, v.clone()));
                }
            }
        }
    }
    let table = LieAlgebraTable::from_sparse(dim, &sparse, true).map_err(|e| match e {
        liealg::LieError::JacobiFail { residual, triple } => SubsymError::JacobiFail { residual, triple },
        other => SubsymError::Validation(other.to_string()),
    })?;
    let q = SubSymQuadruple {
        table,
        h_indices: (dim_p..dim).collect(),
        p_indices: (0..dim_p).collect(),
        k_basis: (0..r)
            .map(|i| {
                let mut v = vec![BigRational::zero(); dim];
                v[dim_p + i] = BigRational::one();
                v
            })
            .collect(),
        xi_index: dim - 1,
        b: b.clone(),
    };
    let report = validate_quadruple(&q);
    if !report.all_pass {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
        return Err(SubsymError::ValidationFail(format!("axioms failed: {failed:?}")));
    }
    Ok(q)
}

/// hol(∇) = ad_𝔨̂ and hol(∇^τ) = ad_𝔨̂ ⊕ ⟨A_ξ⟩ on the transvection
/// restriction, as matrix spans on 𝔭.
pub fn holonomy_pair(q: &SubSymQuadruple) -> Result<(Vec<Mat>, Vec<Mat>, Mat), SubsymError> {
    let qt = transvection_restrict(q)?;
    let mut hor = Vec::new();
    for k in &qt.k_basis {
        hor.push(qt.ad_on_p(k)?);
    }
    let a_xi = qt.a_xi()?;
    let mut full = hor.clone();
    if !a_xi.is_zero_exact() {
        full.push(a_xi.clone());
    }
    Ok((hor, full, a_xi))
}

/// Webster scalar of the algebraic model: R^τ(u,v) = R^W(u,v) − Θ(u,v)C with
/// R^W read off the brackets and C the B-skew part of ad_ξ; first-slot Ricci
/// trace (paper's RicTW/scal conventions).
pub fn algebraic_webster_scalar(q: &SubSymQuadruple) -> Result<BigRational, SubsymError> {
    let dp = q.dim_p();
    let theta = q.theta_matrix()?;
    let a_xi = q.a_xi()?; // = C as endomorphism (skew part of ad_ξ)
    let b_inv = q.b.inverse().map_err(|e| SubsymError::Validation(e.to_string()))?;
    // R^W(p_a, p_b) = −ad_{[p_a,p_b]_𝔨-part} on 𝔭 = −(ad_{[p_a,p_b]} − Θ_ab ad_ξ)
    let mut r_tau: Vec<Vec<Mat>> = Vec::with_capacity(dp);
    let ad_xi = q.ad_xi_on_p()?;
    for a in 0..dp {
        let mut row = Vec::with_capacity(dp);
        for b in 0..dp {
            let br = q.table.bracket(
                &q.table.basis_vector(q.p_indices[a]),
                &q.table.basis_vector(q.p_indices[b]),
            );
            let ad_br = q.ad_on_p(&br)?;
            let th = theta.at(a, b).as_rat().unwrap().clone();
            // R^W = −(ad_br − Θ ad_ξ); R^τ = R^W − Θ·C
            let rw = ad_br.neg().add(&ad_xi.scale(&Scalar::Rat(th.clone()))).unwrap();
            let rt = rw.sub(&a_xi.scale(&Scalar::Rat(th))).unwrap();
            row.push(rt);
        }
        r_tau.push(row);
    }
    let ric = contactgeo::pointwise::ricci_first_slot(&r_tau);
    Ok(contactgeo::pointwise::trace_form(&ric, &b_inv))
}

fn classify_pair(
    hor: &[Mat],
    full: &[Mat],
    b: &Mat,
    j: Option<&Mat>,
) -> Result<(HolLabel, HolLabel), SubsymError> {
    let (lh, _) = classify_subalgebra(hor, b, j).map_err(|e| SubsymError::Validation(e.to_string()))?;
    let (lf, _) = classify_subalgebra(full, b, j).map_err(|e| SubsymError::Validation(e.to_string()))?;
    Ok((lh, lf))
}

fn finish_result(
    kind_name: String,
    q: SubSymQuadruple,
    m: usize,
    j: Option<&Mat>,
) -> Result<ZooResult, SubsymError> {
    let (hor, full, a_xi) = holonomy_pair(&q)?;
    let hd = span_dim(&hor);
    let fd = span_dim(&full);
    if fd < hd || fd - hd > 1 {
        return Err(SubsymError::ValidationFail(format!(
            "holonomy pair dims ({hd},{fd}) violate the codimension-≤1 rule"
        )));
    }
    let (lh, lf) = classify_pair(&hor, &full, &q.b, j)?;
    let fingerprint = killing_fingerprint(&q.table);
    let zm = match_zoo(&fingerprint, m).map_err(|e| SubsymError::Validation(e.to_string()))?;
    let tau_star = q.tau_star()?;
    let scal_tau = algebraic_webster_scalar(&q)?;
    let jac = q.table.jacobi_residual_max().is_zero();
    Ok(ZooResult {
        kind_name,
        tau_star_zero: tau_star.is_zero_exact(),
        tau_star,
        a_xi,
        ad_xi: q.ad_xi_on_p()?,
        hol_horizontal_dim: hd,
        hol_adapted_dim: fd,
        hol_horizontal_label: lh,
        hol_adapted_label: lf,
        fingerprint,
        zoo_match: zm,
        scal_tau,
        jacobi_residual_zero: jac,
        quadruple: q,
    })
}

fn span_dim(mats: &[Mat]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let n = mats[0].rows();
    let mut s = SubspaceBasis::empty(n * n, Backend::Rational);
    for m in mats {
        s.insert(m.flatten(), 0.0);
    }
    s.dim()
}

pub fn zoo(kind: &ZooKind) -> Result<ZooResult, SubsymError> {
    match kind {
        ZooKind::Heisenberg { m } => zoo_heisenberg(*m),
        ZooKind::TorsionFamily { m, lambda, mu } => zoo_torsion_family(*m, lambda, mu),
        ZooKind::CpnSphere { m } => zoo_cpn(*m),
        ZooKind::HrssCircle(data) => zoo_hrss(data),
    }
}

fn zoo_heisenberg(m: usize) -> Result<ZooResult, SubsymError> {
    let dp = 2 * m;
    let theta = std_j(m).neg(); // Θ(X_i, Y_i) = 1, the standard symplectic form
    let zero = Mat::zeros(dp, dp, Backend::Rational);
    let q = from_local_data(dp, &|_, _| zero.clone(), &theta, &zero, &[], &Mat::identity(dp, Backend::Rational))?;
    finish_result(format!("heisenberg(m={m})"), q, m, Some(&std_j(m)))
}

/// §8 torsion family: 𝔭 = R^m⊗f₁ ⊕ R^m⊗f₂, 𝔨 = so(m) diagonal,
/// ad_ξ = [[λ,−μ],[μ,−λ]]⊗1, R_W(Xf₁,Yf₂) = λX∧Y, R_W(Xfα,Yfα) = −μX∧Y.
fn zoo_torsion_family(m: usize, lambda: &BigRational, mu: &BigRational) -> Result<ZooResult, SubsymError> {
    if !lambda.is_positive() {
        return Err(SubsymError::ParamDomain("λ must be positive".into()));
    }
    let dp = 2 * m;
    let k_span = so_m_diag_matrices(m);
    // wedge X∧Y for unit vectors: diag(A_ij, A_ij) with A = E_ji − E_ij …
    // here (e_i∧e_j)(v) = δ_iv e_j − δ_jv e_i, i.e. column i ↦ e_j etc.
    let wedge = |i: usize, j: usize| -> Mat {
        let mut a = Mat::zeros(dp, dp, Backend::Rational);
        if i != j {
            a.set(j, i, Scalar::from_int(1));
            a.set(i, j, Scalar::from_int(-1));
            a.set(m + j, m + i, Scalar::from_int(1));
            a.set(m + i, m + j, Scalar::from_int(-1));
        }
        a
    };
    let lam = lambda.clone();
    let muv = mu.clone();
    let r_w = move |a: usize, b: usize| -> Mat {
        let (fa, ia) = (a / m, a % m);
        let (fb, ib) = (b / m, b % m);
        if fa == fb {
            wedge(ia, ib).scale(&Scalar::Rat(-muv.clone()))
        } else if fa == 0 {
            wedge(ia, ib).scale(&Scalar::Rat(lam.clone()))
        } else {
            // R_W(Xf₂, Yf₁) = −R_W(Yf₁, Xf₂)
            wedge(ib, ia).scale(&Scalar::Rat(lam.clone())).neg()
        }
    };
    // Θ(e_i⊗f₁, e_j⊗f₂) = δ_ij
    let mut theta = Mat::zeros(dp, dp, Backend::Rational);
    for i in 0..m {
        theta.set(i, m + i, Scalar::from_int(1));
        theta.set(m + i, i, Scalar::from_int(-1));
    }
    // ad_ξ = [[λ1, −μ1], [μ1, −λ1]]
    let mut n_w = Mat::zeros(dp, dp, Backend::Rational);
    for i in 0..m {
        n_w.set(i, i, Scalar::Rat(lambda.clone()));
        n_w.set(i, m + i, Scalar::Rat(-mu.clone()));
        n_w.set(m + i, i, Scalar::Rat(mu.clone()));
        n_w.set(m + i, m + i, Scalar::Rat(-lambda.clone()));
    }
    let q = from_local_data(dp, &r_w, &theta, &n_w, &k_span, &Mat::identity(dp, Backend::Rational))?;
    let result = finish_result(
        format!("torsion-family(m={m}, λ={lambda}, μ={mu})"),
        q,
        m,
        Some(&std_j(m)),
    )?;

    // scal^τ = 2µm² exactly
    let want = BigRational::from_integer((2 * (m * m) as i64).into()) * mu;
    if result.scal_tau != want {
        return Err(SubsymError::ValidationFail(format!(
            "scal^τ = {} but the family requires 2µm² = {want}",
            result.scal_tau
        )));
    }
    // the §8 case split for the isomorphism type
    let expected = expected_family_label(lambda, mu);
    if result.zoo_match != ZooMatch::Label(expected) {
        return Err(SubsymError::ValidationFail(format!(
            "family (λ={lambda}, µ={mu}) matched {} instead of {:?}",
            result.zoo_match, expected
        )));
    }
    Ok(result)
}

/// µ=0 or 0≠|µ|<λ → so(1,m+1); µ=λ → so(m+1)⋉R^{m+1}; µ=−λ → so(1,m)⋉R^{1,m};
/// |µ|>λ → so(m+2) for µ>0, so(2,m) for µ<0.
pub fn expected_family_label(lambda: &BigRational, mu: &BigRational) -> liealg::ZooLabel {
    use liealg::ZooLabel::*;
    let am = mu.abs();
    if mu.is_zero() || &am < lambda {
        So1MPlus1
    } else if &am == lambda {
        if mu.is_positive() {
            EuclideanMotion
        } else {
            PoincareMotion
        }
    } else if mu.is_positive() {
        SoMPlus2
    } else {
        So2M
    }
}

/// The shipped HRSS instance: su(m+1) = u(m) ⊕ C^m, the S¹-bundle over CP^m.
fn zoo_cpn(m: usize) -> Result<ZooResult, SubsymError> {
    let k = m + 1;
    // real 2k×2k realization of su(m+1); basis ordered 𝔭 (2m), 𝔨 = su(m)
    // block (m²−1), ξ = i·diag(−m,1,…,1)/(m+1)
    let emb = |a: &Mat, b: &Mat| -> Mat {
        Mat::construct(2 * k, 2 * k, Backend::Rational, |i, j| {
            let (bi, bj) = (i / k, j / k);
            let (ii, jj) = (i % k, j % k);
            match (bi, bj) {
                (0, 0) | (1, 1) => a.at(ii, jj).clone(),
                (0, 1) => b.at(ii, jj).neg(),
                (1, 0) => b.at(ii, jj).clone(),
                _ => unreachable!(),
            }
        })
    };
    let zero = Mat::zeros(k, k, Backend::Rational);
    let mut basis: Vec<Mat> = Vec::new();
    // 𝔭: A_{0t} = E_{0t} − E_{t0}, S_{0t} = i(E_{0t} + E_{t0}), t = 1..m
    for t in 1..=m {
        let mut a = Mat::zeros(k, k, Backend::Rational);
        a.set(0, t, Scalar::from_int(1));
        a.set(t, 0, Scalar::from_int(-1));
        basis.push(emb(&a, &zero));
    }
    for t in 1..=m {
        let mut b = Mat::zeros(k, k, Backend::Rational);
        b.set(0, t, Scalar::from_int(1));
        b.set(t, 0, Scalar::from_int(1));
        basis.push(emb(&zero, &b));
    }
    // 𝔨 = su(m) on indices 1..m
    for i in 1..=m {
        for j in (i + 1)..=m {
            let mut a = Mat::zeros(k, k, Backend::Rational);
            a.set(i, j, Scalar::from_int(1));
            a.set(j, i, Scalar::from_int(-1));
            basis.push(emb(&a, &zero));
            let mut b = Mat::zeros(k, k, Backend::Rational);
            b.set(i, j, Scalar::from_int(1));
            b.set(j, i, Scalar::from_int(1));
            basis.push(emb(&zero, &b));
        }
    }
    for i in 1..m {
        let mut b = Mat::zeros(k, k, Backend::Rational);
        b.set(i, i, Scalar::from_int(1));
        b.set(i + 1, i + 1, Scalar::from_int(-1));
        basis.push(emb(&zero, &b));
    }
    let k_dim = basis.len() - 2 * m;
    // ξ = i diag(−m, 1, …, 1)/(m+1)
    let mut zb = Mat::zeros(k, k, Backend::Rational);
    let s = BigRational::new(BigRational::one().numer().clone(), ((m + 1) as i64).into());
    zb.set(0, 0, Scalar::Rat(-BigRational::from_integer((m as i64).into()) * &s));
    for i in 1..=m {
        zb.set(i, i, Scalar::Rat(s.clone()));
    }
    basis.push(emb(&zero, &zb));

    let table = table_from_matrix_algebra(&basis).map_err(|e| SubsymError::Validation(e.to_string()))?;
    let dim = table.dim();
    let q = SubSymQuadruple {
        table,
        h_indices: (2 * m..dim).collect(),
        p_indices: (0..2 * m).collect(),
        k_basis: (0..k_dim)
            .map(|i| {
                let mut v = vec![BigRational::zero(); dim];
                v[2 * m + i] = BigRational::one();
                v
            })
            .collect(),
        xi_index: dim - 1,
        b: Mat::identity(2 * m, Backend::Rational),
    };
    let report = validate_quadruple(&q);
    if !report.all_pass {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
        return Err(SubsymError::ValidationFail(format!("CP^m quadruple axioms failed: {failed:?}")));
    }
    finish_result(format!("s1-bundle-over-CP^{m}"), q, m, None)
}

/// Generic HRSS S¹-bundle assembly from user factor data; validated like
/// every other constructor. The shipped CP^m instance is the golden case.
fn zoo_hrss(data: &HrssData) -> Result<ZooResult, SubsymError> {
    if data.factors.is_empty() {
        return Err(SubsymError::ParamDomain("HRSS data needs at least one factor".into()));
    }
    for f in &data.factors {
        if f.b_weight.is_zero() {
            return Err(SubsymError::ParamDomain("dθ weights bᵢ must be nonzero".into()));
        }
    }
    let dp: usize = data.factors.iter().map(|f| f.rep[0].rows()).sum();
    let hr: usize = data.factors.iter().map(|f| f.h_table.dim()).sum();
    // ξ lies inside ⊕𝔥ᵢ as the weighted J-combination, so 𝔤 = 𝔭 ⊕ (⊕𝔥ᵢ)
    let dim = dp + hr;
    let mut sparse: Vec<(usize, usize, usize, BigRational)> = Vec::new();
    let mut p_off = 0usize;
    let mut h_off = dp;
    for f in &data.factors {
        let dpi = f.rep[0].rows();
        let hi = f.h_table.dim();
        // [h_s, h_t]
        for (s, t, k, v) in f.h_table.to_sparse() {
            sparse.push((h_off + s, h_off + t, h_off + k, v));
        }
        // [h_t, p_j] = rep_t p_j
        for (t, repm) in f.rep.iter().enumerate() {
            for j in 0..dpi {
                for i in 0..dpi {
                    let v = repm.at(i, j).as_rat().unwrap().clone();
                    if !v.is_zero() {
                        sparse.push((h_off + t, p_off + j, p_off + i, v));
                    }
                }
            }
        }
        // [p_a, p_b] = −R(a,b) ∈ 𝔥ᵢ
        for a in 0..dpi {
            for b in (a + 1)..dpi {
                for (t, v) in f.curvature[a][b - a - 1].iter().enumerate() {
                    if !v.is_zero() {
                        sparse.push((p_off + a, p_off + b, h_off + t, -v.clone()));
                    }
                }
            }
        }
        p_off += dpi;
        h_off += hi;
    }
    let table = LieAlgebraTable::from_sparse(dim, &sparse, true).map_err(|e| match e {
        liealg::LieError::JacobiFail { residual, triple } => SubsymError::JacobiFail { residual, triple },
        other => SubsymError::Validation(other.to_string()),
    })?;
    // ξ = Σ (1/bᵢ) Jᵢ
    let mut xi = vec![BigRational::zero(); dim];
    let mut h_off = dp;
    for f in &data.factors {
        for (t, c) in f.j_element.iter().enumerate() {
            xi[h_off + t] = c / &f.b_weight;
        }
        h_off += f.h_table.dim();
    }
    // 𝔨 = annihilator of ξ under the trace pairing inside ⊕𝔥ᵢ: use the
    // complement of ⟨ξ⟩ spanned by [𝔥,𝔥] plus the J-combinations trace-
    // orthogonal to ξ; concretely: all 𝔥 directions v with coordinates
    // solving ⟨v, ξ⟩ = 0 for the Euclidean pairing on 𝔥-coordinates.
    let mut rows = vec![Vec::with_capacity(hr)];
    for t in 0..hr {
        rows[0].push(Scalar::Rat(xi[dp + t].clone()));
    }
    let cond = Mat::from_rows(rows).map_err(|e| SubsymError::Validation(e.to_string()))?;
    let (_, comp) = cond.rank_nullspace(None).map_err(|e| SubsymError::Validation(e.to_string()))?;
    let k_basis: Vec<Vec<BigRational>> = comp
        .vectors()
        .iter()
        .map(|v| {
            let mut w = vec![BigRational::zero(); dim];
            for t in 0..hr {
                w[dp + t] = v[t].as_rat().unwrap().clone();
            }
            w
        })
        .collect();
    // the designated ξ must be a basis direction: rebase so the last basis
    // vector is ξ itself
    let mut new_basis: Vec<Vec<BigRational>> = (0..dp).map(|i| unit(dim, i)).collect();
    new_basis.extend(k_basis.iter().cloned());
    new_basis.push(xi.clone());
    if new_basis.len() != dim {
        return Err(SubsymError::Validation("ξ/𝔨 split does not span 𝔥".into()));
    }
    let p = Mat::construct(dim, dim, Backend::Rational, |i, j| Scalar::Rat(new_basis[j][i].clone()));
    let table = table.change_basis(&p).map_err(|e| SubsymError::Validation(e.to_string()))?;
    let kd = k_basis.len();
    // factor reps are expected in B-orthonormal bases
    let b = Mat::identity(dp, Backend::Rational);
    let q = SubSymQuadruple {
        table,
        h_indices: (dp..dim).collect(),
        p_indices: (0..dp).collect(),
        k_basis: (0..kd).map(|i| unit(dim, dp + i)).collect(),
        xi_index: dim - 1,
        b,
    };
    let report = validate_quadruple(&q);
    if !report.all_pass {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
        return Err(SubsymError::ValidationFail(format!("HRSS quadruple axioms failed: {failed:?}")));
    }
    let m = dp / 2;
    finish_result(format!("s1-bundle-over-HRSS(r={})", data.factors.len()), q, m, None)
}

fn unit(dim: usize, i: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); dim];
    v[i] = BigRational::one();
    v
}
