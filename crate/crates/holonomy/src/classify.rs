use crate::HolError;
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use numkit::{bracket_closure, commutant, invariant_complex_structures, Backend, Mat, Scalar, SubspaceBasis};

/// Labels of Theorem-of-§7 candidates plus the trivial and unknown cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HolLabel {
    Trivial,
    /// so(m) preserving a Lagrangian splitting E ⊕ JE.
    SoMLagrangian,
    SoMPlusU1,
    SuM,
    UM,
    Other,
}

impl HolLabel {
    pub fn expected_dim(&self, m: usize) -> Option<usize> {
        match self {
            HolLabel::Trivial => Some(0),
            HolLabel::SoMLagrangian => Some(m * (m - 1) / 2),
            HolLabel::SoMPlusU1 => Some(m * (m - 1) / 2 + 1),
            HolLabel::SuM => Some(m * m - 1),
            HolLabel::UM => Some(m * m),
            HolLabel::Other => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            HolLabel::Trivial => "TRIVIAL",
            HolLabel::SoMLagrangian => "SO_M_LAGRANGIAN",
            HolLabel::SoMPlusU1 => "SO_M_PLUS_U1",
            HolLabel::SuM => "SU_M",
            HolLabel::UM => "U_M",
            HolLabel::Other => "OTHER",
        }
    }
}

#[derive(Debug, Clone)]
pub struct HolFingerprint {
    pub dim: usize,
    pub commutant_dim: usize,
    pub has_invariant_j: bool,
    pub invariant_subspace_dims: Vec<usize>,
}

fn span_of(mats: &[Mat], n: usize) -> SubspaceBasis {
    let mut s = SubspaceBasis::empty(n * n, Backend::Rational);
    for m in mats {
        s.insert(m.flatten(), 0.0);
    }
    s
}

/// Elements of `space` (a span of matrices) that are g-symmetric and
/// anticommute with J: the carrier of the Lagrangian-splitting certificate.
fn symmetric_anti_j(space: &SubspaceBasis, g: &Mat, j: &Mat) -> Vec<Mat> {
    let n = g.rows();
    let k = space.dim();
    if k == 0 {
        return Vec::new();
    }
    // unknowns: coefficients on space basis; conditions:
    //   (gK)^T - gK = 0 and KJ + JK = 0
    let basis: Vec<Mat> = space.matrices(n, n);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for jj in 0..n {
            let mut row_sym = Vec::with_capacity(k);
            let mut row_anti = Vec::with_capacity(k);
            for b in &basis {
                let gk = g.mul(b).unwrap();
                row_sym.push(gk.at(i, jj).sub(gk.at(jj, i)));
                let anti = b.mul(j).unwrap().add(&j.mul(b).unwrap()).unwrap();
                row_anti.push(anti.at(i, jj).clone());
            }
            rows.push(row_sym);
            rows.push(row_anti);
        }
    }
    let m = Mat::from_rows(rows).unwrap();
    let (_, ns) = m.rank_nullspace(None).unwrap();
    ns.vectors()
        .iter()
        .map(|coef| {
            let mut acc = Mat::zeros(n, n, Backend::Rational);
            for (cb, b) in coef.iter().zip(basis.iter()) {
                acc = acc.add(&b.scale(cb)).unwrap();
            }
            acc
        })
        .filter(|mcand| !mcand.is_zero_exact())
        .collect()
}

/// True when K² = q·Id for a positive rational q; such K normalizes to a
/// g-symmetric involution anticommuting with J, i.e. an invariant Lagrangian
/// splitting exists (the square root itself is never taken).
fn squares_to_positive_scalar(k: &Mat) -> bool {
    let n = k.rows();
    let k2 = k.mul(k).unwrap();
    let q = k2.at(0, 0).as_rat().unwrap().clone();
    if !q.is_positive() {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { q.clone() } else { BigRational::zero() };
            if k2.at(i, j).as_rat().unwrap() != &want {
                return false;
            }
        }
    }
    true
}

fn lagrangian_certificate(h: &[Mat], g: &Mat, j: &Mat) -> bool {
    let n = g.rows();
    let comm_span = if h.is_empty() {
        numkit::full_matrix_space(n, Backend::Rational)
    } else {
        match commutant(h) {
            Ok(c) => c,
            Err(_) => return false,
        }
    };
    symmetric_anti_j(&comm_span, g, j).iter().any(squares_to_positive_scalar)
}

/// Structural decision tree: dimension gate plus commutant, invariant-J, and
/// Lagrangian-splitting certificates. Dimension alone never labels.
pub fn classify_subalgebra(
    h: &[Mat],
    g: &Mat,
    j_hint: Option<&Mat>,
) -> Result<(HolLabel, HolFingerprint), HolError> {
    let n = g.rows();
    let m = n / 2;
    let nonzero: Vec<Mat> = h.iter().filter(|x| !x.is_zero_exact()).cloned().collect();
    let span = span_of(&nonzero, n);
    let dim = span.dim();

    // bracket-closure sanity: a holonomy candidate must be closed
    if !nonzero.is_empty() {
        let closed = bracket_closure(&nonzero, n * n + 2, 0.0).map_err(|e| HolError::Calc(e.to_string()))?;
        if closed.span.dim() != dim {
            return Err(HolError::NotClosed);
        }
    }

    let commutant_dim = if nonzero.is_empty() {
        n * n
    } else {
        commutant(&nonzero).map_err(|e| HolError::Calc(e.to_string()))?.dim()
    };

    // invariant complex structure: prefer the model J when it commutes
    let mut j_found: Option<Mat> = None;
    if let Some(j) = j_hint {
        let commutes = nonzero.iter().all(|x| x.commutator(j).unwrap().is_zero_exact());
        if commutes {
            j_found = Some(j.clone());
        }
    }
    if j_found.is_none() {
        let js = invariant_complex_structures(&nonzero, g).map_err(|e| HolError::Calc(e.to_string()))?;
        j_found = js.into_iter().find(|k| k.backend() == Backend::Rational);
    }
    let has_j = j_found.is_some();

    let iso = crate::isotypic::isotypic_decomposition(&nonzero, g)?;
    let mut block_dims: Vec<usize> = iso.blocks.iter().map(|b| b.dim).collect();
    if iso.d0_dim > 0 {
        block_dims.push(iso.d0_dim);
    }
    block_dims.sort_unstable();
    let fingerprint = HolFingerprint {
        dim,
        commutant_dim,
        has_invariant_j: has_j,
        invariant_subspace_dims: block_dims,
    };

    if dim == 0 {
        return Ok((HolLabel::Trivial, fingerprint));
    }
    let Some(j) = j_found else {
        return Ok((HolLabel::Other, fingerprint));
    };

    let j_in_span = span.contains_mat(&j, 0.0);
    let trace_j = |a: &Mat| -> BigRational { j.mul(a).unwrap().trace().as_rat().unwrap().clone() };
    let all_traceless = nonzero.iter().all(|a| trace_j(a).is_zero());

    if dim == m * m && j_in_span {
        return Ok((HolLabel::UM, fingerprint));
    }
    if dim == m * m - 1 && !j_in_span && all_traceless {
        return Ok((HolLabel::SuM, fingerprint));
    }
    if dim == m * (m - 1) / 2 && !j_in_span && all_traceless && lagrangian_certificate(&nonzero, g, &j) {
        return Ok((HolLabel::SoMLagrangian, fingerprint));
    }
    if dim == m * (m - 1) / 2 + 1 && j_in_span {
        // split off the J-trace-zero part and certify it as so(m)
        let basis = span.matrices(n, n);
        let traces: Vec<BigRational> = basis.iter().map(|a| trace_j(a)).collect();
        let jj_trace = trace_j(&j); // = -2m, nonzero
        let h0: Vec<Mat> = basis
            .iter()
            .zip(traces.iter())
            .map(|(a, t)| a.sub(&j.scale(&Scalar::Rat(t / &jj_trace))).unwrap())
            .filter(|a| !a.is_zero_exact())
            .collect();
        let h0_span = span_of(&h0, n);
        if h0_span.dim() == m * (m - 1) / 2 && lagrangian_certificate(&h0, g, &j) {
            return Ok((HolLabel::SoMPlusU1, fingerprint));
        }
    }
    Ok((HolLabel::Other, fingerprint))
}
