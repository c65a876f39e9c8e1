use crate::fingerprint::{killing_fingerprint, LieFingerprint};
use crate::table::{table_from_matrix_algebra, LieAlgebraTable};
use crate::LieError;
use num::rational::BigRational;
use numkit::{Backend, Mat, Scalar};
use std::fmt;

/// The stored isomorphism targets for the sub-symmetric zoo.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZooLabel {
    /// so(m+2)
    SoMPlus2,
    /// so(2,m)
    So2M,
    /// so(1,m+1)
    So1MPlus1,
    /// so(m+1) ⋉ R^{m+1}
    EuclideanMotion,
    /// so(1,m) ⋉ R^{1,m}
    PoincareMotion,
    /// Heisenberg algebra h^{2m+1}
    Heisenberg,
    /// su(m+1) (the shipped S^1-bundle instance over CP^m)
    SuMPlus1,
}

impl ZooLabel {
    pub const ALL: [ZooLabel; 7] = [
        ZooLabel::SoMPlus2,
        ZooLabel::So2M,
        ZooLabel::So1MPlus1,
        ZooLabel::EuclideanMotion,
        ZooLabel::PoincareMotion,
        ZooLabel::Heisenberg,
        ZooLabel::SuMPlus1,
    ];

    pub fn name(&self, m: usize) -> String {
        match self {
            ZooLabel::SoMPlus2 => format!("so({})", m + 2),
            ZooLabel::So2M => format!("so(2,{})", m),
            ZooLabel::So1MPlus1 => format!("so(1,{})", m + 1),
            ZooLabel::EuclideanMotion => format!("so({})⋉R^{}", m + 1, m + 1),
            ZooLabel::PoincareMotion => format!("so(1,{})⋉R^(1,{})", m, m),
            ZooLabel::Heisenberg => format!("heisenberg({})", 2 * m + 1),
            ZooLabel::SuMPlus1 => format!("su({})", m + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZooMatch {
    Label(ZooLabel),
    Ambiguous(Vec<ZooLabel>),
    NoMatch,
}

impl fmt::Display for ZooMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZooMatch::Label(l) => write!(f, "{:?}", l),
            ZooMatch::Ambiguous(ls) => write!(f, "AMBIGUOUS{:?}", ls),
            ZooMatch::NoMatch => write!(f, "NO_MATCH"),
        }
    }
}

fn so_eta_basis(eta: &[i64]) -> Vec<Mat> {
    let n = eta.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let mut m = Mat::zeros(n, n, Backend::Rational);
            m.set(a, b, Scalar::from_int(eta[b]));
            m.set(b, a, Scalar::from_int(-eta[a]));
            out.push(m);
        }
    }
    out
}

/// so(p,q) structure constants via matrix realization.
pub fn so_pq_table(p: usize, q: usize) -> LieAlgebraTable {
    let eta: Vec<i64> = (0..p + q).map(|i| if i < p { 1 } else { -1 }).collect();
    table_from_matrix_algebra(&so_eta_basis(&eta)).expect("so(p,q) closes")
}

/// so(p,q) ⋉ R^{p,q} via the affine matrix realization.
pub fn so_pq_semidirect_table(p: usize, q: usize) -> LieAlgebraTable {
    let n = p + q;
    let eta: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
    let mut basis = Vec::new();
    for b in so_eta_basis(&eta) {
        let mut m = Mat::zeros(n + 1, n + 1, Backend::Rational);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, b.at(i, j).clone());
            }
        }
        basis.push(m);
    }
    for i in 0..n {
        let mut m = Mat::zeros(n + 1, n + 1, Backend::Rational);
        m.set(i, n, Scalar::from_int(1));
        basis.push(m);
    }
    table_from_matrix_algebra(&basis).expect("affine algebra closes")
}

/// Heisenberg algebra h^{2m+1}: [X_i, Y_i] = Z.
pub fn heisenberg_table(m: usize) -> LieAlgebraTable {
    let dim = 2 * m + 1;
    let mut t = LieAlgebraTable::zero(dim);
    for i in 0..m {
        t.set_c(i, m + i, 2 * m, BigRational::from_integer(1.into()));
    }
    t
}

/// su(k) realized as real 2k x 2k matrices [[A, -B], [B, A]].
pub fn su_basis_real(k: usize) -> Vec<Mat> {
    let emb = |a: &Mat, b: &Mat| -> Mat {
        // A + iB -> [[A, -B], [B, A]]
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
    let mut out = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let mut a = Mat::zeros(k, k, Backend::Rational);
            a.set(i, j, Scalar::from_int(1));
            a.set(j, i, Scalar::from_int(-1));
            out.push(emb(&a, &zero));
            let mut b = Mat::zeros(k, k, Backend::Rational);
            b.set(i, j, Scalar::from_int(1));
            b.set(j, i, Scalar::from_int(1));
            out.push(emb(&zero, &b));
        }
    }
    for i in 0..(k - 1) {
        let mut b = Mat::zeros(k, k, Backend::Rational);
        b.set(i, i, Scalar::from_int(1));
        b.set(i + 1, i + 1, Scalar::from_int(-1));
        out.push(emb(&zero, &b));
    }
    out
}

pub fn su_table(k: usize) -> LieAlgebraTable {
    table_from_matrix_algebra(&su_basis_real(k)).expect("su(k) closes")
}

pub fn target_table(label: ZooLabel, m: usize) -> LieAlgebraTable {
    match label {
        ZooLabel::SoMPlus2 => so_pq_table(m + 2, 0),
        ZooLabel::So2M => so_pq_table(2, m),
        ZooLabel::So1MPlus1 => so_pq_table(1, m + 1),
        ZooLabel::EuclideanMotion => so_pq_semidirect_table(m + 1, 0),
        ZooLabel::PoincareMotion => so_pq_semidirect_table(1, m),
        ZooLabel::Heisenberg => heisenberg_table(m),
        ZooLabel::SuMPlus1 => su_table(m + 1),
    }
}

/// Fingerprints of all stored targets at a given m.
pub fn target_fingerprints(m: usize) -> Vec<(ZooLabel, LieFingerprint)> {
    ZooLabel::ALL
        .iter()
        .map(|&l| (l, killing_fingerprint(&target_table(l, m))))
        .collect()
}

/// Compare a fingerprint against the stored targets. Isomorphism detection
/// is fingerprint matching, not a full isomorphism algorithm; AMBIGUOUS is
/// an honest outcome when several targets collide.
pub fn match_zoo(fp: &LieFingerprint, m: usize) -> Result<ZooMatch, LieError> {
    let mut hits = Vec::new();
    for (label, tfp) in target_fingerprints(m) {
        if tfp == *fp {
            hits.push(label);
        }
    }
    Ok(match hits.len() {
        0 => ZooMatch::NoMatch,
        1 => ZooMatch::Label(hits[0]),
        _ => ZooMatch::Ambiguous(hits),
    })
}
