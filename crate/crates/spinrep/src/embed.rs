use crate::SpinError;
use numkit::{Backend, Mat, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedLabel {
    U,
    Su,
    SoLagrangian,
    SoPlusU1,
    Sp,
    SpPlusU1,
}

impl EmbedLabel {
    pub fn parse(s: &str) -> Option<EmbedLabel> {
        match s.to_ascii_lowercase().as_str() {
            "u" => Some(EmbedLabel::U),
            "su" => Some(EmbedLabel::Su),
            "so" | "so-lagrangian" | "so_lagrangian" => Some(EmbedLabel::SoLagrangian),
            "so-u1" | "so_plus_u1" | "so+u1" => Some(EmbedLabel::SoPlusU1),
            "sp" => Some(EmbedLabel::Sp),
            "sp-u1" | "sp_plus_u1" | "sp+u1" => Some(EmbedLabel::SpPlusU1),
            _ => None,
        }
    }

    pub fn expected_dim(&self, m: usize) -> usize {
        match self {
            EmbedLabel::U => m * m,
            EmbedLabel::Su => m * m - 1,
            EmbedLabel::SoLagrangian => m * (m - 1) / 2,
            EmbedLabel::SoPlusU1 => m * (m - 1) / 2 + 1,
            EmbedLabel::Sp => (m / 2) * (m + 1),
            EmbedLabel::SpPlusU1 => (m / 2) * (m + 1) + 1,
        }
    }
}

fn std_j(m: usize) -> Mat {
    Mat::construct(2 * m, 2 * m, Backend::Rational, |r, c| {
        if r < m && c == r + m {
            Scalar::from_int(-1)
        } else if r >= m && c + m == r {
            Scalar::from_int(1)
        } else {
            Scalar::from_int(0)
        }
    })
}

fn diag_so(m: usize) -> Vec<Mat> {
    let n = 2 * m;
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut a = Mat::zeros(n, n, Backend::Rational);
            a.set(i, j, Scalar::from_int(1));
            a.set(j, i, Scalar::from_int(-1));
            a.set(m + i, m + j, Scalar::from_int(1));
            a.set(m + j, m + i, Scalar::from_int(-1));
            out.push(a);
        }
    }
    out
}

fn b_block(m: usize, i: usize, j: usize) -> Mat {
    // [[0, B], [−B, 0]] with B = E_ij + E_ji (or E_ii when i = j)
    let n = 2 * m;
    let mut a = Mat::zeros(n, n, Backend::Rational);
    a.set(i, m + j, Scalar::from_int(1));
    a.set(j, m + i, Scalar::from_int(1));
    a.set(m + i, j, Scalar::from_int(-1));
    a.set(m + j, i, Scalar::from_int(-1));
    a
}

/// Explicit basis matrices for the candidate holonomy algebras inside
/// so(2m), in the block conventions of the classification theorem.
pub fn embed_algebra(label: EmbedLabel, m: usize) -> Result<Vec<Mat>, SpinError> {
    if matches!(label, EmbedLabel::Sp | EmbedLabel::SpPlusU1) && m % 2 != 0 {
        return Err(SpinError::LabelDomain("sp needs even m".into()));
    }
    let mut out = Vec::new();
    match label {
        EmbedLabel::U => {
            out.extend(diag_so(m));
            for i in 0..m {
                for j in i..m {
                    out.push(b_block(m, i, j));
                }
            }
        }
        EmbedLabel::Su => {
            out.extend(diag_so(m));
            for i in 0..m {
                for j in (i + 1)..m {
                    out.push(b_block(m, i, j));
                }
            }
            for i in 0..m - 1 {
                out.push(b_block(m, i, i).sub(&b_block(m, i + 1, i + 1)).unwrap());
            }
        }
        EmbedLabel::SoLagrangian => out.extend(diag_so(m)),
        EmbedLabel::SoPlusU1 => {
            out.extend(diag_so(m));
            out.push(std_j(m));
        }
        EmbedLabel::Sp | EmbedLabel::SpPlusU1 => {
            // commutant of two anticommuting complex structures inside so(4k)
            let n = 2 * m;
            let j1 = std_j(m);
            let k = m / 2;
            // K = complex structure on R^m
            let kk = Mat::construct(m, m, Backend::Rational, |r, c| {
                if r < k && c == r + k {
                    Scalar::from_int(-1)
                } else if r >= k && c + k == r {
                    Scalar::from_int(1)
                } else {
                    Scalar::from_int(0)
                }
            });
            let mut j2 = Mat::zeros(n, n, Backend::Rational);
            for i in 0..m {
                for jdx in 0..m {
                    j2.set(i, jdx, kk.at(i, jdx).clone());
                    j2.set(m + i, m + jdx, kk.at(i, jdx).neg());
                }
            }
            // sanity: J1J2 + J2J1 = 0
            let anti = j1.mul(&j2).unwrap().add(&j2.mul(&j1).unwrap()).unwrap();
            if !anti.is_zero_exact() {
                return Err(SpinError::Construction("sp embedding: J1, J2 do not anticommute".into()));
            }
            // solve: X skew, [X, J1] = 0, [X, J2] = 0
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            let idx = |i: usize, j: usize| i * n + j;
            for i in 0..n {
                for j in 0..n {
                    // skew: X_ij + X_ji = 0
                    let mut row = vec![Scalar::from_int(0); n * n];
                    row[idx(i, j)] = row[idx(i, j)].add(&Scalar::from_int(1));
                    row[idx(j, i)] = row[idx(j, i)].add(&Scalar::from_int(1));
                    rows.push(row);
                    // commutation rows: (XJ − JX)_ij = Σ_k X_ik J_kj − J_ik X_kj
                    for jj in [&j1, &j2] {
                        let mut row = vec![Scalar::from_int(0); n * n];
                        for t in 0..n {
                            let a = row[idx(i, t)].add(jj.at(t, j));
                            row[idx(i, t)] = a;
                            let b = row[idx(t, j)].sub(jj.at(i, t));
                            row[idx(t, j)] = b;
                        }
                        rows.push(row);
                    }
                }
            }
            let mat = Mat::from_rows(rows).unwrap();
            let (_, ns) = mat.rank_nullspace(None).unwrap();
            for v in ns.vectors() {
                out.push(Mat::from_flat(n, n, v));
            }
            if matches!(label, EmbedLabel::SpPlusU1) {
                out.push(j1);
            }
        }
    }
    if out.len() != label.expected_dim(m) {
        return Err(SpinError::Construction(format!(
            "{label:?} embedding has dim {} (expected {})",
            out.len(),
            label.expected_dim(m)
        )));
    }
    Ok(out)
}
