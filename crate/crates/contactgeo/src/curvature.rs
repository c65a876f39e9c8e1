use crate::connection::FrameConnection;
use crate::model::ContactModel;
use crate::GeoError;
use num::rational::BigRational;
use numkit::Mat;
use polycalc::{RfMatrix, DEGREE_GUARD};

/// The horizontal curvature family R(E_a, E_b) of a (bare or extended)
/// connection, stored for a < b; values are frame endomorphism matrices.
#[derive(Debug, Clone)]
pub struct CurvatureField {
    d: usize,
    upper: Vec<RfMatrix>, // (a,b), a<b
}

impl CurvatureField {
    fn idx(&self, a: usize, b: usize) -> usize {
        a * (2 * self.d - a - 1) / 2 + (b - a - 1)
    }

    pub fn dim_frame(&self) -> usize {
        self.d
    }

    pub fn get(&self, a: usize, b: usize) -> RfMatrix {
        if a == b {
            let n = self.upper[0].nvars();
            return RfMatrix::zeros(self.d, self.d, n);
        }
        if a < b {
            self.upper[self.idx(a, b)].clone()
        } else {
            self.upper[self.idx(b, a)].neg()
        }
    }

    /// Contract with a constant antisymmetric bivector coefficient matrix:
    /// R(β) = Σ_{a,b} β^{ab} R(E_a, E_b).
    pub fn contract_const(&self, beta: &Mat) -> RfMatrix {
        let n = self.upper[0].nvars();
        let mut acc = RfMatrix::zeros(self.d, self.d, n);
        for a in 0..self.d {
            for b in (a + 1)..self.d {
                let coeff = beta.at(a, b).as_rat().unwrap() - beta.at(b, a).as_rat().unwrap();
                if coeff == BigRational::from_integer(0.into()) {
                    continue;
                }
                acc = acc.add(&self.get(a, b).scale(&polycalc::RatFunc::constant(n, coeff)));
            }
        }
        acc
    }

    /// Contract with a rational-function bivector field β(x).
    pub fn contract(&self, beta: &RfMatrix) -> RfMatrix {
        let n = self.upper[0].nvars();
        let mut acc = RfMatrix::zeros(self.d, self.d, n);
        for a in 0..self.d {
            for b in (a + 1)..self.d {
                let coeff = beta.at(a, b).sub(beta.at(b, a));
                if coeff.is_zero() {
                    continue;
                }
                acc = acc.add(&self.get(a, b).scale(&coeff));
            }
        }
        acc
    }
}

/// Curvature of the bare Schouten connection in the frame:
/// R_ab = D_a(G_b) − D_b(G_a) + [G_a, G_b] − Σ_d (π[E_a,E_b])^d G_d + W_ab P_ξ.
pub fn schouten_curvature(model: &ContactModel, conn: &FrameConnection) -> Result<CurvatureField, GeoError> {
    let d = model.dim_frame();
    let mut upper = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            let mut r = model
                .d_frame_mat(a, &conn.gamma[b])
                .sub(&model.d_frame_mat(b, &conn.gamma[a]))
                .add(&conn.gamma[a].commutator(&conn.gamma[b]));
            for e in 0..d {
                if model.brackets[a][b][e].is_zero() {
                    continue;
                }
                r = r.sub(&conn.gamma[e].scale(&model.brackets[a][b][e]));
            }
            r = r.add(&model.p_xi.scale(model.w.at(a, b)));
            r.check_degree(DEGREE_GUARD).map_err(|e| GeoError::Calc(e.to_string()))?;
            upper.push(r);
        }
    }
    Ok(CurvatureField { d, upper })
}

/// Horizontal curvature of an extension: R^N(X,Y) = R(X,Y) + dθ(X,Y) N.
pub fn extended_curvature(
    model: &ContactModel,
    schouten: &CurvatureField,
    nomizu: &RfMatrix,
) -> CurvatureField {
    let d = model.dim_frame();
    let mut upper = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            upper.push(schouten.get(a, b).add(&nomizu.scale(model.w.at(a, b))));
        }
    }
    CurvatureField { d, upper }
}

/// ξ-curvature of an extension, straight from the curvature definition:
/// R^N(ξ,E_a) = D_ξ(G_a) + [Λ, G_a] − D_a(Λ) − Σ_c (P_ξ)^c_a G_c.
pub fn xi_curvature(model: &ContactModel, conn: &FrameConnection) -> Result<Vec<RfMatrix>, GeoError> {
    let lambda = conn
        .lambda(model)
        .ok_or_else(|| GeoError::Validation("ξ-curvature needs an extended connection".into()))?;
    let d = model.dim_frame();
    let mut out = Vec::new();
    for a in 0..d {
        let mut r = model
            .d_xi_mat(&conn.gamma[a])
            .add(&lambda.commutator(&conn.gamma[a]))
            .sub(&model.d_frame_mat(a, &lambda));
        for c in 0..d {
            if model.p_xi.at(c, a).is_zero() {
                continue;
            }
            r = r.sub(&conn.gamma[c].scale(model.p_xi.at(c, a)));
        }
        r.check_degree(DEGREE_GUARD).map_err(|e| GeoError::Calc(e.to_string()))?;
        out.push(r);
    }
    Ok(out)
}

/// Covariant derivative of a horizontal curvature family along frame c.
pub fn cov_curvature(
    model: &ContactModel,
    conn: &FrameConnection,
    c: usize,
    r: &CurvatureField,
) -> CurvatureField {
    let d = model.dim_frame();
    let mut upper = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            let mut v = model
                .d_frame_mat(c, &r.get(a, b))
                .add(&conn.gamma[c].commutator(&r.get(a, b)));
            for e in 0..d {
                if !conn.gamma[c].at(e, a).is_zero() {
                    v = v.sub(&r.get(e, b).scale(conn.gamma[c].at(e, a)));
                }
                if !conn.gamma[c].at(e, b).is_zero() {
                    v = v.sub(&r.get(a, e).scale(conn.gamma[c].at(e, b)));
                }
            }
            upper.push(v);
        }
    }
    CurvatureField { d, upper }
}

/// Covariant ξ-derivative of a curvature family for an extension with Λ.
pub fn cov_curvature_xi(model: &ContactModel, lambda: &RfMatrix, r: &CurvatureField) -> CurvatureField {
    let d = model.dim_frame();
    let mut upper = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            let mut v = model.d_xi_mat(&r.get(a, b)).add(&lambda.commutator(&r.get(a, b)));
            for e in 0..d {
                if !lambda.at(e, a).is_zero() {
                    v = v.sub(&r.get(e, b).scale(lambda.at(e, a)));
                }
                if !lambda.at(e, b).is_zero() {
                    v = v.sub(&r.get(a, e).scale(lambda.at(e, b)));
                }
            }
            upper.push(v);
        }
    }
    CurvatureField { d, upper }
}

/// Covariant derivative of the ξ-curvature family K_a = R^N(ξ, E_a).
pub fn cov_xi_family(
    model: &ContactModel,
    conn: &FrameConnection,
    c: usize,
    k: &[RfMatrix],
) -> Vec<RfMatrix> {
    let d = model.dim_frame();
    (0..d)
        .map(|a| {
            let mut v = model.d_frame_mat(c, &k[a]).add(&conn.gamma[c].commutator(&k[a]));
            for e in 0..d {
                if !conn.gamma[c].at(e, a).is_zero() {
                    v = v.sub(&k[e].scale(conn.gamma[c].at(e, a)));
                }
            }
            v
        })
        .collect()
}

/// Covariant ξ-derivative of the ξ-curvature family.
pub fn cov_xi_family_xi(model: &ContactModel, lambda: &RfMatrix, k: &[RfMatrix]) -> Vec<RfMatrix> {
    let d = k.len();
    (0..d)
        .map(|a| {
            let mut v = model.d_xi_mat(&k[a]).add(&lambda.commutator(&k[a]));
            for e in 0..d {
                if !lambda.at(e, a).is_zero() {
                    v = v.sub(&k[e].scale(lambda.at(e, a)));
                }
            }
            v
        })
        .collect()
}

/// Curvature evaluated at a point: R(e_a,e_b) matrices plus, for extensions,
/// the ξ-block R^N(ξ, e_a).
#[derive(Debug, Clone)]
pub struct CurvatureAtPoint {
    pub point: Vec<BigRational>,
    pub r_hor: Vec<Vec<Mat>>, // full (a,b) grid
    pub r_xi: Option<Vec<Mat>>,
}

pub fn curvature_at_point(
    model: &ContactModel,
    r: &CurvatureField,
    r_xi: Option<&[RfMatrix]>,
    p: &[BigRational],
) -> Result<CurvatureAtPoint, GeoError> {
    let d = model.dim_frame();
    let mut r_hor = Vec::with_capacity(d);
    for a in 0..d {
        let mut row = Vec::with_capacity(d);
        for b in 0..d {
            row.push(r.get(a, b).eval(p).map_err(|e| GeoError::Calc(e.to_string()))?);
        }
        r_hor.push(row);
    }
    let r_xi = match r_xi {
        Some(ks) => Some(
            ks.iter()
                .map(|k| k.eval(p).map_err(|e| GeoError::Calc(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    Ok(CurvatureAtPoint { point: p.to_vec(), r_hor, r_xi })
}
