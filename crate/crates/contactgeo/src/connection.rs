use crate::model::ContactModel;
use crate::GeoError;
use polycalc::{RatFunc, RfMatrix, DEGREE_GUARD};

/// Frame Christoffel data for a horizontal (partial) connection, plus the
/// Nomizu endomorphism when extended: gamma[a] is the matrix G_a with
/// (G_a)^c_b = Γ^c_{ab}, so ∇_{E_a} E_b = Σ_c (G_a)^c_b E_c.
#[derive(Debug, Clone)]
pub struct FrameConnection {
    pub gamma: Vec<RfMatrix>,
    /// Nomizu endomorphism N of the extension ∇^N_ξ X = [ξ,X] + N(X);
    /// None for the bare partial connection.
    pub nomizu: Option<RfMatrix>,
    /// Whether the extension satisfies g(NX,Y) + g(X,NY) = 2τ(X,Y).
    pub metric_extension: Option<bool>,
}

impl FrameConnection {
    /// Λ = P_ξ + N, the frame matrix of ∇^N_ξ. Requires an extension.
    pub fn lambda(&self, model: &ContactModel) -> Option<RfMatrix> {
        self.nomizu.as_ref().map(|n| model.p_xi.add(n))
    }
}

/// Sub-torsion τ = ½ L_ξ g on the frame, returned as (bilinear matrix,
/// endomorphism τ^a_b = g^{ac} τ_{cb}).
pub fn sub_torsion(model: &ContactModel) -> (RfMatrix, RfMatrix) {
    let d = model.d_xi_mat(&model.g);
    let pt_g = model.p_xi.transpose().mul(&model.g);
    let g_p = model.g.mul(&model.p_xi);
    let tau_bil = d.sub(&pt_g).sub(&g_p).scale(&RatFunc::constant(
        model.n,
        num::rational::BigRational::new(1.into(), 2.into()),
    ));
    let tau_endo = model.g_inv.mul(&tau_bil);
    (tau_bil, tau_endo)
}

/// Schouten connection from the Koszul formula on frame fields, with the
/// horizontal bracket projections already decomposed in the frame.
pub fn schouten_connection(model: &ContactModel) -> Result<FrameConnection, GeoError> {
    let d = model.dim_frame();
    let n = model.n;
    // K_{abc} = E_a g_{bc} + E_b g_{ca} - E_c g_{ab}
    //           + g(π[E_a,E_b],E_c) - g(π[E_b,E_c],E_a) - g(π[E_a,E_c],E_b)
    let dg: Vec<RfMatrix> = (0..d).map(|a| model.d_frame_mat(a, &model.g)).collect();
    let g_dot = |f: &Vec<RatFunc>, c: usize| -> RatFunc {
        let mut acc = RatFunc::zero(n);
        for e in 0..d {
            if f[e].is_zero() {
                continue;
            }
            acc = acc.add(&f[e].mul(model.g.at(e, c)));
        }
        acc
    };
    let mut gamma = Vec::with_capacity(d);
    for a in 0..d {
        let mut k_a = RfMatrix::zeros(d, d, n); // rows c, cols b
        for b in 0..d {
            for c in 0..d {
                let mut acc = dg[a].at(b, c).clone();
                acc = acc.add(dg[b].at(c, a));
                acc = acc.sub(dg[c].at(a, b));
                acc = acc.add(&g_dot(&model.brackets[a][b], c));
                acc = acc.sub(&g_dot(&model.brackets[b][c], a));
                acc = acc.sub(&g_dot(&model.brackets[a][c], b));
                k_a.set(c, b, acc);
            }
        }
        let g_a = model.g_inv.mul(&k_a).scale(&RatFunc::constant(
            n,
            num::rational::BigRational::new(1.into(), 2.into()),
        ));
        g_a.check_degree(DEGREE_GUARD).map_err(|e| GeoError::Calc(e.to_string()))?;
        gamma.push(g_a);
    }
    Ok(FrameConnection { gamma, nomizu: None, metric_extension: None })
}

/// Attach a Nomizu endomorphism; metric compatibility of the extension holds
/// iff g(NX,Y) + g(X,NY) = 2τ(X,Y), which is checked and reported.
pub fn extend_connection(
    model: &ContactModel,
    conn: &FrameConnection,
    nomizu: RfMatrix,
) -> FrameConnection {
    let (tau_bil, _) = sub_torsion(model);
    let sym = model.g.mul(&nomizu);
    let sym = sym.add(&sym.transpose());
    let two_tau = tau_bil.add(&tau_bil);
    let compatible = sym.sub(&two_tau).is_zero();
    FrameConnection {
        gamma: conn.gamma.clone(),
        nomizu: Some(nomizu),
        metric_extension: Some(compatible),
    }
}

/// The adapted (Tanaka–Webster) extension N = τ.
pub fn adapted_connection(model: &ContactModel, conn: &FrameConnection) -> FrameConnection {
    let (_, tau_endo) = sub_torsion(model);
    extend_connection(model, conn, tau_endo)
}

/// Residual of the metric condition E_a g_{bc} = Γ^d_{ab} g_{dc} + Γ^d_{ac} g_{bd}.
pub fn metric_condition_residual(model: &ContactModel, conn: &FrameConnection) -> Vec<RfMatrix> {
    (0..model.dim_frame())
        .map(|a| {
            let da = model.d_frame_mat(a, &model.g);
            let ga = &conn.gamma[a];
            da.sub(&ga.transpose().mul(&model.g)).sub(&model.g.mul(ga))
        })
        .collect()
}

/// Residual of the torsion condition Γ^c_{ab} − Γ^c_{ba} = (π[E_a,E_b])^c.
pub fn torsion_condition_residual(model: &ContactModel, conn: &FrameConnection) -> Vec<RatFunc> {
    let d = model.dim_frame();
    let mut out = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let r = conn.gamma[a]
                    .at(c, b)
                    .sub(conn.gamma[b].at(c, a))
                    .sub(&model.brackets[a][b][c]);
                out.push(r);
            }
        }
    }
    out
}

/// Covariant derivative of an endomorphism field along frame direction a.
pub fn cov_endo(model: &ContactModel, conn: &FrameConnection, a: usize, e: &RfMatrix) -> RfMatrix {
    model.d_frame_mat(a, e).add(&conn.gamma[a].commutator(e))
}

/// Covariant ξ-derivative of an endomorphism field for an extension.
pub fn cov_endo_xi(model: &ContactModel, lambda: &RfMatrix, e: &RfMatrix) -> RfMatrix {
    model.d_xi_mat(e).add(&lambda.commutator(e))
}

/// Covariant derivative of a 2-form-like frame matrix (both indices lower).
pub fn cov_bilinear(model: &ContactModel, conn: &FrameConnection, a: usize, w: &RfMatrix) -> RfMatrix {
    model
        .d_frame_mat(a, w)
        .sub(&conn.gamma[a].transpose().mul(w))
        .sub(&w.mul(&conn.gamma[a]))
}
