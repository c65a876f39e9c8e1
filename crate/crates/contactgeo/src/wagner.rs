use crate::connection::{adapted_connection, schouten_connection, sub_torsion, FrameConnection};
use crate::curvature::{extended_curvature, schouten_curvature, xi_curvature, CurvatureField};
use crate::model::ContactModel;
use crate::GeoError;
use num::rational::BigRational;
use num::traits::Zero;
use numkit::{Mat, Scalar};
use polycalc::{RatFunc, RfMatrix};

/// Pairing of a 2-form evaluation matrix with a bivector coefficient matrix:
/// ⟨ω, β⟩ = Σ_{a,b} ω(E_a,E_b) β^{ab}.
pub fn pairing(w: &RfMatrix, beta: &RfMatrix) -> RatFunc {
    let n = w.nvars();
    let d = w.rows();
    let mut acc = RatFunc::zero(n);
    for a in 0..d {
        for b in 0..d {
            if a == b {
                continue;
            }
            acc = acc.add(&w.at(a, b).mul(beta.at(a, b)));
        }
    }
    acc
}

pub fn pairing_at(w: &Mat, beta: &Mat) -> BigRational {
    let d = w.rows();
    let mut acc = BigRational::zero();
    for a in 0..d {
        for b in 0..d {
            if a == b {
                continue;
            }
            acc += w.at(a, b).as_rat().unwrap() * beta.at(a, b).as_rat().unwrap();
        }
    }
    acc
}

/// The inverse bivector dθ^{-1} := 2·W^{-1}; with the pairing above this
/// satisfies ⟨dθ, dθ^{-1}⟩ = −4m.
pub fn dtheta_inverse(model: &ContactModel) -> Result<RfMatrix, GeoError> {
    let winv = model.w.inverse().map_err(|_| GeoError::Validation("dθ degenerate on the frame".into()))?;
    Ok(winv.add(&winv))
}

/// All symbolic data of one model needed by the identity suite, the Wagner
/// connection, and downstream holonomy work.
pub struct Geometry {
    pub model: ContactModel,
    pub schouten: FrameConnection,
    pub adapted: FrameConnection,
    pub wagner: FrameConnection,
    pub tau_bil: RfMatrix,
    pub tau_endo: RfMatrix,
    pub r_schouten: CurvatureField,
    pub r_adapted: CurvatureField,
    pub r_wagner: CurvatureField,
    pub r_xi_adapted: Vec<RfMatrix>,
    pub r_xi_wagner: Vec<RfMatrix>,
    /// dθ^{-1} as a bivector coefficient field.
    pub beta: RfMatrix,
    /// Wagner Nomizu endomorphism N^W = (1/4m) R(dθ^{-1}).
    pub n_wagner: RfMatrix,
    /// Skew part C of N^W (N^W = τ + C).
    pub c_skew: RfMatrix,
}

impl Geometry {
    pub fn build(model: ContactModel) -> Result<Geometry, GeoError> {
        let schouten = schouten_connection(&model)?;
        let (tau_bil, tau_endo) = sub_torsion(&model);
        let adapted = adapted_connection(&model, &schouten);
        let r_schouten = schouten_curvature(&model, &schouten)?;
        let beta = dtheta_inverse(&model)?;

        // N^W = (1/4m) Σ β^{ab} R(E_a,E_b)
        let quarter = RatFunc::constant(model.n, BigRational::new(1.into(), (4 * model.m as i64).into()));
        let n_wagner = r_schouten.contract(&beta).scale(&quarter);
        // symmetric part (w.r.t. g) must equal τ; C is the skew remainder
        let sym = {
            let half = RatFunc::constant(model.n, BigRational::new(1.into(), 2.into()));
            n_wagner
                .add(&model.g_inv.mul(&n_wagner.transpose()).mul(&model.g))
                .scale(&half)
        };
        let c_skew = n_wagner.sub(&sym);
        let wagner = crate::connection::extend_connection(&model, &schouten, n_wagner.clone());

        let r_adapted = extended_curvature(&model, &r_schouten, &tau_endo);
        let r_wagner = extended_curvature(&model, &r_schouten, &n_wagner);
        let r_xi_adapted = xi_curvature(&model, &adapted)?;
        let r_xi_wagner = xi_curvature(&model, &wagner)?;

        Ok(Geometry {
            model,
            schouten,
            adapted,
            wagner,
            tau_bil,
            tau_endo,
            r_schouten,
            r_adapted,
            r_wagner,
            r_xi_adapted,
            r_xi_wagner,
            beta,
            n_wagner,
            c_skew,
        })
    }

    /// ⟨dθ, dθ^{-1}⟩, identically −4m on valid models.
    pub fn normalization_pairing(&self) -> RatFunc {
        pairing(&self.model.w, &self.beta)
    }

    /// Bivector coefficient matrix of the J-bivector, −J·g^{-1}; on
    /// pseudo-Hermitian models ⟨dθ, ·⟩ of it equals 2m.
    pub fn j_bivector(&self) -> Option<RfMatrix> {
        self.model.j.as_ref().map(|j| j.mul(&self.model.g_inv).neg())
    }

    /// dθ^{-1} evaluated at a point, with the −4m pairing asserted.
    pub fn dtheta_inverse_at(&self, p: &[BigRational]) -> Result<Mat, GeoError> {
        let w = self.model.w.eval(p).map_err(|e| GeoError::Calc(e.to_string()))?;
        let beta = self.beta.eval(p).map_err(|e| GeoError::Calc(e.to_string()))?;
        let pair = pairing_at(&w, &beta);
        let want = BigRational::from_integer((-(4 * self.model.m as i64)).into());
        if pair != want {
            return Err(GeoError::TheoremViolation(format!(
                "⟨dθ, dθ^{{-1}}⟩ = {pair} ≠ -4m at {p:?}"
            )));
        }
        Ok(beta)
    }

    /// Legendrian bivector basis at p: solve ⟨dθ_p, β⟩ = 0 on the
    /// antisymmetric coefficient matrices (one exact linear equation).
    pub fn legendrian_basis_at(&self, p: &[BigRational]) -> Result<Vec<Mat>, GeoError> {
        let d = self.model.dim_frame();
        let w = self.model.w.eval(p).map_err(|e| GeoError::Calc(e.to_string()))?;
        // coordinates: beta^{ab} for a<b; condition Σ 2 W_ab beta^ab = 0
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| ((a + 1)..d).map(move |b| (a, b))).collect();
        let row: Vec<Scalar> = pairs
            .iter()
            .map(|&(a, b)| {
                let two = BigRational::from_integer(2.into());
                Scalar::Rat(w.at(a, b).as_rat().unwrap() * two)
            })
            .collect();
        let mat = Mat::from_rows(vec![row]).map_err(|e| GeoError::Calc(e.to_string()))?;
        let (_, ns) = mat.rank_nullspace(None).map_err(|e| GeoError::Calc(e.to_string()))?;
        let mut out = Vec::new();
        for v in ns.vectors() {
            let mut b = Mat::zeros(d, d, numkit::Backend::Rational);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                b.set(i, j, v[k].clone());
                b.set(j, i, v[k].neg());
            }
            out.push(b);
        }
        Ok(out)
    }
}
