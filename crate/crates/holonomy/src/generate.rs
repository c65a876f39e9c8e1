use crate::classify::{classify_subalgebra, HolFingerprint, HolLabel};
use crate::HolError;
use contactgeo::{cov_endo, cov_endo_xi, Geometry};
use num::rational::BigRational;
use numkit::{bracket_closure, Mat, SubspaceBasis};
use polycalc::RfMatrix;

pub const DEFAULT_DEPTH: usize = 2;
pub const MAX_DEPTH: usize = 4;
pub const ANALYTICITY_NOTE: &str = "infinitesimal holonomy via covariant-derivative deepening; equals restricted holonomy for rational-coefficient (real-analytic) data";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectionTag {
    Schouten,
    Adapted,
    Wagner,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HolMode {
    /// Seeds R(α) over Legendrian bivectors (realized as the Wagner
    /// curvature contracted with arbitrary constant bivectors), deepened by
    /// horizontal covariant derivatives.
    Horizontal,
    /// Horizontal seeds of the given extension plus the ξ-curvature block,
    /// deepened along frame and Reeb directions.
    Full(ConnectionTag),
}

#[derive(Debug, Clone)]
pub struct HolonomyReport {
    pub mode: HolMode,
    pub algebra: SubspaceBasis,
    pub basis: Vec<Mat>,
    pub dim: usize,
    pub depth_used: usize,
    pub stabilized: bool,
    pub label: HolLabel,
    pub fingerprint: HolFingerprint,
    pub analyticity_note: &'static str,
}

struct FieldFamily {
    /// Endomorphism fields known to be sections of the holonomy subbundle.
    fields: Vec<RfMatrix>,
}

fn seed_fields(geo: &Geometry, mode: HolMode) -> Result<FieldFamily, HolError> {
    let d = geo.model.dim_frame();
    let mut fields = Vec::new();
    match mode {
        HolMode::Horizontal => {
            // R^W(E_a, E_b): pointwise equal to Schouten curvature on
            // Legendrian bivectors, and R^W(dθ^{-1}) = 0, so this family
            // spans exactly {R(α) : α ∈ ker dθ} at every point.
            for a in 0..d {
                for b in (a + 1)..d {
                    fields.push(geo.r_wagner.get(a, b));
                }
            }
        }
        HolMode::Full(tag) => {
            let (r, rxi) = match tag {
                ConnectionTag::Adapted => (&geo.r_adapted, &geo.r_xi_adapted),
                ConnectionTag::Wagner => (&geo.r_wagner, &geo.r_xi_wagner),
                _ => return Err(HolError::BadMode("FULL mode needs a metric extension".into())),
            };
            for a in 0..d {
                for b in (a + 1)..d {
                    fields.push(r.get(a, b));
                }
            }
            for a in 0..d {
                fields.push(rxi[a].clone());
            }
        }
    }
    Ok(FieldFamily { fields })
}

fn deepen(geo: &Geometry, mode: HolMode, level: &[RfMatrix]) -> Vec<RfMatrix> {
    let d = geo.model.dim_frame();
    let mut out = Vec::new();
    for f in level {
        for c in 0..d {
            out.push(cov_endo(&geo.model, &geo.schouten, c, f));
        }
        if let HolMode::Full(tag) = mode {
            let conn = match tag {
                ConnectionTag::Adapted => &geo.adapted,
                ConnectionTag::Wagner => &geo.wagner,
                _ => unreachable!(),
            };
            let lambda = conn.lambda(&geo.model).expect("extension has Λ");
            out.push(cov_endo_xi(&geo.model, &lambda, f));
        }
    }
    out
}

/// Infinitesimal holonomy at p: evaluate the seed family and its covariant
/// derivatives up to `depth`, close under brackets, and report stabilization
/// (dimension unchanged from depth−1 to depth).
pub fn infinitesimal_holonomy(
    geo: &Geometry,
    mode: HolMode,
    depth: usize,
    p: &[BigRational],
) -> Result<HolonomyReport, HolError> {
    let depth = depth.min(MAX_DEPTH);
    let d = geo.model.dim_frame();
    let family = seed_fields(geo, mode)?;

    let mut mats: Vec<Mat> = Vec::new();
    let eval_all = |fields: &[RfMatrix], mats: &mut Vec<Mat>| -> Result<(), HolError> {
        for f in fields {
            mats.push(f.eval(p).map_err(|e| HolError::Calc(e.to_string()))?);
        }
        Ok(())
    };
    eval_all(&family.fields, &mut mats)?;
    let close = |mats: &[Mat]| -> Result<(usize, SubspaceBasis, Vec<Mat>), HolError> {
        let nonzero: Vec<Mat> = mats.iter().filter(|m| !m.is_zero_exact()).cloned().collect();
        if nonzero.is_empty() {
            let span = SubspaceBasis::empty(d * d, numkit::Backend::Rational);
            return Ok((0, span, Vec::new()));
        }
        let out = bracket_closure(&nonzero, d * d + 2, 0.0).map_err(|e| HolError::Calc(e.to_string()))?;
        if !out.stabilized {
            return Err(HolError::NoFixpoint);
        }
        Ok((out.span.dim(), out.span, out.basis))
    };

    let (mut dim_prev, mut span, mut basis) = close(&mats)?;
    // g-skew matrices bound the algebra dimension
    let max_dim = d * (d - 1) / 2;
    let mut level = family.fields;
    let mut depth_used = 0usize;
    let mut stabilized = depth == 0;
    for k in 1..=depth {
        // one quiet level does not certify a fixpoint for partial-direction
        // filtrations (growth can resume a level later), so the loop always
        // runs to the requested depth; the only sound early exits are an
        // identically-zero derivative level and the ambient skew bound.
        level = deepen(geo, mode, &level);
        level.retain(|f| !f.is_zero());
        depth_used = k;
        if level.is_empty() {
            stabilized = true;
            break;
        }
        eval_all(&level, &mut mats)?;
        let (dim_k, span_k, basis_k) = close(&mats)?;
        span = span_k;
        basis = basis_k;
        stabilized = dim_k == dim_prev;
        dim_prev = dim_k;
        if dim_k >= max_dim {
            stabilized = true;
            break;
        }
    }

    let g0 = geo.model.g.eval(p).map_err(|e| HolError::Calc(e.to_string()))?;
    let j0 = match &geo.model.j {
        Some(j) => Some(j.eval(p).map_err(|e| HolError::Calc(e.to_string()))?),
        None => None,
    };
    let (label, fingerprint) = classify_subalgebra(&basis, &g0, j0.as_ref())?;
    Ok(HolonomyReport {
        mode,
        dim: span.dim(),
        algebra: span,
        basis,
        depth_used,
        stabilized,
        label,
        fingerprint,
        analyticity_note: ANALYTICITY_NOTE,
    })
}

/// Deepen until the report stabilizes, escalating the depth up to MAX_DEPTH;
/// the NO_FIXPOINT outcome surfaces as `stabilized == false` on the result.
pub fn stabilized_holonomy(
    geo: &Geometry,
    mode: HolMode,
    p: &[BigRational],
) -> Result<HolonomyReport, HolError> {
    let mut depth = DEFAULT_DEPTH;
    loop {
        let rep = infinitesimal_holonomy(geo, mode, depth, p)?;
        if rep.stabilized || depth >= MAX_DEPTH {
            return Ok(rep);
        }
        depth += 1;
    }
}
