use crate::generate::{infinitesimal_holonomy, stabilized_holonomy, ConnectionTag, HolMode, HolonomyReport};
use crate::isotypic::isotypic_decomposition;
use crate::HolError;
use contactgeo::Geometry;
use num::rational::BigRational;

#[derive(Debug, Clone)]
pub struct DichotomyReport {
    pub codazzi: bool,
    pub horizontal: HolonomyReport,
    pub full_adapted: HolonomyReport,
    pub dim_difference: usize,
    /// For non-Codazzi models with irreducible adapted holonomy: the
    /// Riemannian-or-sp(k)+u(1) alternative, informational only.
    pub non_codazzi_note: Option<String>,
}

/// Codazzi ⇒ dim hol(∇^τ) − dim hol(∇) ∈ {0,1}; a violation is a hard error
/// by design (it cannot come from the input data).
pub fn dichotomy_report(geo: &Geometry, depth: usize, p: &[BigRational]) -> Result<DichotomyReport, HolError> {
    let codazzi = contactgeo::codazzi_defect(geo, p)
        .map_err(|e| HolError::Calc(e.to_string()))?
        .codazzi;
    let (horizontal, full_adapted) = if depth == 0 {
        (
            stabilized_holonomy(geo, HolMode::Horizontal, p)?,
            stabilized_holonomy(geo, HolMode::Full(ConnectionTag::Adapted), p)?,
        )
    } else {
        (
            infinitesimal_holonomy(geo, HolMode::Horizontal, depth, p)?,
            infinitesimal_holonomy(geo, HolMode::Full(ConnectionTag::Adapted), depth, p)?,
        )
    };
    if !horizontal.algebra.is_subspace_of(&full_adapted.algebra, 0.0) {
        return Err(HolError::TheoremViolation(
            "horizontal holonomy is not contained in the adapted holonomy".into(),
        ));
    }
    let diff = full_adapted.dim - horizontal.dim;
    if codazzi && diff > 1 {
        return Err(HolError::TheoremViolation(format!(
            "Codazzi model with holonomy dimension gap {diff} (must be 0 or 1)"
        )));
    }
    let mut note = None;
    if !codazzi {
        let g0 = geo.model.g.eval(p).map_err(|e| HolError::Calc(e.to_string()))?;
        let iso = isotypic_decomposition(&full_adapted.basis, &g0)?;
        if iso.d0_dim == 0 && iso.blocks.len() == 1 {
            note = Some(
                "adapted holonomy irreducible and torsion not Codazzi: algebra is a Riemannian holonomy algebra or sp(k)⊕u(1)"
                    .to_string(),
            );
        }
    }
    Ok(DichotomyReport {
        codazzi,
        horizontal,
        full_adapted,
        dim_difference: diff,
        non_codazzi_note: note,
    })
}
