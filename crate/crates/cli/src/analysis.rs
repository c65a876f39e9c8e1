use crate::report::*;
use crate::CliError;
use contactgeo::{ContactModel, Geometry, IdentityStatus};
use holonomy::{ConnectionTag, HolLabel, HolMode};
use num::rational::BigRational;

pub struct AnalyzeOptions {
    pub depth: usize, // 0 = escalate to stabilization
    pub point: Option<Vec<BigRational>>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { depth: 0, point: None }
    }
}

fn hol_report(
    geo: &Geometry,
    mode: HolMode,
    depth: usize,
    p: &[BigRational],
) -> Result<holonomy::HolonomyReport, CliError> {
    let rep = if depth == 0 {
        holonomy::stabilized_holonomy(geo, mode, p)
    } else {
        holonomy::infinitesimal_holonomy(geo, mode, depth, p)
    }
    .map_err(|e| CliError::Internal(e.to_string()))?;
    if !rep.stabilized {
        return Err(CliError::NoFixpoint(format!(
            "{mode:?} holonomy still growing at depth {}",
            rep.depth_used
        )));
    }
    Ok(rep)
}

fn entry(connection: &str, rep: &holonomy::HolonomyReport) -> HolonomyEntry {
    HolonomyEntry {
        connection: connection.to_string(),
        dim: rep.dim,
        label: rep.label.as_str().to_string(),
        depth_used: rep.depth_used,
        stabilized: rep.stabilized,
        commutant_dim: rep.fingerprint.commutant_dim,
        has_invariant_j: rep.fingerprint.has_invariant_j,
        invariant_subspace_dims: rep.fingerprint.invariant_subspace_dims.clone(),
    }
}

/// The full pipeline: Reeb → τ → connections → curvature → identities →
/// holonomy → classification → (CR, spinors).
pub fn analyze(model: ContactModel, opts: &AnalyzeOptions) -> Result<Report, CliError> {
    let geo = Geometry::build(model).map_err(|e| CliError::Validation(e.to_string()))?;
    let p = opts.point.clone().unwrap_or_else(|| geo.model.base_point.clone());

    let ledger_raw = contactgeo::identity_suite(&geo).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut failed = Vec::new();
    let identity_ledger: Vec<IdentityEntry> = ledger_raw
        .iter()
        .map(|c| {
            if c.status == IdentityStatus::Failed {
                failed.push(c.name.clone());
            }
            IdentityEntry {
                name: c.name.clone(),
                status: match c.status {
                    IdentityStatus::Proved => "PROVED",
                    IdentityStatus::Sampled => "SAMPLED",
                    IdentityStatus::Failed => "FAILED",
                }
                .to_string(),
                detail: c.detail.clone(),
            }
        })
        .collect();
    if !failed.is_empty() {
        return Err(CliError::TheoremViolation(format!(
            "identity suite failed: {failed:?}"
        )));
    }

    let hor = hol_report(&geo, HolMode::Horizontal, opts.depth, &p)?;
    let adapted = hol_report(&geo, HolMode::Full(ConnectionTag::Adapted), opts.depth, &p)?;
    let wagner = hol_report(&geo, HolMode::Full(ConnectionTag::Wagner), opts.depth, &p)?;

    let wagner_equals_horizontal = hor.algebra.equals(&wagner.algebra, 0.0);
    if !wagner_equals_horizontal {
        return Err(CliError::TheoremViolation(
            "FULL(WAGNER) differs from HORIZONTAL holonomy".into(),
        ));
    }

    let codazzi = contactgeo::codazzi_defect(&geo, &p)
        .map_err(|e| CliError::Internal(e.to_string()))?
        .codazzi;
    let diff = adapted.dim - hor.dim; // containment enforced below
    if !hor.algebra.is_subspace_of(&adapted.algebra, 0.0) {
        return Err(CliError::TheoremViolation(
            "horizontal holonomy not contained in adapted holonomy".into(),
        ));
    }
    if codazzi && diff > 1 {
        return Err(CliError::TheoremViolation(format!(
            "Codazzi model with holonomy gap {diff}"
        )));
    }
    let non_codazzi_note = if !codazzi {
        let g0 = geo.model.g.eval(&p).map_err(|e| CliError::Internal(e.to_string()))?;
        let iso = holonomy::isotypic_decomposition(&adapted.basis, &g0)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        (iso.d0_dim == 0 && iso.blocks.len() == 1).then(|| {
            "adapted holonomy irreducible, torsion not Codazzi: Riemannian holonomy algebra or sp(k)+u(1)".to_string()
        })
    } else {
        None
    };

    // normalization pairings
    let beta = geo.dtheta_inverse_at(&p).map_err(|e| CliError::TheoremViolation(e.to_string()))?;
    let w0 = geo.model.w.eval(&p).map_err(|e| CliError::Internal(e.to_string()))?;
    let pairing = contactgeo::pairing_at(&w0, &beta);
    let j_pairing = match geo.j_bivector() {
        Some(bj) => {
            let bj0 = bj.eval(&p).map_err(|e| CliError::Internal(e.to_string()))?;
            Some(contactgeo::pairing_at(&w0, &bj0).to_string())
        }
        None => None,
    };

    // CR / Ricci block
    let mut pseudo_hermitian = false;
    let mut pseudo_einstein = None;
    let cr = if geo.model.j.is_some() {
        let crt = contactgeo::cr_toolkit(&geo).map_err(|e| CliError::Validation(e.to_string()))?;
        pseudo_hermitian = crt.nijenhuis_zero
            && crt.g_matches_dtheta_j
            && crt.tw_equals_adapted
            && crt.webster_torsion_anticommutes_j;
        let ricci = contactgeo::ricci_suite(&geo, &p).map_err(|e| CliError::Internal(e.to_string()))?;
        if !ricci.ric_tw_residual_zero {
            return Err(CliError::TheoremViolation("RicTW identity residual nonzero".into()));
        }
        pseudo_einstein = Some(ricci.pseudo_einstein);
        Some(CrSection {
            nijenhuis_zero: crt.nijenhuis_zero,
            g_matches_dtheta_j: crt.g_matches_dtheta_j,
            tw_equals_adapted: crt.tw_equals_adapted,
            webster_torsion_anticommutes_j: crt.webster_torsion_anticommutes_j,
            webster_scalar: ricci.scal.to_string(),
            pseudo_einstein: ricci.pseudo_einstein,
            ric_tw_residual_zero: ricci.ric_tw_residual_zero,
        })
    } else {
        None
    };

    // locally sub-symmetric premise flags
    let ls = contactgeo::locally_subsym_flags(&geo);
    let locally_subsym = ls.nabla_tau_zero && ls.nabla_dtheta_zero && ls.nabla_r_zero;

    // spinor verdict via the holonomy label; direct annihilator cross-check
    // when the algebra sits in so(2m) for the identity metric (g(p) scalar)
    let (tau_bil, _) = contactgeo::sub_torsion(&geo.model);
    let tau_zero = tau_bil.is_zero();
    let spinor = if geo.model.m >= 2 && geo.model.m <= spinrep::MAX_M {
        let rep = spinrep::SpinRep::build(geo.model.m).map_err(|e| CliError::Internal(e.to_string()))?;
        let label = spinrep::holonomy_label::Label::parse(hor.label.as_str()).unwrap();
        let algebra = representative_algebra(&geo, &hor, &p)?;
        let verdict = spinrep::parallel_spinor_verdict(&rep, label, tau_zero, algebra.as_deref())
            .map_err(|e| CliError::TheoremViolation(e.to_string()))?;
        let note = match (&algebra, hor.label) {
            (Some(_), _) => "cross-validated against a direct annihilator computation".to_string(),
            (None, HolLabel::Other) => "OTHER label and non-scalar frame metric: no annihilator run".to_string(),
            (None, _) => "label-based verdict; algebra not embedded for annihilator".to_string(),
        };
        Some(SpinorSection {
            case: verdict.case,
            exists: verdict.exists,
            expected_dim: verdict.expected_dim,
            computed_dim: verdict.computed_dim,
            note,
        })
    } else {
        None
    };

    let report = Report {
        schema: crate::modelfile::SCHEMA,
        model: geo.model.name.clone(),
        base_point: p.iter().map(|r| r.to_string()).collect(),
        conventions: conventions(),
        flags: Flags {
            contact_ok: true,
            codazzi,
            pseudo_hermitian,
            pseudo_einstein,
            locally_subsym_candidate: locally_subsym,
        },
        identity_ledger,
        holonomy: vec![entry("SCHOUTEN", &hor), entry("ADAPTED", &adapted), entry("WAGNER", &wagner)],
        wagner_equals_horizontal,
        dichotomy: DichotomySection {
            codazzi,
            dim_horizontal: hor.dim,
            dim_adapted: adapted.dim,
            dim_difference: diff,
            non_codazzi_note,
        },
        normalization: NormalizationSection {
            dtheta_pairing: pairing.to_string(),
            j_bivector_pairing: j_pairing,
        },
        cr,
        spinor,
        notes: vec![holonomy::ANALYTICITY_NOTE.to_string()],
    };
    Ok(report)
}

/// Matrices to feed the spin annihilator: the raw holonomy basis when the
/// frame metric at p is a positive scalar (so the basis sits in a rescaled
/// so(2m)); otherwise the standard embedded representative of the label.
fn representative_algebra(
    geo: &Geometry,
    hor: &holonomy::HolonomyReport,
    p: &[BigRational],
) -> Result<Option<Vec<numkit::Mat>>, CliError> {
    use num::traits::Zero;
    let g0 = geo.model.g.eval(p).map_err(|e| CliError::Internal(e.to_string()))?;
    let d = g0.rows();
    let c = g0.at(0, 0).as_rat().unwrap().clone();
    let mut scalar = !c.is_zero();
    for i in 0..d {
        for j in 0..d {
            let want = if i == j { c.clone() } else { BigRational::zero() };
            if g0.at(i, j).as_rat().unwrap() != &want {
                scalar = false;
            }
        }
    }
    if scalar {
        return Ok(Some(hor.basis.clone()));
    }
    let m = geo.model.m;
    let embedded = match hor.label {
        HolLabel::Trivial => Some(Vec::new()),
        HolLabel::SuM => Some(spinrep::embed_algebra(spinrep::EmbedLabel::Su, m).map_err(int_err)?),
        HolLabel::UM => Some(spinrep::embed_algebra(spinrep::EmbedLabel::U, m).map_err(int_err)?),
        HolLabel::SoMLagrangian => {
            Some(spinrep::embed_algebra(spinrep::EmbedLabel::SoLagrangian, m).map_err(int_err)?)
        }
        HolLabel::SoMPlusU1 => {
            Some(spinrep::embed_algebra(spinrep::EmbedLabel::SoPlusU1, m).map_err(int_err)?)
        }
        HolLabel::Other => None,
    };
    Ok(embedded)
}

fn int_err(e: spinrep::SpinError) -> CliError {
    CliError::Internal(e.to_string())
}
