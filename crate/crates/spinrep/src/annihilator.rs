use crate::clifford::SpinRep;
use crate::SpinError;
use numkit::{Mat, Scalar, SubspaceBasis};

#[derive(Debug, Clone)]
pub struct AnnihilatorReport {
    pub dim: usize,
    pub basis: SubspaceBasis,
    /// dim of (annihilator ∩ Λ^k) per level k = 0..m.
    pub level_dims: Vec<usize>,
    /// true when the per-level intersections account for the whole space.
    pub concentrated: bool,
}

/// Common nullspace of {ρ(H) : H ∈ h} over Gaussian rationals, with the
/// weight profile locating it inside the Λ^k decomposition.
pub fn annihilator(rep: &SpinRep, h: &[Mat]) -> Result<AnnihilatorReport, SpinError> {
    let n = rep.dim_delta;
    if h.is_empty() {
        let basis = numkit::full_matrix_space(1, numkit::Backend::GaussRational);
        let _ = basis; // the full space: report directly
        let mut full = SubspaceBasis::empty(n, numkit::Backend::GaussRational);
        for i in 0..n {
            let mut v = vec![Scalar::zero(numkit::Backend::GaussRational); n];
            v[i] = Scalar::one(numkit::Backend::GaussRational);
            full.insert(v, 0.0);
        }
        let level_dims = (0..=rep.m)
            .map(|k| (0..n).filter(|s| s.count_ones() as usize == k).count())
            .collect();
        return Ok(AnnihilatorReport { dim: n, basis: full, level_dims, concentrated: true });
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for hm in h {
        let rho = rep.rho_of(hm)?;
        for i in 0..n {
            rows.push((0..n).map(|j| rho.at(i, j).clone()).collect());
        }
    }
    let stacked = Mat::from_rows(rows).map_err(|e| SpinError::Construction(e.to_string()))?;
    let (_, ns) = stacked
        .rank_nullspace(None)
        .map_err(|e| SpinError::Construction(e.to_string()))?;

    // weight profile: intersect with each coordinate level
    let mut level_dims = Vec::new();
    let mut total = 0usize;
    for k in 0..=rep.m {
        let idxs: Vec<usize> = (0..n).filter(|s| s.count_ones() as usize == k).collect();
        let mut level = SubspaceBasis::empty(n, numkit::Backend::GaussRational);
        for &i in &idxs {
            let mut v = vec![Scalar::zero(numkit::Backend::GaussRational); n];
            v[i] = Scalar::one(numkit::Backend::GaussRational);
            level.insert(v, 0.0);
        }
        let inter = ns.intersect(&level, 0.0);
        level_dims.push(inter.dim());
        total += inter.dim();
    }
    Ok(AnnihilatorReport {
        dim: ns.dim(),
        concentrated: total == ns.dim(),
        basis: ns,
        level_dims,
    })
}

/// The classification cases of the parallel-spinor theorem mapped to a
/// verdict, cross-validated against the direct annihilator when the algebra
/// matrices are at hand.
#[derive(Debug, Clone)]
pub struct SpinorVerdict {
    pub case: String,
    pub exists: bool,
    pub expected_dim: Option<usize>,
    pub computed_dim: Option<usize>,
}

pub fn parallel_spinor_verdict(
    rep: &SpinRep,
    label: holonomy_label::Label,
    tau_zero: bool,
    algebra: Option<&[Mat]>,
) -> Result<SpinorVerdict, SpinError> {
    use holonomy_label::Label::*;
    let (case, exists, expected) = match (tau_zero, label) {
        (false, SoMLagrangian) | (false, SuM) => ("case 1: τ≠0, hol ∈ {su(m), so(m)}", true, Some(2)),
        (false, UM) | (false, SoMPlusU1) => ("case 1 complement: u(m)/so(m)⊕u(1) annihilate nothing", false, Some(0)),
        (true, Trivial) => ("τ=0 with trivial holonomy: every spinor is parallel", true, Some(rep.dim_delta)),
        (_, Other) => ("OTHER label: direct annihilator only", false, None),
        (true, _) => ("τ=0: see the K-contact cases", true, None),
        (false, Trivial) => ("trivial holonomy: every spinor is parallel", true, Some(rep.dim_delta)),
    };
    let computed = match algebra {
        Some(h) => Some(annihilator(rep, h)?.dim),
        None => None,
    };
    let mut exists = exists;
    let mut expected = expected;
    if let Some(c) = computed {
        if label == Other || (tau_zero && label != Trivial) {
            exists = c > 0;
            expected = None;
        } else if let Some(e) = expected {
            if e != c {
                return Err(SpinError::Construction(format!(
                    "spinor verdict mismatch: theorem expects {e}, annihilator has {c}"
                )));
            }
        }
    }
    Ok(SpinorVerdict {
        case: case.to_string(),
        exists,
        expected_dim: expected,
        computed_dim: computed,
    })
}

/// A minimal mirror of the holonomy classifier labels so this crate does not
/// depend on the geometry stack.
pub mod holonomy_label {
    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum Label {
        Trivial,
        SoMLagrangian,
        SoMPlusU1,
        SuM,
        UM,
        Other,
    }

    impl Label {
        pub fn parse(s: &str) -> Option<Label> {
            match s {
                "TRIVIAL" => Some(Label::Trivial),
                "SO_M_LAGRANGIAN" => Some(Label::SoMLagrangian),
                "SO_M_PLUS_U1" => Some(Label::SoMPlusU1),
                "SU_M" => Some(Label::SuM),
                "U_M" => Some(Label::UM),
                _ => Some(Label::Other),
            }
        }
    }
}
