use serde::Serialize;

/// Every report embeds the convention block so downstream diffs are
/// self-describing.
#[derive(Debug, Clone, Serialize)]
pub struct Conventions {
    pub bivector_pairing: &'static str,
    pub dtheta_inverse: &'static str,
    pub clifford_sign: &'static str,
    pub tau_index: &'static str,
    pub ricci_contraction: &'static str,
    pub sample_seed: &'static str,
}

pub fn conventions() -> Conventions {
    Conventions {
        bivector_pairing: "<omega, beta> = sum_{a,b} omega(E_a,E_b) beta^{ab}",
        dtheta_inverse: "dtheta^{-1} = 2 * matrix_inverse(W), W_ab = dtheta(E_a,E_b); <dtheta, dtheta^{-1}> = -4m",
        clifford_sign: "gamma(v)^2 = -|v|^2; rho(e_a ^ e_b) = [gamma_a, gamma_b]/4; rho(J) spectrum (m-2k)i, sign +1",
        tau_index: "tau^a_b = g^{ac} tau_{cb}",
        ricci_contraction: "Ric(R)(X,Y) = tr(V -> R(V,X)Y) (first slot)",
        sample_seed: "xorshift64 from FNV(model name), 5 pole-free rational points",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityEntry {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct HolonomyEntry {
    pub connection: String,
    pub dim: usize,
    pub label: String,
    pub depth_used: usize,
    pub stabilized: bool,
    pub commutant_dim: usize,
    pub has_invariant_j: bool,
    pub invariant_subspace_dims: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DichotomySection {
    pub codazzi: bool,
    pub dim_horizontal: usize,
    pub dim_adapted: usize,
    pub dim_difference: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_codazzi_note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Flags {
    pub contact_ok: bool,
    pub codazzi: bool,
    pub pseudo_hermitian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_einstein: Option<bool>,
    pub locally_subsym_candidate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrSection {
    pub nijenhuis_zero: bool,
    pub g_matches_dtheta_j: bool,
    pub tw_equals_adapted: bool,
    pub webster_torsion_anticommutes_j: bool,
    pub webster_scalar: String,
    pub pseudo_einstein: bool,
    pub ric_tw_residual_zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpinorSection {
    pub case: String,
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed_dim: Option<usize>,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalizationSection {
    pub dtheta_pairing: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_bivector_pairing: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub model: String,
    pub base_point: Vec<String>,
    pub conventions: Conventions,
    pub flags: Flags,
    pub identity_ledger: Vec<IdentityEntry>,
    pub holonomy: Vec<HolonomyEntry>,
    pub wagner_equals_horizontal: bool,
    pub dichotomy: DichotomySection,
    pub normalization: NormalizationSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cr: Option<CrSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spinor: Option<SpinorSection>,
    pub notes: Vec<String>,
}
