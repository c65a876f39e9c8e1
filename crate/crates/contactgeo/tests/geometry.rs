use contactgeo::fixtures::*;
use contactgeo::*;
use num::rational::BigRational;
use num::traits::{One, Zero};
use polycalc::{OneForm, RatFunc, RfMatrix, VectorField};

#[test]
fn heisenberg_reeb_is_dz() {
    let model = heisenberg_flat(3).unwrap();
    let n = model.n;
    for mu in 0..n - 1 {
        assert!(model.xi.comps[mu].is_zero());
    }
    assert!(model.xi.comps[n - 1].eq_exact(&RatFunc::one(n)));
}

#[test]
fn rescaled_theta_halves_reeb() {
    let (theta, frame) = heisenberg_theta_frame(2);
    let n = 5;
    let theta2 = OneForm::new(theta.comps.iter().map(|c| c.add(c)).collect());
    let g = RfMatrix::identity(4, n);
    let model = ContactModel::new("h2_scaled".into(), theta2, frame, g, None, origin(2)).unwrap();
    assert!(model.xi.comps[n - 1].eq_exact(&RatFunc::constant(n, BigRational::new(1.into(), 2.into()))));
}

#[test]
fn non_contact_form_rejected() {
    // θ = dz with the coordinate frame: dθ = 0
    let n = 5;
    let mut theta = vec![RatFunc::zero(n); n];
    theta[n - 1] = RatFunc::one(n);
    let frame = (0..4).map(|i| VectorField::coordinate(n, i)).collect();
    let g = RfMatrix::identity(4, n);
    let r = ContactModel::new("flatform".into(), OneForm::new(theta), frame, g, None, origin(2));
    assert!(matches!(r, Err(GeoError::NotContact(_))));
}

#[test]
fn heisenberg_flat_connection_and_curvature_vanish() {
    let geo = Geometry::build(heisenberg_flat(2).unwrap()).unwrap();
    for g in &geo.schouten.gamma {
        assert!(g.is_zero());
    }
    let (tau_bil, _) = sub_torsion(&geo.model);
    assert!(tau_bil.is_zero());
    for a in 0..4 {
        for b in 0..4 {
            assert!(geo.r_schouten.get(a, b).is_zero());
        }
    }
    assert!(geo.n_wagner.is_zero());
    // conformal constant metric: Γ still zero
    let (theta, frame) = heisenberg_theta_frame(2);
    let g = RfMatrix::identity(4, 5).scale(&RatFunc::from_int(5, 3));
    let m2 = ContactModel::new("h2c".into(), theta, frame, g, None, origin(2)).unwrap();
    let geo2 = Geometry::build(m2).unwrap();
    for g in &geo2.schouten.gamma {
        assert!(g.is_zero());
    }
}

#[test]
fn zs_model_torsion_is_half_s() {
    let model = heisenberg_zs(3).unwrap();
    let (tau_bil, tau_endo) = sub_torsion(&model);
    let n = model.n;
    // τ = S/2 with S = diag(1,0,...,0), independent of the point
    for a in 0..6 {
        for b in 0..6 {
            let want = if (a, b) == (0, 0) {
                RatFunc::constant(n, BigRational::new(1.into(), 2.into()))
            } else {
                RatFunc::zero(n)
            };
            assert!(tau_bil.at(a, b).eq_exact(&want), "tau_bil[{a}{b}]");
        }
    }
    // endomorphism τ^0_0 = g^{00} τ_00 = (1/(1+z)) * 1/2
    let z = RatFunc::var(n, n - 1);
    let want = RatFunc::constant(n, BigRational::new(1.into(), 2.into()))
        .div(&RatFunc::one(n).add(&z))
        .unwrap();
    assert!(tau_endo.at(0, 0).eq_exact(&want));
}

#[test]
fn z_independent_models_have_zero_torsion() {
    for model in [heisenberg_flat(2).unwrap(), heisenberg_aniso(2).unwrap()] {
        let (tau_bil, _) = sub_torsion(&model);
        assert!(tau_bil.is_zero());
    }
}

#[test]
fn identity_suite_proved_on_golden_corpus() {
    for model in golden_corpus().unwrap() {
        let name = model.name.clone();
        let geo = Geometry::build(model).unwrap();
        let checks = identity_suite(&geo).unwrap();
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(
                c.status != IdentityStatus::Failed,
                "{name}: identity {} failed: {}",
                c.name,
                c.detail
            );
        }
    }
}

#[test]
fn extension_compatibility_flags() {
    let model = heisenberg_zs(2).unwrap();
    let geo = Geometry::build(model).unwrap();
    // N = τ: compatible
    assert_eq!(geo.adapted.metric_extension, Some(true));
    // N = τ + g-skew: compatible
    let n = geo.model.n;
    let mut a = RfMatrix::zeros(4, 4, n);
    a.set(0, 2, RatFunc::one(n));
    a.set(2, 0, RatFunc::one(n).neg());
    let skew = geo.model.g_inv.mul(&a);
    let ext = extend_connection(&geo.model, &geo.schouten, geo.tau_endo.add(&skew));
    assert_eq!(ext.metric_extension, Some(true));
    // N = identity on a τ ≠ 0 model: not compatible
    let bad = extend_connection(&geo.model, &geo.schouten, RfMatrix::identity(4, n));
    assert_eq!(bad.metric_extension, Some(false));
    // Wagner is always metric
    assert_eq!(geo.wagner.metric_extension, Some(true));
}

#[test]
fn dtheta_inverse_normalizations() {
    let geo = Geometry::build(heisenberg_flat(3).unwrap()).unwrap();
    let p = origin(3);
    let beta = geo.dtheta_inverse_at(&p).unwrap();
    // βᵀ = −β
    assert!(beta.add(&beta.transpose()).unwrap().is_zero_exact());
    // pairing is exactly -4m (checked inside dtheta_inverse_at; recheck)
    let w = geo.model.w.eval(&p).unwrap();
    assert_eq!(pairing_at(&w, &beta), BigRational::from_integer((-12).into()));

    // pseudo-Hermitian: ⟨dθ, J-bivector⟩ = 2m and β = −2·(J-bivector)
    let geo = Geometry::build(heisenberg_cr(3).unwrap()).unwrap();
    let bj = geo.j_bivector().unwrap();
    let bj0 = bj.eval(&p).unwrap();
    let w = geo.model.w.eval(&p).unwrap();
    assert_eq!(pairing_at(&w, &bj0), BigRational::from_integer(6.into()));
    let beta = geo.dtheta_inverse_at(&p).unwrap();
    assert_eq!(beta, bj0.scale(&numkit::Scalar::from_int(-2)));
}

#[test]
fn wagner_connection_flat_case_reduces_to_adapted() {
    let geo = Geometry::build(heisenberg_flat(3).unwrap()).unwrap();
    assert!(geo.n_wagner.is_zero());
    assert!(geo.c_skew.is_zero());
    for a in 0..6 {
        assert!(geo.r_xi_wagner[a].is_zero());
        assert!(geo.r_xi_adapted[a].is_zero());
    }
}

#[test]
fn codazzi_reports() {
    // τ = 0 model: Codazzi with zero defect
    let geo = Geometry::build(heisenberg_flat(2).unwrap()).unwrap();
    let rep = codazzi_defect(&geo, &origin(2)).unwrap();
    assert!(rep.codazzi);
    assert!(rep.defect_max_abs.is_zero());
    assert!(rep.r_xi_adapted_zero);
    assert!(rep.lem_raxi_residual_zero);

    // g = I + zS model: lemRAxi residual still exactly zero, and the
    // Codazzi flag must agree with R^τ(ξ,·) = 0 (paper's corollary)
    let geo = Geometry::build(heisenberg_zs(2).unwrap()).unwrap();
    let rep = codazzi_defect(&geo, &origin(2)).unwrap();
    assert!(rep.lem_raxi_residual_zero);
    assert_eq!(rep.codazzi, rep.r_xi_adapted_zero);
}

#[test]
fn cr_toolkit_flat_model() {
    let geo = Geometry::build(heisenberg_cr(3).unwrap()).unwrap();
    let rep = cr_toolkit(&geo).unwrap();
    assert!(rep.nijenhuis_zero);
    assert!(rep.g_matches_dtheta_j);
    assert!(rep.tw_equals_adapted);
    assert!(rep.webster_torsion_anticommutes_j);
}

#[test]
fn cr_toolkit_detects_metric_mismatch() {
    // J standard but g = I ≠ dθ(·,J·) = 2I
    let (theta, frame) = heisenberg_theta_frame(3);
    let model = ContactModel::new(
        "h3_mismatch".into(),
        theta,
        frame,
        RfMatrix::identity(6, 7),
        Some(standard_j(3)),
        origin(3),
    )
    .unwrap();
    let geo = Geometry::build(model).unwrap();
    let rep = cr_toolkit(&geo).unwrap();
    assert!(!rep.g_matches_dtheta_j);
    assert!(rep.nijenhuis_zero);
}

#[test]
fn cr_toolkit_nonintegrable_j_reports_false() {
    // J twisted by a z-dependent block: still J² = -I, no longer integrable
    let m = 2;
    let n = 5;
    let (theta, frame) = heisenberg_theta_frame(m);
    let z = RatFunc::var(n, 4);
    let one = RatFunc::one(n);
    let f = one.add(&z.mul(&z)); // 1 + z², never zero
    let mut j = RfMatrix::zeros(4, 4, n);
    // block [[0, -D],[D^{-1}, 0]] with D = diag(f, 1)
    j.set(0, 2, f.neg());
    j.set(1, 3, one.neg());
    j.set(2, 0, one.div(&f).unwrap());
    j.set(3, 1, one.clone());
    let g = RfMatrix::identity(4, n).scale(&RatFunc::from_int(n, 1));
    // g must stay positive definite; dθ(·,J·) is not g, but cr_toolkit only
    // needs J itself to judge integrability
    let model = ContactModel::new("h2_twist".into(), theta, frame, g, Some(j), origin(m)).unwrap();
    let geo = Geometry::build(model).unwrap();
    let rep = cr_toolkit(&geo).unwrap();
    assert!(!rep.nijenhuis_zero);
}

#[test]
fn ricci_suite_flat_cr() {
    let geo = Geometry::build(heisenberg_cr(3).unwrap()).unwrap();
    let rep = ricci_suite(&geo, &origin(3)).unwrap();
    assert!(rep.rho.is_zero_exact());
    assert!(rep.scal.is_zero());
    assert!(rep.pseudo_einstein);
    assert!(rep.ric_tw_residual_zero);
}

#[test]
fn theorem7_flat_cr() {
    let geo = Geometry::build(heisenberg_cr(3).unwrap()).unwrap();
    let rep = theorem7_tensors(&geo, &origin(3)).unwrap();
    // τ = 0: R_τ = 0 and R_0 = R^τ (here everything vanishes)
    for a in 0..6 {
        for b in 0..6 {
            assert!(rep.r_tau[a][b].is_zero_exact());
            assert!(rep.r_zero[a][b].is_zero_exact());
        }
    }
    assert!(rep.r_zero_bianchi_zero);
    assert!(rep.r_zero_j_invariant);
    assert!(rep.r_tau_kills_j_bivector);
    assert!(rep.tau_eigen.exact);
    assert_eq!(rep.tau_eigen.nonneg_spectrum, vec![(BigRational::zero(), 6)]);
}

#[test]
fn psi_endomorphism_cases() {
    // CR model: ψ = J exactly, μ = 1
    let geo = Geometry::build(heisenberg_cr(3).unwrap()).unwrap();
    let rep = psi_endomorphism(&geo, &origin(3)).unwrap();
    assert!(rep.psi_g_skew);
    assert_eq!(rep.mu_squared, Some(BigRational::one()));
    let j0 = geo.model.j.as_ref().unwrap().eval(&origin(3)).unwrap();
    assert_eq!(rep.candidate_j.unwrap(), j0);

    // anisotropic constant metric: ψ² not scalar, no candidate
    let geo = Geometry::build(heisenberg_aniso(2).unwrap()).unwrap();
    let rep = psi_endomorphism(&geo, &origin(2)).unwrap();
    assert!(rep.psi_g_skew);
    assert!(rep.candidate_j.is_none());
}

#[test]
fn locally_subsym_flags_flat() {
    let geo = Geometry::build(heisenberg_flat(2).unwrap()).unwrap();
    let f = locally_subsym_flags(&geo);
    assert!(f.nabla_tau_zero && f.nabla_dtheta_zero && f.nabla_r_zero);
    let geo = Geometry::build(heisenberg_zs(2).unwrap()).unwrap();
    let f = locally_subsym_flags(&geo);
    assert!(!(f.nabla_tau_zero && f.nabla_dtheta_zero && f.nabla_r_zero));
}

#[test]
fn sctsym_on_zs_model_at_origin() {
    // g(R(X,Y)U,V) + g(R(X,Y)V,U) + 2dθ(X,Y)τ(U,V) = 0, evaluated exactly
    let geo = Geometry::build(heisenberg_zs(2).unwrap()).unwrap();
    let p = origin(2);
    let g = geo.model.g.eval(&p).unwrap();
    let w = geo.model.w.eval(&p).unwrap();
    let tau = geo.tau_bil.eval(&p).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            let r = geo.r_schouten.get(a, b).eval(&p).unwrap();
            let sym = g.mul(&r).unwrap();
            let sym = sym.add(&sym.transpose()).unwrap();
            let rhs = tau.scale(w.at(a, b)).scale(&numkit::Scalar::from_int(2));
            assert!(sym.add(&rhs).unwrap().is_zero_exact(), "({a},{b})");
        }
    }
    // the zs model genuinely curves: R ≠ 0 somewhere
    let mut any = false;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if !geo.r_schouten.get(a, b).is_zero() {
                any = true;
            }
        }
    }
    assert!(any, "zs model should have nonzero Schouten curvature");
}
