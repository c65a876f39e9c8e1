use crate::model::ContactModel;
use crate::pointwise;
use crate::wagner::Geometry;
use crate::GeoError;
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use numkit::{Mat, Scalar};
use polycalc::{vf_bracket, RatFunc, RfMatrix, VectorField};

/// Exact flags of the §4 pseudo-Hermitian machinery.
#[derive(Debug, Clone)]
pub struct CrReport {
    pub nijenhuis_zero: bool,
    pub g_matches_dtheta_j: bool,
    pub tw_equals_adapted: bool,
    pub webster_torsion_anticommutes_j: bool,
}

fn frame_combination(model: &ContactModel, coeffs: &[RatFunc]) -> VectorField {
    let n = model.n;
    let mut comps = vec![RatFunc::zero(n); n];
    for (c, f) in coeffs.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        for mu in 0..n {
            comps[mu] = comps[mu].add(&f.mul(&model.frame[c].comps[mu]));
        }
    }
    VectorField::new(comps)
}

fn j_field(model: &ContactModel, j: &RfMatrix, a: usize) -> VectorField {
    let coeffs: Vec<RatFunc> = (0..model.dim_frame()).map(|c| j.at(c, a).clone()).collect();
    frame_combination(model, &coeffs)
}

/// Nijenhuis tensor, metric compatibility g = dθ(·, J·), Tanaka–Webster vs
/// adapted connection, and the anticommutation of the Webster torsion with J.
pub fn cr_toolkit(geo: &Geometry) -> Result<CrReport, GeoError> {
    let model = &geo.model;
    let j = model.j.as_ref().ok_or(GeoError::Validation("model has no J".into()))?;
    let d = model.dim_frame();
    let n = model.n;
    // defensive re-check of J^2 = -I (load already enforces it)
    if !j.mul(j).add(&RfMatrix::identity(d, n)).is_zero() {
        return Err(GeoError::NotAlmostComplex);
    }

    // g = dθ(·, J·) on the frame: g = W · J
    let g_matches = model.g.sub(&model.w.mul(j)).is_zero();

    // Nijenhuis N(X,Y) = [X,Y] − [JX,JY] + J([X,JY] + [JX,Y]) on frame pairs
    let mut nijenhuis_zero = true;
    'pairs: for a in 0..d {
        for b in (a + 1)..d {
            let ja = j_field(model, j, a);
            let jb = j_field(model, j, b);
            let term1 = vf_bracket(&model.frame[a], &model.frame[b]);
            let term2 = vf_bracket(&ja, &jb);
            let inner = vf_bracket(&model.frame[a], &jb).add(&vf_bracket(&ja, &model.frame[b]));
            // CR condition: inner must be horizontal before J applies
            if !model.theta.apply(&inner).is_zero() {
                nijenhuis_zero = false;
                break 'pairs;
            }
            let inner_coords = model.frame_coords(&inner)?;
            let j_inner_coeffs: Vec<RatFunc> = (0..d)
                .map(|c| {
                    let mut acc = RatFunc::zero(n);
                    for e in 0..d {
                        acc = acc.add(&j.at(c, e).mul(&inner_coords[e]));
                    }
                    acc
                })
                .collect();
            let j_inner = frame_combination(model, &j_inner_coeffs);
            let nij = term1.add(&term2.neg()).add(&j_inner);
            if !nij.is_zero() {
                nijenhuis_zero = false;
                break 'pairs;
            }
        }
    }

    // Tanaka–Webster Nomizu operator: N(E_a) = −½([ξ,E_a] + J[ξ, J E_a])
    let mut n_tw = RfMatrix::zeros(d, d, n);
    for a in 0..d {
        let ja = j_field(model, j, a);
        let br = vf_bracket(&model.xi, &ja);
        let br_coords = model.frame_coords(&br)?;
        for c in 0..d {
            let mut acc = model.p_xi.at(c, a).clone(); // [ξ, E_a] coords
            for e in 0..d {
                acc = acc.add(&j.at(c, e).mul(&br_coords[e]));
            }
            n_tw.set(c, a, acc.scale(&BigRational::new((-1).into(), 2.into())));
        }
    }
    let tw_equals_adapted = n_tw.sub(&geo.tau_endo).is_zero();
    let webster_anti = n_tw.mul(j).add(&j.mul(&n_tw)).is_zero();

    Ok(CrReport {
        nijenhuis_zero,
        g_matches_dtheta_j: g_matches,
        tw_equals_adapted,
        webster_torsion_anticommutes_j: webster_anti,
    })
}

/// Ricci data of the Tanaka–Webster connection at a point.
#[derive(Debug, Clone)]
pub struct RicciReport {
    pub rho: Mat,
    pub scal: BigRational,
    pub pseudo_einstein: bool,
    pub ric_tw: Mat,
    pub ric_tw_residual_zero: bool,
}

pub fn ricci_suite(geo: &Geometry, p: &[BigRational]) -> Result<RicciReport, GeoError> {
    let model = &geo.model;
    let j = model.j.as_ref().ok_or(GeoError::Validation("model has no J".into()))?;
    let d = model.dim_frame();
    let ev = |mm: &RfMatrix| -> Result<Mat, GeoError> {
        mm.eval(p).map_err(|e| GeoError::Calc(e.to_string()))
    };
    let g = ev(&model.g)?;
    let g_inv = ev(&model.g_inv)?;
    let jm = ev(j)?;
    let w = ev(&model.w)?;
    let tau_bil = ev(&geo.tau_bil)?;
    let mut r_tau = Vec::with_capacity(d);
    for a in 0..d {
        let mut row = Vec::with_capacity(d);
        for b in 0..d {
            row.push(ev(&geo.r_adapted.get(a, b))?);
        }
        r_tau.push(row);
    }
    let ric = pointwise::ricci_first_slot(&r_tau);
    let rho = pointwise::rho_form(&r_tau, &g, &g_inv, &jm);
    let scal = pointwise::trace_form(&ric, &g_inv);

    // pseudo-Einstein at p: ρ = (scal/2m) dθ
    let h = &scal / BigRational::from_integer((2 * model.m as i64).into());
    let mut pe = true;
    for a in 0..d {
        for b in 0..d {
            let want = w.at(a, b).as_rat().unwrap() * &h;
            if rho.at(a, b).as_rat().unwrap() != &want {
                pe = false;
            }
        }
    }

    // RicTW: Ric^τ(X,Y) = ρ(X,JY) + (m−1)τ(X,JY)
    let mut residual_zero = true;
    let mfac = BigRational::from_integer((model.m as i64 - 1).into());
    for b in 0..d {
        for c in 0..d {
            let mut rhs = BigRational::zero();
            for e in 0..d {
                rhs += rho.at(b, e).as_rat().unwrap() * jm.at(e, c).as_rat().unwrap()
                    + &mfac * tau_bil.at(b, e).as_rat().unwrap() * jm.at(e, c).as_rat().unwrap();
            }
            if ric.at(b, c).as_rat().unwrap() != &rhs {
                residual_zero = false;
            }
        }
    }
    Ok(RicciReport { rho, scal, pseudo_einstein: pe, ric_tw: ric, ric_tw_residual_zero: residual_zero })
}

/// Spectrum data of τ at a point.
#[derive(Debug, Clone)]
pub struct TauSpectrum {
    /// (eigenvalue, multiplicity) with λ ≥ 0 (pairs ±λ by J-anticommutation).
    pub nonneg_spectrum: Vec<(BigRational, usize)>,
    pub exact: bool,
    pub float_spectrum: Vec<f64>,
    pub tau_squared_scalar: Option<BigRational>,
    /// Basis of the positive-eigenvalue Lagrangian subspace when τ is
    /// injective at p.
    pub lagrangian: Option<Vec<Vec<BigRational>>>,
}

#[derive(Debug, Clone)]
pub struct Theorem7Report {
    pub r_tau: Vec<Vec<Mat>>,
    pub r_zero: Vec<Vec<Mat>>,
    pub r_zero_bianchi_zero: bool,
    pub r_zero_j_invariant: bool,
    pub r_tau_kills_j_bivector: bool,
    pub tau_eigen: TauSpectrum,
}

pub fn theorem7_tensors(geo: &Geometry, p: &[BigRational]) -> Result<Theorem7Report, GeoError> {
    let model = &geo.model;
    let j = model.j.as_ref().ok_or(GeoError::Validation("model has no J".into()))?;
    let d = model.dim_frame();
    let ev = |mm: &RfMatrix| -> Result<Mat, GeoError> {
        mm.eval(p).map_err(|e| GeoError::Calc(e.to_string()))
    };
    let g = ev(&model.g)?;
    let g_inv = ev(&model.g_inv)?;
    let jm = ev(j)?;
    let tau = ev(&geo.tau_endo)?;

    let col = |mm: &Mat, c: usize| -> Mat {
        Mat::construct(d, 1, numkit::Backend::Rational, |r, _| mm.at(r, c).clone())
    };
    let unit = |c: usize| -> Mat {
        Mat::construct(d, 1, numkit::Backend::Rational, |r, _| {
            Scalar::from_int(if r == c { 1 } else { 0 })
        })
    };
    let wedge = |u: &Mat, v: &Mat| -> Mat { pointwise::wedge_endo(u, v, &g) };

    let mut r_tau_field = Vec::with_capacity(d);
    let mut r_zero_field = Vec::with_capacity(d);
    for a in 0..d {
        let mut row_t = Vec::with_capacity(d);
        let mut row_0 = Vec::with_capacity(d);
        for b in 0..d {
            let x = unit(a);
            let y = unit(b);
            let jx = col(&jm, a);
            let jy = col(&jm, b);
            let tx = col(&tau, a);
            let ty = col(&tau, b);
            let tjx = tau.mul(&jx).unwrap();
            let tjy = tau.mul(&jy).unwrap();
            let mut rt = wedge(&jx, &ty)
                .add(&wedge(&tx, &jy))
                .unwrap()
                .add(&wedge(&x, &tjy))
                .unwrap()
                .add(&wedge(&tjx, &y))
                .unwrap();
            rt = rt.scale(&Scalar::rat(-1, 2));
            let r_ad = ev(&geo.r_adapted.get(a, b))?;
            let r0 = r_ad.sub(&rt).unwrap();
            row_t.push(rt);
            row_0.push(r0);
        }
        r_tau_field.push(row_t);
        r_zero_field.push(row_0);
    }

    // R0 Bianchi: cyclic sum of R_0(a,b)e_c over (a,b,c)
    let mut bianchi_zero = true;
    for a in 0..d {
        for b in (a + 1)..d {
            for c in (b + 1)..d {
                for t in 0..d {
                    let v = r_zero_field[a][b]
                        .at(t, c)
                        .add(r_zero_field[b][c].at(t, a))
                        .add(r_zero_field[c][a].at(t, b));
                    if !v.is_zero_exact() {
                        bianchi_zero = false;
                    }
                }
            }
        }
    }

    // R_0(JX, JY) = R_0(X, Y)
    let mut j_invariant = true;
    for a in 0..d {
        for b in 0..d {
            let mut acc = Mat::zeros(d, d, numkit::Backend::Rational);
            for c in 0..d {
                for e in 0..d {
                    let f = jm.at(c, a).mul(jm.at(e, b));
                    if f.is_zero_exact() {
                        continue;
                    }
                    acc = acc.add(&r_zero_field[c][e].scale(&f)).unwrap();
                }
            }
            if !acc.sub(&r_zero_field[a][b]).unwrap().is_zero_exact() {
                j_invariant = false;
            }
        }
    }

    // R_τ(J) = 0 with the J-bivector coefficient matrix −J g^{-1}
    let bj = jm.mul(&g_inv).unwrap().neg();
    let mut rt_j = Mat::zeros(d, d, numkit::Backend::Rational);
    for a in 0..d {
        for b in 0..d {
            if a == b {
                continue;
            }
            rt_j = rt_j.add(&r_tau_field[a][b].scale(bj.at(a, b))).unwrap();
        }
    }
    let kills_j = rt_j.is_zero_exact();

    let tau_eigen = tau_spectrum(&tau, &g_inv)?;

    Ok(Theorem7Report {
        r_tau: r_tau_field,
        r_zero: r_zero_field,
        r_zero_bianchi_zero: bianchi_zero,
        r_zero_j_invariant: j_invariant,
        r_tau_kills_j_bivector: kills_j,
        tau_eigen,
    })
}

/// Exact-first eigenvalue data for the symmetric endomorphism τ at a point.
pub fn tau_spectrum(tau: &Mat, _g_inv: &Mat) -> Result<TauSpectrum, GeoError> {
    let d = tau.rows();
    let coeffs = pointwise::char_poly(tau);
    let (roots, fully_factored) = pointwise::rational_roots(&coeffs);
    let tau2 = tau.mul(tau).unwrap();
    let lam2 = tau2.at(0, 0).as_rat().unwrap().clone();
    let mut scalar_sq = true;
    for i in 0..d {
        for j in 0..d {
            let want = if i == j { lam2.clone() } else { BigRational::zero() };
            if tau2.at(i, j).as_rat().unwrap() != &want {
                scalar_sq = false;
            }
        }
    }
    if fully_factored {
        let nonneg: Vec<(BigRational, usize)> = roots
            .iter()
            .filter(|(r, _)| !r.is_negative())
            .cloned()
            .collect();
        // Lagrangian splitting when τ injective: span of positive eigenspaces
        let injective = roots.iter().all(|(r, _)| !r.is_zero());
        let lagrangian = if injective {
            let mut vs = Vec::new();
            for (r, _) in roots.iter().filter(|(r, _)| r.is_positive()) {
                let shifted = tau
                    .sub(&Mat::identity(d, numkit::Backend::Rational).scale(&Scalar::Rat(r.clone())))
                    .unwrap();
                let (_, ns) = shifted.rank_nullspace(None).map_err(|e| GeoError::Calc(e.to_string()))?;
                for v in ns.vectors() {
                    vs.push(v.iter().map(|s| s.as_rat().unwrap().clone()).collect());
                }
            }
            Some(vs)
        } else {
            None
        };
        Ok(TauSpectrum {
            nonneg_spectrum: nonneg,
            exact: true,
            float_spectrum: Vec::new(),
            tau_squared_scalar: if scalar_sq { Some(lam2) } else { None },
            lagrangian,
        })
    } else {
        let float_spectrum = pointwise::real_roots_f64(&coeffs);
        Ok(TauSpectrum {
            nonneg_spectrum: roots,
            exact: false,
            float_spectrum,
            tau_squared_scalar: if scalar_sq { Some(lam2) } else { None },
            lagrangian: None,
        })
    }
}

/// ψ with g(X,Y) = dθ(X, ψY): ψ = W^{-1} g at the point; if ψ² = −μ² id with
/// rational μ², the normalized candidate J = ψ/μ is returned.
#[derive(Debug, Clone)]
pub struct PsiReport {
    pub psi: Mat,
    pub psi_g_skew: bool,
    pub mu_squared: Option<BigRational>,
    pub candidate_j: Option<Mat>,
    pub mu: Option<Scalar>,
}

pub fn psi_endomorphism(geo: &Geometry, p: &[BigRational]) -> Result<PsiReport, GeoError> {
    let model = &geo.model;
    let d = model.dim_frame();
    let ev = |mm: &RfMatrix| -> Result<Mat, GeoError> {
        mm.eval(p).map_err(|e| GeoError::Calc(e.to_string()))
    };
    let g = ev(&model.g)?;
    let w = ev(&model.w)?;
    let w_inv = w.inverse().map_err(|e| GeoError::Calc(e.to_string()))?;
    let psi = w_inv.mul(&g).unwrap();
    // defining identity: g_{ab} = Σ_c W_{ac} ψ^c_b, exact by construction;
    // assert anyway
    let check = w.mul(&psi).unwrap().sub(&g).unwrap();
    if !check.is_zero_exact() {
        return Err(GeoError::TheoremViolation("ψ fails its defining identity".into()));
    }
    let gpsi = g.mul(&psi).unwrap();
    let skew = gpsi.add(&gpsi.transpose()).unwrap().is_zero_exact();

    let psi2 = psi.mul(&psi).unwrap();
    let lam = psi2.at(0, 0).as_rat().unwrap().clone();
    let mut scalar = true;
    for i in 0..d {
        for j in 0..d {
            let want = if i == j { lam.clone() } else { BigRational::zero() };
            if psi2.at(i, j).as_rat().unwrap() != &want {
                scalar = false;
            }
        }
    }
    if !scalar || !lam.is_negative() {
        return Ok(PsiReport { psi, psi_g_skew: skew, mu_squared: None, candidate_j: None, mu: None });
    }
    let mu2 = -lam;
    let (candidate, mu) = match Scalar::rational_sqrt(&mu2) {
        Some(mu) => {
            let inv = Scalar::Rat(BigRational::from_integer(1.into()) / &mu);
            (psi.scale(&inv), Scalar::Rat(mu))
        }
        None => {
            use num::traits::ToPrimitive;
            let muf = mu2.to_f64().unwrap().sqrt();
            (psi.map_to_f64().scale(&Scalar::F64(1.0 / muf)), Scalar::F64(muf))
        }
    };
    Ok(PsiReport {
        psi,
        psi_g_skew: skew,
        mu_squared: Some(mu2),
        candidate_j: Some(candidate),
        mu: Some(mu),
    })
}
