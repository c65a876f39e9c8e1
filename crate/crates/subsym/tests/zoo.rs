use holonomy::HolLabel;
use liealg::{ZooLabel, ZooMatch};
use num::rational::BigRational;
use num::traits::{One, Zero};
use numkit::{Backend, Mat, Scalar};
use subsym::*;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn family(m: usize, lambda: i64, mu: i64) -> ZooResult {
    zoo(&ZooKind::TorsionFamily {
        m,
        lambda: BigRational::from_integer(lambda.into()),
        mu: BigRational::from_integer(mu.into()),
    })
    .unwrap()
}

#[test]
fn heisenberg_quadruple_all_pass() {
    let z = zoo(&ZooKind::Heisenberg { m: 3 }).unwrap();
    let rep = validate_quadruple(&z.quadruple);
    assert!(rep.all_pass);
    assert!(rep.sub_torsion_free);
    assert!(rep.transvection);
    assert!(z.tau_star_zero);
    assert_eq!((z.hol_horizontal_dim, z.hol_adapted_dim), (0, 0));
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::Heisenberg));
    assert!(z.scal_tau.is_zero());
}

#[test]
fn torsion_family_case_table() {
    // (λ, µ) = (1,2) → so(5) with negative-definite Killing form
    let z = family(3, 1, 2);
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::SoMPlus2));
    assert_eq!(z.fingerprint.signature, (0, 0, 10));
    assert_eq!(z.scal_tau, BigRational::from_integer(36.into()));

    let z = family(3, 1, -2);
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::So2M));
    assert_eq!(z.scal_tau, BigRational::from_integer((-36).into()));

    let z = family(3, 2, 1);
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::So1MPlus1));

    let z = family(3, 1, 1);
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::EuclideanMotion));

    let z = family(3, 1, -1);
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::PoincareMotion));

    let z = family(3, 1, 0);
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::So1MPlus1));
    assert!(z.scal_tau.is_zero());
}

#[test]
fn torsion_family_holonomy_pair() {
    let z = family(3, 1, 2);
    assert!(!z.tau_star_zero);
    assert_eq!((z.hol_horizontal_dim, z.hol_adapted_dim), (3, 4));
    assert_eq!(z.hol_horizontal_label, HolLabel::SoMLagrangian);
    assert_eq!(z.hol_adapted_label, HolLabel::SoMPlusU1);

    // µ = 0: A_ξ = 0 so the two holonomies coincide (stored-table last row)
    let z = family(3, 1, 0);
    assert!(z.a_xi.is_zero_exact());
    assert_eq!((z.hol_horizontal_dim, z.hol_adapted_dim), (3, 3));
    assert_eq!(z.hol_adapted_label, HolLabel::SoMLagrangian);
}

#[test]
fn torsion_family_tau_and_j() {
    let z = family(3, 1, 2);
    // τ* anticommutes with the family J; τ*² is a scalar multiple of id
    let m = 3;
    let j = Mat::construct(6, 6, Backend::Rational, |r, c| {
        if r < m && c == r + m {
            Scalar::from_int(-1)
        } else if r >= m && c + m == r {
            Scalar::from_int(1)
        } else {
            Scalar::from_int(0)
        }
    });
    let b_inv = z.quadruple.b.inverse().unwrap();
    let tau_endo = b_inv.mul(&z.tau_star).unwrap();
    assert!(tau_endo.mul(&j).unwrap().add(&j.mul(&tau_endo).unwrap()).unwrap().is_zero_exact());
    let t2 = tau_endo.mul(&tau_endo).unwrap();
    assert_eq!(t2, Mat::identity(6, Backend::Rational));
    // ad_ξ = [[λ1, −µ1],[µ1, −λ1]]
    for i in 0..3 {
        assert_eq!(z.ad_xi.at(i, i), &Scalar::from_int(1));
        assert_eq!(z.ad_xi.at(i, i + 3), &Scalar::from_int(-2));
        assert_eq!(z.ad_xi.at(i + 3, i), &Scalar::from_int(2));
        assert_eq!(z.ad_xi.at(i + 3, i + 3), &Scalar::from_int(-1));
    }
}

#[test]
fn lambda_must_be_positive() {
    let r = zoo(&ZooKind::TorsionFamily { m: 3, lambda: BigRational::zero(), mu: BigRational::one() });
    assert!(matches!(r, Err(SubsymError::ParamDomain(_))));
}

#[test]
fn from_local_data_rejects_corrupted_sign() {
    // flip one curvature sign in the torsion family: Jacobi must fail
    let m = 3usize;
    let dp = 2 * m;
    let lambda = BigRational::one();
    let mu = BigRational::from_integer(2.into());
    let wedge = |i: usize, j: usize| -> Mat {
        let mut a = Mat::zeros(dp, dp, Backend::Rational);
        if i != j {
            a.set(j, i, Scalar::from_int(1));
            a.set(i, j, Scalar::from_int(-1));
            a.set(m + j, m + i, Scalar::from_int(1));
            a.set(m + i, m + j, Scalar::from_int(-1));
        }
        a
    };
    let k_span: Vec<Mat> = {
        let mut out = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                out.push(wedge(i, j));
            }
        }
        out
    };
    let r_w = |a: usize, b: usize| -> Mat {
        let (fa, ia) = (a / m, a % m);
        let (fb, ib) = (b / m, b % m);
        if fa == fb {
            // corrupted: +µ instead of −µ on the (2,3) pair
            let sign = if (ia, ib) == (1, 2) { 1 } else { -1 };
            wedge(ia, ib).scale(&Scalar::Rat(BigRational::from_integer(sign.into()) * &mu))
        } else if fa == 0 {
            wedge(ia, ib).scale(&Scalar::Rat(lambda.clone()))
        } else {
            wedge(ib, ia).scale(&Scalar::Rat(lambda.clone())).neg()
        }
    };
    let mut theta = Mat::zeros(dp, dp, Backend::Rational);
    for i in 0..m {
        theta.set(i, m + i, Scalar::from_int(1));
        theta.set(m + i, i, Scalar::from_int(-1));
    }
    let mut n_w = Mat::zeros(dp, dp, Backend::Rational);
    for i in 0..m {
        n_w.set(i, i, Scalar::Rat(lambda.clone()));
        n_w.set(i, m + i, Scalar::Rat(-mu.clone()));
        n_w.set(m + i, i, Scalar::Rat(mu.clone()));
        n_w.set(m + i, m + i, Scalar::Rat(-lambda.clone()));
    }
    let r = from_local_data(dp, &r_w, &theta, &n_w, &k_span, &Mat::identity(dp, Backend::Rational));
    assert!(matches!(r, Err(SubsymError::JacobiFail { .. })));
}

#[test]
fn heisenberg_from_local_data_and_transvection() {
    let z = zoo(&ZooKind::Heisenberg { m: 2 }).unwrap();
    // already transvection: restriction is the identity on dims
    let qt = transvection_restrict(&z.quadruple).unwrap();
    assert_eq!(qt.table.dim(), z.quadruple.table.dim());
    assert_eq!(qt.k_basis.len(), 0);
}

#[test]
fn adjoined_center_removed_by_transvection() {
    // Heisenberg with a u(1) rotation adjoined to 𝔨: still a valid
    // quadruple; transvection restriction removes the extra direction.
    let m = 2usize;
    let dp = 2 * m;
    let j = Mat::construct(dp, dp, Backend::Rational, |r, c| {
        if r < m && c == r + m {
            Scalar::from_int(-1)
        } else if r >= m && c + m == r {
            Scalar::from_int(1)
        } else {
            Scalar::from_int(0)
        }
    });
    let mut theta = Mat::zeros(dp, dp, Backend::Rational);
    for i in 0..m {
        theta.set(i, m + i, Scalar::from_int(1));
        theta.set(m + i, i, Scalar::from_int(-1));
    }
    let zero = Mat::zeros(dp, dp, Backend::Rational);
    let q = from_local_data(
        dp,
        &|_, _| zero.clone(),
        &theta,
        &zero,
        &[j],
        &Mat::identity(dp, Backend::Rational),
    )
    .unwrap();
    let rep = validate_quadruple(&q);
    assert!(rep.all_pass, "{:?}", rep.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    assert!(!rep.transvection);
    let qt = transvection_restrict(&q).unwrap();
    assert_eq!(qt.k_basis.len(), 0);
    assert_eq!(qt.table.dim(), dp + 1);
    // and the holonomy pair uses the restriction: still ({0},{0})
    let z = holonomy_pair(&q).unwrap();
    assert!(z.0.is_empty());
}

#[test]
fn non_invariant_b_detected() {
    let z = family(3, 1, 1);
    let mut q = z.quadruple.clone();
    // corrupt B
    q.b.set(0, 1, Scalar::from_int(1));
    q.b.set(1, 0, Scalar::from_int(1));
    let rep = validate_quadruple(&q);
    assert!(!rep.all_pass);
    assert!(rep
        .checks
        .iter()
        .any(|c| c.name == "b_adk_invariant" && !c.pass && c.witness.is_some()));
}

#[test]
fn cpn_sphere_row() {
    let z = zoo(&ZooKind::CpnSphere { m: 3 }).unwrap();
    assert!(z.tau_star_zero);
    assert_eq!((z.hol_horizontal_dim, z.hol_adapted_dim), (8, 9));
    assert_eq!(z.hol_horizontal_label, HolLabel::SuM);
    assert_eq!(z.hol_adapted_label, HolLabel::UM);
    assert_eq!(z.zoo_match, ZooMatch::Label(ZooLabel::SuMPlus1));
    assert_eq!(z.fingerprint.signature, (0, 0, 15));
}

#[test]
fn pp_closure_of_family_has_dim_so_plus_one() {
    // [𝔭,𝔭] inside the torsion family table spans so(m) ⊕ ⟨ξ⟩
    let z = family(3, 1, 2);
    let q = &z.quadruple;
    let mut gens = Vec::new();
    for (a, &pi) in q.p_indices.iter().enumerate() {
        for &pj in q.p_indices.iter().skip(a + 1) {
            gens.push(q.table.bracket(&q.table.basis_vector(pi), &q.table.basis_vector(pj)));
        }
    }
    let (span, induced) = q.table.subalgebra_closure(&gens);
    assert_eq!(span.dim(), 4);
    assert!(induced.jacobi_residual_max().is_zero());
}

#[test]
fn table1_reproduction() {
    let results = vec![
        (3usize, zoo(&ZooKind::Heisenberg { m: 3 }).unwrap()),
        (3, zoo(&ZooKind::CpnSphere { m: 3 }).unwrap()),
        (3, family(3, 1, 2)),
        (3, family(3, 1, -2)),
        (3, family(3, 2, 1)),
        (3, family(3, 1, 0)),
    ];
    let rows = table1_report(&results).unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5].row_id, "torsion-scal-zero");
    assert_eq!(rows[5].dims, (3, 3));
}

#[test]
fn zoo_label_invariant_under_basis_change() {
    let z = family(3, 1, 2);
    let n = z.quadruple.table.dim();
    let p = Mat::construct(n, n, Backend::Rational, |i, j| {
        if i == j {
            Scalar::from_int(1)
        } else if i > j {
            Scalar::Rat(rat(((i * 5 + j * 3) % 3) as i64 - 1, 2))
        } else {
            Scalar::from_int(0)
        }
    });
    let t2 = z.quadruple.table.change_basis(&p).unwrap();
    let fp = liealg::killing_fingerprint(&t2);
    assert_eq!(liealg::match_zoo(&fp, 3).unwrap(), ZooMatch::Label(ZooLabel::SoMPlus2));
}

#[test]
fn hrss_circle_reproduces_cpn() {
    // feed the CP^m factor data through the generic assembler and compare
    // fingerprints with the direct su(m+1) construction
    let m = 2usize; // su(3), small and fast
    let direct = zoo(&ZooKind::CpnSphere { m }).unwrap();

    // extract factor data from the direct quadruple: 𝔥 = u(m) with its rep
    // on 𝔭 and curvature R(X,Y) = −[X,Y]_𝔥
    let q = &direct.quadruple;
    let dim = q.table.dim();
    let dp = 2 * m;
    let h_dim = dim - dp;
    // h table on the h-indices
    let h_vectors: Vec<Vec<BigRational>> = (dp..dim).map(|i| q.table.basis_vector(i)).collect();
    let (h_span, h_table) = q.table.subalgebra_closure(&h_vectors);
    assert_eq!(h_span.dim(), h_dim);
    let rep: Vec<Mat> = (0..h_dim)
        .map(|t| {
            let mut v = vec![BigRational::zero(); dim];
            // echelon basis vector t of h_span
            for (i, s) in h_span.vectors()[t].iter().enumerate() {
                v[i] = s.as_rat().unwrap().clone();
            }
            q.ad_on_p(&v).unwrap()
        })
        .collect();
    let mut curvature = Vec::new();
    for a in 0..dp {
        let mut row = Vec::new();
        for b in (a + 1)..dp {
            let br = q.table.bracket(&q.table.basis_vector(a), &q.table.basis_vector(b));
            let coords = liealg::decompose_in(&h_span, &br).unwrap();
            row.push(coords.iter().map(|c| -c.clone()).collect::<Vec<_>>());
        }
        curvature.push(row);
    }
    // the central J element: ad_ξ in h-span coordinates
    let xi = q.table.basis_vector(q.xi_index);
    let j_element = liealg::decompose_in(&h_span, &xi).unwrap();
    let data = HrssData {
        factors: vec![HrssFactor {
            h_table,
            rep,
            curvature,
            j_element,
            b_weight: BigRational::one(),
        }],
    };
    let assembled = zoo(&ZooKind::HrssCircle(data)).unwrap();
    assert_eq!(assembled.fingerprint, direct.fingerprint);
    assert_eq!(
        (assembled.hol_horizontal_dim, assembled.hol_adapted_dim),
        (direct.hol_horizontal_dim, direct.hol_adapted_dim)
    );
}
