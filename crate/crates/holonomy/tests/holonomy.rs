use contactgeo::fixtures::*;
use contactgeo::Geometry;
use holonomy::*;
use num::rational::BigRational;
use num::traits::{One, Zero};
use numkit::{Backend, Mat, Scalar};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn u_m_basis(m: usize) -> Vec<Mat> {
    let n = 2 * m;
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut mat = Mat::zeros(n, n, Backend::Rational);
            mat.set(i, j, Scalar::from_int(1));
            mat.set(j, i, Scalar::from_int(-1));
            mat.set(m + i, m + j, Scalar::from_int(1));
            mat.set(m + j, m + i, Scalar::from_int(-1));
            out.push(mat);
        }
    }
    for i in 0..m {
        for j in i..m {
            let mut mat = Mat::zeros(n, n, Backend::Rational);
            mat.set(i, m + j, Scalar::from_int(1));
            mat.set(j, m + i, Scalar::from_int(1));
            mat.set(m + i, j, Scalar::from_int(-1));
            mat.set(m + j, i, Scalar::from_int(-1));
            out.push(mat);
        }
    }
    out
}

fn so_m_diag_basis(m: usize) -> Vec<Mat> {
    let n = 2 * m;
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut mat = Mat::zeros(n, n, Backend::Rational);
            mat.set(i, j, Scalar::from_int(1));
            mat.set(j, i, Scalar::from_int(-1));
            mat.set(m + i, m + j, Scalar::from_int(1));
            mat.set(m + j, m + i, Scalar::from_int(-1));
            out.push(mat);
        }
    }
    out
}

fn std_j(m: usize) -> Mat {
    let n = 2 * m;
    Mat::construct(n, n, Backend::Rational, |r, c| {
        if r < m && c == r + m {
            Scalar::from_int(-1)
        } else if r >= m && c + m == r {
            Scalar::from_int(1)
        } else {
            Scalar::from_int(0)
        }
    })
}

#[test]
fn heisenberg_horizontal_holonomy_trivial() {
    let geo = Geometry::build(heisenberg_flat(3).unwrap()).unwrap();
    let rep = infinitesimal_holonomy(&geo, HolMode::Horizontal, 2, &origin(3)).unwrap();
    assert_eq!(rep.dim, 0);
    assert_eq!(rep.label, HolLabel::Trivial);
    assert!(rep.stabilized);
}

#[test]
fn horizontal_contained_in_full_adapted_everywhere() {
    for model in golden_corpus().unwrap() {
        let name = model.name.clone();
        let p = model.base_point.clone();
        let geo = Geometry::build(model).unwrap();
        let hor = stabilized_holonomy(&geo, HolMode::Horizontal, &p).unwrap();
        let full = stabilized_holonomy(&geo, HolMode::Full(ConnectionTag::Adapted), &p).unwrap();
        assert!(
            hor.algebra.is_subspace_of(&full.algebra, 0.0),
            "{name}: horizontal ⊄ full(adapted)"
        );
    }
}

#[test]
fn wagner_full_equals_horizontal_on_corpus() {
    // Theorem: Hol(∇^W) = Hol(∇); exact subspace equality on every model.
    for model in golden_corpus().unwrap() {
        let name = model.name.clone();
        let p = model.base_point.clone();
        let geo = Geometry::build(model).unwrap();
        let hor = stabilized_holonomy(&geo, HolMode::Horizontal, &p).unwrap();
        let wag = stabilized_holonomy(&geo, HolMode::Full(ConnectionTag::Wagner), &p).unwrap();
        assert!(
            hor.algebra.equals(&wag.algebra, 0.0),
            "{name}: FULL(WAGNER) != HORIZONTAL ({} vs {})",
            wag.dim,
            hor.dim
        );
    }
}

#[test]
fn holonomy_algebras_are_g_skew_and_closed() {
    for model in golden_corpus().unwrap() {
        let p = model.base_point.clone();
        let geo = Geometry::build(model).unwrap();
        let g0 = geo.model.g.eval(&p).unwrap();
        for mode in [HolMode::Horizontal, HolMode::Full(ConnectionTag::Adapted)] {
            let rep = stabilized_holonomy(&geo, mode, &p).unwrap();
            for b in &rep.basis {
                let gb = g0.mul(b).unwrap();
                assert!(gb.add(&gb.transpose()).unwrap().is_zero_exact());
            }
        }
    }
}

#[test]
fn classify_examples() {
    let m = 3;
    let g = Mat::identity(6, Backend::Rational);
    let (label, fp) = classify_subalgebra(&u_m_basis(m), &g, None).unwrap();
    assert_eq!(label, HolLabel::UM);
    assert_eq!(fp.dim, 9);
    assert_eq!(fp.commutant_dim, 2);

    let (label, _) = classify_subalgebra(&[], &g, None).unwrap();
    assert_eq!(label, HolLabel::Trivial);

    let (label, fp) = classify_subalgebra(&so_m_diag_basis(m), &g, None).unwrap();
    assert_eq!(label, HolLabel::SoMLagrangian);
    assert_eq!(fp.commutant_dim, 4);

    // su(3): u(3) minus the J direction
    let su: Vec<Mat> = {
        let u = u_m_basis(m);
        // remove the J-trace component from each generator
        let j = std_j(m);
        u.iter()
            .map(|a| {
                let t = j.mul(a).unwrap().trace();
                let t = t.as_rat().unwrap() / BigRational::from_integer((-2 * m as i64).into());
                a.sub(&j.scale(&Scalar::Rat(t))).unwrap()
            })
            .filter(|a| !a.is_zero_exact())
            .collect()
    };
    let (label, _) = classify_subalgebra(&su, &g, None).unwrap();
    assert_eq!(label, HolLabel::SuM);

    // so(3) ⊕ RJ
    let mut sop = so_m_diag_basis(m);
    sop.push(std_j(m));
    let (label, _) = classify_subalgebra(&sop, &g, None).unwrap();
    assert_eq!(label, HolLabel::SoMPlusU1);
}

#[test]
fn classify_is_conjugation_stable() {
    // conjugate by the Cayley transform of a rational skew matrix (orthogonal)
    let m = 3;
    let n = 2 * m;
    let g = Mat::identity(n, Backend::Rational);
    let mut a = Mat::zeros(n, n, Backend::Rational);
    let mut v = 1i64;
    for i in 0..n {
        for j in (i + 1)..n {
            a.set(i, j, Scalar::rat(v % 3 - 1, 3));
            a.set(j, i, Scalar::rat(-(v % 3 - 1), 3));
            v += 1;
        }
    }
    let id = Mat::identity(n, Backend::Rational);
    let p = id.sub(&a).unwrap().mul(&id.add(&a).unwrap().inverse().unwrap()).unwrap();
    // p is g-orthogonal: pᵀp = I
    assert!(p.transpose().mul(&p).unwrap().sub(&id).unwrap().is_zero_exact());

    for (basis, want) in [
        (u_m_basis(m), HolLabel::UM),
        (so_m_diag_basis(m), HolLabel::SoMLagrangian),
    ] {
        let conj: Vec<Mat> = basis
            .iter()
            .map(|h| p.mul(h).unwrap().mul(&p.inverse().unwrap()).unwrap())
            .collect();
        let (label, _) = classify_subalgebra(&conj, &g, None).unwrap();
        assert_eq!(label, want);
    }
}

#[test]
fn transport_zero_connection_identity() {
    let geo = Geometry::build(heisenberg_flat(2).unwrap()).unwrap();
    // unit square loop in the (x1, y1) coordinates
    let z = BigRational::zero();
    let mk = |x: i64, y: i64| -> Vec<BigRational> {
        vec![BigRational::from_integer(x.into()), z.clone(), BigRational::from_integer(y.into()), z.clone(), z.clone()]
    };
    let path = LoopPath::polygon(&[mk(0, 0), mk(1, 0), mk(1, 1), mk(0, 1), mk(0, 0)]).unwrap();
    assert!(path.closed);
    let t = parallel_transport(&geo, &geo.adapted, &path, 64).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((t[i][j] - want).abs() < 1e-12, "t[{i}][{j}] = {}", t[i][j]);
        }
    }
}

#[test]
fn transport_is_g_orthogonal_for_metric_extensions() {
    let geo = Geometry::build(heisenberg_zs(2).unwrap()).unwrap();
    let path = LoopPath::square(
        &origin(2),
        &[rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
        &[rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)],
        &rat(1, 2),
    )
    .unwrap();
    let t = parallel_transport(&geo, &geo.adapted, &path, 1000).unwrap();
    // loop at base point: TᵀgT = g to 1e-8
    let g0 = geo.model.g.eval(&origin(2)).unwrap();
    let g: Vec<Vec<f64>> = (0..4)
        .map(|i| (0..4).map(|j| g0.at(i, j).to_f64()).collect())
        .collect();
    let mut max: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = -g[i][j];
            for k in 0..4 {
                for l in 0..4 {
                    acc += t[k][i] * g[k][l] * t[l][j];
                }
            }
            max = max.max(acc.abs());
        }
    }
    assert!(max <= 1e-8, "orthogonality defect {max}");
}

#[test]
fn square_loop_log_matches_curvature_with_order_3() {
    // log(transport) ≈ −h² R^τ(e_a, e_b) with O(h³) error, Richardson on
    // h = 1/10 → 1/20 demanding observed order ≥ 2.7
    let geo = Geometry::build(heisenberg_zs(2).unwrap()).unwrap();
    let p = origin(2);
    let d = 4;
    // frame directions at the origin
    let e = |a: usize| -> Vec<BigRational> {
        geo.model.frame[a]
            .comps
            .iter()
            .map(|c| c.eval(&p).unwrap())
            .collect()
    };
    let mut tested = false;
    for a in 0..d {
        for b in (a + 1)..d {
            let r_ab = geo.r_adapted.get(a, b).eval(&p).unwrap();
            if r_ab.is_zero_exact() {
                continue;
            }
            tested = true;
            let err_at = |h: &BigRational| -> f64 {
                let path = LoopPath::square(&p, &e(a), &e(b), h).unwrap();
                let t = parallel_transport(&geo, &geo.adapted, &path, 400).unwrap();
                let lg = log_near_identity(&t);
                let hf = num::traits::ToPrimitive::to_f64(h).unwrap();
                let mut max: f64 = 0.0;
                for i in 0..d {
                    for j in 0..d {
                        let want = -hf * hf * r_ab.at(i, j).to_f64();
                        max = max.max((lg[i][j] - want).abs());
                    }
                }
                max
            };
            let e1 = err_at(&rat(1, 10));
            let e2 = err_at(&rat(1, 20));
            let order = (e1 / e2).log2();
            assert!(order >= 2.7, "pair ({a},{b}): observed order {order} (errors {e1:.3e}, {e2:.3e})");
        }
    }
    assert!(tested, "zs model must have a curvature-carrying plane");
}

#[test]
fn theta_transport_cases() {
    let geo = Geometry::build(heisenberg_flat(2).unwrap()).unwrap();
    let z = BigRational::zero();
    // rectangle in the (x1, x2) plane: θ pulls back to 0
    let mk = |x1: i64, x2: i64| -> Vec<BigRational> {
        vec![BigRational::from_integer(x1.into()), BigRational::from_integer(x2.into()), z.clone(), z.clone(), z.clone()]
    };
    let path = LoopPath::polygon(&[mk(0, 0), mk(1, 0), mk(1, 1), mk(0, 1), mk(0, 0)]).unwrap();
    let t = theta_transport(&geo, &path).unwrap();
    assert_eq!(t.integral_exact, Some(BigRational::zero()));
    assert_eq!(t.factor, 1.0);

    // square of side s in (x1, y1): ∮θ = 2s² (Green), factor exp(−2s²)
    let s = rat(1, 2);
    let u = vec![BigRational::one(), z.clone(), z.clone(), z.clone(), z.clone()];
    let v = vec![z.clone(), z.clone(), BigRational::one(), z.clone(), z.clone()];
    let path = LoopPath::square(&origin(2), &u, &v, &s).unwrap();
    let t = theta_transport(&geo, &path).unwrap();
    assert_eq!(t.integral_exact, Some(rat(1, 2)));
    assert!((t.factor - (-0.5f64).exp()).abs() < 1e-14);

    // reversed loop: reciprocal factor
    let tr = theta_transport(&geo, &path.reversed()).unwrap();
    assert_eq!(tr.integral_exact, Some(rat(-1, 2)));
    assert!((t.factor * tr.factor - 1.0).abs() < 1e-14);
}

#[test]
fn gauss_legendre_integrates_rational_sharply() {
    // ∫₀¹ 1/(1+t) dt = ln 2 with order-10 quadrature
    let (nodes, weights) = gauss_legendre_10();
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights.iter()) {
        acc += w / (1.0 + x);
    }
    assert!((acc - 2.0f64.ln()).abs() < 1e-12);
}

#[test]
fn isotypic_examples() {
    let g4 = Mat::identity(4, Backend::Rational);
    let rep = isotypic_decomposition(&[], &g4).unwrap();
    assert_eq!(rep.d0_dim, 4);
    assert!(rep.blocks.is_empty());
    assert!(rep.split_complete);

    // so(3) ⊕ so(3) block diagonal in R⁶ → two 3-dim blocks
    let so3 = |offset: usize| -> Vec<Mat> {
        let mut out = Vec::new();
        for i in 0..3 {
            for j in (i + 1)..3 {
                let mut m = Mat::zeros(6, 6, Backend::Rational);
                m.set(offset + i, offset + j, Scalar::from_int(1));
                m.set(offset + j, offset + i, Scalar::from_int(-1));
                out.push(m);
            }
        }
        out
    };
    let mut gens = so3(0);
    gens.extend(so3(3));
    let g6 = Mat::identity(6, Backend::Rational);
    let rep = isotypic_decomposition(&gens, &g6).unwrap();
    assert_eq!(rep.d0_dim, 0);
    assert_eq!(rep.blocks.len(), 2);
    assert!(rep.blocks.iter().all(|b| b.dim == 3 && b.irreducible_certified));
    assert!(rep.split_complete);

    // u(3) on R⁶: one irreducible 6-dim block
    let rep = isotypic_decomposition(&u_m_basis(3), &g6).unwrap();
    assert_eq!(rep.d0_dim, 0);
    assert_eq!(rep.blocks.len(), 1);
    assert_eq!(rep.blocks[0].dim, 6);
    assert!(rep.blocks[0].irreducible_certified);
}

#[test]
fn dichotomy_on_heisenberg() {
    let geo = Geometry::build(heisenberg_flat(3).unwrap()).unwrap();
    let rep = dichotomy_report(&geo, 2, &origin(3)).unwrap();
    assert!(rep.codazzi);
    assert_eq!(rep.dim_difference, 0);
    assert_eq!(rep.horizontal.label, HolLabel::Trivial);
}

#[test]
fn dichotomy_on_every_codazzi_golden_model() {
    for model in golden_corpus().unwrap() {
        let p = model.base_point.clone();
        let geo = Geometry::build(model).unwrap();
        let rep = dichotomy_report(&geo, 2, &p).unwrap();
        if rep.codazzi {
            assert!(rep.dim_difference <= 1);
        }
    }
}
