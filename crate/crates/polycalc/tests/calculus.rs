use num::rational::BigRational;
use num::traits::Zero;
use polycalc::*;

fn rf(src: &str, n: usize) -> RatFunc {
    parse_expr(src, n).unwrap()
}

fn vf(srcs: &[&str], n: usize) -> VectorField {
    VectorField::new(srcs.iter().map(|s| rf(s, n)).collect())
}

/// Heisenberg coordinates for m = 3: (x1,x2,x3,y1,y2,y3,z) = x1..x7.
fn heisenberg_frame_m3() -> (Vec<VectorField>, OneForm) {
    let n = 7;
    let mut frame = Vec::new();
    for i in 0..3 {
        // X_i = d/dx_i + y_i d/dz
        let mut v = VectorField::zero(n);
        v.comps[i] = rf("1", n);
        v.comps[6] = RatFunc::var(n, 3 + i);
        frame.push(v);
    }
    for i in 0..3 {
        // Y_i = d/dy_i - x_i d/dz
        let mut v = VectorField::zero(n);
        v.comps[3 + i] = rf("1", n);
        v.comps[6] = RatFunc::var(n, i).neg();
        frame.push(v);
    }
    // theta = dz + sum(x_i dy_i - y_i dx_i)
    let mut theta = vec![RatFunc::zero(n); n];
    for i in 0..3 {
        theta[i] = RatFunc::var(n, 3 + i).neg();
        theta[3 + i] = RatFunc::var(n, i);
    }
    theta[6] = RatFunc::one(n);
    (frame, OneForm::new(theta))
}

#[test]
fn bracket_of_field_with_itself_vanishes() {
    let v = vf(&["x1*x2", "x2^2", "1"], 3);
    assert!(vf_bracket(&v, &v).is_zero());
}

#[test]
fn coordinate_bracket() {
    // [d/dx1, x1 d/dx2] = d/dx2
    let n = 2;
    let a = VectorField::coordinate(n, 0);
    let b = VectorField::coordinate(n, 1).scale(&RatFunc::var(n, 0));
    let c = vf_bracket(&a, &b);
    assert_eq!(c, VectorField::coordinate(n, 1));
}

#[test]
fn heisenberg_frame_bracket_is_vertical() {
    // [X_1, Y_1] = -2 d/dz, by hand expansion
    let (frame, _) = heisenberg_frame_m3();
    let b = vf_bracket(&frame[0], &frame[3]);
    let mut expect = VectorField::zero(7);
    expect.comps[6] = rf("0-2", 7);
    assert_eq!(b, expect);
}

#[test]
fn heisenberg_dtheta_and_reeb_invariance() {
    let (frame, theta) = heisenberg_frame_m3();
    let dtheta = exterior_d(&theta);
    // dθ = 2 Σ dx_i ∧ dy_i, so dθ(X_i, Y_j) = 2δ_ij on coordinate fields
    for i in 0..3 {
        for j in 0..3 {
            let val = dtheta.apply(&VectorField::coordinate(7, i), &VectorField::coordinate(7, 3 + j));
            let expect = if i == j { rf("2", 7) } else { rf("0", 7) };
            assert!(val.eq_exact(&expect));
        }
    }
    // frame evaluation dθ(X_i, Y_i) = 2 as well (vertical parts drop out)
    let v = dtheta.apply(&frame[0], &frame[3]);
    assert!(v.eq_exact(&rf("2", 7)));
    // L_ξ dθ = 0 for ξ = ∂z
    let xi = VectorField::coordinate(7, 6);
    let ld = lie_derivative(&xi, &CovariantTensor::Two(dtheta));
    match ld {
        CovariantTensor::Two(t) => assert!(t.is_zero()),
        _ => unreachable!(),
    }
}

#[test]
fn lie_derivative_killing_and_scaling() {
    let n = 3;
    // T = x1 dx2⊗dx2, L_{∂x1} T = dx2⊗dx2
    let mut t = SymTensor::zero(n);
    t.set(1, 1, RatFunc::var(n, 0));
    let out = lie_derivative(&VectorField::coordinate(n, 0), &CovariantTensor::Sym(t));
    match out {
        CovariantTensor::Sym(s) => {
            assert!(s.get(1, 1).eq_exact(&rf("1", n)));
            assert!(s.get(0, 0).is_zero() && s.get(0, 1).is_zero());
        }
        _ => unreachable!(),
    }
    // z-independent tensor is killed by ∂z
    let mut t = SymTensor::zero(n);
    t.set(0, 1, rf("x1*x2", n));
    let out = lie_derivative(&VectorField::coordinate(n, 2), &CovariantTensor::Sym(t));
    match out {
        CovariantTensor::Sym(s) => assert!(s.is_zero()),
        _ => unreachable!(),
    }
}

#[test]
fn exterior_d_examples() {
    let n = 2;
    // d(dx1) = 0
    let one_form = OneForm::new(vec![rf("1", n), rf("0", n)]);
    assert!(exterior_d(&one_form).is_zero());
    // d(x1 dx2) = dx1 ∧ dx2
    let one_form = OneForm::new(vec![rf("0", n), rf("x1", n)]);
    let d = exterior_d(&one_form);
    assert!(d.get(0, 1).eq_exact(&rf("1", n)));
}

#[test]
fn evaluate_substitution_and_pole() {
    let n = 3;
    let f = rf("x1/(1+x2)", n);
    let p = vec![
        BigRational::from_integer(2.into()),
        BigRational::from_integer(1.into()),
        BigRational::zero(),
    ];
    assert_eq!(f.eval(&p).unwrap(), BigRational::from_integer(1.into()));
    let pole = vec![
        BigRational::from_integer(2.into()),
        BigRational::from_integer((-1).into()),
        BigRational::zero(),
    ];
    assert!(matches!(f.eval(&pole), Err(CalcError::PoleAtPoint(_))));
}

#[test]
fn degree_guard_fires() {
    let n = 1;
    let mut f = rf("x1", n);
    for _ in 0..7 {
        f = f.mul(&f);
    }
    assert!(f.check_degree(DEGREE_GUARD).is_err());
    assert!(rf("x1^3", n).check_degree(DEGREE_GUARD).is_ok());
}

#[test]
fn finite_difference_bracket_sanity() {
    // evaluate(vf_bracket(V,W), p) matches the bracket computed with
    // central-difference partials (error O(h^2)); h = 1e-4, tol 1e-6.
    let n = 2;
    let v = vf(&["x2^2", "1"], n);
    let w = vf(&["1", "x1*x2"], n);
    let b = vf_bracket(&v, &w);
    let p = [0.3_f64, -0.7];
    let h = 1e-4;
    for a in 0..n {
        let mut fd = 0.0;
        for bb in 0..n {
            let mut pp = p;
            let mut pm = p;
            pp[bb] += h;
            pm[bb] -= h;
            let dw = (w.comps[a].eval_f64(&pp) - w.comps[a].eval_f64(&pm)) / (2.0 * h);
            let dv = (v.comps[a].eval_f64(&pp) - v.comps[a].eval_f64(&pm)) / (2.0 * h);
            fd += v.comps[bb].eval_f64(&p) * dw - w.comps[bb].eval_f64(&p) * dv;
        }
        let exact = b.comps[a].eval_f64(&p);
        assert!((fd - exact).abs() < 1e-6, "component {a}: fd {fd} vs exact {exact}");
    }
}
