use num::rational::BigRational;
use polycalc::*;
use proptest::prelude::*;

const N: usize = 3;

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

/// Random polynomial of total degree <= 2 in N variables.
fn poly_deg2() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(small_rat(), 10).prop_map(|cs| {
        // 1, x1, x2, x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
        let v = |i: usize| Poly::var(N, i);
        let monos = vec![
            Poly::one(N),
            v(0),
            v(1),
            v(2),
            v(0).mul(&v(0)),
            v(0).mul(&v(1)),
            v(0).mul(&v(2)),
            v(1).mul(&v(1)),
            v(1).mul(&v(2)),
            v(2).mul(&v(2)),
        ];
        let mut acc = Poly::zero(N);
        for (c, m) in cs.iter().zip(monos.iter()) {
            acc = acc.add(&m.scale(c));
        }
        acc
    })
}

fn poly_vf() -> impl Strategy<Value = VectorField> {
    proptest::collection::vec(poly_deg2(), N)
        .prop_map(|ps| VectorField::new(ps.into_iter().map(RatFunc::from_poly).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn jacobi_identity(v in poly_vf(), w in poly_vf(), u in poly_vf()) {
        let a = vf_bracket(&v, &vf_bracket(&w, &u));
        let b = vf_bracket(&w, &vf_bracket(&u, &v));
        let c = vf_bracket(&u, &vf_bracket(&v, &w));
        let total = a.add(&b).add(&c);
        prop_assert!(total.is_zero());
    }

    #[test]
    fn d_of_gradient_vanishes(f in poly_deg2()) {
        let df = OneForm::new((0..N).map(|i| RatFunc::from_poly(f.partial(i))).collect());
        prop_assert!(exterior_d(&df).is_zero());
    }

    #[test]
    fn ratfunc_field_axioms(a in poly_deg2(), b in poly_deg2(), c in poly_deg2()) {
        let one = Poly::one(N);
        let ra = RatFunc::new(a, b.mul(&b).add(&one)).unwrap();
        let rb = RatFunc::new(b, c.mul(&c).add(&one)).unwrap();
        let rc = RatFunc::new(c, one.clone()).unwrap();
        // distributivity through cross-multiplied equality
        let lhs = ra.mul(&rb.add(&rc));
        let rhs = ra.mul(&rb).add(&ra.mul(&rc));
        prop_assert!(lhs.eq_exact(&rhs));
    }
}
