use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use numkit::{Backend, Mat, Scalar};

/// Ricci with first-slot contraction: Ric(R)(X,Y) = tr(V ↦ R(V,X)Y), i.e.
/// Ric_{bc} = Σ_a [R(e_a, e_b)]^a_c. The paper states tr(R(X,·)Y) but its
/// own identities (RicTW, scal^τ = 2µm²) pin the first-slot convention.
pub fn ricci_first_slot(r: &[Vec<Mat>]) -> Mat {
    let d = r.len();
    Mat::construct(d, d, Backend::Rational, |b, c| {
        let mut acc = BigRational::zero();
        for a in 0..d {
            acc += r[a][b].at(a, c).as_rat().unwrap();
        }
        Scalar::Rat(acc)
    })
}

/// Pseudo-Hermitian Ricci form ρ(X,Y) = ½ Σ_{a,b} g^{ab} g(R(J e_a, e_b) X, Y).
pub fn rho_form(r: &[Vec<Mat>], g: &Mat, g_inv: &Mat, j: &Mat) -> Mat {
    let d = r.len();
    // T = ½ Σ_{a,b,e} g^{ab} J^e_a R(e_e, e_b)   (an endomorphism)
    let mut t = Mat::zeros(d, d, Backend::Rational);
    for a in 0..d {
        for b in 0..d {
            let gab = g_inv.at(a, b).as_rat().unwrap();
            if gab.is_zero() {
                continue;
            }
            for e in 0..d {
                let je = j.at(e, a).as_rat().unwrap();
                if je.is_zero() {
                    continue;
                }
                t = t.add(&r[e][b].scale(&Scalar::Rat(gab * je))).unwrap();
            }
        }
    }
    let half = Scalar::rat(1, 2);
    // ρ(X,Y) = g(T X, Y): matrix (g T)^T? careful: ρ_{cd} = g(T e_c, e_d) = (T^T g)_{cd}
    t.transpose().mul(g).unwrap().scale(&half)
}

/// g-trace of a bilinear form matrix: Σ g^{ab} B_{ab}.
pub fn trace_form(b: &Mat, g_inv: &Mat) -> BigRational {
    let d = b.rows();
    let mut acc = BigRational::zero();
    for i in 0..d {
        for j in 0..d {
            acc += g_inv.at(i, j).as_rat().unwrap() * b.at(i, j).as_rat().unwrap();
        }
    }
    acc
}

/// (U ∧ V)Z = g(U,Z) V − g(V,Z) U as a matrix, for column vectors U, V.
pub fn wedge_endo(u: &Mat, v: &Mat, g: &Mat) -> Mat {
    let ug = u.transpose().mul(g).unwrap(); // row vector
    let vg = v.transpose().mul(g).unwrap();
    v.mul(&ug).unwrap().sub(&u.mul(&vg).unwrap()).unwrap()
}

/// Characteristic polynomial det(tI − M) by Faddeev–LeVerrier; returns
/// coefficients c_0..c_n with c_n = 1 (ascending powers of t).
pub fn char_poly(m: &Mat) -> Vec<BigRational> {
    let n = m.rows();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut aux = Mat::identity(n, Backend::Rational);
    for k in 1..=n {
        aux = m.mul(&aux).unwrap();
        let c = -aux.trace().as_rat().unwrap() / BigRational::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        aux = aux
            .add(&Mat::identity(n, Backend::Rational).scale(&Scalar::Rat(c)))
            .unwrap();
    }
    coeffs
}

/// Rational roots with multiplicity by candidate testing and deflation;
/// second component is true when the polynomial splits completely over Q.
pub fn rational_roots(coeffs: &[BigRational]) -> (Vec<(BigRational, usize)>, bool) {
    let mut poly: Vec<BigRational> = coeffs.to_vec();
    // strip trailing zero coefficients defensively
    while poly.len() > 1 && poly.last().unwrap().is_zero() {
        poly.pop();
    }
    let mut roots: Vec<(BigRational, usize)> = Vec::new();
    // peel off zero roots
    let mut zero_mult = 0usize;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((BigRational::zero(), zero_mult));
    }
    'outer: while poly.len() > 1 {
        // integerize: coefficients p_i = a_i, candidates ±(divisors of a_0)/(divisors of a_n)
        let lcm = poly.iter().fold(BigInt::one(), |acc, c| num::integer::lcm(acc, c.denom().clone()));
        let ints: Vec<BigInt> = poly.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let a0 = ints[0].clone().abs();
        let an = ints.last().unwrap().clone().abs();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                    if eval_poly(&poly, &cand).is_zero() {
                        let mut mult = 0usize;
                        while poly.len() > 1 && eval_poly(&poly, &cand).is_zero() {
                            poly = deflate(&poly, &cand);
                            mult += 1;
                        }
                        merge_root(&mut roots, cand, mult);
                        continue 'outer;
                    }
                }
            }
        }
        return (roots, false);
    }
    (roots, true)
}

fn merge_root(roots: &mut Vec<(BigRational, usize)>, r: BigRational, mult: usize) {
    for (rr, m) in roots.iter_mut() {
        if *rr == r {
            *m += mult;
            return;
        }
    }
    roots.push((r, mult));
}

fn eval_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn deflate(coeffs: &[BigRational], root: &BigRational) -> Vec<BigRational> {
    // synthetic division by (t - root)
    let n = coeffs.len() - 1;
    let mut out = vec![BigRational::zero(); n];
    let mut carry = coeffs[n].clone();
    for k in (0..n).rev() {
        out[k] = carry.clone();
        carry = &coeffs[k] + &carry * root;
    }
    out
}

fn divisors(v: &BigInt) -> Vec<BigInt> {
    // small exhaustive divisor scan; structure constants stay tiny, but cap
    // the scan and fall back to {1, |v|} beyond it
    let mut out = vec![BigInt::one()];
    if v.is_zero() {
        return out;
    }
    let cap = BigInt::from(10_000);
    let target = v.clone().abs();
    if target > cap {
        out.push(target);
        return out;
    }
    let t = target.to_i64().unwrap();
    for d in 2..=t {
        if t % d == 0 {
            out.push(BigInt::from(d));
        }
    }
    out
}

/// Real roots of a rational-coefficient polynomial by sign-change bisection;
/// even-multiplicity roots may be missed (callers flag the spectrum FLOAT).
pub fn real_roots_f64(coeffs: &[BigRational]) -> Vec<f64> {
    let cf: Vec<f64> = coeffs.iter().map(|c| c.to_f64().unwrap()).collect();
    let n = cf.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = cf[n];
    let bound = 1.0 + cf.iter().take(n).map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let eval = |x: f64| -> f64 { cf.iter().rev().fold(0.0, |acc, c| acc * x + c) };
    let steps = 4000;
    let mut roots = Vec::new();
    let mut prev_x = -bound;
    let mut prev_v = eval(prev_x);
    for k in 1..=steps {
        let x = -bound + 2.0 * bound * (k as f64) / (steps as f64);
        let v = eval(x);
        if prev_v == 0.0 {
            roots.push(prev_x);
        } else if prev_v * v < 0.0 {
            let (mut a, mut b) = (prev_x, x);
            for _ in 0..80 {
                let mid = 0.5 * (a + b);
                if eval(a) * eval(mid) <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            roots.push(0.5 * (a + b));
        }
        prev_x = x;
        prev_v = v;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_diag() {
        let m = Mat::from_i64(&[&[2, 0], &[0, 3]]);
        let c = char_poly(&m);
        // t^2 - 5t + 6
        assert_eq!(c[2], BigRational::one());
        assert_eq!(c[1], BigRational::from_integer((-5).into()));
        assert_eq!(c[0], BigRational::from_integer(6.into()));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let c = vec![
            BigRational::from_integer(2.into()),
            BigRational::from_integer((-3).into()),
            BigRational::zero(),
            BigRational::one(),
        ];
        let (roots, full) = rational_roots(&c);
        assert!(full);
        assert!(roots.contains(&(BigRational::one(), 2)));
        assert!(roots.contains(&(BigRational::from_integer((-2).into()), 1)));
    }

    #[test]
    fn irrational_spectrum_falls_back() {
        // t^2 - 2
        let c = vec![
            BigRational::from_integer((-2).into()),
            BigRational::zero(),
            BigRational::one(),
        ];
        let (_, full) = rational_roots(&c);
        assert!(!full);
        let r = real_roots_f64(&c);
        assert_eq!(r.len(), 2);
        assert!((r[1] - 2.0f64.sqrt()).abs() < 1e-9);
    }
}
