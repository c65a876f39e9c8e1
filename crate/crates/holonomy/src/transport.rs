use crate::HolError;
use contactgeo::{FrameConnection, Geometry};
use num::rational::BigRational;
use num::traits::{ToPrimitive, Zero};
use polycalc::Poly;

/// One polynomial segment t ∈ [0,1] ↦ R^n with rational coefficients.
#[derive(Debug, Clone)]
pub struct Segment {
    pub comps: Vec<Poly>, // univariate in t
}

impl Segment {
    pub fn line(from: &[BigRational], to: &[BigRational]) -> Segment {
        let comps = from
            .iter()
            .zip(to)
            .map(|(a, b)| {
                // a + (b-a) t
                Poly::constant(1, a.clone()).add(&Poly::var(1, 0).scale(&(b - a)))
            })
            .collect();
        Segment { comps }
    }

    pub fn eval(&self, t: &BigRational) -> Vec<BigRational> {
        self.comps.iter().map(|p| p.eval(std::slice::from_ref(t))).collect()
    }

    pub fn eval_f64(&self, t: f64) -> Vec<f64> {
        self.comps.iter().map(|p| p.eval_f64(&[t])).collect()
    }

    pub fn velocity(&self) -> Vec<Poly> {
        self.comps.iter().map(|p| p.partial(0)).collect()
    }
}

/// Piecewise polynomial path; endpoints of consecutive segments must match
/// exactly, closed iff the last endpoint equals the first start.
#[derive(Debug, Clone)]
pub struct LoopPath {
    pub segments: Vec<Segment>,
    pub closed: bool,
}

impl LoopPath {
    pub fn new(segments: Vec<Segment>) -> Result<LoopPath, HolError> {
        if segments.is_empty() {
            return Err(HolError::BadPath("empty path".into()));
        }
        let one = BigRational::from_integer(1.into());
        let zero = BigRational::zero();
        for w in segments.windows(2) {
            if w[0].eval(&one) != w[1].eval(&zero) {
                return Err(HolError::BadPath("consecutive segment endpoints do not match".into()));
            }
        }
        let closed = segments.last().unwrap().eval(&one) == segments[0].eval(&zero);
        Ok(LoopPath { segments, closed })
    }

    pub fn polygon(points: &[Vec<BigRational>]) -> Result<LoopPath, HolError> {
        if points.len() < 2 {
            return Err(HolError::BadPath("polygon needs at least two points".into()));
        }
        let segments = points.windows(2).map(|w| Segment::line(&w[0], &w[1])).collect();
        LoopPath::new(segments)
    }

    /// Coordinate square p → p+s·u → p+s·u+s·v → p+s·v → p.
    pub fn square(p: &[BigRational], u: &[BigRational], v: &[BigRational], s: &BigRational) -> Result<LoopPath, HolError> {
        let add = |a: &[BigRational], b: &[BigRational], f: &BigRational| -> Vec<BigRational> {
            a.iter().zip(b).map(|(x, y)| x + y * f).collect()
        };
        let p1 = add(p, u, s);
        let p2 = add(&p1, v, s);
        let p3 = add(p, v, s);
        LoopPath::polygon(&[p.to_vec(), p1, p2, p3, p.to_vec()])
    }

    pub fn reversed(&self) -> LoopPath {
        // reparametrize each segment by t -> 1-t and reverse the order
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|s| Segment {
                comps: s
                    .comps
                    .iter()
                    .map(|p| {
                        let flip = Poly::one(1).sub(&Poly::var(1, 0));
                        p.compose_univariate(std::slice::from_ref(&flip))
                    })
                    .collect(),
            })
            .collect();
        LoopPath { segments, closed: self.closed }
    }
}

fn solve_f64(a: &mut [Vec<f64>], b: &mut [f64]) -> Result<Vec<f64>, HolError> {
    let n = b.len();
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col].abs() < 1e-13 {
            return Err(HolError::Calc("singular frame matrix during transport".into()));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col];
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r][col] / p;
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    Ok((0..n).map(|i| b[i] / a[i][i]).collect())
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let f = a[i][k];
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += f * b[k][j];
            }
        }
    }
    out
}

/// Connection matrix M(t) along the path: M = Σ_c ċ^c Γ_c + ċ^ξ Λ, where
/// (ċ^c, ċ^ξ) are the frame/Reeb components of the velocity.
fn connection_matrix(
    geo: &Geometry,
    conn: &FrameConnection,
    lambda: &polycalc::RfMatrix,
    seg: &Segment,
    vel: &[Poly],
    t: f64,
) -> Result<Vec<Vec<f64>>, HolError> {
    let x = seg.eval_f64(t);
    let n = geo.model.n;
    let d = geo.model.dim_frame();
    // decompose velocity in (frame, ξ)
    let mut fmat: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| geo.model.frame_mat.at(i, j).eval_f64(&x)).collect())
        .collect();
    let mut v: Vec<f64> = vel.iter().map(|p| p.eval_f64(&[t])).collect();
    let coeffs = solve_f64(&mut fmat, &mut v)?;
    let mut m = vec![vec![0.0; d]; d];
    for c in 0..d {
        if coeffs[c] == 0.0 {
            continue;
        }
        for i in 0..d {
            for j in 0..d {
                m[i][j] += coeffs[c] * conn.gamma[c].at(i, j).eval_f64(&x);
            }
        }
    }
    let cxi = coeffs[d];
    if cxi != 0.0 {
        for i in 0..d {
            for j in 0..d {
                m[i][j] += cxi * lambda.at(i, j).eval_f64(&x);
            }
        }
    }
    Ok(m)
}

/// Parallel transport of frame components along the path for an extended
/// connection: classical 4th-order one-step integration of S' = −M(t) S with
/// `steps` uniform substeps per segment. Returns the transition matrix.
pub fn parallel_transport(
    geo: &Geometry,
    conn: &FrameConnection,
    path: &LoopPath,
    steps: usize,
) -> Result<Vec<Vec<f64>>, HolError> {
    let d = geo.model.dim_frame();
    let lambda = conn
        .lambda(&geo.model)
        .ok_or_else(|| HolError::BadMode("transport along arbitrary paths needs an extension".into()))?;
    let mut s: Vec<Vec<f64>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for seg in &path.segments {
        let vel = seg.velocity();
        let h = 1.0 / steps as f64;
        for k in 0..steps {
            let t0 = k as f64 * h;
            let m1 = connection_matrix(geo, conn, &lambda, seg, &vel, t0)?;
            let m2 = connection_matrix(geo, conn, &lambda, seg, &vel, t0 + 0.5 * h)?;
            let m4 = connection_matrix(geo, conn, &lambda, seg, &vel, t0 + h)?;
            // RK4 for S' = −M S
            let f = |m: &[Vec<f64>], s: &[Vec<f64>]| -> Vec<Vec<f64>> {
                let ms = mat_mul(m, s);
                ms.iter().map(|row| row.iter().map(|x| -x).collect()).collect()
            };
            let k1 = f(&m1, &s);
            let s2: Vec<Vec<f64>> = add_scaled(&s, &k1, 0.5 * h);
            let k2 = f(&m2, &s2);
            let s3 = add_scaled(&s, &k2, 0.5 * h);
            let k3 = f(&m2, &s3);
            let s4 = add_scaled(&s, &k3, h);
            let k4 = f(&m4, &s4);
            for i in 0..d {
                for j in 0..d {
                    s[i][j] += h / 6.0 * (k1[i][j] + 2.0 * k2[i][j] + 2.0 * k3[i][j] + k4[i][j]);
                }
            }
        }
    }
    Ok(s)
}

fn add_scaled(a: &[Vec<f64>], b: &[Vec<f64>], f: f64) -> Vec<Vec<f64>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + f * y).collect())
        .collect()
}

/// Matrix logarithm of a transition matrix near the identity (series in
/// E = T − I, converges for the small loops used in curvature checks).
pub fn log_near_identity(t: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = t.len();
    let mut e = t.to_vec();
    for (i, row) in e.iter_mut().enumerate() {
        row[i] -= 1.0;
    }
    let mut acc = vec![vec![0.0; n]; n];
    let mut power = e.clone();
    for k in 1..=24 {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        for i in 0..n {
            for j in 0..n {
                acc[i][j] += sign * power[i][j] / k as f64;
            }
        }
        power = mat_mul(&power, &e);
    }
    acc
}

#[derive(Debug, Clone)]
pub struct ThetaTransport {
    /// ∫θ along the loop; exact when θ pulls back polynomially.
    pub integral_exact: Option<BigRational>,
    pub integral: f64,
    /// exp(−∫θ), the ∇^θ transport factor.
    pub factor: f64,
}

/// ∫θ over the loop: exact rational segment integrals when the pullback is
/// polynomial, order-10 Gauss–Legendre otherwise; returns exp(−∫θ).
pub fn theta_transport(geo: &Geometry, path: &LoopPath) -> Result<ThetaTransport, HolError> {
    if !path.closed {
        return Err(HolError::BadPath("θ-transport needs a closed loop".into()));
    }
    let n = geo.model.n;
    let mut exact_total = Some(BigRational::zero());
    let mut total_f = 0.0;
    let (nodes, weights) = gauss_legendre_10();
    for seg in &path.segments {
        let vel = seg.velocity();
        // integrand: Σ_μ θ_μ(x(t)) ẋ^μ(t) as a univariate rational function
        let mut num_acc = Poly::zero(1);
        let mut den_acc = Poly::one(1);
        let mut poly_ok = true;
        for mu in 0..n {
            let (pn, pd) = geo.model.theta.comps[mu].compose_univariate(&seg.comps);
            if pn.is_zero() {
                continue;
            }
            let term_num = pn.mul(&vel[mu]);
            match pd.constant_value() {
                Some(c) if !c.is_zero() => {
                    // num_acc/den_acc + term_num/c
                    let inv = Poly::constant(1, BigRational::from_integer(1.into()) / c);
                    num_acc = num_acc.add(&den_acc.mul(&term_num).mul(&inv));
                }
                _ => {
                    poly_ok = false;
                    // fold into a common denominator for numeric evaluation
                    num_acc = num_acc.mul(&pd).add(&den_acc.mul(&term_num));
                    den_acc = den_acc.mul(&pd);
                }
            }
        }
        if poly_ok {
            let exact = integrate_poly_01(&num_acc);
            total_f += exact.to_f64().unwrap();
            if let Some(acc) = exact_total.as_mut() {
                *acc += exact;
            }
        } else {
            exact_total = None;
            let mut acc = 0.0;
            for (x, w) in nodes.iter().zip(weights.iter()) {
                acc += w * num_acc.eval_f64(&[*x]) / den_acc.eval_f64(&[*x]);
            }
            total_f += acc;
        }
    }
    let integral = exact_total
        .as_ref()
        .map(|r| r.to_f64().unwrap())
        .unwrap_or(total_f);
    Ok(ThetaTransport {
        integral_exact: exact_total,
        integral,
        factor: (-integral).exp(),
    })
}

fn integrate_poly_01(p: &Poly) -> BigRational {
    let mut acc = BigRational::zero();
    for (m, c) in p.terms() {
        let k = m.0[0] as i64;
        acc += c / BigRational::from_integer((k + 1).into());
    }
    acc
}

/// 10-point Gauss–Legendre nodes/weights on [0,1], computed by Newton on the
/// Legendre recurrence (deterministic to machine precision).
pub fn gauss_legendre_10() -> (Vec<f64>, Vec<f64>) {
    let n = 10usize;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1,1] -> [0,1]
        nodes.push(0.5 * (1.0 - x));
        weights.push(0.5 * w);
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0f64, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}
