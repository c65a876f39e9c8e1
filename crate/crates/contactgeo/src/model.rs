use crate::GeoError;
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use polycalc::{exterior_d, OneForm, RatFunc, RfMatrix, VectorField};

/// A contact sub-Riemannian structure in coordinates: contact form θ on
/// R^{2m+1}, a horizontal frame E_1..E_2m, the frame metric g, an optional
/// frame complex structure J, and the base point all pointwise work runs at.
///
/// Loading computes and validates the Reeb field, the frame/Reeb coordinate
/// matrix F and its exact inverse (the unimodularity requirement keeps every
/// projection inside the rational-function ring), the bracket decompositions,
/// and dθ on the frame.
#[derive(Debug, Clone)]
pub struct ContactModel {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub theta: OneForm,
    pub frame: Vec<VectorField>,
    pub g: RfMatrix,
    pub j: Option<RfMatrix>,
    pub base_point: Vec<BigRational>,
    pub validity: Vec<String>,

    pub xi: VectorField,
    /// Columns: E_1..E_2m, ξ (coordinate components).
    pub frame_mat: RfMatrix,
    pub frame_inv: RfMatrix,
    /// W_ab = dθ(E_a, E_b).
    pub w: RfMatrix,
    /// Frame coefficients of π[E_a, E_b]: brackets[a][b] is a 2m-vector.
    pub brackets: Vec<Vec<Vec<RatFunc>>>,
    /// Matrix of X ↦ π[ξ, X] on the frame: [ξ, E_a] = Σ_c (P_ξ)^c_a E_c.
    pub p_xi: RfMatrix,
    pub g_inv: RfMatrix,
}

impl ContactModel {
    pub fn new(
        name: String,
        theta: OneForm,
        frame: Vec<VectorField>,
        g: RfMatrix,
        j: Option<RfMatrix>,
        base_point: Vec<BigRational>,
    ) -> Result<ContactModel, GeoError> {
        let n = theta.n();
        if n % 2 == 0 || n < 5 {
            return Err(GeoError::Validation(format!("dimension must be odd and >= 5, got {n}")));
        }
        let m = n / 2;
        if frame.len() != 2 * m {
            return Err(GeoError::Validation(format!(
                "expected {} frame fields, got {}",
                2 * m,
                frame.len()
            )));
        }
        if base_point.len() != n {
            return Err(GeoError::Validation("base point has wrong dimension".into()));
        }
        if g.rows() != 2 * m || g.cols() != 2 * m {
            return Err(GeoError::Validation("frame metric must be 2m x 2m".into()));
        }
        for a in 0..2 * m {
            for b in (a + 1)..2 * m {
                if !g.at(a, b).eq_exact(g.at(b, a)) {
                    return Err(GeoError::Validation(format!("metric not symmetric at ({a},{b})")));
                }
            }
        }
        // horizontality: θ(E_a) = 0 identically
        for (a, e) in frame.iter().enumerate() {
            if !theta.apply(e).is_zero() {
                return Err(GeoError::Validation(format!("frame field {} is not horizontal", a + 1)));
            }
        }

        let dtheta = exterior_d(&theta);

        // Reeb field: θ(ξ) = 1, dθ(ξ, E_a) = 0, solved with the coordinate
        // system [rows dθ(·,E_a); θ] ξ = (0,...,0,1).
        let mut sys = RfMatrix::zeros(n, n, n);
        for a in 0..2 * m {
            for mu in 0..n {
                let mut acc = RatFunc::zero(n);
                for nu in 0..n {
                    if mu == nu {
                        continue;
                    }
                    acc = acc.add(&dtheta.get(mu, nu).mul(&frame[a].comps[nu]));
                }
                sys.set(a, mu, acc);
            }
        }
        for mu in 0..n {
            sys.set(2 * m, mu, theta.comps[mu].clone());
        }
        let det_sys = sys.det();
        if det_sys.is_zero() {
            return Err(GeoError::NotContact("θ ∧ dθ^m degenerates identically".into()));
        }
        if det_sys.eval(&base_point).map_err(|e| GeoError::Calc(e.to_string()))?.is_zero() {
            return Err(GeoError::NotContact("θ ∧ dθ^m vanishes at the base point".into()));
        }
        let sys_inv = sys.inverse().map_err(|_| GeoError::NotContact("contact system singular".into()))?;
        let xi = VectorField::new((0..n).map(|mu| sys_inv.at(mu, 2 * m).clone()).collect());

        // reeb sanity: ι_ξ dθ = 0 on every coordinate direction
        for mu in 0..n {
            let mut acc = RatFunc::zero(n);
            for nu in 0..n {
                if mu == nu {
                    continue;
                }
                acc = acc.add(&dtheta.get(nu, mu).mul(&xi.comps[nu]));
            }
            if !acc.is_zero() {
                return Err(GeoError::NotContact("computed Reeb field fails ι_ξ dθ = 0".into()));
            }
        }

        // frame matrix F = (E_1 .. E_2m, ξ), unimodular up to constant
        let frame_mat = RfMatrix::from_fn(n, n, n, |mu, col| {
            if col < 2 * m {
                frame[col].comps[mu].clone()
            } else {
                xi.comps[mu].clone()
            }
        });
        let detf = frame_mat.det();
        if detf.constant_value().is_none() {
            return Err(GeoError::Validation(
                "frame determinant is not a nonzero constant (unimodular coframe required)".into(),
            ));
        }
        if detf.is_zero() {
            return Err(GeoError::Validation("frame is degenerate".into()));
        }
        let frame_inv = frame_mat.inverse().map_err(|_| GeoError::Validation("frame not invertible".into()))?;

        // positive definiteness of g at the base point (leading minors)
        let g0 = g.eval(&base_point).map_err(|e| GeoError::Calc(e.to_string()))?;
        for k in 1..=2 * m {
            let minor = numkit::Mat::construct(k, k, numkit::Backend::Rational, |i, j| g0.at(i, j).clone());
            let det = leading_det(&minor);
            if !det.is_positive() {
                return Err(GeoError::Validation(format!(
                    "frame metric is not positive definite at the base point (minor {k})"
                )));
            }
        }

        // dθ on the frame
        let w = RfMatrix::from_fn(2 * m, 2 * m, n, |a, b| dtheta.apply(&frame[a], &frame[b]));

        // bracket decompositions π[E_a, E_b] and π[ξ, E_a]
        let decompose = |v: &VectorField| -> (Vec<RatFunc>, RatFunc) {
            let mut out = Vec::with_capacity(2 * m);
            for row in 0..2 * m {
                let mut acc = RatFunc::zero(n);
                for mu in 0..n {
                    acc = acc.add(&frame_inv.at(row, mu).mul(&v.comps[mu]));
                }
                out.push(acc);
            }
            let mut vert = RatFunc::zero(n);
            for mu in 0..n {
                vert = vert.add(&frame_inv.at(2 * m, mu).mul(&v.comps[mu]));
            }
            (out, vert)
        };

        let mut brackets = vec![vec![Vec::new(); 2 * m]; 2 * m];
        for a in 0..2 * m {
            for b in 0..2 * m {
                if a == b {
                    brackets[a][b] = vec![RatFunc::zero(n); 2 * m];
                    continue;
                }
                let (hor, _vert) = decompose(&polycalc::vf_bracket(&frame[a], &frame[b]));
                brackets[a][b] = hor;
            }
        }
        let mut p_xi = RfMatrix::zeros(2 * m, 2 * m, n);
        for a in 0..2 * m {
            let (hor, vert) = decompose(&polycalc::vf_bracket(&xi, &frame[a]));
            if !vert.is_zero() {
                return Err(GeoError::Validation("[ξ, E_a] acquired a vertical part".into()));
            }
            for c in 0..2 * m {
                p_xi.set(c, a, hor[c].clone());
            }
        }

        let g_inv = g.inverse().map_err(|_| GeoError::Validation("frame metric not invertible".into()))?;

        let mut validity = vec![
            "positive definiteness certified at the base point (and sample points) only".to_string(),
        ];
        if let Some(jm) = &j {
            let j2 = jm.mul(jm);
            let minus_id = RfMatrix::identity(2 * m, n).neg();
            if !(j2.sub(&minus_id)).is_zero() {
                return Err(GeoError::NotAlmostComplex);
            }
            validity.push("J² = -I verified identically".to_string());
        }

        Ok(ContactModel {
            name,
            n,
            m,
            theta,
            frame,
            g,
            j,
            base_point,
            validity,
            xi,
            frame_mat,
            frame_inv,
            w,
            brackets,
            p_xi,
            g_inv,
        })
    }

    pub fn dim_frame(&self) -> usize {
        2 * self.m
    }

    /// Directional derivative of a rational function along frame field a.
    pub fn d_frame(&self, a: usize, f: &RatFunc) -> RatFunc {
        f.directional(&self.frame[a].comps)
    }

    /// Directional derivative along the Reeb field.
    pub fn d_xi(&self, f: &RatFunc) -> RatFunc {
        f.directional(&self.xi.comps)
    }

    pub fn d_frame_mat(&self, a: usize, mm: &RfMatrix) -> RfMatrix {
        mm.directional(&self.frame[a].comps)
    }

    pub fn d_xi_mat(&self, mm: &RfMatrix) -> RfMatrix {
        mm.directional(&self.xi.comps)
    }

    /// Decompose an arbitrary horizontal vector field in the frame.
    pub fn frame_coords(&self, v: &VectorField) -> Result<Vec<RatFunc>, GeoError> {
        let mut out = Vec::with_capacity(2 * self.m);
        for row in 0..2 * self.m {
            let mut acc = RatFunc::zero(self.n);
            for mu in 0..self.n {
                acc = acc.add(&self.frame_inv.at(row, mu).mul(&v.comps[mu]));
            }
            out.push(acc);
        }
        let mut vert = RatFunc::zero(self.n);
        for mu in 0..self.n {
            vert = vert.add(&self.frame_inv.at(2 * self.m, mu).mul(&v.comps[mu]));
        }
        if !vert.is_zero() {
            return Err(GeoError::Validation("field is not horizontal".into()));
        }
        Ok(out)
    }

    /// Deterministic pole-free sample points for SAMPLED identity checks.
    pub fn sample_points(&self, count: usize) -> Vec<Vec<BigRational>> {
        let mut seed: u64 = 0x5851f42d4c957f2d;
        for b in self.name.bytes() {
            seed = seed.wrapping_mul(0x100000001b3).wrapping_add(b as u64);
        }
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        let mut out = Vec::new();
        let mut guard = 0;
        while out.len() < count && guard < 200 {
            guard += 1;
            let p: Vec<BigRational> = (0..self.n)
                .map(|_| {
                    let r = next();
                    let num = (r % 5) as i64 - 2;
                    let den = ((r >> 8) % 3) as i64 + 1;
                    BigRational::new(num.into(), den.into())
                })
                .collect();
            // reject points where the metric or frame inverse degenerate
            let ok = self.g.eval(&p).is_ok()
                && self.g_inv.eval(&p).is_ok()
                && self.frame_inv.eval(&p).is_ok()
                && self.w.eval(&p).is_ok();
            if ok && !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}

fn leading_det(m: &numkit::Mat) -> BigRational {
    // small exact determinant by Laplace on the last row (k <= 6)
    let k = m.rows();
    if k == 1 {
        return m.at(0, 0).as_rat().unwrap().clone();
    }
    let mut acc = BigRational::zero();
    for j in 0..k {
        let entry = m.at(k - 1, j).as_rat().unwrap().clone();
        if entry.is_zero() {
            continue;
        }
        let sub = numkit::Mat::construct(k - 1, k - 1, numkit::Backend::Rational, |r, c| {
            m.at(r, if c < j { c } else { c + 1 }).clone()
        });
        let sign = if (k - 1 + j) % 2 == 0 { 1 } else { -1 };
        acc += BigRational::from_integer(sign.into()) * entry * leading_det(&sub);
    }
    acc
}
