use crate::model::ContactModel;
use crate::GeoError;
use num::rational::BigRational;
use polycalc::{OneForm, RatFunc, RfMatrix, VectorField};

/// Heisenberg group coordinates (x_1..x_m, y_1..y_m, z) with
/// θ = dz + Σ (x_i dy_i − y_i dx_i) and the left-invariant horizontal frame
/// X_i = ∂x_i + y_i ∂z, Y_i = ∂y_i − x_i ∂z. Any frame metric/complex
/// structure can be mounted on top; this is the carrier for the whole
/// golden corpus.
pub fn heisenberg_theta_frame(m: usize) -> (OneForm, Vec<VectorField>) {
    let n = 2 * m + 1;
    let mut theta = vec![RatFunc::zero(n); n];
    for i in 0..m {
        theta[i] = RatFunc::var(n, m + i).neg();
        theta[m + i] = RatFunc::var(n, i);
    }
    theta[2 * m] = RatFunc::one(n);
    let mut frame = Vec::new();
    for i in 0..m {
        let mut v = VectorField::zero(n);
        v.comps[i] = RatFunc::one(n);
        v.comps[2 * m] = RatFunc::var(n, m + i);
        frame.push(v);
    }
    for i in 0..m {
        let mut v = VectorField::zero(n);
        v.comps[m + i] = RatFunc::one(n);
        v.comps[2 * m] = RatFunc::var(n, i).neg();
        frame.push(v);
    }
    (OneForm::new(theta), frame)
}

pub fn origin(m: usize) -> Vec<BigRational> {
    vec![BigRational::from_integer(0.into()); 2 * m + 1]
}

/// A generic base point (all coordinates nonzero): infinitesimal holonomy
/// at special points such as the origin of the zs models can undershoot the
/// restricted holonomy at low depth, so curved fixtures anchor here.
pub fn generic_point(m: usize) -> Vec<BigRational> {
    (0..2 * m + 1)
        .map(|i| BigRational::new(((i % 3) as i64 + 1).into(), ((i % 4) as i64 + 3).into()))
        .collect()
}

/// Standard complex structure J X_i = Y_i, J Y_i = −X_i as a frame matrix.
pub fn standard_j(m: usize) -> RfMatrix {
    let n = 2 * m + 1;
    RfMatrix::from_fn(2 * m, 2 * m, n, |r, c| {
        if r >= m && r - m == c {
            RatFunc::one(n)
        } else if c >= m && c - m == r {
            RatFunc::one(n).neg()
        } else {
            RatFunc::zero(n)
        }
    })
}

pub fn heisenberg_flat(m: usize) -> Result<ContactModel, GeoError> {
    let (theta, frame) = heisenberg_theta_frame(m);
    let n = 2 * m + 1;
    let g = RfMatrix::identity(2 * m, n);
    ContactModel::new(format!("heisenberg{m}"), theta, frame, g, None, origin(m))
}

/// Flat pseudo-Hermitian model: standard J and g = dθ(·, J·) = 2·Id.
pub fn heisenberg_cr(m: usize) -> Result<ContactModel, GeoError> {
    let (theta, frame) = heisenberg_theta_frame(m);
    let n = 2 * m + 1;
    let g = RfMatrix::identity(2 * m, n).scale(&RatFunc::from_int(n, 2));
    ContactModel::new(format!("heisenberg{m}_cr"), theta, frame, g, Some(standard_j(m)), origin(m))
}

/// Curved model g = Id + z·S with S = diag(1, 0, …, 0): nonzero sub-torsion
/// S/2 and nonflat Schouten connection.
pub fn heisenberg_zs(m: usize) -> Result<ContactModel, GeoError> {
    let (theta, frame) = heisenberg_theta_frame(m);
    let n = 2 * m + 1;
    let mut g = RfMatrix::identity(2 * m, n);
    g.set(0, 0, RatFunc::one(n).add(&RatFunc::var(n, 2 * m)));
    ContactModel::new(format!("heisenberg{m}_zs"), theta, frame, g, None, generic_point(m))
}

/// Rational-function metric g_11 = 1/(1+z²): pole-free on R^n, exercises the
/// non-polynomial coefficient path.
pub fn heisenberg_rational(m: usize) -> Result<ContactModel, GeoError> {
    let (theta, frame) = heisenberg_theta_frame(m);
    let n = 2 * m + 1;
    let z2 = RatFunc::var(n, 2 * m).mul(&RatFunc::var(n, 2 * m));
    let mut g = RfMatrix::identity(2 * m, n);
    g.set(0, 0, RatFunc::one(n).div(&RatFunc::one(n).add(&z2)).unwrap());
    ContactModel::new(format!("heisenberg{m}_rat"), theta, frame, g, None, generic_point(m))
}

/// Constant anisotropic metric diag(1, 2, 1, …): flat but with ψ² non-scalar.
pub fn heisenberg_aniso(m: usize) -> Result<ContactModel, GeoError> {
    let (theta, frame) = heisenberg_theta_frame(m);
    let n = 2 * m + 1;
    let mut g = RfMatrix::identity(2 * m, n);
    g.set(1, 1, RatFunc::from_int(n, 2));
    g.set(m + 1, m + 1, RatFunc::from_int(n, 2));
    ContactModel::new(format!("heisenberg{m}_aniso"), theta, frame, g, None, origin(m))
}

/// The default golden corpus (m = 2 and m = 3 members).
pub fn golden_corpus() -> Result<Vec<ContactModel>, GeoError> {
    Ok(vec![
        heisenberg_flat(2)?,
        heisenberg_flat(3)?,
        heisenberg_cr(3)?,
        heisenberg_zs(2)?,
        heisenberg_zs(3)?,
        heisenberg_rational(2)?,
        heisenberg_aniso(2)?,
    ])
}
