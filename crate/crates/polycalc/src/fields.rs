use crate::ratfunc::RatFunc;
use crate::CalcError;
use num::rational::BigRational;
use numkit::{Backend, Mat, Scalar};

/// Vector field on R^n with rational-function coordinate components.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    pub comps: Vec<RatFunc>,
}

impl VectorField {
    pub fn new(comps: Vec<RatFunc>) -> VectorField {
        VectorField { comps }
    }

    pub fn zero(n: usize) -> VectorField {
        VectorField { comps: (0..n).map(|_| RatFunc::zero(n)).collect() }
    }

    /// The coordinate field ∂/∂x_{i+1}.
    pub fn coordinate(n: usize, i: usize) -> VectorField {
        let mut v = VectorField::zero(n);
        v.comps[i] = RatFunc::one(n);
        v
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    pub fn add(&self, rhs: &VectorField) -> VectorField {
        VectorField {
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, f: &RatFunc) -> VectorField {
        VectorField { comps: self.comps.iter().map(|c| c.mul(f)).collect() }
    }

    pub fn neg(&self) -> VectorField {
        VectorField { comps: self.comps.iter().map(|c| c.neg()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Apply as a derivation to a scalar function.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        f.directional(&self.comps)
    }

    pub fn eval(&self, p: &[BigRational]) -> Result<Vec<BigRational>, CalcError> {
        self.comps.iter().map(|c| c.eval(p)).collect()
    }
}

/// Lie bracket [V, W] = (V·∂)W − (W·∂)V, exact.
pub fn vf_bracket(v: &VectorField, w: &VectorField) -> VectorField {
    assert_eq!(v.n(), w.n(), "bracket of fields on different spaces");
    let comps = (0..v.n())
        .map(|a| w.comps[a].directional(&v.comps).sub(&v.comps[a].directional(&w.comps)))
        .collect();
    VectorField { comps }
}

/// One-form with coordinate components ω_a.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm {
    pub comps: Vec<RatFunc>,
}

impl OneForm {
    pub fn new(comps: Vec<RatFunc>) -> OneForm {
        OneForm { comps }
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    pub fn apply(&self, v: &VectorField) -> RatFunc {
        let mut acc = RatFunc::zero(self.n());
        for (a, c) in self.comps.iter().enumerate() {
            acc = acc.add(&c.mul(&v.comps[a]));
        }
        acc
    }
}

/// Two-form stored by its evaluations T_{ab} = T(∂_a, ∂_b); only the strict
/// upper triangle is kept.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoForm {
    n: usize,
    upper: Vec<RatFunc>, // (a,b), a<b, row-major
}

impl TwoForm {
    pub fn zero(n: usize) -> TwoForm {
        TwoForm { n, upper: vec![RatFunc::zero(n); n * (n - 1) / 2] }
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b);
        a * (2 * self.n - a - 1) / 2 + (b - a - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> RatFunc {
        if a == b {
            RatFunc::zero(self.n)
        } else if a < b {
            self.upper[self.idx(a, b)].clone()
        } else {
            self.upper[self.idx(b, a)].neg()
        }
    }

    pub fn set(&mut self, a: usize, b: usize, v: RatFunc) {
        assert!(a != b);
        if a < b {
            let i = self.idx(a, b);
            self.upper[i] = v;
        } else {
            let i = self.idx(b, a);
            self.upper[i] = v.neg();
        }
    }

    /// Evaluate on two vector fields.
    pub fn apply(&self, v: &VectorField, w: &VectorField) -> RatFunc {
        let mut acc = RatFunc::zero(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                if a == b {
                    continue;
                }
                acc = acc.add(&self.get(a, b).mul(&v.comps[a]).mul(&w.comps[b]));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(|c| c.is_zero())
    }
}

/// Symmetric 2-tensor in coordinates (upper triangle incl. diagonal).
#[derive(Debug, Clone, PartialEq)]
pub struct SymTensor {
    n: usize,
    upper: Vec<RatFunc>, // (a,b), a<=b
}

impl SymTensor {
    pub fn zero(n: usize) -> SymTensor {
        SymTensor { n, upper: vec![RatFunc::zero(n); n * (n + 1) / 2] }
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        debug_assert!(a <= b);
        a * (2 * self.n - a + 1) / 2 + (b - a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> RatFunc {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.upper[self.idx(a, b)].clone()
    }

    pub fn set(&mut self, a: usize, b: usize, v: RatFunc) {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let i = self.idx(a, b);
        self.upper[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(|c| c.is_zero())
    }
}

/// The kinds lie_derivative acts on.
#[derive(Debug, Clone, PartialEq)]
pub enum CovariantTensor {
    One(OneForm),
    Two(TwoForm),
    Sym(SymTensor),
}

/// Cartan/Leibniz Lie derivative with exact coefficients.
pub fn lie_derivative(v: &VectorField, t: &CovariantTensor) -> CovariantTensor {
    match t {
        CovariantTensor::One(w) => {
            let n = w.n();
            let mut out = Vec::with_capacity(n);
            for a in 0..n {
                // V^b ∂_b w_a + w_b ∂_a V^b
                let mut acc = w.comps[a].directional(&v.comps);
                for b in 0..n {
                    acc = acc.add(&w.comps[b].mul(&v.comps[b].partial(a)));
                }
                out.push(acc);
            }
            CovariantTensor::One(OneForm::new(out))
        }
        CovariantTensor::Two(w) => {
            let n = w.n();
            let mut out = TwoForm::zero(n);
            for a in 0..n {
                for b in (a + 1)..n {
                    let mut acc = w.get(a, b).directional(&v.comps);
                    for c in 0..n {
                        acc = acc
                            .add(&w.get(c, b).mul(&v.comps[c].partial(a)))
                            .add(&w.get(a, c).mul(&v.comps[c].partial(b)));
                    }
                    out.set(a, b, acc);
                }
            }
            CovariantTensor::Two(out)
        }
        CovariantTensor::Sym(w) => {
            let n = w.n();
            let mut out = SymTensor::zero(n);
            for a in 0..n {
                for b in a..n {
                    let mut acc = w.get(a, b).directional(&v.comps);
                    for c in 0..n {
                        acc = acc
                            .add(&w.get(c, b).mul(&v.comps[c].partial(a)))
                            .add(&w.get(a, c).mul(&v.comps[c].partial(b)));
                    }
                    out.set(a, b, acc);
                }
            }
            CovariantTensor::Sym(out)
        }
    }
}

/// Exterior derivative of a one-form: (dω)_{ab} = ∂_a ω_b − ∂_b ω_a.
pub fn exterior_d(omega: &OneForm) -> TwoForm {
    let n = omega.n();
    let mut out = TwoForm::zero(n);
    for a in 0..n {
        for b in (a + 1)..n {
            out.set(a, b, omega.comps[b].partial(a).sub(&omega.comps[a].partial(b)));
        }
    }
    out
}

/// Evaluate a grid of rational functions at an exact point.
pub fn eval_grid(grid: &[Vec<RatFunc>], p: &[BigRational]) -> Result<Mat, CalcError> {
    let rows = grid.len();
    let cols = grid[0].len();
    let mut out = Mat::zeros(rows, cols, Backend::Rational);
    for (i, row) in grid.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            out.set(i, j, Scalar::Rat(f.eval(p)?));
        }
    }
    Ok(out)
}
