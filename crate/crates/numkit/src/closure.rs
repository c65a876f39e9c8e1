use crate::scalar::{Backend, Scalar};
use crate::subspace::SubspaceBasis;
use crate::{Mat, NumError, Result};

#[derive(Debug, Clone)]
pub struct ClosureOutcome {
    pub basis: Vec<Mat>,
    pub span: SubspaceBasis,
    pub stabilized: bool,
    pub rounds: usize,
}

fn check_square_family(h: &[Mat]) -> Result<Option<(usize, Backend)>> {
    let Some(first) = h.first() else { return Ok(None) };
    let n = first.rows();
    let backend = first.backend();
    for m in h {
        if !m.is_square() || m.rows() != n {
            return Err(NumError::DimMismatch("generators must be square of equal size".into()));
        }
        if m.backend() != backend {
            return Err(NumError::MixedBackend(backend, m.backend()));
        }
    }
    Ok(Some((n, backend)))
}

/// Smallest matrix Lie algebra containing the generators: alternate span
/// reduction and pairwise commutators until the dimension is stable or
/// `max_rounds` is hit. `stabilized == false` means the dimension was still
/// growing when the round budget ran out (the NO_FIXPOINT outcome), and the
/// partial span is returned for inspection.
pub fn bracket_closure(generators: &[Mat], max_rounds: usize, tol: f64) -> Result<ClosureOutcome> {
    let Some((n, backend)) = check_square_family(generators)? else {
        return Ok(ClosureOutcome {
            basis: Vec::new(),
            span: SubspaceBasis::empty(0, Backend::Rational),
            stabilized: true,
            rounds: 0,
        });
    };
    let mut span = SubspaceBasis::empty(n * n, backend);
    for g in generators {
        span.insert(g.flatten(), tol);
    }
    let mut rounds = 0usize;
    let mut stabilized = false;
    while rounds < max_rounds {
        rounds += 1;
        let basis = span.matrices(n, n);
        let dim_before = span.dim();
        let mut grew = false;
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let c = basis[i].commutator(&basis[j])?;
                if span.insert(c.flatten(), tol) {
                    grew = true;
                }
            }
        }
        if !grew {
            stabilized = true;
            break;
        }
        if span.dim() == dim_before {
            stabilized = true;
            break;
        }
    }
    Ok(ClosureOutcome {
        basis: span.matrices(n, n),
        span,
        stabilized,
        rounds,
    })
}

/// Basis of {X : XH = HX for every generator H}, via the nullspace of the
/// stacked maps X -> XH - HX.
pub fn commutant(h: &[Mat]) -> Result<SubspaceBasis> {
    let Some((n, backend)) = check_square_family(h)? else {
        return Err(NumError::DimMismatch("commutant of empty family has no ambient size".into()));
    };
    let rows = h.len() * n * n;
    let mut big = Mat::zeros(rows, n * n, backend);
    // coefficient of X_{ab} in (XH - HX)_{ij}: delta_{ia} H_{bj} - H_{ia} delta_{jb}
    for (k, hm) in h.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let r = k * n * n + i * n + j;
                for b in 0..n {
                    // a = i term
                    let cur = big.at(r, i * n + b).add(hm.at(b, j));
                    big.set(r, i * n + b, cur);
                }
                for a in 0..n {
                    let cur = big.at(r, a * n + j).sub(hm.at(i, a));
                    big.set(r, a * n + j, cur);
                }
            }
        }
    }
    let tol = if backend == Backend::Float64 { Some(crate::DEFAULT_TOL) } else { None };
    let (_, ns) = big.rank_nullspace(tol)?;
    Ok(ns)
}

/// Commutant of the empty family on a given ambient size: everything.
pub fn full_matrix_space(n: usize, backend: Backend) -> SubspaceBasis {
    let mut sb = SubspaceBasis::empty(n * n, backend);
    for i in 0..n * n {
        let mut v = vec![Scalar::zero(backend); n * n];
        v[i] = Scalar::one(backend);
        sb.insert(v, 0.0);
    }
    sb
}

/// Search the commutant of `h` for g-skew endomorphisms K with K^2 = -I.
///
/// This is the heuristic from the proof of the parallel-complex-structure
/// lemma: compute the commutant, intersect with the g-skew subspace, and
/// normalize candidates whose square is a negative scalar. An empty result
/// means "none found by this strategy", never a proof of nonexistence.
/// Irrational normalizers force a float result.
pub fn invariant_complex_structures(h: &[Mat], g: &Mat) -> Result<Vec<Mat>> {
    let n = g.rows();
    let backend = g.backend();
    let commutant_span = if h.is_empty() {
        full_matrix_space(n, backend)
    } else {
        check_square_family(h)?;
        if h[0].rows() != n {
            return Err(NumError::DimMismatch("metric size vs generators".into()));
        }
        commutant(h)?
    };
    // g-skew condition: K^T g + g K = 0, as linear constraints on K entries.
    let mut rows = Mat::zeros(n * n, n * n, backend);
    // (K^T g + g K)_{ij} = sum_a K_{ai} g_{aj} + sum_b g_{ib} K_{bj}
    for i in 0..n {
        for j in 0..n {
            let r = i * n + j;
            for a in 0..n {
                let cur = rows.at(r, a * n + i).add(g.at(a, j));
                rows.set(r, a * n + i, cur);
            }
            for b in 0..n {
                let cur = rows.at(r, b * n + j).add(g.at(i, b));
                rows.set(r, b * n + j, cur);
            }
        }
    }
    let tol = if backend == Backend::Float64 { Some(crate::DEFAULT_TOL) } else { None };
    let (_, skew) = rows.rank_nullspace(tol)?;
    let candidates = commutant_span.intersect(&skew, crate::DEFAULT_TOL);

    let mut found: Vec<Mat> = Vec::new();
    for v in candidates.vectors() {
        let k = Mat::from_flat(n, n, v);
        let k2 = k.mul(&k)?;
        // require K^2 = lambda I with lambda < 0
        let lambda = k2.at(0, 0).clone();
        let scalar_multiple = {
            let mut ok = true;
            'outer: for i in 0..n {
                for j in 0..n {
                    let want = if i == j { lambda.clone() } else { Scalar::zero(backend) };
                    if !k2.at(i, j).sub(&want).is_zero_tol(crate::DEFAULT_TOL) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            ok
        };
        if !scalar_multiple {
            continue;
        }
        let normalized = match &lambda {
            Scalar::Rat(r) => {
                if !(r < &num::rational::BigRational::from_integer(0.into())) {
                    continue;
                }
                match Scalar::rational_sqrt(&-r.clone()) {
                    Some(mu) => k.scale(&Scalar::Rat(num::rational::BigRational::from_integer(1.into()) / mu)),
                    None => {
                        use num::traits::ToPrimitive;
                        let mu = (-r.clone()).to_f64().unwrap().sqrt();
                        k.map_to_f64().scale(&Scalar::F64(1.0 / mu))
                    }
                }
            }
            Scalar::F64(x) => {
                if *x >= -crate::DEFAULT_TOL {
                    continue;
                }
                k.scale(&Scalar::F64(1.0 / (-x).sqrt()))
            }
            Scalar::Gauss(_, _) => continue,
        };
        for signed in [normalized.clone(), normalized.neg()] {
            if !found.iter().any(|f| f == &signed) {
                found.push(signed);
            }
        }
    }
    Ok(found)
}
