use numkit::{bracket_closure, commutant, invariant_complex_structures, Backend, Mat, Scalar};

fn e_minus(n: usize, i: usize, j: usize) -> Mat {
    // E_ij - E_ji
    Mat::construct(n, n, Backend::Rational, |r, c| {
        if (r, c) == (i, j) {
            Scalar::from_int(1)
        } else if (r, c) == (j, i) {
            Scalar::from_int(-1)
        } else {
            Scalar::from_int(0)
        }
    })
}

/// u(m) inside so(2m) in the block form [[A,B],[-B,A]], A skew, B symmetric.
fn u_m_basis(m: usize) -> Vec<Mat> {
    let n = 2 * m;
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            // diag(A, A) with A = E_ij - E_ji
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
            // [[0,B],[-B,0]] with B = E_ij + E_ji (or E_ii)
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
fn closure_of_two_rotations_is_so3() {
    // Closure adds E_23 - E_32; oracle: [E12-E21, E13-E31] = -(E23-E32),
    // checked by hand.
    let gens = vec![e_minus(3, 0, 1), e_minus(3, 0, 2)];
    let out = bracket_closure(&gens, 8, 0.0).unwrap();
    assert!(out.stabilized);
    assert_eq!(out.span.dim(), 3);
    assert!(out.span.contains_mat(&e_minus(3, 1, 2), 0.0));
}

#[test]
fn closure_empty_generators() {
    let out = bracket_closure(&[], 4, 0.0).unwrap();
    assert!(out.stabilized);
    assert_eq!(out.span.dim(), 0);
}

#[test]
fn u3_block_basis_is_already_closed() {
    let gens = u_m_basis(3);
    assert_eq!(gens.len(), 9);
    let out = bracket_closure(&gens, 8, 0.0).unwrap();
    assert!(out.stabilized);
    assert_eq!(out.span.dim(), 9);
    // closure property: pairwise commutators stay in the span
    for i in 0..out.basis.len() {
        for j in (i + 1)..out.basis.len() {
            let c = out.basis[i].commutator(&out.basis[j]).unwrap();
            assert!(out.span.contains_mat(&c, 0.0));
        }
    }
}

#[test]
fn commutant_of_zero_matrix_is_everything() {
    let z = Mat::zeros(3, 3, Backend::Rational);
    let c = commutant(&[z]).unwrap();
    assert_eq!(c.dim(), 9);
}

#[test]
fn commutant_of_so3_is_scalars() {
    let gens = vec![e_minus(3, 0, 1), e_minus(3, 0, 2), e_minus(3, 1, 2)];
    let c = commutant(&gens).unwrap();
    assert_eq!(c.dim(), 1);
    assert!(c.contains_mat(&Mat::identity(3, Backend::Rational), 0.0));
}

#[test]
fn commutant_of_diagonal_so3_embedding_has_dim_4() {
    // span of I, J, diag(1,-1)-block S, and JS
    let gens = so_m_diag_basis(3);
    let c = commutant(&gens).unwrap();
    assert_eq!(c.dim(), 4);
    let m = 3;
    let s = Mat::construct(6, 6, Backend::Rational, |r, c| {
        if r == c {
            Scalar::from_int(if r < m { 1 } else { -1 })
        } else {
            Scalar::from_int(0)
        }
    });
    assert!(c.contains_mat(&Mat::identity(6, Backend::Rational), 0.0));
    assert!(c.contains_mat(&std_j(3), 0.0));
    assert!(c.contains_mat(&s, 0.0));
    assert!(c.contains_mat(&std_j(3).mul(&s).unwrap(), 0.0));
}

#[test]
fn commutant_elements_commute_exactly() {
    let gens = so_m_diag_basis(3);
    let c = commutant(&gens).unwrap();
    for v in c.vectors() {
        let x = Mat::from_flat(6, 6, v);
        for h in &gens {
            assert!(x.commutator(h).unwrap().is_zero_exact());
        }
    }
}

#[test]
fn invariant_j_on_the_plane() {
    let g = Mat::identity(2, Backend::Rational);
    let js = invariant_complex_structures(&[], &g).unwrap();
    let rot = Mat::from_i64(&[&[0, -1], &[1, 0]]);
    assert!(js.iter().any(|k| k == &rot));
}

#[test]
fn invariant_j_of_su3_and_u3_blocks_is_plus_minus_j() {
    let g = Mat::identity(6, Backend::Rational);
    // su(3) = u(3) block basis minus the J direction: drop trace part by
    // replacing diagonal B-generators with differences.
    let u = u_m_basis(3);
    let js_u = invariant_complex_structures(&u, &g).unwrap();
    let j = std_j(3);
    assert_eq!(js_u.len(), 2);
    assert!(js_u.contains(&j) && js_u.contains(&j.neg()));
}

#[test]
fn bracket_closure_reports_missing_fixpoint() {
    // sl(2)-style generators need one round to close; with max_rounds = 0
    // the span is returned unstabilized.
    let gens = vec![e_minus(3, 0, 1), e_minus(3, 0, 2)];
    let out = bracket_closure(&gens, 0, 0.0).unwrap();
    assert!(!out.stabilized);
    assert_eq!(out.span.dim(), 2);
}
