use contactgeo::fixtures::*;
use contactgeo::Geometry;
use holonomy::*;

fn main() {
    let geo = Geometry::build(heisenberg_zs(2).unwrap()).unwrap();
    // generic point
    let q: Vec<num::rational::BigRational> = [1i64, 2, -1, 1, 3]
        .iter()
        .map(|&v| num::rational::BigRational::new(v.into(), 7.into()))
        .collect();
    for depth in 0..=4 {
        let hor = infinitesimal_holonomy(&geo, HolMode::Horizontal, depth, &q).unwrap();
        let wag = infinitesimal_holonomy(&geo, HolMode::Full(ConnectionTag::Wagner), depth, &q).unwrap();
        println!(
            "generic point depth {depth}: hor dim {} (stab {}), wagner dim {} (stab {})",
            hor.dim, hor.stabilized, wag.dim, wag.stabilized
        );
    }
    let p = origin(2);
    for depth in 0..=4 {
        let hor = infinitesimal_holonomy(&geo, HolMode::Horizontal, depth, &p).unwrap();
        let wag = infinitesimal_holonomy(&geo, HolMode::Full(ConnectionTag::Wagner), depth, &p).unwrap();
        let adp = infinitesimal_holonomy(&geo, HolMode::Full(ConnectionTag::Adapted), depth, &p).unwrap();
        println!(
            "depth {depth}: hor dim {} (stab {}), wagner dim {} (stab {}), adapted dim {} (stab {})",
            hor.dim, hor.stabilized, wag.dim, wag.stabilized, adp.dim, adp.stabilized
        );
    }
    // what do the Wagner xi-curvature seeds look like at p?
    for a in 0..4 {
        let k = geo.r_xi_wagner[a].eval(&p).unwrap();
        println!("R^W(xi, E_{a}) at origin:\n{}", k);
    }
    println!("N^W:\n{}", geo.n_wagner.eval(&p).unwrap());
    println!("C:\n{}", geo.c_skew.eval(&p).unwrap());
    let codazzi = contactgeo::codazzi_defect(&geo, &p).unwrap();
    println!("codazzi: {} r_xi_adapted_zero: {}", codazzi.codazzi, codazzi.r_xi_adapted_zero);

    // first two levels of horizontal derivatives of R^W(E_a,E_b) at origin
    use contactgeo::cov_endo;
    use numkit::{Backend, SubspaceBasis};
    let d = 4;
    let mut span = SubspaceBasis::empty(16, Backend::Rational);
    let mut fields = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            fields.push(geo.r_wagner.get(a, b));
        }
    }
    for f in &fields {
        span.insert(f.eval(&p).unwrap().flatten(), 0.0);
    }
    println!("seed span dim {}", span.dim());
    for level in 1..=3 {
        let mut next = Vec::new();
        for f in &fields {
            for c in 0..d {
                next.push(cov_endo(&geo.model, &geo.schouten, c, f));
            }
        }
        for f in &next {
            span.insert(f.eval(&p).unwrap().flatten(), 0.0);
        }
        println!("after level {level}: span dim {}", span.dim());
        fields = next;
    }
}
