use contactgeo::fixtures::*;
use contactgeo::Geometry;
use holonomy::*;

fn main() {
    for model in golden_corpus().unwrap() {
        let name = model.name.clone();
        let p = model.base_point.clone();
        let geo = Geometry::build(model).unwrap();
        for mode in [HolMode::Horizontal, HolMode::Full(ConnectionTag::Adapted)] {
            match stabilized_holonomy(&geo, mode, &p) {
                Ok(rep) => println!("{name} {:?}: dim {} label {:?} stab {}", mode, rep.dim, rep.label, rep.stabilized),
                Err(e) => {
                    println!("{name} {:?}: ERROR {e}", mode);
                    // inspect the raw algebra without classification
                    let g0 = geo.model.g.eval(&p).unwrap();
                    let rep = infinitesimal_holonomy(&geo, HolMode::Horizontal, 2, &p);
                    match rep {
                        Ok(r) => {
                            println!("  hor dim {}", r.dim);
                            for b in &r.basis {
                                let gb = g0.mul(b).unwrap();
                                let skew = gb.add(&gb.transpose()).unwrap().is_zero_exact();
                                println!("  basis elt skew={skew}:\n{b}");
                            }
                        }
                        Err(e2) => println!("  inner error {e2}"),
                    }
                }
            }
        }
    }
}
