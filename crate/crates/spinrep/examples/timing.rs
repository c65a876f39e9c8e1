use spinrep::*;
use std::time::Instant;

fn main() {
    for m in [3usize, 4, 5] {
        let t0 = Instant::now();
        let rep = SpinRep::build(m).unwrap();
        let t1 = Instant::now();
        println!("build({m}): {:?}", t1 - t0);
        for label in [EmbedLabel::Su, EmbedLabel::U, EmbedLabel::SoLagrangian, EmbedLabel::SoPlusU1] {
            let t2 = Instant::now();
            let h = embed_algebra(label, m).unwrap();
            let r = annihilator(&rep, &h).unwrap();
            println!("  {label:?}: dim {} in {:?}", r.dim, Instant::now() - t2);
        }
    }
}
