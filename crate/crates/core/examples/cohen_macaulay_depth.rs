//! Depth of `O_{Σ_{2,k}}` from minimal free resolutions, and the depth of the
//! conormal dual as a capped experiment.

use std::time::Duration;

use lagrangian_derham::homology::{cohen_macaulay_check, conormal_dual_depth};
use lagrangian_derham::varieties::lag_ideal;

fn main() -> lagrangian_derham::Result<()> {
    let kmax: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for k in 1..=kmax {
        let l = lag_ideal(2, k)?;
        let r = cohen_macaulay_check(&l, None)?;
        println!(
            "Σ_2,{k}: betti {:?}, pd {}, depth {}, dim {}, Cohen–Macaulay: {}",
            r.certificate.betti, r.certificate.projective_dimension, r.certificate.depth, r.dimension, r.cohen_macaulay
        );
        match conormal_dual_depth(&l, None, Some(Duration::from_secs(5))) {
            Ok(c) => println!("    Hom(I/I², O_L): betti {:?}, depth {}", c.betti, c.depth),
            Err(e) => println!("    Hom(I/I², O_L): {e}"),
        }
    }
    Ok(())
}
