//! Builds the open swallowtails `Σ_{2,k}` and checks their normalizations.
//!
//! Run with `cargo run --release --example swallowtail_family -- 4` to go up to `k = 4`.

use std::time::Instant;

use lagrangian_derham::varieties::{check_parametrization, lag_ideal, normalization_map, swallowtail_data};

fn main() -> lagrangian_derham::Result<()> {
    let kmax: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let data = swallowtail_data(2, 1)?;
    println!("g_2 = {}", data.g);
    println!("F_2,1 = {}", data.f);
    for k in 1..=kmax {
        let t = Instant::now();
        let l = lag_ideal(2, k)?;
        let ok = check_parametrization(&l, &normalization_map(2, k)?)?;
        println!(
            "Σ_2,{k}: W = {}, {} generators of degrees {:?}, parametrization ok: {ok} ({:.2?})",
            l.pairing_weight(),
            l.generators().len(),
            l.generator_degrees(),
            t.elapsed()
        );
        for g in l.generators() {
            println!("    {g}");
        }
    }
    Ok(())
}
