//! Bounded rigidity check for open swallowtails: `H¹(Σ_{2,k})` degree by degree.
//!
//! `cargo run --release --example swallowtail_rigidity -- 3` checks `k = 1..=3`.

use std::time::Instant;

use lagrangian_derham::derham::{rigidity_verdict, CohomologyOptions};
use lagrangian_derham::varieties::lag_ideal;

fn main() -> lagrangian_derham::Result<()> {
    let kmax: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    for k in 1..=kmax {
        let t = Instant::now();
        let l = lag_ideal(2, k)?;
        let (verdict, report) = rigidity_verdict(&l, None, &CohomologyOptions::default())?;
        let slowest = report.degrees.iter().max_by_key(|d| d.elapsed_ms);
        println!(
            "Σ_2,{k}: degrees {}..={}: {} [{:.1?}, slowest degree e = {} took {} ms]",
            report.lower,
            report.bound,
            verdict.label,
            t.elapsed(),
            slowest.map_or(0, |d| d.e),
            slowest.map_or(0, |d| d.elapsed_ms)
        );
    }
    Ok(())
}
