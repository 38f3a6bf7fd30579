//! `H⁰` and `H¹` of the cusp `p² = q³` degree by degree, next to a direct
//! count of `O_L / {f, O_L}`.

use lagrangian_derham::derham::{CohomologyOptions, DeRhamComplex};
use lagrangian_derham::varieties::plane_curve_from_str;

fn main() -> lagrangian_derham::Result<()> {
    let l = plane_curve_from_str("p^2 - q^3", 2, 3)?;
    let complex = DeRhamComplex::new(&l)?;
    let options = CohomologyOptions {
        max_degree: Some(12),
        ..CohomologyOptions::default()
    };
    for p in 0..=1 {
        let report = complex.cohomology_table(p, &options)?;
        println!("H^{p} of {} (W = {}):", report.family, report.pairing_weight);
        println!("     e  ker  im  H");
        for d in &report.degrees {
            println!(
                "  {:>4} {:>4} {:>3} {:>2}",
                d.e,
                d.dim_ker.unwrap_or(0),
                d.dim_im.unwrap_or(0),
                d.dim_h.unwrap_or(0)
            );
        }
        println!("  total: {:?}", report.total());
    }
    Ok(())
}
