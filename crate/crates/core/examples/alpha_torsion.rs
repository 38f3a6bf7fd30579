//! Tangent module, the cokernel of `α: I/I² → Θ_L` and the torsion of `Ω¹`
//! for quasihomogeneous plane curves.

use lagrangian_derham::homology::{alpha_torsion_comparison, default_bound, tangent_module};
use lagrangian_derham::varieties::plane_curve_from_str;

fn main() -> lagrangian_derham::Result<()> {
    for (poly, wq, wp) in [("p^2 - q^3", 2, 3), ("p^2 - q^5", 2, 5), ("p^3 - q^4", 3, 4), ("p - q^2", 1, 2)] {
        let l = plane_curve_from_str(poly, wq, wp)?;
        let theta = tangent_module(&l)?;
        println!("{poly}:");
        for (field, t) in theta.generators.iter().zip(&theta.degrees) {
            let c: Vec<String> = field.iter().map(|x| x.to_string()).collect();
            println!("    Θ generator of degree {t}: {c:?}");
        }
        let r = alpha_torsion_comparison(&l, default_bound(&l))?;
        for row in r.rows.iter().filter(|r| r.coker_alpha + r.torsion > 0) {
            println!("    m = {:>2}: dim Coker(α) = {}, dim Tors(Ω¹) = {}", row.m, row.coker_alpha, row.torsion);
        }
        let total: usize = r.rows.iter().map(|r| r.torsion).sum();
        println!("    total torsion {total}, tables agree: {}", r.matches);
    }
    Ok(())
}
