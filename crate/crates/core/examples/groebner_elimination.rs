//! Gröbner bases, normal forms and elimination: implicitizing the cusp
//! `t ↦ (t², t³)`.

use lagrangian_derham::groebner::{buchberger, elimination_ideal, MonomialOrder};
use lagrangian_derham::polyring::{int, Polynomial, WeightedRing};

fn main() -> lagrangian_derham::Result<()> {
    let ring = WeightedRing::new(vec!["t", "q", "p"], vec![1, 2, 3])?;
    let gens = vec![
        Polynomial::parse(&ring, "q - t^2")?,
        Polynomial::parse(&ring, "p - t^3")?,
    ];
    let (small, ideal) = elimination_ideal(&gens, &ring, &[0], None)?;
    println!("eliminating t from ⟨q − t², p − t³⟩ in {:?}:", small.names());
    for g in &ideal {
        println!("    {g}");
    }

    let gb = buchberger(&small, &ideal, &MonomialOrder::WeightedDegRevLex)?;
    let f = Polynomial::parse(&small, "p^4 + q^3*p")?;
    println!("NF({f}) = {}", gb.normal_form(&f));
    for d in 0..=8 {
        let std: Vec<String> = gb
            .standard_monomials(d)
            .iter()
            .map(|m| Polynomial::monomial(&small, *m, int(1)).to_string())
            .collect();
        println!("degree {d}: standard monomials {std:?}");
    }
    Ok(())
}
