//! The Poisson bracket on `ℂ^{2n}` and the involutivity check.

use lagrangian_derham::polyring::Polynomial;
use lagrangian_derham::symplectic::{check_involutive, hamiltonian_vector_field, SymplecticRing};

fn main() -> lagrangian_derham::Result<()> {
    // q1, q2 of weights 2, 3; momenta p_i get weight W − w(q_i)
    let s = SymplecticRing::standard(&[2, 3], 7)?;
    println!("variables {:?}, weights {:?}", s.ring().names(), s.ring().weights());
    let parse = |t: &str| Polynomial::parse(s.ring(), t);

    let (p1, q1) = (parse("p1")?, parse("q1")?);
    println!("{{p1, q1}} = {}", s.poisson_bracket(&p1, &q1));

    let f = parse("p1*q2 - q1^2")?;
    let g = parse("p2^2 + q1*p1")?;
    let h = parse("q2*p2")?;
    println!("{{f, g}} = {}", s.poisson_bracket(&f, &g));

    let jacobi = &(&s.poisson_bracket(&f, &s.poisson_bracket(&g, &h))
        + &s.poisson_bracket(&g, &s.poisson_bracket(&h, &f)))
        + &s.poisson_bracket(&h, &s.poisson_bracket(&f, &g));
    println!("Jacobi sum = {jacobi}");

    let field: Vec<String> = hamiltonian_vector_field(&s, &f).iter().map(|c| c.to_string()).collect();
    println!("H_f coefficients on {:?}: {field:?}", s.ring().names());

    for gens in [vec![parse("p1")?, parse("p2")?], vec![parse("p1")?, parse("q1")?]] {
        let r = check_involutive(&s, &gens)?;
        let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        println!("⟨{}⟩ involutive: {}", names.join(", "), r.involutive);
    }
    Ok(())
}
