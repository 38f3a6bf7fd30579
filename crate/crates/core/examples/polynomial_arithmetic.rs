//! Exact polynomial arithmetic on weighted variables.

use lagrangian_derham::polyring::{Polynomial, WeightedDegree, WeightedRing};

fn main() -> lagrangian_derham::Result<()> {
    // x has weight 1, q1 weight 2, q2 weight 3
    let ring = WeightedRing::new(vec!["x", "q1", "q2"], vec![1, 2, 3])?;
    let g = Polynomial::parse(&ring, "x^3 + q1*x + q2")?;
    let h = Polynomial::parse(&ring, "1/2*q1 - 3*x^2")?;

    println!("g       = {g}");
    println!("h       = {h}");
    println!("g + h   = {}", &g + &h);
    println!("g * h   = {}", &g * &h);
    println!("g^2     = {}", g.pow(2));
    println!("d/dx g  = {}", g.partial_derivative_named("x")?);

    let f = g.pow(2).integrate_from_zero_named("x")?;
    println!("F = ∫ g² dx = {f}");
    assert_eq!(f.partial_derivative_named("x")?, g.pow(2));

    match f.weighted_degree() {
        WeightedDegree::Homogeneous(d) => println!("F is quasihomogeneous of degree {d}"),
        other => println!("F has degree {other:?}"),
    }
    let json = serde_json::to_string(&f.to_json()).expect("serializable");
    println!("as JSON: {json}");
    assert_eq!(Polynomial::from_json(&serde_json::from_str(&json).expect("valid"))?, f);
    Ok(())
}
