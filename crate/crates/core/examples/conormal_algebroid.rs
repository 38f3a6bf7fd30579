//! The conormal module `I/I²` of `Σ_{2,1}` and its bracket structure constants.

use lagrangian_derham::algebroid::{bracket_structure, conormal_presentation};
use lagrangian_derham::varieties::lag_ideal;

fn main() -> lagrangian_derham::Result<()> {
    let l = lag_ideal(2, 1)?;
    let c = conormal_presentation(&l)?;
    println!("I/I² has {} generators of degrees {:?}", c.rank(), c.degrees());
    for (a, f) in c.generators().iter().enumerate() {
        println!("    f{a} = {f}");
    }
    println!("{} relations mod I (free: {}):", c.relations().len(), c.is_free());
    for (row, deg) in c.relations().iter().zip(c.relation_degrees()) {
        println!("    degree {deg}: {:?}", row.to_strings());
    }
    let b = bracket_structure(&l)?;
    println!("structure constants {{f_a, f_b}} = Σ c_ab^e f_e mod I:");
    for pair in b.to_json().coefficients {
        println!("    ({}, {}): {:?}", pair.a, pair.b, pair.coefficients);
    }
    Ok(())
}
