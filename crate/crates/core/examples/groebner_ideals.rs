//! Gröbner bases and ideal operations: membership, intersection, colon,
//! radical membership and monomial primes.

use extscope::groebner::Ideal;
use extscope::poly::{Polynomial, RingSpec};

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    let i = Ideal::parse(&r, "(x^2 - y*z, x*y - z^2)")?;
    println!("basis of I: {:?}", i.basis()?);

    let j = Ideal::parse(&r, "(xy, xz)")?;
    let k = Ideal::parse(&r, "(y^2, z)")?;
    println!("J ∩ K  = {}", j.intersect(&k)?);
    println!(
        "J : x  = {}",
        j.quotient_element(&Polynomial::parse(r.base(), "x")?)?
    );
    println!(
        "x*y*z ∈ J: {}",
        j.contains(&Polynomial::parse(r.base(), "x*y*z")?)?
    );
    println!(
        "x ∈ rad(x^3, y): {}",
        Ideal::parse(&r, "(x^3, y)")?.radical_contains(&Polynomial::parse(r.base(), "x")?)?
    );

    let min: Vec<String> = j.minimal_primes()?.iter().map(|p| p.to_string()).collect();
    let ass: Vec<String> = Ideal::parse(&r, "(x^2, xy)")?
        .associated_primes()?
        .iter()
        .map(|p| p.to_string())
        .collect();
    println!("Min(J) = {min:?}, Ass(x^2, xy) = {ass:?}");
    Ok(())
}
