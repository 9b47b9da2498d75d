//! Parsing, arithmetic and division with remainder in QQ[x,y,z].

use extscope::poly::{Polynomial, RingSpec};

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    let s = r.base();
    let f = Polynomial::parse(s, "3*x^2*y - 1/2*z^3")?;
    let g = Polynomial::parse(s, "x - y")?;
    println!("f       = {f}");
    println!("f * g   = {}", f.mul(&g));
    println!("g^3     = {}", g.pow(3));
    println!("deg f   = {:?}", f.degree());

    let divisors = [
        Polynomial::parse(s, "x*y - z^2")?,
        Polynomial::parse(s, "y^2")?,
    ];
    let (q, rem) = f.divide_with_remainder(&divisors)?;
    println!("quotients {q:?}, remainder {rem}");
    Ok(())
}
