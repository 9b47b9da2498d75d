//! Minimal free resolutions over a polynomial ring and over a quotient
//! where the resolution does not end.

use extscope::complexes::free_resolution;
use extscope::ext::PresentedModule;
use extscope::groebner::Ideal;
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let s = RingSpec::parse("QQ[x,y,z]")?;
    let m = PresentedModule::cyclic(&Ideal::parse(&s, "(xy, xz, yz)")?)?;
    let res = free_resolution(&m, 4, true)?;
    println!("R/(xy,xz,yz): betti {:?}, pd {:?}", res.betti(), res.pd());
    println!("d_2 rows: {:?}", res.differential(2).rows());

    let r = RingSpec::parse("QQ[X,Y,Z]/(X^2, XY, XZ)")?;
    let m = PresentedModule::cyclic(&Ideal::parse(&r, "(x)")?)?;
    let res = free_resolution(&m, 4, true)?;
    println!(
        "R/xR over a non-CM ring: betti {:?}, truncated at {:?}",
        res.betti(),
        res.truncated_at()
    );
    println!("exact: {}", res.verify_exactness()?);
    Ok(())
}
