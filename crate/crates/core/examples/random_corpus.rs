//! Seeded random monomial ideals and height-two perfect ideals.

use extscope::ext::PresentedModule;
use extscope::invariants::{corpus, grade};
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    for i in corpus::monomial_ideals(&r, 7, 8)? {
        println!("{i:<32} grade {}", grade(&PresentedModule::cyclic(&i)?)?);
    }
    for i in corpus::perfect_height_two(&r, 7, 4)? {
        println!("perfect: {i}");
    }
    Ok(())
}
