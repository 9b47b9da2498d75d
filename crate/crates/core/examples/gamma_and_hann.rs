//! gamma(M), the intersection of the radicals of Ann Ext^i(M, R) for i > 0,
//! and Hann(M), the product of all Ann Ext^i(M, R).

use extscope::ext::PresentedModule;
use extscope::groebner::Ideal;
use extscope::invariants::{gamma, hann};
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    for text in ["(xy, xz)", "(x^2, y^2, xy)", "(x)"] {
        let m = PresentedModule::cyclic(&Ideal::parse(&r, text)?)?;
        let ann = m.annihilator()?;
        let g = gamma(&m, None)?;
        println!(
            "R/{text}: gamma = {g}, Hann = {}, gamma ~ rad Ann: {}",
            hann(&m)?,
            g.radical_equals(&ann)?
        );
    }
    Ok(())
}
