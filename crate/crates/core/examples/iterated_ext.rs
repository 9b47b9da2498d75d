//! Iterated Ext modules M_(i,j) = Ext^j(Ext^i(M, R), R) and the shift
//! between Ext of an ideal and Ext of its quotient.

use extscope::ext::{ext_shift_check, iterated_ext, PresentedModule};
use extscope::groebner::Ideal;
use extscope::invariants::HilbertSeries;
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    let i = Ideal::parse(&r, "(xy, xz)")?;
    let m = PresentedModule::cyclic(&i)?;
    for path in [[1, 1], [2, 2], [1, 2]] {
        let e = iterated_ext(&m, &path)?;
        println!(
            "M_{path:?}: Ann {}, H {}",
            e.annihilator()?,
            HilbertSeries::of_module(e.module())?
        );
    }
    let shift = ext_shift_check(&i, 1)?;
    println!(
        "Ext^1(I, R) vs Ext^2(R/I, R): all match {}",
        shift.all_match
    );
    Ok(())
}
