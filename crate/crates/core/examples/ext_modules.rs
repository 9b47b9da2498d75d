//! Ext^i(M, R) and Ext^i(M, N) as presented modules.

use extscope::ext::{ext, ext_dual, PresentedModule};
use extscope::groebner::Ideal;
use extscope::invariants::HilbertSeries;
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    let m = PresentedModule::cyclic(&Ideal::parse(&r, "(xy, xz)")?)?;
    for i in 0..=3 {
        let e = ext_dual(&m, i)?;
        println!(
            "Ext^{i}(M, R): zero {}, Ann {}, H {}",
            e.is_zero()?,
            e.annihilator()?,
            HilbertSeries::of_module(e.module())?
        );
    }
    let n = PresentedModule::cyclic(&Ideal::parse(&r, "(x)")?)?;
    let e = ext(&m, &n, 1)?;
    println!(
        "Ext^1(M, R/xR) report: {}",
        serde_json::to_string(&e.report()?).unwrap()
    );
    Ok(())
}
