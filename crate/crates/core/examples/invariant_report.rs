//! The full invariant bundle of a module as JSON.

use extscope::ext::PresentedModule;
use extscope::groebner::Ideal;
use extscope::invariants::invariant_report;
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    let m = PresentedModule::cyclic(&Ideal::parse(&r, "(x^2, xy, y^3)")?)?;
    let report = invariant_report(&m, "R/(x^2,xy,y^3)")?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    println!("inequalities hold: {}", report.inequalities_hold());
    Ok(())
}
