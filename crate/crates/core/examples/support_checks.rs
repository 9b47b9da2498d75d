//! Checks relating Ext to supports and dimensions: the tensor support
//! identity, the dimension bound, the Ass oracle and generator counts.

use extscope::ext::PresentedModule;
use extscope::groebner::Ideal;
use extscope::invariants::{
    ass_oracle, dim_formula_check, ext_dimension_bound_check, generator_count_check,
    homological_support_check, top_ext_generator_check,
};
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    let m = PresentedModule::cyclic(&Ideal::parse(&r, "(xy, xz)")?)?;
    let n = PresentedModule::cyclic(&Ideal::parse(&r, "(y - z)")?)?;

    println!(
        "support identity: {}",
        homological_support_check(&m, &n, None)?.equal
    );
    println!(
        "dim Ext^i <= d - i: {}",
        ext_dimension_bound_check(&m, &n)?.holds
    );
    let ass = ass_oracle(&m)?;
    println!(
        "Ass oracle: contained {:?}, equal {:?}",
        ass.contained, ass.equal
    );
    let dims = dim_formula_check(&m)?;
    println!("{}", serde_json::to_string(&dims).unwrap());
    println!(
        "top Ext: {:?}",
        top_ext_generator_check(&m)?.map(|t| t.holds)
    );
    let counts = generator_count_check(&Ideal::parse(&r, "(x^2, xy, y^2)")?)?;
    println!("Hilbert-Burch counts hold: {}", counts.all_hold());
    Ok(())
}
