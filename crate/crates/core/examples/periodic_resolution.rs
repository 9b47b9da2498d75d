//! Periodic resolutions over a hypersurface and the associated primes of
//! Ext along them.

use extscope::groebner::Ideal;
use extscope::invariants::eass_experiment;
use extscope::poly::RingSpec;

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("F5[X,Y,Z]/(X+Y+Z)^5")?;
    let xi = Ideal::parse(&r, "((x+y+z)^2)")?;
    let report = eass_experiment(&xi, 8, None)?;
    println!("ranks {:?}", report.resolution_ranks);
    println!("{:?}", report.periodicity);
    println!("{}", report.verdict);

    let r = RingSpec::parse("QQ[x,y]/(x^2*y)")?;
    let probe = Ideal::parse(&r, "(x, y)")?;
    let report = eass_experiment(&Ideal::parse(&r, "(x)")?, 6, Some(&probe))?;
    println!(
        "R/xR over QQ[x,y]/(x^2 y): {:?}, min union {:?}",
        report.periodicity, report.min_union
    );
    Ok(())
}
