//! The Koszul complex on x, y, z and the depth and grade it detects.

use extscope::complexes::koszul_complex;
use extscope::ext::PresentedModule;
use extscope::groebner::Ideal;
use extscope::invariants::{depth, grade_by_koszul};
use extscope::poly::{Polynomial, RingSpec};

fn main() -> extscope::Result<()> {
    let r = RingSpec::parse("QQ[x,y,z]")?;
    let vars: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(r.base(), i)).collect();
    let k = koszul_complex(&r, &vars)?;
    println!("ranks {:?}, d^2 = 0: {}", k.ranks(), k.is_complex());

    let m = PresentedModule::cyclic(&Ideal::parse(&r, "(xy, xz)")?)?;
    println!("depth R/(xy,xz) = {}", depth(&m)?);
    let i = Ideal::parse(&r, "(x^2, y^3)")?;
    println!(
        "grade (x^2, y^3) = {}",
        grade_by_koszul(&i, &PresentedModule::ring_module(&r))?
    );
    Ok(())
}
