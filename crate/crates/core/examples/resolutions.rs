// Betti numbers, complexity and periodicity of small modules.

use qcimf::algebra::AlgebraCtx;
use qcimf::amodule::AModule;
use qcimf::error::Result;
use qcimf::field::{ExtScalar, FieldSpec};

pub fn run_example() -> Result<()> {
    let ctx = AlgebraCtx::rationals(2);
    let k = AModule::simple(&ctx).betti_sequence(8);
    println!("k: {:?}, complexity {}", k.betti, k.complexity);
    let c = AModule::family(2, &ExtScalar::Finite(ctx.scalar(3)), &ctx)?;
    let b = c.betti_sequence(8);
    println!("C_2(3): {:?}, complexity {}", b.betti, b.complexity);
    let a = AModule::free(1, &ctx).betti_sequence(3);
    println!("A: {:?}, complexity {}", a.betti, a.complexity);

    let omega2 = c.syzygy().syzygy().classify().expect("family");
    println!("second syzygy of C_2(3): {omega2}");

    let f5 = AlgebraCtx::parse(FieldSpec::prime(5)?, "2")?;
    let m = AModule::family(1, &ExtScalar::Finite(f5.scalar(1)), &f5)?;
    println!("period of C_1(1) over F5 with q=2: {:?}", m.periodicity(12));
    let q = AModule::family(1, &ExtScalar::Finite(ctx.scalar(1)), &ctx)?;
    println!(
        "period of C_1(1) over Q with q=2 (up to 10): {:?}",
        q.periodicity(10)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("resolution example");
}
