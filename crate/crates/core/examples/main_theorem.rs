// Canonical objects reduce to acyclic complexes whose image modules are
// exactly `C_n(λ)`; `C_n(0)` and `C_n(∞)` fail the rank invariant.

use qcimf::algebra::AlgebraCtx;
use qcimf::amodule::AModule;
use qcimf::error::Result;
use qcimf::factorization::Factorization;
use qcimf::field::{ExtScalar, FieldSpec};
use qcimf::reduction::{check_acyclic, image_module};

pub fn run_example() -> Result<()> {
    for ctx in [
        AlgebraCtx::rationals(2),
        AlgebraCtx::parse(FieldSpec::prime(7)?, "3")?,
    ] {
        let f = ctx.field();
        for n in 1..=3 {
            for lambda in [f.one(), f.from_i64(-1), f.ratio(5, 3)?] {
                let obj = Factorization::canonical(n, &lambda, &ctx)?;
                let img = image_module(&obj);
                let class = img.classify().expect("image lies in the family");
                println!(
                    "{} q={} n={n} lambda={lambda}: acyclic={} image={class}",
                    f,
                    ctx.q(),
                    check_acyclic(&obj).is_acyclic()
                );
                assert!(class.is_single(n, &ExtScalar::Finite(lambda)));
            }
            let zero = AModule::family(n, &ExtScalar::Finite(f.zero()), &ctx)?;
            let inf = AModule::family(n, &ExtScalar::Infinity, &ctx)?;
            println!(
                "  rank of x on C_{n}(0) = {}, rank of y on C_{n}(inf) = {}",
                zero.x().rank(),
                inf.y().rank()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("main theorem example");
}
