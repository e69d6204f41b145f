// The morphism `(0, w)` is not nullhomotopic, yet reduces to zero mod `w`.

use qcimf::algebra::AlgebraCtx;
use qcimf::error::Result;
use qcimf::factorization::{BMatrix, FactMorphism, Factorization};
use qcimf::reduction::reduce_morphism;

pub fn run_example() -> Result<()> {
    for q in [2, -1] {
        let ctx = AlgebraCtx::rationals(q);
        let f = Factorization::basic(&ctx);
        let theta = FactMorphism::new(
            &f,
            &f,
            BMatrix::zeros(ctx.field(), 1, 1),
            BMatrix::single(ctx.w()),
        )?;
        let (p, qbar) = reduce_morphism(&theta);
        println!(
            "q={q}: nullhomotopic={} reduced to zero={}",
            theta.is_nullhomotopic(),
            p.is_zero() && qbar.is_zero()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("nonfaithful example");
}
