// Build and validate factorizations, then suspend and twist them.

use qcimf::algebra::{AlgebraCtx, BElt};
use qcimf::error::Result;
use qcimf::factorization::{BMatrix, Factorization};
use qcimf::linalg::Matrix;

pub fn run_example() -> Result<()> {
    let ctx = AlgebraCtx::rationals(2);
    let f = ctx.field();

    let basic = Factorization::basic(&ctx);
    println!("C = {}D = {}", basic.c(), basic.d());

    // (x, y) fails: ν(x)y = −q⁻¹xy is not w.
    let bad = Factorization::new(
        BMatrix::single(BElt::x(f)),
        BMatrix::single(BElt::y(f)),
        &ctx,
    );
    println!("(x, y): {}", bad.unwrap_err());

    let swap = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
    let pair = Factorization::from_invertible_pair(&Matrix::identity(f, 2), &swap, &ctx)?;
    println!(
        "rank {} object, component ranks {:?}",
        pair.rank(),
        pair.component_ranks()?
    );

    let s = basic.suspension();
    println!("suspension: C = {}", s.c());
    assert_eq!(s.suspension(), basic.twist(-1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("factorization example");
}
