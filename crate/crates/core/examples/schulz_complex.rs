// The complex `A --·(x + (−q)^{n+1}y)--> A` and its cokernels.

use qcimf::algebra::AlgebraCtx;
use qcimf::error::Result;
use qcimf::reduction::schulz_complex_check;

pub fn run_example() -> Result<()> {
    for q in [2, 1] {
        let ctx = AlgebraCtx::rationals(q);
        let rep = schulz_complex_check(&ctx, 9)?;
        println!("q={q}: exact={}", rep.all_exact());
        for p in &rep.positions {
            match &p.class {
                Ok(c) => println!("  n={:>2}: cokernel {c}", p.n),
                Err(e) => println!("  n={:>2}: {e}", p.n),
            }
        }
        println!(
            "  pairwise distinct: {}, period in window: {:?}",
            rep.cokernels_pairwise_distinct(),
            rep.cokernel_period()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("schulz example");
}
