// Rank-one objects fixed by `x ↦ αx, y ↦ α⁻¹y` exist only for `α = −q⁻¹`.

use qcimf::algebra::AlgebraCtx;
use qcimf::error::Result;
use qcimf::factorization::rank_one_scan;
use qcimf::field::FieldSpec;

pub fn run_example() -> Result<()> {
    for (p, q) in [(7, "2"), (11, "3")] {
        let ctx = AlgebraCtx::parse(FieldSpec::prime(p)?, q)?;
        let hits: Vec<String> = ctx
            .field()
            .elements()
            .unwrap_or_default()
            .into_iter()
            .filter(|a| !a.is_zero() && rank_one_scan(a, &ctx).is_some())
            .map(|a| a.to_string())
            .collect();
        println!(
            "F{p}, q={q}: solvable for alpha in {hits:?}, -1/q = {}",
            -ctx.q_inv()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("alpha scan example");
}
