// Mapping cones, standard triangles and unit stripping.

use qcimf::algebra::AlgebraCtx;
use qcimf::error::Result;
use qcimf::factorization::{
    mapping_cone, standard_triangle, strip_units, FactMorphism, Factorization,
};
use qcimf::random;
use qcimf::reduction::image_module;

pub fn run_example() -> Result<()> {
    let ctx = AlgebraCtx::rationals(3);
    let mut rng = random::rng(1);
    let a = random::unit_free_factorization(&ctx, &mut rng, 2)?;
    let b = Factorization::canonical(2, &ctx.scalar(2), &ctx)?;
    let theta = random::morphism(&a, &b, &mut rng);

    let tri = standard_triangle(&theta)?;
    println!("cone rank {}", tri.cone.rank());
    println!(
        "pi after i is zero: {}",
        tri.inclusion.then(&tri.projection)?.is_zero()
    );
    println!(
        "cone of the identity is contractible: {}",
        mapping_cone(&FactMorphism::identity(&a))?.is_contractible()
    );

    let padded = a.direct_sum(&Factorization::trivial(&ctx))?;
    let (moved, _) = padded.conjugate(
        &random::invertible_b_matrix(ctx.field(), &mut rng, 3),
        &random::invertible_b_matrix(ctx.field(), &mut rng, 3),
    )?;
    let stripped = strip_units(&moved)?;
    println!(
        "stripped {} unit summand(s); image modules agree: {}",
        stripped.removed,
        image_module(&stripped.reduced).is_isomorphic(&image_module(&a))
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("triangle example");
}
