use crate::error::Result;

use super::{BMatrix, FactMorphism, Factorization};

/// The cone of `θ = (P, Q): (C₁, D₁) → (C₂, D₂)`:
/// `C = [[−ν⁻¹(D₁), Q], [0, C₂]]`, `D = [[−C₁, P], [0, D₂]]`.
pub fn mapping_cone(theta: &FactMorphism) -> Result<Factorization> {
    let (src, tgt) = (theta.source(), theta.target());
    let ctx = src.ctx();
    let f = ctx.field();
    let z = BMatrix::zeros(f, tgt.rank(), src.rank());
    let c = BMatrix::block(
        f,
        &[vec![&-&src.d().nu(ctx, -1), theta.q()], vec![&z, tgt.c()]],
    );
    let d = BMatrix::block(f, &[vec![&-src.c(), theta.p()], vec![&z, tgt.d()]]);
    Factorization::new(c, d, ctx)
}

/// `source --θ--> target --i--> cone --π--> Σ(source)`.
#[derive(Clone, Debug)]
pub struct StandardTriangle {
    pub cone: Factorization,
    pub inclusion: FactMorphism,
    pub projection: FactMorphism,
}

pub fn standard_triangle(theta: &FactMorphism) -> Result<StandardTriangle> {
    let cone = mapping_cone(theta)?;
    let (src, tgt) = (theta.source(), theta.target());
    let f = src.ctx().field();
    let (r1, r2) = (src.rank(), tgt.rank());

    let zero_id = BMatrix::block(
        f,
        &[vec![&BMatrix::zeros(f, r2, r1), &BMatrix::identity(f, r2)]],
    );
    let inclusion = FactMorphism::new(tgt, &cone, zero_id.clone(), zero_id)?;

    let id_zero = BMatrix::block(
        f,
        &[
            vec![&BMatrix::identity(f, r1)],
            vec![&BMatrix::zeros(f, r2, r1)],
        ],
    );
    let projection = FactMorphism::new(&cone, &src.suspension(), id_zero.clone(), id_zero)?;

    Ok(StandardTriangle {
        cone,
        inclusion,
        projection,
    })
}
