use std::collections::BTreeMap;

use crate::algebra::{AlgebraCtx, BElt, B_DIM};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::SparseSystem;

use super::{BMatrix, Factorization};

/// A morphism `(P, Q)`: `ψ: u ↦ uP` on the first objects and `φ: u ↦ uQ`
/// on the second, with `C₁Q = PC₂` and `D₁P = ν(Q)D₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactMorphism {
    source: Factorization,
    target: Factorization,
    p: BMatrix,
    q: BMatrix,
}

/// Witness `(S, T)` with `P = C₁S + ν(T)D₂` and `Q = ν⁻¹(D₁)T + SC₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy {
    pub s: BMatrix,
    pub t: BMatrix,
}

impl Homotopy {
    /// The morphism `(C₁S + ν(T)D₂, ν⁻¹(D₁)T + SC₂)` this homotopy produces.
    pub fn boundary(&self, source: &Factorization, target: &Factorization) -> (BMatrix, BMatrix) {
        let ctx = source.ctx();
        let p = &(source.c() * &self.s) + &(&self.t.nu(ctx, 1) * target.d());
        let q = &(&source.d().nu(ctx, -1) * &self.t) + &(&self.s * target.c());
        (p, q)
    }
}

impl FactMorphism {
    pub fn new(
        source: &Factorization,
        target: &Factorization,
        p: BMatrix,
        q: BMatrix,
    ) -> Result<Self> {
        if source.ctx() != target.ctx() {
            return Err(Error::FieldMismatch(
                "morphism between different contexts".into(),
            ));
        }
        let shape = (source.rank(), target.rank());
        if (p.rows(), p.cols()) != shape || (q.rows(), q.cols()) != shape {
            return Err(Error::Dimension(format!(
                "P and Q must be {}x{}",
                shape.0, shape.1
            )));
        }
        let ctx = source.ctx();
        let first = &(source.c() * &q) - &(&p * target.c());
        if let Some((row, col)) = first_nonzero(&first) {
            return Err(Error::Morphism {
                condition: "C1 Q = P C2",
                row,
                col,
            });
        }
        let second = &(source.d() * &p) - &(&q.nu(ctx, 1) * target.d());
        if let Some((row, col)) = first_nonzero(&second) {
            return Err(Error::Morphism {
                condition: "D1 P = nu(Q) D2",
                row,
                col,
            });
        }
        Ok(FactMorphism {
            source: source.clone(),
            target: target.clone(),
            p,
            q,
        })
    }

    pub fn identity(f: &Factorization) -> Self {
        let id = BMatrix::identity(f.ctx().field(), f.rank());
        Self::new(f, f, id.clone(), id).expect("identity is a morphism")
    }

    pub fn zero(source: &Factorization, target: &Factorization) -> Self {
        let z = BMatrix::zeros(source.ctx().field(), source.rank(), target.rank());
        Self::new(source, target, z.clone(), z).expect("zero is a morphism")
    }

    pub fn source(&self) -> &Factorization {
        &self.source
    }

    pub fn target(&self) -> &Factorization {
        &self.target
    }

    pub fn p(&self) -> &BMatrix {
        &self.p
    }

    pub fn q(&self) -> &BMatrix {
        &self.q
    }

    pub fn ctx(&self) -> &AlgebraCtx {
        self.source.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FactMorphism) -> Result<FactMorphism> {
        if self.target != next.source {
            return Err(Error::Dimension("composing non-adjacent morphisms".into()));
        }
        Ok(FactMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            p: &self.p * &next.p,
            q: &self.q * &next.q,
        })
    }

    fn same_ends(&self, other: &FactMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Dimension("morphisms have different ends".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &FactMorphism) -> Result<FactMorphism> {
        self.same_ends(other)?;
        Ok(FactMorphism {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &FactMorphism) -> Result<FactMorphism> {
        self.same_ends(other)?;
        Ok(FactMorphism {
            p: &self.p - &other.p,
            q: &self.q - &other.q,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> FactMorphism {
        FactMorphism {
            p: self.p.scale(s),
            q: self.q.scale(s),
            ..self.clone()
        }
    }

    /// `Σ(P, Q) = (Q, ν⁻¹(P))` between the suspended objects.
    pub fn suspension_map(&self) -> FactMorphism {
        let ctx = self.ctx();
        FactMorphism::new(
            &self.source.suspension(),
            &self.target.suspension(),
            self.q.clone(),
            self.p.nu(ctx, -1),
        )
        .expect("suspension of a morphism is a morphism")
    }

    /// The inverse of an isomorphism `(P, Q)` with invertible entries matrices.
    pub fn inverse(&self) -> Result<FactMorphism> {
        FactMorphism::new(
            &self.target,
            &self.source,
            self.p.inverse()?,
            self.q.inverse()?,
        )
    }

    /// The nullhomotopic morphism determined by a homotopy.
    pub fn from_homotopy(
        source: &Factorization,
        target: &Factorization,
        h: &Homotopy,
    ) -> Result<FactMorphism> {
        let (p, q) = h.boundary(source, target);
        Self::new(source, target, p, q)
    }

    /// Basis of the `k`-space of all morphisms `source → target`.
    pub fn space(source: &Factorization, target: &Factorization) -> Vec<FactMorphism> {
        let ctx = source.ctx();
        let mut sys = BlockSystem::new(ctx, source.rank(), target.rank(), 2, 2);
        // block 0: C₁Q − PC₂ = 0
        sys.add_left(0, 1, source.c(), 0);
        sys.add_right(0, 0, &-target.c(), 0);
        // block 1: D₁P − ν(Q)D₂ = 0
        sys.add_left(1, 0, source.d(), 0);
        sys.add_right(1, 1, &-target.d(), 1);
        sys.to_system(None)
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut blocks = sys.unpack(&v);
                let q = blocks.pop().unwrap();
                let p = blocks.pop().unwrap();
                FactMorphism::new(source, target, p, q).expect("solution of the morphism equations")
            })
            .collect()
    }

    /// Decide nullhomotopy by solving for `(S, T)` exactly.
    pub fn nullhomotopy(&self) -> Option<Homotopy> {
        let (src, tgt) = (&self.source, &self.target);
        let ctx = src.ctx();
        let mut sys = BlockSystem::new(ctx, src.rank(), tgt.rank(), 2, 2);
        // block 0: C₁S + ν(T)D₂ = P
        sys.add_left(0, 0, src.c(), 0);
        sys.add_right(0, 1, tgt.d(), 1);
        // block 1: ν⁻¹(D₁)T + SC₂ = Q
        sys.add_left(1, 1, &src.d().nu(ctx, -1), 0);
        sys.add_right(1, 0, tgt.c(), 0);
        let solution = sys.to_system(Some(&[&self.p, &self.q])).solve()?;
        let mut blocks = sys.unpack(&solution);
        let t = blocks.pop().unwrap();
        let s = blocks.pop().unwrap();
        let h = Homotopy { s, t };
        debug_assert_eq!(h.boundary(src, tgt), (self.p.clone(), self.q.clone()));
        Some(h)
    }

    pub fn is_nullhomotopic(&self) -> bool {
        self.nullhomotopy().is_some()
    }

    pub fn is_homotopic_to(&self, other: &FactMorphism) -> Result<bool> {
        Ok(self.sub(other)?.is_nullhomotopic())
    }
}

impl Factorization {
    /// Zero object of the homotopy category: the identity is nullhomotopic.
    pub fn is_contractible(&self) -> bool {
        FactMorphism::identity(self).is_nullhomotopic()
    }
}

fn first_nonzero(m: &BMatrix) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m[(i, j)].is_zero())
}

/// Linear equations over `k` whose unknowns are the coordinates of several
/// `rows × cols` matrices over `B`, and whose equations are the coordinates
/// of several `rows × cols` matrices over `B`.
struct BlockSystem<'a> {
    ctx: &'a AlgebraCtx,
    rows: usize,
    cols: usize,
    unknown_blocks: usize,
    equations: Vec<BTreeMap<usize, Scalar>>,
}

impl<'a> BlockSystem<'a> {
    fn new(
        ctx: &'a AlgebraCtx,
        rows: usize,
        cols: usize,
        unknown_blocks: usize,
        equation_blocks: usize,
    ) -> Self {
        BlockSystem {
            ctx,
            rows,
            cols,
            unknown_blocks,
            equations: vec![BTreeMap::new(); equation_blocks * rows * cols * B_DIM],
        }
    }

    fn index(&self, block: usize, i: usize, j: usize, m: usize) -> usize {
        ((block * self.rows + i) * self.cols + j) * B_DIM + m
    }

    fn basis_twist(&self, twist: i64) -> [Scalar; B_DIM] {
        let f = self.ctx.field();
        let (fx, fy) = self.ctx.nu_factors(twist);
        [f.one(), fx, fy, f.one(), f.one()]
    }

    fn accumulate(&mut self, eq: usize, unknown: usize, prod: &BElt, factor: &Scalar) {
        for (n, c) in prod.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &mut self.equations[eq + n];
            let v = c * factor;
            let entry = row.entry(unknown).or_insert_with(|| v.field().zero());
            *entry = &*entry + &v;
        }
    }

    /// Equation block `eq` gains `L · ν^twist(U)` for unknown block `unk`.
    fn add_left(&mut self, eq: usize, unk: usize, left: &BMatrix, twist: i64) {
        let factors = self.basis_twist(twist);
        let f = self.ctx.field();
        for a in 0..self.rows {
            for b in 0..self.cols {
                for (m, factor) in factors.iter().enumerate() {
                    let e = BElt::basis(f, m);
                    let u = self.index(unk, a, b, m);
                    for i in 0..self.rows {
                        let l = &left[(i, a)];
                        if l.is_zero() {
                            continue;
                        }
                        let prod = l * &e;
                        let base = self.index(eq, i, b, 0);
                        self.accumulate(base, u, &prod, factor);
                    }
                }
            }
        }
    }

    /// Equation block `eq` gains `ν^twist(U) · R` for unknown block `unk`.
    fn add_right(&mut self, eq: usize, unk: usize, right: &BMatrix, twist: i64) {
        let factors = self.basis_twist(twist);
        let f = self.ctx.field();
        for a in 0..self.rows {
            for b in 0..self.cols {
                for (m, factor) in factors.iter().enumerate() {
                    let e = BElt::basis(f, m);
                    let u = self.index(unk, a, b, m);
                    for j in 0..self.cols {
                        let r = &right[(b, j)];
                        if r.is_zero() {
                            continue;
                        }
                        let prod = &e * r;
                        let base = self.index(eq, a, j, 0);
                        self.accumulate(base, u, &prod, factor);
                    }
                }
            }
        }
    }

    fn to_system(&self, rhs: Option<&[&BMatrix]>) -> SparseSystem {
        let f = self.ctx.field();
        let mut sys = SparseSystem::new(f, self.unknown_blocks * self.rows * self.cols * B_DIM);
        let per_block = self.rows * self.cols * B_DIM;
        for (k, coeffs) in self.equations.iter().enumerate() {
            let value = match rhs {
                None => f.zero(),
                Some(blocks) => {
                    let block = k / per_block;
                    let local = k % per_block;
                    let (ij, m) = (local / B_DIM, local % B_DIM);
                    blocks[block][(ij / self.cols, ij % self.cols)]
                        .coeff(m)
                        .clone()
                }
            };
            sys.push(coeffs.clone(), value);
        }
        sys
    }

    fn unpack(&self, v: &[Scalar]) -> Vec<BMatrix> {
        let f = self.ctx.field();
        (0..self.unknown_blocks)
            .map(|blk| {
                BMatrix::from_fn(f, self.rows, self.cols, |i, j| {
                    let base = self.index(blk, i, j, 0);
                    BElt::from_vec(f, v[base..base + B_DIM].to_vec()).expect("coordinates")
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn zero_morphism_is_nullhomotopic() {
        let ctx = AlgebraCtx::rationals(2);
        let f = Factorization::basic(&ctx);
        let h = FactMorphism::zero(&f, &f).nullhomotopy().unwrap();
        assert!(h.s.is_zero() && h.t.is_zero());
    }

    #[test]
    fn multiplication_by_w_is_not_nullhomotopic() {
        for ctx in [
            AlgebraCtx::rationals(2),
            AlgebraCtx::rationals(-1),
            AlgebraCtx::parse(FieldSpec::prime(7).unwrap(), "3").unwrap(),
        ] {
            let f = Factorization::basic(&ctx);
            let fl = ctx.field();
            let theta =
                FactMorphism::new(&f, &f, BMatrix::zeros(fl, 1, 1), BMatrix::single(ctx.w()))
                    .unwrap();
            assert!(!theta.is_nullhomotopic());
        }
    }

    #[test]
    fn contractibility() {
        let ctx = AlgebraCtx::rationals(2);
        assert!(Factorization::trivial(&ctx).is_contractible());
        assert!(!Factorization::basic(&ctx).is_contractible());
    }

    #[test]
    fn invalid_morphism_reports_condition() {
        let ctx = AlgebraCtx::rationals(2);
        let f = Factorization::basic(&ctx);
        let fl = ctx.field();
        let err = FactMorphism::new(&f, &f, BMatrix::identity(fl, 1), BMatrix::zeros(fl, 1, 1))
            .unwrap_err();
        assert!(matches!(
            err,
            Error::Morphism {
                condition: "C1 Q = P C2",
                ..
            }
        ));
    }

    #[test]
    fn morphism_space_contains_identity_and_w() {
        let ctx = AlgebraCtx::rationals(2);
        let f = Factorization::basic(&ctx);
        let space = FactMorphism::space(&f, &f);
        assert!(!space.is_empty());
        // every basis element is a morphism (checked by construction); the
        // span must contain the identity
        let id = FactMorphism::identity(&f);
        let mut sys_rows = Vec::new();
        for m in &space {
            let mut coords = Vec::new();
            for k in 0..B_DIM {
                coords.push(m.p()[(0, 0)].coeff(k).clone());
                coords.push(m.q()[(0, 0)].coeff(k).clone());
            }
            sys_rows.push(coords);
        }
        let mat = crate::linalg::Matrix::from_rows(ctx.field(), sys_rows)
            .unwrap()
            .transpose();
        let mut target = Vec::new();
        for k in 0..B_DIM {
            target.push(id.p()[(0, 0)].coeff(k).clone());
            target.push(id.q()[(0, 0)].coeff(k).clone());
        }
        assert!(mat.solve(&target).is_some());
    }
}
