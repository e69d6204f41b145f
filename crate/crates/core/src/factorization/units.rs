use crate::algebra::BElt;
use crate::error::Result;

use super::{BMatrix, FactMorphism, Factorization};

/// Result of splitting off contractible summands `(1, w)` and `(w, 1)`.
///
/// `project ∘ embed` is the identity of `reduced` and `embed ∘ project` is
/// homotopic to the identity of the input.
#[derive(Clone, Debug)]
pub struct StrippedFactorization {
    pub reduced: Factorization,
    pub embed: FactMorphism,
    pub project: FactMorphism,
    pub removed: usize,
}

/// Eliminate unit entries until neither matrix has one.
pub fn strip_units(f: &Factorization) -> Result<StrippedFactorization> {
    let ctx = f.ctx();
    let field = ctx.field();
    let r = f.rank();
    let mut current = f.clone();
    let mut to_current = FactMorphism::identity(f);
    let mut k = 0;

    while k < r {
        let tail_c = current.c().submatrix(k, r, k, r);
        let tail_d = current.d().submatrix(k, r, k, r);
        let n = r - k;
        let (p_loc, q_loc) = if let Some((i, j)) = tail_c.find_unit() {
            // C' = P⁻¹CQ: swap rows 0,i and columns 0,j, then clear row and column 0.
            let swapped = &(&BMatrix::permutation(field, n, 0, i) * &tail_c)
                * &BMatrix::permutation(field, n, 0, j);
            let (row_inv, col) = pivot_ops(&swapped)?;
            (
                &BMatrix::permutation(field, n, 0, i) * &row_inv,
                &BMatrix::permutation(field, n, 0, j) * &col,
            )
        } else if let Some((i, j)) = tail_d.find_unit() {
            // D' = ν(Q⁻¹)DP: the same elimination on D, read through ν.
            let swapped = &(&BMatrix::permutation(field, n, 0, i) * &tail_d)
                * &BMatrix::permutation(field, n, 0, j);
            let (row_inv, col) = pivot_ops(&swapped)?;
            let q = &BMatrix::permutation(field, n, 0, i) * &row_inv;
            (&BMatrix::permutation(field, n, 0, j) * &col, q.nu(ctx, -1))
        } else {
            break;
        };
        let lead = BMatrix::identity(field, k);
        let (next, step) = current.conjugate(&lead.direct_sum(&p_loc), &lead.direct_sum(&q_loc))?;
        to_current = to_current.then(&step)?;
        current = next;
        k += 1;
    }

    let reduced = Factorization::new(
        current.c().submatrix(k, r, k, r),
        current.d().submatrix(k, r, k, r),
        ctx,
    )?;
    let m = r - k;
    let incl = BMatrix::block(
        field,
        &[vec![
            &BMatrix::zeros(field, m, k),
            &BMatrix::identity(field, m),
        ]],
    );
    let proj = BMatrix::block(
        field,
        &[
            vec![&BMatrix::zeros(field, k, m)],
            vec![&BMatrix::identity(field, m)],
        ],
    );
    let into_current = FactMorphism::new(&reduced, &current, incl.clone(), incl)?;
    let onto_reduced = FactMorphism::new(&current, &reduced, proj.clone(), proj)?;
    let from_current = to_current.inverse()?;
    Ok(StrippedFactorization {
        embed: into_current.then(&from_current)?,
        project: to_current.then(&onto_reduced)?,
        reduced,
        removed: k,
    })
}

/// For `M = [[u, a], [b, E]]` with `u` a unit, return `(R⁻¹, K)` where
/// `R = [[u⁻¹, 0], [−bu⁻¹, I]]` and `K = [[1, −u⁻¹a], [0, I]]`, so that
/// `RMK = diag(1, E − bu⁻¹a)`.
fn pivot_ops(m: &BMatrix) -> Result<(BMatrix, BMatrix)> {
    let field = m.field();
    let n = m.rows();
    let u = m[(0, 0)].clone();
    let u_inv = u.inverse()?;
    let mut row_inv = BMatrix::identity(field, n);
    let mut col = BMatrix::identity(field, n);
    row_inv[(0, 0)] = u;
    for i in 1..n {
        row_inv[(i, 0)] = m[(i, 0)].clone();
        col[(0, i)] = -&(&u_inv * &m[(0, i)]);
    }
    debug_assert!({
        let row = row_inv.inverse()?;
        let out = &(&row * m) * &col;
        (1..n).all(|i| out[(0, i)].is_zero() && out[(i, 0)].is_zero())
            && out[(0, 0)] == BElt::one(field)
    });
    Ok((row_inv, col))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraCtx;

    fn check_equivalence(f: &Factorization, s: &StrippedFactorization) {
        assert!(s.reduced.is_unit_free());
        let round = s.embed.then(&s.project).unwrap();
        assert_eq!(round, FactMorphism::identity(&s.reduced));
        let other = s.project.then(&s.embed).unwrap();
        assert!(other.is_homotopic_to(&FactMorphism::identity(f)).unwrap());
    }

    #[test]
    fn splits_off_trivial_summand() {
        let ctx = AlgebraCtx::rationals(2);
        let base = Factorization::basic(&ctx);
        let f = base.direct_sum(&Factorization::trivial(&ctx)).unwrap();
        let s = strip_units(&f).unwrap();
        assert_eq!(s.removed, 1);
        assert_eq!(s.reduced, base);
        check_equivalence(&f, &s);
    }

    #[test]
    fn unit_in_second_matrix() {
        let ctx = AlgebraCtx::rationals(3);
        let base = Factorization::canonical(1, &ctx.scalar(2), &ctx).unwrap();
        let swapped = Factorization::trivial(&ctx).suspension();
        let f = swapped.direct_sum(&base).unwrap();
        let s = strip_units(&f).unwrap();
        assert_eq!(s.removed, 1);
        check_equivalence(&f, &s);
    }

    #[test]
    fn unit_free_input_is_unchanged() {
        let ctx = AlgebraCtx::rationals(2);
        let f = Factorization::canonical(2, &ctx.scalar(1), &ctx).unwrap();
        let s = strip_units(&f).unwrap();
        assert_eq!(s.removed, 0);
        assert_eq!(s.reduced, f);
    }

    #[test]
    fn mixed_conjugated_input() {
        let ctx = AlgebraCtx::rationals(2);
        let fl = ctx.field();
        let f = Factorization::basic(&ctx)
            .direct_sum(&Factorization::trivial(&ctx))
            .unwrap();
        let x = BElt::x(fl);
        let p = BMatrix::from_rows(
            fl,
            vec![
                vec![BElt::one(fl), x.clone()],
                vec![BElt::y(fl), BElt::one(fl).scale(&ctx.scalar(3))],
            ],
        )
        .unwrap();
        let q = BMatrix::from_rows(
            fl,
            vec![
                vec![BElt::one(fl), BElt::one(fl)],
                vec![x, BElt::one(fl).scale(&ctx.scalar(2))],
            ],
        )
        .unwrap();
        let (g, _) = f.conjugate(&p, &q).unwrap();
        assert!(!g.is_unit_free());
        let s = strip_units(&g).unwrap();
        assert_eq!(s.removed, 1);
        assert_eq!(s.reduced.rank(), 1);
        check_equivalence(&g, &s);
    }
}
