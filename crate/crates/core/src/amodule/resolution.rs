//! Minimal projective resolutions. `A` is local, so projective covers are
//! free of rank equal to the number of generators.

use std::fmt;

use crate::algebra::A_DIM;
use crate::linalg::{Matrix, Subspace};

use super::AModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Complexity {
    Zero,
    One,
    Two,
}

impl Complexity {
    pub fn value(self) -> u8 {
        match self {
            Complexity::Zero => 0,
            Complexity::One => 1,
            Complexity::Two => 2,
        }
    }
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Generator counts `g₀, …, g_N` of the minimal resolution; `dim Qₙ = 4gₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiSequence {
    pub betti: Vec<usize>,
    pub complexity: Complexity,
}

impl BettiSequence {
    /// Zero once the sequence vanishes; two if the second half keeps growing
    /// strictly; one otherwise (bounded over the window).
    pub fn estimate(betti: &[usize]) -> Complexity {
        if betti.contains(&0) {
            return Complexity::Zero;
        }
        let tail = &betti[betti.len() / 2..];
        if tail.len() >= 2 && tail.windows(2).all(|w| w[1] > w[0]) {
            Complexity::Two
        } else {
            Complexity::One
        }
    }
}

impl AModule {
    /// Kernel of the projective cover `A^g → M`, `g` the number of generators.
    pub fn syzygy(&self) -> AModule {
        let ctx = self.ctx();
        let f = ctx.field();
        let d = self.dim();
        let gens = self.radical().standard_complement();
        let g = gens.len();
        let xy = self.x() * self.y();
        // Column 4i + m is the image of the basis element m of copy i.
        let cover = Matrix::from_fn(f, d, A_DIM * g, |row, col| {
            let v = &gens[col / A_DIM];
            match col % A_DIM {
                0 => v[row].clone(),
                1 => self.x().mul_vec(v)[row].clone(),
                2 => self.y().mul_vec(v)[row].clone(),
                _ => xy.mul_vec(v)[row].clone(),
            }
        });
        let kernel = Subspace::span(f, A_DIM * g, cover.kernel());
        AModule::free(g, ctx)
            .submodule(&kernel)
            .expect("kernel of a module map is a submodule")
    }

    pub fn syzygy_power(&self, n: usize) -> AModule {
        (0..n).fold(self.clone(), |m, _| m.syzygy())
    }

    /// `g₀, …, g_steps`, stopping early once a syzygy vanishes.
    pub fn betti_sequence(&self, steps: usize) -> BettiSequence {
        let mut betti = Vec::with_capacity(steps + 1);
        let mut m = self.clone();
        for i in 0..=steps {
            let g = m.generator_count();
            betti.push(g);
            if g == 0 {
                betti.resize(steps + 1, 0);
                break;
            }
            if i < steps {
                m = m.syzygy();
            }
        }
        let complexity = BettiSequence::estimate(&betti);
        BettiSequence { betti, complexity }
    }

    /// Least `p ≤ max_period` with `Ωᵖ(M) ≅ M`.
    pub fn periodicity(&self, max_period: usize) -> Option<usize> {
        if self.dim() == 0 {
            return None;
        }
        let mut m = self.clone();
        for p in 1..=max_period {
            m = m.syzygy();
            if m.dim() == 0 {
                return None;
            }
            if m.is_isomorphic(self) {
                return Some(p);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraCtx;
    use crate::field::{ExtScalar, FieldSpec};

    #[test]
    fn syzygies_of_small_modules() {
        let ctx = AlgebraCtx::rationals(2);
        assert_eq!(AModule::free(1, &ctx).syzygy().dim(), 0);
        let k = AModule::simple(&ctx);
        let om = k.syzygy();
        assert_eq!(om.dim(), 3);
        let a = AModule::free(1, &ctx);
        assert!(om.is_isomorphic(&a.submodule(&a.radical()).unwrap()));
    }

    #[test]
    fn syzygy_of_family_rescales_lambda() {
        let ctx = AlgebraCtx::rationals(2);
        let f = ctx.field();
        let m = AModule::family(1, &ExtScalar::Finite(f.one()), &ctx).unwrap();
        let r = m.syzygy().classify().unwrap();
        assert!(r.is_single(1, &ExtScalar::Finite(ctx.scalar(-2))));
    }

    #[test]
    fn betti_numbers() {
        let ctx = AlgebraCtx::rationals(3);
        let k = AModule::simple(&ctx).betti_sequence(6);
        assert_eq!(k.betti, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(k.complexity, Complexity::Two);
        let c = AModule::family(3, &ExtScalar::Finite(ctx.scalar(2)), &ctx).unwrap();
        let b = c.betti_sequence(6);
        assert_eq!(b.betti, vec![3; 7]);
        assert_eq!(b.complexity, Complexity::One);
        let a = AModule::free(1, &ctx).betti_sequence(3);
        assert_eq!(a.betti, vec![1, 0, 0, 0]);
        assert_eq!(a.complexity, Complexity::Zero);
    }

    #[test]
    fn periods() {
        let ctx = AlgebraCtx::parse(FieldSpec::prime(5).unwrap(), "2").unwrap();
        let m = AModule::family(1, &ExtScalar::Finite(ctx.scalar(1)), &ctx).unwrap();
        assert_eq!(m.periodicity(10), Some(4));
        let q = AlgebraCtx::rationals(2);
        let m = AModule::family(1, &ExtScalar::Finite(q.scalar(1)), &q).unwrap();
        assert_eq!(m.periodicity(10), None);
    }
}
