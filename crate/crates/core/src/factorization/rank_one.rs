use crate::algebra::AlgebraCtx;
use crate::field::Scalar;

/// Scalars `(β₁, β₂, γ₁, γ₂)` for the rank-one object
/// `C = β₁x + β₂y`, `D = γ₁x + γ₂y` fixed by `x ↦ αx, y ↦ α⁻¹y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneWitness {
    pub beta1: Scalar,
    pub beta2: Scalar,
    pub gamma1: Scalar,
    pub gamma2: Scalar,
}

impl RankOneWitness {
    /// Check `αβ₁γ₂ = 1`, `α⁻¹β₂γ₁ = −q`, `γ₁β₂ = 1`, `γ₂β₁ = −q`.
    pub fn satisfies(&self, alpha: &Scalar, ctx: &AlgebraCtx) -> bool {
        let f = ctx.field();
        let Ok(alpha_inv) = alpha.inv() else {
            return false;
        };
        let minus_q = -ctx.q();
        &(alpha * &self.beta1) * &self.gamma2 == f.one()
            && &(&alpha_inv * &self.beta2) * &self.gamma1 == minus_q
            && &self.gamma1 * &self.beta2 == f.one()
            && &self.gamma2 * &self.beta1 == minus_q
    }
}

/// Solve the rank-one system for a given `α`.
///
/// The last two equations force `γ₁ = β₂⁻¹` and `γ₂ = −qβ₁⁻¹`; substituting
/// leaves `−qα = 1` in both of the others, so a solution exists exactly when
/// `α = −q⁻¹`, with `β₁ = β₂ = 1` as a representative.
pub fn rank_one_scan(alpha: &Scalar, ctx: &AlgebraCtx) -> Option<RankOneWitness> {
    if alpha.is_zero() {
        return None;
    }
    let f = ctx.field();
    let candidate = RankOneWitness {
        beta1: f.one(),
        beta2: f.one(),
        gamma1: f.one(),
        gamma2: -ctx.q(),
    };
    candidate.satisfies(alpha, ctx).then_some(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn rationals() {
        let ctx = AlgebraCtx::rationals(2);
        let half = ctx.scalar(-1).checked_div(&ctx.scalar(2)).unwrap();
        let w = rank_one_scan(&half, &ctx).unwrap();
        assert_eq!(w.gamma2, ctx.scalar(-2));
        assert!(rank_one_scan(&ctx.scalar(1), &ctx).is_none());
    }

    #[test]
    fn matches_brute_force_over_f7() {
        let field = FieldSpec::prime(7).unwrap();
        let ctx = AlgebraCtx::parse(field, "2").unwrap();
        let elements = field.elements().unwrap();
        for alpha in elements.iter().filter(|a| !a.is_zero()) {
            let mut found = false;
            for b1 in &elements {
                for b2 in &elements {
                    for g1 in &elements {
                        for g2 in &elements {
                            let w = RankOneWitness {
                                beta1: b1.clone(),
                                beta2: b2.clone(),
                                gamma1: g1.clone(),
                                gamma2: g2.clone(),
                            };
                            found |= w.satisfies(alpha, &ctx);
                        }
                    }
                }
            }
            assert_eq!(
                found,
                rank_one_scan(alpha, &ctx).is_some(),
                "alpha = {alpha}"
            );
            assert_eq!(found, *alpha == field.from_i64(3));
        }
    }
}
