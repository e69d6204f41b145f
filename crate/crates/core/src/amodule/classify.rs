//! Decomposition into free summands and the family `C_n(λ)`, read from the
//! Kronecker pencil `M/rad M → rad M` once free summands are split off.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{ext_cmp, ExtScalar, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::poly::pencil_determinant;

use super::AModule;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Summand {
    pub n: usize,
    pub lambda: ExtScalar,
}

/// `A^free_rank ⊕ ⨁ C_nᵢ(λᵢ)`, with summands sorted by `(λ, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub free_rank: usize,
    pub summands: Vec<Summand>,
}

impl ClassificationReport {
    pub fn dimension(&self) -> usize {
        4 * self.free_rank + self.summands.iter().map(|s| 2 * s.n).sum::<usize>()
    }

    pub fn is_single(&self, n: usize, lambda: &ExtScalar) -> bool {
        self.free_rank == 0
            && self.summands.len() == 1
            && self.summands[0].n == n
            && &self.summands[0].lambda == lambda
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("A^{}", self.free_rank));
        }
        for s in &self.summands {
            parts.push(format!("C_{}({})", s.n, s.lambda));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutsideReason {
    /// After removing free summands the top and the radical differ in size.
    UnbalancedPencil { top: usize, radical: usize },
    /// `det(X̄ − tȲ)` vanishes identically.
    SingularPencil,
    /// Part of the pencil has eigenvalues outside the ground field.
    IrreducibleEigenpolynomial { unresolved: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutsideFamily {
    pub free_rank: usize,
    pub reason: OutsideReason,
}

impl fmt::Display for OutsideFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "outside family (free rank {}): ", self.free_rank)?;
        match &self.reason {
            OutsideReason::UnbalancedPencil { top, radical } => {
                write!(
                    f,
                    "top has dimension {top} but radical has dimension {radical}"
                )
            }
            OutsideReason::SingularPencil => f.write_str("singular pencil"),
            OutsideReason::IrreducibleEigenpolynomial { unresolved } => write!(
                f,
                "irreducible eigenpolynomial ({unresolved} dimensions without rational eigenvalue)"
            ),
        }
    }
}

impl AModule {
    /// Split off free summands, then read Jordan data of the regular pencil.
    pub fn classify(&self) -> std::result::Result<ClassificationReport, OutsideFamily> {
        let (free_rank, rest) = self.split_free().expect("free part is a submodule");
        let outside = |reason| OutsideFamily { free_rank, reason };
        let f = self.ctx().field();

        let rad = rest.radical();
        let top_basis = rad.standard_complement();
        let (top, radical) = (top_basis.len(), rad.dim());
        if top != radical {
            return Err(outside(OutsideReason::UnbalancedPencil { top, radical }));
        }
        let pencil_part = |a: &Matrix| {
            let cols: Vec<Vec<Scalar>> = top_basis
                .iter()
                .map(|v| {
                    rad.coordinates(&a.mul_vec(v))
                        .expect("image lies in the radical")
                })
                .collect();
            Matrix::from_fn(f, radical, top, |i, j| cols[j][i].clone())
        };
        let xb = pencil_part(rest.x());
        let yb = pencil_part(rest.y());
        let det = pencil_determinant(&xb, &yb);
        if det.is_zero() {
            return Err(outside(OutsideReason::SingularPencil));
        }

        let mut summands = Vec::new();
        let mut covered = 0;
        for root in det.roots() {
            let shifted = &xb - &yb.scale(&root);
            covered += collect_blocks(&shifted, &yb, ExtScalar::Finite(root), &mut summands);
        }
        if det.degree().unwrap_or(0) < top {
            covered += collect_blocks(&yb, &xb, ExtScalar::Infinity, &mut summands);
        }
        if covered != top {
            return Err(outside(OutsideReason::IrreducibleEigenpolynomial {
                unresolved: top - covered,
            }));
        }
        summands.sort_by(|a, b| ext_cmp(&a.lambda, &b.lambda).then(a.n.cmp(&b.n)));
        Ok(ClassificationReport {
            free_rank,
            summands,
        })
    }

    /// `M ≅ A^r ⊕ M'`; returns `r` and `M'` with `XY` acting as zero on it.
    ///
    /// Elements `v` whose images `XYv` are independent generate a free
    /// submodule, which splits off because free modules are injective here.
    pub fn split_free(&self) -> Result<(usize, AModule)> {
        let f = self.ctx().field();
        let d = self.dim();
        let xy = self.x() * self.y();
        let (_, pivots) = xy.rref();
        let rank = pivots.len();
        let mut gens = Vec::new();
        for &p in &pivots {
            let mut v = vec![f.zero(); d];
            v[p] = f.one();
            gens.push(v);
        }
        let span = Subspace::span(
            f,
            d,
            gens.iter().flat_map(|v| {
                [
                    v.clone(),
                    self.x().mul_vec(v),
                    self.y().mul_vec(v),
                    xy.mul_vec(v),
                ]
            }),
        );
        if span.dim() != 4 * rank {
            return Err(Error::Singular("free part has unexpected dimension".into()));
        }
        Ok((rank, self.quotient(&span)?))
    }
}

/// Wong sequence `V₀ = 0`, `Vᵢ₊₁ = N⁻¹(S·Vᵢ)` for the eigenvalue where `N`
/// drops rank; `dim Vᵢ − dim Vᵢ₋₁` counts Jordan blocks of size at least `i`.
fn collect_blocks(n: &Matrix, s: &Matrix, lambda: ExtScalar, out: &mut Vec<Summand>) -> usize {
    let f = n.field();
    let mut dims = vec![0usize];
    let mut v = Subspace::zero(f, n.cols());
    loop {
        let next = v.image_under(s).preimage(n);
        if next.dim() == v.dim() {
            break;
        }
        dims.push(next.dim());
        v = next;
    }
    let at_least: Vec<usize> = dims.windows(2).map(|w| w[1] - w[0]).collect();
    for (i, &count) in at_least.iter().enumerate() {
        let bigger = at_least.get(i + 1).copied().unwrap_or(0);
        for _ in 0..count - bigger {
            out.push(Summand {
                n: i + 1,
                lambda: lambda.clone(),
            });
        }
    }
    v.dim()
}

/// Wire form of a classification: `{"free_rank": r, "summands": [{"n", "lambda"}]}`.
#[derive(Serialize, Deserialize)]
struct ReportRepr {
    free_rank: usize,
    summands: Vec<SummandRepr>,
}

#[derive(Serialize, Deserialize)]
struct SummandRepr {
    n: usize,
    lambda: String,
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportRepr {
            free_rank: self.free_rank,
            summands: self
                .summands
                .iter()
                .map(|s| SummandRepr {
                    n: s.n,
                    lambda: s.lambda.to_string(),
                })
                .collect(),
        })
        .expect("serializable report")
    }
}
