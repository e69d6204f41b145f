use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::algebra::{AlgebraCtx, BElt, B_DIM};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

/// Matrix with entries in `B`. Acts on row vectors from the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<BElt>,
}

/// `C = C0 + x·C1 + y·C2 + xy·C3 + yx·C4` with `Ci` over `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub c0: Matrix,
    pub c1: Matrix,
    pub c2: Matrix,
    pub c3: Matrix,
    pub c4: Matrix,
}

impl ComponentDecomposition {
    pub fn components(&self) -> [&Matrix; B_DIM] {
        [&self.c0, &self.c1, &self.c2, &self.c3, &self.c4]
    }

    pub fn reassemble(&self) -> BMatrix {
        BMatrix::from_components(self.components())
    }

    pub fn is_unit_free(&self) -> bool {
        self.c0.is_zero()
    }
}

impl BMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        BMatrix {
            field,
            rows,
            cols,
            entries: vec![BElt::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::from_scalar_matrix(&Matrix::identity(field, n))
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BElt,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        BMatrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<BElt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Dimension("B-matrix must have positive size".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows in B-matrix".into()));
        }
        if rows.iter().flatten().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch(
                "B-matrix entry outside the field".into(),
            ));
        }
        Ok(BMatrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// 1×1 matrix.
    pub fn single(e: BElt) -> Self {
        BMatrix {
            field: e.field(),
            rows: 1,
            cols: 1,
            entries: vec![e],
        }
    }

    pub fn from_scalar_matrix(m: &Matrix) -> Self {
        Self::from_fn(m.field(), m.rows(), m.cols(), |i, j| {
            BElt::scalar(m[(i, j)].clone())
        })
    }

    /// `C0 + x·C1 + y·C2 + xy·C3 + yx·C4`.
    pub fn from_components(parts: [&Matrix; B_DIM]) -> Self {
        let m0 = parts[0];
        for p in &parts {
            assert_eq!(
                (p.rows(), p.cols()),
                (m0.rows(), m0.cols()),
                "component shape mismatch"
            );
        }
        Self::from_fn(m0.field(), m0.rows(), m0.cols(), |i, j| {
            BElt::new(std::array::from_fn(|k| parts[k][(i, j)].clone()))
        })
    }

    pub fn decompose(&self) -> ComponentDecomposition {
        let comp = |k: usize| {
            Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
                self[(i, j)].coeff(k).clone()
            })
        };
        ComponentDecomposition {
            c0: comp(0),
            c1: comp(1),
            c2: comp(2),
            c3: comp(3),
            c4: comp(4),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BElt::is_zero)
    }

    pub fn to_rows(&self) -> Vec<Vec<BElt>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    /// Position of the first entry with a nonzero constant term.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(BElt::is_unit)
            .map(|p| (p / self.cols, p % self.cols))
    }

    pub fn is_unit_free(&self) -> bool {
        self.find_unit().is_none()
    }

    /// Entrywise `ν^power`.
    pub fn nu(&self, ctx: &AlgebraCtx, power: i64) -> BMatrix {
        self.map(|e| ctx.nu(e, power))
    }

    pub fn map(&self, f: impl Fn(&BElt) -> BElt) -> BMatrix {
        BMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> BMatrix {
        self.map(|e| e.scale(s))
    }

    /// `b·M`, multiplying every entry on the left.
    pub fn left_scale(&self, b: &BElt) -> BMatrix {
        self.map(|e| b * e)
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> BMatrix {
        BMatrix::from_fn(self.field, r1 - r0, c1 - c0, |i, j| {
            self[(r0 + i, c0 + j)].clone()
        })
    }

    pub fn block(field: FieldSpec, blocks: &[Vec<&BMatrix>]) -> BMatrix {
        let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let mut out = BMatrix::zeros(field, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                assert_eq!(b.rows, heights[bi], "block height mismatch");
                assert_eq!(b.cols, widths[bj], "block width mismatch");
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                    }
                }
                c0 += b.cols;
            }
            r0 += heights[bi];
        }
        out
    }

    pub fn direct_sum(&self, other: &BMatrix) -> BMatrix {
        let z12 = BMatrix::zeros(self.field, self.rows, other.cols);
        let z21 = BMatrix::zeros(self.field, other.rows, self.cols);
        BMatrix::block(self.field, &[vec![self, &z12], vec![&z21, other]])
    }

    /// Inverse over the local ring `B`: exists iff the constant component is
    /// invertible over `k`.
    pub fn inverse(&self) -> Result<BMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square B-matrix".into()));
        }
        let parts = self.decompose();
        let c0_inv = parts.c0.inverse()?;
        let n = self.rows;
        let id = BMatrix::identity(self.field, n);
        let c0_inv_b = BMatrix::from_scalar_matrix(&c0_inv);
        // M = M0 (I + N) with N radical and N³ = 0.
        let nil = &(&c0_inv_b * self) - &id;
        let series = &(&id - &nil) + &(&nil * &nil);
        Ok(&series * &c0_inv_b)
    }

    pub fn permutation(field: FieldSpec, n: usize, a: usize, b: usize) -> BMatrix {
        let mut m = Matrix::identity(field, n);
        if a != b {
            m[(a, a)] = field.zero();
            m[(b, b)] = field.zero();
            m[(a, b)] = field.one();
            m[(b, a)] = field.one();
        }
        Self::from_scalar_matrix(&m)
    }
}

impl Index<(usize, usize)> for BMatrix {
    type Output = BElt;
    fn index(&self, (i, j): (usize, usize)) -> &BElt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for BMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BElt {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &BMatrix {
    type Output = BMatrix;
    fn mul(self, rhs: &BMatrix) -> BMatrix {
        assert_eq!(self.cols, rhs.rows, "B-matrix product dimension mismatch");
        let mut out = BMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out[(i, j)] + &(a * b);
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl Add for &BMatrix {
    type Output = BMatrix;
    fn add(self, rhs: &BMatrix) -> BMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        BMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &BMatrix {
    type Output = BMatrix;
    fn sub(self, rhs: &BMatrix) -> BMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        BMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &BMatrix {
    type Output = BMatrix;
    fn neg(self) -> BMatrix {
        self.map(|e| -e)
    }
}

impl fmt::Display for BMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        let ctx = AlgebraCtx::rationals(2);
        let f = ctx.field();
        let half = f.ratio(1, 2).unwrap();
        let c = BMatrix::single(ctx.b_linear(&f.zero(), &f.one(), &half));
        let d = c.decompose();
        assert!(d.c1.is_identity());
        assert_eq!(d.c2[(0, 0)], half);
        assert!(d.c3.is_zero() && d.c4.is_zero() && d.c0.is_zero());

        let w = BMatrix::single(ctx.w()).decompose();
        assert_eq!(w.c3[(0, 0)], f.one());
        assert_eq!(w.c4[(0, 0)], f.from_i64(-2));
        assert_eq!(w.reassemble(), BMatrix::single(ctx.w()));
    }

    #[test]
    fn inverse_over_b() {
        let ctx = AlgebraCtx::rationals(3);
        let f = ctx.field();
        let m = BMatrix::from_components([
            &Matrix::from_i64(f, &[&[1, 2], &[0, 1]]),
            &Matrix::from_i64(f, &[&[0, 1], &[1, 0]]),
            &Matrix::from_i64(f, &[&[3, 0], &[1, 1]]),
            &Matrix::from_i64(f, &[&[1, 1], &[1, 1]]),
            &Matrix::from_i64(f, &[&[0, 0], &[5, 0]]),
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, BMatrix::identity(f, 2));
        assert_eq!(&inv * &m, BMatrix::identity(f, 2));
        let sing = BMatrix::single(BElt::x(f));
        assert!(sing.inverse().is_err());
    }
}
