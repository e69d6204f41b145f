//! Dense and sparse exact linear algebra over a [`FieldSpec`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Row-major dense matrix. Linear maps act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        if rows.iter().flatten().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch(
                "matrix entry outside the field".into(),
            ));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Column vector.
    pub fn column(field: FieldSpec, v: &[Scalar]) -> Self {
        Self::from_fn(field, v.len(), 1, |i, _| v[i].clone())
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e * s).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(self.field, r1 - r0, c1 - c0, |i, j| {
            self[(r0 + i, c0 + j)].clone()
        })
    }

    /// Assemble a block matrix. Every row of blocks must agree on heights and
    /// every column of blocks on widths.
    pub fn block(field: FieldSpec, blocks: &[Vec<&Matrix>]) -> Matrix {
        let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let mut out = Matrix::zeros(field, heights.iter().sum(), widths.iter().sum());
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

    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let z12 = Matrix::zeros(self.field, self.rows, other.cols);
        let z21 = Matrix::zeros(self.field, other.rows, self.cols);
        Matrix::block(self.field, &[vec![self, &z12], vec![&z21, other]])
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &(&factor * &m[(r, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(i, f)];
                }
                v
            })
            .collect()
    }

    /// Column space of the matrix.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, (0..self.cols).map(|j| self.col(j)))
    }

    pub fn kernel_space(&self) -> Subspace {
        Subspace::span(self.field, self.cols, self.kernel())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::block(self.field, &[vec![self, &Matrix::identity(self.field, n)]]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} matrix has rank < {n}")));
        }
        Ok(r.submatrix(0, n, n, 2 * n))
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            det = &det * &m[(c, c)];
            let inv = m[(c, c)].inv().expect("nonzero pivot");
            for i in c + 1..m.rows {
                if !m[(i, c)].is_zero() {
                    let factor = &m[(i, c)] * &inv;
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &(&factor * &m[(c, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
        }
        det
    }

    /// Some solution of `A v = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::block(self.field, &[vec![self, &Matrix::column(self.field, b)]]);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut v = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = r[(i, self.cols)].clone();
        }
        Some(v)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = &out[(i, j)] + &(a * &rhs[(k, j)]);
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|e| -e)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `k^n`, stored by its reduced echelon basis, so two
/// subspaces are equal iff their stored bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<I>(field: FieldSpec, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, rows).expect("consistent vectors");
        assert_eq!(
            m.cols(),
            ambient,
            "vector length differs from ambient dimension"
        );
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Self::span(field, ambient, id.to_rows())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (r, e) in recon.iter_mut().zip(b) {
                *r = &*r + &(c * e);
            }
        }
        (recon.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.field,
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Complement spanned by standard basis vectors at non-pivot positions.
    pub fn standard_complement(&self) -> Vec<Vec<Scalar>> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| {
                let mut v = vec![self.field.zero(); self.ambient];
                v[c] = self.field.one();
                v
            })
            .collect()
    }

    /// `{v : A v ∈ self}` for a matrix `A` with `A.rows() == ambient`.
    pub fn preimage(&self, a: &Matrix) -> Subspace {
        assert_eq!(a.rows(), self.ambient);
        // Solve A v - W c = 0 and keep the v-part.
        let n = a.cols();
        let w = self.basis.len();
        let field = self.field;
        let sys = Matrix::from_fn(field, self.ambient, n + w, |i, j| {
            if j < n {
                a[(i, j)].clone()
            } else {
                -&self.basis[j - n][i]
            }
        });
        let vecs = sys.kernel().into_iter().map(|v| v[..n].to_vec());
        Subspace::span(field, n, vecs)
    }

    /// `{A v : v ∈ self}`.
    pub fn image_under(&self, a: &Matrix) -> Subspace {
        assert_eq!(a.cols(), self.ambient);
        Subspace::span(
            self.field,
            a.rows(),
            self.basis.iter().map(|v| a.mul_vec(v)),
        )
    }
}

type Echelon = BTreeMap<usize, (BTreeMap<usize, Scalar>, Scalar)>;

/// Sparse linear system `A x = b` solved by incremental elimination.
#[derive(Clone, Debug)]
pub struct SparseSystem {
    field: FieldSpec,
    unknowns: usize,
    rows: Vec<(BTreeMap<usize, Scalar>, Scalar)>,
}

impl SparseSystem {
    pub fn new(field: FieldSpec, unknowns: usize) -> Self {
        SparseSystem {
            field,
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    pub fn push(&mut self, coeffs: BTreeMap<usize, Scalar>, rhs: Scalar) {
        debug_assert!(coeffs.keys().all(|&k| k < self.unknowns));
        let coeffs = coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        self.rows.push((coeffs, rhs));
    }

    /// Row-reduce incrementally. Returns `None` when inconsistent.
    fn eliminate(&self, homogeneous: bool) -> Option<Echelon> {
        let mut echelon: Echelon = BTreeMap::new();
        for (coeffs, rhs) in &self.rows {
            let mut row = coeffs.clone();
            let mut b = if homogeneous {
                self.field.zero()
            } else {
                rhs.clone()
            };
            let mut cursor = 0;
            loop {
                let next = row
                    .range(cursor..)
                    .map(|(&c, _)| c)
                    .find(|c| echelon.contains_key(c));
                let Some(c) = next else { break };
                let factor = row.remove(&c).expect("present");
                let (prow, pb) = &echelon[&c];
                for (&j, v) in prow.iter().filter(|(&j, _)| j != c) {
                    let updated = match row.get(&j) {
                        Some(old) => old - &(&factor * v),
                        None => -&(&factor * v),
                    };
                    if updated.is_zero() {
                        row.remove(&j);
                    } else {
                        row.insert(j, updated);
                    }
                }
                b = &b - &(&factor * pb);
                cursor = c + 1;
            }
            match row.iter().next() {
                None => {
                    if !b.is_zero() {
                        return None;
                    }
                }
                Some((&lead, lv)) => {
                    let inv = lv.inv().expect("nonzero");
                    let normalized: BTreeMap<usize, Scalar> =
                        row.iter().map(|(&j, v)| (j, v * &inv)).collect();
                    echelon.insert(lead, (normalized, &b * &inv));
                }
            }
        }
        Some(echelon)
    }

    fn back_substitute(&self, echelon: &Echelon, x: &mut [Scalar]) {
        for (&c, (row, b)) in echelon.iter().rev() {
            let mut val = b.clone();
            for (&j, v) in row.iter().filter(|(&j, _)| j != c) {
                val = &val - &(v * &x[j]);
            }
            x[c] = val;
        }
    }

    /// A particular solution (free variables zero), or `None` when the
    /// system is inconsistent.
    pub fn solve(&self) -> Option<Vec<Scalar>> {
        let echelon = self.eliminate(false)?;
        let mut x = vec![self.field.zero(); self.unknowns];
        self.back_substitute(&echelon, &mut x);
        Some(x)
    }

    /// Basis of the solutions of the homogeneous system `A x = 0`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let echelon = self
            .eliminate(true)
            .expect("homogeneous systems are consistent");
        (0..self.unknowns)
            .filter(|c| !echelon.contains_key(c))
            .map(|free| {
                let mut x = vec![self.field.zero(); self.unknowns];
                x[free] = self.field.one();
                self.back_substitute(&echelon, &mut x);
                x
            })
            .collect()
    }

    /// Check a candidate solution exactly.
    pub fn satisfied_by(&self, x: &[Scalar]) -> bool {
        self.rows.iter().all(|(coeffs, b)| {
            let lhs = coeffs
                .iter()
                .fold(self.field.zero(), |acc, (&j, v)| acc + v * &x[j]);
            &lhs == b
        })
    }
}
