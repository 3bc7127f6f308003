//! Dense matrices over an exact field, with echelon-form based kernels,
//! inverses and subspaces.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::scalar::{Field, Scalar};
use super::LinalgError;

/// Dense row-major matrix. Every entry lives in `field`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Builds from integer rows; convenient for tests and fixtures.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(field, r, c, |i, j| field.int(rows[i][j]))
    }

    pub fn from_rows(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { op: "from_rows", left: (rows, cols), right: (data.len(), 1) });
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(Matrix { rows, cols, field, data })
    }

    /// Column vector.
    pub fn column(field: Field, v: Vec<Scalar>) -> Self {
        Matrix { rows: v.len(), cols: 1, field, data: v }
    }

    /// Standard basis column `e_i` of length `n`.
    pub fn unit_column(field: Field, n: usize, i: usize) -> Self {
        let mut m = Matrix::zeros(field, n, 1);
        m.data[i] = field.one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                let v = self.get(i, j);
                if i == j { v.is_one() } else { v.is_zero() }
            }))
    }

    /// Non-zero entries of row `i` as `(column, value)` pairs.
    pub fn row_terms(&self, i: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero())
    }

    /// Non-zero entries of column `j` as `(row, value)` pairs.
    pub fn col_terms(&self, j: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|i| {
                let v = self.get(i, j);
                (!v.is_zero()).then(|| (i, v.clone()))
            })
            .collect()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data: self.data.iter().map(|v| v * s).collect() }
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Matrix, op: &'static str) -> Result<(), LinalgError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch { op, left: (self.rows, self.cols), right: (other.rows, other.cols) });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, data })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, data })
    }

    /// Exact product `self · other`. Zero entries are skipped on both sides.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { op: "matmul", left: (self.rows, self.cols), right: (other.rows, other.cols) });
        }
        let sparse_rows: Vec<Vec<(usize, &Scalar)>> = (0..other.rows).map(|k| other.row_terms(k).collect()).collect();
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &sparse_rows[k] {
                    dst[j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; `(a ⊗ b)(v ⊗ w) = a(v) ⊗ b(w)` with the last factor fastest.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for (l, b) in other.row_terms(k) {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(blocks: &[Matrix]) -> Result<Matrix, LinalgError> {
        let first = blocks.first().ok_or(LinalgError::Empty)?;
        let rows = first.rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(first.field, rows, cols);
        let mut off = 0;
        for b in blocks {
            first.check_field(b)?;
            if b.rows != rows {
                return Err(LinalgError::DimensionMismatch { op: "hstack", left: (rows, off), right: (b.rows, b.cols) });
            }
            for i in 0..rows {
                for j in 0..b.cols {
                    out.data[i * cols + off + j] = b.get(i, j).clone();
                }
            }
            off += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[Matrix]) -> Result<Matrix, LinalgError> {
        let first = blocks.first().ok_or(LinalgError::Empty)?;
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            first.check_field(b)?;
            if b.cols != cols {
                return Err(LinalgError::DimensionMismatch { op: "vstack", left: (rows, cols), right: (b.rows, b.cols) });
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(Matrix { rows, cols, field: first.field, data })
    }

    /// Columns `range` as a new matrix.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// First index (row, col) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((usize::MAX, usize::MAX));
        }
        self.data.iter().zip(&other.data).position(|(a, b)| a != b).map(|p| (p / self.cols, p % self.cols))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("non-zero pivot");
            if !inv.is_one() {
                for j in c..cols {
                    let v = &self.data[r * cols + j] * &inv;
                    self.data[r * cols + j] = v;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..cols)
                .filter_map(|j| {
                    let v = self.get(r, j);
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let t = &f * v;
                    self.data[i * cols + j] -= &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v | self·v = 0}` as columns, in reduced column-echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, free.len(), self.cols);
        for (row, &f) in free.iter().enumerate() {
            k.set(row, f, self.field.one());
            for (pr, &pc) in pivots.iter().enumerate() {
                let v = r.get(pr, f);
                if !v.is_zero() {
                    k.set(row, pc, -v);
                }
            }
        }
        k.rref().0.transpose()
    }

    /// Exact inverse, or the rank of a singular input.
    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self.clone(), Matrix::identity(self.field, n)])?;
        let (r, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&p| p < n).count();
        if rank < n {
            return Err(LinalgError::NotInvertible { rank });
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// A particular solution `x` of `self · x = b`, or `None` if inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        self.check_field(b)?;
        if b.rows != self.rows {
            return Err(LinalgError::DimensionMismatch { op: "solve", left: (self.rows, self.cols), right: (b.rows, b.cols) });
        }
        let n = self.cols;
        let aug = Matrix::hstack(&[self.clone(), b.clone()])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(pr, n + j).clone());
            }
        }
        Ok(Some(x))
    }
}

/// Operators panic on shape or field mismatch; use the `checked_*` and
/// `matmul` methods where the inputs are not already known to conform.
impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        self.matmul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        self.checked_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        self.checked_sub(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `field^ambient`, stored as a column basis whose transpose is
/// in reduced row echelon form. Two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the columns of `spanning`.
    pub fn span(spanning: &Matrix) -> Subspace {
        let (r, pivots) = spanning.transpose().rref();
        let k = pivots.len();
        let rows: Vec<usize> = (0..k).collect();
        let basis = r.select_rows(&rows).transpose();
        let pivots = (0..k).map(|j| (0..basis.rows).find(|&i| !basis.get(i, j).is_zero()).unwrap()).collect();
        Subspace { basis, pivots }
    }

    pub fn kernel(map: &Matrix) -> Subspace {
        Subspace::span(&map.kernel_basis())
    }

    pub fn whole(field: Field, n: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows
    }

    /// Coordinates of the columns of `vectors` in this basis, or `None` if
    /// some column is not in the subspace.
    pub fn coords(&self, vectors: &Matrix) -> Option<Matrix> {
        let c = vectors.select_rows(&self.pivots);
        if &self.basis * &c == *vectors {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, vectors: &Matrix) -> bool {
        self.coords(vectors).is_some()
    }

    /// Matrix of `map` restricted to `self` with values in `target`, or
    /// `None` if `map(self)` is not contained in `target`.
    pub fn restrict(&self, map: &Matrix, target: &Subspace) -> Option<Matrix> {
        target.coords(&(map * &self.basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn small_products() {
        let a = Matrix::from_ints(q(), &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, Matrix::from_ints(q(), &[&[2, 1], &[4, 3]]));
        let i2 = Matrix::identity(q(), 2);
        assert_eq!(&i2 * &i2, i2);
        assert!(a.matmul(&Matrix::zeros(q(), 3, 1)).is_err());
        assert!(a.matmul(&Matrix::identity(Field::prime(5).unwrap(), 2)).is_err());
    }

    #[test]
    fn kron_examples() {
        let i2 = Matrix::identity(q(), 2);
        let i3 = Matrix::identity(q(), 3);
        assert_eq!(i2.kron(&i3).unwrap(), Matrix::identity(q(), 6));
        let a = Matrix::from_ints(q(), &[&[1, 2], &[3, 4]]);
        assert_eq!(a.kron(&Matrix::identity(q(), 1)).unwrap(), a);
        // e_1 ⊗ e_0 sits at flat index 1*2 + 0.
        let e1 = Matrix::unit_column(q(), 2, 1);
        let e0 = Matrix::unit_column(q(), 2, 0);
        assert_eq!(e1.kron(&e0).unwrap(), Matrix::unit_column(q(), 4, 2));
    }

    #[test]
    fn kernels() {
        assert_eq!(Matrix::zeros(q(), 3, 3).kernel_basis(), Matrix::identity(q(), 3));
        assert_eq!(Matrix::identity(q(), 3).kernel_basis().cols(), 0);
        let a = Matrix::from_ints(q(), &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.kernel_basis(), Matrix::from_ints(q(), &[&[1], &[-1], &[0]]));
    }

    #[test]
    fn inverses() {
        assert_eq!(Matrix::identity(q(), 4).invert().unwrap(), Matrix::identity(q(), 4));
        let p = Matrix::from_ints(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(p.invert().unwrap(), p);
        let s = Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]);
        assert_eq!(s.invert(), Err(LinalgError::NotInvertible { rank: 1 }));
        assert_eq!(Matrix::zeros(q(), 2, 3).invert(), Err(LinalgError::NotSquare(2, 3)));
    }

    #[test]
    fn subspaces() {
        let v = Matrix::from_ints(q(), &[&[2, 1], &[2, 0], &[0, 1]]);
        let s = Subspace::span(&v);
        assert_eq!(s.dim(), 2);
        let w = Matrix::from_ints(q(), &[&[3], &[2], &[1]]);
        assert_eq!(s.coords(&w).unwrap(), Matrix::from_ints(q(), &[&[3], &[2]]));
        assert_eq!(s.basis() * &s.coords(&w).unwrap(), w);
        assert!(!s.contains(&Matrix::from_ints(q(), &[&[1], &[0], &[0]])));
        let swapped = Matrix::from_ints(q(), &[&[1, 2], &[0, 2], &[1, 0]]);
        assert_eq!(Subspace::span(&swapped), s);
    }

    #[test]
    fn solving() {
        let a = Matrix::from_ints(q(), &[&[1, 1], &[0, 0]]);
        let b = Matrix::from_ints(q(), &[&[3], &[0]]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(&a * &x, b);
        assert!(a.solve(&Matrix::from_ints(q(), &[&[0], &[1]])).unwrap().is_none());
    }
}
