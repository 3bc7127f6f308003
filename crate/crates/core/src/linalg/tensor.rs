//! Flat indexing of tensor products and the permutation matrices between them.

use super::{Field, LinalgError, Matrix};

/// Mixed-radix index over `V_1 ⊗ … ⊗ V_m`, last factor fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: &[usize]) -> Self {
        TensorIndex { dims: dims.to_vec() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn split(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        out
    }
}

/// Matrix sending `v_1 ⊗ … ⊗ v_m` to the tensor whose `k`-th factor is
/// `v_{perm[k]}`.
pub fn permutation(field: Field, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let src = TensorIndex::new(dims);
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let dst = TensorIndex::new(&out_dims);
    let n = src.size();
    let mut m = Matrix::zeros(field, n, n);
    for flat in 0..n {
        let idx = src.split(flat);
        let moved: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        m.set(dst.flat(&moved), flat, field.one());
    }
    m
}

/// The flip `V ⊗ W → W ⊗ V`.
pub fn swap(field: Field, dv: usize, dw: usize) -> Matrix {
    permutation(field, &[dv, dw], &[1, 0])
}

/// Left-to-right Kronecker product of a non-empty list.
pub fn kron_all(factors: &[&Matrix]) -> Result<Matrix, LinalgError> {
    let (first, rest) = factors.split_first().ok_or(LinalgError::Empty)?;
    rest.iter().try_fold((*first).clone(), |acc, m| acc.kron(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_index_last_factor_fastest() {
        let t = TensorIndex::new(&[2, 3]);
        assert_eq!(t.flat(&[1, 2]), 5);
        assert_eq!(t.split(4), vec![1, 1]);
        let t = TensorIndex::new(&[2, 3, 4]);
        for f in 0..24 {
            assert_eq!(t.flat(&t.split(f)), f);
        }
    }

    #[test]
    fn swap_is_involution_and_matches_kron() {
        let q = Field::Rational;
        let s = swap(q, 2, 3);
        assert_eq!(&swap(q, 3, 2) * &s, Matrix::identity(q, 6));
        let a = Matrix::from_ints(q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(q, &[&[0, 1, 0], &[5, 0, 0], &[0, 0, 7]]);
        let lhs = &s * &a.kron(&b).unwrap();
        let rhs = &b.kron(&a).unwrap() * &s;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclic_permutation() {
        let q = Field::Rational;
        let p = permutation(q, &[2, 2, 2], &[2, 0, 1]);
        // e_0 ⊗ e_0 ⊗ e_1 becomes e_1 ⊗ e_0 ⊗ e_0
        let v = Matrix::unit_column(q, 8, 1);
        assert_eq!(&p * &v, Matrix::unit_column(q, 8, 4));
    }
}
