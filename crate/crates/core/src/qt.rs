//! Quasitriangular structures: the R-matrix axioms, the Yang-Baxter equation
//! and the four-leg identity derived from it.

use crate::hopf::Hopf;
use crate::linalg::{Matrix, Scalar};
use crate::report::Check;
use crate::{Error, Result};

fn column(h: &Hopf, v: Vec<Scalar>) -> Matrix {
    Matrix::column(h.field(), v)
}

fn check_len(h: &Hopf, r: &[Scalar]) -> Result<()> {
    let n = h.dim() * h.dim();
    if r.len() != n {
        return Err(Error::Shape(format!("R has length {}, expected {n}", r.len())));
    }
    if r.iter().any(|c| c.field() != h.field()) {
        return Err(Error::Shape("R is over a different field".into()));
    }
    Ok(())
}

/// Inverse of `r` in the algebra `H ⊗ H`, if it exists.
pub fn tensor_inverse(h: &Hopf, r: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = h.dim() * h.dim();
    let mut left = Matrix::zeros(h.field(), n, n);
    for t in 0..n {
        let mut e = vec![h.field().zero(); n];
        e[t] = h.field().one();
        for (i, v) in h.tensor_mul(2, r, &e).into_iter().enumerate() {
            left.set(i, t, v);
        }
    }
    let inv = left.invert().ok()?;
    let one = h.embed(&h.one(), 2, &[0]);
    let x = h.apply(&inv, &one);
    (h.tensor_mul(2, &x, r) == one).then_some(x)
}

/// One check per R-matrix axiom, plus invertibility of `r` in `H ⊗ H`.
pub fn check_qt(h: &Hopf, r: &[Scalar]) -> Result<Vec<Check>> {
    check_len(h, r)?;
    let d = h.dim();
    let f = h.field();
    let id = h.identity();
    let rc = column(h, r.to_vec());
    let one = h.unit().clone();

    let eps_left = &h.counit().kron(&id)? * &rc;
    let eps_right = &id.kron(h.counit())? * &rc;
    let qt1 = match Check::equal("QT1", "QT1", &eps_left, &one, &[1], &[d]) {
        c if c.passed() => Check::equal("QT1", "QT1", &eps_right, &one, &[1], &[d]),
        c => c,
    };

    let r13 = h.embed(r, 3, &[0, 2]);
    let r23 = h.embed(r, 3, &[1, 2]);
    let r12 = h.embed(r, 3, &[0, 1]);
    let lhs2 = &h.comul().kron(&id)? * &rc;
    let rhs2 = column(h, h.tensor_mul(3, &r13, &r23));
    let qt2 = Check::equal("QT2", "QT2", &lhs2, &rhs2, &[1], &[d, d, d]);
    let lhs3 = &id.kron(h.comul())? * &rc;
    let rhs3 = column(h, h.tensor_mul(3, &r13, &r12));
    let qt3 = Check::equal("QT3", "QT3", &lhs3, &rhs3, &[1], &[d, d, d]);

    let mut lhs4 = Matrix::zeros(f, d * d, d);
    let mut rhs4 = Matrix::zeros(f, d * d, d);
    let flip = crate::linalg::swap(f, d, d);
    for x in 0..d {
        let dx = h.comul().col(x);
        let dcop = (&flip * &column(h, dx.clone())).col(0);
        for (i, v) in h.tensor_mul(2, r, &dx).into_iter().enumerate() {
            lhs4.set(i, x, v);
        }
        for (i, v) in h.tensor_mul(2, &dcop, r).into_iter().enumerate() {
            rhs4.set(i, x, v);
        }
    }
    let qt4 = Check::equal("QT4", "QT4", &lhs4, &rhs4, &[d], &[d, d]);

    let inv = Check::flag("R invertible", "R-matrix", tensor_inverse(h, r).is_some());
    Ok(vec![qt1, qt2, qt3, qt4, inv])
}

/// `R12 R13 R23 = R23 R13 R12` in `H^{⊗3}`.
pub fn check_qybe(h: &Hopf, r: &[Scalar]) -> Result<Check> {
    check_len(h, r)?;
    let d = h.dim();
    let (r12, r13, r23) = (h.embed(r, 3, &[0, 1]), h.embed(r, 3, &[0, 2]), h.embed(r, 3, &[1, 2]));
    let lhs = h.tensor_mul(3, &h.tensor_mul(3, &r12, &r13), &r23);
    let rhs = h.tensor_mul(3, &h.tensor_mul(3, &r23, &r13), &r12);
    Ok(Check::equal("QYBE", "QYBE", &column(h, lhs), &column(h, rhs), &[1], &[d, d, d]))
}

/// The four-leg identity
/// `u¹p¹U¹ ⊗ u²r¹R¹ ⊗ p²r² ⊗ U²R² = p¹U¹u¹ ⊗ r¹R¹u² ⊗ r²p² ⊗ R²U²`
/// with every letter a copy of `r`. As products of leg embeddings the two
/// sides are `R12 R13 R14 R23 R24` and `R23 R24 R13 R14 R12`.
pub fn check_four_leg_ybe(h: &Hopf, r: &[Scalar]) -> Result<Check> {
    check_len(h, r)?;
    let d = h.dim();
    let leg = |a: usize, b: usize| h.embed(r, 4, &[a, b]);
    let prod = |xs: &[Vec<Scalar>]| {
        xs[1..].iter().fold(xs[0].clone(), |acc, x| h.tensor_mul(4, &acc, x))
    };
    let lhs = prod(&[leg(0, 1), leg(0, 2), leg(0, 3), leg(1, 2), leg(1, 3)]);
    let rhs = prod(&[leg(1, 2), leg(1, 3), leg(0, 2), leg(0, 3), leg(0, 1)]);
    Ok(Check::equal("four-leg Yang-Baxter identity", "QYBE", &column(h, lhs), &column(h, rhs), &[1], &[d, d, d, d]))
}

/// A Hopf algebra together with an R-matrix that passed every check.
#[derive(Clone, Debug)]
pub struct QtHopf {
    hopf: Hopf,
    r: Vec<Scalar>,
    r_inv: Vec<Scalar>,
    r_terms: Vec<(usize, usize, Scalar)>,
}

impl QtHopf {
    pub fn new(hopf: Hopf, r: Vec<Scalar>) -> Result<QtHopf> {
        for c in check_qt(&hopf, &r)? {
            c.ensure()?;
        }
        let r_inv = tensor_inverse(&hopf, &r).expect("checked invertible");
        let d = hopf.dim();
        let r_terms = r
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(f, c)| (f / d, f % d, c.clone()))
            .collect();
        Ok(QtHopf { hopf, r, r_inv, r_terms })
    }

    pub fn hopf(&self) -> &Hopf {
        &self.hopf
    }

    pub fn r(&self) -> &[Scalar] {
        &self.r
    }

    pub fn r_inv(&self) -> &[Scalar] {
        &self.r_inv
    }

    /// Non-zero terms `(a, b, c)` of `R = Σ c e_a ⊗ e_b`.
    pub fn r_terms(&self) -> &[(usize, usize, Scalar)] {
        &self.r_terms
    }

    /// Triangular means `R21 R = 1 ⊗ 1`.
    pub fn is_triangular(&self) -> bool {
        let h = &self.hopf;
        let r21 = h.embed(&self.r, 2, &[1, 0]);
        h.tensor_mul(2, &r21, &self.r) == h.embed(&h.one(), 2, &[0])
    }
}
