//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Shapes, for `d = dim H`: `mul` is `d × d²`, `unit` is `d × 1`, `comul` is
//! `d² × d`, `counit` is `1 × d`, `antipode` is `d × d`.

use crate::linalg::{permutation, Field, Matrix, Scalar, TensorIndex};
use crate::report::{Check, Witness};
use crate::{Error, Result};

/// Unverified Hopf data, as read from a file or assembled by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfDescription {
    pub field: Field,
    pub labels: Vec<String>,
    pub mul: Matrix,
    pub unit: Matrix,
    pub comul: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
}

impl HopfDescription {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn check_shapes(&self) -> Result<()> {
        let d = self.dim();
        let expect = [
            ("mul", &self.mul, d, d * d),
            ("unit", &self.unit, d, 1),
            ("comul", &self.comul, d * d, d),
            ("counit", &self.counit, 1, d),
            ("antipode", &self.antipode, d, d),
        ];
        for (name, m, r, c) in expect {
            if (m.rows(), m.cols()) != (r, c) {
                return Err(Error::Shape(format!("{name} is {}x{}, expected {r}x{c}", m.rows(), m.cols())));
            }
            if m.field() != self.field {
                return Err(Error::Shape(format!("{name} is over {}, expected {}", m.field(), self.field)));
            }
        }
        if d == 0 {
            return Err(Error::Shape("dimension 0".into()));
        }
        Ok(())
    }
}

/// Names of the axiom families in the order they are checked.
pub const AXIOM_FAMILIES: [&str; 6] = ["associativity", "unit", "coassociativity", "counit", "bialgebra", "antipode"];

fn first_failure(name: &str, pairs: &[(Matrix, Matrix, Vec<usize>, Vec<usize>)]) -> Check {
    for (l, r, i, o) in pairs {
        if let Some(w) = Witness::between(l, r, i, o) {
            return Check::fail(name, "Hopf axioms", Some(w));
        }
    }
    Check::pass(name, "Hopf axioms")
}

/// Evaluates every axiom family of a Hopf algebra on `desc`, one check per
/// family, without stopping at the first failure.
pub fn axiom_checks(desc: &HopfDescription) -> Result<Vec<Check>> {
    desc.check_shapes()?;
    let f = desc.field;
    let d = desc.dim();
    let id = Matrix::identity(f, d);
    let one = Matrix::identity(f, 1);
    let (mul, unit, comul, counit, s) = (&desc.mul, &desc.unit, &desc.comul, &desc.counit, &desc.antipode);
    let k = |a: &Matrix, b: &Matrix| a.kron(b).expect("same field");

    let assoc = first_failure(
        "associativity",
        &[(mul * &k(mul, &id), mul * &k(&id, mul), vec![d, d, d], vec![d])],
    );
    let unit_law = first_failure(
        "unit",
        &[(mul * &k(unit, &id), id.clone(), vec![d], vec![d]), (mul * &k(&id, unit), id.clone(), vec![d], vec![d])],
    );
    let coassoc = first_failure(
        "coassociativity",
        &[(&k(comul, &id) * comul, &k(&id, comul) * comul, vec![d], vec![d, d, d])],
    );
    let counit_law = first_failure(
        "counit",
        &[(&k(counit, &id) * comul, id.clone(), vec![d], vec![d]), (&k(&id, counit) * comul, id.clone(), vec![d], vec![d])],
    );
    let middle = permutation(f, &[d, d, d, d], &[0, 2, 1, 3]);
    let bialg = first_failure(
        "bialgebra",
        &[
            (comul * mul, &(&k(mul, mul) * &middle) * &k(comul, comul), vec![d, d], vec![d, d]),
            (counit * mul, k(counit, counit), vec![d, d], vec![1]),
            (comul * unit, k(unit, unit), vec![1], vec![d, d]),
            (counit * unit, one, vec![1], vec![1]),
        ],
    );
    let eps = unit * counit;
    let antipode = first_failure(
        "antipode",
        &[
            (&(mul * &k(s, &id)) * comul, eps.clone(), vec![d], vec![d]),
            (&(mul * &k(&id, s)) * comul, eps, vec![d], vec![d]),
        ],
    );
    Ok(vec![assoc, unit_law, coassoc, counit_law, bialg, antipode])
}

/// A verified finite-dimensional Hopf algebra with cached products.
#[derive(Clone, Debug)]
pub struct Hopf {
    desc: HopfDescription,
    antipode_inv: Matrix,
    products: Vec<Vec<Vec<(usize, Scalar)>>>,
    coproducts: Vec<Vec<(usize, usize, Scalar)>>,
    lmul: Vec<Matrix>,
    rmul: Vec<Matrix>,
}

impl PartialEq for Hopf {
    fn eq(&self, other: &Hopf) -> bool {
        self.desc == other.desc
    }
}

impl Hopf {
    /// Verifies every axiom family and caches `S⁻¹`.
    pub fn build(desc: HopfDescription) -> Result<Hopf> {
        for check in axiom_checks(&desc)? {
            check.ensure()?;
        }
        let antipode_inv = match desc.antipode.invert() {
            Ok(m) => m,
            Err(crate::LinalgError::NotInvertible { rank }) => return Err(Error::SingularAntipode { rank }),
            Err(e) => return Err(e.into()),
        };
        let d = desc.dim();
        let products = (0..d)
            .map(|i| (0..d).map(|j| desc.mul.col_terms(i * d + j)).collect())
            .collect();
        let coproducts = (0..d)
            .map(|i| desc.comul.col_terms(i).into_iter().map(|(r, c)| (r / d, r % d, c)).collect())
            .collect();
        let lmul = (0..d).map(|i| Matrix::from_fn(desc.field, d, d, |r, j| desc.mul.get(r, i * d + j).clone())).collect();
        let rmul = (0..d).map(|i| Matrix::from_fn(desc.field, d, d, |r, j| desc.mul.get(r, j * d + i).clone())).collect();
        Ok(Hopf { desc, antipode_inv, products, coproducts, lmul, rmul })
    }

    pub fn description(&self) -> &HopfDescription {
        &self.desc
    }

    pub fn field(&self) -> Field {
        self.desc.field
    }

    pub fn dim(&self) -> usize {
        self.desc.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.desc.labels
    }

    pub fn mul(&self) -> &Matrix {
        &self.desc.mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.desc.unit
    }

    pub fn comul(&self) -> &Matrix {
        &self.desc.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.desc.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.desc.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim())
    }

    /// `e_i` as an element.
    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[i] = self.field().one();
        v
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.desc.unit.col(0)
    }

    /// `ε(e_i)`.
    pub fn counit_of(&self, i: usize) -> &Scalar {
        self.desc.counit.get(0, i)
    }

    /// Non-zero terms `(j, k, c)` of `∆(e_i) = Σ c e_j ⊗ e_k`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.coproducts[i]
    }

    /// Non-zero terms `(j, k, l, c)` of `(∆ ⊗ id)∆(e_i)`.
    pub fn coproduct3_terms(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut acc = vec![self.field().zero(); self.dim().pow(3)];
        let d = self.dim();
        for (a, b, c) in self.coproduct_terms(i) {
            for (x, y, e) in self.coproduct_terms(*a) {
                acc[(x * d + y) * d + b] += &(c * e);
            }
        }
        let t = TensorIndex::new(&[d, d, d]);
        acc.into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(f, v)| {
                let ix = t.split(f);
                (ix[0], ix[1], ix[2], v)
            })
            .collect()
    }

    /// Matrix of `x ↦ e_i x`.
    pub fn lmul_basis(&self, i: usize) -> &Matrix {
        &self.lmul[i]
    }

    /// Matrix of `x ↦ x e_i`.
    pub fn rmul_basis(&self, i: usize) -> &Matrix {
        &self.rmul[i]
    }

    fn combine(&self, mats: &[Matrix], x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field(), d, d);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &mats[i].scale(c);
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn lmul_of(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.lmul, x)
    }

    /// Matrix of `y ↦ y x`.
    pub fn rmul_of(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.rmul, x)
    }

    pub fn apply(&self, m: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
        (m * &Matrix::column(self.field(), x.to_vec())).col(0)
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.apply(&self.desc.antipode, x)
    }

    pub fn antipode_inv_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.apply(&self.antipode_inv, x)
    }

    pub fn mul_elems(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.tensor_mul(1, a, b)
    }

    /// Product in the algebra `H^{⊗n}` of two flat tensors.
    pub fn tensor_mul(&self, n: usize, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let t = TensorIndex::new(&vec![d; n]);
        let size = t.size();
        assert!(a.len() == size && b.len() == size, "tensor_mul length");
        let mut out = vec![self.field().zero(); size];
        let nz = |v: &[Scalar]| -> Vec<(Vec<usize>, Scalar)> {
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(f, c)| (t.split(f), c.clone())).collect()
        };
        let (na, nb) = (nz(a), nz(b));
        for (ia, ca) in &na {
            for (ib, cb) in &nb {
                let mut terms: Vec<(usize, Scalar)> = vec![(0, ca * cb)];
                for k in 0..n {
                    let p = &self.products[ia[k]][ib[k]];
                    terms = terms
                        .iter()
                        .flat_map(|(f, c)| p.iter().map(move |(j, v)| (f * d + j, c * v)))
                        .collect();
                    if terms.is_empty() {
                        break;
                    }
                }
                for (f, c) in terms {
                    out[f] += &c;
                }
            }
        }
        out
    }

    /// Places `x ∈ H^{⊗k}` into `H^{⊗n}` on the legs `legs` (in order), with
    /// the unit on every other leg. `legs = [1, 0]` on `n = 2` gives `x_{21}`.
    pub fn embed(&self, x: &[Scalar], n: usize, legs: &[usize]) -> Vec<Scalar> {
        let d = self.dim();
        let k = legs.len();
        let src = TensorIndex::new(&vec![d; k]);
        assert_eq!(x.len(), src.size());
        let one: Vec<(usize, Scalar)> = self.one().into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = vec![self.field().zero(); d.pow(n as u32)];
        for (f, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ix = src.split(f);
            let mut terms: Vec<(usize, Scalar)> = vec![(0, c.clone())];
            for pos in 0..n {
                let factor: Vec<(usize, Scalar)> = match legs.iter().position(|&l| l == pos) {
                    Some(j) => vec![(ix[j], self.field().one())],
                    None => one.clone(),
                };
                terms = terms
                    .iter()
                    .flat_map(|(g, a)| factor.iter().map(move |(j, b)| (g * d + j, a * b)))
                    .collect();
            }
            for (g, v) in terms {
                out[g] += &v;
            }
        }
        out
    }

    /// The dual Hopf algebra under `⟨e*_i, e_j⟩ = δ_ij`.
    pub fn dual(&self) -> Hopf {
        let desc = &self.desc;
        let dual = HopfDescription {
            field: desc.field,
            labels: desc.labels.iter().map(|l| dual_label(l)).collect(),
            mul: desc.comul.transpose(),
            unit: desc.counit.transpose(),
            comul: desc.mul.transpose(),
            counit: desc.unit.transpose(),
            antipode: desc.antipode.transpose(),
        };
        Hopf::build(dual).expect("dual of a Hopf algebra is a Hopf algebra")
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kc2(field: Field) -> HopfDescription {
        let f = field;
        let m = |rows: &[&[i64]]| Matrix::from_ints(f, rows);
        HopfDescription {
            field: f,
            labels: vec!["1".into(), "g".into()],
            mul: m(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]),
            unit: m(&[&[1], &[0]]),
            comul: m(&[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]),
            counit: m(&[&[1, 1]]),
            antipode: m(&[&[1, 0], &[0, 1]]),
        }
    }

    #[test]
    fn group_algebra_accepted() {
        let h = Hopf::build(kc2(Field::Rational)).unwrap();
        assert_eq!(h.dim(), 2);
        assert_eq!(h.antipode_inv(), &h.identity());
    }

    #[test]
    fn corrupted_antipode_fails_at_g() {
        let mut d = kc2(Field::Rational);
        d.antipode = Matrix::from_ints(d.field, &[&[1, 1], &[0, 0]]);
        let checks = axiom_checks(&d).unwrap();
        let failing: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
        assert_eq!(failing, vec!["antipode"]);
        assert_eq!(checks[5].witness.as_ref().unwrap().input, vec![1]);
        assert!(matches!(Hopf::build(d), Err(Error::Verification { .. })));
    }

    #[test]
    fn shape_errors_are_not_axiom_failures() {
        let mut d = kc2(Field::Rational);
        d.counit = Matrix::zeros(d.field, 1, 3);
        assert!(matches!(axiom_checks(&d), Err(Error::Shape(_))));
    }

    #[test]
    fn embedding_and_products() {
        let h = Hopf::build(kc2(Field::Rational)).unwrap();
        let q = Field::Rational;
        // (1⊗g)(g⊗g) = g⊗1
        let a = vec![q.zero(), q.one(), q.zero(), q.zero()];
        let b = vec![q.zero(), q.zero(), q.zero(), q.one()];
        assert_eq!(h.tensor_mul(2, &a, &b), vec![q.zero(), q.zero(), q.one(), q.zero()]);
        // g placed on leg 1 of three
        let e = h.embed(&h.basis(1), 3, &[1]);
        assert!(e[2].is_one());
        assert_eq!(e.iter().filter(|c| !c.is_zero()).count(), 1);
    }

    #[test]
    fn double_dual_is_identity() {
        let h = Hopf::build(kc2(Field::Rational)).unwrap();
        assert_eq!(h.dual().dual().description(), h.description());
    }
}
