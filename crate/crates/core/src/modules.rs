//! The braided category of left `H`-modules: modules, module algebras, the
//! braiding `ψ`, braided opposites, braided tensor products and smash products.

use crate::hopf::Hopf;
use crate::linalg::{permutation, swap, Field, Matrix, Scalar};
use crate::qt::QtHopf;
use crate::report::{Check, Witness};
use crate::{Error, Result};

/// A left `H`-module, stored as one matrix per basis element of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    dim: usize,
    reps: Vec<Matrix>,
}

/// Module-law checks for a candidate list of basis representations.
pub fn module_checks(h: &Hopf, reps: &[Matrix]) -> Result<Vec<Check>> {
    let d = h.dim();
    if reps.len() != d {
        return Err(Error::Shape(format!("{} representation matrices for a {d}-dimensional algebra", reps.len())));
    }
    let n = reps[0].rows();
    if reps.iter().any(|m| m.rows() != n || m.cols() != n || m.field() != h.field()) {
        return Err(Error::Shape("representation matrices must be square, of one size, over one field".into()));
    }
    let mut assoc = Check::pass("module associativity", "module axioms");
    'outer: for i in 0..d {
        for j in 0..d {
            let lhs = &reps[i] * &reps[j];
            let rhs = combine(h.field(), n, reps, &h.mul().col(i * d + j));
            if lhs != rhs {
                let w = Witness::between(&lhs, &rhs, &[n], &[n]).map(|mut w| {
                    w.input.splice(0..0, [i, j]);
                    w
                });
                assoc = Check::fail("module associativity", "module axioms", w);
                break 'outer;
            }
        }
    }
    let one = combine(h.field(), n, reps, &h.one());
    let unit = Check::equal("module unit", "module axioms", &one, &Matrix::identity(h.field(), n), &[n], &[n]);
    Ok(vec![assoc, unit])
}

fn combine(field: Field, n: usize, reps: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, n, n);
    for (m, c) in reps.iter().zip(x) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

impl Module {
    pub fn from_reps(h: &Hopf, reps: Vec<Matrix>) -> Result<Module> {
        for c in module_checks(h, &reps)? {
            c.ensure()?;
        }
        Ok(Module { dim: reps[0].rows(), reps })
    }

    /// From an action matrix `M × (H⊗M)` with column index `h·dim M + m`.
    pub fn from_action(h: &Hopf, dim: usize, action: &Matrix) -> Result<Module> {
        if action.rows() != dim || action.cols() != h.dim() * dim {
            return Err(Error::Shape(format!("action is {}x{}, expected {dim}x{}", action.rows(), action.cols(), h.dim() * dim)));
        }
        let reps = (0..h.dim())
            .map(|i| action.select_cols(&(i * dim..(i + 1) * dim).collect::<Vec<_>>()))
            .collect();
        Module::from_reps(h, reps)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.reps[0].field()
    }

    pub fn reps(&self) -> &[Matrix] {
        &self.reps
    }

    /// Action of `e_i`.
    pub fn rep(&self, i: usize) -> &Matrix {
        &self.reps[i]
    }

    /// Action of an arbitrary element.
    pub fn rep_of(&self, x: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim, &self.reps, x)
    }

    /// The action as a single `M × (H⊗M)` matrix.
    pub fn action(&self) -> Matrix {
        Matrix::hstack(&self.reps).expect("same shapes")
    }

    /// `h·m = ε(h)m` on `k^n`.
    pub fn trivial(h: &Hopf, n: usize) -> Module {
        let id = Matrix::identity(h.field(), n);
        let reps = (0..h.dim()).map(|i| id.scale(h.counit_of(i))).collect();
        Module { dim: n, reps }
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &Hopf) -> Module {
        Module { dim: h.dim(), reps: (0..h.dim()).map(|i| h.lmul_basis(i).clone()).collect() }
    }

    /// `h ▷ x = h₁ x S(h₂)`.
    pub fn adjoint(h: &Hopf) -> Module {
        let reps = (0..h.dim()).map(|i| adjoint_rep(h, i)).collect();
        Module { dim: h.dim(), reps }
    }

    /// Diagonal action `h·(m⊗n) = h₁·m ⊗ h₂·n`.
    pub fn tensor(h: &Hopf, a: &Module, b: &Module) -> Module {
        let n = a.dim * b.dim;
        let reps = (0..h.dim())
            .map(|i| {
                let mut out = Matrix::zeros(h.field(), n, n);
                for (j, k, c) in h.coproduct_terms(i) {
                    out = &out + &a.reps[*j].kron(&b.reps[*k]).expect("same field").scale(c);
                }
                out
            })
            .collect();
        Module { dim: n, reps }
    }

    /// Restriction to an `H`-stable subspace with basis `basis` (columns).
    pub fn restrict(&self, basis: &crate::Subspace) -> Result<Module> {
        let reps = self
            .reps
            .iter()
            .enumerate()
            .map(|(i, r)| {
                basis.restrict(r, basis).ok_or_else(|| Error::Verification {
                    what: "subspace is not H-stable".into(),
                    witness: Some(Witness::note(vec![i], "basis element moves the subspace")),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Module { dim: basis.dim(), reps })
    }

    /// Passes iff `f: self → target` commutes with every basis action.
    pub fn linear_check(&self, target: &Module, f: &Matrix, name: &str) -> Check {
        for i in 0..self.reps.len() {
            let lhs = &target.reps[i] * f;
            let rhs = f * &self.reps[i];
            if let Some(mut w) = Witness::between(&lhs, &rhs, &[self.dim], &[target.dim]) {
                w.input.insert(0, i);
                return Check::fail(name, "H-linearity", Some(w));
            }
        }
        Check::pass(name, "H-linearity")
    }

    pub fn is_linear(&self, target: &Module, f: &Matrix) -> bool {
        self.linear_check(target, f, "H-linear").passed()
    }
}

pub(crate) fn adjoint_rep(h: &Hopf, i: usize) -> Matrix {
    let mut out = Matrix::zeros(h.field(), h.dim(), h.dim());
    for (j, k, c) in h.coproduct_terms(i) {
        let right = h.rmul_of(&h.antipode_of(&h.basis(*k)));
        out = &out + &(h.lmul_basis(*j) * &right).scale(c);
    }
    out
}

/// `ψ_{M,N}(m⊗n) = R²·n ⊗ R¹·m`.
pub fn psi(qt: &QtHopf, m: &Module, n: &Module) -> Matrix {
    let f = m.field();
    let mut acc = Matrix::zeros(f, m.dim * n.dim, m.dim * n.dim);
    for (a, b, c) in qt.r_terms() {
        acc = &acc + &m.reps[*a].kron(&n.reps[*b]).expect("same field").scale(c);
    }
    &swap(f, m.dim, n.dim) * &acc
}

/// `ψ⁻¹(n⊗m) = S(R¹)·m ⊗ R²·n`, as a map `N⊗M → M⊗N`.
pub fn psi_inv(qt: &QtHopf, m: &Module, n: &Module) -> Matrix {
    let h = qt.hopf();
    let f = m.field();
    let mut acc = Matrix::zeros(f, m.dim * n.dim, m.dim * n.dim);
    for (a, b, c) in qt.r_terms() {
        let s = m.rep_of(&h.antipode_of(&h.basis(*a)));
        acc = &acc + &n.reps[*b].kron(&s).expect("same field").scale(c);
    }
    &swap(f, n.dim, m.dim) * &acc
}

/// An associative unital algebra in the module category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    module: Module,
    mul: Matrix,
    unit: Matrix,
}

/// Algebra and module-algebra checks: associativity, unit laws,
/// `h·(ab) = (h₁·a)(h₂·b)` and `h·1 = ε(h)1`.
pub fn algebra_checks(h: &Hopf, module: &Module, mul: &Matrix, unit: &Matrix) -> Result<Vec<Check>> {
    let n = module.dim;
    if (mul.rows(), mul.cols()) != (n, n * n) || (unit.rows(), unit.cols()) != (n, 1) {
        return Err(Error::Shape(format!("algebra maps do not match dimension {n}")));
    }
    let f = module.field();
    let id = Matrix::identity(f, n);
    let k = |a: &Matrix, b: &Matrix| a.kron(b).expect("same field");
    let assoc = Check::equal("associativity", "algebra axioms", &(mul * &k(mul, &id)), &(mul * &k(&id, mul)), &[n, n, n], &[n]);
    let left = mul * &k(unit, &id);
    let right = mul * &k(&id, unit);
    let unit_check = match Check::equal("unit", "algebra axioms", &left, &id, &[n], &[n]) {
        c if c.passed() => Check::equal("unit", "algebra axioms", &right, &id, &[n], &[n]),
        c => c,
    };
    let aa = Module::tensor(h, module, module);
    let mul_lin = aa.linear_check(module, mul, "multiplication is H-linear");
    let k1 = Module::trivial(h, 1);
    let unit_lin = k1.linear_check(module, unit, "unit is H-linear");
    Ok(vec![assoc, unit_check, mul_lin, unit_lin])
}

impl Algebra {
    pub fn new(h: &Hopf, module: Module, mul: Matrix, unit: Matrix) -> Result<Algebra> {
        for c in algebra_checks(h, &module, &mul, &unit)? {
            c.ensure()?;
        }
        Ok(Algebra { module, mul, unit })
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn mul(&self) -> &Matrix {
        &self.mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.col(0)
    }

    /// Matrix of `b ↦ a b`.
    pub fn lmul_of(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let col = Matrix::column(self.field(), a.to_vec());
        &self.mul * &col.kron(&Matrix::identity(self.field(), n)).expect("same field")
    }

    /// Matrix of `a ↦ a b`.
    pub fn rmul_of(&self, b: &[Scalar]) -> Matrix {
        let n = self.dim();
        let col = Matrix::column(self.field(), b.to_vec());
        &self.mul * &Matrix::identity(self.field(), n).kron(&col).expect("same field")
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let ab = Matrix::column(f, a.to_vec()).kron(&Matrix::column(f, b.to_vec())).expect("same field");
        (&self.mul * &ab).col(0)
    }

    /// `k` itself.
    pub fn ground(h: &Hopf) -> Algebra {
        let f = h.field();
        Algebra { module: Module::trivial(h, 1), mul: Matrix::identity(f, 1), unit: Matrix::identity(f, 1) }
    }

    /// `k^n` with componentwise product and trivial action.
    pub fn diagonal(h: &Hopf, n: usize) -> Algebra {
        let f = h.field();
        let mut mul = Matrix::zeros(f, n, n * n);
        for i in 0..n {
            mul.set(i, i * n + i, f.one());
        }
        let unit = Matrix::from_fn(f, n, 1, |_, _| f.one());
        Algebra { module: Module::trivial(h, n), mul, unit }
    }

    /// `H` with the adjoint action; the algebra underlying the transmutation.
    pub fn adjoint(h: &Hopf) -> Algebra {
        Algebra { module: Module::adjoint(h), mul: h.mul().clone(), unit: h.unit().clone() }
    }

    /// `End(V)` on the basis `E_ij` (index `i·n + j`) with
    /// `h·f = ρ(h₁) f ρ(S h₂)`.
    pub fn endomorphisms(h: &Hopf, v: &Module) -> Result<Algebra> {
        let f = h.field();
        let n = v.dim;
        let mut mul = Matrix::zeros(f, n * n, n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    mul.set(i * n + l, (i * n + j) * n * n + j * n + l, f.one());
                }
            }
        }
        let unit = Matrix::from_fn(f, n * n, 1, |r, _| if r / n == r % n { f.one() } else { f.zero() });
        let reps = (0..h.dim())
            .map(|i| {
                let mut out = Matrix::zeros(f, n * n, n * n);
                for (j, k, c) in h.coproduct_terms(i) {
                    let right = v.rep_of(&h.antipode_of(&h.basis(*k))).transpose();
                    out = &out + &v.reps[*j].kron(&right).expect("same field").scale(c);
                }
                out
            })
            .collect();
        Algebra::new(h, Module { dim: n * n, reps }, mul, unit)
    }

    /// The braided opposite `∇ ∘ ψ_{A,A}`.
    pub fn opposite(&self, qt: &QtHopf) -> Result<Algebra> {
        let mul = &self.mul * &psi(qt, &self.module, &self.module);
        Algebra::new(qt.hopf(), self.module.clone(), mul, self.unit.clone())
    }

    /// The braided tensor product `(∇_A ⊗ ∇_B)(A ⊗ ψ_{B,A} ⊗ B)` on `A⊗B`.
    pub fn braided_product(qt: &QtHopf, a: &Algebra, b: &Algebra) -> Result<Algebra> {
        let h = qt.hopf();
        let f = a.field();
        let (na, nb) = (a.dim(), b.dim());
        let mid = Matrix::identity(f, na)
            .kron(&psi(qt, &b.module, &a.module))?
            .kron(&Matrix::identity(f, nb))?;
        let mul = &a.mul.kron(&b.mul)? * &mid;
        let unit = a.unit.kron(&b.unit)?;
        Algebra::new(h, Module::tensor(h, &a.module, &b.module), mul, unit)
    }

    /// Passes iff `f: self → target` is multiplicative and unital.
    pub fn morphism_check(&self, target: &Algebra, f: &Matrix, name: &str) -> Check {
        let (n, m) = (self.dim(), target.dim());
        let lhs = f * &self.mul;
        let rhs = &target.mul * &f.kron(f).expect("same field");
        match Witness::between(&lhs, &rhs, &[n, n], &[m]) {
            Some(w) => Check::fail(name, "algebra morphism", Some(w)),
            None => Check::equal(name, "algebra morphism", &(f * &self.unit), &target.unit, &[1], &[m]),
        }
    }

    /// Restriction to a subalgebra given by a subspace; fails if the
    /// subspace is not closed under the product or does not contain 1.
    pub fn restrict(&self, h: &Hopf, sub: &crate::Subspace) -> Result<Algebra> {
        let module = self.module.restrict(sub)?;
        let b = sub.basis();
        let prod = &self.mul * &b.kron(b)?;
        let mul = sub.coords(&prod).ok_or_else(|| Error::Verification { what: "subspace closed under product".into(), witness: None })?;
        let unit = sub.coords(&self.unit).ok_or_else(|| Error::Verification { what: "subspace contains 1".into(), witness: None })?;
        Algebra::new(h, module, mul, unit)
    }

    /// `Z(A)`-style centralizer: elements commuting with every column of `of`.
    pub fn centralizer(&self, of: &Matrix) -> crate::Subspace {
        let blocks: Vec<Matrix> = (0..of.cols())
            .map(|j| {
                let b = of.col(j);
                &self.rmul_of(&b) - &self.lmul_of(&b)
            })
            .collect();
        if blocks.is_empty() {
            return crate::Subspace::whole(self.field(), self.dim());
        }
        crate::Subspace::kernel(&Matrix::vstack(&blocks).expect("same width"))
    }
}

/// `A # H` on `A⊗H` with `(a#h)(b#g) = a(h₁·b) # h₂g` and the right
/// `H`-coaction `a#h ↦ (a#h₁) ⊗ h₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashProduct {
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Matrix,
    pub coaction: Matrix,
}

impl SmashProduct {
    pub fn new(h: &Hopf, a: &Algebra) -> Result<SmashProduct> {
        let f = h.field();
        let (na, d) = (a.dim(), h.dim());
        // a ⊗ h ⊗ b ⊗ g -> a ⊗ h₁ ⊗ h₂ ⊗ b ⊗ g -> a ⊗ h₁ ⊗ b ⊗ h₂ ⊗ g
        //   -> a ⊗ (h₁·b) ⊗ h₂ g -> ab' ⊗ h₂g
        let ida = Matrix::identity(f, na);
        let idh = Matrix::identity(f, d);
        let split = ida.kron(h.comul())?.kron(&ida)?.kron(&idh)?;
        let shuffle = permutation(f, &[na, d, d, na, d], &[0, 1, 3, 2, 4]);
        let act = ida.kron(&a.module.action())?.kron(h.mul())?;
        let mul = &(&(&a.mul.kron(&idh)? * &act) * &shuffle) * &split;
        let unit = a.unit.kron(h.unit())?;
        let coaction = ida.kron(h.comul())?;
        let sp = SmashProduct { dim: na * d, mul, unit, coaction };
        for c in sp.checks(h) {
            c.ensure()?;
        }
        Ok(sp)
    }

    /// Associativity, unit, coassociativity, counit and multiplicativity of
    /// the coaction (`ρ(xy) = ρ(x)ρ(y)` in `(A#H)⊗H`).
    pub fn checks(&self, h: &Hopf) -> Vec<Check> {
        let f = h.field();
        let (n, d) = (self.dim, h.dim());
        let id = Matrix::identity(f, n);
        let idh = Matrix::identity(f, d);
        let k = |a: &Matrix, b: &Matrix| a.kron(b).expect("same field");
        let assoc = Check::equal("smash associativity", "smash product", &(&self.mul * &k(&self.mul, &id)), &(&self.mul * &k(&id, &self.mul)), &[n, n, n], &[n]);
        let unit = Check::equal("smash unit", "smash product", &(&self.mul * &k(&self.unit, &id)), &id, &[n], &[n]);
        let coassoc = Check::equal(
            "smash coaction coassociative",
            "smash product",
            &(&k(&self.coaction, &idh) * &self.coaction),
            &(&k(&id, h.comul()) * &self.coaction),
            &[n],
            &[n, d, d],
        );
        let counit = Check::equal("smash coaction counital", "smash product", &(&k(&id, h.counit()) * &self.coaction), &id, &[n], &[n]);
        let shuffle = permutation(f, &[n, d, n, d], &[0, 2, 1, 3]);
        let lhs = &self.coaction * &self.mul;
        let rhs = &(&k(&self.mul, h.mul()) * &shuffle) * &k(&self.coaction, &self.coaction);
        let mult = Check::equal("smash coaction multiplicative", "smash product", &lhs, &rhs, &[n, n], &[n, d]);
        vec![assoc, unit, coassoc, counit, mult]
    }
}

/// The right `H*`-coaction `m ↦ Σ_i (e_i·m) ⊗ e*_i` equivalent to an action;
/// rows are indexed `m·d + i`.
pub fn dual_coaction(h: &Hopf, m: &Module) -> Matrix {
    let (n, d) = (m.dim, h.dim());
    Matrix::from_fn(h.field(), n * d, n, |r, c| m.reps[r % d].get(r / d, c).clone())
}

/// Inverse of [`dual_coaction`].
pub fn action_from_dual_coaction(h: &Hopf, n: usize, coaction: &Matrix) -> Result<Module> {
    let d = h.dim();
    if (coaction.rows(), coaction.cols()) != (n * d, n) {
        return Err(Error::Shape("coaction has the wrong shape".into()));
    }
    let reps = (0..d).map(|i| Matrix::from_fn(h.field(), n, n, |r, c| coaction.get(r * d + i, c).clone())).collect();
    Module::from_reps(h, reps)
}
