//! Left-left Yetter-Drinfeld modules, their braiding `φ`, and the two lifts
//! of an `H`-module through the R-matrix.

use crate::hopf::Hopf;
use crate::linalg::{permutation, swap, Field, Matrix, Subspace};
use crate::modules::Module;
use crate::qt::QtHopf;
use crate::report::{Check, Witness};
use crate::{Error, Result};

/// An `H`-module with a left coaction `λ: M → H⊗M` (rows indexed
/// `h·dim M + m`) satisfying `λ(h·m) = h₁m₋₁S(h₃) ⊗ h₂·m₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    module: Module,
    coaction: Matrix,
}

/// Comodule laws and the Yetter-Drinfeld compatibility for `(module, coaction)`.
pub fn yd_checks(h: &Hopf, module: &Module, coaction: &Matrix) -> Result<Vec<Check>> {
    let (n, d) = (module.dim(), h.dim());
    if (coaction.rows(), coaction.cols()) != (d * n, n) {
        return Err(Error::Shape(format!("coaction is {}x{}, expected {}x{n}", coaction.rows(), coaction.cols(), d * n)));
    }
    let f = h.field();
    let id = Matrix::identity(f, n);
    let coassoc = Check::equal(
        "coaction coassociative",
        "comodule axioms",
        &(&h.comul().kron(&id)? * coaction),
        &(&h.identity().kron(coaction)? * coaction),
        &[n],
        &[d, d, n],
    );
    let counit = Check::equal("coaction counital", "comodule axioms", &(&h.counit().kron(&id)? * coaction), &id, &[n], &[n]);
    Ok(vec![coassoc, counit, compat_check(h, module, coaction)])
}

fn compat_check(h: &Hopf, module: &Module, coaction: &Matrix) -> Check {
    let n = module.dim();
    for x in 0..h.dim() {
        let lhs = coaction * module.rep(x);
        let mut rhs = Matrix::zeros(h.field(), h.dim() * n, h.dim() * n);
        for (a, b, c, coef) in h.coproduct3_terms(x) {
            let outer = h.lmul_basis(a) * &h.rmul_of(&h.antipode_of(&h.basis(c)));
            rhs = &rhs + &outer.kron(module.rep(b)).expect("same field").scale(&coef);
        }
        let rhs = &rhs * coaction;
        if let Some(mut w) = Witness::between(&lhs, &rhs, &[n], &[h.dim(), n]) {
            w.input.insert(0, x);
            return Check::fail("Yetter-Drinfeld compatibility", "YD condition", Some(w));
        }
    }
    Check::pass("Yetter-Drinfeld compatibility", "YD condition")
}

impl YdModule {
    pub fn new(h: &Hopf, module: Module, coaction: Matrix) -> Result<YdModule> {
        for c in yd_checks(h, &module, &coaction)? {
            c.ensure()?;
        }
        Ok(YdModule { module, coaction })
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    /// `m ↦ 1 ⊗ m`.
    pub fn trivial_coaction(h: &Hopf, module: Module) -> YdModule {
        let coaction = h.unit().kron(&Matrix::identity(h.field(), module.dim())).expect("same field");
        YdModule { module, coaction }
    }

    /// `λ₁(m) = R² ⊗ R¹·m`.
    pub fn lift_lambda1(qt: &QtHopf, module: &Module) -> Result<YdModule> {
        let h = qt.hopf();
        let n = module.dim();
        let mut coaction = Matrix::zeros(h.field(), h.dim() * n, n);
        for (a, b, c) in qt.r_terms() {
            let e = Matrix::unit_column(h.field(), h.dim(), *b);
            coaction = &coaction + &e.kron(module.rep(*a))?.scale(c);
        }
        YdModule::new(h, module.clone(), coaction)
    }

    /// `λ₂(m) = S(R¹) ⊗ R²·m`.
    pub fn lift_lambda2(qt: &QtHopf, module: &Module) -> Result<YdModule> {
        let h = qt.hopf();
        let n = module.dim();
        let mut coaction = Matrix::zeros(h.field(), h.dim() * n, n);
        for (a, b, c) in qt.r_terms() {
            let s = Matrix::column(h.field(), h.antipode_of(&h.basis(*a)));
            coaction = &coaction + &s.kron(module.rep(*b))?.scale(c);
        }
        YdModule::new(h, module.clone(), coaction)
    }

    /// `H` with the adjoint action and the coaction `∆`.
    pub fn adjoint_regular(h: &Hopf) -> YdModule {
        YdModule::new(h, Module::adjoint(h), h.comul().clone()).expect("adjoint-regular module is Yetter-Drinfeld")
    }

    /// Diagonal action and coaction `x⊗y ↦ x₋₁y₋₁ ⊗ x₀ ⊗ y₀`.
    pub fn tensor(h: &Hopf, x: &YdModule, y: &YdModule) -> Result<YdModule> {
        let coaction = tensor_coaction(h, &x.coaction, x.dim(), &y.coaction, y.dim());
        YdModule::new(h, Module::tensor(h, &x.module, &y.module), coaction)
    }

    /// Restriction to a subspace stable under action and coaction.
    pub fn restrict(&self, h: &Hopf, sub: &Subspace) -> Result<YdModule> {
        let module = self.module.restrict(sub)?;
        let coords = left_coaction_coords(h.dim(), sub, &(&self.coaction * sub.basis()))?;
        YdModule::new(h, module, coords)
    }

    /// Passes iff `f: self → target` intertwines the coactions.
    pub fn colinear_check(&self, h: &Hopf, target: &YdModule, f: &Matrix, name: &str) -> Check {
        let lhs = &target.coaction * f;
        let rhs = &h.identity().kron(f).expect("same field") * &self.coaction;
        Check::equal(name, "H-colinearity", &lhs, &rhs, &[self.dim()], &[h.dim(), target.dim()])
    }
}

/// The diagonal coaction `x⊗y ↦ x₋₁y₋₁ ⊗ x₀ ⊗ y₀` built from two coaction
/// matrices, without any verification.
pub fn tensor_coaction(h: &Hopf, x: &Matrix, nx: usize, y: &Matrix, ny: usize) -> Matrix {
    let d = h.dim();
    let mut out = Matrix::zeros(h.field(), d * nx * ny, nx * ny);
    for i in 0..nx {
        let xs = x.col_terms(i);
        for j in 0..ny {
            for (rx, a) in &xs {
                let (p, xi) = (rx / nx, rx % nx);
                for (ry, b) in y.col_terms(j) {
                    let (q, yj) = (ry / ny, ry % ny);
                    let ab = a * &b;
                    for (r, c) in h.mul().col_terms(p * d + q) {
                        out.add_at((r * nx + xi) * ny + yj, i * ny + j, &(&ab * &c));
                    }
                }
            }
        }
    }
    out
}

/// Coordinates of a left coaction on a subspace: `image` is the coaction
/// applied to the basis of `sub` (rows `h·n + m`), the result has rows
/// `h·dim sub + j`.
pub fn left_coaction_coords(d: usize, sub: &Subspace, image: &Matrix) -> Result<Matrix> {
    let (n, k) = (sub.ambient(), sub.dim());
    if k == 0 {
        return Ok(Matrix::zeros(image.field(), 0, 0));
    }
    let mut blocks = Vec::with_capacity(d);
    for x in 0..d {
        let rows: Vec<usize> = (x * n..(x + 1) * n).collect();
        let block = sub.coords(&image.select_rows(&rows)).ok_or_else(|| Error::Verification {
            what: "subspace is not a subcomodule".into(),
            witness: Some(Witness::note(vec![x], "coaction leaves the subspace")),
        })?;
        blocks.push(block);
    }
    Ok(Matrix::vstack(&blocks)?)
}

/// Right-handed version of [`left_coaction_coords`]: rows `m·d + h` in,
/// rows `j·d + h` out.
pub fn right_coaction_coords(d: usize, sub: &Subspace, image: &Matrix) -> Result<Matrix> {
    let f = image.field();
    let left = left_coaction_coords(d, sub, &(&swap(f, sub.ambient(), d) * image))?;
    Ok(&swap(f, d, sub.dim()) * &left)
}

/// `φ(m⊗n) = m₋₁·n ⊗ m₀`, a map `X⊗Y → Y⊗X`.
pub fn phi(h: &Hopf, x: &YdModule, y: &YdModule) -> Matrix {
    let f = h.field();
    let (nx, ny) = (x.dim(), y.dim());
    let coact = x.coaction.kron(&Matrix::identity(f, ny)).expect("same field");
    let flip = h.identity().kron(&swap(f, nx, ny)).expect("same field");
    let act = y.module.action().kron(&Matrix::identity(f, nx)).expect("same field");
    &(&act * &flip) * &coact
}

/// `φ⁻¹(n⊗m) = m₀ ⊗ S⁻¹(m₋₁)·n`, a map `Y⊗X → X⊗Y`, built from `S⁻¹`.
pub fn phi_inv(h: &Hopf, x: &YdModule, y: &YdModule) -> Matrix {
    let f = h.field();
    let (nx, ny) = (x.dim(), y.dim());
    let coact = Matrix::identity(f, ny).kron(&x.coaction).expect("same field");
    let order = permutation(f, &[ny, h.dim(), nx], &[2, 1, 0]);
    let twisted = &y.module.action() * &h.antipode_inv().kron(&Matrix::identity(f, ny)).expect("same field");
    let act = Matrix::identity(f, nx).kron(&twisted).expect("same field");
    &(&act * &order) * &coact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{sweedler_description, sweedler_r, sweedler_rep2};

    #[test]
    fn tensor_coaction_matches_the_dense_formula() {
        let f = Field::Rational;
        let h = Hopf::build(sweedler_description(f).unwrap()).unwrap();
        let qt = QtHopf::new(h.clone(), sweedler_r(f, 1).unwrap()).unwrap();
        let v = Module::from_reps(&h, sweedler_rep2(f)).unwrap();
        let x = YdModule::lift_lambda1(&qt, &v).unwrap();
        let y = YdModule::adjoint_regular(&h);
        let (nx, ny, d) = (x.dim(), y.dim(), h.dim());
        let both = x.coaction().kron(y.coaction()).unwrap();
        let order = permutation(f, &[d, nx, d, ny], &[0, 2, 1, 3]);
        let dense = &h.mul().kron(&Matrix::identity(f, nx * ny)).unwrap() * &(&order * &both);
        assert_eq!(tensor_coaction(&h, x.coaction(), nx, y.coaction(), ny), dense);
        let t = YdModule::tensor(&h, &x, &y).unwrap();
        assert_eq!(t.dim(), 8);
        assert!(phi_inv(&h, &x, &y).matmul(&phi(&h, &x, &y)).unwrap().is_identity());
    }
}
