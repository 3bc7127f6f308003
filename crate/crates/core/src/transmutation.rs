//! The transmuted braided Hopf algebra `_R H` in the module category, its
//! half-braiding, and the dictionary between Yetter-Drinfeld modules and
//! cocommutative `_R H`-bicomodules.

use crate::hopf::Hopf;
use crate::linalg::{permutation, swap, Matrix};
use crate::modules::{algebra_checks, psi, Algebra, Module};
use crate::qt::QtHopf;
use crate::report::Check;
use crate::yd::YdModule;
use crate::{Error, Result};

/// `_R H`: the algebra `H` with the adjoint action, the braided coproduct
/// `∆̲(x) = x₁S(R²) ⊗ R¹▷x₂`, counit `ε` and antipode `S̲(x) = R²S(R¹▷x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transmuted {
    algebra: Algebra,
    comul: Matrix,
    counit: Matrix,
    antipode: Matrix,
}

fn k(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b).expect("same field")
}

/// The five published expressions for `∆̲`, in order:
/// `x₁S(R²) ⊗ R¹▷x₂`, `x₁S(r²)S(R²) ⊗ R¹x₂S(r¹)`, `x₁r²S(R²) ⊗ R¹x₂r¹`,
/// `r²x₂S(R²) ⊗ R¹r¹x₁`, `R²▷x₂ ⊗ R¹x₁`.
pub fn braided_coproduct_forms(qt: &QtHopf) -> [Matrix; 5] {
    let h = qt.hopf();
    let f = h.field();
    let d = h.dim();
    let ad = Module::adjoint(h);
    let s_of = |i: usize| h.antipode_of(&h.basis(i));
    let flip = swap(f, d, d);
    let zero = || Matrix::zeros(f, d * d, d * d);
    let (mut f1, mut f2, mut f3, mut f4, mut f5) = (zero(), zero(), zero(), zero(), zero());
    for (a, b, c) in qt.r_terms() {
        let right_s = h.rmul_of(&s_of(*b));
        f1 = &f1 + &k(&right_s, ad.rep(*a)).scale(c);
        f5 = &f5 + &(&flip * &k(h.lmul_basis(*a), ad.rep(*b))).scale(c);
        for (a2, b2, c2) in qt.r_terms() {
            let cc = c * c2;
            // second copy r = (a2, b2)
            let left2 = &right_s * &h.rmul_of(&s_of(*b2));
            let right2 = h.lmul_basis(*a) * &h.rmul_of(&s_of(*a2));
            f2 = &f2 + &k(&left2, &right2).scale(&cc);
            let left3 = &right_s * h.rmul_basis(*b2);
            let right3 = h.lmul_basis(*a) * h.rmul_basis(*a2);
            f3 = &f3 + &k(&left3, &right3).scale(&cc);
            // r²x₂S(R²) ⊗ R¹r¹x₁ applied to x₁ ⊗ x₂ after a flip
            let left4 = h.lmul_basis(*b2) * &right_s;
            let right4 = h.lmul_of(&h.mul_elems(&h.basis(*a), &h.basis(*a2)));
            f4 = &f4 + &(&k(&left4, &right4) * &flip).scale(&cc);
        }
    }
    [f1, f2, f3, f4, f5].map(|m| &m * h.comul())
}

impl Transmuted {
    pub fn new(qt: &QtHopf) -> Result<Transmuted> {
        let t = Transmuted::unchecked(qt);
        for c in t.checks(qt) {
            c.ensure()?;
        }
        Ok(t)
    }

    fn unchecked(qt: &QtHopf) -> Transmuted {
        let h = qt.hopf();
        let f = h.field();
        let d = h.dim();
        let ad = Module::adjoint(h);
        let [comul, ..] = braided_coproduct_forms(qt);
        let mut antipode = Matrix::zeros(f, d, d);
        for (a, b, c) in qt.r_terms() {
            antipode = &antipode + &(&(h.lmul_basis(*b) * h.antipode()) * ad.rep(*a)).scale(c);
        }
        Transmuted { algebra: Algebra::adjoint(h), comul, counit: h.counit().clone(), antipode }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn module(&self) -> &Module {
        self.algebra.module()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn comul(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn mul(&self) -> &Matrix {
        self.algebra.mul()
    }

    pub fn unit(&self) -> &Matrix {
        self.algebra.unit()
    }

    /// Every structural claim about `_R H`, one check each.
    pub fn checks(&self, qt: &QtHopf) -> Vec<Check> {
        let h = qt.hopf();
        let d = h.dim();
        let id = h.identity();
        let anchor = "transmutation";
        let mut out = Vec::new();
        let ad = self.module();

        match algebra_checks(h, ad, self.mul(), self.unit()) {
            Ok(cs) => {
                let ok = cs.iter().all(|c| c.passed());
                out.push(Check::flag("adjoint action makes H a module algebra", anchor, ok));
            }
            Err(e) => out.push(Check::fail("adjoint action makes H a module algebra", anchor, None).with_detail(e.to_string())),
        }

        let forms = braided_coproduct_forms(qt);
        let mut agree = Check::pass("five expressions for the braided coproduct agree", anchor);
        for (i, form) in forms.iter().enumerate().skip(1) {
            let c = Check::equal("five expressions for the braided coproduct agree", anchor, &forms[0], form, &[d], &[d, d]);
            if !c.passed() {
                agree = c.with_detail(format!("expression {} differs from the first", i + 1));
                break;
            }
        }
        out.push(agree);

        let bb = Module::tensor(h, ad, ad);
        out.push(ad.linear_check(&bb, &self.comul, "braided coproduct is H-linear"));
        out.push(ad.linear_check(&Module::trivial(h, 1), &self.counit, "braided counit is H-linear"));
        out.push(ad.linear_check(ad, &self.antipode, "braided antipode is H-linear"));

        out.push(Check::equal(
            "braided coproduct coassociative",
            anchor,
            &(&k(&self.comul, &id) * &self.comul),
            &(&k(&id, &self.comul) * &self.comul),
            &[d],
            &[d, d, d],
        ));
        let left = &k(&self.counit, &id) * &self.comul;
        let right = &k(&id, &self.counit) * &self.comul;
        out.push(match Check::equal("braided counit law", anchor, &left, &id, &[d], &[d]) {
            c if c.passed() => Check::equal("braided counit law", anchor, &right, &id, &[d], &[d]),
            c => c,
        });

        let mid = k(&k(&id, &psi(qt, ad, ad)), &id);
        let lhs = &self.comul * self.mul();
        let rhs = &(&k(self.mul(), self.mul()) * &mid) * &k(&self.comul, &self.comul);
        let mut bialg = Check::equal("braided bialgebra law", anchor, &lhs, &rhs, &[d, d], &[d, d]);
        if bialg.passed() {
            bialg = Check::equal("braided bialgebra law", anchor, &(&self.counit * self.mul()), &k(&self.counit, &self.counit), &[d, d], &[1]);
        }
        if bialg.passed() {
            bialg = Check::equal("braided bialgebra law", anchor, &(&self.comul * self.unit()), &k(self.unit(), self.unit()), &[1], &[d, d]);
        }
        out.push(bialg);

        let eps = self.unit() * &self.counit;
        let l = &(self.mul() * &k(&self.antipode, &id)) * &self.comul;
        let r = &(self.mul() * &k(&id, &self.antipode)) * &self.comul;
        out.push(match Check::equal("braided antipode law", anchor, &l, &eps, &[d], &[d]) {
            c if c.passed() => Check::equal("braided antipode law", anchor, &r, &eps, &[d], &[d]),
            c => c,
        });
        out
    }

    /// `σ(x⊗m) = r²R¹·m ⊗ r¹xR²`, a map `_R H ⊗ M → M ⊗ _R H`.
    pub fn sigma(&self, qt: &QtHopf, m: &Module) -> Matrix {
        let h = qt.hopf();
        let f = h.field();
        let (d, n) = (h.dim(), m.dim());
        let mut acc = Matrix::zeros(f, d * n, d * n);
        for (a, b, c) in qt.r_terms() {
            for (a2, b2, c2) in qt.r_terms() {
                let on_x = h.lmul_basis(*a2) * h.rmul_basis(*b);
                let on_m = m.rep_of(&h.mul_elems(&h.basis(*b2), &h.basis(*a)));
                acc = &acc + &k(&on_x, &on_m).scale(&(c * c2));
            }
        }
        &swap(f, d, n) * &acc
    }
}

/// A module with left and right `_R H`-coactions: `χ⁻: M → B⊗M` (rows
/// `b·n + m`) and `χ⁺: M → M⊗B` (rows `m·d + b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    pub module: Module,
    pub left: Matrix,
    pub right: Matrix,
}

/// Comodule laws and `H`-linearity for a left `_R H`-coaction.
pub fn left_comodule_checks(t: &Transmuted, h: &Hopf, module: &Module, left: &Matrix) -> Vec<Check> {
    let (n, d) = (module.dim(), h.dim());
    let f = h.field();
    let id = Matrix::identity(f, n);
    let anchor = "comodule in the module category";
    vec![
        Check::equal("left coaction coassociative", anchor, &(&k(t.comul(), &id) * left), &(&k(&h.identity(), left) * left), &[n], &[d, d, n]),
        Check::equal("left coaction counital", anchor, &(&k(t.counit(), &id) * left), &id, &[n], &[n]),
        module.linear_check(&Module::tensor(h, t.module(), module), left, "left coaction is H-linear"),
    ]
}

/// Comodule laws and `H`-linearity for a right `_R H`-coaction.
pub fn right_comodule_checks(t: &Transmuted, h: &Hopf, module: &Module, right: &Matrix) -> Vec<Check> {
    let (n, d) = (module.dim(), h.dim());
    let f = h.field();
    let id = Matrix::identity(f, n);
    let anchor = "comodule in the module category";
    vec![
        Check::equal("right coaction coassociative", anchor, &(&k(right, &h.identity()) * right), &(&k(&id, t.comul()) * right), &[n], &[n, d, d]),
        Check::equal("right coaction counital", anchor, &(&k(&id, t.counit()) * right), &id, &[n], &[n]),
        module.linear_check(&Module::tensor(h, module, t.module()), right, "right coaction is H-linear"),
    ]
}

impl Bicomodule {
    /// Both comodule structures plus `(B⊗χ⁺)χ⁻ = (χ⁻⊗B)χ⁺`.
    pub fn checks(&self, t: &Transmuted, h: &Hopf) -> Vec<Check> {
        let (n, d) = (self.module.dim(), h.dim());
        let mut out = left_comodule_checks(t, h, &self.module, &self.left);
        out.extend(right_comodule_checks(t, h, &self.module, &self.right));
        out.push(Check::equal(
            "left and right coactions commute",
            "bicomodule",
            &(&k(&h.identity(), &self.right) * &self.left),
            &(&k(&self.left, &h.identity()) * &self.right),
            &[n],
            &[d, n, d],
        ));
        out
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// `χ⁺ = σ ∘ χ⁻`.
    pub fn cocommutative_check(&self, t: &Transmuted, qt: &QtHopf) -> Check {
        let d = qt.hopf().dim();
        let lhs = &t.sigma(qt, &self.module) * &self.left;
        Check::equal("bicomodule is cocommutative", "cocommutative bicomodule", &self.right, &lhs, &[self.dim()], &[self.dim(), d])
    }

    /// Both coactions trivial: `m ↦ 1⊗m`, `m ↦ m⊗1`.
    pub fn trivial(h: &Hopf, module: Module) -> Bicomodule {
        let id = Matrix::identity(h.field(), module.dim());
        Bicomodule { left: k(h.unit(), &id), right: k(&id, h.unit()), module }
    }
}

/// Yetter-Drinfeld module to bicomodule:
/// `χ⁻(m) = m₋₁S(R²) ⊗ R¹·m₀`, `χ⁺(m) = R²·m₀ ⊗ R¹m₋₁`.
pub fn yd_to_bicomodule(qt: &QtHopf, z: &YdModule) -> Bicomodule {
    let h = qt.hopf();
    let f = h.field();
    let (n, d) = (z.dim(), h.dim());
    let m = z.module();
    let mut left = Matrix::zeros(f, d * n, d * n);
    let mut right = Matrix::zeros(f, d * n, d * n);
    for (a, b, c) in qt.r_terms() {
        left = &left + &k(&h.rmul_of(&h.antipode_of(&h.basis(*b))), m.rep(*a)).scale(c);
        right = &right + &k(h.lmul_basis(*a), m.rep(*b)).scale(c);
    }
    let left = &left * z.coaction();
    let right = &(&swap(f, d, n) * &right) * z.coaction();
    Bicomodule { module: m.clone(), left, right }
}

/// Bicomodule to Yetter-Drinfeld module via `λ(n) = n₍₋₁₎R² ⊗ R¹·n₍₀₎`.
pub fn bicomodule_to_yd(qt: &QtHopf, b: &Bicomodule) -> Result<YdModule> {
    YdModule::new(qt.hopf(), b.module.clone(), coaction_from_left(qt, b))
}

fn coaction_from_left(qt: &QtHopf, b: &Bicomodule) -> Matrix {
    let h = qt.hopf();
    let n = b.dim();
    let mut acc = Matrix::zeros(h.field(), h.dim() * n, h.dim() * n);
    for (x, y, c) in qt.r_terms() {
        acc = &acc + &k(h.rmul_basis(*y), b.module.rep(*x)).scale(c);
    }
    &acc * &b.left
}

/// The right-handed recovery `λ(n) = S(R¹)n₍₁₎ ⊗ R²·n₍₀₎`.
pub fn coaction_from_right(qt: &QtHopf, b: &Bicomodule) -> Matrix {
    let h = qt.hopf();
    let f = h.field();
    let (n, d) = (b.dim(), h.dim());
    let mut acc = Matrix::zeros(f, d * n, d * n);
    for (x, y, c) in qt.r_terms() {
        acc = &acc + &k(&h.lmul_of(&h.antipode_of(&h.basis(*x))), b.module.rep(*y)).scale(c);
    }
    &(&acc * &swap(f, n, d)) * &b.right
}

/// Passes iff the two recoveries of `λ` from a bicomodule agree.
pub fn recovery_check(qt: &QtHopf, b: &Bicomodule) -> Check {
    let d = qt.hopf().dim();
    Check::equal(
        "left and right recoveries of the coaction agree",
        "YD-bicomodule dictionary",
        &coaction_from_left(qt, b),
        &coaction_from_right(qt, b),
        &[b.dim()],
        &[d, b.dim()],
    )
}

/// `φ_{M,N}(m⊗n) = m₍₋₁₎R²·n ⊗ R¹·m₍₀₎` computed from the bicomodule data.
pub fn transferred_phi(qt: &QtHopf, m: &Bicomodule, n: &Bicomodule) -> Result<Matrix> {
    let h = qt.hopf();
    let f = h.field();
    let (nm, nn, d) = (m.dim(), n.dim(), h.dim());
    if m.module.field() != f {
        return Err(Error::Shape("field mismatch".into()));
    }
    let spread = k(&m.left, &Matrix::identity(f, nn));
    let order = permutation(f, &[d, nm, nn], &[0, 2, 1]);
    let act = n.module.action();
    let mut acc = Matrix::zeros(f, nn * nm, d * nn * nm);
    for (a, b, c) in qt.r_terms() {
        let on_n = &act * &k(h.rmul_basis(*b), &Matrix::identity(f, nn));
        acc = &acc + &k(&on_n, m.module.rep(*a)).scale(c);
    }
    Ok(&(&acc * &order) * &spread)
}
