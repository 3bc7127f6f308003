//! Azumaya algebras in the module category: the evaluation maps, the
//! coinvariant subalgebra `A₀`, the `H*`-Galois condition, the centralizer
//! `π(A)` with its Miyashita-Ulbrich coaction, the `A^e`-module and
//! Yetter-Drinfeld structures on `A ⊗ Z`, and the invariants `(A ⊗ Z)^A`.

use crate::galois::{cotensor_coaction_forms, cotensor_yd, ComoduleAlgebra};
use crate::hopf::Hopf;
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::modules::{dual_coaction, Algebra, Module};
use crate::qt::QtHopf;
use crate::report::{Check, Witness};
use crate::transmutation::{yd_to_bicomodule, Transmuted};
use crate::yd::{tensor_coaction, YdModule};
use crate::{Error, Result};

fn k(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b).expect("same field")
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

/// `F(a⊗b̄)(c) = a (R²·c)(R¹·b)` and `G(ā⊗b)(c) = (R²·a)(R¹·c) b`, each as
/// an `n² × n²` matrix whose column `a·n + b` is the row-major flattening of
/// the endomorphism.
pub fn evaluation_maps(qt: &QtHopf, a: &Algebra) -> (Matrix, Matrix) {
    let h = qt.hopf();
    let f = h.field();
    let n = a.dim();
    let rep = |x: usize| a.module().rep(x);
    let mut fcols = Vec::with_capacity(n * n);
    let mut gcols = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (ex, ey) = (Matrix::unit_column(f, n, x), Matrix::unit_column(f, n, y));
            let mut fm = Matrix::zeros(f, n, n);
            let mut gm = Matrix::zeros(f, n, n);
            for (r1, r2, c) in qt.r_terms() {
                let b = (rep(*r1) * &ey).col(0);
                fm = &fm + &(&(&a.lmul_of(&ex.col(0)) * &a.rmul_of(&b)) * rep(*r2)).scale(c);
                let left = (rep(*r2) * &ex).col(0);
                gm = &gm + &(&(&a.lmul_of(&left) * &a.rmul_of(&ey.col(0))) * rep(*r1)).scale(c);
            }
            fcols.push(flatten(&fm));
            gcols.push(flatten(&gm));
        }
    }
    let assemble = |cols: Vec<Vec<Scalar>>| Matrix::from_fn(f, n * n, n * n, |r, c| cols[c][r].clone());
    (assemble(fcols), assemble(gcols))
}

/// An algebra whose two evaluation maps are bijective.
#[derive(Clone, Debug)]
pub struct Azumaya {
    pub algebra: Algebra,
    /// `A ⊗ Ā` with the braided product.
    pub enveloping: Algebra,
    pub f_map: Matrix,
    pub g_map: Matrix,
}

impl Azumaya {
    pub fn certify(qt: &QtHopf, a: &Algebra) -> Result<Azumaya> {
        let (f_map, g_map) = evaluation_maps(qt, a);
        let needed = a.dim() * a.dim();
        for (map, m) in [("F", &f_map), ("G", &g_map)] {
            let rank = m.rank();
            if rank < needed {
                return Err(Error::NotAzumaya { map, rank, needed });
            }
        }
        let enveloping = Algebra::braided_product(qt, a, &a.opposite(qt)?)?;
        Ok(Azumaya { algebra: a.clone(), enveloping, f_map, g_map })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// `A₀ = {a | h·a = ε(h)a}` together with its subalgebra structure.
pub fn coinvariants_a0(h: &Hopf, a: &Algebra) -> Result<(Subspace, Algebra)> {
    let n = a.dim();
    let id = Matrix::identity(h.field(), n);
    let blocks: Vec<Matrix> = (0..h.dim()).map(|i| a.module().rep(i) - &id.scale(h.counit_of(i))).collect();
    let sub = Subspace::kernel(&Matrix::vstack(&blocks)?);
    let alg = a.restrict(h, &sub)?;
    Ok((sub, alg))
}

/// `A` as an `H*`-Galois extension of `A₀`.
#[derive(Clone, Debug)]
pub struct HstarGalois {
    pub a0: Subspace,
    /// `a⊗b ↦ a b₍₀₎ ⊗ b₍₁₎` on `A⊗A`, rows `m·d + i`.
    pub can: Matrix,
    /// `can⁻¹(1 ⊗ e*_j)` for each `j`, as vectors in `A⊗A`.
    pub inverse_at: Vec<Vec<Scalar>>,
}

/// Decides whether the `H*`-Galois map `A ⊗_{A₀} A → A ⊗ H*` is bijective,
/// with `A ⊗_{A₀} A` realized as `A⊗A` modulo `xb⊗y − x⊗by`.
pub fn hstar_galois(h: &Hopf, a: &Algebra) -> Result<HstarGalois> {
    let f = h.field();
    let (n, d) = (a.dim(), h.dim());
    let (a0, _) = coinvariants_a0(h, a)?;
    let rho = dual_coaction(h, a.module());
    let id = Matrix::identity(f, n);
    let can = &k(a.mul(), &Matrix::identity(f, d)) * &k(&id, &rho);
    let relations: Vec<Matrix> = (0..a0.dim())
        .map(|j| {
            let b = a0.basis().col(j);
            &k(&a.rmul_of(&b), &id) - &k(&id, &a.lmul_of(&b))
        })
        .collect();
    let relations = Subspace::span(&Matrix::hstack(&relations)?);
    let kernel = Subspace::kernel(&can);
    let needed = n * d;
    if n * n - relations.dim() != needed {
        return Err(Error::NotGalois { rank: n * n - relations.dim(), needed });
    }
    let rank = can.rank();
    if rank != needed || kernel != relations {
        return Err(Error::NotGalois { rank, needed });
    }
    let mut inverse_at = Vec::with_capacity(d);
    for j in 0..d {
        let target = k(a.unit(), &Matrix::unit_column(f, d, j));
        let u = can.solve(&target)?.ok_or(Error::NotGalois { rank, needed })?;
        inverse_at.push(u.col(0));
    }
    Ok(HstarGalois { a0, can, inverse_at })
}

/// `π(A) = C_A(A₀)` with the restricted action and the coaction dual to the
/// Miyashita-Ulbrich action `c ↼ h* = xᵢ(h*) c yᵢ(h*)`.
#[derive(Clone, Debug)]
pub struct PiA {
    pub sub: Subspace,
    pub algebra: Algebra,
    pub yd: YdModule,
}

pub fn compute_pi(h: &Hopf, a: &Algebra, g: &HstarGalois) -> Result<PiA> {
    let f = h.field();
    let n = a.dim();
    let sub = a.centralizer(g.a0.basis());
    let algebra = a.restrict(h, &sub)?;
    let mut blocks = Vec::with_capacity(h.dim());
    for (j, u) in g.inverse_at.iter().enumerate() {
        let mut mu = Matrix::zeros(f, n, n);
        for (idx, c) in u.iter().enumerate() {
            if !c.is_zero() {
                let (p, q) = (idx / n, idx % n);
                mu = &mu + &(&a.lmul_of(&Matrix::unit_column(f, n, p).col(0)) * &a.rmul_of(&Matrix::unit_column(f, n, q).col(0))).scale(c);
            }
        }
        let block = sub.restrict(&mu, &sub).ok_or_else(|| Error::Verification {
            what: "Miyashita-Ulbrich action preserves the centralizer".into(),
            witness: Some(Witness::note(vec![j], "dual basis element")),
        })?;
        blocks.push(block);
    }
    let coaction = if sub.dim() == 0 { Matrix::zeros(f, 0, 0) } else { Matrix::vstack(&blocks)? };
    let yd = YdModule::new(h, algebra.module().clone(), coaction)?;
    Ok(PiA { sub, algebra, yd })
}

impl PiA {
    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    /// `π(A)` as an `_R H`-bicomodule algebra through the dictionary.
    pub fn comodule_algebra(&self, qt: &QtHopf) -> ComoduleAlgebra {
        let b = yd_to_bicomodule(qt, &self.yd);
        ComoduleAlgebra { algebra: self.algebra.clone(), left: Some(b.left), right: Some(b.right) }
    }
}

/// Representations of a finite-dimensional algebra, one per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraModule {
    pub dim: usize,
    pub reps: Vec<Matrix>,
}

impl AlgebraModule {
    /// `(xy)·m = x·(y·m)` on every pair of basis elements and `1·m = m`.
    pub fn checks(&self, alg: &Algebra) -> Vec<Check> {
        let f = alg.field();
        let n = alg.dim();
        let combine = |v: &[Scalar]| {
            let mut out = Matrix::zeros(f, self.dim, self.dim);
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    out = &out + &self.reps[i].scale(c);
                }
            }
            out
        };
        let mut assoc = Check::pass("module associativity", "A^e-module");
        'outer: for x in 0..n {
            for y in 0..n {
                let lhs = combine(&alg.mul().col(x * n + y));
                let rhs = &self.reps[x] * &self.reps[y];
                if let Some(mut w) = Witness::between(&lhs, &rhs, &[self.dim], &[self.dim]) {
                    w.input.splice(0..0, [x, y]);
                    assoc = Check::fail("module associativity", "A^e-module", Some(w));
                    break 'outer;
                }
            }
        }
        let unit = Check::equal("module unit", "A^e-module", &combine(&alg.one()), &Matrix::identity(f, self.dim), &[self.dim], &[self.dim]);
        vec![assoc, unit]
    }

    /// The action as a single `M × (A⊗M)` matrix.
    pub fn action(&self) -> Matrix {
        Matrix::hstack(&self.reps).expect("same shapes")
    }
}

/// `(a⊗b̄)•(c⊗z) = a(R²·c)(r²S⁻¹(z₋₁)R¹·b) ⊗ r¹·z₀` on `A ⊗ Z`; reps are
/// indexed `a·n + b`.
pub fn az_aemod(qt: &QtHopf, a: &Algebra, z: &YdModule) -> AlgebraModule {
    let h = qt.hopf();
    let f = h.field();
    let (n, nz, d) = (a.dim(), z.dim(), h.dim());
    let rep = |x: usize| a.module().rep(x);
    let spread = k(&Matrix::identity(f, n), z.coaction());
    // 1⊗b̄ acting, for each b
    let right: Vec<Matrix> = (0..n)
        .map(|b| {
            let eb = Matrix::unit_column(f, n, b);
            let mut acc = Matrix::zeros(f, n * nz, n * d * nz);
            for (p1, p2, c) in qt.r_terms() {
                for (s1, s2, c2) in qt.r_terms() {
                    // h ↦ (r² S⁻¹(h) R¹)·b as an n×d matrix
                    let cols: Vec<Vec<Scalar>> = (0..d)
                        .map(|x| {
                            let w = h.mul_elems(&h.mul_elems(&h.basis(*s2), &h.antipode_inv_of(&h.basis(x))), &h.basis(*p1));
                            (&a.module().rep_of(&w) * &eb).col(0)
                        })
                        .collect();
                    let tmap = Matrix::from_fn(f, n, d, |r, x| cols[x][r].clone());
                    let on_a = a.mul() * &k(rep(*p2), &tmap);
                    acc = &acc + &k(&on_a, z.module().rep(*s1)).scale(&(c * c2));
                }
            }
            &acc * &spread
        })
        .collect();
    let id_z = Matrix::identity(f, nz);
    let mut reps = Vec::with_capacity(n * n);
    for x in 0..n {
        let left = k(&a.lmul_of(&Matrix::unit_column(f, n, x).col(0)), &id_z);
        for r in &right {
            reps.push(&left * r);
        }
    }
    AlgebraModule { dim: n * nz, reps }
}

/// `A ⊗̃ Z`: `(a⊗b̄)•(c⊗z) = a(R²·c)(R¹·b) ⊗ z`, read off the evaluation map.
pub fn untwisted_aemod(qt: &QtHopf, a: &Algebra, nz: usize) -> AlgebraModule {
    let f = a.field();
    let n = a.dim();
    let (fmap, _) = evaluation_maps(qt, a);
    let id_z = Matrix::identity(f, nz);
    let reps = (0..n * n)
        .map(|col| {
            let m = Matrix::from_fn(f, n, n, |i, j| fmap.get(i * n + j, col).clone());
            k(&m, &id_z)
        })
        .collect();
    AlgebraModule { dim: n * nz, reps }
}

/// `A ⊗ Z` as a Yetter-Drinfeld module (the λ₂-lift of `A` tensored with
/// `Z`) together with the checks that make it an `A^e`-module in the
/// Yetter-Drinfeld category.
#[derive(Clone, Debug)]
pub struct AzYd {
    pub aemod: AlgebraModule,
    pub yd: YdModule,
    pub checks: Vec<Check>,
}

pub fn az_yd(qt: &QtHopf, az: &Azumaya, z: &YdModule) -> Result<AzYd> {
    let h = qt.hopf();
    let a = &az.algebra;
    let anchor = "A^e-module in Yetter-Drinfeld modules";
    let aemod = az_aemod(qt, a, z);
    let mut checks = aemod.checks(&az.enveloping);
    let a_yd = YdModule::lift_lambda2(qt, a.module())?;
    let yd = YdModule::tensor(h, &a_yd, z)?;
    let ae = &az.enveloping;
    let ae_coaction = YdModule::lift_lambda2(qt, ae.module())?.coaction().clone();
    checks.push(action_linear_check(h, ae, &aemod, yd.module()));
    checks.push(action_colinear_check(h, &ae_coaction, &aemod, &yd));
    let m = ae.dim();
    let squared = tensor_coaction(h, &ae_coaction, m, &ae_coaction, m);
    checks.push(Check::equal(
        "A^e multiplication is H-colinear",
        anchor,
        &(&ae_coaction * ae.mul()),
        &(&k(&h.identity(), ae.mul()) * &squared),
        &[m, m],
        &[h.dim(), m],
    ));
    checks.push(Check::equal(
        "A^e unit is H-colinear",
        anchor,
        &(&ae_coaction * ae.unit()),
        &k(h.unit(), ae.unit()),
        &[1],
        &[h.dim(), m],
    ));
    for c in checks.iter_mut() {
        c.anchor = anchor.into();
    }
    Ok(AzYd { aemod, yd, checks })
}

/// `h·(x•m) = (h₁·x)•(h₂·m)` for every basis `x` of the acting algebra.
fn action_linear_check(h: &Hopf, alg: &Algebra, act: &AlgebraModule, m: &Module) -> Check {
    let name = "A^e action is H-linear";
    for i in 0..h.dim() {
        for x in 0..alg.dim() {
            let lhs = m.rep(i) * &act.reps[x];
            let mut rhs = Matrix::zeros(h.field(), act.dim, act.dim);
            for (j, l, c) in h.coproduct_terms(i) {
                let moved = alg.module().rep(*j).col(x);
                for (y, cy) in moved.iter().enumerate() {
                    if !cy.is_zero() {
                        rhs = &rhs + &(&act.reps[y] * m.rep(*l)).scale(&(c * cy));
                    }
                }
            }
            if let Some(mut w) = Witness::between(&lhs, &rhs, &[act.dim], &[act.dim]) {
                w.input.splice(0..0, [i, x]);
                return Check::fail(name, "A^e-module in Yetter-Drinfeld modules", Some(w));
            }
        }
    }
    Check::pass(name, "A^e-module in Yetter-Drinfeld modules")
}

/// `λ(x•m) = x₋₁m₋₁ ⊗ x₀•m₀` for every basis `x` of the acting algebra.
fn action_colinear_check(h: &Hopf, alg_coaction: &Matrix, act: &AlgebraModule, m: &YdModule) -> Check {
    let name = "A^e action is H-colinear";
    let na = act.reps.len();
    for x in 0..na {
        let lhs = m.coaction() * &act.reps[x];
        let mut rhs = Matrix::zeros(h.field(), h.dim() * act.dim, h.dim() * act.dim);
        for (row, c) in alg_coaction.col_terms(x) {
            let (p, y) = (row / na, row % na);
            rhs = &rhs + &k(h.lmul_basis(p), &act.reps[y]).scale(&c);
        }
        let rhs = &rhs * m.coaction();
        if let Some(mut w) = Witness::between(&lhs, &rhs, &[act.dim], &[h.dim(), act.dim]) {
            w.input.insert(0, x);
            return Check::fail(name, "A^e-module in Yetter-Drinfeld modules", Some(w));
        }
    }
    Check::pass(name, "A^e-module in Yetter-Drinfeld modules")
}

/// `(A ⊗ Z)^A`: elements on which `a⊗1` and `1⊗ā` act alike for every `a`.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub sub: Subspace,
    pub yd: YdModule,
}

pub fn invariants(qt: &QtHopf, az: &Azumaya, azyd: &AzYd) -> Result<Invariants> {
    let a = &az.algebra;
    let n = a.dim();
    let f = a.field();
    let one = a.one();
    let blocks: Vec<Matrix> = (0..n)
        .map(|x| {
            let mut bar = Matrix::zeros(f, azyd.aemod.dim, azyd.aemod.dim);
            for (p, c) in one.iter().enumerate() {
                if !c.is_zero() {
                    bar = &bar + &azyd.aemod.reps[p * n + x].scale(c);
                }
            }
            let mut plain = Matrix::zeros(f, azyd.aemod.dim, azyd.aemod.dim);
            for (q, c) in one.iter().enumerate() {
                if !c.is_zero() {
                    plain = &plain + &azyd.aemod.reps[x * n + q].scale(c);
                }
            }
            &plain - &bar
        })
        .collect();
    let sub = Subspace::kernel(&Matrix::vstack(&blocks)?);
    let yd = azyd.yd.restrict(qt.hopf(), &sub)?;
    Ok(Invariants { sub, yd })
}

/// `(A⊗Z)^A = π(A) □ Z`: equal echelon bases inside `A⊗Z`, equal actions
/// and equal coactions on that basis.
pub fn check_invariants_cotensor(qt: &QtHopf, pi: &PiA, z: &YdModule, inv: &Invariants, azyd: &AzYd) -> Result<Vec<Check>> {
    let h = qt.hopf();
    let f = h.field();
    let anchor = "invariants = cotensor";
    let nz = z.dim();
    let cot = cotensor_yd(qt, &pi.yd, z)?;
    let embed = k(pi.sub.basis(), &Matrix::identity(f, nz));
    let e = &embed * cot.cotensor.sub.basis();
    let same = Subspace::span(&e) == inv.sub;
    let mut out = vec![Check::flag("invariants and cotensor have equal echelon bases", anchor, same)];
    let pz = Module::tensor(h, pi.yd.module(), z.module());
    let mut act = Check::pass("invariants and cotensor carry the same action", anchor);
    for i in 0..h.dim() {
        let lhs = azyd.yd.module().rep(i) * &e;
        let rhs = &embed * &(pz.rep(i) * cot.cotensor.sub.basis());
        let c = Check::equal("invariants and cotensor carry the same action", anchor, &lhs, &rhs, &[e.cols()], &[e.rows()]);
        if !c.passed() {
            act = c;
            break;
        }
    }
    out.push(act);
    let (r_form, _) = cotensor_coaction_forms(qt, &pi.yd, z);
    let lhs = azyd.yd.coaction() * &e;
    let rhs = &k(&h.identity(), &embed) * &(&r_form * cot.cotensor.sub.basis());
    out.push(Check::equal("invariants and cotensor carry the same coaction", anchor, &lhs, &rhs, &[e.cols()], &[h.dim(), e.rows()]));
    out.extend(cot.checks);
    Ok(out)
}

/// For `Z = _R H`: `χ⁺` carries `π(A)` onto `(A ⊗ _R H)^A` as algebras, the
/// latter a subalgebra of the braided product `A ⊗ _R H`.
pub fn check_pi_is_invariants_algebra(qt: &QtHopf, t: &Transmuted, az: &Azumaya, pi: &PiA, inv: &Invariants) -> Result<Vec<Check>> {
    let h = qt.hopf();
    let f = h.field();
    let anchor = "pi(A) as invariants";
    let d = h.dim();
    let right = pi.comodule_algebra(qt).right.expect("built with both coactions");
    let image = &k(pi.sub.basis(), &Matrix::identity(f, d)) * &right;
    let mut out = Vec::new();
    let coords = inv.sub.coords(&image);
    out.push(Check::flag("right coaction maps pi(A) into the invariants", anchor, coords.is_some()));
    let Some(coords) = coords else { return Ok(out) };
    let iso = coords.rows() == coords.cols() && coords.rank() == coords.rows();
    out.push(Check::flag("right coaction is a bijection onto the invariants", anchor, iso));
    let ambient = Algebra::braided_product(qt, &az.algebra, t.algebra())?;
    match ambient.restrict(h, &inv.sub) {
        Ok(alg) => out.push(pi.algebra.morphism_check(&alg, &coords, "right coaction is multiplicative onto the invariants")),
        Err(e) => out.push(Check::fail("invariants form a subalgebra", anchor, None).with_detail(e.to_string())),
    }
    Ok(out)
}

/// For a λ₁-lifted `Z`: `z ↦ 1⊗z` is an isomorphism `Z → (A⊗Z)^A` of
/// Yetter-Drinfeld modules and the induced coaction is again the λ₁-lift.
pub fn trivialization_checks(qt: &QtHopf, az: &Azumaya, z: &YdModule, inv: &Invariants) -> Vec<Check> {
    let h = qt.hopf();
    let anchor = "trivializable on the module category";
    let unit = k(az.algebra.unit(), &Matrix::identity(h.field(), z.dim()));
    let mut out = vec![Check::flag("dimension of the invariants equals dim Z", anchor, inv.sub.dim() == z.dim())];
    match inv.sub.coords(&unit) {
        Some(m) if m.rows() == m.cols() && m.rank() == m.rows() => {
            out.push(Check::pass("unit map Z -> (A Z)^A is bijective", anchor));
            out.push(z.module().linear_check(inv.yd.module(), &m, "unit map is H-linear"));
            out.push(z.colinear_check(h, &inv.yd, &m, "unit map is H-colinear"));
        }
        Some(m) => out.push(Check::fail("unit map Z -> (A Z)^A is bijective", anchor, None).with_detail(format!("rank {}", m.rank()))),
        None => out.push(Check::fail("unit map Z -> (A Z)^A is bijective", anchor, None).with_detail("1⊗z is not invariant")),
    }
    let expected = YdModule::lift_lambda1(qt, inv.yd.module());
    out.push(Check::flag("induced coaction is the lambda1-lift", anchor, expected.map(|e| e == inv.yd).unwrap_or(false)));
    out
}
