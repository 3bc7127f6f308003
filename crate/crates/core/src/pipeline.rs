//! The computations behind each command, run on a parsed description file.

use crate::brauer::{
    az_yd, check_invariants_cotensor, check_pi_is_invariants_algebra, coinvariants_a0, compute_pi, hstar_galois, invariants,
    trivialization_checks, untwisted_aemod, Azumaya,
};
use crate::format::{HopfFile, ObjectKind};
use crate::galois::{quantum_commutative_check, BiGalois, ComoduleAlgebra, Side};
use crate::hopf::{axiom_checks, Hopf};
use crate::modules::{Algebra, Module};
use crate::qt::{check_four_leg_ybe, check_qt, check_qybe, QtHopf};
use crate::report::Check;
use crate::transmutation::Transmuted;
use crate::yd::YdModule;
use crate::{Error, Result};

/// A description file with its Hopf algebra, R-matrix and transmutation
/// built and verified.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub file: HopfFile,
    pub qt: QtHopf,
    pub t: Transmuted,
}

impl Loaded {
    pub fn new(file: HopfFile) -> Result<Loaded> {
        let qt = file.build_qt()?;
        let t = Transmuted::new(&qt)?;
        Ok(Loaded { file, qt, t })
    }

    pub fn h(&self) -> &Hopf {
        self.qt.hopf()
    }

    pub fn name(&self) -> &str {
        self.file.name.as_deref().unwrap_or("input")
    }

    pub fn algebra(&self, name: &str) -> Result<Algebra> {
        self.file.object(name)?.algebra(self.h())
    }

    pub fn module(&self, name: &str) -> Result<Module> {
        self.file.object(name)?.module(self.h())
    }
}

fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed())
}

/// Hopf axioms, the R-matrix axioms, Yang-Baxter and the four-leg identity,
/// then every named object. Failing axioms are report entries; only shape
/// errors abort.
pub fn verify_checks(file: &HopfFile) -> Result<Vec<Check>> {
    let mut out = axiom_checks(&file.hopf)?;
    if !all_pass(&out) {
        out.push(Check::skip("R-matrix axioms", "QT1-QT4", "Hopf axioms fail"));
        return Ok(out);
    }
    let h = Hopf::build(file.hopf.clone())?;
    let Some(r) = &file.r_matrix else {
        out.push(Check::skip("R-matrix axioms", "QT1-QT4", "no r_matrix given"));
        return Ok(out);
    };
    let qt_checks = check_qt(&h, r)?;
    let qt_ok = all_pass(&qt_checks);
    out.extend(qt_checks);
    if !qt_ok {
        out.push(Check::skip("Yang-Baxter equation", "QYBE", "R-matrix axioms fail"));
        return Ok(out);
    }
    out.push(check_qybe(&h, r)?);
    out.push(check_four_leg_ybe(&h, r)?);
    let qt = QtHopf::new(h.clone(), r.clone())?;
    let t = Transmuted::new(&qt).ok();
    for o in &file.objects {
        let name = format!("object {} verifies", o.name);
        let r = match o.kind {
            ObjectKind::Module => o.module(&h).map(drop),
            ObjectKind::Yd => o.yd(&h).map(drop),
            ObjectKind::Algebra => o.algebra(&h).map(drop),
            ObjectKind::ComoduleAlgebra => match &t {
                Some(t) => o.comodule_algebra_unchecked(&h).and_then(|a| ComoduleAlgebra::new(&qt, t, a.algebra, a.left, a.right)).map(drop),
                None => Err(Error::Verification { what: "transmutation".into(), witness: None }),
            },
        };
        out.push(Check::from_result(name, "named objects", r));
    }
    Ok(out)
}

/// Every property of `_R H`, plus agreement with a stored braided structure.
pub fn transmute_checks(l: &Loaded) -> Vec<Check> {
    let mut out = l.t.checks(&l.qt);
    if let Some(b) = &l.file.braided {
        let d = l.h().dim();
        let anchor = "transmutation";
        out.push(Check::equal("stored braided coproduct matches", anchor, &b.comul, l.t.comul(), &[d], &[d, d]));
        out.push(Check::equal("stored braided antipode matches", anchor, &b.antipode, l.t.antipode(), &[d], &[d]));
        out.push(Check::equal("stored adjoint action matches", anchor, &b.adjoint, &l.t.module().action(), &[d, d], &[d]));
    }
    out
}

/// `l.file` with the braided structure of `_R H` recorded.
pub fn transmuted_file(l: &Loaded) -> HopfFile {
    let mut f = l.file.clone();
    f.set_braided(&l.t);
    f
}

/// A comodule algebra by name; `rh` falls back to `_R H` itself.
pub fn comodule_algebra(l: &Loaded, name: &str) -> Result<ComoduleAlgebra> {
    match l.file.object(name) {
        Ok(o) => o.comodule_algebra_unchecked(l.h()),
        Err(_) if name == "rh" => Ok(ComoduleAlgebra::regular(&l.t)),
        Err(e) => Err(e),
    }
}

/// Comodule-algebra laws, coinvariants, canonical maps, the γ identities
/// and quantum commutativity. Later stages are skipped once a law fails.
pub fn galois_checks(l: &Loaded, a: &ComoduleAlgebra) -> Result<Vec<Check>> {
    let (qt, t) = (&l.qt, &l.t);
    let anchor = "Galois object";
    let mut out = a.checks(qt, t)?;
    if !all_pass(&out) {
        out.push(Check::skip("Galois checks", anchor, "comodule-algebra laws fail"));
        return Ok(out);
    }
    let unit_line = crate::Subspace::span(a.algebra.unit());
    for (side, present, label) in [(Side::Right, a.right.is_some(), "right"), (Side::Left, a.left.is_some(), "left")] {
        if !present {
            continue;
        }
        let co = a.coinvariants(qt, side)?;
        out.push(Check::flag(format!("{label} coinvariants are k1"), anchor, co == unit_line).with_detail(format!("dimension {}", co.dim())));
        let can = a.canonical_map(qt, side)?;
        let (rank, needed) = (can.rank(), can.cols());
        let sign = if side == Side::Right { "+" } else { "-" };
        out.push(Check::flag(format!("can{sign} bijective"), anchor, rank == needed && can.rows() == needed).with_detail(format!("{}x{needed} of rank {rank}", can.rows())));
    }
    if a.bicomodule().is_none() || !all_pass(&out) {
        out.push(Check::skip("gamma identities", "gamma identities", "not a bi-Galois object"));
        return Ok(out);
    }
    let g = BiGalois::new(qt, t, a.clone())?;
    out.extend(g.gamma_checks(qt, t));
    let b = a.bicomodule().expect("both coactions");
    if b.cocommutative_check(t, qt).passed() {
        out.push(quantum_commutative_check(qt, t, a)?);
    } else {
        out.push(Check::skip("quantum commutative", "quantum commutativity", "bicomodule is not cocommutative"));
    }
    Ok(out)
}

/// A Yetter-Drinfeld module to run the invariants functor on.
#[derive(Clone, Debug)]
pub struct NamedZ {
    pub name: String,
    pub yd: YdModule,
    /// In the image of the λ₁-lift, so the functor should trivialize it.
    pub lambda1: bool,
}

/// Resolves a `z` name: `k`, `rh`, `rh_rh`, `lambda1_regular`, a `yd`
/// object, a module object (λ₁-lifted), or `lambda1:<module>` /
/// `lambda2:<module>`.
pub fn resolve_z(l: &Loaded, name: &str) -> Result<NamedZ> {
    let (qt, h) = (&l.qt, l.h());
    let named = |yd: YdModule, lambda1: bool| Ok(NamedZ { name: name.to_string(), yd, lambda1 });
    match name {
        "k" => return named(YdModule::lift_lambda1(qt, &Module::trivial(h, 1))?, true),
        "rh" => return named(YdModule::adjoint_regular(h), false),
        "rh_rh" => {
            let a = YdModule::adjoint_regular(h);
            return named(YdModule::tensor(h, &a, &a)?, false);
        }
        "lambda1_regular" => return named(YdModule::lift_lambda1(qt, &Module::regular(h))?, true),
        _ => {}
    }
    if let Some(m) = name.strip_prefix("lambda1:") {
        return named(YdModule::lift_lambda1(qt, &l.module(m)?)?, true);
    }
    if let Some(m) = name.strip_prefix("lambda2:") {
        return named(YdModule::lift_lambda2(qt, &l.module(m)?)?, false);
    }
    let o = l.file.object(name)?;
    match o.kind {
        ObjectKind::Yd => named(o.yd(h)?, false),
        ObjectKind::Module => named(YdModule::lift_lambda1(qt, &o.module(h)?)?, true),
        _ => Err(Error::Shape(format!("object {name:?} is not a module"))),
    }
}

/// `k`, both lifts of every module object, `_R H`, the λ₁-lifted regular
/// module and, for `dim H ≤ 4`, `_R H ⊗ _R H`.
pub fn standard_zs(l: &Loaded) -> Result<Vec<NamedZ>> {
    let mut names = vec!["k".to_string()];
    for o in l.file.objects.iter().filter(|o| o.kind == ObjectKind::Module) {
        names.push(format!("lambda1:{}", o.name));
        names.push(format!("lambda2:{}", o.name));
    }
    names.extend(["rh", "lambda1_regular"].map(String::from));
    if l.h().dim() <= 4 {
        names.push("rh_rh".into());
    }
    names.iter().map(|n| resolve_z(l, n)).collect()
}

/// The invariants functor on one `z`.
#[derive(Clone, Debug)]
pub struct ZRun {
    pub name: String,
    pub dim: usize,
    pub invariants_dim: Option<usize>,
    pub lambda1: bool,
    pub checks: Vec<Check>,
}

/// Everything the Brauer pipeline computes for one algebra.
#[derive(Clone, Debug)]
pub struct BrauerRun {
    pub azumaya: Result<(), Error>,
    pub a0_dim: usize,
    pub hstar_galois: Result<(), Error>,
    pub pi_dim: Option<usize>,
    pub pi_bigalois: Option<bool>,
    pub pi_quantum_commutative: Option<bool>,
    pub checks: Vec<Check>,
    pub zs: Vec<ZRun>,
}

fn verdict(name: &str, anchor: &str, r: &Result<(), Error>) -> Check {
    match r {
        Ok(()) => Check::pass(name, anchor),
        Err(e) => Check::fail(name, anchor, None).with_detail(e.to_string()),
    }
}

/// Azumaya certification, `A₀`, the `H*`-Galois test, `π(A)` with its
/// bi-Galois and quantum-commutativity checks, then `(A⊗Z)^A` against
/// `π(A) □ Z` for every `z`. Stages whose precondition fails are skipped.
pub fn brauer_run(l: &Loaded, a: &Algebra, zs: &[NamedZ]) -> Result<BrauerRun> {
    let (qt, t, h) = (&l.qt, &l.t, l.h());
    let mut checks = Vec::new();
    let (a0, _) = coinvariants_a0(h, a)?;
    let az = Azumaya::certify(qt, a);
    let azumaya = az.as_ref().map(drop).map_err(Clone::clone);
    checks.push(verdict("A is Azumaya", "Azumaya algebras", &azumaya));
    checks.push(Check::pass("coinvariant subalgebra A0", "coinvariants A0").with_detail(format!("dimension {}", a0.dim())));
    let galois = hstar_galois(h, a);
    let hstar = galois.as_ref().map(drop).map_err(Clone::clone);
    checks.push(verdict("A is H*-Galois over A0", "H*-Galois", &hstar));
    let mut run = BrauerRun {
        azumaya,
        a0_dim: a0.dim(),
        hstar_galois: hstar,
        pi_dim: None,
        pi_bigalois: None,
        pi_quantum_commutative: None,
        checks,
        zs: Vec::new(),
    };
    let (Ok(az), Ok(galois)) = (az, galois) else {
        run.checks.push(Check::skip("pi(A) and the invariants functor", "pi(A)", "needs an H*-Galois Azumaya algebra"));
        return Ok(run);
    };
    let pi = match compute_pi(h, a, &galois) {
        Ok(p) => p,
        Err(e) => {
            run.checks.push(Check::fail("pi(A) is a Yetter-Drinfeld module", "pi(A)", None).with_detail(e.to_string()));
            return Ok(run);
        }
    };
    run.pi_dim = Some(pi.dim());
    run.checks.push(Check::pass("pi(A) is a Yetter-Drinfeld module", "pi(A)").with_detail(format!("dimension {}", pi.dim())));
    let pca = pi.comodule_algebra(qt);
    let bg = BiGalois::checks(qt, t, &pca)?;
    run.pi_bigalois = Some(all_pass(&bg));
    run.checks.push(Check::flag("pi(A) is bi-Galois", "pi(A) is bi-Galois", all_pass(&bg)));
    run.checks.extend(bg.into_iter().filter(|c| !c.passed()));
    let qc = quantum_commutative_check(qt, t, &pca).unwrap_or_else(|e| Check::fail("quantum commutative", "quantum commutativity", None).with_detail(e.to_string()));
    run.pi_quantum_commutative = Some(qc.passed());
    run.checks.push(Check { name: "pi(A) is quantum commutative".into(), ..qc });

    for z in zs {
        let mut zc = Vec::new();
        let azyd = az_yd(qt, &az, &z.yd)?;
        zc.extend(azyd.checks.iter().cloned());
        let inv = match invariants(qt, &az, &azyd) {
            Ok(inv) => inv,
            Err(e) => {
                zc.push(Check::fail("invariants form a Yetter-Drinfeld submodule", "invariants = cotensor", None).with_detail(e.to_string()));
                run.zs.push(ZRun { name: z.name.clone(), dim: z.yd.dim(), invariants_dim: None, lambda1: z.lambda1, checks: zc });
                continue;
            }
        };
        zc.extend(check_invariants_cotensor(qt, &pi, &z.yd, &inv, &azyd)?);
        if z.name == "rh" {
            zc.extend(check_pi_is_invariants_algebra(qt, t, &az, &pi, &inv)?);
        }
        if z.lambda1 {
            zc.extend(trivialization_checks(qt, &az, &z.yd, &inv));
            let same = untwisted_aemod(qt, a, z.yd.dim()) == azyd.aemod;
            zc.push(Check::flag("A Z equals the untwisted A Z", "trivializable on the module category", same));
        }
        for c in zc.iter_mut() {
            c.name = format!("z = {}: {}", z.name, c.name);
        }
        run.zs.push(ZRun { name: z.name.clone(), dim: z.yd.dim(), invariants_dim: Some(inv.sub.dim()), lambda1: z.lambda1, checks: zc });
    }
    Ok(run)
}

impl BrauerRun {
    /// Every check, pipeline stages first, then each `z` in order.
    pub fn all_checks(&self) -> Vec<Check> {
        let mut out = self.checks.clone();
        for z in &self.zs {
            out.push(Check::pass(format!("z = {}", z.name), "invariants = cotensor").with_detail(match z.invariants_dim {
                Some(n) => format!("dim Z = {}, dim (A Z)^A = {n}", z.dim),
                None => format!("dim Z = {}", z.dim),
            }));
            out.extend(z.checks.iter().cloned());
        }
        out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Every computation the bundled expectations are drawn from.
#[derive(Clone, Debug)]
pub struct BundleRun {
    pub verify: Vec<Check>,
    pub transmute: Vec<Check>,
    pub galois: Vec<(String, Vec<Check>)>,
    pub brauer: Vec<(String, BrauerRun)>,
}

/// Runs verification, transmutation, the Galois checks on every comodule
/// algebra and the Brauer pipeline on every algebra object.
pub fn bundle_run(l: &Loaded) -> Result<BundleRun> {
    let verify = verify_checks(&l.file)?;
    let transmute = transmute_checks(l);
    let zs = standard_zs(l)?;
    let mut galois = Vec::new();
    let mut brauer = Vec::new();
    for o in &l.file.objects {
        match o.kind {
            ObjectKind::ComoduleAlgebra => galois.push((o.name.clone(), galois_checks(l, &o.comodule_algebra_unchecked(l.h())?)?)),
            ObjectKind::Algebra => brauer.push((o.name.clone(), brauer_run(l, &o.algebra(l.h())?, &zs)?)),
            _ => {}
        }
    }
    Ok(BundleRun { verify, transmute, galois, brauer })
}

impl BundleRun {
    /// The frozen form: verdicts, dimensions and flags keyed by object.
    pub fn expectations(&self) -> Vec<(String, String)> {
        let mut out = vec![("verify".to_string(), yes(all_pass(&self.verify)).to_string())];
        out.push(("transmute".into(), yes(all_pass(&self.transmute)).into()));
        for (name, run) in &self.brauer {
            let key = |s: &str| format!("{name}.{s}");
            out.push((key("azumaya"), yes(run.azumaya.is_ok()).into()));
            out.push((key("a0_dim"), run.a0_dim.to_string()));
            out.push((key("hstar_galois"), yes(run.hstar_galois.is_ok()).into()));
            if let Some(n) = run.pi_dim {
                out.push((key("pi_dim"), n.to_string()));
            }
            for z in &run.zs {
                if let Some(n) = z.invariants_dim {
                    out.push((key(&format!("invariants.{}", z.name.replace(':', "."))), n.to_string()));
                }
            }
        }
        for (name, checks) in &self.galois {
            out.push((format!("{name}.bigalois"), yes(all_pass(checks)).into()));
        }
        out
    }

    pub fn brauer(&self, name: &str) -> Option<&BrauerRun> {
        self.brauer.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn galois(&self, name: &str) -> Option<&[Check]> {
        self.galois.iter().find(|(n, _)| n == name).map(|(_, c)| c.as_slice())
    }
}

/// Replaces the expectations of `file` by freshly computed ones.
pub fn freeze_expectations(file: &mut HopfFile) -> Result<()> {
    file.expected.clear();
    let run = bundle_run(&Loaded::new(file.clone())?)?;
    file.expected = run.expectations();
    Ok(())
}
