//! The bundled acceptance matrix: ten criteria, each rolled up from the
//! checks that back it, run against the fixture corpus.

use std::path::Path;

use crate::examples::{bundle, native_field, BUNDLES};
use crate::format::{parse, parse_over, serialize, HopfFile, ObjectKind};
use crate::galois::{coaction_into_cotensor, cotensor_yd, unit_law_checks, BiGalois, CotensorFunctor, LeftComodule};
use crate::hopf::{axiom_checks, Hopf, HopfDescription};
use crate::modules::Module;
use crate::pipeline::{bundle_run, transmuted_file, BundleRun, Loaded};
use crate::qt::check_qt;
use crate::report::{Check, Report, Status};
use crate::transmutation::{bicomodule_to_yd, recovery_check, transferred_phi, yd_to_bicomodule, Bicomodule};
use crate::yd::{phi, YdModule};
use crate::{Field, Result, Scalar};

/// Fixture texts by bundle name; `None` marks a missing file.
#[derive(Clone, Debug)]
pub struct Fixtures {
    files: Vec<(String, Option<String>)>,
}

const BUNDLED: [(&str, &str); 6] = [
    ("trivial", include_str!("../fixtures/trivial.hopf")),
    ("c2_trivial_r", include_str!("../fixtures/c2_trivial_r.hopf")),
    ("c2_bicharacter", include_str!("../fixtures/c2_bicharacter.hopf")),
    ("c3_bicharacter", include_str!("../fixtures/c3_bicharacter.hopf")),
    ("sweedler_t0", include_str!("../fixtures/sweedler_t0.hopf")),
    ("sweedler_t1", include_str!("../fixtures/sweedler_t1.hopf")),
];

impl Fixtures {
    /// The fixtures compiled into the library.
    pub fn bundled() -> Fixtures {
        Fixtures { files: BUNDLED.iter().map(|(n, t)| (n.to_string(), Some(t.to_string()))).collect() }
    }

    /// `<dir>/<bundle>.hopf` for every bundle name.
    pub fn from_dir(dir: &Path) -> Fixtures {
        let files = BUNDLES.iter().map(|n| (n.to_string(), std::fs::read_to_string(dir.join(format!("{n}.hopf"))).ok())).collect();
        Fixtures { files }
    }

    /// Only the named bundles, in the order given.
    pub fn subset(&self, names: &[&str]) -> Fixtures {
        Fixtures { files: self.files.iter().filter(|(n, _)| names.contains(&n.as_str())).cloned().collect() }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.files.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.files.iter().find(|(n, _)| n == name).and_then(|(_, t)| t.as_deref())
    }
}

/// File name of a bundle's fixture.
pub fn fixture_file(name: &str) -> String {
    format!("{name}.hopf")
}

/// The fixture for `name` over its native field, expectations included.
pub fn generate_fixture(name: &str) -> Result<String> {
    let mut file = bundle(name, native_field(name))?;
    crate::pipeline::freeze_expectations(&mut file)?;
    Ok(serialize(&file))
}

/// One acceptance criterion with the checks behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub anchor: &'static str,
    pub checks: Vec<Check>,
}

const TITLES: [(&str, &str); 10] = [
    ("Hopf and R-matrix soundness", "Hopf axioms, QT1-QT4, QYBE"),
    ("transmutation", "transmutation"),
    ("Yetter-Drinfeld and bicomodule dictionary", "YD-bicomodule dictionary"),
    ("Galois suite", "Galois object"),
    ("cotensor laws", "cotensor product"),
    ("Brauer pipeline", "Azumaya algebras"),
    ("invariants equal the cotensor with pi(A)", "invariants = cotensor"),
    ("trivialization on lifted modules", "trivializable on the module category"),
    ("determinism and round trips", "file format"),
    ("field robustness", "field robustness"),
];

impl Criterion {
    fn new(id: usize, checks: Vec<Check>) -> Criterion {
        let (title, anchor) = TITLES[id - 1];
        Criterion { id, title, anchor, checks }
    }

    /// Passes iff nothing failed and something passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail) && self.checks.iter().any(|c| c.status == Status::Pass)
    }

    fn counts(&self) -> (usize, usize, usize) {
        self.checks.iter().fold((0, 0, 0), |(p, f, s), c| match c.status {
            Status::Pass => (p + 1, f, s),
            Status::Fail => (p, f + 1, s),
            Status::Skip => (p, f, s + 1),
        })
    }

    /// The single report entry for this criterion.
    pub fn summary(&self) -> Check {
        let name = format!("{}. {}", self.id, self.title);
        let (p, f, s) = self.counts();
        let counts = format!("{p} passed, {f} failed, {s} skipped");
        if self.passed() {
            return Check::pass(name, self.anchor).with_detail(counts);
        }
        match self.checks.iter().find(|c| c.status == Status::Fail) {
            Some(first) => {
                let mut detail = format!("{counts}; first failure: {}", first.name);
                if let Some(d) = &first.detail {
                    detail.push_str(&format!(" ({d})"));
                }
                Check { witness: first.witness.clone(), ..Check::fail(name, self.anchor, None).with_detail(detail) }
            }
            None => Check::fail(name, self.anchor, None).with_detail(format!("{counts}; nothing was checked")),
        }
    }
}

/// The ten criteria over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRun {
    pub field: Field,
    pub criteria: Vec<Criterion>,
}

impl SuiteRun {
    pub fn ok(&self) -> bool {
        self.criteria.iter().all(Criterion::passed)
    }

    /// One entry per criterion.
    pub fn report(&self) -> Report {
        let mut r = Report::new("suite", self.field.to_string());
        r.extend(self.criteria.iter().map(Criterion::summary));
        r
    }

    /// Every underlying check, tagged with its criterion.
    pub fn detailed_report(&self) -> Report {
        let mut r = Report::new("suite", self.field.to_string());
        for c in &self.criteria {
            r.extend(c.checks.iter().map(|k| Check { name: format!("[{}] {}", c.id, k.name), ..k.clone() }));
        }
        r
    }
}

/// Runs all ten criteria over `field`.
pub fn run_suite(field: Field, fixtures: &Fixtures) -> SuiteRun {
    let prepared = prepare_all(field, fixtures);
    let mut criteria = core_criteria(field, &prepared);
    criteria.push(Criterion::new(9, round_trips(field, fixtures, &prepared)));
    criteria.push(Criterion::new(10, other_fields(field, fixtures)));
    SuiteRun { field, criteria }
}

/// Criteria 1 to 8 over one field.
pub fn run_core(field: Field, fixtures: &Fixtures) -> Vec<Criterion> {
    core_criteria(field, &prepare_all(field, fixtures))
}

struct Prepared {
    name: String,
    l: Loaded,
    run: BundleRun,
    /// Read in its declared field, so the text is its canonical form.
    native: bool,
}

enum Slot {
    Missing(String),
    Skipped(String, String),
    Broken(String, String),
    Ready(Box<Prepared>),
}

fn prepare(name: &str, field: Field, fixtures: &Fixtures) -> Slot {
    let Some(text) = fixtures.get(name) else { return Slot::Missing(name.to_string()) };
    let file = match parse(text) {
        Ok(f) => f,
        Err(e) => return Slot::Broken(name.to_string(), e.to_string()),
    };
    let native = file.field() == field;
    let file = if native {
        file
    } else if file.field() != Field::Rational {
        return Slot::Skipped(name.to_string(), format!("example exists over {} only", file.field()));
    } else {
        match parse_over(text, field) {
            Ok(f) => f,
            Err(e) => return Slot::Skipped(name.to_string(), format!("does not reduce to {field}: {e}")),
        }
    };
    let l = match Loaded::new(file) {
        Ok(l) => l,
        Err(e) => return Slot::Broken(name.to_string(), e.to_string()),
    };
    match bundle_run(&l) {
        Ok(run) => Slot::Ready(Box::new(Prepared { name: name.to_string(), l, run, native })),
        Err(e) => Slot::Broken(name.to_string(), e.to_string()),
    }
}

fn prepare_all(field: Field, fixtures: &Fixtures) -> Vec<Slot> {
    fixtures.names().map(|n| prepare(n, field, fixtures)).collect()
}

fn tag(prefix: &str, checks: impl IntoIterator<Item = Check>) -> Vec<Check> {
    checks.into_iter().map(|c| Check { name: format!("{prefix}: {}", c.name), ..c }).collect()
}

fn fold(name: String, anchor: &str, checks: impl IntoIterator<Item = Check>) -> Check {
    let mut n = 0;
    for c in checks {
        if c.status == Status::Fail {
            return Check { name, ..c };
        }
        n += 1;
    }
    Check::pass(name, anchor).with_detail(format!("{n} cases"))
}

fn guarded(name: &str, anchor: &str, r: Result<Vec<Check>>) -> Vec<Check> {
    r.unwrap_or_else(|e| vec![Check::fail(name, anchor, None).with_detail(e.to_string())])
}

fn core_criteria(field: Field, slots: &[Slot]) -> Vec<Criterion> {
    let mut per: Vec<Vec<Check>> = vec![Vec::new(); 8];
    for slot in slots {
        match slot {
            Slot::Missing(n) => per[0].push(Check::fail(format!("fixture {} present", fixture_file(n)), "fixtures", None)),
            Slot::Broken(n, e) => per[0].push(Check::fail(format!("{n}: fixture loads"), "fixtures", None).with_detail(e.clone())),
            Slot::Skipped(n, why) => {
                for (i, c) in per.iter_mut().enumerate() {
                    c.push(Check::skip(format!("{n}: criterion {} over {field}", i + 1), "field robustness", why.clone()));
                }
            }
            Slot::Ready(p) => {
                let mut exp = expectation_checks(p);
                let name = p.name.as_str();
                per[0].extend(tag(name, soundness(p)));
                per[1].extend(tag(name, transmutation(p)));
                per[2].extend(tag(name, guarded("dictionary corpus", "YD-bicomodule dictionary", dictionary(p))));
                per[3].extend(tag(name, guarded("Galois functor", "Galois object", galois_suite(p))));
                per[4].extend(tag(name, guarded("cotensor laws", "cotensor product", cotensor_laws(p))));
                per[5].extend(tag(name, brauer_pipeline(p)));
                per[6].extend(tag(name, invariants(p)));
                per[7].extend(tag(name, trivialization(p)));
                for (i, c) in exp.drain(..) {
                    per[i].push(c);
                }
            }
        }
    }
    per.into_iter().enumerate().map(|(i, c)| Criterion::new(i + 1, c)).collect()
}

/// Computed expectations against the fixture's, each routed to the
/// criterion it belongs to.
fn expectation_checks(p: &Prepared) -> Vec<(usize, Check)> {
    let computed = p.run.expectations();
    let stored = &p.l.file.expected;
    let route = |key: &str| match key {
        "verify" => 0,
        "transmute" => 1,
        k if k.ends_with(".bigalois") => 3,
        k if k.contains(".invariants.") => 6,
        _ => 5,
    };
    let mut out = Vec::new();
    for (key, value) in &computed {
        let name = format!("{}: expected {key} = {value}", p.name);
        let c = match p.l.file.expectation(key) {
            Some(v) if v == value.as_str() => Check::pass(name, "fixture expectations"),
            Some(v) => Check::fail(name, "fixture expectations", None).with_detail(format!("fixture records {v}")),
            None => Check::fail(name, "fixture expectations", None).with_detail("not recorded in the fixture"),
        };
        out.push((route(key), c));
    }
    for (key, value) in stored {
        if !computed.iter().any(|(k, _)| k == key) {
            let c = Check::fail(format!("{}: expected {key} = {value}", p.name), "fixture expectations", None).with_detail("not computed");
            out.push((route(key), c));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Map {
    Mul,
    Unit,
    Comul,
    Counit,
    Antipode,
    R,
}

/// Negating one structure constant and the axiom family that must be the
/// first to fail.
struct Perturbation {
    bundle: &'static str,
    map: Map,
    row: usize,
    col: usize,
    target: &'static str,
}

const PERTURBATIONS: [Perturbation; 7] = [
    Perturbation { bundle: "sweedler_t0", map: Map::Mul, row: 0, col: 5, target: "associativity" },
    Perturbation { bundle: "sweedler_t0", map: Map::Unit, row: 0, col: 0, target: "unit" },
    Perturbation { bundle: "sweedler_t0", map: Map::Comul, row: 6, col: 2, target: "coassociativity" },
    Perturbation { bundle: "sweedler_t0", map: Map::Counit, row: 0, col: 1, target: "counit" },
    Perturbation { bundle: "c2_bicharacter", map: Map::Mul, row: 0, col: 3, target: "bialgebra" },
    Perturbation { bundle: "sweedler_t0", map: Map::Antipode, row: 3, col: 2, target: "antipode" },
    Perturbation { bundle: "sweedler_t1", map: Map::R, row: 10, col: 0, target: "QT2" },
];

/// Axiom families that read the perturbed map.
fn readers(map: Map) -> &'static [&'static str] {
    match map {
        Map::Mul => &["associativity", "unit", "bialgebra", "antipode"],
        Map::Unit => &["unit", "bialgebra", "antipode"],
        Map::Comul => &["coassociativity", "counit", "bialgebra", "antipode"],
        Map::Counit => &["counit", "bialgebra", "antipode"],
        Map::Antipode => &["antipode"],
        Map::R => &["QT1", "QT2", "QT3", "QT4", "R invertible"],
    }
}

fn perturbation_check(desc: &HopfDescription, r: &[Scalar], p: &Perturbation) -> Check {
    let name = format!("negating {:?} entry ({}, {}) fails {} first", p.map, p.row, p.col, p.target);
    let anchor = if p.map == Map::R { p.target } else { "Hopf axioms" };
    let mut desc = desc.clone();
    let mut r = r.to_vec();
    let entry = match p.map {
        Map::Mul => desc.mul.get(p.row, p.col).clone(),
        Map::Unit => desc.unit.get(p.row, p.col).clone(),
        Map::Comul => desc.comul.get(p.row, p.col).clone(),
        Map::Counit => desc.counit.get(p.row, p.col).clone(),
        Map::Antipode => desc.antipode.get(p.row, p.col).clone(),
        Map::R => r[p.row].clone(),
    };
    if entry.is_zero() || entry == -&entry {
        return Check::skip(name, anchor, "entry is unchanged by negation");
    }
    let neg = -&entry;
    match p.map {
        Map::Mul => desc.mul.set(p.row, p.col, neg),
        Map::Unit => desc.unit.set(p.row, p.col, neg),
        Map::Comul => desc.comul.set(p.row, p.col, neg),
        Map::Counit => desc.counit.set(p.row, p.col, neg),
        Map::Antipode => desc.antipode.set(p.row, p.col, neg),
        Map::R => r[p.row] = neg,
    }
    let mut checks = match axiom_checks(&desc) {
        Ok(c) => c,
        Err(e) => return Check::fail(name, anchor, None).with_detail(e.to_string()),
    };
    if p.map == Map::R {
        let qt = Hopf::build(desc).and_then(|h| check_qt(&h, &r));
        match qt {
            Ok(c) => checks.extend(c),
            Err(e) => return Check::fail(name, anchor, None).with_detail(e.to_string()),
        }
    }
    let failing: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    let Some(first) = failing.first() else {
        return Check::fail(name, anchor, None).with_detail("nothing fails");
    };
    let stray: Vec<&str> = failing.iter().map(|c| c.name.as_str()).filter(|n| !readers(p.map).contains(n)).collect();
    let also = failing.iter().skip(1).map(|c| c.name.as_str()).collect::<Vec<_>>().join(", ");
    let ok = first.name == p.target && first.witness.is_some() && stray.is_empty();
    let detail = if also.is_empty() { format!("first failure {}", first.name) } else { format!("first failure {}, then {also}", first.name) };
    Check { witness: first.witness.clone(), ..Check::flag(name, anchor, ok).with_detail(detail) }
}

fn soundness(p: &Prepared) -> Vec<Check> {
    let mut out = p.run.verify.clone();
    let file = &p.l.file;
    for pert in PERTURBATIONS.iter().filter(|x| x.bundle == p.name) {
        out.push(perturbation_check(&file.hopf, file.r_matrix.as_deref().unwrap_or(&[]), pert));
    }
    out
}

fn transmutation(p: &Prepared) -> Vec<Check> {
    let mut out = p.run.transmute.clone();
    let h = p.l.h();
    let one_one = p.l.qt.r_terms().iter().all(|(a, b, _)| h.basis(*a) == h.one() && h.basis(*b) == h.one());
    if one_one {
        let anchor = "transmutation";
        out.push(Check::flag("R = 1⊗1: braided coproduct is the coproduct", anchor, p.l.t.comul() == h.comul()));
        out.push(Check::flag("R = 1⊗1: braided antipode is the antipode", anchor, p.l.t.antipode() == h.antipode()));
    }
    out
}

/// The module every bundle lifts: its first module object, else `k²`.
fn test_module(l: &Loaded) -> Result<(String, Module)> {
    match l.file.objects.iter().find(|o| o.kind == ObjectKind::Module) {
        Some(o) => Ok((o.name.clone(), o.module(l.h())?)),
        None => Ok(("k2".into(), Module::trivial(l.h(), 2))),
    }
}

/// λ₁- and λ₂-lifts of a test module and of the regular module, `_R H`,
/// `k` and a tensor product.
fn yd_corpus(l: &Loaded) -> Result<Vec<(String, YdModule)>> {
    let (qt, h) = (&l.qt, l.h());
    let (mname, m) = test_module(l)?;
    let l1 = YdModule::lift_lambda1(qt, &m)?;
    let l2 = YdModule::lift_lambda2(qt, &m)?;
    let tensor = YdModule::tensor(h, &l1, &l2)?;
    Ok(vec![
        (format!("lambda1:{mname}"), l1),
        (format!("lambda2:{mname}"), l2),
        ("lambda1:regular".into(), YdModule::lift_lambda1(qt, &Module::regular(h))?),
        ("lambda2:regular".into(), YdModule::lift_lambda2(qt, &Module::regular(h))?),
        ("rh".into(), YdModule::adjoint_regular(h)),
        ("k".into(), YdModule::lift_lambda1(qt, &Module::trivial(h, 1))?),
        (format!("lambda1:{mname} ⊗ lambda2:{mname}"), tensor),
    ])
}

fn dictionary(p: &Prepared) -> Result<Vec<Check>> {
    let (qt, t, h) = (&p.l.qt, &p.l.t, p.l.h());
    let anchor = "YD-bicomodule dictionary";
    let corpus = yd_corpus(&p.l)?;
    let mut out = Vec::new();
    let mut bicos: Vec<Bicomodule> = Vec::new();
    for (name, z) in &corpus {
        let b = yd_to_bicomodule(qt, z);
        let mut zc = b.checks(t, h);
        zc.push(b.cocommutative_check(t, qt));
        let back = bicomodule_to_yd(qt, &b);
        zc.push(Check::flag("round trip through bicomodules is the identity", anchor, back.as_ref() == Ok(z)));
        zc.push(recovery_check(qt, &b));
        out.extend(tag(&format!("z = {name}"), zc));
        bicos.push(b);
    }
    let mut pairs = Vec::new();
    for (i, (ni, zi)) in corpus.iter().enumerate() {
        for (j, (nj, zj)) in corpus.iter().enumerate() {
            let name = format!("transferred braiding equals phi on ({ni}, {nj})");
            pairs.push(match transferred_phi(qt, &bicos[i], &bicos[j]) {
                Ok(m) => Check::equal(name, anchor, &m, &phi(h, zi, zj), &[zi.dim(), zj.dim()], &[zj.dim(), zi.dim()]),
                Err(e) => Check::fail(name, anchor, None).with_detail(e.to_string()),
            });
        }
    }
    out.push(fold(format!("transferred braiding equals phi on all {} pairs", pairs.len()), anchor, pairs));
    out.push(Check::flag("corpus has at least 6 Yetter-Drinfeld modules", anchor, corpus.len() >= 6).with_detail(format!("{} modules", corpus.len())));
    Ok(out)
}

fn galois_suite(p: &Prepared) -> Result<Vec<Check>> {
    let (qt, t, h) = (&p.l.qt, &p.l.t, p.l.h());
    let anchor = "Galois object";
    let mut out = tag("rh", p.run.galois("rh").map(<[Check]>::to_vec).unwrap_or_default());
    if out.is_empty() {
        out.push(Check::fail("rh: bi-Galois checks", anchor, None).with_detail("rh not among the objects"));
    }
    let reg = BiGalois::regular(qt, t)?;
    let functor = CotensorFunctor { qt, t, a: &reg };
    let (_, m) = test_module(&p.l)?;
    let xs = [Module::trivial(h, 1), Module::regular(h), Module::adjoint(h), m.clone()];
    for (i, x) in xs.iter().enumerate() {
        out.push(Check { name: format!("{} (test module {i}, dim {})", functor.trivialization_check(x).name, x.dim()), ..functor.trivialization_check(x) });
    }
    let comodules = [
        LeftComodule::regular(t),
        LeftComodule::cofree(qt, t, &Module::regular(h)),
        LeftComodule::cofree(qt, t, &m),
        LeftComodule::trivial(qt, m.clone()),
    ];
    for (i, (x, c)) in xs.iter().zip(comodules.iter()).enumerate() {
        let mut a = functor.condition_a_check(x, c)?;
        a.name = format!("{} (pair {i})", a.name);
        out.push(a);
    }
    for (i, (c1, c2)) in [(0, 0), (1, 0), (0, 2), (3, 1)].into_iter().enumerate() {
        let mut x = functor.xi_check(&comodules[c1], &comodules[c2]);
        x.name = format!("{} (pair {i})", x.name);
        out.push(x);
    }
    if let Some(ground) = p.run.galois("ground_trivial") {
        let galois = ground.iter().all(Check::passed);
        let name = "k with trivial coactions is Galois iff dim H = 1";
        out.push(Check::flag(name, anchor, galois == (h.dim() == 1)));
    }
    Ok(out)
}

fn cotensor_laws(p: &Prepared) -> Result<Vec<Check>> {
    let (qt, t, h) = (&p.l.qt, &p.l.t, p.l.h());
    let anchor = "cotensor product";
    let corpus = yd_corpus(&p.l)?;
    let (_, m) = test_module(&p.l)?;
    let mut comodules = vec![
        ("regular".to_string(), LeftComodule::regular(t)),
        ("cofree regular".into(), LeftComodule::cofree(qt, t, &Module::regular(h))),
        ("cofree test module".into(), LeftComodule::cofree(qt, t, &m)),
        ("trivial test module".into(), LeftComodule::trivial(qt, m)),
    ];
    for (name, z) in &corpus {
        comodules.push((format!("left comodule of {name}"), yd_to_bicomodule(qt, z).left_comodule()));
    }
    let mut out = Vec::new();
    for (name, c) in &comodules {
        let (cot, f) = coaction_into_cotensor(qt, t, c)?;
        let iso = cot.dim() == c.dim() && f.rows() == f.cols() && f.rank() == c.dim();
        out.push(Check::flag(format!("B cotensor M = M through the coaction ({name})"), anchor, iso).with_detail(format!("dim {} vs {}", cot.dim(), c.dim())));
    }
    let mut pairs = Vec::new();
    for (nx, x) in &corpus {
        for (ny, y) in &corpus {
            let c = cotensor_yd(qt, x, y)?;
            pairs.extend(tag(&format!("({nx}, {ny})"), c.checks));
        }
    }
    out.push(fold("R-matrix characterization and both coaction formulas on all corpus pairs".into(), anchor, pairs));
    out.extend(unit_law_checks(qt, t)?);
    Ok(out)
}

fn brauer_pipeline(p: &Prepared) -> Vec<Check> {
    let anchor = "Azumaya algebras";
    let mut out = Vec::new();
    for (name, run) in &p.run.brauer {
        if run.azumaya.is_ok() && run.hstar_galois.is_ok() {
            out.extend(tag(name, run.checks.clone()));
            out.push(Check::flag(format!("{name}: pi(A) computes, is bi-Galois and quantum commutative"), "pi(A)", run.pi_bigalois == Some(true) && run.pi_quantum_commutative == Some(true)));
        } else {
            let why = [&run.azumaya, &run.hstar_galois].into_iter().find_map(|r| r.as_ref().err()).map(ToString::to_string).unwrap_or_default();
            out.push(Check::pass(format!("{name}: pipeline stops before pi(A)"), anchor).with_detail(why));
        }
    }
    if p.name.starts_with("sweedler") {
        let verdict = |alg: &str| p.run.brauer(alg).map(|r| (r.azumaya.clone(), r.hstar_galois.clone()));
        out.push(Check::flag("End(V) of the 2-dim module is Azumaya", anchor, matches!(verdict("end_v"), Some((Ok(()), _)))));
        let kk = verdict("k_times_k");
        let detail = match &kk {
            Some((Err(e), _)) => e.to_string(),
            _ => "certified".into(),
        };
        out.push(Check::flag("k x k is not Azumaya", anchor, matches!(kk, Some((Err(crate::Error::NotAzumaya { .. }), _)))).with_detail(detail));
        out.push(Check::flag("twisted M2 is H*-Galois Azumaya", anchor, matches!(verdict("twisted_m2"), Some((Ok(()), Ok(()))))));
    }
    out
}

fn invariants(p: &Prepared) -> Vec<Check> {
    let anchor = "invariants = cotensor";
    let mut out = Vec::new();
    for (name, run) in &p.run.brauer {
        for z in &run.zs {
            out.extend(tag(name, z.checks.clone()));
        }
    }
    if p.name.starts_with("sweedler") {
        let needed = ["k", "lambda1:v", "lambda2:v", "rh", "rh_rh"];
        let zs = p.run.brauer("twisted_m2").map(|r| r.zs.as_slice()).unwrap_or_default();
        let covered = needed.iter().all(|n| zs.iter().any(|z| z.name == *n && z.invariants_dim.is_some()));
        let big = zs.iter().any(|z| z.dim == 16 && z.invariants_dim.is_some());
        out.push(Check::flag("twisted M2 covers k, both lifts of V, _R H and a 16-dim z", anchor, covered && big));
    }
    out
}

fn trivialization(p: &Prepared) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, run) in &p.run.brauer {
        for z in run.zs.iter().filter(|z| z.lambda1) {
            out.extend(tag(name, z.checks.iter().filter(|c| c.anchor == "trivializable on the module category").cloned()));
        }
    }
    out
}

fn round_trips(field: Field, fixtures: &Fixtures, slots: &[Slot]) -> Vec<Check> {
    let anchor = "file format";
    let mut out = Vec::new();
    for name in fixtures.names() {
        let Some(text) = fixtures.get(name) else {
            out.push(Check::fail(format!("fixture {} present", fixture_file(name)), "fixtures", None));
            continue;
        };
        let c = match parse(text) {
            Ok(f) => Check::flag(format!("{name}: parse then serialize is bit-exact"), anchor, serialize(&f) == text),
            Err(e) => Check::fail(format!("{name}: parse then serialize is bit-exact"), anchor, None).with_detail(e.to_string()),
        };
        out.push(c);
    }
    for slot in slots {
        let Slot::Ready(p) = slot else { continue };
        let written = serialize(&transmuted_file(&p.l));
        let back = parse(&written);
        let same = back.as_ref().map(|f| serialize(f) == written && *f == transmuted_file(&p.l)).unwrap_or(false);
        out.push(Check::flag(format!("{}: transmuted file re-parses to the same matrices", p.name), anchor, same));
        let reload = back.and_then(Loaded::new).map(|l| crate::pipeline::transmute_checks(&l).iter().all(Check::passed));
        out.push(Check::flag(format!("{}: transmuted file reloads and re-verifies", p.name), anchor, reload == Ok(true)));
        if p.native && native_field(&p.name) == field {
            let mut file: HopfFile = match bundle(&p.name, field) {
                Ok(f) => f,
                Err(e) => {
                    out.push(Check::fail(format!("{}: fixture regenerates bit-exactly", p.name), anchor, None).with_detail(e.to_string()));
                    continue;
                }
            };
            file.expected = p.run.expectations();
            let same = Some(serialize(&file).as_str()) == fixtures.get(&p.name);
            out.push(Check::flag(format!("{}: fixture regenerates bit-exactly", p.name), anchor, same));
        }
    }
    let cheap = fixtures.subset(&["trivial", "c2_trivial_r", "c2_bicharacter", "c3_bicharacter"]);
    let first = run_core(field, &cheap);
    let second = run_core(field, &cheap);
    let json = |cs: &[Criterion]| {
        let mut r = Report::new("suite", field.to_string());
        for c in cs {
            r.extend(c.checks.iter().cloned());
        }
        r.to_json()
    };
    out.push(Check::flag("two runs give identical machine-format reports", anchor, json(&first) == json(&second)));
    out
}

/// Criteria 1 to 8 over every other supported field.
fn other_fields(field: Field, fixtures: &Fixtures) -> Vec<Check> {
    let fields = [Field::Rational, Field::Prime(7), Field::Prime(2)];
    let mut out = Vec::new();
    for f in fields.into_iter().filter(|f| *f != field) {
        let crit = run_core(f, fixtures);
        for c in &crit {
            let mut s = c.summary();
            s.name = format!("over {f}: {}", s.name);
            out.push(s);
        }
        if f == Field::Prime(2) {
            let skips = crit.iter().flat_map(|c| &c.checks).filter(|c| c.status == Status::Skip).count();
            out.push(Check::flag("over gf 2: characteristic-sensitive bundles carry skip entries", "field robustness", skips > 0).with_detail(format!("{skips} skips")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_fixture_fails_its_criteria() {
        let f = Fixtures { files: vec![("trivial".into(), None)] };
        let crit = run_core(Field::Rational, &f);
        assert!(!crit[0].passed());
        assert!(crit[0].summary().detail.unwrap().contains("fixture trivial.hopf present"));
    }

    #[test]
    fn trivial_bundle_passes_core_criteria() {
        let f = Fixtures::bundled().subset(&["trivial"]);
        for c in run_core(Field::Rational, &f) {
            assert!(c.passed(), "{:?}", c.summary());
        }
    }

    #[test]
    fn gf7_only_fixture_is_skipped_over_the_rationals() {
        let f = Fixtures::bundled().subset(&["c3_bicharacter"]);
        let crit = run_core(Field::Rational, &f);
        assert!(crit.iter().all(|c| c.checks.iter().all(|k| k.status == Status::Skip)));
    }
}
