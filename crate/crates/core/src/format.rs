//! The text description format for Hopf algebras and the objects living over
//! them.
//!
//! A file is a list of directives, one per line; `#` starts a comment. The
//! header fixes the field and the dimension before any coefficient appears:
//!
//! ```text
//! name sweedler
//! field rational          # or: field gf 7
//! dim 4
//! labels 1 g x gx
//! mul 1 1 0 1             # e_1·e_1 contains 1·e_0
//! unit 0 1
//! comul 2 2 0 1           # ∆e_2 contains 1·e_2⊗e_0
//! counit 0 1
//! antipode 2 3 -1         # S(e_2) contains -1·e_3
//! r_matrix 0 0 1/2        # R contains 1/2·e_0⊗e_0
//! ```
//!
//! Transmuted output adds `braided_comul i j k c`, `braided_antipode i j c`
//! and `adjoint h a b c` (`e_h ▷ e_a` contains `c·e_b`). Named objects are
//! blocks:
//!
//! ```text
//! object algebra end_v 4
//! act h m n c             # e_h·v_m contains c·v_n
//! mul a b c coef
//! unit a c
//! end
//! ```
//!
//! Object kinds are `module` (`act`), `yd` (`act`, `coaction m h n c` for
//! `λ(v_m) ∋ c·e_h⊗v_n`), `algebra` (`act`, `mul`, `unit`) and
//! `comodule_algebra` (those of `algebra` plus `left m b n c` for
//! `χ⁻(v_m) ∋ c·e_b⊗v_n` and `right m n b c` for `χ⁺(v_m) ∋ c·v_n⊗e_b`).
//! `expect key value` lines record frozen expected outputs.
//!
//! Unlisted coefficients are zero; a coefficient given twice is an error.
//! [`serialize`] writes entries in lexicographic index order and omits zeros,
//! so serializing a parsed canonical file reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::galois::ComoduleAlgebra;
use crate::hopf::{Hopf, HopfDescription};
use crate::linalg::{Field, Matrix, Scalar};
use crate::modules::{Algebra, Module};
use crate::qt::QtHopf;
use crate::transmutation::Transmuted;
use crate::yd::YdModule;
use crate::{Error, Result};

/// Largest Hopf dimension the parser accepts.
pub const MAX_DIM: usize = 64;
/// Largest object dimension the parser accepts.
pub const MAX_OBJECT_DIM: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectKind {
    Module,
    Yd,
    Algebra,
    ComoduleAlgebra,
}

impl ObjectKind {
    fn keyword(self) -> &'static str {
        match self {
            ObjectKind::Module => "module",
            ObjectKind::Yd => "yd",
            ObjectKind::Algebra => "algebra",
            ObjectKind::ComoduleAlgebra => "comodule_algebra",
        }
    }

    fn from_keyword(s: &str) -> Option<ObjectKind> {
        Some(match s {
            "module" => ObjectKind::Module,
            "yd" => ObjectKind::Yd,
            "algebra" => ObjectKind::Algebra,
            "comodule_algebra" => ObjectKind::ComoduleAlgebra,
            _ => return None,
        })
    }

    fn allows(self, directive: &str) -> bool {
        match directive {
            "act" => true,
            "coaction" => self == ObjectKind::Yd,
            "mul" | "unit" => matches!(self, ObjectKind::Algebra | ObjectKind::ComoduleAlgebra),
            "left" | "right" => self == ObjectKind::ComoduleAlgebra,
            _ => false,
        }
    }
}

/// Unverified data of one named object. `action` is `n × (d·n)`; the other
/// maps use the shapes of the corresponding library types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectData {
    pub kind: ObjectKind,
    pub name: String,
    pub dim: usize,
    pub action: Matrix,
    pub coaction: Option<Matrix>,
    pub mul: Option<Matrix>,
    pub unit: Option<Matrix>,
    pub left: Option<Matrix>,
    pub right: Option<Matrix>,
}

/// The braided structure written by `transmute`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedData {
    pub comul: Matrix,
    pub antipode: Matrix,
    pub adjoint: Matrix,
}

/// A parsed description file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfFile {
    pub name: Option<String>,
    pub hopf: HopfDescription,
    pub r_matrix: Option<Vec<Scalar>>,
    pub braided: Option<BraidedData>,
    pub objects: Vec<ObjectData>,
    pub expected: Vec<(String, String)>,
}

struct Parser {
    field: Option<Field>,
    dim: Option<usize>,
    seen: BTreeSet<(String, Vec<usize>)>,
    line: usize,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.len() <= 64 && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-' || b == b'.' || b == b'^')
}

impl Parser {
    fn field(&self) -> Result<Field> {
        self.field.ok_or_else(|| err(self.line, "coefficient before `field`"))
    }

    fn dim(&self) -> Result<usize> {
        self.dim.ok_or_else(|| err(self.line, "coefficient before `dim`"))
    }

    /// Parses `arity` indices with the given bounds followed by one
    /// coefficient, rejecting repeats of the same `(scope, indices)`.
    fn entry(&mut self, scope: &str, args: &[&str], bounds: &[usize]) -> Result<(Vec<usize>, Scalar)> {
        if args.len() != bounds.len() + 1 {
            return Err(err(self.line, format!("`{scope}` takes {} indices and a coefficient", bounds.len())));
        }
        let mut idx = Vec::with_capacity(bounds.len());
        for (a, &b) in args.iter().zip(bounds) {
            let i: usize = a.parse().map_err(|_| err(self.line, format!("bad index {a:?}")))?;
            if i >= b {
                return Err(err(self.line, format!("index {i} out of range 0..{b}")));
            }
            idx.push(i);
        }
        let c = self.field()?.parse(args[bounds.len()]).map_err(|e| err(self.line, e.to_string()))?;
        if !self.seen.insert((scope.to_string(), idx.clone())) {
            return Err(err(self.line, format!("`{scope}` entry {idx:?} given twice")));
        }
        Ok((idx, c))
    }
}

struct Header {
    mul: Matrix,
    unit: Matrix,
    comul: Matrix,
    counit: Matrix,
    antipode: Matrix,
    r: Option<Vec<Scalar>>,
    bcomul: Option<Matrix>,
    bantipode: Option<Matrix>,
    adjoint: Option<Matrix>,
}

impl Header {
    fn new(f: Field, d: usize) -> Header {
        Header {
            mul: Matrix::zeros(f, d, d * d),
            unit: Matrix::zeros(f, d, 1),
            comul: Matrix::zeros(f, d * d, d),
            counit: Matrix::zeros(f, 1, d),
            antipode: Matrix::zeros(f, d, d),
            r: None,
            bcomul: None,
            bantipode: None,
            adjoint: None,
        }
    }
}

impl ObjectData {
    fn empty(kind: ObjectKind, name: String, f: Field, d: usize, n: usize) -> ObjectData {
        let alg = matches!(kind, ObjectKind::Algebra | ObjectKind::ComoduleAlgebra);
        ObjectData {
            kind,
            name,
            dim: n,
            action: Matrix::zeros(f, n, d * n),
            coaction: (kind == ObjectKind::Yd).then(|| Matrix::zeros(f, d * n, n)),
            mul: alg.then(|| Matrix::zeros(f, n, n * n)),
            unit: alg.then(|| Matrix::zeros(f, n, 1)),
            left: None,
            right: None,
        }
    }
}

/// Parses a description file. Errors carry the 1-based line number.
pub fn parse(text: &str) -> Result<HopfFile> {
    parse_inner(text, None)
}

/// Parses a description file with every coefficient read in `field`
/// instead of the declared one, e.g. a rational file reduced mod p.
pub fn parse_over(text: &str, field: Field) -> Result<HopfFile> {
    parse_inner(text, Some(field))
}

fn parse_inner(text: &str, over: Option<Field>) -> Result<HopfFile> {
    let mut p = Parser { field: None, dim: None, seen: BTreeSet::new(), line: 0 };
    let mut name = None;
    let mut labels: Option<Vec<String>> = None;
    let mut header: Option<Header> = None;
    let mut objects: Vec<ObjectData> = Vec::new();
    let mut current: Option<ObjectData> = None;
    let mut expected = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        p.line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, args)) = words.split_first() else { continue };

        if let Some(obj) = current.as_mut() {
            if head == "end" {
                if !args.is_empty() {
                    return Err(err(p.line, "`end` takes no arguments"));
                }
                objects.push(current.take().expect("inside an object"));
                continue;
            }
            if !obj.kind.allows(head) {
                return Err(err(p.line, format!("`{head}` is not allowed in a {} object", obj.kind.keyword())));
            }
            let d = p.dim()?;
            let n = obj.dim;
            let f = p.field()?;
            let scope = format!("{}.{head}", obj.name);
            match head {
                "act" => {
                    let (i, c) = p.entry(&scope, args, &[d, n, n])?;
                    obj.action.set(i[2], i[0] * n + i[1], c);
                }
                "coaction" => {
                    let (i, c) = p.entry(&scope, args, &[n, d, n])?;
                    obj.coaction.as_mut().expect("yd").set(i[1] * n + i[2], i[0], c);
                }
                "mul" => {
                    let (i, c) = p.entry(&scope, args, &[n, n, n])?;
                    obj.mul.as_mut().expect("algebra").set(i[2], i[0] * n + i[1], c);
                }
                "unit" => {
                    let (i, c) = p.entry(&scope, args, &[n])?;
                    obj.unit.as_mut().expect("algebra").set(i[0], 0, c);
                }
                "left" => {
                    let (i, c) = p.entry(&scope, args, &[n, d, n])?;
                    obj.left.get_or_insert_with(|| Matrix::zeros(f, d * n, n)).set(i[1] * n + i[2], i[0], c);
                }
                "right" => {
                    let (i, c) = p.entry(&scope, args, &[n, n, d])?;
                    obj.right.get_or_insert_with(|| Matrix::zeros(f, n * d, n)).set(i[1] * d + i[2], i[0], c);
                }
                _ => unreachable!("checked by allows"),
            }
            continue;
        }

        match head {
            "name" => {
                let [v] = args else { return Err(err(p.line, "`name` takes one word")) };
                if !valid_name(v) {
                    return Err(err(p.line, format!("bad name {v:?}")));
                }
                if name.replace(v.to_string()).is_some() {
                    return Err(err(p.line, "`name` given twice"));
                }
            }
            "field" => {
                if p.field.is_some() {
                    return Err(err(p.line, "`field` given twice"));
                }
                p.field = Some(match args {
                    ["rational"] => Field::Rational,
                    ["gf", q] => {
                        let q: u64 = q.parse().map_err(|_| err(p.line, format!("bad modulus {q:?}")))?;
                        Field::prime(q).map_err(|e| err(p.line, e.to_string()))?
                    }
                    _ => return Err(err(p.line, "expected `field rational` or `field gf <p>`")),
                });
                if over.is_some() {
                    p.field = over;
                }
            }
            "dim" => {
                if p.dim.is_some() {
                    return Err(err(p.line, "`dim` given twice"));
                }
                let [v] = args else { return Err(err(p.line, "`dim` takes one number")) };
                let d: usize = v.parse().map_err(|_| err(p.line, format!("bad dimension {v:?}")))?;
                if d == 0 || d > MAX_DIM {
                    return Err(err(p.line, format!("dimension must be in 1..={MAX_DIM}")));
                }
                p.dim = Some(d);
                header = Some(Header::new(p.field()?, d));
            }
            "labels" => {
                let d = p.dim()?;
                if args.len() != d {
                    return Err(err(p.line, format!("expected {d} labels, got {}", args.len())));
                }
                if args.iter().any(|l| !valid_name(l)) {
                    return Err(err(p.line, "labels are words of letters, digits, `_`, `-`, `.` or `^`"));
                }
                if labels.replace(args.iter().map(|s| s.to_string()).collect()).is_some() {
                    return Err(err(p.line, "`labels` given twice"));
                }
            }
            "mul" | "unit" | "comul" | "counit" | "antipode" | "r_matrix" | "braided_comul" | "braided_antipode" | "adjoint" => {
                let d = p.dim()?;
                let f = p.field()?;
                let h = header.as_mut().expect("dim sets the header");
                match head {
                    "mul" => {
                        let (i, c) = p.entry(head, args, &[d, d, d])?;
                        h.mul.set(i[2], i[0] * d + i[1], c);
                    }
                    "unit" => {
                        let (i, c) = p.entry(head, args, &[d])?;
                        h.unit.set(i[0], 0, c);
                    }
                    "comul" => {
                        let (i, c) = p.entry(head, args, &[d, d, d])?;
                        h.comul.set(i[1] * d + i[2], i[0], c);
                    }
                    "counit" => {
                        let (i, c) = p.entry(head, args, &[d])?;
                        h.counit.set(0, i[0], c);
                    }
                    "antipode" => {
                        let (i, c) = p.entry(head, args, &[d, d])?;
                        h.antipode.set(i[1], i[0], c);
                    }
                    "r_matrix" => {
                        let (i, c) = p.entry(head, args, &[d, d])?;
                        h.r.get_or_insert_with(|| vec![f.zero(); d * d])[i[0] * d + i[1]] = c;
                    }
                    "braided_comul" => {
                        let (i, c) = p.entry(head, args, &[d, d, d])?;
                        h.bcomul.get_or_insert_with(|| Matrix::zeros(f, d * d, d)).set(i[1] * d + i[2], i[0], c);
                    }
                    "braided_antipode" => {
                        let (i, c) = p.entry(head, args, &[d, d])?;
                        h.bantipode.get_or_insert_with(|| Matrix::zeros(f, d, d)).set(i[1], i[0], c);
                    }
                    _ => {
                        let (i, c) = p.entry(head, args, &[d, d, d])?;
                        h.adjoint.get_or_insert_with(|| Matrix::zeros(f, d, d * d)).set(i[2], i[0] * d + i[1], c);
                    }
                }
            }
            "object" => {
                let [kind, oname, n] = args else { return Err(err(p.line, "expected `object <kind> <name> <dim>`")) };
                let kind = ObjectKind::from_keyword(kind).ok_or_else(|| err(p.line, format!("unknown object kind {kind:?}")))?;
                if !valid_name(oname) {
                    return Err(err(p.line, format!("bad object name {oname:?}")));
                }
                if objects.iter().any(|o| o.name == *oname) {
                    return Err(err(p.line, format!("object {oname:?} defined twice")));
                }
                let n: usize = n.parse().map_err(|_| err(p.line, format!("bad dimension {n:?}")))?;
                if n == 0 || n > MAX_OBJECT_DIM {
                    return Err(err(p.line, format!("object dimension must be in 1..={MAX_OBJECT_DIM}")));
                }
                current = Some(ObjectData::empty(kind, oname.to_string(), p.field()?, p.dim()?, n));
            }
            "expect" => {
                let [k, v] = args else { return Err(err(p.line, "expected `expect <key> <value>`")) };
                if !valid_name(k) || !valid_name(v) {
                    return Err(err(p.line, "bad expectation"));
                }
                if expected.iter().any(|(key, _)| key == k) {
                    return Err(err(p.line, format!("expectation {k:?} given twice")));
                }
                expected.push((k.to_string(), v.to_string()));
            }
            "end" => return Err(err(p.line, "`end` outside an object")),
            other => return Err(err(p.line, format!("unknown directive {other:?}"))),
        }
    }
    let last = p.line;
    if current.is_some() {
        return Err(err(last, "object block not closed with `end`"));
    }
    let field = p.field.ok_or_else(|| err(last, "missing `field`"))?;
    let d = p.dim.ok_or_else(|| err(last, "missing `dim`"))?;
    let h = header.expect("dim sets the header");
    let braided = match (h.bcomul, h.bantipode, h.adjoint) {
        (None, None, None) => None,
        (c, s, a) => Some(BraidedData {
            comul: c.unwrap_or_else(|| Matrix::zeros(field, d * d, d)),
            antipode: s.unwrap_or_else(|| Matrix::zeros(field, d, d)),
            adjoint: a.unwrap_or_else(|| Matrix::zeros(field, d, d * d)),
        }),
    };
    Ok(HopfFile {
        name,
        hopf: HopfDescription {
            field,
            labels: labels.unwrap_or_else(|| (0..d).map(|i| format!("e{i}")).collect()),
            mul: h.mul,
            unit: h.unit,
            comul: h.comul,
            counit: h.counit,
            antipode: h.antipode,
        },
        r_matrix: h.r,
        braided,
        objects,
        expected,
    })
}

/// Writes every non-zero entry of `m`, with the index tuple produced by
/// `index(row, col)`, sorted lexicographically.
fn entries(out: &mut String, key: &str, m: &Matrix, index: impl Fn(usize, usize) -> Vec<usize>) {
    let mut rows: Vec<(Vec<usize>, &Scalar)> = Vec::new();
    for i in 0..m.rows() {
        for (j, c) in m.row_terms(i) {
            rows.push((index(i, j), c));
        }
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    for (idx, c) in rows {
        out.push_str(key);
        for i in idx {
            let _ = write!(out, " {i}");
        }
        let _ = writeln!(out, " {c}");
    }
}

/// Canonical text form of a description file.
pub fn serialize(file: &HopfFile) -> String {
    let desc = &file.hopf;
    let d = desc.dim();
    let mut out = String::new();
    if let Some(n) = &file.name {
        let _ = writeln!(out, "name {n}");
    }
    let _ = writeln!(out, "field {}", desc.field);
    let _ = writeln!(out, "dim {d}");
    let _ = writeln!(out, "labels {}", desc.labels.join(" "));
    entries(&mut out, "mul", &desc.mul, |k, c| vec![c / d, c % d, k]);
    entries(&mut out, "unit", &desc.unit, |k, _| vec![k]);
    entries(&mut out, "comul", &desc.comul, |r, i| vec![i, r / d, r % d]);
    entries(&mut out, "counit", &desc.counit, |_, i| vec![i]);
    entries(&mut out, "antipode", &desc.antipode, |j, i| vec![i, j]);
    if let Some(r) = &file.r_matrix {
        let m = Matrix::column(desc.field, r.clone());
        entries(&mut out, "r_matrix", &m, |t, _| vec![t / d, t % d]);
    }
    if let Some(b) = &file.braided {
        entries(&mut out, "braided_comul", &b.comul, |r, i| vec![i, r / d, r % d]);
        entries(&mut out, "braided_antipode", &b.antipode, |j, i| vec![i, j]);
        entries(&mut out, "adjoint", &b.adjoint, |k, c| vec![c / d, c % d, k]);
    }
    for o in &file.objects {
        let n = o.dim;
        let _ = writeln!(out, "object {} {} {n}", o.kind.keyword(), o.name);
        entries(&mut out, "act", &o.action, |k, c| vec![c / n, c % n, k]);
        if let Some(m) = &o.coaction {
            entries(&mut out, "coaction", m, |r, i| vec![i, r / n, r % n]);
        }
        if let Some(m) = &o.mul {
            entries(&mut out, "mul", m, |k, c| vec![c / n, c % n, k]);
        }
        if let Some(m) = &o.unit {
            entries(&mut out, "unit", m, |k, _| vec![k]);
        }
        if let Some(m) = &o.left {
            entries(&mut out, "left", m, |r, i| vec![i, r / n, r % n]);
        }
        if let Some(m) = &o.right {
            entries(&mut out, "right", m, |r, i| vec![i, r / d, r % d]);
        }
        out.push_str("end\n");
    }
    for (k, v) in &file.expected {
        let _ = writeln!(out, "expect {k} {v}");
    }
    out
}

impl HopfFile {
    pub fn new(hopf: HopfDescription) -> HopfFile {
        HopfFile { name: None, hopf, r_matrix: None, braided: None, objects: Vec::new(), expected: Vec::new() }
    }

    pub fn field(&self) -> Field {
        self.hopf.field
    }

    pub fn build_hopf(&self) -> Result<Hopf> {
        Hopf::build(self.hopf.clone())
    }

    pub fn build_qt(&self) -> Result<QtHopf> {
        let r = self.r_matrix.clone().ok_or(Error::MissingR)?;
        QtHopf::new(self.build_hopf()?, r)
    }

    pub fn object(&self, name: &str) -> Result<&ObjectData> {
        self.objects.iter().find(|o| o.name == name).ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn expectation(&self, key: &str) -> Option<&str> {
        self.expected.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn push_object(&mut self, o: ObjectData) {
        self.objects.retain(|x| x.name != o.name);
        self.objects.push(o);
    }

    pub fn set_expectation(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        match self.expected.iter_mut().find(|(k, _)| k == key) {
            Some(e) => e.1 = value,
            None => self.expected.push((key.to_string(), value)),
        }
    }

    /// Records the braided structure of `_R H` under the file's `(H, R)`.
    pub fn set_braided(&mut self, t: &Transmuted) {
        self.braided = Some(BraidedData { comul: t.comul().clone(), antipode: t.antipode().clone(), adjoint: t.module().action() });
    }
}

impl ObjectData {
    pub fn from_module(name: &str, m: &Module) -> ObjectData {
        let f = m.field();
        let d = m.reps().len();
        let mut o = ObjectData::empty(ObjectKind::Module, name.into(), f, d, m.dim());
        o.action = m.action();
        o
    }

    pub fn from_yd(name: &str, z: &YdModule) -> ObjectData {
        let mut o = ObjectData::from_module(name, z.module());
        o.kind = ObjectKind::Yd;
        o.coaction = Some(z.coaction().clone());
        o
    }

    pub fn from_algebra(name: &str, a: &Algebra) -> ObjectData {
        let mut o = ObjectData::from_module(name, a.module());
        o.kind = ObjectKind::Algebra;
        o.mul = Some(a.mul().clone());
        o.unit = Some(a.unit().clone());
        o
    }

    pub fn from_comodule_algebra(name: &str, a: &ComoduleAlgebra) -> ObjectData {
        let mut o = ObjectData::from_algebra(name, &a.algebra);
        o.kind = ObjectKind::ComoduleAlgebra;
        o.left = a.left.clone();
        o.right = a.right.clone();
        o
    }

    fn kind_error(&self, wanted: &str) -> Error {
        Error::Shape(format!("object {:?} is a {}, not a {wanted}", self.name, self.kind.keyword()))
    }

    pub fn module(&self, h: &Hopf) -> Result<Module> {
        Module::from_action(h, self.dim, &self.action)
    }

    pub fn yd(&self, h: &Hopf) -> Result<YdModule> {
        let c = self.coaction.clone().ok_or_else(|| self.kind_error("yd"))?;
        YdModule::new(h, self.module(h)?, c)
    }

    pub fn algebra(&self, h: &Hopf) -> Result<Algebra> {
        let (Some(m), Some(u)) = (&self.mul, &self.unit) else { return Err(self.kind_error("algebra")) };
        Algebra::new(h, self.module(h)?, m.clone(), u.clone())
    }

    /// Algebra and coactions, without verifying the comodule-algebra laws.
    pub fn comodule_algebra_unchecked(&self, h: &Hopf) -> Result<ComoduleAlgebra> {
        if self.kind != ObjectKind::ComoduleAlgebra {
            return Err(self.kind_error("comodule_algebra"));
        }
        Ok(ComoduleAlgebra { algebra: self.algebra(h)?, left: self.left.clone(), right: self.right.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "name c2\nfield rational\ndim 2\nlabels 1 g\nmul 0 0 0 1\nmul 0 1 1 1\nmul 1 0 1 1\nmul 1 1 0 1\nunit 0 1\ncomul 0 0 0 1\ncomul 1 1 1 1\ncounit 0 1\ncounit 1 1\nantipode 0 0 1\nantipode 1 1 1\nr_matrix 0 0 1/2\nr_matrix 0 1 1/2\nr_matrix 1 0 1/2\nr_matrix 1 1 -1/2\nobject module sign 1\nact 0 0 0 1\nact 1 0 0 -1\nend\nexpect sign_dim 1\n";

    #[test]
    fn canonical_text_round_trips() {
        let f = parse(SMALL).unwrap();
        assert_eq!(serialize(&f), SMALL);
        let h = f.build_hopf().unwrap();
        assert_eq!(f.object("sign").unwrap().module(&h).unwrap().rep(1).get(0, 0), &Field::Rational.int(-1));
        assert!(f.build_qt().is_ok());
        assert_eq!(f.expectation("sign_dim"), Some("1"));
    }

    #[test]
    fn comments_and_defaults() {
        let f = parse("# trivial\nfield gf 5\ndim 1   # one\nmul 0 0 0 1\nunit 0 6\ncomul 0 0 0 1\ncounit 0 1\nantipode 0 0 1\n").unwrap();
        assert_eq!(f.hopf.labels, vec!["e0"]);
        assert_eq!(f.hopf.unit.get(0, 0), &Field::prime(5).unwrap().one());
        assert!(f.build_hopf().is_ok());
        assert!(matches!(f.build_qt(), Err(Error::MissingR)));
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let cases = [
            ("field rational\nmul 0 0 0 1\n", 2),
            ("field rational\ndim 2\nmul 0 0 2 1\n", 3),
            ("field rational\ndim 1\nunit 0 1\nunit 0 1\n", 4),
            ("field rational\ndim 1\nunit 0 1/0\n", 3),
            ("field gf 4\n", 1),
            ("field rational\ndim 1\nobject module m 1\ncoaction 0 0 0 1\n", 4),
            ("field rational\ndim 1\nobject module m 1\n", 3),
            ("field rational\ndim 1\nbogus\n", 3),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
