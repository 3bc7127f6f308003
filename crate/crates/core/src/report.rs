//! Check records shared by every verifier, and the report they roll up into.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{Matrix, TensorIndex};

/// Version of the machine-readable report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// First place two structure maps disagree: the input basis tuple, the
/// output basis tuple, and the two coefficients there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    /// Compares `lhs` and `rhs` column by column, reporting the first entry
    /// that differs. Shapes must agree.
    pub fn between(lhs: &Matrix, rhs: &Matrix, in_dims: &[usize], out_dims: &[usize]) -> Option<Witness> {
        assert_eq!((lhs.rows(), lhs.cols()), (rhs.rows(), rhs.cols()), "witness shapes");
        let (ti, to) = (TensorIndex::new(in_dims), TensorIndex::new(out_dims));
        debug_assert_eq!(ti.size(), lhs.cols());
        debug_assert_eq!(to.size(), lhs.rows());
        for j in 0..lhs.cols() {
            for i in 0..lhs.rows() {
                let (a, b) = (lhs.get(i, j), rhs.get(i, j));
                if a != b {
                    return Some(Witness { input: ti.split(j), output: to.split(i), lhs: a.to_string(), rhs: b.to_string() });
                }
            }
        }
        None
    }

    pub fn note(input: Vec<usize>, detail: impl Into<String>) -> Witness {
        Witness { input, output: Vec::new(), lhs: detail.into(), rhs: String::new() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "input {:?}", self.input)?;
        if !self.output.is_empty() {
            write!(f, ", output {:?}: {} vs {}", self.output, self.lhs, self.rhs)?;
        } else if !self.lhs.is_empty() {
            write!(f, ": {}", self.lhs)?;
        }
        Ok(())
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Check {
        Check { name: name.into(), anchor: anchor.into(), status: Status::Pass, witness: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, witness: Option<Witness>) -> Check {
        Check { name: name.into(), anchor: anchor.into(), status: Status::Fail, witness, detail: None }
    }

    pub fn skip(name: impl Into<String>, anchor: impl Into<String>, why: impl Into<String>) -> Check {
        Check { name: name.into(), anchor: anchor.into(), status: Status::Skip, witness: None, detail: Some(why.into()) }
    }

    pub fn flag(name: impl Into<String>, anchor: impl Into<String>, ok: bool) -> Check {
        if ok {
            Check::pass(name, anchor)
        } else {
            Check::fail(name, anchor, None)
        }
    }

    /// Passes iff `lhs == rhs`; otherwise carries the first differing entry.
    pub fn equal(
        name: impl Into<String>,
        anchor: impl Into<String>,
        lhs: &Matrix,
        rhs: &Matrix,
        in_dims: &[usize],
        out_dims: &[usize],
    ) -> Check {
        match Witness::between(lhs, rhs, in_dims, out_dims) {
            None => Check::pass(name, anchor),
            Some(w) => Check::fail(name, anchor, Some(w)),
        }
    }

    pub fn from_result(name: impl Into<String>, anchor: impl Into<String>, r: Result<(), crate::Error>) -> Check {
        match r {
            Ok(()) => Check::pass(name, anchor),
            Err(crate::Error::Verification { witness, what }) => {
                Check { detail: Some(what), ..Check::fail(name, anchor, witness) }
            }
            Err(e) => Check { detail: Some(e.to_string()), ..Check::fail(name, anchor, None) },
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `Ok` for passing or skipped checks, a verification error otherwise.
    pub fn ensure(self) -> Result<(), crate::Error> {
        match self.status {
            Status::Fail => Err(crate::Error::Verification { what: self.name, witness: self.witness }),
            _ => Ok(()),
        }
    }
}

/// Ordered list of checks from one command.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub field: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>, field: impl Into<String>) -> Report {
        Report { schema: SCHEMA_VERSION, command: command.into(), field: field.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// True iff no check failed; skipped checks do not count against.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} over {}\n", self.command, self.field);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("[{tag}] {} ({})", c.name, c.anchor));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" - {d}"));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!(" witness: {w}"));
            }
            out.push('\n');
        }
        let (p, f, s) = self.checks.iter().fold((0, 0, 0), |(p, f, s), c| match c.status {
            Status::Pass => (p + 1, f, s),
            Status::Fail => (p, f + 1, s),
            Status::Skip => (p, f, s + 1),
        });
        out.push_str(&format!("{p} passed, {f} failed, {s} skipped\n"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn witness_reports_tensor_indices() {
        let q = Field::Rational;
        let a = Matrix::identity(q, 4);
        let mut b = a.clone();
        b.set(2, 3, q.int(5));
        let w = Witness::between(&a, &b, &[2, 2], &[2, 2]).unwrap();
        assert_eq!(w.input, vec![1, 1]);
        assert_eq!(w.output, vec![1, 0]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("0", "5"));
        assert!(Witness::between(&a, &a, &[4], &[4]).is_none());
    }

    #[test]
    fn skips_do_not_fail_a_report() {
        let mut r = Report::new("suite", "gf 2");
        r.push(Check::skip("sweedler", "examples", "characteristic 2"));
        r.push(Check::pass("x", "y"));
        assert!(r.ok());
        r.push(Check::fail("z", "w", None));
        assert!(!r.ok());
        assert_eq!(r.failures().count(), 1);
    }
}
