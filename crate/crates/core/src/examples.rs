//! Bundled example Hopf algebras, R-matrices and representations.

use crate::format::{HopfFile, ObjectData};
use crate::galois::ComoduleAlgebra;
use crate::hopf::{Hopf, HopfDescription};
use crate::linalg::{Field, Matrix, Scalar};
use crate::modules::{Algebra, Module};
use crate::qt::QtHopf;
use crate::transmutation::Transmuted;
use crate::{Error, Result};

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`
/// (index `a + 2b` for `gᵃxᵇ`), with `g² = 1`, `x² = 0`, `xg = -gx`,
/// `∆g = g⊗g`, `∆x = x⊗1 + g⊗x`.
pub fn sweedler_description(field: Field) -> Result<HopfDescription> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedField("Sweedler's algebra needs characteristic other than 2".into()));
    }
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mul = Matrix::zeros(field, 4, 16);
    for (a, b, c, d) in itertuples() {
        if b + d < 2 {
            let sign = if b * c % 2 == 1 { -1 } else { 1 };
            mul.set(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d), field.int(sign));
        }
    }
    let mut comul = Matrix::zeros(field, 16, 4);
    let one = field.one();
    // ∆(gᵃ) = gᵃ ⊗ gᵃ, ∆(gᵃx) = gᵃx ⊗ gᵃ + g^{a+1} ⊗ gᵃx
    for a in 0..2 {
        comul.set(idx(a, 0) * 4 + idx(a, 0), idx(a, 0), one.clone());
        comul.set(idx(a, 1) * 4 + idx(a, 0), idx(a, 1), one.clone());
        comul.set(idx((a + 1) % 2, 0) * 4 + idx(a, 1), idx(a, 1), one.clone());
    }
    let mut unit = Matrix::zeros(field, 4, 1);
    unit.set(0, 0, one.clone());
    let counit = Matrix::from_ints(field, &[&[1, 1, 0, 0]]);
    let antipode = Matrix::from_ints(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    Ok(HopfDescription {
        field,
        labels: ["1", "g", "x", "gx"].map(String::from).to_vec(),
        mul,
        unit,
        comul,
        counit,
        antipode,
    })
}

fn itertuples() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|n| (n & 1, (n >> 1) & 1, (n >> 2) & 1, (n >> 3) & 1))
}

/// `R_t = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (t/2)(x⊗x − x⊗gx + gx⊗x + gx⊗gx)`.
///
/// With `∆x = x⊗1 + g⊗x` this is the quasitriangular family; the flipped
/// nilpotent part `x⊗x + x⊗gx + gx⊗gx − gx⊗x` belongs to `∆x = 1⊗x + x⊗g`.
pub fn sweedler_r(field: Field, t: i64) -> Result<Vec<Scalar>> {
    let half = field.ratio(1, 2).ok_or_else(|| Error::UnsupportedField("1/2 is undefined".into()))?;
    let th = &half * &field.int(t);
    let mut r = vec![field.zero(); 16];
    let at = |i: usize, j: usize| i * 4 + j;
    r[at(0, 0)] = half.clone();
    r[at(0, 1)] = half.clone();
    r[at(1, 0)] = half.clone();
    r[at(1, 1)] = -&half;
    r[at(2, 2)] = th.clone();
    r[at(2, 3)] = -&th;
    r[at(3, 2)] = th.clone();
    r[at(3, 3)] = th.clone();
    Ok(r)
}

/// The two-dimensional representation `g ↦ diag(1, −1)`, `x, gx ↦ e₁₂`,
/// one matrix per basis element.
pub fn sweedler_rep2(field: Field) -> Vec<Matrix> {
    vec![
        Matrix::identity(field, 2),
        Matrix::from_ints(field, &[&[1, 0], &[0, -1]]),
        Matrix::from_ints(field, &[&[0, 1], &[0, 0]]),
        Matrix::from_ints(field, &[&[0, 1], &[0, 0]]),
    ]
}

/// The group algebra `kC_n` on `1, g, …, g^{n−1}`.
pub fn cyclic_group_description(field: Field, n: usize) -> Result<HopfDescription> {
    if n == 0 {
        return Err(Error::Shape("cyclic group of order 0".into()));
    }
    let one = field.one();
    let mut mul = Matrix::zeros(field, n, n * n);
    let mut comul = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            mul.set((i + j) % n, i * n + j, one.clone());
        }
        comul.set(i * n + i, i, one.clone());
        antipode.set((n - i) % n, i, one.clone());
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(0, 0, one.clone());
    let counit = Matrix::from_fn(field, 1, n, |_, _| one.clone());
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    Ok(HopfDescription { field, labels, mul, unit, comul, counit, antipode })
}

/// `R = (1/n) Σ_{i,j} q^{−ij} gⁱ ⊗ gʲ` for a primitive `n`-th root of unity `q`.
pub fn bicharacter_r(field: Field, n: usize, q: &Scalar) -> Result<Vec<Scalar>> {
    let bad = |m: String| Error::UnsupportedField(m);
    let inv_n = field.ratio(1, n as i64).ok_or_else(|| bad(format!("{n} is not invertible in {field}")))?;
    let primitive = (1..n).all(|k| !q.pow(k as i64).expect("integer power").is_one()) && q.pow(n as i64).is_some_and(|p| p.is_one());
    if !primitive {
        return Err(bad(format!("{q} is not a primitive {n}-th root of unity in {field}")));
    }
    let qinv = q.inv().expect("root of unity is invertible");
    let mut r = vec![field.zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            r[i * n + j] = &inv_n * &qinv.pow((i * j) as i64).expect("power");
        }
    }
    Ok(r)
}

/// `M₂(k)` on the basis `E_ij` (index `2i + j`) with the Sweedler algebra
/// acting by `g·a = GaG` and `x·a = ua − (g·a)u`, where `G = diag(1, −1)` and
/// `u = E₁₂ + s E₂₁`. For `s = 0` this is `End(V)` for the 2-dimensional
/// representation; for `s ≠ 0` the action is no longer inner.
pub fn twisted_matrix_algebra(h: &Hopf, s: &Scalar) -> Result<Algebra> {
    if h.dim() != 4 {
        return Err(Error::Shape("twisted matrix algebra needs the 4-dimensional Sweedler algebra".into()));
    }
    let f = h.field();
    let base = Algebra::endomorphisms(h, &Module::trivial(h, 2))?;
    let g = Matrix::from_ints(f, &[&[1, 0], &[0, -1]]);
    let mut u = Matrix::from_ints(f, &[&[0, 1], &[0, 0]]);
    u.set(1, 0, s.clone());
    let id = Matrix::identity(f, 2);
    let on_g = g.kron(&g)?;
    let on_x = &u.kron(&id)? - &g.kron(&(&g * &u).transpose())?;
    let on_gx = &on_g * &on_x;
    let module = Module::from_reps(h, vec![Matrix::identity(f, 4), on_g, on_x, on_gx])?;
    Algebra::new(h, module, base.mul().clone(), base.unit().clone())
}

/// `H*` with `(h ⇀ f)(y) = f(yh)` and the convolution product; a module
/// algebra that is `H*`-Galois over `k`.
pub fn dual_regular_algebra(h: &Hopf) -> Result<Algebra> {
    let f = h.field();
    let d = h.dim();
    let reps = (0..d).map(|i| Matrix::from_fn(f, d, d, |k, j| h.mul().get(j, k * d + i).clone())).collect();
    let module = Module::from_reps(h, reps)?;
    Algebra::new(h, module, h.comul().transpose(), h.counit().transpose())
}

/// A primitive `n`-th root of unity in `field`, if one exists (searched
/// exhaustively over prime fields).
pub fn primitive_root(field: Field, n: usize) -> Option<Scalar> {
    let is_primitive = |q: &Scalar| {
        q.pow(n as i64).is_some_and(|p| p.is_one()) && (1..n).all(|k| !q.pow(k as i64).is_none_or(|p| p.is_one()))
    };
    match field {
        Field::Rational => [1, -1].into_iter().map(|v| field.int(v)).find(is_primitive),
        Field::Prime(p) => (1..p.min(1 << 16) as i64).map(|v| field.int(v)).find(is_primitive),
    }
}

/// Names of the bundled examples, in suite order.
pub const BUNDLES: [&str; 6] = ["trivial", "c2_trivial_r", "c2_bicharacter", "c3_bicharacter", "sweedler_t0", "sweedler_t1"];

/// The field a bundle's checked-in fixture is written over.
pub fn native_field(name: &str) -> Field {
    if name == "c3_bicharacter" {
        Field::prime(7).expect("7 is prime")
    } else {
        Field::Rational
    }
}

fn file_for(name: &str, desc: HopfDescription, r: Vec<Scalar>) -> HopfFile {
    let mut file = HopfFile::new(desc);
    file.name = Some(name.to_string());
    file.r_matrix = Some(r);
    file
}

/// Objects every bundle carries: `k`, `k×k`, `H*`, `_R H` and `k` with
/// trivial coactions.
fn common_objects(file: &mut HopfFile, qt: &QtHopf) -> Result<()> {
    let h = qt.hopf();
    let t = Transmuted::new(qt)?;
    file.push_object(ObjectData::from_algebra("ground", &Algebra::ground(h)));
    file.push_object(ObjectData::from_algebra("k_times_k", &Algebra::diagonal(h, 2)));
    file.push_object(ObjectData::from_algebra("dual_regular", &dual_regular_algebra(h)?));
    file.push_object(ObjectData::from_comodule_algebra("rh", &ComoduleAlgebra::regular(&t)));
    file.push_object(ObjectData::from_comodule_algebra("ground_trivial", &ComoduleAlgebra::trivial(qt, Algebra::ground(h))));
    Ok(())
}

/// One bundled example over `field`: Hopf data, R-matrix and named objects,
/// without expectations. Fails with `UnsupportedField` where the example
/// does not exist.
pub fn bundle(name: &str, field: Field) -> Result<HopfFile> {
    let cyclic = |n: usize, r: Vec<Scalar>, q: Option<Scalar>| -> Result<HopfFile> {
        let desc = cyclic_group_description(field, n)?;
        let mut file = file_for(name, desc.clone(), r.clone());
        let qt = QtHopf::new(Hopf::build(desc)?, r)?;
        let h = qt.hopf();
        if let Some(q) = q.filter(|_| n > 1) {
            let reps = (0..n).map(|i| Matrix::column(field, vec![q.pow(i as i64).expect("power")])).collect();
            file.push_object(ObjectData::from_module("chi1", &Module::from_reps(h, reps)?));
        }
        common_objects(&mut file, &qt)?;
        Ok(file)
    };
    let unsupported = |why: &str| Error::UnsupportedField(format!("{name} over {field}: {why}"));
    match name {
        "trivial" => {
            let mut file = cyclic(1, vec![field.one()], None)?;
            let h = file.build_hopf()?;
            file.push_object(ObjectData::from_algebra("m2", &Algebra::endomorphisms(&h, &Module::trivial(&h, 2))?));
            Ok(file)
        }
        "c2_trivial_r" => {
            let mut r = vec![field.zero(); 4];
            r[0] = field.one();
            cyclic(2, r, primitive_root(field, 2).filter(|q| !q.is_one()))
        }
        "c2_bicharacter" | "c3_bicharacter" => {
            let n = if name == "c2_bicharacter" { 2 } else { 3 };
            let q = primitive_root(field, n).ok_or_else(|| unsupported("no primitive root of unity"))?;
            let r = bicharacter_r(field, n, &q)?;
            cyclic(n, r, Some(q))
        }
        "sweedler_t0" | "sweedler_t1" => {
            let t = if name == "sweedler_t0" { 0 } else { 1 };
            let desc = sweedler_description(field)?;
            let r = sweedler_r(field, t)?;
            let mut file = file_for(name, desc.clone(), r.clone());
            let qt = QtHopf::new(Hopf::build(desc)?, r)?;
            let h = qt.hopf();
            let v = Module::from_reps(h, sweedler_rep2(field))?;
            file.push_object(ObjectData::from_module("v", &v));
            file.push_object(ObjectData::from_algebra("end_v", &Algebra::endomorphisms(h, &v)?));
            file.push_object(ObjectData::from_algebra("twisted_m2", &twisted_matrix_algebra(h, &field.one())?));
            common_objects(&mut file, &qt)?;
            Ok(file)
        }
        other => Err(Error::UnknownObject(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Hopf;
    use crate::qt::{check_four_leg_ybe, check_qt, check_qybe};

    #[test]
    fn sweedler_is_quasitriangular() {
        for field in [Field::Rational, Field::prime(7).unwrap()] {
            let h = Hopf::build(sweedler_description(field).unwrap()).unwrap();
            for t in [0, 1] {
                let r = sweedler_r(field, t).unwrap();
                for c in check_qt(&h, &r).unwrap() {
                    assert!(c.passed(), "t={t} {c:?}");
                }
                assert!(check_qybe(&h, &r).unwrap().passed());
                assert!(check_four_leg_ybe(&h, &r).unwrap().passed());
            }
        }
        assert!(sweedler_description(Field::prime(2).unwrap()).is_err());
    }

    #[test]
    fn bicharacters() {
        let q = Field::Rational;
        let f7 = Field::prime(7).unwrap();
        for (field, n, root) in [(q, 1, 1), (q, 2, -1), (f7, 1, 1), (f7, 2, -1), (f7, 3, 2)] {
            let h = Hopf::build(cyclic_group_description(field, n).unwrap()).unwrap();
            let r = bicharacter_r(field, n, &field.int(root)).unwrap();
            for c in check_qt(&h, &r).unwrap() {
                assert!(c.passed(), "n={n} {c:?}");
            }
        }
        assert!(bicharacter_r(f7, 3, &f7.int(1)).is_err());
    }
}
