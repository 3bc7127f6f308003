//! Independent recomputations of structure constants, compared entry by
//! entry with what the library builds.

#![allow(clippy::needless_range_loop)]

use qthopf::examples::{bicharacter_r, cyclic_group_description, sweedler_description, sweedler_r};
use qthopf::hopf::Hopf;
use qthopf::qt::{check_qt, QtHopf};
use qthopf::transmutation::Transmuted;
use qthopf::{Field, Scalar};

const Q: Field = Field::Rational;

/// Basis index of g^a x^b.
fn idx(a: usize, b: usize) -> usize {
    a + 2 * b
}

type Elem = Vec<Scalar>;

fn zero() -> Elem {
    vec![Q.zero(); 4]
}

fn basis(i: usize) -> Elem {
    let mut e = zero();
    e[i] = Q.one();
    e
}

/// (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}, zero once x² appears.
fn mul(u: &Elem, v: &Elem) -> Elem {
    let mut out = zero();
    for (i, ci) in u.iter().enumerate() {
        for (j, cj) in v.iter().enumerate() {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d > 1 {
                continue;
            }
            let sign = if b * c == 1 { Q.int(-1) } else { Q.one() };
            let k = idx((a + c) % 2, b + d);
            out[k] = &out[k] + &(&(ci * cj) * &sign);
        }
    }
    out
}

type Tens = Vec<Scalar>;

fn tmul(u: &Tens, v: &Tens) -> Tens {
    let mut out = vec![Q.zero(); 16];
    for i in 0..16 {
        for j in 0..16 {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            let left = mul(&basis(i / 4), &basis(j / 4));
            let right = mul(&basis(i % 4), &basis(j % 4));
            let c = &u[i] * &v[j];
            for p in 0..4 {
                for q in 0..4 {
                    out[p * 4 + q] = &out[p * 4 + q] + &(&c * &(&left[p] * &right[q]));
                }
            }
        }
    }
    out
}

fn pure(a: &Elem, b: &Elem) -> Tens {
    let mut out = vec![Q.zero(); 16];
    for p in 0..4 {
        for q in 0..4 {
            out[p * 4 + q] = &a[p] * &b[q];
        }
    }
    out
}

fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

/// ∆g = g⊗g, ∆x = x⊗1 + g⊗x, extended multiplicatively.
fn comul(i: usize) -> Tens {
    let (a, b) = (i % 2, i / 2);
    let dg = pure(&basis(1), &basis(1));
    let dx = add(&pure(&basis(2), &basis(0)), &pure(&basis(1), &basis(2)));
    let mut out = pure(&basis(0), &basis(0));
    if a == 1 {
        out = tmul(&out, &dg);
    }
    if b == 1 {
        out = tmul(&out, &dx);
    }
    out
}

/// S(g) = g, S(x) = -gx, anti-multiplicative.
fn antipode(i: usize) -> Elem {
    let (a, b) = (i % 2, i / 2);
    let sx: Elem = vec![Q.zero(), Q.zero(), Q.zero(), Q.int(-1)];
    let mut out = basis(0);
    if b == 1 {
        out = mul(&out, &sx);
    }
    if a == 1 {
        out = mul(&out, &basis(1));
    }
    out
}

fn apply_s(u: &Elem) -> Elem {
    (0..4).fold(zero(), |acc, i| add(&acc, &antipode(i).iter().map(|c| c * &u[i]).collect::<Vec<_>>()))
}

/// h ▷ y = h₁ y S(h₂).
fn adjoint(h: usize, y: &Elem) -> Elem {
    let d = comul(h);
    let mut out = zero();
    for p in 0..4 {
        for q in 0..4 {
            if d[p * 4 + q].is_zero() {
                continue;
            }
            let t = mul(&mul(&basis(p), y), &antipode(q));
            out = add(&out, &t.iter().map(|c| c * &d[p * 4 + q]).collect::<Vec<_>>());
        }
    }
    out
}

#[test]
fn sweedler_structure_constants_match_the_presentation() {
    let h = Hopf::build(sweedler_description(Q).unwrap()).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let prod = mul(&basis(i), &basis(j));
            for k in 0..4 {
                assert_eq!(h.mul().get(k, i * 4 + j), &prod[k], "e{i} e{j} at e{k}");
            }
        }
        let d = comul(i);
        for r in 0..16 {
            assert_eq!(h.comul().get(r, i), &d[r], "comul e{i} at {r}");
        }
        let s = antipode(i);
        for k in 0..4 {
            assert_eq!(h.antipode().get(k, i), &s[k]);
        }
    }
}

/// ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (t/2)·nil with the given nilpotent signs on
/// x⊗x, x⊗gx, gx⊗x, gx⊗gx.
fn r_with(t: i64, nil: [i64; 4]) -> Vec<Scalar> {
    let half = Q.ratio(1, 2).unwrap();
    let mut r = vec![Q.zero(); 16];
    for (p, v) in [(0, 1), (1, 1), (4, 1), (5, -1)] {
        r[p] = &half * &Q.int(v);
    }
    for (p, v) in [10usize, 11, 14, 15].into_iter().zip(nil) {
        r[p] = &half * &Q.int(t * v);
    }
    r
}

#[test]
fn sweedler_r_family_values() {
    let h = Hopf::build(sweedler_description(Q).unwrap()).unwrap();
    assert_eq!(sweedler_r(Q, 0).unwrap(), r_with(0, [1, -1, 1, 1]));
    assert_eq!(sweedler_r(Q, 1).unwrap(), r_with(1, [1, -1, 1, 1]));
    for t in [0, 1] {
        assert!(check_qt(&h, &sweedler_r(Q, t).unwrap()).unwrap().iter().all(|c| c.passed()));
    }
    // x⊗x + x⊗gx + gx⊗gx − gx⊗x is not an R-matrix for ∆x = x⊗1 + g⊗x.
    let stated = check_qt(&h, &r_with(1, [1, 1, -1, 1])).unwrap();
    assert!(stated.iter().any(|c| !c.passed()));
}

#[test]
fn bicharacter_values() {
    let half = Q.ratio(1, 2).unwrap();
    let r = bicharacter_r(Q, 2, &Q.int(-1)).unwrap();
    assert_eq!(r, vec![half.clone(), half.clone(), half.clone(), -&half]);
    let f7 = Field::prime(7).unwrap();
    let r3 = bicharacter_r(f7, 3, &f7.int(2)).unwrap();
    // 1/3 = 5 and 2⁻¹ = 4 in GF(7): entries 5·4^{ij}.
    let expect: Vec<Scalar> = [0, 0, 0, 0, 1, 2, 0, 2, 4].iter().map(|e| &f7.int(5) * &f7.int(4).pow(*e).unwrap()).collect();
    assert_eq!(r3, expect);
    let h = Hopf::build(cyclic_group_description(f7, 3).unwrap()).unwrap();
    assert!(check_qt(&h, &r3).unwrap().iter().all(|c| c.passed()));
    assert_eq!(bicharacter_r(Q, 1, &Q.one()).unwrap(), vec![Q.one()]);
}

fn r_terms(r: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
    (0..16).filter(|&p| !r[p].is_zero()).map(|p| (p / 4, p % 4, r[p].clone())).collect()
}

/// ∆̲(x) = x₁S(R²) ⊗ R¹▷x₂.
fn braided_comul(r: &[Scalar], i: usize) -> Tens {
    let d = comul(i);
    let mut out = vec![Q.zero(); 16];
    for (a, b, c) in r_terms(r) {
        for p in 0..4 {
            for q in 0..4 {
                if d[p * 4 + q].is_zero() {
                    continue;
                }
                let left = mul(&basis(p), &antipode(b));
                let right = adjoint(a, &basis(q));
                let coef = &c * &d[p * 4 + q];
                let t = pure(&left, &right);
                out = add(&out, &t.iter().map(|v| v * &coef).collect::<Vec<_>>());
            }
        }
    }
    out
}

/// S̲(x) = R² S(R¹▷x).
fn braided_antipode(r: &[Scalar], i: usize) -> Elem {
    let mut out = zero();
    for (a, b, c) in r_terms(r) {
        let t = mul(&basis(b), &apply_s(&adjoint(a, &basis(i))));
        out = add(&out, &t.iter().map(|v| v * &c).collect::<Vec<_>>());
    }
    out
}

#[test]
fn transmuted_sweedler_matches_direct_formulas() {
    for t in [0, 1] {
        let r = sweedler_r(Q, t).unwrap();
        let qt = QtHopf::new(Hopf::build(sweedler_description(Q).unwrap()).unwrap(), r.clone()).unwrap();
        let tr = Transmuted::new(&qt).unwrap();
        for i in 0..4 {
            let d = braided_comul(&r, i);
            for row in 0..16 {
                assert_eq!(tr.comul().get(row, i), &d[row], "t={t} e{i} row {row}");
            }
            let s = braided_antipode(&r, i);
            for k in 0..4 {
                assert_eq!(tr.antipode().get(k, i), &s[k], "t={t} S e{i}");
            }
        }
    }
}

#[test]
fn triangular_sweedler_braided_coproduct_is_frozen() {
    // t = 0: x becomes primitive, ∆̲x = 1⊗x + x⊗1.
    let r = sweedler_r(Q, 0).unwrap();
    let x = braided_comul(&r, idx(0, 1));
    let nonzero: Vec<(usize, String)> = (0..16).filter(|&p| !x[p].is_zero()).map(|p| (p, x[p].to_string())).collect();
    assert_eq!(nonzero, vec![(2, "1".to_string()), (8, "1".to_string())]);
}
