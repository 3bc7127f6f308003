use qthopf::examples::{bundle, dual_regular_algebra, native_field, BUNDLES};
use qthopf::format::{parse, serialize};
use qthopf::galois::ComoduleAlgebra;
use qthopf::pipeline::{brauer_run, comodule_algebra, galois_checks, resolve_z, transmute_checks, transmuted_file, verify_checks, Loaded};
use qthopf::suite::{fixture_file, generate_fixture, Fixtures};
use qthopf::{Error, Field, Status};

fn loaded(name: &str) -> Loaded {
    let text = Fixtures::bundled().get(name).unwrap().to_string();
    Loaded::new(parse(&text).unwrap()).unwrap()
}

#[test]
fn bundled_fixtures_verify() {
    for name in BUNDLES {
        let l = loaded(name);
        assert_eq!(l.h().field(), native_field(name));
        let checks = verify_checks(&l.file).unwrap();
        assert!(checks.iter().all(|c| c.passed()), "{name}: {:?}", checks.iter().find(|c| !c.passed()));
    }
}

#[test]
fn cheap_fixtures_regenerate_bit_exactly() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in ["trivial", "c2_trivial_r", "c2_bicharacter", "c3_bicharacter"] {
        let on_disk = std::fs::read_to_string(dir.join(fixture_file(name))).unwrap();
        assert_eq!(generate_fixture(name).unwrap(), on_disk, "{name}");
    }
}

#[test]
fn transmute_output_reloads() {
    let l = loaded("sweedler_t0");
    let text = serialize(&transmuted_file(&l));
    let back = parse(&text).unwrap();
    let b = back.braided.as_ref().unwrap();
    assert_eq!(&b.comul, l.t.comul());
    assert_eq!(&b.antipode, l.t.antipode());
    let again = Loaded::new(back).unwrap();
    assert!(transmute_checks(&again).iter().all(|c| c.passed()));
    assert!(verify_checks(&again.file).unwrap().iter().all(|c| c.passed()));
}

#[test]
fn trivial_r_transmutation_writes_the_same_coproduct_lines() {
    let l = loaded("c2_trivial_r");
    let text = serialize(&transmuted_file(&l));
    let pick = |prefix: &str| text.lines().filter(|x| x.starts_with(prefix)).map(|x| x[prefix.len()..].to_string()).collect::<Vec<_>>();
    assert_eq!(pick("comul "), pick("braided_comul "));
    assert_eq!(pick("antipode "), pick("braided_antipode "));
}

#[test]
fn regular_object_is_bi_galois_and_k_is_not() {
    let l = loaded("sweedler_t1");
    let rh = galois_checks(&l, &comodule_algebra(&l, "rh").unwrap()).unwrap();
    assert!(rh.iter().all(|c| c.passed()));
    assert!(rh.iter().any(|c| c.name.contains("gamma")));
    assert!(rh.iter().any(|c| c.name == "quantum commutative" && c.passed()));
    let k = galois_checks(&l, &comodule_algebra(&l, "ground_trivial").unwrap()).unwrap();
    let can = k.iter().find(|c| c.name == "can+ bijective").unwrap();
    assert_eq!(can.status, Status::Fail);
    assert_eq!(can.detail.as_deref(), Some("4x1 of rank 1"));
}

#[test]
fn perturbed_coaction_fails_a_comodule_law_first() {
    let l = loaded("sweedler_t1");
    let ComoduleAlgebra { algebra, left, right } = ComoduleAlgebra::regular(&l.t);
    let mut left = left.unwrap();
    let v = -left.get(2, 2);
    left.set(2, 2, v);
    let bad = ComoduleAlgebra { algebra, left: Some(left), right };
    let checks = galois_checks(&l, &bad).unwrap();
    let first = checks.iter().find(|c| c.status == Status::Fail).unwrap();
    assert!(first.anchor.contains("comodule"), "{first:?}");
    assert!(checks.last().unwrap().status == Status::Skip);
}

#[test]
fn brauer_examples() {
    let l = loaded("sweedler_t1");
    let zs: Vec<_> = ["k", "lambda1:v", "rh"].iter().map(|n| resolve_z(&l, n).unwrap()).collect();

    let kk = brauer_run(&l, &l.algebra("k_times_k").unwrap(), &zs).unwrap();
    assert!(matches!(kk.azumaya, Err(Error::NotAzumaya { .. })));
    assert!(kk.zs.is_empty());
    assert!(kk.checks.iter().any(|c| c.status == Status::Skip));

    let end_v = brauer_run(&l, &l.algebra("end_v").unwrap(), &zs).unwrap();
    assert!(end_v.azumaya.is_ok());
    assert_eq!(end_v.a0_dim, 1);
    assert!(matches!(end_v.hstar_galois, Err(Error::NotGalois { rank: 12, needed: 16 })));

    let tw = brauer_run(&l, &l.algebra("twisted_m2").unwrap(), &zs).unwrap();
    assert_eq!(tw.pi_dim, Some(4));
    assert_eq!(tw.pi_bigalois, Some(true));
    assert_eq!(tw.pi_quantum_commutative, Some(true));
    let dims: Vec<_> = tw.zs.iter().map(|z| (z.name.as_str(), z.invariants_dim)).collect();
    assert_eq!(dims, vec![("k", Some(1)), ("lambda1:v", Some(2)), ("rh", Some(4))]);
    assert!(tw.all_checks().iter().all(|c| c.passed()));
    assert!(tw.all_checks().iter().any(|c| c.anchor == "pi(A) as invariants"));
}

#[test]
fn ground_over_trivial_hopf_has_pi_equal_to_k() {
    let l = loaded("trivial");
    let zs = vec![resolve_z(&l, "rh").unwrap()];
    let run = brauer_run(&l, &l.algebra("ground").unwrap(), &zs).unwrap();
    assert_eq!(run.pi_dim, Some(1));
    assert!(run.all_checks().iter().all(|c| c.passed()));
}

#[test]
fn dual_regular_is_azumaya_only_with_a_nontrivial_braiding() {
    let q = Field::Rational;
    for (name, expect) in [("sweedler_t0", false), ("sweedler_t1", true), ("c2_trivial_r", false), ("c2_bicharacter", true)] {
        let l = Loaded::new(bundle(name, q).unwrap()).unwrap();
        let a = dual_regular_algebra(l.h()).unwrap();
        let run = brauer_run(&l, &a, &[]).unwrap();
        assert_eq!(run.azumaya.is_ok(), expect, "{name}");
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = parse("field rational\ndim 2\nmul 0 0 5 1\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    let err = parse("field gf 6\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 1, .. }));
}

#[test]
fn unsupported_fields_are_reported() {
    let gf2 = Field::prime(2).unwrap();
    assert!(matches!(bundle("sweedler_t0", gf2), Err(Error::UnsupportedField(_))));
    assert!(matches!(bundle("c3_bicharacter", Field::Rational), Err(Error::UnsupportedField(_))));
    assert!(bundle("trivial", gf2).is_ok());
}
