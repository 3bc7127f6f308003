use proptest::prelude::*;
use qthopf::examples::{bundle, sweedler_description, sweedler_r, sweedler_rep2};
use qthopf::format::{parse, serialize, ObjectData};
use qthopf::galois::coaction_into_cotensor;
use qthopf::hopf::{axiom_checks, Hopf};
use qthopf::modules::Module;
use qthopf::qt::QtHopf;
use qthopf::transmutation::{bicomodule_to_yd, transferred_phi, yd_to_bicomodule, Transmuted};
use qthopf::yd::{phi, YdModule};
use qthopf::{Field, Matrix, Subspace};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(7)), Just(Field::Prime(2))]
}

fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..5, rows * cols).prop_map(move |v| Matrix::from_fn(field, rows, cols, |i, j| field.int(v[i * cols + j])))
}

fn field_and_matrix() -> impl Strategy<Value = Matrix> {
    (fields(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

proptest! {
    #[test]
    fn rank_nullity_and_kernel(m in field_and_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn inverse_when_full_rank(m in (fields(), 1usize..5).prop_flat_map(|(f, n)| matrix(f, n, n))) {
        match m.invert() {
            Ok(inv) => prop_assert!((&m * &inv).is_identity() && (&inv * &m).is_identity()),
            Err(_) => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn kron_mixed_product(
        (a, b, c, d) in fields().prop_flat_map(|f| (matrix(f, 2, 3), matrix(f, 2, 2), matrix(f, 3, 2), matrix(f, 2, 1)))
    ) {
        let lhs = &a.kron(&b).unwrap() * &c.kron(&d).unwrap();
        let rhs = (&a * &c).kron(&(&b * &d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn span_ignores_column_operations(
        (a, p) in fields().prop_flat_map(|f| (matrix(f, 4, 3), matrix(f, 3, 3)))
    ) {
        prop_assume!(p.rank() == 3);
        prop_assert_eq!(Subspace::span(&a), Subspace::span(&(&a * &p)));
    }

    #[test]
    fn scalars_print_and_parse(f in fields(), n in -50i64..50, d in 1i64..20) {
        if let Some(x) = f.ratio(n, d) {
            prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x.clone());
            if let Some(inv) = x.inv() {
                prop_assert!((&x * &inv).is_one());
            }
        }
    }
}

/// `rep2 ⊕ sign character`, conjugated by `p`.
fn sweedler_module(h: &Hopf, field: Field, sign: i64, p: &Matrix) -> Option<Module> {
    let pinv = p.invert().ok()?;
    let base = sweedler_rep2(field);
    let extra = [1, sign, 0, 0];
    let reps = base
        .iter()
        .zip(extra)
        .map(|(m, e)| {
            let mut big = Matrix::zeros(field, 3, 3);
            for i in 0..2 {
                for j in 0..2 {
                    big.set(i, j, m.get(i, j).clone());
                }
            }
            big.set(2, 2, field.int(e));
            &(p * &big) * &pinv
        })
        .collect();
    Module::from_reps(h, reps).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lifted_modules_satisfy_the_dictionary(
        t in 0i64..2, sign in prop::sample::select(vec![1i64, -1]), p in matrix(Field::Rational, 3, 3)
    ) {
        let q = Field::Rational;
        let h = Hopf::build(sweedler_description(q).unwrap()).unwrap();
        let Some(m) = sweedler_module(&h, q, sign, &p) else { return Ok(()) };
        let qt = QtHopf::new(h.clone(), sweedler_r(q, t).unwrap()).unwrap();
        let tr = Transmuted::new(&qt).unwrap();
        for z in [YdModule::lift_lambda1(&qt, &m).unwrap(), YdModule::lift_lambda2(&qt, &m).unwrap()] {
            let b = yd_to_bicomodule(&qt, &z);
            prop_assert!(b.checks(&tr, &h).iter().all(|c| c.passed()));
            prop_assert!(b.cocommutative_check(&tr, &qt).passed());
            prop_assert_eq!(bicomodule_to_yd(&qt, &b).unwrap(), z.clone());
            prop_assert_eq!(transferred_phi(&qt, &b, &b).unwrap(), phi(&h, &z, &z));
            let (cot, f) = coaction_into_cotensor(&qt, &tr, &b.left_comodule()).unwrap();
            prop_assert_eq!(cot.dim(), z.dim());
            prop_assert_eq!(f.rank(), z.dim());
        }
    }

    #[test]
    fn braiding_satisfies_the_braid_relation(
        t in 0i64..2, sign in prop::sample::select(vec![1i64, -1]), p in matrix(Field::Rational, 3, 3)
    ) {
        let q = Field::Rational;
        let h = Hopf::build(sweedler_description(q).unwrap()).unwrap();
        let Some(m) = sweedler_module(&h, q, sign, &p) else { return Ok(()) };
        let qt = QtHopf::new(h.clone(), sweedler_r(q, t).unwrap()).unwrap();
        let z = YdModule::lift_lambda2(&qt, &m).unwrap();
        let c = phi(&h, &z, &z);
        let id = Matrix::identity(q, 3);
        let (a, b) = (c.kron(&id).unwrap(), id.kron(&c).unwrap());
        prop_assert_eq!(&(&a * &b) * &a, &(&b * &a) * &b);
    }

    #[test]
    fn every_sign_flip_of_a_sweedler_structure_map_is_detected(map in 0usize..5, pick in 0usize..64) {
        let mut d = sweedler_description(Field::Rational).unwrap();
        let target = match map {
            0 => &mut d.mul,
            1 => &mut d.unit,
            2 => &mut d.comul,
            3 => &mut d.counit,
            _ => &mut d.antipode,
        };
        let nz: Vec<(usize, usize)> = (0..target.rows())
            .flat_map(|i| (0..target.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| !target.get(i, j).is_zero())
            .collect();
        let (i, j) = nz[pick % nz.len()];
        let v = -target.get(i, j);
        target.set(i, j, v);
        prop_assert!(axiom_checks(&d).unwrap().iter().any(|c| !c.passed()));
    }

    #[test]
    fn serialization_round_trips_random_objects(
        entries in prop::collection::vec((0usize..2, 0usize..2, 0usize..2, -9i64..10, 1i64..5), 0..12),
        keys in prop::collection::vec(("[a-z_]{1,8}", "[a-z0-9]{1,5}"), 0..4),
        f in prop_oneof![Just(Field::Rational), Just(Field::Prime(7))]
    ) {
        let mut file = bundle("c2_trivial_r", f).unwrap();
        let h = file.build_hopf().unwrap();
        let mut obj = ObjectData::from_module("m", &Module::trivial(&h, 2));
        for (a, b, c, n, den) in entries {
            if let Some(x) = f.ratio(n, den) {
                obj.action.set(a, b * 2 + c, x);
            }
        }
        file.push_object(obj);
        for (k, v) in keys {
            file.set_expectation(&k, &v);
        }
        let text = serialize(&file);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back, file);
    }

    #[test]
    fn parser_never_panics(text in "(([a-z_]{1,10}|-?[0-9]{1,3}(/[0-9]{1,2})?)[ \n]{1,2}){0,40}") {
        let _ = parse(&text);
    }
}
