use proptest::prelude::*;

use nassoc::algebra::{ideal_closure, Algebra, Morphism};
use nassoc::analysis::unitary_to_automorphism;
use nassoc::characterization::split;
use nassoc::constructors::{
    complex_algebra, conjugate, dual_numbers, heisenberg, jspin, quaternions, rational_pair, rationals, twisted_v3,
    vidinli, vidinli7_directional, vidinli_jordan,
};
use nassoc::json::{algebra_from_str, algebra_to_string};
use nassoc::linalg::rational::{frac, int, parse_strict, to_canonical};
use nassoc::linalg::{Matrix, Rational, Vector};
use nassoc::pushout::{degenerate_pushout, mixed_pushout_j, PushoutSpec};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

fn vector(d: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), d).prop_map(Vector::new)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(rational(), cols), rows)
        .prop_map(|r| Matrix::from_rows(r).expect("rectangular"))
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| matrix(n, n))
}

fn shaped() -> impl Strategy<Value = Matrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Arbitrary bilinear table on `Q^d` with small entries, no unit.
fn table(d: usize) -> impl Strategy<Value = Algebra> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, d), d * d).prop_map(move |rows| {
        Algebra::from_fn("random", d, None, |i, j| Vector::from_ints(&rows[i * d + j])).unwrap()
    })
}

fn vidinli_and_vectors() -> impl Strategy<Value = (usize, Vector, Vector, Vector)> {
    (1usize..=3).prop_flat_map(|n| {
        let d = 2 * n + 1;
        (Just(n), vector(d), vector(d), vector(d))
    })
}

fn unital_pool() -> Vec<Algebra> {
    vec![
        vidinli(1).unwrap(),
        vidinli(2).unwrap(),
        complex_algebra(),
        jspin(1).unwrap(),
        jspin(2).unwrap(),
        vidinli_jordan(3).unwrap(),
        dual_numbers(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_rank_nullity_holds(m in shaped()) {
        let (r, rank) = m.rref();
        let (rr, rank2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rank + m.kernel().dim(), m.cols());
        prop_assert_eq!(rank, m.image().dim());
        for v in m.kernel().basis() {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn rational_text_round_trips(x in rational(), big in any::<i64>(), q in 1i64..=i64::MAX) {
        prop_assert_eq!(parse_strict(&to_canonical(&x)).unwrap(), x.clone());
        let y = frac(big, q);
        prop_assert_eq!(parse_strict(&to_canonical(&y)).unwrap(), y);
    }

    #[test]
    fn vidinli_is_bilinear_and_unital((n, x, y, z) in vidinli_and_vectors(), c in rational()) {
        let v = vidinli(n).unwrap();
        let xz = &x.scale(&c) + &z;
        let lhs = v.multiply(&xz, &y).unwrap();
        let rhs = &v.multiply(&x, &y).unwrap().scale(&c) + &v.multiply(&z, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = v.multiply(&y, &xz).unwrap();
        let rhs = &v.multiply(&y, &x).unwrap().scale(&c) + &v.multiply(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
        let e1 = v.basis(0);
        prop_assert_eq!(v.multiply(&e1, &x).unwrap(), x.clone());
        prop_assert_eq!(v.multiply(&x, &e1).unwrap(), x);
    }

    #[test]
    fn conjugation_identities((n, a, b, _z) in vidinli_and_vectors()) {
        let v = vidinli(n).unwrap();
        let e1 = v.basis(0);
        let (ca, cb) = (conjugate(&v, &a).unwrap(), conjugate(&v, &b).unwrap());
        let polar = &v.multiply(&ca, &b).unwrap() + &v.multiply(&cb, &a).unwrap();
        prop_assert_eq!(polar, e1.scale(&(int(2) * a.dot(&b))));
        prop_assert_eq!(v.multiply(&ca, &a).unwrap(), e1.scale(&a.norm_sq()));
        prop_assert_eq!(v.multiply(&a, &ca).unwrap(), e1.scale(&a.norm_sq()));
        prop_assert_eq!(conjugate(&v, &ca).unwrap(), a);
    }

    #[test]
    fn rotations_are_automorphisms(k in 0usize..2, pairs in prop::collection::vec((vector(5), vector(5)), 50)) {
        let mut psi = Matrix::identity(4);
        psi.set(2 * k, 2 * k, frac(3, 5));
        psi.set(2 * k, 2 * k + 1, frac(-4, 5));
        psi.set(2 * k + 1, 2 * k, frac(4, 5));
        psi.set(2 * k + 1, 2 * k + 1, frac(3, 5));
        let m = unitary_to_automorphism(2, &psi).unwrap();
        prop_assert!(m.check());
        let v = m.source();
        for (x, y) in &pairs {
            let left = m.apply(&v.multiply(x, y).unwrap()).unwrap();
            let right = v.multiply(&m.apply(x).unwrap(), &m.apply(y).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn ideal_closure_is_a_fixed_point(a in (2usize..=4).prop_flat_map(table), seed in prop::collection::vec(-2i64..=2, 4)) {
        let d = a.dim();
        let s = Vector::from_ints(&seed[..d]);
        let i = ideal_closure(&a, &[s.clone()]).unwrap();
        prop_assert!(i.contains(&s).unwrap());
        let again = ideal_closure(&a, i.basis()).unwrap();
        prop_assert_eq!(&again, &i);
        for x in i.basis() {
            for k in 0..d {
                prop_assert!(i.contains(&a.multiply(&a.basis(k), x).unwrap()).unwrap());
                prop_assert!(i.contains(&a.multiply(x, &a.basis(k)).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn split_reassembles(a in (1usize..=4).prop_flat_map(table)) {
        let sp = split(&a);
        let b = sp.reassemble(a.label(), a.unit()).unwrap();
        prop_assert!(b.same_table(&a));
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                prop_assert_eq!(sp.s(i, j), sp.s(j, i));
                prop_assert_eq!(sp.k(i, j), -&sp.k(j, i));
            }
        }
    }

    #[test]
    fn random_tables_round_trip_through_json(a in (1usize..=4).prop_flat_map(table)) {
        let s = algebra_to_string(&a);
        let b = algebra_from_str(&s).unwrap();
        prop_assert!(b.same_table(&a));
        prop_assert_eq!(algebra_to_string(&b), s);
    }

    #[test]
    fn gluing_is_associative(picks in prop::collection::vec(0usize..7, 3)) {
        let pool = unital_pool();
        let [a, b, c] = [&pool[picks[0]], &pool[picks[1]], &pool[picks[2]]];
        let glue = |x: &Algebra, y: &Algebra| {
            degenerate_pushout(&PushoutSpec::new(vec![x.clone(), y.clone()], vec![vec![0], vec![0]]).unwrap())
                .unwrap()
                .algebra
        };
        let left = glue(&glue(a, b), c);
        let right = glue(a, &glue(b, c));
        prop_assert!(left.same_table(&right));
        prop_assert_eq!(left.dim(), a.dim() + b.dim() + c.dim() - 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cayley_hamilton(m in square(9)) {
        let p = m.char_poly().unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(m.rows()));
        prop_assert!(p.eval_matrix(&m).unwrap().is_zero());
    }
}

#[test]
fn every_constructor_round_trips_through_json() {
    let mut algs = vec![
        complex_algebra(),
        quaternions(),
        rational_pair(),
        dual_numbers(),
        rationals(),
        twisted_v3(&int(1), &int(1), &int(0)),
        twisted_v3(&frac(-1, 2), &int(3), &frac(2, 7)),
        mixed_pushout_j().unwrap(),
    ];
    for n in 1..=4 {
        algs.push(vidinli(n).unwrap());
        algs.push(heisenberg(n).unwrap());
        algs.push(jspin(n).unwrap());
        algs.push(vidinli_jordan(n).unwrap());
    }
    for i in 0..7 {
        algs.push(vidinli7_directional(i).unwrap());
    }
    for a in &algs {
        let s = algebra_to_string(a);
        let b = algebra_from_str(&s).unwrap();
        assert!(a.same_table(&b), "{}", a.label());
        assert_eq!(a.unit(), b.unit());
        assert_eq!(a.label(), b.label());
        let id = Morphism::identity(a);
        assert!(id.check());
    }
}
