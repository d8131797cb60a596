use proptest::prelude::*;
use proptest::sample::select;

use tamerep::char_orbits::{enumerate_character_orbits, enumerate_lambda, enumerate_pairs, lambda_bound, phi_orbits};
use tamerep::cli::sweep_groups;
use tamerep::ffield::tilde_degree;
use tamerep::linalg::Subspace;
use tamerep::modcheck::{
    are_isomorphic, berman_irreducible_count, constituents, endomorphism_field, spin, submodule_census,
    submodule_census_full,
};
use tamerep::rep_builder::{build_pi, build_rho, recover_pair};
use tamerep::twisted_group::{GroupElem, TwistedGroup};
use tamerep::{Field, Matrix, PrimeField};

fn groups(bound: u64) -> impl Strategy<Value = TwistedGroup> {
    select(sweep_groups(bound, &[2, 3], &[1, 2]))
        .prop_map(|(p, a, e, f)| TwistedGroup::new(p, a, e, f).unwrap())
}

fn elem(g: &TwistedGroup, x: u64) -> GroupElem {
    let n = x % g.order();
    GroupElem::new(n / g.f(), n % g.f())
}

fn random_invertible(field: &PrimeField, n: usize, seed: &[u32]) -> Matrix<PrimeField> {
    // unit upper times unit lower triangular, entries taken from the seed
    let mut it = seed.iter().cycle().map(|&x| field.element(x as u64 % field.size()));
    let mut upper = Matrix::identity(field, n);
    let mut lower = Matrix::identity(field, n);
    for i in 0..n {
        for j in i + 1..n {
            upper.set(i, j, it.next().unwrap());
            lower.set(j, i, it.next().unwrap());
        }
    }
    upper.mul(&lower)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_law(g in groups(100), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let (a, b, c) = (elem(&g, x), elem(&g, y), elem(&g, z));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.mul(g.inv(a), a), g.identity());
        prop_assert_eq!(g.mul(a, g.identity()), a);
    }

    #[test]
    fn frobenius_conjugation(g in groups(64), t in any::<u64>()) {
        prop_assume!(g.e() <= 64);
        let t = t % g.e();
        let conj = g.conjugate(GroupElem::new(t, 0), g.gen_s());
        prop_assert_eq!(conj, GroupElem::new(t * g.q_mod_e() % g.e(), 0));
    }

    #[test]
    fn berman_count_is_a_group_invariant(
        (g, perm) in groups(40)
            .prop_filter("small", |g| g.order() <= 120)
            .prop_flat_map(|g| {
                let n = g.order() as usize;
                (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            })
    ) {
        let table = g.to_table().unwrap();
        let relabelled = table.permuted(&perm).unwrap();
        let want = berman_irreducible_count(&g).unwrap();
        prop_assert_eq!(table.p_regular_class_orbits(g.p()), want);
        prop_assert_eq!(relabelled.p_regular_class_orbits(g.p()), want);
    }

    #[test]
    fn lambda_count_matches_bound(g in groups(100)) {
        for orbit in enumerate_character_orbits(&g).unwrap() {
            prop_assert_eq!(enumerate_lambda(&g, &orbit).len() as u64, lambda_bound(&g, &orbit));
        }
    }

    #[test]
    fn degree_factorisation(g in groups(100)) {
        for o in phi_orbits(&g).unwrap() {
            prop_assert_eq!(o.degree, o.s() * o.defdeg);
            prop_assert_eq!(o.size, o.defdeg);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spin_is_closed_and_idempotent(g in groups(60), pick in any::<usize>(), coeffs in prop::collection::vec(any::<u32>(), 16)) {
        let orbits = phi_orbits(&g).unwrap();
        let o = &orbits[pick % orbits.len()];
        prop_assume!(o.degree <= 8);
        let pi = build_pi(&g, o).unwrap();
        let f = *pi.field();
        let v: Vec<u32> = (0..pi.degree()).map(|i| coeffs[i % 16] % f.p() as u32).collect();
        let w = spin(&v, &pi);
        for b in w.basis() {
            for m in pi.generators() {
                prop_assert!(w.contains(&m.mul_vec(b)));
            }
            let again = spin(b, &pi);
            prop_assert!(again.basis().iter().all(|x| w.contains(x)));
        }
        let resp = Subspace::spanned_by(&f, pi.degree(), w.basis());
        prop_assert_eq!(resp.key(), w.key());
    }

    #[test]
    fn constituents_survive_basis_change(g in groups(30), pick in any::<(usize, usize)>(), seed in prop::collection::vec(0u32..9, 40)) {
        let orbits = phi_orbits(&g).unwrap();
        let o1 = &orbits[pick.0 % orbits.len()];
        let o2 = &orbits[pick.1 % orbits.len()];
        prop_assume!(o1.degree + o2.degree <= 8);
        let a = build_pi(&g, o1).unwrap();
        let b = build_pi(&g, o2).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        let p = random_invertible(sum.field(), sum.degree(), &seed);
        let moved = sum.conjugate_by(&p).unwrap();
        let c1 = constituents(&sum).unwrap();
        let c2 = constituents(&moved).unwrap();
        prop_assert_eq!(c1.len(), c2.len());
        for (x, m) in &c1 {
            let matches: Vec<usize> = c2
                .iter()
                .filter(|(y, _)| y.degree() == x.degree() && are_isomorphic(x, y).unwrap())
                .map(|(_, k)| *k)
                .collect();
            prop_assert_eq!(matches, vec![*m]);
        }
        let expected = if o1.canonical == o2.canonical { vec![2] } else { vec![1, 1] };
        prop_assert_eq!(c1.iter().map(|(_, m)| *m).collect::<Vec<_>>(), expected);
    }

    #[test]
    fn recover_pair_round_trip(g in groups(100), pick in any::<usize>()) {
        prop_assume!(tilde_degree(g.p(), g.a(), g.f()) <= 12);
        let pairs = enumerate_pairs(&g).unwrap();
        let pair = &pairs[pick % pairs.len()];
        prop_assume!(pair.orbit.s <= 8);
        let rho = build_rho(&g, pair).unwrap();
        prop_assert_eq!(&recover_pair(&rho).unwrap(), pair);
    }

    #[test]
    fn endomorphism_field_is_field_of_definition(g in groups(100), pick in any::<usize>()) {
        let orbits = phi_orbits(&g).unwrap();
        let o = &orbits[pick % orbits.len()];
        prop_assume!(o.degree <= 12);
        let pi = build_pi(&g, o).unwrap();
        prop_assert_eq!(endomorphism_field(&pi).unwrap() as u64, o.defdeg);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn census_matches_full_enumeration(g in groups(30), pick in any::<usize>(), m in 1usize..=3) {
        let orbits = phi_orbits(&g).unwrap();
        let o = &orbits[pick % orbits.len()];
        prop_assume!(g.p().checked_pow((o.degree as usize * m) as u32).is_some_and(|x| x <= 1 << 10));
        let pi = build_pi(&g, o).unwrap();
        let fast = submodule_census(&pi, m).unwrap();
        prop_assert_eq!(fast, submodule_census_full(&pi, m).unwrap());
        let qe = g.p().pow(endomorphism_field(&pi).unwrap());
        prop_assert_eq!(fast, (qe.pow(m as u32) - 1) / (qe - 1));
    }
}
