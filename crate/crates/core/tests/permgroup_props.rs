use std::collections::HashSet;

use flagrep_core::geometry::ProjectiveSpace;
use flagrep_core::permgroup::{PermError, Permutation, PermutationGroup};
use proptest::prelude::*;

/// Closure of the generators by breadth-first multiplication.
fn naive_elements(degree: usize, gens: &[Permutation]) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h: Vec<usize> = g.iter().map(|&x| s.image(x)).collect();
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen
}

fn g(degree: usize, gens: &[&str]) -> PermutationGroup {
    PermutationGroup::from_cycle_strings(degree, gens).unwrap()
}

fn corpus() -> Vec<(&'static str, PermutationGroup)> {
    let pg22 = ProjectiveSpace::new(2, 2).unwrap();
    let pg15 = ProjectiveSpace::new(1, 5).unwrap();
    let sl25 = vec![vec![vec![1, 1], vec![0, 1]], vec![vec![0, 1], vec![4, 0]]];
    vec![
        ("C5", g(5, &["(1 2 3 4 5)"])),
        ("C4", g(4, &["(1 2 3 4)"])),
        ("V4", g(4, &["(1 2)(3 4)", "(1 3)(2 4)"])),
        ("S3", g(3, &["(1 2 3)", "(1 2)"])),
        ("S4", g(4, &["(1 2 3 4)", "(1 2)"])),
        ("S4 on pairs", g(6, &["(1 4 6 3)(2 5)", "(2 4)(3 5)"])),
        ("D10", g(5, &["(1 2 3 4 5)", "(2 5)(3 4)"])),
        ("Alt5", g(5, &["(1 2 3 4 5)", "(1 2 3)"])),
        ("S5", g(5, &["(1 2 3 4 5)", "(1 2)"])),
        ("Alt6", g(6, &["(1 2 3 4 5)", "(4 5 6)"])),
        ("S6", g(6, &["(1 2 3 4 5 6)", "(1 2)"])),
        ("Alt7", g(7, &["(1 2 3 4 5 6 7)", "(1 2 3)"])),
        ("PSL(2,11) on 11", g(11, &["(3 6)(5 8)(7 9)(10 11)", "(1 2 3 4 5 6 7 8 9 10 11)"])),
        ("GL(3,2) on PG(2,2)", pg22.induced_action(&pg22.gl_generators(), pg22.points()).unwrap()),
        ("PSL(2,5) on PG(1,5)", pg15.induced_action(&sl25, pg15.points()).unwrap()),
        ("C2 x C2 x C2 intransitive", g(6, &["(1 2)", "(3 4)", "(5 6)"])),
        ("trivial", PermutationGroup::trivial(4)),
    ]
}

#[test]
fn schreier_sims_matches_naive_enumeration() {
    for (name, grp) in corpus() {
        let naive = naive_elements(grp.degree(), grp.generators()).len() as u64;
        if naive <= 5000 {
            assert_eq!(grp.order().unwrap().to_u64(), Some(naive), "{name}");
        }
    }
}

#[test]
fn orbit_stabilizer_on_corpus() {
    for (name, grp) in corpus() {
        let order = grp.order().unwrap();
        for x in 0..grp.degree() {
            let orbit = grp.orbit(x).unwrap().len() as u64;
            let stab = grp.point_stabilizer(x).unwrap().order().unwrap();
            assert_eq!(stab.to_u64().unwrap() * orbit, order.to_u64().unwrap(), "{name} at {x}");
        }
    }
}

#[test]
fn subdegrees_sum_to_degree() {
    for (name, grp) in corpus() {
        match grp.subdegrees(0) {
            Ok(sub) => assert_eq!(sub.iter().sum::<usize>(), grp.degree(), "{name}"),
            Err(PermError::NotTransitive) => assert!(!grp.is_transitive(), "{name}"),
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

#[test]
fn documented_subdegrees() {
    let pg22 = ProjectiveSpace::new(2, 2).unwrap();
    let gl32 = pg22.induced_action(&pg22.gl_generators(), pg22.points()).unwrap();
    assert_eq!(gl32.subdegrees(0).unwrap(), vec![1, 6]);
    // S4 on the six 2-subsets of {1,2,3,4}: {12,13,14,23,24,34}
    let pairs = g(6, &["(1 4 6 3)(2 5)", "(2 4)(3 5)"]);
    assert_eq!(pairs.order().unwrap().to_u64(), Some(24));
    assert_eq!(pairs.subdegrees(0).unwrap(), vec![1, 1, 4]);
}

#[test]
fn primitivity_examples() {
    let pg22 = ProjectiveSpace::new(2, 2).unwrap();
    let gl32 = pg22.induced_action(&pg22.gl_generators(), pg22.points()).unwrap();
    assert!(gl32.is_primitive().unwrap());
    assert!(!g(4, &["(1 2 3 4)"]).is_primitive().unwrap());
    assert!(g(3, &["(1 2 3)", "(1 2)"]).is_primitive().unwrap());
    assert!(!g(6, &["(1 2 3 4 5 6)"]).is_primitive().unwrap());
    assert_eq!(g(4, &["(1 2)"]).is_primitive(), Err(PermError::NotTransitive));
}

#[test]
fn m11_on_twelve_points() {
    let m11 = g(12, &["(5 10)(6 12)(7 8)(9 11)", "(1 2 3 4 5 6 7 8 9 10 11)"]);
    assert_eq!(m11.order().unwrap().to_u64(), Some(7920));
    for x in [0, 5, 11] {
        assert_eq!(m11.point_stabilizer(x).unwrap().order().unwrap().to_u64(), Some(660));
    }
}

#[test]
fn degree_cap() {
    let big = PermutationGroup::new(10_001, vec![Permutation::identity(10_001)]).unwrap();
    assert_eq!(big.order().unwrap_err(), PermError::DegreeTooLarge(10_001));
}

fn random_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_groups_match_naive(gens in prop::collection::vec(random_perm(6), 1..3)) {
        let grp = PermutationGroup::new(6, gens.clone()).unwrap();
        let naive = naive_elements(6, &gens);
        prop_assert_eq!(grp.order().unwrap().to_u64(), Some(naive.len() as u64));
        for e in naive.iter().take(50) {
            prop_assert!(grp.contains(&Permutation::from_images(e.clone()).unwrap()).unwrap());
        }
    }

    #[test]
    fn random_orbit_stabilizer(gens in prop::collection::vec(random_perm(7), 1..3), x in 0usize..7) {
        let grp = PermutationGroup::new(7, gens).unwrap();
        let orbit = grp.orbit(x).unwrap().len() as u64;
        let stab = grp.point_stabilizer(x).unwrap().order().unwrap().to_u64().unwrap();
        prop_assert_eq!(orbit * stab, grp.order().unwrap().to_u64().unwrap());
    }

    #[test]
    fn inverse_and_composition(a in random_perm(9), b in random_perm(9)) {
        prop_assert!(a.then(&a.inverse()).is_identity());
        let ab = a.then(&b);
        for x in 0..9 {
            prop_assert_eq!(ab.image(x), b.image(a.image(x)));
        }
        let s = a.to_string();
        prop_assert_eq!(Permutation::from_cycles(&s, 9).unwrap(), a);
    }
}
