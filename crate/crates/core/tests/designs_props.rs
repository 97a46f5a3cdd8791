use std::collections::BTreeMap;

use flagrep_core::designs::catalog::{table1_catalog, verify_table1_entry};
use flagrep_core::designs::{
    find_base_block, flag_orbits, is_flag_transitive, orbit_design, verify_2design, DesignError, DesignVerdict,
    IncidenceStructure,
};
use flagrep_core::geometry::{pg_flats, wbs_design};
use flagrep_core::permgroup::PermutationGroup;
use proptest::prelude::*;

fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
    PermutationGroup::from_cycle_strings(degree, gens).unwrap()
}

/// Counts taken straight from the incidences, with no design assumptions.
fn raw_counts(s: &IncidenceStructure) -> (u64, u64, Vec<u64>, Vec<u64>, Vec<u64>) {
    let v = s.num_points();
    let mut rep = vec![0u64; v];
    let mut pair = vec![0u64; v * v];
    for b in s.blocks() {
        for &x in b {
            rep[x] += 1;
            for &y in b {
                if x < y {
                    pair[x * v + y] += 1;
                }
            }
        }
    }
    let sizes = s.blocks().iter().map(|b| b.len() as u64).collect();
    let pairs = (0..v).flat_map(|x| (x + 1..v).map(move |y| (x, y))).map(|(x, y)| pair[x * v + y]).collect();
    (v as u64, s.blocks().len() as u64, rep, sizes, pairs)
}

fn assert_identities(s: &IncidenceStructure) {
    if let Ok(DesignVerdict::Verified(d)) = verify_2design(s) {
        let p = d.params;
        let (v, b, rep, sizes, pairs) = raw_counts(s);
        assert_eq!((p.v, p.b), (v, b));
        assert!(rep.iter().all(|&r| r == p.r));
        assert!(sizes.iter().all(|&k| k == p.k));
        assert!(pairs.iter().all(|&l| l == p.lambda));
        assert_eq!(p.r * (p.k - 1), p.lambda * (p.v - 1));
        assert_eq!(p.b * p.k, p.v * p.r);
        assert!(p.b >= p.v);
        if flagrep_core::arith::is_prime(p.r) {
            assert_eq!((p.v - 1) % p.r, 0);
        }
    }
}

#[test]
fn base_blocks_match_snapshot() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/snapshots/base_blocks.json")).unwrap();
    let frozen: BTreeMap<String, Vec<usize>> = serde_json::from_str(&text).unwrap();
    let mut found = BTreeMap::new();
    for e in table1_catalog().unwrap() {
        if let Some(block) = verify_table1_entry(&e).unwrap().base_block {
            found.insert(e.line.to_string(), block);
        }
    }
    assert_eq!(found, frozen);
}

#[test]
fn catalog_designs_satisfy_identities() {
    for e in table1_catalog().unwrap() {
        let c = verify_table1_entry(&e).unwrap();
        assert_identities(&c.design);
        assert!(c.matches_expected && c.flag_transitive && c.primitive && c.r_divides_subdegrees, "line {}", e.line);
    }
}

#[test]
fn wbs_and_fano_identities() {
    let mut designs = vec![IncidenceStructure::new(7, pg_flats(2, 2, 1).unwrap()).unwrap()];
    designs.extend([8, 16].map(|q| wbs_design(q).unwrap()));
    for d in &designs {
        assert!(verify_2design(d).unwrap().verified().is_some());
        assert_identities(d);
    }
}

#[test]
fn paley_from_quadratic_residues() {
    let z11 = group(11, &["(1 2 3 4 5 6 7 8 9 10 11)"]);
    let d = orbit_design(&z11, &[1, 3, 4, 5, 9]).unwrap();
    let p = verify_2design(&d).unwrap().verified().unwrap().params;
    assert_eq!((p.v, p.b, p.r, p.k, p.lambda), (11, 11, 5, 5, 2));
    // Z11 is block-transitive but has five flag orbits
    assert_eq!(flag_orbits(&z11, &d).unwrap(), 5);
}

#[test]
fn trivial_structures() {
    let pairs: Vec<Vec<usize>> = (0..5).flat_map(|x| (x + 1..5).map(move |y| vec![x, y])).collect();
    let s = IncidenceStructure::new(5, pairs).unwrap();
    match verify_2design(&s).unwrap() {
        DesignVerdict::Trivial(p) => assert_eq!((p.v, p.b, p.r, p.k, p.lambda), (5, 10, 4, 2, 1)),
        other => panic!("{other:?}"),
    }
    let c6 = group(6, &["(1 2 3 4 5 6)"]);
    let d = orbit_design(&c6, &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(d.blocks().len(), 6);
    assert!(matches!(verify_2design(&d).unwrap(), DesignVerdict::Trivial(_)));
    let tiny = IncidenceStructure::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    assert!(matches!(verify_2design(&tiny).unwrap(), DesignVerdict::Trivial(_)));
}

#[test]
fn search_examples() {
    let c5 = group(5, &["(1 2 3 4 5)"]);
    assert_eq!(find_base_block(&c5, 3, 1).unwrap(), None);
    let fano_lines = pg_flats(2, 2, 1).unwrap();
    let gl32 = {
        let s = flagrep_core::geometry::ProjectiveSpace::new(2, 2).unwrap();
        s.induced_action(&s.gl_generators(), s.points()).unwrap()
    };
    let block = find_base_block(&gl32, 3, 1).unwrap().unwrap();
    assert!(fano_lines.contains(&block));
}

#[test]
fn orbit_design_needs_transitivity() {
    let g = group(6, &["(1 2 3)"]);
    assert!(matches!(orbit_design(&g, &[0, 3]), Err(DesignError::NotTransitive)));
}

#[test]
fn flag_transitivity_examples() {
    let s = flagrep_core::geometry::ProjectiveSpace::new(2, 2).unwrap();
    let gl32 = s.induced_action(&s.gl_generators(), s.points()).unwrap();
    let fano = IncidenceStructure::new(7, s.flats(1).unwrap()).unwrap();
    assert!(is_flag_transitive(&gl32, &fano).unwrap());
    assert!(!is_flag_transitive(&PermutationGroup::trivial(7), &fano).unwrap());
    // a 7-cycle that does not preserve this labelling of the Fano plane
    let shift = group(7, &["(1 2 3 4 5 6 7)"]);
    if !flagrep_core::designs::is_automorphism_group(&shift, &fano) {
        assert!(matches!(is_flag_transitive(&shift, &fano), Err(DesignError::NotAnAutomorphismGroup(_))));
    }
}

fn transitive_corpus() -> Vec<PermutationGroup> {
    vec![
        group(7, &["(1 2 3 4 5 6 7)"]),
        group(8, &["(1 2 3 4 5 6 7 8)", "(2 4)(6 8)"]),
        group(9, &["(1 2 3 4 5 6 7 8 9)"]),
        group(11, &["(3 6)(5 8)(7 9)(10 11)", "(1 2 3 4 5 6 7 8 9 10 11)"]),
        group(13, &["(1 2 3 4 5 6 7 8 9 10 11 12 13)", "(2 4 10)(3 7 6)(5 13 11)(8 9 12)"]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_design_is_base_block_invariant(which in 0usize..5, picks in prop::collection::btree_set(0usize..13, 2..6), shift in 0usize..100) {
        let g = &transitive_corpus()[which];
        let n = g.degree();
        let base: Vec<usize> = picks.into_iter().filter(|&x| x < n).collect();
        prop_assume!(!base.is_empty() && base.len() < n);
        let d = orbit_design(g, &base).unwrap();
        let other = &d.blocks()[shift % d.blocks().len()];
        prop_assert_eq!(orbit_design(g, other).unwrap(), d.clone());
        assert_identities(&d);
    }
}
