use flagrep_core::feasibility::tables::{self, DEFAULT_Q_GRID};
use flagrep_core::feasibility::{
    derive_params, enumerate_feasible, evaluate_row_default, DesignParams, PrintedComparison, SourceTable, Verdict,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Independent scan over all quintuples with `v <= max_v`.
fn quintuple_scan(max_v: u64, max_lambda: u64) -> Vec<DesignParams> {
    let mut out = Vec::new();
    for v in 4..=max_v {
        for r in 2..v {
            if !is_prime_naive(r) {
                continue;
            }
            for lambda in 1..=max_lambda {
                for k in 3..v - 1 {
                    if r * (k - 1) != lambda * (v - 1) || (v * r) % k != 0 {
                        continue;
                    }
                    let b = v * r / k;
                    if b < v || lambda * v >= r * r {
                        continue;
                    }
                    out.push(DesignParams { v, b, r, k, lambda });
                }
            }
        }
    }
    out.sort_by_key(|p| (p.v, p.r, p.lambda));
    out
}

#[test]
fn enumerate_matches_quintuple_scan() {
    let max_lambda = 50;
    let mut fast = enumerate_feasible(50, max_lambda);
    fast.sort_by_key(|p| (p.v, p.r, p.lambda));
    assert_eq!(fast, quintuple_scan(50, max_lambda));
}

#[test]
fn enumerated_tuples_satisfy_identities() {
    for p in enumerate_feasible(200, 20) {
        assert_eq!(p.r * (p.k - 1), p.lambda * (p.v - 1), "{p}");
        assert_eq!(p.b * p.k, p.v * p.r, "{p}");
        assert!(p.b >= p.v && 2 < p.k && p.k < p.v - 1, "{p}");
        assert_eq!((p.v - 1) % p.r, 0, "{p}");
        assert!(p.lambda * p.v < p.r * p.r, "{p}");
        assert!(DesignParams::new(p.v, p.b, p.r, p.k, p.lambda).is_ok());
    }
}

#[test]
fn derive_params_for_120_17() {
    let got: Vec<(u64, u64, u64)> = derive_params(120, 17).iter().map(|p| (p.k, p.lambda, p.b)).collect();
    assert_eq!(got, vec![(8, 1, 255), (15, 2, 136)]);
}

proptest! {
    #[test]
    fn derive_params_equals_k_scan(v in 4u64..400, r in 2u64..60) {
        let mut brute = Vec::new();
        if is_prime_naive(r) && (v - 1) % r == 0 {
            for k in 3..v - 1 {
                if (r * (k - 1)) % (v - 1) != 0 {
                    continue;
                }
                let lambda = r * (k - 1) / (v - 1);
                if lambda == 0 || (v * r) % k != 0 || lambda * v >= r * r {
                    continue;
                }
                let b = v * r / k;
                if b >= v {
                    brute.push(DesignParams { v, b, r, k, lambda });
                }
            }
        }
        prop_assert_eq!(derive_params(v, r), brute);
    }
}

#[test]
fn table3_has_exactly_three_survivors() {
    let rows = tables::table3(DEFAULT_Q_GRID).unwrap();
    let mut survivors = Vec::new();
    for row in &rows {
        match evaluate_row_default(row).unwrap() {
            Verdict::Eliminated { .. } => {}
            Verdict::AnnotatedClosed { candidates, .. } => {
                let tuples: Vec<(u64, u64, u64, u64, u64)> = candidates
                    .iter()
                    .flat_map(|c| c.params.iter().map(|p| (p.v, p.b, p.r, p.k, p.lambda)))
                    .collect();
                survivors.push((row.group.label(), row.stabilizer_label.clone(), tuples));
            }
            other => panic!("{}: unexpected {other:?}", row.label()),
        }
    }
    assert_eq!(
        survivors,
        vec![
            ("PSL(4,2)".to_string(), "Alt7".to_string(), vec![(8, 14, 7, 4, 3)]),
            ("PSU(3,3)".to_string(), "PSL(2,7)".to_string(), vec![(36, 42, 7, 6, 1)]),
            ("PSp(4,2)".to_string(), "Alt5".to_string(), vec![]),
        ]
    );
}

#[test]
fn table4_indices_match() {
    let rows = tables::table4().unwrap();
    let got: Vec<String> = rows.iter().map(|r| r.v.to_string()).collect();
    assert_eq!(got, ["28", "21", "36", "45", "36", "45", "36", "45", "66", "55"]);
    for r in &rows {
        assert_eq!(r.printed_comparison(), PrintedComparison::Equal, "{}", r.label());
        assert!(evaluate_row_default(r).unwrap().is_eliminated(), "{}", r.label());
    }
}

#[test]
fn tables_six_and_seven_are_eliminated_over_the_grid() {
    let mut grid: Vec<u64> = DEFAULT_Q_GRID.to_vec();
    grid.extend([17, 19, 23, 29, 31]);
    for t in [6u8, 7] {
        for row in tables::table(t, &grid).unwrap() {
            let verdict = evaluate_row_default(&row).unwrap();
            assert!(verdict.is_eliminated(), "{} q={:?}: {verdict:?}", row.label(), row.q);
        }
    }
}

#[test]
fn table5_only_line_one_at_three_survives() {
    for row in tables::table5(DEFAULT_Q_GRID).unwrap() {
        let verdict = evaluate_row_default(&row).unwrap();
        let survivor = row.group.label() == "PSL(3,3)";
        assert_eq!(!verdict.is_eliminated(), survivor, "{}", row.label());
        if survivor {
            assert!(matches!(verdict, Verdict::AnnotatedClosed { .. }));
        }
    }
}

#[test]
fn sz8_row_is_exact() {
    let rows = tables::table7(&[]).unwrap();
    let row = rows.iter().find(|r| r.group.label() == "Sz(8)").unwrap();
    assert_eq!(row.v.bound(), BigUint::from(560u32));
    assert!(row.v.bound() > BigUint::from(169u32));
}

#[test]
fn printed_mismatches_are_all_documented() {
    for t in 3..=7u8 {
        for row in tables::table(t, DEFAULT_Q_GRID).unwrap() {
            if row.printed_comparison() == PrintedComparison::Mismatch {
                assert!(row.erratum.is_some(), "undocumented mismatch {}", row.label());
            }
            if row.erratum.is_some() {
                assert_eq!(row.printed_comparison(), PrintedComparison::Mismatch, "{}", row.label());
            }
        }
    }
}

#[test]
fn every_row_is_well_formed() {
    for t in 3..=7u8 {
        for row in tables::table(t, DEFAULT_Q_GRID).unwrap() {
            row.check_well_formed().unwrap();
            assert_eq!(row.source_table.number(), t);
        }
    }
    assert_eq!(SourceTable::T5.number(), 5);
}
