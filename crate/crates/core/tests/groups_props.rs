use flagrep_core::arith::is_prime;
use flagrep_core::groups::{catalog, Family, SimpleGroupId};
use flagrep_core::{GroupRef, Sign};
use num_bigint::BigUint;
use proptest::prelude::*;

fn order(id: Result<SimpleGroupId, flagrep_core::GroupError>) -> u64 {
    id.unwrap().order().unwrap().to_u64().unwrap()
}

#[test]
fn exceptional_isomorphisms_preserve_order() {
    let pairs = [
        (SimpleGroupId::psl(4, 2), SimpleGroupId::alt(8), 20160),
        (SimpleGroupId::psl(2, 4), SimpleGroupId::alt(5), 60),
        (SimpleGroupId::psl(2, 5), SimpleGroupId::alt(5), 60),
        (SimpleGroupId::psl(2, 9), SimpleGroupId::alt(6), 360),
        (SimpleGroupId::psl(2, 7), SimpleGroupId::psl(3, 2), 168),
        (SimpleGroupId::psu(4, 2), SimpleGroupId::psp(4, 3), 25920),
    ];
    for (a, b, n) in pairs {
        let (a, b) = (a.unwrap(), b.unwrap());
        assert_eq!(a.order().unwrap().to_u64(), Some(n), "{a}");
        assert_eq!(b.order().unwrap().to_u64(), Some(n), "{b}");
        let na = a.normalize().unwrap();
        assert_eq!(na, na.normalize().unwrap(), "{a} normalizes idempotently");
        assert_eq!(na.order().unwrap(), a.order().unwrap());
    }
}

#[test]
fn catalog_entries_are_certified() {
    for e in catalog::CATALOG {
        for &(p, _) in e.order {
            assert!(is_prime(p), "{}: {p}", e.name);
        }
    }
    let known: &[(&str, u64)] = &[
        ("M11", 7920),
        ("M12", 95040),
        ("M22", 443520),
        ("J1", 175560),
        ("J2", 604800),
        ("HS", 44352000),
        ("M10", 720),
        ("PSp(4,2)", 720),
        ("PGL(2,7)", 336),
        ("PGammaL(2,9)", 1440),
        ("7:3", 21),
        ("2^4.Alt6", 5760),
        ("Sp(6,2)", 1451520),
        ("G2(2)", 12096),
        ("PSU(3,3).2", 12096),
        ("S6wrS2", 1036800),
    ];
    for &(name, n) in known {
        let e = catalog::lookup(name).unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(catalog::entry_order(e).to_u64(), Some(n), "{name}");
    }
    // orders recomputed from the generic formulas where a formula applies
    let sp62 = SimpleGroupId::psp(6, 2).unwrap().order().unwrap();
    assert_eq!(catalog::entry_order(catalog::lookup("Sp(6,2)").unwrap()), sp62);
    let g22 = flagrep_core::groups::formulas::g2_order(2).unwrap();
    assert_eq!(catalog::entry_order(catalog::lookup("G2(2)").unwrap()), g22);
    let su33 = SimpleGroupId::psu(3, 3).unwrap().order().unwrap();
    assert_eq!(
        catalog::entry_order(catalog::lookup("PSU(3,3).2").unwrap()),
        su33.multiply(&flagrep_core::FactoredInteger::from_u64(2).unwrap())
    );
}

#[test]
fn named_and_sporadic_refs() {
    assert_eq!(GroupRef::named("M10").unwrap().order().unwrap().to_u64(), Some(720));
    assert!(GroupRef::named("NoSuchGroup").is_err());
    assert_eq!(order(SimpleGroupId::sporadic("Fi22")), 64561751654400);
}

#[test]
fn minimal_degree_spot_checks() {
    let cases: &[(Result<SimpleGroupId, _>, u64)] = &[
        (SimpleGroupId::psu(3, 5), 50),
        (SimpleGroupId::psl(2, 9), 6),
        (SimpleGroupId::psp(4, 3), 27),
        (SimpleGroupId::psl(4, 2), 8),
        (SimpleGroupId::psp(6, 2), 28),
    ];
    for (id, want) in cases {
        let id = id.clone().unwrap();
        assert_eq!(id.minimal_degree().unwrap(), BigUint::from(*want), "{id}");
    }
    assert!(SimpleGroupId::exceptional(Family::G2, 3).unwrap().minimal_degree().is_err());
}

fn classical_ids() -> Vec<SimpleGroupId> {
    let qs = [2u64, 3, 4, 5, 7, 8, 9];
    let mut out = Vec::new();
    for &q in &qs {
        for n in 2..=8 {
            out.extend(SimpleGroupId::psl(n, q).ok());
            out.extend(SimpleGroupId::psu(n, q).ok());
        }
        for dim in [4, 6, 8] {
            out.extend(SimpleGroupId::psp(dim, q).ok());
        }
        out.extend(SimpleGroupId::pomega_odd(7, q).ok());
        for eps in [Sign::Plus, Sign::Minus] {
            out.extend(SimpleGroupId::pomega_even(8, q, eps).ok());
        }
    }
    out
}

#[test]
fn minimal_degree_sanity_on_grid() {
    for id in classical_ids() {
        let deg = id.minimal_degree().unwrap();
        let ord = id.order().unwrap().to_biguint();
        assert!(deg > BigUint::from(2u32) && deg <= ord, "{id}: {deg}");
    }
}

#[test]
fn order_splits_into_parts() {
    for id in classical_ids() {
        let ord = id.order().unwrap();
        let p = id.characteristic().unwrap();
        assert_eq!(ord.part(p).multiply(&ord.coprime_part(p)), ord, "{id}");
    }
}

proptest! {
    #[test]
    fn psl2_order_formula(q in prop::sample::select(vec![4u64, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32])) {
        let d = if q % 2 == 0 { 1 } else { 2 };
        let want = q * (q * q - 1) / d;
        prop_assert_eq!(SimpleGroupId::psl(2, q).unwrap().order().unwrap().to_u64(), Some(want));
    }

    #[test]
    fn alt_order_formula(n in 5u32..20) {
        let fact: u64 = (1..=n as u64).product();
        prop_assert_eq!(SimpleGroupId::alt(n).unwrap().order().unwrap().to_u64(), Some(fact / 2));
    }
}
