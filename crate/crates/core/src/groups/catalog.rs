//! Literal orders for sporadic groups and for the named subgroups that appear
//! in the elimination tables.
//!
//! Each entry is `(label, order as (prime, exponent) pairs, |Out| if relevant)`.
//! Labels use ASCII Atlas-style names: `:` split extension, `.` unspecified
//! extension, `^` powers, `x` direct product.

use crate::arith::FactoredInteger;

pub struct CatalogEntry {
    pub name: &'static str,
    pub order: &'static [(u64, u32)],
    pub out_order: Option<&'static [(u64, u32)]>,
    pub sporadic: bool,
}

const fn entry(
    name: &'static str,
    order: &'static [(u64, u32)],
    out_order: Option<&'static [(u64, u32)]>,
    sporadic: bool,
) -> CatalogEntry {
    CatalogEntry { name, order, out_order, sporadic }
}

const ONE: &[(u64, u32)] = &[];
const TWO: &[(u64, u32)] = &[(2, 1)];

pub static CATALOG: &[CatalogEntry] = &[
    // sporadic simple groups
    entry("M11", &[(2, 4), (3, 2), (5, 1), (11, 1)], Some(ONE), true),
    entry("M12", &[(2, 6), (3, 3), (5, 1), (11, 1)], Some(TWO), true),
    entry("M22", &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)], Some(TWO), true),
    entry("M23", &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)], Some(ONE), true),
    entry("M24", &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)], Some(ONE), true),
    entry("J1", &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)], Some(ONE), true),
    entry("J2", &[(2, 7), (3, 3), (5, 2), (7, 1)], Some(TWO), true),
    entry("J3", &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)], Some(TWO), true),
    entry("HS", &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)], Some(TWO), true),
    entry("Fi22", &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)], Some(TWO), true),
    // almost simple and other named groups
    entry("M10", &[(2, 4), (3, 2), (5, 1)], None, false),
    entry("PSp(4,2)", &[(2, 4), (3, 2), (5, 1)], None, false),
    entry("PGL(2,7)", &[(2, 4), (3, 1), (7, 1)], None, false),
    entry("PGL(2,9)", &[(2, 4), (3, 2), (5, 1)], None, false),
    entry("PGammaL(2,9)", &[(2, 5), (3, 2), (5, 1)], None, false),
    entry("PGL(2,11)", &[(2, 3), (3, 1), (5, 1), (11, 1)], None, false),
    entry("S4", &[(2, 3), (3, 1)], None, false),
    entry("D10", &[(2, 1), (5, 1)], None, false),
    entry("D12", &[(2, 2), (3, 1)], None, false),
    entry("D16", &[(2, 4)], None, false),
    entry("D20", &[(2, 2), (5, 1)], None, false),
    entry("C5:C4", &[(2, 2), (5, 1)], None, false),
    entry("C8:C2", &[(2, 4)], None, false),
    entry("C10:C4", &[(2, 3), (5, 1)], None, false),
    entry("C8.Aut(C8)", &[(2, 5)], None, false),
    entry("7:3", &[(3, 1), (7, 1)], None, false),
    entry("13:4", &[(2, 2), (13, 1)], None, false),
    entry("41:4", &[(2, 2), (41, 1)], None, false),
    entry("3^2.Q8", &[(2, 3), (3, 2)], None, false),
    entry("2^4.Alt6", &[(2, 7), (3, 2), (5, 1)], None, false),
    entry("2^4.Sp(4,2)", &[(2, 8), (3, 2), (5, 1)], None, false),
    entry("2^4.Omega4-(2)", &[(2, 6), (3, 1), (5, 1)], None, false),
    entry("2^4.O4-(2)", &[(2, 7), (3, 1), (5, 1)], None, false),
    entry("2^6.Omega6-(2)", &[(2, 12), (3, 4), (5, 1)], None, false),
    entry("2^3:PSL(3,2)", &[(2, 6), (3, 1), (7, 1)], None, false),
    entry("PSU(3,3).2", &[(2, 6), (3, 3), (7, 1)], None, false),
    entry("PSU(4,3).2", &[(2, 8), (3, 6), (5, 1), (7, 1)], None, false),
    entry("Sp(6,2)", &[(2, 9), (3, 4), (5, 1), (7, 1)], None, false),
    entry("G2(2)", &[(2, 6), (3, 3), (7, 1)], None, false),
    entry("7^2:SL(2,3)", &[(2, 3), (3, 1), (7, 2)], None, false),
    entry("2^3.A2(2)", &[(2, 6), (3, 1), (7, 1)], None, false),
    entry("SU(3,8):2", &[(2, 10), (3, 5), (7, 1), (19, 1)], None, false),
    entry("PGU(3,8):2", &[(2, 10), (3, 5), (7, 1), (19, 1)], None, false),
    entry("A2(3):2", &[(2, 5), (3, 3), (13, 1)], None, false),
    entry("Alt6.2^2", &[(2, 5), (3, 2), (5, 1)], None, false),
    entry("5^2:4.Alt4", &[(2, 4), (3, 1), (5, 2)], None, false),
    entry("S6wrS2", &[(2, 9), (3, 4), (5, 2)], None, false),
];

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

pub fn entry_order(e: &CatalogEntry) -> FactoredInteger {
    FactoredInteger::from_factors(e.order).expect("catalog primes are certified in tests")
}
