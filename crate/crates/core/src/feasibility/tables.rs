//! Embedded elimination rows.
//!
//! Concrete rows carry the tabulated `v` (or lower bound `l_v`) and `u_r`; the
//! engine recomputes `v = |X| / |H cap X|` from order formulas and compares.
//! Rows parametrized by `q` (and by the dimension `n` for the orthogonal `C2`/`C5`
//! rows) are instantiated over a sample grid.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::One;

use super::{
    ClassLabel, EliminationRow, FeasibilityError, PoolRule, PrintedKind, RowIndex, SourceTable,
};
use crate::arith::{ceil_root, floor_root, prime_power_decomposition, FactoredInteger};
use crate::groups::{catalog, formulas, Family, GroupError, GroupRef, Sign, SimpleGroupId};

pub const DEFAULT_Q_GRID: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32];

/// Dimensions sampled for the rows parametrized by `n`.
pub const N_GRID: RangeInclusive<u32> = 7..=24;

type Res<T> = Result<T, FeasibilityError>;

struct Stab {
    label: String,
    order: FactoredInteger,
}

fn st(label: impl Into<String>, order: FactoredInteger) -> Stab {
    Stab { label: label.into(), order }
}

fn st_alt(n: u32) -> Stab {
    st(format!("Alt{n}"), formulas::alt_order(n))
}

fn st_sym(n: u32) -> Stab {
    st(format!("S{n}"), formulas::factorial(n))
}

fn st_named(label: &str) -> Res<Stab> {
    let e = catalog::lookup(label)
        .ok_or_else(|| GroupError::Unsupported(format!("catalog label {label}")))?;
    Ok(st(label, catalog::entry_order(e)))
}

fn st_simple(id: Result<SimpleGroupId, GroupError>) -> Res<Stab> {
    let id = id?;
    Ok(st(id.to_string(), id.order()?))
}

fn st_sporadic(name: &str) -> Res<Stab> {
    st_simple(SimpleGroupId::sporadic(name))
}

fn simple(id: Result<SimpleGroupId, GroupError>) -> Res<GroupRef> {
    Ok(GroupRef::Simple(id?))
}

fn psl(n: u32, q: u64) -> Res<GroupRef> {
    simple(SimpleGroupId::psl(n, q))
}
fn psu(n: u32, q: u64) -> Res<GroupRef> {
    simple(SimpleGroupId::psu(n, q))
}
fn psp(n: u32, q: u64) -> Res<GroupRef> {
    simple(SimpleGroupId::psp(n, q))
}
fn pomega(n: u32, q: u64) -> Res<GroupRef> {
    simple(SimpleGroupId::pomega_odd(n, q))
}
fn pomega_plus(n: u32, q: u64) -> Res<GroupRef> {
    simple(SimpleGroupId::pomega_even(n, q, Sign::Plus))
}
fn pomega_minus(n: u32, q: u64) -> Res<GroupRef> {
    simple(SimpleGroupId::pomega_even(n, q, Sign::Minus))
}
fn exc(family: Family, q: u64) -> Res<GroupRef> {
    simple(SimpleGroupId::exceptional(family, q))
}

fn fac(pairs: &[(u64, u32)]) -> BigUint {
    pairs.iter().fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
}

fn b(n: u64) -> BigUint {
    BigUint::from(n)
}

fn pw(q: u64, e: u32) -> BigUint {
    BigUint::from(q).pow(e)
}

fn char_of(q: u64) -> u64 {
    prime_power_decomposition(q).map(|(p, _)| p).unwrap_or(q)
}

fn is_power_of(q: u64, p: u64) -> bool {
    prime_power_decomposition(q).is_some_and(|(base, _)| base == p)
}

fn odd_power_of(q: u64, p: u64) -> bool {
    prime_power_decomposition(q).is_some_and(|(base, a)| base == p && a % 2 == 1)
}

/// `Some(q0)` when `q = q0^k` for a prime power `q0`.
fn root_of(q: u64, k: u32) -> Option<u64> {
    let (p, a) = prime_power_decomposition(q)?;
    (a % k == 0).then(|| p.pow(a / k))
}

#[allow(clippy::too_many_arguments)]
fn exact_row(
    table: SourceTable,
    class: ClassLabel,
    group: GroupRef,
    stab: Stab,
    printed: BigUint,
    kind: PrintedKind,
    u_r: BigUint,
    pool: PoolRule,
    q: Option<u64>,
) -> Res<EliminationRow> {
    let v = group.order()?.divide_exact(&stab.order)?;
    Ok(EliminationRow {
        source_table: table,
        class_label: class,
        group,
        stabilizer_label: stab.label,
        stabilizer_order: Some(stab.order),
        q,
        n: None,
        v: RowIndex::Exact(v),
        printed_v: printed,
        printed_kind: kind,
        u_r,
        pool,
        annotation: None,
        erratum: None,
    })
}

fn bound_row(
    table: SourceTable,
    class: ClassLabel,
    group: GroupRef,
    stab_label: &str,
    lower: BigUint,
    u_r: BigUint,
    q: u64,
    n: Option<u32>,
) -> EliminationRow {
    EliminationRow {
        source_table: table,
        class_label: class,
        group,
        stabilizer_label: stab_label.to_string(),
        stabilizer_order: None,
        q: Some(q),
        n,
        v: RowIndex::LowerBound(lower.clone()),
        printed_v: lower,
        printed_kind: PrintedKind::LowerBound,
        u_r,
        pool: PoolRule::Unrestricted,
        annotation: None,
        erratum: None,
    }
}

fn with_annotation(mut row: EliminationRow, note: &str) -> EliminationRow {
    row.annotation = Some(note.to_string());
    row
}

fn with_erratum(mut row: EliminationRow, note: String) -> EliminationRow {
    row.erratum = Some(note);
    row
}

pub const NOTE_L42_A7: &str =
    "r = 7 forces b = 14, k = 4; neither Alt8 nor S8 has a subgroup of index 14";
pub const NOTE_U33_L27: &str =
    "r = 7 forces b = 42, k = 6, lambda = 1; neither PSU(3,3) nor PSU(3,3):2 has a subgroup of index 42";
pub const NOTE_SP42_A5: &str =
    "no prime divides both v - 1 = 11 and the 2'-part 15 of |H cap X|";
pub const NOTE_L33: &str =
    "r = 13 forces b = 156, k = 12, lambda = 1; neither PSL(3,3) nor PSL(3,3):2 has a subgroup of index 156";

/// Concrete rows of the large almost simple and `C4`/`C6` subgroups of classical groups.
fn table3_concrete() -> Res<Vec<EliminationRow>> {
    use ClassLabel::{C6, S};
    let t = SourceTable::T3;
    let row = |class, group: Res<GroupRef>, stab: Res<Stab>, printed: &[(u64, u32)], u_r: u64| -> Res<EliminationRow> {
        let group = group?;
        let p = match &group {
            GroupRef::Simple(id) => id.characteristic().unwrap_or(2),
            GroupRef::Named(_) => 2,
        };
        exact_row(t, class, group, stab?, fac(printed), PrintedKind::Exact, b(u_r), PoolRule::CoprimePart(p), None)
    };
    let ok = |s: Stab| -> Res<Stab> { Ok(s) };
    let sp42 = || -> Res<GroupRef> { Ok(GroupRef::named("PSp(4,2)")?) };
    let mut rows = vec![
        row(C6, psl(3, 4), st_named("3^2.Q8"), &[(2, 3), (5, 1), (7, 1)], 3)?,
        row(S, psl(3, 4), ok(st_alt(6)), &[(2, 3), (7, 1)], 5)?,
        with_annotation(row(S, psl(4, 2), ok(st_alt(7)), &[(2, 3)], 7)?, NOTE_L42_A7),
        row(C6, psl(4, 5), st_named("2^4.Alt6"), &[(5, 5), (13, 1), (31, 1)], 5)?,
        row(S, psl(4, 7), st_simple(SimpleGroupId::psu(4, 2)), &[(2, 3), (5, 1), (7, 6), (19, 1)], 5)?,
        row(S, psl(5, 3), st_sporadic("M11"), &[(2, 5), (3, 8), (11, 1), (13, 1)], 11)?,
        with_annotation(
            row(S, psu(3, 3), st_simple(SimpleGroupId::psl(2, 7)), &[(2, 2), (3, 2)], 7)?,
            NOTE_U33_L27,
        ),
        row(S, psu(3, 5), st_simple(SimpleGroupId::psl(2, 7)), &[(2, 1), (3, 1), (5, 3)], 7)?,
        row(S, psu(3, 5), ok(st_alt(7)), &[(2, 1), (5, 2)], 7)?,
        row(S, psu(3, 5), st_named("M10"), &[(5, 2), (7, 1)], 5)?,
        row(C6, psu(4, 3), st_named("2^4.Alt6"), &[(3, 4), (7, 1)], 5)?,
        row(S, psu(4, 3), st_simple(SimpleGroupId::psl(3, 4)), &[(2, 1), (3, 4)], 7)?,
        row(S, psu(4, 3), ok(st_alt(7)), &[(2, 4), (3, 4)], 7)?,
        row(S, psu(4, 5), ok(st_alt(7)), &[(2, 4), (3, 2), (5, 5), (13, 1)], 7)?,
        row(S, psu(4, 5), st_simple(SimpleGroupId::psu(4, 2)), &[(2, 1), (5, 5), (7, 1), (13, 1)], 5)?,
        row(C6, psu(4, 7), st_named("2^4.Sp(4,2)"), &[(2, 2), (5, 1), (7, 6), (43, 1)], 5)?,
        row(S, psu(5, 2), st_simple(SimpleGroupId::psl(2, 11)), &[(2, 8), (3, 4)], 11)?,
        row(S, psu(6, 2), st_sporadic("M22"), &[(2, 8), (3, 4)], 11)?,
        with_erratum(
            row(S, psu(6, 2), st_named("PSU(4,3).2"), &[(2, 9), (3, 3), (5, 1), (11, 1)], 7)?,
            "tabulated v = 760320 is the index of PSU(3,3).2; the index of PSU(4,3).2 is 1408 = 2^7*11".into(),
        ),
        row(S, psp(4, 7), ok(st_alt(7)), &[(2, 5), (5, 1), (7, 3)], 7)?,
        row(S, psp(4, 5), ok(st_alt(6)), &[(2, 3), (5, 3), (13, 1)], 5)?,
        with_annotation(row(S, sp42(), ok(st_alt(5)), &[(2, 2), (3, 1)], 5)?, NOTE_SP42_A5),
        row(C6, psp(4, 3), st_named("2^4.Omega4-(2)"), &[(3, 3)], 5)?,
        row(C6, psp(4, 5), st_named("2^4.Omega4-(2)"), &[(3, 1), (5, 3), (13, 1)], 5)?,
        row(C6, psp(4, 7), st_named("2^4.O4-(2)"), &[(2, 1), (3, 1), (5, 1), (7, 4)], 5)?,
        row(S, psp(6, 2), st_named("PSU(3,3).2"), &[(2, 3), (3, 1), (5, 1)], 7)?,
        row(S, psp(6, 5), st_sporadic("J2"), &[(2, 2), (3, 1), (5, 7), (13, 1), (31, 1)], 7)?,
        row(S, psp(8, 2), ok(st_sym(10)), &[(2, 8), (3, 1), (17, 1)], 7)?,
        row(C6, psp(8, 3), st_named("2^6.Omega6-(2)"), &[(2, 2), (3, 12), (5, 1), (7, 1), (13, 1), (41, 1)], 5)?,
        row(S, psp(12, 2), ok(st_sym(14)), &[(2, 25), (3, 3), (5, 1), (17, 1), (31, 1)], 13)?,
        row(
            S,
            psp(16, 2),
            ok(st_sym(18)),
            &[(2, 48), (3, 2), (5, 1), (17, 1), (31, 1), (43, 1), (127, 1), (257, 1)],
            17,
        )?,
        row(
            S,
            psp(20, 2),
            ok(st_sym(22)),
            &[(2, 81), (3, 5), (5, 2), (17, 1), (31, 2), (41, 1), (43, 1), (73, 1), (127, 1), (257, 1)],
            19,
        )?,
        row(S, pomega(7, 3), st_named("Sp(6,2)"), &[(3, 5), (13, 1)], 7)?,
        row(S, pomega(7, 3), ok(st_sym(9)), &[(2, 2), (3, 5), (13, 1)], 7)?,
        row(S, pomega(7, 5), st_named("Sp(6,2)"), &[(5, 8), (13, 1), (31, 1)], 7)?,
        row(S, pomega(7, 7), st_named("Sp(6,2)"), &[(2, 3), (5, 1), (7, 8), (19, 1), (43, 1)], 7)?,
        row(S, pomega(9, 3), ok(st_alt(10)), &[(2, 7), (3, 12), (13, 1), (41, 1)], 7)?,
        row(S, pomega_plus(8, 2), ok(st_alt(9)), &[(2, 6), (3, 1), (5, 1)], 7)?,
        row(S, pomega_plus(8, 3), st_simple(SimpleGroupId::pomega_even(8, 2, Sign::Plus)), &[(3, 7), (13, 1)], 7)?,
        row(
            S,
            pomega_plus(8, 5),
            st_simple(SimpleGroupId::pomega_even(8, 2, Sign::Plus)),
            &[(5, 10), (13, 2), (31, 1)],
            7,
        )?,
        row(
            S,
            pomega_plus(8, 7),
            st_simple(SimpleGroupId::pomega_even(8, 2, Sign::Plus)),
            &[(2, 4), (5, 2), (7, 11), (19, 1), (43, 1)],
            7,
        )?,
        row(S, pomega_minus(10, 2), st_sporadic("M12"), &[(2, 14), (3, 3), (5, 1), (7, 1), (17, 1)], 11)?,
        row(S, pomega_minus(10, 2), ok(st_alt(12)), &[(2, 11), (3, 1), (17, 1)], 11)?,
        row(S, pomega_plus(10, 3), ok(st_alt(12)), &[(2, 6), (3, 15), (11, 1), (13, 1), (41, 1)], 11)?,
        row(S, pomega_minus(12, 2), ok(st_alt(13)), &[(2, 21), (3, 1), (5, 1), (17, 1), (31, 1)], 13)?,
        row(S, pomega_plus(14, 2), ok(st_alt(16)), &[(2, 28), (3, 2), (17, 1), (31, 1), (127, 1)], 13)?,
        row(
            S,
            pomega_plus(16, 2),
            ok(st_alt(17)),
            &[(2, 42), (3, 4), (5, 1), (17, 1), (31, 1), (43, 1), (127, 1)],
            17,
        )?,
        row(
            S,
            pomega_minus(18, 2),
            ok(st_alt(20)),
            &[(2, 55), (3, 5), (17, 1), (31, 1), (43, 1), (127, 1), (257, 1)],
            19,
        )?,
        row(
            S,
            pomega_minus(20, 2),
            ok(st_alt(21)),
            &[(2, 73), (3, 4), (5, 2), (17, 1), (31, 1), (41, 1), (43, 1), (73, 1), (127, 1), (257, 1)],
            19,
        )?,
        row(
            S,
            pomega_plus(22, 2),
            ok(st_alt(24)),
            &[(2, 89), (3, 4), (5, 2), (17, 1), (31, 2), (41, 1), (43, 1), (73, 1), (89, 1), (127, 1), (257, 1)],
            23,
        )?,
    ];
    rows.iter_mut().for_each(|r| r.q = None);
    Ok(rows)
}

/// Rows of the same table with `q` left as a parameter.
fn table3_parametric(grid: &[u64]) -> Res<Vec<EliminationRow>> {
    use ClassLabel::{C4, S};
    let t = SourceTable::T3;
    let mut rows = Vec::new();
    let mk = |class, group: GroupRef, stab: Stab, printed: BigUint, u_r: BigUint, q: u64| -> Res<EliminationRow> {
        exact_row(t, class, group, stab, printed, PrintedKind::Exact, u_r, PoolRule::CoprimePart(char_of(q)), Some(q))
    };
    for &q in grid {
        let qb = b(q);
        let q_even = is_power_of(q, 2);
        // PSp4(q) > Sz(q), q = 2^(2m+1) >= 8
        if odd_power_of(q, 2) && q >= 8 {
            let stab = st(format!("Sz({q})"), formulas::suzuki_order(q)?);
            let printed = pw(q, 2) * (pw(q, 2) - 1u32) * (&qb + 1u32);
            rows.push(mk(S, psp(4, q)?, stab, printed, pw(q, 2) + 1u32, q)?);
        }
        if q_even {
            let stab = st(format!("G2({q})"), formulas::g2_order(q)?);
            let printed = pw(q, 3) * (pw(q, 4) - 1u32);
            rows.push(mk(S, psp(6, q)?, stab, printed, pw(q, 2) + &qb + 1u32, q)?);
        } else {
            let stab = st(format!("G2({q})"), formulas::g2_order(q)?);
            let printed = pw(q, 3) * (pw(q, 4) - 1u32) / 2u32;
            rows.push(mk(S, pomega(7, q)?, stab, printed.clone(), pw(q, 2) + &qb + 1u32, q)?);
            let stab = st(format!("Omega7({q})"), formulas::pomega_odd_order(7, q)?);
            rows.push(mk(S, pomega_plus(8, q)?, stab, printed, pw(q, 2) + &qb + 1u32, q)?);
        }
        let sp4xsp2 = formulas::psp_order(4, q)?.multiply(&formulas::psp_order(2, q)?);
        let printed = pw(q, 7) * (pw(q, 6) - 1u32) * (pw(q, 2) + 1u32);
        rows.push(mk(C4, pomega_plus(8, q)?, st(format!("PSp4({q})xPSp2({q})"), sp4xsp2), printed, pw(q, 2) + 1u32, q)?);
        if q_even {
            let stab = st(format!("PSp6({q})"), formulas::psp_order(6, q)?);
            let printed = pw(q, 3) * (pw(q, 4) - 1u32);
            rows.push(mk(S, pomega_plus(8, q)?, stab, printed, pw(q, 2) + &qb + 1u32, q)?);
        }
        if let Some(q0) = root_of(q, 3).filter(|_| q % 2 == 1) {
            let stab = st(format!("3D4({q0})"), formulas::steinberg_3d4_order(q0)?);
            let printed = pw(q0, 24) * (pw(q0, 18) - 1u32) * (pw(q0, 12) - 1u32) * (pw(q0, 6) - 1u32) * (pw(q0, 2) + 1u32);
            rows.push(mk(S, pomega_plus(8, q)?, stab, printed, pw(q0, 8) + pw(q0, 4) + 1u32, q)?);
            let last = rows.last_mut().expect("row pushed above");
            last.erratum = Some(format!(
                "tabulated v has an extra factor q0^6-1 and lacks the division by 4; exact index is {}",
                last.v
            ));
        }
        if let Some(q0) = root_of(q, 2) {
            let stab = st(format!("POmega8-({q0})"), formulas::pomega_even_order(8, q0, Sign::Minus)?);
            let printed = pw(q, 6) * (pw(q, 6) - 1u32) * (pw(q, 3) + 1u32) * (&qb + 1u32);
            rows.push(mk(S, pomega_plus(8, q)?, stab, printed, pw(q, 2) + 1u32, q)?);
            let last = rows.last_mut().expect("row pushed above");
            last.erratum = Some(format!(
                "tabulated v q^6(q^6-1)(q^3+1)(q+1) does not divide |X|; exact index of POmega8-({q0}) is {}",
                last.v
            ));
        }
        let sp6xsp2 = formulas::psp_order(6, q)?.multiply(&formulas::psp_order(2, q)?);
        let printed = pw(q, 20) * (pw(q, 10) - 1u32) * (pw(q, 8) - 1u32) * (pw(q, 6) - 1u32) / (pw(q, 2) - 1u32);
        rows.push(mk(C4, pomega_plus(12, q)?, st(format!("PSp6({q})xPSp2({q})"), sp6xsp2), printed, pw(q, 3) + 1u32, q)?);
    }
    Ok(rows)
}

pub fn table3(grid: &[u64]) -> Res<Vec<EliminationRow>> {
    let mut rows = table3_concrete()?;
    rows.extend(table3_parametric(grid)?);
    Ok(rows)
}

/// The almost simple groups with socle `PSL(2,q)` and their large subgroups.
pub fn table4() -> Res<Vec<EliminationRow>> {
    let data: &[(&str, &str, u64)] = &[
        ("PGL(2,7)", "D12", 28),
        ("PGL(2,7)", "D16", 21),
        ("PGL(2,9)", "D20", 36),
        ("PGL(2,9)", "D16", 45),
        ("M10", "C5:C4", 36),
        ("M10", "C8:C2", 45),
        ("PGammaL(2,9)", "C10:C4", 36),
        ("PGammaL(2,9)", "C8.Aut(C8)", 45),
        ("PGL(2,11)", "D20", 66),
        ("PGL(2,11)", "S4", 55),
    ];
    data.iter()
        .map(|&(g, h, index)| {
            let stab = st_named(h)?;
            let u_r = stab.order.largest_prime().unwrap_or(1);
            exact_row(
                SourceTable::T4,
                ClassLabel::TableFour,
                GroupRef::named(g)?,
                stab,
                b(index),
                PrintedKind::Exact,
                b(u_r),
                PoolRule::WholeOrder,
                None,
            )
        })
        .collect()
}

/// `C3` subgroups of linear groups.
pub fn table5(grid: &[u64]) -> Res<Vec<EliminationRow>> {
    let t = SourceTable::T5;
    let mut rows = Vec::new();
    for &q in grid {
        let qb = b(q);
        let p = char_of(q);
        let gcd = |n: u64| FactoredInteger::from_u64(crate::arith::gcd_u64(n, q - 1));
        if q != 2 {
            let h = FactoredInteger::from_u64(3)?
                .multiply(&formulas::q_power_sign(q, 3, Sign::Plus)?.divide_exact(&FactoredInteger::from_u64(q - 1)?)?)
                .divide_exact(&gcd(3)?)?;
            let printed = pw(q, 3) * (pw(q, 2) - 1u32) * (&qb - 1u32) / 3u32;
            let mut row = exact_row(
                t,
                ClassLabel::C3,
                psl(3, q)?,
                st("(q^2+q+1):3", h),
                printed,
                PrintedKind::Exact,
                pw(q, 2) + &qb + 1u32,
                PoolRule::CoprimePart(p),
                Some(q),
            )?;
            if q == 3 {
                row.annotation = Some(NOTE_L33.into());
            }
            rows.push(row);

            let h = formulas::sp_order(2, q * q)?
                .multiply(&FactoredInteger::from_u64(2 * (q + 1))?)
                .divide_exact(&gcd(4)?)?;
            let printed = pw(q, 4) * (pw(q, 3) - 1u32) * (&qb - 1u32) / 2u32;
            rows.push(exact_row(
                t,
                ClassLabel::C3,
                psl(4, q)?,
                st("SL2(q^2).(q+1).2", h),
                printed,
                PrintedKind::Exact,
                pw(q, 2) + 1u32,
                PoolRule::CoprimePart(p),
                Some(q),
            )?);
        }
        let h = crate::arith::q_power_minus_one(q * q, 2)?
            .multiply(&crate::arith::q_power_minus_one(q * q, 3)?)
            .multiply(&FactoredInteger::from_u64(q * q)?.pow(3))
            .multiply(&FactoredInteger::from_u64(2 * (q + 1))?)
            .divide_exact(&gcd(6)?)?;
        let printed = pw(q, 6) * (pw(q, 5) - 1u32) * (pw(q, 3) - 1u32) * (&qb - 1u32);
        let row = exact_row(
            t,
            ClassLabel::C3,
            psl(6, q)?,
            st("SL3(q^2).(q+1).2", h),
            printed,
            PrintedKind::Exact,
            pw(q, 5) - 1u32,
            PoolRule::CoprimePart(p),
            Some(q),
        )?;
        let note = format!(
            "tabulated v q^6(q^5-1)(q^3-1)(q-1) understates the index q^9(q-1)(q^3-1)(q^5-1)/2 = {}",
            row.v
        );
        rows.push(with_erratum(row, note));
    }
    Ok(rows)
}

/// `floor(q^(num/den))`.
fn frac_pow_floor(q: u64, num: u32, den: u32) -> BigUint {
    floor_root(&pw(q, num), den)
}

/// `ceil(q^(num/den))`.
fn frac_pow_ceil(q: u64, num: u32, den: u32) -> BigUint {
    ceil_root(&pw(q, num), den)
}

/// `C2` and `C5` subgroups of orthogonal groups: lower bounds for `v`.
pub fn table6(grid: &[u64]) -> Res<Vec<EliminationRow>> {
    use ClassLabel::{C2, C5};
    let t = SourceTable::T6;
    let mut rows = Vec::new();
    for &q in grid {
        let q_odd = q % 2 == 1;
        for n in N_GRID {
            let lb = |group, stab: &str, lower, u_r| bound_row(t, C2, group, stab, lower, u_r, q, Some(n));
            if n % 4 == 0 {
                rows.push(lb(
                    pomega_plus(n, q)?,
                    "Omega_{n/2}^e(q)^2.2^f",
                    frac_pow_floor(q, n * n - 24, 4),
                    frac_pow_ceil(q, n + 4, 4),
                ));
            }
            if n % 2 == 0 && (n / 2) % 2 == 1 && q_odd {
                for group in [pomega_plus(n, q)?, pomega_minus(n, q)?] {
                    rows.push(lb(
                        group,
                        "Omega_{n/2}(q)^2.4",
                        frac_pow_floor(q, n * n - 20, 4),
                        frac_pow_ceil(q, n + 2, 4),
                    ));
                }
            }
            if n % 2 == 0 {
                rows.push(lb(
                    pomega_plus(n, q)?,
                    "GL_{n/2}(q)",
                    frac_pow_floor(q, n * n - 2 * n, 4) / 2u32,
                    frac_pow_ceil(q, n, 2) - 1u32,
                ));
            }
            if let Some(q0) = root_of(q, 2) {
                let lower = pw(q0, n * (n - 1) / 2) / 4u32;
                let u_r = frac_pow_ceil(q0, n, 2) + 1u32;
                if n % 2 == 1 && q_odd {
                    rows.push(bound_row(t, C5, pomega(n, q)?, "Omega_n(q0).2", lower, u_r, q, Some(n)));
                } else if n % 2 == 0 {
                    rows.push(bound_row(
                        t,
                        C5,
                        pomega_plus(n, q)?,
                        "POmega_n^e(q0).2^c",
                        lower,
                        u_r,
                        q,
                        Some(n),
                    ));
                }
            }
        }
    }

    let concrete: Vec<(Res<GroupRef>, Stab, &[(u64, u32)], u64)> = vec![
        (
            pomega_plus(8, 2),
            st("Omega2-(2)^2.2^4", FactoredInteger::from_factors(&[(2, 4), (3, 2)])?),
            &[(2, 8), (3, 3), (5, 2), (7, 1)],
            3,
        ),
        (
            pomega_minus(10, 2),
            st("Omega2-(2)^5.2^5", FactoredInteger::from_factors(&[(2, 5), (3, 5)])?),
            &[(2, 15), (3, 1), (5, 2), (7, 1), (11, 1), (17, 1)],
            3,
        ),
        (
            pomega_minus(12, 2),
            st("Omega4-(2)^2.2^3", FactoredInteger::from_factors(&[(2, 7), (3, 2), (5, 2)])?),
            &[(2, 23), (3, 4), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (31, 1)],
            5,
        ),
        (pomega(7, 3), two_alt(6, 7), &[(3, 7), (13, 1)], 7),
        (pomega(7, 5), two_alt(6, 7), &[(3, 2), (5, 8), (13, 1), (31, 1)], 7),
        (pomega_plus(8, 3), two_alt(6, 8), &[(3, 10), (5, 1), (13, 1)], 7),
        (pomega(9, 3), two_alt(7, 9), &[(2, 1), (3, 12), (5, 1), (13, 1), (41, 1)], 7),
        (pomega_minus(10, 3), two_alt(8, 10), &[(3, 16), (13, 1), (41, 1), (61, 1)], 7),
        (pomega(11, 3), two_alt(9, 11), &[(2, 1), (3, 21), (11, 1), (13, 1), (41, 1), (61, 1)], 11),
        (pomega_plus(12, 3), two_alt(10, 12), &[(2, 25), (7, 1), (11, 1), (13, 2), (41, 1), (61, 1)], 11),
        (
            pomega(13, 3),
            two_alt(11, 13),
            &[(2, 1), (3, 31), (5, 1), (7, 1), (11, 1), (13, 1), (41, 1), (61, 1), (73, 1)],
            13,
        ),
    ];
    for (group, stab, printed, u_r) in concrete {
        rows.push(exact_row(
            t,
            C2,
            group?,
            stab,
            fac(printed),
            PrintedKind::LowerBound,
            b(u_r),
            PoolRule::WholeOrder,
            None,
        )?);
    }
    Ok(rows)
}

fn two_alt(e: u32, n: u32) -> Stab {
    st(format!("2^{e}.Alt{n}"), FactoredInteger::prime_power(2, e).expect("2 is prime").multiply(&formulas::alt_order(n)))
}

/// Non-parabolic large subgroups of exceptional groups.
pub fn table7(grid: &[u64]) -> Res<Vec<EliminationRow>> {
    use Family::*;
    let t = SourceTable::T7;
    let class = ClassLabel::NonParabolic;
    let mut rows = Vec::new();

    let concrete: Vec<(Res<GroupRef>, Vec<Res<Stab>>, &[(u64, u32)], u64)> = vec![
        (exc(Suzuki2B2, 8), vec![st_named("13:4")], &[(2, 4), (5, 1), (7, 1)], 13),
        (exc(Suzuki2B2, 32), vec![st_named("41:4")], &[(2, 8), (5, 2), (31, 1)], 41),
        (exc(Steinberg3D4, 2), vec![st_named("7^2:SL(2,3)")], &[(2, 9), (3, 3), (13, 1)], 7),
        (
            exc(Ree2F4, 8),
            vec![st_named("SU(3,8):2"), st_named("PGU(3,8):2")],
            &[(2, 26), (5, 2), (7, 1), (13, 2), (37, 1), (109, 1)],
            19,
        ),
        (
            exc(Ree2F4, 2),
            vec![
                st_named("A2(3):2"),
                Ok(st("A1(25)", formulas::psl_order(2, 25)?)),
                st_named("Alt6.2^2"),
                st_named("5^2:4.Alt4"),
            ],
            &[(2, 7), (5, 2)],
            13,
        ),
        (exc(G2, 3), vec![st_named("2^3.A2(2)")], &[(2, 3), (3, 2), (7, 2)], 3),
        (
            exc(G2, 4),
            vec![Ok(st("A1(13)", formulas::psl_order(2, 13)?)), st_sporadic("J2")],
            &[(2, 5), (13, 1)],
            13,
        ),
        (exc(G2, 5), vec![st_named("G2(2)"), st_named("2^3.A2(2)")], &[(5, 6), (31, 1)], 7),
        (exc(G2, 7), vec![st_named("G2(2)")], &[(2, 2), (7, 5), (19, 1), (43, 1)], 7),
        (exc(G2, 11), vec![st_sporadic("J1")], &[(2, 3), (3, 2), (5, 1), (11, 5), (37, 1)], 19),
        (
            exc(F4, 2),
            vec![
                Ok(st("A3(3)", formulas::psl_order(4, 3)?)),
                Ok(st("3D4(2)", formulas::steinberg_3d4_order(2)?)),
                Ok(st("D4(2)", formulas::pomega_even_order(8, 2, Sign::Plus)?)),
                Ok(st_alt(9)),
                Ok(st_alt(10)),
                st_sporadic("J2"),
                st_named("S6wrS2"),
            ],
            &[(2, 11), (7, 1), (13, 1), (17, 1)],
            13,
        ),
        (
            exc(TwistedE6, 2),
            vec![
                st_sporadic("Fi22"),
                Ok(st("B3(3)", formulas::pomega_odd_order(7, 3)?)),
                Ok(st_alt(12)),
                st_sporadic("J3"),
            ],
            &[(2, 16), (3, 2), (7, 1), (13, 1), (19, 1)],
            13,
        ),
        (
            exc(E7, 2),
            vec![st_sporadic("Fi22")],
            &[(2, 46), (3, 2), (7, 2), (19, 1), (31, 1), (43, 1), (73, 1), (127, 1)],
            13,
        ),
    ];
    for (group, stabs, printed, u_r) in concrete {
        let group = group?;
        for stab in stabs {
            let row = exact_row(
                t,
                class,
                group.clone(),
                stab?,
                fac(printed),
                PrintedKind::LowerBound,
                b(u_r),
                PoolRule::WholeOrder,
                None,
            )?;
            let row = if group.label() == "G2(3)" {
                let note = format!("tabulated lower bound {} exceeds the exact index {}", row.printed_v, row.v);
                with_erratum(row, note)
            } else {
                row
            };
            rows.push(row);
        }
    }

    for &q in grid {
        let qb = b(q);
        let mut lb = |group: GroupRef, stab: &str, lower: BigUint, u_r: BigUint| {
            rows.push(bound_row(t, class, group, stab, lower, u_r, q, None));
        };
        if odd_power_of(q, 2) && q >= 8 {
            lb(exc(Suzuki2B2, q)?, "2B2(q^(1/3))", &qb * (pw(q, 2) + 1u32), &qb + 1u32);
        }
        if odd_power_of(q, 3) && q >= 27 {
            lb(exc(Ree2G2, q)?, "A1(q), 2G2(q^(1/3))", pw(q, 2) * (pw(q, 2) - &qb + 1u32), &qb + 1u32);
        }
        lb(exc(Steinberg3D4, q)?, "(q^2+eq+1)A2^e(q), A1(q^3)A1(q), G2(q)", pw(q, 9) + 1u32, pw(q, 3) + 1u32);
        if root_of(q, 2).is_some() {
            lb(
                exc(Steinberg3D4, q)?,
                "3D4(q^(1/2))",
                pw(q, 6) * (pw(q, 4) - pw(q, 2) + 1u32) * (pw(q, 3) + 1u32),
                pw(q, 4) + pw(q, 2) + 1u32,
            );
        }
        if odd_power_of(q, 2) {
            lb(exc(Ree2F4, q)?, "2B2(q)wr2, B2(q):2, 2F4(q^(1/3))", pw(q, 8) * (pw(q, 6) + 1u32), pw(q, 2) + 1u32);
        }
        if q >= 3 {
            lb(exc(G2, q)?, "A2^+(q)", pw(q, 3) * (pw(q, 3) + 1u32) / 2u32, pw(q, 2) - &qb + 1u32);
            lb(exc(G2, q)?, "A2^-(q)", pw(q, 3) * (pw(q, 3) - 1u32) / 2u32, pw(q, 2) + &qb + 1u32);
            lb(
                exc(G2, q)?,
                "2G2(q), A1(q)^2, G2(q^(1/b))",
                pw(q, 3) * (pw(q, 3) - 1u32) * (&qb + 1u32),
                pw(q, 3) + 1u32,
            );
        }
        lb(exc(F4, q)?, "B4(q), D4(q), A1(q)C3(q), C4(q), C2(q^2), C2(q)^2, 2F4(q)", pw(q, 8) * (pw(q, 8) + pw(q, 4) + 1u32), pw(q, 6) + 1u32);
        lb(
            exc(F4, q)?,
            "3D4(q), F4(q^(1/b)), A1(q)G2(q)",
            pw(q, 12) * (pw(q, 8) - 1u32) * (pw(q, 4) + 1u32),
            pw(q, 8) + pw(q, 4) + 1u32,
        );
        for (family, eps) in [(E6, Sign::Plus), (TwistedE6, Sign::Minus)] {
            let sub = |x: BigUint| match eps {
                Sign::Plus => x - 1u32,
                Sign::Minus => x + 1u32,
            };
            let g = exc(family, q)?;
            lb(g.clone(), "A1(q)A5^e(q), F4(q), (q-e)D5^e(q), C4(q)", pw(q, 12) * sub(pw(q, 9)), pw(q, 6) + 1u32);
            if !(eps == Sign::Minus && q == 2) {
                lb(g.clone(), "(q^2+eq+1).3D4(q)", pw(q, 24) * sub(pw(q, 5)), pw(q, 8) + pw(q, 4) + 1u32);
            }
            if !(eps == Sign::Plus && q == 2) {
                lb(g.clone(), "(q-e)^2.D4(q)", pw(q, 24) * (pw(q, 12) - 1u32), pw(q, 3) + 1u32);
            }
            if eps == Sign::Plus && root_of(q, 2).is_some() {
                lb(g.clone(), "E6^e'(q^(1/2))", pw(q, 36) * (pw(q, 12) + 1u32), pw(q, 9) + 1u32);
            }
            if root_of(q, 3).is_some() {
                lb(g.clone(), "E6^e(q^(1/3))", pw(q, 36) * sub(pw(q, 18)), pw(q, 9) + 1u32);
            }
        }
        lb(
            exc(E7, q)?,
            "(q-e)E6^e(q), A1(q)D6(q), A7^e(q), A1(q)F4(q), E7(q^(1/b))",
            pw(q, 27) * (pw(q, 14) - 1u32),
            pw(q, 15) + 1u32,
        );
        lb(
            exc(E8, q)?,
            "A1(q)E7(q), D8(q), A2^e(q)E6^e(q), E8(q^(1/b))",
            pw(q, 56) * (pw(q, 30) - 1u32),
            pw(q, 15) + 1u32,
        );
    }
    Ok(rows)
}

pub fn table(number: u8, grid: &[u64]) -> Res<Vec<EliminationRow>> {
    match number {
        3 => table3(grid),
        4 => table4(),
        5 => table5(grid),
        6 => table6(grid),
        7 => table7(grid),
        _ => Err(FeasibilityError::InvalidParams(format!("no elimination table {number}"))),
    }
}

/// Validates a user-supplied grid: every entry must be a prime power.
pub fn validate_grid(grid: &[u64]) -> Res<()> {
    match grid.iter().find(|&&q| prime_power_decomposition(q).is_none()) {
        Some(q) => Err(FeasibilityError::InvalidParams(format!("{q} is not a prime power"))),
        None => Ok(()),
    }
}
