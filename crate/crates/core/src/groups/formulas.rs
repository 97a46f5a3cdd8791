//! Closed-form orders of the classical, alternating and exceptional families.
//!
//! These evaluate the formula for any parameters and do not check that the
//! result is the order of a simple group; [`super::SimpleGroupId`] does that.

use crate::arith::{gcd_u64, q_power_minus_one, q_power_plus_one, ArithError, FactoredInteger};

use super::Sign;

fn q_pow(q: u64, e: u32) -> Result<FactoredInteger, ArithError> {
    Ok(FactoredInteger::from_u64(q)?.pow(e))
}

fn minus(q: u64, n: u32) -> Result<FactoredInteger, ArithError> {
    q_power_minus_one(q, n)
}

fn plus(q: u64, n: u32) -> Result<FactoredInteger, ArithError> {
    q_power_plus_one(q, n)
}

fn small(n: u64) -> FactoredInteger {
    FactoredInteger::from_u64(n).expect("positive")
}

/// `q^n - eps` for a sign.
pub fn q_power_sign(q: u64, n: u32, eps: Sign) -> Result<FactoredInteger, ArithError> {
    match eps {
        Sign::Plus => minus(q, n),
        Sign::Minus => plus(q, n),
    }
}

/// `gcd(k, q^n - eps)` computed from the residue of `q` mod `k`.
fn gcd_with_power(k: u64, q: u64, n: u32, eps: Sign) -> u64 {
    let mut r = 1u64;
    for _ in 0..n {
        r = r * (q % k) % k;
    }
    let val = match eps {
        Sign::Plus => (r + k - 1) % k,
        Sign::Minus => (r + 1) % k,
    };
    gcd_u64(k, val)
}

pub fn factorial(n: u32) -> FactoredInteger {
    let mut acc = FactoredInteger::one();
    for i in 2..=n as u64 {
        acc = acc.multiply(&small(i));
    }
    acc
}

pub fn alt_order(n: u32) -> FactoredInteger {
    factorial(n)
        .divide_exact(&small(2))
        .expect("n >= 2 so 2 divides n!")
}

pub fn psl_order(n: u32, q: u64) -> Result<FactoredInteger, ArithError> {
    let mut acc = q_pow(q, n * (n - 1) / 2)?;
    for i in 2..=n {
        acc = acc.multiply(&minus(q, i)?);
    }
    acc.divide_exact(&small(gcd_u64(n as u64, q - 1)))
}

pub fn psu_order(n: u32, q: u64) -> Result<FactoredInteger, ArithError> {
    let mut acc = q_pow(q, n * (n - 1) / 2)?;
    for i in 2..=n {
        acc = acc.multiply(&if i % 2 == 0 { minus(q, i)? } else { plus(q, i)? });
    }
    acc.divide_exact(&small(gcd_u64(n as u64, q + 1)))
}

/// `|PSp_dim(q)|` with `dim = 2m`; also `|PSp_2(q)| = |PSL_2(q)|`.
pub fn psp_order(dim: u32, q: u64) -> Result<FactoredInteger, ArithError> {
    let m = dim / 2;
    let mut acc = q_pow(q, m * m)?;
    for i in 1..=m {
        acc = acc.multiply(&minus(q, 2 * i)?);
    }
    acc.divide_exact(&small(gcd_u64(2, q - 1)))
}

/// `|Sp_dim(q)|`, the full symplectic group.
pub fn sp_order(dim: u32, q: u64) -> Result<FactoredInteger, ArithError> {
    let m = dim / 2;
    let mut acc = q_pow(q, m * m)?;
    for i in 1..=m {
        acc = acc.multiply(&minus(q, 2 * i)?);
    }
    Ok(acc)
}

/// `|P Omega_{2m+1}(q)|`; for odd `q` this equals `|PSp_2m(q)|`.
pub fn pomega_odd_order(dim: u32, q: u64) -> Result<FactoredInteger, ArithError> {
    psp_order(dim - 1, q)
}

/// `|P Omega^eps_{2m}(q)|`.
pub fn pomega_even_order(dim: u32, q: u64, eps: Sign) -> Result<FactoredInteger, ArithError> {
    let m = dim / 2;
    let mut acc = q_pow(q, m * (m - 1))?.multiply(&q_power_sign(q, m, eps)?);
    for i in 1..m {
        acc = acc.multiply(&minus(q, 2 * i)?);
    }
    acc.divide_exact(&small(gcd_with_power(4, q, m, eps)))
}

/// `|Omega^eps_{2m}(q)|`, used for the orthogonal subgroups in the product stabilizers.
pub fn omega_even_order(dim: u32, q: u64, eps: Sign) -> Result<FactoredInteger, ArithError> {
    let m = dim / 2;
    let mut acc = q_pow(q, m * (m - 1))?.multiply(&q_power_sign(q, m, eps)?);
    for i in 1..m {
        acc = acc.multiply(&minus(q, 2 * i)?);
    }
    acc.divide_exact(&small(gcd_u64(2, q - 1)))
}

pub fn suzuki_order(q: u64) -> Result<FactoredInteger, ArithError> {
    Ok(q_pow(q, 2)?.multiply(&plus(q, 2)?).multiply(&minus(q, 1)?))
}

pub fn ree_2g2_order(q: u64) -> Result<FactoredInteger, ArithError> {
    Ok(q_pow(q, 3)?.multiply(&plus(q, 3)?).multiply(&minus(q, 1)?))
}

pub fn steinberg_3d4_order(q: u64) -> Result<FactoredInteger, ArithError> {
    // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
    let middle = minus(q, 12)?.divide_exact(&minus(q, 4)?)?;
    Ok(q_pow(q, 12)?
        .multiply(&middle)
        .multiply(&minus(q, 6)?)
        .multiply(&minus(q, 2)?))
}

pub fn ree_2f4_order(q: u64) -> Result<FactoredInteger, ArithError> {
    Ok(q_pow(q, 12)?
        .multiply(&plus(q, 6)?)
        .multiply(&minus(q, 4)?)
        .multiply(&plus(q, 3)?)
        .multiply(&minus(q, 1)?))
}

pub fn g2_order(q: u64) -> Result<FactoredInteger, ArithError> {
    Ok(q_pow(q, 6)?.multiply(&minus(q, 6)?).multiply(&minus(q, 2)?))
}

pub fn f4_order(q: u64) -> Result<FactoredInteger, ArithError> {
    let mut acc = q_pow(q, 24)?;
    for i in [12, 8, 6, 2] {
        acc = acc.multiply(&minus(q, i)?);
    }
    Ok(acc)
}

pub fn e6_order(q: u64, eps: Sign) -> Result<FactoredInteger, ArithError> {
    let mut acc = q_pow(q, 36)?;
    for i in [12, 8, 6, 2] {
        acc = acc.multiply(&minus(q, i)?);
    }
    for i in [9, 5] {
        acc = acc.multiply(&q_power_sign(q, i, eps)?);
    }
    let d = match eps {
        Sign::Plus => gcd_u64(3, q - 1),
        Sign::Minus => gcd_u64(3, q + 1),
    };
    acc.divide_exact(&small(d))
}

pub fn e7_order(q: u64) -> Result<FactoredInteger, ArithError> {
    let mut acc = q_pow(q, 63)?;
    for i in [2, 6, 8, 10, 12, 14, 18] {
        acc = acc.multiply(&minus(q, i)?);
    }
    acc.divide_exact(&small(gcd_u64(2, q - 1)))
}

pub fn e8_order(q: u64) -> Result<FactoredInteger, ArithError> {
    let mut acc = q_pow(q, 120)?;
    for i in [2, 8, 12, 14, 18, 20, 24, 30] {
        acc = acc.multiply(&minus(q, i)?);
    }
    Ok(acc)
}
