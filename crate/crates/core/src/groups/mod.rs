//! Finite simple group identifiers with orders, outer automorphism orders and
//! minimal permutation degrees.

pub mod catalog;
pub mod formulas;

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd_u64, prime_power_decomposition, ArithError, FactoredInteger};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("illegal group parameters: {0}")]
    IllegalId(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Alt,
    Sporadic,
    PSL,
    PSU,
    PSp,
    POmegaOdd,
    POmegaEven,
    Suzuki2B2,
    Ree2G2,
    Steinberg3D4,
    Ree2F4,
    G2,
    F4,
    E6,
    TwistedE6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Family::PSL | Family::PSU | Family::PSp | Family::POmegaOdd | Family::POmegaEven
        )
    }

    pub fn is_exceptional(self) -> bool {
        !self.is_classical() && !matches!(self, Family::Alt | Family::Sporadic)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Identifies a finite simple group.
///
/// `n` is the degree for `Alt` and the dimension of the natural module for the
/// classical families (so `PSp(4,q)` has `n = 4` and `POmega+(8,q)` has `n = 8`).
/// Exceptional families carry only `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleGroupId {
    pub family: Family,
    pub n: u32,
    pub q: Option<u64>,
    pub epsilon: Option<Sign>,
    pub sporadic_name: Option<String>,
}

fn prime_power(q: u64) -> Result<(u64, u32), GroupError> {
    prime_power_decomposition(q).ok_or_else(|| GroupError::IllegalId(format!("{q} is not a prime power")))
}

impl SimpleGroupId {
    fn build(family: Family, n: u32, q: Option<u64>, epsilon: Option<Sign>) -> Result<Self, GroupError> {
        let id = Self { family, n, q, epsilon, sporadic_name: None };
        id.check_legal()?;
        Ok(id)
    }

    pub fn alt(n: u32) -> Result<Self, GroupError> {
        Self::build(Family::Alt, n, None, None)
    }

    pub fn psl(n: u32, q: u64) -> Result<Self, GroupError> {
        Self::build(Family::PSL, n, Some(q), None)
    }

    pub fn psu(n: u32, q: u64) -> Result<Self, GroupError> {
        Self::build(Family::PSU, n, Some(q), None)
    }

    pub fn psp(dim: u32, q: u64) -> Result<Self, GroupError> {
        Self::build(Family::PSp, dim, Some(q), None)
    }

    pub fn pomega_odd(dim: u32, q: u64) -> Result<Self, GroupError> {
        Self::build(Family::POmegaOdd, dim, Some(q), None)
    }

    pub fn pomega_even(dim: u32, q: u64, eps: Sign) -> Result<Self, GroupError> {
        Self::build(Family::POmegaEven, dim, Some(q), Some(eps))
    }

    /// An exceptional family. `TwistedE6` is `E6` with sign minus; pass `E6` here
    /// with `eps = Some(Minus)` or use `TwistedE6` directly.
    pub fn exceptional(family: Family, q: u64) -> Result<Self, GroupError> {
        if !family.is_exceptional() {
            return Err(GroupError::IllegalId(format!("{family:?} is not exceptional")));
        }
        Self::build(family, 0, Some(q), None)
    }

    pub fn sporadic(name: &str) -> Result<Self, GroupError> {
        match catalog::lookup(name) {
            Some(e) if e.sporadic => Ok(Self {
                family: Family::Sporadic,
                n: 0,
                q: None,
                epsilon: None,
                sporadic_name: Some(name.to_string()),
            }),
            _ => Err(GroupError::Unsupported(format!("sporadic group {name}"))),
        }
    }

    pub fn characteristic(&self) -> Option<u64> {
        self.q.and_then(prime_power_decomposition).map(|(p, _)| p)
    }

    /// `(p, a)` with `q = p^a`.
    pub fn field(&self) -> Option<(u64, u32)> {
        self.q.and_then(prime_power_decomposition)
    }

    fn check_legal(&self) -> Result<(), GroupError> {
        let illegal = |why: &str| Err(GroupError::IllegalId(format!("{self}: {why}")));
        if self.family == Family::Alt {
            return if self.n >= 5 { Ok(()) } else { illegal("Alt needs n >= 5") };
        }
        if self.family == Family::Sporadic {
            return Ok(());
        }
        let q = match self.q {
            Some(q) => q,
            None => return illegal("missing q"),
        };
        let (p, a) = prime_power(q)?;
        let n = self.n;
        match self.family {
            Family::PSL => {
                if n < 2 || (n == 2 && q <= 3) {
                    return illegal("PSL needs n >= 2 and (n,q) not (2,2),(2,3)");
                }
            }
            Family::PSU => {
                if n < 3 || (n == 3 && q == 2) {
                    return illegal("PSU needs n >= 3 and (n,q) != (3,2)");
                }
            }
            Family::PSp => {
                if n < 4 || n % 2 != 0 || (n == 4 && q == 2) {
                    return illegal("PSp needs even dimension >= 4 and (dim,q) != (4,2)");
                }
            }
            Family::POmegaOdd => {
                if n < 7 || n % 2 != 1 || p == 2 {
                    return illegal("POmega odd needs odd dimension >= 7 and q odd");
                }
            }
            Family::POmegaEven => {
                if n < 8 || n % 2 != 0 || self.epsilon.is_none() {
                    return illegal("POmega even needs even dimension >= 8 and a sign");
                }
            }
            Family::Suzuki2B2 => {
                if p != 2 || a % 2 == 0 || q < 8 {
                    return illegal("Sz needs q = 2^(2m+1) >= 8");
                }
            }
            Family::Ree2G2 => {
                if p != 3 || a % 2 == 0 || q < 27 {
                    return illegal("2G2 needs q = 3^(2m+1) >= 27");
                }
            }
            Family::Ree2F4 => {
                if p != 2 || a % 2 == 0 {
                    return illegal("2F4 needs q = 2^(2m+1)");
                }
            }
            Family::G2 => {
                if q < 3 {
                    return illegal("G2 needs q >= 3");
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Canonical representative under the exceptional isomorphisms between small
    /// classical and alternating groups.
    pub fn normalize(&self) -> Result<Self, GroupError> {
        self.check_legal()?;
        let out = match (self.family, self.n, self.q) {
            (Family::PSL, 2, Some(4)) | (Family::PSL, 2, Some(5)) => Self::alt(5)?,
            (Family::PSL, 3, Some(2)) => Self::psl(2, 7)?,
            (Family::PSL, 2, Some(9)) => Self::alt(6)?,
            (Family::PSL, 4, Some(2)) => Self::alt(8)?,
            (Family::PSp, 4, Some(3)) => Self::psu(4, 2)?,
            _ => self.clone(),
        };
        Ok(out)
    }

    pub fn is_normalized(&self) -> bool {
        self.normalize().map(|n| &n == self).unwrap_or(false)
    }

    pub fn order(&self) -> Result<FactoredInteger, GroupError> {
        self.check_legal()?;
        let q = self.q.unwrap_or(0);
        let n = self.n;
        let order = match self.family {
            Family::Alt => formulas::alt_order(n),
            Family::Sporadic => {
                let name = self.sporadic_name.as_deref().unwrap_or("");
                let e = catalog::lookup(name)
                    .ok_or_else(|| GroupError::Unsupported(format!("sporadic group {name}")))?;
                catalog::entry_order(e)
            }
            Family::PSL => formulas::psl_order(n, q)?,
            Family::PSU => formulas::psu_order(n, q)?,
            Family::PSp => formulas::psp_order(n, q)?,
            Family::POmegaOdd => formulas::pomega_odd_order(n, q)?,
            Family::POmegaEven => formulas::pomega_even_order(n, q, self.epsilon.unwrap())?,
            Family::Suzuki2B2 => formulas::suzuki_order(q)?,
            Family::Ree2G2 => formulas::ree_2g2_order(q)?,
            Family::Steinberg3D4 => formulas::steinberg_3d4_order(q)?,
            Family::Ree2F4 => formulas::ree_2f4_order(q)?,
            Family::G2 => formulas::g2_order(q)?,
            Family::F4 => formulas::f4_order(q)?,
            Family::E6 => formulas::e6_order(q, Sign::Plus)?,
            Family::TwistedE6 => formulas::e6_order(q, Sign::Minus)?,
            Family::E7 => formulas::e7_order(q)?,
            Family::E8 => formulas::e8_order(q)?,
        };
        Ok(order)
    }

    /// `|Out(X)|`. The id is normalized first.
    pub fn out_order(&self) -> Result<FactoredInteger, GroupError> {
        let id = self.normalize()?;
        let q = id.q.unwrap_or(0);
        let a = id.field().map(|(_, a)| a as u64).unwrap_or(0);
        let p = id.characteristic().unwrap_or(0);
        let n = id.n as u64;
        let value: u64 = match id.family {
            Family::Alt => {
                if id.n == 6 {
                    4
                } else {
                    2
                }
            }
            Family::Sporadic => {
                let name = id.sporadic_name.as_deref().unwrap_or("");
                let e = catalog::lookup(name)
                    .and_then(|e| e.out_order)
                    .ok_or_else(|| GroupError::Unsupported(format!("Out({name})")))?;
                return Ok(FactoredInteger::from_factors(e)?);
            }
            Family::PSL => {
                if id.n == 2 {
                    a * gcd_u64(2, q - 1)
                } else {
                    2 * a * gcd_u64(n, q - 1)
                }
            }
            Family::PSU => 2 * a * gcd_u64(n, q + 1),
            Family::PSp => {
                if id.n == 4 && p == 2 {
                    2 * a
                } else {
                    a * gcd_u64(2, q - 1)
                }
            }
            Family::POmegaOdd => 2 * a,
            Family::POmegaEven => {
                let m = id.n / 2;
                let eps = id.epsilon.unwrap();
                let diag = gcd_power(4, q, m, eps);
                let graph = if m == 4 && eps == Sign::Plus { 6 } else { 2 };
                graph * a * diag
            }
            Family::Suzuki2B2 | Family::Ree2G2 | Family::Ree2F4 => a,
            Family::Steinberg3D4 => 3 * a,
            Family::G2 => {
                if p == 3 {
                    2 * a
                } else {
                    a
                }
            }
            Family::F4 => {
                if p == 2 {
                    2 * a
                } else {
                    a
                }
            }
            Family::E6 => 2 * a * gcd_u64(3, q - 1),
            Family::TwistedE6 => 2 * a * gcd_u64(3, q + 1),
            Family::E7 => a * gcd_u64(2, q - 1),
            Family::E8 => a,
        };
        Ok(FactoredInteger::from_u64(value)?)
    }

    /// Minimal degree of a faithful permutation representation, for classical
    /// and alternating groups.
    pub fn minimal_degree(&self) -> Result<BigUint, GroupError> {
        self.check_legal()?;
        let n = self.n;
        let big = BigUint::from;
        let pw = |base: u64, e: u32| BigUint::from(base).pow(e);
        let deg = match self.family {
            Family::Alt => big(n as u64),
            Family::PSL => {
                let q = self.q.unwrap();
                match (n, q) {
                    (2, 5) | (2, 7) | (2, 11) => big(q),
                    (2, 9) => big(6u64),
                    (4, 2) => big(8u64),
                    _ => (pw(q, n) - 1u32) / (q - 1),
                }
            }
            Family::PSU => {
                let q = self.q.unwrap();
                match n {
                    3 if q == 5 => big(50u64),
                    3 => pw(q, 3) + 1u32,
                    4 => big(q + 1) * (pw(q, 3) + 1u32),
                    _ if q == 2 && n % 6 == 0 => pw(2, n - 1) * (pw(2, n) - 1u32) / 3u32,
                    _ => {
                        let signed = |e: u32| {
                            if e % 2 == 0 {
                                pw(q, e) - 1u32
                            } else {
                                pw(q, e) + 1u32
                            }
                        };
                        signed(n) * signed(n - 1) / (q * q - 1)
                    }
                }
            }
            Family::PSp => {
                let q = self.q.unwrap();
                let m = n / 2;
                match (m, q) {
                    (2, 3) => big(27u64),
                    (_, 2) => pw(2, m - 1) * (pw(2, m) - 1u32),
                    _ => (pw(q, 2 * m) - 1u32) / (q - 1),
                }
            }
            Family::POmegaOdd => {
                let q = self.q.unwrap();
                let m = (n - 1) / 2;
                if q == 3 {
                    pw(3, m) * (pw(3, m) - 1u32) / 2u32
                } else {
                    (pw(q, 2 * m) - 1u32) / (q - 1)
                }
            }
            Family::POmegaEven => {
                let q = self.q.unwrap();
                let m = n / 2;
                match self.epsilon.unwrap() {
                    Sign::Plus if q == 2 => pw(2, m - 1) * (pw(2, m) - 1u32),
                    Sign::Plus => (pw(q, m) - 1u32) * (pw(q, m - 1) + 1u32) / (q - 1),
                    Sign::Minus => (pw(q, m) + 1u32) * (pw(q, m - 1) - 1u32) / (q - 1),
                }
            }
            _ => {
                return Err(GroupError::Unsupported(format!(
                    "minimal degree of {self} (only classical and alternating groups)"
                )))
            }
        };
        Ok(deg)
    }
}

fn gcd_power(k: u64, q: u64, m: u32, eps: Sign) -> u64 {
    let mut r = 1u64;
    for _ in 0..m {
        r = r * (q % k) % k;
    }
    let v = match eps {
        Sign::Plus => (r + k - 1) % k,
        Sign::Minus => (r + 1) % k,
    };
    gcd_u64(k, v)
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.q.unwrap_or(0);
        match self.family {
            Family::Alt => write!(f, "Alt({})", self.n),
            Family::Sporadic => write!(f, "{}", self.sporadic_name.as_deref().unwrap_or("?")),
            Family::PSL => write!(f, "PSL({},{q})", self.n),
            Family::PSU => write!(f, "PSU({},{q})", self.n),
            Family::PSp => write!(f, "PSp({},{q})", self.n),
            Family::POmegaOdd => write!(f, "POmega({},{q})", self.n),
            Family::POmegaEven => write!(
                f,
                "POmega{}({},{q})",
                self.epsilon.map(Sign::symbol).unwrap_or('?'),
                self.n
            ),
            Family::Suzuki2B2 => write!(f, "Sz({q})"),
            Family::Ree2G2 => write!(f, "2G2({q})"),
            Family::Steinberg3D4 => write!(f, "3D4({q})"),
            Family::Ree2F4 => write!(f, "2F4({q})"),
            Family::G2 => write!(f, "G2({q})"),
            Family::F4 => write!(f, "F4({q})"),
            Family::E6 => write!(f, "E6({q})"),
            Family::TwistedE6 => write!(f, "2E6({q})"),
            Family::E7 => write!(f, "E7({q})"),
            Family::E8 => write!(f, "E8({q})"),
        }
    }
}

/// A group named in a table: either a simple group or a catalog label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupRef {
    Simple(SimpleGroupId),
    Named(String),
}

impl GroupRef {
    pub fn named(label: &str) -> Result<Self, GroupError> {
        catalog::lookup(label)
            .map(|_| GroupRef::Named(label.to_string()))
            .ok_or_else(|| GroupError::Unsupported(format!("catalog label {label}")))
    }

    pub fn order(&self) -> Result<FactoredInteger, GroupError> {
        match self {
            GroupRef::Simple(id) => id.order(),
            GroupRef::Named(label) => catalog::lookup(label)
                .map(catalog::entry_order)
                .ok_or_else(|| GroupError::Unsupported(format!("catalog label {label}"))),
        }
    }

    pub fn label(&self) -> String {
        match self {
            GroupRef::Simple(id) => id.to_string(),
            GroupRef::Named(label) => label.clone(),
        }
    }
}

impl fmt::Display for GroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Order of a catalog label, or `Unsupported`.
pub fn catalog_order(label: &str) -> Result<FactoredInteger, GroupError> {
    GroupRef::named(label)?.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(f: FactoredInteger) -> u64 {
        f.to_u64().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(SimpleGroupId::psl(2, 4).unwrap().normalize().unwrap(), SimpleGroupId::alt(5).unwrap());
        assert_eq!(SimpleGroupId::psp(4, 3).unwrap().normalize().unwrap(), SimpleGroupId::psu(4, 2).unwrap());
        let l33 = SimpleGroupId::psl(3, 3).unwrap();
        assert_eq!(l33.normalize().unwrap(), l33);
    }

    #[test]
    fn order_examples() {
        assert_eq!(u(SimpleGroupId::psl(2, 7).unwrap().order().unwrap()), 168);
        assert_eq!(u(SimpleGroupId::alt(6).unwrap().order().unwrap()), 360);
        assert_eq!(u(catalog_order("PSp(4,2)").unwrap()), 720);
        let sz8 = SimpleGroupId::exceptional(Family::Suzuki2B2, 8).unwrap().order().unwrap();
        assert_eq!(u(sz8.clone()), 29120);
        assert_eq!(u(sz8.divide_exact(&catalog_order("13:4").unwrap()).unwrap()), 560);
    }

    #[test]
    fn out_order_examples() {
        assert_eq!(u(SimpleGroupId::psl(2, 16).unwrap().out_order().unwrap()), 4);
        assert_eq!(u(SimpleGroupId::alt(6).unwrap().out_order().unwrap()), 4);
        assert_eq!(u(SimpleGroupId::psp(4, 4).unwrap().out_order().unwrap()), 4);
        assert_eq!(u(SimpleGroupId::pomega_even(8, 2, Sign::Plus).unwrap().out_order().unwrap()), 6);
        assert_eq!(u(SimpleGroupId::pomega_even(8, 3, Sign::Plus).unwrap().out_order().unwrap()), 24);
        assert_eq!(u(SimpleGroupId::sporadic("M11").unwrap().out_order().unwrap()), 1);
    }

    #[test]
    fn minimal_degree_examples() {
        let md = |id: SimpleGroupId| id.minimal_degree().unwrap();
        assert_eq!(md(SimpleGroupId::psu(3, 5).unwrap()), BigUint::from(50u32));
        assert_eq!(md(SimpleGroupId::psl(2, 9).unwrap()), BigUint::from(6u32));
        assert_eq!(md(SimpleGroupId::psp(6, 2).unwrap()), BigUint::from(28u32));
        assert_eq!(md(SimpleGroupId::psp(4, 3).unwrap()), BigUint::from(27u32));
        assert_eq!(md(SimpleGroupId::psl(4, 2).unwrap()), BigUint::from(8u32));
        assert_eq!(md(SimpleGroupId::psu(6, 2).unwrap()), BigUint::from(672u32));
        assert!(matches!(
            SimpleGroupId::exceptional(Family::G2, 3).unwrap().minimal_degree(),
            Err(GroupError::Unsupported(_))
        ));
    }

    #[test]
    fn legality() {
        assert!(SimpleGroupId::psl(2, 3).is_err());
        assert!(SimpleGroupId::psl(2, 6).is_err());
        assert!(SimpleGroupId::psu(3, 2).is_err());
        assert!(SimpleGroupId::psp(4, 2).is_err());
        assert!(SimpleGroupId::pomega_odd(7, 4).is_err());
        assert!(SimpleGroupId::exceptional(Family::Suzuki2B2, 2).is_err());
        assert!(SimpleGroupId::alt(4).is_err());
        assert!(SimpleGroupId::sporadic("M10").is_err());
    }
}
