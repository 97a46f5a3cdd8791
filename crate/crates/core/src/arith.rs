//! Exact factored integers and primitive prime divisors.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{divisor} does not divide {dividend}")]
    NonDivisible { dividend: String, divisor: String },
    #[error("zero has no factorization")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("factorization of {0} exceeds the trial-division budget")]
    FactorizationLimit(String),
}

/// Upper bound on trial divisions spent on a single cofactor.
const TRIAL_BUDGET: u64 = 50_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = 17u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    // d walks 17, 23, 29, ...; d+2 covers 19, 25, 31, ... so every 6k±1 is hit
    true
}

/// Returns `(p, a)` with `q = p^a`, or `None` if `q` is not a prime power.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = FactoredInteger::from_u64(q).ok()?;
    if f.factors.len() == 1 {
        let (&p, &a) = f.factors.iter().next()?;
        Some((p, a))
    } else {
        None
    }
}

/// A positive integer kept as a prime to exponent map. The value 1 is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn prime_power(p: u64, e: u32) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        let mut factors = BTreeMap::new();
        if e > 0 {
            factors.insert(p, e);
        }
        Ok(Self { factors })
    }

    /// Builds from explicit `(prime, exponent)` pairs, certifying each prime.
    pub fn from_factors(pairs: &[(u64, u32)]) -> Result<Self, ArithError> {
        let mut out = Self::one();
        for &(p, e) in pairs {
            out = out.multiply(&Self::prime_power(p, e)?);
        }
        Ok(out)
    }

    pub fn from_u64(n: u64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::Zero);
        }
        Ok(Self {
            factors: trial_factor_u128(n as u128, 1)?,
        })
    }

    pub fn from_biguint(n: &BigUint) -> Result<Self, ArithError> {
        factor_with_hint(n, 1)
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.keys().next_back().copied()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(p, &e)| other.exponent(*p) >= e)
    }

    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, ArithError> {
        if !divisor.divides(self) {
            return Err(ArithError::NonDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        let mut factors = self.factors.clone();
        for (&p, &e) in &divisor.factors {
            let slot = factors.get_mut(&p).expect("checked by divides");
            *slot -= e;
            if *slot == 0 {
                factors.remove(&p);
            }
        }
        Ok(Self { factors })
    }

    /// The p-part: the largest power of `p` dividing `self`.
    pub fn part(&self, p: u64) -> Self {
        let mut factors = BTreeMap::new();
        if let Some(&e) = self.factors.get(&p) {
            factors.insert(p, e);
        }
        Self { factors }
    }

    /// The p'-part: `self` with every factor of `p` removed.
    pub fn coprime_part(&self, p: u64) -> Self {
        let mut factors = self.factors.clone();
        factors.remove(&p);
        Self { factors }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .filter(|_| k > 0)
                .map(|(&p, &e)| (p, e * k))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .filter_map(|(&p, &e)| {
                    let m = e.min(other.exponent(p));
                    (m > 0).then_some((p, m))
                })
                .collect(),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_biguint().to_u64()
    }

    /// Exact comparison by expansion.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.to_biguint().cmp(&other.to_biguint())
    }

    /// Compact product notation, e.g. `2^6*3^2*5*7`.
    pub fn product_notation(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_biguint())
    }
}

impl fmt::Debug for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredInteger({})", self.product_notation())
    }
}

impl Mul for &FactoredInteger {
    type Output = FactoredInteger;
    fn mul(self, rhs: &FactoredInteger) -> FactoredInteger {
        self.multiply(rhs)
    }
}

impl Mul for FactoredInteger {
    type Output = FactoredInteger;
    fn mul(self, rhs: FactoredInteger) -> FactoredInteger {
        self.multiply(&rhs)
    }
}

/// Trial division where every prime factor not dividing `hint` is known to be
/// 1 mod `hint`. With `hint = 1` this is plain trial division.
fn trial_factor_u128(mut n: u128, hint: u64) -> Result<BTreeMap<u64, u32>, ArithError> {
    let mut out = BTreeMap::new();
    let original = n;
    let mut push = |p: u64, n: &mut u128| {
        while *n % p as u128 == 0 {
            *n /= p as u128;
            *out.entry(p).or_insert(0) += 1;
        }
    };
    if hint > 2 {
        for p in trial_factor_u128(hint as u128, 1)?.into_keys() {
            push(p, &mut n);
        }
        let step = if hint % 2 == 1 { 2 * hint } else { hint };
        let mut m = step + 1;
        let mut spent = 0u64;
        while (m as u128) * (m as u128) <= n {
            push(m, &mut n);
            m += step;
            spent += 1;
            if spent > TRIAL_BUDGET {
                return Err(ArithError::FactorizationLimit(original.to_string()));
            }
        }
    } else {
        for p in [2u64, 3] {
            push(p, &mut n);
        }
        let mut m = 5u64;
        let mut spent = 0u64;
        while (m as u128) * (m as u128) <= n {
            push(m, &mut n);
            push(m + 2, &mut n);
            m += 6;
            spent += 1;
            if spent > TRIAL_BUDGET {
                return Err(ArithError::FactorizationLimit(original.to_string()));
            }
        }
    }
    if n > 1 {
        let p = u64::try_from(n).map_err(|_| ArithError::FactorizationLimit(original.to_string()))?;
        *out.entry(p).or_insert(0) += 1;
    }
    Ok(out)
}

fn factor_with_hint(n: &BigUint, hint: u64) -> Result<FactoredInteger, ArithError> {
    if n.is_zero() {
        return Err(ArithError::Zero);
    }
    match n.to_u128() {
        Some(small) => Ok(FactoredInteger {
            factors: trial_factor_u128(small, hint)?,
        }),
        None => Err(ArithError::FactorizationLimit(n.to_string())),
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// The value of the d-th cyclotomic polynomial at `q`.
pub fn cyclotomic_value(q: u64, d: u32) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let q = BigUint::from(q);
    for e in divisors(d) {
        let term = q.pow(e) - BigUint::one();
        match mobius(d / e) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

fn cyclotomic_factored(q: u64, d: u32) -> Result<FactoredInteger, ArithError> {
    factor_with_hint(&cyclotomic_value(q, d), d as u64)
}

/// `q^n - 1` factored through its cyclotomic pieces.
pub fn q_power_minus_one(q: u64, n: u32) -> Result<FactoredInteger, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    let mut acc = FactoredInteger::one();
    for d in divisors(n) {
        acc = acc.multiply(&cyclotomic_factored(q, d)?);
    }
    Ok(acc)
}

/// `q^n + 1` factored as the product of the cyclotomic pieces of `q^{2n}-1` missing from `q^n-1`.
pub fn q_power_plus_one(q: u64, n: u32) -> Result<FactoredInteger, ArithError> {
    let mut acc = FactoredInteger::one();
    for d in divisors(2 * n) {
        if n % d != 0 {
            acc = acc.multiply(&cyclotomic_factored(q, d)?);
        }
    }
    Ok(acc)
}

/// Zsygmondy primes: primes dividing `q^n - 1` and no `q^i - 1` with `i < n`.
pub fn primitive_prime_divisors(q: u64, n: u32) -> Result<BTreeSet<u64>, ArithError> {
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    let phi = cyclotomic_factored(q, n)?;
    Ok(phi.primes().filter(|p| n as u64 % p != 0).collect())
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Largest integer whose `k`-th power is at most `n`.
pub fn floor_root(n: &BigUint, k: u32) -> BigUint {
    n.nth_root(k)
}

/// Smallest integer whose `k`-th power is at least `n`.
pub fn ceil_root(n: &BigUint, k: u32) -> BigUint {
    let r = n.nth_root(k);
    if &r.pow(k) == n {
        r
    } else {
        r + BigUint::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(n: u64) -> FactoredInteger {
        FactoredInteger::from_u64(n).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(fi(12).multiply(&fi(1)), fi(12));
        assert_eq!(fi(12).multiply(&fi(18)), fi(216));
        assert_eq!(fi(168) * fi(120), fi(20160));
    }

    #[test]
    fn divide_examples() {
        assert_eq!(fi(168).divide_exact(&fi(24)).unwrap(), fi(7));
        assert_eq!(fi(720).divide_exact(&fi(60)).unwrap(), fi(12));
        assert!(matches!(
            fi(12).divide_exact(&fi(5)),
            Err(ArithError::NonDivisible { .. })
        ));
    }

    #[test]
    fn parts() {
        assert_eq!(fi(20160).part(2), fi(64));
        assert_eq!(fi(20160).coprime_part(2), fi(315));
        assert_eq!(fi(2520).part(2), fi(8));
        assert_eq!(fi(2520).coprime_part(2), fi(315));
        assert_eq!(fi(7).part(2), fi(1));
    }

    #[test]
    fn zsygmondy_examples() {
        assert!(primitive_prime_divisors(2, 6).unwrap().is_empty());
        assert_eq!(
            primitive_prime_divisors(2, 4).unwrap().into_iter().collect::<Vec<_>>(),
            vec![5]
        );
        assert!(primitive_prime_divisors(2, 1).unwrap().is_empty());
        assert!(primitive_prime_divisors(7, 2).unwrap().is_empty());
    }

    #[test]
    fn cyclotomic_pieces_multiply_out() {
        let grid = (2u64..=9).map(|q| (q, 18)).chain([16u64, 25, 27, 32].map(|q| (q, 12)));
        for (q, top) in grid.filter(|&(q, _)| prime_power_decomposition(q).is_some()) {
            for n in 1..=top {
                let direct = BigUint::from(q).pow(n) - 1u32;
                assert_eq!(q_power_minus_one(q, n).unwrap().to_biguint(), direct);
                let plus = BigUint::from(q).pow(n) + 1u32;
                assert_eq!(q_power_plus_one(q, n).unwrap().to_biguint(), plus);
            }
        }
    }

    #[test]
    fn roots() {
        let n = BigUint::from(80u32);
        assert_eq!(floor_root(&n, 4), BigUint::from(2u32));
        assert_eq!(ceil_root(&n, 4), BigUint::from(3u32));
        assert_eq!(ceil_root(&BigUint::from(81u32), 4), BigUint::from(3u32));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(65537));
        assert!(!is_prime(65535));
        assert!(!is_prime(25));
        assert!(!is_prime(289));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_decomposition(32), Some((2, 5)));
        assert_eq!(prime_power_decomposition(27), Some((3, 3)));
        assert_eq!(prime_power_decomposition(12), None);
        assert_eq!(prime_power_decomposition(1), None);
    }
}
