use crate::{Error, Result};
use num::BigRational;
use num::{One, Zero};
use std::fmt::Debug;

/// Exact field arithmetic. Implementations: arbitrary-precision rationals
/// ("p = 0") and prime fields F_p with word-sized p. Division is always
/// exact; nothing in the system ever rounds.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element. A zero argument is a
    /// caller bug, not a data condition, hence panics.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// n/d as a field element; in F_p a denominator divisible by p is not
    /// reducible into the field.
    fn from_ratio(&self, n: i64, d: i64) -> Result<Self::Elem>;
    /// 0 for the rationals, p for F_p.
    fn characteristic(&self) -> u64;
    fn name(&self) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    fn add_assign_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }
}

/// The rationals, backed by arbitrary-precision integers (lowest terms and
/// positive denominator are maintained by the representation).
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn from_ratio(&self, n: i64, d: i64) -> Result<BigRational> {
        if d == 0 {
            return Err(Error::CoefficientDomain("zero denominator".into()));
        }
        Ok(BigRational::new(n.into(), d.into()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn name(&self) -> String {
        "Q".into()
    }
}

/// F_p for a word-sized prime p; residues in [0, p), Fermat inversion.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b, self.p);
            }
            b = mulmod(b, b, self.p);
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_ratio(&self, n: i64, d: i64) -> Result<u64> {
        if d == 0 {
            return Err(Error::CoefficientDomain("zero denominator".into()));
        }
        let dr = self.reduce_i64(d);
        if dr == 0 {
            return Err(Error::CoefficientDomain(format!(
                "denominator {d} vanishes in F_{}",
                self.p
            )));
        }
        Ok(mulmod(self.reduce_i64(n), self.inv(&dr), self.p))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Deterministic Miller-Rabin for u64 (the standard 12-base certificate).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = 1u64;
        let mut base = a % n;
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                x = mulmod(x, base, n);
            }
            base = mulmod(base, base, n);
            e >>= 1;
        }
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Runtime selector between the two coefficient fields; the public API takes
/// this and dispatches to the generic kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Interprets the CLI's --p value: 0 means rational coefficients.
    pub fn from_p(p: u64) -> Result<FieldSpec> {
        if p == 0 {
            Ok(FieldSpec::Rational)
        } else if is_prime_u64(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::input(format!("p = {p} is neither 0 nor prime")))
        }
    }

    /// Parses the CLI's --field value: "q" or "f<P>".
    pub fn parse_name(s: &str) -> Result<FieldSpec> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "0" {
            return Ok(FieldSpec::Rational);
        }
        let digits = t.strip_prefix('f').unwrap_or(&t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::input(format!("unrecognized field {s:?} (want q or f<P>)")))?;
        FieldSpec::from_p(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.sub(&1, &3), 3);
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.inv(&3), 2);
        assert_eq!(f5.from_i64(-7), 3);
        assert_eq!(f5.from_ratio(1, 2).unwrap(), 3);
        assert!(f5.from_ratio(1, 5).is_err());
        assert!(PrimeField::new(6).is_err());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Rationals;
        let half = q.from_ratio(1, 2).unwrap();
        let third = q.from_ratio(1, 3).unwrap();
        let s = q.add(&half, &third);
        assert_eq!(s, q.from_ratio(5, 6).unwrap());
        assert_eq!(q.mul(&s, &q.inv(&s)), q.one());
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::from_p(0).unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::from_p(3).unwrap(), FieldSpec::Prime(3));
        assert!(FieldSpec::from_p(9).is_err());
        assert_eq!(FieldSpec::parse_name("q").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse_name("F2").unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::parse_name("f5").unwrap(), FieldSpec::Prime(5));
        assert!(FieldSpec::parse_name("f15").is_err());
    }
}
