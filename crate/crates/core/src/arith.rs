//! Divisor arithmetic: formal Z-linear combinations of primes, binomial
//! divisors, and the (v-q)-multiplicities of Gaussian integers at a root
//! of unity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::Error;

/// A formal Z-linear combination of prime numbers.
///
/// `div(n)` of a positive integer has all multiplicities >= 0; differences
/// of such divisors (which occur as chi-basis coefficients) may carry
/// negative multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    mult: BTreeMap<u64, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// Prime factorization of |n|, as a divisor.
    pub fn of_int(n: i64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroDivisor);
        }
        let mut n = n.unsigned_abs();
        let mut mult = BTreeMap::new();
        let mut p = 2u64;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *mult.entry(p).or_insert(0) += 1;
                n /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            *mult.entry(n).or_insert(0) += 1;
        }
        Ok(Self { mult })
    }

    /// div of the binomial coefficient C(r, j), via the telescoping product
    /// C(r,j) = prod_{t=1..j} (r-j+t)/t. Exact; no big-integer needed.
    pub fn of_binomial(r: u64, j: u64) -> Self {
        assert!(j <= r, "binomial out of range: C({r},{j})");
        let mut d = Self::zero();
        for t in 1..=j {
            d += Self::of_int((r - j + t) as i64).expect("nonzero");
            d -= Self::of_int(t as i64).expect("nonzero");
        }
        d
    }

    /// Multiplicity of the prime `p` (0 if absent).
    pub fn nu_p(&self, p: u64) -> i64 {
        self.mult.get(&p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.mult.iter().map(|(&p, &m)| (p, m))
    }

    pub fn add_prime(&mut self, p: u64, m: i64) {
        let e = self.mult.entry(p).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mult.remove(&p);
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            mult: self.mult.iter().map(|(&p, &m)| (p, m * c)).collect(),
        }
    }

    /// JSON form `{"2": 2, "3": 1}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.mult
                .iter()
                .map(|(p, m)| (p.to_string(), serde_json::json!(m)))
                .collect(),
        )
    }
}

impl AddAssign<&Divisor> for Divisor {
    fn add_assign(&mut self, rhs: &Divisor) {
        for (&p, &m) in &rhs.mult {
            self.add_prime(p, m);
        }
    }
}

impl AddAssign for Divisor {
    fn add_assign(&mut self, rhs: Divisor) {
        *self += &rhs;
    }
}

impl SubAssign<&Divisor> for Divisor {
    fn sub_assign(&mut self, rhs: &Divisor) {
        for (&p, &m) in &rhs.mult {
            self.add_prime(p, -m);
        }
    }
}

impl SubAssign for Divisor {
    fn sub_assign(&mut self, rhs: Divisor) {
        *self -= &rhs;
    }
}

impl Add for Divisor {
    type Output = Divisor;
    fn add(mut self, rhs: Divisor) -> Divisor {
        self += rhs;
        self
    }
}

impl Sub for Divisor {
    type Output = Divisor;
    fn sub(mut self, rhs: Divisor) -> Divisor {
        self -= rhs;
        self
    }
}

impl Neg for Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        self.scaled(-1)
    }
}

/// Textual form `2^2·3`; the empty divisor prints as `1`.
impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&p, &m) in &self.mult {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// p-adic valuation of a nonzero integer.
pub fn val_p(mut n: u64, p: u64) -> u32 {
    assert!(n != 0);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Parameters of the quantum setting: the (odd) order `l` of the root of
/// unity and the characteristic of the base field (0 for char zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantumSpec {
    l: u64,
    char_k: u64,
}

impl QuantumSpec {
    /// `l` must be odd and >= 3; `char_k` must be 0 or a prime not
    /// dividing `l`.
    pub fn new(l: u64, char_k: u64) -> Result<Self, Error> {
        if l < 3 || l.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!(
                "order parameter l must be odd and >= 3, got {l}"
            )));
        }
        if char_k != 0 {
            if !is_prime(char_k) {
                return Err(Error::InvalidSpec(format!(
                    "characteristic must be 0 or prime, got {char_k}"
                )));
            }
            if l.is_multiple_of(char_k) {
                return Err(Error::InvalidSpec(format!(
                    "characteristic {char_k} must not divide l = {l}"
                )));
            }
        }
        Ok(Self { l, char_k })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn char_k(&self) -> u64 {
        self.char_k
    }
}

/// The (v-q)-multiplicity of the Gaussian integer [m]: 0 unless l | m;
/// for l | m it is 1 in characteristic 0 and p^{v_p(m)} in characteristic p.
pub fn divq_gaussian_int(m: u64, spec: &QuantumSpec) -> u64 {
    assert!(m >= 1);
    if !m.is_multiple_of(spec.l) {
        return 0;
    }
    match spec.char_k {
        0 => 1,
        p => p.pow(val_p(m, p)),
    }
}

/// The (v-q)-multiplicity of the Gaussian binomial [r choose j]_d, through
/// the telescoping product of the Gaussian integers [t]_d = [dt]/[d].
pub fn divq_gaussian_binomial(r: u64, j: u64, d: u64, spec: &QuantumSpec) -> Result<i64, Error> {
    assert!(j <= r, "gaussian binomial out of range: [{r} choose {j}]");
    assert!(d >= 1);
    let divq_t = |t: u64| divq_gaussian_int(d * t, spec) as i64 - divq_gaussian_int(d, spec) as i64;
    let mut total = 0i64;
    for t in 1..=j {
        total += divq_t(r - j + t) - divq_t(t);
    }
    if total < 0 {
        return Err(Error::Inconsistency(format!(
            "negative (v-q)-multiplicity {total} for [{r} choose {j}]_{d}"
        )));
    }
    Ok(total)
}
