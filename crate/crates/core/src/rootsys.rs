//! Root systems of the classical families in epsilon-coordinates, and the
//! weights they act on.
//!
//! Conventions. Type A_{m-1} is realized inside R^m (so weights are defined
//! modulo integer multiples of (1,...,1)); types B_m, C_m, D_m use the usual
//! realizations with positive roots
//!
//! * B_m:  e_i - e_j, e_i + e_j (i < j), e_i
//! * C_m:  e_i - e_j, e_i + e_j (i < j), 2 e_i
//! * D_m:  e_i - e_j, e_i + e_j (i < j)
//!
//! A root is positive iff its first nonzero coordinate is positive. Weight
//! coordinates are exact rationals with denominator at most 2, stored as
//! doubled integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(&self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

/// A root, with integer epsilon-coordinates and its (integral) coroot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<i64>,
    pub coroot: Vec<i64>,
    /// squared-length ratio to a short root: 1 or 2 in the classical types
    pub d: i64,
}

impl Root {
    fn new(coords: Vec<i64>, family: Family) -> Self {
        let norm: i64 = coords.iter().map(|c| c * c).sum();
        let short = match family {
            Family::A | Family::D => 2,
            Family::B => 1,
            Family::C => 2,
        };
        let coroot: Vec<i64> = coords.iter().map(|&c| 2 * c / norm).collect();
        assert!(coords.iter().zip(&coroot).all(|(&c, &cv)| 2 * c == cv * norm));
        Root {
            coords,
            coroot,
            d: norm / short,
        }
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
            coroot: self.coroot.iter().map(|c| -c).collect(),
            d: self.d,
        }
    }

    /// Positive iff the first nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.coords
            .iter()
            .find(|&&c| c != 0)
            .map(|&c| c > 0)
            .unwrap_or(false)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            match (first, c) {
                (true, 1) => write!(f, "e{}", i + 1)?,
                (true, -1) => write!(f, "-e{}", i + 1)?,
                (true, c) => write!(f, "{}e{}", c, i + 1)?,
                (false, 1) => write!(f, "+e{}", i + 1)?,
                (false, -1) => write!(f, "-e{}", i + 1)?,
                (false, c) if c > 0 => write!(f, "+{}e{}", c, i + 1)?,
                (false, c) => write!(f, "{}e{}", c, i + 1)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A classical root system with its positive roots enumerated in a fixed
/// deterministic order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    /// the number of epsilon-coordinates (the rank is m-1 in type A, m else)
    pub m: usize,
    positive: Vec<Root>,
}

impl RootSystem {
    /// `m` is the number of coordinates: A uses GL_m (rank m-1, so m >= 2),
    /// B/C need m >= 2, D needs m >= 3.
    pub fn new(family: Family, m: usize) -> Result<Self, Error> {
        let min = match family {
            Family::A | Family::B | Family::C => 2,
            Family::D => 3,
        };
        if m < min {
            return Err(Error::InvalidSpec(format!(
                "family {} needs at least {min} coordinates, got {m}",
                family.letter()
            )));
        }
        let mut positive = Vec::new();
        let e = |i: usize, c: i64, j: usize, cj: i64| {
            let mut v = vec![0i64; m];
            v[i] = c;
            if i != j {
                v[j] = cj;
            }
            v
        };
        for i in 0..m {
            for j in (i + 1)..m {
                positive.push(Root::new(e(i, 1, j, -1), family));
                if family != Family::A {
                    // collected below so that all e_i - e_j come first
                }
            }
        }
        if matches!(family, Family::B | Family::C | Family::D) {
            for i in 0..m {
                for j in (i + 1)..m {
                    positive.push(Root::new(e(i, 1, j, 1), family));
                }
            }
        }
        match family {
            Family::B => {
                for i in 0..m {
                    positive.push(Root::new(e(i, 1, i, 0), family));
                }
            }
            Family::C => {
                for i in 0..m {
                    positive.push(Root::new(e(i, 2, i, 0), family));
                }
            }
            _ => {}
        }
        Ok(RootSystem { family, m, positive })
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        let m = self.m as i64;
        let c2: Vec<i64> = match self.family {
            Family::A => (0..self.m).map(|i| 2 * (m - 1 - i as i64)).collect(),
            Family::B => (0..self.m).map(|i| 2 * (m - i as i64) - 1).collect(),
            Family::C => (0..self.m).map(|i| 2 * (m - i as i64)).collect(),
            Family::D => (0..self.m).map(|i| 2 * (m - 1 - i as i64)).collect(),
        };
        Weight { c2, shifted: false }
    }

    /// The Coxeter number.
    pub fn coxeter_number(&self) -> i64 {
        let m = self.m as i64;
        match self.family {
            Family::A => m,
            Family::B | Family::C => 2 * m,
            Family::D => 2 * m - 2,
        }
    }
}

/// A weight in epsilon-coordinates. All coordinates are exact rationals
/// with denominator at most 2, stored doubled. The `shifted` flag records
/// whether a rho-shift has been applied; mixing shifted and unshifted
/// weights in one operation is a bug and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    /// doubled coordinates
    pub c2: Vec<i64>,
    pub shifted: bool,
}

impl Weight {
    pub fn from_ints(coords: &[i64], shifted: bool) -> Self {
        Weight {
            c2: coords.iter().map(|&c| 2 * c).collect(),
            shifted,
        }
    }

    /// From doubled coordinates (so halves are representable).
    pub fn from_doubled(c2: Vec<i64>, shifted: bool) -> Self {
        Weight { c2, shifted }
    }

    pub fn zero(m: usize) -> Self {
        Weight {
            c2: vec![0; m],
            shifted: false,
        }
    }

    pub fn len(&self) -> usize {
        self.c2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c2.is_empty()
    }

    /// Whether every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.c2.iter().all(|c| c % 2 == 0)
    }

    /// lambda + rho, marking the result shifted.
    pub fn shift(&self, rs: &RootSystem) -> Weight {
        assert!(!self.shifted, "weight already shifted");
        let rho = rs.rho();
        Weight {
            c2: self.c2.iter().zip(&rho.c2).map(|(a, b)| a + b).collect(),
            shifted: true,
        }
    }

    /// x - rho, clearing the shifted flag.
    pub fn unshift(&self, rs: &RootSystem) -> Weight {
        assert!(self.shifted, "weight not shifted");
        let rho = rs.rho();
        Weight {
            c2: self.c2.iter().zip(&rho.c2).map(|(a, b)| a - b).collect(),
            shifted: false,
        }
    }

    /// <x, beta^vee>. Always an integer for lattice weights; panics if not.
    pub fn pairing(&self, beta: &Root) -> i64 {
        let twice: i64 = self.c2.iter().zip(&beta.coroot).map(|(c, v)| c * v).sum();
        assert!(twice % 2 == 0, "non-integral pairing");
        twice / 2
    }

    /// x - n*beta (beta has integer coordinates).
    pub fn sub_root_multiple(&self, beta: &Root, n: i64) -> Weight {
        Weight {
            c2: self
                .c2
                .iter()
                .zip(&beta.coords)
                .map(|(c, b)| c - 2 * n * b)
                .collect(),
            shifted: self.shifted,
        }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.shifted, other.shifted);
        Weight {
            c2: self.c2.iter().zip(&other.c2).map(|(a, b)| a + b).collect(),
            shifted: self.shifted,
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.shifted, other.shifted);
        Weight {
            c2: self.c2.iter().zip(&other.c2).map(|(a, b)| a - b).collect(),
            shifted: self.shifted,
        }
    }

    /// Reflection s_beta(x) = x - <x, beta^vee> beta.
    pub fn reflect(&self, beta: &Root) -> Weight {
        self.sub_root_multiple(beta, self.pairing(beta))
    }

    /// Four times the standard inner product with another weight.
    pub fn ip4(&self, other: &Weight) -> i64 {
        self.c2.iter().zip(&other.c2).map(|(a, b)| a * b).sum()
    }

    /// Canonical representative modulo Z(1,...,1) in type A (identity in
    /// the other families): subtract floor(sum/m) from every coordinate.
    pub fn canonical(&self, rs: &RootSystem) -> Weight {
        if rs.family != Family::A {
            return self.clone();
        }
        let sum2: i64 = self.c2.iter().sum();
        debug_assert!(sum2 % 2 == 0, "type A weights have integer coordinates");
        let t = (sum2 / 2).div_euclid(rs.m as i64);
        Weight {
            c2: self.c2.iter().map(|c| c - 2 * t).collect(),
            shifted: self.shifted,
        }
    }

    /// Strict dominance of a shifted weight (regular and dominant).
    pub fn is_regular_dominant_shifted(&self, rs: &RootSystem) -> bool {
        assert!(self.shifted);
        let c = &self.c2;
        let desc = c.windows(2).all(|w| w[0] > w[1]);
        match rs.family {
            Family::A => desc,
            Family::B | Family::C => desc && *c.last().unwrap() > 0,
            Family::D => {
                let m = c.len();
                c[..m - 1].windows(2).all(|w| w[0] > w[1]) && c[m - 2] > c[m - 1].abs()
            }
        }
    }

    /// Dominance of an unshifted weight (weak inequalities).
    pub fn is_dominant_unshifted(&self, rs: &RootSystem) -> bool {
        assert!(!self.shifted);
        let c = &self.c2;
        let desc = c.windows(2).all(|w| w[0] >= w[1]);
        match rs.family {
            Family::A => desc,
            Family::B | Family::C => desc && *c.last().unwrap() >= 0,
            Family::D => {
                let m = c.len();
                c[..m - 1].windows(2).all(|w| w[0] >= w[1]) && c[m - 2] >= c[m - 1].abs()
            }
        }
    }

    /// Whether the weight lies in the weight lattice of the given system:
    /// integral coordinates, except that B and D also allow all coordinates
    /// simultaneously half-integral.
    pub fn in_lattice(&self, rs: &RootSystem) -> bool {
        if self.c2.len() != rs.m {
            return false;
        }
        let all_even = self.c2.iter().all(|c| c % 2 == 0);
        let all_odd = self.c2.iter().all(|c| c % 2 != 0);
        match rs.family {
            Family::A | Family::C => all_even,
            Family::B | Family::D => all_even || all_odd,
        }
    }

    /// The dominance (root) order on unshifted weights: whether
    /// `lambda - self` is a nonnegative integer combination of positive
    /// roots. In type A this is taken modulo Z(1,...,1).
    pub fn dominance_leq(&self, lambda: &Weight, rs: &RootSystem) -> bool {
        assert_eq!(self.shifted, lambda.shifted);
        let m = rs.m as i64;
        let mut delta2: Vec<i64> = lambda
            .c2
            .iter()
            .zip(&self.c2)
            .map(|(l, s)| l - s)
            .collect();
        // delta must be an integral vector (same lattice coset)
        if delta2.iter().any(|d| d % 2 != 0) {
            return false;
        }
        if rs.family == Family::A {
            let sum2: i64 = delta2.iter().sum();
            if sum2 % (2 * m) != 0 {
                return false;
            }
            let t2 = sum2 / m;
            for d in &mut delta2 {
                *d -= t2;
            }
        }
        let mut partial = Vec::with_capacity(rs.m);
        let mut acc = 0i64;
        for &d in &delta2 {
            acc += d;
            partial.push(acc);
        }
        let total = acc;
        match rs.family {
            Family::A => partial.iter().all(|&p| p >= 0),
            Family::B => partial.iter().all(|&p| p >= 0),
            Family::C => {
                partial[..rs.m - 1].iter().all(|&p| p >= 0) && total >= 0 && total % 4 == 0
            }
            Family::D => {
                let pre = partial[rs.m - 2];
                let last = delta2[rs.m - 1];
                partial[..rs.m - 1].iter().all(|&p| p >= 0)
                    && total % 4 == 0
                    && pre - last >= 0
                    && total >= 0
            }
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &c) in self.c2.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// Parses "5,3,2" or "5/2,3/2,1/2" (also accepts surrounding parentheses).
impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut c2 = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let v = if let Some((num, den)) = part.split_once('/') {
                if den.trim() != "2" {
                    return Err(Error::BadWeight(format!(
                        "denominator must be 2 in {part:?}"
                    )));
                }
                num.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::BadWeight(format!("bad coordinate {part:?}")))?
            } else {
                2 * part
                    .parse::<i64>()
                    .map_err(|_| Error::BadWeight(format!("bad coordinate {part:?}")))?
            };
            c2.push(v);
        }
        if c2.is_empty() {
            return Err(Error::BadWeight("empty weight".into()));
        }
        Ok(Weight {
            c2,
            shifted: false,
        })
    }
}

impl Weight {
    /// Marks an unshifted weight as shifted without adding rho. Intended for
    /// weights that are already given in rho-shifted coordinates.
    pub fn shift_zero(&self) -> Weight {
        Weight {
            c2: self.c2.clone(),
            shifted: true,
        }
    }

    /// Drops the shifted flag without subtracting rho.
    pub fn unshift_zero(&self) -> Weight {
        Weight {
            c2: self.c2.clone(),
            shifted: false,
        }
    }
}
