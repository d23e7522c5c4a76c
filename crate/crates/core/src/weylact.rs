//! Weyl groups of the classical families as signed permutations, the dot
//! action, and reduction of a shifted weight to the dominant chamber.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rootsys::{Family, Root, RootSystem, Weight};

/// A signed permutation acting by (w x)_i = signs[i] * x[perm[i]].
///
/// Type A elements have all signs +1; type D elements have an even number
/// of -1 signs; B and C elements are unrestricted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(m: usize) -> Self {
        WeylElement {
            perm: (0..m).collect(),
            signs: vec![1; m],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn is_valid_for(&self, family: Family) -> bool {
        let m = self.perm.len();
        if self.signs.len() != m {
            return false;
        }
        let mut seen = vec![false; m];
        for &p in &self.perm {
            if p >= m || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        if self.signs.iter().any(|&s| s != 1 && s != -1) {
            return false;
        }
        let flips = self.signs.iter().filter(|&&s| s == -1).count();
        match family {
            Family::A => flips == 0,
            Family::B | Family::C => true,
            Family::D => flips % 2 == 0,
        }
    }

    /// Determinant: sign of the permutation times the product of the signs.
    pub fn det(&self) -> i64 {
        let mut perm = self.perm.clone();
        let mut sign = 1i64;
        for i in 0..perm.len() {
            while perm[i] != i {
                let j = perm[i];
                perm.swap(i, j);
                sign = -sign;
            }
        }
        for &s in &self.signs {
            sign *= s as i64;
        }
        sign
    }

    /// Linear action on a weight (shifted or not; the dot action on
    /// unshifted weights is `shift` / `apply` / `unshift`).
    pub fn apply(&self, x: &Weight) -> Weight {
        assert_eq!(x.c2.len(), self.perm.len());
        Weight {
            c2: self
                .perm
                .iter()
                .zip(&self.signs)
                .map(|(&p, &s)| s as i64 * x.c2[p])
                .collect(),
            shifted: x.shifted,
        }
    }

    /// Action on roots, rebuilding the coroot data.
    pub fn apply_root(&self, r: &Root) -> Root {
        let coords: Vec<i64> = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s as i64 * r.coords[p])
            .collect();
        let coroot: Vec<i64> = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s as i64 * r.coroot[p])
            .collect();
        Root {
            coords,
            coroot,
            d: r.d,
        }
    }

    /// Composition: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let m = self.perm.len();
        let mut perm = vec![0; m];
        let mut signs = vec![1i8; m];
        for i in 0..m {
            perm[i] = other.perm[self.perm[i]];
            signs[i] = self.signs[i] * other.signs[self.perm[i]];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let m = self.perm.len();
        let mut perm = vec![0; m];
        let mut signs = vec![1i8; m];
        for i in 0..m {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// The dot action w.lambda = w(lambda + rho) - rho on unshifted weights.
    pub fn dot(&self, lam: &Weight, rs: &RootSystem) -> Weight {
        self.apply(&lam.shift(rs)).unshift(rs)
    }
}

/// Result of reducing a shifted weight to the dominant chamber: the
/// dominant representative, the determinant of the witness (0 when the
/// weight is singular, i.e. has a nontrivial stabilizer), and the witness
/// itself (w with w(input) = dominant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub dominant: Weight,
    pub det: i64,
    pub witness: WeylElement,
}

impl Reduction {
    pub fn is_singular(&self) -> bool {
        self.det == 0
    }
}

/// Reduces a shifted weight to the closure of the dominant chamber,
/// returning the witness element and its determinant (0 if singular).
pub fn dominant_reduce(x: &Weight, rs: &RootSystem) -> Reduction {
    assert!(x.shifted, "dominant_reduce expects a shifted weight");
    assert_eq!(x.c2.len(), rs.m);
    let m = rs.m;
    // indices sorted by the target key, stably
    let mut idx: Vec<usize> = (0..m).collect();
    match rs.family {
        Family::A => idx.sort_by_key(|&i| -x.c2[i]),
        _ => idx.sort_by_key(|&i| -x.c2[i].abs()),
    }
    let mut signs: Vec<i8> = match rs.family {
        Family::A => vec![1; m],
        _ => idx
            .iter()
            .map(|&i| if x.c2[i] < 0 { -1 } else { 1 })
            .collect(),
    };
    if rs.family == Family::D {
        let flips = signs.iter().filter(|&&s| s == -1).count();
        if flips % 2 == 1 {
            // compensate on the last (smallest-modulus) coordinate
            signs[m - 1] = -signs[m - 1];
        }
    }
    let witness = WeylElement {
        perm: idx,
        signs,
    };
    debug_assert!(witness.is_valid_for(rs.family));
    let dominant = witness.apply(x);
    let singular = match rs.family {
        Family::A => dominant.c2.windows(2).any(|w| w[0] == w[1]),
        Family::B | Family::C => {
            dominant.c2.windows(2).any(|w| w[0] == w[1]) || dominant.c2[m - 1] == 0
        }
        Family::D => {
            let a = &dominant.c2;
            a[..m - 1].windows(2).any(|w| w[0] == w[1]) || a[m - 2] == a[m - 1].abs()
        }
    };
    let det = if singular { 0 } else { witness.det() };
    Reduction {
        dominant,
        det,
        witness,
    }
}

/// Order of the Weyl group.
pub fn weyl_order(rs: &RootSystem) -> u128 {
    let m = rs.m as u128;
    let fact: u128 = (1..=m).product();
    match rs.family {
        Family::A => fact,
        Family::B | Family::C => fact << rs.m,
        Family::D => fact << (rs.m - 1),
    }
}

/// Enumerates the full Weyl group. Errors if the order exceeds `cap`.
pub fn enumerate_weyl(rs: &RootSystem, cap: u128) -> Result<Vec<WeylElement>, Error> {
    let order = weyl_order(rs);
    if order > cap {
        return Err(Error::InvalidSpec(format!(
            "Weyl group order {order} exceeds cap {cap}"
        )));
    }
    let m = rs.m;
    let mut perms = Vec::new();
    permutations(&mut (0..m).collect::<Vec<_>>(), 0, &mut perms);
    let sign_vectors: Vec<Vec<i8>> = match rs.family {
        Family::A => vec![vec![1; m]],
        Family::B | Family::C => sign_combinations(m, false),
        Family::D => sign_combinations(m, true),
    };
    let mut out = Vec::with_capacity(order as usize);
    for perm in &perms {
        for signs in &sign_vectors {
            out.push(WeylElement {
                perm: perm.clone(),
                signs: signs.clone(),
            });
        }
    }
    Ok(out)
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn sign_combinations(m: usize, even_only: bool) -> Vec<Vec<i8>> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << m) {
        if even_only && mask.count_ones() % 2 == 1 {
            continue;
        }
        out.push(
            (0..m)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        );
    }
    out
}
