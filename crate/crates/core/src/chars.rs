//! Formal chi-combinations (Z- or divisor-linear combinations of Weyl
//! characters indexed by dominant weights), character expansion into weight
//! multisets via Freudenthal's recursion, and Weyl dimension polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::rootsys::{Family, RootSystem, Weight};
use crate::weylact::{dominant_reduce, enumerate_weyl};

/// Coefficient ring for chi-combinations: integers or formal divisors.
pub trait Coeff: Clone + Default + PartialEq + std::ops::AddAssign {
    fn is_zero(&self) -> bool {
        *self == Self::default()
    }
    fn render(&self) -> String;
    fn json(&self) -> serde_json::Value;
}

impl Coeff for i64 {
    fn render(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> serde_json::Value {
        serde_json::json!(self)
    }
}

impl Coeff for crate::arith::Divisor {
    fn render(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> serde_json::Value {
        self.to_json()
    }
}

/// A finite linear combination of Weyl characters chi(lambda), keyed by
/// canonical dominant unshifted weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiCombination<C: Coeff> {
    terms: BTreeMap<Weight, C>,
}

impl<C: Coeff> Default for ChiCombination<C> {
    fn default() -> Self {
        ChiCombination {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> ChiCombination<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * chi(lambda)`; `lambda` must be dominant, unshifted and in
    /// canonical form.
    pub fn add_term(&mut self, lambda: Weight, c: C) {
        assert!(!lambda.shifted);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn coeff(&self, lambda: &Weight) -> C {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Weight, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `{"basis":"chi","terms":[{"lambda":[...],"coeff":...}]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": "chi",
            "terms": self.terms
                .iter()
                .map(|(w, c)| {
                    serde_json::json!({
                        "lambda": weight_json(w),
                        "coeff": c.json(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

pub fn weight_json(w: &Weight) -> serde_json::Value {
    serde_json::Value::Array(
        w.c2.iter()
            .map(|&c| {
                if c % 2 == 0 {
                    serde_json::json!(c / 2)
                } else {
                    serde_json::json!(format!("{c}/2"))
                }
            })
            .collect(),
    )
}

impl<C: Coeff> fmt::Display for ChiCombination<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            let r = c.render();
            let (neg, mag) = match r.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, r.as_str()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if mag == "1" {
                write!(f, "χ{w}")?;
            } else if mag.chars().all(|ch| ch.is_ascii_digit()) {
                write!(f, "{mag}·χ{w}")?;
            } else {
                write!(f, "({mag})·χ{w}")?;
            }
        }
        Ok(())
    }
}

/// chi(mu) rewritten in the dominant basis: either 0 (singular mu + rho) or
/// det(w) * chi(nu) with nu dominant. Input is unshifted; the result weight
/// is canonical.
pub fn chi_reduce(mu: &Weight, rs: &RootSystem) -> Option<(Weight, i64)> {
    let red = dominant_reduce(&mu.shift(rs), rs);
    if red.det == 0 {
        return None;
    }
    Some((red.dominant.unshift(rs).canonical(rs), red.det))
}

/// A multiset of weights with integer multiplicities (the weights of a
/// module), keyed by canonical weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    mult: BTreeMap<Weight, i64>,
}

impl WeightMultiset {
    pub fn add(&mut self, w: Weight, m: i64) {
        assert!(!w.shifted);
        if m == 0 {
            return;
        }
        let e = self.mult.entry(w.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mult.remove(&w);
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.mult.iter().map(|(w, &m)| (w, m))
    }

    pub fn total(&self) -> i64 {
        self.mult.values().sum()
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.mult
                .iter()
                .map(|(w, m)| serde_json::json!({"weight": weight_json(w), "mult": m}))
                .collect(),
        )
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, m) in self.mult.iter().rev() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{w}:{m}")?;
        }
        if first {
            write!(f, "(empty)")?;
        }
        Ok(())
    }
}

/// Linear (non-dot) reduction of a weight to its dominant chamber
/// representative, canonicalized.
fn linear_dominant(w: &Weight, rs: &RootSystem) -> Weight {
    dominant_reduce(&w.shift_zero(), rs)
        .dominant
        .unshift_zero()
        .canonical(rs)
}

/// Dominant weights mu <= lambda (dominance order), lambda dominant
/// unshifted, both canonical.
pub fn dominant_weights_below(lambda: &Weight, rs: &RootSystem) -> Vec<Weight> {
    assert!(!lambda.shifted);
    let lam = lambda.canonical(rs);
    let m = rs.m;
    // doubled coordinate bounds per family
    let (hi2, lo2) = match rs.family {
        Family::A => (lam.c2[0], lam.c2[m - 1]),
        _ => (lam.c2[0], 0),
    };
    let parity = lam.c2[0].rem_euclid(2);
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::with_capacity(m);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        cur: &mut Vec<i64>,
        m: usize,
        hi2: i64,
        lo2: i64,
        parity: i64,
        rs: &RootSystem,
        lam: &Weight,
        out: &mut Vec<Weight>,
    ) {
        if cur.len() == m {
            let w = Weight::from_doubled(cur.clone(), false);
            if w.is_dominant_unshifted(rs) && w.canonical(rs) == w && w.dominance_leq(lam, rs) {
                out.push(w);
            }
            return;
        }
        let upper = if cur.is_empty() { hi2 } else { *cur.last().unwrap() };
        let last_slot = cur.len() == m - 1;
        let lower = if last_slot && rs.family == Family::D {
            -upper
        } else {
            lo2
        };
        let mut v = lower;
        // match the parity (lattice coset) of lambda
        if (v.rem_euclid(2)) != parity {
            v += 1;
        }
        while v <= upper {
            cur.push(v);
            rec(cur, m, hi2, lo2, parity, rs, lam, out);
            cur.pop();
            v += 2;
        }
    }
    rec(&mut cur, m, hi2, lo2, parity, rs, &lam, &mut out);
    out
}

/// All weights of the Weyl module of highest weight `lambda`, with exact
/// multiplicities, computed by Freudenthal's recursion. `cap` bounds the
/// Weyl group order used for orbit expansion.
pub fn expand_weights(lambda: &Weight, rs: &RootSystem, cap: u128) -> Result<WeightMultiset, Error> {
    assert!(!lambda.shifted);
    if !lambda.in_lattice(rs) {
        return Err(Error::BadWeight(format!("{lambda} not in the weight lattice")));
    }
    if !lambda.is_dominant_unshifted(rs) {
        return Err(Error::BadWeight(format!("{lambda} is not dominant")));
    }
    let lam = lambda.canonical(rs);
    let lam_rho = lam.shift(rs);
    let norm_lam = lam_rho.ip4(&lam_rho);

    let mut dominants = dominant_weights_below(&lam, rs);
    // Freudenthal in decreasing order of |mu + rho|^2
    dominants.sort_by_key(|mu| {
        let mr = mu.shift(rs);
        -mr.ip4(&mr)
    });

    let roots_as_weights: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .map(|r| Weight::from_ints(&r.coords, false))
        .collect();

    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    for mu in &dominants {
        if *mu == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mu_rho = mu.shift(rs);
        let denom = norm_lam - mu_rho.ip4(&mu_rho);
        debug_assert!(denom > 0, "norm must strictly drop below lambda");
        let mut num: i64 = 0;
        for (alpha, aw) in rs.positive_roots().iter().zip(&roots_as_weights) {
            let mut k = 1i64;
            loop {
                let nu = mu.sub_root_multiple(alpha, -k); // mu + k*alpha
                let rep = linear_dominant(&nu, rs);
                let m_nu = mult.get(&rep).copied().unwrap_or(0);
                if m_nu == 0 {
                    // once we leave the weight polytope we never re-enter
                    if !rep.dominance_leq(&lam, rs) {
                        break;
                    }
                    k += 1;
                    if k > 4 * (norm_lam + 1) {
                        break;
                    }
                    continue;
                }
                num += m_nu * nu.ip4(aw);
                k += 1;
            }
        }
        let val = 2 * num / denom;
        debug_assert_eq!(2 * num % denom, 0, "Freudenthal division must be exact");
        if val != 0 {
            mult.insert(mu.clone(), val);
        }
    }

    // expand each dominant multiplicity over its Weyl orbit
    let group = enumerate_weyl(rs, cap)?;
    let mut out = WeightMultiset::default();
    for (mu, m) in &mult {
        let mut orbit: std::collections::BTreeSet<Weight> = std::collections::BTreeSet::new();
        for w in &group {
            orbit.insert(w.apply(mu).canonical(rs));
        }
        for x in orbit {
            out.add(x, *m);
        }
    }
    Ok(out)
}

/// Expands an integer chi-combination into a weight multiset.
pub fn expand_combination(
    comb: &ChiCombination<i64>,
    rs: &RootSystem,
    cap: u128,
) -> Result<WeightMultiset, Error> {
    let mut out = WeightMultiset::default();
    for (lam, &c) in comb.iter() {
        let ws = expand_weights(lam, rs, cap)?;
        for (w, m) in ws.iter() {
            out.add(w.clone(), c * m);
        }
    }
    Ok(out)
}

/// dim of the Weyl module: prod <lambda+rho, alpha^vee> / <rho, alpha^vee>.
pub fn weyl_dim(lambda: &Weight, rs: &RootSystem) -> u128 {
    assert!(!lambda.shifted);
    let lam_rho = lambda.shift(rs);
    let rho = rs.rho().shift_zero();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for alpha in rs.positive_roots() {
        let a = lam_rho.pairing(alpha);
        let b = rho.pairing(alpha);
        assert!(a > 0 && b > 0, "dominant weight required");
        num *= a as u128;
        den *= b as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1);
    num
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    const CAP: u128 = 1 << 22;

    fn rs(f: Family, m: usize) -> RootSystem {
        RootSystem::new(f, m).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight::from_ints(coords, false)
    }

    #[test]
    fn chi_reduce_examples() {
        let a2 = rs(Family::A, 2);
        // A_1 (GL_2): chi(-1) = chi(-1,0) is reduced already
        assert_eq!(chi_reduce(&w(&[-1, 0]), &a2), None); // (-1,0)+rho = (0,0): singular
        assert_eq!(chi_reduce(&w(&[-2, 0]), &a2), Some((w(&[0, 0]), -1)));
        assert_eq!(chi_reduce(&w(&[3, 0]), &a2), Some((w(&[3, 0]).canonical(&a2), 1)));

        let b2 = rs(Family::B, 2);
        // mu = (-1, 0): mu + rho = (1/2, 1/2): singular
        assert_eq!(chi_reduce(&w(&[-1, 0]), &b2), None);
        // mu = (-3, 1): mu + rho = (-3/2, 3/2) -> (3/2, 3/2): singular
        assert_eq!(chi_reduce(&w(&[-3, 1]), &b2), None);
        // mu = (-3, 0): mu + rho = (-3/2, 1/2) -> (3/2, 1/2), one flip
        assert_eq!(chi_reduce(&w(&[-3, 0]), &b2), Some((w(&[0, 0]), -1)));
    }

    #[test]
    fn dominant_weights_below_examples() {
        let a2 = rs(Family::A, 2);
        // GL_2 highest weight (3,0): dominants below are (3,0),(2,1)
        let below = dominant_weights_below(&w(&[3, 0]), &a2);
        assert_eq!(below.len(), 2);
        let b2 = rs(Family::B, 2);
        // (1,0): below are (1,0),(0,0)
        let below = dominant_weights_below(&w(&[1, 0]), &b2);
        assert_eq!(below, vec![w(&[0, 0]), w(&[1, 0])]);
        // spin weight (1/2,1/2): only itself
        let spin = Weight::from_doubled(vec![1, 1], false);
        assert_eq!(dominant_weights_below(&spin, &b2), vec![spin.clone()]);
    }

    #[test]
    fn expand_sl2_and_gl2() {
        let a2 = rs(Family::A, 2);
        // Weyl module (3,0) of GL_2: weights (3,0),(2,1),(1,2),(0,3), all mult 1
        let ws = expand_weights(&w(&[3, 0]), &a2, CAP).unwrap();
        assert_eq!(ws.total(), 4);
        assert_eq!(ws.get(&w(&[3, 0]).canonical(&a2)), 1);
        assert_eq!(ws.get(&w(&[2, 1]).canonical(&a2)), 1);
        assert_eq!(weyl_dim(&w(&[3, 0]), &a2), 4);
    }

    #[test]
    fn expand_b2_adjointish() {
        let b2 = rs(Family::B, 2);
        // natural module: highest weight (1,0), dim 5
        let nat = expand_weights(&w(&[1, 0]), &b2, CAP).unwrap();
        assert_eq!(nat.total(), 5);
        assert_eq!(nat.get(&w(&[0, 0])), 1);
        assert_eq!(weyl_dim(&w(&[1, 0]), &b2), 5);
        // adjoint: highest weight (1,1), dim 10, zero weight mult 2
        let adj = expand_weights(&w(&[1, 1]), &b2, CAP).unwrap();
        assert_eq!(adj.total(), 10);
        assert_eq!(adj.get(&w(&[0, 0])), 2);
        assert_eq!(weyl_dim(&w(&[1, 1]), &b2), 10);
        // spin module: dim 4, all mult 1
        let spin = Weight::from_doubled(vec![1, 1], false);
        let sp = expand_weights(&spin, &b2, CAP).unwrap();
        assert_eq!(sp.total(), 4);
        assert_eq!(weyl_dim(&spin, &b2), 4);
    }

    #[test]
    fn expand_known_dims() {
        let c3 = rs(Family::C, 3);
        assert_eq!(weyl_dim(&w(&[1, 0, 0]), &c3), 6);
        assert_eq!(weyl_dim(&w(&[1, 1, 0]), &c3), 14);
        let d4 = rs(Family::D, 4);
        assert_eq!(weyl_dim(&w(&[1, 0, 0, 0]), &d4), 8);
        assert_eq!(weyl_dim(&w(&[1, 1, 0, 0]), &d4), 28);
        let a4 = rs(Family::A, 4);
        assert_eq!(weyl_dim(&w(&[1, 0, 0, 0]), &a4), 4);
        assert_eq!(weyl_dim(&w(&[1, 1, 0, 0]), &a4), 6);
    }

    #[test]
    fn expand_total_matches_dim() {
        for (sys, lams) in [
            (rs(Family::A, 3), vec![vec![2, 1, 0], vec![3, 1, 0]]),
            (rs(Family::B, 2), vec![vec![2, 1], vec![2, 0]]),
            (rs(Family::C, 2), vec![vec![2, 1], vec![3, 1]]),
            (rs(Family::D, 3), vec![vec![2, 1, 0], vec![1, 1, 1]]),
        ] {
            for lc in lams {
                let lam = w(&lc);
                let ws = expand_weights(&lam, &sys, CAP).unwrap();
                assert_eq!(
                    ws.total() as u128,
                    weyl_dim(&lam, &sys),
                    "{:?} {lam}",
                    sys.family
                );
            }
        }
    }

    #[test]
    fn chi_combination_algebra() {
        let a2 = rs(Family::A, 2);
        let mut c: ChiCombination<i64> = ChiCombination::zero();
        c.add_term(w(&[3, 0]).canonical(&a2), 2);
        c.add_term(w(&[3, 0]).canonical(&a2), -2);
        assert!(c.is_zero());
        c.add_term(w(&[3, 0]).canonical(&a2), 1);
        c.add_term(w(&[1, 0]).canonical(&a2), -1);
        assert_eq!(c.len(), 2);
        let ws = expand_combination(&c, &a2, CAP).unwrap();
        // dim 4 - dim 2 = 2
        assert_eq!(ws.total(), 2);
    }
}
