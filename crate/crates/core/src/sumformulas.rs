//! Euler coefficients of the cokernel Q(mu) and of Weyl modules, the
//! divisor-valued torsion character div_T(Q(mu)), and the four sum
//! formulas: classical/quantum Jantzen filtrations of Weyl modules and
//! classical/quantum tilting filtrations.
//!
//! Sign convention. The Jantzen-type results are normalized so that the
//! output equals the sum over i > 0 of the characters of the filtration
//! layers; concretely the coefficient of chi(lambda) is
//! -sum_{beta, 0<m<<mu+rho,beta^vee>} nu_p(m) * det(w) over the scan hits
//! with w.(mu - m*beta) = lambda dominant. The rank-1 elementary-divisor
//! oracle pins this sign.

use std::collections::BTreeMap;

use crate::arith::{divq_gaussian_int, Divisor, QuantumSpec};
use crate::chars::{chi_reduce, ChiCombination};
use crate::error::Error;
use crate::rootsets::{u_set, v_set};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::weylact::dominant_reduce;

pub const WEYL_CONVENTION: &str = "sum over i>0 of ch of the i-th Jantzen layer";
pub const TILTING_CONVENTION: &str = "sum over j>0 of dim of the j-th filtration layer";

/// A Jantzen-type layer sum: a chi-combination under the fixed convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumFormulaResult {
    pub combo: ChiCombination<i64>,
    pub convention: &'static str,
}

/// Route selector for the Euler coefficient of a Weyl module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaRoute {
    V,
    U,
}

/// Route selector for the tilting sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TiltingRoute {
    Direct,
    Euler,
}

/// Elementary divisors of the contravariant form on the rank-1 Weyl module
/// of highest weight r: on the divided-power basis the Gram entry at weight
/// r - 2j is the binomial coefficient C(r, j), so the interior weight
/// spaces (j = 1, ..., r-1) carry these binomial divisors.
pub fn rank1_cokernel_divisors(r: u64) -> Vec<(u64, Divisor)> {
    (1..r.max(1)).map(|j| (j, Divisor::of_binomial(r, j))).collect()
}

/// e_lambda(Q(mu)) = -sum over V(lambda,mu) of det(x) * div(m).
pub fn euler_q(lambda: &Weight, mu: &Weight, rs: &RootSystem) -> Result<Divisor, Error> {
    let mut d = Divisor::zero();
    for e in v_set(lambda, mu, rs)? {
        d -= Divisor::of_int(e.n)?.scaled(e.w.det());
    }
    Ok(d)
}

/// e_lambda(Delta(mu)) by either route; the two agree (and equal
/// -euler_q for lambda != mu).
pub fn euler_delta(
    lambda: &Weight,
    mu: &Weight,
    rs: &RootSystem,
    route: DeltaRoute,
) -> Result<Divisor, Error> {
    let mut d = Divisor::zero();
    match route {
        DeltaRoute::V => {
            for e in v_set(lambda, mu, rs)? {
                d += Divisor::of_int(e.n)?.scaled(e.w.det());
            }
        }
        DeltaRoute::U => {
            for e in u_set(lambda, mu, rs)? {
                d += Divisor::of_int(e.n.abs())?.scaled(e.w.det());
            }
        }
    }
    Ok(d)
}

/// Both routes of euler_delta, with the equality asserted.
pub fn euler_delta_checked(
    lambda: &Weight,
    mu: &Weight,
    rs: &RootSystem,
) -> Result<Divisor, Error> {
    let v = euler_delta(lambda, mu, rs, DeltaRoute::V)?;
    let u = euler_delta(lambda, mu, rs, DeltaRoute::U)?;
    if v != u {
        return Err(Error::Inconsistency(format!(
            "euler_delta routes disagree at lambda={lambda} mu={mu}: V={v} U={u}"
        )));
    }
    Ok(v)
}

/// div_T(Q(mu)) resolved in the dominant chi-basis: the map
/// lambda -> e_lambda(Q(mu)), computed by scanning the finitely many pairs
/// (beta, 0 < m < <mu+rho, beta^vee>) and reducing chi(mu - m*beta).
pub fn div_t_q(mu: &Weight, rs: &RootSystem) -> Result<ChiCombination<Divisor>, Error> {
    if mu.shifted || !mu.in_lattice(rs) || !mu.is_dominant_unshifted(rs) {
        return Err(Error::BadWeight(format!("mu = {mu} must be dominant")));
    }
    let mu = mu.canonical(rs);
    let mu_rho = mu.shift(rs);
    let mut out: ChiCombination<Divisor> = ChiCombination::zero();
    for beta in rs.positive_roots() {
        let bound = mu_rho.pairing(beta);
        for m in 1..bound {
            let Some((lam, det)) = chi_reduce(&mu.sub_root_multiple(beta, m), rs) else {
                continue;
            };
            out.add_term(lam, Divisor::of_int(m)?.scaled(-det));
        }
    }
    Ok(out)
}

/// The classical Jantzen sum formula: the p-coefficient of div_T(Q(mu)).
pub fn jantzen_sum(mu: &Weight, p: u64, rs: &RootSystem) -> Result<SumFormulaResult, Error> {
    if !crate::arith::is_prime(p) {
        return Err(Error::InvalidSpec(format!("p = {p} is not prime")));
    }
    let mut combo: ChiCombination<i64> = ChiCombination::zero();
    for (lam, c) in div_t_q(mu, rs)?.iter() {
        combo.add_term(lam.clone(), c.nu_p(p));
    }
    Ok(SumFormulaResult {
        combo,
        convention: WEYL_CONVENTION,
    })
}

/// The quantum Jantzen sum formula at an l-th root of unity: same scan,
/// with nu_p(m) replaced by the (v-q)-multiplicity of the Gaussian integer
/// [m]_{d_beta} = [d_beta * m] / [d_beta].
pub fn jantzen_sum_quantum(
    mu: &Weight,
    spec: &QuantumSpec,
    rs: &RootSystem,
) -> Result<SumFormulaResult, Error> {
    if mu.shifted || !mu.in_lattice(rs) || !mu.is_dominant_unshifted(rs) {
        return Err(Error::BadWeight(format!("mu = {mu} must be dominant")));
    }
    let mu = mu.canonical(rs);
    let mu_rho = mu.shift(rs);
    let mut combo: ChiCombination<i64> = ChiCombination::zero();
    for beta in rs.positive_roots() {
        let bound = mu_rho.pairing(beta);
        let d = beta.d as u64;
        let base = divq_gaussian_int(d, spec) as i64;
        for m in 1..bound {
            let c = divq_gaussian_int(d * m as u64, spec) as i64 - base;
            if c == 0 {
                continue;
            }
            let Some((lam, det)) = chi_reduce(&mu.sub_root_multiple(beta, m), rs) else {
                continue;
            };
            combo.add_term(lam, -det * c);
        }
    }
    Ok(SumFormulaResult {
        combo,
        convention: WEYL_CONVENTION,
    })
}

/// The Weyl factors (Q : Delta(lambda)) of a module with a Weyl filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingCharacter {
    factors: BTreeMap<Weight, i64>,
}

impl TiltingCharacter {
    pub fn new(factors: impl IntoIterator<Item = (Weight, i64)>, rs: &RootSystem) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (w, n) in factors {
            if w.shifted || !w.in_lattice(rs) || !w.is_dominant_unshifted(rs) {
                return Err(Error::BadWeight(format!("factor {w} must be dominant")));
            }
            if n < 1 {
                return Err(Error::InvalidSpec(format!(
                    "factor multiplicity must be >= 1, got {n}"
                )));
            }
            *map.entry(w.canonical(rs)).or_insert(0) += n;
        }
        Ok(TiltingCharacter { factors: map })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.factors.iter().map(|(w, &n)| (w, n))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Per-prime weight attached to a solution value n by the classical
/// (nu_p) and quantum (Gaussian multiplicity) sum formulas.
enum NWeight<'a> {
    Classical(u64),
    Quantum(&'a QuantumSpec),
}

impl NWeight<'_> {
    fn of(&self, n: i64, d: i64) -> i64 {
        let a = n.unsigned_abs();
        match self {
            NWeight::Classical(p) => Divisor::of_int(a as i64).unwrap().nu_p(*p),
            NWeight::Quantum(spec) => {
                divq_gaussian_int(d as u64 * a, spec) as i64
                    - divq_gaussian_int(d as u64, spec) as i64
            }
        }
    }
}

/// Shared driver for the tilting sums: the alternating, n-weighted count
/// of U(lambda, mu_j)-solutions over the Weyl factors of Q.
fn tilting_sum_with(
    lambda: &Weight,
    q: &TiltingCharacter,
    rs: &RootSystem,
    route: TiltingRoute,
    weight: &NWeight,
) -> Result<i64, Error> {
    if lambda.shifted || !lambda.in_lattice(rs) || !lambda.is_dominant_unshifted(rs) {
        return Err(Error::BadWeight(format!("lambda = {lambda} must be dominant")));
    }
    let lam = lambda.canonical(rs);
    let lam_rho = lam.shift(rs);
    let mut total = 0i64;
    for (mu, nj) in q.iter() {
        match route {
            TiltingRoute::Euler => {
                for e in u_set(&lam, mu, rs)? {
                    total -= nj * e.w.det() * weight.of(e.n, e.gamma.d);
                }
            }
            TiltingRoute::Direct => {
                // solve |lambda+rho - n*alpha|^2 = |mu+rho|^2 per root, then
                // confirm orbit membership; no reuse of the S-set machinery
                let mu_rho = mu.shift(rs);
                let target = if rs.family == Family::A {
                    let diff: i64 =
                        lam_rho.c2.iter().sum::<i64>() - mu_rho.c2.iter().sum::<i64>();
                    if diff % (rs.m as i64) != 0 || (diff / rs.m as i64) % 2 != 0 {
                        continue;
                    }
                    let t2 = diff / rs.m as i64;
                    Weight::from_doubled(mu_rho.c2.iter().map(|c| c + t2).collect(), true)
                } else {
                    mu_rho.clone()
                };
                let norm_target = target.ip4(&target);
                for alpha in rs.positive_roots() {
                    let aw = Weight::from_ints(&alpha.coords, true);
                    let a = aw.ip4(&aw);
                    let b = -2 * lam_rho.ip4(&aw);
                    let c = lam_rho.ip4(&lam_rho) - norm_target;
                    // a*n^2 + b*n + c = 0
                    let disc = b * b - 4 * a * c;
                    if disc < 0 {
                        continue;
                    }
                    let s = (disc as f64).sqrt() as i64;
                    let sq = (s - 2..=s + 2).find(|&x| x >= 0 && x * x == disc);
                    let Some(sq) = sq else { continue };
                    let mut roots = vec![];
                    for num in [-b + sq, -b - sq] {
                        if num % (2 * a) == 0 {
                            roots.push(num / (2 * a));
                        }
                    }
                    roots.dedup();
                    let bound = lam_rho.pairing(alpha);
                    for n in roots {
                        if n == 0 || (n >= 0 && n <= bound) {
                            continue;
                        }
                        let x = lam_rho.sub_root_multiple(alpha, n);
                        let red = dominant_reduce(&x, rs);
                        if red.det == 0 || red.dominant.c2 != target.c2 {
                            continue;
                        }
                        total -= nj * red.det * weight.of(n, alpha.d);
                    }
                }
            }
        }
    }
    Ok(total)
}

/// Classical tilting sum formula: the total dimension of the positive
/// layers of the lambda-filtration of Q, by either route.
pub fn tilting_sum(
    lambda: &Weight,
    q: &TiltingCharacter,
    p: u64,
    rs: &RootSystem,
    route: TiltingRoute,
) -> Result<i64, Error> {
    if !crate::arith::is_prime(p) {
        return Err(Error::InvalidSpec(format!("p = {p} is not prime")));
    }
    tilting_sum_with(lambda, q, rs, route, &NWeight::Classical(p))
}

/// Classical tilting sum with both routes compared.
pub fn tilting_sum_checked(
    lambda: &Weight,
    q: &TiltingCharacter,
    p: u64,
    rs: &RootSystem,
) -> Result<i64, Error> {
    let d = tilting_sum(lambda, q, p, rs, TiltingRoute::Direct)?;
    let e = tilting_sum(lambda, q, p, rs, TiltingRoute::Euler)?;
    if d != e {
        return Err(Error::Inconsistency(format!(
            "tilting routes disagree at lambda={lambda}: direct={d} euler={e}"
        )));
    }
    Ok(d)
}

/// Quantum tilting sum formula; both routes are computed and compared.
pub fn tilting_sum_quantum(
    lambda: &Weight,
    q: &TiltingCharacter,
    spec: &QuantumSpec,
    rs: &RootSystem,
) -> Result<i64, Error> {
    let w = NWeight::Quantum(spec);
    let d = tilting_sum_with(lambda, q, rs, TiltingRoute::Direct, &w)?;
    let e = tilting_sum_with(lambda, q, rs, TiltingRoute::Euler, &w)?;
    if d != e {
        return Err(Error::Inconsistency(format!(
            "quantum tilting routes disagree at lambda={lambda}: direct={d} euler={e}"
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::expand_combination;

    const CAP: u128 = 1 << 22;

    fn rs(f: Family, m: usize) -> RootSystem {
        RootSystem::new(f, m).unwrap()
    }

    fn a1() -> RootSystem {
        rs(Family::A, 2)
    }

    /// sl2 shorthand: integer weight k as the GL_2 weight (k, 0).
    fn sl2(k: i64) -> Weight {
        Weight::from_ints(&[k, 0], false)
    }

    fn div(n: i64) -> Divisor {
        Divisor::of_int(n).unwrap()
    }

    fn key(k: i64, sys: &RootSystem) -> Weight {
        sl2(k).canonical(sys)
    }

    #[test]
    fn rank1_divisor_orders() {
        let orders: Vec<Divisor> = rank1_cokernel_divisors(7).into_iter().map(|(_, d)| d).collect();
        assert_eq!(
            orders,
            [7, 21, 35, 35, 21, 7].map(div).to_vec()
        );
        assert!(rank1_cokernel_divisors(0).is_empty());
        assert!(rank1_cokernel_divisors(1).is_empty());
        let o4: Vec<Divisor> = rank1_cokernel_divisors(4).into_iter().map(|(_, d)| d).collect();
        assert_eq!(o4, [4, 6, 4].map(div).to_vec());
    }

    #[test]
    fn euler_examples_a1() {
        let sys = a1();
        // e_3(Q(7)) = -(div 2 - div 6) = div 3
        assert_eq!(euler_q(&sl2(3), &sl2(7), &sys).unwrap(), div(3));
        // e_1(Q(7)) = -(div 3 - div 5) = div 5 - div 3
        assert_eq!(euler_q(&sl2(1), &sl2(7), &sys).unwrap(), div(5) - div(3));
        // e_mu(Q(mu)) = 0
        assert!(euler_q(&sl2(7), &sl2(7), &sys).unwrap().is_zero());
        // e_3(Delta(7)) = div 2 - div 6, both routes
        let expect = div(2) - div(6);
        assert_eq!(euler_delta(&sl2(3), &sl2(7), &sys, DeltaRoute::V).unwrap(), expect);
        assert_eq!(euler_delta(&sl2(3), &sl2(7), &sys, DeltaRoute::U).unwrap(), expect);
        assert_eq!(euler_delta_checked(&sl2(3), &sl2(7), &sys).unwrap(), expect);
        // complementarity
        let q = euler_q(&sl2(1), &sl2(7), &sys).unwrap();
        let d = euler_delta_checked(&sl2(1), &sl2(7), &sys).unwrap();
        assert!((q + d).is_zero());
        // vanishing when dominance fails
        assert!(euler_delta_checked(&sl2(7), &sl2(3), &sys).unwrap().is_zero());
    }

    #[test]
    fn div_t_q_a1_mu7() {
        let sys = a1();
        let t = div_t_q(&sl2(7), &sys).unwrap();
        assert_eq!(t.coeff(&key(5, &sys)), div(7));
        assert_eq!(t.coeff(&key(3, &sys)), div(3));
        assert_eq!(t.coeff(&key(1, &sys)), div(5) - div(3));
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn div_t_q_small_is_empty() {
        let sys = a1();
        assert!(div_t_q(&sl2(0), &sys).unwrap().is_zero());
        assert!(div_t_q(&sl2(1), &sys).unwrap().is_zero());
    }

    #[test]
    fn jantzen_a1_examples() {
        let sys = a1();
        // mu = 7, p = 3: chi(3) - chi(1)
        let r = jantzen_sum(&sl2(7), 3, &sys).unwrap();
        assert_eq!(r.combo.coeff(&key(3, &sys)), 1);
        assert_eq!(r.combo.coeff(&key(1, &sys)), -1);
        assert_eq!(r.combo.len(), 2);
        // weight expansion {3:1, -3:1}
        let ws = expand_combination(&r.combo, &sys, CAP).unwrap();
        assert_eq!(ws.get(&sl2(3).canonical(&sys)), 1);
        assert_eq!(ws.get(&Weight::from_ints(&[0, 3], false).canonical(&sys)), 1);
        assert_eq!(ws.total(), 2);
        // mu = 4, p = 2: 2chi(2) - chi(0)
        let r = jantzen_sum(&sl2(4), 2, &sys).unwrap();
        assert_eq!(r.combo.coeff(&key(2, &sys)), 2);
        assert_eq!(r.combo.coeff(&key(0, &sys)), -1);
        // small mu: all pairings <= p
        let r = jantzen_sum(&sl2(2), 3, &sys).unwrap();
        assert!(r.combo.is_zero());
        assert!(jantzen_sum(&sl2(7), 6, &sys).is_err());
    }

    /// Rank-1 elementary-divisor oracle: the chi-resolution of
    /// sum_j nu_p(C(mu, j)) e^{mu - 2j}, the Gram entries on the
    /// divided-power basis of the rank-1 Weyl module.
    fn sl2_oracle(mu: i64, p: u64, sys: &RootSystem) -> ChiCombination<i64> {
        let r = mu as u64;
        let mut combo: ChiCombination<i64> = ChiCombination::zero();
        for (j, d) in rank1_cokernel_divisors(r) {
            let nu = d.nu_p(p);
            if nu == 0 {
                continue;
            }
            let w = Weight::from_ints(&[mu - j as i64, j as i64], false);
            if let Some((lam, det)) = chi_reduce(&w, sys) {
                combo.add_term(lam, det * nu);
            }
        }
        combo
    }

    #[test]
    fn jantzen_matches_sl2_oracle() {
        let sys = a1();
        for mu in 0..=40 {
            for p in [2u64, 3, 5, 7] {
                let got = jantzen_sum(&sl2(mu), p, &sys).unwrap();
                assert_eq!(got.combo, sl2_oracle(mu, p, &sys), "mu={mu} p={p}");
            }
        }
    }

    #[test]
    fn div_t_q_matches_rank1_divisors() {
        // module-level oracle: div_T(Q(mu)) keys resolve the binomial
        // divisor vector
        let sys = a1();
        for mu in 0..=30i64 {
            let t = div_t_q(&sl2(mu), &sys).unwrap();
            let r = mu as u64;
            let mut expect: ChiCombination<Divisor> = ChiCombination::zero();
            for (j, d) in rank1_cokernel_divisors(r) {
                let w = Weight::from_ints(&[mu - j as i64, j as i64], false);
                if let Some((lam, det)) = chi_reduce(&w, &sys) {
                    expect.add_term(lam, d.scaled(det));
                }
            }
            assert_eq!(t, expect, "mu={mu}");
        }
    }

    #[test]
    fn jantzen_quantum_a1() {
        let sys = a1();
        // l = 3, char 0, mu = 7: chi(3) - chi(1)
        let spec = QuantumSpec::new(3, 0).unwrap();
        let r = jantzen_sum_quantum(&sl2(7), &spec, &sys).unwrap();
        assert_eq!(r.combo.coeff(&key(3, &sys)), 1);
        assert_eq!(r.combo.coeff(&key(1, &sys)), -1);
        assert_eq!(r.combo.len(), 2);
        // small mu
        assert!(jantzen_sum_quantum(&sl2(1), &spec, &sys).unwrap().combo.is_zero());
        // l = 3, char 2, mu = 13: 4chi(9) + chi(3) - chi(7) - 2chi(1)
        let spec2 = QuantumSpec::new(3, 2).unwrap();
        let r = jantzen_sum_quantum(&sl2(13), &spec2, &sys).unwrap();
        assert_eq!(r.combo.coeff(&key(9, &sys)), 4);
        assert_eq!(r.combo.coeff(&key(7, &sys)), -1);
        assert_eq!(r.combo.coeff(&key(3, &sys)), 1);
        assert_eq!(r.combo.coeff(&key(1, &sys)), -2);
        assert_eq!(r.combo.len(), 4);
    }

    #[test]
    fn quantum_matches_gaussian_oracle_a1() {
        // Gaussian elementary-divisor oracle, mirroring the classical one
        let sys = a1();
        for (l, c) in [(3u64, 0u64), (5, 0), (3, 2), (5, 3)] {
            let spec = QuantumSpec::new(l, c).unwrap();
            for mu in 0..=30i64 {
                let r = mu as u64;
                let mut expect: ChiCombination<i64> = ChiCombination::zero();
                for j in 1..r.max(1) {
                    let nu = crate::arith::divq_gaussian_binomial(r, j, 1, &spec).unwrap();
                    if nu == 0 {
                        continue;
                    }
                    let w = Weight::from_ints(&[mu - j as i64, j as i64], false);
                    if let Some((lam, det)) = chi_reduce(&w, &sys) {
                        expect.add_term(lam, det * nu);
                    }
                }
                let got = jantzen_sum_quantum(&sl2(mu), &spec, &sys).unwrap();
                assert_eq!(got.combo, expect, "l={l} char={c} mu={mu}");
            }
        }
    }

    #[test]
    fn tilting_t4_example() {
        let sys = a1();
        let q = TiltingCharacter::new([(sl2(4), 1), (sl2(0), 1)], &sys).unwrap();
        assert_eq!(tilting_sum_checked(&sl2(0), &q, 3, &sys).unwrap(), 1);
        // lambda maximal in Q
        assert_eq!(tilting_sum_checked(&sl2(4), &q, 3, &sys).unwrap(), 0);
        // single factor at its own highest weight
        let single = TiltingCharacter::new([(sl2(6), 1)], &sys).unwrap();
        assert_eq!(tilting_sum_checked(&sl2(6), &single, 2, &sys).unwrap(), 0);
    }

    #[test]
    fn tilting_quantum_t4_example() {
        let sys = a1();
        let q = TiltingCharacter::new([(sl2(4), 1), (sl2(0), 1)], &sys).unwrap();
        let spec = QuantumSpec::new(3, 0).unwrap();
        assert_eq!(tilting_sum_quantum(&sl2(0), &q, &spec, &sys).unwrap(), 1);
        assert_eq!(tilting_sum_quantum(&sl2(4), &q, &spec, &sys).unwrap(), 0);
        // char p with l dividing no relevant gap
        let spec5 = QuantumSpec::new(5, 7).unwrap();
        let q2 = TiltingCharacter::new([(sl2(2), 1), (sl2(0), 1)], &sys).unwrap();
        assert_eq!(tilting_sum_quantum(&sl2(0), &q2, &spec5, &sys).unwrap(), 0);
    }

    #[test]
    fn tilting_character_validation() {
        let sys = a1();
        assert!(TiltingCharacter::new([(sl2(4), 0)], &sys).is_err());
        assert!(TiltingCharacter::new([(Weight::from_ints(&[0, 4], false), 1)], &sys).is_err());
    }

    #[test]
    fn jantzen_support_and_positivity_small() {
        // small sweep: support strictly below mu, expansion >= 0
        let b2 = rs(Family::B, 2);
        for a in 0..=4i64 {
            for b in 0..=a {
                let mu = Weight::from_ints(&[a, b], false);
                for p in [2u64, 3] {
                    let r = jantzen_sum(&mu, p, &b2).unwrap();
                    for (lam, _) in r.combo.iter() {
                        assert!(lam.dominance_leq(&mu, &b2) && *lam != mu, "{lam} vs {mu}");
                    }
                    let ws = expand_combination(&r.combo, &b2, CAP).unwrap();
                    for (w, m) in ws.iter() {
                        assert!(m >= 0, "negative weight mult at {w} for mu={mu} p={p}");
                    }
                }
            }
        }
    }
}
