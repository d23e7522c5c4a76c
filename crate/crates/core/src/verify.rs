//! Randomized differential testing of the fast paths against independent
//! oracles, plus the oracles themselves: exact Laurent-polynomial division
//! for characters and cyclotomic-polynomial root multiplicities for the
//! Gaussian divisors.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{
    divq_gaussian_int, is_prime, Divisor, QuantumSpec,
};
use crate::chars::{ChiCombination, WeightMultiset};

use crate::error::Error;
use crate::rootsets::{s_set_bruteforce, s_set_fast, u_set, uv_bijection, v_set, vu_bijection};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::sumformulas::{
    euler_delta, euler_q, jantzen_sum, tilting_sum, DeltaRoute, TiltingCharacter, TiltingRoute,
};
use crate::weylact::{dominant_reduce, enumerate_weyl};

const CAP: u128 = 1 << 24;

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweep parameters shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct SweepParams {
    pub seed: u64,
    pub trials: usize,
    pub max_rank: usize,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            seed: 1,
            trials: 50,
            max_rank: 4,
        }
    }
}

fn families(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for m in 2..=(max_rank + 1).min(5) {
        out.push((Family::A, m));
    }
    for m in 2..=max_rank.min(4) {
        out.push((Family::B, m));
        out.push((Family::C, m));
    }
    for m in 3..=max_rank.min(4) {
        out.push((Family::D, m));
    }
    out
}

/// Random dominant unshifted lattice weight with shifted coordinates
/// bounded by `bound`.
pub fn random_dominant(rng: &mut impl Rng, rs: &RootSystem, bound: i64) -> Weight {
    loop {
        let spin = matches!(rs.family, Family::B | Family::D) && rng.gen_bool(0.3);
        let mut c2: Vec<i64> = (0..rs.m)
            .map(|_| rng.gen_range(0..=bound) * 2 + if spin { 1 } else { 0 })
            .collect();
        c2.sort_unstable();
        c2.reverse();
        if rs.family == Family::D && rng.gen_bool(0.5) {
            let last = c2.last_mut().unwrap();
            *last = -*last;
        }
        let w = Weight::from_doubled(c2, true);
        if w.is_regular_dominant_shifted(rs) {
            let u = w.unshift(rs);
            if u.in_lattice(rs) && u.is_dominant_unshifted(rs) {
                return u.canonical(rs);
            }
        }
    }
}

// ---------------------------------------------------------------------
// Laurent-polynomial character oracle
// ---------------------------------------------------------------------

type Laurent = BTreeMap<Vec<i64>, i64>; // doubled exponent vectors

fn laurent_add(p: &mut Laurent, exp: Vec<i64>, c: i64) {
    use std::collections::btree_map::Entry;
    if c == 0 {
        return;
    }
    match p.entry(exp) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

fn alternating_sum(x: &Weight, rs: &RootSystem, cap: u128) -> Result<Laurent, Error> {
    let mut p = Laurent::new();
    for w in enumerate_weyl(rs, cap)? {
        laurent_add(&mut p, w.apply(x).c2, w.det());
    }
    Ok(p)
}

/// Exact division of Laurent polynomials (leading-term elimination in the
/// lexicographic order); panics if the division is not exact.
fn laurent_div(mut num: Laurent, den: &Laurent) -> Laurent {
    let (lead_e, &lead_c) = den.iter().next_back().expect("nonzero denominator");
    let lead_e = lead_e.clone();
    let mut quot = Laurent::new();
    while let Some((e, &c)) = num.iter().next_back() {
        let qe: Vec<i64> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
        assert!(c % lead_c == 0, "non-exact character division");
        let qc = c / lead_c;
        laurent_add(&mut quot, qe.clone(), qc);
        for (de, &dc) in den {
            let ne: Vec<i64> = qe.iter().zip(de).map(|(a, b)| a + b).collect();
            laurent_add(&mut num, ne, -qc * dc);
        }
    }
    quot
}

/// Weyl character formula by exact alternating-sum division; the returned
/// multiset keys are canonical. Small ranks only (full group enumeration).
pub fn character_oracle(
    lambda: &Weight,
    rs: &RootSystem,
    cap: u128,
) -> Result<WeightMultiset, Error> {
    let num = alternating_sum(&lambda.canonical(rs).shift(rs), rs, cap)?;
    let den = alternating_sum(&rs.rho().shift_zero(), rs, cap)?;
    let quot = laurent_div(num, &den);
    let mut out = WeightMultiset::default();
    for (e, c) in quot {
        out.add(Weight::from_doubled(e, false).canonical(rs), c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Cyclotomic-polynomial oracle for the Gaussian multiplicities
// ---------------------------------------------------------------------

/// Coefficients of the l-th cyclotomic polynomial over Z, ascending.
pub fn cyclotomic(l: u64) -> Vec<i64> {
    // Phi_l = (v^l - 1) / prod_{d | l, d < l} Phi_d
    let mut num = vec![0i64; l as usize + 1];
    num[0] = -1;
    num[l as usize] = 1;
    for d in 1..l {
        if l.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic(d));
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut num = num.to_vec();
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1);
    let qn = num.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = num[i + dn];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            num[i + j] -= c * d;
        }
    }
    assert!(num.iter().all(|&c| c == 0), "non-exact division");
    quot
}

/// Multiplicity of a primitive l-th root of unity as a root of
/// [m] = 1 + v^2 + ... + v^{2(m-1)}, over a field of the given
/// characteristic (0 or a prime not dividing l). This is the polynomial
///-division oracle for `divq_gaussian_int`.
pub fn root_multiplicity_oracle(m: u64, spec: &QuantumSpec) -> u64 {
    let l = spec.l();
    let p = spec.char_k();
    // [m] as a polynomial in v, ascending coefficients
    let mut poly = vec![0i64; 2 * m as usize - 1];
    for i in 0..m as usize {
        poly[2 * i] = 1;
    }
    if p == 0 {
        let phi = cyclotomic(l);
        let mut count = 0;
        loop {
            // test divisibility by running the exact division fallibly
            if poly.len() < phi.len() {
                break;
            }
            let mut num = poly.clone();
            let dn = phi.len() - 1;
            let qn = num.len() - 1 - dn;
            let mut quot = vec![0i64; qn + 1];
            for i in (0..=qn).rev() {
                let c = num[i + dn];
                quot[i] = c;
                for (j, &d) in phi.iter().enumerate() {
                    num[i + j] -= c * d;
                }
            }
            if num.iter().any(|&c| c != 0) {
                break;
            }
            count += 1;
            poly = quot;
            while poly.len() > 1 && *poly.last().unwrap() == 0 {
                poly.pop();
            }
        }
        count
    } else {
        // synthetic division by (v - q) over F_p[v]/(Phi_l), q = class of v.
        // The quotient ring is a product of fields in which q is a primitive
        // l-th root; the multiplicity is the same in every component.
        let phi: Vec<i64> = cyclotomic(l).iter().map(|&c| c.rem_euclid(p as i64)).collect();
        let k = phi.len() - 1;
        let red = |x: i64| x.rem_euclid(p as i64);
        // multiply an element (dense, length k) by q = v, mod Phi_l
        let mul_q = |a: &[i64]| -> Vec<i64> {
            let mut out = vec![0i64; k + 1];
            for (i, &c) in a.iter().enumerate() {
                out[i + 1] = c;
            }
            let top = out[k];
            if top != 0 {
                for i in 0..k {
                    out[i] = red(out[i] - top * phi[i]);
                }
            }
            out.truncate(k);
            out
        };
        let mut coeffs: Vec<Vec<i64>> = (0..2 * m as usize - 1)
            .map(|i| {
                let mut e = vec![0i64; k];
                e[0] = if i % 2 == 0 { 1 } else { 0 };
                e
            })
            .collect();
        let mut count = 0;
        loop {
            if coeffs.is_empty() {
                break;
            }
            // synthetic division by (v - q)
            let n = coeffs.len();
            let mut b = vec![vec![0i64; k]; n];
            b[n - 1] = coeffs[n - 1].clone();
            for i in (0..n - 1).rev() {
                let t = mul_q(&b[i + 1]);
                b[i] = coeffs[i]
                    .iter()
                    .zip(&t)
                    .map(|(&x, &y)| red(x + y))
                    .collect();
            }
            let rem = &b[0];
            if rem.iter().any(|&c| c != 0) {
                break;
            }
            count += 1;
            coeffs = b[1..].to_vec();
        }
        count
    }
}

// ---------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------

pub fn suite_names() -> &'static [&'static str] {
    &["arith", "reduce", "rootsets", "euler", "sums", "quantum", "all"]
}

pub fn run_suite(name: &str, params: SweepParams) -> Result<Vec<Report>, Error> {
    match name {
        "arith" => Ok(vec![suite_arith(params)]),
        "reduce" => Ok(vec![suite_reduce(params)]),
        "rootsets" => Ok(vec![suite_rootsets(params)?]),
        "euler" => Ok(vec![suite_euler(params)?]),
        "sums" => Ok(vec![suite_sums(params)?]),
        "quantum" => Ok(vec![suite_quantum(params)?]),
        "all" => {
            let mut out = vec![suite_arith(params), suite_reduce(params)];
            out.push(suite_rootsets(params)?);
            out.push(suite_euler(params)?);
            out.push(suite_sums(params)?);
            out.push(suite_quantum(params)?);
            Ok(out)
        }
        other => Err(Error::InvalidSpec(format!("unknown suite {other:?}"))),
    }
}

pub fn suite_arith(_params: SweepParams) -> Report {
    let mut failures = Vec::new();
    let mut instances = 0;
    // div C(r,m) - div C(r,r+1-m) = div(r+1-m) - div(m)
    for r in 1..=100u64 {
        for m in 1..=r {
            instances += 1;
            let lhs = Divisor::of_binomial(r, m) - Divisor::of_binomial(r, r + 1 - m);
            let rhs = Divisor::of_int((r + 1 - m) as i64).unwrap()
                - Divisor::of_int(m as i64).unwrap();
            if lhs != rhs {
                failures.push(format!("binomial identity fails at r={r} m={m}"));
            }
        }
    }
    Report {
        suite: "arith".into(),
        instances,
        failures,
    }
}

pub fn suite_reduce(params: SweepParams) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut failures = Vec::new();
    let mut instances = 0;
    for (fam, m) in families(params.max_rank.min(3)) {
        let rs = RootSystem::new(fam, m).unwrap();
        let group = match enumerate_weyl(&rs, CAP) {
            Ok(g) => g,
            Err(_) => continue,
        };
        for _ in 0..params.trials {
            instances += 1;
            let c2: Vec<i64> = (0..m).map(|_| rng.gen_range(-12..=12i64) * 2).collect();
            let x = Weight::from_doubled(c2, true);
            let red = dominant_reduce(&x, &rs);
            if red.witness.apply(&x) != red.dominant {
                failures.push(format!("{fam:?}{m}: witness mismatch at {x}"));
                continue;
            }
            let stab = group.iter().filter(|w| w.apply(&x) == x).count();
            let singular = stab > 1;
            if singular != (red.det == 0) {
                failures.push(format!("{fam:?}{m}: singularity flag wrong at {x}"));
            }
            if !singular && red.det != red.witness.det() {
                failures.push(format!("{fam:?}{m}: det mismatch at {x}"));
            }
        }
    }
    Report {
        suite: "reduce".into(),
        instances,
        failures,
    }
}

pub fn suite_rootsets(params: SweepParams) -> Result<Report, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut failures = Vec::new();
    let mut instances = 0;
    for (fam, m) in families(params.max_rank) {
        let rs = RootSystem::new(fam, m).unwrap();
        for _ in 0..params.trials {
            let lam = random_dominant(&mut rng, &rs, 12);
            let mu = random_dominant(&mut rng, &rs, 12);
            if lam == mu {
                continue;
            }
            instances += 1;
            let fast = s_set_fast(&lam, &mu, &rs)?;
            let brute = s_set_bruteforce(&lam, &mu, &rs, CAP)?;
            if fast != brute {
                failures.push(format!(
                    "{fam:?}{m}: fast != brute at lambda={lam} mu={mu}"
                ));
                continue;
            }
            // cardinality bounds on |V| = total V-solutions
            let v = v_set(&lam, &mu, &rs)?;
            let allowed: &[usize] = match fam {
                Family::A => &[0, 2],
                Family::D => &[0, 2, 4],
                Family::B | Family::C => {
                    if m == 2 {
                        &[0, 2, 4]
                    } else {
                        &[0, 2, 4, 6]
                    }
                }
            };
            if !allowed.contains(&v.len()) {
                failures.push(format!(
                    "{fam:?}{m}: |V| = {} out of bounds at lambda={lam} mu={mu}",
                    v.len()
                ));
            }
            // two-element pairing per beta: (x, m) and (s_beta x, bound - m)
            let mu_rho = mu.canonical(&rs).shift(&rs);
            let mut per_beta: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
            for e in &v {
                per_beta.entry(e.gamma.coords.clone()).or_default().push(e.n);
            }
            for (beta, ns) in per_beta {
                let root = rs
                    .positive_roots()
                    .iter()
                    .find(|r| r.coords == beta)
                    .unwrap();
                let bound = mu_rho.pairing(root);
                if ns.len() != 2 || ns[0] + ns[1] != bound {
                    failures.push(format!(
                        "{fam:?}{m}: pairing violated at lambda={lam} mu={mu} ns={ns:?}"
                    ));
                }
            }
            // bijection U -> V
            let u = u_set(&lam, &mu, &rs)?;
            if u.len() != v.len() {
                failures.push(format!("{fam:?}{m}: |U| != |V| at lambda={lam} mu={mu}"));
            }
            let mut mapped: Vec<(Vec<i64>, i64)> = u
                .iter()
                .map(uv_bijection)
                .map(|e| (e.gamma.coords.clone(), e.n))
                .collect();
            let mut vv: Vec<(Vec<i64>, i64)> =
                v.iter().map(|e| (e.gamma.coords.clone(), e.n)).collect();
            mapped.sort();
            vv.sort();
            if mapped != vv {
                failures.push(format!(
                    "{fam:?}{m}: uv_bijection image mismatch at lambda={lam} mu={mu}"
                ));
            }
            for e in &u {
                let f = uv_bijection(e);
                if vu_bijection(&f) != *e || f.w != e.w.inverse() || f.n.abs() != e.n.abs() {
                    failures.push(format!(
                        "{fam:?}{m}: uv_bijection structure broken at lambda={lam} mu={mu}"
                    ));
                }
            }
        }
    }
    Ok(Report {
        suite: "rootsets".into(),
        instances,
        failures,
    })
}

pub fn suite_euler(params: SweepParams) -> Result<Report, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0xe0e0);
    let mut failures = Vec::new();
    let mut instances = 0;
    for (fam, m) in families(params.max_rank) {
        let rs = RootSystem::new(fam, m).unwrap();
        for _ in 0..params.trials {
            let lam = random_dominant(&mut rng, &rs, 10);
            let mu = random_dominant(&mut rng, &rs, 10);
            instances += 1;
            let dv = euler_delta(&lam, &mu, &rs, DeltaRoute::V)?;
            let du = euler_delta(&lam, &mu, &rs, DeltaRoute::U)?;
            if dv != du {
                failures.push(format!(
                    "{fam:?}{m}: euler routes disagree at lambda={lam} mu={mu}"
                ));
            }
            if lam != mu {
                let q = euler_q(&lam, &mu, &rs)?;
                let mut sum = q.clone();
                sum += &dv;
                if !sum.is_zero() {
                    failures.push(format!(
                        "{fam:?}{m}: euler_q + euler_delta != 0 at lambda={lam} mu={mu}"
                    ));
                }
            } else if !dv.is_zero() {
                failures.push(format!("{fam:?}{m}: euler_delta(lam,lam) != 0 at {lam}"));
            }
        }
    }
    Ok(Report {
        suite: "euler".into(),
        instances,
        failures,
    })
}

pub fn suite_sums(params: SweepParams) -> Result<Report, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0x50b5);
    let mut failures = Vec::new();
    let mut instances = 0;
    // rank-1 module-level oracle
    let a1 = RootSystem::new(Family::A, 2).unwrap();
    for mu in 0..=60i64 {
        let muw = Weight::from_ints(&[mu, 0], false);
        for p in [2u64, 3, 5, 7] {
            instances += 1;
            let got = jantzen_sum(&muw, p, &a1)?;
            let mut expect: ChiCombination<i64> = ChiCombination::zero();
            for (j, d) in crate::sumformulas::rank1_cokernel_divisors(mu as u64) {
                let nu = d.nu_p(p);
                if nu == 0 {
                    continue;
                }
                let w = Weight::from_ints(&[mu - j as i64, j as i64], false);
                if let Some((lamk, det)) = crate::chars::chi_reduce(&w, &a1) {
                    expect.add_term(lamk, det * nu);
                }
            }
            if got.combo != expect {
                failures.push(format!("rank-1 oracle mismatch at mu={mu} p={p}"));
            }
        }
    }
    // tilting route agreement on random instances
    for (fam, m) in [(Family::A, 2), (Family::A, 3), (Family::B, 2)] {
        if m > params.max_rank + 1 {
            continue;
        }
        let rs = RootSystem::new(fam, m).unwrap();
        for _ in 0..params.trials {
            instances += 1;
            let lam = random_dominant(&mut rng, &rs, 8);
            let nfac = rng.gen_range(1..=4);
            let factors: Vec<(Weight, i64)> = (0..nfac)
                .map(|_| (random_dominant(&mut rng, &rs, 8), rng.gen_range(1..=2)))
                .collect();
            let q = TiltingCharacter::new(factors, &rs)?;
            for p in [2u64, 3] {
                let direct = tilting_sum(&lam, &q, p, &rs, TiltingRoute::Direct)?;
                let euler = tilting_sum(&lam, &q, p, &rs, TiltingRoute::Euler)?;
                if direct != euler {
                    failures.push(format!(
                        "{fam:?}{m}: tilting routes disagree at lambda={lam} p={p}"
                    ));
                }
            }
        }
    }
    Ok(Report {
        suite: "sums".into(),
        instances,
        failures,
    })
}

pub fn suite_quantum(params: SweepParams) -> Result<Report, Error> {
    let mut failures = Vec::new();
    let mut instances = 0;
    for l in [3u64, 5, 7, 9, 15] {
        for p in [0u64, 3, 5, 7] {
            if p != 0 && (!is_prime(p) || l % p == 0) {
                continue;
            }
            let spec = QuantumSpec::new(l, p).unwrap();
            let bound = if params.trials >= 50 { 60 } else { 30 };
            for m in 1..=bound {
                instances += 1;
                let got = divq_gaussian_int(m, &spec);
                let oracle = root_multiplicity_oracle(m, &spec);
                if got != oracle {
                    failures.push(format!(
                        "divq mismatch at m={m} l={l} char={p}: {got} vs {oracle}"
                    ));
                }
            }
        }
    }
    Ok(Report {
        suite: "quantum".into(),
        instances,
        failures,
    })
}
