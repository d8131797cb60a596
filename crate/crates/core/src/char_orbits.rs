//! Characters of `T = Z/e` as residues `c` (the character `t ↦ ζ^{ct}`),
//! their Σ-orbits under `c ↦ qc`, the admissible values `λ`, and the orbits
//! of the absolute Frobenius `(χ̄, λ) ↦ (χ̄^p, λ^p)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, lcm, mult_order, prime_to_p_part};
use crate::twisted_group::TwistedGroup;

/// Largest `e` for which characters are enumerated.
pub const MAX_CHARACTERS: u64 = 100_000;
/// Largest group order for full pair enumeration.
pub const MAX_PAIR_GROUP_ORDER: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharOrbit {
    pub rep_c: u64,
    pub members: Vec<u64>,
    pub d: u64,
    pub r: u64,
    pub s: u64,
}

/// `λ = ζ_{order}^{log}` for the fixed root of unity `ζ_{order}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lambda {
    pub order: u64,
    pub log: u64,
    pub w: u64,
}

impl Lambda {
    pub fn one() -> Self {
        Lambda {
            order: 1,
            log: 0,
            w: 1,
        }
    }

    /// `λ^k`, reduced to its exact order.
    pub fn pow(&self, k: u64, p: u64) -> Self {
        let n = self.order;
        let x = (self.log as u128 * k as u128 % n as u128) as u64;
        let g = gcd(x, n);
        let order = n / g;
        Lambda {
            order,
            log: x / g % order,
            w: mult_order(p, order).expect("order prime to p"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairClass {
    pub orbit: CharOrbit,
    pub lambda: Lambda,
}

impl PairClass {
    pub fn key(&self) -> (u64, u64, u64) {
        (self.orbit.rep_c, self.lambda.order, self.lambda.log)
    }

    /// Degree of `ρ_{χ̄,λ}` over `l̃`.
    pub fn degree_tilde(&self) -> u64 {
        self.orbit.s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiOrbit {
    pub canonical: PairClass,
    /// Members in Frobenius order starting from `canonical`.
    pub members: Vec<PairClass>,
    pub size: u64,
    pub degree: u64,
    pub defdeg: u64,
}

impl PhiOrbit {
    pub fn s(&self) -> u64 {
        self.canonical.orbit.s
    }
    pub fn r(&self) -> u64 {
        self.canonical.orbit.r
    }
    pub fn w(&self) -> u64 {
        self.canonical.lambda.w
    }
    pub fn d(&self) -> u64 {
        self.canonical.orbit.d
    }
}

/// `(d, r, s)` for the character `c`.
pub fn char_invariants(c: u64, g: &TwistedGroup) -> (u64, u64, u64) {
    let e = g.e();
    let d = e / gcd(e, c % e);
    let r = mult_order(g.p(), d).expect("p prime to e");
    let s = mult_order(g.q_mod_e() % d, d).expect("q prime to e");
    (d, r, s)
}

/// Orbit representative table: `rep[c]` is the smallest residue in the
/// Σ-orbit of `c`.
struct OrbitIndex {
    rep: Vec<u64>,
}

impl OrbitIndex {
    fn new(g: &TwistedGroup) -> Result<Self> {
        let e = g.e();
        if e > MAX_CHARACTERS {
            return Err(Error::TooLarge(format!("{e} characters")));
        }
        let q = g.q_mod_e();
        let mut rep = vec![u64::MAX; e as usize];
        for c in 0..e {
            if rep[c as usize] != u64::MAX {
                continue;
            }
            let mut x = c;
            loop {
                rep[x as usize] = c;
                x = x * q % e;
                if x == c {
                    break;
                }
            }
        }
        Ok(OrbitIndex { rep })
    }

    fn orbit(&self, c: u64, g: &TwistedGroup) -> CharOrbit {
        let e = g.e();
        let rep_c = self.rep[(c % e) as usize];
        let (d, r, s) = char_invariants(rep_c, g);
        let mut members = Vec::with_capacity(s as usize);
        let mut x = rep_c;
        for _ in 0..s {
            members.push(x);
            x = x * g.q_mod_e() % e;
        }
        debug_assert_eq!(x, rep_c);
        members.sort_unstable();
        CharOrbit {
            rep_c,
            members,
            d,
            r,
            s,
        }
    }

    fn frobenius(&self, orbit: &CharOrbit, g: &TwistedGroup) -> CharOrbit {
        self.orbit(orbit.rep_c * (g.p() % g.e()) % g.e(), g)
    }
}

/// All Σ-orbits, sorted by representative.
pub fn enumerate_character_orbits(g: &TwistedGroup) -> Result<Vec<CharOrbit>> {
    let idx = OrbitIndex::new(g)?;
    Ok((0..g.e())
        .filter(|&c| idx.rep[c as usize] == c)
        .map(|c| idx.orbit(c, g))
        .collect())
}

/// The Σ-orbit of the character `c`.
pub fn character_orbit(g: &TwistedGroup, c: u64) -> CharOrbit {
    let e = g.e();
    let mut members = vec![c % e];
    let mut x = c % e * g.q_mod_e() % e;
    while x != members[0] {
        members.push(x);
        x = x * g.q_mod_e() % e;
    }
    members.sort_unstable();
    let rep_c = members[0];
    let (d, r, s) = char_invariants(rep_c, g);
    debug_assert_eq!(s as usize, members.len());
    CharOrbit {
        rep_c,
        members,
        d,
        r,
        s,
    }
}

/// Bound on the order of `λ` for an orbit: the prime-to-`p` part of `f/s`.
pub fn lambda_bound(g: &TwistedGroup, orbit: &CharOrbit) -> u64 {
    prime_to_p_part(g.f() / orbit.s, g.p())
}

fn lambdas_of_order_dividing(n: u64, p: u64) -> Vec<Lambda> {
    let mut out = Vec::new();
    for order in divisors(n) {
        let w = mult_order(p, order).expect("order prime to p");
        for log in 0..order {
            if gcd(log, order) == 1 || order == 1 {
                out.push(Lambda { order, log, w });
            }
        }
    }
    out
}

/// Every `λ` with `λ^{f/s} = 1`, each once, sorted by `(order, log)`.
pub fn enumerate_lambda(g: &TwistedGroup, orbit: &CharOrbit) -> Vec<Lambda> {
    lambdas_of_order_dividing(lambda_bound(g, orbit), g.p())
}

fn check_pair_bound(g: &TwistedGroup) -> Result<()> {
    if g.order() > MAX_PAIR_GROUP_ORDER {
        Err(Error::GroupTooLarge(g.order()))
    } else {
        Ok(())
    }
}

/// The parameters `(χ̄, λ)` of all absolutely irreducible representations.
pub fn enumerate_pairs(g: &TwistedGroup) -> Result<Vec<PairClass>> {
    check_pair_bound(g)?;
    let mut out = Vec::new();
    for orbit in enumerate_character_orbits(g)? {
        for lambda in enumerate_lambda(g, &orbit) {
            out.push(PairClass {
                orbit: orbit.clone(),
                lambda,
            });
        }
    }
    Ok(out)
}

fn frobenius_orbit(idx: &OrbitIndex, g: &TwistedGroup, start: &PairClass) -> PhiOrbit {
    let mut members = vec![start.clone()];
    loop {
        let last = members.last().expect("nonempty");
        let next = PairClass {
            orbit: idx.frobenius(&last.orbit, g),
            lambda: last.lambda.pow(g.p(), g.p()),
        };
        if next == *start {
            break;
        }
        members.push(next);
    }
    let canonical_pos = members
        .iter()
        .enumerate()
        .min_by_key(|(_, m)| m.key())
        .map(|(k, _)| k)
        .expect("nonempty");
    members.rotate_left(canonical_pos);
    let canonical = members[0].clone();
    let (r, s, w) = (canonical.orbit.r, canonical.orbit.s, canonical.lambda.w);
    debug_assert_eq!(r % s, 0);
    let size = members.len() as u64;
    let formula = lcm(r / s, w);
    debug_assert_eq!(size, formula, "Frobenius period differs from lcm(r/s, w)");
    PhiOrbit {
        canonical,
        members,
        size,
        degree: lcm(r, s * w),
        defdeg: formula,
    }
}

/// The Frobenius orbit through a single pair.
pub fn phi_orbit_of(g: &TwistedGroup, pair: &PairClass) -> Result<PhiOrbit> {
    if !lambda_bound(g, &pair.orbit).is_multiple_of(pair.lambda.order) {
        return Err(Error::IncompatibleParameters(format!(
            "lambda of order {} for orbit of size {}",
            pair.lambda.order, pair.orbit.s
        )));
    }
    let idx = OrbitIndex::new(g)?;
    Ok(frobenius_orbit(&idx, g, pair))
}

/// Partition of all pairs into Frobenius orbits, sorted by
/// `(degree, d, rep_c, λ order, λ log)` of the canonical member.
pub fn phi_orbits(g: &TwistedGroup) -> Result<Vec<PhiOrbit>> {
    let idx = OrbitIndex::new(g)?;
    let pairs = enumerate_pairs(g)?;
    collect_orbits(&idx, g, pairs)
}

fn collect_orbits(idx: &OrbitIndex, g: &TwistedGroup, pairs: Vec<PairClass>) -> Result<Vec<PhiOrbit>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for pair in pairs {
        if seen.contains(&pair.key()) {
            continue;
        }
        let orb = frobenius_orbit(idx, g, &pair);
        if orb.size != orb.defdeg || !orb.r().is_multiple_of(orb.s()) {
            return Err(Error::IncompatibleParameters(format!(
                "orbit of {:?} has period {} but lcm(r/s, w) = {}",
                pair.key(),
                orb.size,
                orb.defdeg
            )));
        }
        for m in &orb.members {
            seen.insert(m.key());
        }
        out.push(orb);
    }
    sort_orbits(&mut out);
    Ok(out)
}

pub fn sort_orbits(orbits: &mut [PhiOrbit]) {
    orbits.sort_by_key(|o| (o.degree, o.d(), o.canonical.key()));
}

/// The Frobenius orbits whose representations over `F_p` have degree
/// exactly `n`, without enumerating the others.
pub fn phi_orbits_of_degree(g: &TwistedGroup, n: u64) -> Result<Vec<PhiOrbit>> {
    let idx = OrbitIndex::new(g)?;
    let p = g.p();
    let mut pairs = Vec::new();
    for orbit in enumerate_character_orbits(g)? {
        if !n.is_multiple_of(orbit.r) || !n.is_multiple_of(orbit.s) {
            continue;
        }
        // s·w | n forces λ^{p^{n/s} − 1} = 1
        let pk = crate::numtheory::checked_pow(p, (n / orbit.s) as u32)
            .ok_or_else(|| Error::TooLarge(format!("{p}^{}", n / orbit.s)))?;
        let bound = gcd(lambda_bound(g, &orbit), pk - 1);
        for lambda in lambdas_of_order_dividing(bound, p) {
            if lcm(orbit.r, orbit.s * lambda.w) == n {
                pairs.push(PairClass {
                    orbit: orbit.clone(),
                    lambda,
                });
            }
        }
    }
    collect_orbits(&idx, g, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: u64, a: u32, e: u64, f: u64) -> TwistedGroup {
        TwistedGroup::new(p, a, e, f).unwrap()
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(char_invariants(0, &g(2, 1, 3, 2)), (1, 1, 1));
        assert_eq!(char_invariants(1, &g(2, 1, 3, 2)), (3, 2, 2));
        assert_eq!(char_invariants(1, &g(2, 2, 3, 1)), (3, 2, 1));
    }

    #[test]
    fn orbit_examples() {
        let members = |gr: &TwistedGroup| -> Vec<Vec<u64>> {
            enumerate_character_orbits(gr)
                .unwrap()
                .into_iter()
                .map(|o| o.members)
                .collect()
        };
        assert_eq!(members(&g(2, 1, 3, 2)), vec![vec![0], vec![1, 2]]);
        assert_eq!(members(&g(2, 2, 3, 1)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(members(&g(2, 1, 1, 5)), vec![vec![0]]);
    }

    #[test]
    fn lambda_examples() {
        let z3 = g(2, 1, 1, 3);
        let o = &enumerate_character_orbits(&z3).unwrap()[0];
        let ls = enumerate_lambda(&z3, o);
        assert_eq!(ls.len(), 3);
        assert_eq!(ls[0], Lambda::one());
        assert!(ls[1..].iter().all(|l| l.order == 3 && l.w == 2));
        let s3 = g(2, 1, 3, 2);
        for o in enumerate_character_orbits(&s3).unwrap() {
            assert_eq!(enumerate_lambda(&s3, &o), vec![Lambda::one()]);
        }
    }

    #[test]
    fn pair_examples() {
        let s3 = enumerate_pairs(&g(2, 1, 3, 2)).unwrap();
        assert_eq!(s3.len(), 2);
        assert_eq!(s3[0].orbit.members, vec![0]);
        assert_eq!(s3[1].orbit.members, vec![1, 2]);
        assert_eq!(enumerate_pairs(&g(2, 1, 1, 3)).unwrap().len(), 3);
        let big = enumerate_pairs(&g(3, 1, 8, 2)).unwrap();
        assert_eq!(big.len(), 7);
        assert_eq!(big.iter().map(|p| p.orbit.s * p.orbit.s).sum::<u64>(), 16);
    }

    #[test]
    fn phi_orbit_examples() {
        let z3 = phi_orbits(&g(2, 1, 1, 3)).unwrap();
        assert_eq!(z3.iter().map(|o| o.degree).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(z3[1].members.len(), 2);
        let s3 = phi_orbits(&g(2, 1, 3, 2)).unwrap();
        assert_eq!(s3.iter().map(|o| (o.size, o.degree)).collect::<Vec<_>>(), vec![(1, 1), (1, 2)]);
        let a3 = phi_orbits(&g(2, 2, 3, 1)).unwrap();
        assert_eq!(a3.iter().map(|o| o.degree).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(a3[1].members.len(), 2);
    }

    #[test]
    fn filtered_orbits_agree_with_full_enumeration() {
        for (p, a, e, f) in [(2, 1, 3, 6), (2, 2, 3, 3), (3, 1, 8, 4), (2, 1, 7, 6)] {
            let gr = g(p, a, e, f);
            let all = phi_orbits(&gr).unwrap();
            for n in 1..=12 {
                let want: Vec<_> = all.iter().filter(|o| o.degree == n).cloned().collect();
                assert_eq!(phi_orbits_of_degree(&gr, n).unwrap(), want, "{p} {a} {e} {f} {n}");
            }
        }
    }
}
