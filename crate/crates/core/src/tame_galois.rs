//! Irreducible mod-`p` representations of the tame Galois group of a local
//! field with residue field `F_q`, through the finite quotients
//! `G_n = T_n ⋊_q Σ_n` with `|T_n| = e_n = p^n − 1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::char_orbits::{character_orbit, phi_orbit_of, phi_orbits, phi_orbits_of_degree, PairClass, PhiOrbit};
use crate::error::{Error, Result};
use crate::modcheck::are_isomorphic;
use crate::numtheory::{is_prime, mult_order, pow_mod};
use crate::rep::MatrixRep;
use crate::rep_builder::build_pi;
use crate::twisted_group::TwistedGroup;

/// Largest `p^n` for which a level is built.
pub const MAX_LEVEL_SIZE: u64 = 1 << 20;
/// Largest degree accepted by the classification.
pub const MAX_GALOIS_DEGREE: u64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PFieldParams {
    pub p: u64,
    pub a: u32,
}

impl PFieldParams {
    pub fn new(p: u64, a: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if a == 0 {
            return Err(Error::IncompatibleParameters("a must be positive".into()));
        }
        Ok(PFieldParams { p, a })
    }

    pub fn q(&self) -> Option<u64> {
        self.p.checked_pow(self.a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelParams {
    pub n: u32,
    pub e_n: u64,
    pub s_n: u64,
    pub f_n: u64,
}

/// `e_n = p^n − 1`, `s_n = ord(q mod e_n)` and the least multiple `f_n` of
/// `s_n` with `e_n (q^{s_n} − 1) | q^{f_n} − 1`.
///
/// Writing `Q = q^{s_n}` and `f = k s_n`, `q^f − 1 = (Q − 1)(1 + Q + … +
/// Q^{k−1})`, so the condition is `e_n | 1 + Q + … + Q^{k−1}`, which is
/// scanned modulo `e_n`.
pub fn level_params(k: &PFieldParams, n: u32) -> Result<LevelParams> {
    if n == 0 {
        return Err(Error::IncompatibleParameters("level must be positive".into()));
    }
    let pn = k
        .p
        .checked_pow(n)
        .filter(|&x| x <= MAX_LEVEL_SIZE)
        .ok_or_else(|| Error::TooLarge(format!("{}^{n}", k.p)))?;
    let e = pn - 1;
    let qe = pow_mod(k.p, k.a as u64, e);
    let s = mult_order(qe, e).expect("q prime to e");
    let big_q = pow_mod(qe, s, e);
    let mut sum = 1 % e;
    let mut terms = 1u64;
    while sum != 0 {
        sum = (sum * big_q + 1) % e;
        terms += 1;
    }
    let f = s * terms;
    if !f.is_multiple_of(e) {
        return Err(Error::IncompatibleParameters(format!(
            "level {n}: e_n = {e} does not divide f_n = {f}"
        )));
    }
    Ok(LevelParams {
        n,
        e_n: e,
        s_n: s,
        f_n: f,
    })
}

pub fn galois_group_at_level(k: &PFieldParams, n: u32) -> Result<TwistedGroup> {
    let lp = level_params(k, n)?;
    TwistedGroup::new(k.p, k.a, lp.e_n, lp.f_n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisRepRecord {
    pub degree: u64,
    pub level: u32,
    pub unramified: bool,
    /// Ramification index of the fixed field of the kernel.
    pub e: u64,
    /// Order of `p` modulo `e`, for ramified records.
    pub label_r: Option<u64>,
    pub orbit: PhiOrbit,
    pub defdeg: u64,
}

impl GaloisRepRecord {
    fn sort_key(&self) -> (u64, u64, u64, (u64, u64, u64)) {
        (
            self.degree,
            self.e,
            self.label_r.unwrap_or(0),
            self.orbit.canonical.key(),
        )
    }
}

/// All irreducible representations of degree `≤ max_degree`, each found in
/// the level equal to its degree.
pub fn classify_galois_reps(k: &PFieldParams, max_degree: u64) -> Result<Vec<GaloisRepRecord>> {
    if max_degree > MAX_GALOIS_DEGREE {
        return Err(Error::TooLarge(format!("maximal degree {max_degree}")));
    }
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let g = galois_group_at_level(k, d as u32)?;
        for orbit in phi_orbits_of_degree(&g, d)? {
            let e = orbit.d();
            let unramified = e == 1;
            out.push(GaloisRepRecord {
                degree: d,
                level: d as u32,
                unramified,
                e,
                label_r: (!unramified).then_some(orbit.r()),
                defdeg: orbit.defdeg,
                orbit,
            });
        }
    }
    out.sort_by_key(|r| r.sort_key());
    Ok(out)
}

/// Ramified records grouped by their label.
pub fn ramification_partition(records: &[GaloisRepRecord]) -> BTreeMap<u64, Vec<GaloisRepRecord>> {
    let mut out: BTreeMap<u64, Vec<GaloisRepRecord>> = BTreeMap::new();
    for r in records {
        if let Some(label) = r.label_r {
            out.entry(label).or_default().push(r.clone());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompatOutcome {
    Isomorphic,
    NotIsomorphic,
    /// The representation exceeds construction bounds at one of the levels.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatEntry {
    pub pair: (u64, u64, u64),
    pub degree: u64,
    pub outcome: CompatOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatReport {
    pub n: u32,
    pub n_prime: u32,
    pub entries: Vec<CompatEntry>,
}

impl CompatReport {
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.outcome != CompatOutcome::NotIsomorphic)
    }

    pub fn checked(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.outcome == CompatOutcome::Isomorphic)
            .count()
    }
}

/// For every Frobenius orbit of `G_n`, compares `π` inflated along
/// `G_{n'} → G_n`, `(t, i) ↦ (t mod e_n, i mod f_n)`, with the
/// representation built directly in `G_{n'}` for the same parameters.
pub fn quotient_compatibility_check(k: &PFieldParams, n: u32, n_prime: u32) -> Result<CompatReport> {
    if n == 0 || !n_prime.is_multiple_of(n) {
        return Err(Error::LevelsIncompatible(n, n_prime));
    }
    let lo = level_params(k, n)?;
    let hi = level_params(k, n_prime)?;
    if hi.e_n % lo.e_n != 0 || hi.f_n % lo.f_n != 0 {
        return Err(Error::LevelsIncompatible(n, n_prime));
    }
    let g = galois_group_at_level(k, n)?;
    let gp = galois_group_at_level(k, n_prime)?;
    let scale = hi.e_n / lo.e_n;
    let mut entries = Vec::new();
    for orbit in phi_orbits(&g)? {
        let pair = &orbit.canonical;
        let lifted = PairClass {
            orbit: character_orbit(&gp, pair.orbit.rep_c * scale),
            lambda: pair.lambda,
        };
        let outcome = match compare_levels(&g, &gp, &orbit, &lifted) {
            Ok(true) => CompatOutcome::Isomorphic,
            Ok(false) => CompatOutcome::NotIsomorphic,
            Err(e @ (Error::TooLarge(_) | Error::DegreeTooLarge { .. } | Error::FieldTooLarge(_))) => {
                CompatOutcome::Skipped(e.to_string())
            }
            Err(e) => return Err(e),
        };
        entries.push(CompatEntry {
            pair: pair.key(),
            degree: orbit.degree,
            outcome,
        });
    }
    Ok(CompatReport {
        n,
        n_prime,
        entries,
    })
}

fn compare_levels(
    g: &TwistedGroup,
    gp: &TwistedGroup,
    orbit: &PhiOrbit,
    lifted: &PairClass,
) -> Result<bool> {
    let pi = build_pi(g, orbit)?;
    let orbit_p = phi_orbit_of(gp, lifted)?;
    if orbit_p.degree != orbit.degree {
        return Ok(false);
    }
    let pi_p = build_pi(gp, &orbit_p)?;
    let inflated = MatrixRep::new(gp, pi.gen_t().clone(), pi.gen_s().clone())?;
    are_isomorphic(&pi_p, &inflated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: u64, a: u32) -> PFieldParams {
        PFieldParams::new(p, a).unwrap()
    }

    #[test]
    fn level_examples() {
        assert_eq!(
            level_params(&k(2, 1), 2).unwrap(),
            LevelParams { n: 2, e_n: 3, s_n: 2, f_n: 6 }
        );
        assert_eq!(
            level_params(&k(2, 2), 2).unwrap(),
            LevelParams { n: 2, e_n: 3, s_n: 1, f_n: 3 }
        );
        assert_eq!(
            level_params(&k(2, 5), 1).unwrap(),
            LevelParams { n: 1, e_n: 1, s_n: 1, f_n: 1 }
        );
        let g = galois_group_at_level(&k(3, 1), 1).unwrap();
        assert_eq!((g.e(), g.f(), g.order()), (2, 2, 4));
        assert!(g.is_commutative());
        assert_eq!(galois_group_at_level(&k(2, 1), 2).unwrap().order(), 18);
        assert_eq!(galois_group_at_level(&k(2, 1), 1).unwrap().order(), 1);
    }

    #[test]
    fn classification_q2() {
        let recs = classify_galois_reps(&k(2, 1), 2).unwrap();
        assert_eq!(recs.len(), 3);
        assert_eq!((recs[0].degree, recs[0].unramified), (1, true));
        assert_eq!((recs[1].degree, recs[1].unramified), (2, true));
        assert_eq!((recs[2].degree, recs[2].e, recs[2].label_r), (2, 3, Some(2)));
        let part = ramification_partition(&recs);
        assert_eq!(part.keys().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(classify_galois_reps(&k(2, 1), 1).unwrap().len(), 1);
    }

    #[test]
    fn classification_q4_and_q3() {
        let recs = classify_galois_reps(&k(2, 2), 2).unwrap();
        assert_eq!(recs.len(), 5);
        let deg2: Vec<_> = recs.iter().filter(|r| r.degree == 2).collect();
        assert_eq!(deg2.iter().filter(|r| r.unramified).count(), 1);
        assert_eq!(deg2.iter().filter(|r| !r.unramified && r.e == 3).count(), 3);
        let recs = classify_galois_reps(&k(3, 1), 1).unwrap();
        assert_eq!(recs.len(), 4);
        assert_eq!(recs.iter().filter(|r| r.unramified).count(), 2);
        let part = ramification_partition(&recs);
        assert_eq!(part[&1].len(), 2);
        assert!(part[&1].iter().all(|r| r.e == 2));
    }

    #[test]
    fn compatibility_small() {
        assert!(quotient_compatibility_check(&k(2, 1), 1, 2).unwrap().passed());
        let rep = quotient_compatibility_check(&k(2, 2), 1, 2).unwrap();
        assert!(rep.passed() && rep.checked() == 1);
        let rep = quotient_compatibility_check(&k(2, 1), 2, 4).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.checked(), rep.entries.len());
        assert_eq!(
            quotient_compatibility_check(&k(2, 1), 2, 3),
            Err(Error::LevelsIncompatible(2, 3))
        );
    }
}
