//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use tamerep::char_orbits::{enumerate_pairs, phi_orbits, PairClass};
use tamerep::ffield::tilde_degree;
use tamerep::modcheck::{
    are_isomorphic, berman_irreducible_count, endomorphism_field, is_irreducible, submodule_census,
};
use tamerep::numtheory::{lcm, pow_mod};
use tamerep::rep_builder::{build_pi, decompose_pi_over_tilde, image_order};
use tamerep::tame_galois::{
    classify_galois_reps, level_params, quotient_compatibility_check, ramification_partition,
    PFieldParams,
};
use tamerep::twisted_group::{identify_small_group, p_regular_class_count, twist_by_rep, GroupName, TwistedGroup};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn degrees(g: &TwistedGroup) -> Result<Vec<u64>, String> {
    Ok(phi_orbits(g).map_err(e2s)?.iter().map(|o| o.degree).collect())
}

fn criterion_1() -> Outcome {
    let g = TwistedGroup::new(2, 1, 3, 2).map_err(e2s)?;
    let orbits = phi_orbits(&g).map_err(e2s)?;
    ensure(degrees(&g)? == vec![1, 2], "degrees differ from {1, 2}")?;
    let pi = build_pi(&g, &orbits[1]).map_err(e2s)?;
    let img = image_order(&pi).map_err(e2s)?;
    // |GL_2(F_2)| = (4 − 1)(4 − 2) = 6
    ensure(img == 6 && g.order() == 6, format!("image order {img}"))?;
    let name = identify_small_group(&twist_by_rep(&pi).map_err(e2s)?).map_err(e2s)?;
    ensure(name == GroupName::Symmetric4, format!("twist is {name}"))?;
    Ok("degrees {1,2}; pi bijective onto GL_2(F_2); twist = S4".into())
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for (p, a, e, f) in [(2, 1, 1, 3), (2, 2, 3, 1)] {
        let g = TwistedGroup::new(p, a, e, f).map_err(e2s)?;
        let orbits = phi_orbits(&g).map_err(e2s)?;
        ensure(degrees(&g)? == vec![1, 2], format!("G({p},{a},{e},{f}) degrees"))?;
        let pi = build_pi(&g, &orbits[1]).map_err(e2s)?;
        let ef = endomorphism_field(&pi).map_err(e2s)?;
        ensure(ef == 2, format!("G({p},{a},{e},{f}) End field degree {ef}"))?;
        let name = identify_small_group(&twist_by_rep(&pi).map_err(e2s)?).map_err(e2s)?;
        ensure(name == GroupName::Alternating4, format!("twist is {name}"))?;
        notes.push(format!("G({p},{a},{e},{f}): End=F_4, twist=A4"));
    }
    Ok(notes.join("; "))
}

/// All `(p, a, e, f)` of the sweep.
fn sweep_params() -> Vec<(u64, u32, u64, u64)> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        for a in [1u32, 2] {
            for f in 1..=100u64 {
                for e in 1..=100 / f {
                    let q = p.pow(a) % e;
                    if pow_mod(q, f, e) == 1 % e {
                        out.push((p, a, e, f));
                    }
                }
            }
        }
    }
    out
}

/// Built only when exhaustive irreducibility is available.
fn pi_in_bounds(p: u64, degree: u64) -> bool {
    degree <= 16 && p.checked_pow(degree as u32).is_some_and(|x| x <= 1 << 20)
}

struct SweepStats {
    groups: usize,
    orbits: usize,
    built: usize,
    skipped: usize,
    pairs: usize,
    decomposed: usize,
}

fn criterion_3() -> Outcome {
    let mut st = SweepStats {
        groups: 0,
        orbits: 0,
        built: 0,
        skipped: 0,
        pairs: 0,
        decomposed: 0,
    };
    for (p, a, e, f) in sweep_params() {
        let g = TwistedGroup::new(p, a, e, f).map_err(e2s)?;
        let orbits = phi_orbits(&g).map_err(e2s)?;
        let berman = berman_irreducible_count(&g).map_err(e2s)?;
        ensure(
            orbits.len() as u64 == berman,
            format!("G({p},{a},{e},{f}): {} orbits vs Berman {berman}", orbits.len()),
        )?;
        let mut built = Vec::new();
        for o in &orbits {
            let want = lcm(o.r(), o.s() * o.w());
            ensure(o.degree == want, format!("G({p},{a},{e},{f}): degree formula"))?;
            if !pi_in_bounds(p, o.degree) {
                st.skipped += 1;
                continue;
            }
            let pi = build_pi(&g, o).map_err(|err| format!("G({p},{a},{e},{f}) {:?}: {err}", o.canonical.key()))?;
            ensure(
                pi.degree() as u64 == want,
                format!("G({p},{a},{e},{f}): built degree {} != {want}", pi.degree()),
            )?;
            ensure(
                is_irreducible(&pi).map_err(e2s)?,
                format!("G({p},{a},{e},{f}) {:?}: reducible", o.canonical.key()),
            )?;
            built.push(pi);
        }
        for i in 0..built.len() {
            for j in 0..i {
                if built[i].degree() == built[j].degree() {
                    ensure(
                        !are_isomorphic(&built[i], &built[j]).map_err(e2s)?,
                        format!("G({p},{a},{e},{f}): two isomorphic pi"),
                    )?;
                }
            }
        }
        st.groups += 1;
        st.orbits += orbits.len();
        st.built += built.len();
    }
    Ok(format!(
        "{} groups, {} orbits, {} pi built and irreducible, {} beyond exhaustive bounds",
        st.groups, st.orbits, st.built, st.skipped
    ))
}

fn criterion_4() -> Outcome {
    let mut groups = 0;
    let mut squared = 0;
    for (p, a, e, f) in sweep_params() {
        let g = TwistedGroup::new(p, a, e, f).map_err(e2s)?;
        let pairs = enumerate_pairs(&g).map_err(e2s)?;
        let regular = p_regular_class_count(&g).map_err(e2s)?;
        ensure(
            pairs.len() as u64 == regular,
            format!("G({p},{a},{e},{f}): {} pairs vs {regular} p-regular classes", pairs.len()),
        )?;
        if f % p != 0 {
            let sum: u64 = pairs.iter().map(|x| x.orbit.s * x.orbit.s).sum();
            ensure(sum == e * f, format!("G({p},{a},{e},{f}): sum s^2 = {sum}"))?;
            squared += 1;
        }
        groups += 1;
    }
    Ok(format!("{groups} groups; squared-degree identity on {squared} with p not dividing f"))
}

fn criterion_5() -> Outcome {
    let mut st = SweepStats {
        groups: 0,
        orbits: 0,
        built: 0,
        skipped: 0,
        pairs: 0,
        decomposed: 0,
    };
    for (p, a, e, f) in sweep_params() {
        if tilde_degree(p, a, f) > 24 {
            continue;
        }
        let g = TwistedGroup::new(p, a, e, f).map_err(e2s)?;
        for o in phi_orbits(&g).map_err(e2s)? {
            if o.degree > 8 {
                continue;
            }
            let pi = build_pi(&g, &o).map_err(e2s)?;
            let got = decompose_pi_over_tilde(&pi)
                .map_err(|err| format!("G({p},{a},{e},{f}) {:?}: {err}", o.canonical.key()))?;
            let mut want: Vec<PairClass> = o.members.clone();
            want.sort_by_key(|x| x.key());
            ensure(
                got == want,
                format!("G({p},{a},{e},{f}) {:?}: constituents differ", o.canonical.key()),
            )?;
            st.decomposed += 1;
            st.pairs += want.len();
        }
        st.groups += 1;
    }
    Ok(format!(
        "{} orbits in {} groups decomposed into {} pairs, each once",
        st.decomposed, st.groups, st.pairs
    ))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for ((p, a, e, f), expect_e, expect) in [((2, 1, 3, 2), 1, 3), ((2, 2, 3, 1), 2, 5)] {
        let g = TwistedGroup::new(p, a, e, f).map_err(e2s)?;
        let orbits = phi_orbits(&g).map_err(e2s)?;
        let v = build_pi(&g, &orbits[1]).map_err(e2s)?;
        let deg_e = endomorphism_field(&v).map_err(e2s)?;
        ensure(deg_e == expect_e, format!("End degree {deg_e}"))?;
        let qe = p.pow(deg_e);
        let formula = (qe * qe - 1) / (qe - 1);
        let census = submodule_census(&v, 2).map_err(e2s)?;
        ensure(
            census == expect && census == formula,
            format!("G({p},{a},{e},{f}): census {census}, formula {formula}"),
        )?;
        notes.push(format!("E=F_{qe}: census {census} = ({qe}^2-1)/({qe}-1)"));
    }
    Ok(notes.join("; "))
}

fn criterion_7() -> Outcome {
    let recs = classify_galois_reps(&PFieldParams::new(2, 1).map_err(e2s)?, 2).map_err(e2s)?;
    let trivial = recs.iter().filter(|r| r.degree == 1 && r.unramified).count();
    let unram2 = recs.iter().filter(|r| r.degree == 2 && r.unramified).count();
    let ram2: Vec<_> = recs.iter().filter(|r| r.degree == 2 && !r.unramified).collect();
    ensure(
        recs.len() == 3 && trivial == 1 && unram2 == 1 && ram2.len() == 1,
        format!("q=2: {} records", recs.len()),
    )?;
    ensure(
        ram2[0].e == 3 && ram2[0].label_r == Some(2),
        "q=2: ramified record is not (e=3, r=2)",
    )?;
    ensure(
        !ramification_partition(&recs).contains_key(&1),
        "label-1 class nonempty for p=2",
    )?;
    let recs = classify_galois_reps(&PFieldParams::new(2, 2).map_err(e2s)?, 2).map_err(e2s)?;
    let unram2 = recs.iter().filter(|r| r.degree == 2 && r.unramified).count();
    let ram2 = recs
        .iter()
        .filter(|r| r.degree == 2 && !r.unramified && r.e == 3)
        .count();
    let others = recs.iter().filter(|r| r.degree == 2).count() - unram2 - ram2;
    ensure(
        unram2 == 1 && ram2 == 3 && others == 0,
        format!("q=4: {unram2} unramified, {ram2} ramified e=3, {others} other"),
    )?;
    Ok("q=2: trivial + unramified + (e=3, r=2); q=4: unramified + 3 ramified e=3".into())
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn criterion_8() -> Outcome {
    let mut levels = 0;
    let mut compat = 0;
    for p in [2u64, 3] {
        for a in [1u32, 2] {
            let k = PFieldParams::new(p, a).map_err(e2s)?;
            let q = big(p).pow(a);
            for n in 1..=4u32 {
                let lp = level_params(&k, n).map_err(e2s)?;
                let (e, s, f) = (lp.e_n, lp.s_n, lp.f_n);
                ensure(e == p.pow(n) - 1, "e_n")?;
                ensure(f % s == 0 && f % e == 0, format!("p={p} a={a} n={n}: s, e | f"))?;
                let modulus = big(e) * (q.pow(s as u32) - BigUint::one());
                let divides = |m: u64| (q.pow(m as u32) - BigUint::one()) % &modulus == BigUint::zero();
                ensure(divides(f), format!("p={p} a={a} n={n}: divisibility"))?;
                for m in (s..f).step_by(s as usize) {
                    ensure(!divides(m), format!("p={p} a={a} n={n}: f not minimal ({m})"))?;
                }
                // s_n is the order of q modulo e_n
                ensure(
                    (q.pow(s as u32) - BigUint::one()) % big(e) == BigUint::zero()
                        && (1..s).all(|j| (q.pow(j as u32) - BigUint::one()) % big(e) != BigUint::zero()),
                    "s_n",
                )?;
                levels += 1;
            }
            for (n, np) in [(1, 2), (1, 3), (1, 4), (2, 4)] {
                let rep = quotient_compatibility_check(&k, n, np).map_err(e2s)?;
                ensure(rep.passed(), format!("p={p} a={a}: compatibility {n} -> {np} fails"))?;
                compat += rep.checked();
            }
        }
    }
    Ok(format!("{levels} levels verified; {compat} inflation isomorphisms confirmed"))
}

/// Monic irreducible polynomials of degree `d` over `F_p` with nonzero
/// constant term, by trial division by every monic polynomial of degree
/// `1..=d/2`.
fn brute_force_irreducible_count(p: u64, d: u32) -> u64 {
    fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
        let db = b.len() - 1;
        while a.len() > db {
            let c = *a.last().unwrap();
            let shift = a.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p * p - c * bi % p) % p;
            }
            a.pop();
        }
        a
    }
    let monic = |deg: u32, idx: u64| -> Vec<u64> {
        let mut c: Vec<u64> = (0..deg).map(|i| idx / p.pow(i) % p).collect();
        c.push(1);
        c
    };
    let mut count = 0;
    for idx in 0..p.pow(d) {
        let f = monic(d, idx);
        if f[0] == 0 {
            continue;
        }
        let reducible = (1..=d / 2).any(|k| {
            (0..p.pow(k)).any(|j| rem(f.clone(), &monic(k, j), p).iter().all(|&x| x == 0))
        });
        if !reducible {
            count += 1;
        }
    }
    count
}

fn criterion_9() -> Outcome {
    let mut notes = Vec::new();
    for p in [2u64, 3] {
        for a in [1u32, 2] {
            let recs = classify_galois_reps(&PFieldParams::new(p, a).map_err(e2s)?, 4).map_err(e2s)?;
            for d in 1..=4u64 {
                let got = recs.iter().filter(|r| r.degree == d && r.unramified).count() as u64;
                let want = brute_force_irreducible_count(p, d as u32);
                ensure(got == want, format!("p={p} a={a} d={d}: {got} vs {want}"))?;
            }
        }
        notes.push(format!(
            "p={p}: {:?}",
            (1..=4).map(|d| brute_force_irreducible_count(p, d)).collect::<Vec<_>>()
        ));
    }
    Ok(notes.join("; "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "S3 example", Duration::from_secs(1), criterion_1),
        (2, "Z/3 and A3 examples", Duration::from_secs(1), criterion_2),
        (3, "degree-formula sweep", Duration::from_secs(60), criterion_3),
        (4, "counting identities", Duration::from_secs(60), criterion_4),
        (5, "descent identity", Duration::from_secs(60), criterion_5),
        (6, "submodule census", Duration::from_secs(5), criterion_6),
        (7, "Galois classification N=2", Duration::from_secs(5), criterion_7),
        (8, "level invariants and compatibility", Duration::from_secs(60), criterion_8),
        (9, "unramified count", Duration::from_secs(60), criterion_9),
    ];
    let mut failures = 0;
    for (num, name, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("criterion {num} PASS [{elapsed:.2?}] {name}: {msg}"),
            Err(msg) => {
                failures += 1;
                println!("criterion {num} FAIL [{elapsed:.2?}] {name}: {msg}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
