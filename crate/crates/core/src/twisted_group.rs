//! The twisted product `G = T ⋊_q Σ` with `T = Z/e` and `Σ = Z/f`, its
//! conjugacy structure, and small explicit group tables.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::numtheory::{gcd, is_prime, mult_order, pow_mod};
use crate::rep::MatrixRep;

/// Largest group on which class computations are run.
pub const MAX_CLASS_GROUP_ORDER: u64 = 10_000;
/// Largest explicit multiplication table.
pub const MAX_TABLE_ORDER: usize = 2000;
/// Tables up to this order are checked for associativity on construction.
pub const ASSOCIATIVITY_CHECK_ORDER: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElem {
    pub t: u64,
    pub i: u64,
}

impl GroupElem {
    pub fn new(t: u64, i: u64) -> Self {
        GroupElem { t, i }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedGroup {
    p: u64,
    a: u32,
    e: u64,
    f: u64,
    qe: u64,
    /// Order of `q` modulo `e`; `q^i mod e` depends only on `i` modulo this.
    q_period: u64,
}

impl TwistedGroup {
    /// `q = p^a`; requires `e | q^f − 1`.
    pub fn new(p: u64, a: u32, e: u64, f: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if a == 0 || e == 0 || f == 0 {
            return Err(Error::IncompatibleParameters(format!(
                "a, e, f must be positive (a={a}, e={e}, f={f})"
            )));
        }
        if e.checked_mul(f).is_none() || e > u32::MAX as u64 {
            return Err(Error::GroupTooLarge(u64::MAX));
        }
        let qe = pow_mod(p, a as u64, e);
        if pow_mod(qe, f, e) != 1 % e {
            return Err(Error::IncompatibleParameters(format!(
                "e = {e} does not divide q^f - 1 = {p}^{}-1",
                a as u64 * f
            )));
        }
        debug_assert_eq!(gcd(e, p), 1);
        let q_period = mult_order(qe, e).expect("q is a unit mod e");
        Ok(TwistedGroup {
            p,
            a,
            e,
            f,
            qe,
            q_period,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    /// `q mod e`.
    pub fn q_mod_e(&self) -> u64 {
        self.qe
    }

    pub fn order(&self) -> u64 {
        self.e * self.f
    }

    pub fn is_commutative(&self) -> bool {
        self.qe == 1 % self.e
    }

    /// `q^k mod e` for any integer `k`, negative exponents included.
    pub fn q_pow(&self, k: i64) -> u64 {
        let k = k.rem_euclid(self.q_period as i64) as u64;
        pow_mod(self.qe, k, self.e)
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem::new(0, 0)
    }

    /// The generator `t₀` of `T`.
    pub fn gen_t(&self) -> GroupElem {
        GroupElem::new(1 % self.e, 0)
    }

    /// The Frobenius generator `σ` of `Σ`.
    pub fn gen_s(&self) -> GroupElem {
        GroupElem::new(0, 1 % self.f)
    }

    pub fn contains(&self, g: GroupElem) -> bool {
        g.t < self.e && g.i < self.f
    }

    pub fn mul(&self, g: GroupElem, h: GroupElem) -> GroupElem {
        let u = (self.q_pow(g.i as i64) as u128 * h.t as u128 % self.e as u128) as u64;
        GroupElem::new((g.t + u) % self.e, (g.i + h.i) % self.f)
    }

    pub fn inv(&self, g: GroupElem) -> GroupElem {
        let s = (self.q_pow(-(g.i as i64)) as u128 * g.t as u128 % self.e as u128) as u64;
        GroupElem::new((self.e - s) % self.e, (self.f - g.i) % self.f)
    }

    pub fn pow(&self, g: GroupElem, mut k: u64) -> GroupElem {
        let mut base = g;
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `h g h⁻¹`.
    pub fn conjugate(&self, g: GroupElem, h: GroupElem) -> GroupElem {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn element_order(&self, g: GroupElem) -> u64 {
        let k = self.f / gcd(self.f, g.i);
        let gk = self.pow(g, k);
        debug_assert_eq!(gk.i, 0);
        k * (self.e / gcd(self.e, gk.t))
    }

    /// Index of `g` in [`elements`](Self::elements).
    pub fn index_of(&self, g: GroupElem) -> usize {
        (g.t * self.f + g.i) as usize
    }

    /// All elements ordered by `(t, i)`.
    pub fn elements(&self) -> impl Iterator<Item = GroupElem> + '_ {
        (0..self.e).flat_map(move |t| (0..self.f).map(move |i| GroupElem::new(t, i)))
    }

    fn check_class_bound(&self) -> Result<()> {
        if self.order() > MAX_CLASS_GROUP_ORDER {
            Err(Error::GroupTooLarge(self.order()))
        } else {
            Ok(())
        }
    }

    /// Explicit multiplication table with labels `(t,i)`.
    pub fn to_table(&self) -> Result<FiniteGroupTable> {
        let n = self.order() as usize;
        if n > MAX_TABLE_ORDER {
            return Err(Error::TooLarge(format!("group of order {n} in table form")));
        }
        let elems: Vec<GroupElem> = self.elements().collect();
        let labels = elems.iter().map(|g| g.to_string()).collect();
        FiniteGroupTable::from_fn(labels, |x, y| self.index_of(self.mul(elems[x], elems[y])))
    }
}

/// Conjugacy classes, each sorted, listed by smallest member.
pub fn conjugacy_classes(g: &TwistedGroup) -> Result<Vec<Vec<GroupElem>>> {
    g.check_class_bound()?;
    let n = g.order() as usize;
    let gens = [g.gen_t(), g.gen_s()];
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in g.elements() {
        if seen[g.index_of(x)] {
            continue;
        }
        seen[g.index_of(x)] = true;
        let mut class = vec![x];
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for &h in &gens {
                let z = g.conjugate(y, h);
                if !seen[g.index_of(z)] {
                    seen[g.index_of(z)] = true;
                    class.push(z);
                    queue.push_back(z);
                }
            }
        }
        class.sort();
        classes.push(class);
    }
    Ok(classes)
}

/// Number of orbits of `g ↦ g^p` on the conjugacy classes of `p`-regular
/// elements; this is the number of irreducible `F_p`-representations.
pub fn p_regular_class_orbits(g: &TwistedGroup) -> Result<u64> {
    let classes = conjugacy_classes(g)?;
    let mut class_of = vec![0usize; g.order() as usize];
    for (k, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[g.index_of(x)] = k;
        }
    }
    let regular: Vec<bool> = classes
        .iter()
        .map(|c| gcd(g.element_order(c[0]), g.p) == 1)
        .collect();
    let image: Vec<usize> = classes
        .iter()
        .map(|c| class_of[g.index_of(g.pow(c[0], g.p))])
        .collect();
    Ok(count_cycles(&regular, &image))
}

/// Number of regular conjugacy classes.
pub fn p_regular_class_count(g: &TwistedGroup) -> Result<u64> {
    let classes = conjugacy_classes(g)?;
    Ok(classes
        .iter()
        .filter(|c| gcd(g.element_order(c[0]), g.p) == 1)
        .count() as u64)
}

fn count_cycles(active: &[bool], image: &[usize]) -> u64 {
    let mut seen = vec![false; active.len()];
    let mut cycles = 0;
    for start in 0..active.len() {
        if !active[start] || seen[start] {
            continue;
        }
        cycles += 1;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = image[k];
        }
    }
    cycles
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    labels: Vec<String>,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroupTable {
    /// Builds and validates the table of `mul` on `labels.len()` elements.
    pub fn from_fn(labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::IncompatibleParameters("empty group".into()));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::TooLarge(format!("group of order {n} in table form")));
        }
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = mul(x, y);
                if z >= n {
                    return Err(Error::NotAHomomorphism(format!("product {x}·{y} out of range")));
                }
                table[x * n + y] = z as u32;
            }
        }
        let at = |x: usize, y: usize| table[x * n + y] as usize;
        let identity = (0..n)
            .find(|&u| (0..n).all(|x| at(u, x) == x && at(x, u) == x))
            .ok_or_else(|| Error::NotAHomomorphism("no identity element".into()))?;
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| at(x, y) == identity && at(y, x) == identity)
                    .ok_or_else(|| Error::NotAHomomorphism(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<usize>>>()?;
        if n <= ASSOCIATIVITY_CHECK_ORDER {
            for x in 0..n {
                for y in 0..n {
                    let xy = at(x, y);
                    for z in 0..n {
                        if at(xy, z) != at(x, at(y, z)) {
                            return Err(Error::NotAHomomorphism(format!(
                                "associativity fails at ({x},{y},{z})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(FiniteGroupTable {
            labels,
            table,
            identity,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y] as usize
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Relabels element `x` as `perm[x]`; the result is isomorphic.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut inv = vec![0; n];
        for (x, &px) in perm.iter().enumerate() {
            inv[px] = x;
        }
        let labels = (0..n).map(|y| self.labels[inv[y]].clone()).collect();
        FiniteGroupTable::from_fn(labels, |a, b| perm[self.mul(inv[a], inv[b])])
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|h| self.mul(self.mul(h, x), self.inv(h)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Berman count for the prime `p` on this table.
    pub fn p_regular_class_orbits(&self, p: u64) -> u64 {
        let classes = self.conjugacy_classes();
        let mut class_of = vec![0; self.order()];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let regular: Vec<bool> = classes
            .iter()
            .map(|c| gcd(self.element_order(c[0]), p) == 1)
            .collect();
        let image: Vec<usize> = classes
            .iter()
            .map(|c| class_of[self.pow(c[0], p)])
            .collect();
        count_cycles(&regular, &image)
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            k += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Commutator subgroup of the subgroup `h`.
    pub fn derived_subgroup_of(&self, h: &[usize]) -> Vec<usize> {
        let mut comms: Vec<usize> = Vec::new();
        for &x in h {
            for &y in h {
                let c = self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated_subgroup(&comms)
    }

    /// Orders of `G ⊇ G' ⊇ G'' ⊇ …` until the series stabilises.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut cur: Vec<usize> = (0..self.order()).collect();
        let mut out = vec![cur.len()];
        loop {
            let next = self.derived_subgroup_of(&cur);
            if next.len() == cur.len() {
                return out;
            }
            out.push(next.len());
            cur = next;
        }
    }

    /// Element-order histogram `order → count`.
    pub fn order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for x in 0..self.order() {
            *h.entry(self.element_order(x)).or_insert(0) += 1;
        }
        h
    }

    /// Invariant factors `n_1 | n_2 | …` of an abelian table.
    fn abelian_invariants(&self) -> Vec<u64> {
        let n = self.order() as u64;
        let hist = self.order_histogram();
        let mut per_prime: Vec<Vec<u64>> = Vec::new();
        for (l, _) in crate::numtheory::factorize(n) {
            // c_k = #{x : x^{l^k} = 1} = l^{Σ_i min(k, a_i)}
            let count_dividing = |k: u32| -> u64 {
                let lk = l.pow(k);
                hist.iter()
                    .filter(|(&o, _)| lk % o == 0)
                    .map(|(_, &c)| c as u64)
                    .sum()
            };
            let log_l = |x: u64| -> u32 {
                let mut k = 0;
                let mut y = x;
                while y > 1 {
                    y /= l;
                    k += 1;
                }
                k
            };
            // number of cyclic factors of exponent ≥ k is log c_k − log c_{k−1}
            let mut ge: Vec<u32> = Vec::new();
            let mut k = 1;
            loop {
                let diff = log_l(count_dividing(k)) - log_l(count_dividing(k - 1));
                if diff == 0 {
                    break;
                }
                ge.push(diff);
                k += 1;
            }
            let mut exps = Vec::new();
            for (idx, &g) in ge.iter().enumerate() {
                let next = ge.get(idx + 1).copied().unwrap_or(0);
                for _ in 0..(g - next) {
                    exps.push(l.pow(idx as u32 + 1));
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push(exps);
        }
        let len = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
        let mut inv: Vec<u64> = (0..len)
            .map(|i| per_prime.iter().map(|v| v.get(i).copied().unwrap_or(1)).product())
            .collect();
        inv.reverse();
        inv
    }
}

/// Invariants of a group used when no name applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSignature {
    pub order: usize,
    pub class_count: usize,
    pub derived_series: Vec<usize>,
    pub order_histogram: Vec<(u64, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupName {
    Cyclic(usize),
    ElementaryAbelian { p: u64, k: u32 },
    Abelian(Vec<u64>),
    Symmetric3,
    Dihedral(usize),
    Alternating4,
    Symmetric4,
    Generic(GroupSignature),
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupName::ElementaryAbelian { p, k } => write!(f, "elementary abelian {p}^{k}"),
            GroupName::Abelian(inv) => {
                let parts: Vec<String> = inv.iter().map(|n| format!("Z/{n}")).collect();
                write!(f, "abelian {}", parts.join(" x "))
            }
            GroupName::Symmetric3 => write!(f, "S3"),
            GroupName::Dihedral(n) => write!(f, "dihedral of order {n}"),
            GroupName::Alternating4 => write!(f, "A4"),
            GroupName::Symmetric4 => write!(f, "S4"),
            GroupName::Generic(s) => write!(
                f,
                "order {}, {} classes, derived series {:?}",
                s.order, s.class_count, s.derived_series
            ),
        }
    }
}

/// Names a small group from invariant signatures.
pub fn identify_small_group(t: &FiniteGroupTable) -> Result<GroupName> {
    let n = t.order();
    if n > ASSOCIATIVITY_CHECK_ORDER {
        return Err(Error::TooLarge(format!("identification of order {n}")));
    }
    let hist = t.order_histogram();
    if hist.contains_key(&(n as u64)) {
        return Ok(GroupName::Cyclic(n));
    }
    if t.is_abelian() {
        let inv = t.abelian_invariants();
        if inv.iter().all(|&x| x == inv[0]) && is_prime(inv[0]) {
            return Ok(GroupName::ElementaryAbelian {
                p: inv[0],
                k: inv.len() as u32,
            });
        }
        return Ok(GroupName::Abelian(inv));
    }
    let classes = t.conjugacy_classes().len();
    let series = t.derived_series_orders();
    let derived = series.get(1).copied().unwrap_or(n);
    match (n, derived, classes) {
        (6, _, _) => return Ok(GroupName::Symmetric3),
        (12, 4, 4) => return Ok(GroupName::Alternating4),
        (24, 12, 5) => return Ok(GroupName::Symmetric4),
        _ => {}
    }
    if n.is_multiple_of(2) && n >= 6 {
        let half = (n / 2) as u64;
        if let Some(x) = (0..n).find(|&x| t.element_order(x) == half) {
            let rot = t.generated_subgroup(&[x]);
            if (0..n)
                .filter(|y| rot.binary_search(y).is_err())
                .all(|y| t.element_order(y) == 2)
            {
                return Ok(GroupName::Dihedral(n));
            }
        }
    }
    Ok(GroupName::Generic(GroupSignature {
        order: n,
        class_count: classes,
        derived_series: series,
        order_histogram: hist.into_iter().collect(),
    }))
}

/// The semidirect product `F_p^d ⋊_π G` as an explicit table.
pub fn twist_by_rep(pi: &MatrixRep<PrimeField>) -> Result<FiniteGroupTable> {
    let g = pi.group();
    let p = pi.field().characteristic();
    let d = pi.degree() as u32;
    let nv = p
        .checked_pow(d)
        .filter(|&nv| nv.saturating_mul(g.order()) <= ASSOCIATIVITY_CHECK_ORDER as u64)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{d} * {}", g.order())))?;
    pi.check_homomorphism()?;
    let fp = pi.field();
    let elems: Vec<GroupElem> = g.elements().collect();
    let mats: Vec<_> = elems.iter().map(|&x| pi.matrix_of(x)).collect();
    let vec_of = |k: u64| -> Vec<u32> {
        let mut v = Vec::with_capacity(d as usize);
        let mut k = k;
        for _ in 0..d {
            v.push((k % p) as u32);
            k /= p;
        }
        v
    };
    let index_of_vec =
        |v: &[u32]| -> u64 { v.iter().rev().fold(0u64, |acc, &c| acc * p + c as u64) };
    let ng = elems.len();
    let labels = (0..nv as usize * ng)
        .map(|k| format!("({:?},{})", vec_of((k / ng) as u64), elems[k % ng]))
        .collect();
    FiniteGroupTable::from_fn(labels, |x, y| {
        let (v, gx) = (vec_of((x / ng) as u64), x % ng);
        let (w, gy) = (vec_of((y / ng) as u64), y % ng);
        let pw = mats[gx].mul_vec(&w);
        let sum: Vec<u32> = v.iter().zip(&pw).map(|(&a, &b)| fp.add(a, b)).collect();
        let gh = g.index_of(g.mul(elems[gx], elems[gy]));
        index_of_vec(&sum) as usize * ng + gh
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> TwistedGroup {
        TwistedGroup::new(2, 1, 3, 2).unwrap()
    }

    #[test]
    fn construction_examples() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_commutative());
        let a3 = TwistedGroup::new(2, 2, 3, 1).unwrap();
        assert!(a3.is_commutative());
        assert_eq!(identify_small_group(&a3.to_table().unwrap()).unwrap(), GroupName::Cyclic(3));
        let z3 = TwistedGroup::new(2, 1, 1, 3).unwrap();
        assert_eq!(identify_small_group(&z3.to_table().unwrap()).unwrap(), GroupName::Cyclic(3));
        assert!(matches!(
            TwistedGroup::new(2, 1, 5, 2),
            Err(Error::IncompatibleParameters(_))
        ));
        assert_eq!(TwistedGroup::new(4, 1, 3, 2), Err(Error::NonPrime(4)));
    }

    #[test]
    fn group_law_examples() {
        let g = s3();
        let x = GroupElem::new(1, 1);
        assert_eq!(g.mul(g.identity(), x), x);
        assert_eq!(g.conjugate(GroupElem::new(1, 0), g.gen_s()), GroupElem::new(2, 0));
        assert_eq!(g.pow(x, 2), g.identity());
        for a in g.elements() {
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
            assert_eq!(g.mul(g.inv(a), a), g.identity());
        }
    }

    #[test]
    fn s3_classes_and_signature() {
        let g = s3();
        let mut sizes: Vec<usize> = conjugacy_classes(&g).unwrap().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let t = g.to_table().unwrap();
        assert_eq!(identify_small_group(&t).unwrap(), GroupName::Symmetric3);
        assert_eq!(t.derived_series_orders(), vec![6, 3, 1]);
        assert_eq!(p_regular_class_orbits(&g).unwrap(), 2);
    }

    #[test]
    fn berman_small_cases() {
        let c3 = TwistedGroup::new(2, 2, 3, 1).unwrap();
        assert_eq!(conjugacy_classes(&c3).unwrap().len(), 3);
        assert_eq!(p_regular_class_orbits(&c3).unwrap(), 2);
        let triv = TwistedGroup::new(2, 1, 1, 1).unwrap();
        assert_eq!(p_regular_class_orbits(&triv).unwrap(), 1);
    }

    #[test]
    fn class_count_matches_table_oracle() {
        let g = TwistedGroup::new(3, 1, 8, 2).unwrap();
        let t = g.to_table().unwrap();
        let classes = conjugacy_classes(&g).unwrap();
        assert_eq!(classes.len(), t.conjugacy_classes().len());
        assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), 16);
    }

    #[test]
    fn small_names() {
        let z6 = FiniteGroupTable::from_fn(
            (0..6).map(|k| k.to_string()).collect(),
            |x, y| (x + y) % 6,
        )
        .unwrap();
        assert_eq!(identify_small_group(&z6).unwrap().to_string(), "cyclic 6");
        let v4 = FiniteGroupTable::from_fn((0..4).map(|k| k.to_string()).collect(), |x, y| x ^ y)
            .unwrap();
        assert_eq!(
            identify_small_group(&v4).unwrap(),
            GroupName::ElementaryAbelian { p: 2, k: 2 }
        );
        let z2z4 = FiniteGroupTable::from_fn((0..8).map(|k| k.to_string()).collect(), |x, y| {
            ((x % 2 + y % 2) % 2) + 2 * ((x / 2 + y / 2) % 4)
        })
        .unwrap();
        assert_eq!(identify_small_group(&z2z4).unwrap(), GroupName::Abelian(vec![2, 4]));
        // D_8 as T ⋊ Σ with e = 4, q ≡ −1: p = 3, a = 1, f = 2
        let d8 = TwistedGroup::new(3, 1, 4, 2).unwrap().to_table().unwrap();
        assert_eq!(identify_small_group(&d8).unwrap(), GroupName::Dihedral(8));
    }
}
