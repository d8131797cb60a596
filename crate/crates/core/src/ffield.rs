//! Finite fields `F_{p^m}` with a deterministic construction.
//!
//! The modulus is the lexicographically smallest monic irreducible of degree
//! `m` (coefficients compared from the constant term upwards) and the fixed
//! generator is the smallest primitive element in the same coefficient
//! order. Two calls with the same `(p, m)` therefore build identical fields,
//! which is what makes discrete logarithms and root-of-unity labels stable.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::linalg::Matrix;
use crate::numtheory;
use crate::poly::Poly;

pub const MAX_DEGREE: u32 = 24;
/// Largest field size accepted by [`make_field`].
pub const MAX_FIELD_SIZE: u64 = 1 << 40;
/// Largest field size for which discrete logarithms are computed.
pub const MAX_LOG_FIELD_SIZE: u64 = 1 << 24;
const TABLE_LIMIT: u64 = 1 << 16;

/// An element of some `F_{p^m}`: the packed coefficient vector
/// `Σ c_i p^i` plus the `(p, m)` tag of the field it belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FFElem {
    p: u32,
    m: u32,
    val: u64,
}

impl FFElem {
    /// Packed coefficient index in `[0, p^m)`.
    pub fn value(&self) -> u64 {
        self.val
    }

    pub fn field_tag(&self) -> (u64, u32) {
        (self.p as u64, self.m)
    }
}

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}^{}[{}]", self.p, self.m, self.val)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Immutable description of `F_{p^m}`.
pub struct FieldDesc {
    p: u64,
    m: u32,
    size: u64,
    /// Monic, length `m + 1`, constant term first.
    modulus: Vec<u64>,
    generator: u64,
    /// Prime divisors of `size - 1`.
    order_primes: Vec<u64>,
    pow_p: Vec<u64>,
    tables: Option<Tables>,
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldDesc")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

/// Shared handle to a constructed field.
#[derive(Clone, Debug)]
pub struct ExtField(Arc<FieldDesc>);

/// Builds `F_{p^m}` deterministically.
/// [`make_field`] memoised per `(p, m)`; fields are immutable, so the shared
/// copies are interchangeable with fresh ones.
pub fn cached_field(p: u64, m: u32) -> Result<ExtField> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), ExtField>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("field cache").get(&(p, m)) {
        return Ok(f.clone());
    }
    let f = make_field(p, m)?;
    cache
        .lock()
        .expect("field cache")
        .entry((p, m))
        .or_insert_with(|| f.clone());
    Ok(f)
}

pub fn make_field(p: u64, m: u32) -> Result<ExtField> {
    if !numtheory::is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::NonPrime(p));
    }
    if m == 0 || m > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { p, m: m as u64 });
    }
    let size = match numtheory::checked_pow(p, m) {
        Some(s) if s <= MAX_FIELD_SIZE && (m == 1 || p < (1 << 16)) => s,
        _ => return Err(Error::DegreeTooLarge { p, m: m as u64 }),
    };
    let modulus = smallest_irreducible(p, m).ok_or(Error::NoIrreducibleFound { p, m: m as u64 })?;
    let pow_p: Vec<u64> = (0..=m).map(|i| p.pow(i)).collect();
    let mut desc = FieldDesc {
        p,
        m,
        size,
        modulus,
        generator: 0,
        order_primes: numtheory::prime_divisors(size - 1),
        pow_p,
        tables: None,
    };
    let field = ExtField(Arc::new(FieldDesc { ..clone_desc(&desc) }));
    let gen = (1..size)
        .map(|k| field.lex_element(k))
        .find(|&g| field.has_full_order(g))
        .ok_or(Error::NoIrreducibleFound { p, m: m as u64 })?;
    desc.generator = gen.val;
    if size <= TABLE_LIMIT {
        let mut exp = Vec::with_capacity((size - 1) as usize);
        let mut log = vec![0u32; size as usize];
        let mut x = field.one();
        for i in 0..size - 1 {
            exp.push(x.val as u32);
            log[x.val as usize] = i as u32;
            x = field.mul(x, gen);
        }
        desc.tables = Some(Tables { exp, log });
    }
    Ok(ExtField(Arc::new(desc)))
}

fn clone_desc(d: &FieldDesc) -> FieldDesc {
    FieldDesc {
        p: d.p,
        m: d.m,
        size: d.size,
        modulus: d.modulus.clone(),
        generator: d.generator,
        order_primes: d.order_primes.clone(),
        pow_p: d.pow_p.clone(),
        tables: None,
    }
}

/// Coefficient tail `(c_0, …, c_{m-1})` of the `k`-th tuple in lexicographic
/// order with `c_0` most significant.
fn lex_tail(p: u64, m: u32, mut k: u64) -> Vec<u64> {
    let mut tail = vec![0u64; m as usize];
    for i in (0..m as usize).rev() {
        tail[i] = k % p;
        k /= p;
    }
    tail
}

fn smallest_irreducible(p: u64, m: u32) -> Option<Vec<u64>> {
    let fp = PrimeField::new(p);
    let total = p.checked_pow(m)?;
    // tails with c_0 = 0 are divisible by x
    let first = if m > 1 { total / p } else { 0 };
    (first..total).find_map(|k| {
        let mut c = lex_tail(p, m, k);
        c.push(1);
        let poly = Poly::new(&fp, c.iter().map(|&x| x as u32).collect());
        poly.is_irreducible().then_some(c)
    })
}

/// Independent irreducibility oracle: trial division by every monic
/// polynomial of degree `1..=m/2`.
pub fn irreducible_by_trial_division(p: u64, modulus: &[u64]) -> bool {
    let fp = PrimeField::new(p);
    let f = Poly::new(&fp, modulus.iter().map(|&x| x as u32).collect());
    let m = f.deg() as u32;
    for d in 1..=m / 2 {
        for k in 0..p.pow(d) {
            let mut c = lex_tail(p, d, k);
            c.push(1);
            let g = Poly::new(&fp, c.iter().map(|&x| x as u32).collect());
            if f.rem(&g).is_zero() {
                return false;
            }
        }
    }
    m >= 1
}

impl ExtField {
    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn generator(&self) -> FFElem {
        self.wrap(self.0.generator)
    }

    fn wrap(&self, val: u64) -> FFElem {
        FFElem {
            p: self.0.p as u32,
            m: self.0.m,
            val,
        }
    }

    pub fn contains(&self, x: FFElem) -> bool {
        x.p as u64 == self.0.p && x.m == self.0.m
    }

    /// The element with coefficient vector given by the `k`-th tuple in
    /// lexicographic order.
    pub fn lex_element(&self, k: u64) -> FFElem {
        let tail = lex_tail(self.0.p, self.0.m, k);
        self.from_coords(&tail)
    }

    /// Sort key realising the lexicographic coefficient order.
    pub fn lex_key(&self, x: FFElem) -> u64 {
        let c = self.coords(x);
        c.iter().fold(0u64, |acc, &d| acc * self.0.p + d)
    }

    fn has_full_order(&self, g: FFElem) -> bool {
        if g.val == 0 {
            return false;
        }
        let n = self.0.size - 1;
        self.is_one(self.pow(g, n))
            && self
                .0
                .order_primes
                .iter()
                .all(|&q| !self.is_one(self.pow(g, n / q)))
    }

    fn digits(&self, v: u64) -> [u64; MAX_DEGREE as usize] {
        let mut out = [0u64; MAX_DEGREE as usize];
        let p = self.0.p;
        let mut v = v;
        for d in out.iter_mut().take(self.0.m as usize) {
            *d = v % p;
            v /= p;
        }
        out
    }

    fn pack(&self, d: &[u64]) -> u64 {
        d.iter()
            .take(self.0.m as usize)
            .rev()
            .fold(0u64, |acc, &c| acc * self.0.p + c)
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let desc = &self.0;
        let m = desc.m as usize;
        if m == 1 {
            return numtheory::mul_mod(a, b, desc.p);
        }
        if desc.p == 2 {
            let top = 1u64 << m;
            let modbits = self.pack(&desc.modulus) | top;
            let mut acc = 0u64;
            let mut x = a;
            let mut y = b;
            while y != 0 {
                if y & 1 == 1 {
                    acc ^= x;
                }
                y >>= 1;
                x <<= 1;
                if x & top != 0 {
                    x ^= modbits;
                }
            }
            return acc;
        }
        let p = desc.p;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = [0u64; 2 * MAX_DEGREE as usize];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..m {
                // x^m = -Σ mod_j x^j
                let sub = c * desc.modulus[j] % p;
                prod[k - m + j] = (prod[k - m + j] + p - sub) % p;
            }
        }
        self.pack(&prod[..m])
    }

    /// Discrete logarithm to the fixed generator.
    pub fn discrete_log(&self, x: FFElem) -> Result<u64> {
        if !self.contains(x) {
            return Err(Error::FieldMismatch);
        }
        if x.val == 0 {
            return Err(Error::ZeroElement);
        }
        if let Some(t) = &self.0.tables {
            return Ok(t.log[x.val as usize] as u64);
        }
        let n = self.0.size - 1;
        if self.0.size > MAX_LOG_FIELD_SIZE {
            return Err(Error::TooLarge(format!(
                "discrete log in field of size {}",
                self.0.size
            )));
        }
        // baby-step giant-step
        let step = (n as f64).sqrt().ceil() as u64;
        let g = self.generator();
        let mut baby = HashMap::with_capacity(step as usize);
        let mut cur = self.one();
        for j in 0..step {
            baby.entry(cur.val).or_insert(j);
            cur = self.mul(cur, g);
        }
        let giant = self.inv(self.pow(g, step)).expect("generator is a unit");
        let mut y = x;
        for i in 0..=step {
            if let Some(&j) = baby.get(&y.val) {
                return Ok((i * step + j) % n);
            }
            y = self.mul(y, giant);
        }
        unreachable!("generator has full order")
    }

    pub fn multiplicative_order(&self, x: FFElem) -> Result<u64> {
        if !self.contains(x) {
            return Err(Error::FieldMismatch);
        }
        if x.val == 0 {
            return Err(Error::ZeroElement);
        }
        let mut ord = self.0.size - 1;
        for &q in &self.0.order_primes {
            while ord.is_multiple_of(q) && self.is_one(self.pow(x, ord / q)) {
                ord /= q;
            }
        }
        Ok(ord)
    }

    /// `generator^((p^m − 1)/d)`, of exact order `d`.
    pub fn root_of_unity(&self, d: u64) -> Result<FFElem> {
        let n = self.0.size - 1;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::OrderNotAvailable(d));
        }
        Ok(self.pow(self.generator(), n / d))
    }

    pub fn checked_add(&self, a: FFElem, b: FFElem) -> Result<FFElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: FFElem, b: FFElem) -> Result<FFElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_inv(&self, a: FFElem) -> Result<FFElem> {
        self.check(a)?;
        self.inv(a).ok_or(Error::DivisionByZero)
    }

    pub fn checked_pow(&self, a: FFElem, k: u64) -> Result<FFElem> {
        self.check(a)?;
        Ok(self.pow(a, k))
    }

    fn check(&self, a: FFElem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Element `Σ c_i x^i` for integer coefficients.
    pub fn from_ints(&self, c: &[i64]) -> FFElem {
        let p = self.0.p as i64;
        let v: Vec<u64> = c.iter().map(|&x| x.rem_euclid(p) as u64).collect();
        self.from_coords(&v)
    }
}

impl Field for ExtField {
    type Elem = FFElem;

    fn characteristic(&self) -> u64 {
        self.0.p
    }
    fn degree(&self) -> u32 {
        self.0.m
    }
    fn size(&self) -> u64 {
        self.0.size
    }
    fn zero(&self) -> FFElem {
        self.wrap(0)
    }
    fn one(&self) -> FFElem {
        self.wrap(1)
    }
    fn add(&self, a: FFElem, b: FFElem) -> FFElem {
        debug_assert!(self.contains(a) && self.contains(b));
        let desc = &self.0;
        if desc.p == 2 {
            return self.wrap(a.val ^ b.val);
        }
        if desc.m == 1 {
            return self.wrap((a.val + b.val) % desc.p);
        }
        let da = self.digits(a.val);
        let db = self.digits(b.val);
        let mut s = [0u64; MAX_DEGREE as usize];
        for i in 0..desc.m as usize {
            s[i] = (da[i] + db[i]) % desc.p;
        }
        self.wrap(self.pack(&s))
    }
    fn neg(&self, a: FFElem) -> FFElem {
        let desc = &self.0;
        if desc.p == 2 {
            return a;
        }
        let da = self.digits(a.val);
        let mut s = [0u64; MAX_DEGREE as usize];
        for i in 0..desc.m as usize {
            s[i] = (desc.p - da[i]) % desc.p;
        }
        self.wrap(self.pack(&s))
    }
    fn mul(&self, a: FFElem, b: FFElem) -> FFElem {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.val == 0 || b.val == 0 {
            return self.zero();
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.size - 1;
            let s = (t.log[a.val as usize] as u64 + t.log[b.val as usize] as u64) % n;
            return self.wrap(t.exp[s as usize] as u64);
        }
        self.wrap(self.slow_mul(a.val, b.val))
    }
    fn inv(&self, a: FFElem) -> Option<FFElem> {
        if a.val == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.size - 1;
            let l = t.log[a.val as usize] as u64;
            return Some(self.wrap(t.exp[((n - l) % n) as usize] as u64));
        }
        Some(self.pow(a, self.0.size - 2))
    }
    fn from_int(&self, n: i64) -> FFElem {
        self.wrap(n.rem_euclid(self.0.p as i64) as u64)
    }
    fn element(&self, index: u64) -> FFElem {
        self.wrap(index)
    }
    fn index(&self, a: FFElem) -> u64 {
        a.val
    }
    fn coords(&self, a: FFElem) -> Vec<u64> {
        self.digits(a.val)[..self.0.m as usize].to_vec()
    }
    fn from_coords(&self, c: &[u64]) -> FFElem {
        let p = self.0.p;
        let v: Vec<u64> = (0..self.0.m as usize)
            .map(|i| c.get(i).copied().unwrap_or(0) % p)
            .collect();
        self.wrap(self.pack(&v))
    }
    fn same_as(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m
    }
    fn frobenius(&self, a: FFElem) -> FFElem {
        self.pow(a, self.0.p)
    }
}

/// The deterministic embedding `sub ↪ sup`: the polynomial generator of
/// `sub` is sent to the lexicographically smallest root of `sub`'s modulus
/// in `sup`.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: ExtField,
    sup: ExtField,
    /// Images of `1, x, …, x^(m_sub − 1)`.
    basis: Vec<FFElem>,
    /// Left inverse of the coordinate matrix of `basis`, for preimages.
    left_inverse: Matrix<PrimeField>,
}

impl Embedding {
    pub fn new(sub: &ExtField, sup: &ExtField) -> Result<Self> {
        if sub.p() != sup.p() || !sup.m().is_multiple_of(sub.m()) {
            return Err(Error::NotASubfield {
                sub: sub.m(),
                sup: sup.m(),
            });
        }
        let alpha = if sub.m() == 1 {
            sup.zero()
        } else {
            let f = Poly::new(
                sup,
                sub.modulus().iter().map(|&c| sup.from_int(c as i64)).collect(),
            );
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            let roots = f.roots(&mut rng);
            *roots
                .iter()
                .min_by_key(|&&r| sup.lex_key(r))
                .ok_or(Error::NotASubfield {
                    sub: sub.m(),
                    sup: sup.m(),
                })?
        };
        Self::with_image(sub, sup, alpha)
    }

    /// Embedding sending the polynomial generator of `sub` to `alpha`.
    fn with_image(sub: &ExtField, sup: &ExtField, alpha: FFElem) -> Result<Self> {
        let ms = sub.m() as usize;
        let mut basis = Vec::with_capacity(ms);
        let mut cur = sup.one();
        for _ in 0..ms {
            basis.push(cur);
            cur = sup.mul(cur, alpha);
        }
        let fp = PrimeField::new(sup.p());
        let mut cols = Matrix::zero(&fp, sup.m() as usize, ms);
        for (j, &b) in basis.iter().enumerate() {
            for (i, c) in sup.coords(b).into_iter().enumerate() {
                cols.set(i, j, c as u32);
            }
        }
        let left_inverse = cols.left_inverse().ok_or(Error::NotASubfield {
            sub: sub.m(),
            sup: sup.m(),
        })?;
        Ok(Embedding {
            sub: sub.clone(),
            sup: sup.clone(),
            basis,
            left_inverse,
        })
    }

    pub fn sub(&self) -> &ExtField {
        &self.sub
    }

    pub fn sup(&self) -> &ExtField {
        &self.sup
    }

    pub fn apply(&self, x: FFElem) -> FFElem {
        debug_assert!(self.sub.contains(x));
        let sup = &self.sup;
        self.sub
            .coords(x)
            .iter()
            .zip(&self.basis)
            .fold(sup.zero(), |acc, (&c, &b)| {
                sup.add(acc, sup.mul(sup.from_int(c as i64), b))
            })
    }

    /// The unique `x` in `sub` with `apply(x) = y`, if `y` lies in the image.
    pub fn preimage(&self, y: FFElem) -> Option<FFElem> {
        let v: Vec<u32> = self.sup.coords(y).iter().map(|&c| c as u32).collect();
        let c = self.left_inverse.mul_vec(&v);
        let x = self
            .sub
            .from_coords(&c.iter().map(|&t| t as u64).collect::<Vec<_>>());
        (self.apply(x) == y).then_some(x)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Embedding) -> Result<Embedding> {
        if !self.sup.same_as(&next.sub) {
            return Err(Error::FieldMismatch);
        }
        let alpha = next.apply(self.basis.get(1).copied().unwrap_or(self.sup.zero()));
        let alpha = if self.sub.m() == 1 { next.sup.zero() } else { alpha };
        Embedding::with_image(&self.sub, &next.sup, alpha)
    }
}

/// Convenience form of [`Embedding::new`] followed by [`Embedding::apply`].
pub fn embed(x: FFElem, sub: &ExtField, sup: &ExtField) -> Result<FFElem> {
    if !sub.contains(x) {
        return Err(Error::FieldMismatch);
    }
    Ok(Embedding::new(sub, sup)?.apply(x))
}

/// Degree over `F_p` of `l̃ = l(μ_{f'})` where `l = F_{q^f}`, `q = p^a`.
pub fn tilde_degree(p: u64, a: u32, f: u64) -> u64 {
    let fprime = numtheory::prime_to_p_part(f, p);
    let ord = numtheory::mult_order(p, fprime).unwrap_or(1);
    numtheory::lcm(a as u64 * f, ord)
}

/// `l̃ = l(μ_{f'})` with `f'` the prime-to-`p` part of `f`.
pub fn tilde_field(p: u64, a: u32, f: u64) -> Result<ExtField> {
    let m = tilde_degree(p, a, f);
    if m > MAX_DEGREE as u64 {
        return Err(Error::DegreeTooLarge { p, m });
    }
    cached_field(p, m as u32)
}

/// The tower `k ⊂ l ⊂ l̃`, with `k ↪ l̃` the composite of the two steps.
#[derive(Clone, Debug)]
pub struct Tower {
    pub k: ExtField,
    pub l: ExtField,
    pub tilde: ExtField,
    pub k_to_l: Embedding,
    pub l_to_tilde: Embedding,
    pub k_to_tilde: Embedding,
}

impl Tower {
    pub fn new(p: u64, a: u32, f: u64) -> Result<Self> {
        let lm = a as u64 * f;
        if lm > MAX_DEGREE as u64 {
            return Err(Error::DegreeTooLarge { p, m: lm });
        }
        let k = make_field(p, a)?;
        let l = make_field(p, lm as u32)?;
        let tilde = tilde_field(p, a, f)?;
        let k_to_l = Embedding::new(&k, &l)?;
        let l_to_tilde = Embedding::new(&l, &tilde)?;
        let k_to_tilde = k_to_l.then(&l_to_tilde)?;
        Ok(Tower {
            k,
            l,
            tilde,
            k_to_l,
            l_to_tilde,
            k_to_tilde,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_f2() {
        let f = make_field(2, 1).unwrap();
        assert_eq!(f.generator(), f.one());
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn f4_generator_order_three() {
        let f = make_field(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let g = f.generator();
        assert_eq!(f.multiplicative_order(g).unwrap(), 3);
        assert_eq!(f.add(g, g), f.zero());
    }

    #[test]
    fn f9_generator_exhaustive_order() {
        let f = make_field(3, 2).unwrap();
        let g = f.generator();
        let mut x = g;
        let mut k = 1;
        while x != f.one() {
            x = f.mul(x, g);
            k += 1;
        }
        assert_eq!(k, 8);
        assert_eq!(f.pow(g, 8), f.one());
    }

    #[test]
    fn f4_product_against_brute_force_table() {
        // brute-force multiplication table of F_2[x]/(x^2+x+1)
        let f = make_field(2, 2).unwrap();
        let table = |a: [u32; 2], b: [u32; 2]| -> [u32; 2] {
            let c0 = a[0] * b[0];
            let c1 = a[0] * b[1] + a[1] * b[0];
            let c2 = a[1] * b[1];
            // x^2 = x + 1
            [(c0 + c2) % 2, (c1 + c2) % 2]
        };
        for a in 0..4u64 {
            for b in 0..4u64 {
                let ea = f.element(a);
                let eb = f.element(b);
                let ca = f.coords(ea);
                let cb = f.coords(eb);
                let want = table([ca[0] as u32, ca[1] as u32], [cb[0] as u32, cb[1] as u32]);
                let got = f.coords(f.mul(ea, eb));
                assert_eq!(got, vec![want[0] as u64, want[1] as u64]);
            }
        }
        let g = f.generator();
        assert_eq!(f.mul(g, f.mul(g, g)), f.one());
    }

    #[test]
    fn orders_and_logs() {
        let f8 = make_field(2, 3).unwrap();
        assert_eq!(f8.multiplicative_order(f8.generator()).unwrap(), 7);
        let f16 = make_field(2, 4).unwrap();
        let g = f16.generator();
        let g2 = f16.pow(g, 2);
        let mut k = 1;
        let mut x = g2;
        while x != f16.one() {
            x = f16.mul(x, g2);
            k += 1;
        }
        assert_eq!(f16.multiplicative_order(g2).unwrap(), k);
        assert_eq!(k, 15);
        assert_eq!(f16.multiplicative_order(f16.pow(g, 3)).unwrap(), 5);
        assert_eq!(f16.discrete_log(f16.pow(g, 3)).unwrap(), 3);
        assert_eq!(f16.discrete_log(f16.one()).unwrap(), 0);
        assert_eq!(f16.discrete_log(g).unwrap(), 1);
        assert_eq!(f16.discrete_log(f16.zero()), Err(Error::ZeroElement));
        assert_eq!(f16.multiplicative_order(f16.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn bsgs_log_on_untabled_field() {
        let f = make_field(2, 18).unwrap();
        let g = f.generator();
        for k in [0u64, 1, 5, 1000, 200_000, (1 << 18) - 2] {
            assert_eq!(f.discrete_log(f.pow(g, k)).unwrap(), k);
        }
    }

    #[test]
    fn roots_of_unity() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.root_of_unity(3).unwrap(), f4.generator());
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.root_of_unity(2).unwrap(), f9.from_int(-1));
        let f64 = make_field(2, 6).unwrap();
        let w = f64.root_of_unity(3).unwrap();
        assert_ne!(w, f64.one());
        assert_eq!(f64.pow(w, 3), f64.one());
        assert_eq!(f4.root_of_unity(5), Err(Error::OrderNotAvailable(5)));
    }

    #[test]
    fn embeddings() {
        let f2 = make_field(2, 1).unwrap();
        let f4 = make_field(2, 2).unwrap();
        let f16 = make_field(2, 4).unwrap();
        assert_eq!(embed(f2.one(), &f2, &f4).unwrap(), f4.one());
        assert_eq!(embed(f4.zero(), &f4, &f16).unwrap(), f16.zero());
        let w = f4.generator();
        let img = embed(w, &f4, &f16).unwrap();
        assert_eq!(f16.multiplicative_order(img).unwrap(), 3);
        let f8 = make_field(2, 3).unwrap();
        assert!(matches!(
            Embedding::new(&f4, &f8),
            Err(Error::NotASubfield { .. })
        ));
        let e = Embedding::new(&f4, &f16).unwrap();
        for x in f4.elements() {
            assert_eq!(e.preimage(e.apply(x)), Some(x));
        }
        assert_eq!(e.preimage(f16.generator()), None);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let sub = make_field(3, 2).unwrap();
        let sup = make_field(3, 4).unwrap();
        let e = Embedding::new(&sub, &sup).unwrap();
        for x in sub.elements() {
            for y in sub.elements() {
                assert_eq!(e.apply(sub.add(x, y)), sup.add(e.apply(x), e.apply(y)));
                assert_eq!(e.apply(sub.mul(x, y)), sup.mul(e.apply(x), e.apply(y)));
            }
        }
    }

    #[test]
    fn tilde_fields() {
        assert_eq!(tilde_degree(2, 1, 3), 6);
        assert_eq!(tilde_field(2, 1, 3).unwrap().size(), 64);
        assert_eq!(tilde_degree(2, 1, 2), 2);
        assert_eq!(tilde_degree(2, 2, 1), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NonPrime(4));
        assert!(matches!(make_field(2, 25), Err(Error::DegreeTooLarge { .. })));
        assert!(matches!(make_field(2, 0), Err(Error::DegreeTooLarge { .. })));
        let f4 = make_field(2, 2).unwrap();
        let f8 = make_field(2, 3).unwrap();
        assert_eq!(
            f4.checked_mul(f4.one(), f8.one()),
            Err(Error::FieldMismatch)
        );
        assert_eq!(f4.checked_inv(f4.zero()), Err(Error::DivisionByZero));
    }
}
