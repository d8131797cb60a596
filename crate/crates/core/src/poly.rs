//! Dense univariate polynomials over a [`Field`], with the factorisation
//! routines behind irreducibility tests and root finding.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;

#[derive(Clone, Debug)]
pub struct Poly<F: Field> {
    field: F,
    /// Low degree first, no trailing zeros.
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|&c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &F) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &F) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: &F) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(self.coeffs[0])
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> F::Elem {
        self.coeffs.last().copied().unwrap_or(self.field.zero())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let li = self.field.inv(self.lead()).expect("nonzero lead");
        self.scale(li)
    }

    pub fn scale(&self, c: F::Elem) -> Self {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Euclidean division; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lead = f.inv(d.lead()).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if f.is_zero(c) {
                continue;
            }
            for (j, &dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, dj));
            }
        }
        rem.truncate(dd);
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mulmod(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn powmod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Poly::one(&self.field).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mulmod(&acc, m);
            if e.bit(i) {
                acc = acc.mulmod(&base, m);
            }
        }
        acc
    }

    /// Sort key used to order factor lists deterministically.
    pub fn sort_key(&self) -> (usize, Vec<u64>) {
        (
            self.coeffs.len(),
            self.coeffs.iter().map(|&c| self.field.index(c)).collect(),
        )
    }

    /// Square-free decomposition: `self = lead · Π g_i^{k_i}` with pairwise
    /// coprime square-free monic `g_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let f = &self.field;
        let p = f.characteristic() as u32;
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let a = self.monic();
        let c0 = a.gcd(&a.derivative());
        let mut w = a.div_exact(&c0);
        let mut c = c0;
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if fac.deg() > 0 {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if !c.is_one() {
            // c is a polynomial in x^p
            let root: Vec<F::Elem> = c
                .coeffs
                .iter()
                .step_by(p as usize)
                .map(|&x| f.pth_root(x))
                .collect();
            let r = Poly::new(f, root);
            for (g, k) in r.squarefree_decomposition() {
                out.push((g, k * p));
            }
        }
        out
    }

    /// Distinct-degree factorisation of a monic square-free polynomial.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let f = &self.field;
        let q = f.size();
        let x = Poly::x(f);
        let mut out = Vec::new();
        let mut rest = self.monic();
        let mut h = x.rem(&rest);
        let mut i = 1;
        while rest.deg() >= 2 * i {
            h = h.powmod(q, &rest);
            let g = rest.gcd(&h.sub(&x));
            if !g.is_one() {
                rest = rest.div_exact(&g);
                h = h.rem(&rest);
                out.push((g, i));
            }
            i += 1;
        }
        if rest.deg() > 0 {
            let d = rest.deg();
            out.push((rest, d));
        }
        out
    }

    /// Splits a monic square-free product of irreducibles of degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Self> {
        let f = &self.field;
        let n = self.deg();
        if n == d {
            return vec![self.monic()];
        }
        let p = f.characteristic();
        let q = f.size();
        loop {
            let coeffs: Vec<F::Elem> = (0..n).map(|_| f.element(rng.gen_range(0..q))).collect();
            let a = Poly::new(f, coeffs);
            if a.deg() == 0 {
                continue;
            }
            let b = if p == 2 {
                // absolute trace to F_2 of F_{q^d}
                let steps = f.degree() as usize * d;
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..steps {
                    t = t.mulmod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
                a.powmod_big(&e, self).sub(&Poly::one(f))
            };
            let g = self.gcd(&b);
            if g.deg() > 0 && g.deg() < n {
                let h = self.div_exact(&g);
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorisation into monic irreducibles with multiplicities,
    /// sorted by [`Poly::sort_key`].
    pub fn factor(&self, rng: &mut ChaCha8Rng) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        for (g, k) in self.squarefree_decomposition() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d, rng) {
                    out.push((irr, k));
                }
            }
        }
        out.sort_by_key(|(g, k)| (g.sort_key(), *k));
        out
    }

    /// Distinct roots in the base field, sorted by element index.
    pub fn roots(&self, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
        let f = &self.field;
        if self.deg() == 0 {
            return Vec::new();
        }
        let x = Poly::x(f);
        let m = self.monic();
        let split = m.gcd(&x.powmod(f.size(), &m).sub(&x));
        if split.deg() == 0 {
            return Vec::new();
        }
        let mut roots: Vec<F::Elem> = split
            .equal_degree(1, rng)
            .into_iter()
            .map(|l| f.neg(l.coeff(0)))
            .collect();
        roots.sort_by_key(|&r| f.index(r));
        roots
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let f = &self.field;
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let m = self.monic();
        let x = Poly::x(f);
        let q = f.size();
        // x^{q^k} mod m for k = 0..=n
        let mut frob = vec![x.rem(&m)];
        for k in 1..=n {
            let prev = frob[k - 1].clone();
            frob.push(prev.powmod(q, &m));
        }
        if !frob[n].sub(&x).rem(&m).is_zero() {
            return false;
        }
        for l in crate::numtheory::prime_divisors(n as u64) {
            let k = n / l as usize;
            if !m.gcd(&frob[k].sub(&x)).is_one() {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand::SeedableRng;

    fn p2(c: &[u32]) -> Poly<PrimeField> {
        Poly::new(&PrimeField::new(2), c.to_vec())
    }

    #[test]
    fn rabin_small_degrees_f2() {
        assert!(p2(&[1, 1, 1]).is_irreducible());
        assert!(!p2(&[1, 0, 1]).is_irreducible());
        assert!(p2(&[1, 1, 0, 1]).is_irreducible());
        assert!(!p2(&[1, 1, 1, 1]).is_irreducible());
        assert!(p2(&[1, 1, 0, 0, 1]).is_irreducible());
        // (x^2+x+1)^2
        assert!(!p2(&[1, 0, 1, 0, 1]).is_irreducible());
    }

    #[test]
    fn factor_recombines() {
        let f = PrimeField::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // (x+1)^3 (x^2+1) x
        let a = Poly::new(&f, vec![1, 1]);
        let b = Poly::new(&f, vec![1, 0, 1]);
        let g = a.mul(&a).mul(&a).mul(&b).mul(&Poly::x(&f));
        let fac = g.factor(&mut rng);
        let mut prod = Poly::one(&f);
        for (h, k) in &fac {
            assert!(h.is_irreducible());
            for _ in 0..*k {
                prod = prod.mul(h);
            }
        }
        assert_eq!(prod, g);
        assert_eq!(fac.len(), 3);
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = PrimeField::new(5);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = Poly::new(&f, vec![4, 0, 1]); // x^2 - 1
        assert_eq!(g.roots(&mut rng), vec![1, 4]);
        let h = Poly::new(&f, vec![2, 0, 1]); // x^2 + 2, irreducible mod 5
        assert!(h.roots(&mut rng).is_empty());
    }
}
