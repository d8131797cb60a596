//! The `Field` abstraction shared by the linear algebra, polynomial and
//! module-theoretic code, and the prime field `F_p`.

use std::fmt::Debug;
use std::hash::Hash;

/// A finite field together with its element encoding.
///
/// Elements are plain `Copy` values and all arithmetic goes through the
/// field value, whose parameters are chosen at run time.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Copy + Eq + Ord + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    /// Degree over the prime field.
    fn degree(&self) -> u32;
    fn size(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    /// Image of an integer under `Z -> F_p -> F`.
    fn from_int(&self, n: i64) -> Self::Elem;

    /// Enumeration of the field: `element(0) = 0`, `element(1) = 1`, bijective
    /// on `[0, size)`.
    fn element(&self, index: u64) -> Self::Elem;
    fn index(&self, a: Self::Elem) -> u64;

    /// Coordinates over `F_p` in the fixed polynomial basis `1, x, …, x^(m-1)`.
    fn coords(&self, a: Self::Elem) -> Vec<u64>;
    fn from_coords(&self, c: &[u64]) -> Self::Elem;

    /// Whether `other` denotes the same field.
    fn same_as(&self, other: &Self) -> bool;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn is_one(&self, a: Self::Elem) -> bool {
        a == self.one()
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    fn pow(&self, a: Self::Elem, mut k: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x ↦ x^p`.
    fn frobenius(&self, a: Self::Elem) -> Self::Elem {
        self.pow(a, self.characteristic())
    }

    /// Inverse of the Frobenius, `x ↦ x^(p^(m-1))`.
    fn pth_root(&self, a: Self::Elem) -> Self::Elem {
        let mut x = a;
        for _ in 1..self.degree() {
            x = self.frobenius(x);
        }
        x
    }

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.size()).map(move |i| self.element(i)))
    }
}

/// The prime field `F_p` with elements stored as residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// `p` is assumed prime; callers validate through [`crate::ffield::make_field`]
    /// or [`crate::numtheory::is_prime`].
    pub fn new(p: u64) -> Self {
        assert!((2..=u32::MAX as u64).contains(&p), "prime out of range");
        PrimeField { p: p as u32 }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn degree(&self) -> u32 {
        1
    }
    fn size(&self) -> u64 {
        self.p as u64
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }
    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }
    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn element(&self, index: u64) -> u32 {
        index as u32
    }
    fn index(&self, a: u32) -> u64 {
        a as u64
    }
    fn coords(&self, a: u32) -> Vec<u64> {
        vec![a as u64]
    }
    fn from_coords(&self, c: &[u64]) -> u32 {
        c.first().map_or(0, |&x| (x % self.p as u64) as u32)
    }
    fn same_as(&self, other: &Self) -> bool {
        self.p == other.p
    }
    fn frobenius(&self, a: u32) -> u32 {
        a
    }
    fn pth_root(&self, a: u32) -> u32 {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_axioms_f7() {
        let f = PrimeField::new(7);
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(f.sub(f.add(a, b), b), a);
                if b != 0 {
                    assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
                }
            }
        }
        assert_eq!(f.from_int(-1), 6);
        assert_eq!(f.inv(0), None);
    }
}
