//! Integer helpers for primality and modular orders.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a.lcm(&b)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(q, _)| q).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| d * d <= n && n.is_multiple_of(*d)).collect();
    let upper: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|d| d * d != n).collect();
    out.extend(upper);
    out
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `x` modulo `n`, with the convention `ord(x mod 1) = 1`.
///
/// Returns `None` when `gcd(x, n) != 1`.
pub fn mult_order(x: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd(x % n, n) != 1 {
        return None;
    }
    let phi = euler_phi(n);
    let mut ord = phi;
    for (q, _) in factorize(phi) {
        while ord.is_multiple_of(q) && pow_mod(x, ord / q, n) == 1 {
            ord /= q;
        }
    }
    Some(ord)
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (q, _)| acc / q * (q - 1))
}

/// Largest divisor of `n` coprime to `p`.
pub fn prime_to_p_part(mut n: u64, p: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Inverse of `x` modulo `n` (n >= 1); `None` when not a unit.
pub fn inv_mod(x: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, a, _) = ext_gcd(x as i128 % n as i128, n as i128);
    if g != 1 {
        return None;
    }
    Some(a.rem_euclid(n as i128) as u64)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// `p^k`, or `None` on overflow.
pub fn checked_pow(p: u64, k: u32) -> Option<u64> {
    p.checked_pow(k)
}

/// Number of monic irreducible polynomials of degree `d` over F_p with nonzero
/// constant term, `(1/d) Σ_{j|d} μ(d/j)(p^j − 1)`.
pub fn count_irreducible_nonzero_constant(p: u64, d: u64) -> u64 {
    let mut total: i128 = 0;
    for j in divisors(d) {
        total += mobius(d / j) as i128 * (p.pow(j as u32) as i128 - 1);
    }
    (total / d as i128) as u64
}
