//! Dense polynomials over a prime field GF(p), coefficients constant term first.
//!
//! Only used while building extension fields: modulus search, irreducibility
//! and raw element multiplication before the log tables exist.

pub(crate) fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn is_zero(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime so a^(p-2) is the inverse
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = (a % p) as u64;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out = vec![0u32; len];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if is_zero(a) || is_zero(b) {
        return vec![0];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo `m` (m nonzero).
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = degree(m).expect("modulus must be nonzero");
    let lead_inv = inv_mod(m[dm], p);
    let mut r: Vec<u32> = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = r[dr] as u64 * lead_inv as u64 % p as u64;
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = factor * c as u64 % p as u64;
            r[i + shift] = ((r[i + shift] as u64 + p as u64 - sub) % p as u64) as u32;
        }
    }
    trim(r)
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn pow_poly_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !is_zero(&y) {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    // normalize to monic
    if let Some(d) = degree(&x) {
        let inv = inv_mod(x[d], p);
        for c in x.iter_mut() {
            *c = (*c as u64 * inv as u64 % p as u64) as u32;
        }
    }
    x
}

/// Rabin-style irreducibility test: `f` of degree e is irreducible over GF(p)
/// iff gcd(f, x^(p^d) - x) = 1 for every d <= e/2.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(e) = degree(f) else { return false };
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    let mut frob = x.clone();
    for _ in 1..=e / 2 {
        frob = pow_poly_mod(&frob, p as u64, f, p);
        let diff = sub(&frob, &x, p);
        let g = gcd(f, &diff, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

pub(crate) fn is_prime(n: u64) -> bool {
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

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
