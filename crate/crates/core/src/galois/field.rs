use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::primepoly;
use crate::config::DEFAULT_FIELD_CAP;
use crate::error::{QctError, Result};

/// Odd-characteristic fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

/// A finite field GF(p^e) with a fixed modulus and primitive element.
///
/// Elements are `u32` indices: the base-p digits of an index are the
/// coefficients of the element's polynomial representative, constant term
/// first. Every prime-field constant `c < p` therefore has index `c` in every
/// field of characteristic p.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

struct FieldData {
    p: u32,
    e: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: u32,
    // exp is stored twice over so mul needs no reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// Serialized field descriptor `{p, e, modulus, generator}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
    pub generator: u32,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.e)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.order)
    }
}

/// Builds GF(p^e) with the default size cap.
pub fn build_field(p: u32, e: u32) -> Result<Field> {
    Field::new(p, e)
}

impl Field {
    pub fn new(p: u32, e: u32) -> Result<Field> {
        Field::with_cap(p, e, DEFAULT_FIELD_CAP)
    }

    /// GF(q) for a prime power q.
    pub fn of_order(q: u32) -> Result<Field> {
        let factors = primepoly::prime_factors(q as u64);
        match factors.as_slice() {
            [p] => {
                let mut e = 0;
                let mut r = q;
                while r > 1 {
                    r /= *p as u32;
                    e += 1;
                }
                Field::new(*p as u32, e)
            }
            _ => Err(QctError::InvalidField(format!("{q} is not a prime power"))),
        }
    }

    pub fn with_cap(p: u32, e: u32, cap: u64) -> Result<Field> {
        if !primepoly::is_prime(p as u64) {
            return Err(QctError::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(QctError::InvalidField(
                "extension degree must be positive".into(),
            ));
        }
        let order = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if order > cap || order > u32::MAX as u64 {
            return Err(QctError::FieldTooLarge {
                p: p as u64,
                e,
                cap,
            });
        }
        let order = order as u32;
        let (modulus, generator) = if e == 1 {
            let g = smallest_primitive_root(p);
            // x - g
            (vec![(p - g) % p, 1], g)
        } else {
            let modulus = lowest_irreducible(p, e);
            let generator = smallest_generator(p, e, &modulus)
                .ok_or_else(|| QctError::InvalidField("no primitive element".into()))?;
            (modulus, generator)
        };
        Ok(Field(Arc::new(FieldData::build(
            p, e, order, modulus, generator,
        )?)))
    }

    /// Rebuilds a field from its descriptor, checking it matches the
    /// deterministic construction for `(p, e)`.
    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Field> {
        let f = Field::new(d.p, d.e)?;
        if f.0.modulus != d.modulus || f.0.generator != d.generator {
            return Err(QctError::MalformedRecord(format!(
                "field descriptor for GF({}^{}) does not match the canonical modulus {:?} / generator {}",
                d.p, d.e, f.0.modulus, f.0.generator
            )));
        }
        Ok(f)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.0.p,
            e: self.0.e,
            modulus: self.0.modulus.clone(),
            generator: self.0.generator,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn generator(&self) -> u32 {
        self.0.generator
    }

    pub fn is_binary_char(&self) -> bool {
        self.0.p == 2
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.order
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let d = &*self.0;
        if d.p == 2 {
            a ^ b
        } else if let Some(t) = &d.add {
            t[(a * d.order + b) as usize]
        } else {
            digitwise(a, b, d.p, |x, y| (x + y) % d.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.0;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let d = &*self.0;
        let l = d.log[a as usize];
        Some(d.exp[((d.order - 1 - l) % (d.order - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = &*self.0;
        let m = (d.order - 1) as u64;
        let l = d.log[a as usize] as u64 * (e % m) % m;
        d.exp[l as usize]
    }

    /// generator^k
    pub fn exp(&self, k: u64) -> u32 {
        let d = &*self.0;
        d.exp[(k % (d.order as u64 - 1)) as usize]
    }

    /// Discrete log base the generator; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let m = self.0.order as u64 - 1;
        Some(m / gcd(l, m))
    }

    /// Coefficient vector over GF(p), length e, constant term first.
    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut out = Vec::with_capacity(self.0.e as usize);
        let mut x = a;
        for _ in 0..self.0.e {
            out.push(x % p);
            x /= p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u32> {
        if coeffs.len() > self.0.e as usize {
            return Err(QctError::InvalidField(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.0.e
            )));
        }
        let p = self.0.p;
        let mut idx = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= p {
                return Err(QctError::InvalidField(format!(
                    "coefficient {c} not reduced mod {p}"
                )));
            }
            idx = idx * p + c;
        }
        Ok(idx)
    }

    /// Whether `a` is a valid element index.
    pub fn contains(&self, a: u32) -> bool {
        a < self.0.order
    }

    /// The q with q^2 = |field|, when the order is a square.
    pub fn conjugation_base(&self) -> Option<u32> {
        if !self.0.e.is_multiple_of(2) {
            return None;
        }
        Some(self.0.p.pow(self.0.e / 2))
    }

    /// x -> x^q on GF(q^2).
    pub fn conjugate(&self, x: u32, q: u32) -> Result<u32> {
        match self.conjugation_base() {
            Some(base) if base == q => Ok(self.pow(x, q as u64)),
            _ => Err(QctError::FieldMismatch(format!(
                "{self} is not GF({q}^2), so x -> x^{q} is not its involution"
            ))),
        }
    }

    /// Renders an element as `0`, `1`, `w` or `w^k` (w = fixed generator).
    pub fn format(&self, a: u32) -> String {
        match self.log(a) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "w".into(),
            Some(k) => format!("w^{k}"),
        }
    }

    /// Parses `0`, `1`, `w`, `w^k`, a prime-field constant `c < p`, or a raw
    /// index written `#n`.
    pub fn parse(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        if let Some(raw) = s.strip_prefix('#') {
            let idx: u32 = raw
                .parse()
                .map_err(|_| QctError::InvalidField(format!("bad element index {s:?}")))?;
            if !self.contains(idx) {
                return Err(QctError::InvalidField(format!(
                    "index {idx} outside {self}"
                )));
            }
            return Ok(idx);
        }
        if s == "w" {
            return Ok(self.0.generator);
        }
        if let Some(k) = s.strip_prefix("w^") {
            let k: u64 = k
                .parse()
                .map_err(|_| QctError::InvalidField(format!("bad exponent in {s:?}")))?;
            return Ok(self.exp(k));
        }
        let c: u32 = s
            .parse()
            .map_err(|_| QctError::InvalidField(format!("cannot parse element {s:?}")))?;
        if c >= self.0.p {
            return Err(QctError::InvalidField(format!(
                "constant {c} is not in the prime field GF({})",
                self.0.p
            )));
        }
        Ok(c)
    }
}

impl FieldData {
    fn build(p: u32, e: u32, order: u32, modulus: Vec<u32>, generator: u32) -> Result<FieldData> {
        let n = (order - 1) as usize;
        let mut exp = Vec::with_capacity(2 * n.max(1));
        let mut log = vec![0u32; order as usize];
        let g = to_digits(generator, p, e);
        let mut cur = vec![1u32];
        for k in 0..n {
            let idx = from_digits(&cur, p);
            if k > 0 && idx == 1 {
                return Err(QctError::InvalidField(format!(
                    "generator {generator} has order {k} < {n}"
                )));
            }
            exp.push(idx);
            log[idx as usize] = k as u32;
            cur = primepoly::mul_mod(&cur, &g, &modulus, p);
        }
        if n == 0 {
            exp.push(1);
        }
        let first = exp.clone();
        exp.extend(first);
        let neg = (0..order)
            .map(|a| digitwise(a, 0, p, |x, _| (p - x) % p))
            .collect();
        let add = if p != 2 && order <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    t[(a * order + b) as usize] = digitwise(a, b, p, |x, y| (x + y) % p);
                }
            }
            Some(t)
        } else {
            None
        };
        Ok(FieldData {
            p,
            e,
            order,
            modulus,
            generator,
            exp,
            log,
            add,
            neg,
        })
    }
}

fn digitwise(mut a: u32, mut b: u32, p: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
    let mut out = 0u32;
    let mut place = 1u32;
    while a > 0 || b > 0 || place == 1 {
        out += f(a % p, b % p) * place;
        a /= p;
        b /= p;
        if a == 0 && b == 0 {
            break;
        }
        place *= p;
    }
    out
}

fn to_digits(mut a: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(a % p);
        a /= p;
    }
    primepoly::trim(out)
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Lowest monic irreducible of degree e, ordering candidates by the integer
/// whose base-p digits are the lower coefficients (c_{e-1} most significant).
fn lowest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for c in 0..count {
        let mut f = to_digits_fixed(c, p, e);
        f.push(1);
        if f[0] != 0 && primepoly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn to_digits_fixed(mut c: u64, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = (c % p as u64) as u32;
            c /= p as u64;
            d
        })
        .collect()
}

fn smallest_generator(p: u32, e: u32, modulus: &[u32]) -> Option<u32> {
    let order = (p as u64).pow(e);
    let m = order - 1;
    let factors = primepoly::prime_factors(m);
    (1..order as u32).find(|&cand| {
        let g = to_digits(cand, p, e);
        factors
            .iter()
            .all(|&r| primepoly::pow_poly_mod(&g, m / r, modulus, p) != vec![1])
    })
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let m = p - 1;
    let factors = primepoly::prime_factors(m as u64);
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| primepoly::pow_mod(g, m / r as u32, p) != 1)
        })
        .expect("every prime has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_prime_field() {
        let f = build_field(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        // x + 1
        assert_eq!(f.modulus(), &[1, 1]);
        assert_eq!(f.generator(), 1);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf4_modulus_is_x2_x_1() {
        let f = build_field(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let w = f.generator();
        // w^2 = w + 1
        assert_eq!(f.mul(w, w), f.add(w, 1));
    }

    #[test]
    fn gf81_generator_order_by_exponentiation() {
        let f = build_field(3, 4).unwrap();
        assert_eq!(f.order(), 81);
        assert!(primepoly::is_irreducible(f.modulus(), 3));
        let g = f.generator();
        let mut acc = 1u32;
        let mut order = 0;
        loop {
            acc = f.mul(acc, g);
            order += 1;
            if acc == 1 {
                break;
            }
        }
        assert_eq!(order, 80);
    }

    #[test]
    fn rejects_non_prime_and_oversize() {
        assert!(matches!(build_field(4, 1), Err(QctError::NotPrime(4))));
        assert!(matches!(
            build_field(2, 40),
            Err(QctError::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn field_axioms_gf9_and_gf16() {
        for (p, e) in [(3, 2), (2, 4), (5, 2)] {
            let f = build_field(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, f.generator()] {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let f = build_field(3, 3).unwrap();
        let d = f.descriptor();
        let json = serde_json::to_string(&d).unwrap();
        let back: FieldDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(Field::from_descriptor(&back).unwrap(), f);
        let mut bad = d.clone();
        bad.generator += 1;
        assert!(Field::from_descriptor(&bad).is_err());
    }

    #[test]
    fn parse_and_format() {
        let f = build_field(2, 4).unwrap();
        for a in f.elements() {
            assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        }
        assert!(f.parse("2").is_err());
        assert_eq!(f.parse("#7").unwrap(), 7);
    }

    #[test]
    fn conjugation_is_involution_gf9() {
        let f = build_field(3, 2).unwrap();
        for x in f.elements() {
            let c = f.conjugate(x, 3).unwrap();
            assert_eq!(f.conjugate(c, 3).unwrap(), x);
        }
        assert_eq!(f.conjugate(0, 3).unwrap(), 0);
        assert_eq!(f.conjugate(1, 3).unwrap(), 1);
        assert!(f.conjugate(1, 9).is_err());
    }

    #[test]
    fn gf4_conjugate_of_w_is_w_squared() {
        let f = build_field(2, 2).unwrap();
        let w = f.generator();
        assert_eq!(f.conjugate(w, 2).unwrap(), f.mul(w, w));
    }
}
