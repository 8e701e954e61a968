use std::fmt;
use std::sync::Arc;

use super::field::Field;
use crate::error::{QctError, Result};

const NOT_IN_SUBFIELD: u32 = u32::MAX;

/// A subfield GF(q) embedded in an extension GF(q^m), both of characteristic p.
///
/// The extension has its own GF(p) modulus of degree e*m; the subfield is
/// embedded by sending its defining root to the smallest-index root of the
/// subfield modulus in the extension.
#[derive(Clone)]
pub struct Tower(Arc<TowerData>);

struct TowerData {
    sub: Field,
    ext: Field,
    m: u32,
    embed: Vec<u32>,
    project: Vec<u32>,
    // trace of every extension element, as a subfield index
    trace: Vec<u32>,
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.ext, self.0.sub)
    }
}

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        self.0.sub == other.0.sub && self.0.ext == other.0.ext
    }
}

impl Tower {
    /// Builds GF(q^m) over the given GF(q).
    pub fn new(sub: &Field, m: u32) -> Result<Tower> {
        let ext = Field::new(sub.characteristic(), sub.degree() * m)?;
        Tower::between(sub, &ext)
    }

    /// Tower over the prime field of `ext`.
    pub fn over_prime(ext: &Field) -> Result<Tower> {
        let prime = Field::new(ext.characteristic(), 1)?;
        Tower::between(&prime, ext)
    }

    pub fn between(sub: &Field, ext: &Field) -> Result<Tower> {
        if sub.characteristic() != ext.characteristic()
            || !ext.degree().is_multiple_of(sub.degree())
        {
            return Err(QctError::FieldMismatch(format!(
                "{sub} is not a subfield of {ext}"
            )));
        }
        let m = ext.degree() / sub.degree();
        let q = sub.order();
        let embed: Vec<u32> = if sub == ext {
            sub.elements().collect()
        } else {
            let root = ext
                .elements()
                .find(|&x| eval_prime_poly(ext, sub.modulus(), x) == 0)
                .ok_or_else(|| {
                    QctError::FieldMismatch(format!("subfield modulus has no root in {ext}"))
                })?;
            sub.elements()
                .map(|a| {
                    sub.coeffs(a)
                        .iter()
                        .rev()
                        .fold(0u32, |acc, &c| ext.add(ext.mul(acc, root), c))
                })
                .collect()
        };
        let g_img = embed[sub.generator() as usize];
        if ext.element_order(g_img) != Some(q as u64 - 1) {
            return Err(QctError::FieldMismatch(
                "embedding does not preserve the generator order".into(),
            ));
        }
        let mut project = vec![NOT_IN_SUBFIELD; ext.order() as usize];
        for (a, &x) in embed.iter().enumerate() {
            project[x as usize] = a as u32;
        }
        let trace = ext
            .elements()
            .map(|x| {
                let mut acc = 0u32;
                let mut y = x;
                for _ in 0..m {
                    acc = ext.add(acc, y);
                    y = ext.pow(y, q as u64);
                }
                project[acc as usize]
            })
            .collect::<Vec<_>>();
        debug_assert!(trace.iter().all(|&t| t != NOT_IN_SUBFIELD));
        Ok(Tower(Arc::new(TowerData {
            sub: sub.clone(),
            ext: ext.clone(),
            m,
            embed,
            project,
            trace,
        })))
    }

    pub fn sub(&self) -> &Field {
        &self.0.sub
    }

    pub fn ext(&self) -> &Field {
        &self.0.ext
    }

    /// Extension degree m = [GF(q^m) : GF(q)].
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn embed(&self, a: u32) -> u32 {
        self.0.embed[a as usize]
    }

    /// Subfield index of an extension element, if it lies in the subfield.
    #[inline]
    pub fn project(&self, x: u32) -> Option<u32> {
        let v = self.0.project[x as usize];
        (v != NOT_IN_SUBFIELD).then_some(v)
    }

    /// Tr_{GF(q^m)/GF(q)}(x) = sum of x^(q^i), i < m, as a subfield index.
    #[inline]
    pub fn trace(&self, x: u32) -> u32 {
        self.0.trace[x as usize]
    }

    /// x -> x^q
    pub fn frobenius(&self, x: u32) -> u32 {
        self.0.ext.pow(x, self.0.sub.order() as u64)
    }
}

/// Trace of `x` over `subfield`.
pub fn trace(x: u32, ext: &Field, subfield: &Field) -> Result<u32> {
    Ok(Tower::between(subfield, ext)?.trace(x))
}

fn eval_prime_poly(f: &Field, coeffs: &[u32], x: u32) -> u32 {
    coeffs
        .iter()
        .rev()
        .fold(0u32, |acc, &c| f.add(f.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    #[test]
    fn gf4_over_gf2_traces() {
        let gf2 = build_field(2, 1).unwrap();
        let gf4 = build_field(2, 2).unwrap();
        let t = Tower::between(&gf2, &gf4).unwrap();
        let w = gf4.generator();
        assert_eq!(t.trace(0), 0);
        assert_eq!(t.trace(1), 0);
        assert_eq!(t.trace(w), 1);
        assert_eq!(trace(w, &gf4, &gf2).unwrap(), 1);
    }

    #[test]
    fn non_subfield_rejected() {
        let gf4 = build_field(2, 2).unwrap();
        let gf8 = build_field(2, 3).unwrap();
        assert!(Tower::between(&gf4, &gf8).is_err());
        let gf9 = build_field(3, 2).unwrap();
        assert!(Tower::between(&gf4, &gf9).is_err());
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let gf4 = build_field(2, 2).unwrap();
        let t = Tower::new(&gf4, 2).unwrap();
        let ext = t.ext();
        for a in gf4.elements() {
            for b in gf4.elements() {
                assert_eq!(t.embed(gf4.add(a, b)), ext.add(t.embed(a), t.embed(b)));
                assert_eq!(t.embed(gf4.mul(a, b)), ext.mul(t.embed(a), t.embed(b)));
            }
            assert_eq!(t.project(t.embed(a)), Some(a));
        }
        // exactly q elements are fixed by x -> x^q
        let fixed = ext.elements().filter(|&x| t.frobenius(x) == x).count();
        assert_eq!(fixed, 4);
    }

    #[test]
    fn trace_is_surjective_and_frobenius_invariant() {
        // exhaustive over every tower with |ext| <= 2^12
        for p in [2u32, 3, 5, 7, 11, 13] {
            for total in 1..=12u32 {
                if (p as u64).pow(total) > 1 << 12 {
                    break;
                }
                for e in (1..=total).filter(|e| total % e == 0) {
                    let sub = build_field(p, e).unwrap();
                    let ext = build_field(p, total).unwrap();
                    let t = Tower::between(&sub, &ext).unwrap();
                    let mut hit = vec![false; sub.order() as usize];
                    for x in ext.elements() {
                        hit[t.trace(x) as usize] = true;
                        assert_eq!(t.trace(t.frobenius(x)), t.trace(x));
                    }
                    assert!(hit.iter().all(|&h| h), "trace not onto for {t:?}");
                }
            }
        }
    }

    #[test]
    fn trace_is_subfield_linear() {
        let gf3 = build_field(3, 1).unwrap();
        let t = Tower::new(&gf3, 3).unwrap();
        let ext = t.ext();
        for x in ext.elements() {
            for y in [1, ext.generator(), 7] {
                assert_eq!(t.trace(ext.add(x, y)), gf3.add(t.trace(x), t.trace(y)));
            }
            assert_eq!(t.trace(ext.mul(2, x)), gf3.mul(2, t.trace(x)));
        }
    }
}
