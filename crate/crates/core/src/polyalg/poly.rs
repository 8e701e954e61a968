use std::fmt;

use crate::error::{QctError, Result};
use crate::galois::Field;

/// A polynomial over a finite field, coefficients constant term first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = self.field.format(c);
            match (i, c) {
                (0, _) => write!(f, "{coef}")?,
                (_, 1) => {}
                _ => write!(f, "{coef}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![1])
    }

    /// x^n + c
    pub fn binomial(field: &Field, n: usize, c: u32) -> Poly {
        let mut coeffs = vec![0u32; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.add(coeffs[0], c);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let f = &self.field;
        let dd = divisor
            .degree()
            .ok_or_else(|| QctError::InvalidParameters("division by the zero polynomial".into()))?;
        let lead_inv = f
            .inv(divisor.leading())
            .expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = f.mul(rem[top], lead_inv);
            let shift = top - dd;
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + shift] = f.sub(rem[i + shift], f.mul(c, d));
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// x^deg * p(1/x)
    pub fn reciprocal(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(&self.field, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    #[test]
    fn division_identity() {
        let f = build_field(3, 2).unwrap();
        let a = Poly::new(&f, vec![1, 2, 0, f.generator(), 5]);
        let b = Poly::new(&f, vec![f.generator(), 1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(a.div_rem(&Poly::zero(&f)).is_err());
    }

    #[test]
    fn binomial_and_display() {
        let f = build_field(2, 1).unwrap();
        let p = Poly::binomial(&f, 3, 1);
        assert_eq!(p.to_string(), "x^3 + 1");
        assert_eq!(p.eval(1), 0);
    }
}
