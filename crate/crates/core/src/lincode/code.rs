use std::fmt;

use serde::{Deserialize, Serialize};

use super::distance::{certified_floor, DistanceMethod, DistanceResult};
use crate::error::{QctError, Result};
use crate::galois::Field;
use crate::linalg::{self, Matrix};
use crate::polyalg::{hermitian_dual_defining_set, DefiningSet};

/// A linear [n, k]_q code held as a reduced row echelon generator matrix.
///
/// Two codes are equal iff they share field, length and canonical generator;
/// cached distance knowledge, defining set and provenance are metadata.
#[derive(Clone)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: Matrix,
    pivots: Vec<usize>,
    distance: Option<DistanceResult>,
    defining_set: Option<DefiningSet>,
    provenance: String,
}

/// [n, k, d]_q summary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub exact: bool,
    pub q: u32,
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ge = if self.exact { "" } else { ">=" };
        write!(f, "[{},{},{ge}{}]_{}", self.n, self.k, self.d, self.q)
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.generator == other.generator
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearCode[{},{}]_{} ({})",
            self.n,
            self.k(),
            self.field.order(),
            self.provenance
        )
    }
}

impl LinearCode {
    /// Canonicalizes the row space of `rows`; dependent rows collapse.
    pub fn from_generator(field: &Field, rows: &[Vec<u32>]) -> Result<LinearCode> {
        let Some(first) = rows.first() else {
            return Err(QctError::MalformedMatrix("empty generator matrix".into()));
        };
        let n = first.len();
        for r in rows {
            if r.len() != n {
                return Err(QctError::MalformedMatrix(format!(
                    "ragged rows: lengths {n} and {}",
                    r.len()
                )));
            }
            if let Some(&bad) = r.iter().find(|&&x| !field.contains(x)) {
                return Err(QctError::MalformedMatrix(format!(
                    "{bad} is not an element of {field}"
                )));
            }
        }
        Ok(LinearCode::from_matrix(field, Matrix::from_rows(rows, n)))
    }

    pub(crate) fn from_matrix(field: &Field, mut m: Matrix) -> LinearCode {
        let pivots = m.rref(field);
        LinearCode {
            field: field.clone(),
            n: m.cols,
            generator: m,
            pivots,
            distance: None,
            defining_set: None,
            provenance: String::new(),
        }
    }

    /// The zero code {0} of length n.
    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_matrix(field, Matrix::zeros(0, n))
    }

    /// GF(q)^n.
    pub fn whole_space(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_matrix(field, Matrix::identity(n)).with_provenance(format!("F^{n}"))
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = p.into();
        self
    }

    pub fn with_distance(mut self, d: DistanceResult) -> Self {
        self.distance = Some(d);
        self
    }

    pub fn with_defining_set(mut self, t: DefiningSet) -> Self {
        self.defining_set = Some(t);
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows
    }

    pub fn k(&self) -> usize {
        self.generator.rows
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.generator.to_rows()
    }

    pub fn distance(&self) -> Option<&DistanceResult> {
        self.distance.as_ref()
    }

    pub fn defining_set(&self) -> Option<&DefiningSet> {
        self.defining_set.as_ref()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// log_q of the number of codewords is k; this is q^k, saturating.
    pub fn codeword_count(&self) -> u64 {
        (self.field.order() as u64)
            .checked_pow(self.k() as u32)
            .unwrap_or(u64::MAX)
    }

    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        assert_eq!(message.len(), self.k());
        let mut out = vec![0u32; self.n];
        for (i, &m) in message.iter().enumerate() {
            linalg::axpy(&mut out, m, self.generator.row(i), &self.field);
        }
        out
    }

    /// Residue of `v` after clearing every pivot coordinate; zero iff v is a codeword.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p];
            if c != 0 {
                linalg::axpy(&mut r, f.neg(c), self.generator.row(i), f);
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        v.len() == self.n && self.reduce(v).iter().all(|&x| x == 0)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field {
            return Err(QctError::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        if self.n != other.n {
            return Err(QctError::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Euclidean dual (nullspace under the standard inner product).
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let n = self.n;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(n - self.k());
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (i, &p) in self.pivots.iter().enumerate() {
                v[p] = f.neg(self.generator.get(i, free));
            }
            rows.push(v);
        }
        let mut out = LinearCode::from_matrix(f, Matrix::from_rows(&rows, n))
            .with_provenance(format!("dual({})", self.provenance));
        if let Some(t) = &self.defining_set {
            out.defining_set = Some(t.euclidean_dual());
        }
        out
    }

    /// Entrywise x -> x^q over GF(q^2).
    pub fn conjugate(&self) -> Result<LinearCode> {
        let f = &self.field;
        let q = f.conjugation_base().ok_or_else(|| {
            QctError::FieldMismatch(format!("{f} has no square-root subfield for conjugation"))
        })?;
        let mut m = self.generator.clone();
        for x in m.data.iter_mut() {
            *x = f.pow(*x, q as u64);
        }
        Ok(LinearCode::from_matrix(f, m).with_provenance(format!("conj({})", self.provenance)))
    }

    /// Hermitian dual: Euclidean dual of the q-conjugated code over GF(q^2).
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        let q = self.field.conjugation_base().ok_or_else(|| {
            QctError::FieldMismatch(format!("{} is not a square-order field", self.field))
        })?;
        let mut out = self
            .conjugate()?
            .dual()
            .with_provenance(format!("hdual({})", self.provenance));
        out.defining_set = match &self.defining_set {
            Some(t) => Some(hermitian_dual_defining_set(t, q)?),
            None => None,
        };
        Ok(out)
    }

    /// True iff every generator row of `inner` lies in this code.
    pub fn contains_code(&self, inner: &LinearCode) -> Result<bool> {
        self.check_compatible(inner)?;
        Ok((0..inner.k()).all(|i| self.contains_vector(inner.generator.row(i))))
    }

    pub fn contains_allones(&self) -> bool {
        self.contains_vector(&vec![1u32; self.n])
    }

    /// Deletes coordinate `position`.
    pub fn puncture(&self, position: usize) -> Result<LinearCode> {
        if position >= self.n {
            return Err(QctError::InvalidParameters(format!(
                "puncture position {position} outside length {}",
                self.n
            )));
        }
        let rows: Vec<Vec<u32>> = (0..self.k())
            .map(|i| {
                let mut r = self.generator.row(i).to_vec();
                r.remove(position);
                r
            })
            .collect();
        let mut out = LinearCode::from_matrix(&self.field, Matrix::from_rows(&rows, self.n - 1))
            .with_provenance(format!("punct{position}({})", self.provenance));
        let (floor, _) = certified_floor(self);
        if floor > 2 {
            out.distance = Some(DistanceResult::lower(floor - 1, DistanceMethod::Inherited));
        }
        Ok(out)
    }

    /// Appends the overall parity symbol -(c_1 + ... + c_n).
    pub fn extend_parity(&self) -> LinearCode {
        let f = &self.field;
        let rows: Vec<Vec<u32>> = (0..self.k())
            .map(|i| {
                let mut r = self.generator.row(i).to_vec();
                let s = r.iter().fold(0u32, |acc, &x| f.add(acc, x));
                r.push(f.neg(s));
                r
            })
            .collect();
        let mut out = LinearCode::from_matrix(f, Matrix::from_rows(&rows, self.n + 1))
            .with_provenance(format!("ext({})", self.provenance));
        let (floor, _) = certified_floor(self);
        if floor > 1 && self.k() > 0 {
            out.distance = Some(DistanceResult::lower(floor, DistanceMethod::Inherited));
        }
        out
    }

    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.field != other.field {
            return Err(QctError::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        let n = self.n + other.n;
        let mut rows = Vec::with_capacity(self.k() + other.k());
        for i in 0..self.k() {
            let mut r = self.generator.row(i).to_vec();
            r.resize(n, 0);
            rows.push(r);
        }
        for i in 0..other.k() {
            let mut r = vec![0u32; self.n];
            r.extend_from_slice(other.generator.row(i));
            rows.push(r);
        }
        let mut out = LinearCode::from_matrix(&self.field, Matrix::from_rows(&rows, n))
            .with_provenance(format!("({}) + ({})", self.provenance, other.provenance));
        out.distance = self.direct_sum_distance(other);
        Ok(out)
    }

    /// d(A + B) = min(d(A), d(B)); exact when the smaller side is exact and
    /// the other side is certified no smaller.
    fn direct_sum_distance(&self, other: &LinearCode) -> Option<DistanceResult> {
        match (self.k(), other.k()) {
            (0, 0) => return None,
            (0, _) => return other.distance.clone().map(|d| pad_witness(d, self.n, 0)),
            (_, 0) => return self.distance.clone().map(|d| pad_witness(d, 0, other.n)),
            _ => {}
        }
        let (la, _) = certified_floor(self);
        let (lb, _) = certified_floor(other);
        let exact_side = |c: &LinearCode, rival: usize, before: usize, after: usize| {
            c.distance
                .as_ref()
                .filter(|d| d.is_exact() && d.value <= rival)
                .map(|d| pad_witness(d.clone(), before, after))
        };
        exact_side(self, lb, 0, other.n)
            .or_else(|| exact_side(other, la, self.n, 0))
            .or_else(|| {
                let lo = la.min(lb);
                (lo > 1).then(|| DistanceResult::lower(lo, DistanceMethod::Inherited))
            })
    }

    /// Standard inner product of two vectors of this code's length.
    pub fn inner_product(&self, a: &[u32], b: &[u32]) -> u32 {
        linalg::dot(a, b, &self.field)
    }
}

fn pad_witness(mut d: DistanceResult, before: usize, after: usize) -> DistanceResult {
    if let Some(w) = d.witness.take() {
        let mut v = vec![0u32; before];
        v.extend(w);
        v.resize(v.len() + after, 0);
        d.witness = Some(v);
    }
    d
}

pub fn dual(c: &LinearCode) -> LinearCode {
    c.dual()
}

pub fn hermitian_dual(c: &LinearCode) -> Result<LinearCode> {
    c.hermitian_dual()
}

pub fn contains_code(outer: &LinearCode, inner: &LinearCode) -> Result<bool> {
    outer.contains_code(inner)
}

pub fn contains_allones(c: &LinearCode) -> bool {
    c.contains_allones()
}

pub fn puncture(c: &LinearCode, position: usize) -> Result<LinearCode> {
    c.puncture(position)
}

pub fn extend_parity(c: &LinearCode) -> LinearCode {
    c.extend_parity()
}

pub fn direct_sum(a: &LinearCode, b: &LinearCode) -> Result<LinearCode> {
    a.direct_sum(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    fn hamming7() -> LinearCode {
        let f = build_field(2, 1).unwrap();
        LinearCode::from_generator(
            &f,
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn generator_validation() {
        let f = build_field(2, 1).unwrap();
        assert!(LinearCode::from_generator(&f, &[]).is_err());
        assert!(LinearCode::from_generator(&f, &[vec![1, 0], vec![1]]).is_err());
        assert!(LinearCode::from_generator(&f, &[vec![2, 0]]).is_err());
        let c = LinearCode::from_generator(&f, &[vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn dual_dimensions_and_orthogonality() {
        let h = hamming7();
        let s = h.dual();
        assert_eq!(s.k(), 3);
        for a in h.rows() {
            for b in s.rows() {
                assert_eq!(h.inner_product(&a, &b), 0);
            }
        }
        assert_eq!(s.dual(), h);
        let f = build_field(2, 1).unwrap();
        assert_eq!(
            LinearCode::whole_space(&f, 4).dual(),
            LinearCode::zero(&f, 4)
        );
        assert_eq!(
            LinearCode::zero(&f, 4).dual(),
            LinearCode::whole_space(&f, 4)
        );
    }

    #[test]
    fn hermitian_self_dual_pair_gf4() {
        let f = build_field(2, 2).unwrap();
        let c = LinearCode::from_generator(&f, &[vec![1, 1]]).unwrap();
        assert_eq!(c.hermitian_dual().unwrap(), c);
        assert_eq!(
            LinearCode::zero(&f, 3).hermitian_dual().unwrap(),
            LinearCode::whole_space(&f, 3)
        );
        let gf8 = build_field(2, 3).unwrap();
        assert!(LinearCode::whole_space(&gf8, 2).hermitian_dual().is_err());
    }

    #[test]
    fn containment() {
        let h = hamming7();
        let f = h.field().clone();
        let rep = LinearCode::from_generator(&f, &[vec![1; 7]]).unwrap();
        assert!(h.contains_code(&h).unwrap());
        assert!(h.contains_code(&rep).unwrap());
        assert!(!rep.contains_code(&h.dual()).unwrap());
        assert!(rep.contains_allones());
        let even = LinearCode::from_generator(&f, &[vec![1, 1, 0, 0, 0, 0, 0]])
            .unwrap()
            .direct_sum(&LinearCode::zero(&f, 0))
            .unwrap();
        assert!(!even.contains_allones());
        let short = LinearCode::whole_space(&f, 6);
        assert!(h.contains_code(&short).is_err());
    }

    #[test]
    fn puncture_and_extend() {
        let f = build_field(2, 1).unwrap();
        let rep = LinearCode::from_generator(&f, &[vec![1; 5]]).unwrap();
        let p = rep.puncture(4).unwrap();
        assert_eq!((p.len(), p.k()), (4, 1));
        assert!(rep.puncture(5).is_err());
        let h = hamming7();
        let e = h.extend_parity();
        assert_eq!((e.len(), e.k()), (8, 4));
        assert!(e.contains_vector(&[0; 8]));
        // a weight-1 code loses dimension when the support is punctured
        let unit = LinearCode::from_generator(&f, &[vec![0, 1, 0]]).unwrap();
        assert_eq!(unit.puncture(1).unwrap().k(), 0);
    }

    #[test]
    fn direct_sum_duals() {
        let h = hamming7();
        let f = h.field().clone();
        let rep = LinearCode::from_generator(&f, &[vec![1; 3]]).unwrap();
        let s = h.direct_sum(&rep).unwrap();
        assert_eq!((s.len(), s.k()), (10, 5));
        assert_eq!(s.dual(), h.dual().direct_sum(&rep.dual()).unwrap());
        let gf3 = build_field(3, 1).unwrap();
        assert!(h.direct_sum(&LinearCode::whole_space(&gf3, 1)).is_err());
        assert_eq!(rep.direct_sum(&LinearCode::zero(&f, 0)).unwrap(), rep);
    }
}
