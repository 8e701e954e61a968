use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::error::{QctError, Result};
use crate::galois::{Field, Tower};

/// The orbit of `representative` under multiplication by `q` modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub modulus: u32,
    pub base: u32,
    pub representative: u32,
    pub members: Vec<u32>,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Cyclotomic coset of `s` modulo `n` for base `q`.
pub fn cyclotomic_coset(n: u32, q: u32, s: u32) -> Result<CyclotomicCoset> {
    if n == 0 || gcd(n as u64, q as u64) != 1 {
        return Err(QctError::InvalidParameters(format!("gcd({n}, {q}) != 1")));
    }
    if s >= n {
        return Err(QctError::InvalidParameters(format!(
            "residue {s} not below {n}"
        )));
    }
    let mut members = vec![s];
    let mut x = (s as u64 * q as u64 % n as u64) as u32;
    while x != s {
        members.push(x);
        x = (x as u64 * q as u64 % n as u64) as u32;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset {
        modulus: n,
        base: q,
        representative: members[0],
        members,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Cyclic,
    Negacyclic,
}

/// Root-exponent set of a cyclic code (residues mod n) or a negacyclic code
/// (odd residues mod 2n), closed under multiplication by the field order q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSet {
    pub kind: CodeKind,
    pub n: u32,
    pub q: u32,
    pub exponents: Vec<u32>,
}

impl DefiningSet {
    /// Validates an already-closed set (as read from JSON).
    pub fn new(kind: CodeKind, n: u32, q: u32, exponents: Vec<u32>) -> Result<DefiningSet> {
        let closed = defining_set_closure(&exponents, kind, n, q)?;
        let mut sorted = exponents.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if closed.exponents != sorted {
            return Err(QctError::InvalidDefiningSet(format!(
                "{exponents:?} is not closed under multiplication by {q}"
            )));
        }
        Ok(closed)
    }

    /// Residue modulus: n for cyclic, 2n for negacyclic.
    pub fn residue_modulus(&self) -> u32 {
        match self.kind {
            CodeKind::Cyclic => self.n,
            CodeKind::Negacyclic => 2 * self.n,
        }
    }

    /// Every legal residue: Z_n, or O_n = odd integers in [1, 2n-1].
    pub fn universe(kind: CodeKind, n: u32) -> Vec<u32> {
        match kind {
            CodeKind::Cyclic => (0..n).collect(),
            CodeKind::Negacyclic => (0..n).map(|i| 2 * i + 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.exponents.binary_search(&i).is_ok()
    }

    /// Dimension n - |T| of the code.
    pub fn dimension(&self) -> usize {
        (self.n as usize) - self.exponents.len()
    }

    fn with_exponents(&self, exponents: Vec<u32>) -> DefiningSet {
        DefiningSet {
            kind: self.kind,
            n: self.n,
            q: self.q,
            exponents,
        }
    }

    /// {i in universe : i not in -c*T}
    fn complement_of_scaled_negation(&self, c: u64) -> DefiningSet {
        let md = self.residue_modulus() as u64;
        let excluded: BTreeSet<u32> = self
            .exponents
            .iter()
            .map(|&t| ((md - (t as u64 * c % md)) % md) as u32)
            .collect();
        let exps = DefiningSet::universe(self.kind, self.n)
            .into_iter()
            .filter(|i| !excluded.contains(i))
            .collect();
        self.with_exponents(exps)
    }

    /// Defining set of the Euclidean dual: {i : i not in -T}.
    pub fn euclidean_dual(&self) -> DefiningSet {
        self.complement_of_scaled_negation(1)
    }

    /// Whether the code with this set contains the code with `other`
    /// (true iff T is a subset of T').
    pub fn code_contains(&self, other: &DefiningSet) -> bool {
        self.kind == other.kind
            && self.n == other.n
            && self.exponents.iter().all(|&t| other.contains(t))
    }
}

/// Smallest q-closed superset of `raw`.
pub fn defining_set_closure(raw: &[u32], kind: CodeKind, n: u32, q: u32) -> Result<DefiningSet> {
    if n == 0 {
        return Err(QctError::InvalidDefiningSet(
            "length must be positive".into(),
        ));
    }
    if gcd(n as u64, q as u64) != 1 {
        return Err(QctError::InvalidDefiningSet(format!("gcd({n}, {q}) != 1")));
    }
    if kind == CodeKind::Negacyclic && q.is_multiple_of(2) {
        return Err(QctError::InvalidDefiningSet(
            "negacyclic codes need odd characteristic (x^n + 1 = x^n - 1 otherwise)".into(),
        ));
    }
    let md = match kind {
        CodeKind::Cyclic => n,
        CodeKind::Negacyclic => 2 * n,
    };
    let mut set = BTreeSet::new();
    for &r in raw {
        if r >= md {
            return Err(QctError::InvalidDefiningSet(format!(
                "exponent {r} not below {md}"
            )));
        }
        if kind == CodeKind::Negacyclic && r % 2 == 0 {
            return Err(QctError::InvalidDefiningSet(format!(
                "negacyclic exponent {r} is even"
            )));
        }
        let coset = cyclotomic_coset(md, q, r)?;
        set.extend(coset.members);
    }
    Ok(DefiningSet {
        kind,
        n,
        q,
        exponents: set.into_iter().collect(),
    })
}

/// Narrow-sense BCH defining set: closure of {1, ..., delta - 1} mod n.
pub fn bch_defining_set(n: u32, q: u32, delta: u32) -> Result<DefiningSet> {
    if delta < 2 || delta > n {
        return Err(QctError::InvalidParameters(format!(
            "designed distance {delta} outside [2, {n}]"
        )));
    }
    let raw: Vec<u32> = (1..delta).collect();
    defining_set_closure(&raw, CodeKind::Cyclic, n, q)
}

/// Defining set of the Hermitian dual of a code over GF(q^2):
/// {i : i not in -q*T}. `q` is the square root of the field order.
pub fn hermitian_dual_defining_set(t: &DefiningSet, q: u32) -> Result<DefiningSet> {
    if (q as u64) * (q as u64) != t.q as u64 {
        return Err(QctError::InvalidDefiningSet(format!(
            "defining set is over GF({}), not GF({q}^2)",
            t.q
        )));
    }
    Ok(t.complement_of_scaled_negation(q as u64))
}

/// BCH bound: one more than the longest run of consecutive exponents.
///
/// Cyclic runs step by 1 and may wrap around; negacyclic runs step by 2
/// through O_n without wrapping.
pub fn bch_bound(t: &DefiningSet) -> usize {
    if t.is_empty() {
        return 1;
    }
    let longest = match t.kind {
        CodeKind::Cyclic => {
            let n = t.n as usize;
            if t.len() == n {
                n
            } else {
                let mut member = vec![false; n];
                for &e in &t.exponents {
                    member[e as usize] = true;
                }
                // start right after a gap so wrap-around runs count once
                let gap = (0..n).find(|&i| !member[i]).unwrap();
                let mut best = 0;
                let mut run = 0;
                for step in 1..=n {
                    if member[(gap + step) % n] {
                        run += 1;
                        best = best.max(run);
                    } else {
                        run = 0;
                    }
                }
                best
            }
        }
        CodeKind::Negacyclic => {
            let mut best = 0;
            let mut run = 0;
            for i in DefiningSet::universe(CodeKind::Negacyclic, t.n) {
                if t.contains(i) {
                    run += 1;
                    best = best.max(run);
                } else {
                    run = 0;
                }
            }
            best
        }
    };
    longest + 1
}

/// Smallest extension GF(q^m) of `field` holding a primitive `root_order`-th
/// root of unity.
pub fn splitting_tower(field: &Field, root_order: u32) -> Result<Tower> {
    let q = field.order() as u64;
    if gcd(q, root_order as u64) != 1 {
        return Err(QctError::InvalidParameters(format!(
            "root order {root_order} shares a factor with {q}"
        )));
    }
    let mut m = 1u32;
    let mut qm = q % root_order as u64;
    while qm != 1 % root_order as u64 {
        qm = qm * q % root_order as u64;
        m += 1;
    }
    Tower::new(field, m)
}

/// The fixed primitive `root_order`-th root of unity generator^((Q-1)/root_order).
pub fn primitive_root_of_unity(tower: &Tower, root_order: u32) -> Result<u32> {
    let big = tower.ext().order() as u64 - 1;
    if !big.is_multiple_of(root_order as u64) {
        return Err(QctError::InvalidParameters(format!(
            "{root_order} does not divide |{}*| = {big}",
            tower.ext()
        )));
    }
    Ok(tower.ext().exp(big / root_order as u64))
}

/// Minimal polynomial over GF(q) of alpha^s, alpha the fixed primitive
/// `root_order`-th root of unity in the splitting field.
pub fn minimal_polynomial(exponent: u32, root_order: u32, splitting: &Tower) -> Result<Poly> {
    let alpha = primitive_root_of_unity(splitting, root_order)?;
    let q = splitting.sub().order();
    let coset = cyclotomic_coset(root_order, q, exponent % root_order)?;
    product_of_roots(splitting, alpha, &coset.members)
}

/// prod (x - alpha^s) over `exponents`, projected to the subfield.
fn product_of_roots(tower: &Tower, alpha: u32, exponents: &[u32]) -> Result<Poly> {
    let ext = tower.ext();
    let mut coeffs = vec![1u32];
    for &s in exponents {
        let root = ext.pow(alpha, s as u64);
        let neg_root = ext.neg(root);
        let mut next = vec![0u32; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = ext.add(next[i + 1], c);
            next[i] = ext.add(next[i], ext.mul(c, neg_root));
        }
        coeffs = next;
    }
    let projected = coeffs
        .iter()
        .map(|&c| {
            tower.project(c).ok_or_else(|| {
                QctError::InvalidDefiningSet(
                    "root product has coefficients outside the base field; set is not closed"
                        .into(),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(tower.sub(), projected))
}

/// g = product of minimal polynomials over the cosets in T. Checks that g
/// divides x^n - 1 (cyclic) or x^n + 1 (negacyclic).
pub fn generator_from_defining_set(t: &DefiningSet, field: &Field) -> Result<Poly> {
    if field.order() != t.q {
        return Err(QctError::FieldMismatch(format!(
            "defining set is for GF({}), field is {field}",
            t.q
        )));
    }
    let closed = defining_set_closure(&t.exponents, t.kind, t.n, t.q)?;
    if closed.exponents != t.exponents {
        return Err(QctError::InvalidDefiningSet(
            "defining set is not closed; apply defining_set_closure first".into(),
        ));
    }
    let root_order = t.residue_modulus();
    let tower = splitting_tower(field, root_order)?;
    let mut g = Poly::one(field);
    let mut seen = BTreeSet::new();
    for &s in &t.exponents {
        if seen.contains(&s) {
            continue;
        }
        let coset = cyclotomic_coset(root_order, t.q, s)?;
        seen.extend(coset.members.iter().copied());
        g = g.mul(&minimal_polynomial(s, root_order, &tower)?);
    }
    let sign = match t.kind {
        CodeKind::Cyclic => field.neg(1),
        CodeKind::Negacyclic => 1,
    };
    let (_, r) = Poly::binomial(field, t.n as usize, sign).div_rem(&g)?;
    if !r.is_zero() {
        return Err(QctError::InvalidDefiningSet(
            "generator does not divide x^n -/+ 1".into(),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    #[test]
    fn cosets() {
        assert_eq!(
            cyclotomic_coset(15, 2, 1).unwrap().members,
            vec![1, 2, 4, 8]
        );
        assert_eq!(cyclotomic_coset(15, 4, 1).unwrap().members, vec![1, 4]);
        assert_eq!(cyclotomic_coset(9, 2, 0).unwrap().members, vec![0]);
        assert!(cyclotomic_coset(15, 3, 1).is_err());
    }

    #[test]
    fn closures() {
        let t = defining_set_closure(&[1], CodeKind::Cyclic, 15, 2).unwrap();
        assert_eq!(t.exponents, vec![1, 2, 4, 8]);
        // x9 acts as x1 mod 8
        let t = defining_set_closure(&[1], CodeKind::Negacyclic, 4, 9).unwrap();
        assert_eq!(t.exponents, vec![1]);
        assert!(defining_set_closure(&[], CodeKind::Cyclic, 7, 2)
            .unwrap()
            .is_empty());
        assert!(defining_set_closure(&[2], CodeKind::Negacyclic, 4, 9).is_err());
        // closure is idempotent
        let again = defining_set_closure(&t.exponents, t.kind, t.n, t.q).unwrap();
        assert_eq!(again, t);
    }

    #[test]
    fn minimal_polynomials_over_gf2() {
        let gf2 = build_field(2, 1).unwrap();
        let tower3 = splitting_tower(&gf2, 3).unwrap();
        assert_eq!(minimal_polynomial(0, 3, &tower3).unwrap().coeffs(), &[1, 1]);
        assert_eq!(
            minimal_polynomial(1, 3, &tower3).unwrap().coeffs(),
            &[1, 1, 1]
        );
        let tower7 = splitting_tower(&gf2, 7).unwrap();
        let m1 = minimal_polynomial(1, 7, &tower7).unwrap();
        assert!(m1.coeffs() == [1, 1, 0, 1] || m1.coeffs() == [1, 0, 1, 1]);
    }

    #[test]
    fn generators() {
        let gf2 = build_field(2, 1).unwrap();
        let empty = defining_set_closure(&[], CodeKind::Cyclic, 7, 2).unwrap();
        assert_eq!(
            generator_from_defining_set(&empty, &gf2).unwrap().coeffs(),
            &[1]
        );
        let t = defining_set_closure(&[1], CodeKind::Cyclic, 7, 2).unwrap();
        let g = generator_from_defining_set(&t, &gf2).unwrap();
        assert_eq!(g.degree(), Some(3));
        assert_eq!(t.dimension(), 4);

        let gf81 = build_field(3, 4).unwrap();
        let t = defining_set_closure(&[1, 3], CodeKind::Negacyclic, 8, 81).unwrap();
        assert_eq!(t.exponents, vec![1, 3]);
        let g = generator_from_defining_set(&t, &gf81).unwrap();
        assert_eq!(g.degree(), Some(2));
        assert_eq!(t.dimension(), 6);
    }

    #[test]
    fn unclosed_set_rejected() {
        let gf2 = build_field(2, 1).unwrap();
        let bogus = DefiningSet {
            kind: CodeKind::Cyclic,
            n: 7,
            q: 2,
            exponents: vec![1],
        };
        assert!(generator_from_defining_set(&bogus, &gf2).is_err());
        assert!(DefiningSet::new(CodeKind::Cyclic, 7, 2, vec![1]).is_err());
    }

    #[test]
    fn hermitian_duals() {
        let empty = defining_set_closure(&[], CodeKind::Negacyclic, 4, 9).unwrap();
        let full = defining_set_closure(&[1, 3, 5, 7], CodeKind::Negacyclic, 4, 9).unwrap();
        assert_eq!(
            hermitian_dual_defining_set(&empty, 3).unwrap().exponents,
            vec![1, 3, 5, 7]
        );
        assert!(hermitian_dual_defining_set(&full, 3).unwrap().is_empty());
        let t = defining_set_closure(&[1, 3], CodeKind::Negacyclic, 4, 9).unwrap();
        assert_eq!(
            hermitian_dual_defining_set(&t, 3).unwrap().exponents,
            vec![1, 3]
        );
        let t = defining_set_closure(&[1, 3], CodeKind::Negacyclic, 8, 81).unwrap();
        assert_eq!(
            hermitian_dual_defining_set(&t, 9).unwrap().exponents,
            vec![1, 3, 9, 11, 13, 15]
        );
        assert!(hermitian_dual_defining_set(&t, 3).is_err());
    }

    #[test]
    fn bch_bounds() {
        let t = defining_set_closure(&[1, 2, 3, 4], CodeKind::Cyclic, 15, 16).unwrap();
        assert_eq!(bch_bound(&t), 5);
        let empty = defining_set_closure(&[], CodeKind::Cyclic, 15, 2).unwrap();
        assert_eq!(bch_bound(&empty), 1);
        for s in [2u32, 4, 6] {
            let raw: Vec<u32> = (1..s).step_by(2).collect();
            let t = defining_set_closure(&raw, CodeKind::Negacyclic, 8, 81).unwrap();
            assert_eq!(bch_bound(&t), (s / 2 + 1) as usize);
        }
        // wrap-around run {14, 0, 1}
        let t = defining_set_closure(&[0, 1, 14], CodeKind::Cyclic, 15, 16).unwrap();
        assert_eq!(bch_bound(&t), 4);
    }

    #[test]
    fn hermitian_dual_is_involution() {
        for (n, q) in (1..=16u32).flat_map(|n| [(n, 3u32), (n, 9)]) {
            let qq = q * q;
            if gcd(n as u64, qq as u64) != 1 {
                continue;
            }
            let universe = DefiningSet::universe(CodeKind::Negacyclic, n);
            let mut reps: Vec<Vec<u32>> = Vec::new();
            let mut seen = BTreeSet::new();
            for &u in &universe {
                if seen.insert(u) {
                    let c = cyclotomic_coset(2 * n, qq, u).unwrap();
                    seen.extend(c.members.iter().copied());
                    reps.push(c.members);
                }
            }
            if reps.len() > 12 {
                continue;
            }
            for mask in 0u32..(1 << reps.len()) {
                let raw: Vec<u32> = reps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .flat_map(|(_, c)| c.iter().copied())
                    .collect();
                let t = defining_set_closure(&raw, CodeKind::Negacyclic, n, qq).unwrap();
                let back =
                    hermitian_dual_defining_set(&hermitian_dual_defining_set(&t, q).unwrap(), q)
                        .unwrap();
                assert_eq!(back, t, "n={n} q={q} T={:?}", t.exponents);
            }
        }
    }
}
