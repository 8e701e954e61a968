use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::code::{ClassicalParams, LinearCode};
use crate::config::Config;
use crate::error::{QctError, Result};
use crate::galois::Field;
use crate::linalg::{self, Matrix};
use crate::polyalg::bch_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    LowerBound,
    UpperBound,
    /// Claimed by a construction or an imported record but not certified here.
    Declared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    Enumeration,
    MdsRank,
    BchBound,
    Sampling,
    /// Bound carried over from the codes a construction was built from.
    Inherited,
    Declared,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::LowerBound => "lower_bound",
            Exactness::UpperBound => "upper_bound",
            Exactness::Declared => "declared",
        })
    }
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistanceMethod::Enumeration => "enumeration",
            DistanceMethod::MdsRank => "mds_rank",
            DistanceMethod::BchBound => "bch_bound",
            DistanceMethod::Sampling => "sampling",
            DistanceMethod::Inherited => "inherited",
            DistanceMethod::Declared => "declared",
        })
    }
}

/// Minimum (relative) distance knowledge about a code.
///
/// Exact results carry a minimum-weight witness. Other results may carry the
/// lightest codeword seen, whose weight is `upper_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub value: usize,
    pub exactness: Exactness,
    pub method: DistanceMethod,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<usize>,
}

impl fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, {})", self.value, self.exactness, self.method)?;
        if let (Some(lo), false) = (self.lower_bound, self.exactness == Exactness::LowerBound) {
            write!(f, " >={lo}")?;
        }
        if let Some(hi) = self.upper_bound {
            write!(f, " <={hi}")?;
        }
        Ok(())
    }
}

impl DistanceResult {
    pub fn exact(value: usize, method: DistanceMethod, witness: Vec<u32>) -> Self {
        DistanceResult {
            value,
            exactness: Exactness::Exact,
            method,
            witness: Some(witness),
            lower_bound: None,
            upper_bound: None,
        }
    }

    pub fn lower(value: usize, method: DistanceMethod) -> Self {
        DistanceResult {
            value,
            exactness: Exactness::LowerBound,
            method,
            witness: None,
            lower_bound: None,
            upper_bound: None,
        }
    }

    pub fn declared(value: usize) -> Self {
        DistanceResult {
            value,
            exactness: Exactness::Declared,
            method: DistanceMethod::Declared,
            witness: None,
            lower_bound: None,
            upper_bound: None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    /// The best lower bound this result certifies (1 if none).
    pub fn certified_lower(&self) -> usize {
        match self.exactness {
            Exactness::Exact | Exactness::LowerBound => self.value,
            _ => self.lower_bound.unwrap_or(1),
        }
        .max(1)
    }
}

/// Largest certified lower bound on d(C) known without enumeration.
pub(crate) fn certified_floor(code: &LinearCode) -> (usize, bool) {
    let cached = code.distance().map_or(1, |d| d.certified_lower());
    let bch = code.defining_set().map_or(1, bch_bound);
    (cached.max(bch), bch > cached)
}

/// GF(p)-basis of the span of `rows`: every row times x^j, j < e.
fn prime_basis(field: &Field, rows: &[&[u32]]) -> Vec<Vec<u32>> {
    let p = field.characteristic();
    let e = field.degree();
    let mut out = Vec::with_capacity(rows.len() * e as usize);
    for r in rows {
        let mut s = 1u32;
        for _ in 0..e {
            out.push(r.iter().map(|&x| field.mul(s, x)).collect());
            s *= p;
        }
    }
    out
}

struct ChunkBest {
    weight: usize,
    chunk: u64,
    codeword: Vec<u32>,
}

/// Minimum weight over the GF(p)-combinations of `basis` whose coefficients on
/// the first `free` vectors are not all zero.
///
/// Walks a modular p-ary Gray code, so each step adds one basis vector and
/// updates the weight on its support only. The range is split into chunks of
/// low digits processed in parallel; the result is the first minimum in Gray
/// order regardless of scheduling. `floor` is a certified lower bound that lets
/// a chunk stop once reached.
fn gray_min_weight(
    field: &Field,
    basis: &[Vec<u32>],
    free: usize,
    floor: usize,
) -> Option<(usize, Vec<u32>)> {
    let digits = basis.len();
    if digits == 0 || free == 0 {
        return None;
    }
    let n = basis[0].len();
    let p = field.characteristic() as u64;
    let supports: Vec<Vec<usize>> = basis
        .iter()
        .map(|b| (0..n).filter(|&i| b[i] != 0).collect())
        .collect();

    let mut low = 0usize;
    while low < digits && p.pow(low as u32) < 1 << 12 {
        low += 1;
    }
    let chunk_len = p.pow(low as u32);
    let chunks = p.pow((digits - low) as u32);
    let floor = floor.max(1);
    let stop_after = AtomicU64::new(u64::MAX);

    let best = (0..chunks)
        .into_par_iter()
        .filter_map(|h| {
            if h > stop_after.load(Ordering::Relaxed) {
                return None;
            }
            // gray digits of t0 = h * p^low
            let mut t_digits = vec![0u64; digits + 1];
            let mut rest = h;
            for d in t_digits.iter_mut().take(digits).skip(low) {
                *d = rest % p;
                rest /= p;
            }
            let mut gray: Vec<u32> = (0..digits)
                .map(|j| ((t_digits[j] + p - t_digits[j + 1]) % p) as u32)
                .collect();
            let mut cw = vec![0u32; n];
            for (j, &g) in gray.iter().enumerate() {
                if g != 0 {
                    linalg::axpy(&mut cw, g, &basis[j], field);
                }
            }
            let mut weight = linalg::weight(&cw);
            let mut active = gray[..free].iter().filter(|&&g| g != 0).count();
            let mut best: Option<(usize, Vec<u32>)> = (active > 0).then(|| (weight, cw.clone()));
            let done = |b: &Option<(usize, Vec<u32>)>| b.as_ref().is_some_and(|b| b.0 <= floor);

            if !done(&best) {
                for s in 1..chunk_len {
                    let mut j = 0usize;
                    let mut t = s;
                    while t % p == 0 {
                        t /= p;
                        j += 1;
                    }
                    let old = gray[j];
                    gray[j] = ((old as u64 + 1) % p) as u32;
                    if j < free {
                        if old == 0 {
                            active += 1;
                        } else if gray[j] == 0 {
                            active -= 1;
                        }
                    }
                    let b = &basis[j];
                    for &i in &supports[j] {
                        let before = cw[i];
                        let after = field.add(before, b[i]);
                        cw[i] = after;
                        match (before == 0, after == 0) {
                            (true, false) => weight += 1,
                            (false, true) => weight -= 1,
                            _ => {}
                        }
                    }
                    if active > 0 && best.as_ref().is_none_or(|b| weight < b.0) {
                        best = Some((weight, cw.clone()));
                        if weight <= floor {
                            break;
                        }
                    }
                }
            }
            if done(&best) {
                stop_after.fetch_min(h, Ordering::Relaxed);
            }
            best.map(|(weight, codeword)| ChunkBest {
                weight,
                chunk: h,
                codeword,
            })
        })
        .min_by_key(|b| (b.weight, b.chunk))?;
    Some((best.weight, best.codeword))
}

fn enumeration_fits(field: &Field, dimension: usize, cfg: &Config) -> bool {
    (field.order() as u64)
        .checked_pow(dimension as u32)
        .is_some_and(|c| c <= cfg.enumeration_cap)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Every k-subset of columns of a generator is independent.
///
/// Errors with [`QctError::SearchCapExceeded`] when C(n, k) exceeds the
/// configured subset cap.
pub fn is_mds(code: &LinearCode, cfg: &Config) -> Result<bool> {
    let (n, k) = (code.len(), code.k());
    if k == 0 || k == n {
        return Ok(true);
    }
    let count = binomial(n, k);
    if count > cfg.subset_cap as u128 {
        return Err(QctError::SearchCapExceeded(format!(
            "MDS check needs C({n},{k}) = {count} column subsets, cap is {}",
            cfg.subset_cap
        )));
    }
    let g = code.generator();
    let field = code.field();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let mut sub = Matrix::zeros(k, k);
        for r in 0..k {
            for (c, &col) in cols.iter().enumerate() {
                sub.set(r, c, g.get(r, col));
            }
        }
        if sub.rank(field) < k {
            return Ok(false);
        }
        // next combination in lexicographic order
        let mut i = k;
        while i > 0 && cols[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(true);
        }
        cols[i - 1] += 1;
        for j in i..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

/// Lightest codeword found among rows, pairwise row sums and seeded sparse
/// random combinations; vectors of `exclude` are skipped.
fn sampled_upper(
    code: &LinearCode,
    exclude: Option<&LinearCode>,
    seed: u64,
) -> Option<(usize, Vec<u32>)> {
    const RANDOM_SAMPLES: usize = 4096;
    const PAIR_LIMIT: usize = 64;
    let f = code.field();
    let rows = code.rows();
    let k = rows.len();
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut consider = |v: Vec<u32>| {
        let w = linalg::weight(&v);
        if w == 0 || best.as_ref().is_some_and(|b| b.0 <= w) {
            return;
        }
        if exclude.is_some_and(|c1| c1.contains_vector(&v)) {
            return;
        }
        best = Some((w, v));
    };
    for r in &rows {
        consider(r.clone());
    }
    if k <= PAIR_LIMIT {
        for i in 0..k {
            for j in i + 1..k {
                let mut v = rows[i].clone();
                linalg::axpy(&mut v, 1, &rows[j], f);
                consider(v.clone());
                if f.order() > 2 {
                    linalg::axpy(&mut v, f.neg(f.add(1, 1)), &rows[j], f);
                    consider(v);
                }
            }
        }
    }
    if k >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_SAMPLES {
            let terms = rng.gen_range(2..=k.min(4));
            let mut v = vec![0u32; code.len()];
            for _ in 0..terms {
                let r = rng.gen_range(0..k);
                let s = rng.gen_range(1..f.order());
                linalg::axpy(&mut v, s, &rows[r], f);
            }
            consider(v);
        }
    }
    best
}

fn bounded_result(
    lower: usize,
    from_bch: bool,
    upper: Option<(usize, Vec<u32>)>,
    declared: Option<usize>,
) -> DistanceResult {
    let method = if from_bch {
        DistanceMethod::BchBound
    } else {
        DistanceMethod::Sampling
    };
    if let Some((u, w)) = &upper {
        if *u == lower {
            return DistanceResult::exact(lower, method, w.clone());
        }
    }
    let (upper_bound, witness) = match upper {
        Some((u, w)) => (Some(u), Some(w)),
        None => (None, None),
    };
    match declared {
        Some(d) if d >= lower && upper_bound.is_none_or(|u| d <= u) => DistanceResult {
            value: d,
            exactness: Exactness::Declared,
            method: DistanceMethod::Declared,
            witness,
            lower_bound: Some(lower),
            upper_bound,
        },
        _ => DistanceResult {
            value: lower,
            exactness: Exactness::LowerBound,
            method,
            witness,
            lower_bound: None,
            upper_bound,
        },
    }
}

/// Minimum Hamming distance of a nonzero code.
///
/// Exact by Gray-code enumeration when q^k fits the enumeration cap, exact by
/// the MDS rank test when C(n, k) fits the subset cap and the code is MDS,
/// otherwise a certified lower bound with a sampled upper bound.
pub fn min_distance(code: &LinearCode, cfg: &Config) -> Result<DistanceResult> {
    if code.k() == 0 {
        return Err(QctError::Degenerate(
            "the zero code has no nonzero codeword".into(),
        ));
    }
    if let Some(d) = code.distance().filter(|d| d.is_exact()) {
        return Ok(d.clone());
    }
    let (floor, from_bch) = certified_floor(code);
    let field = code.field();
    if enumeration_fits(field, code.k(), cfg) {
        let rows = code.rows();
        let refs: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
        let basis = prime_basis(field, &refs);
        let (w, cw) = gray_min_weight(field, &basis, basis.len(), floor)
            .expect("nonzero code has a nonzero codeword");
        return Ok(DistanceResult::exact(w, DistanceMethod::Enumeration, cw));
    }
    if binomial(code.len(), code.k()) <= cfg.subset_cap as u128 && is_mds(code, cfg)? {
        let row = code.generator().row(0).to_vec();
        let d = code.len() - code.k() + 1;
        debug_assert_eq!(linalg::weight(&row), d);
        return Ok(DistanceResult::exact(d, DistanceMethod::MdsRank, row));
    }
    let declared = code
        .distance()
        .filter(|d| d.exactness == Exactness::Declared)
        .map(|d| d.value);
    let upper = sampled_upper(code, None, cfg.seed);
    Ok(bounded_result(floor, from_bch, upper, declared))
}

/// Minimum weight of C2 \ C1 for nested codes C1 < C2.
pub fn relative_min_weight(
    c2: &LinearCode,
    c1: &LinearCode,
    cfg: &Config,
) -> Result<DistanceResult> {
    if !c2.contains_code(c1)? {
        return Err(QctError::NotNested(format!(
            "[{},{}] is not contained in [{},{}]",
            c1.len(),
            c1.k(),
            c2.len(),
            c2.k()
        )));
    }
    if c1.k() == c2.k() {
        return Err(QctError::Degenerate(
            "relative weight of a code with respect to itself is undefined".into(),
        ));
    }
    if c1.k() == 0 {
        return min_distance(c2, cfg);
    }
    let field = c2.field();
    let (floor, from_bch) = certified_floor(c2);
    if enumeration_fits(field, c2.k(), cfg) {
        let complement = complement_rows(c2, c1);
        let mut refs: Vec<&[u32]> = complement.iter().map(|r| r.as_slice()).collect();
        let free = refs.len() * field.degree() as usize;
        let c1_rows = c1.rows();
        refs.extend(c1_rows.iter().map(|r| r.as_slice()));
        let basis = prime_basis(field, &refs);
        let (w, cw) = gray_min_weight(field, &basis, free, floor).expect("C2 \\ C1 is nonempty");
        return Ok(DistanceResult::exact(w, DistanceMethod::Enumeration, cw));
    }
    // every word of C2 \ C1 weighs at least d(C2); a minimum word of C2
    // outside C1 settles the question
    let full = min_distance(c2, cfg)?;
    if let Some(w) = full.witness.as_ref().filter(|_| full.is_exact()) {
        if !c1.contains_vector(w) {
            return Ok(full);
        }
    }
    let floor = floor.max(full.certified_lower());
    let from_bch = from_bch && floor == certified_floor(c2).0;
    let upper = sampled_upper(c2, Some(c1), cfg.seed);
    Ok(bounded_result(floor, from_bch, upper, None))
}

/// Rows of `c2` completing a basis of `c1` to one of `c2`.
fn complement_rows(c2: &LinearCode, c1: &LinearCode) -> Vec<Vec<u32>> {
    let field = c2.field();
    let mut span = c1.clone();
    let mut out = Vec::with_capacity(c2.k() - c1.k());
    for r in c2.rows() {
        if !span.contains_vector(&r) {
            out.push(r);
            let mut rows = span.rows();
            rows.extend(out.last().cloned());
            span = LinearCode::from_generator(field, &rows).expect("consistent rows");
        }
    }
    out
}

/// [n, k, d]_q of a nonzero code.
pub fn params(code: &LinearCode, cfg: &Config) -> Result<ClassicalParams> {
    let d = min_distance(code, cfg)?;
    Ok(ClassicalParams {
        n: code.len(),
        k: code.k(),
        d: d.value,
        exact: d.is_exact(),
        q: code.field().order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    /// Double loop over all messages; independent of the Gray walk.
    fn naive_min(code: &LinearCode, exclude: Option<&LinearCode>) -> usize {
        let q = code.field().order();
        let k = code.k();
        let mut msg = vec![0u32; k];
        let mut best = usize::MAX;
        loop {
            let mut i = 0;
            while i < k && msg[i] == q - 1 {
                msg[i] = 0;
                i += 1;
            }
            if i == k {
                return best;
            }
            msg[i] += 1;
            let cw = code.encode(&msg);
            if exclude.is_some_and(|c| c.contains_vector(&cw)) {
                continue;
            }
            let w = linalg::weight(&cw);
            if w > 0 {
                best = best.min(w);
            }
        }
    }

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
    fn hamming_and_simplex() {
        let cfg = Config::default();
        let h = hamming7();
        let d = min_distance(&h, &cfg).unwrap();
        assert_eq!((d.value, d.exactness), (3, Exactness::Exact));
        let w = d.witness.unwrap();
        assert!(h.contains_vector(&w));
        assert_eq!(linalg::weight(&w), 3);
        assert_eq!(min_distance(&h.dual(), &cfg).unwrap().value, 4);
    }

    #[test]
    fn rs_over_gf4() {
        let f = build_field(2, 2).unwrap();
        let w = f.generator();
        let c = LinearCode::from_generator(&f, &[vec![1, 1, 1], vec![1, w, f.mul(w, w)]]).unwrap();
        let cfg = Config::default();
        assert_eq!(min_distance(&c, &cfg).unwrap().value, 2);
        assert!(is_mds(&c, &cfg).unwrap());
        let d = c.dual();
        assert_eq!(d.k(), 1);
        assert_eq!(min_distance(&d, &cfg).unwrap().value, 3);
    }

    #[test]
    fn zero_code_errors() {
        let f = build_field(2, 1).unwrap();
        assert!(min_distance(&LinearCode::zero(&f, 3), &Config::default()).is_err());
    }

    #[test]
    fn relative_weight_of_nested_pair() {
        let cfg = Config::default();
        let h = hamming7();
        let f = h.field().clone();
        let rep = LinearCode::from_generator(&f, &[vec![1; 7]]).unwrap();
        let r = relative_min_weight(&h, &rep, &cfg).unwrap();
        assert_eq!(r.value, naive_min(&h, Some(&rep)));
        assert!(relative_min_weight(&h, &h, &cfg).is_err());
        assert!(matches!(
            relative_min_weight(&rep, &h, &cfg),
            Err(QctError::NotNested(_))
        ));
    }

    #[test]
    fn mds_route_beyond_enumeration_cap() {
        let f = build_field(2, 2).unwrap();
        let w = f.generator();
        let c = LinearCode::from_generator(&f, &[vec![1, 1, 1], vec![1, w, f.mul(w, w)]]).unwrap();
        let d = min_distance(&c, &Config::default().with_cap(1)).unwrap();
        assert_eq!((d.value, d.method), (2, DistanceMethod::MdsRank));
    }

    #[test]
    fn bounds_beyond_all_caps() {
        let h = hamming7();
        let cfg = Config {
            enumeration_cap: 1,
            subset_cap: 1,
            ..Config::default()
        };
        let d = min_distance(&h, &cfg).unwrap();
        assert!(d.value <= 3);
        assert!(d.upper_bound.unwrap_or(d.value) >= 3);
    }

    #[test]
    fn gray_walk_matches_naive_over_gf3_and_gf4() {
        for (p, e) in [(3, 1), (2, 2), (5, 1)] {
            let f = build_field(p, e).unwrap();
            let q = f.order();
            let rows: Vec<Vec<u32>> = (0..3)
                .map(|i| {
                    (0..7)
                        .map(|j| ((i * 5 + j * j * 3 + i * j + 1) as u32) % q)
                        .collect()
                })
                .collect();
            let c = LinearCode::from_generator(&f, &rows).unwrap();
            let d = min_distance(&c, &Config::default()).unwrap();
            assert_eq!(d.value, naive_min(&c, None), "GF({q})");
        }
    }

    #[test]
    fn direct_sum_distance_is_the_minimum() {
        let f = build_field(2, 2).unwrap();
        let w = f.generator();
        let cfg = Config::default();
        let rs = LinearCode::from_generator(&f, &[vec![1, 1, 1], vec![1, w, f.mul(w, w)]]).unwrap();
        let rs = rs.clone().with_distance(min_distance(&rs, &cfg).unwrap());
        let ext = rs.extend_parity();
        assert_eq!(min_distance(&ext, &cfg).unwrap().value, 3);
        let sum = rs.direct_sum(&ext).unwrap();
        assert_eq!((sum.len(), sum.k()), (7, 4));
        let cached = sum.distance().unwrap();
        assert!(cached.is_exact());
        assert!(sum.contains_vector(cached.witness.as_ref().unwrap()));
        assert_eq!(cached.value, naive_min(&sum, None));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(15, 9), 5005);
        assert_eq!(binomial(4, 0), 1);
    }
}
