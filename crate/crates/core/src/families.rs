//! Classical code families: Reed-Solomon, narrow-sense BCH, the simplex pair
//! S_m < C_0, Preparata-like binary cyclic codes, MDS negacyclic codes, and
//! imported codes.

use crate::config::Config;
use crate::error::{QctError, Result};
use crate::galois::Field;
use crate::linalg;
use crate::lincode::{
    is_mds, min_distance, CodeRecord, DistanceMethod, DistanceResult, LinearCode,
};
use crate::polyalg::{
    bch_bound, bch_defining_set, cyclotomic_coset, defining_set_closure, gcd,
    generator_from_defining_set, hermitian_dual_defining_set, CodeKind, DefiningSet,
};

/// Cyclic or negacyclic code with the given closed defining set, generated by
/// the shifts x^i g(x), i < n - |T|.
pub fn code_from_defining_set(field: &Field, t: &DefiningSet) -> Result<LinearCode> {
    let g = generator_from_defining_set(t, field)?;
    let n = t.n as usize;
    let k = t.dimension();
    let gc = g.coeffs();
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            let mut r = vec![0u32; n];
            r[i..i + gc.len()].copy_from_slice(gc);
            r
        })
        .collect();
    let code = if k == 0 {
        LinearCode::zero(field, n)
    } else {
        LinearCode::from_generator(field, &rows)?
    };
    assert_eq!(
        code.k(),
        k,
        "shifts of the generator polynomial are independent"
    );
    Ok(code.with_defining_set(t.clone()))
}

/// Reed-Solomon [q-1, k, q-k] code: evaluations of polynomials of degree < k
/// at g^0, g^1, ..., g^(q-2).
pub fn rs_code(field: &Field, k: usize) -> Result<LinearCode> {
    let q = field.order();
    let n = q as usize - 1;
    if k < 1 || k > n {
        return Err(QctError::InvalidParameters(format!(
            "RS dimension {k} outside [1, {n}] over {field}"
        )));
    }
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| (0..n).map(|j| field.exp((i * j) as u64)).collect())
        .collect();
    // the evaluation code is cyclic with zeros alpha^1..alpha^(n-k)
    let t = DefiningSet::new(
        CodeKind::Cyclic,
        n as u32,
        q,
        (1..=(n - k) as u32).collect(),
    )?;
    let code = LinearCode::from_generator(field, &rows)?;
    let d = n - k + 1;
    let witness = code.generator().row(0).to_vec();
    assert_eq!(linalg::weight(&witness), d);
    Ok(code
        .with_defining_set(t)
        .with_distance(DistanceResult::exact(d, DistanceMethod::BchBound, witness))
        .with_provenance(format!("RS[{n},{k}]_{q}")))
}

/// Narrow-sense BCH code of length n and designed distance delta.
pub fn bch_narrow_sense(field: &Field, n: usize, delta: usize) -> Result<LinearCode> {
    let q = field.order();
    if n < 2 || gcd(n as u64, q as u64) != 1 {
        return Err(QctError::InvalidParameters(format!(
            "BCH length {n} must be >= 2 and coprime to {q}"
        )));
    }
    let t = bch_defining_set(n as u32, q, delta as u32)?;
    let floor = DistanceResult::lower(bch_bound(&t), DistanceMethod::BchBound);
    Ok(code_from_defining_set(field, &t)?
        .with_distance(floor)
        .with_provenance(format!("BCH(n={n},q={q},delta={delta})")))
}

/// The simplex code S_m and the [2^m-1, m+1] cyclic code C_0 containing it
/// together with the all-ones word.
pub fn simplex_and_c0(m: u32) -> Result<(LinearCode, LinearCode)> {
    if !(2..=20).contains(&m) {
        return Err(QctError::InvalidParameters(format!(
            "simplex order m = {m} outside [2, 20]"
        )));
    }
    let f = Field::new(2, 1)?;
    let n = (1u32 << m) - 1;
    let neg_one = cyclotomic_coset(n, 2, n - 1)?.members;
    let s_set: Vec<u32> = (0..n).filter(|i| !neg_one.contains(i)).collect();
    let c0_set: Vec<u32> = (1..n).filter(|i| !neg_one.contains(i)).collect();
    let s = code_from_defining_set(&f, &DefiningSet::new(CodeKind::Cyclic, n, 2, s_set)?)?
        .with_provenance(format!("S_{m}"));
    let c0 = code_from_defining_set(&f, &DefiningSet::new(CodeKind::Cyclic, n, 2, c0_set)?)?
        .with_provenance(format!("C0_{m}"));
    Ok((s, c0))
}

/// Binary cyclic [2^m-1, 2^m-2m-1] code with defining set Cl(1) u Cl(2^i+1).
///
/// The minimum distance is enumerated when 2^k fits the cap; otherwise the
/// value 5 is attached as declared.
pub fn preparata_like_bi(m: u32, i: u32, cfg: &Config) -> Result<LinearCode> {
    let mut failures = Vec::new();
    if m.is_multiple_of(2) {
        failures.push(format!("m = {m} must be odd"));
    }
    if i == 0 || gcd(i as u64, m as u64) != 1 {
        failures.push(format!("gcd(i, m) = gcd({i}, {m}) must be 1"));
    }
    if i >= 31 || (1u64 << i) + 1 > (1u64 << m.div_ceil(2)) - 1 {
        failures.push(format!(
            "2^i + 1 must be <= 2^ceil(m/2) - 1 (i = {i}, m = {m})"
        ));
    }
    if !(3..=20).contains(&m) {
        failures.push(format!("m = {m} outside the supported range [3, 20]"));
    }
    if !failures.is_empty() {
        return Err(QctError::Preconditions(failures));
    }
    let f = Field::new(2, 1)?;
    let n = (1u32 << m) - 1;
    let t = defining_set_closure(&[1, (1 << i) + 1], CodeKind::Cyclic, n, 2)?;
    let want = n as usize - 2 * m as usize;
    if t.dimension() != want {
        return Err(QctError::InvalidDefiningSet(format!(
            "Cl(1) u Cl(2^{i}+1) gives dimension {}, expected {want}",
            t.dimension()
        )));
    }
    let code = code_from_defining_set(&f, &t)?.with_provenance(format!("B_{i}(m={m})"));
    let d = min_distance(&code, cfg)?;
    let d = if d.is_exact() {
        d
    } else {
        DistanceResult {
            lower_bound: Some(d.certified_lower()),
            ..DistanceResult::declared(5)
        }
    };
    Ok(code.with_distance(d))
}

/// MDS negacyclic code C_s over GF(q^2) with defining set {1, 3, ..., s-1},
/// checked to contain its Hermitian dual.
pub fn negacyclic_cs(q: u32, n: usize, s: usize, cfg: &Config) -> Result<LinearCode> {
    let mut failures = Vec::new();
    let base = Field::of_order(q).ok();
    if base.is_none() {
        failures.push(format!("q = {q} must be a prime power"));
    }
    if q.is_multiple_of(2) {
        failures.push(format!("q = {q} must be odd"));
    }
    if q % 4 != 1 {
        failures.push(format!("q = {q} must be 1 mod 4"));
    }
    if n == 0 || !n.is_multiple_of(2) {
        failures.push(format!("n = {n} must be even and positive"));
    }
    if n == 0 || !(q as usize).saturating_sub(1).is_multiple_of(n.max(1)) {
        failures.push(format!(
            "n = {n} must divide q - 1 = {}",
            q.saturating_sub(1)
        ));
    }
    if !s.is_multiple_of(2) || s < 2 {
        failures.push(format!("s = {s} must be a positive even integer"));
    }
    if s > n {
        failures.push(format!("s = {s} must be <= n = {n}"));
    }
    if !failures.is_empty() {
        return Err(QctError::Preconditions(failures));
    }
    let base = base.expect("checked above");
    let field = Field::new(base.characteristic(), 2 * base.degree())?;
    let raw: Vec<u32> = (1..s as u32).step_by(2).collect();
    let t = defining_set_closure(&raw, CodeKind::Negacyclic, n as u32, field.order())?;
    let code = code_from_defining_set(&field, &t)?.with_provenance(format!("C_{s}(q={q},n={n})"));
    let k = code.k();
    if k != n - s / 2 {
        return Err(QctError::InvalidDefiningSet(format!(
            "negacyclic defining set has {} exponents, expected {}",
            t.len(),
            s / 2
        )));
    }
    if !is_mds(&code, cfg)? {
        return Err(QctError::NotMds(format!("C_{s} over {field} is not MDS")));
    }
    let d = n - k + 1;
    let witness = code.generator().row(0).to_vec();
    let code = code.with_distance(DistanceResult::exact(d, DistanceMethod::MdsRank, witness));

    let h_set = hermitian_dual_defining_set(&t, q)?;
    let by_sets = t.code_contains(&h_set);
    let by_matrix = code.contains_code(&code.hermitian_dual()?)?;
    if by_sets != by_matrix {
        return Err(QctError::InvalidDefiningSet(format!(
            "Hermitian containment disagrees: defining sets say {by_sets}, matrices say {by_matrix}"
        )));
    }
    if !by_sets {
        return Err(QctError::NotNested(format!(
            "C_{s}^(perp h) is not contained in C_{s}: T = {:?}, Hermitian dual set = {:?}",
            t.exponents, h_set.exponents
        )));
    }
    Ok(code)
}

/// Parses a JSON code record.
pub fn import_code(json: &str) -> Result<LinearCode> {
    let rec: CodeRecord =
        serde_json::from_str(json).map_err(|e| QctError::MalformedRecord(e.to_string()))?;
    rec.to_code()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincode::Exactness;

    #[test]
    fn rs_parameters() {
        let f = Field::of_order(4).unwrap();
        let c = rs_code(&f, 2).unwrap();
        assert_eq!((c.len(), c.k(), c.distance().unwrap().value), (3, 2, 2));
        let f16 = Field::of_order(16).unwrap();
        let c = rs_code(&f16, 9).unwrap();
        assert_eq!((c.len(), c.k()), (15, 9));
        assert!(is_mds(&c, &Config::default()).unwrap());
        assert_eq!(rs_code(&f16, 15).unwrap().distance().unwrap().value, 1);
        assert!(rs_code(&f16, 0).is_err());
        assert!(rs_code(&f16, 16).is_err());
        assert!(Field::of_order(6).is_err());
    }

    #[test]
    fn rs_code_is_the_cyclic_code_of_its_defining_set() {
        let f = Field::of_order(8).unwrap();
        let c = rs_code(&f, 3).unwrap();
        let t = c.defining_set().unwrap().clone();
        assert_eq!(code_from_defining_set(&f, &t).unwrap(), c);
    }

    #[test]
    fn bch_over_gf4() {
        let f = Field::of_order(4).unwrap();
        let cfg = Config::default();
        let c = bch_narrow_sense(&f, 15, 3).unwrap();
        assert_eq!(c.k(), 11);
        assert!(c.contains_allones());
        assert_eq!(min_distance(&c, &cfg).unwrap().value, 3);
        let c = bch_narrow_sense(&f, 15, 11).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(min_distance(&c, &cfg).unwrap().value, 11);
        assert!(bch_narrow_sense(&f, 14, 3).is_err());
        assert!(bch_narrow_sense(&f, 15, 1).is_err());
    }

    #[test]
    fn binary_bch_dimension_formula() {
        let f = Field::of_order(2).unwrap();
        for m in 4..=7u32 {
            let n = (1usize << m) - 1;
            let limit = (1usize << m.div_ceil(2)) - 1;
            for delta in (3..=limit).step_by(2) {
                let c = bch_narrow_sense(&f, n, delta).unwrap();
                assert_eq!(
                    c.k(),
                    n - m as usize * (delta - 1) / 2,
                    "m={m} delta={delta}"
                );
            }
        }
    }

    #[test]
    fn simplex_pairs() {
        let cfg = Config::default();
        for (m, s_d, c0_d) in [(3, 4, 3), (4, 8, 7)] {
            let (s, c0) = simplex_and_c0(m).unwrap();
            let n = (1usize << m) - 1;
            assert_eq!((s.len(), s.k(), c0.k()), (n, m as usize, m as usize + 1));
            assert_eq!(min_distance(&s, &cfg).unwrap().value, s_d);
            assert_eq!(min_distance(&c0, &cfg).unwrap().value, c0_d);
        }
        for m in 2..=6 {
            let (s, c0) = simplex_and_c0(m).unwrap();
            assert!(c0.contains_code(&s).unwrap());
            assert!(c0.contains_allones());
        }
    }

    #[test]
    fn preparata_like_preconditions() {
        let cfg = Config::default();
        match preparata_like_bi(5, 5, &cfg) {
            Err(QctError::Preconditions(v)) => {
                assert!(v.iter().any(|s| s.contains("gcd")));
            }
            other => panic!("unexpected {other:?}"),
        }
        match preparata_like_bi(6, 4, &cfg) {
            Err(QctError::Preconditions(v)) => assert!(v.len() >= 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn preparata_like_m7_is_declared() {
        let c = preparata_like_bi(7, 3, &Config::default()).unwrap();
        assert_eq!((c.len(), c.k()), (127, 113));
        let d = c.distance().unwrap();
        assert_eq!((d.value, d.exactness), (5, Exactness::Declared));
        assert!(d.lower_bound.unwrap() >= 3);
    }

    #[test]
    fn negacyclic_mds_codes() {
        let cfg = Config::default();
        let c = negacyclic_cs(9, 8, 4, &cfg).unwrap();
        assert_eq!((c.len(), c.k(), c.field().order()), (8, 6, 81));
        assert_eq!(c.distance().unwrap().value, 3);
        let h = hermitian_dual_defining_set(c.defining_set().unwrap(), 9).unwrap();
        assert_eq!(h.exponents, vec![1, 3, 9, 11, 13, 15]);
        let c = negacyclic_cs(9, 8, 2, &cfg).unwrap();
        assert_eq!((c.k(), c.distance().unwrap().value), (7, 2));
        let c = negacyclic_cs(5, 4, 2, &cfg).unwrap();
        assert_eq!((c.len(), c.k(), c.field().order()), (4, 3, 25));
    }

    #[test]
    fn negacyclic_s6_does_not_contain_its_hermitian_dual() {
        // -9 * {1, 3, 5} = {7, 5, 3} mod 16 meets T
        assert!(matches!(
            negacyclic_cs(9, 8, 6, &Config::default()),
            Err(QctError::NotNested(_))
        ));
    }

    #[test]
    fn negacyclic_preconditions_are_itemized() {
        match negacyclic_cs(7, 3, 5, &Config::default()) {
            Err(QctError::Preconditions(v)) => assert!(v.len() >= 4, "{v:?}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn import_examples() {
        let f = Field::of_order(2).unwrap();
        let ext_hamming = vec![
            vec![1, 0, 0, 0, 0, 1, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 0, 1],
            vec![0, 0, 0, 1, 1, 1, 1, 0],
        ];
        let rec = CodeRecord::from_code(&LinearCode::from_generator(&f, &ext_hamming).unwrap());
        let c = import_code(&serde_json::to_string(&rec).unwrap()).unwrap();
        assert_eq!(c.dual(), c);
        let id = CodeRecord::from_code(&LinearCode::whole_space(&f, 3));
        assert_eq!(
            import_code(&serde_json::to_string(&id).unwrap()).unwrap(),
            LinearCode::whole_space(&f, 3)
        );
        let mut bad = serde_json::to_value(&rec).unwrap();
        bad["field"]["p"] = 3.into();
        assert!(import_code(&bad.to_string()).is_err());
        assert!(import_code("{").is_err());
    }
}
