use proptest::prelude::*;

use qct::families::code_from_defining_set;
use qct::galois::{ExtensionBasis, Field, Tower};
use qct::lincode::{expand_basis, min_distance, Exactness, LinearCode};
use qct::polyalg::{cyclotomic_coset, defining_set_closure, hermitian_dual_defining_set, CodeKind};
use qct::Config;

fn same_code(a: &LinearCode, b: &LinearCode) -> bool {
    a.field().descriptor() == b.field().descriptor() && a.len() == b.len() && a.rows() == b.rows()
}

/// A random code over GF(q) given as a raw generator (possibly rank deficient).
fn raw_generator(
    q: u32,
    max_n: usize,
    max_rows: usize,
) -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1..=max_n).prop_flat_map(move |n| {
        let rows = prop::collection::vec(prop::collection::vec(0..q, n), 1..=max_rows.min(n));
        (Just(n), rows)
    })
}

fn phi_case(p: u32) -> impl Strategy<Value = (Vec<Vec<u32>>, Vec<u32>)> {
    let q = p * p;
    (
        raw_generator(q, 8, 8).prop_map(|(_, g)| g),
        prop::collection::vec(1..q, 2),
    )
}

fn check_phi(p: u32, g: &[Vec<u32>], basis: Vec<u32>) -> Result<(), TestCaseError> {
    let sub = Field::new(p, 1).unwrap();
    let tower = Tower::new(&sub, 2).unwrap();
    let Ok(b) = ExtensionBasis::new(&tower, basis) else {
        // not linearly independent over the subfield
        return Err(TestCaseError::reject("dependent basis"));
    };
    let c = LinearCode::from_generator(tower.ext(), g).unwrap();
    let b_dual = b.dual();
    let expanded_perp = expand_basis(&c, &b).unwrap().dual();

    let euclid = expand_basis(&c.dual(), &b_dual).unwrap();
    prop_assert!(same_code(&euclid, &expanded_perp), "Euclidean identity");

    let herm = expand_basis(&c.hermitian_dual().unwrap(), &b_dual.conjugate()).unwrap();
    prop_assert!(same_code(&herm, &expanded_perp), "Hermitian identity");
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_duality_gf4_over_gf2((g, basis) in phi_case(2)) {
        check_phi(2, &g, basis)?;
    }

    #[test]
    fn phi_duality_gf9_over_gf3((g, basis) in phi_case(3)) {
        check_phi(3, &g, basis)?;
    }

    #[test]
    fn phi_preserves_nesting((g, basis) in phi_case(3), drop in 0usize..8) {
        let sub = Field::new(3, 1).unwrap();
        let tower = Tower::new(&sub, 2).unwrap();
        let b = match ExtensionBasis::new(&tower, basis) {
            Ok(b) => b,
            Err(_) => return Err(TestCaseError::reject("dependent basis")),
        };
        let big = LinearCode::from_generator(tower.ext(), &g).unwrap();
        prop_assume!(big.k() > 1);
        let mut rows = big.rows();
        rows.remove(drop % rows.len());
        let small = LinearCode::from_generator(tower.ext(), &rows).unwrap();
        let (eb, es) = (expand_basis(&big, &b).unwrap(), expand_basis(&small, &b).unwrap());
        prop_assert!(eb.contains_code(&es).unwrap());
        prop_assert_eq!(eb.k(), 2 * big.k());
    }
}

/// Literal substitution of the Hermitian dual into the Euclidean identity,
/// without conjugating the dual basis. Kept to document that it does not hold.
#[test]
fn literal_hermitian_substitution_fails_somewhere() {
    let sub = Field::new(2, 1).unwrap();
    let tower = Tower::new(&sub, 2).unwrap();
    let ext = tower.ext();
    let mut failures = 0;
    for a in 1..4 {
        for b2 in 1..4 {
            let Ok(b) = ExtensionBasis::new(&tower, vec![a, b2]) else {
                continue;
            };
            for x in 0..4 {
                let c = LinearCode::from_generator(ext, &[vec![1, x]]).unwrap();
                let lhs = expand_basis(&c.hermitian_dual().unwrap(), &b.dual()).unwrap();
                let rhs = expand_basis(&c, &b).unwrap().dual();
                if !same_code(&lhs, &rhs) {
                    failures += 1;
                }
            }
        }
    }
    assert!(failures > 0);
}

#[test]
fn negacyclic_hermitian_dual_defining_set_matches_matrix() {
    let field = Field::new(3, 2).unwrap();
    let mut checked = 0;
    for n in 1u32..=12 {
        if n % 3 == 0 {
            continue;
        }
        let mut cosets: Vec<Vec<u32>> = Vec::new();
        for s in (1..2 * n).step_by(2) {
            let c = cyclotomic_coset(2 * n, 9, s).unwrap();
            if !cosets.iter().any(|k| k.contains(&s)) {
                cosets.push(c.members);
            }
        }
        for mask in 0u32..(1 << cosets.len()) {
            let raw: Vec<u32> = (0..cosets.len())
                .filter(|i| mask >> i & 1 == 1)
                .flat_map(|i| cosets[i].clone())
                .collect();
            let t = defining_set_closure(&raw, CodeKind::Negacyclic, n, 9).unwrap();
            let code = code_from_defining_set(&field, &t).unwrap();
            let th = hermitian_dual_defining_set(&t, 3).unwrap();
            let from_set = code_from_defining_set(&field, &th).unwrap();
            let from_matrix = code.hermitian_dual().unwrap();
            assert!(
                same_code(&from_set, &from_matrix),
                "n = {n}, T = {:?}",
                t.exponents
            );
            checked += 1;
        }
    }
    assert!(checked > 20);
}

/// Minimum distance as the least distance between two distinct codewords.
fn naive_distance(code: &LinearCode) -> usize {
    let q = code.field().order();
    let k = code.k();
    let words: Vec<Vec<u32>> = (0..(q as u64).pow(k as u32))
        .map(|mut idx| {
            let msg: Vec<u32> = (0..k)
                .map(|_| {
                    let d = (idx % q as u64) as u32;
                    idx /= q as u64;
                    d
                })
                .collect();
            code.encode(&msg)
        })
        .collect();
    let mut best = usize::MAX;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            let d = x.iter().zip(y).filter(|(a, b)| a != b).count();
            best = best.min(d);
        }
    }
    best
}

fn small_code() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 16]).prop_flat_map(|q| {
        let max_k = (12.0 / (q as f64).log2()).floor() as usize;
        raw_generator(q, 10, max_k).prop_map(move |(_, g)| (q, g))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn enumeration_matches_pairwise_oracle((q, g) in small_code()) {
        let field = Field::of_order(q).unwrap();
        let code = LinearCode::from_generator(&field, &g).unwrap();
        prop_assume!(code.k() > 0);
        prop_assert!((q as u64).pow(code.k() as u32) <= 1 << 12);
        let d = min_distance(&code, &Config::default()).unwrap();
        prop_assert_eq!(d.exactness, Exactness::Exact);
        prop_assert_eq!(d.value, naive_distance(&code));
    }
}
