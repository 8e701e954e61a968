use serde::{Deserialize, Serialize};

use super::bounds::{bound, BoundKind};
use super::css::{allone_aqc, css_with_duals, with_min_distance, CssRun};
use super::params::{AqcParams, Check, Purity, Side};
use crate::config::Config;
use crate::error::{QctError, Result};
use crate::families::{
    bch_narrow_sense, negacyclic_cs, preparata_like_bi, rs_code, simplex_and_c0,
};
use crate::galois::{find_self_dual_basis, ExtensionBasis, Field, Tower};
use crate::lincode::{expand_with_parity, min_distance, DistanceResult, LinearCode};
use crate::polyalg::{bch_defining_set, DefiningSet};

/// What a construction asserts about one member of the distance pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Claim {
    /// The formula gives this value.
    Exact(usize),
    /// A certified lower bound (BCH or similar).
    AtLeast(usize),
}

impl Claim {
    fn value(self) -> usize {
        match self {
            Claim::Exact(v) | Claim::AtLeast(v) => v,
        }
    }
}

/// Reconciles a claim with a computed distance. Never returns a value the
/// computation contradicts.
fn settle(
    label: &str,
    claim: Claim,
    computed: Option<&DistanceResult>,
    extra_upper: Option<usize>,
) -> (Side, Option<Check>) {
    let c = claim.value();
    let Some(d) = computed else {
        return (Side::bound(c, extra_upper), None);
    };
    if d.is_exact() {
        let ok = match claim {
            Claim::Exact(_) => d.value == c,
            Claim::AtLeast(_) => d.value >= c,
        };
        let rel = if matches!(claim, Claim::Exact(_)) {
            "="
        } else {
            ">="
        };
        let detail = format!("computed {} exactly; construction says {rel} {c}", d.value);
        return (Side::exact(d.value), Some(Check::new(label, ok, detail)));
    }
    let lower = d.certified_lower();
    let upper = match (d.upper_bound, extra_upper) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let below_upper = upper.is_none_or(|u| c <= u);
    let span = match upper {
        Some(u) => format!("[{lower}, {u}]"),
        None => format!("[{lower}, ?]"),
    };
    match claim {
        Claim::Exact(_) => {
            let ok = lower <= c && below_upper;
            let detail = format!("computed range {span}; construction says {c}");
            let side = if ok {
                Side::bound(c, upper)
            } else {
                Side::bound(lower, upper)
            };
            (side, Some(Check::new(label, ok, detail)))
        }
        Claim::AtLeast(_) => {
            let detail = format!("computed range {span}; certified >= {c}");
            let value = if below_upper { lower.max(c) } else { lower };
            (
                Side::bound(value, upper),
                Some(Check::new(label, below_upper, detail)),
            )
        }
    }
}

/// Builds the emitted record from claims and (optionally) a CSS run whose z
/// and x sides are given in the construction's orientation.
struct Derivation<'a> {
    n: usize,
    k: usize,
    q: u32,
    construction: &'a str,
    z: (Claim, Option<&'a DistanceResult>, Option<usize>),
    x: (Claim, Option<&'a DistanceResult>, Option<usize>),
    run: Option<&'a AqcParams>,
}

impl Derivation<'_> {
    fn emit(self) -> Result<AqcParams> {
        let (zs, zc) = settle("dz_matches_construction", self.z.0, self.z.1, self.z.2);
        let (xs, xc) = settle("dx_matches_construction", self.x.0, self.x.1, self.x.2);
        let mut p = AqcParams::new(self.n, self.k, self.q, zs, xs, self.construction)?;
        if let Some(run) = self.run {
            p.provenance.inputs = run.provenance.inputs.clone();
            p.provenance
                .checks
                .extend(run.provenance.checks.iter().cloned());
            p.provenance
                .notes
                .extend(run.provenance.notes.iter().cloned());
            if p.is_exact() {
                p.purity = run.purity;
            }
        }
        p.provenance.checks.extend(zc);
        p.provenance.checks.extend(xc);
        if !(zs.exact && xs.exact) {
            p.provenance
                .notes
                .push("non-exact members are construction values within the computed bounds, or certified lower bounds when the computation contradicts them".into());
        }
        Ok(p)
    }
}

fn field_of_order(q: u32, failures: &mut Vec<String>) -> Option<Field> {
    match Field::of_order(q) {
        Ok(f) => Some(f),
        Err(e) => {
            failures.push(format!("q = {q}: {e}"));
            None
        }
    }
}

fn nested_or_err(c1: &LinearCode, c2: &LinearCode, what: &str) -> Result<()> {
    if !c2.contains_code(c1)? {
        return Err(QctError::NotNested(what.to_string()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// all-ones families

#[derive(Debug, Clone)]
pub enum ThBestInput {
    /// A narrow-sense BCH code of length n and designed distance delta
    /// over GF(q); yields the code and its puncture.
    NarrowSenseBch { q: u32, n: usize, delta: usize },
    /// A binary self-dual code (checked).
    SelfDual(LinearCode),
    /// The simplex pair S_m < C_0.
    Simplex { m: u32 },
}

pub fn th_best_family(input: &ThBestInput, cfg: &Config) -> Result<Vec<AqcParams>> {
    match input {
        ThBestInput::NarrowSenseBch { q, n, delta } => {
            let field = Field::of_order(*q)?;
            let code = with_min_distance(bch_narrow_sense(&field, *n, *delta)?, cfg)?;
            let d = code.distance().expect("attached").clone();
            let full = allone_aqc(&code, cfg)?;
            let punctured = code.puncture(n - 1)?;
            let mut short = allone_aqc(&punctured, cfg)?;
            if d.is_exact() && short.exact.dz {
                let ok = short.dz + 1 == d.value;
                let detail = format!("d = {}, punctured dz = {}", d.value, short.dz);
                short = short.with_check(Check::new("puncture_drops_distance_by_one", ok, detail));
            }
            Ok(vec![full, short])
        }
        ThBestInput::SelfDual(code) => {
            let mut failures = Vec::new();
            if code.field().order() != 2 {
                failures.push(format!(
                    "code is over GF({}), not binary",
                    code.field().order()
                ));
            }
            if code.dual() != *code {
                failures.push(format!("{:?} is not self-dual", code));
            }
            if !failures.is_empty() {
                return Err(QctError::Preconditions(failures));
            }
            let p = allone_aqc(code, cfg)?;
            let ok = p.k + 1 == code.len() / 2;
            Ok(vec![p.with_check(Check::new(
                "dimension_n_over_2_minus_1",
                ok,
                format!("n = {}, k = {}", code.len(), code.k()),
            ))])
        }
        ThBestInput::Simplex { m } => {
            let (s, c0) = simplex_and_c0(*m)?;
            let n = (1usize << m) - 1;
            let half = 1usize << (m - 1);
            let s = with_min_distance(s, cfg)?;
            let ds = s.distance().expect("attached").clone();
            let c0 = with_min_distance(c0, cfg)?;
            let dc = c0.distance().expect("attached").clone();
            let mut p = allone_aqc(&c0, cfg)?;
            p.provenance.construction = "simplex_allone".into();
            let checks = [
                Check::new(
                    "simplex_parameters",
                    s.k() == *m as usize && ds.is_exact() && ds.value == half,
                    format!("S_{m} = [{n},{},{ds}]", s.k()),
                ),
                Check::new(
                    "c0_parameters",
                    c0.k() == *m as usize + 1 && dc.is_exact() && dc.value == half - 1,
                    format!("C_0 = [{n},{},{dc}]", c0.k()),
                ),
                Check::new(
                    "simplex_in_c0",
                    c0.contains_code(&s)?,
                    "S_m < C_0 on matrices",
                ),
                Check::new("c0_contains_all_ones", c0.contains_allones(), ""),
            ];
            for c in checks {
                p = p.with_check(c);
            }
            Ok(vec![p])
        }
    }
}

// ---------------------------------------------------------------------------
// binary BCH pairs

/// Quantum BCH pair C1 = B(delta2)^perp < C2 = B(delta1) of length 2^m - 1,
/// [[n, n + m - m(delta1 + delta2)/2, {dz, dx}]] with dz = wt(B(delta2)) and
/// dx = wt(B(delta1)).
///
/// Matrices are built (and distances attempted) when n fits the configured
/// matrix length cap; otherwise everything is decided on defining sets and
/// the distances are the BCH lower bounds.
pub fn lemma_bch1(m: u32, delta1: usize, delta2: usize, cfg: &Config) -> Result<AqcParams> {
    let mut failures = Vec::new();
    if !(2..=20).contains(&m) {
        failures.push(format!("m = {m} outside [2, 20]"));
    }
    let limit = if m < 64 {
        (1usize << m.div_ceil(2)) - 1
    } else {
        0
    };
    if !(2 <= delta1 && delta1 <= delta2 && delta2 <= limit) {
        failures.push(format!(
            "need 2 <= delta1 <= delta2 <= 2^ceil(m/2) - 1 = {limit}, got ({delta1}, {delta2})"
        ));
    }
    for (name, d) in [("delta1", delta1), ("delta2", delta2)] {
        if d % 2 == 0 {
            failures.push(format!("{name} = {d} must be odd"));
        }
    }
    if !failures.is_empty() {
        return Err(QctError::Preconditions(failures));
    }
    let n = (1usize << m) - 1;
    let mu = m as usize;
    let t1 = bch_defining_set(n as u32, 2, delta1 as u32)?;
    let t2 = bch_defining_set(n as u32, 2, delta2 as u32)?;
    let mut checks = Vec::new();
    for (name, t, d) in [("delta1", &t1, delta1), ("delta2", &t2, delta2)] {
        let want = n - mu * (d - 1) / 2;
        checks.push(Check::new(
            format!("dimension_formula_{name}"),
            t.dimension() == want,
            format!(
                "dim B({d}) = {} by cosets, {want} by formula",
                t.dimension()
            ),
        ));
    }
    // C1 = B(delta2)^perp < C2 = B(delta1)  iff  T1 is inside T(C1)
    let c1_set = t2.euclidean_dual();
    if !t1.code_contains(&c1_set) {
        return Err(QctError::NotNested(format!(
            "B({delta2})^perp is not inside B({delta1}): defining sets intersect after negation"
        )));
    }
    checks.push(Check::new(
        "nested_by_defining_sets",
        true,
        "T(B(delta1)) and -T(B(delta2)) are disjoint",
    ));
    let k_sets = t1.dimension() - (n - t2.dimension());
    let k_formula = (n + mu) as i64 - (mu * (delta1 + delta2) / 2) as i64;
    checks.push(Check::new(
        "dimension_formula",
        k_formula == k_sets as i64,
        format!("k = {k_sets} from defining sets, {k_formula} from the closed formula"),
    ));

    // upper bounds: d(B(delta)) <= m(delta-1)/2 + 1, and that minimum word
    // avoids B(delta')^perp whenever it is lighter than its Carlitz-Uchiyama
    // floor
    let sw = |d: usize| bound(BoundKind::SingletonWt { m, delta: d as u64 });
    let cu = |d: usize| bound(BoundKind::CarlitzUchiyama { m, delta: d as u64 });
    let z_upper = (sw(delta2) < cu(delta1)).then_some(sw(delta2) as usize);
    let x_upper = (sw(delta1) < cu(delta2)).then_some(sw(delta1) as usize);
    let mut notes = vec![
        format!(
            "Carlitz-Uchiyama: d(B({delta1})^perp) >= {}, d(B({delta2})^perp) >= {}",
            cu(delta1),
            cu(delta2)
        ),
        format!(
            "Singleton: d(B({delta1})) <= {}, d(B({delta2})) <= {}",
            sw(delta1),
            sw(delta2)
        ),
    ];
    if z_upper.is_none() {
        notes.push(format!(
            "no certified upper bound on dz: {} >= {}",
            sw(delta2),
            cu(delta1)
        ));
    }
    if x_upper.is_none() {
        notes.push(format!(
            "no certified upper bound on dx: {} >= {}",
            sw(delta1),
            cu(delta2)
        ));
    }

    let field = Field::new(2, 1)?;
    let run: Option<CssRun> = if n <= cfg.matrix_length_cap {
        let b1 = bch_narrow_sense(&field, n, delta1)?;
        let b2 = bch_narrow_sense(&field, n, delta2)?;
        let c1 = b2.dual();
        nested_or_err(
            &c1,
            &b1,
            "B(delta2)^perp is not inside B(delta1) on matrices",
        )?;
        checks.push(Check::new("nested_by_matrices", true, ""));
        let k_rank = b1.k() - c1.k();
        assert_eq!(k_rank, k_sets, "matrix rank and defining sets agree");
        checks.push(Check::new(
            "dimension_by_rank",
            k_rank as i64 == k_formula,
            format!("rank gives k = {k_rank}"),
        ));
        let d1 = c1.dual();
        let d2 = b1.dual();
        Some(css_with_duals(&c1, &b1, d1, d2, "lemma_bch1", cfg)?)
    } else {
        None
    };
    // construction orientation: dz = wt(B(delta2) \ B(delta1)^perp) is the
    // CSS x side, dx = wt(B(delta1) \ B(delta2)^perp) the CSS z side
    let mut p = Derivation {
        n,
        k: k_sets,
        q: 2,
        construction: "lemma_bch1",
        z: (Claim::AtLeast(delta2), run.as_ref().map(|r| &r.x), z_upper),
        x: (Claim::AtLeast(delta1), run.as_ref().map(|r| &r.z), x_upper),
        run: run.as_ref().map(|r| &r.params),
    }
    .emit()?;
    p.provenance.inputs = vec![
        format!("B({delta2})^perp (m={m})"),
        format!("B({delta1}) (m={m})"),
    ];
    p.provenance.checks.extend(checks);
    p.provenance.notes.extend(notes);
    Ok(p)
}

/// One of the two families of the Preparata-related construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyOutcome {
    pub label: String,
    pub formula_k: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<AqcParams>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpinFamilies {
    pub first: FamilyOutcome,
    pub second: FamilyOutcome,
}

/// Both families built from B_i (defining set Cl(1) u Cl(2^i+1)) and the BCH
/// code B(2^i + 1): C1 = B(delta)^perp < B_i, and C1 = B(delta) < B_i.
pub fn charpin_family(m: u32, i: u32, cfg: &Config) -> Result<CharpinFamilies> {
    let bi = preparata_like_bi(m, i, cfg)?;
    let n = (1usize << m) - 1;
    let mu = m as i64;
    let delta = (1usize << i) + 1;
    let field = Field::new(2, 1)?;
    let bd = bch_narrow_sense(&field, n, delta)?;
    let t_bi = bi.defining_set().expect("cyclic").clone();
    let t_bd = bd.defining_set().expect("cyclic").clone();
    let half = 1i64 << (i - 1);

    let first_k = n as i64 - mu * (2 + half);
    let first = family(
        "first",
        first_k,
        &bd.dual(),
        &t_bd.euclidean_dual(),
        &bi,
        &t_bi,
        // z side wt(B_i \ B(delta)^perp) = 5; x side wt(B(delta)) >= delta
        (Claim::Exact(5), Claim::AtLeast(delta)),
        cfg,
    );
    let second_k = mu * (half - 2);
    let cu = bound(BoundKind::CarlitzUchiyama {
        m,
        delta: delta as u64,
    })
    .max(1) as usize;
    let second = family(
        "second",
        second_k,
        &bd,
        &t_bd,
        &bi,
        &t_bi,
        // z side wt(B_i \ B(delta)) = 5; x side wt(B(delta)^perp \ B_i^perp)
        (Claim::Exact(5), Claim::AtLeast(cu)),
        cfg,
    );
    Ok(CharpinFamilies { first, second })
}

#[allow(clippy::too_many_arguments)]
fn family(
    label: &str,
    formula_k: i64,
    c1: &LinearCode,
    t1: &DefiningSet,
    c2: &LinearCode,
    t2: &DefiningSet,
    claims: (Claim, Claim),
    cfg: &Config,
) -> FamilyOutcome {
    let mut out = FamilyOutcome {
        label: label.into(),
        formula_k,
        params: None,
        checks: Vec::new(),
        error: None,
    };
    if formula_k <= 0 {
        out.error = Some(format!("formula dimension {formula_k} is not positive"));
        return out;
    }
    let by_sets = t2.code_contains(t1);
    out.checks.push(Check::new(
        "nested_by_defining_sets",
        by_sets,
        format!("T(C2) = {:?}", t2.exponents),
    ));
    let by_matrix = match c2.contains_code(c1) {
        Ok(b) => b,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.checks
        .push(Check::new("nested_by_matrices", by_matrix, ""));
    if !by_sets || !by_matrix {
        out.error = Some(format!(
            "{} is not contained in {}",
            c1.provenance(),
            c2.provenance()
        ));
        return out;
    }
    let k = (c2.k() - c1.k()) as i64;
    out.checks.push(Check::new(
        "dimension_formula",
        k == formula_k,
        format!("rank gives {k}, formula {formula_k}"),
    ));
    let result = css_with_duals(c1, c2, c1.dual(), c2.dual(), "charpin", cfg).and_then(|run| {
        Derivation {
            n: c2.len(),
            k: k as usize,
            q: 2,
            construction: &format!("charpin_{label}"),
            z: (claims.1, Some(&run.x), None),
            x: (claims.0, Some(&run.z), None),
            run: Some(&run.params),
        }
        .emit()
    });
    match result {
        Ok(p) => out.params = Some(p),
        Err(e) => out.error = Some(e.to_string()),
    }
    out
}

// ---------------------------------------------------------------------------
// Reed-Solomon constructions

/// C_i = RS_i (+) extended RS_i for k1 > k2 gives
/// [[2q - 1, 2(k1 - k2), {q - k1, k2 + 1}]]_q.
pub fn rs_direct_sum_aqc(q: u32, k1: usize, k2: usize, cfg: &Config) -> Result<AqcParams> {
    let mut failures = Vec::new();
    let field = field_of_order(q, &mut failures);
    if !(1 <= k2 && k2 < k1 && k1 < q as usize) {
        failures.push(format!(
            "need 1 <= k2 < k1 <= q - 1, got k1 = {k1}, k2 = {k2}"
        ));
    }
    if !failures.is_empty() {
        return Err(QctError::Preconditions(failures));
    }
    let field = field.expect("checked");
    let mut checks = Vec::new();
    let mut build = |k: usize| -> Result<(LinearCode, LinearCode)> {
        let rs = rs_code(&field, k)?;
        let ext = rs.extend_parity();
        let sum = rs
            .direct_sum(&ext)?
            .with_provenance(format!("RS{k}+extRS{k}"));
        let rs_dual = with_min_distance(rs.dual(), cfg)?;
        let ext_dual = with_min_distance(ext.dual(), cfg)?;
        let piecewise = rs_dual.direct_sum(&ext_dual)?;
        let ok = piecewise == sum.dual();
        checks.push(Check::new(
            format!("dual_decomposition_k{k}"),
            ok,
            "dual(A (+) B) = dual(A) (+) dual(B) on canonical generators",
        ));
        if !ok {
            return Err(QctError::InvalidParameters(
                "piecewise dual differs from the dual of the direct sum".into(),
            ));
        }
        Ok((sum, piecewise))
    };
    let (big, big_dual) = build(k1)?;
    let (small, small_dual) = build(k2)?;
    nested_or_err(&small, &big, "C_{k2} direct sum is not inside C_{k1}")?;
    let k = big.k() - small.k();
    assert_eq!(k, 2 * (k1 - k2), "direct-sum dimensions");
    let run = css_with_duals(&small, &big, small_dual, big_dual, "rs_direct_sum", cfg)?;
    let mut p = Derivation {
        n: 2 * q as usize - 1,
        k,
        q,
        construction: "rs_direct_sum",
        z: (Claim::Exact(q as usize - k1), Some(&run.z), None),
        x: (Claim::Exact(k2 + 1), Some(&run.x), None),
        run: Some(&run.params),
    }
    .emit()?;
    p.provenance.checks.extend(checks);
    Ok(p)
}

fn concat_failures(q: u32, m: u32, k1: usize, k2: usize) -> (Option<Field>, Vec<String>) {
    let mut failures = Vec::new();
    let sub = field_of_order(q, &mut failures);
    if m == 0 {
        failures.push("m must be positive".into());
    }
    if let Some(f) = &sub {
        let even = f.characteristic() == 2;
        let odd_prime_odd_m = f.degree() == 1 && f.characteristic() != 2 && m % 2 == 1;
        if !(even || odd_prime_odd_m) {
            failures.push(format!(
                "q = {q} must be even, or an odd prime with m odd (m = {m})"
            ));
        }
    }
    let qm = (q as u64).checked_pow(m);
    match qm {
        Some(qm) if k2 >= 1 && k2 < k1 && (k1 as u64) < qm => {}
        _ => failures.push(format!(
            "need 1 <= k2 < k1 <= q^m - 1, got k1 = {k1}, k2 = {k2}"
        )),
    }
    (sub, failures)
}

/// Formula of the concatenated RS construction:
/// [[(m+1)(q^m-1), m(k1-k2), {2(q^m-k1), 2(k2+1)}]]_q.
pub fn concat_formula(q: u32, m: u32, k1: usize, k2: usize) -> (usize, usize, usize, usize) {
    let qm = (q as usize).pow(m);
    (
        (m as usize + 1) * (qm - 1),
        m as usize * (k1 - k2),
        2 * (qm - k1),
        2 * (k2 + 1),
    )
}

/// Parity-expanded RS codes over GF(q^m) in standard CSS.
pub fn concat_expand_aqc(q: u32, m: u32, k1: usize, k2: usize, cfg: &Config) -> Result<AqcParams> {
    let (sub, failures) = concat_failures(q, m, k1, k2);
    if !failures.is_empty() {
        return Err(QctError::Preconditions(failures));
    }
    let sub = sub.expect("checked");
    let tower = Tower::new(&sub, m)?;
    let mut notes = Vec::new();
    let basis = match find_self_dual_basis(&tower, cfg.seed)? {
        Some(b) => b,
        None => {
            notes.push("no self-dual basis; expanded with the polynomial basis".to_string());
            ExtensionBasis::polynomial(&tower)?
        }
    };
    let ext = tower.ext();
    let c2 = expand_with_parity(&rs_code(ext, k1)?, &basis, cfg)?;
    let c1 = expand_with_parity(&rs_code(ext, k2)?, &basis, cfg)?;
    nested_or_err(&c1, &c2, "expanded RS codes are not nested")?;
    let (n, k, dz, dx) = concat_formula(q, m, k1, k2);
    assert_eq!(c2.len(), n, "expanded length");
    assert_eq!(c2.k() - c1.k(), k, "expanded dimension");
    let run = css_with_duals(&c1, &c2, c1.dual(), c2.dual(), "concat_expand", cfg)?;
    let mut p = Derivation {
        n,
        k,
        q,
        construction: "concat_expand",
        z: (Claim::Exact(dz), Some(&run.z), None),
        x: (Claim::Exact(dx), Some(&run.x), None),
        run: Some(&run.params),
    }
    .emit()?;
    p.provenance.inputs = vec![
        format!(
            "expand_parity(RS[{},{k2}]_{})",
            ext.order() - 1,
            ext.order()
        ),
        format!(
            "expand_parity(RS[{},{k1}]_{})",
            ext.order() - 1,
            ext.order()
        ),
    ];
    p.provenance.notes.extend(notes);
    Ok(p)
}

/// Parameters of the concatenation with an inner [[q^m-2, 1, {q^m-k-1, k}]]
/// code: [[(m+1)(q^m-1)(q^m-2), m(k1-k2), >= d d']]_q with
/// d' = min{2(q^m-k1), 2(k2+1)} and d = min{2(q^m-k-1), k}.
pub fn quantum_concat_params(q: u32, m: u32, k1: usize, k2: usize, k: usize) -> Result<AqcParams> {
    let mut failures = Vec::new();
    field_of_order(q, &mut failures);
    let qm = (q as u64).checked_pow(m).filter(|&v| v <= u32::MAX as u64);
    match qm {
        None => failures.push(format!("q^m = {q}^{m} is too large")),
        Some(qm) => {
            let cap = qm.saturating_sub(3);
            for (name, v) in [
                ("m", m as u64),
                ("k1", k1 as u64),
                ("k2", k2 as u64),
                ("k", k as u64),
            ] {
                if v == 0 || v > cap {
                    failures.push(format!("{name} = {v} must be in [1, q^m - 3 = {cap}]"));
                }
            }
            if k2 >= k1 {
                failures.push(format!("need k2 < k1, got k1 = {k1}, k2 = {k2}"));
            }
        }
    }
    if !failures.is_empty() {
        return Err(QctError::Preconditions(failures));
    }
    let qm = qm.expect("checked") as usize;
    let n = (m as usize + 1) * (qm - 1) * (qm - 2);
    let outer = (2 * (qm - k1)).min(2 * (k2 + 1));
    let inner = (2 * (qm - k - 1)).min(k);
    let d = outer * inner;
    Ok(AqcParams::new(
        n,
        m as usize * (k1 - k2),
        q,
        Side::bound(d, None),
        Side::bound(d, None),
        "quantum_concat",
    )?
    .with_note(format!("D = d d' with d' = {outer}, d = {inner}"))
    .with_note("the inner pair {q^m-k-1, k} enters as min{2(q^m-k-1), k}: the factor 2 is applied to one member only, as stated"))
}

// ---------------------------------------------------------------------------
// negacyclic Hermitian construction

/// Formula [[(m+1)n, m(n-s), {2(s/2+1), 2(n-s/2+1)}]]_q for the expansion
/// of the negacyclic pair C_s^(perp h) < C_s over GF(q^2), with every
/// hypothesis reported individually. The construction is run when C_s
/// exists, contains its Hermitian dual and m = 2.
pub fn negacyclic_expand_aqc(
    q: u32,
    n: usize,
    s: usize,
    m: u32,
    cfg: &Config,
) -> Result<AqcParams> {
    if n == 0 || m == 0 || s == 0 || !s.is_multiple_of(2) {
        return Err(QctError::InvalidParameters(format!(
            "need n, m >= 1 and s even and positive (n = {n}, s = {s}, m = {m})"
        )));
    }
    if s >= n {
        return Err(QctError::Degenerate(format!(
            "k = m(n - s) = {} is not positive",
            m as i64 * (n as i64 - s as i64)
        )));
    }
    let k = m as usize * (n - s);
    let zf = 2 * (s / 2 + 1);
    let xf = 2 * (n - s / 2 + 1);
    let mut checks = Vec::new();
    let base = Field::of_order(q).ok();
    let (p, e) = base
        .as_ref()
        .map_or((0, 0), |f| (f.characteristic(), f.degree()));
    checks.push(Check::new(
        "hypothesis_q_square_even_or_odd_prime_with_m_odd",
        (p == 2 && e == 2) || (p > 2 && e == 1 && m % 2 == 1),
        format!("q = {q}, m = {m}"),
    ));
    checks.push(Check::new(
        "hypothesis_q_square_odd_1_mod_4",
        p > 2 && e % 2 == 0 && q % 4 == 1,
        format!("q = {q}"),
    ));
    checks.push(Check::new(
        "hypothesis_n_even_divides_q_minus_1",
        n.is_multiple_of(2) && (q as usize).saturating_sub(1).is_multiple_of(n),
        format!("n = {n}"),
    ));
    checks.push(Check::new(
        "hypothesis_s_even_at_most_n_minus_1",
        s.is_multiple_of(2) && s < n,
        format!("s = {s}"),
    ));
    checks.push(Check::new(
        "m_is_degree_of_gf_q2_over_gf_q",
        m == 2,
        format!("m = {m}"),
    ));
    let tower = match &base {
        Some(b) => Tower::new(b, 2).ok(),
        None => None,
    };
    let self_dual = match &tower {
        Some(t) => find_self_dual_basis(t, cfg.seed)?,
        None => None,
    };
    checks.push(Check::new(
        "self_dual_basis_exists",
        self_dual.is_some(),
        "GF(q^2) over GF(q)",
    ));
    let cs = negacyclic_cs(q, n, s, cfg);
    checks.push(Check::new(
        "c_s_contains_hermitian_dual",
        cs.is_ok(),
        match &cs {
            Ok(c) => format!("{c:?}"),
            Err(e) => e.to_string(),
        },
    ));
    let mut notes = Vec::new();
    let run = match (cs, &tower) {
        (Ok(cs), Some(tower)) if m == 2 => {
            let basis = match &self_dual {
                Some(b) => b.clone(),
                None => {
                    notes
                        .push("no self-dual basis; expanded with the polynomial basis".to_string());
                    ExtensionBasis::polynomial(tower)?
                }
            };
            let h = cs.hermitian_dual()?;
            let h = h.clone().with_distance(min_distance(&h, cfg)?);
            let c2 = expand_with_parity(&cs, &basis, cfg)?;
            let c1 = expand_with_parity(&h, &basis, cfg)?;
            nested_or_err(&c1, &c2, "expansions of C_s^(perp h) < C_s are not nested")?;
            checks.push(Check::new("expansions_nested", true, ""));
            assert_eq!(c2.k() - c1.k(), k, "expanded dimension");
            Some(css_with_duals(
                &c1,
                &c2,
                c1.dual(),
                c2.dual(),
                "negacyclic_expand",
                cfg,
            )?)
        }
        _ => {
            notes.push("construction not run; formula-level record only".to_string());
            None
        }
    };
    let mut out = Derivation {
        n: (m as usize + 1) * n,
        k,
        q,
        construction: "negacyclic_expand",
        z: (Claim::Exact(zf), run.as_ref().map(|r| &r.z), None),
        x: (Claim::Exact(xf), run.as_ref().map(|r| &r.x), None),
        run: run.as_ref().map(|r| &r.params),
    }
    .emit()?;
    if run.is_none() {
        out.purity = Purity::Unknown;
    }
    out.provenance.checks.extend(checks);
    out.provenance.notes.extend(notes);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn simplex_pair_m3_m4() {
        let p = &th_best_family(&ThBestInput::Simplex { m: 3 }, &cfg()).unwrap()[0];
        assert!(p.same_parameters(7, 3, 3, 2) && p.is_exact(), "{p}");
        assert!(p.checks_passed(), "{:?}", p.provenance.checks);
        let p = &th_best_family(&ThBestInput::Simplex { m: 4 }, &cfg()).unwrap()[0];
        assert!(p.same_parameters(15, 4, 7, 2) && p.is_exact(), "{p}");
        assert!(p.checks_passed());
    }

    #[test]
    fn extended_hamming_is_self_dual() {
        let f = Field::new(2, 1).unwrap();
        let g = LinearCode::from_generator(
            &f,
            &[
                vec![1, 0, 0, 0, 0, 1, 1, 1],
                vec![0, 1, 0, 0, 1, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 1, 0, 1],
                vec![0, 0, 0, 1, 1, 1, 1, 0],
            ],
        )
        .unwrap();
        let p = &th_best_family(&ThBestInput::SelfDual(g.clone()), &cfg()).unwrap()[0];
        assert!(p.same_parameters(8, 3, 4, 2), "{p}");
        let h = LinearCode::from_generator(&f, &g.rows()[..3]).unwrap();
        assert!(matches!(
            th_best_family(&ThBestInput::SelfDual(h), &cfg()),
            Err(QctError::Preconditions(_))
        ));
    }

    #[test]
    fn bch_gf4_and_puncture() {
        let out = th_best_family(
            &ThBestInput::NarrowSenseBch {
                q: 4,
                n: 15,
                delta: 3,
            },
            &cfg(),
        )
        .unwrap();
        assert!(out[0].same_parameters(15, 10, 3, 2), "{}", out[0]);
        assert!(out[1].same_parameters(14, 10, 2, 2), "{}", out[1]);
    }

    #[test]
    fn bch1_formula_rows() {
        for (d1, k) in [(15, 803), (11, 823), (7, 843), (3, 863)] {
            let p = lemma_bch1(10, d1, 31, &cfg()).unwrap();
            assert!(p.same_parameters(1023, k, 31, d1), "{p}");
            assert!(p.checks_passed(), "{:?}", p.provenance.checks);
        }
    }

    #[test]
    fn bch1_desk_scale() {
        let p = lemma_bch1(6, 3, 7, &cfg()).unwrap();
        assert_eq!((p.n, p.k), (63, 39));
        let names: Vec<_> = p
            .provenance
            .checks
            .iter()
            .map(|c| c.name.as_str())
            .collect();
        assert!(names.contains(&"nested_by_matrices"));
        assert!(p.checks_passed(), "{:?}", p.provenance.checks);
        assert!(p.dz >= 7 && p.dx >= 3);
        assert!(matches!(
            lemma_bch1(6, 3, 9, &cfg()),
            Err(QctError::Preconditions(_))
        ));
    }

    #[test]
    fn rs_direct_sum_examples() {
        let p = rs_direct_sum_aqc(16, 9, 2, &cfg()).unwrap();
        assert!(p.same_parameters(31, 14, 7, 3) && p.is_exact(), "{p}");
        assert!(p.checks_passed(), "{:?}", p.provenance.checks);
        let p = rs_direct_sum_aqc(4, 2, 1, &cfg()).unwrap();
        assert!(p.same_parameters(7, 2, 2, 2) && p.is_exact(), "{p}");
        let p = rs_direct_sum_aqc(4, 3, 1, &cfg()).unwrap();
        assert!(p.same_parameters(7, 4, 2, 1), "{p}");
        assert!(p.provenance.swapped);
        assert!(rs_direct_sum_aqc(4, 1, 2, &cfg()).is_err());
    }

    #[test]
    fn concat_small_case_reports_dx_shortfall() {
        let p = concat_expand_aqc(2, 2, 2, 1, &cfg()).unwrap();
        assert_eq!((p.n, p.k), (9, 2));
        assert!(p.is_exact());
        assert!(p.same_parameters(9, 2, 4, 2), "{p}");
        let failed: Vec<_> = p
            .provenance
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(failed, ["dx_matches_construction"]);
        assert!(concat_expand_aqc(3, 2, 2, 1, &cfg()).is_err());
    }

    #[test]
    fn quantum_concat_arithmetic() {
        let p = quantum_concat_params(4, 2, 13, 1, 7).unwrap();
        assert_eq!((p.n, p.k, p.dz, p.dx), (630, 24, 28, 28));
        assert!(!p.exact.dz);
        let p = quantum_concat_params(4, 2, 13, 1, 1).unwrap();
        assert_eq!(p.dz, 4);
        assert!(quantum_concat_params(4, 2, 13, 1, 14).is_err());
    }

    #[test]
    fn negacyclic_expansion_formula_and_hypotheses() {
        let p = negacyclic_expand_aqc(9, 8, 4, 2, &cfg()).unwrap();
        assert_eq!((p.n, p.k, p.q), (24, 8, 9));
        let by_name = |name: &str| {
            p.provenance
                .checks
                .iter()
                .find(|c| c.name == name)
                .unwrap_or_else(|| panic!("{name}"))
                .passed
        };
        assert!(!by_name("self_dual_basis_exists"));
        assert!(!by_name("hypothesis_q_square_even_or_odd_prime_with_m_odd"));
        assert!(by_name("hypothesis_q_square_odd_1_mod_4"));
        assert!(by_name("c_s_contains_hermitian_dual"));
        let p = negacyclic_expand_aqc(9, 8, 6, 2, &cfg()).unwrap();
        assert!(p.same_parameters(24, 4, 12, 8), "{p}");
        assert!(negacyclic_expand_aqc(9, 8, 8, 2, &cfg()).is_err());
        assert!(negacyclic_expand_aqc(9, 8, 3, 2, &cfg()).is_err());
    }
}
