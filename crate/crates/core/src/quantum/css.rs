use super::params::{AqcParams, Check, Purity, Side};
use crate::config::Config;
use crate::error::{QctError, Result};
use crate::lincode::{
    certified_floor, min_distance, relative_min_weight, DistanceResult, LinearCode,
};

/// Attaches the (possibly bounded) minimum distance so that later relative
/// weight searches start from it.
pub(crate) fn with_min_distance(code: LinearCode, cfg: &Config) -> Result<LinearCode> {
    if code.k() == 0 || code.distance().is_some_and(|d| d.is_exact()) {
        return Ok(code);
    }
    let d = min_distance(&code, cfg)?;
    Ok(code.with_distance(d))
}

/// Some(true) when the relative weight equals the full minimum distance,
/// Some(false) when it is strictly larger, None when either is unknown.
fn side_is_pure(rel: &DistanceResult, full: &LinearCode) -> Option<bool> {
    if !rel.is_exact() {
        return None;
    }
    let (floor, _) = certified_floor(full);
    if floor == rel.value {
        return Some(true);
    }
    match full.distance() {
        Some(d) if d.is_exact() => Some(d.value == rel.value),
        _ => None,
    }
}

fn check_nested(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    if !c2.contains_code(c1)? {
        return Err(QctError::NotNested(format!(
            "C1 = {:?} is not contained in C2 = {:?}",
            c1, c2
        )));
    }
    if c1.k() == 0 {
        return Err(QctError::Degenerate(
            "C1 is the zero code; CSS needs k2 > k1 >= 1".into(),
        ));
    }
    if c1.k() == c2.k() {
        return Err(QctError::Degenerate(format!(
            "C1 = C2 ({:?}) encodes no logical symbol",
            c2
        )));
    }
    Ok(())
}

/// CSS construction from nested codes C1 < C2 over GF(q):
/// [[n, k2 - k1, {dz, dx}]]_q with the pair {wt(C2 \ C1), wt(C1^perp \ C2^perp)}.
pub fn css_standard(c1: &LinearCode, c2: &LinearCode, cfg: &Config) -> Result<AqcParams> {
    check_nested(c1, c2)?;
    let d1 = c1.dual();
    let d2 = c2.dual();
    Ok(css_with_duals(c1, c2, d1, d2, "css", cfg)?.params)
}

/// A CSS computation together with the two relative weights behind it.
pub(crate) struct CssRun {
    pub params: AqcParams,
    /// wt(C2 \ C1)
    pub z: DistanceResult,
    /// wt(C1^perp \ C2^perp)
    pub x: DistanceResult,
}

/// As [`css_standard`], with duals supplied by the caller (for instance
/// built piecewise with known distances). They are checked against the
/// computed duals.
pub(crate) fn css_with_duals(
    c1: &LinearCode,
    c2: &LinearCode,
    c1_dual: LinearCode,
    c2_dual: LinearCode,
    construction: &str,
    cfg: &Config,
) -> Result<CssRun> {
    check_nested(c1, c2)?;
    if c1_dual != c1.dual() || c2_dual != c2.dual() {
        return Err(QctError::InvalidParameters(
            "supplied dual codes differ from the computed duals".into(),
        ));
    }
    let c2 = with_min_distance(c2.clone(), cfg)?;
    let c1_dual = with_min_distance(c1_dual, cfg)?;
    let z = relative_min_weight(&c2, c1, cfg)?;
    let x = relative_min_weight(&c1_dual, &c2_dual, cfg)?;
    let purity = match (side_is_pure(&z, &c2), side_is_pure(&x, &c1_dual)) {
        (Some(true), Some(true)) => Purity::Pure,
        (Some(false), Some(_)) | (Some(_), Some(false)) => Purity::Degenerate,
        _ => Purity::Unknown,
    };
    let p = AqcParams::new(
        c2.len(),
        c2.k() - c1.k(),
        c2.field().order(),
        Side::from(&z),
        Side::from(&x),
        construction,
    )?
    .with_inputs([c1.provenance().to_string(), c2.provenance().to_string()])
    .with_purity(purity)
    .with_check(Check::new(
        "nested",
        true,
        "C1 < C2 verified on generator matrices",
    ))
    .with_note(format!("wt(C2 \\ C1) = {z}"))
    .with_note(format!("wt(C1^perp \\ C2^perp) = {x}"));
    Ok(CssRun { params: p, z, x })
}

/// Hermitian CSS over GF(q^2): C1^(perp h) < C2 gives
/// [[n, k1 + k2 - n, {d1, d2}]] over the alphabet of the codes.
pub fn css_hermitian(c1: &LinearCode, c2: &LinearCode, cfg: &Config) -> Result<AqcParams> {
    let field = c1.field();
    if field.conjugation_base().is_none() {
        return Err(QctError::FieldMismatch(format!(
            "{field} has no subfield of square-root order"
        )));
    }
    let h = c1.hermitian_dual()?;
    if !c2.contains_code(&h)? {
        return Err(QctError::NotNested(format!(
            "C1^(perp h) is not contained in C2 = {:?}",
            c2
        )));
    }
    let n = c1.len();
    let k = (c1.k() + c2.k()) as i64 - n as i64;
    if k <= 0 {
        return Err(QctError::Degenerate(format!(
            "k1 + k2 - n = {k} must be positive"
        )));
    }
    let d1 = min_distance(c1, cfg)?;
    let d2 = min_distance(c2, cfg)?;
    let purity = if d1.is_exact() && d2.is_exact() {
        Purity::Pure
    } else {
        Purity::Unknown
    };
    Ok(AqcParams::new(
        n,
        k as usize,
        field.order(),
        Side::from(&d1),
        Side::from(&d2),
        "css_hermitian",
    )?
    .with_inputs([c1.provenance().to_string(), c2.provenance().to_string()])
    .with_purity(purity)
    .with_check(Check::new(
        "hermitian_nested",
        true,
        "C1^(perp h) < C2 verified on generator matrices",
    ))
    .with_note("k = k1 + k2 - n, reading the subtracted dimension as dim C1^(perp h) = n - k1"))
}

/// The all-ones construction: a code containing 1 with k >= 2 gives
/// [[n, k - 1, {d, 2}]]_q via CSS on <1> < C.
pub fn allone_aqc(code: &LinearCode, cfg: &Config) -> Result<AqcParams> {
    if !code.contains_allones() {
        return Err(QctError::Preconditions(vec![format!(
            "{:?} does not contain the all-ones word",
            code
        )]));
    }
    if code.k() < 2 {
        return Err(QctError::Degenerate(format!(
            "{:?} has dimension {}, need at least 2",
            code,
            code.k()
        )));
    }
    let code = with_min_distance(code.clone(), cfg)?;
    let d = code.distance().expect("attached above").clone();
    let ones =
        LinearCode::from_generator(code.field(), &[vec![1; code.len()]])?.with_provenance("<1>");
    let mut p = css_standard(&ones, &code, cfg)?;
    p.provenance.construction = "allone".into();
    let expected = (d.value.max(2), d.value.min(2));
    let agrees = (p.dz, p.dx) == expected;
    let detail = format!(
        "d(C) = {d}; CSS pair {{{},{}}} vs {{d,2}} = {{{},{}}}",
        p.dz, p.dx, expected.0, expected.1
    );
    Ok(p.with_check(Check::new("all_ones_pair", agrees, detail)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    fn hamming() -> LinearCode {
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
        .with_provenance("Hamming[7,4]")
    }

    #[test]
    fn repetition_in_hamming() {
        let h = hamming();
        let rep = LinearCode::from_generator(h.field(), &[vec![1; 7]]).unwrap();
        let p = css_standard(&rep, &h, &Config::default()).unwrap();
        assert!(p.same_parameters(7, 3, 3, 2));
        assert!(p.is_exact());
        assert_eq!(p.purity, Purity::Pure);
        let a = allone_aqc(&h, &Config::default()).unwrap();
        assert!(a.same_parameters(7, 3, 3, 2));
        assert!(a.checks_passed());
    }

    #[test]
    fn css_rejections() {
        let h = hamming();
        let f = h.field().clone();
        let cfg = Config::default();
        assert!(matches!(
            css_standard(&LinearCode::zero(&f, 7), &h, &cfg),
            Err(QctError::Degenerate(_))
        ));
        assert!(matches!(
            css_standard(&h, &h, &cfg),
            Err(QctError::Degenerate(_))
        ));
        let other = LinearCode::from_generator(&f, &[vec![1, 1, 0, 0, 0, 0, 0]]).unwrap();
        assert!(matches!(
            css_standard(&other, &h, &cfg),
            Err(QctError::NotNested(_))
        ));
        let odd = LinearCode::from_generator(&f, &[vec![1, 0, 0, 0, 0, 0, 0]]).unwrap();
        assert!(matches!(
            allone_aqc(&odd, &cfg),
            Err(QctError::Preconditions(_))
        ));
    }

    #[test]
    fn self_orthogonal_pair_is_symmetric() {
        // simplex^perp = Hamming, so C1 = C2^perp gives [[7,1,3]]
        let h = hamming();
        let p = css_standard(&h.dual(), &h, &Config::default()).unwrap();
        assert!(p.same_parameters(7, 1, 3, 3));
        assert!(p.is_symmetric());
    }

    #[test]
    fn hermitian_boundary_case() {
        let f = build_field(2, 2).unwrap();
        let w = f.generator();
        let c1 = LinearCode::from_generator(&f, &[vec![1, w]]).unwrap();
        assert_eq!(c1.hermitian_dual().unwrap(), c1);
        let c2 = LinearCode::whole_space(&f, 2);
        let p = css_hermitian(&c1, &c2, &Config::default()).unwrap();
        assert_eq!((p.n, p.k, p.dz, p.dx, p.q), (2, 1, 2, 1, 4));
        assert_eq!(p.purity, Purity::Pure);
        assert!(css_hermitian(&c1, &c1, &Config::default()).is_err());
    }
}
