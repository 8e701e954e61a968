use super::code::LinearCode;
use super::distance::{certified_floor, is_mds, DistanceMethod, DistanceResult};
use crate::config::Config;
use crate::error::{QctError, Result};
use crate::galois::ExtensionBasis;
use crate::linalg::Matrix;

fn check_basis(code: &LinearCode, basis: &ExtensionBasis) -> Result<()> {
    if basis.tower().ext() != code.field() {
        return Err(QctError::FieldMismatch(format!(
            "basis of {:?} cannot expand a code over {}",
            basis.tower(),
            code.field()
        )));
    }
    Ok(())
}

/// Rows alpha_j * g_i of the GF(q)-span of the code, expanded coordinatewise.
fn expanded_rows(code: &LinearCode, basis: &ExtensionBasis, parity: bool) -> Vec<Vec<u32>> {
    let ext = code.field();
    let sub = basis.tower().sub();
    let m = basis.len();
    let block = if parity { m + 1 } else { m };
    let mut out = Vec::with_capacity(code.k() * m);
    for i in 0..code.k() {
        let row = code.generator().row(i);
        for &alpha in basis.elements() {
            let mut v = Vec::with_capacity(code.len() * block);
            for &x in row {
                let coords = basis.coordinates(ext.mul(alpha, x));
                let s = coords.iter().fold(0u32, |acc, &c| sub.add(acc, c));
                v.extend_from_slice(&coords);
                if parity {
                    v.push(sub.neg(s));
                }
            }
            out.push(v);
        }
    }
    out
}

/// Phi_B(C): replaces each symbol by its m coordinates in `basis`, giving an
/// [nm, km, >= d] code over the subfield.
pub fn expand_basis(code: &LinearCode, basis: &ExtensionBasis) -> Result<LinearCode> {
    check_basis(code, basis)?;
    let sub = basis.tower().sub();
    let n = code.len() * basis.len();
    let rows = expanded_rows(code, basis, false);
    let mut out = LinearCode::from_matrix(sub, Matrix::from_rows(&rows, n))
        .with_provenance(format!("expand({})", code.provenance()));
    let (floor, _) = certified_floor(code);
    if code.k() > 0 && floor > 1 {
        out = out.with_distance(DistanceResult::lower(floor, DistanceMethod::Inherited));
    }
    Ok(out)
}

/// Expansion followed by a parity symbol per block, for an MDS code:
/// [n(m+1), km, >= 2(n-k+1)] over the subfield.
pub fn expand_with_parity(
    code: &LinearCode,
    basis: &ExtensionBasis,
    cfg: &Config,
) -> Result<LinearCode> {
    check_basis(code, basis)?;
    let (n, k) = (code.len(), code.k());
    let declared_mds = code
        .distance()
        .is_some_and(|d| d.value == n - k + 1 && d.certified_lower() == d.value);
    if !declared_mds && !is_mds(code, cfg)? {
        return Err(QctError::NotMds(format!(
            "[{n},{k}] code ({}) is not MDS",
            code.provenance()
        )));
    }
    let sub = basis.tower().sub();
    let rows = expanded_rows(code, basis, true);
    let mut out = LinearCode::from_matrix(sub, Matrix::from_rows(&rows, n * (basis.len() + 1)))
        .with_provenance(format!("expand_parity({})", code.provenance()));
    if k > 0 {
        // each nonzero symbol becomes a block of weight >= 2, so the
        // declared value is also a certified lower bound
        let d = 2 * (n - k + 1);
        out = out.with_distance(DistanceResult {
            lower_bound: Some(d),
            ..DistanceResult::declared(d)
        });
    }
    Ok(out)
}
