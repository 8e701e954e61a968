//! C ABI for the `qct` library.
//!
//! Fields and codes are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`QctStatus`]; on failure the
//! message is available from [`qct_last_error`] on the same thread. Complex
//! results (quantum parameters, audit reports) are returned as JSON strings
//! owned by the caller and released with [`qct_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde::Deserialize;

use qct::families::import_code;
use qct::galois::Field;
use qct::lincode::{min_distance, CodeRecord, LinearCode};
use qct::quantum::{
    audit_table, charpin_family, concat_expand_aqc, css_hermitian, css_standard, lemma_bch1,
    negacyclic_expand_aqc, quantum_concat_params, rs_direct_sum_aqc, th_best_family, AuditTarget,
    ThBestInput,
};
use qct::{Config, QctError};

/// Result codes. `QCT_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QctStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    NotPrime = 3,
    FieldTooLarge = 4,
    InvalidField = 5,
    FieldMismatch = 6,
    InvalidBasis = 7,
    SearchCapExceeded = 8,
    InvalidDefiningSet = 9,
    InvalidParameters = 10,
    MalformedMatrix = 11,
    LengthMismatch = 12,
    NotNested = 13,
    Degenerate = 14,
    NotMds = 15,
    Preconditions = 16,
    MalformedRecord = 17,
    NotFound = 18,
    Io = 19,
    Json = 20,
    Panic = 99,
}

impl From<&QctError> for QctStatus {
    fn from(e: &QctError) -> Self {
        match e {
            QctError::NotPrime(_) => QctStatus::NotPrime,
            QctError::FieldTooLarge { .. } => QctStatus::FieldTooLarge,
            QctError::InvalidField(_) => QctStatus::InvalidField,
            QctError::FieldMismatch(_) => QctStatus::FieldMismatch,
            QctError::InvalidBasis(_) => QctStatus::InvalidBasis,
            QctError::SearchCapExceeded(_) => QctStatus::SearchCapExceeded,
            QctError::InvalidDefiningSet(_) => QctStatus::InvalidDefiningSet,
            QctError::InvalidParameters(_) => QctStatus::InvalidParameters,
            QctError::MalformedMatrix(_) => QctStatus::MalformedMatrix,
            QctError::LengthMismatch { .. } => QctStatus::LengthMismatch,
            QctError::NotNested(_) => QctStatus::NotNested,
            QctError::Degenerate(_) => QctStatus::Degenerate,
            QctError::NotMds(_) => QctStatus::NotMds,
            QctError::Preconditions(_) => QctStatus::Preconditions,
            QctError::MalformedRecord(_) => QctStatus::MalformedRecord,
            QctError::NotFound(_) => QctStatus::NotFound,
            QctError::Io { .. } => QctStatus::Io,
            QctError::Json(_) => QctStatus::Json,
        }
    }
}

/// Opaque finite field handle.
pub struct QctField(Field);

/// Opaque linear code handle.
pub struct QctCode(LinearCode);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(QctStatus, String);

impl From<QctError> for Failure {
    fn from(e: QctError) -> Self {
        Failure(QctStatus::from(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QctStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            QctStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QctStatus::Panic
        }
    }
}

fn non_null<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    // SAFETY: the caller passes either null or a pointer obtained from this
    // library that has not been freed.
    unsafe { p.as_ref() }.ok_or_else(|| Failure(QctStatus::NullPointer, format!("{what} is null")))
}

fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    // SAFETY: as for `non_null`; the caller owns the output slot.
    unsafe { p.as_mut() }.ok_or_else(|| Failure(QctStatus::NullPointer, format!("{what} is null")))
}

fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(QctStatus::NullPointer, format!("{what} is null")));
    }
    // SAFETY: non-null and, by contract, NUL-terminated.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|e| Failure(QctStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn give_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let slot = out_ptr(out, "output string")?;
    let c = CString::new(s).map_err(|e| Failure(QctStatus::Json, e.to_string()))?;
    *slot = c.into_raw();
    Ok(())
}

fn to_json<T: serde::Serialize>(x: &T) -> Result<String, Failure> {
    serde_json::to_string(x).map_err(|e| QctError::Json(e).into())
}

fn config(cap: u64) -> Config {
    if cap == 0 {
        Config::default()
    } else {
        Config::default().with_cap(cap)
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn qct_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds GF(p^e).
#[no_mangle]
pub extern "C" fn qct_field_new(p: u32, e: u32, out: *mut *mut QctField) -> QctStatus {
    guard(|| {
        let slot = out_ptr(out, "out")?;
        let f = Field::new(p, e)?;
        *slot = Box::into_raw(Box::new(QctField(f)));
        Ok(())
    })
}

/// # Safety
/// `f` must come from [`qct_field_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qct_field_free(f: *mut QctField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Field order, or 0 for NULL.
#[no_mangle]
pub extern "C" fn qct_field_order(f: *const QctField) -> u32 {
    non_null(f, "field").map_or(0, |f| f.0.order())
}

#[no_mangle]
pub extern "C" fn qct_field_add(f: *const QctField, a: u32, b: u32, out: *mut u32) -> QctStatus {
    binary_op(f, a, b, out, |f, a, b| Some(f.add(a, b)))
}

#[no_mangle]
pub extern "C" fn qct_field_mul(f: *const QctField, a: u32, b: u32, out: *mut u32) -> QctStatus {
    binary_op(f, a, b, out, |f, a, b| Some(f.mul(a, b)))
}

/// Multiplicative inverse; zero has none and fails with
/// `QCT_STATUS_INVALID_PARAMETERS`.
#[no_mangle]
pub extern "C" fn qct_field_inv(f: *const QctField, a: u32, out: *mut u32) -> QctStatus {
    binary_op(f, a, 0, out, |f, a, _| f.inv(a))
}

fn binary_op(
    f: *const QctField,
    a: u32,
    b: u32,
    out: *mut u32,
    op: impl FnOnce(&Field, u32, u32) -> Option<u32>,
) -> QctStatus {
    guard(|| {
        let f = &non_null(f, "field")?.0;
        let slot = out_ptr(out, "out")?;
        for x in [a, b] {
            if !f.contains(x) {
                return Err(
                    QctError::InvalidParameters(format!("{x} is not an element of {f}")).into(),
                );
            }
        }
        *slot =
            op(f, a, b).ok_or_else(|| QctError::InvalidParameters("zero has no inverse".into()))?;
        Ok(())
    })
}

/// Builds the code spanned by a row-major `rows x cols` generator matrix of
/// element indices.
///
/// # Safety
/// `entries` must point to `rows * cols` readable values.
#[no_mangle]
pub unsafe extern "C" fn qct_code_from_generator(
    f: *const QctField,
    entries: *const u32,
    rows: usize,
    cols: usize,
    out: *mut *mut QctCode,
) -> QctStatus {
    guard(|| {
        let f = &non_null(f, "field")?.0;
        let slot = out_ptr(out, "out")?;
        if rows > 0 && entries.is_null() {
            return Err(Failure(QctStatus::NullPointer, "entries is null".into()));
        }
        let total = rows
            .checked_mul(cols)
            .ok_or_else(|| QctError::MalformedMatrix("size overflows".into()))?;
        let data: &[u32] = if total == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(entries, total)
        };
        let code = if rows == 0 {
            LinearCode::zero(f, cols)
        } else {
            let matrix: Vec<Vec<u32>> = data.chunks(cols).map(<[u32]>::to_vec).collect();
            LinearCode::from_generator(f, &matrix)?
        };
        *slot = Box::into_raw(Box::new(QctCode(code)));
        Ok(())
    })
}

/// Parses a JSON code record.
#[no_mangle]
pub extern "C" fn qct_code_from_json(json: *const c_char, out: *mut *mut QctCode) -> QctStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let slot = out_ptr(out, "out")?;
        *slot = Box::into_raw(Box::new(QctCode(import_code(text)?)));
        Ok(())
    })
}

/// Serializes a code as a JSON record.
#[no_mangle]
pub extern "C" fn qct_code_to_json(c: *const QctCode, out: *mut *mut c_char) -> QctStatus {
    guard(|| {
        let c = &non_null(c, "code")?.0;
        give_string(out, to_json(&CodeRecord::from_code(c))?)
    })
}

/// # Safety
/// `c` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qct_code_free(c: *mut QctCode) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Length n, or 0 for NULL.
#[no_mangle]
pub extern "C" fn qct_code_length(c: *const QctCode) -> usize {
    non_null(c, "code").map_or(0, |c| c.0.len())
}

/// Dimension k, or 0 for NULL.
#[no_mangle]
pub extern "C" fn qct_code_dimension(c: *const QctCode) -> usize {
    non_null(c, "code").map_or(0, |c| c.0.k())
}

#[no_mangle]
pub extern "C" fn qct_code_dual(c: *const QctCode, out: *mut *mut QctCode) -> QctStatus {
    guard(|| {
        let c = &non_null(c, "code")?.0;
        let slot = out_ptr(out, "out")?;
        *slot = Box::into_raw(Box::new(QctCode(c.dual())));
        Ok(())
    })
}

/// Hermitian dual of a code over GF(q^2).
#[no_mangle]
pub extern "C" fn qct_code_hermitian_dual(c: *const QctCode, out: *mut *mut QctCode) -> QctStatus {
    guard(|| {
        let c = &non_null(c, "code")?.0;
        let slot = out_ptr(out, "out")?;
        *slot = Box::into_raw(Box::new(QctCode(c.hermitian_dual()?)));
        Ok(())
    })
}

/// Whether `inner` is a subcode of `outer`.
#[no_mangle]
pub extern "C" fn qct_code_contains(
    outer: *const QctCode,
    inner: *const QctCode,
    out: *mut bool,
) -> QctStatus {
    guard(|| {
        let outer = &non_null(outer, "outer")?.0;
        let inner = &non_null(inner, "inner")?.0;
        *out_ptr(out, "out")? = outer.contains_code(inner)?;
        Ok(())
    })
}

/// Minimum distance. `exact` is set to false when only a lower bound could
/// be certified within `cap` codewords (0 selects the default cap).
#[no_mangle]
pub extern "C" fn qct_code_min_distance(
    c: *const QctCode,
    cap: u64,
    value: *mut usize,
    exact: *mut bool,
) -> QctStatus {
    guard(|| {
        let c = &non_null(c, "code")?.0;
        let d = min_distance(c, &config(cap))?;
        *out_ptr(value, "value")? = d.certified_lower();
        *out_ptr(exact, "exact")? = d.is_exact();
        Ok(())
    })
}

/// Standard CSS from C1 < C2; writes the parameter record as JSON.
#[no_mangle]
pub extern "C" fn qct_css_standard(
    c1: *const QctCode,
    c2: *const QctCode,
    cap: u64,
    out_json: *mut *mut c_char,
) -> QctStatus {
    guard(|| {
        let c1 = &non_null(c1, "c1")?.0;
        let c2 = &non_null(c2, "c2")?.0;
        give_string(out_json, to_json(&css_standard(c1, c2, &config(cap))?)?)
    })
}

/// Hermitian CSS from C1^(perp h) < C2; writes the parameter record as JSON.
#[no_mangle]
pub extern "C" fn qct_css_hermitian(
    c1: *const QctCode,
    c2: *const QctCode,
    cap: u64,
    out_json: *mut *mut c_char,
) -> QctStatus {
    guard(|| {
        let c1 = &non_null(c1, "c1")?.0;
        let c2 = &non_null(c2, "c2")?.0;
        give_string(out_json, to_json(&css_hermitian(c1, c2, &config(cap))?)?)
    })
}

#[derive(Deserialize)]
#[serde(tag = "pipeline", rename_all = "snake_case")]
enum Pipeline {
    Bch1 {
        m: u32,
        d1: usize,
        d2: usize,
    },
    Charpin {
        m: u32,
        i: u32,
    },
    RsSum {
        q: u32,
        k1: usize,
        k2: usize,
    },
    Concat {
        q: u32,
        m: u32,
        k1: usize,
        k2: usize,
    },
    QuantumConcat {
        q: u32,
        m: u32,
        k1: usize,
        k2: usize,
        k: usize,
    },
    Negacyclic {
        q: u32,
        n: usize,
        s: usize,
        m: u32,
    },
    ThBestBch {
        q: u32,
        n: usize,
        delta: usize,
    },
    ThBestSimplex {
        m: u32,
    },
}

#[derive(Deserialize)]
struct Request {
    #[serde(flatten)]
    pipeline: Pipeline,
    #[serde(default)]
    cap: u64,
}

/// Runs a pipeline described by a JSON request such as
/// `{"pipeline": "bch1", "m": 10, "d1": 15, "d2": 31}` (optional `"cap"`)
/// and writes its JSON result.
#[no_mangle]
pub extern "C" fn qct_quantum_json(
    request: *const c_char,
    out_json: *mut *mut c_char,
) -> QctStatus {
    guard(|| {
        let text = read_str(request, "request")?;
        let req: Request = serde_json::from_str(text)
            .map_err(|e| Failure(QctStatus::InvalidParameters, format!("request: {e}")))?;
        let cfg = config(req.cap);
        let json = match req.pipeline {
            Pipeline::Bch1 { m, d1, d2 } => to_json(&lemma_bch1(m, d1, d2, &cfg)?),
            Pipeline::Charpin { m, i } => to_json(&charpin_family(m, i, &cfg)?),
            Pipeline::RsSum { q, k1, k2 } => to_json(&rs_direct_sum_aqc(q, k1, k2, &cfg)?),
            Pipeline::Concat { q, m, k1, k2 } => to_json(&concat_expand_aqc(q, m, k1, k2, &cfg)?),
            Pipeline::QuantumConcat { q, m, k1, k2, k } => {
                to_json(&quantum_concat_params(q, m, k1, k2, k)?)
            }
            Pipeline::Negacyclic { q, n, s, m } => {
                to_json(&negacyclic_expand_aqc(q, n, s, m, &cfg)?)
            }
            Pipeline::ThBestBch { q, n, delta } => to_json(&th_best_family(
                &ThBestInput::NarrowSenseBch { q, n, delta },
                &cfg,
            )?),
            Pipeline::ThBestSimplex { m } => {
                to_json(&th_best_family(&ThBestInput::Simplex { m }, &cfg)?)
            }
        }?;
        give_string(out_json, json)
    })
}

/// Audits one target (`table1` .. `table4`, `examples`) and writes the
/// report as JSON.
#[no_mangle]
pub extern "C" fn qct_audit_json(
    target: *const c_char,
    cap: u64,
    out_json: *mut *mut c_char,
) -> QctStatus {
    guard(|| {
        let target: AuditTarget = read_str(target, "target")?.parse()?;
        give_string(out_json, to_json(&audit_table(target, &config(cap)))?)
    })
}
