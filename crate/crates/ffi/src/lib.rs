//! C ABI over `trispec`.
//!
//! Every fallible call returns a [`TsStatus`]; on failure the message is
//! available from [`ts_last_error_message`] on the same thread. Handles are
//! opaque and released with their `_free` function. Strings returned to the
//! caller are owned by the caller and released with [`ts_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use trispec::catalog::{self, CatalogError, CentralType, CentralTypeError, Side};
use trispec::eigclass::{enumerate_min_eig, matsuo_candidates, EigClassError};
use trispec::oracle::{construct, exact_spectrum_capped, OracleError};
use trispec::{BitMatrix, Rational, Spectrum};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    OutOfRange = 4,
    NotRank3 = 5,
    NoOracle = 6,
    CapExceeded = 7,
    InvalidGraph = 8,
    Oracle = 9,
    InvalidArgument = 10,
    Internal = 11,
}

/// Exact spectrum with its vertex count.
pub struct TsSpectrum {
    spectrum: Spectrum,
    n: u64,
}

/// Adjacency matrix of a simple graph.
pub struct TsGraph {
    matrix: BitMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(TsStatus, String);

impl Failure {
    fn new(status: TsStatus, msg: impl std::fmt::Display) -> Failure {
        Failure(status, msg.to_string())
    }
}

impl From<CentralTypeError> for Failure {
    fn from(e: CentralTypeError) -> Failure {
        let status = match e {
            CentralTypeError::OutOfRange(_) => TsStatus::OutOfRange,
            _ => TsStatus::Parse,
        };
        Failure::new(status, e)
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Failure {
        let status = match e {
            CatalogError::OutOfRange(_) => TsStatus::OutOfRange,
            CatalogError::NotRank3(_) => TsStatus::NotRank3,
            CatalogError::Inconsistent(_) => TsStatus::Internal,
        };
        Failure::new(status, e)
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Failure {
        let status = match e {
            OracleError::NoOracle(_) => TsStatus::NoOracle,
            OracleError::CapExceeded { .. } => TsStatus::CapExceeded,
            OracleError::Catalog(ref c) => return Failure::from(c.clone()),
            _ => TsStatus::Oracle,
        };
        Failure::new(status, e)
    }
}

impl From<EigClassError> for Failure {
    fn from(e: EigClassError) -> Failure {
        match e {
            EigClassError::Catalog(c) => c.into(),
            e => Failure::new(TsStatus::InvalidArgument, e),
        }
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, recording failures and converting panics.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TsStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(TsStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(TsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn central_type(p: *const c_char) -> Result<CentralType, Failure> {
    Ok(str_arg(p, "central type")?.parse::<CentralType>()?)
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure::new(TsStatus::NullPointer, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(TsStatus::NullPointer, format!("{what} is null")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    *out_ptr(out, "output")? = owned_string(s);
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::new(TsStatus::Internal, e))
}

/// Message of the last failed call on this thread, or null. Free with `ts_string_free`.
#[no_mangle]
pub extern "C" fn ts_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Closed-form spectrum of a central type such as `"PR4(h=0,m=3)"`.
///
/// # Safety
/// `ct_name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_catalog_spectrum(ct_name: *const c_char, out: *mut *mut TsSpectrum) -> TsStatus {
    guard(|| {
        let out = out_ptr(out, "output")?;
        let c = central_type(ct_name)?;
        let (n, spectrum) = catalog::size_and_spectrum(&c)?;
        *out = Box::into_raw(Box::new(TsSpectrum { spectrum, n }));
        Ok(())
    })
}

/// Minimal eigenvalue of a central type.
///
/// # Safety
/// `ct_name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_catalog_min_eigenvalue(ct_name: *const c_char, out: *mut i64) -> TsStatus {
    guard(|| {
        let out = out_ptr(out, "output")?;
        *out = catalog::min_eigenvalue(&central_type(ct_name)?)?;
        Ok(())
    })
}

/// Extended parameters as JSON; `codiagram` selects the complement.
///
/// # Safety
/// `ct_name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_catalog_params_json(
    ct_name: *const c_char,
    codiagram: bool,
    out: *mut *mut c_char,
) -> TsStatus {
    guard(|| {
        let side = if codiagram { Side::Codiagram } else { Side::Diagram };
        let p = catalog::extended_params(&central_type(ct_name)?, side)?;
        put_string(out, json(&p)?)
    })
}

/// # Safety
/// `s` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_free(s: *mut TsSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_size(s: *const TsSpectrum) -> u64 {
    s.as_ref().map_or(0, |s| s.n)
}

/// Number of distinct entries, the degree included; 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_entry_count(s: *const TsSpectrum) -> usize {
    s.as_ref().map_or(0, |s| s.spectrum.restricted().len() + 1)
}

/// Entry `index` (0 is the degree) as `num/den` with its multiplicity.
///
/// # Safety
/// `s` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_entry(
    s: *const TsSpectrum,
    index: usize,
    num: *mut i64,
    den: *mut i64,
    mult: *mut u64,
) -> TsStatus {
    guard(|| {
        let s = handle(s, "spectrum")?;
        let (num, den, mult) = (out_ptr(num, "num")?, out_ptr(den, "den")?, out_ptr(mult, "mult")?);
        let entries = s.spectrum.entries();
        let e = entries
            .get(index)
            .ok_or_else(|| Failure::new(TsStatus::OutOfRange, format!("entry {index} of {}", entries.len())))?;
        let too_big = || Failure::new(TsStatus::OutOfRange, format!("{} does not fit in 64 bits", e.eig));
        *num = i64::try_from(e.eig.numer()).map_err(|_| too_big())?;
        *den = i64::try_from(e.eig.denom()).map_err(|_| too_big())?;
        *mult = e.mult;
        Ok(())
    })
}

/// Display form, e.g. `<32; [4]^27, [-4]^35>`. Null for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_to_string(s: *const TsSpectrum) -> *mut c_char {
    s.as_ref().map_or(ptr::null_mut(), |s| owned_string(s.spectrum.to_string()))
}

/// JSON form. Null for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_to_json(s: *const TsSpectrum) -> *mut c_char {
    s.as_ref().map_or(ptr::null_mut(), |s| {
        serde_json::to_string(&s.spectrum).map_or(ptr::null_mut(), owned_string)
    })
}

/// Exact equality of two spectra and their vertex counts.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_equal(a: *const TsSpectrum, b: *const TsSpectrum) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.n == b.n && a.spectrum == b.spectrum,
        _ => false,
    }
}

/// Builds the diagram of a central type with at most `cap` vertices.
///
/// # Safety
/// `ct_name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_construct(
    ct_name: *const c_char,
    cap: usize,
    out: *mut *mut TsGraph,
) -> TsStatus {
    guard(|| {
        let out = out_ptr(out, "output")?;
        let matrix = construct(&central_type(ct_name)?, cap)?;
        *out = Box::into_raw(Box::new(TsGraph { matrix }));
        Ok(())
    })
}

/// Graph from a row-major `n * n` 0/1 matrix, which must be symmetric with zero diagonal.
///
/// # Safety
/// `data` must point to `n * n` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_from_adjacency(n: usize, data: *const u8, out: *mut *mut TsGraph) -> TsStatus {
    guard(|| {
        let out = out_ptr(out, "output")?;
        let len = n
            .checked_mul(n)
            .ok_or_else(|| Failure::new(TsStatus::InvalidArgument, "n * n overflows"))?;
        if data.is_null() && len > 0 {
            return Err(Failure::new(TsStatus::NullPointer, "data is null"));
        }
        let cells = if len == 0 { &[][..] } else { std::slice::from_raw_parts(data, len) };
        if let Some(v) = cells.iter().find(|&&v| v > 1) {
            return Err(Failure::new(TsStatus::InvalidGraph, format!("entry {v} is not 0 or 1")));
        }
        let rows: Vec<Vec<u8>> = cells.chunks(n.max(1)).map(<[u8]>::to_vec).collect();
        let matrix = BitMatrix::from_rows(&rows).map_err(|e| Failure::new(TsStatus::InvalidGraph, e))?;
        *out = Box::into_raw(Box::new(TsGraph { matrix }));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_free(g: *mut TsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_order(g: *const TsGraph) -> usize {
    g.as_ref().map_or(0, |g| g.matrix.n())
}

/// Adjacency test; false for a null handle or out-of-range vertices.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_has_edge(g: *const TsGraph, i: usize, j: usize) -> bool {
    g.as_ref()
        .is_some_and(|g| i < g.matrix.n() && j < g.matrix.n() && g.matrix.get(i, j))
}

/// Edge list with a `p edge n m` header.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_to_dimacs(g: *const TsGraph, out: *mut *mut c_char) -> TsStatus {
    guard(|| put_string(out, handle(g, "graph")?.matrix.to_dimacs()))
}

/// Exact spectrum of a regular graph with integral eigenvalues and at most `cap` vertices.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_spectrum(g: *const TsGraph, cap: usize, out: *mut *mut TsSpectrum) -> TsStatus {
    guard(|| {
        let out = out_ptr(out, "output")?;
        let g = handle(g, "graph")?;
        let spectrum = exact_spectrum_capped(&g.matrix, cap)?;
        *out = Box::into_raw(Box::new(TsSpectrum { spectrum, n: g.matrix.n() as u64 }));
        Ok(())
    })
}

/// Builds the diagram and compares its exact spectrum with the catalog.
///
/// # Safety
/// `ct_name` must be a NUL-terminated string; `matches` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_verify(ct_name: *const c_char, cap: usize, matches: *mut bool) -> TsStatus {
    guard(|| {
        let matches = out_ptr(matches, "output")?;
        let c = central_type(ct_name)?;
        let (n, expected) = catalog::size_and_spectrum(&c)?;
        let g = construct(&c, cap)?;
        let got = exact_spectrum_capped(&g, cap)?;
        *matches = g.n() as u64 == n && got == expected;
        Ok(())
    })
}

/// Enumeration report for minimal eigenvalue at least `-t`, as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_enumerate_json(t: u64, out: *mut *mut c_char) -> TsStatus {
    guard(|| put_string(out, json(&enumerate_min_eig(t))?))
}

/// Matsuo candidates for `eta` written `"p/q"`, as JSON.
///
/// # Safety
/// `eta` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_matsuo_json(eta: *const c_char, symplectic_only: bool, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        let eta: Rational = str_arg(eta, "eta")?
            .parse()
            .map_err(|e| Failure::new(TsStatus::Parse, e))?;
        put_string(out, json(&matsuo_candidates(&eta, symplectic_only)?)?)
    })
}
