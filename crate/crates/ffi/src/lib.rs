//! C ABI for `s3harm`.
//!
//! Every entry point returns an [`S3hStatus`] (or a plain value for the
//! infallible getters), never unwinds across the boundary, and records a
//! message for [`s3h_last_error`] on failure. Handles are opaque and must be
//! released with their `_free` function; strings returned through `char **`
//! out-parameters are released with [`s3h_string_free`].

use s3harm::deck::{deck_group, DeckGroup, Manifold};
use s3harm::group::Point4;
use s3harm::harmonics::{basis, multiplicity, BasisFunction};
use s3harm::su2::u_from_point;
use s3harm::suites::{run, Suite, SuiteOptions, J_MAX_LIMIT};
use s3harm::wigner::{su2_character, HalfInt};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

pub const S3H_MANIFOLD_C2: u32 = 2;
pub const S3H_MANIFOLD_C3: u32 = 3;

pub const S3H_SUITE_GROUP: u32 = 0;
pub const S3H_SUITE_BASIS: u32 = 1;
pub const S3H_SUITE_INDUCED: u32 = 2;
pub const S3H_SUITE_ALL: u32 = 3;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S3hStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The point passed in is not on the unit sphere.
    NotOnSphere = 3,
    /// `s3h_verify` ran and at least one check failed.
    VerificationFailed = 4,
    /// An internal panic was caught.
    Internal = 5,
}

/// Opaque deck group handle.
pub struct S3hDeckGroup {
    inner: &'static DeckGroup,
}

/// Opaque handle to the periodic basis at one degree.
pub struct S3hBasis {
    manifold: Manifold,
    j: u32,
    functions: Vec<BasisFunction>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type Failure = (S3hStatus, String);

fn fail<T>(status: S3hStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err((status, msg.into()))
}

fn guard(f: impl FnOnce() -> Result<S3hStatus, Failure>) -> S3hStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal error".into());
            set_error(format!("panic: {msg}"));
            S3hStatus::Internal
        }
    }
}

fn manifold(code: u32) -> Result<Manifold, Failure> {
    match code {
        S3H_MANIFOLD_C2 => Ok(Manifold::C2),
        S3H_MANIFOLD_C3 => Ok(Manifold::C3),
        _ => fail(
            S3hStatus::InvalidArgument,
            format!("unknown manifold code {code}"),
        ),
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        fail(S3hStatus::NullPointer, format!("{name} is null"))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .or_else(|_| fail(S3hStatus::Internal, "string contains NUL"))
}

unsafe fn point(x: *const f64) -> Result<Point4, Failure> {
    non_null(x, "x")?;
    let p = Point4(
        std::slice::from_raw_parts(x, 4)
            .try_into()
            .expect("four coordinates"),
    );
    if !p.0.iter().all(|v| v.is_finite()) || (p.norm_sq() - 1.0).abs() > 1e-9 {
        return fail(
            S3hStatus::NotOnSphere,
            format!("{:?} is not on the unit sphere", p.0),
        );
    }
    Ok(p)
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn s3h_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next `s3h_` call on the same thread.
#[no_mangle]
pub extern "C" fn s3h_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Number of deck-periodic harmonics of degree `twice_j`.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn s3h_multiplicity(
    manifold_code: u32,
    twice_j: u32,
    out: *mut u64,
) -> S3hStatus {
    guard(|| {
        non_null(out, "out")?;
        let m = manifold(manifold_code)?;
        if twice_j > 2 * J_MAX_LIMIT {
            return fail(
                S3hStatus::InvalidArgument,
                format!("2j = {twice_j} exceeds {}", 2 * J_MAX_LIMIT),
            );
        }
        *out = multiplicity(m, HalfInt::from_twice(twice_j as i32));
        Ok(S3hStatus::Ok)
    })
}

/// `χ^j` of a rotation by `phi`.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one `double`.
#[no_mangle]
pub unsafe extern "C" fn s3h_su2_character(twice_j: u32, phi: f64, out: *mut f64) -> S3hStatus {
    guard(|| {
        non_null(out, "out")?;
        if !phi.is_finite() || twice_j > 2 * J_MAX_LIMIT {
            return fail(
                S3hStatus::InvalidArgument,
                "phi must be finite and 2j at most 40",
            );
        }
        *out = su2_character(HalfInt::from_twice(twice_j as i32), phi);
        Ok(S3hStatus::Ok)
    })
}

/// # Safety
/// `out` must be NULL or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn s3h_deck_group_new(
    manifold_code: u32,
    out: *mut *mut S3hDeckGroup,
) -> S3hStatus {
    guard(|| {
        non_null(out, "out")?;
        let m = manifold(manifold_code)?;
        *out = Box::into_raw(Box::new(S3hDeckGroup {
            inner: deck_group(m),
        }));
        Ok(S3hStatus::Ok)
    })
}

/// # Safety
/// `group` must be NULL or a handle from `s3h_deck_group_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn s3h_deck_group_free(group: *mut S3hDeckGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Order of the group; 0 for a NULL handle.
///
/// # Safety
/// `group` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn s3h_deck_group_order(group: *const S3hDeckGroup) -> usize {
    group.as_ref().map_or(0, |g| g.inner.order())
}

/// Signs and one-line permutation of element `index`; the action is
/// `y_i = signs[i] * x[perm[i]]`.
///
/// # Safety
/// `group` must be a live handle, `signs` and `perm` NULL or writable for 4 entries.
#[no_mangle]
pub unsafe extern "C" fn s3h_deck_group_element(
    group: *const S3hDeckGroup,
    index: usize,
    signs: *mut i8,
    perm: *mut u8,
) -> S3hStatus {
    guard(|| {
        non_null(group, "group")?;
        non_null(signs, "signs")?;
        non_null(perm, "perm")?;
        let g = &(*group).inner;
        let Some(e) = g.elements.get(index) else {
            return fail(
                S3hStatus::InvalidArgument,
                format!("index {index} out of range"),
            );
        };
        ptr::copy_nonoverlapping(e.element.signs().as_ptr(), signs, 4);
        ptr::copy_nonoverlapping(e.element.perm().as_ptr(), perm, 4);
        Ok(S3hStatus::Ok)
    })
}

/// `y = g_index(x)` for `x` on the unit sphere.
///
/// # Safety
/// `group` must be a live handle, `x` readable and `y` writable for 4 doubles.
#[no_mangle]
pub unsafe extern "C" fn s3h_deck_group_apply(
    group: *const S3hDeckGroup,
    index: usize,
    x: *const f64,
    y: *mut f64,
) -> S3hStatus {
    guard(|| {
        non_null(group, "group")?;
        non_null(y, "y")?;
        let p = point(x)?;
        let g = &(*group).inner;
        let Some(e) = g.elements.get(index) else {
            return fail(
                S3hStatus::InvalidArgument,
                format!("index {index} out of range"),
            );
        };
        ptr::copy_nonoverlapping(e.element.apply(&p).0.as_ptr(), y, 4);
        Ok(S3hStatus::Ok)
    })
}

/// # Safety
/// `out` must be NULL or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn s3h_basis_new(
    manifold_code: u32,
    j: u32,
    out: *mut *mut S3hBasis,
) -> S3hStatus {
    guard(|| {
        non_null(out, "out")?;
        let m = manifold(manifold_code)?;
        if j > J_MAX_LIMIT {
            return fail(
                S3hStatus::InvalidArgument,
                format!("j = {j} exceeds {J_MAX_LIMIT}"),
            );
        }
        *out = Box::into_raw(Box::new(S3hBasis {
            manifold: m,
            j,
            functions: basis(m, j),
        }));
        Ok(S3hStatus::Ok)
    })
}

/// # Safety
/// `b` must be NULL or a handle from `s3h_basis_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn s3h_basis_free(b: *mut S3hBasis) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Number of basis functions; 0 for a NULL handle.
///
/// # Safety
/// `b` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn s3h_basis_len(b: *const S3hBasis) -> usize {
    b.as_ref().map_or(0, |b| b.functions.len())
}

/// Value of basis function `index` at the point `x` of the unit sphere.
///
/// # Safety
/// `b` must be a live handle, `x` readable for 4 doubles, `re` and `im` writable.
#[no_mangle]
pub unsafe extern "C" fn s3h_basis_eval(
    b: *const S3hBasis,
    index: usize,
    x: *const f64,
    re: *mut f64,
    im: *mut f64,
) -> S3hStatus {
    guard(|| {
        non_null(b, "basis")?;
        non_null(re, "re")?;
        non_null(im, "im")?;
        let p = point(x)?;
        let b = &*b;
        let Some(f) = b.functions.get(index) else {
            return fail(
                S3hStatus::InvalidArgument,
                format!("index {index} out of range"),
            );
        };
        let v = f
            .evaluate(&u_from_point(&p))
            .or_else(|e| fail(S3hStatus::NotOnSphere, e.to_string()))?;
        *re = v.re;
        *im = v.im;
        Ok(S3hStatus::Ok)
    })
}

/// The basis as a JSON document; free the result with `s3h_string_free`.
///
/// # Safety
/// `b` must be a live handle and `out` writable for one pointer.
#[no_mangle]
pub unsafe extern "C" fn s3h_basis_to_json(b: *const S3hBasis, out: *mut *mut c_char) -> S3hStatus {
    guard(|| {
        non_null(b, "basis")?;
        non_null(out, "out")?;
        let b = &*b;
        let doc = serde_json::json!({
            "schema": s3harm::cli::SCHEMA,
            "manifold": b.manifold.to_string(),
            "j": b.j,
            "functions": b.functions,
        });
        *out = into_c_string(doc.to_string())?;
        Ok(S3hStatus::Ok)
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string from an `s3h_` out-parameter not yet freed.
#[no_mangle]
pub unsafe extern "C" fn s3h_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs a verification suite. Returns `Ok` if every check passed and
/// `VerificationFailed` otherwise; if `report_json` is not NULL it receives
/// the reports as JSON.
///
/// # Safety
/// `report_json` must be NULL or writable for one pointer.
#[no_mangle]
pub unsafe extern "C" fn s3h_verify(
    suite: u32,
    j_max: u32,
    seed: u64,
    tol: f64,
    report_json: *mut *mut c_char,
) -> S3hStatus {
    guard(|| {
        let suite = match suite {
            S3H_SUITE_GROUP => Suite::Group,
            S3H_SUITE_BASIS => Suite::Basis,
            S3H_SUITE_INDUCED => Suite::Induced,
            S3H_SUITE_ALL => Suite::All,
            _ => {
                return fail(
                    S3hStatus::InvalidArgument,
                    format!("unknown suite code {suite}"),
                )
            }
        };
        if j_max > J_MAX_LIMIT || !(tol > 0.0 && tol.is_finite()) {
            return fail(
                S3hStatus::InvalidArgument,
                "j_max must be at most 20 and tol positive",
            );
        }
        let opts = SuiteOptions {
            j_max,
            seed,
            tol,
            ..SuiteOptions::default()
        };
        let reports = run(suite, &opts);
        let passed = reports.iter().all(|r| r.passed);
        if !report_json.is_null() {
            let doc = serde_json::json!({ "schema": s3harm::cli::SCHEMA, "passed": passed, "reports": reports });
            *report_json = into_c_string(doc.to_string())?;
        }
        if passed {
            Ok(S3hStatus::Ok)
        } else {
            set_error("verification failed");
            Ok(S3hStatus::VerificationFailed)
        }
    })
}

/// Copies `s3h_last_error` into a caller buffer; returns the length needed
/// including the terminating NUL (0 if there is no error).
///
/// # Safety
/// `buf` must be NULL or writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn s3h_last_error_copy(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(s) = e.as_ref() else { return 0 };
        let bytes = s.as_bytes_with_nul();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, n);
            *buf.add(n - 1) = 0;
        }
        bytes.len()
    })
}

#[doc(hidden)]
pub fn last_error_string() -> Option<String> {
    let p = s3h_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}
