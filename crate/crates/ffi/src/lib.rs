//! C interface to `kronecker-frobenius`.
//!
//! Every fallible function returns a [`KfStatus`]; on failure a message is
//! stored per thread and can be read with [`kf_last_error`]. A frame is an
//! opaque handle created by [`kf_frame_new`] and released by
//! [`kf_frame_free`]. Strings returned through `char **` outputs are owned
//! by the caller and released with [`kf_string_free`].
//!
//! Complex pairs are passed as `KfComplex[2]` and 2x2 matrices as
//! `KfComplex[4]` in row-major order.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kronecker_frobenius::charts::{invariant_chart, inverse_chart};
use kronecker_frobenius::frobenius::{monodromy_matrices, periods};
use kronecker_frobenius::verification::{run_suite, Suite};
use kronecker_frobenius::{
    cli, json, Chart, ChartPoint, ComplexMatrix2, Error, FdConfig, FrobeniusData, QuiverParams, SpectralFrame, C64,
};
use num_complex::Complex;

/// Status codes. Non-zero means the output arguments were not written.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    /// The verification ran but some check failed. The report is still written.
    VerificationFailed = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KfComplex {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for KfComplex {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<KfComplex> for C64 {
    fn from(z: KfComplex) -> Self {
        Complex::new(z.re, z.im)
    }
}

/// Coordinate charts: x (periods), y (cover), s (quotient), t (flat).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KfChart {
    X = 0,
    Y = 1,
    S = 2,
    T = 3,
}

impl From<KfChart> for Chart {
    fn from(c: KfChart) -> Self {
        match c {
            KfChart::X => Chart::X,
            KfChart::Y => Chart::Cover,
            KfChart::S => Chart::Quotient,
            KfChart::T => Chart::Flat,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KfSuite {
    All = 0,
    Axioms = 1,
    Dubrovin = 2,
    Monodromy = 3,
    Connection = 4,
}

impl From<KfSuite> for Suite {
    fn from(s: KfSuite) -> Self {
        match s {
            KfSuite::All => Suite::All,
            KfSuite::Axioms => Suite::Axioms,
            KfSuite::Dubrovin => Suite::Dubrovin,
            KfSuite::Monodromy => Suite::Monodromy,
            KfSuite::Connection => Suite::Connection,
        }
    }
}

/// Scalar constants of a frame.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KfFrameConstants {
    pub ell: u32,
    pub nu: f64,
    pub rho: f64,
    pub log_rho: f64,
    pub h: KfComplex,
    /// Semi-axes of the ellipse bounding the quotient chart.
    pub ellipse_a: f64,
    pub ellipse_b: f64,
}

/// Opaque frame handle.
pub struct KfFrame {
    frame: SpectralFrame,
    data: FrobeniusData,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(e: &Error) -> KfStatus {
    set_error(&e.to_string());
    if e.is_domain_error() {
        KfStatus::Domain
    } else {
        KfStatus::InvalidArgument
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<KfStatus, KfStatus>) -> KfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) | Ok(Err(s)) => {
            if s == KfStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => {
            set_error("internal panic");
            KfStatus::Internal
        }
    }
}

fn lift<T>(r: kronecker_frobenius::Result<T>) -> Result<T, KfStatus> {
    r.map_err(|e| fail(&e))
}

unsafe fn frame_ref<'a>(frame: *const KfFrame) -> Result<&'a KfFrame, KfStatus> {
    if frame.is_null() {
        set_error("null frame handle");
        return Err(KfStatus::NullPointer);
    }
    Ok(&*frame)
}

unsafe fn write<T: Copy>(out: *mut T, values: &[T]) -> Result<(), KfStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(KfStatus::NullPointer);
    }
    ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    Ok(())
}

fn pair(p: [C64; 2]) -> [KfComplex; 2] {
    [p[0].into(), p[1].into()]
}

fn matrix(m: &ComplexMatrix2) -> [KfComplex; 4] {
    [m.m[0][0].into(), m.m[0][1].into(), m.m[1][0].into(), m.m[1][1].into()]
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), KfStatus> {
    let c = CString::new(s).map_err(|_| KfStatus::Internal)?;
    write(out, &[c.into_raw()])
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn kf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a frame for `ell >= 3`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn kf_frame_new(ell: i64, out: *mut *mut KfFrame) -> KfStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return Err(KfStatus::NullPointer);
        }
        let frame = SpectralFrame::new(lift(QuiverParams::new(ell))?);
        let handle = Box::new(KfFrame {
            frame,
            data: FrobeniusData::new(frame),
        });
        *out = Box::into_raw(handle);
        Ok(KfStatus::Ok)
    })
}

/// Releases a frame. Null is ignored.
///
/// # Safety
/// `frame` must come from [`kf_frame_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn kf_frame_free(frame: *mut KfFrame) {
    if !frame.is_null() {
        drop(Box::from_raw(frame));
    }
}

/// # Safety
/// `frame` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn kf_frame_constants(frame: *const KfFrame, out: *mut KfFrameConstants) -> KfStatus {
    guard(|| {
        let f = &frame_ref(frame)?.frame;
        let (a, b) = f.ellipse_axes();
        let c = KfFrameConstants {
            ell: f.ell(),
            nu: f.nu,
            rho: f.rho,
            log_rho: f.log_rho,
            h: f.h.into(),
            ellipse_a: a,
            ellipse_b: b,
        };
        write(out, &[c])?;
        Ok(KfStatus::Ok)
    })
}

/// Maps a cover point `(y1, y2)` to the quotient chart `(s1, s2)`.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for two writes.
#[no_mangle]
pub unsafe extern "C" fn kf_invariant_chart(
    frame: *const KfFrame,
    y1: KfComplex,
    y2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let f = &frame_ref(frame)?.frame;
        let s = lift(invariant_chart(f, y1.into(), y2.into()))?;
        write(out, &pair(s.coords()))?;
        Ok(KfStatus::Ok)
    })
}

/// Maps `(s1, s2)` in the ellipse to its fundamental-domain lift `(y1, y2)`.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for two writes.
#[no_mangle]
pub unsafe extern "C" fn kf_inverse_chart(
    frame: *const KfFrame,
    s1: KfComplex,
    s2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let f = &frame_ref(frame)?.frame;
        let y = lift(inverse_chart(f, s1.into(), s2.into()))?;
        write(out, &pair(y.coords()))?;
        Ok(KfStatus::Ok)
    })
}

/// Flat coordinates `(t1, t2)` of the point `(s1, s2)`.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for two writes.
#[no_mangle]
pub unsafe extern "C" fn kf_flat_coords(
    frame: *const KfFrame,
    s1: KfComplex,
    s2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let d = &frame_ref(frame)?.data;
        write(out, &pair(d.flat_coords(s1.into(), s2.into())))?;
        Ok(KfStatus::Ok)
    })
}

/// Periods `(x1, x2)` at `(s1, s2)`. Fails with `DOMAIN` on the branch cut.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for two writes.
#[no_mangle]
pub unsafe extern "C" fn kf_periods(
    frame: *const KfFrame,
    s1: KfComplex,
    s2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let f = &frame_ref(frame)?.frame;
        let p = lift(periods(f, s1.into(), s2.into()))?;
        write(out, &pair(p.as_array()))?;
        Ok(KfStatus::Ok)
    })
}

/// Intersection form `g(dcⁱ, dcʲ)` in the given chart at `(c1, c2)`.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for four writes.
#[no_mangle]
pub unsafe extern "C" fn kf_intersection_form(
    frame: *const KfFrame,
    chart: KfChart,
    c1: KfComplex,
    c2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let d = &frame_ref(frame)?.data;
        let g = lift(d.g_cometric(ChartPoint::new(chart.into(), c1.into(), c2.into())))?;
        write(out, &matrix(&g.matrix))?;
        Ok(KfStatus::Ok)
    })
}

/// Potential value at flat coordinates `(t1, t2)`.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn kf_potential(
    frame: *const KfFrame,
    t1: KfComplex,
    t2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let d = &frame_ref(frame)?.data;
        let v = lift(d.potential(t1.into(), t2.into()))?;
        write(out, &[v.into()])?;
        Ok(KfStatus::Ok)
    })
}

/// Discriminant `det(E∘)` at a point of the s or t chart.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn kf_discriminant(
    frame: *const KfFrame,
    chart: KfChart,
    c1: KfComplex,
    c2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let d = &frame_ref(frame)?.data;
        let v = lift(d.discriminant(ChartPoint::new(chart.into(), c1.into(), c2.into())))?;
        write(out, &[v.into()])?;
        Ok(KfStatus::Ok)
    })
}

/// Canonical coordinates `(u+, u-)` at `(s1, s2)`.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for two writes.
#[no_mangle]
pub unsafe extern "C" fn kf_canonical_coords(
    frame: *const KfFrame,
    s1: KfComplex,
    s2: KfComplex,
    out: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let d = &frame_ref(frame)?.data;
        let (u, v) = d.canonical_coords(s1.into(), s2.into());
        write(out, &[u.into(), v.into()])?;
        Ok(KfStatus::Ok)
    })
}

/// Monodromy of the periods around `s1 = 2i` (`m1`) and `s1 = -2i` (`m2`).
///
/// # Safety
/// `frame` must be a live handle; `m1` and `m2` valid for four writes each.
#[no_mangle]
pub unsafe extern "C" fn kf_monodromy(
    frame: *const KfFrame,
    radius: f64,
    steps: u32,
    m1: *mut KfComplex,
    m2: *mut KfComplex,
) -> KfStatus {
    guard(|| {
        let f = &frame_ref(frame)?.frame;
        if m1.is_null() || m2.is_null() {
            set_error("null output pointer");
            return Err(KfStatus::NullPointer);
        }
        let (a, b) = lift(monodromy_matrices(f, radius, steps as usize))?;
        write(m1, &matrix(&a.matrix))?;
        write(m2, &matrix(&b.matrix))?;
        Ok(KfStatus::Ok)
    })
}

/// Runs a verification suite and writes the JSON report to `*out`.
/// Returns `VERIFICATION_FAILED` (with the report written) when a check fails.
///
/// # Safety
/// `frame` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn kf_verify_json(
    frame: *const KfFrame,
    suite: KfSuite,
    samples: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> KfStatus {
    guard(|| {
        let f = &frame_ref(frame)?.frame;
        if out.is_null() {
            set_error("null output pointer");
            return Err(KfStatus::NullPointer);
        }
        let report = lift(run_suite(f, suite.into(), samples as usize, seed, &FdConfig::default()))?;
        let pass = report.pass;
        write_string(out, json::to_string(&report))?;
        if pass {
            Ok(KfStatus::Ok)
        } else {
            set_error("verification failed");
            Ok(KfStatus::VerificationFailed)
        }
    })
}

/// Positive roots up to `max_height` as a JSON document.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn kf_roots_json(ell: i64, max_height: u64, imaginary: bool, out: *mut *mut c_char) -> KfStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return Err(KfStatus::NullPointer);
        }
        let v = lift(cli::cmd_roots(ell, max_height, imaginary))?;
        write_string(out, json::to_string(&v))?;
        Ok(KfStatus::Ok)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn kf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn kf_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => c"",
    };
    V.as_ptr()
}
