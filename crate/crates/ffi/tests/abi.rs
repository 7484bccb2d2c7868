use std::ffi::CStr;
use std::path::Path;
use std::process::Command;
use std::ptr;

use kronecker_frobenius_ffi::*;

fn c(re: f64, im: f64) -> KfComplex {
    KfComplex { re, im }
}

fn new_frame(ell: i64) -> *mut KfFrame {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { kf_frame_new(ell, &mut f) }, KfStatus::Ok);
    assert!(!f.is_null());
    f
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(kf_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn frame_lifecycle_and_constants() {
    let f = new_frame(3);
    let mut k = KfFrameConstants::default();
    assert_eq!(unsafe { kf_frame_constants(f, &mut k) }, KfStatus::Ok);
    let nu = (3.0 + 5f64.sqrt()) / 2.0;
    assert_eq!(k.ell, 3);
    assert!((k.nu - nu).abs() < 1e-14);
    assert!((k.rho - nu * nu).abs() < 1e-12);
    assert!((k.h.im * k.log_rho - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    assert!(k.ellipse_a > 168.0 && k.ellipse_b > 168.0);
    unsafe { kf_frame_free(f) };
    unsafe { kf_frame_free(ptr::null_mut()) };
}

#[test]
fn invalid_arguments_report_codes() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { kf_frame_new(2, &mut f) }, KfStatus::InvalidArgument);
    assert!(f.is_null());
    assert!(last_error().contains("ell >= 3"));
    assert_eq!(unsafe { kf_frame_new(3, ptr::null_mut()) }, KfStatus::NullPointer);
    let mut out = [KfComplex::default(); 2];
    assert_eq!(
        unsafe { kf_flat_coords(ptr::null(), c(0.0, 0.0), c(0.0, 0.0), out.as_mut_ptr()) },
        KfStatus::NullPointer
    );
}

#[test]
fn chart_round_trip_through_abi() {
    let f = new_frame(4);
    let mut y = [KfComplex::default(); 2];
    let mut s = [KfComplex::default(); 2];
    assert_eq!(
        unsafe { kf_inverse_chart(f, c(1.5, -0.7), c(0.2, 0.3), y.as_mut_ptr()) },
        KfStatus::Ok
    );
    assert_eq!(
        unsafe { kf_invariant_chart(f, y[0], y[1], s.as_mut_ptr()) },
        KfStatus::Ok
    );
    assert!((s[0].re - 1.5).abs() < 1e-10 && (s[0].im + 0.7).abs() < 1e-10);
    assert!((s[1].re - 0.2).abs() < 1e-12 && (s[1].im - 0.3).abs() < 1e-12);
    unsafe { kf_frame_free(f) };
}

#[test]
fn periods_domain_error_and_values() {
    let f = new_frame(3);
    let mut x = [KfComplex::default(); 2];
    assert_eq!(
        unsafe { kf_periods(f, c(0.0, 1.0), c(0.0, 0.0), x.as_mut_ptr()) },
        KfStatus::Domain
    );
    assert!(last_error().contains("branch cut"));
    assert_eq!(
        unsafe { kf_periods(f, c(1.0, 0.0), c(0.5, 0.0), x.as_mut_ptr()) },
        KfStatus::Ok
    );
    let prod = num_complex::Complex::new(x[0].re, x[0].im) * num_complex::Complex::new(x[1].re, x[1].im);
    assert!((prod - num_complex::Complex::new(0.5f64.exp(), 0.0)).norm() < 1e-12);
    unsafe { kf_frame_free(f) };
}

#[test]
fn tensors_discriminant_canonical() {
    let f = new_frame(3);
    let mut g = [KfComplex::default(); 4];
    assert_eq!(
        unsafe { kf_intersection_form(f, KfChart::X, c(1.0, 0.0), c(2.0, 0.0), g.as_mut_ptr()) },
        KfStatus::Ok
    );
    assert_eq!(g[1], c(-1.0, 0.0));
    assert_eq!(g[0], c(0.0, 0.0));
    let mut d = KfComplex::default();
    assert_eq!(
        unsafe { kf_discriminant(f, KfChart::S, c(0.0, 2.0), c(0.0, 0.0), &mut d) },
        KfStatus::Ok
    );
    assert!(d.re.abs() < 1e-12 && d.im.abs() < 1e-12);
    assert_eq!(
        unsafe { kf_discriminant(f, KfChart::X, c(1.0, 0.0), c(1.0, 0.0), &mut d) },
        KfStatus::Domain
    );
    let mut u = [KfComplex::default(); 2];
    assert_eq!(
        unsafe { kf_canonical_coords(f, c(0.0, 0.0), c(0.0, 0.0), u.as_mut_ptr()) },
        KfStatus::Ok
    );
    assert!((u[0].im - 2.0).abs() < 1e-14 && (u[1].im + 2.0).abs() < 1e-14);
    let mut p = KfComplex::default();
    assert_eq!(
        unsafe { kf_potential(f, c(1.0, 0.0), c(0.0, 0.0), &mut p) },
        KfStatus::Domain
    );
    unsafe { kf_frame_free(f) };
}

#[test]
fn monodromy_matches_reflections() {
    let f = new_frame(3);
    let nu = (3.0 + 5f64.sqrt()) / 2.0;
    let mut m1 = [KfComplex::default(); 4];
    let mut m2 = [KfComplex::default(); 4];
    assert_eq!(
        unsafe { kf_monodromy(f, 0.5, 4096, m1.as_mut_ptr(), m2.as_mut_ptr()) },
        KfStatus::Ok
    );
    let want1 = [0.0, nu, 1.0 / nu, 0.0];
    let want2 = [0.0, 1.0 / nu, nu, 0.0];
    for k in 0..4 {
        assert!((m1[k].re - want1[k]).abs() < 1e-6 && m1[k].im.abs() < 1e-6);
        assert!((m2[k].re - want2[k]).abs() < 1e-6 && m2[k].im.abs() < 1e-6);
    }
    assert_eq!(
        unsafe { kf_monodromy(f, 0.5, 4, m1.as_mut_ptr(), m2.as_mut_ptr()) },
        KfStatus::InvalidArgument
    );
    unsafe { kf_frame_free(f) };
}

#[test]
fn json_outputs() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { kf_roots_json(3, 4, false, &mut s) }, KfStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { kf_string_free(s) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["real_roots"], serde_json::json!([[0, 1], [1, 0], [1, 3], [3, 1]]));

    let f = new_frame(3);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { kf_verify_json(f, KfSuite::Axioms, 20, 42, &mut s) },
        KfStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { kf_string_free(s) };
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 42);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { kf_verify_json(f, KfSuite::All, 0, 42, &mut s) },
        KfStatus::InvalidArgument
    );
    assert!(s.is_null());
    unsafe { kf_frame_free(f) };
    assert!(!unsafe { CStr::from_ptr(kf_version()) }.to_bytes().is_empty());
}

const FUNCTIONS: &[&str] = &[
    "kf_last_error",
    "kf_frame_new",
    "kf_frame_free",
    "kf_frame_constants",
    "kf_invariant_chart",
    "kf_inverse_chart",
    "kf_flat_coords",
    "kf_periods",
    "kf_intersection_form",
    "kf_potential",
    "kf_discriminant",
    "kf_canonical_coords",
    "kf_monodromy",
    "kf_verify_json",
    "kf_roots_json",
    "kf_string_free",
    "kf_version",
];

fn header() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/kronecker_frobenius.h")
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).expect("header generated by build.rs");
    assert!(text.contains("#ifndef KRONECKER_FROBENIUS_H"));
    assert!(text.contains("typedef struct KfFrame KfFrame;"));
    for f in FUNCTIONS {
        assert!(text.contains(&format!("{f}(")), "{f} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let dir = std::env::temp_dir().join(format!("kf_hdr_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("probe.c");
    let body = FUNCTIONS.iter().map(|f| format!("  (void)&{f};\n")).collect::<String>();
    std::fs::write(
        &src,
        format!(
            "#include \"kronecker_frobenius.h\"\nint main(void) {{\n  KfComplex z = {{0.0, 0.0}};\n  (void)z;\n{body}  return KF_STATUS_OK;\n}}\n"
        ),
    )
    .unwrap();
    let status = match Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header().parent().unwrap())
        .arg(&src)
        .status()
    {
        Ok(s) => s,
        Err(_) => {
            eprintln!("no C compiler found; skipping");
            return;
        }
    };
    std::fs::remove_dir_all(&dir).ok();
    assert!(status.success());
}
