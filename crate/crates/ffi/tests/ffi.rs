use s3harm_ffi::*;
use std::ffi::{c_char, CStr};
use std::ptr;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { s3h_string_free(p) };
    s
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(s3h_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn multiplicities_through_abi() {
    for twice_j in &[0u32, 2, 4, 6, 8, 10, 12, 14, 16] {
        let mut m = u64::MAX;
        let st = unsafe { s3h_multiplicity(S3H_MANIFOLD_C2, *twice_j, &mut m) };
        assert_eq!(st, S3hStatus::Ok);
        let lib = s3harm::harmonics::multiplicity(
            s3harm::deck::Manifold::C2,
            s3harm::wigner::HalfInt::from_twice(*twice_j as i32),
        );
        assert_eq!(m, lib);
    }
    let mut m = 0;
    assert_eq!(
        unsafe { s3h_multiplicity(S3H_MANIFOLD_C3, 1, &mut m) },
        S3hStatus::Ok
    );
    assert_eq!(m, 0);
}

#[test]
fn bad_arguments_set_last_error() {
    let mut m = 0;
    assert_eq!(
        unsafe { s3h_multiplicity(7, 0, &mut m) },
        S3hStatus::InvalidArgument
    );
    assert!(last_error_string().unwrap().contains("manifold"));
    assert_eq!(
        unsafe { s3h_multiplicity(S3H_MANIFOLD_C2, 0, ptr::null_mut()) },
        S3hStatus::NullPointer
    );
    assert_eq!(
        unsafe { s3h_multiplicity(S3H_MANIFOLD_C2, 100, &mut m) },
        S3hStatus::InvalidArgument
    );

    let mut buf = [0 as c_char; 8];
    let need = unsafe { s3h_last_error_copy(buf.as_mut_ptr(), buf.len()) };
    assert!(need > buf.len());
    assert_eq!(buf[7], 0);

    assert_eq!(
        unsafe { s3h_multiplicity(S3H_MANIFOLD_C2, 0, &mut m) },
        S3hStatus::Ok
    );
    assert!(s3h_last_error().is_null());
    assert_eq!(unsafe { s3h_last_error_copy(ptr::null_mut(), 0) }, 0);
}

#[test]
fn character_matches_sine_ratio() {
    let mut c = 0.0;
    let phi = 0.7_f64;
    assert_eq!(unsafe { s3h_su2_character(3, phi, &mut c) }, S3hStatus::Ok);
    let want = (2.0 * phi).sin() / (phi / 2.0).sin();
    assert!((c - want).abs() < 1e-12, "{c} vs {want}");
    assert_eq!(
        unsafe { s3h_su2_character(3, f64::NAN, &mut c) },
        S3hStatus::InvalidArgument
    );
}

#[test]
fn deck_group_handles() {
    for (code, order) in [(S3H_MANIFOLD_C2, 8), (S3H_MANIFOLD_C3, 8)] {
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { s3h_deck_group_new(code, &mut g) }, S3hStatus::Ok);
        assert_eq!(unsafe { s3h_deck_group_order(g) }, order);

        let mut signs = [0i8; 4];
        let mut perm = [0u8; 4];
        let x = [0.5, -0.5, 0.5, 0.5];
        let mut y = [0.0; 4];
        for i in 0..order {
            assert_eq!(
                unsafe { s3h_deck_group_element(g, i, signs.as_mut_ptr(), perm.as_mut_ptr()) },
                S3hStatus::Ok
            );
            assert_eq!(
                unsafe { s3h_deck_group_apply(g, i, x.as_ptr(), y.as_mut_ptr()) },
                S3hStatus::Ok
            );
            for k in 0..4 {
                assert_eq!(y[k], signs[k] as f64 * x[perm[k] as usize]);
            }
        }
        assert_eq!(
            unsafe { s3h_deck_group_element(g, order, signs.as_mut_ptr(), perm.as_mut_ptr()) },
            S3hStatus::InvalidArgument
        );
        let off = [1.0, 1.0, 0.0, 0.0];
        assert_eq!(
            unsafe { s3h_deck_group_apply(g, 0, off.as_ptr(), y.as_mut_ptr()) },
            S3hStatus::NotOnSphere
        );
        unsafe { s3h_deck_group_free(g) };
    }
    assert_eq!(unsafe { s3h_deck_group_order(ptr::null()) }, 0);
    unsafe { s3h_deck_group_free(ptr::null_mut()) };
}

#[test]
fn basis_is_periodic_through_abi() {
    let mut g = ptr::null_mut();
    let mut b = ptr::null_mut();
    unsafe {
        assert_eq!(s3h_deck_group_new(S3H_MANIFOLD_C2, &mut g), S3hStatus::Ok);
        assert_eq!(s3h_basis_new(S3H_MANIFOLD_C2, 4, &mut b), S3hStatus::Ok);
    }
    let n = unsafe { s3h_basis_len(b) };
    assert_eq!(
        n,
        s3harm::harmonics::basis(s3harm::deck::Manifold::C2, 4).len()
    );
    assert!(n > 0);
    let x = [0.3, -0.1, 0.2_f64, 0.0];
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let x = x.map(|v| v / norm);
    let mut gx = [0.0; 4];
    for k in 0..n {
        let (mut re, mut im) = (0.0, 0.0);
        unsafe {
            assert_eq!(
                s3h_basis_eval(b, k, x.as_ptr(), &mut re, &mut im),
                S3hStatus::Ok
            )
        };
        for i in 0..8 {
            unsafe {
                assert_eq!(
                    s3h_deck_group_apply(g, i, x.as_ptr(), gx.as_mut_ptr()),
                    S3hStatus::Ok
                )
            };
            let (mut re2, mut im2) = (0.0, 0.0);
            unsafe {
                assert_eq!(
                    s3h_basis_eval(b, k, gx.as_ptr(), &mut re2, &mut im2),
                    S3hStatus::Ok
                )
            };
            assert!(
                (re - re2).abs() < 1e-10 && (im - im2).abs() < 1e-10,
                "function {k}, element {i}"
            );
        }
    }

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { s3h_basis_to_json(b, &mut json) }, S3hStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["j"], 4);
    assert_eq!(v["functions"].as_array().unwrap().len(), n);

    let (mut re, mut im) = (0.0, 0.0);
    assert_eq!(
        unsafe { s3h_basis_eval(b, n, x.as_ptr(), &mut re, &mut im) },
        S3hStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { s3h_basis_new(S3H_MANIFOLD_C2, 21, &mut b) },
        S3hStatus::InvalidArgument
    );
    unsafe {
        s3h_basis_free(b);
        s3h_deck_group_free(g);
    }
}

#[test]
fn verify_reports_pass_and_failure() {
    let mut json = ptr::null_mut();
    let st = unsafe { s3h_verify(S3H_SUITE_GROUP, 2, 42, 1e-10, &mut json) };
    assert_eq!(st, S3hStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["passed"], true);

    let st = unsafe { s3h_verify(S3H_SUITE_BASIS, 2, 42, 1e-30, ptr::null_mut()) };
    assert_eq!(st, S3hStatus::VerificationFailed);
    assert_eq!(
        unsafe { s3h_verify(9, 2, 42, 1e-10, ptr::null_mut()) },
        S3hStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { s3h_verify(S3H_SUITE_GROUP, 2, 42, -1.0, ptr::null_mut()) },
        S3hStatus::InvalidArgument
    );
}
