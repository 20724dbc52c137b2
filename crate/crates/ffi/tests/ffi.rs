use std::ffi::{CStr, CString};
use std::ptr;

use devsurf_ffi::*;

const EXAMPLE_C: [f64; 9] = [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 2.0, 1.0, 0.0];

fn curve(xyz: &[f64]) -> *mut DsCurve {
    let mut c = ptr::null_mut();
    let st = unsafe { ds_curve_new(xyz.as_ptr(), xyz.len() / 3, &mut c) };
    assert_eq!(st, DsStatus::Ok);
    c
}

fn example_patch() -> *mut DsPatch {
    let c = curve(&EXAMPLE_C);
    let mut p = ptr::null_mut();
    let st = unsafe { ds_aumann(c, [0.0, 0.0, 1.0].as_ptr(), 2.0, 0.5, &mut p) };
    assert_eq!(st, DsStatus::Ok);
    unsafe { ds_curve_free(c) };
    p
}

fn last_error() -> String {
    let p = ds_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { ds_string_free(s) };
    owned
}

#[test]
fn curve_round_trip() {
    let c = curve(&EXAMPLE_C);
    assert_eq!(unsafe { ds_curve_degree(c) }, 2);
    let mut out = [0.0; 3];
    assert_eq!(
        unsafe { ds_curve_eval(c, 0.5, out.as_mut_ptr()) },
        DsStatus::Ok
    );
    assert_eq!(out, [1.0, 0.25, 0.0]);
    unsafe { ds_curve_free(c) };
}

#[test]
fn aumann_patch_matches_the_worked_net() {
    let p = example_patch();
    let mut pt = [0.0; 3];
    assert_eq!(
        unsafe { ds_patch_eval(p, 1.0, 1.0, pt.as_mut_ptr()) },
        DsStatus::Ok
    );
    assert_eq!(pt, [2.0, 4.0, 1.0]);
    assert_eq!(
        unsafe { ds_patch_eval(p, 0.5, 1.0, pt.as_mut_ptr()) },
        DsStatus::Ok
    );
    // d(1/2) = (0,0,1)/4 + (4,0,-1)/2 + (2,4,1)/4
    assert_eq!(pt, [2.5, 1.0, 0.0]);

    let (mut residual, mut pass) = (f64::NAN, false);
    assert_eq!(
        unsafe { ds_patch_developability(p, 101, &mut residual, &mut pass) },
        DsStatus::Ok
    );
    assert!(pass && residual < 1e-12);

    let mut v = 0.0;
    assert_eq!(
        unsafe { ds_patch_edge_parameter(p, 0.8, &mut v) },
        DsStatus::Ok
    );
    assert!((v - 0.2).abs() < 1e-15);

    let mut class = DsSurfaceClass::Planar;
    assert_eq!(
        unsafe { ds_patch_classify(p, 1e-9, &mut class, ptr::null_mut()) },
        DsStatus::Ok
    );
    assert_eq!(class, DsSurfaceClass::Tangent);
    unsafe { ds_patch_free(p) };
}

#[test]
fn json_round_trip_and_parse_errors() {
    let p = example_patch();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ds_patch_to_json(p, &mut s) }, DsStatus::Ok);
    let text = take_string(s);
    assert!(text.contains("\"entity\": \"patch\""));

    let cs = CString::new(text.clone()).unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(
        unsafe { ds_patch_from_json(cs.as_ptr(), &mut q) },
        DsStatus::Ok
    );
    let mut s2 = ptr::null_mut();
    assert_eq!(unsafe { ds_patch_to_json(q, &mut s2) }, DsStatus::Ok);
    assert_eq!(take_string(s2), text);

    let bad =
        CString::new(r#"{"version":1,"entity":"patch","payload":{"c":{"degree":1}}}"#).unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { ds_patch_from_json(bad.as_ptr(), &mut r) },
        DsStatus::Parse
    );
    assert!(r.is_null());
    assert!(last_error().contains("payload.c"), "{}", last_error());
    unsafe {
        ds_patch_free(p);
        ds_patch_free(q);
    }
}

#[test]
fn operations_produce_new_handles() {
    let p = example_patch();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { ds_patch_elevate(p, 2, &mut e) }, DsStatus::Ok);
    assert_eq!(unsafe { ds_patch_degree(e) }, 4);

    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { ds_patch_restrict_v(p, 0.0, 0.5, &mut r) },
        DsStatus::Ok
    );
    let mut v = 0.0;
    // restricted certificate is (1.25, 0.5): v = (u - 0.5) / 0.75
    assert_eq!(
        unsafe { ds_patch_edge_parameter(r, 0.8, &mut v) },
        DsStatus::Ok
    );
    assert!((v - 0.4).abs() < 1e-15);

    let mut ru = ptr::null_mut();
    assert_eq!(
        unsafe { ds_patch_restrict_u(p, 0.3, 0.3, &mut ru) },
        DsStatus::InvalidArgument
    );
    assert!(ru.is_null());
    unsafe {
        ds_patch_free(e);
        ds_patch_free(r);
        ds_patch_free(p);
    }
}

#[test]
fn tangent_surface_from_twisted_cubic() {
    let r = curve(&[
        0.0,
        0.0,
        0.0,
        1.0 / 3.0,
        0.0,
        0.0,
        2.0 / 3.0,
        1.0 / 3.0,
        0.0,
        1.0,
        1.0,
        1.0,
    ]);
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { ds_from_edge(r, 0.0, 1.0 / 3.0, &mut p) },
        DsStatus::Ok
    );
    let mut pt = [0.0; 3];
    assert_eq!(
        unsafe { ds_patch_eval(p, 0.0, 1.0, pt.as_mut_ptr()) },
        DsStatus::Ok
    );
    assert!((pt[0] - 1.0 / 3.0).abs() < 1e-15 && pt[1].abs() < 1e-15 && pt[2].abs() < 1e-15);
    unsafe {
        ds_patch_free(p);
        ds_curve_free(r);
    }
}

#[test]
fn mesh_counts() {
    let p = example_patch();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ds_patch_mesh_obj(p, 33, 9, &mut s) }, DsStatus::Ok);
    let obj = take_string(s);
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 297);
    assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 256);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { ds_patch_mesh_obj(p, 1, 9, &mut s) },
        DsStatus::InvalidArgument
    );
    unsafe { ds_patch_free(p) };
}

#[test]
fn null_and_invalid_inputs_are_reported() {
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { ds_curve_new(ptr::null(), 3, &mut c) },
        DsStatus::NullPointer
    );
    assert!(last_error().contains("xyz"));
    let nan = [0.0, f64::NAN, 0.0];
    assert_eq!(
        unsafe { ds_curve_new(nan.as_ptr(), 1, &mut c) },
        DsStatus::InvalidArgument
    );
    let mut out = [0.0; 3];
    assert_eq!(
        unsafe { ds_curve_eval(ptr::null(), 0.5, out.as_mut_ptr()) },
        DsStatus::NullPointer
    );
    assert_eq!(unsafe { ds_curve_degree(ptr::null()) }, usize::MAX);

    let p = example_patch();
    assert_eq!(
        unsafe { ds_patch_eval(p, 0.5, 0.5, ptr::null_mut()) },
        DsStatus::NullPointer
    );
    unsafe {
        ds_patch_free(p);
        ds_patch_free(ptr::null_mut());
        ds_curve_free(ptr::null_mut());
        ds_string_free(ptr::null_mut());
    }
}

#[test]
fn patch_without_certificate_has_no_edge_parameter() {
    let json = CString::new(
        r#"{"version":1,"entity":"patch","payload":{
            "c":{"degree":1,"points":[[0,0,0],[1,0,0]]},
            "d":{"degree":1,"points":[[0,1,0],[1,1,0]]},"certificate":null}}"#,
    )
    .unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { ds_patch_from_json(json.as_ptr(), &mut p) },
        DsStatus::Ok
    );
    let mut v = 0.0;
    assert_eq!(
        unsafe { ds_patch_edge_parameter(p, 0.5, &mut v) },
        DsStatus::Geometry
    );
    let mut class = DsSurfaceClass::Tangent;
    assert_eq!(
        unsafe { ds_patch_classify(p, 1e-9, &mut class, ptr::null_mut()) },
        DsStatus::Ok
    );
    assert_eq!(class, DsSurfaceClass::Planar);
    unsafe { ds_patch_free(p) };
}

/// The generated header is valid C when a compiler is available.
#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/devsurf.h");
    let dir = tempfile_dir();
    let src = dir.join("probe.c");
    std::fs::write(
        &src,
        format!("#include \"{header}\"\nint main(void) {{ return DS_STATUS_OK; }}\n"),
    )
    .unwrap();
    match std::process::Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg(&src)
        .status()
    {
        Ok(status) => assert!(status.success(), "header failed to compile"),
        Err(_) => eprintln!("no C compiler; header check skipped"),
    }
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("devsurf-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
