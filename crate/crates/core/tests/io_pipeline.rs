//! Serialization pipelines and the OBJ layout contract.

use devsurf::developable::aumann_construct;
use devsurf::io::{parse_document, parse_patch, to_json, Document};
use devsurf::obj::export_obj;
use devsurf::verify::{developability_residual, penultimate_coplanarity};
use devsurf::{BezierCurve, DevelopablePatch, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn plane() -> DevelopablePatch {
    let c = BezierCurve::from_arrays(&[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]).unwrap();
    let d = BezierCurve::from_arrays(&[[0.0, 1.0, 0.0], [1.0, 1.0, 0.0]]).unwrap();
    DevelopablePatch::new(c, d).unwrap()
}

#[test]
fn plane_obj_matches_golden_file() {
    let golden = include_str!("data/plane_3x3.obj");
    assert_eq!(export_obj(&plane(), 3, 3).unwrap(), golden);
}

#[test]
fn plane_vertices_are_coplanar() {
    let obj = export_obj(&plane(), 7, 5).unwrap();
    for line in obj.lines().filter(|l| l.starts_with("v ")) {
        let z: f64 = line.split_whitespace().nth(3).unwrap().parse().unwrap();
        assert_eq!(z, 0.0);
    }
}

#[test]
fn vertex_order_is_u_fastest() {
    let c = BezierCurve::from_arrays(&[[0.0, 0.0, 0.0], [2.0, 0.0, 0.0]]).unwrap();
    let d = BezierCurve::from_arrays(&[[0.0, 0.0, 3.0], [2.0, 0.0, 3.0]]).unwrap();
    let p = DevelopablePatch::new(c, d).unwrap();
    let obj = export_obj(&p, 3, 2).unwrap();
    let v: Vec<&str> = obj.lines().filter(|l| l.starts_with("v ")).collect();
    assert_eq!(
        v,
        ["v 0 0 0", "v 1 0 0", "v 2 0 0", "v 0 0 3", "v 1 0 3", "v 2 0 3"]
    );
}

/// construct -> serialize -> parse -> check gives the same verdicts as
/// checking the in-memory patch.
#[test]
fn serialized_pipeline_is_verdict_identical() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = r.gen_range(2..=5);
        let pts: Vec<Vec3> = (0..=n)
            .map(|_| {
                Vec3::new(
                    r.gen_range(-5.0..5.0),
                    r.gen_range(-5.0..5.0),
                    r.gen_range(-5.0..5.0),
                )
            })
            .collect();
        let c = BezierCurve::new(pts).unwrap();
        let p = aumann_construct(
            &c,
            Vec3::new(r.gen(), r.gen(), r.gen()),
            r.gen_range(1.0..3.0),
            r.gen_range(-2.0..-0.5),
        )
        .unwrap();
        // half of the nets get a perturbation so both verdicts occur
        let p = if r.gen_bool(0.5) {
            let mut d = p.d().points().to_vec();
            d[1] += Vec3::new(0.0, 0.0, 0.01 * p.scale());
            DevelopablePatch::new(p.c().clone(), BezierCurve::new(d).unwrap()).unwrap()
        } else {
            p
        };
        let text = to_json(&Document::Patch(p.clone()));
        let q = parse_patch(&text).unwrap();
        assert_eq!(q, p, "float round trip must be exact");
        assert_eq!(
            developability_residual(&q, 65),
            developability_residual(&p, 65)
        );
        assert_eq!(
            penultimate_coplanarity(&q, 65),
            penultimate_coplanarity(&p, 65)
        );
    }
}

#[test]
fn report_documents_round_trip() {
    let p = aumann_construct(
        &BezierCurve::from_arrays(&[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [2.0, 1.0, 0.0]]).unwrap(),
        Vec3::new(0.0, 0.0, 1.0),
        2.0,
        0.5,
    )
    .unwrap();
    let report = developability_residual(&p, 33);
    let text = to_json(&Document::Report(report.clone()));
    assert_eq!(parse_document(&text).unwrap(), Document::Report(report));
}
