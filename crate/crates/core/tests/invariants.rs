//! Property tests for the invariants of every module.

use std::f64::consts::PI;

use proptest::prelude::*;

use flatpants::flat_metric::{structure_distance, structure_distance_with, StructureOptions};
use flatpants::geometry::angle_at;
use flatpants::surface_assembly::{
    decomposition_feasible, double, gauss_bonnet_bounded, gauss_bonnet_closed, glue, Feasibility,
    GluingSpec, Slot, SurfaceSpec,
};
use flatpants::teich_space::{membership, stratum, Membership};
use flatpants::{Development, DistanceParams, LengthRadiusParams, SingularityLocation, Tolerance};

fn lengths() -> impl Strategy<Value = [f64; 3]> {
    [0.1..10.0f64, 0.1..10.0f64, 0.1..10.0f64].prop_filter("strict triangle inequality", |l| {
        (0..3).all(|i| l[i] < l[(i + 1) % 3] + l[(i + 2) % 3])
    })
}

fn interior_lr() -> impl Strategy<Value = LengthRadiusParams> {
    (lengths(), [0.1..10.0f64, 0.1..10.0f64, 0.1..10.0f64])
        .prop_map(|(l, r)| LengthRadiusParams::new(l, r).unwrap())
}

fn boundary_lr() -> impl Strategy<Value = LengthRadiusParams> {
    (lengths(), [0.1..10.0f64, 0.1..10.0f64], 0..3usize).prop_map(|(l, r2, zero)| {
        let mut r = [0.0; 3];
        r[(zero + 1) % 3] = r2[0];
        r[(zero + 2) % 3] = r2[1];
        LengthRadiusParams::new(l, r).unwrap()
    })
}

/// Valid parameters of either kind, including degenerate triangles.
fn valid_lr() -> impl Strategy<Value = LengthRadiusParams> {
    prop_oneof![
        3 => interior_lr(),
        1 => boundary_lr(),
        1 => (0.1..5.0f64, 0.1..5.0f64, 0..3usize, [0.1..10.0f64, 0.1..10.0f64, 0.1..10.0f64])
            .prop_map(|(x, y, i, r)| {
                let mut l = [0.0; 3];
                l[i] = x + y;
                l[(i + 1) % 3] = x;
                l[(i + 2) % 3] = y;
                LengthRadiusParams::new(l, r).unwrap()
            }),
    ]
}

/// Small integers, so that equalities between sums occur often.
fn grid6() -> impl Strategy<Value = [f64; 6]> {
    [0u8..6, 0..6, 0..6, 0..6, 0..6, 0..6].prop_map(|v| v.map(f64::from))
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn pants_graph_cone_free() -> SurfaceSpec {
    SurfaceSpec::new(0, 3, vec![], vec![]).unwrap()
}

proptest! {
    #![proptest_config(config(512))]

    #[test]
    fn lr_round_trip(p in valid_lr()) {
        let back = p.to_distance().unwrap().to_length_radius().unwrap();
        let scale = p.values().iter().cloned().fold(1.0, f64::max);
        for (x, y) in p.values().iter().zip(back.values()) {
            prop_assert!((x - y).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn la_round_trip(p in valid_lr()) {
        let la = p.to_distance().unwrap();
        let again = la.to_length_radius().unwrap().to_distance().unwrap();
        let scale = la.values().iter().cloned().fold(1.0, f64::max);
        for (x, y) in la.values().iter().zip(again.values()) {
            prop_assert!((x - y).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn conversion_preserves_validity(p in valid_lr()) {
        let la = p.to_distance().unwrap();
        prop_assert!(la.validate().is_valid());
        prop_assert!(la.to_length_radius().unwrap().validate().is_valid());
    }

    /// On non-negative radii, lr validity is exactly validity of the image.
    #[test]
    fn lr_and_la_conditions_agree(v in grid6()) {
        let p = LengthRadiusParams::from_values(v).unwrap();
        let r = p.radii();
        let a: [f64; 3] = std::array::from_fn(|i| r[(i + 1) % 3] + r[(i + 2) % 3]);
        let la = DistanceParams::new(p.lengths(), a).unwrap();
        prop_assert_eq!(p.validate().is_valid(), la.validate().is_valid());
    }

    /// On distance tuples, validity is exactly "radii non-negative and valid".
    #[test]
    fn la_conditions_match_radius_solution(v in grid6()) {
        let la = DistanceParams::from_values(v).unwrap();
        let a = la.distances();
        let r: [f64; 3] =
            std::array::from_fn(|i| (a[(i + 1) % 3] + a[(i + 2) % 3] - a[i]) / 2.0);
        let expected = r.iter().all(|&x| x >= 0.0)
            && LengthRadiusParams::new(la.lengths(), r).unwrap().validate().is_valid();
        prop_assert_eq!(la.validate().is_valid(), expected);
    }

    #[test]
    fn at_most_one_radius_vanishes(v in grid6()) {
        let la = DistanceParams::from_values(v).unwrap();
        if la.validate().is_valid() {
            let r = la.to_length_radius().unwrap().radii();
            prop_assert!(r.iter().filter(|&&x| x == 0.0).count() <= 1);
        }
    }

    #[test]
    fn classification_follows_rotation(v in grid6(), k in 0..3usize) {
        let p = LengthRadiusParams::from_values(v).unwrap();
        let (a, b) = (p.classify(), p.rotated(k).classify());
        prop_assert_eq!(a.pants_degenerate, b.pants_degenerate);
        prop_assert_eq!(a.degenerate_triangle.is_some(), b.degenerate_triangle.is_some());
        prop_assert_eq!(a.degenerate_rectangles.len(), b.degenerate_rectangles.len());
        let kind = |s: SingularityLocation| std::mem::discriminant(&s);
        prop_assert_eq!(kind(a.singularity), kind(b.singularity));
        prop_assert_eq!(p.validate().is_valid(), p.rotated(k).validate().is_valid());
    }

    #[test]
    fn cone_angle_and_curvature(p in valid_lr()) {
        let c = Development::build(&p).unwrap().cone_point();
        let zeros = p.radii().iter().filter(|&&r| r == 0.0).count();
        let expected = if zeros == 0 { 4.0 * PI } else { 3.0 * PI };
        prop_assert!((c.total_angle() - expected).abs() <= 1e-9);
        prop_assert!((c.curvature() + 2.0 * PI).abs() <= 1e-9);
    }

    #[test]
    fn development_reproduces_parameters(p in valid_lr()) {
        let d = Development::build(&p).unwrap();
        let (l, r) = (p.lengths(), p.radii());
        let t = d.triangle();
        for i in 0..3 {
            let side = t[(i + 1) % 3].distance(t[(i + 2) % 3]);
            prop_assert!((side - l[i]).abs() <= 1e-12 * l[i].max(1.0));
            prop_assert!((d.boundary_trace(i).length() - l[i]).abs() <= 1e-12 * l[i].max(1.0));
            prop_assert_eq!(d.rectangle(i).height, r[i]);
        }
        for id in d.identifications() {
            prop_assert!((id.length() - r[id.rectangle]).abs() <= 1e-12 * r[id.rectangle].max(1.0));
        }
        // Faces tile the development without overlap.
        let expected_area = flatpants::geometry::triangle_area(l[0], l[1], l[2])
            + (0..3).map(|i| l[i] * r[i]).sum::<f64>();
        prop_assert!((d.face_area() - expected_area).abs() <= 1e-9 * expected_area.max(1.0));
    }

    #[test]
    fn triangle_angles_match_law_of_cosines(p in interior_lr()) {
        let d = Development::build(&p).unwrap();
        let l = p.lengths();
        let angles = d.triangle_angles();
        for i in 0..3 {
            let (a, b) = (l[(i + 1) % 3], l[(i + 2) % 3]);
            let cos = ((a * a + b * b - l[i] * l[i]) / (2.0 * a * b)).clamp(-1.0, 1.0);
            prop_assert!((angles[i] - cos.acos()).abs() <= 1e-6);
        }
    }

    #[test]
    fn convexity(x in grid6(), y in grid6(), t in 0.0..=1.0f64) {
        if membership(&x).unwrap().is_member() && membership(&y).unwrap().is_member() {
            let z: [f64; 6] = std::array::from_fn(|k| (1.0 - t) * x[k] + t * y[k]);
            prop_assert!(membership(&z).unwrap().is_member());
        }
    }

    #[test]
    fn cone_property(x in grid6(), s in 0.01..100.0f64) {
        let m = membership(&x).unwrap();
        prop_assert_eq!(m.is_member(), membership(&x.map(|v| v * s)).unwrap().is_member());
    }

    #[test]
    fn length_walls_disjoint(x in grid6()) {
        if membership(&x).unwrap().is_member() {
            prop_assert!(stratum(&x, Tolerance::default()).unwrap().l_walls.len() <= 1);
            prop_assert!(stratum(&x, Tolerance::default()).unwrap().a_walls.len() <= 1);
        }
    }

    #[test]
    fn membership_agrees_with_distance_validation(x in grid6()) {
        let la = DistanceParams::from_values(x).unwrap();
        let member = membership(&x).unwrap();
        prop_assert_eq!(member.is_member(), la.validate().is_valid());
        if let Membership::Interior = member {
            prop_assert!(stratum(&x, Tolerance::default()).unwrap().l_walls.is_empty());
        }
    }

    #[test]
    fn double_halves_residual(
        g in 0u32..4,
        b in 1u32..5,
        interior in proptest::collection::vec(0.1..20.0f64, 0..4),
        boundary in proptest::collection::vec(0.1..3.0f64, 0..3),
    ) {
        let s = SurfaceSpec::new(g, b, interior, boundary).unwrap();
        let closed = s.double().unwrap();
        prop_assert_eq!(closed.genus(), 2 * g + b - 1);
        prop_assert_eq!(s.euler_characteristic(), 2 - 2 * g as i64 - b as i64);
        prop_assert_eq!(closed.euler_characteristic(), 2 * s.euler_characteristic());
        let lhs = gauss_bonnet_closed(&closed).unwrap();
        let rhs = 2.0 * gauss_bonnet_bounded(&s);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0));
    }

    #[test]
    fn doubled_pants_are_consistent(p in valid_lr()) {
        let s = double(&p).unwrap();
        prop_assert_eq!(s.genus(), 2);
        prop_assert!(gauss_bonnet_closed(&s).unwrap().abs() < 1e-9);
    }

    #[test]
    fn feasibility_rule(g in 2u32..200, n in 1u32..200) {
        let v = decomposition_feasible(g, n).unwrap();
        let infeasible = 2 * g as u64 - 2 > 2 * n as u64;
        prop_assert_eq!(v.verdict == Feasibility::Infeasible, infeasible);
        prop_assert_eq!(v.pants_needed, 2 * g as u64 - 2);
    }
}

/// Random connected cubic multigraph on `v` pants of equal boundary length.
fn random_gluing(v: usize, perm: &[usize]) -> Option<GluingSpec> {
    let slots: Vec<Slot> = (0..3 * v)
        .map(|k| Slot {
            pants: k / 3,
            boundary: k % 3,
        })
        .collect();
    let order: Vec<Slot> = perm.iter().map(|&k| slots[k]).collect();
    let pairings: Vec<(Slot, Slot)> = order.chunks(2).map(|c| (c[0], c[1])).collect();
    let pants = vec![LengthRadiusParams::new([1.0; 3], [0.5, 0.75, 1.0]).unwrap(); v];
    let spec = GluingSpec { pants, pairings };
    glue(&spec).ok().map(|_| spec)
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn glued_genus(half in 1usize..=3, perm in Just((0..18).collect::<Vec<usize>>()).prop_shuffle()) {
        let v = 2 * half;
        let perm: Vec<usize> = perm.into_iter().filter(|&k| k < 3 * v).collect();
        if let Some(spec) = random_gluing(v, &perm) {
            let audit = glue(&spec).unwrap();
            prop_assert_eq!(audit.surface.genus() as usize, v / 2 + 1);
            prop_assert!(audit.residual.abs() < 1e-9);
            prop_assert_eq!(audit.cones.len(), 2 * audit.surface.genus() as usize - 2);
        }
    }
}

#[test]
fn cone_free_pants_cannot_be_flat() {
    assert_eq!(gauss_bonnet_bounded(&pants_graph_cone_free()), 2.0 * PI);
}

#[test]
fn degenerate_triangle_angle_tends_to_straight() {
    let mut last = 0.0;
    for k in 1..=12 {
        let gap = 10f64.powi(-k);
        let p = LengthRadiusParams::new([2.0 - gap, 1.0, 1.0], [1.0, 1.0, 1.0]).unwrap();
        let t = Development::build(&p).unwrap().triangle();
        let angle = angle_at(t[0], t[1], t[2]);
        assert!(angle > last, "angle must increase towards pi");
        assert!(angle <= PI);
        last = angle;
    }
    assert!((PI - last).abs() < 1e-5);
    let flat = Development::build(&LengthRadiusParams::new([2.0, 1.0, 1.0], [1.0; 3]).unwrap());
    assert!((flat.unwrap().triangle_angles()[0] - PI).abs() < 1e-12);
}

proptest! {
    #![proptest_config(config(6))]

    #[test]
    fn structure_distance_identity_and_symmetry(
        l in [0.8..1.6f64, 0.8..1.6f64, 0.8..1.6f64],
        r in [0.5..1.5f64, 0.5..1.5f64, 0.5..1.5f64],
        dr in [0.0..0.3f64, 0.0..0.3f64, 0.0..0.3f64],
        seed in 0u64..1000,
    ) {
        let p = LengthRadiusParams::new(l, r).unwrap();
        let q = LengthRadiusParams::new(l, std::array::from_fn(|i| r[i] + dr[i])).unwrap();
        prop_assert_eq!(structure_distance(&p, &p, 16, seed).unwrap(), 0.0);
        let pq = structure_distance(&p, &q, 16, seed).unwrap();
        let qp = structure_distance(&q, &p, 16, seed).unwrap();
        prop_assert!((pq - qp).abs() <= 1e-12);
        prop_assert!(pq <= 2.0 * dr.iter().sum::<f64>() + 1e-9, "{} vs {:?}", pq, dr);
    }
}

#[test]
fn structure_distance_separates_distinct_parameters() {
    let p = LengthRadiusParams::new([1.0; 3], [1.0; 3]).unwrap();
    let q = LengthRadiusParams::new([1.0; 3], [1.0, 1.0, 1.1]).unwrap();
    let opts = StructureOptions {
        n_pairs: 256,
        ..StructureOptions::default()
    };
    let d = structure_distance_with(&p, &q, &opts).unwrap();
    assert!(d > 0.0 && d <= 0.2, "{d}");
}
