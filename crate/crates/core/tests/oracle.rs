//! Sampled-graph measurements against the declared parameters.

mod common;

use flatpants::flat_metric::{declared_boundary_distance, relative_error};
use flatpants::{Development, LengthRadiusParams, MetricGraph};

fn graph(p: &LengthRadiusParams) -> MetricGraph {
    MetricGraph::build_default(&Development::build(p).unwrap()).unwrap()
}

/// A shortest path between two boundary components is never shorter than
/// the route through the cone point, so some shortest path passes by it.
fn check_passes_by_singularity(p: &LengthRadiusParams) {
    let g = graph(p);
    let to_s = g.distances_to_boundaries().unwrap();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let direct = g.distance_between_boundaries(j, k).unwrap();
        let via_s = to_s[j] + to_s[k];
        assert!(direct <= via_s + 1e-9 * via_s.max(1.0), "{p:?}");
        assert!(
            relative_error(direct, via_s) <= 0.05,
            "{p:?}: {direct} vs {via_s}"
        );
        assert!(relative_error(direct, declared_boundary_distance(p, i)) <= 0.05);
    }
}

#[test]
fn boundary_geodesics_pass_by_the_singularity() {
    let mut rng = common::rng(11);
    for _ in 0..10 {
        check_passes_by_singularity(&common::interior(&mut rng, 0.5, 2.0));
    }
}

#[test]
fn degenerate_triangle_distances() {
    check_passes_by_singularity(
        &LengthRadiusParams::new([2.0, 1.0, 1.0], [1.0, 0.5, 0.75]).unwrap(),
    );
}

#[test]
fn boundary_singularity_distances() {
    let mut rng = common::rng(12);
    for _ in 0..5 {
        let p = common::boundary(&mut rng, 0.5, 2.0);
        let g = graph(&p);
        let r = p.radii();
        let d = g.distances_to_boundaries().unwrap();
        for i in 0..3 {
            if r[i] == 0.0 {
                assert_eq!(d[i], 0.0);
            } else {
                assert!(relative_error(d[i], r[i]) <= 0.05);
            }
        }
        check_passes_by_singularity(&p);
    }
}

#[test]
fn fixed_examples() {
    let p = LengthRadiusParams::new([1.0; 3], [1.0, 2.0, 3.0]).unwrap();
    assert!(relative_error(graph(&p).distance_to_boundary(0).unwrap(), 1.0) <= 0.05);
    let q = LengthRadiusParams::new([4.0; 3], [3.0, 2.0, 1.0]).unwrap();
    assert!(relative_error(graph(&q).distance_between_boundaries(0, 1).unwrap(), 5.0) <= 0.05);
}
