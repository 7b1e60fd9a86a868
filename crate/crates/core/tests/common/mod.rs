//! Seeded samplers shared by the integration tests.

#![allow(dead_code)]

use flatpants::LengthRadiusParams;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Side lengths in `[lo, hi]` satisfying the strict triangle inequality.
pub fn lengths(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> [f64; 3] {
    loop {
        let l: [f64; 3] = std::array::from_fn(|_| rng.random_range(lo..hi));
        if (0..3).all(|i| l[i] < l[(i + 1) % 3] + l[(i + 2) % 3]) {
            return l;
        }
    }
}

/// Valid parameters with every radius positive.
pub fn interior(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> LengthRadiusParams {
    let l = lengths(rng, lo, hi);
    let r: [f64; 3] = std::array::from_fn(|_| rng.random_range(lo..hi));
    LengthRadiusParams::from_values([l[0], l[1], l[2], r[0], r[1], r[2]]).unwrap()
}

/// Valid parameters with exactly one zero radius.
pub fn boundary(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> LengthRadiusParams {
    let l = lengths(rng, lo, hi);
    let zero = rng.random_range(0..3);
    let r: [f64; 3] = std::array::from_fn(|i| {
        if i == zero {
            0.0
        } else {
            rng.random_range(lo..hi)
        }
    });
    LengthRadiusParams::from_values([l[0], l[1], l[2], r[0], r[1], r[2]]).unwrap()
}

/// Either kind, with about a third of the samples on the boundary.
pub fn any(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> LengthRadiusParams {
    if rng.random_range(0..3) == 0 {
        boundary(rng, lo, hi)
    } else {
        interior(rng, lo, hi)
    }
}

/// Members of the distance-parameter set drawn from a coarse integer grid,
/// so that walls are hit often.
pub fn grid_member(rng: &mut ChaCha8Rng) -> [f64; 6] {
    loop {
        let x: [f64; 6] = std::array::from_fn(|_| rng.random_range(1..=6) as f64);
        if flatpants::teich_space::membership(&x).unwrap().is_member() {
            return x;
        }
    }
}

/// Members with continuous coordinates, optionally snapped onto a wall.
pub fn member(rng: &mut ChaCha8Rng) -> [f64; 6] {
    loop {
        let mut x: [f64; 6] = std::array::from_fn(|_| rng.random_range(0.1..10.0));
        if rng.random_range(0..4) == 0 {
            let i = rng.random_range(0..3);
            x[i] = x[(i + 1) % 3] + x[(i + 2) % 3];
        }
        if rng.random_range(0..4) == 0 {
            let j = rng.random_range(0..3);
            x[3 + j] = x[3 + (j + 1) % 3] + x[3 + (j + 2) % 3];
        }
        if flatpants::teich_space::membership(&x).unwrap().is_member() {
            return x;
        }
    }
}
