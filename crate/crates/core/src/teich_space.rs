//! The set of admissible distance-parameter 6-tuples
//! `(l1, l2, l3, a1, a2, a3)`: membership, wall strata, and the
//! straight-line witnesses of convexity and contractibility.

use crate::error::{Error, Result};
use crate::pants_params::{
    after_next, distance_violations, length_walls, next, Tolerance, Violation,
};

/// Base point of the straight-line contraction.
pub const BASEPOINT: [f64; 6] = [1.0, 1.0, 1.0, 2.0, 2.0, 2.0];

/// Walls a boundary point lies on. Indices are 0-based.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stratum {
    /// `i` with `l[i] = l[i+1] + l[i+2]`.
    pub l_walls: Vec<usize>,
    /// `j` with `a[j] = a[j+1] + a[j+2]`.
    pub a_walls: Vec<usize>,
}

impl Stratum {
    pub fn is_empty(&self) -> bool {
        self.l_walls.is_empty() && self.a_walls.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    Interior,
    Boundary(Stratum),
    Outside(Vec<Violation>),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        !matches!(self, Membership::Outside(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Membership::Interior => "interior",
            Membership::Boundary(_) => "boundary",
            Membership::Outside(_) => "outside",
        }
    }
}

fn split(x: &[f64; 6]) -> ([f64; 3], [f64; 3]) {
    ([x[0], x[1], x[2]], [x[3], x[4], x[5]])
}

fn check_finite(x: &[f64; 6]) -> Result<()> {
    const NAMES: [&str; 6] = ["l1", "l2", "l3", "a1", "a2", "a3"];
    match x.iter().position(|v| !v.is_finite()) {
        Some(k) => Err(Error::NonFinite {
            name: NAMES[k].into(),
            value: x[k],
        }),
        None => Ok(()),
    }
}

/// Walls of `x` within tolerance, whether or not `x` is a member.
pub fn stratum(x: &[f64; 6], tol: Tolerance) -> Result<Stratum> {
    check_finite(x)?;
    let eps = tol.absolute(x);
    let (l, a) = split(x);
    Ok(Stratum {
        l_walls: length_walls(&l, eps),
        a_walls: length_walls(&a, eps),
    })
}

pub fn membership(x: &[f64; 6]) -> Result<Membership> {
    membership_with(x, Tolerance::default())
}

pub fn membership_with(x: &[f64; 6], tol: Tolerance) -> Result<Membership> {
    check_finite(x)?;
    let eps = tol.absolute(x);
    let (l, a) = split(x);
    let violations = distance_violations(&l, &a, eps);
    if !violations.is_empty() {
        return Ok(Membership::Outside(violations));
    }
    let s = stratum(x, tol)?;
    Ok(if s.is_empty() {
        Membership::Interior
    } else {
        Membership::Boundary(s)
    })
}

/// A point of the parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TeichPoint {
    coords: [f64; 6],
}

impl TeichPoint {
    pub fn new(coords: [f64; 6]) -> Result<Self> {
        Self::new_with(coords, Tolerance::default())
    }

    pub fn new_with(coords: [f64; 6], tol: Tolerance) -> Result<Self> {
        match membership_with(&coords, tol)? {
            Membership::Outside(v) => Err(Error::NotMember(v)),
            _ => Ok(TeichPoint { coords }),
        }
    }

    pub fn basepoint() -> Self {
        TeichPoint { coords: BASEPOINT }
    }

    pub fn coords(&self) -> [f64; 6] {
        self.coords
    }

    pub fn lerp(&self, other: &TeichPoint, t: f64) -> [f64; 6] {
        std::array::from_fn(|k| (1.0 - t) * self.coords[k] + t * other.coords[k])
    }

    pub fn scaled(&self, s: f64) -> [f64; 6] {
        self.coords.map(|v| v * s)
    }
}

/// Whether `n` evenly spaced points of the segment `[x, y]` (endpoints
/// included) are all members.
pub fn segment_in_b(x: &TeichPoint, y: &TeichPoint, n: usize) -> Result<bool> {
    segment_in_b_with(x, y, n, Tolerance::default())
}

pub fn segment_in_b_with(x: &TeichPoint, y: &TeichPoint, n: usize, tol: Tolerance) -> Result<bool> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "sample count",
            range: "[1, inf)",
            value: 0.0,
        });
    }
    for k in 0..n {
        let t = if n == 1 {
            0.0
        } else {
            k as f64 / (n - 1) as f64
        };
        if !membership_with(&x.lerp(y, t), tol)?.is_member() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Straight-line homotopy `(1 - t) x + t base`.
pub fn contract(x: &TeichPoint, t: f64, base: &TeichPoint) -> Result<TeichPoint> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange {
            name: "t",
            range: "[0, 1]",
            value: t,
        });
    }
    TeichPoint::new(x.lerp(base, t))
}

/// An explicit point on the intersection of the `l`-wall `i` and the
/// `a`-wall `j`; `None` when `i == j`, where the intersection is empty.
pub fn wall_intersection_point(i: usize, j: usize) -> Option<TeichPoint> {
    if i == j || i > 2 || j > 2 {
        return None;
    }
    let mut c = [0.0; 6];
    c[i] = 2.0;
    c[next(i)] = 1.0;
    c[after_next(i)] = 1.0;
    c[3 + j] = 3.0;
    c[3 + next(j)] = 1.0;
    c[3 + after_next(j)] = 2.0;
    TeichPoint::new(c).ok()
}
