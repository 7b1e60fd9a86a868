//! The two six-number parameter systems of a flat pair of pants with one
//! cone point, their admissibility constraints and the linear map between
//! them.
//!
//! Indices are 0-based in code. Boundary component `i` has length `l[i]`;
//! `r[i]` is the distance from the cone point to that component and `a[i]`
//! the distance between the two *other* components. Codes and messages
//! rendered for users are 1-based.
//!
//! The radius and distance systems are related by
//! `a[i] = r[i + 1] + r[i + 2]` (indices mod 3).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative tolerance for the equality tests that decide walls and
/// degeneracies.
pub const DEFAULT_REL_EPS: f64 = 1e-9;

#[inline]
pub(crate) fn next(i: usize) -> usize {
    (i + 1) % 3
}

#[inline]
pub(crate) fn after_next(i: usize) -> usize {
    (i + 2) % 3
}

/// Snapping tolerance. The absolute threshold is `rel * max(1, scale)` where
/// `scale` is the largest magnitude among the values being compared.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: DEFAULT_REL_EPS,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64) -> Result<Self> {
        if !rel.is_finite() {
            return Err(Error::NonFinite {
                name: "eps".into(),
                value: rel,
            });
        }
        if rel < 0.0 {
            return Err(Error::Negative {
                name: "eps".into(),
                value: rel,
            });
        }
        Ok(Tolerance { rel })
    }

    pub fn rel(&self) -> f64 {
        self.rel
    }

    pub fn absolute(&self, values: &[f64]) -> f64 {
        let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        self.rel * scale.max(1.0)
    }
}

/// A constraint that a parameter tuple fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    /// `l[i] > 0`.
    LengthNotPositive(usize),
    /// `l[i] <= l[i + 1] + l[i + 2]`.
    LengthTriangleInequality(usize),
    /// `r[i] + r[i + 1] > 0`.
    RadiusPairNotPositive(usize),
    /// `l[i] = l[i + 1] + l[i + 2]` requires `r[i] > 0`.
    DegenerateTriangleNeedsRadius(usize),
    /// One of the five numbered conditions on distance parameters:
    /// (1) `l[i] > 0`; (2) `l[i] <= l[i+1] + l[i+2]`; (3) `a[i] > 0`;
    /// (4) `a[i] <= a[i+1] + a[i+2]`; (5) `l[i] = l[i+1] + l[i+2]`
    /// requires `a[i] < a[i+1] + a[i+2]`.
    DistanceCondition { condition: u8, index: usize },
}

impl Violation {
    pub fn index(&self) -> usize {
        match *self {
            Violation::LengthNotPositive(i)
            | Violation::LengthTriangleInequality(i)
            | Violation::RadiusPairNotPositive(i)
            | Violation::DegenerateTriangleNeedsRadius(i)
            | Violation::DistanceCondition { index: i, .. } => i,
        }
    }

    /// Stable machine-readable name, 1-based.
    pub fn code(&self) -> String {
        match *self {
            Violation::LengthNotPositive(i) => format!("l{}-positive", i + 1),
            Violation::LengthTriangleInequality(i) => {
                format!("l{}-triangle-inequality", i + 1)
            }
            Violation::RadiusPairNotPositive(i) => {
                format!("r{}-r{}-sum-positive", i + 1, next(i) + 1)
            }
            Violation::DegenerateTriangleNeedsRadius(i) => {
                format!("degenerate-triangle-requires-r{}-positive", i + 1)
            }
            Violation::DistanceCondition { condition, .. } => format!("condition-{condition}"),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = {
            let i = self.index();
            (i + 1, next(i) + 1, after_next(i) + 1)
        };
        match *self {
            Violation::LengthNotPositive(_) => write!(f, "l{i} must be positive"),
            Violation::LengthTriangleInequality(_) => write!(f, "l{i} <= l{j} + l{k} fails"),
            Violation::RadiusPairNotPositive(_) => write!(f, "r{i} + r{j} must be positive"),
            Violation::DegenerateTriangleNeedsRadius(_) => {
                write!(f, "l{i} = l{j} + l{k}, so r{i} must be positive")
            }
            Violation::DistanceCondition { condition, .. } => match condition {
                1 => write!(f, "l{i} must be positive"),
                2 => write!(f, "l{i} <= l{j} + l{k} fails"),
                3 => write!(f, "a{i} must be positive"),
                4 => write!(f, "a{i} <= a{j} + a{k} fails"),
                _ => write!(
                    f,
                    "l{i} = l{j} + l{k}, so a{i} < a{j} + a{k} must hold strictly"
                ),
            },
        }
    }
}

/// Outcome of a validation: every violated constraint, in a fixed order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Validity {
    pub violations: Vec<Violation>,
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.violations.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(self.violations))
        }
    }
}

fn check_inputs(names: [&str; 6], values: &[f64; 6]) -> Result<()> {
    for (name, &value) in names.iter().zip(values) {
        if !value.is_finite() {
            return Err(Error::NonFinite {
                name: (*name).into(),
                value,
            });
        }
    }
    for (name, &value) in names.iter().zip(values) {
        if value < 0.0 {
            return Err(Error::Negative {
                name: (*name).into(),
                value,
            });
        }
    }
    Ok(())
}

/// Index `i` with `l[i] = l[i+1] + l[i+2]` within `eps`, if any.
pub(crate) fn length_wall(l: &[f64; 3], eps: f64) -> Option<usize> {
    (0..3).find(|&i| (l[i] - l[next(i)] - l[after_next(i)]).abs() <= eps)
}

pub(crate) fn length_walls(l: &[f64; 3], eps: f64) -> Vec<usize> {
    (0..3)
        .filter(|&i| (l[i] - l[next(i)] - l[after_next(i)]).abs() <= eps)
        .collect()
}

/// Conditions 1)-5) on raw `(l, a)` values. Shared by [`DistanceParams`]
/// and the membership test of the parameter set.
pub(crate) fn distance_violations(l: &[f64; 3], a: &[f64; 3], eps: f64) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push =
        |condition: u8, index: usize| out.push(Violation::DistanceCondition { condition, index });
    for i in 0..3 {
        if l[i] <= eps {
            push(1, i);
        }
    }
    for i in 0..3 {
        if l[i] > l[next(i)] + l[after_next(i)] + eps {
            push(2, i);
        }
    }
    for i in 0..3 {
        if a[i] <= eps {
            push(3, i);
        }
    }
    for i in 0..3 {
        if a[i] > a[next(i)] + a[after_next(i)] + eps {
            push(4, i);
        }
    }
    for i in 0..3 {
        let on_wall = (l[i] - l[next(i)] - l[after_next(i)]).abs() <= eps;
        if on_wall && a[i] >= a[next(i)] + a[after_next(i)] - eps {
            push(5, i);
        }
    }
    out
}

/// Boundary lengths `l` and cone-point-to-boundary distances `r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LengthRadiusParams {
    lengths: [f64; 3],
    radii: [f64; 3],
}

impl LengthRadiusParams {
    /// Rejects non-finite and negative values. Admissibility is checked
    /// separately by [`validate`](Self::validate).
    pub fn new(lengths: [f64; 3], radii: [f64; 3]) -> Result<Self> {
        let values = [
            lengths[0], lengths[1], lengths[2], radii[0], radii[1], radii[2],
        ];
        check_inputs(["l1", "l2", "l3", "r1", "r2", "r3"], &values)?;
        Ok(LengthRadiusParams { lengths, radii })
    }

    /// Values in the order `(l1, l2, l3, r1, r2, r3)`.
    pub fn from_values(v: [f64; 6]) -> Result<Self> {
        Self::new([v[0], v[1], v[2]], [v[3], v[4], v[5]])
    }

    pub fn values(&self) -> [f64; 6] {
        let (l, r) = (self.lengths, self.radii);
        [l[0], l[1], l[2], r[0], r[1], r[2]]
    }

    pub fn lengths(&self) -> [f64; 3] {
        self.lengths
    }

    pub fn radii(&self) -> [f64; 3] {
        self.radii
    }

    pub fn eps(&self, tol: Tolerance) -> f64 {
        tol.absolute(&self.values())
    }

    /// Relabel boundary components so that new component `i` is old
    /// component `i + k`.
    pub fn rotated(&self, k: usize) -> Self {
        let rot = |x: [f64; 3]| [x[k % 3], x[(k + 1) % 3], x[(k + 2) % 3]];
        LengthRadiusParams {
            lengths: rot(self.lengths),
            radii: rot(self.radii),
        }
    }

    pub fn validate(&self) -> Validity {
        self.validate_with(Tolerance::default())
    }

    pub fn validate_with(&self, tol: Tolerance) -> Validity {
        let eps = self.eps(tol);
        let (l, r) = (&self.lengths, &self.radii);
        let mut violations = Vec::new();
        for i in 0..3 {
            if l[i] <= eps {
                violations.push(Violation::LengthNotPositive(i));
            }
        }
        for i in 0..3 {
            if l[i] > l[next(i)] + l[after_next(i)] + eps {
                violations.push(Violation::LengthTriangleInequality(i));
            }
        }
        for i in 0..3 {
            if r[i] + r[next(i)] <= eps {
                violations.push(Violation::RadiusPairNotPositive(i));
            }
        }
        for i in length_walls(l, eps) {
            if r[i] <= eps {
                violations.push(Violation::DegenerateTriangleNeedsRadius(i));
            }
        }
        Validity { violations }
    }

    pub fn classify(&self) -> DegeneracyReport {
        self.classify_with(Tolerance::default())
    }

    /// Total on any admissible-or-not input; explains *why* a tuple is
    /// degenerate rather than whether it is valid.
    pub fn classify_with(&self, tol: Tolerance) -> DegeneracyReport {
        let eps = self.eps(tol);
        let degenerate_triangle = length_wall(&self.lengths, eps);
        let degenerate_rectangles: Vec<usize> = (0..3).filter(|&i| self.radii[i] <= eps).collect();
        let pants_degenerate = degenerate_rectangles.len() >= 2
            || degenerate_triangle.is_some_and(|i| {
                degenerate_rectangles.contains(&next(i))
                    && degenerate_rectangles.contains(&after_next(i))
            });
        let singularity = match degenerate_rectangles.as_slice() {
            [] => SingularityLocation::Interior,
            [i] => SingularityLocation::Boundary(*i),
            _ => SingularityLocation::Pinched,
        };
        DegeneracyReport {
            degenerate_triangle,
            degenerate_rectangles,
            pants_degenerate,
            singularity,
        }
    }

    pub fn to_distance(&self) -> Result<DistanceParams> {
        self.to_distance_with(Tolerance::default())
    }

    pub fn to_distance_with(&self, tol: Tolerance) -> Result<DistanceParams> {
        self.validate_with(tol).into_result()?;
        let r = &self.radii;
        let a = std::array::from_fn(|i| r[next(i)] + r[after_next(i)]);
        Ok(DistanceParams {
            lengths: self.lengths,
            distances: a,
        })
    }
}

/// Boundary lengths `l` and boundary-to-boundary distances `a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceParams {
    lengths: [f64; 3],
    distances: [f64; 3],
}

impl DistanceParams {
    pub fn new(lengths: [f64; 3], distances: [f64; 3]) -> Result<Self> {
        let values = [
            lengths[0],
            lengths[1],
            lengths[2],
            distances[0],
            distances[1],
            distances[2],
        ];
        check_inputs(["l1", "l2", "l3", "a1", "a2", "a3"], &values)?;
        Ok(DistanceParams { lengths, distances })
    }

    /// Values in the order `(l1, l2, l3, a1, a2, a3)`.
    pub fn from_values(v: [f64; 6]) -> Result<Self> {
        Self::new([v[0], v[1], v[2]], [v[3], v[4], v[5]])
    }

    pub fn values(&self) -> [f64; 6] {
        let (l, a) = (self.lengths, self.distances);
        [l[0], l[1], l[2], a[0], a[1], a[2]]
    }

    pub fn lengths(&self) -> [f64; 3] {
        self.lengths
    }

    pub fn distances(&self) -> [f64; 3] {
        self.distances
    }

    pub fn validate(&self) -> Validity {
        self.validate_with(Tolerance::default())
    }

    pub fn validate_with(&self, tol: Tolerance) -> Validity {
        let eps = tol.absolute(&self.values());
        Validity {
            violations: distance_violations(&self.lengths, &self.distances, eps),
        }
    }

    pub fn to_length_radius(&self) -> Result<LengthRadiusParams> {
        self.to_length_radius_with(Tolerance::default())
    }

    /// Solves `a[i] = r[i+1] + r[i+2]` for `r`. Results within tolerance of
    /// zero on the negative side are clamped to zero.
    pub fn to_length_radius_with(&self, tol: Tolerance) -> Result<LengthRadiusParams> {
        self.validate_with(tol).into_result()?;
        let a = &self.distances;
        let radii =
            std::array::from_fn(|i| ((a[next(i)] + a[after_next(i)] - a[i]) / 2.0).max(0.0));
        Ok(LengthRadiusParams {
            lengths: self.lengths,
            radii,
        })
    }
}

/// Where the cone point sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityLocation {
    Interior,
    Boundary(usize),
    /// Two or more radii vanish: the cone point would lie on several
    /// boundary components at once, which no pair of pants allows.
    Pinched,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport {
    /// Witness `i` of `l[i] = l[i+1] + l[i+2]`.
    pub degenerate_triangle: Option<usize>,
    /// Indices with `r[i] = 0`, ascending.
    pub degenerate_rectangles: Vec<usize>,
    pub pants_degenerate: bool,
    pub singularity: SingularityLocation,
}

impl DegeneracyReport {
    /// Human description of a degenerate configuration.
    pub fn describe(&self) -> Option<String> {
        if !self.pants_degenerate {
            return None;
        }
        let n = self.degenerate_rectangles.len();
        Some(match (self.degenerate_triangle, n) {
            (_, 3) => "three rectangles degenerate".to_string(),
            (Some(_), _) => "the triangle and two rectangles degenerate".to_string(),
            _ => "two rectangles degenerate".to_string(),
        })
    }
}
