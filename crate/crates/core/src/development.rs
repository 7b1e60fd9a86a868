//! Planar development of a flat pair of pants: a triangle `T` whose side
//! `i` (opposite vertex `s[i]`) has length `l[i]`, with a rectangle `R[i]`
//! of height `r[i]` erected outward on that side.
//!
//! The two vertical sides of `R[i]` are the two copies of the cut segment
//! from the cone point to boundary component `c[i]`; gluing them turns
//! `R[i]` into a flat cylinder whose far edge is `c[i]`. All three triangle
//! vertices become the single cone point.
//!
//! Placement is canonical: `s[1]` at the origin, `s[2]` at `(l[0], 0)` and
//! `s[0]` in the closed upper half-plane, so `(s[0], s[1], s[2])` is
//! counter-clockwise whenever the triangle is non-degenerate.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{angle_at, polygon_area, triangle_area, Point2, Segment};
use crate::pants_params::{
    after_next, next, DegeneracyReport, LengthRadiusParams, SingularityLocation, Tolerance,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConeLocation {
    Interior,
    Boundary(usize),
}

/// A cone point with total angle `theta` and curvature `2pi - theta`
/// (interior) or `pi - theta` (boundary).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConePoint {
    location: ConeLocation,
    total_angle: f64,
    curvature: f64,
}

impl ConePoint {
    pub fn new(location: ConeLocation, total_angle: f64) -> Result<Self> {
        if !total_angle.is_finite() || total_angle <= 0.0 {
            return Err(Error::OutOfRange {
                name: "total angle",
                range: "(0, inf)",
                value: total_angle,
            });
        }
        let flat = match location {
            ConeLocation::Interior => 2.0 * PI,
            ConeLocation::Boundary(_) => PI,
        };
        if (total_angle - flat).abs() <= 1e-12 {
            return Err(Error::Surface(format!(
                "a total angle of {total_angle} is not a cone point at this location"
            )));
        }
        Ok(ConePoint {
            location,
            total_angle,
            curvature: flat - total_angle,
        })
    }

    pub fn location(&self) -> ConeLocation {
        self.location
    }

    pub fn total_angle(&self) -> f64 {
        self.total_angle
    }

    pub fn curvature(&self) -> f64 {
        self.curvature
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceKind {
    Triangle,
    Rectangle(usize),
}

/// A face as a counter-clockwise loop of corners.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Face {
    pub kind: FaceKind,
    pub corners: Vec<Point2>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rectangle {
    pub index: usize,
    /// Start of the shared triangle side, `s[i+1]`.
    pub base_start: Point2,
    /// End of the shared triangle side, `s[i+2]`.
    pub base_end: Point2,
    /// Unit normal pointing away from the triangle.
    pub normal: Point2,
    pub height: f64,
    pub collapsed: bool,
}

impl Rectangle {
    pub fn top_start(&self) -> Point2 {
        self.base_start + self.normal * self.height
    }

    pub fn top_end(&self) -> Point2 {
        self.base_end + self.normal * self.height
    }

    pub fn length(&self) -> f64 {
        self.base_start.distance(self.base_end)
    }

    /// Counter-clockwise corners: `base_end, base_start, top_start, top_end`.
    pub fn corners(&self) -> [Point2; 4] {
        [
            self.base_end,
            self.base_start,
            self.top_start(),
            self.top_end(),
        ]
    }

    /// Point at fraction `u` along the base and `v` up the height.
    pub fn point(&self, u: f64, v: f64) -> Point2 {
        self.base_start.lerp(self.base_end, u) + self.normal * (self.height * v)
    }
}

/// The two copies of one cut segment. Points at equal parameter along
/// `first` and `second` are the same point of the surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Identification {
    pub rectangle: usize,
    pub first: Segment,
    pub second: Segment,
}

impl Identification {
    pub fn length(&self) -> f64 {
        self.first.length()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Development {
    params: LengthRadiusParams,
    report: DegeneracyReport,
    triangle: [Point2; 3],
    rectangles: [Rectangle; 3],
}

impl Development {
    pub fn build(params: &LengthRadiusParams) -> Result<Self> {
        Self::build_with(params, Tolerance::default())
    }

    pub fn build_with(params: &LengthRadiusParams, tol: Tolerance) -> Result<Self> {
        let report = params.classify_with(tol);
        if let Some(what) = report.describe() {
            return Err(Error::DegeneratePants(what));
        }
        params.validate_with(tol).into_result()?;

        let l = params.lengths();
        let r = params.radii();
        let x = (l[0] * l[0] + l[2] * l[2] - l[1] * l[1]) / (2.0 * l[0]);
        let y = 2.0 * triangle_area(l[0], l[1], l[2]) / l[0];
        let triangle = [
            Point2::new(x, y),
            Point2::new(0.0, 0.0),
            Point2::new(l[0], 0.0),
        ];

        let rectangles = std::array::from_fn(|i| {
            let base_start = triangle[next(i)];
            let base_end = triangle[after_next(i)];
            let d = base_end - base_start;
            let normal = Point2::new(d.y, -d.x) * (1.0 / d.norm());
            let collapsed = report.degenerate_rectangles.contains(&i);
            Rectangle {
                index: i,
                base_start,
                base_end,
                normal,
                height: if collapsed { 0.0 } else { r[i] },
                collapsed,
            }
        });

        Ok(Development {
            params: *params,
            report,
            triangle,
            rectangles,
        })
    }

    pub fn params(&self) -> &LengthRadiusParams {
        &self.params
    }

    pub fn report(&self) -> &DegeneracyReport {
        &self.report
    }

    /// The three copies `s[0], s[1], s[2]` of the cone point.
    pub fn triangle(&self) -> [Point2; 3] {
        self.triangle
    }

    pub fn rectangles(&self) -> &[Rectangle; 3] {
        &self.rectangles
    }

    pub fn rectangle(&self, i: usize) -> &Rectangle {
        &self.rectangles[i]
    }

    /// Faces in order: triangle, then the non-collapsed rectangles.
    pub fn faces(&self) -> Vec<Face> {
        let mut faces = vec![Face {
            kind: FaceKind::Triangle,
            corners: self.triangle.to_vec(),
        }];
        faces.extend(
            self.rectangles
                .iter()
                .filter(|r| !r.collapsed)
                .map(|r| Face {
                    kind: FaceKind::Rectangle(r.index),
                    corners: r.corners().to_vec(),
                }),
        );
        faces
    }

    pub fn identifications(&self) -> Vec<Identification> {
        self.rectangles
            .iter()
            .filter(|r| !r.collapsed)
            .map(|r| Identification {
                rectangle: r.index,
                first: Segment::new(r.base_start, r.top_start()),
                second: Segment::new(r.base_end, r.top_end()),
            })
            .collect()
    }

    /// The edge of the development that becomes boundary component `c[i]`.
    /// For a collapsed rectangle this is the triangle side itself.
    pub fn boundary_trace(&self, i: usize) -> Segment {
        let r = &self.rectangles[i];
        Segment::new(r.top_start(), r.top_end())
    }

    pub fn triangle_angles(&self) -> [f64; 3] {
        let t = &self.triangle;
        std::array::from_fn(|i| angle_at(t[i], t[next(i)], t[after_next(i)]))
    }

    pub fn face_area(&self) -> f64 {
        self.faces()
            .iter()
            .map(|f| polygon_area(&f.corners).abs())
            .sum()
    }

    /// Total angle around the cone point, measured from the embedded
    /// coordinates: the triangle's three corners plus a straight angle per
    /// rectangle whose two base corners meet the cone point.
    pub fn cone_point(&self) -> ConePoint {
        let rect_count = self.rectangles.iter().filter(|r| !r.collapsed).count();
        let rect_angle: f64 = self
            .rectangles
            .iter()
            .filter(|r| !r.collapsed)
            .map(|r| {
                let [be, bs, ts, te] = r.corners();
                angle_at(bs, be, ts) + angle_at(be, te, bs)
            })
            .sum();
        debug_assert!(rect_count <= 3);
        let theta = self.triangle_angles().iter().sum::<f64>() + rect_angle;
        let location = match self.report.singularity {
            SingularityLocation::Boundary(i) => ConeLocation::Boundary(i),
            _ => ConeLocation::Interior,
        };
        ConePoint::new(location, theta).expect("cone angle of a valid development is 3pi or 4pi")
    }
}
