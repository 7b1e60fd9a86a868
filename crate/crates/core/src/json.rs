//! JSON documents exchanged by the command-line tool and the web demo.
//!
//! All indices rendered here are 1-based. Values are written in the order
//! `(l1, l2, l3, r1, r2, r3)` for mode `"lr"` and `(l1, l2, l3, a1, a2, a3)`
//! for mode `"la"`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::development::{ConeLocation, ConePoint, Development};
use crate::error::{Error, Result};
use crate::pants_params::{
    DegeneracyReport, DistanceParams, LengthRadiusParams, SingularityLocation, Tolerance, Validity,
    Violation,
};
use crate::surface_assembly::{Feasibility, FeasibilityVerdict, GlueAudit, GluingSpec, Slot};
use crate::teich_space::{Membership, Stratum};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Lr,
    La,
}

impl Mode {
    pub fn other(self) -> Mode {
        match self {
            Mode::Lr => Mode::La,
            Mode::La => Mode::Lr,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PantsDocument {
    #[serde(default = "default_version")]
    pub schema_version: String,
    pub mode: Mode,
    pub values: Vec<f64>,
}

fn default_version() -> String {
    SCHEMA_VERSION.to_string()
}

/// Parameters in either system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Params {
    Lr(LengthRadiusParams),
    La(DistanceParams),
}

impl PantsDocument {
    pub fn new(mode: Mode, values: [f64; 6]) -> Self {
        PantsDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            mode,
            values: values.to_vec(),
        }
    }

    pub fn from_params(p: &Params) -> Self {
        match p {
            Params::Lr(p) => Self::new(Mode::Lr, p.values()),
            Params::La(p) => Self::new(Mode::La, p.values()),
        }
    }

    /// Checks the schema and value count; an unsupported schema or a wrong
    /// number of values is a document error, not a domain error.
    pub fn check_schema(&self) -> std::result::Result<[f64; 6], String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
                self.schema_version
            ));
        }
        <[f64; 6]>::try_from(self.values.as_slice())
            .map_err(|_| format!("expected 6 values, got {}", self.values.len()))
    }

    pub fn params(&self) -> Result<Params> {
        let v = self.check_schema().map_err(Error::Document)?;
        Ok(match self.mode {
            Mode::Lr => Params::Lr(LengthRadiusParams::from_values(v)?),
            Mode::La => Params::La(DistanceParams::from_values(v)?),
        })
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": self.schema_version,
            "mode": self.mode,
            "values": self.values,
        })
    }
}

impl Params {
    pub fn mode(&self) -> Mode {
        match self {
            Params::Lr(_) => Mode::Lr,
            Params::La(_) => Mode::La,
        }
    }

    pub fn validate(&self, tol: Tolerance) -> Validity {
        match self {
            Params::Lr(p) => p.validate_with(tol),
            Params::La(p) => p.validate_with(tol),
        }
    }

    /// The radius form; fails for inadmissible distance parameters.
    pub fn length_radius(&self, tol: Tolerance) -> Result<LengthRadiusParams> {
        match self {
            Params::Lr(p) => Ok(*p),
            Params::La(p) => p.to_length_radius_with(tol),
        }
    }

    pub fn convert(&self, tol: Tolerance) -> Result<Params> {
        Ok(match self {
            Params::Lr(p) => Params::La(p.to_distance_with(tol)?),
            Params::La(p) => Params::Lr(p.to_length_radius_with(tol)?),
        })
    }
}

pub fn violation_json(v: &Violation) -> Value {
    json!({
        "code": v.code(),
        "index": v.index() + 1,
        "message": v.to_string(),
    })
}

pub fn violations_json(vs: &[Violation]) -> Value {
    Value::Array(vs.iter().map(violation_json).collect())
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn singularity_json(s: SingularityLocation) -> Value {
    match s {
        SingularityLocation::Interior => json!({ "kind": "interior" }),
        SingularityLocation::Boundary(i) => json!({ "kind": "boundary", "boundary": i + 1 }),
        SingularityLocation::Pinched => json!({ "kind": "pinched" }),
    }
}

pub fn degeneracy_json(r: &DegeneracyReport) -> Value {
    json!({
        "triangle_degenerate": r.degenerate_triangle.is_some(),
        "triangle_witness": r.degenerate_triangle.map(|i| i + 1),
        "degenerate_rectangles": one_based(&r.degenerate_rectangles),
        "pants_degenerate": r.pants_degenerate,
        "singularity": singularity_json(r.singularity),
    })
}

pub fn cone_json(c: &ConePoint) -> Value {
    let location = match c.location() {
        ConeLocation::Interior => json!({ "kind": "interior" }),
        ConeLocation::Boundary(i) => json!({ "kind": "boundary", "boundary": i + 1 }),
    };
    json!({
        "location": location,
        "total_angle": c.total_angle(),
        "total_angle_over_pi": c.total_angle() / std::f64::consts::PI,
        "curvature": c.curvature(),
    })
}

fn point(p: crate::geometry::Point2) -> Value {
    json!([p.x, p.y])
}

pub fn development_json(d: &Development) -> Value {
    let rectangles: Vec<Value> = d
        .rectangles()
        .iter()
        .map(|r| {
            json!({
                "index": r.index + 1,
                "collapsed": r.collapsed,
                "height": r.height,
                "corners": r.corners().iter().map(|&p| point(p)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let identifications: Vec<Value> = d
        .identifications()
        .iter()
        .map(|id| {
            json!({
                "rectangle": id.rectangle + 1,
                "length": id.length(),
                "first": [point(id.first.start), point(id.first.end)],
                "second": [point(id.second.start), point(id.second.end)],
            })
        })
        .collect();
    let boundary: Vec<Value> = (0..3)
        .map(|i| {
            let s = d.boundary_trace(i);
            json!({ "boundary": i + 1, "length": s.length(), "edge": [point(s.start), point(s.end)] })
        })
        .collect();
    json!({
        "triangle": d.triangle().iter().map(|&p| point(p)).collect::<Vec<_>>(),
        "triangle_angles": d.triangle_angles(),
        "rectangles": rectangles,
        "identifications": identifications,
        "boundary": boundary,
        "cone": cone_json(&d.cone_point()),
        "degeneracy": degeneracy_json(d.report()),
    })
}

pub fn stratum_json(s: &Stratum) -> Value {
    json!({ "l_walls": one_based(&s.l_walls), "a_walls": one_based(&s.a_walls) })
}

pub fn membership_json(m: &Membership) -> Value {
    match m {
        Membership::Interior => json!({ "membership": "interior" }),
        Membership::Boundary(s) => json!({ "membership": "boundary", "stratum": stratum_json(s) }),
        Membership::Outside(v) => {
            json!({ "membership": "outside", "violations": violations_json(v) })
        }
    }
}

pub fn feasibility_json(f: &FeasibilityVerdict) -> Value {
    json!({
        "verdict": match f.verdict {
            Feasibility::Infeasible => "INFEASIBLE",
            Feasibility::NotRuledOut => "NOT_RULED_OUT",
        },
        "pants_needed": f.pants_needed,
        "pants_servable": f.pants_servable,
        "reason": f.reason,
    })
}

pub fn glue_audit_json(a: &GlueAudit) -> Value {
    json!({
        "genus": a.surface.genus(),
        "cone_angles": a.surface.interior_cones(),
        "cones": a.cones.iter().map(|c| json!({
            "pants": c.pants,
            "total_angle": c.total_angle,
            "curvature": c.curvature,
        })).collect::<Vec<_>>(),
        "length_gaps": a.length_gaps,
        "gauss_bonnet_residual": a.residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotDocument {
    /// 0-based position in the `pants` array.
    pub pants: usize,
    /// 1-based boundary component.
    pub boundary: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingDocument {
    pub a: SlotDocument,
    pub b: SlotDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PantsEntry {
    pub mode: Mode,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GluingDocument {
    #[serde(default = "default_version")]
    pub schema_version: String,
    pub pants: Vec<PantsEntry>,
    pub pairings: Vec<PairingDocument>,
}

impl GluingDocument {
    pub fn check_schema(&self) -> std::result::Result<(), String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
                self.schema_version
            ));
        }
        for (k, p) in self.pants.iter().enumerate() {
            if p.values.len() != 6 {
                return Err(format!(
                    "pants {k}: expected 6 values, got {}",
                    p.values.len()
                ));
            }
        }
        for pr in &self.pairings {
            for s in [pr.a, pr.b] {
                if s.boundary == 0 {
                    return Err("boundary indices are 1-based".into());
                }
            }
        }
        Ok(())
    }

    pub fn to_spec(&self, tol: Tolerance) -> Result<GluingSpec> {
        let mut pants = Vec::with_capacity(self.pants.len());
        for (k, entry) in self.pants.iter().enumerate() {
            let doc = PantsDocument::new(
                entry.mode,
                <[f64; 6]>::try_from(entry.values.as_slice())
                    .map_err(|_| Error::Gluing(format!("pants {k}: expected 6 values")))?,
            );
            let p = doc
                .params()
                .and_then(|p| p.length_radius(tol))
                .map_err(|e| Error::Gluing(format!("pants {k}: {e}")))?;
            pants.push(p);
        }
        let slot = |s: SlotDocument| Slot {
            pants: s.pants,
            boundary: s.boundary.wrapping_sub(1),
        };
        Ok(GluingSpec {
            pants,
            pairings: self
                .pairings
                .iter()
                .map(|p| (slot(p.a), slot(p.b)))
                .collect(),
        })
    }
}

pub fn validity_json(v: &Validity) -> Value {
    json!({ "valid": v.is_valid(), "violations": violations_json(&v.violations) })
}
