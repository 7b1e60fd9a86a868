//! Gauss-Bonnet accounting for flat cone surfaces, doubling of bordered
//! surfaces, closed surfaces glued from pants, and the counting obstruction
//! to cutting a closed flat surface into pants along disjoint simple closed
//! geodesics.

use std::f64::consts::PI;

use crate::development::{ConeLocation, Development};
use crate::error::{Error, Result};
use crate::pants_params::{LengthRadiusParams, SingularityLocation};

/// Tolerance for a Gauss-Bonnet residual to count as zero.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Relative tolerance for the lengths of glued boundary components.
pub const GLUE_LENGTH_TOL: f64 = 1e-12;

/// Topological type and cone angles of a flat surface.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceSpec {
    genus: u32,
    boundary_count: u32,
    interior_cones: Vec<f64>,
    boundary_cones: Vec<f64>,
}

impl SurfaceSpec {
    pub fn new(
        genus: u32,
        boundary_count: u32,
        interior_cones: Vec<f64>,
        boundary_cones: Vec<f64>,
    ) -> Result<Self> {
        for &theta in &interior_cones {
            if !theta.is_finite() || theta <= 0.0 || theta == 2.0 * PI {
                return Err(Error::Surface(format!(
                    "interior cone angle {theta} is not admissible"
                )));
            }
        }
        for &tau in &boundary_cones {
            if !tau.is_finite() || tau <= 0.0 || tau == PI {
                return Err(Error::Surface(format!(
                    "boundary cone angle {tau} is not admissible"
                )));
            }
        }
        if boundary_count == 0 && !boundary_cones.is_empty() {
            return Err(Error::Surface("boundary cones on a closed surface".into()));
        }
        Ok(SurfaceSpec {
            genus,
            boundary_count,
            interior_cones,
            boundary_cones,
        })
    }

    pub fn closed(genus: u32, cones: Vec<f64>) -> Result<Self> {
        Self::new(genus, 0, cones, Vec::new())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary_count
    }

    pub fn interior_cones(&self) -> &[f64] {
        &self.interior_cones
    }

    pub fn boundary_cones(&self) -> &[f64] {
        &self.boundary_cones
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }

    /// Total curvature `sum(2pi - theta) + sum(pi - tau)`.
    pub fn total_curvature(&self) -> f64 {
        self.interior_cones
            .iter()
            .map(|t| 2.0 * PI - t)
            .sum::<f64>()
            + self.boundary_cones.iter().map(|t| PI - t).sum::<f64>()
    }

    /// Glue the surface to its mirror image along the whole boundary. Each
    /// boundary cone point meets its copy and becomes an interior cone point
    /// of twice the angle.
    pub fn double(&self) -> Result<SurfaceSpec> {
        if self.boundary_count == 0 {
            return Err(Error::Surface("cannot double a closed surface".into()));
        }
        let mut cones: Vec<f64> = self.interior_cones.iter().flat_map(|&t| [t, t]).collect();
        cones.extend(self.boundary_cones.iter().map(|t| 2.0 * t));
        SurfaceSpec::closed(2 * self.genus + self.boundary_count - 1, cones)
    }
}

/// `sum(2pi - theta) - (4 - 4g)pi` for a closed surface.
pub fn gauss_bonnet_closed(s: &SurfaceSpec) -> Result<f64> {
    if s.boundary_count != 0 {
        return Err(Error::Surface(format!(
            "surface has {} boundary components; use the bordered form",
            s.boundary_count
        )));
    }
    Ok(s.total_curvature() - (4.0 - 4.0 * s.genus as f64) * PI)
}

/// `sum(2pi - theta) + sum(pi - tau) - 2pi chi`. For genus 0 the right-hand
/// side is `(4 - 2b)pi`.
pub fn gauss_bonnet_bounded(s: &SurfaceSpec) -> f64 {
    s.total_curvature() - 2.0 * PI * s.euler_characteristic() as f64
}

/// The closed genus-2 surface obtained by doubling a flat pair of pants.
/// Cone angles are measured on the development.
pub fn double(p: &LengthRadiusParams) -> Result<SurfaceSpec> {
    let d = Development::build(p)?;
    let cone = d.cone_point();
    let pants = match cone.location() {
        ConeLocation::Interior => SurfaceSpec::new(0, 3, vec![cone.total_angle()], vec![])?,
        ConeLocation::Boundary(_) => SurfaceSpec::new(0, 3, vec![], vec![cone.total_angle()])?,
    };
    pants.double()
}

/// One boundary component of one pair of pants in a gluing. Both indices
/// are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub pants: usize,
    pub boundary: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GluingSpec {
    pub pants: Vec<LengthRadiusParams>,
    pub pairings: Vec<(Slot, Slot)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConeAudit {
    pub pants: usize,
    pub total_angle: f64,
    pub curvature: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GlueAudit {
    pub surface: SurfaceSpec,
    pub cones: Vec<ConeAudit>,
    /// `|l - l'|` for every pairing, in input order.
    pub length_gaps: Vec<f64>,
    pub residual: f64,
}

fn slot_name(s: Slot) -> String {
    format!("pants {} boundary {}", s.pants, s.boundary + 1)
}

/// Glue pants along boundary components of equal length. The twist of each
/// gluing is not tracked; it changes neither genus nor cone angles.
pub fn glue(spec: &GluingSpec) -> Result<GlueAudit> {
    let v = spec.pants.len();
    if v == 0 {
        return Err(Error::Gluing("no pants given".into()));
    }
    let mut used = vec![[false; 3]; v];
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let n = parent[x];
            parent[x] = r;
            x = n;
        }
        r
    }

    for &(a, b) in &spec.pairings {
        for s in [a, b] {
            if s.pants >= v || s.boundary > 2 {
                return Err(Error::Gluing(format!("{} does not exist", slot_name(s))));
            }
        }
        if a == b {
            return Err(Error::Gluing(format!(
                "{} is paired with itself",
                slot_name(a)
            )));
        }
        for s in [a, b] {
            if std::mem::replace(&mut used[s.pants][s.boundary], true) {
                return Err(Error::Gluing(format!("{} is used twice", slot_name(s))));
            }
        }
        let (ra, rb) = (find(&mut parent, a.pants), find(&mut parent, b.pants));
        parent[ra] = rb;
    }
    if let Some((p, row)) = used
        .iter()
        .enumerate()
        .find(|(_, row)| row.contains(&false))
    {
        let b = row.iter().position(|u| !u).unwrap_or(0);
        return Err(Error::Gluing(format!(
            "incomplete matching: {} is unpaired",
            slot_name(Slot {
                pants: p,
                boundary: b
            })
        )));
    }
    let root = find(&mut parent, 0);
    if (0..v).any(|p| find(&mut parent, p) != root) {
        return Err(Error::Gluing("the glued surface is disconnected".into()));
    }

    let mut length_gaps = Vec::with_capacity(spec.pairings.len());
    for &(a, b) in &spec.pairings {
        let la = spec.pants[a.pants].lengths()[a.boundary];
        let lb = spec.pants[b.pants].lengths()[b.boundary];
        let gap = (la - lb).abs();
        if gap > GLUE_LENGTH_TOL * la.abs().max(lb.abs()) {
            return Err(Error::Gluing(format!(
                "length mismatch: {} has length {la} but {} has length {lb}",
                slot_name(a),
                slot_name(b)
            )));
        }
        length_gaps.push(gap);
    }

    let mut cones = Vec::with_capacity(v);
    for (k, p) in spec.pants.iter().enumerate() {
        let d = Development::build(p).map_err(|e| Error::Gluing(format!("pants {k}: {e}")))?;
        if d.report().singularity != SingularityLocation::Interior {
            return Err(Error::Gluing(format!(
                "pants {k}: the cone point must be interior"
            )));
        }
        let c = d.cone_point();
        cones.push(ConeAudit {
            pants: k,
            total_angle: c.total_angle(),
            curvature: c.curvature(),
        });
    }

    // Gluing graph: V pants, E = 3V/2 pairings, genus E - V + 1.
    let genus = (spec.pairings.len() + 1 - v) as u32;
    let surface = SurfaceSpec::closed(genus, cones.iter().map(|c| c.total_angle).collect())?;
    let residual = gauss_bonnet_closed(&surface)?;
    Ok(GlueAudit {
        surface,
        cones,
        length_gaps,
        residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    Infeasible,
    NotRuledOut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub verdict: Feasibility,
    /// Pants in any decomposition, `2g - 2`.
    pub pants_needed: u64,
    /// Pants the cone points can serve, at most two each.
    pub pants_servable: u64,
    pub reason: String,
}

/// Counting obstruction: every flat pair of pants needs a cone point on its
/// closure, and a cone point on a cutting geodesic touches at most the two
/// pants on either side of it. Only infeasibility is ever proven.
pub fn decomposition_feasible(genus: u32, n_singularities: u32) -> Result<FeasibilityVerdict> {
    if genus < 2 {
        return Err(Error::Surface(format!(
            "genus {genus} surfaces have no pants decomposition"
        )));
    }
    if n_singularities == 0 {
        return Err(Error::Surface(
            "a closed flat surface of genus >= 2 has at least one cone point".into(),
        ));
    }
    let needed = 2 * genus as u64 - 2;
    let servable = 2 * n_singularities as u64;
    Ok(if needed > servable {
        FeasibilityVerdict {
            verdict: Feasibility::Infeasible,
            pants_needed: needed,
            pants_servable: servable,
            reason: format!(
                "{needed} pants each need a cone point on their closure, but {n_singularities} \
                 cone point(s) on disjoint simple closed geodesics reach at most {servable}"
            ),
        }
    } else {
        FeasibilityVerdict {
            verdict: Feasibility::NotRuledOut,
            pants_needed: needed,
            pants_servable: servable,
            reason: format!(
                "{needed} pants, {n_singularities} cone point(s): the counting obstruction does not apply"
            ),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lr(v: [f64; 6]) -> LengthRadiusParams {
        LengthRadiusParams::from_values(v).unwrap()
    }

    fn slot(pants: usize, boundary: usize) -> Slot {
        Slot { pants, boundary }
    }

    #[test]
    fn closed_examples() {
        let s = SurfaceSpec::closed(2, vec![4.0 * PI, 4.0 * PI]).unwrap();
        assert!(gauss_bonnet_closed(&s).unwrap().abs() < RESIDUAL_TOL);
        let torus = SurfaceSpec::closed(1, vec![]).unwrap();
        assert_eq!(gauss_bonnet_closed(&torus).unwrap(), 0.0);
        let sphere = SurfaceSpec::closed(0, vec![PI; 8]).unwrap();
        assert!((gauss_bonnet_closed(&sphere).unwrap() - 4.0 * PI).abs() < 1e-12);
        let bordered = SurfaceSpec::new(0, 3, vec![4.0 * PI], vec![]).unwrap();
        assert!(gauss_bonnet_closed(&bordered).is_err());
    }

    #[test]
    fn bounded_examples() {
        let pants = SurfaceSpec::new(0, 3, vec![4.0 * PI], vec![]).unwrap();
        assert!(gauss_bonnet_bounded(&pants).abs() < RESIDUAL_TOL);
        let smooth = SurfaceSpec::new(0, 3, vec![], vec![]).unwrap();
        assert_eq!(gauss_bonnet_bounded(&smooth), 2.0 * PI);
        let disc = SurfaceSpec::new(0, 1, vec![], vec![PI / 2.0]).unwrap();
        assert!((gauss_bonnet_bounded(&disc) - (PI / 2.0 - 2.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn inadmissible_cone_angles_rejected() {
        assert!(SurfaceSpec::closed(2, vec![2.0 * PI]).is_err());
        assert!(SurfaceSpec::new(0, 1, vec![], vec![PI]).is_err());
        assert!(SurfaceSpec::new(0, 0, vec![], vec![PI / 2.0]).is_err());
        assert!(SurfaceSpec::closed(2, vec![-1.0]).is_err());
    }

    #[test]
    fn doubling_pants() {
        let s = double(&lr([1.0; 6])).unwrap();
        assert_eq!(s.genus(), 2);
        assert_eq!(s.interior_cones().len(), 2);
        for t in s.interior_cones() {
            assert!((t - 4.0 * PI).abs() < 1e-9);
        }
        assert!(gauss_bonnet_closed(&s).unwrap().abs() < RESIDUAL_TOL);

        let s = double(&lr([1.0, 1.0, 1.0, 0.0, 1.0, 1.0])).unwrap();
        assert_eq!(s.genus(), 2);
        assert_eq!(s.interior_cones().len(), 1);
        assert!((s.interior_cones()[0] - 6.0 * PI).abs() < 1e-9);
        assert!(gauss_bonnet_closed(&s).unwrap().abs() < RESIDUAL_TOL);

        assert!(double(&lr([1.0, 1.0, 1.0, 0.0, 0.0, 1.0])).is_err());
    }

    #[test]
    fn glue_two_pants() {
        let spec = GluingSpec {
            pants: vec![lr([1.0; 6]), lr([1.0, 1.0, 1.0, 0.5, 2.0, 1.0])],
            pairings: (0..3).map(|b| (slot(0, b), slot(1, b))).collect(),
        };
        let audit = glue(&spec).unwrap();
        assert_eq!(audit.surface.genus(), 2);
        assert_eq!(audit.cones.len(), 2);
        assert!(audit.residual.abs() < RESIDUAL_TOL);
    }

    #[test]
    fn glue_with_self_pairing() {
        // Each pants closes one cuff on itself; the remaining cuffs meet.
        let spec = GluingSpec {
            pants: vec![lr([1.0; 6]), lr([1.0; 6])],
            pairings: vec![
                (slot(0, 0), slot(0, 1)),
                (slot(1, 0), slot(1, 1)),
                (slot(0, 2), slot(1, 2)),
            ],
        };
        let audit = glue(&spec).unwrap();
        assert_eq!(audit.surface.genus(), 2);
        assert!(audit.residual.abs() < RESIDUAL_TOL);
    }

    #[test]
    fn glue_four_pants() {
        let p = lr([1.0; 6]);
        let spec = GluingSpec {
            pants: vec![p; 4],
            pairings: vec![
                (slot(0, 0), slot(1, 0)),
                (slot(0, 1), slot(1, 1)),
                (slot(1, 2), slot(2, 2)),
                (slot(2, 0), slot(3, 0)),
                (slot(2, 1), slot(3, 1)),
                (slot(3, 2), slot(0, 2)),
            ],
        };
        let audit = glue(&spec).unwrap();
        assert_eq!(audit.surface.genus(), 3);
        assert_eq!(audit.cones.len(), 4);
        assert!(audit.residual.abs() < RESIDUAL_TOL);
    }

    #[test]
    fn glue_errors() {
        let mismatch = GluingSpec {
            pants: vec![lr([1.0; 6]), lr([2.0, 1.5, 1.5, 1.0, 1.0, 1.0])],
            pairings: (0..3).map(|b| (slot(0, b), slot(1, b))).collect(),
        };
        let err = glue(&mismatch).unwrap_err().to_string();
        assert!(err.contains("length mismatch"), "{err}");
        assert!(err.contains("pants 0 boundary 1"), "{err}");

        let incomplete = GluingSpec {
            pants: vec![lr([1.0; 6]), lr([1.0; 6])],
            pairings: (0..2).map(|b| (slot(0, b), slot(1, b))).collect(),
        };
        assert!(glue(&incomplete)
            .unwrap_err()
            .to_string()
            .contains("incomplete"));

        let reused = GluingSpec {
            pants: vec![lr([1.0; 6]), lr([1.0; 6])],
            pairings: vec![
                (slot(0, 0), slot(1, 0)),
                (slot(0, 0), slot(1, 1)),
                (slot(0, 2), slot(1, 2)),
            ],
        };
        assert!(glue(&reused)
            .unwrap_err()
            .to_string()
            .contains("used twice"));

        let boundary_cone = GluingSpec {
            pants: vec![lr([1.0, 1.0, 1.0, 0.0, 1.0, 1.0]), lr([1.0; 6])],
            pairings: (0..3).map(|b| (slot(0, b), slot(1, b))).collect(),
        };
        assert!(glue(&boundary_cone).is_err());
    }

    #[test]
    fn glue_disconnected() {
        let p = lr([1.0; 6]);
        let spec = GluingSpec {
            pants: vec![p; 4],
            pairings: vec![
                (slot(0, 0), slot(1, 0)),
                (slot(0, 1), slot(1, 1)),
                (slot(0, 2), slot(1, 2)),
                (slot(2, 0), slot(3, 0)),
                (slot(2, 1), slot(3, 1)),
                (slot(2, 2), slot(3, 2)),
            ],
        };
        assert!(glue(&spec)
            .unwrap_err()
            .to_string()
            .contains("disconnected"));
    }

    #[test]
    fn feasibility_examples() {
        let v = decomposition_feasible(3, 1).unwrap();
        assert_eq!(v.verdict, Feasibility::Infeasible);
        assert_eq!((v.pants_needed, v.pants_servable), (4, 2));
        assert_eq!(
            decomposition_feasible(2, 1).unwrap().verdict,
            Feasibility::NotRuledOut
        );
        // 8 pants against at most 6 reachable.
        assert_eq!(
            decomposition_feasible(5, 3).unwrap().verdict,
            Feasibility::Infeasible
        );
        assert!(decomposition_feasible(1, 1).is_err());
        assert!(decomposition_feasible(3, 0).is_err());
    }
}
