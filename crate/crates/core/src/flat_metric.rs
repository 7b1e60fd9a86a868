//! Sampled-graph approximation of the intrinsic metric of the glued
//! surface, used as an independent check that the declared parameters are
//! the distances they claim to be.
//!
//! Every face of a [`Development`] is sampled on a regular lattice. Samples
//! that are the same point of the surface (shared triangle/rectangle sides,
//! the two copies of each cut segment, the three copies of the cone point)
//! are merged into one node. Two samples of the same face are joined when
//! they are within the link radius; since faces are convex, every edge is a
//! realisable path and graph distances bound surface distances from above.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::development::{Development, FaceKind};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::pants_params::{after_next, next, LengthRadiusParams, Tolerance};

/// Link radius in units of the sample spacing.
pub const LINK_FACTOR: f64 = 2.5;

/// Default spacing is the smallest positive length or radius over this.
pub const DEFAULT_RESOLUTION: f64 = 20.0;

/// Default number of sampled point pairs for [`structure_distance`].
pub const DEFAULT_PAIRS: usize = 64;

pub fn default_spacing(p: &LengthRadiusParams) -> f64 {
    smallest_dimension(p) / DEFAULT_RESOLUTION
}

fn smallest_dimension(p: &LengthRadiusParams) -> f64 {
    p.lengths()
        .into_iter()
        .chain(p.radii().into_iter().filter(|&r| r > 0.0))
        .fold(f64::INFINITY, f64::min)
}

/// Lattice resolution shared by graphs whose nodes must correspond.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingPattern {
    /// Subdivisions of every triangle side and rectangle base.
    pub side_steps: usize,
    /// Subdivisions of each rectangle's height; zero for collapsed ones.
    pub height_steps: [usize; 3],
    pub link_radius: f64,
}

impl SamplingPattern {
    pub fn for_spacing(d: &Development, h: f64) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidSpacing(h));
        }
        let limit = smallest_dimension(d.params());
        if h > limit {
            return Err(Error::SpacingTooCoarse { spacing: h, limit });
        }
        let l = d.params().lengths();
        let longest = l.iter().cloned().fold(0.0, f64::max);
        let height_steps = std::array::from_fn(|i| {
            let r = d.rectangle(i);
            if r.collapsed {
                0
            } else {
                (r.height / h).ceil() as usize
            }
        });
        Ok(SamplingPattern {
            side_steps: (longest / h).ceil() as usize,
            height_steps,
            link_radius: LINK_FACTOR * h,
        })
    }
}

/// Identity of a sample on the glued surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Singularity,
    /// The far corners of rectangle `i`, glued to each other.
    TopCorner(usize),
    /// Triangle side `i` (= base of rectangle `i`), step `m` from its start.
    Side(usize, usize),
    /// Cut segment of rectangle `i`, step `k` up from the base.
    Cut(usize, usize),
    /// Far edge of rectangle `i`, step `m` along.
    Top(usize, usize),
    TriangleInterior(usize, usize),
    RectangleInterior(usize, usize, usize),
}

#[derive(Debug, Clone)]
struct FaceSamples {
    kind: FaceKind,
    /// Node id and face-local normalised coordinates: barycentric weights of
    /// `s[1], s[2]` for the triangle, `(u, v)` for rectangles.
    samples: Vec<(usize, [f64; 2])>,
}

fn sample_position(d: &Development, kind: FaceKind, c: [f64; 2]) -> Point2 {
    match kind {
        FaceKind::Triangle => {
            let t = d.triangle();
            t[0] * (1.0 - c[0] - c[1]) + t[1] * c[0] + t[2] * c[1]
        }
        FaceKind::Rectangle(i) => d.rectangle(i).point(c[0], c[1]),
    }
}

#[derive(Debug, Clone, Copy)]
struct FaceEdge {
    face: u32,
    a: u32,
    b: u32,
}

#[derive(Debug, Clone)]
pub struct MetricGraph {
    pattern: SamplingPattern,
    collapsed: [bool; 3],
    faces: Vec<FaceSamples>,
    edges: Vec<FaceEdge>,
    node_count: usize,
    singularity: usize,
    boundary: [Vec<usize>; 3],
    offsets: Vec<usize>,
    targets: Vec<u32>,
    weights: Vec<f64>,
}

impl MetricGraph {
    /// Sample `d` at spacing at most `h`.
    pub fn build(d: &Development, h: f64) -> Result<Self> {
        let pattern = SamplingPattern::for_spacing(d, h)?;
        Self::with_pattern(d, pattern)
    }

    pub fn build_default(d: &Development) -> Result<Self> {
        Self::build(d, default_spacing(d.params()))
    }

    pub fn with_pattern(d: &Development, pattern: SamplingPattern) -> Result<Self> {
        let n = pattern.side_steps;
        if n == 0 || pattern.link_radius.partial_cmp(&0.0) != Some(Ordering::Greater) {
            return Err(Error::InvalidSpacing(pattern.link_radius));
        }
        let collapsed: [bool; 3] = std::array::from_fn(|i| d.rectangle(i).collapsed);
        for i in 0..3 {
            if collapsed[i] != (pattern.height_steps[i] == 0) {
                return Err(Error::TypeMismatch(format!(
                    "sampling pattern does not match rectangle {}",
                    i + 1
                )));
            }
        }

        let mut ids: HashMap<Key, usize> = HashMap::new();
        let mut intern = |k: Key| {
            let next_id = ids.len();
            *ids.entry(k).or_insert(next_id)
        };
        let singularity = intern(Key::Singularity);
        let mut faces = Vec::new();

        // Triangle lattice; weights (a, b, c) on (s0, s1, s2) sum to n.
        let mut tri = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for b in 0..=n {
            for c in 0..=(n - b) {
                let a = n - b - c;
                let w = [a, b, c];
                let zeros = w.iter().filter(|&&x| x == 0).count();
                let key = if zeros >= 2 {
                    Key::Singularity
                } else if let Some(i) = (0..3).find(|&i| w[i] == 0) {
                    // Side i runs from s[i+1] to s[i+2].
                    Key::Side(i, w[after_next(i)])
                } else {
                    Key::TriangleInterior(b, c)
                };
                tri.push((intern(key), [b as f64 / n as f64, c as f64 / n as f64]));
            }
        }
        faces.push(FaceSamples {
            kind: FaceKind::Triangle,
            samples: tri,
        });

        for i in 0..3 {
            let nv = pattern.height_steps[i];
            if nv == 0 {
                continue;
            }
            let mut rect = Vec::with_capacity((n + 1) * (nv + 1));
            for v in 0..=nv {
                for u in 0..=n {
                    let end = u == 0 || u == n;
                    let key = match (v, end) {
                        (0, true) => Key::Singularity,
                        (0, false) => Key::Side(i, u),
                        (v, true) if v == nv => Key::TopCorner(i),
                        (v, false) if v == nv => Key::Top(i, u),
                        (v, true) => Key::Cut(i, v),
                        (v, false) => Key::RectangleInterior(i, u, v),
                    };
                    rect.push((intern(key), [u as f64 / n as f64, v as f64 / nv as f64]));
                }
            }
            faces.push(FaceSamples {
                kind: FaceKind::Rectangle(i),
                samples: rect,
            });
        }

        let boundary = std::array::from_fn(|i| {
            let mut nodes: Vec<usize> = if collapsed[i] {
                std::iter::once(Key::Singularity)
                    .chain((1..n).map(|m| Key::Side(i, m)))
                    .map(|k| ids[&k])
                    .collect()
            } else {
                std::iter::once(Key::TopCorner(i))
                    .chain((1..n).map(|m| Key::Top(i, m)))
                    .map(|k| ids[&k])
                    .collect()
            };
            nodes.sort_unstable();
            nodes
        });
        let node_count = ids.len();

        let edges = link_samples(d, &faces, pattern.link_radius);
        let mut g = MetricGraph {
            pattern,
            collapsed,
            faces,
            edges,
            node_count,
            singularity,
            boundary,
            offsets: Vec::new(),
            targets: Vec::new(),
            weights: Vec::new(),
        };
        g.assemble(d);
        if !g.is_connected() {
            return Err(Error::Disconnected(format!(
                "{} nodes, {} edges",
                g.node_count,
                g.edges.len()
            )));
        }
        Ok(g)
    }

    /// Same nodes and edges, with weights measured in another development
    /// of the same combinatorial type. Nodes correspond through the
    /// face-wise affine map that matches triangle vertices and rectangle
    /// corners.
    pub fn reweighted(&self, d: &Development) -> Result<Self> {
        let collapsed: [bool; 3] = std::array::from_fn(|i| d.rectangle(i).collapsed);
        if collapsed != self.collapsed {
            return Err(Error::TypeMismatch(
                "collapsed rectangles differ between the two developments".into(),
            ));
        }
        let mut g = self.clone();
        g.assemble(d);
        Ok(g)
    }

    fn assemble(&mut self, d: &Development) {
        let positions: Vec<Vec<Point2>> = self
            .faces
            .iter()
            .map(|f| {
                f.samples
                    .iter()
                    .map(|&(_, c)| sample_position(d, f.kind, c))
                    .collect()
            })
            .collect();
        let mut degree = vec![0usize; self.node_count + 1];
        for e in &self.edges {
            let f = &self.faces[e.face as usize];
            degree[f.samples[e.a as usize].0] += 1;
            degree[f.samples[e.b as usize].0] += 1;
        }
        let mut offsets = Vec::with_capacity(self.node_count + 1);
        let mut acc = 0;
        for deg in &degree[..self.node_count] {
            offsets.push(acc);
            acc += deg;
        }
        offsets.push(acc);
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; acc];
        let mut weights = vec![0.0; acc];
        for e in &self.edges {
            let fi = e.face as usize;
            let (na, nb) = (
                self.faces[fi].samples[e.a as usize].0,
                self.faces[fi].samples[e.b as usize].0,
            );
            let w = positions[fi][e.a as usize].distance(positions[fi][e.b as usize]);
            targets[fill[na]] = nb as u32;
            weights[fill[na]] = w;
            fill[na] += 1;
            targets[fill[nb]] = na as u32;
            weights[fill[nb]] = w;
            fill[nb] += 1;
        }
        self.offsets = offsets;
        self.targets = targets;
        self.weights = weights;
    }

    pub fn pattern(&self) -> SamplingPattern {
        self.pattern
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn singularity(&self) -> usize {
        self.singularity
    }

    /// Nodes lying on boundary component `i`.
    pub fn boundary_nodes(&self, i: usize) -> &[usize] {
        &self.boundary[i]
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.offsets[node]..self.offsets[node + 1];
        self.targets[range.clone()]
            .iter()
            .zip(&self.weights[range])
            .map(|(&t, &w)| (t as usize, w))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![self.singularity];
        seen[self.singularity] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (v, _) in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.node_count
    }

    /// Graph distance from the nearest of `sources` to every node.
    pub fn distances_from(&self, sources: &[usize]) -> Vec<f64> {
        let mut dist = vec![f64::INFINITY; self.node_count];
        let mut heap = BinaryHeap::new();
        for &s in sources {
            dist[s] = 0.0;
            heap.push(State { dist: 0.0, node: s });
        }
        while let Some(State { dist: du, node: u }) = heap.pop() {
            if du > dist[u] {
                continue;
            }
            for (v, w) in self.neighbors(u) {
                let dv = du + w;
                if dv < dist[v] {
                    dist[v] = dv;
                    heap.push(State { dist: dv, node: v });
                }
            }
        }
        dist
    }

    /// Distance from the cone point to boundary component `i` (0-based).
    pub fn distance_to_boundary(&self, i: usize) -> Result<f64> {
        if i > 2 {
            return Err(Error::BoundaryIndex(i + 1, i + 1));
        }
        let dist = self.distances_from(&[self.singularity]);
        self.nearest(&dist, i)
    }

    /// Distances from the cone point to all three boundary components.
    pub fn distances_to_boundaries(&self) -> Result<[f64; 3]> {
        let dist = self.distances_from(&[self.singularity]);
        Ok([
            self.nearest(&dist, 0)?,
            self.nearest(&dist, 1)?,
            self.nearest(&dist, 2)?,
        ])
    }

    /// Distance between boundary components `j` and `k` (0-based, distinct).
    pub fn distance_between_boundaries(&self, j: usize, k: usize) -> Result<f64> {
        if j == k || j > 2 || k > 2 {
            return Err(Error::BoundaryIndex(j + 1, k + 1));
        }
        let dist = self.distances_from(&self.boundary[j]);
        self.nearest(&dist, k)
    }

    fn nearest(&self, dist: &[f64], i: usize) -> Result<f64> {
        let d = self.boundary[i]
            .iter()
            .map(|&n| dist[n])
            .fold(f64::INFINITY, f64::min);
        if d.is_finite() {
            Ok(d)
        } else {
            Err(Error::Disconnected(format!(
                "boundary {} unreachable",
                i + 1
            )))
        }
    }
}

fn link_samples(d: &Development, faces: &[FaceSamples], radius: f64) -> Vec<FaceEdge> {
    let scale = d.params().lengths().iter().cloned().fold(1.0, f64::max);
    let coincident = 1e-12 * scale;
    let mut edges = Vec::new();
    for (fi, face) in faces.iter().enumerate() {
        let pos: Vec<Point2> = face
            .samples
            .iter()
            .map(|&(_, c)| sample_position(d, face.kind, c))
            .collect();
        let cell = |p: Point2| ((p.x / radius).floor() as i64, (p.y / radius).floor() as i64);
        let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (si, &p) in pos.iter().enumerate() {
            grid.entry(cell(p)).or_default().push(si);
        }
        for (si, &p) in pos.iter().enumerate() {
            let (cx, cy) = cell(p);
            for dx in -1..=1 {
                for dy in -1..=1 {
                    let Some(bucket) = grid.get(&(cx + dx, cy + dy)) else {
                        continue;
                    };
                    for &sj in bucket {
                        if sj <= si || face.samples[si].0 == face.samples[sj].0 {
                            continue;
                        }
                        let w = p.distance(pos[sj]);
                        if w <= radius && w > coincident {
                            edges.push(FaceEdge {
                                face: fi as u32,
                                a: si as u32,
                                b: sj as u32,
                            });
                        }
                    }
                }
            }
        }
    }
    edges
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct State {
    dist: f64,
    node: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureOptions {
    pub n_pairs: usize,
    pub seed: u64,
    /// Sample spacing; defaults to the smaller default spacing of the two
    /// structures.
    pub spacing: Option<f64>,
    pub tol: Tolerance,
}

impl Default for StructureOptions {
    fn default() -> Self {
        StructureOptions {
            n_pairs: DEFAULT_PAIRS,
            seed: 0,
            spacing: None,
            tol: Tolerance::default(),
        }
    }
}

/// Monte-Carlo estimate of `sup |d_p(x, y) - d_q(x, y)|` over sampled
/// corresponding point pairs.
pub fn structure_distance(
    p: &LengthRadiusParams,
    q: &LengthRadiusParams,
    n_pairs: usize,
    seed: u64,
) -> Result<f64> {
    structure_distance_with(
        p,
        q,
        &StructureOptions {
            n_pairs,
            seed,
            ..StructureOptions::default()
        },
    )
}

pub fn structure_distance_with(
    p: &LengthRadiusParams,
    q: &LengthRadiusParams,
    opts: &StructureOptions,
) -> Result<f64> {
    if opts.n_pairs == 0 {
        return Err(Error::OutOfRange {
            name: "pair count",
            range: "[1, inf)",
            value: 0.0,
        });
    }
    let dp = Development::build_with(p, opts.tol)?;
    let dq = Development::build_with(q, opts.tol)?;
    if dp.report().degenerate_rectangles != dq.report().degenerate_rectangles {
        return Err(Error::TypeMismatch(format!(
            "cone point locations differ ({:?} vs {:?})",
            dp.report().singularity,
            dq.report().singularity
        )));
    }

    // Build the shared node/edge structure on the midpoint so the result
    // does not depend on argument order.
    let (vp, vq) = (p.values(), q.values());
    let mid = LengthRadiusParams::from_values(std::array::from_fn(|k| 0.5 * (vp[k] + vq[k])))?;
    let dm = Development::build_with(&mid, opts.tol)?;
    let h = match opts.spacing {
        Some(h) => h,
        None => default_spacing(p).min(default_spacing(q)),
    };
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidSpacing(h));
    }
    let longest = |x: &LengthRadiusParams| x.lengths().iter().cloned().fold(0.0, f64::max);
    let pattern = SamplingPattern {
        side_steps: (longest(p).max(longest(q)) / h).ceil() as usize,
        height_steps: std::array::from_fn(|i| {
            if dp.rectangle(i).collapsed {
                0
            } else {
                (dp.rectangle(i).height.max(dq.rectangle(i).height) / h).ceil() as usize
            }
        }),
        link_radius: LINK_FACTOR * h,
    };
    let base = MetricGraph::with_pattern(&dm, pattern)?;
    let gp = base.reweighted(&dp)?;
    let gq = base.reweighted(&dq)?;

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = base.node_count();
    let mut pairs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for _ in 0..opts.n_pairs {
        let x = rng.random_range(0..n);
        let y = rng.random_range(0..n);
        pairs.entry(x).or_default().push(y);
    }
    let mut sup = 0.0_f64;
    for (x, ys) in pairs {
        let fp = gp.distances_from(&[x]);
        let fq = gq.distances_from(&[x]);
        for y in ys {
            sup = sup.max((fp[y] - fq[y]).abs());
        }
    }
    Ok(sup)
}

/// Relative error of a measured distance against its declared value;
/// absolute error when the declared value is zero.
pub fn relative_error(measured: f64, declared: f64) -> f64 {
    if declared == 0.0 {
        measured.abs()
    } else {
        (measured - declared).abs() / declared
    }
}

/// Declared boundary-to-boundary distance for the pair other than `i`.
pub fn declared_boundary_distance(p: &LengthRadiusParams, i: usize) -> f64 {
    let r = p.radii();
    r[next(i)] + r[after_next(i)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dev(v: [f64; 6]) -> Development {
        Development::build(&LengthRadiusParams::from_values(v).unwrap()).unwrap()
    }

    fn lr(v: [f64; 6]) -> LengthRadiusParams {
        LengthRadiusParams::from_values(v).unwrap()
    }

    #[test]
    fn node_count_is_within_area_bounds() {
        let d = dev([1.0; 6]);
        let g = MetricGraph::build(&d, 0.05).unwrap();
        let lower = d.face_area() / (0.05 * 0.05);
        assert!(
            g.node_count() as f64 >= lower,
            "{} < {lower}",
            g.node_count()
        );
        assert!(g.node_count() as f64 <= 4.0 * lower);
        assert!(g.is_connected());
    }

    #[test]
    fn merged_node_count_matches_lattice_arithmetic() {
        // n = 20 side steps, 20 height steps per rectangle: the triangle
        // contributes 231 lattice points with its corners merged into one,
        // each rectangle adds 20 rows of 21 samples minus one glued column.
        let g = MetricGraph::build(&dev([1.0; 6]), 0.05).unwrap();
        assert_eq!(g.node_count(), 229 + 3 * 400);
    }

    #[test]
    fn rejects_bad_spacing() {
        let d = dev([1.0; 6]);
        assert!(matches!(
            MetricGraph::build(&d, 0.0),
            Err(Error::InvalidSpacing(_))
        ));
        assert!(matches!(
            MetricGraph::build(&d, f64::NAN),
            Err(Error::InvalidSpacing(_))
        ));
        assert!(matches!(
            MetricGraph::build(&d, 1.5),
            Err(Error::SpacingTooCoarse { .. })
        ));
    }

    #[test]
    fn collapsed_rectangle_graph_is_connected() {
        let g = MetricGraph::build_default(&dev([1.0, 1.0, 1.0, 0.0, 1.0, 1.0])).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.distance_to_boundary(0).unwrap(), 0.0);
        assert!(g.boundary_nodes(0).contains(&g.singularity()));
    }

    #[test]
    fn distance_to_boundary_matches_radius() {
        let g = MetricGraph::build_default(&dev([1.0, 1.0, 1.0, 1.0, 2.0, 3.0])).unwrap();
        let d = g.distances_to_boundaries().unwrap();
        for (i, r) in [1.0, 2.0, 3.0].into_iter().enumerate() {
            assert!(relative_error(d[i], r) <= 0.05, "boundary {i}: {}", d[i]);
        }
    }

    #[test]
    fn symmetric_distances_agree() {
        let g = MetricGraph::build_default(&dev([1.0; 6])).unwrap();
        let d = g.distances_to_boundaries().unwrap();
        let (lo, hi) = (
            d.iter().cloned().fold(f64::INFINITY, f64::min),
            d.iter().cloned().fold(0.0, f64::max),
        );
        assert!(hi / lo - 1.0 <= 0.01);
        let a1 = g.distance_between_boundaries(1, 2).unwrap();
        assert!(relative_error(a1, 2.0) <= 0.05);
    }

    #[test]
    fn boundary_to_boundary_passes_the_cone_point() {
        let p = lr([4.0, 4.0, 4.0, 3.0, 2.0, 1.0]);
        let g = MetricGraph::build_default(&Development::build(&p).unwrap()).unwrap();
        let d12 = g.distance_between_boundaries(0, 1).unwrap();
        assert!(relative_error(d12, 5.0) <= 0.05);
        assert!(relative_error(d12, declared_boundary_distance(&p, 2)) <= 0.05);
    }

    #[test]
    fn same_boundary_is_refused() {
        let g = MetricGraph::build_default(&dev([1.0; 6])).unwrap();
        assert!(matches!(
            g.distance_between_boundaries(1, 1),
            Err(Error::BoundaryIndex(2, 2))
        ));
        assert!(g.distance_between_boundaries(0, 3).is_err());
    }

    #[test]
    fn graph_metric_triangle_inequality() {
        let g = MetricGraph::build(&dev([3.0, 4.0, 5.0, 1.0, 0.5, 2.0]), 0.1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (x, y) = (
                rng.random_range(0..g.node_count()),
                rng.random_range(0..g.node_count()),
            );
            let dx = g.distances_from(&[x]);
            let dy = g.distances_from(&[y]);
            for z in 0..g.node_count() {
                assert!(dx[z] <= dx[y] + dy[z] + 1e-12);
            }
        }
    }

    #[test]
    fn edge_weights_positive() {
        let g = MetricGraph::build_default(&dev([2.0, 1.0, 1.0, 1.0, 1.0, 1.0])).unwrap();
        assert!(g.weights.iter().all(|&w| w > 0.0));
        assert!(g.is_connected());
    }

    #[test]
    fn structure_distance_identity_and_symmetry() {
        let p = lr([1.0; 6]);
        let q = lr([1.0, 1.0, 1.0, 1.0, 1.0, 1.1]);
        assert_eq!(structure_distance(&p, &p, 32, 3).unwrap(), 0.0);
        let pq = structure_distance(&p, &q, 32, 3).unwrap();
        let qp = structure_distance(&q, &p, 32, 3).unwrap();
        assert_eq!(pq, qp);
        assert!(pq > 0.0 && pq <= 0.2 + 0.05, "{pq}");
    }

    #[test]
    fn structure_distance_type_mismatch() {
        let p = lr([1.0; 6]);
        let q = lr([1.0, 1.0, 1.0, 0.0, 1.0, 1.0]);
        assert!(matches!(
            structure_distance(&p, &q, 8, 0),
            Err(Error::TypeMismatch(_))
        ));
        assert!(structure_distance(&p, &p, 0, 0).is_err());
    }

    #[test]
    fn reweighted_graph_with_same_development_is_identical() {
        let d = dev([3.0, 4.0, 5.0, 1.0, 0.5, 2.0]);
        let g = MetricGraph::build(&d, 0.1).unwrap();
        let h = g.reweighted(&d).unwrap();
        assert_eq!(g.weights, h.weights);
    }
}
