//! Convex combination maps: weight schemes, boundary placements, the linear
//! system whose solution places every internal vertex at the weighted average
//! of its neighbours, and the perturbed maps obtained by blending in a
//! triangulation of the graph.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{PlaneGraph, VertexId};
use crate::tolerance::{scale_of, Tolerances};
use crate::triangulate::TriangulationResult;

/// Convex combination coefficients. Only internal-vertex rows are stored;
/// every external vertex implicitly has the identity row (coefficient 1 on
/// itself). For each stored row: coefficients are positive exactly on the
/// vertex's neighbours and sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightScheme {
    pub rows: BTreeMap<VertexId, BTreeMap<VertexId, f64>>,
}

impl WeightScheme {
    /// Validate against a graph: rows exactly for internal vertices, support
    /// exactly the neighbour set, positive entries, unit row sums.
    pub fn validate(&self, g: &PlaneGraph) -> Result<()> {
        let internal: BTreeSet<VertexId> = g.internal_vertices().into_iter().collect();
        let keys: BTreeSet<VertexId> = self.rows.keys().copied().collect();
        if keys != internal {
            return Err(Error::InvalidWeightScheme(
                "rows must cover exactly the internal vertices".into(),
            ));
        }
        for (&u, row) in &self.rows {
            let nbrs: BTreeSet<VertexId> = g.rotation(u).iter().copied().collect();
            let support: BTreeSet<VertexId> = row.keys().copied().collect();
            if support != nbrs {
                return Err(Error::InvalidWeightScheme(format!(
                    "row {} must have positive weight exactly on its neighbours",
                    g.id(u)
                )));
            }
            if row.values().any(|&l| l <= 0.0) {
                return Err(Error::InvalidWeightScheme(format!(
                    "row {} has a non-positive coefficient",
                    g.id(u)
                )));
            }
            let sum: f64 = row.values().sum();
            if (sum - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidWeightScheme(format!(
                    "row {} sums to {sum}, expected 1",
                    g.id(u)
                )));
            }
        }
        Ok(())
    }
}

/// Assignment of the outer cycle's vertices, in counterclockwise cyclic
/// order, to the corners of a convex polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPlacement {
    /// Outer-cycle vertices in counterclockwise order.
    pub cycle: Vec<VertexId>,
    /// Corner for each cycle vertex, same order.
    pub points: Vec<(f64, f64)>,
    /// Set when three consecutive corners are collinear: accepted, since a
    /// convex polygon with flat corners is still convex, but flagged.
    pub collinear_warning: bool,
}

impl BoundaryPlacement {
    /// Build and validate: at least 3 corners, all turns counterclockwise
    /// (left or straight). Right turns reject the placement.
    pub fn new(cycle: Vec<VertexId>, points: Vec<(f64, f64)>) -> Result<BoundaryPlacement> {
        if cycle.len() < 3 {
            return Err(Error::CycleTooShort(cycle.len()));
        }
        if cycle.len() != points.len() {
            return Err(Error::PlacementMismatch(format!(
                "{} cycle vertices but {} points",
                cycle.len(),
                points.len()
            )));
        }
        let n = points.len();
        let eps = Tolerances::default().absolute(scale_of(points.iter().copied()));
        let mut collinear = false;
        for i in 0..n {
            let a = points[i];
            let b = points[(i + 1) % n];
            let c = points[(i + 2) % n];
            let cross = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
            if cross < -eps {
                return Err(Error::PlacementMismatch(
                    "boundary corners must form a convex polygon in counterclockwise order"
                        .into(),
                ));
            }
            if cross <= eps {
                collinear = true;
            }
        }
        Ok(BoundaryPlacement { cycle, points, collinear_warning: collinear })
    }

    /// Diameter of the corner polygon.
    pub fn scale(&self) -> f64 {
        scale_of(self.points.iter().copied())
    }

    pub fn point_of(&self, v: VertexId) -> Option<(f64, f64)> {
        self.cycle.iter().position(|&u| u == v).map(|i| self.points[i])
    }
}

/// The assembled system A·X = Bx, A·Y = By. Boundary vertices occupy the
/// first rows with identity equations; each internal row has 1 on the
/// diagonal and −λ on its neighbours.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub a: Vec<Vec<f64>>,
    pub bx: Vec<f64>,
    pub by: Vec<f64>,
    /// Row/column k corresponds to vertex order[k]; boundary first.
    pub order: Vec<VertexId>,
}

/// A solved drawing: coordinates per vertex, the inputs that produced it, and
/// the max-norm residual of the defining equations.
#[derive(Debug, Clone)]
pub struct EmbeddingResult {
    pub coords: BTreeMap<VertexId, (f64, f64)>,
    pub scheme: WeightScheme,
    pub placement: BoundaryPlacement,
    pub residual: f64,
}

/// Uniform weights: every internal vertex averages its neighbours equally.
pub fn barycentric_weights(g: &PlaneGraph) -> Result<WeightScheme> {
    g.outer_cycle_ccw()?;
    let rows = g
        .internal_vertices()
        .into_iter()
        .map(|u| {
            let d = g.degree(u) as f64;
            (u, g.rotation(u).iter().map(|&v| (v, 1.0 / d)).collect())
        })
        .collect();
    Ok(WeightScheme { rows })
}

/// Random positive weights, normalized per row; deterministic per seed.
pub fn random_weight_scheme(g: &PlaneGraph, seed: u64) -> Result<WeightScheme> {
    g.outer_cycle_ccw()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = g
        .internal_vertices()
        .into_iter()
        .map(|u| {
            let raw: Vec<(VertexId, f64)> =
                g.rotation(u).iter().map(|&v| (v, rng.gen_range(0.1..1.0))).collect();
            let sum: f64 = raw.iter().map(|(_, w)| w).sum();
            (u, raw.into_iter().map(|(v, w)| (v, w / sum)).collect())
        })
        .collect();
    Ok(WeightScheme { rows })
}

/// Corners of a regular polygon: vertex k at angle 2πk/n counterclockwise.
pub fn regular_polygon_placement(cycle: &[VertexId], radius: f64) -> Result<BoundaryPlacement> {
    if cycle.len() < 3 {
        return Err(Error::CycleTooShort(cycle.len()));
    }
    let n = cycle.len() as f64;
    let points: Vec<(f64, f64)> = (0..cycle.len())
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64) / n;
            (radius * th.cos(), radius * th.sin())
        })
        .collect();
    BoundaryPlacement::new(cycle.to_vec(), points)
}

/// Assemble the linear system for a graph, scheme, and placement. The
/// placement must list exactly the outer cycle, in cyclic order (any
/// starting point).
pub fn assemble_system(
    g: &PlaneGraph,
    w: &WeightScheme,
    p: &BoundaryPlacement,
) -> Result<LinearSystem> {
    let outer = g.outer_cycle_ccw()?;
    let n = outer.len();
    if p.cycle.len() != n {
        return Err(Error::PlacementMismatch(format!(
            "placement has {} corners, outer cycle has {n}",
            p.cycle.len()
        )));
    }
    let shift = p
        .cycle
        .iter()
        .position(|&v| v == outer[0])
        .ok_or_else(|| Error::PlacementMismatch("placement misses an outer vertex".into()))?;
    for (i, &v) in outer.iter().enumerate() {
        if p.cycle[(shift + i) % n] != v {
            return Err(Error::PlacementMismatch(
                "placement order does not follow the outer cycle".into(),
            ));
        }
    }

    let mut order: Vec<VertexId> = outer.clone();
    order.extend(g.internal_vertices());
    let m = order.len();
    let pos: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut a = vec![vec![0.0; m]; m];
    let mut bx = vec![0.0; m];
    let mut by = vec![0.0; m];
    for i in 0..n {
        a[i][i] = 1.0;
        let (x, y) = p.points[(shift + i) % n];
        bx[i] = x;
        by[i] = y;
    }
    for i in n..m {
        let u = order[i];
        let row = w
            .rows
            .get(&u)
            .ok_or_else(|| Error::InvalidWeightScheme(format!("missing row for {}", g.id(u))))?;
        a[i][i] = 1.0;
        for (&v, &l) in row {
            a[i][pos[&v]] -= l;
        }
    }
    Ok(LinearSystem { a, bx, by, order })
}

/// Solve both right-hand sides by Gaussian elimination with partial
/// pivoting. A vanishing pivot signals a structurally singular system,
/// which for a valid scheme means the underlying graph was disconnected.
pub fn solve(sys: &LinearSystem) -> Result<(Vec<f64>, Vec<f64>)> {
    let m = sys.order.len();
    let mut a = sys.a.clone();
    let mut bx = sys.bx.clone();
    let mut by = sys.by.clone();
    for col in 0..m {
        let (piv, piv_val) = (col..m)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if piv_val < 1e-12 {
            return Err(Error::SingularSystem);
        }
        a.swap(col, piv);
        bx.swap(col, piv);
        by.swap(col, piv);
        for r in (col + 1)..m {
            let factor = a[r][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            let (upper, lower) = a.split_at_mut(r);
            for (dst, &src) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *dst -= factor * src;
            }
            bx[r] -= factor * bx[col];
            by[r] -= factor * by[col];
        }
    }
    let mut x = vec![0.0; m];
    let mut y = vec![0.0; m];
    for r in (0..m).rev() {
        let sx: f64 = ((r + 1)..m).map(|c| a[r][c] * x[c]).sum();
        let sy: f64 = ((r + 1)..m).map(|c| a[r][c] * y[c]).sum();
        x[r] = (bx[r] - sx) / a[r][r];
        y[r] = (by[r] - sy) / a[r][r];
    }
    Ok((x, y))
}

fn residual(sys: &LinearSystem, x: &[f64], y: &[f64]) -> f64 {
    let m = sys.order.len();
    let mut worst = 0.0f64;
    for r in 0..m {
        let rx: f64 = (0..m).map(|c| sys.a[r][c] * x[c]).sum::<f64>() - sys.bx[r];
        let ry: f64 = (0..m).map(|c| sys.a[r][c] * y[c]).sum::<f64>() - sys.by[r];
        worst = worst.max(rx.abs()).max(ry.abs());
    }
    worst
}

/// Solve the convex combination map: boundary vertices at their placement
/// corners, every internal vertex at the λ-weighted average of its
/// neighbours.
pub fn convex_combination_map(
    g: &PlaneGraph,
    w: &WeightScheme,
    p: &BoundaryPlacement,
) -> Result<EmbeddingResult> {
    let sys = assemble_system(g, w, p)?;
    let (x, y) = solve(&sys)?;
    let res = residual(&sys, &x, &y);
    let coords: BTreeMap<VertexId, (f64, f64)> =
        sys.order.iter().enumerate().map(|(i, &v)| (v, (x[i], y[i]))).collect();
    Ok(EmbeddingResult { coords, scheme: w.clone(), placement: p.clone(), residual: res })
}

/// Blend a weight scheme toward a triangulation: each internal vertex whose
/// neighbourhood grew keeps fraction (1−δ) of its original coefficients and
/// spreads δ uniformly over the added neighbours; vertices with unchanged
/// neighbourhoods keep their row verbatim. External rows stay identity for
/// every δ.
pub fn perturbed_scheme(
    g: &PlaneGraph,
    w: &WeightScheme,
    tri: &TriangulationResult,
    delta: f64,
) -> Result<WeightScheme> {
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::InvalidDelta(delta));
    }
    let gt = &tri.graph;
    let mut rows: BTreeMap<VertexId, BTreeMap<VertexId, f64>> = BTreeMap::new();
    for u in g.internal_vertices() {
        let ut = gt.index_of(g.id(u)).expect("triangulation preserves vertices");
        let gamma: BTreeSet<&str> = g.rotation(u).iter().map(|&v| g.id(v)).collect();
        let gamma_prime: BTreeSet<&str> = gt.rotation(ut).iter().map(|&v| gt.id(v)).collect();
        let added: Vec<&str> = gamma_prime.difference(&gamma).copied().collect();
        let original = &w.rows[&u];
        let mut row: BTreeMap<VertexId, f64> = BTreeMap::new();
        if added.is_empty() {
            for (&v, &l) in original {
                row.insert(gt.index_of(g.id(v)).unwrap(), l);
            }
        } else {
            for (&v, &l) in original {
                row.insert(gt.index_of(g.id(v)).unwrap(), (1.0 - delta) * l);
            }
            let share = delta / added.len() as f64;
            for v in added {
                row.insert(gt.index_of(v).unwrap(), share);
            }
        }
        rows.insert(ut, row);
    }
    Ok(WeightScheme { rows })
}

/// The perturbed map f^δ: solve the blended scheme on the triangulated
/// supergraph and restrict the coordinates to the original graph's vertices
/// (the vertex sets coincide; only the edge set differs).
pub fn perturbed_map(
    g: &PlaneGraph,
    w: &WeightScheme,
    p: &BoundaryPlacement,
    tri: &TriangulationResult,
    delta: f64,
) -> Result<EmbeddingResult> {
    let scheme = perturbed_scheme(g, w, tri, delta)?;
    let gt = &tri.graph;
    // Same id set, hence same indices; the placement transfers directly.
    let placement = BoundaryPlacement {
        cycle: p.cycle.iter().map(|&v| gt.index_of(g.id(v)).unwrap()).collect(),
        points: p.points.clone(),
        collinear_warning: p.collinear_warning,
    };
    let solved = convex_combination_map(gt, &scheme, &placement)?;
    let coords: BTreeMap<VertexId, (f64, f64)> = solved
        .coords
        .iter()
        .map(|(&vt, &pt)| (g.index_of(gt.id(vt)).unwrap(), pt))
        .collect();
    Ok(EmbeddingResult {
        coords,
        scheme,
        placement: p.clone(),
        residual: solved.residual,
    })
}

/// Max distance between two drawings of the same vertex set.
pub fn max_displacement(
    a: &BTreeMap<VertexId, (f64, f64)>,
    b: &BTreeMap<VertexId, (f64, f64)>,
) -> f64 {
    a.iter()
        .map(|(v, &(x1, y1))| {
            let (x2, y2) = b[v];
            ((x1 - x2).powi(2) + (y1 - y2).powi(2)).sqrt()
        })
        .fold(0.0, f64::max)
}
