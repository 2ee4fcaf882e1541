//! Geometric validation of straight-line drawings: injectivity checks, face
//! image classification, covering numbers, and orientation.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{
    classify_segments, classify_sharing_endpoint, cross, dist, dist_point_segment,
    point_in_polygon, signed_area, Point, SegRelation,
};
use crate::graph::{PlaneGraph, VertexId};
use crate::tolerance::{scale_of, Tolerances};

pub type Coords = BTreeMap<VertexId, Point>;

/// What a bounded face's image looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceClass {
    Point,
    Segment,
    ConvexPolygon,
    Other,
}

/// Geometric findings for one drawing. `is_embedding` is decided purely by
/// injectivity: distinct vertex images, no collapsed edges, and pairwise
/// disjoint edge interiors. Convexity of faces and vertices sitting on edge
/// interiors are reported separately as diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub is_embedding: bool,
    pub degenerate_edges: Vec<[String; 2]>,
    pub coincident_vertex_pairs: Vec<[String; 2]>,
    pub crossing_or_overlapping_edge_pairs: Vec<[[String; 2]; 2]>,
    /// Pairs within tolerance of a degenerate configuration that the sign
    /// tests cannot certify; diagnostic only.
    pub suspect_edge_pairs: Vec<[[String; 2]; 2]>,
    /// Vertices lying on the interior of a non-incident edge; diagnostic.
    pub vertices_on_edge_interiors: Vec<(String, [String; 2])>,
    pub nonconvex_faces: Vec<Vec<String>>,
    /// Classification per bounded face, keyed by sorted vertex ids.
    pub face_classifications: Vec<(Vec<String>, FaceClass)>,
    pub covering_number_violations: Vec<CoveringViolation>,
    pub orientation_preserved: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoveringViolation {
    pub point: (f64, f64),
    /// Number of bounded face images containing the point; None when the
    /// sample could not be placed off all edges within the retry budget.
    pub count: Option<usize>,
}

fn get_coords(g: &PlaneGraph, coords: &Coords) -> Result<Vec<Point>> {
    (0..g.vertex_count())
        .map(|v| coords.get(&v).copied().ok_or_else(|| Error::MissingCoordinate(g.id(v).into())))
        .collect()
}

/// Classify the image of a bounded face boundary: a point, a segment, a
/// simple convex polygon (after collapsing coincident corners and straight
/// continuations), or anything else.
pub fn classify_face_image(boundary: &[Point], tol: f64) -> FaceClass {
    let n = boundary.len();
    if n == 0 {
        return FaceClass::Other;
    }
    // Point: everything within tol of the first corner.
    if boundary.iter().all(|&p| dist(p, boundary[0]) <= tol) {
        return FaceClass::Point;
    }
    // Segment: all corners within tol of the line through the two farthest
    // points, with positive extent.
    let (mut ai, mut bi) = (0, 0);
    let mut best = -1.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let d = dist(boundary[i], boundary[j]);
            if d > best {
                best = d;
                ai = i;
                bi = j;
            }
        }
    }
    let (a, b) = (boundary[ai], boundary[bi]);
    if boundary.iter().all(|&p| dist_point_segment(p, a, b) <= tol) {
        return FaceClass::Segment;
    }
    // Distill corners: drop coincident consecutive points, then collapse
    // straight continuations; a fold-back (reflex of angle π) makes the
    // boundary non-simple, hence Other.
    let mut pts: Vec<Point> = Vec::new();
    for &p in boundary {
        if pts.last().is_none_or(|&q| dist(p, q) > tol) {
            pts.push(p);
        }
    }
    while pts.len() > 1 && dist(pts[0], *pts.last().unwrap()) <= tol {
        pts.pop();
    }
    let mut corners: Vec<Point> = Vec::new();
    let m = pts.len();
    for i in 0..m {
        let prev = pts[(i + m - 1) % m];
        let cur = pts[i];
        let next = pts[(i + 1) % m];
        let turn = cross(prev, cur, next) / dist(prev, cur).max(1e-300);
        if turn.abs() <= tol {
            let dot = (cur.0 - prev.0) * (next.0 - cur.0) + (cur.1 - prev.1) * (next.1 - cur.1);
            if dot > 0.0 {
                continue; // straight continuation: not a corner
            }
            return FaceClass::Other; // fold-back spike
        }
        corners.push(cur);
    }
    if corners.len() < 3 {
        return FaceClass::Other;
    }
    // Convex and simple: every turn strictly left and exactly one full
    // counterclockwise revolution.
    let k = corners.len();
    let mut total_turn = 0.0;
    for i in 0..k {
        let prev = corners[(i + k - 1) % k];
        let cur = corners[i];
        let next = corners[(i + 1) % k];
        if cross(prev, cur, next) <= 0.0 {
            return FaceClass::Other;
        }
        let v1 = (cur.0 - prev.0, cur.1 - prev.1);
        let v2 = (next.0 - cur.0, next.1 - cur.1);
        total_turn += (v1.0 * v2.1 - v1.1 * v2.0).atan2(v1.0 * v2.0 + v1.1 * v2.1);
    }
    if (total_turn - 2.0 * std::f64::consts::PI).abs() < 1e-6 {
        FaceClass::ConvexPolygon
    } else {
        FaceClass::Other
    }
}

/// Orientation check: every bounded face's traced boundary must enclose
/// positive signed area, and so must the outer boundary taken
/// counterclockwise. Faces with vanishing area are an error, not a verdict.
pub fn orientation_check(g: &PlaneGraph, coords: &Coords) -> Result<bool> {
    let pts = get_coords(g, coords)?;
    let scale = scale_of(pts.iter().copied());
    let area_tol = Tolerances::default().absolute(scale) * scale.max(1.0);
    for face in g.bounded_faces() {
        let poly: Vec<Point> = face.vertex_cycle().iter().map(|&v| pts[v]).collect();
        let area = signed_area(&poly);
        if area.abs() <= area_tol {
            return Err(Error::DegenerateFace(face.id));
        }
        if area < 0.0 {
            return Ok(false);
        }
    }
    let outer: Vec<Point> = g.outer_cycle_ccw()?.iter().map(|&v| pts[v]).collect();
    let area = signed_area(&outer);
    if area.abs() <= area_tol {
        return Err(Error::DegenerateFace(g.outer_face()));
    }
    Ok(area > 0.0)
}

/// Full geometric validation of a drawing.
pub fn validate(g: &PlaneGraph, coords: &Coords, tolerances: &Tolerances) -> Result<ValidationReport> {
    let pts = get_coords(g, coords)?;
    let scale = scale_of(pts.iter().copied());
    let tol = tolerances.absolute(scale);
    let n = g.vertex_count();

    let mut coincident = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if dist(pts[u], pts[v]) <= tol {
                coincident.push([g.id(u).to_string(), g.id(v).to_string()]);
            }
        }
    }

    let edges: Vec<(VertexId, VertexId)> = g.edges().iter().copied().collect();
    let mut degenerate = Vec::new();
    for &(u, v) in &edges {
        if dist(pts[u], pts[v]) <= tol {
            degenerate.push([g.id(u).to_string(), g.id(v).to_string()]);
        }
    }

    let pair_ids = |e1: (VertexId, VertexId), e2: (VertexId, VertexId)| {
        [
            [g.id(e1.0).to_string(), g.id(e1.1).to_string()],
            [g.id(e2.0).to_string(), g.id(e2.1).to_string()],
        ]
    };
    let mut crossing = Vec::new();
    let mut suspect = Vec::new();
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let shared: Vec<VertexId> =
                [a, b].iter().copied().filter(|&x| x == c || x == d).collect();
            let rel = match shared.len() {
                2 => unreachable!("duplicate edge"),
                1 => {
                    let s = shared[0];
                    let p_free = if a == s { b } else { a };
                    let q_free = if c == s { d } else { c };
                    classify_sharing_endpoint(pts[s], pts[p_free], pts[q_free], tol)
                }
                _ => classify_segments(pts[a], pts[b], pts[c], pts[d], tol),
            };
            match rel {
                SegRelation::Crossing | SegRelation::Overlap => {
                    crossing.push(pair_ids(edges[i], edges[j]));
                }
                SegRelation::Suspect => suspect.push(pair_ids(edges[i], edges[j])),
                SegRelation::Disjoint => {}
            }
        }
    }

    let mut on_edge = Vec::new();
    for v in 0..n {
        for &(a, b) in &edges {
            if v == a || v == b {
                continue;
            }
            if dist_point_segment(pts[v], pts[a], pts[b]) <= tol {
                on_edge.push((g.id(v).to_string(), [g.id(a).to_string(), g.id(b).to_string()]));
            }
        }
    }

    let mut classifications = Vec::new();
    let mut nonconvex = Vec::new();
    for face in g.bounded_faces() {
        let poly: Vec<Point> = face.vertex_cycle().iter().map(|&v| pts[v]).collect();
        let class = classify_face_image(&poly, tol);
        if class != FaceClass::ConvexPolygon {
            nonconvex.push(g.face_key(face.id));
        }
        classifications.push((g.face_key(face.id), class));
    }

    let is_embedding = coincident.is_empty() && degenerate.is_empty() && crossing.is_empty();
    let orientation_preserved = matches!(orientation_check(g, coords), Ok(true));

    Ok(ValidationReport {
        is_embedding,
        degenerate_edges: degenerate,
        coincident_vertex_pairs: coincident,
        crossing_or_overlapping_edge_pairs: crossing,
        suspect_edge_pairs: suspect,
        vertices_on_edge_interiors: on_edge,
        nonconvex_faces: nonconvex,
        face_classifications: classifications,
        covering_number_violations: Vec::new(),
        orientation_preserved,
    })
}

/// Sample points inside the outer polygon and count, for each, the bounded
/// face images containing it; a valid embedding covers every interior point
/// exactly once. Samples landing within tolerance of an edge image are
/// perturbed and retried up to 8 times before being reported unresolved.
pub fn covering_number_check(
    g: &PlaneGraph,
    coords: &Coords,
    samples: usize,
    seed: u64,
    tolerances: &Tolerances,
) -> Result<Vec<CoveringViolation>> {
    let pts = get_coords(g, coords)?;
    let scale = scale_of(pts.iter().copied());
    let tol = tolerances.absolute(scale);
    let outer: Vec<Point> = g.outer_cycle_ccw()?.iter().map(|&v| pts[v]).collect();
    let (min_x, max_x) = outer.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| {
        (lo.min(p.0), hi.max(p.0))
    });
    let (min_y, max_y) = outer.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| {
        (lo.min(p.1), hi.max(p.1))
    });
    let faces: Vec<Vec<Point>> = g
        .bounded_faces()
        .map(|f| f.vertex_cycle().iter().map(|&v| pts[v]).collect())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let mut produced = 0usize;
    while produced < samples {
        // Rejection-sample a point strictly inside the outer polygon.
        let mut p = loop {
            let cand = (rng.gen_range(min_x..max_x), rng.gen_range(min_y..max_y));
            if point_in_polygon(cand, &outer, tol) == Some(true) {
                break cand;
            }
        };
        produced += 1;
        let mut decided: Option<usize> = None;
        'retry: for _attempt in 0..8 {
            let mut count = 0usize;
            for poly in &faces {
                match point_in_polygon(p, poly, tol) {
                    Some(true) => count += 1,
                    Some(false) => {}
                    None => {
                        // On an edge image: perturb and retry the sample.
                        p = (
                            p.0 + rng.gen_range(-16.0..16.0) * tol.max(1e-12 * scale.max(1.0)),
                            p.1 + rng.gen_range(-16.0..16.0) * tol.max(1e-12 * scale.max(1.0)),
                        );
                        if point_in_polygon(p, &outer, tol) != Some(true) {
                            p = (
                                rng.gen_range(min_x..max_x),
                                rng.gen_range(min_y..max_y),
                            );
                        }
                        continue 'retry;
                    }
                }
            }
            decided = Some(count);
            break;
        }
        match decided {
            Some(1) => {}
            Some(c) => violations.push(CoveringViolation { point: p, count: Some(c) }),
            None => violations.push(CoveringViolation { point: p, count: None }),
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::solver::{
        barycentric_weights, convex_combination_map, random_weight_scheme,
        regular_polygon_placement, BoundaryPlacement,
    };
    use crate::triangulate::triangulate;

    fn drawing(g: &PlaneGraph, pairs: &[(&str, (f64, f64))]) -> Coords {
        pairs.iter().map(|&(id, p)| (g.index_of(id).unwrap(), p)).collect()
    }

    #[test]
    fn unit_square_cycle_is_an_embedding() {
        let g = generate::cycle(4);
        let coords: Coords = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
            .iter()
            .enumerate()
            .map(|(i, &p)| (i, p))
            .collect();
        let r = validate(&g, &coords, &Tolerances::default()).unwrap();
        assert!(r.is_embedding);
        assert!(r.orientation_preserved);
        assert_eq!(r.face_classifications[0].1, FaceClass::ConvexPolygon);
    }

    #[test]
    fn missing_coordinate_rejected() {
        let g = generate::cycle(4);
        let coords: Coords = [(0, (0.0, 0.0))].into_iter().collect();
        assert!(matches!(
            validate(&g, &coords, &Tolerances::default()),
            Err(Error::MissingCoordinate(_))
        ));
    }

    #[test]
    fn collapse_instance_flagged() {
        let g = generate::two_squares();
        let w = barycentric_weights(&g).unwrap();
        let cycle: Vec<VertexId> =
            ["v1", "v2", "v3", "v4"].iter().map(|s| g.index_of(s).unwrap()).collect();
        let p = BoundaryPlacement::new(
            cycle,
            vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
        )
        .unwrap();
        let solved = convex_combination_map(&g, &w, &p).unwrap();
        let r = validate(&g, &solved.coords, &Tolerances::default()).unwrap();
        assert!(!r.is_embedding);
        // u2 and u4 coincide, so edges to them collapse pairwise and the
        // edge u2-u4... does not exist, but v1-u2/v1-u4 overlap.
        assert!(!r.coincident_vertex_pairs.is_empty());
        assert!(!r.crossing_or_overlapping_edge_pairs.is_empty());
        // The inner lens face (u2, u4, v1, v3) images to a segment.
        let lens_key = {
            let mut k: Vec<String> =
                ["u2", "u4", "v1", "v3"].iter().map(|s| s.to_string()).collect();
            k.sort();
            k
        };
        let class = r
            .face_classifications
            .iter()
            .find(|(k, _)| *k == lens_key)
            .map(|(_, c)| *c)
            .unwrap();
        assert_eq!(class, FaceClass::Segment);
    }

    #[test]
    fn floater_embeddings_validate_clean() {
        for seed in 0..5u64 {
            let g = generate::random_plane_graph(seed, 8);
            let tri = triangulate(&g).unwrap();
            let gt = &tri.graph;
            let w = random_weight_scheme(gt, seed + 100).unwrap();
            let p = regular_polygon_placement(&gt.outer_cycle_ccw().unwrap(), 1.0).unwrap();
            let solved = convex_combination_map(gt, &w, &p).unwrap();
            let r = validate(gt, &solved.coords, &Tolerances::default()).unwrap();
            assert!(r.is_embedding, "seed {seed}");
            assert!(r.nonconvex_faces.is_empty(), "seed {seed}: {:?}", r.nonconvex_faces);
            assert!(r.orientation_preserved, "seed {seed}");
            let viol =
                covering_number_check(gt, &solved.coords, 200, seed, &Tolerances::default())
                    .unwrap();
            assert!(viol.is_empty(), "seed {seed}: {viol:?}");
        }
    }

    #[test]
    fn folded_drawing_has_covering_violations() {
        // Two-squares instance with the inner path vertices swapped left to
        // right: the two outer quads fold over each other, so the band
        // between the inner paths is covered more than once.
        let g = generate::two_squares();
        let coords = drawing(
            &g,
            &[
                ("v1", (0.0, 0.0)),
                ("v2", (1.0, 0.0)),
                ("v3", (1.0, 1.0)),
                ("v4", (0.0, 1.0)),
                ("u2", (0.25, 0.5)),
                ("u4", (0.75, 0.5)),
            ],
        );
        let viol =
            covering_number_check(&g, &coords, 300, 3, &Tolerances::default()).unwrap();
        assert!(viol.iter().any(|v| v.count.is_some() && v.count != Some(1)));
    }

    #[test]
    fn face_classification_cases() {
        let tol = 1e-9;
        let tri = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)];
        assert_eq!(classify_face_image(&tri, tol), FaceClass::ConvexPolygon);
        let pt = [(0.5, 0.5), (0.5, 0.5), (0.5, 0.5)];
        assert_eq!(classify_face_image(&pt, tol), FaceClass::Point);
        let seg = [(0.0, 0.0), (1.0, 1.0), (0.5, 0.5), (0.25, 0.25)];
        assert_eq!(classify_face_image(&seg, tol), FaceClass::Segment);
        let reflex = [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (1.0, 0.5), (0.0, 2.0)];
        assert_eq!(classify_face_image(&reflex, tol), FaceClass::Other);
        // A square with one flat (collinear) corner is still convex.
        let flat = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)];
        assert_eq!(classify_face_image(&flat, tol), FaceClass::ConvexPolygon);
    }

    #[test]
    fn degenerate_face_error_from_orientation_check() {
        let g = generate::two_squares();
        let coords = drawing(
            &g,
            &[
                ("v1", (0.0, 0.0)),
                ("v2", (1.0, 0.0)),
                ("v3", (1.0, 1.0)),
                ("v4", (0.0, 1.0)),
                ("u2", (0.5, 0.5)),
                ("u4", (0.5, 0.5)),
            ],
        );
        assert!(matches!(
            orientation_check(&g, &coords),
            Err(Error::DegenerateFace(_))
        ));
    }

    #[test]
    fn theta_collinear_overlap_detected() {
        // x forced onto the segment a-b: edges a-x, x-b overlap edge a-b.
        let g = generate::theta_graph();
        let coords = drawing(
            &g,
            &[
                ("a", (0.0, 0.0)),
                ("b", (2.0, 0.0)),
                ("x", (1.0, 0.0)),
                ("y", (1.0, -1.0)),
            ],
        );
        let r = validate(&g, &coords, &Tolerances::default()).unwrap();
        assert!(!r.is_embedding);
        assert!(!r.crossing_or_overlapping_edge_pairs.is_empty());
        assert!(!r.vertices_on_edge_interiors.is_empty());
    }
}
