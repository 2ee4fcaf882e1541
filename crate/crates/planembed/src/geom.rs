//! Tolerance-aware planar predicates: orientation tests, segment
//! intersection and overlap classification, and point-in-polygon tests.
//! All thresholds are absolute values derived from the drawing scale by the
//! caller.

pub type Point = (f64, f64);

pub fn dist(a: Point, b: Point) -> f64 {
    ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
}

/// Twice the signed area of triangle a, b, c; positive for a left turn.
pub fn cross(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Signed area of a polygon (positive when counterclockwise).
pub fn signed_area(poly: &[Point]) -> f64 {
    let n = poly.len();
    let mut acc = 0.0;
    for i in 0..n {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % n];
        acc += x1 * y2 - x2 * y1;
    }
    acc / 2.0
}

/// Distance from point p to segment a-b.
pub fn dist_point_segment(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0);
    dist(p, (a.0 + t * dx, a.1 + t * dy))
}

/// How two segment images relate, up to the absolute tolerance `tol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegRelation {
    /// Relative interiors disjoint beyond doubt.
    Disjoint,
    /// The segments properly cross: interior point in common.
    Crossing,
    /// Collinear with a common sub-segment longer than `tol`.
    Overlap,
    /// Within `tol` of a degenerate configuration the sign tests cannot
    /// certify either way; reported for diagnosis, not counted as a failure.
    Suspect,
}

/// Classify two segments that do NOT share a combinatorial endpoint.
pub fn classify_segments(p1: Point, p2: Point, q1: Point, q2: Point, tol: f64) -> SegRelation {
    // Cross products scale like distance * segment length; normalize each
    // test by the base segment's length to compare against `tol`.
    let lp = dist(p1, p2).max(1e-300);
    let lq = dist(q1, q2).max(1e-300);
    let o1 = cross(p1, p2, q1) / lp;
    let o2 = cross(p1, p2, q2) / lp;
    let o3 = cross(q1, q2, p1) / lq;
    let o4 = cross(q1, q2, p2) / lq;

    let all_collinear =
        o1.abs() <= tol && o2.abs() <= tol && o3.abs() <= tol && o4.abs() <= tol;
    if all_collinear {
        // Project onto the longer segment's direction and compare intervals.
        let (a, b) = if lp >= lq { (p1, p2) } else { (q1, q2) };
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let len = (dx * dx + dy * dy).sqrt();
        let proj = |pt: Point| ((pt.0 - a.0) * dx + (pt.1 - a.1) * dy) / len;
        let (s1, s2) = (proj(p1).min(proj(p2)), proj(p1).max(proj(p2)));
        let (t1, t2) = (proj(q1).min(proj(q2)), proj(q1).max(proj(q2)));
        let common = s2.min(t2) - s1.max(t1);
        return if common > tol {
            SegRelation::Overlap
        } else if common > -tol {
            SegRelation::Suspect
        } else {
            SegRelation::Disjoint
        };
    }

    let strict_cross = o1 * o2 < 0.0 && o3 * o4 < 0.0;
    let same_side = |a: f64, b: f64| (a > tol && b > tol) || (a < -tol && b < -tol);
    let clearly_separated = same_side(o1, o2) || same_side(o3, o4);
    if strict_cross {
        let near_degenerate =
            o1.abs() <= tol || o2.abs() <= tol || o3.abs() <= tol || o4.abs() <= tol;
        return if near_degenerate { SegRelation::Suspect } else { SegRelation::Crossing };
    }
    if clearly_separated {
        SegRelation::Disjoint
    } else {
        // Signs do not certify a proper crossing but something sits within
        // tol of the other segment (an endpoint touching an interior, etc.).
        let touching = [q1, q2].iter().any(|&q| dist_point_segment(q, p1, p2) <= tol)
            || [p1, p2].iter().any(|&p| dist_point_segment(p, q1, q2) <= tol);
        if touching {
            SegRelation::Suspect
        } else {
            SegRelation::Disjoint
        }
    }
}

/// Classify two segments that share exactly one combinatorial endpoint
/// (`shared` is its image). Only collinear overlap is a violation: the free
/// ends must not fold back over each other.
pub fn classify_sharing_endpoint(
    shared: Point,
    p_free: Point,
    q_free: Point,
    tol: f64,
) -> SegRelation {
    let o = cross(shared, p_free, q_free) / dist(shared, p_free).max(1e-300);
    if o.abs() > tol {
        return SegRelation::Disjoint;
    }
    // Collinear: overlap iff both free ends extend to the same side.
    let dot = (p_free.0 - shared.0) * (q_free.0 - shared.0)
        + (p_free.1 - shared.1) * (q_free.1 - shared.1);
    if dot <= 0.0 {
        return SegRelation::Disjoint;
    }
    let common = dist(shared, p_free).min(dist(shared, q_free));
    if common > tol {
        SegRelation::Overlap
    } else {
        SegRelation::Suspect
    }
}

/// Ray-casting point-in-polygon test. Returns None when the point is within
/// `tol` of the polygon boundary (the caller should perturb and retry).
pub fn point_in_polygon(p: Point, poly: &[Point], tol: f64) -> Option<bool> {
    let n = poly.len();
    for i in 0..n {
        if dist_point_segment(p, poly[i], poly[(i + 1) % n]) <= tol {
            return None;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % n];
        if (y1 > p.1) != (y2 > p.1) {
            let xint = x1 + (p.1 - y1) / (y2 - y1) * (x2 - x1);
            if p.0 < xint {
                inside = !inside;
            }
        }
    }
    Some(inside)
}
