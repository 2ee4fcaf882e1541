//! Centralized numeric tolerances. All geometric and algebraic thresholds
//! derive from one relative tolerance scaled by the diameter of the boundary
//! placement, so a drawing in millimetres and one in kilometres behave the
//! same.

/// Relative tolerance configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance; thresholds are `relative * max(scale, 1)`.
    pub relative: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { relative: 1e-9 }
    }
}

impl Tolerances {
    pub fn new(relative: f64) -> Self {
        Tolerances { relative }
    }

    /// Absolute threshold for a drawing of the given scale (diameter of the
    /// boundary polygon). Scales below 1 are clamped so that degenerate
    /// placements do not produce a zero threshold.
    pub fn absolute(&self, scale: f64) -> f64 {
        self.relative * scale.max(1.0)
    }
}

/// Diameter of a point set: the largest pairwise distance.
pub fn scale_of<I: IntoIterator<Item = (f64, f64)>>(points: I) -> f64 {
    let pts: Vec<(f64, f64)> = points.into_iter().collect();
    let mut best = 0.0f64;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let (dx, dy) = (pts[i].0 - pts[j].0, pts[i].1 - pts[j].1);
            best = best.max((dx * dx + dy * dy).sqrt());
        }
    }
    best
}
