//! Python bindings for the planembed toolkit.
//!
//! The module exposes a single `PlaneGraph` class. Structured reports cross
//! the boundary as JSON strings (parse them with `json.loads`); coordinates
//! cross as plain dicts.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use planembed::analysis;
use planembed::io::GraphJson;
use planembed::solver;
use planembed::tolerance::Tolerances;
use planembed::triangulate;
use planembed::validate;

fn err(e: planembed::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type PyCoords = BTreeMap<String, (f64, f64)>;

/// A plane-embedded graph: vertices, counterclockwise rotation system, and
/// a designated outer face.
#[pyclass(frozen)]
struct PlaneGraph {
    inner: planembed::PlaneGraph,
}

impl PlaneGraph {
    fn coords_in(&self, coords: &PyCoords) -> PyResult<validate::Coords> {
        let g = &self.inner;
        let mut out: validate::Coords = BTreeMap::new();
        for (id, &p) in coords {
            let v = g
                .index_of(id)
                .ok_or_else(|| PyValueError::new_err(format!("unknown vertex: {id}")))?;
            out.insert(v, p);
        }
        Ok(out)
    }

    fn coords_out(&self, coords: &validate::Coords) -> PyCoords {
        coords
            .iter()
            .map(|(&v, &p)| (self.inner.id(v).to_string(), p))
            .collect()
    }

    fn solve(
        &self,
        weights: &str,
        seed: u64,
        radius: f64,
        delta: f64,
    ) -> PyResult<solver::EmbeddingResult> {
        let g = &self.inner;
        let scheme = match weights {
            "barycentric" => solver::barycentric_weights(g).map_err(err)?,
            "random" => solver::random_weight_scheme(g, seed).map_err(err)?,
            other => {
                return Err(PyValueError::new_err(format!(
                    "weights must be 'barycentric' or 'random', got {other:?}"
                )))
            }
        };
        let cycle = g.outer_cycle_ccw().map_err(err)?;
        let placement = solver::regular_polygon_placement(&cycle, radius).map_err(err)?;
        if delta > 0.0 {
            let tri = triangulate::triangulate(g).map_err(err)?;
            solver::perturbed_map(g, &scheme, &placement, &tri, delta).map_err(err)
        } else {
            solver::convex_combination_map(g, &scheme, &placement).map_err(err)
        }
    }
}

#[pymethods]
impl PlaneGraph {
    /// Parse from the toolkit's graph JSON format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let json = planembed::io::parse_json::<GraphJson>(text, "graph").map_err(err)?;
        Ok(PlaneGraph { inner: json.to_graph().map_err(err)? })
    }

    /// One of the built-in named instances (e.g. "k4", "theta_graph").
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        planembed::generate::named_instances()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, g)| PlaneGraph { inner: g })
            .ok_or_else(|| PyValueError::new_err(format!("unknown instance: {name}")))
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphJson::from_graph(&self.inner)).unwrap()
    }

    fn vertices(&self) -> Vec<String> {
        self.inner.ids().to_vec()
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .iter()
            .map(|&(u, v)| (self.inner.id(u).to_string(), self.inner.id(v).to_string()))
            .collect()
    }

    fn is_biconnected(&self) -> bool {
        self.inner.is_biconnected()
    }

    fn is_nodally_3_connected(&self) -> bool {
        analysis::is_nodally_3connected(&self.inner).0
    }

    fn is_convex_embeddable(&self) -> bool {
        analysis::is_convex_embeddable(&self.inner).0
    }

    /// Full structure report as a JSON string.
    fn analyze(&self) -> String {
        serde_json::to_string_pretty(&analysis::analyze(&self.inner)).unwrap()
    }

    /// Triangulate every bounded face; returns (graph, added_edges).
    fn triangulate(&self) -> PyResult<(Self, Vec<(String, String)>)> {
        let tri = triangulate::triangulate(&self.inner).map_err(err)?;
        let added = tri
            .added_edges
            .iter()
            .map(|&(u, v)| (tri.graph.id(u).to_string(), tri.graph.id(v).to_string()))
            .collect();
        Ok((PlaneGraph { inner: tri.graph }, added))
    }

    /// Solve a convex combination map; returns {vertex: (x, y)}.
    #[pyo3(signature = (weights = "barycentric", seed = 0, radius = 1.0, delta = 0.0))]
    fn embed(&self, weights: &str, seed: u64, radius: f64, delta: f64) -> PyResult<PyCoords> {
        Ok(self.coords_out(&self.solve(weights, seed, radius, delta)?.coords))
    }

    /// Validation report for given coordinates, as a JSON string.
    #[pyo3(signature = (coords, tolerance = 1e-9))]
    fn validate(&self, coords: PyCoords, tolerance: f64) -> PyResult<String> {
        let c = self.coords_in(&coords)?;
        let report =
            validate::validate(&self.inner, &c, &Tolerances::new(tolerance)).map_err(err)?;
        Ok(serde_json::to_string_pretty(&report).unwrap())
    }

    /// True when the coordinates form a straight-line embedding.
    #[pyo3(signature = (coords, tolerance = 1e-9))]
    fn is_embedding(&self, coords: PyCoords, tolerance: f64) -> PyResult<bool> {
        let c = self.coords_in(&coords)?;
        Ok(validate::validate(&self.inner, &c, &Tolerances::new(tolerance))
            .map_err(err)?
            .is_embedding)
    }

    /// SVG rendering of the drawing.
    fn render_svg(&self, coords: PyCoords) -> PyResult<String> {
        let c = self.coords_in(&coords)?;
        for v in 0..self.inner.vertex_count() {
            if !c.contains_key(&v) {
                return Err(PyValueError::new_err(format!(
                    "missing coordinate for vertex: {}",
                    self.inner.id(v)
                )));
            }
        }
        Ok(planembed::svg::render(&self.inner, &c))
    }

    fn __repr__(&self) -> String {
        format!(
            "PlaneGraph({} vertices, {} edges, {} faces)",
            self.inner.vertex_count(),
            self.inner.edges().len(),
            self.inner.faces().len()
        )
    }
}

/// Names of the built-in example instances.
#[pyfunction]
fn named_instances() -> Vec<String> {
    planembed::generate::named_instances()
        .into_iter()
        .map(|(n, _)| n.to_string())
        .collect()
}

#[pymodule]
fn planembed_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PlaneGraph>()?;
    m.add_function(wrap_pyfunction!(named_instances, m)?)?;
    Ok(())
}
