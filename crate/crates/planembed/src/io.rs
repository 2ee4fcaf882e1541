//! JSON file formats: graphs, coordinate sets, weight schemes. All maps are
//! emitted with sorted keys so identical inputs produce identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{OuterSpec, PlaneGraph, VertexId};
use crate::solver::WeightScheme;
use crate::validate::Coords;

/// On-disk graph format: vertex ids, counterclockwise rotation lists, and
/// the outer face as a counterclockwise vertex cycle.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub rotation: BTreeMap<String, Vec<String>>,
    pub outer_cycle: Vec<String>,
}

impl GraphJson {
    pub fn from_graph(g: &PlaneGraph) -> GraphJson {
        let outer: Vec<String> = match g.outer_cycle_ccw() {
            Ok(cycle) => cycle.iter().map(|&v| g.id(v).to_string()).collect(),
            // Non-simple outer boundary: emit the traced walk, reversed to
            // counterclockwise, without cycle normalization.
            Err(_) => {
                let mut walk: Vec<String> = g
                    .face(g.outer_face())
                    .vertex_cycle()
                    .iter()
                    .map(|&v| g.id(v).to_string())
                    .collect();
                walk.reverse();
                walk
            }
        };
        GraphJson {
            vertices: g.ids().to_vec(),
            rotation: (0..g.vertex_count())
                .map(|v| {
                    (
                        g.id(v).to_string(),
                        g.rotation(v).iter().map(|&w| g.id(w).to_string()).collect(),
                    )
                })
                .collect(),
            outer_cycle: outer,
        }
    }

    pub fn to_graph(&self) -> Result<PlaneGraph> {
        PlaneGraph::build_from_rotation(
            &self.vertices,
            &self.rotation,
            &OuterSpec::Cycle(self.outer_cycle.clone()),
        )
    }
}

/// On-disk coordinate format.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordsJson {
    pub coords: BTreeMap<String, [f64; 2]>,
}

impl CoordsJson {
    pub fn from_coords(g: &PlaneGraph, coords: &Coords) -> CoordsJson {
        CoordsJson {
            coords: coords
                .iter()
                .map(|(&v, &(x, y))| (g.id(v).to_string(), [x, y]))
                .collect(),
        }
    }

    pub fn to_coords(&self, g: &PlaneGraph) -> Result<Coords> {
        let mut out: Coords = BTreeMap::new();
        for (id, &[x, y]) in &self.coords {
            let v = g
                .index_of(id)
                .ok_or_else(|| Error::UnknownVertex(id.clone(), id.clone()))?;
            out.insert(v, (x, y));
        }
        for v in 0..g.vertex_count() {
            if !out.contains_key(&v) {
                return Err(Error::MissingCoordinate(g.id(v).to_string()));
            }
        }
        Ok(out)
    }
}

/// Output of the triangulate command: the supergraph plus the chords added.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulateJson {
    pub vertices: Vec<String>,
    pub rotation: BTreeMap<String, Vec<String>>,
    pub outer_cycle: Vec<String>,
    pub added_edges: Vec<[String; 2]>,
}

/// Weight file format: per internal vertex, its neighbour coefficients.
pub type WeightFile = BTreeMap<String, BTreeMap<String, f64>>;

pub fn weights_from_file(g: &PlaneGraph, raw: &WeightFile) -> Result<WeightScheme> {
    let mut rows: BTreeMap<VertexId, BTreeMap<VertexId, f64>> = BTreeMap::new();
    for (u_id, row) in raw {
        let u = g
            .index_of(u_id)
            .ok_or_else(|| Error::UnknownVertex(u_id.clone(), u_id.clone()))?;
        let mut converted = BTreeMap::new();
        for (v_id, &l) in row {
            let v = g
                .index_of(v_id)
                .ok_or_else(|| Error::UnknownVertex(u_id.clone(), v_id.clone()))?;
            converted.insert(v, l);
        }
        rows.insert(u, converted);
    }
    let scheme = WeightScheme { rows };
    scheme.validate(g)?;
    Ok(scheme)
}

pub fn weights_to_file(g: &PlaneGraph, w: &WeightScheme) -> WeightFile {
    w.rows
        .iter()
        .map(|(&u, row)| {
            (
                g.id(u).to_string(),
                row.iter().map(|(&v, &l)| (g.id(v).to_string(), l)).collect(),
            )
        })
        .collect()
}

/// Parse JSON with position context folded into the error message.
pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::ParseError(format!("{what}: {e} (line {}, column {})", e.line(), e.column())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn graph_round_trip() {
        for (name, g) in generate::named_instances() {
            let json = GraphJson::from_graph(&g);
            let text = serde_json::to_string_pretty(&json).unwrap();
            let back: GraphJson = parse_json(&text, "graph").unwrap();
            let g2 = back.to_graph().unwrap();
            assert_eq!(g.ids(), g2.ids(), "{name}");
            assert_eq!(g.edges(), g2.edges(), "{name}");
            assert_eq!(
                g.face_cycle_ids(g.outer_face()),
                g2.face_cycle_ids(g2.outer_face()),
                "{name}"
            );
            // Serialize → parse → serialize is byte-identical.
            let text2 = serde_json::to_string_pretty(&GraphJson::from_graph(&g2)).unwrap();
            assert_eq!(text, text2, "{name}");
        }
    }

    #[test]
    fn unknown_field_rejected() {
        let bad = r#"{"vertices":["a"],"rotation":{"a":[]},"outer_cycle":[],"extra":1}"#;
        assert!(matches!(
            parse_json::<GraphJson>(bad, "graph"),
            Err(Error::ParseError(_))
        ));
    }

    #[test]
    fn coords_round_trip_and_missing() {
        let g = generate::triangle();
        let coords: Coords =
            [(0, (0.0, 0.0)), (1, (1.0, 0.0)), (2, (0.0, 1.0))].into_iter().collect();
        let json = CoordsJson::from_coords(&g, &coords);
        assert_eq!(json.to_coords(&g).unwrap(), coords);

        let partial = CoordsJson {
            coords: [("a".to_string(), [0.0, 0.0])].into_iter().collect(),
        };
        assert!(matches!(partial.to_coords(&g), Err(Error::MissingCoordinate(_))));
    }

    #[test]
    fn weight_file_round_trip_and_validation() {
        let g = generate::wheel(4);
        let w = crate::solver::barycentric_weights(&g).unwrap();
        let file = weights_to_file(&g, &w);
        let back = weights_from_file(&g, &file).unwrap();
        assert_eq!(w, back);

        let mut bad = file.clone();
        bad.get_mut("hub").unwrap().insert("c000".to_string(), 2.0);
        assert!(matches!(
            weights_from_file(&g, &bad),
            Err(Error::InvalidWeightScheme(_))
        ));
    }
}
