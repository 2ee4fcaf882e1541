//! Triangulation of plane embedded graphs: add chords until every bounded
//! face is a triangle, keeping all original vertices, edges, and the outer
//! boundary unchanged.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{edge, FaceId, OuterSpec, PlaneGraph, VertexId};

/// A triangulated supergraph G′ of G with V′ = V and E′ ⊇ E.
#[derive(Debug, Clone)]
pub struct TriangulationResult {
    pub graph: PlaneGraph,
    /// Chords added, in insertion order. Vertex indices are shared between
    /// the input and the output graph (same id set).
    pub added_edges: Vec<(VertexId, VertexId)>,
    /// For each original face id, the faces of G′ covering it. The outer
    /// face maps to the outer face of G′.
    pub face_map: Vec<Vec<FaceId>>,
}

/// Working state while chords are accumulated: id-keyed rotation lists plus
/// the growing edge set.
struct Builder {
    rot: BTreeMap<String, Vec<String>>,
    edges: BTreeSet<(VertexId, VertexId)>,
    added: Vec<(VertexId, VertexId)>,
    triangles: Vec<Vec<VertexId>>,
}

impl Builder {
    /// Add chord between positions i < j of the current sub-face cycle
    /// (counterclockwise). At each endpoint the partner goes into the
    /// rotation gap between the corner's cycle successor and predecessor:
    /// immediately before the predecessor.
    fn add_chord(&mut self, g: &PlaneGraph, cycle: &[VertexId], i: usize, j: usize) {
        let m = cycle.len();
        let (u, v) = (cycle[i], cycle[j]);
        let pred_u = g.id(cycle[(i + m - 1) % m]).to_string();
        let pred_v = g.id(cycle[(j + m - 1) % m]).to_string();
        insert_before(self.rot.get_mut(g.id(u)).unwrap(), &pred_u, g.id(v));
        insert_before(self.rot.get_mut(g.id(v)).unwrap(), &pred_v, g.id(u));
        self.edges.insert(edge(u, v));
        self.added.push(edge(u, v));
    }

    fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&edge(u, v))
    }

    /// Triangulate one sub-face given as a counterclockwise vertex cycle.
    /// Prefers a fan from the first apex whose fan chords are all new edges;
    /// otherwise splits off one valid diagonal and recurses on both parts.
    fn split(&mut self, g: &PlaneGraph, cycle: &[VertexId]) {
        let m = cycle.len();
        if m == 3 {
            self.triangles.push(cycle.to_vec());
            return;
        }
        // Fan apex: every chord (a, a+k), k = 2..m-1, must be a non-edge.
        let apex = (0..m).find(|&a| {
            (2..m - 1).all(|k| !self.has_edge(cycle[a], cycle[(a + k) % m]))
        });
        if let Some(a) = apex {
            let mut sub: Vec<VertexId> = (0..m).map(|k| cycle[(a + k) % m]).collect();
            while sub.len() > 3 {
                self.add_chord(g, &sub, 0, 2);
                self.triangles.push(vec![sub[0], sub[1], sub[2]]);
                sub.remove(1);
            }
            self.triangles.push(sub);
            return;
        }
        // Repair: one valid diagonal always exists on a face of length >= 4.
        let (i, j) = (0..m)
            .flat_map(|i| ((i + 2)..m).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == m - 1))
            .find(|&(i, j)| !self.has_edge(cycle[i], cycle[j]))
            .expect("a face of length >= 4 always admits a new diagonal");
        self.add_chord(g, cycle, i, j);
        let first: Vec<VertexId> = cycle[i..=j].to_vec();
        let second: Vec<VertexId> =
            cycle[j..].iter().chain(cycle[..=i].iter()).copied().collect();
        self.split(g, &first);
        self.split(g, &second);
    }
}

fn insert_before(list: &mut Vec<String>, before: &str, item: &str) {
    let pos = list.iter().position(|x| x == before).unwrap();
    list.insert(pos, item.to_string());
}

/// Triangulate every bounded face of a biconnected plane graph. The result
/// keeps the vertex set, all original edges (with their rotation order as a
/// subsequence), and the outer boundary; it is deterministic for its input.
pub fn triangulate(g: &PlaneGraph) -> Result<TriangulationResult> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let mut builder = Builder {
        rot: (0..g.vertex_count())
            .map(|v| {
                (
                    g.id(v).to_string(),
                    g.rotation(v).iter().map(|&w| g.id(w).to_string()).collect(),
                )
            })
            .collect(),
        edges: g.edges().clone(),
        added: Vec::new(),
        triangles: Vec::new(),
    };

    // Deterministic face order: lexicographic by sorted vertex-id key.
    let mut order: Vec<FaceId> = g.bounded_faces().map(|f| f.id).collect();
    order.sort_by_key(|&f| g.face_key(f));
    let mut pieces: BTreeMap<FaceId, Vec<Vec<VertexId>>> = BTreeMap::new();
    for &f in &order {
        let start = builder.triangles.len();
        builder.split(g, &g.face(f).vertex_cycle());
        pieces.insert(f, builder.triangles[start..].to_vec());
    }

    let outer_ids: Vec<String> =
        g.outer_cycle_ccw()?.iter().map(|&v| g.id(v).to_string()).collect();
    let ids: Vec<String> = g.ids().to_vec();
    let graph = PlaneGraph::build_from_rotation(&ids, &builder.rot, &OuterSpec::Cycle(outer_ids))?;

    // Map recorded triangles (and the outer face) to faces of G′ by vertex
    // set; bounded triangle faces are uniquely determined by their vertices.
    let mut by_set: BTreeMap<BTreeSet<VertexId>, FaceId> = BTreeMap::new();
    for face in graph.bounded_faces() {
        by_set.insert(face.vertex_set(), face.id);
    }
    let mut face_map: Vec<Vec<FaceId>> = vec![Vec::new(); g.faces().len()];
    for (f, tris) in &pieces {
        face_map[*f] = tris
            .iter()
            .map(|t| {
                let key: BTreeSet<VertexId> = t.iter().copied().collect();
                *by_set.get(&key).expect("every recorded triangle is a face of G'")
            })
            .collect();
    }
    face_map[g.outer_face()] = vec![graph.outer_face()];

    Ok(TriangulationResult { graph, added_edges: builder.added, face_map })
}

/// For each internal vertex u of g, its neighbour set Γ_u in g and Γ′_u in
/// the triangulated supergraph; always Γ′_u ⊇ Γ_u.
pub fn neighbour_deltas(
    g: &PlaneGraph,
    g_tri: &PlaneGraph,
) -> BTreeMap<VertexId, (BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    g.internal_vertices()
        .into_iter()
        .map(|u| {
            let gamma: BTreeSet<VertexId> = g.rotation(u).iter().copied().collect();
            let gamma_prime: BTreeSet<VertexId> = g_tri.rotation(u).iter().copied().collect();
            debug_assert!(gamma.is_subset(&gamma_prime));
            (u, (gamma, gamma_prime))
        })
        .collect()
}
