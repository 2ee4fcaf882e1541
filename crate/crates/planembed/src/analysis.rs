//! Structural analysis of plane graphs: nodal 3-connectivity (criterion and
//! brute-force oracle), convex embeddability, inverted subgraphs, and the
//! chord diagnostic for triangulated graphs.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components_excluding, edge, FaceId, PlaneGraph, Subgraph, VertexId};

/// Default size cap for the exhaustive witness oracle: subsets of deleted-pair
/// components times vertex pairs stays well under 10^6 at 16 vertices.
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// A certificate that a graph is not nodally 3-connected: the graph splits as
/// H ∪ K with H ∩ K = two vertices `{u, v}` and no edges, where neither side
/// is a simple path and neither is the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub h: Subgraph,
    pub k: Subgraph,
    pub u: VertexId,
    pub v: VertexId,
}

/// A bounded face that meets both endpoints of an external edge without being
/// incident to the edge itself; such configurations obstruct convex
/// embeddability even when the graph is nodally 3-connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertedSubgraph {
    pub external_edge: (VertexId, VertexId),
    pub blocking_face: FaceId,
    /// Everything enclosed between the blocking face's boundary and the
    /// external edge, on the edge's side.
    pub region: Subgraph,
}

/// Why the nodal 3-connectivity criterion failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodalFinding {
    NotBiconnected,
    /// First face pair (in deterministic order) with a disconnected boundary
    /// intersection.
    DisconnectedPair(FaceId, FaceId),
}

/// Combined structural report, serialized with stable field names.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub biconnected: bool,
    pub faces_simple: bool,
    pub nodally_3_connected: bool,
    pub convex_embeddable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_face_pair: Option<[Vec<String>; 2]>,
    pub inverted_subgraphs: Vec<InvertedSubgraphReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvertedSubgraphReport {
    pub external_edge: [String; 2],
    pub blocking_face: Vec<String>,
    pub region_vertices: Vec<String>,
    pub region_edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub u: String,
    pub v: String,
    pub h_vertices: Vec<String>,
    pub h_edges: Vec<[String; 2]>,
    pub k_vertices: Vec<String>,
    pub k_edges: Vec<[String; 2]>,
}

fn edge_ids(g: &PlaneGraph, e: (VertexId, VertexId)) -> [String; 2] {
    [g.id(e.0).to_string(), g.id(e.1).to_string()]
}

fn subgraph_ids(g: &PlaneGraph, s: &Subgraph) -> (Vec<String>, Vec<[String; 2]>) {
    (
        s.vertices.iter().map(|&v| g.id(v).to_string()).collect(),
        s.edges.iter().map(|&e| edge_ids(g, e)).collect(),
    )
}

/// Nodal 3-connectivity criterion: biconnected and every pair of distinct
/// face boundaries (including the outer face) has a connected intersection.
/// Empty intersections count as connected. On failure, reports the reason
/// with the lexicographically first offending face pair (faces ordered by
/// their sorted vertex-id lists).
pub fn is_nodally_3connected(g: &PlaneGraph) -> (bool, Option<NodalFinding>) {
    if !g.is_biconnected() {
        return (false, Some(NodalFinding::NotBiconnected));
    }
    let mut order: Vec<FaceId> = (0..g.faces().len()).collect();
    order.sort_by_key(|&f| g.face_key(f));
    for i in 0..order.len() {
        for j in (i + 1)..order.len() {
            let (f1, f2) = (order[i], order[j]);
            if !g.face_intersection(f1, f2).is_connected() {
                return (false, Some(NodalFinding::DisconnectedPair(f1, f2)));
            }
        }
    }
    (true, None)
}

/// Exhaustive witness search with the default size cap.
pub fn find_witnesses_bruteforce(g: &PlaneGraph) -> Result<Option<Witness>> {
    find_witnesses_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)
}

/// Exhaustive witness search: for every vertex pair `{u, v}` and every proper
/// nonempty subset S of the components of G ∖ {u, v}, split the graph into
/// the side spanned by S ∪ {u, v} and the complement side. The edge `{u, v}`
/// (if present) is assigned wholly to one side, trying the complement side K
/// first and then H, so that the two sides intersect in exactly the vertices
/// u, v with no shared edges. Returns the first split where neither side is a
/// simple path and neither is the whole graph.
pub fn find_witnesses_bruteforce_with_cap(
    g: &PlaneGraph,
    cap: usize,
) -> Result<Option<Witness>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::InstanceTooLarge(n, cap));
    }
    let full = g.full_subgraph();
    for u in 0..n {
        for v in (u + 1)..n {
            let comps = components_excluding(g, &[u, v]);
            if comps.len() < 2 {
                continue;
            }
            let k = comps.len();
            // Proper nonempty subsets; skipping those containing the last
            // component halves the work without missing any split.
            for mask in 1u32..(1 << (k - 1)) {
                let mut side: BTreeSet<VertexId> = BTreeSet::from([u, v]);
                let mut other: BTreeSet<VertexId> = BTreeSet::from([u, v]);
                for (i, comp) in comps.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        side.extend(comp.iter().copied());
                    } else {
                        other.extend(comp.iter().copied());
                    }
                }
                let mut h = g.spanned_subgraph(&side);
                let mut kk = g.spanned_subgraph(&other);
                let uv = edge(u, v);
                let has_uv = g.has_edge(u, v);
                // Assignments of the shared edge: to K first, then to H.
                let assignments: &[(bool, bool)] =
                    if has_uv { &[(false, true), (true, false)] } else { &[(false, false)] };
                for &(in_h, in_k) in assignments {
                    if has_uv {
                        if in_h {
                            h.edges.insert(uv);
                        } else {
                            h.edges.remove(&uv);
                        }
                        if in_k {
                            kk.edges.insert(uv);
                        } else {
                            kk.edges.remove(&uv);
                        }
                    }
                    if h != full && kk != full && !h.is_simple_path() && !kk.is_simple_path() {
                        return Ok(Some(Witness { h: h.clone(), k: kk.clone(), u, v }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Find all inverted subgraphs: pairs (external edge e, bounded face F) where
/// both endpoints of e lie on the boundary of F but e itself does not.
///
/// The enclosed region is computed combinatorially: starting from the bounded
/// face incident to e, flood fill across face adjacencies, never crossing an
/// edge of ∂F and never entering the outer face; the region is the union of
/// the boundaries of the faces reached.
pub fn find_inverted_subgraphs(g: &PlaneGraph) -> Result<Vec<InvertedSubgraph>> {
    for f in 0..g.faces().len() {
        if !g.face_boundary_is_simple_cycle(f) {
            return Err(Error::FacesNotSimple(f));
        }
    }
    let external = g.external_edges();
    let edge_faces = g.edge_face_map();
    let mut found = Vec::new();
    let mut faces: Vec<FaceId> = g.bounded_faces().map(|f| f.id).collect();
    faces.sort_by_key(|&f| g.face_key(f));
    for &e in &external {
        for &f in &faces {
            let boundary_vertices = g.face(f).vertex_set();
            let boundary_edges = g.face(f).edge_set();
            if boundary_vertices.contains(&e.0)
                && boundary_vertices.contains(&e.1)
                && !boundary_edges.contains(&e)
            {
                // Flood fill on the e-side of ∂F.
                let start = *edge_faces[&e]
                    .iter()
                    .find(|&&x| x != g.outer_face())
                    .expect("an external edge borders exactly one bounded face");
                let mut seen = BTreeSet::from([start]);
                let mut stack = vec![start];
                while let Some(cur) = stack.pop() {
                    for &be in &g.face(cur).edge_set() {
                        if boundary_edges.contains(&be) {
                            continue;
                        }
                        for &nf in &edge_faces[&be] {
                            if nf != g.outer_face() && seen.insert(nf) {
                                stack.push(nf);
                            }
                        }
                    }
                }
                let mut region = Subgraph::default();
                for &rf in &seen {
                    region = region.union(&g.face_subgraph(rf));
                }
                found.push(InvertedSubgraph { external_edge: e, blocking_face: f, region });
            }
        }
    }
    Ok(found)
}

/// Convex embeddability: nonempty, every face boundary a simple cycle, every
/// pair of *bounded* face boundaries has a connected intersection, and no
/// inverted subgraphs.
pub fn is_convex_embeddable(g: &PlaneGraph) -> (bool, Vec<InvertedSubgraph>) {
    let faces_simple = (0..g.faces().len()).all(|f| g.face_boundary_is_simple_cycle(f));
    if !faces_simple {
        return (false, Vec::new());
    }
    let mut bounded: Vec<FaceId> = g.bounded_faces().map(|f| f.id).collect();
    bounded.sort_by_key(|&f| g.face_key(f));
    for i in 0..bounded.len() {
        for j in (i + 1)..bounded.len() {
            if !g.face_intersection(bounded[i], bounded[j]).is_connected() {
                return (false, Vec::new());
            }
        }
    }
    let inverted = find_inverted_subgraphs(g).expect("face simplicity already verified");
    let ok = inverted.is_empty();
    (ok, inverted)
}

/// Chord diagnostic for triangulated graphs: edges of a bounded triangle that
/// join two outer-boundary vertices without being outer edges themselves,
/// where the triangle's other two edges are not both external. For a
/// triangulated biconnected graph the returned list is empty exactly when the
/// graph is nodally 3-connected.
pub fn chord_diagnostic(g: &PlaneGraph) -> Result<Vec<(VertexId, VertexId)>> {
    for face in g.bounded_faces() {
        if face.edge_set().len() != 3 {
            return Err(Error::NotTriangulated(face.id, face.edge_set().len()));
        }
    }
    let ext_vertices = g.external_vertices();
    let ext_edges = g.external_edges();
    let mut chords = BTreeSet::new();
    for face in g.bounded_faces() {
        let edges: Vec<(VertexId, VertexId)> = face.edge_set().into_iter().collect();
        for &e in &edges {
            let is_chord =
                ext_vertices.contains(&e.0) && ext_vertices.contains(&e.1) && !ext_edges.contains(&e);
            if !is_chord {
                continue;
            }
            let others_all_external =
                edges.iter().filter(|&&o| o != e).all(|o| ext_edges.contains(o));
            if !others_all_external {
                chords.insert(e);
            }
        }
    }
    Ok(chords.into_iter().collect())
}

/// Full structural report: biconnectivity, face simplicity, nodal
/// 3-connectivity with the offending face pair, convex embeddability with
/// inverted subgraphs, and (for small non-nodally-3-connected instances) an
/// explicit witness.
pub fn analyze(g: &PlaneGraph) -> StructureReport {
    let biconnected = g.is_biconnected();
    let faces_simple = (0..g.faces().len()).all(|f| g.face_boundary_is_simple_cycle(f));
    let (nodal, finding) = is_nodally_3connected(g);
    let (convex, inverted) = is_convex_embeddable(g);
    let offending_face_pair = match finding {
        Some(NodalFinding::DisconnectedPair(f1, f2)) => Some([g.face_key(f1), g.face_key(f2)]),
        _ => None,
    };
    let witness = if !nodal && biconnected {
        find_witnesses_bruteforce(g).ok().flatten().map(|w| {
            let (hv, he) = subgraph_ids(g, &w.h);
            let (kv, ke) = subgraph_ids(g, &w.k);
            WitnessReport {
                u: g.id(w.u).to_string(),
                v: g.id(w.v).to_string(),
                h_vertices: hv,
                h_edges: he,
                k_vertices: kv,
                k_edges: ke,
            }
        })
    } else {
        None
    };
    StructureReport {
        biconnected,
        faces_simple,
        nodally_3_connected: nodal,
        convex_embeddable: convex,
        offending_face_pair,
        inverted_subgraphs: inverted
            .iter()
            .map(|inv| {
                let (rv, re) = subgraph_ids(g, &inv.region);
                InvertedSubgraphReport {
                    external_edge: edge_ids(g, inv.external_edge),
                    blocking_face: g.face_key(inv.blocking_face),
                    region_vertices: rv,
                    region_edges: re,
                }
            })
            .collect(),
        witness,
    }
}

/// Check a witness against its defining invariants. Used by tests and
/// report consumers to validate oracle output independently.
pub fn witness_is_valid(g: &PlaneGraph, w: &Witness) -> bool {
    let full = g.full_subgraph();
    let union = w.h.union(&w.k);
    let inter = w.h.intersection(&w.k);
    union == full
        && inter.vertices == BTreeSet::from([w.u, w.v])
        && inter.edges.is_empty()
        && w.h != full
        && w.k != full
        && !w.h.is_simple_path()
        && !w.k.is_simple_path()
}
