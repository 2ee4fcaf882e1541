//! Combinatorial plane-embedded graphs: rotation systems, face tracing,
//! classical connectivity, and face merging.
//!
//! A [`PlaneGraph`] stores a simple graph together with a counterclockwise
//! rotation system (the cyclic order of neighbours around each vertex) and a
//! designated unbounded face. Faces are traced combinatorially: from a dart
//! `(u, v)` the next dart is `(v, w)` where `w` immediately precedes `u` in
//! `rotation(v)`. With counterclockwise rotations this traces bounded faces
//! counterclockwise and the outer face clockwise.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Vertex index into a [`PlaneGraph`]. Ids are opaque strings; indices follow
/// the sorted id order so that reports are reproducible.
pub type VertexId = usize;
/// Face index into `PlaneGraph::faces()`.
pub type FaceId = usize;
/// Ordered vertex pair; `(u, v)` is the side of edge `{u,v}` traversed u→v.
pub type Dart = (VertexId, VertexId);

/// Normalize an edge to `(min, max)`.
pub fn edge(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A traced face boundary: a closed chain of darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Boundary darts; the head of each dart is the tail of the next.
    pub boundary: Vec<Dart>,
    pub is_outer: bool,
}

impl Face {
    /// Vertices visited by the boundary (deduplicated).
    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.boundary.iter().map(|d| d.0).collect()
    }

    /// Edges on the boundary (deduplicated; a bridge appears once).
    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.boundary.iter().map(|d| edge(d.0, d.1)).collect()
    }

    /// Boundary vertex sequence in traced order.
    pub fn vertex_cycle(&self) -> Vec<VertexId> {
        self.boundary.iter().map(|d| d.0).collect()
    }

    /// True iff the boundary visits no vertex twice.
    pub fn is_simple_cycle(&self) -> bool {
        self.vertex_set().len() == self.boundary.len()
    }
}

/// A subgraph as separate vertex and edge sets, with intersection semantics
/// that allow an edge to be present without its endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<(VertexId, VertexId)>,
}

impl Subgraph {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    /// All vertices that occur as an edge endpoint or as an explicit vertex.
    fn vertex_universe(&self) -> BTreeSet<VertexId> {
        let mut all = self.vertices.clone();
        for &(u, v) in &self.edges {
            all.insert(u);
            all.insert(v);
        }
        all
    }

    pub fn union(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
        }
    }

    /// Connectivity over the subgraph's own vertices and edges.
    /// The empty subgraph counts as connected (vacuously).
    pub fn is_connected(&self) -> bool {
        let all = self.vertex_universe();
        if all.is_empty() {
            return true;
        }
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &v in &all {
            adj.entry(v).or_default();
        }
        for &(u, v) in &self.edges {
            adj.get_mut(&u).unwrap().push(v);
            adj.get_mut(&v).unwrap().push(u);
        }
        let start = *all.iter().next().unwrap();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[&x] {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.len() == all.len()
    }

    /// Path-graph test: a trivial graph (one vertex, no edges), or a connected
    /// graph with exactly two vertices of degree 1 and all others of degree 2.
    /// The empty subgraph is not a path.
    pub fn is_simple_path(&self) -> bool {
        let all = self.vertex_universe();
        if all.is_empty() {
            return false;
        }
        if all.len() == 1 {
            return self.edges.is_empty();
        }
        if !self.is_connected() {
            return false;
        }
        let mut deg: BTreeMap<VertexId, usize> = all.iter().map(|&v| (v, 0)).collect();
        for &(u, v) in &self.edges {
            *deg.get_mut(&u).unwrap() += 1;
            *deg.get_mut(&v).unwrap() += 1;
        }
        let ones = deg.values().filter(|&&d| d == 1).count();
        let twos = deg.values().filter(|&&d| d == 2).count();
        ones == 2 && ones + twos == all.len()
    }

    /// Endpoints (degree-1 vertices), in sorted order, if this is a path
    /// with at least one edge.
    pub fn path_endpoints(&self) -> Option<(VertexId, VertexId)> {
        if !self.is_simple_path() || self.edges.is_empty() {
            return None;
        }
        let all = self.vertex_universe();
        let mut deg: BTreeMap<VertexId, usize> = all.iter().map(|&v| (v, 0)).collect();
        for &(u, v) in &self.edges {
            *deg.get_mut(&u).unwrap() += 1;
            *deg.get_mut(&v).unwrap() += 1;
        }
        let ends: Vec<VertexId> = deg.iter().filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
        Some((ends[0], ends[1]))
    }
}

/// How the caller designates the unbounded face at build time.
#[derive(Debug, Clone)]
pub enum OuterSpec {
    /// Index of a traced face (tracing order is deterministic).
    FaceIndex(FaceId),
    /// The outer boundary as a vertex cycle, matched up to rotation and
    /// reversal against traced face boundaries.
    Cycle(Vec<String>),
}

/// Result of [`PlaneGraph::euler_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub holds: bool,
}

/// A combinatorial plane embedding. Immutable after build; all operations are
/// pure functions of their inputs.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    ids: Vec<String>,
    index: BTreeMap<String, VertexId>,
    rotation: Vec<Vec<VertexId>>,
    edges: BTreeSet<(VertexId, VertexId)>,
    faces: Vec<Face>,
    outer_face: FaceId,
}

impl PlaneGraph {
    /// Build a validated plane graph from rotation lists.
    ///
    /// Rotation lists give each vertex's neighbours in counterclockwise
    /// geometric order. Isolated vertices (empty rotation) are allowed here
    /// but rejected by downstream checks that require biconnectivity.
    pub fn build_from_rotation(
        vertices: &[String],
        rotation_lists: &BTreeMap<String, Vec<String>>,
        outer_spec: &OuterSpec,
    ) -> Result<PlaneGraph> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut ids: Vec<String> = vertices.to_vec();
        ids.sort();
        ids.dedup();
        let index: BTreeMap<String, VertexId> =
            ids.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();

        let mut rotation: Vec<Vec<VertexId>> = vec![Vec::new(); ids.len()];
        for (u_id, nbrs) in rotation_lists {
            let u = *index
                .get(u_id)
                .ok_or_else(|| Error::UnknownVertex(u_id.clone(), u_id.clone()))?;
            let mut seen = BTreeSet::new();
            for v_id in nbrs {
                let v = *index
                    .get(v_id)
                    .ok_or_else(|| Error::UnknownVertex(u_id.clone(), v_id.clone()))?;
                if v == u {
                    return Err(Error::SelfLoop(u_id.clone()));
                }
                if !seen.insert(v) {
                    return Err(Error::DuplicateEdge(u_id.clone(), v_id.clone()));
                }
                rotation[u].push(v);
            }
        }
        // Rotation symmetry.
        for u in 0..ids.len() {
            for &v in &rotation[u] {
                if !rotation[v].contains(&u) {
                    return Err(Error::AsymmetricRotation(ids[v].clone(), ids[u].clone()));
                }
            }
        }
        let mut edges = BTreeSet::new();
        for (u, neighbours) in rotation.iter().enumerate() {
            for &v in neighbours {
                edges.insert(edge(u, v));
            }
        }

        let faces = trace_faces_raw(&rotation);
        let v = ids.len();
        let e = edges.len();
        let (components, f) = geometric_face_count(v, &edges, &faces);
        if v + f != e + components + 1 {
            return Err(Error::NonPlanarRotation { v, e, f, c: components });
        }

        let outer = match outer_spec {
            OuterSpec::FaceIndex(i) => {
                if *i >= faces.len() {
                    return Err(Error::OuterFaceNotFound);
                }
                *i
            }
            OuterSpec::Cycle(cycle_ids) => {
                let cycle: Option<Vec<VertexId>> =
                    cycle_ids.iter().map(|s| index.get(s).copied()).collect();
                let cycle = cycle.ok_or(Error::OuterFaceNotFound)?;
                find_face_by_cycle(&faces, &cycle)?
            }
        };

        let mut faces = faces;
        for (i, face) in faces.iter_mut().enumerate() {
            face.is_outer = i == outer;
        }
        Ok(PlaneGraph { ids, index, rotation, edges, faces, outer_face: outer })
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: VertexId) -> &str {
        &self.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Option<VertexId> {
        self.index.get(id).copied()
    }

    pub fn edges(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&edge(u, v))
    }

    /// Counterclockwise neighbour list of `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    pub fn bounded_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| !f.is_outer)
    }

    /// Vertices on the outer face boundary.
    pub fn external_vertices(&self) -> BTreeSet<VertexId> {
        self.faces[self.outer_face].vertex_set()
    }

    /// Edges on the outer face boundary.
    pub fn external_edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.faces[self.outer_face].edge_set()
    }

    /// Vertices not on the outer face boundary, in sorted order.
    pub fn internal_vertices(&self) -> Vec<VertexId> {
        let ext = self.external_vertices();
        (0..self.vertex_count()).filter(|v| !ext.contains(v)).collect()
    }

    /// The outer boundary as a counterclockwise vertex cycle (the reverse of
    /// the traced order, since the outer face is traced clockwise). Requires
    /// the outer boundary to be a simple cycle.
    pub fn outer_cycle_ccw(&self) -> Result<Vec<VertexId>> {
        let outer = &self.faces[self.outer_face];
        if !outer.is_simple_cycle() || outer.boundary.len() < 3 {
            return Err(Error::OuterNotSimpleCycle);
        }
        let mut cycle = outer.vertex_cycle();
        cycle.reverse();
        // Normalize to start at the smallest vertex.
        let min_pos = cycle
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        cycle.rotate_left(min_pos);
        Ok(cycle)
    }

    /// Euler's formula check: v - e + f = c + 1, where f counts geometric
    /// plane regions (the unbounded region once, however many components
    /// border it).
    pub fn euler_check(&self) -> EulerReport {
        let v = self.vertex_count();
        let e = self.edge_count();
        let (c, f) = geometric_face_count(v, &self.edges, &self.faces);
        EulerReport { vertices: v, edges: e, faces: f, components: c, holds: v + f == e + c + 1 }
    }

    pub fn is_connected(&self) -> bool {
        count_components(self.vertex_count(), &self.edges) == 1
    }

    /// Vertex-deletion biconnectivity. A single vertex or a single edge
    /// counts as biconnected.
    pub fn is_biconnected(&self) -> bool {
        let n = self.vertex_count();
        if n == 1 {
            return true;
        }
        if n == 2 {
            return self.edge_count() == 1;
        }
        if !self.is_connected() {
            return false;
        }
        (0..n).all(|x| {
            let edges: BTreeSet<_> = self
                .edges
                .iter()
                .filter(|&&(u, v)| u != x && v != x)
                .copied()
                .collect();
            count_components_excluding(n, &edges, &[x]) == 1
        })
    }

    /// Vertex-deletion triconnectivity: biconnected and no 2-vertex deletion
    /// disconnects. Graphs on fewer than 4 vertices are not triconnected.
    pub fn is_triconnected(&self) -> bool {
        let n = self.vertex_count();
        if n < 4 || !self.is_biconnected() {
            return false;
        }
        for x in 0..n {
            for y in (x + 1)..n {
                let edges: BTreeSet<_> = self
                    .edges
                    .iter()
                    .filter(|&&(u, v)| u != x && v != x && u != y && v != y)
                    .copied()
                    .collect();
                if count_components_excluding(n, &edges, &[x, y]) != 1 {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the face boundary visits no vertex twice.
    pub fn face_boundary_is_simple_cycle(&self, f: FaceId) -> bool {
        self.faces[f].is_simple_cycle()
    }

    /// Boundary intersection of two distinct faces, as vertex and edge sets.
    pub fn face_intersection(&self, f1: FaceId, f2: FaceId) -> Subgraph {
        assert_ne!(f1, f2, "face_intersection requires distinct faces");
        let a = &self.faces[f1];
        let b = &self.faces[f2];
        Subgraph {
            vertices: a.vertex_set().intersection(&b.vertex_set()).copied().collect(),
            edges: a.edge_set().intersection(&b.edge_set()).copied().collect(),
        }
    }

    /// Boundary of a face as a [`Subgraph`].
    pub fn face_subgraph(&self, f: FaceId) -> Subgraph {
        Subgraph { vertices: self.faces[f].vertex_set(), edges: self.faces[f].edge_set() }
    }

    /// Subgraph spanned by a vertex set.
    pub fn spanned_subgraph(&self, vs: &BTreeSet<VertexId>) -> Subgraph {
        Subgraph {
            vertices: vs.clone(),
            edges: self
                .edges
                .iter()
                .filter(|&&(u, v)| vs.contains(&u) && vs.contains(&v))
                .copied()
                .collect(),
        }
    }

    /// The whole graph as a [`Subgraph`].
    pub fn full_subgraph(&self) -> Subgraph {
        Subgraph { vertices: (0..self.vertex_count()).collect(), edges: self.edges.clone() }
    }

    /// For each edge, the one or two faces it borders, in face-id order.
    pub fn edge_face_map(&self) -> BTreeMap<(VertexId, VertexId), Vec<FaceId>> {
        let mut map: BTreeMap<(VertexId, VertexId), Vec<FaceId>> = BTreeMap::new();
        for face in &self.faces {
            for &(u, v) in &face.boundary {
                let entry = map.entry(edge(u, v)).or_default();
                if !entry.contains(&face.id) {
                    entry.push(face.id);
                }
            }
        }
        map
    }

    /// Merge two bounded faces whose boundary intersection is a simple path,
    /// removing the path's edges and inner vertices. The outer boundary is
    /// unchanged.
    pub fn merge_faces(&self, f1: FaceId, f2: FaceId) -> Result<PlaneGraph> {
        assert!(f1 != f2, "merge_faces requires distinct faces");
        assert!(
            !self.faces[f1].is_outer && !self.faces[f2].is_outer,
            "merge_faces requires bounded faces"
        );
        let q = self.face_intersection(f1, f2);
        if q.edges.is_empty() {
            return Err(Error::FacesNotAdjacent);
        }
        if !q.is_connected() || !q.is_simple_path() {
            return Err(Error::IntersectionDisconnected);
        }
        // Inner vertices of the path Q have degree 2 in Q.
        let mut q_deg: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &(u, v) in &q.edges {
            *q_deg.entry(u).or_insert(0) += 1;
            *q_deg.entry(v).or_insert(0) += 1;
        }
        let inner: BTreeSet<VertexId> =
            q_deg.iter().filter(|(_, &d)| d == 2).map(|(&v, _)| v).collect();

        let mut rotation: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut vertices = Vec::new();
        for v in 0..self.vertex_count() {
            if inner.contains(&v) {
                continue;
            }
            vertices.push(self.ids[v].clone());
            let list: Vec<String> = self.rotation[v]
                .iter()
                .filter(|&&w| !inner.contains(&w) && !q.edges.contains(&edge(v, w)))
                .map(|&w| self.ids[w].clone())
                .collect();
            rotation.insert(self.ids[v].clone(), list);
        }
        // The outer face is traced clockwise; OuterSpec::Cycle expects the
        // counterclockwise orientation.
        let mut outer_ids: Vec<String> =
            self.faces[self.outer_face].vertex_cycle().iter().map(|&v| self.ids[v].clone()).collect();
        outer_ids.reverse();
        PlaneGraph::build_from_rotation(&vertices, &rotation, &OuterSpec::Cycle(outer_ids))
    }

    /// Deterministic key for a face: its sorted vertex-id list.
    pub fn face_key(&self, f: FaceId) -> Vec<String> {
        let mut key: Vec<String> =
            self.faces[f].vertex_set().iter().map(|&v| self.ids[v].clone()).collect();
        key.sort();
        key
    }

    /// Face boundary as an id cycle starting at the smallest id, in traced
    /// order. Used in reports.
    pub fn face_cycle_ids(&self, f: FaceId) -> Vec<String> {
        let cycle = self.faces[f].vertex_cycle();
        if cycle.is_empty() {
            return Vec::new();
        }
        let min_pos = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i).unwrap();
        let mut cycle = cycle;
        cycle.rotate_left(min_pos);
        cycle.iter().map(|&v| self.ids[v].clone()).collect()
    }
}

/// Trace all faces of a rotation system. Deterministic: darts are visited in
/// sorted order and each face starts at its smallest unused dart.
fn trace_faces_raw(rotation: &[Vec<VertexId>]) -> Vec<Face> {
    let mut pred: Vec<BTreeMap<VertexId, VertexId>> = Vec::with_capacity(rotation.len());
    for nbrs in rotation {
        let mut m = BTreeMap::new();
        let k = nbrs.len();
        for i in 0..k {
            // predecessor of nbrs[i] in cyclic order
            m.insert(nbrs[i], nbrs[(i + k - 1) % k]);
        }
        pred.push(m);
    }
    let mut darts: Vec<Dart> = Vec::new();
    for (u, nbrs) in rotation.iter().enumerate() {
        for &v in nbrs {
            darts.push((u, v));
        }
    }
    darts.sort();

    let mut used: BTreeSet<Dart> = BTreeSet::new();
    let mut faces = Vec::new();
    for &start in &darts {
        if used.contains(&start) {
            continue;
        }
        let mut boundary = Vec::new();
        let mut d = start;
        loop {
            boundary.push(d);
            used.insert(d);
            let (u, v) = d;
            d = (v, pred[v][&u]);
            if d == start {
                break;
            }
        }
        faces.push(Face { id: faces.len(), boundary, is_outer: false });
    }
    if faces.is_empty() {
        // Edge-less graph: the plane minus isolated points is one face.
        faces.push(Face { id: 0, boundary: Vec::new(), is_outer: false });
    }
    faces
}

/// Match an outer cycle against traced faces, up to rotation and reversal.
/// If both orientations of the cycle appear as faces (a plain cycle graph),
/// the clockwise-traced one is taken, matching the counterclockwise rotation
/// convention for the unbounded face.
fn find_face_by_cycle(faces: &[Face], cycle: &[VertexId]) -> Result<FaceId> {
    if cycle.is_empty() {
        // Permitted only for the single face of an edge-less graph.
        if faces.len() == 1 && faces[0].boundary.is_empty() {
            return Ok(0);
        }
        return Err(Error::OuterFaceNotFound);
    }
    let mut reversed: Vec<VertexId> = cycle.to_vec();
    reversed.reverse();
    let mut forward_match = None;
    let mut reverse_match = None;
    for face in faces {
        let fc = face.vertex_cycle();
        if cyclic_eq(&fc, cycle) {
            forward_match = Some(face.id);
        }
        if cyclic_eq(&fc, &reversed) {
            reverse_match = Some(face.id);
        }
    }
    // An outer boundary given counterclockwise is traced clockwise, so the
    // reversed orientation takes precedence when both appear (plain cycles).
    reverse_match.or(forward_match).ok_or(Error::OuterFaceNotFound)
}

fn cyclic_eq(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return a.len() == b.len();
    }
    let n = a.len();
    (0..n).any(|shift| (0..n).all(|i| a[(i + shift) % n] == b[i]))
}

fn count_components(n: usize, edges: &BTreeSet<(VertexId, VertexId)>) -> usize {
    count_components_excluding(n, edges, &[])
}

/// Component count and geometric face count. Each component with edges
/// contributes one traced unbounded walk, but side-by-side components share
/// a single unbounded plane region, so those walks collapse to one face.
fn geometric_face_count(
    n: usize,
    edges: &BTreeSet<(VertexId, VertexId)>,
    faces: &[Face],
) -> (usize, usize) {
    let c = count_components(n, edges);
    let mut isolated: Vec<bool> = vec![true; n];
    for &(u, v) in edges {
        isolated[u] = false;
        isolated[v] = false;
    }
    let isolated_count = isolated.iter().filter(|&&b| b).count();
    let c_edged = c - isolated_count;
    let traced_nonempty = faces.iter().filter(|f| !f.boundary.is_empty()).count();
    let f = if c_edged == 0 { 1 } else { traced_nonempty - (c_edged - 1) };
    (c, f)
}

fn count_components_excluding(
    n: usize,
    edges: &BTreeSet<(VertexId, VertexId)>,
    excluded: &[VertexId],
) -> usize {
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen: Vec<bool> = vec![false; n];
    for &x in excluded {
        seen[x] = true;
    }
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    components
}

/// Connected components of the graph after deleting a vertex set.
pub fn components_excluding(g: &PlaneGraph, excluded: &[VertexId]) -> Vec<BTreeSet<VertexId>> {
    let n = g.vertex_count();
    let mut seen: Vec<bool> = vec![false; n];
    for &x in excluded {
        seen[x] = true;
    }
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        comp.insert(start);
        while let Some(x) = queue.pop_front() {
            for &y in g.rotation(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.insert(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    out
}
