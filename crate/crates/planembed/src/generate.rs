//! Named plane-graph instances and a seeded random generator, used by tests,
//! the CLI sweep command, and the cross-check corpus.
//!
//! All rotation lists are counterclockwise, derived from an explicit planar
//! drawing of each instance.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{edge, OuterSpec, PlaneGraph};

fn build(
    vertices: &[&str],
    rotation: &[(&str, &[&str])],
    outer: &[&str],
) -> PlaneGraph {
    let ids: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
    let rot: BTreeMap<String, Vec<String>> = rotation
        .iter()
        .map(|(k, vs)| (k.to_string(), vs.iter().map(|s| s.to_string()).collect()))
        .collect();
    let outer: Vec<String> = outer.iter().map(|s| s.to_string()).collect();
    PlaneGraph::build_from_rotation(&ids, &rot, &OuterSpec::Cycle(outer))
        .expect("named instance must be a valid plane graph")
}

/// Triangle a-b-c.
pub fn triangle() -> PlaneGraph {
    build(
        &["a", "b", "c"],
        &[("a", &["b", "c"]), ("b", &["c", "a"]), ("c", &["a", "b"])],
        &["a", "b", "c"],
    )
}

/// Square a,b,c,d (counterclockwise) with the diagonal a-c drawn inside:
/// the smallest nodally 3-connected graph that is not triconnected.
pub fn square_diagonal() -> PlaneGraph {
    build(
        &["a", "b", "c", "d"],
        &[
            ("a", &["b", "c", "d"]),
            ("b", &["c", "a"]),
            ("c", &["d", "a", "b"]),
            ("d", &["a", "c"]),
        ],
        &["a", "b", "c", "d"],
    )
}

/// Outer square v1..v4 with two internal vertices u2, u4, each adjacent to v1
/// and v3: the bounded faces left and right of the inner lens meet in the
/// disconnected vertex pair {v1, v3}.
pub fn two_squares() -> PlaneGraph {
    build(
        &["u2", "u4", "v1", "v2", "v3", "v4"],
        &[
            ("v1", &["v2", "u2", "u4", "v4"]),
            ("v2", &["v3", "v1"]),
            ("v3", &["v4", "u4", "u2", "v2"]),
            ("v4", &["v1", "v3"]),
            ("u2", &["v1", "v3"]),
            ("u4", &["v1", "v3"]),
        ],
        &["v1", "v2", "v3", "v4"],
    )
}

/// θ-graph: nodes a, b joined by three internally disjoint paths of lengths
/// 1, 2, 2 (through x and y respectively), with the edge ab on the outer
/// boundary. Nodally 3-connected but not convex embeddable: the face bounded
/// by the two length-2 paths meets both ends of the external edge ab.
pub fn theta_graph() -> PlaneGraph {
    build(
        &["a", "b", "x", "y"],
        &[
            ("a", &["b", "x", "y"]),
            ("b", &["y", "x", "a"]),
            ("x", &["a", "b"]),
            ("y", &["a", "b"]),
        ],
        &["a", "b", "y"],
    )
}

/// K4 drawn with triangular outer face a,b,c and centre vertex d.
pub fn k4() -> PlaneGraph {
    build(
        &["a", "b", "c", "d"],
        &[
            ("a", &["b", "d", "c"]),
            ("b", &["c", "d", "a"]),
            ("c", &["a", "d", "b"]),
            ("d", &["c", "a", "b"]),
        ],
        &["a", "b", "c"],
    )
}

/// Octahedron with triangular outer face t, p, q; fully triangulated.
pub fn octahedron() -> PlaneGraph {
    build(
        &["b", "p", "q", "r", "s", "t"],
        &[
            ("t", &["p", "s", "r", "q"]),
            ("p", &["q", "b", "s", "t"]),
            ("q", &["t", "r", "b", "p"]),
            ("r", &["t", "s", "b", "q"]),
            ("s", &["r", "t", "p", "b"]),
            ("b", &["r", "s", "p", "q"]),
        ],
        &["t", "p", "q"],
    )
}

/// Plain n-cycle, n >= 3.
pub fn cycle(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let ids: Vec<String> = (0..n).map(|i| format!("c{i:03}")).collect();
    let rot: BTreeMap<String, Vec<String>> = (0..n)
        .map(|i| {
            (ids[i].clone(), vec![ids[(i + 1) % n].clone(), ids[(i + n - 1) % n].clone()])
        })
        .collect();
    PlaneGraph::build_from_rotation(&ids, &rot, &OuterSpec::Cycle(ids.clone()))
        .expect("cycle instance must build")
}

/// Wheel: an n-cycle (outer, counterclockwise) plus a hub joined to every rim
/// vertex; fully triangulated for n = 3, triangulated with an n-gon outer
/// face otherwise.
pub fn wheel(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let rim: Vec<String> = (0..n).map(|i| format!("c{i:03}")).collect();
    let hub = "hub".to_string();
    let mut rot: BTreeMap<String, Vec<String>> = (0..n)
        .map(|i| {
            (
                rim[i].clone(),
                vec![rim[(i + 1) % n].clone(), hub.clone(), rim[(i + n - 1) % n].clone()],
            )
        })
        .collect();
    rot.insert(hub.clone(), rim.clone());
    let mut ids = rim.clone();
    ids.push(hub);
    PlaneGraph::build_from_rotation(&ids, &rot, &OuterSpec::Cycle(rim))
        .expect("wheel instance must build")
}

/// n-prism: outer cycle a0..a(n-1) (counterclockwise), inner cycle b0..b(n-1),
/// spokes ai-bi. Triconnected for all n >= 3.
pub fn prism(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let a: Vec<String> = (0..n).map(|i| format!("a{i:03}")).collect();
    let b: Vec<String> = (0..n).map(|i| format!("b{i:03}")).collect();
    let mut rot: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for i in 0..n {
        rot.insert(
            a[i].clone(),
            vec![a[(i + 1) % n].clone(), b[i].clone(), a[(i + n - 1) % n].clone()],
        );
        rot.insert(
            b[i].clone(),
            vec![a[i].clone(), b[(i + 1) % n].clone(), b[(i + n - 1) % n].clone()],
        );
    }
    let ids: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    PlaneGraph::build_from_rotation(&ids, &rot, &OuterSpec::Cycle(a))
        .expect("prism instance must build")
}

/// nx-by-ny grid of vertices ((nx-1) by (ny-1) cells of squares), drawn with
/// x increasing right and y increasing up; outer boundary counterclockwise.
pub fn grid(nx: usize, ny: usize) -> PlaneGraph {
    assert!(nx >= 2 && ny >= 2);
    let id = |x: usize, y: usize| format!("x{x:02}y{y:02}");
    let mut rot: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut ids = Vec::new();
    for y in 0..ny {
        for x in 0..nx {
            ids.push(id(x, y));
            let mut nbrs = Vec::new();
            // east, north, west, south: counterclockwise.
            if x + 1 < nx {
                nbrs.push(id(x + 1, y));
            }
            if y + 1 < ny {
                nbrs.push(id(x, y + 1));
            }
            if x > 0 {
                nbrs.push(id(x - 1, y));
            }
            if y > 0 {
                nbrs.push(id(x, y - 1));
            }
            rot.insert(id(x, y), nbrs);
        }
    }
    let mut outer = Vec::new();
    for x in 0..nx {
        outer.push(id(x, 0));
    }
    for y in 1..ny {
        outer.push(id(nx - 1, y));
    }
    for x in (0..nx - 1).rev() {
        outer.push(id(x, ny - 1));
    }
    for y in (1..ny - 1).rev() {
        outer.push(id(0, y));
    }
    PlaneGraph::build_from_rotation(&ids, &rot, &OuterSpec::Cycle(outer))
        .expect("grid instance must build")
}

/// Hexagon with one long chord (h0-h3): convex embeddable, not triconnected.
pub fn hexagon_chord() -> PlaneGraph {
    build(
        &["h0", "h1", "h2", "h3", "h4", "h5"],
        &[
            ("h0", &["h1", "h3", "h5"]),
            ("h1", &["h2", "h0"]),
            ("h2", &["h3", "h1"]),
            ("h3", &["h4", "h0", "h2"]),
            ("h4", &["h5", "h3"]),
            ("h5", &["h0", "h4"]),
        ],
        &["h0", "h1", "h2", "h3", "h4", "h5"],
    )
}

/// All named instances with stable names, for the CLI and the sweep corpus.
pub fn named_instances() -> Vec<(&'static str, PlaneGraph)> {
    vec![
        ("triangle", triangle()),
        ("square_diagonal", square_diagonal()),
        ("two_squares", two_squares()),
        ("theta", theta_graph()),
        ("k4", k4()),
        ("octahedron", octahedron()),
        ("cycle6", cycle(6)),
        ("wheel5", wheel(5)),
        ("prism5", prism(5)),
        ("grid3x3", grid(3, 3)),
        ("hexagon_chord", hexagon_chord()),
    ]
}

/// Mutable rotation-system scaffold used by the random generator. The graph
/// is rebuilt (and thereby re-validated) after every operation.
struct Scaffold {
    ids: Vec<String>,
    rot: BTreeMap<String, Vec<String>>,
    outer: Vec<String>,
    next_id: usize,
}

impl Scaffold {
    fn rebuild(&self) -> PlaneGraph {
        PlaneGraph::build_from_rotation(&self.ids, &self.rot, &OuterSpec::Cycle(self.outer.clone()))
            .expect("generator operations must preserve plane-graph validity")
    }

    /// Insert `new` into rot(at) immediately before `pred` — the face-corner
    /// gap between the corner's cycle successor and predecessor.
    fn insert_before(&mut self, at: &str, pred: &str, new: &str) {
        let list = self.rot.get_mut(at).unwrap();
        let pos = list.iter().position(|x| x == pred).unwrap();
        list.insert(pos, new.to_string());
    }
}

/// Random biconnected plane graph: start from a cycle and repeatedly either
/// add a chord inside a bounded face or insert a new vertex inside a bounded
/// face joined to two of its boundary vertices. Deterministic in the seed.
pub fn random_plane_graph(seed: u64, ops: usize) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(3..=6);
    let ids: Vec<String> = (0..k).map(|i| format!("v{i:03}")).collect();
    let rot: BTreeMap<String, Vec<String>> = (0..k)
        .map(|i| {
            (ids[i].clone(), vec![ids[(i + 1) % k].clone(), ids[(i + k - 1) % k].clone()])
        })
        .collect();
    let mut sc = Scaffold { ids: ids.clone(), rot, outer: ids, next_id: k };
    let mut g = sc.rebuild();

    for _ in 0..ops {
        // Candidate faces: bounded, simple-cycle boundary.
        let faces: Vec<Vec<usize>> = g
            .bounded_faces()
            .filter(|f| f.is_simple_cycle())
            .map(|f| f.vertex_cycle())
            .collect();
        if faces.is_empty() {
            break;
        }
        let cycle = &faces[rng.gen_range(0..faces.len())];
        let m = cycle.len();
        let add_chord = m >= 4 && rng.gen_bool(0.5);
        if add_chord {
            // Two non-adjacent positions with no existing edge between them.
            let mut pairs = Vec::new();
            for i in 0..m {
                for j in (i + 2)..m {
                    if i == 0 && j == m - 1 {
                        continue;
                    }
                    if !g.edges().contains(&edge(cycle[i], cycle[j])) {
                        pairs.push((i, j));
                    }
                }
            }
            if pairs.is_empty() {
                continue;
            }
            let (i, j) = pairs[rng.gen_range(0..pairs.len())];
            let (ui, uj) = (g.id(cycle[i]).to_string(), g.id(cycle[j]).to_string());
            let pred_i = g.id(cycle[(i + m - 1) % m]).to_string();
            let pred_j = g.id(cycle[(j + m - 1) % m]).to_string();
            sc.insert_before(&ui, &pred_i, &uj);
            sc.insert_before(&uj, &pred_j, &ui);
        } else {
            // New internal vertex joined to two distinct boundary corners.
            let i = rng.gen_range(0..m);
            let j = (i + rng.gen_range(1..m)) % m;
            let (i, j) = (i.min(j), i.max(j));
            let z = format!("v{:03}", sc.next_id);
            sc.next_id += 1;
            // Counterclockwise around an interior point, the boundary
            // vertices appear in boundary-cycle order.
            sc.ids.push(z.clone());
            sc.rot.insert(z.clone(), vec![
                g.id(cycle[i]).to_string(),
                g.id(cycle[j]).to_string(),
            ]);
            let pred_i = g.id(cycle[(i + m - 1) % m]).to_string();
            let pred_j = g.id(cycle[(j + m - 1) % m]).to_string();
            let wi = g.id(cycle[i]).to_string();
            let wj = g.id(cycle[j]).to_string();
            sc.insert_before(&wi, &pred_i, &z);
            sc.insert_before(&wj, &pred_j, &z);
        }
        g = sc.rebuild();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_instances_are_valid_and_biconnected() {
        for (name, g) in named_instances() {
            assert!(g.euler_check().holds, "{name}: Euler check");
            assert!(g.is_biconnected(), "{name}: biconnected");
        }
    }

    #[test]
    fn two_squares_face_structure() {
        let g = two_squares();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.faces().len(), 4);
        assert_eq!(g.face(g.outer_face()).boundary.len(), 4);
    }

    #[test]
    fn theta_face_structure() {
        let g = theta_graph();
        assert_eq!(g.faces().len(), 3);
        let outer = g.face(g.outer_face());
        let mut outer_ids: Vec<&str> =
            outer.vertex_set().iter().map(|&v| g.id(v)).collect();
        outer_ids.sort();
        assert_eq!(outer_ids, vec!["a", "b", "y"]);
    }

    #[test]
    fn octahedron_fully_triangulated() {
        let g = octahedron();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.faces().len(), 8);
        assert!(g.faces().iter().all(|f| f.boundary.len() == 3));
        assert!(g.is_triconnected());
    }

    #[test]
    fn prism_and_wheel_structure() {
        let p = prism(6);
        assert_eq!(p.vertex_count(), 12);
        assert_eq!(p.edge_count(), 18);
        assert_eq!(p.faces().len(), 8);
        assert!(p.is_triconnected());

        let w = wheel(5);
        assert_eq!(w.vertex_count(), 6);
        assert_eq!(w.edge_count(), 10);
        assert!(w.bounded_faces().all(|f| f.boundary.len() == 3));
    }

    #[test]
    fn grid_structure() {
        let g = grid(4, 3);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 17);
        // 6 cells + outer
        assert_eq!(g.faces().len(), 7);
        assert_eq!(g.face(g.outer_face()).boundary.len(), 10);
        assert_eq!(g.internal_vertices().len(), 2);
    }

    #[test]
    fn random_graphs_valid_and_deterministic() {
        for seed in 0..20u64 {
            let g = random_plane_graph(seed, 6);
            assert!(g.euler_check().holds, "seed {seed}");
            assert!(g.is_biconnected(), "seed {seed}");
            let g2 = random_plane_graph(seed, 6);
            assert_eq!(g.ids(), g2.ids());
            assert_eq!(g.edges(), g2.edges());
        }
    }
}
