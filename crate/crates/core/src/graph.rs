//! Finite simplicial graphs labelled by vertex-group orders, and the
//! induced-subgraph combinatorics everything else is built on.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Order given to vertices declared without `order=`.
pub const DEFAULT_ORDER: u32 = 2;

/// Square enumeration switches from the 4-subset scan to the diagonal-driven
/// scan above this many vertices.
pub const EXHAUSTIVE_SQUARE_LIMIT: usize = 16;

/// A finite simplicial graph whose vertices carry the order of a finite
/// cyclic vertex group.
///
/// The declaration order of the vertices is the total order used for every
/// canonical form downstream: normal forms, coset representatives and the
/// enumeration order of squares.
#[derive(Clone)]
pub struct SimplicialGraph {
    name: String,
    names: Vec<String>,
    index: HashMap<String, usize>,
    orders: Vec<u32>,
    adj: Vec<VertexSet>,
    fingerprint: u64,
}

/// An induced 4-cycle. `diagonals` holds its two non-adjacent pairs, each as
/// `(smaller, larger)`, with the pair containing the smallest vertex first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedSquare {
    pub vertices: VertexSet,
    pub diagonals: [(usize, usize); 2],
}

impl InducedSquare {
    fn new(d1: (usize, usize), d2: (usize, usize)) -> Self {
        let norm = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
        let (d1, d2) = (norm(d1), norm(d2));
        let diagonals = if d1.0 < d2.0 { [d1, d2] } else { [d2, d1] };
        let vertices = [d1.0, d1.1, d2.0, d2.1].into_iter().collect();
        InducedSquare {
            vertices,
            diagonals,
        }
    }

    /// Diagonals as vertex sets.
    pub fn diagonal_sets(&self) -> [VertexSet; 2] {
        self.diagonals
            .map(|(a, b)| VertexSet::singleton(a).with(b))
    }
}

/// Split of a vertex set into a part without universal vertices (`lambda0`)
/// and the complete part of vertices adjacent to everything else (`lambda1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub lambda0: VertexSet,
    pub lambda1: VertexSet,
}

impl SimplicialGraph {
    /// Builds a graph from named vertices with orders and index-pair edges.
    /// Duplicate edges are merged.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<(String, u32)>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "graphs are limited to {MAX_VERTICES} vertices"
            )));
        }
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        let mut orders = Vec::with_capacity(vertices.len());
        for (i, (id, order)) in vertices.into_iter().enumerate() {
            if order < 2 {
                return Err(Error::InvalidGraph(format!(
                    "vertex `{id}` has order {order}, vertex groups need order at least 2"
                )));
            }
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{id}`")));
            }
            names.push(id);
            orders.push(order);
        }
        let n = names.len();
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on `{}`", names[u])));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut hasher = DefaultHasher::new();
        names.hash(&mut hasher);
        orders.hash(&mut hasher);
        adj.hash(&mut hasher);
        Ok(SimplicialGraph {
            name: name.into(),
            names,
            index,
            orders,
            adj,
            fingerprint: hasher.finish(),
        })
    }

    /// Graph with vertices `v0, v1, ..` of order 2.
    pub fn from_edges(name: impl Into<String>, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = (0..n).map(|i| (format!("v{i}"), DEFAULT_ORDER)).collect();
        Self::new(name, vertices, edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Identifies the graph product; equal graphs share a fingerprint.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn vertex_or_err(&self, id: &str) -> Result<usize> {
        self.vertex(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn order(&self, v: usize) -> u32 {
        self.orders[v]
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighbours of `v`.
    pub fn link(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Looks `id` up and returns its link.
    pub fn link_of(&self, id: &str) -> Result<VertexSet> {
        Ok(self.link(self.vertex_or_err(id)?))
    }

    pub fn star(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Resolves vertex names into a set.
    pub fn vertex_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<VertexSet> {
        ids.iter()
            .map(|id| self.vertex_or_err(id.as_ref()))
            .collect()
    }

    /// Member names in declaration order.
    pub fn names_of(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v].clone()).collect()
    }

    /// `{a, b, c}` rendering of a vertex set.
    pub fn format_set(&self, s: VertexSet) -> String {
        format!("{{{}}}", self.names_of(s).join(", "))
    }

    /// True iff every two distinct members are adjacent.
    pub fn is_complete(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// True iff every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_join(&self, a: VertexSet, b: VertexSet) -> bool {
        a.intersection(b).is_empty() && a.iter().all(|v| b.is_subset(self.adj[v]))
    }

    /// Size of a largest clique; 0 for the empty graph.
    pub fn clique_number(&self) -> usize {
        fn extend(g: &SimplicialGraph, size: usize, cand: VertexSet, best: &mut usize) {
            if cand.is_empty() {
                *best = (*best).max(size);
                return;
            }
            let mut cand = cand;
            while let Some(v) = cand.first() {
                if size + cand.len() <= *best {
                    return;
                }
                cand.remove(v);
                extend(g, size + 1, cand.intersection(g.adj[v]), best);
            }
        }
        let mut best = 0;
        extend(self, 0, self.all(), &mut best);
        best
    }

    /// Splits `s` into its universal part (members adjacent within `s` to
    /// every other member) and the rest.
    pub fn core_decomposition(&self, s: VertexSet) -> CoreDecomposition {
        let lambda1: VertexSet = s
            .iter()
            .filter(|&v| s.without(v).is_subset(self.adj[v]))
            .collect();
        CoreDecomposition {
            lambda0: s.difference(lambda1),
            lambda1,
        }
    }

    /// True iff the star (within `s`) of some member covers `s`.
    pub fn is_star_of_vertex(&self, s: VertexSet) -> bool {
        !self.core_decomposition(s).lambda1.is_empty()
    }

    /// All induced squares, sorted by vertex set.
    pub fn induced_squares(&self) -> Vec<InducedSquare> {
        if self.len() <= EXHAUSTIVE_SQUARE_LIMIT {
            self.induced_squares_exhaustive()
        } else {
            self.induced_squares_by_diagonals()
        }
    }

    /// Induced squares by scanning every 4-subset.
    pub fn induced_squares_exhaustive(&self) -> Vec<InducedSquare> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        // A 4-set induces a 4-cycle iff its non-edges form a
                        // perfect matching.
                        let quad = [a, b, c, d];
                        let mut non_edges = Vec::with_capacity(6);
                        for i in 0..4 {
                            for j in i + 1..4 {
                                if !self.adjacent(quad[i], quad[j]) {
                                    non_edges.push((quad[i], quad[j]));
                                }
                            }
                        }
                        if let [p, q] = non_edges[..] {
                            if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                                out.push(InducedSquare::new(p, q));
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Induced squares by pairing each non-adjacent pair with non-adjacent
    /// pairs of its common neighbours.
    pub fn induced_squares_by_diagonals(&self) -> Vec<InducedSquare> {
        let n = self.len();
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                if self.adjacent(p, q) {
                    continue;
                }
                // Each square is met once per diagonal; keep the meeting
                // where `p` is the smallest vertex.
                let common = self.adj[p].intersection(self.adj[q]);
                for r in common.iter().filter(|&r| r > p) {
                    for s in common.iter().filter(|&s| s > r) {
                        if !self.adjacent(r, s) {
                            out.push(InducedSquare::new((p, q), (r, s)));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Canonical `.gg` text: vertices in declaration order (orders other than
    /// 2 spelled out), then edges sorted by endpoint index.
    pub fn to_gg(&self) -> String {
        let mut out = format!("graph {}\n", self.name);
        for (id, &order) in self.names.iter().zip(&self.orders) {
            if order == DEFAULT_ORDER {
                out.push_str(&format!("vertex {id}\n"));
            } else {
                out.push_str(&format!("vertex {id} order={order}\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("edge {} {}\n", self.names[u], self.names[v]));
        }
        out
    }

    /// The induced subgraph on `s`, keeping relative vertex order.
    pub fn induced_subgraph(&self, s: VertexSet, name: impl Into<String>) -> SimplicialGraph {
        let members: Vec<usize> = s.iter().collect();
        let position: HashMap<usize, usize> =
            members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let vertices = members
            .iter()
            .map(|&v| (self.names[v].clone(), self.orders[v]))
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .map(|(u, v)| (position[&u], position[&v]))
            .collect();
        SimplicialGraph::new(name, vertices, &edges).expect("induced subgraph of a valid graph")
    }
}

impl PartialEq for SimplicialGraph {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.names == other.names
            && self.orders == other.orders
            && self.adj == other.adj
    }
}

impl Eq for SimplicialGraph {}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialGraph")
            .field("name", &self.name)
            .field("vertices", &self.names)
            .field("orders", &self.orders)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_gg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_graph;

    fn sq4() -> SimplicialGraph {
        parse_graph("graph SQ4\nvertex a\nvertex b\nvertex c\nvertex d\nedge a b\nedge b c\nedge c d\nedge d a\n")
            .unwrap()
    }

    fn cone() -> SimplicialGraph {
        parse_graph(
            "graph CONE\nvertex a\nvertex b\nvertex c\nvertex d\nvertex w\n\
             edge a b\nedge b c\nedge c d\nedge d a\nedge w a\nedge w b\nedge w c\nedge w d\n",
        )
        .unwrap()
    }

    fn complete(n: usize) -> SimplicialGraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        SimplicialGraph::from_edges(format!("K{n}"), n, &edges).unwrap()
    }

    #[test]
    fn links() {
        let g = sq4();
        assert_eq!(g.link_of("a").unwrap(), g.vertex_set(&["b", "d"]).unwrap());
        assert_eq!(g.star(0), g.vertex_set(&["a", "b", "d"]).unwrap());
        let k4 = complete(4);
        assert_eq!(k4.link(0).len(), 3);
        let iso = parse_graph("vertex x\nvertex y\n").unwrap();
        assert!(iso.link(0).is_empty());
        assert!(matches!(g.link_of("z"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn completeness() {
        let g = sq4();
        assert!(g.is_complete(g.vertex_set(&["a", "b"]).unwrap()));
        assert!(!g.is_complete(g.vertex_set(&["a", "c"]).unwrap()));
        assert!(g.is_complete(VertexSet::EMPTY));
        assert!(g.is_complete(VertexSet::singleton(2)));
    }

    #[test]
    fn squares_of_small_graphs() {
        let g = sq4();
        let sq = g.induced_squares();
        assert_eq!(sq.len(), 1);
        assert_eq!(sq[0].vertices, g.all());
        assert_eq!(sq[0].diagonals, [(0, 2), (1, 3)]);

        let c5 = SimplicialGraph::from_edges("C5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
            .unwrap();
        assert!(c5.induced_squares().is_empty());

        let k33_edges: Vec<_> = (0..3)
            .flat_map(|i| (3..6).map(move |j| (i, j)))
            .collect();
        let k33 = SimplicialGraph::from_edges("K33", 6, &k33_edges).unwrap();
        assert_eq!(k33.induced_squares().len(), 9);
        assert_eq!(k33.induced_squares_by_diagonals(), k33.induced_squares_exhaustive());
        assert!(complete(5).induced_squares().is_empty());
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(sq4().clique_number(), 2);
        assert_eq!(complete(4).clique_number(), 4);
        assert_eq!(cone().clique_number(), 3);
        assert_eq!(parse_graph("").unwrap().clique_number(), 0);
    }

    #[test]
    fn core_decompositions() {
        let g = sq4();
        let d = g.core_decomposition(g.all());
        assert_eq!((d.lambda0, d.lambda1), (g.all(), VertexSet::EMPTY));
        let k4 = complete(4);
        let d = k4.core_decomposition(k4.all());
        assert_eq!((d.lambda0, d.lambda1), (VertexSet::EMPTY, k4.all()));
        let c = cone();
        let d = c.core_decomposition(c.all());
        assert_eq!(d.lambda1, c.vertex_set(&["w"]).unwrap());
        assert_eq!(d.lambda0, c.vertex_set(&["a", "b", "c", "d"]).unwrap());
        assert_eq!(c.core_decomposition(d.lambda0).lambda1, VertexSet::EMPTY);
    }

    #[test]
    fn stars() {
        assert!(!sq4().is_star_of_vertex(sq4().all()));
        assert!(cone().is_star_of_vertex(cone().all()));
        assert!(sq4().is_star_of_vertex(VertexSet::singleton(1)));
        assert!(!sq4().is_star_of_vertex(VertexSet::EMPTY));
    }

    #[test]
    fn induced_subgraph_keeps_structure() {
        let c = cone();
        let sub = c.induced_subgraph(c.vertex_set(&["a", "b", "c", "d"]).unwrap(), "sq");
        assert_eq!(sub.edge_count(), 4);
        assert_eq!(sub.induced_squares().len(), 1);
    }
}
