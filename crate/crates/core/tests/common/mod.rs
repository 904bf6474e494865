//! Brute-force oracles shared by the integration tests. None of them call
//! the closure, word or hyperplane machinery they are used to check.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::path::PathBuf;

use gpr_core::{parse_graph, SimplicialGraph, VertexSet};
use rand::rngs::StdRng;
use rand::Rng;

pub const CORPUS: [&str; 8] = ["SQ4", "C5", "K4", "K33", "CONE", "DIAG", "EDGEW", "ELEC_FALSE"];

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn corpus_path(name: &str) -> PathBuf {
    corpus_dir().join(format!("{}.gg", name.to_lowercase()))
}

pub fn load(name: &str) -> SimplicialGraph {
    let path = corpus_path(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_graph(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn corpus() -> Vec<SimplicialGraph> {
    CORPUS.iter().map(|n| load(n)).collect()
}

/// Graph on `n` vertices with each edge present with probability `p` and
/// vertex orders drawn from `2..=max_order`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64, max_order: u32) -> SimplicialGraph {
    let vertices: Vec<(String, u32)> = (0..n)
        .map(|i| (format!("v{i}"), rng.gen_range(2..=max_order)))
        .collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    SimplicialGraph::new("random", vertices, &edges).unwrap()
}

/// Graph on vertices `0..n` whose edges are the set bits of `mask`, bit `k`
/// standing for the `k`-th pair in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> SimplicialGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    SimplicialGraph::from_edges(format!("n{n}m{mask}"), n, &edges).unwrap()
}

fn adj(g: &SimplicialGraph, a: usize, b: usize) -> bool {
    g.adjacent(a, b)
}

/// Induced 4-cycles as 4-element vertex sets, by checking every 4-subset
/// against the three possible cyclic orders.
pub fn brute_squares(g: &SimplicialGraph) -> Vec<VertexSet> {
    let n = g.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // Diagonal pairs for each cyclic order.
                    let pairings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))];
                    let is_square = pairings.iter().any(|&((p, q), (r, s))| {
                        !adj(g, p, q) && !adj(g, r, s) && adj(g, p, r) && adj(g, p, s) && adj(g, q, r) && adj(g, q, s)
                    });
                    if is_square {
                        out.push([a, b, c, d].into_iter().collect());
                    }
                }
            }
        }
    }
    out
}

/// The diagonal pairs of a square given as a vertex set.
fn diagonals(g: &SimplicialGraph, sq: VertexSet) -> Vec<(usize, usize)> {
    let v: Vec<usize> = sq.iter().collect();
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            if !adj(g, v[i], v[j]) {
                out.push((v[i], v[j]));
            }
        }
    }
    out
}

pub fn brute_square_complete(g: &SimplicialGraph, squares: &[VertexSet], s: VertexSet) -> bool {
    squares.iter().all(|&sq| {
        sq.is_subset(s) || !diagonals(g, sq).iter().any(|&(p, q)| s.contains(p) && s.contains(q))
    })
}

/// Inclusion-minimal square-complete subsets containing a square, over all
/// subsets of the vertex set, sorted.
pub fn brute_minsquare(g: &SimplicialGraph) -> Vec<VertexSet> {
    let n = g.len();
    assert!(n <= 16, "subset oracle is exponential");
    let squares = brute_squares(g);
    let mut candidates: Vec<VertexSet> = Vec::new();
    for bits in 0u128..1 << n {
        let s = VertexSet::from_bits(bits);
        if squares.iter().any(|sq| sq.is_subset(s)) && brute_square_complete(g, &squares, s) {
            candidates.push(s);
        }
    }
    let mut minimal: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&s| !candidates.iter().any(|&t| t != s && t.is_subset(s)))
        .collect();
    minimal.sort();
    minimal
}

pub fn brute_complete(g: &SimplicialGraph, s: VertexSet) -> bool {
    let v: Vec<usize> = s.iter().collect();
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| adj(g, a, b)))
}

/// Electrification verdict from the subset oracle: every square lies in
/// some minsquare subgraph.
pub fn brute_electrification_hyperbolic(g: &SimplicialGraph) -> bool {
    let minsquare = brute_minsquare(g);
    brute_squares(g).iter().all(|&sq| minsquare.iter().any(|&m| sq.is_subset(m)))
}

/// Whether the graph splits as a join `M * K` with `M` minsquare and `K`
/// complete, trying every subset as `M`.
pub fn brute_join_split(g: &SimplicialGraph) -> bool {
    let minsquare = brute_minsquare(g);
    let all = g.all();
    minsquare.iter().any(|&m| {
        let k = all.difference(m);
        brute_complete(g, k) && m.iter().all(|a| k.iter().all(|b| adj(g, a, b)))
    })
}

// ---- words ----

pub type RawWord = Vec<(usize, u32)>;

/// Normal form by literal application of the elementary moves: explore the
/// whole shuffle class, merge any two adjacent syllables of one vertex
/// group, and repeat; the answer is the lexicographically least word of the
/// final shuffle class.
pub fn naive_normal_form(g: &SimplicialGraph, word: &[(usize, u32)]) -> RawWord {
    let mut current: RawWord = word
        .iter()
        .map(|&(v, e)| (v, e % g.order(v)))
        .filter(|&(_, e)| e != 0)
        .collect();
    'outer: loop {
        let mut seen: HashSet<RawWord> = HashSet::new();
        let mut queue = VecDeque::from([current.clone()]);
        seen.insert(current.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len().saturating_sub(1) {
                let (x, y) = (w[i], w[i + 1]);
                if x.0 == y.0 {
                    let mut merged = w[..i].to_vec();
                    let e = (x.1 + y.1) % g.order(x.0);
                    if e != 0 {
                        merged.push((x.0, e));
                    }
                    merged.extend_from_slice(&w[i + 2..]);
                    current = merged;
                    continue 'outer;
                }
                if adj(g, x.0, y.0) {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    if seen.insert(swapped.clone()) {
                        queue.push_back(swapped);
                    }
                }
            }
        }
        return seen.into_iter().min().unwrap();
    }
}

pub fn naive_inverse(g: &SimplicialGraph, w: &[(usize, u32)]) -> RawWord {
    w.iter().rev().map(|&(v, e)| (v, g.order(v) - e)).collect()
}

/// Ball of radius `r` built from the naive normal form, with its edge
/// relation. Elements are listed in BFS order from the identity.
pub struct NaiveBall {
    pub elements: Vec<RawWord>,
    pub index: HashMap<RawWord, usize>,
    pub adjacency: Vec<Vec<(usize, usize)>>,
}

pub fn naive_ball(g: &SimplicialGraph, r: usize) -> NaiveBall {
    let mut elements: Vec<RawWord> = vec![Vec::new()];
    let mut index: HashMap<RawWord, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut depth = vec![0usize];
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut i = 0;
    while i < elements.len() {
        for v in 0..g.len() {
            for e in 1..g.order(v) {
                let mut w = elements[i].clone();
                w.push((v, e));
                let nf = naive_normal_form(g, &w);
                let j = match index.get(&nf) {
                    Some(&j) => j,
                    None if depth[i] < r => {
                        elements.push(nf.clone());
                        index.insert(nf, elements.len() - 1);
                        depth.push(depth[i] + 1);
                        adjacency.push(Vec::new());
                        elements.len() - 1
                    }
                    None => continue,
                };
                if !adjacency[i].iter().any(|&(k, _)| k == j) {
                    adjacency[i].push((j, v));
                }
            }
        }
        i += 1;
    }
    NaiveBall {
        elements,
        index,
        adjacency,
    }
}

pub fn bfs(adjacency: &[Vec<(usize, usize)>], source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adjacency.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adjacency[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

// ---- hyperplanes ----

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Edge classes of a graph given by adjacency lists: edges of a common
/// triangle are identified, as are opposite sides of induced 4-cycles.
/// Returns the undirected edges `(a, b)` with `a < b` and the class of each.
pub fn edge_classes(adjacency: &[Vec<usize>]) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    for (a, ns) in adjacency.iter().enumerate() {
        for &b in ns {
            if a < b {
                ids.insert((a, b), edges.len());
                edges.push((a, b));
            }
        }
    }
    let sets: Vec<HashSet<usize>> = adjacency.iter().map(|ns| ns.iter().copied().collect()).collect();
    let id = |a: usize, b: usize| ids[&(a.min(b), a.max(b))];
    let mut uf = UnionFind::new(edges.len());
    for x in 0..adjacency.len() {
        let ns = &adjacency[x];
        for (i, &y) in ns.iter().enumerate() {
            for &z in &ns[i + 1..] {
                if sets[y].contains(&z) {
                    uf.union(id(x, y), id(x, z));
                    uf.union(id(x, y), id(y, z));
                    continue;
                }
                // x - y - w - z - x with no diagonals.
                for &w in &adjacency[y] {
                    if w != x && sets[z].contains(&w) && !sets[x].contains(&w) {
                        uf.union(id(x, y), id(z, w));
                        uf.union(id(x, z), id(y, w));
                    }
                }
            }
        }
    }
    let classes = (0..edges.len()).map(|e| uf.find(e)).collect();
    (edges, classes)
}

/// Whether two labelings of the same items induce the same partition.
pub fn same_partition<A: Eq + std::hash::Hash + Clone, B: Eq + std::hash::Hash + Clone>(a: &[A], b: &[B]) -> bool {
    let mut ab: HashMap<A, B> = HashMap::new();
    let mut ba: HashMap<B, A> = HashMap::new();
    a.iter().zip(b).all(|(x, y)| {
        ab.entry(x.clone()).or_insert_with(|| y.clone()) == y && ba.entry(y.clone()).or_insert_with(|| x.clone()) == x
    })
}

/// Vertex sets rendered with names, for assertion messages.
pub fn show(g: &SimplicialGraph, sets: &[VertexSet]) -> String {
    sets.iter().map(|&s| g.format_set(s)).collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>().join(" ")
}
