//! Isomorphism types of small order-labelled graphs.
//!
//! Pieces with at most [`EXACT_LIMIT`] vertices get an exact canonical form:
//! the least adjacency code over all vertex orderings compatible with an
//! isomorphism-invariant colour refinement, found by branch and bound with
//! twin pruning. Larger pieces, or searches exceeding [`SEARCH_BUDGET`]
//! nodes, fall back to an invariant fingerprint which can separate types but
//! never identify them.

use std::collections::BTreeMap;

use crate::graph::SimplicialGraph;
use crate::vertex_set::VertexSet;

pub const EXACT_LIMIT: usize = 12;
pub const SEARCH_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoType {
    /// Complete isomorphism invariant.
    Exact(String),
    /// Necessary-condition fingerprint only.
    Fingerprint(String),
}

impl IsoType {
    pub fn is_exact(&self) -> bool {
        matches!(self, IsoType::Exact(_))
    }

    pub fn as_string(&self) -> String {
        match self {
            IsoType::Exact(code) => format!("iso:{code}"),
            IsoType::Fingerprint(code) => format!("fp:{code}"),
        }
    }
}

/// Colour classes stable under refinement by neighbour colours, starting
/// from vertex orders. Colours are ranks of sorted signatures, so they only
/// depend on the isomorphism class of the piece.
fn refine(graph: &SimplicialGraph, members: &[usize], s: VertexSet) -> Vec<usize> {
    let mut colour: Vec<usize> = members.iter().map(|&v| graph.order(v) as usize).collect();
    let position: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = members
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut around: Vec<usize> = graph
                    .link(v)
                    .intersection(s)
                    .iter()
                    .map(|w| colour[position[&w]])
                    .collect();
                around.sort_unstable();
                (colour[i], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|sig| distinct.binary_search(sig).unwrap())
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    adj: Vec<u128>,
    colour: &'a [usize],
    best: Option<Vec<u128>>,
    best_order: Vec<usize>,
    nodes: usize,
}

impl Search<'_> {
    /// Row of local vertex `v` placed after `placed`: bit `i` set when `v` is
    /// adjacent to the vertex at position `i`.
    fn row(&self, placed: &[usize], v: usize) -> u128 {
        placed
            .iter()
            .enumerate()
            .filter(|&(_, &p)| self.adj[v] >> p & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    fn go(&mut self, placed: &mut Vec<usize>, code: &mut Vec<u128>, remaining: u128) -> bool {
        self.nodes += 1;
        if self.nodes > SEARCH_BUDGET {
            return false;
        }
        if remaining == 0 {
            if self.best.as_ref().is_none_or(|b| *code < *b) {
                self.best = Some(code.clone());
                self.best_order = placed.clone();
            }
            return true;
        }
        let rest: Vec<usize> = (0..self.adj.len()).filter(|&v| remaining >> v & 1 == 1).collect();
        let min_colour = rest.iter().map(|&v| self.colour[v]).min().unwrap();
        let mut candidates: Vec<(u128, usize)> = rest
            .iter()
            .filter(|&&v| self.colour[v] == min_colour)
            .map(|&v| (self.row(placed, v), v))
            .collect();
        let min_row = candidates.iter().map(|c| c.0).min().unwrap();
        candidates.retain(|c| c.0 == min_row);

        let depth = code.len();
        if let Some(best) = &self.best {
            if code[..] > best[..depth] || (code[..] == best[..depth] && min_row > best[depth]) {
                return true;
            }
        }

        let mut tried: Vec<usize> = Vec::new();
        for &(row, v) in &candidates {
            // Swapping twins of equal colour is an automorphism fixing every
            // placed vertex, so one representative per twin class suffices.
            let twin = tried.iter().any(|&t| {
                let mask = !(1u128 << t | 1u128 << v);
                self.adj[t] & mask == self.adj[v] & mask
            });
            if twin {
                continue;
            }
            tried.push(v);
            placed.push(v);
            code.push(row);
            let ok = self.go(placed, code, remaining & !(1 << v));
            placed.pop();
            code.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

pub(crate) fn fingerprint(graph: &SimplicialGraph, s: VertexSet) -> String {
    let mut pairs: Vec<(u32, usize)> = s
        .iter()
        .map(|v| (graph.order(v), graph.link(v).intersection(s).len()))
        .collect();
    pairs.sort_unstable();
    let edges: usize = pairs.iter().map(|p| p.1).sum::<usize>() / 2;
    let body: Vec<String> = pairs.iter().map(|(o, d)| format!("{o}/{d}")).collect();
    format!("n{}:m{}:{}", s.len(), edges, body.join(","))
}

/// Isomorphism type of the induced subgraph on `s`, vertex orders included.
pub fn iso_type(graph: &SimplicialGraph, s: VertexSet) -> IsoType {
    if s.len() > EXACT_LIMIT {
        return IsoType::Fingerprint(fingerprint(graph, s));
    }
    let members: Vec<usize> = s.iter().collect();
    let colour = refine(graph, &members, s);
    let local = |v: usize| members.iter().position(|&m| m == v).unwrap();
    let adj: Vec<u128> = members
        .iter()
        .map(|&v| {
            graph
                .link(v)
                .intersection(s)
                .iter()
                .fold(0u128, |acc, w| acc | 1 << local(w))
        })
        .collect();
    let n = members.len();
    let mut search = Search {
        adj,
        colour: &colour,
        best: None,
        best_order: Vec::new(),
        nodes: 0,
    };
    let full = if n == 0 { 0 } else { u128::MAX >> (128 - n) };
    if !search.go(&mut Vec::new(), &mut Vec::new(), full) {
        return IsoType::Fingerprint(fingerprint(graph, s));
    }
    let order = search.best_order;
    let orders: Vec<String> = order
        .iter()
        .map(|&i| graph.order(members[i]).to_string())
        .collect();
    let mut edges = Vec::new();
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate().skip(i + 1) {
            if search.adj[a] >> b & 1 == 1 {
                edges.push(format!("{i}-{j}"));
            }
        }
    }
    IsoType::Exact(format!("n{n}:o{}:e{}", orders.join(","), edges.join(",")))
}
