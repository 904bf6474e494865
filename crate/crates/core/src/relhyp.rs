//! Minimal peripheral structure for relative hyperbolicity.
//!
//! Starting from the induced squares, members whose intersection is not
//! complete are merged, each merged union is enlarged once by [`cp`], and
//! the step is repeated until the collection stops changing.

use crate::graph::SimplicialGraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhStatus {
    /// No induced square: the group is hyperbolic.
    Hyperbolic,
    /// Hyperbolic relative to proper parabolic subgroups.
    Proper,
    /// Some member is the whole graph: not relatively hyperbolic.
    Trivial,
}

impl RhStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RhStatus::Hyperbolic => "hyperbolic",
            RhStatus::Proper => "proper",
            RhStatus::Trivial => "trivial",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralStructure {
    /// Members in canonical order.
    pub members: Vec<VertexSet>,
    /// Number of steps that changed the collection.
    pub iterations: usize,
    pub status: RhStatus,
    /// How many times two components of one step produced the same vertex
    /// set and were collapsed into one member.
    pub collapsed_duplicates: usize,
}

/// `s` together with every outside vertex whose link meets `s` in a
/// non-complete set. Applied once, not iterated.
pub fn cp(graph: &SimplicialGraph, s: VertexSet) -> VertexSet {
    let outside = graph.all().difference(s);
    outside
        .iter()
        .filter(|&v| !graph.is_complete(graph.link(v).intersection(s)))
        .fold(s, |acc, v| acc.with(v))
}

/// One merge-and-enlarge step. Returns the new collection (sorted, without
/// duplicates) and the number of duplicates collapsed.
pub fn jinf_step(graph: &SimplicialGraph, members: &[VertexSet]) -> (Vec<VertexSet>, usize) {
    let n = members.len();
    let mut component = vec![usize::MAX; n];
    let mut unions = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = unions.len();
        let mut union = VertexSet::EMPTY;
        let mut stack = vec![start];
        component[start] = id;
        while let Some(i) = stack.pop() {
            union = union.union(members[i]);
            for j in 0..n {
                if component[j] == usize::MAX
                    && !graph.is_complete(members[i].intersection(members[j]))
                {
                    component[j] = id;
                    stack.push(j);
                }
            }
        }
        unions.push(union);
    }
    let mut next: Vec<VertexSet> = unions.into_iter().map(|u| cp(graph, u)).collect();
    let before = next.len();
    next.sort();
    next.dedup();
    let collapsed = before - next.len();
    (next, collapsed)
}

/// Iterates [`jinf_step`] from the induced squares to its fixed point.
pub fn jinf(graph: &SimplicialGraph) -> PeripheralStructure {
    let mut members: Vec<VertexSet> = graph.induced_squares().iter().map(|sq| sq.vertices).collect();
    members.sort();
    members.dedup();
    let mut iterations = 0;
    let mut collapsed_duplicates = 0;
    loop {
        let (next, collapsed) = jinf_step(graph, &members);
        if next == members {
            break;
        }
        collapsed_duplicates += collapsed;
        members = next;
        iterations += 1;
    }
    let status = if members.is_empty() {
        RhStatus::Hyperbolic
    } else if members.contains(&graph.all()) {
        RhStatus::Trivial
    } else {
        RhStatus::Proper
    };
    PeripheralStructure {
        members,
        iterations,
        status,
        collapsed_duplicates,
    }
}
