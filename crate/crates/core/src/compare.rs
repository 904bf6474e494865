//! Pairwise comparison of graph products by quasi-isometry invariants.
//!
//! Every invariant compared here must agree between quasi-isometric graph
//! products, so a difference proves the two are not quasi-isometric. Equal
//! invariants prove nothing.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::SimplicialGraph;
use crate::iso::{iso_type, IsoType};
use crate::parse::parse_graph;
use crate::relhyp::jinf;
use crate::squares::SquareStructure;
use crate::vertex_set::VertexSet;

pub const FOOTER: &str = "note: minsquare and peripheral pieces are compared up to isomorphism, \
which is finer than the quasi-isometry type the invariants are transported along; \
\"inconclusive\" never means quasi-isometric";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Distinguished,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDifference {
    pub invariant: String,
    pub value_a: String,
    pub value_b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonVerdict {
    pub graph_a: String,
    pub graph_b: String,
    pub distinguishing_invariants: Vec<InvariantDifference>,
    pub verdict: Verdict,
    pub note: String,
}

/// Invariant values of one graph, in comparison order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QiProfile {
    pub name: String,
    pub hyperbolic: bool,
    /// Not square-free and a join of a minsquare subgraph and a clique.
    pub minsquare_join_form: bool,
    pub square_complete_z2_square: bool,
    pub electrification_hyperbolic: bool,
    minsquare_pieces: Vec<VertexSet>,
    jinf_pieces: Vec<VertexSet>,
}

impl QiProfile {
    pub fn new(graph: &SimplicialGraph) -> Self {
        let squares = SquareStructure::new(graph);
        let morse = squares.morse_all_hyperbolic();
        QiProfile {
            name: graph.name().to_string(),
            hyperbolic: squares.is_hyperbolic(),
            minsquare_join_form: !squares.squares().is_empty() && morse.all_hyperbolic,
            square_complete_z2_square: !squares.square_complete_z2_squares().is_empty(),
            electrification_hyperbolic: squares.electrification_hyperbolic().hyperbolic,
            minsquare_pieces: squares.minsquare_subgraphs().to_vec(),
            jinf_pieces: jinf(graph).members,
        }
    }
}

/// Sorted isomorphism types of `pieces`, rendered. When exact types are not
/// available for every piece of both sides the fingerprints are used for all.
fn type_multisets(
    a: (&SimplicialGraph, &[VertexSet]),
    b: (&SimplicialGraph, &[VertexSet]),
) -> (String, String) {
    let types = |(g, pieces): (&SimplicialGraph, &[VertexSet])| -> Vec<IsoType> {
        pieces.iter().map(|&p| iso_type(g, p)).collect()
    };
    let (ta, tb) = (types(a), types(b));
    let exact = ta.iter().chain(&tb).all(IsoType::is_exact);
    let render = |mut ts: Vec<IsoType>, (g, pieces): (&SimplicialGraph, &[VertexSet])| {
        if !exact {
            ts = pieces.iter().map(|&p| IsoType::Fingerprint(crate::iso::fingerprint(g, p))).collect();
        }
        let mut s: Vec<String> = ts.iter().map(IsoType::as_string).collect();
        s.sort();
        format!("[{}]", s.join(" "))
    };
    (render(ta, a), render(tb, b))
}

pub fn compare(a: &SimplicialGraph, b: &SimplicialGraph) -> ComparisonVerdict {
    let (pa, pb) = (QiProfile::new(a), QiProfile::new(b));
    let mut rows: Vec<(&str, String, String)> = vec![
        ("hyperbolic", pa.hyperbolic.to_string(), pb.hyperbolic.to_string()),
        (
            "minsquare_join_form",
            pa.minsquare_join_form.to_string(),
            pb.minsquare_join_form.to_string(),
        ),
        (
            "square_complete_z2_square",
            pa.square_complete_z2_square.to_string(),
            pb.square_complete_z2_square.to_string(),
        ),
        (
            "electrification_hyperbolic",
            pa.electrification_hyperbolic.to_string(),
            pb.electrification_hyperbolic.to_string(),
        ),
    ];
    let (ma, mb) = type_multisets((a, &pa.minsquare_pieces), (b, &pb.minsquare_pieces));
    rows.push(("minsquare_types", ma, mb));
    let (ja, jb) = type_multisets((a, &pa.jinf_pieces), (b, &pb.jinf_pieces));
    rows.push(("jinf_types", ja, jb));

    let distinguishing_invariants: Vec<InvariantDifference> = rows
        .into_iter()
        .filter(|(_, x, y)| x != y)
        .map(|(name, x, y)| InvariantDifference {
            invariant: name.to_string(),
            value_a: x,
            value_b: y,
        })
        .collect();
    let verdict = if distinguishing_invariants.is_empty() {
        Verdict::Inconclusive
    } else {
        Verdict::Distinguished
    };
    ComparisonVerdict {
        graph_a: pa.name,
        graph_b: pb.name,
        distinguishing_invariants,
        verdict,
        note: FOOTER.to_string(),
    }
}

pub fn compare_sources(a: &str, b: &str) -> Result<ComparisonVerdict, Error> {
    Ok(compare(&parse_graph(a)?, &parse_graph(b)?))
}

impl ComparisonVerdict {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("verdicts always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "compare: {} vs {}", self.graph_a, self.graph_b);
        for d in &self.distinguishing_invariants {
            let _ = writeln!(out, "  {}: {} vs {}", d.invariant, d.value_a, d.value_b);
        }
        let verdict = match self.verdict {
            Verdict::Distinguished => "distinguished",
            Verdict::Inconclusive => "inconclusive",
        };
        let _ = writeln!(out, "verdict: {verdict}");
        let _ = writeln!(out, "{}", self.note);
        out
    }
}
