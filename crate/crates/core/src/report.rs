//! Full invariant report of one graph product.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geometry::is_essential;
use crate::graph::SimplicialGraph;
use crate::parse::parse_graph;
use crate::relhyp::{jinf, RhStatus};
use crate::squares::{MorseCertificate, SquareStructure};
use crate::vertex_set::VertexSet;
use crate::TOOL_VERSION;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    pub lambda0: Vec<String>,
    pub lambda1: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinsquareReport {
    pub vertices: Vec<String>,
    /// Sorted multiset of the vertex-group orders.
    pub orders: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MorseCertificateReport {
    SquareFree,
    Join {
        minsquare: Vec<String>,
        complete: Vec<String>,
    },
    CoreNotMinsquare {
        lambda0: Vec<String>,
        lambda1: Vec<String>,
        witness: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RhStatusReport {
    Hyperbolic,
    Proper,
    Trivial,
}

impl From<RhStatus> for RhStatusReport {
    fn from(s: RhStatus) -> Self {
        match s {
            RhStatus::Hyperbolic => RhStatusReport::Hyperbolic,
            RhStatus::Proper => RhStatusReport::Proper,
            RhStatus::Trivial => RhStatusReport::Trivial,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph_name: String,
    pub n_vertices: usize,
    /// Number of vertices per vertex-group order.
    pub orders: BTreeMap<u32, usize>,
    pub clique_number: usize,
    pub square_free: bool,
    pub hyperbolic: bool,
    pub essential: bool,
    pub core: CoreReport,
    pub n_induced_squares: usize,
    pub minsquare_subgraphs: Vec<MinsquareReport>,
    pub is_minsquare_graph: bool,
    pub cfs: bool,
    pub electrification_hyperbolic: bool,
    pub uncovered_squares: Vec<Vec<String>>,
    pub morse_all_hyperbolic: bool,
    pub morse_certificate: MorseCertificateReport,
    pub jinf: Vec<Vec<String>>,
    pub rh_status: RhStatusReport,
    pub tool_version: String,
}

pub fn analyze(graph: &SimplicialGraph) -> AnalysisReport {
    let names = |s: VertexSet| graph.names_of(s);
    let squares = SquareStructure::new(graph);
    let core = graph.core_decomposition(graph.all());
    let mut orders = BTreeMap::new();
    for &o in graph.orders() {
        *orders.entry(o).or_insert(0) += 1;
    }
    let minsquare_subgraphs = squares
        .minsquare_subgraphs()
        .iter()
        .map(|&m| {
            let mut orders: Vec<u32> = m.iter().map(|v| graph.order(v)).collect();
            orders.sort_unstable();
            MinsquareReport {
                vertices: names(m),
                orders,
            }
        })
        .collect();
    let elec = squares.electrification_hyperbolic();
    let morse = squares.morse_all_hyperbolic();
    let morse_certificate = match morse.certificate {
        MorseCertificate::SquareFree => MorseCertificateReport::SquareFree,
        MorseCertificate::Join {
            minsquare,
            complete,
        } => MorseCertificateReport::Join {
            minsquare: names(minsquare),
            complete: names(complete),
        },
        MorseCertificate::CoreNotMinsquare {
            lambda0,
            lambda1,
            witness,
        } => MorseCertificateReport::CoreNotMinsquare {
            lambda0: names(lambda0),
            lambda1: names(lambda1),
            witness: names(witness),
        },
    };
    let peripheral = jinf(graph);
    AnalysisReport {
        graph_name: graph.name().to_string(),
        n_vertices: graph.len(),
        orders,
        clique_number: graph.clique_number(),
        square_free: squares.squares().is_empty(),
        hyperbolic: squares.is_hyperbolic(),
        essential: is_essential(graph),
        core: CoreReport {
            lambda0: names(core.lambda0),
            lambda1: names(core.lambda1),
        },
        n_induced_squares: squares.squares().len(),
        minsquare_subgraphs,
        is_minsquare_graph: squares.is_minsquare_graph(),
        cfs: squares.cfs_check(),
        electrification_hyperbolic: elec.hyperbolic,
        uncovered_squares: elec.uncovered.iter().map(|sq| names(sq.vertices)).collect(),
        morse_all_hyperbolic: morse.all_hyperbolic,
        morse_certificate,
        jinf: peripheral.members.iter().map(|&m| names(m)).collect(),
        rh_status: peripheral.status.into(),
        tool_version: TOOL_VERSION.to_string(),
    }
}

/// Parses `.gg` source and analyses it.
pub fn analyze_source(source: &str) -> Result<AnalysisReport, Error> {
    Ok(analyze(&parse_graph(source)?))
}

fn set(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

fn sets(v: &[Vec<String>]) -> String {
    if v.is_empty() {
        "none".to_string()
    } else {
        v.iter().map(|s| set(s)).collect::<Vec<_>>().join(" ")
    }
}

impl AnalysisReport {
    /// Checks the equivalences every report must satisfy.
    pub fn is_consistent(&self) -> bool {
        let no_squares = self.n_induced_squares == 0;
        self.square_free == no_squares
            && self.hyperbolic == no_squares
            && self.minsquare_subgraphs.is_empty() == no_squares
            && (self.rh_status == RhStatusReport::Hyperbolic) == no_squares
    }

    /// Pretty JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let orders: Vec<String> = self.orders.iter().map(|(o, n)| format!("{n}x{o}")).collect();
        let _ = writeln!(out, "graph: {}", self.graph_name);
        let _ = writeln!(out, "vertices: {} (orders {})", self.n_vertices, orders.join(", "));
        let _ = writeln!(out, "clique number: {}", self.clique_number);
        let _ = writeln!(out, "induced squares: {}", self.n_induced_squares);
        let _ = writeln!(out, "hyperbolic: {}", self.hyperbolic);
        let _ = writeln!(out, "essential: {}", self.essential);
        let _ = writeln!(
            out,
            "core: lambda0 = {}, lambda1 = {}",
            set(&self.core.lambda0),
            set(&self.core.lambda1)
        );
        let minsquare: Vec<Vec<String>> = self.minsquare_subgraphs.iter().map(|m| m.vertices.clone()).collect();
        let _ = writeln!(out, "minsquare subgraphs: {}", sets(&minsquare));
        let _ = writeln!(out, "minsquare graph: {}", self.is_minsquare_graph);
        let _ = writeln!(out, "CFS: {}", self.cfs);
        let _ = writeln!(out, "electrification hyperbolic: {}", self.electrification_hyperbolic);
        if !self.uncovered_squares.is_empty() {
            let _ = writeln!(out, "  uncovered squares: {}", sets(&self.uncovered_squares));
        }
        let _ = writeln!(out, "all infinite-index Morse subgroups hyperbolic: {}", self.morse_all_hyperbolic);
        let cert = match &self.morse_certificate {
            MorseCertificateReport::SquareFree => "square-free".to_string(),
            MorseCertificateReport::Join { minsquare, complete } => {
                format!("join of minsquare {} and complete {}", set(minsquare), set(complete))
            }
            MorseCertificateReport::CoreNotMinsquare { lambda0, lambda1, witness } => format!(
                "core {} (with complete part {}) is not minsquare; minsquare subgraph {} differs",
                set(lambda0),
                set(lambda1),
                set(witness)
            ),
        };
        let _ = writeln!(out, "  certificate: {cert}");
        let _ = writeln!(out, "peripheral structure: {}", sets(&self.jinf));
        let status = match self.rh_status {
            RhStatusReport::Hyperbolic => "hyperbolic",
            RhStatusReport::Proper => "proper",
            RhStatusReport::Trivial => "trivial",
        };
        let _ = writeln!(out, "relative hyperbolicity: {status}");
        out
    }
}
