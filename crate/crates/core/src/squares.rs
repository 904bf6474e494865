//! Square-complete closures, minsquare subgraphs and the decision criteria
//! built on them.
//!
//! A vertex set is *square-complete* when every induced square meeting it in a
//! diagonal pair lies entirely inside it. *Minsquare* subgraphs are the
//! inclusion-minimal square-complete subgraphs containing an induced square;
//! each is the closure of one of its squares, which is how they are computed
//! here.

use std::cell::OnceCell;

use crate::graph::{InducedSquare, SimplicialGraph};
use crate::vertex_set::VertexSet;

/// One square absorbed by [`SquareStructure::closure`], with the diagonal
/// that was already present when it was absorbed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureStep {
    pub square: InducedSquare,
    pub trigger: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub seed: VertexSet,
    pub steps: Vec<ClosureStep>,
    pub result: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElectrificationVerdict {
    pub hyperbolic: bool,
    /// Squares contained in no minsquare subgraph.
    pub uncovered: Vec<InducedSquare>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorseCertificate {
    SquareFree,
    /// The graph is the join of a minsquare subgraph and a complete graph.
    Join {
        minsquare: VertexSet,
        complete: VertexSet,
    },
    /// The non-universal core `lambda0` is not minsquare; `witness` is a
    /// minsquare subgraph different from it.
    CoreNotMinsquare {
        lambda0: VertexSet,
        lambda1: VertexSet,
        witness: VertexSet,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorseVerdict {
    pub all_hyperbolic: bool,
    pub certificate: MorseCertificate,
}

/// Square data of one graph, with minsquare subgraphs computed on demand.
pub struct SquareStructure<'g> {
    graph: &'g SimplicialGraph,
    squares: Vec<InducedSquare>,
    minsquare: OnceCell<Vec<VertexSet>>,
}

impl<'g> SquareStructure<'g> {
    pub fn new(graph: &'g SimplicialGraph) -> Self {
        SquareStructure {
            graph,
            squares: graph.induced_squares(),
            minsquare: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g SimplicialGraph {
        self.graph
    }

    pub fn squares(&self) -> &[InducedSquare] {
        &self.squares
    }

    /// The first diagonal of `sq` lying inside `s`, if any.
    fn diagonal_inside(sq: &InducedSquare, s: VertexSet) -> Option<(usize, usize)> {
        sq.diagonals
            .into_iter()
            .find(|&(a, b)| s.contains(a) && s.contains(b))
    }

    pub fn is_square_complete(&self, s: VertexSet) -> bool {
        self.squares
            .iter()
            .all(|sq| sq.vertices.is_subset(s) || Self::diagonal_inside(sq, s).is_none())
    }

    /// Least square-complete superset of `seed`, with the squares absorbed
    /// on the way.
    pub fn closure(&self, seed: VertexSet) -> ClosureTrace {
        let mut current = seed;
        let mut steps = Vec::new();
        loop {
            let mut changed = false;
            for sq in &self.squares {
                if sq.vertices.is_subset(current) {
                    continue;
                }
                if let Some(trigger) = Self::diagonal_inside(sq, current) {
                    current = current.union(sq.vertices);
                    steps.push(ClosureStep {
                        square: *sq,
                        trigger,
                    });
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        ClosureTrace {
            seed,
            steps,
            result: current,
        }
    }

    /// Minsquare subgraphs in canonical order.
    pub fn minsquare_subgraphs(&self) -> &[VertexSet] {
        self.minsquare.get_or_init(|| {
            let mut closures: Vec<VertexSet> = self
                .squares
                .iter()
                .map(|sq| self.closure(sq.vertices).result)
                .collect();
            closures.sort();
            closures.dedup();
            let minimal: Vec<VertexSet> = closures
                .iter()
                .copied()
                .filter(|&c| !closures.iter().any(|&d| d != c && d.is_subset(c)))
                .collect();
            minimal
        })
    }

    /// True iff the graph has a square and no proper minsquare subgraph.
    pub fn is_minsquare_graph(&self) -> bool {
        self.minsquare_subgraphs() == [self.graph.all()]
    }

    /// Hyperbolicity of the graph product: no induced square.
    pub fn is_hyperbolic(&self) -> bool {
        self.squares.is_empty()
    }

    /// The electrification is hyperbolic iff every induced square lies in
    /// some minsquare subgraph.
    pub fn electrification_hyperbolic(&self) -> ElectrificationVerdict {
        let minsquare = self.minsquare_subgraphs();
        let uncovered: Vec<InducedSquare> = self
            .squares
            .iter()
            .filter(|sq| !minsquare.iter().any(|m| sq.vertices.is_subset(*m)))
            .copied()
            .collect();
        ElectrificationVerdict {
            hyperbolic: uncovered.is_empty(),
            uncovered,
        }
    }

    /// Every infinite-index Morse subgroup is hyperbolic iff the graph is
    /// square-free or the join of a minsquare subgraph and a complete graph.
    pub fn morse_all_hyperbolic(&self) -> MorseVerdict {
        if self.is_hyperbolic() {
            return MorseVerdict {
                all_hyperbolic: true,
                certificate: MorseCertificate::SquareFree,
            };
        }
        // A minsquare subgraph never contains a universal vertex, so the only
        // candidate join split is the core decomposition.
        let core = self.graph.core_decomposition(self.graph.all());
        let minsquare = self.minsquare_subgraphs();
        if minsquare.contains(&core.lambda0) {
            MorseVerdict {
                all_hyperbolic: true,
                certificate: MorseCertificate::Join {
                    minsquare: core.lambda0,
                    complete: core.lambda1,
                },
            }
        } else {
            MorseVerdict {
                all_hyperbolic: false,
                certificate: MorseCertificate::CoreNotMinsquare {
                    lambda0: core.lambda0,
                    lambda1: core.lambda1,
                    witness: minsquare[0],
                },
            }
        }
    }

    /// Squares with all vertex orders 2 that are square-complete on their own.
    pub fn square_complete_z2_squares(&self) -> Vec<InducedSquare> {
        self.squares
            .iter()
            .filter(|sq| sq.vertices.iter().all(|v| self.graph.order(v) == 2))
            .filter(|sq| self.is_square_complete(sq.vertices))
            .copied()
            .collect()
    }

    /// Whether the vertices are covered by a chain of induced squares with
    /// consecutive squares sharing a non-adjacent pair.
    pub fn cfs_check(&self) -> bool {
        let n = self.squares.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut x = x;
            while parent[x] != r {
                let next = parent[x];
                parent[x] = r;
                x = next;
            }
            r
        }
        for i in 0..n {
            for j in i + 1..n {
                let shared = self.squares[i].vertices.intersection(self.squares[j].vertices);
                if !self.graph.is_complete(shared) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let mut cover = vec![VertexSet::EMPTY; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            cover[r] = cover[r].union(self.squares[i].vertices);
        }
        n > 0 && cover.iter().any(|&c| c == self.graph.all())
    }
}
