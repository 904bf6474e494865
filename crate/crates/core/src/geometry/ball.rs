use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::squares::SquareStructure;
use crate::vertex_set::VertexSet;
use crate::word::{GraphProduct, NormalForm, Syllable};

/// Default upper bound on the number of ball vertices.
pub const DEFAULT_VERTEX_CAP: usize = 200_000;

/// Marker for unreachable vertices in [`CayleyBall::distances_from`].
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallEdge {
    pub a: usize,
    pub b: usize,
    /// Vertex of the simplicial graph whose group element labels the edge.
    pub label: usize,
}

/// Ball elements lying in one coset `g⟨Λ⟩` of a minsquare parabolic
/// subgroup. In the electrified ball they are pairwise adjacent.
#[derive(Clone, Debug)]
pub struct ConeClass {
    pub minsquare: VertexSet,
    pub representative: NormalForm,
    pub members: Vec<usize>,
}

/// The ball of radius `radius` around the identity in the Cayley graph of the
/// graph product, with all non-trivial vertex-group elements as generators.
/// Optionally coned off over the cosets of minsquare parabolic subgroups.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    graph: u64,
    radius: usize,
    electrified: bool,
    elements: Vec<NormalForm>,
    index: HashMap<NormalForm, usize>,
    edges: Vec<BallEdge>,
    neighbors: Vec<Vec<usize>>,
    cone_classes: Vec<ConeClass>,
    classes_of: Vec<Vec<usize>>,
    layer_sizes: Vec<usize>,
}

impl CayleyBall {
    /// Builds the ball, refusing to grow beyond `cap` vertices.
    pub fn build(graph: &SimplicialGraph, radius: usize, electrified: bool, cap: usize) -> Result<Self> {
        let gp = GraphProduct::new(graph);
        let generators: Vec<Syllable> = (0..graph.len())
            .flat_map(|v| (1..graph.order(v)).map(move |e| Syllable::new(v, e)))
            .collect();

        let identity = gp.identity();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0)]);
        let mut edges = Vec::new();
        let mut layer_sizes = vec![1];
        let mut layer = 0..1;
        for r in 0..=radius {
            for i in layer.clone() {
                for &s in &generators {
                    let y = gp.mul_syllable(&elements[i], s);
                    if y.len() > radius {
                        continue;
                    }
                    let j = match index.get(&y) {
                        Some(&j) => j,
                        None if y.len() == r + 1 => {
                            let j = elements.len();
                            index.insert(y.clone(), j);
                            elements.push(y);
                            j
                        }
                        None => unreachable!("a neighbour of a length-{r} element has length {}", y.len()),
                    };
                    if i < j {
                        edges.push(BallEdge {
                            a: i,
                            b: j,
                            label: s.vertex,
                        });
                    }
                }
                if elements.len() > cap {
                    return Err(Error::CapExceeded {
                        cap,
                        radius_reached: r,
                    });
                }
            }
            if r < radius {
                layer_sizes.push(elements.len() - layer.end);
            }
            layer = layer.end..elements.len();
        }

        let mut neighbors = vec![Vec::new(); elements.len()];
        for e in &edges {
            neighbors[e.a].push(e.b);
            neighbors[e.b].push(e.a);
        }

        let mut cone_classes = Vec::new();
        let mut classes_of = vec![Vec::new(); elements.len()];
        if electrified {
            let squares = SquareStructure::new(graph);
            for &lambda in squares.minsquare_subgraphs() {
                let mut cosets: HashMap<NormalForm, Vec<usize>> = HashMap::new();
                for (i, x) in elements.iter().enumerate() {
                    let rep = gp.coset_representative(x, lambda)?;
                    cosets.entry(rep).or_default().push(i);
                }
                let mut cosets: Vec<_> = cosets.into_iter().filter(|(_, m)| m.len() > 1).collect();
                cosets.sort_by_key(|(_, m)| m[0]);
                for (representative, members) in cosets {
                    let id = cone_classes.len();
                    for &m in &members {
                        classes_of[m].push(id);
                    }
                    cone_classes.push(ConeClass {
                        minsquare: lambda,
                        representative,
                        members,
                    });
                }
            }
        }

        Ok(CayleyBall {
            graph: graph.fingerprint(),
            radius,
            electrified,
            elements,
            index,
            edges,
            neighbors,
            cone_classes,
            classes_of,
            layer_sizes,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn is_electrified(&self) -> bool {
        self.electrified
    }

    pub fn graph_fingerprint(&self) -> u64 {
        self.graph
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in BFS order; index 0 is the identity.
    pub fn elements(&self) -> &[NormalForm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &NormalForm {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &NormalForm) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.index.contains_key(x)
    }

    /// Number of elements of each length `0..=radius`.
    pub fn sphere_sizes(&self) -> &[usize] {
        &self.layer_sizes
    }

    /// Cayley-graph edges with both ends in the ball.
    pub fn edges(&self) -> &[BallEdge] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn cone_classes(&self) -> &[ConeClass] {
        &self.cone_classes
    }

    /// Distinct pairs `(i, j)`, `i < j`, lying in a common cone class. Pairs
    /// that are also Cayley edges are included.
    pub fn cone_edges(&self) -> Vec<(usize, usize)> {
        let mut seen = HashSet::new();
        for class in &self.cone_classes {
            for (k, &i) in class.members.iter().enumerate() {
                for &j in &class.members[k + 1..] {
                    seen.insert((i.min(j), i.max(j)));
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Breadth-first distances from `source` inside the ball, following cone
    /// classes when electrified.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.elements.len()];
        let mut class_done = vec![false; self.cone_classes.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(x) = queue.pop_front() {
            let d = dist[x] + 1;
            for &y in &self.neighbors[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = d;
                    queue.push_back(y);
                }
            }
            for &c in &self.classes_of[x] {
                if class_done[c] {
                    continue;
                }
                class_done[c] = true;
                for &y in &self.cone_classes[c].members {
                    if dist[y] == UNREACHABLE {
                        dist[y] = d;
                        queue.push_back(y);
                    }
                }
            }
        }
        dist
    }

    fn locate(&self, gp: &GraphProduct<'_>, x: &NormalForm) -> Result<usize> {
        if x.graph_fingerprint() != self.graph {
            return Err(Error::GraphMismatch);
        }
        self.index_of(x)
            .ok_or_else(|| Error::OutsideBall(gp.format(x)))
    }

    /// Distance between two ball elements measured inside the ball.
    pub fn distance(&self, gp: &GraphProduct<'_>, x: &NormalForm, y: &NormalForm) -> Result<usize> {
        let i = self.locate(gp, x)?;
        let j = self.locate(gp, y)?;
        let d = self.distances_from(i)[j];
        debug_assert_ne!(d, UNREACHABLE, "balls are connected");
        Ok(d as usize)
    }
}

/// Electrified distance together with the radius of the ball it was
/// measured in. The value is an upper bound for the distance in the full
/// electrification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElectrifiedDistance {
    pub value: usize,
    pub radius: usize,
}

pub fn electrified_distance(
    graph: &SimplicialGraph,
    x: &NormalForm,
    y: &NormalForm,
    radius: usize,
    cap: usize,
) -> Result<ElectrifiedDistance> {
    let gp = GraphProduct::new(graph);
    let ball = CayleyBall::build(graph, radius, true, cap)?;
    Ok(ElectrifiedDistance {
        value: ball.distance(&gp, x, y)?,
        radius,
    })
}
