//! Exact arithmetic in the graph product.
//!
//! Vertex groups are cyclic of the order recorded on the vertex, so a
//! syllable is a vertex with an exponent in `1..order`. Words are reduced by
//! the three elementary moves (cancellation, amalgamation, shuffling) and
//! then put into the lexicographically least arrangement of their shuffle
//! class with respect to the vertex declaration order, which makes every
//! element's normal form unique.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: u32,
}

impl Syllable {
    pub fn new(vertex: usize, exponent: u32) -> Self {
        Syllable { vertex, exponent }
    }
}

/// An arbitrary, possibly unreduced, product of syllables. Exponents may be
/// zero; [`GraphProduct::reduce`] cancels them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub syllables: Vec<Syllable>,
}

impl Word {
    pub fn new(syllables: Vec<Syllable>) -> Self {
        Word { syllables }
    }

    /// Product of the given vertices, each with exponent 1.
    pub fn from_vertices(vertices: &[usize]) -> Self {
        Word::new(vertices.iter().map(|&v| Syllable::new(v, 1)).collect())
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// Canonical reduced word of a group element.
///
/// Its length is the word length `|g|` and equals the distance from the
/// identity in the Cayley graph whose generators are all non-trivial
/// vertex-group elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    graph: u64,
    syllables: Vec<Syllable>,
    support: VertexSet,
}

impl NormalForm {
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Vertices appearing in the normal form; the same for every reduced word
    /// of the element.
    pub fn support(&self) -> VertexSet {
        self.support
    }

    pub fn graph_fingerprint(&self) -> u64 {
        self.graph
    }

    pub fn to_word(&self) -> Word {
        Word::new(self.syllables.clone())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.syllables.iter().map(|s| (s.vertex, s.exponent)))
            .finish()
    }
}

/// The graph product over a simplicial graph with cyclic vertex groups.
#[derive(Clone, Copy)]
pub struct GraphProduct<'g> {
    graph: &'g SimplicialGraph,
}

impl<'g> GraphProduct<'g> {
    pub fn new(graph: &'g SimplicialGraph) -> Self {
        GraphProduct { graph }
    }

    pub fn graph(&self) -> &'g SimplicialGraph {
        self.graph
    }

    fn check(&self, x: &NormalForm) -> Result<()> {
        if x.graph == self.graph.fingerprint() {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    fn wrap(&self, syllables: Vec<Syllable>) -> NormalForm {
        let support = syllables.iter().map(|s| s.vertex).collect();
        NormalForm {
            graph: self.graph.fingerprint(),
            syllables,
            support,
        }
    }

    pub fn identity(&self) -> NormalForm {
        self.wrap(Vec::new())
    }

    /// The element `v^exponent` of a single vertex group.
    pub fn generator(&self, v: usize, exponent: u32) -> NormalForm {
        let e = exponent % self.graph.order(v);
        self.wrap(if e == 0 { vec![] } else { vec![Syllable::new(v, e)] })
    }

    /// Parses whitespace-separated `v` / `v^k` tokens. The token `e` (when no
    /// vertex is called `e`) and the empty string denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut syllables = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exponent) = match tok.split_once('^') {
                Some((name, k)) => {
                    let k: i64 = k.parse().map_err(|_| Error::BadToken(tok.to_string()))?;
                    (name, k)
                }
                None => (tok, 1),
            };
            let Some(v) = self.graph.vertex(name) else {
                if name == "e" {
                    continue;
                }
                return Err(Error::UnknownVertex(name.to_string()));
            };
            let order = self.graph.order(v);
            if exponent < 0 || exponent >= order as i64 {
                return Err(Error::InvalidExponent {
                    vertex: name.to_string(),
                    exponent,
                    order,
                });
            }
            syllables.push(Syllable::new(v, exponent as u32));
        }
        Ok(Word::new(syllables))
    }

    /// Parses and reduces in one go.
    pub fn element(&self, text: &str) -> Result<NormalForm> {
        self.reduce(&self.parse_word(text)?)
    }

    /// Renders a normal form as `a b^2 c`, or `e` for the identity.
    pub fn format(&self, x: &NormalForm) -> String {
        if x.is_identity() {
            return "e".to_string();
        }
        x.syllables
            .iter()
            .map(|s| {
                let name = self.graph.vertex_name(s.vertex);
                if s.exponent == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{}", s.exponent)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Appends one syllable to an already reduced word, amalgamating or
    /// cancelling with the last syllable it can be shuffled next to.
    fn push_reduced(&self, acc: &mut Vec<Syllable>, s: Syllable) {
        let order = self.graph.order(s.vertex);
        let e = s.exponent % order;
        if e == 0 {
            return;
        }
        for j in (0..acc.len()).rev() {
            let u = acc[j].vertex;
            if u == s.vertex {
                let merged = (acc[j].exponent + e) % order;
                if merged == 0 {
                    acc.remove(j);
                } else {
                    acc[j].exponent = merged;
                }
                return;
            }
            if !self.graph.adjacent(u, s.vertex) {
                break;
            }
        }
        acc.push(Syllable::new(s.vertex, e));
    }

    /// Lexicographically least rearrangement of a reduced word under
    /// shuffles: repeatedly emit the smallest vertex among the syllables that
    /// commute with everything still in front of them.
    fn canonicalize(&self, mut rest: Vec<Syllable>) -> Vec<Syllable> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut ahead = VertexSet::EMPTY;
            let mut best: Option<usize> = None;
            for (i, s) in rest.iter().enumerate() {
                if ahead.is_subset(self.graph.link(s.vertex))
                    && best.is_none_or(|b| s.vertex < rest[b].vertex)
                {
                    best = Some(i);
                }
                ahead.insert(s.vertex);
            }
            let i = best.expect("the first syllable is always available");
            out.push(rest.remove(i));
        }
        out
    }

    fn validate(&self, w: &Word) -> Result<()> {
        for s in &w.syllables {
            if s.vertex >= self.graph.len() {
                return Err(Error::UnknownVertex(format!("#{}", s.vertex)));
            }
            let order = self.graph.order(s.vertex);
            if s.exponent >= order {
                return Err(Error::InvalidExponent {
                    vertex: self.graph.vertex_name(s.vertex).to_string(),
                    exponent: s.exponent as i64,
                    order,
                });
            }
        }
        Ok(())
    }

    fn reduce_unchecked<I: IntoIterator<Item = Syllable>>(&self, syllables: I) -> NormalForm {
        let mut acc = Vec::new();
        for s in syllables {
            self.push_reduced(&mut acc, s);
        }
        self.wrap(self.canonicalize(acc))
    }

    /// Normal form of the element a word represents.
    pub fn reduce(&self, w: &Word) -> Result<NormalForm> {
        self.validate(w)?;
        Ok(self.reduce_unchecked(w.syllables.iter().copied()))
    }

    pub fn multiply(&self, x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.reduce_unchecked(x.syllables.iter().chain(&y.syllables).copied()))
    }

    /// Right multiplication by one syllable.
    pub fn mul_syllable(&self, x: &NormalForm, s: Syllable) -> NormalForm {
        self.reduce_unchecked(x.syllables.iter().copied().chain([s]))
    }

    fn inverse_syllable(&self, s: Syllable) -> Syllable {
        let order = self.graph.order(s.vertex);
        Syllable::new(s.vertex, (order - s.exponent) % order)
    }

    pub fn invert(&self, x: &NormalForm) -> Result<NormalForm> {
        self.check(x)?;
        Ok(self.reduce_unchecked(
            x.syllables.iter().rev().map(|&s| self.inverse_syllable(s)),
        ))
    }

    /// `x⁻¹ y`, whose length is the distance between `x` and `y`.
    pub fn quotient(&self, x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.reduce_unchecked(
            x.syllables
                .iter()
                .rev()
                .map(|&s| self.inverse_syllable(s))
                .chain(y.syllables.iter().copied()),
        ))
    }

    /// Word-metric distance `|x⁻¹ y|`.
    pub fn distance(&self, x: &NormalForm, y: &NormalForm) -> Result<usize> {
        Ok(self.quotient(x, y)?.len())
    }

    /// Membership in the parabolic subgroup generated by `s`.
    pub fn parabolic_membership(&self, x: &NormalForm, s: VertexSet) -> Result<bool> {
        self.check(x)?;
        Ok(x.support.is_subset(s))
    }

    /// Splits `x` as `head · tail` where `head` is the largest prefix lying in
    /// the parabolic subgroup of `s`: a syllable joins the head when its vertex
    /// is in `s` and it commutes with every syllable left behind before it.
    pub fn head(&self, x: &NormalForm, s: VertexSet) -> Result<(NormalForm, NormalForm)> {
        self.check(x)?;
        let mut head = Vec::new();
        let mut tail = Vec::new();
        let mut blocked = VertexSet::EMPTY;
        for &syl in &x.syllables {
            if s.contains(syl.vertex) && blocked.is_subset(self.graph.link(syl.vertex)) {
                head.push(syl);
            } else {
                blocked.insert(syl.vertex);
                tail.push(syl);
            }
        }
        Ok((
            self.wrap(self.canonicalize(head)),
            self.wrap(self.canonicalize(tail)),
        ))
    }

    /// The shortest element of the coset `x⟨s⟩`, obtained by stripping the
    /// largest suffix of `x` lying in `⟨s⟩`.
    pub fn coset_representative(&self, x: &NormalForm, s: VertexSet) -> Result<NormalForm> {
        self.check(x)?;
        let mut keep = Vec::new();
        let mut blocked = VertexSet::EMPTY;
        for &syl in x.syllables.iter().rev() {
            if s.contains(syl.vertex) && blocked.is_subset(self.graph.link(syl.vertex)) {
                continue;
            }
            blocked.insert(syl.vertex);
            keep.push(syl);
        }
        keep.reverse();
        Ok(self.wrap(self.canonicalize(keep)))
    }

    /// Gate of `x` in the coset `g⟨s⟩`: the unique nearest point, `g · head(g⁻¹x, s)`.
    pub fn project_to_parabolic(
        &self,
        x: &NormalForm,
        g: &NormalForm,
        s: VertexSet,
    ) -> Result<NormalForm> {
        let relative = self.quotient(g, x)?;
        let (head, _) = self.head(&relative, s)?;
        self.multiply(g, &head)
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

    #[test]
    fn reduce_examples() {
        let g = sq4();
        let gp = GraphProduct::new(&g);
        let r = |w: &str| gp.format(&gp.element(w).unwrap());
        assert_eq!(r("a a"), "e");
        assert_eq!(r("b a"), "a b");
        assert_eq!(r("a c a"), "a c a");
        assert_eq!(gp.element("a c a").unwrap().len(), 3);
        assert_eq!(r("e"), "e");
        assert_eq!(r("d b a"), "a d b");
        assert_eq!(r("b a b"), "a");

        let v = parse_graph("vertex v order=3").unwrap();
        let gp = GraphProduct::new(&v);
        assert_eq!(gp.format(&gp.element("v v").unwrap()), "v^2");
        assert_eq!(gp.format(&gp.element("v v^2").unwrap()), "e");
        assert_eq!(gp.format(&gp.element("v^0").unwrap()), "e");
    }

    #[test]
    fn reduce_errors() {
        let g = sq4();
        let gp = GraphProduct::new(&g);
        assert!(matches!(gp.parse_word("a z"), Err(Error::UnknownVertex(_))));
        assert!(matches!(gp.parse_word("a^2"), Err(Error::InvalidExponent { .. })));
        assert!(matches!(gp.parse_word("a^-1"), Err(Error::InvalidExponent { .. })));
        assert!(matches!(gp.parse_word("a^x"), Err(Error::BadToken(_))));
        let bad = Word::new(vec![Syllable::new(9, 1)]);
        assert!(gp.reduce(&bad).is_err());
    }

    #[test]
    fn group_law() {
        let g = sq4();
        let gp = GraphProduct::new(&g);
        let a = gp.element("a").unwrap();
        assert!(gp.multiply(&a, &a).unwrap().is_identity());
        let ac = gp.element("a c").unwrap();
        assert_eq!(gp.format(&gp.invert(&ac).unwrap()), "c a");

        let other = parse_graph("vertex a").unwrap();
        let gp2 = GraphProduct::new(&other);
        let x = gp2.element("a").unwrap();
        assert_eq!(gp.multiply(&a, &x), Err(Error::GraphMismatch));
    }

    #[test]
    fn parabolics_and_heads() {
        let g = sq4();
        let gp = GraphProduct::new(&g);
        let s = |ids: &[&str]| g.vertex_set(ids).unwrap();
        let ac = gp.element("a c").unwrap();
        assert!(gp.parabolic_membership(&ac, s(&["a", "c"])).unwrap());
        assert!(!gp.parabolic_membership(&gp.element("a b").unwrap(), s(&["a", "c"])).unwrap());
        assert!(gp.parabolic_membership(&gp.identity(), VertexSet::EMPTY).unwrap());

        let (h, t) = gp.head(&gp.element("a b").unwrap(), s(&["a"])).unwrap();
        assert_eq!((gp.format(&h), gp.format(&t)), ("a".into(), "b".into()));

        let x = gp.element("b a c").unwrap();
        let (h, t) = gp.head(&x, s(&["a", "c"])).unwrap();
        assert_eq!((gp.format(&h), gp.format(&t)), ("a c".into(), "b".into()));

        let (h, t) = gp.head(&x, g.all()).unwrap();
        assert_eq!(h, x);
        assert!(t.is_identity());
    }

    #[test]
    fn projections() {
        let g = sq4();
        let gp = GraphProduct::new(&g);
        let x = gp.element("b a c").unwrap();
        let ac = g.vertex_set(&["a", "c"]).unwrap();
        let p = gp.project_to_parabolic(&x, &gp.identity(), ac).unwrap();
        assert_eq!(gp.format(&p), "a c");
        let p = gp.project_to_parabolic(&x, &gp.identity(), VertexSet::EMPTY).unwrap();
        assert!(p.is_identity());
        let gcoset = gp.element("b").unwrap();
        let member = gp.element("b a c").unwrap();
        assert_eq!(gp.project_to_parabolic(&member, &gcoset, ac).unwrap(), member);
    }

    #[test]
    fn coset_representatives() {
        let g = sq4();
        let gp = GraphProduct::new(&g);
        let star_a = g.star(0);
        let rep = |w: &str| gp.format(&gp.coset_representative(&gp.element(w).unwrap(), star_a).unwrap());
        assert_eq!(rep("b"), "e");
        assert_eq!(rep("c"), "c");
        assert_eq!(rep("c a b"), "c");
        assert_eq!(rep("a c"), "a c");
    }

    #[test]
    fn alternating_words_do_not_collapse() {
        let g = sq4();
        let gp = GraphProduct::new(&g);
        for n in 1..=8 {
            let w = Word::from_vertices(&[0, 2].repeat(n));
            assert_eq!(gp.reduce(&w).unwrap().len(), 2 * n);
        }
    }
}
