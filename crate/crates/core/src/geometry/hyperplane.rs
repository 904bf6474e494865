use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::ball::CayleyBall;
use crate::word::{GraphProduct, NormalForm, Syllable};

/// Names the hyperplane `g J_u` by its label `u` and the shortest element of
/// its carrier coset `g⟨star(u)⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperplaneId {
    pub label: usize,
    pub coset: NormalForm,
}

pub struct DisplayHyperplane<'a, 'g> {
    gp: &'a GraphProduct<'g>,
    id: &'a HyperplaneId,
}

impl fmt::Display for DisplayHyperplane<'_, '_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            self.gp.graph().vertex_name(self.id.label),
            self.gp.format(&self.id.coset)
        )
    }
}

impl<'g> GraphProduct<'g> {
    pub fn display_hyperplane<'a>(&'a self, id: &'a HyperplaneId) -> DisplayHyperplane<'a, 'g> {
        DisplayHyperplane { gp: self, id }
    }

    /// Hyperplane dual to the edges from `x` labelled by vertex `u`.
    pub fn hyperplane_of_edge(&self, x: &NormalForm, u: usize) -> Result<HyperplaneId> {
        if u >= self.graph().len() {
            return Err(Error::UnknownVertex(format!("#{u}")));
        }
        Ok(HyperplaneId {
            label: u,
            coset: self.coset_representative(x, self.graph().star(u))?,
        })
    }

    /// Hyperplanes crossed, in order, by the geodesic from `x` that spells
    /// the normal form of `x⁻¹y`. They are pairwise distinct and there are
    /// exactly `d(x, y)` of them.
    pub fn separating_hyperplanes(&self, x: &NormalForm, y: &NormalForm) -> Result<Vec<HyperplaneId>> {
        let path = self.quotient(x, y)?;
        let mut at = x.clone();
        let mut out = Vec::with_capacity(path.len());
        for &s in path.syllables() {
            out.push(self.hyperplane_of_edge(&at, s.vertex)?);
            at = self.mul_syllable(&at, s);
        }
        Ok(out)
    }

    /// Whether two hyperplanes cross inside `ball`: some induced square of
    /// the ball has one pair of opposite sides dual to `j1` and the other
    /// pair dual to `j2`.
    pub fn transverse(&self, j1: &HyperplaneId, j2: &HyperplaneId, ball: &CayleyBall) -> Result<bool> {
        if ball.graph_fingerprint() != self.graph().fingerprint() {
            return Err(Error::GraphMismatch);
        }
        for j in [j1, j2] {
            // The edge nearest the identity leaves the carrier's shortest element.
            if j.coset.len() + 1 > ball.radius() {
                return Err(Error::HyperplaneOutsideBall(self.display_hyperplane(j).to_string()));
            }
        }
        let g = self.graph();
        let (u, v) = (j1.label, j2.label);
        for x in ball.elements() {
            for s in (1..g.order(u)).map(|e| Syllable::new(u, e)) {
                for t in (1..g.order(v)).map(|e| Syllable::new(v, e)) {
                    let xs = self.mul_syllable(x, s);
                    let xt = self.mul_syllable(x, t);
                    let xst = self.mul_syllable(&xs, t);
                    if xst != self.mul_syllable(&xt, s)
                        || !(ball.contains(&xs) && ball.contains(&xt) && ball.contains(&xst))
                        || self.distance(x, &xst)? != 2
                        || self.distance(&xs, &xt)? != 2
                    {
                        continue;
                    }
                    if self.hyperplane_of_edge(x, u)? == *j1 && self.hyperplane_of_edge(x, v)? == *j2 {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }
}
