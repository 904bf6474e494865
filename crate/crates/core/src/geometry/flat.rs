use crate::error::{Error, Result};
use crate::word::{GraphProduct, NormalForm, Syllable};

/// A `(p+1) × (q+1)` grid of group elements spanned by two commuting
/// alternating words, isometric to a rectangle of the square lattice when
/// the two vertex pairs form an induced square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatGrid {
    pub origin: NormalForm,
    /// Prefixes `ε, u, uv, uvu, ..` of the first alternating word.
    pub horizontal: Vec<NormalForm>,
    /// Prefixes `ε, a, ab, aba, ..` of the second alternating word.
    pub vertical: Vec<NormalForm>,
    /// Grid points, row `i` (horizontal step) major.
    points: Vec<NormalForm>,
}

impl FlatGrid {
    pub fn size(&self) -> (usize, usize) {
        (self.horizontal.len() - 1, self.vertical.len() - 1)
    }

    /// The point `origin · h_i · v_j`.
    pub fn point(&self, i: usize, j: usize) -> &NormalForm {
        &self.points[i * self.vertical.len() + j]
    }

    pub fn points(&self) -> impl Iterator<Item = ((usize, usize), &NormalForm)> {
        let cols = self.vertical.len();
        self.points
            .iter()
            .enumerate()
            .map(move |(k, p)| ((k / cols, k % cols), p))
    }

    /// Pairs of grid points whose word distance differs from the ℓ1 distance
    /// of their grid coordinates, with the measured distance.
    pub fn isometry_defects(
        &self,
        gp: &GraphProduct<'_>,
    ) -> Result<Vec<Defect>> {
        let pts: Vec<_> = self.points().collect();
        let mut defects = Vec::new();
        for (k, &((i, j), x)) in pts.iter().enumerate() {
            for &((i2, j2), y) in &pts[k + 1..] {
                let d = gp.distance(x, y)?;
                if d != i.abs_diff(i2) + j.abs_diff(j2) {
                    defects.push(((i, j), (i2, j2), d));
                }
            }
        }
        Ok(defects)
    }

    pub fn is_isometric(&self, gp: &GraphProduct<'_>) -> Result<bool> {
        Ok(self.isometry_defects(gp)?.is_empty())
    }
}

/// Two grid coordinates and the word distance measured between them.
pub type Defect = ((usize, usize), (usize, usize), usize);

fn alternating_prefixes(gp: &GraphProduct<'_>, pair: (usize, usize), size: usize) -> Vec<NormalForm> {
    let mut out = vec![gp.identity()];
    let mut at = gp.identity();
    for k in 0..size {
        let v = if k % 2 == 0 { pair.0 } else { pair.1 };
        at = gp.mul_syllable(&at, Syllable::new(v, 1));
        out.push(at.clone());
    }
    out
}

impl GraphProduct<'_> {
    /// Grid spanned by the alternating words over `diag1 = {u, v}` and
    /// `diag2 = {a, b}`, which must be the two diagonals of an induced
    /// square. `size` steps are taken in each direction.
    pub fn flat_witness(&self, diag1: (usize, usize), diag2: (usize, usize), size: usize) -> Result<FlatGrid> {
        let g = self.graph();
        let n = g.len();
        let (u, v) = diag1;
        let (a, b) = diag2;
        let name = |x: usize| {
            if x < n {
                g.vertex_name(x).to_string()
            } else {
                format!("#{x}")
            }
        };
        if [u, v, a, b].iter().any(|&x| x >= n) {
            return Err(Error::UnknownVertex(
                [u, v, a, b].iter().map(|&x| name(x)).collect::<Vec<_>>().join(","),
            ));
        }
        let describe = || format!("diagonals {{{}, {}}} and {{{}, {}}}", name(u), name(v), name(a), name(b));
        let distinct = u != v && a != b && ![a, b].contains(&u) && ![a, b].contains(&v);
        if !distinct
            || g.adjacent(u, v)
            || g.adjacent(a, b)
            || ![(u, a), (u, b), (v, a), (v, b)].iter().all(|&(x, y)| g.adjacent(x, y))
        {
            return Err(Error::NotInducedSquare(describe()));
        }

        let horizontal = alternating_prefixes(self, diag1, size);
        let vertical = alternating_prefixes(self, diag2, size);
        let origin = self.identity();
        let mut points = Vec::with_capacity(horizontal.len() * vertical.len());
        for h in &horizontal {
            let oh = self.multiply(&origin, h)?;
            for w in &vertical {
                points.push(self.multiply(&oh, w)?);
            }
        }
        Ok(FlatGrid {
            origin,
            horizontal,
            vertical,
            points,
        })
    }
}
