//! Partition diagrams: set partitions of `n` bottom and `m` top vertices.
//!
//! Strands are numbered right to left, so vertex 1 is the rightmost one.
//! Vertices are ordered `B1 < … < Bn < T1 < … < Tm`, and a diagram is stored
//! as the restricted growth string of its block labels in that order, which
//! is exactly the sorted-blocks canonical form.

mod enumerate;
mod layers;
mod text;

pub use enumerate::{bell, enumerate_diagrams, enumerate_upward_orbits, set_partitions, UpwardOrbit};
pub use layers::{
    cap, crossing, crossing_layer, cup, leaf_down, leaf_down_layer, leaf_up, leaf_up_layer, merge,
    merge_layer, split, split_layer,
};

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("arity mismatch: cannot compose {0} after {1}")]
    ArityMismatch(String, String),
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A vertex of a diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Vertex {
    Bottom(usize),
    Top(usize),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionDiagram {
    m: usize,
    n: usize,
    labels: Vec<u8>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagramKind {
    Permutation,
    StrictlyUpward,
    StrictlyDownward,
    Upward,
    Downward,
    General,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramClass {
    pub kind: DiagramKind,
    pub propagating_rank: usize,
}

fn canonical_labels(raw: &[usize]) -> Vec<u8> {
    let mut map: Vec<Option<u8>> = vec![None; raw.iter().copied().max().map_or(0, |x| x + 1)];
    let mut next = 0u8;
    raw.iter()
        .map(|&r| {
            *map[r].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(k: usize) -> Self {
        UnionFind { parent: (0..k).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

impl PartitionDiagram {
    /// Builds a diagram from arbitrary block labels, one per vertex in the
    /// order `B1..Bn, T1..Tm`.
    pub fn from_labels(m: usize, n: usize, raw: &[usize]) -> Result<Self, DiagramError> {
        if raw.len() != m + n {
            return Err(DiagramError::Invalid(format!(
                "expected {} labels, got {}",
                m + n,
                raw.len()
            )));
        }
        if m + n > u8::MAX as usize {
            return Err(DiagramError::Invalid("too many vertices".into()));
        }
        Ok(PartitionDiagram { m, n, labels: canonical_labels(raw) })
    }

    pub fn from_blocks(m: usize, n: usize, blocks: &[Vec<Vertex>]) -> Result<Self, DiagramError> {
        let mut raw = vec![usize::MAX; m + n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(DiagramError::Invalid("empty block".into()));
            }
            for &v in block {
                let idx = match v {
                    Vertex::Bottom(i) if (1..=n).contains(&i) => i - 1,
                    Vertex::Top(j) if (1..=m).contains(&j) => n + j - 1,
                    _ => return Err(DiagramError::Invalid(format!("vertex {v:?} out of range"))),
                };
                if raw[idx] != usize::MAX {
                    return Err(DiagramError::Invalid(format!("vertex {v:?} repeated")));
                }
                raw[idx] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(DiagramError::Invalid("blocks do not cover every vertex".into()));
        }
        PartitionDiagram::from_labels(m, n, &raw)
    }

    pub(crate) fn from_canonical(m: usize, n: usize, labels: Vec<u8>) -> Self {
        debug_assert_eq!(canonical_labels(&labels.iter().map(|&l| l as usize).collect::<Vec<_>>()), labels);
        PartitionDiagram { m, n, labels }
    }

    /// Top arity.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Bottom arity.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical block labels in vertex order `B1..Bn, T1..Tm`.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn bottom_label(&self, i: usize) -> usize {
        self.labels[i] as usize
    }

    pub fn top_label(&self, j: usize) -> usize {
        self.labels[self.n + j] as usize
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks in canonical order, vertices sorted within each block.
    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (idx, &l) in self.labels.iter().enumerate() {
            let v = if idx < self.n { Vertex::Bottom(idx + 1) } else { Vertex::Top(idx - self.n + 1) };
            out[l as usize].push(v);
        }
        out
    }

    pub fn identity(n: usize) -> Self {
        let raw: Vec<usize> = (0..n).chain(0..n).collect();
        PartitionDiagram::from_labels(n, n, &raw).expect("identity")
    }

    pub fn empty() -> Self {
        PartitionDiagram { m: 0, n: 0, labels: Vec::new() }
    }

    /// The diagram with blocks `{B_i, T_{w(i)}}`, so that composing
    /// permutation diagrams composes the permutations.
    pub fn from_permutation(w: &Permutation) -> Self {
        let n = w.degree();
        let mut raw = vec![0; 2 * n];
        for i in 0..n {
            raw[i] = i;
            raw[n + w.apply(i)] = i;
        }
        PartitionDiagram::from_labels(n, n, &raw).expect("permutation")
    }

    /// The permutation this diagram represents, if it is one.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.m != self.n {
            return None;
        }
        let n = self.n;
        let mut images = vec![usize::MAX; n];
        // A permutation diagram has exactly n blocks, each {B_i, T_j}.
        if self.num_blocks() != n {
            return None;
        }
        for j in 0..n {
            let l = self.top_label(j);
            if l >= n || self.bottom_label(l) != l {
                return None;
            }
            images[l] = j;
        }
        // Bottoms are labelled 0..n in order when each block meets the bottom once.
        if (0..n).any(|i| self.bottom_label(i) != i) {
            return None;
        }
        Permutation::from_images(images)
    }

    /// `f ∘ g` with `f = self` stacked on top of `g`, plus the number of
    /// closed components that were discarded.
    pub fn compose(&self, g: &PartitionDiagram) -> Result<(PartitionDiagram, usize), DiagramError> {
        let f = self;
        if f.n != g.m {
            return Err(DiagramError::ArityMismatch(f.to_string(), g.to_string()));
        }
        let bg = g.num_blocks();
        let bf = f.num_blocks();
        let mut uf = UnionFind::new(bg + bf);
        for j in 0..f.n {
            uf.union(g.top_label(j), bg + f.bottom_label(j));
        }
        let mut boundary = vec![false; bg + bf];
        let mut raw = Vec::with_capacity(g.n + f.m);
        for i in 0..g.n {
            let r = uf.find(g.bottom_label(i));
            boundary[r] = true;
            raw.push(r);
        }
        for j in 0..f.m {
            let r = uf.find(bg + f.top_label(j));
            boundary[r] = true;
            raw.push(r);
        }
        let mut loops = 0;
        for x in 0..bg + bf {
            if uf.find(x) == x && !boundary[x] {
                loops += 1;
            }
        }
        Ok((PartitionDiagram::from_labels(f.m, g.n, &raw)?, loops))
    }

    /// Horizontal juxtaposition with `g` placed to the right of `self`;
    /// `g` keeps the low vertex indices.
    pub fn tensor(&self, g: &PartitionDiagram) -> PartitionDiagram {
        let f = self;
        let (m, n) = (f.m + g.m, f.n + g.n);
        let off = g.num_blocks();
        let mut raw = Vec::with_capacity(m + n);
        raw.extend((0..g.n).map(|i| g.bottom_label(i)));
        raw.extend((0..f.n).map(|i| off + f.bottom_label(i)));
        raw.extend((0..g.m).map(|j| g.top_label(j)));
        raw.extend((0..f.m).map(|j| off + f.top_label(j)));
        PartitionDiagram::from_labels(m, n, &raw).expect("tensor")
    }

    /// Reflection in a horizontal axis: tops become bottoms.
    pub fn flip(&self) -> PartitionDiagram {
        let mut raw: Vec<usize> = self.labels[self.n..].iter().map(|&l| l as usize).collect();
        raw.extend(self.labels[..self.n].iter().map(|&l| l as usize));
        PartitionDiagram::from_labels(self.n, self.m, &raw).expect("flip")
    }

    /// Per block: (number of bottom vertices, number of top vertices).
    pub fn block_profile(&self) -> Vec<(usize, usize)> {
        let mut prof = vec![(0, 0); self.num_blocks()];
        for i in 0..self.n {
            prof[self.bottom_label(i)].0 += 1;
        }
        for j in 0..self.m {
            prof[self.top_label(j)].1 += 1;
        }
        prof
    }

    pub fn propagating_rank(&self) -> usize {
        self.block_profile().iter().filter(|(b, t)| *b > 0 && *t > 0).count()
    }

    /// Every block has at most one bottom vertex and none is bottom-only.
    pub fn is_upward(&self) -> bool {
        self.block_profile().iter().all(|&(b, t)| b <= 1 && !(b > 0 && t == 0))
    }

    pub fn is_downward(&self) -> bool {
        self.block_profile().iter().all(|&(b, t)| t <= 1 && !(t > 0 && b == 0))
    }

    pub fn classify(&self) -> DiagramClass {
        let propagating_rank = self.propagating_rank();
        let (up, down) = (self.is_upward(), self.is_downward());
        let kind = match (up, down) {
            (true, true) => DiagramKind::Permutation,
            (true, false) if self.m > self.n => DiagramKind::StrictlyUpward,
            (true, false) => DiagramKind::Upward,
            (false, true) if self.m < self.n => DiagramKind::StrictlyDownward,
            (false, true) => DiagramKind::Downward,
            (false, false) => DiagramKind::General,
        };
        DiagramClass { kind, propagating_rank }
    }
}

/// Free-function form of [`PartitionDiagram::compose`].
pub fn compose(
    f: &PartitionDiagram,
    g: &PartitionDiagram,
) -> Result<(PartitionDiagram, usize), DiagramError> {
    f.compose(g)
}

pub fn tensor(f: &PartitionDiagram, g: &PartitionDiagram) -> PartitionDiagram {
    f.tensor(g)
}

pub fn flip_sigma(d: &PartitionDiagram) -> PartitionDiagram {
    d.flip()
}

pub fn classify(d: &PartitionDiagram) -> DiagramClass {
    d.classify()
}
