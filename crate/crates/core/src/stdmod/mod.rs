//! Weight spaces `1_m Δ(λ)` of standard modules, the diagram action on them,
//! and their contravariant forms.

mod gram;
mod structure;

pub use gram::{generic_gram_matrix, generic_rank, gram_matrix, simple_dim, GramMatrix};
pub use structure::{verify_block_structure, BlockCheck, BlockStructureReport};

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Zero};
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::diagram::{enumerate_upward_orbits, PartitionDiagram, UpwardOrbit};
use crate::exact::Rational;
use crate::linalg::Matrix;
use crate::perm::Permutation;
use crate::symfun::{specht_dim, Partition, SeminormalRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StdmodError {
    #[error("arity mismatch: element has bottom arity {element}, weight space has m = {space}")]
    ArityMismatch { element: usize, space: usize },
    #[error("vector has length {got}, expected {expected}")]
    Length { got: usize, expected: usize },
}

/// Seminormal data for `S(λ)` with the matrices of every permutation.
pub(crate) struct SpechtData {
    pub rep: SeminormalRep,
    pub mats: HashMap<Permutation, Matrix>,
}

pub(crate) fn specht_data(lambda: &Partition) -> Arc<SpechtData> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<SpechtData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(lambda) {
        return d.clone();
    }
    let rep = SeminormalRep::new(lambda);
    let mats = rep.all_matrices();
    let data = Arc::new(SpechtData { rep, mats });
    cache.lock().unwrap().insert(lambda.clone(), data.clone());
    data
}

/// Number of orbits of `m x n` upward diagrams under `S_n`:
/// `Σ_k S(m, k) C(k, n)`.
pub fn upward_orbit_count(m: usize, n: usize) -> u128 {
    if n > m {
        return 0;
    }
    // Stirling numbers of the second kind, row m.
    let mut row = vec![1u128];
    for i in 1..=m {
        let mut next = vec![0u128; i + 1];
        for (k, &s) in row.iter().enumerate() {
            next[k] += s * k as u128;
            next[k + 1] += s;
        }
        row = next;
    }
    let mut total = 0u128;
    for (k, &s) in row.iter().enumerate().skip(n) {
        let mut c = 1u128;
        for i in 0..n {
            c = c * (k - i) as u128 / (i + 1) as u128;
        }
        total += s * c;
    }
    total
}

pub fn delta_dim(lambda: &Partition, m: usize) -> u128 {
    upward_orbit_count(m, lambda.size()) * specht_dim(lambda) as u128
}

/// `1_m Δ(λ)` at parameter `t`, with basis `(orbit, tableau)` ordered
/// orbit-major.
#[derive(Clone)]
pub struct DeltaWeightSpace {
    lambda: Partition,
    m: usize,
    t: Rational,
    orbits: Vec<UpwardOrbit>,
    index: HashMap<(Vec<u8>, Vec<u8>), usize>,
    specht: Arc<SpechtData>,
}

/// Where an upward diagram lands: `D = rep(orbit) ∘ g`.
pub(crate) fn factor_upward(d: &PartitionDiagram) -> Option<(Vec<u8>, Vec<u8>, Permutation)> {
    let (m, n) = (d.m(), d.n());
    let mut relabel: Vec<Option<u8>> = vec![None; d.num_blocks()];
    let mut top = Vec::with_capacity(m);
    let mut next = 0u8;
    for j in 0..m {
        let l = d.top_label(j);
        let r = *relabel[l].get_or_insert_with(|| {
            next += 1;
            next - 1
        });
        top.push(r);
    }
    let mut beta = Vec::with_capacity(n);
    for i in 0..n {
        beta.push(relabel[d.bottom_label(i)]?);
    }
    let mut marked = beta.clone();
    marked.sort_unstable();
    if marked.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let images = beta.iter().map(|b| marked.binary_search(b).unwrap()).collect();
    Some((top, marked, Permutation::from_images(images)?))
}

impl DeltaWeightSpace {
    pub fn new(lambda: &Partition, m: usize, t: &Rational) -> Self {
        let orbits = enumerate_upward_orbits(m, lambda.size());
        let index = orbits.iter().enumerate().map(|(i, o)| ((o.top.clone(), o.marked.clone()), i)).collect();
        DeltaWeightSpace {
            lambda: lambda.clone(),
            m,
            t: t.clone(),
            orbits,
            index,
            specht: specht_data(lambda),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn orbits(&self) -> &[UpwardOrbit] {
        &self.orbits
    }

    pub fn specht(&self) -> &SeminormalRep {
        &self.specht.rep
    }

    pub(crate) fn specht_matrix(&self, g: &Permutation) -> &Matrix {
        &self.specht.mats[g]
    }

    pub fn specht_dim(&self) -> usize {
        self.specht.rep.dim()
    }

    pub fn dim(&self) -> usize {
        self.orbits.len() * self.specht_dim()
    }

    /// Basis vector for `(orbit, tableau)`.
    pub fn basis_vector(&self, orbit: usize, tableau: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[orbit * self.specht_dim() + tableau] = Rational::one();
        v
    }

    /// Apply a single diagram to orbit `o`'s block `block`, accumulating into `out`.
    fn act_diagram(
        &self,
        h: &PartitionDiagram,
        c: &Rational,
        o: usize,
        block: &[Rational],
        target: &DeltaWeightSpace,
        out: &mut [Rational],
    ) {
        let rep = self.orbits[o].representative();
        let (d, loops) = h.compose(&rep).expect("arity checked");
        let Some((top, marked, g)) = factor_upward(&d) else {
            return;
        };
        let o2 = target.index[&(top, marked)];
        let scal = c * &self.t.pow(loops as u32);
        let w = self.specht_matrix(&g).mul_vec(block);
        let k = self.specht_dim();
        for (i, x) in w.iter().enumerate() {
            if !x.is_zero() {
                out[o2 * k + i] += &(&scal * x);
            }
        }
    }

    /// `f · v` for `f : m → m'`, landing in `1_{m'} Δ(λ)`.
    pub fn act(
        &self,
        f: &AlgebraElement<Rational>,
        v: &[Rational],
    ) -> Result<(DeltaWeightSpace, Vec<Rational>), StdmodError> {
        if f.n() != self.m {
            return Err(StdmodError::ArityMismatch { element: f.n(), space: self.m });
        }
        if v.len() != self.dim() {
            return Err(StdmodError::Length { got: v.len(), expected: self.dim() });
        }
        let target = if f.m() == self.m { self.clone() } else { DeltaWeightSpace::new(&self.lambda, f.m(), &self.t) };
        let mut out = vec![Rational::zero(); target.dim()];
        let k = self.specht_dim();
        for o in 0..self.orbits.len() {
            let block = &v[o * k..(o + 1) * k];
            if block.iter().all(|x| x.is_zero()) {
                continue;
            }
            for (h, c) in f.terms() {
                self.act_diagram(h, c, o, block, &target, &mut out);
            }
        }
        Ok((target, out))
    }
}
