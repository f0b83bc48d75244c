//! Enumeration of set partitions, diagrams and upward orbit representatives.

use super::PartitionDiagram;

/// All set partitions of `k` elements as restricted growth strings, in
/// lexicographic order.
pub fn set_partitions(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let top = if cur.is_empty() { 0 } else { max + 1 };
        for l in 0..=top {
            cur.push(l);
            rec(k, max.max(l), cur, out);
            cur.pop();
        }
    }
    rec(k, 0, &mut cur, &mut out);
    out
}

/// Bell numbers by the Bell triangle.
pub fn bell(k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..k {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Every `m × n` diagram exactly once, in a fixed order.
pub fn enumerate_diagrams(m: usize, n: usize) -> Vec<PartitionDiagram> {
    set_partitions(m + n)
        .into_iter()
        .map(|labels| PartitionDiagram::from_canonical(m, n, labels))
        .collect()
}

/// Representative of an upward `m × n` class modulo permutations of the bottom.
///
/// `top` is a set partition of the top vertices and `marked` lists, in
/// increasing order, the blocks that receive a bottom vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct UpwardOrbit {
    pub top: Vec<u8>,
    pub marked: Vec<u8>,
}

impl UpwardOrbit {
    pub fn m(&self) -> usize {
        self.top.len()
    }

    pub fn n(&self) -> usize {
        self.marked.len()
    }

    /// The normally ordered representative: bottom `i` joins the `i`-th marked block.
    pub fn representative(&self) -> PartitionDiagram {
        let raw: Vec<usize> = self
            .marked
            .iter()
            .map(|&b| b as usize)
            .chain(self.top.iter().map(|&b| b as usize))
            .collect();
        PartitionDiagram::from_labels(self.m(), self.n(), &raw).expect("orbit representative")
    }
}

fn combinations(k: usize, r: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, k: usize, r: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i as u8);
            rec(i + 1, k, r, cur, out);
            cur.pop();
        }
    }
    rec(0, k, r, &mut cur, &mut out);
    out
}

pub fn enumerate_upward_orbits(m: usize, n: usize) -> Vec<UpwardOrbit> {
    let mut out = Vec::new();
    for top in set_partitions(m) {
        let blocks = top.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        for marked in combinations(blocks, n) {
            out.push(UpwardOrbit { top: top.clone(), marked });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let want = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (k, &b) in want.iter().enumerate() {
            assert_eq!(bell(k), b);
            assert_eq!(set_partitions(k).len() as u128, b);
        }
    }

    #[test]
    fn small_diagram_lists() {
        assert_eq!(enumerate_diagrams(0, 0), vec![PartitionDiagram::empty()]);
        let v: Vec<String> = enumerate_diagrams(1, 1).iter().map(|d| d.to_string()).collect();
        assert_eq!(v, vec!["1 x 1 : {1,1'}", "1 x 1 : {1}{1'}"]);
        assert_eq!(enumerate_diagrams(2, 2).len(), 15);
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(enumerate_upward_orbits(0, 0).len(), 1);
        let o = enumerate_upward_orbits(1, 1);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].representative(), PartitionDiagram::identity(1));
        assert_eq!(enumerate_upward_orbits(4, 3).len(), 10);
        assert!(enumerate_upward_orbits(2, 3).is_empty());
    }
}
