use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::SymfunError;

/// An integer partition: weakly decreasing positive parts.
///
/// Ordered first by size, then lexicographically by parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymfunError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymfunError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(SymfunError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        Partition { parts: (1..=w).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect() }
    }

    /// Contents `col - row` of all boxes, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &p) in self.parts.iter().enumerate() {
            out.extend((0..p).map(|c| c as i64 - r as i64));
        }
        out
    }

    /// Contents of the addable boxes.
    pub fn addable(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            let p = self.part(r + 1);
            if r == 0 || self.part(r) > p {
                out.push(p as i64 - r as i64);
            }
        }
        out
    }

    /// Contents of the removable boxes.
    pub fn removable(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for r in 0..self.len() {
            let p = self.parts[r];
            if self.part(r + 2) < p {
                out.push(p as i64 - 1 - r as i64);
            }
        }
        out
    }

    /// `λ + box of content c`, when such a box is addable.
    pub fn add_box(&self, c: i64) -> Option<Partition> {
        for r in 0..=self.len() {
            let p = self.part(r + 1);
            if p as i64 - r as i64 == c && (r == 0 || self.part(r) > p) {
                let mut parts = self.parts.clone();
                if r == parts.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                return Some(Partition { parts });
            }
        }
        None
    }

    /// `λ - box of content c`, when such a box is removable.
    pub fn remove_box(&self, c: i64) -> Option<Partition> {
        for r in 0..self.len() {
            let p = self.parts[r];
            if p as i64 - 1 - r as i64 == c && self.part(r + 2) < p {
                let mut parts = self.parts.clone();
                parts[r] -= 1;
                if parts[r] == 0 {
                    parts.pop();
                }
                return Some(Partition { parts });
            }
        }
        None
    }

    /// `(n - |λ|, λ_1, λ_2, …)`, when that is a partition.
    pub fn padded(&self, n: usize) -> Option<Partition> {
        let first = n.checked_sub(self.size())?;
        if first < self.part(1) {
            return None;
        }
        let mut parts = vec![first];
        parts.extend(&self.parts);
        Some(Partition::from_unsorted(parts))
    }

    /// Multiplicities `m_i` of each part size `i ≥ 1`, indexed from 0.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(1)];
        for &p in &self.parts {
            m[p - 1] += 1;
        }
        m
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions of size at most `n`, smallest first.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymfunError;

    /// Accepts `(5,3,3,2)`, `5,3,3,2`, `()`, and `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "∅" {
            return Ok(Partition::empty());
        }
        let inner = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s).trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SymfunError::Parse(format!("not a partition: {s:?}")))?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn add_rem_examples() {
        assert_eq!(p("()").addable(), vec![0]);
        assert!(p("()").removable().is_empty());
        assert_eq!(p("(1)").addable(), vec![1, -1]);
        assert_eq!(p("(1)").removable(), vec![0]);
        assert_eq!(p("(2,1)").addable(), vec![2, 0, -2]);
        assert_eq!(p("(2,1)").removable(), vec![1, -1]);
    }

    #[test]
    fn boxes() {
        assert_eq!(p("(2,1)").add_box(0), Some(p("(2,2)")));
        assert_eq!(p("(2,1)").remove_box(-1), Some(p("(2)")));
        assert_eq!(p("(2,1)").add_box(1), None);
        assert_eq!(p("(1)").padded(4), Some(p("(3,1)")));
        assert_eq!(p("(3)").padded(4), None);
    }

    #[test]
    fn counts_and_text() {
        let counts: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p("5,3,3,2").to_string(), "(5,3,3,2)");
        assert_eq!(p("∅").to_string(), "()");
        assert!("(1,2)".parse::<Partition>().is_err());
        assert_eq!(p("(3,1)").conjugate(), p("(2,1,1)"));
    }
}
