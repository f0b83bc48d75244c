//! Generating diagrams and single-layer helpers.
//!
//! A layer acts on strands `i, i+1` (or `i`) and is the identity elsewhere.
//! Strands to the left of the action carry higher indices.

use super::PartitionDiagram;

fn d(m: usize, n: usize, raw: &[usize]) -> PartitionDiagram {
    PartitionDiagram::from_labels(m, n, raw).expect("generator")
}

/// `0 → 2`, a single block `{T1, T2}`.
pub fn cup() -> PartitionDiagram {
    d(2, 0, &[0, 0])
}

/// `2 → 0`, a single block `{B1, B2}`.
pub fn cap() -> PartitionDiagram {
    d(0, 2, &[0, 0])
}

/// `2 → 1`, a single block `{B1, B2, T1}`.
pub fn merge() -> PartitionDiagram {
    d(1, 2, &[0, 0, 0])
}

/// `1 → 2`, a single block `{B1, T1, T2}`.
pub fn split() -> PartitionDiagram {
    d(2, 1, &[0, 0, 0])
}

/// `0 → 1`.
pub fn leaf_up() -> PartitionDiagram {
    d(1, 0, &[0])
}

/// `1 → 0`.
pub fn leaf_down() -> PartitionDiagram {
    d(0, 1, &[0])
}

/// The transposition of two strands.
pub fn crossing() -> PartitionDiagram {
    d(2, 2, &[0, 1, 1, 0])
}

fn embed(left: usize, core: &PartitionDiagram, right: usize) -> PartitionDiagram {
    PartitionDiagram::identity(left)
        .tensor(core)
        .tensor(&PartitionDiagram::identity(right))
}

/// Crossing of strands `i, i+1` among `n`.
pub fn crossing_layer(n: usize, i: usize) -> PartitionDiagram {
    assert!(i >= 1 && i < n, "crossing position out of range");
    embed(n - i - 1, &crossing(), i - 1)
}

/// `n → n-1`, merging strands `i, i+1` into strand `i`.
pub fn merge_layer(n: usize, i: usize) -> PartitionDiagram {
    assert!(i >= 1 && i < n, "merge position out of range");
    embed(n - i - 1, &merge(), i - 1)
}

/// `n-1 → n`, splitting strand `i` into strands `i, i+1`.
pub fn split_layer(n: usize, i: usize) -> PartitionDiagram {
    assert!(i >= 1 && i < n, "split position out of range");
    embed(n - i - 1, &split(), i - 1)
}

/// `n → n-1`, ending strand `i`.
pub fn leaf_down_layer(n: usize, i: usize) -> PartitionDiagram {
    assert!(i >= 1 && i <= n, "leaf position out of range");
    embed(n - i, &leaf_down(), i - 1)
}

/// `n-1 → n`, starting a new strand at position `i`.
pub fn leaf_up_layer(n: usize, i: usize) -> PartitionDiagram {
    assert!(i >= 1 && i <= n, "leaf position out of range");
    embed(n - i, &leaf_up(), i - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layer_shapes() {
        assert_eq!(crossing_layer(3, 1).to_string(), "3 x 3 : {1,2'}{2,1'}{3,3'}");
        assert_eq!(crossing_layer(3, 2).to_string(), "3 x 3 : {1,1'}{2,3'}{3,2'}");
        assert_eq!(merge_layer(3, 2).to_string(), "2 x 3 : {1,1'}{2,3,2'}");
        assert_eq!(split_layer(3, 1).to_string(), "3 x 2 : {1,1',2'}{2,3'}");
        assert_eq!(leaf_up_layer(2, 1).to_string(), "2 x 1 : {1,2'}{1'}");
        assert_eq!(leaf_down_layer(2, 2).to_string(), "1 x 2 : {1,1'}{2}");
    }

    #[test]
    fn frobenius_unit_and_speciality() {
        let (x, loops) = merge().compose(&split()).unwrap();
        assert_eq!((x, loops), (PartitionDiagram::identity(1), 0));
        let (x, loops) = merge()
            .compose(&PartitionDiagram::identity(1).tensor(&leaf_up()))
            .unwrap();
        assert_eq!((x, loops), (PartitionDiagram::identity(1), 0));
    }
}
