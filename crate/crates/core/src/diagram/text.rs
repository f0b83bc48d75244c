//! The `m x n : {1,4,1',2'}{2,6}` text format.

use std::fmt;
use std::str::FromStr;

use super::{DiagramError, PartitionDiagram, Vertex};

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Bottom(i) => write!(f, "{i}"),
            Vertex::Top(j) => write!(f, "{j}'"),
        }
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {} : ", self.m, self.n)?;
        let blocks = self.blocks();
        if blocks.is_empty() {
            return write!(f, "(empty)");
        }
        for block in blocks {
            let parts: Vec<String> = block.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for PartitionDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| DiagramError::Parse(format!("{why} in {s:?}"));
        let (head, body) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let (m, n) = head.split_once('x').ok_or_else(|| bad("missing 'x'"))?;
        let m: usize = m.trim().parse().map_err(|_| bad("bad top arity"))?;
        let n: usize = n.trim().parse().map_err(|_| bad("bad bottom arity"))?;
        let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        let mut blocks = Vec::new();
        if body != "(empty)" && !body.is_empty() {
            let mut rest = body.as_str();
            while !rest.is_empty() {
                let inner = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
                let close = inner.find('}').ok_or_else(|| bad("unclosed block"))?;
                let mut block = Vec::new();
                for tok in inner[..close].split(',') {
                    let v = match tok.strip_suffix('\'') {
                        Some(j) => Vertex::Top(j.parse().map_err(|_| bad("bad vertex"))?),
                        None => Vertex::Bottom(tok.parse().map_err(|_| bad("bad vertex"))?),
                    };
                    block.push(v);
                }
                blocks.push(block);
                rest = &inner[close + 1..];
            }
        }
        PartitionDiagram::from_blocks(m, n, &blocks).map_err(|e| match e {
            DiagramError::Invalid(why) => DiagramError::Parse(why),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_canonical_order() {
        let d: PartitionDiagram = "2 x 3 : {3,2'}{1,2,1'}".parse().unwrap();
        assert_eq!(d.to_string(), "2 x 3 : {1,2,1'}{3,2'}");
        assert_eq!(d.to_string().parse::<PartitionDiagram>().unwrap(), d);
        assert_eq!(PartitionDiagram::empty().to_string(), "0 x 0 : (empty)");
        assert_eq!("0 x 0 : (empty)".parse::<PartitionDiagram>().unwrap(), PartitionDiagram::empty());
    }

    #[test]
    fn rejects_malformed() {
        for s in ["1 x 1 : {1}", "1 x 1 {1,1'}", "1 x 1 : {1,1'}{1}", "1 x 1 : {2,1'}", "a x 1 : {1}"] {
            assert!(s.parse::<PartitionDiagram>().is_err(), "{s}");
        }
    }
}
