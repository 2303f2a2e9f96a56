use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::widthfn::{WidthFunction, WidthValue};

/// Tree of bags. `widths[i]` is the width function's value on `bags[i]`
/// (empty when not annotated).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
    pub widths: Vec<WidthValue>,
}

impl TreeDecomposition {
    pub fn single(bag: VertexSet) -> Self {
        TreeDecomposition {
            bags: vec![bag],
            edges: Vec::new(),
            widths: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Fills `widths` with `f` evaluated on every bag.
    pub fn annotate<F: WidthFunction + ?Sized>(&mut self, f: &F) -> Result<()> {
        self.widths = self.bags.iter().map(|&b| f.eval(b)).collect::<Result<_>>()?;
        Ok(())
    }

    /// Checks that the node/edge lists form a single tree.
    pub fn check_tree(&self) -> Result<()> {
        let k = self.bags.len();
        if k == 0 {
            return Err(Error::NotATree("no bags".into()));
        }
        if self.edges.len() != k - 1 {
            return Err(Error::NotATree(format!(
                "{} nodes but {} edges",
                k,
                self.edges.len()
            )));
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if a >= k || b >= k {
                return Err(Error::NotATree(format!("edge {a}-{b} out of range")));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::NotATree(format!("edge {a}-{b} closes a cycle")));
            }
            parent[ra] = rb;
        }
        Ok(())
    }
}

/// Verifies the three tree-decomposition conditions with respect to `h` and
/// returns the `f`-width, i.e. the maximum of `f` over all bags.
pub fn validate_decomposition<F: WidthFunction + ?Sized>(
    h: &Hypergraph,
    td: &TreeDecomposition,
    f: &F,
) -> Result<WidthValue> {
    td.check_tree()?;
    let covered = td.bags.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
    if let Some(v) = h.vertices().difference(covered).min() {
        return Err(Error::VertexUncovered(v));
    }
    for &e in h.edges() {
        if !td.bags.iter().any(|&b| e.is_subset(b)) {
            return Err(Error::EdgeUncovered(e));
        }
    }
    // In a forest, the nodes holding v are connected iff they span exactly
    // (count - 1) tree edges.
    for v in covered {
        let nodes = td.bags.iter().filter(|b| b.contains(v)).count();
        let links = td
            .edges
            .iter()
            .filter(|&&(a, b)| td.bags[a].contains(v) && td.bags[b].contains(v))
            .count();
        if links + 1 != nodes {
            return Err(Error::SubtreeDisconnected(v));
        }
    }
    let mut width: Option<WidthValue> = None;
    for &b in &td.bags {
        let w = f.eval(b)?;
        if width.as_ref().is_none_or(|cur| w > *cur) {
            width = Some(w);
        }
    }
    Ok(width.expect("at least one bag"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::widthfn::{size_width, SizeWidth};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn path3() -> Hypergraph {
        Hypergraph::new(3, vec![set(&[0, 1]), set(&[1, 2])]).unwrap()
    }

    #[test]
    fn single_bag_is_valid() {
        let h = Hypergraph::new(4, vec![set(&[0, 1, 2]), set(&[2, 3])]).unwrap();
        let td = TreeDecomposition::single(h.vertices());
        assert_eq!(
            validate_decomposition(&h, &td, &SizeWidth).unwrap(),
            size_width(h.vertices())
        );
    }

    #[test]
    fn path_decomposition() {
        let td = TreeDecomposition {
            bags: vec![set(&[0, 1]), set(&[1, 2])],
            edges: vec![(0, 1)],
            widths: vec![],
        };
        assert_eq!(validate_decomposition(&path3(), &td, &SizeWidth).unwrap(), WidthValue::int(1));
    }

    #[test]
    fn missing_edge() {
        let h = Hypergraph::new(4, vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]).unwrap();
        let td = TreeDecomposition {
            bags: vec![set(&[0, 1]), set(&[2, 3])],
            edges: vec![(0, 1)],
            widths: vec![],
        };
        assert_eq!(
            validate_decomposition(&h, &td, &SizeWidth),
            Err(Error::EdgeUncovered(set(&[1, 2])))
        );
    }

    #[test]
    fn uncovered_vertex_and_broken_subtree() {
        let h = path3();
        let td = TreeDecomposition {
            bags: vec![set(&[0, 1])],
            edges: vec![],
            widths: vec![],
        };
        assert_eq!(validate_decomposition(&h, &td, &SizeWidth), Err(Error::VertexUncovered(2)));

        let td = TreeDecomposition {
            bags: vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])],
            edges: vec![(0, 1), (1, 2)],
            widths: vec![],
        };
        assert_eq!(
            validate_decomposition(&h, &td, &SizeWidth),
            Err(Error::SubtreeDisconnected(1))
        );
    }

    #[test]
    fn not_a_tree() {
        let h = path3();
        let td = TreeDecomposition {
            bags: vec![set(&[0, 1]), set(&[1, 2]), set(&[1])],
            edges: vec![(0, 1), (1, 0)],
            widths: vec![],
        };
        assert!(matches!(validate_decomposition(&h, &td, &SizeWidth), Err(Error::NotATree(_))));
    }
}
