//! Plane rooted trees and the classical bijection with Dyck paths.
//!
//! Reading a path left to right, an Up step descends into a new child and a
//! Down step returns to the parent, so a path of semilength `n` maps to a
//! plane tree with `n + 1` nodes. Under this bijection path height equals
//! tree height (in edges) and, for nonempty paths, peaks correspond to
//! leaves other than the root. Trees serialize as balanced parentheses with
//! one `(...)` per node.

use crate::paths::{DyckPath, Step};
use std::fmt;

/// An ordered rooted tree; a node is its list of subtrees.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn new(children: Vec<PlaneTree>) -> Self {
        Self { children }
    }

    pub fn leaf() -> Self {
        Self::new(Vec::new())
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::node_count).sum::<usize>()
    }

    /// Length in edges of the longest root-to-node chain; 0 for a single node.
    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| 1 + c.height())
            .max()
            .unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(PlaneTree::leaf_count).sum()
        }
    }

    /// Parse the balanced-parenthesis form produced by [`fmt::Display`].
    pub fn from_parens(s: &str) -> Result<Self, String> {
        fn rec(bytes: &[u8], pos: &mut usize) -> Result<PlaneTree, String> {
            if bytes.get(*pos) != Some(&b'(') {
                return Err(format!("expected '(' at byte {}", *pos));
            }
            *pos += 1;
            let mut children = Vec::new();
            while bytes.get(*pos) == Some(&b'(') {
                children.push(rec(bytes, pos)?);
            }
            if bytes.get(*pos) != Some(&b')') {
                return Err(format!("expected ')' at byte {}", *pos));
            }
            *pos += 1;
            Ok(PlaneTree::new(children))
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let tree = rec(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(format!("trailing input at byte {pos}"));
        }
        Ok(tree)
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for child in &self.children {
            child.fmt(f)?;
        }
        f.write_str(")")
    }
}

/// Path-to-tree direction of the bijection.
pub fn path_to_tree(path: &DyckPath) -> PlaneTree {
    assert!(path.is_valid(), "path_to_tree requires a valid Dyck path");
    fn parse_children(steps: &[Step], pos: &mut usize) -> Vec<PlaneTree> {
        let mut children = Vec::new();
        while steps.get(*pos) == Some(&Step::Up) {
            *pos += 1;
            let grandchildren = parse_children(steps, pos);
            *pos += 1; // the matching Down
            children.push(PlaneTree::new(grandchildren));
        }
        children
    }
    let mut pos = 0;
    let children = parse_children(path.steps(), &mut pos);
    debug_assert_eq!(pos, path.steps().len());
    PlaneTree::new(children)
}

/// Tree-to-path direction of the bijection: preorder, one U...D per child.
pub fn tree_to_path(tree: &PlaneTree) -> DyckPath {
    fn emit(tree: &PlaneTree, steps: &mut Vec<Step>) {
        for child in tree.children() {
            steps.push(Step::Up);
            emit(child, steps);
            steps.push(Step::Down);
        }
    }
    let mut steps = Vec::new();
    emit(tree, &mut steps);
    DyckPath::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::tests::{all_dyck_paths, FIGURE_PATH};
    use crate::paths::visit_restricted;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn smallest_cases() {
        let root_only = path_to_tree(&DyckPath::empty());
        assert_eq!(root_only, PlaneTree::leaf());
        assert_eq!(root_only.to_string(), "()");

        let one_edge = path_to_tree(&p("UD"));
        assert_eq!(one_edge, PlaneTree::new(vec![PlaneTree::leaf()]));
        assert_eq!(one_edge.to_string(), "(())");
    }

    #[test]
    fn figure_tree_shape() {
        let tree = path_to_tree(&p(FIGURE_PATH));
        assert_eq!(tree.children().len(), 4);
        assert_eq!(tree.node_count(), 11);
        assert_eq!(tree.height(), 6);
        assert_eq!(tree.leaf_count(), 5);
        assert_eq!(tree.to_string(), "(()(((()((())))))()())");
    }

    #[test]
    fn bijection_roundtrip_exhaustive() {
        for n in 0..=8 {
            for path in all_dyck_paths(n) {
                let tree = path_to_tree(&path);
                assert_eq!(tree_to_path(&tree), path);
            }
        }
    }

    #[test]
    fn parens_roundtrip() {
        for n in 0..=6 {
            for path in all_dyck_paths(n) {
                let tree = path_to_tree(&path);
                assert_eq!(PlaneTree::from_parens(&tree.to_string()).unwrap(), tree);
            }
        }
        assert!(PlaneTree::from_parens("(()").is_err());
        assert!(PlaneTree::from_parens("()()").is_err());
    }

    #[test]
    fn bijection_transports_statistics() {
        for n in 0..=8 {
            visit_restricted(n, |path| {
                let stats = path.stats();
                let tree = path_to_tree(path);
                assert_eq!(tree.node_count(), path.semilength() + 1);
                assert_eq!(tree.height(), stats.height);
                assert_eq!(tree.leaf_count(), stats.leaf_count);
            });
        }
    }
}
