//! Binary trees labelled in infix order, the pair of noncrossing partitions
//! read on their left and right branches, and the algorithm rebuilding a
//! tree from the ordered lengths of its branches.
//!
//! Text form: `.` is the empty tree and `(LR)` a node with subtrees `L`, `R`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{kreweras, NoncrossingPartition};
use crate::composition::Composition;
use crate::error::{Error, Result};

/// A binary tree whose nodes are labelled `1..=n` in infix order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BinaryTree {
    root: Option<usize>,
    // indexed by label - 1
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
}

/// A growable tree with arbitrary node ids, relabelled on completion.
#[derive(Clone, Debug, Default)]
struct Arena {
    root: Option<usize>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
}

impl Arena {
    fn node(&mut self, parent: Option<usize>) -> usize {
        self.left.push(None);
        self.right.push(None);
        self.parent.push(parent);
        self.left.len() - 1
    }

    fn infix(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.left.len());
        let mut stack = Vec::new();
        let mut cur = self.root;
        while cur.is_some() || !stack.is_empty() {
            while let Some(x) = cur {
                stack.push(x);
                cur = self.left[x];
            }
            let x = stack.pop().expect("nonempty");
            out.push(x);
            cur = self.right[x];
        }
        out
    }

    fn finish(&self) -> BinaryTree {
        let order = self.infix();
        let mut label = vec![0; self.left.len()];
        for (k, &x) in order.iter().enumerate() {
            label[x] = k;
        }
        let map = |v: &Vec<Option<usize>>| -> Vec<Option<usize>> {
            order.iter().map(|&x| v[x].map(|y| label[y])).collect()
        };
        BinaryTree {
            root: self.root.map(|r| label[r]),
            left: map(&self.left),
            right: map(&self.right),
            parent: map(&self.parent),
        }
    }

    /// Brackets with `*` on marked nodes and `o` on unmarked ones.
    fn render_marked(&self, marked: &[bool]) -> String {
        fn go(a: &Arena, x: Option<usize>, marked: &[bool], out: &mut String) {
            match x {
                None => out.push('.'),
                Some(x) => {
                    out.push('(');
                    go(a, a.left[x], marked, out);
                    out.push(if marked[x] { '*' } else { 'o' });
                    go(a, a.right[x], marked, out);
                    out.push(')');
                }
            }
        }
        let mut s = String::new();
        go(self, self.root, marked, &mut s);
        s
    }
}

impl BinaryTree {
    pub fn empty() -> Self {
        Arena::default().finish()
    }

    pub fn size(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    // Accessors take and return 1-based infix labels.

    pub fn root(&self) -> Option<usize> {
        self.root.map(|r| r + 1)
    }

    pub fn left(&self, i: usize) -> Option<usize> {
        self.left[i - 1].map(|x| x + 1)
    }

    pub fn right(&self, i: usize) -> Option<usize> {
        self.right[i - 1].map(|x| x + 1)
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i - 1].map(|x| x + 1)
    }

    fn is_left_child(&self, x: usize) -> bool {
        self.parent[x].is_some_and(|p| self.left[p] == Some(x))
    }

    fn is_right_child(&self, x: usize) -> bool {
        self.parent[x].is_some_and(|p| self.right[p] == Some(x))
    }

    fn depth(&self, x: usize) -> usize {
        let mut d = 0;
        let mut cur = x;
        while let Some(p) = self.parent[cur] {
            d += 1;
            cur = p;
        }
        d
    }

    /// Left branches, each listed from its top node, sorted by smallest label.
    pub fn left_branches(&self) -> Vec<Vec<usize>> {
        self.branches(&self.left, |x| !self.is_left_child(x))
    }

    /// Right branches, each listed from its top node, sorted by smallest label.
    pub fn right_branches(&self) -> Vec<Vec<usize>> {
        self.branches(&self.right, |x| !self.is_right_child(x))
    }

    fn branches(&self, next: &[Option<usize>], is_top: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.size())
            .filter(|&x| is_top(x))
            .map(|top| {
                let mut chain = vec![top + 1];
                let mut cur = top;
                while let Some(y) = next[cur] {
                    chain.push(y + 1);
                    cur = y;
                }
                chain
            })
            .collect();
        out.sort_by_key(|c| *c.iter().min().expect("nonempty"));
        out
    }

    /// `(label, depth)` for each node in infix order, for drawing.
    pub fn layout(&self) -> Vec<(usize, usize)> {
        (0..self.size()).map(|x| (x + 1, self.depth(x))).collect()
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &BinaryTree, x: Option<usize>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match x {
                None => f.write_str("."),
                Some(x) => {
                    f.write_str("(")?;
                    go(t, t.left[x], f)?;
                    go(t, t.right[x], f)?;
                    f.write_str(")")
                }
            }
        }
        go(self, self.root, f)
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "binary tree",
            input: s.to_string(),
        };
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut arena = Arena::default();
        let mut pos = 0;
        fn parse(
            bytes: &[u8],
            pos: &mut usize,
            arena: &mut Arena,
            parent: Option<usize>,
        ) -> Option<Option<usize>> {
            match bytes.get(*pos)? {
                b'.' => {
                    *pos += 1;
                    Some(None)
                }
                b'(' => {
                    *pos += 1;
                    let x = arena.node(parent);
                    arena.left[x] = parse(bytes, pos, arena, Some(x))?;
                    arena.right[x] = parse(bytes, pos, arena, Some(x))?;
                    (bytes.get(*pos) == Some(&b')')).then(|| *pos += 1)?;
                    Some(Some(x))
                }
                _ => None,
            }
        }
        arena.root = parse(&bytes, &mut pos, &mut arena, None).ok_or_else(bad)?;
        if pos != bytes.len() {
            return Err(bad());
        }
        Ok(arena.finish())
    }
}

impl TryFrom<String> for BinaryTree {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BinaryTree> for String {
    fn from(t: BinaryTree) -> Self {
        t.to_string()
    }
}

/// All binary trees with `n` nodes.
pub fn all_trees(n: usize) -> Vec<BinaryTree> {
    let mut shapes: Vec<Vec<String>> = vec![vec![".".to_string()]];
    for m in 1..=n {
        let mut here = Vec::new();
        for k in 0..m {
            for l in &shapes[k] {
                for r in &shapes[m - 1 - k] {
                    here.push(format!("({l}{r})"));
                }
            }
        }
        shapes.push(here);
    }
    shapes[n]
        .iter()
        .map(|s| s.parse().expect("generated trees parse"))
        .collect()
}

/// The left comb: every non-root node is a left child.
pub fn left_comb(n: usize) -> BinaryTree {
    let mut s = String::from(".");
    for _ in 0..n {
        s = format!("({s}.)");
    }
    s.parse().expect("comb parses")
}

/// Partitions by left branches and by right branches; the second is the
/// Kreweras complement of the first.
pub fn tree_phi(t: &BinaryTree) -> (NoncrossingPartition, NoncrossingPartition) {
    let n = t.size();
    let left = NoncrossingPartition::new(n, t.left_branches()).expect("left branches never cross");
    let right =
        NoncrossingPartition::new(n, t.right_branches()).expect("right branches never cross");
    debug_assert_eq!(kreweras(&left), right);
    (left, right)
}

/// Ordered lengths of the left and of the right branches.
pub fn tau(t: &BinaryTree) -> (Composition, Composition) {
    let (l, r) = tree_phi(t);
    (l.ordered_type(), r.ordered_type())
}

/// Label of the node reached from `i` by one step down its right branch
/// (cycling to the top at the bottom), then one step up its left branch
/// (cycling to the bottom at the top). This is `i mod n + 1`.
pub fn infix_successor(t: &BinaryTree, i: usize) -> Result<usize> {
    if i == 0 || i > t.size() {
        return Err(Error::OutOfDomain(format!(
            "node {i} of a tree with {} nodes",
            t.size()
        )));
    }
    let x = i - 1;
    let y = match t.right[x] {
        Some(r) => r,
        None => {
            let mut top = x;
            while t.is_right_child(top) {
                top = t.parent[top].expect("right child has a parent");
            }
            top
        }
    };
    let z = if t.is_left_child(y) {
        t.parent[y].expect("left child has a parent")
    } else {
        let mut bottom = y;
        while let Some(l) = t.left[bottom] {
            bottom = l;
        }
        bottom
    };
    Ok(z + 1)
}

/// One state of the rebuilding algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RebuildStep {
    pub step: usize,
    /// `'i'` for a part of the left composition, `'j'` for the right one.
    pub side: char,
    /// 1-based index of the part used.
    pub part: usize,
    pub length: usize,
    /// Tree after the step: `*` marks marked nodes, `o` unmarked ones.
    pub state: String,
}

/// Rebuilds the tree with branch lengths `(i, j)`.
pub fn rebuild_tree(i: &Composition, j: &Composition) -> Result<BinaryTree> {
    rebuild_trace(i, j).map(|(t, _)| t)
}

/// Rebuilds the tree and returns every intermediate state.
///
/// Start with a left branch of `i_1` nodes. Then repeatedly take the
/// first unmarked node in infix order: if it is the root or a left child,
/// glue below it a right branch made of the next part of `j` (minus the
/// node itself), otherwise a left branch from the next part of `i`; then
/// mark it.
pub fn rebuild_trace(i: &Composition, j: &Composition) -> Result<(BinaryTree, Vec<RebuildStep>)> {
    let fail = |step: usize, reason: String| Error::RebuildFailed { step, reason };
    let (ip, jp) = (i.parts(), j.parts());
    let first = *ip
        .first()
        .ok_or_else(|| fail(1, "the left composition is empty".into()))?;

    let mut a = Arena::default();
    let mut marked = Vec::new();
    let mut prev = None;
    for _ in 0..first {
        let x = a.node(prev);
        match prev {
            None => a.root = Some(x),
            Some(p) => a.left[p] = Some(x),
        }
        marked.push(false);
        prev = Some(x);
    }
    let mut trace = vec![RebuildStep {
        step: 1,
        side: 'i',
        part: 1,
        length: first,
        state: a.render_marked(&marked),
    }];
    let (mut next_i, mut next_j) = (1, 0);
    let mut step = 1;
    loop {
        let Some(x) = a.infix().into_iter().find(|&x| !marked[x]) else {
            break;
        };
        step += 1;
        let goes_right = a.parent[x].is_none_or(|p| a.left[p] == Some(x));
        let (side, parts, next) = if goes_right {
            ('j', jp, &mut next_j)
        } else {
            ('i', ip, &mut next_i)
        };
        let length = *parts.get(*next).ok_or_else(|| {
            fail(
                step,
                format!("node needs a part of {side} but all are used"),
            )
        })?;
        *next += 1;
        let part = *next;
        let mut cur = x;
        for _ in 1..length {
            let (slot, y) = if goes_right {
                (a.right[cur], a.node(Some(cur)))
            } else {
                (a.left[cur], a.node(Some(cur)))
            };
            if slot.is_some() {
                return Err(fail(step, "attachment point is occupied".into()));
            }
            if goes_right {
                a.right[cur] = Some(y);
            } else {
                a.left[cur] = Some(y);
            }
            marked.push(false);
            cur = y;
        }
        marked[x] = true;
        trace.push(RebuildStep {
            step,
            side,
            part,
            length,
            state: a.render_marked(&marked),
        });
    }
    if next_i < ip.len() || next_j < jp.len() {
        return Err(fail(
            step + 1,
            format!(
                "every node is marked with {} part(s) of i and {} of j unused",
                ip.len() - next_i,
                jp.len() - next_j
            ),
        ));
    }
    let t = a.finish();
    if tau(&t) != (i.clone(), j.clone()) {
        return Err(fail(
            step,
            "the result does not have the requested branch lengths".into(),
        ));
    }
    Ok((t, trace))
}
