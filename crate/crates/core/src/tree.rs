//! Unrooted trees over dense vertex ids, with the structural metrics,
//! isomorphism codes, and branch surgery everything else is built on.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid surgery: {0}")]
    InvalidSurgery(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An immutable unrooted tree on vertices `0..n`. Adjacency lists are kept
/// sorted; construction validates tree-ness (n-1 edges, connected, simple).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::NotATree("empty vertex set".into()));
        }
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree(format!(
                "{} edges on {} vertices, expected {}",
                edges.len(),
                n,
                n - 1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TreeError::NotATree(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(TreeError::NotATree(format!("self-loop at {u}")));
            }
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            if ru == rv {
                // n-1 edges and a repeated root means a duplicate edge or cycle
                return Err(TreeError::NotATree(format!(
                    "edge ({u}, {v}) creates a cycle or duplicates an edge"
                )));
            }
            dsu[ru] = rv;
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Tree { adj })
    }

    /// Path on `n` vertices, `0-1-...-(n-1)`. Handy enough to live here.
    pub fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).expect("path is a tree")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.degree(v) == 1).count()
    }

    fn bfs_farthest(&self, start: usize) -> (usize, usize, Vec<usize>) {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        let mut far = start;
        while let Some(u) = queue.pop_front() {
            if dist[u] > dist[far] || (dist[u] == dist[far] && u < far) {
                far = u;
            }
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let d = dist[far];
        (far, d, dist)
    }

    /// Max pairwise distance in edges; 0 for a single vertex.
    pub fn diameter(&self) -> usize {
        let (a, _, _) = self.bfs_farthest(0);
        let (_, d, _) = self.bfs_farthest(a);
        d
    }

    /// Distances from `v` to every vertex.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        self.bfs_farthest(v).2
    }

    /// The unique path from `u` to `v`, inclusive of both endpoints.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[u] = true;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &w in &self.adj[x] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Sizes of the two color classes of the unique 2-coloring, smaller first.
    /// A single vertex yields (0, 1).
    pub fn bipartition_sizes(&self) -> (usize, usize) {
        let dist = self.distances_from(0);
        let even = dist.iter().filter(|&&d| d % 2 == 0).count();
        let odd = self.n() - even;
        (even.min(odd), even.max(odd))
    }

    pub fn is_member(&self, spec: &ClassSpec) -> bool {
        match *spec {
            ClassSpec::Leaves(k) => self.leaf_count() == k,
            ClassSpec::Diameter(d) => self.diameter() == d,
            ClassSpec::Bipartition(p, q) => {
                let (a, b) = self.bipartition_sizes();
                (a, b) == (p.min(q), p.max(q))
            }
            ClassSpec::QAry { arity, internal } => {
                let internal_vs: Vec<usize> =
                    (0..self.n()).filter(|&v| self.degree(v) > 1).collect();
                internal_vs.len() == internal
                    && internal_vs.iter().all(|&v| self.degree(v) == arity)
            }
        }
    }

    /// The 1 or 2 middle vertices of a longest path (the classical center).
    pub fn center(&self) -> Vec<usize> {
        adj_center(&self.adj)
    }

    /// AHU code rooted at the tree's center; for bicentral trees the smaller
    /// of the two rootings. Equal codes iff isomorphic.
    pub fn canonical_code(&self) -> CanonicalCode {
        CanonicalCode(adj_canonical_code(&self.adj))
    }

    /// Detach the edges (src, b) for b in `branches` and reattach them as
    /// (dst, b). Fails if that would disconnect the tree or close a cycle,
    /// i.e. if dst lies in a detached branch or a precondition is violated.
    pub fn transplant(
        &self,
        src: usize,
        dst: usize,
        branches: &[usize],
    ) -> Result<Tree, TreeError> {
        let n = self.n();
        if src >= n || dst >= n {
            return Err(TreeError::InvalidSurgery(format!(
                "vertex out of range (src {src}, dst {dst}, n {n})"
            )));
        }
        if src == dst {
            return Err(TreeError::InvalidSurgery("src equals dst".into()));
        }
        let mut moved = vec![false; n];
        for &b in branches {
            if !self.adj[src].contains(&b) {
                return Err(TreeError::InvalidSurgery(format!(
                    "{b} is not a neighbor of {src}"
                )));
            }
            if moved[b] {
                return Err(TreeError::InvalidSurgery(format!("branch {b} repeated")));
            }
            moved[b] = true;
        }
        // mark the branch components of T - src; dst must stay outside
        let mut in_branch = vec![false; n];
        let mut stack: Vec<usize> = branches.to_vec();
        for &b in branches {
            in_branch[b] = true;
        }
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if w != src && !in_branch[w] {
                    in_branch[w] = true;
                    stack.push(w);
                }
            }
        }
        if in_branch[dst] {
            return Err(TreeError::InvalidSurgery(format!(
                "dst {dst} lies in a detached branch"
            )));
        }
        let mut edges = Vec::with_capacity(n - 1);
        for (u, v) in self.edges() {
            let b = if u == src && moved[v] {
                (dst, v)
            } else if v == src && moved[u] {
                (dst, u)
            } else {
                (u, v)
            };
            edges.push(b);
        }
        Tree::from_edges(n, &edges).map_err(|e| {
            TreeError::InvalidSurgery(format!("surgery produced a non-tree: {e}"))
        })
    }

    /// Glue two trees by identifying vertex `va` of `a` with vertex `vb` of
    /// `b`. Vertices of `a` keep their ids; the rest of `b` follows.
    pub fn glue(a: &Tree, va: usize, b: &Tree, vb: usize) -> Tree {
        assert!(va < a.n() && vb < b.n());
        let na = a.n();
        // b's vertex vb maps to va, the others to na, na+1, ...
        let map = |v: usize| {
            if v == vb {
                va
            } else if v < vb {
                na + v
            } else {
                na + v - 1
            }
        };
        let mut edges = a.edges();
        for (u, v) in b.edges() {
            edges.push((map(u), map(v)));
        }
        Tree::from_edges(na + b.n() - 1, &edges).expect("gluing two trees at a vertex is a tree")
    }
}

/// Center of a tree given as raw adjacency lists. Shared with the bulk
/// enumeration in certify, which dedups without building `Tree` values.
pub(crate) fn adj_center(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    // peel leaves layer by layer; what survives is the center
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adj[v] {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

pub(crate) fn adj_rooted_code(adj: &[Vec<usize>], root: usize) -> Vec<u8> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&w| w != parent[v])
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

pub(crate) fn adj_canonical_code(adj: &[Vec<usize>]) -> Vec<u8> {
    adj_center(adj)
        .into_iter()
        .map(|c| adj_rooted_code(adj, c))
        .min()
        .expect("tree has a center")
}

/// Isomorphism-invariant identity of an unlabeled tree. Total order is the
/// byte order of the underlying code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("code is ASCII"))
    }
}

/// One of the paper-facing tree families: k leaves, diameter d, a
/// (p,q)-bipartition, or q-ary with a given internal vertex count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Leaves(usize),
    Diameter(usize),
    /// Sizes of the two color classes, stored with p <= q.
    Bipartition(usize, usize),
    /// Every non-leaf vertex has degree exactly `arity`; `internal` counts them.
    QAry { arity: usize, internal: usize },
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassSpec::Leaves(k) => write!(f, "leaves:{k}"),
            ClassSpec::Diameter(d) => write!(f, "diam:{d}"),
            ClassSpec::Bipartition(p, q) => write!(f, "bip:{p},{q}"),
            ClassSpec::QAry { arity, internal } => write!(f, "qary:{arity},{internal}"),
        }
    }
}

/// Edge-list text format: first line n, then n-1 lines "u v" (0-based).
pub fn parse_tree(text: &str) -> Result<Tree, TreeError> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines.next().ok_or(TreeError::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let n: usize = first.trim().parse().map_err(|_| TreeError::Parse {
        line: 1,
        msg: format!("expected vertex count, got {first:?}"),
    })?;
    if n == 0 {
        return Err(TreeError::Parse {
            line: 1,
            msg: "vertex count must be positive".into(),
        });
    }
    let mut edges = Vec::with_capacity(n - 1);
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if edges.len() == n - 1 {
            return Err(TreeError::Parse {
                line: line_no,
                msg: format!("expected {} edges, found more", n - 1),
            });
        }
        let mut it = line.split_whitespace();
        let parse_id = |tok: Option<&str>| -> Result<usize, TreeError> {
            tok.ok_or(TreeError::Parse {
                line: line_no,
                msg: "expected \"u v\"".into(),
            })?
            .parse()
            .map_err(|_| TreeError::Parse {
                line: line_no,
                msg: format!("bad vertex id in {line:?}"),
            })
        };
        let u = parse_id(it.next())?;
        let v = parse_id(it.next())?;
        if it.next().is_some() {
            return Err(TreeError::Parse {
                line: line_no,
                msg: format!("trailing tokens in {line:?}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != n - 1 {
        return Err(TreeError::Parse {
            line: edges.len() + 1,
            msg: format!("expected {} edges, found {}", n - 1, edges.len()),
        });
    }
    Tree::from_edges(n, &edges)
}

/// Inverse of [`parse_tree`]: n, then sorted edges "u v" with u < v, LF-terminated.
pub fn serialize_tree(tree: &Tree) -> String {
    let mut out = format!("{}\n", tree.n());
    for (u, v) in tree.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Landmark map used by the constructors in [`crate::atlas`].
pub type Landmarks = BTreeMap<&'static str, usize>;
