//! Constructors for the named extremal trees: paths, stars, balanced
//! spiders, double brooms, diameter trees, double stars and their
//! near-variants, three-hub chains, and q-ary caterpillars.
//!
//! Each constructor is deterministic (same parameters give the identical
//! labeled tree) and returns landmark vertices so closed-form checks can
//! anchor on the right spots without degree-searching.

use thiserror::Error;

use crate::tree::{Landmarks, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AtlasError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// A constructed tree together with its named landmark vertices
/// ("center", "spine_start", "hub_v", ...).
#[derive(Clone, Debug)]
pub struct NamedTree {
    pub tree: Tree,
    pub landmarks: Landmarks,
}

fn invalid(msg: String) -> AtlasError {
    AtlasError::InvalidParams(msg)
}

/// P_n: the path 0-1-...-(n-1).
pub fn path(n: usize) -> Result<NamedTree, AtlasError> {
    if n < 1 {
        return Err(invalid("path needs n >= 1".into()));
    }
    let tree = Tree::path(n);
    let mut landmarks = Landmarks::new();
    landmarks.insert("spine_start", 0);
    landmarks.insert("spine_end", n - 1);
    Ok(NamedTree { tree, landmarks })
}

/// K_{1,n-1}: vertex 0 is the center.
pub fn star(n: usize) -> Result<NamedTree, AtlasError> {
    if n < 1 {
        return Err(invalid("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    let tree = Tree::from_edges(n, &edges).expect("star is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("center", 0);
    Ok(NamedTree { tree, landmarks })
}

/// The balanced spider on n vertices with k legs whose lengths pairwise
/// differ by at most one: (n-1) mod k legs of length ceil((n-1)/k), the
/// rest of length floor((n-1)/k). Vertex 0 is the center; k = 2 degenerates
/// to the path.
pub fn balanced_spider(n: usize, k: usize) -> Result<NamedTree, AtlasError> {
    if k < 2 || k > n.saturating_sub(1) {
        return Err(invalid(format!("spider needs 2 <= k <= n-1, got n={n} k={k}")));
    }
    let lo = (n - 1) / k;
    let long_legs = (n - 1) % k;
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for leg in 0..k {
        let len = if leg < long_legs { lo + 1 } else { lo };
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let tree = Tree::from_edges(n, &edges).expect("spider is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("center", 0);
    Ok(NamedTree { tree, landmarks })
}

/// The double broom: a path on m vertices with a extra pendants on one end
/// and b on the other. m = 1 collapses to the star K_{1,a+b}.
pub fn double_broom(m: usize, a: usize, b: usize) -> Result<NamedTree, AtlasError> {
    if m < 1 {
        return Err(invalid("double broom needs a spine, m >= 1".into()));
    }
    let n = m + a + b;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..m {
        edges.push((i - 1, i));
    }
    for i in 0..a {
        edges.push((0, m + i));
    }
    for i in 0..b {
        edges.push((m - 1, m + a + i));
    }
    let tree = Tree::from_edges(n, &edges).expect("double broom is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("spine_start", 0);
    landmarks.insert("spine_end", m - 1);
    Ok(NamedTree { tree, landmarks })
}

/// The diameter-d tree: a path v_1..v_(d+1) (ids 0..d) with n-d-1 pendant
/// edges attached to v_k (1-based position on the spine, so id k-1).
pub fn diameter_tree(n: usize, d: usize, k: usize) -> Result<NamedTree, AtlasError> {
    if d < 2 || d > n.saturating_sub(1) {
        return Err(invalid(format!(
            "diameter tree needs 2 <= d <= n-1, got n={n} d={d}"
        )));
    }
    if k < 2 || k > d {
        return Err(invalid(format!(
            "attachment position needs 2 <= k <= d, got k={k} d={d}"
        )));
    }
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..=d {
        edges.push((i - 1, i));
    }
    for v in d + 1..n {
        edges.push((k - 1, v));
    }
    let tree = Tree::from_edges(n, &edges).expect("diameter tree is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("attach", k - 1);
    landmarks.insert("spine_start", 0);
    landmarks.insert("spine_end", d);
    Ok(NamedTree { tree, landmarks })
}

/// D(p,q): adjacent hubs of degree p and q carrying p-1 and q-1 pendant
/// leaves. Hub u is vertex 0, hub v is vertex 1.
pub fn double_star(p: usize, q: usize) -> Result<NamedTree, AtlasError> {
    if p < 1 || q < p {
        return Err(invalid(format!("double star needs q >= p >= 1, got ({p}, {q})")));
    }
    let n = p + q;
    let mut edges = Vec::with_capacity(n - 1);
    edges.push((0, 1));
    for v in 2..=p {
        edges.push((0, v));
    }
    for v in p + 1..n {
        edges.push((1, v));
    }
    let tree = Tree::from_edges(n, &edges).expect("double star is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("hub_u", 0);
    landmarks.insert("hub_v", 1);
    Ok(NamedTree { tree, landmarks })
}

/// B(p,q), the runner-up to D(p,q). For p > 2 it is D(p-1, q) with one
/// pendant edge attached to a leaf of the degree-q hub; for p = 2 it is P_4
/// with q-2 pendants attached to one end. hub_v is the high-degree hub,
/// hub_u the other one from the underlying double star.
pub fn near_double_star(p: usize, q: usize) -> Result<NamedTree, AtlasError> {
    if p < 2 || q < p {
        return Err(invalid(format!(
            "near double star needs q >= p >= 2, got ({p}, {q})"
        )));
    }
    if p == 2 {
        let n = q + 2;
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        for v in 4..n {
            edges.push((3, v));
        }
        let tree = Tree::from_edges(n, &edges).expect("near double star is a tree");
        let mut landmarks = Landmarks::new();
        landmarks.insert("hub_v", 3);
        landmarks.insert("hub_u", 2);
        return Ok(NamedTree { tree, landmarks });
    }
    let base = double_star(p - 1, q)?;
    // attach the extra pendant to the first leaf of the degree-q hub
    let n = p + q;
    let mut edges = base.tree.edges();
    edges.push((p, n - 1));
    let tree = Tree::from_edges(n, &edges).expect("near double star is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("hub_u", 0);
    landmarks.insert("hub_v", 1);
    landmarks.insert("tail", p);
    Ok(NamedTree { tree, landmarks })
}

/// T(x,y,z): three hubs in a row carrying x, y, z pendant leaves (the
/// middle hub additionally links to both outer hubs). Needs x, z >= 1.
pub fn three_star_chain(x: usize, y: usize, z: usize) -> Result<NamedTree, AtlasError> {
    if x < 1 || z < 1 {
        return Err(invalid(format!(
            "chain needs x >= 1 and z >= 1, got ({x}, {y}, {z})"
        )));
    }
    let n = x + y + z + 3;
    let mut edges = vec![(0, 1), (1, 2)];
    let mut next = 3;
    for (hub, count) in [(0, x), (1, y), (2, z)] {
        for _ in 0..count {
            edges.push((hub, next));
            next += 1;
        }
    }
    let tree = Tree::from_edges(n, &edges).expect("chain is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("hub_left", 0);
    landmarks.insert("hub_mid", 1);
    landmarks.insert("hub_right", 2);
    Ok(NamedTree { tree, landmarks })
}

/// The q-ary caterpillar with n internal vertices: a path on n+2 vertices
/// (ids 0..n+1) whose internal vertices each carry q-2 pendant leaves, so
/// every non-leaf vertex has degree exactly q. q = 2 degenerates to the
/// path.
pub fn qary_caterpillar(n: usize, q: usize) -> Result<NamedTree, AtlasError> {
    if n < 1 || q < 2 {
        return Err(invalid(format!(
            "caterpillar needs n >= 1 and q >= 2, got n={n} q={q}"
        )));
    }
    let total = n * (q - 1) + 2;
    let mut edges = Vec::with_capacity(total - 1);
    for i in 1..n + 2 {
        edges.push((i - 1, i));
    }
    let mut next = n + 2;
    for spine in 1..=n {
        for _ in 0..q - 2 {
            edges.push((spine, next));
            next += 1;
        }
    }
    let tree = Tree::from_edges(total, &edges).expect("caterpillar is a tree");
    let mut landmarks = Landmarks::new();
    landmarks.insert("spine_start", 0);
    landmarks.insert("spine_end", n + 1);
    Ok(NamedTree { tree, landmarks })
}
