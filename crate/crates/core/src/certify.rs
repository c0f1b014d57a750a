//! Exhaustive certification: generate one representative per isomorphism
//! class of n-vertex trees, filter to a family, and compare the family's
//! true extremes against the predicted construction and closed form.
//!
//! Two independent generation routes exist on purpose. Small orders sweep
//! every Prufer sequence and dedup by canonical code; larger orders grow
//! representatives by pendant extension. Their agreement is itself a test.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::atlas;
use crate::census::{count_all_subtrees, wiener_index, Count};
use crate::formulas;
use crate::tree::{adj_canonical_code, CanonicalCode, ClassSpec, Tree};

/// Exhaustive enumeration stops here; class sizes grow ~2.96^n.
pub const MAX_ENUM_VERTICES: usize = 16;

/// Orders up to this sweep all n^(n-2) Prufer sequences directly.
const MAX_PRUFER_VERTICES: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertifyError {
    #[error("n = {n} exceeds the exhaustive enumeration guard ({max})")]
    TooLarge { n: usize, max: usize },
    #[error("empty class: {0}")]
    EmptyClass(String),
}

/// Decode a Prufer sequence over 0..n into the edge list of the labeled
/// tree it encodes. Linear scan with the usual smallest-leaf pointer.
fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1u32; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// One representative per isomorphism class, found by decoding every
/// Prufer sequence and keeping the first tree of each canonical code.
/// Output is sorted by code. Guarded at n <= 9 (9^7 sequences).
pub fn enumerate_trees_prufer(n: usize) -> Result<Vec<Tree>, CertifyError> {
    if n > MAX_PRUFER_VERTICES {
        return Err(CertifyError::TooLarge {
            n,
            max: MAX_PRUFER_VERTICES,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return Ok(vec![Tree::from_edges(n, &edges).expect("tiny tree")]);
    }
    let mut by_code: BTreeMap<Vec<u8>, Vec<(usize, usize)>> = BTreeMap::new();
    let total = (n as u64).pow(n as u32 - 2);
    let mut seq = vec![0usize; n - 2];
    for _ in 0..total {
        let edges = prufer_edges(n, &seq);
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let code = adj_canonical_code(&adj);
        by_code.entry(code).or_insert(edges);
        for slot in seq.iter_mut() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    Ok(by_code
        .into_values()
        .map(|edges| Tree::from_edges(n, &edges).expect("decoded tree"))
        .collect())
}

/// Attach a new leaf to every vertex of every representative and dedup:
/// each (n+1)-vertex class arises from some n-vertex class this way.
pub fn extend_representatives(reps: &[Tree]) -> Vec<Tree> {
    let mut by_code: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    for rep in reps {
        let n = rep.n();
        let mut edges = rep.edges();
        for v in 0..n {
            edges.push((v, n));
            let t = Tree::from_edges(n + 1, &edges).expect("pendant extension keeps a tree");
            by_code.entry(t.canonical_code()).or_insert(t);
            edges.pop();
        }
    }
    by_code.into_values().collect()
}

fn enum_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Tree>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Tree>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn enumerate_cached(n: usize) -> Result<Arc<Vec<Tree>>, CertifyError> {
    if n > MAX_ENUM_VERTICES {
        return Err(CertifyError::TooLarge {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    if let Some(hit) = enum_cache().lock().expect("cache lock").get(&n) {
        return Ok(Arc::clone(hit));
    }
    let reps = if n <= MAX_PRUFER_VERTICES {
        enumerate_trees_prufer(n)?
    } else {
        extend_representatives(&enumerate_cached(n - 1)?)
    };
    let arc = Arc::new(reps);
    enum_cache()
        .lock()
        .expect("cache lock")
        .insert(n, Arc::clone(&arc));
    Ok(arc)
}

/// Exactly one representative per isomorphism class of n-vertex trees,
/// sorted by canonical code. Results are memoized per process; the sweep
/// for n = 9 alone touches 4.8M sequences.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>, CertifyError> {
    Ok(enumerate_cached(n)?.as_ref().clone())
}

/// The class representatives passing `spec`.
pub fn members_of_class(n: usize, spec: &ClassSpec) -> Result<Vec<Tree>, CertifyError> {
    Ok(enumerate_trees(n)?
        .into_iter()
        .filter(|t| t.is_member(spec))
        .collect())
}

/// Uniform random labeled tree via a random Prufer sequence; deterministic
/// per seed.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    assert!(n >= 1);
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return Tree::from_edges(n, &edges).expect("tiny tree");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Tree::from_edges(n, &prufer_edges(n, &seq)).expect("decoded tree")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Max,
    Min,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Max => "max",
            Objective::Min => "min",
        })
    }
}

/// What a theorem predicts for one certification run: the extremal
/// iso-classes and their exact count.
#[derive(Clone, Debug)]
pub struct Prediction {
    pub winners: Vec<CanonicalCode>,
    pub value: Count,
}

/// The construction-plus-formula prediction for a (class, objective)
/// combination, or None where no theorem covers it. `spec = None` means
/// all n-vertex trees (path minimizes, star maximizes).
pub fn paper_prediction(
    n: usize,
    spec: Option<&ClassSpec>,
    objective: Objective,
) -> Option<Prediction> {
    let single = |tree: Tree, value: Count| -> Prediction {
        Prediction {
            winners: vec![tree.canonical_code()],
            value,
        }
    };
    match (spec, objective) {
        (None, Objective::Max) => Some(single(
            atlas::star(n).ok()?.tree,
            formulas::f_star(n).ok()?,
        )),
        (None, Objective::Min) => Some(single(
            atlas::path(n).ok()?.tree,
            formulas::f_path(n).ok()?,
        )),
        (Some(&ClassSpec::Leaves(k)), Objective::Max) => Some(single(
            atlas::balanced_spider(n, k).ok()?.tree,
            formulas::f_spider_max(n, k).ok()?,
        )),
        (Some(&ClassSpec::Leaves(k)), Objective::Min) => {
            if k < 2 || k >= n {
                return None;
            }
            let m = n - k;
            let broom = atlas::double_broom(m, k / 2, k.div_ceil(2)).ok()?;
            let value = if m >= 2 {
                formulas::f_double_broom(n, k, k / 2, k.div_ceil(2)).ok()?
            } else {
                // spine of one vertex: the broom is the star
                formulas::f_star(n).ok()?
            };
            Some(single(broom.tree, value))
        }
        (Some(&ClassSpec::Diameter(d)), Objective::Max) => {
            if d < 2 || d >= n {
                return None;
            }
            let near = atlas::diameter_tree(n, d, d / 2 + 1).ok()?;
            let far = atlas::diameter_tree(n, d, d.div_ceil(2) + 1).ok()?;
            let mut winners = vec![near.tree.canonical_code(), far.tree.canonical_code()];
            winners.sort();
            winners.dedup();
            Some(Prediction {
                winners,
                value: formulas::f_diameter_max(n, d).ok()?,
            })
        }
        (Some(&ClassSpec::Bipartition(p, q)), Objective::Max) => {
            if p + q != n {
                return None;
            }
            Some(single(
                atlas::double_star(p, q).ok()?.tree,
                formulas::f_double_star(p, q).ok()?,
            ))
        }
        (Some(&ClassSpec::Bipartition(p, q)), Objective::Min) => {
            if p + q != n || p > q {
                return None;
            }
            let k = n - 2 * p + 1;
            Some(single(
                atlas::double_broom(2 * p - 1, k / 2, k.div_ceil(2)).ok()?.tree,
                formulas::f_bipartition_min(n, p).ok()?,
            ))
        }
        (Some(&ClassSpec::QAry { arity, internal }), Objective::Min) => {
            let cat = atlas::qary_caterpillar(internal, arity).ok()?;
            if cat.tree.n() != n {
                return None;
            }
            let value = if arity == 2 {
                formulas::f_path(internal + 2).ok()?
            } else {
                formulas::f_qary_min(internal, arity).ok()?
            };
            Some(single(cat.tree, value))
        }
        _ => None,
    }
}

/// One extremal iso-class: its code and a representative edge list.
#[derive(Clone, Debug)]
pub struct Winner {
    pub code: CanonicalCode,
    pub edges: Vec<(usize, usize)>,
}

/// Outcome of an exhaustive certification run over one family.
#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub n: usize,
    pub class: String,
    pub objective: Objective,
    pub class_size: usize,
    pub value: Count,
    pub winners: Vec<Winner>,
    pub unique: bool,
    pub matches_construction: bool,
    pub matches_formula: bool,
}

impl ExtremalReport {
    pub fn holds(&self) -> bool {
        self.matches_construction && self.matches_formula
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct WinnerJson<'a> {
            code: String,
            edges: &'a [(usize, usize)],
        }
        #[derive(Serialize)]
        struct ReportJson<'a> {
            n: usize,
            class: &'a str,
            objective: String,
            class_size: usize,
            value: String,
            winners: Vec<WinnerJson<'a>>,
            unique: bool,
            matches_construction: bool,
            matches_formula: bool,
        }
        serde_json::to_string(&ReportJson {
            n: self.n,
            class: &self.class,
            objective: self.objective.to_string(),
            class_size: self.class_size,
            value: self.value.to_string(),
            winners: self
                .winners
                .iter()
                .map(|w| WinnerJson {
                    code: w.code.to_string(),
                    edges: &w.edges,
                })
                .collect(),
            unique: self.unique,
            matches_construction: self.matches_construction,
            matches_formula: self.matches_formula,
        })
        .expect("report serializes")
    }
}

fn certify_members(
    n: usize,
    class: String,
    members: Vec<Tree>,
    objective: Objective,
    prediction: &Prediction,
) -> Result<ExtremalReport, CertifyError> {
    if members.is_empty() {
        return Err(CertifyError::EmptyClass(class));
    }
    let values: Vec<Count> = members.par_iter().map(count_all_subtrees).collect();
    let best = match objective {
        Objective::Max => values.iter().max(),
        Objective::Min => values.iter().min(),
    }
    .expect("nonempty")
    .clone();
    let mut winners: Vec<Winner> = members
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == best)
        .map(|(t, _)| Winner {
            code: t.canonical_code(),
            edges: t.edges(),
        })
        .collect();
    winners.sort_by(|a, b| a.code.cmp(&b.code));
    let winner_codes: Vec<&CanonicalCode> = winners.iter().map(|w| &w.code).collect();
    let mut expected: Vec<&CanonicalCode> = prediction.winners.iter().collect();
    expected.sort();
    expected.dedup();
    Ok(ExtremalReport {
        n,
        class,
        objective,
        class_size: members.len(),
        matches_construction: winner_codes == expected,
        matches_formula: best == prediction.value,
        unique: winners.len() == 1,
        value: best,
        winners,
    })
}

/// Scan the whole family (all trees when `filter` is None), find the exact
/// extremal value and every extremal iso-class, and flag agreement with the
/// given prediction.
pub fn certify_extremal(
    n: usize,
    filter: Option<&ClassSpec>,
    objective: Objective,
    prediction: &Prediction,
) -> Result<ExtremalReport, CertifyError> {
    let members = match filter {
        Some(spec) => members_of_class(n, spec)?,
        None => enumerate_trees(n)?,
    };
    let class = filter.map_or_else(|| "all".to_string(), ToString::to_string);
    certify_members(n, class, members, objective, prediction)
}

/// The runner-up certification: maximize over the (p,q)-bipartition class
/// with the double star's iso-class removed; B(p,q) should win.
pub fn certify_second_max(n: usize, p: usize, q: usize) -> Result<ExtremalReport, CertifyError> {
    let class = format!("bip:{p},{q}-minus-dstar");
    if p < 2 || q < p || p + q != n {
        return Err(CertifyError::EmptyClass(class));
    }
    let dstar = atlas::double_star(p, q)
        .expect("validated params")
        .tree
        .canonical_code();
    let members: Vec<Tree> = members_of_class(n, &ClassSpec::Bipartition(p, q))?
        .into_iter()
        .filter(|t| t.canonical_code() != dstar)
        .collect();
    let runner_up = atlas::near_double_star(p, q).expect("validated params");
    let prediction = Prediction {
        winners: vec![runner_up.tree.canonical_code()],
        value: formulas::f_near_double_star(p, q).expect("validated params"),
    };
    certify_members(n, class, members, Objective::Max, &prediction)
}

/// One side of an extremal comparison: the exact value and every
/// iso-class attaining it, codes sorted.
#[derive(Clone, Debug)]
pub struct ExtremeSet {
    pub value: Count,
    pub codes: Vec<CanonicalCode>,
}

/// Subtree extremes against Wiener extremes over one family. The flags
/// record whether the argmax/argmin sets swap roles exactly.
#[derive(Clone, Debug)]
pub struct WienerReport {
    pub n: usize,
    pub class: String,
    pub class_size: usize,
    pub subtree_max: ExtremeSet,
    pub subtree_min: ExtremeSet,
    pub wiener_max: ExtremeSet,
    pub wiener_min: ExtremeSet,
    pub subtree_max_is_wiener_min: bool,
    pub subtree_min_is_wiener_max: bool,
}

impl WienerReport {
    pub fn inversion_holds(&self) -> bool {
        self.subtree_max_is_wiener_min && self.subtree_min_is_wiener_max
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct SetJson {
            value: String,
            codes: Vec<String>,
        }
        #[derive(Serialize)]
        struct ReportJson<'a> {
            n: usize,
            class: &'a str,
            class_size: usize,
            subtree_max: SetJson,
            subtree_min: SetJson,
            wiener_max: SetJson,
            wiener_min: SetJson,
            subtree_max_is_wiener_min: bool,
            subtree_min_is_wiener_max: bool,
        }
        let set = |s: &ExtremeSet| SetJson {
            value: s.value.to_string(),
            codes: s.codes.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string(&ReportJson {
            n: self.n,
            class: &self.class,
            class_size: self.class_size,
            subtree_max: set(&self.subtree_max),
            subtree_min: set(&self.subtree_min),
            wiener_max: set(&self.wiener_max),
            wiener_min: set(&self.wiener_min),
            subtree_max_is_wiener_min: self.subtree_max_is_wiener_min,
            subtree_min_is_wiener_max: self.subtree_min_is_wiener_max,
        })
        .expect("report serializes")
    }
}

/// Compare subtree-count extremes with Wiener-index extremes over a family
/// (all trees when `filter` is None). Reports set equality of the extremal
/// iso-classes; asserts nothing.
pub fn wiener_inversion_report(
    n: usize,
    filter: Option<&ClassSpec>,
) -> Result<WienerReport, CertifyError> {
    let members = match filter {
        Some(spec) => members_of_class(n, spec)?,
        None => enumerate_trees(n)?,
    };
    let class = filter.map_or_else(|| "all".to_string(), ToString::to_string);
    if members.is_empty() {
        return Err(CertifyError::EmptyClass(class));
    }
    let scored: Vec<(Count, Count)> = members
        .par_iter()
        .map(|t| (count_all_subtrees(t), wiener_index(t)))
        .collect();
    let extreme = |pick: &dyn Fn(&Count, &Count) -> bool, key: &dyn Fn(&(Count, Count)) -> &Count| {
        let mut best: Option<&Count> = None;
        for pair in &scored {
            let v = key(pair);
            if best.map_or(true, |b| pick(v, b)) {
                best = Some(v);
            }
        }
        let best = best.expect("nonempty").clone();
        let mut codes: Vec<CanonicalCode> = members
            .iter()
            .zip(&scored)
            .filter(|(_, pair)| *key(pair) == best)
            .map(|(t, _)| t.canonical_code())
            .collect();
        codes.sort();
        ExtremeSet { value: best, codes }
    };
    let subtree_max = extreme(&|a, b| a > b, &|p| &p.0);
    let subtree_min = extreme(&|a, b| a < b, &|p| &p.0);
    let wiener_max = extreme(&|a, b| a > b, &|p| &p.1);
    let wiener_min = extreme(&|a, b| a < b, &|p| &p.1);
    Ok(WienerReport {
        n,
        class,
        class_size: members.len(),
        subtree_max_is_wiener_min: subtree_max.codes == wiener_min.codes,
        subtree_min_is_wiener_max: subtree_min.codes == wiener_max.codes,
        subtree_max,
        subtree_min,
        wiener_max,
        wiener_min,
    })
}
