//! Exact tree combinatorics around the total number of subtrees F(T):
//! linear-time counting kernels, a brute-force enumeration oracle,
//! constructors for the extremal tree families, their closed-form counts,
//! and exhaustive certification of the extremal claims at small orders.

pub mod atlas;
pub mod census;
pub mod certify;
pub mod formulas;
pub mod oracle;
pub mod tree;

pub use census::{Count, VertexProfile};
pub use tree::{CanonicalCode, ClassSpec, Tree, TreeError};
