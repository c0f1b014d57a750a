//! Closed-form subtree counts for the constructions in [`crate::atlas`].
//!
//! Everything is exact integer arithmetic. Two displayed forms disagree
//! with brute-force enumeration (the diameter maximum and the bipartition
//! minimum); those evaluators implement the enumeration-confirmed reading,
//! and `*_paper_display` variants keep the literal printed expression
//! available for comparison.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use thiserror::Error;

use crate::census::Count;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("singular parameter: {0}")]
    SingularParam(String),
}

fn invalid(msg: String) -> FormulaError {
    FormulaError::InvalidParams(msg)
}

fn pow2(e: usize) -> Count {
    Count::one() << e
}

fn choose2(m: usize) -> Count {
    Count::from((m as u128 * m.saturating_sub(1) as u128) / 2)
}

/// F(P_n) = C(n+1, 2).
pub fn f_path(n: usize) -> Result<Count, FormulaError> {
    if n < 1 {
        return Err(invalid("path needs n >= 1".into()));
    }
    Ok(choose2(n + 1))
}

/// F(K_{1,n-1}) = 2^(n-1) + n - 1.
pub fn f_star(n: usize) -> Result<Count, FormulaError> {
    if n < 1 {
        return Err(invalid("star needs n >= 1".into()));
    }
    Ok(pow2(n - 1) + Count::from(n as u64 - 1))
}

/// Subtree count of the balanced spider on n vertices with k legs:
/// (lo+1)^i (hi+1)^j + i C(lo+1, 2) + j C(hi+1, 2), where lo and hi are the
/// two leg lengths, j = (n-1) mod k of the legs are long, and i = k - j.
pub fn f_spider_max(n: usize, k: usize) -> Result<Count, FormulaError> {
    if k < 2 || k > n.saturating_sub(1) {
        return Err(invalid(format!("spider needs 2 <= k <= n-1, got n={n} k={k}")));
    }
    let lo = (n - 1) / k;
    let hi = lo + if (n - 1) % k == 0 { 0 } else { 1 };
    let j = (n - 1) % k;
    let i = k - j;
    let center = BigUint::from(lo as u64 + 1).pow(i as u32)
        * BigUint::from(hi as u64 + 1).pow(j as u32);
    Ok(center + Count::from(i as u64) * choose2(lo + 1) + Count::from(j as u64) * choose2(hi + 1))
}

/// Subtree count of the double broom P_(n-k)(a, b) with a + b = k:
/// (2^a + 2^b)(n-k-1) + 2^k + k + C(n-k-1, 2).
pub fn f_double_broom(n: usize, k: usize, a: usize, b: usize) -> Result<Count, FormulaError> {
    if a + b != k || a < 1 || b < 1 {
        return Err(invalid(format!(
            "double broom needs a + b = k with a, b >= 1, got k={k} a={a} b={b}"
        )));
    }
    if n < k + 2 {
        return Err(invalid(format!("double broom needs n - k >= 2, got n={n} k={k}")));
    }
    let spine_less_ends = Count::from((n - k - 1) as u64);
    Ok((pow2(a) + pow2(b)) * spine_less_ends
        + pow2(k)
        + Count::from(k as u64)
        + choose2(n - k - 1))
}

/// The broom monotonicity gap F(P_(n-k)(a,b)) - F(P_(n-k)(a-1,b+1)) =
/// (2^(a-1) - 2^b)(n-k-1), positive whenever a - b >= 2.
pub fn f_broom_monotone_gap(
    n: usize,
    k: usize,
    a: usize,
    b: usize,
) -> Result<Count, FormulaError> {
    if a + b != k || b < 1 || a < b + 2 {
        return Err(invalid(format!(
            "gap needs a + b = k, b >= 1, a - b >= 2, got k={k} a={a} b={b}"
        )));
    }
    if n < k + 2 {
        return Err(invalid(format!("gap needs n - k >= 2, got n={n} k={k}")));
    }
    Ok((pow2(a - 1) - pow2(b)) * Count::from((n - k - 1) as u64))
}

/// Maximum subtree count over diameter-d trees on n vertices:
/// 2^(n-d-1) (floor(d/2)+1)(ceil(d/2)+1) + C(floor(d/2)+1, 2)
/// + C(ceil(d/2)+1, 2) + n - d - 1.
///
/// The displayed theorem juxtaposes the two binomials with no operator;
/// enumeration at (n, d) = (4, 2) gives 11, matching the sum reading (the
/// product reading gives 10). See [`f_diameter_max_paper_display`].
pub fn f_diameter_max(n: usize, d: usize) -> Result<Count, FormulaError> {
    let (lo1, hi1) = diameter_halves(n, d)?;
    Ok(pow2(n - d - 1) * Count::from((lo1 * hi1) as u64)
        + choose2(lo1)
        + choose2(hi1)
        + Count::from((n - d - 1) as u64))
}

/// The literal printed form with the two binomials multiplied.
pub fn f_diameter_max_paper_display(n: usize, d: usize) -> Result<Count, FormulaError> {
    let (lo1, hi1) = diameter_halves(n, d)?;
    Ok(pow2(n - d - 1) * Count::from((lo1 * hi1) as u64)
        + choose2(lo1) * choose2(hi1)
        + Count::from((n - d - 1) as u64))
}

fn diameter_halves(n: usize, d: usize) -> Result<(usize, usize), FormulaError> {
    if d < 2 || d > n.saturating_sub(1) {
        return Err(invalid(format!(
            "diameter max needs 2 <= d <= n-1, got n={n} d={d}"
        )));
    }
    Ok((d / 2 + 1, d.div_ceil(2) + 1))
}

/// F(D(p,q)) = 2^(n-2) + 2^(p-1) + 2^(q-1) + n - 2 with n = p + q.
pub fn f_double_star(p: usize, q: usize) -> Result<Count, FormulaError> {
    if p < 1 || q < p {
        return Err(invalid(format!("double star needs q >= p >= 1, got ({p}, {q})")));
    }
    let n = p + q;
    Ok(pow2(n - 2) + pow2(p - 1) + pow2(q - 1) + Count::from(n as u64 - 2))
}

/// F(B(p,q)): 3*2^(n-4) + 3*2^(q-2) + 2^(p-2) + n - 1 for p > 2, and
/// 2^(n-2) + n + 2 for p = 2.
pub fn f_near_double_star(p: usize, q: usize) -> Result<Count, FormulaError> {
    if p < 2 || q < p {
        return Err(invalid(format!(
            "near double star needs q >= p >= 2, got ({p}, {q})"
        )));
    }
    let n = p + q;
    if p == 2 {
        return Ok(pow2(n - 2) + Count::from(n as u64 + 2));
    }
    Ok(Count::from(3u32) * pow2(n - 4)
        + Count::from(3u32) * pow2(q - 2)
        + pow2(p - 2)
        + Count::from(n as u64 - 1))
}

/// Minimum subtree count over trees with a (p, q)-bipartition: the count of
/// the balanced double broom P_(2p-1)(floor(k/2), ceil(k/2)) with
/// k = n - 2p + 1, evaluated through the broom formula.
///
/// The displayed theorem form disagrees with the broom formula its own
/// proof derives (enumeration at (n, p) = (6, 2) gives 24, the display 32);
/// see [`f_bipartition_min_paper_display`].
pub fn f_bipartition_min(n: usize, p: usize) -> Result<Count, FormulaError> {
    let k = bipartition_tail(n, p)?;
    if p == 1 {
        // spine of one vertex: the broom is the star K_{1,n-1}
        return f_star(n);
    }
    if k == 1 {
        // P_(2p-1)(0, 1) is just the path on n vertices
        return f_path(n);
    }
    f_double_broom(n, k, k / 2, k.div_ceil(2))
}

/// The literal printed form:
/// (2p-1)(2^floor(k/2) + 2^ceil(k/2)) + C(k, 2) + 2^k + k with k = n-2p+1.
pub fn f_bipartition_min_paper_display(n: usize, p: usize) -> Result<Count, FormulaError> {
    let k = bipartition_tail(n, p)?;
    Ok(Count::from((2 * p - 1) as u64) * (pow2(k / 2) + pow2(k.div_ceil(2)))
        + choose2(k)
        + pow2(k)
        + Count::from(k as u64))
}

fn bipartition_tail(n: usize, p: usize) -> Result<usize, FormulaError> {
    if p < 1 || 2 * p > n {
        return Err(invalid(format!(
            "bipartition min needs 1 <= p <= n/2, got n={n} p={p}"
        )));
    }
    Ok(n - 2 * p + 1)
}

/// Minimum subtree count over q-ary trees with n internal vertices (the
/// q-ary caterpillar):
///
///   [2^(q-2) (2^(q-1)-1)^2 (2^((n-1)(q-2))-1) - (n-1)(2^(q-2)-1)]
///   / (2^(q-2)-1)^2  +  2^q + nq - 3n + 3.
///
/// The two printed fractions are not separately integral for q >= 4, so
/// they are combined over the common denominator; that single division is
/// exact and asserted so.
pub fn f_qary_min(n: usize, q: usize) -> Result<Count, FormulaError> {
    if n < 1 || q < 2 {
        return Err(invalid(format!("qary min needs n >= 1, q >= 2, got n={n} q={q}")));
    }
    if q == 2 {
        return Err(FormulaError::SingularParam(
            "q = 2 makes the denominator vanish; the class is just the path, use f_path(n + 2)"
                .into(),
        ));
    }
    let m = pow2(q - 2) - 1u32; // 2^(q-2) - 1
    let hub = pow2(q - 1) - 1u32; // 2^(q-1) - 1
    let numerator =
        pow2(q - 2) * (&hub * &hub) * (pow2((n - 1) * (q - 2)) - 1u32) - Count::from(n as u64 - 1) * &m;
    let denominator = &m * &m;
    let (quot, rem) = num_integer_div_rem(&numerator, &denominator);
    assert!(rem == Count::from(0u32), "qary division must be exact");
    Ok(quot + pow2(q) + Count::from((n * q - 3 * n + 3) as u64))
}

fn num_integer_div_rem(a: &Count, b: &Count) -> (Count, Count) {
    (a / b, a % b)
}

/// Subtree count of the binary caterpillar with `leaves` leaves:
/// 2^(leaves+1) + 2^(leaves-2) - leaves - 4. Agrees with
/// `f_qary_min(leaves - 2, 3)`.
pub fn f_binary_caterpillar(leaves: usize) -> Result<Count, FormulaError> {
    if leaves < 3 {
        return Err(invalid(format!("binary caterpillar needs >= 3 leaves, got {leaves}")));
    }
    Ok(pow2(leaves + 1) + pow2(leaves - 2) - Count::from(leaves as u64 + 4))
}

/// F(D(p,q)) - F(D(p-1,q+1)) = 2^(p-2) - 2^(q-1), negative for q >= p >= 2:
/// pushing a leaf from the small hub to the big one gains subtrees.
pub fn f_double_star_chain_gap(p: usize, q: usize) -> Result<BigInt, FormulaError> {
    if p < 2 || q < p {
        return Err(invalid(format!("chain gap needs q >= p >= 2, got ({p}, {q})")));
    }
    Ok(BigInt::from(pow2(p - 2)) - BigInt::from(pow2(q - 1)))
}
