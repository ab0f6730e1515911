//! Exact lower bounds on code length and upper bounds on code dimension.
//!
//! Everything here is integer or exact rational arithmetic. Logarithms and
//! ceilings are decided by comparison against exact powers.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::prime_power;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("distance {0} is odd; this bound needs an even distance")]
    OddDistance(u64),
    #[error("bound does not apply: {0}")]
    Inapplicable(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

/// `q^e`, or `None` once it exceeds `u64`.
fn checked_pow(q: u64, e: u32) -> Option<u64> {
    q.checked_pow(e)
}

/// Sum of `ceil(d / q^i)` for `i` in `range`. Terms whose power overflows
/// are 1, since `d` fits in `u64`.
fn ceil_sum(q: u64, d: u64, range: std::ops::Range<u32>) -> u64 {
    range
        .map(|i| match checked_pow(q, i) {
            Some(p) => d.div_ceil(p),
            None => 1,
        })
        .sum()
}

/// Largest `l` with `q^l | d`.
pub fn valuation(q: u64, d: u64) -> u32 {
    assert!(q >= 2 && d >= 1);
    let mut l = 0;
    let mut rest = d;
    while rest.is_multiple_of(q) {
        rest /= q;
        l += 1;
    }
    l
}

/// The Griesmer sum `g_q(k,d)`.
pub fn griesmer(q: u64, k: u32, d: u64) -> u64 {
    assert!(q >= 2 && k >= 1 && d >= 1);
    ceil_sum(q, d, 0..k)
}

/// Smallest length allowed by the Plotkin bound for `M` words at distance `d`.
pub fn plotkin_min_length(q: u64, m: u64, d: u64) -> u64 {
    assert!(q >= 2 && m >= 2 && d >= 1);
    let num = d as u128 * (m as u128 - 1) * q as u128;
    let den = m as u128 * (q as u128 - 1);
    ceil_div(num, den) as u64
}

/// Largest size allowed by the Plotkin bound when `n < qd/(q-1)`.
pub fn plotkin_max_size(q: u64, n: u64, d: u64) -> Result<u64, BoundError> {
    assert!(q >= 2 && d >= 1);
    let dq = d as u128 * q as u128;
    let slack = (q as u128 - 1) * n as u128;
    if dq <= slack {
        return Err(BoundError::Inapplicable(format!("n = {n} is not below qd/(q-1) for q = {q}, d = {d}")));
    }
    Ok((dq / (dq - slack)) as u64)
}

pub fn singleton_min_length(k: u32, d: u64) -> u64 {
    assert!(k >= 1 && d >= 1);
    d + k as u64 - 1
}

/// Bound A for binary systematic codes. Only meaningful for `k >= 2`; at
/// `k = 1` the repetition code is shorter for every `d > 2`.
pub fn bound_a(k: u32, d: u64) -> u64 {
    assert!(k >= 1 && d >= 1);
    k as u64 + (3 * d).div_ceil(2) - 2
}

/// `d = q^l * r + s` with `1 <= r < q` and `0 <= s < q^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceDecomposition {
    pub q: u64,
    pub d: u64,
    pub l: u32,
    pub r: u64,
    pub s: u64,
}

impl DistanceDecomposition {
    pub fn head(&self) -> u64 {
        self.q.pow(self.l) * self.r
    }
}

pub fn decompose_d(q: u64, d: u64) -> DistanceDecomposition {
    assert!(q >= 2 && d >= 1);
    let mut l = 0;
    let mut power = 1u64;
    while let Some(next) = power.checked_mul(q).filter(|&p| p <= d) {
        power = next;
        l += 1;
    }
    let r = d / power;
    DistanceDecomposition { q, d, l, r, s: d - power * r }
}

/// Bound B for q-ary systematic codes.
pub fn bound_b(q: u64, k: u32, d: u64) -> u64 {
    assert!(k >= 1);
    let head = decompose_d(q, d).head();
    d + ceil_sum(q, head, 1..k)
}

/// `(r, s)` of the binary Bound B: `2^r` is the smallest power of two above
/// `d`, and `2^s` the smallest power of two at least `2^r - d`.
fn binary_exponents(d: u64) -> (u32, u32) {
    let r = 64 - d.leading_zeros();
    let gap = (1u64 << r) - d;
    let s = gap.next_power_of_two().trailing_zeros();
    (r, s)
}

/// Bound B for binary systematic codes of even distance.
pub fn bound_b_binary(k: u32, d: u64) -> Result<u64, BoundError> {
    assert!(k >= 1 && d >= 1);
    if d % 2 == 1 {
        return Err(BoundError::OddDistance(d));
    }
    let (r, s) = binary_exponents(d);
    let head = (1u64 << r) - (1u64 << s);
    Ok(d + ceil_sum(2, head, 1..k))
}

/// Largest `k` with `bound_b_binary(k, d) <= n`; 0 when even `k = 1` fails.
pub fn bound_b_binary_max_k(n: u64, d: u64) -> Result<u32, BoundError> {
    let mut k = 0;
    while bound_b_binary(k + 1, d)? <= n {
        k += 1;
    }
    Ok(k)
}

/// Bound C: `g_q(h+1, d)` with `h = min(k-1, l)` and `q^l || d`.
pub fn bound_c(q: u64, k: u32, d: u64) -> u64 {
    assert!(k >= 1);
    let h = (k - 1).min(valuation(q, d));
    ceil_sum(q, d, 0..h + 1)
}

/// `g_2(k, d+1) - g_2(k, d)` in closed form.
pub fn griesmer_increment(k: u32, d: u64) -> u64 {
    assert!(k >= 1 && d >= 1);
    k.min(valuation(2, d) + 1) as u64
}

/// 2-adic valuations of `1..=2^s`.
pub fn ls_sequence(s: u32) -> Vec<u32> {
    assert!((1..32).contains(&s));
    (1u64..=1 << s).map(|delta| delta.trailing_zeros()).collect()
}

pub fn ts_value(s: u32) -> u64 {
    ls_sequence(s).iter().map(|&l| l as u64).sum()
}

/// Shortest length of a binary code with 4 words at distance `d`.
pub fn n2_4(d: u64) -> u64 {
    assert!(d >= 1);
    if d.is_multiple_of(2) {
        3 * d / 2
    } else {
        3 * (d + 1) / 2 - 1
    }
}

/// Shortest length of a binary code with 8 words at distance `d`.
pub fn n2_8(d: u64) -> u64 {
    assert!(d >= 1);
    let h = d / 4;
    7 * h + [0, 3, 4, 6][(d % 4) as usize]
}

/// All `k >= 1` with `q^(k-1) < d`.
pub fn critical_dimensions(q: u64, d: u64) -> Vec<u32> {
    assert!(q >= 2 && d >= 1);
    let mut out = Vec::new();
    let mut power = 1u64;
    let mut k = 1;
    while power < d {
        out.push(k);
        k += 1;
        match power.checked_mul(q) {
            Some(p) => power = p,
            None => break,
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn sphere_volume(n: u64, radius: u64) -> BigUint {
    (0..=radius.min(n)).map(|i| binomial(n, i)).sum()
}

fn rational(v: BigUint) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `floor(log2(x))` for a positive rational `x >= 1`, and 0 below 1.
fn floor_log2(x: &BigRational) -> u32 {
    let whole = x.floor().to_integer();
    if whole.is_positive() {
        (whole.bits() - 1) as u32
    } else {
        0
    }
}

/// Elias upper bound on the size of a binary code of length `n` and
/// distance `d`, minimised over radii `w <= n/2`.
pub fn elias_size(n: u64, d: u64) -> Result<BigRational, BoundError> {
    if d == 0 || d > n {
        return Err(BoundError::InvalidQuery(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
    }
    let total = rational(BigUint::one() << n);
    let nd = (n * d) as i128;
    (0..=n / 2)
        .filter_map(|w| {
            let w = w as i128;
            let denom = 2 * w * w - 2 * n as i128 * w + nd;
            (denom > 0).then(|| {
                let factor = BigRational::new(nd.into(), denom.into());
                factor * &total / rational(sphere_volume(n, w as u64))
            })
        })
        .min()
        .ok_or_else(|| BoundError::Inapplicable(format!("no Elias radius for n = {n}, d = {d}")))
}

pub fn elias_max_dim(n: u64, d: u64) -> Result<u32, BoundError> {
    elias_size(n, d).map(|a| floor_log2(&a))
}

/// Sphere-packing bound on the size of a binary code.
pub fn hamming_size(n: u64, d: u64) -> Result<BigRational, BoundError> {
    if d == 0 || d > n {
        return Err(BoundError::InvalidQuery(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
    }
    let t = (d - 1) / 2;
    Ok(BigRational::new((BigUint::one() << n).into(), sphere_volume(n, t).into()))
}

pub fn hamming_max_dim(n: u64, d: u64) -> Result<u32, BoundError> {
    hamming_size(n, d).map(|a| floor_log2(&a))
}

// Johnson bound on binary constant-weight codes with distance 2*delta.
fn constant_weight_bound(m: u64, delta: u64, w: u64) -> BigUint {
    if w < delta {
        BigUint::one()
    } else if w == delta {
        BigUint::from(m / delta)
    } else {
        BigUint::from(m) * constant_weight_bound(m - 1, delta, w - 1) / w
    }
}

/// Johnson upper bound on the size of a binary code.
pub fn johnson_size(n: u64, d: u64) -> Result<BigRational, BoundError> {
    if d == 0 || d > n {
        return Err(BoundError::InvalidQuery(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
    }
    if d.is_multiple_of(2) {
        if d == n {
            // two words at distance n is all a length-n code can hold
            return Ok(rational(BigUint::from(2u32)));
        }
        return johnson_size(n - 1, d - 1);
    }
    let t = (d - 1) / 2;
    let total = rational(BigUint::one() << n);
    if t == 0 {
        return Ok(total);
    }
    let layer = binomial(n, t + 1);
    let per_word = binomial(2 * t + 1, t + 1);
    let packing = constant_weight_bound(n, t + 1, 2 * t + 1).min(&layer / &per_word);
    let excess = rational(layer - per_word * packing) / rational(BigUint::from(n / (t + 1)));
    Ok(total / (rational(sphere_volume(n, t)) + excess))
}

pub fn johnson_max_dim(n: u64, d: u64) -> Result<u32, BoundError> {
    johnson_size(n, d).map(|a| floor_log2(&a))
}

/// Which codes a lower bound is proved for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundClass {
    /// Valid for linear codes only.
    Linear,
    /// Valid for systematic codes, hence also for linear ones.
    Systematic,
    /// Valid for every code of the queried size.
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub bound: String,
    pub value: u64,
    pub class: BoundClass,
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SizeSpec {
    #[serde(rename = "k")]
    Dimension(u32),
    #[serde(rename = "M")]
    Size(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundQuery {
    pub q: u64,
    pub d: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestBounds {
    pub any: u64,
    pub systematic: u64,
    pub linear: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub query: BoundQuery,
    pub entries: Vec<BoundEntry>,
    pub best: BestBounds,
}

impl BoundReport {
    pub fn entry(&self, bound: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.bound == bound)
    }
}

/// Distances for which the Griesmer bound is proved for systematic codes.
pub fn griesmer_holds_for_systematic(q: u64, d: u64) -> bool {
    if d <= 2 * q || decompose_d(q, d).s == 0 {
        return true;
    }
    if q != 2 {
        return false;
    }
    // d = 2^r - 2^s (r > s >= 1), d = 2^s - 1, d = 2^r - 2^s - 1
    let difference_of_powers = |x: u64| {
        x > 0 && {
            let low = x & x.wrapping_neg();
            let high = x + low;
            low >= 2 && high.is_power_of_two()
        }
    };
    difference_of_powers(d) || (d + 1).is_power_of_two() || difference_of_powers(d + 1)
}

/// Distances for which the Griesmer bound holds for every code of size q^k.
fn griesmer_holds_for_any(q: u64, k: u32, d: u64) -> bool {
    k == 1 || (q == 2 && k <= 3) || checked_pow(q, k - 1).is_some_and(|p| d.is_multiple_of(p))
}

fn entry(bound: &str, value: u64, class: BoundClass, reference: &str) -> BoundEntry {
    BoundEntry { bound: bound.into(), value, class, reference: reference.into() }
}

fn dimension_entries(q: u64, k: u32, d: u64) -> Vec<BoundEntry> {
    let g_class = if griesmer_holds_for_any(q, k, d) {
        BoundClass::Any
    } else if griesmer_holds_for_systematic(q, d) {
        BoundClass::Systematic
    } else {
        BoundClass::Linear
    };
    let mut out = vec![
        entry("griesmer", griesmer(q, k, d), g_class, "sum of ceil(d/q^i), i < k"),
        entry("singleton", singleton_min_length(k, d), BoundClass::Any, "d + k - 1"),
        entry("bound_b", bound_b(q, k, d), BoundClass::Systematic, "d + sum of ceil(q^l r/q^i), 1 <= i < k"),
        entry("bound_c", bound_c(q, k, d), BoundClass::Any, "g_q(h+1,d) with h = min(k-1,l), q^l | d"),
    ];
    if let Some(m) = checked_pow(q, k) {
        out.insert(1, entry("plotkin", plotkin_min_length(q, m, d), BoundClass::Any, "ceil(d(1-1/M)/(1-1/q))"));
    }
    if q == 2 {
        if k >= 2 {
            out.push(entry("bound_a", bound_a(k, d), BoundClass::Systematic, "k + ceil(3d/2) - 2"));
        }
        if let Ok(v) = bound_b_binary(k, d) {
            out.push(entry("bound_b_binary", v, BoundClass::Systematic, "d + sum of ceil((2^r-2^s)/2^i), 1 <= i < k"));
        }
    }
    out
}

fn size_entries(q: u64, m: u64, d: u64) -> Vec<BoundEntry> {
    // largest k with q^k <= M, and the smallest with q^k >= M
    let mut floor_k = 0u32;
    while checked_pow(q, floor_k + 1).is_some_and(|p| p <= m) {
        floor_k += 1;
    }
    let ceil_k = if checked_pow(q, floor_k) == Some(m) { floor_k } else { floor_k + 1 };
    let mut out = vec![
        entry("plotkin", plotkin_min_length(q, m, d), BoundClass::Any, "ceil(d(1-1/M)/(1-1/q))"),
        entry("singleton", d - 1 + ceil_k as u64, BoundClass::Any, "d - 1 + ceil(log_q M)"),
    ];
    if floor_k >= 1 {
        out.push(entry("bound_c", bound_c(q, floor_k, d), BoundClass::Any, "g_q(h+1,d) with h = min(k-1,l), q^l | d"));
    }
    if q == 2 && m >= 4 {
        out.push(entry("n2_4", griesmer(2, 2, d), BoundClass::Any, "shortest binary code with 4 words"));
    }
    if q == 2 && m >= 8 {
        out.push(entry("n2_8", griesmer(2, 3, d), BoundClass::Any, "shortest binary code with 8 words"));
    }
    out
}

/// Evaluates every applicable length bound for the query.
pub fn report(q: u64, d: u64, size: SizeSpec) -> Result<BoundReport, BoundError> {
    if prime_power(q).is_none() {
        return Err(BoundError::InvalidQuery(format!("q = {q} is not a prime power")));
    }
    if d == 0 {
        return Err(BoundError::InvalidQuery("d must be at least 1".into()));
    }
    let (query, mut entries) = match size {
        SizeSpec::Dimension(k) => {
            if k == 0 {
                return Err(BoundError::InvalidQuery("k must be at least 1".into()));
            }
            (BoundQuery { q, d, k: Some(k), m: None }, dimension_entries(q, k, d))
        }
        SizeSpec::Size(m) => {
            if m < 2 {
                return Err(BoundError::InvalidQuery("M must be at least 2".into()));
            }
            let mut entries = size_entries(q, m, d);
            let mut k = 0u32;
            while checked_pow(q, k).is_some_and(|p| p < m) {
                k += 1;
            }
            if checked_pow(q, k) == Some(m) {
                let seen: Vec<String> = entries.iter().map(|e| e.bound.clone()).collect();
                entries.extend(dimension_entries(q, k, d).into_iter().filter(|e| !seen.contains(&e.bound)));
            }
            (BoundQuery { q, d, k: None, m: Some(m) }, entries)
        }
    };
    entries.sort_by_key(|e| std::cmp::Reverse(e.class));
    let best_of =
        |min_class: BoundClass| entries.iter().filter(|e| e.class >= min_class).map(|e| e.value).max().unwrap_or(d);
    let best = BestBounds {
        any: best_of(BoundClass::Any),
        systematic: best_of(BoundClass::Systematic),
        linear: best_of(BoundClass::Linear),
    };
    Ok(BoundReport { query, entries, best })
}

/// One column of the published comparison of Bound B with the Elias bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Column {
    pub n: u64,
    pub d: u64,
    pub elias_published: u32,
    pub bound_b_published: u32,
}

pub const TABLE1: [Table1Column; 6] = [
    Table1Column { n: 26, d: 12, elias_published: 8, bound_b_published: 7 },
    Table1Column { n: 28, d: 12, elias_published: 10, bound_b_published: 9 },
    Table1Column { n: 28, d: 14, elias_published: 6, bound_b_published: 5 },
    Table1Column { n: 30, d: 14, elias_published: 8, bound_b_published: 7 },
    Table1Column { n: 32, d: 16, elias_published: 7, bound_b_published: 6 },
    Table1Column { n: 33, d: 16, elias_published: 8, bound_b_published: 7 },
];
