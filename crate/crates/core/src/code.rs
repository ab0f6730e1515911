//! Explicit codes over GF(q) and the transformations used on them:
//! distance computation, puncturing, shortening, parity extension, padding,
//! repetition, distance reduction, linearity and systematicity tests, and
//! canonical forms under code equivalence.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};
use crate::par::{self, Execution};

/// Default node budget for [`Code::canonical_form`].
pub const CANONICAL_NODE_BUDGET: u64 = 1 << 21;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("need at least two codewords, found {0}")]
    TooFewWords(usize),
    #[error("a code needs at least one codeword")]
    Empty,
    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("symbol {symbol} is out of range for q = {q}")]
    SymbolOutOfRange { symbol: u8, q: u32 },
    #[error("duplicate codeword {0}")]
    DuplicateWord(String),
    #[error("coordinate {coord} is out of range for length {n}")]
    BadCoordinate { coord: usize, n: usize },
    #[error("no codeword survives shortening")]
    EmptyResult,
    #[error("operation requires a binary code")]
    NotBinary,
    #[error("code has no systematic coordinates")]
    NotSystematic,
    #[error("target distance {target} exceeds the code distance {distance}")]
    TargetTooLarge { target: usize, distance: usize },
    #[error("code size {size} is not a power of q = {q}")]
    SizeNotPowerOfQ { size: usize, q: u32 },
    #[error("coordinates {0:?} are not systematic for this code")]
    InvalidSystematic(Vec<usize>),
    #[error("canonical form search exceeded {0} nodes")]
    TooLarge(u64),
    #[error("{0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Packed {
    stride: usize,
    limbs: Vec<u64>,
}

impl Packed {
    fn build(n: usize, rows: &[Vec<u8>]) -> Packed {
        let stride = n.div_ceil(64).max(1);
        let mut limbs = vec![0u64; stride * rows.len()];
        for (i, row) in rows.iter().enumerate() {
            for (j, &s) in row.iter().enumerate() {
                if s != 0 {
                    limbs[i * stride + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Packed { stride, limbs }
    }

    #[inline]
    fn distance(&self, i: usize, j: usize) -> usize {
        let a = &self.limbs[i * self.stride..(i + 1) * self.stride];
        let b = &self.limbs[j * self.stride..(j + 1) * self.stride];
        a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones() as usize).sum()
    }
}

/// A set of distinct equal-length words over GF(q).
///
/// Words keep the order they were supplied in; set semantics apply to
/// equality tests through [`Code::same_words`]. Binary codes additionally
/// keep a bit-packed copy that all distance computations use.
#[derive(Clone, PartialEq, Eq)]
pub struct Code {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<u8>>,
    packed: Option<Packed>,
    systematic: Option<Vec<usize>>,
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Code")
            .field("q", &self.field.order())
            .field("n", &self.n)
            .field("size", &self.rows.len())
            .field("systematic", &self.systematic)
            .finish()
    }
}

/// Length, size, distance and alphabet of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub d: usize,
    pub q: u32,
    /// Combinatorial dimension when the size is a power of q.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})_{}", self.n, self.m, self.d, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub params: CodeParams,
    pub linear: bool,
    pub equidistant: bool,
    pub systematic: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub information_set: Option<Vec<usize>>,
}

/// Reduced row echelon basis of the span of `rows`.
fn row_basis(field: &FieldSpec, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut basis: Vec<Vec<u8>> = rows.iter().filter(|r| r.iter().any(|&s| s != 0)).cloned().collect();
    let n = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..basis.len()).find(|&i| basis[i][col] != 0) else {
            continue;
        };
        basis.swap(rank, pivot);
        let inv = field.inverse(basis[rank][col]);
        for s in basis[rank].iter_mut() {
            *s = field.product(inv, *s);
        }
        for i in 0..basis.len() {
            let factor = basis[i][col];
            if i == rank || factor == 0 {
                continue;
            }
            let neg = field.negate(factor);
            let pivot_row = basis[rank].clone();
            for (slot, &p) in basis[i].iter_mut().zip(&pivot_row) {
                *slot = field.sum(*slot, field.product(neg, p));
            }
        }
        rank += 1;
    }
    basis.truncate(rank);
    basis
}

/// Exact integer logarithm: `Some(k)` when `size == q^k`.
pub fn exact_log(size: usize, q: u32) -> Option<u32> {
    let mut k = 0;
    let mut power = 1usize;
    while power < size {
        power = power.checked_mul(q as usize)?;
        k += 1;
    }
    (power == size).then_some(k)
}

fn render(word: &[u8]) -> String {
    word.iter().map(|s| char::from(b'0' + s)).collect()
}

impl Code {
    pub fn new(field: FieldSpec, n: usize, words: Vec<Vec<u8>>) -> Result<Code, CodeError> {
        if words.is_empty() {
            return Err(CodeError::Empty);
        }
        let q = field.order();
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if w.len() != n {
                return Err(CodeError::LengthMismatch { expected: n, found: w.len() });
            }
            if let Some(&s) = w.iter().find(|&&s| s as u32 >= q) {
                return Err(CodeError::SymbolOutOfRange { symbol: s, q });
            }
            if !seen.insert(w.as_slice()) {
                return Err(CodeError::DuplicateWord(render(w)));
            }
        }
        Ok(Code::from_valid_rows(field, n, words))
    }

    /// Parses words written as digit strings, e.g. `["000", "111"]`.
    pub fn from_digit_strings(field: FieldSpec, words: &[&str]) -> Result<Code, CodeError> {
        let n = words.first().map_or(0, |w| w.len());
        let rows = words
            .iter()
            .map(|w| {
                w.bytes()
                    .map(|b| {
                        if b.is_ascii_digit() {
                            Ok(b - b'0')
                        } else {
                            Err(CodeError::InvalidArgument(format!("bad digit in {w:?}")))
                        }
                    })
                    .collect::<Result<Vec<u8>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Code::new(field, n, rows)
    }

    pub(crate) fn from_valid_rows(field: FieldSpec, n: usize, rows: Vec<Vec<u8>>) -> Code {
        let packed = (field.order() == 2).then(|| Packed::build(n, &rows));
        Code { field, n, rows, packed, systematic: None }
    }

    fn from_rows_dedup(field: FieldSpec, n: usize, rows: Vec<Vec<u8>>) -> Code {
        let mut seen = HashSet::with_capacity(rows.len());
        let rows: Vec<Vec<u8>> = rows.into_iter().filter(|r| seen.insert(r.clone())).collect();
        Code::from_valid_rows(field, n, rows)
    }

    /// Marks `coords` as the systematic coordinates, checking that the
    /// projection onto them is a bijection onto GF(q)^k.
    pub fn with_systematic(mut self, coords: Vec<usize>) -> Result<Code, CodeError> {
        if !self.projection_is_bijective(&coords) {
            return Err(CodeError::InvalidSystematic(coords));
        }
        self.systematic = Some(coords);
        Ok(self)
    }

    fn projection_is_bijective(&self, coords: &[usize]) -> bool {
        if coords.iter().any(|&c| c >= self.n) {
            return false;
        }
        let distinct: BTreeSet<&usize> = coords.iter().collect();
        if distinct.len() != coords.len() {
            return false;
        }
        match exact_log(self.rows.len(), self.field.order()) {
            Some(k) if k as usize == coords.len() => {
                let images: HashSet<Vec<u8>> =
                    self.rows.iter().map(|r| coords.iter().map(|&c| r[c]).collect()).collect();
                images.len() == self.rows.len()
            }
            _ => false,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.rows[i]
    }

    pub fn words(&self) -> impl ExactSizeIterator<Item = &[u8]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    pub fn word_string(&self, i: usize) -> String {
        render(&self.rows[i])
    }

    pub fn systematic_coords(&self) -> Option<&[usize]> {
        self.systematic.as_deref()
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        self.rows.iter().any(|r| r == word)
    }

    pub fn word_set(&self) -> BTreeSet<Vec<u8>> {
        self.rows.iter().cloned().collect()
    }

    /// True when both codes hold the same words, ignoring order.
    pub fn same_words(&self, other: &Code) -> bool {
        self.n == other.n && self.q() == other.q() && self.word_set() == other.word_set()
    }

    #[inline]
    pub fn distance(&self, i: usize, j: usize) -> usize {
        match &self.packed {
            Some(p) => p.distance(i, j),
            None => self.rows[i].iter().zip(&self.rows[j]).filter(|(a, b)| a != b).count(),
        }
    }

    pub fn weight(&self, i: usize) -> usize {
        self.rows[i].iter().filter(|&&s| s != 0).count()
    }

    fn distance_range(&self, exec: Execution) -> Result<(usize, usize), CodeError> {
        let m = self.rows.len();
        if m < 2 {
            return Err(CodeError::TooFewWords(m));
        }
        let per_row = par::map_range(exec, 0..m - 1, |i| {
            (i + 1..m).fold((usize::MAX, 0), |(lo, hi), j| {
                let d = self.distance(i, j);
                (lo.min(d), hi.max(d))
            })
        });
        Ok(per_row.into_iter().fold((usize::MAX, 0), |(lo, hi), (a, b)| (lo.min(a), hi.max(b))))
    }

    pub fn min_distance(&self) -> Result<usize, CodeError> {
        self.min_distance_with(Execution::default())
    }

    pub fn min_distance_with(&self, exec: Execution) -> Result<usize, CodeError> {
        let m = self.rows.len();
        if m < 2 {
            return Err(CodeError::TooFewWords(m));
        }
        let per_row =
            par::map_range(exec, 0..m - 1, |i| (i + 1..m).map(|j| self.distance(i, j)).min().unwrap_or(usize::MAX));
        Ok(per_row.into_iter().min().unwrap_or(usize::MAX))
    }

    /// `Some(d)` when every pair of distinct words is at distance exactly `d`.
    pub fn is_equidistant(&self) -> Result<Option<usize>, CodeError> {
        let (lo, hi) = self.distance_range(Execution::default())?;
        Ok((lo == hi).then_some(lo))
    }

    /// Deletes `coords` from every word; duplicates that appear are merged.
    pub fn puncture(&self, coords: &[usize]) -> Result<Code, CodeError> {
        let drop: BTreeSet<usize> = coords.iter().copied().collect();
        if let Some(&bad) = drop.iter().find(|&&c| c >= self.n) {
            return Err(CodeError::BadCoordinate { coord: bad, n: self.n });
        }
        if drop.len() >= self.n && self.n > 0 {
            return Err(CodeError::InvalidArgument("cannot puncture every coordinate".into()));
        }
        let keep: Vec<usize> = (0..self.n).filter(|c| !drop.contains(c)).collect();
        let rows = self.rows.iter().map(|r| keep.iter().map(|&c| r[c]).collect()).collect();
        let mut out = Code::from_rows_dedup(self.field, keep.len(), rows);
        out.systematic = self.systematic.as_ref().and_then(|sys| {
            if sys.iter().any(|c| drop.contains(c)) {
                None
            } else {
                Some(sys.iter().map(|&c| c - drop.range(..c).count()).collect())
            }
        });
        Ok(out)
    }

    /// Keeps the words carrying `value` at `coord` and deletes that coordinate.
    pub fn shorten(&self, coord: usize, value: FieldElement) -> Result<Code, CodeError> {
        if coord >= self.n {
            return Err(CodeError::BadCoordinate { coord, n: self.n });
        }
        let rows: Vec<Vec<u8>> = self
            .rows
            .iter()
            .filter(|r| r[coord] == value.value())
            .map(|r| {
                let mut r = r.clone();
                r.remove(coord);
                r
            })
            .collect();
        if rows.is_empty() {
            return Err(CodeError::EmptyResult);
        }
        let mut out = Code::from_valid_rows(self.field, self.n - 1, rows);
        out.systematic = self.systematic.as_ref().and_then(|sys| {
            sys.contains(&coord)
                .then(|| sys.iter().filter(|&&c| c != coord).map(|&c| if c > coord { c - 1 } else { c }).collect())
        });
        Ok(out)
    }

    /// Appends the sum of each word's bits.
    pub fn extend_parity(&self) -> Result<Code, CodeError> {
        if self.q() != 2 {
            return Err(CodeError::NotBinary);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                let parity = r.iter().fold(0u8, |acc, &s| acc ^ s);
                r.push(parity);
                r
            })
            .collect();
        let mut out = Code::from_valid_rows(self.field, self.n + 1, rows);
        out.systematic = self.systematic.clone();
        Ok(out)
    }

    /// Appends `count` zero coordinates.
    pub fn pad_zeros(&self, count: usize) -> Code {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(self.n + count, 0);
                r
            })
            .collect();
        let mut out = Code::from_valid_rows(self.field, self.n + count, rows);
        out.systematic = self.systematic.clone();
        out
    }

    /// Concatenates every word with itself `times` times.
    pub fn repeat(&self, times: usize) -> Result<Code, CodeError> {
        if times == 0 {
            return Err(CodeError::InvalidArgument("repeat count must be at least 1".into()));
        }
        let rows = self.rows.iter().map(|r| r.repeat(times)).collect();
        let mut out = Code::from_valid_rows(self.field, self.n * times, rows);
        out.systematic = self.systematic.clone();
        Ok(out)
    }

    /// Lowers the minimum distance to exactly `target` without changing
    /// length, size or systematic coordinates.
    ///
    /// Non-systematic coordinates are punctured from the highest index down
    /// until the distance hits `target`; each puncture lowers it by at most
    /// one. The punctured length is then restored with zero padding.
    pub fn reduce_distance(&self, target: usize) -> Result<Code, CodeError> {
        let sys = self.systematic.as_ref().ok_or(CodeError::NotSystematic)?;
        let distance = self.min_distance()?;
        if target == 0 {
            return Err(CodeError::InvalidArgument("target distance must be positive".into()));
        }
        if target > distance {
            return Err(CodeError::TargetTooLarge { target, distance });
        }
        let mut dropped = Vec::new();
        let mut current = self.clone();
        let mut current_distance = distance;
        for coord in (0..self.n).rev().filter(|c| !sys.contains(c)) {
            if current_distance == target {
                break;
            }
            dropped.push(coord);
            current = self.puncture(&dropped)?;
            current_distance = current.min_distance()?;
            debug_assert_eq!(current.size(), self.size());
        }
        debug_assert_eq!(current_distance, target);
        Ok(current.pad_zeros(dropped.len()))
    }

    /// True iff the words form a GF(q)-subspace.
    pub fn is_linear(&self) -> bool {
        let set: HashSet<&[u8]> = self.rows.iter().map(|r| r.as_slice()).collect();
        if !set.contains(vec![0u8; self.n].as_slice()) {
            return false;
        }
        let f = &self.field;
        let mut buf = vec![0u8; self.n];
        for a in &self.rows {
            for scalar in 2..f.order() as u8 {
                for (slot, &s) in buf.iter_mut().zip(a) {
                    *slot = f.product(scalar, s);
                }
                if !set.contains(buf.as_slice()) {
                    return false;
                }
            }
        }
        for (i, a) in self.rows.iter().enumerate() {
            for b in &self.rows[i + 1..] {
                for ((slot, &x), &y) in buf.iter_mut().zip(a).zip(b) {
                    *slot = f.sum(x, y);
                }
                if !set.contains(buf.as_slice()) {
                    return false;
                }
            }
        }
        true
    }

    /// Adds `shift` to every word.
    pub fn translate(&self, shift: &[u8]) -> Result<Code, CodeError> {
        if shift.len() != self.n {
            return Err(CodeError::LengthMismatch { expected: self.n, found: shift.len() });
        }
        if let Some(&s) = shift.iter().find(|&&s| s as u32 >= self.q()) {
            return Err(CodeError::SymbolOutOfRange { symbol: s, q: self.q() });
        }
        let rows =
            self.rows.iter().map(|r| r.iter().zip(shift).map(|(&a, &b)| self.field.sum(a, b)).collect()).collect();
        let mut out = Code::from_valid_rows(self.field, self.n, rows);
        out.systematic = self.systematic.clone();
        Ok(out)
    }

    /// All GF(q)-linear combinations of `generators`, in lexicographic order
    /// of the coefficient vectors (first generator most significant).
    /// Dependent generators are replaced by a reduced basis first.
    pub fn linear_span(field: FieldSpec, generators: &[Vec<u8>]) -> Result<Code, CodeError> {
        let first = generators.first().ok_or_else(|| CodeError::InvalidArgument("no generators".into()))?;
        let n = first.len();
        for g in generators {
            if g.len() != n {
                return Err(CodeError::LengthMismatch { expected: n, found: g.len() });
            }
            if let Some(&s) = g.iter().find(|&&s| s as u32 >= field.order()) {
                return Err(CodeError::SymbolOutOfRange { symbol: s, q: field.order() });
            }
        }
        let basis = row_basis(&field, generators);
        let generators = if basis.len() == generators.len() { generators } else { &basis[..] };
        let q = field.order() as usize;
        let count = q
            .checked_pow(generators.len() as u32)
            .ok_or_else(|| CodeError::InvalidArgument("span too large".into()))?;
        let rows = (0..count)
            .map(|index| {
                let mut word = vec![0u8; n];
                let mut rest = index;
                for g in generators.iter().rev() {
                    let coeff = (rest % q) as u8;
                    rest /= q;
                    if coeff != 0 {
                        for (slot, &s) in word.iter_mut().zip(g) {
                            *slot = field.sum(*slot, field.product(coeff, s));
                        }
                    }
                }
                word
            })
            .collect();
        Ok(Code::from_rows_dedup(field, n, rows))
    }

    /// Lexicographically first coordinate set on which the words project
    /// bijectively onto GF(q)^k, where `size = q^k`.
    pub fn find_information_set(&self) -> Result<Option<Vec<usize>>, CodeError> {
        let q = self.q();
        let k = exact_log(self.rows.len(), q).ok_or(CodeError::SizeNotPowerOfQ { size: self.rows.len(), q })? as usize;
        let mut chosen = Vec::with_capacity(k);
        let classes = vec![0usize; self.rows.len()];
        Ok(self.info_set_search(k, 0, &classes, &mut chosen).then_some(chosen))
    }

    // `classes[i]` identifies the projection of word i onto `chosen`; every
    // class must hold exactly q^(k - |chosen|) words.
    fn info_set_search(&self, k: usize, start: usize, classes: &[usize], chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == k {
            return true;
        }
        let q = self.q() as usize;
        let target = self.rows.len() / q.pow(depth as u32 + 1);
        let class_count = q.pow(depth as u32 + 1);
        let mut counts = vec![0usize; class_count];
        for coord in start..self.n {
            if self.n - coord < k - depth {
                break;
            }
            counts.iter_mut().for_each(|c| *c = 0);
            let refined: Vec<usize> = classes.iter().zip(&self.rows).map(|(&c, r)| c * q + r[coord] as usize).collect();
            let mut balanced = true;
            for &c in &refined {
                counts[c] += 1;
                if counts[c] > target {
                    balanced = false;
                    break;
                }
            }
            if !balanced {
                continue;
            }
            chosen.push(coord);
            if self.info_set_search(k, coord + 1, &refined, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    pub fn canonical_form(&self) -> Result<Code, CodeError> {
        self.canonical_form_with_budget(CANONICAL_NODE_BUDGET)
    }

    /// Canonical representative under coordinate permutations combined with
    /// an independent symbol permutation on each coordinate.
    ///
    /// For a fixed ordering of the words, relabelling each column by first
    /// occurrence and sorting the columns is a complete invariant. The
    /// canonical form minimises, level by level, the sorted multiset of
    /// column prefixes over word orderings. Only orderings that list words by
    /// nondecreasing distance profile are considered, which prunes the search
    /// without losing completeness since the profile is an invariant.
    pub fn canonical_form_with_budget(&self, budget: u64) -> Result<Code, CodeError> {
        let m = self.rows.len();
        let n = self.n;
        let profiles: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                let mut p: Vec<usize> = (0..m).filter(|&j| j != i).map(|j| self.distance(i, j)).collect();
                p.sort_unstable();
                p
            })
            .collect();
        let mut slots: Vec<&Vec<usize>> = profiles.iter().collect();
        slots.sort();

        #[derive(Clone)]
        struct State {
            order: Vec<usize>,
            used: Vec<bool>,
            columns: Vec<Vec<u8>>,
            labels: Vec<[u8; 9]>,
            next_label: Vec<u8>,
        }
        let root = State {
            order: Vec::with_capacity(m),
            used: vec![false; m],
            columns: vec![Vec::with_capacity(m); n],
            labels: vec![[u8::MAX; 9]; n],
            next_label: vec![0; n],
        };
        let mut frontier = vec![root];
        let mut nodes = 0u64;
        for slot in slots.iter().take(m) {
            let mut best_key: Option<Vec<Vec<u8>>> = None;
            let mut next = Vec::new();
            for state in &frontier {
                for row in (0..m).filter(|&r| !state.used[r] && &&profiles[r] == slot) {
                    nodes += 1;
                    if nodes > budget {
                        return Err(CodeError::TooLarge(budget));
                    }
                    let mut child = state.clone();
                    child.used[row] = true;
                    child.order.push(row);
                    for c in 0..n {
                        let symbol = self.rows[row][c] as usize;
                        if child.labels[c][symbol] == u8::MAX {
                            child.labels[c][symbol] = child.next_label[c];
                            child.next_label[c] += 1;
                        }
                        let label = child.labels[c][symbol];
                        child.columns[c].push(label);
                    }
                    let mut key = child.columns.clone();
                    key.sort_unstable();
                    match best_key.as_ref().map(|b| key.cmp(b)) {
                        None | Some(std::cmp::Ordering::Less) => {
                            best_key = Some(key);
                            next.clear();
                            next.push(child);
                        }
                        Some(std::cmp::Ordering::Equal) => next.push(child),
                        Some(std::cmp::Ordering::Greater) => {}
                    }
                }
            }
            frontier = next;
        }
        let best = frontier.into_iter().next().expect("nonempty code");
        let mut columns = best.columns;
        columns.sort_unstable();
        let rows = (0..m).map(|t| columns.iter().map(|col| col[t]).collect()).collect();
        Ok(Code::from_valid_rows(self.field, n, rows))
    }

    pub fn analyze(&self) -> Result<Analysis, CodeError> {
        let (lo, hi) = self.distance_range(Execution::default())?;
        let q = self.q();
        let k = exact_log(self.rows.len(), q);
        let information_set = match (&self.systematic, k) {
            (Some(sys), _) => Some(sys.clone()),
            (None, Some(_)) => self.find_information_set()?,
            (None, None) => None,
        };
        Ok(Analysis {
            params: CodeParams { n: self.n, m: self.rows.len(), d: lo, q, k },
            linear: self.is_linear(),
            equidistant: lo == hi,
            systematic: information_set.is_some(),
            information_set,
        })
    }
}
