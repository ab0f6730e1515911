//! Exhaustive searches over small codes.
//!
//! Unrestricted codes are found as cliques in the graph of words at
//! distance at least `d`. The zero word is always in the code and the
//! lightest nonzero codeword is fixed to `1^w 0^(n-w)`; every other codeword
//! comes later in (weight, value) order. Each choice of `w` is an
//! independent root branch.
//!
//! Systematic codes are searched message by message: the redundancy of
//! message 0 is zero, the redundancy of the next message is `1^w 0^(r-w)`,
//! and the rest are assigned with forward checking.
//!
//! Branches run in parallel but are merged in index order, and every branch
//! counts its own nodes, so results do not depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{griesmer, n2_4, n2_8, plotkin_min_length, singleton_min_length};
use crate::code::Code;
use crate::construct::dim3_optimal;
use crate::field::{FieldError, FieldSpec};
use crate::par::{self, Execution};

/// Largest word space the clique search will enumerate.
pub const MAX_WORD_SPACE: u64 = 1 << 24;
/// Largest redundancy length the systematic search handles.
pub const MAX_REDUNDANCY: usize = 12;
/// Largest number of messages the systematic search handles.
pub const MAX_MESSAGES: usize = 256;

const COLOUR_LIMIT: usize = 512;
const CLOCK_INTERVAL: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("query outside the supported range: {0}")]
    OutOfRange(String),
    #[error("hint rejected: {0}")]
    InvalidHint(String),
    #[error("search produced an invalid witness: {0}")]
    WitnessRejected(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { node_limit: 1_000_000_000, time_limit: Duration::from_secs(600) }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    pub execution: Execution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub status: SearchStatus,
    /// Minimum length or maximum size, depending on the query.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<u64>,
    pub nodes: u64,
    pub duration_ms: u64,
    #[serde(with = "witness_text", skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Code>,
}

mod witness_text {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::code::Code;
    use crate::codefile::{parse_code, write_code};

    pub fn serialize<S: Serializer>(code: &Option<Code>, s: S) -> Result<S::Ok, S::Error> {
        match code {
            Some(c) => s.serialize_some(&write_code(c)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Code>, D::Error> {
        Option::<String>::deserialize(d)?.map(|text| parse_code(&text).map_err(D::Error::custom)).transpose()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    MinLengthAny,
    MinLengthSystematic,
    MaxSize,
}

/// A search request. `size` is the code size M for `MinLengthAny`, the
/// dimension k for `MinLengthSystematic` and an optional goal for `MaxSize`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchQuery {
    pub q: u32,
    pub mode: SearchMode,
    pub size: Option<u64>,
    pub d: usize,
    pub n_limit: usize,
    pub budget: Budget,
}

impl SearchQuery {
    pub fn run(&self, execution: Execution) -> Result<SearchResult, SearchError> {
        let opts = SearchOptions { budget: self.budget, execution };
        let need =
            |what: &str| self.size.ok_or_else(|| SearchError::OutOfRange(format!("{what} is required for this mode")));
        match self.mode {
            SearchMode::MinLengthAny => min_length_exhaustive(self.q, need("M")? as usize, self.d, self.n_limit, &opts),
            SearchMode::MinLengthSystematic => {
                min_length_systematic(self.q, need("k")? as u32, self.d, self.n_limit, None, &opts)
            }
            SearchMode::MaxSize => max_code_size(self.q, self.n_limit, self.d, self.size.map(|m| m as usize), &opts),
        }
    }
}

/// Distance on packed words: one bit per symbol for q = 2, one nibble per
/// symbol otherwise.
#[derive(Debug, Clone, Copy)]
struct Metric {
    binary: bool,
}

impl Metric {
    #[inline]
    fn dist(self, a: u64, b: u64) -> u32 {
        let x = a ^ b;
        if self.binary {
            x.count_ones()
        } else {
            ((x | x >> 1 | x >> 2 | x >> 3) & 0x1111_1111_1111_1111).count_ones()
        }
    }

    fn weight(self, a: u64) -> u32 {
        self.dist(a, 0)
    }
}

fn pack(q: u32, digits: impl Iterator<Item = u8>) -> u64 {
    let shift = if q == 2 { 1 } else { 4 };
    digits.enumerate().fold(0, |acc, (i, s)| acc | (s as u64) << (shift * i))
}

fn unpack(q: u32, word: u64, len: usize) -> Vec<u8> {
    let (shift, mask) = if q == 2 { (1, 1) } else { (4, 0xf) };
    (0..len).map(|i| ((word >> (shift * i)) & mask) as u8).collect()
}

/// All words of GF(q)^len in increasing packed order.
fn all_words(q: u32, len: usize) -> Vec<u64> {
    let count = (q as u64).pow(len as u32);
    if q == 2 {
        return (0..count).collect();
    }
    let mut out: Vec<u64> = (0..count)
        .map(|mut index| {
            pack(
                q,
                (0..len).map(|_| {
                    let digit = (index % q as u64) as u8;
                    index /= q as u64;
                    digit
                }),
            )
        })
        .collect();
    out.sort_unstable();
    out
}

fn ones(q: u32, w: usize) -> u64 {
    pack(q, std::iter::repeat_n(1, w))
}

struct Control<'a> {
    started: Instant,
    deadline: Instant,
    node_cap: u64,
    /// Lowest branch index that has reached the goal.
    winner: &'a AtomicUsize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stop {
    Goal,
    Budget,
    Cancelled,
}

struct Tracker<'a> {
    ctl: &'a Control<'a>,
    branch: usize,
    nodes: u64,
    stop: Option<Stop>,
}

impl Tracker<'_> {
    /// Counts a node; false once the branch must stop.
    #[inline]
    fn tick(&mut self) -> bool {
        if self.stop.is_some() {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.ctl.node_cap {
            self.stop = Some(Stop::Budget);
            return false;
        }
        if self.nodes.is_multiple_of(CLOCK_INTERVAL) {
            if self.ctl.winner.load(Ordering::Relaxed) < self.branch {
                self.stop = Some(Stop::Cancelled);
                return false;
            }
            if Instant::now() >= self.ctl.deadline {
                self.stop = Some(Stop::Budget);
                return false;
            }
        }
        true
    }
}

struct BranchRun {
    nodes: u64,
    stop: Option<Stop>,
    /// Best extension found: clique words or redundancy assignment.
    best: Vec<u64>,
}

struct CliqueSearch<'a> {
    metric: Metric,
    d: u32,
    target: Option<usize>,
    current: Vec<u64>,
    best: Vec<u64>,
    tracker: Tracker<'a>,
}

impl CliqueSearch<'_> {
    /// Greedy colouring in input order; returns the vertices grouped by
    /// colour and the colour number of each.
    fn colour_sort(&self, cand: &[u64]) -> (Vec<u64>, Vec<usize>) {
        if cand.len() > COLOUR_LIMIT {
            return (cand.to_vec(), (1..=cand.len()).collect());
        }
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for &v in cand {
            match classes.iter_mut().find(|class| class.iter().all(|&u| self.metric.dist(u, v) < self.d)) {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(cand.len());
        let mut colours = Vec::with_capacity(cand.len());
        for (c, class) in classes.into_iter().enumerate() {
            colours.extend(std::iter::repeat_n(c + 1, class.len()));
            order.extend(class);
        }
        (order, colours)
    }

    fn floor(&self) -> usize {
        match self.target {
            Some(t) => t - 1,
            None => self.best.len(),
        }
    }

    fn expand(&mut self, cand: &[u64]) {
        let (order, colours) = self.colour_sort(cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + colours[i] <= self.floor() || !self.tracker.tick() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            if Some(self.current.len()) == self.target {
                self.tracker.stop = Some(Stop::Goal);
                return;
            }
            let next: Vec<u64> = order[..i].iter().copied().filter(|&u| self.metric.dist(u, v) >= self.d).collect();
            if !next.is_empty() {
                self.expand(&next);
            }
            self.current.pop();
            if self.tracker.stop.is_some() {
                return;
            }
        }
    }
}

fn budget_control<'a>(budget: &Budget, winner: &'a AtomicUsize) -> Control<'a> {
    let started = Instant::now();
    Control { started, deadline: started + budget.time_limit, node_cap: budget.node_limit, winner }
}

fn elapsed_ms(started: Instant) -> u64 {
    started.elapsed().as_millis() as u64
}

fn check_word_space(q: u32, len: usize) -> Result<FieldSpec, SearchError> {
    let field = FieldSpec::new(q)?;
    let fits = if q == 2 { len <= 24 } else { len <= 12 };
    if !fits || (q as u64).checked_pow(len as u32).is_none_or(|s| s > MAX_WORD_SPACE) {
        return Err(SearchError::OutOfRange(format!("q = {q}, n = {len} is too large to enumerate")));
    }
    Ok(field)
}

fn verify_witness(code: Code, d: usize, size: usize) -> Result<Code, SearchError> {
    let actual = if code.size() < 2 {
        usize::MAX
    } else {
        code.min_distance().map_err(|e| SearchError::WitnessRejected(e.to_string()))?
    };
    if code.size() < size || actual < d {
        return Err(SearchError::WitnessRejected(format!(
            "size {} distance {actual}, wanted size {size} distance {d}",
            code.size()
        )));
    }
    Ok(code)
}

/// Searches for a `q`-ary code of length `n`, distance `d` and at least
/// `size_goal` words. Without a goal, the maximum size is computed.
pub fn max_code_size(
    q: u32,
    n: usize,
    d: usize,
    size_goal: Option<usize>,
    opts: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    let field = check_word_space(q, n)?;
    if d == 0 {
        return Err(SearchError::OutOfRange("distance must be positive".into()));
    }
    let winner = AtomicUsize::new(usize::MAX);
    let ctl = budget_control(&opts.budget, &winner);
    let metric = Metric { binary: q == 2 };
    let to_code = |words: &[u64]| {
        let rows = words.iter().map(|&w| unpack(q, w, n)).collect();
        Code::new(field, n, rows).map_err(|e| SearchError::WitnessRejected(e.to_string()))
    };

    // sizes 0 and 1 need no search
    if size_goal.is_some_and(|m| m <= 1) || n < d {
        let found = size_goal.is_some_and(|m| m <= 1) || size_goal.is_none();
        return Ok(SearchResult {
            status: if found { SearchStatus::Found } else { SearchStatus::Exhausted },
            value: found.then_some(1),
            nodes: 0,
            duration_ms: elapsed_ms(ctl.started),
            witness: if found { Some(to_code(&[0])?) } else { None },
        });
    }

    let mut vertices: Vec<u64> = all_words(q, n).into_iter().filter(|&w| metric.weight(w) as usize >= d).collect();
    vertices.sort_by_key(|&w| (metric.weight(w), w));

    let weights: Vec<usize> = (d..=n).collect();
    let target = size_goal.map(|m| m - 2);
    let runs = par::map_slice(opts.execution, &weights, |&w| {
        let branch = w - d;
        let c1 = ones(q, w);
        let start = vertices.iter().position(|&v| v == c1).expect("c1 is a vertex") + 1;
        let cand: Vec<u64> = vertices[start..].iter().copied().filter(|&v| metric.dist(v, c1) as usize >= d).collect();
        let mut search = CliqueSearch {
            metric,
            d: d as u32,
            target,
            current: Vec::new(),
            best: Vec::new(),
            tracker: Tracker { ctl: &ctl, branch, nodes: 0, stop: None },
        };
        if target == Some(0) {
            search.tracker.stop = Some(Stop::Goal);
        } else if !cand.is_empty() {
            search.expand(&cand);
        }
        if search.tracker.stop == Some(Stop::Goal) {
            winner.fetch_min(branch, Ordering::Relaxed);
        }
        let mut best = vec![0, c1];
        best.extend(search.best);
        BranchRun { nodes: search.tracker.nodes, stop: search.tracker.stop, best }
    });

    let limit = opts.budget.node_limit;
    let mut nodes = 0u64;
    let mut best: Vec<u64> = vec![0];
    let mut status = SearchStatus::Exhausted;
    for run in &runs {
        nodes += run.nodes;
        if run.best.len() > best.len() {
            best = run.best.clone();
        }
        if nodes > limit || matches!(run.stop, Some(Stop::Budget) | Some(Stop::Cancelled)) {
            status = SearchStatus::BudgetExceeded;
            nodes = nodes.min(limit);
            break;
        }
        if run.stop == Some(Stop::Goal) {
            status = SearchStatus::Found;
            best = run.best.clone();
            break;
        }
    }
    if size_goal.is_none() && status == SearchStatus::Exhausted {
        status = SearchStatus::Found;
    }
    let duration_ms = elapsed_ms(ctl.started);
    let witness = to_code(&best)?;
    Ok(match status {
        SearchStatus::Found => SearchResult {
            status,
            value: Some(best.len() as u64),
            nodes,
            duration_ms,
            witness: Some(verify_witness(witness, d, size_goal.unwrap_or(best.len()))?),
        },
        SearchStatus::Exhausted => SearchResult { status, value: None, nodes, duration_ms, witness: None },
        SearchStatus::BudgetExceeded => SearchResult {
            status,
            value: Some(best.len() as u64),
            nodes,
            duration_ms,
            witness: Some(verify_witness(witness, d, 1)?),
        },
    })
}

fn remaining(budget: &Budget, used_nodes: u64, started: Instant) -> Budget {
    Budget {
        node_limit: budget.node_limit.saturating_sub(used_nodes),
        time_limit: budget.time_limit.saturating_sub(started.elapsed()),
    }
}

/// Smallest `n <= n_limit` admitting a `q`-ary code with `m` words at
/// distance `d`, found by running [`max_code_size`] for each length.
pub fn min_length_exhaustive(
    q: u32,
    m: usize,
    d: usize,
    n_limit: usize,
    opts: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    if m < 2 || d == 0 {
        return Err(SearchError::OutOfRange("need M >= 2 and d >= 1".into()));
    }
    check_word_space(q, n_limit)?;
    let started = Instant::now();
    let mut nodes = 0;
    for n in d..=n_limit {
        let step = SearchOptions { budget: remaining(&opts.budget, nodes, started), ..*opts };
        let result = max_code_size(q, n, d, Some(m), &step)?;
        nodes += result.nodes;
        match result.status {
            SearchStatus::Exhausted => continue,
            SearchStatus::Found => {
                return Ok(SearchResult { value: Some(n as u64), nodes, duration_ms: elapsed_ms(started), ..result });
            }
            SearchStatus::BudgetExceeded => {
                return Ok(SearchResult {
                    status: SearchStatus::BudgetExceeded,
                    value: None,
                    nodes: nodes.min(opts.budget.node_limit),
                    duration_ms: elapsed_ms(started),
                    witness: None,
                });
            }
        }
    }
    Ok(SearchResult {
        status: SearchStatus::Exhausted,
        value: None,
        nodes,
        duration_ms: elapsed_ms(started),
        witness: None,
    })
}

struct SystematicSearch<'a> {
    metric: Metric,
    /// `need[i][j]`: required redundancy distance between messages i and j.
    need: Vec<Vec<u32>>,
    assigned: Vec<Option<u64>>,
    tracker: Tracker<'a>,
}

impl SystematicSearch<'_> {
    fn solve(&mut self, domains: &[Vec<u64>]) -> bool {
        let Some(i) =
            (0..self.assigned.len()).filter(|&i| self.assigned[i].is_none()).min_by_key(|&i| (domains[i].len(), i))
        else {
            return true;
        };
        for &v in &domains[i] {
            if !self.tracker.tick() {
                return false;
            }
            let mut next: Vec<Vec<u64>> = Vec::with_capacity(domains.len());
            let mut wiped = false;
            for (j, dom) in domains.iter().enumerate() {
                if self.assigned[j].is_some() || j == i {
                    next.push(Vec::new());
                    continue;
                }
                let need = self.need[i][j];
                let filtered: Vec<u64> = dom.iter().copied().filter(|&x| self.metric.dist(x, v) >= need).collect();
                if filtered.is_empty() {
                    wiped = true;
                    break;
                }
                next.push(filtered);
            }
            if wiped {
                continue;
            }
            self.assigned[i] = Some(v);
            if self.solve(&next) {
                return true;
            }
            self.assigned[i] = None;
            if self.tracker.stop.is_some() {
                return false;
            }
        }
        false
    }
}

/// Searches one length for a systematic code on the first `k` coordinates.
fn systematic_at_length(
    field: FieldSpec,
    k: u32,
    d: usize,
    n: usize,
    budget: &Budget,
    exec: Execution,
) -> Result<SearchResult, SearchError> {
    let q = field.order();
    let r = n - k as usize;
    let winner = AtomicUsize::new(usize::MAX);
    let ctl = budget_control(budget, &winner);
    let metric = Metric { binary: q == 2 };
    let mut messages: Vec<Vec<u8>> = all_words(q, k as usize)
        .into_iter()
        .map(|w| {
            let mut digits = unpack(q, w, k as usize);
            // lexicographic order with coordinate 0 most significant
            digits.reverse();
            digits
        })
        .collect();
    messages.sort();
    let count = messages.len();
    let need: Vec<Vec<u32>> = messages
        .iter()
        .map(|a| {
            messages
                .iter()
                .map(|b| {
                    let dm = a.iter().zip(b).filter(|(x, y)| x != y).count();
                    d.saturating_sub(dm) as u32
                })
                .collect()
        })
        .collect();
    let space = all_words(q, r);
    let w_min = need[0][1] as usize;
    let weights: Vec<usize> = (w_min..=r).collect();

    let runs = par::map_slice(exec, &weights, |&w| {
        let branch = w - w_min;
        let red1 = ones(q, w);
        let mut tracker = Tracker { ctl: &ctl, branch, nodes: 0, stop: None };
        let mut assigned = vec![None; count];
        assigned[0] = Some(0);
        assigned[1] = Some(red1);
        let mut domains = vec![Vec::new(); count];
        let mut feasible = true;
        for (j, dom) in domains.iter_mut().enumerate().skip(2) {
            *dom = space
                .iter()
                .copied()
                .filter(|&x| metric.dist(x, 0) >= need[0][j] && metric.dist(x, red1) >= need[1][j])
                .collect();
            feasible &= !dom.is_empty();
        }
        tracker.tick();
        let mut search = SystematicSearch { metric, need: need.clone(), assigned, tracker };
        if feasible && search.solve(&domains) {
            search.tracker.stop = Some(Stop::Goal);
            winner.fetch_min(branch, Ordering::Relaxed);
        }
        let best = if search.tracker.stop == Some(Stop::Goal) {
            search.assigned.iter().map(|a| a.expect("complete assignment")).collect()
        } else {
            Vec::new()
        };
        BranchRun { nodes: search.tracker.nodes, stop: search.tracker.stop, best }
    });

    let mut nodes = 0u64;
    for run in runs {
        nodes += run.nodes;
        if nodes > budget.node_limit || matches!(run.stop, Some(Stop::Budget) | Some(Stop::Cancelled)) {
            return Ok(SearchResult {
                status: SearchStatus::BudgetExceeded,
                value: None,
                nodes: nodes.min(budget.node_limit),
                duration_ms: elapsed_ms(ctl.started),
                witness: None,
            });
        }
        if run.stop == Some(Stop::Goal) {
            let rows =
                messages.iter().zip(&run.best).map(|(msg, &red)| [msg.clone(), unpack(q, red, r)].concat()).collect();
            let code = Code::new(field, n, rows)
                .and_then(|c| c.with_systematic((0..k as usize).collect()))
                .map_err(|e| SearchError::WitnessRejected(e.to_string()))?;
            return Ok(SearchResult {
                status: SearchStatus::Found,
                value: Some(n as u64),
                nodes,
                duration_ms: elapsed_ms(ctl.started),
                witness: Some(verify_witness(code, d, count)?),
            });
        }
    }
    Ok(SearchResult {
        status: SearchStatus::Exhausted,
        value: None,
        nodes,
        duration_ms: elapsed_ms(ctl.started),
        witness: None,
    })
}

/// True when a classical bound valid for every code rules out length `n`.
fn excluded_by_classical_bounds(q: u32, k: u32, d: usize, n: usize) -> bool {
    let m = (q as u64).pow(k);
    let floor = plotkin_min_length(q as u64, m, d as u64).max(singleton_min_length(k, d as u64));
    (n as u64) < floor
}

/// Smallest `n <= n_limit` admitting a `q`-ary systematic code of dimension
/// `k` and distance `d`.
///
/// A `hint` code caps the search: it is validated, shorter lengths are
/// searched, and when none succeeds the hint is the witness. Shorter lengths
/// beyond the search limits are accepted only when the Plotkin or Singleton
/// bound already excludes them; otherwise the result is `BudgetExceeded`.
pub fn min_length_systematic(
    q: u32,
    k: u32,
    d: usize,
    n_limit: usize,
    hint: Option<&Code>,
    opts: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    let field = FieldSpec::new(q)?;
    if k == 0 || d == 0 {
        return Err(SearchError::OutOfRange("need k >= 1 and d >= 1".into()));
    }
    let messages = (q as u64).checked_pow(k).filter(|&m| m as usize <= MAX_MESSAGES);
    if messages.is_none() {
        return Err(SearchError::OutOfRange(format!("q^k = {q}^{k} exceeds {MAX_MESSAGES}")));
    }
    let searchable = |n: usize| {
        let r = n - k as usize;
        r <= MAX_REDUNDANCY && (q as u64).checked_pow(r as u32).is_some_and(|s| s <= 1 << 16)
    };
    let hint_len = match hint {
        Some(code) => {
            if code.q() != q || code.size() as u64 != messages.unwrap() {
                return Err(SearchError::InvalidHint("hint has the wrong alphabet or size".into()));
            }
            if code.min_distance().map_err(|e| SearchError::InvalidHint(e.to_string()))? < d {
                return Err(SearchError::InvalidHint("hint distance is below d".into()));
            }
            let systematic = code.systematic_coords().is_some() || code.find_information_set().ok().flatten().is_some();
            if !systematic {
                return Err(SearchError::InvalidHint("hint is not systematic".into()));
            }
            if code.n() > n_limit {
                return Err(SearchError::InvalidHint("hint is longer than n_limit".into()));
            }
            Some(code.n())
        }
        None => {
            if n_limit >= k as usize && !searchable(n_limit) {
                return Err(SearchError::OutOfRange(format!(
                    "redundancy {} exceeds {MAX_REDUNDANCY}",
                    n_limit - k as usize
                )));
            }
            None
        }
    };
    let started = Instant::now();
    let mut nodes = 0;
    let last = hint_len.map_or(n_limit, |h| h - 1);
    for n in (k as usize).max(d)..=last {
        if !searchable(n) {
            if excluded_by_classical_bounds(q, k, d, n) {
                continue;
            }
            return Ok(SearchResult {
                status: SearchStatus::BudgetExceeded,
                value: hint_len.map(|h| h as u64),
                nodes,
                duration_ms: elapsed_ms(started),
                witness: hint.cloned(),
            });
        }
        let budget = remaining(&opts.budget, nodes, started);
        let result = systematic_at_length(field, k, d, n, &budget, opts.execution)?;
        nodes += result.nodes;
        match result.status {
            SearchStatus::Exhausted => continue,
            SearchStatus::Found => return Ok(SearchResult { nodes, duration_ms: elapsed_ms(started), ..result }),
            SearchStatus::BudgetExceeded => {
                return Ok(SearchResult {
                    status: SearchStatus::BudgetExceeded,
                    value: hint_len.map(|h| h as u64),
                    nodes: nodes.min(opts.budget.node_limit),
                    duration_ms: elapsed_ms(started),
                    witness: hint.cloned(),
                });
            }
        }
    }
    Ok(match (hint, hint_len) {
        (Some(code), Some(h)) => SearchResult {
            status: SearchStatus::Found,
            value: Some(h as u64),
            nodes,
            duration_ms: elapsed_ms(started),
            witness: Some(code.clone()),
        },
        _ => SearchResult {
            status: SearchStatus::Exhausted,
            value: None,
            nodes,
            duration_ms: elapsed_ms(started),
            witness: None,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub d: usize,
    pub n: usize,
    /// Codes containing the zero word that were enumerated.
    pub enumerated: u64,
    pub count_up_to_equivalence: usize,
    pub all_linear: bool,
    #[serde(skip)]
    pub witnesses: Vec<Code>,
}

/// Enumerates every binary code with 4 words, distance `d` and the shortest
/// possible length, up to equivalence, and checks that each is linear.
pub fn classify_optimal_four(d: usize, exec: Execution) -> Result<ClassificationReport, SearchError> {
    if !(1..=8).contains(&d) {
        return Err(SearchError::OutOfRange(format!("d = {d} not in 1..=8")));
    }
    let n = n2_4(d as u64) as usize;
    let field = check_word_space(2, n)?;
    let metric = Metric { binary: true };
    let mut vertices: Vec<u64> = (1..1u64 << n).filter(|&w| w.count_ones() as usize >= d).collect();
    vertices.sort_by_key(|&w| (w.count_ones(), w));
    let far = |a: u64, b: u64| metric.dist(a, b) as usize >= d;

    let per_first = par::map_range(exec, 0..vertices.len(), |i| {
        let mut found = Vec::new();
        let mut count = 0u64;
        let c1 = vertices[i];
        for (j, &c2) in vertices.iter().enumerate().skip(i + 1) {
            if !far(c1, c2) {
                continue;
            }
            for &c3 in &vertices[j + 1..] {
                if far(c1, c3) && far(c2, c3) {
                    count += 1;
                    let rows = [0, c1, c2, c3].iter().map(|&w| unpack(2, w, n)).collect();
                    let code = Code::new(field, n, rows).expect("distinct words");
                    let linear = c1 ^ c2 == c3;
                    debug_assert_eq!(linear, code.is_linear());
                    found.push((code.canonical_form().expect("four words canonicalise"), code.is_linear()));
                }
            }
        }
        (count, found)
    });

    let mut enumerated = 0;
    let mut classes: std::collections::BTreeMap<Vec<Vec<u8>>, (Code, bool)> = Default::default();
    let mut all_linear = true;
    for (count, found) in per_first {
        enumerated += count;
        for (canonical, linear) in found {
            all_linear &= linear;
            let key: Vec<Vec<u8>> = canonical.words().map(|w| w.to_vec()).collect();
            classes.entry(key).or_insert((canonical, linear));
        }
    }
    Ok(ClassificationReport {
        d,
        n,
        enumerated,
        count_up_to_equivalence: classes.len(),
        all_linear: enumerated > 0 && all_linear,
        witnesses: classes.into_values().map(|(c, _)| c).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthCheck {
    pub d: usize,
    pub expected: u64,
    pub result: SearchResult,
    /// The explicit construction has the expected length and distance.
    pub construction_ok: bool,
    pub pass: bool,
}

/// Shortest binary codes with 8 words for every `d <= d_max`, compared with
/// the closed form and with the dimension-3 constructions.
pub fn verify_n8(d_max: usize, opts: &SearchOptions) -> Result<Vec<LengthCheck>, SearchError> {
    if d_max > 6 {
        return Err(SearchError::OutOfRange(format!("d_max = {d_max} exceeds 6")));
    }
    (1..=d_max)
        .map(|d| {
            let expected = n2_8(d as u64);
            let result = min_length_exhaustive(2, 8, d, expected as usize, opts)?;
            let built = dim3_optimal(d as u64).map_err(|e| SearchError::WitnessRejected(e.to_string()))?.span();
            let construction_ok = built.n() as u64 == expected && built.min_distance() == Ok(d);
            let pass = construction_ok && result.status == SearchStatus::Found && result.value == Some(expected);
            Ok(LengthCheck { d, expected, result, construction_ok, pass })
        })
        .collect()
}

/// Shortest binary codes with 4 words for every `d <= d_max`.
pub fn verify_n4(d_max: usize, opts: &SearchOptions) -> Result<Vec<LengthCheck>, SearchError> {
    (1..=d_max)
        .map(|d| {
            let expected = n2_4(d as u64);
            let result = min_length_exhaustive(2, 4, d, expected as usize, opts)?;
            let pass = result.status == SearchStatus::Found && result.value == Some(expected);
            Ok(LengthCheck { d, expected, result, construction_ok: true, pass })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum FamilyStatus {
    /// No systematic code shorter than the Griesmer value exists.
    Confirmed,
    /// A systematic code beats the Griesmer value.
    Violated {
        #[serde(with = "witness_text")]
        witness: Option<Code>,
    },
    BudgetExceeded,
    /// Outside the systematic search limits.
    OutOfScope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub k: u32,
    pub griesmer: u64,
    pub nodes: u64,
    pub outcome: FamilyStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub q: u32,
    pub d: usize,
    pub entries: Vec<FamilyEntry>,
}

impl FamilyReport {
    pub fn all_confirmed(&self) -> bool {
        self.entries.iter().all(|e| e.outcome == FamilyStatus::Confirmed)
    }
}

/// Checks `S_q(k,d) >= g_q(k,d)` by exhaustive systematic search for every
/// critical dimension `k <= k_max`, i.e. every `k` with `q^(k-1) < d`.
pub fn verify_griesmer_family(q: u32, d: usize, k_max: u32, opts: &SearchOptions) -> Result<FamilyReport, SearchError> {
    let entries = crate::bounds::critical_dimensions(q as u64, d as u64)
        .into_iter()
        .filter(|&k| k <= k_max)
        .map(|k| {
            let g = griesmer(q as u64, k, d as u64);
            let n_limit = (g - 1) as usize;
            let outcome = min_length_systematic(q, k, d, n_limit, None, opts);
            let (nodes, outcome) = match outcome {
                Err(SearchError::OutOfRange(_)) => (0, FamilyStatus::OutOfScope),
                Err(e) => return Err(e),
                Ok(r) => (
                    r.nodes,
                    match r.status {
                        SearchStatus::Exhausted => FamilyStatus::Confirmed,
                        SearchStatus::Found => FamilyStatus::Violated { witness: r.witness },
                        SearchStatus::BudgetExceeded => FamilyStatus::BudgetExceeded,
                    },
                ),
            };
            Ok(FamilyEntry { k, griesmer: g, nodes, outcome })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FamilyReport { q, d, entries })
}
