//! Exhaustive checks of the binary Griesmer-sum identities and of the
//! Plotkin/Griesmer coincidence over explicit parameter ranges.

use serde::{Deserialize, Serialize};

use crate::bounds::{griesmer, griesmer_increment, ls_sequence, plotkin_min_length, ts_value};

/// Outcome of one identity over a parameter range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub instances: u64,
    /// Failing instances, capped at a few for reporting.
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Check {
        Check { name: name.into(), instances: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, instance: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(instance());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.instances > 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaRanges {
    pub k_max: u32,
    pub d_max: u64,
    pub r_max: u32,
    pub s_max: u32,
}

impl Default for LemmaRanges {
    fn default() -> LemmaRanges {
        LemmaRanges { k_max: 12, d_max: 512, r_max: 12, s_max: 16 }
    }
}

/// The printed `l`-sequence table for `s = 1..=4`.
pub const LS_TABLE: [&[u32]; 4] =
    [&[0, 1], &[0, 1, 0, 2], &[0, 1, 0, 2, 0, 1, 0, 3], &[0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4]];

pub fn lemma_suite(ranges: LemmaRanges) -> Vec<Check> {
    let g = |k: u32, d: u64| griesmer(2, k, d);
    let LemmaRanges { k_max, d_max, r_max, s_max } = ranges;

    let mut increment = Check::new("g2(k,d+1) - g2(k,d) = min(k, l+1)");
    for k in 1..=k_max {
        for d in 1..=d_max {
            increment.record(g(k, d + 1) - g(k, d) == griesmer_increment(k, d), || format!("k={k} d={d}"));
        }
    }

    let mut doubling = Check::new("g2(k,2^(r+1)) = 2 g2(k,2^r) for k <= r+1");
    for r in 0..=r_max {
        for k in 1..=r + 1 {
            doubling.record(g(k, 1 << (r + 1)) == 2 * g(k, 1 << r), || format!("k={k} r={r}"));
        }
    }

    let mut difference = Check::new("g2(k,2^r) - g2(k,2^r-2^s) = 2^(s+1) - 1 for k > s+1");
    for r in 2..=r_max {
        for s in 1..r {
            for k in s + 2..=k_max {
                let lhs = g(k, 1 << r) - g(k, (1 << r) - (1 << s));
                difference.record(lhs == (1 << (s + 1)) - 1, || format!("k={k} r={r} s={s}"));
            }
        }
    }

    let mut below = Check::new("g2(k,2^r) < 2^(r+1) for k <= r");
    for r in 1..=r_max {
        for k in 1..=r {
            below.record(g(k, 1 << r) < 1 << (r + 1), || format!("k={k} r={r}"));
        }
    }

    let mut table = Check::new("l-sequence matches the printed table for s <= 4");
    for (i, row) in LS_TABLE.iter().enumerate() {
        let s = i as u32 + 1;
        table.record(ls_sequence(s) == *row, || format!("s={s}"));
    }

    let mut structure = Check::new("L_s = L_(s-1) || L_(s-1) with last entry + 1");
    for s in 2..=s_max {
        let prev = ls_sequence(s - 1);
        let mut expected = [prev.clone(), prev].concat();
        *expected.last_mut().expect("nonempty") += 1;
        structure.record(ls_sequence(s) == expected, || format!("s={s}"));
    }

    let mut totals = Check::new("T_s = 2^s - 1");
    for s in 1..=s_max {
        totals.record(ts_value(s) == (1 << s) - 1, || format!("s={s}"));
    }

    vec![increment, doubling, difference, below, table, structure, totals]
}

/// Plotkin and Griesmer agree on `q^k` words whenever `q^(k-1)` divides `d`.
pub fn plotkin_griesmer_coincidence(qs: &[u64], k_max: u32, h_max: u64) -> Check {
    let mut check = Check::new("plotkin(q, q^k, d) = g_q(k,d) when q^(k-1) | d");
    for &q in qs {
        for k in 1..=k_max {
            for h in 1..=h_max {
                let d = q.pow(k - 1) * h;
                let ok = plotkin_min_length(q, q.pow(k), d) == griesmer(q, k, d);
                check.record(ok, || format!("q={q} k={k} d={d}"));
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        for check in lemma_suite(LemmaRanges::default()) {
            assert!(check.pass(), "{}: {:?}", check.name, check.failures);
        }
    }

    #[test]
    fn coincidence_passes() {
        assert!(plotkin_griesmer_coincidence(&[2, 3, 4, 5], 6, 8).pass());
    }

    #[test]
    fn failures_are_recorded() {
        let mut c = Check::new("x");
        c.record(false, || "bad".into());
        assert!(!c.pass());
        assert_eq!(c.failures, vec!["bad".to_string()]);
    }
}
