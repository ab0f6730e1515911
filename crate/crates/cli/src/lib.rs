//! Report documents shared by the `griesmer-lab` binary and its tests.

use std::time::{SystemTime, UNIX_EPOCH};

use griesmer_lab::bounds::{bound_b_binary_max_k, elias_max_dim, BoundError, TABLE1};
use serde::{Deserialize, Serialize};

/// Where a cell value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Computed,
    Published,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub value: u64,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub name: String,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub title: String,
    pub rows: Vec<Row>,
    pub citations: Vec<String>,
    /// Seconds since the Unix epoch.
    pub generated_at: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    /// Rows that must agree with their published counterpart and do not.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
}

impl ReportDocument {
    pub fn row(&self, name: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn values(&self, name: &str) -> Option<Vec<u64>> {
        self.row(name).map(|r| r.cells.iter().map(|c| c.value).collect())
    }

    pub fn render(&self) -> String {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut out = format!("{}\n", self.title);
        for row in &self.rows {
            let cells: Vec<String> = row.cells.iter().map(|c| format!("{:>4}", c.value)).collect();
            out.push_str(&format!("{:<width$} {}\n", row.name, cells.join("")));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for m in &self.mismatches {
            out.push_str(&format!("MISMATCH: {m}\n"));
        }
        out
    }
}

fn row(name: &str, source: Source, values: impl IntoIterator<Item = u64>) -> Row {
    Row { name: name.into(), cells: values.into_iter().map(|value| Cell { value, source }).collect() }
}

/// Recomputes the Bound B versus Elias comparison for the six published
/// columns.
pub fn table1() -> Result<ReportDocument, BoundError> {
    let mut elias = Vec::new();
    let mut bound_b = Vec::new();
    for col in &TABLE1 {
        elias.push(elias_max_dim(col.n, col.d)? as u64);
        bound_b.push(bound_b_binary_max_k(col.n, col.d)? as u64);
    }
    let published_elias: Vec<u64> = TABLE1.iter().map(|c| c.elias_published as u64).collect();
    let published_b: Vec<u64> = TABLE1.iter().map(|c| c.bound_b_published as u64).collect();

    let mut warnings = Vec::new();
    for (i, col) in TABLE1.iter().enumerate() {
        if elias[i] != published_elias[i] {
            warnings.push(format!(
                "Elias variant differs at n={}, d={}: computed {}, published {}",
                col.n, col.d, elias[i], published_elias[i]
            ));
        }
    }
    let mismatches = TABLE1
        .iter()
        .enumerate()
        .filter(|&(i, _)| bound_b[i] != published_b[i])
        .map(|(i, col)| {
            format!("Bound B at n={}, d={}: computed {}, published {}", col.n, col.d, bound_b[i], published_b[i])
        })
        .collect();

    Ok(ReportDocument {
        title: "Largest binary systematic dimension k allowed by the Elias bound and by Bound B".into(),
        rows: vec![
            row("n", Source::Published, TABLE1.iter().map(|c| c.n)),
            row("d", Source::Published, TABLE1.iter().map(|c| c.d)),
            row("elias", Source::Computed, elias),
            row("elias (published)", Source::Published, published_elias),
            row("bound_b", Source::Computed, bound_b),
            row("bound_b (published)", Source::Published, published_b),
        ],
        citations: vec![
            "published comparison of Bound B with the Elias bound for binary systematic codes".into(),
            "Elias bound in the Bassalygo form (nd / (2w^2 - 2nw + nd)) 2^n / V(n,w), w <= n/2".into(),
        ],
        generated_at: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        warnings,
        mismatches,
    })
}
