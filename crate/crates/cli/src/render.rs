use serde::Serialize;
use std::collections::BTreeMap;
use versal_core::polyring::RingSpec;
use versal_core::Matrix;

/// Degree label in the `{-2}` / `{0, -2}` style.
pub fn degree_label(d: &[i64]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn matrix_strings(ring: &RingSpec, m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| ring.format(m.get(i, j))).collect())
        .collect()
}

/// Column-aligned text layout, one `| ... |` line per row, prefixed with
/// row degree labels when the matrix carries them.
pub fn matrix_text(ring: &RingSpec, m: &Matrix) -> String {
    let cells = matrix_strings(ring, m);
    let labels: Vec<String> = match m.row_degrees() {
        Some(rd) => rd.iter().map(|d| degree_label(d)).collect(),
        None => vec![String::new(); m.rows()],
    };
    let label_w = labels.iter().map(|s| s.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = String::new();
    if m.rows() == 0 {
        out.push_str("(empty)\n");
        return out;
    }
    for (row, label) in cells.iter().zip(&labels) {
        if label_w > 0 {
            out.push_str(&format!("{label:<label_w$} "));
        }
        out.push('|');
        for (cell, w) in row.iter().zip(&widths) {
            out.push_str(&format!(" {cell:<w$}"));
        }
        out.push_str(" |\n");
    }
    out
}

/// The machine-readable output document.
#[derive(Debug, Default, Serialize)]
pub struct Document {
    pub command: String,
    pub dims: BTreeMap<String, usize>,
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
    /// Per-order pieces of each series.
    pub series: BTreeMap<String, Vec<Vec<Vec<String>>>>,
    pub status: String,
    pub orders_log: Vec<String>,
    pub timing: Timing,
}

#[derive(Debug, Default, Serialize)]
pub struct Timing {
    pub seconds: f64,
}
