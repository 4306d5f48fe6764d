//! ASCII multiplicity diagrams: each nonzero multiplicity is written above
//! its weight on a ticked number line.
//!
//! ```text
//!     +1 +1 +1
//! --+--+--+--+--+->
//!   0  1  2  3  4
//! ```

use std::collections::BTreeMap;
use std::fmt;

use spinc_core::charring::VirtualCharacter;

/// Three rows: multiplicities, the axis, tick labels. Every entry is right
/// aligned in a fixed-width column, so a multiplicity sits directly above
/// the axis mark and label of its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramRendering {
    pub lines: Vec<String>,
}

fn signed(m: i64) -> String {
    if m > 0 {
        format!("+{m}")
    } else {
        m.to_string()
    }
}

impl DiagramRendering {
    /// Ticks every weight in `[support_min - 1, support_max + 1]`; the zero
    /// character gets the single tick `0` and an empty multiplicity row.
    pub fn render(ch: &VirtualCharacter) -> Self {
        let ticks: Vec<i64> = match (ch.support_min(), ch.support_max()) {
            (Some(lo), Some(hi)) => (lo - 1..=hi + 1).collect(),
            _ => vec![0],
        };
        let labels: Vec<String> = ticks.iter().map(i64::to_string).collect();
        let values: Vec<String> = ticks
            .iter()
            .map(|b| match ch.multiplicity(*b) {
                0 => String::new(),
                m => signed(m),
            })
            .collect();
        let width = 1 + labels.iter().chain(&values).map(String::len).max().unwrap_or(1);

        let row = |cells: &[String]| -> String {
            cells
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<String>()
                .trim_end()
                .to_string()
        };
        let mut axis = String::new();
        for _ in &ticks {
            axis.push_str(&"-".repeat(width - 1));
            axis.push('+');
        }
        axis.push_str("->");

        Self {
            lines: vec![row(&values), axis, row(&labels)],
        }
    }

    /// Reads the tick labels back from their positions.
    pub fn ticks(&self) -> Vec<i64> {
        tokens(&self.lines[2]).into_iter().map(|(_, v)| v).collect()
    }

    /// Reads `weight → multiplicity` back, matching each value to the tick
    /// label that ends in the same column.
    pub fn entries(&self) -> BTreeMap<i64, i64> {
        let labels: BTreeMap<usize, i64> = tokens(&self.lines[2]).into_iter().collect();
        tokens(&self.lines[0])
            .into_iter()
            .map(|(end, m)| {
                let beta = *labels
                    .get(&end)
                    .unwrap_or_else(|| panic!("multiplicity {m} ending at column {end} is not above a tick"));
                (beta, m)
            })
            .collect()
    }
}

/// `(end column, value)` for every integer token of a row.
fn tokens(row: &str) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in row.char_indices().chain(std::iter::once((row.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                let tok = &row[s..i];
                let v = tok
                    .trim_start_matches('+')
                    .parse()
                    .expect("diagram token is an integer");
                out.push((i - 1, v));
                start = None;
            }
            _ => {}
        }
    }
    out
}

impl fmt::Display for DiagramRendering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines.join("\n"))
    }
}
