use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `n`, drawn as a left-justified Young diagram.
///
/// Only the row lengths are stored; column data is derived on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    rows: Vec<u32>,
    n: u32,
}

impl YoungDiagram {
    /// Builds a diagram from weakly decreasing positive row lengths.
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::domain("row lengths must be positive"));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "row lengths must be weakly decreasing, got {rows:?}"
            )));
        }
        let n = rows
            .iter()
            .try_fold(0u32, |acc, &r| acc.checked_add(r))
            .ok_or_else(|| Error::domain("box count overflows u32"))?;
        Ok(YoungDiagram { rows, n })
    }

    /// Sorts arbitrary positive parts into a diagram.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u32>, n: u32) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        debug_assert_eq!(rows.iter().sum::<u32>(), n);
        YoungDiagram { rows, n }
    }

    /// The empty diagram, the unique partition of zero.
    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new(), n: 0 }
    }

    /// The one-row diagram `[n]`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            YoungDiagram { rows: vec![n], n }
        }
    }

    /// The one-column diagram `[1^n]`.
    pub fn column(n: u32) -> Self {
        YoungDiagram { rows: vec![1; n as usize], n }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Total number of boxes.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Length of the first column, i.e. the number of rows.
    pub fn first_column_len(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Length of the first row.
    pub fn first_row_len(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Column lengths, left to right.
    pub fn column_lengths(&self) -> Vec<u32> {
        let width = self.first_row_len() as usize;
        let mut cols = vec![0u32; width];
        for &r in &self.rows {
            for c in cols.iter_mut().take(r as usize) {
                *c += 1;
            }
        }
        cols
    }

    /// The conjugate diagram, rows and columns exchanged.
    pub fn transpose(&self) -> Self {
        YoungDiagram {
            rows: self.column_lengths(),
            n: self.n,
        }
    }

    /// Cells as zero-based `(row, column)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i as u32, j)))
    }

    /// Hook lengths in row-major order: arm + leg + 1 for every cell.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let cols = self.column_lengths();
        let mut hooks = Vec::with_capacity(self.n as usize);
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 0..len as usize {
                let arm = len - j as u32 - 1;
                let leg = cols[j] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Contents `column - row` in row-major order.
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells().map(|(i, j)| j as i64 - i as i64)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Parses `[3,1]`, `3,1`, `3 1` or exponent shorthand like `[2,1^3]`.
///
/// The parts must already be weakly decreasing; `[]` is the empty diagram.
impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const MAX_BOXES: u64 = 1 << 24;

        let body = s.trim();
        let body = match (body.strip_prefix('['), body.strip_suffix(']')) {
            (Some(_), Some(_)) if body.len() >= 2 => &body[1..body.len() - 1],
            (None, None) => body,
            _ => return Err(Error::parse(format!("unbalanced brackets in {s:?}"))),
        };
        let mut rows = Vec::new();
        let mut total: u64 = 0;
        for token in body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let (part, reps) = match token.split_once('^') {
                Some((p, e)) => (p, e),
                None => (token, "1"),
            };
            let part: u32 = part
                .parse()
                .map_err(|_| Error::parse(format!("bad part {token:?}")))?;
            let reps: u32 = reps
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent {token:?}")))?;
            if part == 0 {
                return Err(Error::parse(format!("zero part in {token:?}")));
            }
            total += part as u64 * reps as u64;
            if total > MAX_BOXES {
                return Err(Error::parse(format!("diagram exceeds {MAX_BOXES} boxes")));
            }
            rows.extend(std::iter::repeat_n(part, reps as usize));
        }
        YoungDiagram::new(rows)
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;

    fn try_from(rows: Vec<u32>) -> Result<Self> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}
