//! Columns: strictly increasing index tuples, i.e. points of I_{i,n}.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A strictly increasing sequence t_1 < ... < t_i with values in [n].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Column {
    entries: Vec<usize>,
    n: usize,
}

impl Column {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        for win in entries.windows(2) {
            if win[0] >= win[1] {
                return Err(Error::Parse(format!("entries not strictly increasing: {entries:?}")));
            }
        }
        if entries.first().is_some_and(|&t| t < 1) || entries.last().is_some_and(|&t| t > n) {
            return Err(Error::Parse(format!("entries out of [1,{n}]: {entries:?}")));
        }
        Ok(Column { entries, n })
    }

    /// The fundamental column ϖ_i = (1, 2, ..., i).
    pub fn fundamental(i: usize, n: usize) -> Self {
        Column { entries: (1..=i).collect(), n }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_fundamental(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &t)| t == i + 1)
    }

    /// Componentwise order on I_{i,n}.
    pub fn leq(&self, other: &Column) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::ShapeMismatch(format!(
                "column sizes {} vs {}",
                self.size(),
                other.size()
            )));
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// w · κ: the sorted image set {w(t_1), ..., w(t_i)}.
    pub fn act(&self, w: &Permutation) -> Result<Column> {
        if w.n() != self.n {
            return Err(Error::RankMismatch(w.n(), self.n));
        }
        let mut entries: Vec<usize> = self.entries.iter().map(|&t| w.image(t)).collect();
        entries.sort_unstable();
        Ok(Column { entries, n: self.n })
    }

    /// Parses the comma-separated form "1,3".
    pub fn parse(s: &str, n: usize) -> Result<Column> {
        let s = s.trim();
        if s.is_empty() {
            return Column::new(Vec::new(), n);
        }
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Column::new(entries, n)
    }
}

/// All columns of size i in [n], in lexicographic order.
pub fn all_columns(i: usize, n: usize) -> Vec<Column> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=i).collect();
    if i > n {
        return out;
    }
    loop {
        out.push(Column { entries: cur.clone(), n });
        // next combination
        let Some(p) = (0..i).rev().find(|&p| cur[p] < n - (i - 1 - p)) else {
            break;
        };
        cur[p] += 1;
        for q in p + 1..i {
            cur[q] = cur[q - 1] + 1;
        }
    }
    out
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}
