//! Words in the simple-reflection alphabet and index sets selecting subwords.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of letters in [n-1], standing for s_{i_1} ... s_{i_r}.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<usize>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parse("rank must be at least 1".into()));
        }
        for &l in &letters {
            if l < 1 || l >= n {
                return Err(Error::Parse(format!("letter {l} out of range for n={n}")));
            }
        }
        Ok(Word { letters, n })
    }

    pub fn empty(n: usize) -> Self {
        Word { letters: Vec::new(), n }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based letter access: i_j.
    pub fn letter(&self, j: usize) -> usize {
        self.letters[j - 1]
    }

    /// The subword selected by an index set.
    pub fn subword(&self, indices: &SubwordIndexSet) -> Word {
        Word {
            letters: indices.indices().iter().map(|&j| self.letter(j)).collect(),
            n: self.n,
        }
    }

    /// The prefix i_1 ... i_k as a word.
    pub fn prefix(&self, k: usize) -> Word {
        Word { letters: self.letters[..k].to_vec(), n: self.n }
    }

    /// The infix i_{a} ... i_{b} (1-based, inclusive).
    pub fn range(&self, a: usize, b: usize) -> Word {
        Word { letters: self.letters[a - 1..b].to_vec(), n: self.n }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { letters, n: self.n })
    }

    /// Greatest index j with i_j = k, for each k; used by the hypersurface chain.
    pub fn last_occurrence(&self, k: usize) -> Result<usize> {
        self.letters
            .iter()
            .rposition(|&l| l == k)
            .map(|p| p + 1)
            .ok_or(Error::MissingLetter(k))
    }

    /// Parses the comma-separated form "1,2,1".
    pub fn parse(s: &str, n: usize) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Word::new(Vec::new(), n);
        }
        let letters = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, n)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A strictly increasing subset of [r], selecting a subword.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubwordIndexSet {
    indices: Vec<usize>,
    r: usize,
}

impl SubwordIndexSet {
    pub fn new(mut indices: Vec<usize>, r: usize) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&max) = indices.last() {
            if max > r || indices[0] < 1 {
                return Err(Error::Parse(format!("index set not within [1,{r}]: {indices:?}")));
            }
        }
        Ok(SubwordIndexSet { indices, r })
    }

    pub fn full(r: usize) -> Self {
        SubwordIndexSet { indices: (1..=r).collect(), r }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubwordIndexSet) -> bool {
        self.indices.iter().all(|&j| other.contains(j))
    }

    /// Restriction J ∩ [k].
    pub fn restrict(&self, k: usize) -> SubwordIndexSet {
        SubwordIndexSet {
            indices: self.indices.iter().copied().take_while(|&j| j <= k).collect(),
            r: self.r,
        }
    }
}

impl fmt::Display for SubwordIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, j) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubwordIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
