//! Demazure products, reduced words, and the max-E fibre maximum.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::column::Column;
use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::word::Word;

/// Default length cap for exhaustive reduced-word enumeration.
pub const REDUCED_WORD_LIMIT: usize = 12;

/// Default rank cap for brute-force oracles.
pub const BRUTEFORCE_RANK_LIMIT: usize = 6;

/// x * s_i = max(x, x s_i): the one-letter Demazure step on the right.
pub fn demazure_right_step(x: &Permutation, i: usize) -> Permutation {
    let xs = x.right_mul_simple(i);
    if xs.length() > x.length() {
        xs
    } else {
        x.clone()
    }
}

/// s_i * x = max(x, s_i x): the one-letter Demazure step on the left.
pub fn demazure_left_step(i: usize, x: &Permutation) -> Permutation {
    let sx = x.left_mul_simple(i);
    if sx.length() > x.length() {
        sx
    } else {
        x.clone()
    }
}

/// The Demazure (0-Hecke) product x * y, folded over a reduced word of y.
pub fn demazure_product(x: &Permutation, y: &Permutation) -> Result<Permutation> {
    if x.n() != y.n() {
        return Err(Error::RankMismatch(x.n(), y.n()));
    }
    let mut acc = x.clone();
    for &l in reduced_word(y).letters() {
        acc = demazure_right_step(&acc, l);
    }
    Ok(acc)
}

/// w_max(i) = s_{i_1} * ... * s_{i_r}: the Bruhat maximum over all subwords.
pub fn w_max(word: &Word) -> Permutation {
    let mut acc = Permutation::identity(word.n());
    for &l in word.letters() {
        acc = demazure_right_step(&acc, l);
    }
    acc
}

/// The lexicographically smallest reduced word of w, by greedy descent stripping.
pub fn reduced_word(w: &Permutation) -> Word {
    let mut letters = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    while let Some(i) = cur.min_left_descent() {
        letters.push(i);
        cur = cur.left_mul_simple(i);
    }
    Word::new(letters, w.n()).expect("descent letters are always in range")
}

/// True iff `word` is a reduced word for the permutation it spells.
pub fn is_reduced(word: &Word) -> bool {
    let mut acc = Permutation::identity(word.n());
    for &l in word.letters() {
        let next = acc.right_mul_simple(l);
        if next.length() < acc.length() {
            return false;
        }
        acc = next;
    }
    true
}

/// The product s_{i_1} ... s_{i_r} of the letters, reduced or not.
pub fn word_product(word: &Word) -> Permutation {
    let mut acc = Permutation::identity(word.n());
    for &l in word.letters() {
        acc = acc.right_mul_simple(l);
    }
    acc
}

/// All reduced words of w, capped at length `limit` (exhaustive, deduplicated).
pub fn all_reduced_words(w: &Permutation, limit: usize) -> Result<Vec<Word>> {
    if w.length() > limit {
        return Err(Error::LimitExceeded(format!(
            "reduced-word enumeration capped at length {limit}, got {}",
            w.length()
        )));
    }
    let mut memo: HashMap<Permutation, Vec<Vec<usize>>> = HashMap::new();
    fn rec(w: &Permutation, memo: &mut HashMap<Permutation, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut out = Vec::new();
        if w.is_identity() {
            out.push(Vec::new());
        } else {
            for i in 1..w.n() {
                if w.has_left_descent(i) {
                    for mut tail in rec(&w.left_mul_simple(i), memo) {
                        tail.insert(0, i);
                        out.push(tail);
                    }
                }
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }
    Ok(rec(w, &mut memo)
        .into_iter()
        .map(|letters| Word::new(letters, w.n()).unwrap())
        .collect())
}

/// True iff some subword of `word` is a reduced word of w, via w_max(word) ≥ w.
pub fn contains_reduced_expression(word: &Word, w: &Permutation) -> Result<bool> {
    if word.n() != w.n() {
        return Err(Error::RankMismatch(word.n(), w.n()));
    }
    w.bruhat_leq(&w_max(word))
}

/// The minimal-length u with uϖ_i = κ: κ entries first, complement ascending.
pub fn min_coset_rep(kappa: &Column) -> Permutation {
    let n = kappa.n();
    let mut images: Vec<usize> = kappa.entries().to_vec();
    let mut in_kappa = vec![false; n + 1];
    for &t in kappa.entries() {
        in_kappa[t] = true;
    }
    images.extend((1..=n).filter(|&t| !in_kappa[t]));
    Permutation::from_images(images).unwrap()
}

/// Branch taken at one step of the max-E recursion, comparing sκ with κ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MaxEBranch {
    /// sκ > κ: discard the letter.
    Raised,
    /// sκ < κ: apply the letter and descend with sκ.
    Lowered,
    /// sκ = κ: apply the letter, column unchanged.
    Fixed,
}

impl fmt::Display for MaxEBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxEBranch::Raised => write!(f, ">"),
            MaxEBranch::Lowered => write!(f, "≤"),
            MaxEBranch::Fixed => write!(f, "fix"),
        }
    }
}

/// One step of the max-E recursion trace.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MaxEStep {
    /// The stripped left descent s_i of the current w.
    pub letter: usize,
    /// The column handed to the recursive call.
    pub column: Column,
    pub branch: MaxEBranch,
}

/// Result of `max_e`: the fibre maximum (if any) plus the recursion trace.
#[derive(Clone, Debug)]
pub struct MaxEOutcome {
    pub value: Option<Permutation>,
    pub trace: Vec<MaxEStep>,
}

/// max{v ≤ w | vϖ_i = κ}, or None when the fibre is empty.
///
/// Strips the smallest left descent s of w at each step: if sκ > κ the letter
/// is dropped; otherwise the answer is s * max_e(sw, sκ) via a left Demazure
/// step. At w = e the fibre is nonempty iff the remaining column is ϖ_i.
pub fn max_e(w: &Permutation, kappa: &Column) -> Result<MaxEOutcome> {
    if w.n() != kappa.n() {
        return Err(Error::RankMismatch(w.n(), kappa.n()));
    }
    let mut trace = Vec::new();
    let mut cur_w = w.clone();
    let mut cur_k = kappa.clone();
    // descend, recording which letters participate
    let mut applied: Vec<Option<usize>> = Vec::new();
    while let Some(s) = cur_w.min_left_descent() {
        let sk = cur_k.act(&Permutation::simple(s, w.n()))?;
        let branch = if sk == cur_k {
            MaxEBranch::Fixed
        } else if cur_k.leq(&sk)? {
            MaxEBranch::Raised
        } else {
            MaxEBranch::Lowered
        };
        cur_w = cur_w.left_mul_simple(s);
        match branch {
            MaxEBranch::Raised => {
                trace.push(MaxEStep { letter: s, column: cur_k.clone(), branch });
                applied.push(None);
            }
            MaxEBranch::Lowered | MaxEBranch::Fixed => {
                cur_k = sk;
                trace.push(MaxEStep { letter: s, column: cur_k.clone(), branch });
                applied.push(Some(s));
            }
        }
    }
    if !cur_k.is_fundamental() {
        return Ok(MaxEOutcome { value: None, trace });
    }
    // unwind with left Demazure steps
    let mut v = Permutation::identity(w.n());
    for step in applied.iter().rev().flatten() {
        v = demazure_left_step(*step, &v);
    }
    Ok(MaxEOutcome { value: Some(v), trace })
}

/// Exhaustive oracle for `max_e`, limited to small rank.
pub fn max_e_bruteforce(w: &Permutation, kappa: &Column) -> Result<Option<Permutation>> {
    let n = w.n();
    if n > BRUTEFORCE_RANK_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "brute-force fibre maximum capped at n={BRUTEFORCE_RANK_LIMIT}, got {n}"
        )));
    }
    let i = kappa.size();
    let pi = Column::fundamental(i, n);
    let mut candidates = Vec::new();
    for v in all_permutations(n) {
        if v.bruhat_leq(w)? && pi.act(&v)? == *kappa {
            candidates.push(v);
        }
    }
    // the fibre has a unique maximum when nonempty; locate it by dominance
    for c in &candidates {
        if candidates.iter().all(|o| o.bruhat_leq(c).unwrap()) {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}
