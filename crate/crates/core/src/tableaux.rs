//! Tableaux of shape (i, m), lifting chains, standardness and w0-standardness,
//! and the canonical (optimal) lifting construction.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::column::{all_columns, Column};
use crate::coxeter::{
    contains_reduced_expression, demazure_product, is_reduced, max_e, w_max, word_product,
};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{SubwordIndexSet, Word};

/// Default cap on the number of tableaux an enumeration may visit.
pub const ENUMERATION_LIMIT: usize = 2_000_000;

/// A word together with one multiplicity per letter position.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    word: Word,
    multiplicities: Vec<usize>,
}

impl Shape {
    pub fn new(word: Word, multiplicities: Vec<usize>) -> Result<Self> {
        if word.len() != multiplicities.len() {
            return Err(Error::ShapeMismatch(format!(
                "word length {} vs {} multiplicities",
                word.len(),
                multiplicities.len()
            )));
        }
        Ok(Shape { word, multiplicities })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn r(&self) -> usize {
        self.word.len()
    }

    /// Every multiplicity positive.
    pub fn is_regular(&self) -> bool {
        self.multiplicities.iter().all(|&m| m > 0)
    }

    /// Occupied slots (k, m) in chain order: k ascending, then m = 1..m_k.
    pub fn slots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k0, &mk) in self.multiplicities.iter().enumerate() {
            for m in 1..=mk {
                out.push((k0 + 1, m));
            }
        }
        out
    }

    pub fn total_columns(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {:?})", self.word, self.multiplicities)
    }
}

/// A sequence of columns, one per occupied slot of the shape, in slot order.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    shape: Shape,
    columns: Vec<Column>,
}

impl Tableau {
    pub fn new(shape: Shape, columns: Vec<Column>) -> Result<Self> {
        let slots = shape.slots();
        if columns.len() != slots.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} columns for {} slots",
                columns.len(),
                slots.len()
            )));
        }
        for ((k, _), col) in slots.iter().zip(&columns) {
            let want = shape.word().letter(*k);
            if col.size() != want {
                return Err(Error::ShapeMismatch(format!(
                    "column {col:?} at position {k} should have size {want}"
                )));
            }
            if col.n() != shape.n() {
                return Err(Error::RankMismatch(col.n(), shape.n()));
            }
        }
        Ok(Tableau { shape, columns })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Parses the star-joined form "1,2,3*1,3*3" against a shape.
    pub fn parse(s: &str, shape: Shape) -> Result<Tableau> {
        let s = s.trim();
        let columns = if s.is_empty() {
            Vec::new()
        } else {
            s.split('*')
                .map(|c| Column::parse(c, shape.n()))
                .collect::<Result<Vec<_>>>()?
        };
        Tableau::new(shape, columns)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A decreasing chain of subword index sets, one per occupied slot.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Lifting {
    chain: Vec<SubwordIndexSet>,
}

impl Lifting {
    pub fn new(chain: Vec<SubwordIndexSet>) -> Self {
        Lifting { chain }
    }

    pub fn chain(&self) -> &[SubwordIndexSet] {
        &self.chain
    }

    /// Checks the chain against a tableau: weakly decreasing, each truncated
    /// subword reduced, and each truncated product reproducing the column.
    pub fn validate(&self, tableau: &Tableau) -> Result<()> {
        let shape = tableau.shape();
        let slots = shape.slots();
        if self.chain.len() != slots.len() {
            return Err(Error::ShapeMismatch(format!(
                "lifting has {} sets for {} slots",
                self.chain.len(),
                slots.len()
            )));
        }
        for win in self.chain.windows(2) {
            if !win[1].is_subset_of(&win[0]) {
                return Err(Error::Precondition(format!(
                    "chain not decreasing: {} ⊉ {}",
                    win[0], win[1]
                )));
            }
        }
        for (idx, ((k, _), j)) in slots.iter().zip(&self.chain).enumerate() {
            let trunc = j.restrict(*k);
            let sub = shape.word().subword(&trunc);
            if !is_reduced(&sub) {
                return Err(Error::Precondition(format!(
                    "slot {idx}: subword {sub:?} of {j} is not reduced"
                )));
            }
            let w = word_product(&sub);
            let i_k = shape.word().letter(*k);
            let got = Column::fundamental(i_k, shape.n()).act(&w)?;
            if got != tableau.columns()[idx] {
                return Err(Error::Precondition(format!(
                    "slot {idx}: {j} yields column {got:?}, tableau has {:?}",
                    tableau.columns()[idx]
                )));
            }
        }
        Ok(())
    }
}

/// Searches for a lifting in normal form J = E ∪ [k+1, r] with E ⊆ [k].
///
/// Any lifting can be inflated to this form slotwise without breaking the
/// chain or the truncated-subword conditions (the part beyond k is free), and
/// inflating only helps the w0-containment requirement, so restricting the
/// search loses nothing.
struct LiftSearch<'a> {
    tableau: &'a Tableau,
    slots: Vec<(usize, usize)>,
    /// w_max of the suffix i_{k+1} ... i_r, indexed by k = 0..r.
    suffix_max: Vec<Permutation>,
    require_w0: bool,
    w0: Permutation,
    dead: HashSet<(usize, u64)>,
}

impl<'a> LiftSearch<'a> {
    fn new(tableau: &'a Tableau, require_w0: bool) -> Self {
        let shape = tableau.shape();
        let r = shape.r();
        let n = shape.n();
        let suffix_max = (0..=r)
            .map(|k| w_max(&shape.word().range(k + 1, r)))
            .collect::<Vec<_>>();
        LiftSearch {
            tableau,
            slots: shape.slots(),
            suffix_max,
            require_w0,
            w0: Permutation::longest(n),
            dead: HashSet::new(),
        }
    }

    /// Does E (bitmask over [r], bit j-1 for index j) work at slot `idx`?
    fn slot_ok(&self, idx: usize, mask: u64) -> bool {
        let shape = self.tableau.shape();
        let (k, _) = self.slots[idx];
        let indices: Vec<usize> = (1..=k).filter(|&j| mask >> (j - 1) & 1 == 1).collect();
        let sub = shape.word().subword(&SubwordIndexSet::new(indices, shape.r()).unwrap());
        if !is_reduced(&sub) {
            return false;
        }
        let w = word_product(&sub);
        let i_k = shape.word().letter(k);
        if Column::fundamental(i_k, shape.n()).act(&w).unwrap() != self.tableau.columns()[idx] {
            return false;
        }
        if self.require_w0 {
            // i(J) = i(E) followed by the full suffix past k
            let full = demazure_product(&w, &self.suffix_max[k]).unwrap();
            if full != self.w0 {
                return false;
            }
        }
        true
    }

    /// DFS from slot `idx` given the previous slot's E-mask and position.
    fn dfs(&mut self, idx: usize, prev_mask: u64, prev_k: usize, out: &mut Vec<u64>) -> bool {
        if idx == self.slots.len() {
            return true;
        }
        if self.dead.contains(&(idx, prev_mask)) {
            return false;
        }
        let (k, _) = self.slots[idx];
        // ground set: previous E plus the indices newly inside [k]
        let mut ground = prev_mask;
        for j in prev_k + 1..=k {
            ground |= 1 << (j - 1);
        }
        let ground_bits: Vec<u64> = (0..64).filter(|b| ground >> b & 1 == 1).collect();
        let count = ground_bits.len();
        for sub in 0..(1u64 << count) {
            let mask = ground_bits
                .iter()
                .enumerate()
                .filter(|(p, _)| sub >> p & 1 == 1)
                .fold(0u64, |acc, (_, &b)| acc | 1 << b);
            if self.slot_ok(idx, mask) && self.dfs(idx + 1, mask, k, out) {
                out.push(mask);
                return true;
            }
        }
        self.dead.insert((idx, prev_mask));
        false
    }

    fn run(&mut self) -> Option<Lifting> {
        let mut masks = Vec::new();
        if !self.dfs(0, 0, 0, &mut masks) {
            return None;
        }
        masks.reverse();
        let shape = self.tableau.shape();
        let r = shape.r();
        let chain = masks
            .iter()
            .zip(&self.slots)
            .map(|(&mask, &(k, _))| {
                let mut indices: Vec<usize> =
                    (1..=k).filter(|&j| mask >> (j - 1) & 1 == 1).collect();
                indices.extend(k + 1..=r);
                SubwordIndexSet::new(indices, r).unwrap()
            })
            .collect();
        Some(Lifting::new(chain))
    }
}

/// True with a witness lifting iff the tableau admits any lifting.
pub fn is_standard(tableau: &Tableau) -> Option<Lifting> {
    LiftSearch::new(tableau, false).run()
}

/// True with a witness iff some lifting has every set containing a reduced
/// expression of w0. Exhaustive search over normal-form chains.
pub fn is_w0_standard(tableau: &Tableau) -> Option<Lifting> {
    LiftSearch::new(tableau, true).run()
}

/// The canonical lifting: v-values by iterated max-E / Demazure steps and
/// index sets chosen as the lexicographically smallest reduced embeddings.
#[derive(Clone, Debug)]
pub struct OptimalLifting {
    pub lifting: Lifting,
    /// v_{k,m} per slot, in slot order.
    pub v_seq: Vec<Permutation>,
}

pub fn optimal_lifting(tableau: &Tableau) -> Result<OptimalLifting> {
    let shape = tableau.shape();
    let slots = shape.slots();
    let r = shape.r();
    if slots.is_empty() {
        return Ok(OptimalLifting { lifting: Lifting::new(Vec::new()), v_seq: Vec::new() });
    }

    // v-values, slot by slot
    let mut v_seq: Vec<Permutation> = Vec::with_capacity(slots.len());
    for (idx, &(k, m)) in slots.iter().enumerate() {
        let kappa = &tableau.columns()[idx];
        let upper = if m > 1 {
            v_seq[idx - 1].clone()
        } else if idx == 0 {
            w_max(&shape.word().prefix(k))
        } else {
            let (prev_k, _) = slots[idx - 1];
            demazure_product(&v_seq[idx - 1], &w_max(&shape.word().range(prev_k + 1, k)))?
        };
        let v = max_e(&upper, kappa)?.value.ok_or(Error::NotStandard)?;
        v_seq.push(v);
    }

    // index embeddings: E at each slot inside the previous E plus new indices
    let mut chain = Vec::with_capacity(slots.len());
    let mut prev_e: Vec<usize> = Vec::new();
    let mut prev_k = 0usize;
    for (idx, &(k, _)) in slots.iter().enumerate() {
        let mut ground = prev_e.clone();
        ground.extend(prev_k + 1..=k);
        ground.sort_unstable();
        let e = lex_min_embedding(shape.word(), &ground, &v_seq[idx])
            .ok_or(Error::NotStandard)?;
        let mut indices = e.clone();
        indices.extend(k + 1..=r);
        chain.push(SubwordIndexSet::new(indices, r)?);
        prev_e = e;
        prev_k = k;
    }
    let lifting = Lifting::new(chain);
    lifting.validate(tableau).map_err(|_| Error::NotStandard)?;
    Ok(OptimalLifting { lifting, v_seq })
}

/// Lexicographically smallest E ⊆ ground with i(E) a reduced word of v.
fn lex_min_embedding(word: &Word, ground: &[usize], v: &Permutation) -> Option<Vec<usize>> {
    let need = v.length();
    fn rec(
        word: &Word,
        ground: &[usize],
        from: usize,
        acc: &Permutation,
        v: &Permutation,
        need: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == need {
            return acc == v;
        }
        for p in from..ground.len() {
            if ground.len() - p < need - chosen.len() {
                break;
            }
            let j = ground[p];
            let a = word.letter(j);
            let next = acc.right_mul_simple(a);
            // must stay a reduced prefix of v
            if next.length() != acc.length() + 1 {
                continue;
            }
            let rest = next.inverse().compose(v).unwrap();
            if next.length() + rest.length() != v.length() {
                continue;
            }
            chosen.push(j);
            if rec(word, ground, p + 1, &next, v, need, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let e = Permutation::identity(word.n());
    if rec(word, ground, 0, &e, v, need, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// True iff every set of the canonical lifting contains a reduced word of w0.
pub fn optimal_lifting_w0_test(tableau: &Tableau) -> Result<bool> {
    let opt = optimal_lifting(tableau)?;
    let shape = tableau.shape();
    let w0 = Permutation::longest(shape.n());
    for j in opt.lifting.chain() {
        let sub = shape.word().subword(j);
        if !contains_reduced_expression(&sub, &w0)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All tableaux of the shape (each slot ranging over the full column set).
pub fn enumerate_tableaux(shape: &Shape, limit: usize) -> Result<Vec<Tableau>> {
    let slots = shape.slots();
    let per_slot: Vec<Vec<Column>> = slots
        .iter()
        .map(|&(k, _)| all_columns(shape.word().letter(k), shape.n()))
        .collect();
    let total: usize = per_slot.iter().map(Vec::len).try_fold(1usize, |a, b| a.checked_mul(b))
        .ok_or_else(|| Error::LimitExceeded("tableau count overflow".into()))?;
    if total > limit {
        return Err(Error::LimitExceeded(format!(
            "{total} tableaux exceeds the cap of {limit}"
        )));
    }
    let mut out = Vec::with_capacity(total);
    let mut stack: Vec<Column> = Vec::with_capacity(slots.len());
    fn rec(
        shape: &Shape,
        per_slot: &[Vec<Column>],
        stack: &mut Vec<Column>,
        out: &mut Vec<Tableau>,
    ) {
        if stack.len() == per_slot.len() {
            out.push(Tableau::new(shape.clone(), stack.clone()).unwrap());
            return;
        }
        for c in &per_slot[stack.len()] {
            stack.push(c.clone());
            rec(shape, per_slot, stack, out);
            stack.pop();
        }
    }
    rec(shape, &per_slot, &mut stack, &mut out);
    Ok(out)
}

/// The standard tableaux of the shape.
pub fn enumerate_standard(shape: &Shape, limit: usize) -> Result<Vec<Tableau>> {
    Ok(enumerate_tableaux(shape, limit)?
        .into_iter()
        .filter(|t| is_standard(t).is_some())
        .collect())
}

/// The w0-standard tableaux of the shape.
pub fn enumerate_w0_standard(shape: &Shape, limit: usize) -> Result<Vec<Tableau>> {
    Ok(enumerate_tableaux(shape, limit)?
        .into_iter()
        .filter(|t| is_w0_standard(t).is_some())
        .collect())
}

/// Flat JSON record for one tableau, as emitted by the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableauRecord {
    pub word: String,
    pub multiplicities: Vec<usize>,
    pub columns: String,
    pub standard: bool,
    pub w0_standard: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lifting: Option<Vec<Vec<usize>>>,
}

impl TableauRecord {
    pub fn build(tableau: &Tableau) -> Self {
        let witness = is_standard(tableau);
        let w0 = witness.is_some() && is_w0_standard(tableau).is_some();
        TableauRecord {
            word: tableau.shape().word().to_string(),
            multiplicities: tableau.shape().multiplicities().to_vec(),
            columns: tableau.to_string(),
            standard: witness.is_some(),
            w0_standard: w0,
            lifting: witness
                .map(|l| l.chain().iter().map(|j| j.indices().to_vec()).collect()),
        }
    }
}
