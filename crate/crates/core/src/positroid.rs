//! Bruhat intervals and the column sets of projected Richardson varieties.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::column::Column;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Rank cap for interval enumeration (the Hasse walk is exponential in n).
pub const INTERVAL_RANK_LIMIT: usize = 6;

/// A pair v ≤ w in Bruhat order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RichardsonDescriptor {
    v: Permutation,
    w: Permutation,
}

impl RichardsonDescriptor {
    pub fn new(v: Permutation, w: Permutation) -> Result<Self> {
        if !v.bruhat_leq(&w)? {
            return Err(Error::Precondition(format!("{v} ≰ {w} in Bruhat order")));
        }
        Ok(RichardsonDescriptor { v, w })
    }

    pub fn v(&self) -> &Permutation {
        &self.v
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.v.n()
    }
}

/// The Bruhat interval [v, w], by an upward cover walk from v filtered by ≤ w.
pub fn interval(rd: &RichardsonDescriptor) -> Result<BTreeSet<Permutation>> {
    if rd.n() > INTERVAL_RANK_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "interval enumeration capped at n={INTERVAL_RANK_LIMIT}, got {}",
            rd.n()
        )));
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![rd.v().clone()];
    seen.insert(rd.v().clone());
    while let Some(u) = frontier.pop() {
        for c in u.bruhat_covers_above() {
            if !seen.contains(&c) && c.bruhat_leq(rd.w())? {
                seen.insert(c.clone());
                frontier.push(c);
            }
        }
    }
    Ok(seen)
}

/// M = {uϖ_i | u ∈ [v, w]}: the columns surviving on the projected variety.
pub fn positroid_columns(rd: &RichardsonDescriptor, i: usize) -> Result<BTreeSet<Column>> {
    if i < 1 || i >= rd.n() {
        return Err(Error::Precondition(format!("column size {i} out of [1,{}]", rd.n() - 1)));
    }
    let pi = Column::fundamental(i, rd.n());
    let mut out = BTreeSet::new();
    for u in interval(rd)? {
        out.insert(pi.act(&u)?);
    }
    Ok(out)
}

pub fn positroid_contains(rd: &RichardsonDescriptor, kappa: &Column) -> Result<bool> {
    Ok(positroid_columns(rd, kappa.size())?.contains(kappa))
}

/// JSON shape for the CLI: {v, w, i, columns}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PositroidReport {
    pub v: String,
    pub w: String,
    pub i: usize,
    pub columns: Vec<String>,
}

impl PositroidReport {
    pub fn build(rd: &RichardsonDescriptor, i: usize) -> Result<Self> {
        Ok(PositroidReport {
            v: rd.v().to_string(),
            w: rd.w().to_string(),
            i,
            columns: positroid_columns(rd, i)?.iter().map(|c| c.to_string()).collect(),
        })
    }
}
