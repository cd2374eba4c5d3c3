//! The chain of Plücker hypersurfaces cutting the chart down to the fibre
//! over the antistandard flag.

use serde::{Deserialize, Serialize};

use crate::column::{all_columns, Column};
use crate::coxeter::reduced_word;
use crate::error::Result;
use crate::perm::Permutation;
use crate::word::Word;

/// One step: the equation p_{κ_t} = 0 imposed at word position l_t.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainStep {
    /// u_t (before the step's reflection is applied).
    pub u: Permutation,
    /// u_{t+1} = s_{a_{t+1}} u_t.
    pub u_next: Permutation,
    /// κ_t = u_t ϖ_{b_t}.
    pub kappa: Column,
    /// κ'_t = u_{t+1} ϖ_{b_t}.
    pub kappa_prime: Column,
    /// b_t: the size of κ_t.
    pub b: usize,
    /// l_t: the greatest word index carrying the letter b_t.
    pub l: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypersurfaceChain {
    steps: Vec<ChainStep>,
}

impl HypersurfaceChain {
    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// The a-sequence: w_0 = s_{a_N} ... s_{a_1}, i.e. the staircase word of w_0
/// reversed, and the b-sequence: n-1 ones, n-2 twos, ..., one (n-1).
pub fn hypersurface_chain(n: usize, word: &Word) -> Result<HypersurfaceChain> {
    // every letter must occur so each l_t exists; fail before any allocation
    let mut positions = Vec::with_capacity(n - 1);
    for k in 1..n {
        positions.push(word.last_occurrence(k)?);
    }

    let staircase = reduced_word(&Permutation::longest(n));
    let a_seq: Vec<usize> = staircase.letters().iter().rev().copied().collect();
    let b_seq: Vec<usize> = (1..n).flat_map(|k| std::iter::repeat(k).take(n - k)).collect();
    debug_assert_eq!(a_seq.len(), b_seq.len());

    let mut steps = Vec::with_capacity(a_seq.len());
    let mut u = Permutation::identity(n);
    for (t, (&a, &b)) in a_seq.iter().zip(&b_seq).enumerate() {
        let _ = t;
        let u_next = u.left_mul_simple(a);
        let pi = Column::fundamental(b, n);
        steps.push(ChainStep {
            kappa: pi.act(&u)?,
            kappa_prime: pi.act(&u_next)?,
            b,
            l: positions[b - 1],
            u: u.clone(),
            u_next: u_next.clone(),
        });
        u = u_next;
    }
    debug_assert_eq!(u, Permutation::longest(n));
    Ok(HypersurfaceChain { steps })
}

/// For each step, checks that {κ ∈ I_{b_t,n} | κ ≥ κ_t, κ ≱ κ'_t} = {κ_t}.
pub fn verify_et_singleton(n: usize) -> Result<Vec<bool>> {
    // the word is irrelevant for this check; any word with all letters works
    let letters: Vec<usize> = (1..n).collect();
    let word = Word::new(letters, n)?;
    let chain = hypersurface_chain(n, &word)?;
    let mut out = Vec::with_capacity(chain.len());
    for step in chain.steps() {
        let members: Vec<Column> = all_columns(step.b, n)
            .into_iter()
            .filter(|k| {
                step.kappa.leq(k).unwrap() && !step.kappa_prime.leq(k).unwrap()
            })
            .collect();
        out.push(members.len() == 1 && members[0] == step.kappa);
    }
    Ok(out)
}
