//! Sampling exact-rational points of the fibre over the antistandard flag,
//! and of Richardson varieties through it.

use num::{BigRational, Zero};
use rand::Rng;

use crate::column::Column;
use crate::coxeter::reduced_word;
use crate::error::{Error, Result};
use crate::geometry::chain::HypersurfaceChain;
use crate::geometry::chart::{build_chart, flag_position, ChartData, GalleryPoint};
use crate::geometry::matrix::Mat;
use crate::perm::Permutation;
use crate::word::Word;

/// Retry budget for degenerate random starts.
pub const RESAMPLE_CAP: usize = 32;
/// Sweep budget for driving all chain minors to zero.
const SWEEP_CAP: usize = 64;

/// The minor whose vanishing is step t's equation: the rows κ_t against the
/// first b_t columns of the final matrix B_r.
pub fn step_minor(point: &GalleryPoint, kappa: &Column, b: usize) -> Result<BigRational> {
    point.b_last().minor(kappa, &Column::fundamental(b, kappa.n()))
}

/// Step t's equation in entry form: the minor over rows σ_{l_t}ϖ_{b_t}
/// reduces, as a polynomial on the chart, to ± the single entry of the final
/// matrix at row κ_{t,1} (first entry of κ_t) and column b_t.
fn constraint_cells(chain: &HypersurfaceChain) -> Vec<(usize, usize)> {
    chain
        .steps()
        .iter()
        .map(|s| (s.kappa.entries()[0], s.b))
        .collect()
}

fn entry_at(chart: &ChartData, coords: &[BigRational], cell: (usize, usize)) -> Result<BigRational> {
    let point = GalleryPoint::from_coords(chart, coords.to_vec())?;
    Ok(point.b_last().at(cell.0, cell.1).clone())
}

/// Probe range for classifying slopes; independent of the caller's coordinate
/// bound so that accidental collisions stay negligible.
const PROBE_BOUND: i64 = 1_000_000;

/// Picks one coordinate per chain step to solve for. Each constraint entry is
/// monic-affine in some coordinate; a candidate qualifies when its finite-
/// difference slope is the same nonzero constant at a few random probes, and
/// distinct owners are found by bipartite matching over the candidate sets.
fn assign_owners<R: Rng>(
    chart: &ChartData,
    cells: &[(usize, usize)],
    rng: &mut R,
) -> Result<Vec<usize>> {
    let r = chart.r();
    let probes: Vec<Vec<BigRational>> = (0..3)
        .map(|_| {
            (0..r)
                .map(|_| {
                    BigRational::from_integer(rng.gen_range(-PROBE_BOUND..=PROBE_BOUND).into())
                })
                .collect()
        })
        .collect();
    let one = BigRational::from_integer(1.into());
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
    for &cell in cells {
        let slope_at = |p: usize, base: &[BigRational]| -> Result<BigRational> {
            let g0 = entry_at(chart, base, cell)?;
            let mut shifted = base.to_vec();
            shifted[p] += &one;
            Ok(entry_at(chart, &shifted, cell)? - g0)
        };
        let mut cands = Vec::new();
        'vars: for p in 0..r {
            let s0 = slope_at(p, &probes[0])?;
            if s0.is_zero() {
                continue;
            }
            for probe in &probes[1..] {
                if slope_at(p, probe)? != s0 {
                    continue 'vars;
                }
            }
            cands.push(p);
        }
        candidates.push(cands);
    }
    // one distinct coordinate per constraint: Kuhn's augmenting paths
    let mut owner_of_var: Vec<Option<usize>> = vec![None; r];
    fn augment(
        t: usize,
        candidates: &[Vec<usize>],
        owner_of_var: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &p in &candidates[t] {
            if seen[p] {
                continue;
            }
            seen[p] = true;
            if owner_of_var[p].is_none()
                || augment(owner_of_var[p].unwrap(), candidates, owner_of_var, seen)
            {
                owner_of_var[p] = Some(t);
                return true;
            }
        }
        false
    }
    for t in 0..cells.len() {
        let mut seen = vec![false; r];
        if !augment(t, &candidates, &mut owner_of_var, &mut seen) {
            return Err(Error::Degenerate);
        }
    }
    let mut owners = vec![usize::MAX; cells.len()];
    for (p, slot) in owner_of_var.iter().enumerate() {
        if let Some(t) = slot {
            owners[*t] = p;
        }
    }
    Ok(owners)
}

/// Draws a point of the fibre: random integer coordinates, then the chain
/// equations — single entries of the final matrix, each affine in its owner
/// coordinate — are solved by exact Gauss–Seidel sweeps to a fixpoint.
pub fn sample_gamma_point<R: Rng>(
    chart: &ChartData,
    chain: &HypersurfaceChain,
    rng: &mut R,
    bound: i64,
) -> Result<GalleryPoint> {
    let r = chart.r();
    let n = chart.n();
    let w0 = Permutation::longest(n);
    let cells = constraint_cells(chain);
    let owners = assign_owners(chart, &cells, rng)?;
    let one = BigRational::from_integer(1.into());
    'attempt: for _ in 0..RESAMPLE_CAP {
        let mut coords: Vec<BigRational> = (0..r)
            .map(|_| BigRational::from_integer(rng.gen_range(-bound..=bound).into()))
            .collect();
        for _ in 0..SWEEP_CAP {
            let mut dirty = false;
            for (t, &cell) in cells.iter().enumerate() {
                let g = entry_at(chart, &coords, cell)?;
                if g.is_zero() {
                    continue;
                }
                dirty = true;
                let p = owners[t];
                let mut shifted = coords.clone();
                shifted[p] += &one;
                let slope = entry_at(chart, &shifted, cell)? - &g;
                if slope.is_zero() {
                    continue 'attempt;
                }
                coords[p] -= &g / &slope;
            }
            if !dirty {
                let point = GalleryPoint::from_coords(chart, coords)?;
                // all entries vanish; confirm we landed in the fibre
                let (direct, _) = flag_position(point.b_last())?;
                if direct == w0 {
                    return Ok(point);
                }
                continue 'attempt;
            }
        }
    }
    Err(Error::Degenerate)
}

/// A generic exact-rational flag of the Richardson variety for (v, w),
/// obtained by projecting a fibre sample of the concatenated word
/// reduced(w) · reverse(reduced(w0·v)) at slot ℓ(w).
pub fn sample_richardson<R: Rng>(
    v: &Permutation,
    w: &Permutation,
    rng: &mut R,
    bound: i64,
) -> Result<Mat> {
    if !v.bruhat_leq(w)? {
        return Err(Error::Precondition(format!("{v} ≰ {w} in Bruhat order")));
    }
    let n = v.n();
    let head = reduced_word(w);
    let w0v = Permutation::longest(n).compose(v)?;
    let tail_letters: Vec<usize> =
        reduced_word(&w0v).letters().iter().rev().copied().collect();
    let mut letters = head.letters().to_vec();
    letters.extend(tail_letters);
    let word = Word::new(letters, n)?;
    if word.is_empty() {
        return Ok(Mat::identity(n));
    }
    let chart = build_chart(&word, &vec![1; word.len()])?;
    let chain = crate::geometry::chain::hypersurface_chain(n, &word)?;
    let point = sample_gamma_point(&chart, &chain, rng, bound)?;
    let d = w.length();
    Ok(if d == 0 { Mat::identity(n) } else { point.b(d).clone() })
}

/// The Richardson pair (x, y) carrying the image of the slot-j projection:
/// y = w_max of the prefix, x = w0 · w_max(suffix)⁻¹.
pub fn projection_image(
    word: &Word,
    j: usize,
) -> Result<(Permutation, Permutation)> {
    let n = word.n();
    let w0 = Permutation::longest(n);
    if !crate::coxeter::contains_reduced_expression(word, &w0)? {
        return Err(Error::Precondition(
            "word does not contain a reduced expression of the longest element".into(),
        ));
    }
    let y = crate::coxeter::w_max(&word.prefix(j));
    let suffix_max = crate::coxeter::w_max(&word.range(j + 1, word.len()));
    let x = w0.compose(&suffix_max.inverse())?;
    Ok((x, y))
}
