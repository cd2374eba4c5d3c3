//! The affine chart of the gallery variety: matrix chains, monomial
//! evaluation, and flag positions.

use num::{BigRational, Zero};
use rand::Rng;

use crate::column::Column;
use crate::coxeter::demazure_right_step;
use crate::error::{Error, Result};
use crate::geometry::matrix::Mat;
use crate::perm::Permutation;
use crate::tableaux::{Shape, Tableau};
use crate::word::Word;

/// Static data of the chart attached to a word and an exponent vector.
#[derive(Clone, Debug)]
pub struct ChartData {
    word: Word,
    exponents: Vec<usize>,
    /// σ_0 = e, σ_{j+1} = σ_j * s_{i_{j+1}} (Demazure step).
    sigma: Vec<Permutation>,
    /// v_j = σ_{j-1}⁻¹ σ_j, each e or s_{i_j}.
    v_seq: Vec<Permutation>,
    /// β_j as a matrix position (a, b): (i_j, i_j+1) when v_j = s_{i_j},
    /// (i_j+1, i_j) when v_j = e.
    beta: Vec<(usize, usize)>,
    /// T_0: the column σ_jϖ_{i_j} repeated a_j times, in slot order.
    base_tableau: Tableau,
}

impl ChartData {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn sigma(&self) -> &[Permutation] {
        &self.sigma
    }

    pub fn v_seq(&self) -> &[Permutation] {
        &self.v_seq
    }

    pub fn beta(&self) -> &[(usize, usize)] {
        &self.beta
    }

    pub fn base_tableau(&self) -> &Tableau {
        &self.base_tableau
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn r(&self) -> usize {
        self.word.len()
    }
}

pub fn build_chart(word: &Word, exponents: &[usize]) -> Result<ChartData> {
    if exponents.len() != word.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} exponents for a word of length {}",
            exponents.len(),
            word.len()
        )));
    }
    if exponents.iter().any(|&a| a == 0) {
        return Err(Error::NotRegular);
    }
    let n = word.n();
    let mut sigma = vec![Permutation::identity(n)];
    let mut v_seq = Vec::with_capacity(word.len());
    let mut beta = Vec::with_capacity(word.len());
    for (j0, &i) in word.letters().iter().enumerate() {
        let prev = sigma[j0].clone();
        let next = demazure_right_step(&prev, i);
        v_seq.push(prev.inverse().compose(&next)?);
        beta.push(if next == prev { (i + 1, i) } else { (i, i + 1) });
        sigma.push(next);
    }
    let mut columns = Vec::new();
    for (j0, &i) in word.letters().iter().enumerate() {
        let col = Column::fundamental(i, n).act(&sigma[j0 + 1])?;
        for _ in 0..exponents[j0] {
            columns.push(col.clone());
        }
    }
    let shape = Shape::new(word.clone(), exponents.to_vec())?;
    let base_tableau = Tableau::new(shape, columns)?;
    Ok(ChartData {
        word: word.clone(),
        exponents: exponents.to_vec(),
        sigma,
        v_seq,
        beta,
        base_tableau,
    })
}

/// A point of the chart: coordinates plus the cached matrix chain B_1..B_r.
#[derive(Clone, Debug)]
pub struct GalleryPoint {
    coords: Vec<BigRational>,
    b_chain: Vec<Mat>,
}

impl GalleryPoint {
    pub fn from_coords(chart: &ChartData, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != chart.r() {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for a length-{} word",
                coords.len(),
                chart.r()
            )));
        }
        let n = chart.n();
        let mut b_chain = Vec::with_capacity(chart.r());
        let mut cur = Mat::identity(n);
        for (j0, x) in coords.iter().enumerate() {
            let a = Mat::eps(chart.beta()[j0], x, n).mul(&Mat::permutation(&chart.v_seq()[j0]))?;
            cur = cur.mul(&a)?;
            b_chain.push(cur.clone());
        }
        Ok(GalleryPoint { coords, b_chain })
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// B_j for 1-based j.
    pub fn b(&self, j: usize) -> &Mat {
        &self.b_chain[j - 1]
    }

    pub fn b_last(&self) -> &Mat {
        self.b_chain.last().expect("nonempty word")
    }
}

/// Uniform integer coordinates in [-bound, bound].
pub fn sample_point<R: Rng>(chart: &ChartData, rng: &mut R, bound: i64) -> Result<GalleryPoint> {
    let coords = (0..chart.r())
        .map(|_| BigRational::from_integer(rng.gen_range(-bound..=bound).into()))
        .collect();
    GalleryPoint::from_coords(chart, coords)
}

/// The Plücker coordinate p_κ of the span of the given columns of B.
pub fn plucker_minor(b: &Mat, kappa: &Column, cols: &Column) -> Result<BigRational> {
    b.minor(kappa, cols)
}

/// p_T(γ): the product over slots (k, m) of B_k[κ_{k,m}, ϖ_{i_k}].
pub fn evaluate_monomial(
    chart: &ChartData,
    tableau: &Tableau,
    point: &GalleryPoint,
) -> Result<BigRational> {
    if tableau.shape().word() != chart.word() {
        return Err(Error::ShapeMismatch("tableau shape does not match chart word".into()));
    }
    let n = chart.n();
    let mut acc = BigRational::from_integer(1.into());
    for (&(k, _), kappa) in tableau.shape().slots().iter().zip(tableau.columns()) {
        let i_k = chart.word().letter(k);
        let m = point.b(k).minor(kappa, &Column::fundamental(i_k, n))?;
        if m.is_zero() {
            return Ok(BigRational::zero());
        }
        acc *= m;
    }
    Ok(acc)
}

/// The Schubert-cell positions of the flag B·F_can: the direct position w
/// (B F_can ∈ C_w) and the opposite position relative to the antidominant
/// reference, both read off rank matrices.
pub fn flag_position(b: &Mat) -> Result<(Permutation, Permutation)> {
    let n = b.n_rows();
    if b.n_cols() != n {
        return Err(Error::ShapeMismatch(format!("{}x{} is not square", n, b.n_cols())));
    }
    if b.det()?.is_zero() {
        return Err(Error::Singular);
    }
    let mut direct = Vec::with_capacity(n);
    let mut opposite = Vec::with_capacity(n);
    for j in 1..=n {
        // direct position (upper-triangular orbit): column pivots sit at the
        // bottom, so take the greatest i where the rows-i..n rank jumps
        let w_j = (1..=n)
            .rev()
            .find(|&i| {
                let rows: Vec<usize> = (i..=n).collect();
                let cols: Vec<usize> = (1..=j).collect();
                let prev_cols: Vec<usize> = (1..j).collect();
                let r1 = super::matrix::rank_rational(&b.submatrix(&rows, &cols));
                let r0 = super::matrix::rank_rational(&b.submatrix(&rows, &prev_cols));
                r1 == r0 + 1
            })
            .ok_or(Error::Singular)?;
        direct.push(w_j);
        // opposite position (lower-triangular orbit): pivots at the top, so
        // take the least i where adding column j raises the top-rows rank
        let v_j = (1..=n)
            .find(|&i| b.corner_rank(i, j) == b.corner_rank(i, j - 1) + 1)
            .ok_or(Error::Singular)?;
        opposite.push(v_j);
    }
    Ok((Permutation::from_images(direct)?, Permutation::from_images(opposite)?))
}
