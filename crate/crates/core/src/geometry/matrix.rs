//! Exact-rational matrices: products, minors, and fraction-free rank.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::column::Column;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// 1-based access.
    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[(i - 1) * self.cols + j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[(i - 1) * self.cols + j - 1] = v;
    }

    /// The permutation matrix of v: column k carries a 1 in row v(k).
    pub fn permutation(v: &Permutation) -> Self {
        let n = v.n();
        let mut m = Mat::zeros(n, n);
        for k in 1..=n {
            m.set(v.image(k), k, BigRational::one());
        }
        m
    }

    /// The root-subgroup element ε_β(x): identity plus x at position β = (a, b).
    pub fn eps(beta: (usize, usize), x: &BigRational, n: usize) -> Self {
        let mut m = Mat::identity(n);
        m.set(beta.0, beta.1, x.clone());
        m
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::RankMismatch(self.cols, other.rows));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = BigRational::zero();
                for k in 1..=self.cols {
                    let a = self.at(i, k);
                    if !a.is_zero() {
                        acc += a * other.at(k, j);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// The submatrix with the given 1-based rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (ri, &i) in rows.iter().enumerate() {
            for (ci, &j) in cols.iter().enumerate() {
                out.set(ri + 1, ci + 1, self.at(i, j).clone());
            }
        }
        out
    }

    /// Determinant by rational Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for p in 1..=n {
            let Some(piv) = (p..=n).find(|&i| !a.at(i, p).is_zero()) else {
                return Ok(BigRational::zero());
            };
            if piv != p {
                for j in 1..=n {
                    let tmp = a.at(p, j).clone();
                    a.set(p, j, a.at(piv, j).clone());
                    a.set(piv, j, tmp);
                }
                det = -det;
            }
            let d = a.at(p, p).clone();
            det *= &d;
            for i in p + 1..=n {
                if a.at(i, p).is_zero() {
                    continue;
                }
                let f = a.at(i, p) / &d;
                for j in p..=n {
                    let v = a.at(i, j) - &f * a.at(p, j);
                    a.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// The minor on row set κ and column set `cols` (the Plücker coordinate
    /// p_κ of the span of those columns).
    pub fn minor(&self, kappa: &Column, cols: &Column) -> Result<BigRational> {
        if kappa.size() != cols.size() {
            return Err(Error::ShapeMismatch(format!(
                "minor with {} rows and {} columns",
                kappa.size(),
                cols.size()
            )));
        }
        self.submatrix(kappa.entries(), cols.entries()).det()
    }

    /// Rank of the submatrix on rows 1..=i and columns 1..=j (rational Gauss).
    pub fn corner_rank(&self, i: usize, j: usize) -> usize {
        let rows: Vec<usize> = (1..=i).collect();
        let cols: Vec<usize> = (1..=j).collect();
        rank_rational(&self.submatrix(&rows, &cols))
    }
}

/// Rank over the rationals by straightforward Gaussian elimination.
pub fn rank_rational(m: &Mat) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    let mut row = 1;
    for col in 1..=cols {
        if row > rows {
            break;
        }
        let Some(piv) = (row..=rows).find(|&i| !a.at(i, col).is_zero()) else {
            continue;
        };
        if piv != row {
            for j in col..=cols {
                let tmp = a.at(row, j).clone();
                a.set(row, j, a.at(piv, j).clone());
                a.set(piv, j, tmp);
            }
        }
        let d = a.at(row, col).clone();
        for i in row + 1..=rows {
            if a.at(i, col).is_zero() {
                continue;
            }
            let f = a.at(i, col) / &d;
            for j in col..=cols {
                let v = a.at(i, j) - &f * a.at(row, j);
                a.set(i, j, v);
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

/// Rank by fraction-free Bareiss elimination, clearing each row's denominators
/// first so all intermediate arithmetic stays in the integers.
pub fn bareiss_rank(m: &Mat) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    if rows == 0 || cols == 0 {
        return 0;
    }
    // clear denominators row by row (row scaling preserves rank)
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for i in 1..=rows {
        let mut lcm = BigInt::one();
        for j in 1..=cols {
            let d = m.at(i, j).denom();
            lcm = num::integer::lcm(lcm, d.clone());
        }
        a.push(
            (1..=cols)
                .map(|j| {
                    let e = m.at(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect(),
        );
    }
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        // pivot: smallest nonzero magnitude keeps growth down
        let Some(piv) = (row..rows)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| a[i][col].abs())
        else {
            continue;
        };
        a.swap(row, piv);
        for i in row + 1..rows {
            for j in col + 1..cols {
                let v = (&a[row][col] * &a[i][j] - &a[i][col] * &a[row][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn permutation_matrix_convention() {
        let w: Permutation = "[231]".parse().unwrap();
        let m = Mat::permutation(&w);
        // column 1 has its 1 in row w(1) = 2
        assert_eq!(*m.at(2, 1), q(1));
        assert_eq!(*m.at(3, 2), q(1));
        assert_eq!(*m.at(1, 3), q(1));
        assert_eq!(m.det().unwrap(), q(1));
    }

    #[test]
    fn det_examples() {
        assert_eq!(mat(&[&[1, 2], &[3, 4]]).det().unwrap(), q(-2));
        assert_eq!(Mat::identity(5).det().unwrap(), q(1));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).det().unwrap(), q(0));
    }

    #[test]
    fn minor_examples() {
        let id = Mat::identity(4);
        for i in 1..4 {
            let pi = Column::fundamental(i, 4);
            assert_eq!(id.minor(&pi, &pi).unwrap(), q(1));
        }
        let m = mat(&[&[1, 0, 0], &[2, 1, 0], &[3, 4, 1]]);
        let k = Column::parse("2,3", 3).unwrap();
        let c = Column::fundamental(2, 3);
        assert_eq!(m.minor(&k, &c).unwrap(), q(2 * 4 - 3));
    }

    #[test]
    fn ranks_agree() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(bareiss_rank(&m), 2);
        assert_eq!(bareiss_rank(&Mat::identity(4)), 4);
        assert_eq!(bareiss_rank(&Mat::zeros(3, 5)), 0);
    }

    #[test]
    fn bareiss_handles_denominators() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let m = Mat::from_rows(vec![
            vec![half.clone(), third.clone()],
            vec![third, half],
        ])
        .unwrap();
        assert_eq!(bareiss_rank(&m), 2);
    }
}
