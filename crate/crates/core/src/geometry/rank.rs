//! Evaluation matrices of monomials at sampled points, and exact rank
//! certificates for linear independence.

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::chart::{evaluate_monomial, ChartData, GalleryPoint};
use crate::geometry::matrix::{bareiss_rank, Mat};
use crate::tableaux::Tableau;

/// Rows are sample points, columns are tableaux, entries are p_T(γ).
#[derive(Clone, Debug)]
pub struct EvaluationMatrix {
    matrix: Mat,
    headers: Vec<String>,
}

impl EvaluationMatrix {
    pub fn build(
        chart: &ChartData,
        tableaux: &[Tableau],
        points: &[GalleryPoint],
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(points.len());
        for p in points {
            let mut row = Vec::with_capacity(tableaux.len());
            for t in tableaux {
                row.push(evaluate_monomial(chart, t, p)?);
            }
            rows.push(row);
        }
        Ok(EvaluationMatrix {
            matrix: Mat::from_rows(rows)?,
            headers: tableaux.iter().map(|t| t.to_string()).collect(),
        })
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(&self.matrix)
    }

    /// CSV with one header row of tableau serializations and "num/den" cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(";"));
        out.push('\n');
        for i in 1..=self.matrix.n_rows() {
            let cells: Vec<String> = (1..=self.matrix.n_cols())
                .map(|j| format_rational(self.matrix.at(i, j)))
                .collect();
            out.push_str(&cells.join(";"));
            out.push('\n');
        }
        out
    }
}

pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Exact rank of the evaluation matrix; rank = |tableaux| certifies that the
/// monomials are linearly independent on the sampled locus.
pub fn rank_certificate(
    chart: &ChartData,
    tableaux: &[Tableau],
    points: &[GalleryPoint],
) -> Result<usize> {
    Ok(EvaluationMatrix::build(chart, tableaux, points)?.rank())
}

/// Verification report for one instance, as serialized by the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub instance: String,
    pub counts: ReportCounts,
    pub rank: ReportRanks,
    pub verdict: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportCounts {
    pub tableaux: usize,
    pub standard: usize,
    pub w0_standard: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportRanks {
    /// Rank of the standard monomials at generic chart samples.
    pub standard_on_chart: usize,
    /// Rank of the w0-standard monomials at fibre samples.
    pub w0_on_fibre: usize,
    /// Rank of all standard monomials restricted to fibre samples.
    pub standard_on_fibre: usize,
}
