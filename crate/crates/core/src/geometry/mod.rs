//! Exact-rational geometry: the affine chart, fibre sampling, hypersurface
//! chains, and rank certification.

pub mod chain;
pub mod chart;
pub mod gamma;
pub mod matrix;
pub mod rank;

pub use chain::{hypersurface_chain, verify_et_singleton, ChainStep, HypersurfaceChain};
pub use chart::{
    build_chart, evaluate_monomial, flag_position, plucker_minor, sample_point, ChartData,
    GalleryPoint,
};
pub use gamma::{projection_image, sample_gamma_point, sample_richardson};
pub use matrix::{bareiss_rank, rank_rational, Mat};
pub use rank::{rank_certificate, EvaluationMatrix, Report, ReportCounts, ReportRanks};
