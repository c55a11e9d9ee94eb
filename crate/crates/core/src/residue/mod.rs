//! Exact Laurent polynomials in a formal parameter `t`, the residue-limit
//! check on charts of the family, and torus periods.

mod family;
pub mod laurent;
mod period;

pub use family::{
    block_laurent, family_polynomial, residue_limit_check, verify_max_monodromy_criterion, Condition,
    CriterionReport, ResidueCheck,
};
pub use laurent::{LaurentJson, LaurentPolynomial, TPoly, TermJson};
pub use period::{hypersurface_laurent, period_series, PeriodSeries, NORMALIZATION};
