//! The classical side: truncated Lauricella series over `Q`, their numeric
//! evaluation inside the unit polydisk, and their reductions modulo `p`.

mod modp;
mod numeric;
mod series;

pub use modp::{
    hasse_binomial_form, hasse_invariant, truncated_fd2_fp, truncated_fdn_fp, zeta_pair, zeta_pair_with,
};
pub use numeric::{classical_f21_numeric, classical_fdn_numeric, NumericValue, MAX_DEGREE};
pub use series::{
    classical_fdn_truncated, diagonal_coefficient, f21_coefficient, pochhammer, rational, SeriesParams,
};
