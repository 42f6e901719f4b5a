//! Frobenius characteristics of the labelled polyomino modules: brute-force
//! sums over shapes next to the closed forms they are compared with.

mod brute;
mod closed;
mod operators;

pub use brute::{
    area_series, frob_l2_brute, frob_l2star_brute, frob_l_brute, frob_l_q, frob_labelled_paths_brute, ribbon_frob,
    s_rho_coefficient,
};
pub use closed::{
    frob_l, frob_l2, frob_l2star, frob_l_special, frob_labelled_paths, is_h_positive, ribbon_closed, s_rho_closed,
    trivariate_frob,
};
pub use operators::{
    bounce_pairing, bounce_pairing_generic, delta_bar_lhs, delta_bar_rhs, diff_schur_pos, michele_rhs, prop1_lhs,
    prop1_rhs, prop2_lhs, prop2_rhs, qangela_lhs, qangela_rhs, s_rho_graded_rhs,
};
