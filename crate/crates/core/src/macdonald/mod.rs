//! Macdonald polynomials `H_mu(z; q, t)`, the eigenoperators `Delta_f` and
//! `nabla`, and the compositional refinement of `e_n`.

pub mod cache;
pub mod ecalc;
pub mod ops;
pub mod pairing;

pub use cache::{
    bmu, generic_cap, mac_degree, macdonald_h, macdonald_h_t0, qt_kostka, set_generic_cap, set_specialized_cap,
    specialized_cap, MacDegree,
};
pub use ecalc::{c_op, e_gamma, e_mu_via_h, e_nr, e_nr_all, eigen_h_k};
pub use ops::{delta, h_expansion, h_t0_expansion, nabla, nabla_mode, Mode, OpSpec};
pub use pairing::nabla_e_pairing;

#[cfg(test)]
mod tests;
