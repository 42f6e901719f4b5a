//! Exact arithmetic: polynomials and rational functions in `q, t`,
//! truncated Laurent series, and exact linear solving.

pub mod eval;
pub mod gcd;
pub mod linsolve;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod series;

pub use eval::{eval_equal, EvalProof};
pub use linsolve::{int_rank, invert_rational, solve_integer, solve_linear, solve_linear_multi, solve_rational};
pub use parse::{parse_expr, ParseTarget};
pub use poly::{pochhammer, qbinom, qint, rat, tint, Mono, QTPoly};
pub use rat::QTRat;
pub use series::{AuxSeries, Coeff};
