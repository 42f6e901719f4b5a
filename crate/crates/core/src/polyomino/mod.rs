mod counts;
mod cyclic;
mod motzkin;
mod path;
mod shape;
#[cfg(test)]
mod tests;

pub use counts::{binom, doubly, doubly_star, labelled, labelled_series_coeff, polyominoes};
pub use cyclic::{cyclic_map, CyclicClass};
pub use motzkin::{
    calibrate_dinv, dinv, from_motzkin, to_aword, to_motzkin, ALetter, AWord, Calibration, DinvDirection, Motzkin,
    MotzkinWord, DINV_DIRECTION,
};
pub use path::{labellings, LabelledPath, LatticePath, Step};
pub use shape::{DoublyLabelledPolyomino, LabelledPolyomino, Polyomino};
