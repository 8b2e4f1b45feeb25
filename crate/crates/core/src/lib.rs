pub mod cli;
pub mod code;
pub mod decode;
pub mod folding;
pub mod gf;
pub mod hermitian;
pub mod matrix;
pub mod quantum;
pub mod verify;

pub type Rational = num_rational::Ratio<i64>;
