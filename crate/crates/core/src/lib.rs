pub mod arith;
pub mod cli;
pub mod criteria;
pub mod cyclotomic;
pub mod error;
pub mod harness;
pub mod intpoly;
pub mod modpoly;
pub mod resdisc;

pub use error::{Error, Result};
pub use intpoly::IntPoly;
pub use modpoly::ModPoly;
