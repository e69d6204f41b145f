pub mod algebra;
pub mod amodule;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod field;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod reduction;
