pub mod error;
pub mod char_orbits;
pub mod cli;
pub mod ffield;
pub mod field;
pub mod linalg;
pub mod modcheck;
pub mod numtheory;
pub mod poly;
pub mod rep;
pub mod rep_builder;
pub mod tame_galois;
pub mod twisted_group;

pub use error::{Error, Result};
pub use ffield::{make_field, ExtField, FFElem};
pub use field::{Field, PrimeField};
pub use linalg::Matrix;
pub use rep::MatrixRep;

pub type PrimeRep = MatrixRep<PrimeField>;
pub type ExtRep = MatrixRep<ExtField>;
