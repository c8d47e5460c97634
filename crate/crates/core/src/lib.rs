//! Exact linear algebra, algebras, modules, homology and Foxby-class checks over `F_p`.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod field;
pub mod foxby;
pub mod homology;
pub mod linalg;
pub mod matrix;
pub mod modrep;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use field::PrimeField;
pub use matrix::Matrix;
