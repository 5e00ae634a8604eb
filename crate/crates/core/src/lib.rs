//! Finite, checkable models of ring operads indexed by square-free polynomials.

pub mod map;
pub mod poly;
pub mod category;
pub mod operad;
pub mod pair;
pub mod term;
pub mod text;
pub mod wreath;
