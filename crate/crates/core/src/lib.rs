//! Algebraic small object argument over finite simplicial sets, derived
//! bar and cobar resolutions of deformable adjunctions, the free adjunction
//! 2-category, and algebraic derived completions.

pub mod adjres;
pub mod completion;
pub mod freeadj;
pub mod scomplex;
pub mod soa;
