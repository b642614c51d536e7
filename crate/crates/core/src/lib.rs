//! Exact computations with the affine Yangian of type `A` acting on the
//! level-one Fock space: Jack(gl_N) functions, closed-form matrix elements,
//! a Gelfand-Tsetlin cross-check, fixed-point data and relation checkers.

pub mod ratfield;
pub mod partitions;
pub mod cellforms;
pub mod symfun;
pub mod fockrep;
pub mod gzmodel;
pub mod quiverloc;
pub mod relcheck;
pub mod cli;
