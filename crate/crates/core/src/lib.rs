//! Equivariant Schubert calculus on flag varieties of finite root systems.
//!
//! Root systems and Weyl groups, Billey's restriction formula, GKM checks,
//! excited Young diagrams for Grassmannians, fixed points of Springer,
//! Hessenberg and Peterson varieties, and the pinball search for
//! roll-down bases. Everything is exact and `no_std` with `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod billey;
pub mod error;
pub mod grassmann;
pub mod pinball;
pub mod poly;
pub mod rootsys;
pub mod subvariety;
pub mod weyl;

pub use billey::{GKMClass, GkmReport, KumarResult};
pub use error::{Error, Result};
pub use grassmann::{MarkedDiagram, Partition};
pub use pinball::{Mode, RolldownAssignment};
pub use poly::{Polynomial, RootPolynomial, TPolynomial, TVarsPolynomial};
pub use rootsys::{CartanSpec, Family, RootSystem, RootVector};
pub use subvariety::{FixedPointSet, HessenbergFunction, JordanType};
pub use weyl::{BruhatEdge, BruhatGraph, WeylElement, WeylGroup, Word};
