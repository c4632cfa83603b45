//! Exact arithmetic for the combinatorics of commuting tuples in symmetric
//! groups and the power-series identities of p-typical orbifold genera.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: coefficient rings, ψ-polynomials and truncated power series
//!   in one variable `t`, with exact `exp`, `log` and inversion.
//! - [`lattice`]: finite transitive `Z^h`-sets (and `Z_p^h`-sets) stored as
//!   sublattices of `Z^h` in Hermite normal form.
//! - [`classes`]: conjugacy classes of commuting `h`-tuples in `Σ_l` as
//!   orbit-type multisets, with centralizer orders, class sizes and a
//!   brute-force permutation oracle.
//! - [`classfn`]: class functions, augmentation, the inner product, and
//!   induction/restriction along Young subgroups `Σ_j × Σ_k ⊆ Σ_{j+k}`.
//! - [`genus`]: models of internal power operations, symmetric powers,
//!   Hecke operators, λ-operations and the DMVV identity checker.
//! - [`json`]: the JSON encodings used by the command-line tool.

pub mod algebra;
pub mod classes;
pub mod classfn;
mod error;
pub mod genus;
pub mod json;
pub mod lattice;

pub use error::{Error, Result};

pub use algebra::{Coefficient, Monomial, PsiPolynomial, PsiSymbol, TruncatedSeries};
pub use classes::{
    brute_force_classes, centralizer_order, class_size, enumerate_classes, orbit_type_of_tuple,
    CommutingTuple, OrbitTypeMultiset, Permutation,
};
pub use classfn::{ClassCatalog, ClassFunction, PairFunction};
pub use genus::{GenusModel, GenusSeriesReport};
pub use lattice::{aut_order, canonicalize, enumerate_orbits, OrderMode, TransitiveOrbit};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
