//! Indexed bipartite graphs, the partial order on `B_n`, and the triangular
//! categories B and Delta with their incidence algebras.
//!
//! Incidence functions and Möbius tables are generic over a [`Scalar`]; the
//! aliases below fix the exact types used by the command-line tool.

pub mod bigraph;
pub mod category;
pub mod error;
pub mod incidence;
pub mod order;
pub mod scalar;

pub use bigraph::{bn_cardinality, enumerate_bn, enumerate_hom_b, hom_count_b, BipartiteGraph, Edge};
pub use category::{CategoryB, CategoryDelta, DeltaMorphism, TriangularCategory};
pub use error::{Error, Result};
pub use incidence::{IncidenceAlgebra, IncidenceFunction, PosetMoebius};
pub use order::{build_poset, leq, HasseDiagram, Poset};
pub use scalar::Scalar;

/// Exact rationals of unbounded size.
pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

pub type RationalIncidenceB = IncidenceFunction<BipartiteGraph, Rational>;
pub type RationalIncidenceDelta = IncidenceFunction<DeltaMorphism, Rational>;
pub type IntegerPosetMoebius = PosetMoebius<Integer>;
