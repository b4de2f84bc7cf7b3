//! Exact isospectral graph reductions over the field of rational functions,
//! and their use for detecting and constructing cospectral vertex pairs.

pub mod cospec;
pub mod graphs;
pub mod latency;
pub mod ratfun;
pub mod reduce;
pub mod unpack;
pub mod walks;

pub use cospec::{are_cospectral, are_strongly_cospectral, is_latently_automorphic, CospecError, CospectralReport};
pub use graphs::{charpoly, parse_graph, GraphError, VertexSet, WGraph, WMatrix};
pub use latency::{has_swap_automorphism, measure_of_latency, LatencyError, LatencyReport};
pub use ratfun::{Polynomial, RatFunError, Rational, RationalFunction};
pub use reduce::{branch_reduce, schur_reduce, smash, ReduceError, ReducedMatrix};
pub use unpack::{unpack_2x2, verify_roundtrip, UnpackError};
