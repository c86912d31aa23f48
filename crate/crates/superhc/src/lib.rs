//! Exact symbolic computation for supersymmetric pairs of the Lie
//! superalgebras gl(m|n) and osp(m|2n): PBW normal ordering in U(g),
//! Harish-Chandra projections of ghost distributions in U(g)/U(g)k,
//! interlacing automorphisms, and a verification suite for the rank-one
//! closed forms, reduction/vanishing tools, and invariance conditions.
//!
//! All arithmetic is over the Gaussian rationals Q(i); nothing in this
//! crate touches floating point.

pub mod catalog;
pub mod expr;
pub mod hc;
pub mod liealg;
pub mod linalg;
pub mod matrix;
pub mod pairs;
pub mod poly;
pub mod scalar;
pub mod uea;
pub mod verify;

pub use hc::{GhostElement, PairContext};
pub use liealg::{build_gl, build_osp, AlgFamily, Root, RootDatum, Superalgebra};
pub use matrix::{Parity, SuperMatrix};
pub use pairs::{catalog, realize_pair, IwasawaDecomposition, PairDescriptor, SymmetricPair};
pub use poly::Polynomial;
pub use scalar::{Gq, Rat};
pub use uea::{Ordering as PbwOrdering, PBWElement, Word};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),
    #[error("element not in the algebra: {0}")]
    NotInAlgebra(String),
    #[error("pair is not realizable: {0}")]
    NotRealizable(String),
    #[error("involution invalid: {0}")]
    InvolutionInvalid(String),
    #[error("pair has no Iwasawa decomposition: {0}")]
    NoIwasawa(String),
    #[error("pair is not special: {0}")]
    NotSpecial(String),
    #[error("pair is not interlaced: {0}")]
    NotInterlaced(String),
    #[error("mixed PBW orderings")]
    OrderingMismatch,
    #[error("singular Gram matrix")]
    SingularGram,
    #[error("invariance failure: {0}")]
    InvarianceFailure(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("unknown pair id `{0}`")]
    UnknownPair(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("catalog file invalid: {0}")]
    CatalogInvalid(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Map-reduce over an indexed collection, in parallel when the `parallel`
/// feature is enabled. The reduction must be associative-commutative.
pub fn par_map_reduce<T, I, F, R>(items: Vec<I>, map: F, identity: impl Fn() -> T + Sync, reduce: R) -> T
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items
            .into_par_iter()
            .map(map)
            .reduce(&identity, &reduce)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(map).fold(identity(), reduce)
    }
}

/// Like `par_map_reduce` but always sequential; the benchmark suite compares
/// this path against the parallel one.
pub fn seq_map_reduce<T, I, F, R>(items: Vec<I>, map: F, identity: impl Fn() -> T, reduce: R) -> T
where
    F: Fn(I) -> T,
    R: Fn(T, T) -> T,
{
    items.into_iter().map(map).fold(identity(), reduce)
}
