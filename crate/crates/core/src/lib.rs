//! Exact zero location for Hilbert and Ehrhart polynomials.
//!
//! Everything in this crate is exact: polynomials carry arbitrary-precision
//! rational coefficients, root counts come from Sturm chains and Cauchy
//! indices, and every strip/line verdict is a statement proved by integer
//! sign computations. Floating point appears only in the display-level
//! approximate root finder, which no verdict ever consults.
//!
//! Modules:
//!
//! - [`ratpoly`] — rational polynomial arithmetic and real-root counting
//! - [`rootloc`] — exact localization of complex roots relative to vertical
//!   lines, half-plane stability, strip verdicts
//! - [`hilbert`] — Hilbert polynomial constructors (curves, surfaces,
//!   threefolds, projective spaces, Grassmannians) and Chern-number scans
//! - [`embedded`] — restricted Hilbert polynomials of anticanonical
//!   sections and the randomized on-line property suite
//! - [`ehrhart`] — lattice polytopes, exact Ehrhart polynomials and the
//!   fan-polytope zero conjectures

pub mod ehrhart;
pub mod embedded;
pub mod hilbert;
pub mod ratpoly;
pub mod rootloc;

pub use ratpoly::{Interval, Rational, RationalPolynomial};
pub use rootloc::{RootReport, StripVerdict};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeroPolynomials,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("invalid interval: lower bound exceeds upper bound")]
    InvalidInterval,
    #[error("root finder did not converge within {cap} iterations")]
    NoConvergence { cap: u32 },
    #[error("tolerance must be positive")]
    InvalidTolerance,
    #[error("strip classification requires dimension >= 1")]
    InvalidDimension,
    #[error("genus-one curves have the zero Hilbert polynomial; use an embedded section instead")]
    GenusOneCurve,
    #[error("surface constructor requires c1^2 != 0")]
    ZeroC1Squared,
    #[error("threefold constructor requires c1^3 != 0")]
    ZeroC1Cubed,
    #[error("projective space dimension must be >= 1")]
    InvalidProjectiveDimension,
    #[error("Grassmannian G(k,N) requires N >= 2k >= 2, got k={k}, n={n}")]
    InvalidGrassmannian { k: u32, n: u32 },
    #[error("ambient polynomial must have degree >= 1")]
    AmbientDegreeTooLow,
    #[error("section multiple s must be >= 1")]
    SectionMultipleTooSmall,
    #[error("property suite parameters must be positive")]
    InvalidSuiteParameters,
    #[error("scan range is empty")]
    EmptyScanRange,
    #[error("polytope vertices must have dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope must have at least dim+1 vertices")]
    TooFewVertices,
    #[error("duplicate vertex in polytope input")]
    DuplicateVertex,
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("listed point {0:?} is not a vertex of the convex hull")]
    NotAVertex(Vec<i64>),
    #[error("facet enumeration would visit {0} vertex subsets, beyond the 10^7 cap")]
    FacetEnumerationTooLarge(u128),
    #[error("facet data exceeds the supported integer range")]
    FacetOverflow,
    #[error("interpolated Ehrhart polynomial disagrees with a fresh count at t={t}: internal counting bug")]
    EhrhartVerification { t: u64 },
    #[error("unknown catalog {0:?}; available: smooth-dim1, smooth-dim2, smooth-dim3")]
    UnknownCatalog(String),
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid polytope data: {0}")]
    PolytopeFormat(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
