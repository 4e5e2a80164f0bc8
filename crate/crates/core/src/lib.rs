//! Exact-arithmetic toolkit for Borel-fixed ideal combinatorics, extremal
//! ideals, local persistence tests over a Grassmannian chart, and the
//! defining equations of an open subset of a Hilbert scheme.
//!
//! Everything is computed over the rationals with exact arithmetic. The
//! crate is organised bottom-up:
//!
//! - [`rat`], [`matrix`], [`poly`], [`detpoly`], [`groebner`]: the exact
//!   kernel (rational linear algebra, sparse polynomials, a deterministic
//!   Buchberger engine, symbolic minors).
//! - [`monomial`], [`order`]: monomials, term orders, and the Borel poset.
//! - [`ideal`]: Borel-fixed and stable monomial ideals (closure, generators,
//!   the blockwise degree decomposition, syzygies, Hilbert data, lex
//!   segments, the classical growth check).
//! - [`extremal`]: extremality certificates and weight search.
//! - [`persistence`]: the local persistence test and the flat degeneration.
//! - [`chart`]: the symbolic chart matrix, its critical minors, and the
//!   trimmed chart equations.
//! - [`io`]: the JSON file formats used by the command-line front end.
//!
//! All values are immutable after construction; operations are pure
//! functions, and the handful of parallel loops (minor enumeration, sampling
//! suites) merge their results in a fixed order so outputs are bit-identical
//! to sequential runs.

pub mod chart;
pub mod detpoly;
pub mod error;
pub mod extremal;
pub mod fm;
pub mod groebner;
pub mod ideal;
pub mod io;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod persistence;
pub mod poly;
pub mod rat;
pub mod ring;
pub mod unipoly;

pub use chart::{
    build_chart_matrix, chart_dimension, chart_equations_report, critical_minor_size,
    grassmannian_sizes, hilbert_chart_equations, minors_ideal, minors_with_census, ChartMatrix,
    ChartReport, GrassmannianEmbedding, GrassmannianReport, MinorCensus, SymbolicChart,
};
pub use detpoly::{det_evaluated, det_poly};
pub use error::{Error, Result};
pub use extremal::{
    check_extremal, check_extremal_full, find_extremal_weight, is_extremal_wrt,
    ExtremalConstraint, ExtremalityCertificate, ExtremalityCheck, ExtremalityRefutation,
    WeightSearch,
};
pub use groebner::{buchberger, s_polynomial, trim_generators, GroebnerBasis};
pub use ideal::{
    borel_maximal_standard, borel_minimal_members, gotzmann_growth_check, lex_segment,
    BorelViolation, DegreeBasisMethod, MonomialIdeal, SyzygyRelation,
};
pub use matrix::{QMatrix, RrefResult};
pub use monomial::{borel_leq, count_monomials, monomials_of_degree, Monomial};
pub use order::{BaseOrder, TermOrder, WeightVector};
pub use persistence::{
    chart_generators, dim_in_degree, flat_family_fiber, initial_ideal, local_persistence_check,
    plane_points_chart, random_chart_point, ChartPoint, PersistenceVerdict,
};
pub use poly::MultiPoly;
pub use rat::Rat;
pub use ring::PolyRing;
pub use unipoly::UniPoly;
