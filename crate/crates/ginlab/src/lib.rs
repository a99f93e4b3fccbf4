//! Exact computations with homogeneous ideals over the rationals: Gröbner
//! bases, initial and generic initial ideals, segment-ideal diagnostics,
//! Betti tables, and Castelnuovo–Mumford regularity.
//!
//! Everything is exact — coefficients are arbitrary-precision rationals and
//! all linear algebra is fraction-free — and deterministic: randomized
//! coordinate changes are driven by an explicit seed, so every result is
//! reproducible.
//!
//! The high-level entry points:
//!
//! * [`buchberger`] / [`reduce_gb`] / [`initial_ideal`]: reduced Gröbner
//!   bases and initial ideals under [`OrderSpec`] orders (graded lex,
//!   graded reverse-lex, and graded weight orders);
//! * [`gin`]: generic initial ideals by random linear coordinate change,
//!   stabilized over consecutive agreeing trials and certified Borel-fixed;
//! * [`MonomialIdeal`]: Borel-fixedness, segment-ideal tests, Hilbert
//!   function counts, and [`betti_table`] / [`regularity_monomial`] via
//!   Koszul homology;
//! * [`regularity`]: Castelnuovo–Mumford regularity of a homogeneous ideal
//!   through its reverse-lexicographic generic initial ideal;
//! * [`distinguishing_ideal`] and [`regularity_gap_ideal`]: explicit ideals
//!   separating monomial orders — the first makes any two disagreeing
//!   orders produce different generic initial ideals, the second exhibits
//!   the regularity overestimate of every non-reverse-lexicographic order.

pub mod betti;
pub mod constructions;
pub mod error;
pub mod gin;
pub mod groebner;
pub mod linalg;
pub mod monideal;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod transform;

pub use betti::{betti_table, regularity_monomial, BettiTable};
pub use constructions::{
    distinguishing_ideal, first_disagreement, is_rlex_up_to, regularity_gap_ideal,
    rlex_gap_witness, Disagreement, GapWitness, DEFAULT_SCAN_DEGREE,
};
pub use error::{Error, Result};
pub use gin::{gin, random_transform, regularity, segment_shortcut, GinConfig, GinResult};
pub use groebner::{
    buchberger, buchberger_with, dim_in_degree, initial_ideal, membership, reduce, reduce_gb,
    s_poly, BuchbergerOptions, GroebnerBasis, Ideal,
};
pub use monideal::{borel_leq, is_segment, MonomialIdeal};
pub use monomial::{count_monomials_of_degree, monomials_of_degree, Monomial, MAX_TOTAL_DEGREE};
pub use order::OrderSpec;
pub use parse::{
    parse_ideal, parse_monomial, parse_monomials, parse_order, parse_polynomial, parse_ring,
};
pub use poly::{Polynomial, Rational, Term};
pub use ring::Ring;
pub use transform::TransformMatrix;
