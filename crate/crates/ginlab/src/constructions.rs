//! Constructions that separate monomial orders from one another.
//!
//! Two orders that agree on which monomials are "large" can still be told
//! apart by an ideal whose initial ideal differs between them.  This module
//! builds such ideals explicitly:
//!
//! * [`distinguishing_ideal`] takes any two graded orders that disagree
//!   somewhere and produces an ideal whose generic initial ideals under the
//!   two orders differ — in fact each generic initial ideal is a segment
//!   ideal for its own order, so the construction also shows that the
//!   segment property pins down the order.
//!
//! * [`regularity_gap_ideal`] produces, for the reverse-lexicographic
//!   comparison `x1^d * xk > x_{k-1}^{d+1}` failing or holding, an ideal
//!   whose regularity is computed exactly by the reverse-lexicographic
//!   generic initial ideal but overestimated by any order that sorts
//!   `x1^d * xk` above `x_{k-1}^{d+1}`.  [`rlex_gap_witness`] locates the
//!   smallest such comparison for a given order, certifying (up to a degree
//!   bound) whether the order behaves reverse-lexicographically.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::OrderSpec;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Default degree bound for the disagreement and gap-witness scans.
pub const DEFAULT_SCAN_DEGREE: u32 = 6;

/// The first position at which two orders sort the monomials of some degree
/// differently.
///
/// `degree` is the smallest degree where the sorted listings differ and
/// `position` is the 1-based index of the first differing entry; `first` and
/// `second` are the monomials each order puts at that position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub degree: u32,
    pub position: usize,
    pub first: Monomial,
    pub second: Monomial,
}

/// A pair `(k, d)` witnessing `x1^d * xk > x_{k-1}^{d+1}` under some order.
///
/// Under the reverse-lexicographic order the comparison fails for every
/// `k >= 3` and `d >= 1`, so the existence of a witness certifies that the
/// order is not reverse-lexicographic; `k` is the 1-based variable index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub k: usize,
    pub d: u32,
}

/// Scans degrees `1..=dmax` in ascending order for the first position at
/// which `first` and `second` sort the monomials of that degree differently.
///
/// Returns `None` when the orders agree on every monomial of every degree up
/// to the bound.  Positions are compared left to right within each degree,
/// so the result is the lexicographically earliest disagreement.
///
/// # Panics
///
/// Panics if either order is invalid for `nvars` variables or `dmax` is 0.
pub fn first_disagreement(
    first: &OrderSpec,
    second: &OrderSpec,
    nvars: usize,
    dmax: u32,
) -> Option<Disagreement> {
    first
        .validate(nvars)
        .expect("first order must be valid for the ring");
    second
        .validate(nvars)
        .expect("second order must be valid for the ring");
    assert!(dmax >= 1, "scan bound must be at least 1");
    for degree in 1..=dmax {
        let by_first = first.sorted_monomials(nvars, degree);
        let by_second = second.sorted_monomials(nvars, degree);
        for (index, (a, b)) in by_first.iter().zip(by_second.iter()).enumerate() {
            if a != b {
                return Some(Disagreement {
                    degree,
                    position: index + 1,
                    first: a.clone(),
                    second: b.clone(),
                });
            }
        }
    }
    None
}

/// Builds an ideal whose generic initial ideals under `first` and `second`
/// differ, from the earliest disagreement between the two orders.
///
/// If the orders first disagree in degree `d` at position `k` — `first`
/// sorting `M` there and `second` sorting `M'` — the ideal is generated by
/// the common top `k - 1` monomials of degree `d` together with the binomial
/// `M + M'`.  In generic coordinates the degree-`d` component has dimension
/// `k`, and each order picks its own `k`-th monomial as the extra leading
/// term, so the two generic initial ideals already differ in degree `d` and
/// each one is a segment ideal for its own order.
///
/// Returns [`Error::NoDisagreement`] when the orders agree on all monomials
/// of degree at most `dmax`.
pub fn distinguishing_ideal(
    first: &OrderSpec,
    second: &OrderSpec,
    ring: &Ring,
    dmax: u32,
) -> Result<Ideal> {
    let nvars = ring.nvars();
    let found = first_disagreement(first, second, nvars, dmax)
        .ok_or(Error::NoDisagreement { dmax })?;
    // Both orders rank the pure power of the largest variable first, so the
    // earliest disagreement is never at position 1 and the common prefix is
    // nonempty.
    debug_assert!(found.position >= 2);
    let prefix = first.sorted_monomials(nvars, found.degree);
    let mut generators: Vec<Polynomial> = prefix[..found.position - 1]
        .iter()
        .cloned()
        .map(Polynomial::from_monomial)
        .collect();
    let binomial = Polynomial::from_monomial(found.first)
        .add(&Polynomial::from_monomial(found.second));
    generators.push(binomial);
    Ideal::new(ring.clone(), generators)
}

/// Finds the smallest `(d, k)` — degree first, then variable index — with
/// `k >= 3` such that `order` ranks `x1^d * xk` above `x_{k-1}^{d+1}`.
///
/// The reverse-lexicographic order ranks every such pair the other way, so a
/// witness certifies that `order` deviates from it; `None` means the order
/// is reverse-lexicographic on all comparisons with `d <= dmax`.  With fewer
/// than three variables there is nothing to scan and the result is `None`.
///
/// # Panics
///
/// Panics if `order` is invalid for `nvars` variables or `dmax` is 0.
pub fn rlex_gap_witness(order: &OrderSpec, nvars: usize, dmax: u32) -> Option<GapWitness> {
    order
        .validate(nvars)
        .expect("order must be valid for the ring");
    assert!(dmax >= 1, "scan bound must be at least 1");
    for d in 1..=dmax {
        for k in 3..=nvars {
            let lower_corner = Monomial::from_pairs(nvars, &[(0, d), (k - 1, 1)]);
            let pure_power = Monomial::from_pairs(nvars, &[(k - 2, d + 1)]);
            if order.cmp(&lower_corner, &pure_power) == std::cmp::Ordering::Greater {
                return Some(GapWitness { k, d });
            }
        }
    }
    None
}

/// Whether `order` agrees with the reverse-lexicographic order on every
/// comparison `x1^d * xk` vs `x_{k-1}^{d+1}` with `d <= dmax`.
///
/// This is the bounded certificate behind the regularity-gap construction:
/// an order for which this holds computes the regularity of every
/// [`regularity_gap_ideal`] with `d <= dmax` exactly, while any other order
/// overestimates it on the ideal built from its witness.
pub fn is_rlex_up_to(order: &OrderSpec, nvars: usize, dmax: u32) -> bool {
    rlex_gap_witness(order, nvars, dmax).is_none()
}

/// Builds the ideal that exhibits a regularity gap at the comparison
/// `x1^d * xk` vs `x_{k-1}^{d+1}`.
///
/// The generators are all monomials of degree `d + 1` in the first `k - 1`
/// variables except the pure power `x_{k-1}^{d+1}`, together with the
/// binomial `x_{k-1}^{d+1} + x1^d * xk`.  Its regularity is `d + 1`, and the
/// reverse-lexicographic generic initial ideal reports exactly that; under
/// any order ranking `x1^d * xk` above `x_{k-1}^{d+1}` the binomial's
/// leading term drags `x_{k-1}^{d+2}` into the picture as a new minimal
/// generator of the generic initial ideal, pushing its regularity to at
/// least `d + 2`.
///
/// Requires `3 <= k <= nvars` and `d >= 1`; other values return
/// [`Error::IndexOutOfRange`].
pub fn regularity_gap_ideal(k: usize, d: u32, ring: &Ring) -> Result<Ideal> {
    let nvars = ring.nvars();
    if k < 3 || k > nvars {
        return Err(Error::IndexOutOfRange {
            what: format!("k must satisfy 3 <= k <= {nvars}, got {k}"),
        });
    }
    if d == 0 {
        return Err(Error::IndexOutOfRange {
            what: "d must be at least 1".to_string(),
        });
    }
    let pure_power = Monomial::from_pairs(nvars, &[(k - 2, d + 1)]);
    let lower_corner = Monomial::from_pairs(nvars, &[(0, d), (k - 1, 1)]);
    let mut generators: Vec<Polynomial> = Vec::new();
    for small in monomials_of_degree(k - 1, d + 1) {
        let mut exps = small.exponents().to_vec();
        exps.resize(nvars, 0);
        let embedded = Monomial::new(exps);
        if embedded != pure_power {
            generators.push(Polynomial::from_monomial(embedded));
        }
    }
    let binomial =
        Polynomial::from_monomial(pure_power).add(&Polynomial::from_monomial(lower_corner));
    generators.push(binomial);
    Ideal::new(ring.clone(), generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_monomial, parse_polynomial};

    fn ring3() -> Ring {
        Ring::from_names(&["x", "y", "z"]).unwrap()
    }

    fn mono(ring: &Ring, text: &str) -> Monomial {
        parse_monomial(text, ring).unwrap()
    }

    #[test]
    fn lex_and_rlex_first_disagree_at_degree_two_position_three() {
        let ring = ring3();
        let found = first_disagreement(&OrderSpec::Lex, &OrderSpec::RevLex, 3, 6).unwrap();
        assert_eq!(found.degree, 2);
        assert_eq!(found.position, 3);
        assert_eq!(found.first, mono(&ring, "x*z"));
        assert_eq!(found.second, mono(&ring, "y^2"));
    }

    #[test]
    fn disagreement_is_symmetric_up_to_swapping_the_monomials() {
        let forward = first_disagreement(&OrderSpec::Lex, &OrderSpec::RevLex, 3, 6).unwrap();
        let backward = first_disagreement(&OrderSpec::RevLex, &OrderSpec::Lex, 3, 6).unwrap();
        assert_eq!(forward.degree, backward.degree);
        assert_eq!(forward.position, backward.position);
        assert_eq!(forward.first, backward.second);
        assert_eq!(forward.second, backward.first);
    }

    #[test]
    fn identical_orders_never_disagree() {
        assert_eq!(first_disagreement(&OrderSpec::Lex, &OrderSpec::Lex, 3, 6), None);
        assert_eq!(
            first_disagreement(&OrderSpec::RevLex, &OrderSpec::RevLex, 4, 5),
            None
        );
    }

    #[test]
    fn unit_weights_with_lex_tie_are_indistinguishable_from_lex() {
        let weighted = OrderSpec::weight(vec![1, 1, 1], OrderSpec::Lex).unwrap();
        assert_eq!(first_disagreement(&OrderSpec::Lex, &weighted, 3, 6), None);
    }

    #[test]
    fn two_variable_lex_and_rlex_coincide() {
        assert_eq!(first_disagreement(&OrderSpec::Lex, &OrderSpec::RevLex, 2, 8), None);
    }

    #[test]
    fn distinguishing_ideal_for_lex_vs_rlex_in_three_variables() {
        let ring = ring3();
        let ideal = distinguishing_ideal(&OrderSpec::Lex, &OrderSpec::RevLex, &ring, 6).unwrap();
        let expected = vec![
            parse_polynomial("x^2", &ring).unwrap(),
            parse_polynomial("x*y", &ring).unwrap(),
            parse_polynomial("x*z + y^2", &ring).unwrap(),
        ];
        assert_eq!(ideal.generators(), expected.as_slice());
    }

    #[test]
    fn distinguishing_ideal_reports_agreement_as_an_error() {
        let ring = ring3();
        match distinguishing_ideal(&OrderSpec::Lex, &OrderSpec::Lex, &ring, 4) {
            Err(Error::NoDisagreement { dmax: 4 }) => {}
            other => panic!("expected NoDisagreement, got {other:?}"),
        }
    }

    #[test]
    fn rlex_has_no_gap_witness() {
        for nvars in 1..=6 {
            assert_eq!(rlex_gap_witness(&OrderSpec::RevLex, nvars, 10), None);
        }
    }

    #[test]
    fn lex_gap_witness_is_third_variable_degree_one() {
        assert_eq!(
            rlex_gap_witness(&OrderSpec::Lex, 3, 6),
            Some(GapWitness { k: 3, d: 1 })
        );
        assert_eq!(
            rlex_gap_witness(&OrderSpec::Lex, 6, 6),
            Some(GapWitness { k: 3, d: 1 })
        );
    }

    #[test]
    fn decreasing_weights_rank_the_lower_corner_high_enough_to_witness() {
        // x1*x3 has weight 4 + 1 = 5 while x2^2 has weight 4, so the scan
        // stops at the very first comparison.
        let order = OrderSpec::weight(vec![4, 2, 1], OrderSpec::Lex).unwrap();
        assert_eq!(rlex_gap_witness(&order, 3, 6), Some(GapWitness { k: 3, d: 1 }));
        assert!(!is_rlex_up_to(&order, 3, 6));
    }

    #[test]
    fn weights_can_delay_the_witness_to_higher_degree() {
        // x1^d * x3 strictly outweighs x2^(d+1) once 3d + 1 > 2d + 2, i.e.
        // from d = 2 onward; at d = 1 the weights tie at 4 and the
        // reverse-lexicographic tiebreak keeps x2^2 on top, so the witness
        // appears at degree 2 rather than 1.
        let order = OrderSpec::weight(vec![3, 2, 1], OrderSpec::RevLex).unwrap();
        assert_eq!(rlex_gap_witness(&order, 3, 6), Some(GapWitness { k: 3, d: 2 }));
    }

    #[test]
    fn orders_on_two_variables_are_always_reverse_lexicographic() {
        assert!(is_rlex_up_to(&OrderSpec::Lex, 2, 10));
        let order = OrderSpec::weight(vec![7, 2], OrderSpec::Lex).unwrap();
        assert!(is_rlex_up_to(&order, 2, 10));
    }

    #[test]
    fn gap_ideal_matches_the_hand_built_example_in_three_variables() {
        let ring = ring3();
        let ideal = regularity_gap_ideal(3, 1, &ring).unwrap();
        let expected = vec![
            parse_polynomial("x^2", &ring).unwrap(),
            parse_polynomial("x*y", &ring).unwrap(),
            parse_polynomial("y^2 + x*z", &ring).unwrap(),
        ];
        assert_eq!(ideal.generators(), expected.as_slice());
    }

    #[test]
    fn gap_ideal_in_six_variables_at_degree_two() {
        let ring = Ring::with_numbered_vars(6).unwrap();
        let ideal = regularity_gap_ideal(3, 2, &ring).unwrap();
        let expected = vec![
            parse_polynomial("x1^3", &ring).unwrap(),
            parse_polynomial("x1^2*x2", &ring).unwrap(),
            parse_polynomial("x1*x2^2", &ring).unwrap(),
            parse_polynomial("x2^3 + x1^2*x3", &ring).unwrap(),
        ];
        assert_eq!(ideal.generators(), expected.as_slice());
    }

    #[test]
    fn gap_ideal_with_larger_k_uses_all_smaller_variables() {
        let ring = Ring::with_numbered_vars(4).unwrap();
        let ideal = regularity_gap_ideal(4, 1, &ring).unwrap();
        let expected = vec![
            parse_polynomial("x1^2", &ring).unwrap(),
            parse_polynomial("x1*x2", &ring).unwrap(),
            parse_polynomial("x1*x3", &ring).unwrap(),
            parse_polynomial("x2^2", &ring).unwrap(),
            parse_polynomial("x2*x3", &ring).unwrap(),
            parse_polynomial("x3^2 + x1*x4", &ring).unwrap(),
        ];
        assert_eq!(ideal.generators(), expected.as_slice());
    }

    #[test]
    fn gap_ideal_rejects_out_of_range_parameters() {
        let ring = ring3();
        assert!(matches!(
            regularity_gap_ideal(2, 1, &ring),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            regularity_gap_ideal(4, 1, &ring),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            regularity_gap_ideal(3, 0, &ring),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn gap_ideal_generators_are_homogeneous_of_the_expected_degree() {
        let ring = Ring::with_numbered_vars(5).unwrap();
        for k in 3..=5 {
            for d in 1..=3 {
                let ideal = regularity_gap_ideal(k, d, &ring).unwrap();
                for g in ideal.generators() {
                    assert_eq!(g.homogeneous_degree(), Some(d + 1));
                }
                // Count: all degree-(d+1) monomials in k-1 variables, with the
                // pure power folded into the binomial rather than dropped.
                let expected_len = crate::monomial::count_monomials_of_degree(k - 1, d + 1);
                assert_eq!(ideal.generators().len(), expected_len);
            }
        }
    }
}
