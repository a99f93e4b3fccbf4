//! Monomial ideals and their combinatorial diagnostics: minimal generators,
//! membership, Borel-fixedness, segment detection, and Hilbert-function
//! counts.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::OrderSpec;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// A monomial ideal, stored by its unique minimal generating set.
///
/// Generators are kept in a canonical order (ascending total degree, then
/// descending plain-lex), so structural equality coincides with equality of
/// ideals. Only proper ideals are representable: generators must have
/// degree at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    min_gens: Vec<Monomial>,
}

fn canonical_gen_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.plain_lex_cmp(a))
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to the minimal
    /// generating set (duplicates and multiples of other generators are
    /// discarded).
    ///
    /// Panics on an empty list, a dimension mismatch, or a degree-zero
    /// generator (the unit ideal is not representable).
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        assert!(!gens.is_empty(), "monomial ideal needs at least one generator");
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "monomial dimension mismatch");
            assert!(g.degree() >= 1, "degree-zero generator: the unit ideal is not representable");
        }
        let mut sorted = gens;
        sorted.sort_by(canonical_gen_cmp);
        let mut min_gens: Vec<Monomial> = Vec::new();
        // Ascending degree guarantees any divisor of `g` is seen before `g`.
        for g in sorted {
            if !min_gens.iter().any(|k| k.divides(&g)) {
                min_gens.push(g);
            }
        }
        MonomialIdeal { nvars, min_gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The minimal generators in canonical order.
    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.min_gens.iter().map(Monomial::degree).max().unwrap()
    }

    /// Ideal membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.nvars(), self.nvars, "monomial dimension mismatch");
        self.min_gens.iter().any(|g| g.divides(m))
    }

    /// Componentwise least common multiple of the minimal generators.
    pub fn generator_lcm(&self) -> Monomial {
        let mut acc = self.min_gens[0].clone();
        for g in &self.min_gens[1..] {
            acc = acc.lcm(g);
        }
        acc
    }

    /// Number of degree-`d` monomials inside the ideal.
    pub fn hilbert_count(&self, d: u32) -> usize {
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    /// Whether the ideal is fixed by upper-triangular coordinate changes;
    /// in characteristic zero this is equivalent to closure under the
    /// exchange moves `m -> m * x_i / x_j` for `i < j`, checked on the
    /// minimal generators.
    pub fn is_borel_fixed(&self) -> bool {
        for g in &self.min_gens {
            for j in 1..self.nvars {
                if g.exponent(j) == 0 {
                    continue;
                }
                for i in 0..j {
                    let moved = g.exchange(i, j).expect("x_j divides g");
                    if !self.contains(&moved) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// For a Borel-fixed ideal, the Castelnuovo-Mumford regularity equals
    /// the highest degree of a minimal generator. Errors when the ideal is
    /// not Borel-fixed.
    pub fn regularity_borel(&self) -> Result<u32> {
        if !self.is_borel_fixed() {
            return Err(Error::NotBorelFixed);
        }
        Ok(self.max_gen_degree())
    }

    /// Whether, for every degree `d` carrying a minimal generator, all
    /// degree-`d` monomials at or above the order-smallest such generator
    /// belong to the ideal. This holds exactly when the ideal is generated
    /// by a segment: one order-interval of monomials anchored at the top of
    /// each relevant degree.
    pub fn is_segment_ideal(&self, order: &OrderSpec) -> bool {
        order.validate(self.nvars).expect("order invalid for this ring");
        let mut degrees: Vec<u32> = self.min_gens.iter().map(Monomial::degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            let anchors: Vec<&Monomial> = self
                .min_gens
                .iter()
                .filter(|g| g.degree() == d)
                .collect();
            let lowest = order.min_of(anchors.into_iter());
            for m in monomials_of_degree(self.nvars, d) {
                if order.cmp(&m, lowest) != Ordering::Less && !self.contains(&m) {
                    return false;
                }
            }
        }
        true
    }

    /// Renders as a parenthesized generator list, e.g. `(x^3, x^2*y)`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> MonomialIdealDisplay<'a> {
        assert_eq!(self.nvars, ring.nvars(), "ring dimension mismatch");
        MonomialIdealDisplay { ideal: self, ring }
    }
}

pub struct MonomialIdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    ring: &'a Ring,
}

impl fmt::Display for MonomialIdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.ideal.min_gens().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(self.ring))?;
        }
        write!(f, ")")
    }
}

/// The Borel partial order on monomials of equal degree: `a <= b` iff `b`
/// is reachable from `a` by exchange moves `x_j -> x_i` with `i < j`;
/// equivalently, iff every prefix sum of exponents satisfies
/// `sum(a[..=k]) <= sum(b[..=k])`.
///
/// Panics when degrees or dimensions differ.
pub fn borel_leq(a: &Monomial, b: &Monomial) -> bool {
    assert_eq!(a.nvars(), b.nvars(), "monomial dimension mismatch");
    assert_eq!(
        a.degree(),
        b.degree(),
        "Borel comparison requires equal degrees"
    );
    let mut sum_a: u64 = 0;
    let mut sum_b: u64 = 0;
    for i in 0..a.nvars() {
        sum_a += u64::from(a.exponent(i));
        sum_b += u64::from(b.exponent(i));
        if sum_a > sum_b {
            return false;
        }
    }
    true
}

/// Whether a finite monomial set is a segment for `order`: within each
/// total degree it occupies, the set is exactly the top `k` monomials of
/// that degree under the order. Duplicates are ignored; the empty set is a
/// segment.
pub fn is_segment(monomials: &[Monomial], order: &OrderSpec) -> bool {
    if monomials.is_empty() {
        return true;
    }
    let nvars = monomials[0].nvars();
    assert!(
        monomials.iter().all(|m| m.nvars() == nvars),
        "monomial dimension mismatch"
    );
    order.validate(nvars).expect("order invalid for this ring");
    let mut degrees: Vec<u32> = monomials.iter().map(Monomial::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let stratum: HashSet<&Monomial> =
            monomials.iter().filter(|m| m.degree() == d).collect();
        let top: Vec<Monomial> = order.sorted_monomials(nvars, d);
        let prefix: HashSet<&Monomial> = top.iter().take(stratum.len()).collect();
        if stratum != prefix {
            return false;
        }
    }
    true
}
