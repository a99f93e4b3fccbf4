//! Buchberger's algorithm over exact rationals: polynomial reduction,
//! S-polynomials, Groebner bases and their canonical reduced form, initial
//! ideals, graded-piece dimensions, and ideal membership.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::integer_rank;
use crate::monideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::OrderSpec;
use crate::poly::{Polynomial, Rational, Term};
use crate::ring::Ring;

/// A homogeneous ideal presented by generators. Construction enforces that
/// every generator is nonzero, homogeneous of degree at least one, and lives
/// in the given ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidIdeal("empty generator list".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.nvars() != ring.nvars() {
                return Err(Error::InvalidIdeal(format!(
                    "generator {i} lives in {} variables, the ring has {}",
                    g.nvars(),
                    ring.nvars()
                )));
            }
            if g.is_zero() {
                return Err(Error::InvalidIdeal(format!("generator {i} is zero")));
            }
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous { index: i });
            }
            if g.homogeneous_degree() == Some(0) {
                return Err(Error::InvalidIdeal(format!(
                    "generator {i} is a nonzero constant (unit ideal)"
                )));
            }
        }
        Ok(Ideal { ring, generators })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// A Groebner basis for a fixed order. `reduced` marks the canonical form:
/// monic elements, minimal leading monomials, fully tail-reduced, sorted
/// descending by leading monomial. Raw Buchberger output has
/// `reduced = false` and is content-normalized rather than monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: OrderSpec,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.elements[0].nvars()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| {
                g.leading_monomial(&self.order)
                    .expect("basis elements are nonzero")
                    .clone()
            })
            .collect()
    }
}

/// `p - c * x^m * g` where both term lists are sorted strictly descending
/// under `order`; the result is again sorted strictly descending.
fn merge_sub(
    p: Vec<Term>,
    c: &Rational,
    m: &Monomial,
    g: &[Term],
    order: &OrderSpec,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut pi = p.into_iter().peekable();
    let mut gi = g.iter().peekable();
    loop {
        match (pi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => {
                out.push(pi.next().unwrap());
            }
            (None, Some(_)) => {
                let t = gi.next().unwrap();
                out.push(Term::new(-(c * &t.coeff), t.monomial.mul(m)));
            }
            (Some(pt), Some(gt)) => {
                let gm = gt.monomial.mul(m);
                match order.cmp(&pt.monomial, &gm) {
                    Ordering::Greater => out.push(pi.next().unwrap()),
                    Ordering::Less => {
                        let t = gi.next().unwrap();
                        out.push(Term::new(-(c * &t.coeff), gm));
                    }
                    Ordering::Equal => {
                        let pt = pi.next().unwrap();
                        let gt = gi.next().unwrap();
                        let coeff = &pt.coeff - &(c * &gt.coeff);
                        if !coeff.is_zero() {
                            out.push(Term::new(coeff, gm));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Leading term plus descending term list for one reducer.
struct Reducer {
    lead: Term,
    terms: Vec<Term>,
}

fn make_reducers(basis: &[Polynomial], order: &OrderSpec) -> Vec<Reducer> {
    basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let terms = g.sorted_terms(order);
            Reducer {
                lead: terms[0].clone(),
                terms,
            }
        })
        .collect()
}

fn reduce_terms(mut p: Vec<Term>, reducers: &[Reducer], order: &OrderSpec) -> Vec<Term> {
    let mut remainder: Vec<Term> = Vec::new();
    'outer: while let Some(lead) = p.first() {
        for r in reducers {
            if r.lead.monomial.divides(&lead.monomial) {
                let qm = lead.monomial.div(&r.lead.monomial).expect("divides");
                let qc = &lead.coeff / &r.lead.coeff;
                p = merge_sub(p, &qc, &qm, &r.terms, order);
                continue 'outer;
            }
        }
        // Head term irreducible: it is the greatest remaining term, so move
        // it to the remainder and keep reducing what is below it.
        remainder.push(p.remove(0));
    }
    remainder
}

/// Full normal-form reduction of `f` by `basis` under `order`.
///
/// Deterministic: the greatest reducible term is always reduced next, using
/// the first basis element (in list order) whose leading monomial divides
/// it. Returns the exact rational remainder, every term of which is
/// irreducible by the basis. Zero basis elements are ignored.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: &OrderSpec) -> Polynomial {
    let reducers = make_reducers(basis, order);
    let remainder = reduce_terms(f.sorted_terms(order), &reducers, order);
    Polynomial::from_terms(f.nvars(), remainder.into_iter().map(|t| (t.coeff, t.monomial)))
}

/// The S-polynomial of two nonzero polynomials:
/// `lcm/lt(f) * f - lcm/lt(g) * g`, with both leading terms scaled to one so
/// the leading monomials cancel exactly.
pub fn s_poly(f: &Polynomial, g: &Polynomial, order: &OrderSpec) -> Polynomial {
    let lt_f = f.leading_term(order).expect("s_poly of zero polynomial");
    let lt_g = g.leading_term(order).expect("s_poly of zero polynomial");
    let lcm = lt_f.monomial.lcm(&lt_g.monomial);
    let mf = lcm.div(&lt_f.monomial).expect("lcm is a multiple");
    let mg = lcm.div(&lt_g.monomial).expect("lcm is a multiple");
    let cf = lt_f.coeff.clone().recip();
    let cg = lt_g.coeff.clone().recip();
    f.mul_term(&cf, &mf).sub(&g.mul_term(&cg, &mg))
}

/// Options for [`buchberger_with`]. The product criterion (skip pairs with
/// coprime leading monomials) is always applied; the chain criterion is
/// optional and off by default.
#[derive(Debug, Clone, Default)]
pub struct BuchbergerOptions {
    pub use_chain_criterion: bool,
}

#[derive(Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the normal selection strategy: among pending
/// S-pairs, always process the one whose leading-monomial lcm has the lowest
/// total degree, breaking ties by the order on lcms and then by indices.
/// New basis elements are content-normalized (primitive integer form).
pub fn buchberger(ideal: &Ideal, order: &OrderSpec) -> GroebnerBasis {
    buchberger_with(ideal, order, &BuchbergerOptions::default())
}

pub fn buchberger_with(
    ideal: &Ideal,
    order: &OrderSpec,
    opts: &BuchbergerOptions,
) -> GroebnerBasis {
    order
        .validate(ideal.nvars())
        .expect("order invalid for this ring");
    let mut basis: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.clear_content())
        .collect();
    let mut reducers = make_reducers(&basis, order);
    let mut pairs: Vec<Pair> = Vec::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push(Pair {
                i,
                j,
                lcm: reducers[i].lead.monomial.lcm(&reducers[j].lead.monomial),
            });
        }
    }

    while !pairs.is_empty() {
        // Normal strategy selection.
        let mut best = 0;
        for idx in 1..pairs.len() {
            let a = &pairs[idx];
            let b = &pairs[best];
            let key = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if key == Ordering::Less {
                best = idx;
            }
        }
        let pair = pairs.swap_remove(best);
        treated.insert((pair.i, pair.j));

        let lm_i = &reducers[pair.i].lead.monomial;
        let lm_j = &reducers[pair.j].lead.monomial;
        // Product criterion: coprime leading monomials reduce to zero.
        if lm_i.coprime(lm_j) {
            continue;
        }
        if opts.use_chain_criterion {
            let chained = (0..basis.len()).any(|k| {
                k != pair.i
                    && k != pair.j
                    && reducers[k].lead.monomial.divides(&pair.lcm)
                    && treated.contains(&key(pair.i, k))
                    && treated.contains(&key(pair.j, k))
            });
            if chained {
                continue;
            }
        }

        let s = s_poly(&basis[pair.i], &basis[pair.j], order);
        let remainder = reduce_terms(s.sorted_terms(order), &reducers, order);
        if remainder.is_empty() {
            continue;
        }
        let r = Polynomial::from_terms(
            ideal.nvars(),
            remainder.into_iter().map(|t| (t.coeff, t.monomial)),
        )
        .clear_content();
        let new_idx = basis.len();
        let new_reducer = {
            let terms = r.sorted_terms(order);
            Reducer {
                lead: terms[0].clone(),
                terms,
            }
        };
        for t in 0..new_idx {
            pairs.push(Pair {
                i: t,
                j: new_idx,
                lcm: reducers[t].lead.monomial.lcm(&new_reducer.lead.monomial),
            });
        }
        reducers.push(new_reducer);
        basis.push(r);
    }

    GroebnerBasis {
        order: order.clone(),
        elements: basis,
        reduced: false,
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Canonical reduced Groebner basis: one monic element per minimal leading
/// monomial, every tail term irreducible by the others, sorted descending by
/// leading monomial. This form is unique for the ideal and order, so equal
/// ideals always produce byte-identical reduced bases.
pub fn reduce_gb(gb: &GroebnerBasis) -> GroebnerBasis {
    let order = gb.order().clone();
    let nvars = gb.nvars();
    let lms = gb.leading_monomials();
    let minimal = MonomialIdeal::new(nvars, lms.clone());

    // One representative per minimal leading monomial; candidates scanned in
    // a deterministic order so duplicates resolve stably.
    let mut order_of_scan: Vec<usize> = (0..gb.elements.len()).collect();
    order_of_scan.sort_by(|&a, &b| order.cmp(&lms[a], &lms[b]).then(a.cmp(&b)));
    let mut chosen: Vec<Polynomial> = Vec::new();
    let mut taken: HashSet<Vec<u32>> = HashSet::new();
    for idx in order_of_scan {
        let lm = &lms[idx];
        let is_minimal_gen = minimal.min_gens().contains(lm);
        if is_minimal_gen && !taken.contains(lm.exponents()) {
            taken.insert(lm.exponents().to_vec());
            chosen.push(gb.elements[idx].clone());
        }
    }

    // One interreduction pass. Leading monomials are pairwise indivisible
    // and never change below, so after the pass every element is fully
    // reduced against all the others.
    for i in 0..chosen.len() {
        let others: Vec<Polynomial> = chosen
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reduce(&chosen[i], &others, &order);
        debug_assert_eq!(
            r.leading_monomial(&order),
            chosen[i].leading_monomial(&order),
            "minimal leading monomials must survive interreduction"
        );
        chosen[i] = r.make_monic(&order);
    }

    chosen.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial(&order).expect("nonzero"),
            a.leading_monomial(&order).expect("nonzero"),
        )
    });
    GroebnerBasis {
        order,
        elements: chosen,
        reduced: true,
    }
}

/// The initial ideal `in_order(ideal)`: the monomial ideal generated by the
/// leading monomials of a Groebner basis.
pub fn initial_ideal(ideal: &Ideal, order: &OrderSpec) -> MonomialIdeal {
    let gb = buchberger(ideal, order);
    MonomialIdeal::new(ideal.nvars(), gb.leading_monomials())
}

/// Dimension of the degree-`d` graded piece of the ideal, computed directly
/// as the rank of the coefficient matrix of all monomial multiples of the
/// generators in degree `d`. Independent of any Groebner basis, so it can
/// cross-check Hilbert counts of initial ideals.
pub fn dim_in_degree(ideal: &Ideal, d: u32) -> usize {
    let n = ideal.nvars();
    let cols = monomials_of_degree(n, d);
    let col_index: HashMap<Vec<u32>, usize> = cols
        .iter()
        .enumerate()
        .map(|(i, m)| (m.exponents().to_vec(), i))
        .collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in ideal.generators() {
        let e = g
            .homogeneous_degree()
            .expect("ideal generators are homogeneous and nonzero");
        if e > d {
            continue;
        }
        let g = g.clear_content();
        for m in monomials_of_degree(n, d - e) {
            let mut row = vec![BigInt::zero(); cols.len()];
            for t in g.terms() {
                debug_assert_eq!(
                    t.coeff.denom(),
                    &BigInt::from(1),
                    "content-cleared coefficients are integers"
                );
                let prod = t.monomial.mul(&m);
                row[col_index[prod.exponents()]] = t.coeff.numer().clone();
            }
            rows.push(row);
        }
    }
    integer_rank(rows)
}

/// Ideal membership: the normal form of `f` by a Groebner basis is zero
/// exactly when `f` lies in the ideal.
pub fn membership(f: &Polynomial, gb: &GroebnerBasis) -> bool {
    reduce(f, gb.elements(), gb.order()).is_zero()
}
