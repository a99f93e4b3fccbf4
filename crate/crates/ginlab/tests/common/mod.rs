//! Shared corpus builders and independent brute-force oracles for the
//! integration suites.  Everything is seeded, so failures reproduce exactly.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use ginlab::{
    monomials_of_degree, Ideal, Monomial, MonomialIdeal, OrderSpec, Polynomial, Rational, Ring,
};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Random monomial of exact total degree `degree`.
pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.random_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

/// Random nonzero homogeneous polynomial of exact degree `degree` with small
/// integer coefficients and one to three terms.  Sparse generators keep the
/// lexicographic bases in the corpora at desk scale; dense random inputs can
/// drive lex into its worst-case degree growth.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Polynomial {
    let monos = monomials_of_degree(nvars, degree);
    let nterms = rng.random_range(1..=3.min(monos.len()));
    let mut picked: Vec<usize> = Vec::new();
    while picked.len() < nterms {
        let i = rng.random_range(0..monos.len());
        if !picked.contains(&i) {
            picked.push(i);
        }
    }
    let terms: Vec<(Rational, Monomial)> = picked
        .into_iter()
        .map(|i| {
            let c = loop {
                let c: i64 = rng.random_range(-3..=3);
                if c != 0 {
                    break c;
                }
            };
            (q(c), monos[i].clone())
        })
        .collect();
    Polynomial::from_terms(nvars, terms)
}

/// Random homogeneous ideal with `1..=max_gens` generators of degrees
/// `1..=max_deg`.
pub fn random_ideal(rng: &mut ChaCha8Rng, ring: &Ring, max_gens: usize, max_deg: u32) -> Ideal {
    let ngens = rng.random_range(1..=max_gens);
    let gens: Vec<Polynomial> = (0..ngens)
        .map(|_| {
            let d = rng.random_range(1..=max_deg);
            random_homogeneous(rng, ring.nvars(), d)
        })
        .collect();
    Ideal::new(ring.clone(), gens).expect("random generators are homogeneous and nonzero")
}

/// Random graded weight order: strictly positive, weakly decreasing weights
/// with a random lex/rlex tiebreak.
pub fn random_weight_order(rng: &mut ChaCha8Rng, nvars: usize) -> OrderSpec {
    let mut weights = Vec::with_capacity(nvars);
    let mut current: u64 = rng.random_range(4..=12);
    for _ in 0..nvars {
        weights.push(current);
        let step = rng.random_range(0..=2).min(current - 1);
        current -= step;
    }
    let tie = if rng.random_bool(0.5) {
        OrderSpec::Lex
    } else {
        OrderSpec::RevLex
    };
    OrderSpec::weight(weights, tie).expect("constructed weights are admissible")
}

/// All monomials reachable from `seeds` by repeatedly replacing one variable
/// with an earlier (larger) one — the exchange closure.
fn exchange_closure(nvars: usize, seeds: Vec<Monomial>) -> Vec<Monomial> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    for m in seeds {
        if seen.insert(m.exponents().to_vec()) {
            queue.push_back(m);
        }
    }
    while let Some(m) = queue.pop_front() {
        for j in 0..nvars {
            if m.exponents()[j] == 0 {
                continue;
            }
            for i in 0..j {
                let raised = m.exchange(i, j).expect("x_j divides m");
                if seen.insert(raised.exponents().to_vec()) {
                    queue.push_back(raised);
                }
            }
        }
    }
    seen.into_iter().map(Monomial::new).collect()
}

/// Random Borel-fixed monomial ideal: a few random monomials closed under
/// the raising exchanges, then minimalized.
pub fn random_borel_ideal(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> MonomialIdeal {
    let nseeds = rng.random_range(1..=3);
    let seeds: Vec<Monomial> = (0..nseeds)
        .map(|_| {
            let d = rng.random_range(1..=max_deg);
            random_monomial(rng, nvars, d)
        })
        .collect();
    MonomialIdeal::new(nvars, exchange_closure(nvars, seeds))
}

/// Random segment ideal for `order`: one or two degrees, each contributing
/// the top-k monomials of that degree.
pub fn random_segment_ideal(
    rng: &mut ChaCha8Rng,
    order: &OrderSpec,
    nvars: usize,
) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = Vec::new();
    let lowest = rng.random_range(1..=3u32);
    let degrees = if rng.random_bool(0.5) {
        vec![lowest]
    } else {
        vec![lowest, lowest + rng.random_range(1..=2)]
    };
    for d in degrees {
        let sorted = order.sorted_monomials(nvars, d);
        let k = rng.random_range(1..=sorted.len().min(6));
        gens.extend(sorted.into_iter().take(k));
    }
    MonomialIdeal::new(nvars, gens)
}

/// Brute-force check that the degree-`d` monomials of `j` form an
/// upward-closed set under `order`: nothing outside the ideal sits above
/// anything inside it.  Quadratic scan on purpose — it shares no code with
/// the library's sorted-prefix test.
pub fn stratum_upward_closed(j: &MonomialIdeal, order: &OrderSpec, d: u32) -> bool {
    let all = monomials_of_degree(j.nvars(), d);
    for inside in all.iter().filter(|m| j.contains(m)) {
        for other in &all {
            if order.cmp(other, inside) == std::cmp::Ordering::Greater && !j.contains(other) {
                return false;
            }
        }
    }
    true
}

/// Independent segment-ideal oracle.  An ideal is generated by a segment
/// exactly when, in every degree `d` carrying a minimal generator, each
/// degree-`d` monomial at or above the order-smallest such generator lies in
/// the ideal: those anchored intervals together with nothing else generate
/// it.  Monomials below the anchor are free to be absent or swallowed by
/// lower-degree generators.
pub fn segment_ideal_oracle(j: &MonomialIdeal, order: &OrderSpec) -> bool {
    let mut degrees: Vec<u32> = j.min_gens().iter().map(Monomial::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let anchor = j
            .min_gens()
            .iter()
            .filter(|g| g.degree() == d)
            .min_by(|a, b| order.cmp(a, b))
            .expect("degree taken from a minimal generator")
            .clone();
        for m in monomials_of_degree(j.nvars(), d) {
            if order.cmp(&m, &anchor) != std::cmp::Ordering::Less && !j.contains(&m) {
                return false;
            }
        }
    }
    true
}

/// Breadth-first oracle for the Borel partial order: `b` is reachable from
/// `a` by raising exchanges.
pub fn borel_leq_bfs(a: &Monomial, b: &Monomial) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    let nvars = a.nvars();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    seen.insert(a.exponents().to_vec());
    queue.push_back(a.clone());
    while let Some(m) = queue.pop_front() {
        if &m == b {
            return true;
        }
        for j in 0..nvars {
            if m.exponents()[j] == 0 {
                continue;
            }
            for i in 0..j {
                let raised = m.exchange(i, j).expect("x_j divides m");
                if seen.insert(raised.exponents().to_vec()) {
                    queue.push_back(raised);
                }
            }
        }
    }
    false
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut result: u64 = 1;
    for i in 0..k.min(n - k) {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Closed-form Betti table for a Borel-fixed ideal: each minimal generator
/// `u` of degree `du` whose largest dividing variable has 1-based index `m`
/// contributes `C(m-1, i)` to the entry at homological degree `i+1` and
/// shift `du + i` of the quotient's table, which also has a single 1 at
/// `(0, 0)`.  Compared entry-by-entry against the Koszul computation.
pub fn borel_betti_oracle(j: &MonomialIdeal) -> BTreeMap<(u32, u32), u64> {
    assert!(j.is_borel_fixed(), "oracle only valid for Borel-fixed ideals");
    let mut table: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    table.insert((0, 0), 1);
    for u in j.min_gens() {
        let du = u.degree();
        let m = u
            .exponents()
            .iter()
            .rposition(|&e| e > 0)
            .expect("generators have positive degree")
            + 1;
        for i in 0..m as u64 {
            let v = binomial(m as u64 - 1, i);
            if v > 0 {
                *table.entry((i as u32 + 1, du + i as u32)).or_insert(0) += v;
            }
        }
    }
    table
}
