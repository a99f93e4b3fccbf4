//! Betti tables of monomial quotients via Koszul homology.
//!
//! For a proper monomial ideal `J` in `S = Q[x1..xn]`, the graded Betti
//! number `β_{i,j}(S/J)` is the dimension of the degree-`j` part of the
//! `i`-th homology of the Koszul complex on `x1..xn` with coefficients in
//! `S/J`. The complex splits into finite strands indexed by monomial
//! multidegree, and each strand is a complex of finite-dimensional vector
//! spaces with `0/±1` boundary matrices, so homology dimensions follow from
//! exact integer rank computations.
//!
//! Only multidegrees dividing the lcm of the minimal generators can carry
//! homology: the Taylor complex is a multigraded free resolution of `S/J`
//! whose shifts are lcms of generator subsets, and the shifts of the minimal
//! resolution form a subset of the shifts of any multigraded resolution.
//! That bounds every internal degree by `deg(lcm)`, which also justifies the
//! reported truncation `deg(lcm) + n`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::integer_rank;
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Graded Betti numbers `β_{i,j}(S/J)`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
    truncation: u32,
}

impl BettiTable {
    /// `β_{i,j}(S/J)`, zero when absent.
    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, j, value)`, ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// The internal-degree bound below which the table is complete.
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// `max{j - i : β_{i,j} != 0}`. At least zero: `β_{0,0} = 1` always.
    pub fn max_shift_gap(&self) -> u32 {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .expect("betti table is never empty")
    }
}

/// Full Betti table of `S/J` for a proper monomial ideal.
pub fn betti_table(j: &MonomialIdeal) -> BettiTable {
    let n = j.nvars();
    let lcm = j.generator_lcm();
    let truncation = lcm.degree() + n as u32;
    let mut entries: BTreeMap<(u32, u32), u64> = BTreeMap::new();

    // Odometer over all multidegrees dividing the generator lcm.
    let mut alpha = vec![0u32; n];
    loop {
        strand_homology(j, &alpha, &mut entries);
        let mut pos = 0;
        loop {
            if pos == n {
                return BettiTable { entries, truncation };
            }
            if alpha[pos] < lcm.exponent(pos) {
                alpha[pos] += 1;
                break;
            }
            alpha[pos] = 0;
            pos += 1;
        }
    }
}

/// Adds the homology dimensions of the multidegree-`alpha` Koszul strand.
///
/// Basis of the strand in homological degree `i`: wedge factors `e_T` with
/// `T` an `i`-subset of the support of `alpha` such that the cofactor
/// monomial `x^(alpha - e_T)` survives in `S/J`. The boundary sends `e_T` to
/// the alternating sum of its facets, with a coefficient that vanishes
/// exactly when the facet's cofactor lies in `J`.
fn strand_homology(
    j: &MonomialIdeal,
    alpha: &[u32],
    entries: &mut BTreeMap<(u32, u32), u64>,
) {
    let n = alpha.len();
    let supp: Vec<usize> = (0..n).filter(|&v| alpha[v] > 0).collect();
    let s = supp.len();
    let degree: u32 = alpha.iter().sum();
    let total = 1usize << s;

    let mut alive = vec![false; total];
    for mask in 0..total {
        let mut exps = alpha.to_vec();
        for (b, &v) in supp.iter().enumerate() {
            if mask >> b & 1 == 1 {
                exps[v] -= 1;
            }
        }
        alive[mask] = !j.contains(&Monomial::new(exps));
    }

    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); s + 1];
    for (mask, &live) in alive.iter().enumerate() {
        if live {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }

    // ranks[i] = rank of the boundary from homological degree i to i-1
    let mut ranks = vec![0usize; s + 2];
    for i in 1..=s {
        let rows = &by_size[i - 1];
        let cols = &by_size[i];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let row_index: HashMap<usize, usize> =
            rows.iter().enumerate().map(|(r, &m)| (m, r)).collect();
        let mut matrix = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
        for (c, &mask) in cols.iter().enumerate() {
            let mut sign_flips = 0u32;
            for b in 0..s {
                if mask >> b & 1 == 1 {
                    let facet = mask & !(1usize << b);
                    if let Some(&r) = row_index.get(&facet) {
                        matrix[r][c] = if sign_flips % 2 == 0 {
                            BigInt::from(1)
                        } else {
                            BigInt::from(-1)
                        };
                    }
                    sign_flips += 1;
                }
            }
        }
        ranks[i] = integer_rank(matrix);
    }

    for i in 0..=s {
        let h = by_size[i].len() as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
        debug_assert!(h >= 0, "boundary maps must compose to zero");
        if h > 0 {
            *entries.entry((i as u32, degree)).or_insert(0) += h as u64;
        }
    }
}

/// Castelnuovo-Mumford regularity of a proper monomial ideal, from its
/// Betti table: `max{j - i : β_{i,j}(S/J) != 0} + 1`.
pub fn regularity_monomial(j: &MonomialIdeal) -> u32 {
    betti_table(j).max_shift_gap() + 1
}
