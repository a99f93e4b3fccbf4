//! Invertible linear changes of coordinates acting on polynomials.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational_inverse;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Rational};

/// An invertible `n x n` rational matrix `g` acting on the ring by
/// substitution on the right: `(g . f)(x) = f(g * x)` written in the basis
/// `x1, ..., xn`. Concretely each variable is replaced by a linear form read
/// off a *column*:
///
/// ```text
/// x_j  ->  sum_i  entries[i][j] * x_i
/// ```
///
/// Substitution by a linear form preserves homogeneity and degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformMatrix {
    n: usize,
    entries: Vec<Vec<Rational>>,
    det_nonzero: bool,
}

impl TransformMatrix {
    /// Builds a transform, rejecting non-square and singular matrices.
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidConfig("transform matrix must be square".into()));
        }
        if rational_inverse(&entries).is_none() {
            return Err(Error::SingularMatrix);
        }
        Ok(TransformMatrix { n, entries, det_nonzero: true })
    }

    /// Builds a transform from integer entries.
    pub fn from_integers(entries: Vec<Vec<i64>>) -> Result<Self> {
        TransformMatrix::new(
            entries
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|x| Rational::from(num_bigint::BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::from_integer(1.into())
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        TransformMatrix { n, entries, det_nonzero: true }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// The inverse transform. Always defined: singular matrices are
    /// rejected at construction.
    pub fn inverse(&self) -> TransformMatrix {
        let inv = rational_inverse(&self.entries).expect("transform is invertible by invariant");
        TransformMatrix { n: self.n, entries: inv, det_nonzero: true }
    }

    /// The linear form that replaces `x_j`.
    fn image_of_var(&self, j: usize) -> Polynomial {
        Polynomial::from_terms(
            self.n,
            (0..self.n).map(|i| (self.entries[i][j].clone(), Monomial::var(self.n, i))),
        )
    }

    /// Applies the substitution to one polynomial.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut cache = PowerCache::new(self);
        self.apply_cached(f, &mut cache)
    }

    /// Applies the substitution to a list of polynomials, sharing the power
    /// cache across all of them.
    pub fn apply_all(&self, polys: &[Polynomial]) -> Vec<Polynomial> {
        let mut cache = PowerCache::new(self);
        polys.iter().map(|f| self.apply_cached(f, &mut cache)).collect()
    }

    fn apply_cached(&self, f: &Polynomial, cache: &mut PowerCache) -> Polynomial {
        assert_eq!(f.nvars(), self.n, "ring dimension mismatch");
        let mut acc = Polynomial::zero(self.n);
        for t in f.terms() {
            let mut prod = Polynomial::term(t.coeff.clone(), Monomial::one(self.n));
            for (j, &e) in t.monomial.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(cache.power(j, e));
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }
}

/// Powers of the variable images, built incrementally per variable.
struct PowerCache {
    // powers[j][k] = (image of x_j)^(k+1)
    powers: Vec<Vec<Polynomial>>,
}

impl PowerCache {
    fn new(t: &TransformMatrix) -> Self {
        PowerCache {
            powers: (0..t.n).map(|j| vec![t.image_of_var(j)]).collect(),
        }
    }

    fn power(&mut self, j: usize, e: u32) -> &Polynomial {
        let e = e as usize;
        while self.powers[j].len() < e {
            let last = self.powers[j].last().unwrap();
            let next = last.mul(&self.powers[j][0]);
            self.powers[j].push(next);
        }
        &self.powers[j][e - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn qi(n: i64) -> Rational {
        Rational::from(BigInt::from(n))
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn matrix(rows: &[&[i64]]) -> TransformMatrix {
        TransformMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| qi(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_singular_and_non_square() {
        assert_eq!(
            TransformMatrix::new(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]),
            Err(Error::SingularMatrix)
        );
        assert!(TransformMatrix::new(vec![vec![qi(1), qi(2)]]).is_err());
    }

    #[test]
    fn identity_fixes_polynomials() {
        let id = TransformMatrix::identity(3);
        let f = Polynomial::from_terms(
            3,
            vec![(qi(2), mono(&[2, 1, 0])), (qi(-1), mono(&[0, 0, 3]))],
        );
        assert_eq!(id.apply(&f), f);
    }

    #[test]
    fn substitution_reads_columns() {
        // g swaps x and y: columns say x -> y, y -> x.
        let g = matrix(&[&[0, 1], &[1, 0]]);
        let f = Polynomial::from_terms(2, vec![(qi(1), mono(&[2, 0]))]); // x^2
        assert_eq!(
            g.apply(&f),
            Polynomial::from_terms(2, vec![(qi(1), mono(&[0, 2]))]) // y^2
        );

        // x -> x (column 0 = e1), y -> x + y (column 1 = e1 + e2):
        // rows are [1, 1], [0, 1].
        let shear = matrix(&[&[1, 1], &[0, 1]]);
        let y = Polynomial::from_monomial(mono(&[0, 1]));
        let expect = Polynomial::from_terms(
            2,
            vec![(qi(1), mono(&[1, 0])), (qi(1), mono(&[0, 1]))],
        );
        assert_eq!(shear.apply(&y), expect);
        // and x stays x
        let x = Polynomial::from_monomial(mono(&[1, 0]));
        assert_eq!(shear.apply(&x), x);
    }

    #[test]
    fn substitution_expands_powers() {
        // y -> x + y applied to y^2 gives x^2 + 2xy + y^2.
        let shear = matrix(&[&[1, 1], &[0, 1]]);
        let y2 = Polynomial::from_monomial(mono(&[0, 2]));
        let expect = Polynomial::from_terms(
            2,
            vec![
                (qi(1), mono(&[2, 0])),
                (qi(2), mono(&[1, 1])),
                (qi(1), mono(&[0, 2])),
            ],
        );
        assert_eq!(shear.apply(&y2), expect);
    }

    #[test]
    fn application_is_linear_and_multiplicative() {
        let g = matrix(&[&[2, 1, 0], &[1, 1, 1], &[0, 3, 1]]);
        let f1 = Polynomial::from_terms(
            3,
            vec![(qi(1), mono(&[1, 1, 0])), (qi(3), mono(&[0, 0, 2]))],
        );
        let f2 = Polynomial::from_terms(
            3,
            vec![(qi(-2), mono(&[2, 0, 0])), (qi(1), mono(&[0, 1, 1]))],
        );
        assert_eq!(g.apply(&f1.add(&f2)), g.apply(&f1).add(&g.apply(&f2)));
        assert_eq!(g.apply(&f1.mul(&f2)), g.apply(&f1).mul(&g.apply(&f2)));
    }

    #[test]
    fn inverse_round_trips_polynomials() {
        let g = matrix(&[&[2, 1, 0], &[1, 1, 1], &[0, 3, 1]]);
        let f = Polynomial::from_terms(
            3,
            vec![(qi(5), mono(&[2, 1, 0])), (qi(-7), mono(&[0, 2, 1]))],
        );
        assert_eq!(g.inverse().apply(&g.apply(&f)), f);
    }

    #[test]
    fn homogeneity_and_degree_are_preserved() {
        let g = matrix(&[&[1, 2], &[3, 4]]);
        let f = Polynomial::from_terms(
            2,
            vec![(qi(1), mono(&[3, 0])), (qi(2), mono(&[1, 2]))],
        );
        let image = g.apply(&f);
        assert!(image.is_homogeneous());
        assert_eq!(image.homogeneous_degree(), Some(3));
    }
}
