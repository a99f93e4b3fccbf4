use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};

/// A graded multiplicative monomial order with `x1 > x2 > ... > xn`.
///
/// All three families compare total degree first, so every order here is
/// degree-compatible. Within a degree:
///
/// * `Lex`: `a > b` iff the first nonzero entry of `a - b` is positive.
/// * `RevLex`: `a > b` iff the last nonzero entry of `a - b` is negative
///   (graded reverse lexicographic).
/// * `Weight`: higher dot product with the weight vector wins; exact ties
///   fall through to a non-weight tie-break order. Weights must be positive
///   and weakly decreasing so that `x1 >= x2 >= ... >= xn` holds, and the
///   tie-break restores strictness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpec {
    Lex,
    RevLex,
    Weight {
        weights: Vec<u64>,
        tie: Box<OrderSpec>,
    },
}

impl OrderSpec {
    /// Builds a weight order, validating the weight vector and tie-break.
    pub fn weight(weights: Vec<u64>, tie: OrderSpec) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidOrder("weight vector is empty".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidOrder("weights must be positive".into()));
        }
        if weights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidOrder(
                "weights must be weakly decreasing (x1 > x2 > ... > xn)".into(),
            ));
        }
        if matches!(tie, OrderSpec::Weight { .. }) {
            return Err(Error::InvalidOrder(
                "tie-break must be lex or rlex, not another weight order".into(),
            ));
        }
        Ok(OrderSpec::Weight {
            weights,
            tie: Box::new(tie),
        })
    }

    /// Checks that the order is usable in an `nvars`-variable ring.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            OrderSpec::Lex | OrderSpec::RevLex => Ok(()),
            OrderSpec::Weight { weights, tie } => {
                if weights.len() != nvars {
                    return Err(Error::InvalidOrder(format!(
                        "weight vector has {} entries but the ring has {} variables",
                        weights.len(),
                        nvars
                    )));
                }
                tie.validate(nvars)
            }
        }
    }

    /// Total comparison of two monomials of the same dimension.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "monomial dimension mismatch");
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        self.cmp_same_degree(a, b)
    }

    fn cmp_same_degree(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderSpec::Lex => {
                for (&ea, &eb) in a.exponents().iter().zip(b.exponents()) {
                    match ea.cmp(&eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderSpec::RevLex => {
                for (&ea, &eb) in a.exponents().iter().zip(b.exponents()).rev() {
                    match ea.cmp(&eb) {
                        Ordering::Equal => continue,
                        // Last nonzero entry of a - b negative means a > b.
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
            OrderSpec::Weight { weights, tie } => {
                assert_eq!(
                    weights.len(),
                    a.nvars(),
                    "weight vector length does not match monomial dimension"
                );
                let dot = |m: &Monomial| -> u128 {
                    m.exponents()
                        .iter()
                        .zip(weights)
                        .map(|(&e, &w)| u128::from(e) * u128::from(w))
                        .sum()
                };
                match dot(a).cmp(&dot(b)) {
                    Ordering::Equal => tie.cmp_same_degree(a, b),
                    ord => ord,
                }
            }
        }
    }

    /// All monomials of degree `d`, sorted strictly descending under `self`.
    pub fn sorted_monomials(&self, nvars: usize, d: u32) -> Vec<Monomial> {
        self.validate(nvars).expect("order invalid for this ring");
        let mut all = monomials_of_degree(nvars, d);
        all.sort_by(|a, b| self.cmp(b, a));
        all
    }

    /// The maximum of a nonempty monomial iterator under `self`.
    pub fn max_of<'a, I: IntoIterator<Item = &'a Monomial>>(&self, iter: I) -> &'a Monomial {
        let mut it = iter.into_iter();
        let mut best = it.next().expect("max of empty iterator");
        for m in it {
            if self.cmp(m, best) == Ordering::Greater {
                best = m;
            }
        }
        best
    }

    /// The minimum of a nonempty monomial iterator under `self`.
    pub fn min_of<'a, I: IntoIterator<Item = &'a Monomial>>(&self, iter: I) -> &'a Monomial {
        let mut it = iter.into_iter();
        let mut best = it.next().expect("min of empty iterator");
        for m in it {
            if self.cmp(m, best) == Ordering::Less {
                best = m;
            }
        }
        best
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::Lex => write!(f, "lex"),
            OrderSpec::RevLex => write!(f, "rlex"),
            OrderSpec::Weight { weights, tie } => {
                write!(f, "weight:")?;
                for (i, w) in weights.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, ";tie={tie}")
            }
        }
    }
}
