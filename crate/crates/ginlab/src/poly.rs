use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::order::OrderSpec;
use crate::ring::Ring;

/// Exact rational scalar used for all coefficients. No floating point is
/// used anywhere in this crate.
pub type Rational = num_rational::BigRational;

/// One nonzero term of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, monomial: Monomial) -> Self {
        assert!(!coeff.is_zero(), "terms must have nonzero coefficients");
        Term { coeff, monomial }
    }
}

/// Canonical storage key: descending by degree, then descending plain-lex.
/// This is only a tie-broken structural ordering so that equal polynomials
/// have equal representations; monomial *orders* are always explicit.
fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    b.degree()
        .cmp(&a.degree())
        .then_with(|| b.plain_lex_cmp(a))
}

/// A polynomial with exact rational coefficients.
///
/// Terms are stored in a canonical order independent of any monomial order,
/// with no zero coefficients and no repeated monomials, so structural
/// equality coincides with mathematical equality. The number of variables is
/// carried explicitly so the zero polynomial knows its ambient ring
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1, "need at least one variable");
        Polynomial { nvars, terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary `(coeff, monomial)` pairs:
    /// duplicates are combined, zeros dropped, terms canonically sorted.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), nvars, "monomial dimension mismatch");
            let entry = acc.entry(m.exponents().to_vec()).or_insert_with(Rational::zero);
            *entry += c;
        }
        let mut out: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| Term::new(c, Monomial::new(e)))
            .collect();
        out.sort_by(|a, b| canonical_cmp(&a.monomial, &b.monomial));
        Polynomial { nvars, terms: out }
    }

    /// The polynomial consisting of a single monomial with coefficient one.
    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial {
            nvars,
            terms: vec![Term::new(Rational::one(), m)],
        }
    }

    /// A single term `c * m` (zero polynomial when `c = 0`).
    pub fn term(c: Rational, m: Monomial) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Polynomial::zero(nvars);
        }
        Polynomial { nvars, terms: vec![Term::new(c, m)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in canonical storage order (degree descending, then plain-lex
    /// descending).
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Maximum total degree among terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Whether all terms share one total degree. The zero polynomial counts
    /// as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => {
                let d = t0.monomial.degree();
                self.terms.iter().all(|t| t.monomial.degree() == d)
            }
        }
    }

    /// The common degree of a nonzero homogeneous polynomial, else `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            return None;
        }
        Some(self.terms[0].monomial.degree())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring dimension mismatch");
        Polynomial::from_terms(
            self.nvars,
            self.terms
                .iter()
                .chain(&other.terms)
                .map(|t| (t.coeff.clone(), t.monomial.clone())),
        )
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-t.coeff.clone(), t.monomial.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(c * &t.coeff, t.monomial.clone()))
                .collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(c * &t.coeff, t.monomial.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring dimension mismatch");
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = a.monomial.mul(&b.monomial);
                let entry = acc.entry(m.exponents().to_vec()).or_insert_with(Rational::zero);
                *entry += &a.coeff * &b.coeff;
            }
        }
        let mut out: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| Term::new(c, Monomial::new(e)))
            .collect();
        out.sort_by(|a, b| canonical_cmp(&a.monomial, &b.monomial));
        Polynomial { nvars: self.nvars, terms: out }
    }

    /// Leading term under the given order; `None` for zero.
    pub fn leading_term(&self, order: &OrderSpec) -> Option<&Term> {
        let mut best: Option<&Term> = None;
        for t in &self.terms {
            match best {
                None => best = Some(t),
                Some(b) => {
                    if order.cmp(&t.monomial, &b.monomial) == Ordering::Greater {
                        best = Some(t);
                    }
                }
            }
        }
        best
    }

    pub fn leading_monomial(&self, order: &OrderSpec) -> Option<&Monomial> {
        self.leading_term(order).map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self, order: &OrderSpec) -> Option<&Rational> {
        self.leading_term(order).map(|t| &t.coeff)
    }

    /// Terms sorted strictly descending under `order` (a copy; canonical
    /// storage is order-agnostic).
    pub fn sorted_terms(&self, order: &OrderSpec) -> Vec<Term> {
        let mut out = self.terms.clone();
        out.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        out
    }

    /// Divides by the leading coefficient so the leading term under `order`
    /// becomes 1. Panics on zero.
    pub fn make_monic(&self, order: &OrderSpec) -> Polynomial {
        let lc = self
            .leading_coeff(order)
            .expect("cannot normalize the zero polynomial")
            .clone();
        self.scale(&lc.recip())
    }

    /// Primitive integer form: scales so all coefficients are integers with
    /// overall content 1, and the canonically-first term has positive sign.
    /// This keeps intermediate basis elements small and deterministic
    /// without leaving exact arithmetic.
    pub fn clear_content(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for t in &self.terms {
            den_lcm = den_lcm.lcm(t.coeff.denom());
        }
        let mut num_gcd = BigInt::zero();
        for t in &self.terms {
            let scaled = t.coeff.numer() * (&den_lcm / t.coeff.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        debug_assert!(!num_gcd.is_zero());
        let mut factor = Rational::new(den_lcm, num_gcd);
        // Sign convention: canonically-first term positive.
        if (&self.terms[0].coeff * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Renders with the ring's variable names, e.g. `x^2*y + 3/2*x*y^2`.
    /// Terms appear in canonical storage order.
    pub fn display<'a>(&self, ring: &'a Ring) -> PolynomialDisplay<'a> {
        assert_eq!(self.nvars, ring.nvars(), "ring dimension mismatch");
        PolynomialDisplay { terms: self.terms.clone(), ring }
    }

    /// Renders with terms sorted descending under `order`, so the leading
    /// term comes first regardless of the canonical storage order.
    pub fn display_under<'a>(&self, ring: &'a Ring, order: &OrderSpec) -> PolynomialDisplay<'a> {
        assert_eq!(self.nvars, ring.nvars(), "ring dimension mismatch");
        PolynomialDisplay { terms: self.sorted_terms(order), ring }
    }
}

pub struct PolynomialDisplay<'a> {
    terms: Vec<Term>,
    ring: &'a Ring,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { -t.coeff.clone() } else { t.coeff.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial.display(self.ring))?;
            } else {
                write!(f, "{}*{}", abs, t.monomial.display(self.ring))?;
            }
        }
        Ok(())
    }
}
