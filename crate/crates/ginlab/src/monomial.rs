use std::fmt;

use crate::ring::Ring;

/// Hard cap on total degree. Exponent arithmetic is checked against this
/// bound (and against `u32` overflow), so degree computations can never
/// silently wrap.
pub const MAX_TOTAL_DEGREE: u32 = 1_000_000;

/// A monomial in `nvars` variables: an exponent vector with a cached total
/// degree. Equality and hashing are structural. There is deliberately no
/// `Ord` implementation: monomial comparison always goes through an explicit
/// [`OrderSpec`](crate::order::OrderSpec).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

fn checked_degree(exps: &[u32]) -> u32 {
    let mut total: u64 = 0;
    for &e in exps {
        total += u64::from(e);
    }
    assert!(
        total <= u64::from(MAX_TOTAL_DEGREE),
        "total degree {total} exceeds the cap {MAX_TOTAL_DEGREE}"
    );
    total as u32
}

impl Monomial {
    /// Builds a monomial from an exponent vector.
    ///
    /// Panics if the vector is empty or the total degree exceeds
    /// [`MAX_TOTAL_DEGREE`].
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(!exps.is_empty(), "monomial needs at least one variable");
        let degree = checked_degree(&exps);
        Monomial { exps, degree }
    }

    /// The constant monomial `1`.
    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The single variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial::new(exps)
    }

    /// Builds a monomial from `(variable index, exponent)` pairs; indices not
    /// mentioned get exponent zero.
    pub fn from_pairs(nvars: usize, pairs: &[(usize, u32)]) -> Self {
        let mut exps = vec![0u32; nvars];
        for &(i, e) in pairs {
            assert!(i < nvars, "variable index {i} out of range");
            exps[i] = exps[i].checked_add(e).expect("exponent overflow");
        }
        Monomial::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Componentwise product. Panics on dimension mismatch or degree
    /// overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial::new(exps)
    }

    /// Componentwise maximum: the least common multiple.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(exps)
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide
    /// `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial::new(exps))
    }

    /// Whether the two monomials share no variable: `lcm = product`.
    pub fn coprime(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// The exchange move `self * x_i / x_j`, defined when `x_j` divides
    /// `self`. For `i < j` this is the elementary move whose closure defines
    /// Borel-fixedness in characteristic zero.
    pub fn exchange(&self, i: usize, j: usize) -> Option<Monomial> {
        assert!(i < self.nvars() && j < self.nvars(), "variable index out of range");
        if self.exps[j] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[j] -= 1;
        exps[i] = exps[i].checked_add(1).expect("exponent overflow");
        Some(Monomial::new(exps))
    }

    /// Plain lexicographic comparison of exponent vectors. This is an
    /// internal canonical key for storage and display, not a monomial order
    /// by itself (it ignores degree).
    pub(crate) fn plain_lex_cmp(&self, other: &Monomial) -> std::cmp::Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Renders the monomial with the ring's variable names, e.g. `x^2*y`.
    /// The constant monomial renders as `1`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> MonomialDisplay<'a> {
        assert_eq!(self.nvars(), ring.nvars(), "ring dimension mismatch");
        MonomialDisplay { m: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.var_name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, in descending
/// plain-lexicographic order (so `x1^d` first, `xn^d` last). The order is a
/// fixed enumeration convention; callers that need a monomial order apply
/// one explicitly.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "need at least one variable");
    assert!(d <= MAX_TOTAL_DEGREE, "degree exceeds cap");
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        current[pos] = 0;
        return;
    }
    // Descending choice for the leading exponent keeps the enumeration in
    // descending plain-lex order.
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
        current[pos] = 0;
    }
}

/// Number of monomials of degree `d` in `nvars` variables: `C(d+n-1, n-1)`.
pub fn count_monomials_of_degree(nvars: usize, d: u32) -> usize {
    let n = nvars as u128;
    let d = d as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 1..n {
        num *= d + k;
        den *= k;
    }
    (num / den) as usize
}
