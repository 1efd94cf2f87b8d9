//! Tropical Laurent polynomials `max_j (a_j + j·x)`.

use std::collections::BTreeMap;

use crate::polytope::{upper_envelope, LatticePolytope};
use crate::{Error, Rational, Result, TropicalScalar};

/// A single term `a_j x^j` with finite coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponent: Vec<i64>,
    pub coefficient: Rational,
}

impl Monomial {
    pub fn new(exponent: Vec<i64>, coefficient: Rational) -> Self {
        Monomial { exponent, coefficient }
    }

    fn value_at(&self, x: &[Rational]) -> Rational {
        self.exponent
            .iter()
            .zip(x)
            .fold(self.coefficient.clone(), |acc, (&j, xi)| acc + xi * Rational::from_integer(j.into()))
    }
}

/// A nonempty finite tropical sum of monomials in `n` variables, with
/// pairwise distinct exponents kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalPolynomial {
    n: usize,
    terms: Vec<Monomial>,
}

impl TropicalPolynomial {
    pub fn new(n: usize, mut terms: Vec<Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("polynomial dimension must be at least 1".into()));
        }
        if terms.is_empty() {
            return Err(Error::Input("polynomial has no terms".into()));
        }
        if let Some(t) = terms.iter().find(|t| t.exponent.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: t.exponent.len() });
        }
        terms.sort();
        if let Some(w) = terms.windows(2).find(|w| w[0].exponent == w[1].exponent) {
            return Err(Error::Input(format!("duplicate exponent {:?}", w[0].exponent)));
        }
        Ok(TropicalPolynomial { n, terms })
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, Rational)>,
    {
        Self::new(n, terms.into_iter().map(|(e, c)| Monomial::new(e, c)).collect())
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.n, found })
        }
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<TropicalScalar> {
        self.check_dim(x.len())?;
        let best = self.terms.iter().map(|t| t.value_at(x)).max().expect("nonempty");
        Ok(TropicalScalar::Finite(best))
    }

    /// Indices of the terms attaining the maximum at `x`.
    pub fn maximizing_terms(&self, x: &[Rational]) -> Result<Vec<usize>> {
        self.check_dim(x.len())?;
        let values: Vec<Rational> = self.terms.iter().map(|t| t.value_at(x)).collect();
        let best = values.iter().max().expect("nonempty");
        Ok(values.iter().enumerate().filter(|(_, v)| *v == best).map(|(i, _)| i).collect())
    }

    /// Tropical product: exponents add, coefficients of colliding exponents
    /// combine by `max`.
    pub fn trop_product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.n)?;
        let mut acc: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let e: Vec<i64> = a.exponent.iter().zip(&b.exponent).map(|(x, y)| x + y).collect();
                let c = &a.coefficient + &b.coefficient;
                acc.entry(e)
                    .and_modify(|old| {
                        if c > *old {
                            *old = c.clone();
                        }
                    })
                    .or_insert(c);
            }
        }
        Self::from_terms(self.n, acc)
    }

    pub fn exponents(&self) -> Vec<Vec<i64>> {
        self.terms.iter().map(|t| t.exponent.clone()).collect()
    }

    fn coefficients(&self) -> Vec<Rational> {
        self.terms.iter().map(|t| t.coefficient.clone()).collect()
    }

    pub fn newton_polytope(&self) -> LatticePolytope {
        LatticePolytope::from_points(&self.exponents())
    }

    /// Value of the concave hull of the lifted exponents above `exponent`.
    pub fn envelope_at(&self, exponent: &[i64]) -> Option<Rational> {
        upper_envelope(&self.exponents(), &self.coefficients(), exponent)
    }

    /// Terms that attain the maximum at some point of `R^n`: exactly those
    /// whose lifted point lies on the upper hull. Terms attaining it only on
    /// a lower-dimensional set are kept.
    pub fn active_terms(&self) -> Vec<Monomial> {
        let exps = self.exponents();
        let coeffs = self.coefficients();
        self.terms
            .iter()
            .filter(|t| upper_envelope(&exps, &coeffs, &t.exponent).as_ref() == Some(&t.coefficient))
            .cloned()
            .collect()
    }

    pub fn restrict_to_active(&self) -> Self {
        TropicalPolynomial { n: self.n, terms: self.active_terms() }
    }

    /// Whether the two polynomials define the same function on `R^n`.
    ///
    /// Two polynomials agree as functions iff their Newton polytopes agree
    /// and their concave envelopes agree at every exponent of either one.
    pub fn functionally_equal(&self, other: &Self) -> Result<bool> {
        self.check_dim(other.n)?;
        if self.newton_polytope() != other.newton_polytope() {
            return Ok(false);
        }
        let mut union = self.exponents();
        union.extend(other.exponents());
        union.sort();
        union.dedup();
        Ok(union.iter().all(|e| self.envelope_at(e) == other.envelope_at(e)))
    }
}
