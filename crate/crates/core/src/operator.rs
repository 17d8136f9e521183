//! Finite sums `sum_i c_i x^{g_i} e^{x^b}` with a fixed exponent `b`.
//!
//! The set is closed under `d/dx` and `x d/dx`, which is all the derivative
//! representations of the family need. Identities "for x > 0" are checked as
//! equalities of the exponent-to-coefficient maps after cancelling the common
//! exponential factor, so nothing here is evaluated numerically.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;


use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{sign_pow, Scalar};
use crate::stirling::{gstirling_explicit, gstirling_table, stirling2_table};

#[derive(Clone, Debug, PartialEq)]
pub struct ExpMonomialSum<T: Ord> {
    beta_exp: T,
    terms: BTreeMap<T, T>,
}

impl<T: Scalar + Ord> ExpMonomialSum<T> {
    /// The empty sum over `e^{x^beta_exp}`.
    pub fn new(beta_exp: T) -> Result<Self> {
        if beta_exp.is_zero() {
            return Err(Error::ZeroBeta);
        }
        Ok(Self {
            beta_exp,
            terms: BTreeMap::new(),
        })
    }

    /// `coeff * x^gamma * e^{x^beta_exp}`
    pub fn monomial(beta_exp: T, gamma: T, coeff: T) -> Result<Self> {
        let mut out = Self::new(beta_exp)?;
        out.add_term(gamma, coeff);
        Ok(out)
    }

    pub fn beta_exp(&self) -> &T {
        &self.beta_exp
    }

    /// Exponent -> coefficient, zero coefficients never stored.
    pub fn terms(&self) -> &BTreeMap<T, T> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, gamma: T, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(gamma) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn map_terms(&self, f: impl Fn(&T, &T, &mut Self)) -> Self {
        let mut out = Self {
            beta_exp: self.beta_exp.clone(),
            terms: BTreeMap::new(),
        };
        for (g, c) in &self.terms {
            f(g, c, &mut out);
        }
        out
    }

    /// `d/dx (c x^g e^{x^b}) = c g x^{g-1} e^{x^b} + c b x^{g+b-1} e^{x^b}`
    pub fn derivative(&self) -> Self {
        let b = self.beta_exp.clone();
        self.map_terms(|g, c, out| {
            out.add_term(g.clone() - T::one(), c.clone() * g.clone());
            out.add_term(g.clone() + b.clone() - T::one(), c.clone() * b.clone());
        })
    }

    /// `(x d/dx + shift)` applied termwise.
    pub fn euler_shift(&self, shift: &T) -> Self {
        let b = self.beta_exp.clone();
        self.map_terms(|g, c, out| {
            out.add_term(g.clone(), c.clone() * (g.clone() + shift.clone()));
            out.add_term(g.clone() + b.clone(), c.clone() * b.clone());
        })
    }

    /// Multiplies by `x^delta`.
    pub fn mul_x_pow(&self, delta: &T) -> Self {
        self.map_terms(|g, c, out| out.add_term(g.clone() + delta.clone(), c.clone()))
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map_terms(|g, c, out| out.add_term(g.clone(), c.clone() * factor.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |e, _| e.derivative())
    }
}

/// `sum_k coeffs[k] x^{step k}` as an exponent map.
fn spread<T: Scalar + Ord>(coeffs: &[T], step: &T) -> BTreeMap<T, T> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (step.clone() * T::from_count(k), c.clone()))
        .collect()
}

/// `P_n(x^beta) = (-1)^n x^{n-alpha} e^{-x^beta} (d/dx)^n (x^alpha e^{x^beta})`.
///
/// The derivative side is compared against the table coefficients and,
/// separately, against the explicit Dobinski-type coefficient sum.
pub fn verify_t4_first<T: Scalar + Ord>(alpha: &T, beta: &T, n: usize) -> Result<bool> {
    let seed = ExpMonomialSum::monomial(beta.clone(), alpha.clone(), T::one())?;
    let rhs = seed
        .nth_derivative(n)
        .mul_x_pow(&(T::from_count(n) - alpha.clone()))
        .scale(&sign_pow::<T>(n));
    let table = gstirling_table(alpha, beta, n);
    let lhs = spread(table.row(n), beta);
    let explicit: Vec<T> = (0..=n)
        .map(|k| gstirling_explicit(alpha, beta, n, k))
        .collect::<Result<_>>()?;
    Ok(*rhs.terms() == lhs && spread(&explicit, beta) == lhs)
}

/// `P_n(x^{-beta}) = x^{alpha+1} e^{-x^{-beta}} (d/dx)^n (x^{n-1-alpha} e^{x^{-beta}})`.
pub fn verify_t4_second<T: Scalar + Ord>(alpha: &T, beta: &T, n: usize) -> Result<bool> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let seed_exp = T::from_count(n) - T::one() - alpha.clone();
    let rhs = ExpMonomialSum::monomial(-beta.clone(), seed_exp, T::one())?
        .nth_derivative(n)
        .mul_x_pow(&(alpha.clone() + T::one()));
    let table = gstirling_table(alpha, beta, n);
    Ok(*rhs.terms() == spread(table.row(n), &-beta.clone()))
}

/// Both sides of the Bell-operator identity
/// `B_n(lambda + x^beta) = x^{-alpha} e^{-x^beta} (x d/dx - alpha/beta + lambda)^n (x^alpha e^{x^beta})`
/// as exponent maps.
pub fn bell_operator_sides<T: Scalar + Ord>(
    alpha: &T,
    beta: &T,
    lambda: &T,
    n: usize,
) -> Result<(BTreeMap<T, T>, BTreeMap<T, T>)> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    // B_n(lambda + y) = sum_k S(n,k) (lambda + y)^k, expanded in y.
    let s2 = stirling2_table::<T>(n);
    let shifted = Polynomial::linear(lambda.clone(), T::one());
    let bell = (0..=n).fold(Polynomial::zero(), |acc, k| {
        acc + shifted.pow(k).scale(&s2[n][k])
    });
    let lhs = spread(bell.coeffs(), beta);

    let shift = lambda.clone() - alpha.clone() / beta.clone();
    let mut e = ExpMonomialSum::monomial(beta.clone(), alpha.clone(), T::one())?;
    for _ in 0..n {
        e = e.euler_shift(&shift);
    }
    let rhs = e.mul_x_pow(&-alpha.clone()).terms().clone();
    Ok((lhs, rhs))
}

pub fn verify_bell_operator<T: Scalar + Ord>(alpha: &T, beta: &T, lambda: &T, n: usize) -> Result<bool> {
    let (lhs, rhs) = bell_operator_sides(alpha, beta, lambda, n)?;
    Ok(lhs == rhs)
}
