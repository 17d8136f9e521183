//! Truncated power series in `t` with polynomial-in-`x` coefficients.
//!
//! This is the ground-truth engine: every generating-function statement about
//! the family is recomputed here by plain series arithmetic, independently of
//! the triangular recurrence used for construction.


use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{binom, factorial, sign_pow, Scalar};
use crate::stirling::gstirling_table;

/// Keeps the powers `t^0 ..= t^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct XSeries<T> {
    coeffs: Vec<Polynomial<T>>,
}

impl<T: Scalar> XSeries<T> {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<Polynomial<T>>) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Polynomial::one())
    }

    pub fn constant(order: usize, p: Polynomial<T>) -> Self {
        Self::new(order, vec![p])
    }

    /// Series whose coefficients are constant polynomials.
    pub fn from_scalars(order: usize, values: Vec<T>) -> Self {
        Self::new(order, values.into_iter().map(Polynomial::constant).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial<T>] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Polynomial<T> {
        self.coeffs.get(n).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// `n! [t^n]`, the exponential-generating-function reading.
    pub fn egf_coeff(&self, n: usize) -> Polynomial<T> {
        self.coeff(n).scale(&factorial(n))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.clone())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![Polynomial::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial<T>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| {
            acc.mul(self).expect("same order")
        })
    }

    /// `d/dt`; the top coefficient is lost, so the order drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.scale(&T::from_count(n)))
            .collect::<Vec<_>>();
        let order = self.order().saturating_sub(1);
        Self::new(order, coeffs)
    }

    /// `sum_k s^k / k!`, defined when the constant term is zero.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut result = Self::one(order);
        let mut power = Self::one(order);
        for k in 1..=order {
            power = power.mul(self)?.scale(&(T::one() / T::from_count(k)));
            result = result.add(&power)?;
        }
        Ok(result)
    }
}

/// `(1 - t)^a = sum_n binom(a, n) (-t)^n`.
pub fn binomial_series<T: Scalar>(a: &T, order: usize) -> XSeries<T> {
    XSeries::from_scalars(
        order,
        (0..=order).map(|n| sign_pow::<T>(n) * binom(a, n)).collect(),
    )
}

/// The generating function `(1-t)^alpha exp(x((1-t)^beta - 1))`.
pub fn generating_function<T: Scalar>(alpha: &T, beta: &T, order: usize) -> Result<XSeries<T>> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let inner = binomial_series(beta, order)
        .sub(&XSeries::one(order))?
        .mul_poly(&Polynomial::x());
    binomial_series(alpha, order).mul(&inner.exp()?)
}

/// `P_0 ..= P_nmax` read off the generating function.
pub fn gf_polynomials<T: Scalar>(alpha: &T, beta: &T, nmax: usize) -> Result<Vec<Polynomial<T>>> {
    let gf = generating_function(alpha, beta, nmax)?;
    Ok((0..=nmax).map(|n| gf.egf_coeff(n)).collect())
}

/// Checks `(d/dt)^m F = F (1-t)^{-m} P_m(x (1-t)^beta)` as truncated series.
///
/// The left side loses `m` orders to differentiation, so both sides are
/// compared at `order - m`.
pub fn verify_t2<T: Scalar>(alpha: &T, beta: &T, m: usize, order: usize) -> Result<bool> {
    if m > order {
        return Err(Error::OrderTooLow { m, order });
    }
    let f = generating_function(alpha, beta, order)?;
    let lhs = (0..m).fold(f.clone(), |s, _| s.derivative());

    let table = gstirling_table(alpha, beta, m);
    let mut inner = XSeries::zero(order);
    for k in 0..=m {
        let weight = Polynomial::monomial(table.get(m, k).clone(), k);
        let term = binomial_series(&(beta.clone() * T::from_count(k)), order).mul_poly(&weight);
        inner = inner.add(&term)?;
    }
    let rhs = f
        .mul(&binomial_series(&-T::from_count(m), order))?
        .mul(&inner)?;
    Ok(lhs == rhs.truncate(order - m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    fn scalars(v: &[Rational]) -> Vec<Polynomial<Rational>> {
        v.iter().cloned().map(Polynomial::constant).collect()
    }

    #[test]
    fn binomial_series_examples() {
        assert_eq!(binomial_series(&int(0), 3), XSeries::one(3));
        assert_eq!(binomial_series(&int(1), 2).coeffs(), scalars(&[int(1), int(-1), int(0)]).as_slice());
        assert_eq!(
            binomial_series(&rational(1, 2), 2).coeffs(),
            scalars(&[int(1), rational(-1, 2), rational(-1, 8)]).as_slice()
        );
    }

    #[test]
    fn mul_examples() {
        let s = binomial_series(&rational(2, 3), 5).mul_poly(&Polynomial::linear(int(1), int(2)));
        assert_eq!(s.mul(&XSeries::one(5)).unwrap(), s);
        let a = XSeries::from_scalars(1, vec![int(1), int(-1)]);
        let b = XSeries::from_scalars(1, vec![int(1), int(1)]);
        assert_eq!(a.mul(&b).unwrap(), XSeries::one(1));
        let inv = binomial_series(&rational(3, 5), 8).mul(&binomial_series(&rational(-3, 5), 8)).unwrap();
        assert_eq!(inv, XSeries::one(8));
        assert_eq!(a.mul(&XSeries::one(2)), Err(Error::OrderMismatch(1, 2)));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(XSeries::<Rational>::zero(4).exp().unwrap(), XSeries::one(4));
        let s = XSeries::new(2, vec![Polynomial::zero(), Polynomial::x()]);
        let e = s.exp().unwrap();
        assert_eq!(e.coeff(1), Polynomial::x());
        assert_eq!(e.coeff(2), Polynomial::monomial(rational(1, 2), 2));
        assert_eq!(XSeries::<Rational>::one(2).exp(), Err(Error::NonzeroConstantTerm));

        // exp(x((1-t)^{-1} - 1)), 2! [t^2] = x^2 + 2x
        let inner = binomial_series(&int(-1), 4)
            .sub(&XSeries::one(4))
            .unwrap()
            .mul_poly(&Polynomial::x());
        let p2 = inner.exp().unwrap().egf_coeff(2);
        assert_eq!(p2, Polynomial::new(vec![int(0), int(2), int(1)]));
    }

    #[test]
    fn gf_polynomials_examples() {
        let (a, b) = (rational(-2, 3), rational(5, 2));
        let ps = gf_polynomials(&a, &b, 4).unwrap();
        assert_eq!(ps[0], Polynomial::one());
        assert_eq!(ps[1], Polynomial::linear(-a.clone(), -b.clone()));
        let ps = gf_polynomials(&int(0), &int(1), 6).unwrap();
        for (n, p) in ps.iter().enumerate() {
            assert_eq!(*p, Polynomial::monomial(sign_pow(n), n));
        }
        assert_eq!(gf_polynomials(&int(1), &int(0), 3), Err(Error::ZeroBeta));
    }

    #[test]
    fn t2_examples() {
        assert!(verify_t2(&rational(1, 3), &int(-2), 0, 4).unwrap());
        assert!(verify_t2(&rational(-1, 2), &rational(-1, 2), 3, 8).unwrap());
        assert!(verify_t2(&int(2), &int(3), 2, 6).unwrap());
        assert_eq!(verify_t2(&int(2), &int(0), 1, 3), Err(Error::ZeroBeta));
        assert_eq!(verify_t2(&int(2), &int(1), 4, 3), Err(Error::OrderTooLow { m: 4, order: 3 }));
    }

    #[test]
    fn t2_detects_a_wrong_right_side() {
        // Dropping the (1-t)^{-m} factor must break the identity for m >= 1.
        // P_1(x(1-t)^b) = -a - b x (1-t)^b
        let (a, b) = (int(1), int(2));
        let f = generating_function(&a, &b, 6).unwrap();
        let p1_shifted = binomial_series(&b, 6)
            .mul_poly(&Polynomial::monomial(-b.clone(), 1))
            .add(&XSeries::constant(6, Polynomial::constant(-a.clone())))
            .unwrap();
        let right = f
            .mul(&binomial_series(&int(-1), 6))
            .unwrap()
            .mul(&p1_shifted)
            .unwrap();
        let wrong = f.mul(&p1_shifted).unwrap();
        assert_eq!(f.derivative(), right.truncate(5));
        assert_ne!(f.derivative(), wrong.truncate(5));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_series(order: usize) -> impl Strategy<Value = XSeries<Rational>> {
            proptest::collection::vec(
                proptest::collection::vec((-5i64..5, 1i64..4), 0..3),
                order,
            )
            .prop_map(move |rows| {
                let mut coeffs = vec![Polynomial::zero()];
                coeffs.extend(rows.into_iter().map(|cs| {
                    Polynomial::new(cs.into_iter().map(|(p, q)| rational(p, q)).collect())
                }));
                XSeries::new(order, coeffs)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]
            #[test]
            fn exp_turns_sums_into_products(a in small_series(5), b in small_series(5)) {
                let lhs = a.add(&b).unwrap().exp().unwrap();
                let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn leading_coefficient_and_constant_term(
                ap in -6i64..6, aq in 1i64..4, bp in -6i64..6, bq in 1i64..4
            ) {
                prop_assume!(bp != 0);
                let (a, b) = (rational(ap, aq), rational(bp, bq));
                let ps = gf_polynomials(&a, &b, 6).unwrap();
                for (n, p) in ps.iter().enumerate() {
                    prop_assert_eq!(p.degree(), Some(n));
                    prop_assert_eq!(p.leading().unwrap(), &crate::scalar::pow(&-b.clone(), n));
                    prop_assert_eq!(p.coeff(0), crate::scalar::rising(&-a.clone(), n));
                }
            }
        }
    }
}
