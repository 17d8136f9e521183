//! The polynomial family `P_n^(alpha,beta)`, its named specializations, and
//! the basis changes and recurrences relating them.
//!
//! Construction always goes through the triangular recurrence in
//! [`gstirling_table`]; Lemma-type steps, the addition formula and the basis
//! changes are independent cross-checks against it.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{falling_poly, rising_poly, Polynomial};
use crate::scalar::{
    choose, exp_rational, factorial, int, pow, rising, sign_pow, Rational, Scalar,
};
use crate::stirling::{
    connection_params, gstirling_inverse_table, gstirling_table, lah, stirling1_table,
    stirling2_table, SignPlacement, StirlingTable,
};

/// `(alpha, beta)` with `beta != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyParams<T> {
    alpha: T,
    beta: T,
}

impl<T: Scalar> FamilyParams<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::ZeroBeta);
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn beta(&self) -> &T {
        &self.beta
    }

    pub fn table(&self, nmax: usize) -> StirlingTable<T> {
        gstirling_table(&self.alpha, &self.beta, nmax)
    }

    /// `P_n(x) = sum_k S(n, k) x^k`
    pub fn poly(&self, n: usize) -> Polynomial<T> {
        self.table(n).row_poly(n)
    }

    /// `P_0 ..= P_nmax` from a single table.
    pub fn polys(&self, nmax: usize) -> Vec<Polynomial<T>> {
        let table = self.table(nmax);
        (0..=nmax).map(|n| table.row_poly(n)).collect()
    }

    /// `P_{n+1} = (n - alpha - beta x) P_n - beta x P_n'`
    pub fn lemma1_step(&self, p_n: &Polynomial<T>, n: usize) -> Polynomial<T> {
        let factor = Polynomial::linear(T::from_count(n) - self.alpha.clone(), -self.beta.clone());
        let correction = p_n.derivative().shift(1).scale(&self.beta);
        &(&factor * p_n) - &correction
    }

    /// Coefficients `c_j` with `P_n = sum_j c_j B_j(x)` in the Bell basis:
    /// `c_j = beta^j sum_{k>=j} (-1)^k |s(n,k)| C(k,j) alpha^{k-j}`.
    pub fn to_bell_basis(&self, n: usize) -> Vec<T> {
        let s1 = stirling1_table::<T>(n);
        (0..=n)
            .map(|j| {
                let inner = (j..=n).fold(T::zero(), |acc, k| {
                    acc + sign_pow::<T>(k)
                        * s1[n][k].abs()
                        * choose::<T>(k, j)
                        * pow(&self.alpha, k - j)
                });
                pow(&self.beta, j) * inner
            })
            .collect()
    }

    /// `sum_k (-1)^k S(n,k) P_k = sum_k C(n,k) alpha^{n-k} beta^k B_k` for all `n <= nmax`.
    pub fn verify_p2_forward(&self, nmax: usize) -> bool {
        let ps = self.polys(nmax);
        let bells = bell_polys::<T>(nmax);
        let s2 = stirling2_table::<T>(nmax);
        (0..=nmax).all(|n| {
            let lhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
                acc + ps[k].scale(&(sign_pow::<T>(k) * s2[n][k].clone()))
            });
            let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
                let w = choose::<T>(n, k) * pow(&self.alpha, n - k) * pow(&self.beta, k);
                acc + bells[k].scale(&w)
            });
            lhs == rhs
        })
    }

    /// Row `n` of the inverse table: `x^n = sum_k S~(n,k) P_k(x)`.
    pub fn monomial_to_p(&self, n: usize) -> Vec<T> {
        gstirling_inverse_table(&self.alpha, &self.beta, n)
            .expect("beta is nonzero")
            .row(n)
            .to_vec()
    }

    /// Coefficients `c_j` with `P_n^(self) = sum_j c_j P_j^(target)`, namely
    /// `c_j = (-1)^j S_{alpha - (alpha'/beta') beta, beta/beta'}(n, j)`.
    pub fn rebase(&self, target: &FamilyParams<T>, n: usize) -> Vec<T> {
        let (ca, cb) = connection_params(&self.alpha, &self.beta, &target.alpha, &target.beta)
            .expect("target beta is nonzero");
        gstirling_table(&ca, &cb, n)
            .row(n)
            .iter()
            .enumerate()
            .map(|(j, v)| sign_pow::<T>(j) * v.clone())
            .collect()
    }

    /// Expansion of `P_n^(alpha,beta)` in `P_k^(-alpha,-beta)` with Lah
    /// numbers, checked for every `n <= nmax` under each sign placement.
    /// Returns the placements that reproduce the family exactly.
    pub fn lah_expansion_signs(&self, nmax: usize) -> Vec<SignPlacement> {
        let ps = self.polys(nmax);
        let mirrored = FamilyParams {
            alpha: -self.alpha.clone(),
            beta: -self.beta.clone(),
        }
        .polys(nmax);
        SignPlacement::ALL
            .into_iter()
            .filter(|placement| {
                (0..=nmax).all(|n| {
                    let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
                        let sign = match placement {
                            SignPlacement::SummationIndex => sign_pow::<T>(k),
                            SignPlacement::FreeIndex => sign_pow::<T>(n),
                        };
                        acc + mirrored[k].scale(&(sign * lah::<T>(n, k).expect("k <= n")))
                    });
                    rhs == ps[n]
                })
            })
            .collect()
    }

    /// `P_{n+m}` from the double sum
    /// `sum_j sum_k C(n,j) <m - beta k>_{n-j} S(m,k) x^k P_j(x)`.
    pub fn addition(&self, n: usize, m: usize) -> Polynomial<T> {
        let ps = self.polys(n.max(m));
        let table = self.table(m);
        let mut out = Polynomial::zero();
        for (j, p_j) in ps.iter().enumerate().take(n + 1) {
            for k in 0..=m {
                let base = T::from_count(m) - self.beta.clone() * T::from_count(k);
                let w = choose::<T>(n, j) * rising(&base, n - j) * table.get(m, k).clone();
                out = out + p_j.shift(k).scale(&w);
            }
        }
        out
    }

    /// The `m = 1` form of the addition formula:
    /// `P_{n+1} = -sum_j C(n,j) (alpha (n-j)! + beta x <1-beta>_{n-j}) P_j`.
    pub fn addition_single_step(&self, n: usize) -> Polynomial<T> {
        let ps = self.polys(n);
        let one_minus_beta = T::one() - self.beta.clone();
        ps.iter().enumerate().fold(Polynomial::zero(), |acc, (j, p_j)| {
            let factor = Polynomial::linear(
                self.alpha.clone() * factorial::<T>(n - j),
                self.beta.clone() * rising(&one_minus_beta, n - j),
            );
            acc - (&factor * p_j).scale(&choose::<T>(n, j))
        })
    }

    /// Both sides of `<-alpha - beta x>_n = sum_j S(n,j) (x)_j`.
    pub fn rising_expansion(&self, n: usize) -> RisingExpansion<T> {
        let table = self.table(n);
        let lhs = rising_poly(&-self.alpha.clone(), &-self.beta.clone(), n);
        let rhs = (0..=n).fold(Polynomial::zero(), |acc, j| {
            acc + falling_poly::<T>(j).scale(table.get(n, j))
        });
        RisingExpansion { lhs, rhs }
    }
}

impl FamilyParams<Rational> {
    /// Approximates `P_n(x) = e^{-x} sum_k <-alpha - beta k>_n x^k / k!`.
    ///
    /// The partial sum is accumulated exactly and truncated once a ratio-test
    /// bound on the remaining tail (after the `e^{-x}` weight) drops below
    /// `epsilon`. Negative `x` is accepted; the bound then majorizes by `|x|`
    /// and convergence is slower. The only rounding is the final conversion.
    pub fn eval_dobinski(&self, n: usize, x: &Rational, epsilon: f64) -> Result<f64> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidEpsilon);
        }
        let xf = x.to_f64().unwrap_or(f64::INFINITY);
        let ln_x = xf.abs().ln();
        // |<c>_n| <= (|alpha| + |beta| k + n)^n bounds every weight.
        let a_bound = self.alpha.abs().to_f64().unwrap_or(f64::MAX) + n as f64;
        let b_bound = self.beta.abs().to_f64().unwrap_or(f64::MAX);
        let ln_u = |k: usize| {
            let ln_kfact: f64 = (1..=k).map(|i| (i as f64).ln()).sum();
            let growth = if n == 0 { 0.0 } else { n as f64 * (a_bound + b_bound * k as f64).ln() };
            growth + k as f64 * ln_x - ln_kfact
        };
        let ratio = |k: usize| {
            if x.is_zero() {
                return 0.0;
            }
            let growth = if n == 0 {
                1.0
            } else {
                ((a_bound + b_bound * (k + 1) as f64) / (a_bound + b_bound * k as f64)).powi(n as i32)
            };
            growth * xf.abs() / (k + 1) as f64
        };

        let mut sum = Rational::zero();
        let mut power = Rational::from_integer(1.into());
        let mut kfact = Rational::from_integer(1.into());
        for k in 0usize.. {
            let weight = rising(&(-self.alpha.clone() - self.beta.clone() * int(k as i64)), n);
            sum += weight * &power / &kfact;
            let rho = ratio(k);
            if rho < 1.0 {
                let tail = (ln_u(k) + rho.ln() - (1.0 - rho).ln() - xf).exp();
                if tail < epsilon {
                    break;
                }
            }
            power *= x;
            kfact *= int(k as i64 + 1);
        }
        Ok((exp_rational(&-x.clone(), 96) * sum).to_f64().unwrap_or(f64::NAN))
    }
}

/// Both sides of the rising-factorial expansion, as polynomials in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct RisingExpansion<T> {
    pub lhs: Polynomial<T>,
    pub rhs: Polynomial<T>,
}

impl<T: Scalar> RisingExpansion<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Bell polynomial `B_n(x) = sum_k S(n,k) x^k`.
pub fn bell_poly<T: Scalar>(n: usize) -> Polynomial<T> {
    Polynomial::new(stirling2_table::<T>(n).swap_remove(n))
}

pub fn bell_polys<T: Scalar>(nmax: usize) -> Vec<Polynomial<T>> {
    stirling2_table::<T>(nmax).into_iter().map(Polynomial::new).collect()
}

fn fixed<T: Scalar>(alpha: (i64, i64), beta: (i64, i64)) -> FamilyParams<T> {
    let frac = |(p, q): (i64, i64)| T::from_int(p) / T::from_int(q);
    FamilyParams::new(frac(alpha), frac(beta)).expect("nonzero beta")
}

/// `U_n = P_n^(-1/2,-1/2)`
pub fn u_params<T: Scalar>() -> FamilyParams<T> {
    fixed((-1, 2), (-1, 2))
}

/// `V_n = P_n^(-3/2,-1/2)`
pub fn v_params<T: Scalar>() -> FamilyParams<T> {
    fixed((-3, 2), (-1, 2))
}

pub fn family_u<T: Scalar>(n: usize) -> Polynomial<T> {
    u_params::<T>().poly(n)
}

pub fn family_v<T: Scalar>(n: usize) -> Polynomial<T> {
    v_params::<T>().poly(n)
}

pub fn laguerre_params<T: Scalar>(lambda: &T) -> FamilyParams<T> {
    FamilyParams::new(-lambda.clone() - T::one(), -T::one()).expect("nonzero beta")
}

/// `L_n^(lambda) = P_n^(-lambda-1,-1) / n!`.
///
/// This is the `exp(+xt/(1-t))` normalization; the classical Laguerre
/// polynomial is this one evaluated at `-x`.
pub fn family_laguerre<T: Scalar>(lambda: &T, n: usize) -> Polynomial<T> {
    laguerre_params(lambda)
        .poly(n)
        .scale(&(T::one() / factorial::<T>(n)))
}

pub fn assoc_lah_params<T: Scalar>(m: usize) -> Result<FamilyParams<T>> {
    if m < 1 {
        return Err(Error::OutsideHypothesis("associated Lah order m must be >= 1".into()));
    }
    FamilyParams::new(T::zero(), -T::from_count(m))
}

/// Associated Lah polynomial `P_n^(0,-m)`, `m >= 1`.
pub fn family_assoc_lah<T: Scalar>(m: usize, n: usize) -> Result<Polynomial<T>> {
    Ok(assoc_lah_params::<T>(m)?.poly(n))
}
