//! Coefficient triangles: generalized Stirling numbers and their inverse,
//! the classical Stirling numbers, Lah and r-Lah numbers, and partial
//! (r-)Bell polynomials.

use serde_json::json;

use crate::error::{Error, Result};
use crate::poly::{rising_poly, Polynomial};
use crate::scalar::{choose, factorial, format_rational, rising, sign_pow, Rational, Scalar};
use crate::series::{binomial_series, XSeries};

/// Lower-triangular table `S_{alpha,beta}(n, k)` for `0 <= k <= n <= nmax`.
#[derive(Clone, Debug, PartialEq)]
pub struct StirlingTable<T> {
    alpha: T,
    beta: T,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> StirlingTable<T> {
    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn beta(&self) -> &T {
        &self.beta
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    /// Panics when `k > n` or `n > nmax`.
    pub fn get(&self, n: usize, k: usize) -> &T {
        &self.rows[n][k]
    }

    /// `sum_k S(n, k) x^k`
    pub fn row_poly(&self, n: usize) -> Polynomial<T> {
        Polynomial::new(self.rows[n].clone())
    }

    /// Square lower-triangular matrix form, zeros above the diagonal.
    pub fn to_matrix(&self) -> Vec<Vec<T>> {
        let size = self.rows.len();
        self.rows
            .iter()
            .map(|r| {
                let mut full = r.clone();
                full.resize(size, T::zero());
                full
            })
            .collect()
    }
}

impl StirlingTable<Rational> {
    /// CSV with header `n,k,value`, one row per entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{}\n", format_rational(v)));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        json!({
            "alpha": format_rational(&self.alpha),
            "beta": format_rational(&self.beta),
            "rows": rows,
        })
    }
}

/// Builds the table row by row from
/// `S(m+1, j) = (m - alpha - beta j) S(m, j) - beta S(m, j-1)`.
pub fn gstirling_table<T: Scalar>(alpha: &T, beta: &T, nmax: usize) -> StirlingTable<T> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(nmax + 1);
    rows.push(vec![T::one()]);
    for m in 0..nmax {
        let prev = &rows[m];
        let next = (0..=m + 1)
            .map(|j| {
                let mut v = T::zero();
                if j <= m {
                    let w = T::from_count(m) - alpha.clone() - beta.clone() * T::from_count(j);
                    v = v + w * prev[j].clone();
                }
                if j >= 1 {
                    v = v - beta.clone() * prev[j - 1].clone();
                }
                v
            })
            .collect();
        rows.push(next);
    }
    StirlingTable {
        alpha: alpha.clone(),
        beta: beta.clone(),
        rows,
    }
}

/// Explicit alternating sum `(1/k!) sum_j (-1)^{k-j} C(k,j) <-alpha - beta j>_n`.
pub fn gstirling_explicit<T: Scalar>(alpha: &T, beta: &T, n: usize, k: usize) -> Result<T> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let sum = (0..=k).fold(T::zero(), |acc, j| {
        let base = -alpha.clone() - beta.clone() * T::from_count(j);
        acc + sign_pow::<T>(k - j) * choose::<T>(k, j) * rising(&base, n)
    });
    Ok(sum / factorial::<T>(k))
}

/// Column generating function route: `n! [t^n] (1/k!) ((1-t)^beta - 1)^k (1-t)^alpha`.
pub fn gstirling_series_table<T: Scalar>(alpha: &T, beta: &T, nmax: usize) -> StirlingTable<T> {
    let base = binomial_series(beta, nmax)
        .sub(&XSeries::one(nmax))
        .expect("same order");
    let weight = binomial_series(alpha, nmax);
    let mut rows: Vec<Vec<T>> = (0..=nmax).map(|n| vec![T::zero(); n + 1]).collect();
    let mut power = XSeries::one(nmax);
    for k in 0..=nmax {
        let column = power
            .mul(&weight)
            .expect("same order")
            .scale(&(T::one() / factorial::<T>(k)));
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            row[k] = column.egf_coeff(n).coeff(0);
        }
        power = power.mul(&base).expect("same order");
    }
    StirlingTable {
        alpha: alpha.clone(),
        beta: beta.clone(),
        rows,
    }
}

/// `S~(n, k) = (-1)^{n-k} S_{-alpha/beta, 1/beta}(n, k)`, the coefficients of
/// `x^n` in the `P_k` basis.
pub fn gstirling_inverse<T: Scalar>(alpha: &T, beta: &T, n: usize, k: usize) -> Result<T> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(gstirling_inverse_table(alpha, beta, n)?.get(n, k).clone())
}

pub fn gstirling_inverse_table<T: Scalar>(alpha: &T, beta: &T, nmax: usize) -> Result<StirlingTable<T>> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let a = -alpha.clone() / beta.clone();
    let b = T::one() / beta.clone();
    let mut table = gstirling_table(&a, &b, nmax);
    for (n, row) in table.rows.iter_mut().enumerate() {
        for (k, v) in row.iter_mut().enumerate() {
            *v = sign_pow::<T>(n - k) * v.clone();
        }
    }
    table.alpha = alpha.clone();
    table.beta = beta.clone();
    Ok(table)
}

/// Signed Stirling numbers of the first kind, `s(n+1,k) = s(n,k-1) - n s(n,k)`.
pub fn stirling1<T: Scalar>(n: usize, k: usize) -> Result<T> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(classical_triangle(n, |i, _| -T::from_count(i))[n][k].clone())
}

/// Stirling numbers of the second kind, `S(n+1,k) = S(n,k-1) + k S(n,k)`.
pub fn stirling2<T: Scalar>(n: usize, k: usize) -> Result<T> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(classical_triangle(n, |_, j| T::from_count(j))[n][k].clone())
}

pub fn stirling1_table<T: Scalar>(nmax: usize) -> Vec<Vec<T>> {
    classical_triangle(nmax, |i, _| -T::from_count(i))
}

pub fn stirling2_table<T: Scalar>(nmax: usize) -> Vec<Vec<T>> {
    classical_triangle(nmax, |_, j| T::from_count(j))
}

/// Rows of `c(i+1, j) = c(i, j-1) + w(i, j) c(i, j)`.
fn classical_triangle<T: Scalar>(nmax: usize, w: impl Fn(usize, usize) -> T) -> Vec<Vec<T>> {
    let mut rows = vec![vec![T::one()]];
    for i in 0..nmax {
        let prev = &rows[i];
        let next = (0..=i + 1)
            .map(|j| {
                let mut v = T::zero();
                if j <= i {
                    v = v + w(i, j) * prev[j].clone();
                }
                if j >= 1 {
                    v = v + prev[j - 1].clone();
                }
                v
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// Unsigned Lah number from its generating function `(1/k!) (t/(1-t))^k`.
pub fn lah<T: Scalar>(n: usize, k: usize) -> Result<T> {
    rlah(0, n, k)
}

/// r-Lah number `L_r(n, k)`: `sum_m L_r(m+r, k+r) t^m / m! = (1/k!) (t/(1-t))^k (1-t)^{-2r}`.
/// Zero when `k < r`.
pub fn rlah<T: Scalar>(r: usize, n: usize, k: usize) -> Result<T> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if k < r {
        return Ok(T::zero());
    }
    let (n, k) = (n - r, k - r);
    let geometric = binomial_series(&-T::one(), n)
        .sub(&XSeries::one(n))
        .expect("same order");
    let series = geometric
        .pow(k)
        .mul(&binomial_series(&-T::from_count(2 * r), n))
        .expect("same order")
        .scale(&(T::one() / factorial::<T>(k)));
    Ok(series.egf_coeff(n).coeff(0))
}

/// Partial Bell polynomial `B_{n,k}(a_1, a_2, ...)`; `a[0]` is `a_1`.
pub fn partial_bell<T: Scalar>(n: usize, k: usize, a: &[T]) -> Result<T> {
    partial_r_bell(0, n, k, a, &[])
}

/// Partial r-Bell polynomial `B^{(r)}_{n+r,k+r}(a; b)` as `n! [t^n]` of
/// `(1/k!) (sum_{j>=1} a_j t^j/j!)^k (sum_{j>=0} b_{j+1} t^j/j!)^r`.
///
/// `a` must supply `a_1..a_n` and, when `r > 0`, `b` must supply `b_1..b_{n+1}`.
pub fn partial_r_bell<T: Scalar>(r: usize, n: usize, k: usize, a: &[T], b: &[T]) -> Result<T> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if a.len() < n {
        return Err(Error::SequenceTooShort { name: "a", needed: n, got: a.len() });
    }
    if r > 0 && b.len() < n + 1 {
        return Err(Error::SequenceTooShort { name: "b", needed: n + 1, got: b.len() });
    }
    let egf = |values: &[T], shift: usize| {
        let mut terms = vec![T::zero(); shift];
        terms.extend(
            values
                .iter()
                .take(n + 1 - shift)
                .enumerate()
                .map(|(i, v)| v.clone() / factorial::<T>(i + shift)),
        );
        XSeries::from_scalars(n, terms)
    };
    let mut series = egf(a, 1)
        .pow(k)
        .scale(&(T::one() / factorial::<T>(k)));
    if r > 0 {
        series = series.mul(&egf(b, 0).pow(r)).expect("same order");
    }
    Ok(series.egf_coeff(n).coeff(0))
}

/// `<c>_1, <c>_2, ..., <c>_len`, the `a_j = <c>_j` argument sequence.
pub fn rising_sequence<T: Scalar>(c: &T, len: usize) -> Vec<T> {
    (1..=len).map(|j| rising(c, j)).collect()
}

/// Checks `S_{r alpha, beta}(n, k) = B^{(r)}_{n+r,k+r}(<-beta>_j; <-alpha>_{j-1})`
/// for every `k <= n <= nmax`.
pub fn verify_rbell_connection<T: Scalar>(alpha: &T, beta: &T, r: usize, nmax: usize) -> Result<bool> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let table = gstirling_table(&(alpha.clone() * T::from_count(r)), beta, nmax);
    let a = rising_sequence(&-beta.clone(), nmax);
    let b: Vec<T> = (0..=nmax).map(|j| rising(&-alpha.clone(), j)).collect();
    for n in 0..=nmax {
        for k in 0..=n {
            if partial_r_bell(r, n, k, &a, &b)? != *table.get(n, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Parameters `(alpha - (alpha'/beta') beta, beta/beta')` of the connection
/// table between the `(alpha, beta)` and `(alpha', beta')` families.
pub fn connection_params<T: Scalar>(alpha: &T, beta: &T, alpha2: &T, beta2: &T) -> Result<(T, T)> {
    if beta2.is_zero() {
        return Err(Error::ZeroBeta);
    }
    Ok((
        alpha.clone() - alpha2.clone() / beta2.clone() * beta.clone(),
        beta.clone() / beta2.clone(),
    ))
}

/// Where the alternating sign sits in a connection identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPlacement {
    /// `(-1)^j` with `j` the summation index.
    SummationIndex,
    /// `(-1)` raised to the free index (`n` for the rising-factorial identity,
    /// `k` for the coefficient identity).
    FreeIndex,
}

impl SignPlacement {
    pub const ALL: [SignPlacement; 2] = [SignPlacement::SummationIndex, SignPlacement::FreeIndex];

    fn sign<T: Scalar>(self, summed: usize, free: usize) -> T {
        match self {
            SignPlacement::SummationIndex => sign_pow(summed),
            SignPlacement::FreeIndex => sign_pow(free),
        }
    }
}

/// Outcome of the composition identities under one sign placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionCheck {
    pub placement: SignPlacement,
    /// First `(n, k)` where the coefficient identity fails.
    pub coefficient_mismatch: Option<(usize, usize)>,
    /// First `n` where the rising-factorial identity fails.
    pub rising_mismatch: Option<usize>,
}

impl CompositionCheck {
    pub fn holds(&self) -> bool {
        self.coefficient_mismatch.is_none() && self.rising_mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport {
    pub checks: Vec<CompositionCheck>,
}

impl CompositionReport {
    pub fn holds_with(&self, placement: SignPlacement) -> bool {
        self.checks
            .iter()
            .any(|c| c.placement == placement && c.holds())
    }

    /// Placements the exact comparison confirms.
    pub fn confirmed(&self) -> Vec<SignPlacement> {
        self.checks
            .iter()
            .filter(|c| c.holds())
            .map(|c| c.placement)
            .collect()
    }
}

/// Tests, for each sign placement, both composition identities
///
/// `S_{a,b}(n,k) = sum_j (-1)^j S_{a - (a'/b') b, b/b'}(n,j) S_{a',b'}(j,k)` and
/// `<-a - b x>_n = sum_j (-1)^j S_{a - (a'/b') b, b/b'}(n,j) <-a' - b' x>_j`
///
/// for all `k <= n <= nmax`.
pub fn verify_composition<T: Scalar>(
    alpha: &T,
    beta: &T,
    alpha2: &T,
    beta2: &T,
    nmax: usize,
) -> Result<CompositionReport> {
    let (ca, cb) = connection_params(alpha, beta, alpha2, beta2)?;
    let target = gstirling_table(alpha, beta, nmax);
    let middle = gstirling_table(&ca, &cb, nmax);
    let inner = gstirling_table(alpha2, beta2, nmax);
    let risings: Vec<Polynomial<T>> = (0..=nmax)
        .map(|j| rising_poly(&-alpha2.clone(), &-beta2.clone(), j))
        .collect();

    let checks = SignPlacement::ALL
        .iter()
        .map(|&placement| {
            let mut coefficient_mismatch = None;
            let mut rising_mismatch = None;
            for n in 0..=nmax {
                for k in 0..=n {
                    let sum = (k..=n).fold(T::zero(), |acc, j| {
                        acc + placement.sign::<T>(j, k) * middle.get(n, j).clone() * inner.get(j, k).clone()
                    });
                    if coefficient_mismatch.is_none() && sum != *target.get(n, k) {
                        coefficient_mismatch = Some((n, k));
                    }
                }
                let lhs = rising_poly(&-alpha.clone(), &-beta.clone(), n);
                let rhs = (0..=n).fold(Polynomial::zero(), |acc, j| {
                    let w = placement.sign::<T>(j, n) * middle.get(n, j).clone();
                    acc + risings[j].scale(&w)
                });
                if rising_mismatch.is_none() && lhs != rhs {
                    rising_mismatch = Some(n);
                }
            }
            CompositionCheck {
                placement,
                coefficient_mismatch,
                rising_mismatch,
            }
        })
        .collect();
    Ok(CompositionReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, pow, rational};

    /// Number of set partitions of `{0..n}` into exactly `k` blocks, by
    /// enumerating restricted growth strings.
    fn partitions_brute(n: usize, k: usize) -> i64 {
        fn go(pos: usize, n: usize, max: usize, k: usize) -> i64 {
            if pos == n {
                return (max == k) as i64;
            }
            (0..=max.min(k - 1))
                .map(|b| go(pos + 1, n, max.max(b + 1), k))
                .sum()
        }
        if n == 0 {
            return (k == 0) as i64;
        }
        if k == 0 {
            return 0;
        }
        go(0, n, 0, k)
    }

    #[test]
    fn explicit_examples() {
        let (a, b) = (rational(-7, 3), rational(5, 4));
        assert_eq!(gstirling_explicit(&a, &b, 0, 0).unwrap(), int(1));
        assert_eq!(gstirling_explicit(&int(1), &int(1), 2, 1).unwrap(), int(2));
        for n in 0..6 {
            assert_eq!(gstirling_explicit(&a, &b, n, n).unwrap(), pow(&-b.clone(), n));
        }
        assert_eq!(
            gstirling_explicit(&a, &b, 2, 3),
            Err(Error::IndexOutOfRange { n: 2, k: 3 })
        );
    }

    #[test]
    fn table_examples() {
        let t = gstirling_table(&int(1), &int(1), 2);
        assert_eq!(t.row(0), &[int(1)]);
        assert_eq!(t.row(1), &[int(-1), int(-1)]);
        // Hand recurrence and the explicit sum both give [0, 2, 1].
        assert_eq!(t.row(2), &[int(0), int(2), int(1)]);
        let (a, b) = (rational(2, 5), rational(-3, 7));
        let t = gstirling_table(&a, &b, 1);
        assert_eq!(t.row(1), &[-a.clone(), -b.clone()]);
    }

    #[test]
    fn table_invariants() {
        let (a, b) = (rational(-3, 2), rational(2, 3));
        let t = gstirling_table(&a, &b, 9);
        for n in 0..=9 {
            assert_eq!(*t.get(n, n), pow(&-b.clone(), n));
            assert_eq!(*t.get(n, 0), rising(&-a.clone(), n));
        }
    }

    #[test]
    fn three_routes_agree() {
        for (a, b) in [(rational(1, 3), int(-2)), (int(0), rational(1, 2)), (rational(-3, 2), int(2))] {
            let rec = gstirling_table(&a, &b, 8);
            let ser = gstirling_series_table(&a, &b, 8);
            assert_eq!(rec, ser);
            for n in 0..=8 {
                for k in 0..=n {
                    assert_eq!(gstirling_explicit(&a, &b, n, k).unwrap(), *rec.get(n, k));
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let (a, b) = (rational(5, 3), rational(-2, 7));
        assert_eq!(gstirling_inverse(&a, &b, 0, 0).unwrap(), int(1));
        assert_eq!(gstirling_inverse(&a, &b, 1, 1).unwrap(), -int(1) / b.clone());
        assert_eq!(gstirling_inverse(&a, &b, 1, 0).unwrap(), -a.clone() / b.clone());
        assert_eq!(gstirling_inverse(&a, &int(0), 1, 0), Err(Error::ZeroBeta));
        // (0, 1): P_n = (-x)^n, so x^n = (-1)^n P_n.
        for n in 0..6 {
            for k in 0..=n {
                let expected = if k == n { sign_pow(n) } else { int(0) };
                assert_eq!(gstirling_inverse(&int(0), &int(1), n, k).unwrap(), expected);
            }
        }
    }

    #[test]
    fn inverse_times_table_is_identity() {
        let (a, b) = (rational(-1, 2), rational(-1, 2));
        let s = gstirling_table(&a, &b, 8).to_matrix();
        let inv = gstirling_inverse_table(&a, &b, 8).unwrap().to_matrix();
        for i in 0..=8 {
            for j in 0..=8 {
                let v: Rational = (0..=8).map(|m| inv[i][m].clone() * s[m][j].clone()).sum();
                assert_eq!(v, if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn classical_stirling() {
        for n in 0..=7 {
            for k in 0..=n {
                assert_eq!(stirling2::<Rational>(n, k).unwrap(), int(partitions_brute(n, k)));
            }
            assert_eq!(stirling1::<Rational>(n, n).unwrap(), int(1));
        }
        assert_eq!(stirling2::<Rational>(4, 2).unwrap(), int(7));
        assert_eq!(stirling1::<Rational>(3, 1).unwrap(), int(2));
        assert_eq!(stirling1::<Rational>(5, 2).unwrap(), int(-50));
        assert!(stirling1::<Rational>(2, 3).is_err());
        assert!(stirling2::<Rational>(2, 3).is_err());
    }

    #[test]
    fn lah_numbers() {
        assert_eq!(lah::<Rational>(3, 2).unwrap(), int(6));
        for n in 1..=8usize {
            assert_eq!(lah::<Rational>(n, n).unwrap(), int(1));
            for k in 1..=n {
                // C(n-1, k-1) n! / k!
                let closed = choose::<Rational>(n - 1, k - 1) * factorial::<Rational>(n)
                    / factorial::<Rational>(k);
                assert_eq!(lah::<Rational>(n, k).unwrap(), closed);
            }
            assert_eq!(lah::<Rational>(n, 0).unwrap(), int(0));
        }
        assert_eq!(lah::<Rational>(0, 0).unwrap(), int(1));
        assert!(lah::<Rational>(1, 2).is_err());
    }

    #[test]
    fn rlah_matches_recurrence() {
        // L_r(n+1,k) = L_r(n,k-1) + (n+k) L_r(n,k), L_r(r,r) = 1
        for r in 0..=3usize {
            let nmax = r + 6;
            let mut rows: Vec<Vec<i64>> = vec![vec![0; nmax + 1]; nmax + 1];
            rows[r][r] = 1;
            for n in r..nmax {
                for k in r..=n + 1 {
                    let prev = if k >= 1 { rows[n][k - 1] } else { 0 };
                    rows[n + 1][k] = prev + (n + k) as i64 * rows[n][k];
                }
            }
            for n in r..=nmax {
                for k in 0..=n {
                    assert_eq!(rlah::<Rational>(r, n, k).unwrap(), int(rows[n][k]), "r={r} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn partial_bell_examples() {
        let a: Vec<Rational> = (1..=6).map(|i| rational(i, 3)).collect();
        for n in 0..=6 {
            assert_eq!(partial_bell(n, n, &a).unwrap(), pow(&a[0], n));
        }
        let b = vec![rational(5, 2)];
        for r in 0..=3 {
            assert_eq!(partial_r_bell(r, 0, 0, &[], &b).unwrap(), pow(&b[0], r));
        }
        // All-ones sequence gives Stirling numbers of the second kind.
        let ones = vec![int(1); 7];
        for n in 0..=7usize.min(6) {
            for k in 0..=n {
                assert_eq!(partial_bell(n, k, &ones).unwrap(), stirling2(n, k).unwrap());
            }
        }
        assert_eq!(
            partial_bell(4, 2, &a[..3]),
            Err(Error::SequenceTooShort { name: "a", needed: 4, got: 3 })
        );
        assert_eq!(
            partial_r_bell(1, 3, 2, &a, &vec![int(1); 3]),
            Err(Error::SequenceTooShort { name: "b", needed: 4, got: 3 })
        );
    }

    #[test]
    fn partial_r_bell_gives_u_table() {
        let half = rational(1, 2);
        let a = rising_sequence(&half, 6);
        let b: Vec<Rational> = (0..=6).map(|j| rising(&half, j)).collect();
        let t = gstirling_table(&-half.clone(), &-half.clone(), 6);
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(partial_r_bell(1, n, k, &a, &b).unwrap(), *t.get(n, k));
            }
        }
    }

    #[test]
    fn rbell_connection_examples() {
        assert!(verify_rbell_connection(&rational(3, 4), &int(-2), 0, 6).unwrap());
        assert!(verify_rbell_connection(&rational(-1, 2), &rational(-1, 2), 1, 8).unwrap());
        assert!(verify_rbell_connection(&rational(1, 3), &int(-2), 3, 6).unwrap());
        assert_eq!(verify_rbell_connection(&int(1), &int(0), 1, 3), Err(Error::ZeroBeta));
    }

    #[test]
    fn composition_resolves_sign_on_summation_index() {
        let cases = [
            (int(1), int(-1), int(0), int(-2)),
            (rational(-1, 2), rational(-1, 2), int(0), int(-1)),
            (rational(2, 3), int(3), rational(2, 3), int(3)),
        ];
        for (a, b, a2, b2) in cases {
            let report = verify_composition(&a, &b, &a2, &b2, 6).unwrap();
            assert!(report.holds_with(SignPlacement::SummationIndex));
            assert!(!report.holds_with(SignPlacement::FreeIndex));
        }
        assert_eq!(
            verify_composition(&int(1), &int(1), &int(0), &int(0), 3),
            Err(Error::ZeroBeta)
        );
    }

    #[test]
    fn same_family_connection_is_diagonal() {
        let (a, b) = (rational(-5, 3), rational(7, 2));
        let (ca, cb) = connection_params(&a, &b, &a, &b).unwrap();
        assert_eq!((ca.clone(), cb.clone()), (int(0), int(1)));
        let t = gstirling_table(&ca, &cb, 6);
        for n in 0..=6 {
            for k in 0..=n {
                let expected = if k == n { sign_pow(n) } else { int(0) };
                assert_eq!(*t.get(n, k), expected);
            }
        }
    }

    #[test]
    fn nonnegative_for_nonpositive_parameters() {
        for (a, b) in [(int(0), int(-1)), (rational(-1, 2), rational(-3, 2)), (int(-2), rational(-1, 2))] {
            let t = gstirling_table(&a, &b, 12);
            assert!(t.rows().iter().flatten().all(|v| *v >= int(0)));
        }
    }

    #[test]
    fn export_formats() {
        let t = gstirling_table(&int(0), &int(-1), 2);
        assert_eq!(t.to_csv(), "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,2\n2,2,1\n");
        let t = gstirling_table(&rational(1, 2), &int(1), 1);
        assert_eq!(
            t.to_json().to_string(),
            r#"{"alpha":"1/2","beta":"1","rows":[["1"],["-1/2","-1"]]}"#
        );
    }
}
