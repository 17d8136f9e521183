//! Real-root counting and isolation with Sturm chains, and the real-rootedness
//! and log-concavity checks built on them.

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::poly::Polynomial;
use crate::scalar::{format_rational, rational, Rational, Scalar};

fn sign<T: Scalar>(v: &T) -> Ordering {
    v.partial_cmp(&T::zero()).expect("scalar comparison")
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `p, p', -rem(p, p'), ...` with every member rescaled to a leading
/// coefficient of `+-1`. For input with repeated roots every member is
/// divided by `gcd(p, p')`.
#[derive(Clone, Debug, PartialEq)]
pub struct SturmChain<T> {
    polys: Vec<Polynomial<T>>,
}

impl<T: Scalar> SturmChain<T> {
    pub fn new(p: &Polynomial<T>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.normalize_positive()];
        let d = p.derivative();
        if !d.is_zero() {
            polys.push(d.normalize_positive());
        }
        while polys.len() >= 2 {
            let k = polys.len();
            let (_, r) = polys[k - 2].div_rem(&polys[k - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push((-r).normalize_positive());
        }
        // With repeated roots the last member is gcd(p, p'). Dividing it out
        // leaves a chain without common zeros, so counts stay correct when an
        // endpoint is itself a root.
        let last = polys.last().expect("nonempty").clone();
        if last.degree().unwrap_or(0) > 0 {
            polys = polys
                .iter()
                .map(|q| q.div_rem(&last).map(|(d, _)| d.normalize_positive()))
                .collect::<Result<_>>()?;
        }
        Ok(Self { polys })
    }

    pub fn polys(&self) -> &[Polynomial<T>] {
        &self.polys
    }

    pub fn variations_at(&self, x: &T) -> usize {
        variations(self.polys.iter().map(|p| sign(&p.eval(x))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.polys.iter().map(|p| sign(p.leading().expect("nonzero"))))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.polys.iter().map(|p| {
            let s = sign(p.leading().expect("nonzero"));
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_between(&self, a: &T, b: &T) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_total(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Number of distinct real roots.
pub fn count_real_roots<T: Scalar>(p: &Polynomial<T>) -> Result<usize> {
    Ok(SturmChain::new(p)?.count_total())
}

/// Whether the real roots, counted with multiplicity, account for the whole
/// degree.
pub fn all_roots_real<T: Scalar>(p: &Polynomial<T>) -> Result<bool> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let g = p.gcd(&p.derivative());
    let (q, _) = p.div_rem(&g)?;
    if count_real_roots(&q)? != q.degree().unwrap_or(0) {
        return Ok(false);
    }
    if g.degree() == Some(0) {
        Ok(true)
    } else {
        all_roots_real(&g)
    }
}

pub fn square_free_part<T: Scalar>(p: &Polynomial<T>) -> Result<Polynomial<T>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_rem(&g)?.0)
}

fn is_square_free<T: Scalar>(p: &Polynomial<T>) -> bool {
    p.gcd(&p.derivative()).degree() == Some(0)
}

/// A power of two bounding every root in absolute value.
///
/// Uses Fujiwara's bound `2 max_k |a_{n-k} / a_n|^{1/k}` with the exponent
/// estimated in floating point and padded by one doubling; falls back to
/// Cauchy's `1 + max |a_i / a_n|` when a ratio does not fit in an `f64`.
fn root_bound<T: Scalar>(p: &Polynomial<T>) -> T {
    let c = p.coeffs();
    let n = c.len() - 1;
    let lead = c[n].abs();
    let ratios: Vec<T> = c[..n].iter().map(|a| a.abs() / lead.clone()).collect();
    let mut exponent = 0i64;
    for (k, r) in ratios.iter().rev().enumerate() {
        if r.is_zero() {
            continue;
        }
        match r.to_f64().filter(|v| v.is_finite() && *v > 0.0) {
            Some(v) => exponent = exponent.max((v.log2() / (k + 1) as f64).ceil() as i64 + 2),
            None => {
                let max = ratios
                    .iter()
                    .fold(T::zero(), |m, v| if *v > m { v.clone() } else { m });
                return T::one() + max;
            }
        }
    }
    (0..exponent).fold(T::one(), |acc, _| acc * two::<T>())
}

fn two<T: Scalar>() -> T {
    T::one() + T::one()
}

/// One half-open interval `(a, b]` per distinct real root, sorted, each of
/// width at most `width`. A root hit exactly by a bisection point is returned
/// as the degenerate interval `(r, r)`.
pub fn isolate_roots<T: Scalar>(p: &Polynomial<T>, width: &T) -> Result<Vec<(T, T)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_square_free(p) {
        return Err(Error::NotSquareFree);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(p)?;
    let m = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-m.clone(), m)];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count_between(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            if p.eval(&b).is_zero() {
                out.push((b.clone(), b));
                continue;
            }
            if b.clone() - a.clone() <= *width {
                out.push((a, b));
                continue;
            }
        }
        let mid = (a.clone() + b.clone()) / two();
        // Pushed right first so the left half is processed first.
        stack.push((mid.clone(), b));
        stack.push((a, mid));
    }
    Ok(out)
}

/// Shrinks `(a, b]` around its single root of `p` until it holds no root of `q`.
fn separate<T: Scalar>(p: &SturmChain<T>, q: &SturmChain<T>, mut a: T, mut b: T) -> (T, T) {
    while a != b && q.count_between(&a, &b) > 0 {
        let mid = (a.clone() + b.clone()) / two();
        if p.polys()[0].eval(&mid).is_zero() {
            return (mid.clone(), mid);
        }
        if p.count_between(&a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    (a, b)
}

/// Whether every gap between consecutive roots of `p` holds exactly one root
/// of `q`, with no root of `q` outside them. Both must be square-free and
/// coprime; a shared root is reported as `false`.
pub fn interlaces<T: Scalar>(p: &Polynomial<T>, q: &Polynomial<T>) -> Result<bool> {
    if p.gcd(q).degree() != Some(0) {
        return Ok(false);
    }
    let unit = T::one();
    let roots = isolate_roots(p, &unit)?;
    let (pc, qc) = (SturmChain::new(p)?, SturmChain::new(q)?);
    let isolated: Vec<(T, T)> = roots
        .into_iter()
        .map(|(a, b)| separate(&pc, &qc, a, b))
        .collect();
    if isolated.is_empty() {
        return Ok(qc.count_total() == 0);
    }
    let below = qc.variations_at_neg_inf() - qc.variations_at(&isolated[0].0);
    let above = qc.variations_at(&isolated[isolated.len() - 1].1) - qc.variations_at_pos_inf();
    if below != 0 || above != 0 {
        return Ok(false);
    }
    Ok(isolated
        .windows(2)
        .all(|w| qc.count_between(&w[0].1, &w[1].0) == 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    A,
    ATilde,
    Neither,
}

impl Region {
    /// `A`: `(beta-1)^2 + 4 alpha beta >= 0`, `beta < 0`, `alpha <= 2`.
    /// `A-tilde`: `beta > 0`, `alpha >= 1`.
    pub fn classify<T: Scalar>(alpha: &T, beta: &T) -> Self {
        let four = two::<T>() * two::<T>();
        let b1 = beta.clone() - T::one();
        let disc = b1.clone() * b1 + four * alpha.clone() * beta.clone();
        if disc >= T::zero() && *beta < T::zero() && *alpha <= two() {
            Region::A
        } else if *beta > T::zero() && *alpha >= T::one() {
            Region::ATilde
        } else {
            Region::Neither
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Region::A => "A",
            Region::ATilde => "A-tilde",
            Region::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeResult<T> {
    pub n: usize,
    pub all_real: bool,
    /// Whether the theorem claims real-rootedness at this degree.
    pub asserted: bool,
    pub roots: Vec<(T, T)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegionReport<T> {
    pub params: FamilyParams<T>,
    pub n_checked: usize,
    pub region: Region,
    pub results: Vec<DegreeResult<T>>,
}

impl<T: Scalar> RegionReport<T> {
    /// No asserted degree fails.
    pub fn holds(&self) -> bool {
        self.results.iter().all(|r| !r.asserted || r.all_real)
    }
}

impl RegionReport<Rational> {
    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                let roots: Vec<Value> = r
                    .roots
                    .iter()
                    .map(|(a, b)| json!([format_rational(a), format_rational(b)]))
                    .collect();
                json!({
                    "n": r.n,
                    "all_real": r.all_real,
                    "asserted": r.asserted,
                    "roots": roots,
                })
            })
            .collect();
        json!({
            "alpha": format_rational(self.params.alpha()),
            "beta": format_rational(self.params.beta()),
            "region": self.region.as_str(),
            "results": results,
        })
    }
}

/// Largest degree the real-rootedness theorem covers, `None` for unbounded.
pub fn asserted_degree_limit<T: Scalar>(alpha: &T, beta: &T) -> Option<usize> {
    match Region::classify(alpha, beta) {
        Region::A => None,
        Region::ATilde => {
            let mut k = 0usize;
            while T::from_count(k) < *alpha {
                k += 1;
            }
            Some(k)
        }
        Region::Neither => Some(0),
    }
}

pub fn check_theorem3_with_width<T: Scalar>(
    params: &FamilyParams<T>,
    nmax: usize,
    width: &T,
) -> Result<RegionReport<T>> {
    let region = Region::classify(params.alpha(), params.beta());
    let limit = asserted_degree_limit(params.alpha(), params.beta());
    let results = params
        .polys(nmax)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, p)| {
            Ok(DegreeResult {
                n,
                all_real: all_roots_real(&p)?,
                asserted: limit.map_or(true, |l| n <= l),
                roots: isolate_roots(&square_free_part(&p)?, width)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(RegionReport {
        params: params.clone(),
        n_checked: nmax,
        region,
        results,
    })
}

/// Root intervals are refined to width `1/1024`.
pub fn check_theorem3(params: &FamilyParams<Rational>, nmax: usize) -> Result<RegionReport<Rational>> {
    check_theorem3_with_width(params, nmax, &rational(1, 1024))
}

/// `S(n,k)^2 >= (1 + 1/k)(1 + 1/(n-k)) S(n,k+1) S(n,k-1)` for `1 <= k <= n-1`,
/// stated for `alpha <= 0`, `beta < 0`.
pub fn check_newton_logconcave<T: Scalar>(params: &FamilyParams<T>, n: usize) -> Result<bool> {
    if *params.alpha() > T::zero() || *params.beta() >= T::zero() || n < 2 {
        return Err(Error::OutsideHypothesis(
            "log-concavity needs alpha <= 0, beta < 0 and n >= 2".into(),
        ));
    }
    let table = params.table(n);
    let s = table.row(n);
    Ok((1..n).all(|k| {
        let kk = T::from_count(k);
        let nk = T::from_count(n - k);
        let factor = (T::one() + T::one() / kk) * (T::one() + T::one() / nk);
        s[k].clone() * s[k].clone() >= factor * s[k + 1].clone() * s[k - 1].clone()
    }))
}
