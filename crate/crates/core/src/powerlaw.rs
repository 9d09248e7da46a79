//! Discrete power-law fitting of degree samples.
//!
//! For each candidate lower cutoff the exponent is the maximum-likelihood
//! estimate of `P(k) = k^-alpha / zeta(alpha, xmin)`; the cutoff kept is the
//! one whose fitted tail is closest to the data in Kolmogorov-Smirnov
//! distance. Goodness of fit comes from a semi-parametric bootstrap where a
//! large p-value is consistent with the power-law hypothesis.

use num_traits::{Float, FromPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::report::round9;

/// Smallest usable sample accepted by the fitter.
pub const MIN_SAMPLES: usize = 10;
/// Smallest bootstrap replicate count.
pub const MIN_REPLICATES: usize = 100;
/// Draws from [`sample_powerlaw`] never exceed this value.
pub const MAX_DRAW: u64 = 1 << 62;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerLawFit<F = f64> {
    /// Positive exponent of `k^-alpha`.
    pub alpha: F,
    pub xmin: u64,
    /// KS distance between empirical and fitted distribution for `k >= xmin`.
    pub ks: F,
    /// Number of observations at or above `xmin`.
    pub n_tail: usize,
    pub p_value: Option<F>,
    /// Zero values discarded before fitting.
    pub zeros_dropped: usize,
}

impl<F: Float> PowerLawFit<F> {
    pub fn to_json(&self) -> serde_json::Value {
        let f = |x: F| round9(x.to_f64().unwrap_or(f64::NAN));
        json!({
            "alpha": f(self.alpha),
            "xmin": self.xmin,
            "ks": f(self.ks),
            "n_tail": self.n_tail,
            "p_value": self.p_value.map(f),
        })
    }
}

/// Scalar bound for the fitter.
pub trait FitFloat: Float + FromPrimitive + Send + Sync + std::fmt::Debug {}
impl<F: Float + FromPrimitive + Send + Sync + std::fmt::Debug> FitFloat for F {}

fn c<F: FitFloat>(x: f64) -> F {
    F::from_f64(x).unwrap()
}

/// Hurwitz zeta `sum_{k>=0} (q + k)^-s` for `s > 1`, `q > 0`, by direct
/// summation of the first terms plus an Euler-Maclaurin tail.
pub fn hurwitz_zeta<F: FitFloat>(s: F, q: F) -> F {
    const DIRECT: usize = 10;
    // B_2j / (2j)!
    const BERNOULLI: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
        1.0 / 74724249600.0,
    ];
    let one = F::one();
    let mut sum = F::zero();
    for k in 0..DIRECT {
        sum = sum + (q + c(k as f64)).powf(-s);
    }
    let a = q + c(DIRECT as f64);
    let a_s = a.powf(-s);
    sum = sum + a * a_s / (s - one) + a_s / c(2.0);
    // term_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1)
    let mut rising = s;
    let mut power = a_s / a;
    let a2 = a * a;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let term = c::<F>(*b) * rising * power;
        sum = sum + term;
        let m = c::<F>((2 * j + 1) as f64);
        rising = rising * (s + m) * (s + m + one);
        power = power / a2;
    }
    sum
}

/// `P(X >= k)` under the discrete power law with the given exponent and cutoff.
pub fn powerlaw_ccdf<F: FitFloat>(alpha: F, xmin: u64, k: u64) -> F {
    if k <= xmin {
        return F::one();
    }
    hurwitz_zeta(alpha, c(k as f64)) / hurwitz_zeta(alpha, c(xmin as f64))
}

/// Distinct values with multiplicities, ascending.
fn histogram(sorted: &[u64]) -> Vec<(u64, usize)> {
    let mut out: Vec<(u64, usize)> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some((v, n)) if *v == x => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Maximum-likelihood exponent for a tail whose smallest admissible value is
/// `xmin` and whose mean log is `mean_log`. Solves
/// `d/dalpha ln zeta(alpha, xmin) = -mean_log` by safeguarded secant.
fn mle_alpha<F: FitFloat>(xmin: u64, mean_log: F) -> Option<F> {
    let q: F = c(xmin as f64);
    let h = F::epsilon().cbrt();
    let score = |a: F| {
        let d = (hurwitz_zeta(a + h, q).ln() - hurwitz_zeta(a - h, q).ln()) / (h + h);
        d + mean_log
    };
    // score is increasing in alpha: -inf near 1, mean_log - ln(xmin) at infinity
    if mean_log <= q.ln() {
        return None;
    }
    let mut lo = F::one() + c::<F>(1e-6).max(h + h);
    let mut f_lo = score(lo);
    if f_lo >= F::zero() {
        return Some(lo);
    }
    let mut hi = c::<F>(3.0);
    let mut f_hi = score(hi);
    while f_hi < F::zero() {
        lo = hi;
        f_lo = f_hi;
        hi = F::one() + (hi - F::one()) * c(2.0);
        if hi > c(1e4) {
            return None;
        }
        f_hi = score(hi);
    }
    // Illinois variant of regula falsi
    let tol = F::epsilon().sqrt() * c(1e-2);
    let mut side = 0i8;
    for _ in 0..200 {
        let mid = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        let mid = if mid > lo && mid < hi { mid } else { (lo + hi) / c(2.0) };
        let f_mid = score(mid);
        if f_mid < F::zero() {
            lo = mid;
            f_lo = f_mid;
            if side == -1 {
                f_hi = f_hi / c(2.0);
            }
            side = -1;
        } else {
            hi = mid;
            f_hi = f_mid;
            if side == 1 {
                f_lo = f_lo / c(2.0);
            }
            side = 1;
        }
        if hi - lo < tol * hi {
            break;
        }
    }
    Some((lo + hi) / c(2.0))
}

/// Supremum over integers `k >= xmin` of `|F_n(k) - F(k)|` for a tail given as
/// a histogram whose first value is `xmin`.
fn ks_histogram<F: FitFloat>(tail: &[(u64, usize)], n: usize, alpha: F, xmin: u64) -> F {
    let z = hurwitz_zeta(alpha, c(xmin as f64));
    let n_f: F = c(n as f64);
    let mut emp_prev = F::zero();
    let mut cum = 0usize;
    let mut worst = F::zero();
    for &(v, count) in tail {
        // fitted CDF just below v and at v
        let upper = hurwitz_zeta(alpha, c(v as f64));
        let below = F::one() - upper / z;
        let at = F::one() - (upper - c::<F>(v as f64).powf(-alpha)) / z;
        cum += count;
        let emp = c::<F>(cum as f64) / n_f;
        if v > xmin {
            worst = worst.max((below - emp_prev).abs());
        }
        worst = worst.max((at - emp).abs());
        emp_prev = emp;
    }
    worst
}

/// KS distance of `values` (any order) against the law `(alpha, xmin)`,
/// restricted to values `>= xmin`.
pub fn ks_distance<F: FitFloat>(values: &[u64], alpha: F, xmin: u64) -> F {
    let mut tail: Vec<u64> = values.iter().copied().filter(|&x| x >= xmin).collect();
    tail.sort_unstable();
    let n = tail.len();
    let mut hist = histogram(&tail);
    if hist.first().map(|h| h.0) != Some(xmin) {
        hist.insert(0, (xmin, 0));
    }
    ks_histogram(&hist, n, alpha, xmin)
}

/// Fits a discrete power law to a sample of degrees. Zeros are dropped.
pub fn fit_discrete_powerlaw<F: FitFloat>(degrees: &[u64]) -> Result<PowerLawFit<F>> {
    let mut sorted: Vec<u64> = degrees.iter().copied().filter(|&x| x > 0).collect();
    let zeros_dropped = degrees.len() - sorted.len();
    if sorted.len() < MIN_SAMPLES {
        return Err(Error::TooFewSamples { needed: MIN_SAMPLES, got: sorted.len() });
    }
    sorted.sort_unstable();
    let hist = histogram(&sorted);
    if hist.len() < 2 {
        return Err(Error::DegenerateSample);
    }

    // suffix sums of count and log-sum per distinct value
    let mut suffix_n = vec![0usize; hist.len() + 1];
    let mut suffix_log = vec![F::zero(); hist.len() + 1];
    for i in (0..hist.len()).rev() {
        let (v, k) = hist[i];
        suffix_n[i] = suffix_n[i + 1] + k;
        suffix_log[i] = suffix_log[i + 1] + c::<F>(v as f64).ln() * c(k as f64);
    }

    let mut best: Option<PowerLawFit<F>> = None;
    // a tail with a single distinct value has no finite exponent
    for i in 0..hist.len() - 1 {
        let xmin = hist[i].0;
        let n_tail = suffix_n[i];
        let mean_log = suffix_log[i] / c(n_tail as f64);
        let Some(alpha) = mle_alpha::<F>(xmin, mean_log) else { continue };
        let ks = ks_histogram(&hist[i..], n_tail, alpha, xmin);
        if best.as_ref().is_none_or(|b| ks < b.ks) {
            best = Some(PowerLawFit { alpha, xmin, ks, n_tail, p_value: None, zeros_dropped });
        }
    }
    best.ok_or(Error::DegenerateSample)
}

/// Semi-parametric bootstrap p-value: the share of synthetic samples whose
/// refitted KS distance exceeds the observed one. Each synthetic sample
/// draws the tail from the fitted law and the body from the observed values
/// below `xmin`. Replicate `r` uses seed `seed + r`. A replicate whose
/// refit fails counts as not exceeding.
pub fn bootstrap_pvalue<F: FitFloat>(degrees: &[u64], fit: &PowerLawFit<F>, reps: usize, seed: u64) -> Result<F> {
    if reps < MIN_REPLICATES {
        return Err(Error::invalid(format!("bootstrap needs at least {MIN_REPLICATES} replicates, got {reps}")));
    }
    let positive: Vec<u64> = degrees.iter().copied().filter(|&x| x > 0).collect();
    let body: Vec<u64> = positive.iter().copied().filter(|&x| x < fit.xmin).collect();
    let n = positive.len();
    let tail_share = fit.n_tail as f64 / n as f64;
    let alpha = fit.alpha.to_f64().unwrap();
    let sampler = Sampler::new(alpha, fit.xmin)?;

    let exceed: Vec<bool> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(r));
            let synthetic: Vec<u64> = (0..n)
                .map(|_| {
                    if body.is_empty() || rng.gen::<f64>() < tail_share {
                        sampler.draw(&mut rng)
                    } else {
                        body[rng.gen_range(0..body.len())]
                    }
                })
                .collect();
            match fit_discrete_powerlaw::<F>(&synthetic) {
                Ok(refit) => refit.ks > fit.ks,
                Err(_) => false,
            }
        })
        .collect();
    let hits = exceed.into_iter().filter(|&e| e).count();
    Ok(c::<F>(hits as f64) / c(reps as f64))
}

/// Inverse-CDF sampler for the discrete power law.
#[derive(Clone, Debug)]
pub struct Sampler {
    alpha: f64,
    xmin: u64,
    norm: f64,
}

impl Sampler {
    pub fn new(alpha: f64, xmin: u64) -> Result<Self> {
        if alpha.is_nan() || alpha <= 1.0 || alpha.is_infinite() {
            return Err(Error::invalid(format!("power-law exponent must exceed 1, got {alpha}")));
        }
        if xmin < 1 {
            return Err(Error::invalid("power-law cutoff must be at least 1"));
        }
        Ok(Sampler { alpha, xmin, norm: hurwitz_zeta(alpha, xmin as f64) })
    }

    fn survival(&self, k: u64) -> f64 {
        hurwitz_zeta(self.alpha, k as f64) / self.norm
    }

    /// Largest `k` with `P(X >= k) >= u`, for `u` in `(0, 1]`.
    fn invert(&self, u: f64) -> u64 {
        let xmin = self.xmin;
        // continuous approximation as a starting guess
        let guess = (xmin as f64 - 0.5) * u.powf(-1.0 / (self.alpha - 1.0)) + 0.5;
        let guess = if guess.is_finite() { (guess as u64).clamp(xmin, MAX_DRAW) } else { MAX_DRAW };
        // invariant: survival(lo) >= u, survival(hi) < u
        let (mut lo, mut hi);
        if self.survival(guess) >= u {
            lo = guess;
            let mut step = 1u64;
            loop {
                let probe = lo.saturating_add(step).min(MAX_DRAW);
                if probe == lo {
                    return lo;
                }
                if self.survival(probe) < u {
                    hi = probe;
                    break;
                }
                lo = probe;
                step = step.saturating_mul(2);
            }
        } else {
            hi = guess;
            let mut step = 1u64;
            loop {
                let probe = hi.saturating_sub(step).max(xmin);
                if self.survival(probe) >= u {
                    lo = probe;
                    break;
                }
                hi = probe;
                step = step.saturating_mul(2);
            }
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.survival(mid) >= u {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        // 1 - [0, 1) lies in (0, 1]
        let u = 1.0 - rng.gen::<f64>();
        self.invert(u)
    }
}

/// `n` i.i.d. draws with `P(X = k)` proportional to `k^-alpha` for `k >= xmin`.
pub fn sample_powerlaw(alpha: f64, xmin: u64, n: usize, seed: u64) -> Result<Vec<u64>> {
    let sampler = Sampler::new(alpha, xmin)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n).map(|_| sampler.draw(&mut rng)).collect())
}
