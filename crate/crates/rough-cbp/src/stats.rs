//! Empirical estimators and analytic-vs-empirical comparison reports:
//! survival curves, empirical Laplace transforms, tail-exponent fits, and
//! z-test tables.
//!
//! Censoring: tail fits must not extend past the smallest censored
//! observation, where the empirical survival stops being exact. Call
//! sites clip the upper quantile with [`censor_safe_q_hi`]; below that
//! frontier censored values enter the survival as right-censored lower
//! bounds and the estimate is unbiased.

use crate::{Error, Real, Result};

/// Empirical survival `P{X > x}` with its binomial standard error.
pub fn empirical_survival<R: Real>(samples: &[R], x: R) -> Result<(R, R)> {
    if samples.is_empty() {
        return Err(Error::domain("empty sample list".to_string()));
    }
    let n = R::of(samples.len() as f64);
    let count = samples.iter().filter(|&&s| s > x).count();
    let p = R::of(count as f64) / n;
    let se = (p * (R::one() - p) / n).sqrt();
    Ok((p, se))
}

/// Empirical Laplace transform: mean of `e^{-lambda x}` with the
/// population-deviation standard error `sd/sqrt(N)`.
pub fn empirical_laplace<R: Real>(samples: &[R], lambda: R) -> Result<(R, R)> {
    if samples.is_empty() {
        return Err(Error::domain("empty sample list".to_string()));
    }
    if !(lambda >= R::zero()) {
        return Err(Error::domain(format!("lambda = {lambda} must be >= 0")));
    }
    let n = R::of(samples.len() as f64);
    let mut sum = R::zero();
    let mut sumsq = R::zero();
    for &s in samples {
        let v = (-lambda * s).exp();
        sum += v;
        sumsq += v * v;
    }
    let mean = sum / n;
    let var = (sumsq / n - mean * mean).max(R::zero());
    Ok((mean, (var / n).sqrt()))
}

/// Sample mean with the population-deviation standard error.
pub fn empirical_mean<R: Real>(samples: &[R]) -> Result<(R, R)> {
    if samples.is_empty() {
        return Err(Error::domain("empty sample list".to_string()));
    }
    let n = R::of(samples.len() as f64);
    let mut sum = R::zero();
    let mut sumsq = R::zero();
    for &s in samples {
        sum += s;
        sumsq += s * s;
    }
    let mean = sum / n;
    let var = (sumsq / n - mean * mean).max(R::zero());
    Ok((mean, (var / n).sqrt()))
}

/// Least-squares fit of the log empirical survival against log abscissa.
#[derive(Debug, Clone, Copy)]
pub struct SlopeFit<R> {
    pub slope: R,
    pub stderr: R,
    /// Number of order statistics in the fit window.
    pub points: usize,
}

/// Default tail window: the asymptotic statements only bite past the 90th
/// percentile, and the top 0.1% is too noisy.
pub const TAIL_Q_LO: f64 = 0.90;
pub const TAIL_Q_HI: f64 = 0.999;

/// Log-log slope of the empirical survival over the quantile window
/// `[q_lo, q_hi]`.
pub fn loglog_slope<R: Real>(samples: &[R], q_lo: R, q_hi: R) -> Result<SlopeFit<R>> {
    if !(q_lo > R::zero() && q_lo < q_hi && q_hi < R::one()) {
        return Err(Error::domain(format!(
            "quantile window ({q_lo}, {q_hi}) must satisfy 0 < q_lo < q_hi < 1"
        )));
    }
    let n = samples.len();
    let mut sorted: Vec<R> = samples.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("NaN in samples"));

    let i_lo = (q_lo.as_f64() * n as f64).ceil() as usize;
    let i_hi = ((q_hi.as_f64() * n as f64).floor() as usize).min(n.saturating_sub(2));
    if i_hi < i_lo || i_hi - i_lo + 1 < 100 {
        return Err(Error::estimation(format!(
            "only {} tail points in the quantile window; need at least 100",
            i_hi.saturating_sub(i_lo) + usize::from(i_hi >= i_lo)
        )));
    }

    let nf = R::of(n as f64);
    let m = i_hi - i_lo + 1;
    let mut xs = Vec::with_capacity(m);
    let mut ys = Vec::with_capacity(m);
    for i in i_lo..=i_hi {
        let x = sorted[i];
        if !(x > R::zero()) {
            return Err(Error::domain("tail samples must be positive".to_string()));
        }
        let surv = R::of((n - i - 1) as f64) / nf;
        xs.push(x.ln());
        ys.push(surv.ln());
    }
    let mf = R::of(m as f64);
    let x_mean = xs.iter().copied().sum::<R>() / mf;
    let y_mean = ys.iter().copied().sum::<R>() / mf;
    let mut sxx = R::zero();
    let mut sxy = R::zero();
    for (&x, &y) in xs.iter().zip(&ys) {
        sxx += (x - x_mean) * (x - x_mean);
        sxy += (x - x_mean) * (y - y_mean);
    }
    // sequential summation of m identical values already perturbs the mean
    // by up to m*eps, so the rounding floor of sxx is ~ m^3 eps^2 x^2
    let degenerate = mf.powi(3) * (R::epsilon() * (R::one() + x_mean.abs())).powi(2) * R::of(4.0);
    if sxx <= degenerate {
        return Err(Error::estimation(
            "degenerate regression: no spread in tail abscissae".to_string(),
        ));
    }
    let slope = sxy / sxx;
    let mut ss_res = R::zero();
    for (&x, &y) in xs.iter().zip(&ys) {
        let r = y - y_mean - slope * (x - x_mean);
        ss_res += r * r;
    }
    let dof = R::of((m - 2) as f64);
    // survival-curve residuals are strongly positively correlated, which
    // makes the i.i.d. OLS error wildly optimistic; the sampling error of
    // a tail-index fit on k order statistics scales like |slope|/sqrt(k)
    // (the Hill rate), so report that as the floor
    let ols = (ss_res / dof / sxx).sqrt();
    let hill = slope.abs() / mf.sqrt();
    Ok(SlopeFit { slope, stderr: ols.max(hill), points: m })
}

/// Clip a tail-window upper quantile below the censoring frontier.
///
/// `values` are the observed magnitudes with their censoring flags; the
/// empirical survival is exact only below the smallest censored
/// observation, so the window must end there.
pub fn censor_safe_q_hi<R: Real>(values: &[(R, bool)], q_hi: R) -> R {
    let min_censored = values
        .iter()
        .filter(|(_, c)| *c)
        .map(|(v, _)| *v)
        .fold(R::infinity(), |a, b| a.min(b));
    if min_censored == R::infinity() {
        return q_hi;
    }
    let n = values.len();
    let below = values.iter().filter(|(v, _)| *v < min_censored).count();
    // keep a small margin below the frontier
    let frontier = R::of(below as f64 / n as f64) - R::of(0.002);
    q_hi.min(frontier)
}

/// Which estimator a report row applies to its samples.
#[derive(Debug, Clone, Copy)]
pub enum Estimator<R> {
    /// Empirical `P{X > x}`.
    SurvivalAbove(R),
    /// Empirical `E[e^{-lambda X}]`.
    LaplaceAt(R),
    /// Sample mean.
    Mean,
    /// Log-log tail slope over a quantile window.
    TailSlope { q_lo: R, q_hi: R },
}

/// One requested comparison: a named analytic value, the samples, the
/// estimator to apply, and an absolute tolerance that passes the row even
/// when the z-score is large (for checks with known finite-n bias).
#[derive(Debug, Clone)]
pub struct RowSpec<'a, R> {
    pub name: String,
    pub analytic: R,
    pub samples: &'a [R],
    pub estimator: Estimator<R>,
    pub abs_tol: R,
}

/// One evaluated comparison row.
#[derive(Debug, Clone)]
pub struct ReportRow<R> {
    pub name: String,
    pub analytic: R,
    pub empirical: R,
    pub std_error: R,
    pub z: R,
    pub pass: bool,
}

/// A batch of analytic-vs-empirical comparisons plus a parameter echo.
#[derive(Debug, Clone)]
pub struct ComparisonReport<R> {
    pub rows: Vec<ReportRow<R>>,
    pub metadata: Vec<(String, String)>,
}

impl<R: Real> ComparisonReport<R> {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn make_row<R: Real>(name: String, analytic: R, empirical: R, se: R, abs_tol: R) -> ReportRow<R> {
    let diff = empirical - analytic;
    let z = if se > R::zero() {
        diff / se
    } else if diff == R::zero() {
        R::zero()
    } else {
        diff.signum() * R::infinity()
    };
    let pass = z.abs() <= R::of(3.0) || diff.abs() <= abs_tol;
    ReportRow { name, analytic, empirical, std_error: se, z, pass }
}

/// Evaluate every row; deterministic in the input order.
pub fn build_report<R: Real>(
    specs: &[RowSpec<'_, R>],
    metadata: Vec<(String, String)>,
) -> Result<ComparisonReport<R>> {
    let mut rows = Vec::with_capacity(specs.len());
    for spec in specs {
        let (emp, se) = match spec.estimator {
            Estimator::SurvivalAbove(x) => empirical_survival(spec.samples, x)?,
            Estimator::LaplaceAt(l) => empirical_laplace(spec.samples, l)?,
            Estimator::Mean => empirical_mean(spec.samples)?,
            Estimator::TailSlope { q_lo, q_hi } => {
                let fit = loglog_slope(spec.samples, q_lo, q_hi)?;
                (fit.slope, fit.stderr)
            }
        };
        rows.push(make_row(spec.name.clone(), spec.analytic, emp, se, spec.abs_tol));
    }
    Ok(ComparisonReport { rows, metadata })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn survival_examples() {
        let s = [1.0, 2.0, 3.0, 4.0];
        let (p, se) = empirical_survival(&s, 2.5).unwrap();
        assert_eq!(p, 0.5);
        assert_eq!(se, 0.25);
        assert_eq!(empirical_survival(&s, 0.0).unwrap(), (1.0, 0.0));
        assert_eq!(empirical_survival(&s, 9.0).unwrap(), (0.0, 0.0));
        assert!(empirical_survival::<f64>(&[], 1.0).is_err());
    }

    #[test]
    fn survival_nonincreasing_in_x() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let samples: Vec<f64> = (0..500).map(|_| rng.gen_range(0.0..10.0)).collect();
        let mut prev = 1.1;
        for k in 0..40 {
            let (p, _) = empirical_survival(&samples, 0.25 * k as f64).unwrap();
            assert!(p <= prev);
            prev = p;
        }
    }

    #[test]
    fn laplace_examples() {
        assert_eq!(empirical_laplace(&[3.0, 9.0], 0.0).unwrap(), (1.0, 0.0));
        let (m, se) = empirical_laplace(&[2.0], 1.0).unwrap();
        assert!((m - (-2.0f64).exp()).abs() < 1e-15);
        assert_eq!(se, 0.0);
        let (m, se) = empirical_laplace(&[1.0, 3.0], 1.0).unwrap();
        let e1 = (-1.0f64).exp();
        let e3 = (-3.0f64).exp();
        assert!((m - 0.5 * (e1 + e3)).abs() < 1e-15);
        let half_range = 0.5 * (e1 - e3);
        assert!((se - half_range / 2.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn estimators_are_permutation_invariant() {
        let a = [3.0, 1.0, 4.0, 1.5, 9.0, 2.6];
        let mut b = a;
        b.reverse();
        let (ma, sa): (f64, f64) = empirical_laplace(&a, 0.7).unwrap();
        let (mb, sb) = empirical_laplace(&b, 0.7).unwrap();
        assert!((ma - mb).abs() < 1e-15 && (sa - sb).abs() < 1e-15);
        assert_eq!(
            empirical_survival(&a, 2.0).unwrap(),
            empirical_survival(&b, 2.0).unwrap()
        );
    }

    fn pareto_samples(exponent: f64, n: usize, seed: u64) -> Vec<f64> {
        // P{X > x} = x^-exponent on x >= 1
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
                u.powf(-1.0 / exponent)
            })
            .collect()
    }

    #[test]
    fn slope_recovers_exact_power_law() {
        let samples = pareto_samples(2.0, 100_000, 3);
        let fit = loglog_slope(&samples, 0.5, 0.99).unwrap();
        assert!((fit.slope + 2.0).abs() < 0.05, "slope {}", fit.slope);
    }

    #[test]
    fn slope_recovers_grid_of_exponents() {
        for (i, expo) in [0.33, 0.5, 1.0, 2.0].into_iter().enumerate() {
            let samples = pareto_samples(expo, 100_000, 10 + i as u64);
            let fit = loglog_slope(&samples, TAIL_Q_LO, TAIL_Q_HI).unwrap();
            assert!(
                (fit.slope + expo).abs() < 2.0 * fit.stderr + 0.02,
                "exponent {expo}: slope {} +- {}",
                fit.slope,
                fit.stderr
            );
        }
    }

    #[test]
    fn slope_unstable_for_exponential_data() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let samples: Vec<f64> = (0..100_000)
            .map(|_| -rng.gen_range(f64::MIN_POSITIVE..1.0f64).ln())
            .collect();
        let a = loglog_slope(&samples, 0.5, 0.9).unwrap();
        let b = loglog_slope(&samples, 0.95, 0.999).unwrap();
        assert!((a.slope - b.slope).abs() > 0.3, "{} vs {}", a.slope, b.slope);
    }

    #[test]
    fn slope_errors() {
        // constant data: no spread
        let samples = vec![2.0; 10_000];
        assert!(matches!(
            loglog_slope(&samples, 0.5, 0.99),
            Err(Error::Estimation(_))
        ));
        // too few points in the window
        let samples: Vec<f64> = (1..200).map(|k| k as f64).collect();
        assert!(loglog_slope(&samples, 0.9, 0.999).is_err());
        // bad windows
        assert!(loglog_slope(&samples, 0.0, 0.5).is_err());
        assert!(loglog_slope(&samples, 0.9, 0.2).is_err());
    }

    #[test]
    fn censor_frontier_clips_window() {
        let mut values: Vec<(f64, bool)> = (1..=1000).map(|k| (k as f64, false)).collect();
        assert_eq!(censor_safe_q_hi(&values, 0.999), 0.999);
        values[949].1 = true; // censored at 950
        let q = censor_safe_q_hi(&values, 0.999);
        assert!(q < 0.95 && q > 0.94, "q = {q}");
    }

    #[test]
    fn report_rows() {
        let samples = [1.0f64, 2.0, 3.0];
        let specs = vec![
            RowSpec {
                name: "exact".to_string(),
                analytic: 2.0,
                samples: &samples,
                estimator: Estimator::Mean,
                abs_tol: 0.0,
            },
            RowSpec {
                name: "off".to_string(),
                analytic: 0.0,
                samples: &samples,
                estimator: Estimator::Mean,
                abs_tol: 0.0,
            },
        ];
        let report = build_report(&specs, vec![("seed".to_string(), "7".to_string())]).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.rows[0].z, 0.0);
        assert!(report.rows[0].pass);
        assert!(report.rows[1].z > 3.0);
        assert!(!report.rows[1].pass);
        assert!(!report.all_pass());

        // z = -6 example: analytic 1.0, empirical 0.7, se 0.05
        let row = make_row("z".to_string(), 1.0f64, 0.7, 0.05, 0.0);
        assert!((row.z + 6.0).abs() < 1e-12);
        assert!(!row.pass);
        // absolute tolerance rescues a biased row
        let row = make_row("tol".to_string(), 1.0, 0.7, 0.05, 0.4);
        assert!(row.pass);

        let empty = build_report::<f64>(&[], vec![]).unwrap();
        assert!(empty.rows.is_empty());
        assert!(empty.all_pass());
    }
}
