//! The level-`n` compound Poisson model: a drift `-1` process with
//! Pareto II jumps (shape `alpha+1`), arrival rate `gamma_n`, and initial
//! state drawn from the size-biased law `Lambda*`.
//!
//! `gamma_n` is pinned to the exact equality `gamma_n = alpha (1 - (b/c0)
//! n^-alpha)`, the tightest instantiation of the convergence condition
//! `n^alpha (1 - gamma_n/alpha) -> b/c0`; in particular `b = 0` gives
//! `gamma_n = alpha` exactly (the critical case).
//!
//! The discrete scale function `W^(n)` solves the Volterra renewal
//! equation
//!
//! ```text
//! W(x) = 1 + gamma_n * int_0^x tail(y) W(x-y) dy,
//! ```
//!
//! obtained from the geometric-series expansion of `1/Phi^(n)`; it is
//! solved on a uniform grid by trapezoidal discretization.

use crate::model::ModelParams;
use crate::quad;
use crate::roots::newton_bracketed;
use crate::{Error, Real, Result};

/// The pre-limit model at scaling level `n`.
#[derive(Debug, Clone, Copy)]
pub struct DiscreteModel<R> {
    params: ModelParams<R>,
    n: u32,
    gamma_n: R,
}

impl<R: Real> DiscreteModel<R> {
    /// Build the level-`n` model; fails when `n^alpha <= b/c0`, which
    /// would make the arrival rate nonpositive.
    pub fn new(params: ModelParams<R>, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be >= 1".to_string()));
        }
        let alpha = params.alpha();
        let drift_term = (params.b() / params.c0()) * R::of(f64::from(n)).powf(-alpha);
        let gamma_n = alpha * (R::one() - drift_term);
        if !(gamma_n > R::zero()) {
            let n_min = (params.b() / params.c0()).powf(alpha.recip());
            return Err(Error::parameter(format!(
                "gamma_n <= 0 at n = {n}: n^alpha must exceed b/c0; choose n > {n_min}"
            )));
        }
        Ok(DiscreteModel { params, n, gamma_n })
    }

    pub fn params(&self) -> &ModelParams<R> {
        &self.params
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Arrival rate `gamma_n = alpha (1 - (b/c0) n^-alpha)`.
    pub fn gamma_n(&self) -> R {
        self.gamma_n
    }

    /// Jump tail `P{jump > x} = (1+x)^-(alpha+1)`.
    pub fn jump_tail(&self, x: R) -> Result<R> {
        if !(x >= R::zero()) {
            return Err(Error::domain(format!("x = {x} must be >= 0")));
        }
        Ok((R::one() + x).powf(-(self.params.alpha() + R::one())))
    }

    /// Inverse-CDF jump sample: the value whose tail probability is `u`.
    pub fn sample_jump(&self, u: R) -> Result<R> {
        if !(u > R::zero() && u < R::one()) {
            return Err(Error::domain(format!("u = {u} outside (0, 1)")));
        }
        Ok(u.powf(-(self.params.alpha() + R::one()).recip()) - R::one())
    }

    /// Inverse-CDF sample from the initial law `Lambda*` (tail `(1+x)^-alpha`).
    pub fn sample_initial(&self, u: R) -> Result<R> {
        if !(u > R::zero() && u < R::one()) {
            return Err(Error::domain(format!("u = {u} outside (0, 1)")));
        }
        Ok(u.powf(-self.params.alpha().recip()) - R::one())
    }

    /// Laplace transform of the jump law, by adaptive quadrature on
    /// `(0, inf)` with the substitution `x = u/(1-u)`.
    fn jump_transform(&self, lambda: R) -> R {
        if lambda == R::zero() {
            return R::one();
        }
        let a1 = self.params.alpha() + R::one();
        quad::integrate_to_inf(
            |x: R| (-lambda * x).exp() * a1 * (R::one() + x).powf(-a1 - R::one()),
            R::of(1e-12),
            R::of(1e-300),
        )
    }

    /// Discrete Laplace exponent `Phi^(n)(lambda) = lambda - gamma_n (1 - jump_transform)`.
    pub fn laplace_exponent(&self, lambda: R) -> Result<R> {
        if !(lambda >= R::zero()) {
            return Err(Error::domain(format!("lambda = {lambda} must be >= 0")));
        }
        if lambda == R::zero() {
            return Ok(R::zero());
        }
        Ok(lambda - self.gamma_n * (R::one() - self.jump_transform(lambda)))
    }

    /// Inverse `Psi^(n)` of the discrete exponent.
    pub fn inverse_exponent(&self, y: R) -> Result<R> {
        if !(y >= R::zero()) {
            return Err(Error::domain(format!("y = {y} must be >= 0")));
        }
        if y == R::zero() {
            return Ok(R::zero());
        }
        let a1 = self.params.alpha() + R::one();
        let f = |x: R| self.laplace_exponent(x).unwrap();
        // Phi' = 1 - gamma_n * int x e^{-lx} Lambda(dx)
        let df = |x: R| {
            let moment = quad::integrate_to_inf(
                |t: R| t * (-x * t).exp() * a1 * (R::one() + t).powf(-a1 - R::one()),
                R::of(1e-10),
                R::of(1e-300),
            );
            R::one() - self.gamma_n * moment
        };
        // Phi(l) >= l - gamma_n, so y + gamma_n brackets from above.
        let hi = y + self.gamma_n;
        let f_tol = (R::one() + y) * R::of(1e-12);
        Ok(newton_bracketed(f, df, y, R::zero(), hi, f_tol))
    }

    /// Solve the renewal equation for `W^(n)` on a uniform grid.
    pub fn scale_table(&self, step: R, x_max: R) -> Result<ScaleTable<R>> {
        if !(step > R::zero()) {
            return Err(Error::domain(format!("step = {step} must be > 0")));
        }
        if !(x_max >= step) {
            return Err(Error::domain(format!("x_max = {x_max} must be >= step")));
        }
        let k_max = (x_max / step).ceil().as_f64() as usize;
        let h = step;
        let tail: Vec<R> = (0..=k_max)
            .map(|j| self.jump_tail(h * R::of(j as f64)).unwrap())
            .collect();
        let mut values = Vec::with_capacity(k_max + 1);
        values.push(R::one());
        let gh = self.gamma_n * h;
        let denom = R::one() - gh * R::of(0.5);
        for k in 1..=k_max {
            // trapezoid over [0, kh] with the implicit endpoint solved out
            let mut conv = tail[k] * R::of(0.5); // j = k term, W(0) = 1
            for j in 1..k {
                conv += tail[j] * values[k - j];
            }
            values.push((R::one() + gh * conv) / denom);
        }
        Ok(ScaleTable { step: h, values })
    }

    /// Eq. (3.8): Laplace transform of the local-time count for an
    /// excursion started at the level itself. With `p = 1/W^(n)(t)` this
    /// is the probability generating function of a Geometric(p) count
    /// evaluated at `e^-lambda`.
    pub fn z_laplace_from_t(&self, w_t: R, lambda: R) -> Result<R> {
        if !(w_t >= R::one()) {
            return Err(Error::domain(format!("W(t) = {w_t} must be >= 1")));
        }
        if !(lambda >= R::zero()) {
            return Err(Error::domain(format!("lambda = {lambda} must be >= 0")));
        }
        let p = w_t.recip();
        Ok(p / (R::one() - (-lambda).exp() * (R::one() - p)))
    }

    /// Eq. (3.9): Laplace transform of the local-time count at level `t`
    /// for an excursion started elsewhere, in terms of `W^(n)(t)` and
    /// `W^(n)(t - x)`.
    pub fn z_laplace_from_x(&self, w_t: R, w_t_minus_x: R, lambda: R) -> Result<R> {
        if !(w_t >= R::one()) {
            return Err(Error::domain(format!("W(t) = {w_t} must be >= 1")));
        }
        if !(w_t_minus_x >= R::zero() && w_t_minus_x <= w_t) {
            return Err(Error::domain(format!(
                "W(t-x) = {w_t_minus_x} must lie in [0, W(t) = {w_t}]"
            )));
        }
        if !(lambda >= R::zero()) {
            return Err(Error::domain(format!("lambda = {lambda} must be >= 0")));
        }
        let grad = w_t - w_t_minus_x;
        let e = (-lambda).exp();
        let denom = R::one() - e * (R::one() - w_t.recip());
        Ok(R::one() - (grad / w_t) * (R::one() - e) / denom)
    }
}

/// Grid solution of the renewal equation for `W^(n)`.
#[derive(Debug, Clone)]
pub struct ScaleTable<R> {
    step: R,
    values: Vec<R>,
}

impl<R: Real> ScaleTable<R> {
    pub fn step(&self) -> R {
        self.step
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// Largest grid abscissa.
    pub fn x_max(&self) -> R {
        self.step * R::of((self.values.len() - 1) as f64)
    }

    /// Linear interpolation between grid nodes; exact at the nodes.
    pub fn value_at(&self, x: R) -> R {
        if x <= R::zero() {
            return self.values[0];
        }
        let pos = x / self.step;
        let idx = pos.floor().as_f64() as usize;
        if idx + 1 >= self.values.len() {
            return *self.values.last().unwrap();
        }
        let frac = pos - R::of(idx as f64);
        self.values[idx] + frac * (self.values[idx + 1] - self.values[idx])
    }
}
