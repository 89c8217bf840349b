//! Safeguarded Newton iteration on a bracket.
//!
//! Used to invert the Laplace exponents: both `Phi` and `Phi^(n)` are
//! smooth, strictly increasing and convex on [0, inf), so Newton from the
//! upper end of a bracket converges monotonically; bisection takes over
//! whenever a Newton step leaves the bracket or fails to contract.

use crate::Real;

/// Find `x` in `[lo, hi]` with `f(x) = target`.
///
/// `f` must be nondecreasing on the bracket with `f(lo) <= target <= f(hi)`.
/// `df` is the derivative. Convergence is to relative machine precision in
/// `x` (or `|f(x) - target|` below `f_tol`), whichever comes first.
pub fn newton_bracketed<R: Real>(
    f: impl Fn(R) -> R,
    df: impl Fn(R) -> R,
    target: R,
    mut lo: R,
    mut hi: R,
    f_tol: R,
) -> R {
    debug_assert!(lo <= hi);
    let mut x = (lo + hi) * R::of(0.5);
    let mut non_contracting = 0u32;

    for _ in 0..200 {
        let fx = f(x) - target;
        if fx.abs() <= f_tol {
            return x;
        }
        if fx > R::zero() {
            hi = x;
        } else {
            lo = x;
        }

        let d = df(x);
        let step = if d > R::zero() { fx / d } else { R::zero() };
        let mut next = x - step;

        // Fall back to bisection when Newton leaves the bracket or stalls;
        // eight stalled steps in a row force bisection outright.
        if !(next > lo && next < hi) || step == R::zero() || non_contracting >= 8 {
            next = (lo + hi) * R::of(0.5);
            non_contracting = 0;
        } else if step.abs() >= (hi - lo) * R::of(0.5) {
            non_contracting += 1;
        } else {
            non_contracting = 0;
        }

        if next == x || (hi - lo) <= hi.abs() * R::epsilon() * R::of(2.0) {
            return x;
        }
        x = next;
    }
    x
}
