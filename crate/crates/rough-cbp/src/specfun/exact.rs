//! Exact fixed-point evaluation of the Mittag-Leffler series for `alpha`
//! on the tenths lattice.
//!
//! The series `sum_n z^n / Gamma(a n + b)` alternates with terms as large
//! as `exp(|z|^(1/a))`, so floating-point summation destroys the result
//! long before the asymptotic expansion becomes available. For
//! `a = p/10` the Gamma arguments fall on ten arithmetic progressions with
//! integer step `p`, so each term is an exact dyadic rational times one of
//! nine constants `1/Gamma(j/10)`. Summing in 384-bit fixed point makes
//! every rounding error absolute (one ulp of 2^-384) rather than relative,
//! which removes the cancellation problem entirely: the result is good to
//! roughly `384*log10(2) - 0.44*|z|^(1/a)` digits.
//!
//! Terms within one progression keep a constant sign (the progression step
//! in `n` is 10), so the only cancellation left is the final combination
//! of ten fixed-point accumulators, which is exact.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::{Float, One, Pow, Signed, ToPrimitive, Zero};

const SCALE_BITS: u32 = 384;

/// `1/Gamma(j/10)`, j = 1..9, 64 significant digits.
/// Regenerate with tools/reference_values.py.
const INV_GAMMA_TENTHS: [&str; 9] = [
    "1051137006111777807457015998911989895624168342429240511563372274",
    "2178248842116672615661199521897559277363366448158247546798571937",
    "3342727525641905539772310290652910530454839746658255278367061257",
    "4508241991944110638755643679796594979803805174878722483504732545",
    "5641895835477562869480794515607725858440506293289988568440857217",
    "6715049724420733581848777116861861057193741688922051194561964711",
    "7703831838665659988439968632079720850912634190851407544579861092",
    "8589370192246674623526149729574410051919558663785561261368336206",
    "9357787209128727731795945072000743562044952820665067309662658072",
];

static TABLE: LazyLock<[BigInt; 9]> = LazyLock::new(|| {
    std::array::from_fn(|i| {
        let digits: BigInt = INV_GAMMA_TENTHS[i].parse().unwrap();
        // all constants are 0.64-digit fractions
        (digits << SCALE_BITS) / BigInt::from(10u32).pow(64u32)
    })
});

/// `Some(p)` when `alpha` is (within float noise of) `p/10`, p = 1..9.
pub(crate) fn snap_tenths(alpha: f64) -> Option<u32> {
    let t = alpha * 10.0;
    let p = t.round();
    if (1.0..=9.0).contains(&p) && (t - p).abs() < 1e-10 {
        Some(p as u32)
    } else {
        None
    }
}

fn shifted(v: BigInt, sh: i64) -> BigInt {
    if sh >= 0 {
        v << sh as u64
    } else {
        v >> (-sh) as u64
    }
}

/// `1/Gamma(a/10)` in fixed point for integer `a >= 1`.
fn inv_gamma_tenths_fp(a: u32) -> BigInt {
    let r = a % 10;
    let k = a / 10;
    if r == 0 {
        // integer argument: 1/Gamma(k) = 1/(k-1)!
        let mut f = BigInt::one();
        for i in 2..k {
            f *= i;
        }
        (BigInt::one() << SCALE_BITS) / f
    } else {
        // 1/Gamma(r/10 + k) = 1/Gamma(r/10) / prod_{i<k} ((r + 10 i)/10)
        let mut t = TABLE[(r - 1) as usize].clone();
        for i in 0..k {
            t = t * 10u32 / (r + 10 * i);
        }
        t
    }
}

/// `E_{p/10, b/10}(z)` for `z < 0` by exact fixed-point summation.
///
/// `b10` is the second parameter in tenths; the crate only ever passes
/// `b10 = p10` (two-parameter case) or `b10 = 10` (one-parameter case).
pub(crate) fn ml_tenths_series(p10: u32, b10: u32, z: f64) -> f64 {
    debug_assert!(z < 0.0);
    let x = -z;
    let (mant, exp, _) = Float::integer_decode(x);
    let mant = BigInt::from(mant);
    let exp = exp as i64;
    let x10: BigInt = Pow::pow(&mant, 10u32);

    let mut acc = BigInt::zero();
    for j in 0..10u32 {
        // progression j holds n = j, j+10, j+20, ...; sign of z^n is (-1)^j
        let a0 = p10 * j + b10; // Gamma argument in tenths at k = 0
        let mut t = shifted(inv_gamma_tenths_fp(a0) * Pow::pow(&mant, j), exp * j as i64);
        if j % 2 == 1 {
            t = -t;
        }
        let mut k: u32 = 0;
        while !t.is_zero() && k < 4000 {
            acc += &t;
            // advance by ten series indices:
            // t *= x^10 / prod_{i<p10} ((a0 + 10 p10 k + 10 i)/10)
            t = shifted(t * &x10, exp * 10);
            for i in 0..p10 {
                t = t * 10u32 / (a0 + 10 * p10 * k + 10 * i);
            }
            k += 1;
        }
    }

    let sign = if acc.is_negative() { -1.0 } else { 1.0 };
    let mag = acc.abs().to_f64().unwrap_or(0.0);
    sign * mag * (2.0f64).powi(-(SCALE_BITS as i32))
}
