//! Generating functions for the restricted path class.
//!
//! The central objects are the Motzkin generating function `M`, the pair
//! `(F, G)` describing the triangle-tree decomposition, and the series
//! `v = z·M(z)` that realizes the substitution `z = v/(1+v+v²)`. Everything
//! is computed twice where the theory offers two routes (fixed point vs.
//! closed form, product assembly vs. direct series), and the routes are
//! required to agree exactly to the truncation order.
//!
//! Submodules: [`trinomial`] for the integer coefficient machinery,
//! [`height`] for the height distribution and its numerator series,
//! [`leaves`] for the bivariate leaf statistics.

pub mod height;
pub mod leaves;
pub mod trinomial;

use crate::error::Error;
use crate::series::{
    int, rat, solve_fixed_point, solve_fixed_point_pair, IntSeries, Series,
};
use num::{BigInt, One, Zero};

/// Power-series solution of `M = 1 + zM + z²M²` to order `n`; the
/// coefficients are the Motzkin numbers 1, 1, 2, 4, 9, 21, ...
///
/// The equation never divides, so the iteration runs over integer
/// coefficients and the result is lifted to the rationals at the end.
pub fn motzkin_series(n: usize) -> Series {
    solve_fixed_point(n, |m: &IntSeries| {
        IntSeries::one(m.order())
            .add(&m.shift_up(1))
            .add(&m.mul(m).shift_up(2))
    })
    .expect("the Motzkin equation contracts")
    .to_rat()
}

/// The same series through the closed form `(1 − z − √(1−2z−3z²))/(2z²)`,
/// evaluated with the series square root. Works two orders above `n` so
/// that the division by `z²` still yields a full order-`n` result.
pub fn motzkin_closed_form(n: usize) -> Series {
    let order = n + 2;
    let one = Series::one(order);
    let z = Series::z(order);
    let radicand = one
        .sub(&z.scale(&int(2)))
        .sub(&z.mul(&z).scale(&int(3)));
    let numer = one.sub(&z).sub(&radicand.sqrt());
    numer.div_z_pow(2).scale(&rat(1, 2))
}

/// Motzkin numbers `M_0 ..= M_{n_max}` as exact integers, by the
/// convolution recurrence `M_n = M_{n−1} + Σ M_k·M_{n−2−k}` read off the
/// defining equation. This is the scalable route used by the large-`n`
/// asymptotic scans; it is checked against [`motzkin_series`] in tests.
pub fn motzkin_numbers(n_max: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    m.push(BigInt::one());
    for n in 1..=n_max {
        let mut next = m[n - 1].clone();
        if n >= 2 {
            for k in 0..=n - 2 {
                next += &m[k] * &m[n - 2 - k];
            }
        }
        m.push(next);
    }
    m
}

/// Solution of `v = z(1 + v + v²)`, i.e. the compositional inverse of
/// `v ↦ v/(1+v+v²)`; satisfies `v = z·M(z)`.
pub fn v_series(n: usize) -> Series {
    solve_fixed_point(n, |v: &IntSeries| {
        IntSeries::one(v.order()).add(v).add(&v.mul(v)).shift_up(1)
    })
    .expect("the substitution equation contracts")
    .to_rat()
}

/// `v = z·M(z)` over the integers, assembled from [`motzkin_numbers`]
/// instead of a fixed-point ramp. The ramp costs a full-order
/// multiplication per gained order, which is prohibitive in the
/// thousands; this constructor is O(n²) integer work and is what the
/// large-`n` series pipelines build on.
pub(crate) fn int_v(n: usize) -> IntSeries {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    if n >= 1 {
        for (i, m) in motzkin_numbers(n - 1).into_iter().enumerate() {
            coeffs[i + 1] = m;
        }
    }
    IntSeries::from_coeffs(coeffs)
}

/// [`int_v`] over the rationals. Held equal to [`v_series`] in tests.
pub fn v_from_motzkin(n: usize) -> Series {
    int_v(n).to_rat()
}

fn solve_fg_int(n: usize) -> Result<(IntSeries, IntSeries), Error> {
    solve_fixed_point_pair(n, |f: &IntSeries, g: &IntSeries| {
        let p = f.mul(g);
        // z at the ramping order (IntSeries::z would reject order 0)
        let z = IntSeries::one(f.order()).shift_up(1);
        (g.shift_up(1).add(&p), z.add(&p))
    })
}

/// Joint power-series solution of `F = zG/(1−G)` and `G = z/(1−F)`.
///
/// The iteration uses the denominator-cleared form of the same system,
/// `F = zG + FG` and `G = z + FG`, sharing the product `FG` between the
/// two updates; the returned pair is verified to be a genuine fixed point
/// by the solver, and tests check the original quotient equations.
pub fn solve_fg(n: usize) -> Result<(Series, Series), Error> {
    let (f, g) = solve_fg_int(n)?;
    Ok((f.to_rat(), g.to_rat()))
}

/// The full class generating function `z/(1−z) · 1/(1 − F/(1−z))`, whose
/// `z^{n+1}` coefficient counts restricted paths of semilength `n` (trees
/// with `n+1` nodes). The product assembly must reproduce `z·M(z)`; any
/// discrepancy is reported as an internal consistency error.
pub fn total_gf(n: usize) -> Result<Series, Error> {
    let (f, _) = solve_fg_int(n)?;
    let one = IntSeries::one(n);
    let z = one.shift_up(1);
    let one_minus_z = one.sub(&z);
    let total = z
        .div(&one_minus_z)
        .div(&one.sub(&f.div(&one_minus_z)));
    if total != int_v(n) {
        return Err(Error::IdentityViolation {
            identity: "total_gf == z*M(z)",
        });
    }
    Ok(total.to_rat())
}
