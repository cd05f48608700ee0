//! Leaf statistics via a second variable `u` marking leaves.
//!
//! The triangle-tree system extends to `F(z,u)`, `G(z,u)` with `u`
//! attached to each childless node; eliminating `G` gives a quadratic
//! whose explicit root is evaluated here with the bivariate series square
//! root. Differentiating the assembled class series at `u = 1` produces
//! the total-leaf-count series, which collapses to the univariate rational
//! function `R` of `v = zM(z)` — the scalable route used for large-`n`
//! averages. Every pair of routes is held exactly equal in tests.

use crate::bivar::{BivarSeries, UPoly};
use crate::error::Error;
use crate::gf::{int_v, motzkin_numbers};
use crate::series::{solve_fixed_point_pair, IntSeries, Rat, Series};
use num::BigInt;

/// `zu` as a bivariate series.
fn zu(n: usize) -> BivarSeries {
    if n == 0 {
        BivarSeries::zero(0)
    } else {
        BivarSeries::monomial(UPoly::u(), 1, n)
    }
}

/// Bivariate polynomial from integer rows (`rows[i][j]` is the
/// coefficient of `z^i u^j`), truncated to the requested order.
fn poly(rows: &[&[i64]], n: usize) -> BivarSeries {
    let keep = rows.len().min(n + 1);
    BivarSeries::from_int_rows(&rows[..keep], n)
}

/// Joint solution of `F = zG/(1−G)`, `G = zu + zF/(1−F)`; specializing
/// `u = 1` recovers the univariate pair. As in the univariate case the
/// iteration runs on the denominator-cleared system `F = zG + FG`,
/// `G = zu + zF − zuF + FG` with the product `FG` shared.
pub fn leaves_system(n: usize) -> Result<(BivarSeries, BivarSeries), Error> {
    solve_fixed_point_pair(n, |f, g| {
        let p = f.mul(g);
        let new_f = g.shift_up(1).add(&p);
        let new_g = zu(f.order())
            .add(&f.shift_up(1))
            .sub(&f.scale(&UPoly::u()).shift_up(1))
            .add(&p);
        (new_f, new_g)
    })
}

/// The explicit root of the quadratic satisfied by `F(z,u)`:
/// numerator `1 − zu − z² + z²u − √(radicand)` over `2(1 − zu + z)`, where
/// the radicand is the degree-4 polynomial written out below.
fn closed_form_f(n: usize) -> BivarSeries {
    let radicand = poly(
        &[
            &[1],
            &[0, -2],
            &[-2, -2, 1],
            &[0, -2, 2],
            &[1, -2, 1],
        ],
        n,
    );
    let numer = poly(&[&[1], &[0, -1], &[-1, 1]], n).sub(&radicand.sqrt());
    let denom = poly(&[&[2], &[2, -2]], n);
    numer.div(&denom)
}

/// Closed form for `F(z,u)`, cross-checked coefficient-for-coefficient
/// against the fixed-point system before being returned.
pub fn leaves_closed_form(n: usize) -> Result<BivarSeries, Error> {
    let f = closed_form_f(n);
    let (system_f, _) = leaves_system(n)?;
    if f != system_f {
        return Err(Error::IdentityViolation {
            identity: "bivariate closed form == fixed-point system",
        });
    }
    Ok(f)
}

/// Class generating function with `u` marking leaves:
/// `z/(1−zu) · 1/(1 − F/(1−zu)) + zu − z`. The coefficient of
/// `z^{n+1}u^ℓ` counts restricted paths of semilength `n` whose tree has
/// `ℓ` leaves; at `u = 1` this collapses to `z·M(z)`.
pub fn leaves_total_gf(n: usize) -> BivarSeries {
    let f = closed_form_f(n);
    let one = BivarSeries::one(n);
    let z = BivarSeries::z(n);
    let zu = zu(n);
    let one_minus_zu = one.sub(&zu);
    z.div(&one_minus_zu)
        .div(&one.sub(&f.div(&one_minus_zu)))
        .add(&zu)
        .sub(&z)
}

/// `∂/∂u` of [`leaves_total_gf`] at `u = 1`: the series whose `z^{n+1}`
/// coefficient is the total number of leaves over all restricted paths of
/// semilength `n`.
pub fn leaves_numerator(n: usize) -> Series {
    leaves_total_gf(n).diff_u_at_one()
}

/// The same series through the univariate closed form
/// `R = v(1+v)(1−v+2v²−v³) / ((1−v)(1+v+v²))` with `v = zM(z)`. This is
/// the cheap route: integer arithmetic and no bivariate work, so it
/// reaches orders in the thousands.
pub fn leaves_r_series(n: usize) -> Series {
    let v = int_v(n);
    let one = IntSeries::one(n);
    let two = BigInt::from(2);
    let v2 = v.mul(&v);
    let v3 = v2.mul(&v);
    let numer = v
        .mul(&one.add(&v))
        .mul(&one.sub(&v).add(&v2.scale(&two)).sub(&v3));
    let denom = one.sub(&v).mul(&one.add(&v).add(&v2));
    numer.div(&denom).to_rat()
}

/// Exact and asymptotic average leaf count for one tree size.
#[derive(Clone, PartialEq, Debug)]
pub struct LeafReport {
    /// Tree size in nodes (semilength + 1).
    pub n: usize,
    /// Total leaves over all restricted paths of the corresponding
    /// semilength.
    pub exact_total_leaves: BigInt,
    /// `exact_total_leaves / M_{n−1}` (the class size for `n` nodes).
    pub exact_average: Rat,
    /// Leading-order approximation `(4/9)·n` in nodes — the only inexact
    /// field.
    pub asymptotic_average: f64,
}

/// Exact average number of leaves over restricted paths of semilength
/// `n`, reported against the tree size `n + 1` in nodes. Uses the
/// univariate `R` route, so large `n` is fine.
pub fn avg_leaves_exact(n: usize) -> LeafReport {
    assert!(n >= 1, "avg_leaves_exact requires semilength >= 1");
    let r = leaves_r_series(n + 1);
    let total = r.coeff(n + 1).clone();
    assert!(total.is_integer(), "leaf totals are integers");
    let m_n = motzkin_numbers(n).pop().expect("nonempty table");
    leaf_report_from_parts(n, total.numer().clone(), &m_n)
}

/// Build the report from precomputed ingredients (the coefficient
/// `[z^{n+1}]R` and the Motzkin number `M_n`); ladder scans share one
/// `R` expansion across rungs through this entry point.
pub fn leaf_report_from_parts(semilength: usize, total: BigInt, m_n: &BigInt) -> LeafReport {
    LeafReport {
        n: semilength + 1,
        exact_average: Rat::new(total.clone(), m_n.clone()),
        exact_total_leaves: total,
        asymptotic_average: crate::asym::avg_leaves_asym(semilength + 1),
    }
}
