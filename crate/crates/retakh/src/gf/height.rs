//! Height statistics of the restricted class.
//!
//! Everything is expressed through the substitution series `v = zM(z)`:
//! the truncated-height generating functions `G_k`, `F_k` and the
//! height-≤-2h class series have closed forms as rational functions of
//! `v`, and the numerator `S` that accumulates total (even) height reduces
//! to a divisor-function series. A trinomial-coefficient formula gives the
//! same coefficients by pure integer arithmetic, which is what the
//! large-`n` scans run on; the two routes are held equal in tests.

use crate::gf::trinomial::{trinomial_row, TrinomialRow};
use crate::gf::{int_v, motzkin_numbers};
use crate::series::{int, IntSeries, Rat, Series};
use num::{BigInt, Zero};

/// Number of positive divisors of `h`.
pub fn divisor_count(h: u64) -> u64 {
    assert!(h >= 1, "divisor_count requires h >= 1");
    let mut d = 0;
    let mut i = 1;
    while i * i <= h {
        if h % i == 0 {
            d += if i * i == h { 1 } else { 2 };
        }
        i += 1;
    }
    d
}

/// `Σ_{k≥1} d(k)·v^{2k}` to order `n`, as a series in the variable `v`.
pub fn divisor_series(n: usize) -> Series {
    let mut coeffs = vec![int(0); n + 1];
    for k in 1..=n / 2 {
        coeffs[2 * k] = int(divisor_count(k as u64) as i64);
    }
    Series::from_coeffs(coeffs)
}

/// The same series assembled from its Lambert form
/// `Σ_{h≥1} v^{2h}/(1−v^{2h})`; terms with `2h > n` cannot contribute at
/// this order and are omitted.
pub fn lambert_partial_sum(n: usize) -> Series {
    let one = Series::one(n);
    let mut acc = Series::zero(n);
    for h in 1..=n / 2 {
        let term = Series::monomial(int(1), 2 * h, n);
        acc = acc.add(&term.div(&one.sub(&term)));
    }
    acc
}

/// Shared expansion state: the series `v = zM(z)` at a fixed truncation
/// order, from which every height generating function is assembled. Build
/// one of these when evaluating many `k` or `h` values at the same order.
///
/// All assembly runs over integer coefficients — each division below is
/// by a series with constant term 1 — and results are lifted to the
/// rationals on the way out.
pub struct VContext {
    n: usize,
    v: Series,
    vi: IntSeries,
    one: IntSeries,
}

impl VContext {
    pub fn new(n: usize) -> Self {
        let vi = int_v(n);
        Self {
            n,
            v: vi.to_rat(),
            vi,
            one: IntSeries::one(n),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn v(&self) -> &Series {
        &self.v
    }

    /// `G_k = v/(1+v) · (1−v^{2k})/(1−v^{2k+1})` expanded in `z`.
    pub fn g_k(&self, k: usize) -> Series {
        assert!(k >= 1, "g_k requires k >= 1");
        let v2k = self.vi.pow(2 * k);
        self.vi
            .div(&self.one.add(&self.vi))
            .mul(&self.one.sub(&v2k))
            .div(&self.one.sub(&v2k.mul(&self.vi)))
            .to_rat()
    }

    /// `F_k = v²/(1+v+v²) · (1−v^{2k})/(1−v^{2k+2})`: the generating
    /// function of triangle-trees of height at most `2k`, by node count.
    pub fn f_k(&self, k: usize) -> Series {
        assert!(k >= 1, "f_k requires k >= 1");
        let v2 = self.vi.mul(&self.vi);
        let v2k = self.vi.pow(2 * k);
        v2.div(&self.one.add(&self.vi).add(&v2))
            .mul(&self.one.sub(&v2k))
            .div(&self.one.sub(&v2k.mul(&v2)))
            .to_rat()
    }

    /// Class generating function restricted by height: `[z^{n+1}]` counts
    /// paths of semilength `n` with height ≤ 2h (for `h ≥ 1`), or ≤ 1 for
    /// `h = 0`. Once `2h ≥ order` the bound is vacuous and the result
    /// coincides with the full series `v`.
    pub fn height_le_gf(&self, h: usize) -> Series {
        if h == 0 {
            // the staircase paths: v/(1+v²) == z/(1−z)
            return self
                .vi
                .div(&self.one.add(&self.vi.mul(&self.vi)))
                .to_rat();
        }
        let v2h2 = self.vi.pow(2 * h + 2);
        self.vi
            .mul(&self.one.sub(&v2h2))
            .div(&self.one.sub(&v2h2.mul(&self.vi.mul(&self.vi))))
            .to_rat()
    }

    /// The numerator `S = −2v + (2(1−v²)/v)·Σ_{h≥1} v^{2h}/(1−v^{2h})`
    /// expanded in `z`. Its `z^{n+1}` coefficient is the total height of
    /// all even-height paths of semilength `n` — equivalently the total
    /// height of the whole class minus 1, since the single staircase path
    /// is the only one of odd height.
    pub fn height_numerator(&self) -> Series {
        let n = self.n;
        assert!(n >= 1, "height_numerator requires order >= 1");
        // In the v variable the expression collapses to
        // −2v + 2·Σ_k d(k)(v^{2k−1} − v^{2k+1}); build that polynomial and
        // substitute v(z).
        let mut sv = vec![BigInt::zero(); n + 1];
        sv[1] = BigInt::from(-2);
        let mut k = 1usize;
        while 2 * k - 1 <= n {
            let d = BigInt::from(2 * divisor_count(k as u64) as i64);
            sv[2 * k - 1] += &d;
            if 2 * k + 1 <= n {
                sv[2 * k + 1] -= &d;
            }
            k += 1;
        }
        IntSeries::from_coeffs(sv).compose(&self.vi).to_rat()
    }
}

/// One-shot convenience for [`VContext::g_k`].
pub fn g_k(k: usize, n: usize) -> Series {
    VContext::new(n).g_k(k)
}

/// One-shot convenience for [`VContext::f_k`].
pub fn f_k(k: usize, n: usize) -> Series {
    VContext::new(n).f_k(k)
}

/// One-shot convenience for [`VContext::height_le_gf`].
pub fn height_le_gf(h: usize, n: usize) -> Series {
    VContext::new(n).height_le_gf(h)
}

/// One-shot convenience for [`VContext::height_numerator`].
pub fn height_numerator_series(n: usize) -> Series {
    VContext::new(n).height_numerator()
}

/// Exact integer value of `[z^{n+1}] (1−v²)/v · Σ_{h≥1} v^{2h}/(1−v^{2h})`
/// read off trinomial row `n`:
/// `Σ_{h≥1} d(h)·[T(n,n+2−2h) − 2T(n,n−2h) + T(n,n−2−2h)]`.
///
/// Consequently `2·height_coeff_formula(n) − 2·M_n` equals the `z^{n+1}`
/// coefficient of [`height_numerator_series`]; the subtracted term comes
/// from `[z^{n+1}](−2v) = −2M_n`.
pub fn height_coeff_formula_from_row(row: &TrinomialRow) -> BigInt {
    let n = row.n() as i64;
    assert!(n >= 1, "height_coeff_formula requires n >= 1");
    let mut total = BigInt::zero();
    let mut h = 1i64;
    while n + 2 - 2 * h >= 0 {
        let term = row.get(n + 2 - 2 * h) - BigInt::from(2) * row.get(n - 2 * h)
            + row.get(n - 2 - 2 * h);
        total += BigInt::from(divisor_count(h as u64)) * term;
        h += 1;
    }
    total
}

/// One-shot convenience for [`height_coeff_formula_from_row`].
pub fn height_coeff_formula(n: usize) -> BigInt {
    assert!(n >= 1, "height_coeff_formula requires n >= 1");
    height_coeff_formula_from_row(&trinomial_row(n))
}

/// Exact and asymptotic average height for one semilength.
#[derive(Clone, PartialEq, Debug)]
pub struct HeightReport {
    /// Semilength of the paths described.
    pub n: usize,
    /// Total height summed over even-height paths of semilength `n`
    /// (equivalently: total height over the whole class minus 1).
    pub exact_total_even_height: BigInt,
    /// `exact_total_even_height / M_n`.
    pub exact_average: Rat,
    /// Leading-order approximation `2√(πn/3)` — the only inexact field.
    pub asymptotic_average: f64,
}

/// Build the report from precomputed ingredients: trinomial row `n` and
/// the Motzkin number `M_n`. Ladder scans share one triangle walk and one
/// Motzkin table across rungs through this entry point.
pub fn height_report_from_parts(row: &TrinomialRow, m_n: &BigInt) -> HeightReport {
    let n = row.n();
    let total = BigInt::from(2) * height_coeff_formula_from_row(row) - BigInt::from(2) * m_n;
    HeightReport {
        n,
        exact_average: Rat::new(total.clone(), m_n.clone()),
        exact_total_even_height: total,
        asymptotic_average: crate::asym::avg_height_asym(n),
    }
}

/// Exact average height (even-height convention) of paths of semilength
/// `n`, with its asymptotic companion. Pure integer arithmetic; usable far
/// beyond the reach of the series engine.
pub fn avg_height_exact(n: usize) -> HeightReport {
    assert!(n >= 1, "avg_height_exact requires n >= 1");
    let row = trinomial_row(n);
    let m_n = motzkin_numbers(n).pop().expect("nonempty table");
    height_report_from_parts(&row, &m_n)
}
