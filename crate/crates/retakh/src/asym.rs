//! Leading-order asymptotics and exact-versus-asymptotic diagnostics.
//!
//! The evaluators are plain floating-point formulas; every comparison
//! pairs one of them with an exact value produced by the integer/rational
//! pipelines and reports the ratio, never asserting equality. Quantities
//! on the `3ⁿ` scale are handled in log space (or rescaled by `3ⁿ` on both
//! sides) so that nothing overflows along the way.

use crate::gf::height::{height_coeff_formula_from_row, height_report_from_parts};
use crate::gf::leaves::leaves_r_series;
use crate::gf::motzkin_numbers;
use crate::gf::trinomial::TrinomialTable;
use crate::series::Rat;
use num::bigint::Sign;
use num::{BigInt, ToPrimitive};
use std::f64::consts::PI;

/// `ln` of the Motzkin approximation `3^{n+1/2}/(2√π n^{3/2})`, which
/// tracks `M_{n−1}` (the coefficient of `zⁿ` in `z·M(z)`).
pub fn motzkin_asym_ln(n: usize) -> f64 {
    assert!(n >= 1, "motzkin_asym requires n >= 1");
    let n = n as f64;
    (n + 0.5) * 3f64.ln() - (2f64.ln() + 0.5 * PI.ln() + 1.5 * n.ln())
}

/// `3^{n+1/2}/(2√π n^{3/2})`, evaluated through [`motzkin_asym_ln`] to
/// postpone overflow; past `n ≈ 640` the value exceeds floating range and
/// comes back as infinity, so large-`n` work should stay in log space.
pub fn motzkin_asym(n: usize) -> f64 {
    motzkin_asym_ln(n).exp()
}

/// Reference constant: the average height of Motzkin paths of length `n`
/// is asymptotically `√(πn/3)`. Not tested against any enumeration here;
/// it exists for comparison with the restricted-class average.
pub fn motzkin_path_height_ref(n: usize) -> f64 {
    assert!(n >= 1, "motzkin_path_height_ref requires n >= 1");
    (PI * n as f64 / 3.0).sqrt()
}

/// Leading-order average height of the restricted paths of semilength
/// `n`: `2√(πn/3)` — exactly twice the Motzkin-path reference.
pub fn avg_height_asym(n: usize) -> f64 {
    2.0 * motzkin_path_height_ref(n)
}

/// Leading-order average leaf count of a restricted tree with
/// `node_count` nodes: `(4/9)·node_count`.
pub fn avg_leaves_asym(node_count: usize) -> f64 {
    assert!(node_count >= 1, "avg_leaves_asym requires node_count >= 1");
    4.0 * node_count as f64 / 9.0
}

/// For unrestricted plane trees the corresponding leaf fraction is 1/2 (a
/// folklore consequence of the Narayana numbers); the restricted constant
/// 4/9 sits just below it. Exposed for documentation and sanity checks.
pub const UNRESTRICTED_AVG_LEAF_FRACTION: f64 = 0.5;

/// `ln(3ⁿ/n)`: log of the leading term of the height-numerator
/// coefficients.
pub fn height_numerator_asym_coeff_ln(n: usize) -> f64 {
    assert!(n >= 1, "height_numerator_asym_coeff requires n >= 1");
    let n = n as f64;
    n * 3f64.ln() - n.ln()
}

/// `3ⁿ/n` in floating arithmetic (overflows to infinity past `n ≈ 640`;
/// the comparison rows rescale instead of calling this at large `n`).
pub fn height_numerator_asym_coeff(n: usize) -> f64 {
    height_numerator_asym_coeff_ln(n).exp()
}

/// Convert an exact rational to the nearest floating value by integer
/// shifts: the quotient is formed with ~96 significant bits and then
/// rounded once, so the result is accurate to an ulp or two even when
/// numerator and denominator are thousands of bits long.
pub fn rat_to_f64(x: &Rat) -> f64 {
    if x.numer().sign() == Sign::NoSign {
        return 0.0;
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let k = 96 - (num.bits() as i64 - den.bits() as i64);
    let scaled = if k >= 0 {
        num << (k as usize)
    } else {
        num >> ((-k) as usize)
    };
    let q = scaled / den;
    let magnitude = q.to_f64().expect("96-bit quotient") * 2f64.powi(-(k as i32));
    if x.numer().sign() == Sign::Minus {
        -magnitude
    } else {
        magnitude
    }
}

/// One exact-versus-asymptotic data point. The exact side always comes
/// from the generating-function pipelines; the ratio is what convergence
/// scans look at.
#[derive(Clone, PartialEq, Debug)]
pub struct AsymptoticComparison {
    pub n: usize,
    pub exact: Rat,
    pub asymptotic: f64,
    /// `exact / asymptotic`, with the exact side rounded to floating
    /// precision at the very end.
    pub ratio: f64,
}

impl AsymptoticComparison {
    pub fn new(n: usize, exact: Rat, asymptotic: f64) -> Self {
        let ratio = rat_to_f64(&exact) / asymptotic;
        Self {
            n,
            exact,
            asymptotic,
            ratio,
        }
    }
}

fn check_ladder(ns: &[usize]) {
    assert!(!ns.is_empty(), "a ladder needs at least one rung");
    assert!(ns[0] >= 1, "ladder rungs start at 1");
    assert!(
        ns.windows(2).all(|w| w[0] < w[1]),
        "ladder rungs must be strictly increasing"
    );
}

/// `M_{n−1}` against [`motzkin_asym`]`(n)`.
pub fn motzkin_comparison(n: usize) -> AsymptoticComparison {
    assert!(n >= 1, "motzkin_comparison requires n >= 1");
    let m = motzkin_numbers(n - 1).pop().expect("nonempty table");
    AsymptoticComparison::new(n, Rat::from_integer(m), motzkin_asym(n))
}

/// [`motzkin_comparison`] along a ladder, sharing one Motzkin table.
pub fn motzkin_comparison_ladder(ns: &[usize]) -> Vec<AsymptoticComparison> {
    check_ladder(ns);
    let motzkin = motzkin_numbers(ns.last().unwrap() - 1);
    ns.iter()
        .map(|&n| {
            AsymptoticComparison::new(
                n,
                Rat::from_integer(motzkin[n - 1].clone()),
                motzkin_asym(n),
            )
        })
        .collect()
}

/// Exact average height at semilength `n` against `2√(πn/3)`.
pub fn avg_height_comparison(n: usize) -> AsymptoticComparison {
    let report = crate::gf::height::avg_height_exact(n);
    AsymptoticComparison::new(n, report.exact_average, report.asymptotic_average)
}

/// [`avg_height_comparison`] along a ladder, sharing one triangle walk
/// and one Motzkin table across the rungs.
pub fn avg_height_comparison_ladder(ns: &[usize]) -> Vec<AsymptoticComparison> {
    check_ladder(ns);
    let motzkin = motzkin_numbers(*ns.last().unwrap());
    let mut table = TrinomialTable::new();
    ns.iter()
        .map(|&n| {
            let report = height_report_from_parts(table.row(n), &motzkin[n]);
            AsymptoticComparison::new(n, report.exact_average, report.asymptotic_average)
        })
        .collect()
}

/// Exact average leaf count at semilength `n` against `(4/9)(n+1)`.
pub fn avg_leaves_comparison(n: usize) -> AsymptoticComparison {
    let report = crate::gf::leaves::avg_leaves_exact(n);
    AsymptoticComparison::new(n, report.exact_average, report.asymptotic_average)
}

/// [`avg_leaves_comparison`] along a ladder of semilengths, sharing one
/// expansion of the leaf series across the rungs.
pub fn avg_leaves_comparison_ladder(ns: &[usize]) -> Vec<AsymptoticComparison> {
    check_ladder(ns);
    let max = *ns.last().unwrap();
    let r = leaves_r_series(max + 1);
    let motzkin = motzkin_numbers(max);
    ns.iter()
        .map(|&n| {
            let total = r.coeff(n + 1);
            assert!(total.is_integer(), "leaf totals are integers");
            AsymptoticComparison::new(
                n,
                Rat::new(total.numer().clone(), motzkin[n].clone()),
                avg_leaves_asym(n + 1),
            )
        })
        .collect()
}

/// `[z^{n+1}]` of the height numerator against `3^{n+1}/(n+1)`.
///
/// Both sides are divided by `3^{n+1}` before being stored — the exact
/// field holds an exact rational either way, and the asymptotic field
/// becomes `1/(n+1)` — so the row stays within floating range at any `n`.
/// The common rescaling leaves the ratio untouched.
pub fn height_numerator_comparison(n: usize) -> AsymptoticComparison {
    height_numerator_comparison_ladder(&[n]).pop().expect("one rung")
}

/// [`height_numerator_comparison`] along a ladder, sharing the triangle
/// walk and Motzkin table.
pub fn height_numerator_comparison_ladder(ns: &[usize]) -> Vec<AsymptoticComparison> {
    check_ladder(ns);
    let motzkin = motzkin_numbers(*ns.last().unwrap());
    let mut table = TrinomialTable::new();
    ns.iter()
        .map(|&n| {
            let coeff = BigInt::from(2) * height_coeff_formula_from_row(table.row(n))
                - BigInt::from(2) * &motzkin[n];
            let scale = BigInt::from(3).pow((n + 1) as u32);
            AsymptoticComparison::new(
                n,
                Rat::new(coeff, scale),
                1.0 / (n + 1) as f64,
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::series::{int, rat};

    #[test]
    fn evaluators_at_small_arguments() {
        assert!((motzkin_asym(1) - 3f64.powf(1.5) / (2.0 * PI.sqrt())).abs() < 1e-12);
        assert!((avg_height_asym(3) - 2.0 * PI.sqrt()).abs() < 1e-12);
        assert!((motzkin_path_height_ref(3) - PI.sqrt()).abs() < 1e-12);
        assert!((motzkin_path_height_ref(300) - (100.0 * PI).sqrt()).abs() < 1e-12);
        assert_eq!(avg_height_asym(17), 2.0 * motzkin_path_height_ref(17));
        assert_eq!(avg_leaves_asym(9), 4.0);
        assert!(4.0 / 9.0 < UNRESTRICTED_AVG_LEAF_FRACTION);
        assert!((height_numerator_asym_coeff(1) - 3.0).abs() < 1e-12);
        assert!((height_numerator_asym_coeff(2) - 4.5).abs() < 1e-12);
    }

    #[test]
    fn log_space_agrees_with_direct_evaluation() {
        for n in [1usize, 7, 40, 200] {
            let direct = 3f64.powf(n as f64 + 0.5) / (2.0 * PI.sqrt() * (n as f64).powf(1.5));
            assert!(
                (motzkin_asym(n) / direct - 1.0).abs() < 1e-12,
                "n = {n}"
            );
        }
    }

    #[test]
    fn rat_conversion() {
        assert_eq!(rat_to_f64(&rat(3, 2)), 1.5);
        assert_eq!(rat_to_f64(&rat(-7, 4)), -1.75);
        assert_eq!(rat_to_f64(&rat(0, 5)), 0.0);
        assert_eq!(rat_to_f64(&int(42)), 42.0);

        // huge numerator and denominator of similar size
        let big = BigInt::from(3).pow(500);
        let x = Rat::new(&big + BigInt::from(1), big.clone());
        assert!((rat_to_f64(&x) - 1.0).abs() < 1e-20);

        // very large value: agree with log-space evaluation
        let y = Rat::new(BigInt::from(3).pow(300), BigInt::from(2).pow(100));
        let expected_ln = 300.0 * 3f64.ln() - 100.0 * 2f64.ln();
        assert!((rat_to_f64(&y).ln() - expected_ln).abs() < 1e-9);
    }

    #[test]
    fn motzkin_comparison_is_sane() {
        let row = motzkin_comparison(50);
        assert_eq!(row.exact, Rat::from_integer(motzkin_numbers(49).pop().unwrap()));
        assert!((row.ratio - 1.0).abs() < 0.1, "ratio {}", row.ratio);
        let ladder = motzkin_comparison_ladder(&[5, 20, 50]);
        assert_eq!(ladder[2], motzkin_comparison(50));
    }

    #[test]
    fn ladders_match_single_rows() {
        assert_eq!(
            avg_height_comparison_ladder(&[4, 9]),
            vec![avg_height_comparison(4), avg_height_comparison(9)]
        );
        assert_eq!(
            avg_leaves_comparison_ladder(&[3, 8]),
            vec![avg_leaves_comparison(3), avg_leaves_comparison(8)]
        );
    }

    #[test]
    fn scaled_numerator_row_reproduces_plain_ratio() {
        // at small n the unscaled ratio is computable directly
        let n = 5usize;
        let row = height_numerator_comparison(n);
        let exact = oracle::total_even_height(n) as f64;
        let plain = exact / height_numerator_asym_coeff(n + 1);
        assert!((row.ratio - plain).abs() < 1e-10);
        assert!((row.asymptotic - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    #[should_panic(expected = "strictly increasing")]
    fn ladder_rejects_unsorted_rungs() {
        motzkin_comparison_ladder(&[10, 5]);
    }
}
