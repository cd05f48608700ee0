//! End-to-end cross-validation of the crate's independent routes.
//!
//! Every quantity here is computable at least two ways — direct
//! enumeration, fixed-point series, closed forms, coefficient formulas,
//! asymptotic estimates — and this module runs the comparisons, one
//! [`Check`] per family. A [`Fault`] can be injected to miscompute one
//! closed form on purpose, which lets callers confirm that the suite
//! really does catch a broken invariant rather than passing vacuously.

use crate::asym::{motzkin_asym, AsymptoticComparison};
use crate::gf::height::{height_coeff_formula_from_row, height_report_from_parts, VContext};
use crate::gf::leaves::{leaves_closed_form, leaves_numerator, leaves_r_series, leaves_total_gf};
use crate::gf::trinomial::TrinomialTable;
use crate::gf::{
    motzkin_closed_form, motzkin_numbers, motzkin_series, solve_fg, total_gf, v_series,
};
use crate::series::{int, Rat, Series};
use crate::{oracle, paths};
use num::BigInt;

/// How much ground the suite covers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    /// Small orders and ranges; a few seconds.
    Quick,
    /// The ranges the acceptance gates use, including the large-`n`
    /// convergence ladders; takes minutes.
    Full,
}

/// A deliberate defect, used to demonstrate the suite has teeth.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fault {
    /// Build the closed form for `G_k` with denominator exponent
    /// `2k + 2` instead of `2k + 1`.
    GkExponent,
}

/// Outcome of one family of comparisons.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn outcome(name: &'static str, failures: Vec<String>, ok: String) -> Self {
        if failures.is_empty() {
            Check {
                name,
                passed: true,
                detail: ok,
            }
        } else {
            Check {
                name,
                passed: false,
                detail: failures.join("; "),
            }
        }
    }
}

/// Run every check family at the given level. The returned vector always
/// lists each family exactly once, pass or fail.
pub fn run_suite(level: Level, fault: Option<Fault>) -> Vec<Check> {
    let (gk_order, gk_max) = match level {
        Level::Quick => (60, 10),
        Level::Full => (120, 50),
    };
    let ctx = VContext::new(gk_order);
    let mut checks = vec![
        check_counts(level),
        check_series_identities(level),
        check_gk_base(&ctx, fault),
        check_gk_recurrence(&ctx, gk_max, fault),
        check_height_distribution(level),
        check_height_numerator(level),
        check_leaves(level),
    ];
    if level == Level::Full {
        checks.push(check_asymptotic_scans());
    }
    checks
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// The closed form for `G_k`, optionally rebuilt with the injected
/// defect instead of delegating to the library routine.
fn closed_g_k(ctx: &VContext, k: usize, fault: Option<Fault>) -> Series {
    match fault {
        None => ctx.g_k(k),
        Some(Fault::GkExponent) => {
            let v = ctx.v();
            let one = Series::one(ctx.order());
            let num = v.mul(&one.sub(&v.pow(2 * k)));
            let den = one.add(v).mul(&one.sub(&v.pow(2 * k + 2)));
            num.div(&den)
        }
    }
}

fn check_counts(level: Level) -> Check {
    let n_max = match level {
        Level::Quick => 10,
        Level::Full => 14,
    };
    let mut failures = Vec::new();
    match total_gf(n_max + 1) {
        Ok(total) => {
            for n in 0..=n_max {
                let brute = paths::count_restricted(n);
                if *total.coeff(n + 1) != int(brute as i64) {
                    failures.push(format!("semilength {n}: enumeration and series disagree"));
                }
            }
        }
        Err(e) => failures.push(format!("total series: {e}")),
    }
    Check::outcome(
        "counts-vs-series",
        failures,
        format!("enumerated counts match the series for semilength <= {n_max}"),
    )
}

fn check_series_identities(level: Level) -> Check {
    let n = match level {
        Level::Quick => 60,
        Level::Full => 200,
    };
    let mut failures = Vec::new();
    let m = motzkin_series(n);
    if motzkin_closed_form(n) != m {
        failures.push("closed form diverges from the fixed point".to_string());
    }
    match solve_fg(n) {
        Ok((f, g)) => {
            if f != m.shift_up(2) {
                failures.push("F != z^2 * M".to_string());
            }
            let one = Series::one(n);
            if g != Series::z(n).div(&one.sub(&f)) {
                failures.push("G != z/(1 - F)".to_string());
            }
        }
        Err(e) => failures.push(format!("F/G system: {e}")),
    }
    if let Err(e) = total_gf(n) {
        failures.push(format!("total series: {e}"));
    }
    let z = Series::z(n);
    let poly = Series::one(n).add(&z).add(&z.mul(&z));
    if poly.compose(&v_series(n)) != m {
        failures.push("M != (1 + w + w^2) at w = v(z)".to_string());
    }
    Check::outcome(
        "series-identities",
        failures,
        format!("core series identities hold at order {n}"),
    )
}

fn check_gk_base(ctx: &VContext, fault: Option<Fault>) -> Check {
    let n = ctx.order();
    let one = Series::one(n);
    let z = Series::z(n);
    let mut failures = Vec::new();
    if closed_g_k(ctx, 1, fault) != z {
        failures.push("closed form for G_1 is not z".to_string());
    }
    if ctx.f_k(1) != z.mul(&z).div(&one.sub(&z)) {
        failures.push("closed form for F_1 is not z^2/(1 - z)".to_string());
    }
    Check::outcome(
        "gk-base-cases",
        failures,
        format!("G_1 = z and F_1 = z^2/(1 - z) at order {n}"),
    )
}

fn check_gk_recurrence(ctx: &VContext, k_max: usize, fault: Option<Fault>) -> Check {
    let n = ctx.order();
    let one = Series::one(n);
    let z = Series::z(n);
    let mut failures = Vec::new();
    let mut g = closed_g_k(ctx, 1, fault);
    for k in 1..=k_max {
        // F_k is the height-bounded square, G_k its column relative
        let f = ctx.f_k(k);
        if f != z.mul(&g).div(&one.sub(&g)) {
            failures.push(format!("F_{k} != z*G_{k}/(1 - G_{k})"));
            break;
        }
        if k == k_max {
            break;
        }
        let next = closed_g_k(ctx, k + 1, fault);
        if next != z.div(&one.sub(&z.mul(&g).div(&one.sub(&g)))) {
            failures.push(format!("G_{} does not satisfy the recurrence", k + 1));
            break;
        }
        g = next;
    }
    Check::outcome(
        "gk-recurrence",
        failures,
        format!("closed forms satisfy the recurrence for k <= {k_max} at order {n}"),
    )
}

fn check_height_distribution(level: Level) -> Check {
    let n_max = match level {
        Level::Quick => 8,
        Level::Full => 12,
    };
    let ctx = VContext::new(n_max + 1);
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let hist = oracle::height_histogram(n);
        for h in 0..=n {
            let series = ctx.height_le_gf(h);
            // the h = 0 series already admits the one height-1 path
            let bound = if h == 0 { 1 } else { 2 * h };
            let expected: u64 = hist
                .iter()
                .filter(|&(&height, _)| height <= bound)
                .map(|(_, &c)| c)
                .sum();
            if *series.coeff(n + 1) != int(expected as i64) {
                failures.push(format!("semilength {n}, height bound {bound}: count mismatch"));
            }
        }
    }
    Check::outcome(
        "height-distribution",
        failures,
        format!("bounded-height series match the enumeration for semilength <= {n_max}"),
    )
}

fn check_height_numerator(level: Level) -> Check {
    let (oracle_max, formula_max) = match level {
        Level::Quick => (8, 30),
        Level::Full => (12, 60),
    };
    let mut failures = Vec::new();
    let ctx = VContext::new(formula_max + 1);
    let s = ctx.height_numerator();
    for n in 1..=oracle_max {
        let even = oracle::total_even_height(n);
        if *s.coeff(n + 1) != int(even as i64) {
            failures.push(format!("semilength {n}: numerator coefficient mismatch"));
        }
        if even != oracle::total_height(n) - 1 {
            failures.push(format!(
                "semilength {n}: rounded total is not the plain total minus one"
            ));
        }
    }
    let motzkin = motzkin_numbers(formula_max);
    let mut table = TrinomialTable::new();
    for n in 1..=formula_max {
        let hcf = height_coeff_formula_from_row(table.row(n));
        let expected = BigInt::from(2) * hcf - BigInt::from(2) * &motzkin[n];
        if *s.coeff(n + 1) != Rat::from_integer(expected) {
            failures.push(format!("semilength {n}: coefficient formula mismatch"));
        }
    }
    Check::outcome(
        "height-numerator",
        failures,
        format!(
            "numerator matches the enumeration (n <= {oracle_max}) and the triangle formula (n <= {formula_max})"
        ),
    )
}

fn check_leaves(level: Level) -> Check {
    let (bi_order, r_order) = match level {
        Level::Quick => (30, 40),
        Level::Full => (40, 100),
    };
    let mut failures = Vec::new();
    if let Err(e) = leaves_closed_form(bi_order) {
        failures.push(format!("bivariate closed form: {e}"));
    }
    let slice = leaves_total_gf(bi_order).at_u_one();
    match total_gf(bi_order) {
        Ok(total) => {
            if slice != total {
                failures.push("u = 1 slice of the leaf series is not the plain total".to_string());
            }
        }
        Err(e) => failures.push(format!("total series: {e}")),
    }
    let direct = leaves_numerator(r_order);
    let via_v = leaves_r_series(r_order);
    if direct != via_v {
        failures.push("leaf numerator differs from its v-substitution form".to_string());
    }
    for n in 0..=8 {
        if *via_v.coeff(n + 1) != int(oracle::total_leaves(n) as i64) {
            failures.push(format!("semilength {n}: leaf total mismatch"));
        }
    }
    Check::outcome(
        "leaves",
        failures,
        format!(
            "leaf statistics agree across system, closed form, substitution (order {r_order}), and enumeration"
        ),
    )
}

/// Convergence ladders at large `n`; full level only. Shares one Motzkin
/// table and one triangle walk across all four scans.
fn check_asymptotic_scans() -> Check {
    let mut failures = Vec::new();
    let motzkin = motzkin_numbers(2000);

    let count_gaps: Vec<f64> = [50usize, 100, 200]
        .iter()
        .map(|&n| {
            let row = AsymptoticComparison::new(
                n,
                Rat::from_integer(motzkin[n - 1].clone()),
                motzkin_asym(n),
            );
            (row.ratio - 1.0).abs()
        })
        .collect();
    if count_gaps[2] > 0.05 {
        failures.push(format!("count ratio off by {:.4} at n = 200", count_gaps[2]));
    }
    if !(count_gaps[0] >= count_gaps[1] && count_gaps[1] >= count_gaps[2]) {
        failures.push("count ratio not improving over n = 50, 100, 200".to_string());
    }

    let mut table = TrinomialTable::new();
    let mut height_gaps = Vec::new();
    let mut numer_gaps = Vec::new();
    for &n in &[250usize, 500, 1000, 2000] {
        let row = table.row(n);
        let report = height_report_from_parts(row, &motzkin[n]);
        let avg = AsymptoticComparison::new(n, report.exact_average, report.asymptotic_average);
        height_gaps.push((avg.ratio - 1.0).abs());
        let coeff = BigInt::from(2) * height_coeff_formula_from_row(row)
            - BigInt::from(2) * &motzkin[n];
        let scaled = AsymptoticComparison::new(
            n,
            Rat::new(coeff, BigInt::from(3).pow((n + 1) as u32)),
            1.0 / (n + 1) as f64,
        );
        numer_gaps.push((scaled.ratio - 1.0).abs());
    }
    if *height_gaps.last().unwrap() > 0.15 {
        failures.push(format!(
            "height ratio off by {:.4} at n = 2000",
            height_gaps.last().unwrap()
        ));
    }
    if height_gaps.windows(2).filter(|w| w[1] > w[0]).count() > 1 {
        failures.push("height ratio ladder is not settling".to_string());
    }
    if *numer_gaps.last().unwrap() > 0.10 {
        failures.push(format!(
            "numerator coefficient ratio off by {:.4} at n = 2000",
            numer_gaps.last().unwrap()
        ));
    }

    let r = leaves_r_series(1001);
    let mut leaf_gap = 0.0;
    for &n in &[125usize, 250, 500, 1000] {
        let total = r.coeff(n + 1);
        let row = AsymptoticComparison::new(
            n,
            Rat::new(total.numer().clone(), motzkin[n].clone()),
            4.0 * (n + 1) as f64 / 9.0,
        );
        leaf_gap = (row.ratio - 1.0).abs();
    }
    if leaf_gap > 0.02 {
        failures.push(format!("leaf ratio off by {:.4} at n = 1000", leaf_gap));
    }

    Check::outcome(
        "asymptotic-scans",
        failures,
        "convergence ladders for counts, heights, numerator coefficients, and leaves all settle"
            .to_string(),
    )
}
