//! Acceptance gates for the library.
//!
//! Each test pins one numbered criterion — an exact identity, an
//! enumeration cross-check, or a frozen asymptotic tolerance — and prints
//! a single summary line when it holds (run with `--nocapture` to see the
//! lines). The numbering is shared with the command-line acceptance suite
//! in the companion crate, which covers criterion 9.

use num::BigInt;
use retakh::asym::{
    avg_height_comparison_ladder, avg_leaves_comparison, motzkin_comparison_ladder,
    AsymptoticComparison,
};
use retakh::gf::height::{height_coeff_formula_from_row, VContext};
use retakh::gf::leaves::{leaves_numerator, leaves_r_series};
use retakh::gf::trinomial::TrinomialTable;
use retakh::gf::{motzkin_numbers, motzkin_series, solve_fg, total_gf, v_series};
use retakh::oracle;
use retakh::paths::count_restricted;
use retakh::series::{int, Series};
use retakh::Rat;
use std::time::Instant;

fn gap(row: &AsymptoticComparison) -> f64 {
    (row.ratio - 1.0).abs()
}

#[test]
fn criterion_1_motzkin_enumeration() {
    let start = Instant::now();
    let total = total_gf(15).expect("total series");
    for n in 0..=14usize {
        let brute = count_restricted(n);
        assert_eq!(
            *total.coeff(n + 1),
            int(brute as i64),
            "count mismatch at semilength {n}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "time budget exceeded: {elapsed:?}"
    );
    println!(
        "criterion 1 PASS: brute-force counts equal [z^(n+1)] z*M(z) for n <= 14 ({elapsed:?})"
    );
}

#[test]
fn criterion_2_core_identities_at_order_200() {
    let start = Instant::now();
    let m = motzkin_series(200);
    let (f, _) = solve_fg(200).expect("F/G system");
    assert_eq!(f, m.shift_up(2), "F == z^2 * M failed");
    let total = total_gf(200).expect("internal total-series check");
    assert_eq!(total, m.shift_up(1), "total == z * M failed");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "time budget exceeded: {elapsed:?}"
    );
    println!("criterion 2 PASS: F == z^2*M and total == z*M exactly at order 200 ({elapsed:?})");
}

#[test]
fn criterion_3_substitution_and_closed_forms() {
    let n = 120;
    let ctx = VContext::new(n);
    let one = Series::one(n);
    let z = Series::z(n);

    let poly = one.add(&z).add(&z.mul(&z));
    assert_eq!(
        poly.compose(&v_series(n)),
        motzkin_series(n),
        "M == (1 + w + w^2) at w = v(z) failed"
    );

    assert_eq!(ctx.g_k(1), z, "G_1 == z failed");
    assert_eq!(
        ctx.f_k(1),
        z.mul(&z).div(&one.sub(&z)),
        "F_1 == z^2/(1-z) failed"
    );

    let mut g = ctx.g_k(1);
    for k in 1..=50usize {
        let next = ctx.g_k(k + 1);
        let rhs = z.div(&one.sub(&z.mul(&g).div(&one.sub(&g))));
        assert_eq!(next, rhs, "G_(k+1) recurrence failed at k = {k}");
        g = next;
    }
    println!(
        "criterion 3 PASS: substitution identity, base cases, and the G_k recurrence for k <= 50 at order {n}"
    );
}

#[test]
fn criterion_4_height_distribution() {
    let ctx = VContext::new(13);
    for n in 0..=12usize {
        let hist = oracle::height_histogram(n);
        let mut below = ctx.height_le_gf(0);
        for h in 1..=n.max(1) {
            let cur = ctx.height_le_gf(h);
            let diff = cur.sub(&below);
            let expected = hist.get(&(2 * h)).copied().unwrap_or(0);
            assert_eq!(
                *diff.coeff(n + 1),
                int(expected as i64),
                "count of height exactly {} at semilength {n}",
                2 * h
            );
            below = cur;
        }
    }
    println!(
        "criterion 4 PASS: bounded-height differences reproduce every exact-height count for n <= 12"
    );
}

#[test]
fn criterion_5_height_numerator() {
    let s = VContext::new(61).height_numerator();
    for n in 1..=12usize {
        let even = oracle::total_even_height(n);
        assert_eq!(
            *s.coeff(n + 1),
            int(even as i64),
            "numerator coefficient vs enumeration at n = {n}"
        );
        assert_eq!(
            even,
            oracle::total_height(n) - 1,
            "even-height total vs full total at n = {n}"
        );
    }
    let motzkin = motzkin_numbers(60);
    let mut table = TrinomialTable::new();
    for n in 1..=60usize {
        let expected = BigInt::from(2) * height_coeff_formula_from_row(table.row(n))
            - BigInt::from(2) * &motzkin[n];
        assert_eq!(
            *s.coeff(n + 1),
            Rat::from_integer(expected),
            "triangle formula vs series at n = {n}"
        );
    }
    println!(
        "criterion 5 PASS: numerator matches the enumeration (n <= 12) and the triangle/divisor formula (n <= 60)"
    );
}

#[test]
fn criterion_6_average_height_asymptotic() {
    let start = Instant::now();
    let rows = avg_height_comparison_ladder(&[250, 500, 1000, 2000]);
    let gaps: Vec<f64> = rows.iter().map(gap).collect();
    assert!(
        gaps[3] <= 0.15,
        "|ratio - 1| = {} at n = 2000 exceeds 0.15",
        gaps[3]
    );
    let wobbles = gaps.windows(2).filter(|w| w[1] > w[0]).count();
    assert!(wobbles <= 1, "ladder not settling: {gaps:?}");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 300.0,
        "time budget exceeded: {elapsed:?}"
    );
    println!(
        "criterion 6 PASS: average height vs 2*sqrt(pi*n/3), |ratio-1| ladder {gaps:?} ({elapsed:?})"
    );
}

#[test]
fn criterion_7_leaves() {
    let direct = leaves_numerator(100);
    let via_v = leaves_r_series(100);
    assert_eq!(direct, via_v, "derivative route != R(v) route at order 100");
    for n in 0..=12usize {
        assert_eq!(
            *via_v.coeff(n + 1),
            int(oracle::total_leaves(n) as i64),
            "leaf total at semilength {n}"
        );
    }
    let row = avg_leaves_comparison(1000);
    let g = gap(&row);
    assert!(g <= 0.02, "|ratio - 1| = {g} at n = 1000 exceeds 0.02");
    println!(
        "criterion 7 PASS: leaf numerator routes agree at order 100, totals match for n <= 12, ratio {:.4} at n = 1000",
        row.ratio
    );
}

#[test]
fn criterion_8_motzkin_asymptotic() {
    let rows = motzkin_comparison_ladder(&[50, 200]);
    let g50 = gap(&rows[0]);
    let g200 = gap(&rows[1]);
    assert!(g200 <= 0.05, "|ratio - 1| = {g200} at n = 200 exceeds 0.05");
    assert!(
        g200 < g50,
        "no improvement from n = 50 ({g50}) to n = 200 ({g200})"
    );
    println!(
        "criterion 8 PASS: M_(n-1) vs 3^(n+1/2)/(2 sqrt(pi) n^(3/2)), gap {g50:.4} at 50 -> {g200:.4} at 200"
    );
}
