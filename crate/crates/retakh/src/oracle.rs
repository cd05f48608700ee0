//! Brute-force reference statistics, computed by exhaustive enumeration.
//!
//! Everything here walks the full set of restricted paths of a given
//! semilength and tallies statistics directly, with no generating functions
//! involved. The totals are small enough for `u64` throughout the feasible
//! range (a few hundred thousand paths), and serve as the independent side
//! of every cross-check against the analytic pipeline.

use crate::paths::visit_restricted;
use std::collections::BTreeMap;

/// `height -> number of restricted paths of semilength n with that height`.
pub fn height_histogram(n: usize) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    visit_restricted(n, |p| {
        *hist.entry(p.stats().height).or_insert(0u64) += 1;
    });
    hist
}

/// Sum of heights over all restricted paths of semilength n.
pub fn total_height(n: usize) -> u64 {
    let mut total = 0u64;
    visit_restricted(n, |p| total += p.stats().height as u64);
    total
}

/// Like [`total_height`], but each height is rounded down to an even value
/// first (h -> h - 1 for odd h). A path's topmost level is always a peak
/// level, so a restricted path has height 1 or an even height; the rounding
/// only touches the single height-1 sawtooth path per semilength.
pub fn total_even_height(n: usize) -> u64 {
    let mut total = 0u64;
    visit_restricted(n, |p| {
        let h = p.stats().height as u64;
        total += h - h % 2;
    });
    total
}

/// Sum of leaf counts over all restricted paths of semilength n, under the
/// tree convention (empty path: one leaf; otherwise one leaf per peak).
pub fn total_leaves(n: usize) -> u64 {
    let mut total = 0u64;
    visit_restricted(n, |p| total += p.stats().leaf_count as u64);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::count_restricted;

    #[test]
    fn histogram_small_cases() {
        assert_eq!(height_histogram(0), BTreeMap::from([(0, 1)]));
        assert_eq!(height_histogram(1), BTreeMap::from([(1, 1)]));
        assert_eq!(height_histogram(2), BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(height_histogram(3), BTreeMap::from([(1, 1), (2, 3)]));
    }

    #[test]
    fn histogram_mass_equals_count() {
        for n in 0..=9 {
            let hist = height_histogram(n);
            assert_eq!(hist.values().sum::<u64>(), count_restricted(n));
        }
    }

    #[test]
    fn totals_small_cases() {
        assert_eq!(total_height(2), 3);
        assert_eq!(total_height(3), 7);
        assert_eq!(total_even_height(2), 2);
        assert_eq!(total_even_height(3), 6);
        assert_eq!(total_leaves(0), 1);
        assert_eq!(total_leaves(1), 1);
        assert_eq!(total_leaves(2), 3);
    }

    #[test]
    fn even_total_drops_odd_part() {
        // every restricted path of positive semilength has a unique topmost
        // run, so total_height - total_even_height counts odd-height paths
        for n in 1..=9 {
            let odd_mass: u64 = height_histogram(n)
                .iter()
                .filter(|&(h, _)| h % 2 == 1)
                .map(|(_, c)| c)
                .sum();
            assert_eq!(total_height(n) - total_even_height(n), odd_mass);
        }
    }
}
