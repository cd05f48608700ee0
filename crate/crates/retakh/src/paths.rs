//! Dyck paths with the Retakh peak condition.
//!
//! A Dyck path is a sequence of Up/Down steps that starts and ends on level 0
//! and never dips below it. The restricted class only allows peaks (an Up
//! immediately followed by a Down) on level 1 or on even levels. Restricted
//! paths of semilength `n` are counted by the Motzkin number `M_n`, which the
//! exhaustive enumeration here validates against the generating-function
//! pipeline in [`crate::gf`].

use std::fmt;
use std::str::FromStr;

/// A unit move of a Dyck path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Up,
    Down,
}

/// An Up/Down step sequence. Validity (never below level 0, ends on level 0)
/// is a queryable property, not a construction invariant; the enumeration
/// only ever produces valid paths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Per-path record used by the brute-force oracle: height (max level, which
/// equals tree height in edges), the peaks with their levels, and the leaf
/// count under the tree convention (the empty path is a single node, one
/// leaf).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathStats {
    pub height: usize,
    pub peaks: Vec<(usize, usize)>,
    pub leaf_count: usize,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn empty() -> Self {
        Self { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Half the step count (the number of Up steps for a valid path).
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// True iff no prefix dips below level 0 and the path returns to level 0.
    pub fn is_valid(&self) -> bool {
        let mut level = 0i64;
        for step in &self.steps {
            level += match step {
                Step::Up => 1,
                Step::Down => -1,
            };
            if level < 0 {
                return false;
            }
        }
        level == 0
    }

    /// All peaks as `(index of the Up step, level after the Up step)`.
    pub fn peaks(&self) -> Vec<(usize, usize)> {
        assert!(self.is_valid(), "peaks requires a valid Dyck path");
        self.peaks_unchecked()
    }

    fn peaks_unchecked(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut level = 0usize;
        for (i, pair) in self.steps.windows(2).enumerate() {
            match pair[0] {
                Step::Up => {
                    level += 1;
                    if pair[1] == Step::Down {
                        out.push((i, level));
                    }
                }
                Step::Down => level -= 1,
            }
        }
        out
    }

    /// The Retakh condition: every peak lies on level 1 or on an even level.
    pub fn is_retakh(&self) -> bool {
        assert!(self.is_valid(), "is_retakh requires a valid Dyck path");
        self.peaks_unchecked()
            .iter()
            .all(|&(_, level)| level == 1 || level % 2 == 0)
    }

    pub fn stats(&self) -> PathStats {
        assert!(self.is_valid(), "stats requires a valid Dyck path");
        let peaks = self.peaks_unchecked();
        let mut height = 0usize;
        let mut level = 0usize;
        for step in &self.steps {
            match step {
                Step::Up => {
                    level += 1;
                    height = height.max(level);
                }
                Step::Down => level -= 1,
            }
        }
        let leaf_count = if self.steps.is_empty() { 1 } else { peaks.len() };
        PathStats {
            height,
            peaks,
            leaf_count,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(format!("invalid step character {other:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { steps })
    }
}

/// Visit every Retakh path of semilength `n` exactly once, in ascending
/// lexicographic order of the rendered U/D string.
///
/// Depth-first prefix extension with level pruning; a branch that would
/// complete a peak on an odd level above 1 is cut immediately, so the walk
/// never materializes the excluded part of the Catalan tree.
pub fn visit_restricted(n: usize, mut f: impl FnMut(&DyckPath)) {
    fn rec(path: &mut DyckPath, level: usize, remaining: usize, f: &mut impl FnMut(&DyckPath)) {
        if remaining == 0 {
            f(path);
            return;
        }
        // Down first: 'D' < 'U' in the rendered string order
        if level >= 1 {
            let completes_peak = path.steps.last() == Some(&Step::Up);
            if !completes_peak || level == 1 || level % 2 == 0 {
                path.steps.push(Step::Down);
                rec(path, level - 1, remaining - 1, f);
                path.steps.pop();
            }
        }
        // an Up needs room for its matching Down
        if remaining >= level + 2 {
            path.steps.push(Step::Up);
            rec(path, level + 1, remaining - 1, f);
            path.steps.pop();
        }
    }
    let mut path = DyckPath {
        steps: Vec::with_capacity(2 * n),
    };
    rec(&mut path, 0, 2 * n, &mut f);
}

/// Materialize the restricted paths of semilength `n` in enumeration order.
pub fn enumerate_restricted(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    visit_restricted(n, |p| out.push(p.clone()));
    out
}

/// Count restricted paths of semilength `n` without materializing them.
pub fn count_restricted(n: usize) -> u64 {
    let mut count = 0u64;
    visit_restricted(n, |_| count += 1);
    count
}
