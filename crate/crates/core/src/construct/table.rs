//! Generating pairs for duality-types outside the reach of the general
//! cases: both odd with `l ≤ 8`, `{even, 2}`, and `l = n ∈ {3, 5}`.
//!
//! Every entry is the first hit of [`super::search::search_extreme_pair`]
//! with `extra = 4`; the `small_case_table` test regenerates the table and
//! compares it with this data.

use crate::perm::{parse_cycles, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallCase {
    /// Order of `x`; always `≥ n`.
    pub l: usize,
    /// Order of `y`.
    pub n: usize,
    pub degree: usize,
    pub x: &'static str,
    pub y: &'static str,
}

impl SmallCase {
    pub fn generators(&self) -> (Permutation, Permutation) {
        (
            parse_cycles(self.x, Some(self.degree)).expect("table entry parses"),
            parse_cycles(self.y, Some(self.degree)).expect("table entry parses"),
        )
    }
}

/// Search extent used to generate [`SMALL_CASES`].
pub const SEARCH_EXTRA_DEGREE: usize = 4;

pub const SMALL_CASES: &[SmallCase] = &[
    // search: A_5
    SmallCase { l: 5, n: 3, degree: 5, x: "(1,2,3,4,5)", y: "(1,2,3)" },
    // search: A_7
    SmallCase { l: 7, n: 3, degree: 7, x: "(1,2,3,4,5,6,7)", y: "(1,2,3)" },
    // search: A_7
    SmallCase { l: 7, n: 5, degree: 7, x: "(1,2,3,4,5,6,7)", y: "(1,2,3,4,5)" },
    // search: S_6
    SmallCase { l: 4, n: 2, degree: 6, x: "(1,2,3,4)(5,6)", y: "(2,3)(4,5)" },
    // search: S_6
    SmallCase { l: 6, n: 2, degree: 6, x: "(1,2,3)(4,5)", y: "(3,4)(5,6)" },
    // search: S_8
    SmallCase { l: 8, n: 2, degree: 8, x: "(1,2,3,4,5,6,7,8)", y: "(1,2)(3,4)" },
    // search: S_10
    SmallCase { l: 10, n: 2, degree: 10, x: "(1,2,3,4,5,6,7,8,9,10)", y: "(1,2)(3,4)" },
    // search: S_12
    SmallCase { l: 12, n: 2, degree: 12, x: "(1,2,3,4,5,6,7,8,9,10,11,12)", y: "(1,2)(3,4)" },
    // search: A_7
    SmallCase { l: 3, n: 3, degree: 7, x: "(1,2,3)", y: "(1,6,7)(3,4,5)" },
    // search: A_7
    SmallCase { l: 5, n: 5, degree: 7, x: "(1,2,3,4,5)", y: "(1,4,5,6,7)" },
];

pub(crate) fn lookup(l: usize, n: usize) -> Option<&'static SmallCase> {
    SMALL_CASES.iter().find(|c| c.l == l && c.n == n)
}
