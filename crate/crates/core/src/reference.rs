//! Published reference values, transcribed as printed.
//!
//! Square tables are indexed `[m − 1][s − 1]`. These are data only; nothing
//! in the crate computes from them.

/// Symbolic ultrametrics / labeled `m`-partite series-reduced trees.
pub const SYMBOLIC: [[u64; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 8, 52, 472, 5504, 78416, 1320064],
    [1, 3, 21, 243, 3933, 81819, 2080053, 62490339],
    [1, 4, 40, 664, 15424, 460576, 16808320, 724904896],
    [1, 5, 65, 1405, 42505, 1653125, 78578225, 4414067725],
    [1, 6, 96, 2556, 95256, 4563936, 267253776, 18494891136],
    [1, 7, 133, 4207, 186277, 10603999, 737769781, 60662126959],
    [1, 8, 176, 6448, 330688, 21804224, 1757138048, 167347010944],
];

/// Fully colored labeled `m`-partite series-reduced trees.
pub const FULLY_COLORED_LABELED: [[u64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [2, 2, 8, 52, 472, 5504],
    [3, 12, 168, 3888, 125856, 5236416],
    [4, 36, 1080, 53784, 3748032, 335759904],
    [5, 80, 4160, 359680, 43525120, 6771200000],
    [6, 150, 12000, 1597500, 297675000, 71311500000],
];

/// Labeled `m`-partite mobiles.
pub const MOBILES: [[u64; 8]; 8] = [
    [1, 1, 2, 6, 24, 120, 720, 5040],
    [1, 2, 10, 82, 938, 13778, 247210, 5240338],
    [1, 3, 24, 318, 5892, 140304, 4082712, 140389824],
    [1, 4, 44, 804, 20556, 675588, 27135468, 1288020708],
    [1, 5, 70, 1630, 53120, 2225480, 113950720, 6895234480],
    [1, 6, 102, 2886, 114294, 5819190, 362107110, 26628964710],
    [1, 7, 140, 4662, 217308, 13022688, 953817480, 82561002048],
    [1, 8, 184, 7048, 377912, 26052104, 2195014072, 218563826824],
];

/// Unlabeled `m`-partite series-reduced trees.
pub const MULTIPARTITE_UNLABELED: [[u64; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 4, 10, 24, 66, 180, 522],
    [1, 3, 9, 39, 153, 723, 3321, 16479],
    [1, 4, 16, 100, 544, 3652, 23536, 165532],
    [1, 5, 25, 205, 1425, 12405, 102825, 936765],
    [1, 6, 36, 366, 3096, 33126, 335556, 3755286],
    [1, 7, 49, 595, 5929, 75271, 900865, 11958667],
    [1, 8, 64, 904, 10368, 152328, 2102976, 32301144],
];

/// Fully colored unlabeled `m`-partite series-reduced trees.
pub const FULLY_COLORED_UNLABELED: [[u64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [2, 2, 4, 10, 24, 66],
    [3, 12, 72, 624, 4896, 46272],
    [4, 36, 432, 8100, 132192, 2662308],
    [5, 80, 1600, 52480, 1459200, 50810880],
    [6, 150, 4500, 228750, 9675000, 517593750],
];

/// Unlabeled series-reduced trees by leaves `n` (columns `2..=10`) and inner
/// vertices `k` (rows `1..=9`); `None` where the printed cell is blank.
pub const RIORDAN_TRIANGLE: [[Option<u64>; 9]; 9] = {
    const N: Option<u64> = None;
    [
        [Some(1), Some(1), Some(1), Some(1), Some(1), Some(1), Some(1), Some(1), Some(1)],
        [N, Some(1), Some(2), Some(3), Some(4), Some(5), Some(6), Some(7), Some(8)],
        [N, N, Some(2), Some(5), Some(10), Some(16), Some(24), Some(33), Some(44)],
        [N, N, N, Some(3), Some(12), Some(29), Some(57), Some(99), Some(157)],
        [N, N, N, N, Some(6), Some(28), Some(84), Some(192), Some(382)],
        [N, N, N, N, N, Some(11), Some(66), Some(231), Some(615)],
        [N, N, N, N, N, N, Some(23), Some(157), Some(634)],
        [N, N, N, N, N, N, N, Some(46), Some(373)],
        [N, N, N, N, N, N, N, N, Some(98)],
    ]
};

/// Column sums of [`RIORDAN_TRIANGLE`].
pub const RIORDAN_SUMS: [u64; 9] = [1, 2, 5, 12, 33, 90, 261, 766, 2312];

/// Rooted unlabeled series-reduced trees, `s = 1..=10`.
pub const UNLABELED_TOTALS: [u64; 10] = [1, 1, 2, 5, 12, 33, 90, 261, 766, 2312];

/// `a_s(m)` for `s = 1..=7`, coefficients of `m^0, m^1, …`.
pub const A_POLYNOMIALS: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[0, -2, 3],
    &[0, 6, -20, 15],
    &[0, -24, 130, -210, 105],
    &[0, 120, -924, 2380, -2520, 945],
    &[0, -720, 7308, -26432, 44100, -34650, 10395],
];

/// `ā_s(m)` for `s = 1..=8`, coefficients of `m^0, m^1, …`.
pub const UNLABELED_POLYNOMIALS: [&[i64]; 8] = [
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[0, 1, -2, 2],
    &[0, 0, 2, -4, 3],
    &[0, 1, -4, 10, -12, 6],
    &[0, 0, 3, -13, 27, -27, 11],
    &[0, 3, -15, 42, -79, 99, -72, 23],
];

/// `[t^s/s!] P(m, t, x)` as `(m, s, expansion)`.
pub const P_EXPANSIONS: &[(u32, usize, &str)] = &[
    (1, 1, "1"),
    (1, 2, "x_{1,2}"),
    (1, 3, "x_{1,3}"),
    (1, 4, "x_{1,4}"),
    (1, 5, "x_{1,5}"),
    (2, 1, "1"),
    (2, 2, "x_{1,2}+x_{2,2}"),
    (2, 3, "x_{1,3}+x_{2,3}+6x_{1,2}x_{2,2}"),
    (
        2,
        4,
        "x_{1,4}+x_{2,4}
         +10(x_{1,3}x_{2,2}+x_{2,3}x_{1,2})
         +15(x_{1,2}^{2}x_{2,2}+x_{1,2}x_{2,2}^{2})",
    ),
    (
        2,
        5,
        "x_{1,5}+x_{2,5}
         +20x_{1,3}x_{2,3}
         +15(x_{1,4}x_{2,2}+x_{2,4}x_{1,2}+x_{2,2}x_{1,2}^{3}+x_{2,2}^{3}x_{1,2})
         +45(x_{2,3}x_{1,2}^{2}+x_{1,3}x_{2,2}^{2})
         +60(x_{1,3}x_{2,2}x_{1,2}+x_{2,2}x_{2,3}x_{1,2})
         +180x_{2,2}^{2}x_{1,2}^{2}",
    ),
    (3, 1, "1"),
    (3, 2, "x_{1,2}+x_{2,2}+x_{3,2}"),
    (
        3,
        3,
        "x_{1,3}+x_{2,3}+x_{3,3}+6(x_{1,2}x_{2,2}+x_{1,2}x_{3,2}+x_{2,2}x_{3,2})",
    ),
    (
        3,
        4,
        "15(x_{1,2}^2x_{2,2}+x_{1,2}x_{2,2}^2+x_{1,2}^2x_{3,2}+x_{1,2}x_{3,2}^2+x_{2,2}^2x_{3,2}+x_{2,2}x_{3,2}^2)
         +10(x_{2,3}x_{1,2}+x_{3,3}x_{1,2}+x_{1,3}x_{2,2}+x_{1,3}x_{3,2}+x_{2,3}x_{3,2}+x_{2,2}x_{3,3})
         +90x_{1,2}x_{2,2}x_{3,2}
         +x_{1,4}+x_{2,4}+x_{3,4}",
    ),
];
