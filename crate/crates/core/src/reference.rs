//! Reference values the pipeline is checked against: evident-lattice
//! generators, discriminant groups, and the coefficient vectors of chosen
//! generators of the discriminant groups of `L_k` and `E_k`.

/// Rational number given as `(numerator, denominator)`.
pub type Frac = (i64, i64);

/// Components `Θ_first ..= Θ_last` of the reducible fiber at position
/// `fiber` in the reference fiber order, named `letter_first .. letter_last`.
#[derive(Clone, Copy, Debug)]
pub struct ComponentRange {
    pub fiber: usize,
    pub first: usize,
    pub last: usize,
}

/// Generators of `E_k` after `F` and `(O)`: sections, then fiber
/// components.
#[derive(Clone, Copy, Debug)]
pub struct EvidentGenerators {
    pub sections: &'static [&'static str],
    pub components: &'static [ComponentRange],
}

const fn r(fiber: usize, first: usize, last: usize) -> ComponentRange {
    ComponentRange { fiber, first, last }
}

/// Generator list of `E_k`, `k = 6..=18`.
///
/// For `k = 12` the three-torsion fiber `I_3` contributes both of its
/// non-identity components; with a single one the list has 16 elements while
/// the rank is 17.
pub fn evident_generators(k: u8) -> Option<EvidentGenerators> {
    let (sections, components): (&[&str], &[ComponentRange]) = match k {
        6 => {
            const C: &[ComponentRange] = &[r(0, 2, 7), r(1, 1, 7)];
            (&["Q", "O'"], C)
        }
        7 => {
            const C: &[ComponentRange] = &[r(0, 1, 7), r(1, 1, 7)];
            (&["Q"], C)
        }
        8 => {
            const C: &[ComponentRange] = &[r(0, 1, 5), r(1, 1, 2), r(2, 1, 7)];
            (&["Q"], C)
        }
        9 => {
            const C: &[ComponentRange] = &[r(0, 1, 5), r(1, 1, 8)];
            (&["Q", "O'"], C)
        }
        10 => {
            const C: &[ComponentRange] = &[r(0, 1, 4), r(1, 1, 10)];
            (&["Q"], C)
        }
        11 => {
            const C: &[ComponentRange] = &[r(0, 1, 6), r(1, 1, 8)];
            (&["Q"], C)
        }
        12 => {
            const C: &[ComponentRange] = &[r(0, 1, 5), r(1, 1, 2), r(2, 1, 7)];
            (&["Q"], C)
        }
        13 => {
            const C: &[ComponentRange] = &[r(0, 1, 4), r(1, 1, 1), r(2, 1, 7)];
            (&["Q", "O'"], C)
        }
        14 => {
            const C: &[ComponentRange] = &[r(0, 1, 6), r(1, 1, 7)];
            (&["Q"], C)
        }
        15 => {
            const C: &[ComponentRange] = &[r(0, 1, 4), r(1, 1, 2), r(2, 1, 7)];
            (&["Q"], C)
        }
        16 => {
            const C: &[ComponentRange] = &[r(0, 1, 4), r(1, 1, 9)];
            (&["Q"], C)
        }
        17 => {
            const C: &[ComponentRange] = &[r(0, 1, 4), r(1, 1, 1), r(2, 1, 1), r(3, 1, 5)];
            (&["Q", "O'"], C)
        }
        18 => {
            const C: &[ComponentRange] = &[r(0, 1, 6), r(1, 1, 2), r(2, 1, 4)];
            (&["Q"], C)
        }
        _ => return None,
    };
    Some(EvidentGenerators { sections, components })
}

/// `|det E_k| = |det L_k|`.
pub fn evident_det(k: u8) -> Option<u64> {
    const D: [u64; 13] = [16, 12, 20, 16, 14, 12, 18, 28, 23, 31, 20, 48, 44];
    (6..=18).contains(&k).then(|| D[k as usize - 6])
}

/// `G_k` with cyclic summands in decreasing order, as printed by
/// [`crate::lattice::FiniteQuadraticForm::group_string`].
///
/// For `k = 8` the group is `Z/20`, of the order `|det| = 20`.
pub fn discriminant_group(k: u8) -> Option<&'static str> {
    Some(match k {
        6 => "Z/4+Z/2+Z/2",
        7 => "Z/12",
        8 => "Z/20",
        9 => "Z/16",
        10 => "Z/14",
        11 => "Z/12",
        12 => "Z/18",
        13 => "Z/14+Z/2",
        14 => "Z/23",
        15 => "Z/31",
        16 => "Z/10+Z/2",
        17 => "Z/12+Z/2+Z/2",
        18 => "Z/44",
        _ => return None,
    })
}

/// Cyclic summand of a discriminant group together with a generator given
/// by coefficients in a lattice basis, and the value of the form on it.
#[derive(Clone, Copy, Debug)]
pub struct CyclicSummand {
    pub order: u64,
    pub coefficients: &'static [Frac],
    pub q: Frac,
}

macro_rules! c {
    ($order:expr, $coefficients:expr, $q:expr $(,)?) => {
        CyclicSummand { order: $order, coefficients: $coefficients, q: $q }
    };
}

/// Generators `α` of the cyclic summands of `A_{L_k}` in the basis of the
/// Gram matrix of `L_k`.
pub fn alpha_summands(k: u8) -> Option<&'static [CyclicSummand]> {
    Some(match k {
        6 => &[
            c!(4, &[(3, 4), (1, 4), (1, 4)], (7, 4)),
            c!(2, &[(0, 1), (1, 2), (0, 1)], (0, 1)),
            c!(2, &[(1, 2), (1, 2), (0, 1)], (1, 1)),
        ],
        7 => &[c!(12, &[(1, 6), (11, 12), (5, 12)], (23, 12))],
        8 => &[c!(20, &[(1, 10), (7, 20), (19, 20)], (39, 20))],
        9 => &[c!(16, &[(3, 8), (1, 8), (15, 16)], (31, 16))],
        10 => &[c!(14, &[(2, 7), (5, 14), (3, 14)], (3, 14))],
        11 => &[c!(12, &[(7, 12), (11, 12), (1, 4)], (19, 12))],
        12 => &[c!(18, &[(13, 18), (8, 9), (1, 3)], (31, 18))],
        13 => &[c!(14, &[(2, 7), (5, 7), (3, 14), (1, 14)], (12, 7)), c!(2, &[(0, 1), (1, 2), (0, 1), (1, 2)], (0, 1))],
        14 => &[c!(23, &[(9, 23), (17, 23), (5, 23), (1, 23)], (40, 23))],
        15 => &[c!(31, &[(13, 31), (5, 31), (12, 31), (14, 31)], (44, 31))],
        16 => {
            &[c!(10, &[(3, 10), (1, 5), (7, 10), (1, 10)], (17, 10)), c!(2, &[(1, 2), (1, 2), (0, 1), (1, 2)], (1, 2))]
        }
        17 => &[
            c!(12, &[(1, 6), (5, 6), (1, 3), (5, 12), (5, 12)], (17, 12)),
            c!(2, &[(0, 1), (0, 1), (1, 2), (0, 1), (1, 2)], (0, 1)),
            c!(2, &[(0, 1), (1, 2), (1, 2), (1, 2), (1, 2)], (1, 1)),
        ],
        18 => &[c!(44, &[(13, 44), (5, 44), (27, 44), (31, 44), (25, 44)], (57, 44))],
        _ => return None,
    })
}

/// Generators `β` of the cyclic summands of `A_{E_k}` in the basis of
/// [`evident_generators`] (with `F, (O)` first).
pub fn beta_summands(k: u8) -> Option<&'static [CyclicSummand]> {
    const Z: Frac = (0, 1);
    const H: Frac = (1, 2);
    Some(match k {
        6 => &[
            c!(4, &[H, (1, 4), H, (1, 4), Z, H, Z, (1, 4), H, (3, 4), (3, 4), H, (3, 4), Z, Z, Z, Z], (1, 4)),
            c!(2, &[Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, H, Z, H, Z, H, Z, H], (0, 1)),
            c!(2, &[Z, H, H, Z, Z, H, Z, H, Z, H, H, Z, Z, Z, Z, Z, Z], (1, 1)),
        ],
        7 => &[c!(
            12,
            &[
                (2, 3),
                (1, 3),
                (2, 3),
                (5, 6),
                (2, 3),
                H,
                (1, 3),
                (1, 6),
                (1, 12),
                (11, 12),
                (11, 12),
                (5, 6),
                (3, 4),
                Z,
                (1, 4),
                H,
                (3, 4),
            ],
            (1, 12),
        )],
        8 => &[c!(
            20,
            &[
                (1, 5),
                (3, 5),
                (2, 5),
                (7, 10),
                (2, 5),
                (1, 10),
                (1, 20),
                (3, 4),
                (3, 5),
                (4, 5),
                (3, 4),
                H,
                (1, 4),
                (3, 5),
                (19, 20),
                (3, 10),
                (13, 20),
            ],
            (1, 20),
        )],
        9 => &[c!(
            16,
            &[
                (3, 4),
                (3, 8),
                (9, 16),
                (1, 16),
                H,
                (7, 16),
                (3, 8),
                (1, 4),
                (1, 8),
                (5, 8),
                (1, 4),
                (7, 8),
                (15, 16),
                Z,
                Z,
                Z,
                Z,
            ],
            (1, 16),
        )],
        10 => &[c!(
            14,
            &[
                (5, 7),
                (5, 14),
                (9, 14),
                (11, 14),
                (4, 7),
                (5, 7),
                (6, 7),
                H,
                Z,
                H,
                Z,
                (6, 7),
                (5, 7),
                (4, 7),
                (3, 7),
                (2, 7),
                (1, 7),
            ],
            (25, 14),
        )],
        11 => &[c!(
            12,
            &[
                H,
                (3, 4),
                (1, 4),
                (1, 4),
                H,
                (5, 12),
                (1, 3),
                (1, 3),
                (1, 6),
                (11, 12),
                (5, 6),
                (3, 4),
                (2, 3),
                (1, 3),
                Z,
                (2, 3),
                (1, 3),
            ],
            (5, 12),
        )],
        12 => &[c!(
            18,
            &[
                (1, 3),
                (2, 3),
                (1, 3),
                (1, 18),
                (1, 9),
                (5, 6),
                (5, 9),
                (5, 18),
                (2, 9),
                (1, 9),
                (1, 3),
                (2, 3),
                Z,
                Z,
                Z,
                Z,
                Z,
            ],
            (5, 18),
        )],
        13 => &[
            c!(
                14,
                &[
                    (3, 7),
                    (5, 7),
                    (13, 14),
                    (5, 14),
                    (2, 7),
                    (9, 14),
                    Z,
                    Z,
                    (1, 7),
                    Z,
                    Z,
                    (1, 14),
                    (1, 7),
                    (6, 7),
                    (4, 7),
                    (2, 7),
                ],
                (2, 7),
            ),
            c!(2, &[Z, Z, Z, Z, Z, Z, Z, Z, Z, H, Z, H, Z, H, Z, H], (0, 1)),
        ],
        14 => &[c!(
            23,
            &[
                (6, 23),
                (3, 23),
                (20, 23),
                (18, 23),
                (13, 23),
                (8, 23),
                (6, 23),
                (4, 23),
                (2, 23),
                (1, 23),
                (2, 23),
                (3, 23),
                (7, 23),
                (11, 23),
                (15, 23),
                (19, 23),
            ],
            (6, 23),
        )],
        15 => &[c!(
            31,
            &[
                (28, 31),
                (14, 31),
                (17, 31),
                (4, 31),
                (8, 31),
                (26, 31),
                (13, 31),
                (1, 31),
                (16, 31),
                (30, 31),
                (29, 31),
                (28, 31),
                (10, 31),
                (23, 31),
                (5, 31),
                (18, 31),
            ],
            (18, 31),
        )],
        16 => &[
            c!(
                10,
                &[
                    Z,
                    H,
                    H,
                    (3, 10),
                    (3, 5),
                    (2, 5),
                    (1, 5),
                    (1, 10),
                    (1, 5),
                    (3, 10),
                    (2, 5),
                    Z,
                    (3, 5),
                    (1, 5),
                    (4, 5),
                    (2, 5),
                ],
                (3, 10),
            ),
            c!(2, &[Z, Z, Z, Z, Z, Z, Z, H, Z, H, Z, H, Z, H, Z, H], (3, 2)),
        ],
        17 => &[
            c!(
                12,
                &[
                    (1, 3),
                    (1, 6),
                    (1, 4),
                    (7, 12),
                    (5, 6),
                    (5, 12),
                    Z,
                    Z,
                    (5, 12),
                    (5, 12),
                    H,
                    (3, 4),
                    Z,
                    (2, 3),
                    (1, 3),
                ],
                (7, 12),
            ),
            c!(2, &[Z, Z, Z, Z, Z, Z, Z, Z, Z, H, H, Z, H, Z, H], (0, 1)),
            c!(2, &[Z, Z, Z, Z, Z, Z, Z, Z, H, H, Z, Z, Z, Z, Z], (1, 1)),
        ],
        18 => &[c!(
            44,
            &[
                (1, 22),
                (1, 44),
                (43, 44),
                (3, 11),
                (6, 11),
                (9, 11),
                (5, 44),
                (9, 22),
                (31, 44),
                (7, 22),
                (29, 44),
                (17, 44),
                (17, 22),
                (2, 11),
                (13, 22),
            ],
            (31, 44),
        )],
        _ => return None,
    })
}
