//! Vertex data for the eighteen Fano polytopes and the reference form of
//! their anticanonical equations.

const E: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn with_basis(extra: &[[i64; 3]]) -> Vec<[i64; 3]> {
    E.iter().chain(extra).copied().collect()
}

/// Vertices of `P_k` in the listed order (`e1, e2, e3` first).
pub(super) fn vertices(k: u8) -> Vec<[i64; 3]> {
    let extra: &[[i64; 3]] = match k {
        1 => &[[-1, -1, -1]],
        2 => &[[-1, -1, 0], [0, 0, -1]],
        3 => &[[0, 0, -1], [-1, -1, -1]],
        4 => &[[0, 0, -1], [-1, -1, -2]],
        5 => &[[-1, -1, 0], [-1, -1, -1]],
        6 => &[[0, 0, -1], [0, -1, 0], [-1, 0, 0]],
        7 => &[[0, 0, -1], [0, -1, -1], [-1, 0, -1]],
        8 => &[[0, 0, -1], [0, -1, 1], [-1, 0, -1]],
        9 => &[[0, 0, -1], [0, -1, 0], [-1, -1, 0]],
        10 => &[[0, 0, -1], [0, -1, -1], [-1, -1, -1]],
        11 => &[[0, 0, -1], [0, 1, -1], [-1, -1, -1]],
        12 => &[[0, 0, -1], [0, 1, -1], [-1, -1, 0]],
        13 => &[[0, 0, -1], [0, -1, 0], [-1, 0, 0], [-1, -1, 0]],
        14 => &[[-1, 0, -1], [0, -1, 0], [-1, 0, 0], [-1, -1, 0]],
        15 => &[[1, 0, -1], [0, -1, 0], [-1, 0, 0], [-1, -1, 0]],
        16 => &[[-1, -1, -1], [0, -1, 0], [-1, 0, 0], [-1, -1, 0]],
        17 => &[[0, 0, -1], [0, -1, 0], [-1, 0, 0], [1, -1, 0], [-1, 1, 0]],
        18 => &[[1, -1, -1], [0, -1, 0], [-1, 0, 0], [1, -1, 0], [-1, 1, 0]],
        _ => unreachable!("index checked by the caller"),
    };
    with_basis(extra)
}

/// Extra terms of the reference equations `xyz(x+y+z+1) + sum λ_i m_i = 0`
/// for `k = 6..=18`, as `(i, exponent of m_i)`.
pub(super) fn reference_terms(k: u8) -> Option<Vec<(usize, [u32; 3])>> {
    let t: &[[u32; 3]] = match k {
        6 => &[[1, 1, 0], [1, 0, 1], [0, 1, 1]],
        7 => &[[1, 1, 0], [1, 0, 0], [0, 1, 0]],
        8 => &[[1, 1, 0], [1, 0, 2], [0, 1, 0]],
        9 => &[[1, 1, 0], [1, 0, 1], [0, 0, 1]],
        10 => &[[1, 1, 0], [1, 0, 0], [0, 0, 0]],
        11 => &[[1, 1, 0], [1, 2, 0], [0, 0, 0]],
        12 => &[[1, 1, 0], [1, 2, 0], [0, 0, 1]],
        13 => &[[1, 1, 0], [1, 0, 1], [0, 1, 1], [0, 0, 1]],
        14 => &[[0, 1, 0], [1, 0, 1], [0, 1, 1], [0, 0, 1]],
        15 => &[[2, 1, 0], [1, 0, 1], [0, 1, 1], [0, 0, 1]],
        16 => &[[0, 0, 0], [1, 0, 1], [0, 1, 1], [0, 0, 1]],
        17 => &[[1, 1, 0], [0, 1, 1], [1, 0, 1], [2, 0, 1], [0, 2, 1]],
        18 => &[[2, 0, 0], [0, 1, 1], [1, 0, 1], [2, 0, 1], [0, 2, 1]],
        _ => return None,
    };
    Some(t.iter().enumerate().map(|(i, e)| (i + 1, *e)).collect())
}
