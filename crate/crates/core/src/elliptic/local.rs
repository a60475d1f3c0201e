//! Local analysis of a section near a singular fiber: which simple
//! component of the Néron model it meets.
//!
//! Everything is done with truncated power series in a local parameter `t`
//! (`t = x1 - c` at a finite place, `t = 1/x1` at infinity), using the
//! weights 8, 12, 4, 6 of `g2, g3, X, Y`.

use super::{KodairaType, Place, Section, SingularFiber, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exactmath::{int, Rat, UniPoly};
use num_traits::Zero;

/// Raw local incidence, normalized per fiber by [`resolve_components`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalHit {
    /// Meets the identity component `Θ_0`.
    Identity,
    /// Through the node of an `I_n` fiber. `alpha` is the order of
    /// `X + r/2`, where `r` is the branch of roots of the cubic not passing
    /// through the node. `key` tells the two sides of the cycle apart and is
    /// `None` in the middle (`2 alpha >= n`).
    Cycle { alpha: usize, key: Option<Rat> },
    /// `I_n*`, `n >= 1`: the simple component next to the zero component.
    StarNear,
    /// `I_n*`, `n >= 1`: one of the two simple components at the far end.
    StarFar,
    /// `I_0*`: the root of `4T^3 - g2,2 T - g3,3` the section passes through.
    StarRoot(Rat),
    /// `IV`, `IV*`: the leading coefficient of `Y`, a square root of `-g3`.
    Keyed(Rat),
    /// `III`, `III*`: the only non-identity simple component.
    Unique,
}

fn coeff(p: &UniPoly, i: usize) -> Rat {
    p.coeff(i)
}

fn trunc(p: &UniPoly, n: usize) -> UniPoly {
    UniPoly::from_coeffs((0..n).map(|i| p.coeff(i)).collect())
}

fn mul_trunc(a: &UniPoly, b: &UniPoly, n: usize) -> UniPoly {
    trunc(&(a * b), n)
}

/// `1/p mod t^n` for `p(0) != 0`.
fn inv_series(p: &UniPoly, n: usize) -> UniPoly {
    let p0 = coeff(p, 0).recip();
    let mut out = vec![Rat::zero(); n];
    for i in 0..n {
        let mut s = if i == 0 { int(1) } else { Rat::zero() };
        for j in 1..=i {
            s -= coeff(p, j) * &out[i - j];
        }
        out[i] = s * &p0;
    }
    UniPoly::from_coeffs(out)
}

/// Local `(g2, g3)` and section `(X, Y)` at a rational place; `None` for the
/// section when it has a pole there, i.e. meets the zero section.
fn localize(
    w: &WeierstrassModel,
    place: &Place,
    s: &Section,
) -> Result<(UniPoly, UniPoly, Option<(UniPoly, UniPoly)>)> {
    let xy = s.weierstrass(w);
    match place {
        Place::Finite(c) => Ok((w.g2.shift(c), w.g3.shift(c), xy.map(|(x, y)| (x.shift(c), y.shift(c))))),
        Place::Infinity => {
            let sec = match xy {
                Some((x, y)) if x.degree().unwrap_or(0) <= 4 => Some((x.reverse(4)?, y.reverse(6)?)),
                _ => None,
            };
            Ok((w.g2.reverse(8)?, w.g3.reverse(12)?, sec))
        }
        Place::Orbit(f) => {
            Err(Error::Unsupported(format!("section incidence at a reducible fiber over the irrational roots of {f}")))
        }
    }
}

pub(super) fn incidence(w: &WeierstrassModel, fiber: &SingularFiber, s: &Section) -> Result<LocalHit> {
    if !fiber.kind.is_reducible() {
        return Ok(LocalHit::Identity);
    }
    let (g2, g3, sec) = localize(w, &fiber.place, s)?;
    let Some((x, y)) = sec else {
        return Ok(LocalHit::Identity);
    };
    match fiber.kind {
        KodairaType::I(n) => cycle_hit(&g2, &g3, &x, &y, n),
        _ if !coeff(&x, 0).is_zero() => Ok(LocalHit::Identity),
        KodairaType::IStar(n) => {
            let xi = coeff(&x, 1);
            let p0 = UniPoly::from_coeffs(vec![-coeff(&g3, 3), -coeff(&g2, 2), int(0), int(4)]);
            if !p0.eval(&xi).is_zero() {
                return Err(Error::Verification(format!("section misses the I_{n}* fiber")));
            }
            if n == 0 {
                Ok(LocalHit::StarRoot(xi))
            } else if p0.derivative().eval(&xi).is_zero() {
                Ok(LocalHit::StarFar)
            } else {
                Ok(LocalHit::StarNear)
            }
        }
        KodairaType::IV => Ok(LocalHit::Keyed(coeff(&y, 1))),
        KodairaType::IVStar => Ok(LocalHit::Keyed(coeff(&y, 2))),
        KodairaType::III | KodairaType::IIIStar => Ok(LocalHit::Unique),
        KodairaType::II | KodairaType::IIStar => Ok(LocalHit::Identity),
    }
}

fn cycle_hit(g2: &UniPoly, g3: &UniPoly, x: &UniPoly, y: &UniPoly, n: usize) -> Result<LocalHit> {
    if n == 1 {
        return Ok(LocalHit::Identity);
    }
    // Node at X = x0 with g2(0) = 12 x0^2, g3(0) = -8 x0^3.
    let x0 = Rat::from_integer((-3).into()) * coeff(g3, 0) / (coeff(g2, 0) * int(2));
    if coeff(x, 0) != x0 {
        return Ok(LocalHit::Identity);
    }
    let prec = n + 2;
    // Newton iteration for the simple root r(t) with r(0) = -2 x0.
    let cubic = |r: &UniPoly| {
        let r3 = mul_trunc(&mul_trunc(r, r, prec), r, prec).scale(&int(4));
        trunc(&(&(&r3 - &mul_trunc(g2, r, prec)) - g3), prec)
    };
    let dcubic = |r: &UniPoly| trunc(&(&mul_trunc(r, r, prec).scale(&int(12)) - g2), prec);
    let mut r = UniPoly::constant(x0.clone() * int(-2));
    for _ in 0..prec {
        let step = mul_trunc(&cubic(&r), &inv_series(&dcubic(&r), prec), prec);
        if step.is_zero() {
            break;
        }
        r = &r - &step;
    }
    debug_assert!(cubic(&r).is_zero());
    let u = trunc(&(x + &r.scale(&crate::exactmath::rat(1, 2))), prec);
    let alpha = u.low_order().unwrap_or(prec);
    if 2 * alpha >= n {
        if n % 2 == 1 {
            return Err(Error::Verification(format!("section through the middle of I_{n}")));
        }
        return Ok(LocalHit::Cycle { alpha: n / 2, key: None });
    }
    let key = coeff(y, alpha) / coeff(&u, alpha);
    Ok(LocalHit::Cycle { alpha, key: Some(key) })
}

/// Component indices (in the labeling of [`KodairaType::intersection_matrix`])
/// met by each section, given the raw hits of all sections at one fiber.
///
/// Orientation choices (the direction of an `I_n` cycle, which far component
/// of `I_n*`, which arm of `IV*`) are fixed by the first section that needs
/// them, so the result is canonical only up to the symmetries of the fiber.
pub fn resolve_components(kind: KodairaType, hits: &[LocalHit]) -> Result<Vec<usize>> {
    let mut cycle_ref: Option<Rat> = None;
    let mut keys: Vec<Rat> = Vec::new();
    let mut far_seen = false;
    let mut out = Vec::with_capacity(hits.len());
    for h in hits {
        let c = match h {
            LocalHit::Identity => 0,
            LocalHit::Cycle { alpha, key } => {
                let n = match kind {
                    KodairaType::I(n) => n,
                    _ => return Err(Error::InvalidInput(format!("cycle hit on {kind}"))),
                };
                match key {
                    None => *alpha,
                    Some(s) => match &cycle_ref {
                        None => {
                            cycle_ref = Some(s.clone());
                            *alpha
                        }
                        Some(r) if r == s => *alpha,
                        Some(_) => n - alpha,
                    },
                }
            }
            LocalHit::StarNear => 1,
            LocalHit::StarFar => {
                if far_seen {
                    return Err(Error::Ambiguous(format!(
                        "two sections meet the far end of {kind}; the far components are not told apart"
                    )));
                }
                far_seen = true;
                2
            }
            LocalHit::StarRoot(xi) | LocalHit::Keyed(xi) => {
                let pos = match keys.iter().position(|k| k == xi) {
                    Some(p) => p,
                    None => {
                        keys.push(xi.clone());
                        keys.len() - 1
                    }
                };
                let slots: &[usize] = match kind {
                    KodairaType::IStar(0) => &[1, 2, 3],
                    KodairaType::IV => &[1, 2],
                    KodairaType::IVStar => &[4, 6],
                    _ => return Err(Error::InvalidInput(format!("keyed hit on {kind}"))),
                };
                *slots.get(pos).ok_or_else(|| {
                    Error::Verification(format!("more local branches than simple components of {kind}"))
                })?
            }
            LocalHit::Unique => match kind {
                KodairaType::III => 1,
                KodairaType::IIIStar => 6,
                _ => return Err(Error::InvalidInput(format!("unique hit on {kind}"))),
            },
        };
        out.push(c);
    }
    Ok(out)
}
