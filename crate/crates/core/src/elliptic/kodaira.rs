//! Kodaira fiber types and the dual graphs of their components.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Singular fiber type. `I(n)` requires `n >= 1`; smooth fibers are not
/// represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KodairaType {
    I(usize),
    IStar(usize),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Tate's table on `(ord g2, ord g3, ord Δ)` of a minimal model; `None`
    /// in an order stands for a vanishing coefficient. Returns `Ok(None)` for
    /// a smooth fiber.
    pub fn from_orders(g2: Option<usize>, g3: Option<usize>, delta: usize) -> Result<Option<Self>> {
        let a = g2.unwrap_or(usize::MAX);
        let b = g3.unwrap_or(usize::MAX);
        if a >= 4 && b >= 6 {
            return Err(Error::NonMinimal(format!("orders ({a}, {b}, {delta})")));
        }
        if delta == 0 {
            return Ok(None);
        }
        let bad = || Error::NotK3(format!("orders ({a}, {b}, {delta}) match no Kodaira type"));
        if a == 0 || b == 0 {
            return if a == 0 && b == 0 { Ok(Some(KodairaType::I(delta))) } else { Err(bad()) };
        }
        let t = match delta {
            2 if b == 1 => KodairaType::II,
            3 if a == 1 => KodairaType::III,
            4 if a >= 2 && b == 2 => KodairaType::IV,
            6 if a >= 2 && b >= 3 => KodairaType::IStar(0),
            8 if a >= 3 && b == 4 => KodairaType::IVStar,
            9 if a == 3 && b >= 5 => KodairaType::IIIStar,
            10 if a >= 4 && b == 5 => KodairaType::IIStar,
            d if d > 6 && a == 2 && b == 3 => KodairaType::IStar(d - 6),
            _ => return Err(bad()),
        };
        Ok(Some(t))
    }

    pub fn euler_number(&self) -> usize {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Number of irreducible components `m_v`.
    pub fn component_count(&self) -> usize {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }

    pub fn is_reducible(&self) -> bool {
        self.component_count() > 1
    }

    /// Is the fiber multiplicative (`I_n`)?
    pub fn is_multiplicative(&self) -> bool {
        matches!(self, KodairaType::I(_))
    }

    /// Edges of the dual graph with intersection numbers, and multiplicities.
    ///
    /// Component 0 is the one met by the zero section. Conventions:
    /// * `I_n`: a cycle `Θ_0 .. Θ_{n-1}`.
    /// * `I_n*`: 0, 1 the near simple components on `C_0`, 2, 3 the far ones
    ///   on `C_n`, then the chain `C_0 .. C_n` as 4 ..= n + 4.
    /// * `IV*`: 0 - 1 - 2 (center), with arms 2 - 3 - 4 and 2 - 5 - 6.
    /// * `III*`: chain 0 - 1 - 2 - 3 - 4 - 5 - 6 with 7 attached to 3.
    /// * `II*`: chain 0 - 1 - .. - 7 with 8 attached to 5.
    fn graph(&self) -> (Vec<(usize, usize, i64)>, Vec<i64>) {
        match *self {
            KodairaType::I(1) | KodairaType::II => (vec![], vec![1]),
            KodairaType::I(2) | KodairaType::III => (vec![(0, 1, 2)], vec![1, 1]),
            KodairaType::IV => (vec![(0, 1, 1), (1, 2, 1), (0, 2, 1)], vec![1, 1, 1]),
            KodairaType::I(n) => ((0..n).map(|i| (i, (i + 1) % n, 1)).collect(), vec![1; n]),
            KodairaType::IStar(n) => {
                let c = |i: usize| 4 + i;
                let mut e = vec![(0, c(0), 1), (1, c(0), 1), (2, c(n), 1), (3, c(n), 1)];
                e.extend((0..n).map(|i| (c(i), c(i + 1), 1)));
                let mut m = vec![1, 1, 1, 1];
                m.extend(vec![2; n + 1]);
                (e, m)
            }
            KodairaType::IVStar => {
                (vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1), (5, 6, 1)], vec![1, 2, 3, 2, 1, 2, 1])
            }
            KodairaType::IIIStar => (
                vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (3, 7, 1)],
                vec![1, 2, 3, 4, 3, 2, 1, 2],
            ),
            KodairaType::IIStar => (
                vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1), (5, 8, 1)],
                vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
            ),
        }
    }

    pub fn multiplicities(&self) -> Vec<i64> {
        self.graph().1
    }

    /// Intersection matrix of `Θ_0 .. Θ_{m-1}` (self-intersection -2, or 0
    /// for an irreducible fiber).
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let (edges, mult) = self.graph();
        let m = mult.len();
        let mut g = vec![vec![0i64; m]; m];
        if m > 1 {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = -2;
            }
        }
        for (a, b, w) in edges {
            g[a][b] += w;
            g[b][a] += w;
        }
        g
    }

    /// Simple (multiplicity one) components, which are the only ones a
    /// section can meet.
    pub fn simple_components(&self) -> Vec<usize> {
        self.multiplicities().iter().enumerate().filter(|(_, &m)| m == 1).map(|(i, _)| i).collect()
    }

    /// Local height correction `contr_v(P, Q)` for sections meeting the simple
    /// components `i` and `j`.
    pub fn correction(&self, i: usize, j: usize) -> crate::exactmath::Rat {
        use crate::exactmath::{int, rat};
        if i == 0 || j == 0 {
            return int(0);
        }
        match *self {
            KodairaType::I(n) => {
                let (a, b) = (i.min(j), i.max(j));
                rat((a * (n - b)) as i64, n as i64)
            }
            KodairaType::IStar(n) => {
                let near = |c: usize| c == 1;
                if i == j {
                    if near(i) {
                        int(1)
                    } else {
                        rat(n as i64 + 4, 4)
                    }
                } else if near(i) || near(j) {
                    rat(1, 2)
                } else {
                    rat(n as i64 + 2, 4)
                }
            }
            KodairaType::III => rat(1, 2),
            KodairaType::IV => {
                if i == j {
                    rat(2, 3)
                } else {
                    rat(1, 3)
                }
            }
            KodairaType::IVStar => {
                if i == j {
                    rat(4, 3)
                } else {
                    rat(2, 3)
                }
            }
            KodairaType::IIIStar => rat(3, 2),
            _ => int(0),
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I_{n}"),
            KodairaType::IStar(n) => write!(f, "I_{n}*"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("not a Kodaira type: {s:?}"));
        Ok(match s {
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                let rest = s.strip_prefix("I_").ok_or_else(bad)?;
                match rest.strip_suffix('*') {
                    Some(n) => KodairaType::IStar(n.parse().map_err(|_| bad())?),
                    None => {
                        let n: usize = rest.parse().map_err(|_| bad())?;
                        if n == 0 {
                            return Err(bad());
                        }
                        KodairaType::I(n)
                    }
                }
            }
        })
    }
}
