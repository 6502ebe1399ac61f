use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl Family {
    pub fn is_reduced(self) -> bool {
        self != Family::BC
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            "BC" => Family::BC,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

/// Family and rank of an irreducible root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::BC => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank {
                family: family.to_string(),
                rank,
                reason: match family {
                    Family::A | Family::BC => "rank must be at least 1",
                    Family::B | Family::C => "rank must be at least 2",
                    Family::D => "rank must be at least 4",
                    Family::E => "rank must be 6, 7 or 8",
                    Family::F => "rank must be 4",
                    Family::G => "rank must be 2",
                },
            });
        }
        Ok(RootSystemSpec { family, rank })
    }

    /// Degrees of the basic invariants; their product is |W| and the largest
    /// one is the Coxeter number.
    pub fn degrees(&self) -> Vec<u64> {
        let n = self.rank as u64;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C | Family::BC => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }

    pub(crate) fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::E => 8,
            Family::G => 3,
            _ => self.rank,
        }
    }

    /// Simple roots in Bourbaki ambient coordinates. BC_n uses the C_n base,
    /// whose coroots span the coroot lattice of BC_n.
    pub(crate) fn simple_roots(&self) -> Vec<Vec<Rational64>> {
        let n = self.rank;
        let dim = self.ambient_dim();
        let unit = |i: usize, c: i64| {
            let mut v = vec![Rational64::from_integer(0); dim];
            v[i] = Rational64::from_integer(c);
            v
        };
        let diff = |i: usize, j: usize| {
            let mut v = unit(i, 1);
            v[j] = Rational64::from_integer(-1);
            v
        };
        let half = Rational64::new(1, 2);
        match self.family {
            Family::A => (0..n).map(|i| diff(i, i + 1)).collect(),
            Family::B | Family::C | Family::BC | Family::D => {
                let mut out: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
                out.push(match self.family {
                    Family::B => unit(n - 1, 1),
                    Family::D => {
                        let mut v = unit(n - 1, 1);
                        v[n - 2] = Rational64::from_integer(1);
                        v
                    }
                    _ => unit(n - 1, 2),
                });
                out
            }
            Family::E => {
                let mut a1 = vec![-half; 8];
                a1[0] = half;
                a1[7] = half;
                let mut a2 = unit(0, 1);
                a2[1] = Rational64::from_integer(1);
                let mut out = vec![a1, a2];
                for i in 0..n - 2 {
                    out.push(diff(i + 1, i));
                }
                out
            }
            Family::F => {
                let mut a4 = vec![-half; 4];
                a4[0] = half;
                vec![diff(1, 2), diff(2, 3), unit(3, 1), a4]
            }
            Family::G => {
                let a1 = diff(0, 1);
                let a2 = vec![
                    Rational64::from_integer(-2),
                    Rational64::from_integer(1),
                    Rational64::from_integer(1),
                ];
                vec![a1, a2]
            }
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;
    /// Parses labels such as `E8`, `A2`, `BC1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("missing rank in `{s}`")))?;
        let family: Family = s[..split].parse()?;
        let rank: usize = s[split..]
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in `{s}`")))?;
        RootSystemSpec::new(family, rank)
    }
}
