use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    G,
    H,
    I,
}

/// Parsed type descriptor such as `A4`, `2A5`, `3D4` or `I2(7)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
    /// Dihedral order, only meaningful for `I2(m)`.
    pub m: u32,
    /// Order of the twisting diagram automorphism (1 when untwisted).
    pub twist: u32,
}

/// A root of unity `exp(2πi·num/den)`, kept reduced with `0 ≤ num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frac {
    pub num: u64,
    pub den: u64,
}

impl Frac {
    pub fn new(num: i64, den: u64) -> Frac {
        let d = den as i64;
        let n = num.rem_euclid(d) as u64;
        let g = gcd(n, den);
        Frac { num: n / g, den: den / g }
    }

    pub fn one() -> Frac {
        Frac { num: 0, den: 1 }
    }

    pub fn mul(self, other: Frac) -> Frac {
        let den = self.den * other.den;
        Frac::new((self.num * other.den + other.num * self.den) as i64, den)
    }

    pub fn pow(self, k: i64) -> Frac {
        Frac::new(self.num as i64 * k, self.den)
    }

    pub fn conj(self) -> Frac {
        Frac::new(-(self.num as i64), self.den)
    }

    pub fn to_complex(self) -> nalgebra::Complex<f64> {
        let t = std::f64::consts::TAU * self.num as f64 / self.den as f64;
        nalgebra::Complex::new(t.cos(), t.sin())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownType(s.to_string());
        let s = s.trim();
        let (twist, rest) = match s.chars().next() {
            Some(c) if c.is_ascii_digit() => (c.to_digit(10).unwrap(), &s[1..]),
            _ => (1, s),
        };
        let mut chars = rest.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let tail = chars.as_str();
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' | 'C' => Family::B,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            'H' => Family::H,
            'I' => Family::I,
            _ => return Err(bad()),
        };
        let (rank, m) = if family == Family::I {
            let inner = tail
                .strip_prefix("2(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(bad)?;
            let m: u32 = inner.parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(Error::RankOutOfRange(s.to_string()));
            }
            (2, m)
        } else {
            let n: usize = tail.parse().map_err(|_| bad())?;
            let m = match family {
                Family::G => 6,
                Family::H => 5,
                _ => 0,
            };
            (n, m)
        };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::H => rank == 3 || rank == 4,
            Family::I => true,
        };
        if !ok {
            return Err(Error::RankOutOfRange(s.to_string()));
        }
        let t = CartanType { family, rank, m, twist };
        let twist_ok = match (twist, family) {
            (1, _) => true,
            (2, Family::A) => rank >= 2,
            (2, Family::D) => true,
            (3, Family::D) => rank == 4,
            (2, Family::E) => rank == 6,
            (2, Family::F) | (2, Family::G) => true,
            (2, Family::B) => rank == 2,
            (2, Family::I) => true,
            _ => false,
        };
        if !twist_ok {
            return Err(Error::InvalidTwist(s.to_string()));
        }
        Ok(t)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist > 1 {
            write!(f, "{}", self.twist)?;
        }
        match self.family {
            Family::I => write!(f, "I2({})", self.m),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl CartanType {
    /// Coxeter matrix in the labelling used throughout the crate (0-based).
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank;
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, v: u32| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match self.family {
            Family::A => (1..n).for_each(|i| bond(i - 1, i, 3)),
            Family::B => {
                bond(0, 1, 4);
                (2..n).for_each(|i| bond(i - 1, i, 3));
            }
            Family::D => {
                bond(0, 2, 3);
                bond(1, 2, 3);
                (3..n).for_each(|i| bond(i - 1, i, 3));
            }
            Family::E => {
                bond(0, 2, 3);
                bond(1, 3, 3);
                (3..n).for_each(|i| bond(i - 1, i, 3));
            }
            Family::F => {
                bond(0, 1, 3);
                bond(1, 2, 4);
                bond(2, 3, 3);
            }
            Family::G => bond(0, 1, 6),
            Family::H => {
                bond(0, 1, 5);
                (2..n).for_each(|i| bond(i - 1, i, 3));
            }
            Family::I => bond(0, 1, self.m),
        }
        m
    }

    pub fn degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
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
            Family::H => {
                if n == 3 {
                    vec![2, 6, 10]
                } else {
                    vec![2, 12, 20, 30]
                }
            }
            Family::I => vec![2, self.m],
        }
    }

    /// Factors of the coset, aligned with `degrees()`.
    pub fn factors(&self) -> Vec<Frac> {
        let degs = self.degrees();
        let mut out = vec![Frac::one(); degs.len()];
        let neg = Frac::new(1, 2);
        match (self.twist, self.family) {
            (1, _) => {}
            (2, Family::A) => {
                for (f, &d) in out.iter_mut().zip(&degs) {
                    if d % 2 == 1 {
                        *f = neg;
                    }
                }
            }
            (2, Family::D) => {
                // the degree n is the one negated; when n is even it also occurs as 2k
                let n = self.rank as u32;
                let pos = degs.iter().rposition(|&d| d == n).unwrap();
                out[pos] = neg;
            }
            (3, Family::D) => {
                // degrees 2,4,4,6
                out[1] = Frac::new(1, 3);
                out[2] = Frac::new(2, 3);
            }
            (2, Family::E) => {
                for (f, &d) in out.iter_mut().zip(&degs) {
                    if d == 5 || d == 9 {
                        *f = neg;
                    }
                }
            }
            (2, Family::F) => {
                for (f, &d) in out.iter_mut().zip(&degs) {
                    if d == 6 || d == 12 {
                        *f = neg;
                    }
                }
            }
            (2, _) => {
                // rank-two very twisted cosets: the non-quadratic invariant is negated
                out[1] = neg;
            }
            _ => {}
        }
        out
    }

    /// Permutation of the generators induced by the twist (0-based).
    pub fn twist_permutation(&self) -> Vec<usize> {
        let n = self.rank;
        let mut p: Vec<usize> = (0..n).collect();
        match (self.twist, self.family) {
            (1, _) => {}
            (2, Family::A) => p = (0..n).map(|i| n - 1 - i).collect(),
            (2, Family::D) => p.swap(0, 1),
            (3, Family::D) => {
                p[0] = 1;
                p[1] = 3;
                p[3] = 0;
            }
            (2, Family::E) => {
                p.swap(0, 5);
                p.swap(2, 4);
            }
            (2, Family::F) => {
                p.swap(0, 3);
                p.swap(1, 2);
            }
            (2, _) => p.swap(0, 1),
            _ => {}
        }
        p
    }
}
