//! Root generation. Roots of each irreducible component are found with exact
//! coefficients; the result is a signed permutation table for every generator.

use std::collections::HashMap;

/// `a + b·τ` with `τ² = τ + 1` (golden ratio).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Zt {
    a: i64,
    b: i64,
}

impl Zt {
    const ZERO: Zt = Zt { a: 0, b: 0 };

    fn int(a: i64) -> Zt {
        Zt { a, b: 0 }
    }

    fn add(self, o: Zt) -> Zt {
        Zt { a: self.a + o.a, b: self.b + o.b }
    }

    fn sub(self, o: Zt) -> Zt {
        Zt { a: self.a - o.a, b: self.b - o.b }
    }

    fn mul(self, o: Zt) -> Zt {
        Zt {
            a: self.a * o.a + self.b * o.b,
            b: self.a * o.b + self.b * o.a + self.b * o.b,
        }
    }

    /// Sign of `a + bτ = ((2a+b) + b√5)/2`.
    fn signum(self) -> i64 {
        let p = 2 * self.a + self.b;
        let q = self.b;
        match (p.signum(), q.signum()) {
            (0, s) | (s, 0) => s,
            (s, t) if s == t => s,
            (s, _) => {
                if p * p > 5 * q * q {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

/// Roots of one component in local numbering: positives `0..n`, simple roots
/// first, negatives `n..2n`.
pub(crate) struct LocalRoots {
    pub npos: usize,
    /// `act[i][r]` is the index of `s_i(r)`.
    pub act: Vec<Vec<u32>>,
}

pub(crate) fn component_roots(m: &[Vec<u32>]) -> LocalRoots {
    let r = m.len();
    let dihedral = r == 2 && ![2, 3, 4, 5, 6].contains(&m[0][1]);
    if dihedral {
        dihedral_roots(m[0][1] as usize)
    } else {
        cartan_roots(m)
    }
}

fn cartan_entries(m: &[Vec<u32>]) -> Vec<Vec<Zt>> {
    let r = m.len();
    let mut c = vec![vec![Zt::ZERO; r]; r];
    for i in 0..r {
        for j in 0..r {
            c[i][j] = match m[i][j] {
                1 => Zt::int(2),
                2 => Zt::ZERO,
                3 => Zt::int(-1),
                4 => Zt::int(if i < j { -2 } else { -1 }),
                6 => Zt::int(if i < j { -3 } else { -1 }),
                5 => Zt { a: 0, b: -1 },
                other => panic!("bond {other} needs the dihedral representation"),
            };
        }
    }
    c
}

fn cartan_roots(m: &[Vec<u32>]) -> LocalRoots {
    let r = m.len();
    let c = cartan_entries(m);
    let mut roots: Vec<Vec<Zt>> = Vec::new();
    let mut index: HashMap<Vec<Zt>, usize> = HashMap::new();
    for i in 0..r {
        let mut v = vec![Zt::ZERO; r];
        v[i] = Zt::int(1);
        index.insert(v.clone(), i);
        roots.push(v);
    }
    let reflect = |i: usize, v: &[Zt]| -> Vec<Zt> {
        let mut coef = Zt::ZERO;
        for (j, &x) in v.iter().enumerate() {
            coef = coef.add(x.mul(c[i][j]));
        }
        let mut out = v.to_vec();
        out[i] = out[i].sub(coef);
        out
    };
    let mut k = 0;
    while k < roots.len() {
        for i in 0..r {
            let img = reflect(i, &roots[k]);
            if img.iter().all(|x| x.signum() >= 0) && !index.contains_key(&img) {
                index.insert(img.clone(), roots.len());
                roots.push(img);
            }
        }
        k += 1;
    }
    let n = roots.len();
    let mut act = vec![vec![0u32; 2 * n]; r];
    for i in 0..r {
        for (k, v) in roots.iter().enumerate() {
            let img = reflect(i, v);
            let t = if img.iter().all(|x| x.signum() >= 0) {
                index[&img]
            } else {
                let neg: Vec<Zt> = img.iter().map(|x| Zt::ZERO.sub(*x)).collect();
                index[&neg] + n
            };
            act[i][k] = t as u32;
            act[i][k + n] = ((t + n) % (2 * n)) as u32;
        }
    }
    LocalRoots { npos: n, act }
}

/// Roots of `I2(m)` as unit vectors at angles `kπ/m`; `α₁` at angle 0 and
/// `α₂` at angle `(m−1)π/m`.
fn dihedral_roots(m: usize) -> LocalRoots {
    let order: Vec<usize> = std::iter::once(0)
        .chain(std::iter::once(m - 1))
        .chain(1..m - 1)
        .collect();
    let mut local = vec![0usize; m];
    for (idx, &angle) in order.iter().enumerate() {
        local[angle] = idx;
    }
    // angle index (mod 2m) -> signed local index
    let to_local = |k: usize| -> u32 {
        let k = k % (2 * m);
        if k < m {
            local[k] as u32
        } else {
            (local[k - m] + m) as u32
        }
    };
    let mut act = vec![vec![0u32; 2 * m]; 2];
    for (idx, &angle) in order.iter().enumerate() {
        for sign in 0..2 {
            let k = angle + sign * m;
            let s1 = (2 * m + m - k % (2 * m)) % (2 * m);
            let s2 = (4 * m + 3 * m - 2 - k % (2 * m)) % (2 * m);
            act[0][idx + sign * m] = to_local(s1);
            act[1][idx + sign * m] = to_local(s2);
        }
    }
    LocalRoots { npos: m, act }
}
