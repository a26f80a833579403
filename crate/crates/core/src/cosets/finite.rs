//! `Sp₄(𝔽_p)` by exhaustive enumeration, the Bruhat coset representatives of
//! `K^H / K^#(p)` and an audit that they form a transversal.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// 4×4 matrix over `ℤ/p`, entries in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqSp4 {
    p: u8,
    e: [[u8; 4]; 4],
}

const J: [[i64; 4]; 4] = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]];

impl FqSp4 {
    /// Reduces integer entries mod `p`.
    pub fn from_ints(p: u8, rows: [[i64; 4]; 4]) -> Self {
        let m = p as i64;
        FqSp4 { p, e: rows.map(|r| r.map(|x| x.rem_euclid(m) as u8)) }
    }

    pub fn identity(p: u8) -> Self {
        Self::from_ints(p, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn entries(&self) -> [[u8; 4]; 4] {
        self.e
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.p as u32;
        let mut e = [[0u8; 4]; 4];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let s: u32 = (0..4).map(|k| self.e[i][k] as u32 * rhs.e[k][j] as u32).sum();
                *x = (s % p) as u8;
            }
        }
        FqSp4 { p: self.p, e }
    }

    /// `ᵀg J g = J` mod `p`.
    pub fn is_symplectic(&self) -> bool {
        let p = self.p as i64;
        (0..4).all(|i| {
            (0..4).all(|j| {
                let mut s = 0i64;
                for k in 0..4 {
                    for l in 0..4 {
                        s += self.e[k][i] as i64 * J[k][l] * self.e[l][j] as i64;
                    }
                }
                (s - J[i][j]).rem_euclid(p) == 0
            })
        })
    }

    /// Membership in the image of `K^#(p) ∩ Sp₄` mod `p`:
    /// `[[1,0,*,*],[*,1,*,*],[0,0,1,*],[0,0,0,1]]`.
    pub fn in_k_sharp(&self) -> bool {
        let e = &self.e;
        e[0][0] == 1
            && e[0][1] == 0
            && e[1][1] == 1
            && e[2][0] == 0
            && e[2][1] == 0
            && e[2][2] == 1
            && e[3][0] == 0
            && e[3][1] == 0
            && e[3][2] == 0
            && e[3][3] == 1
    }

    fn key(&self) -> u64 {
        self.e.iter().flatten().fold(0u64, |acc, &x| acc * self.p as u64 + x as u64)
    }
}

fn omega(p: i64, a: &[i64; 4], b: &[i64; 4]) -> i64 {
    (a[0] * b[2] + a[1] * b[3] - a[2] * b[0] - a[3] * b[1]).rem_euclid(p)
}

/// Every element of `Sp₄(𝔽_p)`, built row by row as a symplectic basis.
pub fn enumerate_sp4(p: u8) -> Vec<FqSp4> {
    let pp = p as i64;
    let vectors: Vec<[i64; 4]> = (0..pp.pow(4))
        .map(|n| [n / pp.pow(3) % pp, n / pp.pow(2) % pp, n / pp % pp, n % pp])
        .collect();
    let mut out = Vec::new();
    for r1 in vectors.iter().skip(1) {
        for r3 in vectors.iter().filter(|v| omega(pp, r1, v) == 1) {
            for r2 in vectors
                .iter()
                .filter(|v| omega(pp, r1, v) == 0 && omega(pp, r3, v) == 0)
            {
                for r4 in vectors.iter().filter(|v| {
                    omega(pp, r2, v) == 1 && omega(pp, r1, v) == 0 && omega(pp, r3, v) == 0
                }) {
                    out.push(FqSp4::from_ints(p, [*r1, *r2, *r3, *r4]));
                }
            }
        }
    }
    out
}

/// The image of `K^#(p) ∩ Sp₄` mod `p`.
pub fn k_sharp_elements(p: u8) -> Vec<FqSp4> {
    let pp = p as i64;
    let mut out = Vec::new();
    // upper-left [[1,0],[x,1]], lower-right its inverse transpose, B = A·S with S symmetric
    for x in 0..pp {
        for s11 in 0..pp {
            for s12 in 0..pp {
                for s22 in 0..pp {
                    let a = [[1, 0], [x, 1]];
                    let s = [[s11, s12], [s12, s22]];
                    let b = |i: usize, j: usize| a[i][0] * s[0][j] + a[i][1] * s[1][j];
                    out.push(FqSp4::from_ints(
                        p,
                        [[1, 0, b(0, 0), b(0, 1)], [x, 1, b(1, 0), b(1, 1)], [0, 0, 1, -x], [0, 0, 0, 1]],
                    ));
                }
            }
        }
    }
    out
}

/// The eight Bruhat families in order, each with its element count.
pub const FAMILY_WEYL: [&str; 8] = ["1", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "s1s2s1s2"];

fn weyl(p: u8, word: &str) -> FqSp4 {
    let s1 = FqSp4::from_ints(p, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
    let s2 = FqSp4::from_ints(p, [[0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1]]);
    word.as_bytes()
        .chunks(2)
        .filter(|c| c.len() == 2)
        .fold(FqSp4::identity(p), |acc, c| acc.mul(if c == b"s1" { &s1 } else { &s2 }))
}

/// Representatives of one family, `(family index 1..=8, matrix)`.
pub fn bruhat_family(p: u8, family: usize) -> Vec<FqSp4> {
    let pp = p as i64;
    let units: Vec<i64> = (1..pp).collect();
    let inv = |a: i64| (1..pp).find(|b| a * b % pp == 1).expect("unit");
    let residues: Vec<i64> = (0..pp).collect();
    let unipotents: Vec<[[i64; 4]; 4]> = match family {
        1 => vec![[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]],
        2 => residues.iter().map(|&x| [[1, 0, 0, 0], [x, 1, 0, 0], [0, 0, 1, -x], [0, 0, 0, 1]]).collect(),
        3 => residues.iter().map(|&x| [[1, 0, x, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]).collect(),
        4 => grid(pp, 2).map(|v| [[1, 0, 0, 0], [v[0], 1, 0, v[1]], [0, 0, 1, -v[0]], [0, 0, 0, 1]]).collect(),
        5 => grid(pp, 2).map(|v| [[1, 0, v[0], v[1]], [0, 1, v[1], 0], [0, 0, 1, 0], [0, 0, 0, 1]]).collect(),
        6 => grid(pp, 3)
            .map(|v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                [[1, 0, 0, y], [x, 1, y, x * y + z], [0, 0, 1, -x], [0, 0, 0, 1]]
            })
            .collect(),
        7 => grid(pp, 3).map(|v| [[1, 0, v[0], v[1]], [0, 1, v[1], v[2]], [0, 0, 1, 0], [0, 0, 0, 1]]).collect(),
        8 => grid(pp, 4)
            .map(|v| {
                let (w, x, y, z) = (v[0], v[1], v[2], v[3]);
                [[1, 0, x, y], [w, 1, w * x + y, w * y + z], [0, 0, 1, -w], [0, 0, 0, 1]]
            })
            .collect(),
        _ => Vec::new(),
    };
    let w = weyl(p, FAMILY_WEYL.get(family.wrapping_sub(1)).copied().unwrap_or("1"));
    let mut out = Vec::new();
    for &a1 in &units {
        for &a2 in &units {
            let t = FqSp4::from_ints(p, [[a1, 0, 0, 0], [0, a2, 0, 0], [0, 0, inv(a1), 0], [0, 0, 0, inv(a2)]]);
            for n in &unipotents {
                out.push(t.mul(&FqSp4::from_ints(p, *n)).mul(&w));
            }
        }
    }
    out
}

fn grid(p: i64, dim: u32) -> impl Iterator<Item = Vec<i64>> {
    (0..p.pow(dim)).map(move |n| (0..dim).map(|k| n / p.pow(dim - 1 - k) % p).collect())
}

/// All representatives of the eight families; `(p−1)²(1+2p+2p²+2p³+p⁴)` of them.
pub fn bruhat_reps(p: u8) -> Result<Vec<FqSp4>> {
    if p != 2 && p != 3 {
        return Err(Error::Domain(format!("coset tables are built for p ∈ {{2, 3}}, got {p}")));
    }
    Ok((1..=8).flat_map(|f| bruhat_family(p, f)).collect())
}

/// `(p−1)²(1+2p+2p²+2p³+p⁴)`.
pub fn bruhat_count(p: u64) -> u64 {
    (p - 1).pow(2) * (1 + 2 * p + 2 * p * p + 2 * p.pow(3) + p.pow(4))
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetAudit {
    pub p: u8,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub representatives: usize,
    pub cosets: usize,
    pub all_symplectic: bool,
    pub pairwise_distinct: bool,
    pub covers_group: bool,
    /// Two representatives in the same coset, or an element outside every coset.
    pub witness: Option<String>,
}

impl CosetAudit {
    pub fn passed(&self) -> bool {
        self.all_symplectic
            && self.pairwise_distinct
            && self.covers_group
            && self.cosets * self.subgroup_order == self.group_order
    }
}

/// Enumerates the group and checks that the representatives form a transversal of `G/K^#(p)`.
pub fn coset_audit(p: u8) -> Result<CosetAudit> {
    let reps = bruhat_reps(p)?;
    let group = enumerate_sp4(p);
    let k = k_sharp_elements(p);
    let coset_key = |g: &FqSp4| k.iter().map(|x| g.mul(x).key()).min().expect("nonempty subgroup");
    let all_symplectic = reps.iter().all(FqSp4::is_symplectic);
    let mut seen = std::collections::HashMap::new();
    let mut witness = None;
    for (i, r) in reps.iter().enumerate() {
        if let Some(j) = seen.insert(coset_key(r), i) {
            witness.get_or_insert_with(|| format!("representatives {j} and {i} share a coset: {:?}", r.e));
        }
    }
    let pairwise_distinct = seen.len() == reps.len();
    let keys: HashSet<u64> = seen.keys().copied().collect();
    let mut covers_group = true;
    for g in &group {
        if !keys.contains(&coset_key(g)) {
            covers_group = false;
            witness.get_or_insert_with(|| format!("element {:?} lies in no listed coset", g.e));
            break;
        }
    }
    Ok(CosetAudit {
        p,
        group_order: group.len(),
        subgroup_order: k.len(),
        representatives: reps.len(),
        cosets: keys.len(),
        all_symplectic,
        pairwise_distinct,
        covers_group,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_sp4(2).len(), 720);
        assert!(enumerate_sp4(2).iter().all(FqSp4::is_symplectic));
        assert_eq!(k_sharp_elements(2).len(), 16);
        assert!(k_sharp_elements(3).iter().all(|g| g.is_symplectic() && g.in_k_sharp()));
    }

    #[test]
    fn identity_in_k_sharp() {
        assert!(FqSp4::identity(3).in_k_sharp());
    }

    #[test]
    fn family_sizes() {
        assert_eq!(bruhat_family(3, 1).len(), 4);
        assert_eq!(bruhat_reps(2).unwrap().len(), 45);
        assert_eq!(bruhat_reps(3).unwrap().len(), 640);
        assert_eq!(bruhat_count(3), 640);
    }

    #[test]
    fn audit_p2() {
        let a = coset_audit(2).unwrap();
        assert!(a.passed(), "{a:?}");
        assert_eq!(a.cosets, 45);
    }
}
