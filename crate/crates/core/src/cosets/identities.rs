//! Randomized exact verification of the 4×4 matrix identities behind the
//! support classification.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::etale::{Etale, EtaleMatrix};
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, rat, Rational};
use crate::rng::seeded;

/// The five identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Identity {
    /// `η·r = r·n` for the diagonal representative.
    I,
    /// The `s₁` representative when `β` is a unit.
    II,
    /// The `s₁s₂s₁` representative when `β ∈ P`.
    VI,
    /// Equivalence of the `s₁` representatives at `m = 0`.
    M0Equiv,
    /// Equivalence of the `s₁` representatives at `m > 0`.
    MPosEquiv,
}

impl Identity {
    pub const ALL: [Identity; 5] =
        [Identity::I, Identity::II, Identity::VI, Identity::M0Equiv, Identity::MPosEquiv];

    pub fn name(self) -> &'static str {
        match self {
            Identity::I => "i",
            Identity::II => "ii",
            Identity::VI => "vi",
            Identity::M0Equiv => "m0-equiv",
            Identity::MPosEquiv => "mpos-equiv",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == s)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One substitution `(a, b, c, u, w, ϖ^m, ϖ^l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Draw {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub u: Rational,
    pub w: Rational,
    pub pm: Rational,
    pub pl: Rational,
}

impl fmt::Display for Draw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} c={} u={} w={} pm={} pl={}",
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.c),
            fmt_rational(&self.u),
            fmt_rational(&self.w),
            fmt_rational(&self.pm),
            fmt_rational(&self.pl)
        )
    }
}

/// A failed trial: the draw and both sides.
#[derive(Clone, Debug)]
pub struct IdentityWitness {
    pub draw: Draw,
    pub entry: (usize, usize),
    pub lhs: EtaleMatrix,
    pub rhs: EtaleMatrix,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: Identity,
    pub trials: usize,
    pub redraws: usize,
    pub failure: Option<IdentityWitness>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.trials > 0
    }
}

fn random_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-12..=12);
        let d: i64 = rng.gen_range(1..=7);
        if !nonzero || n != 0 {
            return rat(n, d);
        }
    }
}

const MAX_REDRAWS: usize = 10_000;

/// Runs `trials` exact random substitutions of `which`.
///
/// The marker `ϖ^m` cycles through a random value and the specializations 1, 3, 9.
pub fn verify_matrix_identity(which: Identity, trials: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = seeded(seed ^ (which as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut redraws = 0;
    let mut done = 0;
    while done < trials {
        let pm = match done % 4 {
            0 => random_rational(&mut rng, true),
            1 => Rational::one(),
            2 => rat(3, 1),
            _ => rat(9, 1),
        };
        let draw = Draw {
            a: random_rational(&mut rng, false),
            b: random_rational(&mut rng, false),
            c: random_rational(&mut rng, true),
            u: random_rational(&mut rng, true),
            w: random_rational(&mut rng, false),
            pm: if which == Identity::M0Equiv { Rational::one() } else { pm },
            pl: random_rational(&mut rng, true),
        };
        match sides(which, &draw) {
            Ok((lhs, rhs)) => {
                done += 1;
                if let Some(entry) = lhs.first_difference(&rhs) {
                    let failure = IdentityWitness { draw, entry, lhs, rhs };
                    return Ok(IdentityReport { identity: which, trials: done, redraws, failure: Some(failure) });
                }
            }
            Err(Error::DivisionByZero) => {
                redraws += 1;
                if redraws > MAX_REDRAWS {
                    return Err(Error::Domain(format!("{which}: too many degenerate draws")));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(IdentityReport { identity: which, trials: done, redraws, failure: None })
}

fn alpha(draw: &Draw) -> Result<Etale> {
    let d = &draw.b * &draw.b - rat(4, 1) * &draw.a * &draw.c;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let two_c = &draw.c + &draw.c;
    Ok(Etale::new(&draw.b / &two_c, Rational::one() / &two_c, d))
}

fn weyl(d: &Rational) -> (EtaleMatrix, EtaleMatrix) {
    let s1 = EtaleMatrix::from_ints(d, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
    let s2 = EtaleMatrix::from_ints(d, [[0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1]]);
    (s1, s2)
}

fn diag_u(u: &Rational, d: &Rational) -> EtaleMatrix {
    let r = |x: Rational| Etale::rational(x, d);
    EtaleMatrix::diag([r(Rational::one()), r(u.clone()), r(Rational::one()), r(u.recip())])
}

fn x_w(w: &Etale) -> EtaleMatrix {
    EtaleMatrix::with_entries(w.d(), &[(1, 0, w.clone()), (2, 3, -w)])
}

fn h(pl: &Rational, pm: &Rational, d: &Rational) -> EtaleMatrix {
    let r = |x: Rational| Etale::rational(x, d);
    EtaleMatrix::diag([r(pm * pm * pl), r(pm * pl), r(Rational::one()), r(pm.clone())])
}

/// Left and right sides of the identity at one draw. Degenerate draws give `DivisionByZero`.
pub fn sides(which: Identity, draw: &Draw) -> Result<(EtaleMatrix, EtaleMatrix)> {
    let al = alpha(draw)?;
    let d = al.d().clone();
    let r = |x: &Rational| Etale::rational(x.clone(), &d);
    let (u, w, pm) = (&draw.u, &draw.w, &draw.pm);
    let u_inv = u.recip();
    let (s1, s2) = weyl(&d);
    let eta = EtaleMatrix::with_entries(&d, &[(1, 0, al.scale(pm)), (2, 3, -&al.conj().scale(pm))]);
    let du = diag_u(u, &d);
    let xw = x_w(&r(w));
    match which {
        Identity::I => {
            let lhs = &eta * &du;
            let n = EtaleMatrix::with_entries(
                &d,
                &[(1, 0, al.scale(&(pm * &u_inv))), (2, 3, -&al.conj().scale(&(pm * &u_inv)))],
            );
            Ok((lhs, &du * &n))
        }
        Identity::II => {
            let beta = &al.scale(pm) + &r(&(u * w));
            let bb = beta.conj();
            let (bi, bbi) = (beta.inv()?, bb.inv()?);
            let lhs = &(&(&eta * &du) * &xw) * &s1;
            let t = EtaleMatrix::diag([-&bi.scale(u), beta.clone(), -&bb.scale(&u_inv), bbi.clone()]);
            let n1 = EtaleMatrix::with_entries(&d, &[(0, 1, -&beta.scale(&u_inv)), (3, 2, bb.scale(&u_inv))]);
            let n2 = EtaleMatrix::with_entries(&d, &[(1, 0, bi.scale(u)), (2, 3, -&bbi.scale(u))]);
            Ok((lhs, &(&t * &n1) * &n2))
        }
        Identity::VI => {
            let beta = &al.scale(pm) + &r(&(u * w));
            let bb = beta.conj();
            let lhs = &(&(&(&(&eta * &du) * &xw) * &s1) * &s2) * &s1;
            let m1 = EtaleMatrix::from_fn(|i, j| match (i, j) {
                (0, 0) | (2, 2) => Etale::one(&d),
                (1, 3) => r(u),
                (3, 1) => r(&(-&u_inv)),
                _ => Etale::zero(&d),
            });
            let m2 = EtaleMatrix::with_entries(&d, &[(2, 1, bb.scale(&u_inv)), (3, 0, beta.scale(&u_inv))]);
            Ok((lhs, &m1 * &m2))
        }
        Identity::M0Equiv | Identity::MPosEquiv => {
            let (a, b, c) = (&draw.a, &draw.b, &draw.c);
            let half_b = b / rat(2, 1);
            let (x, y) = if which == Identity::M0Equiv {
                let uw = u * w;
                let v = a + b * &uw + c * &uw * &uw;
                if v.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let y = -(u / &v);
                let x = -(u / &v) * (c * w * u + &half_b);
                (x, y)
            } else {
                if w.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let cw2u = c * w * w * u;
                (b * pm / (rat(2, 1) * &cw2u) - w.recip(), -(pm / &cw2u))
            };
            let g = [
                [r(&(&x + &y * &half_b)), r(&(&y * c))],
                [r(&(-(&y * a))), r(&(&x - &y * &half_b))],
            ];
            let emb = EtaleMatrix::embed_gl2(g)?;
            let hm = h(&draw.pl, pm, &d);
            let hinv = hm.diag_inv()?;
            let sign = EtaleMatrix::diag([r(&Rational::one()), r(&(-u)), r(&Rational::one()), r(&(-&u_inv))]);
            let lhs = &(&(&hinv * &emb) * &hm) * &sign;
            let k = if which == Identity::M0Equiv {
                let uw = u * w;
                let v = a + b * &uw + c * &uw * &uw;
                let e1 = -(u * (b + c * u * w) / &v);
                let e2 = c * u * u / &v;
                let e3 = u * (b + c * u * w) / &v;
                EtaleMatrix::with_entries(&d, &[(1, 0, r(&e1)), (1, 1, r(&e2)), (2, 2, r(&e2)), (2, 3, r(&e3))])
            } else {
                let cw2u = c * w * w * u;
                let diag = Rational::one() + pm * pm * a / (&cw2u * u);
                let off = b * pm / &cw2u;
                let wi = w.recip();
                let wi2 = &wi * &wi;
                EtaleMatrix::with_entries(
                    &d,
                    &[
                        (0, 0, r(&diag)),
                        (0, 1, r(&(-&off))),
                        (1, 0, r(&(-&wi))),
                        (1, 1, r(&wi2)),
                        (2, 2, r(&wi2)),
                        (2, 3, r(&wi)),
                        (3, 2, r(&off)),
                        (3, 3, r(&diag)),
                    ],
                )
            };
            let rhs = &(&(&du * &xw) * &s1) * &k;
            Ok((lhs, rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_i_simple_draw() {
        let draw = Draw {
            a: rat(1, 1),
            b: rat(0, 1),
            c: rat(1, 1),
            u: rat(1, 1),
            w: rat(0, 1),
            pm: rat(1, 1),
            pl: rat(1, 1),
        };
        let (l, r) = sides(Identity::I, &draw).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn m0_degenerate_draw_redrawn() {
        // v = a + b·uw + c·(uw)² = 1 − 3 + 2 = 0
        let draw = Draw {
            a: rat(1, 1),
            b: rat(-3, 1),
            c: rat(2, 1),
            u: rat(1, 1),
            w: rat(1, 1),
            pm: rat(1, 1),
            pl: rat(2, 1),
        };
        assert!(matches!(sides(Identity::M0Equiv, &draw), Err(Error::DivisionByZero)));
    }

    #[test]
    fn all_identities_hold() {
        for which in Identity::ALL {
            let rep = verify_matrix_identity(which, 20, 7).unwrap();
            assert!(rep.passed(), "{which} failed: {:?}", rep.failure.map(|f| f.draw.to_string()));
        }
    }
}
