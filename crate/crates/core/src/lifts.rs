//! The lifts `2^{.1} M = M (x) J_2`, `3^{.1} M = (M + I) (x) J_3 - I` and the
//! triple `M x 3`, on matrices and on spectra.

use crate::graph::BitMatrix;
use crate::numbers::Rational;
use crate::spectrum::{normalize, Mult, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Prime {
    Two,
    Three,
}

impl Prime {
    pub fn value(self) -> u64 {
        match self {
            Prime::Two => 2,
            Prime::Three => 3,
        }
    }

    pub fn from_u64(p: u64) -> Option<Prime> {
        match p {
            2 => Some(Prime::Two),
            3 => Some(Prime::Three),
            _ => None,
        }
    }
}

pub fn lift2_matrix(m: &BitMatrix) -> BitMatrix {
    BitMatrix::from_blocks(m.n(), 2, |_, _, i, j| m.get(i, j))
}

pub fn lift3_matrix(m: &BitMatrix) -> BitMatrix {
    BitMatrix::from_blocks(m.n(), 3, |a, b, i, j| m.get(i, j) || (a != b && i == j))
}

pub fn lift_matrix(m: &BitMatrix, p: Prime, h: u32) -> BitMatrix {
    let mut out = m.clone();
    for _ in 0..h {
        out = match p {
            Prime::Two => lift2_matrix(&out),
            Prime::Three => lift3_matrix(&out),
        };
    }
    out
}

/// `[[M, J, J], [J, M, J], [J, J, M]]`.
pub fn triple_matrix(m: &BitMatrix) -> BitMatrix {
    BitMatrix::from_blocks(m.n(), 3, |a, b, i, j| if a == b { m.get(i, j) } else { true })
}

fn lift_once(spec: &Spectrum, n: u64, p: Prime) -> (Spectrum, u64) {
    let (scale, shift, new_eig) = match p {
        Prime::Two => (2, 0, 0),
        Prime::Three => (3, 2, -1),
    };
    let map = |r: &Rational| &(&Rational::int(scale) * r) + &Rational::int(shift);
    let degree = map(spec.degree());
    let pn = p.value() * n;
    let mut raw = vec![(degree.clone(), Mult::Count(1))];
    raw.extend(spec.restricted().iter().map(|e| (map(&e.eig), Mult::Count(e.mult))));
    raw.push((Rational::int(new_eig), Mult::Count((p.value() - 1) * n)));
    let out = normalize(&raw, pn, &degree).expect("lifted spectrum is well formed");
    (out, pn)
}

/// Spectrum of `p^{.h}` applied to a regular graph with spectrum `spec` on `n` vertices.
pub fn lift_spectrum(spec: &Spectrum, n: u64, p: Prime, h: u32) -> (Spectrum, u64) {
    let mut cur = (spec.clone(), n);
    for _ in 0..h {
        cur = lift_once(&cur.0, cur.1, p);
    }
    cur
}

/// Spectrum of `M x 3` for a `k`-regular graph on `n` vertices.
pub fn triple_spectrum(spec: &Spectrum, n: u64, k: i64) -> Spectrum {
    let degree = Rational::int(k + 2 * n as i64);
    let mut raw = vec![(degree.clone(), Mult::Count(1))];
    raw.extend(spec.restricted().iter().map(|e| (e.eig.clone(), Mult::Count(3 * e.mult))));
    raw.push((Rational::int(k - n as i64), Mult::Count(2)));
    normalize(&raw, 3 * n, &degree).expect("tripled spectrum is well formed")
}
