//! Exact integer spectra of regular graphs.
//!
//! Candidate eigenvalues are the integer roots of Krylov minimal polynomials
//! modulo a large prime. They are then certified over the integers: the
//! product of `(M - r I)` must vanish on one column per twin class (twin swaps
//! are automorphisms, so the other columns follow). Multiplicities are solved
//! from the exact traces of the partial products.

use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};

use super::OracleError;
use crate::graph::BitMatrix;
use crate::numbers::Rational;
use crate::spectrum::{normalize, Mult, Spectrum};

pub const DEFAULT_CAP: usize = 2500;

const PRIME: u64 = (1 << 61) - 1;
const LANES: usize = 8;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod(v: i128) -> u64 {
    v.rem_euclid(PRIME as i128) as u64
}

fn matvec_mod(adj: &[Vec<u32>], x: &[u64]) -> Vec<u64> {
    adj.iter()
        .map(|row| (row.iter().map(|&u| x[u as usize] as u128).sum::<u128>() % PRIME as u128) as u64)
        .collect()
}

/// Monic minimal polynomial of `v` under `M`, modulo the prime, low degree first.
fn min_poly_mod(adj: &[Vec<u32>], v: Vec<u64>) -> Vec<u64> {
    let sub = |a: u64, b: u64| (a + PRIME - b) % PRIME;
    let mut basis: Vec<(Vec<u64>, usize, Vec<u64>)> = Vec::new();
    let mut raw = v;
    for t in 0..=adj.len() {
        let mut w = raw.clone();
        let mut poly = vec![0u64; t + 1];
        poly[t] = 1;
        for (b, piv, c) in &basis {
            let f = w[*piv];
            if f != 0 {
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi = sub(*wi, mulmod(f, *bi));
                }
                for (pi, ci) in poly.iter_mut().zip(c) {
                    *pi = sub(*pi, mulmod(f, *ci));
                }
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => return poly,
            Some(piv) => {
                let inv = powmod(w[piv], PRIME - 2);
                w.iter_mut().for_each(|x| *x = mulmod(*x, inv));
                poly.iter_mut().for_each(|x| *x = mulmod(*x, inv));
                basis.push((w, piv, poly));
            }
        }
        raw = matvec_mod(adj, &raw);
    }
    unreachable!("the Krylov space has dimension at most n")
}

/// Integer roots in `[-k, k]`; fails when the polynomial has other roots.
fn integer_roots(adj: &[Vec<u32>], v: Vec<u64>, k: i64) -> Result<Vec<i64>, OracleError> {
    let poly = min_poly_mod(adj, v);
    let deg = poly.len() - 1;
    let roots: Vec<i64> = (-k..=k)
        .filter(|&r| {
            let x = to_mod(r as i128);
            poly.iter().rev().fold(0, |acc, &c| (mulmod(acc, x) + c) % PRIME) == 0
        })
        .collect();
    if roots.len() < deg {
        return Err(OracleError::NonIntegralSpectrum {
            integral_roots: roots.len(),
            degree: deg,
        });
    }
    Ok(roots)
}

fn start_vector(n: usize) -> Vec<u64> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    (0..n)
        .map(|_| {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            (z ^ (z >> 31)) % PRIME
        })
        .collect()
}

/// Representatives and sizes of the twin classes.
struct Twins {
    reps: Vec<usize>,
    sizes: Vec<u64>,
    has_false: bool,
    has_true: bool,
}

fn twin_classes(m: &BitMatrix) -> Twins {
    let n = m.n();
    let mut open: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for v in 0..n {
        open.entry(m.row(v)).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut singles = Vec::new();
    let mut has_false = false;
    for (_, c) in open {
        if c.len() > 1 {
            has_false = true;
            classes.push(c);
        } else {
            singles.push(c[0]);
        }
    }
    let mut closed: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in singles {
        let mut row = m.row(v).to_vec();
        row[v / 64] |= 1 << (v % 64);
        closed.entry(row).or_default().push(v);
    }
    let mut has_true = false;
    for (_, c) in closed {
        has_true |= c.len() > 1;
        classes.push(c);
    }
    classes.iter_mut().for_each(|c| c.sort_unstable());
    classes.sort_unstable();
    Twins {
        reps: classes.iter().map(|c| c[0]).collect(),
        sizes: classes.iter().map(|c| c.len() as u64).collect(),
        has_false,
        has_true,
    }
}

enum Certificate {
    /// `tr N_t` for `t = 0 .. d-1`, where `N_t = prod_{i <= t} (M - r_i I)`.
    Traces(Vec<i128>),
    /// A nonzero column of `N_d`.
    Residual(Vec<i128>),
}

trait Exact: Copy + Default + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn from_i64(v: i64) -> Self;
    fn wide(self) -> i128;
}

impl Exact for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn wide(self) -> i128 {
        self as i128
    }
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn wide(self) -> i128 {
        self
    }
}

fn certify<T: Exact>(adj: &[Vec<u32>], cands: &[i64], twins: &Twins) -> Certificate {
    let n = adj.len();
    let d = cands.len();
    let mut traces = vec![0i128; d];
    traces[0] = n as i128;
    let mut x = vec![[T::default(); LANES]; n];
    let mut y = vec![[T::default(); LANES]; n];
    for (block, sizes) in twins.reps.chunks(LANES).zip(twins.sizes.chunks(LANES)) {
        x.iter_mut().for_each(|v| *v = [T::default(); LANES]);
        for (l, &rep) in block.iter().enumerate() {
            x[rep][l] = T::from_i64(1);
        }
        for (t, &r) in cands.iter().enumerate() {
            let r = T::from_i64(r);
            for (v, row) in adj.iter().enumerate() {
                let mut acc = [T::default(); LANES];
                for &u in row {
                    let xu = &x[u as usize];
                    for l in 0..LANES {
                        acc[l] = acc[l] + xu[l];
                    }
                }
                for l in 0..LANES {
                    y[v][l] = acc[l] - r * x[v][l];
                }
            }
            std::mem::swap(&mut x, &mut y);
            if t + 1 < d {
                for (l, (&rep, &size)) in block.iter().zip(sizes).enumerate() {
                    traces[t + 1] += size as i128 * x[rep][l].wide();
                }
            }
        }
        for l in 0..block.len() {
            if x.iter().any(|v| v[l] != T::default()) {
                return Certificate::Residual(x.iter().map(|v| v[l].wide()).collect());
            }
        }
    }
    Certificate::Traces(traces)
}

/// Multiplicities from `tr N_t = sum_{j > t} m_j prod_{i <= t} (r_j - r_i)`.
fn solve_multiplicities(cands: &[i64], traces: &[i128]) -> Option<Vec<i128>> {
    let d = cands.len();
    let mut mult = vec![0i128; d];
    let coeff = |j: usize, t: usize| -> i128 {
        (0..t).map(|i| (cands[j] - cands[i]) as i128).product()
    };
    for t in (0..d).rev() {
        let rest: i128 = (t + 1..d).map(|j| mult[j] * coeff(j, t)).sum();
        let c = coeff(t, t);
        let num = traces[t] - rest;
        if num % c != 0 || num / c < 0 {
            return None;
        }
        mult[t] = num / c;
    }
    Some(mult)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Exact spectrum with the default dimension cap.
pub fn exact_spectrum(m: &BitMatrix) -> Result<Spectrum, OracleError> {
    exact_spectrum_capped(m, DEFAULT_CAP)
}

pub fn exact_spectrum_capped(m: &BitMatrix, cap: usize) -> Result<Spectrum, OracleError> {
    let n = m.n();
    if n > cap {
        return Err(OracleError::CapExceeded { n: n as u64, cap });
    }
    if n == 0 {
        return Err(OracleError::Empty);
    }
    let k = m.regular_degree().ok_or(OracleError::NotRegular)? as i64;
    let adj = m.adjacency_lists();
    let twins = twin_classes(m);
    let mut cands = integer_roots(&adj, start_vector(n), k)?;
    if twins.has_false {
        cands.push(0);
    }
    if twins.has_true {
        cands.push(-1);
    }
    loop {
        cands.sort_unstable_by(|a, b| b.cmp(a));
        cands.dedup();
        let bound = cands
            .iter()
            .try_fold(1i128, |acc, r| acc.checked_mul((k + r.abs()) as i128));
        let cert = match bound {
            Some(b) if b < (i64::MAX / 2) as i128 => certify::<i64>(&adj, &cands, &twins),
            Some(b) if b < i128::MAX / (2 * n as i128 + 2) => certify::<i128>(&adj, &cands, &twins),
            _ => return Err(OracleError::TooManyEigenvalues(cands.len())),
        };
        match cert {
            Certificate::Traces(traces) => {
                let mult = solve_multiplicities(&cands, &traces)
                    .ok_or_else(|| OracleError::Inconsistent("multiplicities are not integral".into()))?;
                let raw: Vec<(Rational, Mult)> = cands
                    .iter()
                    .zip(&mult)
                    .filter(|(_, &m)| m > 0)
                    .map(|(&r, &m)| (Rational::int(r), Mult::Count(m as u64)))
                    .collect();
                return normalize(&raw, n as u64, &Rational::int(k))
                    .map_err(|e| OracleError::Inconsistent(e.to_string()));
            }
            Certificate::Residual(w) => {
                let g = w.iter().fold(0, |g, &x| gcd(g, x));
                let v = w.iter().map(|&x| to_mod(x / g)).collect();
                let extra: Vec<i64> = integer_roots(&adj, v, k)?
                    .into_iter()
                    .filter(|r| !cands.contains(r))
                    .collect();
                if extra.is_empty() {
                    return Err(OracleError::Inconsistent("residual without new eigenvalues".into()));
                }
                cands.extend(extra);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifts::{lift2_matrix, lift3_matrix, triple_matrix};
    use crate::oracle::builders::*;
    use crate::catalog::Sign;

    fn cycle(n: usize) -> BitMatrix {
        BitMatrix::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
    }

    #[test]
    fn small_graphs() {
        let oct = build_symmetric(4);
        assert_eq!(exact_spectrum(&oct).unwrap().to_string(), "<4; [0]^3, [-2]^2>");
        assert_eq!(exact_spectrum(&cycle(4)).unwrap().to_string(), "<2; [0]^2, [-2]^1>");
        assert_eq!(exact_spectrum(&cycle(6)).unwrap().to_string(), "<2; [1]^2, [-1]^2, [-2]^1>");
        assert_eq!(exact_spectrum(&BitMatrix::empty(1)).unwrap().to_string(), "<0>");
        assert_eq!(exact_spectrum(&BitMatrix::empty(3)).unwrap().to_string(), "<0; [0]^2>");
        let t5 = build_symmetric(5);
        assert_eq!(exact_spectrum(&t5).unwrap().to_string(), "<6; [1]^4, [-2]^5>");
    }

    #[test]
    fn rejects() {
        assert!(matches!(exact_spectrum(&cycle(5)), Err(OracleError::NonIntegralSpectrum { .. })));
        let path = BitMatrix::from_fn(3, |i, j| j == i + 1);
        assert_eq!(exact_spectrum(&path), Err(OracleError::NotRegular));
        assert!(matches!(
            exact_spectrum_capped(&cycle(6), 5),
            Err(OracleError::CapExceeded { n: 6, cap: 5 })
        ));
    }

    #[test]
    fn twins_and_lifts() {
        let oct = build_symmetric(4);
        let s = exact_spectrum(&lift3_matrix(&oct)).unwrap();
        assert_eq!(s.to_string(), "<14; [2]^3, [-1]^12, [-4]^2>");
        let s = exact_spectrum(&lift2_matrix(&lift2_matrix(&oct))).unwrap();
        assert_eq!(s.to_string(), "<16; [0]^21, [-8]^2>");
        let k9 = lift3_matrix(&lift3_matrix(&BitMatrix::empty(1)));
        assert_eq!(exact_spectrum(&k9).unwrap().to_string(), "<8; [-1]^8>");
    }

    #[test]
    fn triality_o8_plus() {
        let g = triple_matrix(&build_orthogonal2(4, Sign::Plus));
        assert_eq!(g.n(), 360);
        assert_eq!(
            exact_spectrum(&g).unwrap().to_string(),
            "<296; [8]^105, [-4]^252, [-64]^2>"
        );
    }
}
