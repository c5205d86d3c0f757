//! Spectra of regular graphs written as `<k; [r1]^m1, [r2]^m2, ...>`.
//!
//! The degree `k` is kept apart from the restricted eigenvalues, which live on
//! the orthogonal complement of the all-ones vector. A restricted eigenvalue may
//! equal `k` (disconnected graphs), so the Perron entry always has multiplicity 1.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::numbers::Rational;

/// Multiplicity in a raw spectrum table. `Star` is filled in so that the total is `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mult {
    Count(u64),
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Entry {
    pub eig: Rational,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    degree: Rational,
    restricted: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectrumError {
    #[error("more than one star multiplicity")]
    DuplicateStar,
    #[error("explicit multiplicities sum to {actual}, exceeding n = {n}")]
    NegativeStar { n: u64, actual: u128 },
    #[error("multiplicities sum to {actual}, expected {n}")]
    TotalMismatch { n: u64, actual: u128 },
    #[error("degree {0} does not occur in the table")]
    DegreeMissing(Rational),
    #[error("eigenvalue {eig} exceeds the degree {degree}")]
    DegreeNotMaximal { degree: Rational, eig: Rational },
    #[error("n must be positive")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChecksumViolation {
    Total { expected: u64, actual: u128 },
    Degree { expected: Rational, actual: Rational },
    Trace(Rational),
    TraceSquare { expected: Rational, actual: Rational },
}

impl fmt::Display for ChecksumViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChecksumViolation::Total { expected, actual } => {
                write!(f, "total multiplicity {actual}, expected {expected}")
            }
            ChecksumViolation::Degree { expected, actual } => {
                write!(f, "degree {actual}, expected {expected}")
            }
            ChecksumViolation::Trace(t) => write!(f, "trace {t}, expected 0"),
            ChecksumViolation::TraceSquare { expected, actual } => {
                write!(f, "trace of square {actual}, expected {expected}")
            }
        }
    }
}

/// Merges equal eigenvalues, resolves the star, drops empty entries and
/// separates one copy of `degree` as the Perron entry.
pub fn normalize(
    raw: &[(Rational, Mult)],
    n: u64,
    degree: &Rational,
) -> Result<Spectrum, SpectrumError> {
    if n == 0 {
        return Err(SpectrumError::Empty);
    }
    let stars = raw.iter().filter(|(_, m)| *m == Mult::Star).count();
    if stars > 1 {
        return Err(SpectrumError::DuplicateStar);
    }
    let explicit: u128 = raw
        .iter()
        .map(|(_, m)| match m {
            Mult::Count(c) => *c as u128,
            Mult::Star => 0,
        })
        .sum();
    let star = if stars == 1 {
        if explicit > n as u128 {
            return Err(SpectrumError::NegativeStar { n, actual: explicit });
        }
        n - explicit as u64
    } else {
        if explicit != n as u128 {
            return Err(SpectrumError::TotalMismatch { n, actual: explicit });
        }
        0
    };
    let mut acc: BTreeMap<Rational, u64> = BTreeMap::new();
    for (eig, m) in raw {
        let c = match m {
            Mult::Count(c) => *c,
            Mult::Star => star,
        };
        *acc.entry(eig.clone()).or_insert(0) += c;
    }
    match acc.get_mut(degree) {
        Some(c) if *c >= 1 => *c -= 1,
        _ => return Err(SpectrumError::DegreeMissing(degree.clone())),
    }
    let restricted: Vec<Entry> = acc
        .into_iter()
        .rev()
        .filter(|(_, m)| *m > 0)
        .map(|(eig, mult)| Entry { eig, mult })
        .collect();
    if let Some(first) = restricted.first() {
        if &first.eig > degree {
            return Err(SpectrumError::DegreeNotMaximal {
                degree: degree.clone(),
                eig: first.eig.clone(),
            });
        }
    }
    Ok(Spectrum {
        degree: degree.clone(),
        restricted,
    })
}

/// Convenience for integral tables.
pub fn from_ints(n: u64, degree: i64, entries: &[(i64, Mult)]) -> Result<Spectrum, SpectrumError> {
    let mut raw: Vec<(Rational, Mult)> = vec![(Rational::int(degree), Mult::Count(1))];
    raw.extend(entries.iter().map(|(e, m)| (Rational::int(*e), *m)));
    normalize(&raw, n, &Rational::int(degree))
}

impl Spectrum {
    pub fn degree(&self) -> &Rational {
        &self.degree
    }

    /// Entries other than the Perron entry, strictly descending.
    pub fn restricted(&self) -> &[Entry] {
        &self.restricted
    }

    pub fn n(&self) -> u64 {
        1 + self.restricted.iter().map(|e| e.mult).sum::<u64>()
    }

    /// All entries, Perron entry first.
    pub fn entries(&self) -> Vec<Entry> {
        let mut v = Vec::with_capacity(self.restricted.len() + 1);
        v.push(Entry {
            eig: self.degree.clone(),
            mult: 1,
        });
        v.extend(self.restricted.iter().cloned());
        v
    }

    pub fn min_eigenvalue(&self) -> &Rational {
        self.restricted
            .last()
            .map(|e| &e.eig)
            .unwrap_or(&self.degree)
    }

    /// Total multiplicity of `eig`, counting the Perron entry.
    pub fn multiplicity(&self, eig: &Rational) -> u64 {
        let base = u64::from(&self.degree == eig);
        base + self
            .restricted
            .iter()
            .filter(|e| &e.eig == eig)
            .map(|e| e.mult)
            .sum::<u64>()
    }

    pub fn is_integral(&self) -> bool {
        self.degree.is_integer() && self.restricted.iter().all(|e| e.eig.is_integer())
    }

    /// Raw table form, usable as input to [`normalize`].
    pub fn to_raw(&self) -> Vec<(Rational, Mult)> {
        self.entries()
            .into_iter()
            .map(|e| (e.eig, Mult::Count(e.mult)))
            .collect()
    }

    /// Restricted eigenvalues and multiplicities as `i64` pairs, if integral and small.
    pub fn int_entries(&self) -> Option<Vec<(i64, u64)>> {
        self.restricted
            .iter()
            .map(|e| e.eig.to_i64().map(|r| (r, e.mult)))
            .collect()
    }
}

/// Total multiplicity, trace and trace-of-square identities of a `k`-regular graph on `n` vertices.
pub fn spectrum_checksums(s: &Spectrum, n: u64, k: &Rational) -> Vec<ChecksumViolation> {
    let mut out = Vec::new();
    let total: u128 = 1 + s.restricted.iter().map(|e| e.mult as u128).sum::<u128>();
    if total != n as u128 {
        out.push(ChecksumViolation::Total {
            expected: n,
            actual: total,
        });
    }
    if s.degree() != k {
        out.push(ChecksumViolation::Degree {
            expected: k.clone(),
            actual: s.degree().clone(),
        });
    }
    let mut tr = s.degree().clone();
    let mut tr2 = s.degree() * s.degree();
    for e in &s.restricted {
        let m = Rational::int(e.mult);
        tr = &tr + &(&m * &e.eig);
        tr2 = &tr2 + &(&m * &(&e.eig * &e.eig));
    }
    if !tr.is_zero() {
        out.push(ChecksumViolation::Trace(tr));
    }
    let expected = &Rational::int(n) * k;
    if tr2 != expected {
        out.push(ChecksumViolation::TraceSquare {
            expected,
            actual: tr2,
        });
    }
    out
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.degree)?;
        for (i, e) in self.restricted.iter().enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}[{}]^{}", e.eig, e.mult)?;
        }
        write!(f, ">")
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    n: u64,
    degree: Rational,
    entries: Vec<Entry>,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SpectrumJson {
            n: self.n(),
            degree: self.degree.clone(),
            entries: self.entries(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SpectrumJson::deserialize(d)?;
        let raw: Vec<(Rational, Mult)> = j
            .entries
            .into_iter()
            .map(|e| (e.eig, Mult::Count(e.mult)))
            .collect();
        normalize(&raw, j.n, &j.degree).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::int(v)
    }

    #[test]
    fn star_is_resolved() {
        let s = from_ints(72, 56, &[(8, Mult::Count(3)), (0, Mult::Star), (-4, Mult::Count(12)), (-16, Mult::Count(2))]).unwrap();
        assert_eq!(s.to_string(), "<56; [8]^3, [0]^54, [-4]^12, [-16]^2>");
        assert!(spectrum_checksums(&s, 72, &r(56)).is_empty());
    }

    #[test]
    fn zero_star_is_dropped() {
        let s = from_ints(6, 2, &[(2, Mult::Count(1)), (-1, Mult::Count(4)), (0, Mult::Star)]).unwrap();
        assert_eq!(s.to_string(), "<2; [2]^1, [-1]^4>");
        assert_eq!(s.multiplicity(&r(2)), 2);
    }

    #[test]
    fn merging_and_errors() {
        let s = from_ints(4, 2, &[(0, Mult::Count(1)), (0, Mult::Count(1)), (-2, Mult::Count(1))]).unwrap();
        assert_eq!(s.to_string(), "<2; [0]^2, [-2]^1>");
        assert_eq!(
            from_ints(3, 2, &[(-1, Mult::Star), (0, Mult::Star)]),
            Err(SpectrumError::DuplicateStar)
        );
        assert!(matches!(
            from_ints(3, 2, &[(-1, Mult::Count(5)), (0, Mult::Star)]),
            Err(SpectrumError::NegativeStar { .. })
        ));
        assert!(matches!(
            from_ints(3, 2, &[(-1, Mult::Count(1))]),
            Err(SpectrumError::TotalMismatch { .. })
        ));
        assert!(matches!(
            from_ints(3, 2, &[(5, Mult::Count(2))]),
            Err(SpectrumError::DegreeNotMaximal { .. })
        ));
        assert!(matches!(
            normalize(&[(r(1), Mult::Count(3))], 3, &r(2)),
            Err(SpectrumError::DegreeMissing(_))
        ));
    }

    #[test]
    fn checksum_violations_are_reported() {
        let s = from_ints(3, 2, &[(-1, Mult::Count(1)), (0, Mult::Count(1))]).unwrap();
        let v = spectrum_checksums(&s, 3, &r(2));
        assert!(v.iter().any(|x| matches!(x, ChecksumViolation::Trace(_))));
        assert!(v.iter().any(|x| matches!(x, ChecksumViolation::TraceSquare { .. })));
    }

    #[test]
    fn json_round_trip() {
        let s = from_ints(3510, 2816, &[(8, Mult::Count(3080)), (-64, Mult::Count(429))]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"n":3510,"degree":"2816","entries":[{"eig":"2816","mult":1},{"eig":"8","mult":3080},{"eig":"-64","mult":429}]}"#
        );
        let back: Spectrum = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn single_vertex() {
        let s = from_ints(1, 0, &[]).unwrap();
        assert_eq!(s.to_string(), "<0>");
        assert_eq!(s.n(), 1);
        assert_eq!(s.min_eigenvalue(), &r(0));
    }
}
