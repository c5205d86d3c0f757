//! Definiteness of `I + (eta/2) H`, spectrally and by exact elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{enumerate_min_eig, EigClassError, SymmetricFamily};
use crate::catalog::{self, symplectic_type, CentralType, Family};
use crate::graph::BitMatrix;
use crate::numbers::Rational;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GramStatus {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramReport {
    pub eta: Rational,
    /// Minimal eigenvalue; absent when the report comes from elimination alone.
    pub rho: Option<Rational>,
    pub status: GramStatus,
    pub radical_dim: u64,
}

fn check_eta(eta: &Rational) -> Result<(), EigClassError> {
    if eta.is_positive() {
        Ok(())
    } else {
        Err(EigClassError::UnsupportedEta(eta.clone()))
    }
}

/// Status from the sign of `1 + (eta/2) rho`.
pub fn gram_status_of_spectrum(spec: &Spectrum, eta: &Rational) -> Result<GramReport, EigClassError> {
    check_eta(eta)?;
    let rho = spec.min_eigenvalue().clone();
    let value = &Rational::one() + &(&(eta / &Rational::int(2)) * &rho);
    let (status, radical_dim) = if value.is_positive() {
        (GramStatus::PositiveDefinite, 0)
    } else if value.is_zero() {
        (GramStatus::PositiveSemidefinite, spec.multiplicity(&rho))
    } else {
        (GramStatus::Indefinite, 0)
    };
    Ok(GramReport {
        eta: eta.clone(),
        rho: Some(rho),
        status,
        radical_dim,
    })
}

pub fn gram_status(ct: &CentralType, eta: &Rational) -> Result<GramReport, EigClassError> {
    check_eta(eta)?;
    gram_status_of_spectrum(&catalog::spectrum(ct)?, eta)
}

/// Inertia of `2q I + p M` for `eta = p/q` by fraction-free symmetric
/// elimination with positive diagonal pivots.
pub fn gram_matrix_check(m: &BitMatrix, eta: &Rational) -> GramReport {
    let n = m.n();
    let (p, q) = (eta.numer().clone(), eta.denom().clone());
    let diag = BigInt::from(2) * &q;
    // Upper triangle: a[i][j - i] holds entry (i, j), i <= j.
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (i..n)
                .map(|j| {
                    if i == j {
                        diag.clone()
                    } else if m.get(i, j) {
                        p.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    fn at(a: &[Vec<BigInt>], i: usize, j: usize) -> &BigInt {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &a[i][j - i]
    }
    let report = |status, radical_dim| GramReport {
        eta: eta.clone(),
        rho: None,
        status,
        radical_dim,
    };
    let mut alive: Vec<usize> = (0..n).collect();
    let mut prev = BigInt::one();
    loop {
        if alive.iter().any(|&i| a[i][0].is_negative()) {
            return report(GramStatus::Indefinite, 0);
        }
        let Some(pos) = alive.iter().position(|&i| a[i][0].is_positive()) else {
            break;
        };
        let piv = alive.remove(pos);
        let pv = a[piv][0].clone();
        let col: Vec<BigInt> = alive.iter().map(|&i| at(&a, i, piv).clone()).collect();
        for (x, &i) in alive.iter().enumerate() {
            for (y, &j) in alive.iter().enumerate().skip(x) {
                let (r, c) = if i <= j { (i, j - i) } else { (j, i - j) };
                let cur = std::mem::take(&mut a[r][c]);
                let mut v = cur * &pv;
                if !col[x].is_zero() && !col[y].is_zero() {
                    v -= &col[x] * &col[y];
                }
                a[r][c] = if prev.is_one() { v } else { v.div_floor(&prev) };
            }
        }
        prev = pv;
    }
    let off_diagonal = alive
        .iter()
        .enumerate()
        .any(|(x, &i)| alive[x + 1..].iter().any(|&j| !at(&a, i, j).is_zero()));
    if off_diagonal {
        report(GramStatus::Indefinite, 0)
    } else if alive.is_empty() {
        report(GramStatus::PositiveDefinite, 0)
    } else {
        report(GramStatus::PositiveSemidefinite, alive.len() as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub central_type: CentralType,
    pub gram: GramReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCandidate {
    #[serde(flatten)]
    pub family: SymmetricFamily,
    pub status: GramStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatsuoReport {
    pub eta: Rational,
    pub symplectic_only: bool,
    /// Moufang entries: `PR1` for the whole class, or the members kept by the filter.
    pub moufang: Vec<String>,
    pub families: Vec<FamilyCandidate>,
    pub individuals: Vec<Candidate>,
    pub exotics: Vec<Candidate>,
}

/// Central types whose Gram matrix is positive (semi)definite, i.e. `rho >= -2/eta`.
pub fn matsuo_candidates(eta: &Rational, symplectic_only: bool) -> Result<MatsuoReport, EigClassError> {
    check_eta(eta)?;
    if *eta == Rational::one() {
        return Err(EigClassError::UnsupportedEta(eta.clone()));
    }
    let bound = &Rational::int(2) / eta;
    let t = bound.0.floor().to_integer();
    let t = u64::try_from(t).unwrap_or(u64::MAX);
    let mut out = MatsuoReport {
        eta: eta.clone(),
        symplectic_only,
        moufang: Vec::new(),
        families: Vec::new(),
        individuals: Vec::new(),
        exotics: Vec::new(),
    };
    if t == 0 {
        return Ok(out);
    }
    let report = enumerate_min_eig(t);
    let critical = -&bound;
    let family_status = |rho: i64| {
        if Rational::int(rho) > critical {
            GramStatus::PositiveDefinite
        } else {
            GramStatus::PositiveSemidefinite
        }
    };
    if report.moufang_class {
        if symplectic_only {
            let mut h = Family::PR1.representative_ranges().h_min;
            while let Ok(c) = CentralType::new(Family::PR1, h, 0, None) {
                if !symplectic_type(&c) {
                    break;
                }
                out.moufang.push(c.to_string());
                h += 1;
            }
        } else {
            out.moufang.push(Family::PR1.to_string());
        }
    }
    for f in report.symmetric_families {
        let rep = f.representative();
        if symplectic_only && !symplectic_type(&rep) {
            continue;
        }
        out.families.push(FamilyCandidate {
            status: family_status(f.rho),
            family: f,
        });
    }
    for (list, target) in [(&report.individuals, &mut out.individuals), (&report.exotics, &mut out.exotics)] {
        for c in list.values().flatten() {
            if symplectic_only && !symplectic_type(c) {
                continue;
            }
            target.push(Candidate {
                central_type: *c,
                gram: gram_status(c, eta)?,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BitMatrix;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn octahedron() -> BitMatrix {
        BitMatrix::from_fn(6, |i, j| j != i + 3)
    }

    #[test]
    fn elimination_examples() {
        let tri = BitMatrix::from_fn(3, |_, _| true);
        assert_eq!(gram_matrix_check(&tri, &r("1/4")).status, GramStatus::PositiveDefinite);
        let g = gram_matrix_check(&octahedron(), &r("1"));
        assert_eq!((g.status, g.radical_dim), (GramStatus::PositiveSemidefinite, 2));
        let g = gram_matrix_check(&octahedron(), &r("3/2"));
        assert_eq!(g.status, GramStatus::Indefinite);
        assert_eq!(gram_matrix_check(&octahedron(), &r("2/3")).status, GramStatus::PositiveDefinite);
        assert_eq!(gram_matrix_check(&BitMatrix::empty(2), &r("5")).status, GramStatus::PositiveDefinite);
    }

    #[test]
    fn catalog_status() {
        let oct: CentralType = "PR2a(h=0,m=4)".parse().unwrap();
        assert_eq!(gram_status(&oct, &r("1/4")).unwrap().status, GramStatus::PositiveDefinite);
        let sp8: CentralType = "PR4(h=0,m=4)".parse().unwrap();
        let g = gram_status(&sp8, &r("1/4")).unwrap();
        assert_eq!((g.status, g.radical_dim), (GramStatus::PositiveSemidefinite, 135));
        let fi22: CentralType = "PR7a".parse().unwrap();
        assert_eq!(gram_status(&fi22, &r("1/4")).unwrap().status, GramStatus::Indefinite);
        assert!(gram_status(&fi22, &r("-1/4")).is_err());
    }

    #[test]
    fn matsuo_quarter() {
        let m = matsuo_candidates(&r("1/4"), true).unwrap();
        assert_eq!(m.moufang, vec!["PR1(h=1)".to_string()]);
        assert_eq!(m.families.len(), 3);
        assert_eq!(m.individuals.len(), 9);
        let all = matsuo_candidates(&r("1/4"), false).unwrap();
        assert_eq!((all.families.len(), all.individuals.len()), (4, 14));
        assert!(matsuo_candidates(&r("1"), false).is_err());
        assert!(matsuo_candidates(&r("0"), false).is_err());
        let none = matsuo_candidates(&r("3"), false).unwrap();
        assert!(none.moufang.is_empty() && none.individuals.is_empty());
    }
}
