//! Minimal eigenvalues: the four-case classification, enumeration by `rho >= -t`,
//! and Gram matrices `I + (eta/2) H` of Matsuo algebras.

mod gram;

pub use gram::{
    gram_matrix_check, gram_status, gram_status_of_spectrum, matsuo_candidates, Candidate, FamilyCandidate,
    GramReport, GramStatus, MatsuoReport,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, repetition_of, CatalogError, CentralType, Family, Sign};
use crate::numbers::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EigClassError {
    #[error("{0} is not negative")]
    NotNegative(i64),
    #[error("{0} is not the minimal eigenvalue of any diagram")]
    Unrealizable(i64),
    #[error("eta = {0} is not supported")]
    UnsupportedEta(Rational),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FourCase {
    /// `rho = -1`.
    Moufang,
    /// `rho = -2^a`.
    Char2 { a: u32 },
    /// `rho = -3^b - 1`.
    Char3 { b: u32 },
    /// `rho = -352`.
    Sporadic352,
}

fn exact_log(mut v: i64, base: i64) -> Option<u32> {
    let mut e = 0;
    while v > 1 && v % base == 0 {
        v /= base;
        e += 1;
    }
    (v == 1 && e > 0).then_some(e)
}

/// All cases containing `rho`; only `-4` lies in two.
pub fn four_case_classify(rho: i64) -> Result<Vec<FourCase>, EigClassError> {
    if rho >= 0 {
        return Err(EigClassError::NotNegative(rho));
    }
    let v = rho.checked_neg().ok_or(EigClassError::Unrealizable(rho))?;
    let mut out = Vec::new();
    if v == 1 {
        out.push(FourCase::Moufang);
    }
    if let Some(a) = exact_log(v, 2) {
        out.push(FourCase::Char2 { a });
    }
    if let Some(b) = exact_log(v - 1, 3) {
        out.push(FourCase::Char3 { b });
    }
    if v == 352 {
        out.push(FourCase::Sporadic352);
    }
    if out.is_empty() {
        Err(EigClassError::Unrealizable(rho))
    } else {
        Ok(out)
    }
}

/// A symmetric family `N : Sym(m)` with its minimal eigenvalue for every large `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricFamily {
    pub family: String,
    pub h: u32,
    pub rho: i64,
    pub m_min: u32,
}

impl SymmetricFamily {
    /// The member with the smallest `m`.
    pub fn representative(&self) -> CentralType {
        let name = self.family.split('(').next().unwrap_or_default();
        let f: Family = name.parse().expect("family descriptor");
        CentralType::new(f, self.h, self.m_min, None).expect("family member in range")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub t: u64,
    pub moufang_class: bool,
    pub symmetric_families: Vec<SymmetricFamily>,
    /// Individual central types keyed by minimal eigenvalue.
    pub individuals: BTreeMap<i64, Vec<CentralType>>,
    /// Exotic types, which share their diagram with a listed individual.
    pub exotics: BTreeMap<i64, Vec<CentralType>>,
    #[serde(rename = "S")]
    pub s: usize,
    #[serde(rename = "I")]
    pub i: usize,
}

impl EnumerationReport {
    pub fn individual_list(&self) -> Vec<CentralType> {
        self.individuals.values().flatten().copied().collect()
    }
}

fn rho_of(ct: &CentralType) -> Option<i64> {
    catalog::min_eigenvalue(ct).ok()
}

/// Minimal eigenvalue of a symmetric family: the minimum over a window of `m`
/// past which the lowest row no longer depends on `m`.
fn family_rho(family: Family, h: u32) -> Option<i64> {
    let m0 = family.representative_ranges().m_min;
    (m0..m0 + 4)
        .map(|m| CentralType::new(family, h, m, None).ok().and_then(|c| rho_of(&c)))
        .try_fold(i64::MAX, |acc, r| r.map(|r| acc.min(r)))
}

/// Walks `m` upwards in steps of `step` while `rho >= -t`; `rho` decreases along the branch.
fn walk_m(
    family: Family,
    h: u32,
    m_start: u32,
    step: u32,
    eps: Option<Sign>,
    t: i64,
    out: &mut Vec<(i64, CentralType)>,
) -> bool {
    let mut m = m_start;
    let mut any = false;
    loop {
        let Ok(c) = CentralType::new(family, h, m, eps) else {
            return any;
        };
        if !c.is_representative() {
            m += step;
            continue;
        }
        match rho_of(&c) {
            Some(r) if r >= -t => {
                out.push((r, c));
                any = true;
            }
            _ => return any,
        }
        m += step;
    }
}

/// Branches along which `rho` is monotone: `(eps, first m, step)`.
fn branches(family: Family) -> Vec<(Option<Sign>, u32, u32)> {
    use Family::*;
    let m0 = family.representative_ranges().m_min;
    match family {
        PR3 => vec![(Some(Sign::Minus), m0, 1), (Some(Sign::Plus), m0 + 1, 1)],
        PR4 => vec![(None, m0, 1)],
        PR5 => [Sign::Minus, Sign::Plus]
            .into_iter()
            .flat_map(|e| [(Some(e), m0, 2), (Some(e), m0 + 1, 2)])
            .collect(),
        PR6 => vec![(None, m0, 2), (None, m0 + 1, 2)],
        _ => vec![],
    }
}

/// Every central type with minimal eigenvalue at least `-t`.
pub fn enumerate_min_eig(t: u64) -> EnumerationReport {
    use Family::*;
    let ti = i64::try_from(t).unwrap_or(i64::MAX);
    let mut families = Vec::new();
    for f in [PR2a, PR2b, PR2c, PR2d] {
        let mut h = f.representative_ranges().h_min;
        while let Some(rho) = family_rho(f, h).filter(|&r| r >= -ti) {
            families.push(SymmetricFamily {
                family: format!("{f}(h={h})"),
                h,
                rho,
                m_min: f.representative_ranges().m_min,
            });
            h += 1;
        }
    }
    let mut found: Vec<(i64, CentralType)> = Vec::new();
    for f in [PR3, PR4, PR5, PR6] {
        for (eps, m0, step) in branches(f) {
            let mut h = 0;
            while walk_m(f, h, m0, step, eps, ti, &mut found) {
                h += 1;
            }
        }
    }
    for f in [PR8, PR9, PR10, PR11, PR12] {
        let mut h = f.representative_ranges().h_min;
        while let Some(r) = CentralType::new(f, h, 0, None)
            .ok()
            .and_then(|c| rho_of(&c).map(|r| (r, c)))
            .filter(|(r, _)| *r >= -ti)
        {
            found.push(r);
            h += 1;
        }
    }
    let mut exotic = Vec::new();
    for f in [PR7a, PR7b, PR7c, PR7d, PR7e, PR13, PR14, PR15, PR16, PR17, PR18, PR19] {
        let c = CentralType::fixed(f);
        if let Some(r) = rho_of(&c).filter(|&r| r >= -ti) {
            if f.is_exotic() {
                exotic.push((r, c));
            } else {
                found.push((r, c));
            }
        }
    }
    let group = |v: Vec<(i64, CentralType)>| {
        let mut map: BTreeMap<i64, Vec<CentralType>> = BTreeMap::new();
        for (r, c) in v {
            if repetition_of(&c).is_none() {
                map.entry(r).or_default().push(c);
            }
        }
        map.values_mut().for_each(|v| v.sort());
        map
    };
    let individuals = group(found);
    let exotics = group(exotic);
    families.sort_by(|a, b| b.rho.cmp(&a.rho).then(a.family.cmp(&b.family)));
    EnumerationReport {
        t,
        moufang_class: t >= 1,
        s: families.len(),
        i: individuals.values().map(Vec::len).sum(),
        symmetric_families: families,
        individuals,
        exotics,
    }
}
