//! Brute-force ground truth: explicit diagrams over small fields and their exact spectra.

mod builders;
mod exact;
mod forms;

pub use builders::{
    build_orthogonal2, build_orthogonal3, build_symmetric, build_symplectic2, build_unitary4,
    empirical_sign3, orthogonal3_form,
};
pub use exact::{exact_spectrum, exact_spectrum_capped, DEFAULT_CAP};
pub use forms::{
    count_singular_points, singular_points_closed_form, singular_points_recursive, Field, FormKind,
    FormSpec,
};

use crate::catalog::{self, exotic_target, CatalogError, CentralType, Family, Sign};
use crate::graph::BitMatrix;
use crate::lifts::{lift_matrix, triple_matrix, Prime};
use crate::srg::{ExtendedParams, SrgError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not strongly regular: {0}")]
    NotStronglyRegular(String),
    #[error("spectrum is not integral ({integral_roots} integer roots of a degree {degree} minimal polynomial)")]
    NonIntegralSpectrum { integral_roots: usize, degree: usize },
    #[error("{n} vertices exceed the dimension cap {cap}")]
    CapExceeded { n: u64, cap: usize },
    #[error("no oracle at this scale for {0}")]
    NoOracle(String),
    #[error("empty graph")]
    Empty,
    #[error("{0} distinct eigenvalue candidates overflow exact certification")]
    TooManyEigenvalues(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Srg(#[from] SrgError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// `(n, k, lambda, mu)` by common-neighbour counts, completed to extended parameters.
pub fn verify_srg(m: &BitMatrix) -> Result<ExtendedParams, OracleError> {
    let n = m.n();
    let k = m.regular_degree().ok_or(OracleError::NotRegular)?;
    let (mut lambda, mut mu) = (None, None);
    for i in 0..n {
        for j in i + 1..n {
            let c = m.common_neighbours(i, j);
            let slot = if m.get(i, j) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(v) if v != c => {
                    let what = if m.get(i, j) { "adjacent" } else { "non-adjacent" };
                    return Err(OracleError::NotStronglyRegular(format!(
                        "{what} pairs have {v} and {c} common neighbours"
                    )));
                }
                _ => {}
            }
        }
    }
    let (lambda, mu) = match (lambda, mu) {
        (Some(l), Some(m)) => (l, m),
        _ => return Err(OracleError::NotStronglyRegular("complete or empty graph".into())),
    };
    Ok(ExtendedParams::new(n as i64, k as i64, lambda as i64, mu as i64)?)
}

/// Explicit diagram of a central type, built from transpositions or forms and lifts.
pub fn construct(ct: &CentralType, cap: usize) -> Result<BitMatrix, OracleError> {
    use Family::*;
    use Prime::*;
    if matches!(ct.family(), PR7a | PR7b | PR7c) {
        return Err(OracleError::NoOracle(ct.to_string()));
    }
    let n = catalog::size(ct)?;
    if n > cap as u64 {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let ct = exotic_target(ct.family()).unwrap_or(*ct);
    let (h, m) = (ct.h(), ct.m() as usize);
    let eps = ct.eps().unwrap_or(Sign::Plus);
    let g = match ct.family() {
        PR1 => lift_matrix(&BitMatrix::empty(1), Three, h),
        PR2a => lift_matrix(&build_symmetric(m), Two, h),
        PR2b => lift_matrix(&build_symmetric(m), Three, h),
        PR2c => lift_matrix(&lift_matrix(&build_symmetric(m), Two, 1), Three, h),
        PR2d => lift_matrix(&lift_matrix(&build_symmetric(m), Three, 1), Two, 2 * h),
        PR3 => lift_matrix(&build_orthogonal2(m, eps), Two, h),
        PR4 => lift_matrix(&build_symplectic2(m), Two, h),
        PR5 => lift_matrix(&build_orthogonal3(m, eps), Three, h),
        PR6 => lift_matrix(&build_unitary4(m), Two, 2 * h),
        PR7d => triple_matrix(&build_orthogonal2(4, Sign::Plus)),
        PR7e => triple_matrix(&build_orthogonal3(8, Sign::Plus)),
        PR8 => lift_matrix(&build_orthogonal3(6, Sign::Minus), Two, 2 * h),
        PR9 => lift_matrix(&build_symplectic2(3), Three, h),
        PR10 => lift_matrix(&build_orthogonal2(4, Sign::Plus), Three, h),
        PR11 => lift_matrix(&build_unitary4(5), Three, 2 * h),
        PR12 => lift_matrix(&lift_matrix(&build_unitary4(3), Two, 2), Three, 2 * h),
        f => unreachable!("{f} resolved above"),
    };
    if g.n() as u64 != n {
        return Err(OracleError::Inconsistent(format!("{ct}: built {} vertices, expected {n}", g.n())));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifts::lift2_matrix;

    #[test]
    fn srg_examples() {
        let p = verify_srg(&build_symplectic2(3)).unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (63, 32, 16, 16));
        let p = verify_srg(&build_symmetric(5)).unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (10, 6, 3, 4));
        let p = verify_srg(&lift2_matrix(&build_symmetric(4))).unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (12, 8, 4, 8));
        assert!(matches!(
            verify_srg(&lift2_matrix(&build_symmetric(5))),
            Err(OracleError::NotStronglyRegular(_))
        ));
        assert!(matches!(verify_srg(&build_symmetric(3)), Err(OracleError::NotStronglyRegular(_))));
    }

    #[test]
    fn construct_guards() {
        let fi22: CentralType = "PR7b".parse().unwrap();
        assert!(matches!(construct(&fi22, DEFAULT_CAP), Err(OracleError::NoOracle(_))));
        let big: CentralType = "PR1(h=8)".parse().unwrap();
        assert!(matches!(construct(&big, DEFAULT_CAP), Err(OracleError::CapExceeded { n: 6561, .. })));
        let pr7e: CentralType = "PR7e".parse().unwrap();
        assert!(matches!(construct(&pr7e, DEFAULT_CAP), Err(OracleError::CapExceeded { n: 3240, .. })));
    }
}
