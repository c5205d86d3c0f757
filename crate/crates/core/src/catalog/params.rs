//! Closed-form extended parameters of the rank-3 diagrams and codiagrams.

use super::central::{CentralType, Family, Sign};
use super::CatalogError;
use crate::srg::ExtendedParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Diagram,
    Codiagram,
}

impl std::str::FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "diagram" => Ok(Side::Diagram),
            "codiagram" => Ok(Side::Codiagram),
            _ => Err(format!("unknown side {s:?}")),
        }
    }
}

fn pw(b: i128, e: i64) -> i128 {
    b.pow(e as u32)
}

fn binom2(x: i128) -> i128 {
    x * (x - 1) / 2
}

/// `(n, k, lambda, mu)` of both sides for rank-3 bases, straight from the closed forms.
pub(crate) fn closed_form(ct: &CentralType) -> Option<[(i128, i128, i128, i128); 2]> {
    use Family::*;
    let m = ct.m() as i64;
    let mm = ct.m() as i128;
    let eps = ct.eps().map(Sign::value).unwrap_or(1);
    if ct.h() != 0 && !matches!(ct.family(), PR7a | PR7b | PR7c) {
        return None;
    }
    let out = match ct.family() {
        PR2a if m >= 4 => {
            let n = binom2(mm);
            [
                (n, 2 * (mm - 2), mm - 2, 4),
                (n, binom2(mm - 2), binom2(mm - 4), binom2(mm - 3)),
            ]
        }
        PR3 if m >= 2 => {
            let n = pw(2, 2 * m - 1) - eps * pw(2, m - 1);
            [
                (
                    n,
                    pw(2, 2 * m - 2) - eps * pw(2, m - 1),
                    pw(2, 2 * m - 3) - eps * pw(2, m - 2),
                    pw(2, 2 * m - 3) - eps * pw(2, m - 1),
                ),
                (n, pw(2, 2 * m - 2) - 1, pw(2, 2 * m - 3) - 2, pw(2, 2 * m - 3) + eps * pw(2, m - 2)),
            ]
        }
        PR4 if m >= 2 => {
            let n = pw(2, 2 * m) - 1;
            [
                (n, pw(2, 2 * m - 1), pw(2, 2 * m - 2), pw(2, 2 * m - 2)),
                (n, pw(2, 2 * m - 1) - 2, pw(2, 2 * m - 2) - 3, pw(2, 2 * m - 2) - 1),
            ]
        }
        PR5 if m % 2 == 1 && m >= 5 => {
            let a = pw(3, (m - 3) / 2);
            let n = (pw(3, m - 1) - eps * pw(3, (m - 1) / 2)) / 2;
            let lm = (pw(3, m - 3) + eps * a) / 2;
            [
                (
                    n,
                    pw(3, m - 2) - 2 * eps * a - 1,
                    2 * (pw(3, m - 3) - eps * a - 1),
                    2 * (pw(3, m - 3) - eps * a),
                ),
                (n, (pw(3, m - 2) + eps * a) / 2, lm, lm),
            ]
        }
        PR5 if m % 2 == 0 && m >= 4 => {
            let a = pw(3, (m - 2) / 2);
            let b = pw(3, (m - 4) / 2);
            let n = (pw(3, m - 1) - eps * a) / 2;
            [
                (n, pw(3, m - 2) - 1, 2 * (pw(3, m - 3) - 1), 2 * (pw(3, m - 3) + eps * b)),
                (
                    n,
                    (pw(3, m - 2) - eps * a) / 2,
                    (pw(3, m - 3) + eps * b) / 2,
                    (pw(3, m - 3) - eps * a) / 2,
                ),
            ]
        }
        PR6 if m >= 4 => {
            let n = (pw(2, 2 * m - 1) - 1 - pw(-2, m - 1)) / 3;
            [
                (n, pw(2, 2 * m - 3), 3 * pw(2, 2 * m - 5) + pw(-2, m - 3), 3 * pw(2, 2 * m - 5)),
                (
                    n,
                    4 * (pw(2, 2 * m - 5) - 1 - pw(-2, m - 3)) / 3,
                    (pw(2, 2 * m - 5) - 7 + 8 * pw(-2, m - 4)) / 3,
                    (pw(2, 2 * m - 5) - 1 - pw(-2, m - 3)) / 3,
                ),
            ]
        }
        PR7a => [(3510, 2816, 2248, 2304), (3510, 693, 180, 126)],
        PR7b => [(31671, 28160, 25000, 25344), (31671, 3510, 693, 351)],
        PR7c => [(306936, 275264, 246832, 247104), (306936, 31671, 3510, 3240)],
        _ => return None,
    };
    Some(out)
}

pub(crate) fn extended(ct: &CentralType, side: Side) -> Result<ExtendedParams, CatalogError> {
    let forms = closed_form(ct).ok_or_else(|| CatalogError::NotRank3(ct.to_string()))?;
    let (n, k, l, m) = forms[match side {
        Side::Diagram => 0,
        Side::Codiagram => 1,
    }];
    let conv = |v: i128| {
        i64::try_from(v).map_err(|_| CatalogError::OutOfRange(format!("{ct}: value {v} does not fit")))
    };
    ExtendedParams::new(conv(n)?, conv(k)?, conv(l)?, conv(m)?)
        .map_err(|e| CatalogError::Inconsistent(format!("{ct} {side:?}: {e}")))
}
