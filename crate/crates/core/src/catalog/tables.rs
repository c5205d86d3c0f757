//! Closed-form sizes and spectra.

use super::central::{CentralType, Family, Sign};
use super::CatalogError;
use crate::lifts::{lift_spectrum, Prime};
use crate::numbers::Rational;
use crate::spectrum::{normalize, Mult, Spectrum};

/// Largest `h` or `m` accepted; keeps every intermediate inside `i128`.
pub const PARAM_BOUND: u32 = 24;

/// `(size, degree, [(eigenvalue, multiplicity or star)])`.
pub(crate) struct Table {
    pub n: i128,
    pub degree: i128,
    pub rows: Vec<(i128, Option<i128>)>,
}

fn pw(b: i128, e: i64) -> i128 {
    assert!(e >= 0, "negative exponent");
    b.pow(e as u32)
}

fn div(a: i128, b: i128) -> i128 {
    debug_assert_eq!(a % b, 0, "{a} / {b}");
    a / b
}

fn c(v: i128) -> Option<i128> {
    Some(v)
}

const STAR: Option<i128> = None;

fn pr5_base(m: i64, eps: i128) -> Table {
    if m % 2 == 1 {
        let a = pw(3, (m - 3) / 2);
        let b = pw(3, (m - 1) / 2);
        Table {
            n: div(pw(3, m - 1) - eps * b, 2),
            degree: pw(3, m - 2) - 2 * eps * a - 1,
            rows: vec![
                (a - 1, c(div(pw(3, m - 1) - 1 - (eps - 1) * (b - 1), 4))),
                (-a - 1, c(div(pw(3, m - 1) - 1 - (eps + 1) * (b + 1), 4))),
            ],
        }
    } else {
        let a = pw(3, (m - 2) / 2);
        Table {
            n: div(pw(3, m - 1) - eps * a, 2),
            degree: pw(3, m - 2) - 1,
            rows: vec![
                (-eps * a - 1, c(div((pw(3, m / 2) - eps) * (a - eps), 8))),
                (eps * pw(3, (m - 4) / 2) - 1, c(div(pw(3, m) - 9, 8))),
            ],
        }
    }
}

pub(crate) fn table(ct: &CentralType) -> Table {
    use Family::*;
    let h = ct.h() as i64;
    let m = ct.m() as i128;
    let mi = ct.m() as i64;
    let eps = ct.eps().map(Sign::value).unwrap_or(1);
    let (p2h, p3h, p4h, p9h) = (pw(2, h), pw(3, h), pw(4, h), pw(9, h));
    let tri = m * (m - 3) / 2;
    match ct.family() {
        PR1 => Table {
            n: p3h,
            degree: p3h - 1,
            rows: vec![(-1, c(p3h - 1))],
        },
        PR2a => Table {
            n: p2h * m * (m - 1) / 2,
            degree: 2 * p2h * (m - 2),
            rows: vec![(p2h * (m - 4), c(m - 1)), (0, STAR), (-2 * p2h, c(tri))],
        },
        PR2b => Table {
            n: p3h * m * (m - 1) / 2,
            degree: p3h * (2 * m - 3) - 1,
            rows: vec![(p3h * (m - 3) - 1, c(m - 1)), (-1, STAR), (-p3h - 1, c(tri))],
        },
        PR2c => Table {
            n: p3h * m * (m - 1),
            degree: p3h * (4 * m - 7) - 1,
            rows: vec![
                (p3h * (2 * m - 7) - 1, c(m - 1)),
                (p3h - 1, c(m * (m - 1) / 2)),
                (-1, STAR),
                (-3 * p3h - 1, c(tri)),
            ],
        },
        PR2d => Table {
            n: 3 * p4h * m * (m - 1) / 2,
            degree: p4h * (6 * m - 10),
            rows: vec![
                (p4h * (3 * m - 10), c(m - 1)),
                (0, STAR),
                (-p4h, c(m * (m - 1))),
                (-4 * p4h, c(tri)),
            ],
        },
        PR3 => Table {
            n: p2h * (pw(2, 2 * mi - 1) - eps * pw(2, mi - 1)),
            degree: p2h * (pw(2, 2 * mi - 2) - eps * pw(2, mi - 1)),
            rows: vec![
                (eps * pw(2, h + mi - 1), c(div((pw(2, mi) - eps) * (pw(2, mi - 1) - eps), 3))),
                (0, STAR),
                (-eps * pw(2, h + mi - 2), c(div(pw(2, 2 * mi) - 4, 3))),
            ],
        },
        PR4 => Table {
            n: p2h * (pw(2, 2 * mi) - 1),
            degree: pw(2, 2 * mi - 1 + h),
            rows: vec![
                (pw(2, mi - 1 + h), c(pw(2, 2 * mi - 1) - pw(2, mi - 1) - 1)),
                (0, STAR),
                (-pw(2, mi - 1 + h), c(pw(2, 2 * mi - 1) + pw(2, mi - 1) - 1)),
            ],
        },
        PR5 => pr5_base(mi, eps),
        PR6 => {
            let d = div(8 * (pw(2, 2 * mi - 3) - 1 - pw(-2, mi - 2)), 9);
            let e = div(4 * (pw(2, 2 * mi - 3) - 1 - 7 * pw(-2, mi - 3)), 9);
            Table {
                n: p4h * div(pw(2, 2 * mi - 1) - 1 - pw(-2, mi - 1), 3),
                degree: pw(2, 2 * mi - 3 + 2 * h),
                rows: vec![
                    (-pw(-2, mi - 3 + 2 * h), c(d)),
                    (-pw(-2, mi - 2 + 2 * h), c(e)),
                    (0, STAR),
                ],
            }
        }
        PR7a => fixed(3510, 2816, &[(8, 3080), (-64, 429)]),
        PR7b => fixed(31671, 28160, &[(8, 30888), (-352, 782)]),
        PR7c => fixed(306936, 275264, &[(80, 249458), (-352, 57477)]),
        PR7d => fixed(360, 296, &[(8, 105), (-4, 252), (-64, 2)]),
        PR7e => fixed(3240, 2888, &[(8, 2457), (-28, 780), (-352, 2)]),
        PR8 => Table {
            n: 126 * p4h,
            degree: 80 * p4h,
            rows: vec![(8 * p4h, c(35)), (0, STAR), (-4 * p4h, c(90))],
        },
        PR9 => Table {
            n: 63 * p3h,
            degree: 33 * p3h - 1,
            rows: vec![(5 * p3h - 1, c(27)), (-1, STAR), (-3 * p3h - 1, c(35))],
        },
        PR10 => Table {
            n: 120 * p3h,
            degree: 57 * p3h - 1,
            rows: vec![(9 * p3h - 1, c(35)), (-1, STAR), (-3 * p3h - 1, c(84))],
        },
        PR11 => Table {
            n: 165 * p9h,
            degree: 129 * p9h - 1,
            rows: vec![(9 * p9h - 1, c(44)), (-1, STAR), (-3 * p9h - 1, c(120))],
        },
        PR12 => Table {
            n: 36 * p9h,
            degree: 33 * p9h - 1,
            rows: vec![(p9h - 1, c(27)), (-1, STAR), (-3 * p9h - 1, c(8))],
        },
        PR13 | PR14 | PR15 | PR16 | PR17 | PR18 | PR19 => {
            unreachable!("exotic types are evaluated through their alias")
        }
    }
}

fn fixed(n: i128, degree: i128, rows: &[(i128, i128)]) -> Table {
    Table {
        n,
        degree,
        rows: rows.iter().map(|&(e, m)| (e, Some(m))).collect(),
    }
}

fn check_bounds(ct: &CentralType) -> Result<(), CatalogError> {
    if ct.h() > PARAM_BOUND || ct.m() > PARAM_BOUND {
        return Err(CatalogError::OutOfRange(format!(
            "{ct}: parameters above {PARAM_BOUND} are not evaluated"
        )));
    }
    Ok(())
}

fn to_u64(v: i128, ct: &CentralType) -> Result<u64, CatalogError> {
    u64::try_from(v).map_err(|_| CatalogError::OutOfRange(format!("{ct}: value {v} does not fit")))
}

/// Size and spectrum of a non-exotic type.
pub(crate) fn evaluate(ct: &CentralType) -> Result<(u64, Spectrum), CatalogError> {
    check_bounds(ct)?;
    let t = table(ct);
    let lift_h = if ct.family() == Family::PR5 { ct.h() } else { 0 };
    let total = t.n * pw(3, lift_h as i64);
    to_u64(total, ct)?;
    let n = to_u64(t.n, ct)?;
    let mut raw = vec![(Rational::from(t.degree), Mult::Count(1))];
    for (eig, mult) in &t.rows {
        let mult = match mult {
            Some(v) => Mult::Count(to_u64(*v, ct)?),
            None => Mult::Star,
        };
        raw.push((Rational::from(*eig), mult));
    }
    let spec = normalize(&raw, n, &Rational::from(t.degree))
        .map_err(|e| CatalogError::Inconsistent(format!("{ct}: {e}")))?;
    if lift_h == 0 {
        Ok((n, spec))
    } else {
        let (s, n) = lift_spectrum(&spec, n, Prime::Three, lift_h);
        Ok((n, s))
    }
}
