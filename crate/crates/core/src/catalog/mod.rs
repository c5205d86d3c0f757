//! Closed-form sizes, spectra and rank-3 parameters for every central type.

mod central;
mod params;
mod tables;

pub use central::{CentralType, CentralTypeError, Family, Ranges, Shape, Sign};
pub use params::Side;
pub use tables::PARAM_BOUND;

use serde::Serialize;

use crate::lifts::Prime;
use crate::spectrum::Spectrum;
use crate::srg::ExtendedParams;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{0} has no rank-3 parameters")]
    NotRank3(String),
    #[error("catalog inconsistency: {0}")]
    Inconsistent(String),
}

impl From<CentralTypeError> for CatalogError {
    fn from(e: CentralTypeError) -> Self {
        CatalogError::OutOfRange(e.to_string())
    }
}

fn ct(family: Family, h: u32, m: u32, eps: Option<Sign>) -> CentralType {
    CentralType::new(family, h, m, eps).expect("alias target in range")
}

/// Target of an exotic type: the split group with the same diagram.
pub fn exotic_target(family: Family) -> Option<CentralType> {
    use Family::*;
    use Sign::Minus;
    Some(match family {
        PR13 => ct(PR5, 2, 5, Some(Minus)),
        PR14 => ct(PR5, 2, 6, Some(Minus)),
        PR15 => ct(PR5, 1, 7, Some(Minus)),
        PR16 => ct(PR5, 1, 8, Some(Minus)),
        PR17 => ct(PR6, 2, 5, None),
        PR18 => ct(PR6, 1, 7, None),
        PR19 => ct(PR6, 3, 3, None),
        _ => return None,
    })
}

/// One rewriting step towards the canonical type with the same diagram.
fn alias_step(c: &CentralType) -> Option<CentralType> {
    use Family::*;
    use Sign::*;
    let (h, m, eps) = (c.h(), c.m(), c.eps());
    Some(match c.family() {
        f if f.is_exotic() => return exotic_target(f),
        PR2a if m == 3 && h == 0 => ct(PR1, 1, 0, None),
        PR2a if m == 3 => ct(PR2a, h - 1, 4, None),
        PR2b if h == 0 => ct(PR2a, 0, m, None),
        PR2b if m == 3 => ct(PR1, h + 1, 0, None),
        PR2c if h == 0 => ct(PR2a, 1, m, None),
        PR2c if m == 3 => ct(PR2b, h, 4, None),
        PR2d if h == 0 => ct(PR2b, 1, m, None),
        PR2d if m == 3 => ct(PR6, h, 3, None),
        PR3 if m == 2 && eps == Some(Minus) => ct(PR2a, h, 5, None),
        PR3 if m == 3 && eps == Some(Plus) => ct(PR2a, h, 8, None),
        PR4 if m == 1 => ct(PR2a, h, 3, None),
        PR4 if m == 2 => ct(PR2a, h, 6, None),
        PR5 if m == 4 && eps == Some(Minus) => ct(PR2b, h, 6, None),
        PR5 if m == 4 => ct(PR2c, h, 4, None),
        PR5 if m == 5 && h == 0 && eps == Some(Plus) => ct(PR3, 0, 3, Some(Minus)),
        PR5 if m == 5 && h == 0 => ct(PR6, 0, 4, None),
        PR6 if m == 3 && h == 0 => ct(PR1, 2, 0, None),
        PR8 if h == 0 => ct(PR5, 0, 6, Some(Minus)),
        PR9 if h == 0 => ct(PR4, 0, 3, None),
        PR10 if h == 0 => ct(PR3, 0, 4, Some(Plus)),
        PR11 if h == 0 => ct(PR6, 0, 5, None),
        PR12 if h == 0 => ct(PR6, 1, 3, None),
        _ => return None,
    })
}

/// Canonical representative with an identical diagram.
pub fn resolve_aliases(c: &CentralType) -> CentralType {
    let mut cur = *c;
    while let Some(next) = alias_step(&cur) {
        cur = next;
    }
    cur
}

/// Types that the classification list itself names twice: the second name is
/// counted once, under the first.
pub fn repetition_of(c: &CentralType) -> Option<CentralType> {
    use Family::*;
    match (c.family(), c.h(), c.m(), c.eps()) {
        (PR5, 0, 5, Some(Sign::Plus)) => Some(ct(PR3, 0, 3, Some(Sign::Minus))),
        (PR6, 0, 3, None) => Some(ct(PR1, 2, 0, None)),
        _ => None,
    }
}

fn evaluable(c: &CentralType) -> CentralType {
    match exotic_target(c.family()) {
        Some(t) => t,
        None => *c,
    }
}

pub fn size(c: &CentralType) -> Result<u64, CatalogError> {
    Ok(tables::evaluate(&evaluable(c))?.0)
}

pub fn spectrum(c: &CentralType) -> Result<Spectrum, CatalogError> {
    Ok(tables::evaluate(&evaluable(c))?.1)
}

pub fn size_and_spectrum(c: &CentralType) -> Result<(u64, Spectrum), CatalogError> {
    tables::evaluate(&evaluable(c))
}

pub fn min_eigenvalue(c: &CentralType) -> Result<i64, CatalogError> {
    let s = spectrum(c)?;
    s.min_eigenvalue()
        .to_i64()
        .ok_or_else(|| CatalogError::OutOfRange(format!("{c}: minimal eigenvalue does not fit")))
}

/// Closed-form parameters; types with an identical rank-3 diagram resolve to it.
pub fn extended_params(c: &CentralType, side: Side) -> Result<ExtendedParams, CatalogError> {
    match params::extended(c, side) {
        Err(CatalogError::NotRank3(_)) => {
            let r = resolve_aliases(c);
            if r == *c {
                Err(CatalogError::NotRank3(c.to_string()))
            } else {
                params::extended(&r, side).map_err(|_| CatalogError::NotRank3(c.to_string()))
            }
        }
        other => other,
    }
}

/// The lift applied by `h` and the number of single lifts per unit of `h`.
pub fn lift_shape(family: Family) -> Option<(Prime, u32)> {
    use Family::*;
    Some(match family {
        PR1 | PR2b | PR2c | PR5 | PR9 | PR10 => (Prime::Three, 1),
        PR2a | PR3 | PR4 => (Prime::Two, 1),
        PR2d | PR6 | PR8 => (Prime::Two, 2),
        PR11 | PR12 => (Prime::Three, 2),
        _ => return None,
    })
}

/// Metadata flag for groups of symplectic type.
pub fn symplectic_type(c: &CentralType) -> bool {
    use Family::*;
    match c.family() {
        PR1 => c.h() <= 1,
        PR2a | PR3 | PR4 => true,
        _ => false,
    }
}

/// Group name with the parameters written in.
pub fn display_name(c: &CentralType) -> String {
    use Family::*;
    let (h, m) = (c.h(), c.m());
    let e = c.eps().map(|s| s.symbol()).unwrap_or(' ');
    let pre = |p: u32| if h == 0 { String::new() } else { format!("{p}^{h}:") };
    match c.family() {
        PR1 => format!("{}Sym(2)", pre(3)),
        PR2a => format!("{}Sym({m})", pre(2)),
        PR2b => format!("{}Sym({m})", pre(3)),
        PR2c => format!("{}2^1:Sym({m})", pre(3)),
        PR2d => format!("{}3^1:Sym({m})", pre(4)),
        PR3 => format!("{}O{e}_{}(2)", pre(2), 2 * m),
        PR4 => format!("{}Sp_{}(2)", pre(2), 2 * m),
        PR5 => format!("{}Omega{e}_{m}(3)", pre(3)),
        PR6 => format!("{}SU_{m}(2)'", pre(4)),
        PR7a => "Fi22".into(),
        PR7b => "Fi23".into(),
        PR7c => "Fi24".into(),
        PR7d => "O8+(2):Sym(3)".into(),
        PR7e => "O8+(3):Sym(3)".into(),
        PR8 => format!("{}(3.O6-(3))", pre(4)),
        PR9 => format!("{}(2 x Sp6(2))", pre(3)),
        PR10 => format!("{}(2.O8+(2))", pre(3)),
        PR11 => format!("{}(2 x SU5(2))", pre(9)),
        PR12 => format!("{}4^1:SU3(2)'", pre(9)),
        PR13 => "(3^5.3^5):Omega-_5(3)".into(),
        PR14 => "(3^6.3^6):(3.Omega-_6(3))".into(),
        PR15 => "3^7.Omega-_7(3)".into(),
        PR16 => "3^8.Omega-_8(3)".into(),
        PR17 => "(4^5.4^5):SU_5(2)".into(),
        PR18 => "4^7.SU_7(2)".into(),
        PR19 => "T:SU_3(2)', T = 4^(3+(3+3))".into(),
    }
}

/// Registry row for `catalog list`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyInfo {
    pub family: String,
    pub name: String,
    pub param_ranges: ParamRanges,
    pub symplectic_type: &'static str,
    pub aliases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamRanges {
    pub params: Vec<&'static str>,
    pub representative: Ranges,
    pub evaluable: Ranges,
    pub excluded: Vec<String>,
}

pub fn registry() -> Vec<FamilyInfo> {
    use Family::*;
    Family::ALL
        .iter()
        .map(|&f| {
            let shape = f.shape();
            let mut params = Vec::new();
            if shape.h {
                params.push("h");
            }
            if shape.m {
                params.push("m");
            }
            if shape.eps {
                params.push("eps");
            }
            let (name, sympl, aliases): (&str, &str, Vec<&str>) = match f {
                PR1 => ("3^h:Sym(2)", "h<=1", vec!["Moufang type", "PR1(h=1) = Sym(3)", "PR1(h=2) = SU3(2)' = PR6(h=0,m=3)"]),
                PR2a => ("2^h:Sym(m)", "all", vec!["Sym(m) = W(A_{m-1})", "2^1:Sym(m) = W(D_m)", "PR2a(h=0,m=6) = Sp4(2)", "PR2a(h=0,m=8) = O6+(2)"]),
                PR2b => ("3^h:Sym(m)", "none", vec!["affine W(A_{m-1})"]),
                PR2c => ("3^h:2^1:Sym(m)", "none", vec!["affine W(D_m)"]),
                PR2d => ("4^h:3^1:Sym(m)", "none", vec![]),
                PR3 => ("2^h:O^eps_2m(2)", "all", vec!["O6-(2) = W(E6) = Omega5+(3)", "O8+(2) = W(E8)/2", "O4-(2) = Sym(5)", "(m,eps)=(2,+) and (3,+) are diagrams only"]),
                PR4 => ("2^h:Sp_2m(2)", "all", vec!["Sp6(2) = W(E7)/2", "Sp4(2) = Sym(6)"]),
                PR5 => ("3^h.Omega^eps_m(3)", "none", vec!["Omega5-(3) = 2 x SU4(2)", "Omega5+(3) = O6-(2)"]),
                PR6 => ("4^h.SU_m(2)'", "none", vec!["SU3(2)' = 3^2:Sym(2)", "SU4(2) diagram = Omega5-(3) diagram"]),
                PR7a => ("Fi22", "none", vec![]),
                PR7b => ("Fi23", "none", vec![]),
                PR7c => ("Fi24", "none", vec![]),
                PR7d => ("O8+(2):Sym(3)", "none", vec!["O8+(2) x 3"]),
                PR7e => ("O8+(3):Sym(3)", "none", vec!["Omega8+(3) x 3"]),
                PR8 => ("4^h:(3.O6-(3))", "none", vec!["PR8(h=0) = PR5(h=0,m=6,eps=-)"]),
                PR9 => ("3^h:(2 x Sp6(2))", "none", vec!["affine W(E7)", "PR9(h=0) = PR4(h=0,m=3)"]),
                PR10 => ("3^h:(2.O8+(2))", "none", vec!["affine W(E8)", "PR10(h=0) = PR3(h=0,m=4,eps=+)"]),
                PR11 => ("9^h:(2 x SU5(2))", "none", vec!["PR11(h=0) = PR6(h=0,m=5)"]),
                PR12 => ("9^h.4^1:SU3(2)'", "none", vec!["also written 9^h.2^2:SU3(2)'", "affine W(E6)", "PR12(h=0) = PR6(h=1,m=3)"]),
                _ => ("", "none", vec![]),
            };
            let name = if f.is_exotic() {
                display_name(&CentralType::fixed(f))
            } else {
                name.to_string()
            };
            let mut aliases: Vec<String> = aliases.into_iter().map(String::from).collect();
            if let Some(t) = exotic_target(f) {
                aliases.push(format!("same diagram as {t}"));
            }
            let excluded = match f {
                PR3 => vec!["(m,eps)=(3,+) not representative".to_string()],
                _ => vec![],
            };
            FamilyInfo {
                family: f.to_string(),
                name,
                param_ranges: ParamRanges {
                    params,
                    representative: f.representative_ranges(),
                    evaluable: f.extended_ranges(),
                    excluded,
                },
                symplectic_type: sympl,
                aliases,
            }
        })
        .collect()
}
