//! Central types and their string grammar `FAMILY[(h=H)][(m=M)][(eps=±)]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    PR1,
    PR2a,
    PR2b,
    PR2c,
    PR2d,
    PR3,
    PR4,
    PR5,
    PR6,
    PR7a,
    PR7b,
    PR7c,
    PR7d,
    PR7e,
    PR8,
    PR9,
    PR10,
    PR11,
    PR12,
    PR13,
    PR14,
    PR15,
    PR16,
    PR17,
    PR18,
    PR19,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i128 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which parameters a family carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub h: bool,
    pub m: bool,
    pub eps: bool,
}

/// Inclusive lower bounds for `h` and `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ranges {
    pub h_min: u32,
    pub m_min: u32,
}

impl Family {
    pub const ALL: [Family; 26] = [
        Family::PR1,
        Family::PR2a,
        Family::PR2b,
        Family::PR2c,
        Family::PR2d,
        Family::PR3,
        Family::PR4,
        Family::PR5,
        Family::PR6,
        Family::PR7a,
        Family::PR7b,
        Family::PR7c,
        Family::PR7d,
        Family::PR7e,
        Family::PR8,
        Family::PR9,
        Family::PR10,
        Family::PR11,
        Family::PR12,
        Family::PR13,
        Family::PR14,
        Family::PR15,
        Family::PR16,
        Family::PR17,
        Family::PR18,
        Family::PR19,
    ];

    pub fn name(self) -> &'static str {
        use Family::*;
        match self {
            PR1 => "PR1",
            PR2a => "PR2a",
            PR2b => "PR2b",
            PR2c => "PR2c",
            PR2d => "PR2d",
            PR3 => "PR3",
            PR4 => "PR4",
            PR5 => "PR5",
            PR6 => "PR6",
            PR7a => "PR7a",
            PR7b => "PR7b",
            PR7c => "PR7c",
            PR7d => "PR7d",
            PR7e => "PR7e",
            PR8 => "PR8",
            PR9 => "PR9",
            PR10 => "PR10",
            PR11 => "PR11",
            PR12 => "PR12",
            PR13 => "PR13",
            PR14 => "PR14",
            PR15 => "PR15",
            PR16 => "PR16",
            PR17 => "PR17",
            PR18 => "PR18",
            PR19 => "PR19",
        }
    }

    pub fn shape(self) -> Shape {
        use Family::*;
        let (h, m, eps) = match self {
            PR1 | PR8 | PR9 | PR10 | PR11 | PR12 => (true, false, false),
            PR2a | PR2b | PR2c | PR2d | PR4 | PR6 => (true, true, false),
            PR3 | PR5 => (true, true, true),
            _ => (false, false, false),
        };
        Shape { h, m, eps }
    }

    /// Ranges on which the diagram formulas are evaluated.
    pub fn extended_ranges(self) -> Ranges {
        use Family::*;
        let (h_min, m_min) = match self {
            PR2a | PR2b | PR2c | PR2d => (0, 3),
            PR3 => (0, 2),
            PR4 => (0, 1),
            PR5 => (0, 4),
            PR6 => (0, 3),
            _ => (0, 0),
        };
        Ranges { h_min, m_min }
    }

    /// Ranges of the classification list proper.
    pub fn representative_ranges(self) -> Ranges {
        use Family::*;
        let (h_min, m_min) = match self {
            PR1 => (1, 0),
            PR2a => (0, 4),
            PR2b | PR2c | PR2d => (1, 4),
            PR3 | PR4 | PR6 => (0, 3),
            PR5 => (0, 5),
            PR8 | PR9 | PR10 | PR11 | PR12 => (1, 0),
            _ => (0, 0),
        };
        Ranges { h_min, m_min }
    }

    pub fn is_exotic(self) -> bool {
        use Family::*;
        matches!(self, PR13 | PR14 | PR15 | PR16 | PR17 | PR18 | PR19)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CentralTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CentralTypeError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CentralTypeError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("malformed central type {0:?}")]
    Syntax(String),
    #[error("{family} requires parameter {param}")]
    Missing { family: Family, param: &'static str },
    #[error("{family} does not take parameter {param}")]
    Unexpected { family: Family, param: String },
    #[error("{0} is outside the evaluable parameter range")]
    OutOfRange(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralType {
    family: Family,
    h: u32,
    m: u32,
    eps: Option<Sign>,
}

impl CentralType {
    /// Validates presence of parameters and the extended ranges. Absent parameters must be
    /// passed as `0` / `None`.
    pub fn new(family: Family, h: u32, m: u32, eps: Option<Sign>) -> Result<CentralType, CentralTypeError> {
        let shape = family.shape();
        if shape.eps != eps.is_some() {
            return Err(if shape.eps {
                CentralTypeError::Missing { family, param: "eps" }
            } else {
                CentralTypeError::Unexpected { family, param: "eps".into() }
            });
        }
        if !shape.h && h != 0 {
            return Err(CentralTypeError::Unexpected { family, param: "h".into() });
        }
        if !shape.m && m != 0 {
            return Err(CentralTypeError::Unexpected { family, param: "m".into() });
        }
        let ct = CentralType { family, h, m, eps };
        let r = family.extended_ranges();
        if h < r.h_min || (shape.m && m < r.m_min) {
            return Err(CentralTypeError::OutOfRange(ct.to_string()));
        }
        Ok(ct)
    }

    pub fn fixed(family: Family) -> CentralType {
        CentralType::new(family, 0, 0, None).expect("parameterless family")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn eps(&self) -> Option<Sign> {
        self.eps
    }

    pub fn with_h(&self, h: u32) -> Result<CentralType, CentralTypeError> {
        CentralType::new(self.family, h, self.m, self.eps)
    }

    /// True when the type is a member of the classification list (not only an evaluable diagram).
    pub fn is_representative(&self) -> bool {
        let r = self.family.representative_ranges();
        let shape = self.family.shape();
        if self.h < r.h_min || (shape.m && self.m < r.m_min) {
            return false;
        }
        !(self.family == Family::PR3 && self.m == 3 && self.eps == Some(Sign::Plus))
    }

    /// The family descriptor, omitting `m` and `eps`: e.g. `PR2a(h=1)`.
    pub fn family_descriptor(&self) -> String {
        if self.family.shape().h {
            format!("{}(h={})", self.family, self.h)
        } else {
            self.family.to_string()
        }
    }
}

impl fmt::Display for CentralType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self.family.shape();
        let mut parts = Vec::new();
        if shape.h {
            parts.push(format!("h={}", self.h));
        }
        if shape.m {
            parts.push(format!("m={}", self.m));
        }
        if let Some(e) = self.eps {
            parts.push(format!("eps={}", e.symbol()));
        }
        if parts.is_empty() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}({})", self.family, parts.join(","))
        }
    }
}

impl FromStr for CentralType {
    type Err = CentralTypeError;

    /// Accepts `PR3(h=0,m=3,eps=-)` and `PR3(h=0)(m=3)(eps=-)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || CentralTypeError::Syntax(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, mut rest) = match t.find('(') {
            Some(i) => (&t[..i], &t[i..]),
            None => (t.as_str(), ""),
        };
        let family: Family = name.parse()?;
        let (mut h, mut m, mut eps) = (None, None, None);
        while !rest.is_empty() {
            let close = rest.find(')').ok_or_else(syntax)?;
            if !rest.starts_with('(') {
                return Err(syntax());
            }
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            for kv in body.split(',') {
                let (k, v) = kv.split_once('=').ok_or_else(syntax)?;
                let dup = match k {
                    "h" => h.replace(v.parse::<u32>().map_err(|_| syntax())?).is_some(),
                    "m" => m.replace(v.parse::<u32>().map_err(|_| syntax())?).is_some(),
                    "eps" | "e" => {
                        let sign = match v {
                            "+" | "+1" | "1" => Sign::Plus,
                            "-" | "-1" => Sign::Minus,
                            _ => return Err(syntax()),
                        };
                        eps.replace(sign).is_some()
                    }
                    _ => return Err(CentralTypeError::Unexpected { family, param: k.to_string() }),
                };
                if dup {
                    return Err(syntax());
                }
            }
        }
        let shape = family.shape();
        for (present, wanted, name) in [(h.is_some(), shape.h, "h"), (m.is_some(), shape.m, "m")] {
            if wanted && !present {
                return Err(CentralTypeError::Missing { family, param: name });
            }
            if present && !wanted {
                return Err(CentralTypeError::Unexpected { family, param: name.into() });
            }
        }
        CentralType::new(family, h.unwrap_or(0), m.unwrap_or(0), eps)
    }
}

impl Serialize for CentralType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CentralType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let ct: CentralType = "PR3(h=0,m=3,eps=-)".parse().unwrap();
        assert_eq!(ct.to_string(), "PR3(h=0,m=3,eps=-)");
        assert_eq!("PR3(h=0)(m=3)(eps=-)".parse::<CentralType>().unwrap(), ct);
        assert_eq!("pr7a".parse::<CentralType>().unwrap().to_string(), "PR7a");
        assert_eq!("PR8(h=2)".parse::<CentralType>().unwrap().family_descriptor(), "PR8(h=2)");
        assert!(matches!("PR4(m=0)".parse::<CentralType>(), Err(CentralTypeError::Missing { .. })));
        assert!(matches!("PR4(h=0,m=0)".parse::<CentralType>(), Err(CentralTypeError::OutOfRange(_))));
        assert!(matches!("PR7a(h=1)".parse::<CentralType>(), Err(CentralTypeError::Unexpected { .. })));
        assert!(matches!("PR20".parse::<CentralType>(), Err(CentralTypeError::UnknownFamily(_))));
        assert!(matches!("PR3(h=0,m=3)".parse::<CentralType>(), Err(CentralTypeError::Missing { .. })));
        assert!("PR1(h=1".parse::<CentralType>().is_err());
        assert!("PR1(h=1,h=2)".parse::<CentralType>().is_err());
    }

    #[test]
    fn representative_ranges() {
        let p = |s: &str| s.parse::<CentralType>().unwrap();
        assert!(!p("PR3(h=4,m=3,eps=+)").is_representative());
        assert!(p("PR3(h=0,m=3,eps=-)").is_representative());
        assert!(!p("PR8(h=0)").is_representative());
        assert!(!p("PR1(h=0)").is_representative());
        assert!(p("PR2a(h=0,m=4)").is_representative());
        assert!(!p("PR2b(h=0,m=4)").is_representative());
        assert!(!p("PR5(h=0,m=4,eps=+)").is_representative());
    }
}
