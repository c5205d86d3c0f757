//! Minimal-eigenvalue lists for every `rho >= -64`.

pub struct Row {
    pub rho: i64,
    pub families: &'static [&'static str],
    pub individuals: &'static [&'static str],
    pub exotics: &'static [&'static str],
}

pub const ROWS: &[Row] = &[
    Row { rho: -1, families: &[], individuals: &[], exotics: &[] },
    Row { rho: -2, families: &["PR2a(h=0)"], individuals: &[], exotics: &[] },
    Row {
        rho: -4,
        families: &["PR2a(h=1)", "PR2b(h=1)"],
        individuals: &[
            "PR3(h=0,m=3,eps=-)",
            "PR3(h=0,m=4,eps=+)",
            "PR4(h=0,m=3)",
            "PR5(h=0,m=5,eps=-)",
            "PR5(h=0,m=6,eps=-)",
            "PR6(h=1,m=3)",
            "PR6(h=0,m=4)",
            "PR6(h=0,m=5)",
        ],
        exotics: &[],
    },
    Row {
        rho: -8,
        families: &["PR2a(h=2)"],
        individuals: &[
            "PR3(h=1,m=3,eps=-)",
            "PR3(h=0,m=4,eps=-)",
            "PR3(h=1,m=4,eps=+)",
            "PR3(h=0,m=5,eps=+)",
            "PR4(h=1,m=3)",
            "PR4(h=0,m=4)",
        ],
        exotics: &[],
    },
    Row {
        rho: -10,
        families: &["PR2b(h=2)", "PR2c(h=1)"],
        individuals: &[
            "PR5(h=1,m=5,eps=-)",
            "PR5(h=1,m=5,eps=+)",
            "PR5(h=1,m=6,eps=-)",
            "PR5(h=0,m=6,eps=+)",
            "PR5(h=0,m=7,eps=-)",
            "PR5(h=0,m=7,eps=+)",
            "PR5(h=0,m=8,eps=-)",
            "PR9(h=1)",
            "PR10(h=1)",
        ],
        exotics: &[],
    },
    Row {
        rho: -16,
        families: &["PR2a(h=3)", "PR2d(h=1)"],
        individuals: &[
            "PR6(h=2,m=3)",
            "PR6(h=1,m=4)",
            "PR6(h=1,m=5)",
            "PR6(h=0,m=6)",
            "PR6(h=0,m=7)",
            "PR8(h=1)",
            "PR3(h=2,m=3,eps=-)",
            "PR3(h=1,m=4,eps=-)",
            "PR3(h=0,m=5,eps=-)",
            "PR3(h=2,m=4,eps=+)",
            "PR3(h=1,m=5,eps=+)",
            "PR3(h=0,m=6,eps=+)",
            "PR4(h=2,m=3)",
            "PR4(h=1,m=4)",
            "PR4(h=0,m=5)",
        ],
        exotics: &[],
    },
    Row {
        rho: -28,
        families: &["PR2b(h=3)", "PR2c(h=2)"],
        individuals: &[
            "PR5(h=2,m=5,eps=-)",
            "PR5(h=2,m=5,eps=+)",
            "PR5(h=2,m=6,eps=-)",
            "PR5(h=1,m=6,eps=+)",
            "PR5(h=1,m=7,eps=-)",
            "PR5(h=1,m=7,eps=+)",
            "PR5(h=1,m=8,eps=-)",
            "PR5(h=0,m=8,eps=+)",
            "PR5(h=0,m=9,eps=-)",
            "PR5(h=0,m=9,eps=+)",
            "PR5(h=0,m=10,eps=-)",
            "PR9(h=2)",
            "PR10(h=2)",
            "PR11(h=1)",
            "PR12(h=1)",
        ],
        exotics: &["PR13", "PR14", "PR15", "PR16"],
    },
    Row {
        rho: -32,
        families: &["PR2a(h=4)"],
        individuals: &[
            "PR4(h=3,m=3)",
            "PR4(h=2,m=4)",
            "PR4(h=1,m=5)",
            "PR4(h=0,m=6)",
            "PR3(h=3,m=3,eps=-)",
            "PR3(h=3,m=4,eps=+)",
            "PR3(h=2,m=4,eps=-)",
            "PR3(h=2,m=5,eps=+)",
            "PR3(h=1,m=5,eps=-)",
            "PR3(h=1,m=6,eps=+)",
            "PR3(h=0,m=6,eps=-)",
            "PR3(h=0,m=7,eps=+)",
        ],
        exotics: &[],
    },
    Row {
        rho: -64,
        families: &["PR2a(h=5)", "PR2d(h=2)"],
        individuals: &[
            "PR4(h=4,m=3)",
            "PR4(h=3,m=4)",
            "PR4(h=2,m=5)",
            "PR4(h=1,m=6)",
            "PR4(h=0,m=7)",
            "PR3(h=4,m=3,eps=-)",
            "PR3(h=4,m=4,eps=+)",
            "PR3(h=3,m=4,eps=-)",
            "PR3(h=3,m=5,eps=+)",
            "PR3(h=2,m=5,eps=-)",
            "PR3(h=2,m=6,eps=+)",
            "PR3(h=1,m=6,eps=-)",
            "PR3(h=1,m=7,eps=+)",
            "PR3(h=0,m=7,eps=-)",
            "PR3(h=0,m=8,eps=+)",
            "PR6(h=3,m=3)",
            "PR6(h=2,m=4)",
            "PR6(h=2,m=5)",
            "PR6(h=1,m=6)",
            "PR6(h=1,m=7)",
            "PR6(h=0,m=8)",
            "PR6(h=0,m=9)",
            "PR7a",
            "PR7d",
            "PR8(h=2)",
        ],
        exotics: &["PR17", "PR18", "PR19"],
    },
];

/// Differences between the enumeration at `t = |rho|` and the row, empty when they agree.
pub fn compare(row: &Row) -> Vec<String> {
    use std::collections::BTreeSet;
    use trispec::eigclass::enumerate_min_eig;
    use trispec::CentralType;

    let r = enumerate_min_eig(row.rho.unsigned_abs());
    let mut out = Vec::new();
    let strings = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    let types = |v: &[&str]| v.iter().map(|s| s.parse::<CentralType>().unwrap()).collect::<BTreeSet<_>>();
    let fams: BTreeSet<String> = r
        .symmetric_families
        .iter()
        .filter(|f| f.rho == row.rho)
        .map(|f| f.family.clone())
        .collect();
    if fams != strings(row.families) {
        out.push(format!("rho {}: families {:?}", row.rho, fams));
    }
    let got = |m: &std::collections::BTreeMap<i64, Vec<CentralType>>| -> BTreeSet<CentralType> {
        m.get(&row.rho).cloned().unwrap_or_default().into_iter().collect()
    };
    if got(&r.individuals) != types(row.individuals) {
        out.push(format!("rho {}: individuals {:?}", row.rho, got(&r.individuals)));
    }
    if got(&r.exotics) != types(row.exotics) {
        out.push(format!("rho {}: exotics {:?}", row.rho, got(&r.exotics)));
    }
    if row.rho == -1 && !r.moufang_class {
        out.push("rho -1: Moufang class missing".into());
    }
    out
}
