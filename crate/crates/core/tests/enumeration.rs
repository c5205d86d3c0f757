use std::collections::BTreeSet;

use trispec::catalog::{self, Family, PARAM_BOUND};
use trispec::eigclass::{enumerate_min_eig, four_case_classify};
use trispec::CentralType;

fn at(rho: i64) -> BTreeSet<CentralType> {
    let r = enumerate_min_eig(rho.unsigned_abs());
    r.individuals.get(&rho).cloned().unwrap_or_default().into_iter().collect()
}

#[path = "common/golden.rs"]
mod golden;

#[test]
fn golden_lists() {
    for row in golden::ROWS {
        let diff = golden::compare(row);
        assert!(diff.is_empty(), "{diff:#?}");
    }
}

#[test]
fn rho_minus_one_and_two() {
    let r = enumerate_min_eig(1);
    assert!(r.moufang_class);
    assert_eq!((r.s, r.i), (0, 0));
    assert!(enumerate_min_eig(2).individuals.is_empty());
}

#[test]
fn counts() {
    let r8 = enumerate_min_eig(8);
    assert_eq!((r8.s, r8.i), (4, 14));
    let r64 = enumerate_min_eig(64);
    assert_eq!((r64.s, r64.i), (13, 90));
    let listed: usize = [-4, -8, -10, -16, -28, -32, -64].iter().map(|&r| at(r).len()).sum();
    assert_eq!(listed, 90);
}

#[test]
fn only_listed_eigenvalues_occur_up_to_sixty_four() {
    let r = enumerate_min_eig(64);
    let keys: Vec<i64> = r.individuals.keys().copied().collect();
    assert_eq!(keys, vec![-64, -32, -28, -16, -10, -8, -4]);
}

#[test]
fn monotone_in_t() {
    let mut prev = enumerate_min_eig(1);
    for t in 2..=70 {
        let cur = enumerate_min_eig(t);
        assert!(cur.s >= prev.s && cur.i >= prev.i);
        let before: BTreeSet<_> = prev.individual_list().into_iter().collect();
        let after: BTreeSet<_> = cur.individual_list().into_iter().collect();
        assert!(before.is_subset(&after), "t = {t}");
        let fam = |r: &trispec::eigclass::EnumerationReport| {
            r.symmetric_families.iter().map(|f| f.family.clone()).collect::<BTreeSet<_>>()
        };
        assert!(fam(&prev).is_subset(&fam(&cur)));
        prev = cur;
    }
}

#[test]
fn every_entry_respects_the_bound() {
    for t in [1, 2, 5, 8, 30, 64, 400] {
        let r = enumerate_min_eig(t);
        for (rho, list) in r.individuals.iter().chain(&r.exotics) {
            assert!(*rho >= -(t as i64));
            for c in list {
                assert_eq!(catalog::min_eigenvalue(c).unwrap(), *rho);
            }
        }
    }
    let r = enumerate_min_eig(352);
    assert!(r.individuals[&-352].contains(&"PR7b".parse().unwrap()));
}

#[test]
fn four_cases_cover_the_catalog() {
    for f in Family::ALL {
        let shape = f.shape();
        let ranges = f.extended_ranges();
        let hs: Vec<u32> = if shape.h { (ranges.h_min..=6).collect() } else { vec![0] };
        let ms: Vec<u32> = if shape.m { (ranges.m_min.max(1)..=12).collect() } else { vec![0] };
        let es = if shape.eps { vec![Some(trispec::Sign::Plus), Some(trispec::Sign::Minus)] } else { vec![None] };
        for &h in &hs {
            for &m in &ms {
                for &e in &es {
                    let Ok(c) = CentralType::new(f, h, m, e) else { continue };
                    if !c.is_representative() && !f.is_exotic() {
                        continue;
                    }
                    assert!(h <= PARAM_BOUND);
                    let rho = catalog::min_eigenvalue(&c).unwrap();
                    assert!(four_case_classify(rho).is_ok(), "{c}: {rho}");
                }
            }
        }
    }
}
