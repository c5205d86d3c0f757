//! Explicit diagrams of the base groups.

use super::forms::{count_singular_points, singular_points_closed_form, FormKind, FormSpec};
use crate::catalog::Sign;
use crate::graph::BitMatrix;

/// Diagram on a set of points: `x ~ y` iff `f(x, y) != 0`.
fn polar_graph(form: &FormSpec, points: &[Vec<u8>]) -> BitMatrix {
    BitMatrix::from_fn(points.len(), |i, j| form.polar(&points[i], &points[j]) != 0)
}

/// Transpositions of Sym(m) as 2-subsets in lexicographic order; adjacent iff they meet once.
pub fn build_symmetric(m: usize) -> BitMatrix {
    assert!(m >= 2, "Sym(m) needs m >= 2");
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    BitMatrix::from_fn(pairs.len(), |a, b| {
        let (p, q) = (pairs[a], pairs[b]);
        (p.0 == q.0) as u8 + (p.0 == q.1) as u8 + (p.1 == q.0) as u8 + (p.1 == q.1) as u8 == 1
    })
}

/// Transvections of Sp(2m, 2): nonzero vectors, adjacent iff not perpendicular.
pub fn build_symplectic2(m: usize) -> BitMatrix {
    assert!(m >= 1, "Sp(2m, 2) needs m >= 1");
    let form = FormSpec::symplectic(m);
    polar_graph(&form, &form.points())
}

/// Nonsingular points of O^eps(2m, 2), adjacent iff not perpendicular.
pub fn build_orthogonal2(m: usize, eps: Sign) -> BitMatrix {
    assert!(m >= 2, "O(2m, 2) needs m >= 2");
    let form = FormSpec::quadratic2(m, eps);
    let singular = count_singular_points(&form) as i64;
    assert_eq!(
        Some(singular),
        singular_points_closed_form(form.field, FormKind::Quadratic, form.dim, Some(eps)),
        "constructed form has the wrong Witt type"
    );
    let points: Vec<_> = form.points().into_iter().filter(|x| form.value(x) == 1).collect();
    polar_graph(&form, &points)
}

/// Isotropic points of the hermitian space GF(4)^m, adjacent iff not perpendicular.
pub fn build_unitary4(m: usize) -> BitMatrix {
    assert!(m >= 3, "SU(m, 2) needs m >= 3");
    let form = FormSpec::hermitian(m);
    let points: Vec<_> = form.points().into_iter().filter(|x| form.is_singular(x)).collect();
    polar_graph(&form, &points)
}

/// Sign of a GF(3) form read off from point counts: singular points for even
/// `dim`, `+`-points (`f(x, x) = 1`) for odd `dim`.
pub fn empirical_sign3(form: &FormSpec) -> Sign {
    let d = form.dim as u32;
    let pts = form.points();
    if d % 2 == 0 {
        let s = pts.iter().filter(|x| form.value(x) == 0).count() as i64;
        if s > (3i64.pow(d - 1) - 1) / 2 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    } else {
        let plus = pts.iter().filter(|x| form.value(x) == 1).count() as i64;
        if 2 * plus < 3i64.pow(d - 1) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// The GF(3) form of the requested sign.
pub fn orthogonal3_form(m: usize, eps: Sign) -> FormSpec {
    [false, true]
        .into_iter()
        .map(|t| FormSpec::symmetric3(m, t))
        .find(|f| empirical_sign3(f) == eps)
        .expect("one of the two discriminants has each sign")
}

/// Reflections of Omega^eps(m, 3): `+`-points, adjacent iff not perpendicular.
pub fn build_orthogonal3(m: usize, eps: Sign) -> BitMatrix {
    assert!(m >= 3, "Omega(m, 3) needs m >= 3");
    let form = orthogonal3_form(m, eps);
    let points: Vec<_> = form.points().into_iter().filter(|x| form.value(x) == 1).collect();
    polar_graph(&form, &points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_degrees() {
        let cases = [
            (build_symmetric(3), 3, 2),
            (build_symmetric(5), 10, 6),
            (build_symplectic2(1), 3, 2),
            (build_symplectic2(3), 63, 32),
            (build_orthogonal2(3, Sign::Minus), 36, 20),
            (build_orthogonal2(4, Sign::Plus), 120, 56),
            (build_unitary4(3), 9, 8),
            (build_unitary4(4), 45, 32),
            (build_orthogonal3(4, Sign::Plus), 12, 8),
            (build_orthogonal3(5, Sign::Minus), 45, 32),
            (build_orthogonal3(6, Sign::Minus), 126, 80),
        ];
        for (g, n, k) in cases {
            assert_eq!((g.n(), g.regular_degree()), (n, Some(k)));
        }
    }

    #[test]
    fn o4_plus_is_disconnected() {
        let g = build_orthogonal2(2, Sign::Plus);
        assert_eq!(g.n(), 6);
        assert!(!g.is_connected());
    }
}
