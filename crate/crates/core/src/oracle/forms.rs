//! GF(2), GF(3), GF(4) and the reflexive forms the polar-space builders use.

use serde::Serialize;

use crate::catalog::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Field {
    GF2,
    GF3,
    GF4,
}

// GF(4) = {0, 1, w, w^2} encoded as 0, 1, 2, 3; addition is xor.
const GF4_LOG: [usize; 4] = [usize::MAX, 0, 1, 2];
const GF4_EXP: [u8; 3] = [1, 2, 3];

impl Field {
    pub fn size(self) -> u8 {
        match self {
            Field::GF2 => 2,
            Field::GF3 => 3,
            Field::GF4 => 4,
        }
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Field::GF2 | Field::GF4 => a ^ b,
            Field::GF3 => (a + b) % 3,
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self {
            Field::GF3 => (3 - a) % 3,
            _ => a,
        }
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            Field::GF2 => a & b,
            Field::GF3 => (a * b) % 3,
            Field::GF4 => {
                if a == 0 || b == 0 {
                    0
                } else {
                    GF4_EXP[(GF4_LOG[a as usize] + GF4_LOG[b as usize]) % 3]
                }
            }
        }
    }

    pub fn inv(self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        match self {
            Field::GF4 => GF4_EXP[(3 - GF4_LOG[a as usize]) % 3],
            _ => a,
        }
    }

    /// The involution `a -> a^2` on GF(4), identity elsewhere.
    pub fn conj(self, a: u8) -> u8 {
        match self {
            Field::GF4 => self.mul(a, a),
            _ => a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormKind {
    Symplectic,
    Quadratic,
    SymmetricBilinear,
    Hermitian,
}

/// A nondegenerate form on `field^dim`: a Gram matrix, plus the upper-triangular
/// coefficients `q(x) = sum_{i <= j} Q_ij x_i x_j` for quadratic forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpec {
    pub field: Field,
    pub dim: usize,
    pub kind: FormKind,
    pub gram: Vec<Vec<u8>>,
    pub quad: Option<Vec<Vec<u8>>>,
}

fn hyperbolic_gram(dim: usize) -> Vec<Vec<u8>> {
    let mut g = vec![vec![0u8; dim]; dim];
    for i in (0..dim).step_by(2) {
        g[i][i + 1] = 1;
        g[i + 1][i] = 1;
    }
    g
}

impl FormSpec {
    /// `sum x_{2i-1} y_{2i} + x_{2i} y_{2i-1}` on GF(2)^{2m}.
    pub fn symplectic(m: usize) -> FormSpec {
        FormSpec {
            field: Field::GF2,
            dim: 2 * m,
            kind: FormKind::Symplectic,
            gram: hyperbolic_gram(2 * m),
            quad: None,
        }
    }

    /// `q+ = sum x_{2i-1} x_{2i}`; `q-` adds `x_1^2 + x_2^2`.
    pub fn quadratic2(m: usize, eps: Sign) -> FormSpec {
        let dim = 2 * m;
        let mut q = vec![vec![0u8; dim]; dim];
        for i in (0..dim).step_by(2) {
            q[i][i + 1] = 1;
        }
        if eps == Sign::Minus {
            q[0][0] = 1;
            q[1][1] = 1;
        }
        FormSpec {
            field: Field::GF2,
            dim,
            kind: FormKind::Quadratic,
            gram: hyperbolic_gram(dim),
            quad: Some(q),
        }
    }

    /// `sum x_i conj(y_i)` on GF(4)^dim.
    pub fn hermitian(dim: usize) -> FormSpec {
        FormSpec {
            field: Field::GF4,
            dim,
            kind: FormKind::Hermitian,
            gram: (0..dim)
                .map(|i| (0..dim).map(|j| (i == j) as u8).collect())
                .collect(),
            quad: None,
        }
    }

    /// `diag(1, ..., 1)` on GF(3)^dim, or `diag(1, ..., 1, -1)` when `twisted`.
    pub fn symmetric3(dim: usize, twisted: bool) -> FormSpec {
        let gram = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| match (i == j, twisted && i == dim - 1) {
                        (true, true) => 2,
                        (true, false) => 1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        FormSpec {
            field: Field::GF3,
            dim,
            kind: FormKind::SymmetricBilinear,
            gram,
            quad: None,
        }
    }

    /// `f(x, y)`, semilinear in `y` for hermitian forms.
    pub fn polar(&self, x: &[u8], y: &[u8]) -> u8 {
        let fl = self.field;
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                let g = self.gram[i][j];
                if g != 0 && yj != 0 {
                    acc = fl.add(acc, fl.mul(fl.mul(xi, g), fl.conj(yj)));
                }
            }
        }
        acc
    }

    /// `q(x)` for quadratic forms, `f(x, x)` otherwise.
    pub fn value(&self, x: &[u8]) -> u8 {
        match &self.quad {
            Some(q) => {
                let fl = self.field;
                let mut acc = 0;
                for i in 0..self.dim {
                    for j in i..self.dim {
                        if q[i][j] != 0 {
                            acc = fl.add(acc, fl.mul(q[i][j], fl.mul(x[i], x[j])));
                        }
                    }
                }
                acc
            }
            None => self.polar(x, x),
        }
    }

    pub fn is_singular(&self, x: &[u8]) -> bool {
        self.kind == FormKind::Symplectic || self.value(x) == 0
    }

    pub fn rank(&self) -> usize {
        rank(self.field, self.gram.clone())
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim
    }

    /// Witt sign read off algebraically: the Arf invariant for GF(2) quadratic
    /// forms, the discriminant for even-dimensional GF(3) forms.
    pub fn witt_sign(&self) -> Option<Sign> {
        match (self.kind, self.field) {
            (FormKind::Quadratic, Field::GF2) => {
                let q = self.quad.as_ref()?;
                let arf = (0..self.dim)
                    .step_by(2)
                    .fold(0, |acc, i| acc ^ (q[i][i] & q[i + 1][i + 1]));
                Some(if arf == 0 { Sign::Plus } else { Sign::Minus })
            }
            (FormKind::SymmetricBilinear, Field::GF3) if self.dim % 2 == 0 => {
                // eps = + iff (-1)^{dim/2} disc is a square; -1 is a nonsquare mod 3.
                let disc = (0..self.dim).fold(1u8, |d, i| (d * self.gram[i][i]) % 3);
                let val = if (self.dim / 2) % 2 == 0 { disc } else { (3 - disc) % 3 };
                Some(if val == 1 { Sign::Plus } else { Sign::Minus })
            }
            _ => None,
        }
    }

    /// Representatives of the 1-spaces (first nonzero coordinate 1), in lexicographic order.
    pub fn points(&self) -> Vec<Vec<u8>> {
        let q = self.field.size() as usize;
        let total = q.pow(self.dim as u32);
        let mut out = Vec::new();
        for code in 1..total {
            let mut x = vec![0u8; self.dim];
            let mut c = code;
            for i in (0..self.dim).rev() {
                x[i] = (c % q) as u8;
                c /= q;
            }
            if x.iter().find(|&&v| v != 0) == Some(&1) {
                out.push(x);
            }
        }
        out
    }
}

fn rank(field: Field, mut a: Vec<Vec<u8>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = field.inv(a[r][c]);
        for v in a[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    let sub = field.neg(field.mul(f, a[r][j]));
                    a[i][j] = field.add(a[i][j], sub);
                }
            }
        }
        r += 1;
    }
    r
}

/// Brute-force number of singular (isotropic) 1-spaces.
pub fn count_singular_points(form: &FormSpec) -> u64 {
    assert!(form.is_nondegenerate(), "degenerate form");
    form.points().iter().filter(|x| form.is_singular(x)).count() as u64
}

fn sign_value(eps: Sign) -> i64 {
    eps.value() as i64
}

/// Closed-form singular point counts; `None` when no formula applies.
pub fn singular_points_closed_form(field: Field, kind: FormKind, dim: usize, eps: Option<Sign>) -> Option<i64> {
    let d = dim as u32;
    match (field, kind) {
        (Field::GF2, FormKind::Symplectic) if dim % 2 == 0 => Some(2i64.pow(d) - 1),
        (Field::GF2, FormKind::Quadratic) if dim % 2 == 0 => {
            let m = d / 2;
            Some(2i64.pow(2 * m - 1) + sign_value(eps?) * 2i64.pow(m - 1) - 1)
        }
        (Field::GF3, FormKind::SymmetricBilinear) if dim >= 1 => {
            let base = (3i64.pow(d - 1) - 1) / 2;
            if dim % 2 == 1 {
                Some(base)
            } else {
                Some(base + sign_value(eps?) * 3i64.pow((d - 2) / 2))
            }
        }
        (Field::GF4, FormKind::Hermitian) if dim >= 1 => {
            Some((2i64.pow(2 * d - 1) - 1 - (-2i64).pow(d - 1)) / 3)
        }
        _ => None,
    }
}

/// `s_i = 1 + (s_2 - 1) q^{i-2} + q s_{i-2}`, seeded at dimensions 0, 1, 2.
pub fn singular_points_recursive(field: Field, kind: FormKind, dim: usize, eps: Option<Sign>) -> Option<i64> {
    let (q, hyper, seed2): (i64, i64, i64) = match (field, kind) {
        (Field::GF2, FormKind::Symplectic) => (2, 3, 3),
        (Field::GF2, FormKind::Quadratic) => (2, 2, if eps? == Sign::Plus { 2 } else { 0 }),
        (Field::GF3, FormKind::SymmetricBilinear) => {
            if dim % 2 == 0 {
                (3, 2, if eps? == Sign::Plus { 2 } else { 0 })
            } else {
                (3, 2, 2)
            }
        }
        (Field::GF4, FormKind::Hermitian) => (4, 3, 3),
        _ => return None,
    };
    if dim % 2 == 1 && matches!(field, Field::GF2) {
        return None;
    }
    let mut s = if dim % 2 == 0 { seed2 } else { 0 };
    let mut i = if dim % 2 == 0 { 2 } else { 1 };
    if dim == 0 {
        return Some(0);
    }
    while i < dim {
        i += 2;
        s = 1 + (hyper - 1) * q.pow(i as u32 - 2) + q * s;
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_a_field() {
        let f = Field::GF4;
        for a in 1..4u8 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.conj(f.conj(a)), a);
            for b in 0..4u8 {
                for c in 0..4u8 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        assert_eq!(f.add(2, 1), 3);
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn witt_signs() {
        assert_eq!(FormSpec::quadratic2(3, Sign::Minus).witt_sign(), Some(Sign::Minus));
        assert_eq!(FormSpec::quadratic2(3, Sign::Plus).witt_sign(), Some(Sign::Plus));
        assert_eq!(FormSpec::symmetric3(4, false).witt_sign(), Some(Sign::Plus));
        assert_eq!(FormSpec::symmetric3(2, false).witt_sign(), Some(Sign::Minus));
        assert_eq!(FormSpec::symmetric3(5, false).witt_sign(), None);
    }

    #[test]
    fn examples() {
        assert_eq!(count_singular_points(&FormSpec::symmetric3(5, false)), 40);
        assert_eq!(count_singular_points(&FormSpec::symmetric3(5, true)), 40);
        assert_eq!(count_singular_points(&FormSpec::symmetric3(4, false)), 16);
        assert_eq!(count_singular_points(&FormSpec::hermitian(3)), 9);
        assert_eq!(count_singular_points(&FormSpec::symplectic(2)), 15);
        assert_eq!(count_singular_points(&FormSpec::quadratic2(2, Sign::Minus)), 5);
    }

    #[test]
    fn points_are_ordered() {
        let pts = FormSpec::hermitian(2).points();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], vec![0, 1]);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }
}
