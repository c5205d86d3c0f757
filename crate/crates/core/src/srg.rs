//! Strongly regular graph parameter algebra.

use serde::{Deserialize, Deserializer, Serialize};

use crate::numbers::Rational;
use crate::spectrum::{normalize, Mult, Spectrum, SpectrumError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SrgError {
    #[error("half case: eigenvalues of ({n}, {k}, {lambda}, {mu}) are not integers")]
    HalfCase { n: i64, k: i64, lambda: i64, mu: i64 },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("expected exactly two restricted eigenvalues, found {0}")]
    NotTwoEigenvalue(usize),
    #[error("{num} is not divisible by {den}")]
    NonIntegral { num: i128, den: i128 },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Restricted eigenvalues `r > s` and their multiplicities `f`, `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eigen {
    pub r: i64,
    pub s: i64,
    pub f: i64,
    pub g: i64,
}

/// `(n, k, lambda, mu; r^f, s^g)` together with the complement side `(l, lambda', mu')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtendedParams {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    pub l: i64,
    pub lambda_c: i64,
    pub mu_c: i64,
    pub r: i64,
    pub s: i64,
    pub f: i64,
    pub g: i64,
}

fn infeasible(msg: impl Into<String>) -> SrgError {
    SrgError::Infeasible(msg.into())
}

fn isqrt(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let mut x = (v as f64).sqrt() as i128;
    while x * x > v {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= v {
        x += 1;
    }
    (x * x == v).then_some(x)
}

fn exact_div(num: i128, den: i128) -> Result<i128, SrgError> {
    if den == 0 || num % den != 0 {
        return Err(SrgError::NonIntegral { num, den });
    }
    Ok(num / den)
}

fn check_basic(n: i64, k: i64, lambda: i64, mu: i64) -> Result<(), SrgError> {
    if !(0 < k && k < n - 1) {
        return Err(infeasible(format!("need 0 < k < n-1, got n={n}, k={k}")));
    }
    if !(0 <= mu && mu <= k) {
        return Err(infeasible(format!("need 0 <= mu <= k, got mu={mu}")));
    }
    if !(0 <= lambda && lambda < k) {
        return Err(infeasible(format!("need 0 <= lambda <= k-1, got lambda={lambda}")));
    }
    let (n, k, lambda, mu) = (n as i128, k as i128, lambda as i128, mu as i128);
    if mu * (n - k - 1) != k * (k - 1 - lambda) {
        return Err(infeasible("mu*l != k*(k-1-lambda)"));
    }
    Ok(())
}

/// Roots of `x^2 + (mu - lambda) x + (mu - k)` and their multiplicities.
pub fn eigen_from_params(n: i64, k: i64, lambda: i64, mu: i64) -> Result<Eigen, SrgError> {
    check_basic(n, k, lambda, mu)?;
    let (n_, k_, l_, m_) = (n as i128, k as i128, lambda as i128, mu as i128);
    let disc = (m_ - l_) * (m_ - l_) + 4 * (k_ - m_);
    let half = SrgError::HalfCase { n, k, lambda, mu };
    let root = isqrt(disc).ok_or(half.clone())?;
    if (l_ - m_ + root) % 2 != 0 {
        return Err(half);
    }
    let r = (l_ - m_ + root) / 2;
    let s = (l_ - m_ - root) / 2;
    if !(s <= 0 && 0 <= r && r <= k_ && s < r) {
        return Err(infeasible(format!("eigenvalues r={r}, s={s} out of order")));
    }
    let f = exact_div(-s * n_ + s - k_, r - s).map_err(|_| infeasible("f is not an integer"))?;
    let g = exact_div(r * n_ - r + k_, r - s).map_err(|_| infeasible("g is not an integer"))?;
    if f < 0 || g < 0 || 1 + f + g != n_ || k_ + f * r + g * s != 0 {
        return Err(infeasible(format!("multiplicities f={f}, g={g} inconsistent")));
    }
    Ok(Eigen {
        r: r as i64,
        s: s as i64,
        f: f as i64,
        g: g as i64,
    })
}

impl ExtendedParams {
    /// Completes `(n, k, lambda, mu)`, validating every identity.
    pub fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Result<ExtendedParams, SrgError> {
        let e = eigen_from_params(n, k, lambda, mu)?;
        let p = ExtendedParams {
            n,
            k,
            lambda,
            mu,
            l: n - k - 1,
            lambda_c: n - 2 * k + mu - 2,
            mu_c: n - 2 * k + lambda,
            r: e.r,
            s: e.s,
            f: e.f,
            g: e.g,
        };
        if p.lambda_c < 0 || p.mu_c < 0 {
            return Err(infeasible("complement parameters negative"));
        }
        Ok(p)
    }

    /// Rebuilds from all fields, rejecting any field inconsistent with `(n, k, lambda, mu)`.
    pub fn checked(self) -> Result<ExtendedParams, SrgError> {
        let q = ExtendedParams::new(self.n, self.k, self.lambda, self.mu)?;
        if q != self {
            return Err(infeasible(format!("fields disagree with derived values {q:?}")));
        }
        Ok(q)
    }

    pub fn is_imprimitive(&self) -> bool {
        self.mu == 0 || self.mu == self.k
    }

    pub fn spectrum(&self) -> Spectrum {
        let raw = [
            (Rational::int(self.k), Mult::Count(1)),
            (Rational::int(self.r), Mult::Count(self.f as u64)),
            (Rational::int(self.s), Mult::Count(self.g as u64)),
        ];
        normalize(&raw, self.n as u64, &Rational::int(self.k)).expect("validated parameters")
    }
}

impl std::fmt::Display for ExtendedParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}; [{}]^{}, [{}]^{})",
            self.n, self.k, self.lambda, self.mu, self.r, self.f, self.s, self.g
        )
    }
}

#[derive(Deserialize)]
struct RawParams {
    n: i64,
    k: i64,
    lambda: i64,
    mu: i64,
    l: i64,
    lambda_c: i64,
    mu_c: i64,
    r: i64,
    s: i64,
    f: i64,
    g: i64,
}

impl<'de> Deserialize<'de> for ExtendedParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let p = RawParams::deserialize(d)?;
        ExtendedParams {
            n: p.n,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
            l: p.l,
            lambda_c: p.lambda_c,
            mu_c: p.mu_c,
            r: p.r,
            s: p.s,
            f: p.f,
            g: p.g,
        }
        .checked()
        .map_err(serde::de::Error::custom)
    }
}

/// Inverts the spectrum of a two-eigenvalue regular graph: `mu = k + rs`, `lambda = mu + r + s`.
pub fn params_from_spectrum(spec: &Spectrum, n: i64) -> Result<ExtendedParams, SrgError> {
    if spec.n() as i64 != n {
        return Err(infeasible(format!("spectrum has {} eigenvalues, expected {n}", spec.n())));
    }
    let rs = spec.restricted();
    if rs.len() != 2 {
        return Err(SrgError::NotTwoEigenvalue(rs.len()));
    }
    let ints = spec
        .int_entries()
        .ok_or_else(|| infeasible("non-integral eigenvalue"))?;
    let k = spec
        .degree()
        .to_i64()
        .ok_or_else(|| infeasible("non-integral degree"))?;
    let ((r, f), (s, g)) = (ints[0], ints[1]);
    let mu = k + r * s;
    let lambda = mu + r + s;
    let p = ExtendedParams::new(n, k, lambda, mu)?;
    if (p.r, p.s, p.f, p.g) != (r, s, f as i64, g as i64) {
        return Err(infeasible("multiplicities disagree with the parameters"));
    }
    Ok(p)
}

/// Parameters of the complementary graph: `r' = -s-1`, `s' = -r-1`.
pub fn complement_params(p: &ExtendedParams) -> Result<ExtendedParams, SrgError> {
    let q = ExtendedParams::new(p.n, p.l, p.lambda_c, p.mu_c)?;
    if (q.r, q.s, q.f, q.g) != (-p.s - 1, -p.r - 1, p.g, p.f) {
        return Err(infeasible("complement eigenvalues inconsistent"));
    }
    Ok(q)
}

/// Spectrum of the complement of a regular graph on `n` vertices.
pub fn complement_spectrum(spec: &Spectrum, n: u64) -> Result<Spectrum, SrgError> {
    let l = Rational::int(n as i64 - 1) - spec.degree().clone();
    let mut raw = vec![(l.clone(), Mult::Count(1))];
    let minus_one = Rational::int(-1);
    raw.extend(
        spec.restricted()
            .iter()
            .map(|e| (&minus_one - &e.eig, Mult::Count(e.mult))),
    );
    Ok(normalize(&raw, n, &l)?)
}

/// Global size `1 + k' + k'(k'-1-lambda')/mu'` from local commuting-graph parameters.
pub fn size_from_local(kp: i64, lambda_p: i64, mu_p: i64) -> Result<i64, SrgError> {
    if mu_p <= 0 {
        return Err(infeasible("mu' must be positive"));
    }
    let (k, l, m) = (kp as i128, lambda_p as i128, mu_p as i128);
    let l_side = exact_div(k * (k - 1 - l), m)?;
    Ok((1 + k + l_side) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::from_ints;

    #[test]
    fn eigen_examples() {
        assert_eq!(eigen_from_params(10, 6, 3, 4).unwrap(), Eigen { r: 1, s: -2, f: 4, g: 5 });
        assert_eq!(
            eigen_from_params(3510, 2816, 2248, 2304).unwrap(),
            Eigen { r: 8, s: -64, f: 3080, g: 429 }
        );
        assert!(matches!(eigen_from_params(5, 2, 0, 1), Err(SrgError::HalfCase { .. })));
        assert!(matches!(eigen_from_params(9, 8, 7, 0), Err(SrgError::Infeasible(_))));
        assert!(matches!(eigen_from_params(10, 6, 3, 5), Err(SrgError::Infeasible(_))));
    }

    #[test]
    fn from_spectrum() {
        let s = from_ints(63, 32, &[(4, Mult::Count(27)), (-4, Mult::Count(35))]).unwrap();
        let p = params_from_spectrum(&s, 63).unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (63, 32, 16, 16));
        let oct = from_ints(6, 4, &[(0, Mult::Count(3)), (-2, Mult::Count(2))]).unwrap();
        let p = params_from_spectrum(&oct, 6).unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (6, 4, 2, 4));
        assert!(p.is_imprimitive());
        let k9 = from_ints(9, 8, &[(-1, Mult::Count(8))]).unwrap();
        assert_eq!(params_from_spectrum(&k9, 9), Err(SrgError::NotTwoEigenvalue(1)));
    }

    #[test]
    fn complements() {
        let fi22 = ExtendedParams::new(3510, 2816, 2248, 2304).unwrap();
        let c = complement_params(&fi22).unwrap();
        assert_eq!(
            (c.n, c.k, c.lambda, c.mu, c.r, c.f, c.s, c.g),
            (3510, 693, 180, 126, 63, 429, -9, 3080)
        );
        assert_eq!(complement_params(&c).unwrap(), fi22);
        let sp6 = ExtendedParams::new(63, 32, 16, 16).unwrap();
        let c = complement_params(&sp6).unwrap();
        assert_eq!((c.k, c.lambda, c.mu), (30, 13, 15));

        let oct = from_ints(6, 4, &[(0, Mult::Count(3)), (-2, Mult::Count(2))]).unwrap();
        assert_eq!(complement_spectrum(&oct, 6).unwrap().to_string(), "<1; [1]^2, [-1]^3>");
        let tri = from_ints(3, 2, &[(-1, Mult::Count(2))]).unwrap();
        let empty = complement_spectrum(&tri, 3).unwrap();
        assert_eq!(empty.to_string(), "<0; [0]^2>");
        assert_eq!(complement_spectrum(&empty, 3).unwrap(), tri);
        let fi22s = fi22.spectrum();
        assert_eq!(
            complement_spectrum(&fi22s, 3510).unwrap().to_string(),
            "<693; [63]^429, [-9]^3080>"
        );
    }

    #[test]
    fn fischer_tower() {
        assert_eq!(size_from_local(693, 180, 126).unwrap(), 3510);
        assert_eq!(size_from_local(3510, 693, 351).unwrap(), 31671);
        assert_eq!(size_from_local(31671, 3510, 3240).unwrap(), 306936);
        assert!(matches!(size_from_local(10, 4, 4), Err(SrgError::NonIntegral { .. })));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let p = ExtendedParams::new(120, 56, 28, 24).unwrap();
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"{"n":120,"k":56,"lambda":28,"mu":24,"l":63,"lambda_c":30,"mu_c":36,"r":8,"s":-4,"f":35,"g":84}"#
        );
        assert_eq!(serde_json::from_str::<ExtendedParams>(&j).unwrap(), p);
        let bad = j.replace("\"f\":35", "\"f\":36");
        assert!(serde_json::from_str::<ExtendedParams>(&bad).is_err());
    }
}
