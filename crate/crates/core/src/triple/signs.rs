//! The sign triple `(ε, ε′, ε″)` and the mod-8 table it indexes.
//!
//! For a real structure `J`, Dirac operator `D` and chirality `Ω`:
//! `J² = ε`, `JD = ε′DJ`, `JΩ = ε″ΩJ`.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::linalg::{Antiunitary, ExactMatrix, GaussianRational};

use super::FiniteSpectralTriple;

/// A `±1` sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(s: i8) -> Option<Self> {
        match s {
            1 => Some(Self::Plus),
            -1 => Some(Self::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Self::Plus => 1,
            Self::Minus => -1,
        }
    }

    pub fn as_scalar(self) -> GaussianRational {
        GaussianRational::from_int(self.value().into())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

/// `(ε, ε′, ε″)`, with `ε′` absent when `D = 0` and `ε″` absent without a chirality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct SignTriple {
    pub eps: Sign,
    pub eps_prime: Option<Sign>,
    pub eps_dprime: Option<Sign>,
}

impl SignTriple {
    pub fn new(eps: Sign, eps_prime: Option<Sign>, eps_dprime: Option<Sign>) -> Self {
        Self { eps, eps_prime, eps_dprime }
    }

    /// Whether every component present in both triples agrees.
    pub fn agrees_where_present(&self, other: &SignTriple) -> bool {
        fn ok(a: Option<Sign>, b: Option<Sign>) -> bool {
            match (a, b) {
                (Some(x), Some(y)) => x == y,
                _ => true,
            }
        }
        self.eps == other.eps
            && ok(self.eps_prime, other.eps_prime)
            && ok(self.eps_dprime, other.eps_dprime)
    }
}

impl fmt::Display for SignTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |s: Option<Sign>| s.map_or_else(|| "absent".to_string(), |s| s.to_string());
        write!(f, "({}, {}, {})", self.eps, opt(self.eps_prime), opt(self.eps_dprime))
    }
}

/// Whether a triple carries a chirality (even) or not (odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_signature(sigma: u8) -> Self {
        if sigma.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

const P: Sign = Sign::Plus;
const M: Sign = Sign::Minus;

/// Rows `σ = 0..8` of the KO-dimension sign table. Odd rows have no `ε″`.
pub const EPSILON_TABLE: [SignTriple; 8] = [
    SignTriple { eps: P, eps_prime: Some(P), eps_dprime: Some(P) },
    SignTriple { eps: P, eps_prime: Some(P), eps_dprime: None },
    SignTriple { eps: P, eps_prime: Some(P), eps_dprime: Some(M) },
    SignTriple { eps: M, eps_prime: Some(M), eps_dprime: None },
    SignTriple { eps: M, eps_prime: Some(P), eps_dprime: Some(P) },
    SignTriple { eps: M, eps_prime: Some(P), eps_dprime: None },
    SignTriple { eps: M, eps_prime: Some(P), eps_dprime: Some(M) },
    SignTriple { eps: P, eps_prime: Some(M), eps_dprime: None },
];

/// The table row for `σ mod 8`.
pub fn table_signs(sigma: u8) -> SignTriple {
    EPSILON_TABLE[usize::from(sigma % 8)]
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignError {
    #[error("J² is not ±identity")]
    NotSignInvolutive,
    #[error("{relation}: J neither commutes nor anticommutes")]
    IndefiniteSign { relation: &'static str },
    #[error("sign triple {signs} lacks {missing} needed for {parity:?} lookup")]
    IncompleteSigns { signs: SignTriple, missing: &'static str, parity: Parity },
    #[error("sign triple {0} matches no row of the KO-dimension table")]
    NoTableMatch(SignTriple),
}

/// KO-dimension from a sign triple.
///
/// Even rows are keyed by `(ε, ε″)`, which is unique in the table; a present
/// `ε′ = −1` has no even row and gives [`SignError::NoTableMatch`]. Odd rows
/// are keyed by `(ε, ε′)`.
pub fn ko_from_signs(s: &SignTriple, parity: Parity) -> Result<u8, SignError> {
    match parity {
        Parity::Even => {
            let dprime = s.eps_dprime.ok_or(SignError::IncompleteSigns {
                signs: *s,
                missing: "ε″",
                parity,
            })?;
            if s.eps_prime == Some(Sign::Minus) {
                return Err(SignError::NoTableMatch(*s));
            }
            Ok(match (s.eps, dprime) {
                (P, P) => 0,
                (P, M) => 2,
                (M, P) => 4,
                (M, M) => 6,
            })
        }
        Parity::Odd => {
            let prime = s.eps_prime.ok_or(SignError::IncompleteSigns {
                signs: *s,
                missing: "ε′",
                parity,
            })?;
            Ok(match (s.eps, prime) {
                (P, P) => 1,
                (M, M) => 3,
                (M, P) => 5,
                (P, M) => 7,
            })
        }
    }
}

/// `Some(s)` when `J A J⁻¹ = s·A`, `None` when neither sign works.
///
/// For `A = 0` both signs hold; callers treat that case as "absent" before asking.
pub fn relative_sign(j: &Antiunitary, a: &ExactMatrix) -> Option<Sign> {
    let conjugated = j.conjugate(a).ok()?;
    if &conjugated == a {
        Some(Sign::Plus)
    } else if conjugated == -a {
        Some(Sign::Minus)
    } else {
        None
    }
}

/// A real vector `v` on which `J A v` differs from both `A J v` and `−A J v`.
///
/// Returns `None` when `J` commutes or anticommutes with `A`. For real `v`,
/// `J A v = K·conj(A)·v` and `A J v = A·K·v`, so the search works with the two
/// matrices `K·conj(A) ∓ A·K`. Candidates are basis vectors, then
/// `e_i + t·e_j` for `t ∈ {1, 2, 3}`; each of the two linear conditions kills
/// at most one `t`, so the search cannot miss.
pub fn indefinite_sign_witness(j: &Antiunitary, a: &ExactMatrix) -> Option<Vec<GaussianRational>> {
    let left = j.k() * &a.conj();
    let right = a * j.k();
    let minus = &left - &right;
    let plus = &left + &right;
    if minus.is_zero() || plus.is_zero() {
        return None;
    }
    let n = a.rows();
    let nonzero_col = |m: &ExactMatrix, v: &[GaussianRational]| {
        m.apply(v).map(|w| w.iter().any(|e| !e.is_zero())).unwrap_or(false)
    };
    let basis = |i: usize| {
        let mut v = vec![GaussianRational::zero(); n];
        v[i] = GaussianRational::one();
        v
    };
    for i in 0..n {
        let v = basis(i);
        if nonzero_col(&minus, &v) && nonzero_col(&plus, &v) {
            return Some(v);
        }
    }
    let col_i = (0..n).find(|&i| nonzero_col(&minus, &basis(i)))?;
    let col_j = (0..n).find(|&i| nonzero_col(&plus, &basis(i)))?;
    for t in 1..=3 {
        let mut v = basis(col_i);
        v[col_j] += &GaussianRational::from_int(t);
        if nonzero_col(&minus, &v) && nonzero_col(&plus, &v) {
            return Some(v);
        }
    }
    None
}

/// Measures `(ε, ε′, ε″)` on a triple's matrices.
///
/// `ε′` is absent when `D = 0`; `ε″` is absent without a chirality.
pub fn extract_signs(t: &FiniteSpectralTriple) -> Result<SignTriple, SignError> {
    let j = t.real_structure();
    let eps = j
        .square()
        .as_signed_identity()
        .and_then(Sign::from_i8)
        .ok_or(SignError::NotSignInvolutive)?;
    let eps_prime = if t.dirac().is_zero() {
        None
    } else {
        Some(relative_sign(j, t.dirac()).ok_or(SignError::IndefiniteSign { relation: "JD = ±DJ" })?)
    };
    let eps_dprime = match t.chirality() {
        None => None,
        Some(omega) => Some(
            relative_sign(j, omega).ok_or(SignError::IndefiniteSign { relation: "JΩ = ±ΩJ" })?,
        ),
    };
    Ok(SignTriple { eps, eps_prime, eps_dprime })
}
