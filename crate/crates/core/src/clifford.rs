//! Explicit matrix representations of the real Clifford algebras `Cl(p,q)`.
//!
//! Generators follow the convention `ΓᵃΓᵇ + ΓᵇΓᵃ = 2ηᵃᵇ·1` with `η` carrying
//! `p` entries `+1` followed by `q` entries `−1`, so spacelike generators
//! square to `+1` and timelike ones to `−1`.
//!
//! The representation is built on `2^(n/2)`-dimensional complex space for
//! even `n = p + q`:
//!
//! * `n = 2`: `Γ¹ = σx`, `Γ² = σz`;
//! * `n → n + 2`: every existing `Γᵃ` becomes `Γᵃ ⊗ σx`, and `I ⊗ σz`, `I ⊗ σy`
//!   are appended;
//! * finally the last `q` generators are multiplied by `i`.
//!
//! Every generator is then either real or purely imaginary, which is what lets
//! [`find_real_structure`] succeed inside the span of gamma products.

use std::fmt;

use crate::linalg::{pauli, Antiunitary, ExactMatrix, GaussianRational};

/// Largest `p + q` accepted by [`build_gammas`] (matrices of size 256).
pub const MAX_GENERATORS: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("Cl({p},{q}) has odd n = {n}; matrix representations need even n")]
    OddDimensionUnsupported { p: u32, q: u32, n: u32 },
    #[error("Cl(0,0) has no generators to represent")]
    NoGenerators,
    #[error("Cl({p},{q}) exceeds the supported {MAX_GENERATORS} generators")]
    TooManyGenerators { p: u32, q: u32 },
    #[error("no real structure among scalar multiples of gamma products for Cl({p},{q})")]
    RealStructureNotFound { p: u32, q: u32 },
}

/// `(p − q) mod 8`, in `0..8`.
pub fn signature(p: u32, q: u32) -> u8 {
    (i64::from(p) - i64::from(q)).rem_euclid(8) as u8
}

/// Sign `s` with `Θ² = s·1` for the volume element of `Cl(p,q)`, any `n`.
///
/// Reordering `Γ¹⋯Γⁿ Γ¹⋯Γⁿ` costs `(−1)^(n(n−1)/2)`, and the `q` timelike
/// squares each contribute `−1`.
pub fn volume_square_sign(p: u32, q: u32) -> i8 {
    let n = u64::from(p + q);
    if (n * n.saturating_sub(1) / 2 + u64::from(q)) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An explicit representation of `Cl(p,q)` for even `p + q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordRep {
    p: u32,
    q: u32,
    gammas: Vec<ExactMatrix>,
}

impl CliffordRep {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// Complex dimension of the spinor space, `2^(n/2)`.
    pub fn dim(&self) -> usize {
        1 << (self.n() / 2)
    }

    pub fn sigma(&self) -> u8 {
        signature(self.p, self.q)
    }

    pub fn gammas(&self) -> &[ExactMatrix] {
        &self.gammas
    }

    /// `ηᵃᵃ` for each generator: `+1` repeated `p` times, then `−1` repeated `q` times.
    pub fn metric(&self) -> Vec<i8> {
        (0..self.n()).map(|a| if a < self.p { 1 } else { -1 }).collect()
    }

    /// Ordered product `Γ_{s₁}Γ_{s₂}⋯` over the given (0-based) generator indices.
    pub fn gamma_product(&self, subset: &[usize]) -> ExactMatrix {
        subset
            .iter()
            .fold(ExactMatrix::identity(self.dim()), |acc, &a| &acc * &self.gammas[a])
    }
}

/// Builds the gamma matrices of `Cl(p,q)`; see the module docs for the recursion.
pub fn build_gammas(p: u32, q: u32) -> Result<CliffordRep, CliffordError> {
    let n = p + q;
    if n == 0 {
        return Err(CliffordError::NoGenerators);
    }
    if n % 2 == 1 {
        return Err(CliffordError::OddDimensionUnsupported { p, q, n });
    }
    if n > MAX_GENERATORS {
        return Err(CliffordError::TooManyGenerators { p, q });
    }

    let mut gammas = vec![pauli::sigma_x(), pauli::sigma_z()];
    while gammas.len() < n as usize {
        let id = ExactMatrix::identity(gammas[0].rows());
        let sx = pauli::sigma_x();
        let mut next: Vec<ExactMatrix> = gammas.iter().map(|g| g.kron(&sx)).collect();
        next.push(id.kron(&pauli::sigma_z()));
        next.push(id.kron(&pauli::sigma_y()));
        gammas = next;
    }
    let i = GaussianRational::i();
    for g in gammas.iter_mut().skip(p as usize) {
        *g = g.scale(&i);
    }
    Ok(CliffordRep { p, q, gammas })
}

/// The volume element `Θ = Γ¹Γ²⋯Γⁿ`.
pub fn volume_element(rep: &CliffordRep) -> ExactMatrix {
    let all: Vec<usize> = (0..rep.n() as usize).collect();
    rep.gamma_product(&all)
}

/// The chirality `Ω`: `Θ` for `σ ∈ {0, 4}` and `iΘ` for `σ ∈ {2, 6}`.
///
/// In both cases `Ω` is hermitian, squares to the identity and anticommutes
/// with every generator.
pub fn chirality(rep: &CliffordRep) -> ExactMatrix {
    let theta = volume_element(rep);
    match rep.sigma() {
        0 | 4 => theta,
        _ => theta.scale(&GaussianRational::i()),
    }
}

/// Gamma-index subsets in lexicographic order of their sorted index lists,
/// starting with the empty subset.
fn lex_subsets(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, start: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for a in start..n {
            prefix.push(a);
            extend(prefix, a + 1, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << n);
    extend(&mut Vec::new(), 0, n, &mut out);
    out
}

/// Finds an antiunitary `J = K·conj` commuting with every generator.
///
/// The search runs over `c·Γ_S` for `S` in lexicographic subset order and
/// `c ∈ {1, i}`, returning the first `K` with `K·conj(Γᵃ) = Γᵃ·K` for all `a`.
/// `J² = K·conj(K)` is then `ε·1`.
pub fn find_real_structure(rep: &CliffordRep) -> Result<Antiunitary, CliffordError> {
    let conj_gammas: Vec<ExactMatrix> = rep.gammas.iter().map(ExactMatrix::conj).collect();
    let scalars = [GaussianRational::one(), GaussianRational::i()];
    for subset in lex_subsets(rep.n() as usize) {
        let product = rep.gamma_product(&subset);
        for c in &scalars {
            let k = product.scale(c);
            let commutes = rep
                .gammas
                .iter()
                .zip(&conj_gammas)
                .all(|(g, cg)| &k * cg == g * &k);
            if commutes {
                return Antiunitary::new(k)
                    .map_err(|_| CliffordError::RealStructureNotFound { p: rep.p, q: rep.q });
            }
        }
    }
    Err(CliffordError::RealStructureNotFound { p: rep.p, q: rep.q })
}

/// The division-algebra part of a Clifford algebra's isomorphism type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum AlgebraBase {
    R,
    C,
    H,
    /// `R ⊕ R`
    RR,
    /// `H ⊕ H`
    HH,
}

impl AlgebraBase {
    /// Base from `σ mod 8` (Bott periodicity).
    pub fn from_signature(sigma: u8) -> Self {
        match sigma % 8 {
            0 | 2 => Self::R,
            1 => Self::RR,
            3 | 7 => Self::C,
            4 | 6 => Self::H,
            _ => Self::HH,
        }
    }

    fn field_dim(self) -> u64 {
        match self {
            Self::R | Self::RR => 1,
            Self::C => 2,
            Self::H | Self::HH => 4,
        }
    }

    fn summands(self) -> u64 {
        match self {
            Self::RR | Self::HH => 2,
            _ => 1,
        }
    }

    fn field_symbol(self) -> &'static str {
        match self {
            Self::R | Self::RR => "R",
            Self::C => "C",
            Self::H | Self::HH => "H",
        }
    }
}

/// Isomorphism type `M_k(F)` or `M_k(F) ⊕ M_k(F)` of a Clifford algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AlgebraClass {
    pub base: AlgebraBase,
    pub matrix_size: u64,
    /// Unitary group of the algebra, e.g. `O(2)` or `Sp(1)≅SU(2)`.
    pub unitary_group_label: String,
    /// Identity component, recorded for orthogonal groups (`SO(2)≅U(1)` for `O(2)`).
    pub identity_component: Option<String>,
}

impl AlgebraClass {
    pub fn real_dimension(&self) -> u64 {
        self.base.field_dim() * self.matrix_size * self.matrix_size * self.base.summands()
    }
}

fn subscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = if self.matrix_size == 1 {
            self.base.field_symbol().to_string()
        } else {
            format!("M{}({})", subscript(self.matrix_size), self.base.field_symbol())
        };
        if self.base.summands() == 2 {
            write!(f, "{block}⊕{block}")
        } else {
            write!(f, "{block}")
        }
    }
}

/// Table-driven classification of `Cl(p,q)`, valid for any `(p,q)`.
pub fn classify_algebra(p: u32, q: u32) -> AlgebraClass {
    let base = AlgebraBase::from_signature(signature(p, q));
    let total = 1u64 << (p + q);
    let per_block = base.field_dim() * base.summands();
    let k = (total / per_block).isqrt();
    debug_assert_eq!(k * k * per_block, total);

    let single = |k: u64| match base {
        AlgebraBase::R | AlgebraBase::RR => format!("O({k})"),
        AlgebraBase::C => format!("U({k})"),
        AlgebraBase::H | AlgebraBase::HH => format!("Sp({k})"),
    };
    let mut label = single(k);
    if base.summands() == 2 {
        label = format!("{label}×{label}");
    }
    if k == 1 && matches!(base, AlgebraBase::H | AlgebraBase::HH) {
        label.push_str(if base == AlgebraBase::H { "≅SU(2)" } else { "≅SU(2)×SU(2)" });
    }
    let identity_component = match base {
        AlgebraBase::R | AlgebraBase::RR => Some(match k {
            2 => "SO(2)≅U(1)".to_string(),
            _ => format!("SO({k})"),
        }),
        _ => None,
    };
    AlgebraClass { base, matrix_size: k, unitary_group_label: label, identity_component }
}
