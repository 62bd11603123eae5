//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ko_triples::linalg::{Antiunitary, ExactMatrix, GaussianRational};
use ko_triples::triple::FiniteSpectralTriple;

type RealMatrix = Vec<Vec<BigRational>>;

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `v = x + iy ↦ K·conj(v)` written as a real `2d × 2d` matrix acting on `(x, y)`.
fn antilinear_as_real(k: &ExactMatrix) -> RealMatrix {
    let d = k.rows();
    let mut m = vec![vec![BigRational::zero(); 2 * d]; 2 * d];
    for r in 0..d {
        for c in 0..d {
            let e = k.get(r, c);
            // (A + iB)(x − iy) = (Ax + By) + i(Bx − Ay)
            m[r][c] = e.re.clone();
            m[r][d + c] = e.im.clone();
            m[d + r][c] = e.im.clone();
            m[d + r][d + c] = -e.re.clone();
        }
    }
    m
}

/// A complex linear map `C + iE` as a real matrix on `(x, y)`.
fn linear_as_real(a: &ExactMatrix) -> RealMatrix {
    let d = a.rows();
    let mut m = vec![vec![BigRational::zero(); 2 * d]; 2 * d];
    for r in 0..d {
        for c in 0..d {
            let e = a.get(r, c);
            m[r][c] = e.re.clone();
            m[r][d + c] = -e.im.clone();
            m[d + r][c] = e.im.clone();
            m[d + r][d + c] = e.re.clone();
        }
    }
    m
}

/// `½(1 + M)`, the projection onto the `+1` eigenspace of a real involution `M`.
fn plus_projection(m: &RealMatrix) -> RealMatrix {
    let h = half();
    m.iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, x)| {
                    let diag = if r == c { BigRational::one() } else { BigRational::zero() };
                    (diag + x) * &h
                })
                .collect()
        })
        .collect()
}

fn trace_of_product(a: &RealMatrix, b: &RealMatrix) -> BigRational {
    let mut t = BigRational::zero();
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() && !b[j][i].is_zero() {
                t += x * &b[j][i];
            }
        }
    }
    t
}

fn as_usize(r: BigRational) -> usize {
    assert!(r.is_integer(), "trace of a projection must be an integer, got {r}");
    r.to_integer().try_into().expect("small non-negative dimension")
}

/// Real dimensions of `{Jv = v}` and `{Jv = v, Ωv = v}` as traces of real projections.
///
/// Valid when `J² = 1`, `Ω² = 1` and `J`, `Ω` commute, which makes the two
/// projections commute and their product the projection onto the intersection.
pub fn projection_dims(t: &FiniteSpectralTriple) -> (usize, usize) {
    let d = t.dim();
    let pj = plus_projection(&antilinear_as_real(t.real_structure().k()));
    let po = plus_projection(&linear_as_real(t.chirality().expect("even triple")));
    let id = plus_projection(&linear_as_real(&ExactMatrix::identity(d)));
    (as_usize(trace_of_product(&pj, &id)), as_usize(trace_of_product(&pj, &po)))
}

/// A unitary `P·diag(phases)` with phases in `{1, i, −1, −i}`.
pub fn monomial_unitary(perm: &[usize], phases: &[u8]) -> ExactMatrix {
    let n = perm.len();
    let phase = |k: u8| match k % 4 {
        0 => GaussianRational::from_int(1),
        1 => GaussianRational::i(),
        2 => GaussianRational::from_int(-1),
        _ => -GaussianRational::i(),
    };
    let mut entries = vec![GaussianRational::zero(); n * n];
    for (c, &r) in perm.iter().enumerate() {
        entries[r * n + c] = phase(phases[c]);
    }
    ExactMatrix::from_entries(n, n, entries).expect("square")
}

/// The same triple in the basis `v ↦ Uv`: `X ↦ UXU†` and `K ↦ U·K·Uᵀ`.
pub fn change_basis(t: &FiniteSpectralTriple, u: &ExactMatrix) -> FiniteSpectralTriple {
    let ud = u.dagger();
    let conj = |x: &ExactMatrix| &(u * x) * &ud;
    let k = &(u * t.real_structure().k()) * &u.transpose();
    FiniteSpectralTriple::new(
        conj(t.dirac()),
        t.chirality().map(conj),
        Antiunitary::new(k).expect("unitary"),
        t.algebra_gens().iter().map(conj).collect(),
    )
    .expect("shapes preserved")
}
