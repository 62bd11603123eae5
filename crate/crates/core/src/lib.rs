//! Exact real Clifford algebras and finite real spectral triples.
//!
//! `ko-triples` builds explicit gamma matrices for `Cl(p,q)`, finds their
//! real structures, measures the sign triple `(ε, ε′, ε″)` of a finite real
//! spectral triple, and checks how those signs (and so the KO-dimension)
//! behave under the two tensor-product constructions of real spectral triples.
//! Every number is a Gaussian rational, so all identities are checked exactly.
//!
//! ```
//! use ko_triples::products::{representative, verify_product, ProductMode};
//!
//! // A Euclidean four-dimensional factor times a signature-2 finite factor.
//! let v = verify_product(&representative(4, 0), &representative(2, 0), ProductMode::Natural)?;
//! assert_eq!(v.product_sigma, Some(6));
//! assert!(v.consistent());
//! # Ok::<(), ko_triples::products::ProductError>(())
//! ```
//!
//! The `book/` directory next to this crate walks through the constructions;
//! its code samples are compiled and run as doctests of this crate.

pub mod clifford;
pub mod io;
pub mod linalg;
pub mod products;
pub mod signcalc;
pub mod triple;

pub use clifford::{build_gammas, classify_algebra, signature, CliffordRep};
pub use linalg::{Antiunitary, ExactMatrix, GaussianRational};
pub use triple::{canonical_triple, DiracMode, FiniteSpectralTriple, Sign, SignTriple};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/clifford.md")]
    mod clifford {}
    #[doc = include_str!("../../../book/src/real-structures.md")]
    mod real_structures {}
    #[doc = include_str!("../../../book/src/triples.md")]
    mod triples {}
    #[doc = include_str!("../../../book/src/products.md")]
    mod products {}
    #[doc = include_str!("../../../book/src/sign-calculus.md")]
    mod sign_calculus {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
}
