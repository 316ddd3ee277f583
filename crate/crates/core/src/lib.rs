//! Exact symbolic computation in `O_* = ⊕_{n ≥ 1} O_n`, the direct sum of all
//! Cuntz algebras, with its comultiplication
//! `Δ(x) = Σ_{ml = n} φ_{m,l}(x)` and counit.
//!
//! Elements live in the dense *-subalgebra spanned by the monomials
//! `s_μ s_ν^*` with finitely many nonzero components, over the Gaussian
//! rationals. On top of that the crate classifies the summands
//! `O_*(S) = ⊕_{n ∈ S} O_n` that are subbialgebras or biideals through the
//! factorial submonoids and prime ideals of `(N, ·)`.

pub mod algebra;
pub mod bialgebra;
pub mod classifier;
pub mod cli;
mod error;
pub mod expr;
pub mod monoid;
pub mod random;
pub mod scalar;
pub mod serial;
pub mod suite;

pub use algebra::{reduce_word, AlgebraElement, CuntzMonomial, Index, RawWord};
pub use bialgebra::{counit, delta, delta_h, phi, Tensor, TensorElement, TripleTensorElement};
pub use error::{Error, Result};
pub use monoid::{PrimeSet, SubmonoidView, SubsetWindow};
pub use scalar::Scalar;
