//! Elements of the dense *-subalgebra of each Cuntz algebra `O_n` and of
//! their direct sum, with reduction, level expansion, and exact equality.

pub(crate) mod graded;
mod element;
mod monomial;
mod word;

pub use element::AlgebraElement;
pub use monomial::{CuntzMonomial, Index};
pub use word::{reduce_word, RawWord};
