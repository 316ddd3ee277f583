//! The multiplicative monoid `(N, ·)`, generated submonoids `[F]`, and
//! windowed semigroup predicates over generic monoids.

mod arith;
mod prime_set;
mod window;

pub use arith::{divisor_pairs, is_prime, prime_factorize, primes_up_to};
pub use prime_set::{submonoid_member, ComponentSet, PrimeSet, SubmonoidView};
pub use window::{
    complement_duality_check, factor_pairs, Check, DualityEntry, DualityReport, FreeMonoid, MonoidSpec,
    MonoidWindow, NaturalMul, SubsetWindow, Witness,
};
