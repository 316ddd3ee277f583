//! The comultiplication of `O_*` assembled from the embeddings `φ_{n,m}`,
//! the counit, submonoid-restricted coproducts, and axiom checks.

mod checks;
mod coproduct;
mod tensor;

pub use checks::{
    check_coassociativity, check_coassociativity_h, check_coassociativity_with, check_counit_laws,
    check_counit_laws_with, check_hom_property, check_hom_property_with, check_wcs_axiom,
    coassociativity_sides_with, wcs_sides,
};
pub use coproduct::{
    counit, counit_contract_left, counit_contract_right, delta, delta_h, lift_left, lift_right, phi,
    phi_monomial, split_letter,
};
pub use tensor::{Tensor, TensorElement, TensorMonomial, TripleTensorElement};
