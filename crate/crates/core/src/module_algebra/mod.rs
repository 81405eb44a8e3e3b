//! Finitely generated modules over `Γ` and their presentations.

mod matrix;
mod snf;
mod torsion;

pub use matrix::GammaMatrix;
pub use snf::{smith_normal_form, SmithForm};
pub use torsion::{
    associated_polynomial, cyclic_of, direct_sum, is_type_k, module_from_presentation, primary_decomposition,
    q_dimension, tensor_product, torsion_product, InvariantForm, TorsionModule,
};
