//! Finite subgroups of `SL(n, ℚ(ζ_N))`: enumeration, conjugacy classes and
//! character tables.

mod chartable;
mod element;
mod group;

pub use chartable::{character_table, class_function_product, natural_character, CharacterTable};
pub use element::GroupElement;
pub use group::{generate_group, ConjugacyClasses, MatrixGroup};

#[cfg(test)]
mod tests;
