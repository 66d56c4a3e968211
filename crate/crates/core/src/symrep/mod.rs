//! Characters and branching for symmetric groups.

mod character;
mod cyclic;
mod lr;
mod partition;
mod relations;
pub mod wedge;
mod wreath;

pub use character::{character, character_value, class_size, cycle_type, inner_product, CharacterVector};
pub use cyclic::{cyclic_multiplicity, ramanujan_sum};
pub use lr::{lr_coefficient, lr_restrict};
pub use partition::{partitions, Partition};
pub use relations::{
    column_of, mask_of_column, relation_span, relation_span_character, relation_span_dimension, relation_vector,
};
pub use wreath::{
    enumerate_wreath, full_restriction_multiplicity, wreath_class_table, wreath_hook_multiplicity, WreathElement,
};
