//! NP-hardness reductions and non-assignable families.

mod cnf3;
mod families;
mod reduce;

pub use cnf3::ThreeCnf;
pub use families::{gen_min_outcome_nonassignable, sequence_fixture};
pub use reduce::{
    check_deletion_property, decode, gadget_block, rebuild, reduce_full4, reduce_partial3, Gadget,
    GadgetBlock, GadgetType, Layout, Mode, Occurrence, ReductionArtifact,
};
