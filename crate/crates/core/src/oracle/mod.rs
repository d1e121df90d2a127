//! Ground truth for small inputs and graph generators.

mod exact;
mod generate;

pub use exact::{
    exact_queue_number, exact_queue_number_with_ordering, exact_treewidth, QUEUE_NUMBER_LIMIT, TREEWIDTH_LIMIT,
};
pub use generate::{
    fan, generate, random_tree, random_triangulation, sample_fan_partitions, tightness, FanSample,
    GeneratorKind, GeneratorSpec, MAX_VERTICES,
};
