//! Benchmark inputs shared by the criterion targets.

use arrowkit_core::gadgets::{build_product, schedule_params, BlockGraph, ProductMode};
use arrowkit_core::{ArrowOptions, Graph};

/// The `k = 4, t = 3` product over `C5` with five `C5` blocks.
pub fn reduced_product() -> BlockGraph {
    let params = schedule_params(4, 3, 4, &[5; 5]).expect("valid schedule");
    let fs = vec![Graph::cycle(5); 5];
    build_product(
        &params,
        &Graph::cycle(5),
        &fs,
        ProductMode::Relaxed,
        &ArrowOptions::default(),
    )
    .expect("valid product")
}
