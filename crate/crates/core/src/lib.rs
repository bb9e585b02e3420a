//! Simple-path structural encodings for graph transformers.
//!
//! The crate counts simple paths between all node pairs, either exactly (by
//! enumeration, for small graphs) or approximately by orienting the graph
//! into many DAGs and taking powers of their adjacency matrices. Counts are
//! compressed with `f(x) = alpha * ln^n(1 + x) + beta` for use as edge
//! encodings, next to the random-walk baseline `P_1 .. P_K`.
//!
//! ```
//! use spse::{count_paths, exact_path_counts, generate, CountConfig};
//!
//! let hexagon = generate::cycle(6).unwrap();
//! let cfg = CountConfig { k_max: 6, dfs_depth: 2, trials: 8, ..CountConfig::default() };
//! let approx = count_paths(&hexagon, &cfg).unwrap().tensor;
//! assert_eq!(approx.series(0, 1), &[1, 0, 0, 0, 1, 0]);
//! assert_eq!(approx, exact_path_counts(&hexagon, 6).unwrap());
//! ```
//!
//! Runnable examples live in `examples/`; `cargo run --example` lists them.

pub mod cli;
pub mod counter;
pub mod decompose;
pub mod encoding;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod orientation;
pub mod rng;
pub mod sweep;
pub mod synth;
pub mod tensor;
pub mod tensor_file;
pub mod verify;

pub use counter::{count_paths, discovery_ratio, merge_counts, CountConfig, CountReport};
pub use decompose::{dag_decompose, PartialBfs};
pub use encoding::{encode_rwse, encode_spse, preset, EncodingParams, Preset};
pub use error::{Error, Result};
pub use graph::{dag_orient, DirectedGraph, Graph, NodeOrdering};
pub use oracle::{cycles_through_edge, exact_path_counts, pair_equivalent, random_walk_tensor, Equivalence};
pub use synth::{generate_dataset, verify_labels, LabeledGraph, SynthParams};
pub use tensor::{EncodedTensor, PathCountTensor, RwTensor, Tensor3};
