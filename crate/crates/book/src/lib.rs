//! Compiles and runs the code samples of the guide as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/monodromy-data.md")]
pub mod monodromy_data {}

#[doc = include_str!("../../../book/src/moves.md")]
pub mod moves {}

#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants {}

#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}

#[doc = include_str!("../../../book/src/embeddability.md")]
pub mod embeddability {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
