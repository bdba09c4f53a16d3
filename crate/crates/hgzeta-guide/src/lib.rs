//! The chapters of the `hgzeta` guide (the mdBook under `book/`), included
//! as doc-comments so that `cargo test` compiles and runs every Rust code
//! sample in the book. This keeps the book and the library in sync: a
//! breaking API change fails these doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/family.md")]
pub mod family {}

#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}

#[doc = include_str!("../../../book/src/hypergeometric.md")]
pub mod hypergeometric {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/zeta.md")]
pub mod zeta {}

#[doc = include_str!("../../../book/src/unit-roots.md")]
pub mod unit_roots {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
