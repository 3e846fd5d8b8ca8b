//! Runs the code in the guide under `book/` as doctests, since mdbook cannot
//! resolve crate dependencies on its own. One module per chapter so a
//! failure points at its chapter.

#[doc = include_str!("../../../book/src/index.md")]
pub mod index {}
#[doc = include_str!("../../../book/src/theories.md")]
pub mod theories {}
#[doc = include_str!("../../../book/src/stable.md")]
pub mod stable {}
#[doc = include_str!("../../../book/src/translation.md")]
pub mod translation {}
#[doc = include_str!("../../../book/src/grounding.md")]
pub mod grounding {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
