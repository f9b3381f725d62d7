pub mod blocker;
pub mod classes;
pub mod domination;
pub mod error;
pub mod graph;
pub mod reductions;
pub mod verify;

pub use error::{Error, Result};

/// The guide's chapters, compiled so their snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/domination.md")]
    mod domination {}
    #[doc = include_str!("../../../book/src/contraction.md")]
    mod contraction {}
    #[doc = include_str!("../../../book/src/gadgets.md")]
    mod gadgets {}
    #[doc = include_str!("../../../book/src/forbidden.md")]
    mod forbidden {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
