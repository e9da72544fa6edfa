//! Combinatorics of nilpotent orbits of `GL(n)` and their local systems.
//!
//! - [`partitions`]: partitions, dual partitions and the Levi data attached to an orbit.
//! - [`weights`]: the dominant weights `ω_p` attached to the local systems `det^{p/c}`.
//! - [`component_groups`]: Lusztig's canonical quotient in classical types, as subsets of `M`.
//! - [`intervals`]: B-stable subspaces of the nilradical encoded by intervals, the basic
//!   move, its two macro-expansions, and a scripted certificate taking every `n_{d,p}`
//!   to one `p`-independent subspace.
//! - [`euler`]: Euler characteristics of `S^j(U^*)` on `G/B` via the Weyl character
//!   formula, used as an independent check on every move.

pub mod component_groups;
pub mod error;
pub mod euler;
pub mod intervals;
pub mod partitions;
pub mod weights;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use weights::DominantWeight;
