//! Rigged-configuration models of the crystals `B(∞)` and `B(λ)` for
//! symmetrizable Borcherds (generalized Kac–Moody) algebras.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`cartan`]: validated Borcherds–Cartan data and root/weight arithmetic,
//! * [`rigged`]: rigged configurations with the crystal operators `e_a, f_a`,
//!   the ⋆-crystal operators `e_a^⋆, f_a^⋆`, their statistics and the
//!   ⋆-involution,
//! * [`crystal`]: a generic abstract-crystal interface, the elementary crystals
//!   `T_λ`, `C`, `N_(a)`, the tensor product rule and the embedding `Ψ_a`,
//! * [`highest_weight`]: the highest-weight crystal `RC(λ)` and its two
//!   characterizations,
//! * [`imaginary`]: `a`-strings, balanced rigged configurations and the
//!   right-angled Artin monoid in the purely imaginary case,
//! * [`graph`] and [`checks`]: crystal-graph generation and exhaustive
//!   checkers for the crystal axioms and the recognition conditions.
//!
//! ```
//! use borcherds_rc::cartan::BorcherdsCartanDatum;
//! use borcherds_rc::rigged::RiggedConfiguration;
//!
//! let datum = BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap();
//! let (one, two) = (datum.index("1").unwrap(), datum.index("2").unwrap());
//! let mut rc = RiggedConfiguration::empty(&datum);
//! for a in [two, one, one, one] {
//!     rc = rc.f(&datum, a);
//! }
//! assert_eq!(rc.part(one).riggings().collect::<Vec<_>>(), vec![5, 3, 1]);
//! assert_eq!(rc.vacancy(&datum, one, 1), 7);
//! ```

#![no_std]

extern crate alloc;

pub mod cartan;
pub mod checks;
pub mod crystal;
pub mod extended;
pub mod graph;
pub mod highest_weight;
pub mod imaginary;
pub mod rigged;

pub use cartan::{BorcherdsCartanDatum, CartanError, DominantWeight, Index, IndexKind, RootWeight, Weight};
pub use extended::ExtendedInt;
pub use rigged::{RiggedConfiguration, RiggedPartition, Row};
