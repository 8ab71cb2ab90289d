//! Finite solvable permutation groups, exact character tables, saturated
//! formations and the head characters (𝔉′-characters) attached to a formation
//! projector.
//!
//! ```
//! use formata::{catalog, formation::Formation, head};
//!
//! let s4 = catalog::group("S4").unwrap();
//! let chars = head::fprime_ascending(&s4, &Formation::Nilpotent).unwrap();
//! let mut degrees: Vec<i64> = chars.iter().map(|c| c.degree()).collect();
//! degrees.sort();
//! assert_eq!(degrees, vec![1, 1, 3, 3]);
//! ```

pub mod bsgs;
pub mod cache;
pub mod catalog;
pub mod character;
pub mod classes;
pub mod config;
pub mod cyclotomic;
pub mod error;
pub mod formation;
pub mod group;
pub mod groupfile;
pub mod head;
pub mod hom;
pub mod lattice;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod perm;

pub use character::{table::CharacterTable, ClassFunction};
pub use classes::{ClassInfo, ConjClass};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use formation::Formation;
pub use group::PermGroup;
pub use hom::GroupMap;
pub use perm::Perm;
