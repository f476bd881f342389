//! Exact-arithmetic combinatorics of lattice-path hump statistics and
//! hook-restricted standard Young tableaux.
//!
//! The crate computes, entirely in arbitrary-precision integers:
//!
//! - [`combinat`] — factorials, binomials, Catalan and Motzkin numbers;
//! - [`partitions`] — partitions in a hook constraint, tableau counts by the
//!   hook-length formula and by brute force, and the strip/hook-sum closed
//!   forms;
//! - [`paths`] — streaming enumeration of Dyck, Motzkin, super, and
//!   double-Dyck paths with the hump statistic;
//! - [`formulas`] — closed forms and recurrences for hump totals and
//!   super-path counts;
//! - [`verify`] — a registry of every identity relating the above, each
//!   checkable exactly over a range.
//!
//! Every quantity is reachable by at least two independent routes (closed
//! form, recurrence, exhaustive enumeration, or tableau sum), and the
//! `verify` registry cross-checks them all with big-integer equality.

pub mod combinat;
pub mod formulas;
pub mod partitions;
pub mod paths;
pub mod verify;

pub use combinat::Nat;
pub use partitions::{HookConstraint, Partition, PartitionsError, Tableau};
pub use paths::{EnumCaps, FamilyKind, LatticePath, PathFamily, PathsError, Step};
pub use verify::{Failure, Identity, IdentityReport, RouteClass, VerifyError};
