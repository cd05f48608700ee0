//! Exact enumeration and asymptotics for Dyck paths whose peaks are
//! restricted to level 1 or even levels.
//!
//! The restricted paths of semilength `n` are counted by the Motzkin
//! number `M_n`, and the crate develops that fact along two independent
//! routes that check each other everywhere they meet:
//!
//! * a brute-force side ([`paths`], [`tree`], [`oracle`]) that enumerates
//!   the paths outright and tallies statistics, and
//! * an analytic side ([`series`], [`bivar`], [`gf`], [`asym`]) built on
//!   truncated power series over exact rationals: generating functions for
//!   the class and its height and leaf statistics, closed forms, and
//!   floating-point asymptotics.
//!
//! The [`verify`] module wires both sides together into a self-check suite;
//! the `retakh` command-line tool in the companion crate exposes the same
//! machinery as subcommands.

pub mod asym;
pub mod bivar;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod paths;
pub mod series;
pub mod tree;
pub mod verify;

pub use asym::AsymptoticComparison;
pub use num::BigInt;
pub use bivar::{BivarSeries, UPoly};
pub use error::Error;
pub use gf::height::HeightReport;
pub use gf::leaves::LeafReport;
pub use paths::{DyckPath, PathStats, Step};
pub use series::{Rat, Series};
pub use tree::PlaneTree;
pub use verify::{Check, Fault, Level};
