//! Finite skew braces: validation, structure theory and enumeration.
//!
//! A skew brace is a set carrying two group operations `+` and `∘` with a
//! shared identity, linked by the skew distributive law
//! `a∘(b+c) = a∘b − a + a∘c`. This crate provides:
//!
//! - validated finite groups and skew braces on explicit operation tables;
//! - the λ and ★ operations, ideal lattices, socle/annihilator machinery,
//!   every classical nilpotency and solubility series, and π-nilpotency;
//! - the design group `(B,+) ⋊ (B,∘)` and its transfer properties;
//! - exhaustive enumeration of skew braces of small order with an
//!   independent brute-force oracle;
//! - derived set-theoretic Yang–Baxter solutions and their verification;
//! - a theorem harness running structural checks over enumerated catalogs,
//!   exposed through the `skb` command-line tool.

pub mod brace;
pub mod catalog;
pub mod checks;
pub mod cli;
pub mod design;
pub mod enumerate;
pub mod group;
pub mod ideal;
pub mod report;
pub mod sample;
pub mod series;
pub mod set;
pub mod ybe;

pub use brace::{BraceError, BraceFlags, CoreSubsets, SkewBrace};
pub use group::{FiniteGroup, GroupError, GroupSeries, GroupSeriesKind};
pub use ideal::{FixatorVariant, GenKind, IdealError, IdealFlags, MinimalIdealData, StronglyPrimeReport};
pub use series::{
    AscendingKind, DescendingKind, MixedKind, NilpotencyProfile, PiProfile, SeriesError, SeriesKind,
    SeriesReport, SolubilityProfile,
};
pub use set::ElemSet;
