//! Operator residuation on finite posets.
//!
//! On a finite poset the conjunction `⊙` and implication `→` of an algebraic
//! logic can be defined as *sets* of elements built from the cone operators
//! `L`, `U` and the extremal operators `Max`, `Min`. This crate constructs
//! those operations for four families of posets, checks the LU-identities
//! each construction requires, and verifies left adjointness
//! `x ⊙ y <= z  <=>  x <= y → z` by exhaustive search.
//!
//! ```
//! use poset_residuation::{build_tables, verify_left_adjointness, Poset, Variant};
//!
//! let p = Poset::from_covers(
//!     &["0", "a", "b", "c", "d", "1"],
//!     &[("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
//!       ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
//! ).unwrap();
//! let (odot, arrow) = build_tables(&p, None, Variant::Rp, true).unwrap();
//! let c = p.index_of("c").unwrap();
//! let d = p.index_of("d").unwrap();
//! assert_eq!(p.labels(odot.get(c, d)), ["a", "b"]);
//! assert!(verify_left_adjointness(&p, &odot, &arrow).unwrap().holds);
//! ```

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod poset;
pub mod properties;
pub mod residuation;
pub mod set;

pub use enumerate::{
    canonical_form, corollary_sweep, enumerate_posets, enumerate_unary_ops, sweep, Premise,
    SweepReport, UnaryConstraint,
};
pub use error::{Error, Result};
pub use io::{parse_poset_file, render_table, PosetDocument, TableFormat};
pub use poset::{Extremum, Poset};
pub use properties::{
    check_unary, full_report, is_boolean, is_distributive, is_modular,
    is_relatively_pseudocomplemented, is_strongly_modular, relative_pseudocomplement,
    th1_premises, th3_premises, PropertyReport, UnaryOp, Verdict, Witness,
};
pub use residuation::{
    arrow, build_tables, odot, verify_identity_suite, verify_left_adjointness,
    AdjointnessCounterexample, AdjointnessVerdict, OpKind, SetValuedTable, Variant,
};
pub use set::ElementSet;
