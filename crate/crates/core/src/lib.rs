//! Finite semigroups, identity and zero adjunction, and the lexicographic
//! order that falls out of iterating them.
//!
//! Starting from the one-element semigroup `{s0}` and repeatedly adjoining a
//! fresh identity produces the chain `s0 < s1 < ...` under `a*b = min(a,b)`.
//! Doing this in lex order over a box of index tuples reproduces ℕ₀ⁿ with
//! the lexicographic order; adding zeros below and replacing each point of
//! the resulting chain by a copy of a chain gives ℤⁿ. Everything here is
//! finite: the infinite unions are represented by explicit truncation
//! boxes, and every claim is checked exhaustively on those boxes.
//!
//! ```
//! use semilex::{build_tn, verify_lex_correspondence, CarrierLimit};
//!
//! let t = build_tn(2, 3, CarrierLimit::default()).unwrap();
//! let report = verify_lex_correspondence(&t);
//! assert!(report.is_pass());
//! assert_eq!(report.pairs_checked, 81);
//! ```

mod check;
pub mod cli;
mod error;
pub mod exec;
pub mod formats;
pub mod iterated;
pub mod lex;
pub mod order;
pub mod semigroup;

pub use check::Check;
pub use error::{Error, Result};
pub use exec::Exec;
pub use iterated::{
    build_t1, build_tn, build_v1, build_vn, direct_lex_semigroup, index_label, lex_box_order,
    parse_index_label, verify_lex_correspondence, IndexedSemigroup, LexReport, LexViolation,
};
pub use lex::{check_monomial_order_sample, lex_compare, lex_min, tuple_add, IntTuple};
pub use order::{
    check_b_axioms, check_partial_order, check_total_order, max_semigroup, min_semigroup,
    order_from_semigroup, replace_elements, OrderedFamily, TotalOrder,
};
pub use semigroup::{
    adjoin_identity, adjoin_zero, check_abelian, check_associative, equal_under_relabeling,
    find_identity, find_zero, CarrierLimit, Element, FiniteSemigroup, DEFAULT_MAX_ELEMENTS,
};
