//! Computable countable linear orders and executable order isomorphisms.
//!
//! The crate is organized around four layers:
//!
//! * [`order`] — a closed algebra of order constructors ([`OrderDescriptor`])
//!   together with concrete points ([`Element`]), exact comparison,
//!   deterministic enumeration, endpoint/density metadata, and witness
//!   operations (density, unboundedness, colored density).
//! * [`epseq`] — eventually periodic points of `A^ω` in canonical
//!   (prefix, period) form, with lexicographic comparison, shifts, prepends,
//!   and complete deciders for tail-equivalence and its mod-`n` refinements.
//! * [`automorph`] — standard maps on intervals `[r̄, s̄]` of `A^ω` and the
//!   cover-based assembly of parity-reversing and `n`-revolving
//!   automorphisms, with a randomized verification harness.
//! * [`isobuild`] — executable isomorphisms: flattening maps, replacement
//!   lifting, back-and-forth for (colored) dense orders, Schroeder–Bernstein
//!   chases, square-limit power isomorphisms, and left/right decomposition
//!   procedures.

pub mod automorph;
pub mod epseq;
mod error;
pub mod isobuild;
pub mod order;
pub mod sampling;
pub mod selftest;

pub use error::{Error, Result};
pub use order::{
    Card, ColorConstraint, Element, EndKind, Letter, Order, OrderDescriptor, OrderMeta, Side,
    SqTuple, WitnessKind,
};

pub use epseq::{EpSeq, EquivWitness};
