//! Polyadic integer rings `Z_(m,n)^[a,b]`, their finite secondary-class
//! rings, and exhaustive classification of the finite polyadic fields.

pub mod arithmetic;
pub mod cli;
pub mod error;
pub mod finite_ring;
pub mod group_analysis;
pub mod oracle;
pub mod ring_core;
pub mod tables;

pub use error::{Error, Result};
pub use finite_ring::{FiniteRing, StructureReport};
pub use ring_core::{PolyInt, RingDescriptor};
