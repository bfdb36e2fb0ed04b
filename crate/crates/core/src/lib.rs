//! Exact computations with Steinberg groups of simply-laced root systems.
pub mod cli;
pub mod error;
pub mod milnor;
pub mod patching;
pub mod rep;
pub mod ring;
pub mod roots;
pub mod selftest;
pub mod simplicial;
pub mod words;

pub use error::{Error, Result};
pub use rep::{GroupMatrix, RepKind, Representation};
pub use ring::{Ideal, Ring, RingElement, RingHom};
pub use roots::{Root, RootSystem, RootSystemType};
pub use words::{Letter, SteinbergWord, SymbolWord};
