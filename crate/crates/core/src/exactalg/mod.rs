//! Exact arithmetic: base contexts, homomorphisms, and matrices.

pub mod frac;
pub mod hom;
pub mod integers;
pub mod intmat;
pub mod matrix;
pub mod poly;
pub mod ring;

pub use frac::{Frac, Fraction, FractionBase};
pub use hom::{apply_hom, Compose, Hom, Identity, ModToMod, ReduceMod, Specialize};
pub use integers::{parse_bigint, Integers, IntegersMod};
pub use intmat::{IntMatrix, Snf};
pub use matrix::Mat;
pub use poly::{Mono, Poly, PolyRing};
pub use ring::{ContextDescriptor, Ring};
