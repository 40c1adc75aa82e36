//! Spectral toolkit for leaky quantum wires.

pub mod linalg;
