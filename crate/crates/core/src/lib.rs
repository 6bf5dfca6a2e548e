//! Finite groups given by multiplication tables, m-Cayley graphs over them,
//! exact automorphism groups, and constructions of m-Haar graphical
//! representations (m-HGRs) and m-PGSRs.
//!
//! Elements of a group of order `n` are the indices `0..n`, with `0` the
//! identity. Parts of an m-Cayley graph are indexed `0..m` in this crate.

#![no_std]

extern crate alloc;

pub mod aut;
pub mod catalog;
pub mod construct;
pub mod elemset;
pub mod error;
pub mod graph;
pub mod group;
pub mod lift;
pub mod mcayley;
pub mod perm;
pub mod search;

pub use aut::{automorphisms, automorphisms_with, brute_force_aut_order, verify_matrix, AutOptions, AutResult, Verdict};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{Descriptor, GeneratingSet, Group, G0};
pub use mcayley::{ConnectionMatrix, HaarViolation, LabeledGraph};
