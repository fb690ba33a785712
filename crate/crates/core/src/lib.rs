pub mod affine;
pub mod arith;
pub mod canonical;
pub mod classify;
pub mod cli;
pub mod config;
pub mod document;
pub mod empty_tetra;
pub mod equivalence;
pub mod error;
pub mod hnf;
pub mod hull;
pub mod invariants;
pub mod minimality;
pub mod plane;
pub mod point;
pub mod volume;
pub mod width;
