//! Exact computation of Alexander polynomials and twisted Alexander
//! polynomials of links in lens spaces, from mixed link diagrams.
//!
//! The pipeline: a [`diagram::MixedDiagram`] in normal position with respect
//! to the surgery unknot yields a group [`presentation::Presentation`] of the
//! link complement, whose Fox matrix is analysed over exact Laurent
//! polynomial rings ([`algebra`]) to extract elementary-ideal gcds
//! ([`alexander`]) and first homology ([`homology`]).

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod alexander;
pub mod corpus;
pub mod diagram;
pub mod freegroup;
pub mod homology;
pub mod matrix;
pub mod presentation;
