//! Exact computer algebra for R. Thompson's group F.
//!
//! The crate computes with three layers of objects, always exactly (no
//! floating point anywhere):
//!
//! * normal forms in the positive monoid `<x0, x1, ... | x_j x_i = x_i x_(j+1), i < j>`
//!   and in its group of fractions F, including least common multiples and
//!   positive translation of finite subsets;
//! * the monoid ring over exact rationals or a prime field: the shift
//!   endomorphism, homogeneous and `x0`-adic decompositions, and the solvers
//!   for equations of the form `(1 - x0) u = b v` and their chains
//!   `(1 - x0) u_0 = (1 - x1) u_1 = ... = (1 - x_m) u_m`, with every output
//!   verified by exact multiplication before it is returned;
//! * combinatorial companions: group relations turned into equation solutions,
//!   density and flow statistics of finite Cayley subgraphs, and counting or
//!   enumeration of the binary forests behind the monoid's elements.
//!
//! Each capability has a runnable demonstration under `examples/`:
//!
//! ```text
//! cargo run --example normal_forms
//! cargo run --example group_elements
//! cargo run --example basic_solution
//! cargo run --example phi_relations
//! cargo run --example solve_x0b
//! cargo run --example chain_systems
//! cargo run --example describe_solutions
//! cargo run --example relations_to_solutions
//! cargo run --example cayley_density
//! cargo run --example forest_combinatorics
//! cargo run --example minimal_search
//! ```
//!
//! A thin command-line frontend (`thf`) exposes the same operations as
//! subcommands; see the README for the grammar of the text formats.

pub mod cli;
pub mod config;
pub mod error;
pub mod field;
pub mod forests;
pub mod graphs;
pub mod group;
pub mod monoid;
pub mod relations;
pub mod ring;
pub mod search;
pub mod solve;
pub mod text;

pub use error::{Error, Result};
pub use field::{FieldElem, FieldTag};
pub use group::{GroupElement, GroupWord, Letter};
pub use monoid::Monomial;
pub use ring::Polynomial;
