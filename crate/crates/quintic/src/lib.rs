//! Perfect codes in quintic Cayley graphs on finite abelian groups.
//!
//! A perfect code of a graph is a vertex subset C such that every vertex has
//! exactly one element of C in its closed neighborhood. This crate decides,
//! for a connected 5-regular Cayley graph on a finite abelian group, whether
//! such a code exists, and when it does, enumerates every perfect code that
//! contains the identity.
//!
//! The decision procedure reduces a quintic connection set to a two-generator
//! grid quotient plus one involution, classifies the involution's position
//! relative to the grid (outside the grid span, the half-turn on the first
//! generator, or the half-turn on the diagonal), and tests arithmetic
//! conditions on 2-adic valuations of the grid parameters. Everything the
//! classifier claims is cross-checked against a brute-force exact-cover
//! oracle in the test suite.
//!
//! Module map:
//! - [`numtheory`]: 2-adic valuations, the coprime-part divisor search, gcd
//!   and lcm conventions with explicit zero handling.
//! - [`abelian`]: groups as products of cyclic factors, element arithmetic,
//!   spans, involutions, connection-set validation, literal parsing.
//! - [`graph`]: undirected graphs, Cayley and prism products, perfect-code
//!   and independence checks, deterministic exports.
//! - [`constructions`]: the grid graph, its two matching augmentations, the
//!   grid-to-Cayley relabeling, and canonical Cayley forms.
//! - [`codes`]: explicit perfect-code families on the grid constructions and
//!   the coset generator used by the identity-code enumeration.
//! - [`classify`]: connection-set normalization, the admissibility decision,
//!   and complete enumeration of codes containing the identity.
//! - [`oracle`]: exact-cover search over closed neighborhoods; ground truth
//!   for everything above.
//! - [`sweep`]: exhaustive instance generators and the acceptance criteria.

pub mod abelian;
pub mod classify;
pub mod codes;
pub mod constructions;
pub mod graph;
pub mod numtheory;
pub mod oracle;
pub mod sweep;
