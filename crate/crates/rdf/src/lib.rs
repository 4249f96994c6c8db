//! RDF graph data model with a Turtle reader/writer.
//!
//! The model is deliberately small: IRIs, blank nodes, literals, triples and
//! an in-memory [`Graph`] with set semantics. The Turtle support covers the
//! subset needed for ontology files, SHACL shapes files and ODRL policy
//! documents: prefixes, `a`, predicate/object lists, anonymous and labeled
//! blank nodes, RDF collections and the common literal forms.

mod error;
mod graph;
mod iso;
pub mod ns;
mod term;
pub mod turtle;

pub use error::RdfError;
pub use graph::{Graph, Triple};
pub use iso::isomorphic;
pub use term::{BlankNode, Iri, Literal, Resource, Term};

pub use turtle::{parse_turtle, serialize_turtle};
