//! Turtle reader and writer.
//!
//! Covered syntax: `@prefix`/`@base` (and the SPARQL-style `PREFIX`/`BASE`
//! forms), prefixed names, absolute IRIs, `a`, predicate lists (`;`),
//! object lists (`,`), anonymous blank-node property lists, labeled blank
//! nodes, RDF collections, and string/numeric/boolean literals with
//! datatypes and language tags. Quoted triples (RDF-star), named graphs and
//! other serializations are out of scope.

mod parser;
mod writer;

pub use parser::parse_turtle;
pub use writer::serialize_turtle;
