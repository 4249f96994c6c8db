//! A SHACL-subset validation engine for ODRL policy graphs.
//!
//! Supported: node shapes with class targets (including `rdfs:subClassOf`
//! closure over a supplied ontology), predicate-path property shapes, and
//! the constraint components `sh:minCount`, `sh:maxCount`, `sh:datatype`,
//! `sh:class`, `sh:nodeKind`, `sh:in`, `sh:hasValue`, `sh:pattern` and
//! `sh:or`. Anything else in the `sh:` vocabulary is rejected up front
//! rather than silently ignored.
//!
//! On top of the shape-driven checks, [`validate`] runs a closed-vocabulary
//! pass over the ODRL namespace: predicates and the values of
//! `odrl:action`, `odrl:leftOperand` and `odrl:operator` must be terms the
//! ontology defines, unless the policy declares an `odrl:profile`. Those
//! findings are reported under the `OdrlVocabulary` component.

mod error;
mod parse;
mod report;
mod shape;
mod validate;

pub use error::ShaclError;
pub use parse::parse_shapes;
pub use report::{report_to_graph, report_to_text, ComponentKind, ValidationReport, ValidationResult};
pub use shape::{Constraint, NodeKind, NodeShape, PropertyShape};
pub use validate::{focus_nodes, subclass_closure, validate};

/// Namespace of the shipped shape definitions.
pub const SHAPES_NS: &str = "http://example.com/odrl-shapes#";
