use odrlgen_rdf::{Iri, Resource, Term};

/// The `sh:nodeKind` alternatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NodeKind {
    Iri,
    Literal,
    BlankNode,
    BlankNodeOrIri,
    IriOrLiteral,
    BlankNodeOrLiteral,
}

impl NodeKind {
    pub fn from_local(local: &str) -> Option<Self> {
        match local {
            "IRI" => Some(NodeKind::Iri),
            "Literal" => Some(NodeKind::Literal),
            "BlankNode" => Some(NodeKind::BlankNode),
            "BlankNodeOrIRI" => Some(NodeKind::BlankNodeOrIri),
            "IRIOrLiteral" => Some(NodeKind::IriOrLiteral),
            "BlankNodeOrLiteral" => Some(NodeKind::BlankNodeOrLiteral),
            _ => None,
        }
    }

    pub fn allows(&self, term: &Term) -> bool {
        match (self, term) {
            (NodeKind::Iri, Term::Iri(_)) => true,
            (NodeKind::Literal, Term::Literal(_)) => true,
            (NodeKind::BlankNode, Term::Blank(_)) => true,
            (NodeKind::BlankNodeOrIri, Term::Iri(_) | Term::Blank(_)) => true,
            (NodeKind::IriOrLiteral, Term::Iri(_) | Term::Literal(_)) => true,
            (NodeKind::BlankNodeOrLiteral, Term::Blank(_) | Term::Literal(_)) => true,
            _ => false,
        }
    }
}

/// One constraint component of a property shape.
#[derive(Debug, Clone, PartialEq)]
pub enum Constraint {
    MinCount(u64),
    MaxCount(u64),
    Datatype(Iri),
    Class(Iri),
    NodeKind(NodeKind),
    In(Vec<Term>),
    HasValue(Term),
    /// Anchored regular expression source, validated at parse time.
    Pattern(String),
    /// Satisfied when at least one branch's constraint set passes.
    Or(Vec<Vec<Constraint>>),
}

/// A property shape: exactly one predicate path plus one or more
/// constraint components.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyShape {
    pub id: Resource,
    pub path: Iri,
    pub constraints: Vec<Constraint>,
    pub message: String,
}

/// A node shape with a class target and its property shapes.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeShape {
    pub iri: Iri,
    pub target_class: Iri,
    pub property_shapes: Vec<PropertyShape>,
}
