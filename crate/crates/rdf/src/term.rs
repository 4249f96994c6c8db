use std::fmt;

use crate::error::RdfError;
use crate::ns;

/// An absolute IRI reference. Never empty, never contains whitespace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, RdfError> {
        let value = value.into();
        if value.is_empty() || value.chars().any(char::is_whitespace) {
            return Err(RdfError::InvalidIri(value));
        }
        Ok(Iri(value))
    }

    /// Constructor for IRIs that are known-good at compile time (namespace
    /// constants, test fixtures). Panics on invalid input.
    pub fn from_static(value: &str) -> Self {
        Iri::new(value).expect("static IRI must be valid")
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn starts_with(&self, namespace: &str) -> bool {
        self.0.starts_with(namespace)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

/// A blank node with an internal label. Labels are local to one graph:
/// the Turtle reader renames document labels to fresh internal ones, so
/// labels are never meaningful across graphs (see [`crate::isomorphic`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Self {
        BlankNode(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// An RDF literal: lexical form plus datatype, with an optional language tag.
/// Language-tagged literals always carry the `rdf:langString` datatype;
/// plain literals default to `xsd:string`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    datatype: Iri,
    language: Option<String>,
}

impl Literal {
    /// A plain string literal (datatype `xsd:string`).
    pub fn string(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: ns::xsd("string"),
            language: None,
        }
    }

    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype,
            language: None,
        }
    }

    pub fn lang_tagged(lexical: impl Into<String>, tag: impl Into<String>) -> Result<Self, RdfError> {
        let tag = tag.into();
        let valid = !tag.is_empty()
            && tag
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '-')
            && !tag.starts_with('-')
            && !tag.ends_with('-');
        if !valid {
            return Err(RdfError::InvalidLanguageTag(tag));
        }
        Ok(Literal {
            lexical: lexical.into(),
            datatype: ns::rdf("langString"),
            language: Some(tag.to_ascii_lowercase()),
        })
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

/// Subject position of a triple: an IRI or a blank node, never a literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Resource {
    Iri(Iri),
    Blank(BlankNode),
}

impl Resource {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Resource::Iri(iri) => Some(iri),
            Resource::Blank(_) => None,
        }
    }
}

impl From<Iri> for Resource {
    fn from(iri: Iri) -> Self {
        Resource::Iri(iri)
    }
}

impl From<BlankNode> for Resource {
    fn from(b: BlankNode) -> Self {
        Resource::Blank(b)
    }
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Resource::Iri(iri) => iri.fmt(f),
            Resource::Blank(b) => b.fmt(f),
        }
    }
}

/// Any RDF term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    pub fn as_resource(&self) -> Option<Resource> {
        match self {
            Term::Iri(iri) => Some(Resource::Iri(iri.clone())),
            Term::Blank(b) => Some(Resource::Blank(b.clone())),
            Term::Literal(_) => None,
        }
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::Blank(b)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

impl From<Resource> for Term {
    fn from(r: Resource) -> Self {
        match r {
            Resource::Iri(iri) => Term::Iri(iri),
            Resource::Blank(b) => Term::Blank(b),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => iri.fmt(f),
            Term::Blank(b) => b.fmt(f),
            Term::Literal(lit) => {
                write!(f, "\"{}\"", lit.lexical())?;
                if let Some(tag) = lit.language() {
                    write!(f, "@{tag}")
                } else if lit.datatype().as_str() != ns::XSD_STRING {
                    write!(f, "^^{}", lit.datatype())
                } else {
                    Ok(())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_rejects_empty_and_whitespace() {
        assert!(Iri::new("").is_err());
        assert!(Iri::new("http://example.org/a b").is_err());
        assert!(Iri::new("http://example.org/ok").is_ok());
    }

    #[test]
    fn lang_literal_uses_langstring_datatype() {
        let lit = Literal::lang_tagged("hallo", "de").unwrap();
        assert_eq!(lit.datatype().as_str(), "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString");
        assert_eq!(lit.language(), Some("de"));
    }

    #[test]
    fn plain_literal_defaults_to_xsd_string() {
        let lit = Literal::string("hello");
        assert_eq!(lit.datatype().as_str(), "http://www.w3.org/2001/XMLSchema#string");
        assert_eq!(lit.language(), None);
    }

    #[test]
    fn bad_language_tags_rejected() {
        assert!(Literal::lang_tagged("x", "").is_err());
        assert!(Literal::lang_tagged("x", "-en").is_err());
        assert!(Literal::lang_tagged("x", "en us").is_err());
    }
}
