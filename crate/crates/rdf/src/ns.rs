//! Namespace constants for the vocabularies this toolkit touches.

use crate::term::Iri;

pub const ODRL: &str = "http://www.w3.org/ns/odrl/2/";
pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
pub const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";
pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
pub const SH: &str = "http://www.w3.org/ns/shacl#";
pub const DC: &str = "http://purl.org/dc/elements/1.1/";
pub const DCTERMS: &str = "http://purl.org/dc/terms/";

pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

pub fn odrl(local: &str) -> Iri {
    Iri::from_static(&format!("{ODRL}{local}"))
}

pub fn rdf(local: &str) -> Iri {
    Iri::from_static(&format!("{RDF}{local}"))
}

pub fn rdfs(local: &str) -> Iri {
    Iri::from_static(&format!("{RDFS}{local}"))
}

pub fn owl(local: &str) -> Iri {
    Iri::from_static(&format!("{OWL}{local}"))
}

pub fn skos(local: &str) -> Iri {
    Iri::from_static(&format!("{SKOS}{local}"))
}

pub fn xsd(local: &str) -> Iri {
    Iri::from_static(&format!("{XSD}{local}"))
}

pub fn sh(local: &str) -> Iri {
    Iri::from_static(&format!("{SH}{local}"))
}

pub fn dc(local: &str) -> Iri {
    Iri::from_static(&format!("{DC}{local}"))
}

pub fn rdf_type() -> Iri {
    rdf("type")
}
