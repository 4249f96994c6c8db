use std::collections::{BTreeMap, BTreeSet};

use crate::term::{BlankNode, Iri, Resource, Term};

/// One RDF statement. Subjects are IRIs or blank nodes, predicates are
/// always IRIs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Resource,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: impl Into<Resource>, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject: subject.into(),
            predicate,
            object: object.into(),
        }
    }
}

/// A set of triples plus a prefix map. Duplicate triples collapse silently;
/// iteration order is deterministic (term ordering).
///
/// Graphs are built once and then treated as immutable; all queries take
/// `&self`, so a finished graph can be shared freely across threads.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    triples: BTreeSet<Triple>,
    prefixes: BTreeMap<String, Iri>,
    next_blank: u64,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn insert(&mut self, triple: Triple) {
        self.triples.insert(triple);
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        self.triples.remove(triple)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// Declare a prefix. A label maps to exactly one namespace; re-declaring
    /// a label replaces the previous binding (last declaration wins, as in
    /// Turtle).
    pub fn add_prefix(&mut self, label: impl Into<String>, namespace: Iri) {
        self.prefixes.insert(label.into(), namespace);
    }

    pub fn prefixes(&self) -> &BTreeMap<String, Iri> {
        &self.prefixes
    }

    /// A blank node with a label that is unused in this graph so far.
    pub fn fresh_blank(&mut self) -> BlankNode {
        let b = BlankNode::new(format!("b{}", self.next_blank));
        self.next_blank += 1;
        b
    }

    /// All triples matching the bound positions, in deterministic order.
    /// `None` leaves a position unconstrained. A literal subject pattern
    /// matches nothing.
    pub fn matching(
        &self,
        subject: Option<&Term>,
        predicate: Option<&Iri>,
        object: Option<&Term>,
    ) -> Vec<&Triple> {
        self.triples
            .iter()
            .filter(|t| {
                let s_ok = match subject {
                    None => true,
                    Some(Term::Iri(iri)) => t.subject == Resource::Iri(iri.clone()),
                    Some(Term::Blank(b)) => t.subject == Resource::Blank(b.clone()),
                    Some(Term::Literal(_)) => false,
                };
                let p_ok = predicate.is_none_or(|p| &t.predicate == p);
                let o_ok = object.is_none_or(|o| &t.object == o);
                s_ok && p_ok && o_ok
            })
            .collect()
    }

    /// Objects of all `(subject, predicate, ?)` triples, in term order.
    pub fn objects(&self, subject: &Resource, predicate: &Iri) -> Vec<&Term> {
        let subject_term: Term = subject.clone().into();
        self.matching(Some(&subject_term), Some(predicate), None)
            .into_iter()
            .map(|t| &t.object)
            .collect()
    }

    /// First object of `(subject, predicate, ?)`, if any.
    pub fn object(&self, subject: &Resource, predicate: &Iri) -> Option<&Term> {
        self.objects(subject, predicate).into_iter().next()
    }

    /// Distinct subjects of all `(?, predicate, object)` triples.
    pub fn subjects(&self, predicate: &Iri, object: &Term) -> Vec<&Resource> {
        let mut out: Vec<&Resource> = self
            .matching(None, Some(predicate), Some(object))
            .into_iter()
            .map(|t| &t.subject)
            .collect();
        out.dedup();
        out
    }

    /// Distinct subjects of any triple, in term order.
    pub fn all_subjects(&self) -> Vec<&Resource> {
        let mut out: Vec<&Resource> = self.triples.iter().map(|t| &t.subject).collect();
        out.dedup();
        out
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        for t in iter {
            g.insert(t);
        }
        g
    }
}
