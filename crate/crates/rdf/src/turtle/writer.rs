use std::collections::BTreeMap;
use std::fmt::Write;

use crate::graph::Graph;
use crate::ns;
use crate::term::{BlankNode, Iri, Literal, Resource, Term};

/// Serialize a graph as Turtle. Output is deterministic: prefixes sorted by
/// label, subjects and predicates in term order, `rdf:type` first within a
/// subject group. Blank nodes are written with invented `_:b<n>` labels, so
/// re-parsing yields an isomorphic (not label-identical) graph.
pub fn serialize_turtle(graph: &Graph) -> String {
    let mut out = String::new();
    for (label, namespace) in graph.prefixes() {
        writeln!(out, "@prefix {}: <{}> .", label, namespace.as_str()).unwrap();
    }
    if !graph.prefixes().is_empty() && !graph.is_empty() {
        out.push('\n');
    }

    let mut blank_labels: BTreeMap<BlankNode, String> = BTreeMap::new();
    let mut next_blank = 0usize;
    let mut label_for = |b: &BlankNode, next: &mut usize| -> String {
        if let Some(l) = blank_labels.get(b) {
            return l.clone();
        }
        let l = format!("b{}", *next);
        *next += 1;
        blank_labels.insert(b.clone(), l.clone());
        l
    };

    let rdf_type = ns::rdf_type();
    let mut current_subject: Option<Resource> = None;
    let mut current_predicate: Option<Iri> = None;

    // group triples by (subject, predicate) runs; BTreeSet ordering already
    // sorts rdf:type... not necessarily first, so collect and re-sort.
    let mut triples: Vec<_> = graph.iter().collect();
    triples.sort_by(|a, b| {
        (
            &a.subject,
            a.predicate != rdf_type, // rdf:type sorts first
            &a.predicate,
            &a.object,
        )
            .cmp(&(&b.subject, b.predicate != rdf_type, &b.predicate, &b.object))
    });

    for triple in triples {
        let same_subject = current_subject.as_ref() == Some(&triple.subject);
        if !same_subject {
            if current_subject.is_some() {
                out.push_str(" .\n");
            }
            let s = match &triple.subject {
                Resource::Iri(iri) => render_iri(iri, graph),
                Resource::Blank(b) => format!("_:{}", label_for(b, &mut next_blank)),
            };
            out.push_str(&s);
            current_subject = Some(triple.subject.clone());
            current_predicate = None;
        }
        let same_predicate = same_subject && current_predicate.as_ref() == Some(&triple.predicate);
        if same_predicate {
            out.push_str(" ,");
        } else {
            if same_subject {
                out.push_str(" ;\n   ");
            }
            if triple.predicate == rdf_type {
                out.push_str(" a");
            } else {
                out.push(' ');
                out.push_str(&render_iri(&triple.predicate, graph));
            }
            current_predicate = Some(triple.predicate.clone());
        }
        out.push(' ');
        let o = match &triple.object {
            Term::Iri(iri) => render_iri(iri, graph),
            Term::Blank(b) => format!("_:{}", label_for(b, &mut next_blank)),
            Term::Literal(lit) => render_literal(lit, graph),
        };
        out.push_str(&o);
    }
    if current_subject.is_some() {
        out.push_str(" .\n");
    }
    out
}

fn render_iri(iri: &Iri, graph: &Graph) -> String {
    let mut best: Option<(&str, &str)> = None; // (label, local)
    for (label, namespace) in graph.prefixes() {
        if let Some(local) = iri.as_str().strip_prefix(namespace.as_str()) {
            if local_name_is_safe(local) {
                let better = best.is_none_or(|(_, l)| local.len() < l.len());
                if better {
                    best = Some((label, local));
                }
            }
        }
    }
    match best {
        Some((label, local)) => format!("{label}:{local}"),
        None => format!("<{}>", iri.as_str()),
    }
}

fn local_name_is_safe(local: &str) -> bool {
    if local.ends_with('.') {
        return false;
    }
    local
        .chars()
        .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

fn render_literal(lit: &Literal, graph: &Graph) -> String {
    let mut out = String::with_capacity(lit.lexical().len() + 2);
    out.push('"');
    for c in lit.lexical().chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            other => out.push(other),
        }
    }
    out.push('"');
    if let Some(tag) = lit.language() {
        out.push('@');
        out.push_str(tag);
    } else if lit.datatype().as_str() != ns::XSD_STRING {
        out.push_str("^^");
        out.push_str(&render_iri(lit.datatype(), graph));
    }
    out
}
