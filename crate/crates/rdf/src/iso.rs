use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, Triple};
use crate::term::{BlankNode, Resource, Term};

/// True iff some bijection over blank nodes maps `a`'s triple set onto
/// `b`'s. Prefix maps are ignored; only the triples matter.
///
/// Ground triples are compared as sets; blank-containing triples drive a
/// backtracking search seeded by per-blank structural signatures. Policy
/// documents and the generated test graphs stay small (tens of triples,
/// a handful of blanks), so the search space is tiny in practice.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.len() != b.len() {
        return false;
    }

    let (a_ground, a_open): (BTreeSet<&Triple>, Vec<&Triple>) = split(a);
    let (b_ground, b_open): (BTreeSet<&Triple>, Vec<&Triple>) = split(b);
    if a_ground != b_ground || a_open.len() != b_open.len() {
        return false;
    }
    if a_open.is_empty() {
        return true;
    }

    let a_blanks = blanks(&a_open);
    let b_blanks = blanks(&b_open);
    if a_blanks.len() != b_blanks.len() {
        return false;
    }

    let a_sigs: BTreeMap<&BlankNode, Vec<String>> =
        a_blanks.iter().map(|n| (*n, signature(n, &a_open))).collect();
    let b_sigs: BTreeMap<&BlankNode, Vec<String>> =
        b_blanks.iter().map(|n| (*n, signature(n, &b_open))).collect();

    // every signature must occur equally often on both sides
    let mut a_sig_counts: BTreeMap<&Vec<String>, usize> = BTreeMap::new();
    for sig in a_sigs.values() {
        *a_sig_counts.entry(sig).or_default() += 1;
    }
    let mut b_sig_counts: BTreeMap<&Vec<String>, usize> = BTreeMap::new();
    for sig in b_sigs.values() {
        *b_sig_counts.entry(sig).or_default() += 1;
    }
    if a_sig_counts != b_sig_counts {
        return false;
    }

    let b_open_set: BTreeSet<&Triple> = b_open.iter().copied().collect();
    let order: Vec<&BlankNode> = a_blanks.iter().copied().collect();
    let mut mapping: BTreeMap<&BlankNode, &BlankNode> = BTreeMap::new();
    let mut used: BTreeSet<&BlankNode> = BTreeSet::new();
    search(
        &order,
        0,
        &mut mapping,
        &mut used,
        &a_sigs,
        &b_sigs,
        &b_blanks,
        &a_open,
        &b_open_set,
    )
}

fn split(g: &Graph) -> (BTreeSet<&Triple>, Vec<&Triple>) {
    let mut ground = BTreeSet::new();
    let mut open = Vec::new();
    for t in g.iter() {
        let has_blank = matches!(t.subject, Resource::Blank(_)) || t.object.is_blank();
        if has_blank {
            open.push(t);
        } else {
            ground.insert(t);
        }
    }
    (ground, open)
}

fn blanks<'g>(open: &[&'g Triple]) -> BTreeSet<&'g BlankNode> {
    let mut out = BTreeSet::new();
    for t in open {
        if let Resource::Blank(b) = &t.subject {
            out.insert(b);
        }
        if let Term::Blank(b) = &t.object {
            out.insert(b);
        }
    }
    out
}

/// Structural profile of a blank node: its incident triples with other
/// blanks wildcarded. Used both as a necessary matching condition and to
/// prune the candidate set.
fn signature(node: &BlankNode, open: &[&Triple]) -> Vec<String> {
    let mut sig = Vec::new();
    for t in open {
        let subject_here = matches!(&t.subject, Resource::Blank(b) if b == node);
        let object_here = matches!(&t.object, Term::Blank(b) if b == node);
        if subject_here {
            let obj = match &t.object {
                Term::Blank(_) => "*".to_string(),
                other => other.to_string(),
            };
            sig.push(format!("s {} {}", t.predicate, obj));
        }
        if object_here {
            let subj = match &t.subject {
                Resource::Blank(_) => "*".to_string(),
                other => other.to_string(),
            };
            sig.push(format!("o {} {}", t.predicate, subj));
        }
    }
    sig.sort();
    sig
}

#[allow(clippy::too_many_arguments)]
fn search<'g>(
    order: &[&'g BlankNode],
    index: usize,
    mapping: &mut BTreeMap<&'g BlankNode, &'g BlankNode>,
    used: &mut BTreeSet<&'g BlankNode>,
    a_sigs: &BTreeMap<&BlankNode, Vec<String>>,
    b_sigs: &BTreeMap<&BlankNode, Vec<String>>,
    b_blanks: &BTreeSet<&'g BlankNode>,
    a_open: &[&Triple],
    b_open: &BTreeSet<&Triple>,
) -> bool {
    if index == order.len() {
        return verify(mapping, a_open, b_open);
    }
    let node = order[index];
    let sig = &a_sigs[node];
    for candidate in b_blanks.iter() {
        if used.contains(*candidate) || &b_sigs[*candidate] != sig {
            continue;
        }
        mapping.insert(node, candidate);
        used.insert(candidate);
        if search(
            order, index + 1, mapping, used, a_sigs, b_sigs, b_blanks, a_open, b_open,
        ) {
            return true;
        }
        mapping.remove(node);
        used.remove(*candidate);
    }
    false
}

fn verify(
    mapping: &BTreeMap<&BlankNode, &BlankNode>,
    a_open: &[&Triple],
    b_open: &BTreeSet<&Triple>,
) -> bool {
    for t in a_open {
        let subject = match &t.subject {
            Resource::Blank(b) => Resource::Blank((*mapping[b]).clone()),
            other => other.clone(),
        };
        let object = match &t.object {
            Term::Blank(b) => Term::Blank((*mapping[b]).clone()),
            other => other.clone(),
        };
        let mapped = Triple::new(subject, t.predicate.clone(), object);
        if !b_open.contains(&mapped) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Iri;
    use crate::turtle::parse_turtle;

    #[test]
    fn empty_graphs_are_isomorphic() {
        assert!(isomorphic(&Graph::new(), &Graph::new()));
    }

    #[test]
    fn label_renaming_is_isomorphic() {
        let a = parse_turtle("@prefix ex: <http://e/> . _:x ex:p ex:a . _:y ex:p ex:b .").unwrap();
        let b = parse_turtle("@prefix ex: <http://e/> . _:m ex:p ex:a . _:n ex:p ex:b .").unwrap();
        assert!(isomorphic(&a, &b));
    }

    #[test]
    fn differing_datatype_is_not_isomorphic() {
        let a = parse_turtle(
            "@prefix ex: <http://e/> . @prefix xsd: <http://www.w3.org/2001/XMLSchema#> . _:x ex:p \"5\"^^xsd:integer .",
        )
        .unwrap();
        let b = parse_turtle(
            "@prefix ex: <http://e/> . @prefix xsd: <http://www.w3.org/2001/XMLSchema#> . _:x ex:p \"5\"^^xsd:decimal .",
        )
        .unwrap();
        assert!(!isomorphic(&a, &b));
    }

    #[test]
    fn chained_blanks_require_consistent_mapping() {
        let a = parse_turtle("@prefix ex: <http://e/> . _:x ex:p _:y . _:y ex:p ex:end .").unwrap();
        let b = parse_turtle("@prefix ex: <http://e/> . _:m ex:p _:n . _:n ex:p ex:end .").unwrap();
        let c = parse_turtle("@prefix ex: <http://e/> . _:m ex:p _:n . _:m ex:p ex:end .").unwrap();
        assert!(isomorphic(&a, &b));
        assert!(!isomorphic(&a, &c));
    }

    #[test]
    fn blank_node_free_equals_set_equality() {
        let a = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b . ex:c ex:p ex:d .").unwrap();
        let b = parse_turtle("@prefix ex: <http://e/> . ex:c ex:p ex:d . ex:a ex:p ex:b .").unwrap();
        assert!(isomorphic(&a, &b));
        let mut c = b.clone();
        c.insert(Triple::new(
            Iri::from_static("http://e/a"),
            Iri::from_static("http://e/q"),
            Iri::from_static("http://e/b"),
        ));
        assert!(!isomorphic(&a, &c));
    }

    #[test]
    fn symmetric_blanks_still_match() {
        // two interchangeable blanks
        let a = parse_turtle("@prefix ex: <http://e/> . _:x ex:p ex:a . _:y ex:p ex:a .").unwrap();
        let b = parse_turtle("@prefix ex: <http://e/> . _:u ex:p ex:a . _:v ex:p ex:a .").unwrap();
        assert!(isomorphic(&a, &b));
    }
}
