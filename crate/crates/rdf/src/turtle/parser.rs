use std::collections::HashMap;

use crate::error::RdfError;
use crate::graph::{Graph, Triple};
use crate::ns;
use crate::term::{BlankNode, Iri, Literal, Resource, Term};

/// Parse a Turtle document into a [`Graph`].
///
/// Document blank-node labels are renamed to fresh internal labels, so two
/// parses of the same text are equal as triple sets but blank labels carry
/// no meaning outside the returned graph.
pub fn parse_turtle(text: &str) -> Result<Graph, RdfError> {
    let mut parser = Parser::new(text);
    parser.parse_document()?;
    Ok(parser.graph)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    base: Option<String>,
    graph: Graph,
    blank_labels: HashMap<String, BlankNode>,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            base: None,
            graph: Graph::new(),
            blank_labels: HashMap::new(),
        }
    }

    // ---- character-level helpers -------------------------------------

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> RdfError {
        let start = self.pos.min(self.chars.len());
        let excerpt: String = self.chars[start..].iter().take(24).collect();
        RdfError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
            excerpt: excerpt.replace('\n', "\\n"),
        }
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn expect(&mut self, c: char) -> Result<(), RdfError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    /// True when the upcoming text matches `word` case-insensitively and the
    /// match ends at a token boundary.
    fn at_keyword(&self, word: &str) -> bool {
        let upper: Vec<char> = word.chars().collect();
        for (i, w) in upper.iter().enumerate() {
            match self.peek_at(i) {
                Some(c) if c.eq_ignore_ascii_case(w) => {}
                _ => return false,
            }
        }
        match self.peek_at(upper.len()) {
            None => true,
            Some(c) => c.is_whitespace() || c == '<' || c == '#',
        }
    }

    fn consume_keyword(&mut self, word: &str) {
        for _ in 0..word.chars().count() {
            self.bump();
        }
    }

    // ---- document structure ------------------------------------------

    fn parse_document(&mut self) -> Result<(), RdfError> {
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(());
            }
            if self.peek() == Some('@') {
                self.parse_at_directive()?;
            } else if self.at_keyword("PREFIX") {
                self.consume_keyword("PREFIX");
                self.parse_prefix_binding()?;
            } else if self.at_keyword("BASE") {
                self.consume_keyword("BASE");
                self.parse_base_binding()?;
            } else {
                self.parse_triples()?;
                self.expect('.')?;
            }
        }
    }

    fn parse_at_directive(&mut self) -> Result<(), RdfError> {
        self.bump(); // '@'
        if self.at_keyword("prefix") {
            self.consume_keyword("prefix");
            self.parse_prefix_binding()?;
            self.expect('.')?;
            Ok(())
        } else if self.at_keyword("base") {
            self.consume_keyword("base");
            self.parse_base_binding()?;
            self.expect('.')?;
            Ok(())
        } else {
            Err(self.error("unknown directive, expected @prefix or @base"))
        }
    }

    fn parse_prefix_binding(&mut self) -> Result<(), RdfError> {
        self.skip_ws();
        let label = self.parse_prefix_label()?;
        self.expect(':')?;
        self.skip_ws();
        let iri = self.parse_iriref()?;
        self.graph.add_prefix(label, iri);
        Ok(())
    }

    fn parse_base_binding(&mut self) -> Result<(), RdfError> {
        self.skip_ws();
        let iri = self.parse_iriref()?;
        self.base = Some(iri.as_str().to_string());
        Ok(())
    }

    fn parse_prefix_label(&mut self) -> Result<String, RdfError> {
        let mut label = String::new();
        while let Some(c) = self.peek() {
            if c == ':' {
                break;
            }
            if c.is_alphanumeric() || c == '_' || c == '-' || c == '.' {
                label.push(c);
                self.bump();
            } else {
                return Err(self.error("invalid character in prefix label"));
            }
        }
        Ok(label)
    }

    // ---- triples -------------------------------------------------------

    fn parse_triples(&mut self) -> Result<(), RdfError> {
        self.skip_ws();
        if self.peek() == Some('[') {
            // blankNodePropertyList as subject; predicate-object list optional
            let subject = self.parse_blank_node_property_list()?;
            self.skip_ws();
            if self.peek() != Some('.') {
                self.parse_predicate_object_list(&subject)?;
            }
            return Ok(());
        }
        let subject = self.parse_subject()?;
        self.parse_predicate_object_list(&subject)?;
        Ok(())
    }

    fn parse_subject(&mut self) -> Result<Resource, RdfError> {
        self.skip_ws();
        match self.peek() {
            Some('_') => Ok(Resource::Blank(self.parse_blank_node_label()?)),
            Some('(') => {
                let term = self.parse_collection()?;
                match term {
                    Term::Iri(iri) => Ok(Resource::Iri(iri)),
                    Term::Blank(b) => Ok(Resource::Blank(b)),
                    Term::Literal(_) => unreachable!("collections are resources"),
                }
            }
            _ => Ok(Resource::Iri(self.parse_iri()?)),
        }
    }

    fn parse_predicate_object_list(&mut self, subject: &Resource) -> Result<(), RdfError> {
        loop {
            self.skip_ws();
            let predicate = self.parse_verb()?;
            loop {
                let object = self.parse_object()?;
                self.graph
                    .insert(Triple::new(subject.clone(), predicate.clone(), object));
                self.skip_ws();
                if self.peek() == Some(',') {
                    self.bump();
                } else {
                    break;
                }
            }
            self.skip_ws();
            if self.peek() == Some(';') {
                self.bump();
                self.skip_ws();
                // permit trailing `;` before `.` or `]`
                if matches!(self.peek(), Some('.') | Some(']') | None) {
                    return Ok(());
                }
                if self.peek() == Some(';') {
                    continue;
                }
            } else {
                return Ok(());
            }
        }
    }

    fn parse_verb(&mut self) -> Result<Iri, RdfError> {
        self.skip_ws();
        if self.peek() == Some('a') {
            let next = self.peek_at(1);
            let boundary = next.is_none_or(|c| c.is_whitespace() || c == '<' || c == '[' || c == '(' || c == '"' || c == '\'');
            if boundary {
                self.bump();
                return Ok(ns::rdf_type());
            }
        }
        self.parse_iri()
    }

    fn parse_object(&mut self) -> Result<Term, RdfError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("unexpected end of input, expected object")),
            Some('<') => Ok(Term::Iri(self.parse_iriref()?)),
            Some('_') => Ok(Term::Blank(self.parse_blank_node_label()?)),
            Some('[') => {
                let b = self.parse_blank_node_property_list()?;
                Ok(Term::from(b))
            }
            Some('(') => self.parse_collection(),
            Some('"') | Some('\'') => Ok(Term::Literal(self.parse_rdf_literal()?)),
            Some(c) if c == '+' || c == '-' || c.is_ascii_digit() => {
                Ok(Term::Literal(self.parse_numeric_literal()?))
            }
            Some('t') | Some('f') if self.at_boolean() => {
                Ok(Term::Literal(self.parse_boolean_literal()?))
            }
            _ => Ok(Term::Iri(self.parse_iri()?)),
        }
    }

    fn at_boolean(&self) -> bool {
        for word in ["true", "false"] {
            let cs: Vec<char> = word.chars().collect();
            let matched = cs
                .iter()
                .enumerate()
                .all(|(i, w)| self.peek_at(i) == Some(*w));
            if matched {
                let after = self.peek_at(cs.len());
                let boundary = after.is_none_or(|c| {
                    c.is_whitespace() || matches!(c, '.' | ';' | ',' | ')' | ']' | '#')
                });
                if boundary {
                    return true;
                }
            }
        }
        false
    }

    // ---- terms ----------------------------------------------------------

    fn parse_iri(&mut self) -> Result<Iri, RdfError> {
        self.skip_ws();
        if self.peek() == Some('<') {
            self.parse_iriref()
        } else {
            self.parse_prefixed_name()
        }
    }

    fn parse_iriref(&mut self) -> Result<Iri, RdfError> {
        if self.peek() != Some('<') {
            return Err(self.error("expected `<` to start an IRI"));
        }
        self.bump();
        let mut value = String::new();
        loop {
            match self.peek() {
                None => return Err(self.error("unterminated IRI")),
                Some('>') => {
                    self.bump();
                    break;
                }
                Some('\\') => {
                    self.bump();
                    match self.peek() {
                        Some('u') => {
                            self.bump();
                            value.push(self.parse_unicode_escape(4)?);
                        }
                        Some('U') => {
                            self.bump();
                            value.push(self.parse_unicode_escape(8)?);
                        }
                        _ => return Err(self.error("invalid escape in IRI")),
                    }
                }
                Some(c) if c == ' ' || c == '\n' || c == '\t' || c == '"' || c == '{' || c == '}' => {
                    return Err(self.error("illegal character in IRI"));
                }
                Some(c) => {
                    value.push(c);
                    self.bump();
                }
            }
        }
        let resolved = self.resolve_iri(&value);
        Iri::new(resolved).map_err(|_| self.error("empty or malformed IRI"))
    }

    /// Minimal relative-reference handling against `@base`. Absolute IRIs
    /// (those with a scheme) pass through untouched.
    fn resolve_iri(&self, value: &str) -> String {
        let has_scheme = value
            .split_once(':')
            .is_some_and(|(scheme, _)| {
                !scheme.is_empty()
                    && scheme.chars().next().unwrap().is_ascii_alphabetic()
                    && scheme.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
            });
        if has_scheme {
            return value.to_string();
        }
        match &self.base {
            None => value.to_string(),
            Some(base) => {
                if value.starts_with('#') {
                    format!("{}{}", base.trim_end_matches('#'), value)
                } else if let Some(idx) = base.rfind('/') {
                    format!("{}{}", &base[..=idx], value)
                } else {
                    format!("{base}{value}")
                }
            }
        }
    }

    fn parse_prefixed_name(&mut self) -> Result<Iri, RdfError> {
        let start_line = self.line;
        let start_column = self.column;
        let mut prefix = String::new();
        while let Some(c) = self.peek() {
            if c == ':' {
                break;
            }
            if c.is_alphanumeric() || c == '_' || c == '-' || c == '.' {
                prefix.push(c);
                self.bump();
            } else {
                return Err(self.error("expected an IRI or prefixed name"));
            }
        }
        if self.peek() != Some(':') {
            return Err(self.error("expected `:` in prefixed name"));
        }
        self.bump();
        let local = self.parse_local_name()?;
        let namespace = self.graph.prefixes().get(&prefix).cloned().ok_or(
            RdfError::UndefinedPrefix {
                prefix: prefix.clone(),
                line: start_line,
                column: start_column,
            },
        )?;
        Iri::new(format!("{}{}", namespace.as_str(), local))
            .map_err(|_| self.error("prefixed name expands to malformed IRI"))
    }

    fn parse_local_name(&mut self) -> Result<String, RdfError> {
        let mut local = String::new();
        while let Some(c) = self.peek() {
            match c {
                '\\' => {
                    // PN_LOCAL_ESC
                    self.bump();
                    match self.peek() {
                        Some(e) if "_~.-!$&'()*+,;=/?#@%".contains(e) => {
                            local.push(e);
                            self.bump();
                        }
                        _ => return Err(self.error("invalid local-name escape")),
                    }
                }
                '%' => {
                    // percent-encoded sequence passes through verbatim
                    local.push(c);
                    self.bump();
                    for _ in 0..2 {
                        match self.peek() {
                            Some(h) if h.is_ascii_hexdigit() => {
                                local.push(h);
                                self.bump();
                            }
                            _ => return Err(self.error("invalid percent escape in local name")),
                        }
                    }
                }
                '.' => {
                    // a dot is part of the name only when followed by more name
                    let next = self.peek_at(1);
                    let continues = next.is_some_and(|n| {
                        n.is_alphanumeric() || n == '_' || n == '-' || n == '.' || n == '%' || n == '\\' || n == ':'
                    });
                    if continues {
                        local.push('.');
                        self.bump();
                    } else {
                        break;
                    }
                }
                c if c.is_alphanumeric() || c == '_' || c == '-' || c == ':' => {
                    local.push(c);
                    self.bump();
                }
                _ => break,
            }
        }
        Ok(local)
    }

    fn parse_blank_node_label(&mut self) -> Result<BlankNode, RdfError> {
        // "_:" label
        self.bump();
        if self.peek() != Some(':') {
            return Err(self.error("expected `:` after `_` in blank node label"));
        }
        self.bump();
        let mut label = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' || c == '-' {
                label.push(c);
                self.bump();
            } else if c == '.' {
                let next = self.peek_at(1);
                if next.is_some_and(|n| n.is_alphanumeric() || n == '_' || n == '-') {
                    label.push('.');
                    self.bump();
                } else {
                    break;
                }
            } else {
                break;
            }
        }
        if label.is_empty() {
            return Err(self.error("empty blank node label"));
        }
        if let Some(existing) = self.blank_labels.get(&label) {
            return Ok(existing.clone());
        }
        let fresh = self.graph.fresh_blank();
        self.blank_labels.insert(label, fresh.clone());
        Ok(fresh)
    }

    fn parse_blank_node_property_list(&mut self) -> Result<Resource, RdfError> {
        self.expect('[')?;
        let node = self.graph.fresh_blank();
        let subject = Resource::Blank(node);
        self.skip_ws();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(subject);
        }
        self.parse_predicate_object_list(&subject)?;
        self.expect(']')?;
        Ok(subject)
    }

    fn parse_collection(&mut self) -> Result<Term, RdfError> {
        self.expect('(')?;
        let mut items = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() == Some(')') {
                self.bump();
                break;
            }
            if self.peek().is_none() {
                return Err(self.error("unterminated collection"));
            }
            items.push(self.parse_object()?);
        }
        if items.is_empty() {
            return Ok(Term::Iri(ns::rdf("nil")));
        }
        let first_pred = ns::rdf("first");
        let rest_pred = ns::rdf("rest");
        let nil = Term::Iri(ns::rdf("nil"));
        let cells: Vec<BlankNode> = items.iter().map(|_| self.graph.fresh_blank()).collect();
        for (i, item) in items.into_iter().enumerate() {
            let cell = Resource::Blank(cells[i].clone());
            self.graph
                .insert(Triple::new(cell.clone(), first_pred.clone(), item));
            let rest: Term = if i + 1 < cells.len() {
                Term::Blank(cells[i + 1].clone())
            } else {
                nil.clone()
            };
            self.graph.insert(Triple::new(cell, rest_pred.clone(), rest));
        }
        Ok(Term::Blank(cells[0].clone()))
    }

    // ---- literals --------------------------------------------------------

    fn parse_rdf_literal(&mut self) -> Result<Literal, RdfError> {
        let lexical = self.parse_string()?;
        match self.peek() {
            Some('@') => {
                self.bump();
                let mut tag = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '-' {
                        tag.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Literal::lang_tagged(lexical, &tag)
                    .map_err(|_| self.error(format!("invalid language tag `{tag}`")))
            }
            Some('^') => {
                self.bump();
                if self.peek() != Some('^') {
                    return Err(self.error("expected `^^` before datatype"));
                }
                self.bump();
                let datatype = self.parse_iri()?;
                Ok(Literal::typed(lexical, datatype))
            }
            _ => Ok(Literal::string(lexical)),
        }
    }

    fn parse_string(&mut self) -> Result<String, RdfError> {
        let quote = self.peek().ok_or_else(|| self.error("expected string"))?;
        let long = self.peek_at(1) == Some(quote) && self.peek_at(2) == Some(quote);
        if long {
            self.bump();
            self.bump();
            self.bump();
            self.parse_string_body(quote, true)
        } else {
            self.bump();
            self.parse_string_body(quote, false)
        }
    }

    fn parse_string_body(&mut self, quote: char, long: bool) -> Result<String, RdfError> {
        let mut out = String::new();
        loop {
            match self.peek() {
                None => return Err(self.error("unterminated string literal")),
                Some('\\') => {
                    self.bump();
                    let escaped = self.bump().ok_or_else(|| self.error("dangling escape"))?;
                    match escaped {
                        't' => out.push('\t'),
                        'b' => out.push('\u{8}'),
                        'n' => out.push('\n'),
                        'r' => out.push('\r'),
                        'f' => out.push('\u{c}'),
                        '"' => out.push('"'),
                        '\'' => out.push('\''),
                        '\\' => out.push('\\'),
                        'u' => out.push(self.parse_unicode_escape(4)?),
                        'U' => out.push(self.parse_unicode_escape(8)?),
                        other => return Err(self.error(format!("unknown escape `\\{other}`"))),
                    }
                }
                Some(c) if c == quote => {
                    if long {
                        // count the quote run: the last three close the string,
                        // anything before them is content
                        let mut run = 0;
                        while self.peek_at(run) == Some(quote) {
                            run += 1;
                        }
                        if run >= 3 {
                            for _ in 0..run - 3 {
                                out.push(quote);
                                self.bump();
                            }
                            self.bump();
                            self.bump();
                            self.bump();
                            return Ok(out);
                        }
                        for _ in 0..run {
                            out.push(quote);
                            self.bump();
                        }
                    } else {
                        self.bump();
                        return Ok(out);
                    }
                }
                Some('\n') if !long => return Err(self.error("newline in single-line string")),
                Some(c) => {
                    out.push(c);
                    self.bump();
                }
            }
        }
    }

    fn parse_unicode_escape(&mut self, digits: usize) -> Result<char, RdfError> {
        let mut value = 0u32;
        for _ in 0..digits {
            let c = self
                .bump()
                .ok_or_else(|| self.error("truncated unicode escape"))?;
            let d = c
                .to_digit(16)
                .ok_or_else(|| self.error("non-hex digit in unicode escape"))?;
            value = value * 16 + d;
        }
        char::from_u32(value).ok_or_else(|| self.error("invalid unicode code point"))
    }

    fn parse_numeric_literal(&mut self) -> Result<Literal, RdfError> {
        let mut lexical = String::new();
        if matches!(self.peek(), Some('+') | Some('-')) {
            lexical.push(self.bump().unwrap());
        }
        let mut has_dot = false;
        let mut has_exp = false;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                lexical.push(c);
                self.bump();
            } else if c == '.' && !has_dot && !has_exp {
                // a trailing dot is the statement terminator, not part of the number
                if self.peek_at(1).is_some_and(|n| n.is_ascii_digit()) {
                    has_dot = true;
                    lexical.push('.');
                    self.bump();
                } else {
                    break;
                }
            } else if (c == 'e' || c == 'E') && !has_exp {
                has_exp = true;
                lexical.push(c);
                self.bump();
                if matches!(self.peek(), Some('+') | Some('-')) {
                    lexical.push(self.bump().unwrap());
                }
            } else {
                break;
            }
        }
        if lexical.is_empty() || lexical.ends_with(['+', '-', 'e', 'E']) {
            return Err(self.error("malformed numeric literal"));
        }
        let datatype = if has_exp {
            ns::xsd("double")
        } else if has_dot {
            ns::xsd("decimal")
        } else {
            ns::xsd("integer")
        };
        Ok(Literal::typed(lexical, datatype))
    }

    fn parse_boolean_literal(&mut self) -> Result<Literal, RdfError> {
        let word = if self.peek() == Some('t') { "true" } else { "false" };
        self.consume_keyword(word);
        Ok(Literal::typed(word, ns::xsd("boolean")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b .").unwrap();
        assert_eq!(g.len(), 1);
        let t = g.iter().next().unwrap();
        assert_eq!(t.subject, Resource::Iri(Iri::from_static("http://e/a")));
        assert_eq!(t.predicate, Iri::from_static("http://e/p"));
        assert_eq!(t.object, Term::Iri(Iri::from_static("http://e/b")));
    }

    #[test]
    fn typed_literal() {
        let g = parse_turtle(
            "@prefix ex: <http://e/> . @prefix xsd: <http://www.w3.org/2001/XMLSchema#> . \
             ex:x ex:p \"5\"^^xsd:integer .",
        )
        .unwrap();
        let t = g.iter().next().unwrap();
        let lit = t.object.as_literal().unwrap();
        assert_eq!(lit.lexical(), "5");
        assert_eq!(lit.datatype().as_str(), "http://www.w3.org/2001/XMLSchema#integer");
    }

    #[test]
    fn undefined_prefix_reported_by_name() {
        let err = parse_turtle("ex:a ex:p ex:b .").unwrap_err();
        match err {
            RdfError::UndefinedPrefix { prefix, .. } => assert_eq!(prefix, "ex"),
            other => panic!("expected UndefinedPrefix, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse_turtle("@prefix ex: <http://e/> .\nex:a ex:p .").unwrap_err();
        match err {
            RdfError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("expected Syntax, got {other:?}"),
        }
    }

    #[test]
    fn a_expands_to_rdf_type() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a a ex:C .").unwrap();
        let t = g.iter().next().unwrap();
        assert_eq!(t.predicate.as_str(), "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
    }

    #[test]
    fn predicate_and_object_lists() {
        let g = parse_turtle(
            "@prefix ex: <http://e/> . ex:a ex:p ex:b , ex:c ; ex:q ex:d .",
        )
        .unwrap();
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn anonymous_blank_node_property_list() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p [ ex:q ex:b ] .").unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.iter().any(|t| t.object.is_blank()));
    }

    #[test]
    fn labeled_blank_nodes_unify() {
        let g = parse_turtle(
            "@prefix ex: <http://e/> . _:x ex:p ex:a . _:x ex:q ex:b .",
        )
        .unwrap();
        let subjects: Vec<_> = g.iter().map(|t| t.subject.clone()).collect();
        assert_eq!(subjects[0], subjects[1]);
    }

    #[test]
    fn collection_expands_to_first_rest() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ( ex:b ex:c ) .").unwrap();
        // 1 link triple + 2 cells x (first, rest)
        assert_eq!(g.len(), 5);
        assert!(g
            .iter()
            .any(|t| t.predicate.as_str().ends_with("rest")
                && t.object == Term::Iri(ns::rdf("nil"))));
    }

    #[test]
    fn empty_collection_is_nil() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p () .").unwrap();
        let t = g.iter().next().unwrap();
        assert_eq!(t.object, Term::Iri(ns::rdf("nil")));
    }

    #[test]
    fn language_tagged_string() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p \"Haus\"@de .").unwrap();
        let lit = g.iter().next().unwrap().object.as_literal().unwrap().clone();
        assert_eq!(lit.language(), Some("de"));
        assert_eq!(lit.datatype().as_str(), ns::RDF_LANG_STRING);
    }

    #[test]
    fn numeric_and_boolean_shorthand() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p 5 ; ex:q 1.5 ; ex:r 2e3 ; ex:s true .")
            .unwrap();
        let datatypes: Vec<String> = g
            .iter()
            .filter_map(|t| t.object.as_literal())
            .map(|l| l.datatype().as_str().to_string())
            .collect();
        assert!(datatypes.iter().any(|d| d.ends_with("integer")));
        assert!(datatypes.iter().any(|d| d.ends_with("decimal")));
        assert!(datatypes.iter().any(|d| d.ends_with("double")));
        assert!(datatypes.iter().any(|d| d.ends_with("boolean")));
    }

    #[test]
    fn sparql_style_prefix() {
        let g = parse_turtle("PREFIX ex: <http://e/>\nex:a ex:p ex:b .").unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn duplicate_triples_collapse() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b . ex:a ex:p ex:b .").unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn parser_is_deterministic() {
        let text = "@prefix ex: <http://e/> . ex:a ex:p [ ex:q ( 1 2 3 ) ] , ex:b .";
        let a = parse_turtle(text).unwrap();
        let b = parse_turtle(text).unwrap();
        let ta: Vec<_> = a.iter().collect();
        let tb: Vec<_> = b.iter().collect();
        assert_eq!(ta, tb);
    }

    #[test]
    fn long_strings_and_escapes() {
        let g = parse_turtle(
            "@prefix ex: <http://e/> . ex:a ex:p \"\"\"line1\nline2 \"quoted\"\"\"\" ; ex:q \"tab\\there\" .",
        )
        .unwrap();
        let lits: Vec<String> = g
            .iter()
            .filter_map(|t| t.object.as_literal())
            .map(|l| l.lexical().to_string())
            .collect();
        assert!(lits.iter().any(|l| l.contains("line1\nline2")));
        assert!(lits.iter().any(|l| l.contains("tab\there")));
    }

    #[test]
    fn trailing_semicolon_permitted() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b ; .").unwrap();
        assert_eq!(g.len(), 1);
    }
}
