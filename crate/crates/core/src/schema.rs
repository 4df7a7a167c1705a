//! Schema validation of NLML trees.
//!
//! The schema is data: it is read from the tag and arity tables of
//! `docs/nlml-schema.md`, which is compiled into the crate as the built-in
//! schema. Validation is total and reports every issue it finds.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::markup::MarkupNode;

const BUILTIN_SCHEMA: &str = include_str!("../../../docs/nlml-schema.md");

const ROOT_PARENT: &str = "(root)";

/// Adverb types that express an extent; they may not co-occur with a
/// comparative predicate.
const EXTENT_ADVERB_TYPES: &[&str] = &["so_that", "so_as", "enough_to", "too_to", "adv_than"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IssueCode {
    UnknownTag,
    MissingChild,
    BadEnumValue,
    ConnectorArity,
    EmptyRequired,
}

impl IssueCode {
    pub fn as_str(self) -> &'static str {
        match self {
            IssueCode::UnknownTag => "UnknownTag",
            IssueCode::MissingChild => "MissingChild",
            IssueCode::BadEnumValue => "BadEnumValue",
            IssueCode::ConnectorArity => "ConnectorArity",
            IssueCode::EmptyRequired => "EmptyRequired",
        }
    }
}

impl fmt::Display for IssueCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationIssue {
    pub path: String,
    pub code: IssueCode,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    fn from_issues(issues: Vec<ValidationIssue>) -> Self {
        ValidationReport {
            ok: issues.is_empty(),
            issues,
        }
    }

    pub fn has(&self, code: IssueCode) -> bool {
        self.issues.iter().any(|i| i.code == code)
    }

    /// One-line rendering of the first few issues.
    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = self
            .issues
            .iter()
            .take(3)
            .map(|i| format!("{} at {}", i.code, i.path))
            .collect();
        if self.issues.len() > 3 {
            parts.push(format!("and {} more", self.issues.len() - 3));
        }
        parts.join("; ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Values {
    /// Element content, no text expected.
    Container,
    Any,
    Int,
    OneOf { values: Vec<String>, allow_empty: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Named,
    Reconstructed,
    Extension,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagRule {
    pub tag: String,
    pub parents: Vec<String>,
    /// `None` for leaves.
    pub children: Option<Vec<String>>,
    /// Each entry is satisfied by any one of its alternatives.
    pub required: Vec<Vec<String>>,
    pub values: Values,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArityRule {
    pub containers: Vec<String>,
    pub connector: String,
    pub counted: Vec<String>,
    pub min: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SchemaParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "schema line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for SchemaParseError {}

#[derive(Debug, Clone)]
pub struct Schema {
    rules: Vec<TagRule>,
    arity: Vec<ArityRule>,
    by_tag: HashMap<String, Vec<usize>>,
}

fn split_row(line: &str) -> Vec<String> {
    let body = line.trim().trim_start_matches('|').trim_end_matches('|');
    let mut cells = Vec::new();
    let mut cell = String::new();
    let mut chars = body.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\\' if chars.peek() == Some(&'|') => {
                cell.push('|');
                chars.next();
            }
            '|' => cells.push(std::mem::take(&mut cell).trim().to_string()),
            c => cell.push(c),
        }
    }
    cells.push(cell.trim().to_string());
    cells
}

fn list(cell: &str) -> Vec<String> {
    cell.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty() && *s != "-")
        .map(String::from)
        .collect()
}

impl Schema {
    /// The schema shipped with the crate.
    pub fn builtin() -> &'static Schema {
        static SCHEMA: OnceLock<Schema> = OnceLock::new();
        SCHEMA.get_or_init(|| {
            Schema::from_markdown(BUILTIN_SCHEMA).expect("built-in schema document is well formed")
        })
    }

    /// Reads the tag table and the connector-arity table from a schema
    /// document. Rows of other tables and all prose are ignored.
    pub fn from_markdown(doc: &str) -> Result<Schema, SchemaParseError> {
        #[derive(PartialEq)]
        enum Table {
            None,
            Tags,
            Arity,
        }
        let mut table = Table::None;
        let mut rules = Vec::new();
        let mut arity = Vec::new();

        for (n, line) in doc.lines().enumerate() {
            let line_no = n + 1;
            let trimmed = line.trim();
            if !trimmed.starts_with('|') {
                table = Table::None;
                continue;
            }
            let cells = split_row(trimmed);
            if cells.iter().all(|c| c.chars().all(|ch| ch == '-' || ch == ':')) {
                continue;
            }
            let err = |message: String| SchemaParseError {
                line: line_no,
                message,
            };
            match cells.first().map(String::as_str) {
                Some("tag") if cells.len() == 6 => {
                    table = Table::Tags;
                    continue;
                }
                Some("container") if cells.len() == 4 => {
                    table = Table::Arity;
                    continue;
                }
                _ => {}
            }
            match table {
                Table::None => {}
                Table::Tags => {
                    if cells.len() != 6 {
                        return Err(err(format!("expected 6 cells, found {}", cells.len())));
                    }
                    let leaf = cells[2] == "-";
                    let values = match cells[4].as_str() {
                        "-" | "" if !leaf => Values::Container,
                        "any" => Values::Any,
                        "int" => Values::Int,
                        "" | "-" => return Err(err(format!("leaf {} has no values", cells[0]))),
                        other => {
                            let mut values = list(other);
                            let allow_empty = values.iter().any(|v| v == "(empty)");
                            values.retain(|v| v != "(empty)");
                            Values::OneOf {
                                values,
                                allow_empty,
                            }
                        }
                    };
                    let origin = match cells[5].as_str() {
                        "named" => Origin::Named,
                        "reconstructed" => Origin::Reconstructed,
                        "extension" => Origin::Extension,
                        other => return Err(err(format!("unknown origin {other:?}"))),
                    };
                    rules.push(TagRule {
                        tag: cells[0].clone(),
                        parents: list(&cells[1]),
                        children: if leaf { None } else { Some(list(&cells[2])) },
                        required: list(&cells[3])
                            .into_iter()
                            .map(|r| r.split('|').map(|s| s.trim().to_string()).collect())
                            .collect(),
                        values,
                        origin,
                    });
                }
                Table::Arity => {
                    if cells.len() != 4 {
                        return Err(err(format!("expected 4 cells, found {}", cells.len())));
                    }
                    let min = cells[3]
                        .parse()
                        .map_err(|_| err(format!("bad minimum {:?}", cells[3])))?;
                    arity.push(ArityRule {
                        containers: list(&cells[0]),
                        connector: cells[1].clone(),
                        counted: list(&cells[2]),
                        min,
                    });
                }
            }
        }
        if rules.is_empty() {
            return Err(SchemaParseError {
                line: 0,
                message: "no tag table found".into(),
            });
        }
        let mut by_tag: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, rule) in rules.iter().enumerate() {
            by_tag.entry(rule.tag.clone()).or_default().push(i);
        }
        Ok(Schema {
            rules,
            arity,
            by_tag,
        })
    }

    pub fn rules(&self) -> &[TagRule] {
        &self.rules
    }

    pub fn rule_for(&self, tag: &str, parent: &str) -> Option<&TagRule> {
        self.by_tag
            .get(tag)?
            .iter()
            .map(|&i| &self.rules[i])
            .find(|r| r.parents.iter().any(|p| p == parent))
    }

    pub fn knows_tag(&self, tag: &str) -> bool {
        self.by_tag.contains_key(tag)
    }

    pub fn validate(&self, root: &MarkupNode) -> ValidationReport {
        let mut issues = Vec::new();
        self.check(root, ROOT_PARENT, root.tag.clone(), &mut issues);
        ValidationReport::from_issues(issues)
    }

    fn check(&self, node: &MarkupNode, parent: &str, path: String, issues: &mut Vec<ValidationIssue>) {
        let mut issue = |code, message: String| {
            issues.push(ValidationIssue {
                path: path.clone(),
                code,
                message,
            })
        };
        let Some(rule) = self.rule_for(&node.tag, parent) else {
            let message = if self.knows_tag(&node.tag) {
                format!("<{}> is not allowed inside <{}>", node.tag, parent)
            } else {
                format!("unknown tag <{}>", node.tag)
            };
            issue(IssueCode::UnknownTag, message);
            return;
        };

        match &rule.values {
            Values::Container => {}
            Values::Any => {
                if node.text.is_empty() {
                    issue(IssueCode::EmptyRequired, format!("<{}> must not be empty", node.tag));
                }
            }
            Values::Int => {
                if node.text.is_empty() {
                    issue(IssueCode::EmptyRequired, format!("<{}> must not be empty", node.tag));
                } else if !node.text.bytes().all(|b| b.is_ascii_digit()) {
                    issue(
                        IssueCode::BadEnumValue,
                        format!("<{}> expects an integer, found {:?}", node.tag, node.text),
                    );
                }
            }
            Values::OneOf {
                values,
                allow_empty,
            } => {
                if node.text.is_empty() {
                    if !allow_empty {
                        issue(IssueCode::EmptyRequired, format!("<{}> must not be empty", node.tag));
                    }
                } else if !values.contains(&node.text) {
                    issue(
                        IssueCode::BadEnumValue,
                        format!(
                            "{:?} is not a valid <{}> value (expected one of: {})",
                            node.text,
                            node.tag,
                            values.join(", ")
                        ),
                    );
                }
            }
        }

        for alternatives in &rule.required {
            if !alternatives.iter().any(|alt| node.child(alt).is_some()) {
                issue(
                    IssueCode::MissingChild,
                    format!("<{}> requires <{}>", node.tag, alternatives.join("> or <")),
                );
            }
        }

        for arity in self.arity.iter().filter(|a| a.containers.contains(&node.tag)) {
            let connector = node.child_text(&arity.connector);
            let count = node
                .children
                .iter()
                .filter(|c| arity.counted.contains(&c.tag))
                .count();
            match connector {
                Some(value) if count < arity.min => issue(
                    IssueCode::ConnectorArity,
                    format!(
                        "<{}>{}</{}> joins {} <{}> element(s), needs at least {}",
                        arity.connector,
                        value,
                        arity.connector,
                        count,
                        arity.counted.join("|"),
                        arity.min
                    ),
                ),
                None if count >= arity.min => issue(
                    IssueCode::ConnectorArity,
                    format!(
                        "{} <{}> elements without a <{}>",
                        count,
                        arity.counted.join("|"),
                        arity.connector
                    ),
                ),
                _ => {}
            }
        }

        if node.tag == "predicate" && node.child("comparative").is_some() {
            let extent_types = node
                .children_named("adj")
                .flat_map(|adj| adj.children_named("adv"))
                .filter_map(|adv| adv.child("type"))
                .filter(|t| EXTENT_ADVERB_TYPES.contains(&t.text.as_str()));
            for t in extent_types {
                issue(
                    IssueCode::BadEnumValue,
                    format!(
                        "adverb type {:?} cannot be combined with a comparative predicate",
                        t.text
                    ),
                );
            }
        }

        let allowed = rule.children.as_deref().unwrap_or(&[]);
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for child in &node.children {
            let total = node.children_named(&child.tag).count();
            let index = seen.entry(child.tag.as_str()).or_insert(0);
            let child_path = if total > 1 {
                format!("{}/{}[{}]", path, child.tag, index)
            } else {
                format!("{}/{}", path, child.tag)
            };
            *index += 1;
            if !allowed.contains(&child.tag) {
                let message = if rule.children.is_none() {
                    format!("<{}> is a text element and cannot contain <{}>", node.tag, child.tag)
                } else if self.knows_tag(&child.tag) {
                    format!("<{}> is not allowed inside <{}>", child.tag, node.tag)
                } else {
                    format!("unknown tag <{}>", child.tag)
                };
                issues.push(ValidationIssue {
                    path: child_path,
                    code: IssueCode::UnknownTag,
                    message,
                });
                continue;
            }
            self.check(child, &node.tag, child_path, issues);
        }
    }
}

/// Validates against the built-in schema.
pub fn validate_schema(root: &MarkupNode) -> ValidationReport {
    Schema::builtin().validate(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markup::parse_markup;

    fn report(doc: &str) -> ValidationReport {
        validate_schema(&parse_markup(doc).unwrap())
    }

    #[test]
    fn builtin_schema_loads() {
        let schema = Schema::builtin();
        assert!(schema.rule_for("mood", "nlml").is_some());
        assert!(schema.rule_for("type", "noun_clause").is_some());
        assert!(schema.rule_for("mood", "noun").is_none());
        let named: Vec<_> = [
            "mood", "complexity", "subject", "noun", "type", "word", "numb", "pers", "case",
            "verb_phrase", "verb_phrase_part", "verb_phrase_connector", "part_connector",
            "circum", "neg", "noun_clause", "relative_clause", "grad", "voice", "tense",
            "kernel_tense", "verb_type", "prep", "position", "attribute", "query_adv",
            "subordinator", "coordinator", "predicate", "direct_object", "indirect_object",
        ]
        .into_iter()
        .filter(|t| !schema.knows_tag(t))
        .collect();
        assert!(named.is_empty(), "missing tags: {named:?}");
    }

    #[test]
    fn bad_mood_is_reported_with_its_path() {
        let r = report("<mood>greeting</mood><complexity>simple</complexity>");
        assert!(!r.ok);
        assert_eq!(r.issues.len(), 1);
        assert_eq!(r.issues[0].path, "nlml/mood");
        assert_eq!(r.issues[0].code, IssueCode::BadEnumValue);
    }

    #[test]
    fn validation_is_total() {
        let r = report(
            "<mood>greeting</mood><complexity>odd</complexity><bogus>x</bogus>\
             <subject><part_connector>and</part_connector><noun><word>a</word></noun></subject>",
        );
        let codes: Vec<_> = r.issues.iter().map(|i| i.code).collect();
        assert!(codes.contains(&IssueCode::BadEnumValue));
        assert!(codes.contains(&IssueCode::UnknownTag));
        assert!(codes.contains(&IssueCode::ConnectorArity));
        assert_eq!(codes.iter().filter(|c| **c == IssueCode::BadEnumValue).count(), 2);
    }

    #[test]
    fn connector_arity_on_verb_phrases() {
        let r = report(
            "<mood>statement</mood><complexity>simple</complexity>\
             <subject><noun><word>I</word></noun></subject>\
             <verb_phrase><verb_phrase_connector>and</verb_phrase_connector>\
             <verb_phrase_part><word>sing</word></verb_phrase_part></verb_phrase>",
        );
        assert!(r.has(IssueCode::ConnectorArity));
        let issue = r.issues.iter().find(|i| i.code == IssueCode::ConnectorArity).unwrap();
        assert_eq!(issue.path, "nlml/verb_phrase");
    }

    #[test]
    fn empty_connector_means_single_phrase() {
        let r = report(
            "<mood>statement</mood><complexity>simple</complexity>\
             <subject><noun><word>I</word></noun></subject>\
             <verb_phrase><verb_phrase_connector></verb_phrase_connector><word>sing</word></verb_phrase>",
        );
        assert!(r.ok, "{:?}", r.issues);
    }

    #[test]
    fn missing_and_empty_children() {
        let r = report("<complexity>simple</complexity><subordinator></subordinator>");
        assert!(r.has(IssueCode::MissingChild));
        assert!(r.has(IssueCode::EmptyRequired));
    }

    #[test]
    fn comparative_with_extent_adverb_is_flagged() {
        let r = report(
            "<mood>statement</mood><complexity>simple</complexity>\
             <subject><noun><word>he</word></noun></subject>\
             <verb_phrase><verb_type>be</verb_type><word>is</word><predicate><type>adjective</type>\
             <adj><adv><type>too_to</type><word>too</word></adv><word>tall</word></adj>\
             <comparative><connector>than</connector><np><noun><word>Tom</word></noun></np></comparative>\
             </predicate></verb_phrase>",
        );
        assert_eq!(r.issues.len(), 1, "{:?}", r.issues);
        assert_eq!(r.issues[0].code, IssueCode::BadEnumValue);
        assert!(parse_markup(
            "<mood>statement</mood><complexity>simple</complexity>\
             <subject><noun><word>he</word></noun></subject>\
             <verb_phrase><verb_type>be</verb_type><word>is</word><predicate><type>adjective</type>\
             <adj><adv><type>too_to</type><word>too</word></adv><word>tall</word></adj>\
             <comparative><connector>than</connector><np><noun><word>Tom</word></noun></np></comparative>\
             </predicate></verb_phrase>"
        )
        .unwrap()
        .resolve_path(&r.issues[0].path)
        .is_some());
    }

    #[test]
    fn alternative_schema_documents() {
        let doc = "| tag | parents | children | required | values | origin |\n\
                   |---|---|---|---|---|---|\n\
                   | nlml | (root) | mood | mood | - | extension |\n\
                   | mood | nlml | - | | happy, sad | named |\n";
        let schema = Schema::from_markdown(doc).unwrap();
        let root = parse_markup("<mood>happy</mood>").unwrap();
        assert!(schema.validate(&root).ok);
        let root = parse_markup("<mood>statement</mood>").unwrap();
        assert!(schema.validate(&root).has(IssueCode::BadEnumValue));
        assert!(Schema::from_markdown("no tables here").is_err());
    }
}
