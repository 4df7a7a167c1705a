//! Sentence hierarchy: simple, complex, compound and compound-complex
//! sentences, their decomposition, and the basic-sentence grid.

mod simple;

use serde::{Deserialize, Serialize};

use crate::clause;
use crate::error::{Error, Result};
use crate::markup::{parse_markup, MarkupNode};
use crate::morph;
use crate::schema::Schema;
use crate::vocab::{Coordinator, Mood, Relation};

pub use simple::{
    construct_basic_sentences, preprocess_clauses, BasicSentence, BasicSentenceGrid,
    SentenceIds, SimpleSentence,
};
pub(crate) use simple::{implicit_order_subject, parse_simple, Origin};

/// Attributes shared by every sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceCore {
    pub mood: Mood,
    /// The original input text, when the sentence came from one.
    pub input: Option<String>,
    pub text: String,
    pub nlml: String,
    pub description: String,
}

/// Read access to the common sentence attributes.
pub trait SentenceAccess {
    fn core(&self) -> &SentenceCore;

    fn mood(&self) -> Mood {
        self.core().mood
    }

    fn input(&self) -> Option<&str> {
        self.core().input.as_deref()
    }

    fn nlml(&self) -> &str {
        &self.core().nlml
    }

    fn text(&self) -> &str {
        &self.core().text
    }

    fn description(&self) -> &str {
        &self.core().description
    }
}

/// A subordinate clause attached in front of a main clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subordinate {
    pub subordinator: String,
    pub sub: SimpleSentence,
}

impl Subordinate {
    fn render(&self) -> String {
        format!("{} {},", morph::capitalize(&self.subordinator), self.sub.core.text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSentence {
    pub core: SentenceCore,
    pub subordinator: String,
    pub sub: SimpleSentence,
    pub main: SimpleSentence,
    /// A second subordinate clause belonging to the main clause only, kept
    /// when a compound-complex entry has its own subordinator.
    pub inner: Option<Subordinate>,
}

impl ComplexSentence {
    pub fn new(
        mood: Mood,
        input: Option<&str>,
        subordinator: String,
        sub: SimpleSentence,
        main: SimpleSentence,
        inner: Option<Subordinate>,
    ) -> Result<ComplexSentence> {
        if subordinator.trim().is_empty() {
            return Err(Error::schema("nlml/subordinator", "complex sentence needs a subordinator"));
        }
        let outer = Subordinate {
            subordinator,
            sub,
        };
        let mut parts = vec![outer.render()];
        parts.extend(inner.as_ref().map(Subordinate::render));
        parts.push(main.core.text.clone());
        let text = parts.join(" ");
        let mut nlml = format!(
            "<mood>{}</mood><complexity>complex</complexity><subordinator>{}</subordinator><sub>{}</sub><main>",
            mood, outer.subordinator, outer.sub.core.nlml
        );
        if let Some(inner) = &inner {
            nlml.push_str(&format!(
                "<complete_sentence><subordinator>{}</subordinator><sub>{}</sub><main>{}</main></complete_sentence>",
                inner.subordinator, inner.sub.core.nlml, main.core.nlml
            ));
        } else {
            nlml.push_str(&main.core.nlml);
        }
        nlml.push_str("</main>");
        let description = format!(
            "complex {} sentence: subordinator {:?}, subordinate clause {:?}, main clause {:?}",
            mood, outer.subordinator, outer.sub.core.text, main.core.text
        );
        Ok(ComplexSentence {
            core: SentenceCore {
                mood,
                input: input.map(str::to_string),
                text,
                nlml,
                description,
            },
            subordinator: outer.subordinator,
            sub: outer.sub,
            main,
            inner,
        })
    }
}

impl SentenceAccess for ComplexSentence {
    fn core(&self) -> &SentenceCore {
        &self.core
    }
}

/// One coordinated entry: a simple sentence, optionally with its own
/// subordinate clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteSentence {
    pub subordinator: Option<String>,
    pub sub: Option<SimpleSentence>,
    pub main: SimpleSentence,
}

impl CompleteSentence {
    pub fn text(&self) -> String {
        match (&self.subordinator, &self.sub) {
            (Some(subordinator), Some(sub)) => format!(
                "{} {}, {}",
                morph::capitalize(subordinator),
                sub.core.text,
                self.main.core.text
            ),
            _ => self.main.core.text.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AndOrSentence {
    pub coordinator: Coordinator,
    pub complete_sentences: Vec<CompleteSentence>,
}

impl AndOrSentence {
    pub fn text(&self) -> String {
        let texts: Vec<String> = self.complete_sentences.iter().map(CompleteSentence::text).collect();
        let n = texts.len();
        match n {
            0 => String::new(),
            1 => texts[0].clone(),
            _ => format!("{}, {} {}", texts[..n - 1].join(", "), self.coordinator, texts[n - 1]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompoundSentence {
    pub core: SentenceCore,
    pub coordinator: Coordinator,
    pub complete_sentences: Vec<CompleteSentence>,
}

impl SentenceAccess for CompoundSentence {
    fn core(&self) -> &SentenceCore {
        &self.core
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompoundComplexSentence {
    pub core: SentenceCore,
    pub subordinator: String,
    pub sub: SimpleSentence,
    pub main: AndOrSentence,
}

impl SentenceAccess for CompoundComplexSentence {
    fn core(&self) -> &SentenceCore {
        &self.core
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Sentence {
    Simple(SimpleSentence),
    Complex(ComplexSentence),
    Compound(CompoundSentence),
    CompoundComplex(CompoundComplexSentence),
}

impl SentenceAccess for Sentence {
    fn core(&self) -> &SentenceCore {
        match self {
            Sentence::Simple(s) => &s.core,
            Sentence::Complex(s) => &s.core,
            Sentence::Compound(s) => &s.core,
            Sentence::CompoundComplex(s) => &s.core,
        }
    }
}

impl Sentence {
    pub fn kind(&self) -> &'static str {
        match self {
            Sentence::Simple(_) => "simple",
            Sentence::Complex(_) => "complex",
            Sentence::Compound(_) => "compound",
            Sentence::CompoundComplex(_) => "compound_complex",
        }
    }

    /// Every top-level simple sentence, in document order.
    pub fn simple_sentences(&self) -> Vec<&SimpleSentence> {
        fn complete<'a>(cs: &'a [CompleteSentence], out: &mut Vec<&'a SimpleSentence>) {
            for c in cs {
                out.extend(c.sub.as_ref());
                out.push(&c.main);
            }
        }
        let mut out = Vec::new();
        match self {
            Sentence::Simple(s) => out.push(s),
            Sentence::Complex(c) => {
                out.push(&c.sub);
                out.extend(c.inner.as_ref().map(|i| &i.sub));
                out.push(&c.main);
            }
            Sentence::Compound(c) => complete(&c.complete_sentences, &mut out),
            Sentence::CompoundComplex(c) => {
                out.push(&c.sub);
                complete(&c.main.complete_sentences, &mut out);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Decomposed {
    Complex(ComplexSentence),
    Simple(SimpleSentence),
}

impl Decomposed {
    pub fn kind(&self) -> &'static str {
        match self {
            Decomposed::Complex(_) => "complex",
            Decomposed::Simple(_) => "simple",
        }
    }

    pub fn into_sentence(self) -> Sentence {
        match self {
            Decomposed::Complex(c) => Sentence::Complex(c),
            Decomposed::Simple(s) => Sentence::Simple(s),
        }
    }
}

impl SentenceAccess for Decomposed {
    fn core(&self) -> &SentenceCore {
        match self {
            Decomposed::Complex(c) => &c.core,
            Decomposed::Simple(s) => &s.core,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionResult {
    pub sentences: Vec<Decomposed>,
    pub relation: Relation,
}

fn entry(mood: Mood, cs: &CompleteSentence) -> Result<Decomposed> {
    match (&cs.subordinator, &cs.sub) {
        (Some(subordinator), Some(sub)) => Ok(Decomposed::Complex(ComplexSentence::new(
            mood,
            None,
            subordinator.clone(),
            sub.clone(),
            cs.main.clone(),
            None,
        )?)),
        _ => Ok(Decomposed::Simple(cs.main.clone())),
    }
}

/// Splits a sentence into complex and simple sentences. A compound-complex
/// sentence yields one complex sentence per coordinated entry, each with
/// the shared subordinate clause; `or` makes the result single choice.
pub fn decompose(s: &Sentence) -> DecompositionResult {
    let single = |d| DecompositionResult {
        sentences: vec![d],
        relation: Relation::Independent,
    };
    match s {
        Sentence::Simple(ss) => single(Decomposed::Simple(ss.clone())),
        Sentence::Complex(c) => single(Decomposed::Complex(c.clone())),
        Sentence::Compound(c) => DecompositionResult {
            sentences: c
                .complete_sentences
                .iter()
                .map(|cs| entry(c.core.mood, cs).expect("subordinators were checked when parsing"))
                .collect(),
            relation: c.coordinator.into(),
        },
        Sentence::CompoundComplex(c) => DecompositionResult {
            sentences: c
                .main
                .complete_sentences
                .iter()
                .map(|cs| {
                    let inner = match (&cs.subordinator, &cs.sub) {
                        (Some(subordinator), Some(sub)) => Some(Subordinate {
                            subordinator: subordinator.clone(),
                            sub: sub.clone(),
                        }),
                        _ => None,
                    };
                    Decomposed::Complex(
                        ComplexSentence::new(
                            c.core.mood,
                            None,
                            c.subordinator.clone(),
                            c.sub.clone(),
                            cs.main.clone(),
                            inner,
                        )
                        .expect("subordinator was checked when parsing"),
                    )
                })
                .collect(),
            relation: c.main.coordinator.into(),
        },
    }
}

/// Parses and validates an NLML document against the built-in schema.
pub fn parse_sentence(nlml: &str, input: Option<&str>) -> Result<Sentence> {
    parse_sentence_with(nlml, input, Schema::builtin())
}

pub fn parse_sentence_with(nlml: &str, input: Option<&str>, schema: &Schema) -> Result<Sentence> {
    let root = parse_markup(nlml)?;
    let report = schema.validate(&root);
    if !report.ok {
        return Err(Error::Invalid(report));
    }
    sentence_from_markup(&root, input)
}

fn required<'a>(node: &'a MarkupNode, tag: &str, path: &str) -> Result<&'a MarkupNode> {
    node.child(tag)
        .ok_or_else(|| Error::schema(path, format!("missing <{tag}>")))
}

fn subordinator_of(node: &MarkupNode, path: &str) -> Result<String> {
    match node.child_text("subordinator") {
        Some(s) => Ok(simple::lowercase_subordinator(s)),
        None => Err(Error::schema(
            format!("{path}/subordinator"),
            "the subordinator cannot be empty",
        )),
    }
}

fn coordinator_of(node: &MarkupNode, path: &str) -> Result<Coordinator> {
    let text = node
        .child_text("coordinator")
        .ok_or_else(|| Error::schema(format!("{path}/coordinator"), "missing coordinator"))?;
    text.parse()
        .map_err(|e: crate::vocab::UnknownValue| Error::schema(format!("{path}/coordinator"), e.to_string()))
}

fn clause_mood(node: &MarkupNode, fallback: Mood) -> Result<Mood> {
    match node.child_text("mood") {
        Some(m) => m
            .parse()
            .map_err(|e: crate::vocab::UnknownValue| Error::schema(format!("{}/mood", node.tag), e.to_string())),
        None => Ok(fallback),
    }
}

struct Builder {
    ids: SentenceIds,
}

impl Builder {
    fn simple(&mut self, node: &MarkupNode, mood: Mood, input: Option<&str>, subordinator: Option<String>) -> Result<SimpleSentence> {
        let mut ss = parse_simple(node, mood, input, subordinator, Origin::Main, &mut self.ids)?;
        clause::resolve_implied(&mut ss, None)?;
        Ok(ss)
    }

    fn complete_sentences(&mut self, node: &MarkupNode, mood: Mood, path: &str) -> Result<Vec<CompleteSentence>> {
        let mut out = Vec::new();
        for (i, cs) in node.children_named("complete_sentence").enumerate() {
            let cs_path = format!("{path}/complete_sentence[{i}]");
            let main = required(cs, "main", &cs_path)?;
            let sub = cs.child("sub");
            let subordinator = cs.child_text("subordinator");
            let (subordinator, sub) = match (subordinator, sub) {
                (Some(s), Some(sub)) => {
                    let sub_mood = clause_mood(sub, Mood::Statement)?;
                    (
                        Some(simple::lowercase_subordinator(s)),
                        Some(self.simple(sub, sub_mood, None, None)?),
                    )
                }
                (None, None) => (None, None),
                _ => {
                    return Err(Error::schema(
                        cs_path,
                        "a subordinate clause needs both <subordinator> and <sub>",
                    ))
                }
            };
            let main_mood = clause_mood(main, mood)?;
            out.push(CompleteSentence {
                subordinator,
                sub,
                main: self.simple(main, main_mood, None, None)?,
            });
        }
        if out.len() < 2 {
            return Err(Error::schema(
                format!("{path}/coordinator"),
                "a coordinator needs at least two complete sentences",
            ));
        }
        Ok(out)
    }
}

/// Builds the sentence model from an already parsed (and validated) tree.
pub fn sentence_from_markup(root: &MarkupNode, input: Option<&str>) -> Result<Sentence> {
    let mood: Mood = clause_mood(root, Mood::Statement)?;
    if root.child_text("mood").is_none() {
        return Err(Error::schema("nlml/mood", "missing <mood>"));
    }
    let complexity = root
        .child_text("complexity")
        .ok_or_else(|| Error::schema("nlml/complexity", "missing <complexity>"))?;
    let mut b = Builder {
        ids: SentenceIds::new(),
    };
    let nlml = root.inner_markup();
    match complexity {
        "simple" => {
            let subordinator = root.child_text("subordinator").map(simple::lowercase_subordinator);
            Ok(Sentence::Simple(b.simple(root, mood, input, subordinator)?))
        }
        "complex" => {
            let subordinator = subordinator_of(root, "nlml")?;
            let sub_node = required(root, "sub", "nlml")?;
            let main_node = required(root, "main", "nlml")?;
            let sub = b.simple(sub_node, clause_mood(sub_node, Mood::Statement)?, None, None)?;
            let main = b.simple(main_node, clause_mood(main_node, mood)?, None, None)?;
            let mut c = ComplexSentence::new(mood, input, subordinator, sub, main, None)?;
            c.core.nlml = nlml;
            Ok(Sentence::Complex(c))
        }
        "compound" => {
            let coordinator = coordinator_of(root, "nlml")?;
            let complete_sentences = b.complete_sentences(root, mood, "nlml")?;
            let main = AndOrSentence {
                coordinator,
                complete_sentences,
            };
            let text = main.text();
            Ok(Sentence::Compound(CompoundSentence {
                core: SentenceCore {
                    mood,
                    input: input.map(str::to_string),
                    description: format!(
                        "compound {} sentence: {} complete sentences joined by {}",
                        mood,
                        main.complete_sentences.len(),
                        coordinator
                    ),
                    text,
                    nlml,
                },
                coordinator,
                complete_sentences: main.complete_sentences,
            }))
        }
        "compound_complex" => {
            let subordinator = subordinator_of(root, "nlml")?;
            let sub_node = required(root, "sub", "nlml")?;
            let main_node = required(root, "main", "nlml")?;
            let sub = b.simple(sub_node, clause_mood(sub_node, Mood::Statement)?, None, None)?;
            let coordinator = coordinator_of(main_node, "nlml/main")?;
            let complete_sentences = b.complete_sentences(main_node, mood, "nlml/main")?;
            let main = AndOrSentence {
                coordinator,
                complete_sentences,
            };
            let text = format!(
                "{} {}, {}",
                morph::capitalize(&subordinator),
                sub.core.text,
                main.text()
            );
            Ok(Sentence::CompoundComplex(CompoundComplexSentence {
                core: SentenceCore {
                    mood,
                    input: input.map(str::to_string),
                    description: format!(
                        "compound-complex {} sentence: subordinator {:?}, {} complete sentences joined by {}",
                        mood,
                        subordinator,
                        main.complete_sentences.len(),
                        coordinator
                    ),
                    text,
                    nlml,
                },
                subordinator,
                sub,
                main,
            }))
        }
        other => Err(Error::UnsupportedComplexity(other.to_string())),
    }
}
