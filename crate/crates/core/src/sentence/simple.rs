use serde::{Deserialize, Serialize};

use super::{SentenceAccess, SentenceCore};
use crate::clause::{self, NounClause, RelativeClause};
use crate::error::{Error, Result};
use crate::markup::MarkupNode;
use crate::morph;
use crate::phrase::{
    join_tokens, negate_verb_phrase, parse_adjective, parse_circumstance, parse_noun_phrase,
    parse_verb_phrases, Adjective, Circumstance, NounPhrase, PhraseCtx, SentenceId, VerbPhrase,
};
use crate::realize;
use crate::vocab::{Case, Connector, GrammaticalRole, Mood, Position, Relation};

/// Hands out sentence identifiers within one document.
#[derive(Debug, Default)]
pub struct SentenceIds {
    next: u32,
}

impl SentenceIds {
    pub fn new() -> Self {
        SentenceIds::default()
    }

    pub fn next_id(&mut self) -> SentenceId {
        let id = SentenceId(self.next);
        self.next += 1;
        id
    }
}

/// A sentence with at most one subject and exactly one verb phrase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicSentence {
    pub core: SentenceCore,
    pub subject: Option<NounPhrase>,
    pub verb_phrase: VerbPhrase,
    pub circumstances: Vec<Circumstance>,
    pub neg: Option<String>,
    pub query_adv: Option<String>,
}

impl BasicSentence {
    /// Builds the sentence and realises its text under `mood`.
    pub fn new(
        mood: Mood,
        subject: Option<NounPhrase>,
        verb_phrase: VerbPhrase,
        circumstances: Vec<Circumstance>,
        neg: Option<String>,
    ) -> Result<BasicSentence> {
        let query_adv = circumstances.iter().find_map(|c| c.query_adv.clone());
        let mut bs = BasicSentence {
            core: SentenceCore {
                mood,
                input: None,
                text: String::new(),
                nlml: String::new(),
                description: String::new(),
            },
            subject,
            verb_phrase,
            circumstances,
            neg,
            query_adv,
        };
        bs.core.text = realize::realize_basic(&bs)?;
        bs.core.description = format!(
            "basic {} sentence: subject {:?}, verb phrase {:?}, {} circumstance(s)",
            mood,
            bs.subject.as_ref().map(NounPhrase::render).unwrap_or_default(),
            bs.verb_phrase.render(),
            bs.circumstances.len()
        );
        Ok(bs)
    }
}

impl SentenceAccess for BasicSentence {
    fn core(&self) -> &SentenceCore {
        &self.core
    }
}

/// Cartesian combination of subject parts and verb phrases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicSentenceGrid {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<BasicSentence>>,
    pub relation: Relation,
}

impl BasicSentenceGrid {
    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = &BasicSentence> {
        self.cells.iter().flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleSentence {
    pub core: SentenceCore,
    pub id: SentenceId,
    pub subjects: Vec<NounPhrase>,
    pub verb_phrases: Vec<VerbPhrase>,
    pub verb_phrase_connector: Option<Connector>,
    pub circumstances: Vec<Circumstance>,
    pub np: Option<NounPhrase>,
    pub adj: Option<Adjective>,
    pub subordinator: Option<String>,
    pub noun_clauses: Vec<NounClause>,
    pub relative_clauses: Vec<RelativeClause>,
    pub query_adv: Option<String>,
    pub neg: Option<String>,
    pub basic_sentences: Option<BasicSentenceGrid>,
}

impl SentenceAccess for SimpleSentence {
    fn core(&self) -> &SentenceCore {
        &self.core
    }
}

/// Where a simple sentence comes from; clause bases may lack a subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Origin {
    Main,
    Clause,
}

impl SimpleSentence {
    fn empty(id: SentenceId, mood: Mood, input: Option<&str>, nlml: String) -> Self {
        SimpleSentence {
            core: SentenceCore {
                mood,
                input: input.map(str::to_string),
                text: String::new(),
                nlml,
                description: String::new(),
            },
            id,
            subjects: Vec::new(),
            verb_phrases: Vec::new(),
            verb_phrase_connector: None,
            circumstances: Vec::new(),
            np: None,
            adj: None,
            subordinator: None,
            noun_clauses: Vec::new(),
            relative_clauses: Vec::new(),
            query_adv: None,
            neg: None,
            basic_sentences: None,
        }
    }

    /// Subject connector of the (first) subject phrase.
    pub fn subject_connector(&self) -> Option<Connector> {
        self.subjects.first().and_then(|s| s.part_connector)
    }

    /// Recomputes text and description from the current content.
    pub fn refresh(&mut self) -> Result<()> {
        if self.core.mood.has_clause_structure() {
            construct_basic_sentences(self)?;
        } else {
            self.core.text = fragment_text(self);
            self.core.description = describe(self);
        }
        Ok(())
    }
}

fn fragment_text(ss: &SimpleSentence) -> String {
    let np = || ss.np.as_ref().map(NounPhrase::render).unwrap_or_default();
    let adj = || ss.adj.as_ref().map(Adjective::render).unwrap_or_default();
    match ss.core.mood {
        Mood::Np => np(),
        Mood::WhatTerseExclamation => format!("what {}!", np()),
        Mood::About => format!("what about {}?", np()),
        Mood::Adj => adj(),
        Mood::HowTerseExclamation => format!("how {}!", adj()),
        _ => {
            let by = |p: Position| {
                ss.circumstances
                    .iter()
                    .filter(move |c| c.position == p)
                    .map(Circumstance::render)
            };
            join_tokens(by(Position::Pre).chain(by(Position::Mid)).chain(by(Position::Post)))
        }
    }
}

fn describe(ss: &SimpleSentence) -> String {
    let mut d = format!(
        "simple {} sentence: {} subject(s), {} verb phrase(s), {} circumstance(s), {} noun clause(s), {} relative clause(s)",
        ss.core.mood,
        ss.subjects.len(),
        ss.verb_phrases.len(),
        ss.circumstances.len(),
        ss.noun_clauses.len(),
        ss.relative_clauses.len()
    );
    if let Some(grid) = &ss.basic_sentences {
        d.push_str(&format!(
            "; {}x{} basic sentences, {}",
            grid.rows, grid.cols, grid.relation
        ));
    }
    if let Some(s) = &ss.subordinator {
        d.push_str(&format!("; subordinator {s:?}"));
    }
    d
}

/// Lifts `noun_clause` and `relative_clause` subtrees out of a simple
/// sentence, parses them into `ss`, and returns the tree with index
/// placeholders in their place.
pub fn preprocess_clauses(
    node: &MarkupNode,
    ss: &mut SimpleSentence,
    ids: &mut SentenceIds,
) -> Result<MarkupNode> {
    lift(node, None, ss, ids)
}

fn lift(
    node: &MarkupNode,
    role: Option<GrammaticalRole>,
    ss: &mut SimpleSentence,
    ids: &mut SentenceIds,
) -> Result<MarkupNode> {
    let mut out = MarkupNode::leaf(node.tag.clone(), node.text.clone());
    for child in &node.children {
        match child.tag.as_str() {
            "noun_clause" => {
                let index = ss.noun_clauses.len();
                let role = role.unwrap_or(GrammaticalRole::Object);
                let nc = clause::parse_noun_clause(child, ss.id, role, ids)?;
                ss.noun_clauses.push(nc);
                let placeholder = MarkupNode::leaf("clause_ref", index.to_string());
                out.children.push(if node.tag == "circum" {
                    placeholder
                } else {
                    MarkupNode::with_children(
                        "noun",
                        vec![MarkupNode::leaf("type", "noun_clause"), placeholder],
                    )
                });
            }
            "relative_clause" => {
                let index = ss.relative_clauses.len();
                let rc = clause::parse_relative_clause(child, ss.id, ids)?;
                ss.relative_clauses.push(rc);
                out.children
                    .push(MarkupNode::leaf("relative_ref", index.to_string()));
            }
            tag => {
                let child_role = match tag {
                    "prep_phrase" => Some(GrammaticalRole::PrepObject),
                    "subject" => Some(GrammaticalRole::Subject),
                    "direct_object" | "indirect_object" | "predicate" | "circum" => {
                        Some(GrammaticalRole::Object)
                    }
                    _ => role,
                };
                out.children.push(lift(child, child_role, ss, ids)?);
            }
        }
    }
    Ok(out)
}

/// Parses simple-sentence content found directly under `node`.
pub(crate) fn parse_simple(
    node: &MarkupNode,
    mood: Mood,
    input: Option<&str>,
    subordinator: Option<String>,
    origin: Origin,
    ids: &mut SentenceIds,
) -> Result<SimpleSentence> {
    let id = ids.next_id();
    let mut ss = SimpleSentence::empty(id, mood, input, node.inner_markup());
    ss.subordinator = subordinator;
    let lifted = preprocess_clauses(node, &mut ss, ids)?;

    let mut subjects = Vec::new();
    let mut verb_phrases = Vec::new();
    let mut verb_phrase_connector = None;
    let mut circumstances = Vec::new();
    let mut np = None;
    let mut adj = None;
    {
        let mut ctx = PhraseCtx {
            parent: id,
            noun_clauses: &ss.noun_clauses,
            relative_clauses: &mut ss.relative_clauses,
        };
        for child in &lifted.children {
            match child.tag.as_str() {
                "subject" => subjects.push(parse_noun_phrase(child, &mut ctx)?),
                "verb_phrase" => {
                    let (vps, connector) = parse_verb_phrases(child, &mut ctx)?;
                    verb_phrases.extend(vps);
                    verb_phrase_connector = verb_phrase_connector.or(connector);
                }
                "circum" => circumstances.push(parse_circumstance(child, &mut ctx)?),
                "np" => np = Some(parse_noun_phrase(child, &mut ctx)?),
                "adj" => adj = Some(parse_adjective(child, &mut ctx)?),
                _ => {}
            }
        }
    }
    ss.subjects = subjects;
    ss.verb_phrases = verb_phrases;
    ss.verb_phrase_connector = verb_phrase_connector;
    ss.circumstances = circumstances;
    ss.np = np;
    ss.adj = adj;
    ss.neg = lifted.child_text("neg").map(str::to_string);
    ss.query_adv = ss.circumstances.iter().find_map(|c| c.query_adv.clone());
    check_mood_content(&ss, origin)?;
    ss.refresh()?;
    Ok(ss)
}

fn check_mood_content(ss: &SimpleSentence, origin: Origin) -> Result<()> {
    let mood = ss.core.mood;
    let fail = |msg: &str| Err(Error::schema(format!("nlml/{}", mood), format!("{mood} sentence {msg}")));
    if mood.is_noun_phrase_mood() {
        if ss.np.is_none() {
            return fail("requires <np>");
        }
        if !ss.subjects.is_empty() || !ss.verb_phrases.is_empty() {
            return fail("cannot have a subject or verb phrase");
        }
    } else if mood.is_adjective_mood() {
        if ss.adj.is_none() {
            return fail("requires <adj>");
        }
    } else if mood == Mood::Circumstances {
        if ss.circumstances.is_empty() {
            return fail("requires <circum>");
        }
    } else if mood == Mood::Order {
        if !ss.subjects.is_empty() {
            return fail("cannot have a subject");
        }
        if ss.verb_phrases.is_empty() {
            return fail("requires <verb_phrase>");
        }
    } else {
        if ss.verb_phrases.is_empty() {
            return fail("requires <verb_phrase>");
        }
        if ss.subjects.is_empty() && origin == Origin::Main {
            return fail("requires <subject>");
        }
        if mood == Mood::Subcircum && ss.subordinator.as_deref().is_none_or(str::is_empty) {
            return fail("requires <subordinator>");
        }
    }
    Ok(())
}

/// Combines subject parts and verb phrases into the basic-sentence grid,
/// then recomputes the sentence text and description from the cells.
///
/// A conjoined subject is split into one row per part, with the verb
/// re-inflected for the part. `or` on either axis makes the cells single
/// choice; `neither_nor` negates the cells along its axis.
pub fn construct_basic_sentences(ss: &mut SimpleSentence) -> Result<&BasicSentenceGrid> {
    if ss.verb_phrases.is_empty() {
        return Err(Error::EmptyVerbPhrases);
    }
    let mood = ss.core.mood;
    let mut rows: Vec<(Option<NounPhrase>, bool)> = Vec::new();
    for subject in &ss.subjects {
        if subject.parts.len() > 1 {
            for part in &subject.parts {
                let np = NounPhrase::from_part(part.clone(), ss.id, Case::Nom);
                rows.push((Some(np), true));
            }
        } else {
            rows.push((Some(subject.clone()), false));
        }
    }
    if rows.is_empty() {
        rows.push((None, false));
    }
    let subject_connector = ss.subject_connector();
    let negate = subject_connector == Some(Connector::NeitherNor)
        || ss.verb_phrase_connector == Some(Connector::NeitherNor);
    let relation = if subject_connector == Some(Connector::Or)
        || ss.verb_phrase_connector == Some(Connector::Or)
    {
        Relation::SingleChoice
    } else {
        Relation::Independent
    };
    let order_neg = if mood == Mood::Order { ss.neg.clone() } else { None };

    let mut cells = Vec::with_capacity(rows.len());
    for (subject, split) in &rows {
        let mut row = Vec::with_capacity(ss.verb_phrases.len());
        for vp in &ss.verb_phrases {
            let mut vp = match subject {
                Some(s) if *split => vp.agree(s.personality, s.number),
                _ => vp.clone(),
            };
            if mood != Mood::Order && vp.neg.is_none() {
                if let Some(neg) = &ss.neg {
                    vp.neg = Some(neg.clone());
                    vp.refresh();
                }
            }
            if negate {
                vp = negate_verb_phrase(&vp);
            }
            let mut cell = BasicSentence::new(
                mood,
                subject.clone(),
                vp,
                ss.circumstances.clone(),
                order_neg.clone(),
            )?;
            cell.core.nlml = ss.core.nlml.clone();
            row.push(cell);
        }
        cells.push(row);
    }
    let grid = BasicSentenceGrid {
        rows: cells.len(),
        cols: ss.verb_phrases.len(),
        cells,
        relation,
    };
    ss.core.text = grid_text(&grid, mood, ss.subordinator.as_deref());
    ss.basic_sentences = Some(grid);
    ss.core.description = describe(ss);
    Ok(ss.basic_sentences.as_ref().expect("just set"))
}

fn grid_text(grid: &BasicSentenceGrid, mood: Mood, subordinator: Option<&str>) -> String {
    let texts: Vec<&str> = grid.iter().map(|c| c.core.text.as_str()).collect();
    let body = if texts.len() == 1 {
        texts[0].to_string()
    } else {
        let mark = mood.punctuation();
        let bodies: Vec<&str> = texts
            .iter()
            .map(|t| match mark {
                Some(m) => t.strip_suffix(m).unwrap_or(t),
                None => t,
            })
            .collect();
        let mut joined = bodies.join(&format!(" {} ", grid.relation.joiner()));
        joined.extend(mark);
        joined
    };
    match (mood, subordinator) {
        (Mood::Subcircum, Some(sub)) => format!("{sub} {body}"),
        _ => body,
    }
}

/// The implicit subject of an order sentence ("you").
pub(crate) fn implicit_order_subject(id: SentenceId) -> NounPhrase {
    NounPhrase::pronoun("you", crate::vocab::Person::Second, crate::vocab::Number::Sing, id)
}

pub(crate) fn lowercase_subordinator(s: &str) -> String {
    morph::decapitalize(s.trim())
}
