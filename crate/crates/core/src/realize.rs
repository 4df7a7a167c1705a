//! Surface realisation of basic sentences.
//!
//! A basic sentence is laid out as a [`RealizationPlan`]: fronted material
//! (query word, exclamation opener, pre-position circumstances), the core
//! slots (auxiliary, subject, verb words, objects, predicate) and trailing
//! material (post-position circumstances). Joining the three with single
//! spaces and attaching the terminal mark gives the text.

use crate::error::{Error, Result};
use crate::phrase::{join_tokens, Circumstance, ComplementSlot, NounPhrase};
use crate::sentence::{BasicSentence, Sentence, SentenceAccess};
use crate::vocab::{Mood, Position};

pub use crate::phrase::negate_verb_phrase;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RealizationPlan {
    pub fronted: Vec<String>,
    pub core_slots: Vec<String>,
    pub trailing: Vec<String>,
    mid_at: usize,
    punctuation: Option<char>,
}

impl RealizationPlan {
    /// A plan with the given core slots; mid-position circumstances are
    /// inserted before `core_slots[mid_at]`.
    pub fn new(core_slots: Vec<String>, mid_at: usize) -> Self {
        RealizationPlan {
            core_slots,
            mid_at,
            ..RealizationPlan::default()
        }
    }

    pub fn punctuation(&self) -> Option<char> {
        self.punctuation
    }

    pub fn with_punctuation(mut self, mark: Option<char>) -> Self {
        self.punctuation = mark;
        self
    }

    pub fn render(&self) -> String {
        let mut text = join_tokens(
            self.fronted
                .iter()
                .chain(&self.core_slots)
                .chain(&self.trailing),
        );
        if let Some(mark) = self.punctuation {
            text.push(mark);
        }
        text
    }
}

/// Distributes circumstances over the plan by their `position`, keeping
/// document order within each position.
pub fn place_circumstances(circs: &[Circumstance], mut plan: RealizationPlan) -> RealizationPlan {
    let mut mid = Vec::new();
    for c in circs {
        let text = c.render();
        match c.position {
            Position::Pre => plan.fronted.push(text),
            Position::Mid => mid.push(text),
            Position::Post => plan.trailing.push(text),
        }
    }
    let at = plan.mid_at.min(plan.core_slots.len());
    let n = mid.len();
    plan.core_slots.splice(at..at, mid);
    plan.mid_at = at + n;
    plan
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Opener {
    What,
    How,
}

impl Opener {
    pub fn as_str(self) -> &'static str {
        match self {
            Opener::What => "what",
            Opener::How => "how",
        }
    }
}

/// Where the query of a basic sentence sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Query {
    Subject,
    Adverb(usize),
    Complement(ComplementSlot, String),
    PrepCircumstance(usize, String),
}

pub(crate) fn find_query(bs: &BasicSentence) -> Option<Query> {
    if let Some(s) = &bs.subject {
        if s.core.query_text.is_some() || s.is_query_clause() {
            return Some(Query::Subject);
        }
    }
    if let Some(i) = bs.circumstances.iter().position(|c| c.query_adv.is_some()) {
        return Some(Query::Adverb(i));
    }
    if let Some((slot, text)) = bs.verb_phrase.query_complement() {
        return Some(Query::Complement(slot, text));
    }
    bs.circumstances
        .iter()
        .enumerate()
        .find_map(|(i, c)| c.query_prep_phrase().map(|p| Query::PrepCircumstance(i, p.render())))
}

/// The fronted query text, the circumstance it consumes and the verb slot
/// it consumes.
struct Fronting {
    text: Option<String>,
    circ: Option<usize>,
    slot: Option<ComplementSlot>,
}

fn fronting(bs: &BasicSentence) -> Fronting {
    match find_query(bs) {
        Some(Query::Adverb(i)) => Fronting {
            text: Some(bs.circumstances[i].render()),
            circ: Some(i),
            slot: None,
        },
        Some(Query::Complement(slot, text)) => Fronting {
            text: Some(text),
            circ: None,
            slot: Some(slot),
        },
        Some(Query::PrepCircumstance(i, text)) => Fronting {
            text: Some(text),
            circ: Some(i),
            slot: None,
        },
        Some(Query::Subject) | None => Fronting {
            text: None,
            circ: None,
            slot: None,
        },
    }
}

fn remaining_circumstances(bs: &BasicSentence, skip: Option<usize>) -> Vec<Circumstance> {
    bs.circumstances
        .iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != skip)
        .map(|(_, c)| c.clone())
        .collect()
}

fn subject_text(subject: &NounPhrase, initial: bool) -> String {
    if initial {
        subject.render()
    } else {
        subject.decapitalized().render()
    }
}

fn statement_plan(bs: &BasicSentence) -> RealizationPlan {
    let front = fronting(bs);
    let circs = remaining_circumstances(bs, front.circ);
    let has_pre = circs.iter().any(|c| c.position == Position::Pre);
    let mut core = Vec::new();
    if let Some(s) = &bs.subject {
        core.push(subject_text(s, front.text.is_none() && !has_pre));
    }
    let vt = bs.verb_phrase.verb_tokens();
    let mid_at = core.len() + vt.mid;
    core.extend(vt.words);
    core.extend(bs.verb_phrase.complements(front.slot));
    let mut plan = RealizationPlan::new(core, mid_at);
    plan.fronted.extend(front.text);
    place_circumstances(&circs, plan)
}

fn question_plan(bs: &BasicSentence) -> RealizationPlan {
    if find_query(bs) == Some(Query::Subject) {
        return statement_plan(bs).with_punctuation(Some('?'));
    }
    let front = fronting(bs);
    let circs = remaining_circumstances(bs, front.circ);
    let inv = bs.verb_phrase.inversion();
    let mut core = vec![inv.aux];
    if let Some(s) = &bs.subject {
        core.push(subject_text(s, false));
    }
    core.extend(inv.neg);
    let mid_at = core.len();
    core.extend(inv.rest);
    core.extend(bs.verb_phrase.complements(front.slot));
    let mut plan = RealizationPlan::new(core, mid_at);
    plan.fronted.extend(front.text);
    place_circumstances(&circs, plan).with_punctuation(Some('?'))
}

fn order_plan(bs: &BasicSentence) -> RealizationPlan {
    let mut core: Vec<String> = bs.neg.iter().cloned().collect();
    let vt = bs.verb_phrase.verb_tokens();
    let mid_at = core.len() + vt.mid;
    core.extend(vt.words);
    core.extend(bs.verb_phrase.complements(None));
    place_circumstances(&bs.circumstances, RealizationPlan::new(core, mid_at))
}

fn exclamation_plan(bs: &BasicSentence, opener: Opener) -> Result<RealizationPlan> {
    let vp = &bs.verb_phrase;
    let (head, slot) = match opener {
        Opener::What => match (&vp.direct_object, vp.predicate.as_ref().and_then(|p| p.noun_phrase())) {
            (Some(obj), _) => (obj.render(), ComplementSlot::DirectObject),
            (None, Some(np)) => (np.render(), ComplementSlot::Predicate),
            (None, None) => return Err(Error::MissingObject),
        },
        Opener::How => match vp.predicate.as_ref().and_then(|p| p.adjective()) {
            Some(adj) => (adj.render(), ComplementSlot::Predicate),
            None => return Err(Error::MissingPredicateAdjective),
        },
    };
    let mut core = Vec::new();
    if let Some(s) = &bs.subject {
        core.push(subject_text(s, false));
    }
    let vt = vp.verb_tokens();
    let mid_at = core.len() + vt.mid;
    core.extend(vt.words);
    core.extend(vp.complements(Some(slot)));
    let mut plan = RealizationPlan::new(core, mid_at);
    plan.fronted.push(opener.as_str().to_string());
    plan.fronted.push(head);
    Ok(place_circumstances(&bs.circumstances, plan).with_punctuation(Some('!')))
}

/// Picks the opener of a full exclamation: "how" for a predicate
/// adjective, otherwise "what" for an object or predicate noun phrase.
pub fn exclamation_opener(bs: &BasicSentence) -> Opener {
    match &bs.verb_phrase.predicate {
        Some(p) if p.adjective().is_some() => Opener::How,
        _ => Opener::What,
    }
}

/// Builds the plan for a basic sentence under the given mood.
pub fn plan_as(bs: &BasicSentence, mood: Mood, punctuate: bool) -> Result<RealizationPlan> {
    let statement_mark = punctuate.then_some('.');
    Ok(match mood {
        Mood::Statement | Mood::Subcircum => statement_plan(bs).with_punctuation(statement_mark),
        Mood::Order => order_plan(bs).with_punctuation(statement_mark),
        Mood::Question => question_plan(bs),
        Mood::FullExclamation => exclamation_plan(bs, exclamation_opener(bs))?,
        other => return Err(Error::UnrealizableMood(other)),
    })
}

/// Realises a basic sentence under its own mood. Statements and orders
/// carry no terminal period.
pub fn realize_basic(bs: &BasicSentence) -> Result<String> {
    realize_basic_with(bs, false)
}

pub fn realize_basic_with(bs: &BasicSentence, punctuate: bool) -> Result<String> {
    Ok(plan_as(bs, bs.core.mood, punctuate)?.render())
}

/// Realises the basic sentence as a question regardless of its mood.
pub fn realize_question(bs: &BasicSentence) -> String {
    question_plan(bs).render()
}

/// Realises the basic sentence as a statement regardless of its mood.
pub fn realize_statement(bs: &BasicSentence) -> String {
    statement_plan(bs).render()
}

pub fn realize_exclamation(bs: &BasicSentence, opener: Opener) -> Result<String> {
    Ok(exclamation_plan(bs, opener)?.render())
}

/// The realised text of every basic sentence of `sentence`, each simple
/// sentence's grid in row-major order. Fragment moods contribute their
/// text as a single line.
pub fn realize_lines(sentence: &Sentence, punctuate: bool) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for ss in sentence.simple_sentences() {
        match &ss.basic_sentences {
            Some(grid) => {
                for cell in grid.iter() {
                    out.push(realize_basic_with(cell, punctuate)?);
                }
            }
            None => out.push(ss.text().to_string()),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(core: &[&str], mid_at: usize) -> RealizationPlan {
        RealizationPlan::new(core.iter().map(|s| s.to_string()).collect(), mid_at)
    }

    #[test]
    fn empty_circumstances_leave_the_plan_alone() {
        let p = plan(&["I", "come"], 1);
        assert_eq!(place_circumstances(&[], p.clone()), p);
    }

    #[test]
    fn plan_render_joins_and_punctuates() {
        let mut p = plan(&["will", "you", "come"], 2).with_punctuation(Some('?'));
        p.fronted.push("when".into());
        p.trailing.push("here".into());
        assert_eq!(p.render(), "when will you come here?");
    }
}
