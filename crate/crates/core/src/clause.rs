//! Noun clauses and relative clauses, and the statements or questions they
//! imply.
//!
//! Both clause kinds are parsed as simple sentences (their `base`). A noun
//! clause stands for a noun phrase of its host sentence; a relative clause
//! post-modifies a noun and receives that noun phrase while the host is
//! parsed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::markup::MarkupNode;
use crate::morph;
use crate::phrase::{
    Circumstance, CircumstancePayload, NounPhrase, PreModifier, PrepPhrase, SentenceId, VerbPhrase,
};
use crate::realize;
use crate::sentence::{
    implicit_order_subject, parse_simple, BasicSentence, Origin, Sentence, SentenceIds,
    SimpleSentence,
};
use crate::vocab::{
    Case, Connector, GrammaticalRole, Mood, NounClauseType, RelativeForm, TerseKind, VerbType,
    Voice,
};

/// Verbs after which an object-plus-infinitive implies an obligation
/// ("I asked him to come" implies "he should come").
const OBLIGATION_VERBS: &[&str] = &[
    "ask", "tell", "order", "require", "force", "advise", "urge", "command", "request", "warn",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NounClause {
    pub base: SimpleSentence,
    pub clause_type: NounClauseType,
    pub parent: SentenceId,
    pub implied_text: String,
    pub grammatical_role: GrammaticalRole,
}

impl NounClause {
    /// The clause as it reads inside its host sentence.
    pub fn surface_text(&self) -> String {
        let base = &self.base.core.text;
        match self.clause_type {
            NounClauseType::That => format!("that {base}"),
            NounClauseType::Whether | NounClauseType::WhetherOrNot => format!("whether {base}"),
            _ => base.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeClause {
    pub base: SimpleSentence,
    pub form: RelativeForm,
    pub relative_word: String,
    pub modified_noun_phrase: Option<NounPhrase>,
    pub terse_kind: Option<TerseKind>,
    pub implied_statement: String,
    pub parent: SentenceId,
}

impl RelativeClause {
    pub fn surface_text(&self) -> String {
        self.base.core.text.clone()
    }

    /// Hands the clause the noun phrase it modifies and derives the implied
    /// statement. May be called only once.
    pub fn set_modified_noun_phrase(&mut self, np: NounPhrase) -> Result<()> {
        if self.modified_noun_phrase.is_some() {
            return Err(Error::AlreadySet);
        }
        self.modified_noun_phrase = Some(np);
        self.implied_statement = implied_statement(self)?;
        Ok(())
    }
}

fn append_or_not(base: &mut SimpleSentence, clause_type: NounClauseType) {
    if clause_type == NounClauseType::WhetherOrNot && !base.core.text.ends_with(" or not") {
        base.core.text.push_str(" or not");
    }
}

/// Parses a `noun_clause` element lifted out of the sentence `parent`.
pub fn parse_noun_clause(
    node: &MarkupNode,
    parent: SentenceId,
    role: GrammaticalRole,
    ids: &mut SentenceIds,
) -> Result<NounClause> {
    let type_text = node
        .child_text("type")
        .ok_or_else(|| Error::schema("noun_clause", "<noun_clause> requires <type>"))?;
    let clause_type: NounClauseType = type_text
        .parse()
        .map_err(|_| Error::UnknownClauseType(type_text.to_string()))?;
    let mut base = parse_simple(node, Mood::Statement, None, None, Origin::Clause, ids)?;
    if clause_type.is_infinitive() != base.subjects.is_empty() {
        return Err(Error::schema(
            "noun_clause/subject",
            format!(
                "a {clause_type} clause {} a subject",
                if clause_type.is_infinitive() { "cannot have" } else { "needs" }
            ),
        ));
    }
    append_or_not(&mut base, clause_type);
    let mut nc = NounClause {
        base,
        clause_type,
        parent,
        implied_text: String::new(),
        grammatical_role: role,
    };
    nc.implied_text = match clause_type {
        NounClauseType::QueryTo | NounClauseType::NormalTo => nc.base.core.text.clone(),
        _ => compute_implied(&nc, None, None, None)?.0,
    };
    Ok(nc)
}

/// The standalone question or statement a noun clause stands for. Infinitive
/// clauses take their implicit subject from `parent`.
pub fn implied_text(nc: &NounClause, parent: Option<&SimpleSentence>) -> Result<String> {
    let index = parent.and_then(|p| p.noun_clauses.iter().position(|c| c == nc));
    Ok(compute_implied(nc, index, parent, None)?.0)
}

fn parent_subject(parent: &SimpleSentence, implicit: Option<&NounPhrase>) -> Option<NounPhrase> {
    if let Some(s) = parent.subjects.first() {
        return Some(s.decapitalized());
    }
    if parent.core.mood == Mood::Order {
        return Some(implicit_order_subject(parent.id));
    }
    implicit.map(NounPhrase::decapitalized)
}

fn joiner(base: &SimpleSentence) -> &'static str {
    match base.verb_phrase_connector {
        Some(Connector::Or) => "or",
        _ => "and",
    }
}

fn basic(
    base: &SimpleSentence,
    subject: Option<NounPhrase>,
    vp: VerbPhrase,
    circumstances: &[Circumstance],
) -> Result<BasicSentence> {
    BasicSentence::new(Mood::Statement, subject, vp, circumstances.to_vec(), None).map(|mut bs| {
        bs.core.nlml = base.core.nlml.clone();
        bs
    })
}

/// Statement text for each verb phrase with the given subject, joined by
/// the clause's connector.
fn statements(
    base: &SimpleSentence,
    subject: Option<&NounPhrase>,
    vps: &[VerbPhrase],
    circumstances: &[Circumstance],
) -> Result<String> {
    let texts = vps
        .iter()
        .map(|vp| Ok(realize::realize_statement(&basic(base, subject.cloned(), vp.clone(), circumstances)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(texts.join(&format!(" {} ", joiner(base))))
}

fn questions(base: &SimpleSentence, subject: Option<&NounPhrase>, vps: &[VerbPhrase]) -> Result<String> {
    let texts = vps
        .iter()
        .map(|vp| {
            let q = realize::realize_question(&basic(base, subject.cloned(), vp.clone(), &base.circumstances)?);
            Ok(q.trim_end_matches('?').to_string())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("{}?", texts.join(&format!(" {} ", joiner(base)))))
}

fn holds_clause(vp: &VerbPhrase, index: usize) -> bool {
    vp.direct_object
        .iter()
        .chain(vp.indirect_object.iter())
        .any(|np| np.parts.iter().any(|p| p.clause.as_ref().is_some_and(|c| c.index == index)))
}

/// Verb words of an infinitive made finite after an object, by the verb
/// and tense of the host: obligation verbs give "should", a progressive
/// host gives a progressive, a perfect host a perfect, anything else "will".
fn normal_to_phrase(host: &VerbPhrase, vp: &VerbPhrase, subject: &NounPhrase) -> VerbPhrase {
    let mut words: Vec<String> = vp.verb_words.clone();
    if words.first().is_some_and(|w| w.eq_ignore_ascii_case("to")) {
        words.remove(0);
    }
    if words.is_empty() {
        words.push(vp.lemma().to_string());
    }
    let (p, n) = (subject.personality, subject.number);
    let (lead, tense) = if OBLIGATION_VERBS.contains(&host.lemma().to_lowercase().as_str()) {
        ("should".to_string(), "future")
    } else if host.tense.contains("progressive") {
        words[0] = morph::present_participle(&words[0]);
        (morph::be_present(p, n).to_string(), "progressive")
    } else if host.tense.contains("perfect") {
        words[0] = morph::past_participle(&words[0]);
        (morph::have_present(p, n).to_string(), "perfect")
    } else {
        ("will".to_string(), "future")
    };
    words.insert(0, lead);
    let mut out = vp.clone();
    out.verb_words = words;
    out.tense = tense.into();
    out.personality = p;
    out.number = n;
    out.refresh();
    out
}

/// Implied text of `nc`, and the implicit subject to pass on to clauses
/// nested inside it.
fn compute_implied(
    nc: &NounClause,
    index: Option<usize>,
    parent: Option<&SimpleSentence>,
    implicit: Option<&NounPhrase>,
) -> Result<(String, Option<NounPhrase>)> {
    let base = &nc.base;
    match nc.clause_type {
        NounClauseType::That | NounClauseType::Whether | NounClauseType::WhetherOrNot => {
            Ok((base.core.text.clone(), None))
        }
        NounClauseType::QueryClause => {
            Ok((questions(base, base.subjects.first(), &base.verb_phrases)?, None))
        }
        NounClauseType::QueryTo => {
            let subject = match nc.grammatical_role {
                GrammaticalRole::Subject => NounPhrase::simple("a person", base.id),
                _ => parent
                    .and_then(|p| parent_subject(p, implicit))
                    .ok_or(Error::MissingParent)?,
            };
            let vps: Vec<VerbPhrase> = base
                .verb_phrases
                .iter()
                .map(|vp| vp.finite(subject.personality, subject.number))
                .collect();
            Ok((questions(base, Some(&subject), &vps)?, Some(subject)))
        }
        NounClauseType::NormalTo => {
            let parent = parent.ok_or(Error::MissingParent)?;
            let index = index.or_else(|| parent.noun_clauses.iter().position(|c| c == nc));
            let host = index.and_then(|i| parent.verb_phrases.iter().find(|vp| holds_clause(vp, i)));
            match host.and_then(|h| h.indirect_object.as_ref().map(|o| (h, o))) {
                Some((host, object)) => {
                    let subject = object.nominative().decapitalized();
                    let vps: Vec<VerbPhrase> = base
                        .verb_phrases
                        .iter()
                        .map(|vp| normal_to_phrase(host, vp, &subject))
                        .collect();
                    Ok((
                        statements(base, Some(&subject), &vps, &base.circumstances)?,
                        Some(subject),
                    ))
                }
                // After a mental-state verb the infinitive has no standalone
                // reading; its subject is the host's subject.
                None => Ok((base.core.text.clone(), parent_subject(parent, implicit))),
            }
        }
    }
}

/// Recomputes the implied texts of all clauses under `ss`, top-down, so
/// that infinitive clauses can borrow the subject of their host.
pub(crate) fn resolve_implied(ss: &mut SimpleSentence, implicit: Option<&NounPhrase>) -> Result<()> {
    for i in 0..ss.noun_clauses.len() {
        let (text, subject) = compute_implied(&ss.noun_clauses[i], Some(i), Some(ss), implicit)?;
        let nc = &mut ss.noun_clauses[i];
        nc.implied_text = text;
        resolve_implied(&mut nc.base, subject.as_ref())?;
    }
    for rc in &mut ss.relative_clauses {
        let subject = rc.modified_noun_phrase.clone();
        resolve_implied(&mut rc.base, subject.as_ref())?;
    }
    Ok(())
}

fn query_word_of(np: &NounPhrase) -> Option<String> {
    let part = np.parts.iter().find(|p| p.is_query())?;
    if morph::is_query_word(&part.kernel) {
        Some(part.kernel.clone())
    } else {
        part.query_determiner().map(str::to_string)
    }
}

fn find_relative_word(base: &SimpleSentence) -> Option<String> {
    if let Some(w) = base.subjects.iter().find_map(query_word_of) {
        return Some(w);
    }
    for vp in &base.verb_phrases {
        if let Some(w) = vp
            .direct_object
            .iter()
            .chain(vp.indirect_object.iter())
            .find_map(query_word_of)
        {
            return Some(w);
        }
    }
    if let Some(w) = base.circumstances.iter().find_map(|c| c.query_adv.clone()) {
        return Some(w);
    }
    base.circumstances
        .iter()
        .find_map(|c| c.query_prep_phrase().and_then(|p| query_word_of(&p.object_np)))
}

fn terse_kind_of(vp: &VerbPhrase) -> TerseKind {
    let infinitive = vp.tense == "future"
        || vp.tense == "infinitive"
        || vp.verb_words.first().is_some_and(|w| w.eq_ignore_ascii_case("to"));
    match (vp.voice, infinitive) {
        (Voice::Passive, true) => TerseKind::PassiveInfinitive,
        (Voice::Passive, false) => TerseKind::PastParticiple,
        _ => TerseKind::PresentParticiple,
    }
}

/// Parses a `relative_clause` element lifted out of the sentence `parent`.
/// A clause with a subject is full, otherwise terse.
pub fn parse_relative_clause(
    node: &MarkupNode,
    parent: SentenceId,
    ids: &mut SentenceIds,
) -> Result<RelativeClause> {
    let base = parse_simple(node, Mood::Statement, None, None, Origin::Clause, ids)?;
    let form = if base.subjects.is_empty() {
        RelativeForm::Terse
    } else {
        RelativeForm::Full
    };
    let relative_word = match form {
        RelativeForm::Full => find_relative_word(&base),
        RelativeForm::Terse => None,
    }
    .unwrap_or_else(|| "which".to_string());
    let terse_kind = match form {
        RelativeForm::Terse => Some(terse_kind_of(&base.verb_phrases[0])),
        RelativeForm::Full => None,
    };
    Ok(RelativeClause {
        base,
        form,
        relative_word,
        modified_noun_phrase: None,
        terse_kind,
        implied_statement: String::new(),
        parent,
    })
}

/// Replaces the query part of `target` by `np`. A possessive query
/// determiner ("whose book") becomes a possessive ("the man's book").
fn replace_query(target: &NounPhrase, np: &NounPhrase) -> Option<NounPhrase> {
    let idx = target.parts.iter().position(|p| p.is_query())?;
    let part = &target.parts[idx];
    if !morph::is_query_word(&part.kernel)
        && part
            .query_determiner()
            .is_some_and(|d| d.eq_ignore_ascii_case("whose"))
    {
        let mut out = target.clone();
        for m in &mut out.parts[idx].pre_modifiers {
            if matches!(m, PreModifier::Determiner(d) if d.eq_ignore_ascii_case("whose")) {
                *m = PreModifier::Determiner(format!("{}'s", np.render()));
            }
        }
        out.refresh();
        return Some(out);
    }
    if target.parts.len() == 1 {
        let mut out = np.clone();
        out.case = target.case;
        out.refresh();
        return Some(out);
    }
    let mut parts = target.parts.clone();
    parts.splice(idx..=idx, np.parts.iter().cloned());
    Some(NounPhrase::from_parts(
        parts,
        target.part_connector,
        target.core.parent,
        target.case,
    ))
}

fn substitute(base: &SimpleSentence, np: &NounPhrase) -> Result<String> {
    let mut subjects = base.subjects.clone();
    let mut vps = base.verb_phrases.clone();
    let mut circs = base.circumstances.clone();

    let mut done = false;
    for s in &mut subjects {
        if let Some(new) = replace_query(s, np) {
            *s = new;
            done = true;
            break;
        }
    }
    if !done {
        'vps: for vp in &mut vps {
            for obj in [&mut vp.direct_object, &mut vp.indirect_object].into_iter().flatten() {
                if let Some(new) = replace_query(obj, np) {
                    *obj = new;
                    done = true;
                    break;
                }
            }
            if done {
                vp.refresh();
                break 'vps;
            }
        }
    }
    if !done {
        if let Some(i) = circs.iter().position(|c| c.query_adv.is_some()) {
            let word = circs[i].query_adv.as_deref().unwrap_or_default().to_lowercase();
            let prep = match word.as_str() {
                "when" => "at",
                "why" => "for",
                _ => "in",
            };
            let attribute = circs[i].attribute;
            circs.remove(i);
            circs.push(Circumstance::from_prep_phrase(
                PrepPhrase::new(prep, np.clone()),
                attribute,
            ));
            done = true;
        }
    }
    if !done {
        for c in &mut circs {
            if let CircumstancePayload::PrepPhrase(p) = &mut c.payload {
                if p.has_query_object() {
                    if let Some(new) = replace_query(&p.object_np, np) {
                        p.object_np = new;
                        p.refresh();
                        done = true;
                    }
                }
            }
            if done {
                c.core.text = c.render();
                break;
            }
        }
    }
    if !done {
        // No relative word: it stood for the missing direct object
        // ("the book you read").
        if let Some(vp) = vps.first_mut() {
            let takes_object = matches!(
                vp.verb_type,
                VerbType::Transitive | VerbType::Ditransitive | VerbType::MentalTo
            );
            if vp.direct_object.is_none() && takes_object {
                let mut object = np.clone();
                object.case = Case::Acc;
                vp.direct_object = Some(object);
                vp.refresh();
            }
        }
    }
    statements(base, subjects.first(), &vps, &circs)
}

fn terse_phrase(vp: &VerbPhrase, kind: TerseKind, np: &NounPhrase) -> VerbPhrase {
    let (p, n) = (np.personality, np.number);
    let mut words = vp.verb_words.clone();
    let (lead, tense) = match kind {
        TerseKind::PresentParticiple => (morph::be_present(p, n).to_string(), "progressive"),
        TerseKind::PastParticiple => (morph::be_past(p, n).to_string(), "past"),
        TerseKind::PassiveInfinitive => {
            if words.first().is_some_and(|w| w.eq_ignore_ascii_case("to")) {
                words.remove(0);
            }
            ("should".to_string(), "future")
        }
    };
    words.insert(0, lead);
    let mut out = vp.clone();
    out.verb_words = words;
    out.tense = tense.into();
    out.personality = p;
    out.number = n;
    out.refresh();
    out
}

/// The statement a relative clause implies about the noun phrase it
/// modifies: the relative word is replaced by that phrase, or, for a terse
/// clause, the phrase becomes the subject.
pub fn implied_statement(rc: &RelativeClause) -> Result<String> {
    let np = rc
        .modified_noun_phrase
        .as_ref()
        .ok_or(Error::MissingModifiedNp)?
        .decapitalized();
    match (rc.form, rc.terse_kind) {
        (RelativeForm::Terse, Some(kind)) => {
            let vps: Vec<VerbPhrase> = rc
                .base
                .verb_phrases
                .iter()
                .map(|vp| terse_phrase(vp, kind, &np))
                .collect();
            statements(&rc.base, Some(&np), &vps, &rc.base.circumstances)
        }
        _ => substitute(&rc.base, &np),
    }
}

/// One clause with its surface and implied text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImpliedLine {
    /// `noun_clause:<type>` or `relative_clause:<form>`.
    pub kind: String,
    pub text: String,
    pub implied: String,
}

fn collect_lines(ss: &SimpleSentence, out: &mut Vec<ImpliedLine>) {
    for nc in &ss.noun_clauses {
        out.push(ImpliedLine {
            kind: format!("noun_clause:{}", nc.clause_type),
            text: nc.surface_text(),
            implied: nc.implied_text.clone(),
        });
        collect_lines(&nc.base, out);
    }
    for rc in &ss.relative_clauses {
        out.push(ImpliedLine {
            kind: format!("relative_clause:{}", rc.form),
            text: rc.surface_text(),
            implied: rc.implied_statement.clone(),
        });
        collect_lines(&rc.base, out);
    }
}

/// Every clause of the sentence, outer clauses before the ones nested in
/// them.
pub fn implied_lines(sentence: &Sentence) -> Vec<ImpliedLine> {
    let mut out = Vec::new();
    for ss in sentence.simple_sentences() {
        collect_lines(ss, &mut out);
    }
    out
}
