use serde::{Deserialize, Serialize};

use super::{
    enum_child, join_tokens, parse_noun_phrase, parse_predicate, NounPhrase, PhraseCore,
    PhraseCtx, PredicatePhrase,
};
use crate::error::{Error, Result};
use crate::markup::MarkupNode;
use crate::morph;
use crate::vocab::{Connector, Number, Person, VerbType, Voice};

/// Object or predicate slot of a verb phrase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementSlot {
    IndirectObject,
    DirectObject,
    Predicate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerbPhrase {
    pub core: PhraseCore,
    pub personality: Person,
    pub number: Number,
    pub voice: Voice,
    pub tense: String,
    pub kernel_tense: String,
    pub verb_type: VerbType,
    pub verb_words: Vec<String>,
    pub direct_object: Option<NounPhrase>,
    pub indirect_object: Option<NounPhrase>,
    pub predicate: Option<PredicatePhrase>,
    pub neg: Option<String>,
}

/// Verb words with the negation placed, and the index where a mid-position
/// circumstance goes.
pub(crate) struct VerbTokens {
    pub words: Vec<String>,
    pub mid: usize,
}

/// A verb phrase taken apart for subject-auxiliary inversion.
pub(crate) struct Inversion {
    pub aux: String,
    pub neg: Option<String>,
    pub rest: Vec<String>,
}

impl VerbPhrase {
    pub fn is_past(&self) -> bool {
        self.tense.starts_with("past") || self.kernel_tense == "past"
    }

    pub fn heads_with_auxiliary(&self) -> bool {
        morph::heads_with_auxiliary(&self.verb_words)
    }

    /// Base form of the main verb.
    pub fn lemma(&self) -> &str {
        &self.core.kernel
    }

    pub(crate) fn verb_tokens(&self) -> VerbTokens {
        let mut words = Vec::with_capacity(self.verb_words.len() + 1);
        if self.heads_with_auxiliary() {
            words.push(self.verb_words[0].clone());
            words.extend(self.neg.iter().cloned());
            let mid = words.len();
            words.extend(self.verb_words[1..].iter().cloned());
            VerbTokens { words, mid }
        } else {
            words.extend(self.neg.iter().cloned());
            let mid = words.len();
            words.extend(self.verb_words.iter().cloned());
            VerbTokens { words, mid }
        }
    }

    /// Rendered objects and predicate in surface order, leaving out `skip`.
    pub fn complements(&self, skip: Option<ComplementSlot>) -> Vec<String> {
        let mut out = Vec::new();
        if skip != Some(ComplementSlot::IndirectObject) {
            out.extend(self.indirect_object.as_ref().map(NounPhrase::render));
        }
        if skip != Some(ComplementSlot::DirectObject) {
            out.extend(self.direct_object.as_ref().map(NounPhrase::render));
        }
        if skip != Some(ComplementSlot::Predicate) {
            out.extend(self.predicate.as_ref().map(PredicatePhrase::render));
        }
        out
    }

    pub fn render(&self) -> String {
        join_tokens(
            self.verb_tokens()
                .words
                .into_iter()
                .chain(self.complements(None)),
        )
    }

    /// The first object or predicate that is a query, with its slot.
    pub fn query_complement(&self) -> Option<(ComplementSlot, String)> {
        if let Some(q) = self.direct_object.as_ref().and_then(|n| n.core.query_text.clone()) {
            return Some((ComplementSlot::DirectObject, q));
        }
        if let Some(q) = self.indirect_object.as_ref().and_then(|n| n.core.query_text.clone()) {
            return Some((ComplementSlot::IndirectObject, q));
        }
        self.predicate
            .as_ref()
            .and_then(PredicatePhrase::query_text)
            .map(|q| (ComplementSlot::Predicate, q))
    }

    /// Takes the phrase apart around its auxiliary, using do-support when
    /// the first verb word cannot invert.
    pub(crate) fn inversion(&self) -> Inversion {
        if self.heads_with_auxiliary() {
            return Inversion {
                aux: self.verb_words[0].clone(),
                neg: self.neg.clone(),
                rest: self.verb_words[1..].to_vec(),
            };
        }
        let mut rest = vec![morph::match_case("x", self.lemma())];
        rest.extend(self.verb_words.iter().skip(1).cloned());
        match &self.neg {
            // A contracted negation already carries do-support ("don't").
            Some(neg) if neg.ends_with("n't") => Inversion {
                aux: neg.clone(),
                neg: None,
                rest,
            },
            neg => Inversion {
                aux: morph::do_form(self.personality, self.number, self.is_past()).to_string(),
                neg: neg.clone(),
                rest,
            },
        }
    }

    /// Re-inflects the finite verb word to agree with a new subject.
    pub fn agree(&self, person: Person, number: Number) -> VerbPhrase {
        let mut vp = self.clone();
        vp.personality = person;
        vp.number = number;
        if let Some(head) = vp.verb_words.first().cloned() {
            let lower = head.to_lowercase();
            let multi = vp.verb_words.len() > 1;
            let new = match lower.as_str() {
                "am" | "is" | "are" => Some(morph::be_present(person, number).to_string()),
                "was" | "were" => Some(morph::be_past(person, number).to_string()),
                "has" | "have" if multi => Some(morph::have_present(person, number).to_string()),
                "do" | "does" if multi => Some(morph::do_form(person, number, false).to_string()),
                _ if morph::is_modal(&lower) || lower == "to" || lower == "did" => None,
                _ if lower.ends_with("n't") => None,
                _ if vp.tense == "present" && !vp.is_past() => {
                    let base = morph::base_form(&head, false).lemma;
                    Some(morph::present_form(&base, person, number))
                }
                _ => None,
            };
            if let Some(word) = new {
                vp.verb_words[0] = morph::match_case(&head, &word);
            }
        }
        vp.refresh();
        vp
    }

    /// Turns an infinitive ("to finish the work") into a present-tense
    /// finite phrase agreeing with the given subject.
    pub fn finite(&self, person: Person, number: Number) -> VerbPhrase {
        let mut vp = self.clone();
        if vp.verb_words.first().is_some_and(|w| w.eq_ignore_ascii_case("to")) {
            vp.verb_words.remove(0);
        }
        if vp.verb_words.is_empty() {
            vp.verb_words.push(vp.lemma().to_string());
        }
        vp.tense = "present".into();
        if vp.kernel_tense == "to_infinitive" {
            vp.kernel_tense = "base".into();
        }
        vp.agree(person, number)
    }

    pub fn refresh(&mut self) {
        if let Some(d) = &mut self.direct_object {
            d.refresh();
        }
        if let Some(i) = &mut self.indirect_object {
            i.refresh();
        }
        self.core.text = self.render();
        let guess = if self.core.description.contains("(base form guessed)") {
            " (base form guessed)"
        } else {
            ""
        };
        self.core.description = format!(
            "verb phrase ({}, {} {}, {}, {}): {}{guess}",
            self.verb_type, self.personality, self.number, self.voice, self.tense, self.core.text
        );
    }
}

/// Query text of the verb phrase: its direct object, indirect object or
/// predicate, searched in that order.
pub fn get_verb_query_text(vp: &VerbPhrase) -> Option<String> {
    vp.query_complement().map(|(_, q)| q)
}

/// `(aux, remainder)` for a question: the fronting auxiliary and the verb
/// words and complements following the subject.
pub fn split_auxiliary(vp: &VerbPhrase) -> (String, Vec<String>) {
    let inv = vp.inversion();
    let mut rest: Vec<String> = inv.neg.into_iter().collect();
    rest.extend(inv.rest);
    rest.extend(vp.complements(None));
    (inv.aux, rest)
}

/// Adds one negation to the verb phrase: "not" after a leading auxiliary,
/// otherwise do-support ("comes" becomes "does not come").
pub fn negate_verb_phrase(vp: &VerbPhrase) -> VerbPhrase {
    let mut out = vp.clone();
    if let Some(existing) = &vp.neg {
        out.neg = Some(format!("not {existing}"));
    } else if vp.heads_with_auxiliary() {
        out.neg = Some("not".into());
    } else {
        let head = &vp.verb_words[0];
        let aux = morph::do_form(vp.personality, vp.number, vp.is_past());
        let mut words = vec![
            morph::match_case(head, aux),
            morph::match_case("x", vp.lemma()),
        ];
        words.extend(vp.verb_words.iter().skip(1).cloned());
        out.verb_words = words;
        out.neg = Some("not".into());
    }
    out.refresh();
    out
}

fn inherited_enum<T>(node: &MarkupNode, inherited: Option<&MarkupNode>, tag: &str) -> Result<Option<T>>
where
    T: std::str::FromStr<Err = crate::vocab::UnknownValue>,
{
    match (node.child_text(tag), inherited) {
        (None, Some(parent)) => enum_child(parent, tag),
        _ => enum_child(node, tag),
    }
}

fn parse_single(
    node: &MarkupNode,
    inherited: Option<&MarkupNode>,
    ctx: &mut PhraseCtx<'_>,
) -> Result<VerbPhrase> {
    let read = |tag: &str| {
        node.child_text(tag)
            .or_else(|| inherited.and_then(|i| i.child_text(tag)))
    };
    let personality = inherited_enum(node, inherited, "pers")?.unwrap_or(Person::Third);
    let number = inherited_enum(node, inherited, "numb")?.unwrap_or(Number::Sing);
    let voice = inherited_enum(node, inherited, "voice")?.unwrap_or(Voice::Active);
    let tense = read("tense").unwrap_or("present").to_string();
    let kernel_tense = read("kernel_tense").unwrap_or_default().to_string();
    let declared: Option<VerbType> = inherited_enum(node, inherited, "verb_type")?;

    let direct_object = node
        .child("direct_object")
        .map(|n| parse_noun_phrase(n, ctx))
        .transpose()?;
    let indirect_object = node
        .child("indirect_object")
        .map(|n| parse_noun_phrase(n, ctx))
        .transpose()?;
    let predicate = node
        .child("predicate")
        .map(|n| parse_predicate(n, ctx))
        .transpose()?;
    let verb_type = declared.unwrap_or(if predicate.is_some() {
        VerbType::Be
    } else if indirect_object.is_some() {
        VerbType::Ditransitive
    } else if direct_object.is_some() {
        VerbType::Transitive
    } else {
        VerbType::Intransitive
    });
    let mismatch = |msg: &str| Err(Error::schema(&node.tag, format!("{verb_type} verb phrase {msg}")));
    match verb_type {
        VerbType::Be | VerbType::Link if predicate.is_none() => return mismatch("requires a predicate"),
        VerbType::Ditransitive if direct_object.is_none() || indirect_object.is_none() => {
            return mismatch("requires a direct and an indirect object")
        }
        VerbType::MentalTo if direct_object.is_none() => {
            return mismatch("requires an infinitive object")
        }
        VerbType::Intransitive if direct_object.is_some() || indirect_object.is_some() => {
            return mismatch("cannot take an object")
        }
        _ => {}
    }

    let verb_words: Vec<String> = node
        .children_named("word")
        .map(|w| w.text.clone())
        .filter(|w| !w.is_empty())
        .collect();
    if verb_words.is_empty() {
        return Err(Error::schema(&node.tag, "verb phrase has no verb words"));
    }

    let (lemma, guessed) = match node.child_text("kernel") {
        Some(k) => (k.to_string(), false),
        None => {
            let past = tense.starts_with("past") || kernel_tense == "past";
            let main = if morph::heads_with_auxiliary(&verb_words) {
                verb_words.last().expect("non-empty")
            } else {
                &verb_words[0]
            };
            let main = if main.eq_ignore_ascii_case("to") {
                verb_words.get(1).unwrap_or(main)
            } else {
                main
            };
            let base = morph::base_form(main, past && !morph::heads_with_auxiliary(&verb_words));
            (base.lemma.to_lowercase(), base.guessed)
        }
    };

    let mut core = PhraseCore::from_node(node, ctx.parent);
    core.kind = verb_type.as_str().into();
    core.kernel = lemma;
    if guessed {
        core.description = "(base form guessed)".into();
    }
    let mut vp = VerbPhrase {
        core,
        personality,
        number,
        voice,
        tense,
        kernel_tense,
        verb_type,
        verb_words,
        direct_object,
        indirect_object,
        predicate,
        neg: node.child_text("neg").map(str::to_string),
    };
    vp.refresh();
    Ok(vp)
}

/// Parses a single `verb_phrase` or `verb_phrase_part`.
pub fn parse_verb_phrase(node: &MarkupNode, ctx: &mut PhraseCtx<'_>) -> Result<VerbPhrase> {
    if node.child("verb_phrase_part").is_some() {
        return Err(Error::schema(
            &node.tag,
            "verb phrase with parts must be read with parse_verb_phrases",
        ));
    }
    parse_single(node, None, ctx)
}

/// Parses a `verb_phrase` element into one or more verb phrases and the
/// connector joining them. Parts inherit agreement tags they do not state.
pub fn parse_verb_phrases(
    node: &MarkupNode,
    ctx: &mut PhraseCtx<'_>,
) -> Result<(Vec<VerbPhrase>, Option<Connector>)> {
    let connector: Option<Connector> = enum_child(node, "verb_phrase_connector")?;
    let parts: Vec<&MarkupNode> = node.children_named("verb_phrase_part").collect();
    if parts.is_empty() {
        if connector.is_some() {
            return Err(Error::schema(&node.tag, "connector without verb phrase parts"));
        }
        return Ok((vec![parse_single(node, None, ctx)?], None));
    }
    match (parts.len(), connector) {
        (1, None) => {}
        (n, Some(_)) if n >= 2 => {}
        (n, c) => {
            return Err(Error::schema(
                &node.tag,
                format!("{n} verb phrase part(s) with connector {c:?}"),
            ))
        }
    }
    let vps = parts
        .into_iter()
        .map(|p| parse_single(p, Some(node), ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok((vps, connector))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markup::parse_markup;
    use crate::phrase::SentenceId;

    fn vp(doc: &str) -> VerbPhrase {
        let node = parse_markup(doc).unwrap().children.remove(0);
        parse_verb_phrase(&node, &mut PhraseCtx::detached(SentenceId(0))).unwrap()
    }

    #[test]
    fn intransitive_come() {
        let v = vp("<verb_phrase><numb>sing</numb><pers>first</pers><tense>present</tense>\
                    <verb_type>intransitive</verb_type><word>come</word></verb_phrase>");
        assert_eq!(v.verb_words, ["come"]);
        assert_eq!(v.tense, "present");
        assert_eq!(v.verb_type, VerbType::Intransitive);
        assert_eq!(v.lemma(), "come");
    }

    #[test]
    fn be_with_predicate_adjective() {
        let v = vp("<verb_phrase><verb_type>be</verb_type><predicate><type>adjective</type>\
                    <adj><word>happy</word></adj></predicate><word>is</word></verb_phrase>");
        assert!(v.predicate.is_some());
        assert!(v.direct_object.is_none());
        assert_eq!(v.render(), "is happy");
    }

    #[test]
    fn be_without_predicate_is_rejected() {
        let node = parse_markup("<verb_phrase><verb_type>be</verb_type><word>is</word></verb_phrase>")
            .unwrap()
            .children
            .remove(0);
        assert!(parse_verb_phrase(&node, &mut PhraseCtx::detached(SentenceId(0))).is_err());
    }

    #[test]
    fn met_the_man() {
        let v = vp("<verb_phrase><tense>past</tense><verb_type>transitive</verb_type>\
                    <direct_object><noun><article>the</article><word>man</word></noun></direct_object>\
                    <word>met</word></verb_phrase>");
        assert_eq!(v.direct_object.as_ref().unwrap().render(), "the man");
        assert_eq!(v.lemma(), "meet");
        assert_eq!(v.render(), "met the man");
    }

    #[test]
    fn verb_query_text() {
        let v = vp("<verb_phrase><verb_type>transitive</verb_type><direct_object><noun>\
                    <type>query</type><word>what</word></noun></direct_object><word>do</word></verb_phrase>");
        assert_eq!(get_verb_query_text(&v).as_deref(), Some("what"));
        let v = vp("<verb_phrase><word>come</word></verb_phrase>");
        assert_eq!(get_verb_query_text(&v), None);
        let v = vp("<verb_phrase><verb_type>be</verb_type><predicate><type>noun_phrase</type>\
                    <np><noun><determiner>whose</determiner><word>book</word></noun></np></predicate>\
                    <word>is</word></verb_phrase>");
        assert_eq!(get_verb_query_text(&v).as_deref(), Some("whose book"));
    }

    #[test]
    fn split_auxiliary_cases() {
        let v = vp("<verb_phrase><word>will</word><word>come</word></verb_phrase>");
        assert_eq!(split_auxiliary(&v), ("will".to_string(), vec!["come".to_string()]));
        let v = vp("<verb_phrase><verb_type>be</verb_type><predicate><type>adjective</type>\
                    <adj><word>happy</word></adj></predicate><word>is</word></verb_phrase>");
        assert_eq!(split_auxiliary(&v).0, "is");
        let v = vp("<verb_phrase><numb>sing</numb><pers>first</pers><word>do</word></verb_phrase>");
        assert_eq!(split_auxiliary(&v), ("do".to_string(), vec!["do".to_string()]));
        let v = vp("<verb_phrase><tense>past</tense><word>went</word></verb_phrase>");
        assert_eq!(split_auxiliary(&v), ("did".to_string(), vec!["go".to_string()]));
    }

    #[test]
    fn negation() {
        let v = vp("<verb_phrase><word>will</word><word>go</word></verb_phrase>");
        assert_eq!(negate_verb_phrase(&v).render(), "will not go");
        let v = vp("<verb_phrase><numb>sing</numb><pers>third</pers><word>comes</word></verb_phrase>");
        assert_eq!(negate_verb_phrase(&v).render(), "does not come");
        let v = vp("<verb_phrase><verb_type>be</verb_type><predicate><type>adjective</type>\
                    <adj><word>happy</word></adj></predicate><word>is</word></verb_phrase>");
        assert_eq!(negate_verb_phrase(&v).render(), "is not happy");
    }

    #[test]
    fn agreement_after_split() {
        let v = vp("<verb_phrase><numb>plur</numb><pers>third</pers><word>sing</word></verb_phrase>");
        assert_eq!(v.agree(Person::Third, Number::Sing).render(), "sings");
        let v = vp("<verb_phrase><numb>plur</numb><word>are</word><word>here</word></verb_phrase>");
        assert_eq!(v.agree(Person::Third, Number::Sing).verb_words[0], "is");
        let v = vp("<verb_phrase><word>will</word><word>come</word></verb_phrase>");
        assert_eq!(v.agree(Person::First, Number::Sing).render(), "will come");
    }

    #[test]
    fn parts_inherit_agreement() {
        let node = parse_markup(
            "<verb_phrase><numb>plur</numb><pers>third</pers><verb_phrase_connector>or</verb_phrase_connector>\
             <verb_phrase_part><word>sing</word></verb_phrase_part>\
             <verb_phrase_part><word>dance</word></verb_phrase_part></verb_phrase>",
        )
        .unwrap()
        .children
        .remove(0);
        let (vps, c) = parse_verb_phrases(&node, &mut PhraseCtx::detached(SentenceId(0))).unwrap();
        assert_eq!(c, Some(Connector::Or));
        assert_eq!(vps.len(), 2);
        assert_eq!(vps[1].number, Number::Plur);
        assert_eq!(vps[1].render(), "dance");
    }

    #[test]
    fn infinitive_made_finite() {
        let v = vp("<verb_phrase><tense>infinitive</tense><word>to</word><word>finish</word></verb_phrase>");
        assert_eq!(v.lemma(), "finish");
        assert_eq!(v.finite(Person::Third, Number::Sing).render(), "finishes");
    }
}
