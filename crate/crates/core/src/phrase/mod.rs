//! Phrase classes: adverbs, adjectives, circumstances, prepositional,
//! noun, predicate and verb phrases.
//!
//! Every phrase is built from a markup subtree and remembers the source
//! fragment, its realised text and a short description. Phrases point back
//! to their host simple sentence through a [`SentenceId`].

mod noun;
mod verb;

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clause::{NounClause, RelativeClause};
use crate::error::{Error, Result};
use crate::markup::MarkupNode;
use crate::morph;
use crate::vocab::{
    Attribute, CircumstanceKind, ComparativeConnector, Connector, Grad, Position, PredicateKind,
    UnknownValue,
};

pub use noun::{get_query_text, parse_noun_phrase, NounPart, NounPhrase, PostModifier, PreModifier};
pub use verb::{
    get_verb_query_text, negate_verb_phrase, parse_verb_phrase, parse_verb_phrases, split_auxiliary, ComplementSlot,
    VerbPhrase,
};

/// Identifier of a simple sentence within one parsed document.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SentenceId(pub u32);

/// Attributes shared by all phrases.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhraseCore {
    pub nlml: String,
    pub text: String,
    pub description: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub part_connector: Option<Connector>,
    pub kernel: String,
    pub query_text: Option<String>,
    pub parent: SentenceId,
}

impl PhraseCore {
    fn from_node(node: &MarkupNode, parent: SentenceId) -> Self {
        PhraseCore {
            nlml: node.to_markup(),
            parent,
            ..PhraseCore::default()
        }
    }
}

/// Reference from a phrase to a clause lifted out of the host sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseRef {
    pub index: usize,
    pub text: String,
    /// Set for query clauses ("what to do next").
    pub query: bool,
}

/// Parsing context: the host sentence and the clauses already lifted out
/// of it, which placeholders in the subtree refer to by index.
pub struct PhraseCtx<'a> {
    pub parent: SentenceId,
    pub noun_clauses: &'a [NounClause],
    pub relative_clauses: &'a mut [RelativeClause],
}

impl PhraseCtx<'static> {
    /// A context for subtrees that contain no clause placeholders.
    pub fn detached(parent: SentenceId) -> Self {
        PhraseCtx {
            parent,
            noun_clauses: &[],
            relative_clauses: &mut [],
        }
    }
}

impl PhraseCtx<'_> {
    fn noun_clause_ref(&self, node: &MarkupNode) -> Result<ClauseRef> {
        let index = placeholder_index(node)?;
        let clause = self.noun_clauses.get(index).ok_or_else(|| {
            Error::schema(&node.tag, format!("no noun clause with index {index}"))
        })?;
        Ok(ClauseRef {
            index,
            text: clause.surface_text(),
            query: clause.clause_type.is_query(),
        })
    }
}

fn placeholder_index(node: &MarkupNode) -> Result<usize> {
    node.text
        .parse()
        .map_err(|_| Error::schema(&node.tag, format!("bad placeholder index {:?}", node.text)))
}

pub(crate) fn enum_child<T>(node: &MarkupNode, tag: &str) -> Result<Option<T>>
where
    T: FromStr<Err = UnknownValue>,
{
    match node.child_text(tag) {
        None => Ok(None),
        Some(text) => text
            .parse()
            .map(Some)
            .map_err(|e: UnknownValue| Error::schema(format!("{}/{}", node.tag, tag), e.to_string())),
    }
}

pub(crate) fn required_text<'a>(node: &'a MarkupNode, tag: &str) -> Result<&'a str> {
    node.child_text(tag)
        .ok_or_else(|| Error::schema(&node.tag, format!("<{}> requires <{}>", node.tag, tag)))
}

pub(crate) fn join_tokens<I, S>(tokens: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut out = String::new();
    for token in tokens {
        let t = token.as_ref().trim();
        if t.is_empty() {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(t);
    }
    out
}

const EXTENT_TYPES: &[&str] = &["so_that", "so_as", "enough_to", "too_to", "adv_than"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adverb {
    pub core: PhraseCore,
    pub grad: Grad,
    pub extent_np: Option<NounPhrase>,
}

impl Adverb {
    pub fn word(&self) -> &str {
        &self.core.kernel
    }

    pub fn render(&self) -> String {
        let word = self.word();
        let Some(np) = &self.extent_np else {
            return word.to_string();
        };
        let np = np.render();
        match self.core.kind.as_str() {
            "so_that" => join_tokens(["so", word, "that", &np]),
            "so_as" => join_tokens(["so", word, "as", &np]),
            "enough_to" => join_tokens([word, "enough", &np]),
            "too_to" => join_tokens(["too", word, &np]),
            _ => join_tokens([word, "than", &np]),
        }
    }
}

pub fn parse_adverb(node: &MarkupNode, ctx: &mut PhraseCtx<'_>) -> Result<Adverb> {
    let kind = node.child_text("type").unwrap_or("plain").to_string();
    let word = required_text(node, "word")?.to_string();
    let grad = enum_child(node, "grad")?.unwrap_or(Grad::Abso);
    let extent_np = match node.child("np") {
        Some(np) => Some(parse_noun_phrase(np, ctx)?),
        None => None,
    };
    if EXTENT_TYPES.contains(&kind.as_str()) != extent_np.is_some() {
        return Err(Error::schema(
            "adv",
            format!("adverb of type {kind:?} {} a compared noun phrase", if extent_np.is_some() { "cannot take" } else { "needs" }),
        ));
    }
    let mut core = PhraseCore::from_node(node, ctx.parent);
    core.query_text = morph::is_query_adverb(&word).then(|| word.clone());
    core.kernel = word;
    core.kind = kind;
    let mut adv = Adverb {
        core,
        grad,
        extent_np,
    };
    adv.core.text = adv.render();
    adv.core.description = format!("adverb ({}, {}): {}", adv.core.kind, adv.grad, adv.core.text);
    Ok(adv)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adjective {
    pub core: PhraseCore,
    pub grad: Grad,
    pub advs: Vec<Adverb>,
}

impl Adjective {
    pub fn render(&self) -> String {
        join_tokens(
            self.advs
                .iter()
                .map(Adverb::render)
                .chain(std::iter::once(self.core.kernel.clone())),
        )
    }

    pub(crate) fn first_word_mut(&mut self) -> &mut String {
        match self.advs.first_mut() {
            Some(adv) => &mut adv.core.kernel,
            None => &mut self.core.kernel,
        }
    }

    pub(crate) fn refresh(&mut self) {
        for adv in &mut self.advs {
            adv.core.text = adv.render();
        }
        self.core.text = self.render();
    }
}

pub fn parse_adjective(node: &MarkupNode, ctx: &mut PhraseCtx<'_>) -> Result<Adjective> {
    let word = required_text(node, "word")?.to_string();
    let grad = enum_child(node, "grad")?.unwrap_or(Grad::Abso);
    let advs = node
        .children_named("adv")
        .map(|a| parse_adverb(a, ctx))
        .collect::<Result<Vec<_>>>()?;
    let mut core = PhraseCore::from_node(node, ctx.parent);
    core.kind = "adjective".into();
    core.kernel = word;
    let mut adj = Adjective { core, grad, advs };
    adj.core.text = adj.render();
    adj.core.description = format!("adjective ({}): {}", adj.grad, adj.core.text);
    Ok(adj)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrepPhrase {
    pub core: PhraseCore,
    pub prep: String,
    pub object_np: NounPhrase,
}

impl PrepPhrase {
    pub fn new(prep: &str, object_np: NounPhrase) -> Self {
        let core = PhraseCore {
            kind: "prep_phrase".into(),
            kernel: prep.to_string(),
            parent: object_np.core.parent,
            ..PhraseCore::default()
        };
        let mut pp = PrepPhrase {
            core,
            prep: prep.to_string(),
            object_np,
        };
        pp.core.text = pp.render();
        pp.core.description = format!("prepositional phrase: {}", pp.core.text);
        pp
    }

    pub fn render(&self) -> String {
        join_tokens([self.prep.as_str(), &self.object_np.render()])
    }

    /// Whether the object of the preposition is a query word ("with whom").
    pub fn has_query_object(&self) -> bool {
        self.object_np.core.query_text.is_some()
    }

    pub(crate) fn refresh(&mut self) {
        self.object_np.refresh();
        self.core.text = self.render();
    }
}

pub fn parse_prep_phrase(node: &MarkupNode, ctx: &mut PhraseCtx<'_>) -> Result<PrepPhrase> {
    let prep = required_text(node, "prep")?.to_string();
    let np = node
        .child("np")
        .ok_or_else(|| Error::schema("prep_phrase", "<prep_phrase> requires <np>"))?;
    let object_np = parse_noun_phrase(np, ctx)?;
    let mut core = PhraseCore::from_node(node, ctx.parent);
    core.kind = "prep_phrase".into();
    core.kernel = prep.clone();
    let mut pp = PrepPhrase {
        core,
        prep,
        object_np,
    };
    pp.core.text = pp.render();
    pp.core.description = format!("prepositional phrase: {}", pp.core.text);
    Ok(pp)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum CircumstancePayload {
    Adverb(Adverb),
    PrepPhrase(PrepPhrase),
    Clause(ClauseRef),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circumstance {
    pub core: PhraseCore,
    pub kind: CircumstanceKind,
    pub position: Position,
    pub attribute: Attribute,
    pub payload: CircumstancePayload,
    pub query_adv: Option<String>,
}

impl Circumstance {
    pub fn render(&self) -> String {
        match &self.payload {
            CircumstancePayload::Adverb(a) => a.render(),
            CircumstancePayload::PrepPhrase(p) => p.render(),
            CircumstancePayload::Clause(c) => c.text.clone(),
        }
    }

    /// A prepositional circumstance whose object is a query word.
    pub fn query_prep_phrase(&self) -> Option<&PrepPhrase> {
        match &self.payload {
            CircumstancePayload::PrepPhrase(p) if p.has_query_object() => Some(p),
            _ => None,
        }
    }

    /// Builds a post-position circumstance from a prepositional phrase.
    pub fn from_prep_phrase(pp: PrepPhrase, attribute: Attribute) -> Self {
        let core = PhraseCore {
            nlml: String::new(),
            text: pp.render(),
            description: format!("circumstance (prep_phrase, post, {attribute}): {}", pp.render()),
            kind: CircumstanceKind::PrepPhrase.as_str().into(),
            part_connector: None,
            kernel: pp.prep.clone(),
            query_text: None,
            parent: pp.core.parent,
        };
        Circumstance {
            core,
            kind: CircumstanceKind::PrepPhrase,
            position: Position::Post,
            attribute,
            payload: CircumstancePayload::PrepPhrase(pp),
            query_adv: None,
        }
    }
}

pub fn parse_circumstance(node: &MarkupNode, ctx: &mut PhraseCtx<'_>) -> Result<Circumstance> {
    let kind: CircumstanceKind = enum_child(node, "type")?
        .ok_or_else(|| Error::schema("circum", "<circum> requires <type>"))?;
    let position = enum_child(node, "position")?.unwrap_or(Position::Post);
    let attribute = enum_child(node, "attribute")?.unwrap_or(Attribute::Other);
    let payload = match kind {
        CircumstanceKind::Adverb => {
            let adv = node
                .child("adv")
                .ok_or_else(|| Error::schema("circum", "adverb circumstance requires <adv>"))?;
            CircumstancePayload::Adverb(parse_adverb(adv, ctx)?)
        }
        CircumstanceKind::PrepPhrase => {
            let pp = node.child("prep_phrase").ok_or_else(|| {
                Error::schema("circum", "prepositional circumstance requires <prep_phrase>")
            })?;
            CircumstancePayload::PrepPhrase(parse_prep_phrase(pp, ctx)?)
        }
        CircumstanceKind::Clause => {
            let placeholder = node
                .child("clause_ref")
                .or_else(|| node.child("noun").and_then(|n| n.child("clause_ref")))
                .ok_or_else(|| {
                    Error::schema("circum", "clause circumstance requires a lifted <noun_clause>")
                })?;
            CircumstancePayload::Clause(ctx.noun_clause_ref(placeholder)?)
        }
    };
    let query_adv = match (&payload, node.child_text("query_adv")) {
        (_, Some(explicit)) => Some(explicit.to_string()),
        (CircumstancePayload::Adverb(a), None) if morph::is_query_adverb(a.word()) => {
            Some(a.word().to_string())
        }
        _ => None,
    };
    let mut core = PhraseCore::from_node(node, ctx.parent);
    core.kind = kind.as_str().into();
    core.kernel = match &payload {
        CircumstancePayload::Adverb(a) => a.word().to_string(),
        CircumstancePayload::PrepPhrase(p) => p.prep.clone(),
        CircumstancePayload::Clause(_) => String::new(),
    };
    core.query_text = query_adv.clone();
    let mut circ = Circumstance {
        core,
        kind,
        position,
        attribute,
        payload,
        query_adv,
    };
    circ.core.text = circ.render();
    circ.core.description = format!(
        "circumstance ({}, {}, {}): {}",
        circ.kind, circ.position, circ.attribute, circ.core.text
    );
    Ok(circ)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum PredicatePayload {
    Adjective(Adjective),
    NounPhrase(NounPhrase),
    PrepPhrase(PrepPhrase),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparative {
    pub connector: ComparativeConnector,
    pub complement: NounPhrase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicatePhrase {
    pub core: PhraseCore,
    pub kind: PredicateKind,
    pub payload: PredicatePayload,
    pub comparative: Option<Comparative>,
}

impl PredicatePhrase {
    pub fn render(&self) -> String {
        let head = match &self.payload {
            PredicatePayload::Adjective(a) => a.render(),
            PredicatePayload::NounPhrase(n) => n.render(),
            PredicatePayload::PrepPhrase(p) => p.render(),
        };
        let Some(cmp) = &self.comparative else {
            return head;
        };
        let other = cmp.complement.render();
        match cmp.connector {
            ComparativeConnector::AsAs => join_tokens(["as", &head, "as", &other]),
            ComparativeConnector::Than => join_tokens([head.as_str(), "than", &other]),
            ComparativeConnector::TooTo => join_tokens(["too", &head, &other]),
            ComparativeConnector::EnoughTo => join_tokens([head.as_str(), "enough", &other]),
            ComparativeConnector::SoThat => join_tokens(["so", &head, "that", &other]),
        }
    }

    pub fn adjective(&self) -> Option<&Adjective> {
        match &self.payload {
            PredicatePayload::Adjective(a) => Some(a),
            _ => None,
        }
    }

    pub fn noun_phrase(&self) -> Option<&NounPhrase> {
        match &self.payload {
            PredicatePayload::NounPhrase(n) => Some(n),
            _ => None,
        }
    }

    /// Query text of a noun-phrase predicate ("whose book") or of the
    /// object of a prepositional predicate ("in which room").
    pub fn query_text(&self) -> Option<String> {
        match &self.payload {
            PredicatePayload::NounPhrase(n) => n.core.query_text.clone(),
            PredicatePayload::PrepPhrase(p) if p.has_query_object() => Some(p.render()),
            _ => None,
        }
    }
}

pub fn parse_predicate(node: &MarkupNode, ctx: &mut PhraseCtx<'_>) -> Result<PredicatePhrase> {
    let kind: PredicateKind = enum_child(node, "type")?
        .ok_or_else(|| Error::schema("predicate", "<predicate> requires <type>"))?;
    let missing = |tag: &str| Error::schema("predicate", format!("{kind} predicate requires <{tag}>"));
    let payload = match kind {
        PredicateKind::Adjective => PredicatePayload::Adjective(parse_adjective(
            node.child("adj").ok_or_else(|| missing("adj"))?,
            ctx,
        )?),
        PredicateKind::NounPhrase => PredicatePayload::NounPhrase(parse_noun_phrase(
            node.child("np").ok_or_else(|| missing("np"))?,
            ctx,
        )?),
        PredicateKind::PrepPhrase => PredicatePayload::PrepPhrase(parse_prep_phrase(
            node.child("prep_phrase").ok_or_else(|| missing("prep_phrase"))?,
            ctx,
        )?),
    };
    let comparative = match node.child("comparative") {
        None => None,
        Some(c) => {
            if kind != PredicateKind::Adjective {
                return Err(Error::schema(
                    "predicate/comparative",
                    "comparative complements are only allowed on adjective predicates",
                ));
            }
            if let PredicatePayload::Adjective(adj) = &payload {
                if adj.advs.iter().any(|a| a.extent_np.is_some()) {
                    return Err(Error::schema(
                        "predicate/comparative",
                        "an extent adverb cannot be combined with a comparative predicate",
                    ));
                }
            }
            let connector = enum_child(c, "connector")?
                .ok_or_else(|| Error::schema("comparative", "<comparative> requires <connector>"))?;
            let np = c
                .child("np")
                .ok_or_else(|| Error::schema("comparative", "<comparative> requires <np>"))?;
            Some(Comparative {
                connector,
                complement: parse_noun_phrase(np, ctx)?,
            })
        }
    };
    let mut core = PhraseCore::from_node(node, ctx.parent);
    core.kind = kind.as_str().into();
    let mut pred = PredicatePhrase {
        core,
        kind,
        payload,
        comparative,
    };
    pred.core.kernel = match &pred.payload {
        PredicatePayload::Adjective(a) => a.core.kernel.clone(),
        PredicatePayload::NounPhrase(n) => n.core.kernel.clone(),
        PredicatePayload::PrepPhrase(p) => p.prep.clone(),
    };
    pred.core.text = pred.render();
    pred.core.description = format!("predicate ({}): {}", pred.kind, pred.core.text);
    Ok(pred)
}
