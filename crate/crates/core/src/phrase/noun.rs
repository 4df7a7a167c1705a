use serde::{Deserialize, Serialize};

use super::{
    enum_child, join_tokens, parse_adjective, parse_prep_phrase, placeholder_index, Adjective,
    ClauseRef, PhraseCore, PhraseCtx, PrepPhrase, SentenceId,
};
use crate::error::{Error, Result};
use crate::markup::MarkupNode;
use crate::morph;
use crate::vocab::{Case, Connector, Number, Person, Sex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum PreModifier {
    Article(String),
    Determiner(String),
    Quantifier(String),
    Adjective(Adjective),
}

impl PreModifier {
    fn render(&self) -> String {
        match self {
            PreModifier::Article(s) | PreModifier::Determiner(s) | PreModifier::Quantifier(s) => {
                s.clone()
            }
            PreModifier::Adjective(a) => a.render(),
        }
    }

    fn first_word_mut(&mut self) -> &mut String {
        match self {
            PreModifier::Article(s) | PreModifier::Determiner(s) | PreModifier::Quantifier(s) => s,
            PreModifier::Adjective(a) => a.first_word_mut(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum PostModifier {
    PrepPhrase(PrepPhrase),
    RelativeClause(ClauseRef),
}

impl PostModifier {
    fn render(&self) -> String {
        match self {
            PostModifier::PrepPhrase(p) => p.render(),
            PostModifier::RelativeClause(c) => c.text.clone(),
        }
    }
}

/// One conjunct of a noun phrase: pre-modifiers, kernel, post-modifiers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NounPart {
    pub kernel: String,
    pub kernel_type: String,
    pub personality: Option<Person>,
    pub number: Option<Number>,
    pub case: Option<Case>,
    pub sex: Option<Sex>,
    pub pre_modifiers: Vec<PreModifier>,
    pub post_modifiers: Vec<PostModifier>,
    /// Set when the whole part is a noun clause.
    pub clause: Option<ClauseRef>,
}

impl NounPart {
    pub fn render(&self) -> String {
        let kernel = match &self.clause {
            Some(c) => c.text.clone(),
            None => self.kernel.clone(),
        };
        join_tokens(
            self.pre_modifiers
                .iter()
                .map(PreModifier::render)
                .chain(std::iter::once(kernel))
                .chain(self.post_modifiers.iter().map(PostModifier::render)),
        )
    }

    fn is_proper(&self) -> bool {
        self.kernel_type == "propernoun" || self.kernel == "I"
    }

    /// Whether the kernel or a determiner makes this part a query.
    pub fn is_query(&self) -> bool {
        if self.clause.is_some() {
            return false;
        }
        morph::is_query_word(&self.kernel) || self.query_determiner().is_some()
    }

    pub fn query_determiner(&self) -> Option<&str> {
        self.pre_modifiers.iter().find_map(|m| match m {
            PreModifier::Determiner(d) if morph::is_query_determiner(d) => Some(d.as_str()),
            _ => None,
        })
    }

    fn agreement(&self) -> (Person, Number) {
        (
            self.personality.unwrap_or(Person::Third),
            self.number.unwrap_or(Number::Sing),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NounPhrase {
    pub core: PhraseCore,
    pub personality: Person,
    pub number: Number,
    pub case: Case,
    pub sex: Sex,
    pub parts: Vec<NounPart>,
    pub part_connector: Option<Connector>,
}

fn person_rank(p: Person) -> u8 {
    match p {
        Person::First => 0,
        Person::Second => 1,
        Person::Third => 2,
    }
}

impl NounPhrase {
    /// Builds a phrase from parts, deriving agreement from the connector:
    /// `and` makes the phrase plural, `or`/`neither_nor` agree with the
    /// nearest (last) part.
    pub fn from_parts(
        parts: Vec<NounPart>,
        part_connector: Option<Connector>,
        parent: SentenceId,
        default_case: Case,
    ) -> NounPhrase {
        let (personality, number) = match (parts.len(), part_connector) {
            (0, _) => (Person::Third, Number::Sing),
            (1, _) | (_, None) => parts[0].agreement(),
            (_, Some(Connector::And)) => {
                let person = parts
                    .iter()
                    .map(|p| p.agreement().0)
                    .min_by_key(|p| person_rank(*p))
                    .unwrap_or(Person::Third);
                (person, Number::Plur)
            }
            (_, Some(_)) => parts[parts.len() - 1].agreement(),
        };
        let first = parts.first();
        let case = first.and_then(|p| p.case).unwrap_or(default_case);
        let sex = first.and_then(|p| p.sex).unwrap_or(Sex::Unknown);
        let mut np = NounPhrase {
            core: PhraseCore {
                parent,
                part_connector,
                kind: first.map(|p| p.kernel_type.clone()).unwrap_or_default(),
                kernel: first.map(|p| p.kernel.clone()).unwrap_or_default(),
                ..PhraseCore::default()
            },
            personality,
            number,
            case,
            sex,
            parts,
            part_connector,
        };
        np.refresh();
        np
    }

    /// A single-part phrase holding just the given part (used when a
    /// conjoined phrase is split).
    pub fn from_part(part: NounPart, parent: SentenceId, default_case: Case) -> NounPhrase {
        NounPhrase::from_parts(vec![part], None, parent, default_case)
    }

    /// A personal pronoun subject such as "you".
    pub fn pronoun(word: &str, person: Person, number: Number, parent: SentenceId) -> NounPhrase {
        let part = NounPart {
            kernel: word.to_string(),
            kernel_type: "perspronoun".into(),
            personality: Some(person),
            number: Some(number),
            case: Some(Case::Nom),
            sex: None,
            pre_modifiers: Vec::new(),
            post_modifiers: Vec::new(),
            clause: None,
        };
        NounPhrase::from_part(part, parent, Case::Nom)
    }

    /// A bare third-person singular phrase such as "a person".
    pub fn simple(words: &str, parent: SentenceId) -> NounPhrase {
        let (pre, kernel) = match words.rsplit_once(' ') {
            Some((pre, kernel)) => (Some(pre), kernel),
            None => (None, words),
        };
        let part = NounPart {
            kernel: kernel.to_string(),
            kernel_type: "countable_noun".into(),
            personality: Some(Person::Third),
            number: Some(Number::Sing),
            case: Some(Case::Nom),
            sex: None,
            pre_modifiers: pre.map(|p| PreModifier::Article(p.to_string())).into_iter().collect(),
            post_modifiers: Vec::new(),
            clause: None,
        };
        NounPhrase::from_part(part, parent, Case::Nom)
    }

    pub fn render(&self) -> String {
        let rendered: Vec<String> = self.parts.iter().map(NounPart::render).collect();
        match (rendered.len(), self.part_connector) {
            (0, _) => String::new(),
            (1, _) | (_, None) => join_tokens(&rendered),
            (n, Some(Connector::NeitherNor)) => {
                let mut tokens = vec!["neither".to_string(), rendered[0].clone()];
                for r in &rendered[1..n] {
                    tokens.push("nor".into());
                    tokens.push(r.clone());
                }
                join_tokens(tokens)
            }
            (n, Some(c)) => {
                let word = if c == Connector::And { "and" } else { "or" };
                if n == 2 {
                    join_tokens([rendered[0].as_str(), word, &rendered[1]])
                } else {
                    let head = rendered[..n - 1].join(", ");
                    join_tokens([head.as_str(), word, &rendered[n - 1]])
                }
            }
        }
    }

    /// Recomputes the derived text, query text and description.
    pub fn refresh(&mut self) {
        for part in &mut self.parts {
            for m in &mut part.pre_modifiers {
                if let PreModifier::Adjective(a) = m {
                    a.refresh();
                }
            }
            for m in &mut part.post_modifiers {
                if let PostModifier::PrepPhrase(p) = m {
                    p.refresh();
                }
            }
        }
        self.core.text = self.render();
        self.core.query_text = self
            .parts
            .iter()
            .find(|p| p.is_query())
            .map(NounPart::render);
        // A query phrase is headed by its query word ("what" in "what books").
        self.core.kernel = match self.parts.iter().find(|p| p.is_query()) {
            Some(p) if !morph::is_query_word(&p.kernel) => {
                p.query_determiner().unwrap_or_default().to_string()
            }
            Some(p) => p.kernel.clone(),
            None => self.parts.first().map(|p| p.kernel.clone()).unwrap_or_default(),
        };
        self.core.description = format!(
            "noun phrase ({} {} {}{}): {}",
            self.personality,
            self.number,
            self.case,
            match self.part_connector {
                Some(c) => format!(", {} parts joined by {}", self.parts.len(), c),
                None => String::new(),
            },
            self.core.text
        );
    }

    /// True when some part is a query noun clause ("what to do next").
    pub fn is_query_clause(&self) -> bool {
        self.parts
            .iter()
            .any(|p| p.clause.as_ref().is_some_and(|c| c.query))
    }

    /// Lowercases a capital that only marks the start of the host sentence,
    /// for use of the phrase at a non-initial position. Proper nouns and
    /// "I" keep their capital.
    pub fn decapitalized(&self) -> NounPhrase {
        let mut np = self.clone();
        if let Some(part) = np.parts.first_mut() {
            let proper = part.is_proper();
            match part.pre_modifiers.first_mut() {
                Some(m) => {
                    let w = m.first_word_mut();
                    *w = morph::decapitalize(w);
                }
                None if !proper && part.clause.is_none() => {
                    part.kernel = morph::decapitalize(&part.kernel);
                }
                None => {}
            }
        }
        np.refresh();
        np
    }

    /// Nominative form, for an object that becomes a subject ("him" -> "he").
    pub fn nominative(&self) -> NounPhrase {
        let mut np = self.clone();
        for part in &mut np.parts {
            if let Some(nom) = morph::nominative_pronoun(&part.kernel) {
                part.kernel = nom.to_string();
                part.case = Some(Case::Nom);
                if nom == "I" {
                    part.personality = Some(Person::First);
                }
            }
        }
        np.case = Case::Nom;
        np.refresh();
        np
    }
}

/// The interrogative surface form of the phrase, if any part is a query.
pub fn get_query_text(np: &NounPhrase) -> Option<String> {
    np.parts.iter().find(|p| p.is_query()).map(NounPart::render)
}

fn parse_part(node: &MarkupNode, ctx: &mut PhraseCtx<'_>, default_case: Case) -> Result<NounPart> {
    let clause = match node.child("clause_ref") {
        Some(placeholder) => Some(ctx.noun_clause_ref(placeholder)?),
        None => None,
    };
    let kernel = node.child_text("word").unwrap_or_default().to_string();
    if kernel.is_empty() && clause.is_none() {
        return Err(Error::schema("noun", "<noun> needs a <word> or a noun clause"));
    }
    let kernel_type = match node.child_text("type") {
        Some(t) => t.to_string(),
        None if clause.is_some() => "noun_clause".into(),
        None => "noun".into(),
    };
    let mut part = NounPart {
        kernel,
        kernel_type,
        personality: enum_child(node, "pers")?,
        number: enum_child(node, "numb")?,
        case: enum_child(node, "case")?,
        sex: enum_child(node, "sex")?,
        pre_modifiers: Vec::new(),
        post_modifiers: Vec::new(),
        clause,
    };
    for child in &node.children {
        match child.tag.as_str() {
            "article" => part.pre_modifiers.push(PreModifier::Article(child.text.clone())),
            "determiner" => part.pre_modifiers.push(PreModifier::Determiner(child.text.clone())),
            "quantifier" => part.pre_modifiers.push(PreModifier::Quantifier(child.text.clone())),
            "adj" => part
                .pre_modifiers
                .push(PreModifier::Adjective(parse_adjective(child, ctx)?)),
            "prep_phrase" => part
                .post_modifiers
                .push(PostModifier::PrepPhrase(parse_prep_phrase(child, ctx)?)),
            "relative_ref" => {
                let index = placeholder_index(child)?;
                let modified = NounPhrase::from_part(part.clone(), ctx.parent, default_case);
                let rc = ctx.relative_clauses.get_mut(index).ok_or_else(|| {
                    Error::schema("noun", format!("no relative clause with index {index}"))
                })?;
                rc.set_modified_noun_phrase(modified)?;
                part.post_modifiers.push(PostModifier::RelativeClause(ClauseRef {
                    index,
                    text: rc.surface_text(),
                    query: false,
                }));
            }
            "relative_clause" | "noun_clause" => {
                return Err(Error::schema(
                    "noun",
                    format!("<{}> must be lifted out before phrase parsing", child.tag),
                ))
            }
            _ => {}
        }
    }
    Ok(part)
}

/// Parses a noun-phrase container (`subject`, `np`, `direct_object`,
/// `indirect_object`).
pub fn parse_noun_phrase(node: &MarkupNode, ctx: &mut PhraseCtx<'_>) -> Result<NounPhrase> {
    let default_case = if node.tag == "subject" { Case::Nom } else { Case::Acc };
    let part_connector = enum_child(node, "part_connector")?;
    let mut parts = Vec::new();
    for child in &node.children {
        match child.tag.as_str() {
            "noun" => parts.push(parse_part(child, ctx, default_case)?),
            "noun_clause" => {
                return Err(Error::schema(
                    &node.tag,
                    "<noun_clause> must be lifted out before phrase parsing",
                ))
            }
            _ => {}
        }
    }
    if parts.is_empty() {
        return Err(Error::schema(&node.tag, format!("<{}> has no parts", node.tag)));
    }
    match (parts.len(), part_connector) {
        (1, Some(c)) => {
            return Err(Error::schema(
                &node.tag,
                format!("connector {c} needs at least two parts"),
            ))
        }
        (n, None) if n > 1 => {
            return Err(Error::schema(&node.tag, format!("{n} parts without a connector")))
        }
        _ => {}
    }
    let mut np = NounPhrase::from_parts(parts, part_connector, ctx.parent, default_case);
    np.core.nlml = node.to_markup();
    Ok(np)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markup::parse_markup;

    fn np(doc: &str) -> NounPhrase {
        let node = parse_markup(doc).unwrap().children.remove(0);
        parse_noun_phrase(&node, &mut PhraseCtx::detached(SentenceId(0))).unwrap()
    }

    #[test]
    fn first_person_pronoun() {
        let p = np("<subject><noun><type>perspronoun</type><word>I</word><numb>sing</numb>\
                    <pers>first</pers><case>nom</case></noun></subject>");
        assert_eq!(p.personality, Person::First);
        assert_eq!(p.number, Number::Sing);
        assert_eq!(p.case, Case::Nom);
        assert_eq!(p.sex, Sex::Unknown);
        assert_eq!(p.parts.len(), 1);
        assert_eq!(p.parts[0].kernel, "I");
        assert!(p.part_connector.is_none());
        assert!(p.core.part_connector.is_none());
    }

    #[test]
    fn conjoined_subject_is_plural() {
        let p = np("<subject><part_connector>and</part_connector>\
                    <noun><type>propernoun</type><word>Tom</word><numb>sing</numb><pers>third</pers></noun>\
                    <noun><type>propernoun</type><word>Mary</word><numb>sing</numb><pers>third</pers></noun>\
                    </subject>");
        assert_eq!(p.parts.len(), 2);
        assert_eq!(p.part_connector, Some(Connector::And));
        assert_eq!(p.number, Number::Plur);
        assert_eq!(p.render(), "Tom and Mary");
    }

    #[test]
    fn neither_nor_agrees_with_nearest_part() {
        let p = np("<subject><part_connector>neither_nor</part_connector>\
                    <noun><word>Tom</word></noun><noun><word>Mary</word></noun></subject>");
        assert_eq!(p.number, Number::Sing);
        assert_eq!(p.render(), "neither Tom nor Mary");
    }

    #[test]
    fn connector_arity_is_enforced() {
        let node = parse_markup("<subject><part_connector>or</part_connector><noun><word>a</word></noun></subject>")
            .unwrap()
            .children
            .remove(0);
        assert!(parse_noun_phrase(&node, &mut PhraseCtx::detached(SentenceId(0))).is_err());
    }

    #[test]
    fn query_texts() {
        let who = np("<np><noun><type>query</type><word>who</word></noun></np>");
        assert_eq!(get_query_text(&who).as_deref(), Some("who"));
        let man = np("<np><noun><article>the</article><word>man</word></noun></np>");
        assert_eq!(get_query_text(&man), None);
        let books = np("<np><noun><determiner>what</determiner><word>books</word></noun></np>");
        assert_eq!(get_query_text(&books).as_deref(), Some("what books"));
        assert_eq!(books.core.query_text.as_deref(), Some("what books"));
    }

    #[test]
    fn decapitalization_keeps_proper_nouns() {
        let man = np("<np><noun><article>The</article><word>man</word></noun></np>");
        assert_eq!(man.decapitalized().render(), "the man");
        let tom = np("<np><noun><type>propernoun</type><word>Tom</word></noun></np>");
        assert_eq!(tom.decapitalized().render(), "Tom");
        let i = np("<np><noun><type>perspronoun</type><word>I</word></noun></np>");
        assert_eq!(i.decapitalized().render(), "I");
        let he = np("<np><noun><type>perspronoun</type><word>He</word></noun></np>");
        assert_eq!(he.decapitalized().render(), "he");
    }

    #[test]
    fn nominative_pronouns() {
        let him = np("<np><noun><type>perspronoun</type><word>him</word><case>acc</case></noun></np>");
        assert_eq!(him.nominative().render(), "he");
        assert_eq!(him.nominative().case, Case::Nom);
    }
}
