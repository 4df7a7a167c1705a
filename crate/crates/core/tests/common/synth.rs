//! Random schema-valid simple-sentence documents together with the cell
//! texts they must produce. The expected texts come from the small tables
//! below, not from the library's morphology.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Person {
    First,
    Second,
    Third,
}

impl Person {
    fn tag(self) -> &'static str {
        match self {
            Person::First => "first",
            Person::Second => "second",
            Person::Third => "third",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subject {
    pub word: &'static str,
    pub proper: bool,
    pub person: Person,
    pub plural: bool,
}

const SUBJECTS: &[Subject] = &[
    Subject { word: "Tom", proper: true, person: Person::Third, plural: false },
    Subject { word: "Mary", proper: true, person: Person::Third, plural: false },
    Subject { word: "Anna", proper: true, person: Person::Third, plural: false },
    Subject { word: "Peter", proper: true, person: Person::Third, plural: false },
    Subject { word: "I", proper: false, person: Person::First, plural: false },
    Subject { word: "you", proper: false, person: Person::Second, plural: false },
    Subject { word: "he", proper: false, person: Person::Third, plural: false },
    Subject { word: "she", proper: false, person: Person::Third, plural: false },
    Subject { word: "we", proper: false, person: Person::First, plural: true },
    Subject { word: "they", proper: false, person: Person::Third, plural: true },
];

/// lemma, third singular, past.
const VERBS: &[(&str, &str, &str)] = &[
    ("come", "comes", "came"),
    ("go", "goes", "went"),
    ("sing", "sings", "sang"),
    ("dance", "dances", "danced"),
    ("play", "plays", "played"),
    ("wait", "waits", "waited"),
    ("watch", "watches", "watched"),
    ("study", "studies", "studied"),
];

const MODALS: &[&str] = &["will", "can", "must", "should"];
const ADJECTIVES: &[&str] = &["happy", "ready", "tired"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verb {
    Present(usize),
    Past(usize),
    Modal(&'static str, usize),
    Be(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connector {
    And,
    Or,
    NeitherNor,
}

impl Connector {
    pub fn tag(self) -> &'static str {
        match self {
            Connector::And => "and",
            Connector::Or => "or",
            Connector::NeitherNor => "neither_nor",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mood {
    Statement,
    Question,
    Order,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub mood: Mood,
    pub subjects: Vec<Subject>,
    pub subject_connector: Option<Connector>,
    pub verbs: Vec<Verb>,
    pub verb_connector: Option<Connector>,
    /// Word and position of an optional adverb circumstance.
    pub circumstance: Option<(&'static str, &'static str)>,
    pub nlml: String,
}

impl Fixture {
    /// Grid rows the document must produce.
    pub fn rows(&self) -> usize {
        self.subjects.len().max(1)
    }

    pub fn cols(&self) -> usize {
        self.verbs.len()
    }

    pub fn negated(&self) -> bool {
        self.subject_connector == Some(Connector::NeitherNor)
            || self.verb_connector == Some(Connector::NeitherNor)
    }

    pub fn single_choice(&self) -> bool {
        self.subject_connector == Some(Connector::Or) || self.verb_connector == Some(Connector::Or)
    }

    /// Expected statement text of every cell in row-major order, built from
    /// the tables of this module: plain agreement, or do-support negation
    /// when a `neither_nor` connector is present.
    pub fn expected_statement_cells(&self) -> Vec<String> {
        assert_eq!(self.mood, Mood::Statement);
        let (pre, post) = match self.circumstance {
            Some((w, "pre")) => (Some(w), None),
            Some((w, _)) => (None, Some(w)),
            None => (None, None),
        };
        let mut out = Vec::new();
        for s in &self.subjects {
            for v in &self.verbs {
                let mut tokens: Vec<String> = Vec::new();
                tokens.extend(pre.map(str::to_string));
                tokens.push(s.word.to_string());
                tokens.extend(verb_words(v, s.person, s.plural, self.negated()));
                tokens.extend(post.map(str::to_string));
                out.push(tokens.join(" "));
            }
        }
        out
    }
}

fn be_present(person: Person, plural: bool) -> &'static str {
    match (person, plural) {
        (Person::First, false) => "am",
        (Person::Third, false) => "is",
        _ => "are",
    }
}

fn third_singular(person: Person, plural: bool) -> bool {
    person == Person::Third && !plural
}

/// Surface verb words for a subject, negated with do-support when asked.
pub fn verb_words(v: &Verb, person: Person, plural: bool, negate: bool) -> Vec<String> {
    let w = |s: &str| s.to_string();
    match (v, negate) {
        (Verb::Present(i), false) => {
            let (lemma, third, _) = VERBS[*i];
            vec![w(if third_singular(person, plural) { third } else { lemma })]
        }
        (Verb::Present(i), true) => {
            let aux = if third_singular(person, plural) { "does" } else { "do" };
            vec![w(aux), w("not"), w(VERBS[*i].0)]
        }
        (Verb::Past(i), false) => vec![w(VERBS[*i].2)],
        (Verb::Past(i), true) => vec![w("did"), w("not"), w(VERBS[*i].0)],
        (Verb::Modal(m, i), false) => vec![w(m), w(VERBS[*i].0)],
        (Verb::Modal(m, i), true) => vec![w(m), w("not"), w(VERBS[*i].0)],
        (Verb::Be(adj), false) => vec![w(be_present(person, plural)), w(adj)],
        (Verb::Be(adj), true) => vec![w(be_present(person, plural)), w("not"), w(adj)],
    }
}

/// Agreement of the whole subject phrase: `and` makes it plural with the
/// lowest person, `or`/`neither_nor` agree with the last part.
fn agreement(subjects: &[Subject], connector: Option<Connector>) -> (Person, bool) {
    match (subjects.len(), connector) {
        (0, _) => (Person::Second, false),
        (1, _) | (_, Some(Connector::Or)) | (_, Some(Connector::NeitherNor)) | (_, None) => {
            let last = subjects[subjects.len() - 1];
            (last.person, last.plural)
        }
        (_, Some(Connector::And)) => {
            let lowest = subjects
                .iter()
                .map(|s| s.person)
                .min_by_key(|p| match p {
                    Person::First => 0,
                    Person::Second => 1,
                    Person::Third => 2,
                })
                .unwrap();
            (lowest, true)
        }
    }
}

fn noun_xml(s: &Subject) -> String {
    format!(
        "<noun><type>{}</type><word>{}</word><numb>{}</numb><pers>{}</pers><case>nom</case></noun>",
        if s.proper { "propernoun" } else { "perspronoun" },
        s.word,
        if s.plural { "plur" } else { "sing" },
        s.person.tag()
    )
}

fn verb_xml(tag: &str, v: &Verb, person: Person, plural: bool, order: bool) -> String {
    let (tense, verb_type, body) = match v {
        Verb::Present(i) if order => ("present", "intransitive", format!("<word>{}</word>", VERBS[*i].0)),
        Verb::Present(_) | Verb::Past(_) | Verb::Modal(..) if order => unreachable!(),
        Verb::Present(_) => ("present", "intransitive", String::new()),
        Verb::Past(_) => ("past", "intransitive", String::new()),
        Verb::Modal(..) => ("future", "intransitive", String::new()),
        Verb::Be(adj) => (
            "present",
            "be",
            format!("<predicate><type>adjective</type><adj><word>{adj}</word></adj></predicate>"),
        ),
    };
    let words: String = if order {
        String::new()
    } else {
        verb_words(v, person, plural, false)
            .iter()
            .take(if matches!(v, Verb::Be(_)) { 1 } else { usize::MAX })
            .map(|w| format!("<word>{w}</word>"))
            .collect()
    };
    let agreement = if order {
        String::new()
    } else {
        format!(
            "<numb>{}</numb><pers>{}</pers>",
            if plural { "plur" } else { "sing" },
            person.tag()
        )
    };
    // Be predicates follow the verb words; the others carry everything in
    // `words` (order verbs in `body`).
    let (pre_body, post_body) = match v {
        Verb::Be(_) => (String::new(), body),
        _ => (body, String::new()),
    };
    format!(
        "<{tag}>{agreement}<tense>{tense}</tense><verb_type>{verb_type}</verb_type>{pre_body}{words}{post_body}</{tag}>"
    )
}

fn pick_connector<R: Rng>(rng: &mut R) -> Connector {
    *[Connector::And, Connector::Or, Connector::NeitherNor].choose(rng).unwrap()
}

fn pick_verb<R: Rng>(rng: &mut R, order: bool) -> Verb {
    let i = rng.gen_range(0..VERBS.len());
    if order {
        return Verb::Present(i);
    }
    match rng.gen_range(0..4) {
        0 => Verb::Present(i),
        1 => Verb::Past(i),
        2 => Verb::Modal(MODALS.choose(rng).unwrap(), i),
        _ => Verb::Be(ADJECTIVES.choose(rng).unwrap()),
    }
}

/// A random document with `s` subject parts (ignored for orders) and `v`
/// verb phrases.
pub fn generate<R: Rng>(rng: &mut R, mood: Mood, s: usize, v: usize) -> Fixture {
    let order = mood == Mood::Order;
    let subjects: Vec<Subject> = if order {
        Vec::new()
    } else {
        SUBJECTS.choose_multiple(rng, s).copied().collect()
    };
    let subject_connector = (subjects.len() > 1).then(|| pick_connector(rng));
    let verbs: Vec<Verb> = (0..v).map(|_| pick_verb(rng, order)).collect();
    let verb_connector = (v > 1).then(|| pick_connector(rng));
    let circumstance = match rng.gen_range(0..3) {
        0 => None,
        1 => Some((*["today", "here", "now"].choose(rng).unwrap(), "post")),
        _ => Some((*["today", "yesterday", "now"].choose(rng).unwrap(), "pre")),
    };
    let (person, plural) = agreement(&subjects, subject_connector);

    let mood_tag = match mood {
        Mood::Statement => "statement",
        Mood::Question => "question",
        Mood::Order => "order",
    };
    let mut nlml = format!("<mood>{mood_tag}</mood><complexity>simple</complexity>");
    if !subjects.is_empty() {
        nlml.push_str("<subject>");
        if let Some(c) = subject_connector {
            nlml.push_str(&format!("<part_connector>{}</part_connector>", c.tag()));
        }
        for s in &subjects {
            nlml.push_str(&noun_xml(s));
        }
        nlml.push_str("</subject>");
    }
    match verb_connector {
        None => nlml.push_str(&verb_xml("verb_phrase", &verbs[0], person, plural, order)),
        Some(c) => {
            nlml.push_str(&format!(
                "<verb_phrase><verb_phrase_connector>{}</verb_phrase_connector>",
                c.tag()
            ));
            for verb in &verbs {
                nlml.push_str(&verb_xml("verb_phrase_part", verb, person, plural, order));
            }
            nlml.push_str("</verb_phrase>");
        }
    }
    if let Some((word, position)) = circumstance {
        nlml.push_str(&format!(
            "<circum><type>adverb</type><position>{position}</position><attribute>time</attribute><adv><word>{word}</word></adv></circum>"
        ));
    }
    Fixture {
        mood,
        subjects,
        subject_connector,
        verbs,
        verb_connector,
        circumstance,
        nlml,
    }
}

/// A random statement, question or order with S, V drawn from 1..=4.
pub fn generate_any<R: Rng>(rng: &mut R) -> Fixture {
    let mood = *[Mood::Statement, Mood::Statement, Mood::Question, Mood::Order]
        .choose(rng)
        .unwrap();
    let s = rng.gen_range(1..=4);
    let v = rng.gen_range(1..=4);
    generate(rng, mood, s, v)
}
