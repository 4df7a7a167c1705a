//! Closed vocabularies of NLML tag values.
//!
//! Every enum here round-trips through the exact string used in documents,
//! which is also the string used in the JSON model dump.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Error returned when a string is not one of an enum's NLML values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownValue {
    pub kind: &'static str,
    pub value: String,
}

impl fmt::Display for UnknownValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} is not a valid {}", self.value, self.kind)
    }
}

impl std::error::Error for UnknownValue {}

macro_rules! string_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl FromStr for $name {
            type Err = UnknownValue;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(UnknownValue { kind: stringify!($name), value: s.to_string() }),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(self.as_str())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_enum! {
    /// Communicative category of a sentence.
    Mood {
        Statement => "statement",
        Question => "question",
        Order => "order",
        FullExclamation => "full exclamation",
        Np => "np",
        Adj => "adj",
        Circumstances => "circumstances",
        Subcircum => "subcircum",
        About => "about",
        WhatTerseExclamation => "what terse exclamation",
        HowTerseExclamation => "how terse exclamation",
    }
}

impl Mood {
    /// Moods whose content is a subject/verb-phrase combination.
    pub fn has_clause_structure(self) -> bool {
        matches!(
            self,
            Mood::Statement | Mood::Question | Mood::Order | Mood::FullExclamation | Mood::Subcircum
        )
    }

    pub fn is_noun_phrase_mood(self) -> bool {
        matches!(self, Mood::Np | Mood::About | Mood::WhatTerseExclamation)
    }

    pub fn is_adjective_mood(self) -> bool {
        matches!(self, Mood::Adj | Mood::HowTerseExclamation)
    }

    /// Terminal punctuation attached by default.
    pub fn punctuation(self) -> Option<char> {
        match self {
            Mood::Question | Mood::About => Some('?'),
            Mood::FullExclamation | Mood::WhatTerseExclamation | Mood::HowTerseExclamation => {
                Some('!')
            }
            _ => None,
        }
    }
}

string_enum! {
    Complexity {
        Simple => "simple",
        Complex => "complex",
        Compound => "compound",
        CompoundComplex => "compound_complex",
    }
}

string_enum! {
    Number {
        Sing => "sing",
        Plur => "plur",
    }
}

string_enum! {
    Person {
        First => "first",
        Second => "second",
        Third => "third",
    }
}

string_enum! {
    Case {
        Nom => "nom",
        Acc => "acc",
    }
}

string_enum! {
    Sex {
        Masc => "masc",
        Fem => "fem",
        Neut => "neut",
        Unknown => "unknown",
    }
}

string_enum! {
    /// Degree of an adjective or adverb.
    Grad {
        Abso => "abso",
        Comp => "comp",
        Supl => "supl",
    }
}

string_enum! {
    Position {
        Pre => "pre",
        Mid => "mid",
        Post => "post",
    }
}

string_enum! {
    Attribute {
        Place => "place",
        Time => "time",
        Way => "way",
        Other => "other",
    }
}

string_enum! {
    Voice {
        Active => "active",
        Passive => "passive",
    }
}

string_enum! {
    /// Conjunction joining the parts of a phrase or several verb phrases.
    Connector {
        And => "and",
        Or => "or",
        NeitherNor => "neither_nor",
    }
}

string_enum! {
    Coordinator {
        And => "and",
        Or => "or",
    }
}

string_enum! {
    CircumstanceKind {
        Adverb => "adverb",
        PrepPhrase => "prep_phrase",
        Clause => "clause",
    }
}

string_enum! {
    PredicateKind {
        Adjective => "adjective",
        NounPhrase => "noun_phrase",
        PrepPhrase => "prep_phrase",
    }
}

string_enum! {
    ComparativeConnector {
        AsAs => "as_as",
        Than => "than",
        TooTo => "too_to",
        EnoughTo => "enough_to",
        SoThat => "so_that",
    }
}

string_enum! {
    /// Pattern selector of a verb phrase.
    VerbType {
        Be => "be",
        Intransitive => "intransitive",
        Transitive => "transitive",
        Ditransitive => "ditransitive",
        MentalTo => "mental_to",
        Link => "link",
    }
}

string_enum! {
    NounClauseType {
        That => "that",
        Whether => "whether",
        WhetherOrNot => "whether_or_not",
        QueryClause => "query_clause",
        QueryTo => "query_to",
        NormalTo => "normal_to",
    }
}

impl NounClauseType {
    pub fn is_infinitive(self) -> bool {
        matches!(self, NounClauseType::QueryTo | NounClauseType::NormalTo)
    }

    pub fn is_query(self) -> bool {
        matches!(self, NounClauseType::QueryClause | NounClauseType::QueryTo)
    }
}

string_enum! {
    GrammaticalRole {
        Subject => "subject",
        Object => "object",
        PrepObject => "prep_object",
    }
}

string_enum! {
    RelativeForm {
        Full => "full",
        Terse => "terse",
    }
}

string_enum! {
    TerseKind {
        PresentParticiple => "present_participle",
        PastParticiple => "past_participle",
        PassiveInfinitive => "passive_infinitive",
    }
}

string_enum! {
    /// How the sentences produced by a combination relate to each other.
    Relation {
        Independent => "independent",
        SingleChoice => "single_choice",
    }
}

impl Relation {
    pub fn joiner(self) -> &'static str {
        match self {
            Relation::Independent => "and",
            Relation::SingleChoice => "or",
        }
    }
}

impl From<Coordinator> for Relation {
    fn from(c: Coordinator) -> Self {
        match c {
            Coordinator::And => Relation::Independent,
            Coordinator::Or => Relation::SingleChoice,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spaced_moods_round_trip() {
        for mood in Mood::ALL {
            assert_eq!(mood.as_str().parse::<Mood>().unwrap(), *mood);
        }
        assert_eq!("full exclamation".parse::<Mood>(), Ok(Mood::FullExclamation));
        assert!("greeting".parse::<Mood>().is_err());
    }

    #[test]
    fn serde_uses_document_strings() {
        let json = serde_json::to_string(&Mood::WhatTerseExclamation).unwrap();
        assert_eq!(json, "\"what terse exclamation\"");
        let back: Connector = serde_json::from_str("\"neither_nor\"").unwrap();
        assert_eq!(back, Connector::NeitherNor);
    }
}
