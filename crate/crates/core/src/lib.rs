//! Object model and semantic algorithms for NLML grammar-markup documents.
//!
//! An NLML document encodes the grammatical analysis of one English
//! expression as nested elements. This crate reads such documents into a
//! typed model of sentences, clauses and phrases and runs the algorithms
//! defined on that model:
//!
//! * decomposition of compound and complex sentences into simpler ones
//!   ([`decompose`]),
//! * combination of conjoined subjects and verb phrases into a grid of basic
//!   sentences ([`construct_basic_sentences`]),
//! * mood-dependent surface realisation ([`realize`]),
//! * implied questions and statements for embedded noun and relative clauses
//!   ([`clause`]).
//!
//! ```
//! use nlom_core::{parse_sentence, Sentence, SentenceAccess};
//!
//! let doc = "<mood>statement</mood><complexity>simple</complexity>\
//!     <subject><noun><type>perspronoun</type><word>I</word><numb>sing</numb>\
//!     <pers>first</pers><case>nom</case></noun></subject>\
//!     <verb_phrase><numb>sing</numb><pers>first</pers><tense>present</tense>\
//!     <verb_type>intransitive</verb_type><word>come</word></verb_phrase>";
//! let sentence = parse_sentence(doc, None).unwrap();
//! assert_eq!(sentence.text(), "I come");
//! assert!(matches!(sentence, Sentence::Simple(_)));
//! ```

pub mod batch;
pub mod clause;
pub mod dump;
mod error;
pub mod markup;
pub mod morph;
pub mod phrase;
pub mod realize;
pub mod schema;
pub mod sentence;
pub mod vocab;

pub use crate::clause::{NounClause, RelativeClause};
pub use crate::dump::ModelDump;
pub use crate::error::{Error, Result};
pub use crate::markup::{parse_markup, MarkupError, MarkupNode};
pub use crate::schema::{validate_schema, IssueCode, Schema, ValidationIssue, ValidationReport};
pub use crate::sentence::{
    construct_basic_sentences, decompose, parse_sentence, parse_sentence_with, BasicSentence,
    BasicSentenceGrid, ComplexSentence, CompoundComplexSentence, CompoundSentence,
    DecompositionResult, Decomposed, Sentence, SentenceAccess, SimpleSentence,
};
