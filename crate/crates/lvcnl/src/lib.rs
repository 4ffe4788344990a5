//! A bidirectional compiler between a controlled fragment of Latvian and
//! ontology formalisms.
//!
//! The crate parses controlled Latvian sentences into discourse
//! representation structures ([`Drs`]), classifies them into ontology
//! statements ([`Statement`]), and emits OWL Manchester syntax, SWRL rules
//! or SPARQL ASK queries. In the opposite direction it imports Manchester
//! axioms and verbalizes statements back into canonical controlled Latvian
//! or controlled English.
//!
//! The grammar is lexicon-driven: a plain-text lexicon file declares class
//! terms (with their inflection paradigms) and property lexemes (transitive
//! verbs, participle-plus-locative predicates, and genitive role nouns).
//! Everything else — determiners, pronouns, the copula — is built in.

pub mod function_words;
pub mod generator;
pub mod lexicon;
pub mod morphology;
pub mod owl;
pub mod parser;
pub mod semantics;

pub use generator::{linearize_ace, linearize_lv, GenError};
pub use lexicon::{Lexicon, LexiconError};
pub use morphology::{generate_paradigm, Case, FormTable, Gender, MorphError, Number, Paradigm};
pub use owl::{
  emit_auto, emit_manchester, emit_sparql, emit_swrl, import_manchester, OwlError, OwlFormat,
};
pub use parser::{parse, tokenize, ParseError, Token};
pub use semantics::{equal_drs, ClassExpr, Drs, Mood, Polarity, Quant, Statement};
