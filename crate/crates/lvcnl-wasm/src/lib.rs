//! Browser bindings: thin `wasm-bindgen` wrappers around the core crate.
//!
//! Three operations back the demo page, each returning a JSON string so
//! the page needs no generated glue types: [`translate`] parses a
//! controlled-Latvian sentence and reports the emitted formalism plus
//! the canonical paraphrases, [`verbalize`] turns one Manchester axiom
//! into controlled Latvian and English, and [`paradigm`] declines a
//! lemma into its eight-cell table. The university lexicon is embedded
//! at build time, so the compiled module is self-contained.

use std::sync::OnceLock;

use lvcnl::{
  emit_auto, generate_paradigm, import_manchester, linearize_ace, linearize_lv, parse, Case,
  GenError, Gender, Lexicon, Number, OwlError, Paradigm, ParseError,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const LEXICON: &str = include_str!("../../../lexicons/university.lex");

fn lexicon() -> &'static Lexicon {
  static LX: OnceLock<Lexicon> = OnceLock::new();
  LX.get_or_init(|| Lexicon::load(LEXICON).expect("the embedded lexicon is well-formed"))
}

fn failure(code: &str, column: Option<usize>, message: String) -> Value {
  json!({ "ok": false, "code": code, "column": column, "message": message })
}

fn parse_failure(e: ParseError) -> Value {
  let (code, column) = match &e {
    ParseError::UnknownToken { col, .. } => ("UNKNOWN_TOKEN", Some(*col)),
    ParseError::NoParse { col } => ("NO_PARSE", Some(*col)),
    ParseError::Ambiguous { .. } => ("AMBIGUOUS", None),
    ParseError::AgreementViolation { col, .. } => ("AGREEMENT", Some(*col)),
    ParseError::UnresolvedAnaphor { col, .. } => ("UNRESOLVED_ANAPHOR", Some(*col)),
  };
  failure(code, column, e.to_string())
}

fn gen_failure(e: GenError) -> Value {
  let code = match &e {
    GenError::UnknownClass(_) => "UNKNOWN_CLASS",
    GenError::UnknownProperty(_) => "UNKNOWN_PROPERTY",
    GenError::Unrealizable(_) => "UNREALIZABLE",
  };
  failure(code, None, e.to_string())
}

fn owl_failure(e: OwlError) -> Value {
  let code = match &e {
    OwlError::NotExpressible { .. } => "NOT_EXPRESSIBLE",
    OwlError::Syntax { .. } => "SYNTAX",
    OwlError::Unsupported { .. } => "UNSUPPORTED",
  };
  failure(code, None, e.to_string())
}

fn translate_value(sentence: &str) -> Value {
  let lx = lexicon();
  let drs = match parse(sentence, lx) {
    Ok(drs) => drs,
    Err(e) => return parse_failure(e),
  };
  let statement = match drs.classify() {
    Ok(statement) => statement,
    Err(e) => return failure("UNCLASSIFIABLE", None, e.to_string()),
  };
  let (format, emission) = match emit_auto(&statement) {
    Ok(pair) => pair,
    Err(e) => return owl_failure(e),
  };
  let latvian = match linearize_lv(&statement, lx, Number::Sg) {
    Ok(text) => text,
    Err(e) => return gen_failure(e),
  };
  let plural = linearize_lv(&statement, lx, Number::Pl)
    .ok()
    .filter(|pl| *pl != latvian)
    .map_or(Value::Null, Value::String);
  let english = match linearize_ace(&statement, lx) {
    Ok(text) => text,
    Err(e) => return gen_failure(e),
  };
  json!({
    "ok": true,
    "formalism": format.to_string(),
    "emission": emission,
    "latvian": latvian,
    "latvianPlural": plural,
    "english": english,
    "drs": drs.dump(),
  })
}

fn verbalize_value(axiom: &str) -> Value {
  let lx = lexicon();
  let statements = match import_manchester(axiom) {
    Ok(statements) => statements,
    Err(e) => return owl_failure(e),
  };
  let Some(statement) = statements.first() else {
    return failure("SYNTAX", None, "empty axiom line".to_string());
  };
  let latvian = match linearize_lv(statement, lx, Number::Sg) {
    Ok(text) => text,
    Err(e) => return gen_failure(e),
  };
  let english = match linearize_ace(statement, lx) {
    Ok(text) => text,
    Err(e) => return gen_failure(e),
  };
  json!({ "ok": true, "latvian": latvian, "english": english })
}

fn paradigm_value(lemma: &str, paradigm: &str, gender: &str) -> Value {
  let Some(paradigm) = Paradigm::from_name(paradigm) else {
    return failure("UNKNOWN_PARADIGM", None, format!("unknown paradigm {:?}", paradigm));
  };
  let gender = match (gender, paradigm) {
    ("masc", _) => Gender::Masc,
    ("fem", _) => Gender::Fem,
    ("", Paradigm::D1Masc | Paradigm::AdjDefMasc) => Gender::Masc,
    ("", Paradigm::D4Fem | Paradigm::AdjDefFem) => Gender::Fem,
    _ => return failure("UNKNOWN_GENDER", None, format!("unknown gender {:?}", gender)),
  };
  let table = match generate_paradigm(lemma, paradigm, gender) {
    Ok(table) => table,
    Err(e) => return failure("MORPHOLOGY", None, e.to_string()),
  };
  let cell = |case, number| table.get(case, number).map_or(Value::Null, |s| json!(s));
  json!({
    "ok": true,
    "nom": { "sg": cell(Case::Nom, Number::Sg), "pl": cell(Case::Nom, Number::Pl) },
    "gen": { "sg": cell(Case::Gen, Number::Sg), "pl": cell(Case::Gen, Number::Pl) },
    "acc": { "sg": cell(Case::Acc, Number::Sg), "pl": cell(Case::Acc, Number::Pl) },
    "loc": { "sg": cell(Case::Loc, Number::Sg), "pl": cell(Case::Loc, Number::Pl) },
  })
}

/// Parses a controlled-Latvian sentence; returns JSON with the emitted
/// formalism, canonical paraphrases, and the discourse representation.
#[wasm_bindgen]
pub fn translate(sentence: &str) -> String {
  translate_value(sentence).to_string()
}

/// Verbalizes one Manchester axiom; returns JSON with the controlled
/// Latvian and English readings.
#[wasm_bindgen]
pub fn verbalize(axiom: &str) -> String {
  verbalize_value(axiom).to_string()
}

/// Declines a lemma under a named paradigm; returns the eight-cell
/// table as JSON.
#[wasm_bindgen]
pub fn paradigm(lemma: &str, paradigm_name: &str, gender: &str) -> String {
  paradigm_value(lemma, paradigm_name, gender).to_string()
}
