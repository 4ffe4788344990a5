//! Nominal morphology: cases, numbers, genders, and paradigm-driven
//! inflection tables.
//!
//! The controlled fragment needs four cases (nominative, genitive,
//! accusative, locative) in two numbers, so every noun term carries an
//! eight-cell form table. Tables are usually generated from a small
//! paradigm inventory and a lemma; individual cells can be overridden in
//! the lexicon file for irregular words.
//!
//! Multi-word lemmas ("obligātais kurss") inflect word-by-word: the last
//! word is the head noun and follows the noun declension for the entry's
//! gender, the preceding words follow the attribute pattern named by the
//! paradigm (definite-adjective endings, or an invariant genitive
//! attribute). Canonical surfaces join the words with underscores, which
//! is also how the tokenizer normalizes multi-word input.

use std::fmt;

use thiserror::Error;

/// Grammatical case. The fragment never needs dative or vocative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
  Nom,
  Gen,
  Acc,
  Loc,
}

impl Case {
  pub const ALL: [Case; 4] = [Case::Nom, Case::Gen, Case::Acc, Case::Loc];
}

impl fmt::Display for Case {
  fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
    let s = match self {
      Case::Nom => "NOM",
      Case::Gen => "GEN",
      Case::Acc => "ACC",
      Case::Loc => "LOC",
    };
    write!(f, "{}", s)
  }
}

/// Grammatical number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Number {
  Sg,
  Pl,
}

impl Number {
  pub const ALL: [Number; 2] = [Number::Sg, Number::Pl];
}

impl fmt::Display for Number {
  fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
    write!(f, "{}", if *self == Number::Sg { "SG" } else { "PL" })
  }
}

/// Grammatical gender. Latvian nouns are masculine or feminine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gender {
  Masc,
  Fem,
}

/// Inflection paradigms the lexicon can name.
///
/// `D1Masc` and `D4Fem` are the first (masc. -s) and fourth (fem. -a)
/// noun declensions. `AdjDefMasc` / `AdjDefFem` inflect a definite
/// adjective attribute ("obligātais", "akadēmiskā") in front of a head
/// noun. `GenAttr` keeps the attribute words invariant (frozen genitive
/// like "izvēles") and inflects only the head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Paradigm {
  D1Masc,
  D4Fem,
  AdjDefMasc,
  AdjDefFem,
  GenAttr,
}

impl Paradigm {
  /// Parses the paradigm name used in lexicon files.
  pub fn from_name(name: &str) -> Option<Paradigm> {
    match name {
      "d1-masc" => Some(Paradigm::D1Masc),
      "d4-fem" => Some(Paradigm::D4Fem),
      "adjdef-masc" => Some(Paradigm::AdjDefMasc),
      "adjdef-fem" => Some(Paradigm::AdjDefFem),
      "gen-attr" => Some(Paradigm::GenAttr),
      _ => None,
    }
  }

  pub fn name(&self) -> &'static str {
    match self {
      Paradigm::D1Masc => "d1-masc",
      Paradigm::D4Fem => "d4-fem",
      Paradigm::AdjDefMasc => "adjdef-masc",
      Paradigm::AdjDefFem => "adjdef-fem",
      Paradigm::GenAttr => "gen-attr",
    }
  }
}

/// An eight-cell inflection table (four cases by two numbers).
///
/// Cells may be empty when an entry is given partially by explicit forms;
/// `Lexicon::validate` reports empty cells as warnings and `inflect`
/// refuses to use them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormTable {
  cells: [Option<String>; 8],
}

fn cell_index(case: Case, number: Number) -> usize {
  let c = match case {
    Case::Nom => 0,
    Case::Gen => 1,
    Case::Acc => 2,
    Case::Loc => 3,
  };
  c + if number == Number::Pl { 4 } else { 0 }
}

impl FormTable {
  pub fn new() -> FormTable {
    FormTable::default()
  }

  pub fn get(&self, case: Case, number: Number) -> Option<&str> {
    self.cells[cell_index(case, number)].as_deref()
  }

  pub fn set(&mut self, case: Case, number: Number, surface: impl Into<String>) {
    self.cells[cell_index(case, number)] = Some(surface.into());
  }

  /// Iterates over the filled cells as `(case, number, surface)`.
  pub fn iter(&self) -> impl Iterator<Item = (Case, Number, &str)> {
    Number::ALL.into_iter().flat_map(move |n| {
      Case::ALL
        .into_iter()
        .filter_map(move |c| self.get(c, n).map(move |s| (c, n, s)))
    })
  }

  /// The `(case, number)` slots that have no surface yet.
  pub fn missing(&self) -> Vec<(Case, Number)> {
    let mut out = vec![];
    for n in Number::ALL {
      for c in Case::ALL {
        if self.get(c, n).is_none() {
          out.push((c, n));
        }
      }
    }
    out
  }
}

/// Errors from paradigm-based table generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
  #[error("lemma {lemma:?} does not fit paradigm {paradigm}: expected the {word:?} to end in {suffix:?}")]
  BadLemmaShape {
    lemma: String,
    paradigm: &'static str,
    word: String,
    suffix: &'static str,
  },
  #[error("paradigm {paradigm} expects {expected:?} gender but the entry is marked otherwise")]
  GenderMismatch { paradigm: &'static str, expected: &'static str },
  #[error("empty lemma")]
  EmptyLemma,
}

/// Case endings for one number, ordered NOM, GEN, ACC, LOC.
type Endings = [&'static str; 4];

const D1_SG: Endings = ["s", "a", "u", "ā"];
const D1_PL: Endings = ["i", "u", "us", "os"];
const D4_SG: Endings = ["a", "as", "u", "ā"];
const D4_PL: Endings = ["as", "u", "as", "ās"];
const ADJ_MASC_SG: Endings = ["ais", "ā", "o", "ajā"];
const ADJ_MASC_PL: Endings = ["ie", "o", "os", "ajos"];
const ADJ_FEM_SG: Endings = ["ā", "ās", "o", "ajā"];
const ADJ_FEM_PL: Endings = ["ās", "o", "ās", "ajās"];

fn ending(table: (Endings, Endings), case: Case, number: Number) -> &'static str {
  let row = if number == Number::Sg { table.0 } else { table.1 };
  row[match case {
    Case::Nom => 0,
    Case::Gen => 1,
    Case::Acc => 2,
    Case::Loc => 3,
  }]
}

/// How a single word inside a lemma inflects.
enum WordPattern {
  Noun(Gender),
  AdjDef(Gender),
  Invariant,
}

fn strip_nominative<'a>(
  lemma: &str,
  word: &'a str,
  suffix: &'static str,
  paradigm: &'static str,
) -> Result<&'a str, MorphError> {
  word.strip_suffix(suffix).ok_or_else(|| MorphError::BadLemmaShape {
    lemma: lemma.to_string(),
    paradigm,
    word: word.to_string(),
    suffix,
  })
}

fn inflect_word(
  lemma: &str,
  word: &str,
  pattern: &WordPattern,
  case: Case,
  number: Number,
) -> Result<String, MorphError> {
  match pattern {
    WordPattern::Invariant => Ok(word.to_string()),
    WordPattern::Noun(Gender::Masc) => {
      let stem = strip_nominative(lemma, word, "s", "d1-masc")?;
      Ok(format!("{}{}", stem, ending((D1_SG, D1_PL), case, number)))
    }
    WordPattern::Noun(Gender::Fem) => {
      let stem = strip_nominative(lemma, word, "a", "d4-fem")?;
      Ok(format!("{}{}", stem, ending((D4_SG, D4_PL), case, number)))
    }
    WordPattern::AdjDef(Gender::Masc) => {
      let stem = strip_nominative(lemma, word, "ais", "adjdef-masc")?;
      Ok(format!("{}{}", stem, ending((ADJ_MASC_SG, ADJ_MASC_PL), case, number)))
    }
    WordPattern::AdjDef(Gender::Fem) => {
      let stem = strip_nominative(lemma, word, "ā", "adjdef-fem")?;
      Ok(format!("{}{}", stem, ending((ADJ_FEM_SG, ADJ_FEM_PL), case, number)))
    }
  }
}

/// Generates the full eight-cell table for a lemma under a paradigm.
///
/// The lemma is given in the dictionary form (nominative singular); words
/// may be separated by spaces or underscores. Surfaces in the resulting
/// table are underscore-joined.
pub fn generate_paradigm(
  lemma: &str,
  paradigm: Paradigm,
  gender: Gender,
) -> Result<FormTable, MorphError> {
  let words: Vec<&str> =
    lemma.split(|ch: char| ch == ' ' || ch == '_').filter(|w| !w.is_empty()).collect();
  if words.is_empty() {
    return Err(MorphError::EmptyLemma);
  }

  match (paradigm, gender) {
    (Paradigm::D1Masc, Gender::Fem) => {
      return Err(MorphError::GenderMismatch { paradigm: "d1-masc", expected: "masc" })
    }
    (Paradigm::D4Fem, Gender::Masc) => {
      return Err(MorphError::GenderMismatch { paradigm: "d4-fem", expected: "fem" })
    }
    (Paradigm::AdjDefMasc, Gender::Fem) => {
      return Err(MorphError::GenderMismatch { paradigm: "adjdef-masc", expected: "masc" })
    }
    (Paradigm::AdjDefFem, Gender::Masc) => {
      return Err(MorphError::GenderMismatch { paradigm: "adjdef-fem", expected: "fem" })
    }
    _ => {}
  }

  // The last word is the head noun; everything before it is an attribute
  // inflected (or frozen) according to the paradigm.
  let attr_pattern = match paradigm {
    Paradigm::AdjDefMasc => WordPattern::AdjDef(Gender::Masc),
    Paradigm::AdjDefFem => WordPattern::AdjDef(Gender::Fem),
    Paradigm::GenAttr => WordPattern::Invariant,
    Paradigm::D1Masc | Paradigm::D4Fem => WordPattern::Noun(gender),
  };
  let head_pattern = match (paradigm, words.len()) {
    // A single-word definite adjective entry is a nominalized adjective.
    (Paradigm::AdjDefMasc, 1) => WordPattern::AdjDef(Gender::Masc),
    (Paradigm::AdjDefFem, 1) => WordPattern::AdjDef(Gender::Fem),
    _ => WordPattern::Noun(gender),
  };

  let mut table = FormTable::new();
  for n in Number::ALL {
    for c in Case::ALL {
      let mut parts = Vec::with_capacity(words.len());
      for (i, word) in words.iter().enumerate() {
        let pattern = if i + 1 == words.len() { &head_pattern } else { &attr_pattern };
        parts.push(inflect_word(lemma, word, pattern, c, n)?);
      }
      table.set(c, n, parts.join("_"));
    }
  }
  Ok(table)
}

#[cfg(test)]
mod tests {
  use super::*;

  fn full(lemma: &str, paradigm: Paradigm, gender: Gender) -> FormTable {
    generate_paradigm(lemma, paradigm, gender).unwrap()
  }

  fn row(t: &FormTable, n: Number) -> Vec<&str> {
    Case::ALL.iter().map(|&c| t.get(c, n).unwrap()).collect()
  }

  // Reference table for a first-declension masculine noun, straight from a
  // standard declension chart: profesors, profesora, profesoru, profesorā;
  // profesori, profesoru, profesorus, profesoros.
  #[test]
  fn d1_masc_full_table() {
    let t = full("profesors", Paradigm::D1Masc, Gender::Masc);
    assert_eq!(row(&t, Number::Sg), ["profesors", "profesora", "profesoru", "profesorā"]);
    assert_eq!(row(&t, Number::Pl), ["profesori", "profesoru", "profesorus", "profesoros"]);
  }

  #[test]
  fn d1_masc_double_s_lemma() {
    let t = full("kurss", Paradigm::D1Masc, Gender::Masc);
    assert_eq!(row(&t, Number::Sg), ["kurss", "kursa", "kursu", "kursā"]);
    assert_eq!(row(&t, Number::Pl), ["kursi", "kursu", "kursus", "kursos"]);
  }

  #[test]
  fn d1_masc_diacritic_stem() {
    let t = full("pasniedzējs", Paradigm::D1Masc, Gender::Masc);
    assert_eq!(t.get(Case::Nom, Number::Pl), Some("pasniedzēji"));
    assert_eq!(t.get(Case::Acc, Number::Sg), Some("pasniedzēju"));
  }

  // Fourth declension feminine: programma, programmas, programmu, programmā;
  // programmas, programmu, programmas, programmās.
  #[test]
  fn d4_fem_full_table() {
    let t = full("programma", Paradigm::D4Fem, Gender::Fem);
    assert_eq!(row(&t, Number::Sg), ["programma", "programmas", "programmu", "programmā"]);
    assert_eq!(row(&t, Number::Pl), ["programmas", "programmu", "programmas", "programmās"]);
  }

  #[test]
  fn adjdef_masc_multiword() {
    let t = full("obligātais kurss", Paradigm::AdjDefMasc, Gender::Masc);
    assert_eq!(
      row(&t, Number::Sg),
      ["obligātais_kurss", "obligātā_kursa", "obligāto_kursu", "obligātajā_kursā"]
    );
    assert_eq!(
      row(&t, Number::Pl),
      ["obligātie_kursi", "obligāto_kursu", "obligātos_kursus", "obligātajos_kursos"]
    );
  }

  #[test]
  fn adjdef_fem_multiword() {
    let t = full("akadēmiskā programma", Paradigm::AdjDefFem, Gender::Fem);
    assert_eq!(
      row(&t, Number::Sg),
      [
        "akadēmiskā_programma",
        "akadēmiskās_programmas",
        "akadēmisko_programmu",
        "akadēmiskajā_programmā"
      ]
    );
    assert_eq!(
      row(&t, Number::Pl),
      [
        "akadēmiskās_programmas",
        "akadēmisko_programmu",
        "akadēmiskās_programmas",
        "akadēmiskajās_programmās"
      ]
    );
  }

  #[test]
  fn gen_attr_first_word_invariant() {
    let t = full("izvēles kurss", Paradigm::GenAttr, Gender::Masc);
    assert_eq!(row(&t, Number::Sg), ["izvēles_kurss", "izvēles_kursa", "izvēles_kursu", "izvēles_kursā"]);
    assert_eq!(t.get(Case::Nom, Number::Pl), Some("izvēles_kursi"));
  }

  #[test]
  fn underscore_lemma_accepted() {
    let a = full("obligātais_kurss", Paradigm::AdjDefMasc, Gender::Masc);
    let b = full("obligātais kurss", Paradigm::AdjDefMasc, Gender::Masc);
    assert_eq!(a, b);
  }

  #[test]
  fn lemma_shape_errors() {
    let e = generate_paradigm("kurss", Paradigm::D4Fem, Gender::Fem).unwrap_err();
    assert!(matches!(e, MorphError::BadLemmaShape { suffix: "a", .. }));
    let e = generate_paradigm("programma", Paradigm::D1Masc, Gender::Masc).unwrap_err();
    assert!(matches!(e, MorphError::BadLemmaShape { suffix: "s", .. }));
    let e = generate_paradigm("obligāts kurss", Paradigm::AdjDefMasc, Gender::Masc).unwrap_err();
    assert!(matches!(e, MorphError::BadLemmaShape { suffix: "ais", .. }));
  }

  #[test]
  fn gender_paradigm_mismatch() {
    let e = generate_paradigm("kurss", Paradigm::D1Masc, Gender::Fem).unwrap_err();
    assert!(matches!(e, MorphError::GenderMismatch { .. }));
  }

  #[test]
  fn missing_cells_reported() {
    let mut t = FormTable::new();
    t.set(Case::Nom, Number::Sg, "vīrs");
    assert_eq!(t.missing().len(), 7);
    assert!(t.missing().contains(&(Case::Acc, Number::Pl)));
  }
}
