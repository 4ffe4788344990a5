//! The closed-class vocabulary: determiners, pronouns and the copula.
//!
//! These words are built into the grammar rather than declared in lexicon
//! files. Each declinable word carries an explicit form table (they are
//! pronominal and partly irregular, so nothing is gained by deriving them
//! from the noun paradigms). Lookup goes from a surface token to the set
//! of morphological analyses; generation goes from features to the
//! canonical surface.
//!
//! Multi-word units ("kaut kas", "vai nu") are stored with underscores,
//! matching the tokenizer's normalization of multi-word input.

use std::collections::HashMap;

use crate::morphology::{Case, FormTable, Gender, Number};

/// Determiners that precede a class noun.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Det {
  /// Universal "ikviens" (singular).
  Ikviens,
  /// Universal "katrs" (singular variant of `Ikviens`).
  Katrs,
  /// Universal "visi" (plural only).
  Visi,
  /// Indefinite "kāds".
  Kads,
  /// Negative "neviens".
  Neviens,
  /// Demonstrative "šis", marking an anaphoric mention.
  Sis,
}

/// Relative pronouns that open a relative clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelPron {
  /// "kas" — indeclinable for gender and number.
  Kas,
  /// "kurš" — agrees with the antecedent in gender and number.
  Kurs,
}

/// Pronouns that stand for an unrestricted thing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThingPron {
  /// Demonstrative head "tas" / plural "tie", as in "tas, kas …".
  Tas,
  /// "jebkas" — universal thing pronoun.
  Jebkas,
  /// "viss" — universal thing pronoun.
  Viss,
  /// "kaut kas" — existential thing pronoun.
  KautKas,
}

/// One morphological analysis of a function-word token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionAnalysis {
  Det { det: Det, gender: Gender, case: Case, number: Number },
  Rel { pron: RelPron, gender: Option<Gender>, case: Case, number: Option<Number> },
  Thing { pron: ThingPron, case: Case, number: Number },
  Copula { negative: bool },
  /// "vai": the question particle, also the disjunction coordinator.
  Vai,
  /// "vai nu": optional opener before the first disjunct.
  VaiNu,
}

/// The built-in function-word inventory.
#[derive(Debug)]
pub struct FunctionLexicon {
  analyses: HashMap<String, Vec<FunctionAnalysis>>,
  dets: HashMap<(Det, Gender), FormTable>,
  kurs: HashMap<Gender, FormTable>,
  things: HashMap<ThingPron, FormTable>,
  kas: FormTable,
}

/// Fills a table from eight surfaces ordered NOM GEN ACC LOC, singular row
/// then plural row; empty strings leave the cell unset.
fn table(forms: [&str; 8]) -> FormTable {
  let mut t = FormTable::new();
  for (i, n) in Number::ALL.into_iter().enumerate() {
    for (j, c) in Case::ALL.into_iter().enumerate() {
      let s = forms[i * 4 + j];
      if !s.is_empty() {
        t.set(c, n, s);
      }
    }
  }
  t
}

impl FunctionLexicon {
  pub fn new() -> FunctionLexicon {
    let mut fx = FunctionLexicon {
      analyses: HashMap::new(),
      dets: HashMap::new(),
      kurs: HashMap::new(),
      things: HashMap::new(),
      kas: FormTable::new(),
    };

    let dets: [(Det, Gender, [&str; 8]); 11] = [
      (Det::Ikviens, Gender::Masc,
       ["ikviens", "ikviena", "ikvienu", "ikvienā",
        "ikvieni", "ikvienu", "ikvienus", "ikvienos"]),
      (Det::Ikviens, Gender::Fem,
       ["ikviena", "ikvienas", "ikvienu", "ikvienā",
        "ikvienas", "ikvienu", "ikvienas", "ikvienās"]),
      (Det::Katrs, Gender::Masc,
       ["katrs", "katra", "katru", "katrā",
        "katri", "katru", "katrus", "katros"]),
      (Det::Katrs, Gender::Fem,
       ["katra", "katras", "katru", "katrā",
        "katras", "katru", "katras", "katrās"]),
      (Det::Visi, Gender::Masc,
       ["", "", "", "", "visi", "visu", "visus", "visos"]),
      (Det::Visi, Gender::Fem,
       ["", "", "", "", "visas", "visu", "visas", "visās"]),
      (Det::Kads, Gender::Masc,
       ["kāds", "kāda", "kādu", "kādā",
        "kādi", "kādu", "kādus", "kādos"]),
      (Det::Kads, Gender::Fem,
       ["kāda", "kādas", "kādu", "kādā",
        "kādas", "kādu", "kādas", "kādās"]),
      (Det::Neviens, Gender::Masc,
       ["neviens", "neviena", "nevienu", "nevienā",
        "nevieni", "nevienu", "nevienus", "nevienos"]),
      (Det::Neviens, Gender::Fem,
       ["neviena", "nevienas", "nevienu", "nevienā",
        "nevienas", "nevienu", "nevienas", "nevienās"]),
      // `Sis` is added below with its two irregular tables.
      (Det::Sis, Gender::Masc,
       ["šis", "šī", "šo", "šajā", "šie", "šo", "šos", "šajos"]),
    ];
    for (det, gender, forms) in dets {
      fx.add_det(det, gender, table(forms));
    }
    fx.add_det(
      Det::Sis,
      Gender::Fem,
      table(["šī", "šīs", "šo", "šajā", "šīs", "šo", "šīs", "šajās"]),
    );

    fx.add_kurs(
      Gender::Masc,
      table(["kurš", "kura", "kuru", "kurā", "kuri", "kuru", "kurus", "kuros"]),
    );
    fx.add_kurs(
      Gender::Fem,
      table(["kura", "kuras", "kuru", "kurā", "kuras", "kuru", "kuras", "kurās"]),
    );

    // "kas" distinguishes case only; expose it in both numbers.
    fx.kas = table(["kas", "kā", "ko", "", "", "", "", ""]);
    for (case, surface) in [(Case::Nom, "kas"), (Case::Gen, "kā"), (Case::Acc, "ko")] {
      fx.push(
        surface,
        FunctionAnalysis::Rel { pron: RelPron::Kas, gender: None, case, number: None },
      );
    }

    fx.add_thing(
      ThingPron::Tas,
      table(["tas", "tā", "to", "tajā", "tie", "to", "tos", "tajos"]),
    );
    fx.add_thing(ThingPron::Jebkas, table(["jebkas", "jebkā", "jebko", "", "", "", "", ""]));
    fx.add_thing(ThingPron::Viss, table(["viss", "", "", "", "", "", "", ""]));
    fx.add_thing(
      ThingPron::KautKas,
      table(["kaut_kas", "kaut_kā", "kaut_ko", "", "", "", "", ""]),
    );

    fx.push("ir", FunctionAnalysis::Copula { negative: false });
    fx.push("nav", FunctionAnalysis::Copula { negative: true });
    fx.push("vai", FunctionAnalysis::Vai);
    fx.push("vai_nu", FunctionAnalysis::VaiNu);

    fx
  }

  fn push(&mut self, surface: &str, analysis: FunctionAnalysis) {
    self.analyses.entry(surface.to_string()).or_default().push(analysis);
  }

  fn add_det(&mut self, det: Det, gender: Gender, t: FormTable) {
    for (case, number, surface) in t.iter() {
      let surface = surface.to_string();
      self
        .analyses
        .entry(surface)
        .or_default()
        .push(FunctionAnalysis::Det { det, gender, case, number });
    }
    self.dets.insert((det, gender), t);
  }

  fn add_kurs(&mut self, gender: Gender, t: FormTable) {
    for (case, number, surface) in t.iter() {
      let surface = surface.to_string();
      self.analyses.entry(surface).or_default().push(FunctionAnalysis::Rel {
        pron: RelPron::Kurs,
        gender: Some(gender),
        case,
        number: Some(number),
      });
    }
    self.kurs.insert(gender, t);
  }

  fn add_thing(&mut self, pron: ThingPron, t: FormTable) {
    for (case, number, surface) in t.iter() {
      let surface = surface.to_string();
      self
        .analyses
        .entry(surface)
        .or_default()
        .push(FunctionAnalysis::Thing { pron, case, number });
    }
    self.things.insert(pron, t);
  }

  /// All analyses of a surface token; empty when the token is not a
  /// function word.
  pub fn lookup(&self, surface: &str) -> &[FunctionAnalysis] {
    self.analyses.get(surface).map(|v| v.as_slice()).unwrap_or(&[])
  }

  pub fn contains(&self, surface: &str) -> bool {
    self.analyses.contains_key(surface)
  }

  /// Canonical surface of a determiner for the given features.
  pub fn det(&self, det: Det, gender: Gender, case: Case, number: Number) -> Option<&str> {
    self.dets.get(&(det, gender)).and_then(|t| t.get(case, number))
  }

  /// Canonical surface of "kas" in the given case.
  pub fn kas(&self, case: Case) -> Option<&str> {
    self.kas.get(case, Number::Sg)
  }

  /// Canonical surface of "kurš" for the given features.
  pub fn kurs(&self, gender: Gender, case: Case, number: Number) -> Option<&str> {
    self.kurs.get(&gender).and_then(|t| t.get(case, number))
  }

  /// Canonical surface of a thing pronoun for the given features.
  pub fn thing(&self, pron: ThingPron, case: Case, number: Number) -> Option<&str> {
    self.things.get(&pron).and_then(|t| t.get(case, number))
  }
}

impl Default for FunctionLexicon {
  fn default() -> FunctionLexicon {
    FunctionLexicon::new()
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn kuru_is_four_ways_ambiguous() {
    let fx = FunctionLexicon::new();
    let analyses = fx.lookup("kuru");
    assert_eq!(analyses.len(), 4);
    assert!(analyses.iter().all(|a| matches!(a, FunctionAnalysis::Rel { pron: RelPron::Kurs, .. })));
  }

  #[test]
  fn sajaa_covers_both_genders() {
    let fx = FunctionLexicon::new();
    let analyses = fx.lookup("šajā");
    let genders: Vec<Gender> = analyses
      .iter()
      .filter_map(|a| match a {
        FunctionAnalysis::Det { det: Det::Sis, gender, case: Case::Loc, number: Number::Sg } => {
          Some(*gender)
        }
        _ => None,
      })
      .collect();
    assert!(genders.contains(&Gender::Masc) && genders.contains(&Gender::Fem));
  }

  #[test]
  fn visi_is_plural_only() {
    let fx = FunctionLexicon::new();
    assert_eq!(fx.det(Det::Visi, Gender::Masc, Case::Nom, Number::Sg), None);
    assert_eq!(fx.det(Det::Visi, Gender::Masc, Case::Nom, Number::Pl), Some("visi"));
    assert_eq!(fx.det(Det::Visi, Gender::Fem, Case::Acc, Number::Pl), Some("visas"));
  }

  #[test]
  fn canonical_determiner_surfaces() {
    let fx = FunctionLexicon::new();
    assert_eq!(fx.det(Det::Ikviens, Gender::Masc, Case::Acc, Number::Sg), Some("ikvienu"));
    assert_eq!(fx.det(Det::Ikviens, Gender::Fem, Case::Gen, Number::Sg), Some("ikvienas"));
    assert_eq!(fx.det(Det::Kads, Gender::Fem, Case::Gen, Number::Sg), Some("kādas"));
    assert_eq!(fx.det(Det::Neviens, Gender::Fem, Case::Loc, Number::Sg), Some("nevienā"));
    assert_eq!(fx.det(Det::Sis, Gender::Masc, Case::Nom, Number::Sg), Some("šis"));
    assert_eq!(fx.det(Det::Sis, Gender::Fem, Case::Loc, Number::Sg), Some("šajā"));
  }

  #[test]
  fn relative_pronoun_surfaces() {
    let fx = FunctionLexicon::new();
    assert_eq!(fx.kas(Case::Nom), Some("kas"));
    assert_eq!(fx.kas(Case::Acc), Some("ko"));
    assert_eq!(fx.kas(Case::Loc), None);
    assert_eq!(fx.kurs(Gender::Fem, Case::Loc, Number::Sg), Some("kurā"));
    assert_eq!(fx.kurs(Gender::Masc, Case::Nom, Number::Pl), Some("kuri"));
  }

  #[test]
  fn thing_pronouns() {
    let fx = FunctionLexicon::new();
    assert_eq!(fx.thing(ThingPron::Tas, Case::Nom, Number::Pl), Some("tie"));
    assert_eq!(fx.thing(ThingPron::KautKas, Case::Acc, Number::Sg), Some("kaut_ko"));
    assert_eq!(fx.thing(ThingPron::Viss, Case::Acc, Number::Sg), None);
    let analyses = fx.lookup("kaut_kas");
    assert!(matches!(
      analyses[0],
      FunctionAnalysis::Thing { pron: ThingPron::KautKas, case: Case::Nom, number: Number::Sg }
    ));
  }

  #[test]
  fn copula_and_particles() {
    let fx = FunctionLexicon::new();
    assert!(matches!(fx.lookup("ir")[0], FunctionAnalysis::Copula { negative: false }));
    assert!(matches!(fx.lookup("nav")[0], FunctionAnalysis::Copula { negative: true }));
    assert!(matches!(fx.lookup("vai")[0], FunctionAnalysis::Vai));
    assert!(matches!(fx.lookup("vai_nu")[0], FunctionAnalysis::VaiNu));
    assert!(fx.lookup("profesors").is_empty());
  }
}
