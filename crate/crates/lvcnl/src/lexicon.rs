//! The domain lexicon: loading, validation, inflection and surface lookup.
//!
//! A lexicon file declares the open-class vocabulary of one domain: noun
//! terms that realize ontology classes, and property lexemes that realize
//! object properties. The closed-class function words live in
//! [`FunctionLexicon`] and are shared by every domain.
//!
//! The file format is UTF-8 and line-oriented. A block starts with
//! `class <ClassId>` or `property <PropertyId>` at column zero, followed
//! by indented `key: value` lines; `#` starts a comment line. Class keys:
//!
//! ```text
//! class MandatoryCourse
//!   lemma: obligātais kurss        # pipe-separated synonyms, first canonical
//!   gender: masc
//!   paradigm: adjdef-masc          # optional when explicit forms are given
//!   form.ACC.SG: obligāto kursu    # optional cell override (canonical lemma)
//!   animate: false
//!   ace: mandatory_course | mandatory_courses
//! ```
//!
//! Property keys: `kind: verb|locative|role`, then for verbs `verb:` /
//! `neg:` (pipe-separated, parallel synonym lists of 3rd-person forms);
//! for locative predicates `participle.<gender>.<num>:` cells plus an
//! optional `active:` / `active-neg:` synonym; for genitive roles
//! `role-noun:` and `role-gender:`. All kinds take `direction:
//! subject-domain|subject-range` (where the subject is the nominative,
//! non-genitive participant) and `ace-active:` / `ace-passive:` surfaces.
//!
//! Loading is total: it returns either a lexicon or the full list of
//! format errors with line numbers, never a panic. [`Lexicon::validate`]
//! reports softer defects — cross-entry surface ambiguity, missing ACE
//! surfaces, empty form cells, redundant overrides — as warnings.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::function_words::{FunctionAnalysis, FunctionLexicon};
use crate::morphology::{generate_paradigm, Case, FormTable, Gender, Number, Paradigm};

/// A noun term realizing one ontology class.
#[derive(Debug, Clone)]
pub struct NounTerm {
  pub class_id: String,
  pub gender: Gender,
  pub animate: bool,
  /// Inflection tables, first canonical, the rest synonyms.
  pub realizations: Vec<Realization>,
  pub ace_sg: String,
  pub ace_pl: String,
  /// Explicit cell overrides (applied to the canonical realization).
  overrides: Vec<(Case, Number, String)>,
}

/// One realization (lemma) of a noun term with its generated forms.
#[derive(Debug, Clone)]
pub struct Realization {
  pub lemma: String,
  pub paradigm: Option<Paradigm>,
  pub forms: FormTable,
}

impl NounTerm {
  /// The canonical surface for a cell.
  pub fn form(&self, case: Case, number: Number) -> Option<&str> {
    self.realizations[0].forms.get(case, number)
  }
}

/// How a property lexeme is realized in Latvian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyKind {
  /// 3rd-person transitive verb ("māca").
  TransitiveVerb,
  /// Perfect participle with an auxiliary and a locative argument
  /// ("ir iekļauts … programmā"), optionally with an active synonym.
  LocativePredicate,
  /// Role noun with a genitive argument ("programmas daļa").
  GenitiveRole,
}

/// Which participant of the surface construction is the property's domain.
///
/// The "subject" is the nominative (for roles: the non-genitive)
/// participant. `SubjectIsRange` therefore means the property points from
/// the other participant to the subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
  SubjectIsDomain,
  SubjectIsRange,
}

/// A positive 3rd-person verb form with its negated counterpart.
#[derive(Debug, Clone)]
pub struct VerbForm {
  pub positive: String,
  pub negative: String,
}

/// Participle cells by gender and number (agreeing with the nominative
/// argument).
#[derive(Debug, Clone, Default)]
pub struct Participles {
  cells: [Option<String>; 4],
}

fn participle_index(gender: Gender, number: Number) -> usize {
  (if gender == Gender::Fem { 1 } else { 0 }) + if number == Number::Pl { 2 } else { 0 }
}

impl Participles {
  pub fn get(&self, gender: Gender, number: Number) -> Option<&str> {
    self.cells[participle_index(gender, number)].as_deref()
  }

  pub fn set(&mut self, gender: Gender, number: Number, surface: impl Into<String>) {
    self.cells[participle_index(gender, number)] = Some(surface.into());
  }

  pub fn iter(&self) -> impl Iterator<Item = (Gender, Number, &str)> {
    [(Gender::Masc, Number::Sg), (Gender::Fem, Number::Sg), (Gender::Masc, Number::Pl),
     (Gender::Fem, Number::Pl)]
    .into_iter()
    .filter_map(|(g, n)| self.get(g, n).map(move |s| (g, n, s)))
  }
}

/// The role noun of a genitive-role lexeme, with its generated forms.
#[derive(Debug, Clone)]
pub struct RoleNoun {
  pub lemma: String,
  pub gender: Gender,
  pub forms: FormTable,
}

/// A property lexeme realizing one object property.
#[derive(Debug, Clone)]
pub struct PropertyLexeme {
  pub property_id: String,
  pub kind: PropertyKind,
  pub direction: Direction,
  /// Verb synonym list (first canonical) for `TransitiveVerb`.
  pub verbs: Vec<VerbForm>,
  /// Participle cells for `LocativePredicate`.
  pub participles: Participles,
  /// Optional active-verb synonym of a `LocativePredicate`.
  pub active: Option<VerbForm>,
  /// Role noun for `GenitiveRole`.
  pub role_noun: Option<RoleNoun>,
  pub ace_active: String,
  pub ace_passive: String,
}

/// One morphological analysis of a surface token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Analysis {
  /// A noun-term form: indices into `Lexicon::nouns` and its realizations.
  Noun { term: usize, variant: usize, gender: Gender, case: Case, number: Number },
  /// A role-noun form of a genitive-role lexeme.
  RoleNoun { prop: usize, gender: Gender, case: Case, number: Number },
  /// A 3rd-person verb form (number-invariant).
  Verb { prop: usize, synonym: usize, negative: bool },
  /// The active synonym of a locative predicate (number-invariant).
  ActiveLoc { prop: usize, negative: bool },
  /// A participle form of a locative predicate.
  Participle { prop: usize, gender: Gender, number: Number },
  /// A built-in function word.
  Function(FunctionAnalysis),
}

/// One load-time format error, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadIssue {
  pub line: usize,
  pub message: String,
}

impl fmt::Display for LoadIssue {
  fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
    write!(f, "line {}: {}", self.line, self.message)
  }
}

/// The full list of format errors from a failed load.
#[derive(Debug, Clone, Error)]
pub struct LexiconError {
  pub issues: Vec<LoadIssue>,
}

impl fmt::Display for LexiconError {
  fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
    write!(f, "{} lexicon format error(s)", self.issues.len())?;
    for issue in &self.issues {
      write!(f, "\n  {}", issue)?;
    }
    Ok(())
  }
}

/// Errors from [`Lexicon::inflect`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflectError {
  #[error("unknown term {0:?}")]
  UnknownTerm(String),
  #[error("variant {variant} out of range for {term:?} ({count} realizations)")]
  VariantOutOfRange { term: String, variant: usize, count: usize },
  #[error("no {case}.{number} form for {term:?}")]
  MissingForm { term: String, case: Case, number: Number },
}

/// A soft defect reported by [`Lexicon::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexWarning {
  /// Two entries share a surface form; one warning per entry pair.
  AmbiguousSurface { a: String, b: String, example: String },
  /// An entry's surface collides with a built-in function word.
  FunctionWordClash { entry: String, example: String },
  /// A noun term without ACE surfaces, or a property without ACE forms.
  MissingAce { entry: String },
  /// An empty form-table cell.
  MissingForm { entry: String, lemma: String, case: Case, number: Number },
  /// An explicit override identical to the paradigm-generated cell.
  RedundantOverride { entry: String, case: Case, number: Number },
}

impl fmt::Display for LexWarning {
  fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
    match self {
      LexWarning::AmbiguousSurface { a, b, example } => {
        write!(f, "entries {} and {} share surface {:?}", a, b, example)
      }
      LexWarning::FunctionWordClash { entry, example } => {
        write!(f, "entry {} shadows built-in function word {:?}", entry, example)
      }
      LexWarning::MissingAce { entry } => write!(f, "entry {} has no ACE surface", entry),
      LexWarning::MissingForm { entry, lemma, case, number } => {
        write!(f, "entry {}: lemma {:?} has no {}.{} form", entry, lemma, case, number)
      }
      LexWarning::RedundantOverride { entry, case, number } => {
        write!(f, "entry {}: {}.{} override equals the generated form", entry, case, number)
      }
    }
  }
}

/// A loaded, immutable domain lexicon.
#[derive(Debug)]
pub struct Lexicon {
  pub nouns: Vec<NounTerm>,
  pub properties: Vec<PropertyLexeme>,
  functions: FunctionLexicon,
  index: HashMap<String, Vec<Analysis>>,
}

impl Lexicon {
  /// Loads a lexicon from file content, accumulating every format error.
  pub fn load(text: &str) -> Result<Lexicon, LexiconError> {
    Loader::default().run(text)
  }

  pub fn functions(&self) -> &FunctionLexicon {
    &self.functions
  }

  pub fn noun_index(&self, class_id: &str) -> Option<usize> {
    self.nouns.iter().position(|n| n.class_id == class_id)
  }

  pub fn property_index(&self, property_id: &str) -> Option<usize> {
    self.properties.iter().position(|p| p.property_id == property_id)
  }

  /// The canonical surface of a term's cell.
  pub fn inflect(
    &self,
    class_id: &str,
    case: Case,
    number: Number,
    variant: usize,
  ) -> Result<&str, InflectError> {
    let term = self
      .nouns
      .iter()
      .find(|n| n.class_id == class_id)
      .ok_or_else(|| InflectError::UnknownTerm(class_id.to_string()))?;
    let realization = term.realizations.get(variant).ok_or_else(|| {
      InflectError::VariantOutOfRange {
        term: class_id.to_string(),
        variant,
        count: term.realizations.len(),
      }
    })?;
    realization.forms.get(case, number).ok_or(InflectError::MissingForm {
      term: class_id.to_string(),
      case,
      number,
    })
  }

  /// Every analysis of a surface token (content words and function words).
  pub fn lookup(&self, surface: &str) -> Vec<Analysis> {
    let mut out = self.index.get(surface).cloned().unwrap_or_default();
    out.extend(self.functions.lookup(surface).iter().copied().map(Analysis::Function));
    out
  }

  /// True when the surface is a known word of any kind. The tokenizer uses
  /// this to merge space-separated multi-word units.
  pub fn contains(&self, surface: &str) -> bool {
    self.index.contains_key(surface) || self.functions.contains(surface)
  }

  /// Reports soft defects: cross-entry ambiguity, function-word clashes,
  /// missing ACE surfaces, empty cells, redundant overrides.
  pub fn validate(&self) -> Vec<LexWarning> {
    let mut warnings = vec![];

    // Surface sets per entry, in declaration order (BTreeMap for stable
    // warning order within an entry).
    let mut entry_surfaces: Vec<(String, BTreeMap<&str, ()>)> = vec![];
    for noun in &self.nouns {
      let mut set = BTreeMap::new();
      for r in &noun.realizations {
        for (_, _, s) in r.forms.iter() {
          set.insert(s, ());
        }
      }
      entry_surfaces.push((noun.class_id.clone(), set));
    }
    for prop in &self.properties {
      let mut set = BTreeMap::new();
      for v in &prop.verbs {
        set.insert(v.positive.as_str(), ());
        set.insert(v.negative.as_str(), ());
      }
      for (_, _, s) in prop.participles.iter() {
        set.insert(s, ());
      }
      if let Some(active) = &prop.active {
        set.insert(active.positive.as_str(), ());
        set.insert(active.negative.as_str(), ());
      }
      if let Some(role) = &prop.role_noun {
        for (_, _, s) in role.forms.iter() {
          set.insert(s, ());
        }
      }
      entry_surfaces.push((prop.property_id.clone(), set));
    }

    for i in 0..entry_surfaces.len() {
      for j in i + 1..entry_surfaces.len() {
        if let Some(shared) =
          entry_surfaces[i].1.keys().find(|s| entry_surfaces[j].1.contains_key(*s))
        {
          warnings.push(LexWarning::AmbiguousSurface {
            a: entry_surfaces[i].0.clone(),
            b: entry_surfaces[j].0.clone(),
            example: shared.to_string(),
          });
        }
      }
    }
    for (entry, surfaces) in &entry_surfaces {
      if let Some(shared) = surfaces.keys().find(|s| self.functions.contains(s)) {
        warnings.push(LexWarning::FunctionWordClash {
          entry: entry.clone(),
          example: shared.to_string(),
        });
      }
    }

    for noun in &self.nouns {
      if noun.ace_sg.is_empty() || noun.ace_pl.is_empty() {
        warnings.push(LexWarning::MissingAce { entry: noun.class_id.clone() });
      }
      for r in &noun.realizations {
        for (case, number) in r.forms.missing() {
          warnings.push(LexWarning::MissingForm {
            entry: noun.class_id.clone(),
            lemma: r.lemma.clone(),
            case,
            number,
          });
        }
      }
      if let (Some(paradigm), false) = (noun.realizations[0].paradigm, noun.overrides.is_empty()) {
        if let Ok(generated) = generate_paradigm(&noun.realizations[0].lemma, paradigm, noun.gender)
        {
          for (case, number, surface) in &noun.overrides {
            if generated.get(*case, *number) == Some(surface.as_str()) {
              warnings.push(LexWarning::RedundantOverride {
                entry: noun.class_id.clone(),
                case: *case,
                number: *number,
              });
            }
          }
        }
      }
    }
    for prop in &self.properties {
      if prop.ace_active.is_empty() || prop.ace_passive.is_empty() {
        warnings.push(LexWarning::MissingAce { entry: prop.property_id.clone() });
      }
      if prop.kind == PropertyKind::LocativePredicate {
        for gender in [Gender::Masc, Gender::Fem] {
          for number in Number::ALL {
            if prop.participles.get(gender, number).is_none() {
              warnings.push(LexWarning::MissingForm {
                entry: prop.property_id.clone(),
                lemma: "participle".to_string(),
                case: Case::Nom,
                number,
              });
            }
          }
        }
      }
    }

    warnings
  }

  fn build_index(&mut self) {
    let mut index: HashMap<String, Vec<Analysis>> = HashMap::new();
    let push = |surface: &str, analysis: Analysis, index: &mut HashMap<_, Vec<_>>| {
      index.entry(surface.to_string()).or_insert_with(Vec::new).push(analysis);
    };
    for (t, noun) in self.nouns.iter().enumerate() {
      for (v, r) in noun.realizations.iter().enumerate() {
        for (case, number, surface) in r.forms.iter() {
          push(
            surface,
            Analysis::Noun { term: t, variant: v, gender: noun.gender, case, number },
            &mut index,
          );
        }
      }
    }
    for (p, prop) in self.properties.iter().enumerate() {
      for (s, verb) in prop.verbs.iter().enumerate() {
        push(&verb.positive, Analysis::Verb { prop: p, synonym: s, negative: false }, &mut index);
        push(&verb.negative, Analysis::Verb { prop: p, synonym: s, negative: true }, &mut index);
      }
      for (gender, number, surface) in prop.participles.iter() {
        push(surface, Analysis::Participle { prop: p, gender, number }, &mut index);
      }
      if let Some(active) = &prop.active {
        push(&active.positive, Analysis::ActiveLoc { prop: p, negative: false }, &mut index);
        push(&active.negative, Analysis::ActiveLoc { prop: p, negative: true }, &mut index);
      }
      if let Some(role) = &prop.role_noun {
        for (case, number, surface) in role.forms.iter() {
          push(surface, Analysis::RoleNoun { prop: p, gender: role.gender, case, number }, &mut index);
        }
      }
    }
    self.index = index;
  }
}

/// Accumulating line-oriented loader.
#[derive(Default)]
struct Loader {
  issues: Vec<LoadIssue>,
  nouns: Vec<NounTerm>,
  properties: Vec<PropertyLexeme>,
}

/// An unfinalized block: header plus collected key lines.
struct Block {
  header_line: usize,
  is_class: bool,
  id: String,
  keys: Vec<(usize, String, String)>,
}

impl Loader {
  fn err(&mut self, line: usize, message: impl Into<String>) {
    self.issues.push(LoadIssue { line, message: message.into() });
  }

  fn run(mut self, text: &str) -> Result<Lexicon, LexiconError> {
    let mut block: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
      let line_no = i + 1;
      let line = raw.trim_end();
      let trimmed = line.trim_start();
      if trimmed.is_empty() || trimmed.starts_with('#') {
        continue;
      }
      let indented = line.starts_with(' ') || line.starts_with('\t');
      if !indented {
        if let Some(done) = block.take() {
          self.finish(done);
        }
        match line.split_once(' ') {
          Some(("class", id)) if !id.trim().is_empty() => {
            block = Some(Block {
              header_line: line_no,
              is_class: true,
              id: id.trim().to_string(),
              keys: vec![],
            });
          }
          Some(("property", id)) if !id.trim().is_empty() => {
            block = Some(Block {
              header_line: line_no,
              is_class: false,
              id: id.trim().to_string(),
              keys: vec![],
            });
          }
          _ => self.err(line_no, format!("malformed line: expected `class <Id>` or `property <Id>`, got {:?}", line)),
        }
        continue;
      }
      let Some((key, value)) = trimmed.split_once(':') else {
        self.err(line_no, format!("malformed line: expected `key: value`, got {:?}", trimmed));
        continue;
      };
      let (key, value) = (key.trim().to_string(), value.trim().to_string());
      match &mut block {
        Some(b) => b.keys.push((line_no, key, value)),
        None => self.err(line_no, "key line outside any class/property block"),
      }
    }
    if let Some(done) = block.take() {
      self.finish(done);
    }

    if self.issues.is_empty() {
      let mut lexicon = Lexicon {
        nouns: self.nouns,
        properties: self.properties,
        functions: FunctionLexicon::new(),
        index: HashMap::new(),
      };
      lexicon.build_index();
      Ok(lexicon)
    } else {
      Err(LexiconError { issues: self.issues })
    }
  }

  fn finish(&mut self, block: Block) {
    if block.is_class {
      self.finish_class(block);
    } else {
      self.finish_property(block);
    }
  }

  fn finish_class(&mut self, block: Block) {
    if self.nouns.iter().any(|n| n.class_id == block.id)
      || self.properties.iter().any(|p| p.property_id == block.id)
    {
      self.err(block.header_line, format!("duplicate id {:?}", block.id));
      return;
    }

    let mut lemmas: Option<(usize, Vec<String>)> = None;
    let mut gender: Option<Gender> = None;
    let mut paradigm: Option<(usize, Paradigm)> = None;
    let mut animate = false;
    let mut ace: Option<(String, String)> = None;
    let mut overrides: Vec<(Case, Number, String)> = vec![];
    let mut bad = false;

    for (line, key, value) in &block.keys {
      let line = *line;
      match key.as_str() {
        "lemma" => {
          let list: Vec<String> =
            value.split('|').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
          if list.is_empty() {
            self.err(line, "empty lemma list");
            bad = true;
          } else {
            lemmas = Some((line, list));
          }
        }
        "gender" => match parse_gender(value) {
          Some(g) => gender = Some(g),
          None => {
            self.err(line, format!("unknown gender {:?} (expected masc|fem)", value));
            bad = true;
          }
        },
        "paradigm" => match Paradigm::from_name(value) {
          Some(p) => paradigm = Some((line, p)),
          None => {
            self.err(line, format!("unknown paradigm class {:?}", value));
            bad = true;
          }
        },
        "animate" => match value.as_str() {
          "true" => animate = true,
          "false" => animate = false,
          _ => {
            self.err(line, format!("animate must be true|false, got {:?}", value));
            bad = true;
          }
        },
        "ace" => match value.split_once('|') {
          Some((sg, pl)) => ace = Some((sg.trim().to_string(), pl.trim().to_string())),
          None => ace = Some((value.clone(), String::new())),
        },
        _ => {
          if let Some(rest) = key.strip_prefix("form.") {
            match parse_cell(rest) {
              Some((case, number)) => {
                overrides.push((case, number, value.replace(' ', "_")));
              }
              None => {
                self.err(line, format!("bad override key `form.{}` (expected form.<CASE>.<NUM>)", rest));
                bad = true;
              }
            }
          } else {
            self.err(line, format!("unknown class key {:?}", key));
            bad = true;
          }
        }
      }
    }

    let Some((lemma_line, lemmas)) = lemmas else {
      self.err(block.header_line, format!("class {} has no lemma", block.id));
      return;
    };
    let Some(gender) = gender else {
      self.err(block.header_line, format!("class {} has no gender", block.id));
      return;
    };
    if bad {
      return;
    }
    if paradigm.is_none() && overrides.is_empty() {
      self.err(
        block.header_line,
        format!("class {} has neither a paradigm nor explicit forms", block.id),
      );
      return;
    }

    let mut realizations = vec![];
    for lemma in &lemmas {
      let forms = match paradigm {
        Some((line, p)) => match generate_paradigm(lemma, p, gender) {
          Ok(t) => t,
          Err(e) => {
            self.err(if *lemma == lemmas[0] { lemma_line } else { line }, e.to_string());
            return;
          }
        },
        None => FormTable::new(),
      };
      realizations.push(Realization {
        lemma: lemma.replace(' ', "_"),
        paradigm: paradigm.map(|(_, p)| p),
        forms,
      });
    }
    for (case, number, surface) in &overrides {
      realizations[0].forms.set(*case, *number, surface.clone());
    }

    let (ace_sg, ace_pl) = ace.unwrap_or_default();
    self.nouns.push(NounTerm {
      class_id: block.id,
      gender,
      animate,
      realizations,
      ace_sg,
      ace_pl,
      overrides,
    });
  }

  fn finish_property(&mut self, block: Block) {
    if self.nouns.iter().any(|n| n.class_id == block.id)
      || self.properties.iter().any(|p| p.property_id == block.id)
    {
      self.err(block.header_line, format!("duplicate id {:?}", block.id));
      return;
    }

    let mut kind: Option<PropertyKind> = None;
    let mut direction: Option<Direction> = None;
    let mut verb: Option<(usize, Vec<String>)> = None;
    let mut neg: Option<(usize, Vec<String>)> = None;
    let mut participles = Participles::default();
    let mut active: Option<String> = None;
    let mut active_neg: Option<String> = None;
    let mut role_noun: Option<String> = None;
    let mut role_gender: Option<Gender> = None;
    let mut ace_active = String::new();
    let mut ace_passive = String::new();
    let mut bad = false;

    for (line, key, value) in &block.keys {
      let line = *line;
      match key.as_str() {
        "kind" => match value.as_str() {
          "verb" => kind = Some(PropertyKind::TransitiveVerb),
          "locative" => kind = Some(PropertyKind::LocativePredicate),
          "role" => kind = Some(PropertyKind::GenitiveRole),
          _ => {
            self.err(line, format!("unknown kind {:?} (expected verb|locative|role)", value));
            bad = true;
          }
        },
        "direction" => match value.as_str() {
          "subject-domain" => direction = Some(Direction::SubjectIsDomain),
          "subject-range" => direction = Some(Direction::SubjectIsRange),
          _ => {
            self.err(line, format!("unknown direction {:?}", value));
            bad = true;
          }
        },
        "verb" => verb = Some((line, split_list(value))),
        "neg" => neg = Some((line, split_list(value))),
        "active" => active = Some(value.clone()),
        "active-neg" => active_neg = Some(value.clone()),
        "role-noun" => role_noun = Some(value.clone()),
        "role-gender" => match parse_gender(value) {
          Some(g) => role_gender = Some(g),
          None => {
            self.err(line, format!("unknown gender {:?} (expected masc|fem)", value));
            bad = true;
          }
        },
        "ace-active" => ace_active = value.clone(),
        "ace-passive" => ace_passive = value.clone(),
        _ => {
          if let Some(rest) = key.strip_prefix("participle.") {
            match parse_participle_cell(rest) {
              Some((gender, number)) => participles.set(gender, number, value.clone()),
              None => {
                self.err(
                  line,
                  format!("bad participle key `participle.{}` (expected participle.<gender>.<num>)", rest),
                );
                bad = true;
              }
            }
          } else {
            self.err(line, format!("unknown property key {:?}", key));
            bad = true;
          }
        }
      }
    }

    let Some(kind) = kind else {
      self.err(block.header_line, format!("property {} has no kind", block.id));
      return;
    };

    let mut verbs = vec![];
    match kind {
      PropertyKind::TransitiveVerb => {
        let (Some((_, pos)), Some((neg_line, negs))) = (&verb, &neg) else {
          self.err(block.header_line, format!("verb property {} needs both `verb:` and `neg:`", block.id));
          return;
        };
        if pos.len() != negs.len() {
          self.err(
            *neg_line,
            format!("{} positive verb form(s) but {} negated form(s)", pos.len(), negs.len()),
          );
          return;
        }
        verbs = pos
          .iter()
          .zip(negs)
          .map(|(p, n)| VerbForm { positive: p.clone(), negative: n.clone() })
          .collect();
      }
      PropertyKind::LocativePredicate => {
        if direction.is_none() {
          self.err(block.header_line, format!("locative property {} has no direction", block.id));
          return;
        }
        if participles.iter().next().is_none() {
          self.err(block.header_line, format!("locative property {} has no participle forms", block.id));
          return;
        }
        if active.is_some() != active_neg.is_some() {
          self.err(
            block.header_line,
            format!("property {} has `active:` without `active-neg:` (or vice versa)", block.id),
          );
          return;
        }
      }
      PropertyKind::GenitiveRole => {
        if direction.is_none() {
          self.err(block.header_line, format!("role property {} has no direction", block.id));
          return;
        }
        if role_noun.is_none() || role_gender.is_none() {
          self.err(
            block.header_line,
            format!("role property {} needs `role-noun:` and `role-gender:`", block.id),
          );
          return;
        }
      }
    }
    if bad {
      return;
    }

    let role = match (&role_noun, role_gender) {
      (Some(lemma), Some(gender)) => {
        let paradigm = if gender == Gender::Masc { Paradigm::D1Masc } else { Paradigm::D4Fem };
        match generate_paradigm(lemma, paradigm, gender) {
          Ok(forms) => Some(RoleNoun { lemma: lemma.replace(' ', "_"), gender, forms }),
          Err(e) => {
            self.err(block.header_line, e.to_string());
            return;
          }
        }
      }
      _ => None,
    };

    self.properties.push(PropertyLexeme {
      property_id: block.id,
      kind,
      direction: direction.unwrap_or(Direction::SubjectIsDomain),
      verbs,
      participles,
      active: active
        .zip(active_neg)
        .map(|(positive, negative)| VerbForm { positive, negative }),
      role_noun: role,
      ace_active,
      ace_passive,
    });
  }
}

fn split_list(value: &str) -> Vec<String> {
  value.split('|').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn parse_gender(value: &str) -> Option<Gender> {
  match value {
    "masc" => Some(Gender::Masc),
    "fem" => Some(Gender::Fem),
    _ => None,
  }
}

/// Parses `<CASE>.<NUM>` (any letter case) from an override key.
fn parse_cell(rest: &str) -> Option<(Case, Number)> {
  let (case, number) = rest.split_once('.')?;
  let case = match case.to_ascii_uppercase().as_str() {
    "NOM" => Case::Nom,
    "GEN" => Case::Gen,
    "ACC" => Case::Acc,
    "LOC" => Case::Loc,
    _ => return None,
  };
  let number = match number.to_ascii_uppercase().as_str() {
    "SG" => Number::Sg,
    "PL" => Number::Pl,
    _ => return None,
  };
  Some((case, number))
}

/// Parses `<gender>.<num>` from a participle key.
fn parse_participle_cell(rest: &str) -> Option<(Gender, Number)> {
  let (gender, number) = rest.split_once('.')?;
  let gender = parse_gender(&gender.to_ascii_lowercase())?;
  let number = match number.to_ascii_uppercase().as_str() {
    "SG" => Number::Sg,
    "PL" => Number::Pl,
    _ => return None,
  };
  Some((gender, number))
}
