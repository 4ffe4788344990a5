//! Tokenizer and parser for controlled Latvian.
//!
//! [`tokenize`] splits a sentence into word and punctuation tokens,
//! merging space- or underscore-joined multi-word lexicon surfaces (and
//! the function units "kaut kas" / "vai nu") into single tokens, and
//! attaches every lexical analysis of each surface.
//!
//! [`parse`] is a backtracking recursive-descent parser over analysis
//! sets. Every licensed clause pattern is tried; the candidate DRSs are
//! collapsed under [`equal_drs`]. Exactly one reading must survive:
//! zero is a parse error at the furthest-reached token, several is an
//! ambiguity error. Agreement (determiner–noun gender/case/number,
//! relative-pronoun features against the antecedent, participle gender
//! and number against its nominative argument) is enforced during
//! descent, and number is uniform across a sentence — only the
//! unrestricted pronouns ("kaut kas", pronominal "kāds") are exempt.
//!
//! Word order is meaningful (topic–focus articulation): a pre-verbal
//! bare or "šis"-marked NP inside a relative clause is an anaphor and
//! binds the most recent positively-introduced referent with the same
//! class; explicit indefinites never bind; universally quantified
//! pre-verbal NPs (OVS fronting) are quantified objects, not anaphors.

use std::cell::RefCell;

use thiserror::Error;

use crate::function_words::{Det, FunctionAnalysis, RelPron, ThingPron};
use crate::lexicon::{Analysis, Direction, Lexicon};
use crate::morphology::{Case, Gender, Number};
use crate::semantics::{equal_drs, CopularPred, Drs, Mood, Polarity, PropertyAtom, Quant, Referent};

/// One surface token with its analyses.
#[derive(Debug, Clone)]
pub struct Token {
  /// Normalized lookup surface (first letter decapitalized when only the
  /// lowercase form is known; multi-word units underscore-joined).
  pub surface: String,
  /// The surface as typed.
  pub raw: String,
  /// 1-based character column of the token start.
  pub col: usize,
  pub analyses: Vec<Analysis>,
  /// Set for the standalone punctuation tokens "," "." "?".
  pub punct: Option<char>,
}

/// Parse-stage errors. Positions are 1-based character columns.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
  #[error("unknown token {surface:?} at column {col}")]
  UnknownToken { surface: String, col: usize },
  #[error("no parse (stuck at column {col})")]
  NoParse { col: usize },
  #[error("ambiguous: {count} distinct readings")]
  Ambiguous { count: usize },
  #[error("agreement violation at {surface:?} (column {col})")]
  AgreementViolation { surface: String, col: usize },
  #[error("unresolved anaphor {surface:?} (column {col})")]
  UnresolvedAnaphor { surface: String, col: usize },
}

const PUNCT: [char; 3] = [',', '.', '?'];
/// Longest multi-word unit the tokenizer will try to merge.
const MAX_MERGE: usize = 4;

fn decap(s: &str) -> String {
  let mut chars = s.chars();
  match chars.next() {
    Some(c) => c.to_lowercase().collect::<String>() + chars.as_str(),
    None => String::new(),
  }
}

/// Splits a sentence into tokens. Punctuation is detached, multi-word
/// lexicon units are merged by greedy longest match, and each word
/// carries its full analysis set.
pub fn tokenize(text: &str, lexicon: &Lexicon) -> Result<Vec<Token>, ParseError> {
  // Pass 1: raw word/punct spans with 1-based columns.
  let mut raw: Vec<(String, usize, Option<char>)> = vec![];
  let mut word = String::new();
  let mut word_col = 0usize;
  for (i, c) in text.chars().enumerate() {
    let col = i + 1;
    if c.is_whitespace() || PUNCT.contains(&c) {
      if !word.is_empty() {
        raw.push((std::mem::take(&mut word), word_col, None));
      }
      if PUNCT.contains(&c) {
        raw.push((c.to_string(), col, Some(c)));
      }
    } else {
      if word.is_empty() {
        word_col = col;
      }
      word.push(c);
    }
  }
  if !word.is_empty() {
    raw.push((word, word_col, None));
  }

  // A surface is known if the lexicon has it as written or with the
  // first letter decapitalized (sentence-initial capitalization).
  let norm = |s: &str| -> Option<String> {
    if lexicon.contains(s) {
      Some(s.to_string())
    } else {
      let d = decap(s);
      if lexicon.contains(&d) {
        Some(d)
      } else {
        None
      }
    }
  };

  // Pass 2: merge multi-word units, longest first, left to right.
  let mut tokens: Vec<Token> = vec![];
  let mut i = 0;
  while i < raw.len() {
    let (surface, col, punct) = &raw[i];
    if let Some(p) = punct {
      tokens.push(Token {
        surface: surface.clone(),
        raw: surface.clone(),
        col: *col,
        analyses: vec![],
        punct: Some(*p),
      });
      i += 1;
      continue;
    }
    let mut merged = None;
    for len in (2..=MAX_MERGE.min(raw.len() - i)).rev() {
      if raw[i..i + len].iter().any(|(_, _, p)| p.is_some()) {
        continue;
      }
      let joined =
        raw[i..i + len].iter().map(|(w, _, _)| w.as_str()).collect::<Vec<_>>().join("_");
      if let Some(n) = norm(&joined) {
        let spelled =
          raw[i..i + len].iter().map(|(w, _, _)| w.as_str()).collect::<Vec<_>>().join(" ");
        merged = Some((n, spelled, len));
        break;
      }
    }
    let (normalized, spelled, len) = match merged {
      Some(m) => m,
      None => match norm(surface) {
        Some(n) => (n, surface.clone(), 1),
        None => {
          return Err(ParseError::UnknownToken { surface: surface.clone(), col: *col })
        }
      },
    };
    tokens.push(Token {
      analyses: lexicon.lookup(&normalized),
      surface: normalized,
      raw: spelled,
      col: *col,
      punct: None,
    });
    i += len;
  }
  Ok(tokens)
}

/// Parses one controlled-Latvian sentence into its DRS.
pub fn parse(text: &str, lexicon: &Lexicon) -> Result<Drs, ParseError> {
  parse_tokens(&tokenize(text, lexicon)?, lexicon)
}

/// Parses a tokenized sentence into its DRS.
pub fn parse_tokens(tokens: &[Token], lexicon: &Lexicon) -> Result<Drs, ParseError> {
  let parser = Parser { toks: tokens, lexicon, fail: RefCell::new(Fail { idx: 0, kind: FailKind::Plain }) };
  let mut found: Vec<Drs> = vec![];
  parser.copular_named(&mut found);
  parser.thing_subject(&mut found);
  parser.svo(&mut found);
  parser.ovs(&mut found);
  parser.role_subject_first(&mut found);
  parser.role_genitive_first(&mut found);
  parser.locative_nom_first(&mut found);
  parser.locative_loc_first(&mut found);
  parser.negatives(&mut found);
  parser.query(&mut found);

  let mut unique: Vec<Drs> = vec![];
  for drs in found {
    if !unique.iter().any(|u| equal_drs(u, &drs)) {
      unique.push(drs);
    }
  }
  match unique.len() {
    1 => Ok(unique.pop().unwrap()),
    0 => Err(parser.error()),
    n => Err(ParseError::Ambiguous { count: n }),
  }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum FailKind {
  Plain,
  Agreement,
  Anaphor,
}

struct Fail {
  idx: usize,
  kind: FailKind,
}

/// A parsed noun phrase: the resolved term, its agreement features, and
/// the token index after it.
#[derive(Clone, Copy)]
struct Np {
  term: usize,
  gender: Gender,
  number: Number,
  next: usize,
}

/// In-progress DRS with parser-local bookkeeping.
#[derive(Clone)]
struct Build {
  mood: Mood,
  referents: Vec<Referent>,
  atoms: Vec<PropertyAtom>,
  head: Option<usize>,
  pred: Option<CopularPred>,
  /// Parallel to `referents`: introduced under negation (inaccessible to
  /// anaphors).
  negative: Vec<bool>,
}

impl Build {
  fn new(mood: Mood) -> Build {
    Build { mood, referents: vec![], atoms: vec![], head: None, pred: None, negative: vec![] }
  }

  fn referent(&mut self, quant: Quant, class: Option<String>, negative: bool) -> usize {
    let quant = match (self.mood, quant) {
      (Mood::Interrogative, _) => Quant::QueryExistential,
      (_, q) => q,
    };
    let id = self.referents.len() + 1;
    self.referents.push(Referent { id, quant, class });
    self.negative.push(negative);
    id
  }

  fn atom(&mut self, property: &str, subject: usize, object: usize, polarity: Polarity) {
    self.atoms.push(PropertyAtom { property: property.to_string(), subject, object, polarity });
  }

  fn finish(self) -> Drs {
    let drs = Drs {
      mood: self.mood,
      referents: self.referents,
      atoms: self.atoms,
      head: self.head,
      pred: self.pred,
    };
    debug_assert!(drs.well_formed().is_ok(), "parser built an ill-formed DRS");
    debug_assert!(drs.classify().is_ok(), "parser accepted an unclassifiable sentence");
    drs
  }
}

/// An antecedent candidate for relative pronouns and chain anchoring.
#[derive(Clone, Copy)]
struct Anchor {
  id: usize,
  gender: Gender,
}

/// A recognized predicate over a locative argument.
#[derive(Clone, Copy)]
struct LocPred {
  prop: usize,
  negative: bool,
  /// Gender+number the participle form agrees with; `None` for the
  /// number-invariant active verb.
  agrees: Option<(Gender, Number)>,
  next: usize,
}

struct Parser<'a> {
  toks: &'a [Token],
  lexicon: &'a Lexicon,
  fail: RefCell<Fail>,
}

impl<'a> Parser<'a> {
  // ---- failure bookkeeping -------------------------------------------

  fn record(&self, idx: usize, kind: FailKind) {
    let mut best = self.fail.borrow_mut();
    if idx > best.idx || (idx == best.idx && kind > best.kind) {
      *best = Fail { idx, kind };
    }
  }

  fn error(&self) -> ParseError {
    let fail = self.fail.borrow();
    let col = |idx: usize| -> usize {
      match self.toks.get(idx) {
        Some(t) => t.col,
        None => self
          .toks
          .last()
          .map(|t| t.col + t.raw.chars().count())
          .unwrap_or(1),
      }
    };
    let surface = |idx: usize| {
      self.toks.get(idx).map(|t| t.raw.clone()).unwrap_or_default()
    };
    match fail.kind {
      FailKind::Plain => ParseError::NoParse { col: col(fail.idx) },
      FailKind::Agreement => {
        ParseError::AgreementViolation { surface: surface(fail.idx), col: col(fail.idx) }
      }
      FailKind::Anaphor => {
        ParseError::UnresolvedAnaphor { surface: surface(fail.idx), col: col(fail.idx) }
      }
    }
  }

  // ---- token access ---------------------------------------------------

  fn analyses(&self, i: usize) -> &[Analysis] {
    self.toks.get(i).map(|t| t.analyses.as_slice()).unwrap_or(&[])
  }

  fn punct(&self, i: usize, c: char) -> bool {
    let ok = self.toks.get(i).map(|t| t.punct == Some(c)).unwrap_or(false);
    if !ok {
      self.record(i, FailKind::Plain);
    }
    ok
  }

  /// End-of-sentence check: punctuation `c` at `i` and nothing after.
  fn end(&self, i: usize, c: char) -> bool {
    if !self.punct(i, c) {
      return false;
    }
    if i + 1 != self.toks.len() {
      self.record(i + 1, FailKind::Plain);
      return false;
    }
    true
  }

  // ---- lexical category helpers ---------------------------------------

  /// Noun readings at `i` with the given case, merged per
  /// (term, gender, number).
  fn nouns(&self, i: usize, case: Case) -> Vec<Np> {
    let mut out: Vec<Np> = vec![];
    let mut saw_noun = false;
    for a in self.analyses(i) {
      if let Analysis::Noun { term, gender, case: c, number, .. } = a {
        saw_noun = true;
        if *c == case {
          let np = Np { term: *term, gender: *gender, number: *number, next: i + 1 };
          if !out.iter().any(|o| (o.term, o.gender, o.number) == (np.term, np.gender, np.number)) {
            out.push(np);
          }
        }
      }
    }
    if out.is_empty() {
      self.record(i, if saw_noun { FailKind::Agreement } else { FailKind::Plain });
    }
    out
  }

  /// Determiner readings of `det` at `i`, restricted to its licensed
  /// number ("ikviens"/"katrs"/"kāds"/"neviens"/"šis" are singular
  /// determiners; "visi" is the plural universal).
  fn det(&self, i: usize, wanted: &[Det], case: Case) -> Vec<(Det, Gender, Number)> {
    let mut out = vec![];
    let mut saw_det = false;
    for a in self.analyses(i) {
      if let Analysis::Function(FunctionAnalysis::Det { det, gender, case: c, number }) = a {
        saw_det = true;
        let licensed = match det {
          Det::Visi => *number == Number::Pl,
          _ => *number == Number::Sg,
        };
        if wanted.contains(det) && licensed && *c == case {
          out.push((*det, *gender, *number));
        }
      }
    }
    if out.is_empty() {
      self.record(i, if saw_det { FailKind::Agreement } else { FailKind::Plain });
    }
    out
  }

  /// Universal NP: "ikviens"/"katrs" + noun (Sg) or "visi" + noun (Pl),
  /// with full determiner–noun agreement.
  fn universal_np(&self, i: usize, case: Case) -> Vec<Np> {
    let mut out = vec![];
    for (_, dg, dn) in self.det(i, &[Det::Ikviens, Det::Katrs, Det::Visi], case) {
      for np in self.nouns(i + 1, case) {
        if np.gender == dg && np.number == dn {
          out.push(Np { next: i + 2, ..np });
        } else {
          self.record(i + 1, FailKind::Agreement);
        }
      }
    }
    out
  }

  /// Existential NP in `case`: optional agreeing determiner (Sg only)
  /// plus noun, or a bare noun. `number`: None accepts both, and the
  /// caller unifies afterwards.
  fn existential_np(&self, i: usize, case: Case, det: Det, number: Option<Number>) -> Vec<Np> {
    let mut out: Vec<Np> = vec![];
    for np in self.nouns(i, case) {
      if number.map(|n| np.number == n).unwrap_or(true) {
        out.push(np);
      } else {
        self.record(i, FailKind::Agreement);
      }
    }
    if number != Some(Number::Pl) {
      for (_, dg, _) in self.det(i, &[det], case) {
        for np in self.nouns(i + 1, case) {
          if np.gender == dg && np.number == Number::Sg {
            out.push(Np { next: i + 2, ..np });
          } else {
            self.record(i + 1, FailKind::Agreement);
          }
        }
      }
    }
    out
  }

  /// Transitive-verb readings at `i` with the given polarity.
  fn verbs(&self, i: usize, negative: bool) -> Vec<usize> {
    let mut out = vec![];
    for a in self.analyses(i) {
      if let Analysis::Verb { prop, negative: n, .. } = a {
        if *n == negative && !out.contains(prop) {
          out.push(*prop);
        }
      }
    }
    if out.is_empty() {
      self.record(i, FailKind::Plain);
    }
    out
  }

  /// The copula "ir"/"nav".
  fn copula(&self, i: usize, negative: bool) -> bool {
    let ok = self.analyses(i).iter().any(|a| {
      matches!(a, Analysis::Function(FunctionAnalysis::Copula { negative: n }) if *n == negative)
    });
    if !ok {
      self.record(i, FailKind::Plain);
    }
    ok
  }

  /// Locative predicate group: "[ir|nav] participle" or the active verb.
  /// `agrees` carries the participle's form features for the caller to
  /// unify with the nominative argument (checked here when `subject` is
  /// already known).
  fn locative_pred(&self, i: usize, subject: Option<(Gender, Number)>) -> Vec<LocPred> {
    let mut out = vec![];
    let mut push = |p: LocPred, at: usize, parser: &Self| {
      match (p.agrees, subject) {
        (Some(form), Some(subj)) if form != subj => parser.record(at, FailKind::Agreement),
        _ => out.push(p),
      }
    };
    for a in self.analyses(i) {
      match a {
        Analysis::Participle { prop, gender, number } => {
          // Bare participle: the perfect auxiliary is optional and its
          // absence is always the positive reading.
          push(
            LocPred {
              prop: *prop,
              negative: false,
              agrees: Some((*gender, *number)),
              next: i + 1,
            },
            i,
            self,
          );
        }
        Analysis::ActiveLoc { prop, negative } => {
          push(LocPred { prop: *prop, negative: *negative, agrees: None, next: i + 1 }, i, self);
        }
        Analysis::Function(FunctionAnalysis::Copula { negative }) => {
          for b in self.analyses(i + 1) {
            if let Analysis::Participle { prop, gender, number } = b {
              push(
                LocPred {
                  prop: *prop,
                  negative: *negative,
                  agrees: Some((*gender, *number)),
                  next: i + 2,
                },
                i + 1,
                self,
              );
            }
          }
        }
        _ => {}
      }
    }
    if out.is_empty() {
      self.record(i, FailKind::Plain);
    }
    out
  }

  /// Relative-pronoun readings in `case`, agreeing with the antecedent:
  /// the "kas" series carries no features, the "kurš" series must match
  /// the antecedent's gender and the sentence number.
  fn relpron(&self, i: usize, case: Case, antecedent: Gender, number: Number) -> bool {
    let mut ok = false;
    let mut saw_rel = false;
    for a in self.analyses(i) {
      if let Analysis::Function(FunctionAnalysis::Rel { pron, gender, case: c, number: n }) = a {
        saw_rel = true;
        if *c != case {
          continue;
        }
        match pron {
          RelPron::Kas => ok = true,
          RelPron::Kurs => {
            if *gender == Some(antecedent) && *n == Some(number) {
              ok = true;
            }
          }
        }
      }
    }
    if !ok {
      self.record(i, if saw_rel { FailKind::Agreement } else { FailKind::Plain });
    }
    ok
  }

  /// An unrestricted-Thing pronoun NP: "kaut kas" (any case form) or the
  /// pronominal indefinite "kāds" (singular, not followed by a noun).
  /// Number-exempt: legal in plural sentences too.
  fn thing_np(&self, i: usize, case: Case) -> bool {
    let mut ok = false;
    for a in self.analyses(i) {
      match a {
        Analysis::Function(FunctionAnalysis::Thing { pron: ThingPron::KautKas, case: c, .. })
          if *c == case =>
        {
          ok = true;
        }
        Analysis::Function(FunctionAnalysis::Det { det: Det::Kads, case: c, number, .. })
          if *c == case
            && *number == Number::Sg
            && !self.analyses(i + 1).iter().any(|b| matches!(b, Analysis::Noun { .. })) =>
        {
          ok = true;
        }
        _ => {}
      }
    }
    if !ok {
      self.record(i, FailKind::Plain);
    }
    ok
  }

  fn class_id(&self, np: &Np) -> String {
    self.lexicon.nouns[np.term].class_id.clone()
  }

  fn prop_id(&self, prop: usize) -> &str {
    &self.lexicon.properties[prop].property_id
  }

  /// Atom argument order for a transitive verb given its nominative
  /// (subject) and accusative (object) referents.
  fn verb_atom(&self, prop: usize, nom: usize, acc: usize) -> (usize, usize) {
    match self.lexicon.properties[prop].direction {
      Direction::SubjectIsDomain => (nom, acc),
      Direction::SubjectIsRange => (acc, nom),
    }
  }

  /// Atom argument order for a locative predicate given its nominative
  /// and locative referents.
  fn loc_atom(&self, prop: usize, nom: usize, loc: usize) -> (usize, usize) {
    match self.lexicon.properties[prop].direction {
      Direction::SubjectIsDomain => (nom, loc),
      Direction::SubjectIsRange => (loc, nom),
    }
  }

  /// Atom argument order for a genitive role given the main participant
  /// (the role's carrier) and the genitive attribute.
  fn role_atom(&self, prop: usize, main: usize, gen: usize) -> (usize, usize) {
    match self.lexicon.properties[prop].direction {
      Direction::SubjectIsDomain => (main, gen),
      Direction::SubjectIsRange => (gen, main),
    }
  }

  // ---- clause patterns --------------------------------------------------

  /// "Ikviens profesors ir pasniedzējs." / "Visi kursi ir [vai nu]
  /// obligātie_kursi vai izvēles_kursi." — copular generalization with an
  /// optional disjunction chain.
  fn copular_named(&self, out: &mut Vec<Drs>) {
    for subj in self.universal_np(0, Case::Nom) {
      if !self.copula(subj.next, false) {
        continue;
      }
      let mut i = subj.next + 1;
      let vai_nu = self
        .analyses(i)
        .iter()
        .any(|a| matches!(a, Analysis::Function(FunctionAnalysis::VaiNu)));
      if vai_nu {
        i += 1;
      }
      for (classes, next) in self.pred_chain(i, subj.number) {
        if vai_nu && classes.len() < 2 {
          self.record(i, FailKind::Plain);
          continue;
        }
        if !self.end(next, '.') {
          continue;
        }
        let mut build = Build::new(Mood::Declarative);
        let x1 = build.referent(Quant::Universal, Some(self.class_id(&subj)), false);
        build.pred = Some(CopularPred { subject: x1, polarity: Polarity::Positive, classes });
        out.push(build.finish());
      }
    }
  }

  /// Predicate-nominal chain: `N [vai N]*` in the nominative, agreeing in
  /// number with the subject.
  fn pred_chain(&self, i: usize, number: Number) -> Vec<(Vec<String>, usize)> {
    let mut results = vec![];
    for np in self.nouns(i, Case::Nom) {
      if np.number != number {
        self.record(i, FailKind::Agreement);
        continue;
      }
      let mut chains: Vec<(Vec<String>, usize)> = vec![(vec![self.class_id(&np)], np.next)];
      let mut j = np.next;
      while self
        .analyses(j)
        .iter()
        .any(|a| matches!(a, Analysis::Function(FunctionAnalysis::Vai)))
      {
        let mut extended = vec![];
        for np2 in self.nouns(j + 1, Case::Nom) {
          if np2.number != number {
            self.record(j + 1, FailKind::Agreement);
            continue;
          }
          for (classes, _) in &chains {
            let mut c = classes.clone();
            c.push(self.class_id(&np2));
            extended.push((c, np2.next));
          }
        }
        if extended.is_empty() {
          break;
        }
        j = extended[0].1;
        chains = extended;
      }
      results.extend(chains.into_iter().filter(|(_, n)| *n == j));
    }
    results
  }

  /// SVO clauses: an existential object makes a property restriction
  /// ("Ikviens profesors māca kādu kursu."); a universal object opens a
  /// rule with trailing relative clauses (Table 7).
  fn svo(&self, out: &mut Vec<Drs>) {
    for subj in self.universal_np(0, Case::Nom) {
      for prop in self.verbs(subj.next, false) {
        let obj_at = subj.next + 1;
        // Rule: universal object, singular sentence, relative chain.
        if subj.number == Number::Sg {
          for obj in self.universal_np(obj_at, Case::Acc) {
            if obj.number != Number::Sg {
              self.record(obj_at, FailKind::Agreement);
              continue;
            }
            let mut build = Build::new(Mood::Declarative);
            let x1 = build.referent(Quant::Universal, Some(self.class_id(&subj)), false);
            let x2 = build.referent(Quant::Universal, Some(self.class_id(&obj)), false);
            let (s, o) = self.verb_atom(prop, x1, x2);
            build.atom(self.prop_id(prop), s, o, Polarity::Positive);
            build.head = Some(0);
            let anchor = Anchor { id: x2, gender: obj.gender };
            self.rel_chain(obj.next, build, anchor, '.', false, out);
          }
        }
        // Restriction: existential object, sentence ends.
        for obj in self.existential_np(obj_at, Case::Acc, Det::Kads, Some(subj.number)) {
          if !self.end(obj.next, '.') {
            continue;
          }
          let mut build = Build::new(Mood::Declarative);
          let x1 = build.referent(Quant::Universal, Some(self.class_id(&subj)), false);
          let x2 = build.referent(Quant::Existential, Some(self.class_id(&obj)), false);
          let (s, o) = self.verb_atom(prop, x1, x2);
          build.atom(self.prop_id(prop), s, o, Polarity::Positive);
          build.head = Some(0);
          out.push(build.finish());
        }
      }
    }
  }

  /// OVS restriction: "Ikvienu kursu māca kāds pasniedzējs." — fronted
  /// universal object, post-verbal existential subject.
  fn ovs(&self, out: &mut Vec<Drs>) {
    for obj in self.universal_np(0, Case::Acc) {
      for prop in self.verbs(obj.next, false) {
        for subj in self.existential_np(obj.next + 1, Case::Nom, Det::Kads, Some(obj.number)) {
          if !self.end(subj.next, '.') {
            continue;
          }
          let mut build = Build::new(Mood::Declarative);
          let x1 = build.referent(Quant::Universal, Some(self.class_id(&obj)), false);
          let x2 = build.referent(Quant::Existential, Some(self.class_id(&subj)), false);
          let (s, o) = self.verb_atom(prop, x2, x1);
          build.atom(self.prop_id(prop), s, o, Polarity::Positive);
          build.head = Some(0);
          out.push(build.finish());
        }
      }
    }
  }

  /// "Ikviens kurss ir [kādas] akadēmiskās_programmas daļa." — genitive
  /// role with the role carrier as subject.
  fn role_subject_first(&self, out: &mut Vec<Drs>) {
    for subj in self.universal_np(0, Case::Nom) {
      if subj.number != Number::Sg || !self.copula(subj.next, false) {
        continue;
      }
      for gen in self.existential_np(subj.next + 1, Case::Gen, Det::Kads, Some(Number::Sg)) {
        for (prop, next) in self.role_nouns(gen.next) {
          if !self.end(next, '.') {
            continue;
          }
          let mut build = Build::new(Mood::Declarative);
          let x1 = build.referent(Quant::Universal, Some(self.class_id(&subj)), false);
          let x2 = build.referent(Quant::Existential, Some(self.class_id(&gen)), false);
          let (s, o) = self.role_atom(prop, x1, x2);
          build.atom(self.prop_id(prop), s, o, Polarity::Positive);
          out.push(build.finish());
        }
      }
    }
  }

  /// "Ikvienas akadēmiskās_programmas daļa ir kāds kurss." — genitive
  /// role with the universally quantified genitive attribute first.
  fn role_genitive_first(&self, out: &mut Vec<Drs>) {
    for gen in self.universal_np(0, Case::Gen) {
      if gen.number != Number::Sg {
        continue;
      }
      for (prop, next) in self.role_nouns(gen.next) {
        if !self.copula(next, false) {
          continue;
        }
        for pred in self.existential_np(next + 1, Case::Nom, Det::Kads, Some(Number::Sg)) {
          if !self.end(pred.next, '.') {
            continue;
          }
          let mut build = Build::new(Mood::Declarative);
          let x1 = build.referent(Quant::Universal, Some(self.class_id(&gen)), false);
          let x2 = build.referent(Quant::Existential, Some(self.class_id(&pred)), false);
          let (s, o) = self.role_atom(prop, x2, x1);
          build.atom(self.prop_id(prop), s, o, Polarity::Positive);
          out.push(build.finish());
        }
      }
    }
  }

  /// Nominative role-noun readings at `i` (singular).
  fn role_nouns(&self, i: usize) -> Vec<(usize, usize)> {
    let mut out = vec![];
    let mut saw = false;
    for a in self.analyses(i) {
      if let Analysis::RoleNoun { prop, case, number, .. } = a {
        saw = true;
        if *case == Case::Nom && *number == Number::Sg && !out.iter().any(|(p, _)| p == prop) {
          out.push((*prop, i + 1));
        }
      }
    }
    if out.is_empty() {
      self.record(i, if saw { FailKind::Agreement } else { FailKind::Plain });
    }
    out
  }

  /// "Ikviens kurss ir iekļauts kādā akadēmiskajā_programmā." — locative
  /// restriction with the nominative argument as subject.
  fn locative_nom_first(&self, out: &mut Vec<Drs>) {
    for subj in self.universal_np(0, Case::Nom) {
      if subj.number != Number::Sg {
        continue;
      }
      for lp in self.locative_pred(subj.next, Some((subj.gender, Number::Sg))) {
        if lp.negative {
          continue;
        }
        for loc in self.existential_np(lp.next, Case::Loc, Det::Kads, Some(Number::Sg)) {
          if !self.end(loc.next, '.') {
            continue;
          }
          let mut build = Build::new(Mood::Declarative);
          let x1 = build.referent(Quant::Universal, Some(self.class_id(&subj)), false);
          let x2 = build.referent(Quant::Existential, Some(self.class_id(&loc)), false);
          let (s, o) = self.loc_atom(lp.prop, x1, x2);
          build.atom(self.prop_id(lp.prop), s, o, Polarity::Positive);
          out.push(build.finish());
        }
      }
    }
  }

  /// "Ikvienā akadēmiskajā_programmā ir iekļauts kāds kurss." — locative
  /// restriction with the fronted universal locative argument.
  fn locative_loc_first(&self, out: &mut Vec<Drs>) {
    for loc in self.universal_np(0, Case::Loc) {
      if loc.number != Number::Sg {
        continue;
      }
      for lp in self.locative_pred(loc.next, None) {
        if lp.negative {
          continue;
        }
        for nom in self.existential_np(lp.next, Case::Nom, Det::Kads, Some(Number::Sg)) {
          if let Some(form) = lp.agrees {
            if form != (nom.gender, Number::Sg) {
              self.record(lp.next, FailKind::Agreement);
              continue;
            }
          }
          if !self.end(nom.next, '.') {
            continue;
          }
          let mut build = Build::new(Mood::Declarative);
          let x1 = build.referent(Quant::Universal, Some(self.class_id(&loc)), false);
          let x2 = build.referent(Quant::Existential, Some(self.class_id(&nom)), false);
          let (s, o) = self.loc_atom(lp.prop, x2, x1);
          build.atom(self.prop_id(lp.prop), s, o, Polarity::Positive);
          out.push(build.finish());
        }
      }
    }
  }

  /// Negative clauses: "Neviens asistents nav profesors." (disjointness)
  /// and "Neviens asistents nemāca [nevienu] obligāto_kursu." (negated
  /// restriction).
  fn negatives(&self, out: &mut Vec<Drs>) {
    for (_, dg, _) in self.det(0, &[Det::Neviens], Case::Nom) {
      for subj in self.nouns(1, Case::Nom) {
        if subj.gender != dg || subj.number != Number::Sg {
          self.record(1, FailKind::Agreement);
          continue;
        }
        // Negated copula between bare named classes.
        if self.copula(2, true) {
          for pred in self.nouns(3, Case::Nom) {
            if pred.number != Number::Sg {
              self.record(3, FailKind::Agreement);
              continue;
            }
            if !self.end(pred.next, '.') {
              continue;
            }
            let mut build = Build::new(Mood::Declarative);
            let x1 = build.referent(Quant::Universal, Some(self.class_id(&subj)), false);
            build.pred = Some(CopularPred {
              subject: x1,
              polarity: Polarity::Negative,
              classes: vec![self.class_id(&pred)],
            });
            out.push(build.finish());
          }
        }
        // Negated transitive verb with optional "nevienu" object marker.
        for prop in self.verbs(2, true) {
          for obj in self.existential_np(3, Case::Acc, Det::Neviens, Some(Number::Sg)) {
            if !self.end(obj.next, '.') {
              continue;
            }
            let mut build = Build::new(Mood::Declarative);
            let x1 = build.referent(Quant::Universal, Some(self.class_id(&subj)), false);
            let x2 = build.referent(Quant::Existential, Some(self.class_id(&obj)), true);
            let (s, o) = self.verb_atom(prop, x1, x2);
            build.atom(self.prop_id(prop), s, o, Polarity::Negative);
            build.head = Some(0);
            out.push(build.finish());
          }
        }
      }
    }
  }

  /// Thing-subject clauses (Tables 4–5): "Tas, kas māca kādu
  /// obligāto_kursu, ir profesors." — one relative clause restricting the
  /// universal Thing, then a copular complement. An unrestricted-Thing
  /// argument inside the relative makes a domain/range axiom.
  fn thing_subject(&self, out: &mut Vec<Drs>) {
    for (number, next) in self.thing_subjects(0) {
      if !self.punct(next, ',') {
        continue;
      }
      let rel = next + 1;
      for (build, after) in self.thing_relative(rel, number) {
        if !self.punct(after, ',') || !self.copula(after + 1, false) {
          continue;
        }
        for (classes, end) in self.pred_chain(after + 2, number) {
          if !self.end(end, '.') {
            continue;
          }
          let mut b = build.clone();
          b.pred = Some(CopularPred { subject: 1, polarity: Polarity::Positive, classes });
          out.push(b.finish());
        }
      }
    }
  }

  /// The Thing-subject determiners: "tas"/"ikviens"/"katrs"/"jebkas"/
  /// "viss" (Sg), "tie"/"visi" (Pl), all used pronominally.
  fn thing_subjects(&self, i: usize) -> Vec<(Number, usize)> {
    let mut out: Vec<(Number, usize)> = vec![];
    for a in self.analyses(i) {
      let number = match a {
        Analysis::Function(FunctionAnalysis::Thing { pron, case: Case::Nom, number })
          if matches!(pron, ThingPron::Tas | ThingPron::Jebkas | ThingPron::Viss) =>
        {
          Some(*number)
        }
        Analysis::Function(FunctionAnalysis::Det {
          det: Det::Ikviens | Det::Katrs | Det::Visi,
          gender: Gender::Masc,
          case: Case::Nom,
          number,
        }) => Some(*number),
        _ => None,
      };
      if let Some(n) = number {
        if !out.contains(&(n, i + 1)) {
          out.push((n, i + 1));
        }
      }
    }
    if out.is_empty() {
      self.record(i, FailKind::Plain);
    }
    out
  }

  /// The single relative clause of a Thing-subject sentence. Returns the
  /// partial build (x1 = the Thing) and the index after the clause.
  fn thing_relative(&self, i: usize, number: Number) -> Vec<(Build, usize)> {
    let mut out = vec![];
    let new_build = || {
      let mut b = Build::new(Mood::Declarative);
      b.referent(Quant::Universal, None, false);
      b
    };
    // Relativized subject: "kas māca kādu obligāto_kursu" /
    // "kas māca kaut ko" (domain).
    if self.relpron(i, Case::Nom, Gender::Masc, number) {
      for prop in self.verbs(i + 1, false) {
        for obj in self.existential_np(i + 2, Case::Acc, Det::Kads, Some(number)) {
          let mut b = new_build();
          let x2 = b.referent(Quant::Existential, Some(self.class_id(&obj)), false);
          let (s, o) = self.verb_atom(prop, 1, x2);
          b.atom(self.prop_id(prop), s, o, Polarity::Positive);
          out.push((b, obj.next));
        }
        if self.thing_np(i + 2, Case::Acc) {
          let mut b = new_build();
          let x2 = b.referent(Quant::Existential, None, false);
          let (s, o) = self.verb_atom(prop, 1, x2);
          b.atom(self.prop_id(prop), s, o, Polarity::Positive);
          out.push((b, i + 3));
        }
      }
    }
    // Relativized object: "ko kaut kas māca" (range) /
    // "ko māca kāds profesors" (inverse restriction).
    if self.relpron(i, Case::Acc, Gender::Masc, number) {
      if self.thing_np(i + 1, Case::Nom) {
        for prop in self.verbs(i + 2, false) {
          let mut b = new_build();
          let x2 = b.referent(Quant::Existential, None, false);
          let (s, o) = self.verb_atom(prop, x2, 1);
          b.atom(self.prop_id(prop), s, o, Polarity::Positive);
          out.push((b, i + 3));
        }
      }
      for prop in self.verbs(i + 1, false) {
        for subj in self.existential_np(i + 2, Case::Nom, Det::Kads, Some(number)) {
          let mut b = new_build();
          let x2 = b.referent(Quant::Existential, Some(self.class_id(&subj)), false);
          let (s, o) = self.verb_atom(prop, x2, 1);
          b.atom(self.prop_id(prop), s, o, Polarity::Positive);
          out.push((b, subj.next));
        }
      }
    }
    out
  }

  /// "Vai ir kāds students, …?" — integrity query with a relative chain
  /// that may contain negated locative clauses.
  fn query(&self, out: &mut Vec<Drs>) {
    let starts = self
      .analyses(0)
      .iter()
      .any(|a| matches!(a, Analysis::Function(FunctionAnalysis::Vai)));
    if !starts {
      self.record(0, FailKind::Plain);
      return;
    }
    if !self.copula(1, false) {
      return;
    }
    for (_, dg, _) in self.det(2, &[Det::Kads], Case::Nom) {
      for subj in self.nouns(3, Case::Nom) {
        if subj.gender != dg || subj.number != Number::Sg {
          self.record(3, FailKind::Agreement);
          continue;
        }
        let mut build = Build::new(Mood::Interrogative);
        let x1 = build.referent(Quant::Existential, Some(self.class_id(&subj)), false);
        let anchor = Anchor { id: x1, gender: subj.gender };
        self.rel_chain(subj.next, build, anchor, '?', true, out);
      }
    }
  }

  /// Relative-clause chain of rules and queries (singular throughout):
  /// intro clauses walk the anchor forward to a new referent, a
  /// locative clause with a pre-verbal anaphor closes the chain.
  fn rel_chain(
    &self,
    i: usize,
    build: Build,
    anchor: Anchor,
    end: char,
    allow_negation: bool,
    out: &mut Vec<Drs>,
  ) {
    if self.end(i, end) {
      out.push(build.finish());
      return;
    }
    if !self.punct(i, ',') {
      return;
    }
    let j = i + 1;

    // Intro clauses relativizing the anchor as nominative:
    // "kas māca kādu kursu" / "kas [ir] iekļauts [kādā] programmā".
    if self.relpron(j, Case::Nom, anchor.gender, Number::Sg) {
      for prop in self.verbs(j + 1, false) {
        for obj in self.existential_np(j + 2, Case::Acc, Det::Kads, Some(Number::Sg)) {
          let mut b = build.clone();
          let x = b.referent(Quant::Existential, Some(self.class_id(&obj)), false);
          let (s, o) = self.verb_atom(prop, anchor.id, x);
          b.atom(self.prop_id(prop), s, o, Polarity::Positive);
          self.rel_chain(obj.next, b, Anchor { id: x, gender: obj.gender }, end, allow_negation, out);
        }
      }
      for lp in self.locative_pred(j + 1, Some((anchor.gender, Number::Sg))) {
        if lp.negative && !allow_negation {
          continue;
        }
        let det = if lp.negative { Det::Neviens } else { Det::Kads };
        for loc in self.existential_np(lp.next, Case::Loc, det, Some(Number::Sg)) {
          let mut b = build.clone();
          let x = b.referent(Quant::Existential, Some(self.class_id(&loc)), lp.negative);
          let (s, o) = self.loc_atom(lp.prop, anchor.id, x);
          let polarity = if lp.negative { Polarity::Negative } else { Polarity::Positive };
          b.atom(self.prop_id(lp.prop), s, o, polarity);
          self.rel_chain(loc.next, b, Anchor { id: x, gender: loc.gender }, end, allow_negation, out);
        }
      }
    }

    // Intro clause relativizing the anchor as accusative object:
    // "ko māca kāds profesors".
    if self.relpron(j, Case::Acc, anchor.gender, Number::Sg) {
      for prop in self.verbs(j + 1, false) {
        for subj in self.existential_np(j + 2, Case::Nom, Det::Kads, Some(Number::Sg)) {
          let mut b = build.clone();
          let x = b.referent(Quant::Existential, Some(self.class_id(&subj)), false);
          let (s, o) = self.verb_atom(prop, x, anchor.id);
          b.atom(self.prop_id(prop), s, o, Polarity::Positive);
          self.rel_chain(subj.next, b, Anchor { id: x, gender: subj.gender }, end, allow_negation, out);
        }
      }
    }

    // Anaphoric locative clause, closing the chain:
    // "kurā [šis] students [ir] uzņemts".
    if self.relpron(j, Case::Loc, anchor.gender, Number::Sg) {
      for (np, noun_at) in self.anaphor_np(j + 1) {
        for lp in self.locative_pred(np.next, Some((np.gender, Number::Sg))) {
          if lp.negative {
            continue;
          }
          let Some(bound) = self.resolve_anaphor(&build, &np, anchor.id) else {
            self.record(noun_at, FailKind::Anaphor);
            continue;
          };
          if !self.end(lp.next, end) {
            continue;
          }
          let mut b = build.clone();
          let (s, o) = self.loc_atom(lp.prop, bound, anchor.id);
          b.atom(self.prop_id(lp.prop), s, o, Polarity::Positive);
          out.push(b.finish());
        }
      }
    }
  }

  /// "[šis] students" — the pre-verbal anaphoric NP of a closing relative
  /// clause. Returns the NP and the noun's token index.
  fn anaphor_np(&self, i: usize) -> Vec<(Np, usize)> {
    let mut out: Vec<(Np, usize)> = vec![];
    for np in self.nouns(i, Case::Nom) {
      if np.number == Number::Sg {
        out.push((np, i));
      }
    }
    for (_, dg, _) in self.det(i, &[Det::Sis], Case::Nom) {
      for np in self.nouns(i + 1, Case::Nom) {
        if np.gender == dg && np.number == Number::Sg {
          out.push((Np { next: i + 2, ..np }, i + 1));
        } else {
          self.record(i + 1, FailKind::Agreement);
        }
      }
    }
    out
  }

  /// Most recent positively-introduced referent with the anaphor's class,
  /// excluding the clause's own anchor.
  fn resolve_anaphor(&self, build: &Build, np: &Np, anchor: usize) -> Option<usize> {
    let class = self.class_id(np);
    build
      .referents
      .iter()
      .rev()
      .find(|r| {
        r.id != anchor && r.class.as_deref() == Some(class.as_str()) && !build.negative[r.id - 1]
      })
      .map(|r| r.id)
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::semantics::{ClassExpr, Restriction, Statement};

  fn sample() -> Lexicon {
    Lexicon::load(include_str!("../../../lexicons/university.lex")).unwrap()
  }

  fn p(text: &str) -> Drs {
    parse(text, &sample()).unwrap_or_else(|e| panic!("{:?} on {:?}", e, text))
  }

  fn st(text: &str) -> Statement {
    p(text).classify().unwrap()
  }

  #[test]
  fn tokenize_detaches_punctuation() {
    let lx = sample();
    let toks = tokenize("Neviens asistents nav profesors.", &lx).unwrap();
    let surfaces: Vec<&str> = toks.iter().map(|t| t.surface.as_str()).collect();
    assert_eq!(surfaces, ["neviens", "asistents", "nav", "profesors", "."]);
    assert_eq!(toks[0].raw, "Neviens");
    assert_eq!(toks[3].col, 23);
  }

  #[test]
  fn tokenize_merges_multiword_terms() {
    let lx = sample();
    let spaced = tokenize("māca kādu obligāto kursu.", &lx).unwrap();
    let scored = tokenize("māca kādu obligāto_kursu.", &lx).unwrap();
    assert_eq!(spaced.len(), 4);
    assert_eq!(spaced[2].surface, "obligāto_kursu");
    assert_eq!(spaced[2].surface, scored[2].surface);
    assert_eq!(spaced[2].raw, "obligāto kursu");
    // Function units merge the same way.
    let f = tokenize("ko kaut kas māca", &lx).unwrap();
    assert_eq!(f[1].surface, "kaut_kas");
    let v = tokenize("ir vai nu kurss vai students", &lx).unwrap();
    assert_eq!(v[1].surface, "vai_nu");
    assert_eq!(v[3].surface, "vai");
  }

  #[test]
  fn tokenize_empty_input() {
    assert_eq!(tokenize("", &sample()).unwrap().len(), 0);
  }

  #[test]
  fn tokenize_rejects_unknown_words() {
    match tokenize("Ikviens dekāns ir profesors.", &sample()) {
      Err(ParseError::UnknownToken { surface, col }) => {
        assert_eq!(surface, "dekāns");
        assert_eq!(col, 9);
      }
      other => panic!("expected UnknownToken, got {:?}", other),
    }
  }

  #[test]
  fn parses_copular_generalization() {
    assert_eq!(
      st("Ikviens profesors ir pasniedzējs."),
      Statement::Generalization {
        sub: ClassExpr::Named("Professor".into()),
        sup: ClassExpr::Named("Teacher".into()),
      }
    );
    // Determiner synonym and plural row collapse to the same DRS.
    assert!(equal_drs(&p("Ikviens profesors ir pasniedzējs."), &p("Katrs profesors ir pasniedzējs.")));
    assert!(equal_drs(&p("Ikviens profesors ir pasniedzējs."), &p("Visi profesori ir pasniedzēji.")));
    assert!(equal_drs(&p("Visi profesori ir pasniedzēji."), &p("Visi profesori ir skolotāji.")));
  }

  #[test]
  fn parses_union_with_optional_vai_nu() {
    let a = p("Ikviens kurss ir vai nu obligātais_kurss vai izvēles_kurss.");
    let b = p("Ikviens kurss ir obligātais_kurss vai izvēles_kurss.");
    let c = p("Visi kursi ir vai nu obligātie_kursi vai izvēles_kursi.");
    assert!(equal_drs(&a, &b));
    assert!(equal_drs(&a, &c));
    match a.classify().unwrap() {
      Statement::Generalization { sup: ClassExpr::Union(members), .. } => {
        assert_eq!(members.len(), 2)
      }
      other => panic!("expected a union, got {:?}", other),
    }
  }

  #[test]
  fn parses_ovs_restriction() {
    assert_eq!(
      st("Ikvienu kursu māca kāds pasniedzējs."),
      Statement::Generalization {
        sub: ClassExpr::Named("Course".into()),
        sup: ClassExpr::SomeValues(Restriction {
          property: "teaches".into(),
          inverse: true,
          filler: "Teacher".into(),
        }),
      }
    );
    let variants = [
      "Ikvienu kursu māca kāds pasniedzējs.",
      "Katru kursu pasniedz pasniedzējs.",
      "Visus kursus māca pasniedzēji.",
    ];
    for v in &variants[1..] {
      assert!(equal_drs(&p(variants[0]), &p(v)), "variant {:?} diverged", v);
    }
  }

  #[test]
  fn parses_svo_restriction() {
    assert_eq!(
      st("Ikviens profesors māca kādu kursu."),
      Statement::Generalization {
        sub: ClassExpr::Named("Professor".into()),
        sup: ClassExpr::SomeValues(Restriction {
          property: "teaches".into(),
          inverse: false,
          filler: "Course".into(),
        }),
      }
    );
  }

  #[test]
  fn parses_thing_subject_restriction() {
    let expected = Statement::Generalization {
      sub: ClassExpr::ThingAnd(Restriction {
        property: "teaches".into(),
        inverse: false,
        filler: "MandatoryCourse".into(),
      }),
      sup: ClassExpr::Named("Professor".into()),
    };
    assert_eq!(st("Tas, kas māca kādu obligāto_kursu, ir profesors."), expected);
    assert_eq!(st("Jebkas, kurš māca obligāto_kursu, ir profesors."), expected);
    assert!(equal_drs(
      &p("Tas, kas māca kādu obligāto_kursu, ir profesors."),
      &p("Tie, kas māca obligātos_kursus, ir profesori."),
    ));
  }

  #[test]
  fn parses_domain_and_range() {
    assert_eq!(
      st("Tas, ko kaut kas māca, ir kurss."),
      Statement::Range { property: "teaches".into(), class: "Course".into() }
    );
    assert_eq!(
      st("Tas, ko kāds māca, ir kurss."),
      Statement::Range { property: "teaches".into(), class: "Course".into() }
    );
    assert_eq!(
      st("Tas, kas māca kaut ko, ir pasniedzējs."),
      Statement::Domain { property: "teaches".into(), class: "Teacher".into() }
    );
    assert!(equal_drs(
      &p("Tas, ko kaut kas māca, ir kurss."),
      &p("Tie, ko kaut kas māca, ir kursi."),
    ));
  }

  #[test]
  fn parses_genitive_roles_both_ways() {
    assert_eq!(
      st("Ikviens kurss ir kādas akadēmiskās_programmas daļa."),
      Statement::Generalization {
        sub: ClassExpr::Named("Course".into()),
        sup: ClassExpr::SomeValues(Restriction {
          property: "part".into(),
          inverse: true,
          filler: "AcademicProgram".into(),
        }),
      }
    );
    assert_eq!(
      st("Ikvienas akadēmiskās_programmas daļa ir kāds kurss."),
      Statement::Generalization {
        sub: ClassExpr::Named("AcademicProgram".into()),
        sup: ClassExpr::SomeValues(Restriction {
          property: "part".into(),
          inverse: false,
          filler: "Course".into(),
        }),
      }
    );
    assert!(equal_drs(
      &p("Ikviens kurss ir kādas akadēmiskās_programmas daļa."),
      &p("Katrs kurss ir akadēmiskās_programmas daļa."),
    ));
  }

  #[test]
  fn parses_main_clause_locatives() {
    assert_eq!(
      st("Ikviens kurss ir iekļauts kādā akadēmiskajā_programmā."),
      Statement::Generalization {
        sub: ClassExpr::Named("Course".into()),
        sup: ClassExpr::SomeValues(Restriction {
          property: "includes".into(),
          inverse: true,
          filler: "AcademicProgram".into(),
        }),
      }
    );
    // Active synonym and bare participle collapse to the same reading.
    assert!(equal_drs(
      &p("Ikviens kurss ir iekļauts kādā akadēmiskajā_programmā."),
      &p("Ikviens kurss ietilpst kādā akadēmiskajā_programmā."),
    ));
    assert_eq!(
      st("Ikvienā akadēmiskajā_programmā ir iekļauts kāds kurss."),
      Statement::Generalization {
        sub: ClassExpr::Named("AcademicProgram".into()),
        sup: ClassExpr::SomeValues(Restriction {
          property: "includes".into(),
          inverse: false,
          filler: "Course".into(),
        }),
      }
    );
  }

  #[test]
  fn parses_rule_with_anaphora() {
    let drs = p(
      "Ikviens students apgūst ikvienu obligāto_kursu, kas ir iekļauts \
       akadēmiskajā_programmā, kurā šis students ir uzņemts.",
    );
    assert_eq!(
      drs.dump(),
      "x1 : Student [universal]\n\
       x2 : MandatoryCourse [universal]\n\
       x3 : AcademicProgram [existential]\n\
       takes(x1, x2) [+] [head]\n\
       includes(x3, x2) [+]\n\
       enrolls(x3, x1) [+]"
    );
    // The paper's full variant surface: spelled-out multi-words, optional
    // auxiliary, active synonym, bare demonstratives.
    let variants = [
      "Katrs students ņem katru obligāto kursu, kurš ietilpst kādā akadēmiskajā \
       programmā, kurā students uzņemts.",
      "Ikviens students apgūst ikvienu obligāto kursu, kas iekļauts kādā \
       akadēmiskajā programmā, kurā šis students uzņemts.",
    ];
    for v in variants {
      assert!(equal_drs(&drs, &p(v)), "variant diverged: {:?}", v);
    }
  }

  #[test]
  fn parses_disjointness_and_negated_restriction() {
    assert_eq!(
      st("Neviens asistents nav profesors."),
      Statement::Disjoint { a: "Assistant".into(), b: "Professor".into() }
    );
    assert_eq!(
      st("Neviens asistents nemāca nevienu obligāto_kursu."),
      Statement::Generalization {
        sub: ClassExpr::Named("Assistant".into()),
        sup: ClassExpr::Not(Box::new(ClassExpr::SomeValues(Restriction {
          property: "teaches".into(),
          inverse: false,
          filler: "MandatoryCourse".into(),
        }))),
      }
    );
    assert!(equal_drs(
      &p("Neviens asistents nemāca nevienu obligāto_kursu."),
      &p("Neviens asistents nepasniedz obligāto_kursu."),
    ));
  }

  #[test]
  fn parses_integrity_query() {
    let drs = p(
      "Vai ir kāds students, kas apgūst kursu, kas nav iekļauts \
       akadēmiskajā_programmā, kurā šis students ir uzņemts?",
    );
    assert_eq!(drs.mood, Mood::Interrogative);
    assert_eq!(
      drs.dump(),
      "x1 : Student [query]\n\
       x2 : Course [query]\n\
       x3 : AcademicProgram [query]\n\
       takes(x1, x2) [+]\n\
       includes(x3, x2) [-]\n\
       enrolls(x3, x1) [+]"
    );
    let variants = [
      "Vai ir kāds students, kurš ņem kādu kursu, kurš neietilpst nevienā \
       akadēmiskajā programmā, kurā students uzņemts?",
      "Vai ir kāds students, kas apgūst kādu kursu, kas nav iekļauts nevienā \
       akadēmiskajā_programmā, kurā šis students ir uzņemts?",
    ];
    for v in variants {
      assert!(equal_drs(&drs, &p(v)), "variant diverged: {:?}", v);
    }
  }

  #[test]
  fn anaphor_binds_most_recent_matching_class() {
    // Two courses in scope: the anaphor must pick the most recent one.
    let drs = p(
      "Vai ir kāds kurss, ko māca kāds profesors, kurš ir uzņemts \
       akadēmiskajā_programmā, kurā šis kurss ir iekļauts?",
    );
    // x1 course, x2 professor, x3 program; iekļauts: includes(x3, x1).
    assert_eq!(
      drs.atoms.last().unwrap(),
      &PropertyAtom {
        property: "includes".into(),
        subject: 3,
        object: 1,
        polarity: Polarity::Positive,
      }
    );
  }

  #[test]
  fn rejects_unresolved_anaphors() {
    let err = parse(
      "Ikviens students apgūst ikvienu obligāto_kursu, kas ir iekļauts \
       akadēmiskajā_programmā, kurā šis profesors ir uzņemts.",
      &sample(),
    )
    .unwrap_err();
    assert!(
      matches!(err, ParseError::UnresolvedAnaphor { ref surface, .. } if surface == "profesors"),
      "got {:?}",
      err
    );
  }

  #[test]
  fn negative_context_referents_are_inaccessible() {
    // The program is introduced under negation; a later anaphoric
    // reference to a program cannot bind it.
    let err = parse(
      "Vai ir kāds students, kas nav uzņemts akadēmiskajā_programmā, \
       kurā šī akadēmiskā_programma ir iekļauta?",
      &sample(),
    )
    .unwrap_err();
    assert!(
      matches!(err, ParseError::UnresolvedAnaphor { .. } | ParseError::NoParse { .. }),
      "got {:?}",
      err
    );
  }

  #[test]
  fn rejects_agreement_violations() {
    let err = parse("Ikviens profesors ir pasniedzēju.", &sample()).unwrap_err();
    assert!(
      matches!(err, ParseError::AgreementViolation { ref surface, .. } if surface == "pasniedzēju"),
      "got {:?}",
      err
    );
    let err = parse("Ikviens kursu māca kāds pasniedzējs.", &sample()).unwrap_err();
    assert!(matches!(err, ParseError::AgreementViolation { .. }), "got {:?}", err);
  }

  #[test]
  fn rejects_mixed_number() {
    for text in [
      "Visi profesori ir pasniedzējs.",
      "Ikviens profesors ir pasniedzēji.",
      "Tie, kas māca obligāto_kursu, ir profesori.",
    ] {
      assert!(parse(text, &sample()).is_err(), "accepted {:?}", text);
    }
  }

  #[test]
  fn rejects_malformed_tails_and_empty_input() {
    let err = parse("Ikviens profesors ir pasniedzējs ir.", &sample()).unwrap_err();
    assert!(matches!(err, ParseError::NoParse { .. }), "got {:?}", err);
    assert!(matches!(parse("", &sample()), Err(ParseError::NoParse { .. })));
    assert!(parse("Ikviens profesors ir.", &sample()).is_err());
  }

  #[test]
  fn reports_ambiguity_instead_of_picking() {
    // A lexicon where "kurss" is a surface of two different classes.
    let text = "\
class Course
  lemma: kurss
  gender: masc
  paradigm: d1-masc
  ace: course | courses

class Lecture
  lemma: kurss
  gender: masc
  paradigm: d1-masc
  ace: lecture | lectures

class Teacher
  lemma: pasniedzējs
  gender: masc
  paradigm: d1-masc
  ace: teacher | teachers
";
    let lx = Lexicon::load(text).unwrap();
    let err = parse("Ikviens kurss ir pasniedzējs.", &lx).unwrap_err();
    assert_eq!(err, ParseError::Ambiguous { count: 2 });
  }

  #[test]
  fn domain_range_pronoun_is_mandatory() {
    // Without "kaut kas"/"kāds" the relative clause has no subject.
    assert!(parse("Tas, ko māca, ir kurss.", &sample()).is_err());
  }

  #[test]
  fn every_licensed_parse_classifies() {
    let sentences = [
      "Ikviens profesors ir pasniedzējs.",
      "Ikviens kurss ir vai nu obligātais_kurss vai izvēles_kurss.",
      "Ikvienu kursu māca kāds pasniedzējs.",
      "Tas, kas māca kādu obligāto_kursu, ir profesors.",
      "Tas, ko kaut kas māca, ir kurss.",
      "Ikviens kurss ir kādas akadēmiskās_programmas daļa.",
      "Ikvienas akadēmiskās_programmas daļa ir kāds kurss.",
      "Ikviens students apgūst ikvienu obligāto_kursu, kas ir iekļauts \
       akadēmiskajā_programmā, kurā šis students ir uzņemts.",
      "Neviens asistents nav profesors.",
      "Neviens asistents nemāca nevienu obligāto_kursu.",
      "Vai ir kāds students, kas apgūst kursu, kas nav iekļauts \
       akadēmiskajā_programmā, kurā šis students ir uzņemts?",
    ];
    for s in sentences {
      assert!(p(s).classify().is_ok(), "unclassifiable: {:?}", s);
    }
  }
}
