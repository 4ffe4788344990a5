//! The semantic interlingua: discourse representation structures,
//! statement classification, and alpha-equivalence.
//!
//! A [`Drs`] holds the discourse referents and property atoms of one
//! sentence. Referents are numbered by first surface occurrence (which
//! reproduces the variable names of the SWRL/SPARQL targets); atoms are
//! kept in discourse order with polarity; a copular main clause is
//! recorded as a [`CopularPred`] over class names, and a verbal main
//! clause marks its atom as the head.
//!
//! [`Drs::classify`] maps a well-formed DRS onto one [`Statement`]
//! deterministically, in this priority order: interrogative mood makes a
//! `Query`; a negated copula between two bare named classes under a
//! negative universal makes a `Disjoint`; a `Thing`-subject copula whose
//! single restriction involves an unrestricted existential `Thing` makes
//! a `Domain` or `Range`; a verbal clause with universal subject and
//! universal object makes a `Rule`; everything else is a
//! `Generalization`. A DRS no rule matches is a grammar bug, never a user
//! error — the parser only accepts sentences whose DRS classifies.
//!
//! [`Drs::normalize`] renumbers referents by first occurrence in atom
//! order, making equality ([`equal_drs`]) independent of surface word
//! order and synonym choice.

use std::fmt;

use thiserror::Error;

use crate::lexicon::{Lexicon, PropertyKind};

/// Sentence mood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mood {
  Declarative,
  Interrogative,
}

/// Referent quantification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quant {
  Universal,
  Existential,
  /// Existential under a question: every referent of an interrogative DRS.
  QueryExistential,
}

/// Atom (and copula) polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
  Positive,
  Negative,
}

/// One discourse referent. `class: None` is the unrestricted top class
/// (`owl:Thing`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Referent {
  /// 1-based ordinal; dense, assigned by first surface occurrence.
  pub id: usize,
  pub quant: Quant,
  pub class: Option<String>,
}

/// One binary property atom between two referents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyAtom {
  pub property: String,
  pub subject: usize,
  pub object: usize,
  pub polarity: Polarity,
}

/// The complement of a copular main clause: `subject` is classified as
/// (the disjunction of) the named `classes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopularPred {
  pub subject: usize,
  pub polarity: Polarity,
  /// One name, or several for a surface disjunction.
  pub classes: Vec<String>,
}

/// A discourse representation structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drs {
  pub mood: Mood,
  pub referents: Vec<Referent>,
  pub atoms: Vec<PropertyAtom>,
  /// Index of the main-clause atom; present iff the main clause is verbal
  /// (non-copular).
  pub head: Option<usize>,
  /// The copular main clause, when there is one.
  pub pred: Option<CopularPred>,
}

/// A class expression of the Manchester-syntax fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassExpr {
  Named(String),
  Thing,
  /// ≥2 members; named classes in this fragment.
  Union(Vec<ClassExpr>),
  /// Wraps only `SomeValues` in this fragment.
  Not(Box<ClassExpr>),
  /// `[inverse (p)] some C`.
  SomeValues(Restriction),
  /// `owl:Thing and ([inverse (p)] some C)` — an anonymous subclass.
  ThingAnd(Restriction),
}

/// An existential restriction `[inverse (p)] some filler`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
  pub property: String,
  pub inverse: bool,
  pub filler: String,
}

/// The classified semantic form of a sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
  /// `sub ⊑ sup`; `sub` is `Named` or `ThingAnd`.
  Generalization { sub: ClassExpr, sup: ClassExpr },
  Disjoint { a: String, b: String },
  Domain { property: String, class: String },
  Range { property: String, class: String },
  /// A SWRL-style rule. `body` atoms are in discourse order; the class
  /// atoms of the rule are carried by `referents`.
  Rule { referents: Vec<Referent>, body: Vec<PropertyAtom>, head: PropertyAtom },
  /// An integrity query. `atoms` keeps discourse order with mixed
  /// polarity; see [`Statement::query_positive`] / [`Statement::query_negative`].
  Query { referents: Vec<Referent>, atoms: Vec<PropertyAtom> },
}

impl Statement {
  /// The positive atoms of a `Query`, in discourse order.
  pub fn query_positive(&self) -> Vec<&PropertyAtom> {
    match self {
      Statement::Query { atoms, .. } => {
        atoms.iter().filter(|a| a.polarity == Polarity::Positive).collect()
      }
      _ => vec![],
    }
  }

  /// The negated atoms of a `Query`, in discourse order.
  pub fn query_negative(&self) -> Vec<&PropertyAtom> {
    match self {
      Statement::Query { atoms, .. } => {
        atoms.iter().filter(|a| a.polarity == Polarity::Negative).collect()
      }
      _ => vec![],
    }
  }
}

/// Classification failure: the DRS fits no statement pattern. The grammar
/// only accepts sentences whose DRS classifies, so reaching this from a
/// parse is a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unclassifiable DRS: {0}")]
pub struct UnclassifiableDrs(pub String);

fn quant_tag(q: Quant) -> &'static str {
  match q {
    Quant::Universal => "universal",
    Quant::Existential => "existential",
    Quant::QueryExistential => "query",
  }
}

fn polarity_tag(p: Polarity) -> &'static str {
  if p == Polarity::Positive {
    "+"
  } else {
    "-"
  }
}

impl fmt::Display for Polarity {
  fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
    write!(f, "{}", polarity_tag(*self))
  }
}

impl Drs {
  fn referent(&self, id: usize) -> Option<&Referent> {
    self.referents.get(id.checked_sub(1)?)
  }

  fn class_of(&self, id: usize) -> Option<&str> {
    self.referent(id).and_then(|r| r.class.as_deref())
  }

  fn quant_of(&self, id: usize) -> Option<Quant> {
    self.referent(id).map(|r| r.quant)
  }

  /// Structural well-formedness per the type invariants. Used by tests
  /// and debug assertions; parsing and conversion only build valid DRSs.
  pub fn well_formed(&self) -> Result<(), String> {
    for (i, r) in self.referents.iter().enumerate() {
      if r.id != i + 1 {
        return Err(format!("referent ids not dense: position {} holds x{}", i, r.id));
      }
      match (self.mood, r.quant) {
        (Mood::Interrogative, Quant::Universal) => {
          return Err(format!("universal referent x{} in a question", r.id))
        }
        (Mood::Declarative, Quant::QueryExistential) => {
          return Err(format!("query referent x{} in a declarative", r.id))
        }
        _ => {}
      }
    }
    for a in &self.atoms {
      if self.referent(a.subject).is_none() || self.referent(a.object).is_none() {
        return Err(format!("atom {} references an undeclared referent", a.property));
      }
      if a.subject == a.object {
        return Err(format!("atom {} links x{} to itself", a.property, a.subject));
      }
    }
    if let Some(h) = self.head {
      if h >= self.atoms.len() {
        return Err("head index out of range".to_string());
      }
    }
    if let Some(pred) = &self.pred {
      if self.referent(pred.subject).is_none() {
        return Err("copular predicate references an undeclared referent".to_string());
      }
      if pred.classes.is_empty() {
        return Err("copular predicate with no classes".to_string());
      }
    }
    Ok(())
  }

  /// Renumbers referents by first occurrence in atom order (atom subject
  /// before object, then the copular subject, then any leftovers in old
  /// order). Idempotent; the result compares synonym- and word-order
  /// independently.
  pub fn normalize(&self) -> Drs {
    let mut order: Vec<usize> = vec![];
    let mut seen = vec![false; self.referents.len() + 1];
    let visit = |id: usize, order: &mut Vec<usize>, seen: &mut Vec<bool>| {
      if id < seen.len() && !seen[id] {
        seen[id] = true;
        order.push(id);
      }
    };
    for a in &self.atoms {
      visit(a.subject, &mut order, &mut seen);
      visit(a.object, &mut order, &mut seen);
    }
    if let Some(pred) = &self.pred {
      visit(pred.subject, &mut order, &mut seen);
    }
    for r in &self.referents {
      visit(r.id, &mut order, &mut seen);
    }

    let mut new_id = vec![0usize; self.referents.len() + 1];
    for (i, old) in order.iter().enumerate() {
      new_id[*old] = i + 1;
    }

    let mut referents: Vec<Referent> = self
      .referents
      .iter()
      .map(|r| Referent { id: new_id[r.id], quant: r.quant, class: r.class.clone() })
      .collect();
    referents.sort_by_key(|r| r.id);
    Drs {
      mood: self.mood,
      referents,
      atoms: self
        .atoms
        .iter()
        .map(|a| PropertyAtom {
          property: a.property.clone(),
          subject: new_id[a.subject],
          object: new_id[a.object],
          polarity: a.polarity,
        })
        .collect(),
      head: self.head,
      pred: self.pred.as_ref().map(|p| CopularPred {
        subject: new_id[p.subject],
        polarity: p.polarity,
        classes: p.classes.clone(),
      }),
    }
  }

  /// The debug text dump: one referent per line `xN : Class [quant]`, one
  /// atom per line `prop(xI, xJ) [+/-]` (the main-clause atom tagged
  /// `[head]`), and a copular main clause as `isa(xN, Class) [+/-]`.
  /// Line order is normalized order.
  pub fn dump(&self) -> String {
    let d = self.normalize();
    let mut lines = vec![];
    for r in &d.referents {
      lines.push(format!(
        "x{} : {} [{}]",
        r.id,
        r.class.as_deref().unwrap_or("owl:Thing"),
        quant_tag(r.quant)
      ));
    }
    for (i, a) in d.atoms.iter().enumerate() {
      let head = if d.head == Some(i) { " [head]" } else { "" };
      lines.push(format!(
        "{}(x{}, x{}) [{}]{}",
        a.property, a.subject, a.object, a.polarity, head
      ));
    }
    if let Some(pred) = &d.pred {
      lines.push(format!(
        "isa(x{}, {}) [{}]",
        pred.subject,
        pred.classes.join(" or "),
        pred.polarity
      ));
    }
    lines.join("\n")
  }

  /// Maps this DRS onto its statement. See the module documentation for
  /// the pattern priority.
  pub fn classify(&self) -> Result<Statement, UnclassifiableDrs> {
    if self.mood == Mood::Interrogative {
      return Ok(Statement::Query { referents: self.referents.clone(), atoms: self.atoms.clone() });
    }

    if let Some(pred) = &self.pred {
      return self.classify_copular(pred);
    }

    // Verbal main clause. A universal subject AND universal object on the
    // head atom make a rule; a single atom makes a generalization over an
    // existential restriction.
    if let Some(h) = self.head {
      let head = &self.atoms[h];
      if self.quant_of(head.subject) == Some(Quant::Universal)
        && self.quant_of(head.object) == Some(Quant::Universal)
      {
        if head.polarity == Polarity::Negative {
          return Err(UnclassifiableDrs("negated rule head".to_string()));
        }
        let body: Vec<PropertyAtom> =
          self.atoms.iter().enumerate().filter(|(i, _)| *i != h).map(|(_, a)| a.clone()).collect();
        return Ok(Statement::Rule {
          referents: self.referents.clone(),
          body,
          head: head.clone(),
        });
      }
    }

    if self.atoms.len() == 1 {
      let atom = &self.atoms[0];
      let (universal, existential, inverse) = match (
        self.quant_of(atom.subject),
        self.quant_of(atom.object),
      ) {
        (Some(Quant::Universal), Some(Quant::Existential)) => (atom.subject, atom.object, false),
        (Some(Quant::Existential), Some(Quant::Universal)) => (atom.object, atom.subject, true),
        _ => {
          return Err(UnclassifiableDrs(
            "single atom without a universal/existential argument pair".to_string(),
          ))
        }
      };
      let Some(sub_class) = self.class_of(universal) else {
        return Err(UnclassifiableDrs("universal Thing without a copular predicate".to_string()));
      };
      let Some(filler) = self.class_of(existential) else {
        return Err(UnclassifiableDrs("existential restriction over Thing".to_string()));
      };
      let restriction = Restriction {
        property: atom.property.clone(),
        inverse,
        filler: filler.to_string(),
      };
      let sup = match atom.polarity {
        Polarity::Positive => ClassExpr::SomeValues(restriction),
        Polarity::Negative => {
          if inverse {
            return Err(UnclassifiableDrs(
              "negated restriction with a universal object".to_string(),
            ));
          }
          ClassExpr::Not(Box::new(ClassExpr::SomeValues(restriction)))
        }
      };
      return Ok(Statement::Generalization {
        sub: ClassExpr::Named(sub_class.to_string()),
        sup,
      });
    }

    Err(UnclassifiableDrs(format!(
      "declarative DRS with {} atoms and no copular or rule pattern",
      self.atoms.len()
    )))
  }

  fn classify_copular(&self, pred: &CopularPred) -> Result<Statement, UnclassifiableDrs> {
    let subject = pred.subject;
    if self.quant_of(subject) != Some(Quant::Universal) {
      return Err(UnclassifiableDrs("copular predicate over a non-universal subject".to_string()));
    }
    let subject_atoms: Vec<&PropertyAtom> =
      self.atoms.iter().filter(|a| a.subject == subject || a.object == subject).collect();

    if pred.polarity == Polarity::Negative {
      // "Neviens A nav B." — double negation decodes to disjointness.
      match (self.class_of(subject), &pred.classes[..], subject_atoms.is_empty()) {
        (Some(a), [b], true) if self.atoms.is_empty() => {
          return Ok(Statement::Disjoint { a: a.to_string(), b: b.clone() })
        }
        _ => {
          return Err(UnclassifiableDrs(
            "negated copula outside the bare disjointness pattern".to_string(),
          ))
        }
      }
    }

    let sup = Self::sup_expr(&pred.classes);
    match self.class_of(subject) {
      // "Ikviens A ir B." — named subject, no restriction.
      Some(class) => {
        if !self.atoms.is_empty() {
          return Err(UnclassifiableDrs(
            "copular predicate over a restricted named subject".to_string(),
          ));
        }
        Ok(Statement::Generalization { sub: ClassExpr::Named(class.to_string()), sup })
      }
      // "Tas, kas …, ir B." — Thing subject restricted by one clause.
      None => {
        if self.atoms.len() != 1 || subject_atoms.len() != 1 {
          return Err(UnclassifiableDrs(
            "Thing subject must carry exactly one restriction".to_string(),
          ));
        }
        let atom = subject_atoms[0];
        if atom.polarity == Polarity::Negative {
          return Err(UnclassifiableDrs("negated restriction on a Thing subject".to_string()));
        }
        let other = if atom.subject == subject { atom.object } else { atom.subject };
        let inverse = atom.object == subject;
        match self.class_of(other) {
          // Unrestricted existential Thing on the other side: a domain or
          // range axiom, depending on which side the Thing subject holds.
          None => {
            if self.quant_of(other) != Some(Quant::Existential) {
              return Err(UnclassifiableDrs("both restriction arguments universal".to_string()));
            }
            let [class] = &pred.classes[..] else {
              return Err(UnclassifiableDrs("domain/range with a union complement".to_string()));
            };
            if inverse {
              Ok(Statement::Range { property: atom.property.clone(), class: class.clone() })
            } else {
              Ok(Statement::Domain { property: atom.property.clone(), class: class.clone() })
            }
          }
          Some(filler) => Ok(Statement::Generalization {
            sub: ClassExpr::ThingAnd(Restriction {
              property: atom.property.clone(),
              inverse,
              filler: filler.to_string(),
            }),
            sup,
          }),
        }
      }
    }
  }

  fn sup_expr(classes: &[String]) -> ClassExpr {
    if classes.len() == 1 {
      ClassExpr::Named(classes[0].clone())
    } else {
      ClassExpr::Union(classes.iter().map(|c| ClassExpr::Named(c.clone())).collect())
    }
  }
}

/// True iff the two DRSs are alpha-equivalent (identical after
/// [`Drs::normalize`]).
pub fn equal_drs(a: &Drs, b: &Drs) -> bool {
  a.normalize() == b.normalize()
}

impl Statement {
  /// Builds the DRS a statement verbalizes to. Inverse of
  /// [`Drs::classify`]: `to_drs(s).classify() == s` for every statement
  /// the grammar can produce. The lexicon decides whether a restriction
  /// is realized verbally (head atom) or copularly (no head).
  pub fn to_drs(&self, lexicon: &Lexicon) -> Drs {
    let verbal = |property: &str| {
      lexicon
        .property_index(property)
        .map(|i| lexicon.properties[i].kind == PropertyKind::TransitiveVerb)
        .unwrap_or(false)
    };
    let named =
      |id: usize, quant: Quant, class: &str| Referent { id, quant, class: Some(class.to_string()) };
    let thing = |id: usize, quant: Quant| Referent { id, quant, class: None };
    // The restricted referent is always x1 and the filler x2.
    let atom = |r: &Restriction, polarity: Polarity| {
      let (subject, object) = if r.inverse { (2, 1) } else { (1, 2) };
      PropertyAtom { property: r.property.clone(), subject, object, polarity }
    };

    match self {
      Statement::Generalization { sub, sup } => {
        let mut referents = vec![];
        let mut atoms = vec![];
        let mut head = None;
        let mut pred = None;
        match sub {
          ClassExpr::Named(class) => referents.push(named(1, Quant::Universal, class)),
          ClassExpr::ThingAnd(r) => {
            referents.push(thing(1, Quant::Universal));
            referents.push(named(2, Quant::Existential, &r.filler));
            atoms.push(atom(r, Polarity::Positive));
          }
          // Other subclass expressions are outside the fragment.
          _ => referents.push(thing(1, Quant::Universal)),
        }
        match sup {
          ClassExpr::Named(class) => {
            pred = Some(CopularPred {
              subject: 1,
              polarity: Polarity::Positive,
              classes: vec![class.clone()],
            });
          }
          ClassExpr::Union(members) => {
            let classes = members
              .iter()
              .filter_map(|m| match m {
                ClassExpr::Named(c) => Some(c.clone()),
                _ => None,
              })
              .collect();
            pred = Some(CopularPred { subject: 1, polarity: Polarity::Positive, classes });
          }
          ClassExpr::SomeValues(r) => {
            referents.push(named(2, Quant::Existential, &r.filler));
            atoms.push(atom(r, Polarity::Positive));
            if verbal(&r.property) {
              head = Some(0);
            }
          }
          ClassExpr::Not(inner) => {
            if let ClassExpr::SomeValues(r) = inner.as_ref() {
              referents.push(named(2, Quant::Existential, &r.filler));
              atoms.push(atom(r, Polarity::Negative));
              if verbal(&r.property) {
                head = Some(0);
              }
            }
          }
          _ => {}
        }
        Drs { mood: Mood::Declarative, referents, atoms, head, pred }
      }
      Statement::Disjoint { a, b } => Drs {
        mood: Mood::Declarative,
        referents: vec![named(1, Quant::Universal, a)],
        atoms: vec![],
        head: None,
        pred: Some(CopularPred {
          subject: 1,
          polarity: Polarity::Negative,
          classes: vec![b.clone()],
        }),
      },
      Statement::Domain { property, class } | Statement::Range { property, class } => {
        let inverse = matches!(self, Statement::Range { .. });
        let (subject, object) = if inverse { (2, 1) } else { (1, 2) };
        Drs {
          mood: Mood::Declarative,
          referents: vec![thing(1, Quant::Universal), thing(2, Quant::Existential)],
          atoms: vec![PropertyAtom {
            property: property.clone(),
            subject,
            object,
            polarity: Polarity::Positive,
          }],
          head: None,
          pred: Some(CopularPred {
            subject: 1,
            polarity: Polarity::Positive,
            classes: vec![class.clone()],
          }),
        }
      }
      Statement::Rule { referents, body, head } => {
        let mut atoms = vec![head.clone()];
        atoms.extend(body.iter().cloned());
        Drs {
          mood: Mood::Declarative,
          referents: referents.clone(),
          atoms,
          head: Some(0),
          pred: None,
        }
      }
      Statement::Query { referents, atoms } => Drs {
        mood: Mood::Interrogative,
        referents: referents.clone(),
        atoms: atoms.clone(),
        head: None,
        pred: None,
      },
    }
  }
}
