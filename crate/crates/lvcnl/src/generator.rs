//! Canonical linearization of statements into controlled Latvian and
//! controlled English.
//!
//! Linearization is deterministic: among the variant surfaces the parser
//! accepts, one canonical choice is made everywhere — the first lemma
//! synonym, the relative pronoun "kas" over "kurš", the auxiliary
//! spelled out before participles, "vai nu" dropped from disjunctions,
//! the anaphoric demonstrative "šis" always written, and the indefinite
//! determiner ("kāds" / "nevienu") written exactly on singular NPs that
//! carry no relative clause. The controlled-English output follows the
//! same statement shapes with "a/an" chosen by the first letter,
//! indefinites for new referents and "the" for anaphors.
//!
//! [`linearize_lv`] takes a number: plural applies to the statement
//! kinds with a licensed plural surface (copular generalizations, verb
//! restrictions, Thing-subject sentences); the rest are singular-only
//! and ignore the request. [`linearize_ace`] is always singular.
//!
//! Statements whose shape has no surface in the grammar — negated
//! restrictions over non-verb properties or in inverse direction,
//! domain/range axioms over non-verb properties, Thing-subject
//! restrictions over locative or role properties — yield
//! [`GenError::Unrealizable`] rather than an improvised sentence.

use thiserror::Error;

use crate::function_words::{Det, FunctionLexicon, ThingPron};
use crate::lexicon::{Direction, Lexicon, PropertyKind, PropertyLexeme};
use crate::morphology::{Case, Gender, Number};
use crate::semantics::{ClassExpr, Polarity, PropertyAtom, Referent, Restriction, Statement};

/// Linearization errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
  #[error("unknown class {0:?}")]
  UnknownClass(String),
  #[error("unknown property {0:?}")]
  UnknownProperty(String),
  #[error("not linearizable: {0}")]
  Unrealizable(String),
}

/// Linearizes a statement into the canonical controlled-Latvian sentence.
pub fn linearize_lv(
  statement: &Statement,
  lexicon: &Lexicon,
  number: Number,
) -> Result<String, GenError> {
  Lv { lx: lexicon }.statement(statement, number)
}

/// Linearizes a statement into the canonical controlled-English sentence.
pub fn linearize_ace(statement: &Statement, lexicon: &Lexicon) -> Result<String, GenError> {
  Ace { lx: lexicon }.statement(statement)
}

fn capitalize(s: &str) -> String {
  let mut chars = s.chars();
  match chars.next() {
    Some(c) => c.to_uppercase().collect::<String>() + chars.as_str(),
    None => s.to_string(),
  }
}

fn unrealizable(what: &str) -> GenError {
  GenError::Unrealizable(what.to_string())
}

/// Which participant of a restriction the subject class plays, given the
/// restriction direction: the domain for a plain restriction, the range
/// for an inverse one.
fn subject_is_nominative(r: &Restriction, lexeme: &PropertyLexeme) -> bool {
  let subject_is_range = r.inverse;
  match lexeme.direction {
    Direction::SubjectIsRange => subject_is_range,
    Direction::SubjectIsDomain => !subject_is_range,
  }
}

// ---------------------------------------------------------------------
// Controlled Latvian
// ---------------------------------------------------------------------

struct Lv<'a> {
  lx: &'a Lexicon,
}

impl<'a> Lv<'a> {
  fn fns(&self) -> &FunctionLexicon {
    self.lx.functions()
  }

  fn term(&self, class: &str) -> Result<usize, GenError> {
    self.lx.noun_index(class).ok_or_else(|| GenError::UnknownClass(class.to_string()))
  }

  fn gender(&self, class: &str) -> Result<Gender, GenError> {
    Ok(self.lx.nouns[self.term(class)?].gender)
  }

  fn noun(&self, class: &str, case: Case, number: Number) -> Result<String, GenError> {
    self.term(class)?;
    self
      .lx
      .inflect(class, case, number, 0)
      .map(str::to_string)
      .map_err(|_| GenError::Unrealizable(format!("no {:?} {:?} form of {}", case, number, class)))
  }

  fn det(&self, det: Det, gender: Gender, case: Case, number: Number) -> Result<String, GenError> {
    self
      .fns()
      .det(det, gender, case, number)
      .map(str::to_string)
      .ok_or_else(|| GenError::Unrealizable(format!("no {:?} {:?} {:?} determiner", case, number, det)))
  }

  fn prop(&self, id: &str) -> Result<&'a PropertyLexeme, GenError> {
    let i =
      self.lx.property_index(id).ok_or_else(|| GenError::UnknownProperty(id.to_string()))?;
    Ok(&self.lx.properties[i])
  }

  fn verb(&self, lexeme: &PropertyLexeme, negative: bool) -> Result<String, GenError> {
    let form = lexeme
      .verbs
      .first()
      .ok_or_else(|| GenError::Unrealizable(format!("{} has no verb form", lexeme.property_id)))?;
    Ok(if negative { form.negative.clone() } else { form.positive.clone() })
  }

  /// "ir iekļauts" / "nav iekļauta" — the canonical participial group.
  fn loc_group(
    &self,
    lexeme: &PropertyLexeme,
    negative: bool,
    gender: Gender,
  ) -> Result<String, GenError> {
    let participle = lexeme.participles.get(gender, Number::Sg).ok_or_else(|| {
      GenError::Unrealizable(format!("{} has no {:?} participle", lexeme.property_id, gender))
    })?;
    Ok(format!("{} {}", if negative { "nav" } else { "ir" }, participle))
  }

  /// A universally quantified NP: "ikviens kurss" / "visi kursi".
  fn universal_np(&self, class: &str, case: Case, number: Number) -> Result<String, GenError> {
    let det = match number {
      Number::Sg => Det::Ikviens,
      Number::Pl => Det::Visi,
    };
    let gender = self.gender(class)?;
    Ok(format!("{} {}", self.det(det, gender, case, number)?, self.noun(class, case, number)?))
  }

  /// An existentially quantified NP. The indefinite determiner is written
  /// exactly when the NP is singular and no relative clause follows it;
  /// under negation the determiner is "neviens".
  fn existential_np(
    &self,
    class: &str,
    case: Case,
    number: Number,
    negative: bool,
    rel_follows: bool,
  ) -> Result<String, GenError> {
    let noun = self.noun(class, case, number)?;
    if number == Number::Sg && !rel_follows {
      let det = if negative { Det::Neviens } else { Det::Kads };
      Ok(format!("{} {}", self.det(det, self.gender(class)?, case, Number::Sg)?, noun))
    } else {
      Ok(noun)
    }
  }

  fn statement(&self, statement: &Statement, number: Number) -> Result<String, GenError> {
    let text = match statement {
      Statement::Generalization { sub, sup } => self.generalization(sub, sup, number)?,
      Statement::Disjoint { a, b } => {
        format!(
          "{} {} nav {}",
          self.det(Det::Neviens, self.gender(a)?, Case::Nom, Number::Sg)?,
          self.noun(a, Case::Nom, Number::Sg)?,
          self.noun(b, Case::Nom, Number::Sg)?
        )
      }
      Statement::Domain { property, class } => {
        self.domain_range(property, class, number, false)?
      }
      Statement::Range { property, class } => self.domain_range(property, class, number, true)?,
      Statement::Rule { referents, body, head } => self.rule(referents, body, head)?,
      Statement::Query { referents, atoms } => {
        let text = self.query(referents, atoms)?;
        return Ok(capitalize(&format!("{}?", text)));
      }
    };
    Ok(capitalize(&format!("{}.", text)))
  }

  fn named(expr: &ClassExpr) -> Result<&str, GenError> {
    match expr {
      ClassExpr::Named(c) => Ok(c),
      other => Err(GenError::Unrealizable(format!("no noun surface for {:?}", other))),
    }
  }

  fn generalization(
    &self,
    sub: &ClassExpr,
    sup: &ClassExpr,
    number: Number,
  ) -> Result<String, GenError> {
    match (sub, sup) {
      (ClassExpr::Named(a), ClassExpr::Named(_) | ClassExpr::Union(_)) => Ok(format!(
        "{} ir {}",
        self.universal_np(a, Case::Nom, number)?,
        self.predicate_nominals(sup, number)?
      )),
      (ClassExpr::Named(a), ClassExpr::SomeValues(r)) => self.restriction(a, r, number),
      (ClassExpr::Named(a), ClassExpr::Not(inner)) => match inner.as_ref() {
        ClassExpr::SomeValues(r) => self.negated_restriction(a, r),
        other => Err(GenError::Unrealizable(format!("no surface for not {:?}", other))),
      },
      (ClassExpr::ThingAnd(r), ClassExpr::Named(_) | ClassExpr::Union(_)) => {
        self.thing_subject(r, sup, number)
      }
      (sub, sup) => {
        Err(GenError::Unrealizable(format!("no clause pattern for {:?} ⊑ {:?}", sub, sup)))
      }
    }
  }

  /// Predicate nominal or disjunction chain: "pasniedzējs",
  /// "obligātais_kurss vai izvēles_kurss".
  fn predicate_nominals(&self, sup: &ClassExpr, number: Number) -> Result<String, GenError> {
    let classes: Vec<&str> = match sup {
      ClassExpr::Named(c) => vec![c],
      ClassExpr::Union(members) => {
        members.iter().map(|m| Self::named(m)).collect::<Result<_, _>>()?
      }
      other => return Err(GenError::Unrealizable(format!("no nominal surface for {:?}", other))),
    };
    let nouns: Vec<String> =
      classes.iter().map(|c| self.noun(c, Case::Nom, number)).collect::<Result<_, _>>()?;
    Ok(nouns.join(" vai "))
  }

  /// A positive property restriction in a main clause, per the property's
  /// realization kind and the side the subject class plays.
  fn restriction(&self, sub: &str, r: &Restriction, number: Number) -> Result<String, GenError> {
    let lexeme = self.prop(&r.property)?;
    match lexeme.kind {
      PropertyKind::TransitiveVerb => {
        let verb = self.verb(lexeme, false)?;
        if subject_is_nominative(r, lexeme) {
          // "Ikviens profesors māca kādu kursu."
          Ok(format!(
            "{} {} {}",
            self.universal_np(sub, Case::Nom, number)?,
            verb,
            self.existential_np(&r.filler, Case::Acc, number, false, false)?
          ))
        } else {
          // "Ikvienu kursu māca kāds pasniedzējs."
          Ok(format!(
            "{} {} {}",
            self.universal_np(sub, Case::Acc, number)?,
            verb,
            self.existential_np(&r.filler, Case::Nom, number, false, false)?
          ))
        }
      }
      PropertyKind::LocativePredicate => {
        if subject_is_nominative(r, lexeme) {
          // "Ikviens kurss ir iekļauts kādā akadēmiskajā_programmā."
          Ok(format!(
            "{} {} {}",
            self.universal_np(sub, Case::Nom, Number::Sg)?,
            self.loc_group(lexeme, false, self.gender(sub)?)?,
            self.existential_np(&r.filler, Case::Loc, Number::Sg, false, false)?
          ))
        } else {
          // "Ikvienā akadēmiskajā_programmā ir iekļauts kāds kurss."
          Ok(format!(
            "{} {} {}",
            self.universal_np(sub, Case::Loc, Number::Sg)?,
            self.loc_group(lexeme, false, self.gender(&r.filler)?)?,
            self.existential_np(&r.filler, Case::Nom, Number::Sg, false, false)?
          ))
        }
      }
      PropertyKind::GenitiveRole => {
        let role = lexeme.role_noun.as_ref().ok_or_else(|| {
          GenError::Unrealizable(format!("{} has no role noun", lexeme.property_id))
        })?;
        let role_nom = role.forms.get(Case::Nom, Number::Sg).ok_or_else(|| {
          GenError::Unrealizable(format!("{} role noun lacks NOM SG", lexeme.property_id))
        })?;
        if subject_is_nominative(r, lexeme) {
          // "Ikviens kurss ir kādas akadēmiskās_programmas daļa."
          Ok(format!(
            "{} ir {} {}",
            self.universal_np(sub, Case::Nom, Number::Sg)?,
            self.existential_np(&r.filler, Case::Gen, Number::Sg, false, false)?,
            role_nom
          ))
        } else {
          // "Ikvienas akadēmiskās_programmas daļa ir kāds kurss."
          Ok(format!(
            "{} {} ir {}",
            self.universal_np(sub, Case::Gen, Number::Sg)?,
            role_nom,
            self.existential_np(&r.filler, Case::Nom, Number::Sg, false, false)?
          ))
        }
      }
    }
  }

  /// "Neviens asistents nemāca nevienu obligāto_kursu." — only the
  /// verbal, subject-side pattern has a surface.
  fn negated_restriction(&self, sub: &str, r: &Restriction) -> Result<String, GenError> {
    let lexeme = self.prop(&r.property)?;
    if lexeme.kind != PropertyKind::TransitiveVerb {
      return Err(unrealizable("negated restrictions are verbal only"));
    }
    if !subject_is_nominative(r, lexeme) {
      return Err(unrealizable("negated restrictions keep the subject nominative"));
    }
    Ok(format!(
      "{} {} {} {}",
      self.det(Det::Neviens, self.gender(sub)?, Case::Nom, Number::Sg)?,
      self.noun(sub, Case::Nom, Number::Sg)?,
      self.verb(lexeme, true)?,
      self.existential_np(&r.filler, Case::Acc, Number::Sg, true, false)?
    ))
  }

  /// "Tas, kas māca kādu obligāto_kursu, ir profesors." — a Thing subject
  /// restricted by one verbal relative clause.
  fn thing_subject(
    &self,
    r: &Restriction,
    sup: &ClassExpr,
    number: Number,
  ) -> Result<String, GenError> {
    let lexeme = self.prop(&r.property)?;
    if lexeme.kind != PropertyKind::TransitiveVerb {
      return Err(unrealizable("Thing-subject restrictions are verbal only"));
    }
    let verb = self.verb(lexeme, false)?;
    let clause = if subject_is_nominative(r, lexeme) {
      format!(
        "{} {} {}",
        self.fns().kas(Case::Nom).unwrap_or("kas"),
        verb,
        self.existential_np(&r.filler, Case::Acc, number, false, false)?
      )
    } else {
      format!(
        "{} {} {}",
        self.fns().kas(Case::Acc).unwrap_or("ko"),
        verb,
        self.existential_np(&r.filler, Case::Nom, number, false, false)?
      )
    };
    Ok(format!(
      "{}, {}, ir {}",
      self.thing_pronoun(number)?,
      clause,
      self.predicate_nominals(sup, number)?
    ))
  }

  fn thing_pronoun(&self, number: Number) -> Result<String, GenError> {
    self
      .fns()
      .thing(ThingPron::Tas, Case::Nom, number)
      .map(str::to_string)
      .ok_or_else(|| unrealizable("no Thing pronoun form"))
  }

  /// "Tas, kas māca kaut ko, ir pasniedzējs." /
  /// "Tas, ko kaut kas māca, ir kurss."
  fn domain_range(
    &self,
    property: &str,
    class: &str,
    number: Number,
    range: bool,
  ) -> Result<String, GenError> {
    let lexeme = self.prop(property)?;
    if lexeme.kind != PropertyKind::TransitiveVerb {
      return Err(unrealizable("domain/range axioms are verbal only"));
    }
    let verb = self.verb(lexeme, false)?;
    // The restricted argument is the subject of the relative clause when
    // it is the verb's nominative side.
    let class_is_nominative = match lexeme.direction {
      Direction::SubjectIsDomain => !range,
      Direction::SubjectIsRange => range,
    };
    // The function lexicon indexes multi-word units under underscores;
    // the surface is spelled with a space.
    let kaut_kas = |case: Case| {
      self
        .fns()
        .thing(ThingPron::KautKas, case, Number::Sg)
        .map(|s| s.replace('_', " "))
        .ok_or_else(|| unrealizable("no kaut-kas form"))
    };
    let clause = if class_is_nominative {
      format!("{} {} {}", self.fns().kas(Case::Nom).unwrap_or("kas"), verb, kaut_kas(Case::Acc)?)
    } else {
      format!("{} {} {}", self.fns().kas(Case::Acc).unwrap_or("ko"), kaut_kas(Case::Nom)?, verb)
    };
    Ok(format!(
      "{}, {}, ir {}",
      self.thing_pronoun(number)?,
      clause,
      self.noun(class, Case::Nom, number)?
    ))
  }

  // ---- rules and queries ---------------------------------------------

  fn referent<'s>(&self, referents: &'s [Referent], id: usize) -> Result<&'s Referent, GenError> {
    referents
      .iter()
      .find(|r| r.id == id)
      .ok_or_else(|| GenError::Unrealizable(format!("dangling referent x{}", id)))
  }

  fn referent_class<'s>(
    &self,
    referents: &'s [Referent],
    id: usize,
  ) -> Result<&'s str, GenError> {
    self
      .referent(referents, id)?
      .class
      .as_deref()
      .ok_or_else(|| unrealizable("chain referents must have a named class"))
  }

  /// "Ikviens students apgūst ikvienu obligāto_kursu, …" — a rule's main
  /// clause followed by the relative chain over its body.
  fn rule(
    &self,
    referents: &[Referent],
    body: &[PropertyAtom],
    head: &PropertyAtom,
  ) -> Result<String, GenError> {
    let lexeme = self.prop(&head.property)?;
    if lexeme.kind != PropertyKind::TransitiveVerb {
      return Err(unrealizable("rule heads are verbal only"));
    }
    if head.polarity == Polarity::Negative {
      return Err(unrealizable("rule heads are positive"));
    }
    let (nom, acc) = match lexeme.direction {
      Direction::SubjectIsDomain => (head.subject, head.object),
      Direction::SubjectIsRange => (head.object, head.subject),
    };
    let subj = self.referent_class(referents, nom)?;
    let obj = self.referent_class(referents, acc)?;
    let obj_gender = self.gender(obj)?;
    let main = format!(
      "{} {} {} {}",
      self.universal_np(subj, Case::Nom, Number::Sg)?,
      self.verb(lexeme, false)?,
      self.det(Det::Ikviens, obj_gender, Case::Acc, Number::Sg)?,
      self.noun(obj, Case::Acc, Number::Sg)?
    );
    let chain = self.chain(referents, body, &mut vec![nom, acc], acc, false)?;
    Ok(main + &chain)
  }

  /// "Vai ir kāds students, …" — a query's opening plus its chain.
  fn query(&self, referents: &[Referent], atoms: &[PropertyAtom]) -> Result<String, GenError> {
    let first = referents.first().ok_or_else(|| unrealizable("query needs a referent"))?;
    let subj = self.referent_class(referents, first.id)?;
    let main = format!(
      "vai ir {} {}",
      self.det(Det::Kads, self.gender(subj)?, Case::Nom, Number::Sg)?,
      self.noun(subj, Case::Nom, Number::Sg)?
    );
    let chain = self.chain(referents, atoms, &mut vec![first.id], first.id, true)?;
    Ok(main + &chain)
  }

  /// The relative-clause chain: each atom either introduces a new
  /// referent from the current anchor (walking the anchor forward) or —
  /// as the final clause — relates two known referents anaphorically.
  fn chain(
    &self,
    referents: &[Referent],
    atoms: &[PropertyAtom],
    introduced: &mut Vec<usize>,
    mut anchor: usize,
    query: bool,
  ) -> Result<String, GenError> {
    let mut text = String::new();
    for (i, atom) in atoms.iter().enumerate() {
      let last = i + 1 == atoms.len();
      let lexeme = self.prop(&atom.property)?;
      let negative = atom.polarity == Polarity::Negative;
      let known = |id: usize| introduced.contains(&id);
      let clause = if known(atom.subject) && known(atom.object) {
        // Closing anaphoric clause: "kurā šis students ir uzņemts".
        if !last {
          return Err(unrealizable("anaphoric clause must close the chain"));
        }
        if lexeme.kind != PropertyKind::LocativePredicate || negative {
          return Err(unrealizable("anaphoric clauses are positive locatives"));
        }
        let (nom, loc) = match lexeme.direction {
          Direction::SubjectIsDomain => (atom.subject, atom.object),
          Direction::SubjectIsRange => (atom.object, atom.subject),
        };
        if loc != anchor {
          return Err(unrealizable("anaphoric clause must relativize the anchor"));
        }
        let anchor_gender = self.gender(self.referent_class(referents, anchor)?)?;
        let kura = self
          .fns()
          .kurs(anchor_gender, Case::Loc, Number::Sg)
          .ok_or_else(|| unrealizable("no locative relative pronoun"))?;
        let noun_class = self.referent_class(referents, nom)?;
        let gender = self.gender(noun_class)?;
        format!(
          "{} {} {} {}",
          kura,
          self.det(Det::Sis, gender, Case::Nom, Number::Sg)?,
          self.noun(noun_class, Case::Nom, Number::Sg)?,
          self.loc_group(lexeme, false, gender)?
        )
      } else {
        // Intro clause walking the anchor to a new referent.
        let new = if atom.subject == anchor && !known(atom.object) {
          atom.object
        } else if atom.object == anchor && !known(atom.subject) {
          atom.subject
        } else {
          return Err(unrealizable("relative chain must walk from the anchor"));
        };
        let new_class = self.referent_class(referents, new)?;
        let clause = match lexeme.kind {
          PropertyKind::TransitiveVerb => {
            if negative {
              return Err(unrealizable("relative verb clauses are positive"));
            }
            let subject_side = match lexeme.direction {
              Direction::SubjectIsDomain => atom.subject,
              Direction::SubjectIsRange => atom.object,
            };
            if subject_side == anchor {
              format!(
                "{} {} {}",
                self.fns().kas(Case::Nom).unwrap_or("kas"),
                self.verb(lexeme, false)?,
                self.existential_np(new_class, Case::Acc, Number::Sg, false, !last)?
              )
            } else {
              format!(
                "{} {} {}",
                self.fns().kas(Case::Acc).unwrap_or("ko"),
                self.verb(lexeme, false)?,
                self.existential_np(new_class, Case::Nom, Number::Sg, false, !last)?
              )
            }
          }
          PropertyKind::LocativePredicate => {
            if negative && !query {
              return Err(unrealizable("negated clauses appear in queries only"));
            }
            let nominative_side = match lexeme.direction {
              Direction::SubjectIsDomain => atom.subject,
              Direction::SubjectIsRange => atom.object,
            };
            if nominative_side != anchor {
              return Err(unrealizable("locative intro clauses relativize the nominative"));
            }
            let anchor_gender = self.gender(self.referent_class(referents, anchor)?)?;
            format!(
              "{} {} {}",
              self.fns().kas(Case::Nom).unwrap_or("kas"),
              self.loc_group(lexeme, negative, anchor_gender)?,
              self.existential_np(new_class, Case::Loc, Number::Sg, negative, !last)?
            )
          }
          PropertyKind::GenitiveRole => {
            return Err(unrealizable("role properties have no relative clause"))
          }
        };
        introduced.push(new);
        anchor = new;
        clause
      };
      text.push_str(", ");
      text.push_str(&clause);
    }
    Ok(text)
  }
}

// ---------------------------------------------------------------------
// Controlled English
// ---------------------------------------------------------------------

struct Ace<'a> {
  lx: &'a Lexicon,
}

fn article(word: &str) -> &'static str {
  match word.chars().next() {
    Some('a' | 'e' | 'i' | 'o' | 'u' | 'A' | 'E' | 'I' | 'O' | 'U') => "an",
    _ => "a",
  }
}

impl<'a> Ace<'a> {
  fn noun(&self, class: &str) -> Result<&'a str, GenError> {
    let i = self.lx.noun_index(class).ok_or_else(|| GenError::UnknownClass(class.to_string()))?;
    Ok(&self.lx.nouns[i].ace_sg)
  }

  fn indefinite(&self, class: &str) -> Result<String, GenError> {
    let noun = self.noun(class)?;
    Ok(format!("{} {}", article(noun), noun))
  }

  fn prop(&self, id: &str) -> Result<&'a PropertyLexeme, GenError> {
    let i =
      self.lx.property_index(id).ok_or_else(|| GenError::UnknownProperty(id.to_string()))?;
    Ok(&self.lx.properties[i])
  }

  /// Active or passive realization of a restriction seen from its
  /// subject: "teaches a course" / "is taught by a teacher".
  fn predicate(&self, r: &Restriction, object: &str, negative: bool) -> Result<String, GenError> {
    let lexeme = self.prop(&r.property)?;
    match lexeme.kind {
      PropertyKind::GenitiveRole => {
        if negative {
          return Err(unrealizable("negated restrictions are verbal only"));
        }
        if subject_is_nominative(r, lexeme) {
          // "is a part of an academic_program"
          let passive = &lexeme.ace_passive;
          Ok(format!("is {} {} {}", article(passive), passive, object))
        } else {
          Err(unrealizable("genitive-first roles use the for-every pattern"))
        }
      }
      _ => {
        // Active voice iff the subject class is the property's domain.
        if !r.inverse {
          if negative && lexeme.kind != PropertyKind::TransitiveVerb {
            return Err(unrealizable("negated restrictions are verbal only"));
          }
          Ok(format!("{} {}", lexeme.ace_active, object))
        } else {
          if negative {
            return Err(unrealizable("negated restrictions keep the subject nominative"));
          }
          Ok(format!("is {} {}", lexeme.ace_passive, object))
        }
      }
    }
  }

  fn statement(&self, statement: &Statement) -> Result<String, GenError> {
    let text = match statement {
      Statement::Generalization { sub, sup } => self.generalization(sub, sup)?,
      Statement::Disjoint { a, b } => {
        format!("no {} is {}", self.noun(a)?, self.indefinite(b)?)
      }
      Statement::Domain { property, class } => {
        let lexeme = self.prop(property)?;
        if lexeme.kind != PropertyKind::TransitiveVerb {
          return Err(unrealizable("domain/range axioms are verbal only"));
        }
        format!("everything that {} something is {}", lexeme.ace_active, self.indefinite(class)?)
      }
      Statement::Range { property, class } => {
        let lexeme = self.prop(property)?;
        if lexeme.kind != PropertyKind::TransitiveVerb {
          return Err(unrealizable("domain/range axioms are verbal only"));
        }
        format!(
          "everything that is {} something is {}",
          lexeme.ace_passive,
          self.indefinite(class)?
        )
      }
      Statement::Rule { referents, body, head } => self.rule(referents, body, head)?,
      Statement::Query { referents, atoms } => {
        let text = self.query(referents, atoms)?;
        return Ok(capitalize(&format!("{}?", text)));
      }
    };
    Ok(capitalize(&format!("{}.", text)))
  }

  fn named(expr: &ClassExpr) -> Result<&str, GenError> {
    match expr {
      ClassExpr::Named(c) => Ok(c),
      other => Err(GenError::Unrealizable(format!("no noun surface for {:?}", other))),
    }
  }

  /// "is a mandatory_course or is an optional_course"
  fn is_nominals(&self, sup: &ClassExpr) -> Result<String, GenError> {
    let classes: Vec<&str> = match sup {
      ClassExpr::Named(c) => vec![c],
      ClassExpr::Union(members) => {
        members.iter().map(|m| Self::named(m)).collect::<Result<_, _>>()?
      }
      other => return Err(GenError::Unrealizable(format!("no nominal surface for {:?}", other))),
    };
    let parts: Vec<String> = classes
      .iter()
      .map(|c| Ok(format!("is {}", self.indefinite(c)?)))
      .collect::<Result<_, GenError>>()?;
    Ok(parts.join(" or "))
  }

  fn generalization(&self, sub: &ClassExpr, sup: &ClassExpr) -> Result<String, GenError> {
    match (sub, sup) {
      (ClassExpr::Named(a), ClassExpr::Named(_) | ClassExpr::Union(_)) => {
        Ok(format!("every {} {}", self.noun(a)?, self.is_nominals(sup)?))
      }
      (ClassExpr::Named(a), ClassExpr::SomeValues(r)) => {
        let lexeme = self.prop(&r.property)?;
        if lexeme.kind == PropertyKind::GenitiveRole && !subject_is_nominative(r, lexeme) {
          // "For every academic_program its part is a course."
          return Ok(format!(
            "for every {} its {} is {}",
            self.noun(a)?,
            lexeme.ace_active,
            self.indefinite(&r.filler)?
          ));
        }
        Ok(format!(
          "every {} {}",
          self.noun(a)?,
          self.predicate(r, &self.indefinite(&r.filler)?, false)?
        ))
      }
      (ClassExpr::Named(a), ClassExpr::Not(inner)) => match inner.as_ref() {
        ClassExpr::SomeValues(r) => Ok(format!(
          "no {} {}",
          self.noun(a)?,
          self.predicate(r, &self.indefinite(&r.filler)?, true)?
        )),
        other => Err(GenError::Unrealizable(format!("no surface for not {:?}", other))),
      },
      (ClassExpr::ThingAnd(r), ClassExpr::Named(_) | ClassExpr::Union(_)) => {
        let lexeme = self.prop(&r.property)?;
        if lexeme.kind != PropertyKind::TransitiveVerb {
          return Err(unrealizable("Thing-subject restrictions are verbal only"));
        }
        Ok(format!(
          "everything that {} {}",
          self.predicate(r, &self.indefinite(&r.filler)?, false)?,
          self.is_nominals(sup)?
        ))
      }
      (sub, sup) => {
        Err(GenError::Unrealizable(format!("no clause pattern for {:?} ⊑ {:?}", sub, sup)))
      }
    }
  }

  fn referent_class<'s>(
    &self,
    referents: &'s [Referent],
    id: usize,
  ) -> Result<&'s str, GenError> {
    referents
      .iter()
      .find(|r| r.id == id)
      .and_then(|r| r.class.as_deref())
      .ok_or_else(|| unrealizable("chain referents must have a named class"))
  }

  fn rule(
    &self,
    referents: &[Referent],
    body: &[PropertyAtom],
    head: &PropertyAtom,
  ) -> Result<String, GenError> {
    let lexeme = self.prop(&head.property)?;
    if lexeme.kind != PropertyKind::TransitiveVerb || head.polarity == Polarity::Negative {
      return Err(unrealizable("rule heads are positive verbal atoms"));
    }
    let (nom, acc) = match lexeme.direction {
      Direction::SubjectIsDomain => (head.subject, head.object),
      Direction::SubjectIsRange => (head.object, head.subject),
    };
    let main = format!(
      "every {} {} every {}",
      self.noun(self.referent_class(referents, nom)?)?,
      lexeme.ace_active,
      self.noun(self.referent_class(referents, acc)?)?
    );
    let chain = self.chain(referents, body, &mut vec![nom, acc], acc, false)?;
    Ok(main + &chain)
  }

  fn query(&self, referents: &[Referent], atoms: &[PropertyAtom]) -> Result<String, GenError> {
    let first = referents.first().ok_or_else(|| unrealizable("query needs a referent"))?;
    let subj = self.referent_class(referents, first.id)?;
    let main = format!("is there {}", self.indefinite(subj)?);
    let chain = self.chain(referents, atoms, &mut vec![first.id], first.id, true)?;
    Ok(main + &chain)
  }

  /// " that is included_in an academic_program that enrolls the student"
  fn chain(
    &self,
    referents: &[Referent],
    atoms: &[PropertyAtom],
    introduced: &mut Vec<usize>,
    mut anchor: usize,
    query: bool,
  ) -> Result<String, GenError> {
    let mut text = String::new();
    for (i, atom) in atoms.iter().enumerate() {
      let last = i + 1 == atoms.len();
      let lexeme = self.prop(&atom.property)?;
      let negative = atom.polarity == Polarity::Negative;
      let known = |id: usize| introduced.contains(&id);
      let clause = if known(atom.subject) && known(atom.object) {
        if !last || lexeme.kind != PropertyKind::LocativePredicate || negative {
          return Err(unrealizable("anaphoric clauses are final positive locatives"));
        }
        let (nom, loc) = match lexeme.direction {
          Direction::SubjectIsDomain => (atom.subject, atom.object),
          Direction::SubjectIsRange => (atom.object, atom.subject),
        };
        if loc != anchor {
          return Err(unrealizable("anaphoric clause must relativize the anchor"));
        }
        let other = format!("the {}", self.noun(self.referent_class(referents, nom)?)?);
        match lexeme.direction {
          // The anchor is the property's domain: active voice.
          Direction::SubjectIsRange => format!("{} {}", lexeme.ace_active, other),
          Direction::SubjectIsDomain => format!("is {} {}", lexeme.ace_passive, other),
        }
      } else {
        let new = if atom.subject == anchor && !known(atom.object) {
          atom.object
        } else if atom.object == anchor && !known(atom.subject) {
          atom.subject
        } else {
          return Err(unrealizable("relative chain must walk from the anchor"));
        };
        let object = self.indefinite(self.referent_class(referents, new)?)?;
        let clause = match lexeme.kind {
          PropertyKind::TransitiveVerb => {
            if negative {
              return Err(unrealizable("relative verb clauses are positive"));
            }
            let subject_side = match lexeme.direction {
              Direction::SubjectIsDomain => atom.subject,
              Direction::SubjectIsRange => atom.object,
            };
            if subject_side == anchor {
              format!("{} {}", lexeme.ace_active, object)
            } else {
              format!("is {} {}", lexeme.ace_passive, object)
            }
          }
          PropertyKind::LocativePredicate => {
            if negative && !query {
              return Err(unrealizable("negated clauses appear in queries only"));
            }
            let nominative_side = match lexeme.direction {
              Direction::SubjectIsDomain => atom.subject,
              Direction::SubjectIsRange => atom.object,
            };
            if nominative_side != anchor {
              return Err(unrealizable("locative intro clauses relativize the nominative"));
            }
            if negative {
              format!("is not {} {}", lexeme.ace_passive, object)
            } else {
              format!("is {} {}", lexeme.ace_passive, object)
            }
          }
          PropertyKind::GenitiveRole => {
            return Err(unrealizable("role properties have no relative clause"))
          }
        };
        introduced.push(new);
        anchor = new;
        clause
      };
      text.push_str(" that ");
      text.push_str(&clause);
    }
    Ok(text)
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::parser::parse;
  use crate::semantics::{Mood, Quant};

  fn sample() -> Lexicon {
    Lexicon::load(include_str!("../../../lexicons/university.lex")).unwrap()
  }

  fn named(c: &str) -> ClassExpr {
    ClassExpr::Named(c.to_string())
  }

  fn some(property: &str, inverse: bool, filler: &str) -> ClassExpr {
    ClassExpr::SomeValues(Restriction {
      property: property.to_string(),
      inverse,
      filler: filler.to_string(),
    })
  }

  fn gen(sub: ClassExpr, sup: ClassExpr) -> Statement {
    Statement::Generalization { sub, sup }
  }

  fn rule_fixture() -> Statement {
    let referent = |id, quant, class: &str| Referent {
      id,
      quant,
      class: Some(class.to_string()),
    };
    let atom = |property: &str, subject, object, polarity| PropertyAtom {
      property: property.to_string(),
      subject,
      object,
      polarity,
    };
    Statement::Rule {
      referents: vec![
        referent(1, Quant::Universal, "Student"),
        referent(2, Quant::Universal, "MandatoryCourse"),
        referent(3, Quant::Existential, "AcademicProgram"),
      ],
      body: vec![
        atom("includes", 3, 2, Polarity::Positive),
        atom("enrolls", 3, 1, Polarity::Positive),
      ],
      head: atom("takes", 1, 2, Polarity::Positive),
    }
  }

  fn query_fixture() -> Statement {
    let referent = |id, class: &str| Referent {
      id,
      quant: Quant::QueryExistential,
      class: Some(class.to_string()),
    };
    let atom = |property: &str, subject, object, polarity| PropertyAtom {
      property: property.to_string(),
      subject,
      object,
      polarity,
    };
    Statement::Query {
      referents: vec![
        referent(1, "Student"),
        referent(2, "Course"),
        referent(3, "AcademicProgram"),
      ],
      atoms: vec![
        atom("takes", 1, 2, Polarity::Positive),
        atom("includes", 3, 2, Polarity::Negative),
        atom("enrolls", 3, 1, Polarity::Positive),
      ],
    }
  }

  fn lv(s: &Statement) -> String {
    linearize_lv(s, &sample(), Number::Sg).unwrap()
  }

  fn lv_pl(s: &Statement) -> String {
    linearize_lv(s, &sample(), Number::Pl).unwrap()
  }

  fn ace(s: &Statement) -> String {
    linearize_ace(s, &sample()).unwrap()
  }

  #[test]
  fn canonical_latvian_singular() {
    assert_eq!(lv(&gen(named("Professor"), named("Teacher"))), "Ikviens profesors ir pasniedzējs.");
    assert_eq!(
      lv(&gen(
        named("Course"),
        ClassExpr::Union(vec![named("MandatoryCourse"), named("OptionalCourse")]),
      )),
      "Ikviens kurss ir obligātais_kurss vai izvēles_kurss."
    );
    assert_eq!(
      lv(&gen(named("Course"), some("teaches", true, "Teacher"))),
      "Ikvienu kursu māca kāds pasniedzējs."
    );
    assert_eq!(
      lv(&gen(named("Professor"), some("teaches", false, "Course"))),
      "Ikviens profesors māca kādu kursu."
    );
    assert_eq!(
      lv(&gen(ClassExpr::ThingAnd(Restriction {
        property: "teaches".into(),
        inverse: false,
        filler: "MandatoryCourse".into(),
      }), named("Professor"))),
      "Tas, kas māca kādu obligāto_kursu, ir profesors."
    );
    assert_eq!(
      lv(&Statement::Range { property: "teaches".into(), class: "Course".into() }),
      "Tas, ko kaut kas māca, ir kurss."
    );
    assert_eq!(
      lv(&Statement::Domain { property: "teaches".into(), class: "Teacher".into() }),
      "Tas, kas māca kaut ko, ir pasniedzējs."
    );
    assert_eq!(
      lv(&gen(named("Course"), some("part", true, "AcademicProgram"))),
      "Ikviens kurss ir kādas akadēmiskās_programmas daļa."
    );
    assert_eq!(
      lv(&gen(named("AcademicProgram"), some("part", false, "Course"))),
      "Ikvienas akadēmiskās_programmas daļa ir kāds kurss."
    );
    assert_eq!(
      lv(&gen(named("Course"), some("includes", true, "AcademicProgram"))),
      "Ikviens kurss ir iekļauts kādā akadēmiskajā_programmā."
    );
    assert_eq!(
      lv(&gen(named("AcademicProgram"), some("includes", false, "Course"))),
      "Ikvienā akadēmiskajā_programmā ir iekļauts kāds kurss."
    );
    assert_eq!(
      lv(&Statement::Disjoint { a: "Assistant".into(), b: "Professor".into() }),
      "Neviens asistents nav profesors."
    );
    assert_eq!(
      lv(&gen(
        named("Assistant"),
        ClassExpr::Not(Box::new(some("teaches", false, "MandatoryCourse"))),
      )),
      "Neviens asistents nemāca nevienu obligāto_kursu."
    );
    assert_eq!(
      lv(&rule_fixture()),
      "Ikviens students apgūst ikvienu obligāto_kursu, kas ir iekļauts \
       akadēmiskajā_programmā, kurā šis students ir uzņemts."
    );
    assert_eq!(
      lv(&query_fixture()),
      "Vai ir kāds students, kas apgūst kursu, kas nav iekļauts \
       akadēmiskajā_programmā, kurā šis students ir uzņemts?"
    );
  }

  #[test]
  fn canonical_latvian_plural() {
    assert_eq!(lv_pl(&gen(named("Professor"), named("Teacher"))), "Visi profesori ir pasniedzēji.");
    assert_eq!(
      lv_pl(&gen(
        named("Course"),
        ClassExpr::Union(vec![named("MandatoryCourse"), named("OptionalCourse")]),
      )),
      "Visi kursi ir obligātie_kursi vai izvēles_kursi."
    );
    assert_eq!(
      lv_pl(&gen(named("Course"), some("teaches", true, "Teacher"))),
      "Visus kursus māca pasniedzēji."
    );
    assert_eq!(
      lv_pl(&gen(ClassExpr::ThingAnd(Restriction {
        property: "teaches".into(),
        inverse: false,
        filler: "MandatoryCourse".into(),
      }), named("Professor"))),
      "Tie, kas māca obligātos_kursus, ir profesori."
    );
    assert_eq!(
      lv_pl(&Statement::Range { property: "teaches".into(), class: "Course".into() }),
      "Tie, ko kaut kas māca, ir kursi."
    );
    // Singular-only statement kinds ignore the plural request.
    assert_eq!(lv_pl(&rule_fixture()), lv(&rule_fixture()));
    assert_eq!(
      lv_pl(&Statement::Disjoint { a: "Assistant".into(), b: "Professor".into() }),
      "Neviens asistents nav profesors."
    );
    assert_eq!(
      lv_pl(&gen(named("Course"), some("part", true, "AcademicProgram"))),
      lv(&gen(named("Course"), some("part", true, "AcademicProgram")))
    );
  }

  #[test]
  fn canonical_english() {
    assert_eq!(ace(&gen(named("Professor"), named("Teacher"))), "Every professor is a teacher.");
    assert_eq!(
      ace(&gen(
        named("Course"),
        ClassExpr::Union(vec![named("MandatoryCourse"), named("OptionalCourse")]),
      )),
      "Every course is a mandatory_course or is an optional_course."
    );
    assert_eq!(
      ace(&gen(named("Course"), some("teaches", true, "Teacher"))),
      "Every course is taught by a teacher."
    );
    assert_eq!(
      ace(&gen(ClassExpr::ThingAnd(Restriction {
        property: "teaches".into(),
        inverse: false,
        filler: "MandatoryCourse".into(),
      }), named("Professor"))),
      "Everything that teaches a mandatory_course is a professor."
    );
    assert_eq!(
      ace(&Statement::Range { property: "teaches".into(), class: "Course".into() }),
      "Everything that is taught by something is a course."
    );
    assert_eq!(
      ace(&gen(named("Course"), some("part", true, "AcademicProgram"))),
      "Every course is a part of an academic_program."
    );
    assert_eq!(
      ace(&gen(named("AcademicProgram"), some("part", false, "Course"))),
      "For every academic_program its part is a course."
    );
    assert_eq!(
      ace(&Statement::Disjoint { a: "Assistant".into(), b: "Professor".into() }),
      "No assistant is a professor."
    );
    assert_eq!(
      ace(&gen(
        named("Assistant"),
        ClassExpr::Not(Box::new(some("teaches", false, "MandatoryCourse"))),
      )),
      "No assistant teaches a mandatory_course."
    );
    assert_eq!(
      ace(&rule_fixture()),
      "Every student takes every mandatory_course that is included_in \
       an academic_program that enrolls the student."
    );
    assert_eq!(
      ace(&query_fixture()),
      "Is there a student that takes a course that is not included_in \
       an academic_program that enrolls the student?"
    );
    assert_eq!(
      ace(&gen(named("Course"), some("includes", true, "AcademicProgram"))),
      "Every course is included_in an academic_program."
    );
    assert_eq!(
      ace(&gen(named("AcademicProgram"), some("includes", false, "Course"))),
      "Every academic_program includes a course."
    );
  }

  #[test]
  fn round_trips_through_the_parser() {
    let lx = sample();
    let statements = [
      gen(named("Professor"), named("Teacher")),
      gen(
        named("Course"),
        ClassExpr::Union(vec![named("MandatoryCourse"), named("OptionalCourse")]),
      ),
      gen(named("Course"), some("teaches", true, "Teacher")),
      gen(named("Professor"), some("teaches", false, "Course")),
      gen(
        ClassExpr::ThingAnd(Restriction {
          property: "teaches".into(),
          inverse: false,
          filler: "MandatoryCourse".into(),
        }),
        named("Professor"),
      ),
      Statement::Range { property: "teaches".into(), class: "Course".into() },
      Statement::Domain { property: "teaches".into(), class: "Teacher".into() },
      gen(named("Course"), some("part", true, "AcademicProgram")),
      gen(named("AcademicProgram"), some("part", false, "Course")),
      gen(named("Course"), some("includes", true, "AcademicProgram")),
      gen(named("AcademicProgram"), some("includes", false, "Course")),
      Statement::Disjoint { a: "Assistant".into(), b: "Professor".into() },
      gen(named("Assistant"), ClassExpr::Not(Box::new(some("teaches", false, "MandatoryCourse")))),
      rule_fixture(),
      query_fixture(),
    ];
    for statement in &statements {
      for number in [Number::Sg, Number::Pl] {
        let text = linearize_lv(statement, &lx, number).unwrap();
        let reparsed = parse(&text, &lx)
          .unwrap_or_else(|e| panic!("{:?} on own output {:?}", e, text))
          .classify()
          .unwrap();
        assert_eq!(&reparsed, statement, "round trip diverged for {:?}", text);
        // Idempotence: linearizing the reparse reproduces the sentence.
        assert_eq!(linearize_lv(&reparsed, &lx, number).unwrap(), text);
      }
    }
  }

  #[test]
  fn plural_parses_collapse_to_singular_canonical() {
    let lx = sample();
    let drs = parse("Visi profesori ir pasniedzēji.", &lx).unwrap();
    let statement = drs.classify().unwrap();
    assert_eq!(
      linearize_lv(&statement, &lx, Number::Sg).unwrap(),
      "Ikviens profesors ir pasniedzējs."
    );
  }

  #[test]
  fn unrealizable_shapes_are_structured_errors() {
    let lx = sample();
    let out_of_fragment = [
      // Negated locative restriction (would need "not (inverse …)").
      gen(named("Course"), ClassExpr::Not(Box::new(some("includes", true, "AcademicProgram")))),
      // Negated inverse verb restriction.
      gen(named("Course"), ClassExpr::Not(Box::new(some("teaches", true, "Teacher")))),
      // Thing-subject restriction over a locative property.
      gen(
        ClassExpr::ThingAnd(Restriction {
          property: "includes".into(),
          inverse: false,
          filler: "Course".into(),
        }),
        named("AcademicProgram"),
      ),
      // Domain of a non-verb property.
      Statement::Domain { property: "includes".into(), class: "AcademicProgram".into() },
      // Bare Thing superclass.
      gen(named("Course"), ClassExpr::Thing),
    ];
    for statement in &out_of_fragment {
      for result in
        [linearize_lv(statement, &lx, Number::Sg), linearize_ace(statement, &lx)]
      {
        assert!(
          matches!(result, Err(GenError::Unrealizable(_))),
          "expected Unrealizable for {:?}, got {:?}",
          statement,
          result
        );
      }
    }
    assert_eq!(
      linearize_lv(&gen(named("Dean"), named("Teacher")), &lx, Number::Sg),
      Err(GenError::UnknownClass("Dean".into()))
    );
    assert_eq!(
      linearize_ace(
        &Statement::Domain { property: "supervises".into(), class: "Teacher".into() },
        &lx,
      ),
      Err(GenError::UnknownProperty("supervises".into()))
    );
  }

  #[test]
  fn rule_and_query_chains_reject_broken_walks() {
    let lx = sample();
    // Body atom not connected to the chain anchor.
    let referent = |id, quant, class: &str| Referent {
      id,
      quant,
      class: Some(class.to_string()),
    };
    let atom = |property: &str, subject, object| PropertyAtom {
      property: property.to_string(),
      subject,
      object,
      polarity: Polarity::Positive,
    };
    let disconnected = Statement::Rule {
      referents: vec![
        referent(1, Quant::Universal, "Student"),
        referent(2, Quant::Universal, "Course"),
        referent(3, Quant::Existential, "AcademicProgram"),
        referent(4, Quant::Existential, "Teacher"),
      ],
      body: vec![atom("teaches", 4, 3)],
      head: atom("takes", 1, 2),
    };
    assert!(matches!(
      linearize_lv(&disconnected, &lx, Number::Sg),
      Err(GenError::Unrealizable(_))
    ));
    // Negated clause in a declarative rule body.
    let negated_body = Statement::Rule {
      referents: vec![
        referent(1, Quant::Universal, "Student"),
        referent(2, Quant::Universal, "Course"),
        referent(3, Quant::Existential, "AcademicProgram"),
      ],
      body: vec![PropertyAtom {
        property: "includes".into(),
        subject: 3,
        object: 2,
        polarity: Polarity::Negative,
      }],
      head: atom("takes", 1, 2),
    };
    assert!(matches!(
      linearize_lv(&negated_body, &lx, Number::Sg),
      Err(GenError::Unrealizable(_))
    ));
  }

  #[test]
  fn queries_without_relatives_linearize() {
    let lx = sample();
    let bare = Statement::Query {
      referents: vec![Referent {
        id: 1,
        quant: Quant::QueryExistential,
        class: Some("Student".to_string()),
      }],
      atoms: vec![],
    };
    assert_eq!(linearize_lv(&bare, &lx, Number::Sg).unwrap(), "Vai ir kāds students?");
    assert_eq!(linearize_ace(&bare, &lx).unwrap(), "Is there a student?");
    let drs = parse("Vai ir kāds students?", &lx).unwrap();
    assert_eq!(drs.mood, Mood::Interrogative);
    assert_eq!(drs.classify().unwrap(), bare);
  }
}
