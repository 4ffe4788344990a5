//! Emission of ontology formalisms from statements, and the Manchester
//! import used for verbalization.
//!
//! Three emitters cover the three statement families: Manchester class
//! axioms for generalizations, disjointness and domain/range
//! declarations; SWRL for rules; SPARQL ASK for integrity queries.
//! [`emit_auto`] dispatches on the statement shape. Every emitter is a
//! single-line renderer with a fixed, canonical layout, so emitted text
//! is byte-stable and [`import_manchester`] is its exact inverse on the
//! Manchester subset.
//!
//! The Manchester subset: `Class: <sub> SubClassOf: <sup>` where the
//! subclass is a name or `owl:Thing and (<restriction>)` and the
//! superclass is a name, `owl:Thing`, a disjunction of names, a
//! restriction `[inverse (<p>) some] <C>`, or `not (<p> some <C>)`;
//! plus `DisjointClasses: <A>, <B>` and `ObjectProperty: <p>
//! Domain:|Range: <C>`. Cardinality and the other constructs outside
//! the subset import as structured unsupported-construct errors with
//! line numbers, never as misparses.

use std::fmt;

use thiserror::Error;

use crate::semantics::{ClassExpr, Polarity, PropertyAtom, Referent, Restriction, Statement};

/// Errors from emission and Manchester import.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OwlError {
  /// The statement has no rendering in the requested formalism.
  #[error("not expressible in {formalism}: {what}")]
  NotExpressible { formalism: &'static str, what: String },
  #[error("line {line}: {message}")]
  Syntax { line: usize, message: String },
  #[error("line {line}: unsupported construct {construct:?}")]
  Unsupported { line: usize, construct: String },
}

/// The formalism an emission is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OwlFormat {
  Manchester,
  Swrl,
  Sparql,
}

impl fmt::Display for OwlFormat {
  fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
    f.write_str(match self {
      OwlFormat::Manchester => "manchester",
      OwlFormat::Swrl => "swrl",
      OwlFormat::Sparql => "sparql",
    })
  }
}

fn not_expressible(formalism: &'static str, what: impl Into<String>) -> OwlError {
  OwlError::NotExpressible { formalism, what: what.into() }
}

// ---------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------

fn render_restriction(r: &Restriction) -> String {
  if r.inverse {
    format!("inverse ({}) some {}", r.property, r.filler)
  } else {
    format!("{} some {}", r.property, r.filler)
  }
}

fn render_sup(expr: &ClassExpr) -> Result<String, OwlError> {
  match expr {
    ClassExpr::Named(c) => Ok(c.clone()),
    ClassExpr::Thing => Ok("owl:Thing".to_string()),
    ClassExpr::Union(members) => {
      let parts: Vec<String> = members.iter().map(render_sup).collect::<Result<_, _>>()?;
      Ok(parts.join(" or "))
    }
    ClassExpr::SomeValues(r) => Ok(render_restriction(r)),
    ClassExpr::Not(inner) => match inner.as_ref() {
      ClassExpr::SomeValues(r) if !r.inverse => Ok(format!("not ({})", render_restriction(r))),
      ClassExpr::SomeValues(_) => {
        Err(not_expressible("manchester", "negated inverse restriction"))
      }
      other => Err(not_expressible("manchester", format!("negated {:?}", other))),
    },
    ClassExpr::ThingAnd(_) => {
      Err(not_expressible("manchester", "anonymous subclass as superclass"))
    }
  }
}

fn render_sub(expr: &ClassExpr) -> Result<String, OwlError> {
  match expr {
    ClassExpr::Named(c) => Ok(c.clone()),
    ClassExpr::ThingAnd(r) => Ok(format!("owl:Thing and ({})", render_restriction(r))),
    other => Err(not_expressible("manchester", format!("subclass expression {:?}", other))),
  }
}

/// Renders a generalization, disjointness, or domain/range statement as
/// one Manchester axiom line.
pub fn emit_manchester(statement: &Statement) -> Result<String, OwlError> {
  match statement {
    Statement::Generalization { sub, sup } => {
      Ok(format!("Class: {} SubClassOf: {}", render_sub(sub)?, render_sup(sup)?))
    }
    Statement::Disjoint { a, b } => Ok(format!("DisjointClasses: {}, {}", a, b)),
    Statement::Domain { property, class } => {
      Ok(format!("ObjectProperty: {} Domain: {}", property, class))
    }
    Statement::Range { property, class } => {
      Ok(format!("ObjectProperty: {} Range: {}", property, class))
    }
    Statement::Rule { .. } => Err(not_expressible("manchester", "rule (use SWRL)")),
    Statement::Query { .. } => Err(not_expressible("manchester", "query (use SPARQL)")),
  }
}

fn swrl_atom(atom: &PropertyAtom) -> String {
  format!("{}(?x{}, ?x{})", atom.property, atom.subject, atom.object)
}

/// Renders a rule statement as SWRL text: class atoms sorted by class
/// name, then body property atoms sorted by property name, then the head
/// after an arrow. Variables keep their first-occurrence numbering.
pub fn emit_swrl(statement: &Statement) -> Result<String, OwlError> {
  let Statement::Rule { referents, body, head } = statement else {
    return Err(not_expressible("swrl", "only rules render as SWRL"));
  };
  if body.iter().any(|a| a.polarity == Polarity::Negative) {
    return Err(not_expressible("swrl", "negated body atom"));
  }
  let mut class_atoms: Vec<(&str, usize)> = referents
    .iter()
    .filter_map(|r| r.class.as_deref().map(|c| (c, r.id)))
    .collect();
  class_atoms.sort();
  let mut property_atoms: Vec<&PropertyAtom> = body.iter().collect();
  property_atoms.sort_by_key(|a| (a.property.as_str(), a.subject, a.object));
  let parts: Vec<String> = class_atoms
    .iter()
    .map(|(class, id)| format!("{}(?x{})", class, id))
    .chain(property_atoms.iter().map(|a| swrl_atom(a)))
    .collect();
  Ok(format!("{} → {}", parts.join(", "), swrl_atom(head)))
}

fn sparql_triple(atom: &PropertyAtom) -> String {
  format!("?x{} {} ?x{}", atom.subject, atom.property, atom.object)
}

fn sparql_type(referents: &[Referent], id: usize) -> Option<String> {
  referents
    .iter()
    .find(|r| r.id == id)
    .and_then(|r| r.class.as_deref())
    .map(|class| format!("?x{} rdf:type {}", id, class))
}

/// Renders a query statement as a SPARQL ASK. The positive part follows
/// discourse order: the subject's type triple, then each positive atom
/// with the type triple of the referent it introduces right after it
/// (and the types of referents whose introduction was deferred by
/// negation right before it). All negative atoms collect into one
/// trailing NOT EXISTS block, with the types of referents that occur
/// only negatively kept inside the block.
pub fn emit_sparql(statement: &Statement) -> Result<String, OwlError> {
  let Statement::Query { referents, atoms } = statement else {
    return Err(not_expressible("sparql", "only queries render as SPARQL ASK"));
  };
  let mut parts: Vec<String> = vec![];
  let mut mentioned: Vec<usize> = vec![];
  let mut typed: Vec<usize> = vec![];
  let mut negated: Vec<&PropertyAtom> = vec![];
  let mention = |id: usize, mentioned: &mut Vec<usize>| {
    if !mentioned.contains(&id) {
      mentioned.push(id);
    }
  };
  if let Some(first) = referents.first() {
    mention(first.id, &mut mentioned);
    if let Some(t) = sparql_type(referents, first.id) {
      parts.push(t);
      typed.push(first.id);
    }
  }
  for atom in atoms {
    if atom.polarity == Polarity::Negative {
      mention(atom.subject, &mut mentioned);
      mention(atom.object, &mut mentioned);
      negated.push(atom);
      continue;
    }
    // Referents already in the discourse (deferred by a negated clause)
    // are typed before the positive atom that reuses them …
    for id in [atom.subject, atom.object] {
      if mentioned.contains(&id) && !typed.contains(&id) {
        if let Some(t) = sparql_type(referents, id) {
          parts.push(t);
          typed.push(id);
        }
      }
    }
    let new: Vec<usize> = [atom.subject, atom.object]
      .into_iter()
      .filter(|id| !mentioned.contains(id))
      .collect();
    parts.push(sparql_triple(atom));
    // … while referents this atom introduces are typed right after it,
    // mirroring the post-verbal position of the NP.
    for id in new {
      mention(id, &mut mentioned);
      if let Some(t) = sparql_type(referents, id) {
        parts.push(t);
        typed.push(id);
      }
    }
  }
  if !negated.is_empty() {
    let mut inner: Vec<String> = vec![];
    for atom in &negated {
      for id in [atom.subject, atom.object] {
        if !typed.contains(&id) {
          if let Some(t) = sparql_type(referents, id) {
            inner.push(t);
            typed.push(id);
          }
        }
      }
      inner.push(sparql_triple(atom));
    }
    parts.push(format!("NOT EXISTS {{{}}}", inner.join(". ")));
  }
  Ok(format!("ASK WHERE {{{}}}", parts.join(". ")))
}

/// Dispatches to the formalism that can express the statement.
pub fn emit_auto(statement: &Statement) -> Result<(OwlFormat, String), OwlError> {
  match statement {
    Statement::Rule { .. } => Ok((OwlFormat::Swrl, emit_swrl(statement)?)),
    Statement::Query { .. } => Ok((OwlFormat::Sparql, emit_sparql(statement)?)),
    _ => Ok((OwlFormat::Manchester, emit_manchester(statement)?)),
  }
}

// ---------------------------------------------------------------------
// Manchester import
// ---------------------------------------------------------------------

const UNSUPPORTED_KEYWORDS: [&str; 5] = ["min", "max", "exactly", "only", "value"];

fn is_name(token: &str) -> bool {
  !token.is_empty() && token.chars().all(|c| c.is_alphanumeric() || c == '_')
}

struct Importer {
  line: usize,
}

impl Importer {
  fn syntax(&self, message: impl Into<String>) -> OwlError {
    OwlError::Syntax { line: self.line, message: message.into() }
  }

  fn unsupported(&self, construct: impl Into<String>) -> OwlError {
    OwlError::Unsupported { line: self.line, construct: construct.into() }
  }

  fn name(&self, token: &str, role: &str) -> Result<String, OwlError> {
    let token = token.trim();
    if let Some(keyword) = UNSUPPORTED_KEYWORDS
      .iter()
      .find(|k| token.split_whitespace().any(|w| w == **k))
    {
      return Err(self.unsupported(*keyword));
    }
    if is_name(token) {
      Ok(token.to_string())
    } else {
      Err(self.syntax(format!("expected a {} name, found {:?}", role, token)))
    }
  }

  fn restriction(&self, text: &str) -> Result<Restriction, OwlError> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("inverse (") {
      let (property, rest) = rest
        .split_once(')')
        .ok_or_else(|| self.syntax("unclosed parenthesis after inverse"))?;
      let filler = rest
        .trim()
        .strip_prefix("some ")
        .ok_or_else(|| self.syntax("expected `some` after inverse (…)"))?;
      Ok(Restriction {
        property: self.name(property, "property")?,
        inverse: true,
        filler: self.name(filler, "class")?,
      })
    } else if let Some((property, filler)) = text.split_once(" some ") {
      Ok(Restriction {
        property: self.name(property, "property")?,
        inverse: false,
        filler: self.name(filler, "class")?,
      })
    } else {
      Err(self.syntax(format!("expected a restriction, found {:?}", text)))
    }
  }

  fn class_expr(&self, text: &str) -> Result<ClassExpr, OwlError> {
    let text = text.trim();
    if text == "owl:Thing" {
      return Ok(ClassExpr::Thing);
    }
    if let Some(rest) = text.strip_prefix("owl:Thing and (") {
      let inner = rest
        .strip_suffix(')')
        .ok_or_else(|| self.syntax("unclosed parenthesis in anonymous class"))?;
      return Ok(ClassExpr::ThingAnd(self.restriction(inner)?));
    }
    if let Some(rest) = text.strip_prefix("not (") {
      let inner =
        rest.strip_suffix(')').ok_or_else(|| self.syntax("unclosed parenthesis after not"))?;
      if inner.trim_start().starts_with("inverse") {
        return Err(self.unsupported("negated inverse restriction"));
      }
      return Ok(ClassExpr::Not(Box::new(ClassExpr::SomeValues(self.restriction(inner)?))));
    }
    if text.contains(" or ") {
      let members: Vec<ClassExpr> = text
        .split(" or ")
        .map(|part| Ok(ClassExpr::Named(self.name(part, "class")?)))
        .collect::<Result<_, OwlError>>()?;
      return Ok(ClassExpr::Union(members));
    }
    if text.contains(" some ") {
      return Ok(ClassExpr::SomeValues(self.restriction(text)?));
    }
    Ok(ClassExpr::Named(self.name(text, "class")?))
  }

  fn axiom(&self, line: &str) -> Result<Statement, OwlError> {
    if let Some(rest) = line.strip_prefix("DisjointClasses:") {
      let names: Vec<&str> = rest.split(',').collect();
      if names.len() != 2 {
        return Err(self.syntax("DisjointClasses takes exactly two classes"));
      }
      return Ok(Statement::Disjoint {
        a: self.name(names[0], "class")?,
        b: self.name(names[1], "class")?,
      });
    }
    if let Some(rest) = line.strip_prefix("ObjectProperty:") {
      if let Some((property, class)) = rest.split_once("Domain:") {
        return Ok(Statement::Domain {
          property: self.name(property, "property")?,
          class: self.name(class, "class")?,
        });
      }
      if let Some((property, class)) = rest.split_once("Range:") {
        return Ok(Statement::Range {
          property: self.name(property, "property")?,
          class: self.name(class, "class")?,
        });
      }
      return Err(self.syntax("expected Domain: or Range: in property axiom"));
    }
    if let Some(rest) = line.strip_prefix("Class:") {
      let (sub, sup) = rest
        .split_once("SubClassOf:")
        .ok_or_else(|| self.syntax("expected SubClassOf: in class axiom"))?;
      let sub = self.class_expr(sub)?;
      match sub {
        ClassExpr::Named(_) | ClassExpr::ThingAnd(_) => {}
        other => return Err(self.syntax(format!("unsupported subclass {:?}", other))),
      }
      return Ok(Statement::Generalization { sub, sup: self.class_expr(sup)? });
    }
    Err(self.syntax(format!("unrecognized axiom {:?}", line)))
  }
}

/// Parses the emitted Manchester subset: one axiom per line, blank lines
/// and `#` comments ignored. Names are accepted structurally; whether a
/// lexicon can verbalize them is a later, separate question.
pub fn import_manchester(text: &str) -> Result<Vec<Statement>, OwlError> {
  let mut statements = vec![];
  for (i, raw) in text.lines().enumerate() {
    let line = raw.trim();
    if line.is_empty() || line.starts_with('#') {
      continue;
    }
    statements.push(Importer { line: i + 1 }.axiom(line)?);
  }
  Ok(statements)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::semantics::Quant;

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

  fn referent(id: usize, quant: Quant, class: &str) -> Referent {
    Referent { id, quant, class: Some(class.to_string()) }
  }

  fn atom(property: &str, subject: usize, object: usize, polarity: Polarity) -> PropertyAtom {
    PropertyAtom { property: property.to_string(), subject, object, polarity }
  }

  fn rule_fixture() -> Statement {
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

  #[test]
  fn manchester_axiom_lines() {
    let cases = [
      (gen(named("Professor"), named("Teacher")), "Class: Professor SubClassOf: Teacher"),
      (
        gen(named("Course"), ClassExpr::Union(vec![named("MandatoryCourse"), named("OptionalCourse")])),
        "Class: Course SubClassOf: MandatoryCourse or OptionalCourse",
      ),
      (
        gen(named("Course"), some("teaches", true, "Teacher")),
        "Class: Course SubClassOf: inverse (teaches) some Teacher",
      ),
      (
        gen(
          ClassExpr::ThingAnd(Restriction {
            property: "teaches".into(),
            inverse: false,
            filler: "MandatoryCourse".into(),
          }),
          named("Professor"),
        ),
        "Class: owl:Thing and (teaches some MandatoryCourse) SubClassOf: Professor",
      ),
      (
        gen(named("Course"), some("part", true, "AcademicProgram")),
        "Class: Course SubClassOf: inverse (part) some AcademicProgram",
      ),
      (
        gen(named("AcademicProgram"), some("part", false, "Course")),
        "Class: AcademicProgram SubClassOf: part some Course",
      ),
      (
        gen(
          named("Assistant"),
          ClassExpr::Not(Box::new(some("teaches", false, "MandatoryCourse"))),
        ),
        "Class: Assistant SubClassOf: not (teaches some MandatoryCourse)",
      ),
      (
        Statement::Disjoint { a: "Assistant".into(), b: "Professor".into() },
        "DisjointClasses: Assistant, Professor",
      ),
      (
        Statement::Domain { property: "teaches".into(), class: "Teacher".into() },
        "ObjectProperty: teaches Domain: Teacher",
      ),
      (
        Statement::Range { property: "teaches".into(), class: "Course".into() },
        "ObjectProperty: teaches Range: Course",
      ),
    ];
    for (statement, expected) in &cases {
      assert_eq!(&emit_manchester(statement).unwrap(), expected);
    }
  }

  #[test]
  fn manchester_rejects_rules_queries_and_negated_inverse() {
    assert!(matches!(
      emit_manchester(&rule_fixture()),
      Err(OwlError::NotExpressible { formalism: "manchester", .. })
    ));
    assert!(matches!(
      emit_manchester(&query_fixture()),
      Err(OwlError::NotExpressible { formalism: "manchester", .. })
    ));
    let negated_inverse =
      gen(named("Course"), ClassExpr::Not(Box::new(some("teaches", true, "Teacher"))));
    assert!(matches!(
      emit_manchester(&negated_inverse),
      Err(OwlError::NotExpressible { .. })
    ));
  }

  #[test]
  fn swrl_sorts_atoms_and_keeps_variable_numbers() {
    assert_eq!(
      emit_swrl(&rule_fixture()).unwrap(),
      "AcademicProgram(?x3), MandatoryCourse(?x2), Student(?x1), \
       enrolls(?x3, ?x1), includes(?x3, ?x2) → takes(?x1, ?x2)"
    );
    // Renaming classes so the lexicographic order changes re-sorts the
    // class atoms but never renumbers the variables.
    let renamed = Statement::Rule {
      referents: vec![
        referent(1, Quant::Universal, "Zebra"),
        referent(2, Quant::Universal, "Okapi"),
        referent(3, Quant::Existential, "Ant"),
      ],
      body: vec![
        atom("includes", 3, 2, Polarity::Positive),
        atom("enrolls", 3, 1, Polarity::Positive),
      ],
      head: atom("takes", 1, 2, Polarity::Positive),
    };
    assert_eq!(
      emit_swrl(&renamed).unwrap(),
      "Ant(?x3), Okapi(?x2), Zebra(?x1), enrolls(?x3, ?x1), includes(?x3, ?x2) \
       → takes(?x1, ?x2)"
    );
    assert!(matches!(emit_swrl(&query_fixture()), Err(OwlError::NotExpressible { .. })));
  }

  #[test]
  fn sparql_discourse_order_with_trailing_negation() {
    assert_eq!(
      emit_sparql(&query_fixture()).unwrap(),
      "ASK WHERE {?x1 rdf:type Student. ?x1 takes ?x2. ?x2 rdf:type Course. \
       ?x3 rdf:type AcademicProgram. ?x3 enrolls ?x1. NOT EXISTS {?x3 includes ?x2}}"
    );
  }

  #[test]
  fn sparql_without_negation_has_no_not_exists() {
    let positive = Statement::Query {
      referents: vec![
        Referent { id: 1, quant: Quant::QueryExistential, class: Some("Student".into()) },
        Referent { id: 2, quant: Quant::QueryExistential, class: Some("Course".into()) },
      ],
      atoms: vec![atom("takes", 1, 2, Polarity::Positive)],
    };
    assert_eq!(
      emit_sparql(&positive).unwrap(),
      "ASK WHERE {?x1 rdf:type Student. ?x1 takes ?x2. ?x2 rdf:type Course}"
    );
    let bare = Statement::Query {
      referents: vec![Referent {
        id: 1,
        quant: Quant::QueryExistential,
        class: Some("Student".into()),
      }],
      atoms: vec![],
    };
    assert_eq!(emit_sparql(&bare).unwrap(), "ASK WHERE {?x1 rdf:type Student}");
  }

  #[test]
  fn sparql_types_negative_only_referents_inside_not_exists() {
    // "Is there a student that is not enrolled_in any academic program?"
    let query = Statement::Query {
      referents: vec![
        Referent { id: 1, quant: Quant::QueryExistential, class: Some("Student".into()) },
        Referent {
          id: 2,
          quant: Quant::QueryExistential,
          class: Some("AcademicProgram".into()),
        },
      ],
      atoms: vec![atom("enrolls", 2, 1, Polarity::Negative)],
    };
    assert_eq!(
      emit_sparql(&query).unwrap(),
      "ASK WHERE {?x1 rdf:type Student. \
       NOT EXISTS {?x2 rdf:type AcademicProgram. ?x2 enrolls ?x1}}"
    );
  }

  #[test]
  fn sparql_numbers_extra_referents_in_mention_order() {
    // Extend the integrity query with one more positive relative clause.
    let query = Statement::Query {
      referents: vec![
        Referent { id: 1, quant: Quant::QueryExistential, class: Some("Student".into()) },
        Referent { id: 2, quant: Quant::QueryExistential, class: Some("Course".into()) },
        Referent { id: 3, quant: Quant::QueryExistential, class: Some("Teacher".into()) },
        Referent {
          id: 4,
          quant: Quant::QueryExistential,
          class: Some("AcademicProgram".into()),
        },
      ],
      atoms: vec![
        atom("takes", 1, 2, Polarity::Positive),
        atom("teaches", 3, 2, Polarity::Positive),
        atom("enrolls", 4, 3, Polarity::Negative),
      ],
    };
    assert_eq!(
      emit_sparql(&query).unwrap(),
      "ASK WHERE {?x1 rdf:type Student. ?x1 takes ?x2. ?x2 rdf:type Course. \
       ?x3 teaches ?x2. ?x3 rdf:type Teacher. \
       NOT EXISTS {?x4 rdf:type AcademicProgram. ?x4 enrolls ?x3}}"
    );
  }

  #[test]
  fn auto_dispatches_by_statement_shape() {
    let (format, text) = emit_auto(&gen(named("Professor"), named("Teacher"))).unwrap();
    assert_eq!(format, OwlFormat::Manchester);
    assert!(text.starts_with("Class:"));
    let (format, _) = emit_auto(&rule_fixture()).unwrap();
    assert_eq!(format, OwlFormat::Swrl);
    let (format, text) = emit_auto(&query_fixture()).unwrap();
    assert_eq!(format, OwlFormat::Sparql);
    assert!(text.starts_with("ASK WHERE"));
  }

  #[test]
  fn import_inverts_emission() {
    let statements = [
      gen(named("Professor"), named("Teacher")),
      gen(named("Course"), ClassExpr::Union(vec![named("MandatoryCourse"), named("OptionalCourse")])),
      gen(named("Course"), some("teaches", true, "Teacher")),
      gen(
        ClassExpr::ThingAnd(Restriction {
          property: "teaches".into(),
          inverse: false,
          filler: "MandatoryCourse".into(),
        }),
        named("Professor"),
      ),
      gen(named("AcademicProgram"), some("part", false, "Course")),
      gen(named("Assistant"), ClassExpr::Not(Box::new(some("teaches", false, "MandatoryCourse")))),
      Statement::Disjoint { a: "Assistant".into(), b: "Professor".into() },
      Statement::Domain { property: "teaches".into(), class: "Teacher".into() },
      Statement::Range { property: "teaches".into(), class: "Course".into() },
      gen(named("Course"), ClassExpr::Thing),
    ];
    for statement in &statements {
      let line = emit_manchester(statement).unwrap();
      let imported = import_manchester(&line).unwrap();
      assert_eq!(imported.as_slice(), std::slice::from_ref(statement), "line {:?}", line);
      // Emission is the exact inverse on its own output.
      assert_eq!(emit_manchester(&imported[0]).unwrap(), line);
    }
  }

  #[test]
  fn import_skips_blanks_and_comments_and_numbers_lines() {
    let text = "\n# an ontology\nClass: Professor SubClassOf: Teacher\n\n\
                DisjointClasses: Assistant, Professor\n";
    let statements = import_manchester(text).unwrap();
    assert_eq!(statements.len(), 2);
    let err = import_manchester("# fine\nClass: Professor Teacher\n").unwrap_err();
    assert_eq!(
      err,
      OwlError::Syntax { line: 2, message: "expected SubClassOf: in class axiom".into() }
    );
  }

  #[test]
  fn import_rejects_cardinality_as_unsupported() {
    let err = import_manchester("Class: Course SubClassOf: min 2 teaches").unwrap_err();
    assert!(
      matches!(err, OwlError::Unsupported { line: 1, ref construct } if construct == "min"),
      "got {:?}",
      err
    );
    let err =
      import_manchester("Class: Course SubClassOf: teaches only MandatoryCourse").unwrap_err();
    assert!(matches!(err, OwlError::Unsupported { .. }), "got {:?}", err);
    let err = import_manchester("Class: Course SubClassOf: not (inverse (teaches) some Teacher)")
      .unwrap_err();
    assert!(
      matches!(err, OwlError::Unsupported { line: 1, ref construct }
        if construct == "negated inverse restriction"),
      "got {:?}",
      err
    );
  }

  #[test]
  fn import_reports_malformed_lines() {
    for (text, line) in [
      ("EquivalentClasses: A, B", 1),
      ("Class: A SubClassOf: (B", 1),
      ("Class: Professor SubClassOf: Teacher\nDisjointClasses: A, B, C", 2),
      ("ObjectProperty: teaches Functional: true", 1),
      ("Class: A or B SubClassOf: C", 1),
    ] {
      match import_manchester(text) {
        Err(OwlError::Syntax { line: l, .. }) => assert_eq!(l, line, "for {:?}", text),
        other => panic!("expected syntax error for {:?}, got {:?}", text, other),
      }
    }
  }
}
