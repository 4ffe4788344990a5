//! Batch command-line front end for the controlled-Latvian ontology
//! compiler: one sentence or axiom per input line, one result line per
//! input on stdout, in input order.
//!
//! Result lines are `OK\t<output>` or `ERR\t<CODE>\t<line>:<col> <message>`.
//! Exit status: 0 when every line succeeded, 1 when any line failed,
//! 2 on usage errors, 3 when the lexicon cannot be loaded.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use lvcnl::semantics::Drs;
use lvcnl::{
  emit_auto, emit_manchester, emit_sparql, emit_swrl, import_manchester, linearize_ace,
  linearize_lv, parse, GenError, Lexicon, Number, OwlError, ParseError, Statement,
};

#[derive(Parser)]
#[command(name = "lvcnl", version, about = "Controlled Latvian to OWL and back")]
struct Cli {
  #[command(subcommand)]
  command: Command,
}

#[derive(Subcommand)]
enum Command {
  /// Parse controlled Latvian into an ontology formalism.
  Parse {
    /// Lexicon file.
    #[arg(long)]
    lexicon: PathBuf,
    /// Output formalism; `auto` picks by statement shape.
    #[arg(long, value_enum, default_value_t = EmitMode::Auto)]
    emit: EmitMode,
    /// Append a canonical paraphrase as an extra column.
    #[arg(long, value_enum, default_value_t = ParaphraseMode::None)]
    paraphrase: ParaphraseMode,
    /// Grammatical number of Latvian paraphrases.
    #[arg(long, value_enum, default_value_t = NumberMode::Sg)]
    number: NumberMode,
    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
  },
  /// Verbalize Manchester axioms as controlled Latvian or English.
  Verbalize {
    #[arg(long)]
    lexicon: PathBuf,
    /// Target language.
    #[arg(long, value_enum)]
    to: TargetLang,
    #[arg(long, value_enum, default_value_t = NumberMode::Sg)]
    number: NumberMode,
    #[arg(default_value = "-")]
    input: String,
  },
  /// Translate controlled Latvian into controlled English.
  Translate {
    #[arg(long)]
    lexicon: PathBuf,
    #[arg(default_value = "-")]
    input: String,
  },
  /// Load a lexicon and report its defects.
  Check {
    #[arg(long)]
    lexicon: PathBuf,
  },
  /// Run a golden regression corpus.
  Corpus {
    #[arg(long)]
    lexicon: PathBuf,
    /// Tab-separated corpus file.
    corpus: PathBuf,
  },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EmitMode {
  Auto,
  Manchester,
  Swrl,
  Sparql,
  Drs,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ParaphraseMode {
  Lv,
  Ace,
  None,
}

#[derive(Copy, Clone, ValueEnum)]
enum TargetLang {
  Lv,
  Ace,
}

#[derive(Copy, Clone, ValueEnum)]
enum NumberMode {
  Sg,
  Pl,
}

impl From<NumberMode> for Number {
  fn from(mode: NumberMode) -> Number {
    match mode {
      NumberMode::Sg => Number::Sg,
      NumberMode::Pl => Number::Pl,
    }
  }
}

/// A per-line failure: error code plus a column and message for the
/// `<line>:<col> <message>` field.
struct LineError {
  code: &'static str,
  col: usize,
  message: String,
}

impl LineError {
  fn new(code: &'static str, col: usize, message: impl Into<String>) -> LineError {
    LineError { code, col, message: message.into() }
  }
}

impl From<ParseError> for LineError {
  fn from(e: ParseError) -> LineError {
    match e {
      ParseError::UnknownToken { surface, col } => LineError::new("UNKNOWN_TOKEN", col, surface),
      ParseError::NoParse { col } => LineError::new("NO_PARSE", col, "no parse"),
      ParseError::Ambiguous { count } => {
        LineError::new("AMBIGUOUS", 1, format!("{} readings", count))
      }
      ParseError::AgreementViolation { surface, col } => {
        LineError::new("AGREEMENT", col, surface)
      }
      ParseError::UnresolvedAnaphor { surface, col } => {
        LineError::new("UNRESOLVED_ANAPHOR", col, surface)
      }
    }
  }
}

impl From<GenError> for LineError {
  fn from(e: GenError) -> LineError {
    let code = match e {
      GenError::UnknownClass(_) => "UNKNOWN_CLASS",
      GenError::UnknownProperty(_) => "UNKNOWN_PROPERTY",
      GenError::Unrealizable(_) => "UNREALIZABLE",
    };
    LineError::new(code, 1, e.to_string())
  }
}

impl From<OwlError> for LineError {
  fn from(e: OwlError) -> LineError {
    match e {
      OwlError::NotExpressible { .. } => LineError::new("NOT_EXPRESSIBLE", 1, e.to_string()),
      OwlError::Syntax { ref message, .. } => LineError::new("SYNTAX", 1, message.clone()),
      OwlError::Unsupported { ref construct, .. } => {
        LineError::new("UNSUPPORTED", 1, format!("unsupported construct {:?}", construct))
      }
    }
  }
}

fn main() -> ExitCode {
  match run(Cli::parse()) {
    Ok(code) => code,
    Err(e) => {
      eprintln!("lvcnl: {:#}", e);
      ExitCode::from(2)
    }
  }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
  match cli.command {
    Command::Parse { lexicon, emit, paraphrase, number, input } => {
      let Some(lx) = load_lexicon(&lexicon) else { return Ok(ExitCode::from(3)) };
      let text = read_input(&input)?;
      Ok(for_each_line(&text, |line| {
        let drs = parse(line, &lx)?;
        let statement = drs.classify().map_err(|e| LineError::new("UNCLASSIFIABLE", 1, e.to_string()))?;
        let mut out = emit_statement(&statement, &drs, emit)?;
        match paraphrase {
          ParaphraseMode::None => {}
          ParaphraseMode::Lv => {
            out.push('\t');
            out.push_str(&linearize_lv(&statement, &lx, number.into())?);
          }
          ParaphraseMode::Ace => {
            out.push('\t');
            out.push_str(&linearize_ace(&statement, &lx)?);
          }
        }
        Ok(out)
      }))
    }
    Command::Verbalize { lexicon, to, number, input } => {
      let Some(lx) = load_lexicon(&lexicon) else { return Ok(ExitCode::from(3)) };
      let text = read_input(&input)?;
      Ok(for_each_line(&text, |line| {
        let statements = import_manchester(line)?;
        let statement = statements.first().ok_or_else(|| {
          LineError::new("SYNTAX", 1, "empty axiom line")
        })?;
        Ok(match to {
          TargetLang::Lv => linearize_lv(statement, &lx, number.into())?,
          TargetLang::Ace => linearize_ace(statement, &lx)?,
        })
      }))
    }
    Command::Translate { lexicon, input } => {
      let Some(lx) = load_lexicon(&lexicon) else { return Ok(ExitCode::from(3)) };
      let text = read_input(&input)?;
      Ok(for_each_line(&text, |line| {
        let statement = parse(line, &lx)?
          .classify()
          .map_err(|e| LineError::new("UNCLASSIFIABLE", 1, e.to_string()))?;
        Ok(linearize_ace(&statement, &lx)?)
      }))
    }
    Command::Check { lexicon } => {
      let Some(lx) = load_lexicon(&lexicon) else { return Ok(ExitCode::from(3)) };
      let warnings = lx.validate();
      for warning in &warnings {
        println!("ERR\tLEX_WARNING\t{}", warning);
      }
      if warnings.is_empty() {
        println!("OK\t{} classes, {} properties", lx.nouns.len(), lx.properties.len());
        Ok(ExitCode::SUCCESS)
      } else {
        Ok(ExitCode::from(1))
      }
    }
    Command::Corpus { lexicon, corpus } => {
      let Some(lx) = load_lexicon(&lexicon) else { return Ok(ExitCode::from(3)) };
      let text = fs::read_to_string(&corpus)
        .with_context(|| format!("cannot read corpus {}", corpus.display()))?;
      Ok(for_each_line(&text, |line| {
        let case = CorpusCase::from_line(line)?;
        case.run(&lx)
      }))
    }
  }
}

/// Loads the lexicon, reporting load failures on stderr (exit code 3).
fn load_lexicon(path: &Path) -> Option<Lexicon> {
  let text = match fs::read_to_string(path) {
    Ok(text) => text,
    Err(e) => {
      eprintln!("lvcnl: cannot read lexicon {}: {}", path.display(), e);
      return None;
    }
  };
  match Lexicon::load(&text) {
    Ok(lx) => Some(lx),
    Err(e) => {
      eprintln!("lvcnl: lexicon {} is malformed:\n{}", path.display(), e);
      None
    }
  }
}

fn read_input(spec: &str) -> anyhow::Result<String> {
  if spec == "-" {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text).context("cannot read stdin")?;
    Ok(text)
  } else {
    fs::read_to_string(spec).with_context(|| format!("cannot read input {}", spec))
  }
}

/// Runs a handler over every nonblank, noncomment input line, printing
/// one OK/ERR line per input in order. Returns exit code 0 or 1.
fn for_each_line(text: &str, mut handle: impl FnMut(&str) -> Result<String, LineError>) -> ExitCode {
  let mut failures = 0;
  for (i, raw) in text.lines().enumerate() {
    let line = raw.trim();
    if line.is_empty() || line.starts_with('#') {
      continue;
    }
    match handle(line) {
      Ok(out) => println!("OK\t{}", out),
      Err(e) => {
        failures += 1;
        println!("ERR\t{}\t{}:{} {}", e.code, i + 1, e.col, e.message);
      }
    }
  }
  if failures == 0 {
    ExitCode::SUCCESS
  } else {
    ExitCode::from(1)
  }
}

fn emit_statement(statement: &Statement, drs: &Drs, mode: EmitMode) -> Result<String, LineError> {
  Ok(match mode {
    EmitMode::Auto => emit_auto(statement)?.1,
    EmitMode::Manchester => emit_manchester(statement)?,
    EmitMode::Swrl => emit_swrl(statement)?,
    EmitMode::Sparql => emit_sparql(statement)?,
    EmitMode::Drs => drs.dump().replace('\n', "; "),
  })
}

/// One golden corpus row: input sentence, expected formalism tag,
/// expected emission, expected canonical Latvian and English.
struct CorpusCase<'a> {
  input: &'a str,
  tag: &'a str,
  emission: &'a str,
  lv: &'a str,
  ace: &'a str,
}

impl<'a> CorpusCase<'a> {
  fn from_line(line: &'a str) -> Result<CorpusCase<'a>, LineError> {
    let mut cols = line.split('\t');
    let mut next = || cols.next().filter(|c| !c.is_empty());
    match (next(), next(), next(), next(), next()) {
      (Some(input), Some(tag), Some(emission), Some(lv), Some(ace)) => {
        Ok(CorpusCase { input, tag, emission, lv, ace })
      }
      _ => Err(LineError::new("CORPUS_FORMAT", 1, "expected five tab-separated columns")),
    }
  }

  fn run(&self, lx: &Lexicon) -> Result<String, LineError> {
    let statement = parse(self.input, lx)?
      .classify()
      .map_err(|e| LineError::new("UNCLASSIFIABLE", 1, e.to_string()))?;
    let (format, text) = emit_auto(&statement)?;
    let mut mismatches = vec![];
    if format.to_string() != self.tag {
      mismatches.push(format!("formalism {} != {}", format, self.tag));
    }
    if text != self.emission {
      mismatches.push(format!("emission {:?} != {:?}", text, self.emission));
    }
    let lv = linearize_lv(&statement, lx, Number::Sg)?;
    if lv != self.lv {
      mismatches.push(format!("latvian {:?} != {:?}", lv, self.lv));
    }
    let ace = linearize_ace(&statement, lx)?;
    if ace != self.ace {
      mismatches.push(format!("english {:?} != {:?}", ace, self.ace));
    }
    if mismatches.is_empty() {
      Ok(self.input.to_string())
    } else {
      Err(LineError::new("MISMATCH", 1, mismatches.join("; ")))
    }
  }
}
