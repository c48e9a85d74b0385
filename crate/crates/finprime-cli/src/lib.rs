//! Command-line surface over the finprime library. Every command produces a
//! [`CommandReport`] of flat `key=value` lines (or a JSON mirror), and an
//! exit code: 0 for success or a positive verdict, 1 for a negative
//! verdict, 2 when a resource limit is hit, 3 for input errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use finprime::automaton::{
    alphabet_of, distinguishing_word, format_word, index_of, is_empty, is_finite_language, is_minimal,
    longest_word_length, minimize, parse_dfa, parse_word, serialize_dfa, to_dot,
};
use finprime::classifier::{
    has_cep, is_cosafety, is_safety, is_simple_cosafety, linear_profile, uniform_max_word_letter,
};
use finprime::factories::{length_cap_dfa, letter_count_dfa, mod_counter_dfa, singleton_dfa, star_word_dfa};
use finprime::gadgets::{minimality_gadget, parse_digraph, prime2_gadget, primefin_gadget, sprime_gadget};
use finprime::oracle::{dfa_count, minimal_adfas, verify_decomposition, AlphaOracle, OracleLimits};
use finprime::primality::{decide, decompose, Branch, DecompositionLimits};
use finprime::sampling::{random_adfa, seeded};
use finprime::{DecompositionMode, Dfa, Error, LongestWord, Status};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_LIMIT: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

/// Result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandReport {
    pub command: String,
    /// Leading hex digits of the SHA-256 of the input files, in order.
    pub digest: String,
    pub fields: Vec<(String, String)>,
    /// A DFA, digraph or DOT document produced by the command.
    pub document: Option<String>,
    pub json: bool,
    pub exit_code: u8,
}

impl CommandReport {
    fn new(command: &str) -> CommandReport {
        CommandReport {
            command: command.to_string(),
            digest: String::new(),
            fields: Vec::new(),
            document: None,
            json: false,
            exit_code: EXIT_OK,
        }
    }

    fn field(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    /// Value of the first field named `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Text printed on stdout. Document-producing commands print the
    /// document alone unless JSON output was requested.
    pub fn render(&self) -> String {
        if self.json {
            let mut map = serde_json::Map::new();
            map.insert("command".into(), self.command.clone().into());
            map.insert("input".into(), self.digest.clone().into());
            for (k, v) in &self.fields {
                map.insert(k.clone(), v.clone().into());
            }
            if let Some(doc) = &self.document {
                map.insert("document".into(), doc.clone().into());
            }
            map.insert("exit".into(), self.exit_code.into());
            let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(map))
                .expect("string map serializes");
            text.push('\n');
            return text;
        }
        if let Some(doc) = &self.document {
            return doc.clone();
        }
        let mut out = format!("command={}\n", self.command);
        if !self.digest.is_empty() {
            out.push_str(&format!("input={}\n", self.digest));
        }
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}={v}\n"));
        }
        out
    }
}

#[derive(Parser, Debug)]
#[command(name = "finprime", about = "Primality of DFAs recognizing finite languages")]
struct Cli {
    /// Emit a JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Mode {
    Cap,
    Cup,
    Dnf,
    S,
}

impl Mode {
    fn decomposition(self) -> DecompositionMode {
        match self {
            Mode::Cap => DecompositionMode::Intersection,
            Mode::Cup => DecompositionMode::Union,
            Mode::Dnf => DecompositionMode::Dnf,
            Mode::S => DecompositionMode::SizeIntersection,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct OracleArgs {
    /// Largest candidate factor size enumerated by the oracle.
    #[arg(long, default_value_t = OracleLimits::default().max_factor_states)]
    max_factor_states: usize,
    /// Cap on the number of DFAs the oracle may enumerate.
    #[arg(long, default_value_t = OracleLimits::default().max_enumerated_dfas)]
    max_enumerated: u64,
}

impl OracleArgs {
    fn limits(self) -> OracleLimits {
        OracleLimits {
            max_factor_states: self.max_factor_states,
            max_enumerated_dfas: self.max_enumerated,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct DecomposeArgs {
    /// Cap on the number of emitted factors.
    #[arg(long, default_value_t = DecompositionLimits::default().max_factors)]
    max_factors: usize,
    /// Cap on the number of candidate words examined.
    #[arg(long, default_value_t = DecompositionLimits::default().max_candidates)]
    max_candidates: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural facts: index, finiteness, linearity, safety, CEP.
    Classify { file: PathBuf },
    /// Primality verdict with its branch and witness.
    Prime {
        #[arg(long, value_enum, default_value = "cap")]
        mode: Mode,
        file: PathBuf,
    },
    /// Decomposition into smaller factors, checked before it is reported.
    Decompose {
        #[arg(long, value_enum, default_value = "cap")]
        mode: Mode,
        /// Directory receiving one file per factor and a manifest.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: DecomposeArgs,
        file: PathBuf,
    },
    /// Computes the intersection-primality witness, or checks a given word,
    /// against the brute-force oracle.
    Witness {
        /// Word to check, letters separated by spaces, `--` for the empty word.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[command(flatten)]
        oracle: OracleArgs,
        file: PathBuf,
    },
    /// Brute-force intersection-primality verdict.
    Oracle {
        #[command(flatten)]
        oracle: OracleArgs,
        file: PathBuf,
    },
    /// Canonical minimal DFA.
    Minimize { file: PathBuf },
    /// Language equivalence with a distinguishing word.
    Equiv { left: PathBuf, right: PathBuf },
    /// Builds a named DFA family member.
    Factory {
        #[arg(value_enum)]
        kind: FactoryKind,
        /// Family parameters: a number, a word (none for the empty word), or
        /// a letter and a number.
        params: Vec<String>,
        /// Alphabet letters separated by spaces.
        #[arg(long, default_value = "a b")]
        alphabet: String,
    },
    /// Reduction gadgets over a digraph (minimality, sprime) or a DFA
    /// (primefin, prime2).
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        file: PathBuf,
    },
    /// Graphviz rendering.
    Dot { file: PathBuf },
    /// Fast verdicts against the oracle over a family of inputs.
    Sweep(SweepArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FactoryKind {
    ModCounter,
    Singleton,
    LengthCap,
    StarWord,
    LetterCount,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum GadgetKind {
    Minimality,
    Sprime,
    Primefin,
    Prime2,
}

#[derive(Args, Debug, Clone)]
struct SweepArgs {
    /// Largest index of the exhaustive family.
    #[arg(long, default_value_t = 4)]
    index: usize,
    /// Alphabet size; letters are 0, 1, 2, ...
    #[arg(long, default_value_t = 2)]
    letters: usize,
    /// Draw this many random DFAs instead of the exhaustive family.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Longest word length of random samples.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[command(flatten)]
    oracle: OracleArgs,
    /// Negates the compression-extension verdict of the fast classifier,
    /// to check that the sweep notices.
    #[arg(long, hide = true)]
    mutant: bool,
}

/// Parses `argv` (without the program name), runs the command and returns
/// its report. Never panics on bad input.
pub fn run_command(argv: &[String]) -> CommandReport {
    let cli = match Cli::try_parse_from(std::iter::once("finprime".to_string()).chain(argv.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let mut r = CommandReport::new("usage");
            r.document = Some(e.render().to_string());
            r.exit_code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            return r;
        }
    };
    let name = command_name(&cli.command);
    let mut report = CommandReport::new(name);
    report.json = cli.json;
    if let Err(e) = execute(cli.command, &mut report) {
        report.document = None;
        report.field("error", e.to_string());
        report.exit_code = match e {
            Error::ResourceLimit(_) => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
    }
    report
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Prime { .. } => "prime",
        Command::Decompose { .. } => "decompose",
        Command::Witness { .. } => "witness",
        Command::Oracle { .. } => "oracle",
        Command::Minimize { .. } => "minimize",
        Command::Equiv { .. } => "equiv",
        Command::Factory { .. } => "factory",
        Command::Gadget { .. } => "gadget",
        Command::Dot { .. } => "dot",
        Command::Sweep(_) => "sweep",
    }
}

/// Reads the input files, recording their digest.
fn read_inputs(paths: &[&Path], report: &mut CommandReport) -> finprime::Result<Vec<String>> {
    let mut hasher = Sha256::new();
    let mut texts = Vec::new();
    for p in paths {
        let bytes = fs::read(p).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", p.display())))?;
        hasher.update(&bytes);
        let text = String::from_utf8(bytes)
            .map_err(|_| Error::Precondition(format!("{} is not UTF-8", p.display())))?;
        texts.push(text);
    }
    let hex: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    report.digest = hex[..16].to_string();
    Ok(texts)
}

fn read_dfa(path: &Path, report: &mut CommandReport) -> finprime::Result<Dfa> {
    let text = read_inputs(&[path], report)?.remove(0);
    parse_dfa(&text)
}

fn execute(command: Command, r: &mut CommandReport) -> finprime::Result<()> {
    match command {
        Command::Classify { file } => classify(&read_dfa(&file, r)?, r),
        Command::Prime { mode, file } => {
            let a = read_dfa(&file, r)?;
            let v = decide(&a, mode.decomposition())?;
            r.field("mode", mode.decomposition().as_str());
            r.field("status", v.status.as_str());
            r.field("branch", v.branch.as_str());
            if let Some(w) = &v.witness {
                r.field("witness", format_word(a.alphabet(), w));
            }
            if !v.notes.is_empty() {
                r.field("notes", &v.notes);
            }
            r.exit_code = if v.is_prime() { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(())
        }
        Command::Decompose { mode, out, limits, file } => {
            let a = read_dfa(&file, r)?;
            run_decompose(&a, mode.decomposition(), out.as_deref(), limits, r)
        }
        Command::Witness { word, oracle, file } => {
            let a = read_dfa(&file, r)?;
            run_witness(&a, word.as_deref(), oracle.limits(), r)
        }
        Command::Oracle { oracle, file } => {
            let a = read_dfa(&file, r)?;
            let limits = oracle.limits();
            let mut o = AlphaOracle::new(a.alphabet(), factor_bound_for(&a, limits))?;
            let v = o.primality(&a)?;
            r.field("status", v.status.as_str());
            r.field("branch", v.branch.as_str());
            if let Some(w) = &v.witness {
                r.field("witness", format_word(a.alphabet(), w));
            }
            r.field("languages", o.basis_size());
            r.exit_code = if v.is_prime() { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(())
        }
        Command::Minimize { file } => {
            let a = read_dfa(&file, r)?;
            let name = a.name().to_string();
            r.document = Some(serialize_dfa(&minimize(&a).with_name(&name)));
            Ok(())
        }
        Command::Equiv { left, right } => {
            let texts = read_inputs(&[&left, &right], r)?;
            let a = parse_dfa(&texts[0])?;
            let b = parse_dfa(&texts[1])?;
            match distinguishing_word(&a, &b)? {
                None => r.field("equivalent", true),
                Some(w) => {
                    r.field("equivalent", false);
                    r.field("word", format_word(a.alphabet(), &w));
                    r.exit_code = EXIT_NEGATIVE;
                }
            }
            Ok(())
        }
        Command::Factory { kind, params, alphabet } => {
            let letters: Vec<&str> = alphabet.split_whitespace().collect();
            let alphabet = alphabet_of(&letters);
            let name = std::iter::once(kind.to_possible_value().expect("not skipped").get_name().to_string())
                .chain(params.iter().map(|p| p.replace(' ', ".")))
                .collect::<Vec<_>>()
                .join("_");
            r.document = Some(serialize_dfa(&factory(kind, &params, &alphabet)?.with_name(&name)));
            Ok(())
        }
        Command::Gadget { kind, file } => {
            let text = read_inputs(&[&file], r)?.remove(0);
            let dfa = match kind {
                GadgetKind::Minimality => minimality_gadget(&parse_digraph(&text)?),
                GadgetKind::Sprime => sprime_gadget(&parse_digraph(&text)?),
                GadgetKind::Primefin => primefin_gadget(&parse_dfa(&text)?)?,
                GadgetKind::Prime2 => prime2_gadget(&parse_dfa(&text)?)?,
            };
            r.document = Some(serialize_dfa(&dfa));
            Ok(())
        }
        Command::Dot { file } => {
            r.document = Some(to_dot(&read_dfa(&file, r)?));
            Ok(())
        }
        Command::Sweep(args) => sweep(&args, r),
    }
}

fn classify(a: &Dfa, r: &mut CommandReport) -> finprime::Result<()> {
    r.field("states", a.state_count());
    r.field("index", index_of(a));
    r.field("minimal", is_minimal(a));
    let (empty, _) = is_empty(a);
    r.field("empty", empty);
    r.field("finite", is_finite_language(a));
    let longest = match longest_word_length(a) {
        LongestWord::None => "none".to_string(),
        LongestWord::Finite(n) => n.to_string(),
        LongestWord::Infinite => "inf".to_string(),
    };
    r.field("longest", longest);
    r.field("safety", is_safety(a));
    r.field("cosafety", is_cosafety(a));
    r.field("simple_cosafety", is_simple_cosafety(a));
    if !is_finite_language(a) || empty {
        return Ok(());
    }
    match linear_profile(a)? {
        None => r.field("linear", false),
        Some(p) => {
            r.field("linear", true);
            if let Some(c) = uniform_max_word_letter(&p) {
                r.field("uniform_max_letter", &p.alphabet()[c]);
            }
            if p.n() >= 1 {
                let cep = has_cep(&p)?;
                r.field("cep", cep.holds);
                if let Some(w) = &cep.breaching {
                    r.field("breaching", format_word(a.alphabet(), w));
                }
            }
        }
    }
    Ok(())
}

fn run_decompose(
    a: &Dfa,
    mode: DecompositionMode,
    out: Option<&Path>,
    limits: DecomposeArgs,
    r: &mut CommandReport,
) -> finprime::Result<()> {
    r.field("mode", mode.as_str());
    let v = decide(a, mode)?;
    r.field("status", v.status.as_str());
    if v.is_prime() {
        r.field("branch", v.branch.as_str());
        r.exit_code = EXIT_NEGATIVE;
        return Ok(());
    }
    let limits = DecompositionLimits {
        max_factors: limits.max_factors,
        max_candidates: limits.max_candidates,
    };
    let d = decompose(a, mode, limits)?;
    let check = verify_decomposition(a, &d);
    r.field("bound", d.bound);
    r.field("terms", d.terms.len());
    r.field("factors", d.factor_count());
    r.field("max_factor_size", d.max_factor_size());
    r.field("verified", check.ok);
    if !check.ok {
        r.field("diagnostic", &check.diagnostic);
        return Err(Error::Internal(format!("decomposition failed verification: {}", check.diagnostic)));
    }
    if let Some(dir) = out {
        let io = |e: std::io::Error| Error::Precondition(format!("cannot write {}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        let multi = d.terms.len() > 1;
        let mut manifest = format!("decomposition {}\nbound {}\n", mode.as_str(), d.bound);
        let mut written = 0usize;
        for (j, term) in d.terms.iter().enumerate() {
            let mut names = Vec::new();
            for f in term {
                let name = if multi {
                    format!("t{j}_{}", f.file_name())
                } else {
                    f.file_name()
                };
                fs::write(dir.join(&name), serialize_dfa(&f.dfa)).map_err(io)?;
                written += 1;
                names.push(name);
            }
            manifest.push_str(&format!("term {}\n", names.join(" ")));
        }
        manifest.push_str("end\n");
        fs::write(dir.join("decomposition.txt"), manifest).map_err(io)?;
        r.field("files", written);
    }
    Ok(())
}

fn run_witness(a: &Dfa, word: Option<&str>, limits: OracleLimits, r: &mut CommandReport) -> finprime::Result<()> {
    let w = match word {
        Some(text) => parse_word(a.alphabet(), text)?,
        None => {
            let v = decide(a, DecompositionMode::Intersection)?;
            r.field("status", v.status.as_str());
            match v.witness {
                Some(w) => w,
                None => {
                    r.exit_code = EXIT_NEGATIVE;
                    return Ok(());
                }
            }
        }
    };
    r.field("witness", format_word(a.alphabet(), &w));
    let mut o = AlphaOracle::new(a.alphabet(), factor_bound_for(a, limits))?;
    let valid = o.verify_witness(a, &w)?;
    r.field("valid", valid);
    if !valid {
        r.exit_code = EXIT_NEGATIVE;
    }
    Ok(())
}

/// Narrows the oracle factor bound to what the index of `a` needs.
fn factor_bound_for(a: &Dfa, limits: OracleLimits) -> OracleLimits {
    let need = index_of(a).saturating_sub(1).max(1);
    OracleLimits {
        max_factor_states: if need <= limits.max_factor_states { need } else { limits.max_factor_states },
        ..limits
    }
}

fn factory(kind: FactoryKind, params: &[String], alphabet: &[String]) -> finprime::Result<Dfa> {
    let number = |i: usize| -> finprime::Result<usize> {
        params
            .get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Precondition(format!("parameter {} must be a number", i + 1)))
    };
    let word = || parse_word(alphabet, &params.join(" "));
    match kind {
        FactoryKind::ModCounter => mod_counter_dfa(number(0)?),
        FactoryKind::Singleton => singleton_dfa(&word()?, alphabet),
        FactoryKind::LengthCap => length_cap_dfa(number(0)?, alphabet),
        FactoryKind::StarWord => star_word_dfa(&word()?, alphabet),
        FactoryKind::LetterCount => {
            let letter = params
                .first()
                .and_then(|s| alphabet.iter().position(|l| l == s))
                .ok_or_else(|| Error::Precondition("first parameter must be a letter".into()))?;
            letter_count_dfa(letter, number(1)?, alphabet)
        }
    }
}

/// Largest factor bound whose enumeration fits the cap.
fn affordable_bound(letters: usize, limits: OracleLimits) -> usize {
    let mut total = 0u64;
    let mut bound = 0;
    for k in 1..=limits.max_factor_states {
        total = total.saturating_add(dfa_count(k, letters).unwrap_or(u64::MAX));
        if total > limits.max_enumerated_dfas {
            break;
        }
        bound = k;
    }
    bound
}

fn sweep(args: &SweepArgs, r: &mut CommandReport) -> finprime::Result<()> {
    if args.letters == 0 || args.letters > 10 {
        return Err(Error::Precondition("--letters must be between 1 and 10".into()));
    }
    let symbols: Vec<String> = (0..args.letters).map(|i| i.to_string()).collect();
    let alphabet = symbols;
    let limits = args.oracle.limits();
    let affordable = affordable_bound(args.letters, limits);
    if affordable == 0 {
        return Err(Error::ResourceLimit("the oracle cap admits no factor size".into()));
    }
    let (family, instances) = match args.random {
        None => {
            if args.index > affordable + 1 {
                return Err(Error::ResourceLimit(format!(
                    "index {} needs factors with {} states; the oracle affords {affordable}",
                    args.index,
                    args.index - 1
                )));
            }
            (format!("minimal-adfa index<={}", args.index), minimal_adfas(args.index, &alphabet)?)
        }
        Some(count) => {
            let mut rng = seeded(args.seed);
            let mut out = Vec::with_capacity(count);
            while out.len() < count {
                let states = 2 + (out.len() % (args.max_n + 1));
                let a = minimize(&random_adfa(&mut rng, states + 1, &alphabet, 0.5));
                if !is_empty(&a).0 {
                    out.push(a);
                }
            }
            (format!("random seed={} n<={}", args.seed, args.max_n), out)
        }
    };
    let needed = instances.iter().map(|a| index_of(a) - 1).max().unwrap_or(1).max(1);
    let bound = needed.min(affordable);
    let oracle_limits = OracleLimits {
        max_factor_states: bound,
        ..limits
    };
    let mut oracle = AlphaOracle::new(&alphabet, oracle_limits)?;
    let (mut prime, mut composite, mut skipped, mut disagreements) = (0usize, 0usize, 0usize, 0usize);
    let mut first = None;
    for (i, a) in instances.iter().enumerate() {
        if index_of(a) - 1 > bound {
            skipped += 1;
            continue;
        }
        let mut fast = decide(a, DecompositionMode::Intersection)?;
        if args.mutant && matches!(fast.branch, Branch::Cep | Branch::SafetyNoCep) {
            fast.status = match fast.status {
                Status::Prime => Status::Composite,
                Status::Composite => Status::Prime,
            };
        }
        let slow = oracle.primality(a)?;
        match slow.status {
            Status::Prime => prime += 1,
            Status::Composite => composite += 1,
        }
        if fast.status != slow.status {
            disagreements += 1;
            first.get_or_insert(i);
        }
    }
    r.field("family", family);
    r.field("alphabet", alphabet.join(" "));
    r.field("factor_bound", bound);
    r.field("instances", instances.len() - skipped);
    r.field("skipped", skipped);
    r.field("prime", prime);
    r.field("composite", composite);
    r.field("disagreements", disagreements);
    if let Some(i) = first {
        r.field("first_disagreement", i);
        r.exit_code = EXIT_NEGATIVE;
    }
    Ok(())
}
