//! The `dyck` command line.
//!
//! [`run`] holds the whole program so tests can drive it in-process; the
//! binary only wires it to the real standard streams.
//!
//! Exit codes: `0` success, `1` invalid word or point set, `2` usage error.

pub mod format;
pub mod render;

use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dyck::enumerate::{catalan, enumerate};
use dyck::grid::{encode_peak_set, peaks_modified, valleys_modified};
use dyck::reconstruct::{validate_peak_set, validate_valley_set, PeakSet, ValleySet};
use dyck::{parse_word, Alphabet, DyckWord, LatticePoint};

use crate::format::{
    format_modified_set, format_point_set, json_modified, json_points, parse_point_set,
    OutputEnvelope,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dyck",
    version,
    about = "Validate, factorize and rebuild Dyck paths",
    after_help = "Words use `u` for an up step and `d` for a down step unless --alphabet says \
                  otherwise. Point sets are written `x1,y1;x2,y2;...`. Pass `-` in place of a \
                  word or point set to read it from stdin.\n\n\
                  encode pairs each condensed peak (xm, y) with the Cantor function \
                  (xm + y)(xm + y + 1)/2 + y."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a word is a Dyck word and print its semilength
    Validate(WordArgs),
    /// Split a word into prime fragments
    Factorize(WordArgs),
    /// Print the peaks of a word
    Peaks(WordArgs),
    /// Print the valleys of a word
    Valleys {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        terminal: TerminalArg,
    },
    /// Print peaks or valleys in condensed coordinates (xm = (x - y) / 2)
    Modify {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, value_enum, default_value_t = What::Peaks)]
        what: What,
        #[command(flatten)]
        terminal: TerminalArg,
    },
    /// Print the Cantor codes of the condensed peaks
    Encode(WordArgs),
    /// Rebuild a word from its peak set
    FromPeaks(PointArgs),
    /// Rebuild a word from its valley set (end point included, origin omitted)
    FromValleys(PointArgs),
    /// List every Dyck word of semilength N in lexicographic order (u before d)
    Enumerate {
        n: usize,
        /// Stop after this many words
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value = "ud", value_parser = parse_alphabet)]
        alphabet: Alphabet,
    },
    /// Print the Catalan number C(N), the count of Dyck words of semilength N
    Count { n: u32 },
    /// Draw a word as ASCII art
    Render(WordArgs),
}

#[derive(Debug, Args)]
struct WordArgs {
    /// The word, or `-` to read it from stdin
    word: String,
    /// Two characters standing for up and down, e.g. `ud` or `()`
    #[arg(long, default_value = "ud", value_parser = parse_alphabet)]
    alphabet: Alphabet,
    /// Emit a JSON object instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PointArgs {
    /// The point set, or `-` to read it from stdin
    points: String,
    /// Alphabet for the printed word
    #[arg(long, default_value = "ud", value_parser = parse_alphabet)]
    alphabet: Alphabet,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct TerminalArg {
    /// Include the end point (2n, 0) among the valleys
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    terminal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Peaks,
    Valleys,
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    s.parse().map_err(|e: dyck::AlphabetError| e.to_string())
}

/// Failure of a command: message for stderr plus exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // a closed pipe (`dyck enumerate 12 | head`) is not an error
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_INVALID,
            message: format!("i/o error: {e}"),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    /// Resolves a `-` argument to the trimmed contents of stdin.
    fn input(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        let mut buf = String::new();
        self.stdin.read_to_string(&mut buf)?;
        Ok(buf.trim().to_string())
    }

    fn word(&mut self, args: &WordArgs) -> Result<DyckWord, Failure> {
        let text = self.input(&args.word)?;
        parse_word(&text, &args.alphabet)
            .map_err(|e| Failure::invalid(format!("invalid word: {e}")))
    }

    fn points(&mut self, args: &PointArgs) -> Result<Vec<LatticePoint>, Failure> {
        let text = self.input(&args.points)?;
        parse_point_set(&text).map_err(|e| Failure::invalid(format!("invalid point set: {e}")))
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut io = Io { stdin, out };
    match execute(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                let _ = writeln!(err, "{message}");
            }
            code
        }
    }
}

fn envelope(word: &DyckWord, alphabet: &Alphabet) -> OutputEnvelope {
    OutputEnvelope {
        word: Some(word.to_string_with(alphabet)),
        semilength: Some(word.semilength()),
        ..Default::default()
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<(), Failure> {
    match command {
        Command::Validate(args) => {
            let w = io.word(&args)?;
            if args.json {
                writeln!(io.out, "{}", envelope(&w, &args.alphabet).to_json())?;
            } else {
                writeln!(io.out, "ok: semilength {}", w.semilength())?;
            }
        }
        Command::Factorize(args) => {
            let w = io.word(&args)?;
            let fragments: Vec<String> = w
                .factorize()
                .iter()
                .map(|f| f.steps().map(|s| args.alphabet.symbol(s)).collect())
                .collect();
            if args.json {
                let env = OutputEnvelope {
                    peaks: Some(json_points(&w.peaks())),
                    fragments: Some(fragments),
                    ..envelope(&w, &args.alphabet)
                };
                writeln!(io.out, "{}", env.to_json())?;
            } else {
                writeln!(io.out, "{}", fragments.join("-"))?;
            }
        }
        Command::Peaks(args) => {
            let w = io.word(&args)?;
            let peaks = w.peaks();
            if args.json {
                let env = OutputEnvelope {
                    peaks: Some(json_points(&peaks)),
                    ..envelope(&w, &args.alphabet)
                };
                writeln!(io.out, "{}", env.to_json())?;
            } else {
                writeln!(io.out, "{}", format_point_set(&peaks))?;
            }
        }
        Command::Valleys {
            word: args,
            terminal,
        } => {
            let w = io.word(&args)?;
            let valleys = w.valleys(terminal.terminal);
            if args.json {
                let env = OutputEnvelope {
                    valleys: Some(json_points(&valleys)),
                    ..envelope(&w, &args.alphabet)
                };
                writeln!(io.out, "{}", env.to_json())?;
            } else {
                writeln!(io.out, "{}", format_point_set(&valleys))?;
            }
        }
        Command::Modify {
            word: args,
            what,
            terminal,
        } => {
            let w = io.word(&args)?;
            let points = match what {
                What::Peaks => peaks_modified(&w),
                What::Valleys => valleys_modified(&w, terminal.terminal),
            };
            if args.json {
                let env = OutputEnvelope {
                    modified: Some(json_modified(&points)),
                    ..envelope(&w, &args.alphabet)
                };
                writeln!(io.out, "{}", env.to_json())?;
            } else {
                writeln!(io.out, "{}", format_modified_set(&points))?;
            }
        }
        Command::Encode(args) => {
            let w = io.word(&args)?;
            let codes = encode_peak_set(&w).map_err(|e| Failure::invalid(e.to_string()))?;
            if args.json {
                let env = OutputEnvelope {
                    modified: Some(json_modified(&peaks_modified(&w))),
                    codes: Some(codes),
                    ..envelope(&w, &args.alphabet)
                };
                writeln!(io.out, "{}", env.to_json())?;
            } else {
                let text: Vec<String> = codes.iter().map(u64::to_string).collect();
                writeln!(io.out, "{}", text.join(","))?;
            }
        }
        Command::FromPeaks(args) => {
            let points = io.points(&args)?;
            let report = validate_peak_set(&points);
            if !report.is_valid() {
                return Err(Failure::invalid(report.to_string()));
            }
            let set = PeakSet::new(points).expect("validated above");
            let w = set.to_word().map_err(|e| Failure::invalid(e.to_string()))?;
            emit_rebuilt(io, &w, &args)?;
        }
        Command::FromValleys(args) => {
            let points = io.points(&args)?;
            let report = validate_valley_set(&points);
            if !report.is_valid() {
                return Err(Failure::invalid(report.to_string()));
            }
            let set = ValleySet::new(points).expect("validated above");
            let w = set.to_word().map_err(|e| Failure::invalid(e.to_string()))?;
            emit_rebuilt(io, &w, &args)?;
        }
        Command::Enumerate { n, limit, alphabet } => {
            let words = enumerate(n).map_err(|e| Failure::invalid(e.to_string()))?;
            for w in words.take(limit.unwrap_or(usize::MAX)) {
                writeln!(io.out, "{}", w.to_string_with(&alphabet))?;
            }
        }
        Command::Count { n } => writeln!(io.out, "{}", catalan(n))?,
        Command::Render(args) => {
            let w = io.word(&args)?;
            write!(io.out, "{}", render::render(&w))?;
        }
    }
    Ok(())
}

fn emit_rebuilt(io: &mut Io<'_>, w: &DyckWord, args: &PointArgs) -> Result<(), Failure> {
    if args.json {
        let env = OutputEnvelope {
            peaks: Some(json_points(&w.peaks())),
            valleys: Some(json_points(&w.valleys(true))),
            ..envelope(w, &args.alphabet)
        };
        writeln!(io.out, "{}", env.to_json())?;
    } else {
        writeln!(io.out, "{}", w.to_string_with(&args.alphabet))?;
    }
    Ok(())
}
