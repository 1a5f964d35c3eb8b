mod build;
mod fail;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use algcode::{CodeFile, FieldSpec, LinearCode, SyndromeTable};
use clap::{Args, Parser, Subcommand};

use crate::build::BuildArgs;
use crate::fail::{Fail, Outcome};

/// Build, inspect and use linear codes over finite fields.
#[derive(Parser, Debug)]
#[command(name = "algcode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code from a named family and write its code file.
    Build(Box<BuildArgs>),
    /// Print length, dimension, rate, alphabet and dual parameters.
    Info {
        #[command(flatten)]
        input: Input,
        /// Also compute the minimum weight by exhaustive search.
        #[arg(long)]
        minweight: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Encode a message of length k as message * G.
    Encode {
        #[command(flatten)]
        input: Input,
        /// Comma-separated message symbols.
        #[arg(long)]
        message: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Correct a received word by syndrome decoding.
    Decode {
        #[command(flatten)]
        input: Input,
        /// Comma-separated received symbols.
        #[arg(long)]
        received: String,
        /// Minimum distance to design the decoder for (computed if omitted).
        #[arg(long)]
        distance: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
    /// Write the dual code.
    Dual {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Write the code shortened at the given coordinates.
    Shorten {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 0-based coordinates.
        #[arg(long)]
        positions: String,
        #[command(flatten)]
        output: Output,
    },
    /// Recover one erased symbol of a locally recoverable code.
    Recover {
        #[command(flatten)]
        input: Input,
        /// The word; the erased entry may be written as `?`.
        #[arg(long)]
        word: String,
        /// 0-based erased coordinate.
        #[arg(long)]
        erase: usize,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Code file to read.
    #[arg(long)]
    code: PathBuf,
}

#[derive(Args, Debug)]
pub(crate) struct Output {
    /// Write to this path instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Input {
    fn load(&self) -> Outcome<CodeFile> {
        let text = fs::read_to_string(&self.code)
            .map_err(|e| Fail::Parse(format!("cannot read {}: {e}", self.code.display())))?;
        CodeFile::parse(&text).map_err(|e| Fail::Parse(format!("{}: {e}", self.code.display())))
    }
}

impl Output {
    pub(crate) fn write(&self, text: &str) -> Outcome<()> {
        match &self.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| Fail::Constraint(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

/// Parses `1,0,a+1` style vectors. Tokens are decimal reps or rendered
/// elements; `?` is accepted where `allow_erasure` is set and read as 0.
fn parse_vector(field: &FieldSpec, s: &str, allow_erasure: bool) -> Outcome<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            if allow_erasure && t == "?" {
                return Ok(0);
            }
            field
                .parse_token(t)
                .map_err(|e| Fail::Parse(format!("bad symbol `{t}`: {e}")))
        })
        .collect()
}

fn format_vector(field: &FieldSpec, v: &[u32], pretty: bool) -> String {
    v.iter()
        .map(|&x| {
            if pretty {
                field.render(x)
            } else {
                x.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn check_len(what: &str, v: &[u32], expected: usize) -> Outcome<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Fail::Constraint(format!(
            "{what} has length {}, expected {expected}",
            v.len()
        )))
    }
}

fn info(file: &CodeFile, minweight: bool, pretty: bool) -> Outcome<String> {
    let c = file.code();
    let f = c.field();
    let alphabet: Vec<u32> = f.element_reps();
    let dual = c.dual();
    let mut out = format!("n={} k={} rate={}\n", c.length(), c.dimension(), rate(c));
    out.push_str(&format!("field={f}\n"));
    out.push_str(&format!(
        "alphabet={}\n",
        format_vector(f, &alphabet, pretty)
    ));
    out.push_str(&format!(
        "dual n={} k={} rate={}\n",
        dual.length(),
        dual.dimension(),
        rate(&dual)
    ));
    if minweight {
        match c.minimum_weight() {
            Ok(d) => out.push_str(&format!("d={d}\n")),
            Err(algcode::Error::ZeroCode) => out.push_str("d=none\n"),
            Err(e) => return Err(e.into()),
        }
    }
    if pretty {
        out.push_str(&format!("{c}\n"));
    }
    Ok(out)
}

fn rate(c: &LinearCode) -> String {
    let r = c.rate();
    format!("{}/{}", r.numer(), r.denom())
}

fn run(cli: Cli) -> Outcome<()> {
    match cli.command {
        Command::Build(args) => {
            let file = build::build(&args)?;
            args.output.write(&file.to_text())
        }
        Command::Info {
            input,
            minweight,
            pretty,
        } => {
            print!("{}", info(&input.load()?, minweight, pretty)?);
            Ok(())
        }
        Command::Encode {
            input,
            message,
            pretty,
        } => {
            let file = input.load()?;
            let c = file.code();
            let m = parse_vector(c.field(), &message, false)?;
            check_len("message", &m, c.dimension())?;
            println!("{}", format_vector(c.field(), &c.encode(&m)?, pretty));
            Ok(())
        }
        Command::Decode {
            input,
            received,
            distance,
            pretty,
        } => {
            let file = input.load()?;
            let c = file.code();
            let v = parse_vector(c.field(), &received, false)?;
            check_len("received word", &v, c.length())?;
            let d = match distance {
                Some(d) => d,
                None => c.minimum_weight()?,
            };
            let table = SyndromeTable::new(c, d)?;
            println!("{}", format_vector(c.field(), &table.decode(&v)?, pretty));
            Ok(())
        }
        Command::Dual { input, output } => {
            let dual = input.load()?.code().dual();
            output.write(&CodeFile::from(dual).to_text())
        }
        Command::Shorten {
            input,
            positions,
            output,
        } => {
            let file = input.load()?;
            let pos = positions
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Fail::Parse(format!("bad position `{t}`")))
                })
                .collect::<Outcome<Vec<_>>>()?;
            output.write(&CodeFile::from(file.code().shorten(&pos)?).to_text())
        }
        Command::Recover {
            input,
            word,
            erase,
            pretty,
        } => {
            let CodeFile::Lrc(lrc) = input.load()? else {
                return Err(Fail::Constraint(
                    "recover needs a locally recoverable code file".into(),
                ));
            };
            let w = parse_vector(lrc.field(), &word, true)?;
            check_len("word", &w, lrc.linear_code().length())?;
            let x = lrc.local_recover(&w, erase)?;
            println!(
                "{}",
                if pretty {
                    lrc.field().render(x)
                } else {
                    x.to_string()
                }
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(fail) => {
            eprintln!("error: {fail}");
            ExitCode::from(fail.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors() {
        let f4 = FieldSpec::from_order(4).unwrap();
        assert_eq!(
            parse_vector(&f4, "0, a, a+1,1", false).unwrap(),
            vec![0, 2, 3, 1]
        );
        assert_eq!(parse_vector(&f4, "?,3", true).unwrap(), vec![0, 3]);
        assert!(parse_vector(&f4, "?,3", false).is_err());
        assert!(parse_vector(&f4, "4", false).is_err());
        assert_eq!(parse_vector(&f4, "", false).unwrap(), Vec::<u32>::new());
        assert_eq!(format_vector(&f4, &[0, 2, 3], true), "0,a,a+1");
        assert_eq!(format_vector(&f4, &[0, 2, 3], false), "0,2,3");
    }

    #[test]
    fn error_mapping() {
        assert_eq!(Fail::from(algcode::Error::Uncorrectable(1)).exit_code(), 3);
        assert_eq!(Fail::from(algcode::Error::Parse("x".into())).exit_code(), 2);
        assert_eq!(Fail::from(algcode::Error::ZeroCode).exit_code(), 4);
    }
}
