use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qseries::dsl::eval_str;
use qseries::forms::reduced_forms;
use qseries::registry::{
    find, load_records, registry_list, verify_all, IdentityRecord, VerificationReport, VerifyStatus,
};
use qseries::Rat;
use serde_json::json;

/// `println!` that ignores a closed stdout, so piping into `head` is quiet
/// and the exit code still reflects the verification outcome.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "qrr",
    version,
    about = "Exact q-series evaluation and identity checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the built-in identity catalogue.
    List,
    /// Check identities to a finite order.
    Verify(VerifyArgs),
    /// Expand an expression and print its coefficients.
    Eval {
        expr: String,
        #[arg(long, value_parser = parse_order)]
        order: Rat,
        #[arg(long)]
        json: bool,
    },
    /// List reduced binary quadratic forms of a discriminant.
    Forms {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        #[arg(long)]
        primitive_only: bool,
        /// Keep one form of each (a, ±b, c) pair.
        #[arg(long)]
        representatives: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check; may be repeated.
    #[arg(long = "identity", value_name = "NAME")]
    identities: Vec<String>,
    /// Check every built-in identity.
    #[arg(long)]
    all: bool,
    /// Order to use instead of each record's default.
    #[arg(long, value_parser = parse_order)]
    order: Option<Rat>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Also check identities read from a file of `name | order | lhs | rhs` lines.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

fn parse_order(s: &str) -> Result<Rat, String> {
    let r: Rat = s
        .parse()
        .map_err(|_| format!("'{s}' is not a rational number"))?;
    if r <= Rat::from_integer(0) {
        return Err(format!("order must be positive, got {r}"));
    }
    Ok(r)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("qrr: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List => {
            for r in registry_list() {
                out!("{}\t{}\t{}", r.name, r.status, r.description);
            }
            ExitCode::SUCCESS
        }
        Command::Verify(args) => verify(args),
        Command::Eval { expr, order, json } => eval(&expr, order, json),
        Command::Forms {
            disc,
            primitive_only,
            representatives,
        } => forms(disc, primitive_only, representatives),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    if args.jobs == 0 {
        return usage("--jobs must be at least 1");
    }
    let mut records: Vec<IdentityRecord> = if args.all {
        registry_list()
    } else {
        let mut out = Vec::new();
        for name in &args.identities {
            match find(name) {
                Some(r) => out.push(r),
                None => return usage(format!("unknown identity '{name}'")),
            }
        }
        out
    };
    if let Some(path) = &args.file {
        match load_records(path) {
            Ok(extra) => records.extend(extra),
            Err(e) => return usage(e),
        }
    }
    if records.is_empty() {
        return usage("nothing to verify; pass --identity NAME, --all or --file PATH");
    }
    let reports = match verify_all(&records, args.order, args.jobs) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if args.json {
        out!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    } else {
        for r in &reports {
            print_report(r);
        }
        let passed = reports.iter().filter(|r| r.passed()).count();
        out!("{passed}/{} passed", reports.len());
    }
    if reports.iter().any(|r| r.status == VerifyStatus::Error) {
        ExitCode::from(2)
    } else if reports.iter().any(|r| r.status == VerifyStatus::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_report(r: &VerificationReport) {
    match r.status {
        VerifyStatus::Pass => out!(
            "PASS  {} to O(q^{}) in {} ms",
            r.identity, r.order, r.millis
        ),
        VerifyStatus::Fail => {
            let m = r.first_mismatch.as_ref().expect("fail carries a mismatch");
            out!(
                "FAIL  {} at q^{}: lhs {} rhs {}",
                r.identity, m.exponent, m.lhs, m.rhs
            );
        }
        VerifyStatus::Error => out!(
            "ERROR {}: {}",
            r.identity,
            r.message.as_deref().unwrap_or("evaluation failed")
        ),
    }
}

fn eval(expr: &str, order: Rat, as_json: bool) -> ExitCode {
    let series = match eval_str(expr, order) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    if as_json {
        let terms: Vec<_> = series
            .terms()
            .map(|(e, c)| json!({"exponent": e.to_string(), "coefficient": c.to_string()}))
            .collect();
        let doc = json!({"precision": series.precision().to_string(), "terms": terms});
        out!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        for (e, c) in series.terms() {
            out!("{e}\t{c}");
        }
    }
    ExitCode::SUCCESS
}

fn forms(disc: i64, primitive_only: bool, representatives: bool) -> ExitCode {
    let reduced = match reduced_forms(disc) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let list = if representatives {
        &reduced.representatives
    } else {
        &reduced.forms
    };
    for f in list.iter().filter(|f| f.primitive || !primitive_only) {
        let tag = if f.primitive {
            "primitive"
        } else {
            "imprimitive"
        };
        out!("{}\t{tag}", f.form);
    }
    ExitCode::SUCCESS
}
