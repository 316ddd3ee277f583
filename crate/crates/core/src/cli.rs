//! Command dispatch for the `ostar` binary.
//!
//! [`run`] takes the full argument vector and returns the exit code together
//! with the text destined for stdout and stderr, so the whole surface can be
//! exercised without spawning processes.

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{AlgebraElement, Index};
use crate::bialgebra::{
    check_coassociativity, check_counit_laws, counit, delta, delta_h, phi, wcs_sides, TensorElement,
};
use crate::classifier::{classify_predicate, decompose, lattice_iso_check, quotient_morphism_check, ComponentPredicate};
use crate::error::{Error, Result};
use crate::expr::{parse_element, render_element, render_tensor};
use crate::monoid::{submonoid_member, PrimeSet, SubmonoidView, SubsetWindow};
use crate::serial::{scalar_fields, serialize_element, serialize_tensor};
use crate::suite::{run_suites, Model, Mutation, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(name = "ostar", version, about = "Exact computation in the Cuntz bialgebra O_*")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SetArgs {
    /// Prime set F as a comma-separated list, e.g. `2,3`.
    #[arg(long, conflicts_with = "set")]
    primes: Option<String>,
    /// Set specification: `primes:2,3`, `coprimes:2` or `list:4,16,64`.
    #[arg(long)]
    set: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form of an expression.
    Norm { expr: String },
    /// Exact equality of two expressions.
    Eq { lhs: String, rhs: String },
    /// Comultiplication.
    Delta { expr: String },
    /// Comultiplication restricted to a submonoid H.
    #[command(name = "deltaH")]
    DeltaH {
        expr: String,
        /// H = [F] for the listed primes.
        #[arg(long, conflicts_with_all = ["primes_powers", "set"])]
        primes: Option<String>,
        /// H = {k^l : l >= 0}.
        #[arg(long, conflicts_with = "set")]
        primes_powers: Option<u64>,
        /// H = [F] via `primes:` or `coprimes:`.
        #[arg(long)]
        set: Option<String>,
    },
    /// Counit.
    Eps { expr: String },
    /// Coassociativity check.
    Coassoc { expr: String },
    /// Both counit laws.
    Counitlaws { expr: String },
    /// The weak coassociativity square for (a, b, c).
    Wcs { a: Index, b: Index, c: Index, expr: String },
    /// The embedding O_{nm} -> O_n ⊗ O_m.
    Phi { n: Index, m: Index, expr: String },
    /// Classify the summand O_*(S).
    Classify {
        /// `primes:..`, `coprimes:..` or `list:..`.
        #[arg(long)]
        set: String,
        /// Window for `list:` sets.
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Membership of n in [F].
    Member {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        n: u64,
    },
    /// Split x into its A(F) and I(F) parts.
    Decompose {
        #[command(flatten)]
        set: SetArgs,
        expr: String,
    },
    /// Check that the projection onto A(F) is a bialgebra morphism at (x, y).
    Quotient {
        #[command(flatten)]
        set: SetArgs,
        x: String,
        y: String,
    },
    /// Compare the lattice operations on [F], [G] with those on F, G.
    Lattice {
        /// F as `primes:..` or `coprimes:..`.
        f: String,
        /// G as `primes:..` or `coprimes:..`.
        g: String,
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Run the property suites.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        bound: u64,
        #[arg(long, default_value_t = 24)]
        max_component: Index,
        #[arg(long, default_value_t = 3)]
        max_word_len: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Run only the named suites.
        #[arg(long = "only", value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, hide = true)]
        mutation: Option<String>,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        Outcome { code: if holds { EXIT_OK } else { EXIT_PROPERTY }, stdout, stderr: String::new() }
    }
}

fn parse_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::SetSpec(format!("`{s}` is not a natural number"))))
        .collect()
}

fn parse_prime_spec(spec: &str) -> Result<PrimeSet> {
    match spec.split_once(':') {
        Some(("primes", rest)) => PrimeSet::finite(parse_list(rest)?),
        Some(("coprimes", rest)) => PrimeSet::cofinite(parse_list(rest)?),
        _ => Err(Error::SetSpec(format!("expected `primes:..` or `coprimes:..`, got `{spec}`"))),
    }
}

fn parse_predicate(spec: &str, bound: u64) -> Result<ComponentPredicate> {
    match spec.split_once(':') {
        Some(("list", rest)) => Ok(ComponentPredicate::Window(SubsetWindow::new(bound, parse_list(rest)?)?)),
        _ => Ok(ComponentPredicate::Generated(parse_prime_spec(spec)?)),
    }
}

impl SetArgs {
    fn prime_set(&self) -> Result<PrimeSet> {
        match (&self.primes, &self.set) {
            (Some(p), None) => PrimeSet::finite(parse_list(p)?),
            (None, Some(s)) => parse_prime_spec(s),
            _ => Err(Error::SetSpec("one of --primes or --set is required".into())),
        }
    }
}

fn tensor_out(format: Format, u: &TensorElement) -> String {
    match format {
        Format::Text => format!("{}\n", render_tensor(u)),
        Format::Machine => serialize_tensor(&u.canonical_form()),
    }
}

fn element_out(format: Format, x: &AlgebraElement) -> String {
    match format {
        Format::Text => format!("{}\n", render_element(x)),
        Format::Machine => serialize_element(&x.canonical_form()),
    }
}

fn bool_out(b: bool) -> String {
    format!("{b}\n")
}

fn dispatch(format: Format, command: Command) -> Result<Outcome> {
    Ok(match command {
        Command::Norm { expr } => Outcome::ok(element_out(format, &parse_element(&expr)?)),
        Command::Eq { lhs, rhs } => Outcome::ok(bool_out(parse_element(&lhs)?.equals(&parse_element(&rhs)?))),
        Command::Delta { expr } => Outcome::ok(tensor_out(format, &delta(&parse_element(&expr)?))),
        Command::DeltaH { expr, primes, primes_powers, set } => {
            let h = match (primes, primes_powers, set) {
                (Some(p), None, None) => SubmonoidView::generated(PrimeSet::finite(parse_list(&p)?)?),
                (None, Some(k), None) => SubmonoidView::PowersOf(k),
                (None, None, Some(s)) => SubmonoidView::generated(parse_prime_spec(&s)?),
                _ => return Err(Error::SetSpec("one of --primes, --primes-powers or --set is required".into())),
            };
            Outcome::ok(tensor_out(format, &delta_h(&h, &parse_element(&expr)?)?))
        }
        Command::Eps { expr } => {
            let e = counit(&parse_element(&expr)?);
            Outcome::ok(match format {
                Format::Text => format!("{e}\n"),
                Format::Machine => format!("{}\n", scalar_fields(&e)),
            })
        }
        Command::Coassoc { expr } => {
            let holds = check_coassociativity(&parse_element(&expr)?);
            Outcome::verdict(holds, bool_out(holds))
        }
        Command::Counitlaws { expr } => {
            let holds = check_counit_laws(&parse_element(&expr)?);
            Outcome::verdict(holds, bool_out(holds))
        }
        Command::Wcs { a, b, c, expr } => {
            let (left, right) = wcs_sides(a, b, c, &parse_element(&expr)?)?;
            let holds = left.equals(&right);
            let out = match format {
                Format::Text => format!("{holds}\n{}\n{}\n", render_tensor(&left), render_tensor(&right)),
                Format::Machine => bool_out(holds),
            };
            Outcome::verdict(holds, out)
        }
        Command::Phi { n, m, expr } => Outcome::ok(tensor_out(format, &phi(n, m, &parse_element(&expr)?)?)),
        Command::Classify { set, bound } => {
            let c = classify_predicate(&parse_predicate(&set, bound)?);
            let witness = c.witness.map(|w| w.to_string());
            let out = match format {
                Format::Text => {
                    let mut s = format!("{}\n", c.verdict);
                    if let Some(w) = &witness {
                        s.push_str(&format!("witness: {w}\n"));
                    }
                    if c.window_relative {
                        s.push_str(&format!("window: 1..{bound}\n"));
                    }
                    s
                }
                Format::Machine => {
                    let triple = c.witness.map(|w| w.triple()).map(|(n, m, l)| format!("{n},{m},{l}"));
                    let scope = if c.window_relative { format!("window:{bound}") } else { "global".into() };
                    format!("{} | {} | {scope}\n", c.verdict, triple.as_deref().unwrap_or("-"))
                }
            };
            Outcome::ok(out)
        }
        Command::Member { set, n } => {
            let h = SubmonoidView::generated(set.prime_set()?);
            Outcome::ok(bool_out(submonoid_member(&h, n)?))
        }
        Command::Decompose { set, expr } => {
            let d = decompose(&parse_element(&expr)?, &set.prime_set()?);
            let (b, i) = (&d.subbialgebra_part, &d.biideal_part);
            Outcome::ok(match format {
                Format::Text => format!("b = {}\ni = {}\n", render_element(b), render_element(i)),
                Format::Machine => format!(
                    "# b\n{}# i\n{}",
                    serialize_element(&b.canonical_form()),
                    serialize_element(&i.canonical_form())
                ),
            })
        }
        Command::Quotient { set, x, y } => {
            let holds = quotient_morphism_check(&set.prime_set()?, &parse_element(&x)?, &parse_element(&y)?);
            Outcome::verdict(holds, bool_out(holds))
        }
        Command::Lattice { f, g, bound } => {
            let (f, g) = (parse_prime_spec(&f)?, parse_prime_spec(&g)?);
            let r = lattice_iso_check(&f, &g, bound);
            let sep = r.separation_witness.map_or("-".to_string(), |p| p.to_string());
            let out = match format {
                Format::Text => {
                    let mut s = format!(
                        "meet: {}\njoin: {}\norder: {}\nseparation: {} (witness {sep})\n",
                        r.meet_ok, r.join_ok, r.order_ok, r.separation_ok
                    );
                    for line in &r.failures {
                        s.push_str(&format!("failure: {line}\n"));
                    }
                    s
                }
                Format::Machine => {
                    format!("{} | {} | {} | {} | {sep}\n", r.meet_ok, r.join_ok, r.order_ok, r.separation_ok)
                }
            };
            Outcome::verdict(r.passed(), out)
        }
        Command::Suite { seed, bound, max_component, max_word_len, samples, only, mutation } => {
            let cfg = SuiteConfig { seed, bound, max_component, max_word_len, sample_count: samples };
            let model = Model::new(mutation.as_deref().map(str::parse::<Mutation>).transpose()?);
            let only: Vec<&str> = only.iter().map(String::as_str).collect();
            let report = run_suites(&cfg, &model, &only)?;
            let stdout = match format {
                Format::Text => report.render_text(),
                Format::Machine => report.render_machine(),
            };
            let code = if report.passed() { EXIT_OK } else { EXIT_PROPERTY };
            Outcome { code, stdout, stderr: report.render_timings() }
        }
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.format, cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ostar(args: &[&str]) -> Outcome {
        run(std::iter::once("ostar").chain(args.iter().copied()))
    }

    #[test]
    fn member_example() {
        let out = ostar(&["member", "--primes", "2,3", "--n", "10"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "false\n"));
        assert_eq!(ostar(&["member", "--set", "coprimes:5", "--n", "12"]).stdout, "true\n");
    }

    #[test]
    fn classify_powers_of_four() {
        let out = ostar(&["classify", "--set", "list:1,4,16,64", "--bound", "100"]);
        assert_eq!(out.stdout, "none\nwitness: (4,2,2) missing divisor\nwindow: 1..100\n");
        let out = ostar(&["--format", "machine", "classify", "--set", "list:1,4,16,64", "--bound", "100"]);
        assert_eq!(out.stdout, "none | 4,2,2 | window:100\n");
        assert_eq!(ostar(&["classify", "--set", "primes:2"]).stdout, "subbialgebra\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(ostar(&["frobnicate"]).code, 2);
        assert_eq!(ostar(&["norm", "s(2,3)"]).code, 2);
        assert_eq!(ostar(&["member", "--primes", "4", "--n", "3"]).code, 2);
        assert_eq!(ostar(&["deltaH", "s(4,1)"]).code, 2);
    }

    #[test]
    fn property_commands() {
        assert_eq!(ostar(&["coassoc", "s(6,5) * s(6,2)^*"]).code, 0);
        assert_eq!(ostar(&["wcs", "2", "3", "2", "s(12,7)"]).code, 0);
        assert_eq!(ostar(&["eps", "[3/4] * I(1) + s(2,1)"]).stdout, "3/4\n");
        assert_eq!(ostar(&["eq", "s(2,1)^* * s(2,2)", "0"]).stdout, "true\n");
    }
}
