// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. Every subcommand parses its flags, calls one
//! library operation and turns the result into an [`OutputRecord`].
//!
//! Exit codes: 0 on success, 1 when an operation rejects its input, 2 on a
//! usage error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use primlab::arith::{jacobi, Natural};
use primlab::artin::{self, LeastPrime, ARTIN_CONSTANT, DEFAULT_CAP};
use primlab::charsum::{self, CharacterContext, PsiMethod, SumMode};
use primlab::factorize::{carmichael_lambda, factor};
use primlab::primroot::{self, PrimeRootTester};
use primlab::special::{self, germain_decompose, GERMAIN_TEST_EXPONENTIATIONS};

pub mod output;

pub use output::{Format, OutputRecord, Row, Value};

#[derive(Debug, Parser)]
#[command(name = "primlab", version, about = "Primitive roots, character sums and Artin-density experiments")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

fn natural(s: &str) -> Result<u64, String> {
    s.parse::<Natural>().map(Natural::get).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PsiForm {
    /// Sum over multiplicative characters grouped by divisor of p - 1.
    Divisor,
    /// Double sum over coprime exponents and additive characters.
    Free,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicative order of U modulo N.
    Order {
        #[arg(long, value_parser = natural)]
        u: u64,
        #[arg(long, value_parser = natural)]
        n: u64,
    },
    /// Whether U is a primitive root modulo the prime P.
    IsPrimroot {
        #[arg(long, value_parser = natural)]
        u: u64,
        #[arg(long, value_parser = natural)]
        p: u64,
    },
    /// Lift a primitive root from the prime-power divisors of N to N.
    Lift {
        #[arg(long, value_parser = natural)]
        u: u64,
        #[arg(long, value_parser = natural)]
        n: u64,
    },
    /// List generalized Germain primes 2^s r + 1 up to a limit.
    Germain {
        #[arg(long, value_parser = natural)]
        limit: u64,
        #[arg(long)]
        s: Option<u32>,
    },
    /// Two-exponentiation primitive-root test modulo a Germain prime.
    GermainTest {
        #[arg(long, value_parser = natural)]
        q: u64,
        #[arg(long, value_parser = natural)]
        p: u64,
    },
    /// Quadratic-nonresidue primitive-root test modulo a Fermat prime.
    FermatTest {
        #[arg(long, value_parser = natural)]
        q: u64,
        #[arg(long, value_parser = natural)]
        f: u64,
    },
    /// Primes of the form K 2^n + 1 for n up to NMAX.
    K2n {
        #[arg(long, value_parser = natural)]
        k: u64,
        #[arg(long, value_parser = natural)]
        nmax: u64,
    },
    /// Evaluate the primitive-root indicator as an exponential sum.
    Psi {
        #[arg(long, value_parser = natural)]
        u: u64,
        #[arg(long, value_parser = natural)]
        p: u64,
        #[arg(long, value_enum)]
        method: PsiForm,
        /// Sum every additive character instead of using the closed form.
        #[arg(long)]
        literal: bool,
    },
    /// Main/error decomposition of the primitive-root count over [Z, 2Z].
    Interval {
        #[arg(long, value_parser = natural)]
        z: u64,
        #[arg(long, value_parser = natural)]
        q: u64,
    },
    /// Truncated Euler product for Artin's constant.
    ArtinConstant {
        #[arg(long, value_parser = natural)]
        cutoff: u64,
    },
    /// Count primes up to X having Q as a primitive root.
    Density {
        #[arg(long, value_parser = natural)]
        q: u64,
        #[arg(long, value_parser = natural)]
        x: u64,
    },
    /// Least prime having Q as a primitive root.
    LeastPrime {
        #[arg(long, value_parser = natural)]
        q: u64,
        #[arg(long, value_parser = natural, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Least primes for every admissible q in [QMIN, QMAX].
    Scan {
        #[arg(long, value_parser = natural)]
        qmin: u64,
        #[arg(long, value_parser = natural)]
        qmax: u64,
        #[arg(long, value_parser = natural, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long)]
        threads: Option<usize>,
        /// Also report least_p / (ln q)^C.
        #[arg(long)]
        c: Option<f64>,
    },
}

/// Parses `args` (program name first) and runs the command, writing the
/// rendered record to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, err) {
        Ok(record) => {
            let _ = out.write_all(record.render(cli.format).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs one command against the library.
pub fn execute(command: &Command, progress: &mut dyn Write) -> primlab::Result<OutputRecord> {
    Ok(match *command {
        Command::Order { u, n } => {
            let r = primroot::multiplicative_order(u, n)?;
            let mut rec = OutputRecord::new("order").param("u", u).param("n", n);
            rec.rows.push(vec![
                ("u", r.u.into()),
                ("n", r.n.into()),
                ("order", r.order.into()),
                ("lambda", r.group_exponent.into()),
                ("primitive", r.is_lambda_primitive.into()),
            ]);
            rec
        }
        Command::IsPrimroot { u, p } => {
            let primitive = primroot::is_primitive_root_prime(u, p)?;
            let tester = PrimeRootTester::new(p)?;
            let mut rec = OutputRecord::new("is-primroot").param("u", u).param("p", p);
            rec.rows.push(vec![
                ("u", u.into()),
                ("p", p.into()),
                ("primitive", primitive.into()),
                ("exponentiations", tester.exponentiations().into()),
            ]);
            rec
        }
        Command::Lift { u, n } => {
            let f = factor(n)?;
            let lifted = primroot::lift_primitive_root(u, &f)?;
            let powers: Vec<String> = f.prime_powers().map(|pk| pk.to_string()).collect();
            let mut rec = OutputRecord::new("lift").param("u", u).param("n", n);
            rec.rows.push(vec![
                ("u", u.into()),
                ("n", n.into()),
                ("prime_powers", Value::Str(powers.join(";"))),
                ("lambda", carmichael_lambda(&f).into()),
                ("lifted", lifted.into()),
            ]);
            rec
        }
        Command::Germain { limit, s } => {
            let mut rec = OutputRecord::new("germain").param("limit", limit);
            if let Some(s) = s {
                rec = rec.param("s", s);
            }
            for g in special::germain_primes(limit, s) {
                rec.rows.push(vec![("p", g.p().into()), ("s", g.s().into()), ("r", g.r().into())]);
            }
            rec.summary.push(("count", rec.rows.len().into()));
            rec
        }
        Command::GermainTest { q, p } => {
            let g = germain_decompose(p)?.ok_or_else(|| {
                primlab::Error::InvalidRange(format!("{p} is not a generalized Germain prime 2^s r + 1"))
            })?;
            let primitive = special::germain_primitive_root_test(q, &g)?;
            let generic = PrimeRootTester::new(p)?.exponentiations();
            let mut rec = OutputRecord::new("germain-test").param("q", q).param("p", p);
            rec.rows.push(vec![
                ("q", q.into()),
                ("p", p.into()),
                ("s", g.s().into()),
                ("r", g.r().into()),
                ("primitive", primitive.into()),
                ("exponentiations", GERMAIN_TEST_EXPONENTIATIONS.into()),
                ("generic_exponentiations", generic.into()),
            ]);
            rec
        }
        Command::FermatTest { q, f } => {
            let primitive = special::fermat_primitive_root_test(q, f)?;
            let symbol = jacobi((q % f) as i64, f)?;
            let mut rec = OutputRecord::new("fermat-test").param("q", q).param("f", f);
            rec.rows.push(vec![
                ("q", q.into()),
                ("f", f.into()),
                ("jacobi", symbol.as_i8().into()),
                ("primitive", primitive.into()),
            ]);
            rec
        }
        Command::K2n { k, nmax } => {
            let e = special::enumerate_k_pow2_primes(k, nmax)?;
            let mut rec = OutputRecord::new("k2n").param("k", k).param("nmax", nmax);
            for &(n, p) in &e.hits {
                rec.rows.push(vec![("k", k.into()), ("n", n.into()), ("p", p.into())]);
            }
            rec.summary.push(("count", e.hits.len().into()));
            rec.summary.push(("cutoff", e.cutoff.into()));
            rec
        }
        Command::Psi { u, p, method, literal } => {
            let e = match method {
                PsiForm::Divisor => charsum::psi_divisor_dependent(u, p)?,
                PsiForm::Free => {
                    let mode = if literal { SumMode::Literal } else { SumMode::Indicator };
                    charsum::psi_divisor_free(u, p, mode)?
                }
            };
            let tau = CharacterContext::new(p)?.generator();
            let name = match e.method {
                PsiMethod::DivisorDependent => "divisor",
                PsiMethod::DivisorFree => "free",
            };
            let mut rec = OutputRecord::new("psi")
                .param("u", u)
                .param("p", p)
                .param("method", name)
                .param("literal", literal);
            rec.rows.push(vec![
                ("u", e.u.into()),
                ("p", e.p.into()),
                ("tau", tau.into()),
                ("method", name.into()),
                ("value", (e.value as u64).into()),
                ("raw_re", e.raw.re.into()),
                ("raw_im", e.raw.im.into()),
                ("residual", e.residual.into()),
            ]);
            rec
        }
        Command::Interval { z, q } => {
            let d = charsum::decompose_interval(z, q)?;
            let mut rec = OutputRecord::new("interval").param("z", z).param("q", q);
            rec.rows.push(interval_row(&d));
            rec
        }
        Command::ArtinConstant { cutoff } => {
            let a = artin::artin_constant(cutoff)?;
            let mut rec = OutputRecord::new("artin-constant").param("cutoff", cutoff);
            rec.rows.push(vec![
                ("cutoff", a.truncation.into()),
                ("value", a.value.into()),
                ("tail_bound", a.tail_bound.into()),
                ("reference", ARTIN_CONSTANT.into()),
                ("abs_error", (a.value - ARTIN_CONSTANT).abs().into()),
            ]);
            rec
        }
        Command::Density { q, x } => {
            let r = artin::prime_counts(q, x)?;
            let mut rec = OutputRecord::new("density").param("q", q).param("x", x);
            rec.rows.push(vec![
                ("q", r.q.into()),
                ("x", r.x.into()),
                ("pi_x", r.pi_x.into()),
                ("pi_q_x", r.pi_q_x.into()),
                ("density", r.density.into()),
                ("artin_reference", r.artin_reference.into()),
                ("correction_estimate", r.correction_estimate().into()),
            ]);
            rec
        }
        Command::LeastPrime { q, cap } => {
            let found = artin::least_prime_with_primitive_root(q, cap)?;
            let mut rec = OutputRecord::new("least-prime").param("q", q).param("cap", cap);
            rec.rows.push(vec![
                ("q", q.into()),
                ("least_p", found.found().into()),
                ("cap", cap.into()),
                ("exhausted", matches!(found, LeastPrime::Exhausted(_)).into()),
            ]);
            rec
        }
        Command::Scan { qmin, qmax, cap, threads, c } => {
            let _ = writeln!(progress, "scanning q in [{qmin}, {qmax}] with cap {cap}");
            let report = artin::conjecture_scan(qmin, qmax, cap, threads)?;
            let _ = writeln!(progress, "scanned {} admissible bases", report.records.len());
            let mut rec = OutputRecord::new("scan")
                .param("qmin", qmin)
                .param("qmax", qmax)
                .param("cap", cap);
            if let Some(c) = c {
                rec = rec.param("c", c);
            }
            for r in &report.records {
                rec.rows.push(scan_row(r, c));
            }
            rec.summary = vec![
                ("rows", report.records.len().into()),
                ("max_ratio", report.max_ratio.into()),
                ("max_ratio_q", report.max_ratio_q.into()),
                ("germain_fraction", report.germain_fraction.into()),
                ("exhausted", report.exhausted.into()),
            ];
            rec
        }
    })
}

pub fn interval_row(d: &charsum::IntervalDecomposition) -> Row {
    vec![
        ("z", d.z.into()),
        ("q", d.q.into()),
        ("primes", d.primes.into()),
        ("psi_sum", d.psi_sum.into()),
        ("trivial_term", d.trivial_term.into()),
        ("error_term", d.error_term.into()),
        ("identity_gap", d.identity_gap().into()),
        ("li_prediction", d.li_prediction.into()),
        ("scaled_error", d.scaled_error().into()),
    ]
}

pub fn scan_row(r: &artin::ScanRecord, c: Option<f64>) -> Row {
    let mut row: Row = vec![
        ("q", r.q.into()),
        ("least_p", r.least_p.into()),
        ("bound_value", r.bound_value.into()),
        ("ratio", r.ratio.into()),
        ("germain_hit", r.germain_hit.into()),
    ];
    if let Some(c) = c {
        row.push(("ratio_log_pow_c", r.log_power_ratio(c).into()));
    }
    row
}
