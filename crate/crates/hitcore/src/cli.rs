//! Command-line driver behind the `hitcore` binary.
//!
//! [`run`] never prints; it returns the exit status and both output streams
//! so that it can be tested in-process. Failures produce exactly one line on
//! stderr of the form `error: <kind>: <detail>`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cache::{Cache, CacheEntry};
use crate::dual::{self, verify_transfer_witness};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::gl::{self, Group};
use crate::hit::{Budget, Engine, HitSpace, Policy};
use crate::kameko::{self, mu};
use crate::lambda::{self, LambdaElement};
use crate::poly::{binom_mod2, Monomial, WeightVector};
use crate::sum;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_CACHE_CORRUPT: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "hitcore", version, about = "Admissible bases, invariants and lambda-algebra checks over F2")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Cache directory for admissible bases (default: $HITKERNEL_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Recompute and overwrite cache entries instead of reading them.
    #[arg(long, global = true)]
    refresh: bool,
    /// Steenrod generators used for the hit space.
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::Pow2)]
    policy: PolicyArg,
    /// Upper bound on the rank of one reduced hit basis.
    #[arg(long, global = true, value_name = "N")]
    max_rows: Option<usize>,
    /// Upper bound on the memory held by one reduced hit basis, in MiB.
    #[arg(long, global = true, value_name = "MIB")]
    max_mib: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolicyArg {
    Pow2,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Gl,
    Sym,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SubspaceArg {
    KamekoKernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Level {
    Quick,
    Full,
    Deep,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// dim (Q P_d)_n
    Dim {
        /// Number of variables.
        #[arg(short)]
        d: usize,
        /// Degree.
        #[arg(short)]
        n: u32,
    },
    /// The admissible monomials of degree n, optionally of one weight.
    Basis {
        /// Number of variables.
        #[arg(short)]
        d: usize,
        /// Degree.
        #[arg(short)]
        n: u32,
        /// Weight vector such as 3,3,1,1: list a basis of Q P_d(ω).
        #[arg(long)]
        omega: Option<String>,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// dim Q P_d(ω) for every weight vector of degree n.
    OmegaSplit {
        /// Number of variables.
        #[arg(short)]
        d: usize,
        /// Degree.
        #[arg(short)]
        n: u32,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Invariants of the symmetric or general linear group on (Q P_d)_n.
    Invariants {
        /// Number of variables.
        #[arg(short)]
        d: usize,
        /// Degree.
        #[arg(short)]
        n: u32,
        /// Symmetric group or full linear group.
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Restrict to the kernel of the Kameko map.
        #[arg(long, value_enum)]
        subspace: Option<SubspaceArg>,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// The Kameko map (Q P_d)_{2N+d} -> (Q P_d)_N and its kernel.
    Kameko {
        /// Number of variables d.
        #[arg(long = "vars")]
        d: usize,
        /// The low degree N.
        #[arg(long = "low")]
        n: u32,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Checks Φ̄(B_{d-1}(ω)) ⊆ B_d(ω).
    SumConjecture {
        /// Number of variables.
        #[arg(short)]
        d: usize,
        /// Weight vector such as 3,3,1,1.
        #[arg(long)]
        omega: String,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Lambda algebra: normal forms, differentials and homology.
    Lambda {
        #[command(subcommand)]
        op: LambdaOp,
    },
    /// Chain-level transfer witness in rank five, degree 21.
    Transfer {
        #[command(subcommand)]
        op: TransferOp,
    },
    /// Runs the built-in reference checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Subcommand, Debug)]
enum LambdaOp {
    /// Admissible form of an element such as "L3 L7 + L5^2".
    Normalize { element: String },
    /// ∂ of an element, in admissible form.
    Diff { element: String },
    /// dim H^{s,t}(Λ) = dim Ext^{s,s+t}.
    Ext {
        /// Homological degree.
        #[arg(short)]
        s: usize,
        /// Internal degree.
        #[arg(short)]
        t: u32,
    },
}

#[derive(Subcommand, Debug)]
enum TransferOp {
    /// Runs the five witness checks.
    Verify {
        /// Use a witness assembled from the computed invariant instead of the bundled one.
        #[arg(long)]
        computed: bool,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Check(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Step = std::result::Result<(), Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() };
            }
            let first = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: usage: {first}\n") };
        }
    };
    let mut out = String::new();
    let result = match Driver::new(&cli.global) {
        Ok(d) => d.dispatch(&cli.command, &mut out),
        Err(e) => Err(e.into()),
    };
    match result {
        Ok(()) => Outcome { code: EXIT_OK, stdout: out, stderr: String::new() },
        Err(f) => {
            let (code, line) = classify(&f);
            Outcome { code, stdout: out, stderr: format!("{line}\n") }
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn classify(f: &Failure) -> (i32, String) {
    let e = match f {
        Failure::Check(m) => return (EXIT_CHECK_FAILED, format!("error: check-failed: {}", one_line(m))),
        Failure::Error(e) => e,
    };
    match e {
        Error::BudgetExceeded { .. } => (EXIT_BUDGET, format!("error: budget-exceeded: {}", one_line(&e.to_string()))),
        Error::CountOverflow { .. } => (EXIT_BUDGET, format!("error: budget-exceeded: {}", one_line(&e.to_string()))),
        Error::CacheCorrupt(_) => {
            (EXIT_CACHE_CORRUPT, format!("error: cache-corrupt: {} (rerun with --refresh to recompute)", one_line(&e.to_string())))
        }
        Error::InvalidArgument(_)
        | Error::Parse(_)
        | Error::NoMinimalSpike { .. }
        | Error::NotActionClosed
        | Error::ArityMismatch { .. }
        | Error::DegreeMismatch { .. } => (EXIT_USAGE, format!("error: usage: {}", one_line(&e.to_string()))),
        _ => (EXIT_INTERNAL, format!("error: internal: {}", one_line(&e.to_string()))),
    }
}

struct Driver {
    engine: Engine,
    policy: Policy,
    cache: Option<Cache>,
    refresh: bool,
}

impl Driver {
    fn new(g: &Global) -> Result<Self> {
        let mut budget = Budget::default();
        if let Some(r) = g.max_rows {
            budget.max_rows = r;
        }
        if let Some(m) = g.max_mib {
            budget.max_bytes = m.saturating_mul(1 << 20);
        }
        let cache = match &g.cache {
            Some(dir) => Some(Cache::open(dir)?),
            None => Cache::from_env()?,
        };
        let policy = match g.policy {
            PolicyArg::Pow2 => Policy::Pow2,
            PolicyArg::All => Policy::All,
        };
        Ok(Driver { engine: Engine::new(budget), policy, cache, refresh: g.refresh })
    }

    fn space(&self, d: usize, n: u32) -> Result<std::sync::Arc<HitSpace>> {
        self.engine.hit_space_with(d, n, self.policy)
    }

    /// The admissible basis, from the cache when possible.
    fn entry(&self, d: usize, n: u32) -> Result<CacheEntry> {
        if let Some(c) = &self.cache {
            if !self.refresh {
                if let Some(e) = c.load(d, n, self.policy)? {
                    return Ok(e);
                }
            }
            let e = CacheEntry::from_hit_space(&*self.space(d, n)?);
            c.store(&e)?;
            return Ok(e);
        }
        Ok(CacheEntry::from_hit_space(&*self.space(d, n)?))
    }

    fn dispatch(&self, cmd: &Command, out: &mut String) -> Step {
        match cmd {
            Command::Dim { d, n } => {
                writeln!(out, "{}", self.entry(*d, *n)?.dim()).ok();
            }
            Command::Basis { d, n, omega, json } => self.basis(*d, *n, omega.as_deref(), *json, out)?,
            Command::OmegaSplit { d, n, json } => self.omega_split(*d, *n, *json, out)?,
            Command::Invariants { d, n, group, subspace, json } => self.invariants(*d, *n, *group, subspace.is_some(), *json, out)?,
            Command::Kameko { d, n, json } => self.kameko(*d, *n, *json, out)?,
            Command::SumConjecture { d, omega, json } => self.sum_conjecture(*d, omega, *json, out)?,
            Command::Lambda { op } => lambda_cmd(op, out)?,
            Command::Transfer { op: TransferOp::Verify { computed } } => self.transfer(*computed, out)?,
            Command::Selftest { level } => self.selftest(*level, out)?,
        }
        Ok(())
    }

    fn basis(&self, d: usize, n: u32, omega: Option<&str>, as_json: bool, out: &mut String) -> Step {
        let Some(w) = omega else {
            let e = self.entry(d, n)?;
            if as_json {
                writeln!(out, "{}", e.to_json()).ok();
            } else {
                for b in &e.basis {
                    writeln!(out, "{}", Monomial::new(b.clone())?).ok();
                }
            }
            return Ok(());
        };
        let w = WeightVector::parse(w)?;
        let q = self.space(d, n)?.q_omega(&w)?;
        if as_json {
            let basis: Vec<&[u32]> = q.basis.iter().map(Monomial::exponents).collect();
            let v = json!({"basis": basis, "d": d, "dim": q.dim, "n": n, "omega": w.entries(), "policy": self.policy.as_str()});
            writeln!(out, "{v}").ok();
        } else {
            for m in &q.basis {
                writeln!(out, "{m}").ok();
            }
        }
        Ok(())
    }

    fn omega_split(&self, d: usize, n: u32, as_json: bool, out: &mut String) -> Step {
        let h = self.space(d, n)?;
        let mut strata = Vec::new();
        for w in h.weights() {
            let q = h.q_omega(&w)?;
            if q.dim > 0 {
                let (zero, plus) = q.split();
                strata.push((w, q.dim, zero, plus));
            }
        }
        if as_json {
            let rows: Vec<_> =
                strata.iter().map(|(w, dim, zero, plus)| json!({"dim": dim, "omega": w.entries(), "plus": plus, "zero": zero})).collect();
            writeln!(out, "{}", json!({"d": d, "n": n, "strata": rows, "total": h.dim()})).ok();
        } else {
            for (w, dim, zero, plus) in &strata {
                writeln!(out, "{w}\t{dim}\t({zero} + {plus})").ok();
            }
            writeln!(out, "total\t{}", h.dim()).ok();
        }
        Ok(())
    }

    fn invariants(&self, d: usize, n: u32, group: GroupArg, kernel: bool, as_json: bool, out: &mut String) -> Step {
        let group = if group == GroupArg::Gl { Group::GL } else { Group::Sym };
        let inv = if kernel {
            let low = kameko_low(d, n)?;
            let k = kameko::kernel_kameko_basis(&self.engine, d, low)?;
            gl::invariants_on_subspace(&self.engine, d, n, group, &k.kernel)?
        } else {
            gl::invariants_q(&self.engine, d, n, group)?
        };
        if as_json {
            let polys: Vec<Vec<&[u32]>> = inv.iter().map(|p| p.terms().map(Monomial::exponents).collect()).collect();
            writeln!(out, "{}", json!({"d": d, "dim": inv.len(), "invariants": polys, "n": n})).ok();
        } else {
            writeln!(out, "{}", inv.len()).ok();
            for p in &inv {
                writeln!(out, "{p}").ok();
            }
        }
        Ok(())
    }

    fn kameko(&self, d: usize, n: u32, as_json: bool, out: &mut String) -> Step {
        let k = kameko::kernel_kameko_basis(&self.engine, d, n)?;
        let zero = k.kernel.iter().filter(|m| !m.is_positive()).count();
        let plus = k.kernel.len() - zero;
        if as_json {
            let v = json!({
                "d": d, "high": k.high, "high_dim": k.high_dim, "kernel": k.kernel.len(),
                "kernel_plus": plus, "kernel_zero": zero, "low": k.low, "low_dim": k.low_dim, "onto": k.onto,
            });
            writeln!(out, "{v}").ok();
        } else {
            writeln!(out, "degree {} -> {}", k.high, k.low).ok();
            writeln!(out, "dim {} -> {}", k.high_dim, k.low_dim).ok();
            writeln!(out, "kernel {} ({zero} with a zero exponent, {plus} positive)", k.kernel.len()).ok();
            writeln!(out, "onto {}", k.onto).ok();
        }
        Ok(())
    }

    fn sum_conjecture(&self, d: usize, omega: &str, as_json: bool, out: &mut String) -> Step {
        let w = WeightVector::parse(omega)?;
        let r = sum::check_sum_conjecture(&self.engine, d, &w)?;
        if as_json {
            let wit: Vec<&[u32]> = r.witnesses.iter().map(Monomial::exponents).collect();
            let v =
                json!({"d": d, "holds": r.holds, "image": r.image.len(), "omega": w.entries(), "target": r.target_size, "witnesses": wit});
            writeln!(out, "{v}").ok();
        } else {
            writeln!(out, "{w}: |image| = {}, |B_{d}(ω)| = {}, holds = {}", r.image.len(), r.target_size, r.holds).ok();
            for m in &r.witnesses {
                writeln!(out, "  not admissible: {m}").ok();
            }
        }
        if r.holds {
            Ok(())
        } else {
            Err(Failure::Check(format!("inclusion fails for {w}: {} image monomials are not admissible", r.witnesses.len())))
        }
    }

    fn transfer(&self, computed: bool, out: &mut String) -> Step {
        let w = if computed { fixtures::transfer_witness_computed(&self.engine)? } else { fixtures::transfer_witness_printed()? };
        let report = verify_transfer_witness(&w)?;
        for c in &report.checks {
            writeln!(out, "{}\t{}\t{}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).ok();
        }
        let failed: Vec<&str> = report.failed().map(|c| c.name).collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Failure::Check(format!("transfer witness: {}", failed.join(","))))
        }
    }

    fn selftest(&self, level: Level, out: &mut String) -> Step {
        let mut failed = Vec::new();
        for (name, lv, check) in checks() {
            if lv > level {
                continue;
            }
            let t = Instant::now();
            let (ok, detail) = match check(self) {
                Ok(d) => (true, d),
                Err(Failure::Check(d)) => (false, d),
                Err(Failure::Error(e)) => (false, e.to_string()),
            };
            let secs = t.elapsed().as_secs_f64();
            writeln!(out, "{}\t{name}\t{detail}\t{secs:.2}s", if ok { "PASS" } else { "FAIL" }).ok();
            if !ok {
                failed.push(name);
            }
        }
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Failure::Check(format!("selftest: {}", failed.join(","))))
        }
    }
}

/// `N` with `2N + d = n`.
fn kameko_low(d: usize, n: u32) -> Result<u32> {
    let d = d as u32;
    if n < d || !(n - d).is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("degree {n} is not of the form 2N + {d}")));
    }
    Ok((n - d) / 2)
}

fn lambda_cmd(op: &LambdaOp, out: &mut String) -> Step {
    match op {
        LambdaOp::Normalize { element } => {
            writeln!(out, "{}", lambda::adem_normalize(&LambdaElement::parse(element)?)).ok();
        }
        LambdaOp::Diff { element } => {
            writeln!(out, "{}", lambda::differential(&LambdaElement::parse(element)?)).ok();
        }
        LambdaOp::Ext { s, t } => {
            writeln!(out, "{}", lambda::homology_dim(*s, *t)?).ok();
        }
    }
    Ok(())
}

type Check = fn(&Driver) -> std::result::Result<String, Failure>;

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> std::result::Result<String, Failure> {
    if got == want {
        Ok(format!("{what} = {got:?}"))
    } else {
        Err(Failure::Check(format!("{what} = {got:?}, expected {want:?}")))
    }
}

fn checks() -> Vec<(&'static str, Level, Check)> {
    vec![
        ("fixtures", Level::Quick, |_| Ok(format!("{} digests verified", fixtures::verify_all()?.len()))),
        ("binomials", Level::Quick, |_| {
            expect("C(5,2), C(6,2), C(7,3) mod 2", (binom_mod2(5, 2), binom_mod2(6, 2), binom_mod2(7, 3)), (0, 1, 1))
        }),
        ("mu", Level::Quick, |_| expect("mu(8), mu(21), mu(47)", (mu(8), mu(21), mu(47)), (2, 3, 3))),
        ("small-dims", Level::Quick, |dr| {
            let got: Vec<usize> = [(2, 3), (3, 4), (4, 6)].iter().map(|&(d, n)| dr.engine.dim(d, n)).collect::<Result<_>>()?;
            expect("dim Q P_2(3), Q P_3(4), Q P_4(6)", got, vec![3, 8, 24])
        }),
        ("lambda-small", Level::Quick, |_| {
            let d11 = lambda::differential(&LambdaElement::monomial(vec![11])).to_string();
            expect("d(L11), H(1,3), H(2,2)", (d11, lambda::homology_dim(1, 3)?, lambda::homology_dim(2, 2)?), ("L7 L3".into(), 1, 1))
        }),
        ("dim-5-8", Level::Quick, |dr| expect("dim (Q P_5)_8", dr.entry(5, 8)?.dim(), 174)),
        ("basis-5-8", Level::Quick, |dr| {
            let mut got: Vec<Vec<u32>> = dr.entry(5, 8)?.basis;
            let mut want: Vec<Vec<u32>> = fixtures::b5_8()?.iter().map(|m| m.exponents().to_vec()).collect();
            got.sort();
            want.sort();
            expect("B_5(8) equals the fixture", got == want, true)
        }),
        ("omega-split-5-8", Level::Quick, |dr| {
            let h = dr.space(5, 8)?;
            let dims: Vec<usize> =
                ["2,1,1", "2,3", "4,2"].iter().map(|w| Ok(h.q_omega(&WeightVector::parse(w)?)?.dim)).collect::<Result<_>>()?;
            expect("dim Q P_5(ω) for (2,1,1), (2,3), (4,2)", dims, vec![105, 24, 45])
        }),
        ("primitives-5-8", Level::Quick, |_| expect("primitives(5,8)", dual::primitives(5, 8, Policy::Pow2)?.len(), 174)),
        ("gl-invariants-5-8", Level::Quick, |dr| expect("dim (Q P_5)_8^GL5", gl::invariants_q(&dr.engine, 5, 8, Group::GL)?.len(), 0)),
        ("lambda-5-8", Level::Quick, |_| expect("dim H^(5,8)", lambda::homology_dim(5, 8)?, 0)),
        ("dim-5-21", Level::Full, |dr| expect("dim (Q P_5)_21", dr.entry(5, 21)?.dim(), 840)),
        ("kameko-5-21", Level::Full, |dr| {
            let k = kameko::kernel_kameko_basis(&dr.engine, 5, 8)?;
            let zero = k.kernel.iter().filter(|m| !m.is_positive()).count();
            let mut got: Vec<&[u32]> = k.kernel.iter().map(Monomial::exponents).collect();
            let fix = fixtures::b5_21_kernel()?;
            let mut want: Vec<&[u32]> = fix.iter().map(Monomial::exponents).collect();
            got.sort();
            want.sort();
            expect("kernel size, zero part, onto, matches fixture", (k.kernel.len(), zero, k.onto, got == want), (666, 400, true, true))
        }),
        ("dim-5-22", Level::Full, |dr| {
            let b = dr.engine.admissible_basis(5, 22)?;
            let plus = b.monomials.iter().filter(|m| m.is_positive()).count();
            expect("dim (Q P_5^0)_22, (Q P_5^+)_22", (b.len() - plus, plus), (460, 505))
        }),
        ("gl-invariants-5-21", Level::Full, |dr| {
            let inv = gl::invariants_q(&dr.engine, 5, 21, Group::GL)?;
            if inv.len() != 1 {
                return Err(Failure::Check(format!("dim (Q P_5)_21^GL5 = {}, expected 1", inv.len())));
            }
            let h = dr.space(5, 21)?;
            let omega = WeightVector::new(vec![3, 3, 3]);
            expect("dim 1, invariant ≡ q2 in Q P_5(3,3,3)", h.congruent_below(&inv[0], &fixtures::q2()?, &omega)?, true)
        }),
        ("gl-invariant-is-q2", Level::Full, |dr| {
            let inv = gl::invariants_q(&dr.engine, 5, 21, Group::GL)?;
            let h = dr.space(5, 21)?;
            let same = match inv.as_slice() {
                [q] => h.hit_test(&q.add(&fixtures::q2()?)?)?,
                _ => false,
            };
            expect("invariant ≡ q2 mod hit", same, true)
        }),
        ("sym-invariants-kernel-5-21", Level::Full, |dr| {
            let k = kameko::kernel_kameko_basis(&dr.engine, 5, 8)?;
            expect("S5-invariants in the Kameko kernel", gl::invariants_on_subspace(&dr.engine, 5, 21, Group::Sym, &k.kernel)?.len(), 11)
        }),
        ("primitives-5-21", Level::Full, |_| expect("primitives(5,21)", dual::primitives(5, 21, Policy::Pow2)?.len(), 840)),
        ("lambda-5-21", Level::Full, |_| {
            let f = fixtures::f0bar()?;
            expect("f0bar is a cycle, dim H^(5,21)", (lambda::is_cycle(&f), lambda::homology_dim(5, 21)?), (true, 1))
        }),
        ("transfer-bundled", Level::Full, |_| {
            let r = verify_transfer_witness(&fixtures::transfer_witness_printed()?)?;
            let failed: Vec<&str> = r.failed().map(|c| c.name).collect();
            expect("failed witness checks", failed, vec![])
        }),
        ("transfer-computed", Level::Full, |dr| {
            let r = verify_transfer_witness(&fixtures::transfer_witness_computed(&dr.engine)?)?;
            let failed: Vec<&str> = r.failed().map(|c| c.name).collect();
            expect("failed witness checks", failed, vec![])
        }),
        ("dim-5-47", Level::Deep, |dr| {
            let raised = Engine::new(Budget { max_rows: 300_000, max_bytes: 6 << 30 });
            let h = raised.hit_space_with(5, 47, dr.policy)?;
            expect("dim (Q P_5)_47", h.dim(), 1894)
        }),
    ]
}
