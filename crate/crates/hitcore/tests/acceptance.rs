//! Acceptance run: one PASS/FAIL line per criterion, with supporting `info`
//! lines. Criterion 13 (degree 47) runs only with `--ignored` or
//! `--include-ignored`. Failures are reported, not hidden; the process exits
//! non-zero only on an internal error, or on any FAIL when `--strict` is given.

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use hitcore::dual::{self, verify_transfer_witness, DividedElement};
use hitcore::fixtures;
use hitcore::gl::{self, Group};
use hitcore::hit::{Budget, Engine, HitSpace, Policy};
use hitcore::kameko;
use hitcore::lambda::{self, LambdaElement, Normalizer, Strategy as Rewrite};
use hitcore::poly::{self, enumerate_monomials, monomial_order, sq, Monomial, Polynomial, WeightVector};
use hitcore::sum;
use hitcore::Result;

struct Outcome {
    pass: bool,
    detail: String,
    info: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, detail: String::new(), info: Vec::new() }
    }

    /// Records one sub-check; the criterion passes only if all of them do.
    fn check<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.pass &= ok;
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        if ok {
            self.detail.push_str(&format!("{what} = {got:?}"));
        } else {
            self.detail.push_str(&format!("{what} = {got:?}, expected {want:?}"));
        }
    }

    fn info(&mut self, line: String) {
        self.info.push(line);
    }
}

struct Run {
    passed: usize,
    failed: usize,
    errors: usize,
}

impl Run {
    fn criterion(&mut self, id: u32, title: &str, limit: Duration, f: impl FnOnce(&mut Outcome) -> Result<()>) {
        let start = Instant::now();
        let mut o = Outcome::new();
        let res = f(&mut o);
        let took = start.elapsed();
        if let Err(e) = res {
            self.errors += 1;
            println!("FAIL criterion {id:>2}: {title}: error: {e} ({took:.2?})");
            return;
        }
        if took > limit {
            o.pass = false;
            o.detail.push_str(&format!("; took {took:.2?}, limit {limit:?}"));
        }
        if o.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {id:>2}: {title}: {} ({took:.2?})", o.detail);
        for line in o.info {
            println!("     info: {line}");
        }
    }
}

fn sorted(ms: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = ms.into_iter().collect();
    v.sort();
    v
}

fn w(s: &str) -> WeightVector {
    WeightVector::parse(s).expect("literal weight")
}

fn positive_in(h: &HitSpace, omega: &str) -> Result<usize> {
    Ok(h.q_omega(&w(omega))?.split().1)
}

fn property(name: &str, cases: u32, o: &mut Outcome, result: std::result::Result<(), String>) {
    match result {
        Ok(()) => o.check(name, format!("{cases} cases ok"), format!("{cases} cases ok")),
        Err(e) => o.check(name, e, "ok".into()),
    }
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let deep = args.iter().any(|a| a == "--ignored" || a == "--include-ignored");
    let strict = args.iter().any(|a| a == "--strict");
    // `cargo test --list` asks harnesses to enumerate their tests.
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }

    let engine = Engine::default();
    let mut run = Run { passed: 0, failed: 0, errors: 0 };
    let secs = Duration::from_secs;

    run.criterion(1, "dim (Q P_5)_8", secs(10), |o| {
        o.check("dim", engine.dim(5, 8)?, 174);
        Ok(())
    });

    run.criterion(2, "weight split in degree 8", secs(30), |o| {
        let h = engine.hit_space(5, 8)?;
        let dims: Vec<usize> = ["2,1,1", "2,3", "4,2"].iter().map(|s| Ok(h.q_omega(&w(s))?.dim)).collect::<Result<_>>()?;
        o.check("dim Q P_5(ω) for (2,1,1), (2,3), (4,2)", dims.clone(), vec![105, 24, 45]);
        o.check("sum", dims.iter().sum::<usize>(), 174);
        let nonzero =
            h.weights().iter().map(|v| Ok(h.q_omega(v)?.dim)).collect::<Result<Vec<usize>>>()?.into_iter().filter(|&d| d > 0).count();
        o.check("weights with a non-zero stratum", nonzero, 3);
        Ok(())
    });

    run.criterion(3, "dim (Q P_5)_21 and the Kameko kernel", secs(600), |o| {
        let b = engine.admissible_basis(5, 21)?;
        o.check("dim", b.len(), 840);
        o.check("|B⁰_5(21)|", b.monomials.iter().filter(|m| !m.is_positive()).count(), 400);
        o.check("binomial formula for B⁰", engine.dim_q0_formula(5, 21)?, 400);
        let k = kameko::kernel_kameko_basis(&engine, 5, 8)?;
        o.check("Kameko kernel", k.kernel.len(), 666);
        o.check("onto (Q P_5)_8", k.onto, true);
        o.check("kernel + dim (Q P_5)_8", k.kernel.len() + k.low_dim, 840);
        Ok(())
    });

    run.criterion(4, "degree 22", secs(900), |o| {
        let h = engine.hit_space(5, 22)?;
        let plus = h.admissible_monomials().iter().filter(|m| m.is_positive()).count();
        o.check("dim (Q P_5^0)_22", h.dim() - plus, 460);
        o.check("dim (Q P_5^+)_22", plus, 505);
        o.check("total", h.dim(), 965);
        let per: Vec<usize> =
            ["2,2,2,1", "2,4,1,1", "2,4,3", "4,3,1,1", "4,3,3"].iter().map(|s| positive_in(&h, s)).collect::<Result<_>>()?;
        o.check("dim Q P_5^+(ω_1..ω_5)", per, vec![50, 25, 5, 300, 125]);
        Ok(())
    });

    run.criterion(5, "lower-arity cross-checks", secs(60), |o| {
        o.check("|B_4^+(21)|", engine.dim_plus(4, 21)?, 66);
        o.check("|B_3^+(21)|", engine.dim_plus(3, 21)?, 7);
        o.check("dim Q P_4^+(2,2,2,1) in degree 22", positive_in(&*engine.hit_space(4, 22)?, "2,2,2,1")?, 26);
        Ok(())
    });

    run.criterion(6, "golden fixtures", secs(60), |o| {
        o.check("B_5(8) equals the fixture", sorted(engine.admissible_basis(5, 8)?.monomials) == sorted(fixtures::b5_8()?), true);
        let zero = sorted(engine.admissible_basis(5, 21)?.monomials.into_iter().filter(|m| !m.is_positive()));
        let fix = fixtures::b5_21_kernel()?;
        o.check("B⁰_5(21) equals the fixture", zero == sorted(fix[..400].to_vec()), true);
        let kernel = sorted(kameko::kernel_kameko_basis(&engine, 5, 8)?.kernel);
        o.info(format!("whole Kameko kernel in degree 21 equals the 666-term fixture: {}", kernel == sorted(fix)));
        Ok(())
    });

    run.criterion(7, "invariants", secs(600), |o| {
        o.check("dim (Q P_5)_8^GL5", gl::invariants_q(&engine, 5, 8, Group::GL)?.len(), 0);
        let inv = gl::invariants_q(&engine, 5, 21, Group::GL)?;
        o.check("dim (Q P_5)_21^GL5", inv.len(), 1);
        let h = engine.hit_space(5, 21)?;
        let q2 = fixtures::q2()?;
        if let [q] = inv.as_slice() {
            o.check("invariant ≡ q2 mod hit", h.hit_test(&q.add(&q2)?)?, true);
            o.info(format!(
                "invariant has {} terms, weight(s) {:?}",
                q.len(),
                sorted(q.terms().cloned()).iter().map(|m| m.weight().to_string()).collect::<std::collections::BTreeSet<_>>()
            ));
            o.info(format!("invariant ≡ q2 modulo hit + P_5^-(3,3,3): {}", h.congruent_below(q, &q2, &w("3,3,3"))?));
            let moved: Vec<bool> = gl::standard_generators(5, Group::Sym)?
                .iter()
                .map(|g| Ok(!h.hit_test(&gl::apply_substitution(g, &q2)?.add(&q2)?)?))
                .collect::<Result<_>>()?;
            o.info(format!("q2 is moved mod hit by the transpositions (x_i x_{{i+1}}): {moved:?}"));
        }
        let k = kameko::kernel_kameko_basis(&engine, 5, 8)?;
        let sym = gl::invariants_on_subspace(&engine, 5, 21, Group::Sym, &k.kernel)?;
        o.check("S5-invariants in the Kameko kernel", sym.len(), 11);
        let zero = k.kernel.iter().filter(|m| !m.is_positive()).cloned().collect::<Vec<_>>();
        o.info(format!(
            "S5-invariants: {} on the zero-exponent part, {} on the whole kernel",
            gl::invariants_on_subspace(&engine, 5, 21, Group::Sym, &zero)?.len(),
            sym.len()
        ));
        Ok(())
    });

    run.criterion(8, "duality with primitives", secs(300), |o| {
        for n in [8, 21] {
            o.check(&format!("primitives(5,{n}) vs dim"), dual::primitives(5, n, Policy::Pow2)?.len(), engine.dim(5, n)?);
        }
        Ok(())
    });

    run.criterion(9, "lambda algebra", secs(300), |o| {
        o.check("∂ f̄₀ = 0", lambda::is_cycle(&fixtures::f0bar()?), true);
        o.info(format!("malformed word of f̄₀ repaired to {:?} (unique)", fixtures::f0bar_repairs()?));
        let mut norm = Normalizer::default();
        let (mut count, mut bad) = (0usize, 0usize);
        for s in 1..=4 {
            for t in 0..=30 {
                for j in lambda::admissible_monomials(s, t) {
                    count += 1;
                    let x = LambdaElement::monomial(j);
                    let dx = norm.differential(&x);
                    let dd = norm.differential(&dx);
                    bad += !dd.is_zero() as usize;
                }
            }
        }
        o.check(&format!("∂² ≠ 0 among {count} admissible monomials"), bad, 0);
        o.check("dim H^(5,21)", lambda::homology_dim(5, 21)?, 1);
        o.check("dim H^(5,8)", lambda::homology_dim(5, 8)?, 0);
        Ok(())
    });

    run.criterion(10, "transfer witness", secs(60), |o| {
        let printed = fixtures::transfer_witness_printed()?;
        let r = verify_transfer_witness(&printed)?;
        for c in &r.checks {
            o.check(&format!("bundled Z: {}", c.name), c.passed, true);
            o.info(format!("bundled Z: {} {}: {}", c.name, if c.passed { "ok" } else { "failed" }, c.detail));
        }
        let (target, bounding) = fixtures::transfer_target_and_bounding()?;
        let psi = fixtures::psi_z_printed()?;
        o.info(format!(
            "displayed value of ψ_5(Z) is a cycle homologous to the target via the displayed bounding element: {}",
            lambda::is_cycle(&psi) && lambda::bounded_by(&psi, &target, &bounding)
        ));
        let computed = fixtures::transfer_witness_computed(&engine)?;
        let rc = verify_transfer_witness(&computed)?;
        o.info(format!(
            "computed witness ({} terms, pairing with the GL5-invariant): all checks pass = {}",
            computed.z.len(),
            rc.all_passed()
        ));
        Ok(())
    });

    run.criterion(11, "sum inclusion", secs(600), |o| {
        let mut cases = 0usize;
        let mut broken = Vec::new();
        let mut degrees: Vec<(usize, u32)> = vec![(5, 8), (5, 21)];
        degrees.extend((2..=4).flat_map(|d| (0..=12).map(move |n| (d, n))));
        for (d, n) in degrees {
            for r in sum::check_sum_conjecture_degree(&engine, d, n)? {
                cases += 1;
                if !r.holds {
                    broken.push(format!("d={d} ω={}", r.omega));
                }
            }
        }
        o.check(&format!("weights violating the inclusion among {cases}"), broken, Vec::<String>::new());
        Ok(())
    });

    run.criterion(12, "property suites", secs(300), |o| {
        let mut policy_ok = true;
        for d in 1..=3 {
            for n in 0..=12 {
                let a = HitSpace::build(d, n, Policy::Pow2, &Budget::default())?;
                let b = HitSpace::build(d, n, Policy::All, &Budget::default())?;
                policy_ok &= a.rank() == b.rank() && a.admissible_monomials() == b.admissible_monomials();
            }
        }
        o.check("Pow2 and All span the same hit space (d ≤ 3, n ≤ 12)", policy_ok, true);

        let cartan = runner(256).run(&(1usize..=3, 0u32..=4, 0u32..=4, 0u32..=6, any::<u64>(), any::<u64>()), |(d, da, db, k, sa, sb)| {
            let pick = |deg: u32, seed: u64| -> Polynomial {
                let all = enumerate_monomials(d, deg).unwrap();
                Polynomial::from_terms(d, deg, all.into_iter().enumerate().filter(|(i, _)| seed >> (i % 64) & 1 == 1).map(|(_, m)| m))
                    .unwrap()
            };
            let (p, q) = (pick(da, sa), pick(db, sb));
            let mut rhs = Polynomial::zero(d, da + db + k);
            for i in 0..=k {
                rhs.add_assign(&sq(i, &p).mul(&sq(k - i, &q)).unwrap()).unwrap();
            }
            ensure(sq(k, &p.mul(&q).unwrap()) == rhs, || format!("Sq^{k}({p} · {q})"))
        });
        property("Cartan formula", 256, o, cartan.map_err(|e| e.to_string()));

        let mut total = true;
        for d in 1..=4 {
            for n in 0..=10 {
                let mut ms = enumerate_monomials(d, n)?;
                ms.sort_by(|a, b| monomial_order(a, b).unwrap());
                total &=
                    ms.windows(2).all(|p| monomial_order(&p[0], &p[1]).unwrap().is_lt() && monomial_order(&p[1], &p[0]).unwrap().is_gt());
            }
        }
        o.check("monomial order is a strict total order (d ≤ 4, n ≤ 10)", total, true);

        let adjoint = runner(256).run(&(1usize..=3, 0u32..=6, 0u32..=4, any::<usize>(), any::<usize>()), |(d, lo, k, p, u)| {
            let lows = enumerate_monomials(d, lo).unwrap();
            let highs = enumerate_monomials(d, lo + k).unwrap();
            let a = Polynomial::from_monomial(lows[p % lows.len()].clone());
            let b = DividedElement::monomial(highs[u % highs.len()].exponents().to_vec()).unwrap();
            ensure(dual::pairing(&dual::dual_sq(k, &b), &a).unwrap() == dual::pairing(&b, &sq(k, &a)).unwrap(), || format!("k={k} {a}"))
        });
        property("⟨(u)Sq^k, p⟩ = ⟨u, Sq^k p⟩", 256, o, adjoint.map_err(|e| e.to_string()));

        let dk = runner(256).run(&(prop::collection::vec(0u32..=6, 1..=4), 0u32..=6), |(e, k)| {
            let u = DividedElement::monomial(e).unwrap();
            let up = dual::dual_kameko(&u);
            let (even, want) = (dual::dual_sq(2 * k, &up), dual::dual_kameko(&dual::dual_sq(k, &u)));
            ensure(dual::dual_sq(2 * k + 1, &up).is_zero(), || format!("odd square, k={k}"))?;
            ensure(even == want || (even.is_zero() && want.is_zero()), || format!("even square, k={k}"))
        });
        property("dual Kameko relations", 256, o, dk.map_err(|e| e.to_string()));

        let words = prop::collection::vec(0u32..=24, 1..=4).prop_filter("degree", |w| w.iter().sum::<u32>() <= 24);
        let confluence = runner(512).run(&words, |w| {
            let a = Normalizer::new(Rewrite::Leftmost).normalize_monomial(&w);
            let b = Normalizer::new(Rewrite::Rightmost).normalize_monomial(&w);
            ensure(a == b && a.is_admissible(), || format!("{w:?}"))
        });
        property("Adem rewriting is confluent", 512, o, confluence.map_err(|e| e.to_string()));

        let mu_ok = (0u64..2048).all(|n| {
            let m = poly::mu(n) as u64;
            poly::alpha(n + m) as u64 <= m && (0..m).all(|k| poly::alpha(n + k) as u64 > k)
        });
        o.check("μ(n) = min{k : α(n + k) ≤ k} for n < 2048", mu_ok, true);
        o.check("μ(47)", poly::mu(47), 3);
        Ok(())
    });

    if deep {
        let raised = Engine::new(Budget { max_rows: 300_000, max_bytes: 6 << 30 });
        run.criterion(13, "degree 47 (raised budget)", secs(4 * 3600), |o| {
            let h = raised.hit_space(5, 47)?;
            o.check("dim (Q P_5)_47", h.dim(), 1894);
            let per: Vec<usize> =
                ["3,2,2,2,1", "3,2,4,1,1", "3,2,4,3", "3,4,3,1,1", "3,4,3,3"].iter().map(|s| positive_in(&h, s)).collect::<Result<_>>()?;
            o.check("dim Q P_5^+(ω̄_1..ω̄_5)", per, vec![370, 0, 0, 109, 15]);
            o.check("|B⁰_5(47)|", h.admissible_monomials().iter().filter(|m| !m.is_positive()).count(), 560);
            let k = kameko::kernel_kameko_basis(&raised, 5, 21)?;
            o.check("Kameko kernel", k.kernel.len(), 1054);
            Ok(())
        });
    } else {
        println!("SKIP criterion 13: degree 47 (run with --ignored or --include-ignored)");
    }

    println!("acceptance: {} passed, {} failed, {} errors", run.passed, run.failed, run.errors);
    if run.errors > 0 || (strict && run.failed > 0) {
        std::process::exit(1);
    }
}
