//! Acceptance gate: one PASS/FAIL line per criterion.

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wzt_core::braid::{
    artin_equal, clone_braid, dehornoy_compare, handle_reduce, sigma_positivity, Positivity,
};
use wzt_core::free::{magnus_compare, magnus_expand, FreeWord};
use wzt_core::harness::{run_suite, Report, Suite, TrialConfig};
use wzt_core::instances::{random_braid, random_pure_braid};
use wzt_core::permutation::Permutation;
use wzt_core::pure_braid::{comb, purebraid_sign, TupleOrder};

const SEED: u64 = 20240601;
const INSTANCES: [&str; 5] = ["bv", "bf", "v", "f", "dirpow"];

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ (tag << 32))
}

fn suite(instance: &str, suite: Suite, trials: usize, max_degree: usize, max_len: usize) -> Report {
    let cfg = TrialConfig {
        instance: instance.into(),
        max_degree,
        max_len,
        trials,
        seed: SEED,
        suites: vec![suite],
    };
    run_suite(&cfg).unwrap_or_else(|e| panic!("{instance}: {e}"))
}

/// Names of failing properties among `names`, with their counterexamples.
fn failures(report: &Report, names: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for name in names {
        match report.property(name) {
            None => out.push(format!("{}: {name} missing", report.instance)),
            Some(p) if !p.holds() => out.push(format!(
                "{}: {name} failed {}/{}: {}",
                report.instance,
                p.failed,
                p.passed + p.failed,
                p.counterexample.as_deref().unwrap_or("")
            )),
            Some(p) if p.passed == 0 => out.push(format!("{}: {name} never ran", report.instance)),
            Some(_) => {}
        }
    }
    out
}

fn summarize(fails: Vec<String>, ok_text: String) -> Outcome {
    if fails.is_empty() {
        Outcome::new(true, ok_text)
    } else {
        Outcome::new(false, fails.join("; "))
    }
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let mut fails = Vec::new();
    for inst in INSTANCES {
        let r = suite(inst, Suite::Axioms, 1000, 7, 20);
        let mut names = vec!["axiom1", "axiom2", "axiom3"];
        if inst == "v" || inst == "f" {
            names.push("exhaustive_axioms");
        }
        fails.extend(failures(&r, &names));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        fails.push(format!("runtime {elapsed:.1?} exceeds 60 s"));
    }
    summarize(
        fails,
        format!("5 instances x 1000 trials, exhaustive v/f n<=4, {elapsed:.1?}"),
    )
}

/// Strand doubling: strand k splits into two parallel strands k, k+1 that
/// land on ρ(k), ρ(k)+1; every other endpoint shifts past the new strand.
fn strand_doubling(g: &Permutation, k: usize) -> Vec<usize> {
    let n = g.degree();
    let target = g.apply(k);
    let shift = |j: usize| if j > target { j + 1 } else { j };
    let mut images = vec![0; n + 1];
    for i in 1..=n {
        if i == k {
            images[k - 1] = target;
            images[k] = target + 1;
        } else {
            let src = if i < k { i } else { i + 1 };
            images[src - 1] = shift(g.apply(i));
        }
    }
    images
}

fn criterion2() -> Outcome {
    let mut cases = 0;
    let mut fails = Vec::new();
    for n in 1..=5 {
        for g in Permutation::all(n) {
            for k in 1..=n {
                cases += 1;
                let got = g.sigma_expand(k).unwrap();
                let want = strand_doubling(&g, k);
                if got.images() != want.as_slice() && fails.len() < 3 {
                    fails.push(format!("g={g} k={k}: {got} vs {want:?}"));
                }
            }
        }
    }
    summarize(fails, format!("{cases} cases exact"))
}

fn criterion3() -> Outcome {
    let mut r = rng(3);
    let mut fails = Vec::new();
    for _ in 0..500 {
        let n = r.gen_range(2..=6);
        let (a, b, c) = (
            random_braid(n, 20, &mut r),
            random_braid(n, 20, &mut r),
            random_braid(n, 20, &mut r),
        );
        let ab = dehornoy_compare(&a, &b).unwrap();
        let ba = dehornoy_compare(&b, &a).unwrap();
        if ab != ba.reverse() || (ab == Ordering::Equal) != artin_equal(&a, &b).unwrap() {
            fails.push(format!("trichotomy {a} {b}"));
        }
        let bc = dehornoy_compare(&b, &c).unwrap();
        let ac = dehornoy_compare(&a, &c).unwrap();
        if ab == bc && ac != ab {
            fails.push(format!("transitivity {a} {b} {c}"));
        }
    }
    for _ in 0..500 {
        let n = r.gen_range(2..=6);
        let (a, b, c) = (
            random_braid(n, 20, &mut r),
            random_braid(n, 20, &mut r),
            random_braid(n, 20, &mut r),
        );
        let base = dehornoy_compare(&a, &b).unwrap();
        let moved = dehornoy_compare(&c.concat(&a).unwrap(), &c.concat(&b).unwrap()).unwrap();
        if base != moved {
            fails.push(format!("left invariance {a} {b} {c}"));
        }
    }
    for _ in 0..1000 {
        let n = r.gen_range(2..=6);
        let w = random_braid(n, 20, &mut r);
        let h = handle_reduce(&w).unwrap();
        if h.has_handle() || !artin_equal(&h, &w).unwrap() {
            fails.push(format!("handle reduction {w} -> {h}"));
        }
    }
    fails.truncate(3);
    summarize(
        fails,
        "500 triples, 500 left-invariance, 1000 reductions".into(),
    )
}

fn criterion4() -> Outcome {
    let mut r = rng(4);
    let mut fails = Vec::new();
    let mut positive = 0;
    while positive < 500 {
        let n = r.gen_range(2..=6);
        let w = handle_reduce(&random_braid(n, 20, &mut r)).unwrap();
        let w = match sigma_positivity(&w).unwrap() {
            Positivity::Trivial => continue,
            Positivity::Negative => handle_reduce(&w.inverse()).unwrap(),
            Positivity::Positive => w,
        };
        if !w.satisfies_condition_d() {
            fails.push(format!("reduced word {w} is not (D)-positive"));
            continue;
        }
        positive += 1;
        for k in 1..=n {
            let c = clone_braid(n, k, &w).unwrap();
            if !c.satisfies_condition_d() || sigma_positivity(&c).unwrap() != Positivity::Positive {
                fails.push(format!("k={k} w={w} clones to {c}"));
            }
        }
    }
    let mut pure = 0;
    while pure < 300 {
        let n = r.gen_range(2..=5);
        let mut w = random_pure_braid(n, 20, &mut r);
        match purebraid_sign(&w, TupleOrder::default()).unwrap() {
            Ordering::Equal => continue,
            Ordering::Less => w = w.inverse(),
            Ordering::Greater => {}
        }
        pure += 1;
        for k in 1..=n {
            let c = w.clone_at(k).unwrap();
            if purebraid_sign(&c, TupleOrder::default()).unwrap() != Ordering::Greater {
                fails.push(format!("k={k} pure w={w} clones to {c}"));
            }
        }
    }
    fails.truncate(3);
    summarize(
        fails,
        "500 (D)-positive braids, 300 Magnus-positive pure braids, all k".into(),
    )
}

fn criterion5() -> Outcome {
    let mut fails = Vec::new();
    let bv = suite("bv", Suite::Order, 500, 6, 20);
    fails.extend(failures(
        &bv,
        &["cone_closure", "left_invariance", "trichotomy"],
    ));
    for inst in ["bf", "dirpow"] {
        let r = suite(inst, Suite::Order, 500, 6, 20);
        fails.extend(failures(
            &r,
            &["cone_closure", "left_invariance", "right_invariance"],
        ));
    }
    summarize(
        fails,
        "bv left order; bf, dirpow bi-invariant (500 trials each)".into(),
    )
}

fn criterion6() -> Outcome {
    let mut r = rng(6);
    let mut fails = Vec::new();
    for _ in 0..300 {
        let n = r.gen_range(2..=5);
        let w = random_pure_braid(n, 20, &mut r);
        let back = comb(&w).unwrap().recompose();
        if !artin_equal(&back, &w).unwrap() {
            fails.push(format!("{w} recomposes to {back}"));
        }
    }
    fails.truncate(3);
    summarize(fails, "300 pure braids".into())
}

fn random_free(rank: usize, r: &mut ChaCha8Rng) -> FreeWord {
    let len = r.gen_range(0..=20);
    let letters = (0..len)
        .map(|_| {
            let i = r.gen_range(1..=rank as i32);
            if r.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    FreeWord::new(rank, letters).unwrap()
}

fn criterion7() -> Outcome {
    let mut r = rng(7);
    let mut fails = Vec::new();
    for _ in 0..1000 {
        let rank = r.gen_range(1..=4);
        let (a, b, c) = (
            random_free(rank, &mut r),
            random_free(rank, &mut r),
            random_free(rank, &mut r),
        );
        let ab = magnus_compare(&a, &b).unwrap();
        if ab != magnus_compare(&b, &a).unwrap().reverse() {
            fails.push(format!("antisymmetry {a} {b}"));
        }
        if (ab == Ordering::Equal) != a.inverse().mul(&b).unwrap().free_reduce().is_empty() {
            fails.push(format!("equality {a} {b}"));
        }
        let left = magnus_compare(&c.mul(&a).unwrap(), &c.mul(&b).unwrap()).unwrap();
        let right = magnus_compare(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()).unwrap();
        if left != ab || right != ab {
            fails.push(format!("bi-invariance {a} {b} {c}"));
        }
    }
    for _ in 0..300 {
        let rank = r.gen_range(1..=4);
        let (a, b) = (random_free(rank, &mut r), random_free(rank, &mut r));
        let d = r.gen_range(1..=5);
        let whole = magnus_expand(&a.mul(&b).unwrap(), d).unwrap();
        let parts = magnus_expand(&a, d)
            .unwrap()
            .mul(&magnus_expand(&b, d).unwrap())
            .unwrap()
            .truncate(d);
        if whole != parts {
            fails.push(format!("multiplicativity {a} {b} at degree {d}"));
        }
    }
    fails.truncate(3);
    summarize(fails, "1000 pairs, 300 products".into())
}

fn criterion8() -> Outcome {
    let mut fails = Vec::new();
    for inst in INSTANCES {
        let r = suite(inst, Suite::Laws, 500, 6, 20);
        fails.extend(failures(
            &r,
            &[
                "associativity",
                "identity",
                "inverse",
                "expansion_equivalence",
            ],
        ));
    }
    summarize(fails, "5 instances x 500 trials".into())
}

fn criterion9() -> Outcome {
    let mut fails = Vec::new();
    let bv = suite("bv", Suite::Structure, 300, 6, 20);
    fails.extend(failures(&bv, &["project_homomorphism", "conjugacy"]));
    for inst in ["bf", "dirpow"] {
        let r = suite(inst, Suite::Structure, 300, 6, 20);
        fails.extend(failures(&r, &["semidirect_factorization", "conjugacy"]));
    }
    summarize(
        fails,
        "300 BV pairs, 300 BF and dirpow factorizations, conjugacy".into(),
    )
}

fn criterion10() -> Outcome {
    let mut fails = Vec::new();
    for inst in INSTANCES {
        for s in [Suite::Axioms, Suite::Laws] {
            let a = suite(inst, s, 60, 5, 12);
            let b = suite(inst, s, 60, 5, 12);
            if a.to_text() != b.to_text() || a.to_json() != b.to_json() {
                fails.push(format!("{inst} {s} reports differ"));
            }
        }
    }
    summarize(fails, "byte-identical text and JSON reports".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cloning axioms", criterion1),
        ("sigma expansion oracle", criterion2),
        ("Dehornoy order", criterion3),
        ("compatibility lemmas", criterion4),
        ("positive cone and invariance", criterion5),
        ("combing oracle", criterion6),
        ("Magnus order", criterion7),
        ("group laws", criterion8),
        ("structure maps", criterion9),
        ("determinism", criterion10),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        all &= out.ok;
        println!(
            "criterion {:>2} {:<30} {} ({}; {:.1?})",
            i + 1,
            name,
            if out.ok { "PASS" } else { "FAIL" },
            out.detail,
            start.elapsed()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
