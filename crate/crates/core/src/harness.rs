//! Randomized property suites over the shipped instances.
//!
//! Every trial draws from its own ChaCha stream derived from (seed, property,
//! trial), so reports depend on the configuration alone. Trials run in
//! parallel; results are merged in trial order.

use std::cmp::Ordering;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cloning::{
    check_axiom1, check_axiom2, check_axiom3, check_clone_inverse, check_group_laws,
    check_injectivity, check_order_compatibility, check_rho_homomorphism, element_sign, Check,
    CloningSystem, OrderKind,
};
use crate::error::{Result, WztError};
use crate::instances::AnyInstance;
use crate::tree::BinaryTree;
use crate::with_instance;
use crate::wzt::{Sign, TreeDiagram, Wzt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Order,
    Laws,
    Structure,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Axioms, Suite::Order, Suite::Laws, Suite::Structure];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Axioms => "axioms",
            Suite::Order => "order",
            Suite::Laws => "laws",
            Suite::Structure => "structure",
        })
    }
}

impl FromStr for Suite {
    type Err = WztError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "order" => Ok(Suite::Order),
            "laws" => Ok(Suite::Laws),
            "structure" => Ok(Suite::Structure),
            other => Err(WztError::InvalidConfig(format!("unknown suite `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialConfig {
    pub instance: String,
    /// Degrees are drawn from 1..=max_degree.
    pub max_degree: usize,
    /// Bound on word-like middle elements.
    pub max_len: usize,
    pub trials: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
}

impl TrialConfig {
    pub fn new(instance: &str, suite: Suite) -> Self {
        TrialConfig {
            instance: instance.into(),
            max_degree: 6,
            max_len: 20,
            trials: 100,
            seed: 0,
            suites: vec![suite],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_degree == 0 {
            return Err(WztError::InvalidConfig(
                "max degree must be at least 1".into(),
            ));
        }
        if self.suites.is_empty() {
            return Err(WztError::InvalidConfig("no suite selected".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub suite: Suite,
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// Trials whose random draw missed the property's precondition.
    pub skipped: usize,
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub instance: String,
    pub order_kind: OrderKind,
    pub pure: bool,
    pub seed: u64,
    pub trials: usize,
    pub max_degree: usize,
    pub max_len: usize,
    pub properties: Vec<PropertyReport>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::holds)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "instance: {}", self.instance);
        let _ = writeln!(out, "order_kind: {}  pure: {}", self.order_kind, self.pure);
        let _ = writeln!(
            out,
            "seed: {}  trials: {}  max_degree: {}  max_len: {}",
            self.seed, self.trials, self.max_degree, self.max_len
        );
        for p in &self.properties {
            let total = p.passed + p.failed;
            let verdict = if p.holds() { "pass" } else { "FAIL" };
            let _ = write!(
                out,
                "[{}] {:<24} {verdict} {}/{}",
                p.suite, p.name, p.passed, total
            );
            if p.skipped > 0 {
                let _ = write!(out, " (skipped {})", p.skipped);
            }
            out.push('\n');
            if let Some(c) = &p.counterexample {
                let _ = writeln!(out, "  counterexample: {c}");
            }
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.all_passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

impl Outcome {
    fn from_check(c: Check) -> Outcome {
        match c.violation {
            None if c.holds => Outcome::Pass,
            Some(v) => Outcome::Fail(v.to_string()),
            None => Outcome::Fail("check failed".into()),
        }
    }

    fn expect(ok: bool, what: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(what())
        }
    }
}

struct Ctx<S> {
    w: Wzt<S>,
    max_degree: usize,
    max_len: usize,
}

impl<S: CloningSystem> Ctx<S> {
    fn sys(&self) -> &S {
        self.w.system()
    }

    fn degree(&self, rng: &mut ChaCha8Rng) -> usize {
        rng.gen_range(1..=self.max_degree)
    }

    fn element(&self, n: usize, rng: &mut ChaCha8Rng) -> S::Element {
        self.sys().random(n, self.max_len, rng)
    }

    fn fmt(&self, g: &S::Element) -> String {
        self.sys().format(g)
    }

    fn fmt_d(&self, d: &TreeDiagram<S::Element>) -> String {
        self.w.format(d)
    }

    /// A diagram that is general, has equal trees, or has trivial middle,
    /// each with probability 1/3.
    fn diagram(&self, rng: &mut ChaCha8Rng) -> TreeDiagram<S::Element> {
        let n = self.degree(rng);
        let d = self.w.random_diagram(n, self.max_len, rng);
        let (left, middle, right) = d.into_parts();
        let (middle, right) = match rng.gen_range(0..3) {
            0 => (middle, right),
            1 => (middle, left.clone()),
            _ => (self.sys().identity(n), right),
        };
        self.w.diagram(left, middle, right).expect("degrees agree")
    }

    /// A positive diagram; `None` when every draw was the identity.
    fn positive_diagram(&self, rng: &mut ChaCha8Rng) -> Result<Option<TreeDiagram<S::Element>>> {
        for _ in 0..RESAMPLE {
            let d = self.diagram(rng);
            match self.w.sign(&d)? {
                Sign::Positive => return Ok(Some(d)),
                Sign::Negative => return Ok(Some(self.w.invert(&d))),
                Sign::Zero => {}
            }
        }
        Ok(None)
    }

    /// A positive element of G_n for some drawn n; `None` when every draw
    /// was the identity.
    fn positive_element(&self, rng: &mut ChaCha8Rng) -> Result<Option<S::Element>> {
        for _ in 0..RESAMPLE {
            let n = self.degree(rng);
            let g = self.element(n, rng);
            match element_sign(self.sys(), &g)? {
                Ordering::Greater => return Ok(Some(g)),
                Ordering::Less => return Ok(Some(self.sys().invert(&g))),
                Ordering::Equal => {}
            }
        }
        Ok(None)
    }
}

/// Draws allowed before a trial needing a nontrivial element is skipped.
const RESAMPLE: usize = 16;

type TrialFn<S> = fn(&Ctx<S>, &mut ChaCha8Rng, &mut String) -> Result<Outcome>;
type ExhaustiveFn<S> = fn(&Ctx<S>) -> Result<Vec<Outcome>>;

enum Body<S> {
    Random(TrialFn<S>),
    Exhaustive(ExhaustiveFn<S>),
}

struct Property<S> {
    suite: Suite,
    name: &'static str,
    body: Body<S>,
}

fn random<S>(suite: Suite, name: &'static str, f: TrialFn<S>) -> Property<S> {
    Property {
        suite,
        name,
        body: Body::Random(f),
    }
}

// ---- axioms ----

fn axiom1<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let (g, h) = (cx.element(n, rng), cx.element(n, rng));
    let k = rng.gen_range(1..=n);
    *inputs = format!("k={k} g={} h={}", cx.fmt(&g), cx.fmt(&h));
    check_axiom1(cx.sys(), k, &g, &h).map(Outcome::from_check)
}

fn axiom2<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    if cx.max_degree < 2 {
        return Ok(Outcome::Skip);
    }
    let n = rng.gen_range(2..=cx.max_degree);
    let g = cx.element(n, rng);
    let l = rng.gen_range(2..=n);
    let k = rng.gen_range(1..l);
    *inputs = format!("k={k} l={l} g={}", cx.fmt(&g));
    check_axiom2(cx.sys(), k, l, &g).map(Outcome::from_check)
}

fn axiom3<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let g = cx.element(n, rng);
    let k = rng.gen_range(1..=n);
    *inputs = format!("k={k} g={}", cx.fmt(&g));
    check_axiom3(cx.sys(), k, &g).map(Outcome::from_check)
}

fn clone_identity<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let k = rng.gen_range(1..=n);
    *inputs = format!("n={n} k={k}");
    let c = cx.sys().clone_at(k, &cx.sys().identity(n))?;
    let ok = cx.sys().equal(&c, &cx.sys().identity(n + 1))?;
    Ok(Outcome::expect(ok, || {
        format!("n={n} k={k}: clone of 1 is {}", cx.fmt(&c))
    }))
}

fn clone_inverse<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let g = cx.element(n, rng);
    let k = rng.gen_range(1..=n);
    *inputs = format!("k={k} g={}", cx.fmt(&g));
    check_clone_inverse(cx.sys(), k, &g).map(Outcome::from_check)
}

fn injectivity<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let g = cx.element(n, rng);
    // h = g·x with x short, so that near misses are exercised.
    let x = cx.sys().random(n, 3, rng);
    let h = cx.sys().multiply(&g, &x)?;
    let k = rng.gen_range(1..=n);
    *inputs = format!("k={k} g={} h={}", cx.fmt(&g), cx.fmt(&h));
    check_injectivity(cx.sys(), k, &g, &h).map(Outcome::from_check)
}

fn rho_homomorphism<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let (g, h) = (cx.element(n, rng), cx.element(n, rng));
    *inputs = format!("g={} h={}", cx.fmt(&g), cx.fmt(&h));
    check_rho_homomorphism(cx.sys(), &g, &h).map(Outcome::from_check)
}

fn group_laws<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let (a, b, c) = (cx.element(n, rng), cx.element(n, rng), cx.element(n, rng));
    *inputs = format!("a={} b={} c={}", cx.fmt(&a), cx.fmt(&b), cx.fmt(&c));
    check_group_laws(cx.sys(), &a, &b, &c).map(Outcome::from_check)
}

fn compatibility<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let Some(g) = cx.positive_element(rng)? else {
        return Ok(Outcome::Skip);
    };
    let k = rng.gen_range(1..=cx.sys().degree(&g));
    *inputs = format!("k={k} g={}", cx.fmt(&g));
    check_order_compatibility(cx.sys(), k, &g).map(Outcome::from_check)
}

/// Axioms (1)–(3) over every element of G_n for n ≤ 4.
fn exhaustive_axioms<S: CloningSystem>(cx: &Ctx<S>) -> Result<Vec<Outcome>> {
    let sys = cx.sys();
    let mut out = Vec::new();
    for n in 1..=4 {
        let Some(all) = sys.enumerate(n) else {
            continue;
        };
        for g in &all {
            for k in 1..=n {
                out.push(Outcome::from_check(check_axiom3(sys, k, g)?));
                for l in k + 1..=n {
                    out.push(Outcome::from_check(check_axiom2(sys, k, l, g)?));
                }
                for h in &all {
                    out.push(Outcome::from_check(check_axiom1(sys, k, g, h)?));
                }
            }
        }
    }
    Ok(out)
}

// ---- order ----

fn expansion_invariance<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let d = cx.diagram(rng);
    let k = rng.gen_range(1..=d.degree());
    *inputs = format!("k={k} d={}", cx.fmt_d(&d));
    let (s, t) = (cx.w.sign(&d)?, cx.w.sign(&cx.w.simple_expand(&d, k)?)?);
    Ok(Outcome::expect(s == t, || {
        format!("{inputs}: sign {s} becomes {t} after expansion")
    }))
}

fn cone_closure<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let (Some(a), Some(b)) = (cx.positive_diagram(rng)?, cx.positive_diagram(rng)?) else {
        return Ok(Outcome::Skip);
    };
    *inputs = format!("a={} b={}", cx.fmt_d(&a), cx.fmt_d(&b));
    let ab = cx.w.multiply(&a, &b)?;
    let s = cx.w.sign(&ab)?;
    Ok(Outcome::expect(s == Sign::Positive, || {
        format!("{inputs}: ab has sign {s}")
    }))
}

fn trichotomy<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let d = cx.diagram(rng);
    *inputs = format!("d={}", cx.fmt_d(&d));
    let s = cx.w.sign(&d)?;
    let si = cx.w.sign(&cx.w.invert(&d))?;
    let zero_iff_identity = (s == Sign::Zero) == cx.w.is_identity(&d)?;
    let opposite = s.to_ordering() == si.to_ordering().reverse();
    Ok(Outcome::expect(zero_iff_identity && opposite, || {
        format!("{inputs}: sign(d)={s} sign(d^-1)={si}")
    }))
}

fn transitivity<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let (a, b, c) = (cx.diagram(rng), cx.diagram(rng), cx.diagram(rng));
    *inputs = format!("a={} b={} c={}", cx.fmt_d(&a), cx.fmt_d(&b), cx.fmt_d(&c));
    let (ab, bc, ac) = (
        cx.w.compare(&a, &b)?,
        cx.w.compare(&b, &c)?,
        cx.w.compare(&a, &c)?,
    );
    // When ab and bc point the same way (or one is equal), ac must follow.
    let ok = if ab == bc || bc == Ordering::Equal {
        ac == ab
    } else if ab == Ordering::Equal {
        ac == bc
    } else {
        true
    };
    Ok(Outcome::expect(ok, || {
        format!("{inputs}: {ab:?}, {bc:?} but {ac:?}")
    }))
}

fn left_invariance<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let (a, b, c) = (cx.diagram(rng), cx.diagram(rng), cx.diagram(rng));
    *inputs = format!("a={} b={} c={}", cx.fmt_d(&a), cx.fmt_d(&b), cx.fmt_d(&c));
    let base = cx.w.compare(&a, &b)?;
    let moved =
        cx.w.compare(&cx.w.multiply(&c, &a)?, &cx.w.multiply(&c, &b)?)?;
    Ok(Outcome::expect(base == moved, || {
        format!("{inputs}: {base:?} vs {moved:?}")
    }))
}

fn right_invariance<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let (a, b, c) = (cx.diagram(rng), cx.diagram(rng), cx.diagram(rng));
    *inputs = format!("a={} b={} c={}", cx.fmt_d(&a), cx.fmt_d(&b), cx.fmt_d(&c));
    let base = cx.w.compare(&a, &b)?;
    let moved =
        cx.w.compare(&cx.w.multiply(&a, &c)?, &cx.w.multiply(&b, &c)?)?;
    Ok(Outcome::expect(base == moved, || {
        format!("{inputs}: {base:?} vs {moved:?}")
    }))
}

// ---- laws ----

fn associativity<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let (a, b, c) = (cx.diagram(rng), cx.diagram(rng), cx.diagram(rng));
    *inputs = format!("a={} b={} c={}", cx.fmt_d(&a), cx.fmt_d(&b), cx.fmt_d(&c));
    let l = cx.w.multiply(&cx.w.multiply(&a, &b)?, &c)?;
    let r = cx.w.multiply(&a, &cx.w.multiply(&b, &c)?)?;
    let ok = cx.w.equals(&l, &r)?;
    Ok(Outcome::expect(ok, || {
        format!("{inputs}: {} vs {}", cx.fmt_d(&l), cx.fmt_d(&r))
    }))
}

fn identity_law<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let a = cx.diagram(rng);
    let n = cx.degree(rng);
    let one = cx.w.identity_on(&BinaryTree::random(n, rng));
    *inputs = format!("a={} one={}", cx.fmt_d(&a), cx.fmt_d(&one));
    let ok = cx.w.equals(&cx.w.multiply(&a, &one)?, &a)?
        && cx.w.equals(&cx.w.multiply(&one, &a)?, &a)?
        && cx.w.equals(&cx.w.multiply(&a, &cx.w.identity())?, &a)?;
    Ok(Outcome::expect(ok, || inputs.clone()))
}

fn inverse_law<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let a = cx.diagram(rng);
    *inputs = format!("a={}", cx.fmt_d(&a));
    let ai = cx.w.invert(&a);
    let ok = cx.w.is_identity(&cx.w.multiply(&a, &ai)?)?
        && cx.w.is_identity(&cx.w.multiply(&ai, &a)?)?
        && cx.w.equals(&cx.w.invert(&ai), &a)?;
    Ok(Outcome::expect(ok, || inputs.clone()))
}

fn expansion_equivalence<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let d = cx.diagram(rng);
    *inputs = format!("d={}", cx.fmt_d(&d));
    for k in 1..=d.degree() {
        let e = cx.w.simple_expand(&d, k)?;
        if !cx.w.equals(&d, &e)? || !cx.w.equals(&e, &d)? {
            return Ok(Outcome::Fail(format!(
                "{inputs} k={k}: expansion {} differs",
                cx.fmt_d(&e)
            )));
        }
    }
    Ok(Outcome::Pass)
}

// ---- structure ----

fn project_homomorphism<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let (a, b) = (cx.diagram(rng), cx.diagram(rng));
    *inputs = format!("a={} b={}", cx.fmt_d(&a), cx.fmt_d(&b));
    let v = Wzt::v();
    let lhs = cx.w.project(&cx.w.multiply(&a, &b)?);
    let rhs = v.multiply(&cx.w.project(&a), &cx.w.project(&b))?;
    let ok = v.equals(&lhs, &rhs)?;
    Ok(Outcome::expect(ok, || {
        format!("{inputs}: {} vs {}", v.format(&lhs), v.format(&rhs))
    }))
}

fn semidirect_factorization<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let d = cx.diagram(rng);
    *inputs = format!("d={}", cx.fmt_d(&d));
    let k = cx.w.kernel_part(&d)?;
    let f = cx.w.f_part(&d)?;
    let ok = cx.w.kernel_member(&k) && cx.w.equals(&d, &cx.w.multiply(&k, &f)?)?;
    Ok(Outcome::expect(ok, || {
        format!(
            "{inputs}: kernel part {} and F part {}",
            cx.fmt_d(&k),
            cx.fmt_d(&f)
        )
    }))
}

fn conjugacy<S: CloningSystem>(
    cx: &Ctx<S>,
    rng: &mut ChaCha8Rng,
    inputs: &mut String,
) -> Result<Outcome> {
    let n = cx.degree(rng);
    let (t, t2) = (BinaryTree::random(n, rng), BinaryTree::random(n, rng));
    let g = cx.element(n, rng);
    *inputs = format!("T={t} T'={t2} g={}", cx.fmt(&g));
    let sys = cx.sys();
    let a = cx.w.diagram(t.clone(), sys.identity(n), t2.clone())?;
    let b = cx.w.diagram(t2.clone(), g.clone(), t2.clone())?;
    let c = cx.w.diagram(t2, sys.identity(n), t.clone())?;
    let lhs = cx.w.multiply(&cx.w.multiply(&a, &b)?, &c)?;
    let rhs = cx.w.diagram(t.clone(), g, t)?;
    let ok = cx.w.equals(&lhs, &rhs)?;
    Ok(Outcome::expect(ok, || {
        format!("{inputs}: got {}", cx.fmt_d(&lhs))
    }))
}

fn properties<S: CloningSystem>(sys: &S, suites: &[Suite]) -> Result<Vec<Property<S>>> {
    let ordered = sys.order_kind() != OrderKind::None;
    let mut out = Vec::new();
    for &suite in suites {
        match suite {
            Suite::Axioms => {
                out.push(random(suite, "axiom1", axiom1::<S>));
                out.push(random(suite, "axiom2", axiom2::<S>));
                out.push(random(suite, "axiom3", axiom3::<S>));
                out.push(random(suite, "clone_identity", clone_identity::<S>));
                out.push(random(suite, "clone_inverse", clone_inverse::<S>));
                out.push(random(suite, "injectivity", injectivity::<S>));
                out.push(random(suite, "rho_homomorphism", rho_homomorphism::<S>));
                out.push(random(suite, "group_laws", group_laws::<S>));
                if ordered {
                    out.push(random(suite, "compatibility", compatibility::<S>));
                }
                if sys.enumerate(1).is_some() {
                    out.push(Property {
                        suite,
                        name: "exhaustive_axioms",
                        body: Body::Exhaustive(exhaustive_axioms::<S>),
                    });
                }
            }
            Suite::Order => {
                if !ordered {
                    return Err(WztError::Unordered(sys.name()));
                }
                out.push(random(suite, "compatibility", compatibility::<S>));
                out.push(random(
                    suite,
                    "expansion_invariance",
                    expansion_invariance::<S>,
                ));
                out.push(random(suite, "cone_closure", cone_closure::<S>));
                out.push(random(suite, "trichotomy", trichotomy::<S>));
                out.push(random(suite, "transitivity", transitivity::<S>));
                out.push(random(suite, "left_invariance", left_invariance::<S>));
                if sys.is_pure() && sys.order_kind() == OrderKind::Bi {
                    out.push(random(suite, "right_invariance", right_invariance::<S>));
                }
            }
            Suite::Laws => {
                out.push(random(suite, "associativity", associativity::<S>));
                out.push(random(suite, "identity", identity_law::<S>));
                out.push(random(suite, "inverse", inverse_law::<S>));
                out.push(random(
                    suite,
                    "expansion_equivalence",
                    expansion_equivalence::<S>,
                ));
            }
            Suite::Structure => {
                out.push(random(
                    suite,
                    "project_homomorphism",
                    project_homomorphism::<S>,
                ));
                if sys.is_pure() {
                    out.push(random(
                        suite,
                        "semidirect_factorization",
                        semidirect_factorization::<S>,
                    ));
                }
                out.push(random(suite, "conjugacy", conjugacy::<S>));
            }
        }
    }
    Ok(out)
}

/// SplitMix64 finalizer, used to derive independent per-trial seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn trial_rng(seed: u64, property: usize, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(mix(mix(seed) ^ property as u64) ^ trial as u64))
}

fn tally(suite: Suite, name: &str, outcomes: Vec<Outcome>) -> PropertyReport {
    let mut report = PropertyReport {
        suite,
        name: name.into(),
        passed: 0,
        failed: 0,
        skipped: 0,
        counterexample: None,
    };
    for o in outcomes {
        match o {
            Outcome::Pass => report.passed += 1,
            Outcome::Skip => report.skipped += 1,
            Outcome::Fail(c) => {
                report.failed += 1;
                report.counterexample.get_or_insert(c);
            }
        }
    }
    report
}

/// Runs the configured suites on an explicit system. `cfg.instance` is only
/// echoed into the report.
pub fn run_suite_on<S: CloningSystem>(sys: S, cfg: &TrialConfig) -> Result<Report> {
    cfg.validate()?;
    let props = properties(&sys, &cfg.suites)?;
    let cx = Ctx {
        w: Wzt::new(sys),
        max_degree: cfg.max_degree,
        max_len: cfg.max_len,
    };
    let mut reports = Vec::with_capacity(props.len());
    for (index, prop) in props.iter().enumerate() {
        let outcomes = match prop.body {
            Body::Random(f) => (0..cfg.trials)
                .into_par_iter()
                .map(|trial| {
                    let mut rng = trial_rng(cfg.seed, index, trial);
                    let mut inputs = String::new();
                    f(&cx, &mut rng, &mut inputs)
                        .unwrap_or_else(|e| Outcome::Fail(format!("{inputs}: error: {e}")))
                })
                .collect(),
            Body::Exhaustive(f) => {
                f(&cx).unwrap_or_else(|e| vec![Outcome::Fail(format!("error: {e}"))])
            }
        };
        reports.push(tally(prop.suite, prop.name, outcomes));
    }
    let sys = cx.sys();
    Ok(Report {
        instance: sys.name(),
        order_kind: sys.order_kind(),
        pure: sys.is_pure(),
        seed: cfg.seed,
        trials: cfg.trials,
        max_degree: cfg.max_degree,
        max_len: cfg.max_len,
        properties: reports,
    })
}

/// Runs the configured suites on the instance named in `cfg`.
pub fn run_suite(cfg: &TrialConfig) -> Result<Report> {
    let inst = AnyInstance::from_name(&cfg.instance)?;
    with_instance!(inst, sys => run_suite_on(sys, cfg))
}
