//! The cloning-system contract and executable checks of its axioms.
//!
//! An instance supplies groups G_n (elements carry their degree n), a
//! homomorphism ρ_n: G_n → 𝔖_n and cloning maps κ_n^k: G_n → G_{n+1}. Group
//! products read left to right, so ρ is a homomorphism for
//! [`Permutation::then`]. The axioms checked here:
//!
//! 1. κ^k(gh) = κ^k(g) κ^{ρ(g)k}(h)
//! 2. κ_{n+1}^k ∘ κ_n^l = κ_{n+1}^{l+1} ∘ κ_n^k for k < l
//! 3. ρ(κ^k(g)) = ς^k(ρ(g)) or s_k ∘ ς^k(ρ(g))

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{check_index, Result, WztError};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    None,
    Left,
    Bi,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::None => "none",
            OrderKind::Left => "left",
            OrderKind::Bi => "bi",
        })
    }
}

pub trait CloningSystem: Send + Sync {
    type Element: Clone + fmt::Debug + Send + Sync;

    /// Registry name, e.g. `bv`.
    fn name(&self) -> String;

    fn identity(&self, n: usize) -> Self::Element;

    fn degree(&self, g: &Self::Element) -> usize;

    fn multiply(&self, g: &Self::Element, h: &Self::Element) -> Result<Self::Element>;

    fn invert(&self, g: &Self::Element) -> Self::Element;

    /// Equality as group elements. The single source of truth for identity of
    /// elements; representations are not normalized.
    fn equal(&self, g: &Self::Element, h: &Self::Element) -> Result<bool>;

    fn rho(&self, g: &Self::Element) -> Permutation;

    /// κ_n^k with n = degree(g).
    fn clone_at(&self, k: usize, g: &Self::Element) -> Result<Self::Element>;

    /// `Some(Less)` if g < h. `Ok(None)` for unordered instances.
    fn compare(&self, g: &Self::Element, h: &Self::Element) -> Result<Option<Ordering>>;

    fn is_pure(&self) -> bool;

    fn order_kind(&self) -> OrderKind;

    /// Text form in the instance grammar.
    fn format(&self, g: &Self::Element) -> String;

    /// Parses the instance grammar. `degree` comes from the surrounding
    /// diagram, for grammars that do not state it.
    fn parse(&self, text: &str, degree: usize) -> Result<Self::Element>;

    /// Random element of degree n; `max_len` bounds word-like representations.
    fn random<R: Rng + ?Sized>(&self, n: usize, max_len: usize, rng: &mut R) -> Self::Element;

    /// All elements of degree n, for finite instances.
    fn enumerate(&self, _n: usize) -> Option<Vec<Self::Element>> {
        None
    }
}

/// Which side of axiom (3) matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom3Branch {
    Plain,
    Twisted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.inputs, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub violation: Option<Violation>,
    pub branch: Option<Axiom3Branch>,
}

impl Check {
    fn pass() -> Self {
        Check {
            holds: true,
            violation: None,
            branch: None,
        }
    }

    fn fail(inputs: String, lhs: String, rhs: String) -> Self {
        Check {
            holds: false,
            violation: Some(Violation { inputs, lhs, rhs }),
            branch: None,
        }
    }
}

fn require_degree<S: CloningSystem>(sys: &S, g: &S::Element, h: &S::Element) -> Result<usize> {
    let (a, b) = (sys.degree(g), sys.degree(h));
    if a != b {
        return Err(WztError::DegreeMismatch { left: a, right: b });
    }
    Ok(a)
}

pub fn check_axiom1<S: CloningSystem>(
    sys: &S,
    k: usize,
    g: &S::Element,
    h: &S::Element,
) -> Result<Check> {
    let n = require_degree(sys, g, h)?;
    check_index(k, n)?;
    let lhs = sys.clone_at(k, &sys.multiply(g, h)?)?;
    let threaded = sys.rho(g).apply(k);
    let rhs = sys.multiply(&sys.clone_at(k, g)?, &sys.clone_at(threaded, h)?)?;
    if sys.equal(&lhs, &rhs)? {
        Ok(Check::pass())
    } else {
        Ok(Check::fail(
            format!("n={n} k={k} g={} h={}", sys.format(g), sys.format(h)),
            sys.format(&lhs),
            sys.format(&rhs),
        ))
    }
}

pub fn check_axiom2<S: CloningSystem>(
    sys: &S,
    k: usize,
    l: usize,
    g: &S::Element,
) -> Result<Check> {
    let n = sys.degree(g);
    check_index(l, n)?;
    if k == 0 || k >= l {
        return Err(WztError::InvalidConfig(format!(
            "axiom (2) needs 1 <= k < l, got k={k} l={l}"
        )));
    }
    let lhs = sys.clone_at(k, &sys.clone_at(l, g)?)?;
    let rhs = sys.clone_at(l + 1, &sys.clone_at(k, g)?)?;
    if sys.equal(&lhs, &rhs)? {
        Ok(Check::pass())
    } else {
        Ok(Check::fail(
            format!("n={n} k={k} l={l} g={}", sys.format(g)),
            sys.format(&lhs),
            sys.format(&rhs),
        ))
    }
}

pub fn check_axiom3<S: CloningSystem>(sys: &S, k: usize, g: &S::Element) -> Result<Check> {
    let n = sys.degree(g);
    check_index(k, n)?;
    let cloned = sys.rho(&sys.clone_at(k, g)?);
    let plain = sys.rho(g).sigma_expand(k)?;
    if cloned == plain {
        return Ok(Check {
            branch: Some(Axiom3Branch::Plain),
            ..Check::pass()
        });
    }
    let twisted = Permutation::compose(&Permutation::transposition(n + 1, k)?, &plain)?;
    if cloned == twisted {
        return Ok(Check {
            branch: Some(Axiom3Branch::Twisted),
            ..Check::pass()
        });
    }
    Ok(Check::fail(
        format!("n={n} k={k} g={}", sys.format(g)),
        cloned.to_string(),
        format!("{plain} or {twisted}"),
    ))
}

/// Sign of g against the identity (`Greater` means 1 < g).
pub fn element_sign<S: CloningSystem>(sys: &S, g: &S::Element) -> Result<Ordering> {
    let one = sys.identity(sys.degree(g));
    match sys.compare(&one, g)? {
        Some(o) => Ok(o.reverse()),
        None => Err(WztError::Unordered(sys.name())),
    }
}

/// For positive g, checks that κ^k(g) stays positive.
pub fn check_order_compatibility<S: CloningSystem>(
    sys: &S,
    k: usize,
    g: &S::Element,
) -> Result<Check> {
    if sys.order_kind() == OrderKind::None {
        return Err(WztError::Unordered(sys.name()));
    }
    let n = sys.degree(g);
    check_index(k, n)?;
    if element_sign(sys, g)? != Ordering::Greater {
        return Err(WztError::NotPositive);
    }
    let cloned = sys.clone_at(k, g)?;
    let s = element_sign(sys, &cloned)?;
    if s == Ordering::Greater {
        Ok(Check::pass())
    } else {
        Ok(Check::fail(
            format!("n={n} k={k} g={}", sys.format(g)),
            format!("sign(clone) = {s:?}"),
            "Greater".into(),
        ))
    }
}

/// κ^k(g)^{-1} = κ^{ρ(g)k}(g^{-1}), the consequence of axiom (1) that makes
/// positivity of the middle element independent of the representative.
pub fn check_clone_inverse<S: CloningSystem>(sys: &S, k: usize, g: &S::Element) -> Result<Check> {
    let n = sys.degree(g);
    check_index(k, n)?;
    let lhs = sys.invert(&sys.clone_at(k, g)?);
    let rhs = sys.clone_at(sys.rho(g).apply(k), &sys.invert(g))?;
    if sys.equal(&lhs, &rhs)? {
        Ok(Check::pass())
    } else {
        Ok(Check::fail(
            format!("n={n} k={k} g={}", sys.format(g)),
            sys.format(&lhs),
            sys.format(&rhs),
        ))
    }
}

/// ρ(gh) = ρ(g) then ρ(h).
pub fn check_rho_homomorphism<S: CloningSystem>(
    sys: &S,
    g: &S::Element,
    h: &S::Element,
) -> Result<Check> {
    require_degree(sys, g, h)?;
    let lhs = sys.rho(&sys.multiply(g, h)?);
    let rhs = sys.rho(g).then(&sys.rho(h))?;
    if lhs == rhs {
        Ok(Check::pass())
    } else {
        Ok(Check::fail(
            format!("g={} h={}", sys.format(g), sys.format(h)),
            lhs.to_string(),
            rhs.to_string(),
        ))
    }
}

/// Distinct elements must clone to distinct elements.
pub fn check_injectivity<S: CloningSystem>(
    sys: &S,
    k: usize,
    g: &S::Element,
    h: &S::Element,
) -> Result<Check> {
    require_degree(sys, g, h)?;
    if sys.equal(g, h)? {
        return Ok(Check::pass());
    }
    let (cg, ch) = (sys.clone_at(k, g)?, sys.clone_at(k, h)?);
    if sys.equal(&cg, &ch)? {
        Ok(Check::fail(
            format!("k={k} g={} h={}", sys.format(g), sys.format(h)),
            sys.format(&cg),
            sys.format(&ch),
        ))
    } else {
        Ok(Check::pass())
    }
}

/// Associativity, identity and inverse laws for one triple in G_n.
pub fn check_group_laws<S: CloningSystem>(
    sys: &S,
    a: &S::Element,
    b: &S::Element,
    c: &S::Element,
) -> Result<Check> {
    let n = require_degree(sys, a, b)?;
    require_degree(sys, b, c)?;
    let one = sys.identity(n);
    let ab_c = sys.multiply(&sys.multiply(a, b)?, c)?;
    let a_bc = sys.multiply(a, &sys.multiply(b, c)?)?;
    let inputs = || {
        format!(
            "a={} b={} c={}",
            sys.format(a),
            sys.format(b),
            sys.format(c)
        )
    };
    if !sys.equal(&ab_c, &a_bc)? {
        return Ok(Check::fail(inputs(), sys.format(&ab_c), sys.format(&a_bc)));
    }
    if !sys.equal(&sys.multiply(a, &one)?, a)? || !sys.equal(&sys.multiply(&one, a)?, a)? {
        return Ok(Check::fail(inputs(), "a*1 or 1*a".into(), sys.format(a)));
    }
    let inv = sys.multiply(a, &sys.invert(a))?;
    if !sys.equal(&inv, &one)? {
        return Ok(Check::fail(inputs(), sys.format(&inv), sys.format(&one)));
    }
    Ok(Check::pass())
}
