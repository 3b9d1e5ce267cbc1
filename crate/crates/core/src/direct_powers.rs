//! Cloning systems on direct powers G^n of an ordered base group.
//!
//! κ^k(g_1, …, g_n) = (g_1, …, φ₁(g_k), φ₂(g_k), …, g_n) and ρ is trivial.
//! G^n carries the lexicographic order induced by the base order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::cloning::{CloningSystem, OrderKind};
use crate::error::{check_index, Result, WztError};
use crate::permutation::Permutation;
use crate::syntax::{header, Cursor};

/// A totally ordered group, written additively in the element grammar.
pub trait OrderedGroup: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    /// Short tag used in instance names, e.g. `int`.
    fn tag(&self) -> &'static str;

    /// Letter in the element grammar header, e.g. `z` in `z^3: (…)`.
    fn symbol(&self) -> &'static str;

    fn zero(&self) -> Self::Elem;

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn inverse(&self, a: &Self::Elem) -> Self::Elem;

    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    /// Whether the order is invariant under multiplication on both sides.
    fn bi_invariant(&self) -> bool;

    /// Parses one coordinate token.
    fn parse_elem(&self, token: &str) -> Option<Self::Elem>;

    fn format_elem(&self, a: &Self::Elem) -> String;

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}

/// (Z, +) with the natural order.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl OrderedGroup for Integers {
    type Elem = i64;

    fn tag(&self) -> &'static str {
        "int"
    }

    fn symbol(&self) -> &'static str {
        "z"
    }

    fn zero(&self) -> i64 {
        0
    }

    fn op(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn inverse(&self, a: &i64) -> i64 {
        -a
    }

    fn compare(&self, a: &i64, b: &i64) -> Ordering {
        a.cmp(b)
    }

    fn bi_invariant(&self) -> bool {
        true
    }

    fn parse_elem(&self, token: &str) -> Option<i64> {
        token.parse().ok()
    }

    fn format_elem(&self, a: &i64) -> String {
        a.to_string()
    }

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> i64 {
        rng.gen_range(-3..=3)
    }
}

/// Injective endomorphisms offered as instance parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endomorphism {
    Identity,
    /// g ↦ g·g
    Double,
    /// g ↦ g⁻¹; reverses the order.
    Negate,
}

impl Endomorphism {
    pub fn apply<G: OrderedGroup>(&self, base: &G, g: &G::Elem) -> G::Elem {
        match self {
            Endomorphism::Identity => g.clone(),
            Endomorphism::Double => base.op(g, g),
            Endomorphism::Negate => base.inverse(g),
        }
    }

    pub fn preserves_order(&self) -> bool {
        !matches!(self, Endomorphism::Negate)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Endomorphism::Identity => "identity",
            Endomorphism::Double => "double",
            Endomorphism::Negate => "negate",
        })
    }
}

impl FromStr for Endomorphism {
    type Err = WztError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" | "id" => Ok(Endomorphism::Identity),
            "double" => Ok(Endomorphism::Double),
            "negate" => Ok(Endomorphism::Negate),
            other => Err(WztError::InvalidConfig(format!(
                "unknown endomorphism `{other}` (expected identity, double or negate)"
            ))),
        }
    }
}

/// An element of G^n.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerElement<E> {
    coords: Vec<E>,
}

impl<E> PowerElement<E> {
    pub fn new(coords: Vec<E>) -> Self {
        PowerElement { coords }
    }

    pub fn degree(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }
}

#[derive(Debug, Clone)]
pub struct DirectPowers<G: OrderedGroup> {
    base: G,
    phi1: Endomorphism,
    phi2: Endomorphism,
}

impl<G: OrderedGroup> DirectPowers<G> {
    /// Rejects an order-reversing φ₁, which breaks compatibility of the
    /// lexicographic orders with cloning.
    pub fn new(base: G, phi1: Endomorphism, phi2: Endomorphism) -> Result<Self> {
        if !phi1.preserves_order() {
            return Err(WztError::InvalidConfig(format!(
                "phi1={phi1} does not preserve the order of the base group"
            )));
        }
        Ok(DirectPowers { base, phi1, phi2 })
    }

    /// Skips the order-preservation check on φ₁.
    pub fn new_unchecked(base: G, phi1: Endomorphism, phi2: Endomorphism) -> Self {
        DirectPowers { base, phi1, phi2 }
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn phi1(&self) -> Endomorphism {
        self.phi1
    }

    pub fn phi2(&self) -> Endomorphism {
        self.phi2
    }
}

/// κ^k on G^n.
pub fn power_clone<G: OrderedGroup>(
    sys: &DirectPowers<G>,
    t: &PowerElement<G::Elem>,
    k: usize,
) -> Result<PowerElement<G::Elem>> {
    check_index(k, t.degree())?;
    let mut coords = Vec::with_capacity(t.degree() + 1);
    coords.extend_from_slice(&t.coords[..k - 1]);
    let g = &t.coords[k - 1];
    coords.push(sys.phi1.apply(&sys.base, g));
    coords.push(sys.phi2.apply(&sys.base, g));
    coords.extend_from_slice(&t.coords[k..]);
    Ok(PowerElement { coords })
}

/// Lexicographic comparison, first coordinate most significant.
pub fn power_compare<G: OrderedGroup>(
    base: &G,
    a: &PowerElement<G::Elem>,
    b: &PowerElement<G::Elem>,
) -> Result<Ordering> {
    if a.degree() != b.degree() {
        return Err(WztError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| base.compare(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal))
}

impl<G: OrderedGroup> CloningSystem for DirectPowers<G> {
    type Element = PowerElement<G::Elem>;

    fn name(&self) -> String {
        format!(
            "dirpow:{}:phi1={},phi2={}",
            self.base.tag(),
            self.phi1,
            self.phi2
        )
    }

    fn identity(&self, n: usize) -> Self::Element {
        PowerElement {
            coords: vec![self.base.zero(); n],
        }
    }

    fn degree(&self, g: &Self::Element) -> usize {
        g.degree()
    }

    fn multiply(&self, g: &Self::Element, h: &Self::Element) -> Result<Self::Element> {
        if g.degree() != h.degree() {
            return Err(WztError::DegreeMismatch {
                left: g.degree(),
                right: h.degree(),
            });
        }
        Ok(PowerElement {
            coords: g
                .coords
                .iter()
                .zip(&h.coords)
                .map(|(x, y)| self.base.op(x, y))
                .collect(),
        })
    }

    fn invert(&self, g: &Self::Element) -> Self::Element {
        PowerElement {
            coords: g.coords.iter().map(|x| self.base.inverse(x)).collect(),
        }
    }

    fn equal(&self, g: &Self::Element, h: &Self::Element) -> Result<bool> {
        Ok(power_compare(&self.base, g, h)? == Ordering::Equal)
    }

    fn rho(&self, g: &Self::Element) -> Permutation {
        Permutation::identity(g.degree())
    }

    fn clone_at(&self, k: usize, g: &Self::Element) -> Result<Self::Element> {
        power_clone(self, g, k)
    }

    fn compare(&self, g: &Self::Element, h: &Self::Element) -> Result<Option<Ordering>> {
        power_compare(&self.base, g, h).map(Some)
    }

    fn is_pure(&self) -> bool {
        true
    }

    fn order_kind(&self) -> OrderKind {
        if self.base.bi_invariant() {
            OrderKind::Bi
        } else {
            OrderKind::Left
        }
    }

    fn format(&self, g: &Self::Element) -> String {
        let coords: Vec<String> = g.coords.iter().map(|x| self.base.format_elem(x)).collect();
        format!(
            "{}^{}: ({})",
            self.base.symbol(),
            g.degree(),
            coords.join(",")
        )
    }

    fn parse(&self, text: &str, degree: usize) -> Result<Self::Element> {
        let mut cur = Cursor::new(text);
        let n = header(&mut cur, &format!("{}^", self.base.symbol()))?;
        cur.expect('(')?;
        let body_start = cur.pos();
        let body = cur.rest();
        let close = body
            .find(')')
            .ok_or_else(|| WztError::parse(body_start + body.len(), "expected `)`"))?;
        let mut coords = Vec::new();
        if !body[..close].trim().is_empty() {
            let mut offset = body_start;
            for token in body[..close].split(',') {
                let coord = self.base.parse_elem(token.trim()).ok_or_else(|| {
                    WztError::parse(offset, format!("bad coordinate `{}`", token.trim()))
                })?;
                coords.push(coord);
                offset += token.len() + 1;
            }
        }
        let mut cur = Cursor::with_base(&body[close + 1..], body_start + close + 1);
        cur.expect_end()?;
        if coords.len() != n {
            return Err(WztError::parse(
                0,
                format!(
                    "header says {n} coordinates but {} were given",
                    coords.len()
                ),
            ));
        }
        if n != degree {
            return Err(WztError::parse(
                0,
                format!("element has degree {n} but the trees have {degree} leaves"),
            ));
        }
        Ok(PowerElement { coords })
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, _max_len: usize, rng: &mut R) -> Self::Element {
        PowerElement {
            coords: (0..n).map(|_| self.base.random_elem(rng)).collect(),
        }
    }
}
