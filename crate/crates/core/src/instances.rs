//! Shipped cloning systems and the registry keyed by name.
//!
//! | name     | G_n            | ρ_n          | κ_n^k              | order            |
//! |----------|----------------|--------------|--------------------|------------------|
//! | `f`      | trivial        | trivial      | trivial            | bi (vacuous)     |
//! | `v`      | 𝔖_n            | identity     | ς_n^k              | none             |
//! | `bv`     | B_n            | strand trace | braid table        | Dehornoy (left)  |
//! | `bf`     | P_n            | trivial      | braid table        | combed Magnus (bi) |
//! | `dirpow` | Z^n            | trivial      | (…, φ₁g_k, φ₂g_k, …) | lexicographic (bi) |

use std::cmp::Ordering;

use rand::Rng;

use crate::braid::{dehornoy_compare, is_trivial, BraidWord};
use crate::cloning::{CloningSystem, OrderKind};
use crate::direct_powers::{DirectPowers, Endomorphism, Integers};
use crate::error::{check_index, Result, WztError};
use crate::permutation::Permutation;
use crate::pure_braid::{pure_generator, purebraid_compare};
use crate::syntax::Cursor;

/// Word length drawn from a geometric law with mean 12, capped at `max_len`.
pub(crate) fn random_length<R: Rng + ?Sized>(max_len: usize, rng: &mut R) -> usize {
    let mut len = 0;
    while len < max_len && rng.gen_bool(12.0 / 13.0) {
        len += 1;
    }
    len
}

pub fn random_braid<R: Rng + ?Sized>(n: usize, max_len: usize, rng: &mut R) -> BraidWord {
    if n < 2 {
        return BraidWord::empty(n.max(1));
    }
    let len = random_length(max_len, rng);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_letters_unchecked(n, letters)
}

/// Product of random A_{i,j}^{±1} filling a drawn length; factors too long
/// for the remaining room fall back to A_{j-1,j} = σ_{j-1}².
pub fn random_pure_braid<R: Rng + ?Sized>(n: usize, max_len: usize, rng: &mut R) -> BraidWord {
    if n < 2 {
        return BraidWord::empty(n.max(1));
    }
    let target = random_length(max_len, rng);
    let mut letters: Vec<i32> = Vec::new();
    while target - letters.len() >= 2 {
        let j = rng.gen_range(2..=n);
        let i = rng.gen_range(1..j);
        let mut a = pure_generator(i, j);
        if letters.len() + a.len() > target {
            a = pure_generator(j - 1, j);
        }
        if rng.gen_bool(0.5) {
            letters.extend(a);
        } else {
            letters.extend(a.into_iter().rev().map(|x| -x));
        }
    }
    BraidWord::from_letters_unchecked(n, letters)
}

fn parse_braid(text: &str, degree: usize, pure: bool) -> Result<BraidWord> {
    let mut cur = Cursor::new(text);
    let w = BraidWord::parse_from(&mut cur)?;
    cur.expect_end()?;
    if w.strands() != degree {
        return Err(WztError::parse(
            0,
            format!(
                "braid has {} strands but the trees have {degree} leaves",
                w.strands()
            ),
        ));
    }
    if pure && !w.is_pure() {
        return Err(WztError::parse(0, "braid is not pure"));
    }
    Ok(w)
}

fn braid_text(w: &BraidWord) -> String {
    w.to_string()
}

/// Thompson's F: the trivial cloning system.
#[derive(Debug, Clone, Copy, Default)]
pub struct ThompsonF;

/// The identity of the trivial group at a given degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Unit {
    pub degree: usize,
}

impl CloningSystem for ThompsonF {
    type Element = Unit;

    fn name(&self) -> String {
        "f".into()
    }

    fn identity(&self, n: usize) -> Unit {
        Unit { degree: n }
    }

    fn degree(&self, g: &Unit) -> usize {
        g.degree
    }

    fn multiply(&self, g: &Unit, h: &Unit) -> Result<Unit> {
        if g.degree != h.degree {
            return Err(WztError::DegreeMismatch {
                left: g.degree,
                right: h.degree,
            });
        }
        Ok(*g)
    }

    fn invert(&self, g: &Unit) -> Unit {
        *g
    }

    fn equal(&self, g: &Unit, h: &Unit) -> Result<bool> {
        Ok(g == h)
    }

    fn rho(&self, g: &Unit) -> Permutation {
        Permutation::identity(g.degree)
    }

    fn clone_at(&self, k: usize, g: &Unit) -> Result<Unit> {
        check_index(k, g.degree)?;
        Ok(Unit {
            degree: g.degree + 1,
        })
    }

    fn compare(&self, _g: &Unit, _h: &Unit) -> Result<Option<Ordering>> {
        Ok(Some(Ordering::Equal))
    }

    fn is_pure(&self) -> bool {
        true
    }

    fn order_kind(&self) -> OrderKind {
        OrderKind::Bi
    }

    fn format(&self, _g: &Unit) -> String {
        "1".into()
    }

    fn parse(&self, text: &str, degree: usize) -> Result<Unit> {
        if text.trim() == "1" {
            Ok(Unit { degree })
        } else {
            Err(WztError::parse(
                0,
                "the only element of the trivial group is `1`",
            ))
        }
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, _max_len: usize, _rng: &mut R) -> Unit {
        Unit { degree: n }
    }

    fn enumerate(&self, n: usize) -> Option<Vec<Unit>> {
        Some(vec![Unit { degree: n }])
    }
}

/// Thompson's V: symmetric groups with ς as cloning maps.
#[derive(Debug, Clone, Copy, Default)]
pub struct ThompsonV;

impl CloningSystem for ThompsonV {
    type Element = Permutation;

    fn name(&self) -> String {
        "v".into()
    }

    fn identity(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }

    fn degree(&self, g: &Permutation) -> usize {
        g.degree()
    }

    fn multiply(&self, g: &Permutation, h: &Permutation) -> Result<Permutation> {
        g.then(h)
    }

    fn invert(&self, g: &Permutation) -> Permutation {
        g.inverse()
    }

    fn equal(&self, g: &Permutation, h: &Permutation) -> Result<bool> {
        Ok(g == h)
    }

    fn rho(&self, g: &Permutation) -> Permutation {
        g.clone()
    }

    fn clone_at(&self, k: usize, g: &Permutation) -> Result<Permutation> {
        g.sigma_expand(k)
    }

    fn compare(&self, _g: &Permutation, _h: &Permutation) -> Result<Option<Ordering>> {
        Ok(None)
    }

    fn is_pure(&self) -> bool {
        false
    }

    fn order_kind(&self) -> OrderKind {
        OrderKind::None
    }

    fn format(&self, g: &Permutation) -> String {
        g.to_string()
    }

    fn parse(&self, text: &str, degree: usize) -> Result<Permutation> {
        let p = Permutation::parse(text)?;
        if p.degree() != degree {
            return Err(WztError::parse(
                0,
                format!(
                    "permutation has degree {} but the trees have {degree} leaves",
                    p.degree()
                ),
            ));
        }
        Ok(p)
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, _max_len: usize, rng: &mut R) -> Permutation {
        use rand::seq::SliceRandom;
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Permutation::from_images_unchecked(images)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<Permutation>> {
        Some(Permutation::all(n))
    }
}

/// The braided Thompson group BV: braid groups with the Dehornoy order.
#[derive(Debug, Clone, Copy, Default)]
pub struct BraidedV;

impl CloningSystem for BraidedV {
    type Element = BraidWord;

    fn name(&self) -> String {
        "bv".into()
    }

    fn identity(&self, n: usize) -> BraidWord {
        BraidWord::empty(n)
    }

    fn degree(&self, g: &BraidWord) -> usize {
        g.strands()
    }

    fn multiply(&self, g: &BraidWord, h: &BraidWord) -> Result<BraidWord> {
        Ok(g.concat(h)?.free_reduce())
    }

    fn invert(&self, g: &BraidWord) -> BraidWord {
        g.inverse()
    }

    fn equal(&self, g: &BraidWord, h: &BraidWord) -> Result<bool> {
        is_trivial(&g.inverse().concat(h)?)
    }

    fn rho(&self, g: &BraidWord) -> Permutation {
        g.permutation()
    }

    fn clone_at(&self, k: usize, g: &BraidWord) -> Result<BraidWord> {
        g.clone_at(k)
    }

    fn compare(&self, g: &BraidWord, h: &BraidWord) -> Result<Option<Ordering>> {
        dehornoy_compare(g, h).map(Some)
    }

    fn is_pure(&self) -> bool {
        false
    }

    fn order_kind(&self) -> OrderKind {
        OrderKind::Left
    }

    fn format(&self, g: &BraidWord) -> String {
        braid_text(g)
    }

    fn parse(&self, text: &str, degree: usize) -> Result<BraidWord> {
        parse_braid(text, degree, false)
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, max_len: usize, rng: &mut R) -> BraidWord {
        random_braid(n, max_len, rng)
    }
}

/// The pure braided Thompson group BF: pure braid groups, ρ trivial,
/// ordered through the Artin combing and the Magnus order.
#[derive(Debug, Clone, Copy, Default)]
pub struct BraidedF;

impl CloningSystem for BraidedF {
    type Element = BraidWord;

    fn name(&self) -> String {
        "bf".into()
    }

    fn identity(&self, n: usize) -> BraidWord {
        BraidWord::empty(n)
    }

    fn degree(&self, g: &BraidWord) -> usize {
        g.strands()
    }

    fn multiply(&self, g: &BraidWord, h: &BraidWord) -> Result<BraidWord> {
        Ok(g.concat(h)?.free_reduce())
    }

    fn invert(&self, g: &BraidWord) -> BraidWord {
        g.inverse()
    }

    fn equal(&self, g: &BraidWord, h: &BraidWord) -> Result<bool> {
        is_trivial(&g.inverse().concat(h)?)
    }

    fn rho(&self, g: &BraidWord) -> Permutation {
        Permutation::identity(g.strands())
    }

    fn clone_at(&self, k: usize, g: &BraidWord) -> Result<BraidWord> {
        g.clone_at(k)
    }

    fn compare(&self, g: &BraidWord, h: &BraidWord) -> Result<Option<Ordering>> {
        purebraid_compare(g, h).map(Some)
    }

    fn is_pure(&self) -> bool {
        true
    }

    fn order_kind(&self) -> OrderKind {
        OrderKind::Bi
    }

    fn format(&self, g: &BraidWord) -> String {
        braid_text(g)
    }

    fn parse(&self, text: &str, degree: usize) -> Result<BraidWord> {
        parse_braid(text, degree, true)
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, max_len: usize, rng: &mut R) -> BraidWord {
        random_pure_braid(n, max_len, rng)
    }
}

/// Any registered instance, selected by name.
#[derive(Debug, Clone)]
pub enum AnyInstance {
    F(ThompsonF),
    V(ThompsonV),
    Bv(BraidedV),
    Bf(BraidedF),
    DirPow(DirectPowers<Integers>),
}

impl AnyInstance {
    /// Looks up `f`, `v`, `bv`, `bf` or `dirpow[:int[:phi1=..,phi2=..]]`.
    pub fn from_name(name: &str) -> Result<AnyInstance> {
        let name = name.trim();
        match name {
            "f" => return Ok(AnyInstance::F(ThompsonF)),
            "v" => return Ok(AnyInstance::V(ThompsonV)),
            "bv" => return Ok(AnyInstance::Bv(BraidedV)),
            "bf" => return Ok(AnyInstance::Bf(BraidedF)),
            _ => {}
        }
        let Some(rest) = name.strip_prefix("dirpow") else {
            return Err(WztError::UnknownInstance(name.into()));
        };
        let rest = rest.strip_prefix(':').unwrap_or(rest);
        let (base, params) = match rest.split_once(':') {
            Some((b, p)) => (b, p),
            None => (rest, ""),
        };
        if !(base.is_empty() || base == "int") {
            return Err(WztError::UnknownInstance(format!("dirpow base `{base}`")));
        }
        let mut phi1 = Endomorphism::Identity;
        let mut phi2 = Endomorphism::Identity;
        for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                WztError::InvalidConfig(format!("expected key=value, got `{part}`"))
            })?;
            let endo: Endomorphism = value.trim().parse()?;
            match key.trim() {
                "phi1" => phi1 = endo,
                "phi2" => phi2 = endo,
                other => {
                    return Err(WztError::InvalidConfig(format!(
                        "unknown parameter `{other}`"
                    )))
                }
            }
        }
        Ok(AnyInstance::DirPow(DirectPowers::new(
            Integers, phi1, phi2,
        )?))
    }

    pub fn name(&self) -> String {
        match self {
            AnyInstance::F(s) => s.name(),
            AnyInstance::V(s) => s.name(),
            AnyInstance::Bv(s) => s.name(),
            AnyInstance::Bf(s) => s.name(),
            AnyInstance::DirPow(s) => s.name(),
        }
    }

    /// Guesses the instance from a middle-element literal.
    pub fn infer_from_middle(middle: &str) -> Option<AnyInstance> {
        let m = middle.trim_start();
        if m.starts_with('b') {
            Some(AnyInstance::Bv(BraidedV))
        } else if m.starts_with('[') {
            Some(AnyInstance::V(ThompsonV))
        } else if m.starts_with("z^") {
            Some(AnyInstance::DirPow(
                DirectPowers::new(Integers, Endomorphism::Identity, Endomorphism::Identity).ok()?,
            ))
        } else if m.trim() == "1" {
            Some(AnyInstance::F(ThompsonF))
        } else {
            None
        }
    }
}

/// Runs a generic body against whichever instance is selected.
#[macro_export]
macro_rules! with_instance {
    ($inst:expr, $sys:ident => $body:expr) => {
        match $inst {
            $crate::instances::AnyInstance::F($sys) => $body,
            $crate::instances::AnyInstance::V($sys) => $body,
            $crate::instances::AnyInstance::Bv($sys) => $body,
            $crate::instances::AnyInstance::Bf($sys) => $body,
            $crate::instances::AnyInstance::DirPow($sys) => $body,
        }
    };
}
