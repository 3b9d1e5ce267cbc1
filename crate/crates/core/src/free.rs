//! Free-group words and the Magnus ordering.
//!
//! A word over generators x_1..x_k is a sequence of signed indices: `+i` for
//! x_i and `-i` for its inverse. The Magnus embedding sends x_i to 1 + X_i in
//! the ring of noncommuting power series with integer coefficients; a word
//! is positive when the smallest monomial of `M(w) - 1` (graded, then
//! lexicographic on index sequences) has a positive coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, WztError};
use crate::syntax::{header, signed_letters, Cursor};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(WztError::IndexOutOfRange {
                    index: l.unsigned_abs() as usize,
                    max: rank,
                });
            }
        }
        Ok(FreeWord { rank, letters })
    }

    pub(crate) fn from_letters_unchecked(rank: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && l.unsigned_abs() as usize <= rank));
        FreeWord { rank, letters }
    }

    pub fn empty(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator x_i (1-based).
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        FreeWord::new(rank, vec![i as i32])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: free_reduce_letters(&self.letters),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        let mut letters = free_reduce_letters(&self.letters);
        push_reduced(&mut letters, &other.letters);
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Equality as group elements (equal free reductions).
    pub fn same_element(&self, other: &FreeWord) -> bool {
        self.rank == other.rank
            && free_reduce_letters(&self.letters) == free_reduce_letters(&other.letters)
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank != other.rank {
            Err(WztError::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Parses `f3: x1 x3^-1`.
    pub fn parse(text: &str) -> Result<FreeWord> {
        let mut cur = Cursor::new(text);
        let rank = header(&mut cur, "f")?;
        let word = Self::parse_letters(&mut cur, rank)?;
        cur.expect_end()?;
        Ok(word)
    }

    pub(crate) fn parse_letters(cur: &mut Cursor<'_>, rank: usize) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for (at, index, exp) in signed_letters(cur, 'x')? {
            if index == 0 || index > rank {
                return Err(WztError::parse(
                    at,
                    format!("generator x{index} outside rank {rank}"),
                ));
            }
            let l = if exp < 0 {
                -(index as i32)
            } else {
                index as i32
            };
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(FreeWord { rank, letters })
    }

    /// Letters only, e.g. `x1 x2^-1`; `1` for the empty word.
    pub fn letters_text(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}:", self.rank)?;
        for &l in &self.letters {
            if l > 0 {
                write!(f, " x{l}")?;
            } else {
                write!(f, " x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn free_reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(letters.len());
    push_reduced(&mut out, letters);
    out
}

/// Appends `letters` to an already reduced stack, cancelling as it goes.
pub(crate) fn push_reduced(stack: &mut Vec<i32>, letters: &[i32]) {
    for &l in letters {
        if stack.last() == Some(&-l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
}

/// Monomial X_{i_1} ... X_{i_d} ordered by degree first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for i in &self.0 {
            write!(f, "X{i}")?;
        }
        Ok(())
    }
}

/// Truncated noncommutative power series with integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnusSeries {
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<Monomial, BigInt>,
}

impl MagnusSeries {
    pub fn one(rank: usize, degree: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Monomial(Vec::new()), BigInt::one());
        MagnusSeries {
            rank,
            degree,
            coeffs,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, monomial: &[u16]) -> BigInt {
        self.coeffs
            .get(&Monomial(monomial.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.coeffs.iter()
    }

    /// Product truncated at the smaller of the two degrees.
    pub fn mul(&self, other: &MagnusSeries) -> Result<MagnusSeries> {
        if self.rank != other.rank {
            return Err(WztError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let degree = self.degree.min(other.degree);
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if a.0.len() + b.0.len() > degree {
                    continue;
                }
                let mut m = a.0.clone();
                m.extend_from_slice(&b.0);
                *acc.entry(Monomial(m)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MagnusSeries {
            rank: self.rank,
            degree,
            coeffs: acc,
        })
    }

    /// Drops every term above `degree`.
    pub fn truncate(&self, degree: usize) -> MagnusSeries {
        MagnusSeries {
            rank: self.rank,
            degree: degree.min(self.degree),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| m.0.len() <= degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest nonconstant term with a nonzero coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.coeffs.iter().find(|(m, _)| !m.0.is_empty())
    }

    /// Multiplies on the right by the series of a single letter.
    fn mul_letter(&mut self, letter: i32) {
        let gen = letter.unsigned_abs() as u16;
        let negative = letter < 0;
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in &self.coeffs {
            // x ↦ 1 + X, x^-1 ↦ 1 - X + X^2 - ...
            let room = self.degree - m.0.len();
            let max_power = if negative { room } else { room.min(1) };
            let mut mono = m.0.clone();
            for power in 0..=max_power {
                if power > 0 {
                    mono.push(gen);
                }
                let term = if negative && power % 2 == 1 {
                    -c.clone()
                } else {
                    c.clone()
                };
                *acc.entry(Monomial(mono.clone()))
                    .or_insert_with(BigInt::zero) += term;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        self.coeffs = acc;
    }
}

impl fmt::Display for MagnusSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in &self.coeffs {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (m.0.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{mag}{m}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Magnus expansion of `w` truncated at total degree `d`.
pub fn magnus_expand(w: &FreeWord, d: usize) -> Result<MagnusSeries> {
    if d == 0 {
        return Err(WztError::InvalidConfig(
            "truncation degree must be at least 1".into(),
        ));
    }
    let mut series = MagnusSeries::one(w.rank, d);
    for &l in &w.letters {
        series.mul_letter(l);
    }
    Ok(series)
}

/// Sign of a word in the Magnus order: `Greater` if w > 1, `Less` if w < 1.
pub fn magnus_sign(w: &FreeWord) -> Result<Ordering> {
    let reduced = w.free_reduce();
    if reduced.is_empty() {
        return Ok(Ordering::Equal);
    }
    // The lowest nonzero term of a nontrivial word of length L has degree at
    // most L, so raising the truncation one degree at a time stops by then.
    let cap = reduced.len();
    let mut degree = 1;
    loop {
        let series = magnus_expand(&reduced, degree)?;
        if let Some((_, c)) = series.leading_term() {
            return Ok(if c.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            });
        }
        if degree >= cap {
            return Err(WztError::TruncationCap(cap));
        }
        degree += 1;
    }
}

/// Compares `a` and `b` in the Magnus order (`Less` means a < b).
pub fn magnus_compare(a: &FreeWord, b: &FreeWord) -> Result<Ordering> {
    let diff = a.inverse().mul(b)?;
    Ok(magnus_sign(&diff)?.reverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn expand_examples() {
        let s = magnus_expand(&w("f1: x1"), 2).unwrap();
        assert_eq!(s.to_string(), "1 + X1");
        let s = magnus_expand(&w("f1: x1^-1"), 2).unwrap();
        assert_eq!(s.coefficient(&[1]), big(-1));
        assert_eq!(s.coefficient(&[1, 1]), big(1));
        assert_eq!(s.to_string(), "1 - X1 + X1X1");
        let s = magnus_expand(&w("f2: x1 x2 x1^-1 x2^-1"), 2).unwrap();
        assert_eq!(s.to_string(), "1 + X1X2 - X2X1");
    }

    #[test]
    fn expand_rejects_degree_zero() {
        assert!(magnus_expand(&w("f1: x1"), 0).is_err());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            magnus_compare(&w("f2: x1"), &w("f2: x1")).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            magnus_compare(&w("f2:"), &w("f2: x1")).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            magnus_compare(&w("f2: x2"), &w("f2: x1")).unwrap(),
            Ordering::Less
        );
        assert!(matches!(
            magnus_compare(&w("f2: x1"), &w("f3: x1")),
            Err(WztError::RankMismatch { .. })
        ));
    }

    #[test]
    fn commutators_are_decided_in_degree_two_or_more() {
        // [x1, x2] is invisible in degree 1
        let c = w("f2: x1 x2 x1^-1 x2^-1");
        assert_eq!(magnus_sign(&c).unwrap(), Ordering::Greater);
        assert_eq!(magnus_sign(&c.inverse()).unwrap(), Ordering::Less);
        // [[x1,x2],x1] lives in degree 3
        let cc = c
            .mul(&w("f2: x1"))
            .unwrap()
            .mul(&c.inverse())
            .unwrap()
            .mul(&w("f2: x1^-1"))
            .unwrap();
        let series = magnus_expand(&cc.free_reduce(), 3).unwrap();
        let (m, _) = series.leading_term().unwrap();
        assert_eq!(m.0.len(), 3);
        assert_ne!(magnus_sign(&cc).unwrap(), Ordering::Equal);
    }

    #[test]
    fn parse_and_display() {
        let x = w("f3: x1 x3^-2");
        assert_eq!(x.letters(), &[1, -3, -3]);
        assert_eq!(x.to_string(), "f3: x1 x3^-1 x3^-1");
        assert_eq!(FreeWord::parse(&x.to_string()).unwrap(), x);
        assert!(FreeWord::parse("f2: x3").is_err());
        assert!(FreeWord::parse("x1").is_err());
    }

    #[test]
    fn free_reduction() {
        assert!(w("f2: x1 x2 x2^-1 x1^-1").free_reduce().is_empty());
        assert_eq!(w("f2: x1 x2^-1 x2 x2").free_reduce(), w("f2: x1 x2"));
    }

    fn word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
        let r = rank as i32;
        proptest::collection::vec((1..=r, any::<bool>()), 0..=max_len).prop_map(move |v| {
            FreeWord::new(
                rank,
                v.into_iter().map(|(i, s)| if s { i } else { -i }).collect(),
            )
            .unwrap()
        })
    }

    fn words3() -> impl Strategy<Value = (FreeWord, FreeWord, FreeWord)> {
        (1usize..=4).prop_flat_map(|r| (word(r, 12), word(r, 12), word(r, 12)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn expansion_is_multiplicative((u, v, _) in words3(), d in 1usize..4) {
            let lhs = magnus_expand(&u.mul(&v).unwrap(), d).unwrap();
            let rhs = magnus_expand(&u, d).unwrap().mul(&magnus_expand(&v, d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs.truncate(d));
        }

        #[test]
        fn order_is_bi_invariant((a, b, c) in words3()) {
            let base = magnus_compare(&a, &b).unwrap();
            prop_assert_eq!(magnus_compare(&c.mul(&a).unwrap(), &c.mul(&b).unwrap()).unwrap(), base);
            prop_assert_eq!(magnus_compare(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()).unwrap(), base);
        }

        #[test]
        fn equal_iff_freely_equal((a, b, _) in words3()) {
            let eq = magnus_compare(&a, &b).unwrap() == Ordering::Equal;
            prop_assert_eq!(eq, a.same_element(&b));
        }

        #[test]
        fn antisymmetric_and_transitive((a, b, c) in words3()) {
            let ab = magnus_compare(&a, &b).unwrap();
            prop_assert_eq!(magnus_compare(&b, &a).unwrap(), ab.reverse());
            let bc = magnus_compare(&b, &c).unwrap();
            if ab == Ordering::Less && bc == Ordering::Less {
                prop_assert_eq!(magnus_compare(&a, &c).unwrap(), Ordering::Less);
            }
        }
    }
}
