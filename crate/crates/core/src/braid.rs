//! Braid words on n strands, handle reduction, the Dehornoy order and the
//! strand-doubling cloning maps κ_n^k.
//!
//! Letters are signed generator indices: `+i` is σ_i and `-i` is σ_i^{-1}.
//! Words read left to right; the strand-tracing permutation of `ab` is that of
//! `a` followed by that of `b` (see [`Permutation::then`]).

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{check_index, Result, WztError};
use crate::free::{free_reduce_letters, push_reduced, FreeWord};
use crate::permutation::Permutation;
use crate::syntax::{header, signed_letters, Cursor};

/// Default number of handle substitutions allowed per reduction.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Step budget for handle reduction; `WZT_STEP_BUDGET` overrides the default.
pub fn step_budget() -> u64 {
    static BUDGET: OnceLock<u64> = OnceLock::new();
    *BUDGET.get_or_init(|| {
        std::env::var("WZT_STEP_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_STEP_BUDGET)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Outcome of the σ-positivity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    Negative,
    Trivial,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(WztError::InvalidConfig(
                "a braid needs at least one strand".into(),
            ));
        }
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= strands {
                return Err(WztError::IndexOutOfRange {
                    index: i,
                    max: strands - 1,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Concatenation (no reduction).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The same word viewed on more strands (extra strands on the right).
    pub fn lift(&self, strands: usize) -> BraidWord {
        assert!(strands >= self.strands);
        BraidWord {
            strands,
            letters: self.letters.clone(),
        }
    }

    pub(crate) fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            Err(WztError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            })
        } else {
            Ok(())
        }
    }

    pub fn free_reduce(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: free_reduce_letters(&self.letters),
        }
    }

    /// Strand-tracing permutation: start position ↦ end position.
    pub fn permutation(&self) -> Permutation {
        // at[p] = strand currently at position p+1
        let mut at: Vec<usize> = (1..=self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut images = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand - 1] = pos + 1;
        }
        Permutation::from_images_unchecked(images)
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Handle reduction with the configured step budget.
    pub fn handle_reduce(&self) -> Result<BraidWord> {
        self.handle_reduce_with_budget(step_budget())
    }

    /// Repeatedly rewrites the leftmost-ending σ_i-handle σ_i^e v σ_i^{-e}
    /// (v free of σ_i^{±1}, σ_{i-1}^{±1}) until none is left. The leftmost-ending
    /// handle never contains another handle, so every rewrite is permitted.
    pub fn handle_reduce_with_budget(&self, budget: u64) -> Result<BraidWord> {
        let mut word = self.letters.clone();
        let mut steps = 0u64;
        let mut scan_from = 0;
        while let Some((p, q)) = find_handle(&word, scan_from) {
            steps += 1;
            if steps > budget {
                return Err(WztError::StepBudgetExceeded(budget));
            }
            let head = word[p];
            let i = head.abs();
            let e = head.signum();
            let mut replacement = Vec::with_capacity(q - p + 2);
            for &x in &word[p + 1..q] {
                if x.abs() == i + 1 {
                    // σ_i^e σ_{i+1}^d σ_i^-e = σ_{i+1}^-e σ_i^d σ_{i+1}^e
                    let d = x.signum();
                    replacement.extend_from_slice(&[-e * (i + 1), d * i, e * (i + 1)]);
                } else {
                    replacement.push(x);
                }
            }
            word.splice(p..=q, replacement);
            scan_from = p;
        }
        Ok(BraidWord {
            strands: self.strands,
            letters: word,
        })
    }

    /// Whether the word itself contains a σ_i-handle.
    pub fn has_handle(&self) -> bool {
        find_handle(&self.letters, 0).is_some()
    }

    /// σ-positivity after handle reduction.
    pub fn sigma_positivity(&self) -> Result<Positivity> {
        let reduced = self.handle_reduce()?;
        Ok(word_positivity(&reduced.letters))
    }

    /// Condition (D) read directly off this word, without reduction.
    pub fn satisfies_condition_d(&self) -> bool {
        word_positivity(&self.letters) == Positivity::Positive
    }

    /// κ_n^k on words. The cloning index is threaded through the word with
    /// κ^k(x·rest) = κ^k(x)·κ^{ρ(x)k}(rest); σ_i^{-1} clones as the inverse of
    /// κ^{s_i(k)}(σ_i).
    pub fn clone_at(&self, k: usize) -> Result<BraidWord> {
        let n = self.strands;
        check_index(k, n)?;
        let mut out = Vec::with_capacity(self.letters.len() * 2);
        let mut k = k;
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let after = transpose(k, i);
            if l > 0 {
                clone_generator(i, k, &mut out);
            } else {
                let start = out.len();
                clone_generator(i, after, &mut out);
                out[start..].reverse();
                for x in &mut out[start..] {
                    *x = -*x;
                }
            }
            k = after;
        }
        Ok(BraidWord {
            strands: n + 1,
            letters: out,
        })
    }

    /// Parses `b3: s1 s2^-1 s1^3`.
    pub fn parse(text: &str) -> Result<BraidWord> {
        let mut cur = Cursor::new(text);
        let w = Self::parse_from(&mut cur)?;
        cur.expect_end()?;
        Ok(w)
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<BraidWord> {
        let start = cur.pos();
        let strands = header(cur, "b")?;
        if strands == 0 {
            return Err(WztError::parse(start, "a braid needs at least one strand"));
        }
        let mut letters = Vec::new();
        for (at, index, exp) in signed_letters(cur, 's')? {
            if index == 0 || index >= strands {
                return Err(WztError::parse(
                    at,
                    format!("generator s{index} outside b{strands}"),
                ));
            }
            let l = if exp < 0 {
                -(index as i32)
            } else {
                index as i32
            };
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}:", self.strands)?;
        for &l in &self.letters {
            if l > 0 {
                write!(f, " s{l}")?;
            } else {
                write!(f, " s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

fn transpose(k: usize, i: usize) -> usize {
    if k == i {
        i + 1
    } else if k == i + 1 {
        i
    } else {
        k
    }
}

/// κ^k(σ_i) as printed: σ_{i+1} if k<i; σ_{i+1}σ_i if k=i; σ_iσ_{i+1} if k=i+1; σ_i if i+1<k.
fn clone_generator(i: usize, k: usize, out: &mut Vec<i32>) {
    let i32_ = i as i32;
    if k < i {
        out.push(i32_ + 1);
    } else if k == i {
        out.extend_from_slice(&[i32_ + 1, i32_]);
    } else if k == i + 1 {
        out.extend_from_slice(&[i32_, i32_ + 1]);
    } else {
        out.push(i32_);
    }
}

/// Leftmost-ending handle at or after position `from`, as (start, end).
fn find_handle(word: &[i32], from: usize) -> Option<(usize, usize)> {
    for q in from..word.len() {
        let x = word[q];
        let i = x.abs();
        for p in (0..q).rev() {
            let y = word[p];
            let j = y.abs();
            if j == i {
                if y == -x {
                    return Some((p, q));
                }
                break;
            }
            if j == i - 1 {
                break;
            }
        }
    }
    None
}

/// Sign of a handle-free word: decided by its lowest generator.
fn word_positivity(word: &[i32]) -> Positivity {
    match word.iter().min_by_key(|l| l.abs()) {
        None => Positivity::Trivial,
        Some(&l) => {
            let m = l.abs();
            let pos = word.contains(&m);
            let neg = word.iter().any(|&x| x == -m);
            match (pos, neg) {
                (true, false) => Positivity::Positive,
                (false, true) => Positivity::Negative,
                // not handle-free; callers reduce first
                _ => Positivity::Trivial,
            }
        }
    }
}

pub fn free_reduce(w: &BraidWord) -> BraidWord {
    w.free_reduce()
}

pub fn braid_permutation(w: &BraidWord) -> Permutation {
    w.permutation()
}

pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    w.handle_reduce()
}

pub fn sigma_positivity(w: &BraidWord) -> Result<Positivity> {
    w.sigma_positivity()
}

pub fn clone_braid(n: usize, k: usize, w: &BraidWord) -> Result<BraidWord> {
    if w.strands != n {
        return Err(WztError::StrandMismatch {
            left: n,
            right: w.strands,
        });
    }
    w.clone_at(k)
}

/// True if `w` represents the trivial braid.
pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    Ok(w.free_reduce().handle_reduce()?.is_empty())
}

/// Dehornoy order: `Less` if a < b, i.e. a^{-1}b is σ-positive.
pub fn dehornoy_compare(a: &BraidWord, b: &BraidWord) -> Result<Ordering> {
    let diff = a.inverse().concat(b)?.free_reduce();
    Ok(match diff.sigma_positivity()? {
        Positivity::Positive => Ordering::Less,
        Positivity::Trivial => Ordering::Equal,
        Positivity::Negative => Ordering::Greater,
    })
}

/// Artin action on the free group of rank n: σ_i sends x_i ↦ x_i x_{i+1} x_i^{-1}
/// and x_{i+1} ↦ x_i. Letters are applied to `x` one at a time, left to right.
pub fn artin_act(w: &BraidWord, x: &FreeWord) -> Result<FreeWord> {
    if x.rank() != w.strands {
        return Err(WztError::RankMismatch {
            left: w.strands,
            right: x.rank(),
        });
    }
    let mut current = free_reduce_letters(x.letters());
    for &l in &w.letters {
        let i = l.abs();
        let mut next = Vec::with_capacity(current.len() + 8);
        for &y in &current {
            let image: &[i32] = &artin_letter_image(l, i, y);
            push_reduced(&mut next, image);
        }
        current = next;
    }
    Ok(FreeWord::from_letters_unchecked(x.rank(), current))
}

fn artin_letter_image(l: i32, i: i32, y: i32) -> Vec<i32> {
    let g = y.abs();
    let image = if l > 0 {
        if g == i {
            vec![i, i + 1, -i]
        } else if g == i + 1 {
            vec![i]
        } else {
            vec![g]
        }
    } else if g == i {
        vec![i + 1]
    } else if g == i + 1 {
        vec![-(i + 1), i, i + 1]
    } else {
        vec![g]
    };
    if y > 0 {
        image
    } else {
        image.into_iter().rev().map(|v| -v).collect()
    }
}

/// Braid equality through the Artin action on all n generators.
pub fn artin_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check_strands(b)?;
    for i in 1..=a.strands {
        let x = FreeWord::generator(a.strands, i)?;
        if artin_act(a, &x)? != artin_act(b, &x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
