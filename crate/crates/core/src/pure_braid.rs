//! Artin combing of pure braids and the induced bi-ordering of P_n.
//!
//! Kernel generators: x_i = A_{i,m} = (σ_{m-1}…σ_{i+1}) σ_i² (σ_{i+1}^{-1}…σ_{m-1}^{-1}),
//! the loop of strand m around strand i. A pure braid w on n strands combs as
//! w = k_n · k_{n-1} · … · k_2 with k_m a word in A_{1,m},…,A_{m-1,m}.
//!
//! The comb scans the word once, tracking the position p of the last strand.
//! Each letter either crosses two other strands (and survives, renumbered, in
//! the forgotten braid) or moves the last strand across a neighbour; in the
//! latter case a full passage emits x_{p-1}^{-1} or x_p. Emitted letters are
//! conjugated by the forgotten prefix, which acts on the kernel by
//!
//! ```text
//! σ_j:      x_j ↦ x_{j+1},             x_{j+1} ↦ x_{j+1}^{-1} x_j x_{j+1}
//! σ_j^{-1}: x_j ↦ x_j x_{j+1} x_j^{-1}, x_{j+1} ↦ x_j
//! ```

use std::cmp::Ordering;
use std::fmt;

use crate::braid::{is_trivial, BraidWord};
use crate::error::{Result, WztError};
use crate::free::{magnus_sign, push_reduced, FreeWord};

/// Which kernel coordinate dominates when comparing combed tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TupleOrder {
    /// k_2 first, k_n last: the quotient P_{m-1} dominates the free kernel.
    #[default]
    FirstStrandsFirst,
    /// k_n first. A left order, but not conjugation invariant.
    LastStrandFirst,
}

/// Combed form (k_n, k_{n-1}, …, k_2); entry for m is a word of rank m-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombedPureBraid {
    strands: usize,
    kernels: Vec<FreeWord>,
}

impl CombedPureBraid {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Kernel words in tuple order: k_n first.
    pub fn kernels(&self) -> &[FreeWord] {
        &self.kernels
    }

    /// k_m for 2 ≤ m ≤ n.
    pub fn kernel(&self, m: usize) -> &FreeWord {
        &self.kernels[self.strands - m]
    }

    /// Rewrites the tuple back into Artin generators.
    pub fn recompose(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        for (idx, k) in self.kernels.iter().enumerate() {
            let m = n - idx;
            letters.extend(kernel_to_artin(k, m));
        }
        BraidWord::from_letters_unchecked(n, letters)
    }
}

impl fmt::Display for CombedPureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, k) in self.kernels.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "k{} = {}", self.strands - idx, k.letters_text())?;
        }
        write!(f, ")")
    }
}

/// Artin word for A_{i,j}.
pub fn pure_generator(i: usize, j: usize) -> Vec<i32> {
    assert!(1 <= i && i < j);
    let mut w: Vec<i32> = ((i + 1)..j).rev().map(|g| g as i32).collect();
    w.push(i as i32);
    w.push(i as i32);
    w.extend(((i + 1)..j).map(|g| -(g as i32)));
    w
}

fn kernel_to_artin(k: &FreeWord, m: usize) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in k.letters() {
        let a = pure_generator(l.unsigned_abs() as usize, m);
        if l > 0 {
            out.extend(a);
        } else {
            out.extend(a.into_iter().rev().map(|x| -x));
        }
    }
    out
}

/// One step of the comb: w = u · lift(forgotten).
struct Split {
    kernel: FreeWord,
    forgotten: BraidWord,
}

fn split_last_strand(w: &BraidWord) -> Result<Split> {
    let n = w.strands();
    if !w.is_pure() {
        return Err(WztError::NotPure);
    }
    if n == 1 {
        return Ok(Split {
            kernel: FreeWord::empty(0),
            forgotten: BraidWord::empty(1),
        });
    }
    let rank = n - 1;
    // images[i-1] = lift(prefix) x_i lift(prefix)^{-1}
    let mut images: Vec<Vec<i32>> = (1..=rank as i32).map(|i| vec![i]).collect();
    let mut kernel: Vec<i32> = Vec::new();
    let mut forgotten: Vec<i32> = Vec::new();
    let mut p = n;
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let e = l.signum();
        if i + 1 == p {
            // last strand moves left across strand at p-1
            if e < 0 {
                let img = invert(&images[p - 2]);
                push_reduced(&mut kernel, &img);
            }
            p -= 1;
        } else if i == p {
            if e > 0 {
                push_reduced(&mut kernel, &images[p - 1].clone());
            }
            p += 1;
        } else {
            let j = if i + 1 < p { i } else { i - 1 };
            forgotten.push(e * j as i32);
            conjugate_images(&mut images, j, e);
        }
    }
    debug_assert_eq!(p, n);
    Ok(Split {
        kernel: FreeWord::from_letters_unchecked(rank, kernel),
        forgotten: BraidWord::from_letters_unchecked(rank.max(1), forgotten),
    })
}

fn invert(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|x| -x).collect()
}

/// images ← images ∘ c_{σ_j^e}.
fn conjugate_images(images: &mut [Vec<i32>], j: usize, e: i32) {
    let a = images[j - 1].clone();
    let b = images[j].clone();
    let (new_a, new_b) = if e > 0 {
        // x_j ↦ x_{j+1}, x_{j+1} ↦ x_{j+1}^{-1} x_j x_{j+1}
        let mut nb = invert(&b);
        push_reduced(&mut nb, &a);
        push_reduced(&mut nb, &b);
        (b, nb)
    } else {
        // x_j ↦ x_j x_{j+1} x_j^{-1}, x_{j+1} ↦ x_j
        let mut na = a.clone();
        push_reduced(&mut na, &b);
        push_reduced(&mut na, &invert(&a));
        (na, a)
    };
    images[j - 1] = new_a;
    images[j] = new_b;
}

pub fn is_pure(w: &BraidWord) -> bool {
    w.is_pure()
}

/// Image under the map P_n → P_{n-1} that deletes the last strand.
pub fn forget_last_strand(w: &BraidWord) -> Result<BraidWord> {
    Ok(split_last_strand(w)?.forgotten)
}

/// Loop of the last strand around the others, as a word in A_{1,n},…,A_{n-1,n}.
pub fn kernel_word(w: &BraidWord) -> Result<FreeWord> {
    let split = split_last_strand(w)?;
    if !is_trivial(&split.forgotten)? {
        return Err(WztError::NotInKernel);
    }
    Ok(split.kernel)
}

pub fn comb(w: &BraidWord) -> Result<CombedPureBraid> {
    if !w.is_pure() {
        return Err(WztError::NotPure);
    }
    let n = w.strands();
    let mut kernels = Vec::with_capacity(n.saturating_sub(1));
    let mut current = w.free_reduce();
    for _m in (2..=n).rev() {
        let split = split_last_strand(&current)?;
        kernels.push(split.kernel);
        current = split.forgotten.free_reduce();
    }
    Ok(CombedPureBraid {
        strands: n,
        kernels,
    })
}

/// Sign of a pure braid (`Greater` means w > 1).
pub fn purebraid_sign(w: &BraidWord, order: TupleOrder) -> Result<Ordering> {
    let combed = comb(w)?;
    let mut entries: Vec<&FreeWord> = combed.kernels.iter().collect();
    if order == TupleOrder::FirstStrandsFirst {
        entries.reverse();
    }
    for k in entries {
        let s = magnus_sign(k)?;
        if s != Ordering::Equal {
            return Ok(s);
        }
    }
    Ok(Ordering::Equal)
}

/// Bi-invariant order on P_n: `Less` means a < b.
pub fn purebraid_compare(a: &BraidWord, b: &BraidWord) -> Result<Ordering> {
    purebraid_compare_with(a, b, TupleOrder::default())
}

pub fn purebraid_compare_with(a: &BraidWord, b: &BraidWord, order: TupleOrder) -> Result<Ordering> {
    a.check_strands(b)?;
    if !a.is_pure() || !b.is_pure() {
        return Err(WztError::NotPure);
    }
    let diff = a.inverse().concat(b)?;
    Ok(purebraid_sign(&diff, order)?.reverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::artin_equal;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn f(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn is_pure_examples() {
        assert!(is_pure(&b("b2: s1 s1")));
        assert!(!is_pure(&b("b2: s1")));
        assert!(is_pure(&b("b3: s2 s1 s1 s2^-1")));
    }

    #[test]
    fn forget_examples() {
        assert!(forget_last_strand(&b("b2: s1 s1")).unwrap().is_empty());
        let g = forget_last_strand(&b("b3: s2 s1 s1 s2^-1")).unwrap();
        assert_eq!(g.strands(), 2);
        assert!(g.is_empty());
        assert_eq!(forget_last_strand(&b("b3: s1 s1")).unwrap(), b("b2: s1 s1"));
        assert_eq!(forget_last_strand(&b("b2: s1")), Err(WztError::NotPure));
    }

    #[test]
    fn kernel_word_examples() {
        for n in 2..6 {
            let a = BraidWord::new(n, pure_generator(n - 1, n)).unwrap();
            assert_eq!(
                kernel_word(&a).unwrap(),
                FreeWord::generator(n - 1, n - 1).unwrap()
            );
        }
        let a13 = b("b3: s2 s1 s1 s2^-1");
        let k = kernel_word(&a13).unwrap();
        assert_eq!(k, f("f2: x1"));
        let back = BraidWord::new(3, kernel_to_artin(&k, 3)).unwrap();
        assert!(artin_equal(&back, &a13).unwrap());
        assert!(kernel_word(&b("b3:")).unwrap().is_empty());
        assert_eq!(kernel_word(&b("b3: s1 s1")), Err(WztError::NotInKernel));
    }

    #[test]
    fn comb_examples() {
        let c = comb(&b("b3:")).unwrap();
        assert!(c.kernels().iter().all(FreeWord::is_empty));
        assert_eq!(c.kernels().len(), 2);
        assert_eq!(comb(&b("b2: s1 s1")).unwrap().kernels(), &[f("f1: x1")]);
        let c = comb(&b("b3: s2 s1 s1 s2^-1")).unwrap();
        assert_eq!(c.kernel(3), &f("f2: x1"));
        assert!(c.kernel(2).is_empty());
        assert_eq!(c.to_string(), "(k3 = x1, k2 = 1)");
    }

    #[test]
    fn conjugation_action_matches_braids() {
        // lift(σ_j^e) A_{i,n} lift(σ_j^e)^{-1} against the table, for n = 4
        let n = 4;
        for j in 1..=n - 2 {
            for e in [1i32, -1] {
                for i in 1..n {
                    let mut conj = vec![e * j as i32];
                    conj.extend(pure_generator(i, n));
                    conj.push(-e * j as i32);
                    let braid = BraidWord::new(n, conj).unwrap();
                    let mut images: Vec<Vec<i32>> = (1..n as i32).map(|g| vec![g]).collect();
                    conjugate_images(&mut images, j, e);
                    let expected = FreeWord::new(n - 1, images[i - 1].clone()).unwrap();
                    let expected = BraidWord::new(n, kernel_to_artin(&expected, n)).unwrap();
                    assert!(artin_equal(&braid, &expected).unwrap(), "j={j} e={e} i={i}");
                }
            }
        }
    }

    #[test]
    fn recomposition_of_small_words() {
        for text in [
            "b3: s1 s2 s2 s1",
            "b3: s1 s2^-1 s2^-1 s1^-1",
            "b4: s3 s2 s1 s1 s2 s3",
            "b4: s1 s3 s2 s2 s3^-1 s1^-1",
            "b4: s2 s1 s3 s2 s2 s3^-1 s1^-1 s2^-1",
        ] {
            let w = b(text);
            let c = comb(&w).unwrap();
            assert!(artin_equal(&c.recompose(), &w).unwrap(), "{text}: {c}");
        }
    }

    #[test]
    fn compare_examples() {
        let a12 = b("b2: s1 s1");
        assert_eq!(purebraid_compare(&a12, &a12).unwrap(), Ordering::Equal);
        assert_eq!(purebraid_compare(&b("b2:"), &a12).unwrap(), Ordering::Less);
        assert_eq!(
            purebraid_compare(&b("b3:"), &b("b3: s2 s1 s1 s2^-1")).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            purebraid_compare(&b("b2: s1"), &a12),
            Err(WztError::NotPure)
        );
        assert!(matches!(
            purebraid_compare(&b("b3:"), &a12),
            Err(WztError::StrandMismatch { .. })
        ));
    }
}
