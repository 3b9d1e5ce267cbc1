//! Finite permutations in one-line notation, one-based.
//!
//! `compose(f, g)` is the function composite "apply `g`, then `f`". The group
//! product used by cloning systems reads left to right instead (`g` then `h`,
//! the way strands run down a diagram), so [`Permutation::then`] is provided
//! for that and every `rho` in this crate is a homomorphism for `then`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_index, Result, WztError};
use crate::syntax::Cursor;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line images (entry m-1 is the image of m).
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(WztError::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(WztError::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition s_k = (k, k+1) in degree n.
    pub fn transposition(n: usize, k: usize) -> Result<Self> {
        check_index(k, n.saturating_sub(1))?;
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the point `m` (1-based).
    pub fn apply(&self, m: usize) -> usize {
        self.images[m - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `f ∘ g`: apply `g` first, then `f`.
    pub fn compose(f: &Permutation, g: &Permutation) -> Result<Permutation> {
        if f.degree() != g.degree() {
            return Err(WztError::DegreeMismatch {
                left: f.degree(),
                right: g.degree(),
            });
        }
        Ok(Permutation {
            images: g.images.iter().map(|&m| f.apply(m)).collect(),
        })
    }

    /// Left-to-right product: `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Result<Permutation> {
        Permutation::compose(next, self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// The strand-doubling map ς_n^k: 𝔖_n → 𝔖_{n+1}.
    pub fn sigma_expand(&self, k: usize) -> Result<Permutation> {
        let n = self.degree();
        check_index(k, n)?;
        let gk = self.apply(k);
        let images = (1..=n + 1)
            .map(|m| {
                if m <= k {
                    let gm = self.apply(m);
                    if gm <= gk {
                        gm
                    } else {
                        gm + 1
                    }
                } else {
                    let gm = self.apply(m - 1);
                    if gm < gk {
                        gm
                    } else {
                        gm + 1
                    }
                }
            })
            .collect();
        Ok(Permutation { images })
    }

    /// Parses one-line notation `[2,3,1]`.
    pub fn parse(text: &str) -> Result<Permutation> {
        let mut cur = Cursor::new(text);
        let p = Self::parse_from(&mut cur)?;
        cur.expect_end()?;
        Ok(p)
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Permutation> {
        let start = cur.pos();
        cur.expect('[')?;
        let mut images = Vec::new();
        if !cur.eat(']') {
            loop {
                images.push(cur.unsigned()?);
                if cur.eat(']') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        Permutation::new(images).map_err(|e| WztError::parse(start, e.to_string()))
    }

    /// Every permutation of degree `n`, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
