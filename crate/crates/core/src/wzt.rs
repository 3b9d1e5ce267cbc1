//! Tree diagrams (T_-, g, T_+) over a cloning system and the group they form.
//!
//! Diagrams are never reduced. Two diagrams are equal iff a⁻¹b has the form
//! (T, 1, T).

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::cloning::{element_sign, CloningSystem, OrderKind};
use crate::error::{check_index, Result, WztError};
use crate::instances::ThompsonV;
use crate::permutation::Permutation;
use crate::syntax::Cursor;
use crate::tree::BinaryTree;

/// A tree diagram. Both trees have as many leaves as the middle has degree.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeDiagram<E> {
    left: BinaryTree,
    middle: E,
    right: BinaryTree,
}

impl<E> TreeDiagram<E> {
    pub fn left(&self) -> &BinaryTree {
        &self.left
    }

    pub fn middle(&self) -> &E {
        &self.middle
    }

    pub fn right(&self) -> &BinaryTree {
        &self.right
    }

    pub fn degree(&self) -> usize {
        self.left.num_leaves()
    }

    pub fn into_parts(self) -> (BinaryTree, E, BinaryTree) {
        (self.left, self.middle, self.right)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// `Greater` means positive.
    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// Text of an ordering: `less`, `equal` or `greater`.
pub fn ordering_text(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

/// Sign of the F element (T_-, 1, T_+): the map carrying the T_+ leaf
/// partition onto the T_- partition is positive iff its slope at the first
/// moved point exceeds 1, i.e. iff at the first leaf whose depths differ the
/// T_- leaf is shallower.
pub fn tree_pair_sign(left: &BinaryTree, right: &BinaryTree) -> Result<Sign> {
    let (dl, dr) = (left.leaf_depths(), right.leaf_depths());
    if dl.len() != dr.len() {
        return Err(WztError::DegreeMismatch {
            left: dl.len(),
            right: dr.len(),
        });
    }
    Ok(match dl.iter().zip(&dr).find(|(a, b)| a != b) {
        None => Sign::Zero,
        Some((a, b)) => Sign::from_ordering(b.cmp(a)),
    })
}

fn tree_text(t: &BinaryTree) -> String {
    if *t == BinaryTree::lambda() {
        "Λ".into()
    } else {
        t.to_string()
    }
}

/// The pieces of a literal `{ left ; middle ; right }` before the middle is
/// interpreted. `middle_pos` is the byte offset of `middle` in the input.
#[derive(Debug, Clone)]
pub(crate) struct RawDiagram<'a> {
    pub left: BinaryTree,
    pub middle: &'a str,
    pub middle_pos: usize,
    pub right: BinaryTree,
}

pub(crate) fn scan_diagram<'a>(cur: &mut Cursor<'a>) -> Result<RawDiagram<'a>> {
    cur.expect('{')?;
    let left = BinaryTree::parse_from(cur)?;
    cur.expect(';')?;
    let middle_pos = cur.pos();
    let rest = cur.rest();
    let end = rest.find([';', '}']).ok_or_else(|| {
        WztError::parse(
            middle_pos + rest.len(),
            "expected `;` after the middle element",
        )
    })?;
    let middle = &rest[..end];
    cur.advance(end);
    cur.expect(';')?;
    let right = BinaryTree::parse_from(cur)?;
    cur.expect('}')?;
    Ok(RawDiagram {
        left,
        middle,
        middle_pos,
        right,
    })
}

fn shift_error(e: WztError, by: usize) -> WztError {
    match e {
        WztError::Parse { pos, msg } => WztError::Parse { pos: pos + by, msg },
        other => other,
    }
}

/// The group of tree diagrams over a cloning system.
#[derive(Debug, Clone)]
pub struct Wzt<S> {
    sys: S,
}

impl<S: CloningSystem> Wzt<S> {
    pub fn new(sys: S) -> Self {
        Wzt { sys }
    }

    pub fn system(&self) -> &S {
        &self.sys
    }

    pub fn diagram(
        &self,
        left: BinaryTree,
        middle: S::Element,
        right: BinaryTree,
    ) -> Result<TreeDiagram<S::Element>> {
        let n = self.sys.degree(&middle);
        for t in [&left, &right] {
            if t.num_leaves() != n {
                return Err(WztError::DegreeMismatch {
                    left: t.num_leaves(),
                    right: n,
                });
            }
        }
        Ok(TreeDiagram {
            left,
            middle,
            right,
        })
    }

    /// (T, 1, T).
    pub fn identity_on(&self, tree: &BinaryTree) -> TreeDiagram<S::Element> {
        TreeDiagram {
            left: tree.clone(),
            middle: self.sys.identity(tree.num_leaves()),
            right: tree.clone(),
        }
    }

    pub fn identity(&self) -> TreeDiagram<S::Element> {
        self.identity_on(&BinaryTree::leaf())
    }

    /// Carets at leaf k of T_- and leaf ρ(g)k of T_+, middle κ^k(g).
    pub fn simple_expand(
        &self,
        d: &TreeDiagram<S::Element>,
        k: usize,
    ) -> Result<TreeDiagram<S::Element>> {
        check_index(k, d.degree())?;
        let j = self.sys.rho(&d.middle).apply(k);
        Ok(TreeDiagram {
            left: d.left.adjoin_caret(k)?,
            middle: self.sys.clone_at(k, &d.middle)?,
            right: d.right.adjoin_caret(j)?,
        })
    }

    /// Expands `d` until its right tree is `target`.
    pub fn expand_right_to(
        &self,
        d: &TreeDiagram<S::Element>,
        target: &BinaryTree,
    ) -> Result<TreeDiagram<S::Element>> {
        let script = d
            .right
            .expansion_script(target)
            .ok_or(WztError::NotAnExpansion)?;
        let mut out = d.clone();
        for j in script {
            let k = self.sys.rho(&out.middle).inverse().apply(j);
            out = self.simple_expand(&out, k)?;
        }
        Ok(out)
    }

    /// Expands `d` until its left tree is `target`.
    pub fn expand_left_to(
        &self,
        d: &TreeDiagram<S::Element>,
        target: &BinaryTree,
    ) -> Result<TreeDiagram<S::Element>> {
        let script = d
            .left
            .expansion_script(target)
            .ok_or(WztError::NotAnExpansion)?;
        let mut out = d.clone();
        for k in script {
            out = self.simple_expand(&out, k)?;
        }
        Ok(out)
    }

    pub fn multiply(
        &self,
        a: &TreeDiagram<S::Element>,
        b: &TreeDiagram<S::Element>,
    ) -> Result<TreeDiagram<S::Element>> {
        let (u, _, _) = BinaryTree::least_common_expansion(&a.right, &b.left);
        let a = self.expand_right_to(a, &u)?;
        let b = self.expand_left_to(b, &u)?;
        Ok(TreeDiagram {
            left: a.left,
            middle: self.sys.multiply(&a.middle, &b.middle)?,
            right: b.right,
        })
    }

    pub fn invert(&self, d: &TreeDiagram<S::Element>) -> TreeDiagram<S::Element> {
        TreeDiagram {
            left: d.right.clone(),
            middle: self.sys.invert(&d.middle),
            right: d.left.clone(),
        }
    }

    fn middle_is_identity(&self, d: &TreeDiagram<S::Element>) -> Result<bool> {
        self.sys.equal(&d.middle, &self.sys.identity(d.degree()))
    }

    /// Every representative of the identity has the form (T, 1, T).
    pub fn is_identity(&self, d: &TreeDiagram<S::Element>) -> Result<bool> {
        Ok(d.left == d.right && self.middle_is_identity(d)?)
    }

    pub fn equals(&self, a: &TreeDiagram<S::Element>, b: &TreeDiagram<S::Element>) -> Result<bool> {
        self.is_identity(&self.multiply(&self.invert(a), b)?)
    }

    /// Sign in the order on F; the middle must be the identity.
    pub fn f_sign(&self, d: &TreeDiagram<S::Element>) -> Result<Sign> {
        if !self.middle_is_identity(d)? {
            return Err(WztError::NotFElement);
        }
        tree_pair_sign(&d.left, &d.right)
    }

    /// `Less` if a < b in F.
    pub fn f_compare(
        &self,
        a: &TreeDiagram<S::Element>,
        b: &TreeDiagram<S::Element>,
    ) -> Result<Ordering> {
        for d in [a, b] {
            if !self.middle_is_identity(d)? {
                return Err(WztError::NotFElement);
            }
        }
        let s = self.f_sign(&self.multiply(&self.invert(a), b)?)?;
        Ok(s.to_ordering().reverse())
    }

    fn require_order(&self) -> Result<()> {
        if self.sys.order_kind() == OrderKind::None {
            Err(WztError::Unordered(self.sys.name()))
        } else {
            Ok(())
        }
    }

    /// The cone Π: a nontrivial middle decides; otherwise the F order does.
    /// A left-order cone for every ordered instance.
    pub fn pi_sign(&self, d: &TreeDiagram<S::Element>) -> Result<Sign> {
        self.require_order()?;
        if self.middle_is_identity(d)? {
            tree_pair_sign(&d.left, &d.right)
        } else {
            element_sign(&self.sys, &d.middle).map(Sign::from_ordering)
        }
    }

    /// The cone of the splitting kernel ⋊ F, F first: unequal trees decide
    /// through the F order; otherwise the middle decides. Pure instances only.
    /// Conjugation-invariant when the groups G_n are bi-ordered.
    pub fn semidirect_sign(&self, d: &TreeDiagram<S::Element>) -> Result<Sign> {
        self.require_order()?;
        if !self.sys.is_pure() {
            return Err(WztError::ImpureInstance(self.sys.name()));
        }
        if d.left != d.right {
            tree_pair_sign(&d.left, &d.right)
        } else {
            element_sign(&self.sys, &d.middle).map(Sign::from_ordering)
        }
    }

    /// The shipped order: [`Wzt::semidirect_sign`] for pure bi-ordered
    /// instances, [`Wzt::pi_sign`] otherwise.
    pub fn sign(&self, d: &TreeDiagram<S::Element>) -> Result<Sign> {
        if self.sys.is_pure() && self.sys.order_kind() == OrderKind::Bi {
            self.semidirect_sign(d)
        } else {
            self.pi_sign(d)
        }
    }

    /// `Less` if a < b, i.e. a⁻¹b is positive.
    pub fn compare(
        &self,
        a: &TreeDiagram<S::Element>,
        b: &TreeDiagram<S::Element>,
    ) -> Result<Ordering> {
        let s = self.sign(&self.multiply(&self.invert(a), b)?)?;
        Ok(s.to_ordering().reverse())
    }

    /// Like [`Wzt::compare`] with an explicit cone.
    pub fn compare_with(
        &self,
        cone: impl Fn(&Self, &TreeDiagram<S::Element>) -> Result<Sign>,
        a: &TreeDiagram<S::Element>,
        b: &TreeDiagram<S::Element>,
    ) -> Result<Ordering> {
        let s = cone(self, &self.multiply(&self.invert(a), b)?)?;
        Ok(s.to_ordering().reverse())
    }

    /// The natural projection onto V: middle g becomes ρ(g).
    pub fn project(&self, d: &TreeDiagram<S::Element>) -> TreeDiagram<Permutation> {
        TreeDiagram {
            left: d.left.clone(),
            middle: self.sys.rho(&d.middle),
            right: d.right.clone(),
        }
    }

    /// Whether `d` lies in the kernel of the projection onto V.
    pub fn kernel_member(&self, d: &TreeDiagram<S::Element>) -> bool {
        d.left == d.right && self.sys.rho(&d.middle).is_identity()
    }

    /// The F element (T_-, 1, T_+) of the same trees, for a V element with
    /// trivial middle.
    pub fn lift(&self, f: &TreeDiagram<Permutation>) -> Result<TreeDiagram<S::Element>> {
        if !f.middle.is_identity() {
            return Err(WztError::NotFElement);
        }
        Ok(TreeDiagram {
            left: f.left.clone(),
            middle: self.sys.identity(f.degree()),
            right: f.right.clone(),
        })
    }

    /// lift(project(d)); pure instances only.
    pub fn f_part(&self, d: &TreeDiagram<S::Element>) -> Result<TreeDiagram<S::Element>> {
        if !self.sys.is_pure() {
            return Err(WztError::ImpureInstance(self.sys.name()));
        }
        self.lift(&self.project(d))
    }

    /// d · f_part(d)⁻¹, which lies in the kernel.
    pub fn kernel_part(&self, d: &TreeDiagram<S::Element>) -> Result<TreeDiagram<S::Element>> {
        let f = self.f_part(d)?;
        self.multiply(d, &self.invert(&f))
    }

    /// Random diagram with `n` leaves; `max_len` bounds the middle's size.
    pub fn random_diagram<R: Rng + ?Sized>(
        &self,
        n: usize,
        max_len: usize,
        rng: &mut R,
    ) -> TreeDiagram<S::Element> {
        TreeDiagram {
            left: BinaryTree::random(n, rng),
            middle: self.sys.random(n, max_len, rng),
            right: BinaryTree::random(n, rng),
        }
    }

    pub fn format(&self, d: &TreeDiagram<S::Element>) -> String {
        format!(
            "{{{}; {}; {}}}",
            tree_text(&d.left),
            self.sys.format(&d.middle),
            tree_text(&d.right)
        )
    }

    /// Parses `{ left ; middle ; right }`; a middle of `1` is the identity.
    pub fn parse_diagram(&self, text: &str) -> Result<TreeDiagram<S::Element>> {
        let mut cur = Cursor::new(text);
        let raw = scan_diagram(&mut cur)?;
        cur.expect_end()?;
        self.build(&raw)
    }

    pub(crate) fn build(&self, raw: &RawDiagram<'_>) -> Result<TreeDiagram<S::Element>> {
        let n = raw.left.num_leaves();
        if raw.right.num_leaves() != n {
            return Err(WztError::parse(
                raw.middle_pos,
                format!(
                    "trees have {} and {} leaves",
                    raw.left.num_leaves(),
                    raw.right.num_leaves()
                ),
            ));
        }
        let lead = raw.middle.len() - raw.middle.trim_start().len();
        let text = raw.middle.trim();
        let middle = if text == "1" {
            self.sys.identity(n)
        } else {
            self.sys
                .parse(text, n)
                .map_err(|e| shift_error(e, raw.middle_pos + lead))?
        };
        Ok(TreeDiagram {
            left: raw.left.clone(),
            middle,
            right: raw.right.clone(),
        })
    }
}

impl Wzt<ThompsonV> {
    /// The target of every projection.
    pub fn v() -> Self {
        Wzt::new(ThompsonV)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::direct_powers::{DirectPowers, Endomorphism, Integers};
    use crate::instances::{BraidedF, BraidedV, ThompsonF};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    fn x0() -> TreeDiagram<crate::instances::Unit> {
        Wzt::new(ThompsonF)
            .parse_diagram("{((L,L),L); 1; (L,(L,L))}")
            .unwrap()
    }

    fn bv(s: &str) -> TreeDiagram<BraidWord> {
        Wzt::new(BraidedV).parse_diagram(s).unwrap()
    }

    #[test]
    fn simple_expand_examples() {
        let f = Wzt::new(ThompsonF);
        let e = f
            .simple_expand(&f.identity_on(&BinaryTree::lambda()), 1)
            .unwrap();
        assert_eq!((e.left(), e.right()), (&t("((L,L),L)"), &t("((L,L),L)")));

        let w = Wzt::new(BraidedV);
        let e = w.simple_expand(&bv("{Λ; b2: s1; Λ}"), 1).unwrap();
        assert_eq!(e.left(), &t("((L,L),L)"));
        assert_eq!(e.right(), &t("(L,(L,L))"));
        assert_eq!(e.middle().letters(), &[2, 1]);

        let v = Wzt::v();
        let e = v
            .simple_expand(&v.parse_diagram("{Λ; [2,1]; Λ}").unwrap(), 1)
            .unwrap();
        assert_eq!(v.format(&e), "{((L,L),L); [2,3,1]; (L,(L,L))}");
        assert!(v.simple_expand(&e, 4).is_err());
    }

    #[test]
    fn expand_right_to_examples() {
        let f = Wzt::new(ThompsonF);
        let d = x0();
        assert_eq!(f.expand_right_to(&d, d.right()).unwrap(), d);
        let e = f.expand_right_to(&d, &t("((L,L),(L,L))")).unwrap();
        assert_eq!(e.left(), &t("(((L,L),L),L)"));
        assert_eq!(e.right(), &t("((L,L),(L,L))"));
        assert_eq!(
            f.expand_right_to(&d, &t("((L,L),L)")),
            Err(WztError::NotAnExpansion)
        );

        let w = Wzt::new(BraidedV);
        let e = w
            .expand_right_to(&bv("{Λ; b2: s1; Λ}"), &t("(L,(L,L))"))
            .unwrap();
        assert_eq!(e.left(), &t("((L,L),L)"));
        assert_eq!(e.middle().letters(), &[2, 1]);
    }

    #[test]
    fn multiply_examples() {
        let f = Wzt::new(ThompsonF);
        let x = x0();
        assert!(f
            .is_identity(&f.multiply(&x, &f.invert(&x)).unwrap())
            .unwrap());
        let sq = f.multiply(&x, &x).unwrap();
        assert_eq!(sq.left(), &t("(((L,L),L),L)"));
        assert_eq!(sq.right(), &t("(L,(L,(L,L)))"));

        let w = Wzt::new(BraidedV);
        let s = bv("{Λ; b2: s1; Λ}");
        assert_eq!(w.format(&w.multiply(&s, &s).unwrap()), "{Λ; b2: s1 s1; Λ}");
    }

    #[test]
    fn invert_and_identity_examples() {
        let w = Wzt::new(BraidedV);
        let one = w.identity_on(&t("((L,L),L)"));
        assert_eq!(w.invert(&one), one);
        assert!(w.is_identity(&one).unwrap());
        assert_eq!(
            w.format(&w.invert(&bv("{Λ; b2: s1; Λ}"))),
            "{Λ; b2: s1^-1; Λ}"
        );
        assert!(!w.is_identity(&bv("{Λ; b2: s1 s1; Λ}")).unwrap());
        assert!(!Wzt::new(ThompsonF).is_identity(&x0()).unwrap());
        // A middle equal to 1 only up to braid relations.
        assert!(w.is_identity(&bv("{Λ; b2: s1 s1^-1; Λ}")).unwrap());
    }

    #[test]
    fn equals_examples() {
        let w = Wzt::new(BraidedV);
        let s = bv("{Λ; b2: s1; Λ}");
        assert!(w.equals(&s, &w.simple_expand(&s, 1).unwrap()).unwrap());
        assert!(w
            .equals(&s, &w.multiply(&s, &w.identity()).unwrap())
            .unwrap());
        let f = Wzt::new(ThompsonF);
        let x = x0();
        assert!(!f.equals(&x, &f.multiply(&x, &x).unwrap()).unwrap());
    }

    #[test]
    fn f_order_examples() {
        let f = Wzt::new(ThompsonF);
        let x = x0();
        let one = f.identity();
        assert_eq!(f.f_compare(&one, &one).unwrap(), Ordering::Equal);
        assert_eq!(f.f_compare(&one, &x).unwrap(), Ordering::Greater);
        assert_eq!(
            f.f_compare(&x, &f.multiply(&x, &x).unwrap()).unwrap(),
            Ordering::Greater
        );
        assert_eq!(f.sign(&f.invert(&x)).unwrap(), Sign::Positive);
        assert_eq!(f.sign(&one).unwrap(), Sign::Zero);
        let w = Wzt::new(BraidedV);
        assert_eq!(w.f_sign(&bv("{Λ; b2: s1; Λ}")), Err(WztError::NotFElement));
    }

    /// Slope of the PL map at the first moved point, from breakpoints.
    fn pl_sign_oracle(left: &BinaryTree, right: &BinaryTree) -> Sign {
        fn intervals(t: &BinaryTree) -> Vec<(f64, f64)> {
            let mut out = Vec::new();
            let mut x = 0.0;
            for d in t.leaf_depths() {
                let w = 0.5f64.powi(d as i32);
                out.push((x, w));
                x += w;
            }
            out
        }
        // The map sends right-tree intervals onto left-tree intervals.
        let (src, dst) = (intervals(right), intervals(left));
        for ((a, wa), (b, wb)) in src.iter().zip(&dst) {
            if a != b || wa != wb {
                return if wb > wa {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
            }
        }
        Sign::Zero
    }

    #[test]
    fn tree_pair_sign_matches_pl_oracle() {
        for n in 1..=6 {
            let trees = BinaryTree::all_with_leaves(n);
            for a in &trees {
                for b in &trees {
                    assert_eq!(
                        tree_pair_sign(a, b).unwrap(),
                        pl_sign_oracle(a, b),
                        "{a} {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn sign_and_compare_examples() {
        let w = Wzt::new(BraidedV);
        let s = bv("{Λ; b2: s1; Λ}");
        let si = bv("{Λ; b2: s1^-1; Λ}");
        assert_eq!(w.sign(&s).unwrap(), Sign::Positive);
        assert_eq!(w.compare(&w.identity(), &s).unwrap(), Ordering::Less);
        assert_eq!(w.compare(&si, &s).unwrap(), Ordering::Less);
        assert_eq!(w.compare(&s, &s).unwrap(), Ordering::Equal);
        assert!(matches!(
            Wzt::v().sign(&Wzt::v().identity()),
            Err(WztError::Unordered(_))
        ));
    }

    #[test]
    fn projection_examples() {
        let w = Wzt::new(BraidedV);
        let v = Wzt::v();
        let p = w.project(&bv("{Λ; b2: s1; Λ}"));
        assert_eq!(v.format(&p), "{Λ; [2,1]; Λ}");
        assert!(!w.kernel_member(&bv("{Λ; b2: s1; Λ}")));
        assert!(w.kernel_member(&bv("{Λ; b2: s1 s1; Λ}")));
        assert!(!Wzt::new(ThompsonF).kernel_member(&x0()));

        let bf = Wzt::new(BraidedF);
        let d = bf
            .parse_diagram("{((L,L),L); b3: s1 s1 s2 s2; (L,(L,L))}")
            .unwrap();
        assert!(bf.project(&d).middle().is_identity());
        let k = bf.kernel_part(&d).unwrap();
        assert!(bf.kernel_member(&k));
        assert!(bf
            .equals(&d, &bf.multiply(&k, &bf.f_part(&d).unwrap()).unwrap())
            .unwrap());
        assert!(matches!(
            w.f_part(&bv("{Λ; b2: s1; Λ}")),
            Err(WztError::ImpureInstance(_))
        ));
    }

    #[test]
    fn literal_errors_carry_positions() {
        let w = Wzt::new(BraidedV);
        match w.parse_diagram("{Λ; b2: s1 s3; Λ}") {
            Err(WztError::Parse { pos, .. }) => assert_eq!(pos, 12),
            other => panic!("unexpected {other:?}"),
        }
        assert!(w.parse_diagram("{Λ; b3: s1; Λ}").is_err());
        assert!(w.parse_diagram("{Λ; b2: s1 Λ}").is_err());
        assert!(Wzt::new(BraidedF).parse_diagram("{Λ; b2: s1; Λ}").is_err());
        let f = Wzt::new(ThompsonF);
        assert_eq!(
            f.format(&f.parse_diagram("{ Λ ; 1 ; Λ }").unwrap()),
            "{Λ; 1; Λ}"
        );
    }

    fn dirpow() -> Wzt<DirectPowers<Integers>> {
        Wzt::new(
            DirectPowers::new(Integers, Endomorphism::Identity, Endomorphism::Identity).unwrap(),
        )
    }

    /// The cone Π is not conjugation-invariant on a pure bi-ordered instance,
    /// while the semidirect cone is.
    #[test]
    fn pi_cone_is_not_right_invariant() {
        let w = dirpow();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut pi_broken = false;
        for _ in 0..2000 {
            let n = rng.gen_range(1..=4);
            let a = w.random_diagram(n, 8, &mut rng);
            let b = w.random_diagram(n, 8, &mut rng);
            let c = w.random_diagram(rng.gen_range(1..=4), 8, &mut rng);
            let (ac, bc) = (w.multiply(&a, &c).unwrap(), w.multiply(&b, &c).unwrap());
            assert_eq!(w.compare(&a, &b).unwrap(), w.compare(&ac, &bc).unwrap());
            let pi = |x: &TreeDiagram<_>, y: &TreeDiagram<_>| {
                w.compare_with(|s, d| s.pi_sign(d), x, y).unwrap()
            };
            if pi(&a, &b) != pi(&ac, &bc) {
                pi_broken = true;
            }
        }
        assert!(pi_broken);
    }
}
