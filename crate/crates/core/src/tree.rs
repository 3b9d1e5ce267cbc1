//! Rooted planar binary trees: leaf indexing, caret adjunction and least
//! common expansions.
//!
//! Text grammar: a leaf is `L`, a caret is `(left,right)`. `Λ` is accepted on
//! input as shorthand for the single caret `(L,L)`.

use std::fmt;

use rand::Rng;

use crate::error::{check_index, Result, WztError};
use crate::syntax::Cursor;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Caret(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::Leaf
    }

    pub fn caret(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Caret(Box::new(left), Box::new(right))
    }

    /// The single caret Λ = `(L,L)`.
    pub fn lambda() -> Self {
        BinaryTree::caret(BinaryTree::Leaf, BinaryTree::Leaf)
    }

    pub fn num_leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Caret(l, r) => l.num_leaves() + r.num_leaves(),
        }
    }

    pub fn num_carets(&self) -> usize {
        self.num_leaves() - 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    /// Replaces leaf `k` by a caret. Leaves after `k` shift up by one.
    pub fn adjoin_caret(&self, k: usize) -> Result<BinaryTree> {
        check_index(k, self.num_leaves())?;
        let mut out = self.clone();
        out.adjoin_in_place(k);
        Ok(out)
    }

    pub(crate) fn adjoin_in_place(&mut self, k: usize) {
        match self {
            BinaryTree::Leaf => {
                debug_assert_eq!(k, 1);
                *self = BinaryTree::lambda();
            }
            BinaryTree::Caret(l, r) => {
                let left_leaves = l.num_leaves();
                if k <= left_leaves {
                    l.adjoin_in_place(k);
                } else {
                    r.adjoin_in_place(k - left_leaves);
                }
            }
        }
    }

    /// Depth of every leaf, left to right. Leaf i covers a dyadic interval of
    /// length 2^-depth.
    pub fn leaf_depths(&self) -> Vec<u32> {
        fn walk(t: &BinaryTree, depth: u32, out: &mut Vec<u32>) {
            match t {
                BinaryTree::Leaf => out.push(depth),
                BinaryTree::Caret(l, r) => {
                    walk(l, depth + 1, out);
                    walk(r, depth + 1, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// True if `self` is a rooted prefix of `other` (other is an expansion of self).
    pub fn is_prefix_of(&self, other: &BinaryTree) -> bool {
        match (self, other) {
            (BinaryTree::Leaf, _) => true,
            (BinaryTree::Caret(..), BinaryTree::Leaf) => false,
            (BinaryTree::Caret(a, b), BinaryTree::Caret(c, d)) => {
                a.is_prefix_of(c) && b.is_prefix_of(d)
            }
        }
    }

    /// Caret-adjunction script growing `self` into `target`: leaf indices, to be
    /// applied in order. Missing carets are listed leftmost first, parents before
    /// children. `None` if `target` is not an expansion of `self`.
    pub fn expansion_script(&self, target: &BinaryTree) -> Option<Vec<usize>> {
        fn grow(t: &BinaryTree, u: &BinaryTree, offset: usize, out: &mut Vec<usize>) -> bool {
            match (t, u) {
                (BinaryTree::Leaf, BinaryTree::Leaf) => true,
                (BinaryTree::Leaf, BinaryTree::Caret(ul, ur)) => {
                    out.push(offset + 1);
                    grow(&BinaryTree::Leaf, ul, offset, out)
                        && grow(&BinaryTree::Leaf, ur, offset + ul.num_leaves(), out)
                }
                (BinaryTree::Caret(..), BinaryTree::Leaf) => false,
                (BinaryTree::Caret(tl, tr), BinaryTree::Caret(ul, ur)) => {
                    grow(tl, ul, offset, out) && grow(tr, ur, offset + ul.num_leaves(), out)
                }
            }
        }
        let mut out = Vec::new();
        grow(self, target, 0, &mut out).then_some(out)
    }

    /// The minimal common expansion of `a` and `b`, with the scripts taking each
    /// of them there.
    pub fn least_common_expansion(
        a: &BinaryTree,
        b: &BinaryTree,
    ) -> (BinaryTree, Vec<usize>, Vec<usize>) {
        fn union(a: &BinaryTree, b: &BinaryTree) -> BinaryTree {
            match (a, b) {
                (BinaryTree::Leaf, t) | (t, BinaryTree::Leaf) => t.clone(),
                (BinaryTree::Caret(al, ar), BinaryTree::Caret(bl, br)) => {
                    BinaryTree::caret(union(al, bl), union(ar, br))
                }
            }
        }
        let u = union(a, b);
        let sa = a.expansion_script(&u).expect("union contains a");
        let sb = b.expansion_script(&u).expect("union contains b");
        (u, sa, sb)
    }

    /// Applies a caret-adjunction script.
    pub fn apply_script(&self, script: &[usize]) -> Result<BinaryTree> {
        let mut t = self.clone();
        for &k in script {
            check_index(k, t.num_leaves())?;
            t.adjoin_in_place(k);
        }
        Ok(t)
    }

    /// A uniformly random tree with `n` leaves (Rémy's growth process).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BinaryTree {
        assert!(n >= 1);
        // arena: children[i] = None for a leaf
        let mut children: Vec<Option<(usize, usize)>> = vec![None];
        for _ in 1..n {
            let pick = rng.gen_range(0..children.len());
            let fresh = children.len();
            children.push(None);
            let moved = children.len();
            children.push(children[pick]);
            // `moved` takes over the picked node's subtree; `pick` becomes the new caret
            children[pick] = Some(if rng.gen_bool(0.5) {
                (moved, fresh)
            } else {
                (fresh, moved)
            });
        }
        fn build(children: &[Option<(usize, usize)>], i: usize) -> BinaryTree {
            match children[i] {
                None => BinaryTree::Leaf,
                Some((l, r)) => BinaryTree::caret(build(children, l), build(children, r)),
            }
        }
        build(&children, 0)
    }

    /// Every tree with exactly `n` leaves (Catalan many).
    pub fn all_with_leaves(n: usize) -> Vec<BinaryTree> {
        if n == 1 {
            return vec![BinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for left in 1..n {
            let ls = BinaryTree::all_with_leaves(left);
            let rs = BinaryTree::all_with_leaves(n - left);
            for l in &ls {
                for r in &rs {
                    out.push(BinaryTree::caret(l.clone(), r.clone()));
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<BinaryTree> {
        let mut cur = Cursor::new(text);
        let t = Self::parse_from(&mut cur)?;
        cur.expect_end()?;
        Ok(t)
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<BinaryTree> {
        match cur.peek() {
            Some('L') => {
                cur.bump();
                Ok(BinaryTree::Leaf)
            }
            Some('Λ') => {
                cur.bump();
                Ok(BinaryTree::lambda())
            }
            Some('(') => {
                cur.bump();
                let l = Self::parse_from(cur)?;
                cur.expect(',')?;
                let r = Self::parse_from(cur)?;
                cur.expect(')')?;
                Ok(BinaryTree::caret(l, r))
            }
            _ => Err(cur.error("expected a tree (`L`, `Λ` or `(T,T)`)")),
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "L"),
            BinaryTree::Caret(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl std::str::FromStr for BinaryTree {
    type Err = WztError;

    fn from_str(s: &str) -> Result<Self> {
        BinaryTree::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn t(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    /// Internal-node addresses as L/R strings; `""` is the root caret.
    fn caret_addresses(tree: &BinaryTree) -> BTreeSet<String> {
        fn walk(t: &BinaryTree, addr: String, out: &mut BTreeSet<String>) {
            if let BinaryTree::Caret(l, r) = t {
                out.insert(addr.clone());
                walk(l, format!("{addr}0"), out);
                walk(r, format!("{addr}1"), out);
            }
        }
        let mut out = BTreeSet::new();
        walk(tree, String::new(), &mut out);
        out
    }

    #[test]
    fn adjoin_caret_examples() {
        assert_eq!(BinaryTree::Leaf.adjoin_caret(1).unwrap(), t("(L,L)"));
        assert_eq!(t("(L,L)").adjoin_caret(1).unwrap(), t("((L,L),L)"));
        assert_eq!(t("((L,L),L)").adjoin_caret(3).unwrap(), t("((L,L),(L,L))"));
        assert!(matches!(
            t("(L,L)").adjoin_caret(3),
            Err(WztError::IndexOutOfRange { index: 3, max: 2 })
        ));
        assert!(t("(L,L)").adjoin_caret(0).is_err());
    }

    #[test]
    fn least_common_expansion_examples() {
        let x = t("((L,L),(L,L))");
        assert_eq!(
            BinaryTree::least_common_expansion(&x, &x),
            (x.clone(), vec![], vec![])
        );
        assert_eq!(
            BinaryTree::least_common_expansion(&t("((L,L),L)"), &t("(L,(L,L))")),
            (x, vec![3], vec![1])
        );
        assert_eq!(
            BinaryTree::least_common_expansion(&BinaryTree::Leaf, &t("(L,L)")),
            (t("(L,L)"), vec![1], vec![])
        );
    }

    #[test]
    fn lce_is_caret_union_exhaustively() {
        let mut trees = Vec::new();
        for n in 1..=6 {
            trees.extend(BinaryTree::all_with_leaves(n));
        }
        for a in &trees {
            for b in &trees {
                let (u, sa, sb) = BinaryTree::least_common_expansion(a, b);
                assert_eq!(a.apply_script(&sa).unwrap(), u);
                assert_eq!(b.apply_script(&sb).unwrap(), u);
                let expected: BTreeSet<_> = caret_addresses(a)
                    .union(&caret_addresses(b))
                    .cloned()
                    .collect();
                assert_eq!(caret_addresses(&u), expected);
                assert_eq!(sa.len(), u.num_carets() - a.num_carets());
            }
        }
    }

    #[test]
    fn adjoin_shifts_later_leaves() {
        let base = t("((L,(L,L)),L)");
        let depths = base.leaf_depths();
        for k in 1..=base.num_leaves() {
            let grown = base.adjoin_caret(k).unwrap().leaf_depths();
            for j in (k + 1)..=base.num_leaves() {
                assert_eq!(grown[j], depths[j - 1]);
            }
            assert_eq!(grown[k - 1], depths[k - 1] + 1);
            assert_eq!(grown[k], depths[k - 1] + 1);
        }
    }

    #[test]
    fn expansion_script_rejects_non_prefix() {
        assert_eq!(t("((L,L),L)").expansion_script(&t("(L,(L,L))")), None);
        assert!(!t("((L,L),L)").is_prefix_of(&t("(L,L)")));
        assert!(t("(L,L)").is_prefix_of(&t("((L,L),L)")));
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| BinaryTree::all_with_leaves(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn random_trees_have_requested_size_and_cover_all_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut seen = BTreeSet::new();
        for _ in 0..400 {
            let tree = BinaryTree::random(4, &mut rng);
            assert_eq!(tree.num_leaves(), 4);
            seen.insert(tree.to_string());
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn parse_accepts_lambda_and_whitespace() {
        assert_eq!(t(" ( L , Λ ) "), t("(L,(L,L))"));
        assert!(BinaryTree::parse("(L,L").is_err());
        assert!(BinaryTree::parse("(L,L))").is_err());
    }

    fn tree_strategy() -> impl Strategy<Value = BinaryTree> {
        let leaf = Just(BinaryTree::Leaf);
        leaf.prop_recursive(6, 32, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| BinaryTree::caret(l, r))
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(tree in tree_strategy()) {
            prop_assert_eq!(BinaryTree::parse(&tree.to_string()).unwrap(), tree);
        }

        #[test]
        fn scripts_replay_to_the_expansion(a in tree_strategy(), b in tree_strategy()) {
            let (u, sa, sb) = BinaryTree::least_common_expansion(&a, &b);
            prop_assert!(a.is_prefix_of(&u) && b.is_prefix_of(&u));
            prop_assert_eq!(a.apply_script(&sa).unwrap(), u.clone());
            prop_assert_eq!(b.apply_script(&sb).unwrap(), u);
        }
    }
}
