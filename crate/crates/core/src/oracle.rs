//! Reference enumerations that share no code with the cone search.

use crate::semigroup::GapSet;

/// All numerical semigroups of genus at most `max_genus`, produced by the
/// semigroup tree: the children of `S` are `S \ {x}` for every minimal
/// generator `x` of `S` larger than its Frobenius number.
pub fn semigroup_tree(max_genus: u64) -> Vec<GapSet> {
    let mut out = Vec::new();
    let mut stack = vec![GapSet::naturals()];
    while let Some(s) = stack.pop() {
        if s.genus() < max_genus {
            let f = s.frobenius();
            for x in s.minimal_generators() {
                if x as i64 > f {
                    let child = GapSet::from_gaps(s.gaps().iter().copied().chain([x]))
                        .expect("removing a minimal generator keeps closure");
                    stack.push(child);
                }
            }
        }
        out.push(s);
    }
    out.sort();
    out
}

/// Semigroups of the tree of genus exactly `g` that contain `p`.
pub fn tree_by_genus(p: u64, g: u64) -> Vec<GapSet> {
    semigroup_tree(g)
        .into_iter()
        .filter(|s| s.genus() == g && s.contains(p))
        .collect()
}
