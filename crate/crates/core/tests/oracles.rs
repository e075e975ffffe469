//! Cone enumeration against the gap-set representation, which is built by
//! sieving and by the semigroup tree without any reference to the cone.

use std::collections::BTreeSet;

use num::Integer;

use nsg::enumeration::{count_by_genus, count_containing, enumerate_by_genus, enumerate_containing, ClassFilter};
use nsg::oracle::semigroup_tree;
use nsg::{GapSet, Semigroup};

fn gap_sets(list: &[Semigroup]) -> BTreeSet<Vec<u64>> {
    list.iter().map(Semigroup::gaps).collect()
}

fn tree_sets(tree: &[GapSet], p: u64, g: u64) -> BTreeSet<Vec<u64>> {
    tree.iter()
        .filter(|t| t.genus() == g && t.contains(p))
        .map(|t| t.gaps().iter().copied().collect())
        .collect()
}

#[test]
fn tree_matches_cone_for_larger_p() {
    let tree = semigroup_tree(11);
    for p in [6, 7] {
        for g in 0..=11 {
            let cone = gap_sets(&enumerate_by_genus(p, g, ClassFilter::All).unwrap());
            assert_eq!(cone, tree_sets(&tree, p, g), "p={p} g={g}");
        }
    }
}

#[test]
fn invariants_match_sieve() {
    for p in [3, 4, 5] {
        for g in 0..=15 {
            for s in enumerate_by_genus(p, g, ClassFilter::All).unwrap() {
                let sieved = GapSet::from_generators(&s.minimal_generators()).unwrap();
                assert_eq!(sieved.genus(), s.genus(), "{s}");
                assert_eq!(sieved.frobenius(), s.frobenius_signed(), "{s}");
                assert_eq!(sieved.apery(p), s.apery(), "{s}");
                assert_eq!(sieved.minimal_generators(), s.minimal_generators(), "{s}");
                let m = sieved.minimal_generators()[0];
                assert_eq!(s.multiplicity(), m, "{s}");
            }
        }
    }
}

#[test]
fn no_pseudo_symmetric_of_maximal_embedding_dimension() {
    for p in [5, 7] {
        for g in 1..=12 {
            for s in enumerate_by_genus(p, g, ClassFilter::Psym).unwrap() {
                assert!(s.embedding_dimension() < p as usize, "{s} has embedding dimension {p}");
            }
        }
    }
}

#[test]
fn classes_partition_containing_counts() {
    for p in [3, 4, 5] {
        for q in (1..=30).filter(|q| q.gcd(&p) == 1) {
            let all = enumerate_containing(p, q, ClassFilter::All).unwrap();
            let sym = all.iter().filter(|s| s.is_symmetric()).count() as u64;
            let psym = all.iter().filter(|s| s.is_pseudo_symmetric()).count() as u64;
            assert!(all.iter().all(|s| !(s.is_symmetric() && s.is_pseudo_symmetric())));
            assert_eq!(sym, count_containing(p, q, ClassFilter::Sym).unwrap());
            assert_eq!(psym, count_containing(p, q, ClassFilter::Psym).unwrap());
            assert!(sym + psym <= all.len() as u64);
            for s in &all {
                assert!(s.contains(p) && s.contains(q), "{s} misses {q}");
            }
        }
    }
}

#[test]
fn multiplicity_three_pattern() {
    for g in 0..=30 {
        let sym = count_by_genus(3, g, ClassFilter::Sym).unwrap();
        assert_eq!(sym, (g % 3 != 2) as u64, "sym g={g}");
        if g > 0 {
            let psym = count_by_genus(3, g, ClassFilter::Psym).unwrap();
            assert_eq!(psym, (g % 3 != 1) as u64, "psym g={g}");
        }
    }
}

#[test]
fn multiplicity_three_split() {
    for q in (1..=60).filter(|q| q % 3 != 0) {
        let n = count_containing(3, q, ClassFilter::All).unwrap();
        let medim = count_containing(3, q, ClassFilter::Medim).unwrap();
        let sym = count_containing(3, q, ClassFilter::Sym).unwrap();
        assert_eq!(n, medim + sym, "q={q}");
    }
}

/// Symmetric semigroups containing 4 and q, counted on gap sets from the
/// tree. Every such semigroup has genus at most that of `<4, q>`.
#[test]
fn sym_containing_four_from_tree() {
    let max_q = 11;
    let tree = semigroup_tree(3 * (max_q - 1) / 2);
    for q in (1..=max_q).step_by(2) {
        let sym = tree
            .iter()
            .filter(|t| t.contains(4) && t.contains(q) && 2 * t.genus() as i64 == t.frobenius() + 1)
            .count() as u64;
        assert_eq!(sym, count_containing(4, q, ClassFilter::Sym).unwrap(), "q={q}");
    }
    assert_eq!(count_containing(4, 9, ClassFilter::Sym).unwrap(), 12);
    assert_eq!(count_containing(4, 11, ClassFilter::Sym).unwrap(), 16);
}

#[test]
fn monotone_in_q() {
    for p in [3, 4, 5] {
        let counts: Vec<u64> = (1..=60)
            .filter(|q| q.gcd(&p) == 1)
            .map(|q| count_containing(p, q, ClassFilter::All).unwrap())
            .collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]), "p={p}: {counts:?}");
    }
}
