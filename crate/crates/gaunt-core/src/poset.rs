//! Finite posets: construction from preorders by condensation, the standard
//! comparison posets (chains, Boolean lattices, weak orders), products,
//! isomorphism search and Hasse diagrams.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A finite poset with labeled elements. The relation is stored reflexively
/// and transitively closed; antisymmetry is enforced at construction by
/// condensing mutually related elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Closes the given relation reflexively and transitively, then condenses
    /// mutually related elements into single ones. Returns the poset and the
    /// number of elements lost to condensation.
    pub fn from_preorder(labels: Vec<String>, mut rel: Vec<Vec<bool>>) -> (Poset, usize) {
        let n = labels.len();
        for i in 0..n {
            rel[i][i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i][k] {
                    for j in 0..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        // classes of mutual relation, ordered by least member
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let members: Vec<usize> =
                (i..n).filter(|&j| rel[i][j] && rel[j][i]).collect();
            for &j in &members {
                class_of[j] = classes.len();
            }
            classes.push(members);
        }
        let m = classes.len();
        let merged = n - m;
        let labels: Vec<String> = classes
            .iter()
            .map(|c| c.iter().map(|&i| labels[i].as_str()).join("="))
            .collect();
        let mut leq = vec![vec![false; m]; m];
        for (a, ca) in classes.iter().enumerate() {
            for (b, cb) in classes.iter().enumerate() {
                leq[a][b] = rel[ca[0]][cb[0]];
                debug_assert!(!leq[a][b] || rel[ca[0]][cb[0]]);
                let _ = cb;
            }
        }
        (Poset { labels, leq }, merged)
    }

    /// A poset from an already-antisymmetric relation; panics on cycles.
    pub fn from_order(labels: Vec<String>, rel: Vec<Vec<bool>>) -> Poset {
        let (p, merged) = Poset::from_preorder(labels, rel);
        assert_eq!(merged, 0, "relation is not antisymmetric");
        p
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The totally ordered set 0 < 1 < … < n.
    pub fn chain(n: usize) -> Poset {
        let labels = (0..=n).map(|i| i.to_string()).collect();
        let leq = (0..=n).map(|i| (0..=n).map(|j| i <= j).collect()).collect();
        Poset { labels, leq }
    }

    /// Subsets of the given items, ordered by inclusion.
    pub fn boolean_lattice(items: &[String]) -> Poset {
        let n = items.len();
        let subsets: Vec<u64> = (0..1u64 << n).collect();
        let labels = subsets
            .iter()
            .map(|&s| {
                let names: Vec<&str> = (0..n)
                    .filter(|&b| s >> b & 1 == 1)
                    .map(|b| items[b].as_str())
                    .collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        let leq = subsets
            .iter()
            .map(|&s| subsets.iter().map(|&t| s & t == s).collect())
            .collect();
        Poset { labels, leq }
    }

    /// Permutations of {1,…,n} under inversion-set containment, where the
    /// inversion set of a word holds the value pairs (a,b) with a < b and b
    /// written before a.
    pub fn weak_order(n: usize) -> Poset {
        let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
        let inv = |w: &[usize]| -> Vec<(usize, usize)> {
            let mut out = Vec::new();
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    if w[i] > w[j] {
                        out.push((w[j], w[i]));
                    }
                }
            }
            out
        };
        let sets: Vec<Vec<(usize, usize)>> = perms.iter().map(|w| inv(w)).collect();
        let labels = perms
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w.iter().map(|v| v.to_string()).collect()
                }
            })
            .collect();
        let leq = sets
            .iter()
            .map(|s| sets.iter().map(|t| s.iter().all(|p| t.contains(p))).collect())
            .collect();
        Poset { labels, leq }
    }

    /// The weak order built instead from its generating relation: ρ is
    /// covered by the word that swaps an adjacent ascent of ρ.
    pub fn weak_order_generated(n: usize) -> Poset {
        let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
        let m = perms.len();
        let mut rel = vec![vec![false; m]; m];
        for (a, w) in perms.iter().enumerate() {
            for i in 0..n.saturating_sub(1) {
                if w[i] < w[i + 1] {
                    let mut v = w.clone();
                    v.swap(i, i + 1);
                    let b = perms.iter().position(|p| *p == v).unwrap();
                    rel[a][b] = true;
                }
            }
        }
        let labels = perms
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w.iter().map(|v| v.to_string()).collect()
                }
            })
            .collect();
        Poset::from_order(labels, rel)
    }

    /// Componentwise order on pairs.
    pub fn product(&self, other: &Poset) -> Poset {
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for a in 0..self.len() {
            for b in 0..other.len() {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        let idx = |a: usize, b: usize| a * other.len() + b;
        let m = self.len() * other.len();
        let mut leq = vec![vec![false; m]; m];
        for a in 0..self.len() {
            for b in 0..other.len() {
                for c in 0..self.len() {
                    for d in 0..other.len() {
                        leq[idx(a, b)][idx(c, d)] = self.leq[a][c] && other.leq[b][d];
                    }
                }
            }
        }
        Poset { labels, leq }
    }

    /// Strict covers: the transitive reduction of the order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] {
                    let direct = (0..n)
                        .all(|k| k == i || k == j || !(self.leq[i][k] && self.leq[k][j]));
                    if direct {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    pub fn minima(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.leq[j][i]))
            .collect()
    }

    pub fn maxima(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.leq[i][j]))
            .collect()
    }

    /// Deterministic DOT rendering of the Hasse diagram.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "\\\"")));
        }
        for (i, j) in self.covers() {
            out.push_str(&format!("  n{i} -> n{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Searches for an order isomorphism, returning the mapping from indices of
/// `a` to indices of `b`. Cheap invariants prune before backtracking.
pub fn poset_iso(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let sig = |p: &Poset| -> Vec<(usize, usize, usize, usize)> {
        let covers = p.covers();
        (0..p.len())
            .map(|i| {
                (
                    (0..p.len()).filter(|&j| p.leq(j, i)).count(),
                    (0..p.len()).filter(|&j| p.leq(i, j)).count(),
                    covers.iter().filter(|&&(x, _)| x == i).count(),
                    covers.iter().filter(|&&(_, y)| y == i).count(),
                )
            })
            .collect()
    };
    let sa = sig(a);
    let sb = sig(b);
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        a: &Poset,
        b: &Poset,
        sa: &[(usize, usize, usize, usize)],
        sb: &[(usize, usize, usize, usize)],
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || sa[i] != sb[j] {
                continue;
            }
            if (0..i).all(|k| {
                a.leq(k, i) == b.leq(map[k], j) && a.leq(i, k) == b.leq(j, map[k])
            }) {
                map[i] = j;
                used[j] = true;
                if assign(a, b, sa, sb, i + 1, map, used) {
                    return true;
                }
                map[i] = usize::MAX;
                used[j] = false;
            }
        }
        false
    }
    if assign(a, b, &sa, &sb, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

// JSON: {"elements": [labels], "leq": [[i, j], ...]} storing the strict part
// of the transitive closure; reflexivity is implicit.
#[derive(Serialize, Deserialize)]
struct PosetDto {
    elements: Vec<String>,
    leq: Vec<(usize, usize)>,
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut pairs = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j && self.leq[i][j] {
                    pairs.push((i, j));
                }
            }
        }
        PosetDto { elements: self.labels.clone(), leq: pairs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let dto = PosetDto::deserialize(deserializer)?;
        let n = dto.elements.len();
        let mut rel = vec![vec![false; n]; n];
        for (i, j) in dto.leq {
            if i >= n || j >= n {
                return Err(D::Error::custom(format!("leq pair ({i},{j}) out of range")));
            }
            rel[i][j] = true;
        }
        let (p, merged) = Poset::from_preorder(dto.elements, rel);
        if merged > 0 {
            return Err(D::Error::custom("relation is not antisymmetric"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn chain_covers() {
        let c = Poset::chain(2);
        assert_eq!(c.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(c.minima(), vec![0]);
        assert_eq!(c.maxima(), vec![2]);
    }

    #[test]
    fn boolean_lattice_square() {
        let b = Poset::boolean_lattice(&strs(&["a", "b"]));
        assert_eq!(b.len(), 4);
        assert_eq!(b.covers().len(), 4);
        assert_eq!(Poset::boolean_lattice(&[]).len(), 1);
    }

    #[test]
    fn weak_order_small_cases() {
        assert_eq!(Poset::weak_order(0).len(), 1);
        assert!(poset_iso(&Poset::weak_order(2), &Poset::chain(1)).is_some());
        let w3 = Poset::weak_order(3);
        assert_eq!(w3.len(), 6);
        assert_eq!(w3.covers().len(), 6);
        assert_eq!(w3.minima().len(), 1);
        assert_eq!(w3.maxima().len(), 1);
        assert_eq!(w3.label(w3.minima()[0]), "123");
        assert_eq!(w3.label(w3.maxima()[0]), "321");
    }

    #[test]
    fn weak_order_agrees_with_generated_relation() {
        for n in 0..=5 {
            let a = Poset::weak_order(n);
            let b = Poset::weak_order_generated(n);
            assert_eq!(a.labels(), b.labels());
            for i in 0..a.len() {
                for j in 0..a.len() {
                    assert_eq!(a.leq(i, j), b.leq(i, j), "n={n} {} vs {}", a.label(i), a.label(j));
                }
            }
        }
    }

    #[test]
    fn condensation_merges_mutual_pairs() {
        let rel = vec![
            vec![false, true, false],
            vec![true, false, true],
            vec![false, false, false],
        ];
        let (p, merged) = Poset::from_preorder(strs(&["a", "b", "c"]), rel);
        assert_eq!(merged, 1);
        assert_eq!(p.len(), 2);
        assert_eq!(p.label(0), "a=b");
        assert!(p.leq(0, 1));
    }

    #[test]
    fn iso_and_non_iso() {
        let b1 = Poset::boolean_lattice(&strs(&["x"]));
        assert!(poset_iso(&Poset::chain(1), &b1).is_some());
        // chain(2) vs 3-element antichain: cover counts differ
        let anti = Poset::from_order(strs(&["a", "b", "c"]), vec![vec![false; 3]; 3]);
        assert!(poset_iso(&Poset::chain(2), &anti).is_none());
        let w2sq = Poset::weak_order(2).product(&Poset::weak_order(2));
        assert!(poset_iso(&w2sq, &Poset::boolean_lattice(&strs(&["a", "b"]))).is_some());
    }

    #[test]
    fn product_of_chains() {
        let p = Poset::chain(1).product(&Poset::chain(1));
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers().len(), 4);
    }

    #[test]
    fn json_round_trip() {
        let w = Poset::weak_order(3);
        let j = serde_json::to_string_pretty(&w).unwrap();
        let back: Poset = serde_json::from_str(&j).unwrap();
        assert_eq!(w, back);
        assert_eq!(j, serde_json::to_string_pretty(&back).unwrap());
    }

    #[test]
    fn dot_output_is_deterministic() {
        let d = Poset::chain(2).to_dot("chain");
        assert!(d.contains("n0 -> n1"));
        assert!(d.contains("n1 -> n2"));
        assert_eq!(d, Poset::chain(2).to_dot("chain"));
    }
}
