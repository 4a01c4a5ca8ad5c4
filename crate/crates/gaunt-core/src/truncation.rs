//! Truncations to posets and poset-enriched categories, disk truncation
//! dimensions, fullness/faithfulness/connectivity predicates, and Whitehead
//! n-equivalence checking.

use crate::cells::{enumerate_basepoints, solve_positive_chains, BasePoint};
use crate::chain::Chain;
use crate::complex::Complex;
use crate::error::Result;
use crate::homotopy::{pi0, pi_n, PiPoset};
use crate::mapping::AdcMap;
use crate::poset::{poset_iso, Poset};

/// A category enriched in posets: one hom-poset per ordered object pair,
/// composed by chain addition on representatives.
#[derive(Debug, Clone)]
pub struct PosetEnrichedCategory {
    pub objects: Vec<String>,
    /// `homs[a][b]` is the hom-poset from object a to object b.
    pub homs: Vec<Vec<PiPoset>>,
}

impl PosetEnrichedCategory {
    /// Composite of `f ∈ hom(a,b)` and `g ∈ hom(b,c)` in `hom(a,c)`, when
    /// the summed representative is enumerated there.
    pub fn compose(&self, a: usize, c: usize, f: &Chain, g: &Chain) -> Option<usize> {
        self.homs[a][c].class_of(&(f + g))
    }
}

/// τ≤0: alias of π₀.
pub fn truncate0(x: &Complex, cap: u32) -> Result<Poset> {
    Ok(pi0(x, cap)?.poset)
}

/// τ≤1: objects with hom-posets π₁(X, (a,b)).
pub fn truncate1(x: &Complex, cap: u32) -> Result<PosetEnrichedCategory> {
    x.require_valid()?;
    let m = x.generator_count(0);
    let objects = (0..m).map(|i| x.generator_name(0, i).to_string()).collect();
    let mut homs = Vec::with_capacity(m);
    for a in 0..m {
        let mut row = Vec::with_capacity(m);
        for b in 0..m {
            row.push(pi_n(x, &BasePoint::objects(a, b), cap)?);
        }
        homs.push(row);
    }
    Ok(PosetEnrichedCategory { objects, homs })
}

/// Dimension of the m-truncation of the n-disk: n when m ≥ n−1, else m+1.
///
/// Note the closed form min(m,n)+1 overshoots when m ≥ n: the n-disk is
/// already (n−1,n)-truncated, so τ≤m fixes it instead of raising dimension.
pub fn disk_truncation(m: usize, n: usize) -> usize {
    if m + 1 >= n {
        n
    } else {
        m + 1
    }
}

/// Object bijection under which all hom-posets are isomorphic.
pub fn enriched_iso(a: &PosetEnrichedCategory, b: &PosetEnrichedCategory) -> bool {
    if a.objects.len() != b.objects.len() {
        return false;
    }
    let n = a.objects.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        a: &PosetEnrichedCategory,
        b: &PosetEnrichedCategory,
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.objects.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            let compatible = (0..=i).all(|k| {
                let kj = if k == i { j } else { map[k] };
                poset_iso(&a.homs[k][i].poset, &b.homs[kj][j].poset).is_some()
                    && poset_iso(&a.homs[i][k].poset, &b.homs[j][kj].poset).is_some()
            });
            if compatible {
                map[i] = j;
                used[j] = true;
                if assign(a, b, i + 1, map, used) {
                    return true;
                }
                map[i] = usize::MAX;
                used[j] = false;
            }
        }
        false
    }
    assign(a, b, 0, &mut map, &mut used)
}

/// Image of a basepoint under a map.
pub fn apply_basepoint(f: &AdcMap, z: &BasePoint) -> BasePoint {
    BasePoint::new(
        z.pairs()
            .iter()
            .map(|(n, p)| (f.apply(n), f.apply(p)))
            .collect(),
    )
}

/// The positive chains that can fill a basepoint one degree up.
fn tops(x: &Complex, z: &BasePoint, cap: u32) -> Result<Vec<Chain>> {
    match z.top_difference() {
        None => Ok((0..x.generator_count(0)).map(|i| Chain::unit(0, i)).collect()),
        Some(d) => solve_positive_chains(x, z.len(), &d, cap),
    }
}

/// m-fullness: every m-cell of the target lying over the image of a source
/// basepoint of dimension m−1 lifts to a source m-cell.
pub fn is_n_full(f: &AdcMap, m: usize, cap: u32) -> Result<bool> {
    for z in enumerate_basepoints(&f.source, m, cap)? {
        let fz = apply_basepoint(f, &z);
        let source_tops = tops(&f.source, &z, cap)?;
        let images: Vec<Chain> = source_tops.iter().map(|u| f.apply(u)).collect();
        for w in tops(&f.target, &fz, cap)? {
            if !images.contains(&w) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// n-connectivity: m-full for all 0 ≤ m ≤ n.
pub fn is_n_connective(f: &AdcMap, n: usize, cap: u32) -> Result<bool> {
    for m in 0..=n {
        if !is_n_full(f, m, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// n-connectedness: (n+1)-connectivity. `n = -1` means 0-connectivity.
pub fn is_n_connected(f: &AdcMap, n: i64, cap: u32) -> Result<bool> {
    is_n_connective(f, (n + 1).max(0) as usize, cap)
}

/// n-faithfulness: for every m > n, every lifting problem of dimension m has
/// exactly one solution. Dimensions above the complexes carry only
/// identities, so the check stops at max(dims)+1.
pub fn is_n_faithful(f: &AdcMap, n: usize, cap: u32) -> Result<bool> {
    let m_max = f.source.dims().max(f.target.dims()) + 1;
    for m in n + 1..=m_max {
        for z in enumerate_basepoints(&f.source, m, cap)? {
            let fz = apply_basepoint(f, &z);
            let source_tops = tops(&f.source, &z, cap)?;
            for w in tops(&f.target, &fz, cap)? {
                let lifts = source_tops.iter().filter(|u| f.apply(u) == w).count();
                if lifts != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// n-truncatedness: (n+1)-faithfulness.
pub fn is_n_truncated(f: &AdcMap, n: usize, cap: u32) -> Result<bool> {
    is_n_faithful(f, n + 1, cap)
}

/// Whitehead check: for every 0 ≤ m ≤ n and every source basepoint of
/// dimension m−1, the induced map π_m(source, Z) → π_m(target, fZ) is a
/// poset isomorphism.
pub fn is_n_equivalence(f: &AdcMap, n: usize, cap: u32) -> Result<bool> {
    f.require_valid()?;
    for m in 0..=n {
        for z in enumerate_basepoints(&f.source, m, cap)? {
            let fz = apply_basepoint(f, &z);
            let src = pi_n(&f.source, &z, cap)?;
            let tgt = pi_n(&f.target, &fz, cap)?;
            if src.poset.len() != tgt.poset.len() {
                return Ok(false);
            }
            // induced map on classes; must be a bijection respecting the
            // order in both directions
            let mut image = Vec::with_capacity(src.reps.len());
            for u in &src.reps {
                match tgt.class_of(&f.apply(u)) {
                    Some(j) => image.push(j),
                    None => return Ok(false),
                }
            }
            let mut seen = vec![false; tgt.poset.len()];
            for &j in &image {
                if seen[j] {
                    return Ok(false);
                }
                seen[j] = true;
            }
            for a in 0..image.len() {
                for b in 0..image.len() {
                    if src.poset.leq(a, b) != tgt.poset.leq(image[a], image[b]) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Whether the map is an isomorphism of complexes: a degreewise bijection of
/// generators.
pub fn is_isomorphism(f: &AdcMap) -> bool {
    if f.source.generator_counts() != f.target.generator_counts() {
        return false;
    }
    for k in 0..=f.source.dims() {
        let mut hit = vec![false; f.target.generator_count(k)];
        for img in &f.images[k] {
            let mut terms = img.terms();
            match (terms.next(), terms.next()) {
                (Some((g, c)), None) if num_traits::One::is_one(c) => {
                    if hit[g] {
                        return false;
                    }
                    hit[g] = true;
                }
                _ => return false,
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::DEFAULT_CAP;
    use crate::mapping::catalog;
    use crate::shapes;

    fn cap() -> u32 {
        DEFAULT_CAP
    }

    fn map_catalog() -> Vec<(&'static str, AdcMap)> {
        catalog::predicate_catalog()
    }

    #[test]
    fn truncate0_examples() {
        assert!(poset_iso(&truncate0(&shapes::oriental(3), cap()).unwrap(), &Poset::chain(3)).is_some());
        assert_eq!(truncate0(&shapes::disk(0), cap()).unwrap().len(), 1);
        let w = shapes::wedge(&[shapes::disk(1), shapes::disk(1)]).unwrap();
        assert!(poset_iso(&truncate0(&w, cap()).unwrap(), &Poset::chain(2)).is_some());
    }

    #[test]
    fn truncate1_of_triangle() {
        let t = truncate1(&shapes::oriental(2), cap()).unwrap();
        let hom02 = &t.homs[0][2];
        assert!(poset_iso(&hom02.poset, &Poset::chain(1)).is_some());
        // (12)∘(01) is the top of hom(0,2)
        let f = &t.homs[0][1].reps[0];
        let g = &t.homs[1][2].reps[0];
        let c = t.compose(0, 2, f, g).unwrap();
        assert_eq!(hom02.poset.maxima(), vec![c]);
    }

    #[test]
    fn truncate1_of_disk_and_cube() {
        let d = truncate1(&shapes::disk(1), cap()).unwrap();
        assert_eq!(d.objects.len(), 2);
        assert_eq!(d.homs[0][1].poset.len(), 1);
        let sq = truncate1(&shapes::cube(2), cap()).unwrap();
        let (bot, top) = shapes::cube(2).endpoints().unwrap();
        assert!(poset_iso(&sq.homs[bot][top].poset, &Poset::chain(1)).is_some());
    }

    #[test]
    fn composition_is_associative_and_monotone() {
        let x = shapes::oriental(3);
        let t = truncate1(&x, cap()).unwrap();
        // associativity via representatives on 0→1→2→3
        let f = &t.homs[0][1].reps[0];
        let g = &t.homs[1][2].reps[0];
        let h = &t.homs[2][3].reps[0];
        let left = t.compose(0, 3, &(f + g), h).unwrap();
        let right = t.compose(0, 3, f, &(g + h)).unwrap();
        assert_eq!(left, right);
        // identity is the zero chain on hom(a,a)
        for a in 0..4 {
            assert_eq!(t.homs[a][a].reps, vec![Chain::zero(1)]);
        }
        // monotone in both arguments on hom(0,2) × hom(2,3)
        let h02 = &t.homs[0][2];
        let h23 = &t.homs[2][3];
        for (i, u) in h02.reps.iter().enumerate() {
            for (j, v) in h02.reps.iter().enumerate() {
                if !h02.poset.leq(i, j) {
                    continue;
                }
                for w in &h23.reps {
                    let a = t.compose(0, 3, u, w).unwrap();
                    let b = t.compose(0, 3, v, w).unwrap();
                    assert!(t.homs[0][3].poset.leq(a, b));
                }
            }
        }
    }

    #[test]
    fn disk_truncation_rule() {
        assert_eq!(disk_truncation(1, 3), 2);
        assert_eq!(disk_truncation(2, 2), 2);
        assert_eq!(disk_truncation(0, 5), 1);
        assert_eq!(disk_truncation(4, 2), 2);
        assert_eq!(disk_truncation(0, 0), 0);
    }

    #[test]
    fn truncate1_of_disks_matches_the_rule() {
        for n in 0..=3 {
            let t = truncate1(&shapes::disk(n), cap()).unwrap();
            let expected = truncate1(&shapes::disk(disk_truncation(1, n)), cap()).unwrap();
            assert!(enriched_iso(&t, &expected), "disk({n})");
        }
    }

    #[test]
    fn fullness_catalog() {
        let inc = catalog::boundary_inclusion();
        assert!(is_n_full(&inc, 0, cap()).unwrap());
        assert!(!is_n_full(&inc, 1, cap()).unwrap());
        assert!(is_n_full(&inc, 2, cap()).unwrap());
        assert!(is_n_connected(&inc, -1, cap()).unwrap());
        assert!(!is_n_connected(&inc, 0, cap()).unwrap());

        let col = catalog::disk_collapse();
        assert!(is_n_full(&col, 0, cap()).unwrap());
        assert!(!is_n_full(&col, 1, cap()).unwrap());
        assert!(is_n_full(&col, 2, cap()).unwrap());

        let face = catalog::face02();
        assert!(!is_n_full(&face, 0, cap()).unwrap());
        assert!(!is_n_full(&face, 1, cap()).unwrap());
        assert!(is_n_full(&face, 2, cap()).unwrap());

        let id = AdcMap::identity(&shapes::oriental(2));
        for m in 0..=3 {
            assert!(is_n_full(&id, m, cap()).unwrap());
        }
    }

    #[test]
    fn faithfulness_catalog() {
        let id = AdcMap::identity(&shapes::oriental(2));
        for n in 0..=2 {
            assert!(is_n_faithful(&id, n, cap()).unwrap());
            assert!(is_n_truncated(&id, n, cap()).unwrap());
        }
        let inc = catalog::boundary_inclusion();
        assert!(!is_n_faithful(&inc, 0, cap()).unwrap());
        assert!(is_n_faithful(&inc, 1, cap()).unwrap());
        assert!(is_n_truncated(&inc, 0, cap()).unwrap());
        let col = catalog::disk_collapse();
        assert!(is_n_faithful(&col, 1, cap()).unwrap());
        let face = catalog::face02();
        assert!(is_n_faithful(&face, 1, cap()).unwrap());
    }

    #[test]
    fn predicate_monotonicity_on_catalog() {
        for (name, f) in map_catalog() {
            for n in 0..=2usize {
                if is_n_connective(&f, n + 1, cap()).unwrap() {
                    assert!(is_n_connective(&f, n, cap()).unwrap(), "{name} n={n}");
                }
                if is_n_faithful(&f, n, cap()).unwrap() {
                    assert!(is_n_faithful(&f, n + 1, cap()).unwrap(), "{name} n={n}");
                }
            }
        }
    }

    #[test]
    fn connected_and_truncated_only_for_isomorphisms() {
        for (name, f) in map_catalog() {
            for n in 0..=2usize {
                if is_n_connected(&f, n as i64, cap()).unwrap()
                    && is_n_truncated(&f, n, cap()).unwrap()
                {
                    assert!(is_isomorphism(&f), "{name} at n={n}");
                }
            }
        }
    }

    #[test]
    fn whitehead_examples() {
        for n in 0..=2 {
            assert!(is_n_equivalence(&AdcMap::identity(&shapes::oriental(2)), n, cap()).unwrap());
        }
        assert!(!is_n_equivalence(&catalog::disk_collapse(), 0, cap()).unwrap());
        assert!(!is_n_equivalence(&catalog::face02(), 0, cap()).unwrap());
        // a non-identity isomorphism is an equivalence at every level
        let arrow_iso = map_catalog().into_iter().find(|(n, _)| *n == "arrow_iso").unwrap().1;
        for n in 0..=2 {
            assert!(is_n_equivalence(&arrow_iso, n, cap()).unwrap());
        }
        // boundary inclusion: π₀ already differs? no — both have two points,
        // but the target's are comparable
        assert!(!is_n_equivalence(&catalog::boundary_inclusion(), 1, cap()).unwrap());
    }
}
