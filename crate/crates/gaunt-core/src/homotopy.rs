//! Homotopy posets: π₀ on objects, πₙ at an oriented basepoint, the
//! rewriting presentation of π₁, and the identity-cell subposet π′ₙ.

use crate::cells::{atomic_path_decomposition, solve_positive_chains, BasePoint};
use crate::chain::Chain;
use crate::complex::Complex;
use crate::error::Result;
use crate::poset::Poset;

/// A homotopy poset together with one representative chain per element.
#[derive(Debug, Clone)]
pub struct PiPoset {
    pub poset: Poset,
    /// `reps[i]` is the chain representing element `i`.
    pub reps: Vec<Chain>,
}

impl PiPoset {
    /// The element represented by the given chain, if it is enumerated.
    pub fn class_of(&self, c: &Chain) -> Option<usize> {
        self.reps.iter().position(|r| r == c)
    }
}

/// The poset of components: objects under "a ≤ b iff some positive 1-chain
/// has boundary b − a".
pub fn pi0(x: &Complex, cap: u32) -> Result<PiPoset> {
    x.require_valid()?;
    let m = x.generator_count(0);
    let mut rel = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a == b {
                rel[a][b] = true;
                continue;
            }
            let d = &Chain::unit(0, b) - &Chain::unit(0, a);
            rel[a][b] = !solve_positive_chains(x, 1, &d, cap)?.is_empty();
        }
    }
    let labels = (0..m).map(|i| x.generator_name(0, i).to_string()).collect();
    let (poset, merged) = Poset::from_preorder(labels, rel);
    // loop-freeness forbids mutually related objects
    assert_eq!(merged, 0, "condensation must be trivial on a loop-free complex");
    let reps = (0..m).map(|i| Chain::unit(0, i)).collect();
    Ok(PiPoset { poset, reps })
}

/// The n-th homotopy poset at a basepoint of dimension n−1: positive n-chains
/// filling the basepoint, ordered by (n+1)-chain witnesses. The empty
/// basepoint gives π₀.
pub fn pi_n(x: &Complex, z: &BasePoint, cap: u32) -> Result<PiPoset> {
    if z.is_empty() {
        return pi0(x, cap);
    }
    x.require_valid()?;
    z.validate(x)?;
    let n = z.len();
    let d = z.top_difference().unwrap();
    let sols = solve_positive_chains(x, n, &d, cap)?;
    let m = sols.len();
    let mut rel = vec![vec![false; m]; m];
    for (u, cu) in sols.iter().enumerate() {
        for (v, cv) in sols.iter().enumerate() {
            rel[u][v] = u == v || !solve_positive_chains(x, n + 1, &(cv - cu), cap)?.is_empty();
        }
    }
    let labels = sols.iter().map(|c| x.chain_string(c)).collect();
    let (poset, merged) = Poset::from_preorder(labels, rel);
    assert_eq!(merged, 0, "condensation must be trivial on a loop-free complex");
    Ok(PiPoset { poset, reps: sols })
}

/// π₁ computed by the rewriting presentation: atomic paths A → B ordered by
/// the closure of single 2-generator rewrites of contiguous segments.
pub fn pi1_rewriting(x: &Complex, a: usize, b: usize, cap: u32) -> Result<Poset> {
    x.require_valid()?;
    let d = &Chain::unit(0, b) - &Chain::unit(0, a);
    let sols = solve_positive_chains(x, 1, &d, cap)?;
    let paths: Vec<Vec<usize>> = sols
        .iter()
        .map(|c| atomic_path_decomposition(x, c, a, b))
        .collect::<Result<_>>()?;
    // rewrite rules: one per 2-generator, source path ⤳ target path
    let mut rules: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for g in 0..x.generator_count(2) {
        let bd = x.boundary_of(2, g);
        let (src, tgt) = (bd.neg_part(), bd.pos_part());
        let s = rule_endpoints(x, &src);
        rules.push((
            atomic_path_decomposition(x, &src, s.0, s.1)?,
            atomic_path_decomposition(x, &tgt, s.0, s.1)?,
        ));
    }
    let m = paths.len();
    let mut rel = vec![vec![false; m]; m];
    for (p, path) in paths.iter().enumerate() {
        for (from, to) in &rules {
            if from.len() > path.len() {
                continue;
            }
            for start in 0..=path.len() - from.len() {
                if &path[start..start + from.len()] == from.as_slice() {
                    let mut next = path[..start].to_vec();
                    next.extend_from_slice(to);
                    next.extend_from_slice(&path[start + from.len()..]);
                    if let Some(q) = paths.iter().position(|p2| *p2 == next) {
                        rel[p][q] = true;
                    }
                }
            }
        }
    }
    let labels = paths
        .iter()
        .map(|p| {
            format!(
                "[{}]",
                p.iter().map(|&g| x.generator_name(1, g)).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    let (poset, merged) = Poset::from_preorder(labels, rel);
    assert_eq!(merged, 0, "condensation must be trivial on a loop-free complex");
    Ok(poset)
}

/// Endpoints of the source 1-chain of a 2-generator, read off its atoms.
fn rule_endpoints(x: &Complex, src: &Chain) -> (usize, usize) {
    // ∂(src) = t − s with unit parts by the unital atom condition
    // ∂(src) ≠ 0 in a loop-free complex: a positive chain with zero boundary
    // would be a positive cycle
    let b = x.boundary(src);
    let s = b.neg_part().support().next().expect("source object of a 2-generator");
    let t = b.pos_part().support().next().expect("target object of a 2-generator");
    (s, t)
}

/// The subposet of πₙ on identity cells. For a gaunt loop-free complex this
/// is a singleton exactly when the basepoint's top entries agree.
pub fn pi_prime_n(x: &Complex, z: &BasePoint, cap: u32) -> Result<PiPoset> {
    x.require_valid()?;
    z.validate(x)?;
    let n = z.len();
    assert!(n >= 1, "π′ needs a nonempty basepoint");
    let d = z.top_difference().unwrap();
    if d.is_zero() {
        // the identity cell's class; representative is the zero top chain
        let full = pi_n(x, z, cap)?;
        let zero = Chain::zero(n);
        let idx = full.class_of(&zero).expect("zero chain fills an equal pair");
        let labels = vec![full.poset.label(idx).to_string()];
        let (poset, _) = Poset::from_preorder(labels, vec![vec![true]]);
        Ok(PiPoset { poset, reps: vec![zero] })
    } else {
        let (poset, _) = Poset::from_preorder(Vec::new(), Vec::new());
        Ok(PiPoset { poset, reps: Vec::new() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::DEFAULT_CAP;
    use crate::poset::poset_iso;
    use crate::shapes;

    fn cap() -> u32 {
        DEFAULT_CAP
    }

    /// Object index of a cube corner given its bits (most significant factor
    /// first, matching the ⊗-name layout).
    fn corner(x: &Complex, bits: &[u8]) -> usize {
        let name: String =
            bits.iter().map(|b| format!("{b}⊗")).collect::<String>() + "*";
        x.lookup(&name).expect("corner exists").1
    }

    #[test]
    fn pi0_of_orientals_is_a_chain() {
        for n in 0..=4 {
            let p = pi0(&shapes::oriental(n), cap()).unwrap();
            assert!(poset_iso(&p.poset, &Poset::chain(n)).is_some(), "n={n}");
        }
    }

    #[test]
    fn pi0_of_cubes_is_boolean() {
        for n in 0..=3 {
            let p = pi0(&shapes::cube(n), cap()).unwrap();
            let items: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            assert!(poset_iso(&p.poset, &Poset::boolean_lattice(&items)).is_some(), "n={n}");
        }
    }

    #[test]
    fn pi0_of_disk_boundary_is_discrete() {
        let p = pi0(&shapes::boundary_disk(1), cap()).unwrap();
        assert_eq!(p.poset.len(), 2);
        assert!(p.poset.covers().is_empty());
    }

    #[test]
    fn pi0_of_op_reverses_the_order() {
        let p = pi0(&shapes::dual_op(&shapes::oriental(2)), cap()).unwrap();
        assert!(poset_iso(&p.poset, &Poset::chain(2)).is_some());
        let two = p.poset.index_of("2").unwrap();
        let zero = p.poset.index_of("0").unwrap();
        assert!(p.poset.leq(two, zero) && !p.poset.leq(zero, two));
    }

    #[test]
    fn pi1_of_orientals_is_boolean() {
        for n in 0..=4usize {
            let x = shapes::oriental(n);
            for i in 0..=n {
                for j in 0..=n {
                    let z = BasePoint::objects(i, j);
                    let p = pi_n(&x, &z, cap()).unwrap();
                    if i > j {
                        assert!(p.poset.is_empty(), "({i},{j})");
                    } else {
                        let items: Vec<String> =
                            (i + 1..j).map(|v| v.to_string()).collect();
                        assert!(
                            poset_iso(&p.poset, &Poset::boolean_lattice(&items)).is_some(),
                            "n={n} ({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pi1_of_triangle_orders_long_edge_below_path() {
        let x = shapes::oriental(2);
        let p = pi_n(&x, &BasePoint::objects(0, 2), cap()).unwrap();
        let long = p.poset.index_of("(02)").unwrap();
        let path = p.poset.index_of("(01)+(12)").unwrap();
        assert!(p.poset.leq(long, path) && !p.poset.leq(path, long));
    }

    #[test]
    fn pi1_of_cubes_is_the_weak_order() {
        for n in 0..=3usize {
            let x = shapes::cube(n);
            let corners: Vec<Vec<u8>> = (0..1u32 << n)
                .map(|m| (0..n).map(|b| (m >> (n - 1 - b) & 1) as u8).collect())
                .collect();
            for d in &corners {
                for e in &corners {
                    let z = BasePoint::objects(corner(&x, d), corner(&x, e));
                    let p = pi_n(&x, &z, cap()).unwrap();
                    if d.iter().zip(e).all(|(a, b)| a <= b) {
                        let k = d.iter().zip(e).filter(|(a, b)| a != b).count();
                        assert!(
                            poset_iso(&p.poset, &Poset::weak_order(k)).is_some(),
                            "n={n} {d:?}→{e:?}"
                        );
                    } else {
                        assert!(p.poset.is_empty(), "n={n} {d:?}→{e:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn empty_basepoint_gives_pi0() {
        let x = shapes::oriental(2);
        let a = pi_n(&x, &BasePoint::empty(), cap()).unwrap();
        let b = pi0(&x, cap()).unwrap();
        assert_eq!(a.poset, b.poset);
    }

    #[test]
    fn rewriting_matches_chain_order_on_small_shapes() {
        for n in 0..=4usize {
            let x = shapes::oriental(n);
            for i in 0..=n {
                for j in i..=n {
                    let a = pi1_rewriting(&x, i, j, cap()).unwrap();
                    let b = pi_n(&x, &BasePoint::objects(i, j), cap()).unwrap();
                    assert!(poset_iso(&a, &b.poset).is_some(), "oriental({n}) ({i},{j})");
                }
            }
        }
        for n in 0..=3usize {
            let x = shapes::cube(n);
            for a in 0..x.generator_count(0) {
                for b in 0..x.generator_count(0) {
                    let p = pi1_rewriting(&x, a, b, cap()).unwrap();
                    let q = pi_n(&x, &BasePoint::objects(a, b), cap()).unwrap();
                    assert!(poset_iso(&p, &q.poset).is_some(), "cube({n}) ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn rewriting_examples() {
        let x = shapes::oriental(3);
        let p = pi1_rewriting(&x, 0, 3, cap()).unwrap();
        assert_eq!(p.len(), 4);
        let items: Vec<String> = vec!["1".into(), "2".into()];
        assert!(poset_iso(&p, &Poset::boolean_lattice(&items)).is_some());
        assert_eq!(p.label(p.minima()[0]), "[03]");

        let c = shapes::cube(2);
        let (bot, top) = c.endpoints().unwrap();
        let q = pi1_rewriting(&c, bot, top, cap()).unwrap();
        assert!(poset_iso(&q, &Poset::chain(1)).is_some());

        // no 2-generators: discrete poset on paths
        let b = shapes::core_truncation(&shapes::oriental(2), 1);
        let r = pi1_rewriting(&b, 0, 2, cap()).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.covers().is_empty());
    }

    #[test]
    fn pi_prime_cases() {
        let x = shapes::oriental(2);
        let same = pi_prime_n(&x, &BasePoint::objects(0, 0), cap()).unwrap();
        assert_eq!(same.poset.len(), 1);
        let diff = pi_prime_n(&x, &BasePoint::objects(0, 2), cap()).unwrap();
        assert!(diff.poset.is_empty());

        // disk(2) at the distinct parallel arrows
        let d = shapes::disk(2);
        let mut z = BasePoint::objects(
            d.endpoints().unwrap().0,
            d.endpoints().unwrap().1,
        );
        // the two parallel 1-generators
        z.push(Chain::unit(1, 0), Chain::unit(1, 1));
        z.validate(&d).unwrap();
        let p = pi_prime_n(&d, &z, cap()).unwrap();
        assert!(p.poset.is_empty());
    }

    #[test]
    fn suspension_shifts_pi() {
        // π_{k}(SᵐX, suspended Z) ≅ π_{k−m}(X, Z)
        for x in [shapes::oriental(2), shapes::cube(2)] {
            let s = shapes::suspension(&x);
            let (bot, top) = s.endpoints().unwrap();
            // π₁ of SX at (⊥,⊤) vs π₀ of X
            let p = pi_n(&s, &BasePoint::objects(bot, top), cap()).unwrap();
            let q = pi0(&x, cap()).unwrap();
            assert!(poset_iso(&p.poset, &q.poset).is_some(), "shift π₁ for {}", x.name());

            // π₂ of SX at a suspended 0-basepoint vs π₁ of X downstairs
            for a in 0..x.generator_count(0) {
                for b in 0..x.generator_count(0) {
                    let (_, sa) = s.lookup(&format!("S{}", x.generator_name(0, a))).unwrap();
                    let (_, sb) = s.lookup(&format!("S{}", x.generator_name(0, b))).unwrap();
                    let mut z = BasePoint::objects(bot, top);
                    z.push(Chain::unit(1, sa), Chain::unit(1, sb));
                    z.validate(&s).unwrap();
                    let up = pi_n(&s, &z, cap()).unwrap();
                    let down = pi_n(&x, &BasePoint::objects(a, b), cap()).unwrap();
                    assert!(
                        poset_iso(&up.poset, &down.poset).is_some(),
                        "shift π₂ for {} at ({a},{b})",
                        x.name()
                    );
                }
            }
        }
    }

    #[test]
    fn wedge_pi1_is_a_product_over_the_spanned_factors() {
        // factors S(X_ℓ): π₁ of the wedge from endpoint i to endpoint j is
        // the product of π₀(X_ℓ) over the factors strictly between them
        let factors = [
            shapes::suspension(&shapes::oriental(1)),
            shapes::suspension(&shapes::point()),
            shapes::suspension(&shapes::oriental(2)),
        ];
        let bases = [shapes::oriental(1), shapes::point(), shapes::oriental(2)];
        let w = shapes::wedge(&factors).unwrap();
        // gluing keeps the earlier factor's name for identified endpoints
        let marks = [
            w.lookup("0:⊥").unwrap().1,
            w.lookup("0:⊤").unwrap().1,
            w.lookup("1:⊤").unwrap().1,
            w.lookup("2:⊤").unwrap().1,
        ];
        for i in 0..4 {
            for j in i..4 {
                let p = pi_n(&w, &BasePoint::objects(marks[i], marks[j]), cap()).unwrap();
                let mut expected = Poset::chain(0);
                for base in bases.iter().take(j).skip(i) {
                    expected = expected.product(&pi0(base, cap()).unwrap().poset);
                }
                assert!(
                    poset_iso(&p.poset, &expected).is_some(),
                    "wedge segment {i}..{j}: got {} elements, want {}",
                    p.poset.len(),
                    expected.len()
                );
            }
        }
    }
}
