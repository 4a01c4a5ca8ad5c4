//! Maps of augmented directed complexes and structural isomorphism testing.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Coeff};
use crate::complex::Complex;
use crate::error::{Error, Result};

/// A degreewise linear map sending generators to positive chains, commuting
/// with differentials and augmentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdcMap {
    pub source: Complex,
    pub target: Complex,
    /// `images[k][i]` is the image of generator `i` of degree `k`.
    pub images: Vec<Vec<Chain>>,
}

impl AdcMap {
    pub fn identity(x: &Complex) -> AdcMap {
        let images = (0..=x.dims())
            .map(|k| (0..x.generator_count(k)).map(|i| Chain::unit(k, i)).collect())
            .collect();
        AdcMap { source: x.clone(), target: x.clone(), images }
    }

    /// Builds a map from generator-name assignments. Each source generator
    /// name maps to a list of (coefficient, target generator name) terms.
    pub fn from_names(
        source: &Complex,
        target: &Complex,
        assignments: &[(&str, Vec<(i64, &str)>)],
    ) -> Result<AdcMap> {
        let table: HashMap<&str, &Vec<(i64, &str)>> =
            assignments.iter().map(|(n, t)| (*n, t)).collect();
        let mut images: Vec<Vec<Chain>> = Vec::new();
        for k in 0..=source.dims() {
            let mut level = Vec::new();
            for i in 0..source.generator_count(k) {
                let name = source.generator_name(k, i);
                let terms = table
                    .get(name)
                    .ok_or_else(|| Error::Parse(format!("no image given for generator {name:?}")))?;
                let mut c = Chain::zero(k);
                for (coeff, tname) in terms.iter() {
                    let (tk, ti) = target
                        .lookup(tname)
                        .ok_or_else(|| Error::Parse(format!("unknown target generator {tname:?}")))?;
                    if tk != k {
                        return Err(Error::Parse(format!(
                            "image of {name:?} hits degree {tk}, expected {k}"
                        )));
                    }
                    c.add_term(ti, Coeff::from(*coeff));
                }
                level.push(c);
            }
            images.push(level);
        }
        Ok(AdcMap { source: source.clone(), target: target.clone(), images })
    }

    /// Image of a chain of the source.
    pub fn apply(&self, chain: &Chain) -> Chain {
        let k = chain.degree();
        let mut out = Chain::zero(k);
        if k >= self.images.len() {
            return out;
        }
        for (g, c) in chain.terms() {
            for (h, d) in self.images[k][g].terms() {
                out.add_term(h, c * d);
            }
        }
        out
    }

    pub fn compose(&self, inner: &AdcMap) -> AdcMap {
        debug_assert_eq!(inner.target, self.source);
        let images = inner
            .images
            .iter()
            .map(|level| level.iter().map(|c| self.apply(c)).collect())
            .collect();
        AdcMap { source: inner.source.clone(), target: self.target.clone(), images }
    }

    /// Checks ∂/ε commutation and positivity of generator images.
    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        for k in 0..=self.source.dims() {
            for i in 0..self.source.generator_count(k) {
                let name = self.source.generator_name(k, i);
                let img = &self.images[k][i];
                if !img.is_positive() {
                    violations.push(format!(
                        "image of {name} is not positive: {}",
                        self.target.chain_string(img)
                    ));
                }
                if k == 0 {
                    if !self.target.augmentation(img).is_one() {
                        violations.push(format!(
                            "augmentation of image of {name} is {} ≠ 1",
                            self.target.augmentation(img)
                        ));
                    }
                } else {
                    let lhs = self.target.boundary(img);
                    let rhs = self.apply(self.source.boundary_of(k, i));
                    if lhs != rhs {
                        violations.push(format!(
                            "∂ does not commute on {name}: ∂f({name}) = {} but f(∂{name}) = {}",
                            self.target.chain_string(&lhs),
                            self.target.chain_string(&rhs)
                        ));
                    }
                }
            }
        }
        violations
    }

    pub fn require_valid(&self) -> Result<()> {
        self.source.require_valid()?;
        self.target.require_valid()?;
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidMap { violations })
        }
    }
}

// JSON: {"source": ..., "target": ..., "images": {gen: [[coeff, gen], ...]}}
#[derive(Serialize, Deserialize)]
struct MapDto {
    source: Complex,
    target: Complex,
    images: BTreeMap<String, Vec<(serde_json::Number, String)>>,
}

impl Serialize for AdcMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut images = BTreeMap::new();
        for k in 0..=self.source.dims() {
            for i in 0..self.source.generator_count(k) {
                let terms = self.images[k][i]
                    .terms()
                    .map(|(g, c)| {
                        (
                            serde_json::Number::from_string_unchecked(c.to_string()),
                            self.target.generator_name(k, g).to_string(),
                        )
                    })
                    .collect();
                images.insert(self.source.generator_name(k, i).to_string(), terms);
            }
        }
        MapDto { source: self.source.clone(), target: self.target.clone(), images }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AdcMap {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let dto = MapDto::deserialize(deserializer)?;
        let mut images: Vec<Vec<Chain>> = Vec::new();
        for k in 0..=dto.source.dims() {
            let mut level = Vec::new();
            for i in 0..dto.source.generator_count(k) {
                let name = dto.source.generator_name(k, i);
                let terms = dto
                    .images
                    .get(name)
                    .ok_or_else(|| D::Error::custom(format!("no image for generator {name:?}")))?;
                let mut c = Chain::zero(k);
                for (coeff, tname) in terms {
                    let (tk, ti) = dto
                        .target
                        .lookup(tname)
                        .ok_or_else(|| D::Error::custom(format!("unknown target generator {tname:?}")))?;
                    if tk != k {
                        return Err(D::Error::custom(format!(
                            "image of {name:?} hits degree {tk}, expected {k}"
                        )));
                    }
                    let v: Coeff = coeff
                        .as_str()
                        .parse()
                        .map_err(|_| D::Error::custom(format!("bad coefficient {coeff}")))?;
                    c.add_term(ti, v);
                }
                level.push(c);
            }
            images.push(level);
        }
        Ok(AdcMap { source: dto.source, target: dto.target, images })
    }
}

// ---------------------------------------------------------------------------
// Structural isomorphism of complexes: a degreewise generator bijection
// commuting with the differentials. Names are ignored.
// ---------------------------------------------------------------------------

/// Searches for a degreewise bijection commuting with ∂. Returns the
/// per-degree permutation (source index -> target index) on success.
pub fn complex_iso(a: &Complex, b: &Complex) -> Option<Vec<Vec<usize>>> {
    if a.generator_counts() != b.generator_counts() {
        return None;
    }
    let colors_a = refine_colors(a);
    let colors_b = refine_colors(b);
    // color multisets must match degreewise
    for k in 0..=a.dims() {
        let mut ca: Vec<u64> = colors_a[k].clone();
        let mut cb: Vec<u64> = colors_b[k].clone();
        ca.sort_unstable();
        cb.sort_unstable();
        if ca != cb {
            return None;
        }
    }
    let dims = a.dims();
    let mut assignment: Vec<Vec<Option<usize>>> =
        (0..=dims).map(|k| vec![None; a.generator_count(k)]).collect();
    let mut used: Vec<Vec<bool>> = (0..=dims).map(|k| vec![false; a.generator_count(k)]).collect();
    if backtrack(a, b, &colors_a, &colors_b, 0, 0, &mut assignment, &mut used) {
        Some(assignment.into_iter().map(|lvl| lvl.into_iter().map(Option::unwrap).collect()).collect())
    } else {
        None
    }
}

fn backtrack(
    a: &Complex,
    b: &Complex,
    colors_a: &[Vec<u64>],
    colors_b: &[Vec<u64>],
    mut degree: usize,
    mut idx: usize,
    assignment: &mut Vec<Vec<Option<usize>>>,
    used: &mut Vec<Vec<bool>>,
) -> bool {
    while degree <= a.dims() && idx >= a.generator_count(degree) {
        degree += 1;
        idx = 0;
    }
    if degree > a.dims() {
        return true;
    }
    for j in 0..b.generator_count(degree) {
        if used[degree][j] || colors_a[degree][idx] != colors_b[degree][j] {
            continue;
        }
        if degree > 0 {
            // boundary must map correctly under the (complete) lower assignment
            let ba = a.boundary_of(degree, idx);
            let bb = b.boundary_of(degree, j);
            let mapped = Chain::from_terms(
                degree - 1,
                ba.terms().map(|(g, c)| (assignment[degree - 1][g].unwrap(), c.clone())),
            );
            if &mapped != bb {
                continue;
            }
        }
        assignment[degree][idx] = Some(j);
        used[degree][j] = true;
        if backtrack(a, b, colors_a, colors_b, degree, idx + 1, assignment, used) {
            return true;
        }
        assignment[degree][idx] = None;
        used[degree][j] = false;
    }
    false
}

/// Iterative color refinement over the boundary incidence structure.
fn refine_colors(x: &Complex) -> Vec<Vec<u64>> {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};
    let dims = x.dims();
    let mut colors: Vec<Vec<u64>> = (0..=dims).map(|k| vec![k as u64; x.generator_count(k)]).collect();
    for _ in 0..=dims + 2 {
        let mut next: Vec<Vec<u64>> = Vec::with_capacity(dims + 1);
        for k in 0..=dims {
            let mut level = Vec::with_capacity(x.generator_count(k));
            for i in 0..x.generator_count(k) {
                let mut below: Vec<(String, u64)> = Vec::new();
                if k > 0 {
                    for (g, c) in x.boundary_of(k, i).terms() {
                        below.push((c.to_string(), colors[k - 1][g]));
                    }
                }
                below.sort();
                let mut above: Vec<(String, u64)> = Vec::new();
                if k < dims {
                    for j in 0..x.generator_count(k + 1) {
                        let c = x.boundary_of(k + 1, j).coeff(i);
                        if !num_traits::Zero::is_zero(&c) {
                            above.push((c.to_string(), colors[k + 1][j]));
                        }
                    }
                }
                above.sort();
                let mut h = DefaultHasher::new();
                (colors[k][i], &below, &above).hash(&mut h);
                level.push(h.finish());
            }
            next.push(level);
        }
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

/// Maps used throughout the test catalog.
pub mod catalog {
    use super::AdcMap;
    use crate::shapes;

    /// ∂𝔻¹ ↪ 𝔻¹.
    pub fn boundary_inclusion() -> AdcMap {
        let src = shapes::boundary_disk(1);
        let tgt = shapes::disk(1);
        AdcMap::from_names(&src, &tgt, &[("⊥", vec![(1, "⊥")]), ("⊤", vec![(1, "⊤")])]).unwrap()
    }

    /// 𝔻¹ → 𝔻⁰ collapsing the arrow to the identity.
    pub fn disk_collapse() -> AdcMap {
        let src = shapes::disk(1);
        let tgt = shapes::disk(0);
        AdcMap::from_names(
            &src,
            &tgt,
            &[("⊥", vec![(1, "*")]), ("⊤", vec![(1, "*")]), ("S*", vec![])],
        )
        .unwrap()
    }

    /// 𝚫¹ → 𝚫² picking out the long edge 02.
    pub fn face02() -> AdcMap {
        let src = shapes::oriental(1);
        let tgt = shapes::oriental(2);
        AdcMap::from_names(
            &src,
            &tgt,
            &[("0", vec![(1, "0")]), ("1", vec![(1, "2")]), ("01", vec![(1, "02")])],
        )
        .unwrap()
    }

    /// 𝚫¹ → 𝚫² picking out the short edge 01.
    pub fn face01() -> AdcMap {
        AdcMap::from_names(
            &shapes::oriental(1),
            &shapes::oriental(2),
            &[("0", vec![(1, "0")]), ("1", vec![(1, "1")]), ("01", vec![(1, "01")])],
        )
        .unwrap()
    }

    /// The vertex 0 of 𝚫¹.
    pub fn vertex0() -> AdcMap {
        AdcMap::from_names(&shapes::point(), &shapes::oriental(1), &[("*", vec![(1, "0")])])
            .unwrap()
    }

    /// The isomorphism 𝚫¹ ≅ ⧠¹.
    pub fn arrow_iso() -> AdcMap {
        AdcMap::from_names(
            &shapes::oriental(1),
            &shapes::cube(1),
            &[("0", vec![(1, "0⊗*")]), ("1", vec![(1, "1⊗*")]), ("01", vec![(1, "01⊗*")])],
        )
        .unwrap()
    }

    /// The maps exercising the connectivity/faithfulness predicate table.
    pub fn predicate_catalog() -> Vec<(&'static str, AdcMap)> {
        vec![
            ("id(oriental2)", AdcMap::identity(&shapes::oriental(2))),
            ("id(cube2)", AdcMap::identity(&shapes::cube(2))),
            ("id(disk1)", AdcMap::identity(&shapes::disk(1))),
            ("boundary_inclusion", boundary_inclusion()),
            ("disk_collapse", disk_collapse()),
            ("face02", face02()),
            ("face01", face01()),
            ("vertex0", vertex0()),
            ("arrow_iso", arrow_iso()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn catalog_maps_validate() {
        assert!(catalog::boundary_inclusion().validate().is_empty());
        assert!(catalog::disk_collapse().validate().is_empty());
        assert!(catalog::face02().validate().is_empty());
    }

    #[test]
    fn negative_coefficient_image_fails_positivity() {
        let src = shapes::oriental(1);
        let tgt = shapes::oriental(2);
        let f = AdcMap::from_names(
            &src,
            &tgt,
            &[
                ("0", vec![(1, "0")]),
                ("1", vec![(1, "2")]),
                ("01", vec![(1, "01"), (1, "12"), (-1, "02"), (1, "02")]),
            ],
        )
        .unwrap();
        // force a genuinely negative term
        let g = AdcMap::from_names(
            &src,
            &tgt,
            &[
                ("0", vec![(1, "0")]),
                ("1", vec![(1, "2")]),
                ("01", vec![(2, "01"), (2, "12"), (-1, "01"), (-2, "02"), (1, "02")]),
            ],
        )
        .unwrap();
        assert!(f.validate().is_empty());
        assert!(g.validate().iter().any(|v| v.contains("not positive")));
    }

    #[test]
    fn gray_unit_law_up_to_iso() {
        for x in [shapes::oriental(2), shapes::cube(2), shapes::disk(2)] {
            let t = shapes::gray_tensor(&x, &shapes::point()).unwrap();
            assert!(complex_iso(&x, &t).is_some(), "unit law for {}", x.name());
            let t2 = shapes::gray_tensor(&shapes::point(), &x).unwrap();
            assert!(complex_iso(&x, &t2).is_some());
        }
    }

    #[test]
    fn suspension_of_disk_is_next_disk() {
        let s = shapes::suspension(&shapes::disk(1));
        assert!(complex_iso(&s, &shapes::disk(2)).is_some());
    }

    #[test]
    fn non_isomorphic_complexes_are_rejected() {
        assert!(complex_iso(&shapes::oriental(2), &shapes::cube(2)).is_none());
        assert!(complex_iso(&shapes::disk(1), &shapes::boundary_disk(1)).is_none());
    }

    #[test]
    fn map_json_round_trip() {
        let f = catalog::face02();
        let j = serde_json::to_string_pretty(&f).unwrap();
        let g: AdcMap = serde_json::from_str(&j).unwrap();
        // endpoint markers are a construction artifact, not wire data
        assert_eq!(f.images, g.images);
        assert_eq!(f.source.generator_counts(), g.source.generator_counts());
        assert_eq!(j, serde_json::to_string_pretty(&g).unwrap());
    }
}
