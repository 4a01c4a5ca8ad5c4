//! Bounded stratified nerves of directed complexes: skeleta, pushout
//! verification, cofiber sphere profiles, and extension obstructions.

use std::collections::HashMap;

use serde::Serialize;

use crate::cells::{solve_positive_chains, BasePoint};
use crate::chain::Chain;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homotopy::{pi_n, pi_prime_n};
use crate::mapping::AdcMap;
use crate::poset::Poset;
use crate::shapes::{self, increasing_subsets, subset_name};

/// An m-simplex of a stratified nerve: a map out of the m-th oriental,
/// marked thin when the top cell maps to the zero chain.
#[derive(Debug, Clone)]
pub struct Simplex {
    pub map: AdcMap,
    pub thin: bool,
}

/// A dimension-bounded stratified simplicial set with explicit face and
/// degeneracy tables.
#[derive(Debug, Clone)]
pub struct StratSet {
    pub name: String,
    pub dim_bound: usize,
    pub cap: u32,
    /// `simplices[m]` lists the m-simplices for m ≤ dim_bound.
    pub simplices: Vec<Vec<Simplex>>,
    /// `faces[m][i][j]` = index of the j-th face in dimension m−1 (m ≥ 1).
    pub faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[m][i][j]` = index of s_j in dimension m+1 (m < dim_bound).
    pub degeneracies: Vec<Vec<Vec<usize>>>,
    /// When the set was carved out of a larger one: original indices.
    pub inclusion: Option<Vec<Vec<usize>>>,
}

/// The map of orientals induced by a monotone vertex map: an atom goes to
/// the atom on its image vertex set when the map is injective there and to
/// zero otherwise.
pub fn oriental_operator(theta: &[usize], target_n: usize) -> AdcMap {
    assert!(!theta.is_empty() && theta.windows(2).all(|w| w[0] <= w[1]));
    let source_n = theta.len() - 1;
    let source = shapes::oriental(source_n);
    let target = shapes::oriental(target_n);
    let mut images: Vec<Vec<Chain>> = Vec::new();
    for k in 0..=source_n {
        let mut level = Vec::new();
        for subset in increasing_subsets(source_n, k + 1) {
            let image: Vec<usize> = subset.iter().map(|&v| theta[v]).collect();
            let injective = image.windows(2).all(|w| w[0] < w[1]);
            let chain = if injective {
                let (d, idx) = target.lookup(&subset_name(&image, target_n)).unwrap();
                debug_assert_eq!(d, k);
                Chain::unit(k, idx)
            } else {
                Chain::zero(k)
            };
            level.push(chain);
        }
        images.push(level);
    }
    AdcMap { source, target, images }
}

/// The j-th coface [m−1] → [m] (skips vertex j).
pub fn face_operator(j: usize, m: usize) -> AdcMap {
    let theta: Vec<usize> = (0..=m).filter(|&v| v != j).collect();
    oriental_operator(&theta, m)
}

/// The j-th codegeneracy [m+1] → [m] (repeats vertex j).
pub fn degeneracy_operator(j: usize, m: usize) -> AdcMap {
    let mut theta: Vec<usize> = (0..=m).collect();
    theta.insert(j, j);
    oriental_operator(&theta, m)
}

fn apply_partial(images: &[Vec<Chain>], chain: &Chain) -> Chain {
    let mut out = Chain::zero(chain.degree());
    for (g, c) in chain.terms() {
        out = &out + &images[chain.degree()][g].scaled(c);
    }
    out
}

/// Enumerates all maps oriental(m) → x with coefficients bounded by `cap`.
fn enumerate_simplices(x: &Complex, m: usize, cap: u32) -> Result<Vec<AdcMap>> {
    let orm = shapes::oriental(m);
    // generators in degree order; choices in degree k depend only on lower
    // degrees, so cache the solution sets per (degree, mapped boundary)
    let mut cache: HashMap<(usize, Chain), Vec<Chain>> = HashMap::new();
    let objects: Vec<Chain> = (0..x.generator_count(0)).map(|c| Chain::unit(0, c)).collect();
    let mut out: Vec<AdcMap> = Vec::new();
    let mut images: Vec<Vec<Chain>> = (0..=m).map(|_| Vec::new()).collect();
    fn rec(
        x: &Complex,
        orm: &Complex,
        m: usize,
        cap: u32,
        k: usize,
        i: usize,
        images: &mut Vec<Vec<Chain>>,
        objects: &[Chain],
        cache: &mut HashMap<(usize, Chain), Vec<Chain>>,
        out: &mut Vec<AdcMap>,
    ) -> Result<()> {
        if k > m {
            out.push(AdcMap { source: orm.clone(), target: x.clone(), images: images.clone() });
            return Ok(());
        }
        let (nk, ni) = if i + 1 < orm.generator_count(k) { (k, i + 1) } else { (k + 1, 0) };
        let candidates: Vec<Chain> = if k == 0 {
            objects.to_vec()
        } else {
            let mapped = apply_partial(images, orm.boundary_of(k, i));
            if let Some(hit) = cache.get(&(k, mapped.clone())) {
                hit.clone()
            } else {
                let sols = solve_positive_chains(x, k, &mapped, cap)?;
                cache.insert((k, mapped), sols.clone());
                sols
            }
        };
        for c in candidates {
            images[k].push(c);
            rec(x, orm, m, cap, nk, ni, images, objects, cache, out)?;
            images[k].pop();
        }
        Ok(())
    }
    rec(x, &orm, m, cap, 0, 0, &mut images, &objects, &mut cache, &mut out)?;
    Ok(out)
}

/// Builds the stratified nerve of `x` up to simplicial dimension `bound`.
pub fn stratified_nerve(x: &Complex, bound: usize, cap: u32) -> Result<StratSet> {
    x.require_valid()?;
    let mut simplices: Vec<Vec<Simplex>> = Vec::new();
    let mut index: Vec<HashMap<Vec<Vec<Chain>>, usize>> = Vec::new();
    for m in 0..=bound {
        let maps = enumerate_simplices(x, m, cap)?;
        let mut level = Vec::new();
        let mut level_index = HashMap::new();
        for f in maps {
            let thin = m > 0 && f.images[m][0].is_zero();
            level_index.insert(f.images.clone(), level.len());
            level.push(Simplex { map: f, thin });
        }
        index.push(level_index);
        simplices.push(level);
    }
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for m in 1..=bound {
        let ops: Vec<AdcMap> = (0..=m).map(|j| face_operator(j, m)).collect();
        let level = simplices[m]
            .iter()
            .map(|s| {
                ops.iter()
                    .map(|d| *index[m - 1].get(&s.map.compose(d).images).expect("face is a simplex"))
                    .collect()
            })
            .collect();
        faces.push(level);
    }
    let mut degeneracies: Vec<Vec<Vec<usize>>> = Vec::new();
    for m in 0..=bound {
        if m == bound {
            degeneracies.push(simplices[m].iter().map(|_| Vec::new()).collect());
            break;
        }
        let ops: Vec<AdcMap> = (0..=m).map(|j| degeneracy_operator(j, m)).collect();
        let level = simplices[m]
            .iter()
            .map(|s| {
                ops.iter()
                    .map(|d| {
                        *index[m + 1].get(&s.map.compose(d).images).expect("degeneracy is a simplex")
                    })
                    .collect()
            })
            .collect();
        degeneracies.push(level);
    }
    let set = StratSet {
        name: format!("N({})", x.name()),
        dim_bound: bound,
        cap,
        simplices,
        faces,
        degeneracies,
        inclusion: None,
    };
    for m in 0..=bound {
        for i in 0..set.simplices[m].len() {
            assert!(
                !set.is_degenerate(m, i) || set.simplices[m][i].thin,
                "degenerate simplices must be thin"
            );
        }
    }
    Ok(set)
}

impl StratSet {
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn is_degenerate(&self, m: usize, i: usize) -> bool {
        m > 0
            && (0..m).any(|j| {
                let face = self.faces[m][i][j];
                self.degeneracies[m - 1][face][j] == i
            })
    }

    /// Membership table of the n-skeleton: simplices that are iterated
    /// degeneracies of simplices in dimension ≤ n.
    fn skeleton_members(&self, n: i64) -> Vec<Vec<bool>> {
        let mut member: Vec<Vec<bool>> = Vec::new();
        for m in 0..=self.dim_bound {
            let level = (0..self.simplices[m].len())
                .map(|i| {
                    (m as i64) <= n
                        || (m > 0
                            && (0..m).any(|j| {
                                let face = self.faces[m][i][j];
                                self.degeneracies[m - 1][face][j] == i && member[m - 1][face]
                            }))
                })
                .collect();
            member.push(level);
        }
        member
    }

    pub fn to_value(&self) -> serde_json::Value {
        let levels: Vec<serde_json::Value> = (0..=self.dim_bound)
            .map(|m| {
                let entries: Vec<serde_json::Value> = self.simplices[m]
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        let images: Vec<serde_json::Value> = (0..=m)
                            .map(|k| {
                                let level: Vec<serde_json::Value> = s.map.images[k]
                                    .iter()
                                    .map(|c| s.map.target.chain_to_value(c))
                                    .collect();
                                serde_json::Value::Array(level)
                            })
                            .collect();
                        serde_json::json!({
                            "images": images,
                            "thin": s.thin,
                            "degenerate": self.is_degenerate(m, i),
                            "faces": if m > 0 { self.faces[m][i].clone() } else { Vec::new() },
                            "degeneracies": self.degeneracies[m][i].clone(),
                        })
                    })
                    .collect();
                serde_json::Value::Array(entries)
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "dim_bound": self.dim_bound,
            "cap": self.cap,
            "simplices": levels,
        })
    }
}

/// The n-skeleton as a stratified subset, with original indices recorded.
pub fn skeleton(s: &StratSet, n: usize) -> StratSet {
    assert!(n <= s.dim_bound);
    let member = s.skeleton_members(n as i64);
    let mut keep: Vec<Vec<usize>> = Vec::new();
    let mut new_index: Vec<HashMap<usize, usize>> = Vec::new();
    for level in &member {
        let kept: Vec<usize> =
            level.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        new_index.push(kept.iter().enumerate().map(|(new, &old)| (old, new)).collect());
        keep.push(kept);
    }
    let mut simplices = Vec::new();
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    for m in 0..=s.dim_bound {
        simplices.push(keep[m].iter().map(|&i| s.simplices[m][i].clone()).collect());
        faces.push(if m == 0 {
            Vec::new()
        } else {
            keep[m]
                .iter()
                .map(|&i| s.faces[m][i].iter().map(|f| new_index[m - 1][f]).collect())
                .collect()
        });
        degeneracies.push(
            keep[m]
                .iter()
                .map(|&i| s.degeneracies[m][i].iter().map(|d| new_index[m + 1][d]).collect())
                .collect(),
        );
    }
    StratSet {
        name: format!("sk_{n}({})", s.name),
        dim_bound: s.dim_bound,
        cap: s.cap,
        simplices,
        faces,
        degeneracies,
        inclusion: Some(keep),
    }
}

/// Indices of nondegenerate n-simplices, split as (thin, non-thin).
pub fn nondegenerate(s: &StratSet, n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut thin = Vec::new();
    let mut nonthin = Vec::new();
    for i in 0..s.simplices[n].len() {
        if s.is_degenerate(n, i) {
            continue;
        }
        if s.simplices[n][i].thin {
            thin.push(i);
        } else {
            nonthin.push(i);
        }
    }
    (thin, nonthin)
}

#[derive(Debug, Clone, Serialize)]
pub struct PushoutRow {
    pub m: usize,
    pub new_simplices: usize,
    pub cells_per_attachment: usize,
    pub expected: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PushoutReport {
    pub n: usize,
    pub thin_attachments: usize,
    pub nonthin_attachments: usize,
    pub rows: Vec<PushoutRow>,
    pub pass: bool,
}

fn binomial(m: usize, n: usize) -> usize {
    if n > m {
        return 0;
    }
    let mut v = 1usize;
    for i in 0..n {
        v = v * (m - i) / (i + 1);
    }
    v
}

/// Checks, dimension by dimension, that passing from the (n−1)-skeleton to
/// the n-skeleton attaches exactly one cell per nondegenerate n-simplex:
/// each attachment contributes its degeneracies, i.e. C(m,n) m-simplices
/// (the order-preserving surjections [m] ↠ [n], equivalently the interior
/// m-simplices of the attached n-simplex); thin and non-thin attachments
/// have the same underlying count and differ only in their marking.
pub fn verify_skeletal_pushout(s: &StratSet, n: usize) -> PushoutReport {
    let upper = s.skeleton_members(n as i64);
    let lower = s.skeleton_members(n as i64 - 1);
    let (thin, nonthin) = nondegenerate(s, n);
    let mut rows = Vec::new();
    for m in 0..=s.dim_bound {
        let hi = upper[m].iter().filter(|&&b| b).count();
        let lo = lower[m].iter().filter(|&&b| b).count();
        let cells = binomial(m, n);
        let expected = (thin.len() + nonthin.len()) * cells;
        rows.push(PushoutRow {
            m,
            new_simplices: hi - lo,
            cells_per_attachment: cells,
            expected,
            pass: hi - lo == expected,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    PushoutReport {
        n,
        thin_attachments: thin.len(),
        nonthin_attachments: nonthin.len(),
        rows,
        pass,
    }
}

/// Multiplicities of the spheres in the skeletal cofiber: the n-skeleton
/// modulo the (n−1)-skeleton is a wedge with one suspended directed sphere
/// per nondegenerate non-thin n-simplex and one suspended integral sphere
/// per nondegenerate thin n-simplex.
pub fn wedge_cofiber_profile(s: &StratSet, n: usize) -> (usize, usize) {
    if n > s.dim_bound {
        return (0, 0);
    }
    let (thin, nonthin) = nondegenerate(s, n);
    (nonthin.len(), thin.len())
}

/// A functor datum on the n-skeleton of a nerve: a target-valued assignment
/// per simplex in dimensions ≤ n, compatible with faces and degeneracies.
#[derive(Debug, Clone)]
pub struct FunctorData {
    pub level: usize,
    pub target: Complex,
    /// `assignments[m][i]` is the image oriental(m) → target of simplex i.
    pub assignments: Vec<Vec<AdcMap>>,
}

impl FunctorData {
    /// Level-0 datum from a vertex assignment by generator names.
    pub fn on_objects(
        nerve: &StratSet,
        target: &Complex,
        vertices: &[(&str, &str)],
    ) -> Result<FunctorData> {
        let table: HashMap<&str, &str> = vertices.iter().copied().collect();
        let mut level = Vec::new();
        for s in &nerve.simplices[0] {
            let src = &s.map.target;
            let c = s.map.images[0][0].support().next().unwrap();
            let name = src.generator_name(0, c);
            let image_name = table
                .get(name)
                .ok_or_else(|| Error::IncompatibleF(format!("no image for vertex {name}")))?;
            let (d, idx) = target
                .lookup(image_name)
                .ok_or_else(|| Error::IncompatibleF(format!("unknown target object {image_name}")))?;
            if d != 0 {
                return Err(Error::IncompatibleF(format!("{image_name} is not an object")));
            }
            level.push(AdcMap {
                source: shapes::oriental(0),
                target: target.clone(),
                images: vec![vec![Chain::unit(0, idx)]],
            });
        }
        Ok(FunctorData { level: 0, target: target.clone(), assignments: vec![level] })
    }

    /// Checks alignment with the nerve and compatibility with faces.
    pub fn validate(&self, nerve: &StratSet) -> Result<()> {
        if self.level > nerve.dim_bound {
            return Err(Error::IncompatibleF("datum level exceeds nerve bound".into()));
        }
        for m in 0..=self.level {
            if self.assignments[m].len() != nerve.simplices[m].len() {
                return Err(Error::IncompatibleF(format!(
                    "dimension {m}: {} assignments for {} simplices",
                    self.assignments[m].len(),
                    nerve.simplices[m].len()
                )));
            }
            for (i, a) in self.assignments[m].iter().enumerate() {
                a.require_valid().map_err(|e| Error::IncompatibleF(e.to_string()))?;
                if m > 0 {
                    for j in 0..=m {
                        let face = nerve.faces[m][i][j];
                        if a.compose(&face_operator(j, m)).images
                            != self.assignments[m - 1][face].images
                        {
                            return Err(Error::IncompatibleF(format!(
                                "dimension {m}, simplex {i}: face {j} mismatch"
                            )));
                        }
                    }
                }
                if nerve.simplices[m][i].thin && !a.images[m][0].is_zero() {
                    return Err(Error::IncompatibleF(format!(
                        "dimension {m}, simplex {i}: thin simplex with non-thin image"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Pushes the boundary of the top cell of an (n+1)-simplex through the
/// functor datum: its faces carry assignments, and every non-top atom of
/// oriental(n+1) lies on a face.
fn boundary_basepoint(
    nerve: &StratSet,
    f: &FunctorData,
    m: usize,
    alpha: usize,
) -> Result<BasePoint> {
    let orm = shapes::oriental(m);
    let mut g: Vec<Vec<Option<Chain>>> =
        (0..m).map(|k| vec![None; orm.generator_count(k)]).collect();
    for j in 0..=m {
        let delta = face_operator(j, m);
        let assigned = &f.assignments[m - 1][nerve.faces[m][alpha][j]];
        for k in 0..m {
            for b in 0..delta.source.generator_count(k) {
                let image = &delta.images[k][b];
                let a = image.support().next().expect("cofaces are injective on atoms");
                let value = assigned.images[k][b].clone();
                if let Some(prior) = &g[k][a] {
                    if *prior != value {
                        return Err(Error::IncompatibleF(format!(
                            "inconsistent images on atom {}",
                            orm.generator_name(k, a)
                        )));
                    }
                } else {
                    g[k][a] = Some(value);
                }
            }
        }
    }
    let push = |chain: &Chain| -> Chain {
        let mut out = Chain::zero(chain.degree());
        for (a, c) in chain.terms() {
            out = &out + &g[chain.degree()][a].as_ref().expect("atom covered by a face").scaled(c);
        }
        out
    };
    let mut z = BasePoint::empty();
    for (neg, pos) in orm.atom_boundaries(m, 0) {
        z.push(push(&neg), push(&pos));
    }
    Ok(z)
}

fn unit_poset() -> Poset {
    Poset::from_order(vec![String::new()], vec![vec![true]])
}

/// τ≤0 of the space of extensions of `f` from the n-skeleton to the
/// (n+1)-skeleton of the nerve of `x`, assembled factor by factor: one
/// ordered homotopy poset of the target per nondegenerate non-thin
/// (n+1)-simplex and one identity-witness factor per nondegenerate thin
/// (n+1)-simplex.
pub fn obstruction_poset(
    x: &Complex,
    y: &Complex,
    f: &FunctorData,
    n: usize,
    cap: u32,
) -> Result<Poset> {
    if f.level != n {
        return Err(Error::IncompatibleF(format!("datum has level {}, step needs {n}", f.level)));
    }
    let nerve = stratified_nerve(x, n + 1, cap)?;
    f.validate(&nerve)?;
    let (thin, nonthin) = nondegenerate(&nerve, n + 1);
    let mut out = unit_poset();
    for &alpha in &nonthin {
        let z = boundary_basepoint(&nerve, f, n + 1, alpha)?;
        out = out.product(&pi_n(y, &z, cap)?.poset);
    }
    for &alpha in &thin {
        let z = boundary_basepoint(&nerve, f, n + 1, alpha)?;
        out = out.product(&pi_prime_n(y, &z, cap)?.poset);
    }
    Ok(out)
}

/// Direct enumeration oracle for `obstruction_poset`: lists every filler
/// tuple for the nondegenerate (n+1)-simplices, orders tuples by
/// componentwise (n+2)-chain witnesses, and condenses.
pub fn brute_force_extensions(
    x: &Complex,
    y: &Complex,
    f: &FunctorData,
    n: usize,
    cap: u32,
) -> Result<Poset> {
    if f.level != n {
        return Err(Error::IncompatibleF(format!("datum has level {}, step needs {n}", f.level)));
    }
    let nerve = stratified_nerve(x, n + 1, cap)?;
    f.validate(&nerve)?;
    let (thin, nonthin) = nondegenerate(&nerve, n + 1);
    let mut filler_sets: Vec<Vec<Chain>> = Vec::new();
    for &alpha in nonthin.iter().chain(&thin) {
        let z = boundary_basepoint(&nerve, f, n + 1, alpha)?;
        let d = z.top_difference().expect("basepoint has dimension n");
        let mut fillers = solve_positive_chains(y, n + 1, &d, cap)?;
        if thin.contains(&alpha) {
            fillers.retain(Chain::is_zero);
        }
        filler_sets.push(fillers);
    }
    let mut tuples: Vec<Vec<Chain>> = vec![Vec::new()];
    for set in &filler_sets {
        let mut next = Vec::new();
        for t in &tuples {
            for c in set {
                let mut t2 = t.clone();
                t2.push(c.clone());
                next.push(t2);
            }
        }
        tuples = next;
    }
    if filler_sets.is_empty() {
        // no attachments: the unique extension
        tuples = vec![Vec::new()];
    }
    let k = tuples.len();
    let mut rel = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut ok = true;
            for (a, b) in tuples[i].iter().zip(&tuples[j]) {
                if solve_positive_chains(y, n + 2, &(b - a), cap)?.is_empty() {
                    ok = false;
                    break;
                }
            }
            rel[i][j] = ok;
        }
    }
    let labels = tuples
        .iter()
        .map(|t| t.iter().map(|c| y.chain_string(c)).collect::<Vec<_>>().join(";"))
        .collect();
    let (poset, merged) = Poset::from_preorder(labels, rel);
    assert_eq!(merged, 0, "condensation must be trivial on loop-free complexes");
    Ok(poset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::poset_iso;

    const CAP: u32 = 2;

    #[test]
    fn operators_satisfy_simplicial_identities() {
        for m in 1..=3usize {
            for j in 0..=m {
                face_operator(j, m).require_valid().unwrap();
            }
            for j in 0..m {
                degeneracy_operator(j, m - 1).require_valid().unwrap();
                // d_j s_j = id and d_{j+1} s_j = id
                let s = degeneracy_operator(j, m - 1);
                let id = AdcMap::identity(&shapes::oriental(m - 1));
                assert_eq!(s.compose(&face_operator(j, m)).images, id.images);
                assert_eq!(s.compose(&face_operator(j + 1, m)).images, id.images);
            }
        }
    }

    #[test]
    fn nerve_of_the_arrow_disk() {
        let s = stratified_nerve(&shapes::disk(1), 2, 1).unwrap();
        assert_eq!(s.counts(), vec![2, 3, 4]);
        let nd: Vec<usize> = (0..=2)
            .map(|m| (0..s.simplices[m].len()).filter(|&i| !s.is_degenerate(m, i)).count())
            .collect();
        assert_eq!(nd, vec![2, 1, 0]);
        let (thin, nonthin) = nondegenerate(&s, 1);
        assert!(thin.is_empty());
        assert_eq!(nonthin.len(), 1);
    }

    #[test]
    fn nerve_of_the_triangle() {
        let s = stratified_nerve(&shapes::oriental(2), 2, 1).unwrap();
        // one thin composite; non-thin: the identity plus the two simplices
        // whiskering the 2-cell by a degenerate outer edge (vertex maps
        // (0,0,2) and (0,2,2))
        let (thin, nonthin) = nondegenerate(&s, 2);
        assert_eq!((thin.len(), nonthin.len()), (1, 3));
        let id = AdcMap::identity(&shapes::oriental(2));
        assert!(nonthin.iter().any(|&i| s.simplices[2][i].map.images == id.images));
        // the thin one composes the two short edges and has zero top
        let t = &s.simplices[2][thin[0]].map;
        assert!(t.images[2][0].is_zero());
        let x = shapes::oriental(2);
        let long = t.target.chain_string(&t.images[1][x.lookup("02").unwrap().1]);
        assert_eq!(long, "(01)+(12)");
    }

    #[test]
    fn nerve_of_the_point_is_degenerate_above_zero() {
        let s = stratified_nerve(&shapes::disk(0), 3, 1).unwrap();
        assert_eq!(s.counts(), vec![1, 1, 1, 1]);
        for m in 1..=3 {
            assert!(s.is_degenerate(m, 0));
            assert!(s.simplices[m][0].thin);
        }
    }

    #[test]
    fn skeleton_drops_the_nondegenerate_top_cells() {
        let s = stratified_nerve(&shapes::oriental(2), 2, 1).unwrap();
        let sk1 = skeleton(&s, 1);
        assert_eq!(sk1.simplices[2].len(), s.simplices[2].len() - 4);
        assert_eq!(sk1.simplices[1].len(), s.simplices[1].len());
        // top skeleton is the whole set, 0-skeleton is spanned by vertices
        assert_eq!(skeleton(&s, 2).counts(), s.counts());
        let sk0 = skeleton(&s, 0);
        for m in 0..=2 {
            assert_eq!(sk0.simplices[m].len(), s.simplices[0].len());
        }
    }

    #[test]
    fn pushout_counts_for_triangle_and_square() {
        for x in [shapes::oriental(2), shapes::cube(2)] {
            let s = stratified_nerve(&x, 4, 1).unwrap();
            for n in 0..=4 {
                let r = verify_skeletal_pushout(&s, n);
                assert!(r.pass, "{} at n={n}: {r:?}", x.name());
            }
        }
    }

    #[test]
    fn cofiber_profiles() {
        let s = stratified_nerve(&shapes::oriental(2), 2, 1).unwrap();
        assert_eq!(wedge_cofiber_profile(&s, 2), (3, 1));
        let d = stratified_nerve(&shapes::disk(1), 2, 1).unwrap();
        assert_eq!(wedge_cofiber_profile(&d, 1), (1, 0));
        assert_eq!(wedge_cofiber_profile(&d, 5), (0, 0));
    }

    #[test]
    fn obstruction_step_into_the_triangle() {
        let x = shapes::oriental(1);
        let y = shapes::oriental(2);
        let nerve = stratified_nerve(&x, 1, CAP).unwrap();
        let f = FunctorData::on_objects(&nerve, &y, &[("0", "0"), ("1", "2")]).unwrap();
        let got = obstruction_poset(&x, &y, &f, 0, CAP).unwrap();
        let expect = Poset::chain(1);
        assert!(poset_iso(&got, &expect).is_some(), "{:?}", got.labels());
        let brute = brute_force_extensions(&x, &y, &f, 0, CAP).unwrap();
        assert!(poset_iso(&got, &brute).is_some());
    }

    #[test]
    fn obstruction_with_no_filler_is_empty() {
        let x = shapes::oriental(1);
        let y = shapes::boundary_disk(1);
        let nerve = stratified_nerve(&x, 1, CAP).unwrap();
        let f = FunctorData::on_objects(&nerve, &y, &[("0", "⊥"), ("1", "⊤")]).unwrap();
        let got = obstruction_poset(&x, &y, &f, 0, CAP).unwrap();
        assert!(got.is_empty());
        let brute = brute_force_extensions(&x, &y, &f, 0, CAP).unwrap();
        assert!(brute.is_empty());
    }

    #[test]
    fn obstruction_into_the_disk_is_a_singleton() {
        let x = shapes::oriental(1);
        let y = shapes::disk(1);
        let nerve = stratified_nerve(&x, 1, CAP).unwrap();
        let f = FunctorData::on_objects(&nerve, &y, &[("0", "⊥"), ("1", "⊤")]).unwrap();
        let got = obstruction_poset(&x, &y, &f, 0, CAP).unwrap();
        assert_eq!(got.len(), 1);
        let brute = brute_force_extensions(&x, &y, &f, 0, CAP).unwrap();
        assert!(poset_iso(&got, &brute).is_some());
    }

    #[test]
    fn functor_data_rejects_missing_vertices() {
        let x = shapes::oriental(1);
        let nerve = stratified_nerve(&x, 1, CAP).unwrap();
        let err = FunctorData::on_objects(&nerve, &shapes::disk(1), &[("0", "⊥")]);
        assert!(matches!(err, Err(Error::IncompatibleF(_))));
    }
}
