//! Cell tables: positive chains with prescribed boundary, oriented
//! basepoints, and atomic path decompositions.

use num_traits::One;
use serde_json::Value;

use crate::chain::{Chain, Coeff};
use crate::complex::Complex;
use crate::error::{Error, Result};

/// Default coefficient cap for bounded enumeration.
pub const DEFAULT_CAP: u32 = 8;

/// All positive chains of degree `n` with coefficients ≤ `cap` whose boundary
/// is `d`, by depth-first search branching on the generators that can cover
/// the least generator of the residual.
///
/// The result is complete at the cap: the search is re-run at `2·cap` and the
/// call fails with `UnsaturatedEnumeration` if the doubled cap finds more.
pub fn solve_positive_chains(x: &Complex, n: usize, d: &Chain, cap: u32) -> Result<Vec<Chain>> {
    let solver = Solver::new(x, n)?;
    let found = solver.run(d, cap);
    let doubled = solver.run(d, cap * 2);
    if found.len() != doubled.len() {
        return Err(Error::UnsaturatedEnumeration {
            complex: x.name().to_string(),
            degree: n,
            cap,
            found: found.len(),
            found_doubled: doubled.len(),
            doubled_cap: cap * 2,
        });
    }
    Ok(found)
}

/// Solver state for one complex and degree: topological positions of the
/// degree-(n−1) generators and, per degree-n generator, the latest position
/// its positive boundary part touches.
struct Solver<'a> {
    x: &'a Complex,
    n: usize,
    below_pos: Vec<usize>,
    top_pos: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(x: &'a Complex, n: usize) -> Result<Solver<'a>> {
        assert!(n >= 1, "solve_positive_chains needs degree >= 1");
        let order = x.loop_order().map_err(|cycle| Error::InvalidComplex {
            name: x.name().to_string(),
            violations: vec![format!("loop-freeness cycle through {} generators", cycle.len())],
        })?;
        let mut below_pos = vec![0usize; x.generator_count(n - 1)];
        for (p, &(deg, i)) in order.iter().enumerate() {
            if deg == n - 1 {
                below_pos[i] = p;
            }
        }
        let top_pos = (0..x.generator_count(n))
            .map(|g| {
                x.boundary_of(n, g)
                    .pos_part()
                    .support()
                    .map(|u| below_pos[u])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Ok(Solver { x, n, below_pos, top_pos })
    }

    fn run(&self, d: &Chain, cap: u32) -> Vec<Chain> {
        assert_eq!(d.degree(), self.n - 1);
        let mut banned = vec![false; self.x.generator_count(self.n)];
        let mut assigned: Vec<(usize, Coeff)> = Vec::new();
        let mut out = Vec::new();
        self.dfs(d.clone(), cap, &mut banned, &mut assigned, &mut out);
        out.sort();
        out
    }

    fn dfs(
        &self,
        residual: Chain,
        cap: u32,
        banned: &mut Vec<bool>,
        assigned: &mut Vec<(usize, Coeff)>,
        out: &mut Vec<Chain>,
    ) {
        if residual.is_zero() {
            // In a strongly loop-free complex no nonzero positive chain has
            // zero boundary, so the only completion is by zero.
            out.push(Chain::from_terms(self.n, assigned.iter().cloned()));
            return;
        }
        // Pivot: the latest residual generator in the topological order.
        // The boundary of any positive chain has a strictly positive
        // coefficient at the latest position it touches, so contributions at
        // the pivot come only from generators whose positive boundary part
        // peaks exactly there — each adds positively, so they sum to the
        // residual coefficient, which in particular must be positive.
        let u = residual.support().max_by_key(|&g| self.below_pos[g]).unwrap();
        let ru = residual.coeff(u);
        if !num_traits::Signed::is_positive(&ru) {
            return;
        }
        let candidates: Vec<usize> = (0..self.x.generator_count(self.n))
            .filter(|&g| {
                !banned[g]
                    && self.top_pos[g] == self.below_pos[u]
                    && num_traits::Signed::is_positive(&self.x.boundary_of(self.n, g).coeff(u))
            })
            .collect();
        // Partition solutions by the least used cover of the pivot and its
        // coefficient; earlier covers are excluded inside each branch.
        for (pos, &g) in candidates.iter().enumerate() {
            let b = self.x.boundary_of(self.n, g);
            let gamma = b.coeff(u);
            let cmax = (&ru / &gamma).min(Coeff::from(cap));
            let mut c = Coeff::one();
            while c <= cmax {
                let next = &residual - &b.scaled(&c);
                for &e in &candidates[..=pos] {
                    banned[e] = true;
                }
                assigned.push((g, c.clone()));
                self.dfs(next, cap, banned, assigned, out);
                assigned.pop();
                for &e in &candidates[..=pos] {
                    banned[e] = false;
                }
                c += 1;
            }
        }
    }
}

/// An oriented basepoint: a sequence of pairs of parallel positive chains,
/// one pair per degree. The empty sequence is the basepoint for π₀.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasePoint {
    pairs: Vec<(Chain, Chain)>,
}

impl BasePoint {
    pub fn empty() -> Self {
        BasePoint { pairs: Vec::new() }
    }

    pub fn new(pairs: Vec<(Chain, Chain)>) -> Self {
        BasePoint { pairs }
    }

    /// Basepoint of dimension 0 on a pair of objects.
    pub fn objects(a: usize, b: usize) -> Self {
        BasePoint { pairs: vec![(Chain::unit(0, a), Chain::unit(0, b))] }
    }

    pub fn pairs(&self) -> &[(Chain, Chain)] {
        &self.pairs
    }

    /// Number of entries; the basepoint's dimension is `len() - 1`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn push(&mut self, neg: Chain, pos: Chain) {
        self.pairs.push((neg, pos));
    }

    /// The boundary a chain one degree above the top entry must have.
    pub fn top_difference(&self) -> Option<Chain> {
        self.pairs.last().map(|(n, p)| p - n)
    }

    pub fn validate(&self, x: &Complex) -> Result<()> {
        for (k, (neg, pos)) in self.pairs.iter().enumerate() {
            for (tag, c) in [("negative", neg), ("positive", pos)] {
                if c.degree() != k {
                    return Err(Error::InvalidBasepoint(format!(
                        "{tag} entry {k} has degree {}",
                        c.degree()
                    )));
                }
                if !c.is_positive() {
                    return Err(Error::InvalidBasepoint(format!(
                        "{tag} entry {k} is not a positive chain: {}",
                        x.chain_string(c)
                    )));
                }
                if k == 0 {
                    if !x.augmentation(c).is_one() {
                        return Err(Error::InvalidBasepoint(format!(
                            "{tag} entry 0 has augmentation {}",
                            x.augmentation(c)
                        )));
                    }
                } else {
                    let want = &self.pairs[k - 1].1 - &self.pairs[k - 1].0;
                    if x.boundary(c) != want {
                        return Err(Error::InvalidBasepoint(format!(
                            "∂ of {tag} entry {k} is {}, expected {}",
                            x.chain_string(&x.boundary(c)),
                            x.chain_string(&want)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_value(&self, x: &Complex) -> Value {
        Value::Array(
            self.pairs
                .iter()
                .map(|(n, p)| Value::Array(vec![x.chain_to_value(n), x.chain_to_value(p)]))
                .collect(),
        )
    }

    pub fn from_value(x: &Complex, v: &Value) -> Result<Self> {
        let entries = v
            .as_array()
            .ok_or_else(|| Error::Parse("basepoint must be an array of chain pairs".into()))?;
        let mut pairs = Vec::new();
        for (k, e) in entries.iter().enumerate() {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse(format!("bad basepoint entry {e}")))?;
            pairs.push((x.chain_from_value(k, &pair[0])?, x.chain_from_value(k, &pair[1])?));
        }
        let bp = BasePoint { pairs };
        bp.validate(x)?;
        Ok(bp)
    }
}

/// A Steiner cell table: a basepoint together with a top chain filling it.
/// Identity cells in positive dimension carry the zero top chain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub base: BasePoint,
    pub top: Chain,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.base.len()
    }

    pub fn is_identity(&self) -> bool {
        self.dim() > 0 && self.top.is_zero()
    }

    pub fn validate(&self, x: &Complex) -> Result<()> {
        self.base.validate(x)?;
        if self.top.degree() != self.base.len() {
            return Err(Error::InvalidBasepoint(format!(
                "top chain has degree {}, expected {}",
                self.top.degree(),
                self.base.len()
            )));
        }
        if !self.top.is_positive() {
            return Err(Error::InvalidBasepoint(format!(
                "top chain is not positive: {}",
                x.chain_string(&self.top)
            )));
        }
        match self.base.top_difference() {
            None => {
                if !x.augmentation(&self.top).is_one() {
                    return Err(Error::InvalidBasepoint(format!(
                        "0-cell has augmentation {}",
                        x.augmentation(&self.top)
                    )));
                }
            }
            Some(want) => {
                if x.boundary(&self.top) != want {
                    return Err(Error::InvalidBasepoint(format!(
                        "∂(top) is {}, expected {}",
                        x.chain_string(&x.boundary(&self.top)),
                        x.chain_string(&want)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Serializes as the full table: base pairs followed by the doubled top.
    pub fn to_value(&self, x: &Complex) -> Value {
        let mut entries = match self.base.to_value(x) {
            Value::Array(a) => a,
            _ => unreachable!(),
        };
        let t = x.chain_to_value(&self.top);
        entries.push(Value::Array(vec![t.clone(), t]));
        Value::Array(entries)
    }

    pub fn from_value(x: &Complex, v: &Value) -> Result<Self> {
        let entries = v
            .as_array()
            .ok_or_else(|| Error::Parse("cell must be an array of chain pairs".into()))?;
        if entries.is_empty() {
            return Err(Error::Parse("cell table cannot be empty".into()));
        }
        let base = BasePoint::from_value(x, &Value::Array(entries[..entries.len() - 1].to_vec()))?;
        let k = entries.len() - 1;
        let last = entries[k]
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Parse("bad top entry".into()))?;
        let neg = x.chain_from_value(k, &last[0])?;
        let pos = x.chain_from_value(k, &last[1])?;
        if neg != pos {
            return Err(Error::InvalidBasepoint(format!(
                "top entries differ: {} vs {}",
                x.chain_string(&neg),
                x.chain_string(&pos)
            )));
        }
        let cell = Cell { base, top: neg };
        cell.validate(x)?;
        Ok(cell)
    }
}

/// The atom table ⟨g⟩ of a generator: top chain the generator itself, lower
/// entries the iterated negative/positive boundary parts.
pub fn atom_table(x: &Complex, degree: usize, idx: usize) -> Cell {
    Cell {
        base: BasePoint::new(x.atom_boundaries(degree, idx)),
        top: Chain::unit(degree, idx),
    }
}

/// All basepoints of the given dimension with coefficients ≤ cap.
/// Dimension is given as `len`: the number of entries, so `len = 0` yields
/// only the empty basepoint and `len = d + 1` yields dimension-d basepoints.
pub fn enumerate_basepoints(x: &Complex, len: usize, cap: u32) -> Result<Vec<BasePoint>> {
    let mut current = vec![BasePoint::empty()];
    for k in 0..len {
        let mut next = Vec::new();
        for bp in &current {
            let sols = fillers(x, k, bp, cap)?;
            for u in &sols {
                for v in &sols {
                    let mut b = bp.clone();
                    b.push(u.clone(), v.clone());
                    next.push(b);
                }
            }
        }
        current = next;
    }
    current.sort();
    Ok(current)
}

/// Positive degree-k chains that can extend the basepoint by one entry.
fn fillers(x: &Complex, k: usize, base: &BasePoint, cap: u32) -> Result<Vec<Chain>> {
    match base.top_difference() {
        // degree 0: the positive ε=1 chains are exactly the objects
        None => Ok((0..x.generator_count(0)).map(|i| Chain::unit(0, i)).collect()),
        Some(d) => solve_positive_chains(x, k, &d, cap),
    }
}

/// All cells of dimension n with coefficients ≤ cap.
pub fn enumerate_cells(x: &Complex, n: usize, cap: u32) -> Result<Vec<Cell>> {
    let mut out = Vec::new();
    for base in enumerate_basepoints(x, n, cap)? {
        for top in fillers(x, n, &base, cap)? {
            out.push(Cell { base: base.clone(), top });
        }
    }
    out.sort();
    Ok(out)
}

/// Source object of a degree-1 generator: the unique object of ∂⁻.
pub fn edge_source(x: &Complex, g: usize) -> usize {
    x.boundary_of(1, g).neg_part().support().next().expect("unital atom")
}

/// Target object of a degree-1 generator.
pub fn edge_target(x: &Complex, g: usize) -> usize {
    x.boundary_of(1, g).pos_part().support().next().expect("unital atom")
}

/// Decomposes a positive 1-chain with ∂c = b − a into the composable
/// sequence of its generators, by greedy front extension from `a`.
///
/// In a strongly loop-free complex the greedy walk cannot strand: a stuck
/// state would leave a positive cycle behind.
pub fn atomic_path_decomposition(
    x: &Complex,
    c: &Chain,
    a: usize,
    b: usize,
) -> Result<Vec<usize>> {
    let want = &Chain::unit(0, b) - &Chain::unit(0, a);
    if x.boundary(c) != want {
        return Err(Error::Parse(format!(
            "∂c = {} but {} expected",
            x.chain_string(&x.boundary(c)),
            x.chain_string(&want)
        )));
    }
    let mut remaining = c.clone();
    let mut current = a;
    let mut out = Vec::new();
    while !remaining.is_zero() {
        let next = remaining.support().find(|&g| edge_source(x, g) == current);
        match next {
            Some(g) => {
                out.push(g);
                remaining.add_term(g, Coeff::from(-1));
                current = edge_target(x, g);
            }
            None => {
                return Err(Error::NonComposable {
                    at: x.generator_name(0, current).to_string(),
                })
            }
        }
    }
    debug_assert_eq!(current, b);
    Ok(out)
}
