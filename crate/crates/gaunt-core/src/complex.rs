//! Augmented directed chain complexes with a named atomic basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Coeff};
use crate::error::{Error, Result};

/// A finite free graded integer chain complex with named generators, an
/// implicit augmentation (every degree-0 generator augments to 1) and the
/// positivity structure generated by the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    name: String,
    /// Generator names per degree. Names are globally unique.
    generators: Vec<Vec<String>>,
    /// `differential[n][i]` is the boundary of generator `i` of degree `n`,
    /// a chain of degree `n - 1`. `differential[0]` is empty.
    differential: Vec<Vec<Chain>>,
    index: HashMap<String, (usize, usize)>,
    /// Distinguished bottom/top objects, when the construction provides them
    /// (suspensions and disks do). Required by `wedge`.
    endpoints: Option<(usize, usize)>,
}

/// Outcome of validating a complex.
#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    /// Hard failures: broken differential or non-unital atoms.
    pub errors: Vec<String>,
    /// Loop-freeness violations. Hard for homotopy computations, a warning
    /// for pure construction.
    pub loop_violations: Vec<String>,
}

impl Diagnostics {
    pub fn pass(&self) -> bool {
        self.errors.is_empty() && self.loop_violations.is_empty()
    }
}

impl Complex {
    pub fn new(name: impl Into<String>) -> Self {
        Complex {
            name: name.into(),
            generators: Vec::new(),
            differential: Vec::new(),
            index: HashMap::new(),
            endpoints: None,
        }
    }

    /// The empty complex (no generators in any degree).
    pub fn empty() -> Self {
        Complex::new("empty")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// Top degree carrying generators. 0 for the empty complex.
    pub fn dims(&self) -> usize {
        self.generators
            .iter()
            .rposition(|g| !g.is_empty())
            .unwrap_or(0)
    }

    pub fn degrees(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_count(&self, degree: usize) -> usize {
        self.generators.get(degree).map_or(0, |g| g.len())
    }

    pub fn generator_counts(&self) -> Vec<usize> {
        (0..=self.dims()).map(|n| self.generator_count(n)).collect()
    }

    pub fn generator_name(&self, degree: usize, idx: usize) -> &str {
        &self.generators[degree][idx]
    }

    pub fn lookup(&self, name: &str) -> Option<(usize, usize)> {
        self.index.get(name).copied()
    }

    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.endpoints
    }

    pub fn set_endpoints(&mut self, bottom: usize, top: usize) {
        self.endpoints = Some((bottom, top));
    }

    /// Adds a generator, returning its index within its degree.
    /// `boundary` must be `None` exactly in degree 0.
    pub fn add_generator(
        &mut self,
        degree: usize,
        name: impl Into<String>,
        boundary: Option<Chain>,
    ) -> Result<usize> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::Parse(format!("duplicate generator name {name:?}")));
        }
        match (&boundary, degree) {
            (None, 0) | (Some(_), 1..) => {}
            _ => {
                return Err(Error::Parse(format!(
                    "generator {name:?} of degree {degree} needs a boundary iff degree >= 1"
                )))
            }
        }
        if let Some(b) = &boundary {
            if b.degree() != degree - 1 {
                return Err(Error::Parse(format!(
                    "boundary of {name:?} has degree {} but {} expected",
                    b.degree(),
                    degree - 1
                )));
            }
        }
        while self.generators.len() <= degree {
            self.generators.push(Vec::new());
            self.differential.push(Vec::new());
        }
        let idx = self.generators[degree].len();
        self.generators[degree].push(name.clone());
        self.differential[degree].push(boundary.unwrap_or_else(|| Chain::zero(0)));
        self.index.insert(name, (degree, idx));
        Ok(idx)
    }

    /// Boundary of a single generator of degree >= 1.
    pub fn boundary_of(&self, degree: usize, idx: usize) -> &Chain {
        &self.differential[degree][idx]
    }

    /// Linear extension of the differential. Degree-0 chains map to zero.
    pub fn boundary(&self, chain: &Chain) -> Chain {
        let n = chain.degree();
        if n == 0 {
            return Chain::zero(0);
        }
        let mut out = Chain::zero(n - 1);
        for (g, c) in chain.terms() {
            for (h, d) in self.differential[n][g].terms() {
                out.add_term(h, c * d);
            }
        }
        out
    }

    /// Augmentation of a degree-0 chain.
    pub fn augmentation(&self, chain: &Chain) -> Coeff {
        debug_assert_eq!(chain.degree(), 0);
        chain.coeff_sum()
    }

    /// The atom table of a generator: the iterated negative/positive boundary
    /// parts `x_k^- , x_k^+` below the generator itself.
    ///
    /// Entry `k` of the result holds `(x_k^-, x_k^+)` for `k < degree`; the
    /// generator's own degree is not included.
    pub fn atom_boundaries(&self, degree: usize, idx: usize) -> Vec<(Chain, Chain)> {
        let mut out = vec![(Chain::zero(0), Chain::zero(0)); degree];
        let mut neg = Chain::unit(degree, idx);
        let mut pos = neg.clone();
        for k in (0..degree).rev() {
            let bneg = self.boundary(&neg);
            let bpos = self.boundary(&pos);
            neg = bneg.neg_part();
            pos = bpos.pos_part();
            out[k] = (neg.clone(), pos.clone());
        }
        out
    }

    /// Topological order of all generators under the loop-freeness relation,
    /// or the offending cycle. Edge `a -> b` whenever `a` lies in the support
    /// of the negative part of `∂b`, or `b` in the support of the positive
    /// part of `∂a`.
    pub fn loop_order(&self) -> std::result::Result<Vec<(usize, usize)>, Vec<(usize, usize)>> {
        let mut nodes: Vec<(usize, usize)> = Vec::new();
        let mut id: HashMap<(usize, usize), usize> = HashMap::new();
        for n in 0..self.generators.len() {
            for i in 0..self.generators[n].len() {
                id.insert((n, i), nodes.len());
                nodes.push((n, i));
            }
        }
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for n in 1..self.generators.len() {
            for i in 0..self.generators[n].len() {
                let b = &self.differential[n][i];
                let this = id[&(n, i)];
                for g in b.neg_part().support() {
                    // a -> b for a in supp(∂⁻ b)
                    succ[id[&(n - 1, g)]].push(this);
                }
                for g in b.pos_part().support() {
                    succ[this].push(id[&(n - 1, g)]);
                }
            }
        }
        // Kahn topological sort; on failure, extract a cycle by walking
        // successors within the residual graph.
        let mut indeg = vec![0usize; nodes.len()];
        for v in 0..nodes.len() {
            for &w in &succ[v] {
                indeg[w] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..nodes.len()).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        let mut seen = vec![false; nodes.len()];
        while let Some(v) = queue.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            order.push(nodes[v]);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if order.len() == nodes.len() {
            return Ok(order);
        }
        let start = (0..nodes.len()).find(|&v| !seen[v]).unwrap();
        let mut cycle = vec![start];
        let mut cur = start;
        loop {
            let next = *succ[cur].iter().find(|&&w| !seen[w]).unwrap();
            if let Some(pos) = cycle.iter().position(|&v| v == next) {
                cycle = cycle[pos..].to_vec();
                break;
            }
            cycle.push(next);
            cur = next;
        }
        Err(cycle.into_iter().map(|v| nodes[v]).collect())
    }

    pub fn validate(&self) -> Diagnostics {
        let mut errors = Vec::new();
        // ∂∘∂ = 0 and ε∘∂ = 0.
        for n in 1..self.generators.len() {
            for i in 0..self.generators[n].len() {
                let b = &self.differential[n][i];
                if n == 1 {
                    if !self.augmentation(b).is_zero() {
                        errors.push(format!(
                            "ε(∂{}) = {} ≠ 0",
                            self.generators[n][i],
                            self.augmentation(b)
                        ));
                    }
                } else if !self.boundary(b).is_zero() {
                    errors.push(format!("∂²({}) ≠ 0", self.generators[n][i]));
                }
            }
        }
        // Unital atomic basis.
        if errors.is_empty() {
            for n in 0..self.generators.len() {
                for i in 0..self.generators[n].len() {
                    let (neg, pos) = if n == 0 {
                        let u = Chain::unit(0, i);
                        (u.clone(), u)
                    } else {
                        let atoms = self.atom_boundaries(n, i);
                        atoms[0].clone()
                    };
                    if !self.augmentation(&neg).is_one() || !self.augmentation(&pos).is_one() {
                        errors.push(format!(
                            "atom of {} is not unital: ε(x₀⁻)={}, ε(x₀⁺)={}",
                            self.generators[n][i],
                            self.augmentation(&neg),
                            self.augmentation(&pos)
                        ));
                    }
                }
            }
        }
        let loop_violations = match self.loop_order() {
            Ok(_) => Vec::new(),
            Err(cycle) => {
                let names: Vec<&str> = cycle
                    .iter()
                    .map(|&(n, i)| self.generators[n][i].as_str())
                    .collect();
                vec![format!("loop-freeness cycle: {}", names.join(" → "))]
            }
        };
        Diagnostics { errors, loop_violations }
    }

    /// Errors unless the complex satisfies all Steiner hypotheses, including
    /// strong loop-freeness.
    pub fn require_valid(&self) -> Result<()> {
        let d = self.validate();
        if d.pass() {
            Ok(())
        } else {
            let mut violations = d.errors;
            violations.extend(d.loop_violations);
            Err(Error::InvalidComplex { name: self.name.clone(), violations })
        }
    }

    /// Renders a chain using generator names, e.g. `(01)+(12)` or `2·(e)`.
    pub fn chain_string(&self, chain: &Chain) -> String {
        if chain.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (g, c) in chain.terms() {
            let name = &self.generators[chain.degree()][g];
            if c.is_negative() {
                out.push('-');
            } else if !first {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                let _ = write!(out, "{a}·");
            }
            let _ = write!(out, "({name})");
            first = false;
        }
        out
    }
}

// ---------------------------------------------------------------------------
// JSON wire format:
//   {"name": ..., "generators": [[names per degree]],
//    "differential": {gen: [[coeff, gen], ...]}}
// Differential keys are sorted; round-trips are byte-stable.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ComplexDto {
    name: String,
    generators: Vec<Vec<String>>,
    differential: BTreeMap<String, Vec<(serde_json::Number, String)>>,
}

fn number_to_coeff(n: &serde_json::Number) -> Result<Coeff> {
    n.as_str()
        .parse::<Coeff>()
        .map_err(|_| Error::Parse(format!("bad integer coefficient {n}")))
}

fn coeff_to_number(c: &Coeff) -> serde_json::Number {
    // arbitrary_precision keeps the digits verbatim
    serde_json::Number::from_string_unchecked(c.to_string())
}

impl Serialize for Complex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut differential = BTreeMap::new();
        for n in 1..self.generators.len() {
            for (i, name) in self.generators[n].iter().enumerate() {
                let b = &self.differential[n][i];
                let terms: Vec<(serde_json::Number, String)> = b
                    .terms()
                    .map(|(g, c)| (coeff_to_number(c), self.generators[n - 1][g].clone()))
                    .collect();
                differential.insert(name.clone(), terms);
            }
        }
        ComplexDto {
            name: self.name.clone(),
            generators: self.generators.clone(),
            differential,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Complex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dto = ComplexDto::deserialize(deserializer)?;
        Complex::from_dto(dto).map_err(serde::de::Error::custom)
    }
}

impl Complex {
    fn from_dto(dto: ComplexDto) -> Result<Self> {
        let mut out = Complex::new(dto.name);
        // first pass: indices
        let mut index: HashMap<&str, (usize, usize)> = HashMap::new();
        for (n, names) in dto.generators.iter().enumerate() {
            for (i, name) in names.iter().enumerate() {
                if index.insert(name, (n, i)).is_some() {
                    return Err(Error::Parse(format!("duplicate generator name {name:?}")));
                }
            }
        }
        for (n, names) in dto.generators.iter().enumerate() {
            for name in names {
                let boundary = if n == 0 {
                    None
                } else {
                    let terms = dto.differential.get(name).cloned().unwrap_or_default();
                    let mut b = Chain::zero(n - 1);
                    for (coeff, target) in &terms {
                        let &(tn, ti) = index
                            .get(target.as_str())
                            .ok_or_else(|| Error::Parse(format!("unknown generator {target:?} in ∂{name}")))?;
                        if tn != n - 1 {
                            return Err(Error::Parse(format!(
                                "∂{name} hits {target:?} of degree {tn}, expected {}",
                                n - 1
                            )));
                        }
                        b.add_term(ti, number_to_coeff(coeff)?);
                    }
                    Some(b)
                };
                out.add_generator(n, name.clone(), boundary)?;
            }
        }
        Ok(out)
    }

    /// Renders a chain as wire-format terms `[[coeff, name], ...]`.
    pub fn chain_to_value(&self, c: &Chain) -> serde_json::Value {
        serde_json::Value::Array(
            c.terms()
                .map(|(g, coeff)| {
                    serde_json::Value::Array(vec![
                        serde_json::Value::Number(coeff_to_number(coeff)),
                        serde_json::Value::String(self.generators[c.degree()][g].clone()),
                    ])
                })
                .collect(),
        )
    }

    /// Parses wire-format terms back into a chain of the given degree.
    pub fn chain_from_value(&self, degree: usize, v: &serde_json::Value) -> Result<Chain> {
        let terms = v
            .as_array()
            .ok_or_else(|| Error::Parse("chain must be an array of [coeff, name] pairs".into()))?;
        let mut c = Chain::zero(degree);
        for t in terms {
            let pair = t
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse(format!("bad chain term {t}")))?;
            let num = pair[0]
                .as_number()
                .ok_or_else(|| Error::Parse(format!("bad coefficient {}", pair[0])))?;
            let name = pair[1]
                .as_str()
                .ok_or_else(|| Error::Parse(format!("bad generator name {}", pair[1])))?;
            let (n, i) = self
                .lookup(name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
            if n != degree {
                return Err(Error::Parse(format!(
                    "generator {name:?} has degree {n}, expected {degree}"
                )));
            }
            c.add_term(i, number_to_coeff(num)?);
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
