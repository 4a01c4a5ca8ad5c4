//! The acceptance suite: thirteen exact combinatorial checks covering the
//! closed-form homotopy posets, algorithm cross-validation, truncation and
//! predicate tables, exactness, skeletal pushouts, and the obstruction
//! oracle, plus a global enumeration-soundness verdict.

use crate::cells::{enumerate_basepoints, BasePoint, DEFAULT_CAP};
use crate::chain::Chain;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::fiber::{collapse_to_point, les_exactness_check};
use crate::homotopy::{pi0, pi1_rewriting, pi_n};
use crate::mapping::{catalog, AdcMap};
use crate::poset::{poset_iso, Poset};
use crate::shapes;
use crate::strat::{
    brute_force_extensions, obstruction_poset, stratified_nerve,
    verify_skeletal_pushout, wedge_cofiber_profile, FunctorData,
};
use crate::truncation::{
    disk_truncation, enriched_iso, is_isomorphism, is_n_connected, is_n_equivalence,
    is_n_faithful, is_n_full, truncate1,
};

#[derive(Debug, Clone, serde::Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

const NERVE_CAP: u32 = 2;

fn cap() -> u32 {
    DEFAULT_CAP
}

fn corner_bits(x: &Complex, i: usize) -> Vec<u8> {
    x.generator_name(0, i)
        .chars()
        .filter_map(|c| match c {
            '0' => Some(0),
            '1' => Some(1),
            _ => None,
        })
        .collect()
}

fn c1() -> Result<(bool, String)> {
    for n in 0..=6usize {
        let p = pi0(&shapes::oriental(n), cap())?;
        if poset_iso(&p.poset, &Poset::chain(n)).is_none() {
            return Ok((false, format!("pi0(oriental({n})) is not the {n}-chain")));
        }
    }
    for n in 0..=4usize {
        let p = pi0(&shapes::cube(n), cap())?;
        let atoms: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        if poset_iso(&p.poset, &Poset::boolean_lattice(&atoms)).is_none() {
            return Ok((false, format!("pi0(cube({n})) is not the Boolean {n}-lattice")));
        }
    }
    Ok((true, "orientals n≤6 are chains; cubes n≤4 are Boolean lattices".into()))
}

fn c2() -> Result<(bool, String)> {
    for n in 0..=5usize {
        let x = shapes::oriental(n);
        for i in 0..=n {
            for j in 0..=n {
                let p = pi_n(&x, &BasePoint::objects(i, j), cap())?;
                let ok = if i < j {
                    let atoms: Vec<String> = (i + 1..j).map(|v| v.to_string()).collect();
                    poset_iso(&p.poset, &Poset::boolean_lattice(&atoms)).is_some()
                } else if i == j {
                    p.poset.len() == 1
                } else {
                    p.poset.is_empty()
                };
                if !ok {
                    return Ok((false, format!("pi1(oriental({n}),({i},{j})) mismatch")));
                }
            }
        }
    }
    Ok((true, "π₁ of orientals n≤5 matches Boolean lattices at every basepoint".into()))
}

fn c3() -> Result<(bool, String)> {
    let mut diagonal4 = 0;
    for n in 0..=4usize {
        let x = shapes::cube(n);
        let m = x.generator_count(0);
        for a in 0..m {
            for b in 0..m {
                let da = corner_bits(&x, a);
                let db = corner_bits(&x, b);
                let below = da.iter().zip(&db).all(|(u, v)| u <= v);
                let diff = da.iter().zip(&db).filter(|(u, v)| u < v).count();
                let p = pi_n(&x, &BasePoint::objects(a, b), cap())?;
                let ok = if below {
                    poset_iso(&p.poset, &Poset::weak_order(diff)).is_some()
                } else {
                    p.poset.is_empty()
                };
                if !ok {
                    return Ok((false, format!("pi1(cube({n}),({a},{b}))) mismatch")));
                }
                if n == 4 && below && diff == 4 {
                    diagonal4 = p.poset.len();
                }
            }
        }
    }
    if diagonal4 != 24 {
        return Ok((false, format!("diagonal of cube(4) has {diagonal4} elements, want 24")));
    }
    Ok((true, "π₁ of cubes n≤4 is the weak order at every corner pair; |S₄| = 24".into()))
}

fn c4() -> Result<(bool, String)> {
    let mut checked = 0usize;
    for n in 0..=5usize {
        let x = shapes::oriental(n);
        for i in 0..=n {
            for j in 0..=n {
                let p = pi_n(&x, &BasePoint::objects(i, j), cap())?;
                let r = pi1_rewriting(&x, i, j, cap())?;
                if poset_iso(&p.poset, &r).is_none() {
                    return Ok((false, format!("rewriting ≠ chains on oriental({n}),({i},{j})")));
                }
                checked += 1;
            }
        }
    }
    for n in 0..=4usize {
        let x = shapes::cube(n);
        let m = x.generator_count(0);
        for a in 0..m {
            for b in 0..m {
                let p = pi_n(&x, &BasePoint::objects(a, b), cap())?;
                let r = pi1_rewriting(&x, a, b, cap())?;
                if poset_iso(&p.poset, &r).is_none() {
                    return Ok((false, format!("rewriting ≠ chains on cube({n}),({a},{b})")));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("rewriting order agrees with chain feasibility on {checked} basepoints")))
}

fn c5() -> Result<(bool, String)> {
    for n in 0..=5usize {
        let a = Poset::weak_order(n);
        let b = Poset::weak_order_generated(n);
        if a.labels() != b.labels() {
            return Ok((false, format!("weak order label mismatch at n={n}")));
        }
        for i in 0..a.len() {
            for j in 0..a.len() {
                if a.leq(i, j) != b.leq(i, j) {
                    return Ok((false, format!("weak order relation mismatch at n={n}")));
                }
            }
        }
    }
    Ok((true, "inversion-containment and generated weak orders agree for n ≤ 5".into()))
}

fn shift_chain(c: &Chain) -> Chain {
    Chain::from_terms(c.degree() + 1, c.terms().map(|(g, v)| (g, v.clone())))
}

/// The basepoint of the suspension induced by a basepoint downstairs:
/// (⊥,⊤) followed by the degree-shifted pairs.
fn suspend_basepoint(s: &Complex, z: &BasePoint) -> BasePoint {
    let (bot, top) = s.endpoints().unwrap();
    let mut out = BasePoint::objects(bot, top);
    for (n, p) in z.pairs() {
        out.push(shift_chain(n), shift_chain(p));
    }
    out
}

fn c6() -> Result<(bool, String)> {
    for x in [shapes::oriental(2), shapes::cube(2)] {
        // m-fold suspensions for k ≤ 3: π_k(SᵐX) against π_{k−m}(X)
        for m in 1..=3usize {
            let mut s = x.clone();
            for _ in 0..m {
                s = shapes::suspension(&s);
            }
            for k in m..=3usize {
                let down_len = k - m;
                if down_len > x.dims() + 1 {
                    continue;
                }
                for z in enumerate_basepoints(&x, down_len, cap())? {
                    let mut up = z.clone();
                    let mut tower = Vec::new();
                    let mut base = x.clone();
                    for _ in 0..m {
                        base = shapes::suspension(&base);
                        tower.push(base.clone());
                    }
                    for stage in &tower {
                        up = suspend_basepoint(stage, &up);
                    }
                    let upper = pi_n(&s, &up, cap())?;
                    let lower = pi_n(&x, &z, cap())?;
                    if poset_iso(&upper.poset, &lower.poset).is_none() {
                        return Ok((
                            false,
                            format!("π_{k}(S^{m} {}) mismatch at a basepoint", x.name()),
                        ));
                    }
                }
            }
        }
    }
    // wedge: π₁ between the endpoint marks is the product of the π₀ of the
    // factors spanned by the segment
    let bases = [shapes::oriental(2), shapes::cube(2)];
    let factors = [shapes::suspension(&bases[0]), shapes::suspension(&bases[1])];
    let w = shapes::wedge(&factors).unwrap();
    let marks =
        [w.lookup("0:⊥").unwrap().1, w.lookup("0:⊤").unwrap().1, w.lookup("1:⊤").unwrap().1];
    for i in 0..3 {
        for j in i..3 {
            let p = pi_n(&w, &BasePoint::objects(marks[i], marks[j]), cap())?;
            let mut expected = Poset::chain(0);
            for base in bases.iter().take(j).skip(i) {
                expected = expected.product(&pi0(base, cap())?.poset);
            }
            if poset_iso(&p.poset, &expected).is_none() {
                return Ok((false, format!("wedge segment {i}..{j} mismatch")));
            }
        }
    }
    Ok((true, "suspension shifts π by one per stage (k ≤ 3); wedge π₁ is the product".into()))
}

fn c7() -> Result<(bool, String)> {
    // truncating the n-disk to level m: dimension stays n once m ≥ n−1
    // (the disk is already truncated) and otherwise rises to m+1
    let table: [[usize; 7]; 7] = [
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 2, 2, 2, 2, 2],
        [0, 1, 2, 3, 3, 3, 3],
        [0, 1, 2, 3, 4, 4, 4],
        [0, 1, 2, 3, 4, 5, 5],
        [0, 1, 2, 3, 4, 5, 6],
        [0, 1, 2, 3, 4, 5, 6],
    ];
    for m in 0..=6usize {
        for n in 0..=6usize {
            if disk_truncation(m, n) != table[m][n] {
                return Ok((false, format!("disk_truncation({m},{n}) ≠ table value")));
            }
        }
    }
    for n in 0..=3usize {
        let t = truncate1(&shapes::disk(n), cap())?;
        let expected = truncate1(&shapes::disk(disk_truncation(1, n)), cap())?;
        if !enriched_iso(&t, &expected) {
            return Ok((false, format!("truncate1(disk({n})) structural check failed")));
        }
    }
    Ok((true, "disk truncation dimensions match the 7×7 table; τ≤1 checks pass".into()))
}

type PredicateRow = (&'static str, [bool; 3], [bool; 3], [bool; 3]);

fn c8() -> Result<(bool, String)> {
    // hand-derived (full m=0..2, faithful n=0..2, connected n=0..2)
    let expected: Vec<PredicateRow> = vec![
        ("id(oriental2)", [true; 3], [true; 3], [true; 3]),
        ("id(cube2)", [true; 3], [true; 3], [true; 3]),
        ("id(disk1)", [true; 3], [true; 3], [true; 3]),
        ("boundary_inclusion", [true, false, true], [false, true, true], [false; 3]),
        ("disk_collapse", [true, false, true], [false, true, true], [false; 3]),
        ("face02", [false, false, true], [false, true, true], [false; 3]),
        ("face01", [false, true, true], [true, true, true], [false; 3]),
        ("vertex0", [false, true, true], [true, true, true], [false; 3]),
        ("arrow_iso", [true; 3], [true; 3], [true; 3]),
    ];
    let maps = catalog::predicate_catalog();
    for ((name, f), (ename, full, faithful, connected)) in maps.iter().zip(&expected) {
        assert_eq!(name, ename);
        for m in 0..3usize {
            if is_n_full(f, m, cap())? != full[m] {
                return Ok((false, format!("{name}: {m}-full verdict differs")));
            }
            if is_n_faithful(f, m, cap())? != faithful[m] {
                return Ok((false, format!("{name}: {m}-faithful verdict differs")));
            }
            if is_n_connected(f, m as i64, cap())? != connected[m] {
                return Ok((false, format!("{name}: {m}-connected verdict differs")));
            }
        }
    }
    Ok((true, "all 81 predicate verdicts match the hand-derived table".into()))
}

fn c9() -> Result<(bool, String)> {
    for (name, f) in catalog::predicate_catalog() {
        let iso = is_isomorphism(&f);
        for n in 0..=2usize {
            if is_n_equivalence(&f, n, cap())? != iso {
                return Ok((false, format!("{name}: {n}-equivalence ≠ isomorphism verdict")));
            }
        }
    }
    Ok((true, "n-equivalence holds exactly on the isomorphisms of the catalog".into()))
}

fn c10() -> Result<(bool, String)> {
    let checks: Vec<(&str, AdcMap, BasePoint)> = vec![
        ("identity", AdcMap::identity(&shapes::oriental(2)), BasePoint::objects(0, 2)),
        ("collapse", collapse_to_point(&shapes::oriental(2)), BasePoint::objects(0, 2)),
        ("face02", catalog::face02(), BasePoint::objects(0, 1)),
    ];
    for (name, f, z) in checks {
        let r = les_exactness_check(&f, &z, 0, cap())?;
        if !r.pass {
            return Ok((false, format!("exactness items fail at n=0 for {name}")));
        }
    }
    Ok((true, "exactness items (1)–(3) hold at n=0 on all three maps".into()))
}

fn c11() -> Result<(bool, String)> {
    for k in 0..=3usize {
        for x in [shapes::oriental(k), shapes::cube(k)] {
            let s = stratified_nerve(&x, 4, NERVE_CAP)?;
            for n in 0..=4usize {
                let r = verify_skeletal_pushout(&s, n);
                if !r.pass {
                    return Ok((false, format!("pushout fails for N({}) at n={n}", x.name())));
                }
            }
        }
    }
    let s = stratified_nerve(&shapes::oriental(2), 2, NERVE_CAP)?;
    let profile = wedge_cofiber_profile(&s, 2);
    if profile != (1, 1) {
        return Ok((
            false,
            format!(
                "pushout counts pass on all nerves, but wedge_cofiber_profile(N(oriental:2), 2) \
                 = {profile:?}, not (1,1): the enumeration also finds the two nondegenerate \
                 non-thin 2-simplices with vertex maps (0,0,2) and (0,2,2) that whisker the \
                 2-cell by a degenerate edge; they are genuine non-factoring maps, so the \
                 specified profile undercounts"
            ),
        ));
    }
    Ok((true, "skeletal pushouts verified for k ≤ 3, m ≤ 4; cofiber profile (1,1)".into()))
}

fn c12() -> Result<(bool, String)> {
    let x = shapes::oriental(1);
    let cases: Vec<(&str, Complex, Vec<(&str, &str)>)> = vec![
        ("triangle", shapes::oriental(2), vec![("0", "0"), ("1", "2")]),
        ("no-filler", shapes::boundary_disk(1), vec![("0", "⊥"), ("1", "⊤")]),
        ("disk", shapes::disk(1), vec![("0", "⊥"), ("1", "⊤")]),
    ];
    for (name, y, vertices) in cases {
        let nerve = stratified_nerve(&x, 1, NERVE_CAP)?;
        let f = FunctorData::on_objects(&nerve, &y, &vertices)?;
        let assembled = obstruction_poset(&x, &y, &f, 0, NERVE_CAP)?;
        let brute = brute_force_extensions(&x, &y, &f, 0, NERVE_CAP)?;
        if poset_iso(&assembled, &brute).is_none() {
            return Ok((false, format!("obstruction oracle disagrees on {name}")));
        }
    }
    Ok((true, "assembled obstruction posets match brute-force enumeration".into()))
}

/// Runs all thirteen criteria. Criterion 13 passes when no invocation in
/// criteria 1–12 reported an unsaturated enumeration.
pub fn run_all() -> Vec<CriterionOutcome> {
    let criteria: Vec<(usize, &'static str, fn() -> Result<(bool, String)>)> = vec![
        (1, "π₀ closed forms", c1),
        (2, "π₁ of orientals", c2),
        (3, "π₁ of cubes", c3),
        (4, "rewriting cross-validation", c4),
        (5, "weak order double definition", c5),
        (6, "suspension and wedge shifts", c6),
        (7, "disk truncation table", c7),
        (8, "connectivity predicate table", c8),
        (9, "Whitehead equivalences", c9),
        (10, "long exact sequence checks", c10),
        (11, "skeletal pushouts", c11),
        (12, "obstruction oracle", c12),
    ];
    let mut out = Vec::new();
    let mut unsaturated = Vec::new();
    for (id, title, f) in criteria {
        let outcome = match f() {
            Ok((pass, detail)) => CriterionOutcome { id, title, pass, detail },
            Err(e) => {
                if matches!(e, Error::UnsaturatedEnumeration { .. }) {
                    unsaturated.push(id);
                }
                CriterionOutcome { id, title, pass: false, detail: e.to_string() }
            }
        };
        out.push(outcome);
    }
    let pass = unsaturated.is_empty();
    out.push(CriterionOutcome {
        id: 13,
        title: "enumeration soundness",
        pass,
        detail: if pass {
            "every solve saturated (no growth on cap doubling)".into()
        } else {
            format!("unsaturated enumerations in criteria {unsaturated:?}")
        },
    });
    out
}
