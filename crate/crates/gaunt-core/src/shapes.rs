//! Standard complexes: orientals, disks, cubes, and the constructions that
//! produce them (suspension, wedge, Gray tensor, truncation, duals).

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::chain::Chain;
use crate::complex::Complex;
use crate::error::Result;

/// The terminal complex: one generator in degree 0.
pub fn point() -> Complex {
    let mut x = Complex::new("point");
    x.add_generator(0, "*", None).unwrap();
    x.set_endpoints(0, 0);
    x
}

pub(crate) fn subset_name(subset: &[usize], n: usize) -> String {
    if n <= 9 {
        subset.iter().map(|v| v.to_string()).collect()
    } else {
        subset.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// The oriental: generators in degree k are the strictly increasing
/// (k+1)-element subsequences of 0..=n, with the alternating face sum as
/// differential.
pub fn oriental(n: usize) -> Complex {
    let mut x = Complex::new(format!("oriental:{n}"));
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for k in 0..=n {
        for subset in increasing_subsets(n, k + 1) {
            let boundary = if k == 0 {
                None
            } else {
                let mut b = Chain::zero(k - 1);
                for (i, _) in subset.iter().enumerate() {
                    let mut face = subset.clone();
                    face.remove(i);
                    let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                    b.add_term(index[&face], sign);
                }
                Some(b)
            };
            let idx = x.add_generator(k, subset_name(&subset, n), boundary).unwrap();
            index.insert(subset, idx);
        }
    }
    x.set_endpoints(0, n);
    x
}

pub(crate) fn increasing_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(v + 1, n, size, current, out);
            current.pop();
        }
    }
    rec(0, n, size, &mut current, &mut out);
    out
}

/// Categorical suspension. Two fresh objects ⊥ and ⊤; every generator of `x`
/// moves up one degree (renamed with an `S` prefix); former objects get
/// boundary ⊤ − ⊥.
pub fn suspension(x: &Complex) -> Complex {
    let mut out = Complex::new(format!("S({})", x.name()));
    let bot = out.add_generator(0, "⊥", None).unwrap();
    let top = out.add_generator(0, "⊤", None).unwrap();
    for k in 0..=x.dims() {
        for i in 0..x.generator_count(k) {
            let name = format!("S{}", x.generator_name(k, i));
            let boundary = if k == 0 {
                Chain::from_terms(0, [(top, BigInt::from(1)), (bot, BigInt::from(-1))])
            } else {
                // indices per degree are preserved by the shift
                x.boundary_of(k, i).clone_shifted(k)
            };
            out.add_generator(k + 1, name, Some(boundary)).unwrap();
        }
    }
    out.set_endpoints(bot, top);
    out
}

impl Chain {
    /// Same coefficients read in a different degree.
    fn clone_shifted(&self, new_degree: usize) -> Chain {
        Chain::from_terms(new_degree, self.terms().map(|(g, c)| (g, c.clone())))
    }
}

/// The n-disk: the n-fold suspension of the point.
pub fn disk(n: usize) -> Complex {
    let mut x = point();
    for _ in 0..n {
        x = suspension(&x);
    }
    x.set_name(format!("disk:{n}"));
    x
}

/// The disk boundary: the n-fold suspension of the empty complex.
pub fn boundary_disk(n: usize) -> Complex {
    let mut x = Complex::empty();
    for _ in 0..n {
        x = suspension(&x);
    }
    x.set_name(format!("boundary:{n}"));
    x
}

/// Glues the factors end to end, identifying the top object of each factor
/// with the bottom object of the next. Every factor must carry endpoint
/// markers and at least one factor is required.
pub fn wedge(factors: &[Complex]) -> Result<Complex> {
    use crate::error::Error;
    if factors.is_empty() {
        return Err(Error::Parse("wedge requires at least one factor".into()));
    }
    for f in factors {
        if f.endpoints().is_none() {
            return Err(Error::Parse(format!(
                "wedge factor {} lacks endpoint markers",
                f.name()
            )));
        }
    }
    let mut out = Complex::new(format!(
        "wedge({})",
        factors.iter().map(|f| f.name()).collect::<Vec<_>>().join(",")
    ));
    // map[(factor, degree, idx)] -> new index within degree
    let mut map: HashMap<(usize, usize, usize), usize> = HashMap::new();
    // degree 0 first so gluing identifications are known before boundaries
    let mut prev_top_new = None;
    for (f, x) in factors.iter().enumerate() {
        let (bot, top) = x.endpoints().unwrap();
        for i in 0..x.generator_count(0) {
            if f > 0 && i == bot {
                map.insert((f, 0, i), prev_top_new.unwrap());
                continue;
            }
            let idx = out
                .add_generator(0, format!("{f}:{}", x.generator_name(0, i)), None)?;
            map.insert((f, 0, i), idx);
        }
        prev_top_new = Some(map[&(f, 0, top)]);
    }
    for k in 1..=factors.iter().map(|x| x.dims()).max().unwrap_or(0) {
        for (f, x) in factors.iter().enumerate() {
            for i in 0..x.generator_count(k) {
                let b = x.boundary_of(k, i);
                let boundary = Chain::from_terms(
                    k - 1,
                    b.terms().map(|(g, c)| (map[&(f, k - 1, g)], c.clone())),
                );
                let idx =
                    out.add_generator(k, format!("{f}:{}", x.generator_name(k, i)), Some(boundary))?;
                map.insert((f, k, i), idx);
            }
        }
    }
    let first_bot = map[&(0, 0, factors[0].endpoints().unwrap().0)];
    let last = factors.len() - 1;
    let last_top = map[&(last, 0, factors[last].endpoints().unwrap().1)];
    out.set_endpoints(first_bot, last_top);
    Ok(out)
}

/// Gray tensor product. Generators in degree n are pairs x⊗y with
/// deg x + deg y = n and ∂(x⊗y) = ∂x⊗y + (−1)^{deg x} x⊗∂y.
pub fn gray_tensor(x: &Complex, y: &Complex) -> Result<Complex> {
    x.require_valid()?;
    y.require_valid()?;
    let mut out = Complex::new(format!("{}⊗{}", x.name(), y.name()));
    let mut index: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    let top = x.dims() + y.dims();
    for n in 0..=top {
        for p in 0..=n.min(x.dims()) {
            let q = n - p;
            for i in 0..x.generator_count(p) {
                for j in 0..y.generator_count(q) {
                    let name = format!("{}⊗{}", x.generator_name(p, i), y.generator_name(q, j));
                    let boundary = if n == 0 {
                        None
                    } else {
                        let mut b = Chain::zero(n - 1);
                        if p >= 1 {
                            for (g, c) in x.boundary_of(p, i).terms() {
                                b.add_term(index[&(p - 1, g, q, j)], c.clone());
                            }
                        }
                        if q >= 1 {
                            let sign = if p % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                            for (g, c) in y.boundary_of(q, j).terms() {
                                b.add_term(index[&(p, i, q - 1, g)], c * &sign);
                            }
                        }
                        Some(b)
                    };
                    let idx = out.add_generator(n, name, boundary)?;
                    index.insert((p, i, q, j), idx);
                }
            }
        }
    }
    if let (Some((xb, xt)), Some((yb, yt))) = (x.endpoints(), y.endpoints()) {
        out.set_endpoints(index[&(0, xb, 0, yb)], index[&(0, xt, 0, yt)]);
    }
    Ok(out)
}

/// The n-cube: the n-fold Gray tensor power of the arrow.
pub fn cube(n: usize) -> Complex {
    let mut x = point();
    for _ in 0..n {
        x = gray_tensor(&oriental(1), &x).expect("cube factors validate");
    }
    x.set_name(format!("cube:{n}"));
    x
}

/// Discards all generators of degree > n.
pub fn core_truncation(x: &Complex, n: usize) -> Complex {
    let mut out = Complex::new(format!("core({},{n})", x.name()));
    for k in 0..=n.min(x.dims()) {
        for i in 0..x.generator_count(k) {
            let boundary = (k > 0).then(|| x.boundary_of(k, i).clone());
            out.add_generator(k, x.generator_name(k, i).to_string(), boundary)
                .unwrap();
        }
    }
    if let Some((b, t)) = x.endpoints() {
        out.set_endpoints(b, t);
    }
    out
}

/// Reverses the odd-dimensional cells: multiplies ∂ on degree n by (−1)ⁿ.
pub fn dual_op(x: &Complex) -> Complex {
    dual(x, |n| n % 2 == 1, "op")
}

/// Reverses the even-positive-dimensional cells: multiplies ∂ on degree n by
/// (−1)^{n+1}.
pub fn dual_co(x: &Complex) -> Complex {
    dual(x, |n| n % 2 == 0, "co")
}

fn dual(x: &Complex, negate: impl Fn(usize) -> bool, tag: &str) -> Complex {
    let base = x.name().strip_suffix(&format!("^{tag}")).map(str::to_string);
    let mut out = Complex::new(base.unwrap_or_else(|| format!("{}^{tag}", x.name())));
    for k in 0..=x.dims() {
        for i in 0..x.generator_count(k) {
            let boundary = (k > 0).then(|| {
                let b = x.boundary_of(k, i);
                if negate(k) {
                    -b
                } else {
                    b.clone()
                }
            });
            out.add_generator(k, x.generator_name(k, i).to_string(), boundary)
                .unwrap();
        }
    }
    if let Some((b, t)) = x.endpoints() {
        // op reverses 1-cells, so the endpoint roles swap
        match tag {
            "op" => out.set_endpoints(t, b),
            _ => out.set_endpoints(b, t),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn disk_generator_counts() {
        assert_eq!(disk(0).generator_counts(), vec![1]);
        assert_eq!(disk(2).generator_counts(), vec![2, 2, 1]);
        assert_eq!(boundary_disk(1).generator_counts(), vec![2]);
    }

    #[test]
    fn oriental_counts_and_arrow_boundary() {
        assert_eq!(oriental(2).generator_counts(), vec![3, 3, 1]);
        assert_eq!(oriental(3).generator_counts(), vec![4, 6, 4, 1]);
        let o1 = oriental(1);
        let b = o1.boundary_of(1, 0);
        assert_eq!(o1.chain_string(b), "-(0)+(1)");
    }

    #[test]
    fn standard_shapes_validate() {
        for n in 0..=6 {
            assert!(oriental(n).validate().pass(), "oriental({n})");
            assert!(disk(n).validate().pass(), "disk({n})");
            assert!(boundary_disk(n).validate().pass(), "boundary_disk({n})");
        }
        for n in 0..=6 {
            assert!(cube(n).validate().pass(), "cube({n})");
        }
    }

    #[test]
    fn cube_counts_are_binomial_times_power() {
        for n in 0..=5 {
            let c = cube(n);
            for k in 0..=n {
                assert_eq!(
                    c.generator_count(k),
                    binomial(n, k) * (1 << (n - k)),
                    "cube({n}) degree {k}"
                );
            }
        }
    }

    #[test]
    fn tensor_of_arrows_has_square_counts_and_signs() {
        let sq = gray_tensor(&oriental(1), &oriental(1)).unwrap();
        assert_eq!(sq.generator_counts(), vec![4, 4, 1]);
        // ∂(01⊗01) = (1⊗01 + 01⊗0) − (0⊗01 + 01⊗1)
        let top = sq.boundary_of(2, 0);
        let pos = sq.chain_string(&top.pos_part());
        let neg = sq.chain_string(&top.neg_part());
        assert_eq!(pos, "(1⊗01)+(01⊗0)");
        assert_eq!(neg, "(0⊗01)+(01⊗1)");
    }

    #[test]
    fn suspension_shifts_counts() {
        let s = suspension(&disk(1));
        assert_eq!(s.generator_counts(), vec![2, 2, 1]);
        let s0 = suspension(&Complex::empty());
        assert_eq!(s0.generator_counts(), boundary_disk(1).generator_counts());
    }

    #[test]
    fn wedge_of_two_suspensions_has_three_objects() {
        let w = wedge(&[suspension(&point()), suspension(&point())]).unwrap();
        assert_eq!(w.generator_count(0), 3);
        assert!(w.validate().pass());
    }

    #[test]
    fn wedge_rejects_missing_endpoints() {
        let mut no_marks = Complex::new("x");
        no_marks.add_generator(0, "a", None).unwrap();
        assert!(wedge(&[no_marks]).is_err());
        assert!(wedge(&[]).is_err());
    }

    #[test]
    fn core_drops_high_degrees() {
        assert_eq!(core_truncation(&oriental(3), 1).generator_counts(), vec![4, 6]);
        assert_eq!(core_truncation(&cube(2), 0).generator_counts(), vec![4]);
        let x = oriental(2);
        assert_eq!(core_truncation(&x, 5).generator_counts(), x.generator_counts());
    }

    #[test]
    fn duals_are_involutions() {
        for x in [oriental(3), cube(2), disk(3)] {
            assert_eq!(dual_op(&dual_op(&x)).generator_counts(), x.generator_counts());
            for k in 1..=x.dims() {
                for i in 0..x.generator_count(k) {
                    assert_eq!(dual_op(&dual_op(&x)).boundary_of(k, i), x.boundary_of(k, i));
                    assert_eq!(dual_co(&dual_co(&x)).boundary_of(k, i), x.boundary_of(k, i));
                }
            }
            assert!(dual_op(&x).validate().pass());
            assert!(dual_co(&x).validate().pass());
        }
    }

    #[test]
    fn dual_co_fixes_the_arrow() {
        let x = oriental(1);
        let y = dual_co(&x);
        assert_eq!(x.boundary_of(1, 0), y.boundary_of(1, 0));
    }
}
