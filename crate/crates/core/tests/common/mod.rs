//! Oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use covgroup::laurent::{LaurentPoly, Monomial, PolyMatrix, RingSignature};
use covgroup::opgroup::{
    wirtinger_relator, Crossing, CrossingSign, Occurrence, OperatorWord, OrbitPresentation,
};
use covgroup::symplectic::SymplecticForm;
use num_bigint::BigInt;
use rand::Rng;

pub const KISHINO: &str = include_str!("../../fixtures/kishino.pres");
pub const TREFOIL_MATRIX: &str = include_str!("../../fixtures/trefoil.matrix");
pub const SATELLITE: &str = include_str!("../../fixtures/satellite.poly");
pub const STOIMENOW: &str = include_str!("../../fixtures/stoimenow.poly");
pub const SYMMETRIC_TOY: &str = include_str!("../../fixtures/symmetric_toy.poly");
pub const DEHN_TWIST: &str = include_str!("../../fixtures/dehn_twist.sp");

pub const KISHINO_MATRIX: [[&str; 4]; 4] = [
    ["x - x*y - x*t", "t", "0", "0"],
    ["x - x*t - 1", "0", "0", "v*t"],
    ["0", "1 - t", "-1", "t"],
    ["0", "u*t", "-1", "v - v*t"],
];
pub const KISHINO_DELTA0: &str =
    "(x - u*v*x)*t^2 + (1 + v - x + u*v*x - v*x*y - u*v*x*y)*t + (-v + v*x*y)";
pub const TREFOIL_DELTA0: &str = "(x*y - y)*t^2 + (y - x)*t + (x - 1)";
pub const TREFOIL_TWISTED: &str = "(x*y^2 - y)*t^2 + (y - x*y)*t + (x*y - 1)";

pub fn sig(genus: usize, components: usize) -> RingSignature {
    RingSignature::new(genus, components).unwrap()
}

pub fn poly(sig: &RingSignature, s: &str) -> LaurentPoly {
    LaurentPoly::parse(sig, s).unwrap()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<LaurentPoly>], sig: &RingSignature) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(sig);
    }
    let mut acc = LaurentPoly::zero(sig);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor, sig);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

pub fn matrix_rows(m: &PolyMatrix) -> Vec<Vec<LaurentPoly>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Random Laurent polynomial with up to `max_terms` terms.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    sig: &RingSignature,
    max_terms: usize,
    exp: i64,
    coef: i64,
) -> LaurentPoly {
    let k = rng.gen_range(0..=max_terms);
    let terms: Vec<(Monomial, BigInt)> = (0..k)
        .map(|_| {
            let e = (0..sig.nvars())
                .map(|_| rng.gen_range(-exp..=exp))
                .collect();
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-coef..=coef);
            }
            (Monomial::from_exponents(e), BigInt::from(c))
        })
        .collect();
    LaurentPoly::from_terms(sig, terms)
}

/// Square matrix with entries of at most 3 terms, exponents in [-2, 2] and
/// coefficients in [-3, 3].
pub fn random_matrix<R: Rng>(rng: &mut R, sig: &RingSignature, n: usize) -> PolyMatrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| random_poly(rng, sig, 3, 2, 3)).collect())
        .collect();
    PolyMatrix::from_rows(sig, rows).unwrap()
}

pub fn random_operator<R: Rng>(rng: &mut R, genus: usize, max_len: usize) -> OperatorWord {
    let len = rng.gen_range(0..=max_len);
    OperatorWord::from_letters((0..len).map(|_| {
        (
            rng.gen_range(0..2 * genus),
            if rng.gen_bool(0.5) { 1 } else { -1 },
        )
    }))
}

/// A knot-shaped presentation: `n` arcs in a cycle, crossing `j` taking arc `j` to
/// arc `j+1` under a random over arc, all with random operators of length <= `max_op`.
pub fn random_wirtinger<R: Rng>(
    rng: &mut R,
    genus: usize,
    n: usize,
    max_op: usize,
) -> OrbitPresentation {
    let gens: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let relators = (0..n)
        .map(|j| {
            let cr = Crossing {
                over: Occurrence::new(rng.gen_range(0..n), random_operator(rng, genus, max_op)),
                under_in: Occurrence::new(j, random_operator(rng, genus, max_op)),
                under_out: Occurrence::new((j + 1) % n, random_operator(rng, genus, max_op)),
                sign: if rng.gen_bool(0.5) {
                    CrossingSign::Positive
                } else {
                    CrossingSign::Negative
                },
            };
            wirtinger_relator(&cr)
        })
        .collect();
    OrbitPresentation::new(sig(genus, 1), gens, vec![1; n], relators).unwrap()
}

/// Link-shaped variant: the arcs are split into `d` cycles, one per component.
pub fn random_wirtinger_link<R: Rng>(
    rng: &mut R,
    genus: usize,
    d: usize,
    arcs_per_component: usize,
    max_op: usize,
) -> OrbitPresentation {
    let n = d * arcs_per_component;
    let gens: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let comps: Vec<usize> = (0..n).map(|i| i / arcs_per_component + 1).collect();
    let relators = (0..n)
        .map(|j| {
            let c = j / arcs_per_component;
            let next = c * arcs_per_component + (j + 1) % arcs_per_component;
            let cr = Crossing {
                over: Occurrence::new(rng.gen_range(0..n), random_operator(rng, genus, max_op)),
                under_in: Occurrence::new(j, random_operator(rng, genus, max_op)),
                under_out: Occurrence::new(next, random_operator(rng, genus, max_op)),
                sign: if rng.gen_bool(0.5) {
                    CrossingSign::Positive
                } else {
                    CrossingSign::Negative
                },
            };
            wirtinger_relator(&cr)
        })
        .collect();
    OrbitPresentation::new(sig(genus, d), gens, comps, relators).unwrap()
}

fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, &e)| e)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det_i64(&minor)
        })
        .sum()
}

fn independent(vs: &[Vec<i64>]) -> Vec<Vec<i64>> {
    // greedy over rationals with i128 fraction-free elimination
    let mut ech: Vec<(usize, Vec<i128>)> = Vec::new();
    let mut out = Vec::new();
    for v in vs {
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, r) in &ech {
            if w[*p] != 0 {
                let (a, b) = (r[*p], w[*p]);
                for k in 0..w.len() {
                    w[k] = a * w[k] - b * r[k];
                }
            }
        }
        if let Some(p) = w.iter().position(|&x| x != 0) {
            ech.push((p, w));
            out.push(v.clone());
        }
    }
    out
}

/// Largest `k` such that some `k` vectors in `W` (small integer combinations of a
/// basis) span a subspace on which the form is nondegenerate.
pub fn brute_force_symplectic_dim(genus: usize, generators: &[Vec<i64>]) -> usize {
    let form = SymplecticForm::new(genus);
    let basis = independent(generators);
    let r = basis.len();
    let coeffs: &[i64] = if r <= 3 { &[-1, 0, 1] } else { &[0, 1] };
    let mut cands: Vec<Vec<i64>> = Vec::new();
    let total = coeffs.len().pow(r as u32);
    for idx in 0..total {
        let mut k = idx;
        let mut v = vec![0i64; 2 * genus];
        for b in &basis {
            let c = coeffs[k % coeffs.len()];
            k /= coeffs.len();
            for (x, y) in v.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        if v.iter().any(|&x| x != 0) {
            cands.push(v);
        }
    }
    let mut best = 0;
    for k in (2..=r).step_by(2) {
        let found = subsets(cands.len(), k).any(|s| {
            let gram: Vec<Vec<i64>> = s
                .iter()
                .map(|&a| {
                    s.iter()
                        .map(|&b| form.pairing(&cands[a], &cands[b]))
                        .collect()
                })
                .collect();
            det_i64(&gram) != 0
        });
        if found {
            best = k;
        }
    }
    best
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut c = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                cur = Some(c);
                break;
            }
        }
        Some(out)
    })
}
