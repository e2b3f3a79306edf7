//! Exact division and gcd in `R_d`.
//!
//! Both operations first strip the monomial content, which moves everything into the
//! ordinary polynomial ring `Z[x1, ..., td]` (a UFD whose units are `±1`). Gcds there
//! are computed with a recursive primitive PRS: the highest-indexed variable present is
//! the main variable and contents are gcds over the remaining ones.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentError, LaurentPoly, Monomial, RingSignature};

pub(super) fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if a.sig != b.sig || b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero(&a.sig));
    }
    let (a0, sa) = a.strip_monomial();
    let (b0, sb) = b.strip_monomial();
    let q0 = poly_div_exact(&a0, &b0)?;
    Some(q0.mul_monomial(&sb.div(&sa)))
}

/// Sparse division for polynomials with non-negative exponents.
fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (Some(amax), Some(bmax)) = (a.max_exponents(), b.max_exponents()) else {
        return if b.is_zero() { None } else { Some(a.clone()) };
    };
    if amax
        .exponents()
        .iter()
        .zip(bmax.exponents())
        .any(|(x, y)| y > x)
    {
        return None;
    }
    let (lm, lc) = b.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut r = a.clone();
    let mut q = LaurentPoly::zero(&a.sig);
    while let Some((m, c)) = r.leading_term() {
        let qm = m.div(&lm);
        if qm.exponents().iter().any(|&e| e < 0) {
            return None;
        }
        let (qc, rem) = c.div_rem(&lc);
        if !rem.is_zero() {
            return None;
        }
        for (bm, bc) in b.terms() {
            r.add_term(bm.mul(&qm), -(bc * &qc));
        }
        q.add_term(qm, qc);
    }
    Some(q)
}

/// Canonical gcd of a list; the gcd of the empty list is 0.
pub fn gcd(sig: &RingSignature, ps: &[LaurentPoly]) -> Result<LaurentPoly, LaurentError> {
    let mut acc = LaurentPoly::zero(sig);
    for p in ps {
        sig.check(p.signature())?;
        if p.is_zero() {
            continue;
        }
        acc = if acc.is_zero() {
            p.canonicalize()
        } else {
            gcd_canonical(&acc, p)
        };
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

pub fn gcd_pair(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    a.sig.check(&b.sig)?;
    Ok(gcd_canonical(a, b))
}

fn gcd_canonical(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (a0, _) = a.strip_monomial();
    let (b0, _) = b.strip_monomial();
    poly_gcd(&a0, &b0).canonicalize()
}

fn degree_in(p: &LaurentPoly, var: usize) -> i64 {
    p.terms()
        .map(|(m, _)| m.exponents()[var])
        .max()
        .unwrap_or(0)
}

/// Coefficients of `p` as a polynomial in `var`, keyed by degree.
fn coefficients_in(p: &LaurentPoly, var: usize) -> BTreeMap<i64, LaurentPoly> {
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let d = m.exponents()[var];
        let mut rest = m.clone();
        rest.exps_mut()[var] = 0;
        out.entry(d)
            .or_insert_with(|| LaurentPoly::zero(&p.sig))
            .add_term(rest, c.clone());
    }
    out
}

fn coefficient_at(p: &LaurentPoly, var: usize, deg: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero(&p.sig);
    for (m, c) in p.terms() {
        if m.exponents()[var] == deg {
            let mut rest = m.clone();
            rest.exps_mut()[var] = 0;
            out.add_term(rest, c.clone());
        }
    }
    out
}

fn positive_lead(p: LaurentPoly) -> LaurentPoly {
    match p.leading_term() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}

fn content_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(&p.sig);
    for (_, c) in coefficients_in(p, var) {
        acc = poly_gcd(&acc, &c);
        if acc.as_constant().is_some_and(|k| k.is_one()) {
            break;
        }
    }
    acc
}

fn primitive_part(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let c = content_in(p, var);
    positive_lead(poly_div_exact(p, &c).expect("content divides its polynomial"))
}

/// Pseudo-remainder of `f` by `g` in `var`, without the trailing `lc(g)^k` factor
/// (only its primitive part is ever used).
fn sparse_prem(f: &LaurentPoly, g: &LaurentPoly, var: usize) -> LaurentPoly {
    let n = degree_in(g, var);
    let lc_g = coefficient_at(g, var, n);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = degree_in(&r, var);
        if dr < n {
            break;
        }
        let lc_r = coefficient_at(&r, var, dr);
        let shift = Monomial::var(&r.sig, var, dr - n);
        r = &(&lc_g * &r) - &(&lc_r * &g.mul_monomial(&shift));
    }
    r
}

/// Gcd in the polynomial ring, with a positive leading coefficient.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return positive_lead(b.clone());
    }
    if b.is_zero() {
        return positive_lead(a.clone());
    }
    if let Some(k) = a.as_constant() {
        return LaurentPoly::constant(&a.sig, k.gcd(&b.integer_content()));
    }
    if let Some(k) = b.as_constant() {
        return LaurentPoly::constant(&a.sig, k.gcd(&a.integer_content()));
    }
    let mut vars = a.support_vars();
    vars.extend(b.support_vars());
    let main = *vars
        .iter()
        .max()
        .expect("non-constant polynomial has a variable");

    let (da, db) = (degree_in(a, main), degree_in(b, main));
    if da == 0 {
        return poly_gcd(a, &content_in(b, main));
    }
    if db == 0 {
        return poly_gcd(&content_in(a, main), b);
    }

    let ca = content_in(a, main);
    let cb = content_in(b, main);
    let content = poly_gcd(&ca, &cb);
    let mut f = poly_div_exact(a, &ca).expect("content divides");
    let mut g = poly_div_exact(b, &cb).expect("content divides");
    if da < db {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = sparse_prem(&f, &g, main);
        if r.is_zero() {
            break;
        }
        if degree_in(&r, main) == 0 {
            g = LaurentPoly::one(&a.sig);
            break;
        }
        f = g;
        g = primitive_part(&r, main);
    }
    positive_lead(&content * &positive_lead(g))
}
