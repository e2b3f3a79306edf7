//! Exact arithmetic in the Laurent ring `Z[x1^±, y1^±, ..., xg^±, yg^±][t1^±, ..., td^±]`.
//!
//! Variables are indexed `0..2g` for the surface part (`x_i` at `2(i-1)`, `y_i` at
//! `2(i-1)+1`) followed by `t_1..t_d` at `2g..2g+d`. Units of the ring are exactly the
//! signed monomials, which is what makes [`LaurentPoly::canonicalize`] well defined.

mod gcd;
mod matrix;
mod text;

pub use gcd::{gcd, gcd_pair};
pub(crate) use matrix::combinations;
pub use matrix::PolyMatrix;
pub use text::VarNames;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(RingSignature, RingSignature),
    #[error("invalid ring signature: genus {genus}, components {components}")]
    InvalidSignature { genus: usize, components: usize },
    #[error("image of {var} is not a unit: {image}")]
    NotInvertible { var: String, image: String },
    #[error("component index {index} out of range 1..={components}")]
    ComponentOutOfRange { index: usize, components: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("malformed matrix file, line {line}: {msg}")]
    MatrixFile { line: usize, msg: String },
    #[error("malformed polynomial file, line {line}: {msg}")]
    PolyFile { line: usize, msg: String },
}

/// Shape of the ring `R_d`: surface genus `g` and number of link components `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSignature {
    genus: usize,
    components: usize,
}

impl RingSignature {
    pub fn new(genus: usize, components: usize) -> Result<Self, LaurentError> {
        if genus == 0 || components == 0 {
            return Err(LaurentError::InvalidSignature { genus, components });
        }
        Ok(Self { genus, components })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Number of surface variables, `2g`.
    pub fn gamma_vars(&self) -> usize {
        2 * self.genus
    }

    pub fn nvars(&self) -> usize {
        2 * self.genus + self.components
    }

    /// Variable index of `t_j` for 1-based `j`.
    pub fn t_var(&self, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.components);
        2 * self.genus + j - 1
    }

    pub fn check(&self, other: &RingSignature) -> Result<(), LaurentError> {
        if self == other {
            Ok(())
        } else {
            Err(LaurentError::SignatureMismatch(*self, *other))
        }
    }
}

impl fmt::Display for RingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, d={})", self.genus, self.components)
    }
}

/// Exponent vector of a Laurent monomial; surface exponents first, then `t` exponents.
///
/// Ordering is graded: total degree first, ties broken lexicographically with
/// `t_d` the most significant variable and `x_1` the least.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn one(sig: &RingSignature) -> Self {
        Monomial(vec![0; sig.nvars()])
    }

    pub fn from_exponents(exps: Vec<i64>) -> Self {
        Monomial(exps)
    }

    pub fn from_parts(gamma_exp: &[i64], t_exp: &[i64]) -> Self {
        let mut v = Vec::with_capacity(gamma_exp.len() + t_exp.len());
        v.extend_from_slice(gamma_exp);
        v.extend_from_slice(t_exp);
        Monomial(v)
    }

    /// Monomial `var^exp`.
    pub fn var(sig: &RingSignature, var: usize, exp: i64) -> Self {
        let mut m = Self::one(sig);
        m.0[var] = exp;
        m
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn gamma_exp(&self, sig: &RingSignature) -> &[i64] {
        &self.0[..sig.gamma_vars()]
    }

    pub fn t_exp(&self, sig: &RingSignature) -> &[i64] {
        &self.0[sig.gamma_vars()..]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| -a).collect())
    }

    pub fn pow(&self, e: i64) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    fn exps_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A unit of `R_d`: a sign times a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub negative: bool,
    pub monomial: Monomial,
}

impl Unit {
    pub fn to_poly(&self, sig: &RingSignature) -> LaurentPoly {
        let c = if self.negative {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        LaurentPoly::term(sig, self.monomial.clone(), c)
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.monomial.is_one()
    }
}

/// Element of `R_d` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    sig: RingSignature,
    terms: BTreeMap<Monomial, BigInt>,
}

#[allow(clippy::len_without_is_empty)] // `is_zero` is the emptiness test
impl LaurentPoly {
    pub fn zero(sig: &RingSignature) -> Self {
        LaurentPoly {
            sig: *sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: &RingSignature) -> Self {
        Self::constant(sig, BigInt::one())
    }

    pub fn constant(sig: &RingSignature, c: impl Into<BigInt>) -> Self {
        Self::term(sig, Monomial::one(sig), c)
    }

    pub fn term(sig: &RingSignature, m: Monomial, c: impl Into<BigInt>) -> Self {
        debug_assert_eq!(m.0.len(), sig.nvars());
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { sig: *sig, terms }
    }

    /// The variable with index `var` raised to `exp`.
    pub fn var(sig: &RingSignature, var: usize, exp: i64) -> Self {
        Self::term(sig, Monomial::var(sig, var, exp), 1)
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I, C>(sig: &RingSignature, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(sig);
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn signature(&self) -> &RingSignature {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Greatest term in the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// `Some(unit)` if this polynomial is `±monomial`.
    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(Unit {
                negative: c.is_negative(),
                monomial: m.clone(),
            })
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.sig.check(&other.sig)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.sig.check(&other.sig)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c);
        }
        Ok(r)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.sig.check(&other.sig)?;
        let mut r = LaurentPoly::zero(&self.sig);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(r)
    }

    /// Multiplies by `c * m`.
    pub fn scale(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.sig);
        }
        LaurentPoly {
            sig: self.sig,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn mul_unit(&self, u: &Unit) -> LaurentPoly {
        let p = self.mul_monomial(&u.monomial);
        if u.negative {
            -p
        } else {
            p
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(&self.sig);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Per-variable minimum exponent over all terms; `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, m| {
            for (a, b) in acc.exps_mut().iter_mut().zip(&m.0) {
                *a = (*a).min(*b);
            }
            acc
        }))
    }

    pub fn max_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, m| {
            for (a, b) in acc.exps_mut().iter_mut().zip(&m.0) {
                *a = (*a).max(*b);
            }
            acc
        }))
    }

    /// Shifts by a monomial so that every variable's minimum exponent is zero.
    /// Returns the shifted polynomial and the monomial that was multiplied in.
    pub fn strip_monomial(&self) -> (LaurentPoly, Monomial) {
        match self.min_exponents() {
            None => (self.clone(), Monomial::one(&self.sig)),
            Some(min) => {
                let shift = min.inverse();
                (self.mul_monomial(&shift), shift)
            }
        }
    }

    /// The associate `u*p` with all minimum exponents zero and a positive leading
    /// coefficient. Two polynomials differ by a unit iff their canonical forms agree.
    pub fn canonicalize(&self) -> LaurentPoly {
        let (p, _) = self.strip_monomial();
        match p.leading_term() {
            Some((_, c)) if c.is_negative() => -p,
            _ => p,
        }
    }

    /// The unit `u` with `u * self == self.canonicalize()`.
    pub fn canonical_unit(&self) -> Unit {
        let (p, shift) = self.strip_monomial();
        let negative = p.leading_term().is_some_and(|(_, c)| c.is_negative());
        Unit {
            negative,
            monomial: shift,
        }
    }

    /// Positive gcd of the integer coefficients.
    pub fn integer_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides every coefficient by `c`; `None` unless exact.
    pub fn div_integer(&self, c: &BigInt) -> Option<LaurentPoly> {
        if c.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(LaurentPoly {
            sig: self.sig,
            terms,
        })
    }

    /// Exact quotient `self / divisor` in `R_d`, or `None` if the divisor does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        gcd::div_exact(self, divisor)
    }

    pub fn divides(&self, other: &LaurentPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    /// Applies the ring homomorphism described by `subst`.
    pub fn specialize(&self, subst: &Substitution) -> Result<LaurentPoly, LaurentError> {
        self.sig.check(&subst.sig)?;
        let mut r = LaurentPoly::zero(&self.sig);
        for (m, c) in &self.terms {
            let mut out = Monomial::one(&self.sig);
            let mut negative = false;
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &subst.images[var] {
                    None => out.0[var] += e,
                    Some(u) => {
                        if u.negative && e.rem_euclid(2) == 1 {
                            negative = !negative;
                        }
                        out = out.mul(&u.monomial.pow(e));
                    }
                }
            }
            r.add_term(out, if negative { -c } else { c.clone() });
        }
        Ok(r)
    }

    /// Applies `v -> M v` to every surface exponent vector; `t` exponents and
    /// coefficients are untouched. `matrix` is row-major `2g x 2g`.
    pub fn map_gamma(&self, matrix: &[i64]) -> LaurentPoly {
        let n = self.sig.gamma_vars();
        debug_assert_eq!(matrix.len(), n * n);
        let mut r = LaurentPoly::zero(&self.sig);
        for (m, c) in &self.terms {
            let mut out = m.clone();
            for i in 0..n {
                out.0[i] = (0..n).map(|j| matrix[i * n + j] * m.0[j]).sum();
            }
            r.add_term(out, c.clone());
        }
        r
    }

    /// Variables with a nonzero exponent in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.sig.nvars()];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_string_with(&self, names: &VarNames) -> String {
        text::format_poly(self, names)
    }

    /// Parses the polynomial text syntax (`(x*y - y)*t^2 + ...`) in the given ring.
    pub fn parse(sig: &RingSignature, s: &str) -> Result<LaurentPoly, LaurentError> {
        text::parse_poly(sig, s)
    }

    /// Polynomial file: a `poly <genus> <components>` header, then the polynomial text,
    /// which may span several lines. `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<(RingSignature, LaurentPoly), LaurentError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(LaurentError::PolyFile {
            line: 1,
            msg: "empty polynomial file".into(),
        })?;
        let bad_header = || LaurentError::PolyFile {
            line: hline,
            msg: "expected header 'poly <genus> <components>'".into(),
        };
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "poly" {
            return Err(bad_header());
        }
        let genus = fields[1].parse::<usize>().map_err(|_| bad_header())?;
        let components = fields[2].parse::<usize>().map_err(|_| bad_header())?;
        let sig = RingSignature::new(genus, components)?;
        let body: Vec<(usize, &str)> = lines.collect();
        if body.is_empty() {
            return Err(LaurentError::PolyFile {
                line: hline,
                msg: "missing polynomial".into(),
            });
        }
        let joined = body.iter().map(|(_, l)| *l).collect::<Vec<_>>().join(" ");
        let p = LaurentPoly::parse(&sig, &joined).map_err(|e| LaurentError::PolyFile {
            line: body[0].0,
            msg: e.to_string(),
        })?;
        Ok((sig, p))
    }

    pub fn to_file_string(&self, names: &VarNames) -> String {
        format!(
            "poly {} {}\n{}\n",
            self.sig.genus(),
            self.sig.components(),
            self.to_string_with(names)
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly(self, &VarNames::canonical(&self.sig)))
    }
}

/// Partial assignment of variables to units, defining a substitution homomorphism
/// `R_d -> R_d`. Unassigned variables map to themselves.
#[derive(Debug, Clone)]
pub struct Substitution {
    sig: RingSignature,
    images: Vec<Option<Unit>>,
}

impl Substitution {
    pub fn identity(sig: &RingSignature) -> Self {
        Substitution {
            sig: *sig,
            images: vec![None; sig.nvars()],
        }
    }

    /// Assigns `var -> image`; the image must be `±monomial`.
    pub fn assign(&mut self, var: usize, image: &LaurentPoly) -> Result<&mut Self, LaurentError> {
        self.sig.check(image.signature())?;
        let unit = image.as_unit().ok_or_else(|| LaurentError::NotInvertible {
            var: VarNames::canonical(&self.sig).name(var).to_string(),
            image: image.to_string(),
        })?;
        self.images[var] = Some(unit);
        Ok(self)
    }

    /// The augmentation `q`: every surface variable goes to 1.
    pub fn kill_surface(sig: &RingSignature) -> Self {
        let mut s = Self::identity(sig);
        for v in 0..sig.gamma_vars() {
            s.images[v] = Some(Unit {
                negative: false,
                monomial: Monomial::one(sig),
            });
        }
        s
    }

    /// `t_j -> t_j^{-1}` for 1-based `j`.
    pub fn invert_component(sig: &RingSignature, j: usize) -> Result<Self, LaurentError> {
        if j == 0 || j > sig.components() {
            return Err(LaurentError::ComponentOutOfRange {
                index: j,
                components: sig.components(),
            });
        }
        let mut s = Self::identity(sig);
        let v = sig.t_var(j);
        s.images[v] = Some(Unit {
            negative: false,
            monomial: Monomial::var(sig, v, -1),
        });
        Ok(s)
    }

    /// Every `t_j -> t_j^{-1}`.
    pub fn invert_all_components(sig: &RingSignature) -> Self {
        let mut s = Self::identity(sig);
        for j in 1..=sig.components() {
            let v = sig.t_var(j);
            s.images[v] = Some(Unit {
                negative: false,
                monomial: Monomial::var(sig, v, -1),
            });
        }
        s
    }

    /// Every `t_j -> t_1`.
    pub fn diagonal_components(sig: &RingSignature) -> Self {
        let mut s = Self::identity(sig);
        let t1 = sig.t_var(1);
        for j in 2..=sig.components() {
            s.images[sig.t_var(j)] = Some(Unit {
                negative: false,
                monomial: Monomial::var(sig, t1, 1),
            });
        }
        s
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs)
            .expect("ring signature mismatch in add")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs)
            .expect("ring signature mismatch in sub")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs)
            .expect("ring signature mismatch in mul")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> RingSignature {
        RingSignature::new(1, 1).unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&g1(), s).unwrap()
    }

    #[test]
    fn signature_rejects_genus_zero() {
        assert!(RingSignature::new(0, 1).is_err());
        assert!(RingSignature::new(1, 0).is_err());
    }

    #[test]
    fn additive_identity() {
        let a = p("(x*y - y)*t^2 + (y - x)*t + (x - 1)");
        assert_eq!(&a + &LaurentPoly::zero(&g1()), a);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x - 1") * &p("x + 1"), p("x^2 - 1"));
    }

    #[test]
    fn trefoil_determinant_expanded() {
        let lhs = &(&p("1 + t*x - t") * &p("t*y")) - &(&p("-1") * &p("x - 1 - t*x"));
        assert_eq!(lhs, p("(x*y - y)*t^2 + (y - x)*t + (x - 1)"));
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = LaurentPoly::one(&g1());
        let b = LaurentPoly::one(&RingSignature::new(2, 1).unwrap());
        assert!(matches!(
            a.checked_add(&b),
            Err(LaurentError::SignatureMismatch(..))
        ));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn cancellation_prunes_terms() {
        let a = p("x*t + 3");
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn canonicalize_strips_units() {
        let a = p("-t^-1*x*(x - 1)");
        assert_eq!(a.canonicalize(), p("x - 1"));
        assert!(LaurentPoly::zero(&g1()).canonicalize().is_zero());
    }

    #[test]
    fn canonical_unit_recovers_form() {
        let a = p("-3*t^-2*y^-1 + 5*x*t");
        let u = a.canonical_unit();
        assert_eq!(a.mul_unit(&u), a.canonicalize());
    }

    #[test]
    fn canonicalize_agrees_on_associates() {
        let base = &p("t - 1") * &p("x*y - 1").pow(2);
        let shifted = &p("t^3*x^2*y^2") * &base;
        assert_eq!(base.canonicalize(), shifted.canonicalize());
    }

    #[test]
    fn q_kills_trefoil_delta() {
        let d = p("(x*y - y)*t^2 + (y - x)*t + (x - 1)");
        let q = d.specialize(&Substitution::kill_surface(&g1())).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn identity_substitution() {
        let d = p("(x*y - y)*t^2 + 7*x^-3");
        assert_eq!(d.specialize(&Substitution::identity(&g1())).unwrap(), d);
    }

    #[test]
    fn invert_t_single_term() {
        let s = Substitution::invert_component(&g1(), 1).unwrap();
        assert_eq!(p("(x - 1)*t").specialize(&s).unwrap(), p("(x - 1)*t^-1"));
        assert!(Substitution::invert_component(&g1(), 2).is_err());
    }

    #[test]
    fn substitution_rejects_non_units() {
        let mut s = Substitution::identity(&g1());
        assert!(s.assign(0, &p("x + 1")).is_err());
        assert!(s.assign(0, &p("2*y")).is_err());
        s.assign(0, &p("-y^-1")).unwrap();
        assert_eq!(p("x^3 + x").specialize(&s).unwrap(), p("-y^-3 - y^-1"));
    }

    #[test]
    fn diagonal_specialization() {
        let sig = RingSignature::new(1, 2).unwrap();
        let a = LaurentPoly::parse(&sig, "t1*t2 - x*t2^-1").unwrap();
        let b = a
            .specialize(&Substitution::diagonal_components(&sig))
            .unwrap();
        assert_eq!(b, LaurentPoly::parse(&sig, "t1^2 - x*t1^-1").unwrap());
    }

    #[test]
    fn map_gamma_dehn_twist() {
        // x -> xy, y -> y acting on exponent columns
        let twisted = p("(x*y - y)*t^2 + (y - x)*t + (x - 1)").map_gamma(&[1, 0, 1, 1]);
        assert_eq!(twisted, p("(x*y^2 - y)*t^2 + (y - x*y)*t + (x*y - 1)"));
    }

    #[test]
    fn monomial_order_is_graded() {
        let sig = g1();
        let a = Monomial::from_exponents(vec![2, 0, 0]);
        let b = Monomial::from_exponents(vec![0, 0, 1]);
        let c = Monomial::from_exponents(vec![1, 0, 1]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::one(&sig) < b);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = p("x - t^-1 + 2");
        assert_eq!(a.pow(3), &(&a * &a) * &a);
        assert!(a.pow(0).is_one());
    }

    #[test]
    fn poly_file() {
        let (sig, q) =
            LaurentPoly::parse_file("# satellite\npoly 1 1\n(t - 1)\n  * (x*y - 1)^2\n").unwrap();
        assert_eq!((sig.genus(), sig.components()), (1, 1));
        assert_eq!(q.len(), 6);
        let (_, back) =
            LaurentPoly::parse_file(&q.to_file_string(&VarNames::canonical(&sig))).unwrap();
        assert_eq!(back, q);
        assert!(LaurentPoly::parse_file("poly 1\nx").is_err());
        assert!(LaurentPoly::parse_file("poly 1 1\n").is_err());
        assert!(matches!(
            LaurentPoly::parse_file("poly 1 1\nx +"),
            Err(LaurentError::PolyFile { line: 2, .. })
        ));
    }
}
