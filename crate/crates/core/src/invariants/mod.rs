//! Alexander polynomials `Δi`, their transforms, symplectic ranks, the virtual genus
//! lower bound and the invertibility search.

mod report;

pub use report::{
    full_report, matrix_report, polynomial_report, InputKind, InvariantReport, ReportOptions,
};

use thiserror::Error;

use crate::fox::alexander_matrix;
use crate::laurent::{gcd_pair, LaurentError, LaurentPoly, PolyMatrix, Substitution, Unit};
use crate::opgroup::OrbitPresentation;
use crate::symplectic::{enumerate_sp, polynomial_rank, SpElement, SymplecticError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
    #[error("internal invariant violated: {0}")]
    Violation(String),
}

/// `Δi` of a presentation: canonical gcd of the `(n-i) x (n-i)` minors of its
/// Alexander matrix, `n` the number of generator orbits.
pub fn delta(p: &OrbitPresentation, i: usize) -> LaurentPoly {
    delta_of_matrix(&alexander_matrix(p), i)
}

/// `Δi` of an `m x n` matrix. `i >= n` gives 1; `n - i > m` gives 0 (no minors);
/// square `i = 0` is the determinant.
pub fn delta_of_matrix(a: &PolyMatrix, i: usize) -> LaurentPoly {
    let sig = a.signature();
    let n = a.cols();
    if i >= n {
        return LaurentPoly::one(sig);
    }
    let k = n - i;
    if i == 0 && a.is_square() {
        return a.determinant().expect("square matrix").canonicalize();
    }
    if k > a.rows() {
        return LaurentPoly::zero(sig);
    }
    let rows = crate::laurent::combinations(a.rows(), k);
    let cols = crate::laurent::combinations(n, k);
    let mut acc = LaurentPoly::zero(sig);
    for rs in &rows {
        for cs in &cols {
            let minor = a.submatrix(rs, cs).determinant().expect("square submatrix");
            acc = gcd_pair(&acc, &minor).expect("same ring");
            if acc.is_one() {
                return acc;
            }
        }
    }
    acc
}

/// `Δ0, ..., Δ_{min(m, n)}`.
pub fn delta_chain(a: &PolyMatrix) -> Vec<LaurentPoly> {
    (0..=a.rows().min(a.cols()))
        .map(|i| delta_of_matrix(a, i))
        .collect()
}

/// The augmentation `q`: every surface variable to 1.
pub fn q_project(p: &LaurentPoly) -> LaurentPoly {
    p.specialize(&Substitution::kill_surface(p.signature()))
        .expect("same ring")
}

/// `t_j -> t_j^{-1}`, canonicalized.
pub fn reverse_orientation(p: &LaurentPoly, j: usize) -> Result<LaurentPoly, LaurentError> {
    Ok(
        p.specialize(&Substitution::invert_component(p.signature(), j)?)?
            .canonicalize(),
    )
}

/// Every `t_j -> t_j^{-1}` (not canonicalized).
pub fn reverse_all(p: &LaurentPoly) -> LaurentPoly {
    p.specialize(&Substitution::invert_all_components(p.signature()))
        .expect("same ring")
}

/// `φ♯`: surface exponents `v -> φ v`; `t` exponents and coefficients unchanged.
pub fn apply_symplectic(p: &LaurentPoly, phi: &SpElement) -> Result<LaurentPoly, SymplecticError> {
    let g = p.signature().genus();
    if phi.genus() != g {
        return Err(SymplecticError::GenusMismatch(phi.genus(), g));
    }
    Ok(p.map_gamma(phi.entries()))
}

/// The unit `u` with `target = u * φ♯(p)`, if any.
pub fn equivalent_under(p: &LaurentPoly, target: &LaurentPoly, phi: &SpElement) -> Option<Unit> {
    if p.signature() != target.signature() {
        return None;
    }
    let image = apply_symplectic(p, phi).ok()?;
    unit_between(&image, target)
}

/// The unit `u` with `b = u * a`, if any.
pub fn unit_between(a: &LaurentPoly, b: &LaurentPoly) -> Option<Unit> {
    let sig = a.signature();
    match (a.leading_term(), b.leading_term()) {
        (None, None) => Some(Unit {
            negative: false,
            monomial: crate::laurent::Monomial::one(sig),
        }),
        (Some((ma, ca)), Some((mb, cb))) => {
            // the monomial order is translation invariant, so leading terms correspond
            let negative = if ca == cb {
                false
            } else if *ca == -cb {
                true
            } else {
                return None;
            };
            let u = Unit {
                negative,
                monomial: mb.div(ma),
            };
            (a.mul_unit(&u) == *b).then_some(u)
        }
        _ => None,
    }
}

/// Outcome of a bounded search over `Sp(2g, Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Proof grade: `target = unit * φ♯(p)` has been verified.
    Found {
        phi: SpElement,
        unit: Unit,
        word_length: usize,
        examined: usize,
    },
    /// Evidence grade only: no `φ` of word length `<= bound` works.
    NotFoundWithinBound { bound: usize, examined: usize },
}

impl Verdict {
    pub fn is_found(&self) -> bool {
        matches!(self, Verdict::Found { .. })
    }
}

/// Streams `enumerate_sp(g, bound)` for the first `φ` with `target = u φ♯(p)`.
pub fn equivalence_search(p: &LaurentPoly, target: &LaurentPoly, bound: usize) -> Verdict {
    let g = p.signature().genus();
    let goal = target.canonicalize();
    // φ♯ preserves the number of terms and the multiset of coefficients up to sign
    let quick_reject = p.len() != target.len();
    let mut examined = 0;
    let mut stream = enumerate_sp(g, bound);
    if !quick_reject {
        while let Some(phi) = stream.next() {
            examined += 1;
            let image = p.map_gamma(phi.entries());
            if image.canonicalize() != goal {
                continue;
            }
            let unit = unit_between(&image, target).expect("canonical forms agree");
            return Verdict::Found {
                phi,
                unit,
                word_length: stream.layer(),
                examined,
            };
        }
    }
    Verdict::NotFoundWithinBound { bound, examined }
}

/// Searches for `Δ(t^{-1}) = u φ♯(Δ(t))`.
pub fn invertibility_search(p: &LaurentPoly, bound: usize) -> Verdict {
    equivalence_search(p, &reverse_all(p), bound)
}

pub const NON_SPLIT_CAVEAT: &str =
    "the genus bound holds for non-split links; non-splitness was not asserted";

/// `rk_s(Δ0) / 2` with its qualifications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusBound {
    pub rank: usize,
    pub bound: usize,
    pub genus: usize,
    pub non_split_asserted: bool,
    pub caveats: Vec<String>,
}

impl GenusBound {
    /// The virtual genus when the bound meets the genus of the carrying surface.
    pub fn determined_genus(&self) -> Option<usize> {
        (self.non_split_asserted && self.bound == self.genus).then_some(self.genus)
    }
}

pub fn genus_lower_bound(p: &LaurentPoly, non_split_asserted: bool) -> GenusBound {
    let rank = polynomial_rank(p);
    let genus = p.signature().genus();
    let bound = rank / 2;
    let mut caveats = Vec::new();
    if !non_split_asserted {
        caveats.push(NON_SPLIT_CAVEAT.to_string());
    }
    if bound < genus {
        caveats.push(format!(
            "rk_s(Δ0) = {rank} < 2g = {}: the bound may be strict, the virtual genus can exceed {bound}",
            2 * genus
        ));
    }
    GenusBound {
        rank,
        bound,
        genus,
        non_split_asserted,
        caveats,
    }
}

/// One row of the `q(Δ0)` experiment on multi-component presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExperimentRow {
    pub components: usize,
    pub delta0: LaurentPoly,
    pub q_delta0: LaurentPoly,
}

impl QExperimentRow {
    pub fn vanishes(&self) -> bool {
        self.q_delta0.is_zero()
    }
}

pub fn q_experiment(p: &OrbitPresentation) -> QExperimentRow {
    let delta0 = delta(p, 0);
    let q_delta0 = q_project(&delta0).canonicalize();
    QExperimentRow {
        components: p.signature().components(),
        delta0,
        q_delta0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{Monomial, RingSignature};
    use crate::opgroup::parse_presentation;

    const KISHINO: &str = "\
genus 2
generators a b c d
relator a{x} b = a{x y} a{x}
relator a{x} d{v} = a a{x}
relator b d = c b
relator d{v} b{u} = c d{v}
";
    const KISHINO_DELTA0: &str =
        "(x - u*v*x)*t^2 + (1 + v - x + u*v*x - v*x*y - u*v*x*y)*t + (-v + v*x*y)";
    const TREFOIL: &str = "(x*y - y)*t^2 + (y - x)*t + (x - 1)";

    fn g1() -> RingSignature {
        RingSignature::new(1, 1).unwrap()
    }

    fn poly(sig: &RingSignature, s: &str) -> LaurentPoly {
        LaurentPoly::parse(sig, s).unwrap()
    }

    fn twist() -> SpElement {
        SpElement::from_rows(1, &[vec![1, 0], vec![1, 1]]).unwrap()
    }

    #[test]
    fn kishino_delta0() {
        let p = parse_presentation(KISHINO).unwrap();
        let d0 = delta(&p, 0);
        assert_eq!(d0, poly(p.signature(), KISHINO_DELTA0).canonicalize());
        assert!(q_project(&d0).is_zero());
        let gb = genus_lower_bound(&d0, true);
        assert_eq!((gb.rank, gb.bound), (4, 2));
        assert!(gb.caveats.is_empty());
        assert_eq!(gb.determined_genus(), Some(2));
    }

    #[test]
    fn size_conventions() {
        let p = parse_presentation("genus 1\ngenerators a\n").unwrap();
        assert!(delta(&p, 0).is_zero());
        assert!(delta(&p, 1).is_one());
        assert!(delta(&p, 5).is_one());
    }

    #[test]
    fn q_project_examples() {
        let sig = g1();
        assert!(q_project(&poly(&sig, TREFOIL)).is_zero());
        assert_eq!(q_project(&poly(&sig, "5")), poly(&sig, "5"));
        assert_eq!(q_project(&poly(&sig, "x*t - 2*y")), poly(&sig, "t - 2"));
    }

    #[test]
    fn reversal() {
        let sig = g1();
        let p = poly(&sig, TREFOIL);
        let r = reverse_orientation(&p, 1).unwrap();
        assert_eq!(
            r,
            poly(&sig, "(x*y - y)*t^-2 + (y - x)*t^-1 + (x - 1)").canonicalize()
        );
        assert_eq!(reverse_orientation(&r, 1).unwrap(), p.canonicalize());
        assert_eq!(
            reverse_orientation(&poly(&sig, "(x - 1)*t"), 1).unwrap(),
            poly(&sig, "x - 1")
        );
        assert!(reverse_orientation(&p, 2).is_err());
        assert!(reverse_orientation(&p, 0).is_err());
    }

    #[test]
    fn dehn_twist_equivalence() {
        let sig = g1();
        let p = poly(&sig, TREFOIL);
        let image = apply_symplectic(&p, &twist()).unwrap();
        let expected = poly(&sig, "(x*y^2 - y)*t^2 + (y - x*y)*t + (x*y - 1)");
        assert_eq!(image, expected);
        assert!(equivalent_under(&p, &expected, &twist()).unwrap().is_one());
        assert_eq!(apply_symplectic(&image, &twist().inverse()).unwrap(), p);
        assert_eq!(apply_symplectic(&p, &SpElement::identity(1)).unwrap(), p);
        assert!(apply_symplectic(&p, &SpElement::identity(2)).is_err());
    }

    #[test]
    fn unit_witness_recovery() {
        let sig = g1();
        let p = poly(&sig, TREFOIL);
        let id = SpElement::identity(1);
        assert!(equivalent_under(&p, &p, &id).unwrap().is_one());
        let target = &poly(&sig, "-x*t") * &p;
        let u = equivalent_under(&p, &target, &id).unwrap();
        assert!(u.negative);
        assert_eq!(u.monomial, Monomial::from_parts(&[1, 0], &[1]));
        assert!(equivalent_under(&p, &poly(&sig, "x - 1"), &id).is_none());
        assert!(equivalent_under(&p, &(&p + &p), &id).is_none());
    }

    #[test]
    fn invertibility_examples() {
        let sig = g1();
        let toy = poly(&sig, "(x - 1)*(t + t^-1)");
        match invertibility_search(&toy, 3) {
            Verdict::Found {
                phi,
                unit,
                word_length,
                examined,
            } => {
                assert!(phi.is_identity());
                assert!(unit.is_one());
                assert_eq!((word_length, examined), (0, 1));
            }
            v => panic!("{v:?}"),
        }
        let asym = poly(&sig, "x*t^2 + t + 1");
        assert_eq!(
            invertibility_search(&asym, 0),
            Verdict::NotFoundWithinBound {
                bound: 0,
                examined: 1
            }
        );
        assert!(equivalence_search(&asym, &asym, 0).is_found());
    }

    #[test]
    fn trefoil_is_invertible_via_symplectic_map() {
        // -I maps Δ(t) to -x^-1 y^-1 Δ(t^-1) t^2
        let p = poly(&g1(), TREFOIL);
        let v = invertibility_search(&p, 6);
        let Verdict::Found { phi, unit, .. } = v else {
            panic!("{v:?}")
        };
        let image = apply_symplectic(&p, &phi).unwrap().mul_unit(&unit);
        assert_eq!(image, reverse_all(&p));
    }

    #[test]
    fn genus_bounds() {
        let sig = g1();
        let t = genus_lower_bound(&poly(&sig, TREFOIL), false);
        assert_eq!(t.bound, 1);
        assert_eq!(t.caveats, vec![NON_SPLIT_CAVEAT.to_string()]);
        let s = genus_lower_bound(&poly(&sig, "(t - 1)*(x*y - 1)^2"), true);
        assert_eq!((s.rank, s.bound), (0, 0));
        assert_eq!(s.caveats.len(), 1);
        assert!(s.caveats[0].contains("strict"));
        assert_eq!(s.determined_genus(), None);
    }

    #[test]
    fn q_experiment_two_components() {
        let text = "genus 1\ncomponents 2\ngenerators a b\ncomponent a 1\ncomponent b 2\n\
                    relator a{x} b = b a{x}\nrelator b a{x} = a{x} b\n";
        let p = parse_presentation(text).unwrap();
        let row = q_experiment(&p);
        assert_eq!(row.components, 2);
        assert_eq!(row.delta0, delta(&p, 0));
    }
}
