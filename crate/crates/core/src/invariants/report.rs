use crate::fox::alexander_matrix;
use crate::laurent::{LaurentPoly, PolyMatrix, RingSignature};
use crate::opgroup::OrbitPresentation;
use crate::symplectic::{
    operator_support, presentation_lattice, quotient_lattice, symplectic_rank,
};

use super::{delta_chain, genus_lower_bound, q_project, GenusBound, InvariantError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Presentation,
    Matrix,
    Polynomial,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub assert_non_split: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub kind: InputKind,
    pub signature: RingSignature,
    /// `(relators, generators)` of the Alexander matrix, when there is one.
    pub shape: Option<(usize, usize)>,
    /// `Δ0, Δ1, ...`, canonicalized. A polynomial input gives only `Δ0`.
    pub deltas: Vec<LaurentPoly>,
    pub q_delta0: LaurentPoly,
    pub rank_delta0: usize,
    /// Independent differences of the operators of `Δ0`.
    pub delta0_basis: Vec<Vec<i64>>,
    pub rank_presentation: Option<usize>,
    pub presentation_basis: Option<Vec<Vec<i64>>>,
    pub genus: GenusBound,
    pub caveats: Vec<String>,
}

impl InvariantReport {
    pub fn delta0(&self) -> &LaurentPoly {
        &self.deltas[0]
    }

    pub fn is_knot(&self) -> bool {
        self.signature.components() == 1
    }

    pub fn is_square(&self) -> Option<bool> {
        self.shape.map(|(m, n)| m == n)
    }

    /// `rk_s(Δ0) <= rk_s(π̃) <= rk_s(P)`, with the known ends filled in.
    pub fn bracket(&self) -> String {
        match self.rank_presentation {
            Some(r) => format!("{} <= rk_s(covering group) <= {}", self.rank_delta0, r),
            None => format!("{} <= rk_s(covering group)", self.rank_delta0),
        }
    }
}

pub fn full_report(
    p: &OrbitPresentation,
    opts: &ReportOptions,
) -> Result<InvariantReport, InvariantError> {
    let lattice = presentation_lattice(p);
    let mut r = matrix_report(&alexander_matrix(p), opts)?;
    r.kind = InputKind::Presentation;
    r.rank_presentation = Some(symplectic_rank(&lattice));
    r.presentation_basis = Some(lattice.basis());
    check(&r)?;
    Ok(r)
}

pub fn matrix_report(
    a: &PolyMatrix,
    opts: &ReportOptions,
) -> Result<InvariantReport, InvariantError> {
    let mut r = build(InputKind::Matrix, delta_chain(a), opts);
    r.shape = Some((a.rows(), a.cols()));
    check(&r)?;
    Ok(r)
}

pub fn polynomial_report(
    p: &LaurentPoly,
    opts: &ReportOptions,
) -> Result<InvariantReport, InvariantError> {
    let r = build(InputKind::Polynomial, vec![p.canonicalize()], opts);
    check(&r)?;
    Ok(r)
}

fn build(kind: InputKind, deltas: Vec<LaurentPoly>, opts: &ReportOptions) -> InvariantReport {
    let d0 = &deltas[0];
    let signature = *d0.signature();
    let q_delta0 = q_project(d0).canonicalize();
    let genus = genus_lower_bound(d0, opts.assert_non_split);
    let delta0_basis = quotient_lattice(signature.genus(), &operator_support(d0)).basis();
    let mut caveats = genus.caveats.clone();
    if signature.components() == 1 && !q_delta0.is_zero() {
        caveats.push("q(Δ0) is nonzero, which never happens for a knot diagram".to_string());
    }
    InvariantReport {
        kind,
        signature,
        shape: None,
        rank_delta0: genus.rank,
        deltas,
        q_delta0,
        delta0_basis,
        rank_presentation: None,
        presentation_basis: None,
        genus,
        caveats,
    }
}

fn check(r: &InvariantReport) -> Result<(), InvariantError> {
    let g = r.signature.genus();
    if !r.rank_delta0.is_multiple_of(2) || r.rank_delta0 > 2 * g {
        return Err(InvariantError::Violation(format!(
            "symplectic rank {} is odd or exceeds 2g = {}",
            r.rank_delta0,
            2 * g
        )));
    }
    if let Some(rp) = r.rank_presentation {
        if r.rank_delta0 > rp {
            return Err(InvariantError::Violation(format!(
                "rk_s(Δ0) = {} exceeds rk_s(P) = {rp}",
                r.rank_delta0
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opgroup::parse_presentation;

    #[test]
    fn kishino_report() {
        let text = "genus 2\ngenerators a b c d\nrelator a{x} b = a{x y} a{x}\n\
                    relator a{x} d{v} = a a{x}\nrelator b d = c b\nrelator d{v} b{u} = c d{v}\n";
        let p = parse_presentation(text).unwrap();
        let r = full_report(&p, &ReportOptions::default()).unwrap();
        assert_eq!(r.deltas.len(), 5);
        assert!(r.deltas[4].is_one());
        assert!(r.q_delta0.is_zero());
        assert_eq!((r.rank_delta0, r.rank_presentation), (4, Some(4)));
        assert_eq!(r.genus.bound, 2);
        assert_eq!(r.is_square(), Some(true));
        assert_eq!(r.bracket(), "4 <= rk_s(covering group) <= 4");
        assert_eq!(r.caveats.len(), 1);
        // the chain divides
        for w in r.deltas.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].divides(&w[0]));
            }
        }
    }

    #[test]
    fn polynomial_report_satellite() {
        let sig = RingSignature::new(1, 1).unwrap();
        let p = LaurentPoly::parse(&sig, "(t - 1)*(x*y - 1)^2").unwrap();
        let r = polynomial_report(
            &p,
            &ReportOptions {
                assert_non_split: true,
            },
        )
        .unwrap();
        assert_eq!((r.rank_delta0, r.genus.bound), (0, 0));
        assert_eq!(r.delta0_basis, vec![vec![1, 1]]);
        assert!(r.caveats.iter().any(|c| c.contains("strict")));
        assert_eq!(r.rank_presentation, None);
    }
}
