//! Lattices in `H1(Γ) = Z^{2g}` with the standard symplectic form, and the symplectic
//! rank `dim W / (W ∩ W^⊥)` of their real span `W`.

mod sp;

pub use sp::{enumerate_sp, sp_generators, sp_membership, SpElement, SpEnumerator};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::opgroup::OrbitPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    DimensionMismatch {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("malformed symplectic matrix file, line {line}: {msg}")]
    File { line: usize, msg: String },
}

/// The standard form on `Z^{2g}` in the basis `x1, y1, ..., xg, yg`:
/// `<x_i, y_i> = 1 = -<y_i, x_i>`, all other pairings zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticForm {
    pub genus: usize,
}

impl SymplecticForm {
    pub fn new(genus: usize) -> Self {
        SymplecticForm { genus }
    }

    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        (0..self.genus)
            .map(|i| u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i])
            .sum()
    }

    /// `J`, row-major.
    pub fn matrix(&self) -> Vec<i64> {
        let n = 2 * self.genus;
        let mut j = vec![0; n * n];
        for i in 0..self.genus {
            j[(2 * i) * n + 2 * i + 1] = 1;
            j[(2 * i + 1) * n + 2 * i] = -1;
        }
        j
    }
}

/// Sublattice of `Z^{2g}` given by a (possibly dependent) generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorLattice {
    genus: usize,
    generators: Vec<Vec<i64>>,
}

impl OperatorLattice {
    pub fn new(genus: usize, generators: Vec<Vec<i64>>) -> Self {
        debug_assert!(generators.iter().all(|v| v.len() == 2 * genus));
        OperatorLattice { genus, generators }
    }

    pub fn zero(genus: usize) -> Self {
        Self::new(genus, Vec::new())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// A maximal Q-linearly independent subset of the generators.
    pub fn basis(&self) -> Vec<Vec<i64>> {
        let mut ech = Echelon::default();
        self.generators
            .iter()
            .filter(|v| ech.insert(v.iter().map(|&x| BigInt::from(x)).collect()))
            .cloned()
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    /// Image under `v -> M v`.
    pub fn transform(&self, m: &SpElement) -> OperatorLattice {
        OperatorLattice::new(
            self.genus,
            self.generators.iter().map(|v| m.apply(v)).collect(),
        )
    }
}

/// Incremental fraction-free row echelon form over Z (rank over Q).
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    /// Reduces `v` against the stored rows; stores it and returns true if independent.
    fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_zero() {
                for x in v.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                if v[p].is_negative() {
                    for x in v.iter_mut() {
                        *x = -&*x;
                    }
                }
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Rank over Q of an integer matrix given by rows.
pub fn rank_q(rows: &[Vec<BigInt>]) -> usize {
    let mut ech = Echelon::default();
    rows.iter().filter(|r| ech.insert((*r).clone())).count()
}

/// Surface exponent vectors of the terms of `p`.
pub fn operator_support(p: &LaurentPoly) -> BTreeSet<Vec<i64>> {
    let sig = p.signature();
    p.terms().map(|(m, _)| m.gamma_exp(sig).to_vec()).collect()
}

/// Lattice spanned by differences `v - v0` of support vectors.
pub fn quotient_lattice(genus: usize, support: &BTreeSet<Vec<i64>>) -> OperatorLattice {
    let mut it = support.iter();
    let Some(base) = it.next() else {
        return OperatorLattice::zero(genus);
    };
    let gens = it
        .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    OperatorLattice::new(genus, gens)
}

/// `rank_Q(B J B^T)` for a basis matrix `B` of the lattice; always even.
pub fn symplectic_rank(v: &OperatorLattice) -> usize {
    let form = SymplecticForm::new(v.genus);
    let basis = v.basis();
    let gram: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| BigInt::from(form.pairing(a, b)))
                .collect()
        })
        .collect();
    rank_q(&gram)
}

/// Symplectic rank of a polynomial: the lattice of quotients of its operators.
pub fn polynomial_rank(p: &LaurentPoly) -> usize {
    symplectic_rank(&quotient_lattice(
        p.signature().genus(),
        &operator_support(p),
    ))
}

/// Lattice generated by the abelianized operators in the relators of `p`.
pub fn presentation_lattice(p: &OrbitPresentation) -> OperatorLattice {
    OperatorLattice::new(p.genus(), p.relator_operators())
}

pub fn presentation_rank(p: &OrbitPresentation) -> usize {
    symplectic_rank(&presentation_lattice(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::RingSignature;
    use crate::opgroup::parse_presentation;

    fn set(vs: &[&[i64]]) -> BTreeSet<Vec<i64>> {
        vs.iter().map(|v| v.to_vec()).collect()
    }

    #[test]
    fn support_of_trefoil_delta() {
        let sig = RingSignature::new(1, 1).unwrap();
        let p = LaurentPoly::parse(&sig, "(x*y - y)*t^2 + (y - x)*t + (x - 1)").unwrap();
        assert_eq!(
            operator_support(&p),
            set(&[&[1, 1], &[0, 1], &[1, 0], &[0, 0]])
        );
        assert!(operator_support(&LaurentPoly::zero(&sig)).is_empty());
        let s = LaurentPoly::parse(&sig, "(t - 1)*(x*y - 1)^2").unwrap();
        assert_eq!(operator_support(&s), set(&[&[0, 0], &[1, 1], &[2, 2]]));
    }

    #[test]
    fn quotient_lattices() {
        let full = quotient_lattice(1, &set(&[&[1, 1], &[0, 1], &[1, 0], &[0, 0]]));
        assert_eq!(full.rank(), 2);
        assert_eq!(symplectic_rank(&full), 2);

        let line = quotient_lattice(1, &set(&[&[0, 0], &[1, 1], &[2, 2]]));
        assert_eq!(line.rank(), 1);
        assert_eq!(symplectic_rank(&line), 0);

        let single = quotient_lattice(1, &set(&[&[3, -1]]));
        assert_eq!(single.rank(), 0);
        assert_eq!(symplectic_rank(&OperatorLattice::zero(2)), 0);
    }

    #[test]
    fn lagrangian_and_mixed() {
        // span{x1, x2} is isotropic
        assert_eq!(
            symplectic_rank(&OperatorLattice::new(
                2,
                vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0]]
            )),
            0
        );
        // span{x1, y1, x2}: W ∩ W^⊥ = span{x2}
        let v = OperatorLattice::new(
            2,
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
        );
        assert_eq!(symplectic_rank(&v), 2);
        // span{x1 + x2, y1 - y2}: pairing 1 - 1 = 0
        let w = OperatorLattice::new(2, vec![vec![1, 0, 1, 0], vec![0, 1, 0, -1]]);
        assert_eq!(symplectic_rank(&w), 0);
    }

    #[test]
    fn kishino_presentation_rank() {
        let text = "genus 2\ngenerators a b c d\nrelator a{x} b = a{x y} a{x}\n\
                    relator a{x} d{v} = a a{x}\nrelator b d = c b\nrelator d{v} b{u} = c d{v}\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(presentation_rank(&p), 4);
    }

    #[test]
    fn trivial_presentation_ranks() {
        let p = parse_presentation("genus 1\ngenerators a b\nrelator a b = b a\n").unwrap();
        assert_eq!(presentation_rank(&p), 0);
        let p = parse_presentation("genus 1\ngenerators a\nrelator a{x} = a{x^2}\n").unwrap();
        assert_eq!(presentation_rank(&p), 0);
    }

    #[test]
    fn form_matrix() {
        let f = SymplecticForm::new(2);
        assert_eq!(
            f.matrix(),
            vec![0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]
        );
        assert_eq!(f.pairing(&[1, 0, 0, 0], &[0, 1, 0, 0]), 1);
        assert_eq!(f.pairing(&[0, 1, 0, 0], &[1, 0, 0, 0]), -1);
    }

    #[test]
    fn rank_q_basics() {
        let r = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(rank_q(&[r(&[1, 2]), r(&[2, 4])]), 1);
        assert_eq!(rank_q(&[r(&[0, 1]), r(&[1, 0]), r(&[1, 1])]), 2);
        assert_eq!(rank_q(&[]), 0);
    }
}
