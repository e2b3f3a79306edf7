//! Crossed Fox calculus: the Alexander matrix of an orbit presentation over `R_d`.
//!
//! For a relator `s_1 ... s_k`,
//!
//! ```text
//! ∂r/∂a = Σ_{j : gen(s_j) = a} ε(s_1 ... s_{j-1}) · δ_j
//! ```
//!
//! where `ε` sends each occurrence of a generator of component `c` to `t_c^{±1}`, and
//! `δ_j` is the abelianized operator `γ̄_j` for a positive symbol or `-γ̄_j t_c^{-1}`
//! for an inverse one. Operators only enter here, which is the passage to `H1(Γ)`.

use num_bigint::BigInt;

use crate::laurent::{LaurentPoly, Monomial, PolyMatrix, RingSignature};
use crate::opgroup::{abelianize_operator, Occurrence, OrbitPresentation, Relator};

/// `t_{c(gen)}^{sign}`.
pub fn epsilon_weight(p: &OrbitPresentation, o: &Occurrence) -> Monomial {
    let sig = p.signature();
    Monomial::var(
        sig,
        sig.t_var(p.component_of(o.generator)),
        i64::from(o.sign),
    )
}

/// `ε` of a whole word.
pub fn word_weight(p: &OrbitPresentation, word: &[Occurrence]) -> Monomial {
    word.iter().fold(Monomial::one(p.signature()), |acc, o| {
        acc.mul(&epsilon_weight(p, o))
    })
}

fn operator_monomial(sig: &RingSignature, o: &Occurrence) -> Monomial {
    let gamma = abelianize_operator(&o.operator, sig.genus());
    Monomial::from_parts(&gamma, &vec![0; sig.components()])
}

pub fn fox_derivative(p: &OrbitPresentation, r: &Relator, generator: usize) -> LaurentPoly {
    let sig = p.signature();
    let mut prefix = Monomial::one(sig);
    let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
    for o in r.occurrences() {
        let w = epsilon_weight(p, o);
        if o.generator == generator {
            let gamma = operator_monomial(sig, o);
            if o.sign > 0 {
                terms.push((prefix.mul(&gamma), BigInt::from(1)));
            } else {
                // the prefix already includes this symbol's own weight t^{-1}
                terms.push((prefix.mul(&gamma).mul(&w), BigInt::from(-1)));
            }
        }
        prefix = prefix.mul(&w);
    }
    LaurentPoly::from_terms(sig, terms)
}

/// One row of the Alexander matrix: the Fox derivatives of a relator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoxRow {
    pub relator: usize,
    pub entries: Vec<LaurentPoly>,
}

pub fn fox_row(p: &OrbitPresentation, relator: usize) -> FoxRow {
    let r = &p.relators()[relator];
    let entries = (0..p.generators().len())
        .map(|a| fox_derivative(p, r, a))
        .collect();
    FoxRow { relator, entries }
}

/// `m x n` matrix, rows in relator order and columns in generator order.
pub fn alexander_matrix(p: &OrbitPresentation) -> PolyMatrix {
    let sig = p.signature();
    let rows: Vec<Vec<LaurentPoly>> = (0..p.relators().len())
        .map(|j| fox_row(p, j).entries)
        .collect();
    let n = p.generators().len();
    let mut m = PolyMatrix::zeros(sig, rows.len(), n);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, e) in row.into_iter().enumerate() {
            m.set(i, j, e);
        }
    }
    m.with_labels(
        (1..=p.relators().len()).map(|j| format!("r{j}")).collect(),
        p.generators().to_vec(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Substitution;
    use crate::opgroup::{parse_presentation, OperatorWord};

    const KISHINO: &str = "\
genus 2
generators a b c d
relator a{x} b = a{x y} a{x}
relator a{x} d{v} = a a{x}
relator b d = c b
relator d{v} b{u} = c d{v}
";

    fn poly(p: &OrbitPresentation, s: &str) -> LaurentPoly {
        LaurentPoly::parse(p.signature(), s).unwrap()
    }

    #[test]
    fn epsilon_weights() {
        let text = "genus 1\ncomponents 2\ngenerators a b\ncomponent a 1\ncomponent b 2\n";
        let p = parse_presentation(text).unwrap();
        let sig = *p.signature();
        let a = Occurrence::plain(0);
        assert_eq!(epsilon_weight(&p, &a), Monomial::var(&sig, sig.t_var(1), 1));
        let a_inv = Occurrence::new(0, OperatorWord::letter(0)).inverse();
        assert_eq!(
            epsilon_weight(&p, &a_inv),
            Monomial::var(&sig, sig.t_var(1), -1)
        );
        assert_eq!(
            epsilon_weight(&p, &Occurrence::plain(1)),
            Monomial::var(&sig, sig.t_var(2), 1)
        );
    }

    #[test]
    fn kishino_first_two_rows() {
        let p = parse_presentation(KISHINO).unwrap();
        let r1 = &p.relators()[0];
        assert_eq!(fox_derivative(&p, r1, 0), poly(&p, "x - x*y - x*t"));
        assert_eq!(fox_derivative(&p, r1, 1), poly(&p, "t"));
        assert!(fox_derivative(&p, r1, 2).is_zero());
        let r2 = &p.relators()[1];
        assert_eq!(fox_derivative(&p, r2, 0), poly(&p, "x - x*t - 1"));
        assert_eq!(fox_derivative(&p, r2, 3), poly(&p, "v*t"));
    }

    #[test]
    fn single_symbol_words() {
        let p = parse_presentation("genus 1\ngenerators a b\n").unwrap();
        let gamma = OperatorWord::from_letters([(0, 1), (1, 1), (0, 1)]);
        let r = Relator::from_word(vec![Occurrence::new(0, gamma)]);
        assert_eq!(fox_derivative(&p, &r, 0), poly(&p, "x^2*y"));
        assert!(fox_derivative(&p, &r, 1).is_zero());
    }

    #[test]
    fn matrix_shapes() {
        let p = parse_presentation("genus 1\ngenerators a\n").unwrap();
        let m = alexander_matrix(&p);
        assert_eq!((m.rows(), m.cols()), (0, 1));

        let p = parse_presentation("genus 1\ngenerators a\nrelator a a~\n").unwrap();
        let m = alexander_matrix(&p);
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.get(0, 0).is_zero());
    }

    #[test]
    fn unreduced_cancelling_pair_contributes_nothing() {
        let p = parse_presentation("genus 1\ngenerators a\n").unwrap();
        let o = Occurrence::new(0, OperatorWord::letter(1));
        let r = Relator::from_word(vec![o.clone(), o.inverse()]);
        assert!(fox_derivative(&p, &r, 0).is_zero());
    }

    #[test]
    fn kishino_rows_vanish_under_q() {
        let p = parse_presentation(KISHINO).unwrap();
        let q = Substitution::kill_surface(p.signature());
        for j in 0..4 {
            let row = fox_row(&p, j);
            let total = row
                .entries
                .iter()
                .fold(LaurentPoly::zero(p.signature()), |acc, e| {
                    &acc + &e.specialize(&q).unwrap()
                });
            assert!(total.is_zero(), "row {j}");
        }
    }
}
