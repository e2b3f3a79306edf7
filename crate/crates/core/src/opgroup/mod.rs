//! Γ-operator group presentations `<a1, ..., an | r1, ..., rm>_Γ`, where
//! `Γ = π1(S) = <x1, y1, ..., xg, yg | Π[xi, yi]>`.
//!
//! Generators stand for orbits of arcs of the lifted diagram; a relator is a word in
//! symbols `a^γ` with `γ` a genuine (non-abelian) word in the surface generators.

mod parse;

pub use parse::parse_presentation;

use std::fmt;

use thiserror::Error;

use crate::laurent::{RingSignature, VarNames};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("line {line}, column {col}: undeclared generator '{name}'")]
    UndeclaredGenerator {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("line {line}, column {col}: '{name}' is not a surface generator for genus {genus}")]
    UnknownOperator {
        name: String,
        genus: usize,
        line: usize,
        col: usize,
    },
    #[error("generator '{0}' declared twice")]
    DuplicateGenerator(String),
    #[error("generator name '{0}' clashes with a surface generator")]
    ReservedName(String),
    #[error("missing '{0}' line")]
    MissingDirective(&'static str),
    #[error("'{0}' given more than once")]
    RepeatedDirective(&'static str),
    #[error("invalid signature: genus {genus}, components {components} (both must be positive)")]
    InvalidSignature { genus: usize, components: usize },
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("generator '{generator}' assigned to component {index}, but there are {components} components")]
    ComponentOutOfRange {
        generator: String,
        index: usize,
        components: usize,
    },
    #[error("generator '{0}' has no component assignment")]
    MissingComponent(String),
    #[error("component {0} has no generators")]
    EmptyComponent(usize),
    #[error("relator {relator} refers to generator index {generator}, out of range")]
    BadGeneratorIndex { relator: usize, generator: usize },
    #[error("operator letter {letter} out of range for genus {genus}")]
    BadOperatorLetter { letter: usize, genus: usize },
}

/// Word in the surface generators. Letter `2(i-1)` is `x_i`, `2(i-1)+1` is `y_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct OperatorWord(Vec<(usize, i8)>);

impl OperatorWord {
    pub fn identity() -> Self {
        OperatorWord(Vec::new())
    }

    /// Builds a word from `(letter, ±1)` pairs, cancelling adjacent inverse letters.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::new();
        for (l, s) in letters {
            debug_assert!(s == 1 || s == -1);
            if out.last() == Some(&(l, -s)) {
                out.pop();
            } else {
                out.push((l, s));
            }
        }
        OperatorWord(out)
    }

    pub fn letter(letter: usize) -> Self {
        OperatorWord(vec![(letter, 1)])
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        OperatorWord(self.0.iter().rev().map(|&(l, s)| (l, -s)).collect())
    }

    pub fn concat(&self, other: &OperatorWord) -> Self {
        Self::from_letters(self.0.iter().chain(&other.0).copied())
    }

    pub fn to_string_with(&self, names: &VarNames) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(l, s)| {
                if s > 0 {
                    names.name(l).to_string()
                } else {
                    format!("{}^-1", names.name(l))
                }
            })
            .collect();
        parts.join(" ")
    }
}

/// Exponent-sum vector of an operator word in `H1(Γ) = Z^{2g}`.
pub fn abelianize_operator(w: &OperatorWord, genus: usize) -> Vec<i64> {
    let mut v = vec![0i64; 2 * genus];
    for &(l, s) in w.letters() {
        v[l] += i64::from(s);
    }
    v
}

/// A symbol `a^γ` or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub generator: usize,
    pub sign: i8,
    pub operator: OperatorWord,
}

impl Occurrence {
    pub fn new(generator: usize, operator: OperatorWord) -> Self {
        Occurrence {
            generator,
            sign: 1,
            operator,
        }
    }

    pub fn plain(generator: usize) -> Self {
        Self::new(generator, OperatorWord::identity())
    }

    /// `(a^γ)^{-1}`: the operator is kept and the sign flips.
    pub fn inverse(&self) -> Self {
        Occurrence {
            generator: self.generator,
            sign: -self.sign,
            operator: self.operator.clone(),
        }
    }

    fn cancels(&self, other: &Occurrence) -> bool {
        self.generator == other.generator
            && self.sign == -other.sign
            && self.operator == other.operator
    }
}

/// A relator word, read as a word equal to the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Relator {
    word: Vec<Occurrence>,
}

impl Relator {
    /// Takes the word as given, without reduction.
    pub fn from_word(word: Vec<Occurrence>) -> Self {
        Relator { word }
    }

    /// The relator `lhs * rhs^{-1}` for the equation `lhs = rhs`.
    pub fn from_equation(lhs: Vec<Occurrence>, rhs: &[Occurrence]) -> Self {
        let mut word = lhs;
        word.extend(rhs.iter().rev().map(Occurrence::inverse));
        Relator { word }
    }

    pub fn occurrences(&self) -> &[Occurrence] {
        &self.word
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Cancels adjacent occurrences `a^γ (a^γ)^{-1}` with equal operator words.
    pub fn freely_reduced(&self) -> Relator {
        let mut out: Vec<Occurrence> = Vec::with_capacity(self.word.len());
        for o in &self.word {
            if out.last().is_some_and(|top| top.cancels(o)) {
                out.pop();
            } else {
                out.push(o.clone());
            }
        }
        Relator { word: out }
    }

    pub fn inverse(&self) -> Relator {
        Relator {
            word: self.word.iter().rev().map(Occurrence::inverse).collect(),
        }
    }

    pub fn concat(&self, other: &Relator) -> Relator {
        Relator {
            word: self.word.iter().chain(&other.word).cloned().collect(),
        }
    }
}

/// Orbit presentation together with its ring signature and component map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPresentation {
    sig: RingSignature,
    generators: Vec<String>,
    components: Vec<usize>,
    relators: Vec<Relator>,
}

impl OrbitPresentation {
    /// Validates and builds a presentation. `components[i]` is the 1-based link
    /// component of generator `i`; the map must hit every component.
    pub fn new(
        sig: RingSignature,
        generators: Vec<String>,
        components: Vec<usize>,
        relators: Vec<Relator>,
    ) -> Result<Self, PresentationError> {
        if generators.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        for (i, name) in generators.iter().enumerate() {
            if generators[..i].contains(name) {
                return Err(PresentationError::DuplicateGenerator(name.clone()));
            }
            if (1..=sig.genus()).any(|i| *name == format!("x{i}") || *name == format!("y{i}")) {
                return Err(PresentationError::ReservedName(name.clone()));
            }
        }
        if components.len() != generators.len() {
            let missing = generators[components.len().min(generators.len())..]
                .first()
                .cloned()
                .unwrap_or_default();
            return Err(PresentationError::MissingComponent(missing));
        }
        let d = sig.components();
        for (name, &c) in generators.iter().zip(&components) {
            if c == 0 || c > d {
                return Err(PresentationError::ComponentOutOfRange {
                    generator: name.clone(),
                    index: c,
                    components: d,
                });
            }
        }
        for c in 1..=d {
            if !components.contains(&c) {
                return Err(PresentationError::EmptyComponent(c));
            }
        }
        for (j, r) in relators.iter().enumerate() {
            for o in r.occurrences() {
                if o.generator >= generators.len() {
                    return Err(PresentationError::BadGeneratorIndex {
                        relator: j + 1,
                        generator: o.generator,
                    });
                }
                if let Some(&(l, _)) = o
                    .operator
                    .letters()
                    .iter()
                    .find(|(l, _)| *l >= sig.gamma_vars())
                {
                    return Err(PresentationError::BadOperatorLetter {
                        letter: l,
                        genus: sig.genus(),
                    });
                }
            }
        }
        Ok(OrbitPresentation {
            sig,
            generators,
            components,
            relators,
        })
    }

    pub fn signature(&self) -> &RingSignature {
        &self.sig
    }

    pub fn genus(&self) -> usize {
        self.sig.genus()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// 1-based component of generator `i`.
    pub fn component_of(&self, i: usize) -> usize {
        self.components[i]
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    /// Distinct abelianized operators occurring in the relators, sorted.
    pub fn relator_operators(&self) -> Vec<Vec<i64>> {
        let mut ops: Vec<Vec<i64>> = self
            .relators
            .iter()
            .flat_map(|r| r.occurrences())
            .map(|o| abelianize_operator(&o.operator, self.genus()))
            .collect();
        ops.sort();
        ops.dedup();
        ops
    }

    fn occurrence_text(&self, o: &Occurrence, names: &VarNames) -> String {
        let mut s = self.generators[o.generator].clone();
        if o.sign < 0 {
            s.push('~');
        }
        if !o.operator.is_identity() {
            s.push('{');
            s.push_str(&o.operator.to_string_with(names));
            s.push('}');
        }
        s
    }

    /// Relator `j` as a bare word in the file syntax (`1` for the empty word).
    pub fn relator_text(&self, j: usize, names: &VarNames) -> String {
        let r = &self.relators[j];
        if r.is_empty() {
            return "1".to_string();
        }
        r.occurrences()
            .iter()
            .map(|o| self.occurrence_text(o, names))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Serializes in the presentation file format; `parse_presentation` reads it back.
    pub fn to_text(&self, alias: bool) -> String {
        let names = VarNames::for_display(&self.sig, alias);
        let mut s = format!(
            "genus {}\ncomponents {}\ngenerators {}\n",
            self.sig.genus(),
            self.sig.components(),
            self.generators.join(" ")
        );
        for (g, c) in self.generators.iter().zip(&self.components) {
            s.push_str(&format!("component {g} {c}\n"));
        }
        for j in 0..self.relators.len() {
            s.push_str(&format!("relator {}\n", self.relator_text(j, &names)));
        }
        s
    }
}

impl fmt::Display for OrbitPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::canonical(&self.sig);
        let rels: Vec<String> = (0..self.relators.len())
            .map(|j| self.relator_text(j, &names))
            .collect();
        write!(
            f,
            "<{} | {}>_Γ",
            self.generators.join(", "),
            rels.join(", ")
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingSign {
    Positive,
    Negative,
}

/// A crossing of the diagram inside the fundamental domain. All three occurrences
/// are positive symbols `a^γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub over: Occurrence,
    pub under_in: Occurrence,
    pub under_out: Occurrence,
    pub sign: CrossingSign,
}

/// Wirtinger relator of a crossing: `o u_in o^{-1} u_out^{-1}` for a positive
/// crossing, `o^{-1} u_in o u_out^{-1}` for a negative one.
pub fn wirtinger_relator(cr: &Crossing) -> Relator {
    debug_assert!(cr.over.sign == 1 && cr.under_in.sign == 1 && cr.under_out.sign == 1);
    let o = cr.over.clone();
    let (first, third) = match cr.sign {
        CrossingSign::Positive => (o.clone(), o.inverse()),
        CrossingSign::Negative => (o.inverse(), o),
    };
    Relator::from_word(vec![
        first,
        cr.under_in.clone(),
        third,
        cr.under_out.inverse(),
    ])
}

/// Ordinary presentation: letter `(index, ±1)`, generators listed by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Vec<(usize, i8)>>,
}

impl GroupPresentation {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<(usize, i8)>] {
        &self.relators
    }

    pub fn word_text(&self, word: &[(usize, i8)]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|&(l, s)| {
                if s > 0 {
                    self.generators[l].clone()
                } else {
                    format!("{}^-1", self.generators[l])
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|w| self.word_text(w)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

/// Presentation of `π1(S × I \ ℓ)`: each `a^γ` becomes `γ a γ^{-1}` and the surface
/// relator `Π[xi, yi]` is appended.
pub fn hat_presentation(p: &OrbitPresentation) -> GroupPresentation {
    let n = p.generators.len();
    let g = p.genus();
    let names = VarNames::canonical(&p.sig);
    let mut generators = p.generators.clone();
    generators.extend((0..2 * g).map(|l| names.name(l).to_string()));

    let mut relators = Vec::with_capacity(p.relators.len() + 1);
    for r in &p.relators {
        let mut w = Vec::new();
        for o in r.occurrences() {
            w.extend(o.operator.letters().iter().map(|&(l, s)| (n + l, s)));
            w.push((o.generator, o.sign));
            w.extend(
                o.operator
                    .inverse()
                    .letters()
                    .iter()
                    .map(|&(l, s)| (n + l, s)),
            );
        }
        relators.push(w);
    }
    let mut surface = Vec::with_capacity(4 * g);
    for i in 0..g {
        let (x, y) = (n + 2 * i, n + 2 * i + 1);
        surface.extend([(x, 1), (y, 1), (x, -1), (y, -1)]);
    }
    relators.push(surface);
    GroupPresentation {
        generators,
        relators,
    }
}

/// Shape report: orbit counts and which Δ conventions apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareDiagnostic {
    pub generators: usize,
    pub relators: usize,
    pub square: bool,
    pub message: String,
}

pub fn validate_square(p: &OrbitPresentation) -> SquareDiagnostic {
    let n = p.generators.len();
    let m = p.relators.len();
    let message = if n == m {
        format!("{n} generator orbits, {m} relator orbits: square, Δ0 is the determinant")
    } else if m < n {
        format!(
            "{n} generator orbits, {m} relator orbits: not square; Δi = 0 for i < {}, Δi = 1 for i >= {n}",
            n - m
        )
    } else {
        format!("{n} generator orbits, {m} relator orbits: not square; Δi from {n}x{n} and smaller minors")
    };
    SquareDiagnostic {
        generators: n,
        relators: m,
        square: n == m,
        message,
    }
}
