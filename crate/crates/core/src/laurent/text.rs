//! Polynomial text syntax: `(x*y - y)*t^2 + (y - x)*t + (x - 1)`.
//!
//! Output always uses `*` between factors and `^` for exponents other than 1.
//! Input is more forgiving: juxtaposition multiplies (`2x`, `(t-1)(x-1)`, `uvx`),
//! square brackets group, and exponents may be written `^-1`, `^(-1)` or `^{-1}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LaurentError, LaurentPoly, Monomial, RingSignature};

/// Display and lookup names for the variables of a ring.
#[derive(Debug, Clone)]
pub struct VarNames {
    names: Vec<String>,
    aliases: Vec<(String, usize)>,
}

impl VarNames {
    /// `x1, y1, ..., xg, yg, t1, ..., td`.
    pub fn canonical(sig: &RingSignature) -> Self {
        let mut names = Vec::with_capacity(sig.nvars());
        for i in 1..=sig.genus() {
            names.push(format!("x{i}"));
            names.push(format!("y{i}"));
        }
        for j in 1..=sig.components() {
            names.push(format!("t{j}"));
        }
        VarNames {
            names,
            aliases: alias_table(sig),
        }
    }

    /// Short names where the ring is small enough: `x, y` for genus 1, `x, y, u, v`
    /// for genus 2, `t` for a knot. Other variables keep their canonical names.
    pub fn aliased(sig: &RingSignature) -> Self {
        let mut v = Self::canonical(sig);
        for (alias, idx) in v.aliases.clone() {
            v.names[idx] = alias;
        }
        v
    }

    pub fn for_display(sig: &RingSignature, alias: bool) -> Self {
        if alias {
            Self::aliased(sig)
        } else {
            Self::canonical(sig)
        }
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    /// Resolves an input name, accepting both canonical names and aliases.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).or_else(|| {
            self.aliases
                .iter()
                .find(|(a, _)| a == name)
                .map(|(_, i)| *i)
        })
    }
}

fn alias_table(sig: &RingSignature) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let letters: &[&str] = match sig.genus() {
        1 => &["x", "y"],
        2 => &["x", "y", "u", "v"],
        _ => &[],
    };
    for (i, l) in letters.iter().enumerate() {
        out.push((l.to_string(), i));
    }
    if sig.components() == 1 {
        out.push(("t".to_string(), sig.t_var(1)));
    }
    out
}

pub(super) fn format_monomial(m: &Monomial, names: &VarNames) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names.name(i).to_string()),
            _ => parts.push(format!("{}^{}", names.name(i), e)),
        }
    }
    parts.join("*")
}

pub(super) fn format_poly(p: &LaurentPoly, names: &VarNames) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&format_monomial(m, names));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Open(char),
    Close(char),
}

fn tokenize(names: &VarNames, s: &str) -> Result<Vec<(usize, Tok)>, LaurentError> {
    let err = |offset: usize, msg: String| LaurentError::Parse { offset, msg };
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (off, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' => {
                toks.push((off, Tok::Plus));
                i += 1;
            }
            '-' | '\u{2212}' => {
                toks.push((off, Tok::Minus));
                i += 1;
            }
            '*' | '\u{00b7}' => {
                toks.push((off, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((off, Tok::Caret));
                i += 1;
            }
            '(' | '[' | '{' => {
                toks.push((off, Tok::Open(ch)));
                i += 1;
            }
            ')' | ']' | '}' => {
                toks.push((off, Tok::Close(ch)));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                toks.push((off, Tok::Num(digits.parse().expect("ascii digits"))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let ident: String = chars[start..i].iter().map(|(_, c)| c).collect();
                if let Some(v) = names.lookup(&ident) {
                    toks.push((off, Tok::Var(v)));
                } else if ident.chars().all(|c| c.is_ascii_alphabetic()) {
                    // juxtaposed single-letter aliases such as `uvxy`
                    for (k, c) in ident.chars().enumerate() {
                        let v = names
                            .lookup(&c.to_string())
                            .ok_or_else(|| err(off, format!("unknown variable '{ident}'")))?;
                        toks.push((off + k, Tok::Var(v)));
                    }
                } else {
                    return Err(err(off, format!("unknown variable '{ident}'")));
                }
            }
            other => return Err(err(off, format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

struct Parser {
    sig: RingSignature,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(o, _)| *o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse {
            offset: self.offset(),
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = LaurentPoly::zero(&self.sig);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Var(_) | Tok::Open('(' | '['))
        )
    }

    fn term(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = self.power()?;
        loop {
            if matches!(self.peek(), Some(Tok::Star)) {
                self.bump();
                let f = self.power()?;
                acc = &acc * &f;
            } else if self.starts_factor() {
                let f = self.power()?;
                acc = &acc * &f;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<LaurentPoly, LaurentError> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.bump();
        let e = self.exponent()?;
        if e >= 0 {
            let e = u32::try_from(e).or_else(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            match base.as_unit() {
                Some(u) => {
                    let m = u.monomial.pow(e);
                    let neg = u.negative && e.rem_euclid(2) == 1;
                    let c = if neg { -BigInt::one() } else { BigInt::one() };
                    Ok(LaurentPoly::term(&self.sig, m, c))
                }
                None => self.err("negative power of a non-unit"),
            }
        }
    }

    fn exponent(&mut self) -> Result<i64, LaurentError> {
        let close = match self.peek() {
            Some(Tok::Open('(')) => Some(')'),
            Some(Tok::Open('{')) => Some('}'),
            _ => None,
        };
        if close.is_some() {
            self.bump();
        }
        let negative = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        let n = match self.bump() {
            Some(Tok::Num(n)) => n,
            _ => {
                self.pos -= 1;
                return self.err("expected integer exponent");
            }
        };
        let n: i64 = i64::try_from(&n).or_else(|_| self.err("exponent too large"))?;
        if let Some(c) = close {
            if self.bump() != Some(Tok::Close(c)) {
                self.pos -= 1;
                return self.err(format!("expected '{c}'"));
            }
        }
        Ok(if negative { -n } else { n })
    }

    fn atom(&mut self) -> Result<LaurentPoly, LaurentError> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok(LaurentPoly::constant(&self.sig, n)),
            Some(Tok::Var(v)) => Ok(LaurentPoly::var(&self.sig, v, 1)),
            Some(Tok::Minus) => Ok(-self.power()?),
            Some(Tok::Open(open)) if open == '(' || open == '[' => {
                let close = if open == '(' { ')' } else { ']' };
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::Close(c)) if c == close => Ok(inner),
                    _ => {
                        self.pos -= 1;
                        self.err(format!("expected '{close}'"))
                    }
                }
            }
            Some(_) => {
                self.pos -= 1;
                self.err("expected a number, variable or '('")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse_poly(sig: &RingSignature, s: &str) -> Result<LaurentPoly, LaurentError> {
    let names = VarNames::canonical(sig);
    let toks = tokenize(&names, s)?;
    if toks.is_empty() {
        return Err(LaurentError::Parse {
            offset: 0,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        sig: *sig,
        toks,
        pos: 0,
        len: s.len(),
    };
    let r = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("trailing input");
    }
    debug_assert!(r.terms().all(|(_, c)| !c.is_zero()));
    Ok(r)
}
