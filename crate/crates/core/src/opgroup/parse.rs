//! Line-oriented presentation files:
//!
//! ```text
//! genus 2
//! components 1
//! generators a b c d
//! component a 1          # optional when there is one component
//! relator a{x} b = a{x y} a{x}
//! ```
//!
//! An occurrence is `name`, `name~` (inverse) or either followed by `{ops}`, where
//! `ops` is a whitespace-separated word in the surface generators with optional
//! integer powers (`{x1 y1^-1}`, `{x^2 v}`). The word `1` is the empty relator.

use crate::laurent::{RingSignature, VarNames};

use super::{Occurrence, OperatorWord, OrbitPresentation, PresentationError, Relator};

struct Line<'a> {
    number: usize,
    /// byte offset of `text` within the original line
    offset: usize,
    text: &'a str,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn parse_count(line: &Line, keyword: &'static str) -> Result<usize, PresentationError> {
    let mut it = line.text.split_whitespace().skip(1);
    let v = it.next().ok_or_else(|| {
        syntax(
            line.number,
            line.offset + 1,
            format!("'{keyword}' needs a value"),
        )
    })?;
    if it.next().is_some() {
        return Err(syntax(
            line.number,
            line.offset + 1,
            format!("'{keyword}' takes one value"),
        ));
    }
    v.parse().map_err(|_| {
        syntax(
            line.number,
            line.offset + 1,
            format!("invalid {keyword} '{v}'"),
        )
    })
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

pub fn parse_presentation(text: &str) -> Result<OrbitPresentation, PresentationError> {
    let mut genus: Option<usize> = None;
    let mut components: Option<usize> = None;
    let mut generators: Vec<String> = Vec::new();
    let mut saw_generators = false;
    let mut assignments: Vec<(Line, String, usize)> = Vec::new();
    let mut relator_lines: Vec<Line> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let offset = content.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let line = Line {
            number: i + 1,
            offset,
            text: trimmed,
        };
        let keyword = trimmed.split_whitespace().next().unwrap_or("");
        match keyword {
            "genus" => {
                if genus.is_some() {
                    return Err(PresentationError::RepeatedDirective("genus"));
                }
                genus = Some(parse_count(&line, "genus")?);
            }
            "components" => {
                if components.is_some() {
                    return Err(PresentationError::RepeatedDirective("components"));
                }
                components = Some(parse_count(&line, "components")?);
            }
            "generators" => {
                saw_generators = true;
                let mut col = line.offset + "generators".len();
                for name in trimmed["generators".len()..].split_whitespace() {
                    col = raw[col..].find(name).map_or(col, |p| col + p);
                    if !is_ident(name) {
                        return Err(syntax(
                            line.number,
                            col + 1,
                            format!("invalid generator name '{name}'"),
                        ));
                    }
                    if generators.iter().any(|g| g == name) {
                        return Err(PresentationError::DuplicateGenerator(name.to_string()));
                    }
                    generators.push(name.to_string());
                }
            }
            "component" => {
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 3 {
                    return Err(syntax(
                        line.number,
                        line.offset + 1,
                        "expected 'component <generator> <index>'",
                    ));
                }
                let idx = fields[2].parse().map_err(|_| {
                    syntax(
                        line.number,
                        line.offset + 1,
                        format!("invalid component index '{}'", fields[2]),
                    )
                })?;
                let name = fields[1].to_string();
                assignments.push((line, name, idx));
            }
            "relator" => relator_lines.push(line),
            other => {
                return Err(syntax(
                    line.number,
                    offset + 1,
                    format!("unknown directive '{other}'"),
                ));
            }
        }
    }

    let genus = genus.ok_or(PresentationError::MissingDirective("genus"))?;
    let components = components.unwrap_or(1);
    if !saw_generators {
        return Err(PresentationError::MissingDirective("generators"));
    }
    let sig = RingSignature::new(genus, components)
        .map_err(|_| PresentationError::InvalidSignature { genus, components })?;

    let mut comp_map: Vec<Option<usize>> = vec![None; generators.len()];
    for (line, name, idx) in &assignments {
        let Some(g) = generators.iter().position(|x| x == name) else {
            return Err(PresentationError::UndeclaredGenerator {
                name: name.clone(),
                line: line.number,
                col: line.offset + 1,
            });
        };
        comp_map[g] = Some(*idx);
    }
    let comp_map: Vec<usize> = comp_map
        .into_iter()
        .zip(&generators)
        .map(|(c, name)| match c {
            Some(c) => Ok(c),
            None if components == 1 => Ok(1),
            None => Err(PresentationError::MissingComponent(name.clone())),
        })
        .collect::<Result<_, _>>()?;

    let names = VarNames::canonical(&sig);
    let mut relators = Vec::with_capacity(relator_lines.len());
    for line in &relator_lines {
        let body_start = "relator".len();
        let mut lexer = WordLexer {
            line: line.number,
            base: line.offset + body_start,
            src: &line.text[body_start..],
            pos: 0,
            generators: &generators,
            names: &names,
            sig: &sig,
        };
        relators.push(lexer.relator()?.freely_reduced());
    }

    OrbitPresentation::new(sig, generators, comp_map, relators)
}

struct WordLexer<'a> {
    line: usize,
    base: usize,
    src: &'a str,
    pos: usize,
    generators: &'a [String],
    names: &'a VarNames,
    sig: &'a RingSignature,
}

impl<'a> WordLexer<'a> {
    fn col(&self) -> usize {
        self.base + self.pos + 1
    }

    fn err(&self, msg: impl Into<String>) -> PresentationError {
        syntax(self.line, self.col(), msg)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        let rest = &self.src[start..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = chars
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += end;
        Some(&rest[..end])
    }

    fn integer(&mut self) -> Result<i64, PresentationError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn relator(&mut self) -> Result<Relator, PresentationError> {
        let lhs = self.word()?;
        self.skip_ws();
        match self.peek() {
            None => Ok(Relator::from_word(lhs)),
            Some('=') => {
                self.pos += 1;
                let rhs = self.word()?;
                self.skip_ws();
                if self.peek().is_some() {
                    return Err(self.err("unexpected input after relation"));
                }
                Ok(Relator::from_equation(lhs, &rhs))
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
        }
    }

    fn word(&mut self) -> Result<Vec<Occurrence>, PresentationError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some('=') => break,
                Some('1') if out.is_empty() => {
                    self.pos += 1;
                    self.skip_ws();
                    if !matches!(self.peek(), None | Some('=')) {
                        return Err(self.err("'1' stands for the empty word and must be alone"));
                    }
                    return Ok(out);
                }
                _ => out.push(self.occurrence()?),
            }
        }
        if out.is_empty() {
            return Err(self.err("expected a word"));
        }
        Ok(out)
    }

    fn occurrence(&mut self) -> Result<Occurrence, PresentationError> {
        let col = self.col();
        let Some(name) = self.ident() else {
            return Err(self.err("expected a generator name"));
        };
        let generator = self
            .generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| PresentationError::UndeclaredGenerator {
                name: name.to_string(),
                line: self.line,
                col,
            })?;
        let mut sign = 1;
        if self.peek() == Some('~') {
            self.pos += 1;
            sign = -1;
        }
        let operator = if self.peek() == Some('{') {
            self.pos += 1;
            self.operator()?
        } else {
            OperatorWord::identity()
        };
        Ok(Occurrence {
            generator,
            sign,
            operator,
        })
    }

    fn operator(&mut self) -> Result<OperatorWord, PresentationError> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('}') => {
                    self.pos += 1;
                    return Ok(OperatorWord::from_letters(letters));
                }
                None => return Err(self.err("unclosed '{'")),
                _ => {}
            }
            let col = self.col();
            let Some(name) = self.ident() else {
                return Err(self.err("expected a surface generator"));
            };
            let mut vars = Vec::new();
            match self
                .names
                .lookup(name)
                .filter(|&v| v < self.sig.gamma_vars())
            {
                Some(v) => vars.push(v),
                None => {
                    // juxtaposed aliases such as `xy`
                    for c in name.chars() {
                        match self
                            .names
                            .lookup(&c.to_string())
                            .filter(|&v| v < self.sig.gamma_vars())
                        {
                            Some(v) => vars.push(v),
                            None => {
                                return Err(PresentationError::UnknownOperator {
                                    name: name.to_string(),
                                    genus: self.sig.genus(),
                                    line: self.line,
                                    col,
                                })
                            }
                        }
                    }
                }
            }
            let mut power = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                power = self.integer()?;
            }
            let last = vars.pop().expect("at least one letter");
            letters.extend(vars.into_iter().map(|v| (v, 1i8)));
            let s: i8 = if power < 0 { -1 } else { 1 };
            for _ in 0..power.unsigned_abs() {
                letters.push((last, s));
            }
        }
    }
}
