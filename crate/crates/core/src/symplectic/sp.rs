use std::collections::HashSet;
use std::fmt;

use super::{SymplecticError, SymplecticForm};

/// Element of `Sp(2g, Z)`, stored row-major, acting on column exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpElement {
    genus: usize,
    entries: Vec<i64>,
}

/// True iff `M^T J M = J`. `rows` must be `2g x 2g`.
pub fn sp_membership(genus: usize, rows: &[Vec<i64>]) -> Result<bool, SymplecticError> {
    let n = 2 * genus;
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(SymplecticError::DimensionMismatch {
            expected: n,
            rows: rows.len(),
            cols: ncols,
        });
    }
    let flat: Vec<i64> = rows.iter().flatten().copied().collect();
    Ok(is_symplectic(genus, &flat))
}

fn is_symplectic(genus: usize, m: &[i64]) -> bool {
    let n = 2 * genus;
    let form = SymplecticForm::new(genus);
    let col = |j: usize| -> Vec<i64> { (0..n).map(|i| m[i * n + j]).collect() };
    let cols: Vec<Vec<i64>> = (0..n).map(col).collect();
    let j = form.matrix();
    (0..n).all(|a| (0..n).all(|b| form.pairing(&cols[a], &cols[b]) == j[a * n + b]))
}

impl SpElement {
    /// Validating constructor from rows.
    pub fn from_rows(genus: usize, rows: &[Vec<i64>]) -> Result<Self, SymplecticError> {
        if !sp_membership(genus, rows)? {
            return Err(SymplecticError::NotSymplectic);
        }
        Ok(SpElement {
            genus,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn identity(genus: usize) -> Self {
        let n = 2 * genus;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        SpElement { genus, entries }
    }

    /// Symplectic transvection `w -> w + <w, v> v`.
    pub fn transvection(genus: usize, v: &[i64]) -> Self {
        let n = 2 * genus;
        let form = SymplecticForm::new(genus);
        let mut entries = vec![0; n * n];
        for k in 0..n {
            let mut e = vec![0; n];
            e[k] = 1;
            let c = form.pairing(&e, v);
            for i in 0..n {
                entries[i * n + k] = e[i] + c * v[i];
            }
        }
        SpElement { genus, entries }
    }

    /// Exchanges the handle pairs `(x_i, y_i)` and `(x_j, y_j)` (0-based `i`, `j`).
    pub fn swap_handles(genus: usize, i: usize, j: usize) -> Self {
        let n = 2 * genus;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(2 * i, 2 * j);
        perm.swap(2 * i + 1, 2 * j + 1);
        let mut entries = vec![0; n * n];
        for (k, &p) in perm.iter().enumerate() {
            entries[p * n + k] = 1;
        }
        SpElement { genus, entries }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim())
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.genus)
    }

    pub fn mul(&self, other: &SpElement) -> SpElement {
        debug_assert_eq!(self.genus, other.genus);
        let n = self.dim();
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        SpElement {
            genus: self.genus,
            entries,
        }
    }

    /// `M^{-1} = -J M^T J`.
    pub fn inverse(&self) -> SpElement {
        let n = self.dim();
        let j = SymplecticForm::new(self.genus).matrix();
        let mut mt = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mt[a * n + b] = self.entries[b * n + a];
            }
        }
        let jm = SpElement {
            genus: self.genus,
            entries: j.clone(),
        };
        let prod = jm
            .mul(&SpElement {
                genus: self.genus,
                entries: mt,
            })
            .mul(&jm);
        SpElement {
            genus: self.genus,
            entries: prod.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[i * n + j] * v[j]).sum())
            .collect()
    }

    /// File format: `sp <genus>` then `2g` rows of integers.
    pub fn parse_file(text: &str) -> Result<SpElement, SymplecticError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: &str| SymplecticError::File {
            line,
            msg: msg.to_string(),
        };
        let (hl, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
        let genus = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["sp", g] => g.parse::<usize>().map_err(|_| err(hl, "invalid genus"))?,
            _ => return Err(err(hl, "expected header 'sp <genus>'")),
        };
        if genus == 0 {
            return Err(err(hl, "genus must be positive"));
        }
        let mut rows = Vec::new();
        for (ln, l) in lines {
            let row = l
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(str::parse::<i64>)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| err(ln, "invalid integer"))?;
            rows.push(row);
        }
        SpElement::from_rows(genus, &rows)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("sp {}\n", self.genus);
        for r in self.rows() {
            s.push_str(&r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for SpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                format!(
                    "({})",
                    r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
                )
            })
            .collect();
        write!(f, "({})", rows.join(", "))
    }
}

/// Generating set used for enumeration, closed under inverses and deduplicated:
/// transvections along `x_i`, `y_i` and `x_i - x_{i+1}` (the homology classes of the
/// Lickorish twist curves) with their inverses, then the handle swaps `(i, i+1)`.
pub fn sp_generators(genus: usize) -> Vec<SpElement> {
    let n = 2 * genus;
    let unit = |k: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        v[k] = 1;
        v
    };
    let mut dirs: Vec<Vec<i64>> = Vec::new();
    for i in 0..genus {
        dirs.push(unit(2 * i));
        dirs.push(unit(2 * i + 1));
    }
    for i in 0..genus.saturating_sub(1) {
        let mut v = unit(2 * i);
        v[2 * i + 2] = -1;
        dirs.push(v);
    }
    let mut out: Vec<SpElement> = Vec::new();
    for v in &dirs {
        let t = SpElement::transvection(genus, v);
        let ti = t.inverse();
        out.push(t);
        out.push(ti);
    }
    for i in 0..genus.saturating_sub(1) {
        out.push(SpElement::swap_handles(genus, i, i + 1));
    }
    let mut seen = HashSet::new();
    out.retain(|m| seen.insert(m.entries.clone()));
    out
}

/// Breadth-first enumeration of all products of at most `max_len` generators,
/// identity first, each element once, in a fixed order.
///
/// The generating set is symmetric, so every neighbour of word-length layer `k` lies
/// in layer `k-1`, `k` or `k+1`; only those three layers are kept for deduplication.
pub struct SpEnumerator {
    gens: Vec<SpElement>,
    max_len: usize,
    layer: usize,
    previous: HashSet<Vec<i64>>,
    current: Vec<SpElement>,
    current_set: HashSet<Vec<i64>>,
    pos: usize,
}

pub fn enumerate_sp(genus: usize, max_len: usize) -> SpEnumerator {
    let id = SpElement::identity(genus);
    let current_set = HashSet::from([id.entries.clone()]);
    SpEnumerator {
        gens: sp_generators(genus),
        max_len,
        layer: 0,
        previous: HashSet::new(),
        current: vec![id],
        current_set,
        pos: 0,
    }
}

impl SpEnumerator {
    /// Word length of the layer currently being emitted.
    pub fn layer(&self) -> usize {
        self.layer
    }

    fn advance_layer(&mut self) {
        let mut next = Vec::new();
        let mut next_set = HashSet::new();
        for m in &self.current {
            for g in &self.gens {
                let p = m.mul(g);
                if self.previous.contains(&p.entries) || self.current_set.contains(&p.entries) {
                    continue;
                }
                if next_set.insert(p.entries.clone()) {
                    next.push(p);
                }
            }
        }
        self.previous = std::mem::replace(&mut self.current_set, next_set);
        self.current = next;
        self.layer += 1;
        self.pos = 0;
    }
}

impl Iterator for SpEnumerator {
    type Item = SpElement;

    fn next(&mut self) -> Option<SpElement> {
        loop {
            if self.pos < self.current.len() {
                self.pos += 1;
                return Some(self.current[self.pos - 1].clone());
            }
            if self.layer >= self.max_len || self.current.is_empty() {
                return None;
            }
            self.advance_layer();
        }
    }
}
