use std::fmt;

use super::{LaurentError, LaurentPoly, Monomial, RingSignature, VarNames};

/// Rectangular matrix over `R_d` with labelled rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    sig: RingSignature,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl PolyMatrix {
    pub fn zeros(sig: &RingSignature, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            sig: *sig,
            rows,
            cols,
            entries: vec![LaurentPoly::zero(sig); rows * cols],
            row_labels: (1..=rows).map(|i| format!("r{i}")).collect(),
            col_labels: (1..=cols).map(|j| format!("c{j}")).collect(),
        }
    }

    pub fn identity(sig: &RingSignature, n: usize) -> Self {
        let mut m = Self::zeros(sig, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(sig));
        }
        m
    }

    /// Builds a matrix from rows of entries; every row must have the same length and
    /// every entry the given signature.
    pub fn from_rows(
        sig: &RingSignature,
        rows: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self, LaurentError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(sig, nrows, ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(LaurentError::MatrixFile {
                    line: i + 1,
                    msg: format!("row {} has {} entries, expected {ncols}", i + 1, row.len()),
                });
            }
            for (j, e) in row.into_iter().enumerate() {
                sig.check(e.signature())?;
                m.set(i, j, e);
            }
        }
        Ok(m)
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        self
    }

    pub fn signature(&self) -> &RingSignature {
        &self.sig
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        debug_assert_eq!(p.signature(), &self.sig);
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
        self.row_labels.swap(a, b);
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(&self.sig, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m.row_labels = rows.iter().map(|&i| self.row_labels[i].clone()).collect();
        m.col_labels = cols.iter().map(|&j| self.col_labels[j].clone()).collect();
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first multiplied by a monomial so that all entries are ordinary
    /// polynomials; the accumulated monomial is divided back out at the end.
    pub fn determinant(&self) -> Result<LaurentPoly, LaurentError> {
        if !self.is_square() {
            return Err(LaurentError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let sig = self.sig;
        if n == 0 {
            return Ok(LaurentPoly::one(&sig));
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut shift = Monomial::one(&sig);
        for row in a.iter_mut() {
            let min = row
                .iter()
                .filter_map(|p| p.min_exponents())
                .reduce(|acc, m| {
                    Monomial::from_exponents(
                        acc.exponents()
                            .iter()
                            .zip(m.exponents())
                            .map(|(x, y)| *x.min(y))
                            .collect(),
                    )
                });
            let Some(min) = min else {
                return Ok(LaurentPoly::zero(&sig));
            };
            let s = min.inverse();
            for p in row.iter_mut() {
                *p = p.mul_monomial(&s);
            }
            shift = shift.mul(&s);
        }

        let mut negate = false;
        let mut prev = LaurentPoly::one(&sig);
        for k in 0..n {
            let pivot = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].len());
            let Some(p) = pivot else {
                return Ok(LaurentPoly::zero(&sig));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            if k + 1 == n {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
                }
                a[i][k] = LaurentPoly::zero(&sig);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].mul_monomial(&shift.inverse());
        Ok(if negate { -det } else { det })
    }

    /// All canonicalized `k x k` minors, rows-major over lexicographic index sets.
    /// `k = 0` gives the single minor 1; `k > min(m, n)` gives none.
    pub fn minors(&self, k: usize) -> Vec<LaurentPoly> {
        if k == 0 {
            return vec![LaurentPoly::one(&self.sig)];
        }
        if k > self.rows.min(self.cols) {
            return Vec::new();
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                let det = self
                    .submatrix(rs, cs)
                    .determinant()
                    .expect("square submatrix");
                out.push(det.canonicalize());
            }
        }
        out
    }

    /// Applies `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(&LaurentPoly) -> LaurentPoly) -> PolyMatrix {
        let mut m = self.clone();
        for e in m.entries.iter_mut() {
            *e = f(e);
        }
        m
    }

    /// Serializes in the matrix file format: a `matrix g d m n` header followed by
    /// one entry per line in row-major order.
    pub fn to_file_string(&self, names: &VarNames) -> String {
        let mut s = format!(
            "matrix {} {} {} {}\n",
            self.sig.genus(),
            self.sig.components(),
            self.rows,
            self.cols
        );
        for e in &self.entries {
            s.push_str(&e.to_string_with(names));
            s.push('\n');
        }
        s
    }

    pub fn parse_file(text: &str) -> Result<PolyMatrix, LaurentError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(LaurentError::MatrixFile {
            line: 1,
            msg: "empty matrix file".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let bad_header = || LaurentError::MatrixFile {
            line: hline,
            msg: "expected header 'matrix <genus> <components> <rows> <cols>'".into(),
        };
        if fields.len() != 5 || fields[0] != "matrix" {
            return Err(bad_header());
        }
        let nums: Vec<usize> = fields[1..]
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad_header())?;
        let sig = RingSignature::new(nums[0], nums[1])?;
        let (rows, cols) = (nums[2], nums[3]);
        let mut m = PolyMatrix::zeros(&sig, rows, cols);
        let mut count = 0;
        for (line, l) in lines {
            if count == rows * cols {
                return Err(LaurentError::MatrixFile {
                    line,
                    msg: "too many entries".into(),
                });
            }
            let p = LaurentPoly::parse(&sig, l).map_err(|e| LaurentError::MatrixFile {
                line,
                msg: e.to_string(),
            })?;
            m.entries[count] = p;
            count += 1;
        }
        if count != rows * cols {
            return Err(LaurentError::MatrixFile {
                line: hline,
                msg: format!("expected {} entries, found {count}", rows * cols),
            });
        }
        Ok(m)
    }

    pub fn to_string_with(&self, names: &VarNames) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|p| p.to_string_with(names))
                    .collect()
            })
            .collect();
        let mut widths = vec![0; self.cols];
        for row in &cells {
            for (j, c) in row.iter().enumerate() {
                widths[j] = widths[j].max(c.len());
            }
        }
        let mut s = String::new();
        for row in &cells {
            let padded: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{:<w$}", c, w = widths[j]))
                .collect();
            s.push_str("[ ");
            s.push_str(&padded.join(" | "));
            s.push_str(" ]\n");
        }
        s
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&VarNames::canonical(&self.sig)))
    }
}

/// Lexicographically ordered `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
