//! Plain-text code files.
//!
//! ```text
//! q=2 m=3 n=3 k=2 modulus=11 alpha=2,4,5
//! 2 0 5
//! 0 4 5
//! ```
//!
//! The header is followed by `k` rows of `n` integer-encoded field elements.

use std::fmt;
use std::str::FromStr;

use rankembed::embedding::EmbeddedCode;
use rankembed::field::find_modulus;
use rankembed::{Alpha, Elem, FieldCtx, LinearCode, Matrix, RankCode};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CodeFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header field `{0}`")]
    MissingField(&'static str),
    #[error("modulus {found} does not match the canonical modulus {expected} for q={q}, m={m}")]
    WrongModulus {
        q: u64,
        m: u32,
        found: u64,
        expected: u64,
    },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error(transparent)]
    Field(#[from] rankembed::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub q: u64,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub modulus: u64,
    pub alpha: Option<Vec<u64>>,
    pub rows: Vec<Vec<u64>>,
}

fn parse_num<T: FromStr>(s: &str, line: usize, what: &str) -> Result<T, CodeFileError> {
    s.parse().map_err(|_| CodeFileError::Syntax {
        line,
        msg: format!("invalid {what} `{s}`"),
    })
}

impl CodeFile {
    pub fn ctx(&self) -> Result<FieldCtx, CodeFileError> {
        Ok(FieldCtx::with_modulus(self.q, self.m, self.modulus)?)
    }

    pub fn from_linear_code(code: &LinearCode) -> Self {
        Self::from_matrix(code.generator(), None)
    }

    pub fn from_rank_code(code: &RankCode) -> Self {
        Self::from_matrix(code.generator(), None)
    }

    pub fn from_embedded(e: &EmbeddedCode) -> Self {
        let alpha = e.alpha.values().iter().map(|a| a.0).collect();
        Self::from_matrix(e.result.generator(), Some(alpha))
    }

    pub fn from_matrix(g: &Matrix, alpha: Option<Vec<u64>>) -> Self {
        let ctx = g.ctx();
        CodeFile {
            q: ctx.q(),
            m: ctx.m(),
            n: g.cols(),
            k: g.rows(),
            modulus: ctx.modulus(),
            alpha,
            rows: (0..g.rows())
                .map(|i| g.row(i).iter().map(|e| e.0).collect())
                .collect(),
        }
    }

    /// The stored rows as a matrix over F_{q^m}.
    pub fn matrix(&self) -> Result<Matrix, CodeFileError> {
        let ctx = self.ctx()?;
        let rows: Vec<Vec<Elem>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().map(Elem).collect())
            .collect();
        Ok(Matrix::from_rows(ctx, self.n, &rows)?)
    }

    pub fn alpha(&self) -> Result<Option<Alpha>, CodeFileError> {
        let ctx = self.ctx()?;
        self.alpha
            .as_ref()
            .map(|a| Ok(Alpha::new(ctx, a.iter().copied().map(Elem).collect())?))
            .transpose()
    }

    /// The code over F_q; only for `m = 1` files.
    pub fn linear_code(&self) -> Result<LinearCode, CodeFileError> {
        if self.m != 1 {
            return Err(rankembed::Error::FieldMismatch.into());
        }
        Ok(LinearCode::from_generator(self.matrix()?)?)
    }

    pub fn rank_code(&self) -> Result<RankCode, CodeFileError> {
        Ok(RankCode::from_generator(self.matrix()?)?)
    }

    fn validate(&self) -> Result<(), CodeFileError> {
        let expected = find_modulus(self.q, self.m)?;
        if expected != self.modulus {
            return Err(CodeFileError::WrongModulus {
                q: self.q,
                m: self.m,
                found: self.modulus,
                expected,
            });
        }
        if self.rows.len() != self.k {
            return Err(CodeFileError::RowCount {
                expected: self.k,
                found: self.rows.len(),
            });
        }
        self.matrix()?;
        if let Some(a) = &self.alpha {
            if a.len() != self.n {
                return Err(rankembed::Error::DimensionMismatch(format!(
                    "alpha has {} entries for n={}",
                    a.len(),
                    self.n
                ))
                .into());
            }
            self.alpha()?;
        }
        Ok(())
    }
}

impl FromStr for CodeFile {
    type Err = CodeFileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(CodeFileError::Syntax {
            line: 1,
            msg: "empty file".into(),
        })?;
        let (mut q, mut m, mut n, mut k, mut modulus, mut alpha) =
            (None, None, None, None, None, None);
        for token in header.split_whitespace() {
            let (key, value) = token.split_once('=').ok_or(CodeFileError::Syntax {
                line: 1,
                msg: format!("expected key=value, found `{token}`"),
            })?;
            match key {
                "q" => q = Some(parse_num(value, 1, "q")?),
                "m" => m = Some(parse_num(value, 1, "m")?),
                "n" => n = Some(parse_num(value, 1, "n")?),
                "k" => k = Some(parse_num(value, 1, "k")?),
                "modulus" => modulus = Some(parse_num(value, 1, "modulus")?),
                "alpha" => {
                    alpha = Some(
                        value
                            .split(',')
                            .map(|v| parse_num(v, 1, "alpha entry"))
                            .collect::<Result<Vec<u64>, _>>()?,
                    )
                }
                other => {
                    return Err(CodeFileError::Syntax {
                        line: 1,
                        msg: format!("unknown header field `{other}`"),
                    })
                }
            }
        }
        let q = q.ok_or(CodeFileError::MissingField("q"))?;
        let m = m.ok_or(CodeFileError::MissingField("m"))?;
        let n: usize = n.ok_or(CodeFileError::MissingField("n"))?;
        let k = k.ok_or(CodeFileError::MissingField("k"))?;
        let modulus = modulus.ok_or(CodeFileError::MissingField("modulus"))?;

        let mut rows = Vec::new();
        for (idx, line) in lines {
            let row = line
                .split_whitespace()
                .map(|v| parse_num(v, idx + 1, "field element"))
                .collect::<Result<Vec<u64>, _>>()?;
            if row.len() != n {
                return Err(CodeFileError::Syntax {
                    line: idx + 1,
                    msg: format!("expected {n} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        let file = CodeFile {
            q,
            m,
            n,
            k,
            modulus,
            alpha,
            rows,
        };
        file.validate()?;
        Ok(file)
    }
}

fn join(xs: &[u64], sep: &str) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for CodeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} m={} n={} k={} modulus={}",
            self.q, self.m, self.n, self.k, self.modulus
        )?;
        if let Some(a) = &self.alpha {
            write!(f, " alpha={}", join(a, ","))?;
        }
        writeln!(f)?;
        for row in &self.rows {
            writeln!(f, "{}", join(row, " "))?;
        }
        Ok(())
    }
}
