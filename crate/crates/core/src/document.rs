//! The algebra document format, plus the `SPEC` strings used for subspaces
//! and matrices on the command line. The grammar is in `docs/format.md`.
//!
//! ```text
//! name: c2
//! field: Q(i)
//! dim: 2
//! basis: e1, e2
//!
//! [brackets]
//! [e1, e2] = i*e1 + i*e2
//!
//! [alpha]
//! alpha(e1) = -e2
//! alpha(e2) = -e1
//! ```
//!
//! Unlisted bracket pairs are zero and `[b, a]` is filled in from `[a, b]`.
//! The `[alpha]` section holds either `alpha(name) = …` lines (unlisted images
//! are zero) or a `matrix` line followed by `dim` rows of scalars, where column
//! `j` is the image of the `j`-th basis element.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::algebra::{default_basis_names, HomLieAlgebra};
use crate::error::ParseError;
use crate::field::GaussianRational;
use crate::linalg::{add_scaled, is_zero_vector, zero_vector, Matrix, Scalar, Subspace, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    /// `Q`: every scalar must have zero imaginary part.
    Rational,
    /// `Q(i)`
    Gaussian,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Rational => "Q",
            Field::Gaussian => "Q(i)",
        }
    }

    /// The smallest field containing every scalar of the algebra.
    pub fn of(l: &HomLieAlgebra) -> Field {
        let n = l.dim();
        let structure_real = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .all(|(i, j)| l.structure_constant(i, j).iter().all(Scalar::is_real));
        if structure_real && l.alpha().entries().iter().all(Scalar::is_real) {
            Field::Rational
        } else {
            Field::Gaussian
        }
    }
}

/// A parsed document. Brackets are already skew-completed.
#[derive(Debug, Clone)]
pub struct AlgebraDocument {
    pub name: String,
    pub field: Field,
    pub basis: Vec<String>,
    /// Full tensor `c[i][j]`.
    pub structure: Vec<Vec<Vector>>,
    pub alpha: Matrix,
}

impl AlgebraDocument {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn into_algebra(self) -> HomLieAlgebra {
        HomLieAlgebra::new(self.name, self.basis, self.structure, self.alpha)
            .expect("parser produces consistent shapes")
    }
}

pub fn parse_algebra(text: &str) -> Result<HomLieAlgebra, ParseError> {
    Ok(parse_document(text)?.into_algebra())
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    /// 1-based column of the first character.
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '^' | '\'')
}

fn valid_basis_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if is_ident_start(c)) && chars.all(is_ident_char) && s != "i"
}

fn tokenize(line: &str, line_no: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            out.push(Token {
                tok: Tok::Number(chars[start..k].iter().collect()),
                col,
            });
        } else if is_ident_start(c) {
            let start = k;
            while k < chars.len() && is_ident_char(chars[k]) {
                k += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..k].iter().collect()),
                col,
            });
        } else if "[],=+-*/()".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                col,
            });
            k += 1;
        } else {
            return Err(ParseError::new(
                line_no,
                col,
                format!("unexpected character '{c}'"),
            ));
        }
    }
    Ok(out)
}

struct LineCursor<'a> {
    line: &'a str,
    line_no: usize,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> LineCursor<'a> {
    fn new(line: &'a str, line_no: usize) -> Result<Self, ParseError> {
        Ok(Self {
            line,
            line_no,
            tokens: tokenize(line, line_no)?,
            pos: 0,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.col)
            .unwrap_or_else(|| self.line.chars().count() + 1)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line_no, self.col(), message)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos < self.tokens.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(())
    }

    fn basis_index(&mut self, names: &HashMap<String, usize>) -> Result<usize, ParseError> {
        let col = self.col();
        match self.next() {
            Some(Tok::Ident(name)) => names.get(name.as_str()).copied().ok_or_else(|| {
                ParseError::new(self.line_no, col, format!("unknown basis element '{name}'"))
            }),
            _ => Err(ParseError::new(
                self.line_no,
                col,
                "expected a basis element name",
            )),
        }
    }

    /// `a[/b][i]` or `i`, already positioned at the first token.
    fn bare_coefficient(&mut self) -> Result<Scalar, ParseError> {
        let start = self.col();
        let mut text = String::new();
        if let Some(Tok::Number(n)) = self.peek().cloned() {
            self.pos += 1;
            text.push_str(&n);
            if self.eat_sym('/') {
                match self.next() {
                    Some(Tok::Number(d)) => {
                        text.push('/');
                        text.push_str(&d);
                    }
                    _ => return Err(self.err("expected denominator")),
                }
            }
        }
        if self.peek() == Some(&Tok::Ident("i".into())) {
            self.pos += 1;
            text.push('i');
        }
        GaussianRational::parse(&text).map_err(|e| e.offset(self.line_no, start - 1))
    }

    /// `( scalar )` where the scalar is re-parsed from the raw text.
    fn parenthesized_scalar(&mut self) -> Result<Scalar, ParseError> {
        let open = self.col();
        self.expect_sym('(')?;
        while !matches!(self.peek(), Some(Tok::Sym(')')) | None) {
            self.pos += 1;
        }
        let close = self.col();
        self.expect_sym(')')?;
        let raw: String = self
            .line
            .chars()
            .skip(open)
            .take(close - open - 1)
            .collect();
        let lead = raw.len() - raw.trim_start().len();
        GaussianRational::parse(raw.trim()).map_err(|e| e.offset(self.line_no, open + lead))
    }

    fn linear_combination(
        &mut self,
        names: &HashMap<String, usize>,
        field: Field,
    ) -> Result<Vector, ParseError> {
        let n = names.len();
        if self.tokens.len() == self.pos + 1 && self.peek() == Some(&Tok::Number("0".into())) {
            self.pos += 1;
            return Ok(zero_vector(n));
        }
        let mut out = zero_vector(n);
        let mut first = true;
        loop {
            let negative = if self.eat_sym('-') {
                true
            } else if first || self.eat_sym('+') {
                false
            } else {
                break;
            };
            first = false;
            let coef_col = self.col();
            let coef = match self.peek() {
                Some(Tok::Sym('(')) => {
                    let c = self.parenthesized_scalar()?;
                    self.expect_sym('*')?;
                    Some(c)
                }
                Some(Tok::Number(_)) => {
                    let c = self.bare_coefficient()?;
                    self.expect_sym('*')?;
                    Some(c)
                }
                Some(Tok::Ident(s)) if s == "i" => {
                    let c = self.bare_coefficient()?;
                    self.expect_sym('*')?;
                    Some(c)
                }
                _ => None,
            };
            let coef = coef.unwrap_or_else(Scalar::one);
            if field == Field::Rational && !coef.is_real() {
                return Err(ParseError::new(
                    self.line_no,
                    coef_col,
                    "non-real scalar in a document over Q",
                ));
            }
            let k = self.basis_index(names)?;
            let signed = if negative { -coef } else { coef };
            out[k] += &signed;
            if self.peek().is_none() {
                break;
            }
        }
        self.expect_end()?;
        Ok(out)
    }
}

/// Strip a trailing `#` comment.
fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

#[derive(PartialEq)]
enum Section {
    Header,
    Brackets,
    Alpha,
    AlphaMatrix,
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument, ParseError> {
    let mut name: Option<String> = None;
    let mut field: Option<Field> = None;
    let mut dim: Option<usize> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut section = Section::Header;
    let mut seen_brackets = false;
    let mut seen_alpha = false;

    // resolved once the header is complete
    let mut owned_names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut brackets: HashMap<(usize, usize), (Vector, usize)> = HashMap::new();
    let mut images: Vec<Option<(Vector, usize)>> = Vec::new();
    let mut matrix_rows: Vec<Vector> = Vec::new();
    let mut used_images = false;
    let field_of = |f: &Option<Field>| f.unwrap_or(Field::Gaussian);

    let lines: Vec<&str> = text.lines().collect();

    let mut line_no = 0;
    while line_no < lines.len() {
        let raw = strip_comment(lines[line_no]);
        line_no += 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = raw.chars().count() - raw.trim_start().chars().count();

        if trimmed == "[brackets]" || trimmed == "[alpha]" {
            if section == Section::Header {
                let n =
                    dim.ok_or_else(|| ParseError::new(line_no, 1, "missing 'dim' in header"))?;
                if name.is_none() {
                    return Err(ParseError::new(line_no, 1, "missing 'name' in header"));
                }
                if field.is_none() {
                    return Err(ParseError::new(line_no, 1, "missing 'field' in header"));
                }
                owned_names = basis.clone().unwrap_or_else(|| default_basis_names(n));
                index = owned_names
                    .iter()
                    .enumerate()
                    .map(|(k, s)| (s.clone(), k))
                    .collect();
                images = vec![None; n];
            }
            if section == Section::AlphaMatrix && matrix_rows.len() != owned_names.len() {
                return Err(ParseError::new(line_no, 1, "alpha matrix has too few rows"));
            }
            let is_brackets = trimmed == "[brackets]";
            let seen = if is_brackets {
                &mut seen_brackets
            } else {
                &mut seen_alpha
            };
            if *seen {
                return Err(ParseError::new(
                    line_no,
                    lead + 1,
                    format!("duplicate section {trimmed}"),
                ));
            }
            *seen = true;
            section = if is_brackets {
                Section::Brackets
            } else {
                Section::Alpha
            };
            continue;
        }

        match section {
            Section::Header => {
                let Some(colon) = raw.find(':') else {
                    return Err(ParseError::new(
                        line_no,
                        lead + 1,
                        "expected 'key: value' or a section header",
                    ));
                };
                let key = raw[..colon].trim();
                let value_raw = &raw[colon + 1..];
                let value = value_raw.trim();
                let value_col = raw[..colon + 1].chars().count()
                    + (value_raw.chars().count() - value_raw.trim_start().chars().count())
                    + 1;
                let dup =
                    || ParseError::new(line_no, lead + 1, format!("duplicate header key '{key}'"));
                match key {
                    "name" => {
                        if name.replace(value.to_string()).is_some() {
                            return Err(dup());
                        }
                    }
                    "field" => {
                        let f = match value {
                            "Q" => Field::Rational,
                            "Q(i)" => Field::Gaussian,
                            _ => {
                                return Err(ParseError::new(
                                    line_no,
                                    value_col,
                                    "field must be 'Q' or 'Q(i)'",
                                ))
                            }
                        };
                        if field.replace(f).is_some() {
                            return Err(dup());
                        }
                    }
                    "dim" => {
                        let n: usize = value.parse().map_err(|_| {
                            ParseError::new(
                                line_no,
                                value_col,
                                "dim must be a non-negative integer",
                            )
                        })?;
                        if dim.replace(n).is_some() {
                            return Err(dup());
                        }
                    }
                    "basis" => {
                        let list: Vec<String> = if value.is_empty() {
                            Vec::new()
                        } else {
                            value.split(',').map(|s| s.trim().to_string()).collect()
                        };
                        for (k, nm) in list.iter().enumerate() {
                            if !valid_basis_name(nm) {
                                return Err(ParseError::new(
                                    line_no,
                                    value_col,
                                    format!("invalid basis name '{nm}'"),
                                ));
                            }
                            if list[..k].contains(nm) {
                                return Err(ParseError::new(
                                    line_no,
                                    value_col,
                                    format!("duplicate basis name '{nm}'"),
                                ));
                            }
                        }
                        if basis.replace(list).is_some() {
                            return Err(dup());
                        }
                    }
                    _ => {
                        return Err(ParseError::new(
                            line_no,
                            lead + 1,
                            format!("unknown header key '{key}'"),
                        ))
                    }
                }
                if let (Some(n), Some(b)) = (dim, &basis) {
                    if b.len() != n {
                        return Err(ParseError::new(
                            line_no,
                            1,
                            format!("basis lists {} names but dim is {n}", b.len()),
                        ));
                    }
                }
            }
            Section::Brackets => {
                let mut cur = LineCursor::new(raw, line_no)?;
                cur.expect_sym('[')?;
                let a = cur.basis_index(&index)?;
                cur.expect_sym(',')?;
                let b = cur.basis_index(&index)?;
                cur.expect_sym(']')?;
                cur.expect_sym('=')?;
                let v = cur.linear_combination(&index, field_of(&field))?;
                if a == b {
                    if !is_zero_vector(&v) {
                        return Err(ParseError::new(
                            line_no,
                            lead + 1,
                            "a basis element must bracket to zero with itself",
                        ));
                    }
                    continue;
                }
                let (key, oriented) = if a < b {
                    ((a, b), v)
                } else {
                    ((b, a), v.iter().map(|x| -x).collect())
                };
                if let Some((prev, prev_line)) = brackets.get(&key) {
                    if prev != &oriented {
                        return Err(ParseError::new(
                            line_no,
                            lead + 1,
                            format!("bracket inconsistent with line {prev_line} (skew-symmetry requires [a, b] = -[b, a])"),
                        ));
                    }
                    continue;
                }
                brackets.insert(key, (oriented, line_no));
            }
            Section::Alpha => {
                if trimmed == "matrix" {
                    if used_images {
                        return Err(ParseError::new(
                            line_no,
                            lead + 1,
                            "cannot mix 'matrix' with alpha(...) lines",
                        ));
                    }
                    section = Section::AlphaMatrix;
                    continue;
                }
                used_images = true;
                let mut cur = LineCursor::new(raw, line_no)?;
                if cur.next() != Some(Tok::Ident("alpha".into())) {
                    return Err(ParseError::new(
                        line_no,
                        lead + 1,
                        "expected 'alpha(name) = ...' or 'matrix'",
                    ));
                }
                cur.expect_sym('(')?;
                let a = cur.basis_index(&index)?;
                cur.expect_sym(')')?;
                cur.expect_sym('=')?;
                let v = cur.linear_combination(&index, field_of(&field))?;
                if let Some((_, prev_line)) = &images[a] {
                    return Err(ParseError::new(
                        line_no,
                        lead + 1,
                        format!(
                            "image of '{}' already given on line {prev_line}",
                            owned_names[a]
                        ),
                    ));
                }
                images[a] = Some((v, line_no));
            }
            Section::AlphaMatrix => {
                let n = owned_names.len();
                if matrix_rows.len() == n {
                    return Err(ParseError::new(
                        line_no,
                        lead + 1,
                        "alpha matrix has too many rows",
                    ));
                }
                let mut row = Vec::with_capacity(n);
                let mut col = 0;
                for piece in raw.split(|c: char| c.is_whitespace()) {
                    let start = col;
                    col += piece.chars().count() + 1;
                    if piece.is_empty() {
                        continue;
                    }
                    let s = GaussianRational::parse(piece).map_err(|e| e.offset(line_no, start))?;
                    if field_of(&field) == Field::Rational && !s.is_real() {
                        return Err(ParseError::new(
                            line_no,
                            start + 1,
                            "non-real scalar in a document over Q",
                        ));
                    }
                    row.push(s);
                }
                if row.len() != n {
                    return Err(ParseError::new(
                        line_no,
                        lead + 1,
                        format!("alpha matrix row has {} entries, expected {n}", row.len()),
                    ));
                }
                matrix_rows.push(row);
            }
        }
    }

    let eof = lines.len().max(1);
    if section == Section::Header {
        return Err(ParseError::new(
            eof,
            1,
            "missing [brackets] and [alpha] sections",
        ));
    }
    if !seen_brackets {
        return Err(ParseError::new(eof, 1, "missing [brackets] section"));
    }
    if !seen_alpha {
        return Err(ParseError::new(eof, 1, "missing [alpha] section"));
    }
    let n = owned_names.len();
    if section == Section::AlphaMatrix && matrix_rows.len() != n {
        return Err(ParseError::new(eof, 1, "alpha matrix has too few rows"));
    }

    let mut structure = vec![vec![zero_vector(n); n]; n];
    for ((a, b), (v, _)) in brackets {
        structure[b][a] = v.iter().map(|x| -x).collect();
        structure[a][b] = v;
    }
    let alpha = if section == Section::AlphaMatrix {
        Matrix::from_rows(&matrix_rows, n).expect("row lengths checked")
    } else {
        let columns: Vec<Vector> = images
            .into_iter()
            .map(|img| img.map(|(v, _)| v).unwrap_or_else(|| zero_vector(n)))
            .collect();
        Matrix::from_columns(&columns, n).expect("column lengths checked")
    };
    Ok(AlgebraDocument {
        name: name.expect("checked at first section"),
        field: field.expect("checked at first section"),
        basis: owned_names,
        structure,
        alpha,
    })
}

/// Text of a linear combination in canonical form (`0` for the zero vector).
pub fn format_linear_combination(v: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (negative, coef) = split_sign(c);
        let sign = match (out.is_empty(), negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sign);
        if let Some(coef) = coef {
            out.push_str(&coef);
            out.push('*');
        }
        out.push_str(&names[k]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Split a coefficient into a sign and the text written before `*`
/// (`None` for a unit coefficient).
fn split_sign(c: &Scalar) -> (bool, Option<String>) {
    let negative_real = c.is_real() && c.re().is_negative();
    let negative_imag = c.re().is_zero() && c.im().is_negative();
    if c.is_real() || c.re().is_zero() {
        let negative = negative_real || negative_imag;
        let magnitude = if negative { -c } else { c.clone() };
        if magnitude.is_one() {
            (negative, None)
        } else {
            (negative, Some(magnitude.to_string()))
        }
    } else {
        (false, Some(format!("({c})")))
    }
}

fn sanitize_name(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .map(|c| if c == '#' || c.is_control() { '_' } else { c })
        .collect();
    let trimmed = cleaned.trim();
    if trimmed.is_empty() {
        "unnamed".into()
    } else {
        trimmed.into()
    }
}

/// Canonical document text for an algebra. `parse_algebra` of the result
/// reproduces the algebra, and re-emitting is byte-identical.
pub fn emit_algebra(l: &HomLieAlgebra) -> String {
    let n = l.dim();
    let names = l.basis_names();
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", sanitize_name(l.name()));
    let _ = writeln!(out, "field: {}", Field::of(l).as_str());
    let _ = writeln!(out, "dim: {n}");
    if n == 0 {
        out.push_str("basis:\n");
    } else {
        let _ = writeln!(out, "basis: {}", names.join(", "));
    }
    out.push_str("\n[brackets]\n");
    for i in 0..n {
        for j in i + 1..n {
            let c = l.structure_constant(i, j);
            if !is_zero_vector(c) {
                let _ = writeln!(
                    out,
                    "[{}, {}] = {}",
                    names[i],
                    names[j],
                    format_linear_combination(c, names)
                );
            }
        }
    }
    out.push_str("\n[alpha]\n");
    for j in 0..n {
        let image = l.alpha().column(j);
        if !is_zero_vector(&image) {
            let _ = writeln!(
                out,
                "alpha({}) = {}",
                names[j],
                format_linear_combination(&image, names)
            );
        }
    }
    out
}

/// Rows separated by `;`, entries by `,`. Returns the rows; every row must
/// have `width` entries. An empty (or all-blank) spec is zero rows.
fn parse_rows(text: &str, width: usize) -> Result<Vec<Vector>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    let mut offset = 0;
    for row_text in text.split(';') {
        let row_start = offset;
        offset += row_text.chars().count() + 1;
        let mut row = Vec::new();
        let mut col = row_start;
        for entry in row_text.split(',') {
            let start = col;
            col += entry.chars().count() + 1;
            let lead = entry.chars().count() - entry.trim_start().chars().count();
            let s = GaussianRational::parse(entry.trim()).map_err(|e| e.offset(1, start + lead))?;
            row.push(s);
        }
        if row.len() != width {
            return Err(ParseError::new(
                1,
                row_start + 1,
                format!("expected {width} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// A subspace given as `;`-separated vectors of `,`-separated scalars,
/// e.g. `1,1,0;0,0,1`. The empty string is the zero subspace.
pub fn parse_subspace_spec(text: &str, ambient_dim: usize) -> Result<Subspace, ParseError> {
    let rows = parse_rows(text, ambient_dim)?;
    Ok(Subspace::span(&rows, ambient_dim).expect("row widths checked"))
}

/// A `rows × cols` matrix in the same syntax as [`parse_subspace_spec`].
pub fn parse_matrix_spec(text: &str, rows: usize, cols: usize) -> Result<Matrix, ParseError> {
    let parsed = parse_rows(text, cols)?;
    if parsed.is_empty() && rows * cols == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    if parsed.len() != rows {
        return Err(ParseError::new(
            1,
            1,
            format!("expected {rows} rows, found {}", parsed.len()),
        ));
    }
    Ok(Matrix::from_rows(&parsed, cols).expect("row widths checked"))
}

/// Text for a subspace spec (the RREF basis rows).
pub fn format_subspace_spec(s: &Subspace) -> String {
    format_rows(&s.basis_vectors())
}

pub fn format_matrix_spec(m: &Matrix) -> String {
    format_rows(&m.row_vectors())
}

fn format_rows(rows: &[Vector]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Sum of scaled basis vectors, handy for building specs in tests.
pub fn combination(terms: &[(i64, usize)], n: usize) -> Vector {
    let mut v = zero_vector(n);
    for &(c, k) in terms {
        add_scaled(
            &mut v,
            &Scalar::from_int(c),
            &crate::linalg::unit_vector(n, k),
        );
    }
    v
}
