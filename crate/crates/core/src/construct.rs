//! Explicit constructions: simplex and dimension-3 generator matrices,
//! Hadamard matrices, Levenshtein's equidistant codes and the systematic
//! family `C_k` obtained by gluing a simplex code to one of them.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{Code, CodeError};
use crate::field::{is_prime, quadratic_residues, FieldSpec};

/// Largest Hadamard order any constructor here will build.
pub const MAX_HADAMARD_ORDER: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("{0} is not a suitable prime for this Paley construction")]
    BadPrime(u64),
    #[error("no supported Hadamard construction of order {0}")]
    UnknownOrder(usize),
    #[error("requested {size} words from a Hadamard matrix of order {order}")]
    SizeTooLarge { size: usize, order: usize },
    #[error("rows are linearly dependent (rank {rank} < {k})")]
    RankDeficient { rank: usize, k: usize },
    #[error("matrix fails H * H^T = n * I")]
    NotHadamard,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// A full-rank `k x n` matrix over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    field: FieldSpec,
    rows: Vec<Vec<u8>>,
}

fn rank(field: &FieldSpec, rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let n = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = field.inverse(m[rank][col]);
        let pivot_row: Vec<u8> = m[rank].iter().map(|&x| field.product(inv, x)).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = field.negate(row[col]);
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sum(*x, field.product(factor, p));
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

impl GeneratorMatrix {
    pub fn new(field: FieldSpec, rows: Vec<Vec<u8>>) -> Result<GeneratorMatrix, BuildError> {
        let n = rows.first().map_or(0, |r| r.len());
        if rows.is_empty() || n == 0 {
            return Err(BuildError::OutOfRange("generator matrix must be nonempty".into()));
        }
        for r in &rows {
            if r.len() != n {
                return Err(CodeError::LengthMismatch { expected: n, found: r.len() }.into());
            }
            if let Some(&s) = r.iter().find(|&&s| s as u32 >= field.order()) {
                return Err(CodeError::SymbolOutOfRange { symbol: s, q: field.order() }.into());
            }
        }
        let r = rank(&field, &rows);
        if r < rows.len() {
            return Err(BuildError::RankDeficient { rank: r, k: rows.len() });
        }
        Ok(GeneratorMatrix { field, rows })
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// For each row `i`, the first column equal to the unit vector `e_i`.
    pub fn identity_columns(&self) -> Option<Vec<usize>> {
        (0..self.k())
            .map(|i| (0..self.n()).find(|&c| (0..self.k()).all(|r| self.rows[r][c] == u8::from(r == i))))
            .collect()
    }

    /// The spanned code, with messages in lexicographic order (first row
    /// most significant) and systematic coordinates at the identity columns
    /// when they exist.
    pub fn span(&self) -> Code {
        let code = Code::linear_span(self.field, &self.rows).expect("validated generators");
        match self.identity_columns() {
            Some(cols) => code.with_systematic(cols).expect("identity columns are systematic"),
            None => code,
        }
    }
}

/// Generator of the binary simplex code: column `j` is the binary expansion
/// of `j + 1`, least significant bit in row 0.
pub fn simplex(k: u32) -> Result<GeneratorMatrix, BuildError> {
    if !(1..=16).contains(&k) {
        return Err(BuildError::OutOfRange(format!("simplex dimension {k} not in 1..=16")));
    }
    let n = (1usize << k) - 1;
    let rows = (0..k).map(|i| (1..=n).map(|v| ((v >> i) & 1) as u8).collect()).collect();
    GeneratorMatrix::new(FieldSpec::binary(), rows)
}

const I3: [[u8; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
const N3: [[u8; 3]; 3] = [[0, 1, 1], [1, 0, 1], [1, 1, 0]];
const ONES3: [[u8; 1]; 3] = [[1], [1], [1]];

/// Binary `[g_2(3,d), 3, d]` generator built from copies of `[I3 | N3 | 1]`
/// and a tail chosen by `d mod 4`.
pub fn dim3_optimal(d: u64) -> Result<GeneratorMatrix, BuildError> {
    if d == 0 {
        return Err(BuildError::OutOfRange("distance must be positive".into()));
    }
    let (h, rho) = (d / 4, d % 4);
    let mut rows = vec![Vec::new(); 3];
    for (i, row) in rows.iter_mut().enumerate() {
        for _ in 0..h {
            row.extend_from_slice(&I3[i]);
            row.extend_from_slice(&N3[i]);
            row.extend_from_slice(&ONES3[i]);
        }
        match rho {
            1 => row.extend_from_slice(&I3[i]),
            2 => {
                row.extend_from_slice(&I3[i]);
                row.extend_from_slice(&ONES3[i]);
            }
            3 => {
                row.extend_from_slice(&I3[i]);
                row.extend_from_slice(&N3[i]);
            }
            _ => {}
        }
    }
    GeneratorMatrix::new(FieldSpec::binary(), rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Simplex,
    Dim3,
    Sylvester,
    Paley1,
    Paley2,
    Kronecker,
    Levenshtein,
    Counterexample,
    SimplexSequence,
}

/// How a matrix or code was (or will be) built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecipe {
    pub family: Family,
    pub parameters: Vec<u64>,
    pub provenance: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub factors: Vec<ConstructionRecipe>,
}

impl ConstructionRecipe {
    fn new(family: Family, parameters: Vec<u64>, provenance: &str) -> ConstructionRecipe {
        ConstructionRecipe { family, parameters, provenance: provenance.into(), factors: Vec::new() }
    }
}

/// A square +1/-1 matrix with `H * H^T = n * I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMatrix {
    entries: Vec<Vec<i8>>,
}

impl HadamardMatrix {
    /// Checks orthogonality exactly.
    pub fn new(entries: Vec<Vec<i8>>) -> Result<HadamardMatrix, BuildError> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n || r.iter().any(|&x| x != 1 && x != -1)) {
            return Err(BuildError::NotHadamard);
        }
        for i in 0..n {
            for j in i + 1..n {
                let dot: i64 = entries[i].iter().zip(&entries[j]).map(|(&a, &b)| (a * b) as i64).sum();
                if dot != 0 {
                    return Err(BuildError::NotHadamard);
                }
            }
        }
        Ok(HadamardMatrix { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn kronecker(&self, other: &HadamardMatrix) -> HadamardMatrix {
        let (a, b) = (self.order(), other.order());
        let entries = (0..a * b)
            .map(|r| (0..a * b).map(|c| self.entries[r / b][c / b] * other.entries[r % b][c % b]).collect())
            .collect();
        HadamardMatrix { entries }
    }

    /// Sign changes making the first row and column all +1.
    pub fn normalized(&self) -> HadamardMatrix {
        let mut entries = self.entries.clone();
        for row in entries.iter_mut() {
            if row[0] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
        }
        let flips: Vec<bool> = entries[0].iter().map(|&x| x < 0).collect();
        for row in entries.iter_mut() {
            for (x, &flip) in row.iter_mut().zip(&flips) {
                if flip {
                    *x = -*x;
                }
            }
        }
        HadamardMatrix { entries }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "hadamard {}", self.order());
        for row in &self.entries {
            out.extend(row.iter().map(|&x| if x > 0 { '+' } else { '-' }));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<HadamardMatrix, BuildError> {
        let fail = |line, message: String| Err(BuildError::Parse { line, message });
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let n = match lines.next() {
            Some((line, header)) => match header.strip_prefix("hadamard ").map(|v| v.trim().parse::<usize>()) {
                Some(Ok(n)) if n >= 1 => n,
                _ => return fail(line, format!("expected \"hadamard <n>\", found {header:?}")),
            },
            None => return fail(1, "empty file".into()),
        };
        let mut entries = Vec::with_capacity(n);
        let mut last_line = 1;
        for (line, content) in lines {
            last_line = line;
            let row: Result<Vec<i8>, char> = content
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    other => Err(other),
                })
                .collect();
            match row {
                Ok(row) if row.len() == n => entries.push(row),
                Ok(row) => return fail(line, format!("row has {} entries, expected {n}", row.len())),
                Err(c) => return fail(line, format!("invalid character {c:?}")),
            }
        }
        if entries.len() != n {
            return fail(last_line, format!("found {} rows, expected {n}", entries.len()));
        }
        HadamardMatrix::new(entries)
    }
}

/// Order-`2^m` matrix by repeated doubling.
pub fn sylvester_hadamard(m: u32) -> Result<HadamardMatrix, BuildError> {
    if m > 10 {
        return Err(BuildError::OutOfRange(format!("Sylvester order 2^{m} exceeds {MAX_HADAMARD_ORDER}")));
    }
    let mut h = HadamardMatrix { entries: vec![vec![1]] };
    let base = HadamardMatrix { entries: vec![vec![1, 1], vec![1, -1]] };
    for _ in 0..m {
        h = base.kronecker(&h);
    }
    Ok(h)
}

fn jacobsthal(p: u64) -> Result<Vec<Vec<i8>>, BuildError> {
    let residues = quadratic_residues(p).map_err(|_| BuildError::BadPrime(p))?;
    let p = p as usize;
    let chi = |x: usize| -> i8 {
        if x == 0 {
            0
        } else if residues.contains(&(x as u64)) {
            1
        } else {
            -1
        }
    };
    Ok((0..p).map(|i| (0..p).map(|j| chi((j + p - i) % p)).collect()).collect())
}

fn check_paley_prime(p: u64, residue: u64, max_order: u64) -> Result<(), BuildError> {
    if !is_prime(p) || p % 4 != residue || max_order > MAX_HADAMARD_ORDER as u64 {
        return Err(BuildError::BadPrime(p));
    }
    Ok(())
}

/// Paley type I matrix of order `p + 1`, for a prime `p = 3 mod 4`.
pub fn paley_hadamard(p: u64) -> Result<HadamardMatrix, BuildError> {
    check_paley_prime(p, 3, p + 1)?;
    let q = jacobsthal(p)?;
    let n = p as usize + 1;
    let mut entries = vec![vec![1i8; n]; n];
    for i in 1..n {
        entries[i][0] = -1;
        for j in 1..n {
            entries[i][j] = q[i - 1][j - 1] + i8::from(i == j);
        }
    }
    HadamardMatrix::new(entries)
}

/// Paley type II matrix of order `2(p + 1)`, for a prime `p = 1 mod 4`.
pub fn paley2_hadamard(p: u64) -> Result<HadamardMatrix, BuildError> {
    check_paley_prime(p, 1, 2 * (p + 1))?;
    let q = jacobsthal(p)?;
    let m = p as usize + 1;
    // symmetric conference matrix [[0, 1^T], [1, Q]]
    let c = |i: usize, j: usize| -> i8 {
        match (i, j) {
            (0, 0) => 0,
            (0, _) | (_, 0) => 1,
            _ => q[i - 1][j - 1],
        }
    };
    const PLUS: [[i8; 2]; 2] = [[1, 1], [1, -1]];
    const DIAG: [[i8; 2]; 2] = [[1, -1], [-1, -1]];
    let entries = (0..2 * m)
        .map(|r| {
            (0..2 * m)
                .map(|col| {
                    let (i, a, j, b) = (r / 2, r % 2, col / 2, col % 2);
                    if i == j {
                        DIAG[a][b]
                    } else {
                        c(i, j) * PLUS[a][b]
                    }
                })
                .collect()
        })
        .collect();
    HadamardMatrix::new(entries)
}

/// Plans a Hadamard matrix of order `n`: Sylvester, then Paley I, then
/// Paley II, then a Kronecker product of two smaller plans.
pub fn hadamard_recipe(n: usize) -> Result<ConstructionRecipe, BuildError> {
    if n == 0 || n > MAX_HADAMARD_ORDER || (n > 2 && !n.is_multiple_of(4)) {
        return Err(BuildError::UnknownOrder(n));
    }
    if n.is_power_of_two() {
        let m = n.trailing_zeros() as u64;
        return Ok(ConstructionRecipe::new(Family::Sylvester, vec![m], "Sylvester doubling"));
    }
    let p = n as u64 - 1;
    if is_prime(p) && p % 4 == 3 {
        return Ok(ConstructionRecipe::new(Family::Paley1, vec![p], "Paley type I, quadratic residues mod p"));
    }
    let p = (n / 2) as u64 - 1;
    if n.is_multiple_of(2) && is_prime(p) && p % 4 == 1 {
        return Ok(ConstructionRecipe::new(Family::Paley2, vec![p], "Paley type II, conference matrix of order p+1"));
    }
    for a in 2..n {
        if !n.is_multiple_of(a) || a * a > n {
            continue;
        }
        if let (Ok(left), Ok(right)) = (hadamard_recipe(a), hadamard_recipe(n / a)) {
            let mut recipe =
                ConstructionRecipe::new(Family::Kronecker, vec![a as u64, (n / a) as u64], "Kronecker product");
            recipe.factors = vec![left, right];
            return Ok(recipe);
        }
    }
    Err(BuildError::UnknownOrder(n))
}

pub fn build_hadamard(recipe: &ConstructionRecipe) -> Result<HadamardMatrix, BuildError> {
    match (recipe.family, recipe.parameters.as_slice(), recipe.factors.as_slice()) {
        (Family::Sylvester, &[m], _) => sylvester_hadamard(m as u32),
        (Family::Paley1, &[p], _) => paley_hadamard(p),
        (Family::Paley2, &[p], _) => paley2_hadamard(p),
        (Family::Kronecker, _, [a, b]) => {
            let h = build_hadamard(a)?.kronecker(&build_hadamard(b)?);
            HadamardMatrix::new(h.entries)
        }
        _ => Err(BuildError::OutOfRange(format!("not a Hadamard recipe: {:?}", recipe.family))),
    }
}

pub fn hadamard_of_order(n: usize) -> Result<HadamardMatrix, BuildError> {
    build_hadamard(&hadamard_recipe(n)?)
}

/// The first `size` rows of the normalized matrix read as binary words
/// (+1 to 0, -1 to 1), with the constant first coordinate deleted.
/// The result is equidistant with distance `order / 2`.
pub fn levenshtein_code(h: &HadamardMatrix, size: usize) -> Result<Code, BuildError> {
    let order = h.order();
    if order < 4 {
        return Err(BuildError::OutOfRange(format!("Hadamard order {order} is below 4")));
    }
    if size > order || size == 0 {
        return Err(BuildError::SizeTooLarge { size, order });
    }
    let normal = h.normalized();
    let rows = normal.entries[..size].iter().map(|row| row[1..].iter().map(|&x| u8::from(x < 0)).collect()).collect();
    Ok(Code::new(FieldSpec::binary(), order - 1, rows)?)
}

/// `C_k`: each simplex codeword (message order) followed by the matching
/// row of `D_k`, a Levenshtein code from a Hadamard matrix of order
/// `2^k + 4`. Parameters `(2^(k+1)+2, 2^k, 2^k+2)`, systematic and
/// equidistant.
pub fn counterexample_ck(k: u32) -> Result<Code, BuildError> {
    if !(2..=9).contains(&k) {
        return Err(BuildError::OutOfRange(format!("k = {k} not in 2..=9")));
    }
    let size = 1usize << k;
    let simplex_code = simplex(k)?.span();
    let dk = levenshtein_code(&hadamard_of_order(size + 4)?, size)?;
    let rows = (0..size).map(|i| [simplex_code.word(i), dk.word(i)].concat()).collect();
    let n = simplex_code.n() + dk.n();
    let sys = simplex_code.systematic_coords().expect("simplex is systematic").to_vec();
    Ok(Code::new(FieldSpec::binary(), n, rows)?.with_systematic(sys)?)
}

/// The simplex code of dimension `k` repeated `h` times.
pub fn simplex_sequence(k: u32, h: usize) -> Result<Code, BuildError> {
    if h == 0 {
        return Err(BuildError::OutOfRange("repeat count must be at least 1".into()));
    }
    Ok(simplex(k)?.span().repeat(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::griesmer;

    fn gram_ok(h: &HadamardMatrix) -> bool {
        let n = h.order();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let dot: i64 = (0..n).map(|c| (h.entries[i][c] * h.entries[j][c]) as i64).sum();
                dot == if i == j { n as i64 } else { 0 }
            })
        })
    }

    #[test]
    fn simplex_spans() {
        let s2 = simplex(2).unwrap().span();
        assert_eq!((s2.n(), s2.size(), s2.min_distance().unwrap()), (3, 4, 2));
        let s3 = simplex(3).unwrap();
        assert_eq!(s3.identity_columns(), Some(vec![0, 1, 3]));
        let s4 = simplex(4).unwrap().span();
        assert_eq!(s4.is_equidistant(), Ok(Some(8)));
        assert_eq!(s4.systematic_coords(), Some(&[0, 1, 3, 7][..]));
        assert!(simplex(0).is_err());
        assert!(simplex(17).is_err());
    }

    #[test]
    fn simplex_three_matches_g3_up_to_columns() {
        let a = simplex(3).unwrap().span().canonical_form().unwrap();
        let b = dim3_optimal(4).unwrap().span().canonical_form().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dim3_examples() {
        for (d, n) in [(4, 7), (3, 6), (6, 11), (1, 3), (2, 4), (5, 10)] {
            let g = dim3_optimal(d).unwrap();
            let c = g.span();
            assert_eq!((c.n(), c.size()), (n, 8));
            assert_eq!(c.min_distance().unwrap() as u64, d);
            assert_eq!(n as u64, griesmer(2, 3, d));
        }
    }

    #[test]
    fn rank_check() {
        let f = FieldSpec::binary();
        assert!(matches!(
            GeneratorMatrix::new(f, vec![vec![1, 1], vec![1, 1]]),
            Err(BuildError::RankDeficient { rank: 1, k: 2 })
        ));
        let f3 = FieldSpec::new(3).unwrap();
        assert!(GeneratorMatrix::new(f3, vec![vec![1, 2], vec![2, 1]]).is_err());
        assert!(GeneratorMatrix::new(f3, vec![vec![1, 2], vec![1, 1]]).is_ok());
    }

    #[test]
    fn sylvester_orders() {
        assert_eq!(sylvester_hadamard(0).unwrap().entries, vec![vec![1]]);
        assert_eq!(sylvester_hadamard(1).unwrap().entries, vec![vec![1, 1], vec![1, -1]]);
        assert!(gram_ok(&sylvester_hadamard(3).unwrap()));
        assert!(sylvester_hadamard(11).is_err());
    }

    #[test]
    fn paley_orders() {
        let h = paley_hadamard(19).unwrap();
        assert_eq!(h.order(), 20);
        assert!(gram_ok(&h));
        assert_eq!(paley_hadamard(3).unwrap().order(), 4);
        assert_eq!(paley_hadamard(13), Err(BuildError::BadPrime(13)));
        assert_eq!(paley_hadamard(15), Err(BuildError::BadPrime(15)));
        let h = paley2_hadamard(17).unwrap();
        assert_eq!(h.order(), 36);
        assert!(gram_ok(&h));
        assert_eq!(paley2_hadamard(5).unwrap().order(), 12);
        assert_eq!(paley2_hadamard(7), Err(BuildError::BadPrime(7)));
    }

    #[test]
    fn dispatch() {
        assert_eq!(hadamard_recipe(20).unwrap().family, Family::Paley1);
        assert_eq!(hadamard_recipe(16).unwrap().family, Family::Sylvester);
        assert_eq!(hadamard_recipe(68).unwrap().parameters, vec![67]);
        assert_eq!(hadamard_recipe(36).unwrap().family, Family::Paley2);
        let r = hadamard_recipe(40).unwrap();
        assert_eq!(r.family, Family::Kronecker);
        assert!(gram_ok(&build_hadamard(&r).unwrap()));
        assert_eq!(hadamard_recipe(6), Err(BuildError::UnknownOrder(6)));
        assert_eq!(hadamard_of_order(2).unwrap().order(), 2);
        assert_eq!(hadamard_of_order(1).unwrap().order(), 1);
    }

    #[test]
    fn hadamard_text_round_trip() {
        let h = paley_hadamard(7).unwrap();
        let text = h.to_text();
        assert!(text.starts_with("hadamard 8\n"));
        assert_eq!(HadamardMatrix::parse(&text).unwrap(), h);
        assert!(matches!(HadamardMatrix::parse("hadamard 2\n++\n+x\n"), Err(BuildError::Parse { line: 3, .. })));
        assert_eq!(HadamardMatrix::parse("hadamard 2\n++\n++\n"), Err(BuildError::NotHadamard));
    }

    #[test]
    fn levenshtein_examples() {
        let d4 = levenshtein_code(&hadamard_of_order(20).unwrap(), 16).unwrap();
        assert_eq!((d4.n(), d4.size()), (19, 16));
        assert_eq!(d4.is_equidistant(), Ok(Some(10)));
        assert!(d4.contains(&[0; 19]));
        let c = levenshtein_code(&sylvester_hadamard(3).unwrap(), 8).unwrap();
        assert_eq!(c.is_equidistant(), Ok(Some(4)));
        let c = levenshtein_code(&sylvester_hadamard(2).unwrap(), 4).unwrap();
        assert_eq!((c.n(), c.min_distance().unwrap()), (3, 2));
        assert!(matches!(levenshtein_code(&sylvester_hadamard(2).unwrap(), 5), Err(BuildError::SizeTooLarge { .. })));
    }

    #[test]
    fn counterexample_small() {
        let c3 = counterexample_ck(3).unwrap();
        assert_eq!((c3.n(), c3.size()), (18, 8));
        assert_eq!(c3.is_equidistant(), Ok(Some(10)));
        assert_eq!(griesmer(2, 3, 10), 18);
        let c4 = counterexample_ck(4).unwrap();
        assert_eq!((c4.n(), c4.size()), (34, 16));
        assert_eq!(c4.min_distance(), Ok(18));
        assert_eq!(c4.systematic_coords(), Some(&[0, 1, 3, 7][..]));
        assert!(!c4.is_linear());
    }

    #[test]
    fn simplex_sequences() {
        let c = simplex_sequence(3, 2).unwrap();
        assert_eq!((c.n(), c.size(), c.min_distance().unwrap()), (14, 8, 8));
        let c = simplex_sequence(2, 1).unwrap();
        assert_eq!((c.n(), c.size(), c.min_distance().unwrap()), (3, 4, 2));
    }
}
