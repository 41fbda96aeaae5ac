//! Nilpotent Lie algebras presented by rational structure constants.
//!
//! An algebra of dimension `n` is given on a fixed basis `X_1..X_n` by the
//! constants `c_{ij}^k` of `[X_i, X_j] = sum_k c_{ij}^k X_k` for `i < j`
//! (antisymmetry is implicit). The module validates the Lie axioms, computes
//! the lower central series and the center, and solves for the *diagonal
//! torus*: the space of all diagonal derivations `diag(a_1..a_n)`, cut out by
//! the linear system `a_i + a_j = a_k` for every nonzero `c_{ij}^k`. Row `i`
//! of the resulting weight matrix is the weight of `X_i` with respect to a
//! normalized basis of that space.
//!
//! For an algebra presented in a basis diagonalizing a maximal torus with
//! one-dimensional weight spaces, the diagonal derivations realize exactly
//! that torus. No maximality claim is made for arbitrary bases: the reported
//! rank is the rank of the diagonal torus in the given basis.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg;
use crate::rational::{format_rational, parse_rational};
use crate::weights::{Weight, WeightError, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension must be in 1..={max}, got {n}", max = crate::graph::MAX_VERTICES)]
    BadDimension { n: usize },
    #[error("c[{i},{j}]^{k}: indices must satisfy 1 <= i < j <= {n} and 1 <= k <= {n}")]
    MalformedIndex { i: usize, j: usize, k: usize, n: usize },
    #[error("weights {first} and {second} coincide: outside the multiplicity-one setting")]
    RepeatedWeights { first: usize, second: usize },
    #[error("weight system has {got} weights, algebra has dimension {n}")]
    DimensionMismatch { got: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Rational structure constants of an `n`-dimensional Lie algebra candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    n: usize,
    /// Sparse nonzero constants, keyed by `(i, j, k)` with `i < j`, 1-indexed.
    c: BTreeMap<(usize, usize, usize), BigRational>,
}

/// A linear subspace of the algebra, spanned by rational coordinate vectors
/// in the `X_1..X_n` basis (rows of a reduced row-echelon form, so the basis
/// is linearly independent and deterministic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<BigRational>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    pub fn contains(&self, vector: &[BigRational]) -> bool {
        linalg::in_span(&self.basis, &vector.to_vec(), self.n)
    }
}

/// The diagonal torus: a normalized basis of the space of diagonal
/// derivations, presented as one weight row per algebra basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusDescription {
    rank: usize,
    /// `n` rows by `rank` columns; row `i` is the weight of `X_i`.
    weight_matrix: Vec<Vec<BigRational>>,
}

impl TorusDescription {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight_matrix(&self) -> &[Vec<BigRational>] {
        &self.weight_matrix
    }

    /// The solution basis itself: `rank` diagonal maps, each a vector of `n`
    /// diagonal entries (column `m` of the weight matrix).
    pub fn diagonal_maps(&self) -> Vec<Vec<BigRational>> {
        (0..self.rank)
            .map(|m| self.weight_matrix.iter().map(|row| row[m].clone()).collect())
            .collect()
    }
}

/// Outcome of [`StructureConstants::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Basis triples `i < j < k` where the Jacobi identity fails.
    pub jacobi_violations: Vec<(usize, usize, usize)>,
    /// Dimensions of `C^1 = g, C^2 = [g,g], C^{k+1} = [g, C^k]` until the
    /// series stabilizes or reaches zero.
    pub lower_central_dims: Vec<usize>,
    pub nilpotent: bool,
}

impl ValidationReport {
    pub fn jacobi_ok(&self) -> bool {
        self.jacobi_violations.is_empty()
    }

    pub fn is_nilpotent_lie_algebra(&self) -> bool {
        self.jacobi_ok() && self.nilpotent
    }
}

/// Outcome of the bracket-nonvanishing check on sum triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition1Report {
    pub holds: bool,
    /// Sum triples `(i, j, k)` whose bracket coefficient `c_{ij}^k` vanishes.
    pub violations: Vec<(usize, usize, usize)>,
}

impl StructureConstants {
    pub fn new(n: usize) -> Result<StructureConstants, LieError> {
        if n == 0 || n > crate::graph::MAX_VERTICES {
            return Err(LieError::BadDimension { n });
        }
        Ok(StructureConstants {
            n,
            c: BTreeMap::new(),
        })
    }

    /// Sets `c_{ij}^k` (requires `i < j`); a zero value clears the entry.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: BigRational) -> Result<(), LieError> {
        if i == 0 || j == 0 || k == 0 || i >= j || j > self.n || k > self.n {
            return Err(LieError::MalformedIndex { i, j, k, n: self.n });
        }
        if value.is_zero() {
            self.c.remove(&(i, j, k));
        } else {
            self.c.insert((i, j, k), value);
        }
        Ok(())
    }

    pub fn set_int(&mut self, i: usize, j: usize, k: usize, value: i64) -> Result<(), LieError> {
        self.set(i, j, k, BigRational::from_integer(value.into()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Nonzero constants in deterministic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &BigRational)> {
        self.c.iter().map(|(&(i, j, k), v)| (i, j, k, v))
    }

    /// `[X_i, X_j]` as a coordinate vector, for any `i != j`.
    fn bracket_basis(&self, i: usize, j: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.n];
        let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        for (&(a, b, k), value) in self.c.range((lo, hi, 0)..=(lo, hi, self.n)) {
            debug_assert_eq!((a, b), (lo, hi));
            out[k - 1] = if sign > 0 { value.clone() } else { -value.clone() };
        }
        out
    }

    /// `[x, y]` for arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        let mut out = vec![BigRational::zero(); self.n];
        for (&(i, j, k), value) in &self.c {
            // coefficient of [X_i, X_j] in [x, y] is x_i y_j - x_j y_i
            let coeff = &x[i - 1] * &y[j - 1] - &x[j - 1] * &y[i - 1];
            if !coeff.is_zero() {
                out[k - 1] = &out[k - 1] + coeff * value;
            }
        }
        out
    }

    /// Checks the Jacobi identity on all basis triples and computes the lower
    /// central series.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let bracket_ij = self.bracket_basis(i, j);
                for k in j + 1..=self.n {
                    let mut jacobi = self.bracket_with_basis(&bracket_ij, k);
                    let term2 = self.bracket_with_basis(&self.bracket_basis(j, k), i);
                    let term3 = self.bracket_with_basis(&self.bracket_basis(k, i), j);
                    for idx in 0..self.n {
                        jacobi[idx] = &jacobi[idx] + &term2[idx] + &term3[idx];
                    }
                    if jacobi.iter().any(|v| !v.is_zero()) {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        let dims = self.lower_central_series();
        let nilpotent = *dims.last().expect("series is nonempty") == 0;
        ValidationReport {
            jacobi_violations: violations,
            lower_central_dims: dims,
            nilpotent,
        }
    }

    /// `[v, X_k]` for a coordinate vector `v`.
    fn bracket_with_basis(&self, v: &[BigRational], k: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.n];
        for m in 1..=self.n {
            if v[m - 1].is_zero() || m == k {
                continue;
            }
            let bracket = self.bracket_basis(m, k);
            for idx in 0..self.n {
                if !bracket[idx].is_zero() {
                    out[idx] = &out[idx] + &v[m - 1] * &bracket[idx];
                }
            }
        }
        out
    }

    /// Dimensions of the lower central series until it stabilizes; the
    /// algebra is nilpotent iff the terminal dimension is zero.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let mut dims = vec![self.n];
        // C^2 basis: all [X_i, X_j]
        let mut current: Vec<Vec<BigRational>> = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                current.push(self.bracket_basis(i, j));
            }
        }
        loop {
            let basis = linalg::row_space_basis(&current, self.n);
            let dim = basis.len();
            let prev = *dims.last().unwrap();
            dims.push(dim);
            // a nilpotent series reaches zero within n steps; the length cap
            // guards against non-Lie inputs whose "series" never settles
            if dim == 0 || dim == prev || dims.len() > self.n + 1 {
                return dims;
            }
            current = Vec::new();
            for i in 1..=self.n {
                for vector in &basis {
                    current.push(self.bracket_with_basis(vector, i));
                }
            }
            // note the sign flip from [v, X_i]; spans are sign-invariant
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        *self.lower_central_series().last().unwrap() == 0
    }

    /// The center `Z(g) = {v : [v, X_j] = 0 for all j}`, as the exact
    /// nullspace of the stacked adjoint maps.
    pub fn center(&self) -> Subspace {
        let mut constraints: Vec<Vec<BigRational>> = Vec::new();
        for j in 1..=self.n {
            // row (j, k): sum_i gamma(i, j, k) v_i = 0
            let mut rows = vec![vec![BigRational::zero(); self.n]; self.n];
            for i in 1..=self.n {
                if i == j {
                    continue;
                }
                let bracket = self.bracket_basis(i, j);
                for (k, value) in bracket.into_iter().enumerate() {
                    if !value.is_zero() {
                        rows[k][i - 1] = value;
                    }
                }
            }
            constraints.extend(rows);
        }
        let basis = linalg::row_space_basis(&linalg::nullspace(&constraints, self.n), self.n);
        Subspace { n: self.n, basis }
    }

    /// Constraint matrix of the diagonal-derivation system: one row
    /// `e_i + e_j - e_k` per nonzero `c_{ij}^k`.
    pub fn torus_constraint_matrix(&self) -> Vec<Vec<BigRational>> {
        let one = BigRational::from_integer(1.into());
        self.c
            .keys()
            .map(|&(i, j, k)| {
                let mut row = vec![BigRational::zero(); self.n];
                row[i - 1] = &row[i - 1] + &one;
                row[j - 1] = &row[j - 1] + &one;
                row[k - 1] = &row[k - 1] - &one;
                row
            })
            .collect()
    }

    /// Solves for the diagonal torus. The solution basis is put in reduced
    /// row-echelon form (pivots normalized to 1), making the weight matrix
    /// deterministic. Rank 0 is a legal outcome.
    pub fn diagonal_torus(&self) -> TorusDescription {
        let constraints = self.torus_constraint_matrix();
        let solution = linalg::nullspace(&constraints, self.n);
        let basis = linalg::row_space_basis(&solution, self.n);
        let rank = basis.len();
        let weight_matrix = (0..self.n)
            .map(|i| basis.iter().map(|row| row[i].clone()).collect())
            .collect();
        TorusDescription {
            rank,
            weight_matrix,
        }
    }

    /// The weight system read off the diagonal torus: row `i` of the weight
    /// matrix is the weight of `X_i`. Fails when two rows coincide — the
    /// algebra then falls outside the multiplicity-one setting.
    pub fn weight_system(&self) -> Result<WeightSystem, LieError> {
        let torus = self.diagonal_torus();
        self.weight_system_of(&torus)
    }

    /// As [`Self::weight_system`], reusing an already-computed torus.
    pub fn weight_system_of(&self, torus: &TorusDescription) -> Result<WeightSystem, LieError> {
        let weights: Vec<Weight> = torus
            .weight_matrix()
            .iter()
            .map(|row| Weight::new(row.clone()))
            .collect();
        WeightSystem::new(torus.rank(), weights).map_err(|e| match e {
            WeightError::RepeatedWeights { first, second } => {
                LieError::RepeatedWeights { first, second }
            }
            other => unreachable!("weight rows are structurally well-formed: {other}"),
        })
    }

    /// Checks that every sum triple of the weight system is matched by a
    /// nonvanishing bracket: `a_i + a_j = a_k` requires `c_{ij}^k != 0`.
    pub fn check_condition1(&self, system: &WeightSystem) -> Result<Condition1Report, LieError> {
        if system.len() != self.n {
            return Err(LieError::DimensionMismatch {
                got: system.len(),
                n: self.n,
            });
        }
        let violations: Vec<(usize, usize, usize)> = system
            .sum_triples()
            .into_iter()
            .filter(|&(i, j, k)| !self.c.contains_key(&(i, j, k)))
            .collect();
        Ok(Condition1Report {
            holds: violations.is_empty(),
            violations,
        })
    }
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

/// The abelian algebra of dimension `n` (all brackets zero).
pub fn abelian(n: usize) -> StructureConstants {
    StructureConstants::new(n).expect("corpus dimension in range")
}

/// The Heisenberg algebra `h_{2k+1}`: `[X_{2i-1}, X_{2i}] = X_{2k+1}`.
pub fn heisenberg(k: usize) -> StructureConstants {
    assert!(k >= 1, "heisenberg requires k >= 1");
    let n = 2 * k + 1;
    let mut algebra = StructureConstants::new(n).expect("corpus dimension in range");
    for i in 1..=k {
        algebra.set_int(2 * i - 1, 2 * i, n, 1).unwrap();
    }
    algebra
}

/// The model filiform algebra `L_n`: `[X_1, X_i] = X_{i+1}` for
/// `2 <= i <= n-1` (maximal nilpotence index).
pub fn filiform(n: usize) -> StructureConstants {
    assert!(n >= 3, "filiform L_n requires n >= 3");
    let mut algebra = StructureConstants::new(n).expect("corpus dimension in range");
    for i in 2..n {
        algebra.set_int(1, i, i + 1, 1).unwrap();
    }
    algebra
}

/// Direct sum: blocks bracket independently, `b`'s indices shifted by
/// `a.dim()`.
pub fn direct_sum(a: &StructureConstants, b: &StructureConstants) -> Result<StructureConstants, LieError> {
    let n = a.dim() + b.dim();
    let mut sum = StructureConstants::new(n)?;
    for (i, j, k, value) in a.entries() {
        sum.set(i, j, k, value.clone())?;
    }
    let offset = a.dim();
    for (i, j, k, value) in b.entries() {
        sum.set(i + offset, j + offset, k + offset, value.clone())?;
    }
    Ok(sum)
}

/// The nilpotent algebras shipped for tests and demonstrations.
pub fn standard_corpus() -> Vec<(String, StructureConstants)> {
    let mut corpus: Vec<(String, StructureConstants)> = Vec::new();
    for n in 1..=6 {
        corpus.push((format!("a{n}"), abelian(n)));
    }
    corpus.push(("h3".to_string(), heisenberg(1)));
    corpus.push(("h5".to_string(), heisenberg(2)));
    for n in 4..=10 {
        corpus.push((format!("L{n}"), filiform(n)));
    }
    corpus.push((
        "h3+a1".to_string(),
        direct_sum(&heisenberg(1), &abelian(1)).expect("fits in range"),
    ));
    corpus
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Parses the structure-constant format: first line `dim n`, then lines
/// `i j k q` meaning `c_{ij}^k = q`; omitted triples are zero; `#` comments.
pub fn parse_structure_constants(text: &str) -> Result<StructureConstants, LieError> {
    let mut lines = crate::graph::io_data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `dim n` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 || fields[0] != "dim" {
        return Err(parse_err(header_line, "header must be `dim n`"));
    }
    let n: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(header_line, format!("invalid dimension `{}`", fields[1])))?;
    let mut algebra =
        StructureConstants::new(n).map_err(|e| parse_err(header_line, e.to_string()))?;
    let mut seen = std::collections::BTreeSet::new();
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(parse_err(line, "expected `i j k q`"));
        }
        let idx: Result<Vec<usize>, LieError> = fields[..3]
            .iter()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| parse_err(line, format!("invalid index `{tok}`")))
            })
            .collect();
        let idx = idx?;
        let value = parse_rational(fields[3]).map_err(|e| parse_err(line, e.to_string()))?;
        if !seen.insert((idx[0], idx[1], idx[2])) {
            return Err(parse_err(
                line,
                format!("duplicate entry for c[{},{}]^{}", idx[0], idx[1], idx[2]),
            ));
        }
        algebra
            .set(idx[0], idx[1], idx[2], value)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(algebra)
}

pub fn write_structure_constants(algebra: &StructureConstants) -> String {
    let mut out = format!("dim {}\n", algebra.dim());
    for (i, j, k, value) in algebra.entries() {
        out.push_str(&format!("{i} {j} {k} {}\n", format_rational(value)));
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> LieError {
    LieError::Parse {
        line,
        message: message.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn int_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<i64>> {
        rows.iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        assert!(v.is_integer(), "expected integer entry, got {v}");
                        i64::try_from(v.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn set_rejects_malformed_indices() {
        let mut algebra = StructureConstants::new(3).unwrap();
        assert!(algebra.set_int(2, 1, 3, 1).is_err());
        assert!(algebra.set_int(1, 1, 3, 1).is_err());
        assert!(algebra.set_int(1, 2, 4, 1).is_err());
        assert!(algebra.set_int(0, 2, 3, 1).is_err());
        assert!(StructureConstants::new(0).is_err());
        assert!(StructureConstants::new(65).is_err());
    }

    #[test]
    fn heisenberg_is_valid_and_nilpotent() {
        let report = heisenberg(1).validate();
        assert!(report.jacobi_ok());
        assert!(report.nilpotent);
        assert_eq!(report.lower_central_dims, vec![3, 1, 0]);
    }

    #[test]
    fn solvable_but_not_nilpotent() {
        // [X1, X2] = X2
        let mut algebra = StructureConstants::new(2).unwrap();
        algebra.set_int(1, 2, 2, 1).unwrap();
        let report = algebra.validate();
        assert!(report.jacobi_ok());
        assert!(!report.nilpotent);
        assert_eq!(report.lower_central_dims, vec![2, 1, 1]);
    }

    #[test]
    fn so3_type_is_valid_but_not_nilpotent() {
        // [X1,X2]=X3, [X1,X3]=X2, [X2,X3]=X1: series stabilizes at the whole space
        let mut algebra = StructureConstants::new(3).unwrap();
        algebra.set_int(1, 2, 3, 1).unwrap();
        algebra.set_int(1, 3, 2, 1).unwrap();
        algebra.set_int(2, 3, 1, 1).unwrap();
        let report = algebra.validate();
        assert!(report.jacobi_ok());
        assert!(!report.nilpotent);
        assert_eq!(report.lower_central_dims, vec![3, 3]);
    }

    #[test]
    fn jacobi_violation_is_reported_with_triple() {
        let mut algebra = StructureConstants::new(3).unwrap();
        algebra.set_int(1, 2, 3, 1).unwrap();
        algebra.set_int(1, 3, 2, 1).unwrap();
        algebra.set_int(2, 3, 3, 1).unwrap();
        let report = algebra.validate();
        assert_eq!(report.jacobi_violations, vec![(1, 2, 3)]);
        assert!(!report.jacobi_ok());
    }

    #[test]
    fn series_of_corpus_algebras() {
        assert_eq!(abelian(4).lower_central_series(), vec![4, 0]);
        assert_eq!(filiform(4).lower_central_series(), vec![4, 2, 1, 0]);
        assert_eq!(filiform(6).lower_central_series(), vec![6, 4, 3, 2, 1, 0]);
        assert_eq!(heisenberg(2).lower_central_series(), vec![5, 1, 0]);
    }

    #[test]
    fn centers_of_corpus_algebras() {
        let h3_center = heisenberg(1).center();
        assert_eq!(h3_center.dim(), 1);
        assert_eq!(int_rows(h3_center.basis()), vec![vec![0, 0, 1]]);

        let a3_center = abelian(3).center();
        assert_eq!(a3_center.dim(), 3);

        let l4_center = filiform(4).center();
        assert_eq!(l4_center.dim(), 1);
        assert_eq!(int_rows(l4_center.basis()), vec![vec![0, 0, 0, 1]]);
        assert!(l4_center.contains(&[q(0), q(0), q(0), q(7)]));
        assert!(!l4_center.contains(&[q(1), q(0), q(0), q(0)]));
    }

    #[test]
    fn diagonal_torus_normalized_weights() {
        let torus = heisenberg(1).diagonal_torus();
        assert_eq!(torus.rank(), 2);
        assert_eq!(
            int_rows(torus.weight_matrix()),
            vec![vec![1, 0], vec![0, 1], vec![1, 1]]
        );

        let torus = filiform(4).diagonal_torus();
        assert_eq!(torus.rank(), 2);
        assert_eq!(
            int_rows(torus.weight_matrix()),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]
        );

        let torus = abelian(3).diagonal_torus();
        assert_eq!(torus.rank(), 3);
        assert_eq!(
            int_rows(torus.weight_matrix()),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn direct_sum_torus_splits() {
        let algebra = direct_sum(&heisenberg(1), &abelian(1)).unwrap();
        let torus = algebra.diagonal_torus();
        assert_eq!(torus.rank(), 3);
        assert_eq!(
            int_rows(torus.weight_matrix()),
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![1, 1, 0],
                vec![0, 0, 1]
            ]
        );
    }

    #[test]
    fn weight_system_roundtrip_and_condition1() {
        let l4 = filiform(4);
        let system = l4.weight_system().unwrap();
        assert_eq!(system.rank(), 2);
        assert_eq!(system.len(), 4);
        assert_eq!(system.sum_triples(), vec![(1, 2, 3), (1, 3, 4)]);
        let report = l4.check_condition1(&system).unwrap();
        assert!(report.holds);
        assert!(report.violations.is_empty());

        let abelian5 = abelian(5);
        let system = abelian5.weight_system().unwrap();
        assert!(abelian5.check_condition1(&system).unwrap().holds);
    }

    #[test]
    fn condition1_fails_when_bracket_vanishes() {
        // trivial brackets paired with the Heisenberg weights by hand
        let algebra = abelian(3);
        let system = WeightSystem::from_integers(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let report = algebra.check_condition1(&system).unwrap();
        assert!(!report.holds);
        assert_eq!(report.violations, vec![(1, 2, 3)]);
    }

    #[test]
    fn repeated_weights_are_rejected_by_name() {
        // rank drops to 0 here: a1+a2=a3, a1+a3=a2 and a2+a3=a1 force a=0,
        // so all weight rows are empty and collide
        let mut algebra = StructureConstants::new(3).unwrap();
        algebra.set_int(1, 2, 3, 1).unwrap();
        algebra.set_int(1, 3, 2, 1).unwrap();
        algebra.set_int(2, 3, 1, 1).unwrap();
        assert_eq!(algebra.diagonal_torus().rank(), 0);
        assert_eq!(
            algebra.weight_system().unwrap_err(),
            LieError::RepeatedWeights { first: 1, second: 2 }
        );
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let system = WeightSystem::from_integers(&[&[1], &[2]]).unwrap();
        assert_eq!(
            abelian(3).check_condition1(&system).unwrap_err(),
            LieError::DimensionMismatch { got: 2, n: 3 }
        );
    }

    #[test]
    fn torus_columns_are_derivations() {
        // D[x,y] = [Dx,y] + [x,Dy] expanded against all structure constants:
        // componentwise d_k c_{ij}^k = (d_i + d_j) c_{ij}^k
        for (name, algebra) in standard_corpus() {
            let torus = algebra.diagonal_torus();
            for diag in torus.diagonal_maps() {
                for (i, j, k, value) in algebra.entries() {
                    assert!(!value.is_zero());
                    let lhs = &diag[k - 1];
                    let rhs = &diag[i - 1] + &diag[j - 1];
                    assert_eq!(*lhs, rhs, "derivation property fails for {name}");
                }
            }
        }
    }

    #[test]
    fn constraint_rank_plus_torus_rank_is_dimension() {
        for (name, algebra) in standard_corpus() {
            let constraints = algebra.torus_constraint_matrix();
            let constraint_rank = crate::linalg::rank(&constraints, algebra.dim());
            let torus_rank = algebra.diagonal_torus().rank();
            assert_eq!(
                constraint_rank + torus_rank,
                algebra.dim(),
                "rank split fails for {name}"
            );
        }
    }

    #[test]
    fn parse_and_write_structure_constants() {
        let text = "# filiform L4\ndim 4\n1 2 3 1\n1 3 4 1\n";
        let algebra = parse_structure_constants(text).unwrap();
        assert_eq!(algebra, filiform(4));
        let rendered = write_structure_constants(&algebra);
        assert_eq!(parse_structure_constants(&rendered).unwrap(), algebra);

        let rational = parse_structure_constants("dim 3\n1 2 3 1/2\n").unwrap();
        let bracket = rational.bracket(
            &[q(1), q(0), q(0)],
            &[q(0), q(1), q(0)],
        );
        assert_eq!(bracket, vec![q(0), q(0), BigRational::new(1.into(), 2.into())]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_structure_constants("3\n"),
            Err(LieError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_structure_constants("dim 3\n1 2 3\n"),
            Err(LieError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_structure_constants("dim 3\n2 1 3 1\n"),
            Err(LieError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_structure_constants("dim 3\n1 2 3 1\n1 2 3 2\n"),
            Err(LieError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_structure_constants("dim 3\n1 2 3 1/0\n"),
            Err(LieError::Parse { line: 2, .. })
        ));
    }
}
