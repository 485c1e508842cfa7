//! Exact dense linear algebra over [`Scalar`], a matrix of polynomials, and
//! an incremental echelon basis for spans of polynomials.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{Monomial, MultiPoly};

/// Solution set of `M y = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    Unique(Vec<Scalar>),
    /// `particular + span(kernel)`, kernel non-empty.
    Family {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
    Inconsistent,
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Only the first `ncols` columns are used for pivots.
fn rref(m: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // Prefer the pivot with the smallest bit size to limit coefficient growth.
        let mut best: Option<(usize, u64)> = None;
        for (i, row) in m.iter().enumerate().skip(r) {
            if !row[c].is_zero() {
                let size = scalar_size(&row[c]);
                if best.is_none_or(|(_, s)| size < s) {
                    best = Some((i, size));
                }
            }
        }
        let Some((p, _)) = best else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r][c..width].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..width {
                if !pivot_row[k].is_zero() {
                    row[k] = &row[k] - &(&f * &pivot_row[k]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn scalar_size(s: &Scalar) -> u64 {
    match s {
        Scalar::Rational(r) => r.numer().bits() + r.denom().bits(),
        Scalar::Extension(e) => e.coeffs().iter().map(|r| r.numer().bits() + r.denom().bits()).sum(),
    }
}

fn check_rect(m: &[Vec<Scalar>]) -> Result<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    if m.iter().any(|row| row.len() != ncols) {
        return Err(Error::Shape("ragged matrix".into()));
    }
    Ok(ncols)
}

/// Solve `M y = b` exactly by Gauss-Jordan elimination.
pub fn solve_linear_exact(m: &[Vec<Scalar>], b: &[Scalar]) -> Result<LinearSolution> {
    let ncols = check_rect(m)?;
    if b.len() != m.len() {
        return Err(Error::Shape(format!("{} rows but {} right-hand sides", m.len(), b.len())));
    }
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols);
    if aug.iter().skip(pivots.len()).any(|row| !row[ncols].is_zero()) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = vec![Scalar::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][ncols].clone();
    }
    let kernel = kernel_from_rref(&aug, &pivots, ncols);
    Ok(if kernel.is_empty() {
        LinearSolution::Unique(particular)
    } else {
        LinearSolution::Family { particular, kernel }
    })
}

fn kernel_from_rref(m: &[Vec<Scalar>], pivots: &[usize], ncols: usize) -> Vec<Vec<Scalar>> {
    let is_pivot: Vec<bool> = (0..ncols).map(|c| pivots.contains(&c)).collect();
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); ncols];
        v[f] = Scalar::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -&m[r][f];
        }
        basis.push(v);
    }
    basis
}

/// Basis of `{ y : M y = 0 }`.
pub fn nullspace(m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, ncols);
    kernel_from_rref(&a, &pivots, ncols)
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    rref(&mut a, ncols).len()
}

/// Linear relations among images: given, for each unknown `k`, a block of
/// polynomials `images[k] = (P_k1, ..., P_kB)`, return a basis of the
/// coefficient vectors `a` with `sum_k a_k P_kb = 0` for every block `b`.
pub fn kernel_of_poly_map(images: &[Vec<MultiPoly>]) -> Vec<Vec<Scalar>> {
    let ncols = images.len();
    let mut row_of: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (k, blocks) in images.iter().enumerate() {
        for (b, p) in blocks.iter().enumerate() {
            for (m, c) in p.terms() {
                let r = *row_of.entry((b, m.clone())).or_insert_with(|| {
                    rows.push(vec![Scalar::zero(); ncols]);
                    rows.len() - 1
                });
                rows[r][k] = &rows[r][k] + c;
            }
        }
    }
    if rows.is_empty() {
        return (0..ncols)
            .map(|k| (0..ncols).map(|j| if j == k { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
    }
    nullspace(&rows, ncols)
}

/// Coefficients `a` with `target = sum_k a_k basis[k]`, via [`solve_linear_exact`].
pub fn express_in_span(target: &MultiPoly, basis: &[MultiPoly]) -> Result<LinearSolution> {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in basis.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let mut mat = vec![vec![Scalar::zero(); basis.len()]; index.len()];
    let mut rhs = vec![Scalar::zero(); index.len()];
    for (k, p) in basis.iter().enumerate() {
        for (m, c) in p.terms() {
            mat[index[m]][k] = c.clone();
        }
    }
    for (m, c) in target.terms() {
        rhs[index[m]] = c.clone();
    }
    if mat.is_empty() {
        return Ok(LinearSolution::Unique(vec![Scalar::zero(); basis.len()]));
    }
    solve_linear_exact(&mat, &rhs)
}

/// Echelon basis of a span of polynomials, keyed by leading monomial.
#[derive(Debug, Clone)]
pub struct PolySpan {
    nvars: usize,
    pivots: BTreeMap<Monomial, MultiPoly>,
}

impl PolySpan {
    pub fn new(nvars: usize) -> Self {
        PolySpan {
            nvars,
            pivots: BTreeMap::new(),
        }
    }

    pub fn from_polys<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a MultiPoly>) -> Self {
        let mut s = PolySpan::new(nvars);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> Vec<MultiPoly> {
        self.pivots.values().rev().cloned().collect()
    }

    /// Remainder of `p` after eliminating every pivot monomial.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        assert_eq!(p.nvars(), self.nvars);
        let mut rem = p.clone();
        let mut bound: Option<Monomial> = None;
        loop {
            // Largest pivot monomial of rem strictly below the last one handled.
            let next = rem
                .terms()
                .rev()
                .map(|(m, _)| m)
                .filter(|m| bound.as_ref().is_none_or(|b| *m < b))
                .find(|m| self.pivots.contains_key(*m))
                .cloned();
            let Some(m) = next else { break };
            let c = rem.coeff(m.exps());
            rem = &rem - &self.pivots[&m].scale(&c);
            bound = Some(m);
        }
        rem
    }

    /// Add `p`; returns whether the span grew.
    pub fn insert(&mut self, p: &MultiPoly) -> bool {
        let rem = self.reduce(p);
        match rem.leading_term() {
            None => false,
            Some((m, _)) => {
                let m = m.clone();
                self.pivots.insert(m, rem.monic());
                true
            }
        }
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Coefficients of `p` against [`PolySpan::basis`], or `None` if `p` is
    /// outside the span.
    pub fn coordinates(&self, p: &MultiPoly) -> Option<Vec<Scalar>> {
        assert_eq!(p.nvars(), self.nvars);
        let mut coords = vec![Scalar::zero(); self.pivots.len()];
        let mut rem = p.clone();
        for (slot, (m, piv)) in self.pivots.iter().rev().enumerate() {
            let c = rem.coeff(m.exps());
            if !c.is_zero() {
                rem = &rem - &piv.scale(&c);
                coords[slot] = c;
            }
        }
        rem.is_zero().then_some(coords)
    }
}

/// Rectangular matrix of polynomials sharing one variable count.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: Vec<Vec<MultiPoly>>,
}

impl PolyMatrix {
    pub fn new(nvars: usize, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::Shape("ragged polynomial matrix".into()));
            }
            if let Some(p) = row.iter().find(|p| p.nvars() != nvars) {
                return Err(Error::VarCountMismatch(p.nvars(), nvars));
            }
        }
        Ok(PolyMatrix { nvars, rows })
    }

    /// Constant diagonal matrix.
    pub fn diagonal(nvars: usize, diag: &[Scalar]) -> Self {
        let n = diag.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            MultiPoly::constant(nvars, diag[i].clone())
                        } else {
                            MultiPoly::zero(nvars)
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { nvars, rows }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.rows[i][j]
    }
    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.rows
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch(self.nvars, other.nvars));
        }
        let rows = (0..self.nrows())
            .map(|i| {
                (0..other.ncols())
                    .map(|j| {
                        (0..self.ncols()).fold(MultiPoly::zero(self.nvars), |acc, k| {
                            &acc + &(&self.rows[i][k] * &other.rows[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(PolyMatrix {
            nvars: self.nvars,
            rows,
        })
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        assert_eq!(v.len(), self.nrows());
        (0..self.ncols())
            .map(|j| {
                v.iter()
                    .zip(&self.rows)
                    .fold(MultiPoly::zero(self.nvars), |acc, (vi, row)| &acc + &(vi * &row[j]))
            })
            .collect()
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            nvars: self.nvars,
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.nrows();
        n == self.ncols() && (0..n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn identity_system() {
        let m = vec![vec![s(1), s(0)], vec![s(0), s(1)]];
        let b = vec![s(3), Scalar::frac(-1, 2)];
        assert_eq!(solve_linear_exact(&m, &b).unwrap(), LinearSolution::Unique(b));
    }

    #[test]
    fn zero_system_is_full_space() {
        let m = vec![vec![s(0), s(0)], vec![s(0), s(0)]];
        match solve_linear_exact(&m, &[s(0), s(0)]).unwrap() {
            LinearSolution::Family { kernel, .. } => assert_eq!(kernel.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rank_one_consistent() {
        // x + 2y = 3, 2x + 4y = 6: by hand, y free, x = 3 - 2y.
        let m = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        match solve_linear_exact(&m, &[s(3), s(6)]).unwrap() {
            LinearSolution::Family { particular, kernel } => {
                assert_eq!(particular, vec![s(3), s(0)]);
                assert_eq!(kernel, vec![vec![s(-2), s(1)]]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            solve_linear_exact(&m, &[s(3), s(7)]).unwrap(),
            LinearSolution::Inconsistent
        );
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn span_membership() {
        let x = |i| MultiPoly::var(2, i);
        let mut span = PolySpan::new(2);
        assert!(span.insert(&(&x(0) + &x(1))));
        assert!(span.insert(&(&x(0) - &x(1))));
        assert!(!span.insert(&x(0)));
        assert_eq!(span.dim(), 2);
        assert!(!span.contains(&x(0).pow(2)));
        match express_in_span(&x(0), &[&x(0) + &x(1), &x(0) - &x(1)]).unwrap() {
            LinearSolution::Unique(a) => assert_eq!(a, vec![Scalar::frac(1, 2), Scalar::frac(1, 2)]),
            other => panic!("{other:?}"),
        }
    }
}
