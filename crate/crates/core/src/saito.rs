//! Basic invariants, the contravariant metric `g` and Saito flat coordinates.
//!
//! Candidate flat coordinates are the residue twisted periods at `m = 0`.
//! They are rescaled (and, for `D_{2r}`, mixed within the degree-`n` pair)
//! so that `d g / d t^1` is the antidiagonal identity. `verify_saito` then
//! recomputes everything from the coordinates alone.

use num_rational::BigRational;
use num_traits::Zero;

use crate::coxeter::{GroupSpec, GroupType, RootSystem};
use crate::error::{Error, Result};
use crate::field::{sqrt_in_extension, Scalar};
use crate::linalg::{express_in_span, rank, LinearSolution, PolyMatrix};
use crate::poly::MultiPoly;
use crate::residues::{residue_twisted_period, ResidueKind};

/// Homogeneous invariants `y^1, ..., y^n` with descending degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantBasis {
    pub polys: Vec<MultiPoly>,
    pub degrees: Vec<u32>,
}

fn power_sum(nvars: usize, k: u32) -> MultiPoly {
    (0..nvars).fold(MultiPoly::zero(nvars), |acc, i| &acc + &MultiPoly::var(nvars, i).pow(k))
}

/// Power sums (centered for type A, of squares for B and D) plus
/// `x_1 ... x_n` for `D_n`.
pub fn basic_invariants(rs: &RootSystem) -> Result<InvariantBasis> {
    let n = rs.rank();
    let amb = rs.ambient_dim();
    let mut items: Vec<(u32, MultiPoly)> = match rs.kind() {
        GroupType::A => (2..=n as u32 + 1).map(|k| (k, power_sum(amb, k).center())).collect(),
        GroupType::B => (1..=n as u32).map(|k| (2 * k, power_sum(amb, 2 * k))).collect(),
        GroupType::D => {
            let mut v: Vec<(u32, MultiPoly)> =
                (1..n as u32).map(|k| (2 * k, power_sum(amb, 2 * k))).collect();
            v.push((n as u32, MultiPoly::from_terms(n, [(vec![1; n], Scalar::one())])));
            v
        }
    };
    items.sort_by(|a, b| b.0.cmp(&a.0));
    let (degrees, polys) = items.into_iter().unzip();
    Ok(InvariantBasis { polys, degrees })
}

/// Points where a Jacobian is evaluated; chosen off all reflecting hyperplanes.
fn sample_points(nvars: usize) -> Vec<Vec<Scalar>> {
    let seeds: [&[i64]; 3] = [&[2, 3, 5, 7, 11, 13, 17], &[1, 4, 9, 16, 25, 36, 49], &[3, -7, 12, 20, -31, 45, 58]];
    seeds
        .iter()
        .map(|s| (0..nvars).map(|i| Scalar::int(s[i % s.len()] + 60 * (i / s.len()) as i64)).collect())
        .collect()
}

/// `det(d y^a / d x^i) != 0`, tested at a few exact points. For type A the
/// Jacobian is taken on the hyperplane `sum z = 0`.
pub fn jacobian_nonzero(rs: &RootSystem, polys: &[MultiPoly]) -> bool {
    let n = rs.rank();
    if polys.len() != n {
        return false;
    }
    let restricted: Vec<MultiPoly> = if rs.kind() == GroupType::A {
        polys.iter().map(MultiPoly::restrict_to_sum_zero).collect()
    } else {
        polys.to_vec()
    };
    if restricted.iter().any(|p| p.nvars() != n) {
        return false;
    }
    let jac: Vec<Vec<MultiPoly>> = restricted.iter().map(|p| (0..n).map(|i| p.diff(i)).collect()).collect();
    sample_points(n).iter().any(|pt| {
        let m: Vec<Vec<Scalar>> = jac.iter().map(|row| row.iter().map(|e| e.eval(pt)).collect()).collect();
        rank(&m) == n
    })
}

/// Exponent vectors `a` with `sum a_k w_k = total`.
pub fn weighted_exponents(weights: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == weights.len() {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let w = weights[prefix.len()];
        let max = if w == 0 { 0 } else { left / w };
        for e in 0..=max {
            prefix.push(e);
            rec(weights, left - e * w, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, total, &mut Vec::new(), &mut out);
    out
}

/// Evaluates monomials `y^a` with `y = (polys)`, caching powers.
#[derive(Debug, Clone)]
pub struct PowerTable {
    powers: Vec<Vec<MultiPoly>>,
    nvars: usize,
}

impl PowerTable {
    pub fn new(polys: &[MultiPoly]) -> Self {
        let nvars = polys.first().map(MultiPoly::nvars).unwrap_or(0);
        PowerTable {
            powers: polys.iter().map(|p| vec![MultiPoly::one(nvars), p.clone()]).collect(),
            nvars,
        }
    }

    fn power(&mut self, k: usize, e: u32) -> &MultiPoly {
        let row = &mut self.powers[k];
        while row.len() <= e as usize {
            let next = row.last().unwrap() * &row[1];
            row.push(next);
        }
        &row[e as usize]
    }

    pub fn monomial(&mut self, exps: &[u32]) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for (k, &e) in exps.iter().enumerate() {
            if e > 0 {
                out = &out * self.power(k, e);
            }
        }
        out
    }

    /// `P(polys)` for a polynomial `P` in as many variables as there are polys.
    pub fn substitute(&mut self, p: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in p.terms() {
            out = &out + &self.monomial(m.exps()).scale(c);
        }
        out
    }
}

/// The unique `P` with `P(y^1(x), ..., y^n(x)) = p(x)`, by a weighted-degree
/// ansatz. `degrees[k]` is the degree of `basis[k]`.
pub fn express_in_invariants(p: &MultiPoly, basis: &[MultiPoly], degrees: &[u32]) -> Result<MultiPoly> {
    let mut table = PowerTable::new(basis);
    express_with_table(p, &mut table, degrees)
}

pub(crate) fn express_with_table(p: &MultiPoly, table: &mut PowerTable, degrees: &[u32]) -> Result<MultiPoly> {
    let k = degrees.len();
    if p.is_zero() {
        return Ok(MultiPoly::zero(k));
    }
    if !p.is_homogeneous() {
        return Err(Error::InvalidParameter(format!("not homogeneous: {p}")));
    }
    let d = p.total_degree().unwrap();
    let exps = weighted_exponents(degrees, d);
    let images: Vec<MultiPoly> = exps.iter().map(|e| table.monomial(e)).collect();
    match express_in_span(p, &images)? {
        LinearSolution::Unique(coefs) => Ok(MultiPoly::from_terms(k, exps.into_iter().zip(coefs))),
        LinearSolution::Family { .. } => Err(Error::Inconsistent(
            "the invariants are algebraically dependent in this degree".into(),
        )),
        LinearSolution::Inconsistent => Err(Error::NotInSubring),
    }
}

/// `g^{ab} = sum_i (d coord^a / dx^i)(d coord^b / dx^i)`, rewritten as
/// polynomials in the coordinates.
pub fn contravariant_metric(rs: &RootSystem, coords: &[MultiPoly], degrees: &[u32]) -> Result<PolyMatrix> {
    let k = coords.len();
    for c in coords {
        rs.check_vars(c)?;
    }
    let grads: Vec<Vec<MultiPoly>> = coords
        .iter()
        .map(|c| (0..rs.ambient_dim()).map(|i| c.diff(i)).collect())
        .collect();
    let mut table = PowerTable::new(coords);
    let mut rows = vec![vec![MultiPoly::zero(k); k]; k];
    for a in 0..k {
        for b in a..k {
            let gx = grads[a]
                .iter()
                .zip(&grads[b])
                .fold(MultiPoly::zero(rs.ambient_dim()), |acc, (u, v)| &acc + &(u * v));
            let gt = express_with_table(&gx, &mut table, degrees)?;
            rows[a][b] = gt.clone();
            rows[b][a] = gt;
        }
    }
    PolyMatrix::new(k, rows)
}

/// Flat coordinates together with the metric `g` written in them.
#[derive(Debug, Clone, PartialEq)]
pub struct SaitoFrame {
    pub group: GroupSpec,
    pub degrees: Vec<u32>,
    pub h: u32,
    /// `t^1, ..., t^n` as polynomials in the ambient coordinates.
    pub t: Vec<MultiPoly>,
    /// `g^{ab}(t)`.
    pub g: PolyMatrix,
}

impl SaitoFrame {
    pub fn rank(&self) -> usize {
        self.t.len()
    }

    /// Diagonal of `Lambda = -(1/h) diag(d_1 - 1, ..., d_n - 1)`.
    pub fn lambda(&self) -> Vec<BigRational> {
        self.degrees
            .iter()
            .map(|&d| -BigRational::new((d as i64 - 1).into(), (self.h as i64).into()))
            .collect()
    }

    /// Euler vector field components `E^a = (d_a / h) t^a`, in t-variables.
    pub fn euler_components(&self) -> Vec<MultiPoly> {
        let n = self.rank();
        self.degrees
            .iter()
            .enumerate()
            .map(|(a, &d)| MultiPoly::var(n, a).scale(&Scalar::frac(d as i64, self.h as i64)))
            .collect()
    }

    /// The antidiagonal pairing `d g / d t^1`.
    pub fn eta(&self) -> PolyMatrix {
        self.g.map(|e| e.diff(0))
    }
}

fn candidate_coordinates(rs: &RootSystem) -> Result<Vec<MultiPoly>> {
    let n = rs.rank();
    let mut items: Vec<(u32, u8, MultiPoly)> = Vec::new();
    match rs.kind() {
        GroupType::A => {
            for s in 1..=n as u32 {
                items.push((s + 1, 0, residue_twisted_period(ResidueKind::A, n, s, 0)?));
            }
        }
        GroupType::B => {
            for s in 1..=n as u32 {
                items.push((2 * s, 0, residue_twisted_period(ResidueKind::B, n, s, 0)?));
            }
        }
        GroupType::D => {
            for s in 1..n as u32 {
                items.push((2 * s, 0, residue_twisted_period(ResidueKind::DInfinity, n, s, 0)?));
            }
            items.push((n as u32, 1, residue_twisted_period(ResidueKind::DZero, n, 0, 0)?));
        }
    }
    // Descending degree; among equal degrees the product-type polynomial last.
    items.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    Ok(items.into_iter().map(|(_, _, p)| p).collect())
}

fn constant_of(p: &MultiPoly) -> Result<Scalar> {
    match p.total_degree() {
        None => Ok(Scalar::zero()),
        Some(0) => Ok(p.coeff(&vec![0; p.nvars()])),
        _ => Err(Error::Inconsistent(format!("d g / d t^1 has a non-constant entry {p}"))),
    }
}

fn inverse(s: &Scalar) -> Result<Scalar> {
    s.inv()
        .ok_or_else(|| Error::Inconsistent("degenerate pairing between candidate coordinates".into()))
}

/// Build the Saito frame of a classical root system.
pub fn saito_frame(rs: &RootSystem) -> Result<SaitoFrame> {
    let n = rs.rank();
    if rs.kind() == GroupType::D && n < 3 {
        return Err(Error::UnsupportedGroup(format!("{} (Saito frames need D_n with n >= 3)", rs.spec())));
    }
    let degrees = rs.degrees().to_vec();
    let h = rs.coxeter_number();
    let cand = candidate_coordinates(rs)?;
    let g = contravariant_metric(rs, &cand, &degrees)?;
    let eta: Vec<Vec<Scalar>> = (0..n)
        .map(|a| (0..n).map(|b| constant_of(&g.get(a, b).diff(0))).collect())
        .collect::<Result<_>>()?;

    let pair_block = (rs.kind() == GroupType::D && n.is_multiple_of(2)).then(|| n / 2 - 1);
    let mut lambda = vec![Scalar::one(); n];
    if n == 1 {
        lambda[0] = inverse(&eta[0][0])?;
    } else {
        if n % 2 == 1 {
            let mid = n / 2;
            lambda[0] = eta[mid][mid].clone();
            inverse(&lambda[0])?;
        }
        lambda[n - 1] = inverse(&eta[0][n - 1])?;
        for a in 1..n / 2 {
            if Some(a) == pair_block {
                continue;
            }
            lambda[n - 1 - a] = &lambda[0] * &inverse(&eta[a][n - 1 - a])?;
        }
    }
    let mut t: Vec<MultiPoly> = cand.iter().zip(&lambda).map(|(c, l)| c.scale(l)).collect();

    if let Some(r) = pair_block {
        let (a, b, e) = (&eta[r][r], &eta[r][r + 1], &eta[r + 1][r + 1]);
        let (u, v) = isotropic_pair(a, b, e)?;
        let form = |x: &[Scalar; 2], y: &[Scalar; 2]| -> Scalar {
            let t1 = &(a * &x[0]) * &y[0];
            let t2 = &(b * &(&(&x[0] * &y[1]) + &(&x[1] * &y[0])));
            let t3 = &(e * &x[1]) * &y[1];
            &(&t1 + t2) + &t3
        };
        let scale = &lambda[0] * &inverse(&form(&u, &v))?;
        let combo = |w: &[Scalar; 2]| &cand[r].scale(&w[0]) + &cand[r + 1].scale(&w[1]);
        t[r] = combo(&u).scale(&scale);
        t[r + 1] = combo(&v);
    }

    let g = contravariant_metric(rs, &t, &degrees)?;
    let frame = SaitoFrame {
        group: rs.spec(),
        degrees,
        h,
        t,
        g,
    };
    let report = verify_saito(rs, &frame);
    if !report.ok() {
        return Err(Error::Inconsistent(format!("normalized frame for {} is not flat", rs.spec())));
    }
    Ok(frame)
}

/// Two independent isotropic vectors of `[[a, b], [b, e]]`, the second one
/// preferring the second basis vector.
fn isotropic_pair(a: &Scalar, b: &Scalar, e: &Scalar) -> Result<([Scalar; 2], [Scalar; 2])> {
    let z = Scalar::zero;
    let o = Scalar::one;
    if e.is_zero() {
        let u = if a.is_zero() { [o(), z()] } else { [&Scalar::int(2) * b, -a] };
        return Ok((u, [z(), o()]));
    }
    if a.is_zero() {
        return Ok(([o(), z()], [e.clone(), -&(&Scalar::int(2) * b)]));
    }
    let disc = (&(b * b) - &(a * e))
        .as_rational()
        .cloned()
        .ok_or_else(|| Error::Inconsistent("pairing on the equal-degree pair is not rational".into()))?;
    if disc.is_zero() {
        return Err(Error::Inconsistent("degenerate pairing on the equal-degree pair".into()));
    }
    let root = sqrt_in_extension(&disc)?;
    let a_inv = inverse(a)?;
    let rho = |r: &Scalar| &(&(-b) + r) * &a_inv;
    Ok(([rho(&-&root), o()], [rho(&root), o()]))
}

/// Result of an independent recomputation of a frame's defining identities.
#[derive(Debug, Clone, PartialEq)]
pub struct SaitoReport {
    pub degrees_ok: bool,
    pub invariant_ok: bool,
    pub independent: bool,
    /// `d g / d t^1`, if `g` could be rewritten in the coordinates.
    pub eta: Option<PolyMatrix>,
    pub flat: bool,
}

impl SaitoReport {
    pub fn ok(&self) -> bool {
        self.degrees_ok && self.invariant_ok && self.independent && self.flat
    }
}

/// Recompute `g` from `frame.t` alone and check `d g / d t^1 = delta^{a+b}_{n+1}`.
pub fn verify_saito(rs: &RootSystem, frame: &SaitoFrame) -> SaitoReport {
    let n = rs.rank();
    let t = &frame.t;
    let degrees_ok = t.len() == n
        && frame.degrees == rs.degrees()
        && t.iter().zip(rs.degrees()).all(|(p, &d)| p.is_homogeneous() && p.total_degree() == Some(d));
    let invariant_ok = t.len() == n && t.iter().all(|p| rs.is_invariant(p));
    let independent = degrees_ok && jacobian_nonzero(rs, t);
    let mut report = SaitoReport {
        degrees_ok,
        invariant_ok,
        independent,
        eta: None,
        flat: false,
    };
    if !(degrees_ok && invariant_ok && independent) {
        return report;
    }
    let Ok(g) = contravariant_metric(rs, t, rs.degrees()) else {
        return report;
    };
    let eta = g.map(|e| e.diff(0));
    report.flat = (0..n).all(|a| {
        (0..n).all(|b| {
            let want = if a + b == n - 1 { MultiPoly::one(n) } else { MultiPoly::zero(n) };
            *eta.get(a, b) == want
        })
    }) && g == frame.g;
    report.eta = Some(eta);
    report
}
