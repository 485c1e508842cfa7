//! The shift recursion in flat coordinates and the singular families it
//! produces, plus the twisted-period equations and exact solvers for the
//! spaces they cut out.

use num_rational::BigRational;

use crate::coxeter::{GroupSpec, RootSystem};
use crate::dunkl::{monomials_of_degree, Dunkl};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_of_poly_map, PolyMatrix, PolySpan};
use crate::poly::MultiPoly;
use crate::saito::{basic_invariants, weighted_exponents, PowerTable, SaitoFrame};

/// `U^b_a = g^{b, n+1-a}`: the metric with its column index reversed.
pub fn compute_u(frame: &SaitoFrame) -> PolyMatrix {
    let n = frame.rank();
    let rows = (0..n)
        .map(|b| (0..n).map(|a| frame.g.get(b, n - 1 - a).clone()).collect())
        .collect();
    PolyMatrix::new(n, rows).expect("square matrix")
}

fn check_beta(frame: &SaitoFrame, beta: usize) -> Result<usize> {
    if beta == 0 || beta > frame.rank() {
        return Err(Error::InvalidParameter(format!(
            "beta = {beta} must lie in 1..={}",
            frame.rank()
        )));
    }
    Ok(beta - 1)
}

/// `xi^(0), ..., xi^(m)` for a fixed `beta` (1-based), in t-variables.
pub fn xi_sequence(frame: &SaitoFrame, beta: usize, m: u32) -> Result<Vec<Vec<MultiPoly>>> {
    let b = check_beta(frame, beta)?;
    let n = frame.rank();
    let u = compute_u(frame);
    let h = frame.h as i64;
    let db = frame.degrees[b] as i64;
    let mut xi: Vec<MultiPoly> = (0..n)
        .map(|a| if a == b { MultiPoly::one(n) } else { MultiPoly::zero(n) })
        .collect();
    let mut out = vec![xi.clone()];
    for j in 1..=m as i64 {
        let next = u.left_mul_vec(&xi);
        xi = next
            .iter()
            .zip(&frame.degrees)
            .map(|(p, &da)| {
                // (Lambda + (d_b - 1)/h + j)_aa = (d_b - d_a)/h + j > 0
                let diag = Scalar::frac(db - da as i64 + h * j, h);
                p.scale(&diag.inv().expect("positive diagonal"))
            })
            .collect();
        out.push(xi.clone());
    }
    Ok(out)
}

/// `xi^(m) = e^beta prod_{j=1..m} U (Lambda + (d_beta - 1)/h + j)^{-1}`.
pub fn xi_shift(frame: &SaitoFrame, beta: usize, m: u32) -> Result<Vec<MultiPoly>> {
    Ok(xi_sequence(frame, beta, m)?.pop().unwrap())
}

/// Checks the family passes, filled by `certify_family`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FamilyCertificate {
    pub dunkl_annihilated: bool,
    pub degree_ok: bool,
    pub span_dim: usize,
    pub reflection_type: bool,
    pub cross_symmetric: bool,
    pub euler_ok: bool,
    pub gradient_ok: bool,
}

impl FamilyCertificate {
    pub fn ok(&self, rank: usize) -> bool {
        self.dunkl_annihilated
            && self.degree_ok
            && self.span_dim == rank
            && self.reflection_type
            && self.cross_symmetric
            && self.euler_ok
            && self.gradient_ok
    }
}

/// Singular polynomials `q_i` and their potential `Q` for one `(beta, m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularFamily {
    pub group: GroupSpec,
    /// 1-based index into the descending degrees.
    pub beta: usize,
    pub m: u32,
    /// `c = (d_beta - 1)/h + m`.
    pub c: BigRational,
    /// `xi^(m)` in t-variables.
    pub xi: Vec<MultiPoly>,
    /// `q_1, ..., q_N` in the ambient coordinates.
    pub q: Vec<MultiPoly>,
    /// `Q` in t-variables.
    pub potential_t: MultiPoly,
    /// `Q` in the ambient coordinates.
    pub potential: MultiPoly,
    pub certificate: Option<FamilyCertificate>,
}

impl SingularFamily {
    /// Expected degree `d_beta - 1 + h m` of every `q_i`.
    pub fn degree(&self, frame: &SaitoFrame) -> u32 {
        frame.degrees[self.beta - 1] - 1 + frame.h * self.m
    }

    /// Rescaled so that `Q` has leading coefficient 1.
    pub fn normalized(&self) -> SingularFamily {
        let k = self
            .potential
            .leading_coefficient()
            .and_then(Scalar::inv)
            .unwrap_or_else(Scalar::one);
        SingularFamily {
            xi: self.xi.iter().map(|p| p.scale(&k)).collect(),
            q: self.q.iter().map(|p| p.scale(&k)).collect(),
            potential_t: self.potential_t.scale(&k),
            potential: self.potential.scale(&k),
            ..self.clone()
        }
    }

    /// `sum_i (Q^{-2}) q_i^2` numerator and denominator, the potential of the
    /// associated mechanical system.
    pub fn potential_energy(&self) -> (MultiPoly, MultiPoly) {
        let n = self.potential.nvars();
        let num = self.q.iter().fold(MultiPoly::zero(n), |acc, q| &acc + &(q * q));
        (num, &self.potential * &self.potential)
    }
}

/// Build `q_i = sum_a xi_a(t(x)) d t^a / d x^i` and `Q`, checking that the two
/// routes to `Q` agree.
pub fn singular_family(frame: &SaitoFrame, beta: usize, m: u32) -> Result<SingularFamily> {
    let xi = xi_shift(frame, beta, m)?;
    assemble_family(frame, beta, m, xi)
}

fn assemble_family(frame: &SaitoFrame, beta: usize, m: u32, xi: Vec<MultiPoly>) -> Result<SingularFamily> {
    let b = beta - 1;
    let n = frame.rank();
    let nx = frame.t[0].nvars();
    let total = frame.degrees[b] as i64 + (frame.h * m) as i64;
    let mut table = PowerTable::new(&frame.t);
    let xi_x: Vec<MultiPoly> = xi.iter().map(|p| table.substitute(p)).collect();
    let grads: Vec<Vec<MultiPoly>> = frame.t.iter().map(|t| (0..nx).map(|i| t.diff(i)).collect()).collect();
    let q: Vec<MultiPoly> = (0..nx)
        .map(|i| {
            (0..n).fold(MultiPoly::zero(nx), |acc, a| &acc + &(&xi_x[a] * &grads[a][i]))
        })
        .collect();
    let inv_total = Scalar::frac(1, total);
    let potential_t = (0..n)
        .fold(MultiPoly::zero(n), |acc, a| {
            &acc + &(&xi[a] * &MultiPoly::var(n, a)).scale(&Scalar::int(frame.degrees[a] as i64))
        })
        .scale(&inv_total);
    let potential = table.substitute(&potential_t);
    for (i, qi) in q.iter().enumerate() {
        if potential.diff(i) != *qi {
            return Err(Error::Inconsistent(format!(
                "d Q / d x^{} differs from q_{} for beta = {beta}, m = {m}",
                i + 1,
                i + 1
            )));
        }
    }
    if q.iter().all(MultiPoly::is_zero) {
        return Err(Error::Inconsistent(format!("vanishing family for beta = {beta}, m = {m}")));
    }
    let c = BigRational::new(
        (frame.degrees[b] as i64 - 1 + (frame.h * m) as i64).into(),
        (frame.h as i64).into(),
    );
    Ok(SingularFamily {
        group: frame.group,
        beta,
        m,
        c,
        xi,
        q,
        potential_t,
        potential,
        certificate: None,
    })
}

/// Families for `m = 0, ..., m_max`, sharing the recursion.
pub fn singular_families_upto(frame: &SaitoFrame, beta: usize, m_max: u32) -> Result<Vec<SingularFamily>> {
    xi_sequence(frame, beta, m_max)?
        .into_iter()
        .enumerate()
        .map(|(m, xi)| assemble_family(frame, beta, m as u32, xi))
        .collect()
}

/// Run every independent check on a family.
pub fn certify_family(rs: &RootSystem, frame: &SaitoFrame, fam: &SingularFamily) -> Result<FamilyCertificate> {
    let nx = rs.ambient_dim();
    let deg = fam.degree(frame);
    let dunkl = Dunkl::new(rs, Scalar::from(fam.c.clone()));
    let mut dunkl_annihilated = true;
    for q in &fam.q {
        if !dunkl.apply_all(q)?.iter().all(MultiPoly::is_zero) {
            dunkl_annihilated = false;
            break;
        }
    }
    let degree_ok = fam
        .q
        .iter()
        .all(|q| q.is_zero() || (q.is_homogeneous() && q.total_degree() == Some(deg)));
    let lead = fam.q.iter().find(|q| !q.is_zero()).cloned().unwrap_or_else(|| MultiPoly::zero(nx));
    let orbit = rs.module_span(&lead);
    let span_dim = orbit.len();
    let reflection_type = rs.is_reflection_module(&fam.q) && PolySpan::from_polys(nx, &fam.q).dim() == span_dim;
    let cross_symmetric = (0..nx).all(|i| (i + 1..nx).all(|j| fam.q[j].diff(i) == fam.q[i].diff(j)));
    let euler_x = fam
        .q
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(nx), |acc, (i, q)| &acc + &(&MultiPoly::var(nx, i) * q));
    let euler_ok = euler_x == fam.potential.scale(&Scalar::int(deg as i64 + 1));
    let gradient_ok = fam.q.iter().enumerate().all(|(i, q)| fam.potential.diff(i) == *q);
    Ok(FamilyCertificate {
        dunkl_annihilated,
        degree_ok,
        span_dim,
        reflection_type,
        cross_symmetric,
        euler_ok,
        gradient_ok,
    })
}

/// Build and certify in one step.
pub fn certified_family(rs: &RootSystem, frame: &SaitoFrame, beta: usize, m: u32) -> Result<SingularFamily> {
    let mut fam = singular_family(frame, beta, m)?;
    fam.certificate = Some(certify_family(rs, frame, &fam)?);
    Ok(fam)
}

/// `Q = sum_a t^a t^{n+1-a}`; its derivatives are singular at `c = (h+1)/h`.
pub fn top_pairing_potential(frame: &SaitoFrame) -> MultiPoly {
    let n = frame.rank();
    let nx = frame.t[0].nvars();
    (0..n).fold(MultiPoly::zero(nx), |acc, a| &acc + &(&frame.t[a] * &frame.t[n - 1 - a]))
}

/// `C*_{ijk} = sum_gamma 2 gamma_i gamma_j gamma_k / ((gamma, gamma)(gamma, x))`.
#[derive(Debug, Clone)]
pub struct TensorCstar<'a> {
    rs: &'a RootSystem,
}

impl<'a> TensorCstar<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        TensorCstar { rs }
    }

    /// `prod_gamma (gamma, x)`.
    pub fn denominator(&self) -> MultiPoly {
        let n = self.rs.ambient_dim();
        self.rs.roots().iter().fold(MultiPoly::one(n), |acc, r| &acc * &r.linear_form())
    }

    /// Numerator of `C*_{ijk}` over `denominator()`.
    pub fn numerator(&self, i: usize, j: usize, k: usize) -> MultiPoly {
        let n = self.rs.ambient_dim();
        let roots = self.rs.roots();
        let mut out = MultiPoly::zero(n);
        for (idx, r) in roots.iter().enumerate() {
            let w = &(&(&r.vector[i] * &r.vector[j]) * &r.vector[k]) * &Scalar::int(2);
            if w.is_zero() {
                continue;
            }
            let w = &w * &r.norm2.inv().unwrap();
            let rest = roots
                .iter()
                .enumerate()
                .filter(|(o, _)| *o != idx)
                .fold(MultiPoly::one(n), |acc, (_, r2)| &acc * &r2.linear_form());
            out = &out + &rest.scale(&w);
        }
        out
    }
}

/// Residual of `d_i d_j p - nu sum_gamma 2 g_i g_j/(g,g) (g, dp)/(g, x)` for
/// invariant `p`; each quotient is an exact polynomial division.
fn pde_residuals(rs: &RootSystem, p: &MultiPoly, nu: &Scalar) -> Result<Vec<MultiPoly>> {
    let n = rs.ambient_dim();
    let grad: Vec<MultiPoly> = (0..n).map(|i| p.diff(i)).collect();
    let mut quotients = Vec::with_capacity(rs.roots().len());
    for r in rs.roots() {
        let dgamma = r
            .vector
            .iter()
            .zip(&grad)
            .fold(MultiPoly::zero(n), |acc, (g, d)| &acc + &d.scale(g));
        let quo = dgamma.exact_divide_by_linear_form(&r.vector)?;
        quotients.push(quo.scale(&(&Scalar::int(2) * &r.norm2.inv().unwrap())));
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut res = grad[i].diff(j);
            for (r, quo) in rs.roots().iter().zip(&quotients) {
                let w = &r.vector[i] * &r.vector[j];
                if !w.is_zero() {
                    res = &res - &quo.scale(&(&w * nu));
                }
            }
            out.push(res);
        }
    }
    Ok(out)
}

/// Whether the invariant `p` solves `d_i d_j p = nu C*^k_{ij} d_k p`.
pub fn twisted_period_pde_check(rs: &RootSystem, p: &MultiPoly, nu: &Scalar) -> Result<bool> {
    if !rs.is_invariant(p) {
        return Err(Error::NotInvariant(p.to_string()));
    }
    Ok(pde_residuals(rs, p, nu)?.iter().all(MultiPoly::is_zero))
}

/// The same system with all denominators cleared by `prod_gamma (gamma, x)`.
pub fn twisted_period_pde_check_cleared(rs: &RootSystem, p: &MultiPoly, nu: &Scalar) -> Result<bool> {
    rs.check_vars(p)?;
    let n = rs.ambient_dim();
    let cs = TensorCstar::new(rs);
    let den = cs.denominator();
    let grad: Vec<MultiPoly> = (0..n).map(|i| p.diff(i)).collect();
    for i in 0..n {
        for j in i..n {
            let lhs = &den * &grad[i].diff(j);
            let mut rhs = MultiPoly::zero(n);
            for (k, g) in grad.iter().enumerate() {
                if !g.is_zero() {
                    rhs = &rhs + &(&cs.numerator(i, j, k) * g);
                }
            }
            if lhs != rhs.scale(nu) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Basis of the invariant homogeneous degree-`degree` solutions of the
/// twisted-period equations.
pub fn homogeneous_twisted_periods(rs: &RootSystem, nu: &Scalar, degree: u32) -> Result<Vec<MultiPoly>> {
    if degree == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let ib = basic_invariants(rs)?;
    let mut table = PowerTable::new(&ib.polys);
    let ansatz: Vec<MultiPoly> = weighted_exponents(&ib.degrees, degree)
        .iter()
        .map(|e| table.monomial(e))
        .collect();
    let images: Vec<Vec<MultiPoly>> = ansatz
        .iter()
        .map(|p| pde_residuals(rs, p, nu))
        .collect::<Result<_>>()?;
    Ok(combine(&ansatz, &kernel_of_poly_map(&images), rs.ambient_dim()))
}

fn combine(basis: &[MultiPoly], kernel: &[Vec<Scalar>], nvars: usize) -> Vec<MultiPoly> {
    kernel
        .iter()
        .map(|v| {
            basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .fold(MultiPoly::zero(nvars), |acc, (p, c)| &acc + &p.scale(c))
                .monic()
        })
        .collect()
}

/// Basis of all homogeneous degree-`degree` singular polynomials.
pub fn singular_space(rs: &RootSystem, c: &Scalar, degree: u32) -> Result<Vec<MultiPoly>> {
    let n = rs.ambient_dim();
    let d = Dunkl::new(rs, c.clone());
    let monos: Vec<MultiPoly> = monomials_of_degree(n, degree)
        .into_iter()
        .map(|m| MultiPoly::monomial(m, Scalar::one()))
        .collect();
    let images: Vec<Vec<MultiPoly>> = monos.iter().map(|m| d.apply_all(m)).collect::<Result<_>>()?;
    Ok(combine(&monos, &kernel_of_poly_map(&images), n))
}

/// Basis of the homogeneous singular polynomials of degree `degree` in the
/// reflection-isotypic component: the span of all images of equivariant maps
/// from the reflection representation into the singular space.
pub fn isotypic_singular_space(rs: &RootSystem, c: &Scalar, degree: u32) -> Result<Vec<MultiPoly>> {
    let n = rs.ambient_dim();
    let sing = singular_space(rs, c, degree)?;
    if sing.is_empty() {
        return Ok(Vec::new());
    }
    let mut span = PolySpan::new(n);
    for images in rs.equivariant_maps(&sing) {
        for p in &images {
            span.insert(p);
        }
    }
    Ok(span.basis())
}
