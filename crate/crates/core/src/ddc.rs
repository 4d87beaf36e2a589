//! Quadruple validation and enumeration, the coefficient system of the
//! differential data criterion, and the two isolatedness tests (the
//! coefficient matrix and the root-based Vandermonde oracle).

use crate::error::{Error, Result};
use crate::gf::{self, Field, FieldElement};
use crate::upoly::{self, LaurentDifferential, UniPoly};

/// A validated quadruple (p, m, u~, N) with derived invariants:
/// u is the prime-to-p part of u~, nu its p-adic valuation, and
/// epsilon in {0,1} satisfies N = (p-1) u~ - epsilon m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quadruple {
    p: u64,
    m: u64,
    u_tilde: u64,
    n: u64,
    u: u64,
    nu: u32,
    epsilon: u8,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Quadruple {
    pub fn new(p: u64, m: u64, u_tilde: u64, n: u64) -> Result<Quadruple> {
        let fail = |reason: &str| Error::InvalidQuadruple {
            p,
            m,
            u_tilde,
            n,
            reason: reason.into(),
        };
        if p < 3 || !is_prime(p) || p % 2 == 0 {
            return Err(fail("p must be an odd prime"));
        }
        if m <= 1 {
            return Err(fail("m must exceed 1"));
        }
        if (p - 1) % m != 0 {
            return Err(fail("m must divide p - 1"));
        }
        if u_tilde == 0 {
            return Err(fail("u~ must be positive"));
        }
        if u_tilde % m != m - 1 {
            return Err(fail("u~ must be congruent to -1 mod m"));
        }
        let full = u_tilde * (p - 1);
        let epsilon = if n == full {
            0
        } else if n + m == full {
            1
        } else {
            return Err(fail("N must be u~(p-1) or u~(p-1) - m"));
        };
        let mut u = u_tilde;
        let mut nu = 0;
        while u % p == 0 {
            u /= p;
            nu += 1;
        }
        Ok(Quadruple {
            p,
            m,
            u_tilde,
            n,
            u,
            nu,
            epsilon,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn u_tilde(&self) -> u64 {
        self.u_tilde
    }

    /// The degree N.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The prime-to-p part of u~.
    pub fn u(&self) -> u64 {
        self.u
    }

    /// p-adic valuation of u~.
    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn epsilon(&self) -> u8 {
        self.epsilon
    }

    /// u reduced into GF(p), lifted into `field` (characteristic p).
    pub fn u_element(&self, field: &Field) -> FieldElement {
        field.from_u64(self.u % self.p)
    }

    /// -u^{-1}, the forced constant coefficient of any solution.
    pub fn a0_value(&self, field: &Field) -> FieldElement {
        let u = self.u_element(field);
        -&gf::inv(&u).expect("u is prime to p")
    }

    /// N/m, the number of nonconstant coefficient slots.
    pub fn cols(&self) -> u64 {
        self.n / self.m
    }

    /// ceil(u~ - u~/p) computed exactly as ceil(u~ (p-1) / p).
    pub fn threshold(&self) -> u64 {
        let num = self.u_tilde * (self.p - 1);
        num.div_ceil(self.p)
    }

    /// Size (u~ + 1 - m)/m of the isolatedness coefficient matrix.
    pub fn matrix_size(&self) -> u64 {
        (self.u_tilde + 1 - self.m) / self.m
    }

    pub fn support_plan(&self) -> SupportPlan {
        let threshold = self.threshold();
        let mut constrained = vec![];
        let mut forced_zero = vec![];
        let mut mi = self.m;
        while mi <= self.n {
            if mi >= threshold {
                constrained.push(mi);
            } else {
                forced_zero.push(mi);
            }
            mi += self.m;
        }
        SupportPlan {
            threshold,
            constrained,
            forced_zero,
        }
    }
}

/// Index partition of {m, 2m, ..., N} into equation-constrained and
/// forced-zero coefficients (index 0 is the pinned a_0 slot).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportPlan {
    /// ceil(u~(p-1)/p): first equation-constrained index.
    pub threshold: u64,
    /// Indices mi carrying the equation u a_{mi}^p = c_{p mi - u~(p-1)},
    /// ascending.
    pub constrained: Vec<u64>,
    /// Indices mi below the threshold forced to vanish, ascending.
    pub forced_zero: Vec<u64>,
}

/// All quadruples (p, m, u~, N) for the tower of height `levels`:
/// m-1 <= u~ <= (p^{levels-2} + ... + 1)(mp - 1) with u~ = -1 mod m and
/// p^{levels-1} not dividing u~; both N choices, ascending (u~, N).
pub fn enumerate_quadruples(p: u64, m: u64, levels: u32) -> Result<Vec<Quadruple>> {
    if levels < 2 {
        return Err(Error::InvalidParameters("tower height must be >= 2".into()));
    }
    if !is_prime(p) || p % 2 == 0 {
        return Err(Error::InvalidParameters(format!(
            "p = {p} must be an odd prime"
        )));
    }
    if m <= 1 || (p - 1) % m != 0 {
        return Err(Error::InvalidParameters(format!(
            "m = {m} must exceed 1 and divide p - 1 = {}",
            p - 1
        )));
    }
    // geometric sum p^{levels-2} + ... + 1
    let mut geo: u64 = 0;
    for _ in 0..levels - 1 {
        geo = geo
            .checked_mul(p)
            .and_then(|g| g.checked_add(1))
            .ok_or_else(|| Error::InvalidParameters("tower height too large".into()))?;
    }
    let hi = geo
        .checked_mul(m * p - 1)
        .ok_or_else(|| Error::InvalidParameters("tower height too large".into()))?;
    let p_pow = p
        .checked_pow(levels - 1)
        .ok_or_else(|| Error::InvalidParameters("tower height too large".into()))?;
    let mut out = vec![];
    let mut u_tilde = m - 1;
    while u_tilde <= hi {
        if u_tilde > 0 && u_tilde % p_pow != 0 {
            let full = u_tilde * (p - 1);
            out.push(Quadruple::new(p, m, u_tilde, full - m)?);
            out.push(Quadruple::new(p, m, u_tilde, full)?);
        }
        u_tilde += m;
    }
    Ok(out)
}

/// The two cover families whose result tables ship with the tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverGroup {
    D25,
    D27,
}

impl CoverGroup {
    /// (p, m, tower height) for the family.
    pub fn params(&self) -> (u64, u64, u32) {
        match self {
            CoverGroup::D25 => (5, 2, 2),
            CoverGroup::D27 => (3, 2, 3),
        }
    }

    /// The published (u~, N) list for this family. For D27 this is a
    /// strict subset of the literal enumeration (12 of 18 pairs).
    pub fn published_pairs(&self) -> &'static [(u64, u64)] {
        match self {
            CoverGroup::D25 => &[
                (1, 2),
                (1, 4),
                (3, 10),
                (3, 12),
                (7, 26),
                (7, 28),
                (9, 34),
                (9, 36),
            ],
            CoverGroup::D27 => &[
                (3, 4),
                (3, 6),
                (5, 8),
                (5, 10),
                (7, 12),
                (7, 14),
                (15, 28),
                (15, 30),
                (17, 32),
                (17, 34),
                (19, 36),
                (19, 38),
            ],
        }
    }

    pub fn parse(s: &str) -> Result<CoverGroup> {
        match s.to_ascii_lowercase().as_str() {
            "d25" => Ok(CoverGroup::D25),
            "d27" => Ok(CoverGroup::D27),
            _ => Err(Error::Parse(format!(
                "unknown group '{s}', expected d25 or d27"
            ))),
        }
    }
}

impl std::fmt::Display for CoverGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverGroup::D25 => write!(f, "d25"),
            CoverGroup::D27 => write!(f, "d27"),
        }
    }
}

fn check_f(q: &Quadruple, f: &UniPoly) -> Result<()> {
    f.check_support_multiple_of(q.m)?;
    if let Some(d) = f.degree() {
        if d as u64 > q.n {
            return Err(Error::BadSupport { exp: d, m: q.m });
        }
    }
    Ok(())
}

/// Coefficients c_{mj} of t^{mj} in f^{p-1}, for 0 <= j <= (p-1)N/m.
pub fn c_coefficients(q: &Quadruple, f: &UniPoly) -> Result<Vec<FieldElement>> {
    check_f(q, f)?;
    let power = f.pow(q.p - 1);
    let count = (q.p - 1) * q.n / q.m + 1;
    Ok((0..count)
        .map(|j| power.coeff((j * q.m) as usize))
        .collect())
}

fn compositions_rec(
    q: &Quadruple,
    f: &UniPoly,
    field: &Field,
    slots: usize,
    target_weight: u64,
    total_fact: u64,
    assignment: &mut Vec<u64>,
    slot: usize,
    remaining: u64,
    weight: u64,
    total: &mut FieldElement,
) {
    if weight > target_weight {
        return;
    }
    if slot == slots {
        if remaining == 0 && weight == target_weight {
            let mut denom = 1u64;
            for &s in assignment.iter() {
                denom *= (1..=s).product::<u64>().max(1);
            }
            let multinomial = (total_fact / denom) % q.p;
            let mut term = field.from_u64(multinomial);
            for (i, &s) in assignment.iter().enumerate() {
                if s > 0 {
                    term = &term * &f.coeff(i * q.m as usize).pow(s);
                }
            }
            *total = &*total + &term;
        }
        return;
    }
    for s in 0..=remaining {
        assignment[slot] = s;
        compositions_rec(
            q,
            f,
            field,
            slots,
            target_weight,
            total_fact,
            assignment,
            slot + 1,
            remaining - s,
            weight + s * slot as u64 * q.m,
            total,
        );
    }
    assignment[slot] = 0;
}

/// c_{mj} by direct enumeration of the multinomial expansion: the sum
/// over compositions (s_0, ..., s_{N/m}) of p-1 with weighted sum mj of
/// multinomial(p-1; s) * prod a_{mi}^{s_i}. Desk-scale oracle for
/// [`c_coefficients`].
pub fn c_multinomial_oracle(q: &Quadruple, f: &UniPoly, j: u64) -> Result<FieldElement> {
    check_f(q, f)?;
    let field = f.field().clone();
    let slots = q.cols() as usize + 1;
    let total_fact: u64 = (1..=q.p - 1).product::<u64>().max(1);
    let mut total = field.zero();
    let mut assignment = vec![0u64; slots];
    compositions_rec(
        q,
        f,
        &field,
        slots,
        j * q.m,
        total_fact,
        &mut assignment,
        0,
        q.p - 1,
        0,
        &mut total,
    );
    Ok(total)
}

/// The residual vector of the coefficient system: [a_0 + u^{-1}], then
/// u a_{mi}^p - c_{p mi - u~(p-1)} for each constrained index, then the
/// forced-zero coefficients; plus the a_N != 0 flag. All residuals zero
/// with the flag set iff f solves the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemResiduals {
    pub residuals: Vec<FieldElement>,
    pub leading_nonzero: bool,
}

impl SystemResiduals {
    pub fn is_solution(&self) -> bool {
        self.leading_nonzero && self.residuals.iter().all(|r| r.is_zero())
    }
}

pub fn system_residuals(q: &Quadruple, f: &UniPoly) -> Result<SystemResiduals> {
    check_f(q, f)?;
    let field = f.field().clone();
    let plan = q.support_plan();
    let cs = c_coefficients(q, f)?;
    let u = q.u_element(&field);
    let u_inv = gf::inv(&u).expect("u prime to p");
    let mut residuals = vec![&f.coeff(0) + &u_inv];
    for &mi in &plan.constrained {
        let cj = q.p * mi - q.u_tilde * (q.p - 1);
        debug_assert_eq!(cj % q.m, 0);
        let c = cs
            .get((cj / q.m) as usize)
            .cloned()
            .unwrap_or_else(|| field.zero());
        let lhs = &u * &f.coeff(mi as usize).pow(q.p);
        residuals.push(&lhs - &c);
    }
    for &mi in &plan.forced_zero {
        residuals.push(f.coeff(mi as usize));
    }
    Ok(SystemResiduals {
        residuals,
        leading_nonzero: !f.coeff(q.n as usize).is_zero(),
    })
}

/// Independent verifier of the differential data criterion: true iff
/// deg f = N and the Cartier operator sends t^{(p-1)(u~+1)} f^{p-1} dt
/// exactly to (1 + u f) dt.
pub fn verify_ddc_cartier(q: &Quadruple, f: &UniPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::BothZero);
    }
    check_f(q, f)?;
    if f.degree() != Some(q.n as usize) {
        return Ok(false);
    }
    let field = f.field().clone();
    let power = f.pow(q.p - 1);
    let shift = ((q.p - 1) * (q.u_tilde + 1)) as i64;
    let w = LaurentDifferential::from_poly_shifted(&power, shift);
    let image = upoly::cartier(&w);
    let rhs_poly = UniPoly::one(&field).add(&f.scale(&q.u_element(&field))?)?;
    Ok(image == LaurentDifferential::from_poly(&rhs_poly))
}

/// Entry indices of the isolatedness coefficient matrix: 1-based (i, j)
/// holds a_{(p-1)(m-1) - m(j-1) + pm(i-1)}; None marks indices outside
/// [0, N], whose entries are the constant 0.
pub fn isolatedness_indices(q: &Quadruple) -> Vec<Vec<Option<u64>>> {
    let size = q.matrix_size();
    let base = ((q.p - 1) * (q.m - 1)) as i64;
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let idx = base - (q.m as i64) * j as i64 + (q.p * q.m) as i64 * i as i64;
                    if idx < 0 || idx > q.n as i64 {
                        None
                    } else {
                        Some(idx as u64)
                    }
                })
                .collect()
        })
        .collect()
}

/// The isolatedness matrix evaluated on the coefficients of f.
pub fn isolatedness_matrix(q: &Quadruple, f: &UniPoly) -> Result<Vec<Vec<FieldElement>>> {
    if let Some(d) = f.degree() {
        if d as u64 > q.n {
            return Err(Error::BadSupport { exp: d, m: q.m });
        }
    }
    let field = f.field().clone();
    Ok(isolatedness_indices(q)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|idx| match idx {
                    Some(i) => f.coeff(i as usize),
                    None => field.zero(),
                })
                .collect()
        })
        .collect())
}

/// Exact determinant by Gaussian elimination; the 0x0 determinant is 1.
pub fn det(field: &Field, grid: &[Vec<FieldElement>]) -> Result<FieldElement> {
    let n = grid.len();
    for row in grid {
        if row.len() != n {
            return Err(Error::FieldMismatch);
        }
        for e in row {
            if e.field() != field.as_ref() {
                return Err(Error::FieldMismatch);
            }
        }
    }
    if n == 0 {
        return Ok(field.one());
    }
    let mut m: Vec<Vec<FieldElement>> = grid.to_vec();
    let mut result = field.one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(field.zero()),
        };
        if pivot != col {
            m.swap(pivot, col);
            result = -&result;
        }
        let lead = m[col][col].clone();
        result = &result * &lead;
        let lead_inv = gf::inv(&lead)?;
        for r in col + 1..n {
            let factor = &m[r][col] * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    Ok(result)
}

/// Coefficient-matrix isolatedness test: automatic when u~ + 1 = m,
/// otherwise invertibility of the isolatedness matrix. Errors unless f
/// solves the differential data criterion.
pub fn is_isolated(q: &Quadruple, f: &UniPoly) -> Result<bool> {
    if !verify_ddc_cartier(q, f)? {
        return Err(Error::NotADdcSolution);
    }
    if q.u_tilde + 1 == q.m {
        return Ok(true);
    }
    let grid = isolatedness_matrix(q, f)?;
    Ok(!det(f.field(), &grid)?.is_zero())
}

/// The exponent set S = { 1 <= q' <= N + u~ - 1 : q' = -1 mod m and
/// p does not divide q' }, ascending.
pub fn s_set(q: &Quadruple) -> Vec<u64> {
    let hi = q.n + q.u_tilde - 1;
    let mut out = vec![];
    let mut cand = q.m - 1;
    while cand >= 1 && cand <= hi {
        if cand % q.p != 0 {
            out.push(cand);
        }
        cand += q.m;
    }
    out
}

/// Newton power sums p_0..p_upto of the roots of the monic polynomial
/// with elementary symmetric functions e (e[i-1] = e_i).
fn newton_power_sums(field: &Field, e: &[FieldElement], upto: usize) -> Vec<FieldElement> {
    let n = e.len();
    let mut p: Vec<FieldElement> = Vec::with_capacity(upto + 1);
    p.push(field.from_u64(n as u64 % field.p()));
    for s in 1..=upto {
        let mut acc = field.zero();
        for i in 1..=(s - 1).min(n) {
            let term = &e[i - 1] * &p[s - i];
            if i % 2 == 1 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        if s <= n {
            let se = field.from_u64(s as u64 % field.p());
            let term = &se * &e[s - 1];
            if s % 2 == 1 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        p.push(acc);
    }
    p
}

/// Root-based isolatedness oracle.
///
/// Mathematically this is the invertibility of M = (x_j^{q'-1}) over
/// representatives x_j of the mu_m-orbits of roots of f, with q' ranging
/// over S ascending. Every q' is -1 mod m, so column j carries a common
/// factor x_j^{m-2} and the verdict only depends on M' = (y_j^r) with
/// y_j = x_j^m — exactly the roots of F(z) = sum a_{mi} z^i — and
/// r = (q'+1)/m - 1. Invertibility of M' is decided through the Gram
/// identity det(M')^2 = det(p_{r_i + r_k}), with p_s the power sums of
/// the roots of F obtained from Newton's identities; everything stays in
/// the coefficient field of f.
pub fn is_isolated_root_oracle(q: &Quadruple, f: &UniPoly) -> Result<bool> {
    if !verify_ddc_cartier(q, f)? {
        return Err(Error::NotADdcSolution);
    }
    let field = f.field().clone();
    let n = q.cols() as usize;
    let s = s_set(q);
    if s.len() != n {
        return Err(Error::NonSquareMatrix {
            s_len: s.len(),
            cols: n,
        });
    }
    if n == 0 {
        return Ok(true);
    }
    let r: Vec<u64> = s.iter().map(|&q_| (q_ + 1) / q.m - 1).collect();
    // e_i = (-1)^i a_{N - mi} / a_N
    let a_n_inv = gf::inv(&f.coeff(q.n as usize))?;
    let mut e = Vec::with_capacity(n);
    for i in 1..=n as u64 {
        let mut v = &f.coeff((q.n - q.m * i) as usize) * &a_n_inv;
        if i % 2 == 1 {
            v = -&v;
        }
        e.push(v);
    }
    let r_max = *r.last().unwrap() as usize;
    let sums = newton_power_sums(&field, &e, 2 * r_max);
    let gram: Vec<Vec<FieldElement>> = r
        .iter()
        .map(|&ri| {
            r.iter()
                .map(|&rk| sums[(ri + rk) as usize].clone())
                .collect()
        })
        .collect();
    Ok(!det(&field, &gram)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn q32510() -> Quadruple {
        Quadruple::new(3, 2, 5, 10).unwrap()
    }

    fn gf3() -> Field {
        FieldSpec::prime(3).unwrap()
    }

    fn sol_isolated() -> UniPoly {
        UniPoly::parse("2*t^10 + t^8 + t^6 + 1", &gf3()).unwrap()
    }

    fn sol_flat() -> UniPoly {
        UniPoly::parse("2*t^10 + 1", &gf3()).unwrap()
    }

    #[test]
    fn quadruple_validation() {
        let q = q32510();
        assert_eq!((q.u(), q.nu(), q.epsilon()), (5, 0, 0));
        let q2 = Quadruple::new(5, 2, 9, 36).unwrap();
        assert_eq!(q2.epsilon(), 0);
        assert!(matches!(
            Quadruple::new(3, 2, 4, 8),
            Err(Error::InvalidQuadruple { .. })
        ));
        // derived values for a p | u~ case
        let q3 = Quadruple::new(3, 2, 15, 28).unwrap();
        assert_eq!((q3.u(), q3.nu(), q3.epsilon()), (5, 1, 1));
        // degenerate N = 0
        let q4 = Quadruple::new(3, 2, 1, 0).unwrap();
        assert_eq!((q4.epsilon(), q4.cols()), (1, 0));
    }

    #[test]
    fn enumeration_families() {
        let d25 = enumerate_quadruples(5, 2, 2).unwrap();
        let pairs: Vec<(u64, u64)> = d25.iter().map(|q| (q.u_tilde(), q.n())).collect();
        assert_eq!(pairs, CoverGroup::D25.published_pairs());
        let d27 = enumerate_quadruples(3, 2, 3).unwrap();
        assert_eq!(d27.len(), 18);
        let us: Vec<u64> = {
            let mut v: Vec<u64> = d27.iter().map(|q| q.u_tilde()).collect();
            v.dedup();
            v
        };
        assert_eq!(us, vec![1, 3, 5, 7, 11, 13, 15, 17, 19]);
        // published D27 list is a subset
        let set: std::collections::HashSet<(u64, u64)> =
            d27.iter().map(|q| (q.u_tilde(), q.n())).collect();
        for pair in CoverGroup::D27.published_pairs() {
            assert!(set.contains(pair));
        }
        // small tower: u~ in {1, 5}, including the degenerate N = 0
        let small = enumerate_quadruples(3, 2, 2).unwrap();
        let pairs: std::collections::HashSet<(u64, u64)> =
            small.iter().map(|q| (q.u_tilde(), q.n())).collect();
        assert_eq!(
            pairs,
            [(1, 2), (1, 0), (5, 10), (5, 8)].into_iter().collect()
        );
        assert!(enumerate_quadruples(5, 2, 1).is_err());
        assert!(enumerate_quadruples(5, 3, 2).is_err());
    }

    #[test]
    fn support_plans() {
        let plan = q32510().support_plan();
        assert_eq!(plan.threshold, 4);
        assert_eq!(plan.constrained, vec![4, 6, 8, 10]);
        assert_eq!(plan.forced_zero, vec![2]);
        let q = Quadruple::new(3, 2, 3, 4).unwrap();
        let plan = q.support_plan();
        assert_eq!(plan.constrained, vec![2, 4]);
        assert!(plan.forced_zero.is_empty());
    }

    #[test]
    fn c_coefficient_examples() {
        let q = q32510();
        let f = sol_isolated();
        let cs = c_coefficients(&q, &f).unwrap();
        let f3 = gf3();
        // c_8 = 2 a_0 a_8 = 2
        assert_eq!(cs[4], f3.from_u64(2));
        // c_0 = a_0^(p-1)
        assert_eq!(cs[0], f.coeff(0).pow(2));
        // top term c = a_N^(p-1)
        assert_eq!(cs[10], f.coeff(10).pow(2));
        // support violation
        let bad = UniPoly::parse("t^3 + 1", &f3).unwrap();
        assert!(matches!(
            c_coefficients(&q, &bad),
            Err(Error::BadSupport { .. })
        ));
    }

    #[test]
    fn multinomial_oracle_agreement() {
        let q = q32510();
        let f = sol_isolated();
        let cs = c_coefficients(&q, &f).unwrap();
        for (j, c) in cs.iter().enumerate() {
            assert_eq!(c_multinomial_oracle(&q, &f, j as u64).unwrap(), *c);
        }
        // j = 0 is a_0^(p-1)
        assert_eq!(c_multinomial_oracle(&q, &f, 0).unwrap(), f.coeff(0).pow(2));
        // (t^2+4)^4 over GF(5): coefficient of t^6 is 1
        let f5 = FieldSpec::prime(5).unwrap();
        let q5 = Quadruple::new(5, 2, 1, 2).unwrap();
        let g = UniPoly::parse("t^2 + 4", &f5).unwrap();
        assert_eq!(c_multinomial_oracle(&q5, &g, 3).unwrap(), f5.one());
        assert_eq!(c_coefficients(&q5, &g).unwrap()[3], f5.one());
    }

    #[test]
    fn residual_examples() {
        let q = q32510();
        let r = system_residuals(&q, &sol_isolated()).unwrap();
        assert!(r.is_solution());
        let r2 = system_residuals(&q, &sol_flat()).unwrap();
        assert!(r2.is_solution());
        let bad = UniPoly::parse("t^10 + 1", &gf3()).unwrap();
        let r3 = system_residuals(&q, &bad).unwrap();
        assert!(!r3.is_solution());
        assert!(r3.residuals.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn cartier_verifier_examples() {
        let f5 = FieldSpec::prime(5).unwrap();
        let q5 = Quadruple::new(5, 2, 1, 2).unwrap();
        let g = UniPoly::parse("t^2 + 4", &f5).unwrap();
        assert!(verify_ddc_cartier(&q5, &g).unwrap());
        let q = q32510();
        assert!(verify_ddc_cartier(&q, &sol_flat()).unwrap());
        let bad = UniPoly::parse("t^10 + 1", &gf3()).unwrap();
        assert!(!verify_ddc_cartier(&q, &bad).unwrap());
    }

    #[test]
    fn verifier_equivalence_random() {
        // residuals (all zero + flag) agree with the Cartier verifier on
        // deterministic pseudo-random candidates
        let q = q32510();
        let f3 = gf3();
        let mut s = 0x9e3779b97f4a7c15u64;
        for _ in 0..300 {
            let mut terms = vec![];
            for i in 0..=5u64 {
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                terms.push((2 * i as usize, f3.from_u64((s >> 33) % 3)));
            }
            let f = UniPoly::from_terms(&f3, &terms).unwrap();
            if f.is_zero() {
                continue;
            }
            let lhs = system_residuals(&q, &f).unwrap().is_solution();
            let rhs = verify_ddc_cartier(&q, &f).unwrap();
            assert_eq!(lhs, rhs, "mismatch on {f}");
        }
    }

    #[test]
    fn matrix_examples() {
        // (5,2,9,36) gives the published 4x4 index grid
        let q = Quadruple::new(5, 2, 9, 36).unwrap();
        let idx = isolatedness_indices(&q);
        assert_eq!(
            idx,
            vec![
                vec![Some(4), Some(2), Some(0), None],
                vec![Some(14), Some(12), Some(10), Some(8)],
                vec![Some(24), Some(22), Some(20), Some(18)],
                vec![Some(34), Some(32), Some(30), Some(28)],
            ]
        );
        let q2 = q32510();
        assert_eq!(
            isolatedness_indices(&q2),
            vec![vec![Some(2), Some(0)], vec![Some(8), Some(6)]]
        );
        // size 0 when u~ + 1 = m
        let q3 = Quadruple::new(5, 2, 1, 2).unwrap();
        assert!(isolatedness_indices(&q3).is_empty());
    }

    #[test]
    fn det_examples() {
        let f3 = gf3();
        // det of the (3,2,5,10) matrix on the isolated solution is
        // -a_8 = 2
        let q = q32510();
        let grid = isolatedness_matrix(&q, &sol_isolated()).unwrap();
        assert_eq!(det(&f3, &grid).unwrap(), f3.from_u64(2));
        let grid2 = isolatedness_matrix(&q, &sol_flat()).unwrap();
        assert!(det(&f3, &grid2).unwrap().is_zero());
        let id = vec![vec![f3.one(), f3.zero()], vec![f3.zero(), f3.one()]];
        assert_eq!(det(&f3, &id).unwrap(), f3.one());
        let rep = vec![
            vec![f3.one(), f3.from_u64(2)],
            vec![f3.one(), f3.from_u64(2)],
        ];
        assert!(det(&f3, &rep).unwrap().is_zero());
        assert_eq!(det(&f3, &[]).unwrap(), f3.one());
    }

    #[test]
    fn isolation_examples() {
        let q = q32510();
        assert!(is_isolated(&q, &sol_isolated()).unwrap());
        assert!(!is_isolated(&q, &sol_flat()).unwrap());
        let f5 = FieldSpec::prime(5).unwrap();
        let q5 = Quadruple::new(5, 2, 1, 2).unwrap();
        let g = UniPoly::parse("t^2 + 4", &f5).unwrap();
        assert!(is_isolated(&q5, &g).unwrap());
        let bad = UniPoly::parse("t^10 + 1", &gf3()).unwrap();
        assert_eq!(is_isolated(&q, &bad).unwrap_err(), Error::NotADdcSolution);
    }

    #[test]
    fn root_oracle_examples() {
        let q = q32510();
        assert!(is_isolated_root_oracle(&q, &sol_isolated()).unwrap());
        assert!(!is_isolated_root_oracle(&q, &sol_flat()).unwrap());
        let f5 = FieldSpec::prime(5).unwrap();
        let q5 = Quadruple::new(5, 2, 1, 2).unwrap();
        let g = UniPoly::parse("t^2 + 4", &f5).unwrap();
        // S = {1}: the 1x1 unit matrix
        assert_eq!(s_set(&q5), vec![1]);
        assert!(is_isolated_root_oracle(&q5, &g).unwrap());
    }

    #[test]
    fn s_set_square() {
        for q in enumerate_quadruples(5, 2, 2)
            .unwrap()
            .into_iter()
            .chain(enumerate_quadruples(3, 2, 3).unwrap())
        {
            assert_eq!(s_set(&q).len() as u64, q.cols(), "quadruple {q:?}");
        }
        assert_eq!(s_set(&q32510()), vec![1, 5, 7, 11, 13]);
    }
}
