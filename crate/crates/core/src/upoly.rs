//! Dense univariate polynomials over a field context, Laurent
//! differentials and the Cartier operator.
//!
//! Degrees at play stay below a few hundred ((p-1)*N for the largest
//! quadruples), so a dense coefficient vector and schoolbook convolution
//! are the right tools.

use crate::error::{Error, Result};
use crate::gf::{self, embed, Field, FieldElement};
use std::fmt;

/// Dense polynomial in t. Coefficient i is the coefficient of t^i;
/// trailing zeros are stripped, the zero polynomial stores no
/// coefficients and has degree "-inf" (None).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(field: &Field) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: vec![],
        }
    }

    pub fn one(field: &Field) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: vec![field.one()],
        }
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            if c.field() != field.as_ref() {
                return Err(Error::FieldMismatch);
            }
        }
        let mut p = UniPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    /// Convenience constructor from (exponent, element) pairs.
    pub fn from_terms(field: &Field, terms: &[(usize, FieldElement)]) -> Result<Self> {
        let deg = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![field.zero(); deg + 1];
        for (e, c) in terms {
            if c.field() != field.as_ref() {
                return Err(Error::FieldMismatch);
            }
            coeffs[*e] = &coeffs[*e] + c;
        }
        UniPoly::from_coeffs(field, coeffs)
    }

    /// Convenience constructor from small integer coefficients in
    /// ascending power order.
    pub fn from_i64(field: &Field, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        UniPoly::from_coeffs(field, coeffs).unwrap()
    }

    pub fn monomial(field: &Field, c: FieldElement, exp: usize) -> Result<Self> {
        let mut coeffs = vec![field.zero(); exp + 1];
        if c.field() != field.as_ref() {
            return Err(Error::FieldMismatch);
        }
        coeffs[exp] = c;
        UniPoly::from_coeffs(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of t^i (zero beyond the stored window).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Exponents with nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Error unless every exponent in the support is divisible by m.
    pub fn check_support_multiple_of(&self, m: u64) -> Result<()> {
        for e in self.support() {
            if e as u64 % m != 0 {
                return Err(Error::BadSupport { exp: e, m });
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.combine(other, true)
    }

    fn combine(&self, other: &UniPoly, negate: bool) -> Result<UniPoly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff(i);
            let b = other.coeff(i);
            coeffs.push(if negate { &a - &b } else { &a + &b });
        }
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        UniPoly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Result<UniPoly> {
        if c.field() != self.field.as_ref() {
            return Err(Error::FieldMismatch);
        }
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    /// Coefficient convolution.
    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(&self.field));
        }
        let spec = &self.field;
        let k = spec.k();
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![vec![0u64; k]; n];
        let mut scratch = vec![0u64; 2 * k - 1];
        let mut prod = vec![0u64; k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                spec.mul_raw(a.coeffs(), b.coeffs(), &mut prod, &mut scratch);
                let cell = &mut out[i + j];
                spec.add_raw(&cell.clone(), &prod, cell);
            }
        }
        let coeffs = out
            .into_iter()
            .map(|c| spec.element(&c).unwrap())
            .collect();
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    /// f^e by binary exponentiation; f^0 = 1.
    pub fn pow(&self, e: u64) -> UniPoly {
        let mut acc = UniPoly::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let factor = self.field.from_u64(i as u64 % self.field.p());
                c * &factor
            })
            .collect();
        UniPoly::from_coeffs(&self.field, coeffs).unwrap()
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if self.field != divisor.field {
            return Err(Error::FieldMismatch);
        }
        if divisor.is_zero() {
            return Err(Error::DivideByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = gf::inv(divisor.leading_coeff().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let pos = rem.len() - 1;
            let lead = rem[pos].clone();
            if !lead.is_zero() {
                let q = &lead * &lead_inv;
                let shift = pos - dd;
                for i in 0..dd {
                    let sub = &q * &divisor.coeffs[i];
                    rem[shift + i] = &rem[shift + i] - &sub;
                }
                quot[shift] = q;
            }
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        Ok((
            UniPoly::from_coeffs(&self.field, quot)?,
            UniPoly::from_coeffs(&self.field, rem)?,
        ))
    }

    /// Divide all coefficients by the leading one.
    pub fn monic(&self) -> Result<UniPoly> {
        let lead = self.leading_coeff().ok_or(Error::DivideByZero)?;
        let inv = gf::inv(lead)?;
        self.scale(&inv)
    }

    /// Evaluate at a point of the same field (Horner).
    pub fn evaluate(&self, point: &FieldElement) -> Result<FieldElement> {
        if point.field() != self.field.as_ref() {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * point) + c;
        }
        Ok(acc)
    }

    /// Map coefficients through a field embedding.
    pub fn embed_into(&self, target: &Field) -> Result<UniPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| embed(c, target))
            .collect::<Result<Vec<_>>>()?;
        UniPoly::from_coeffs(target, coeffs)
    }

    /// Canonical text form: descending exponents, `+`-joined, extension
    /// coefficients parenthesized. Example: `2*t^10 + t^8 + t^6 + 1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = vec![];
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff_txt = if c.is_prime_field() {
                c.to_text()
            } else {
                format!("({})", c.to_text())
            };
            let part = match i {
                0 => coeff_txt,
                _ => {
                    let var = if i == 1 { "t".into() } else { format!("t^{i}") };
                    if c.is_one() {
                        var
                    } else {
                        format!("{coeff_txt}*{var}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join(" + ")
    }

    /// Parse the polynomial grammar in the context of `field`:
    /// `poly := term (('+'|'-') term)*`,
    /// `term := coeff ['*' 't' ['^' nat]] | 't' ['^' nat]`,
    /// `coeff := nat | '(' element ')'`. Whitespace-insensitive.
    pub fn parse(s: &str, field: &Field) -> Result<UniPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        let mut terms: Vec<(usize, FieldElement)> = vec![];
        let mut pos = 0usize;
        let mut sign_neg = false;
        if bytes[0] == b'-' {
            sign_neg = true;
            pos = 1;
        } else if bytes[0] == b'+' {
            pos = 1;
        }
        while pos < bytes.len() {
            // term := coeff? ['*']? ['t' ['^' nat]]
            let mut coeff = field.one();
            let mut saw_coeff = false;
            if bytes[pos] == b'(' {
                let close = find_matching_paren(&compact, pos)?;
                coeff = FieldElement::parse(&compact[pos + 1..close], field)?;
                saw_coeff = true;
                pos = close + 1;
            } else if bytes[pos].is_ascii_digit() {
                let end = compact[pos..]
                    .find(|c: char| !c.is_ascii_digit())
                    .map(|i| pos + i)
                    .unwrap_or(compact.len());
                let n: u64 = compact[pos..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number in '{s}'")))?;
                coeff = field.from_u64(n);
                saw_coeff = true;
                pos = end;
            }
            if pos < bytes.len() && bytes[pos] == b'*' {
                if !saw_coeff {
                    return Err(Error::Parse(format!("dangling '*' in '{s}'")));
                }
                pos += 1;
            }
            let mut exp = 0usize;
            if pos < bytes.len() && bytes[pos] == b't' {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let end = compact[pos..]
                        .find(|c: char| !c.is_ascii_digit())
                        .map(|i| pos + i)
                        .unwrap_or(compact.len());
                    if end == pos {
                        return Err(Error::Parse(format!("missing exponent in '{s}'")));
                    }
                    exp = compact[pos..end]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{s}'")))?;
                    pos = end;
                }
            } else if !saw_coeff {
                return Err(Error::Parse(format!("unexpected character in '{s}'")));
            }
            if sign_neg {
                coeff = -&coeff;
            }
            terms.push((exp, coeff));
            if pos == bytes.len() {
                break;
            }
            match bytes[pos] {
                b'+' => sign_neg = false,
                b'-' => sign_neg = true,
                _ => return Err(Error::Parse(format!("unexpected character in '{s}'"))),
            }
            pos += 1;
        }
        UniPoly::from_terms(field, &terms)
    }
}

fn find_matching_paren(s: &str, open: usize) -> Result<usize> {
    let mut depth = 0;
    for (i, c) in s.char_indices().skip(open) {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse("unbalanced parentheses".into()))
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Monic gcd by the Euclidean algorithm.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y)?;
        x = y;
        y = r;
    }
    x.monic()
}

/// f is separable iff gcd(f, f') = 1.
pub fn is_separable(f: &UniPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::BothZero);
    }
    let d = f.derivative();
    if d.is_zero() {
        // gcd(f, 0) = monic f; only a constant passes
        return Ok(f.degree() == Some(0));
    }
    let g = poly_gcd(f, &d)?;
    Ok(g.degree() == Some(0))
}

/// All roots of f lying in GF(p^ext_degree), by exhaustive evaluation in
/// deterministic enumeration order. The target field comes from the
/// built-in modulus table (or is f's own field when the degrees match);
/// coefficients are embedded along the canonical least-root embedding.
pub fn roots_in(f: &UniPoly, ext_degree: usize) -> Result<Vec<FieldElement>> {
    if f.is_zero() {
        return Err(Error::BothZero);
    }
    let src = f.field();
    let target: Field = if ext_degree == src.k() {
        src.clone()
    } else {
        if ext_degree % src.k() != 0 {
            return Err(Error::NoModulusKnown {
                p: src.p(),
                k: ext_degree,
            });
        }
        crate::gf::FieldSpec::with_builtin(src.p(), ext_degree)?
    };
    const ENUM_CAP: u64 = 10_000_000;
    if target.order() > ENUM_CAP {
        return Err(Error::GuardTripped(format!(
            "exhaustive root search over {} elements exceeds the cap",
            target.order()
        )));
    }
    let g = f.embed_into(&target)?;
    let mut roots = vec![];
    for n in 0..target.order() {
        let e = target.element_at(n);
        if g.evaluate(&e)?.is_zero() {
            roots.push(e);
        }
    }
    Ok(roots)
}

/// Number of roots of f (with multiplicity 1 each for separable f) lying
/// in GF(p^ext); computed as deg gcd(f, x^{p^ext} - x) without enumerating
/// the field.
pub fn root_count_in(f: &UniPoly, ext_degree: usize) -> Result<usize> {
    let src = f.field();
    if ext_degree % src.k() != 0 {
        return Ok(0);
    }
    if f.degree() == Some(0) {
        return Ok(0);
    }
    // x^(p^ext) mod f by iterated Frobenius: ext steps of raising to p.
    let x = UniPoly::from_terms(src, &[(1, src.one())])?;
    let (_, mut frob) = x.div_rem(f)?;
    for _ in 0..ext_degree {
        frob = pow_mod(&frob, src.p(), f)?;
    }
    let diff = frob.sub(&x)?;
    if diff.is_zero() {
        return Ok(f.degree().unwrap_or(0));
    }
    let g = poly_gcd(f, &diff)?;
    Ok(g.degree().unwrap_or(0))
}

fn pow_mod(base: &UniPoly, mut e: u64, modulus: &UniPoly) -> Result<UniPoly> {
    let mut acc = UniPoly::one(base.field());
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            let (_, r) = acc.mul(&b)?.div_rem(modulus)?;
            acc = r;
        }
        e >>= 1;
        if e > 0 {
            let (_, r) = b.mul(&b)?.div_rem(modulus)?;
            b = r;
        }
    }
    Ok(acc)
}

/// Smallest extension degree k' <= max_degree (a multiple of the base
/// degree) over which f splits completely.
pub fn splitting_degree(f: &UniPoly, max_degree: usize) -> Result<usize> {
    let deg = f.degree().ok_or(Error::BothZero)?;
    let base = f.field().k();
    let mut k = base;
    while k <= max_degree {
        if root_count_in(f, k)? == deg {
            return Ok(k);
        }
        k += base;
    }
    Err(Error::ExceedsMaxDegree { max: max_degree })
}

/// A Laurent polynomial h(t) standing for the differential form h(t) dt.
/// The stored window is canonical: the first and last coefficients are
/// nonzero except for the zero form.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentDifferential {
    field: Field,
    min_exp: i64,
    coeffs: Vec<FieldElement>,
}

impl LaurentDifferential {
    pub fn zero(field: &Field) -> Self {
        LaurentDifferential {
            field: field.clone(),
            min_exp: 0,
            coeffs: vec![],
        }
    }

    pub fn from_window(field: &Field, min_exp: i64, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            if c.field() != field.as_ref() {
                return Err(Error::FieldMismatch);
            }
        }
        let mut w = LaurentDifferential {
            field: field.clone(),
            min_exp,
            coeffs,
        };
        w.normalize();
        Ok(w)
    }

    /// The form (t^shift * f) dt.
    pub fn from_poly_shifted(f: &UniPoly, shift: i64) -> Self {
        LaurentDifferential::from_window(f.field(), shift, f.coeffs().to_vec()).unwrap()
    }

    pub fn from_poly(f: &UniPoly) -> Self {
        Self::from_poly_shifted(f, 0)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead_zeros = self
            .coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// (exponent, coefficient) pairs of the nonzero terms, ascending.
    pub fn terms(&self) -> Vec<(i64, FieldElement)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exp + i as i64, c.clone()))
            .collect()
    }

    pub fn add(&self, other: &LaurentDifferential) -> Result<LaurentDifferential> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(other.min_exp + other.coeffs.len() as i64);
        let mut coeffs = vec![self.field.zero(); (hi - lo) as usize];
        for (e, c) in self.terms().iter().chain(other.terms().iter()) {
            let idx = (e - lo) as usize;
            coeffs[idx] = &coeffs[idx] + c;
        }
        LaurentDifferential::from_window(&self.field, lo, coeffs)
    }
}

impl fmt::Debug for LaurentDifferential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 dt");
        }
        let parts: Vec<String> = self
            .terms()
            .iter()
            .rev()
            .map(|(e, c)| format!("{}*t^{}", c.to_text(), e))
            .collect();
        write!(f, "({}) dt", parts.join(" + "))
    }
}

/// The Cartier operator, term by term: c * t^b dt maps to 0 when
/// b is not congruent to -1 mod p, and to pth_root(c) * t^((b+1)/p - 1) dt
/// otherwise.
pub fn cartier(w: &LaurentDifferential) -> LaurentDifferential {
    let field = w.field().clone();
    let p = field.p() as i64;
    let mut out_terms: Vec<(i64, FieldElement)> = vec![];
    for (b, c) in w.terms() {
        if (b + 1).rem_euclid(p) != 0 {
            continue;
        }
        let e = (b + 1) / p - 1;
        out_terms.push((e, gf::pth_root(&c)));
    }
    if out_terms.is_empty() {
        return LaurentDifferential::zero(&field);
    }
    let lo = out_terms.iter().map(|(e, _)| *e).min().unwrap();
    let hi = out_terms.iter().map(|(e, _)| *e).max().unwrap();
    let mut coeffs = vec![field.zero(); (hi - lo + 1) as usize];
    for (e, c) in out_terms {
        let idx = (e - lo) as usize;
        coeffs[idx] = &coeffs[idx] + &c;
    }
    LaurentDifferential::from_window(&field, lo, coeffs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn gf(p: u64) -> Field {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn mul_examples() {
        let f3 = gf(3);
        // (t+1)(t+2) over GF(3) = t^2 + 2
        let a = UniPoly::from_i64(&f3, &[1, 1]);
        let b = UniPoly::from_i64(&f3, &[2, 1]);
        assert_eq!(a.mul(&b).unwrap(), UniPoly::from_i64(&f3, &[2, 0, 1]));
        // f * 1 = f
        assert_eq!(a.mul(&UniPoly::one(&f3)).unwrap(), a);
        // (t^2+4)^2 over GF(5) = t^4 + 3t^2 + 1
        let f5 = gf(5);
        let c = UniPoly::from_i64(&f5, &[4, 0, 1]);
        assert_eq!(
            c.mul(&c).unwrap(),
            UniPoly::from_i64(&f5, &[1, 0, 3, 0, 1])
        );
    }

    #[test]
    fn pow_examples() {
        let f5 = gf(5);
        let c = UniPoly::from_i64(&f5, &[4, 0, 1]);
        assert_eq!(c.pow(0), UniPoly::one(&f5));
        // (t^2+4)^4: coefficient of t^6 is 4*C(4,3) = 16 = 1
        let c4 = c.pow(4);
        assert_eq!(c4.coeff(6), f5.one());
        // (2t^10 + t^8 + t^6 + 1)^2 over GF(3): coeff of t^8 is 2
        let f3 = gf(3);
        let f = UniPoly::from_terms(
            &f3,
            &[
                (10, f3.from_u64(2)),
                (8, f3.one()),
                (6, f3.one()),
                (0, f3.one()),
            ],
        )
        .unwrap();
        assert_eq!(f.pow(2).coeff(8), f3.from_u64(2));
        assert_eq!(f.pow(2).degree(), Some(20));
    }

    #[test]
    fn frobenius_power_structure() {
        // f^p has coefficient a_i^p at index p*i and zero elsewhere
        let f3 = gf(3);
        let f = UniPoly::from_i64(&f3, &[2, 1, 0, 2, 1]);
        let fp = f.pow(3);
        for (i, c) in fp.coeffs().iter().enumerate() {
            if i % 3 == 0 {
                assert_eq!(*c, f.coeff(i / 3).pow(3));
            } else {
                assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn separability() {
        let f3 = gf(3);
        // t^3 over GF(3): derivative 0, not separable
        let t3 = UniPoly::from_i64(&f3, &[0, 0, 0, 1]);
        assert!(!is_separable(&t3).unwrap());
        // 2t^10 + t^8 + t^6 + 1 over GF(3): separable
        let f = UniPoly::from_terms(
            &f3,
            &[
                (10, f3.from_u64(2)),
                (8, f3.one()),
                (6, f3.one()),
                (0, f3.one()),
            ],
        )
        .unwrap();
        assert!(is_separable(&f).unwrap());
        // gcd(t^2 - 1, t - 1) over GF(5) = t - 1 (monic)
        let f5 = gf(5);
        let a = UniPoly::from_i64(&f5, &[-1, 0, 1]);
        let b = UniPoly::from_i64(&f5, &[-1, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), b);
        assert_eq!(
            poly_gcd(&UniPoly::zero(&f5), &UniPoly::zero(&f5)).unwrap_err(),
            Error::BothZero
        );
    }

    #[test]
    fn roots_examples() {
        let f5 = gf(5);
        let a = UniPoly::from_i64(&f5, &[4, 0, 1]);
        let roots = roots_in(&a, 1).unwrap();
        assert_eq!(roots, vec![f5.one(), f5.from_u64(4)]);
        let f3 = gf(3);
        let b = UniPoly::from_i64(&f3, &[1, 0, 1]);
        assert!(roots_in(&b, 1).unwrap().is_empty());
        let roots9 = roots_in(&b, 2).unwrap();
        assert_eq!(roots9.len(), 2);
        assert_eq!(-&roots9[0], roots9[1]);
    }

    #[test]
    fn splitting_degrees() {
        let f5 = gf(5);
        let a = UniPoly::from_i64(&f5, &[4, 0, 1]);
        assert_eq!(splitting_degree(&a, 8).unwrap(), 1);
        let f3 = gf(3);
        let b = UniPoly::from_i64(&f3, &[1, 0, 1]);
        assert_eq!(splitting_degree(&b, 8).unwrap(), 2);
        let linear = UniPoly::from_i64(&f3, &[2, 1]);
        assert_eq!(splitting_degree(&linear, 8).unwrap(), 1);
        // count agrees with enumeration for a separable example
        assert_eq!(root_count_in(&b, 2).unwrap(), roots_in(&b, 2).unwrap().len());
        assert!(matches!(
            splitting_degree(&b, 1),
            Err(Error::ExceedsMaxDegree { .. })
        ));
    }

    #[test]
    fn roots_count_matches_degree_when_split() {
        let f3 = gf(3);
        // product of all monic linears over GF(9) restricted sample:
        // t^2 + 1 splits over GF(9) with 2 roots
        let b = UniPoly::from_i64(&f3, &[1, 0, 1]);
        let d = splitting_degree(&b, 8).unwrap();
        assert_eq!(roots_in(&b, d).unwrap().len(), b.degree().unwrap());
    }

    #[test]
    fn cartier_rules() {
        let f3 = gf(3);
        // cartier(t^(p-1) dt) = dt
        let w = LaurentDifferential::from_poly(
            &UniPoly::from_terms(&f3, &[(2, f3.one())]).unwrap(),
        );
        let out = cartier(&w);
        assert_eq!(out.terms(), vec![(0, f3.one())]);
        // kills t^b dt when b != -1 mod p
        let w2 = LaurentDifferential::from_poly(
            &UniPoly::from_terms(&f3, &[(4, f3.from_u64(2))]).unwrap(),
        );
        assert!(cartier(&w2).is_zero());
        // over GF(3): cartier(2 t^5 dt) = 2 t dt
        let w3 = LaurentDifferential::from_poly(
            &UniPoly::from_terms(&f3, &[(5, f3.from_u64(2))]).unwrap(),
        );
        assert_eq!(cartier(&w3).terms(), vec![(1, f3.from_u64(2))]);
        // negative exponents: c * t^(-1-p) dt maps to pth_root(c) t^(-2) dt
        let w4 = LaurentDifferential::from_window(&f3, -4, vec![f3.from_u64(2)]).unwrap();
        assert_eq!(cartier(&w4).terms(), vec![(-2, f3.from_u64(2))]);
    }

    #[test]
    fn cartier_additive_and_semilinear() {
        let f9 = FieldSpec::with_builtin(3, 2).unwrap();
        // deterministic pseudo-random small forms
        let mk = |seed: u64| {
            let mut terms = vec![];
            let mut s = seed;
            for e in -3i64..6 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let c = f9.element_at(s % 9);
                terms.push((e, c));
            }
            let lo = terms.iter().map(|(e, _)| *e).min().unwrap();
            let coeffs = terms.iter().map(|(_, c)| c.clone()).collect();
            LaurentDifferential::from_window(&f9, lo, coeffs).unwrap()
        };
        for seed in 1..40u64 {
            let w1 = mk(seed);
            let w2 = mk(seed.wrapping_mul(7919));
            let lhs = cartier(&w1.add(&w2).unwrap());
            let rhs = cartier(&w1).add(&cartier(&w2)).unwrap();
            assert_eq!(lhs, rhs);
        }
        // cartier(g^p t^(p-1) dt) = g dt for deterministic g of deg <= 6
        let f3 = gf(3);
        for seed in 0..50u64 {
            let mut s = seed;
            let mut coeffs = vec![];
            for _ in 0..7 {
                s = s.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                coeffs.push(f3.from_u64(s % 3));
            }
            let g = UniPoly::from_coeffs(&f3, coeffs).unwrap();
            let gp = g.pow(3);
            let shifted = LaurentDifferential::from_poly_shifted(&gp, 2);
            let image = cartier(&shifted);
            assert_eq!(image, LaurentDifferential::from_poly(&g));
        }
    }

    #[test]
    fn grammar_round_trip() {
        let f3 = gf(3);
        let f = UniPoly::from_terms(
            &f3,
            &[
                (10, f3.from_u64(2)),
                (8, f3.one()),
                (6, f3.one()),
                (0, f3.one()),
            ],
        )
        .unwrap();
        assert_eq!(f.to_text(), "2*t^10 + t^8 + t^6 + 1");
        assert_eq!(UniPoly::parse(&f.to_text(), &f3).unwrap(), f);
        assert_eq!(UniPoly::parse("2*t^10+t^8+t^6+1", &f3).unwrap(), f);
        // extension coefficients
        let f9 = FieldSpec::with_builtin(3, 2).unwrap();
        let g = UniPoly::parse("(x)*t^4 + t^2 + 2", &f9).unwrap();
        assert_eq!(g.coeff(4), f9.generator());
        assert_eq!(g.to_text(), "(x)*t^4 + t^2 + 2");
        assert_eq!(UniPoly::parse(&g.to_text(), &f9).unwrap(), g);
        // minus signs normalize mod p
        assert_eq!(
            UniPoly::parse("t^2 - 1", &f3).unwrap(),
            UniPoly::from_i64(&f3, &[2, 0, 1])
        );
        assert_eq!(UniPoly::parse("0", &f3).unwrap(), UniPoly::zero(&f3));
        assert!(UniPoly::parse("t^", &f3).is_err());
        assert!(UniPoly::parse("(x", &f3).is_err());
    }
}
