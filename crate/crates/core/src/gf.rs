//! Exact arithmetic in prime fields GF(p) and extensions GF(p^k).
//!
//! A [`FieldSpec`] fixes the characteristic `p`, the extension degree `k`
//! and a monic irreducible modulus for the generator `x`. Elements are
//! canonical residue vectors of length `k`; all operations are pure and
//! values are immutable after construction, so everything is safe to share
//! across threads.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Shared handle to a field description.
pub type Field = Arc<FieldSpec>;

/// The field GF(p^k) with a fixed monic modulus of degree k over GF(p).
///
/// For k = 1 the modulus is implicitly `x`, and elements are single
/// residues. Elements never mix moduli: cross-field operations are hard
/// errors rather than silent coercions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// k+1 residues, ascending powers, monic (last entry 1). For k = 1
    /// this is [0, 1], i.e. the polynomial x.
    modulus: Vec<u64>,
}

/// Binary field operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of GF(p^k): residues c0 + c1*x + ... + c_{k-1}*x^{k-1},
/// each in [0, p). Equality is coefficient-wise on the canonical form.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
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

// ---- dense polynomial helpers over GF(p) (used for modulus validation) ----

fn zp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of a by b (b monic), coefficients mod p.
fn zp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*b.last().unwrap(), 1);
    let mut r: Vec<u64> = a.to_vec();
    zp_trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for i in 0..db {
                let sub = (lead * b[i]) % p;
                let idx = shift + i;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
        zp_trim(&mut r);
    }
    r
}

/// Exhaustive factor search: does any monic polynomial of degree
/// 1..=deg/2 divide `m`?
fn zp_irreducible(m: &[u64], p: u64) -> std::result::Result<(), Vec<u64>> {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for n in 0..count {
            // monic candidate of degree d, counting order
            let mut cand = vec![0u64; d + 1];
            let mut t = n;
            for c in cand.iter_mut().take(d) {
                *c = t % p;
                t /= p;
            }
            cand[d] = 1;
            if zp_rem(m, &cand, p).is_empty() {
                return Err(cand);
            }
        }
    }
    Ok(())
}

fn zp_poly_string(c: &[u64]) -> String {
    let mut parts = vec![];
    for (i, &ci) in c.iter().enumerate().rev() {
        if ci == 0 {
            continue;
        }
        let part = match i {
            0 => format!("{ci}"),
            1 if ci == 1 => "x".to_string(),
            1 => format!("{ci}*x"),
            _ if ci == 1 => format!("x^{i}"),
            _ => format!("{ci}*x^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Monic modulus pinned for reproducibility of printed generators, or the
/// first irreducible of degree k in counting order. GF(9) uses x^2 - 2
/// (generator beta with beta^2 = 2) and GF(25) uses x^2 - 3 (alpha with
/// alpha^2 = 3).
pub fn builtin_modulus(p: u64, k: usize) -> Option<Vec<u64>> {
    if !is_prime(p) || p == 2 || k == 0 {
        return None;
    }
    if k == 1 {
        return Some(vec![0, 1]);
    }
    match (p, k) {
        // x^2 - 2 == x^2 + 1 over GF(3)
        (3, 2) => return Some(vec![1, 0, 1]),
        // x^2 - 3 == x^2 + 2 over GF(5)
        (5, 2) => return Some(vec![2, 0, 1]),
        _ => {}
    }
    if k > 16 || (p.checked_pow(k as u32)).is_none() {
        return None;
    }
    let count = p.pow(k as u32);
    for n in 0..count {
        let mut cand = vec![0u64; k + 1];
        let mut t = n;
        for c in cand.iter_mut().take(k) {
            *c = t % p;
            t /= p;
        }
        cand[k] = 1;
        if zp_irreducible(&cand, p).is_ok() {
            return Some(cand);
        }
    }
    None
}

/// Validated field construction. `modulus` holds k+1 residues in
/// ascending power order and must be supplied exactly when k > 1.
pub fn make_field(p: u64, k: usize, modulus: Option<&[u64]>) -> Result<Field> {
    if p % 2 == 0 {
        return Err(Error::EvenCharacteristic(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::DegreeMismatch("extension degree must be >= 1".into()));
    }
    let modulus = match (k, modulus) {
        (1, None) => vec![0, 1],
        (1, Some(_)) => {
            return Err(Error::DegreeMismatch(
                "prime field takes no explicit modulus".into(),
            ))
        }
        (_, None) => {
            return Err(Error::DegreeMismatch(format!(
                "extension degree {k} requires an explicit modulus"
            )))
        }
        (_, Some(m)) => {
            if m.len() != k + 1 {
                return Err(Error::DegreeMismatch(format!(
                    "modulus must have {} coefficients, got {}",
                    k + 1,
                    m.len()
                )));
            }
            let reduced: Vec<u64> = m.iter().map(|c| c % p).collect();
            if reduced[k] != 1 {
                return Err(Error::DegreeMismatch("modulus must be monic".into()));
            }
            if let Err(factor) = zp_irreducible(&reduced, p) {
                return Err(Error::ReducibleModulus {
                    p,
                    factor: zp_poly_string(&factor),
                });
            }
            reduced
        }
    };
    Ok(Arc::new(FieldSpec { p, k, modulus }))
}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        make_field(p, 1, None)
    }

    /// GF(p^k) with the built-in modulus table.
    pub fn with_builtin(p: u64, k: usize) -> Result<Field> {
        if k == 1 {
            return make_field(p, 1, None);
        }
        let m = builtin_modulus(p, k).ok_or(Error::NoModulusKnown { p, k })?;
        make_field(p, k, Some(&m))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Field size p^k.
    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn modulus_string(&self) -> String {
        zp_poly_string(&self.modulus)
    }

    // ---- raw kernels on coefficient slices of length k ----

    pub(crate) fn add_raw(&self, a: &[u64], b: &[u64], out: &mut [u64]) {
        for i in 0..self.k {
            out[i] = (a[i] + b[i]) % self.p;
        }
    }

    pub(crate) fn sub_raw(&self, a: &[u64], b: &[u64], out: &mut [u64]) {
        for i in 0..self.k {
            out[i] = (a[i] + self.p - b[i]) % self.p;
        }
    }

    pub(crate) fn neg_raw(&self, a: &[u64], out: &mut [u64]) {
        for i in 0..self.k {
            out[i] = (self.p - a[i]) % self.p;
        }
    }

    /// out = a * b reduced by the modulus. `scratch` must have length
    /// 2k - 1.
    pub(crate) fn mul_raw(&self, a: &[u64], b: &[u64], out: &mut [u64], scratch: &mut [u64]) {
        let k = self.k;
        if k == 1 {
            out[0] = (a[0] * b[0]) % self.p;
            return;
        }
        scratch.fill(0);
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                scratch[i + j] = (scratch[i + j] + a[i] * b[j]) % self.p;
            }
        }
        // reduce: modulus monic of degree k
        for d in (k..2 * k - 1).rev() {
            let lead = scratch[d];
            if lead != 0 {
                scratch[d] = 0;
                for i in 0..k {
                    let sub = (lead * self.modulus[i]) % self.p;
                    scratch[d - k + i] = (scratch[d - k + i] + self.p - sub) % self.p;
                }
            }
        }
        out[..k].copy_from_slice(&scratch[..k]);
    }

    pub(crate) fn pow_raw(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; self.k];
        acc[0] = 1;
        let mut scratch = vec![0u64; 2 * self.k - 1];
        let mut tmp = vec![0u64; self.k];
        while e > 0 {
            if e & 1 == 1 {
                self.mul_raw(&acc.clone(), &base, &mut tmp, &mut scratch);
                acc.copy_from_slice(&tmp);
            }
            self.mul_raw(&base.clone(), &base, &mut tmp, &mut scratch);
            base.copy_from_slice(&tmp);
            e >>= 1;
        }
        acc
    }

    // ---- element constructors ----

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.k],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(self: &Arc<Self>, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.k];
        coeffs[0] = c % self.p;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Lift of a signed integer, e.g. -1 -> p - 1.
    pub fn from_i64(self: &Arc<Self>, c: i64) -> FieldElement {
        let p = self.p as i64;
        self.from_u64(c.rem_euclid(p) as u64)
    }

    /// Element from explicit residues (length k, each reduced mod p).
    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.k {
            return Err(Error::DegreeMismatch(format!(
                "element needs {} residues, got {}",
                self.k,
                coeffs.len()
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: coeffs.iter().map(|c| c % self.p).collect(),
        })
    }

    /// The canonical generator x (only meaningful for k > 1).
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        let mut coeffs = vec![0; self.k];
        if self.k > 1 {
            coeffs[1] = 1;
        } else {
            coeffs[0] = 1;
        }
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// The n-th element in enumeration order: base-p digits of n in
    /// ascending power positions, so enumeration runs 0, 1, ..., p-1, x,
    /// 1 + x, ... and always starts with 0.
    pub fn element_at(self: &Arc<Self>, n: u64) -> FieldElement {
        let mut coeffs = vec![0; self.k];
        let mut t = n;
        for c in coeffs.iter_mut() {
            *c = t % self.p;
            t /= self.p;
        }
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Position of `e` in enumeration order.
    pub fn index_of(&self, e: &FieldElement) -> u64 {
        let mut n = 0u64;
        for &c in e.coeffs.iter().rev() {
            n = n * self.p + c;
        }
        n
    }
}

/// All p^k elements in deterministic enumeration order, starting with 0.
pub fn all_elements(field: &Field) -> Vec<FieldElement> {
    (0..field.order()).map(|n| field.element_at(n)).collect()
}

/// Checked binary operation.
pub fn arith(a: &FieldElement, b: &FieldElement, op: Op) -> Result<FieldElement> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let spec = a.field.clone();
    let mut out = vec![0u64; spec.k];
    match op {
        Op::Add => spec.add_raw(&a.coeffs, &b.coeffs, &mut out),
        Op::Sub => spec.sub_raw(&a.coeffs, &b.coeffs, &mut out),
        Op::Mul => {
            let mut scratch = vec![0u64; 2 * spec.k - 1];
            spec.mul_raw(&a.coeffs, &b.coeffs, &mut out, &mut scratch)
        }
        Op::Div => {
            let binv = inv(b)?;
            let mut scratch = vec![0u64; 2 * spec.k - 1];
            spec.mul_raw(&a.coeffs, &binv.coeffs, &mut out, &mut scratch)
        }
    }
    Ok(FieldElement {
        field: spec,
        coeffs: out,
    })
}

/// Multiplicative inverse via a^(p^k - 2).
pub fn inv(a: &FieldElement) -> Result<FieldElement> {
    if a.is_zero() {
        return Err(Error::DivideByZero);
    }
    let spec = &a.field;
    let coeffs = spec.pow_raw(&a.coeffs, spec.order() - 2);
    Ok(FieldElement {
        field: spec.clone(),
        coeffs,
    })
}

/// The unique p-th root, computed as a^(p^(k-1)). Frobenius is bijective
/// on a finite field, so this is total.
pub fn pth_root(a: &FieldElement) -> FieldElement {
    let spec = &a.field;
    let e = spec.p.pow((spec.k - 1) as u32);
    FieldElement {
        field: spec.clone(),
        coeffs: spec.pow_raw(&a.coeffs, e),
    }
}

/// Embed an element of GF(p^k) into GF(p^k') for k | k'. The image of the
/// source generator is the enumeration-least root of the source modulus in
/// the target field; constants lift directly.
pub fn embed(e: &FieldElement, target: &Field) -> Result<FieldElement> {
    let src = e.field();
    if src.p != target.p() {
        return Err(Error::FieldMismatch);
    }
    if src == target.as_ref() {
        return Ok(FieldElement {
            field: target.clone(),
            coeffs: e.coeffs.clone(),
        });
    }
    if target.k() % src.k != 0 {
        return Err(Error::NoModulusKnown {
            p: src.p,
            k: target.k(),
        });
    }
    if src.k == 1 {
        return Ok(target.from_u64(e.coeffs[0]));
    }
    // image of x := least root of the source modulus in the target
    let root = (0..target.order())
        .map(|n| target.element_at(n))
        .find(|cand| {
            // evaluate the source modulus at cand (Horner)
            let mut acc = target.zero();
            for &c in src.modulus.iter().rev() {
                acc = &(&acc * cand) + &target.from_u64(c);
            }
            acc.is_zero()
        })
        .ok_or(Error::NoModulusKnown {
            p: src.p,
            k: target.k(),
        })?;
    let mut acc = target.zero();
    for &c in e.coeffs.iter().rev() {
        acc = &(&acc * &root) + &target.from_u64(c);
    }
    Ok(acc)
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_handle(&self) -> Field {
        self.field.clone()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// True when the element lies in the prime subfield.
    pub fn is_prime_field(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.pow_raw(&self.coeffs, e),
        }
    }

    /// Canonical text form: an integer literal for prime-subfield values,
    /// otherwise the polynomial in the generator x with descending powers.
    pub fn to_text(&self) -> String {
        if self.is_prime_field() {
            return format!("{}", self.coeffs[0]);
        }
        zp_poly_string(&self.coeffs)
    }

    /// Parse the canonical element text form in the context of `field`.
    /// Accepts sums/differences of terms `c`, `x`, `c*x`, `x^j`, `c*x^j`;
    /// whitespace-insensitive.
    pub fn parse(s: &str, field: &Field) -> Result<FieldElement> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut coeffs = vec![0u64; field.k()];
        let p = field.p();
        let mut rest = compact.as_str();
        let mut sign_neg = false;
        if let Some(r) = rest.strip_prefix('-') {
            sign_neg = true;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let term_end = rest
                .char_indices()
                .find(|&(_, c)| c == '+' || c == '-')
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = &rest[..term_end];
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in element '{s}'")));
            }
            let (coeff, var) = match term.find('x') {
                None => {
                    let c: u64 = term
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{term}'")))?;
                    (c, None)
                }
                Some(xi) => {
                    let head = &term[..xi];
                    let c = if head.is_empty() {
                        1
                    } else {
                        let numeric = head.strip_suffix('*').unwrap_or(head);
                        if numeric.is_empty() {
                            1
                        } else {
                            numeric
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad coefficient '{term}'")))?
                        }
                    };
                    let tail = &term[xi + 1..];
                    let exp: usize = if tail.is_empty() {
                        1
                    } else if let Some(e) = tail.strip_prefix('^') {
                        e.parse()
                            .map_err(|_| Error::Parse(format!("bad exponent '{term}'")))?
                    } else {
                        return Err(Error::Parse(format!("bad term '{term}'")));
                    };
                    (c, Some(exp))
                }
            };
            let exp = var.unwrap_or(0);
            if exp >= field.k() && exp != 0 {
                return Err(Error::Parse(format!(
                    "generator power x^{exp} outside GF({}^{})",
                    p,
                    field.k()
                )));
            }
            let c = coeff % p;
            let c = if sign_neg { (p - c) % p } else { c };
            coeffs[exp] = (coeffs[exp] + c) % p;
            if term_end == rest.len() {
                break;
            }
            sign_neg = rest.as_bytes()[term_end] == b'-';
            rest = &rest[term_end + 1..];
        }
        field.element(&coeffs)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field() == other.field() && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} in GF({}^{})",
            self.to_text(),
            self.field.p,
            self.field.k
        )
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                arith(self, rhs, $op).expect("field mismatch in operator")
            }
        }
    };
}

binop!(Add, add, Op::Add);
binop!(Sub, sub, Op::Sub);
binop!(Mul, mul, Op::Mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let mut out = vec![0u64; self.field.k];
        self.field.neg_raw(&self.coeffs, &mut out);
        FieldElement {
            field: self.field.clone(),
            coeffs: out,
        }
    }
}
