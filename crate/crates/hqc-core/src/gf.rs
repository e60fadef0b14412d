//! Exact arithmetic in GF(p^r) with p-ary lexicographic element indexing.
//!
//! Elements are written on the basis 1, a, a^2, ..., a^(r-1) where `a` is the
//! class of x modulo the field's defining polynomial. The element with
//! coefficients (c_0, ..., c_(r-1)) has lexicographic index
//! sum(c_i * p^i), which orders the field 0, 1, ..., p-1, a, a+1, ...
//!
//! The defining polynomial defaults to a Conway polynomial so that element
//! indexing, and hence every matrix built downstream, is reproducible. The
//! class of x must be primitive; this is checked at construction.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

/// Largest supported field size.
pub const MAX_Q: u32 = 1024;

/// Conway polynomials, ascending coefficients including the leading 1.
/// Covers every prime power q = p^r with r >= 2 and q <= 169, plus a few
/// larger fields. Degree-1 defaults are x - g with g the least primitive
/// root, computed on the fly.
const CONWAY: &[(u16, u16, &[u16])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
    (17, 2, &[3, 16, 1]),
    (19, 2, &[2, 18, 1]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    NotPrime(u32),
    BadDegree(u32),
    FieldTooLarge { p: u32, r: u32 },
    /// Modulus has the wrong length, is not monic, or has out-of-range
    /// coefficients.
    BadModulus,
    ReducibleModulus,
    /// The class of x modulo the given polynomial is not primitive.
    NonPrimitiveModulus,
    /// No built-in default polynomial for this field; pass one explicitly.
    NoDefaultModulus { p: u32, r: u32 },
    IndexOutOfRange { index: u64, q: u32 },
    BadCoefficients,
    DivisionByZero,
    ParseElement(String),
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::NotPrime(p) => write!(f, "{p} is not prime"),
            GfError::BadDegree(r) => write!(f, "invalid extension degree {r}"),
            GfError::FieldTooLarge { p, r } => {
                write!(f, "field GF({p}^{r}) exceeds the supported size {MAX_Q}")
            }
            GfError::BadModulus => write!(f, "modulus must be monic of degree r with coefficients in [0, p)"),
            GfError::ReducibleModulus => write!(f, "modulus is reducible"),
            GfError::NonPrimitiveModulus => write!(f, "the class of x modulo the modulus is not primitive"),
            GfError::NoDefaultModulus { p, r } => {
                write!(f, "no built-in modulus for GF({p}^{r}); provide one explicitly")
            }
            GfError::IndexOutOfRange { index, q } => {
                write!(f, "element index {index} out of range for a field of {q} elements")
            }
            GfError::BadCoefficients => write!(f, "coefficient list has the wrong length or out-of-range entries"),
            GfError::DivisionByZero => write!(f, "inverse of zero"),
            GfError::ParseElement(s) => write!(f, "cannot parse field element from {s:?}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GfError {}

/// A field element, stored as its p-ary lexicographic index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u16);

impl FieldElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// An immutable GF(p^r) with precomputed operation tables.
///
/// All operations are pure; a `FieldSpec` is safe to share across threads.
#[derive(Clone)]
pub struct FieldSpec {
    p: u16,
    r: u16,
    q: u16,
    modulus: Vec<u16>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    primitive: u16,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative order of g modulo p.
fn order_mod_p(g: u32, p: u32) -> u32 {
    let mut x = g % p;
    let mut o = 1;
    while x != 1 {
        x = x * g % p;
        o += 1;
    }
    o
}

fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| order_mod_p(g, p) == p - 1)
        .expect("every prime has a primitive root")
}

impl FieldSpec {
    /// Builds GF(p^r) with the default (Conway) defining polynomial.
    pub fn new(p: u32, r: u32) -> Result<Self, GfError> {
        Self::build(p, r, None)
    }

    /// Builds GF(p^r) for a prime power q.
    pub fn from_order(q: u32) -> Result<Self, GfError> {
        let (p, r) = factor_prime_power(q)?;
        Self::build(p, r, None)
    }

    /// Builds GF(p^r) with an explicit monic degree-r defining polynomial
    /// (ascending coefficients, including the leading 1).
    pub fn with_modulus(p: u32, r: u32, modulus: &[u16]) -> Result<Self, GfError> {
        Self::build(p, r, Some(modulus))
    }

    fn build(p: u32, r: u32, modulus: Option<&[u16]>) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if r == 0 {
            return Err(GfError::BadDegree(r));
        }
        let mut q: u64 = 1;
        for _ in 0..r {
            q *= p as u64;
            if q > MAX_Q as u64 {
                return Err(GfError::FieldTooLarge { p, r });
            }
        }
        let q = q as u16;
        let (p, r) = (p as u16, r as u16);

        let modulus: Vec<u16> = match modulus {
            Some(m) => {
                if m.len() != r as usize + 1 || *m.last().unwrap() != 1 || m.iter().any(|&c| c >= p) {
                    return Err(GfError::BadModulus);
                }
                m.to_vec()
            }
            None if r == 1 => {
                let g = least_primitive_root(p as u32) as u16;
                vec![(p - g) % p, 1]
            }
            None => CONWAY
                .iter()
                .find(|&&(cp, cr, _)| cp == p && cr == r)
                .map(|&(_, _, m)| m.to_vec())
                .ok_or(GfError::NoDefaultModulus { p: p as u32, r: r as u32 })?,
        };

        let mut spec = FieldSpec {
            p,
            r,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
            primitive: 0,
        };
        spec.build_tables()?;

        // The class of x (index p) for r > 1; the modulus root for r = 1.
        let root = if r == 1 { (p - spec.modulus[0]) % p } else { p };
        if spec.order_of(FieldElement(root)) != (q - 1) as usize {
            return Err(GfError::NonPrimitiveModulus);
        }
        spec.primitive = if r == 1 {
            least_primitive_root(p as u32) as u16
        } else {
            root
        };
        Ok(spec)
    }

    fn build_tables(&mut self) -> Result<(), GfError> {
        let q = self.q as usize;
        let (p, r) = (self.p as usize, self.r as usize);

        self.add = vec![0; q * q];
        self.neg = vec![0; q];
        for a in 0..q {
            let da = self.digits_of(a);
            self.neg[a] = self.index_of(&da.iter().map(|&x| (p - x) % p).collect::<Vec<_>>());
            for b in a..q {
                let db = self.digits_of(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                let s = self.index_of(&sum);
                self.add[a * q + b] = s;
                self.add[b * q + a] = s;
            }
        }

        self.mul = vec![0; q * q];
        for a in 0..q {
            let da = self.digits_of(a);
            for b in a..q {
                let db = self.digits_of(b);
                // schoolbook product, reduced by the modulus
                let mut prod = vec![0usize; 2 * r - 1];
                for (i, &x) in da.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for d in (r..2 * r - 1).rev() {
                    let c = prod[d];
                    if c != 0 {
                        prod[d] = 0;
                        for j in 0..r {
                            let m = self.modulus[j] as usize;
                            prod[d - r + j] = (prod[d - r + j] + p * p - c * m % p) % p;
                        }
                    }
                }
                let m = self.index_of(&prod[..r]);
                self.mul[a * q + b] = m;
                self.mul[b * q + a] = m;
            }
        }

        // A nonzero product of nonzero elements iff the modulus is irreducible.
        self.inv = vec![0; q];
        for a in 1..q {
            let mut found = false;
            for b in 1..q {
                let m = self.mul[a * q + b];
                if m == 0 {
                    return Err(GfError::ReducibleModulus);
                }
                if m == 1 {
                    self.inv[a] = b as u16;
                    found = true;
                }
            }
            debug_assert!(found);
        }
        Ok(())
    }

    fn digits_of(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.r as usize];
        for d in out.iter_mut() {
            *d = i % self.p as usize;
            i /= self.p as usize;
        }
        out
    }

    fn index_of(&self, digits: &[usize]) -> u16 {
        let mut s = 0usize;
        for &d in digits.iter().rev() {
            s = s * self.p as usize + d;
        }
        s as u16
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }
    pub fn r(&self) -> usize {
        self.r as usize
    }
    pub fn q(&self) -> usize {
        self.q as usize
    }
    /// Defining polynomial, ascending coefficients including the leading 1.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The element with lexicographic index `i` (the base-p digits of `i` are
    /// its coefficients on 1, a, ..., a^(r-1)).
    pub fn element(&self, i: usize) -> Result<FieldElement, GfError> {
        if i < self.q as usize {
            Ok(FieldElement(i as u16))
        } else {
            Err(GfError::IndexOutOfRange { index: i as u64, q: self.q as u32 })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    /// Coefficients (c_0, ..., c_(r-1)) of the element on the power basis.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u16> {
        self.digits_of(e.0 as usize).iter().map(|&d| d as u16).collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u16]) -> Result<FieldElement, GfError> {
        if coeffs.len() != self.r as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(GfError::BadCoefficients);
        }
        let digits: Vec<usize> = coeffs.iter().map(|&c| c as usize).collect();
        Ok(FieldElement(self.index_of(&digits)))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.0 == 0 {
            Err(GfError::DivisionByZero)
        } else {
            Ok(FieldElement(self.inv[a.0 as usize]))
        }
    }

    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, GfError> {
        let base = if e < 0 { self.inv(a)? } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// For r > 1 the class of x; for r = 1 the least primitive root of p.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement(self.primitive)
    }

    pub fn order_of(&self, a: FieldElement) -> usize {
        assert!(a.0 != 0, "order of zero is undefined");
        let mut x = a;
        let mut o = 1;
        while x != self.one() {
            x = self.mul(x, a);
            o += 1;
        }
        o
    }

    /// Discrete log base the primitive element; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<usize> {
        if a.0 == 0 {
            return None;
        }
        let g = self.primitive_element();
        let mut x = self.one();
        for e in 0..(self.q - 1) as usize {
            if x == a {
                return Some(e);
            }
            x = self.mul(x, g);
        }
        unreachable!("primitive element generates the multiplicative group")
    }

    /// The field in the ordering 0, a^0, a^1, ..., a^(q-2) (a primitive).
    pub fn power_ordering(&self) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(self.q as usize);
        out.push(self.zero());
        let g = self.primitive_element();
        let mut x = self.one();
        for _ in 0..self.q - 1 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// Symbolic rendering: "a^2+a+2" with `a` the class of x; plain integers
    /// for prime fields.
    pub fn format_element(&self, e: FieldElement) -> String {
        if self.r == 1 {
            return format!("{}", e.0);
        }
        let coeffs = self.coeffs(e);
        let mut parts: Vec<String> = Vec::new();
        for lv in (0..self.r as usize).rev() {
            let c = coeffs[lv];
            if c == 0 {
                continue;
            }
            let part = match (lv, c) {
                (0, c) => format!("{c}"),
                (1, 1) => String::from("a"),
                (1, c) => format!("{c}a"),
                (lv, 1) => format!("a^{lv}"),
                (lv, c) => format!("{c}a^{lv}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join("+")
        }
    }

    /// Parses either a lexicographic index or the symbolic form produced by
    /// [`FieldSpec::format_element`].
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, GfError> {
        let s = s.trim();
        if let Ok(i) = s.parse::<usize>() {
            return self.element(i);
        }
        let mut coeffs = vec![0u16; self.r as usize];
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(GfError::ParseElement(String::from(s)));
            }
            let (coef_str, power) = match term.find('a') {
                None => (term, None),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let exp = if rest.is_empty() {
                        1usize
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| GfError::ParseElement(String::from(s)))?
                    };
                    (&term[..pos], Some(exp))
                }
            };
            let coef: u16 = if coef_str.is_empty() {
                if power.is_none() {
                    return Err(GfError::ParseElement(String::from(s)));
                }
                1
            } else {
                coef_str
                    .parse()
                    .map_err(|_| GfError::ParseElement(String::from(s)))?
            };
            let lv = power.unwrap_or(0);
            if lv >= self.r as usize || coef >= self.p {
                return Err(GfError::ParseElement(String::from(s)));
            }
            coeffs[lv] = (coeffs[lv] + coef) % self.p;
        }
        self.from_coeffs(&coeffs)
    }
}

fn factor_prime_power(q: u32) -> Result<(u32, u32), GfError> {
    if q < 2 {
        return Err(GfError::NotPrime(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut r = 0;
            let mut m = q;
            while m % p == 0 {
                m /= p;
                r += 1;
            }
            if m != 1 {
                return Err(GfError::NotPrime(q));
            }
            return Ok((p, r));
        }
        p += 1;
    }
    Ok((q, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_default_modulus() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
        assert_eq!(f.q(), 4);
    }

    #[test]
    fn prime_field_elements() {
        let f = FieldSpec::new(3, 1).unwrap();
        let elems: Vec<usize> = f.elements().map(|e| e.index()).collect();
        assert_eq!(elems, vec![0, 1, 2]);
    }

    #[test]
    fn explicit_modulus_gf25() {
        // x^2 + 4x + 2 is primitive over GF(5)
        let f = FieldSpec::with_modulus(5, 2, &[2, 4, 1]).unwrap();
        assert_eq!(f.order_of(f.primitive_element()), 24);
        // x^2 + x + 1 is irreducible over GF(5) but its root has order 3
        assert_eq!(
            FieldSpec::with_modulus(5, 2, &[1, 1, 1]),
            Err(GfError::NonPrimitiveModulus)
        );
        // x^2 + 1 = (x-2)(x+2) over GF(5)
        assert_eq!(
            FieldSpec::with_modulus(5, 2, &[1, 0, 1]),
            Err(GfError::ReducibleModulus)
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(FieldSpec::new(4, 1), Err(GfError::NotPrime(4)));
        assert_eq!(FieldSpec::new(2, 0), Err(GfError::BadDegree(0)));
        assert!(matches!(FieldSpec::new(2, 11), Err(GfError::FieldTooLarge { .. })));
        assert!(matches!(FieldSpec::with_modulus(2, 2, &[1, 1]), Err(GfError::BadModulus)));
    }

    #[test]
    fn lex_indexing() {
        let f = FieldSpec::new(2, 2).unwrap();
        // 0, 1, a, a+1
        assert_eq!(f.coeffs(f.element(2).unwrap()), vec![0, 1]);
        assert_eq!(f.element(2).unwrap(), f.primitive_element());
        assert!(f.element(4).is_err());

        let f27 = FieldSpec::new(3, 3).unwrap();
        // 15th element in the ordering: a^2 + a + 2
        assert_eq!(f27.coeffs(f27.element(14).unwrap()), vec![2, 1, 1]);
        assert_eq!(f27.format_element(f27.element(14).unwrap()), "a^2+a+2");
    }

    #[test]
    fn arithmetic_gf4() {
        let f = FieldSpec::new(2, 2).unwrap();
        let a = f.element(2).unwrap();
        let a1 = f.element(3).unwrap();
        assert_eq!(f.add(a, a1), f.one());
        assert_eq!(f.mul(a, a), a1); // a^2 = a + 1
    }

    #[test]
    fn inverse_gf5() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.inv(f.element(2).unwrap()).unwrap().index(), 3);
        assert_eq!(f.inv(f.zero()), Err(GfError::DivisionByZero));
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(FieldSpec::new(2, 2).unwrap().primitive_element().index(), 2);
        assert_eq!(FieldSpec::new(5, 1).unwrap().primitive_element().index(), 2);
        // brute-force check: 3 is the least g with order 6 mod 7
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.primitive_element().index(), 3);
        for g in 2..3 {
            assert_ne!(f7.order_of(f7.element(g).unwrap()), 6);
        }
    }

    #[test]
    fn power_ordering_gf4() {
        let f = FieldSpec::new(2, 2).unwrap();
        let ord: Vec<usize> = f.power_ordering().iter().map(|e| e.index()).collect();
        assert_eq!(ord, vec![0, 1, 2, 3]); // 0, 1, a, a^2=a+1
        assert_eq!(f.log(f.element(3).unwrap()), Some(2));
        assert_eq!(f.log(f.zero()), None);
    }

    #[test]
    fn format_and_parse() {
        let f = FieldSpec::new(5, 2).unwrap();
        for e in f.elements() {
            let s = f.format_element(e);
            assert_eq!(f.parse_element(&s).unwrap(), e);
            assert_eq!(f.parse_element(&format!("{}", e.index())).unwrap(), e);
        }
        assert_eq!(f.format_element(f.element(14).unwrap()), "2a+4");
        assert!(f.parse_element("b^2").is_err());
        assert!(f.parse_element("7a").is_err());
    }

    #[test]
    fn pow_negative_exponent() {
        let f = FieldSpec::new(3, 2).unwrap();
        let a = f.primitive_element();
        let x = f.pow(a, -3).unwrap();
        assert_eq!(f.mul(x, f.pow(a, 3).unwrap()), f.one());
    }

    #[test]
    fn from_order_factors() {
        assert_eq!(FieldSpec::from_order(8).unwrap().p(), 2);
        assert_eq!(FieldSpec::from_order(9).unwrap().p(), 3);
        assert!(FieldSpec::from_order(6).is_err());
    }
}
