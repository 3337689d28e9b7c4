//! Exact arithmetic over ℤ for dense univariate polynomials in `w` and
//! their quotients.
//!
//! Canonical forms are chosen so that equality is decidable componentwise:
//! polynomials never carry trailing zero coefficients, and rational
//! functions are reduced over ℤ (primitive gcd removed, joint content
//! removed, positive leading denominator coefficient).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational number, reduced with positive denominator.
pub type RationalNumber = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("geometric sum requires a >= 1, got {0}")]
    GeomSumOutOfRange(i64),
    #[error("limit at w = 1 does not exist (pole after cancelling all common factors of w - 1)")]
    PoleAtOne,
    #[error("invalid coefficient string `{0}`")]
    BadCoefficient(String),
}

/// Dense integer-coefficient polynomial in `w`; index `i` holds the
/// coefficient of `w^i`. The zero polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Polynomial::new(vec![c.into()])
    }

    /// `c * w^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial { coeffs }
    }

    /// Convenience constructor from small ascending coefficients.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `w^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_at_zero(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `w^exp`.
    pub fn shift_up(&self, exp: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Coefficients reversed: `w^deg * p(1/w)`. Zero maps to zero.
    pub fn reversed(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(coeffs)
    }

    /// gcd of all coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content. The zero polynomial stays zero.
    pub fn primitive_part(&self) -> Polynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Exact division in ℤ[w]; `None` if `d` does not divide `self` exactly.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let dn = self.degree()?;
        let dd = d.degree()?;
        if dn < dd {
            return None;
        }
        let lc = d.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let lead = std::mem::take(&mut rem[i + dd]);
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial::new(quot))
    }

    /// Pseudo-remainder of `self` by `d` (lc(d)^(deg a - deg d + 1) * a mod d).
    fn pseudo_rem(&self, d: &Polynomial) -> Polynomial {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lead = r.leading_coeff().unwrap().clone();
            // r <- lc * r - lead * w^(dr - dd) * d
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (j, dc) in d.coeffs.iter().enumerate() {
                coeffs[dr - dd + j] -= &lead * dc;
            }
            r = Polynomial::new(coeffs);
        }
        r
    }

    /// Primitive gcd via a primitive pseudo-remainder sequence.
    /// The result is primitive with positive leading coefficient
    /// (zero only when both inputs are zero).
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() {
            return b.primitive_part().positive_leading();
        }
        if b.is_zero() {
            return a.primitive_part().positive_leading();
        }
        let content = a.content().gcd(&b.content());
        let mut p = a.primitive_part();
        let mut q = b.primitive_part();
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = p.pseudo_rem(&q).primitive_part();
            p = q;
            q = r;
        }
        // For polynomial gcd over Z the coefficient content only matters
        // when both inputs are constants; then p is 1 and the gcd is the
        // integer gcd. Rational-function reduction uses the primitive part
        // only, so returning the primitive gcd keeps invariants simple.
        if p.degree() == Some(0) && a.degree() == Some(0) && b.degree() == Some(0) {
            return Polynomial::constant(content);
        }
        p.positive_leading()
    }

    fn positive_leading(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if lc.is_negative() => -self.clone(),
            _ => self.clone(),
        }
    }

    /// True iff every coefficient is >= 0.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Quotient by (w - 1) if exact.
    pub fn div_w_minus_one(&self) -> Option<Polynomial> {
        self.div_exact(&Polynomial::from_coeffs(&[-1, 1]))
    }

    /// The e-th cyclotomic polynomial, computed as (w^e - 1) divided by
    /// the cyclotomic polynomials of the proper divisors of e, with a
    /// process-wide cache.
    pub fn cyclotomic(e: u64) -> Polynomial {
        use std::collections::HashMap;
        use std::sync::Mutex;
        use std::sync::OnceLock;
        static CACHE: OnceLock<Mutex<HashMap<u64, Polynomial>>> = OnceLock::new();
        assert!(e >= 1);
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(p) = cache.lock().unwrap().get(&e) {
            return p.clone();
        }
        let mut p = &Polynomial::monomial(BigInt::one(), e as usize) - &Polynomial::one();
        for d in 1..e {
            if e % d == 0 {
                p = p
                    .div_exact(&Polynomial::cyclotomic(d))
                    .expect("cyclotomic polynomials divide w^e - 1");
            }
        }
        cache.lock().unwrap().insert(e, p.clone());
        p
    }

    /// Renders with descending powers and explicit signs, e.g. `w^3 + 5*w^2 - w - 2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push('w');
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $meth:ident),*) => {$(
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $meth(self, rhs: Polynomial) -> Polynomial {
                $trait::$meth(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid coefficient string `{s}`")))?;
            coeffs.push(c);
        }
        Ok(Polynomial::new(coeffs))
    }
}

/// `1 + w + ... + w^(a-1)`, i.e. `(w^a - 1) / (w - 1)`. Requires `a >= 1`.
pub fn geom_sum(a: i64) -> Result<Polynomial, ExactError> {
    if a < 1 {
        return Err(ExactError::GeomSumOutOfRange(a));
    }
    Ok(Polynomial {
        coeffs: vec![BigInt::one(); a as usize],
    })
}

/// Canonical reduced quotient of two integer polynomials.
///
/// Invariants: nonzero denominator with positive leading coefficient,
/// no common polynomial factor over ℚ, and joint integer content 1.
/// Equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: Polynomial,
            den: Polynomial,
        }
        let raw = Raw::deserialize(d)?;
        RationalFunction::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let mut rf = RationalFunction { num, den };
        rf.canonicalize();
        Ok(rf)
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// `num / prod_d (w^d - 1)`, reduced by cancelling cyclotomic factors.
    /// Each w^d - 1 factors as the product of the cyclotomic polynomials of
    /// the divisors of d; those are irreducible over Q, so repeated exact
    /// division yields the fully reduced fraction without a general gcd.
    pub fn over_root_of_unity_factors(
        num: Polynomial,
        den_orders: &[u64],
    ) -> Result<Self, ExactError> {
        use std::collections::BTreeMap;
        if den_orders.iter().any(|d| *d == 0) {
            return Err(ExactError::ZeroDenominator);
        }
        let mut mult: BTreeMap<u64, u32> = BTreeMap::new();
        for d in den_orders {
            for e in 1..=*d {
                if d % e == 0 {
                    *mult.entry(e).or_insert(0) += 1;
                }
            }
        }
        let mut num = num;
        let mut den = Polynomial::one();
        for (e, count) in mult {
            let phi = Polynomial::cyclotomic(e);
            let mut remaining = count;
            if !num.is_zero() {
                while remaining > 0 {
                    match num.div_exact(&phi) {
                        Some(q) => {
                            num = q;
                            remaining -= 1;
                        }
                        None => break,
                    }
                }
            }
            for _ in 0..remaining {
                den = &den * &phi;
            }
        }
        let mut rf = RationalFunction { num, den };
        rf.normalize_content_and_sign();
        Ok(rf)
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        if self.den.degree().map_or(false, |d| d > 0) {
            let g = Polynomial::gcd(&self.num, &self.den);
            if g.degree().map_or(false, |d| d > 0) {
                self.num = self.num.div_exact(&g).expect("gcd divides numerator");
                self.den = self.den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        self.normalize_content_and_sign();
    }

    fn normalize_content_and_sign(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            self.num = Polynomial::new(self.num.coeffs.iter().map(|a| a / &c).collect());
            self.den = Polynomial::new(self.den.coeffs.iter().map(|a| a / &c).collect());
        }
        if self.den.leading_coeff().map_or(false, Signed::is_negative) {
            self.num = -self.num.clone();
            self.den = -self.den.clone();
        }
    }

    /// Adds over the least common multiple of the denominators; with both
    /// operands canonical this keeps intermediate degrees near the reduced
    /// size instead of doubling them before cancellation.
    pub fn add(&self, rhs: &RationalFunction) -> RationalFunction {
        let g = Polynomial::gcd(&self.den, &rhs.den);
        let (left, right) = if g.degree().map_or(true, |d| d == 0) {
            (rhs.den.clone(), self.den.clone())
        } else {
            (
                rhs.den.div_exact(&g).expect("gcd divides denominator"),
                self.den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let num = &(&self.num * &left) + &(&rhs.num * &right);
        let den = &self.den * &left;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, rhs: &RationalFunction) -> RationalFunction {
        self.add(&RationalFunction {
            num: -rhs.num.clone(),
            den: rhs.den.clone(),
        })
    }

    /// Multiplies after cancelling each numerator against the opposite
    /// denominator. For canonical operands the result is then reduced up
    /// to content and sign, so no further polynomial gcd is needed.
    pub fn mul(&self, rhs: &RationalFunction) -> RationalFunction {
        let cancel = |num: &Polynomial, den: &Polynomial| -> (Polynomial, Polynomial) {
            let g = Polynomial::gcd(num, den);
            if g.degree().map_or(true, |d| d == 0) {
                (num.clone(), den.clone())
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        let mut rf = RationalFunction { num: &n1 * &n2, den: &d1 * &d2 };
        rf.normalize_content_and_sign();
        rf
    }

    /// The underlying polynomial iff the canonical denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den == Polynomial::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Limit as w -> 1, after cancelling all common powers of (w - 1).
    pub fn limit_at_one(&self) -> Result<RationalNumber, ExactError> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        while num.eval_at_one().is_zero() && den.eval_at_one().is_zero() {
            num = num.div_w_minus_one().ok_or(ExactError::PoleAtOne)?;
            den = den.div_w_minus_one().ok_or(ExactError::PoleAtOne)?;
        }
        let d1 = den.eval_at_one();
        if d1.is_zero() {
            return Err(ExactError::PoleAtOne);
        }
        Ok(RationalNumber::new(num.eval_at_one(), d1))
    }

    /// Value at w = 0, or `None` on a pole.
    pub fn eval_at_zero(&self) -> Option<RationalNumber> {
        let d0 = self.den.eval_at_zero();
        if d0.is_zero() {
            return None;
        }
        Some(RationalNumber::new(self.num.eval_at_zero(), d0))
    }

    /// `w^d * f(1/w)`, re-canonicalized.
    pub fn dual(&self, d: usize) -> RationalFunction {
        if self.is_zero() {
            return RationalFunction::zero();
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        // f(1/w) = rev(num) * w^(dd - dn) / rev(den); multiply by w^d.
        let exp = d as i64 + dd as i64 - dn as i64;
        if exp >= 0 {
            num = num.shift_up(exp as usize);
        } else {
            den = den.shift_up((-exp) as usize);
        }
        RationalFunction::new(num, den).expect("reversed denominator is nonzero")
    }

    pub fn render(&self) -> String {
        if let Some(p) = self.as_polynomial() {
            p.render()
        } else {
            format!("({}) / ({})", self.num.render(), self.den.render())
        }
    }

    /// LaTeX rendering: `\frac` layout, implicit multiplication, `{}`-braced
    /// exponents so multi-digit powers typeset correctly.
    pub fn render_latex(&self) -> String {
        let tex = |p: &Polynomial| {
            let mut s = p.render().replace('*', " ");
            // w^12 -> w^{12}
            let mut out = String::with_capacity(s.len());
            while let Some(pos) = s.find('^') {
                let (head, rest) = s.split_at(pos);
                out.push_str(head);
                out.push('^');
                let digits: String =
                    rest[1..].chars().take_while(char::is_ascii_digit).collect();
                out.push_str(&format!("{{{digits}}}"));
                s = rest[1 + digits.len()..].to_string();
            }
            out.push_str(&s);
            out
        };
        if let Some(p) = self.as_polynomial() {
            tex(p)
        } else {
            format!("\\frac{{{}}}{{{}}}", tex(&self.num), tex(&self.den))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &p(&[-1, 1]) * &p(&[1, 1]);
        assert_eq!(lhs, p(&[-1, 0, 1]));
    }

    #[test]
    fn add_zero_identity() {
        let a = p(&[3, 0, 7]);
        assert_eq!(&a + &Polynomial::zero(), a);
    }

    #[test]
    fn sub_cancels_to_zero() {
        let a = p(&[0, 1, 1]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn geom_sum_basics() {
        assert_eq!(geom_sum(1).unwrap(), Polynomial::one());
        assert_eq!(geom_sum(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(geom_sum(4).unwrap().eval_at_one(), BigInt::from(4));
        assert_eq!(geom_sum(0), Err(ExactError::GeomSumOutOfRange(0)));
    }

    #[test]
    fn rf_make_reduces_common_factor() {
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &p(&[1, 1]));
        assert_eq!(f.den(), &Polynomial::one());
    }

    #[test]
    fn rf_make_removes_content() {
        let f = RationalFunction::new(p(&[-2, 2]), p(&[2])).unwrap();
        assert_eq!(f.num(), &p(&[-1, 1]));
        assert_eq!(f.den(), &Polynomial::one());
    }

    #[test]
    fn rf_make_rejects_zero_denominator() {
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(ExactError::ZeroDenominator)
        );
    }

    #[test]
    fn rf_make_canonical_sign() {
        let f = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(f.den(), &p(&[-1, 1]));
        assert_eq!(f.num(), &p(&[-1]));
    }

    #[test]
    fn rf_inverse_pair_multiplies_to_one() {
        let f = RationalFunction::new(p(&[-1, 1]), p(&[-1, 0, 0, 1])).unwrap();
        let g = RationalFunction::new(p(&[-1, 0, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.mul(&g), RationalFunction::one());
    }

    #[test]
    fn rf_add_zero_identity() {
        let f = RationalFunction::new(p(&[1, 2]), p(&[0, 0, 1])).unwrap();
        assert_eq!(f.add(&RationalFunction::zero()), f);
    }

    #[test]
    fn d4_m5_contribution_fragment() {
        // 1 + (w-1)(w^3 + 2w^5 + w^7)/(w^7 - 1), assembled exactly.
        let frag = RationalFunction::new(
            &p(&[-1, 1]) * &p(&[0, 0, 0, 1, 0, 2, 0, 1]),
            &geom_sum(7).unwrap() * &p(&[-1, 1]),
        )
        .unwrap();
        let total = RationalFunction::one().add(&frag);
        // Denominator divides w^7 - 1.
        let w7 = p(&[-1, 0, 0, 0, 0, 0, 0, 1]);
        assert!(w7.div_exact(total.den()).is_some());
        assert_eq!(
            total.limit_at_one().unwrap(),
            RationalNumber::new(BigInt::from(11), BigInt::from(7))
        );
    }

    #[test]
    fn as_polynomial_cases() {
        let f = RationalFunction::new(p(&[1, 2]), Polynomial::one()).unwrap();
        assert_eq!(f.as_polynomial(), Some(&p(&[1, 2])));
        let g = RationalFunction::new(p(&[-1, 0, 0, 0, 1]), p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(g.as_polynomial(), None);
        assert_eq!(
            RationalFunction::zero().as_polynomial(),
            Some(&Polynomial::zero())
        );
    }

    #[test]
    fn limit_at_one_cases() {
        let f = RationalFunction::new(p(&[-1, 0, 0, 0, 1]), p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(
            f.limit_at_one().unwrap(),
            RationalNumber::new(BigInt::from(4), BigInt::from(3))
        );
        let g = RationalFunction::from_polynomial(p(&[1, 2]));
        assert_eq!(g.limit_at_one().unwrap(), RationalNumber::from(BigInt::from(3)));
        let pole = RationalFunction::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert_eq!(pole.limit_at_one(), Err(ExactError::PoleAtOne));
    }

    #[test]
    fn dual_examples() {
        let pal = RationalFunction::from_polynomial(p(&[1, 5, 5, 1]));
        assert_eq!(pal.dual(3), pal);
        assert_eq!(
            RationalFunction::one().dual(5),
            RationalFunction::from_polynomial(Polynomial::monomial(1, 5))
        );
        assert_eq!(
            RationalFunction::from_polynomial(p(&[1, 1])).dual(3),
            RationalFunction::from_polynomial(p(&[0, 0, 1, 1]))
        );
    }

    #[test]
    fn json_round_trip() {
        let f = RationalFunction::new(p(&[-1, 0, 0, 0, 1]), p(&[-1, 0, 0, 1])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let poly_json = serde_json::to_string(&p(&[1, 5, 5, 1])).unwrap();
        assert_eq!(poly_json, r#"["1","5","5","1"]"#);
    }
}
