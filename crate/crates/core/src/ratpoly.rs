//! Exact univariate polynomial arithmetic over arbitrary-precision rationals.
//!
//! Polynomials store their coefficients in ascending degree order with the
//! leading coefficient nonzero; the zero polynomial is the empty coefficient
//! list. All arithmetic is exact. Real-root counting runs Sturm chains on
//! primitive integer polynomials (denominators cleared, integer content
//! removed at every step), so sign evaluations never touch a fraction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for a rational from an integer pair. Panics on zero denominator.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A univariate polynomial with exact rational coefficients.
///
/// Coefficients are ascending: `coeffs[k]` multiplies `z^k`. Invariants:
/// no trailing zero coefficients, and the zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Build from ascending coefficients; trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// The identity polynomial `z`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// Monic product of linear factors `(z - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = Self::one();
        for r in roots {
            let factor = Self::new(vec![-r.clone(), Rational::one()]);
            p = &p * &factor;
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The polynomial `p(z + a)`, so `shift(p, -n)` is `p(z - n)`.
    pub fn shift(&self, a: &Rational) -> Self {
        // Horner composition with the linear polynomial z + a.
        let linear = Self::new(vec![a.clone(), Rational::one()]);
        self.compose_linear(&linear)
    }

    /// The polynomial `p(-1 - z)`.
    pub fn reflect(&self) -> Self {
        let linear = Self::new(vec![-Rational::one(), -Rational::one()]);
        self.compose_linear(&linear)
    }

    /// The polynomial `p(-z)`.
    pub fn compose_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    fn compose_linear(&self, linear: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * linear) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        Self::new(coeffs)
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(ddeg) = divisor.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let dlead = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        let mut quot = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().expect("nonzero remainder") / &dlead;
            let k = rdeg - ddeg;
            quot[k] = factor.clone();
            let mut coeffs = rem.coeffs;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                coeffs[k + i] -= &factor * dc;
            }
            rem = Self::new(coeffs);
        }
        Ok((Self::new(quot), rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "div_exact called with a non-divisor");
        q
    }

    /// Monic greatest common divisor. Errors if both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeroPolynomials);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        let lead = a.leading().expect("nonzero gcd").clone();
        Ok(a.scale(&lead.recip()))
    }

    /// Monic polynomial with the same distinct roots as `self`, all simple.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative())?;
        let part = self.div_exact(&g);
        let lead = part.leading().expect("nonzero part").clone();
        Ok(part.scale(&lead.recip()))
    }

    /// Exact number of distinct real roots on the whole real line.
    pub fn count_real_roots(&self) -> Result<usize> {
        let chain = self.squarefree_chain()?;
        let Some(chain) = chain else { return Ok(0) };
        let at_minus = variations(&chain, SignPoint::NegInfinity);
        let at_plus = variations(&chain, SignPoint::PosInfinity);
        Ok(at_minus - at_plus)
    }

    /// Exact number of distinct real roots in `range`, honoring the
    /// open/closed endpoint flags.
    pub fn count_real_roots_in(&self, range: &Interval) -> Result<usize> {
        let chain = self.squarefree_chain()?;
        let Some(chain) = chain else { return Ok(0) };
        let root_at = |x: &Rational| sign_at(&chain[0], &SignPoint::At(x.clone())) == 0;
        if range.low == range.high {
            let hit = range.low_closed && range.high_closed && root_at(&range.low);
            return Ok(usize::from(hit));
        }
        // V(a) - V(b) counts the distinct roots in the half-open (a, b].
        let mut count = variations(&chain, SignPoint::At(range.low.clone()))
            - variations(&chain, SignPoint::At(range.high.clone()));
        if range.low_closed && root_at(&range.low) {
            count += 1;
        }
        if !range.high_closed && root_at(&range.high) {
            count -= 1;
        }
        Ok(count)
    }

    /// Sturm chain of the squarefree part as primitive integer polynomials.
    /// `None` when the squarefree part is constant (no roots anywhere).
    fn squarefree_chain(&self) -> Result<Option<Vec<Vec<BigInt>>>> {
        let sf = self.squarefree_part()?;
        if sf.degree() == Some(0) {
            return Ok(None);
        }
        Ok(Some(sturm_chain(&sf)))
    }
}

impl std::ops::Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RationalPolynomial::new(coeffs)
    }
}

impl std::ops::Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        RationalPolynomial::new(coeffs)
    }
}

impl std::ops::Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::new(coeffs)
    }
}

impl std::ops::Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

/// A bounded interval of the real line with per-endpoint closure flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    low: Rational,
    high: Rational,
    low_closed: bool,
    high_closed: bool,
}

impl Interval {
    pub fn new(low: Rational, high: Rational, low_closed: bool, high_closed: bool) -> Result<Self> {
        if low > high {
            return Err(Error::InvalidInterval);
        }
        Ok(Self {
            low,
            high,
            low_closed,
            high_closed,
        })
    }

    pub fn open(low: Rational, high: Rational) -> Result<Self> {
        Self::new(low, high, false, false)
    }

    pub fn closed(low: Rational, high: Rational) -> Result<Self> {
        Self::new(low, high, true, true)
    }

    pub fn low(&self) -> &Rational {
        &self.low
    }

    pub fn high(&self) -> &Rational {
        &self.high
    }

    pub fn low_closed(&self) -> bool {
        self.low_closed
    }

    pub fn high_closed(&self) -> bool {
        self.high_closed
    }
}

/// Where a sign evaluation takes place.
pub(crate) enum SignPoint {
    NegInfinity,
    At(Rational),
    PosInfinity,
}

/// Clear denominators and remove integer content, preserving sign.
/// Returns ascending integer coefficients with no trailing zeros.
pub(crate) fn primitive_integer_coeffs(p: &RationalPolynomial) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for a in &ints {
        content = content.gcd(a);
    }
    if !content.is_zero() && !content.is_one() {
        for a in &mut ints {
            *a = &*a / &content;
        }
    }
    ints
}

fn int_derivative(f: &[BigInt]) -> Vec<BigInt> {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

fn strip_trailing_zeros(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn int_to_rational_poly(f: &[BigInt]) -> RationalPolynomial {
    RationalPolynomial::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn primitive_from_rational(p: &RationalPolynomial) -> Vec<BigInt> {
    strip_trailing_zeros(primitive_integer_coeffs(p))
}

/// Generalized Sturm chain starting from `(f0, f1)` with negated remainders,
/// every element reduced to a primitive integer polynomial (the reduction is
/// by positive scalars only, so sign sequences are untouched).
pub(crate) fn sturm_chain_pair(f0: Vec<BigInt>, f1: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let mut chain = vec![f0];
    if !f1.is_empty() {
        chain.push(f1);
    }
    loop {
        let n = chain.len();
        if n < 2 || chain[n - 1].is_empty() {
            break;
        }
        let a = int_to_rational_poly(&chain[n - 2]);
        let b = int_to_rational_poly(&chain[n - 1]);
        let (_, r) = a.div_rem(&b).expect("nonzero divisor in Sturm chain");
        if r.is_zero() {
            break;
        }
        chain.push(primitive_from_rational(&-&r));
    }
    chain
}

/// Classical Sturm chain of a squarefree polynomial.
fn sturm_chain(sf: &RationalPolynomial) -> Vec<Vec<BigInt>> {
    let f0 = primitive_from_rational(sf);
    let f1 = strip_trailing_zeros(int_derivative(&f0));
    sturm_chain_pair(f0, f1)
}

/// Sign of the integer polynomial at a point. For rational `x = p/q` this
/// evaluates `sum a_k p^k q^(n-k)`, an integer with the sign of `f(x)`.
pub(crate) fn sign_at(f: &[BigInt], point: &SignPoint) -> i8 {
    if f.is_empty() {
        return 0;
    }
    let deg = f.len() - 1;
    let lead_sign = int_sign(&f[deg]);
    match point {
        SignPoint::PosInfinity => lead_sign,
        SignPoint::NegInfinity => {
            if deg.is_multiple_of(2) {
                lead_sign
            } else {
                -lead_sign
            }
        }
        SignPoint::At(x) => {
            // Horner in p with an ascending power of q folded into each step,
            // so the accumulator always holds an integer.
            let p = x.numer();
            let q = x.denom();
            let mut total = BigInt::zero();
            let mut qpow = BigInt::one();
            for c in f.iter().rev() {
                total = total * p + c * &qpow;
                qpow *= q;
            }
            int_sign(&total)
        }
    }
}

fn int_sign(v: &BigInt) -> i8 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Number of sign variations of the chain at a point, zeros skipped.
pub(crate) fn variations(chain: &[Vec<BigInt>], point: SignPoint) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for f in chain {
        let s = sign_at(f, &point);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}
