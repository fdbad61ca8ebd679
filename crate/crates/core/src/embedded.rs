//! Restricted Hilbert polynomials of anticanonical-multiple sections.
//!
//! A section in the s-th anticanonical multiple of an ambient variety with
//! Hilbert polynomial `H` has restricted Hilbert polynomial
//! `H_r(z) = H(z) - H(z - s)`; when the ambient polynomial is symmetric
//! under `z -> -1-z` and all its roots lie strictly in the left half-plane,
//! every root of `H_r` lands on the vertical line `Re z = (s-1)/2`. This
//! module builds such sections, checks the on-line statement exactly, and
//! generates random symmetric ambient polynomials to stress it.

use num_traits::One;

use crate::ratpoly::{rational, Rational, RationalPolynomial};
use crate::rootloc::{line_split, RootReport};
use crate::{Error, Result};

/// An ambient Hilbert polynomial together with the restriction to a
/// section of its s-th anticanonical multiple.
///
/// The invariant `restricted(z) = ambient(z) - ambient(z - s)` is
/// established by [`restricted_hilbert`] and never mutated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedSection {
    ambient: RationalPolynomial,
    multiple: Rational,
    restricted: RationalPolynomial,
}

impl EmbeddedSection {
    pub fn ambient(&self) -> &RationalPolynomial {
        &self.ambient
    }

    /// The multiple `s >= 1`.
    pub fn multiple(&self) -> &Rational {
        &self.multiple
    }

    pub fn restricted(&self) -> &RationalPolynomial {
        &self.restricted
    }

    /// The line `Re z = (s-1)/2` carrying the expected roots.
    pub fn expected_line(&self) -> Rational {
        (&self.multiple - Rational::one()) / rational(2, 1)
    }
}

/// Build the restricted polynomial `H(z) - H(z - s)` for rational `s >= 1`.
/// The leading terms cancel, so the degree drops by exactly one.
pub fn restricted_hilbert(ambient: &RationalPolynomial, s: &Rational) -> Result<EmbeddedSection> {
    let Some(degree) = ambient.degree() else {
        return Err(Error::AmbientDegreeTooLow);
    };
    if degree < 1 {
        return Err(Error::AmbientDegreeTooLow);
    }
    if *s < Rational::one() {
        return Err(Error::SectionMultipleTooSmall);
    }
    let shifted = ambient.shift(&-s);
    let restricted = ambient - &shifted;
    assert_eq!(
        restricted.degree(),
        Some(degree - 1),
        "leading cancellation must drop the degree by one"
    );
    Ok(EmbeddedSection {
        ambient: ambient.clone(),
        multiple: s.clone(),
        restricted,
    })
}

/// Exact on-line check: true iff every root of the restricted polynomial
/// lies on `Re z = (s-1)/2`, together with the full count report.
pub fn verify_canonical_line(section: &EmbeddedSection) -> (bool, RootReport) {
    let line = section.expected_line();
    let report = line_split(section.restricted(), &line)
        .expect("restricted polynomial of a valid section is nonzero");
    let degree = section
        .restricted()
        .degree()
        .expect("restricted polynomial is nonzero");
    (report.on == degree, report)
}

/// Deterministic generator with splitmix mixing: the state advances by the
/// odd constant 0x9E3779B97F4A7C15 and each output is finalized with two
/// xor-shift multiplies (0xBF58476D1CE4E5B9, 0x94D049BB133111EB) and a
/// final 31-bit xor-shift. Identical seeds reproduce identical streams on
/// every platform.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `lo..=hi`.
    fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.next_u64() % (hi - lo + 1)
    }
}

/// Random monic polynomial whose root multiset is closed under both
/// conjugation and `z -> -1-z`, with every root strictly inside the strip
/// `-1 < Re z < 0`. Blocks used: quadruples `{a±bi, -1-a±bi}`, real pairs
/// `{a, -1-a}`, central conjugate pairs `-1/2 ± bi`, and the central real
/// root `-1/2` once when the degree is odd.
pub fn random_strip_symmetric(degree: usize, seed: u64) -> RationalPolynomial {
    assert!(degree >= 1, "degree must be at least 1");
    let mut rng = SplitMix64::new(seed);
    fn draw_strip_abscissa(rng: &mut SplitMix64) -> Rational {
        // -1/2 < -p/q < 0 via p <= (q-1)/2
        let q = rng.range(3, 16) as i64;
        let p = rng.range(1, ((q - 1) / 2) as u64) as i64;
        rational(-p, q)
    }
    fn draw_imag(rng: &mut SplitMix64) -> Rational {
        let num = rng.range(1, 8) as i64;
        let den = rng.range(1, 8) as i64;
        let sign = if rng.next_u64().is_multiple_of(2) { 1 } else { -1 };
        rational(sign * num, den)
    }

    let mut product = RationalPolynomial::one();
    let mut remaining = degree;
    if remaining % 2 == 1 {
        product = &product * &RationalPolynomial::new(vec![rational(1, 2), Rational::one()]);
        remaining -= 1;
    }
    while remaining > 0 {
        let choices = if remaining >= 4 { 3 } else { 2 };
        match rng.next_u64() % choices {
            0 => {
                // central conjugate pair: (z + 1/2)^2 + b^2
                let b = draw_imag(&mut rng);
                let factor = RationalPolynomial::new(vec![
                    rational(1, 4) + &b * &b,
                    Rational::one(),
                    Rational::one(),
                ]);
                product = &product * &factor;
                remaining -= 2;
            }
            1 => {
                // real pair {a, -1-a}
                let a = draw_strip_abscissa(&mut rng);
                let mirror = rational(-1, 1) - &a;
                product = &product * &RationalPolynomial::from_roots(&[a, mirror]);
                remaining -= 2;
            }
            _ => {
                // quadruple {a±bi, -1-a±bi}
                let a = draw_strip_abscissa(&mut rng);
                let b = draw_imag(&mut rng);
                let b_sq = &b * &b;
                let first = RationalPolynomial::new(vec![
                    &a * &a + &b_sq,
                    rational(-2, 1) * &a,
                    Rational::one(),
                ]);
                let c = rational(-1, 1) - &a;
                let second = RationalPolynomial::new(vec![
                    &c * &c + &b_sq,
                    rational(-2, 1) * &c,
                    Rational::one(),
                ]);
                product = &(&product * &first) * &second;
                remaining -= 4;
            }
        }
    }
    product
}

/// Configuration of the randomized on-line suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub cases: usize,
    pub max_degree: usize,
    pub s_values: Vec<Rational>,
    pub seed: u64,
}

/// One failed check with everything needed to reproduce it.
#[derive(Clone, Debug)]
pub struct SuiteFailure {
    pub case_index: usize,
    pub case_seed: u64,
    pub degree: usize,
    pub s: Rational,
    pub polynomial: RationalPolynomial,
    pub report: RootReport,
}

/// Tally of a finished suite run.
#[derive(Clone, Debug)]
pub struct SuiteSummary {
    pub checks: usize,
    pub passes: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run the randomized suite: for every generated symmetric polynomial `H`
/// and every `s`, assert by exact counting that all roots of
/// `H(z) - H(z-s)` lie on `Re z = (s-1)/2`.
pub fn lemma_property_suite(config: &SuiteConfig) -> Result<SuiteSummary> {
    if config.cases == 0 || config.max_degree == 0 || config.s_values.is_empty() {
        return Err(Error::InvalidSuiteParameters);
    }
    for s in &config.s_values {
        if *s < Rational::one() {
            return Err(Error::SectionMultipleTooSmall);
        }
    }
    let mut rng = SplitMix64::new(config.seed);
    let mut summary = SuiteSummary {
        checks: 0,
        passes: 0,
        failures: Vec::new(),
    };
    for case_index in 0..config.cases {
        let degree = 1 + (rng.next_u64() % config.max_degree as u64) as usize;
        let case_seed = rng.next_u64();
        let polynomial = random_strip_symmetric(degree, case_seed);
        for s in &config.s_values {
            let section = restricted_hilbert(&polynomial, s)?;
            let (on_line, report) = verify_canonical_line(&section);
            summary.checks += 1;
            if on_line {
                summary.passes += 1;
            } else {
                summary.failures.push(SuiteFailure {
                    case_index,
                    case_seed,
                    degree,
                    s: s.clone(),
                    polynomial: polynomial.clone(),
                    report,
                });
            }
        }
    }
    Ok(summary)
}
