//! Hilbert polynomials of Fano-type varieties from closed formulas.
//!
//! Constructors for curves, surfaces, threefolds, projective spaces and
//! Grassmannians, the closed-form root expressions that go with the low
//! dimensions, the reflection symmetry check `H(-1-z) = ±H(z)`, and a
//! scanner that sweeps Chern-number ranges and classifies every datum.

use num_traits::{One, Signed, Zero};
use std::ops::RangeInclusive;

use crate::ratpoly::{rational, Rational, RationalPolynomial};
use crate::rootloc::{classify_strip, StripVerdict};
use crate::{Error, Result};

/// Chern numbers of a variety, tagged by dimension.
///
/// The entries are rationals rather than integers so that boundary loci
/// like `c1^3 = (8/3) c1c2` can be probed directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChernData {
    Curve { genus: u32 },
    Surface { c1_sq: Rational, c2: Rational },
    Threefold { c1_cube: Rational, c1_c2: Rational },
}

impl ChernData {
    pub fn dim(&self) -> u32 {
        match self {
            ChernData::Curve { .. } => 1,
            ChernData::Surface { .. } => 2,
            ChernData::Threefold { .. } => 3,
        }
    }

    /// The Hilbert polynomial for this datum.
    pub fn hilbert(&self) -> Result<RationalPolynomial> {
        match self {
            ChernData::Curve { genus } => curve(*genus),
            ChernData::Surface { c1_sq, c2 } => surface(c1_sq, c2),
            ChernData::Threefold { c1_cube, c1_c2 } => threefold(c1_cube, c1_c2),
        }
    }
}

/// A Grassmannian `G(k, N)` of k-planes in N-space, restricted to the
/// range `N >= 2k >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannianSpec {
    k: u32,
    n: u32,
}

impl GrassmannianSpec {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k < 1 || n < 2 * k {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `dim G(k, N) = k (N - k)`.
    pub fn dim(&self) -> u32 {
        self.k * (self.n - self.k)
    }
}

/// Exact symbolic roots: isolated rationals plus `center ± sqrt(radicand)/2`
/// pairs. A negative radicand encodes a conjugate pair, a zero radicand a
/// double root at the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormRoots {
    pub rational_roots: Vec<Rational>,
    pub sqrt_pairs: Vec<SqrtPair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtPair {
    pub center: Rational,
    pub radicand: Rational,
}

impl ClosedFormRoots {
    /// Root count with multiplicity (each pair counts twice).
    pub fn count(&self) -> usize {
        self.rational_roots.len() + 2 * self.sqrt_pairs.len()
    }

    /// Monic polynomial with exactly these roots:
    /// `prod (z - r) * prod ((z - center)^2 - radicand/4)`.
    pub fn monic_polynomial(&self) -> RationalPolynomial {
        let mut p = RationalPolynomial::from_roots(&self.rational_roots);
        for pair in &self.sqrt_pairs {
            let quarter = &pair.radicand / rational(4, 1);
            let factor = RationalPolynomial::new(vec![
                &pair.center * &pair.center - quarter,
                rational(-2, 1) * &pair.center,
                Rational::one(),
            ]);
            p = &p * &factor;
        }
        p
    }

    /// How many of the roots lie exactly on `Re z = -1/2`.
    pub fn count_on_central_line(&self) -> usize {
        let half = rational(-1, 2);
        let mut on = 0;
        for r in &self.rational_roots {
            if *r == half {
                on += 1;
            }
        }
        for pair in &self.sqrt_pairs {
            if pair.center == half && !pair.radicand.is_positive() {
                on += 2;
            }
        }
        on
    }
}

/// Genus-g curve: `(2 - 2g)(z + 1/2)`. Genus one is rejected because the
/// polynomial degenerates to zero; embedded elliptic sections cover that
/// case.
pub fn curve(genus: u32) -> Result<RationalPolynomial> {
    if genus == 1 {
        return Err(Error::GenusOneCurve);
    }
    let two_minus = rational(2 - 2 * i64::from(genus), 1);
    Ok(RationalPolynomial::new(vec![
        &two_minus / rational(2, 1),
        two_minus,
    ]))
}

/// Surface with Chern numbers `(c1^2, c2)`:
/// `(c1^2/2) z^2 + (c1^2/2) z + (c1^2 + c2)/12`.
pub fn surface(c1_sq: &Rational, c2: &Rational) -> Result<RationalPolynomial> {
    if c1_sq.is_zero() {
        return Err(Error::ZeroC1Squared);
    }
    let half_c1 = c1_sq / rational(2, 1);
    Ok(RationalPolynomial::new(vec![
        (c1_sq + c2) / rational(12, 1),
        half_c1.clone(),
        half_c1,
    ]))
}

/// Threefold with Chern numbers `(c1^3, c1c2)`:
/// `(c1^3/6) z^3 + (c1^3/4) z^2 + ((c1^3 + c1c2)/12) z + c1c2/24`.
pub fn threefold(c1_cube: &Rational, c1_c2: &Rational) -> Result<RationalPolynomial> {
    if c1_cube.is_zero() {
        return Err(Error::ZeroC1Cubed);
    }
    Ok(RationalPolynomial::new(vec![
        c1_c2 / rational(24, 1),
        (c1_cube + c1_c2) / rational(12, 1),
        c1_cube / rational(4, 1),
        c1_cube / rational(6, 1),
    ]))
}

/// Projective n-space: `prod_{i=1..n} ((n+1)z + i) / i`, normalized so that
/// `H(0) = 1` and all integer values are integers.
pub fn projective(n: u32) -> Result<RationalPolynomial> {
    if n < 1 {
        return Err(Error::InvalidProjectiveDimension);
    }
    let mut p = RationalPolynomial::one();
    for i in 1..=i64::from(n) {
        let factor =
            RationalPolynomial::new(vec![Rational::one(), rational(i64::from(n) + 1, i)]);
        p = &p * &factor;
    }
    Ok(p)
}

/// Grassmannian `G(k, N)`: the root `-i/N` carries multiplicity
/// `min(k, i, N - i)` for `i = 1..N-1`, the total degree is `k(N-k)`, and
/// the overall constant is fixed by `H(0) = 1`.
pub fn grassmannian(spec: &GrassmannianSpec) -> RationalPolynomial {
    let n = i64::from(spec.n());
    let mut p = RationalPolynomial::one();
    for i in 1..n {
        let mult = i.min(n - i).min(i64::from(spec.k()));
        let factor =
            RationalPolynomial::new(vec![Rational::new(i.into(), n.into()), Rational::one()]);
        for _ in 0..mult {
            p = &p * &factor;
        }
    }
    let at_zero = p.evaluate(&Rational::zero());
    p.scale(&at_zero.recip())
}

/// Exact closed-form roots matching the low-dimensional constructors.
pub fn closed_form_roots(data: &ChernData) -> Result<ClosedFormRoots> {
    let half = rational(-1, 2);
    match data {
        ChernData::Curve { genus } => {
            if *genus == 1 {
                return Err(Error::GenusOneCurve);
            }
            Ok(ClosedFormRoots {
                rational_roots: vec![half],
                sqrt_pairs: Vec::new(),
            })
        }
        ChernData::Surface { c1_sq, c2 } => {
            if c1_sq.is_zero() {
                return Err(Error::ZeroC1Squared);
            }
            // -1/2 ± (1/2) sqrt((c1^2 - 2 c2) / (3 c1^2))
            let radicand = (c1_sq - c2 * rational(2, 1)) / (c1_sq * rational(3, 1));
            Ok(ClosedFormRoots {
                rational_roots: Vec::new(),
                sqrt_pairs: vec![SqrtPair {
                    center: half,
                    radicand,
                }],
            })
        }
        ChernData::Threefold { c1_cube, c1_c2 } => {
            if c1_cube.is_zero() {
                return Err(Error::ZeroC1Cubed);
            }
            // -1/2 and -1/2 ± (1/2) sqrt((c1^3 - 2 c1c2) / c1^3)
            let radicand = (c1_cube - c1_c2 * rational(2, 1)) / c1_cube;
            Ok(ClosedFormRoots {
                rational_roots: vec![half.clone()],
                sqrt_pairs: vec![SqrtPair {
                    center: half,
                    radicand,
                }],
            })
        }
    }
}

/// True iff `p(-1-z) = (-1)^dim * p(z)` holds coefficient-exactly.
pub fn serre_check(p: &RationalPolynomial, dim: u32) -> bool {
    let reflected = p.reflect();
    if dim.is_multiple_of(2) {
        reflected == *p
    } else {
        reflected == -p
    }
}

/// A family of Chern data to sweep, in deterministic ascending order.
#[derive(Clone, Debug)]
pub enum ScanFamily {
    /// del Pezzo surfaces: `c1^2 = 1..9` with `c2 = 12 - c1^2`.
    DelPezzo,
    /// Fano threefolds: `c1c2 = 24` with `c1^3` running over the range.
    FanoThreefold { c1_cube: RangeInclusive<i64> },
    /// Free surface sweep over both Chern numbers; `c1^2 = 0` is skipped
    /// because no polynomial exists there.
    Surface {
        c1_sq: RangeInclusive<i64>,
        c2: RangeInclusive<i64>,
    },
    /// Free threefold sweep; `c1^3 = 0` is skipped.
    Threefold {
        c1_cube: RangeInclusive<i64>,
        c1_c2: RangeInclusive<i64>,
    },
}

/// One scanned datum with its exact verdict.
#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub data: ChernData,
    pub verdict: StripVerdict,
}

/// Verdict tallies over a whole scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub total: usize,
    pub cs: usize,
    pub ncs: usize,
    pub cl: usize,
}

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

/// Sweep a family and classify every constructible datum.
pub fn scan(family: &ScanFamily) -> Result<ScanOutcome> {
    let mut data = Vec::new();
    match family {
        ScanFamily::DelPezzo => {
            for c1_sq in 1..=9i64 {
                data.push(ChernData::Surface {
                    c1_sq: rational(c1_sq, 1),
                    c2: rational(12 - c1_sq, 1),
                });
            }
        }
        ScanFamily::FanoThreefold { c1_cube } => {
            check_range(c1_cube)?;
            for v in c1_cube.clone() {
                if v == 0 {
                    continue;
                }
                data.push(ChernData::Threefold {
                    c1_cube: rational(v, 1),
                    c1_c2: rational(24, 1),
                });
            }
        }
        ScanFamily::Surface { c1_sq, c2 } => {
            check_range(c1_sq)?;
            check_range(c2)?;
            for a in c1_sq.clone() {
                if a == 0 {
                    continue;
                }
                for b in c2.clone() {
                    data.push(ChernData::Surface {
                        c1_sq: rational(a, 1),
                        c2: rational(b, 1),
                    });
                }
            }
        }
        ScanFamily::Threefold { c1_cube, c1_c2 } => {
            check_range(c1_cube)?;
            check_range(c1_c2)?;
            for a in c1_cube.clone() {
                if a == 0 {
                    continue;
                }
                for b in c1_c2.clone() {
                    data.push(ChernData::Threefold {
                        c1_cube: rational(a, 1),
                        c1_c2: rational(b, 1),
                    });
                }
            }
        }
    }

    let mut records = Vec::with_capacity(data.len());
    let mut summary = ScanSummary::default();
    for datum in data {
        let polynomial = datum.hilbert()?;
        let verdict = classify_strip(&polynomial, datum.dim())?;
        summary.total += 1;
        summary.cs += usize::from(verdict.cs);
        summary.ncs += usize::from(verdict.ncs);
        summary.cl += usize::from(verdict.cl);
        records.push(ScanRecord {
            data: datum,
            verdict,
        });
    }
    Ok(ScanOutcome { records, summary })
}

fn check_range(range: &RangeInclusive<i64>) -> Result<()> {
    if range.start() > range.end() {
        return Err(Error::EmptyScanRange);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rational;
    use crate::rootloc::line_split;
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    /// Exact binomial coefficient, the counting oracle for projective
    /// space values.
    fn binomial(n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let mut result = BigInt::one();
        for i in 0..k.min(n - k) {
            result = result * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        result
    }

    fn r(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    fn poly(coeffs: &[(i64, i64)]) -> RationalPolynomial {
        RationalPolynomial::new(coeffs.iter().map(|&(n, d)| r(n, d)).collect())
    }

    /// Dimension of the GL(N) representation with rectangular highest
    /// weight (t, ..., t, 0, ..., 0) (k copies of t), by the Weyl dimension
    /// formula. Independent oracle for the Grassmannian series: the value
    /// of H at m is the dimension at t = m*N.
    fn weyl_rectangular_dim(k: u32, n: u32, t: u64) -> BigInt {
        let lambda = |i: u32| -> i64 {
            if i < k {
                t as i64
            } else {
                0
            }
        };
        let mut value = Rational::one();
        for i in 0..n {
            for j in (i + 1)..n {
                let numer = lambda(i) - lambda(j) + i64::from(j) - i64::from(i);
                let denom = i64::from(j) - i64::from(i);
                value *= r(numer, denom);
            }
        }
        assert!(value.is_integer(), "Weyl dimension must be an integer");
        value.to_integer()
    }

    /// Divide out (z - root) as many times as it goes; returns multiplicity.
    fn root_multiplicity(p: &RationalPolynomial, root: &Rational) -> usize {
        let factor = RationalPolynomial::new(vec![-root, Rational::one()]);
        let mut mult = 0;
        let mut current = p.clone();
        loop {
            let (q, rem) = current.div_rem(&factor).unwrap();
            if rem.is_zero() {
                mult += 1;
                current = q;
            } else {
                return mult;
            }
        }
    }

    #[test]
    fn curve_formula() {
        assert_eq!(curve(0).unwrap(), poly(&[(1, 1), (2, 1)]));
        assert_eq!(curve(2).unwrap(), poly(&[(-1, 1), (-2, 1)]));
        assert_eq!(curve(3).unwrap(), poly(&[(-2, 1), (-4, 1)]));
        assert!(matches!(curve(1), Err(Error::GenusOneCurve)));
    }

    #[test]
    fn genus_three_on_central_line() {
        let v = classify_strip(&curve(3).unwrap(), 1).unwrap();
        assert!(v.cl);
    }

    #[test]
    fn surface_plane_chern_numbers() {
        let h = surface(&r(9, 1), &r(3, 1)).unwrap();
        assert_eq!(h, poly(&[(1, 1), (9, 2), (9, 2)]));
        assert_eq!(h.evaluate(&r(1, 1)), r(10, 1));
    }

    #[test]
    fn surface_quadric_is_perfect_square() {
        let h = surface(&r(8, 1), &r(4, 1)).unwrap();
        assert_eq!(h, poly(&[(1, 1), (4, 1), (4, 1)]));
        assert!(classify_strip(&h, 2).unwrap().cl);
    }

    #[test]
    fn surface_central_line_at_discriminant_zero() {
        // c1^2 = 2 c2 makes the discriminant vanish.
        let h = surface(&r(6, 1), &r(3, 1)).unwrap();
        assert!(classify_strip(&h, 2).unwrap().cl);
        assert!(matches!(
            surface(&Rational::zero(), &r(3, 1)),
            Err(Error::ZeroC1Squared)
        ));
    }

    #[test]
    fn threefold_projective_space() {
        let h = threefold(&r(64, 1), &r(24, 1)).unwrap();
        assert_eq!(h, poly(&[(1, 1), (22, 3), (16, 1), (32, 3)]));
        assert_eq!(h.evaluate(&r(1, 1)), r(35, 1));
        assert_eq!(h, projective(3).unwrap());
    }

    #[test]
    fn threefold_roots_quarters() {
        let h = threefold(&r(64, 1), &r(24, 1)).unwrap();
        assert_eq!(root_multiplicity(&h, &r(-1, 4)), 1);
        assert_eq!(root_multiplicity(&h, &r(-1, 2)), 1);
        assert_eq!(root_multiplicity(&h, &r(-3, 4)), 1);
    }

    #[test]
    fn threefold_central_boundary() {
        // -2 c1c2 / c1^3 = -1 exactly at c1^3 = 48.
        let h = threefold(&r(48, 1), &r(24, 1)).unwrap();
        assert!(classify_strip(&h, 3).unwrap().cl);
        let h2 = threefold(&r(49, 1), &r(24, 1)).unwrap();
        assert!(!classify_strip(&h2, 3).unwrap().cl);
    }

    #[test]
    fn projective_line_matches_rational_curve() {
        assert_eq!(projective(1).unwrap(), curve(0).unwrap());
        assert_eq!(projective(2).unwrap(), poly(&[(1, 1), (9, 2), (9, 2)]));
        assert!(matches!(
            projective(0),
            Err(Error::InvalidProjectiveDimension)
        ));
    }

    #[test]
    fn projective_values_count_monomials() {
        // H_n(m) = C((n+1)m + n, n), the dimension of degree-(n+1)m forms.
        for n in 1..=4u32 {
            let h = projective(n).unwrap();
            for m in 0..=8u64 {
                let value = h.evaluate(&r(m as i64, 1));
                let expected = binomial(u64::from(n + 1) * m + u64::from(n), u64::from(n));
                assert_eq!(value, Rational::from_integer(expected), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn grassmannian_spec_validation() {
        assert!(GrassmannianSpec::new(2, 4).is_ok());
        assert!(matches!(
            GrassmannianSpec::new(2, 3),
            Err(Error::InvalidGrassmannian { .. })
        ));
        assert!(matches!(
            GrassmannianSpec::new(0, 4),
            Err(Error::InvalidGrassmannian { .. })
        ));
    }

    #[test]
    fn grassmannian_two_four() {
        let spec = GrassmannianSpec::new(2, 4).unwrap();
        let h = grassmannian(&spec);
        assert_eq!(h.degree(), Some(4));
        assert_eq!(h.evaluate(&Rational::zero()), Rational::one());
        assert_eq!(h.evaluate(&Rational::one()), r(105, 1));
        assert_eq!(root_multiplicity(&h, &r(-1, 4)), 1);
        assert_eq!(root_multiplicity(&h, &r(-1, 2)), 2);
        assert_eq!(root_multiplicity(&h, &r(-3, 4)), 1);
    }

    #[test]
    fn grassmannian_of_lines_is_projective_space() {
        for n in 1..=5u32 {
            let spec = GrassmannianSpec::new(1, n + 1).unwrap();
            assert_eq!(grassmannian(&spec), projective(n).unwrap());
        }
    }

    #[test]
    fn grassmannian_two_five_multiplicities() {
        let spec = GrassmannianSpec::new(2, 5).unwrap();
        let h = grassmannian(&spec);
        assert_eq!(h.degree(), Some(6));
        for (i, expected) in [(1i64, 1usize), (2, 2), (3, 2), (4, 1)] {
            assert_eq!(root_multiplicity(&h, &r(-i, 5)), expected, "root -{i}/5");
        }
    }

    #[test]
    fn grassmannian_values_match_weyl_dimensions() {
        for (k, n) in [(2u32, 4u32), (2, 5), (3, 6)] {
            let spec = GrassmannianSpec::new(k, n).unwrap();
            let h = grassmannian(&spec);
            let degree = h.degree().unwrap() as u64;
            for m in 0..=degree + 2 {
                let value = h.evaluate(&r(m as i64, 1));
                let expected = weyl_rectangular_dim(k, n, m * u64::from(n));
                assert_eq!(
                    value,
                    Rational::from_integer(expected),
                    "G({k},{n}) at m={m}"
                );
            }
        }
    }

    #[test]
    fn serre_symmetry_examples() {
        assert!(serre_check(&surface(&r(9, 1), &r(3, 1)).unwrap(), 2));
        assert!(serre_check(&threefold(&r(64, 1), &r(24, 1)).unwrap(), 3));
        assert!(serre_check(&poly(&[(3, 1), (1, 1), (1, 1)]), 2)); // z^2 + z + 3
        assert!(!serre_check(&poly(&[(1, 1), (0, 1), (1, 1)]), 2)); // z^2 + 1
    }

    #[test]
    fn constructors_satisfy_serre_symmetry() {
        assert!(serre_check(&curve(0).unwrap(), 1));
        assert!(serre_check(&curve(5).unwrap(), 1));
        for n in 1..=5 {
            assert!(serre_check(&projective(n).unwrap(), n));
        }
        let spec = GrassmannianSpec::new(2, 5).unwrap();
        assert!(serre_check(&grassmannian(&spec), spec.dim()));
    }

    #[test]
    fn closed_form_surface_roots() {
        let data = ChernData::Surface {
            c1_sq: r(9, 1),
            c2: r(3, 1),
        };
        let roots = closed_form_roots(&data).unwrap();
        assert_eq!(roots.sqrt_pairs.len(), 1);
        assert_eq!(roots.sqrt_pairs[0].center, r(-1, 2));
        assert_eq!(roots.sqrt_pairs[0].radicand, r(1, 9));
        // -1/2 ± (1/2)(1/3) = {-1/3, -2/3}: the monic reconstruction must
        // match the constructor up to its leading coefficient.
        let h = surface(&r(9, 1), &r(3, 1)).unwrap();
        let monic = h.scale(&h.leading().unwrap().recip());
        assert_eq!(roots.monic_polynomial(), monic);
    }

    #[test]
    fn closed_form_threefold_roots() {
        let data = ChernData::Threefold {
            c1_cube: r(64, 1),
            c1_c2: r(24, 1),
        };
        let roots = closed_form_roots(&data).unwrap();
        assert_eq!(roots.rational_roots, vec![r(-1, 2)]);
        assert_eq!(roots.sqrt_pairs[0].radicand, r(1, 4));
        let h = threefold(&r(64, 1), &r(24, 1)).unwrap();
        let monic = h.scale(&h.leading().unwrap().recip());
        assert_eq!(roots.monic_polynomial(), monic);
    }

    #[test]
    fn closed_form_degenerate_radicand() {
        let data = ChernData::Surface {
            c1_sq: r(8, 1),
            c2: r(4, 1),
        };
        let roots = closed_form_roots(&data).unwrap();
        assert!(roots.sqrt_pairs[0].radicand.is_zero());
        assert_eq!(roots.count_on_central_line(), 2);
    }

    #[test]
    fn closed_form_agrees_with_line_split_and_approx() {
        // Deterministic pseudo-random sweep over 100 surface and 100
        // threefold data; closed-form on-line counts vs line_split, and
        // closed-form values vs the numeric root finder.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for case in 0..200 {
            let lead = 1 + (next() % 59) as i64;
            let other = (next() % 121) as i64 - 60;
            let data = if case % 2 == 0 {
                ChernData::Surface {
                    c1_sq: r(lead, 1),
                    c2: r(other, 1),
                }
            } else {
                ChernData::Threefold {
                    c1_cube: r(lead, 1),
                    c1_c2: r(other, 1),
                }
            };
            let h = data.hilbert().unwrap();
            let roots = closed_form_roots(&data).unwrap();
            assert_eq!(roots.count(), h.degree().unwrap());
            let split = line_split(&h, &r(-1, 2)).unwrap();
            assert_eq!(split.on, roots.count_on_central_line(), "{data:?}");

            // Location agreement only makes sense for simple roots; a
            // vanishing radicand clusters everything at -1/2 and is
            // covered by the dedicated degenerate test below.
            if roots.sqrt_pairs.iter().any(|p| p.radicand.is_zero()) {
                continue;
            }
            let approx =
                crate::rootloc::approx_roots(&h, &r(1, 1_000_000_000_000)).unwrap();
            let mut expected: Vec<(f64, f64)> = Vec::new();
            for root in &roots.rational_roots {
                expected.push((root.to_f64().unwrap(), 0.0));
            }
            for pair in &roots.sqrt_pairs {
                let c = pair.center.to_f64().unwrap();
                let rad = pair.radicand.to_f64().unwrap();
                if rad >= 0.0 {
                    expected.push((c + rad.sqrt() / 2.0, 0.0));
                    expected.push((c - rad.sqrt() / 2.0, 0.0));
                } else {
                    expected.push((c, (-rad).sqrt() / 2.0));
                    expected.push((c, -(-rad).sqrt() / 2.0));
                }
            }
            assert_eq!(expected.len(), approx.len());
            for (re, im) in expected {
                let hit = approx
                    .iter()
                    .any(|a| (a.value.re - re).abs() < 1e-9 && (a.value.im - im).abs() < 1e-9);
                assert!(hit, "{data:?}: missing root {re}+{im}i");
            }
        }
    }

    #[test]
    fn approx_roots_cluster_at_degenerate_radicand() {
        // c1^3 = 2 c1c2 puts a triple root at -1/2; the numeric finder can
        // only certify it by residual and loose location.
        let h = threefold(&r(56, 1), &r(28, 1)).unwrap();
        let approx = crate::rootloc::approx_roots(&h, &r(1, 1_000_000_000)).unwrap();
        assert_eq!(approx.len(), 3);
        for a in &approx {
            assert!((a.value.re + 0.5).abs() < 1e-2 && a.value.im.abs() < 1e-2);
            assert!(a.residual < 1e-9);
        }
        let split = line_split(&h, &r(-1, 2)).unwrap();
        assert_eq!(split.on, 3);
    }

    #[test]
    fn surface_verdicts_match_inequalities() {
        // For positive c1^2 the strip verdicts reduce to inequalities in
        // the Chern numbers: CS ⟺ c1^2 + c2 > 0 (strict strip), NCS ⟺
        // c1^2 <= 3 c2, CL ⟺ c1^2 <= 2 c2.
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..120 {
            let c1_sq = 1 + (next() % 50) as i64;
            let c2 = (next() % 101) as i64 - 50;
            let h = surface(&r(c1_sq, 1), &r(c2, 1)).unwrap();
            let v = classify_strip(&h, 2).unwrap();
            assert_eq!(v.cs, c1_sq + c2 > 0, "cs at ({c1_sq},{c2})");
            assert_eq!(v.ncs, c1_sq <= 3 * c2, "ncs at ({c1_sq},{c2})");
            assert_eq!(v.cl, c1_sq <= 2 * c2, "cl at ({c1_sq},{c2})");
        }
    }

    #[test]
    fn threefold_verdicts_match_ratio_thresholds() {
        // With rho = -2 c1c2 / c1^3 and c1^3 > 0: CS ⟺ rho < 0,
        // NCS ⟺ rho <= -3/4, CL ⟺ rho <= -1.
        let mut state = 0x1234567890abcdefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..120 {
            let c1_cube = 1 + (next() % 80) as i64;
            let c1_c2 = (next() % 101) as i64 - 50;
            let h = threefold(&r(c1_cube, 1), &r(c1_c2, 1)).unwrap();
            let v = classify_strip(&h, 3).unwrap();
            let rho = r(-2 * c1_c2, c1_cube);
            assert_eq!(v.cs, rho < Rational::zero(), "cs at ({c1_cube},{c1_c2})");
            assert_eq!(v.ncs, rho <= r(-3, 4), "ncs at ({c1_cube},{c1_c2})");
            assert_eq!(v.cl, rho <= r(-1, 1), "cl at ({c1_cube},{c1_c2})");
        }
    }

    #[test]
    fn del_pezzo_scan() {
        let outcome = scan(&ScanFamily::DelPezzo).unwrap();
        assert_eq!(outcome.summary.total, 9);
        assert_eq!(outcome.summary.ncs, 9);
        for record in &outcome.records {
            let ChernData::Surface { c1_sq, .. } = &record.data else {
                panic!("del Pezzo scan must produce surfaces");
            };
            let expect_cl = *c1_sq <= r(8, 1);
            assert_eq!(record.verdict.cl, expect_cl, "c1^2 = {c1_sq}");
        }
    }

    #[test]
    fn fano_threefold_scan() {
        let outcome = scan(&ScanFamily::FanoThreefold { c1_cube: 2..=64 }).unwrap();
        assert_eq!(outcome.summary.total, 63);
        assert_eq!(outcome.summary.ncs, 63);
        for (record, c1_cube) in outcome.records.iter().zip(2i64..) {
            assert_eq!(record.verdict.cl, c1_cube <= 48, "c1^3 = {c1_cube}");
        }
    }

    #[test]
    fn surface_scan_flags_cs_failures() {
        let outcome = scan(&ScanFamily::Surface {
            c1_sq: 1..=2,
            c2: -3..=0,
        })
        .unwrap();
        for record in &outcome.records {
            let ChernData::Surface { c1_sq, c2 } = &record.data else {
                unreachable!()
            };
            assert_eq!(record.verdict.cs, c1_sq + c2 > Rational::zero());
        }
        let failing = outcome.records.iter().find(|rec| {
            rec.data
                == ChernData::Surface {
                    c1_sq: r(1, 1),
                    c2: r(-2, 1),
                }
        });
        assert!(!failing.unwrap().verdict.cs);
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn empty_scan_range_errors() {
        assert!(matches!(
            scan(&ScanFamily::FanoThreefold { c1_cube: 5..=2 }),
            Err(Error::EmptyScanRange)
        ));
    }
}
