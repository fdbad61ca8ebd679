//! Exact localization of complex roots relative to vertical lines.
//!
//! Every verdict here is computed with integer sign arithmetic. For a line
//! `Re z = a` the polynomial is recentered so the line becomes the imaginary
//! axis; the on-axis roots are captured, with multiplicity, by
//! `gcd(r(z), r(-z))` and deflated out. The deflated remainder has no axis
//! roots and no symmetric root pairs, so its left/right half-plane counts
//! follow exactly from a Cauchy index evaluated by a generalized Sturm chain
//! — the Routh–Hurwitz count without the textbook epsilon tricks.
//!
//! The approximate root finder at the bottom exists for display only; no
//! flag in this module ever depends on it.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ratpoly::{
    primitive_integer_coeffs, sturm_chain_pair, variations, Interval, Rational,
    RationalPolynomial, SignPoint,
};
use crate::{Error, Result};

/// Exact decomposition of the roots of a polynomial relative to the
/// vertical line `Re z = line`. Counts carry multiplicity and satisfy
/// `left + on + right = degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    pub line: Rational,
    pub left: usize,
    pub on: usize,
    pub right: usize,
}

/// One approximate complex root with its residual tag, for display.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxRoot {
    pub value: Complex64,
    /// Exact `|p(value)|` of the monic normalization, divided by
    /// `sum |c_k| |value|^k`; small values certify a nearby true root.
    pub residual: f64,
}

/// Exact strip verdicts for a polynomial in dimension `dim`.
///
/// `cs` is the open strip `-1 < Re z < 0`, `ncs` the closed strip
/// `[-1 + 1/(dim+1), -1/(dim+1)]`, `cl` the line `Re z = -1/2`. The flags
/// derive exclusively from the exact reports; `approx_roots` is display
/// data.
#[derive(Clone, Debug)]
pub struct StripVerdict {
    pub cs: bool,
    pub ncs: bool,
    pub cl: bool,
    pub dim: u32,
    /// Reports at the abscissas -1, 0, -1 + 1/(dim+1), -1/(dim+1), -1/2.
    pub reports: Vec<RootReport>,
    pub approx_roots: Vec<ApproxRoot>,
}

/// Split the roots of `p` (with multiplicity) by the line `Re z = a`.
pub fn line_split(p: &RationalPolynomial, a: &Rational) -> Result<RootReport> {
    let Some(total_degree) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    // Recenter: roots of r = roots of p shifted by -a, line becomes Re = 0.
    let r = p.shift(a);
    if total_degree == 0 {
        return Ok(RootReport {
            line: a.clone(),
            left: 0,
            on: 0,
            right: 0,
        });
    }
    let mirrored = r.compose_neg();
    // d holds every imaginary-axis root of r with its full multiplicity;
    // its remaining roots come in (w, -w) pairs with one root per half-plane.
    let d = r.gcd(&mirrored)?;
    let h = r.div_exact(&d);

    let axis_zero_mult = d.coeffs().iter().take_while(|c| c.is_zero()).count();
    let deflated = RationalPolynomial::new(d.coeffs()[axis_zero_mult..].to_vec());
    let even_part = even_substitution(&deflated);
    let on = axis_zero_mult + 2 * negative_real_roots_with_multiplicity(&even_part)?;
    let d_degree = d.degree().expect("gcd of nonzero polynomials is nonzero");
    assert!(on <= d_degree, "axis root count exceeds symmetric factor");
    let paired = d_degree - on;
    assert!(paired % 2 == 0, "off-axis roots of the symmetric factor pair up");

    let (in_left, in_right) = half_plane_counts(&h);
    let report = RootReport {
        line: a.clone(),
        left: in_left + paired / 2,
        on,
        right: in_right + paired / 2,
    };
    assert_eq!(
        report.left + report.on + report.right,
        total_degree,
        "root counts must exhaust the degree"
    );
    Ok(report)
}

/// True iff every root of `p` satisfies `Re z < 0` strictly.
pub fn hurwitz_stable(p: &RationalPolynomial) -> Result<bool> {
    let report = line_split(p, &Rational::zero())?;
    Ok(report.on == 0 && report.right == 0)
}

/// Classify the roots of `p` against the strips for dimension `dim`.
pub fn classify_strip(p: &RationalPolynomial, dim: u32) -> Result<StripVerdict> {
    if dim < 1 {
        return Err(Error::InvalidDimension);
    }
    let Some(degree) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let minus_one = -Rational::one();
    let zero = Rational::zero();
    let inv = Rational::new(BigInt::one(), BigInt::from(dim + 1));
    let narrow_low = &minus_one + &inv;
    let narrow_high = -&inv;
    let half = crate::ratpoly::rational(-1, 2);

    let abscissas = [&minus_one, &zero, &narrow_low, &narrow_high, &half];
    let mut reports = Vec::with_capacity(abscissas.len());
    for a in abscissas {
        reports.push(line_split(p, a)?);
    }

    let cs =
        reports[0].left == 0 && reports[0].on == 0 && reports[1].on == 0 && reports[1].right == 0;
    let ncs = reports[2].left == 0 && reports[3].right == 0;
    let cl = reports[4].on == degree;

    let approx_roots = aberth(p, DISPLAY_TOLERANCE, ABERTH_ITERATION_CAP).roots;
    Ok(StripVerdict {
        cs,
        ncs,
        cl,
        dim,
        reports,
        approx_roots,
    })
}

/// Iteration cap for the simultaneous root iteration.
pub const ABERTH_ITERATION_CAP: u32 = 1000;

const DISPLAY_TOLERANCE: f64 = 1e-10;

/// One floating-point approximation per root of `p`, with multiplicity,
/// each carrying an exact-residual tag. Errors if the scaled residuals do
/// not all drop below `tol` within the iteration cap.
pub fn approx_roots(p: &RationalPolynomial, tol: &Rational) -> Result<Vec<ApproxRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !tol.is_positive() {
        return Err(Error::InvalidTolerance);
    }
    let tol = tol.to_f64().unwrap_or(0.0);
    let outcome = aberth(p, tol, ABERTH_ITERATION_CAP);
    if outcome.converged {
        Ok(outcome.roots)
    } else {
        Err(Error::NoConvergence {
            cap: ABERTH_ITERATION_CAP,
        })
    }
}

// ---------------------------------------------------------------------------
// exact machinery

/// For an even polynomial `q(z) = D(z^2)`, return `D`. Panics if an odd
/// coefficient is nonzero, which cannot happen for the symmetric factors
/// produced by `line_split`.
fn even_substitution(q: &RationalPolynomial) -> RationalPolynomial {
    let mut even = Vec::with_capacity(q.coeffs().len() / 2 + 1);
    for (k, c) in q.coeffs().iter().enumerate() {
        if k % 2 == 0 {
            even.push(c.clone());
        } else {
            assert!(c.is_zero(), "symmetric factor must be even after z^m removal");
        }
    }
    RationalPolynomial::new(even)
}

/// Number of negative real roots counted with multiplicity: each pass
/// counts the distinct roots still present, then peels one multiplicity
/// layer with gcd(g, g').
fn negative_real_roots_with_multiplicity(p: &RationalPolynomial) -> Result<usize> {
    let mut layer = p.clone();
    let mut total = 0;
    while layer.degree().is_some_and(|d| d >= 1) {
        let bound = cauchy_root_bound(&layer);
        let range = Interval::open(-bound, Rational::zero())?;
        total += layer.count_real_roots_in(&range)?;
        layer = layer.gcd(&layer.derivative())?;
    }
    Ok(total)
}

/// Every root of `p` has modulus below `1 + max |c_k / c_n|`.
fn cauchy_root_bound(p: &RationalPolynomial) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let mut max_ratio = Rational::zero();
    if let Some(degree) = p.degree() {
        for c in &p.coeffs()[..degree] {
            let ratio = c.abs() / &lead;
            if ratio > max_ratio {
                max_ratio = ratio;
            }
        }
    }
    max_ratio + Rational::one()
}

/// Half-plane root counts (left, right) of a polynomial with no roots on
/// the imaginary axis and no (w, -w) pairs.
///
/// Writing `h(iy) = P(y) + i Q(y)`, the winding of `h(iy)` across the whole
/// line equals `pi * (left - right)`; it is recovered exactly as a boundary
/// term minus the Cauchy index of `Q/P`, and the index is the variation
/// difference of the generalized Sturm chain seeded with `(P, Q)`.
fn half_plane_counts(h: &RationalPolynomial) -> (usize, usize) {
    let degree = h.degree().expect("deflated polynomial is nonzero");
    if degree == 0 {
        return (0, 0);
    }
    let (re_part, im_part) = imaginary_axis_parts(h);
    let p_int = strip_zeros(primitive_integer_coeffs(&re_part));
    let q_int = strip_zeros(primitive_integer_coeffs(&im_part));
    assert!(
        !p_int.is_empty() && !q_int.is_empty(),
        "axis-root-free polynomial has nonzero real and imaginary parts"
    );

    let boundary = boundary_term(&p_int, &q_int);
    let chain = sturm_chain_pair(p_int, q_int);
    let index = variations(&chain, SignPoint::NegInfinity) as i64
        - variations(&chain, SignPoint::PosInfinity) as i64;
    let imbalance = boundary - index; // left - right
    let total = degree as i64;
    assert!(
        (total + imbalance) % 2 == 0 && imbalance.abs() <= total,
        "half-plane imbalance must match the degree parity"
    );
    let left = ((total + imbalance) / 2) as usize;
    (left, degree - left)
}

/// Real and imaginary parts of `h(iy)` as real polynomials in `y`.
fn imaginary_axis_parts(h: &RationalPolynomial) -> (RationalPolynomial, RationalPolynomial) {
    let n = h.coeffs().len();
    let mut re = vec![Rational::zero(); n];
    let mut im = vec![Rational::zero(); n];
    for (k, c) in h.coeffs().iter().enumerate() {
        match k % 4 {
            0 => re[k] = c.clone(),
            1 => im[k] = c.clone(),
            2 => re[k] = -c,
            _ => im[k] = -c,
        }
    }
    (RationalPolynomial::new(re), RationalPolynomial::new(im))
}

fn strip_zeros(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Contribution of the arctangent limits at both infinities, in units of pi.
fn boundary_term(p_int: &[BigInt], q_int: &[BigInt]) -> i64 {
    let dp = p_int.len() - 1;
    let dq = q_int.len() - 1;
    if dq > dp && (dq - dp) % 2 == 1 {
        let sp = if p_int[dp].is_negative() { -1i64 } else { 1 };
        let sq = if q_int[dq].is_negative() { -1i64 } else { 1 };
        sp * sq
    } else {
        0
    }
}

// ---------------------------------------------------------------------------
// display-only approximate roots (Aberth simultaneous iteration)

struct AberthOutcome {
    roots: Vec<ApproxRoot>,
    converged: bool,
}

/// Simultaneous iteration for all roots at once, seeded on a circle of
/// radius `1 + max |c_k / c_n|`. Exact roots at the origin are deflated
/// first and reported with zero residual.
fn aberth(p: &RationalPolynomial, tol: f64, cap: u32) -> AberthOutcome {
    let degree = p.degree().expect("nonzero polynomial");
    let mut roots = Vec::with_capacity(degree);
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    for _ in 0..zero_mult {
        roots.push(ApproxRoot {
            value: Complex64::new(0.0, 0.0),
            residual: 0.0,
        });
    }
    let reduced = RationalPolynomial::new(p.coeffs()[zero_mult..].to_vec());
    let red_degree = degree - zero_mult;
    if red_degree == 0 {
        return AberthOutcome {
            roots,
            converged: true,
        };
    }

    // Monic normalization keeps the f64 conversion well scaled.
    let lead = reduced.leading().expect("nonzero").clone();
    let monic = reduced.scale(&lead.recip());
    let coeffs: Vec<f64> = monic
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(0.0))
        .collect();
    let derivative: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();

    let radius = 1.0
        + coeffs[..red_degree]
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..red_degree)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / red_degree as f64 + 0.37;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let eval = |cs: &[f64], x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in cs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let scale_at = |x: Complex64| -> f64 {
        let mut scale = 0.0;
        let mut pow = 1.0;
        let m = x.norm();
        for c in &coeffs {
            scale += c.abs() * pow;
            pow *= m;
        }
        scale.max(f64::MIN_POSITIVE)
    };

    let mut converged = false;
    for _ in 0..cap {
        let worst = z
            .iter()
            .map(|zi| eval(&coeffs, *zi).norm() / scale_at(*zi))
            .fold(0.0f64, f64::max);
        if worst <= tol {
            converged = true;
            break;
        }
        for i in 0..red_degree {
            let value = eval(&coeffs, z[i]);
            let slope = eval(&derivative, z[i]);
            let newton = if slope.norm() > 0.0 {
                value / slope
            } else {
                Complex64::new(f64::EPSILON, f64::EPSILON)
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - zj;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 0.0 { newton / denom } else { newton };
            z[i] -= step;
        }
    }

    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    for zi in z {
        let residual = exact_scaled_residual(&monic, zi, scale_at(zi));
        roots.push(ApproxRoot {
            value: zi,
            residual,
        });
    }
    AberthOutcome { roots, converged }
}

/// `|p(x)|` evaluated in exact rational complex arithmetic (the f64 parts of
/// `x` convert exactly), then scaled for display.
fn exact_scaled_residual(p: &RationalPolynomial, x: Complex64, scale: f64) -> f64 {
    let (Some(re), Some(im)) = (BigRational::from_float(x.re), BigRational::from_float(x.im))
    else {
        return f64::INFINITY;
    };
    let mut acc_re = Rational::zero();
    let mut acc_im = Rational::zero();
    for c in p.coeffs().iter().rev() {
        let next_re = &(&acc_re * &re) - &(&acc_im * &im) + c;
        let next_im = &acc_re * &im + &acc_im * &re;
        acc_re = next_re;
        acc_im = next_im;
    }
    let norm_sq = &acc_re * &acc_re + &acc_im * &acc_im;
    norm_sq.to_f64().map_or(f64::INFINITY, |v| v.sqrt() / scale)
}
