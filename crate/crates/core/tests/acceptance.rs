//! Acceptance suite: one test per release criterion, every assertion
//! exact (integer/rational equality or exact root counts), with the
//! runtime budget checked on each. Run with `--nocapture` to see the
//! per-criterion PASS lines.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::time::{Duration, Instant};

use canstrip::ehrhart::load_catalog;
use canstrip::embedded::{
    lemma_property_suite, restricted_hilbert, verify_canonical_line, SuiteConfig,
};
use canstrip::hilbert::{grassmannian, projective, scan, threefold, GrassmannianSpec, ScanFamily};
use canstrip::ratpoly::{rational, Rational, RationalPolynomial};
use canstrip::rootloc::line_split;
use canstrip::hilbert::ChernData;

fn r(n: i64, d: i64) -> Rational {
    rational(n, d)
}

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("[acceptance] {criterion}: PASS ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

/// Independent oracle: dimension of the GL(N) representation with
/// rectangular highest weight (t,...,t,0,...,0) (k copies), by the Weyl
/// dimension formula. The Grassmannian series value at m is the dimension
/// at t = m*N.
fn weyl_rectangular_dim(k: u32, n: u32, t: u64) -> BigInt {
    let lambda = |i: u32| -> i64 { if i < k { t as i64 } else { 0 } };
    let mut value = Rational::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let numer = lambda(i) - lambda(j) + i64::from(j) - i64::from(i);
            value *= r(numer, i64::from(j) - i64::from(i));
        }
    }
    assert!(value.is_integer());
    value.to_integer()
}

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
fn acceptance_01_grassmannian_oracle_match() {
    let started = Instant::now();
    let g24 = grassmannian(&GrassmannianSpec::new(2, 4).unwrap());
    assert_eq!(g24.evaluate(&Rational::zero()), Rational::one());
    assert_eq!(g24.evaluate(&Rational::one()), r(105, 1));
    assert_eq!(g24.degree(), Some(4));
    assert_eq!(root_multiplicity(&g24, &r(-1, 4)), 1);
    assert_eq!(root_multiplicity(&g24, &r(-1, 2)), 2);
    assert_eq!(root_multiplicity(&g24, &r(-3, 4)), 1);
    for m in 0..=6u64 {
        let expected = weyl_rectangular_dim(2, 4, 4 * m);
        assert_eq!(
            g24.evaluate(&r(m as i64, 1)),
            Rational::from_integer(expected),
            "G(2,4) at m={m}"
        );
    }
    let g25 = grassmannian(&GrassmannianSpec::new(2, 5).unwrap());
    for m in 0..=7u64 {
        let expected = weyl_rectangular_dim(2, 5, 5 * m);
        assert_eq!(
            g25.evaluate(&r(m as i64, 1)),
            Rational::from_integer(expected),
            "G(2,5) at m={m}"
        );
    }
    finish("1 Grassmannian oracle match", started, Duration::from_secs(1));
}

#[test]
fn acceptance_02_threefold_projective_cross_check() {
    let started = Instant::now();
    let from_chern = threefold(&r(64, 1), &r(24, 1)).unwrap();
    let from_product = projective(3).unwrap();
    assert_eq!(from_chern, from_product);
    for i in 1..=3i64 {
        assert_eq!(root_multiplicity(&from_chern, &r(-i, 4)), 1, "root -{i}/4");
    }
    finish(
        "2 threefold/projective cross-check",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn acceptance_03_del_pezzo_scan() {
    let started = Instant::now();
    let outcome = scan(&ScanFamily::DelPezzo).unwrap();
    assert_eq!(outcome.summary.total, 9);
    assert_eq!(outcome.summary.ncs, 9, "NCS must hold for all del Pezzos");
    let mut extremal = Vec::new();
    for record in &outcome.records {
        let ChernData::Surface { c1_sq, c2 } = &record.data else {
            panic!("del Pezzo scan must emit surfaces");
        };
        // narrowed-strip margin 3 - 6 c2 / c1^2, maximal exactly at c1^2 = 9
        let margin = r(3, 1) - r(6, 1) * c2 / c1_sq;
        extremal.push((c1_sq.clone(), margin));
        assert_eq!(record.verdict.cl, *c1_sq <= r(8, 1), "CL boundary at 8");
    }
    let max = extremal.iter().map(|(_, m)| m).max().unwrap().clone();
    assert_eq!(max, Rational::one());
    let attained: Vec<_> = extremal.iter().filter(|(_, m)| *m == max).collect();
    assert_eq!(attained.len(), 1);
    assert_eq!(attained[0].0, r(9, 1));
    finish("3 del Pezzo scan", started, Duration::from_secs(1));
}

#[test]
fn acceptance_04_fano_threefold_scan() {
    let started = Instant::now();
    let outcome = scan(&ScanFamily::FanoThreefold { c1_cube: 2..=64 }).unwrap();
    assert_eq!(outcome.summary.total, 63);
    assert_eq!(outcome.summary.ncs, 63, "NCS must hold across the family");
    let mut ratios = Vec::new();
    for record in &outcome.records {
        let ChernData::Threefold { c1_cube, c1_c2 } = &record.data else {
            panic!("threefold scan must emit threefolds");
        };
        let ratio = r(-2, 1) * c1_c2 / c1_cube;
        ratios.push((c1_cube.clone(), ratio));
        assert_eq!(record.verdict.cl, *c1_cube <= r(48, 1), "CL boundary at 48");
    }
    let max = ratios.iter().map(|(_, m)| m).max().unwrap().clone();
    assert_eq!(max, r(-3, 4));
    let attained: Vec<_> = ratios.iter().filter(|(_, m)| *m == max).collect();
    assert_eq!(attained.len(), 1);
    assert_eq!(attained[0].0, r(64, 1));
    finish("4 Fano threefold scan", started, Duration::from_secs(1));
}

#[test]
fn acceptance_05_restriction_line_suite() {
    let started = Instant::now();
    let config = SuiteConfig {
        cases: 200,
        max_degree: 10,
        s_values: vec![r(1, 1), r(3, 2), r(2, 1), r(3, 1), r(4, 1)],
        seed: 7,
    };
    let summary = lemma_property_suite(&config).unwrap();
    assert_eq!(summary.checks, 1000);
    assert!(summary.checks >= 800);
    assert_eq!(summary.passes, summary.checks);
    assert!(
        summary.failures.is_empty(),
        "failing seeds: {:?}",
        summary
            .failures
            .iter()
            .map(|f| (f.case_seed, f.degree))
            .collect::<Vec<_>>()
    );
    finish("5 randomized on-line suite", started, Duration::from_secs(60));
}

#[test]
fn acceptance_06_embedded_identities() {
    let started = Instant::now();
    let elliptic = restricted_hilbert(&projective(2).unwrap(), &Rational::one()).unwrap();
    assert_eq!(
        elliptic.restricted(),
        &RationalPolynomial::new(vec![r(0, 1), r(9, 1)])
    );
    let quartic = restricted_hilbert(&projective(3).unwrap(), &Rational::one()).unwrap();
    assert_eq!(
        quartic.restricted(),
        &RationalPolynomial::new(vec![r(2, 1), r(0, 1), r(32, 1)])
    );
    // roots ±i/4: purely imaginary, verified exactly by the line count
    let report = line_split(quartic.restricted(), &Rational::zero()).unwrap();
    assert_eq!(report.on, 2);
    // and the squared-modulus factor: 32 z^2 + 2 = 32 (z^2 + 1/16)
    assert_eq!(
        quartic.restricted().coeff(0) / quartic.restricted().coeff(2),
        r(1, 16)
    );
    finish("6 embedded identities", started, Duration::from_secs(1));
}

#[test]
fn acceptance_07_grassmannian_sections() {
    let started = Instant::now();
    let ambient = grassmannian(&GrassmannianSpec::new(2, 4).unwrap());
    for m in 1..=3i64 {
        let section = restricted_hilbert(&ambient, &r(m, 1)).unwrap();
        let (on_line, report) = verify_canonical_line(&section);
        assert!(on_line, "G(2,4) section at m={m}");
        assert_eq!(report.line, r(m - 1, 2));
        assert_eq!(report.on, section.restricted().degree().unwrap());
    }
    finish("7 Grassmannian sections", started, Duration::from_secs(1));
}

#[test]
fn acceptance_08_ehrhart_low_dimensions() {
    let started = Instant::now();
    let segment = load_catalog("smooth-dim1").unwrap();
    assert_eq!(segment.len(), 1);
    let line = segment[0].polytope.ehrhart_polynomial().unwrap();
    assert_eq!(
        line.polynomial,
        RationalPolynomial::new(vec![r(1, 1), r(2, 1)])
    );
    assert!(line.central_line);

    let surfaces = load_catalog("smooth-dim2").unwrap();
    assert_eq!(surfaces.len(), 5);
    for entry in &surfaces {
        let result = entry.polytope.ehrhart_polynomial().unwrap();
        assert!(result.central_line, "{}", entry.name);
        match entry.name.as_str() {
            "P2" => assert_eq!(
                result.polynomial,
                RationalPolynomial::new(vec![r(1, 1), r(3, 2), r(3, 2)])
            ),
            "dP3" => assert_eq!(
                result.polynomial,
                RationalPolynomial::new(vec![r(1, 1), r(3, 1), r(3, 1)])
            ),
            _ => {}
        }
    }
    finish("8 Ehrhart dims 1-2", started, Duration::from_secs(5));
}

#[test]
fn acceptance_09_ehrhart_threefolds() {
    let started = Instant::now();
    let catalog = load_catalog("smooth-dim3").unwrap();
    assert_eq!(catalog.len(), 18);
    for entry in &catalog {
        let p = &entry.polytope;
        assert!(p.is_reflexive(), "{}", entry.name);
        assert!(p.is_smooth_fan_polytope(), "{}", entry.name);
        let result = p.ehrhart_polynomial().unwrap();
        assert_eq!(
            result.central_report.on, 3,
            "{}: all three zeros must sit on Re z = -1/2",
            entry.name
        );
        assert!(result.central_line, "{}", entry.name);
    }
    finish("9 Ehrhart threefolds", started, Duration::from_secs(60));
}

#[test]
fn acceptance_10_reciprocity_and_self_verification() {
    let started = Instant::now();
    for name in ["smooth-dim1", "smooth-dim2", "smooth-dim3"] {
        for entry in load_catalog(name).unwrap() {
            let p = &entry.polytope;
            assert!(p.is_reflexive(), "{}", entry.name);
            // ehrhart_polynomial re-verifies the interpolation against
            // fresh counts at t = d+1 and d+2; an Err here is a failure.
            let result = p.ehrhart_polynomial().unwrap();
            let l = &result.polynomial;
            let lhs = l.compose_neg();
            let mut rhs = l.shift(&r(-1, 1));
            if p.dim() % 2 == 1 {
                rhs = -&rhs;
            }
            assert_eq!(lhs, rhs, "{}: L(-t) = (-1)^d L(t-1)", entry.name);
        }
    }
    finish(
        "10 reciprocity + interpolation self-check",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn acceptance_11_root_location_oracle() {
    let started = Instant::now();
    // Deterministic xorshift stream; 500 constellations assembled from
    // known roots, including lines that pass exactly through roots.
    let mut state = 0x0123456789abcdefu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for case in 0..500 {
        let mut real_roots: Vec<(Rational, usize)> = Vec::new();
        let mut pairs: Vec<(Rational, Rational, usize)> = Vec::new();
        let n_real = (next() % 3) as usize;
        let n_pairs = 1 + (next() % 2) as usize;
        for _ in 0..n_real {
            let num = (next() % 17) as i64 - 8;
            let den = 1 + (next() % 5) as i64;
            let mult = 1 + (next() % 2) as usize;
            real_roots.push((r(num, den), mult));
        }
        for _ in 0..n_pairs {
            let re_num = (next() % 17) as i64 - 8;
            let re_den = 1 + (next() % 5) as i64;
            let im_num = 1 + (next() % 8) as i64;
            let im_den = 1 + (next() % 4) as i64;
            let mult = 1 + (next() % 2) as usize;
            pairs.push((r(re_num, re_den), r(im_num, im_den), mult));
        }

        let mut p = RationalPolynomial::one();
        for (root, mult) in &real_roots {
            let factor = RationalPolynomial::new(vec![-root, Rational::one()]);
            for _ in 0..*mult {
                p = &p * &factor;
            }
        }
        for (re, im, mult) in &pairs {
            let factor = RationalPolynomial::new(vec![
                re * re + im * im,
                r(-2, 1) * re,
                Rational::one(),
            ]);
            for _ in 0..*mult {
                p = &p * &factor;
            }
        }

        // Test lines: fixed abscissas plus every abscissa that carries a
        // root (boundary-exact cases).
        let mut lines = vec![r(0, 1), r(-1, 2)];
        lines.extend(real_roots.iter().map(|(root, _)| root.clone()));
        lines.extend(pairs.iter().map(|(re, _, _)| re.clone()));
        for line in &lines {
            let report = line_split(&p, line).unwrap();
            let mut left = 0;
            let mut on = 0;
            let mut right = 0;
            for (root, mult) in &real_roots {
                match root.cmp(line) {
                    std::cmp::Ordering::Less => left += mult,
                    std::cmp::Ordering::Equal => on += mult,
                    std::cmp::Ordering::Greater => right += mult,
                }
            }
            for (re, _, mult) in &pairs {
                match re.cmp(line) {
                    std::cmp::Ordering::Less => left += 2 * mult,
                    std::cmp::Ordering::Equal => on += 2 * mult,
                    std::cmp::Ordering::Greater => right += 2 * mult,
                }
            }
            assert_eq!(
                (report.left, report.on, report.right),
                (left, on, right),
                "case {case} at line {line}"
            );
        }
    }
    finish("11 root-location oracle", started, Duration::from_secs(30));
}
