//! Lattice polytopes and exact Ehrhart polynomials.
//!
//! Vertex sets are converted to facet inequalities by exact enumeration of
//! vertex subsets, dilations are counted by a plain box scan with
//! half-space tests, and the Ehrhart polynomial comes from Lagrange
//! interpolation through `t = 0..d`, re-verified against fresh counts at
//! `d+1` and `d+2`. Reflexivity and fan smoothness are decided by integer
//! determinants. Everything feeds the central-line verdict at
//! `Re z = -1/2`.
//!
//! The brute-force conversions cost `O(#vertices choose d)` hyperplane
//! solves and `O(volume)` point tests per dilation, which is cheap for the
//! catalog scale this module targets (d <= 5, coordinates within a few
//! units); enumeration is capped at 10^7 subsets with a hard error.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Deserialize;
use std::path::Path;

use crate::ratpoly::{rational, Rational, RationalPolynomial};
use crate::rootloc::{line_split, RootReport};
use crate::{Error, Result};

/// A full-dimensional lattice polytope given by its vertices.
///
/// Construction validates that the listed points are pairwise distinct,
/// affinely span the space, and are each genuine vertices of the convex
/// hull; the facet representation is derived once and cached.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: FacetRep,
}

/// One facet inequality `normal · x <= offset` with a primitive outward
/// normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

/// Half-space representation: `x` lies in the polytope iff every facet
/// inequality holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetRep {
    pub facets: Vec<Facet>,
}

/// Exact Ehrhart data: the interpolated polynomial, the counts that
/// produced and verified it, and the central-line verdict.
#[derive(Clone, Debug)]
pub struct EhrhartResult {
    pub polynomial: RationalPolynomial,
    /// `(t, |tP ∩ Z^d|)` for `t = 0..d+2`.
    pub counts: Vec<(u64, u64)>,
    /// True iff all roots lie exactly on `Re z = -1/2`.
    pub central_line: bool,
    pub central_report: RootReport,
}

/// Which conjecture an instance probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureTarget {
    /// Smooth reflexive fan polytope in dimension 1..=5.
    SmoothToricFano { dim: usize },
    /// Reflexive 3-polytope whose boundary lattice points are exactly its
    /// vertices.
    TerminalGorensteinThreefold,
}

/// Bundle returned by [`LatticePolytope::conjecture_verdict`].
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub reflexive: bool,
    pub smooth: bool,
    /// Boundary lattice points coincide with the vertex set.
    pub boundary_is_vertices: bool,
    pub probes: Vec<ConjectureTarget>,
    pub ehrhart: EhrhartResult,
}

/// A named catalog member.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub polytope: LatticePolytope,
}

const FACET_SUBSET_CAP: u128 = 10_000_000;

impl LatticePolytope {
    /// Validate and build. Errors on inconsistent dimensions, duplicate or
    /// non-vertex points, and degenerate (not full-dimensional) input.
    pub fn new(dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::PolytopeFormat(
                "dimension must be at least 1".into(),
            ));
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        if vertices.len() < dim + 1 {
            return Err(Error::TooFewVertices);
        }
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                if vertices[i] == vertices[j] {
                    return Err(Error::DuplicateVertex);
                }
            }
        }
        let differences: Vec<Vec<i64>> = vertices[1..]
            .iter()
            .map(|v| sub_points(v, &vertices[0]))
            .collect();
        if matrix_rank(&differences) < dim {
            return Err(Error::NotFullDimensional);
        }

        let facets = enumerate_facets(dim, &vertices)?;
        // Each listed point must be a true vertex: the facets active at it
        // have to pin down a single point, i.e. their normals span R^d.
        for v in &vertices {
            let active: Vec<Vec<i64>> = facets
                .facets
                .iter()
                .filter(|f| dot(&f.normal, v) == i128::from(f.offset))
                .map(|f| f.normal.clone())
                .collect();
            if matrix_rank(&active) < dim {
                return Err(Error::NotAVertex(v.clone()));
            }
        }
        Ok(Self {
            dim,
            vertices,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// The derived half-space representation.
    pub fn facet_representation(&self) -> &FacetRep {
        &self.facets
    }

    /// `|tP ∩ Z^d|` by scanning the bounding box of the dilate and testing
    /// every facet inequality.
    pub fn count_points(&self, t: u64) -> u64 {
        self.count_with(t, |lhs, rhs| lhs <= rhs)
    }

    /// Lattice points strictly inside the dilate `tP`.
    pub fn count_interior_points(&self, t: u64) -> u64 {
        self.count_with(t, |lhs, rhs| lhs < rhs)
    }

    fn count_with(&self, t: u64, admit: impl Fn(i128, i128) -> bool) -> u64 {
        let t = i128::from(t);
        let mut lo = vec![0i64; self.dim];
        let mut hi = vec![0i64; self.dim];
        for j in 0..self.dim {
            let min = self.vertices.iter().map(|v| v[j]).min().expect("vertices");
            let max = self.vertices.iter().map(|v| v[j]).max().expect("vertices");
            lo[j] = i64::try_from(t * i128::from(min)).expect("dilation bound fits i64");
            hi[j] = i64::try_from(t * i128::from(max)).expect("dilation bound fits i64");
        }
        let mut count = 0u64;
        let mut x = lo.clone();
        'scan: loop {
            let inside = self
                .facets
                .facets
                .iter()
                .all(|f| admit(dot(&f.normal, &x), t * i128::from(f.offset)));
            if inside {
                count += 1;
            }
            let mut j = 0;
            loop {
                if j == self.dim {
                    break 'scan;
                }
                if x[j] < hi[j] {
                    x[j] += 1;
                    break;
                }
                x[j] = lo[j];
                j += 1;
            }
        }
        count
    }

    /// Interpolate the Ehrhart polynomial through `t = 0..d` and verify it
    /// against fresh counts at `d+1` and `d+2`; a mismatch means a counting
    /// bug, not bad input.
    pub fn ehrhart_polynomial(&self) -> Result<EhrhartResult> {
        let d = self.dim as u64;
        let counts: Vec<(u64, u64)> = (0..=d + 2).map(|t| (t, self.count_points(t))).collect();
        let polynomial = lagrange_interpolate(&counts[..=self.dim]);
        for &(t, count) in &counts[self.dim + 1..] {
            let predicted = polynomial.evaluate(&rational(t as i64, 1));
            if predicted != Rational::from_integer(BigInt::from(count)) {
                return Err(Error::EhrhartVerification { t });
            }
        }
        assert_eq!(
            polynomial.degree(),
            Some(self.dim),
            "full-dimensional polytopes have volume-degree Ehrhart polynomials"
        );
        let central_report = line_split(&polynomial, &rational(-1, 2))?;
        let central_line = central_report.on == self.dim;
        Ok(EhrhartResult {
            polynomial,
            counts,
            central_line,
            central_report,
        })
    }

    /// True iff the origin is strictly interior and every facet sits at
    /// lattice distance one (all primitive offsets equal 1).
    pub fn is_reflexive(&self) -> bool {
        self.facets.facets.iter().all(|f| f.offset == 1)
    }

    /// True iff every facet is a simplex on exactly `dim` vertices whose
    /// matrix has determinant ±1, i.e. the fan over the faces is
    /// unimodular.
    pub fn is_smooth_fan_polytope(&self) -> bool {
        self.facets.facets.iter().all(|f| {
            let on_facet: Vec<&Vec<i64>> = self
                .vertices
                .iter()
                .filter(|v| dot(&f.normal, v) == i128::from(f.offset))
                .collect();
            if on_facet.len() != self.dim {
                return false;
            }
            let matrix: Vec<Vec<BigInt>> = on_facet
                .iter()
                .map(|v| v.iter().map(|&c| BigInt::from(c)).collect())
                .collect();
            determinant(&matrix).abs() == BigInt::one()
        })
    }

    /// Full verdict bundle: structural flags, which conjecture the
    /// instance probes, and the exact Ehrhart central-line result.
    pub fn conjecture_verdict(&self) -> Result<ConjectureReport> {
        let reflexive = self.is_reflexive();
        let smooth = self.is_smooth_fan_polytope();
        let boundary_points = self.count_points(1) - self.count_interior_points(1);
        let boundary_is_vertices = boundary_points == self.vertices.len() as u64;
        let mut probes = Vec::new();
        if reflexive && smooth && (1..=5).contains(&self.dim) {
            probes.push(ConjectureTarget::SmoothToricFano { dim: self.dim });
        }
        if reflexive && self.dim == 3 && boundary_is_vertices {
            probes.push(ConjectureTarget::TerminalGorensteinThreefold);
        }
        Ok(ConjectureReport {
            reflexive,
            smooth,
            boundary_is_vertices,
            probes,
            ehrhart: self.ehrhart_polynomial()?,
        })
    }
}

/// Exact V-to-H conversion: every hyperplane through `dim` affinely
/// independent vertices that supports the whole vertex set is a facet.
fn enumerate_facets(dim: usize, vertices: &[Vec<i64>]) -> Result<FacetRep> {
    let subsets = binomial_u128(vertices.len() as u128, dim as u128);
    if subsets > FACET_SUBSET_CAP {
        return Err(Error::FacetEnumerationTooLarge(subsets));
    }
    let mut facets: Vec<Facet> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut indices: Vec<usize> = (0..dim).collect();
    loop {
        if let Some(facet) = facet_through(dim, vertices, &indices)? {
            if seen.insert((facet.normal.clone(), facet.offset)) {
                facets.push(facet);
            }
        }
        // next combination in lexicographic order
        let mut i = dim;
        loop {
            if i == 0 {
                facets.sort_by(|a, b| (&a.normal, a.offset).cmp(&(&b.normal, b.offset)));
                return Ok(FacetRep { facets });
            }
            i -= 1;
            if indices[i] != i + vertices.len() - dim {
                indices[i] += 1;
                for j in i + 1..dim {
                    indices[j] = indices[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The supporting facet through the chosen vertex subset, if there is one.
fn facet_through(dim: usize, vertices: &[Vec<i64>], indices: &[usize]) -> Result<Option<Facet>> {
    let base = &vertices[indices[0]];
    let rows: Vec<Vec<BigInt>> = indices[1..]
        .iter()
        .map(|&i| {
            sub_points(&vertices[i], base)
                .into_iter()
                .map(BigInt::from)
                .collect()
        })
        .collect();
    // Generalized cross product: cofactor expansion yields a normal vector
    // orthogonal to every row; it is zero iff the points are affinely
    // dependent.
    let mut normal: Vec<BigInt> = Vec::with_capacity(dim);
    for j in 0..dim {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut d = determinant(&minor);
        if j % 2 == 1 {
            d = -d;
        }
        normal.push(d);
    }
    if normal.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let offset: BigInt = normal
        .iter()
        .zip(base.iter())
        .map(|(n, &c)| n * BigInt::from(c))
        .sum();

    let mut saw_below = false;
    let mut saw_above = false;
    for v in vertices {
        let value: BigInt = normal
            .iter()
            .zip(v.iter())
            .map(|(n, &c)| n * BigInt::from(c))
            .sum();
        match value.cmp(&offset) {
            std::cmp::Ordering::Less => saw_below = true,
            std::cmp::Ordering::Greater => saw_above = true,
            std::cmp::Ordering::Equal => {}
        }
        if saw_below && saw_above {
            return Ok(None); // not supporting
        }
    }
    let (mut normal, mut offset) = if saw_above {
        (normal.iter().map(|n| -n).collect::<Vec<_>>(), -offset)
    } else {
        (normal, offset)
    };
    // Primitive normalization: the gcd of the normal entries divides the
    // offset because the plane passes through lattice points.
    let mut content = BigInt::zero();
    for n in &normal {
        content = content.gcd(n);
    }
    if !content.is_zero() && !content.is_one() {
        for n in &mut normal {
            *n = &*n / &content;
        }
        offset /= &content;
    }
    let normal_i64: Option<Vec<i64>> = normal.iter().map(ToPrimitive::to_i64).collect();
    let (Some(normal), Some(offset)) = (normal_i64, offset.to_i64()) else {
        return Err(Error::FacetOverflow);
    };
    Ok(Some(Facet { normal, offset }))
}

/// Exact Lagrange interpolation through integer sample points.
fn lagrange_interpolate(points: &[(u64, u64)]) -> RationalPolynomial {
    let mut result = RationalPolynomial::zero();
    for (k, &(xk, yk)) in points.iter().enumerate() {
        let mut basis = RationalPolynomial::one();
        let mut denom = Rational::one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if j != k {
                basis = &basis
                    * &RationalPolynomial::new(vec![rational(-(xj as i64), 1), Rational::one()]);
                denom *= rational(xk as i64 - xj as i64, 1);
            }
        }
        let weight = Rational::from_integer(BigInt::from(yk)) / denom;
        result = &result + &basis.scale(&weight);
    }
    result
}

fn sub_points(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

fn dot(normal: &[i64], point: &[i64]) -> i128 {
    normal
        .iter()
        .zip(point.iter())
        .map(|(&n, &x)| i128::from(n) * i128::from(x))
        .sum()
}

/// Laplace expansion; matrices here are at most 5x5.
fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => {
            let mut total = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * determinant(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Rank of an integer matrix via exact rational elimination.
fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    let cols = mat.first().map_or(0, Vec::len);
    for col in 0..cols {
        let Some(pivot_row) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let pivot = mat[rank][col].clone();
        let pivot_values = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot;
                for (value, pv) in row[col..].iter_mut().zip(&pivot_values[col..]) {
                    *value -= &factor * pv;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut result: u128 = 1;
    for i in 0..k.min(n - k) {
        result = result.saturating_mul(n - i) / (i + 1);
    }
    result
}

// ---------------------------------------------------------------------------
// loading

#[derive(Deserialize)]
struct PolytopeFile {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct CatalogFileEntry {
    name: String,
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

/// Parse a single polytope from its JSON object form
/// `{"dim": d, "vertices": [[..], ..]}`.
pub fn polytope_from_json(text: &str) -> Result<LatticePolytope> {
    let file: PolytopeFile =
        serde_json::from_str(text).map_err(|e| Error::PolytopeFormat(e.to_string()))?;
    LatticePolytope::new(file.dim, file.vertices)
}

/// Load a single polytope file.
pub fn load_polytope(path: impl AsRef<Path>) -> Result<LatticePolytope> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    polytope_from_json(&text)
}

/// Parse a catalog: a JSON list of named polytopes.
pub fn catalog_from_json(text: &str) -> Result<Vec<CatalogEntry>> {
    let entries: Vec<CatalogFileEntry> =
        serde_json::from_str(text).map_err(|e| Error::PolytopeFormat(e.to_string()))?;
    entries
        .into_iter()
        .map(|entry| {
            Ok(CatalogEntry {
                polytope: LatticePolytope::new(entry.dim, entry.vertices)?,
                name: entry.name,
            })
        })
        .collect()
}

/// Load a user-supplied catalog file.
pub fn load_catalog_file(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    catalog_from_json(&text)
}

/// Built-in catalogs of smooth toric Fano fan polytopes:
/// `smooth-dim1` (1 entry), `smooth-dim2` (5), `smooth-dim3` (18).
pub fn load_catalog(name: &str) -> Result<Vec<CatalogEntry>> {
    let text = match name {
        "smooth-dim1" => include_str!("../data/smooth-dim1.json"),
        "smooth-dim2" => include_str!("../data/smooth-dim2.json"),
        "smooth-dim3" => include_str!("../data/smooth-dim3.json"),
        other => return Err(Error::UnknownCatalog(other.to_string())),
    };
    catalog_from_json(text)
}
