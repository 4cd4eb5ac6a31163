//! Constructors for every regular convex polytope.
//!
//! The three generic families come from the recursive constructions:
//! pyramid for simplices, prism for hypercubes, bipyramid for
//! cross-polytopes. The pentagonal objects get exact ℚ(√5) coordinates and
//! their lattices are reconstructed from geometry: edges are the pairs at
//! minimal squared distance, higher faces are cliques (simplicial targets)
//! or octahedral six-point subsets (the 24-cell), and the assembled lattice
//! must pass the full diamond/gradedness validation or the construction
//! reports failure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::QuadExt;
use crate::lattice::{Face, FaceLattice, FVector, LatticeError};
use crate::schlafli::SchlafliSymbol;
use crate::symmetry;

/// Generic families refuse dimensions above this by default.
pub const DEFAULT_DIMENSION_CAP: usize = 8;
/// Polygons stay desk-scale.
pub const MAX_POLYGON: u32 = 10_000;

const MAX_GEOMETRY_JSON_VERTICES: usize = 10_000;
const MAX_GEOMETRY_JSON_DIMENSION: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("dimension {0} exceeds the cap {1}")]
    CapExceeded(usize, usize),
    #[error("dimension must be at least 1")]
    BadDimension,
    #[error("polygon needs at least 3 sides, got {0}")]
    BadPolygon(u32),
    #[error("polygon with {0} sides exceeds the cap {MAX_POLYGON}")]
    PolygonTooLarge(u32),
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("bad polytope JSON: {0}")]
    Json(String),
    #[error("face reconstruction failed validation: {0}")]
    ValidationFailed(String),
    #[error("constructed lattice has symbol {found}, expected {expected}")]
    SymbolMismatch {
        expected: SchlafliSymbol,
        found: SchlafliSymbol,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

// ---------------------------------------------------------------------------
// recursive constructions on lattices
// ---------------------------------------------------------------------------

/// Cone over a polytope: one apex joined to every face, dimension + 1.
pub fn pyramid(base: &FaceLattice) -> Result<FaceLattice, LatticeError> {
    let n = base.dimension();
    let apex = base.num_vertices() as u32;
    let old = base.levels();
    let mut levels: Vec<Vec<Face>> = Vec::with_capacity(n + 3);
    for l in 0..=n + 2 {
        let mut faces: Vec<Face> = Vec::new();
        if l <= n + 1 {
            faces.extend(old[l].iter().cloned());
        }
        if l >= 1 {
            for f in &old[l - 1] {
                let mut g = f.clone();
                g.push(apex);
                faces.push(g);
            }
        }
        levels.push(faces);
    }
    FaceLattice::from_levels(n + 1, levels)
}

/// Product with a segment: two copies of every face plus the prisms over them.
pub fn prism(base: &FaceLattice) -> Result<FaceLattice, LatticeError> {
    let n = base.dimension();
    let offset = base.num_vertices() as u32;
    let shift = |f: &Face| -> Face { f.iter().map(|&v| v + offset).collect() };
    let old = base.levels();
    let mut levels: Vec<Vec<Face>> = Vec::with_capacity(n + 3);
    for l in 0..=n + 2 {
        let mut faces: Vec<Face> = Vec::new();
        if l == 0 {
            faces.push(Vec::new());
        } else {
            if l <= n + 1 {
                for f in &old[l] {
                    faces.push(f.clone());
                    faces.push(shift(f));
                }
            }
            // the prism over a face has one rank more; ∅ stays where it is
            if l >= 2 {
                for f in &old[l - 1] {
                    let mut g = f.clone();
                    g.extend(shift(f));
                    faces.push(g);
                }
            }
        }
        levels.push(faces);
    }
    FaceLattice::from_levels(n + 1, levels)
}

/// Two apexes coned over every proper face; the base polytope itself is not
/// a face of the result.
pub fn bipyramid(base: &FaceLattice) -> Result<FaceLattice, LatticeError> {
    let n = base.dimension();
    if n == 0 {
        // the point has no proper faces, so only the two apexes remain
        return Ok(segment_lattice());
    }
    let v = base.num_vertices() as u32;
    let apexes = [v, v + 1];
    let old = base.levels();
    let mut levels: Vec<Vec<Face>> = Vec::with_capacity(n + 3);
    for l in 0..=n + 2 {
        let mut faces: Vec<Face> = Vec::new();
        if l <= n {
            faces.extend(old[l].iter().cloned());
        }
        if l >= 1 && l - 1 <= n {
            for f in &old[l - 1] {
                for &a in &apexes {
                    let mut g = f.clone();
                    g.push(a);
                    faces.push(g);
                }
            }
        }
        if l == n + 2 {
            faces.push((0..v + 2).collect());
        }
        levels.push(faces);
    }
    FaceLattice::from_levels(n + 1, levels)
}

// ---------------------------------------------------------------------------
// exact geometry
// ---------------------------------------------------------------------------

/// Exact vertex coordinates in ℚ(√5)^n, all on one sphere about the centroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geometry {
    dimension: usize,
    vertices: Vec<Vec<QuadExt>>,
}

impl Geometry {
    pub fn new(dimension: usize, vertices: Vec<Vec<QuadExt>>) -> Result<Self, ConstructError> {
        if dimension == 0 || vertices.is_empty() {
            return Err(ConstructError::Geometry(
                "need a positive dimension and at least one vertex".into(),
            ));
        }
        if vertices.iter().any(|v| v.len() != dimension) {
            return Err(ConstructError::Geometry(format!(
                "every vertex needs exactly {dimension} coordinates"
            )));
        }
        let geometry = Geometry {
            dimension,
            vertices,
        };
        for i in 0..geometry.vertices.len() {
            for j in i + 1..geometry.vertices.len() {
                if geometry.vertices[i] == geometry.vertices[j] {
                    return Err(ConstructError::Geometry(format!(
                        "vertices {i} and {j} coincide"
                    )));
                }
            }
        }
        let centroid = geometry.centroid();
        let mut radius: Option<QuadExt> = None;
        for (i, v) in geometry.vertices.iter().enumerate() {
            let r = squared_distance(v, &centroid);
            match &radius {
                None => radius = Some(r),
                Some(r0) if *r0 != r => {
                    return Err(ConstructError::Geometry(format!(
                        "vertex {i} is not on the circumscribed sphere"
                    )))
                }
                _ => {}
            }
        }
        Ok(geometry)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[Vec<QuadExt>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn centroid(&self) -> Vec<QuadExt> {
        let count = QuadExt::from_int(self.vertices.len() as i64);
        let inv = count.inverse().expect("vertex count is positive");
        (0..self.dimension)
            .map(|j| {
                let mut sum = QuadExt::zero();
                for v in &self.vertices {
                    sum = sum + &v[j];
                }
                sum * &inv
            })
            .collect()
    }

    /// Exact squared circumradius about the centroid.
    pub fn circumradius_squared(&self) -> QuadExt {
        squared_distance(&self.vertices[0], &self.centroid())
    }

    pub fn squared_distance(&self, i: usize, j: usize) -> QuadExt {
        squared_distance(&self.vertices[i], &self.vertices[j])
    }

    /// Vertex pairs at the minimal squared distance, i.e. the edges.
    pub fn minimal_distance_pairs(&self) -> Vec<(u32, u32)> {
        let mut best: Option<QuadExt> = None;
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let d = self.squared_distance(i, j);
                match &best {
                    Some(b) if d > *b => {}
                    Some(b) if d == *b => pairs.push((i as u32, j as u32)),
                    _ => {
                        best = Some(d);
                        pairs.clear();
                        pairs.push((i as u32, j as u32));
                    }
                }
            }
        }
        pairs
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GeometryJson {
            dimension: self.dimension,
            field: FIELD_NAME.to_string(),
            vertices: self.vertices.clone(),
        })
        .expect("geometry serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Geometry, ConstructError> {
        let parsed: GeometryJson = serde_json::from_str(text)
            .map_err(|e| ConstructError::Geometry(format!("bad JSON: {e}")))?;
        if parsed.field != FIELD_NAME {
            return Err(ConstructError::Geometry(format!(
                "unsupported coordinate field {:?}",
                parsed.field
            )));
        }
        if parsed.dimension > MAX_GEOMETRY_JSON_DIMENSION
            || parsed.vertices.len() > MAX_GEOMETRY_JSON_VERTICES
        {
            return Err(ConstructError::Geometry("input too large".into()));
        }
        Geometry::new(parsed.dimension, parsed.vertices)
    }
}

const FIELD_NAME: &str = "Q(sqrt5)";

#[derive(Serialize, Deserialize)]
struct GeometryJson {
    dimension: usize,
    field: String,
    vertices: Vec<Vec<QuadExt>>,
}

impl Serialize for Geometry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GeometryJson {
            dimension: self.dimension,
            field: FIELD_NAME.to_string(),
            vertices: self.vertices.clone(),
        }
        .serialize(s)
    }
}

fn squared_distance(a: &[QuadExt], b: &[QuadExt]) -> QuadExt {
    let mut acc = QuadExt::zero();
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc = acc + d.square();
    }
    acc
}

// ---------------------------------------------------------------------------
// face reconstruction from geometry
// ---------------------------------------------------------------------------

/// How ranks ≥ 2 are rebuilt from the edge graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReconstructionMethod {
    /// Rank-k faces are the (k+1)-cliques; valid for simplicial polytopes.
    SimplicialCliques,
    /// Triangles are 3-cliques, cells are octahedral 6-point subsets found
    /// from antipodal pairs at twice the minimal squared distance.
    Bipartite24Cell,
}

/// Rebuild the face lattice of a regular polytope from its vertex geometry.
///
/// Fails with [`ConstructError::ValidationFailed`] when the chosen method
/// does not apply: the assembled levels are always pushed through the full
/// lattice validation rather than trusted.
pub fn lattice_from_geometry(
    geometry: &Geometry,
    method: ReconstructionMethod,
) -> Result<FaceLattice, ConstructError> {
    let n = geometry.dimension();
    let count = geometry.len();
    let mut proper: Vec<Vec<Face>> = Vec::with_capacity(n);
    proper.push((0..count as u32).map(|i| vec![i]).collect());
    if n >= 2 {
        let edges = geometry.minimal_distance_pairs();
        proper.push(edges.iter().map(|&(i, j)| vec![i, j]).collect());
        let adjacency = adjacency_lists(count, &edges);
        match method {
            ReconstructionMethod::SimplicialCliques => {
                let mut current: Vec<Face> = proper[1].clone();
                for _rank in 2..n {
                    current = extend_cliques(&current, &adjacency);
                    proper.push(current.clone());
                }
            }
            ReconstructionMethod::Bipartite24Cell => {
                if n != 4 {
                    return Err(ConstructError::ValidationFailed(format!(
                        "the 24-cell method needs dimension 4, got {n}"
                    )));
                }
                let triangles = extend_cliques(&proper[1], &adjacency);
                proper.push(triangles);
                proper.push(octahedral_cells(geometry, &adjacency)?);
            }
        }
    }
    FaceLattice::from_proper_ranks(n, proper)
        .map_err(|e| ConstructError::ValidationFailed(e.to_string()))
}

fn adjacency_lists(count: usize, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adjacency = vec![Vec::new(); count];
    for &(i, j) in edges {
        adjacency[i as usize].push(j);
        adjacency[j as usize].push(i);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    adjacency
}

/// Extend each k-clique by every common neighbor above its maximum.
fn extend_cliques(cliques: &[Face], adjacency: &[Vec<u32>]) -> Vec<Face> {
    let mut next: Vec<Face> = Vec::new();
    for clique in cliques {
        let last = *clique.last().expect("cliques are nonempty");
        let candidates = common_neighbors(clique, adjacency);
        for c in candidates {
            if c > last {
                let mut bigger = clique.clone();
                bigger.push(c);
                next.push(bigger);
            }
        }
    }
    next
}

fn common_neighbors(clique: &[u32], adjacency: &[Vec<u32>]) -> Vec<u32> {
    let mut iter = clique.iter();
    let first = *iter.next().expect("cliques are nonempty");
    let mut result: Vec<u32> = adjacency[first as usize].clone();
    for &v in iter {
        let list = &adjacency[v as usize];
        result.retain(|c| list.binary_search(c).is_ok());
    }
    result
}

/// The 24-cell's octahedral cells: for each pair at twice the edge length,
/// the pair plus the four common edge-neighbors.
fn octahedral_cells(
    geometry: &Geometry,
    adjacency: &[Vec<u32>],
) -> Result<Vec<Face>, ConstructError> {
    let edge_sq = {
        let pairs = geometry.minimal_distance_pairs();
        let (i, j) = pairs[0];
        geometry.squared_distance(i as usize, j as usize)
    };
    let diagonal_sq = &edge_sq + &edge_sq;
    let mut cells: BTreeSet<Face> = BTreeSet::new();
    let count = geometry.len();
    for i in 0..count {
        for j in i + 1..count {
            if geometry.squared_distance(i, j) != diagonal_sq {
                continue;
            }
            let mut cell = common_neighbors(&[i as u32, j as u32], adjacency);
            cell.push(i as u32);
            cell.push(j as u32);
            cell.sort_unstable();
            if cell.len() != 6 {
                return Err(ConstructError::ValidationFailed(format!(
                    "expected an octahedral 6-point cell, found {} points",
                    cell.len()
                )));
            }
            cells.insert(cell);
        }
    }
    Ok(cells.into_iter().collect())
}

// ---------------------------------------------------------------------------
// named polytopes
// ---------------------------------------------------------------------------

/// Names of the supported regular polytopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolytopeName {
    Segment,
    Polygon(u32),
    Simplex(usize),
    Hypercube(usize),
    Cross(usize),
    Icosahedron,
    Dodecahedron,
    Cell24,
    Cell600,
    Cell120,
}

impl fmt::Display for PolytopeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeName::Segment => write!(f, "segment"),
            PolytopeName::Polygon(p) => write!(f, "polygon({p})"),
            PolytopeName::Simplex(n) => write!(f, "simplex({n})"),
            PolytopeName::Hypercube(n) => write!(f, "hypercube({n})"),
            PolytopeName::Cross(n) => write!(f, "cross({n})"),
            PolytopeName::Icosahedron => write!(f, "icosahedron"),
            PolytopeName::Dodecahedron => write!(f, "dodecahedron"),
            PolytopeName::Cell24 => write!(f, "cell24"),
            PolytopeName::Cell600 => write!(f, "cell600"),
            PolytopeName::Cell120 => write!(f, "cell120"),
        }
    }
}

impl FromStr for PolytopeName {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let t = s.trim();
        let parametric = |prefix: &str| -> Option<u64> {
            t.strip_prefix(prefix)
                .and_then(|rest| rest.strip_prefix('('))
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|inner| inner.trim().parse().ok())
        };
        match t {
            "segment" => return Ok(PolytopeName::Segment),
            "icosahedron" => return Ok(PolytopeName::Icosahedron),
            "dodecahedron" => return Ok(PolytopeName::Dodecahedron),
            "cell24" => return Ok(PolytopeName::Cell24),
            "cell600" => return Ok(PolytopeName::Cell600),
            "cell120" => return Ok(PolytopeName::Cell120),
            _ => {}
        }
        if let Some(p) = parametric("polygon") {
            return Ok(PolytopeName::Polygon(p.min(u32::MAX as u64) as u32));
        }
        if let Some(n) = parametric("simplex") {
            return Ok(PolytopeName::Simplex(n as usize));
        }
        if let Some(n) = parametric("hypercube") {
            return Ok(PolytopeName::Hypercube(n as usize));
        }
        if let Some(n) = parametric("cross") {
            return Ok(PolytopeName::Cross(n as usize));
        }
        Err(())
    }
}

/// A constructed polytope: lattice, symbol, and optional exact geometry.
///
/// The symbol is always recomputed from the lattice (with the
/// flag-independence regularity check) and compared with the expected one.
#[derive(Debug, Clone)]
pub struct NamedPolytope {
    name: PolytopeName,
    symbol: SchlafliSymbol,
    lattice: FaceLattice,
    geometry: Option<Geometry>,
}

impl NamedPolytope {
    fn checked(
        name: PolytopeName,
        expected_symbol: SchlafliSymbol,
        lattice: FaceLattice,
        geometry: Option<Geometry>,
    ) -> Result<Self, ConstructError> {
        let symbol = lattice.schlafli_symbol()?;
        if symbol != expected_symbol {
            return Err(ConstructError::SymbolMismatch {
                expected: expected_symbol,
                found: symbol,
            });
        }
        if let Some(g) = &geometry {
            if g.len() != lattice.num_vertices() {
                return Err(ConstructError::Geometry(format!(
                    "geometry has {} vertices, lattice has {}",
                    g.len(),
                    lattice.num_vertices()
                )));
            }
        }
        Ok(NamedPolytope {
            name,
            symbol,
            lattice,
            geometry,
        })
    }

    pub fn name(&self) -> PolytopeName {
        self.name
    }

    pub fn symbol(&self) -> &SchlafliSymbol {
        &self.symbol
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn geometry(&self) -> Option<&Geometry> {
        self.geometry.as_ref()
    }

    pub fn f_vector(&self) -> FVector {
        self.lattice.f_vector()
    }

    pub fn dimension(&self) -> usize {
        self.lattice.dimension()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct View<'a> {
            name: String,
            symbol: &'a SchlafliSymbol,
            f_vector: &'a FVector,
            lattice: serde_json::Value,
            #[serde(skip_serializing_if = "Option::is_none")]
            geometry: Option<serde_json::Value>,
        }
        let f_vector = self.f_vector();
        let view = View {
            name: self.name.to_string(),
            symbol: &self.symbol,
            f_vector: &f_vector,
            lattice: serde_json::from_str(&self.lattice.to_json())
                .expect("lattice JSON is valid"),
            geometry: self
                .geometry
                .as_ref()
                .map(|g| serde_json::from_str(&g.to_json()).expect("geometry JSON is valid")),
        };
        serde_json::to_string(&view).expect("polytope serialization cannot fail")
    }

    /// Rebuild from the bundle JSON, revalidating every part.
    pub fn from_json(text: &str) -> Result<Self, ConstructError> {
        #[derive(Deserialize)]
        struct View {
            name: String,
            symbol: SchlafliSymbol,
            f_vector: FVector,
            lattice: serde_json::Value,
            geometry: Option<serde_json::Value>,
        }
        let view: View = serde_json::from_str(text)
            .map_err(|e| ConstructError::Json(e.to_string()))?;
        let name = PolytopeName::from_str(&view.name)
            .map_err(|_| ConstructError::Json(format!("unknown name {:?}", view.name)))?;
        let lattice = FaceLattice::from_json(&view.lattice.to_string())?;
        let geometry = match view.geometry {
            Some(g) => Some(Geometry::from_json(&g.to_string())?),
            None => None,
        };
        if lattice.f_vector() != view.f_vector {
            return Err(ConstructError::Json(
                "f_vector does not match the lattice".into(),
            ));
        }
        NamedPolytope::checked(name, view.symbol, lattice, geometry)
    }
}

// ---------------------------------------------------------------------------
// the generic families
// ---------------------------------------------------------------------------

fn check_cap(n: usize, cap: usize) -> Result<(), ConstructError> {
    if n < 1 {
        Err(ConstructError::BadDimension)
    } else if n > cap {
        Err(ConstructError::CapExceeded(n, cap))
    } else {
        Ok(())
    }
}

fn segment_lattice() -> FaceLattice {
    FaceLattice::from_proper_ranks(1, vec![vec![vec![0], vec![1]]])
        .expect("segment lattice is valid")
}

/// The segment, with geometry (−1) and (1).
pub fn segment() -> NamedPolytope {
    let geometry = Geometry::new(
        1,
        vec![vec![QuadExt::from_int(-1)], vec![QuadExt::from_int(1)]],
    )
    .expect("segment geometry is valid");
    NamedPolytope::checked(
        PolytopeName::Segment,
        SchlafliSymbol::segment(),
        segment_lattice(),
        Some(geometry),
    )
    .expect("segment is valid")
}

/// Combinatorial regular p-gon `{p}`; no coordinates, since cos(2π/p)
/// generally lives outside ℚ(√5).
pub fn polygon(p: u32) -> Result<NamedPolytope, ConstructError> {
    if p < 3 {
        return Err(ConstructError::BadPolygon(p));
    }
    if p > MAX_POLYGON {
        return Err(ConstructError::PolygonTooLarge(p));
    }
    let vertices: Vec<Face> = (0..p).map(|i| vec![i]).collect();
    let edges: Vec<Face> = (0..p)
        .map(|i| {
            let mut e = vec![i, (i + 1) % p];
            e.sort_unstable();
            e
        })
        .collect();
    let lattice = FaceLattice::from_proper_ranks(2, vec![vertices, edges])?;
    NamedPolytope::checked(
        PolytopeName::Polygon(p),
        SchlafliSymbol::new(vec![p]).expect("p ≥ 3"),
        lattice,
        None,
    )
}

/// n-simplex by iterated pyramid; no exact ℚ(√5) coordinates are provided.
pub fn simplex(n: usize) -> Result<NamedPolytope, ConstructError> {
    simplex_with_cap(n, DEFAULT_DIMENSION_CAP)
}

pub fn simplex_with_cap(n: usize, cap: usize) -> Result<NamedPolytope, ConstructError> {
    check_cap(n, cap)?;
    let mut lattice = FaceLattice::point();
    for _ in 0..n {
        lattice = pyramid(&lattice)?;
    }
    NamedPolytope::checked(
        if n == 1 {
            PolytopeName::Segment
        } else {
            PolytopeName::Simplex(n)
        },
        SchlafliSymbol::simplex(n.saturating_sub(1)),
        lattice,
        None,
    )
}

/// n-cube by iterated prism, with (±1)ⁿ geometry; vertex v has coordinate j
/// equal to +1 exactly when bit j of v is set.
pub fn hypercube(n: usize) -> Result<NamedPolytope, ConstructError> {
    hypercube_with_cap(n, DEFAULT_DIMENSION_CAP)
}

pub fn hypercube_with_cap(n: usize, cap: usize) -> Result<NamedPolytope, ConstructError> {
    check_cap(n, cap)?;
    let mut lattice = segment_lattice();
    for _ in 1..n {
        lattice = prism(&lattice)?;
    }
    let vertices: Vec<Vec<QuadExt>> = (0..1u32 << n)
        .map(|v| {
            (0..n)
                .map(|j| QuadExt::from_int(if v >> j & 1 == 1 { 1 } else { -1 }))
                .collect()
        })
        .collect();
    let geometry = Geometry::new(n, vertices)?;
    NamedPolytope::checked(
        if n == 1 {
            PolytopeName::Segment
        } else {
            PolytopeName::Hypercube(n)
        },
        SchlafliSymbol::hypercube(n.saturating_sub(1)),
        lattice,
        Some(geometry),
    )
}

/// n-dimensional cross-polytope by iterated bipyramid, with ±2eⱼ geometry;
/// vertices 2j and 2j+1 sit at −2 and +2 on axis j.
pub fn cross_polytope(n: usize) -> Result<NamedPolytope, ConstructError> {
    cross_polytope_with_cap(n, DEFAULT_DIMENSION_CAP)
}

pub fn cross_polytope_with_cap(n: usize, cap: usize) -> Result<NamedPolytope, ConstructError> {
    check_cap(n, cap)?;
    let mut lattice = segment_lattice();
    for _ in 1..n {
        lattice = bipyramid(&lattice)?;
    }
    let vertices: Vec<Vec<QuadExt>> = (0..2 * n)
        .map(|i| {
            let axis = i / 2;
            let sign = if i % 2 == 0 { -2 } else { 2 };
            (0..n)
                .map(|j| QuadExt::from_int(if j == axis { sign } else { 0 }))
                .collect()
        })
        .collect();
    let geometry = Geometry::new(n, vertices)?;
    NamedPolytope::checked(
        if n == 1 {
            PolytopeName::Segment
        } else {
            PolytopeName::Cross(n)
        },
        SchlafliSymbol::cross_polytope(n.saturating_sub(1)),
        lattice,
        Some(geometry),
    )
}

// ---------------------------------------------------------------------------
// the pentagonal objects and the 4-dimensional exceptions
// ---------------------------------------------------------------------------

/// The icosahedron `{3,5}` from the 12 cyclic permutations of (0, ±1, ±φ).
pub fn icosahedron() -> Result<NamedPolytope, ConstructError> {
    let phi = QuadExt::golden_ratio();
    let zero = QuadExt::zero();
    let one = QuadExt::one();
    let mut vertices = Vec::with_capacity(12);
    for shift in 0..3 {
        for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let pattern = [
                zero.clone(),
                if s1 > 0 { one.clone() } else { -&one },
                if s2 > 0 { phi.clone() } else { -&phi },
            ];
            let mut coords = vec![QuadExt::zero(); 3];
            for (i, value) in pattern.into_iter().enumerate() {
                coords[(i + shift) % 3] = value;
            }
            vertices.push(coords);
        }
    }
    let geometry = Geometry::new(3, vertices)?;
    let lattice = lattice_from_geometry(&geometry, ReconstructionMethod::SimplicialCliques)?;
    NamedPolytope::checked(
        PolytopeName::Icosahedron,
        SchlafliSymbol::new(vec![3, 5]).unwrap(),
        lattice,
        Some(geometry),
    )
}

/// The dodecahedron `{5,3}` as the dual of the icosahedron; its vertices are
/// the (scaled) centroids of the icosahedron's triangles, which stay in ℚ(√5).
pub fn dodecahedron() -> Result<NamedPolytope, ConstructError> {
    let ico = icosahedron()?;
    let lattice = ico.lattice().dual();
    let ico_geometry = ico.geometry().expect("icosahedron has geometry");
    let triangles = ico.lattice().rank_faces(2);
    let vertices: Vec<Vec<QuadExt>> = triangles
        .iter()
        .map(|t| {
            (0..3)
                .map(|j| {
                    let mut sum = QuadExt::zero();
                    for &v in t {
                        sum = sum + &ico_geometry.vertices()[v as usize][j];
                    }
                    sum
                })
                .collect()
        })
        .collect();
    let geometry = Geometry::new(3, vertices)?;
    NamedPolytope::checked(
        PolytopeName::Dodecahedron,
        SchlafliSymbol::new(vec![5, 3]).unwrap(),
        lattice,
        Some(geometry),
    )
}

/// The 24-cell `{3,4,3}`: the 16 hypercube vertices (±1,±1,±1,±1) together
/// with the 8 cross-polytope vertices (±2,0,0,0) and permutations.
pub fn cell24() -> Result<NamedPolytope, ConstructError> {
    let mut vertices: Vec<Vec<QuadExt>> = (0..16u32)
        .map(|v| {
            (0..4)
                .map(|j| QuadExt::from_int(if v >> j & 1 == 1 { 1 } else { -1 }))
                .collect()
        })
        .collect();
    for axis in 0..4 {
        for sign in [-2i64, 2] {
            vertices.push(
                (0..4)
                    .map(|j| QuadExt::from_int(if j == axis { sign } else { 0 }))
                    .collect(),
            );
        }
    }
    let geometry = Geometry::new(4, vertices)?;
    let lattice = lattice_from_geometry(&geometry, ReconstructionMethod::Bipartite24Cell)?;
    NamedPolytope::checked(
        PolytopeName::Cell24,
        SchlafliSymbol::new(vec![3, 4, 3]).unwrap(),
        lattice,
        Some(geometry),
    )
}

/// The 600-cell `{3,3,5}`: its 120 vertices are the binary icosahedral group
/// of unit quaternions, read as exact points of ℚ(√5)⁴.
pub fn cell600() -> Result<NamedPolytope, ConstructError> {
    let group = symmetry::binary_icosahedral();
    let vertices: Vec<Vec<QuadExt>> = group
        .elements()
        .iter()
        .map(|q| q.components().map(Clone::clone).to_vec())
        .collect();
    let geometry = Geometry::new(4, vertices)?;
    let lattice = lattice_from_geometry(&geometry, ReconstructionMethod::SimplicialCliques)?;
    NamedPolytope::checked(
        PolytopeName::Cell600,
        SchlafliSymbol::new(vec![3, 3, 5]).unwrap(),
        lattice,
        Some(geometry),
    )
}

/// The 120-cell `{5,3,3}`, obtained only by duality from the 600-cell.
pub fn cell120() -> Result<NamedPolytope, ConstructError> {
    let lattice = cell600()?.lattice().dual();
    NamedPolytope::checked(
        PolytopeName::Cell120,
        SchlafliSymbol::new(vec![5, 3, 3]).unwrap(),
        lattice,
        None,
    )
}

/// Build a named polytope, applying `cap` to the generic families.
pub fn build_with_cap(name: PolytopeName, cap: usize) -> Result<NamedPolytope, ConstructError> {
    match name {
        PolytopeName::Segment => Ok(segment()),
        PolytopeName::Polygon(p) => polygon(p),
        PolytopeName::Simplex(n) => simplex_with_cap(n, cap),
        PolytopeName::Hypercube(n) => hypercube_with_cap(n, cap),
        PolytopeName::Cross(n) => cross_polytope_with_cap(n, cap),
        PolytopeName::Icosahedron => icosahedron(),
        PolytopeName::Dodecahedron => dodecahedron(),
        PolytopeName::Cell24 => cell24(),
        PolytopeName::Cell600 => cell600(),
        PolytopeName::Cell120 => cell120(),
    }
}

pub fn build(name: PolytopeName) -> Result<NamedPolytope, ConstructError> {
    build_with_cap(name, DEFAULT_DIMENSION_CAP)
}

/// Which named polytope a spherical symbol denotes, if any.
pub fn name_for_symbol(symbol: &SchlafliSymbol) -> Option<PolytopeName> {
    let e = symbol.entries();
    match e.len() {
        0 => Some(PolytopeName::Segment),
        1 => Some(PolytopeName::Polygon(e[0])),
        2 => match e {
            [3, 3] => Some(PolytopeName::Simplex(3)),
            [4, 3] => Some(PolytopeName::Hypercube(3)),
            [3, 4] => Some(PolytopeName::Cross(3)),
            [3, 5] => Some(PolytopeName::Icosahedron),
            [5, 3] => Some(PolytopeName::Dodecahedron),
            _ => None,
        },
        3 => match e {
            [3, 3, 3] => Some(PolytopeName::Simplex(4)),
            [4, 3, 3] => Some(PolytopeName::Hypercube(4)),
            [3, 3, 4] => Some(PolytopeName::Cross(4)),
            [3, 4, 3] => Some(PolytopeName::Cell24),
            [3, 3, 5] => Some(PolytopeName::Cell600),
            [5, 3, 3] => Some(PolytopeName::Cell120),
            _ => None,
        },
        len => {
            let dim = len + 1;
            if *symbol == SchlafliSymbol::simplex(len) {
                Some(PolytopeName::Simplex(dim))
            } else if *symbol == SchlafliSymbol::hypercube(len) {
                Some(PolytopeName::Hypercube(dim))
            } else if *symbol == SchlafliSymbol::cross_polytope(len) {
                Some(PolytopeName::Cross(dim))
            } else {
                None
            }
        }
    }
}
