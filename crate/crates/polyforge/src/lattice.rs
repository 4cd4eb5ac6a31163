//! Graded face lattices of convex regular polytopes.
//!
//! Faces are identified with their sorted vertex-index sets; for convex
//! regular polytopes this loses nothing, and it makes duality, isomorphism
//! and validation purely combinatorial. A [`FaceLattice`] stores every rank
//! from −1 (the empty face) through n (the whole polytope) and is validated
//! on construction: unique minimum and maximum, gradedness, inclusion
//! consistency, and the diamond condition.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::schlafli::SchlafliSymbol;

/// A face, stored as the sorted set of vertex indices it contains.
pub type Face = Vec<u32>;

/// Import ceilings for untrusted JSON.
const MAX_JSON_DIMENSION: usize = 16;
const MAX_JSON_FACES: usize = 200_000;
const MAX_JSON_VERTEX_REFS: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid face lattice:\n{0}")]
    Invalid(ValidationReport),
    #[error("not a regular polytope lattice: {0}")]
    NotRegular(String),
    #[error("lattice JSON error: {0}")]
    Json(String),
    #[error("refusing oversized input: {0}")]
    TooLarge(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Shape,
    Gradedness,
    Inclusion,
    Diamond,
    Connectivity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

/// Outcome of checking the lattice invariants; empty means valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, kind: ViolationKind, detail: String) {
        self.violations.push(Violation { kind, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "  {:?}: {}", v.kind, v.detail)?;
        }
        Ok(())
    }
}

/// Face counts (f₀, …, f_{n−1}) of the proper ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// Alternating sum f₀ − f₁ + f₂ − …; equals 2 or 0 for sphere boundaries.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn reversed(&self) -> FVector {
        let mut v = self.0.clone();
        v.reverse();
        FVector(v)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Graded face lattice of an n-dimensional convex regular polytope.
///
/// `levels[l]` holds the faces of rank `l − 1`, so `levels[0]` is the empty
/// face and `levels[n + 1]` the whole polytope. Faces are sorted vertex sets,
/// and within each level the faces are sorted lexicographically, which makes
/// equality and JSON export canonical. Instances are immutable and always
/// valid: every constructor runs the full invariant check.
#[derive(Clone, PartialEq, Eq)]
pub struct FaceLattice {
    dimension: usize,
    num_vertices: usize,
    levels: Vec<Vec<Face>>,
    /// up[l][i]: indices of faces in level l+1 covering face i of level l.
    up: Vec<Vec<Vec<u32>>>,
    /// down[l][i]: indices of faces in level l−1 covered by face i of level l.
    down: Vec<Vec<Vec<u32>>>,
}

impl fmt::Debug for FaceLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FaceLattice(dim={}, f={})",
            self.dimension,
            self.f_vector()
        )
    }
}

/// `a ⊆ b` for sorted slices.
pub(crate) fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => {}
            }
        }
        return false;
    }
    true
}

/// Check every lattice invariant on raw level data (ranks −1..n inclusive).
/// Faces need not be pre-sorted; duplicates and gaps are reported, not fixed.
pub fn validate_levels(dimension: usize, levels: &[Vec<Face>]) -> ValidationReport {
    let mut report = ValidationReport::default();
    if levels.len() != dimension + 2 {
        report.push(
            ViolationKind::Shape,
            format!(
                "expected {} levels for dimension {}, found {}",
                dimension + 2,
                dimension,
                levels.len()
            ),
        );
        return report;
    }

    // normalized copy: faces sorted, levels sorted
    let mut norm: Vec<Vec<Face>> = levels.to_vec();
    for (l, level) in norm.iter_mut().enumerate() {
        for face in level.iter_mut() {
            face.sort_unstable();
            if face.windows(2).any(|w| w[0] == w[1]) {
                report.push(
                    ViolationKind::Shape,
                    format!("face with a repeated vertex at rank {}", l as i64 - 1),
                );
                face.dedup();
            }
        }
        level.sort();
    }

    if norm[0] != vec![Vec::<u32>::new()] {
        report.push(
            ViolationKind::Gradedness,
            "rank -1 must contain exactly the empty face".to_string(),
        );
    }
    match norm[dimension + 1].len() {
        1 => {}
        k => report.push(
            ViolationKind::Gradedness,
            format!("expected exactly one maximal face, found {k}"),
        ),
    }
    for (l, level) in norm.iter().enumerate() {
        if level.is_empty() {
            report.push(
                ViolationKind::Gradedness,
                format!("rank {} has no faces", l as i64 - 1),
            );
        }
        if level.windows(2).any(|w| w[0] == w[1]) {
            report.push(
                ViolationKind::Shape,
                format!("duplicate face at rank {}", l as i64 - 1),
            );
        }
    }
    if !report.is_valid() {
        return report;
    }

    // rank 0: singletons covering 0..V-1; top face = the full vertex set
    let vertices = &norm[1];
    let v_count = vertices.len();
    let covering = vertices
        .iter()
        .enumerate()
        .all(|(i, f)| f.len() == 1 && f[0] as usize == i);
    if !covering {
        report.push(
            ViolationKind::Shape,
            "rank 0 faces must be the singletons {0}..{V-1}".to_string(),
        );
        return report;
    }
    let expected_top: Face = (0..v_count as u32).collect();
    if norm[dimension + 1][0] != expected_top {
        report.push(
            ViolationKind::Shape,
            "maximal face must contain every vertex".to_string(),
        );
        return report;
    }

    // gradedness + inclusion consistency between consecutive ranks
    for l in 1..=dimension {
        for (i, face) in norm[l].iter().enumerate() {
            let mut above = norm[l + 1]
                .iter()
                .filter(|g| is_subset(face, g))
                .peekable();
            if above.peek().is_none() {
                report.push(
                    ViolationKind::Gradedness,
                    format!("face {i} of rank {} lies under no face of rank {l}", l - 1),
                );
            }
        }
        if l >= 2 {
            for (i, face) in norm[l].iter().enumerate() {
                let mut union: Vec<u32> = Vec::new();
                for g in norm[l - 1].iter().filter(|g| is_subset(g, face)) {
                    union.extend_from_slice(g);
                }
                union.sort_unstable();
                union.dedup();
                if &union != face {
                    report.push(
                        ViolationKind::Inclusion,
                        format!(
                            "face {i} of rank {} is not the union of its rank-{} subfaces",
                            l - 1,
                            l - 2
                        ),
                    );
                }
            }
        }
    }

    // the vertex graph of a convex polytope is connected; a disconnected one
    // (e.g. a compound of disjoint polytopes) is not a polytope lattice even
    // when gradedness and the diamond condition hold
    if dimension >= 2 {
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); v_count];
        for edge in &norm[2] {
            // out-of-range vertices are reported by the interval checks below
            if edge.iter().any(|&v| v as usize >= v_count) {
                continue;
            }
            for &a in edge.iter() {
                for &b in edge.iter() {
                    if a != b {
                        adjacency[a as usize].push(b);
                    }
                }
            }
        }
        let mut reached = vec![false; v_count];
        let mut stack = vec![0u32];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v as usize] {
                if !reached[w as usize] {
                    reached[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        if !reached.iter().all(|&r| r) {
            report.push(
                ViolationKind::Connectivity,
                "vertex graph is disconnected".to_string(),
            );
        }
    }

    // diamond condition: every interval of height 2 contains exactly 2 faces
    for l in 0..dimension {
        for (ai, a) in norm[l].iter().enumerate() {
            for (bi, b) in norm[l + 2].iter().enumerate() {
                if !is_subset(a, b) {
                    continue;
                }
                let middle = norm[l + 1]
                    .iter()
                    .filter(|c| is_subset(a, c) && is_subset(c, b))
                    .count();
                if middle != 2 {
                    report.push(
                        ViolationKind::Diamond,
                        format!(
                            "interval between face {ai} of rank {} and face {bi} of rank {} \
                             contains {middle} faces, expected 2",
                            l as i64 - 1,
                            l + 1
                        ),
                    );
                }
            }
        }
    }

    report
}

impl FaceLattice {
    /// Build from all levels, ranks −1..n inclusive. Validates everything.
    pub fn from_levels(dimension: usize, mut levels: Vec<Vec<Face>>) -> Result<Self, LatticeError> {
        for level in &mut levels {
            for face in level.iter_mut() {
                face.sort_unstable();
            }
            level.sort();
        }
        let report = validate_levels(dimension, &levels);
        if !report.is_valid() {
            return Err(LatticeError::Invalid(report));
        }
        let num_vertices = levels[1].len();
        let (up, down) = incidence(&levels);
        Ok(FaceLattice {
            dimension,
            num_vertices,
            levels,
            up,
            down,
        })
    }

    /// Build from the proper ranks 0..n−1 only; improper faces are implied.
    ///
    /// For dimension 0 there are no proper ranks and the lattice is the point.
    pub fn from_proper_ranks(
        dimension: usize,
        proper: Vec<Vec<Face>>,
    ) -> Result<Self, LatticeError> {
        if proper.len() != dimension {
            return Err(LatticeError::Json(format!(
                "expected {} proper ranks for dimension {}, found {}",
                dimension,
                dimension,
                proper.len()
            )));
        }
        let num_vertices = if dimension == 0 { 1 } else { proper[0].len() };
        let mut levels = Vec::with_capacity(dimension + 2);
        levels.push(vec![Vec::new()]);
        levels.extend(proper);
        levels.push(vec![(0..num_vertices as u32).collect()]);
        FaceLattice::from_levels(dimension, levels)
    }

    /// The 0-dimensional polytope.
    pub fn point() -> Self {
        FaceLattice::from_proper_ranks(0, Vec::new()).expect("point lattice is valid")
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Faces of one proper rank, 0 ≤ k < dimension.
    pub fn rank_faces(&self, k: usize) -> &[Face] {
        &self.levels[k + 1]
    }

    pub(crate) fn levels(&self) -> &[Vec<Face>] {
        &self.levels
    }

    /// Total number of proper faces.
    pub fn face_count(&self) -> usize {
        (0..self.dimension).map(|k| self.rank_faces(k).len()).sum()
    }

    /// Re-run the invariant check; empty report on every valid instance.
    pub fn report(&self) -> ValidationReport {
        validate_levels(self.dimension, &self.levels)
    }

    pub fn f_vector(&self) -> FVector {
        FVector(
            (0..self.dimension)
                .map(|k| self.rank_faces(k).len() as u64)
                .collect(),
        )
    }

    /// Alternating sum over ALL ranks −1..n; zero for every valid lattice.
    pub fn euler_characteristic_full(&self) -> i64 {
        let mut total = 0i64;
        for (l, level) in self.levels.iter().enumerate() {
            let rank = l as i64 - 1;
            let sign = if rank.rem_euclid(2) == 0 { 1 } else { -1 };
            total += sign * level.len() as i64;
        }
        total
    }

    /// Number of maximal chains ∅ ⊂ v ⊂ e ⊂ … ⊂ polytope.
    pub fn count_flags(&self) -> u64 {
        let mut count = 0u64;
        self.for_each_flag(|_| count += 1);
        count
    }

    /// Visit every flag as a slice of face indices, one per proper rank.
    pub(crate) fn for_each_flag(&self, mut visit: impl FnMut(&[u32])) {
        let n = self.dimension;
        if n == 0 {
            visit(&[]);
            return;
        }
        let mut stack: Vec<u32> = Vec::with_capacity(n);
        self.flag_dfs(&mut stack, &mut visit);
    }

    fn flag_dfs(&self, stack: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        let depth = stack.len();
        if depth == self.dimension {
            visit(stack);
            return;
        }
        if depth == 0 {
            for v in 0..self.levels[1].len() as u32 {
                stack.push(v);
                self.flag_dfs(stack, visit);
                stack.pop();
            }
        } else {
            let last = *stack.last().unwrap() as usize;
            // up[depth] maps level `depth` (rank depth−1) to level depth+1
            for &next in &self.up[depth][last] {
                stack.push(next);
                self.flag_dfs(stack, visit);
                stack.pop();
            }
        }
    }

    /// Recover the Schläfli symbol from incidence, checking flag-independence.
    ///
    /// Entry i (1-based) counts the rank-i faces strictly between a flag's
    /// (i−2)-face and its (i+1)-face; a regular polytope gives the same count
    /// for every flag, and any variation is reported as `NotRegular`.
    ///
    /// A flag's count at rank i depends only on its rank-(i−2)/rank-(i+1)
    /// face pair, and every cover chain extends to a flag, so checking every
    /// flag is equivalent to checking every interval that occurs along a
    /// cover path. That keeps the check linear in the incidence size instead
    /// of the flag count.
    pub fn schlafli_symbol(&self) -> Result<SchlafliSymbol, LatticeError> {
        let n = self.dimension;
        if n <= 1 {
            return Ok(SchlafliSymbol::segment());
        }
        let mut entries: Vec<u32> = Vec::with_capacity(n - 1);
        let mut intervals: BTreeSet<(u32, u32)> = BTreeSet::new();
        for i in 1..n {
            // the middle faces of entry i have rank i and live at level i+1;
            // the interval ends live at levels i−1 and i+2
            intervals.clear();
            for x in 0..self.levels[i].len() {
                for &a in &self.down[i][x] {
                    for &m in &self.up[i][x] {
                        for &b in &self.up[i + 1][m as usize] {
                            intervals.insert((a, b));
                        }
                    }
                }
            }
            let mut common: Option<u64> = None;
            for &(a, b) in &intervals {
                let lower: &[u32] = &self.levels[i - 1][a as usize];
                let count = self.down[i + 2][b as usize]
                    .iter()
                    .filter(|&&c| is_subset(lower, &self.levels[i + 1][c as usize]))
                    .count() as u64;
                match common {
                    None => common = Some(count),
                    Some(first) if first != count => {
                        return Err(LatticeError::NotRegular(format!(
                            "rank-{i} interval counts differ: {first} vs {count}"
                        )));
                    }
                    _ => {}
                }
            }
            let value = common.expect("valid lattice has at least one flag");
            entries.push(u32::try_from(value).unwrap_or(u32::MAX));
        }
        SchlafliSymbol::new(entries)
            .map_err(|e| LatticeError::NotRegular(format!("bad symbol entry: {e}")))
    }

    /// The dual lattice: ranks reversed, new vertices = old facets, with
    /// every new face rebuilt as the set of old facets above the old face.
    pub fn dual(&self) -> FaceLattice {
        let n = self.dimension;
        if n == 0 {
            return FaceLattice::point();
        }
        let facet_count = self.rank_faces(n - 1).len();
        // facets_above[l][i]: sorted facet indices over face i of level l
        let mut facets_above: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n + 1];
        facets_above[n] = (0..facet_count as u32).map(|i| vec![i]).collect();
        for l in (1..n).rev() {
            facets_above[l] = self.levels[l]
                .iter()
                .enumerate()
                .map(|(i, _)| {
                    let mut acc: Vec<u32> = Vec::new();
                    for &u in &self.up[l][i] {
                        acc.extend_from_slice(&facets_above[l + 1][u as usize]);
                    }
                    acc.sort_unstable();
                    acc.dedup();
                    acc
                })
                .collect();
        }
        let proper: Vec<Vec<Face>> = (0..n)
            .map(|new_rank| {
                let old_level = n - new_rank; // old rank n−1−new_rank
                facets_above[old_level].clone()
            })
            .collect();
        FaceLattice::from_proper_ranks(n, proper)
            .expect("dual of a valid lattice is valid")
    }

    /// Rank-preserving incidence-preserving bijection test.
    pub fn is_isomorphic(&self, other: &FaceLattice) -> bool {
        if self.dimension != other.dimension
            || self.num_vertices != other.num_vertices
            || self.f_vector() != other.f_vector()
        {
            return false;
        }
        if self.dimension == 0 {
            return true;
        }
        let mut matcher = FlagMatcher::new(self, other);
        matcher.any_extension()
    }

    /// Canonical JSON export: proper ranks only, improper faces implied.
    pub fn to_json(&self) -> String {
        let view = LatticeJson {
            dimension: self.dimension,
            ranks: self.levels[1..=self.dimension].to_vec(),
        };
        serde_json::to_string(&view).expect("lattice serialization cannot fail")
    }

    /// Parse and fully validate lattice JSON (untrusted input).
    pub fn from_json(text: &str) -> Result<FaceLattice, LatticeError> {
        let view: LatticeJson =
            serde_json::from_str(text).map_err(|e| LatticeError::Json(e.to_string()))?;
        if view.dimension > MAX_JSON_DIMENSION {
            return Err(LatticeError::TooLarge(format!(
                "dimension {} exceeds {}",
                view.dimension, MAX_JSON_DIMENSION
            )));
        }
        let faces: usize = view.ranks.iter().map(|r| r.len()).sum();
        if faces > MAX_JSON_FACES {
            return Err(LatticeError::TooLarge(format!("{faces} faces")));
        }
        let refs: usize = view
            .ranks
            .iter()
            .flat_map(|r| r.iter())
            .map(|f| f.len())
            .sum();
        if refs > MAX_JSON_VERTEX_REFS {
            return Err(LatticeError::TooLarge(format!("{refs} vertex references")));
        }
        FaceLattice::from_proper_ranks(view.dimension, view.ranks)
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    dimension: usize,
    ranks: Vec<Vec<Face>>,
}

/// Cover lists per level: entry [l][i] holds neighbor indices of face i.
type IncidenceLists = Vec<Vec<Vec<u32>>>;

/// Subset-derived cover relations between consecutive levels.
fn incidence(levels: &[Vec<Face>]) -> (IncidenceLists, IncidenceLists) {
    let height = levels.len();
    let mut up: Vec<Vec<Vec<u32>>> = (0..height)
        .map(|l| vec![Vec::new(); levels[l].len()])
        .collect();
    let mut down: Vec<Vec<Vec<u32>>> = (0..height)
        .map(|l| vec![Vec::new(); levels[l].len()])
        .collect();
    for l in 0..height - 1 {
        for (i, a) in levels[l].iter().enumerate() {
            for (j, b) in levels[l + 1].iter().enumerate() {
                if is_subset(a, b) {
                    up[l][i].push(j as u32);
                    down[l + 1][j].push(i as u32);
                }
            }
        }
    }
    (up, down)
}

/// All flags of a lattice together with their i-adjacency structure.
///
/// Flag f's i-adjacent flag is the unique flag differing from f exactly at
/// rank i; existence and uniqueness are the diamond condition.
pub(crate) struct FlagSystem {
    pub flags: Vec<Vec<u32>>,
    /// adj[f][i] = index of the i-adjacent flag
    pub adj: Vec<Vec<u32>>,
}

impl FlagSystem {
    pub fn build(lattice: &FaceLattice) -> FlagSystem {
        let n = lattice.dimension;
        let mut flags: Vec<Vec<u32>> = Vec::new();
        lattice.for_each_flag(|flag| flags.push(flag.to_vec()));
        let index: HashMap<&[u32], u32> = flags
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i as u32))
            .collect();
        let mut adj = vec![vec![0u32; n]; flags.len()];
        let mut scratch: Vec<u32> = Vec::new();
        for (fi, flag) in flags.iter().enumerate() {
            for i in 0..n {
                let replacement = adjacent_face(lattice, flag, i);
                scratch.clear();
                scratch.extend_from_slice(flag);
                scratch[i] = replacement;
                adj[fi][i] = *index
                    .get(scratch.as_slice())
                    .expect("adjacent flag exists in a valid lattice");
            }
        }
        FlagSystem { flags, adj }
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }
}

/// The other rank-i face between flag[i−1] and flag[i+1].
fn adjacent_face(lattice: &FaceLattice, flag: &[u32], i: usize) -> u32 {
    let n = lattice.dimension;
    let current = flag[i];
    if i == 0 {
        // rank-0 faces below the 1-face (or below the top face when n = 1)
        let candidates: &[u32] = if n >= 2 {
            &lattice.down[2][flag[1] as usize]
        } else {
            &lattice.down[n + 1][0]
        };
        return other_of_two(candidates, current);
    }
    let over_lower: &[u32] = &lattice.up[i][flag[i - 1] as usize];
    if i < n - 1 {
        // rank-i faces over the (i−1)-face and under the (i+1)-face
        let upper_down: &[u32] = &lattice.down[i + 2][flag[i + 1] as usize];
        for &c in over_lower {
            if c != current && upper_down.contains(&c) {
                return c;
            }
        }
        unreachable!("diamond condition guarantees a second middle face");
    }
    // i = n−1: every candidate lies under the unique top face
    other_of_two(over_lower, current)
}

fn other_of_two(candidates: &[u32], current: u32) -> u32 {
    debug_assert_eq!(candidates.len(), 2);
    if candidates[0] == current {
        candidates[1]
    } else {
        candidates[0]
    }
}

/// Flag-based matcher: extends "base flag of `src` ↦ some flag of `dst`" to a
/// full rank-preserving bijection when one exists. Each image flag determines
/// at most one candidate map, which is then verified globally, so counting
/// successful extensions over all flags of `dst` counts automorphisms when
/// `src` and `dst` coincide.
pub(crate) struct FlagMatcher<'a> {
    src: &'a FaceLattice,
    dst: &'a FaceLattice,
    src_flags: FlagSystem,
    dst_flags: FlagSystem,
    // per-level face maps with epoch stamps, reused across targets
    face_map: Vec<Vec<u32>>,
    face_stamp: Vec<Vec<u32>>,
    image_stamp: Vec<Vec<u32>>,
    flag_stamp: Vec<u32>,
    epoch: u32,
    total_faces: usize,
    queue: Vec<(u32, u32)>,
}

impl<'a> FlagMatcher<'a> {
    /// Callers must pre-check dimension and f-vector equality.
    pub fn new(src: &'a FaceLattice, dst: &'a FaceLattice) -> FlagMatcher<'a> {
        debug_assert_eq!(src.dimension, dst.dimension);
        debug_assert_eq!(src.f_vector(), dst.f_vector());
        let src_flags = FlagSystem::build(src);
        let dst_flags = FlagSystem::build(dst);
        let n = src.dimension;
        let face_map: Vec<Vec<u32>> = (1..=n).map(|l| vec![0; src.levels[l].len()]).collect();
        let face_stamp: Vec<Vec<u32>> = (1..=n).map(|l| vec![0; src.levels[l].len()]).collect();
        let image_stamp: Vec<Vec<u32>> = (1..=n).map(|l| vec![0; dst.levels[l].len()]).collect();
        let flag_stamp = vec![0; src_flags.len()];
        let total_faces = src.face_count();
        FlagMatcher {
            src,
            dst,
            src_flags,
            dst_flags,
            face_map,
            face_stamp,
            image_stamp,
            flag_stamp,
            epoch: 0,
            total_faces,
            queue: Vec::new(),
        }
    }

    pub fn target_count(&self) -> usize {
        self.dst_flags.len()
    }

    /// Automorphism group order, for matchers with `src` and `dst` the same
    /// lattice. The verified extensions are exactly the Aut-orbit of the base
    /// flag (the stabilizer of a flag is trivial), so targets already in the
    /// orbit of the verified generators are skipped without re-testing: each
    /// success contributes its flag permutation as a generator and the orbit
    /// closure absorbs everything that generator reaches. Failed targets are
    /// proven dead by their own failed extension, so the scan stays exact on
    /// lattices that are not flag-transitive.
    pub fn count_extensions(&mut self) -> u64 {
        self.automorphism_vertex_maps(false).0
    }

    /// All automorphisms as vertex maps (composed along the orbit).
    pub fn vertex_maps(&mut self) -> Vec<Vec<u32>> {
        self.automorphism_vertex_maps(true).1
    }

    fn automorphism_vertex_maps(&mut self, collect: bool) -> (u64, Vec<Vec<u32>>) {
        let count = self.src_flags.len();
        debug_assert_eq!(count, self.dst_flags.len());
        let mut in_orbit = vec![false; count];
        let mut orbit: Vec<u32> = vec![0];
        in_orbit[0] = true;
        let mut generators: Vec<Vec<u32>> = Vec::new();
        let mut generator_maps: Vec<Vec<u32>> = Vec::new();
        // perms[k] is the vertex map of the automorphism reaching orbit[k]
        let mut perms: Vec<Vec<u32>> = Vec::new();
        if collect {
            perms.push((0..self.src.num_vertices as u32).collect());
        }

        for target in 0..count as u32 {
            if in_orbit[target as usize] {
                continue;
            }
            let Some((vertex_map, flag_perm)) = self.try_extend_full(target) else {
                continue; // proven: no automorphism maps the base flag here
            };
            generators.push(flag_perm);
            generator_maps.push(vertex_map);
            // close the orbit under all generators found so far
            let mut stack: Vec<u32> = orbit.clone();
            while let Some(x) = stack.pop() {
                for (g, perm) in generators.iter().enumerate() {
                    let y = perm[x as usize];
                    if !in_orbit[y as usize] {
                        in_orbit[y as usize] = true;
                        orbit.push(y);
                        stack.push(y);
                        if collect {
                            // φ_y = φ_g ∘ φ_x
                            let position = orbit.iter().position(|&o| o == x).unwrap();
                            let composed: Vec<u32> = perms[position]
                                .iter()
                                .map(|&v| generator_maps[g][v as usize])
                                .collect();
                            perms.push(composed);
                        }
                    }
                }
            }
        }
        (orbit.len() as u64, perms)
    }

    pub fn any_extension(&mut self) -> bool {
        (0..self.target_count()).any(|t| self.try_extend(t as u32).is_some())
    }

    /// Attempt the unique extension of base ↦ target; returns the vertex map.
    pub fn try_extend(&mut self, target: u32) -> Option<Vec<u32>> {
        let (assigned, _) = self.propagate(target, false)?;
        if assigned < self.total_faces {
            return None;
        }
        self.verify_vertex_map()
    }

    /// Like `try_extend`, but also returns the full flag permutation.
    fn try_extend_full(&mut self, target: u32) -> Option<(Vec<u32>, Vec<u32>)> {
        let (assigned, flag_perm) = self.propagate(target, true)?;
        if assigned < self.total_faces {
            return None;
        }
        let vertex_map = self.verify_vertex_map()?;
        Some((vertex_map, flag_perm))
    }

    /// BFS along flag adjacency from base ↦ target, recording face images.
    /// With `full` the walk covers every flag and the src → dst flag pairing
    /// is returned; otherwise it stops once all faces are assigned.
    fn propagate(&mut self, target: u32, full: bool) -> Option<(usize, Vec<u32>)> {
        let n = self.src.dimension;
        self.epoch += 1;
        let mut assigned = 0usize;
        let mut flag_perm = if full {
            vec![0u32; self.src_flags.len()]
        } else {
            Vec::new()
        };

        self.queue.clear();
        {
            let base = self.src_flags.flags[0].clone();
            let tgt = self.dst_flags.flags[target as usize].clone();
            for i in 0..n {
                if !self.assign(i, base[i], tgt[i], &mut assigned) {
                    return None;
                }
            }
            self.flag_stamp[0] = self.epoch;
            if full {
                flag_perm[0] = target;
            }
            self.queue.push((0, target));
        }

        let mut head = 0usize;
        while head < self.queue.len() && (full || assigned < self.total_faces) {
            let (sf, df) = self.queue[head];
            head += 1;
            for i in 0..n {
                let s_adj = self.src_flags.adj[sf as usize][i];
                let d_adj = self.dst_flags.adj[df as usize][i];
                if self.flag_stamp[s_adj as usize] == self.epoch {
                    continue;
                }
                let s_face = self.src_flags.flags[s_adj as usize][i];
                let d_face = self.dst_flags.flags[d_adj as usize][i];
                if !self.assign(i, s_face, d_face, &mut assigned) {
                    return None;
                }
                self.flag_stamp[s_adj as usize] = self.epoch;
                if full {
                    flag_perm[s_adj as usize] = d_adj;
                }
                self.queue.push((s_adj, d_adj));
            }
        }
        if full && self.queue.len() < self.src_flags.len() {
            return None; // flag graph not connected from the base flag
        }
        Some((assigned, flag_perm))
    }

    /// Global verification: the vertex map must be a bijection carrying every
    /// face onto its claimed image, rank by rank.
    fn verify_vertex_map(&self) -> Option<Vec<u32>> {
        let n = self.src.dimension;
        let vertex_map: Vec<u32> = (0..self.src.num_vertices)
            .map(|v| self.face_map[0][v])
            .collect();
        let mut image: Vec<u32> = Vec::new();
        for l in 1..=n {
            for (j, face) in self.src.levels[l].iter().enumerate() {
                let mapped = self.face_map[l - 1][j] as usize;
                image.clear();
                image.extend(face.iter().map(|&v| vertex_map[v as usize]));
                image.sort_unstable();
                if image != self.dst.levels[l][mapped] {
                    return None;
                }
            }
        }
        Some(vertex_map)
    }

    /// Record face s ↦ face d at proper rank `rank`; false on conflict.
    fn assign(&mut self, rank: usize, s: u32, d: u32, assigned: &mut usize) -> bool {
        let stamp = &mut self.face_stamp[rank][s as usize];
        if *stamp == self.epoch {
            return self.face_map[rank][s as usize] == d;
        }
        let image = &mut self.image_stamp[rank][d as usize];
        if *image == self.epoch {
            return false; // two sources claim the same image
        }
        *stamp = self.epoch;
        *image = self.epoch;
        self.face_map[rank][s as usize] = d;
        *assigned += 1;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[u32]) -> Face {
        v.to_vec()
    }

    /// Lattice of the p-gon, built inline to keep this module self-contained.
    fn polygon_lattice(p: u32) -> FaceLattice {
        let vertices: Vec<Face> = (0..p).map(|i| face(&[i])).collect();
        let edges: Vec<Face> = (0..p)
            .map(|i| {
                let mut e = vec![i, (i + 1) % p];
                e.sort_unstable();
                e
            })
            .collect();
        FaceLattice::from_proper_ranks(2, vec![vertices, edges]).unwrap()
    }

    fn tetrahedron() -> FaceLattice {
        let vertices: Vec<Face> = (0..4).map(|i| face(&[i])).collect();
        let mut edges = Vec::new();
        for i in 0..4u32 {
            for j in i + 1..4 {
                edges.push(face(&[i, j]));
            }
        }
        let mut triangles = Vec::new();
        for i in 0..4u32 {
            for j in i + 1..4 {
                for k in j + 1..4 {
                    triangles.push(face(&[i, j, k]));
                }
            }
        }
        FaceLattice::from_proper_ranks(3, vec![vertices, edges, triangles]).unwrap()
    }

    fn cube() -> FaceLattice {
        // vertex v = bits (x, y, z)
        let vertices: Vec<Face> = (0..8).map(|i| face(&[i])).collect();
        let mut edges = Vec::new();
        for v in 0..8u32 {
            for bit in [1, 2, 4] {
                let w = v ^ bit;
                if v < w {
                    edges.push(face(&[v, w]));
                }
            }
        }
        let mut squares = Vec::new();
        for fixed_bit in [1, 2, 4u32] {
            for value in [0, fixed_bit] {
                let sq: Vec<u32> = (0..8).filter(|v| v & fixed_bit == value).collect();
                squares.push(sq);
            }
        }
        FaceLattice::from_proper_ranks(3, vec![vertices, edges, squares]).unwrap()
    }

    /// Independent maximal-chain counter working only with subset tests.
    fn brute_force_chain_count(l: &FaceLattice) -> u64 {
        fn recurse(levels: &[Vec<Face>], level: usize, current: &Face) -> u64 {
            if level + 1 == levels.len() {
                return 1;
            }
            levels[level + 1]
                .iter()
                .filter(|g| is_subset(current, g))
                .map(|g| recurse(levels, level + 1, g))
                .sum()
        }
        recurse(l.levels(), 0, &Vec::new())
    }

    #[test]
    fn f_vector_and_euler_examples() {
        let t3 = tetrahedron();
        assert_eq!(t3.f_vector(), FVector(vec![4, 6, 4]));
        assert_eq!(t3.f_vector().euler_characteristic(), 2);
        assert_eq!(t3.euler_characteristic_full(), 0);

        let h3 = cube();
        assert_eq!(h3.f_vector(), FVector(vec![8, 12, 6]));
        assert_eq!(h3.f_vector().euler_characteristic(), 2);

        assert_eq!(FVector(vec![5, 10, 10, 5]).euler_characteristic(), 0);
        assert_eq!(FVector(vec![24, 96, 96, 24]).euler_characteristic(), 0);

        let segment = FaceLattice::from_proper_ranks(1, vec![vec![face(&[0]), face(&[1])]]).unwrap();
        assert_eq!(segment.f_vector(), FVector(vec![2]));
        assert_eq!(segment.euler_characteristic_full(), 0); // −1 + 2 − 1
        assert_eq!(segment.count_flags(), 2);

        assert_eq!(FaceLattice::point().euler_characteristic_full(), 0);
        assert_eq!(FaceLattice::point().count_flags(), 1);
    }

    #[test]
    fn flag_counts_match_brute_force() {
        for (lattice, expected) in [
            (tetrahedron(), 24),
            (cube(), 48),
            (polygon_lattice(5), 10),
            (polygon_lattice(12), 24),
        ] {
            assert_eq!(lattice.count_flags(), expected);
            assert_eq!(brute_force_chain_count(&lattice), expected);
        }
    }

    #[test]
    fn schlafli_recovery() {
        assert_eq!(cube().schlafli_symbol().unwrap().to_string(), "{4,3}");
        assert_eq!(tetrahedron().schlafli_symbol().unwrap().to_string(), "{3,3}");
        assert_eq!(polygon_lattice(7).schlafli_symbol().unwrap().to_string(), "{7}");
        assert_eq!(
            cube().dual().schlafli_symbol().unwrap().to_string(),
            "{3,4}"
        );
    }

    /// Valid polytopal lattice that is not regular: two triangles, three squares.
    fn triangular_prism() -> FaceLattice {
        let vertices: Vec<Face> = (0..6).map(|i| face(&[i])).collect();
        let edges: Vec<Face> = [
            [0, 1], [0, 2], [1, 2], [3, 4], [3, 5], [4, 5], [0, 3], [1, 4], [2, 5],
        ]
        .iter()
        .map(|e| e.to_vec())
        .collect();
        let faces: Vec<Face> = vec![
            face(&[0, 1, 2]),
            face(&[3, 4, 5]),
            face(&[0, 1, 3, 4]),
            face(&[0, 2, 3, 5]),
            face(&[1, 2, 4, 5]),
        ];
        FaceLattice::from_proper_ranks(3, vec![vertices, edges, faces]).unwrap()
    }

    #[test]
    fn non_regular_lattice_is_detected() {
        let prism = triangular_prism();
        assert!(prism.report().is_valid());
        assert!(matches!(
            prism.schlafli_symbol(),
            Err(LatticeError::NotRegular(_))
        ));
        // flag count exceeds the automorphism order: not flag-transitive
        assert_eq!(prism.count_flags(), 36);
        let mut matcher = FlagMatcher::new(&prism, &prism);
        assert_eq!(matcher.count_extensions(), 12);
        assert!(prism.is_isomorphic(&prism));
        assert!(!prism.is_isomorphic(&tetrahedron()));
    }

    #[test]
    fn dual_properties() {
        let h3 = cube();
        let octa = h3.dual();
        assert_eq!(octa.f_vector(), FVector(vec![6, 12, 8]));
        assert_eq!(octa.f_vector(), h3.f_vector().reversed());
        assert!(h3.dual().dual().is_isomorphic(&h3));

        let t3 = tetrahedron();
        assert!(t3.is_isomorphic(&t3.dual()));
        assert!(!h3.is_isomorphic(&octa));
    }

    #[test]
    fn isomorphism_ignores_labeling() {
        // pentagon with two different labelings
        let a = polygon_lattice(5);
        let relabeled: Vec<Face> = vec![
            face(&[0, 2]),
            face(&[2, 4]),
            face(&[1, 4]),
            face(&[1, 3]),
            face(&[0, 3]),
        ];
        let b = FaceLattice::from_proper_ranks(
            2,
            vec![(0..5).map(|i| face(&[i])).collect(), relabeled],
        )
        .unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&polygon_lattice(6)));
    }

    #[test]
    fn validation_catches_dangling_edge() {
        let vertices: Vec<Face> = (0..4).map(|i| face(&[i])).collect();
        let mut edges: Vec<Face> = vec![
            face(&[0, 1]),
            face(&[1, 2]),
            face(&[2, 3]),
            face(&[0, 3]),
        ];
        edges.push(face(&[0, 2])); // dangling diagonal
        let err = FaceLattice::from_proper_ranks(2, vec![vertices, edges]).unwrap_err();
        match err {
            LatticeError::Invalid(report) => {
                assert!(report
                    .violations
                    .iter()
                    .any(|v| v.kind == ViolationKind::Diamond));
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn validation_catches_missing_top() {
        let levels = vec![
            vec![face(&[])],
            vec![face(&[0]), face(&[1])],
            Vec::new(), // no maximal face
        ];
        let err = FaceLattice::from_levels(1, levels).unwrap_err();
        match err {
            LatticeError::Invalid(report) => {
                assert!(report
                    .violations
                    .iter()
                    .any(|v| v.kind == ViolationKind::Gradedness));
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn validation_rejects_disjoint_compounds() {
        // two disjoint triangles satisfy gradedness and the diamond condition
        // but are not the lattice of a polytope
        let vertices: Vec<Face> = (0..6).map(|i| face(&[i])).collect();
        let edges: Vec<Face> = vec![
            face(&[0, 1]),
            face(&[0, 2]),
            face(&[1, 2]),
            face(&[3, 4]),
            face(&[3, 5]),
            face(&[4, 5]),
        ];
        let err = FaceLattice::from_proper_ranks(2, vec![vertices, edges]).unwrap_err();
        match err {
            LatticeError::Invalid(report) => {
                assert!(report
                    .violations
                    .iter()
                    .any(|v| v.kind == ViolationKind::Connectivity));
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn validation_catches_missing_rank() {
        let vertices: Vec<Face> = (0..4).map(|i| face(&[i])).collect();
        let err = FaceLattice::from_proper_ranks(2, vec![vertices, Vec::new()]).unwrap_err();
        assert!(matches!(err, LatticeError::Invalid(_)));
    }

    #[test]
    fn constructor_outputs_validate_clean() {
        for lattice in [tetrahedron(), cube(), polygon_lattice(9), FaceLattice::point()] {
            assert!(lattice.report().is_valid());
        }
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        for lattice in [tetrahedron(), cube(), polygon_lattice(6)] {
            let text = lattice.to_json();
            let back = FaceLattice::from_json(&text).unwrap();
            assert_eq!(back, lattice);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(FaceLattice::from_json("not json").is_err());
        assert!(FaceLattice::from_json("{\"dimension\":99,\"ranks\":[]}").is_err());
        // wrong rank count
        assert!(FaceLattice::from_json("{\"dimension\":2,\"ranks\":[[[0],[1]]]}").is_err());
        // invalid lattice shape
        assert!(
            FaceLattice::from_json("{\"dimension\":1,\"ranks\":[[[0],[2]]]}").is_err()
        );
    }

    #[test]
    fn automorphism_counts_via_matcher() {
        let t3 = tetrahedron();
        let mut m = FlagMatcher::new(&t3, &t3);
        assert_eq!(m.count_extensions(), 24);

        let h3 = cube();
        let mut m = FlagMatcher::new(&h3, &h3);
        assert_eq!(m.count_extensions(), 48);

        let p7 = polygon_lattice(7);
        let mut m = FlagMatcher::new(&p7, &p7);
        assert_eq!(m.count_extensions(), 14);
    }
}
