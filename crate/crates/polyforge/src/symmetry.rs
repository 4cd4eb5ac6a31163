//! Symmetry bookkeeping: combinatorial automorphism groups counted through
//! flag extensions, the rotation-subgroup halving, the 3-dimensional
//! edge rule |Rot| = 2A, and the binary polyhedral groups realized as
//! explicit finite groups of exact unit quaternions.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebras::Quaternion;
use crate::exactnum::QuadExt;
use crate::lattice::{FaceLattice, FlagMatcher};

/// Automorphism computations refuse lattices above this dimension by default.
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("dimension {0} exceeds the automorphism cap {1}")]
    CapExceeded(usize, usize),
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("generator is not a unit quaternion")]
    NotUnitNorm,
    #[error("bad group JSON: {0}")]
    BadGroupJson(String),
    #[error("automorphism order {0} is odd; no rotation subgroup of index 2")]
    OddGroupOrder(u64),
    #[error("operation requires dimension {expected}, lattice has {found}")]
    WrongDimension { expected: usize, found: usize },
}

/// A combinatorial symmetry, recorded by where it sends each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPermutation {
    image: Vec<u32>,
}

impl VertexPermutation {
    pub fn new(image: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            let slot = seen.get_mut(v as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(VertexPermutation { image })
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.image[v as usize]
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }
}

/// Order of the combinatorial automorphism group, counted by extending a
/// base flag to every flag; equals the flag count for regular polytopes.
pub fn automorphism_order(lattice: &FaceLattice) -> Result<u64, SymmetryError> {
    automorphism_order_with_cap(lattice, DEFAULT_AUTOMORPHISM_CAP)
}

pub fn automorphism_order_with_cap(
    lattice: &FaceLattice,
    cap: usize,
) -> Result<u64, SymmetryError> {
    if lattice.dimension() > cap {
        return Err(SymmetryError::CapExceeded(lattice.dimension(), cap));
    }
    if lattice.dimension() == 0 {
        return Ok(1);
    }
    let mut matcher = FlagMatcher::new(lattice, lattice);
    Ok(matcher.count_extensions())
}

/// Every automorphism as a vertex permutation; for tests and small lattices.
pub fn automorphisms(lattice: &FaceLattice) -> Result<Vec<VertexPermutation>, SymmetryError> {
    if lattice.dimension() > DEFAULT_AUTOMORPHISM_CAP {
        return Err(SymmetryError::CapExceeded(
            lattice.dimension(),
            DEFAULT_AUTOMORPHISM_CAP,
        ));
    }
    if lattice.dimension() == 0 {
        return Ok(vec![VertexPermutation { image: vec![0] }]);
    }
    let mut matcher = FlagMatcher::new(lattice, lattice);
    Ok(matcher
        .vertex_maps()
        .into_iter()
        .map(|image| VertexPermutation::new(image).expect("verified bijection"))
        .collect())
}

/// Half the full group order, per the rotation/reflection split.
pub fn rotation_order(lattice: &FaceLattice) -> Result<u64, SymmetryError> {
    rotation_order_with_cap(lattice, DEFAULT_AUTOMORPHISM_CAP)
}

pub fn rotation_order_with_cap(lattice: &FaceLattice, cap: usize) -> Result<u64, SymmetryError> {
    if lattice.dimension() < 2 {
        return Err(SymmetryError::WrongDimension {
            expected: 2,
            found: lattice.dimension(),
        });
    }
    let full = automorphism_order_with_cap(lattice, cap)?;
    if full % 2 != 0 {
        return Err(SymmetryError::OddGroupOrder(full));
    }
    Ok(full / 2)
}

/// 3-dimensional rule: the rotation group order is twice the edge count.
pub fn verify_edge_rule(lattice: &FaceLattice) -> Result<bool, SymmetryError> {
    if lattice.dimension() != 3 {
        return Err(SymmetryError::WrongDimension {
            expected: 3,
            found: lattice.dimension(),
        });
    }
    let edges = lattice.f_vector().counts()[1];
    Ok(rotation_order(lattice)? == 2 * edges)
}

/// A finite multiplicative group of exact unit quaternions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionGroup {
    /// canonically sorted by (w, x, y, z)
    elements: Vec<Quaternion>,
    generators: Vec<Quaternion>,
}

impl QuaternionGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    pub fn generators(&self) -> &[Quaternion] {
        &self.generators
    }

    pub fn contains(&self, q: &Quaternion) -> bool {
        self.elements
            .binary_search_by(|e| compare_quaternions(e, q))
            .is_ok()
    }

    pub fn is_closed_under_inverse(&self) -> bool {
        self.elements
            .iter()
            .all(|q| self.contains(&q.inverse().expect("group elements are nonzero")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupJson {
            order: self.order(),
            elements: self
                .elements
                .iter()
                .map(|q| q.components().map(|c| c.to_string()))
                .collect(),
        })
        .expect("group serialization cannot fail")
    }

    /// Parse a group back from its JSON form, re-verifying unit norms,
    /// distinctness and multiplicative closure (so untrusted input cannot
    /// forge a "group" that is not one).
    pub fn from_json(text: &str) -> Result<Self, SymmetryError> {
        const MAX_IMPORT_ORDER: usize = 2048;
        const MAX_COMPONENT_TEXT: usize = 512;
        let parsed: GroupJson = serde_json::from_str(text)
            .map_err(|e| SymmetryError::BadGroupJson(e.to_string()))?;
        if parsed.elements.len() > MAX_IMPORT_ORDER {
            return Err(SymmetryError::ClosureCapExceeded(MAX_IMPORT_ORDER));
        }
        if parsed.order != parsed.elements.len() {
            return Err(SymmetryError::BadGroupJson(format!(
                "order field {} does not match {} elements",
                parsed.order,
                parsed.elements.len()
            )));
        }
        let mut elements = Vec::with_capacity(parsed.elements.len());
        for comp in &parsed.elements {
            let parse = |s: &str| {
                if s.len() > MAX_COMPONENT_TEXT {
                    return Err(SymmetryError::BadGroupJson("oversized component".into()));
                }
                s.parse::<QuadExt>()
                    .map_err(|e| SymmetryError::BadGroupJson(e.to_string()))
            };
            elements.push(Quaternion::new(
                parse(&comp[0])?,
                parse(&comp[1])?,
                parse(&comp[2])?,
                parse(&comp[3])?,
            ));
        }
        let generators = elements.clone();
        let group = group_closure(&generators, elements.len().max(1))?;
        if group.order() != elements.len() {
            return Err(SymmetryError::BadGroupJson(
                "element set is not multiplicatively closed".into(),
            ));
        }
        Ok(group)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    elements: Vec<[String; 4]>,
}

fn compare_quaternions(a: &Quaternion, b: &Quaternion) -> std::cmp::Ordering {
    a.components().cmp(&b.components())
}

/// Multiplicative closure of unit-norm generators, failing above `cap`.
pub fn group_closure(
    generators: &[Quaternion],
    cap: usize,
) -> Result<QuaternionGroup, SymmetryError> {
    for g in generators {
        if g.norm() != QuadExt::one() {
            return Err(SymmetryError::NotUnitNorm);
        }
    }
    let mut seen: HashSet<Quaternion> = HashSet::new();
    let mut queue: VecDeque<Quaternion> = VecDeque::new();
    let identity = Quaternion::one();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(q) = queue.pop_front() {
        for g in generators {
            let product = &q * g;
            if seen.insert(product.clone()) {
                if seen.len() > cap {
                    return Err(SymmetryError::ClosureCapExceeded(cap));
                }
                queue.push_back(product);
            }
        }
    }
    let mut elements: Vec<Quaternion> = seen.into_iter().collect();
    elements.sort_by(compare_quaternions);
    Ok(QuaternionGroup {
        elements,
        generators: generators.to_vec(),
    })
}

/// The binary tetrahedral group 2·Alt₄ of order 24:
/// {±1, ±i, ±j, ±k} together with (±1 ±i ±j ±k)/2.
pub fn binary_tetrahedral() -> QuaternionGroup {
    let half = QuadExt::from_parts(1, 2, 0, 1);
    let s = Quaternion::new(half.clone(), half.clone(), half.clone(), half);
    group_closure(&[s, Quaternion::i()], 24).expect("binary tetrahedral closure has order 24")
}

/// The binary icosahedral group 2·Alt₅ of order 120 (the icosians),
/// generated by (1+i+j+k)/2 and (φ + φ⁻¹i + j)/2 over ℚ(√5).
pub fn binary_icosahedral() -> QuaternionGroup {
    let half = QuadExt::from_parts(1, 2, 0, 1);
    let s = Quaternion::new(half.clone(), half.clone(), half.clone(), half.clone());
    let phi_half = QuadExt::from_parts(1, 4, 1, 4); // φ/2
    let phi_inv_half = QuadExt::from_parts(-1, 4, 1, 4); // φ⁻¹/2
    let t = Quaternion::new(phi_half, phi_inv_half, half, QuadExt::zero());
    group_closure(&[s, t], 120).expect("binary icosahedral closure has order 120")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn polygon(p: u32) -> FaceLattice {
        crate::constructors::polygon(p).unwrap().lattice().clone()
    }

    #[test]
    fn rotation_orders() {
        let heptagon = polygon(7);
        assert_eq!(automorphism_order(&heptagon).unwrap(), 14);
        assert_eq!(rotation_order(&heptagon).unwrap(), 7);
        let square = polygon(4);
        assert_eq!(automorphism_order(&square).unwrap(), 8);
        assert_eq!(rotation_order(&square).unwrap(), 4);
        // the rotation group of the 4-simplex is the simple group of order 60
        let t4 = crate::constructors::simplex(4).unwrap();
        assert_eq!(rotation_order(t4.lattice()).unwrap(), 60);
        let h3 = crate::constructors::hypercube(3).unwrap();
        assert_eq!(rotation_order(h3.lattice()).unwrap(), 24);
    }

    #[test]
    fn family_orders_match_formulas_through_dimension_six() {
        let factorial = |n: u64| (1..=n).product::<u64>();
        for n in 1..=6usize {
            let h = crate::constructors::hypercube(n).unwrap();
            assert_eq!(
                automorphism_order(h.lattice()).unwrap(),
                (1u64 << n) * factorial(n as u64),
                "hypercube({n})"
            );
            let s = crate::constructors::simplex(n).unwrap();
            assert_eq!(
                automorphism_order(s.lattice()).unwrap(),
                factorial(n as u64 + 1),
                "simplex({n})"
            );
        }
    }

    #[test]
    fn dual_preserves_automorphism_order() {
        for lattice in [
            crate::constructors::hypercube(3).unwrap().lattice().clone(),
            crate::constructors::cross_polytope(4).unwrap().lattice().clone(),
            polygon(6),
            crate::constructors::icosahedron().unwrap().lattice().clone(),
        ] {
            assert_eq!(
                automorphism_order(&lattice).unwrap(),
                automorphism_order(&lattice.dual()).unwrap()
            );
        }
    }

    #[test]
    fn rotation_order_rejects_segment() {
        let segment = crate::constructors::segment().lattice().clone();
        assert!(matches!(
            rotation_order(&segment),
            Err(SymmetryError::WrongDimension { .. })
        ));
        assert_eq!(automorphism_order(&segment).unwrap(), 2);
    }

    #[test]
    fn automorphisms_are_bijections_forming_a_set() {
        let triangle = polygon(3);
        let perms = automorphisms(&triangle).unwrap();
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|p| p.is_identity()).count(), 1);
        for p in &perms {
            assert_eq!(p.image().len(), 3);
        }
    }

    #[test]
    fn closure_of_i_and_j_is_the_quaternion_group() {
        let group = group_closure(&[Quaternion::i(), Quaternion::j()], 16).unwrap();
        assert_eq!(group.order(), 8);
        for q in [
            Quaternion::one(),
            -Quaternion::one(),
            Quaternion::k(),
            -Quaternion::k(),
        ] {
            assert!(group.contains(&q));
        }
        assert!(group.is_closed_under_inverse());
    }

    #[test]
    fn trivial_closure() {
        let group = group_closure(&[Quaternion::one()], 4).unwrap();
        assert_eq!(group.order(), 1);
    }

    #[test]
    fn closure_rejects_non_unit_generators() {
        let err = group_closure(&[Quaternion::from_ints(2, 0, 0, 0)], 100).unwrap_err();
        assert_eq!(err, SymmetryError::NotUnitNorm);
    }

    #[test]
    fn closure_cap_exceeded_for_infinite_group() {
        // (3/5 + 4/5 i) has unit norm but infinite multiplicative order
        let q = Quaternion::new(
            QuadExt::new(rat(3, 5), rat(0, 1)),
            QuadExt::new(rat(4, 5), rat(0, 1)),
            QuadExt::zero(),
            QuadExt::zero(),
        );
        let err = group_closure(&[q], 200).unwrap_err();
        assert_eq!(err, SymmetryError::ClosureCapExceeded(200));
    }

    #[test]
    fn binary_tetrahedral_structure() {
        let group = binary_tetrahedral();
        assert_eq!(group.order(), 24);
        assert!(group.is_closed_under_inverse());
        assert!(group.contains(&-Quaternion::one()));
        for q in group.elements() {
            assert_eq!(q.norm(), QuadExt::one());
        }
        // no √5 appears: 8 unit quaternions plus 16 half-integer ones
        assert!(group
            .elements()
            .iter()
            .all(|q| q.components().iter().all(|c| c.is_rational())));
        let halves = group
            .elements()
            .iter()
            .filter(|q| q.components().iter().all(|c| !c.is_zero()))
            .count();
        assert_eq!(halves, 16);
    }

    #[test]
    fn binary_icosahedral_structure() {
        let group = binary_icosahedral();
        assert_eq!(group.order(), 120);
        assert!(group.is_closed_under_inverse());
        assert!(group.contains(&-Quaternion::one()));
        for q in group.elements() {
            assert_eq!(q.norm(), QuadExt::one());
        }
        // pairwise distinct by construction of the set; double-check sorting
        for pair in group.elements().windows(2) {
            assert_ne!(pair[0], pair[1]);
        }
    }

    #[test]
    fn group_json_round_trip() {
        let group = binary_tetrahedral();
        let text = group.to_json();
        let back = QuaternionGroup::from_json(&text).unwrap();
        assert_eq!(back.order(), group.order());
        assert_eq!(back.elements(), group.elements());
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn group_json_rejects_non_groups() {
        // a lone non-identity element is not closed
        let bogus = r#"{"order":1,"elements":[["0","1","0","0"]]}"#;
        assert!(QuaternionGroup::from_json(bogus).is_err());
        assert!(QuaternionGroup::from_json("junk").is_err());
        let wrong_count = r#"{"order":2,"elements":[["1","0","0","0"]]}"#;
        assert!(QuaternionGroup::from_json(wrong_count).is_err());
    }
}
