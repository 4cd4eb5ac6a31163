//! Schläfli symbols `{p,q,...}` and their classification into spherical
//! polytopes, Euclidean honeycombs and hyperbolic tessellations.
//!
//! Rank-2 symbols are classified by the exact rational criterion
//! `1/p + 1/q ⋚ 1/2`. Higher ranks are classified against the known complete
//! catalogs; a symbol outside them is reported as [`SymbolClass::NotRecognized`]
//! rather than guessed at.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("Schläfli symbol entries must be at least 3, got {0}")]
    EntryTooSmall(u32),
    #[error("cannot parse {0:?} as a Schläfli symbol like \"{{3,4,3}}\"")]
    Parse(String),
    #[error("dimension must be at least 1")]
    BadDimension,
}

/// A Schläfli symbol: a (possibly empty) list of integers ≥ 3.
///
/// The empty symbol `{}` denotes the segment, the only regular polytope in
/// dimension one; a symbol of length k names a (k+1)-dimensional object.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchlafliSymbol {
    entries: Vec<u32>,
}

impl SchlafliSymbol {
    pub fn new(entries: Vec<u32>) -> Result<Self, SymbolError> {
        if let Some(&bad) = entries.iter().find(|&&e| e < 3) {
            return Err(SymbolError::EntryTooSmall(bad));
        }
        Ok(SchlafliSymbol { entries })
    }

    /// The segment `{}`.
    pub fn segment() -> Self {
        SchlafliSymbol { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Dimension of the named polytope: length + 1.
    pub fn dimension(&self) -> usize {
        self.entries.len() + 1
    }

    /// The dual symbol: entries reversed. An involution.
    pub fn dual(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        SchlafliSymbol { entries }
    }

    fn is_all(&self, v: u32) -> bool {
        self.entries.iter().all(|&e| e == v)
    }

    /// `{3,3,...,3}` of the given length.
    pub fn simplex(len: usize) -> Self {
        SchlafliSymbol { entries: vec![3; len] }
    }

    /// `{4,3,...,3}` of the given length.
    pub fn hypercube(len: usize) -> Self {
        let mut entries = vec![3; len];
        if len > 0 {
            entries[0] = 4;
        }
        SchlafliSymbol { entries }
    }

    /// `{3,...,3,4}` of the given length.
    pub fn cross_polytope(len: usize) -> Self {
        SchlafliSymbol::hypercube(len).dual()
    }
}

impl fmt::Display for SchlafliSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SchlafliSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchlafliSymbol({self})")
    }
}

impl FromStr for SchlafliSymbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, SymbolError> {
        let err = || SymbolError::Parse(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(err)?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(SchlafliSymbol::segment());
        }
        let entries = inner
            .split(',')
            .map(|piece| piece.trim().parse::<u32>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        SchlafliSymbol::new(entries)
    }
}

impl Serialize for SchlafliSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SchlafliSymbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        SchlafliSymbol::from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// What a Schläfli symbol names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolClass {
    SphericalPolytope,
    EuclideanHoneycomb,
    Hyperbolic,
    NotRecognized,
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SymbolClass::SphericalPolytope => "spherical",
            SymbolClass::EuclideanHoneycomb => "euclidean",
            SymbolClass::Hyperbolic => "hyperbolic",
            SymbolClass::NotRecognized => "not-recognized",
        };
        f.write_str(name)
    }
}

/// Classify a symbol as polytope, honeycomb or hyperbolic tessellation.
pub fn classify(symbol: &SchlafliSymbol) -> SymbolClass {
    let e = symbol.entries();
    match e.len() {
        // the segment and all polygons {p}, p ≥ 3
        0 | 1 => SymbolClass::SphericalPolytope,
        2 => {
            // 1/p + 1/q vs 1/2, exactly
            let sum = rat(1, e[0] as i64) + rat(1, e[1] as i64);
            match sum.cmp(&rat(1, 2)) {
                std::cmp::Ordering::Greater => SymbolClass::SphericalPolytope,
                std::cmp::Ordering::Equal => SymbolClass::EuclideanHoneycomb,
                std::cmp::Ordering::Less => SymbolClass::Hyperbolic,
            }
        }
        3 => {
            const SPHERICAL_4D: [[u32; 3]; 6] = [
                [3, 3, 3],
                [4, 3, 3],
                [3, 3, 4],
                [3, 4, 3],
                [3, 3, 5],
                [5, 3, 3],
            ];
            if SPHERICAL_4D.iter().any(|s| s == e) {
                SymbolClass::SphericalPolytope
            } else if e == [4, 3, 4] {
                SymbolClass::EuclideanHoneycomb
            } else {
                SymbolClass::NotRecognized
            }
        }
        len => {
            let euclidean_rank4 =
                len == 4 && (e == [4, 3, 3, 4] || e == [3, 4, 3, 3] || e == [3, 3, 4, 3]);
            let cubic_honeycomb = e[0] == 4
                && e[len - 1] == 4
                && e[1..len - 1].iter().all(|&x| x == 3);
            if symbol.is_all(3)
                || *symbol == SchlafliSymbol::hypercube(len)
                || *symbol == SchlafliSymbol::cross_polytope(len)
            {
                SymbolClass::SphericalPolytope
            } else if euclidean_rank4 || cubic_honeycomb {
                SymbolClass::EuclideanHoneycomb
            } else {
                SymbolClass::NotRecognized
            }
        }
    }
}

/// The complete list of regular convex polytopes of one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Catalog {
    /// Dimension 2: `{p}` exists for every p ≥ 3.
    InfinitePolygonFamily,
    Finite(Vec<SchlafliSymbol>),
}

impl Catalog {
    pub fn len(&self) -> Option<usize> {
        match self {
            Catalog::InfinitePolygonFamily => None,
            Catalog::Finite(v) => Some(v.len()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }
}

/// All regular convex polytopes of the given dimension:
/// 1 for d=1, the infinite polygon family for d=2, 5 for d=3, 6 for d=4,
/// 3 for every d ≥ 5.
pub fn spherical_catalog(dimension: usize) -> Result<Catalog, SymbolError> {
    let sym = |entries: &[u32]| SchlafliSymbol::new(entries.to_vec()).unwrap();
    match dimension {
        0 => Err(SymbolError::BadDimension),
        1 => Ok(Catalog::Finite(vec![SchlafliSymbol::segment()])),
        2 => Ok(Catalog::InfinitePolygonFamily),
        3 => Ok(Catalog::Finite(vec![
            sym(&[3, 3]),
            sym(&[4, 3]),
            sym(&[3, 4]),
            sym(&[3, 5]),
            sym(&[5, 3]),
        ])),
        4 => Ok(Catalog::Finite(vec![
            sym(&[3, 3, 3]),
            sym(&[4, 3, 3]),
            sym(&[3, 3, 4]),
            sym(&[3, 4, 3]),
            sym(&[3, 3, 5]),
            sym(&[5, 3, 3]),
        ])),
        d => {
            let len = d - 1;
            Ok(Catalog::Finite(vec![
                SchlafliSymbol::simplex(len),
                SchlafliSymbol::hypercube(len),
                SchlafliSymbol::cross_polytope(len),
            ]))
        }
    }
}

/// Finite enumeration for dimension 2: `{p}` for 3 ≤ p ≤ bound.
pub fn polygon_catalog(bound: u32) -> Vec<SchlafliSymbol> {
    (3..=bound)
        .map(|p| SchlafliSymbol::new(vec![p]).unwrap())
        .collect()
}
