//! Exact quaternion and octonion arithmetic.
//!
//! Quaternions carry ℚ(√5) components so the icosians are representable;
//! octonions carry plain rational components. The octonion multiplication
//! table is generated by Cayley–Dickson doubling over the quaternion
//! subalgebra spanned by {1, e₁, e₂, e₄} and then checked against the
//! defining products e₄ = e₁e₂, e₅ = e₂e₃, e₆ = e₃e₁, e₇ = e₁(e₂e₃) and the
//! anti-involutive/anticommuting unit laws; a bad table aborts construction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::exactnum::{NumError, QuadExt, Rational};

/// Quaternion `w + x·i + y·j + z·k` over ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: QuadExt,
    pub x: QuadExt,
    pub y: QuadExt,
    pub z: QuadExt,
}

impl Quaternion {
    pub fn new(w: QuadExt, x: QuadExt, y: QuadExt, z: QuadExt) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(w.into(), x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Squared norm w² + x² + y² + z², an element of ℚ(√5).
    pub fn norm(&self) -> QuadExt {
        self.w.square() + self.x.square() + self.y.square() + self.z.square()
    }

    pub fn inverse(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let inv_norm = self.norm().inverse()?;
        let c = self.conjugate();
        Ok(Quaternion::new(
            c.w * &inv_norm,
            c.x * &inv_norm,
            c.y * &inv_norm,
            c.z * &inv_norm,
        ))
    }

    pub fn components(&self) -> [&QuadExt; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, r: &Quaternion) -> Quaternion {
        // Hamilton product
        Quaternion::new(
            &self.w * &r.w - &self.x * &r.x - &self.y * &r.y - &self.z * &r.z,
            &self.w * &r.x + &self.x * &r.w + &self.y * &r.z - &self.z * &r.y,
            &self.w * &r.y - &self.x * &r.z + &self.y * &r.w + &self.z * &r.x,
            &self.w * &r.z + &self.x * &r.y - &self.y * &r.x + &self.z * &r.w,
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        &self * &r
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.w + r.w, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.w - r.w, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// Octonion Σ cᵢ eᵢ with rational components; e₀ = 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Octonion {
    pub c: [Rational; 8],
}

impl Octonion {
    pub fn new(c: [Rational; 8]) -> Self {
        Octonion { c }
    }

    pub fn zero() -> Self {
        Octonion::new(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    /// The basis unit eᵢ, 0 ≤ i ≤ 7.
    pub fn basis(i: usize) -> Self {
        let mut o = Octonion::zero();
        o.c[i] = Rational::from_integer(1.into());
        o
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Conjugate: all signs flipped except the real part.
    pub fn conjugate(&self) -> Self {
        let mut c = self.c.clone();
        for x in c.iter_mut().skip(1) {
            *x = -x.clone();
        }
        Octonion::new(c)
    }

    /// Norm ō·o = Σ cᵢ², a rational.
    pub fn norm(&self) -> Rational {
        self.c.iter().map(|x| x * x).sum()
    }

    pub fn inverse(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let n = self.norm();
        let mut c = self.conjugate().c;
        for x in c.iter_mut() {
            *x = &*x / &n;
        }
        Ok(Octonion::new(c))
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, r: Octonion) -> Octonion {
        Octonion::new(std::array::from_fn(|i| &self.c[i] + &r.c[i]))
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, r: Octonion) -> Octonion {
        Octonion::new(std::array::from_fn(|i| &self.c[i] - &r.c[i]))
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(std::array::from_fn(|i| -self.c[i].clone()))
    }
}

impl Mul<&Octonion> for &Octonion {
    type Output = Octonion;
    fn mul(self, r: &Octonion) -> Octonion {
        let table = octonion_table();
        let mut acc = Octonion::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if r.c[j].is_zero() {
                    continue;
                }
                let BasisProduct { sign, index } = table.product(i, j);
                let term = &self.c[i] * &r.c[j];
                if sign > 0 {
                    acc.c[index] = &acc.c[index] + &term;
                } else {
                    acc.c[index] = &acc.c[index] - &term;
                }
            }
        }
        acc
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, r: Octonion) -> Octonion {
        &self * &r
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion[")?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// `(ab)c − a(bc)`; identically zero exactly for associative algebras.
pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
    (&(a * b) * c) - (a * &(b * c))
}

/// Signed basis product: eᵢ·eⱼ = sign · e_index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

impl BasisProduct {
    /// Rendering used in the emitted table: "+e4", "-e7", "+1", "-1".
    pub fn label(&self) -> String {
        let sign = if self.sign >= 0 { '+' } else { '-' };
        if self.index == 0 {
            format!("{sign}1")
        } else {
            format!("{sign}e{}", self.index)
        }
    }
}

/// The full signed 8×8 basis multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctonionTable {
    entries: [[BasisProduct; 8]; 8],
}

impl OctonionTable {
    pub fn product(&self, i: usize, j: usize) -> BasisProduct {
        self.entries[i][j]
    }
}

/// Build and verify the octonion multiplication table.
///
/// Panics if the generated table violates the unit laws; that would mean the
/// pinned basis convention is inconsistent and nothing downstream holds.
pub fn build_octonion_table() -> OctonionTable {
    // Basis dictionary over Cayley–Dickson pairs (a, b) of quaternions:
    // e0=(1,0) e1=(i,0) e2=(j,0) e4=(k,0) e3=(0,1) e5=(0,j) e6=(0,−i) e7=(0,−k)
    let q = |w: i64, x: i64, y: i64, z: i64| Quaternion::from_ints(w, x, y, z);
    let basis: [(Quaternion, Quaternion); 8] = [
        (q(1, 0, 0, 0), q(0, 0, 0, 0)),
        (q(0, 1, 0, 0), q(0, 0, 0, 0)),
        (q(0, 0, 1, 0), q(0, 0, 0, 0)),
        (q(0, 0, 0, 0), q(1, 0, 0, 0)),
        (q(0, 0, 0, 1), q(0, 0, 0, 0)),
        (q(0, 0, 0, 0), q(0, 0, 1, 0)),
        (q(0, 0, 0, 0), q(0, -1, 0, 0)),
        (q(0, 0, 0, 0), q(0, 0, 0, -1)),
    ];
    // Cayley–Dickson product: (a, b)(c, d) = (ac − d̄b, da + bc̄)
    let cd_mul = |l: &(Quaternion, Quaternion), r: &(Quaternion, Quaternion)| {
        let (a, b) = l;
        let (c, d) = r;
        (a * c - &d.conjugate() * b, d * a + b * &c.conjugate())
    };
    let locate = |p: &(Quaternion, Quaternion)| -> BasisProduct {
        for (index, e) in basis.iter().enumerate() {
            if p == e {
                return BasisProduct { sign: 1, index };
            }
            let negated = (-e.0.clone(), -e.1.clone());
            if *p == negated {
                return BasisProduct { sign: -1, index };
            }
        }
        panic!("octonion basis product landed outside the signed basis");
    };
    let entries: [[BasisProduct; 8]; 8] = std::array::from_fn(|i| {
        std::array::from_fn(|j| locate(&cd_mul(&basis[i], &basis[j])))
    });
    let table = OctonionTable { entries };
    verify_table(&table);
    table
}

/// Unit laws the table must satisfy; inconsistency is unrecoverable.
fn verify_table(t: &OctonionTable) {
    let p = |i, j| t.product(i, j);
    for i in 1..8 {
        assert_eq!(p(i, i), BasisProduct { sign: -1, index: 0 }, "e{i}² must be −1");
        for j in 1..8 {
            if i == j {
                continue;
            }
            let ij = p(i, j);
            let ji = p(j, i);
            assert_ne!(ij.index, 0, "distinct imaginary units multiply to an imaginary unit");
            assert_eq!(ij.index, ji.index, "e{i}e{j} and e{j}e{i} must agree up to sign");
            assert_eq!(ij.sign, -ji.sign, "e{i} and e{j} must anticommute");
        }
    }
    for i in 0..8 {
        assert_eq!(p(0, i), BasisProduct { sign: 1, index: i });
        assert_eq!(p(i, 0), BasisProduct { sign: 1, index: i });
    }
    // the four defining products
    assert_eq!(p(1, 2), BasisProduct { sign: 1, index: 4 });
    assert_eq!(p(2, 3), BasisProduct { sign: 1, index: 5 });
    assert_eq!(p(3, 1), BasisProduct { sign: 1, index: 6 });
    assert_eq!(p(1, 5), BasisProduct { sign: 1, index: 7 }); // e₁(e₂e₃) = e₇
}

/// Shared table; built and verified once.
pub fn octonion_table() -> &'static OctonionTable {
    static TABLE: OnceLock<OctonionTable> = OnceLock::new();
    TABLE.get_or_init(build_octonion_table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -k.clone());
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -Quaternion::one());
        let a = Quaternion::from_ints(3, -2, 5, 7);
        assert_eq!(&a * &Quaternion::one(), a);
    }

    #[test]
    fn quaternion_norm_and_inverse() {
        let half = QuadExt::from_parts(1, 2, 0, 1);
        let s = Quaternion::new(half.clone(), half.clone(), half.clone(), half);
        assert_eq!(s.norm(), QuadExt::one()); // (1+i+j+k)/2 is a unit
        assert_eq!(Quaternion::i().inverse().unwrap(), -Quaternion::i());
        let a = Quaternion::from_ints(1, 2, 0, 0);
        assert_eq!(&a * &a.inverse().unwrap(), Quaternion::one());
        assert!(Quaternion::zero().inverse().is_err());
    }

    #[test]
    fn quaternion_norm_multiplicative() {
        let phi = QuadExt::golden_ratio();
        let a = Quaternion::new(phi.clone(), QuadExt::one(), QuadExt::zero(), -phi.clone());
        let b = Quaternion::new(
            QuadExt::from_parts(1, 3, 2, 1),
            phi,
            QuadExt::from_int(-2),
            QuadExt::sqrt5(),
        );
        assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn table_matches_defining_products() {
        let t = octonion_table();
        assert_eq!(t.product(1, 2).label(), "+e4");
        assert_eq!(t.product(2, 1).label(), "-e4");
        assert_eq!(t.product(2, 3).label(), "+e5");
        assert_eq!(t.product(3, 1).label(), "+e6");
        assert_eq!(t.product(3, 3).label(), "-1");
        assert_eq!(t.product(0, 7).label(), "+e7");
    }

    #[test]
    fn octonion_products() {
        let e = Octonion::basis;
        assert_eq!(&e(2) * &e(3), e(5));
        assert_eq!(&e(1) * &(&e(2) * &e(3)), e(7));
        let a = Octonion::new(std::array::from_fn(|i| rat(i as i64 - 3, 2)));
        assert_eq!(&a * &Octonion::one(), a);
    }

    #[test]
    fn octonion_conj_norm_inverse() {
        let e = Octonion::basis;
        let x = Octonion::one() + e(1);
        assert_eq!(x.norm(), rat(2, 1));
        assert_eq!(e(7).inverse().unwrap(), -e(7));
        let a = Octonion::new(std::array::from_fn(|i| rat(2 * i as i64 + 1, 3)));
        assert_eq!(&a * &a.inverse().unwrap(), Octonion::one());
        assert_eq!(a.conjugate().conjugate(), a);
        assert!(Octonion::zero().inverse().is_err());
    }

    #[test]
    fn associativity_is_lost_exactly_as_stated() {
        let e = Octonion::basis;
        // (e₁e₂)e₃ = −e₁(e₂e₃), so the associator is −2e₇
        let assoc = associator(&e(1), &e(2), &e(3));
        let minus_two_e7 = Octonion::new(std::array::from_fn(|i| {
            if i == 7 {
                rat(-2, 1)
            } else {
                rat(0, 1)
            }
        }));
        assert_eq!(assoc, minus_two_e7);
        let a = Octonion::new(std::array::from_fn(|i| rat(i as i64, 5)));
        let b = Octonion::new(std::array::from_fn(|i| rat(7 - i as i64, 2)));
        assert_eq!(associator(&a, &b, &Octonion::one()), Octonion::zero());
    }

    #[test]
    fn alternativity_on_basis_triples() {
        // property of the pinned table: (aa)b = a(ab) and (ab)b = a(bb)
        for i in 0..8 {
            for j in 0..8 {
                let a = Octonion::basis(i);
                let b = Octonion::basis(j);
                assert_eq!(associator(&a, &a, &b), Octonion::zero());
                assert_eq!(associator(&a, &b, &b), Octonion::zero());
            }
        }
    }

    #[test]
    fn quaternion_basis_associators_vanish() {
        let units = [
            Quaternion::one(),
            Quaternion::i(),
            Quaternion::j(),
            Quaternion::k(),
        ];
        for a in &units {
            for b in &units {
                for c in &units {
                    let left = &(a * b) * c;
                    let right = a * &(b * c);
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn octonion_norm_multiplicative_sample() {
        let a = Octonion::new(std::array::from_fn(|i| rat(i as i64 - 4, 3)));
        let b = Octonion::new(std::array::from_fn(|i| rat(2 * i as i64 - 7, 5)));
        assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }
}
