//! Arithmetic in GF(2^n) for the small degrees used to label qubit phase
//! space (n = 1..=4).
//!
//! Elements are stored as bit patterns in the polynomial basis: bit `k` is
//! the coefficient of `x^k`. Addition is XOR; multiplication is carry-less
//! multiplication reduced by a fixed irreducible modulus.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported degree. Phase space for n = 4 already has 256 points.
pub const MAX_DEGREE: u32 = 4;

/// Pinned moduli, indexed by degree. `x + 1` for n = 1 makes GF(2) itself.
const MODULI: [u32; 5] = [0, 0b11, 0b111, 0b1011, 0b10011];

/// Default irreducible modulus for a degree, as an (n+1)-bit integer.
pub fn default_modulus(degree: u32) -> Result<u32> {
    check_degree(degree)?;
    Ok(MODULI[degree as usize])
}

pub(crate) fn check_degree(degree: u32) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&degree) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(degree))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw bit pattern. Range is checked by [`Gf2n::element`].
    pub const fn from_bits(bits: u8) -> Self {
        FieldElement(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// The integer encoding, used for indexing points and ordering slopes.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// characteristic 2: addition is XOR
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({})", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(2^n) for a fixed modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gf2n {
    degree: u32,
    modulus: u32,
}

impl Gf2n {
    /// GF(2^n) with the pinned default modulus.
    pub fn new(degree: u32) -> Result<Self> {
        Ok(Gf2n {
            degree,
            modulus: default_modulus(degree)?,
        })
    }

    /// GF(2^n) with a caller-chosen modulus, which must be irreducible.
    pub fn with_modulus(degree: u32, modulus: u32) -> Result<Self> {
        check_degree(degree)?;
        if poly_degree(modulus) != Some(degree) || !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { modulus, degree });
        }
        Ok(Gf2n { degree, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, N = 2^n.
    pub fn order(&self) -> usize {
        1 << self.degree
    }

    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if (bits as usize) < self.order() {
            Ok(FieldElement(bits as u8))
        } else {
            Err(Error::ElementOutOfRange {
                value: bits,
                degree: self.degree,
            })
        }
    }

    /// All elements in increasing integer order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.order() as u8).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut acc: u32 = 0;
        let mut x = a.0 as u32;
        let mut y = b.0 as u32;
        let top = 1u32 << self.degree;
        while y != 0 {
            if y & 1 != 0 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & top != 0 {
                x ^= self.modulus;
            }
        }
        FieldElement(acc as u8)
    }

    pub fn pow(&self, a: FieldElement, mut exp: u32) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via a^(N-2).
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order() as u32 - 2))
    }

    /// Absolute trace Tr(a) = a + a^2 + ... + a^(2^(n-1)), always 0 or 1.
    pub fn trace(&self, a: FieldElement) -> u8 {
        let mut acc = FieldElement::ZERO;
        let mut term = a;
        for _ in 0..self.degree {
            acc = acc + term;
            term = self.mul(term, term);
        }
        debug_assert!(acc.0 <= 1, "trace left the prime field");
        acc.0
    }
}

fn poly_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility by trial division with every polynomial of degree
/// 1..=deg/2. Exhaustive, which is fine for degree <= 4.
fn is_irreducible(p: u32) -> bool {
    let Some(d) = poly_degree(p) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    for divisor in 2u32..(1 << (d / 2 + 1)) {
        if poly_degree(divisor).unwrap() >= 1 && poly_rem(p, divisor) == 0 {
            return false;
        }
    }
    true
}

/// A basis {e_1..e_n} of GF(2^n) over F_2 together with its trace-dual
/// basis {f_1..f_n}, Tr(e_i f_j) = δ_ij.
///
/// Horizontal phase-space coordinates are expanded in `basis`, vertical
/// ones in `dual`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldBasis {
    field: Gf2n,
    basis: Vec<FieldElement>,
    dual: Vec<FieldElement>,
}

impl FieldBasis {
    pub fn new(field: Gf2n, basis: Vec<FieldElement>) -> Result<Self> {
        let dual = dual_basis(&field, &basis)?;
        Ok(FieldBasis { field, basis, dual })
    }

    /// The polynomial basis {1, x, x^2, ...}.
    pub fn polynomial(field: Gf2n) -> Self {
        let basis = (0..field.degree())
            .map(|k| FieldElement(1 << k))
            .collect();
        FieldBasis::new(field, basis).expect("polynomial basis is independent")
    }

    pub fn field(&self) -> &Gf2n {
        &self.field
    }

    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn dual(&self) -> &[FieldElement] {
        &self.dual
    }

    /// Coefficients of `x` in the primal basis packed as bits
    /// (bit k = coefficient of e_k). The coefficient of e_k is Tr(x f_k).
    pub fn coordinates(&self, x: FieldElement) -> u32 {
        self.dual
            .iter()
            .enumerate()
            .map(|(k, &f)| (self.field.trace(self.field.mul(x, f)) as u32) << k)
            .sum()
    }

    /// Coefficients of `x` in the dual basis (bit k = coefficient of f_k),
    /// which is Tr(x e_k).
    pub fn dual_coordinates(&self, x: FieldElement) -> u32 {
        self.basis
            .iter()
            .enumerate()
            .map(|(k, &e)| (self.field.trace(self.field.mul(x, e)) as u32) << k)
            .sum()
    }
}

/// Trace-dual of `basis`: the unique {f_j} with Tr(e_i f_j) = δ_ij.
///
/// Solved by inverting the Gram matrix G_ik = Tr(e_i e_k) over F_2; the
/// dual vectors are f_j = Σ_k (G^-1)_jk e_k.
pub fn dual_basis(field: &Gf2n, basis: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let n = field.degree() as usize;
    if basis.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: basis.len(),
        });
    }
    for &e in basis {
        field.element(e.bits() as u32)?;
    }
    if !spans_field(field, basis) {
        return Err(Error::DependentBasis);
    }

    // rows as bitmasks, augmented with the identity
    let mut gram: Vec<u32> = basis
        .iter()
        .map(|&ei| {
            basis
                .iter()
                .enumerate()
                .map(|(k, &ek)| (field.trace(field.mul(ei, ek)) as u32) << k)
                .sum()
        })
        .collect();
    let mut inv: Vec<u32> = (0..n).map(|i| 1 << i).collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| gram[r] >> col & 1 == 1)
            .ok_or(Error::DependentBasis)?;
        gram.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..n {
            if r != col && gram[r] >> col & 1 == 1 {
                gram[r] ^= gram[col];
                inv[r] ^= inv[col];
            }
        }
    }

    Ok(inv
        .iter()
        .map(|&row| {
            basis
                .iter()
                .enumerate()
                .filter(|(k, _)| row >> k & 1 == 1)
                .fold(FieldElement::ZERO, |acc, (_, &e)| acc + e)
        })
        .collect())
}

fn spans_field(field: &Gf2n, basis: &[FieldElement]) -> bool {
    let mut seen = vec![false; field.order()];
    for mask in 0u32..(1 << basis.len()) {
        let x = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(FieldElement::ZERO, |acc, (_, &e)| acc + e);
        seen[x.index()] = true;
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(n: u32) -> Gf2n {
        Gf2n::new(n).unwrap()
    }

    fn el(bits: u8) -> FieldElement {
        FieldElement::from_bits(bits)
    }

    #[test]
    fn addition_is_xor() {
        assert_eq!(gf(2).add(el(1), el(1)), el(0));
        assert_eq!(gf(2).add(el(2), el(3)), el(1));
        assert_eq!(gf(3).add(el(5), el(5)), el(0));
    }

    #[test]
    fn multiplication_reduces_by_modulus() {
        assert_eq!(gf(2).mul(el(2), el(2)), el(3));
        assert_eq!(gf(3).mul(el(2), el(4)), el(3));
        for n in 1..=MAX_DEGREE {
            let f = gf(n);
            for a in f.elements() {
                assert_eq!(f.mul(a, FieldElement::ONE), a);
            }
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(gf(1).inv(el(1)).unwrap(), el(1));
        assert_eq!(gf(2).inv(el(2)).unwrap(), el(3));
        for n in 1..=MAX_DEGREE {
            assert_eq!(gf(n).inv(FieldElement::ONE).unwrap(), FieldElement::ONE);
            assert!(matches!(gf(n).inv(FieldElement::ZERO), Err(Error::ZeroInverse)));
        }
    }

    #[test]
    fn traces() {
        assert_eq!(gf(2).trace(el(0)), 0);
        assert_eq!(gf(2).trace(el(2)), 1);
        assert_eq!(gf(1).trace(el(1)), 1);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for n in 1..=MAX_DEGREE {
            let f = gf(n);
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.trace(a + b), f.trace(a) ^ f.trace(b));
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_moduli_are_irreducible() {
        for n in 1..=MAX_DEGREE {
            let m = default_modulus(n).unwrap();
            assert!(Gf2n::with_modulus(n, m).is_ok());
        }
        // x^2 + 1 = (x + 1)^2
        assert!(matches!(
            Gf2n::with_modulus(2, 0b101),
            Err(Error::ReducibleModulus { .. })
        ));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert!(Gf2n::with_modulus(4, 0b10101).is_err());
        // alternative primitive modulus for n = 4
        assert!(Gf2n::with_modulus(4, 0b11001).is_ok());
        assert!(matches!(Gf2n::new(5), Err(Error::UnsupportedDegree(5))));
        assert!(matches!(Gf2n::new(0), Err(Error::UnsupportedDegree(0))));
    }

    /// Exhaustive search over all n-tuples of field elements.
    fn dual_by_search(f: &Gf2n, basis: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        let n = basis.len();
        let order = f.order();
        let mut hits = Vec::new();
        for code in 0..order.pow(n as u32) {
            let cand: Vec<FieldElement> = (0..n)
                .map(|j| el(((code / order.pow(j as u32)) % order) as u8))
                .collect();
            let ok = (0..n).all(|i| {
                (0..n).all(|j| f.trace(f.mul(basis[i], cand[j])) == u8::from(i == j))
            });
            if ok {
                hits.push(cand);
            }
        }
        hits
    }

    #[test]
    fn dual_basis_matches_exhaustive_search() {
        for n in 1..=3 {
            let f = gf(n);
            let b = FieldBasis::polynomial(f);
            let found = dual_by_search(&f, b.basis());
            assert_eq!(found.len(), 1, "dual basis not unique for n={n}");
            assert_eq!(found[0], b.dual());
        }
        // n = 1 is self-dual
        assert_eq!(FieldBasis::polynomial(gf(1)).dual(), &[el(1)]);
        // frozen from the search: x^2+x+1 with {1, x} has dual {1 + x, 1}
        assert_eq!(FieldBasis::polynomial(gf(2)).dual(), &[el(3), el(1)]);
    }

    #[test]
    fn dual_of_dual_is_identity() {
        for n in 1..=MAX_DEGREE {
            let f = gf(n);
            let b = FieldBasis::polynomial(f);
            let dd = dual_basis(&f, b.dual()).unwrap();
            assert_eq!(dd, b.basis());
        }
    }

    #[test]
    fn dependent_basis_rejected() {
        let f = gf(2);
        assert!(matches!(
            dual_basis(&f, &[el(1), el(1)]),
            Err(Error::DependentBasis)
        ));
        assert!(matches!(
            dual_basis(&f, &[el(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn coordinates_round_trip() {
        for n in 1..=MAX_DEGREE {
            let f = gf(n);
            let b = FieldBasis::polynomial(f);
            for x in f.elements() {
                // polynomial basis coordinates are the raw bits
                assert_eq!(b.coordinates(x), x.bits() as u32);
                let d = b.dual_coordinates(x);
                let rebuilt = b
                    .dual()
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| d >> k & 1 == 1)
                    .fold(FieldElement::ZERO, |acc, (_, &e)| acc + e);
                assert_eq!(rebuilt, x);
            }
        }
    }
}
