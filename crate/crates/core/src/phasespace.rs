//! Discrete phase-space geometry over GF(2^n): the N×N point grid, the
//! N(N+1) lines `a·q + b·p = c`, their grouping into N+1 striations, and the
//! labelling of quantum nets.
//!
//! Striation order is fixed:
//!
//! * 0: vertical lines `q = c`
//! * 1: horizontal lines `p = c`
//! * 2..=N: lines `p = s·q + c` for slope `s ≠ 0`, in increasing integer
//!   order of `s`
//!
//! Within a striation, lines are ordered by the integer encoding of `c`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::{FieldElement, Gf2n};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct PhasePoint {
    pub q: FieldElement,
    pub p: FieldElement,
}

impl PhasePoint {
    pub const ORIGIN: PhasePoint = PhasePoint {
        q: FieldElement::ZERO,
        p: FieldElement::ZERO,
    };

    pub fn new(q: FieldElement, p: FieldElement) -> Self {
        PhasePoint { q, p }
    }

    /// Position in DWF vectors: `q·N + p`.
    pub fn index(self, order: usize) -> usize {
        self.q.index() * order + self.p.index()
    }

    pub fn from_index(index: usize, order: usize) -> Self {
        PhasePoint {
            q: FieldElement::from_bits((index / order) as u8),
            p: FieldElement::from_bits((index % order) as u8),
        }
    }

    pub fn translate(self, alpha: FieldElement, beta: FieldElement) -> PhasePoint {
        translate(self, alpha, beta)
    }
}

/// Shift a point by `(alpha, beta)`.
pub fn translate(pt: PhasePoint, alpha: FieldElement, beta: FieldElement) -> PhasePoint {
    PhasePoint {
        q: pt.q + alpha,
        p: pt.p + beta,
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Line {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub striation: usize,
    pub points: Vec<PhasePoint>,
}

impl Line {
    pub fn contains(&self, pt: PhasePoint) -> bool {
        self.points.contains(&pt)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Striation {
    pub index: usize,
    pub a: FieldElement,
    pub b: FieldElement,
    pub lines: Vec<Line>,
}

impl Striation {
    /// Direction vector `(dq, dp)` shared by every line, `(b, a)` in
    /// characteristic 2.
    pub fn direction(&self) -> (FieldElement, FieldElement) {
        (self.b, self.a)
    }
}

#[derive(Clone, Debug)]
pub struct PhaseSpace {
    field: Gf2n,
    points: Vec<PhasePoint>,
    striations: Vec<Striation>,
}

/// Build the phase space of `n` qubits with the default field.
pub fn build_phase_space(n: u32) -> Result<PhaseSpace> {
    Ok(PhaseSpace::new(Gf2n::new(n)?))
}

impl PhaseSpace {
    pub fn new(field: Gf2n) -> Self {
        let points: Vec<PhasePoint> = field
            .elements()
            .flat_map(|q| field.elements().map(move |p| PhasePoint { q, p }))
            .collect();

        let mut coefficients = vec![
            (FieldElement::ONE, FieldElement::ZERO),
            (FieldElement::ZERO, FieldElement::ONE),
        ];
        coefficients.extend(field.elements().skip(1).map(|s| (s, FieldElement::ONE)));

        let striations = coefficients
            .into_iter()
            .enumerate()
            .map(|(index, (a, b))| {
                let lines = field
                    .elements()
                    .map(|c| Line {
                        a,
                        b,
                        c,
                        striation: index,
                        points: points
                            .iter()
                            .copied()
                            .filter(|pt| field.mul(a, pt.q) + field.mul(b, pt.p) == c)
                            .collect(),
                    })
                    .collect();
                Striation { index, a, b, lines }
            })
            .collect();

        PhaseSpace {
            field,
            points,
            striations,
        }
    }

    pub fn field(&self) -> &Gf2n {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    /// N = 2^n.
    pub fn order(&self) -> usize {
        self.field.order()
    }

    pub fn points(&self) -> &[PhasePoint] {
        &self.points
    }

    pub fn striations(&self) -> &[Striation] {
        &self.striations
    }

    pub fn lines(&self) -> impl Iterator<Item = &Line> {
        self.striations.iter().flat_map(|s| s.lines.iter())
    }

    /// Intercept `c` of the line of `striation` passing through `pt`.
    pub fn intercept(&self, striation: usize, pt: PhasePoint) -> FieldElement {
        let s = &self.striations[striation];
        self.field.mul(s.a, pt.q) + self.field.mul(s.b, pt.p)
    }

    /// The N+1 lines through `pt`, one per striation.
    pub fn lines_through(&self, pt: PhasePoint) -> impl Iterator<Item = &Line> + '_ {
        self.striations
            .iter()
            .map(move |s| &s.lines[self.intercept(s.index, pt).index()])
    }

    /// The N−1 nonzero translations mapping every line of `s` onto itself:
    /// the nonzero multiples of the direction vector, by increasing
    /// multiplier.
    pub fn invariant_translations(&self, s: &Striation) -> Vec<(FieldElement, FieldElement)> {
        let (dq, dp) = s.direction();
        self.field
            .elements()
            .skip(1)
            .map(|m| (self.field.mul(m, dq), self.field.mul(m, dp)))
            .collect()
    }

    /// A translation carrying the line `c = 0` of a striation onto the line
    /// with intercept `c`.
    pub fn translation_to_line(&self, striation: usize, c: FieldElement) -> (FieldElement, FieldElement) {
        if striation == 0 {
            (c, FieldElement::ZERO)
        } else {
            (FieldElement::ZERO, c)
        }
    }
}

/// An assignment of MUB vectors to lines, labelled by one field element per
/// striation. The offset of striation `i` picks which eigenvector sits on the
/// line through the origin; the rest follow by translation covariance.
///
/// `index` is the mixed-radix encoding `Σ_i offsets[i] · N^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuantumNet {
    degree: u32,
    offsets: Vec<FieldElement>,
    index: u128,
}

impl QuantumNet {
    /// N^(N+1).
    pub fn count(degree: u32) -> Result<u128> {
        crate::gf2n::check_degree(degree)?;
        let order = 1u128 << degree;
        Ok(order.pow(order as u32 + 1))
    }

    pub fn canonical(degree: u32) -> Result<Self> {
        Self::from_index(degree, 0)
    }

    pub fn from_index(degree: u32, index: u128) -> Result<Self> {
        let count = Self::count(degree)?;
        if index >= count {
            return Err(Error::NetIndexOutOfRange { index, count });
        }
        let order = 1u128 << degree;
        let mut rest = index;
        let offsets = (0..=order)
            .map(|_| {
                let digit = rest % order;
                rest /= order;
                FieldElement::from_bits(digit as u8)
            })
            .collect();
        Ok(QuantumNet {
            degree,
            offsets,
            index,
        })
    }

    pub fn from_offsets(degree: u32, offsets: Vec<FieldElement>) -> Result<Self> {
        crate::gf2n::check_degree(degree)?;
        let order = 1usize << degree;
        if offsets.len() != order + 1 {
            return Err(Error::DimensionMismatch {
                expected: order + 1,
                actual: offsets.len(),
            });
        }
        if let Some(bad) = offsets.iter().find(|o| o.index() >= order) {
            return Err(Error::ElementOutOfRange {
                value: bad.bits() as u32,
                degree,
            });
        }
        let index = offsets
            .iter()
            .rev()
            .fold(0u128, |acc, o| acc * order as u128 + o.index() as u128);
        Ok(QuantumNet {
            degree,
            offsets,
            index,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn index(&self) -> u128 {
        self.index
    }

    pub fn offsets(&self) -> &[FieldElement] {
        &self.offsets
    }
}

/// Upper bound on exhaustive net iteration.
pub const MAX_ENUMERABLE_NETS: u128 = 1_000_000;

/// Every net of `degree` qubits in increasing index order. Refuses when
/// the count exceeds [`MAX_ENUMERABLE_NETS`] (n >= 3).
pub fn enumerate_nets(degree: u32) -> Result<impl Iterator<Item = QuantumNet>> {
    let count = QuantumNet::count(degree)?;
    if count > MAX_ENUMERABLE_NETS {
        return Err(Error::TooManyNets(count));
    }
    Ok((0..count).map(move |k| QuantumNet::from_index(degree, k).expect("index in range")))
}
