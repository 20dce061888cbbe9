use num_rational::BigRational;
use num_traits::pow;
use serde::Serialize;

use super::DegreeSequence;
use crate::scalar::{rational_string, Scalar};

pub const DELTA_STAR_CAP: u32 = 1_000_000;

/// The small component shapes the invariants are attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundedClass {
    Edge,
    Triangle,
    TrianglePendant,
    K4MinusE,
    K4,
    K5Plus,
}

impl BoundedClass {
    pub const ALL: [BoundedClass; 6] = [
        BoundedClass::Edge,
        BoundedClass::Triangle,
        BoundedClass::TrianglePendant,
        BoundedClass::K4MinusE,
        BoundedClass::K4,
        BoundedClass::K5Plus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BoundedClass::Edge => "edge",
            BoundedClass::Triangle => "triangle",
            BoundedClass::TrianglePendant => "triangle_pendant",
            BoundedClass::K4MinusE => "k4_minus_e",
            BoundedClass::K4 => "k4",
            BoundedClass::K5Plus => "k5_plus",
        }
    }
}

/// Small-component invariants of a degree sequence, evaluated in `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSet<T> {
    pub u_edge: T,
    pub u_triangle: T,
    pub u_triangle_pendant: T,
    pub u_k4_minus_e: T,
    pub u_k4: T,
    pub u_k5_plus: T,
    pub d_star: u64,
    pub delta_star: u32,
}

/// Evaluates every invariant of `seq` in the scalar type `T`.
///
/// With `T = BigRational` the results are exact; `m^6` alone overflows
/// `u64` once `m` passes about 1600.
pub fn compute_invariants<T: Scalar>(seq: &DegreeSequence) -> InvariantSet<T> {
    let c = |x: u64| T::from_count(x);
    let n1 = seq.count(1);
    let n2 = seq.count(2);
    let n3 = seq.count(3);
    let m = c(seq.m());
    let n = c(seq.n() as u64);

    let n1_less_1 = c(n1.saturating_sub(1));
    let n2_less_1 = c(n2.saturating_sub(1));
    let n2_less_2 = c(n2.saturating_sub(2));
    let n3_less_1 = c(n3.saturating_sub(1));
    let n3_less_3 = c(n3.saturating_sub(3));

    let m_pow = |k: usize| pow(m.clone(), k);

    InvariantSet {
        u_edge: pow(n1_less_1, 2) / m.clone(),
        u_triangle: pow(n2_less_2, 3) / m_pow(3),
        u_triangle_pendant: c(n1) * pow(n2_less_1.clone(), 2) * c(n3) / m_pow(4),
        u_k4_minus_e: pow(n2_less_1, 2) * pow(n3_less_1, 2) / m_pow(5),
        u_k4: pow(n3_less_3, 4) / m_pow(6),
        u_k5_plus: n / m_pow(6),
        d_star: seq.d_star(),
        delta_star: seq.delta_star(),
    }
}

impl<T: Scalar> InvariantSet<T> {
    pub fn compute(seq: &DegreeSequence) -> Self {
        compute_invariants(seq)
    }

    pub fn get(&self, class: BoundedClass) -> &T {
        match class {
            BoundedClass::Edge => &self.u_edge,
            BoundedClass::Triangle => &self.u_triangle,
            BoundedClass::TrianglePendant => &self.u_triangle_pendant,
            BoundedClass::K4MinusE => &self.u_k4_minus_e,
            BoundedClass::K4 => &self.u_k4,
            BoundedClass::K5Plus => &self.u_k5_plus,
        }
    }

    /// Sum of the six invariants: the disconnection probability bound up to
    /// its unspecified constant factor.
    pub fn disconnection_bound(&self) -> T {
        BoundedClass::ALL
            .iter()
            .fold(T::zero(), |acc, &class| acc + self.get(class).clone())
    }

    pub fn to_f64(&self) -> InvariantSet<f64> {
        InvariantSet {
            u_edge: self.u_edge.to_f64_lossy(),
            u_triangle: self.u_triangle.to_f64_lossy(),
            u_triangle_pendant: self.u_triangle_pendant.to_f64_lossy(),
            u_k4_minus_e: self.u_k4_minus_e.to_f64_lossy(),
            u_k4: self.u_k4.to_f64_lossy(),
            u_k5_plus: self.u_k5_plus.to_f64_lossy(),
            d_star: self.d_star,
            delta_star: self.delta_star,
        }
    }
}

/// An exact value with its float mirror.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalValue {
    pub rational: String,
    pub float: f64,
}

impl From<&BigRational> for RationalValue {
    fn from(value: &BigRational) -> Self {
        RationalValue {
            rational: rational_string(value),
            float: value.to_f64_lossy(),
        }
    }
}

/// Serializable form of the exact invariants and their sum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub u_edge: RationalValue,
    pub u_triangle: RationalValue,
    pub u_triangle_pendant: RationalValue,
    pub u_k4_minus_e: RationalValue,
    pub u_k4: RationalValue,
    pub u_k5_plus: RationalValue,
    pub d_star: u64,
    pub delta_star: u32,
    pub bound: RationalValue,
}

impl From<&InvariantSet<BigRational>> for InvariantReport {
    fn from(inv: &InvariantSet<BigRational>) -> Self {
        InvariantReport {
            u_edge: (&inv.u_edge).into(),
            u_triangle: (&inv.u_triangle).into(),
            u_triangle_pendant: (&inv.u_triangle_pendant).into(),
            u_k4_minus_e: (&inv.u_k4_minus_e).into(),
            u_k4: (&inv.u_k4).into(),
            u_k5_plus: (&inv.u_k5_plus).into(),
            d_star: inv.d_star,
            delta_star: inv.delta_star,
            bound: (&inv.disconnection_bound()).into(),
        }
    }
}
