//! Structured ambient spaces and unit points inside them.
//!
//! An ambient space is an ordered list of factors, each a copy of the reals,
//! the imaginary quaternions, or the quaternions. Points store a flat
//! coordinate vector; an imaginary-quaternion factor keeps the full
//! four-slot quaternion layout with its real slot pinned to zero, so one
//! layout serves everywhere and purity is a checked invariant rather than a
//! type.

use serde::{Deserialize, Serialize};

use crate::algebra::Quaternion;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Factor {
    Real,
    ImQuaternion,
    Quaternion,
}

impl Factor {
    /// Geometric dimension contributed to the ambient space.
    pub fn dim(&self) -> usize {
        match self {
            Factor::Real => 1,
            Factor::ImQuaternion => 3,
            Factor::Quaternion => 4,
        }
    }

    /// Storage width in the flat coordinate vector.
    pub fn width(&self) -> usize {
        match self {
            Factor::Real => 1,
            Factor::ImQuaternion | Factor::Quaternion => 4,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Factor::Real => "R",
            Factor::ImQuaternion => "Im H",
            Factor::Quaternion => "H",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientSpace {
    factors: Vec<Factor>,
}

impl AmbientSpace {
    pub fn new(factors: Vec<Factor>) -> Self {
        Self { factors }
    }

    /// Unit quaternions, the 3-sphere.
    pub fn s3() -> Self {
        Self::new(vec![Factor::Quaternion])
    }

    /// Unit sphere of `R x H`.
    pub fn s4() -> Self {
        Self::new(vec![Factor::Real, Factor::Quaternion])
    }

    /// Unit sphere of `Im H x H`.
    pub fn s6() -> Self {
        Self::new(vec![Factor::ImQuaternion, Factor::Quaternion])
    }

    /// Unit sphere of `H x H`.
    pub fn s7() -> Self {
        Self::new(vec![Factor::Quaternion, Factor::Quaternion])
    }

    /// Unit sphere of `R x H x H`.
    pub fn s8() -> Self {
        Self::new(vec![Factor::Real, Factor::Quaternion, Factor::Quaternion])
    }

    /// Unit sphere of `Im H x H x H`.
    pub fn s10() -> Self {
        Self::new(vec![Factor::ImQuaternion, Factor::Quaternion, Factor::Quaternion])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Ambient dimension (imaginary factors count 3).
    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).sum()
    }

    /// Dimension of the unit sphere in this space.
    pub fn sphere_dim(&self) -> usize {
        self.dim() - 1
    }

    /// Flat storage width.
    pub fn width(&self) -> usize {
        self.factors.iter().map(Factor::width).sum()
    }

    fn offset(&self, factor: usize) -> usize {
        self.factors[..factor].iter().map(Factor::width).sum()
    }

    pub fn label(&self) -> String {
        let parts: Vec<&str> = self.factors.iter().map(Factor::label).collect();
        format!("S{} in {}", self.sphere_dim(), parts.join(" x "))
    }
}

/// One factor's worth of coordinates, used to assemble points.
#[derive(Debug, Clone, Copy)]
pub enum Part {
    Real(f64),
    Quat(Quaternion),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    space: AmbientSpace,
    coords: Vec<f64>,
}

impl SpherePoint {
    /// Assemble from per-factor parts; shape-checked, not normalized.
    pub fn from_parts(space: AmbientSpace, parts: &[Part]) -> Result<Self> {
        if parts.len() != space.factors().len() {
            return Err(Error::SpaceMismatch {
                expected: space.label(),
                found: format!("{} parts", parts.len()),
            });
        }
        let mut coords = Vec::with_capacity(space.width());
        for (factor, part) in space.factors().iter().zip(parts) {
            match (factor, part) {
                (Factor::Real, Part::Real(v)) => coords.push(*v),
                (Factor::Quaternion, Part::Quat(q)) => coords.extend_from_slice(&[q.w, q.x, q.y, q.z]),
                (Factor::ImQuaternion, Part::Quat(q)) => coords.extend_from_slice(&[q.w, q.x, q.y, q.z]),
                _ => {
                    return Err(Error::SpaceMismatch {
                        expected: space.label(),
                        found: "mismatched part kinds".into(),
                    })
                }
            }
        }
        Ok(Self { space, coords })
    }

    pub fn from_coords(space: AmbientSpace, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != space.width() {
            return Err(Error::SpaceMismatch {
                expected: space.label(),
                found: format!("{} coordinates", coords.len()),
            });
        }
        Ok(Self { space, coords })
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.space
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Real factor value at factor index `fi`.
    pub fn real(&self, fi: usize) -> f64 {
        debug_assert_eq!(self.space.factors()[fi], Factor::Real);
        self.coords[self.space.offset(fi)]
    }

    /// Quaternion (or imaginary-quaternion) factor at factor index `fi`.
    pub fn quat(&self, fi: usize) -> Quaternion {
        debug_assert_ne!(self.space.factors()[fi], Factor::Real);
        let o = self.space.offset(fi);
        Quaternion::new(self.coords[o], self.coords[o + 1], self.coords[o + 2], self.coords[o + 3])
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn unit_defect(&self) -> f64 {
        (self.norm() - 1.0).abs()
    }

    /// Max |real slot| over imaginary-quaternion factors.
    pub fn pure_defect(&self) -> f64 {
        self.space
            .factors()
            .iter()
            .enumerate()
            .filter(|(_, f)| **f == Factor::ImQuaternion)
            .map(|(fi, _)| self.coords[self.space.offset(fi)].abs())
            .fold(0.0, f64::max)
    }

    pub fn renormalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InversionOfZero);
        }
        Ok(Self {
            space: self.space.clone(),
            coords: self.coords.iter().map(|c| c / n).collect(),
        })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            space: self.space.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: self.space.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn distance(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.space, other.space);
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                expected: self.space.label(),
                found: other.space.label(),
            });
        }
        Ok(())
    }

    pub fn in_space(&self, space: &AmbientSpace) -> Result<()> {
        if &self.space != space {
            return Err(Error::SpaceMismatch {
                expected: space.label(),
                found: self.space.label(),
            });
        }
        Ok(())
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_add_up() {
        assert_eq!(AmbientSpace::s4().dim(), 5);
        assert_eq!(AmbientSpace::s6().dim(), 7);
        assert_eq!(AmbientSpace::s7().dim(), 8);
        assert_eq!(AmbientSpace::s8().dim(), 9);
        assert_eq!(AmbientSpace::s10().dim(), 11);
        assert_eq!(AmbientSpace::s10().sphere_dim(), 10);
    }

    #[test]
    fn factor_roundtrip() {
        let p = SpherePoint::from_parts(
            AmbientSpace::s8(),
            &[Part::Real(0.25), Part::Quat(Quaternion::I), Part::Quat(Quaternion::J.scale(0.5))],
        )
        .unwrap();
        assert_eq!(p.real(0), 0.25);
        assert_eq!(p.quat(1), Quaternion::I);
        assert_eq!(p.quat(2), Quaternion::J.scale(0.5));
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let r = SpherePoint::from_parts(AmbientSpace::s4(), &[Part::Real(1.0)]);
        assert!(matches!(r, Err(Error::SpaceMismatch { .. })));
        let r = SpherePoint::from_parts(AmbientSpace::s4(), &[Part::Quat(Quaternion::ONE), Part::Real(0.0)]);
        assert!(matches!(r, Err(Error::SpaceMismatch { .. })));
    }
}
