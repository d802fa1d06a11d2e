//! 2x2 quaternionic matrices and the `Q̄ᵀQ = id` membership predicate.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::quaternion::Quaternion;

/// Hermitian quaternionic inner product on pairs, conjugate-linear in the
/// first slot: `⟨(u₁,u₂),(v₁,v₂)⟩ = ū₁v₁ + ū₂v₂`.
///
/// The conjugation slot is a fixed convention here; the zero-sets the crate
/// checks are symmetric under the mirror choice.
pub fn hermitian_inner(u: (Quaternion, Quaternion), v: (Quaternion, Quaternion)) -> Quaternion {
    u.0.conj() * v.0 + u.1.conj() * v.1
}

/// 2x2 quaternionic matrix with columns `(a, b)` and `(c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sp2Matrix {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

/// Membership defects under the two equivalent criteria.
#[derive(Debug, Clone, Copy)]
pub struct Sp2Defect {
    /// Max entry norm of `Q̄ᵀQ - id`.
    pub matrix: f64,
    /// Max of unit-column and hermitian-orthogonality defects.
    pub columns: f64,
}

impl Sp2Matrix {
    pub fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(Quaternion::ONE, Quaternion::ZERO, Quaternion::ZERO, Quaternion::ONE)
    }

    pub fn from_columns(c1: (Quaternion, Quaternion), c2: (Quaternion, Quaternion)) -> Self {
        Self::new(c1.0, c1.1, c2.0, c2.1)
    }

    pub fn col1(&self) -> (Quaternion, Quaternion) {
        (self.a, self.b)
    }

    pub fn col2(&self) -> (Quaternion, Quaternion) {
        (self.c, self.d)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.a.distance(&other.a).powi(2)
            + self.b.distance(&other.b).powi(2)
            + self.c.distance(&other.c).powi(2)
            + self.d.distance(&other.d).powi(2))
        .sqrt()
    }

    /// Both membership criteria; they must agree on the verdict at any
    /// reasonable tolerance, which the suite checks on constructed members
    /// and on generic non-members.
    pub fn membership_defect(&self) -> Sp2Defect {
        let c1 = self.col1();
        let c2 = self.col2();
        let g11 = hermitian_inner(c1, c1) - Quaternion::ONE;
        let g12 = hermitian_inner(c1, c2);
        let g21 = hermitian_inner(c2, c1);
        let g22 = hermitian_inner(c2, c2) - Quaternion::ONE;
        let matrix = g11.norm().max(g12.norm()).max(g21.norm()).max(g22.norm());

        let unit1 = (hermitian_inner(c1, c1).re() - 1.0).abs().max(hermitian_inner(c1, c1).im().norm());
        let unit2 = (hermitian_inner(c2, c2).re() - 1.0).abs().max(hermitian_inner(c2, c2).im().norm());
        let ortho = hermitian_inner(c1, c2).norm();
        let columns = unit1.max(unit2).max(ortho);
        Sp2Defect { matrix, columns }
    }

    pub fn is_member(&self, tol: f64) -> bool {
        self.membership_defect().matrix <= tol
    }

    /// Right multiplication by `diag(p, q)`.
    pub fn mul_diag_right(&self, p: Quaternion, q: Quaternion) -> Self {
        Self::new(self.a * p, self.b * p, self.c * q, self.d * q)
    }

    /// The conjugation-type action `q·Q = ((qaq̄, qbq̄), (qc, qd))`:
    /// first column conjugated, second column left-translated.
    pub fn conj_left_action(&self, q: &Quaternion) -> Self {
        let qc = q.conj();
        Self::new(*q * self.a * qc, *q * self.b * qc, *q * self.c, *q * self.d)
    }

    /// Generic non-member for negative controls: four independent
    /// unit-scaled entries are almost surely not hermitian-orthonormal.
    pub fn random_generic<R: Rng>(rng: &mut R) -> Self {
        Self::new(
            Quaternion::random_unit(rng),
            Quaternion::random_unit(rng),
            Quaternion::random_unit(rng),
            Quaternion::random_unit(rng),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_is_a_member() {
        let d = Sp2Matrix::identity().membership_defect();
        assert_eq!(d.matrix, 0.0);
        assert_eq!(d.columns, 0.0);
    }

    #[test]
    fn orthogonal_basis_columns_are_members() {
        // columns (i, 0) and (0, j): ⟨(i,0),(0,j)⟩ = ī·0 + 0·j = 0
        let m = Sp2Matrix::from_columns((Quaternion::I, Quaternion::ZERO), (Quaternion::ZERO, Quaternion::J));
        let d = m.membership_defect();
        assert!(d.matrix < 1e-15);
        assert!(d.columns < 1e-15);
    }

    #[test]
    fn repeated_column_fails() {
        let m = Sp2Matrix::from_columns((Quaternion::ONE, Quaternion::ZERO), (Quaternion::ONE, Quaternion::ZERO));
        let d = m.membership_defect();
        assert!(d.matrix >= 1.0);
        assert!(d.columns >= 1.0);
    }

    #[test]
    fn criteria_agree_on_generic_non_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..1000 {
            let m = Sp2Matrix::random_generic(&mut rng);
            let d = m.membership_defect();
            assert_eq!(d.matrix <= 1e-12, d.columns <= 1e-12);
        }
    }

    #[test]
    fn hermitian_inner_examples() {
        let one = Quaternion::ONE;
        let zero = Quaternion::ZERO;
        assert_eq!(hermitian_inner((one, zero), (zero, one)), zero);
        assert_eq!(hermitian_inner((Quaternion::I, zero), (Quaternion::I, zero)), one);
        assert_eq!(hermitian_inner((one, zero), (Quaternion::J, zero)), Quaternion::J);
    }

    #[test]
    fn hermitian_transformation_law() {
        // ⟨(quq̄, qvq̄), (qc, qd)⟩ = q ⟨(u,v),(c,d)⟩ for unit q
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..500 {
            let u = Quaternion::random_unit(&mut rng);
            let v = Quaternion::random_unit(&mut rng);
            let c = Quaternion::random_unit(&mut rng);
            let d = Quaternion::random_unit(&mut rng);
            let q = Quaternion::random_unit(&mut rng);
            let lhs = hermitian_inner((q * u * q.conj(), q * v * q.conj()), (q * c, q * d));
            let rhs = q * hermitian_inner((u, v), (c, d));
            assert!(lhs.distance(&rhs) < 1e-12);
        }
    }
}
