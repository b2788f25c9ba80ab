//! 2-extensors (Plücker coordinates) of lines and screws in projective
//! 3-space, plus the 4-point bracket.
//!
//! A 2-extensor is stored in the coordinate order
//! `(d14, d24, d34, d23, d31, d12)`: the six 2x2 minors of the 2x4 matrix
//! whose rows are the two homogeneous points being joined. Decomposable
//! extensors (joins of two points) satisfy the Grassmann-Plücker relation
//! `d14*d23 + d24*d31 + d34*d12 = 0`; weighted sums of extensors (screws)
//! need not.


use crate::rat::{Rat, Scalar};

pub type HomPoint<T> = [T; 4];

#[derive(Clone, Debug, PartialEq)]
pub struct Extensor2<T>(pub [T; 6]);

/// Exterior product a ∨ b of two homogeneous points.
pub fn join<T: Scalar>(a: &HomPoint<T>, b: &HomPoint<T>) -> Extensor2<T> {
    let minor = |i: usize, j: usize| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
    Extensor2([
        minor(0, 3), // d14
        minor(1, 3), // d24
        minor(2, 3), // d34
        minor(1, 2), // d23
        minor(2, 0), // d31
        minor(0, 1), // d12
    ])
}

impl<T: Scalar> Extensor2<T> {
    pub fn zero() -> Self {
        Extensor2(std::array::from_fn(|_| T::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self) -> Self {
        Extensor2(std::array::from_fn(|i| -self.0[i].clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Extensor2(std::array::from_fn(|i| {
            self.0[i].clone() + other.0[i].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Extensor2(std::array::from_fn(|i| {
            self.0[i].clone() - other.0[i].clone()
        }))
    }

    pub fn scale(&self, s: &T) -> Self {
        Extensor2(std::array::from_fn(|i| self.0[i].clone() * s.clone()))
    }

    /// Left side of the Grassmann-Plücker relation; zero iff decomposable.
    pub fn plucker_residual(&self) -> T {
        let d = &self.0;
        d[0].clone() * d[3].clone() + d[1].clone() * d[4].clone() + d[2].clone() * d[5].clone()
    }

    /// Join with a point, giving the four coordinates of the 3-extensor
    /// on the basis (e234, e134, e124, e123). Vanishes iff the extensor is a
    /// line through the point.
    pub fn wedge_point(&self, q: &HomPoint<T>) -> [T; 4] {
        let d14 = &self.0[0];
        let d24 = &self.0[1];
        let d34 = &self.0[2];
        let d23 = &self.0[3];
        let d31 = &self.0[4];
        let d12 = &self.0[5];
        [
            d23.clone() * q[3].clone() - d24.clone() * q[2].clone() + d34.clone() * q[1].clone(),
            -(d31.clone() * q[3].clone()) - d14.clone() * q[2].clone()
                + d34.clone() * q[0].clone(),
            d12.clone() * q[3].clone() - d14.clone() * q[1].clone() + d24.clone() * q[0].clone(),
            d12.clone() * q[2].clone() + d31.clone() * q[1].clone() + d23.clone() * q[0].clone(),
        ]
    }
}

impl Extensor2<f64> {
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Determinant of the 4x4 matrix with rows a, b, c, d — the bracket [abcd].
pub fn bracket4<T: Scalar>(
    a: &HomPoint<T>,
    b: &HomPoint<T>,
    c: &HomPoint<T>,
    d: &HomPoint<T>,
) -> T {
    let rows = [a, b, c, d];
    let minor3 = |r: [usize; 3], cmask: usize| -> T {
        let cols: Vec<usize> = (0..4).filter(|&j| j != cmask).collect();
        let m = |i: usize, j: usize| rows[r[i]][cols[j]].clone();
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    let mut det = T::zero();
    for j in 0..4 {
        let term = a[j].clone() * minor3([1, 2, 3], j);
        det = if j % 2 == 0 { det + term } else { det - term };
    }
    det
}

/// Bracket via the join expansion: [abcd] = (a∨b) ⋆ (c∨d) with the Plücker
/// pairing. Used as an independent cross-check of `bracket4`.
pub fn bracket4_via_joins<T: Scalar>(
    a: &HomPoint<T>,
    b: &HomPoint<T>,
    c: &HomPoint<T>,
    d: &HomPoint<T>,
) -> T {
    let p = join(a, b).0;
    let q = join(c, d).0;
    p[0].clone() * q[3].clone()
        + p[1].clone() * q[4].clone()
        + p[2].clone() * q[5].clone()
        + p[3].clone() * q[0].clone()
        + p[4].clone() * q[1].clone()
        + p[5].clone() * q[2].clone()
}

pub fn point_to_f64(p: &HomPoint<Rat>) -> HomPoint<f64> {
    std::array::from_fn(|i| crate::rat::rat_to_f64(&p[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn pt(x: f64, y: f64, z: f64, w: f64) -> HomPoint<f64> {
        [x, y, z, w]
    }

    #[test]
    fn join_of_unit_segment() {
        let e = join(&pt(0.0, 0.0, 0.0, 1.0), &pt(1.0, 0.0, 0.0, 1.0));
        assert_eq!(e.0, [-1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn join_of_equal_points_is_zero() {
        let p = pt(2.0, -1.0, 3.0, 1.0);
        assert!(join(&p, &p).is_zero());
    }

    #[test]
    fn bracket_of_unit_tetrahedron() {
        let a = [rat_i(0), rat_i(0), rat_i(0), rat_i(1)];
        let b = [rat_i(1), rat_i(0), rat_i(0), rat_i(1)];
        let c = [rat_i(0), rat_i(1), rat_i(0), rat_i(1)];
        let d = [rat_i(0), rat_i(0), rat_i(1), rat_i(1)];
        assert_eq!(bracket4(&a, &b, &c, &d), rat_i(-1));
        // swapping two arguments negates
        assert_eq!(bracket4(&b, &a, &c, &d), rat_i(1));
    }

    #[test]
    fn bracket_of_coplanar_points_vanishes() {
        let a = [rat_i(0), rat_i(0), rat_i(0), rat_i(1)];
        let b = [rat_i(1), rat_i(0), rat_i(0), rat_i(1)];
        let c = [rat_i(0), rat_i(1), rat_i(0), rat_i(1)];
        let d = [rat(1, 2), rat(1, 2), rat_i(0), rat_i(1)];
        assert!(bracket4(&a, &b, &c, &d).is_zero());
    }

    proptest! {
        #[test]
        fn join_antisymmetry(coords in proptest::collection::vec(-50i64..50, 8)) {
            let a = [coords[0] as f64, coords[1] as f64, coords[2] as f64, coords[3] as f64];
            let b = [coords[4] as f64, coords[5] as f64, coords[6] as f64, coords[7] as f64];
            let ab = join(&a, &b);
            let ba = join(&b, &a);
            prop_assert_eq!(ab.neg().0, ba.0);
        }

        #[test]
        fn join_satisfies_plucker_relation(coords in proptest::collection::vec(-50i64..50, 8)) {
            let a: [Rat; 4] = std::array::from_fn(|i| rat_i(coords[i]));
            let b: [Rat; 4] = std::array::from_fn(|i| rat_i(coords[i + 4]));
            prop_assert!(join(&a, &b).plucker_residual().is_zero());
        }

        #[test]
        fn bracket_matches_join_expansion(coords in proptest::collection::vec(-20i64..20, 16)) {
            let p: Vec<[Rat; 4]> = (0..4)
                .map(|k| std::array::from_fn(|i| rat_i(coords[4 * k + i])))
                .collect();
            prop_assert_eq!(
                bracket4(&p[0], &p[1], &p[2], &p[3]),
                bracket4_via_joins(&p[0], &p[1], &p[2], &p[3])
            );
        }

        #[test]
        fn line_through_point_wedges_to_zero(coords in proptest::collection::vec(-20i64..20, 8)) {
            let a: [Rat; 4] = std::array::from_fn(|i| rat_i(coords[i]));
            let b: [Rat; 4] = std::array::from_fn(|i| rat_i(coords[i + 4]));
            let e = join(&a, &b);
            prop_assert!(e.wedge_point(&a).iter().all(|c| c.is_zero()));
            prop_assert!(e.wedge_point(&b).iter().all(|c| c.is_zero()));
        }
    }
}
