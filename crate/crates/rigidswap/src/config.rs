//! Projective configurations with exact rational coordinates, and all seeded
//! randomness: point sampling, drum coordinates for towers, and random
//! projective transforms.
//!
//! Coordinates stay rational end to end so that any rank or vanishing
//! question can be settled exactly when the floating answer is in doubt.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::extensor::{join, point_to_f64};
use crate::poly::{BlockHolePolyhedron, FaceLabel, Vertex};
use crate::rat::{rat, rat_i, Rat};

pub type HomPoint = [Rat; 4];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("configuration has {got} points but the polyhedron has {want} vertices")]
    WrongLength { got: usize, want: usize },
    #[error("adjacent vertices {0} and {1} map to the same projective point")]
    CoincidentneighborPoints(Vertex, Vertex),
    #[error("vertices {0}, {1}, {2} are consecutive on a block or hole and collinear")]
    GeneralPositionViolation(Vertex, Vertex, Vertex),
    #[error("could not sample an admissible configuration after {0} attempts")]
    SamplingExhausted(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Configuration {
    points: Vec<HomPoint>,
}

pub fn affine(x: Rat, y: Rat, z: Rat) -> HomPoint {
    [x, y, z, Rat::one()]
}

pub fn affine_i(x: i64, y: i64, z: i64) -> HomPoint {
    affine(rat_i(x), rat_i(y), rat_i(z))
}

impl Configuration {
    pub fn new(points: Vec<HomPoint>) -> Self {
        Configuration { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, v: Vertex) -> &HomPoint {
        &self.points[v]
    }

    pub fn points(&self) -> &[HomPoint] {
        &self.points
    }

    pub fn point_f64(&self, v: Vertex) -> [f64; 4] {
        point_to_f64(&self.points[v])
    }

    pub fn push(&mut self, p: HomPoint) -> Vertex {
        self.points.push(p);
        self.points.len() - 1
    }

    /// Every edge must join distinct projective points.
    pub fn check_adjacent_distinct(&self, bhp: &BlockHolePolyhedron) -> Result<(), ConfigError> {
        if self.len() != bhp.poly().vertex_count() {
            return Err(ConfigError::WrongLength {
                got: self.len(),
                want: bhp.poly().vertex_count(),
            });
        }
        for e in bhp.poly().edges() {
            let (i, j) = e.ends;
            if join(self.point(i), self.point(j)).is_zero() {
                return Err(ConfigError::CoincidentneighborPoints(i, j));
            }
        }
        Ok(())
    }

    /// Block-and-hole general position: no three consecutive vertices of any
    /// block or hole collinear. Exact test.
    pub fn check_block_hole_general_position(
        &self,
        bhp: &BlockHolePolyhedron,
    ) -> Result<(), ConfigError> {
        self.check_adjacent_distinct(bhp)?;
        for (f, cyc) in bhp.poly().faces().iter().enumerate() {
            if bhp.label(f) == FaceLabel::Surface {
                continue;
            }
            let n = cyc.len();
            for i in 0..n {
                let a = cyc[i];
                let b = cyc[(i + 1) % n];
                let c = cyc[(i + 2) % n];
                if collinear(self.point(a), self.point(b), self.point(c)) {
                    return Err(ConfigError::GeneralPositionViolation(a, b, c));
                }
            }
        }
        Ok(())
    }

    /// Apply an invertible 4x4 projective transform (row-vector convention:
    /// p' = M p as column action).
    pub fn apply_projective(&self, m: &[[Rat; 4]; 4]) -> Configuration {
        let points = self
            .points
            .iter()
            .map(|p| {
                std::array::from_fn(|r| {
                    (0..4)
                        .map(|c| m[r][c].clone() * p[c].clone())
                        .fold(Rat::zero(), |acc, t| acc + t)
                })
            })
            .collect();
        Configuration { points }
    }
}

/// True iff the three points are projectively collinear (or coincident).
pub fn collinear(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> bool {
    let e = join(a, b);
    if e.is_zero() {
        return true;
    }
    e.wedge_point(c).iter().all(|x| x.is_zero())
}

/// True iff the four points are coplanar.
pub fn coplanar(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> bool {
    crate::extensor::bracket4(a, b, c, d).is_zero()
}

/// All randomness in the crate flows from one u64 seed; independent purposes
/// draw from independent streams of the same generator.
pub fn sub_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random rational with numerator in [-num_bound, num_bound] and denominator
/// in [1, den_bound].
pub fn random_rat(rng: &mut ChaCha8Rng, num_bound: i64, den_bound: i64) -> Rat {
    let n = rng.gen_range(-num_bound..=num_bound);
    let d = rng.gen_range(1..=den_bound);
    rat(n, d)
}

/// Random affine point with bounded rational coordinates (w = 1).
pub fn random_point(rng: &mut ChaCha8Rng) -> HomPoint {
    affine(
        random_rat(rng, 1000, 1000),
        random_rat(rng, 1000, 1000),
        random_rat(rng, 1000, 1000),
    )
}

/// Seeded random configuration in block-and-hole general position.
pub fn random_configuration(
    bhp: &BlockHolePolyhedron,
    seed: u64,
) -> Result<Configuration, ConfigError> {
    const ATTEMPTS: u64 = 64;
    for attempt in 0..ATTEMPTS {
        let mut rng = sub_rng(seed, 0x636f6e66 + attempt);
        let points = (0..bhp.poly().vertex_count())
            .map(|_| random_point(&mut rng))
            .collect();
        let config = Configuration::new(points);
        if config.check_block_hole_general_position(bhp).is_ok() {
            return Ok(config);
        }
    }
    Err(ConfigError::SamplingExhausted(ATTEMPTS as usize))
}

/// Rational approximation of (cos, sin) at angle 2*pi*k/n, denominator 1000.
fn circle_point(k: usize, n: usize) -> (Rat, Rat) {
    let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
    let c = (theta.cos() * 1000.0).round() as i64;
    let s = (theta.sin() * 1000.0).round() as i64;
    (rat(c, 1000), rat(s, 1000))
}

/// Drum coordinates for `tower(s, t)`: block polygon on z = 1, hole polygon
/// on z = 0, plus a seeded rational perturbation of every coordinate.
pub fn drum_configuration(s: usize, t: usize, seed: u64) -> Configuration {
    let mut rng = sub_rng(seed, 0x6472756d);
    let mut points = Vec::with_capacity(s + t);
    let mut jitter = |base: Rat| base + random_rat(&mut rng, 40, 1000);
    for k in 0..s {
        let (x, y) = circle_point(k, s);
        points.push(affine(jitter(x), jitter(y), jitter(rat_i(1))));
    }
    for k in 0..t {
        let (x, y) = circle_point(k, t);
        points.push(affine(jitter(x), jitter(y), jitter(rat_i(0))));
    }
    Configuration::new(points)
}

/// Perturbed drum configuration that is certified to be in block-and-hole
/// general position for the given tower.
pub fn perturbed_drum(bhp: &BlockHolePolyhedron, s: usize, t: usize, seed: u64) -> Configuration {
    for attempt in 0..64 {
        let config = drum_configuration(s, t, seed.wrapping_add(attempt * 0x9e37));
        if config.check_block_hole_general_position(bhp).is_ok() {
            return config;
        }
    }
    panic!("perturbed drum sampling exhausted");
}

/// Seeded random invertible projective transform with small rational entries.
pub fn random_projective_transform(seed: u64) -> [[Rat; 4]; 4] {
    for attempt in 0..64 {
        let mut rng = sub_rng(seed, 0x70726f6a + attempt);
        let m: [[Rat; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| random_rat(&mut rng, 10, 10)));
        if !det4(&m).is_zero() {
            return m;
        }
    }
    unreachable!("singular transforms 64 times in a row");
}

fn det4(m: &[[Rat; 4]; 4]) -> Rat {
    crate::extensor::bracket4(&m[0], &m[1], &m[2], &m[3])
}

/// Centroid of a set of points taken in affine (w-normalized) form; the
/// inputs must have nonzero w.
pub fn affine_centroid(points: &[&HomPoint]) -> HomPoint {
    let n = rat_i(points.len() as i64);
    let mut acc = [Rat::zero(), Rat::zero(), Rat::zero()];
    for p in points {
        assert!(!p[3].is_zero(), "centroid of a point at infinity");
        for (k, a) in acc.iter_mut().enumerate() {
            *a += p[k].clone() / p[3].clone();
        }
    }
    affine(
        acc[0].clone() / n.clone(),
        acc[1].clone() / n.clone(),
        acc[2].clone() / n,
    )
}

/// Small random rational offset applied to a base point, for apex and gusset
/// placement.
pub fn jitter_near(rng: &mut ChaCha8Rng, base: &HomPoint) -> HomPoint {
    assert!(!base[3].is_zero());
    let mut off = || random_rat(rng, 900, 600) + rat(1, 7);
    affine(
        base[0].clone() / base[3].clone() + off(),
        base[1].clone() / base[3].clone() + off(),
        base[2].clone() / base[3].clone() + off(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::tower;

    #[test]
    fn sampling_is_deterministic() {
        let bhp = tower(4, 3);
        let a = random_configuration(&bhp, 7).unwrap();
        let b = random_configuration(&bhp, 7).unwrap();
        assert_eq!(a, b);
        let c = random_configuration(&bhp, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn drum_is_in_general_position() {
        for (s, t) in [(3, 3), (4, 3), (4, 4), (5, 3), (3, 5)] {
            let bhp = tower(s, t);
            let config = perturbed_drum(&bhp, s, t, 1);
            config.check_block_hole_general_position(&bhp).unwrap();
        }
    }

    #[test]
    fn collinearity_detection() {
        let a = affine_i(0, 0, 0);
        let b = affine_i(1, 0, 0);
        let c = affine_i(2, 0, 0);
        let d = affine_i(0, 1, 0);
        assert!(collinear(&a, &b, &c));
        assert!(!collinear(&a, &b, &d));
    }

    #[test]
    fn general_position_rejects_collinear_hole_triple() {
        let bhp = tower(4, 3);
        let mut pts: Vec<HomPoint> = (0..7).map(|i| affine_i(i, i * i, 1)).collect();
        // make hole vertices 4,5,6 collinear
        pts[4] = affine_i(0, 0, 0);
        pts[5] = affine_i(1, 1, 1);
        pts[6] = affine_i(2, 2, 2);
        let config = Configuration::new(pts);
        assert!(matches!(
            config.check_block_hole_general_position(&bhp),
            Err(ConfigError::GeneralPositionViolation(_, _, _))
        ));
    }

    #[test]
    fn projective_transform_preserves_collinearity() {
        let m = random_projective_transform(3);
        let config = Configuration::new(vec![
            affine_i(0, 0, 0),
            affine_i(1, 2, 3),
            affine_i(2, 4, 6),
            affine_i(5, 1, 0),
        ]);
        let t = config.apply_projective(&m);
        assert!(collinear(t.point(0), t.point(1), t.point(2)));
        assert!(!collinear(t.point(0), t.point(1), t.point(3)));
    }

    #[test]
    fn convex_octahedron_configuration_loads() {
        let (bhp, config) = fixtures::oct_with_convex_coordinates();
        config.check_block_hole_general_position(&bhp).unwrap();
    }
}
