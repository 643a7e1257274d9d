//! Rigid-body math over a generic floating-point scalar.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar usable by the transform and mesh math: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Debug + Default + Send + Sync + 'static {
    /// Lossy conversion from `f64`, used for parsed literals and wire values.
    fn of(v: f64) -> Self {
        Self::from_f64(v).unwrap_or_else(Self::nan)
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn unit_x() -> Self {
        Vec3::new(T::one(), T::zero(), T::zero())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn scale(self, s: T) -> Self {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    /// Unit vector in the same direction, or `None` for a zero or non-finite input.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        (n.is_finite() && n > T::zero()).then(|| self.scale(n.recip()))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Rotation quaternion stored as `(x, y, z, w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quat<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub w: T,
}

impl<T: Real> Default for Quat<T> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<T: Real> Quat<T> {
    pub fn new(x: T, y: T, z: T, w: T) -> Self {
        Quat { x, y, z, w }
    }

    pub fn identity() -> Self {
        Quat::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// Rotation by `angle` radians about the unit vector `axis`.
    pub fn from_axis_angle(axis: Vec3<T>, angle: T) -> Self {
        let half = angle / T::two();
        let s = half.sin();
        Quat::new(axis.x * s, axis.y * s, axis.z * s, half.cos())
    }

    /// Fixed-axis roll/pitch/yaw: `R = Rz(yaw) · Ry(pitch) · Rx(roll)`.
    pub fn from_rpy(roll: T, pitch: T, yaw: T) -> Self {
        let (o, z) = (T::one(), T::zero());
        let qx = Quat::from_axis_angle(Vec3::new(o, z, z), roll);
        let qy = Quat::from_axis_angle(Vec3::new(z, o, z), pitch);
        let qz = Quat::from_axis_angle(Vec3::new(z, z, o), yaw);
        (qz * qy * qx).normalized().unwrap_or_default()
    }

    pub fn norm(self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z + self.w * self.w).sqrt()
    }

    /// Unit quaternion, or `None` for a zero or non-finite input.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        if !n.is_finite() || n <= T::zero() {
            return None;
        }
        let r = n.recip();
        Some(Quat::new(self.x * r, self.y * r, self.z * r, self.w * r))
    }

    pub fn conjugate(self) -> Self {
        Quat::new(-self.x, -self.y, -self.z, self.w)
    }

    pub fn rotate(self, v: Vec3<T>) -> Vec3<T> {
        // v' = v + 2w(u × v) + 2u × (u × v)
        let u = Vec3::new(self.x, self.y, self.z);
        let t = u.cross(v).scale(T::two());
        v + t.scale(self.w) + u.cross(t)
    }

    /// Row-major 3×3 rotation matrix.
    pub fn to_matrix(self) -> [[T; 3]; 3] {
        let (x, y, z, w) = (self.x, self.y, self.z, self.w);
        let (o, t) = (T::one(), T::two());
        [
            [o - t * (y * y + z * z), t * (x * y - z * w), t * (x * z + y * w)],
            [t * (x * y + z * w), o - t * (x * x + z * z), t * (y * z - x * w)],
            [t * (x * z - y * w), t * (y * z + x * w), o - t * (x * x + y * y)],
        ]
    }

    /// Roll/pitch/yaw in the same convention as [`Quat::from_rpy`].
    pub fn to_rpy(self) -> (T, T, T) {
        let m = self.to_matrix();
        let pitch = (-m[2][0]).max(-T::one()).min(T::one()).asin();
        let roll = m[2][1].atan2(m[2][2]);
        let yaw = m[1][0].atan2(m[0][0]);
        (roll, pitch, yaw)
    }
}

impl<T: Real> Mul for Quat<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Quat::new(
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
        )
    }
}

/// Rigid transform: rotate, then translate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Transform<T: Real> {
    pub translation: Vec3<T>,
    pub rotation: Quat<T>,
}

impl<T: Real> Transform<T> {
    pub fn new(translation: Vec3<T>, rotation: Quat<T>) -> Self {
        Transform { translation, rotation }
    }

    pub fn identity() -> Self {
        Transform::new(Vec3::zero(), Quat::identity())
    }

    pub fn from_translation(translation: Vec3<T>) -> Self {
        Transform::new(translation, Quat::identity())
    }

    pub fn from_rotation(rotation: Quat<T>) -> Self {
        Transform::new(Vec3::zero(), rotation)
    }

    /// `self ∘ other`: applies `other` first. The rotation is renormalized so
    /// long chains keep a unit quaternion.
    pub fn compose(&self, other: &Self) -> Self {
        let rotation = (self.rotation * other.rotation).normalized().unwrap_or_default();
        Transform::new(self.translation + self.rotation.rotate(other.translation), rotation)
    }

    pub fn inverse(&self) -> Self {
        let r = self.rotation.conjugate();
        Transform::new(-r.rotate(self.translation), r)
    }

    pub fn apply(&self, p: Vec3<T>) -> Vec3<T> {
        self.rotation.rotate(p) + self.translation
    }

    /// Row-major homogeneous 4×4 matrix.
    pub fn to_matrix(&self) -> [[T; 4]; 4] {
        let r = self.rotation.to_matrix();
        let t = self.translation.to_array();
        let mut m = [[T::zero(); 4]; 4];
        for i in 0..3 {
            m[i][..3].copy_from_slice(&r[i]);
            m[i][3] = t[i];
        }
        m[3][3] = T::one();
        m
    }

    /// Largest component-wise difference, treating `q` and `-q` as equal.
    pub fn max_difference(&self, other: &Self) -> T {
        let dt = self.translation - other.translation;
        let mut d = dt.x.abs().max(dt.y.abs()).max(dt.z.abs());
        let (a, b) = (self.rotation, other.rotation);
        let same = (a.x - b.x).abs().max((a.y - b.y).abs()).max((a.z - b.z).abs()).max((a.w - b.w).abs());
        let flip = (a.x + b.x).abs().max((a.y + b.y).abs()).max((a.z + b.z).abs()).max((a.w + b.w).abs());
        d = d.max(same.min(flip));
        d
    }

    pub fn cast<U: Real>(&self) -> Transform<U> {
        let c = |v: T| U::of(v.to_f64().unwrap_or(f64::NAN));
        Transform::new(
            Vec3::new(c(self.translation.x), c(self.translation.y), c(self.translation.z)),
            Quat::new(c(self.rotation.x), c(self.rotation.y), c(self.rotation.z), c(self.rotation.w)),
        )
    }
}

impl<T: Real> Mul for Transform<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.compose(&o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn quarter_turn_about_z() {
        let q = Quat::from_axis_angle(Vec3::new(0.0, 0.0, 1.0), FRAC_PI_2);
        let p = q.rotate(Vec3::new(1.0, 0.0, 0.0));
        assert!((p - Vec3::new(0.0, 1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn rpy_is_fixed_axis_xyz() {
        // Pure yaw of 90° maps +x to +y, pure pitch of 90° maps +x to −z.
        let yaw = Quat::<f64>::from_rpy(0.0, 0.0, FRAC_PI_2);
        assert!((yaw.rotate(Vec3::unit_x()) - Vec3::new(0.0, 1.0, 0.0)).norm() < 1e-12);
        let pitch = Quat::<f64>::from_rpy(0.0, FRAC_PI_2, 0.0);
        assert!((pitch.rotate(Vec3::unit_x()) - Vec3::new(0.0, 0.0, -1.0)).norm() < 1e-12);
        // Roll applies first: roll 90° then yaw 90° sends +y to +z.
        let both = Quat::<f64>::from_rpy(FRAC_PI_2, 0.0, FRAC_PI_2);
        assert!((both.rotate(Vec3::new(0.0, 1.0, 0.0)) - Vec3::new(0.0, 0.0, 1.0)).norm() < 1e-12);
        let (r, p, y) = Quat::<f64>::from_rpy(0.3, -0.2, 1.1).to_rpy();
        assert!((r - 0.3).abs() < 1e-12 && (p + 0.2).abs() < 1e-12 && (y - 1.1).abs() < 1e-12);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let t = Transform::new(Vec3::new(1.0, -2.0, 0.5), Quat::<f64>::from_rpy(0.1, 0.2, 0.3));
        let id = t.compose(&t.inverse());
        assert!(id.max_difference(&Transform::identity()) < 1e-12);
    }

    #[test]
    fn works_in_single_precision() {
        let t = Transform::<f32>::new(Vec3::new(1.0, 0.0, 0.0), Quat::from_rpy(0.0, 0.0, 1.0));
        let back = t.compose(&t.inverse());
        assert!(back.max_difference(&Transform::identity()) < 1e-5);
    }
}
