use super::{GeometryError, Vec3, DEFAULT_UP};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::ops::Mul;

/// A rotation stored as a unit quaternion (w, x, y, z).
///
/// The quaternion is the source of truth for orientation everywhere in the
/// library; yaw-pitch-roll is a display conversion only. Every constructor
/// and composition renormalizes, keeping the norm within 1e-9 of 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rotation {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Rotation {
    pub const IDENTITY: Rotation = Rotation { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    /// Builds a rotation from raw quaternion components, renormalizing.
    /// Norms may deviate from 1 (noisy exports); a near-zero norm is rejected.
    pub fn from_wxyz(w: f64, x: f64, y: f64, z: f64) -> Result<Rotation, GeometryError> {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        if !n.is_finite() || n < 1e-8 {
            return Err(GeometryError::ZeroNorm);
        }
        Ok(Rotation { w: w / n, x: x / n, y: y / n, z: z / n })
    }

    /// How far the raw components were from unit norm, for renormalization warnings.
    pub fn norm_of(w: f64, x: f64, y: f64, z: f64) -> f64 {
        (w * w + x * x + y * y + z * z).sqrt()
    }

    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Result<Rotation, GeometryError> {
        let a = axis.normalized(1e-12).ok_or(GeometryError::ZeroNorm)?;
        let (s, c) = (angle / 2.0).sin_cos();
        Ok(Rotation { w: c, x: a.x * s, y: a.y * s, z: a.z * s })
    }

    /// Rotation from an orthonormal basis given as the images of the x, y, z axes
    /// (the columns of the rotation matrix). Shepperd's method.
    pub fn from_basis(bx: Vec3, by: Vec3, bz: Vec3) -> Result<Rotation, GeometryError> {
        let (m00, m01, m02) = (bx.x, by.x, bz.x);
        let (m10, m11, m12) = (bx.y, by.y, bz.y);
        let (m20, m21, m22) = (bx.z, by.z, bz.z);
        let trace = m00 + m11 + m22;
        let (w, x, y, z);
        if trace > 0.0 {
            let s = (trace + 1.0).sqrt() * 2.0;
            w = 0.25 * s;
            x = (m21 - m12) / s;
            y = (m02 - m20) / s;
            z = (m10 - m01) / s;
        } else if m00 > m11 && m00 > m22 {
            let s = (1.0 + m00 - m11 - m22).sqrt() * 2.0;
            w = (m21 - m12) / s;
            x = 0.25 * s;
            y = (m01 + m10) / s;
            z = (m02 + m20) / s;
        } else if m11 > m22 {
            let s = (1.0 + m11 - m00 - m22).sqrt() * 2.0;
            w = (m02 - m20) / s;
            x = (m01 + m10) / s;
            y = 0.25 * s;
            z = (m12 + m21) / s;
        } else {
            let s = (1.0 + m22 - m00 - m11).sqrt() * 2.0;
            w = (m10 - m01) / s;
            x = (m02 + m20) / s;
            y = (m12 + m21) / s;
            z = 0.25 * s;
        }
        Rotation::from_wxyz(w, x, y, z)
    }

    /// Intrinsic yaw-pitch-roll: yaw about the default up axis (0,-1,0), then
    /// pitch about +x, then roll about +z. Bijective away from |pitch| = pi/2.
    pub fn from_yaw_pitch_roll(yaw: f64, pitch: f64, roll: f64) -> Rotation {
        let qy = Rotation::from_axis_angle(DEFAULT_UP, yaw).expect("fixed axis");
        let qp = Rotation::from_axis_angle(Vec3::X, pitch).expect("fixed axis");
        let qr = Rotation::from_axis_angle(Vec3::Z, roll).expect("fixed axis");
        qy * qp * qr
    }

    /// Inverse of [`Rotation::from_yaw_pitch_roll`]. Yaw is reported in [0, 2pi),
    /// pitch in [-pi/2, pi/2], roll in (-pi, pi].
    pub fn to_yaw_pitch_roll(self) -> (f64, f64, f64) {
        let fwd = self.rotate(Vec3::Z);
        let pitch = (-fwd.y).clamp(-1.0, 1.0).asin();
        let yaw = (-fwd.x).atan2(fwd.z).rem_euclid(TAU);
        let qy = Rotation::from_axis_angle(DEFAULT_UP, yaw).expect("fixed axis");
        let qp = Rotation::from_axis_angle(Vec3::X, pitch).expect("fixed axis");
        let rem = (qy * qp).inverse() * self;
        let rx = rem.rotate(Vec3::X);
        let roll = rx.y.atan2(rx.x);
        (yaw, pitch, roll)
    }

    pub fn inverse(self) -> Rotation {
        Rotation { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    pub fn norm(self) -> f64 {
        Self::norm_of(self.w, self.x, self.y, self.z)
    }

    /// Applies the rotation to a vector via the quaternion sandwich product.
    pub fn rotate(self, v: Vec3) -> Vec3 {
        let u = Vec3::new(self.x, self.y, self.z);
        let t = u.cross(v) * 2.0;
        v + t * self.w + u.cross(t)
    }
}

impl Mul for Rotation {
    type Output = Rotation;

    fn mul(self, rhs: Rotation) -> Rotation {
        let (aw, ax, ay, az) = (self.w, self.x, self.y, self.z);
        let (bw, bx, by, bz) = (rhs.w, rhs.x, rhs.y, rhs.z);
        let w = aw * bw - ax * bx - ay * by - az * bz;
        let x = aw * bx + ax * bw + ay * bz - az * by;
        let y = aw * by - ax * bz + ay * bw + az * bx;
        let z = aw * bz + ax * by - ay * bx + az * bw;
        // composition drifts slowly; renormalize to hold the unit invariant
        Rotation::from_wxyz(w, x, y, z).expect("product of unit quaternions")
    }
}
