use super::{FrontAxes, GeometryError, OrientedBox3D, Vec3};
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Smallest ground-plane component accepted before a direction counts as
/// parallel to up.
pub const GROUND_EPS: f64 = 1e-8;

/// An object's pose relative to the viewer: azimuth 0 means the object faces
/// the camera; distance is the Euclidean norm of the object center.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ViewerPose {
    /// Radians in [0, 2pi).
    pub azimuth: f64,
    /// Radians in [-pi/2, pi/2].
    pub elevation: f64,
    /// Meters, > 0.
    pub distance: f64,
}

/// Angle of `v` projected onto the ground plane, in [0, 2pi), measured from
/// the projected +z direction, positive in the right-handed sense about `up`.
pub fn ground_yaw(v: Vec3, up: Vec3) -> Result<f64, GeometryError> {
    let reference = Vec3::Z
        .reject(up)
        .normalized(GROUND_EPS)
        .ok_or(GeometryError::DegenerateProjection)?;
    let v_ground = v.reject(up);
    if v_ground.norm() < GROUND_EPS {
        return Err(GeometryError::DegenerateProjection);
    }
    let side = up.cross(reference);
    Ok(v_ground.dot(side).atan2(v_ground.dot(reference)).rem_euclid(TAU))
}

/// Signed difference between two ground yaws, wrapped into (-pi, pi].
pub fn wrap_angle(a: f64) -> f64 {
    let w = a.rem_euclid(TAU);
    if w > PI {
        w - TAU
    } else {
        w
    }
}

/// Viewer-relative pose of a box: distance to the camera origin, azimuth of
/// the facing direction measured from the object-to-camera direction, and
/// elevation of the camera above the object's horizon.
pub fn viewer_pose(
    b: &OrientedBox3D,
    fronts: &FrontAxes,
    up: Vec3,
) -> Result<ViewerPose, GeometryError> {
    let distance = b.center.norm();
    let to_object = b
        .center
        .normalized(GROUND_EPS)
        .ok_or(GeometryError::DegenerateProjection)?;
    let facing = b.facing_vector(fronts);
    let yaw_facing = ground_yaw(facing, up)?;
    let yaw_to_object = ground_yaw(to_object, up)?;
    let azimuth = (yaw_facing - yaw_to_object + PI).rem_euclid(TAU);
    let to_camera = -to_object;
    let elevation = to_camera.dot(up).clamp(-1.0, 1.0).asin();
    Ok(ViewerPose { azimuth, elevation, distance })
}

/// Expresses `target` in the reference box's gravity-aligned frame:
/// forward along the ground-projected facing direction, left = up x forward,
/// and the component along `up`. Meters.
pub fn relative_position(
    reference: &OrientedBox3D,
    target: Vec3,
    fronts: &FrontAxes,
    up: Vec3,
) -> Result<(f64, f64, f64), GeometryError> {
    let forward = reference
        .facing_vector(fronts)
        .reject(up)
        .normalized(GROUND_EPS)
        .ok_or(GeometryError::DegenerateProjection)?;
    let left = up.cross(forward);
    let delta = target - reference.center;
    Ok((delta.dot(forward), delta.dot(left), delta.dot(up)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Dims, Rotation, DEFAULT_UP};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_2;

    fn box_with(center: Vec3, rotation: Rotation) -> OrientedBox3D {
        OrientedBox3D {
            center,
            dims: Dims::new(2.0, 1.0, 1.5),
            rotation,
            category: "car".into(),
            instance_id: "o1".into(),
        }
    }

    // local +x is the default front; this turns it onto -z / +z
    fn facing_neg_z() -> Rotation {
        Rotation::from_axis_angle(DEFAULT_UP, FRAC_PI_2).unwrap()
    }

    fn facing_pos_z() -> Rotation {
        Rotation::from_axis_angle(DEFAULT_UP, -FRAC_PI_2).unwrap()
    }

    #[test]
    fn ground_yaw_reference_is_forward() {
        assert!(ground_yaw(Vec3::Z, DEFAULT_UP).unwrap().abs() < 1e-12);
    }

    #[test]
    fn ground_yaw_rejects_vertical() {
        assert!(matches!(
            ground_yaw(Vec3::new(0.0, -1.0, 0.0), DEFAULT_UP),
            Err(GeometryError::DegenerateProjection)
        ));
    }

    #[test]
    fn ground_yaw_is_equivariant_under_yaw() {
        // oracle: rotate with an explicit axis-angle rotation about up
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..2_000 {
            let v = Vec3::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-0.4..0.4),
                rng.random_range(-1.0..1.0),
            );
            if v.reject(DEFAULT_UP).norm() < 1e-3 {
                continue;
            }
            let theta = rng.random_range(0.0..TAU);
            let q = Rotation::from_axis_angle(DEFAULT_UP, theta).unwrap();
            let a = ground_yaw(v, DEFAULT_UP).unwrap();
            let b = ground_yaw(q.rotate(v), DEFAULT_UP).unwrap();
            let diff = wrap_angle(b - a - theta);
            assert!(diff.abs() < 1e-9, "equivariance broke: {diff}");
        }
    }

    #[test]
    fn sanity_check_facing_rotations() {
        let f = box_with(Vec3::new(0.0, 0.0, 5.0), facing_neg_z())
            .facing_vector(&FrontAxes::default());
        assert!((f + Vec3::Z).norm() < 1e-9, "expected -z facing, got {f:?}");
    }

    #[test]
    fn viewer_pose_facing_camera_has_zero_azimuth() {
        let b = box_with(Vec3::new(0.0, 0.0, 5.0), facing_neg_z());
        let pose = viewer_pose(&b, &FrontAxes::default(), DEFAULT_UP).unwrap();
        assert!(wrap_angle(pose.azimuth).abs() < 1e-9);
        assert!((pose.distance - 5.0).abs() < 1e-12);
        assert!(pose.elevation.abs() < 1e-12);
    }

    #[test]
    fn viewer_pose_facing_away_has_pi_azimuth() {
        let b = box_with(Vec3::new(0.0, 0.0, 5.0), facing_pos_z());
        let pose = viewer_pose(&b, &FrontAxes::default(), DEFAULT_UP).unwrap();
        assert!((pose.azimuth - PI).abs() < 1e-9);
    }

    #[test]
    fn relative_position_examples() {
        let fronts = FrontAxes::default();
        let r = box_with(Vec3::new(0.0, 0.0, 5.0), facing_pos_z());

        let ahead = relative_position(&r, Vec3::new(0.0, 0.0, 8.0), &fronts, DEFAULT_UP).unwrap();
        assert!((ahead.0 - 3.0).abs() < 1e-9 && ahead.1.abs() < 1e-9 && ahead.2.abs() < 1e-9);

        // 1 m to the right: left component is -1
        let right = relative_position(&r, Vec3::new(1.0, 0.0, 5.0), &fronts, DEFAULT_UP).unwrap();
        assert!(right.0.abs() < 1e-9 && (right.1 + 1.0).abs() < 1e-9 && right.2.abs() < 1e-9);

        // straight above (up = -y)
        let above = relative_position(&r, Vec3::new(0.0, -2.0, 5.0), &fronts, DEFAULT_UP).unwrap();
        assert!(above.0.abs() < 1e-9 && above.1.abs() < 1e-9 && (above.2 - 2.0).abs() < 1e-9);
    }

    #[test]
    fn relative_position_is_an_isometry() {
        let fronts = FrontAxes::default();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..2_000 {
            let yaw = rng.random_range(0.0..TAU);
            let r = box_with(
                Vec3::new(rng.random_range(-5.0..5.0), rng.random_range(-2.0..2.0), rng.random_range(1.0..20.0)),
                Rotation::from_axis_angle(DEFAULT_UP, yaw).unwrap(),
            );
            let t = Vec3::new(
                rng.random_range(-10.0..10.0),
                rng.random_range(-5.0..5.0),
                rng.random_range(-10.0..30.0),
            );
            let (f, l, u) = relative_position(&r, t, &fronts, DEFAULT_UP).unwrap();
            let mapped = (f * f + l * l + u * u).sqrt();
            assert!((mapped - (t - r.center).norm()).abs() < 1e-9);
        }
    }
}
