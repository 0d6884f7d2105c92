//! Pinhole-camera and oriented-box geometry.
//!
//! Everything downstream works in one fixed camera frame: +x right, +y down,
//! +z forward, meters. Annotations in other conventions are converted at
//! ingest. Angles are radians internally; degrees appear only in rendered
//! text and config files.

mod box3d;
mod camera;
mod rotation;
mod vec3;
mod viewer;

pub use box3d::{Axis, Dims, FrontAxes, OrientedBox3D};
pub use camera::CameraIntrinsics;
pub use rotation::Rotation;
pub use vec3::Vec3;
pub use viewer::{ground_yaw, relative_position, viewer_pose, wrap_angle, ViewerPose, GROUND_EPS};

use thiserror::Error;

/// Default up direction: camera -y. A scene may override it with an
/// annotated gravity vector.
pub const DEFAULT_UP: Vec3 = Vec3 { x: 0.0, y: -1.0, z: 0.0 };

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum GeometryError {
    #[error("point has non-positive depth z = {z}")]
    NonPositiveDepth { z: f64 },
    #[error("direction is parallel to up; ground projection is degenerate")]
    DegenerateProjection,
    #[error("vector or quaternion has (near-)zero norm")]
    ZeroNorm,
}
