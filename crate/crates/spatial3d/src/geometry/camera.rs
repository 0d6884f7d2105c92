use super::{GeometryError, Vec3};
use serde::{Deserialize, Serialize};

/// Pinhole camera intrinsics in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CameraIntrinsics {
    pub fx: f64,
    pub fy: f64,
    pub cx: f64,
    pub cy: f64,
    pub width: u32,
    pub height: u32,
}

impl CameraIntrinsics {
    /// Projects a camera-frame point to pixel coordinates (u, v).
    pub fn project(&self, p: Vec3) -> Result<(f64, f64), GeometryError> {
        if p.z <= 0.0 {
            return Err(GeometryError::NonPositiveDepth { z: p.z });
        }
        let u = self.fx * p.x / p.z + self.cx;
        let v = self.fy * p.y / p.z + self.cy;
        Ok((u, v))
    }

    /// Lifts a pixel back to a camera-frame point at the given z depth.
    pub fn backproject(&self, uv: (f64, f64), depth_z: f64) -> Result<Vec3, GeometryError> {
        if depth_z <= 0.0 {
            return Err(GeometryError::NonPositiveDepth { z: depth_z });
        }
        let x = (uv.0 - self.cx) / self.fx * depth_z;
        let y = (uv.1 - self.cy) / self.fy * depth_z;
        Ok(Vec3::new(x, y, depth_z))
    }
}
