use super::{Rotation, Vec3};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Box extents along the object's local axes: length on local x,
/// width on local y, height on local z. All positive meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dims {
    pub length: f64,
    pub width: f64,
    pub height: f64,
}

impl Dims {
    pub fn new(length: f64, width: f64, height: f64) -> Self {
        Dims { length, width, height }
    }

    pub fn all_positive(&self) -> bool {
        self.length > 0.0 && self.width > 0.0 && self.height > 0.0
    }
}

/// An oriented 3D bounding box in the camera frame. The unit of all geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrientedBox3D {
    pub center: Vec3,
    pub dims: Dims,
    /// Object-local frame to camera frame.
    pub rotation: Rotation,
    pub category: String,
    pub instance_id: String,
}

impl OrientedBox3D {
    /// The eight corners, center + rotation * (±L/2, ±W/2, ±H/2).
    pub fn corners(&self) -> [Vec3; 8] {
        let h = Vec3::new(self.dims.length / 2.0, self.dims.width / 2.0, self.dims.height / 2.0);
        let mut out = [Vec3::ZERO; 8];
        for (i, corner) in out.iter_mut().enumerate() {
            let sx = if i & 1 == 0 { -1.0 } else { 1.0 };
            let sy = if i & 2 == 0 { -1.0 } else { 1.0 };
            let sz = if i & 4 == 0 { -1.0 } else { 1.0 };
            let local = Vec3::new(sx * h.x, sy * h.y, sz * h.z);
            *corner = self.center + self.rotation.rotate(local);
        }
        out
    }

    /// The object's front direction in the camera frame: the configured
    /// canonical front axis carried through the box rotation. Unit norm.
    pub fn facing_vector(&self, fronts: &FrontAxes) -> Vec3 {
        self.rotation.rotate(fronts.front_axis(&self.category).unit())
    }

    /// The six outward face normals in the camera frame, in the fixed order
    /// front, back, left, right, top, bottom.
    pub fn face_normals(&self, fronts: &FrontAxes) -> [Vec3; 6] {
        let local = fronts.local_faces(&self.category);
        local.map(|n| self.rotation.rotate(n))
    }
}

/// One of the six signed local axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Axis {
    PosX,
    NegX,
    PosY,
    NegY,
    PosZ,
    NegZ,
}

impl Axis {
    pub fn unit(self) -> Vec3 {
        match self {
            Axis::PosX => Vec3::X,
            Axis::NegX => -Vec3::X,
            Axis::PosY => Vec3::Y,
            Axis::NegY => -Vec3::Y,
            Axis::PosZ => Vec3::Z,
            Axis::NegZ => -Vec3::Z,
        }
    }

    fn is_z(self) -> bool {
        matches!(self, Axis::PosZ | Axis::NegZ)
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+x" | "x" => Ok(Axis::PosX),
            "-x" => Ok(Axis::NegX),
            "+y" | "y" => Ok(Axis::PosY),
            "-y" => Ok(Axis::NegY),
            "+z" | "z" => Ok(Axis::PosZ),
            "-z" => Ok(Axis::NegZ),
            other => Err(format!("unknown axis '{other}' (expected one of +x -x +y -y +z -z)")),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axis::PosX => "+x",
            Axis::NegX => "-x",
            Axis::PosY => "+y",
            Axis::NegY => "-y",
            Axis::PosZ => "+z",
            Axis::NegZ => "-z",
        };
        f.write_str(s)
    }
}

impl TryFrom<String> for Axis {
    type Error = String;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Axis> for String {
    fn from(a: Axis) -> String {
        a.to_string()
    }
}

/// Which local axis is an object's "front", with per-category overrides.
///
/// The default front is local +x. The local top is +z, except when the front
/// itself is ±z, where the top falls back to +x. The local left axis is
/// top × front, so the face frame stays right-handed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontAxes {
    pub default_front: Axis,
    #[serde(default)]
    pub overrides: BTreeMap<String, Axis>,
}

impl Default for FrontAxes {
    fn default() -> Self {
        FrontAxes { default_front: Axis::PosX, overrides: BTreeMap::new() }
    }
}

impl FrontAxes {
    pub fn front_axis(&self, category: &str) -> Axis {
        *self.overrides.get(category).unwrap_or(&self.default_front)
    }

    /// Local face normals in the order front, back, left, right, top, bottom.
    pub fn local_faces(&self, category: &str) -> [Vec3; 6] {
        let front = self.front_axis(category);
        let f = front.unit();
        let t = if front.is_z() { Vec3::X } else { Vec3::Z };
        let l = t.cross(f);
        [f, -f, l, -l, t, -t]
    }
}
