use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Scalar;

/// A vector (or point) in R^3 with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vec3 {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

pub type Point3 = Vec3;

impl Vec3 {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Vec3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        Vec3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn dot(&self, o: &Vec3) -> Scalar {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3 {
            x: &self.y * &o.z - &self.z * &o.y,
            y: &self.z * &o.x - &self.x * &o.z,
            z: &self.x * &o.y - &self.y * &o.x,
        }
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, k: &Scalar) -> Vec3 {
        Vec3 {
            x: &self.x * k,
            y: &self.y * k,
            z: &self.z * k,
        }
    }

    /// Component of `self` orthogonal to the nonzero vector `d`.
    pub fn reject(&self, d: &Vec3) -> Vec3 {
        let k = self.dot(d) / d.norm_sq();
        self - &d.scale(&k)
    }

    pub fn coords(&self) -> [&Scalar; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn from_array(c: [Scalar; 3]) -> Self {
        let [x, y, z] = c;
        Vec3 { x, y, z }
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

impl Add<&Vec3> for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3 {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
            z: &self.z + &o.z,
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        &self + &o
    }
}

impl Sub<&Vec3> for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3 {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
            z: &self.z - &o.z,
        }
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        &self - &o
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3 {
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl Serialize for Vec3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [&self.x, &self.y, &self.z].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vec3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let c = <[Scalar; 3]>::deserialize(deserializer)?;
        Ok(Vec3::from_array(c))
    }
}

/// 3x3 determinant of the rows `a`, `b`, `c`.
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Scalar {
    a.dot(&b.cross(c))
}

/// A point or vector in the plane.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vec2 {
    pub x: Scalar,
    pub y: Scalar,
}

pub type Point2 = Vec2;

impl Vec2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Vec2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vec2::new(x.into(), y.into())
    }

    pub fn zero() -> Self {
        Vec2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, o: &Vec2) -> Scalar {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, o: &Vec2) -> Scalar {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, k: &Scalar) -> Vec2 {
        Vec2 {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Vec2 {
        Vec2 {
            x: -&self.y,
            y: self.x.clone(),
        }
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }
}

impl Add<&Vec2> for &Vec2 {
    type Output = Vec2;
    fn add(self, o: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
        }
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        &self + &o
    }
}

impl Sub<&Vec2> for &Vec2 {
    type Output = Vec2;
    fn sub(self, o: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        &self - &o
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2 {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Serialize for Vec2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [&self.x, &self.y].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vec2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [x, y] = <[Scalar; 2]>::deserialize(deserializer)?;
        Ok(Vec2 { x, y })
    }
}

/// Sign of the turn a -> b -> c: positive for counterclockwise.
pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> i32 {
    (b - a).cross(&(c - a)).signum()
}
