//! Rational points on the compact parameter groups.

use num_traits::Zero;
use rand::Rng;

use crate::algebras::AlgebraElement;
use crate::exterior::{int, ratio, Matrix, Scalar};

/// `(1 + x)² / (1 + |x|²)` for an imaginary quaternion `x` with small
/// integer coordinates; always a unit quaternion.
pub fn random_unit_quaternion<R: Rng>(rng: &mut R) -> AlgebraElement {
    let x: [i64; 3] = std::array::from_fn(|_| rng.random_range(-4..=4));
    unit_quaternion_from(x)
}

pub fn unit_quaternion_from(x: [i64; 3]) -> AlgebraElement {
    let n2: i64 = x.iter().map(|v| v * v).sum();
    let d = int(1 + n2);
    let mut coords = vec![int(1 - n2) / &d];
    coords.extend(x.iter().map(|&v| int(2 * v) / &d));
    AlgebraElement { coords }
}

/// A small imaginary quaternion with integer coordinates.
pub fn random_imaginary_quaternion<R: Rng>(rng: &mut R) -> AlgebraElement {
    let mut coords = vec![int(0)];
    coords.extend((0..3).map(|_| int(rng.random_range(-3..=3))));
    AlgebraElement { coords }
}

/// A random antisymmetric 3×3 integer matrix.
pub fn random_antisymmetric3<R: Rng>(rng: &mut R) -> Matrix {
    let (a, b, c) = (rng.random_range(-3..=3), rng.random_range(-3..=3), rng.random_range(-3..=3));
    Matrix::from_i64_rows(&[&[0, a, b], &[-a, 0, c], &[-b, -c, 0]]).expect("3x3")
}

/// Cayley transform `(I − S)⁻¹(I + S)`; lands in `SO(3)` for antisymmetric
/// `S`.
pub fn cayley(s: &Matrix) -> Matrix {
    let i = Matrix::identity(s.rows());
    let minus = i.sub(s).expect("square");
    let plus = i.add(s).expect("square");
    minus.inverse().expect("I - S is invertible for antisymmetric S").mul(&plus).expect("square")
}

pub fn random_so3<R: Rng>(rng: &mut R) -> Matrix {
    cayley(&random_antisymmetric3(rng))
}

/// A random product of elementary shears with determinant `±1`.
pub fn random_sl2_pm<R: Rng>(rng: &mut R, det: i64) -> Matrix {
    let mut m = if det < 0 {
        Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]).expect("2x2")
    } else {
        Matrix::identity(2)
    };
    for _ in 0..3 {
        let t = ratio(rng.random_range(-3..=3), rng.random_range(1..=2));
        let upper = Matrix::from_rows(vec![vec![int(1), t.clone()], vec![int(0), int(1)]]).expect("2x2");
        let lower = Matrix::from_rows(vec![vec![int(1), int(0)], vec![t, int(1)]]).expect("2x2");
        let e = if rng.random_bool(0.5) { upper } else { lower };
        m = m.mul(&e).expect("2x2");
    }
    m
}

/// A random invertible 2×2 integer matrix.
pub fn random_gl2<R: Rng>(rng: &mut R) -> Matrix {
    loop {
        let v: [i64; 4] = std::array::from_fn(|_| rng.random_range(-3..=3));
        let m = Matrix::from_i64_rows(&[&v[..2], &v[2..]]).expect("2x2");
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

/// A traceless 2×2 integer matrix.
pub fn random_sl2_generator<R: Rng>(rng: &mut R) -> Matrix {
    let (a, b, c) = (rng.random_range(-3..=3), rng.random_range(-3..=3), rng.random_range(-3..=3));
    Matrix::from_i64_rows(&[&[a, b], &[c, -a]]).expect("2x2")
}

/// `(cos, sin)` of a rational point on the circle, `t ↦ ((1−t²), 2t)/(1+t²)`.
pub fn rational_angle(t: &Scalar) -> (Scalar, Scalar) {
    let one = int(1);
    let d = &one + t * t;
    ((&one - t * t) / &d, (int(2) * t) / d)
}

pub fn random_rational_angle<R: Rng>(rng: &mut R) -> (Scalar, Scalar) {
    rational_angle(&ratio(rng.random_range(-5..=5), rng.random_range(1..=4)))
}
