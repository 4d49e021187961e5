//! Lines on the saddle surface `z = xy` and the witness polygon that stabs a
//! chosen subfamily of rulings while missing a finite set of other lines.
//!
//! The rulings are `λ_α = {(α, t, αt)}` and `ℓ_β = {(t, β, βt)}`. A witness
//! lives in the plane `z = β* x + s` and has one vertex on each chosen `λ_α`:
//! `p_α(s) = (α, β* + s/α, β* α + s)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::geometry::{
    line_intersects_polygon, line_line_dist_sq, line_plane_intersection, ConvexPolygon3, Line3,
    LinePlane, Plane3, Point3, Vec3,
};
use crate::scalar::{least_int_with_square_above, Extended, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RulingError {
    #[error("ruling parameter {0} is not positive")]
    NonPositiveAlpha(Scalar),
    #[error("ruling parameters are not strictly increasing at index {0}")]
    NotIncreasing(usize),
    #[error("stabbed subfamily is empty")]
    EmptyB,
    #[error("index {0} is outside the family")]
    IndexOutOfRange(usize),
    #[error("line {0} of R is also a stabbed ruling")]
    NonDisjointBR(usize),
    #[error("witness point needs a nonzero ruling parameter")]
    ZeroAlpha,
    #[error("witness vertices are not in convex position")]
    ConvexityCheckFailed,
}

pub fn lambda_line(alpha: &Scalar) -> Line3 {
    Line3::new(
        Point3::new(alpha.clone(), Scalar::zero(), Scalar::zero()),
        Vec3::new(Scalar::zero(), Scalar::one(), alpha.clone()),
    )
    .expect("nonzero direction")
}

pub fn ell_line(beta: &Scalar) -> Line3 {
    Line3::new(
        Point3::new(Scalar::zero(), beta.clone(), Scalar::zero()),
        Vec3::new(Scalar::one(), Scalar::zero(), beta.clone()),
    )
    .expect("nonzero direction")
}

/// The rulings `λ_α` for a strictly increasing list of positive `α`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RulingFamily {
    alphas: Vec<Scalar>,
}

impl RulingFamily {
    pub fn new(alphas: Vec<Scalar>) -> Result<Self, RulingError> {
        for (i, a) in alphas.iter().enumerate() {
            if !a.is_positive() {
                return Err(RulingError::NonPositiveAlpha(a.clone()));
            }
            if i > 0 && alphas[i - 1] >= *a {
                return Err(RulingError::NotIncreasing(i));
            }
        }
        Ok(RulingFamily { alphas })
    }

    /// `A = {1, ..., n}`.
    pub fn integers(n: usize) -> Self {
        RulingFamily {
            alphas: (1..=n).map(Scalar::from).collect(),
        }
    }

    /// `α_j = ((n+1)/(n+1-j))²` for `j = 0..n`. Consecutive rulings spread
    /// out like `α^(3/2)`, which keeps the gaps between neighbouring witness
    /// vertices roughly uniform when viewed along the rulings.
    pub fn inverse_square(n: usize) -> Self {
        let m = n as i64 + 1;
        RulingFamily {
            alphas: (0..n as i64)
                .map(|j| Scalar::ratio(m * m, (m - j) * (m - j)))
                .collect(),
        }
    }

    pub fn alphas(&self) -> &[Scalar] {
        &self.alphas
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn lines(&self) -> Vec<Line3> {
        self.alphas.iter().map(lambda_line).collect()
    }
}

impl<'de> Deserialize<'de> for RulingFamily {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let alphas = Vec::<Scalar>::deserialize(deserializer)?;
        RulingFamily::new(alphas).map_err(serde::de::Error::custom)
    }
}

/// The `y`-coordinate of a point where a line crosses the surface.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SigmaY {
    Rational {
        y: Scalar,
    },
    /// Irrational, strictly between `floor` and `floor + 1`.
    Irrational {
        floor: Scalar,
    },
}

impl SigmaY {
    pub fn could_equal(&self, v: &Scalar) -> bool {
        match self {
            SigmaY::Rational { y } => y == v,
            SigmaY::Irrational { .. } => false,
        }
    }
}

/// How a line sits relative to the surface `z = xy`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SigmaClass {
    OnSigmaLambda {
        alpha: Scalar,
    },
    OnSigmaEll {
        beta: Scalar,
    },
    /// At most two crossing points, reported by their `y`-coordinates in
    /// increasing order.
    Secant {
        ys: Vec<SigmaY>,
    },
}

fn is_rational_square(r: &Scalar) -> Option<Scalar> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Scalar::from_big_ratio(sn, sd))
    } else {
        None
    }
}

/// Sign of `x - q * sqrt(disc)` for `disc > 0` not a rational square.
fn cmp_sqrt_term(x: &Scalar, q: &Scalar, disc: &Scalar) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let qs = q.signum();
    let xs = x.signum();
    if qs == 0 {
        return xs.cmp(&0);
    }
    // q sqrt(disc) has the sign of q and magnitude^2 q^2 disc
    let mag = q.square() * disc;
    match (xs >= 0, qs > 0) {
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (true, true) => x.square().cmp(&mag),
        (false, false) => mag.cmp(&x.square()),
    }
}

/// Integer bracket of `p + q sqrt(disc)`.
fn floor_of_surd(p: &Scalar, q: &Scalar, disc: &Scalar) -> BigInt {
    use std::cmp::Ordering;
    let approx = p.to_f64() + q.to_f64() * disc.to_f64().sqrt();
    let mut n = BigInt::from(approx.floor() as i64);
    // n <= p + q sqrt(disc)  <=>  n - p <= q sqrt(disc)
    let le = |n: &BigInt| {
        cmp_sqrt_term(&(Scalar::from_bigint(n.clone()) - p), q, disc) != Ordering::Greater
    };
    while !le(&n) {
        n -= 1;
    }
    while le(&(&n + 1)) {
        n += 1;
    }
    n
}

pub fn classify_vs_sigma(l: &Line3) -> SigmaClass {
    let (a, d) = (l.anchor(), l.dir());
    // z - xy along a + t d:  qa t^2 + qb t + qc
    let qa = -(&d.x * &d.y);
    let qb = &d.z - &(&a.x * &d.y) - &(&a.y * &d.x);
    let qc = &a.z - &(&a.x * &a.y);
    if qa.is_zero() && qb.is_zero() && qc.is_zero() {
        return if d.x.is_zero() {
            SigmaClass::OnSigmaLambda { alpha: a.x.clone() }
        } else {
            SigmaClass::OnSigmaEll { beta: a.y.clone() }
        };
    }
    let y_at = |t: &Scalar| &a.y + &(t * &d.y);
    let rational = |ts: Vec<Scalar>| {
        let mut ys: Vec<Scalar> = ts.iter().map(y_at).collect();
        ys.sort();
        ys.dedup();
        SigmaClass::Secant {
            ys: ys.into_iter().map(|y| SigmaY::Rational { y }).collect(),
        }
    };
    if qa.is_zero() {
        if qb.is_zero() {
            return SigmaClass::Secant { ys: vec![] };
        }
        return rational(vec![-(&qc / &qb)]);
    }
    let disc = qb.square() - Scalar::from_int(4) * &qa * &qc;
    if disc.is_negative() {
        return SigmaClass::Secant { ys: vec![] };
    }
    let two_a = Scalar::from_int(2) * &qa;
    if let Some(r) = is_rational_square(&disc) {
        let t1 = (-&qb + &r) / &two_a;
        let t2 = (-&qb - &r) / &two_a;
        return rational(vec![t1, t2]);
    }
    // qa != 0 forces d.y != 0, so both y-values are irrational
    // y = a.y + d.y (-qb ± sqrt(disc)) / (2 qa)
    let p = &a.y - &(&d.y * &qb / &two_a);
    let q = (&d.y / &two_a).abs();
    let ys = vec![
        SigmaY::Irrational {
            floor: Scalar::from_bigint(floor_of_surd(&p, &-&q, &disc)),
        },
        SigmaY::Irrational {
            floor: Scalar::from_bigint(floor_of_surd(&p, &q, &disc)),
        },
    ];
    SigmaClass::Secant { ys }
}

/// Smallest positive integer `β` whose ruling `ℓ_β` misses every line of `r_prime`.
pub fn choose_beta_star(r_prime: &[Line3]) -> Scalar {
    let mut beta = Scalar::one();
    loop {
        let l = ell_line(&beta);
        if r_prime
            .iter()
            .all(|r| line_line_dist_sq(&l, r).is_positive())
        {
            return beta;
        }
        beta += Scalar::one();
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WitnessPlan {
    pub beta_star: Scalar,
    pub s: Scalar,
    pub delta_sq: Extended,
    /// Indices into the family, increasing.
    pub b: Vec<usize>,
    /// Parameters of the stabbed rulings, increasing.
    pub b_alphas: Vec<Scalar>,
    /// Indices into `R` of lines lying on the surface as `λ` rulings.
    pub r_sigma: Vec<usize>,
    /// Indices into `R` of the remaining lines.
    pub r_prime: Vec<usize>,
}

pub fn witness_plan(
    fam: &RulingFamily,
    b: &[usize],
    r: &[Line3],
) -> Result<WitnessPlan, RulingError> {
    let mut b: Vec<usize> = b.to_vec();
    b.sort_unstable();
    b.dedup();
    if b.is_empty() {
        return Err(RulingError::EmptyB);
    }
    if let Some(&i) = b.iter().find(|&&i| i >= fam.len()) {
        return Err(RulingError::IndexOutOfRange(i));
    }
    let b_alphas: Vec<Scalar> = b.iter().map(|&i| fam.alphas()[i].clone()).collect();
    let b_lines: Vec<Line3> = b_alphas.iter().map(lambda_line).collect();
    if let Some(j) = r.iter().position(|l| b_lines.contains(l)) {
        return Err(RulingError::NonDisjointBR(j));
    }
    let (mut r_sigma, mut r_prime) = (Vec::new(), Vec::new());
    for (j, l) in r.iter().enumerate() {
        match classify_vs_sigma(l) {
            SigmaClass::OnSigmaLambda { .. } => r_sigma.push(j),
            _ => r_prime.push(j),
        }
    }
    let prime_lines: Vec<Line3> = r_prime.iter().map(|&j| r[j].clone()).collect();
    let beta_star = choose_beta_star(&prime_lines);
    let ell = ell_line(&beta_star);
    let delta_sq = prime_lines
        .iter()
        .map(|l| line_line_dist_sq(&ell, l))
        .min()
        .map(Extended::Finite)
        .unwrap_or(Extended::Infinite);
    let s = match &delta_sq {
        Extended::Infinite => Scalar::one(),
        Extended::Finite(d) => {
            let alpha1 = &b_alphas[0];
            let factor = (Scalar::one() + alpha1.recip().expect("positive")).square();
            let i = least_int_with_square_above(&(factor / d));
            Scalar::from_bigint(i).recip().expect("positive")
        }
    };
    Ok(WitnessPlan {
        beta_star,
        s,
        delta_sq,
        b,
        b_alphas,
        r_sigma,
        r_prime,
    })
}

/// `p_α(s) = (α, β* + s/α, β* α + s)`.
pub fn witness_point(
    alpha: &Scalar,
    beta_star: &Scalar,
    s: &Scalar,
) -> Result<Point3, RulingError> {
    let inv = alpha.recip().ok_or(RulingError::ZeroAlpha)?;
    Ok(Point3::new(
        alpha.clone(),
        beta_star + &(s * &inv),
        beta_star * alpha + s,
    ))
}

/// The plane `z = β* x + s` holding the witness.
pub fn witness_plane(beta_star: &Scalar, s: &Scalar) -> Plane3 {
    Plane3::new(
        Vec3::new(beta_star.clone(), Scalar::zero(), -Scalar::one()),
        -s,
    )
    .expect("nonzero normal")
}

pub fn build_witness(plan: &WitnessPlan) -> Result<ConvexPolygon3, RulingError> {
    let verts = plan
        .b_alphas
        .iter()
        .map(|a| witness_point(a, &plan.beta_star, &plan.s))
        .collect::<Result<Vec<_>, _>>()?;
    ConvexPolygon3::new(verts).map_err(|_| RulingError::ConvexityCheckFailed)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A line of `B` misses the witness.
    NotStabbed { index: usize },
    /// A line of `B` meets the witness somewhere other than a single vertex.
    NotUniqueContact { index: usize },
    /// A line of `R` meets the witness.
    NotMissed { index: usize },
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub stabbed: Vec<usize>,
    pub missed: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// True iff `l` meets `c` in exactly one point and that point is a vertex.
fn unique_vertex_contact(l: &Line3, c: &ConvexPolygon3) -> bool {
    let verts = c.vertices();
    let on: Vec<&Point3> = verts.iter().filter(|v| l.contains(v)).collect();
    if on.len() != 1 {
        return false;
    }
    match c.normal() {
        // segment or point: a line through one endpoint that misses the
        // other meets the segment only there
        None => true,
        Some(n) => {
            let plane = Plane3::through(on[0], n).expect("nonzero normal");
            matches!(line_plane_intersection(l, &plane), LinePlane::Point(_))
        }
    }
}

/// Exact check that every line of `b` touches `c` in a single vertex and
/// every line of `r` misses it.
pub fn verify_witness(c: &ConvexPolygon3, b: &[Line3], r: &[Line3]) -> VerificationReport {
    let mut rep = VerificationReport::default();
    for (i, l) in b.iter().enumerate() {
        if !line_intersects_polygon(l, c) {
            rep.violations.push(Violation::NotStabbed { index: i });
        } else if !unique_vertex_contact(l, c) {
            rep.violations
                .push(Violation::NotUniqueContact { index: i });
        } else {
            rep.stabbed.push(i);
        }
    }
    for (j, l) in r.iter().enumerate() {
        if line_intersects_polygon(l, c) {
            rep.violations.push(Violation::NotMissed { index: j });
        } else {
            rep.missed.push(j);
        }
    }
    rep
}
