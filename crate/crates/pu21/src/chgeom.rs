//! Hermitian linear algebra on C^{2,1}: the ball and Siegel forms, the Cayley
//! transform between them, point classification, the Hermitian cross product,
//! isometries (holomorphic and anti-holomorphic) and the distance invariant.

use crate::numfield::{rat, AlgebraicNumber, Rat, RealAlgebraic};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("operands carry different Hermitian forms")]
    FormMismatch,
    #[error("collinear input to the cross product")]
    CollinearInput,
    #[error("point is not interior (negative)")]
    NotInteriorPoint,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not projectively unitary for the form")]
    NotUnitary,
    #[error("matrix is not Hermitian of signature (2,1)")]
    BadForm,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Which Hermitian form a vector or isometry is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// J1 = diag(-1, 1, 1), the unit-ball model.
    Ball,
    /// J2 antidiagonal, the Siegel model.
    Siegel,
}

impl Form {
    pub fn matrix(self) -> Mat3 {
        match self {
            Form::Ball => Mat3::diag(
                AlgebraicNumber::from_int(-1),
                AlgebraicNumber::one(),
                AlgebraicNumber::one(),
            ),
            Form::Siegel => {
                let mut m = Mat3::zero();
                m.e[0][2] = AlgebraicNumber::one();
                m.e[1][1] = AlgebraicNumber::one();
                m.e[2][0] = AlgebraicNumber::one();
                m
            }
        }
    }
}

/// 3x3 matrix over K, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat3 {
    pub e: [[AlgebraicNumber; 3]; 3],
}

impl Mat3 {
    pub fn zero() -> Self {
        Mat3 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| AlgebraicNumber::zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            m.e[i][i] = AlgebraicNumber::one();
        }
        m
    }

    pub fn diag(a: AlgebraicNumber, b: AlgebraicNumber, c: AlgebraicNumber) -> Self {
        let mut m = Mat3::zero();
        m.e[0][0] = a;
        m.e[1][1] = b;
        m.e[2][2] = c;
        m
    }

    pub fn from_rows(rows: [[AlgebraicNumber; 3]; 3]) -> Self {
        Mat3 { e: rows }
    }

    pub fn conj(&self) -> Self {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| self.e[i][j].conj())),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| self.e[j][i].clone())),
        }
    }

    pub fn conj_transpose(&self) -> Self {
        self.conj().transpose()
    }

    pub fn scale(&self, a: &AlgebraicNumber) -> Self {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| &self.e[i][j] * a)),
        }
    }

    pub fn det(&self) -> AlgebraicNumber {
        let e = &self.e;
        let m = |i: usize, j: usize| &e[i][j];
        let t1 = m(0, 0) * &(&(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1)));
        let t2 = m(0, 1) * &(&(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0)));
        let t3 = m(0, 2) * &(&(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0)));
        &(&t1 - &t2) + &t3
    }

    pub fn adjugate(&self) -> Self {
        let e = &self.e;
        let cof = |r: [usize; 2], c: [usize; 2]| -> AlgebraicNumber {
            &(&e[r[0]][c[0]] * &e[r[1]][c[1]]) - &(&e[r[0]][c[1]] * &e[r[1]][c[0]])
        };
        // adj = transpose of cofactor matrix
        let mut a = Mat3::zero();
        let idx = [[1usize, 2usize], [0, 2], [0, 1]];
        for i in 0..3 {
            for j in 0..3 {
                let v = cof(idx[j], idx[i]);
                a.e[i][j] = if (i + j) % 2 == 0 { v } else { -&v };
            }
        }
        a
    }

    pub fn inverse(&self) -> Result<Self, GeomError> {
        let d = self.det();
        if d.is_zero() {
            return Err(GeomError::Singular);
        }
        let dinv = d.inverse().unwrap();
        Ok(self.adjugate().scale(&dinv))
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        Vec3 {
            e: std::array::from_fn(|i| {
                let mut acc = AlgebraicNumber::zero();
                for j in 0..3 {
                    acc = &acc + &(&self.e[i][j] * &v.e[j]);
                }
                acc
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(|x| x.is_zero())
    }

    /// Whether the matrix is a nonzero K-scalar multiple of the identity:
    /// zero off-diagonal, equal diagonal, exactly.
    pub fn is_scalar(&self) -> Option<AlgebraicNumber> {
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !self.e[i][j].is_zero() {
                    return None;
                }
            }
        }
        if self.e[0][0] == self.e[1][1] && self.e[1][1] == self.e[2][2] && !self.e[0][0].is_zero() {
            Some(self.e[0][0].clone())
        } else {
            None
        }
    }

    /// Projective equality: self = λ·other for some nonzero λ in K.
    pub fn proj_eq(&self, other: &Mat3) -> bool {
        let mut lambda: Option<AlgebraicNumber> = None;
        for i in 0..3 {
            for j in 0..3 {
                let a = &self.e[i][j];
                let b = &other.e[i][j];
                match (a.is_zero(), b.is_zero()) {
                    (true, true) => continue,
                    (true, false) | (false, true) => return false,
                    (false, false) => {
                        let r = a * &b.inverse().unwrap();
                        match &lambda {
                            None => lambda = Some(r),
                            Some(l) => {
                                if *l != r {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        lambda.is_some()
    }
}

impl std::fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", write_matrix(self))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = AlgebraicNumber::zero();
                for k in 0..3 {
                    acc = &acc + &(&self.e[i][k] * &rhs.e[k][j]);
                }
                out.e[i][j] = acc;
            }
        }
        out
    }
}

/// Column vector in C^3 over K.
#[derive(Clone, PartialEq, Eq)]
pub struct Vec3 {
    pub e: [AlgebraicNumber; 3],
}

impl Vec3 {
    pub fn new(a: AlgebraicNumber, b: AlgebraicNumber, c: AlgebraicNumber) -> Self {
        Vec3 { e: [a, b, c] }
    }

    pub fn zero() -> Self {
        Vec3 {
            e: std::array::from_fn(|_| AlgebraicNumber::zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_zero())
    }

    pub fn conj(&self) -> Self {
        Vec3 {
            e: std::array::from_fn(|i| self.e[i].conj()),
        }
    }

    pub fn scale(&self, a: &AlgebraicNumber) -> Self {
        Vec3 {
            e: std::array::from_fn(|i| &self.e[i] * a),
        }
    }

    pub fn scale_rat(&self, q: &Rat) -> Self {
        Vec3 {
            e: std::array::from_fn(|i| self.e[i].scale(q)),
        }
    }

    /// Projective equality: all 2x2 minors of the stacked 2x3 matrix vanish.
    pub fn proj_eq(&self, other: &Vec3) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                let m = &(&self.e[i] * &other.e[j]) - &(&self.e[j] * &other.e[i]);
                if !m.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}, {}]", self.e[0], self.e[1], self.e[2])
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, rhs: &Vec3) -> Vec3 {
        Vec3 {
            e: std::array::from_fn(|i| &self.e[i] + &rhs.e[i]),
        }
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: &Vec3) -> Vec3 {
        Vec3 {
            e: std::array::from_fn(|i| &self.e[i] - &rhs.e[i]),
        }
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3 {
            e: std::array::from_fn(|i| -&self.e[i]),
        }
    }
}

/// A vector tagged with the Hermitian form it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    pub v: Vec3,
    pub form: Form,
}

impl HVector {
    pub fn new(v: Vec3, form: Form) -> Self {
        HVector { v, form }
    }

    pub fn ball(a: AlgebraicNumber, b: AlgebraicNumber, c: AlgebraicNumber) -> Self {
        HVector {
            v: Vec3::new(a, b, c),
            form: Form::Ball,
        }
    }

    pub fn proj_eq(&self, other: &HVector) -> bool {
        self.form == other.form && self.v.proj_eq(&other.v)
    }

    pub fn scale_rat(&self, q: &Rat) -> Self {
        HVector {
            v: self.v.scale_rat(q),
            form: self.form,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    Negative,
    Null,
    Positive,
}

/// ⟨u, v⟩ = v* J u: linear in the first argument, conjugate-linear in the
/// second.
pub fn herm(u: &HVector, v: &HVector) -> Result<AlgebraicNumber, GeomError> {
    if u.form != v.form {
        return Err(GeomError::FormMismatch);
    }
    let (a, b) = (&u.v.e, &v.v.e);
    Ok(match u.form {
        Form::Ball => {
            &(&(&a[1] * &b[1].conj()) + &(&a[2] * &b[2].conj())) - &(&a[0] * &b[0].conj())
        }
        Form::Siegel => {
            &(&(&a[0] * &b[2].conj()) + &(&a[1] * &b[1].conj())) + &(&a[2] * &b[0].conj())
        }
    })
}

/// ⟨v, v⟩ as an exact real.
pub fn self_norm(v: &HVector) -> RealAlgebraic {
    let h = herm(v, v).expect("same form");
    debug_assert!(h.im.is_zero());
    h.re
}

pub fn classify(v: &HVector) -> PointClass {
    match self_norm(v).sign() {
        -1 => PointClass::Negative,
        0 => PointClass::Null,
        _ => PointClass::Positive,
    }
}

/// Hermitian cross product u ⊠ v: the Euclidean cross product of the row
/// vectors u*J and v*J.  The result is J-orthogonal to both inputs.
pub fn box_product(u: &HVector, v: &HVector) -> Result<HVector, GeomError> {
    if u.form != v.form {
        return Err(GeomError::FormMismatch);
    }
    let j = u.form.matrix();
    let a = row_times(&u.v, &j);
    let b = row_times(&v.v, &j);
    let w = Vec3::new(
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    );
    if w.is_zero() {
        return Err(GeomError::CollinearInput);
    }
    Ok(HVector::new(w, u.form))
}

/// Row vector u* J.
fn row_times(u: &Vec3, j: &Mat3) -> [AlgebraicNumber; 3] {
    std::array::from_fn(|k| {
        let mut acc = AlgebraicNumber::zero();
        for i in 0..3 {
            acc = &acc + &(&u.e[i].conj() * &j.e[i][k]);
        }
        acc
    })
}

/// The Cayley transform matrix interchanging the ball and Siegel forms.
pub fn cayley_matrix() -> Mat3 {
    let h = RealAlgebraic::sqrt_scaled(2, rat(1, 2)); // 1/√2 = √2/2
    let hh = AlgebraicNumber::from_real(h);
    Mat3::from_rows([
        [hh.clone(), AlgebraicNumber::zero(), hh.clone()],
        [
            AlgebraicNumber::zero(),
            AlgebraicNumber::one(),
            AlgebraicNumber::zero(),
        ],
        [-&hh, AlgebraicNumber::zero(), hh],
    ])
}

/// Moves a vector between the two models: Ball -> Siegel by C, Siegel -> Ball
/// by C^{-1}.  Inner products are preserved across the swap.
pub fn cayley(v: &HVector) -> HVector {
    let c = cayley_matrix();
    match v.form {
        Form::Ball => HVector::new(c.mul_vec(&v.v), Form::Siegel),
        Form::Siegel => HVector::new(c.inverse().unwrap().mul_vec(&v.v), Form::Ball),
    }
}

/// A projective isometry: v ↦ M v, or v ↦ M conj(v) when anti-holomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    pub m: Mat3,
    pub anti: bool,
    pub form: Form,
}

impl Isometry {
    pub fn identity(form: Form) -> Self {
        Isometry {
            m: Mat3::identity(),
            anti: false,
            form,
        }
    }

    pub fn holomorphic(m: Mat3, form: Form) -> Self {
        Isometry { m, anti: false, form }
    }

    pub fn antiholomorphic(m: Mat3, form: Form) -> Self {
        Isometry { m, anti: true, form }
    }

    pub fn apply(&self, v: &HVector) -> Result<HVector, GeomError> {
        if v.form != self.form {
            return Err(GeomError::FormMismatch);
        }
        let w = if self.anti {
            self.m.mul_vec(&v.v.conj())
        } else {
            self.m.mul_vec(&v.v)
        };
        Ok(HVector::new(w, self.form))
    }

    /// (M1, a1) ∘ (M2, a2) = (M1·M2 or M1·conj(M2), a1 xor a2).
    pub fn compose(&self, rhs: &Isometry) -> Isometry {
        assert_eq!(self.form, rhs.form, "form mismatch in composition");
        let m = if self.anti {
            &self.m * &rhs.m.conj()
        } else {
            &self.m * &rhs.m
        };
        Isometry {
            m,
            anti: self.anti != rhs.anti,
            form: self.form,
        }
    }

    pub fn inverse(&self) -> Result<Isometry, GeomError> {
        let minv = self.m.inverse()?;
        if self.anti {
            // (M, anti)^{-1} = (conj(M^{-1}), anti)
            Ok(Isometry {
                m: minv.conj(),
                anti: true,
                form: self.form,
            })
        } else {
            Ok(Isometry {
                m: minv,
                anti: false,
                form: self.form,
            })
        }
    }

    pub fn is_projective_identity(&self) -> bool {
        !self.anti && self.m.is_scalar().is_some()
    }

    pub fn proj_eq(&self, other: &Isometry) -> bool {
        self.anti == other.anti && self.form == other.form && self.m.proj_eq(&other.m)
    }

    /// The positive rational λ with M* J M = λ J, if the matrix is
    /// projectively unitary for its form.
    pub fn form_scalar(&self) -> Option<Rat> {
        let j = self.form.matrix();
        let lhs = &(&self.m.conj_transpose() * &j) * &self.m;
        // λ = lhs[1][1] / j[1][1]; both forms have j[1][1] = 1
        let lam = lhs.e[1][1].clone();
        if !lam.is_real() {
            return None;
        }
        let q = lam.re.as_rational()?;
        if lhs == j.scale(&AlgebraicNumber::from_rat(q.clone())) {
            Some(q)
        } else {
            None
        }
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        match self.form_scalar() {
            Some(q) if q > Rat::from(num_bigint::BigInt::from(0)) => Ok(()),
            _ => Err(GeomError::NotUnitary),
        }
    }

    /// M^k for k >= 0, or (M^{-1})^{|k|}.
    pub fn pow(&self, k: i64) -> Isometry {
        let base = if k < 0 {
            self.inverse().expect("invertible isometry")
        } else {
            self.clone()
        };
        let mut acc = Isometry::identity(self.form);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }
}

/// cosh²(d/2) = |⟨u,v⟩|² / (⟨u,u⟩⟨v,v⟩); both points must be interior.
pub fn dist_cosh_sq(u: &HVector, v: &HVector) -> Result<RealAlgebraic, GeomError> {
    if u.form != v.form {
        return Err(GeomError::FormMismatch);
    }
    if classify(u) != PointClass::Negative || classify(v) != PointClass::Negative {
        return Err(GeomError::NotInteriorPoint);
    }
    let num = herm(u, v)?.norm_sqr();
    let den = &self_norm(u) * &self_norm(v);
    Ok(&num * &den.inverse().unwrap())
}

/// Checks that a matrix is Hermitian with signature (2,1), by symbolic
/// congruence diagonalization.
pub fn validate_hermitian_form(m: &Mat3) -> Result<(), GeomError> {
    if *m != m.conj_transpose() {
        return Err(GeomError::BadForm);
    }
    // Gaussian congruence: track the diagonal signs of D in P* M P = D.
    let mut a = m.clone();
    let mut signs = Vec::new();
    for step in 0..3 {
        // find a nonzero diagonal pivot at or after `step`
        let mut pivot = None;
        for i in step..3 {
            if !a.e[i][i].is_zero() {
                pivot = Some(i);
                break;
            }
        }
        let p = match pivot {
            Some(p) => p,
            None => {
                // all remaining diagonal entries vanish; if any off-diagonal
                // remains, signature has a hyperbolic pair (+1, -1)
                let mut found = false;
                for i in step..3 {
                    for j in (i + 1)..3 {
                        if !a.e[i][j].is_zero() {
                            found = true;
                        }
                    }
                }
                if found {
                    signs.push(1);
                    signs.push(-1);
                }
                break;
            }
        };
        if p != step {
            // swap rows/cols p and step
            a.e.swap(p, step);
            for row in a.e.iter_mut() {
                row.swap(p, step);
            }
        }
        let d = a.e[step][step].clone();
        debug_assert!(d.is_real());
        signs.push(d.re.sign());
        let dinv = d.inverse().unwrap();
        // eliminate row/col below
        for i in (step + 1)..3 {
            let f = &a.e[i][step] * &dinv;
            if f.is_zero() {
                continue;
            }
            for j in 0..3 {
                let t = &f * &a.e[step][j];
                a.e[i][j] = &a.e[i][j] - &t;
            }
            for irow in 0..3 {
                let t = &f.conj() * &a.e[irow][step];
                a.e[irow][i] = &a.e[irow][i] - &t;
            }
        }
    }
    let pos = signs.iter().filter(|&&s| s > 0).count();
    let negs = signs.iter().filter(|&&s| s < 0).count();
    if pos == 2 && negs == 1 {
        Ok(())
    } else {
        Err(GeomError::BadForm)
    }
}

/// Matrix text format: rows separated by `;`, entries by `,`, optionally
/// wrapped in brackets.  Entries use the K-element grammar.
pub fn write_matrix(m: &Mat3) -> String {
    let rows: Vec<String> = m
        .e
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

pub fn parse_matrix(s: &str) -> Result<Mat3, GeomError> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let rows: Vec<&str> = inner.split(';').collect();
    if rows.len() != 3 {
        return Err(GeomError::Parse(format!("expected 3 rows, got {}", rows.len())));
    }
    let mut m = Mat3::zero();
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 3 {
            return Err(GeomError::Parse(format!(
                "row {i} has {} entries, expected 3",
                cells.len()
            )));
        }
        for (j, cell) in cells.iter().enumerate() {
            m.e[i][j] = AlgebraicNumber::from_str(cell.trim())
                .map_err(|e| GeomError::Parse(e.to_string()))?;
        }
    }
    Ok(m)
}

pub fn write_vector(v: &Vec3) -> String {
    format!("[{}, {}, {}]", v.e[0], v.e[1], v.e[2])
}

pub fn parse_vector(s: &str) -> Result<Vec3, GeomError> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let cells: Vec<&str> = inner.split(',').collect();
    if cells.len() != 3 {
        return Err(GeomError::Parse(format!(
            "expected 3 entries, got {}",
            cells.len()
        )));
    }
    let mut v = Vec3::zero();
    for (j, cell) in cells.iter().enumerate() {
        v.e[j] =
            AlgebraicNumber::from_str(cell.trim()).map_err(|e| GeomError::Parse(e.to_string()))?;
    }
    Ok(v)
}

/// Loads a Hermitian form matrix, validating its invariants.
pub fn load_hermitian_form(s: &str) -> Result<Mat3, GeomError> {
    let m = parse_matrix(s)?;
    validate_hermitian_form(&m)?;
    Ok(m)
}

/// Loads an isometry matrix for a form, validating projective unitarity.
pub fn load_isometry(s: &str, form: Form, anti: bool) -> Result<Isometry, GeomError> {
    let m = parse_matrix(s)?;
    let iso = Isometry { m, anti, form };
    iso.validate()?;
    Ok(iso)
}

pub fn origin() -> HVector {
    HVector::ball(
        AlgebraicNumber::one(),
        AlgebraicNumber::zero(),
        AlgebraicNumber::zero(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn an(s: &str) -> AlgebraicNumber {
        s.parse().unwrap()
    }

    fn random_vec(rng: &mut StdRng) -> HVector {
        let mut pick = |rng: &mut StdRng| {
            AlgebraicNumber::new(
                RealAlgebraic::sqrt_scaled(
                    crate::numfield::RADICANDS[rng.gen_range(0..8usize)],
                    rat(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=4)),
                ),
                RealAlgebraic::from_rat(rat(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=4))),
            )
        };
        HVector::ball(pick(rng), pick(rng), pick(rng))
    }

    #[test]
    fn herm_examples() {
        let o = origin();
        assert_eq!(herm(&o, &o).unwrap(), AlgebraicNumber::from_int(-1));
        let u = HVector::new(
            Vec3::new(
                AlgebraicNumber::one(),
                AlgebraicNumber::zero(),
                AlgebraicNumber::zero(),
            ),
            Form::Siegel,
        );
        let v = HVector::new(
            Vec3::new(
                AlgebraicNumber::zero(),
                AlgebraicNumber::zero(),
                AlgebraicNumber::one(),
            ),
            Form::Siegel,
        );
        assert_eq!(herm(&u, &v).unwrap(), AlgebraicNumber::one());
        assert_eq!(herm(&u, &origin()), Err(GeomError::FormMismatch));
    }

    #[test]
    fn herm_conjugate_symmetry() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let u = random_vec(&mut rng);
            let v = random_vec(&mut rng);
            assert_eq!(herm(&u, &v).unwrap(), herm(&v, &u).unwrap().conj());
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&origin()), PointClass::Negative);
        let null = HVector::ball(
            AlgebraicNumber::one(),
            AlgebraicNumber::one(),
            AlgebraicNumber::zero(),
        );
        assert_eq!(classify(&null), PointClass::Null);
        let pos = HVector::ball(
            AlgebraicNumber::zero(),
            AlgebraicNumber::one(),
            AlgebraicNumber::zero(),
        );
        assert_eq!(classify(&pos), PointClass::Positive);
    }

    #[test]
    fn box_product_orthogonality() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut tested = 0;
        while tested < 1000 {
            let u = random_vec(&mut rng);
            let v = random_vec(&mut rng);
            match box_product(&u, &v) {
                Ok(w) => {
                    assert!(herm(&w, &u).unwrap().is_zero());
                    assert!(herm(&w, &v).unwrap().is_zero());
                    tested += 1;
                }
                Err(GeomError::CollinearInput) => continue,
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn box_product_collinear_errors() {
        let u = origin();
        assert_eq!(box_product(&u, &u), Err(GeomError::CollinearInput));
        let w = u.scale_rat(&rat(3, 2));
        assert_eq!(box_product(&u, &w), Err(GeomError::CollinearInput));
    }

    #[test]
    fn cayley_examples() {
        let o = origin();
        let image = cayley(&o);
        assert_eq!(image.form, Form::Siegel);
        let expect = Vec3::new(an("1/2*sqrt(2)"), an("0"), an("-1/2*sqrt(2)"));
        assert_eq!(image.v, expect);
        // C* J2 C = J1 exactly
        let c = cayley_matrix();
        let lhs = &(&c.conj_transpose() * &Form::Siegel.matrix()) * &c;
        assert_eq!(lhs, Form::Ball.matrix());
        // herm preserved on random pairs, and the inverse roundtrips
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let u = random_vec(&mut rng);
            let v = random_vec(&mut rng);
            let hu = herm(&u, &v).unwrap();
            let hc = herm(&cayley(&u), &cayley(&v)).unwrap();
            assert_eq!(hu, hc);
            let back = cayley(&cayley(&u));
            assert_eq!(back.v, u.v);
        }
    }

    #[test]
    fn apply_identity_and_classification() {
        let id = Isometry::identity(Form::Ball);
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..20 {
            let v = random_vec(&mut rng);
            if v.v.is_zero() {
                continue;
            }
            assert_eq!(id.apply(&v).unwrap(), v);
        }
    }

    #[test]
    fn dist_examples() {
        let o = origin();
        assert_eq!(dist_cosh_sq(&o, &o).unwrap(), RealAlgebraic::one());
        let pos = HVector::ball(
            AlgebraicNumber::zero(),
            AlgebraicNumber::one(),
            AlgebraicNumber::zero(),
        );
        assert_eq!(dist_cosh_sq(&o, &pos), Err(GeomError::NotInteriorPoint));
    }

    #[test]
    fn signature_validation() {
        assert!(validate_hermitian_form(&Form::Ball.matrix()).is_ok());
        assert!(validate_hermitian_form(&Form::Siegel.matrix()).is_ok());
        assert!(validate_hermitian_form(&Mat3::identity()).is_err());
        let bad = Mat3::diag(
            AlgebraicNumber::from_int(1),
            AlgebraicNumber::from_int(-1),
            AlgebraicNumber::from_int(-1),
        );
        assert!(validate_hermitian_form(&bad).is_err());
        // non-Hermitian
        let mut nh = Mat3::identity();
        nh.e[0][1] = AlgebraicNumber::i();
        assert!(validate_hermitian_form(&nh).is_err());
    }

    #[test]
    fn matrix_io_roundtrip() {
        let j = Form::Siegel.matrix();
        let s = write_matrix(&j);
        let back = parse_matrix(&s).unwrap();
        assert_eq!(j, back);
        assert!(load_hermitian_form(&s).is_ok());
        let v = Vec3::new(an("1 + sqrt(2)"), an("i"), an("-3/4*i*sqrt(30)"));
        let back = parse_vector(&write_vector(&v)).unwrap();
        assert_eq!(v, back);
    }

    #[test]
    fn anti_holomorphic_composition() {
        let t = Isometry::antiholomorphic(
            Mat3::diag(
                AlgebraicNumber::one(),
                AlgebraicNumber::one(),
                AlgebraicNumber::from_int(-1),
            ),
            Form::Ball,
        );
        let sq = t.compose(&t);
        assert!(!sq.anti);
        assert!(sq.is_projective_identity());
        let inv = t.inverse().unwrap();
        assert!(t.compose(&inv).is_projective_identity());
    }
}
