//! The `E_3` page of the Serre spectral sequence of
//! `BU(n) -> BPU(n) -> K(Z,3)` below the truncation degree `2p^2 + 2p + 3`,
//! where `H^*(K(Z,3))_(p)` is `Z_(p)[x, y_0, y_1, y_01] / (x^2, p y_*)`.
//! `d_3(f m) = nabla(f) x m`; rows `1` and `x` are integral, every row
//! involving a `y` generator is an F_p row.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::galgebra::{make_algebra, Algebra, Element, GeneratorSpec, Monomial};
use crate::linalg::{FpMatrix, IntMatrix, SliceMatrix};
use crate::ring::{Integers, PrimeField};
use crate::symfun::{coker_dim, kernel_k, kernel_l, Lambda};
use crate::verdict::VerdictReport;

/// The truncated presentation of `H^*(K(Z,3))_(p)`.
#[derive(Clone, Debug)]
pub struct Kz3Truncated {
    field: PrimeField,
    alg: Arc<Algebra<PrimeField>>,
    bound: u32,
}

impl Kz3Truncated {
    pub fn new(field: PrimeField) -> Self {
        let p = field.p() as u32;
        let gens = vec![
            GeneratorSpec::odd("x", 3),
            GeneratorSpec::even("y0", 2 * p + 2),
            GeneratorSpec::even("y1", 2 * p * p + 2),
            GeneratorSpec::odd("y01", 2 * p * p + 2 * p + 3),
        ];
        let alg = make_algebra(gens, field).expect("fixed generator list");
        Kz3Truncated { field, alg, bound: 2 * p * p + 2 * p + 3 }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn algebra(&self) -> &Arc<Algebra<PrimeField>> {
        &self.alg
    }

    pub fn basis(&self, d: u32) -> Result<Vec<Monomial>, AlgebraError> {
        if d > self.bound {
            return Err(AlgebraError::Precondition(format!(
                "degree {d} exceeds the truncation bound {}",
                self.bound
            )));
        }
        Ok(self.alg.basis(d))
    }

    /// `1` and `x` generate the free part; everything else is p-torsion.
    pub fn is_integral(&self, m: &Monomial) -> bool {
        m.exponents()[1..].iter().all(|&e| e == 0)
    }

    pub fn contains_x(&self, m: &Monomial) -> bool {
        m.exponent(0) == 1
    }

    /// `x * m` in normal form (x is the first generator, so no sign).
    pub fn times_x(&self, m: &Monomial) -> Option<Monomial> {
        self.alg.mul_monomials(&self.alg.generator_monomial(0), m).map(|(mm, neg)| {
            debug_assert!(!neg);
            mm
        })
    }
}

/// Monomials of `H^s(K(Z,3))` in degree `d`.
pub fn kz3_basis(field: PrimeField, d: u32) -> Result<Vec<Monomial>, AlgebraError> {
    Kz3Truncated::new(field).basis(d)
}

/// One bidegree `E_3^{s,t}`: basis pairs (base monomial, fiber monomial),
/// base-major.
#[derive(Clone, Debug)]
pub struct PageSlice {
    pub s: u32,
    pub t: u32,
    pub basis: Vec<(Monomial, Monomial)>,
    pub integral: bool,
}

/// The differential between two slices.
#[derive(Clone, Debug)]
pub struct PageMap {
    pub source: PageSlice,
    pub target: PageSlice,
    pub matrix: SliceMatrix,
}

/// The `E_3` page for fixed `p` and `n`.
#[derive(Clone, Debug)]
pub struct E3Page {
    field: PrimeField,
    n: u32,
    kz3: Kz3Truncated,
    lambda: Lambda<Integers>,
}

impl E3Page {
    pub fn new(field: PrimeField, n: u32) -> Self {
        E3Page { field, n, kz3: Kz3Truncated::new(field), lambda: Lambda::new(n, Integers) }
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn kz3(&self) -> &Kz3Truncated {
        &self.kz3
    }

    pub fn slice(&self, s: u32, t: u32) -> Result<PageSlice, AlgebraError> {
        let base = self.kz3.basis(s)?;
        let fiber = if t % 2 == 0 { self.lambda.basis(t / 2) } else { Vec::new() };
        let integral = base.iter().all(|m| self.kz3.is_integral(m));
        if !integral && base.iter().any(|m| self.kz3.is_integral(m)) {
            return Err(AlgebraError::Precondition(format!("degree {s} mixes free and torsion rows")));
        }
        let basis = base
            .iter()
            .flat_map(|b| fiber.iter().map(move |f| (b.clone(), f.clone())))
            .collect();
        Ok(PageSlice { s, t, basis, integral })
    }

    /// Matrix of `d_3: E_3^{s,t} -> E_3^{s+3,t-2}`.
    pub fn d3(&self, s: u32, t: u32) -> Result<PageMap, AlgebraError> {
        let source = self.slice(s, t)?;
        let target = if t >= 2 { self.slice(s + 3, t - 2)? } else { self.slice(s + 3, 1)? };
        let mut int = IntMatrix::zeros(target.basis.len(), source.basis.len());
        let lam_alg = self.lambda.algebra();
        for (j, (base, fiber)) in source.basis.iter().enumerate() {
            if self.kz3.contains_x(base) || t < 2 {
                continue;
            }
            let xb = self.kz3.times_x(base).expect("x does not divide base");
            let image = self.lambda.nabla(&Element::from_monomial(lam_alg, fiber.clone(), BigInt::one()));
            for (mono, c) in image.terms() {
                let row = target
                    .basis
                    .iter()
                    .position(|(b, f)| *b == xb && f == mono)
                    .expect("target basis contains every product");
                int.set(row, j, c.clone());
            }
        }
        let matrix = if source.integral && target.integral {
            SliceMatrix::Integer(int)
        } else {
            SliceMatrix::Modular(int.reduce_mod(self.field))
        };
        Ok(PageMap { source, target, matrix })
    }

    /// Number of generators of `E_4^{s,t}` after localizing at p: the F_p
    /// dimension on torsion rows; on integral rows the free rank plus the
    /// count of invariant factors divisible by p, read off Smith forms.
    pub fn e4_rank(&self, s: u32, t: u32) -> Result<usize, AlgebraError> {
        if s + 3 > self.kz3.bound() {
            return Err(AlgebraError::Precondition(format!(
                "bidegree ({s},{t}) needs degree {} beyond the truncation bound",
                s + 3
            )));
        }
        let out = self.d3(s, t)?;
        let incoming = if s >= 3 { Some(self.d3(s - 3, t + 2)?) } else { None };
        let dim = out.source.basis.len();
        if out.source.integral {
            let kernel_rank;
            let v_inv;
            match &out.matrix {
                SliceMatrix::Integer(m) => {
                    let smith = m.smith();
                    kernel_rank = dim - smith.diagonal.len();
                    v_inv = smith.v_inv;
                }
                SliceMatrix::Modular(_) => {
                    return Err(AlgebraError::Precondition("integral row maps into torsion".into()));
                }
            }
            let Some(incoming) = incoming else { return Ok(kernel_rank) };
            let SliceMatrix::Integer(a) = &incoming.matrix else {
                return Err(AlgebraError::Precondition("torsion row maps into an integral row".into()));
            };
            // coordinates of the image inside the kernel basis
            let coords = v_inv.mul(a).rows_from(dim - kernel_rank);
            if coords.rows() == 0 {
                return Ok(0);
            }
            let smith = coords.smith();
            let p = BigInt::from(self.field.p());
            let torsion = smith.diagonal.iter().filter(|d| (*d % &p).is_zero()).count();
            Ok(kernel_rank - smith.diagonal.len() + torsion)
        } else {
            let out_rank = modular(&out.matrix, self.field).rank();
            let in_rank = incoming.map_or(0, |m| modular(&m.matrix, self.field).rank());
            Ok(dim - out_rank - in_rank)
        }
    }
}

fn modular(m: &SliceMatrix, field: PrimeField) -> FpMatrix {
    match m {
        SliceMatrix::Integer(i) => i.reduce_mod(field),
        SliceMatrix::Modular(f) => f.clone(),
    }
}

pub fn d3_matrix(field: PrimeField, n: u32, s: u32, t: u32) -> Result<PageMap, AlgebraError> {
    E3Page::new(field, n).d3(s, t)
}

pub fn e4_rank(field: PrimeField, n: u32, s: u32, t: u32) -> Result<usize, AlgebraError> {
    E3Page::new(field, n).e4_rank(s, t)
}

/// Whether `d_3 . d_3` vanishes out of `(s, t)`.
pub fn d3_squared_vanishes(page: &E3Page, s: u32, t: u32) -> Result<bool, AlgebraError> {
    let first = page.d3(s, t)?;
    let second = page.d3(s + 3, t.saturating_sub(2))?;
    Ok(match (&second.matrix, &first.matrix) {
        (SliceMatrix::Integer(b), SliceMatrix::Integer(a)) => b.mul(a).is_zero(),
        (b, a) => modular(b, page.field).mul(&modular(a, page.field)).is_zero(),
    })
}

/// For `k <= kmax`: `E_4^{0,2k}` has the rank of `K_n^{2k}`, `E_4^{3,2k}`
/// the dimension of the mod-p cokernel of nabla into degree `2k`, and
/// `E_4^{2p+2,2k}` the dimension of `L_n^{2k}`; `d_3 d_3 = 0` throughout.
pub fn verify_e4_identities(field: PrimeField, n: u32, kmax: u32) -> VerdictReport {
    let p = field.p() as u32;
    let params = [("p", i64::from(p)), ("n", i64::from(n)), ("kmax", i64::from(kmax))];
    if n == 0 {
        return VerdictReport::precondition_error("e4-identities", &params, "n must be positive");
    }
    let page = E3Page::new(field, n);
    let bound = page.kz3().bound();
    let mut report = VerdictReport::new("e4-identities", &params);
    for k in 0..=kmax {
        let t = 2 * k;
        let checks: [(u32, usize, &str); 3] = [
            (0, kernel_k(n, k).len(), "rank K_n"),
            (3, coker_dim(field, n, k + 1), "coker dim"),
            (2 * p + 2, kernel_l(field, n, k).len(), "dim L_n"),
        ];
        for (s, expected, what) in checks {
            match page.e4_rank(s, t) {
                Ok(r) => report.record(
                    format!("E4^({s},{t})"),
                    r == expected,
                    format!("page {r}, {what} {expected}"),
                ),
                Err(e) => report.record(format!("E4^({s},{t})"), false, format!("{e}")),
            }
        }
    }
    let mut pairs = 0usize;
    for s in 0..=bound.saturating_sub(6) {
        if page.kz3().basis(s).map_or(true, |b| b.is_empty()) {
            continue;
        }
        for k in 2..=kmax + 1 {
            match d3_squared_vanishes(&page, s, 2 * k) {
                Ok(true) => pairs += 1,
                Ok(false) => report.record(format!("d3 d3 at ({s},{})", 2 * k), false, "nonzero composite"),
                Err(e) => report.record(format!("d3 d3 at ({s},{})", 2 * k), false, format!("{e}")),
            }
        }
    }
    report.record("d3 d3 = 0", true, format!("{pairs} composable pairs"));
    report
}
