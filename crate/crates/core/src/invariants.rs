//! `SL_2(F_p)` acting on `F_p[xi, eta] (x) Lambda[a, b]` and its fixed subspaces.
//!
//! A matrix acts on the column vectors `(xi, eta)^T` and `(a, b)^T` at once:
//! the image of `xi` is the first column, the image of `eta` the second.
//! Fixed subspaces are nullspaces of the stacked `g - 1` over the group
//! generators. `p` divides the group order, so no averaging is used.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::galgebra::Element;
use crate::linalg::FpMatrix;
use crate::ring::{CoeffRing, PrimeField};
use crate::steenrod::FpElement;
use crate::topology::GammaModel;
use crate::verdict::VerdictReport;

/// 2x2 matrix over F_p, entries `m[row][col]` reduced into `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2(pub [[u64; 2]; 2]);

impl Mat2 {
    pub fn new(field: PrimeField, rows: [[i64; 2]; 2]) -> Self {
        Mat2(rows.map(|r| r.map(|v| field.reduce_i64(v))))
    }

    pub fn identity() -> Self {
        Mat2([[1, 0], [0, 1]])
    }

    pub fn mul(&self, other: &Mat2, field: PrimeField) -> Mat2 {
        let mut out = [[0u64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = field.add(&field.mul(&self.0[i][0], &other.0[0][j]), &field.mul(&self.0[i][1], &other.0[1][j]));
            }
        }
        Mat2(out)
    }

    pub fn det(&self, field: PrimeField) -> u64 {
        field.sub(&field.mul(&self.0[0][0], &self.0[1][1]), &field.mul(&self.0[0][1], &self.0[1][0]))
    }

    pub fn inverse(&self, field: PrimeField) -> Option<Mat2> {
        let inv = field.inv(self.det(field))?;
        let m = &self.0;
        let adj = [[m[1][1], field.neg(&m[0][1])], [field.neg(&m[1][0]), m[0][0]]];
        Some(Mat2(adj.map(|r| r.map(|v| field.mul(&v, &inv)))))
    }
}

/// `[[1,1],[0,1]]` and `[[0,-1],[1,0]]`.
pub fn sl2_generators(field: PrimeField) -> [Mat2; 2] {
    [Mat2::new(field, [[1, 1], [0, 1]]), Mat2::new(field, [[0, -1], [1, 0]])]
}

/// Closure of `gens` under multiplication, sorted.
pub fn generate_group(field: PrimeField, gens: &[Mat2]) -> Result<Vec<Mat2>, AlgebraError> {
    if gens.iter().any(|g| g.det(field) == 0) {
        return Err(AlgebraError::NonInvertible);
    }
    let mut seen = BTreeSet::new();
    seen.insert(Mat2::identity());
    let mut queue: VecDeque<Mat2> = VecDeque::from([Mat2::identity()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g, field);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Matrices acting diagonally on every block of a [`GammaModel`].
#[derive(Clone, Debug)]
pub struct GroupAction {
    model: GammaModel,
    generators: Vec<Mat2>,
}

/// Basis of the fixed subspace in one degree.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    pub degree: u32,
    pub basis: Vec<FpElement>,
}

impl GroupAction {
    pub fn new(model: GammaModel, generators: Vec<Mat2>) -> Result<Self, AlgebraError> {
        if generators.iter().any(|g| g.det(model.field()) == 0) {
            return Err(AlgebraError::NonInvertible);
        }
        Ok(GroupAction { model, generators })
    }

    pub fn sl2(model: GammaModel) -> Self {
        let gens = sl2_generators(model.field()).to_vec();
        GroupAction { model, generators: gens }
    }

    pub fn model(&self) -> &GammaModel {
        &self.model
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    pub fn act(&self, g: &Mat2, e: &FpElement) -> FpElement {
        act(&self.model, g, e)
    }

    /// Matrix of `g` on the degree-`d` basis.
    pub fn degree_matrix(&self, g: &Mat2, d: u32) -> FpMatrix {
        let alg = self.model.algebra();
        let basis = alg.basis(d);
        let cols: Vec<Vec<u64>> = basis
            .iter()
            .map(|m| {
                let img = self.act(g, &Element::from_monomial(alg, m.clone(), 1));
                img.coords(d).expect("action preserves degree")
            })
            .collect();
        FpMatrix::from_columns(self.model.field(), basis.len(), &cols)
    }

    /// Stacked `g - 1` over the generators in degree `d`.
    fn fixed_point_system(&self, d: u32) -> FpMatrix {
        let field = self.model.field();
        let dim = self.model.algebra().dim(d);
        let mut stacked = FpMatrix::zeros(field, 0, dim);
        for g in &self.generators {
            let mut m = self.degree_matrix(g, d);
            for i in 0..dim {
                m.set(i, i, field.sub(&m.get(i, i), &1));
            }
            stacked = stacked.vstack(&m);
        }
        stacked
    }

    pub fn invariant_subspace(&self, d: u32) -> InvariantBasis {
        let alg = self.model.algebra();
        let dim = alg.dim(d);
        let rows = if self.generators.is_empty() {
            (0..dim).map(|i| (0..dim).map(|j| u64::from(i == j)).collect()).collect()
        } else {
            self.fixed_point_system(d).nullspace()
        };
        let basis = rows
            .into_iter()
            .map(|r| Element::from_coords(alg, d, &r).expect("nullspace vector has basis length"))
            .collect();
        InvariantBasis { degree: d, basis }
    }

    /// Dimension of the fixed part of `span(vectors)`, all of degree `d`.
    pub fn fixed_dim_within(&self, vectors: &[FpElement], d: u32) -> usize {
        if vectors.is_empty() {
            return 0;
        }
        let field = self.model.field();
        let dim = self.model.algebra().dim(d);
        let cols: Vec<Vec<u64>> = vectors.iter().map(|v| v.coords(d).expect("degree d")).collect();
        let span = FpMatrix::from_columns(field, dim, &cols);
        let mut system = FpMatrix::zeros(field, 0, vectors.len());
        for g in &self.generators {
            let mut m = self.degree_matrix(g, d);
            for i in 0..dim {
                m.set(i, i, field.sub(&m.get(i, i), &1));
            }
            system = system.vstack(&m.mul(&span));
        }
        // the span may be dependent: count fixed combinations modulo relations
        let fixed = system.nullspace();
        if fixed.is_empty() {
            return 0;
        }
        let images: Vec<Vec<u64>> = fixed
            .iter()
            .map(|c| {
                let col = FpMatrix::from_columns(field, vectors.len(), &[c.clone()]);
                let v = span.mul(&col);
                (0..dim).map(|i| v.get(i, 0)).collect()
            })
            .collect();
        FpMatrix::from_columns(field, dim, &images).rank()
    }
}

/// The algebra automorphism induced by `g` on every `(xi_j, eta_j)` and `(a_j, b_j)` pair.
pub fn act(model: &GammaModel, g: &Mat2, e: &FpElement) -> FpElement {
    let alg = model.algebra();
    let mut images = Vec::with_capacity(alg.num_generators());
    for idx in 0..alg.num_generators() {
        let (block, kind) = model.locate(idx);
        let (first, second) = match kind {
            GenKind::Xi | GenKind::Eta => (model.xi(block), model.eta(block)),
            GenKind::A | GenKind::B => (model.a(block), model.b(block)),
        };
        let col = match kind {
            GenKind::Xi | GenKind::A => 0,
            GenKind::Eta | GenKind::B => 1,
        };
        let img = &first.scale(&g.0[0][col]) + &second.scale(&g.0[1][col]);
        images.push(img);
    }
    e.substitute(alg, &images)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Xi,
    Eta,
    A,
    B,
}

/// Dickson invariants `f = xi^p eta - eta^p xi` and
/// `h = xi^{p^2-p} + eta^{p-1} (xi^{p-1} - eta^{p-1})^{p-1}` in block `j`.
pub fn dickson_elements(model: &GammaModel, j: usize) -> (FpElement, FpElement) {
    let p = model.field().p() as u32;
    let (xi, eta) = (model.xi(j), model.eta(j));
    let f = &(&xi.pow(p) * &eta) - &(&eta.pow(p) * &xi);
    let inner = &xi.pow(p - 1) - &eta.pow(p - 1);
    let h = &xi.pow(p * p - p) + &(&eta.pow(p - 1) * &inner.pow(p - 1));
    (f, h)
}

/// The invariants `s, y, z, w, e` of one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuiElements {
    /// `xi b - eta a`, degree 3
    pub s: FpElement,
    /// `a b`, degree 2
    pub y: FpElement,
    /// `xi^p b - eta^p a`, degree 2p + 1
    pub z: FpElement,
    /// `xi^{p^2} b - eta^{p^2} a`, degree 2p^2 + 1
    pub w: FpElement,
    /// `xi^{p^2} eta - eta^{p^2} xi`, degree 2p^2 + 2
    pub e: FpElement,
}

pub fn mui_elements(model: &GammaModel, j: usize) -> MuiElements {
    let p = model.field().p() as u32;
    let (xi, eta, a, b) = (model.xi(j), model.eta(j), model.a(j), model.b(j));
    let pair = |k: u32, second_b: &FpElement, second_a: &FpElement| {
        &(&xi.pow(k) * second_b) - &(&eta.pow(k) * second_a)
    };
    MuiElements {
        s: pair(1, &b, &a),
        y: &a * &b,
        z: pair(p, &b, &a),
        w: pair(p * p, &b, &a),
        e: pair(p * p, &eta, &xi),
    }
}

/// Products `prod gens[i]^{e_i}` of total degree `d`, with exponent caps.
pub(crate) fn products_in_degree(
    one: &FpElement,
    gens: &[(FpElement, u32, Option<u32>)],
    d: u32,
) -> Vec<FpElement> {
    fn go(
        idx: usize,
        remaining: u32,
        acc: FpElement,
        gens: &[(FpElement, u32, Option<u32>)],
        out: &mut Vec<FpElement>,
    ) {
        if idx == gens.len() {
            if remaining == 0 && !acc.is_zero() {
                out.push(acc);
            }
            return;
        }
        let (g, deg, cap) = &gens[idx];
        let mut power = acc;
        let mut e = 0u32;
        loop {
            go(idx + 1, remaining - e * deg, power.clone(), gens, out);
            e += 1;
            if e * deg > remaining || cap.is_some_and(|c| e > c) {
                break;
            }
            power = &power * g;
        }
    }
    let mut out = Vec::new();
    go(0, d, one.clone(), gens, &mut out);
    out
}

pub(crate) fn span_rank(vectors: &[FpElement], d: u32) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let alg = first.algebra();
    let cols: Vec<Vec<u64>> = vectors.iter().map(|v| v.coords(d).expect("degree d")).collect();
    FpMatrix::from_columns(*alg.ring(), alg.dim(d), &cols).rank()
}

/// The fixed ring of `SL_2(F_p)` on `H^*(B Gamma; F_p)` is generated by
/// `f, h, s, y, z` subject to `ys = yz = fy + sz = 0`: generators are fixed by
/// the whole group, the relations hold, and in every degree up to `dmax` the
/// fixed subspace has the dimension of the span of products.
pub fn verify_mui_presentation(field: PrimeField, dmax: u32) -> VerdictReport {
    let p = field.p();
    let params = [("p", p as i64), ("max_degree", i64::from(dmax))];
    if u64::from(dmax) < 2 * p * p - 2 * p {
        return VerdictReport::precondition_error(
            "mui-presentation",
            &params,
            format!("max degree must be at least 2p^2-2p = {}", 2 * p * p - 2 * p),
        );
    }
    let mut report = VerdictReport::new("mui-presentation", &params);
    let model = GammaModel::new(field, 1);
    let action = GroupAction::sl2(model.clone());
    let group = generate_group(field, action.generators()).expect("SL_2 generators are invertible");
    report.record("group order", group.len() as u64 == p * (p * p - 1), format!("{}", group.len()));

    let (f, h) = dickson_elements(&model, 0);
    let mui = mui_elements(&model, 0);
    let named = [("f", &f), ("h", &h), ("s", &mui.s), ("y", &mui.y), ("z", &mui.z)];
    for (name, x) in named {
        let moved = group.iter().find(|g| act(&model, g, x) != *x);
        match moved {
            None => report.record(format!("{name} invariant"), true, format!("fixed by all {} elements", group.len())),
            Some(g) => report.record(format!("{name} invariant"), false, format!("moved by {:?}: {x}", g.0)),
        }
    }
    let relations = [
        ("ys", &mui.y * &mui.s),
        ("yz", &mui.y * &mui.z),
        ("fy+sz", &(&f * &mui.y) + &(&mui.s * &mui.z)),
    ];
    for (name, r) in relations {
        report.record(format!("relation {name} = 0"), r.is_zero(), format!("{r}"));
    }

    let one = Element::one(model.algebra());
    let gens = [
        (f.clone(), f.homogeneous_degree().unwrap().unwrap(), None),
        (h.clone(), h.homogeneous_degree().unwrap().unwrap(), None),
        (mui.s.clone(), 3, Some(1)),
        (mui.y.clone(), 2, Some(1)),
        (mui.z.clone(), mui.z.homogeneous_degree().unwrap().unwrap(), Some(1)),
    ];
    for d in 0..=dmax {
        let inv = action.invariant_subspace(d).basis.len();
        let prods = products_in_degree(&one, &gens, d);
        let span = span_rank(&prods, d);
        report.record(format!("degree {d}"), inv == span, format!("invariant dim {inv}, product span {span}"));
    }
    report
}

/// The mod-p image of the integral classes, spanned by polynomials in
/// `xi, eta` and by `s` times such polynomials, has fixed subring generated
/// by `f, h, s` in every degree up to `dmax`.
pub fn verify_vistoli_integral(field: PrimeField, dmax: u32) -> VerdictReport {
    let p = field.p();
    let params = [("p", p as i64), ("max_degree", i64::from(dmax))];
    let mut report = VerdictReport::new("vistoli-integral", &params);
    let model = GammaModel::new(field, 1);
    let action = GroupAction::sl2(model.clone());
    let (f, h) = dickson_elements(&model, 0);
    let s = mui_elements(&model, 0).s;
    let one = Element::one(model.algebra());
    let gens = [
        (f.clone(), f.homogeneous_degree().unwrap().unwrap(), None),
        (h.clone(), h.homogeneous_degree().unwrap().unwrap(), None),
        (s.clone(), 3, Some(1)),
    ];
    let (xi, eta) = (model.xi(0), model.eta(0));
    for d in 0..=dmax {
        let integral: Vec<FpElement> = if d % 2 == 0 {
            (0..=d / 2).map(|i| &xi.pow(i) * &eta.pow(d / 2 - i)).collect()
        } else if d >= 3 {
            let k = (d - 3) / 2;
            (0..=k).map(|i| &s * &(&xi.pow(i) * &eta.pow(k - i))).collect()
        } else {
            Vec::new()
        };
        let fixed = action.fixed_dim_within(&integral, d);
        let prods = products_in_degree(&one, &gens, d);
        let span = span_rank(&prods, d);
        report.record(format!("degree {d}"), fixed == span, format!("fixed dim {fixed}, product span {span}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn group_orders() {
        let f = f3();
        assert_eq!(generate_group(f, &sl2_generators(f)).unwrap().len(), 24);
        assert_eq!(generate_group(f, &[Mat2::identity()]).unwrap().len(), 1);
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(generate_group(f5, &sl2_generators(f5)).unwrap().len(), 120);
        assert_eq!(generate_group(f, &[Mat2::new(f, [[1, 1], [1, 1]])]), Err(AlgebraError::NonInvertible));
    }

    #[test]
    fn group_is_closed_under_inverse() {
        let f = f3();
        let g = generate_group(f, &sl2_generators(f)).unwrap();
        for x in &g {
            assert!(g.contains(&x.inverse(f).unwrap()));
            assert_eq!(x.det(f), 1);
        }
    }

    #[test]
    fn column_convention() {
        let f = f3();
        let model = GammaModel::new(f, 1);
        let t = Mat2::new(f, [[1, 1], [0, 1]]);
        assert_eq!(act(&model, &t, &model.xi(0)), model.xi(0));
        assert_eq!(act(&model, &t, &model.eta(0)), &model.xi(0) + &model.eta(0));
        let s = mui_elements(&model, 0).s;
        assert_eq!(act(&model, &Mat2::identity(), &s), s);
        for g in generate_group(f, &sl2_generators(f)).unwrap() {
            assert_eq!(act(&model, &g, &s), s);
        }
    }

    #[test]
    fn dickson_values() {
        let f = f3();
        let model = GammaModel::new(f, 1);
        let (df, dh) = dickson_elements(&model, 0);
        let (xi, eta) = (model.xi(0), model.eta(0));
        assert_eq!(df, &(&xi.pow(3) * &eta) - &(&eta.pow(3) * &xi));
        let expected_h = &xi.pow(6) + &(&eta.pow(2) * &(&xi.pow(2) - &eta.pow(2)).pow(2));
        assert_eq!(dh, expected_h);
        assert_eq!(df.homogeneous_degree().unwrap(), Some(8));
        assert_eq!(dh.homogeneous_degree().unwrap(), Some(12));
        for g in generate_group(f, &sl2_generators(f)).unwrap() {
            assert_eq!(act(&model, &g, &df), df);
            assert_eq!(act(&model, &g, &dh), dh);
        }
    }

    #[test]
    fn mui_values() {
        let f = f3();
        let model = GammaModel::new(f, 1);
        let m = mui_elements(&model, 0);
        let (xi, eta, a, b) = (model.xi(0), model.eta(0), model.a(0), model.b(0));
        assert_eq!(m.z, &(&xi.pow(3) * &b) - &(&eta.pow(3) * &a));
        assert_eq!(m.w, &(&xi.pow(9) * &b) - &(&eta.pow(9) * &a));
        assert!((&m.y * &m.s).is_zero());
        let degrees: Vec<_> = [&m.s, &m.y, &m.z, &m.w, &m.e].iter().map(|x| x.homogeneous_degree().unwrap()).collect();
        assert_eq!(degrees, [Some(3), Some(2), Some(7), Some(19), Some(20)]);
        let (df, _) = dickson_elements(&model, 0);
        let ab = &a * &b;
        assert_eq!(&m.s * &m.z, &(&(&xi * &eta.pow(3)) - &(&xi.pow(3) * &eta)) * &ab);
        assert_eq!(&m.s * &m.z, -(&df * &m.y));
    }

    #[test]
    fn small_invariant_subspaces() {
        let f = f3();
        let model = GammaModel::new(f, 1);
        let action = GroupAction::sl2(model.clone());
        let s = mui_elements(&model, 0).s;
        let inv3 = action.invariant_subspace(3).basis;
        assert_eq!(inv3.len(), 1);
        assert!(inv3[0] == s || inv3[0] == -&s);
        assert!(action.invariant_subspace(1).basis.is_empty());
        assert_eq!(action.invariant_subspace(0).basis, alloc::vec![Element::one(model.algebra())]);
        assert_eq!(action.invariant_subspace(8).basis.len(), 1);
    }

    #[test]
    fn presentations_small() {
        let f = f3();
        assert!(verify_mui_presentation(f, 14).passed());
        assert!(verify_vistoli_integral(f, 14).passed());
        assert_eq!(verify_mui_presentation(f, 5).status, crate::verdict::Status::PreconditionError);
    }
}
