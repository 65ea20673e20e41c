//! Restrictions to elementary abelian subgroups and the computations done
//! there: the image of the degree-3 class, the sum `alpha_1 + alpha_2`,
//! images of the `K(Z,3)` generators, Milnor-operation formulas, the
//! restriction of `delta` to `B F_p`, and the diagonal map on Chern classes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::galgebra::{make_algebra, Algebra, Element, GeneratorSpec};
use crate::invariants::{mui_elements, GenKind};
use crate::ring::{
    binomial_big, binomial_mod_p, multinomial_mod_p, p_primary_part, CoeffRing, Integers, PrimeField,
};
use crate::steenrod::{FpElement, MilnorIndex, SteenrodAction};
use crate::symfun::Lambda;
use crate::verdict::VerdictReport;

/// `F_p[xi_1, eta_1, .., xi_i, eta_i] (x) Lambda[a_1, b_1, .., a_i, b_i]` with
/// `beta(a_j) = xi_j`, `beta(b_j) = eta_j` and unstable total powers.
#[derive(Clone, Debug)]
pub struct GammaModel {
    field: PrimeField,
    blocks: usize,
    alg: Arc<Algebra<PrimeField>>,
    action: SteenrodAction,
}

impl GammaModel {
    /// Generator order: `xi_1, eta_1, .., xi_i, eta_i, a_1, b_1, .., a_i, b_i`.
    pub fn new(field: PrimeField, blocks: usize) -> Self {
        assert!(blocks >= 1, "at least one block");
        let suffix = |j: usize| if blocks == 1 { String::new() } else { format!("{}", j + 1) };
        let mut gens = Vec::new();
        for j in 0..blocks {
            gens.push(GeneratorSpec::even(format!("xi{}", suffix(j)), 2));
            gens.push(GeneratorSpec::even(format!("eta{}", suffix(j)), 2));
        }
        for j in 0..blocks {
            gens.push(GeneratorSpec::odd(format!("a{}", suffix(j)), 1));
            gens.push(GeneratorSpec::odd(format!("b{}", suffix(j)), 1));
        }
        let alg = make_algebra(gens, field).expect("generator names are distinct");
        let p = field.p() as u32;
        let g = |i: usize| Element::generator(&alg, i);
        let mut beta = Vec::new();
        let mut total = Vec::new();
        for i in 0..2 * blocks {
            beta.push(Element::zero(&alg));
            total.push(&g(i) + &g(i).pow(p));
        }
        for i in 0..2 * blocks {
            beta.push(g(i));
            total.push(g(2 * blocks + i));
        }
        let action = SteenrodAction::new(&alg, beta, total).expect("standard action is valid");
        GammaModel { field, blocks, alg, action }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn algebra(&self) -> &Arc<Algebra<PrimeField>> {
        &self.alg
    }

    pub fn action(&self) -> &SteenrodAction {
        &self.action
    }

    pub fn xi(&self, j: usize) -> FpElement {
        Element::generator(&self.alg, 2 * j)
    }
    pub fn eta(&self, j: usize) -> FpElement {
        Element::generator(&self.alg, 2 * j + 1)
    }
    pub fn a(&self, j: usize) -> FpElement {
        Element::generator(&self.alg, 2 * self.blocks + 2 * j)
    }
    pub fn b(&self, j: usize) -> FpElement {
        Element::generator(&self.alg, 2 * self.blocks + 2 * j + 1)
    }

    /// Block and role of a generator index.
    pub fn locate(&self, idx: usize) -> (usize, GenKind) {
        if idx < 2 * self.blocks {
            (idx / 2, if idx % 2 == 0 { GenKind::Xi } else { GenKind::Eta })
        } else {
            let k = idx - 2 * self.blocks;
            (k / 2, if k % 2 == 0 { GenKind::A } else { GenKind::B })
        }
    }

    /// Inclusion of this model as the first `blocks` blocks of `larger`.
    pub fn include_into(&self, larger: &GammaModel, e: &FpElement) -> FpElement {
        assert!(larger.blocks >= self.blocks);
        let images: Vec<FpElement> = (0..self.alg.num_generators())
            .map(|idx| match self.locate(idx) {
                (j, GenKind::Xi) => larger.xi(j),
                (j, GenKind::Eta) => larger.eta(j),
                (j, GenKind::A) => larger.a(j),
                (j, GenKind::B) => larger.b(j),
            })
            .collect();
        e.substitute(larger.algebra(), &images)
    }
}

/// Terms of `e` whose degree in the generators of block `j` is
/// `degrees[j]` for every block.
pub fn block_component(model: &GammaModel, e: &FpElement, degrees: &[u32]) -> FpElement {
    let alg = model.algebra();
    let terms = e.terms().iter().filter(|(m, _)| {
        let mut by_block = alloc::vec![0u32; model.blocks()];
        for idx in 0..alg.num_generators() {
            let (j, _) = model.locate(idx);
            by_block[j] += m.exponent(idx) * alg.generators()[idx].degree;
        }
        by_block == degrees
    });
    Element::from_terms(alg, terms.map(|(m, c)| (m.clone(), *c)))
}

/// `S = sum_j (xi_j b_j - eta_j a_j)`, the image of the degree-3 class
/// (normalized with scalar 1).
pub fn restrict_chi(model: &GammaModel) -> FpElement {
    let mut s = Element::zero(model.algebra());
    for j in 0..model.blocks() {
        s = &s + &mui_elements(model, j).s;
    }
    s
}

/// The two summands of `P^1(S) (beta P^1 S)^{p-1} S + P^1(S) P^p P^1(S)`.
#[derive(Clone, Debug)]
pub struct AlphaSum {
    pub first: FpElement,
    pub second: FpElement,
    pub total: FpElement,
}

pub fn alpha_sum_for(model: &GammaModel, s: &FpElement) -> Result<AlphaSum, AlgebraError> {
    let act = model.action();
    let p = model.field().p();
    let p1 = act.power(1, s)?;
    let bp1 = act.bockstein(&p1);
    let first = &(&p1 * &bp1.pow(p as u32 - 1)) * s;
    let second = &p1 * &act.power(p, &p1)?;
    let total = &first + &second;
    Ok(AlphaSum { first, second, total })
}

pub fn alpha_sum_image(model: &GammaModel) -> AlphaSum {
    alpha_sum_for(model, &restrict_chi(model)).expect("S is homogeneous")
}

/// Images of `x_bar`, `x_{p,k}` and `y_bar_{p,k}` for `k <= kmax`.
#[derive(Clone, Debug)]
pub struct Kz3Images {
    pub x_bar: FpElement,
    pub x: Vec<FpElement>,
    pub y_bar: Vec<FpElement>,
}

pub fn kz3_images(model: &GammaModel, kmax: u32) -> Kz3Images {
    let act = model.action();
    let p = model.field().p();
    let x_bar = restrict_chi(model);
    let mut x = Vec::new();
    let mut current = act.power(1, &x_bar).expect("homogeneous");
    x.push(current.clone());
    for k in 1..=kmax {
        current = act.power(p.pow(k), &current).expect("homogeneous");
        x.push(current.clone());
    }
    let y_bar = x.iter().map(|e| act.bockstein(e)).collect();
    Kz3Images { x_bar, x, y_bar }
}

fn short(e: &FpElement) -> String {
    let text = format!("{e}");
    if text.len() > 160 {
        format!("{}... ({} terms)", &text[..160], e.len())
    } else {
        text
    }
}

/// The Milnor-operation formulas on `x`, `y_{p,j}`, `x_{p,j}`, checked on
/// the restricted images:
/// (a) `Q_0(x) = 0`, `Q_i(x) = -y_{p,i-1}`;
/// (b) `Q_i(y_{p,j}) = 0`;
/// (c) `Q_i(x_{p,j})` is `y_{p,j-i}^{p^i}` for `i <= j`, `0` for `i = j+1`,
/// and `-y_{p,i-j-2}^{p^{j+1}}` for `i >= j+2`.
pub fn verify_yagita(field: PrimeField, imax: u32, blocks: usize) -> VerdictReport {
    let p = field.p();
    let params = [("p", p as i64), ("max_index", i64::from(imax)), ("blocks", blocks as i64)];
    if blocks == 0 {
        return VerdictReport::precondition_error("yagita", &params, "blocks must be at least 1");
    }
    let mut report = VerdictReport::new("yagita", &params);
    let model = GammaModel::new(field, blocks);
    let act = model.action();
    let kmax = imax;
    let img = kz3_images(&model, kmax);
    let q = |i: u32, e: &FpElement| act.milnor_q(MilnorIndex(i), e).expect("images are homogeneous");
    for i in 0..=imax {
        let lhs = q(i, &img.x_bar);
        let rhs = if i == 0 { Element::zero(model.algebra()) } else { -&img.y_bar[i as usize - 1] };
        report.record(format!("(a) Q_{i}(x)"), lhs == rhs, short(&lhs));
    }
    for i in 0..=imax {
        for j in 0..=kmax {
            let lhs = q(i, &img.y_bar[j as usize]);
            report.record(format!("(b) Q_{i}(y_{j})"), lhs.is_zero(), short(&lhs));
        }
    }
    for i in 0..=imax {
        for j in 0..=kmax {
            let lhs = q(i, &img.x[j as usize]);
            let rhs = if i <= j {
                img.y_bar[(j - i) as usize].pow(p.pow(i) as u32)
            } else if i == j + 1 {
                Element::zero(model.algebra())
            } else {
                -&img.y_bar[(i - j - 2) as usize].pow(p.pow(j + 1) as u32)
            };
            let ok = lhs == rhs;
            let mut value = short(&lhs);
            if !ok && lhs == -&rhs {
                value = format!("sign discrepancy: {value}");
            }
            report.record(format!("(c) Q_{i}(x_{j})"), ok, value);
        }
    }
    report
}

/// `Lambda = y_0^p x + y_0 x_{p,1} - x_{p,0} y_1` on one block: `Q_0, Q_1, Q_2`
/// annihilate it, `Q_i(Lambda)` for `3 <= i <= imax` equals
/// `y_{i-2}^p y_1 - y_0^p y_{i-1} - y_0 y_{i-3}^{p^2}`, and every `Q_k`,
/// `k <= imax`, annihilates `Q_3(Lambda)`.
pub fn verify_lambda_formula(field: PrimeField, imax: u32) -> VerdictReport {
    let p = field.p();
    let params = [("p", p as i64), ("max_index", i64::from(imax))];
    let mut report = VerdictReport::new("lambda-formula", &params);
    let model = GammaModel::new(field, 1);
    let act = model.action();
    let img = kz3_images(&model, imax.max(1));
    let y = &img.y_bar;
    let lambda = &(&(&y[0].pow(p as u32) * &img.x_bar) + &(&y[0] * &img.x[1])) - &(&img.x[0] * &y[1]);
    report.record("Lambda", true, short(&lambda));
    let q = |i: u32, e: &FpElement| act.milnor_q(MilnorIndex(i), e).expect("homogeneous");
    let mut q3 = None;
    for i in 0..=imax {
        let lhs = q(i, &lambda);
        let rhs = if i <= 2 {
            Element::zero(model.algebra())
        } else {
            let i = i as usize;
            let t1 = &y[i - 2].pow(p as u32) * &y[1];
            let t2 = &y[0].pow(p as u32) * &y[i - 1];
            let t3 = &y[0] * &y[i - 3].pow((p * p) as u32);
            &(&t1 - &t2) - &t3
        };
        report.record(format!("Q_{i}(Lambda)"), lhs == rhs, format!("lhs {}, rhs {}", short(&lhs), short(&rhs)));
        if i == 3 {
            q3 = Some(lhs);
        }
    }
    if let Some(q3) = q3 {
        for k in 0..=imax {
            let v = q(k, &q3);
            report.record(format!("Q_{k}(Q_3(Lambda))"), v.is_zero(), short(&v));
        }
    }
    report
}

/// `beta(y) = s`, `beta(z) = f`, `beta(w) = e`, `P^1(s) = z`, `P^p(z) = w`,
/// and `z (f^{p-1} s + w) = 0` in one block.
pub fn verify_steenrod_ledger(field: PrimeField) -> VerdictReport {
    let p = field.p();
    let mut report = VerdictReport::new("steenrod-ledger", &[("p", p as i64)]);
    let model = GammaModel::new(field, 1);
    let act = model.action();
    let m = mui_elements(&model, 0);
    let (f, _) = crate::invariants::dickson_elements(&model, 0);
    let checks = [
        ("beta(y) = s", act.bockstein(&m.y), m.s.clone()),
        ("beta(z) = f", act.bockstein(&m.z), f.clone()),
        ("beta(w) = e", act.bockstein(&m.w), m.e.clone()),
        ("P^1(s) = z", act.power(1, &m.s).expect("homogeneous"), m.z.clone()),
        ("P^p(z) = w", act.power(p, &m.z).expect("homogeneous"), m.w.clone()),
    ];
    for (label, lhs, rhs) in checks {
        report.record(label, lhs == rhs, short(&lhs));
    }
    let rel = &m.z * &(&(&f.pow(p as u32 - 1) * &m.s) + &m.w);
    report.record("z(f^{p-1}s + w) = 0", rel.is_zero(), short(&rel));
    report
}

/// `alpha_sum_image = 0`; on one block also the factorization into `z f^{p-1} s`
/// and `z w`; and for every `l` in `F_p^x`, scaling `S` by `l` scales both
/// summands by `l^2`.
pub fn verify_main(field: PrimeField, blocks: usize) -> VerdictReport {
    let p = field.p();
    let params = [("p", p as i64), ("blocks", blocks as i64)];
    if blocks == 0 {
        return VerdictReport::precondition_error("main-vanishing", &params, "blocks must be at least 1");
    }
    let mut report = VerdictReport::new("main-vanishing", &params);
    let model = GammaModel::new(field, blocks);
    let s = restrict_chi(&model);
    report.record("beta(S) = 0", model.action().bockstein(&s).is_zero(), short(&s));
    let sum = alpha_sum_image(&model);
    report.record(
        "alpha_sum_image = 0",
        sum.total.is_zero(),
        format!("{} (summands with {} and {} terms)", short(&sum.total), sum.first.len(), sum.second.len()),
    );
    if blocks == 1 {
        let m = mui_elements(&model, 0);
        let (f, _) = crate::invariants::dickson_elements(&model, 0);
        let expect_first = &(&m.z * &f.pow(p as u32 - 1)) * &m.s;
        let expect_second = &m.z * &m.w;
        report.record("first summand = z f^{p-1} s", sum.first == expect_first, short(&sum.first));
        report.record("second summand = z w", sum.second == expect_second, short(&sum.second));
    } else {
        let mut degrees = alloc::vec![0u32; blocks];
        degrees[0] = 2 * p as u32 + 1;
        degrees[1] = 2 * (p * p) as u32 + 1;
        let part = block_component(&model, &sum.total, &degrees);
        report.record(
            format!("block-degree {degrees:?} component = 0"),
            part.is_zero(),
            short(&part),
        );
    }
    for l in 1..p {
        let scaled = alpha_sum_for(&model, &s.scale(&l)).expect("homogeneous");
        let l2 = field.mul(&l, &l);
        let ok = scaled.first == sum.first.scale(&l2) && scaled.second == sum.second.scale(&l2);
        report.record(format!("scaling by l = {l}"), ok && scaled.total.is_zero(), format!("l^2 = {l2}"));
    }
    report
}

/// Element of `Z[eta]/(p eta)`: an integer in degree 0 and `F_p`
/// multiples of `eta^k`, `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaElement {
    field: PrimeField,
    pub free: BigInt,
    pub torsion: BTreeMap<u32, u64>,
}

impl EtaElement {
    pub fn from_integer_polynomial(field: PrimeField, f: &Element<Integers>) -> Self {
        assert_eq!(f.algebra().num_generators(), 1, "univariate in eta");
        let mut free = BigInt::zero();
        let mut torsion = BTreeMap::new();
        for (m, c) in f.terms() {
            let k = m.exponent(0);
            if k == 0 {
                free = c.clone();
            } else {
                let r = field.reduce_bigint(c);
                if r != 0 {
                    torsion.insert(k, r);
                }
            }
        }
        EtaElement { field, free, torsion }
    }

    pub fn is_zero(&self) -> bool {
        self.free.is_zero() && self.torsion.is_empty()
    }

    /// Symmetric-range coefficient of `eta^k`.
    pub fn coefficient(&self, k: u32) -> i64 {
        self.torsion.get(&k).map_or(0, |c| self.field.signed(*c))
    }
}

impl fmt::Display for EtaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.free.is_zero() {
            write!(f, "{}", self.free)?;
            first = false;
        }
        for (k, c) in &self.torsion {
            let c = self.field.signed(*c);
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let pow = if *k == 1 { String::from("eta") } else { format!("eta^{k}") };
            if mag == 1 {
                write!(f, "{pow}")?;
            } else {
                write!(f, "{mag}*{pow}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Theta(delta)` for `delta = prod_{i != j} (t_i - t_j)` under `t_i -> i eta`
/// (indices mod p, so `t_p -> 0`).
#[derive(Clone, Debug)]
pub struct ThetaDelta {
    /// The product expanded in `Z[eta]` before reduction.
    pub integral: Element<Integers>,
    pub value: EtaElement,
}

pub fn theta_delta(field: PrimeField) -> ThetaDelta {
    let p = field.p() as i64;
    let alg = make_algebra(vec![GeneratorSpec::even("eta", 2)], Integers).expect("one generator");
    let eta = Element::generator(&alg, 0);
    let image = |i: i64| eta.scale(&BigInt::from(i % p));
    let mut prod = Element::one(&alg);
    for i in 1..=p {
        for j in 1..=p {
            if i != j {
                prod = &prod * &(&image(i) - &image(j));
            }
        }
    }
    let value = EtaElement::from_integer_polynomial(field, &prod);
    ThetaDelta { integral: prod, value }
}

pub fn verify_theta(field: PrimeField) -> VerdictReport {
    let p = field.p();
    let mut report = VerdictReport::new("theta-delta", &[("p", p as i64)]);
    let t = theta_delta(field);
    let exp = (p * p - p) as u32;
    let only_top = t.value.free.is_zero() && t.value.torsion.len() == 1;
    report.record(
        format!("Theta(delta) = -eta^{exp}"),
        only_top && t.value.coefficient(exp) == -1,
        format!("{}", t.value),
    );
    report.record("integral coefficient", true, format!("{}", t.integral));
    report
}

/// Degree-`2i` components, `0 <= i <= up_to`, of `(1 + c'_1 + .. + c'_p)^{n/p}`
/// over `F_p`, by repeated truncated multiplication.
pub fn delta_star(field: PrimeField, n: u32, up_to: u32) -> Result<Vec<FpElement>, AlgebraError> {
    let p = field.p() as u32;
    if n == 0 || n % p != 0 {
        return Err(AlgebraError::Precondition(format!("p={p} does not divide n={n}")));
    }
    let lam = Lambda::new(p, field);
    let mut total = Element::one(lam.algebra());
    for i in 1..=p {
        total = &total + &lam.sigma(i);
    }
    let mut acc = Element::one(lam.algebra());
    for _ in 0..n / p {
        acc = acc.mul_truncated(&total, 2 * up_to);
    }
    Ok((0..=up_to).map(|i| acc.homogeneous_component(2 * i)).collect())
}

/// The same components from multinomial coefficients reduced by Lucas' theorem.
pub fn delta_star_multinomial(field: PrimeField, n: u32, up_to: u32) -> Result<Vec<FpElement>, AlgebraError> {
    let p = field.p() as u32;
    if n == 0 || n % p != 0 {
        return Err(AlgebraError::Precondition(format!("p={p} does not divide n={n}")));
    }
    let m = u64::from(n / p);
    let lam = Lambda::new(p, field);
    let alg = lam.algebra();
    Ok((0..=up_to)
        .map(|i| {
            let terms = lam.basis(i).into_iter().map(|mono| {
                let parts: Vec<u64> = mono.exponents().iter().map(|&e| u64::from(e)).collect();
                let c = multinomial_mod_p(&field, m, &parts);
                (mono, c)
            });
            Element::from_terms(alg, terms)
        })
        .collect())
}

/// Mod p, `Delta^*(c_i) = 0` unless `q | i`, and `Delta^*(c_q) = C(m,q) (c'_1)^q`,
/// where `m = n/p` and `q` is the p-primary part of `m`.
pub fn check_delta_lemma(field: PrimeField, n: u32, up_to: u32) -> VerdictReport {
    let p = field.p();
    let params = [("p", p as i64), ("n", i64::from(n)), ("up_to", i64::from(up_to))];
    let (repeated, multinomial) = match (delta_star(field, n, up_to), delta_star_multinomial(field, n, up_to)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return VerdictReport::precondition_error("delta-lemma", &params, format!("{e}")),
    };
    let mut report = VerdictReport::new("delta-lemma", &params);
    let m = u64::from(n) / p;
    let q = p_primary_part(p, m);
    let lucas = binomial_mod_p(&field, m, q);
    let direct = field.reduce_bigint(&binomial_big(m, q));
    report.record(
        format!("C({m},{q}) mod {p}"),
        lucas == direct,
        format!("q = {q}, Lucas {lucas}, big integer {direct}"),
    );
    let lam = Lambda::new(p as u32, field);
    for i in 1..=up_to {
        let comp = &repeated[i as usize];
        report.record(
            format!("component {i}: expansion paths agree"),
            *comp == multinomial[i as usize],
            short(comp),
        );
        if u64::from(i) % q != 0 {
            report.record(format!("component {i} vanishes"), comp.is_zero(), short(comp));
        } else if u64::from(i) == q {
            let expected = lam.sigma(1).pow(q as u32).scale(&lucas);
            report.record(format!("component {i} = C(m,q) c'_1^q"), *comp == expected, short(comp));
        }
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
    fn chi_image() {
        let model = GammaModel::new(f3(), 1);
        let s = restrict_chi(&model);
        assert_eq!(s, &(&model.xi(0) * &model.b(0)) - &(&model.eta(0) * &model.a(0)));
        assert!(model.action().bockstein(&s).is_zero());
        let two = GammaModel::new(f3(), 2);
        let s2 = restrict_chi(&two);
        assert_eq!(s2, &mui_elements(&two, 0).s + &mui_elements(&two, 1).s);
        assert!(two.action().bockstein(&s2).is_zero());
    }

    #[test]
    fn main_vanishing_one_block() {
        let model = GammaModel::new(f3(), 1);
        assert!(alpha_sum_image(&model).total.is_zero());
        assert!(verify_main(f3(), 1).passed());
    }

    #[test]
    fn two_block_cross_term() {
        let model = GammaModel::new(f3(), 2);
        let sum = alpha_sum_image(&model);
        let m1 = mui_elements(&model, 0);
        let m2 = mui_elements(&model, 1);
        let (f2, _) = crate::invariants::dickson_elements(&model, 1);
        let rest = &(&f2.pow(2) * &m2.s) + &m2.w;
        assert!(!rest.is_zero());
        let witness = &m1.z * &rest;
        assert_eq!(block_component(&model, &sum.total, &[7, 19]), witness);
        assert!(!sum.total.is_zero());
        assert!(!verify_main(f3(), 2).passed());
    }

    #[test]
    fn kz3_named_images() {
        let model = GammaModel::new(f3(), 1);
        let img = kz3_images(&model, 1);
        let m = mui_elements(&model, 0);
        assert_eq!(img.x[0], m.z);
        assert_eq!(img.x[1], m.w);
        assert_eq!(img.y_bar[1], m.e);
    }

    #[test]
    fn yagita_examples() {
        let model = GammaModel::new(f3(), 1);
        let act = model.action();
        let s = restrict_chi(&model);
        let (f, _) = crate::invariants::dickson_elements(&model, 0);
        assert_eq!(act.milnor_q(MilnorIndex(1), &s).unwrap(), -&f);
        assert!(act.milnor_q(MilnorIndex(0), &s).unwrap().is_zero());
        // i = j + 1 case: Q_1(x_{p,0}) = 0; the p-th power shows up one step later
        let m = mui_elements(&model, 0);
        assert!(act.milnor_q(MilnorIndex(1), &m.z).unwrap().is_zero());
        assert_eq!(act.milnor_q(MilnorIndex(1), &m.w).unwrap(), f.pow(3));
        assert!(verify_yagita(f3(), 2, 1).passed());
    }

    #[test]
    fn theta() {
        let t = theta_delta(f3());
        assert_eq!(t.integral.terms().values().next().cloned(), Some(BigInt::from(-4)));
        assert_eq!(format!("{}", t.value), "-eta^6");
        let t5 = theta_delta(PrimeField::new(5).unwrap());
        assert_eq!(format!("{}", t5.value), "-eta^20");
    }

    #[test]
    fn delta_components() {
        let f = f3();
        let comps = delta_star(f, 9, 3).unwrap();
        assert!(comps[1].is_zero());
        assert!(comps[2].is_zero());
        let lam = Lambda::new(3, f);
        assert_eq!(comps[3], lam.sigma(1).pow(3));
        assert!(delta_star(f, 4, 3).is_err());
        assert_eq!(check_delta_lemma(f, 4, 3).status, crate::verdict::Status::PreconditionError);
        assert!(check_delta_lemma(f, 9, 6).passed());
        assert!(check_delta_lemma(f, 18, 6).passed());
    }

    #[test]
    fn ledger() {
        assert!(verify_steenrod_ledger(f3()).passed());
        assert!(verify_theta(f3()).passed());
    }

    #[test]
    fn lambda_small() {
        assert!(verify_lambda_formula(f3(), 2).passed());
    }

    #[test]
    fn eta_display() {
        let alg = make_algebra(vec![GeneratorSpec::even("eta", 2)], Integers).unwrap();
        let e = &Element::one(&alg).scale(&BigInt::from(5)) + &Element::generator(&alg, 0).scale(&BigInt::from(7));
        let v = EtaElement::from_integer_polynomial(f3(), &e);
        assert_eq!(format!("{v}"), "5 + eta");
        assert!(!v.is_zero());
    }
}
