//! Free graded-commutative algebras: polynomial generators of even degree
//! tensored with exterior generators of odd degree, over F_p or Z.
//!
//! Monomials are stored as one exponent per generator in descriptor order;
//! exterior exponents are 0 or 1 and are mirrored in a bitmask. The normal
//! form of a monomial lists exterior generators in descriptor order, so
//! multiplying two monomials costs the sign of the shuffle that re-sorts them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::ring::CoeffRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Polynomial generator, unbounded exponent, even degree.
    Even,
    /// Exterior generator, exponent 0 or 1, odd degree.
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    pub parity: Parity,
}

impl GeneratorSpec {
    pub fn even(name: impl Into<String>, degree: u32) -> Self {
        GeneratorSpec { name: name.into(), degree, parity: Parity::Even }
    }

    pub fn odd(name: impl Into<String>, degree: u32) -> Self {
        GeneratorSpec { name: name.into(), degree, parity: Parity::Odd }
    }
}

/// Generator list and coefficient ring of a free graded-commutative algebra.
#[derive(Debug, PartialEq, Eq)]
pub struct Algebra<R: CoeffRing> {
    gens: Vec<GeneratorSpec>,
    ring: R,
    /// Bit position in `Monomial::ext` for each generator (odd ones only).
    ext_bit: Vec<Option<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    ext: u64,
}

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exterior generators present, one bit per odd generator in descriptor order.
    pub fn ext_mask(&self) -> u64 {
        self.ext
    }

    pub fn exponent(&self, gen: usize) -> u32 {
        self.exps[gen]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

impl<R: CoeffRing> Algebra<R> {
    /// Builds a descriptor. Names must be unique, degrees positive, exterior
    /// generators of odd degree and polynomial generators of even degree.
    pub fn new(gens: Vec<GeneratorSpec>, ring: R) -> Result<Arc<Self>, AlgebraError> {
        let mut seen = BTreeSet::new();
        let mut ext_bit = Vec::with_capacity(gens.len());
        let mut next_bit = 0u32;
        for g in &gens {
            if !seen.insert(g.name.clone()) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
            if g.degree == 0 {
                return Err(AlgebraError::ZeroDegree { name: g.name.clone() });
            }
            match g.parity {
                Parity::Odd if g.degree % 2 == 0 => {
                    return Err(AlgebraError::ExteriorEvenDegree {
                        name: g.name.clone(),
                        degree: g.degree,
                    })
                }
                Parity::Even if g.degree % 2 == 1 => {
                    return Err(AlgebraError::PolynomialOddDegree {
                        name: g.name.clone(),
                        degree: g.degree,
                    })
                }
                Parity::Odd => {
                    ext_bit.push(Some(next_bit));
                    next_bit += 1;
                }
                Parity::Even => ext_bit.push(None),
            }
        }
        if next_bit > 64 {
            return Err(AlgebraError::TooManyExterior(next_bit as usize));
        }
        Ok(Arc::new(Algebra { gens, ring, ext_bit }))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn unit_monomial(&self) -> Monomial {
        Monomial { exps: vec![0; self.gens.len()], ext: 0 }
    }

    pub fn generator_monomial(&self, idx: usize) -> Monomial {
        let mut m = self.unit_monomial();
        m.exps[idx] = 1;
        if let Some(b) = self.ext_bit[idx] {
            m.ext = 1 << b;
        }
        m
    }

    /// Builds a monomial from a full exponent vector; `None` if an exterior
    /// exponent exceeds 1 or the length is wrong.
    pub fn monomial(&self, exps: &[u32]) -> Option<Monomial> {
        if exps.len() != self.gens.len() {
            return None;
        }
        let mut ext = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if let Some(b) = self.ext_bit[i] {
                match e {
                    0 => {}
                    1 => ext |= 1 << b,
                    _ => return None,
                }
            }
        }
        Some(Monomial { exps: exps.to_vec(), ext })
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.exps.iter().zip(&self.gens).map(|(&e, g)| e * g.degree).sum()
    }

    /// Product of two monomials in normal form, with the Koszul sign
    /// (`true` = negative). `None` when an exterior generator repeats.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        if a.ext & b.ext != 0 {
            return None;
        }
        let mut negative = false;
        let mut rest = a.ext;
        while rest != 0 {
            let bit = rest.trailing_zeros();
            rest &= rest - 1;
            let below = b.ext & ((1u64 << bit) - 1);
            if below.count_ones() % 2 == 1 {
                negative = !negative;
            }
        }
        let exps = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
        Some((Monomial { exps, ext: a.ext | b.ext }, negative))
    }

    /// All monomials of degree `d`, in decreasing lexicographic order of the
    /// exponent vector (descriptor generator order).
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.gens.len()];
        self.enumerate(0, d, &mut exps, &mut out);
        out
    }

    pub fn dim(&self, d: u32) -> usize {
        self.basis(d).len()
    }

    fn enumerate(&self, idx: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == self.gens.len() {
            if remaining == 0 {
                out.push(self.monomial(exps).expect("valid by construction"));
            }
            return;
        }
        let g = &self.gens[idx];
        let max = match g.parity {
            Parity::Even => remaining / g.degree,
            Parity::Odd => u32::from(remaining >= g.degree),
        };
        for e in (0..=max).rev() {
            exps[idx] = e;
            self.enumerate(idx + 1, remaining - e * g.degree, exps, out);
        }
        exps[idx] = 0;
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (g, &e) in self.gens.iter().zip(&m.exps) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(alloc::format!("{}^{}", g.name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Shorthand for building descriptors.
pub fn make_algebra<R: CoeffRing>(
    gens: Vec<GeneratorSpec>,
    ring: R,
) -> Result<Arc<Algebra<R>>, AlgebraError> {
    Algebra::new(gens, ring)
}

/// A finite sum of coefficient times monomial. Zero coefficients are never stored.
#[derive(Clone)]
pub struct Element<R: CoeffRing> {
    alg: Arc<Algebra<R>>,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: CoeffRing> PartialEq for Element<R> {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl<R: CoeffRing> Eq for Element<R> {}

fn same_algebra<R: CoeffRing>(a: &Arc<Algebra<R>>, b: &Arc<Algebra<R>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<R: CoeffRing> Element<R> {
    pub fn zero(alg: &Arc<Algebra<R>>) -> Self {
        Element { alg: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alg: &Arc<Algebra<R>>) -> Self {
        Self::constant(alg, alg.ring().one())
    }

    pub fn constant(alg: &Arc<Algebra<R>>, c: R::Elem) -> Self {
        Self::from_monomial(alg, alg.unit_monomial(), c)
    }

    pub fn from_monomial(alg: &Arc<Algebra<R>>, m: Monomial, c: R::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !alg.ring().is_zero(&c) {
            terms.insert(m, c);
        }
        Element { alg: alg.clone(), terms }
    }

    pub fn generator(alg: &Arc<Algebra<R>>, idx: usize) -> Self {
        Self::from_monomial(alg, alg.generator_monomial(idx), alg.ring().one())
    }

    /// Generator by name.
    pub fn named(alg: &Arc<Algebra<R>>, name: &str) -> Option<Self> {
        alg.index_of(name).map(|i| Self::generator(alg, i))
    }

    pub fn from_terms(
        alg: &Arc<Algebra<R>>,
        terms: impl IntoIterator<Item = (Monomial, R::Elem)>,
    ) -> Self {
        let mut e = Self::zero(alg);
        for (m, c) in terms {
            e.add_term(m, &c);
        }
        e
    }

    pub fn algebra(&self) -> &Arc<Algebra<R>> {
        &self.alg
    }

    pub fn ring(&self) -> &R {
        self.alg.ring()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, R::Elem> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring().zero())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &R::Elem) {
        let ring = self.alg.ring().clone();
        if ring.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = ring.add(v, c);
                if ring.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(AlgebraError::DescriptorMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let ring = self.ring().clone();
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &ring.neg(c));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let ring = self.ring();
        let mut out = Self::zero(&self.alg);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &ring.mul(c, v));
        }
        out
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&self.ring().from_i64(c))
    }

    /// Graded-commutative product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        Ok(self.mul_bounded(other, None))
    }

    /// Product keeping only terms of degree at most `max_degree`.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        self.mul_bounded(other, Some(max_degree))
    }

    fn mul_bounded(&self, other: &Self, max_degree: Option<u32>) -> Self {
        let alg = &self.alg;
        let ring = alg.ring();
        let mut out = Self::zero(alg);
        let rhs: Vec<(&Monomial, &R::Elem, u32)> = other
            .terms
            .iter()
            .map(|(m, c)| (m, c, alg.monomial_degree(m)))
            .collect();
        for (ma, ca) in &self.terms {
            let da = alg.monomial_degree(ma);
            for &(mb, cb, db) in &rhs {
                if let Some(max) = max_degree {
                    if da + db > max {
                        continue;
                    }
                }
                if let Some((m, negative)) = alg.mul_monomials(ma, mb) {
                    let mut c = ring.mul(ca, cb);
                    if negative {
                        c = ring.neg(&c);
                    }
                    out.add_term(m, &c);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_bounded(e, None)
    }

    pub fn pow_truncated(&self, e: u32, max_degree: u32) -> Self {
        self.pow_bounded(e, Some(max_degree))
    }

    fn pow_bounded(&self, mut e: u32, max_degree: Option<u32>) -> Self {
        let mut acc = Self::one(&self.alg);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_bounded(&base, max_degree);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_bounded(&base, max_degree);
            }
        }
        acc
    }

    /// Sum of the terms of degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.alg.monomial_degree(m) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Element { alg: self.alg.clone(), terms }
    }

    /// Degrees with at least one nonzero term, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.terms.keys().map(|m| self.alg.monomial_degree(m)).collect();
        set.into_iter().collect()
    }

    /// `Ok(Some(d))` if homogeneous of degree d, `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>, AlgebraError> {
        let ds = self.degrees();
        match ds.len() {
            0 => Ok(None),
            1 => Ok(Some(ds[0])),
            _ => Err(AlgebraError::NotHomogeneous),
        }
    }

    /// Coordinates in `basis(d)` order.
    pub fn coords(&self, d: u32) -> Result<Vec<R::Elem>, AlgebraError> {
        if let Some(deg) = self.homogeneous_degree()? {
            if deg != d {
                return Err(AlgebraError::WrongDegree(d));
            }
        }
        let ring = self.ring();
        Ok(self.alg.basis(d).iter().map(|m| self.terms.get(m).cloned().unwrap_or_else(|| ring.zero())).collect())
    }

    /// Inverse of [`Element::coords`].
    pub fn from_coords(alg: &Arc<Algebra<R>>, d: u32, coords: &[R::Elem]) -> Result<Self, AlgebraError> {
        let basis = alg.basis(d);
        if basis.len() != coords.len() {
            return Err(AlgebraError::DimensionMismatch(alloc::format!(
                "degree {d} has {} basis monomials, got {} coordinates",
                basis.len(),
                coords.len()
            )));
        }
        Ok(Self::from_terms(alg, basis.into_iter().zip(coords.iter().cloned())))
    }

    /// Ring homomorphism sending generator `i` to `images[i]`, into the algebra
    /// of the images (or into `target` when the element has no terms).
    pub fn substitute(&self, target: &Arc<Algebra<R>>, images: &[Element<R>]) -> Self {
        self.substitute_bounded(target, images, None)
    }

    /// As [`Element::substitute`], dropping every term above `max_degree`.
    /// Valid when each image has no terms below the degree of its generator.
    pub fn substitute_truncated(&self, target: &Arc<Algebra<R>>, images: &[Element<R>], max_degree: u32) -> Self {
        self.substitute_bounded(target, images, Some(max_degree))
    }

    fn substitute_bounded(&self, target: &Arc<Algebra<R>>, images: &[Element<R>], max_degree: Option<u32>) -> Self {
        assert_eq!(images.len(), self.alg.num_generators(), "one image per generator");
        let mut out = Element::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Element::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = images[i].pow_bounded(e, max_degree);
                prod = prod.mul_bounded(&factor, max_degree);
                if prod.is_zero() {
                    break;
                }
            }
            for (mm, cc) in prod.terms {
                out.add_term(mm, &cc);
            }
        }
        out
    }

    /// Applies `f` to every coefficient and rebuilds the element over `target`,
    /// which must have the same generator list.
    pub fn map_coefficients<S: CoeffRing>(
        &self,
        target: &Arc<Algebra<S>>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Element<S> {
        assert_eq!(self.alg.generators(), target.generators(), "same generators");
        Element::from_terms(target, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Sum over monomials of `f(monomial)` scaled by the coefficient; the
    /// linear extension of a map defined on monomials.
    pub fn linear_map(&self, target: &Arc<Algebra<R>>, mut f: impl FnMut(&Monomial) -> Element<R>) -> Element<R> {
        let mut out = Element::zero(target);
        for (m, c) in &self.terms {
            let img = f(m);
            let ring = target.ring();
            for (mm, cc) in img.terms {
                out.add_term(mm, &ring.mul(c, &cc));
            }
        }
        out
    }
}

impl<R: CoeffRing> fmt::Debug for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: CoeffRing> fmt::Display for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ring = self.ring();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let c = ring.to_bigint(c);
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = self.alg.format_monomial(m);
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else if !mag.is_zero() {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<R: CoeffRing> Add for &Element<R> {
    type Output = Element<R>;
    /// Panics on descriptor mismatch; use [`Element::checked_add`] otherwise.
    fn add(self, rhs: Self) -> Element<R> {
        self.checked_add(rhs).expect("descriptor mismatch")
    }
}

impl<R: CoeffRing> Sub for &Element<R> {
    type Output = Element<R>;
    fn sub(self, rhs: Self) -> Element<R> {
        self.checked_sub(rhs).expect("descriptor mismatch")
    }
}

impl<R: CoeffRing> Mul for &Element<R> {
    type Output = Element<R>;
    fn mul(self, rhs: Self) -> Element<R> {
        self.checked_mul(rhs).expect("descriptor mismatch")
    }
}

impl<R: CoeffRing> Neg for &Element<R> {
    type Output = Element<R>;
    fn neg(self) -> Element<R> {
        let ring = self.ring().clone();
        self.scale(&ring.neg(&ring.one()))
    }
}

impl<R: CoeffRing> Add for Element<R> {
    type Output = Element<R>;
    fn add(self, rhs: Self) -> Element<R> {
        &self + &rhs
    }
}

impl<R: CoeffRing> Sub for Element<R> {
    type Output = Element<R>;
    fn sub(self, rhs: Self) -> Element<R> {
        &self - &rhs
    }
}

impl<R: CoeffRing> Mul for Element<R> {
    type Output = Element<R>;
    fn mul(self, rhs: Self) -> Element<R> {
        &self * &rhs
    }
}

impl<R: CoeffRing> Neg for Element<R> {
    type Output = Element<R>;
    fn neg(self) -> Element<R> {
        -&self
    }
}
