//! Steenrod operations on a presented algebra over F_p.
//!
//! An action is fixed by the Bockstein and the total power on generators.
//! The Bockstein extends as a degree +1 derivation with Koszul signs, the
//! total power `P = sum_k P^k` as a ring homomorphism, and `P^k` is the
//! component of `P` in degree `|x| + 2k(p-1)`. Milnor operations follow
//! `Q_0 = beta`, `Q_{i+1} = P^{p^i} Q_i - Q_i P^{p^i}` literally.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::galgebra::{Algebra, Element, Monomial};
use crate::ring::{CoeffRing, PrimeField};

pub type FpElement = Element<PrimeField>;

/// Index `i` of the Milnor primitive `Q_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MilnorIndex(pub u32);

#[derive(Clone, Debug)]
pub struct SteenrodAction {
    alg: Arc<Algebra<PrimeField>>,
    beta: Vec<FpElement>,
    total: Vec<FpElement>,
}

impl SteenrodAction {
    /// Validates the generator images: `beta(g)` homogeneous of degree
    /// `|g| + 1` with `beta(beta(g)) = 0`; `P(g)` has pieces in degrees
    /// `|g| + 2k(p-1)` only, bottom piece `g`, and satisfies instability in
    /// degrees 1 and 2.
    pub fn new(
        alg: &Arc<Algebra<PrimeField>>,
        beta_images: Vec<FpElement>,
        total_power_images: Vec<FpElement>,
    ) -> Result<Self, AlgebraError> {
        let n = alg.num_generators();
        if beta_images.len() != n || total_power_images.len() != n {
            return Err(AlgebraError::InvalidAction("one image per generator is required".into()));
        }
        let p = alg.ring().p() as u32;
        for (idx, spec) in alg.generators().iter().enumerate() {
            let b = &beta_images[idx];
            match b.homogeneous_degree()? {
                None => {}
                Some(d) if d == spec.degree + 1 => {}
                Some(d) => {
                    return Err(AlgebraError::InvalidAction(format!(
                        "beta({}) has degree {d}, expected {}",
                        spec.name,
                        spec.degree + 1
                    )))
                }
            }
            let t = &total_power_images[idx];
            let g = Element::generator(alg, idx);
            if t.homogeneous_component(spec.degree) != g {
                return Err(AlgebraError::InvalidAction(format!("P^0({}) is not the identity", spec.name)));
            }
            for d in t.degrees() {
                if d < spec.degree || (d - spec.degree) % (2 * (p - 1)) != 0 {
                    return Err(AlgebraError::InvalidAction(format!(
                        "P({}) has a piece in degree {d}",
                        spec.name
                    )));
                }
            }
            let unstable_ok = match spec.degree {
                1 => *t == g,
                2 => *t == &g + &g.pow(p),
                _ => true,
            };
            if !unstable_ok {
                return Err(AlgebraError::InvalidAction(format!("P({}) violates instability", spec.name)));
            }
        }
        let action = SteenrodAction { alg: alg.clone(), beta: beta_images, total: total_power_images };
        for (idx, spec) in alg.generators().iter().enumerate() {
            if !action.bockstein(&action.beta[idx]).is_zero() {
                return Err(AlgebraError::InvalidAction(format!("beta(beta({})) is nonzero", spec.name)));
            }
        }
        Ok(action)
    }

    pub fn algebra(&self) -> &Arc<Algebra<PrimeField>> {
        &self.alg
    }

    pub fn p(&self) -> u64 {
        self.alg.ring().p()
    }

    pub fn beta_image(&self, idx: usize) -> &FpElement {
        &self.beta[idx]
    }

    pub fn total_power_image(&self, idx: usize) -> &FpElement {
        &self.total[idx]
    }

    fn monomial_element(&self, exps: &[u32]) -> FpElement {
        Element::from_monomial(&self.alg, self.alg.monomial(exps).expect("sub-monomial"), 1)
    }

    fn bockstein_monomial(&self, m: &Monomial) -> FpElement {
        let alg = &self.alg;
        let ring = *alg.ring();
        let exps = m.exponents();
        let mut out = Element::zero(alg);
        let mut prefix_degree = 0u32;
        for (idx, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let deg = alg.generators()[idx].degree;
            if !self.beta[idx].is_zero() {
                let mut prefix = exps.to_vec();
                for v in prefix.iter_mut().skip(idx) {
                    *v = 0;
                }
                let mut suffix = exps.to_vec();
                for v in suffix.iter_mut().take(idx + 1) {
                    *v = 0;
                }
                let mut lowered = alg.unit_monomial().exponents().to_vec();
                lowered[idx] = e - 1;
                // beta(g^e) = e g^{e-1} beta(g) for even g; e = 1 for odd g
                let middle = (&self.monomial_element(&lowered) * &self.beta[idx]).scale_i64(i64::from(e));
                let mut term = &(&self.monomial_element(&prefix) * &middle) * &self.monomial_element(&suffix);
                if prefix_degree % 2 == 1 {
                    term = term.scale(&ring.neg(&1));
                }
                out = &out + &term;
            }
            prefix_degree += e * deg;
        }
        out
    }

    /// Bockstein, extended as a derivation of degree +1.
    pub fn bockstein(&self, e: &FpElement) -> FpElement {
        e.linear_map(&self.alg, |m| self.bockstein_monomial(m))
    }

    /// The total power operation, a ring homomorphism.
    pub fn total_power(&self, e: &FpElement) -> FpElement {
        e.substitute(&self.alg, &self.total)
    }

    /// `P^k` on a homogeneous element.
    pub fn power(&self, k: u64, e: &FpElement) -> Result<FpElement, AlgebraError> {
        let Some(d) = e.homogeneous_degree()? else {
            return Ok(Element::zero(&self.alg));
        };
        if k == 0 {
            return Ok(e.clone());
        }
        let shift = 2 * k * (self.p() - 1);
        let target = u64::from(d) + shift;
        if 2 * k > u64::from(d) {
            return Ok(Element::zero(&self.alg));
        }
        let target = u32::try_from(target).map_err(|_| AlgebraError::Precondition("degree overflow".into()))?;
        // every generator image starts in the generator's own degree, so
        // dropping terms above the target degree does not change it
        Ok(e.substitute_truncated(&self.alg, &self.total, target).homogeneous_component(target))
    }

    /// Milnor primitive `Q_i` on a homogeneous element.
    pub fn milnor_q(&self, i: MilnorIndex, e: &FpElement) -> Result<FpElement, AlgebraError> {
        e.homogeneous_degree()?;
        if i.0 == 0 {
            return Ok(self.bockstein(e));
        }
        let step = self.p().pow(i.0 - 1);
        let prev = MilnorIndex(i.0 - 1);
        let first = self.power(step, &self.milnor_q(prev, e)?)?;
        let second = self.milnor_q(prev, &self.power(step, e)?)?;
        Ok(&first - &second)
    }
}
