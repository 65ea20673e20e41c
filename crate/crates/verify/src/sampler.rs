//! Seeded random sampling of the algebraic identities the core relies on.
//! Each property yields one report whose params record the seed and the
//! number of cases drawn.

use std::sync::Arc;

use bpu_core::invariants::{act, generate_group, sl2_generators};
use bpu_core::steenrod::MilnorIndex;
use bpu_core::symfun::{t_nabla, Lambda};
use bpu_core::topology::GammaModel;
use bpu_core::{make_algebra, Algebra, AlgebraError, CoeffRing, Element, GeneratorSpec, Integers, PrimeField, VerdictReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Sampler = fn(u64, usize) -> VerdictReport;

pub const PROPERTIES: [(&str, Sampler); 5] = [
    ("graded-commutativity", graded_commutativity),
    ("nabla-leibniz", nabla_leibniz),
    ("cartan-instability", cartan_instability),
    ("milnor-derivation", milnor_derivation),
    ("sl2-equivariance", sl2_equivariance),
];

fn random_element<R: CoeffRing>(rng: &mut ChaCha8Rng, alg: &Arc<Algebra<R>>, d: u32) -> Element<R> {
    let ring = alg.ring().clone();
    let terms: Vec<_> = alg
        .basis(d)
        .into_iter()
        .map(|m| (m, ring.from_i64(rng.gen_range(-4..=4))))
        .collect();
    Element::from_terms(alg, terms)
}

fn err(e: AlgebraError) -> String {
    e.to_string()
}

fn koszul(d1: u32, d2: u32) -> i64 {
    if d1 % 2 == 1 && d2 % 2 == 1 {
        -1
    } else {
        1
    }
}

fn finish(mut report: VerdictReport, cases: usize, first_failure: Option<String>) -> VerdictReport {
    match first_failure {
        Some(w) => report.record("sampled cases", false, w),
        None => report.record("sampled cases", true, format!("{cases} cases")),
    }
    report
}

fn sample(
    name: &str,
    seed: u64,
    cases: usize,
    mut case: impl FnMut(&mut ChaCha8Rng) -> Result<(), String>,
) -> VerdictReport {
    let report = VerdictReport::new(
        &format!("property:{name}"),
        &[("seed", seed as i64), ("cases", cases as i64)],
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for i in 0..cases {
        if let Err(w) = case(&mut rng) {
            failure = Some(format!("case {i}: {w}"));
            break;
        }
    }
    finish(report, cases, failure)
}

pub fn graded_commutativity(seed: u64, cases: usize) -> VerdictReport {
    let alg = make_algebra(
        vec![
            GeneratorSpec::even("u", 2),
            GeneratorSpec::even("v", 4),
            GeneratorSpec::odd("a", 1),
            GeneratorSpec::odd("b", 3),
        ],
        Integers,
    )
    .expect("valid generators");
    sample("graded-commutativity", seed, cases, |rng| {
        let ds: [u32; 3] = [rng.gen_range(0..9), rng.gen_range(0..9), rng.gen_range(0..6)];
        let [x, y, z] = ds.map(|d| random_element(rng, &alg, d));
        if &(&x * &y) * &z != &x * &(&y * &z) {
            return Err(format!("associativity fails for {x}, {y}, {z}"));
        }
        if &x * &y != (&y * &x).scale_i64(koszul(ds[0], ds[1])) {
            return Err(format!("commutativity fails for {x}, {y}"));
        }
        Ok(())
    })
}

pub fn nabla_leibniz(seed: u64, cases: usize) -> VerdictReport {
    sample("nabla-leibniz", seed, cases, |rng| {
        let n = rng.gen_range(1..=5);
        let lam = Lambda::new(n, Integers);
        let k1 = rng.gen_range(0..=4);
        let k2 = rng.gen_range(0..=8 - k1);
        let f = random_element(rng, lam.algebra(), 2 * k1);
        let g = random_element(rng, lam.algebra(), 2 * k2);
        let fg = &f * &g;
        if lam.nabla(&fg) != &(&lam.nabla(&f) * &g) + &(&f * &lam.nabla(&g)) {
            return Err(format!("Leibniz fails for n={n}, f={f}, g={g}"));
        }
        if lam.expand_in_t(&lam.nabla(&fg)) != t_nabla(&lam.expand_in_t(&fg)) {
            return Err(format!("t-variable oracle disagrees for n={n} on {fg}"));
        }
        Ok(())
    })
}

pub fn cartan_instability(seed: u64, cases: usize) -> VerdictReport {
    let model = GammaModel::new(PrimeField::new(3).expect("3 is prime"), 1);
    let alg = model.algebra().clone();
    let steenrod = model.action();
    sample("cartan-instability", seed, cases, |rng| {
        let d1 = rng.gen_range(1..8);
        let d2 = rng.gen_range(1..8);
        let k: u64 = rng.gen_range(0..6);
        let x = random_element(rng, &alg, d1);
        let y = random_element(rng, &alg, d2);
        let mut cartan = Element::zero(&alg);
        for i in 0..=k {
            cartan = &cartan + &(&steenrod.power(i, &x).map_err(err)? * &steenrod.power(k - i, &y).map_err(err)?);
        }
        if steenrod.power(k, &(&x * &y)).map_err(err)? != cartan {
            return Err(format!("Cartan formula fails for P^{k} on {x} * {y}"));
        }
        let px = steenrod.power(k, &x).map_err(err)?;
        if 2 * k > u64::from(d1) && !px.is_zero() {
            return Err(format!("P^{k} of degree-{d1} class {x} is {px}"));
        }
        if 2 * k == u64::from(d1) && px != x.pow(3) {
            return Err(format!("P^{k}({x}) is not the p-th power"));
        }
        Ok(())
    })
}

pub fn milnor_derivation(seed: u64, cases: usize) -> VerdictReport {
    let model = GammaModel::new(PrimeField::new(3).expect("3 is prime"), 1);
    let alg = model.algebra().clone();
    let steenrod = model.action();
    sample("milnor-derivation", seed, cases, |rng| {
        let q = MilnorIndex(rng.gen_range(0..=4));
        let d1 = rng.gen_range(1..4);
        let d2 = rng.gen_range(1..4);
        let x = random_element(rng, &alg, d1);
        let y = random_element(rng, &alg, d2);
        let lhs = steenrod.milnor_q(q, &(&x * &y)).map_err(err)?;
        let rhs = &(&steenrod.milnor_q(q, &x).map_err(err)? * &y)
            + &(&x * &steenrod.milnor_q(q, &y).map_err(err)?).scale_i64(koszul(d1, 1));
        if lhs != rhs {
            return Err(format!("Q_{} is not a derivation on {x} * {y}", q.0));
        }
        Ok(())
    })
}

pub fn sl2_equivariance(seed: u64, cases: usize) -> VerdictReport {
    let field = PrimeField::new(3).expect("3 is prime");
    let model = GammaModel::new(field, 1);
    let alg = model.algebra().clone();
    let steenrod = model.action();
    let group = generate_group(field, &sl2_generators(field)).expect("generators are invertible");
    sample("sl2-equivariance", seed, cases, |rng| {
        let g = group[rng.gen_range(0..group.len())];
        let d = rng.gen_range(1..7);
        let k = rng.gen_range(0..4);
        let x = random_element(rng, &alg, d);
        if act(&model, &g, &steenrod.bockstein(&x)) != steenrod.bockstein(&act(&model, &g, &x)) {
            return Err(format!("beta does not commute with {g:?} on {x}"));
        }
        let lhs = act(&model, &g, &steenrod.power(k, &x).map_err(err)?);
        let rhs = steenrod.power(k, &act(&model, &g, &x)).map_err(err)?;
        if lhs != rhs {
            return Err(format!("P^{k} does not commute with {g:?} on {x}"));
        }
        Ok(())
    })
}

pub fn sample_all(seed: u64, cases: usize) -> Vec<VerdictReport> {
    PROPERTIES.iter().map(|(_, f)| f(seed, cases)).collect()
}
