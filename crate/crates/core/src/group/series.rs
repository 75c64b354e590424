use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Default order bound for Fitting subgroup computations.
pub const DEFAULT_FITTING_CAP: usize = 512;

/// `γ_1 = G`, `γ_{i+1} = [γ_i, G]`, stopping at the first repeated term.
pub(super) fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let whole = g.whole();
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().unwrap();
        let next = g.commutator_subgroup(last, &whole);
        if next.elements == last.elements {
            break;
        }
        series.push(next);
    }
    series
}

pub(super) fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let last = series.last().unwrap();
        let next = g.commutator_subgroup(last, last);
        if next.elements == last.elements {
            break;
        }
        series.push(next);
    }
    series
}

/// Grows a p-subgroup one factor of `p` at a time: any element of `N(P) \ P` whose
/// `p`-th power lies in `P` extends `P`, and such an element exists until `P` is Sylow.
pub(super) fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = g.sylow_order(p);
    let mut sylow = g.trivial();
    while sylow.order() < target {
        let normalizer = g.normalizer(&sylow);
        let x = normalizer
            .elements()
            .iter()
            .copied()
            .find(|&x| !sylow.contains(x) && sylow.contains(g.pow(x, p as i64)))
            .expect("a non-Sylow p-subgroup has a p-element extending it in its normalizer");
        let mut gens = sylow.generators.clone();
        gens.push(x);
        sylow = g.subgroup_generated(&gens);
    }
    sylow
}

pub(super) fn fitting_subgroup(g: &FiniteGroup, level: u8, cap: usize) -> Result<Subgroup> {
    if g.order() > cap {
        return Err(Error::TooLarge {
            size: g.order(),
            cap,
        });
    }
    match level {
        1 => {
            let cores: Vec<Subgroup> = g.primes().into_iter().map(|p| g.p_core(p)).collect();
            Ok(g.join_all(cores.iter()))
        }
        2 => {
            let f1 = fitting_subgroup(g, 1, cap)?;
            let (quotient, proj) = g.quotient(&f1)?;
            let fq = fitting_subgroup(&quotient, 1, cap)?;
            Ok(proj.preimage(g, &fq))
        }
        _ => Err(Error::InvalidSpec(format!(
            "Fitting level {level} is not supported (use 1 or 2)"
        ))),
    }
}
