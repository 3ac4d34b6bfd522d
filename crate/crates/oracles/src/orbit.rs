use std::collections::HashSet;

use iwk_core::iwahori_weyl::IwElement;
use num_traits::ToPrimitive;

use crate::word::{bfs_word_within, omega_sample};
use crate::{OracleError, Result, CAPS};

fn in_box(x: &IwElement) -> bool {
    x.trans().0.iter().all(|c| c.to_i64().is_some_and(|c| c.abs() <= CAPS.orbit_coord))
}

/// Everything reachable from `seed` by `x -> g x sigma(g)^{-1}` with `g` a
/// simple reflection or a sampled length-zero element, staying within
/// length `bound` and the coordinate box.
pub fn orbit_closure(seed: &IwElement, bound: usize) -> Result<HashSet<IwElement>> {
    let datum = seed.datum();
    let mut conj = IwElement::generators(datum);
    conj.extend(omega_sample(datum).into_iter().skip(1));
    let pairs: Vec<(IwElement, IwElement)> = conj.into_iter().map(|g| (g.apply_sigma().inv(), g)).collect();
    let mut out = HashSet::from([seed.clone()]);
    let mut frontier = vec![seed.clone()];
    while let Some(x) = frontier.pop() {
        for (gs, g) in &pairs {
            let y = g.mul(&x)?.mul(gs)?;
            if out.contains(&y) || !in_box(&y) || bfs_word_within(&y, bound)?.is_none() {
                continue;
            }
            if out.len() >= CAPS.max_orbit {
                return Err(OracleError::CapExceeded(format!("orbit of {seed} exceeds {}", CAPS.max_orbit)));
            }
            out.insert(y.clone());
            frontier.push(y);
        }
    }
    Ok(out)
}
