use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::{OracleError, Result, CAPS};

fn small(v: &[BigInt], what: &str) -> Result<Vec<i64>> {
    v.iter()
        .map(|c| {
            c.to_i64()
                .filter(|c| c.abs() <= CAPS.max_coord)
                .ok_or_else(|| OracleError::CapExceeded(format!("{what} coordinate {c} exceeds {}", CAPS.max_coord)))
        })
        .collect()
}

/// Whether `v` is a nonnegative integral combination of `gens`, by trying
/// every coefficient vector in `[0, max_cone_coeff]^k`.
pub fn cone_member(v: &[BigInt], gens: &[Vec<BigInt>]) -> Result<bool> {
    let target = small(v, "target")?;
    let gens: Vec<Vec<i64>> = gens.iter().map(|g| small(g, "generator")).collect::<Result<_>>()?;
    let k = gens.len();
    let mut c = vec![0i64; k];
    loop {
        let hit = (0..target.len()).all(|i| gens.iter().zip(&c).map(|(g, ci)| g[i] * ci).sum::<i64>() == target[i]);
        if hit {
            return Ok(true);
        }
        let mut i = 0;
        while i < k && c[i] == CAPS.max_cone_coeff {
            c[i] = 0;
            i += 1;
        }
        if i == k {
            return Ok(false);
        }
        c[i] += 1;
    }
}
