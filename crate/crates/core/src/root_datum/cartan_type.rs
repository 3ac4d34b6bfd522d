//! Recognition of finite-type Cartan matrices.

use std::fmt;

/// Finite Cartan type of one connected Dynkin component.
///
/// Rank-one and rank-two coincidences are normalized: `B1 = C1 = A1` and
/// `B2 = C2` are both reported under `A1` and `C2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: char, rank: usize) -> Self {
        match (family, rank) {
            ('B' | 'C', 1) => CartanType { family: 'A', rank: 1 },
            ('B', 2) => CartanType { family: 'C', rank: 2 },
            _ => CartanType { family, rank },
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            'A' => fact(n + 1),
            'B' | 'C' => (1u128 << n) * fact(n),
            'D' => (1u128 << (n - 1)) * fact(n),
            'E' => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            'F' => 1152,
            'G' => 12,
            _ => unreachable!("unknown Cartan family"),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Connected components of the Dynkin diagram, each sorted, in order of
/// their smallest node.
pub fn dynkin_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && (cartan[i][j] != 0 || cartan[j][i] != 0) {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Classifies one connected component (given by its node list).
/// `cartan[i][j] = <alpha_i, alpha_j^vee>`. Returns `None` for anything that
/// is not of finite type.
pub fn classify(cartan: &[Vec<i64>], nodes: &[usize]) -> Option<CartanType> {
    let n = nodes.len();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(CartanType::new('A', 1));
    }
    let a = |i: usize, j: usize| cartan[nodes[i]][nodes[j]];
    let mut adj = vec![Vec::new(); n];
    let mut edges = 0;
    let (mut doubles, mut triples) = (Vec::new(), 0);
    for i in 0..n {
        for j in i + 1..n {
            let m = a(i, j) * a(j, i);
            match m {
                0 => continue,
                1 => {}
                2 => doubles.push((i, j)),
                3 => triples += 1,
                _ => return None,
            }
            adj[i].push(j);
            adj[j].push(i);
            edges += 1;
        }
    }
    if edges != n - 1 {
        return None;
    }
    if triples > 0 {
        return (n == 2).then(|| CartanType::new('G', 2));
    }
    if adj.iter().any(|v| v.len() > 3) {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 3).collect();
    match doubles.len() {
        0 => match branch.as_slice() {
            [] => Some(CartanType::new('A', n)),
            [b] => {
                let mut legs: Vec<usize> = adj[*b].iter().map(|&s| leg_length(&adj, *b, s)).collect();
                legs.sort_unstable();
                match legs.as_slice() {
                    [1, 1, _] => Some(CartanType::new('D', n)),
                    [1, 2, 2] => Some(CartanType::new('E', 6)),
                    [1, 2, 3] => Some(CartanType::new('E', 7)),
                    [1, 2, 4] => Some(CartanType::new('E', 8)),
                    _ => None,
                }
            }
            _ => None,
        },
        1 => {
            if !branch.is_empty() {
                return None;
            }
            let (i, j) = doubles[0];
            if n == 2 {
                return Some(CartanType::new('C', 2));
            }
            let end = if adj[i].len() == 1 {
                Some((i, j))
            } else if adj[j].len() == 1 {
                Some((j, i))
            } else {
                None
            };
            match end {
                // <alpha_e, alpha_o^vee> = -2 means alpha_e is the long root
                Some((e, o)) => {
                    if a(e, o) == -2 {
                        Some(CartanType::new('C', n))
                    } else {
                        Some(CartanType::new('B', n))
                    }
                }
                None => (n == 4).then(|| CartanType::new('F', 4)),
            }
        }
        _ => None,
    }
}

fn leg_length(adj: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [nx] => {
                prev = cur;
                cur = *nx;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Standard Cartan matrices used by tests and presets.
pub fn standard_cartan(ty: CartanType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |i: usize, j: usize, a: &mut Vec<Vec<i64>>| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ty.family {
        'A' | 'B' | 'C' | 'F' | 'G' => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, &mut a);
            }
        }
        'D' => {
            for i in 0..n - 2 {
                link(i, i + 1, &mut a);
            }
            link(n - 3, n - 1, &mut a);
        }
        'E' => {
            // Bourbaki numbering: 1-3-4-5-6(-7-8), 2 attached to 4
            let idx = |k: usize| k - 1;
            link(idx(1), idx(3), &mut a);
            link(idx(3), idx(4), &mut a);
            link(idx(2), idx(4), &mut a);
            for k in 4..n {
                link(idx(k), idx(k + 1), &mut a);
            }
        }
        _ => {}
    }
    match ty.family {
        // last root long
        'C' if n >= 2 => a[n - 1][n - 2] = -2,
        // last root short
        'B' if n >= 2 => a[n - 2][n - 1] = -2,
        'F' => a[1][2] = -2,
        'G' => a[1][0] = -3,
        _ => {}
    }
    a
}
