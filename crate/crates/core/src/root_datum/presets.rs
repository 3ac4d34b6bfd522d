use super::spec::{CustomDatum, LatticeSpec, TwistSpec};

/// Names of the built-in presets, in catalog order.
pub const PRESET_NAMES: &[&str] = &[
    "GL2",
    "SL2",
    "PGL2",
    "GL3",
    "SL3",
    "GSp4",
    "Sp4",
    "ResE2-GL2",
    "U3-unram",
    "SU3-unram",
];

fn plain(name: &str, cartan: &[&[i64]], free_rank: usize, coroots: &[&[i64]], pairing: &[&[i64]]) -> CustomDatum {
    let to_vec = |m: &[&[i64]]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    CustomDatum {
        name: name.to_string(),
        cartan: to_vec(cartan),
        lattice: LatticeSpec { free_rank, torsion: Vec::new() },
        simple_coroots: to_vec(coroots),
        root_pairing: to_vec(pairing),
        twist: None,
        echelonnage_override: None,
    }
}

fn twisted(mut d: CustomDatum, perm: &[usize], endo: &[&[i64]]) -> CustomDatum {
    d.twist = Some(TwistSpec {
        perm: perm.to_vec(),
        lattice_endo: endo.iter().map(|r| r.to_vec()).collect(),
    });
    d
}

const A2: &[&[i64]] = &[&[2, -1], &[-1, 2]];
const C2: &[&[i64]] = &[&[2, -1], &[-2, 2]];

/// Built-in datum by name.
pub fn preset(name: &str) -> Option<CustomDatum> {
    let d = match name {
        "GL2" => plain(name, &[&[2]], 2, &[&[1, -1]], &[&[1, -1]]),
        "SL2" => plain(name, &[&[2]], 1, &[&[1]], &[&[2]]),
        "PGL2" => plain(name, &[&[2]], 1, &[&[2]], &[&[1]]),
        "GL3" => plain(name, A2, 3, &[&[1, -1, 0], &[0, 1, -1]], &[&[1, -1, 0], &[0, 1, -1]]),
        "SL3" => plain(name, A2, 2, &[&[1, 0], &[0, 1]], &[&[2, -1], &[-1, 2]]),
        // coordinates (x1, x2, x0): cocharacter diag(x1, x2, x0 - x2, x0 - x1)
        "GSp4" => plain(name, C2, 3, &[&[1, -1, 0], &[0, 1, 0]], &[&[1, -1, 0], &[0, 2, -1]]),
        "Sp4" => plain(name, C2, 2, &[&[1, -1], &[0, 1]], &[&[1, -1], &[0, 2]]),
        "ResE2-GL2" => twisted(
            plain(
                name,
                &[&[2, 0], &[0, 2]],
                4,
                &[&[1, -1, 0, 0], &[0, 0, 1, -1]],
                &[&[1, -1, 0, 0], &[0, 0, 1, -1]],
            ),
            &[1, 0],
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        ),
        "U3-unram" => twisted(
            plain(name, A2, 3, &[&[1, -1, 0], &[0, 1, -1]], &[&[1, -1, 0], &[0, 1, -1]]),
            &[1, 0],
            &[&[0, 0, -1], &[0, -1, 0], &[-1, 0, 0]],
        ),
        "SU3-unram" => twisted(
            plain(name, A2, 2, &[&[1, 0], &[0, 1]], &[&[2, -1], &[-1, 2]]),
            &[1, 0],
            &[&[0, 1], &[1, 0]],
        ),
        _ => return None,
    };
    Some(d)
}

/// Simply connected datum of a given Cartan matrix (lattice spanned by the
/// simple coroots), optionally twisted by a diagram automorphism.
pub fn simply_connected(name: &str, cartan: Vec<Vec<i64>>, perm: Option<Vec<usize>>) -> CustomDatum {
    let r = cartan.len();
    let unit = |i: usize| (0..r).map(|j| i64::from(i == j)).collect::<Vec<_>>();
    let twist = perm.map(|p| {
        let mut endo = vec![vec![0i64; r]; r];
        for (j, &pj) in p.iter().enumerate() {
            endo[pj][j] = 1;
        }
        TwistSpec { perm: p, lattice_endo: endo }
    });
    CustomDatum {
        name: name.to_string(),
        root_pairing: cartan.clone(),
        cartan,
        lattice: LatticeSpec { free_rank: r, torsion: Vec::new() },
        simple_coroots: (0..r).map(unit).collect(),
        twist,
        echelonnage_override: None,
    }
}
