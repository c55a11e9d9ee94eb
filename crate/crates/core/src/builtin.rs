//! Named fans and families used by the examples, tests and `--builtin`.

use crate::degeneration::{projective_ci_family, FamilySpec, Partition};
use crate::error::{Error, Result};
use crate::lattice::{Cone, LatticeVector};
use crate::toric::Fan;

/// Boundary lattice points of `conv{(2,-1), (-1,2), (-1,-1)}`.
pub const EXAMPLE2_POINTS: [[i64; 2]; 9] =
    [[2, -1], [1, 0], [0, 1], [-1, 2], [-1, 1], [-1, 0], [-1, -1], [0, -1], [1, -1]];

pub const FAN_NAMES: [&str; 8] = ["p1", "p2", "p3", "p4", "p5", "example2", "p9611", "index2-cone"];

pub const FAMILY_NAMES: [&str; 7] =
    ["cubic-curve", "quartic-surface", "quintic", "sextic-fourfold", "example2-hypersurface", "two-cubics", "empty"];

/// Resolved `P^2 / Z_3`: face fan over the 9 boundary points of its ray hull,
/// consecutive points spanning the 2-cones.
pub fn example2() -> Fan {
    Fan::polygon_face_fan(&EXAMPLE2_POINTS.map(LatticeVector::from)).expect("example-2 fan is valid")
}

/// A smooth complete resolution of `P[9,6,1,1,1]` with 9 rays in `Z^4`.
///
/// Rays `A, B, D, E, v1, v2, v3, C, F` (indices 0..9). The fiber rays live in
/// the last two coordinates with cyclic order `A, B, C, D, E, F`; maximal cones
/// are two of `v1, v2, v3` together with two cyclically adjacent fiber rays.
/// `v1 + v2 + v3 + 6A + 9B = 0`.
pub fn p9611() -> Fan {
    let rays: Vec<LatticeVector> = [
        [0, 0, 1, 0],     // A
        [0, 0, 0, 1],     // B
        [0, 0, -2, -3],   // D
        [0, 0, -1, -2],   // E
        [1, 0, 0, 0],     // v1
        [0, 1, 0, 0],     // v2
        [-1, -1, -6, -9], // v3
        [0, 0, -1, -1],   // C
        [0, 0, 0, -1],    // F
    ]
    .map(LatticeVector::from)
    .to_vec();
    let cycle = [0, 1, 7, 2, 3, 8];
    let base = [[4, 5], [5, 6], [4, 6]];
    let mut cones = Vec::new();
    for b in base {
        for i in 0..cycle.len() {
            cones.push(Cone::new([b[0], b[1], cycle[i], cycle[(i + 1) % cycle.len()]]));
        }
    }
    Fan::new(4, rays, cones).expect("fixture fan is valid")
}

/// `{A, B}, {D, E}, {v1, v2, v3, C, F}`: no ray of the first block shares a
/// cone with a ray of the second, so every transversal is a non-face.
pub fn p9611_partition() -> Partition {
    Partition::new(vec![vec![0, 1], vec![2, 3], vec![4, 5, 6, 7, 8]], 9).expect("fixture partition is valid")
}

/// Single cone of index 2; not smooth, not complete.
pub fn index2_cone() -> Fan {
    let rays = vec![LatticeVector::from([1, 0]), LatticeVector::from([1, 2])];
    Fan::new(2, rays, vec![Cone::new([0, 1])]).expect("valid cone")
}

pub fn fan(name: &str) -> Result<Fan> {
    match name {
        "example2" => Ok(example2()),
        "p9611" => Ok(p9611()),
        "index2-cone" => Ok(index2_cone()),
        _ => {
            let n = name
                .strip_prefix('p')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&n| (1..=6).contains(&n))
                .ok_or_else(|| Error::Parse(format!("unknown builtin {name:?}; fans: {}", FAN_NAMES.join(", "))))?;
            Ok(Fan::projective_space(n))
        }
    }
}

/// Anticanonical hypersurface family with generic (all-ones) section.
pub fn hypersurface(fan: Fan) -> Result<FamilySpec> {
    let p = Partition::single_block(fan.num_rays());
    FamilySpec::generic(fan, p)
}

pub fn family(name: &str) -> Result<FamilySpec> {
    match name {
        "cubic-curve" => Ok(projective_ci_family(1, &[3])?.spec),
        "quartic-surface" => Ok(projective_ci_family(2, &[4])?.spec),
        "quintic" => Ok(projective_ci_family(3, &[5])?.spec),
        "sextic-fourfold" => Ok(projective_ci_family(4, &[6])?.spec),
        "two-cubics" => Ok(projective_ci_family(3, &[3, 3])?.spec),
        "example2-hypersurface" => hypersurface(example2()),
        "empty" => FamilySpec::generic(p9611(), p9611_partition()),
        _ => Err(Error::Parse(format!("unknown builtin family {name:?}; families: {}", FAMILY_NAMES.join(", ")))),
    }
}

pub fn is_family(name: &str) -> bool {
    FAMILY_NAMES.contains(&name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::components;

    #[test]
    fn fixture_fan_is_smooth_and_complete() {
        let f = p9611();
        assert_eq!(f.num_rays(), 9);
        assert_eq!(f.max_cones().len(), 18);
        assert!(f.is_smooth());
        assert!(f.is_complete().unwrap());
        let spec = family("empty").unwrap();
        assert!(components(&spec).is_empty());
    }

    #[test]
    fn example2_fan() {
        let f = example2();
        assert_eq!(f.num_rays(), 9);
        assert!(f.is_smooth() && f.is_complete().unwrap());
    }

    #[test]
    fn names_resolve() {
        for n in FAN_NAMES {
            assert!(fan(n).is_ok(), "{n}");
        }
        for n in FAMILY_NAMES {
            assert!(family(n).is_ok(), "{n}");
        }
        assert!(fan("p0").is_err());
        assert!(fan("q3").is_err());
        assert!(family("sextic").is_err());
    }
}
