//! Random instances of the gluing lemmas for simplicial complexes.
//!
//! Complexes live on labels `0..6`; cone labels are drawn from `6..14`.

use rand::Rng;

use crate::homology::{cone, Face, Field, HomologyProfile, SimplicialComplex};

const BASE: u32 = 6;
const EXTRA: u32 = 8;
/// Highest homological degree compared.
const TOP: i32 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GluingLemma {
    Cone,
    UnionOfAcyclic,
    TwoCones,
    SharedSecondCone,
    ThreeCones,
}

impl GluingLemma {
    pub const ALL: [GluingLemma; 5] = [
        GluingLemma::Cone,
        GluingLemma::UnionOfAcyclic,
        GluingLemma::TwoCones,
        GluingLemma::SharedSecondCone,
        GluingLemma::ThreeCones,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GluingLemma::Cone => "cone acyclicity",
            GluingLemma::UnionOfAcyclic => "union of two acyclic complexes",
            GluingLemma::TwoCones => "two cones, relabelled",
            GluingLemma::SharedSecondCone => "shared second cone",
            GluingLemma::ThreeCones => "three cones",
        }
    }
}

fn base_mask() -> Face {
    (1 << BASE) - 1
}

fn extra_mask() -> Face {
    ((1 << EXTRA) - 1) << BASE
}

/// Nonempty random subset of `mask`.
fn subset(rng: &mut impl Rng, mask: Face) -> Face {
    loop {
        let f = rng.gen::<u64>() & mask;
        if f != 0 {
            return f;
        }
    }
}

/// 1 to 5 random facets on the base labels.
pub fn random_complex(rng: &mut impl Rng) -> SimplicialComplex {
    let k = rng.gen_range(1..=5);
    SimplicialComplex::from_facets((0..k).map(|_| subset(rng, base_mask())))
}

/// Two disjoint nonempty subsets of `mask`.
fn disjoint_pair(rng: &mut impl Rng, mask: Face) -> (Face, Face) {
    loop {
        let a = subset(rng, mask);
        if a != mask {
            return (a, subset(rng, mask & !a));
        }
    }
}

fn agree_above_zero(x: &HomologyProfile, y: &HomologyProfile) -> bool {
    (1..=TOP).all(|i| x.get(i) == y.get(i))
}

/// One random instance; `true` when the claimed dimension identity holds.
pub fn check_gluing(lemma: GluingLemma, rng: &mut impl Rng, field: Field) -> (bool, String) {
    let h = |d: &SimplicialComplex| d.reduced_homology(field);
    match lemma {
        GluingLemma::Cone => {
            let d = random_complex(rng);
            let a = subset(rng, extra_mask());
            let c = cone(a, &d).expect("nonempty apex");
            (h(&c).is_acyclic(), format!("A={a:#x} Δ={d}"))
        }
        GluingLemma::UnionOfAcyclic => {
            // apexes anywhere: a cone over any label is acyclic
            let all = base_mask() | extra_mask();
            let d1 = cone(subset(rng, all), &random_complex(rng)).unwrap();
            let d2 = cone(subset(rng, all), &random_complex(rng)).unwrap();
            let (u, i) = (h(&d1.union(&d2)), h(&d1.intersection(&d2)));
            let ok = h(&d1).is_acyclic() && h(&d2).is_acyclic() && (1..=TOP).all(|k| u.get(k) == i.get(k - 1));
            (ok, format!("Δ1={d1} Δ2={d2}"))
        }
        GluingLemma::TwoCones => {
            let (d1, d2) = (random_complex(rng), random_complex(rng));
            let (a, b) = disjoint_pair(rng, extra_mask());
            let (a2, b2) = disjoint_pair(rng, extra_mask());
            let left = cone(a, &d1).unwrap().union(&cone(b, &d2).unwrap());
            let right = cone(a2, &d1).unwrap().union(&cone(b2, &d2).unwrap());
            (agree_above_zero(&h(&left), &h(&right)), format!("Δ1={d1} Δ2={d2} A={a:#x} B={b:#x} A'={a2:#x} B'={b2:#x}"))
        }
        GluingLemma::SharedSecondCone => {
            let (d1, d2) = (random_complex(rng), random_complex(rng));
            // B may meet the base labels; A and A' avoid B and the base
            let b = subset(rng, base_mask() | extra_mask());
            let free = extra_mask() & !b;
            if free == 0 {
                return check_gluing(lemma, rng, field);
            }
            let (a, a2) = (subset(rng, free), subset(rng, free));
            let left = cone(a, &d1).unwrap().union(&cone(b, &d2).unwrap());
            let right = cone(a2, &d1).unwrap().union(&cone(b, &d2).unwrap());
            (agree_above_zero(&h(&left), &h(&right)), format!("Δ1={d1} Δ2={d2} A={a:#x} A'={a2:#x} B={b:#x}"))
        }
        GluingLemma::ThreeCones => {
            let (d1, d2, d3) = (random_complex(rng), random_complex(rng), random_complex(rng));
            let build = |a: Face, b: Face| {
                cone(a, &d1).unwrap().union(&cone(b, &d2).unwrap()).union(&cone(a | b, &d3).unwrap())
            };
            let (a, b) = disjoint_pair(rng, extra_mask());
            let (a2, b2) = disjoint_pair(rng, extra_mask());
            let ok = agree_above_zero(&h(&build(a, b)), &h(&build(a2, b2)));
            (ok, format!("Δ1={d1} Δ2={d2} Δ3={d3} A={a:#x} B={b:#x} A'={a2:#x} B'={b2:#x}"))
        }
    }
}
