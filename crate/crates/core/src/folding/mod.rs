//! Folding of minimal galleries toward a chamber at infinity.
//!
//! The Iwahori orbit of the alcove `a_x` is an affine space built from one
//! affine line per step of a minimal gallery from the base alcove to `a_x`.
//! Retracting onto the standard apartment from deep inside a Weyl chamber
//! `C` cuts that space into pieces, each a product of affine lines and
//! punctured affine lines, and each landing on a single alcove `a_y`. The
//! automaton here tracks every piece, merged by end alcove, and yields the
//! dimension `d(x, y, C)` of the intersection with the corresponding
//! unipotent orbit together with its exact point count over `F_q`.
//!
//! At a step across a wall `H`, if the next alcove of the gallery lies on
//! the far side of `H` from `C`, the whole line retracts to that alcove.
//! Otherwise one point of the line continues across `H` and the remaining
//! `q - 1` points fold back.

mod qpoly;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineElt, AffineWeyl};
use crate::rootsys::{RootSystem, WeylElt};
use crate::{Error, Result};

pub use qpoly::QPoly;

/// A chamber at infinity `u(C_0)` used as the retraction direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Orientation {
    pub chamber: WeylElt,
}

impl Orientation {
    /// The chamber `u(C_0)`.
    pub fn chamber(u: WeylElt) -> Orientation {
        Orientation { chamber: u }
    }

    /// The dominant chamber `C_0`.
    pub fn dominant() -> Orientation {
        Orientation::chamber(WeylElt::IDENTITY)
    }

    pub fn antidominant(rs: &RootSystem) -> Orientation {
        Orientation::chamber(rs.longest_element())
    }

    /// Orientation attached to the Borel `w B w^{-1}`.
    ///
    /// The Iwahori subgroup fixing the base alcove is the preimage of the
    /// opposite Borel, so the unipotent radical of `B` fixes the quarters
    /// pointing into `-C_0`, and conjugating by `w` moves that chamber to
    /// `w(-C_0) = w w_0 (C_0)`.
    pub fn for_borel(rs: &RootSystem, w: WeylElt) -> Orientation {
        Orientation::chamber(rs.mul(w, rs.longest_element()))
    }

    /// Orientation attached to `w B^- w^{-1}`, the chamber `w(C_0)`.
    pub fn for_opposite_borel(w: WeylElt) -> Orientation {
        Orientation::chamber(w)
    }

    /// All `|W|` orientations, in the order of the Weyl group table.
    pub fn all(rs: &RootSystem) -> Vec<Orientation> {
        rs.weyl_elements().map(Orientation::chamber).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Crossing {
    /// The next alcove lies on the chamber side of the wall; the line
    /// splits into one crossing point and `q - 1` folded points.
    Positive,
    /// The next alcove lies away from the chamber; the line retracts whole.
    Negative,
}

/// Sign of the step from `z` to `z s_i`, decided by comparing exact
/// barycenters with the wall.
pub fn crossing_sign(aw: &AffineWeyl, z: AffineElt, i: usize, o: Orientation) -> Crossing {
    let rs = aw.root_system();
    let (mut beta, mut level) = aw.wall(z, i);
    if !rs.is_positive(rs.act_root(rs.inv(o.chamber), beta)) {
        beta = rs.negate(beta);
        level = -level;
    }
    let k = BigRational::from_integer(BigInt::from(level));
    let next = aw.mul(z, aw.generator(i));
    let before = rs.pairing_rational(beta, &aw.barycenter(z));
    let after = rs.pairing_rational(beta, &aw.barycenter(next));
    debug_assert!((before < k) != (after < k), "step must cross its wall");
    if after > k {
        Crossing::Positive
    } else {
        Crossing::Negative
    }
}

/// Sign of the step from `z = t_λ w` to `z s_i` using only `w`: the step is
/// positive iff `u^{-1} w α_i < 0` for `i ≥ 1`, and iff `u^{-1} w θ > 0` for
/// `i = 0`.
pub fn crossing_sign_fast(aw: &AffineWeyl, z: AffineElt, i: usize, o: Orientation) -> Crossing {
    let rs = aw.root_system();
    let rel = rs.mul(rs.inv(o.chamber), z.fin);
    let positive = if i == 0 {
        rs.is_positive(rs.act_root(rel, rs.highest_root()))
    } else {
        !rs.is_positive(rs.act_root(rel, rs.simple_root(i - 1)))
    };
    if positive {
        Crossing::Positive
    } else {
        Crossing::Negative
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FoldMode {
    /// Track only the largest piece per end alcove.
    MaxDim,
    /// Also track exact point counts.
    PointCount,
}

/// Data attached to one end alcove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldEntry {
    /// Largest dimension of a piece ending here.
    pub dim: u32,
    /// Number of `F_q`-points of the union of pieces ending here.
    pub count: Option<QPoly>,
}

/// Result of folding one reduced word toward one chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldTable {
    pub word: Vec<u8>,
    pub orientation: Orientation,
    pub mode: FoldMode,
    entries: BTreeMap<AffineElt, FoldEntry>,
}

impl FoldTable {
    pub fn entries(&self) -> &BTreeMap<AffineElt, FoldEntry> {
        &self.entries
    }

    pub fn get(&self, y: AffineElt) -> Option<&FoldEntry> {
        self.entries.get(&y)
    }

    /// `d(x, y, C)`, with `None` for an empty intersection.
    pub fn dim(&self, y: AffineElt) -> Option<u32> {
        self.entries.get(&y).map(|e| e.dim)
    }

    /// Exact point count at `y`; zero when nothing ends there. Requires
    /// [`FoldMode::PointCount`].
    pub fn count(&self, y: AffineElt) -> Option<QPoly> {
        match self.mode {
            FoldMode::MaxDim => None,
            FoldMode::PointCount => Some(
                self.entries
                    .get(&y)
                    .and_then(|e| e.count.clone())
                    .unwrap_or_default(),
            ),
        }
    }

    /// Sum of the point counts over all end alcoves.
    pub fn total_count(&self) -> Option<QPoly> {
        match self.mode {
            FoldMode::MaxDim => None,
            FoldMode::PointCount => Some(
                self.entries
                    .values()
                    .filter_map(|e| e.count.as_ref())
                    .fold(QPoly::zero(), |acc, c| &acc + c),
            ),
        }
    }

    pub fn max_dim(&self) -> Option<u32> {
        self.entries.values().map(|e| e.dim).max()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn check_reduced(aw: &AffineWeyl, word: &[u8]) -> Result<AffineElt> {
    if let Some(&bad) = word.iter().find(|&&i| i as usize >= aw.n_generators()) {
        return Err(Error::Config(format!("generator index {bad} out of range")));
    }
    let x = aw.eval_word(word);
    let length = aw.length(x);
    if length != word.len() {
        return Err(Error::NonReduced { word: word.to_vec(), length });
    }
    Ok(x)
}

/// Runs the folding automaton over `word` using the precomputed sign rule.
pub fn fold_all(aw: &AffineWeyl, word: &[u8], o: Orientation, mode: FoldMode) -> Result<FoldTable> {
    run(aw, word, o, mode, crossing_sign_fast)
}

/// As [`fold_all`], deciding every sign from exact barycenters.
pub fn fold_all_exact(
    aw: &AffineWeyl,
    word: &[u8],
    o: Orientation,
    mode: FoldMode,
) -> Result<FoldTable> {
    run(aw, word, o, mode, crossing_sign)
}

fn run(
    aw: &AffineWeyl,
    word: &[u8],
    o: Orientation,
    mode: FoldMode,
    sign: fn(&AffineWeyl, AffineElt, usize, Orientation) -> Crossing,
) -> Result<FoldTable> {
    check_reduced(aw, word)?;
    let counting = mode == FoldMode::PointCount;
    let mut states: HashMap<AffineElt, (u32, QPoly)> = HashMap::new();
    states.insert(AffineElt::IDENTITY, (0, QPoly::one()));
    for &letter in word {
        let i = letter as usize;
        let s = aw.generator(i);
        let mut next: HashMap<AffineElt, (u32, QPoly)> = HashMap::with_capacity(states.len() * 2);
        let mut merge = |z: AffineElt, dim: u32, count: QPoly| {
            let slot = next.entry(z).or_insert((0, QPoly::zero()));
            slot.0 = slot.0.max(dim);
            if counting {
                slot.1 += &count;
            }
        };
        for (z, (dim, count)) in states {
            let zs = aw.mul(z, s);
            match sign(aw, z, i, o) {
                Crossing::Negative => {
                    let c = if counting { count.times_q() } else { QPoly::zero() };
                    merge(zs, dim + 1, c);
                }
                Crossing::Positive => {
                    let folded = if counting { count.times_q_minus_one() } else { QPoly::zero() };
                    merge(z, dim + 1, folded);
                    merge(zs, dim, count);
                }
            }
        }
        states = next;
    }
    let entries = states
        .into_iter()
        .map(|(z, (dim, count))| (z, FoldEntry { dim, count: counting.then_some(count) }))
        .collect();
    Ok(FoldTable { word: word.to_vec(), orientation: o, mode, entries })
}

/// One unmerged piece of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Piece {
    pub end: AffineElt,
    /// Number of full affine-line factors.
    pub n_lines: u32,
    /// Number of punctured affine-line factors.
    pub n_cut: u32,
}

impl Piece {
    pub fn dim(&self) -> u32 {
        self.n_lines + self.n_cut
    }

    pub fn count(&self) -> QPoly {
        QPoly::lines_and_cuts(self.n_lines, self.n_cut)
    }
}

/// Every piece of the decomposition, without merging, in branch order.
/// Exponential in the number of positive crossings.
pub fn fold_pieces(aw: &AffineWeyl, word: &[u8], o: Orientation) -> Result<Vec<Piece>> {
    check_reduced(aw, word)?;
    let mut pieces = vec![Piece { end: AffineElt::IDENTITY, n_lines: 0, n_cut: 0 }];
    for &letter in word {
        let i = letter as usize;
        let s = aw.generator(i);
        pieces = pieces
            .into_iter()
            .flat_map(|p| {
                let zs = aw.mul(p.end, s);
                match crossing_sign(aw, p.end, i, o) {
                    Crossing::Negative => {
                        vec![Piece { end: zs, n_lines: p.n_lines + 1, ..p }]
                    }
                    Crossing::Positive => vec![
                        Piece { n_cut: p.n_cut + 1, ..p.clone() },
                        Piece { end: zs, ..p },
                    ],
                }
            })
            .collect();
    }
    Ok(pieces)
}

/// `d(x, y, C)` computed from the reduced word of `x` chosen by
/// [`AffineWeyl::reduced_word`].
pub fn d_dim(aw: &AffineWeyl, x: AffineElt, y: AffineElt, o: Orientation) -> Option<u32> {
    let word = aw.reduced_word(x);
    fold_all(aw, &word, o, FoldMode::MaxDim)
        .expect("reduced word")
        .dim(y)
}

/// Exact number of `F_q`-points of the piece of `I a_x` landing on `a_y`.
pub fn point_count(aw: &AffineWeyl, x: AffineElt, y: AffineElt, o: Orientation) -> QPoly {
    let word = aw.reduced_word(x);
    fold_all(aw, &word, o, FoldMode::PointCount)
        .expect("reduced word")
        .count(y)
        .expect("point-count mode")
}
