//! The affine Weyl group `W ⋉ Q^vee` and the alcove geometry of the
//! standard apartment.
//!
//! An element `t_λ w` acts on the apartment by `v ↦ w(v) + λ`; its alcove is
//! the image of the base alcove `{0 < <α, v> < 1 for all α > 0}`. Generators
//! are `s_0 = t_{θ^vee} s_θ` and the finite simple reflections `s_1..s_r`;
//! right multiplication by `s_i` moves an alcove across its type-`i` wall.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::rootsys::{Coweight, RootId, RootSystem, WeylElt};

/// `t_λ w` with `λ = trans` and `w = fin`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineElt {
    pub trans: Coweight,
    pub fin: WeylElt,
}

impl AffineElt {
    pub const IDENTITY: AffineElt = AffineElt { trans: Coweight::ZERO, fin: WeylElt::IDENTITY };

    pub fn is_finite(&self) -> bool {
        self.trans.is_zero()
    }
}

/// An alcove with its exact barycenter and floor vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove {
    pub elt: AffineElt,
    /// Barycenter in simple-coroot coordinates.
    pub barycenter: Vec<BigRational>,
    /// `k_α` for each positive root, with `k_α < <α, barycenter> < k_α + 1`.
    pub floors: Vec<i32>,
}

/// Renders a generator word as a digit string, `""` for the identity.
pub fn word_string(word: &[u8]) -> String {
    word.iter().map(|&i| char::from(b'0' + i)).collect()
}

/// Parses a digit string produced by [`word_string`].
pub fn parse_word(s: &str) -> Option<Vec<u8>> {
    s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
}

/// The affine Weyl group of a root system.
#[derive(Clone, Debug)]
pub struct AffineWeyl {
    rs: Arc<RootSystem>,
    gens: Vec<AffineElt>,
    base_barycenter: Vec<BigRational>,
}

impl AffineWeyl {
    pub fn new(rs: Arc<RootSystem>) -> AffineWeyl {
        let theta = rs.highest_root();
        let mut gens = vec![AffineElt { trans: rs.coroot(theta), fin: rs.reflection(theta) }];
        gens.extend((0..rs.rank()).map(|i| AffineElt {
            trans: Coweight::ZERO,
            fin: rs.simple_reflection(i),
        }));
        // Vertices of the base alcove: 0 and varpi_j^vee / m_j.
        let m = rs.highest_root_coefficients();
        let n = rs.rank();
        let mut bary = vec![BigRational::zero(); n];
        for (j, &mj) in m.iter().enumerate() {
            let v = rs.fundamental_coweight(j);
            for (b, x) in bary.iter_mut().zip(v) {
                *b += x / BigRational::from_integer(BigInt::from(mj));
            }
        }
        let scale = BigRational::from_integer(BigInt::from(n as i64 + 1));
        for b in bary.iter_mut() {
            *b = &*b / &scale;
        }
        AffineWeyl { rs, gens, base_barycenter: bary }
    }

    pub fn from_label(label: &str) -> crate::Result<AffineWeyl> {
        Ok(AffineWeyl::new(Arc::new(RootSystem::from_label(label)?)))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Number of Coxeter generators, `rank + 1`.
    pub fn n_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn generator(&self, i: usize) -> AffineElt {
        self.gens[i]
    }

    pub fn translation(&self, nu: Coweight) -> AffineElt {
        AffineElt { trans: nu, fin: WeylElt::IDENTITY }
    }

    pub fn finite(&self, w: WeylElt) -> AffineElt {
        AffineElt { trans: Coweight::ZERO, fin: w }
    }

    /// `t_λ w · t_μ v = t_{λ + wμ} wv`.
    pub fn mul(&self, x: AffineElt, y: AffineElt) -> AffineElt {
        AffineElt {
            trans: x.trans + self.rs.act(x.fin, y.trans),
            fin: self.rs.mul(x.fin, y.fin),
        }
    }

    pub fn inv(&self, x: AffineElt) -> AffineElt {
        let winv = self.rs.inv(x.fin);
        AffineElt { trans: -self.rs.act(winv, x.trans), fin: winv }
    }

    pub fn pow(&self, x: AffineElt, n: usize) -> AffineElt {
        (0..n).fold(AffineElt::IDENTITY, |acc, _| self.mul(acc, x))
    }

    /// Iwahori-Matsumoto length of `t_λ w`.
    pub fn im_length(&self, trans: Coweight, fin: WeylElt) -> usize {
        let rs = &self.rs;
        let winv = rs.inv(fin);
        rs.positive_roots()
            .map(|a| {
                let shift = !rs.is_positive(rs.act_root(winv, a)) as i32;
                (rs.pairing(a, trans) - shift).unsigned_abs() as usize
            })
            .sum()
    }

    pub fn length(&self, x: AffineElt) -> usize {
        self.im_length(x.trans, x.fin)
    }

    /// Floor vector `k_α` of the alcove of `x`, indexed by positive roots.
    pub fn floors(&self, x: AffineElt) -> Vec<i32> {
        let rs = &self.rs;
        let winv = rs.inv(x.fin);
        rs.positive_roots()
            .map(|a| rs.pairing(a, x.trans) - !rs.is_positive(rs.act_root(winv, a)) as i32)
            .collect()
    }

    /// Exact barycenter of the alcove of `x`.
    pub fn barycenter(&self, x: AffineElt) -> Vec<BigRational> {
        let moved = self.rs.act_rational(x.fin, &self.base_barycenter);
        moved
            .into_iter()
            .zip(x.trans.coords(self.rank()))
            .map(|(b, &t)| b + BigRational::from_integer(BigInt::from(t)))
            .collect()
    }

    /// Vertices of the alcove of `x`, in simple-coroot coordinates.
    pub fn vertices(&self, x: AffineElt) -> Vec<Vec<BigRational>> {
        let n = self.rank();
        let m = self.rs.highest_root_coefficients();
        let mut verts = vec![vec![BigRational::zero(); n]];
        for (j, &mj) in m.iter().enumerate() {
            let d = BigRational::from_integer(BigInt::from(mj));
            verts.push(self.rs.fundamental_coweight(j).iter().map(|c| c / &d).collect());
        }
        verts
            .into_iter()
            .map(|v| {
                self.rs
                    .act_rational(x.fin, &v)
                    .into_iter()
                    .zip(x.trans.coords(n))
                    .map(|(c, &t)| c + BigRational::from_integer(BigInt::from(t)))
                    .collect()
            })
            .collect()
    }

    pub fn alcove(&self, x: AffineElt) -> Alcove {
        let barycenter = self.barycenter(x);
        let floors = self
            .rs
            .positive_roots()
            .map(|a| {
                let p = self.rs.pairing_rational(a, &barycenter);
                let f = p.floor().to_integer();
                i32::try_from(f).expect("small floor")
            })
            .collect();
        Alcove { elt: x, barycenter, floors }
    }

    /// Lexicographically smallest reduced word, built by repeatedly
    /// stripping the smallest left descent.
    pub fn reduced_word(&self, x: AffineElt) -> Vec<u8> {
        let mut word = Vec::new();
        let mut cur = x;
        let mut len = self.length(cur);
        while len > 0 {
            let (i, next) = (0..self.gens.len())
                .map(|i| (i, self.mul(self.gens[i], cur)))
                .find(|&(_, y)| self.length(y) < len)
                .expect("non-identity element has a left descent");
            word.push(i as u8);
            cur = next;
            len -= 1;
        }
        word
    }

    /// Product of the generators along `word`.
    pub fn eval_word(&self, word: &[u8]) -> AffineElt {
        word.iter()
            .fold(AffineElt::IDENTITY, |acc, &i| self.mul(acc, self.gens[i as usize]))
    }

    /// All reduced words of `x`, in lexicographic order.
    pub fn all_reduced_words(&self, x: AffineElt) -> Vec<Vec<u8>> {
        let len = self.length(x);
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.gens.len() {
            let y = self.mul(self.gens[i], x);
            if self.length(y) < len {
                for mut w in self.all_reduced_words(y) {
                    w.insert(0, i as u8);
                    out.push(w);
                }
            }
        }
        out
    }

    /// All elements of length at most `max_len`, sorted by length and then
    /// lexicographically by reduced word.
    pub fn enumerate(&self, max_len: usize) -> Vec<(AffineElt, Vec<u8>)> {
        let mut out = vec![(AffineElt::IDENTITY, Vec::new())];
        let mut layer = vec![AffineElt::IDENTITY];
        for len in 1..=max_len {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for &x in &layer {
                for g in &self.gens {
                    let y = self.mul(x, *g);
                    if self.length(y) == len && seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            let mut words: Vec<(Vec<u8>, AffineElt)> =
                next.iter().map(|&y| (self.reduced_word(y), y)).collect();
            words.sort();
            out.extend(words.into_iter().map(|(w, y)| (y, w)));
            layer = next;
        }
        out
    }

    /// Finite part `w` of `x = t_λ w`.
    pub fn eta1(&self, x: AffineElt) -> WeylElt {
        x.fin
    }

    /// The `u ∈ W` whose chamber `u(C_0)` contains the alcove of `x`.
    pub fn eta2(&self, x: AffineElt) -> WeylElt {
        let mask = self
            .floors(x)
            .iter()
            .enumerate()
            .filter(|(_, &k)| k < 0)
            .fold(0u64, |m, (i, _)| m | (1 << i));
        self.rs
            .chamber_from_mask(mask)
            .expect("alcove floors determine a chamber")
    }

    /// Alcove of `x` lies in the union of the shrunken Weyl chambers: for
    /// every positive root it is separated from the base alcove by
    /// `{α = 0}` or by `{α = 1}`.
    pub fn in_shrunken(&self, x: AffineElt) -> bool {
        self.floors(x).iter().all(|&k| k != 0)
    }

    /// `η_2(x)^{-1} η_1(x) η_2(x)`.
    pub fn chamber_conjugate(&self, x: AffineElt) -> WeylElt {
        let rs = &self.rs;
        let u = self.eta2(x);
        rs.mul(rs.mul(rs.inv(u), x.fin), u)
    }

    /// `ℓ(x), ℓ(x²), ..., ℓ(x^{n_max})`.
    pub fn power_lengths(&self, x: AffineElt, n_max: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(n_max);
        let mut p = AffineElt::IDENTITY;
        for _ in 0..n_max {
            p = self.mul(p, x);
            out.push(self.length(p));
        }
        out
    }

    /// Order of `x`, if finite (i.e. `x^{ord η_1(x)}` is the identity).
    pub fn order(&self, x: AffineElt) -> Option<usize> {
        let d = self.rs.weyl_order_of(x.fin);
        (self.pow(x, d) == AffineElt::IDENTITY).then_some(d)
    }

    /// Coefficients of the length generating function of `W̃` up to
    /// `max_len`, counted by enumeration.
    pub fn growth_series(&self, max_len: usize) -> Vec<usize> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (x, _) in self.enumerate(max_len) {
            *counts.entry(self.length(x)).or_default() += 1;
        }
        (0..=max_len).map(|l| counts.get(&l).copied().unwrap_or(0)).collect()
    }

    /// Root `β` and level `k` of the wall between the alcoves of `z` and
    /// `z s_i`, with `β` positive in the standard sense.
    pub fn wall(&self, z: AffineElt, i: usize) -> (RootId, i32) {
        let rs = &self.rs;
        let (root, level) = if i == 0 {
            let r = rs.act_root(z.fin, rs.highest_root());
            (r, rs.pairing(r, z.trans) + 1)
        } else {
            let r = rs.act_root(z.fin, rs.simple_root(i - 1));
            (r, rs.pairing(r, z.trans))
        };
        if rs.is_positive(root) {
            (root, level)
        } else {
            (rs.negate(root), -level)
        }
    }
}
