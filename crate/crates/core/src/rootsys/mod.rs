//! Root data for the supported split simply-connected types.
//!
//! Roots live in the basis of simple roots, coweights in the basis of simple
//! coroots, and every pairing goes through the Cartan matrix
//! `cartan[i][j] = <alpha_i, alpha_j^vee>`. Nothing here uses floating point.

mod quotient;

pub use quotient::LatticeQuotient;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest rank handled by the fixed-size coordinate arrays.
pub const MAX_RANK: usize = 4;

type Vector = [i32; MAX_RANK];
type Matrix = [[i32; MAX_RANK]; MAX_RANK];

/// Element of `X_*(A) = Q^vee`, written in the basis of simple coroots.
///
/// Coordinates beyond the rank of the ambient system are always zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coweight(pub [i32; MAX_RANK]);

impl Coweight {
    pub const ZERO: Coweight = Coweight([0; MAX_RANK]);

    /// Builds a coweight from up to `MAX_RANK` leading coordinates.
    pub fn new(coords: &[i32]) -> Coweight {
        assert!(coords.len() <= MAX_RANK, "too many coordinates");
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Coweight(c)
    }

    /// Unit vector `alpha_i^vee`.
    pub fn simple_coroot(i: usize) -> Coweight {
        let mut c = [0; MAX_RANK];
        c[i] = 1;
        Coweight(c)
    }

    pub fn coords(&self, rank: usize) -> &[i32] {
        &self.0[..rank]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl Add for Coweight {
    type Output = Coweight;
    fn add(self, o: Coweight) -> Coweight {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(o.0) {
            *a += b;
        }
        Coweight(c)
    }
}

impl Sub for Coweight {
    type Output = Coweight;
    fn sub(self, o: Coweight) -> Coweight {
        self + (-o)
    }
}

impl Neg for Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.map(|c| -c))
    }
}

impl Mul<Coweight> for i32 {
    type Output = Coweight;
    fn mul(self, c: Coweight) -> Coweight {
        Coweight(c.0.map(|x| self * x))
    }
}

/// Index into the table of roots of a [`RootSystem`]: positive roots come
/// first, the negative of root `r` sits at `r + n_positive`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

/// Index into the enumerated finite Weyl group of a [`RootSystem`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElt(pub u16);

impl WeylElt {
    pub const IDENTITY: WeylElt = WeylElt(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Cartan type of an irreducible reduced root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::G => "G",
        };
        f.write_str(s)
    }
}

struct WeylData {
    matrix: Matrix,
    word: Vec<u8>,
    root_perm: Vec<u16>,
}

/// Immutable tables for one root system: roots, coroots, pairings and the
/// finite Weyl group with a multiplication table.
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Matrix,
    /// All roots (positive then negative), simple-root coordinates.
    roots: Vec<Vector>,
    /// Matching coroots in simple-coroot coordinates.
    coroots: Vec<Coweight>,
    /// `pair_rows[r][j] = <root r, alpha_j^vee>`.
    pair_rows: Vec<Vector>,
    n_pos: usize,
    root_lookup: HashMap<Vector, usize>,
    highest: RootId,
    weyl: Vec<WeylData>,
    weyl_lookup: HashMap<Matrix, u16>,
    mult: Vec<u16>,
    inverse: Vec<u16>,
    simple_refl: Vec<WeylElt>,
    chamber_lookup: HashMap<u64, u16>,
    longest: WeylElt,
    fundamental: Vec<Vec<BigRational>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.label())
    }
}

fn cartan_matrix(kind: CartanType, rank: usize) -> Result<Matrix> {
    let supported = match kind {
        CartanType::A => (1..=4).contains(&rank),
        CartanType::B => (2..=3).contains(&rank),
        CartanType::C => (2..=4).contains(&rank),
        CartanType::D => rank == 4,
        CartanType::G => rank == 2,
    };
    if !supported {
        return Err(Error::UnsupportedType(format!("{kind}{rank}")));
    }
    let mut a = [[0; MAX_RANK]; MAX_RANK];
    for (i, row) in a.iter_mut().enumerate().take(rank) {
        row[i] = 2;
    }
    match kind {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 0..rank - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            // Last node: B has alpha_n short, C has alpha_n long.
            if kind == CartanType::B {
                a[rank - 2][rank - 1] = -2;
            } else if kind == CartanType::C {
                a[rank - 1][rank - 2] = -2;
            }
        }
        CartanType::D => {
            // Bourbaki labelling, node 1 (0-based) is the branch point.
            for j in [0, 2, 3] {
                a[1][j] = -1;
                a[j][1] = -1;
            }
        }
        CartanType::G => {
            // alpha_1 short, alpha_2 long.
            a[0][1] = -1;
            a[1][0] = -3;
        }
    }
    Ok(a)
}

fn mat_mul(a: &Matrix, b: &Matrix, n: usize) -> Matrix {
    let mut c = [[0; MAX_RANK]; MAX_RANK];
    for i in 0..n {
        for j in 0..n {
            c[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn mat_vec(a: &Matrix, v: &Vector, n: usize) -> Vector {
    let mut out = [0; MAX_RANK];
    for i in 0..n {
        out[i] = (0..n).map(|k| a[i][k] * v[k]).sum();
    }
    out
}

fn identity(n: usize) -> Matrix {
    let mut m = [[0; MAX_RANK]; MAX_RANK];
    for (i, row) in m.iter_mut().enumerate().take(n) {
        row[i] = 1;
    }
    m
}

impl RootSystem {
    /// Builds the tables for `kind` and `rank`.
    pub fn new(kind: CartanType, rank: usize) -> Result<RootSystem> {
        let cartan = cartan_matrix(kind, rank)?;
        let n = rank;

        // Positive roots with their coroots, closed under simple reflections.
        let reflect_root = |b: &Vector, i: usize| -> Vector {
            let p: i32 = (0..n).map(|j| b[j] * cartan[j][i]).sum();
            let mut out = *b;
            out[i] -= p;
            out
        };
        let reflect_coweight = |c: &Vector, i: usize| -> Vector {
            let p: i32 = (0..n).map(|j| cartan[i][j] * c[j]).sum();
            let mut out = *c;
            out[i] -= p;
            out
        };
        let mut pos: Vec<(Vector, Vector)> = Vec::new();
        let mut seen: HashMap<Vector, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = [0; MAX_RANK];
            e[i] = 1;
            seen.insert(e, pos.len());
            pos.push((e, e));
            queue.push_back(i);
        }
        while let Some(k) = queue.pop_front() {
            let (root, coroot) = pos[k];
            for i in 0..n {
                let r = reflect_root(&root, i);
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && !seen.contains_key(&r) {
                    seen.insert(r, pos.len());
                    pos.push((r, reflect_coweight(&coroot, i)));
                    queue.push_back(pos.len() - 1);
                }
            }
        }
        // Order positive roots by height, then lexicographically.
        pos.sort_by_key(|(r, _)| (r.iter().sum::<i32>(), std::cmp::Reverse(*r)));
        let n_pos = pos.len();
        let mut roots = Vec::with_capacity(2 * n_pos);
        let mut coroots = Vec::with_capacity(2 * n_pos);
        for (r, c) in &pos {
            roots.push(*r);
            coroots.push(Coweight(*c));
        }
        for (r, c) in &pos {
            roots.push(r.map(|x| -x));
            coroots.push(-Coweight(*c));
        }
        let pair_rows: Vec<Vector> = roots
            .iter()
            .map(|r| {
                let mut row = [0; MAX_RANK];
                for (j, slot) in row.iter_mut().enumerate().take(n) {
                    *slot = (0..n).map(|i| r[i] * cartan[i][j]).sum();
                }
                row
            })
            .collect();
        let root_lookup: HashMap<Vector, usize> =
            roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let highest = RootId(n_pos - 1);

        // Finite Weyl group by breadth-first closure under right
        // multiplication with the simple reflections acting on coweights.
        let gens: Vec<Matrix> = (0..n)
            .map(|i| {
                let mut m = identity(n);
                for j in 0..n {
                    m[i][j] -= cartan[i][j];
                }
                m
            })
            .collect();
        let mut weyl: Vec<(Matrix, Vec<u8>)> = vec![(identity(n), Vec::new())];
        let mut weyl_lookup: HashMap<Matrix, u16> = HashMap::new();
        weyl_lookup.insert(identity(n), 0);
        let mut k = 0;
        while k < weyl.len() {
            let (m, word) = weyl[k].clone();
            for (i, g) in gens.iter().enumerate() {
                let p = mat_mul(&m, g, n);
                if !weyl_lookup.contains_key(&p) {
                    let mut w = word.clone();
                    w.push(i as u8);
                    weyl_lookup.insert(p, weyl.len() as u16);
                    weyl.push((p, w));
                }
            }
            k += 1;
        }
        let order = weyl.len();
        let mut mult = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let p = mat_mul(&weyl[a].0, &weyl[b].0, n);
                mult[a * order + b] = weyl_lookup[&p];
            }
        }
        let inverse: Vec<u16> = (0..order)
            .map(|a| (0..order).find(|&b| mult[a * order + b] == 0).unwrap() as u16)
            .collect();

        // Root permutation of each element, computed along its word.
        let refl_perm: Vec<Vec<u16>> = (0..n)
            .map(|i| roots.iter().map(|r| root_lookup[&reflect_root(r, i)] as u16).collect())
            .collect();
        let weyl_data: Vec<WeylData> = weyl
            .into_iter()
            .map(|(matrix, word)| {
                let mut perm: Vec<u16> = (0..roots.len() as u16).collect();
                // w = s_{a1} ... s_{ak} acts on a root by applying s_{ak} first.
                for &i in word.iter().rev() {
                    perm = perm.iter().map(|&r| refl_perm[i as usize][r as usize]).collect();
                }
                WeylData { matrix, word, root_perm: perm }
            })
            .collect();

        let simple_refl: Vec<WeylElt> = gens.iter().map(|g| WeylElt(weyl_lookup[g])).collect();
        let longest = WeylElt(
            (0..order).max_by_key(|&w| weyl_data[w].word.len()).unwrap() as u16,
        );

        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            roots,
            coroots,
            pair_rows,
            n_pos,
            root_lookup,
            highest,
            weyl: weyl_data,
            weyl_lookup,
            mult,
            inverse,
            simple_refl,
            chamber_lookup: HashMap::new(),
            longest,
            fundamental: Vec::new(),
        };
        rs.chamber_lookup = (0..order)
            .map(|u| (rs.chamber_mask(WeylElt(u as u16)), u as u16))
            .collect();
        rs.fundamental = rs.compute_fundamental_coweights();
        Ok(rs)
    }

    /// Parses labels such as `"A2"`, `"G2"` or `"C3"`.
    pub fn from_label(label: &str) -> Result<RootSystem> {
        let label = label.trim();
        let mut chars = label.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanType::A,
            Some('B') => CartanType::B,
            Some('C') => CartanType::C,
            Some('D') => CartanType::D,
            Some('G') => CartanType::G,
            _ => return Err(Error::UnsupportedType(label.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType(label.to_string()))?;
        RootSystem::new(kind, rank)
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    /// `cartan()[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[i][j]
    }

    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> {
        (0..self.n_pos).map(RootId)
    }

    pub fn all_roots(&self) -> impl Iterator<Item = RootId> {
        (0..2 * self.n_pos).map(RootId)
    }

    pub fn simple_root(&self, i: usize) -> RootId {
        let mut e = [0; MAX_RANK];
        e[i] = 1;
        RootId(self.root_lookup[&e])
    }

    pub fn highest_root(&self) -> RootId {
        self.highest
    }

    /// Coordinates of a root in the simple-root basis.
    pub fn root(&self, r: RootId) -> &[i32] {
        &self.roots[r.0][..self.rank]
    }

    pub fn coroot(&self, r: RootId) -> Coweight {
        self.coroots[r.0]
    }

    pub fn is_positive(&self, r: RootId) -> bool {
        r.0 < self.n_pos
    }

    pub fn negate(&self, r: RootId) -> RootId {
        if r.0 < self.n_pos {
            RootId(r.0 + self.n_pos)
        } else {
            RootId(r.0 - self.n_pos)
        }
    }

    /// Looks up a root from its simple-root coordinates.
    pub fn find_root(&self, coords: &[i32]) -> Option<RootId> {
        let mut v = [0; MAX_RANK];
        v[..coords.len()].copy_from_slice(coords);
        self.root_lookup.get(&v).map(|&i| RootId(i))
    }

    /// `<root, cw>`.
    pub fn pairing(&self, r: RootId, cw: Coweight) -> i32 {
        let row = &self.pair_rows[r.0];
        (0..self.rank).map(|j| row[j] * cw.0[j]).sum()
    }

    /// Pairing of a root with a rational coweight.
    pub fn pairing_rational(&self, r: RootId, v: &[BigRational]) -> BigRational {
        let row = &self.pair_rows[r.0];
        (0..self.rank).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::from_integer(BigInt::from(row[j])) * &v[j]
        })
    }

    /// `<rho, cw>` as half the sum of the pairings with positive roots.
    pub fn rho_pairing(&self, cw: Coweight) -> BigRational {
        let twice: i64 = self.positive_roots().map(|r| self.pairing(r, cw) as i64).sum();
        BigRational::new(BigInt::from(twice), BigInt::from(2))
    }

    /// `<2 rho, cw>`, always an integer.
    pub fn two_rho_pairing(&self, cw: Coweight) -> i64 {
        self.positive_roots().map(|r| self.pairing(r, cw) as i64).sum()
    }

    /// `<rho, v>` for a rational coweight.
    pub fn rho_pairing_rational(&self, v: &[BigRational]) -> BigRational {
        let twice = self
            .positive_roots()
            .fold(BigRational::zero(), |acc, r| acc + self.pairing_rational(r, v));
        twice / BigRational::from_integer(BigInt::from(2))
    }

    pub fn is_dominant(&self, cw: Coweight) -> bool {
        (0..self.rank).all(|i| self.pairing(self.simple_root(i), cw) >= 0)
    }

    /// The dominant element of the orbit of `cw` together with a Weyl
    /// element `w` satisfying `w(cw) = dominant`.
    pub fn dominant_rep(&self, cw: Coweight) -> (Coweight, WeylElt) {
        let mut c = cw;
        let mut w = WeylElt::IDENTITY;
        'outer: loop {
            for i in 0..self.rank {
                if self.pairing(self.simple_root(i), c) < 0 {
                    let s = self.simple_refl[i];
                    c = self.act(s, c);
                    w = self.mul(s, w);
                    continue 'outer;
                }
            }
            return (c, w);
        }
    }

    /// `nu <= mu`: `mu - nu` is a non-negative integral combination of
    /// simple coroots.
    pub fn leq_dominance(&self, nu: Coweight, mu: Coweight) -> bool {
        (mu - nu).coords(self.rank).iter().all(|&c| c >= 0)
    }

    /// Closure of `{cw}` under the simple reflections.
    pub fn weyl_orbit(&self, cw: Coweight) -> BTreeSet<Coweight> {
        let mut orbit = BTreeSet::new();
        orbit.insert(cw);
        let mut queue = vec![cw];
        while let Some(c) = queue.pop() {
            for i in 0..self.rank {
                let d = self.act(self.simple_refl[i], c);
                if orbit.insert(d) {
                    queue.push(d);
                }
            }
        }
        orbit
    }

    // ---- finite Weyl group ----

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn weyl_elements(&self) -> impl Iterator<Item = WeylElt> {
        (0..self.weyl.len() as u16).map(WeylElt)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        self.simple_refl[i]
    }

    pub fn longest_element(&self) -> WeylElt {
        self.longest
    }

    pub fn mul(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        WeylElt(self.mult[a.index() * self.weyl.len() + b.index()])
    }

    pub fn inv(&self, a: WeylElt) -> WeylElt {
        WeylElt(self.inverse[a.index()])
    }

    /// Stored reduced word. Letter `i` is the reflection in simple root `i`
    /// (0-based); the affine group shifts these letters up by one.
    pub fn weyl_word(&self, w: WeylElt) -> &[u8] {
        &self.weyl[w.index()].word
    }

    pub fn weyl_length(&self, w: WeylElt) -> usize {
        self.weyl[w.index()].word.len()
    }

    /// Action matrix on simple-coroot coordinates.
    pub fn weyl_matrix(&self, w: WeylElt) -> Vec<Vec<i32>> {
        let m = &self.weyl[w.index()].matrix;
        (0..self.rank).map(|i| m[i][..self.rank].to_vec()).collect()
    }

    /// Looks up the element acting by `matrix` on coweights.
    pub fn weyl_from_matrix(&self, matrix: &[Vec<i32>]) -> Option<WeylElt> {
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        for (i, row) in matrix.iter().enumerate() {
            m[i][..row.len()].copy_from_slice(row);
        }
        self.weyl_lookup.get(&m).map(|&w| WeylElt(w))
    }

    pub fn act(&self, w: WeylElt, cw: Coweight) -> Coweight {
        Coweight(mat_vec(&self.weyl[w.index()].matrix, &cw.0, self.rank))
    }

    pub fn act_rational(&self, w: WeylElt, v: &[BigRational]) -> Vec<BigRational> {
        let m = &self.weyl[w.index()].matrix;
        (0..self.rank)
            .map(|i| {
                (0..self.rank).fold(BigRational::zero(), |acc, k| {
                    acc + BigRational::from_integer(BigInt::from(m[i][k])) * &v[k]
                })
            })
            .collect()
    }

    pub fn act_root(&self, w: WeylElt, r: RootId) -> RootId {
        RootId(self.weyl[w.index()].root_perm[r.0] as usize)
    }

    /// Support of `w` is all of `S`: no proper parabolic subgroup contains it.
    pub fn support_full(&self, w: WeylElt) -> bool {
        let mut seen = [false; MAX_RANK];
        for &i in self.weyl_word(w) {
            seen[i as usize] = true;
        }
        seen[..self.rank].iter().all(|&s| s)
    }

    /// Order of `w` in `W`.
    pub fn weyl_order_of(&self, w: WeylElt) -> usize {
        let mut p = w;
        let mut k = 1;
        while p != WeylElt::IDENTITY {
            p = self.mul(p, w);
            k += 1;
        }
        k
    }

    /// Reflection `s_beta` for a root.
    pub fn reflection(&self, r: RootId) -> WeylElt {
        let n = self.rank;
        let mut m = identity(n);
        let cor = self.coroots[r.0].0;
        let row = &self.pair_rows[r.0];
        // s(c) = c - <beta, c> beta^vee
        for i in 0..n {
            for j in 0..n {
                m[i][j] -= cor[i] * row[j];
            }
        }
        WeylElt(self.weyl_lookup[&m])
    }

    /// Bitmask of positive roots `alpha` with `u^{-1} alpha < 0`; these are
    /// the roots negative on the chamber `u(C_0)`.
    pub fn chamber_mask(&self, u: WeylElt) -> u64 {
        let uinv = self.inv(u);
        self.positive_roots()
            .filter(|&r| !self.is_positive(self.act_root(uinv, r)))
            .fold(0u64, |m, r| m | (1 << r.0))
    }

    /// Inverse of [`chamber_mask`](Self::chamber_mask).
    pub fn chamber_from_mask(&self, mask: u64) -> Option<WeylElt> {
        self.chamber_lookup.get(&mask).map(|&u| WeylElt(u))
    }

    // ---- rational data ----

    /// Fundamental coweights `varpi_j^vee` in simple-coroot coordinates.
    pub fn fundamental_coweight(&self, j: usize) -> &[BigRational] {
        &self.fundamental[j]
    }

    fn compute_fundamental_coweights(&self) -> Vec<Vec<BigRational>> {
        let n = self.rank;
        let q = |x: i32| BigRational::from_integer(BigInt::from(x));
        // Solve A c = e_j by Gauss-Jordan on [A | I].
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..n).map(|j| q(self.cartan[i][j])).collect();
                row.extend((0..n).map(|j| q((i == j) as i32)));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x = &*x / &p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in 0..2 * n {
                        let v = &m[col][k] * &f;
                        m[r][k] -= v;
                    }
                }
            }
        }
        (0..n).map(|j| (0..n).map(|i| m[i][n + j].clone()).collect()).collect()
    }

    /// Coefficients `m_j` of the highest root in the simple roots.
    pub fn highest_root_coefficients(&self) -> Vec<i32> {
        self.root(self.highest).to_vec()
    }

    /// Squared lengths `(alpha_i^vee, alpha_i^vee)` of the simple coroots for
    /// a W-invariant form, scaled to coprime integers.
    pub fn coroot_norms(&self) -> Vec<i64> {
        let n = self.rank;
        let mut c: Vec<Option<BigRational>> = vec![None; n];
        c[0] = Some(BigRational::one());
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for j in 0..n {
                    if i != j && self.cartan[i][j] != 0 && c[i].is_some() && c[j].is_none() {
                        // a_ij c_i = a_ji c_j
                        let ci = c[i].clone().unwrap();
                        let v = ci * BigRational::from_integer(BigInt::from(self.cartan[i][j]))
                            / BigRational::from_integer(BigInt::from(self.cartan[j][i]));
                        c[j] = Some(v);
                        changed = true;
                    }
                }
            }
        }
        let c: Vec<BigRational> = c.into_iter().map(|x| x.unwrap()).collect();
        let denom = c.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
        let ints: Vec<BigInt> = c.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        ints.iter()
            .map(|x| i64::try_from(x / &g).expect("small norms"))
            .collect()
    }

    /// Gram matrix `2 (alpha_i^vee, alpha_j^vee)` of a W-invariant form on
    /// coweights, integral.
    pub fn coweight_gram(&self) -> Vec<Vec<i64>> {
        let c = self.coroot_norms();
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| self.cartan[i][j] as i64 * c[i]).collect())
            .collect()
    }
}

/// Builds a root system from a type label and rank.
pub fn build_root_system(type_label: &str, rank: usize) -> Result<RootSystem> {
    RootSystem::from_label(&format!("{type_label}{rank}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn classical_counts() {
        let expected = [
            ("A1", 1, 2),
            ("A2", 3, 6),
            ("A3", 6, 24),
            ("A4", 10, 120),
            ("B2", 4, 8),
            ("B3", 9, 48),
            ("C2", 4, 8),
            ("C3", 9, 48),
            ("C4", 16, 384),
            ("D4", 12, 192),
            ("G2", 6, 12),
        ];
        for (label, npos, order) in expected {
            let r = rs(label);
            assert_eq!(r.n_positive(), npos, "{label}");
            assert_eq!(r.weyl_order(), order, "{label}");
            for i in 0..r.rank() {
                assert_eq!(r.cartan(i, i), 2);
            }
            for a in r.positive_roots() {
                assert!(r.root(a).iter().all(|&c| c >= 0));
                assert_eq!(r.pairing(a, r.coroot(a)), 2, "{label}");
            }
        }
    }

    #[test]
    fn unsupported_types_are_configuration_errors() {
        assert!(RootSystem::new(CartanType::D, 3).is_err());
        assert!(RootSystem::new(CartanType::G, 3).is_err());
        assert!(RootSystem::from_label("E8").is_err());
        assert!(RootSystem::from_label("A").is_err());
        assert!(build_root_system("C", 3).is_ok());
    }

    #[test]
    fn pairings() {
        let a2 = rs("A2");
        let a1 = a2.simple_root(0);
        assert_eq!(a2.pairing(a1, Coweight::simple_coroot(0)), 2);
        assert_eq!(a2.pairing(a1, Coweight::simple_coroot(1)), -1);
        let g2 = rs("G2");
        let th = g2.highest_root();
        assert_eq!(g2.root(th), &[3, 2]);
        assert_eq!(g2.pairing(th, g2.coroot(th)), 2);
    }

    #[test]
    fn rho_examples() {
        let a2 = rs("A2");
        let half = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(a2.rho_pairing(Coweight::new(&[1, 0])), half(1, 1));
        assert_eq!(a2.rho_pairing(Coweight::new(&[1, 1])), half(2, 1));
        assert_eq!(a2.rho_pairing(Coweight::ZERO), half(0, 1));
    }

    #[test]
    fn fundamental_coweights_are_dual() {
        for label in ["A3", "B3", "C4", "D4", "G2"] {
            let r = rs(label);
            for j in 0..r.rank() {
                for i in 0..r.rank() {
                    let p = r.pairing_rational(r.simple_root(i), r.fundamental_coweight(j));
                    let expected = BigRational::from_integer(((i == j) as i32).into());
                    assert_eq!(p, expected, "{label} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn dominant_rep_examples() {
        let a2 = rs("A2");
        let (d, w) = a2.dominant_rep(Coweight::new(&[1, 0]));
        assert_eq!(d, Coweight::new(&[1, 1]));
        assert_eq!(a2.act(w, Coweight::new(&[1, 0])), d);
        let (d, w) = a2.dominant_rep(Coweight::new(&[2, 1]));
        assert_eq!((d, w), (Coweight::new(&[2, 1]), WeylElt::IDENTITY));
    }

    #[test]
    fn dominant_rep_matches_orbit_scan_in_g2() {
        let g2 = rs("G2");
        for a in -3..=3 {
            for b in -3..=3 {
                let c = Coweight::new(&[a, b]);
                let orbit = g2.weyl_orbit(c);
                let dominant: Vec<_> = orbit.iter().filter(|&&x| g2.is_dominant(x)).collect();
                assert_eq!(dominant.len(), 1);
                assert_eq!(g2.dominant_rep(c).0, *dominant[0]);
            }
        }
    }

    #[test]
    fn leq_examples() {
        let a2 = rs("A2");
        let th = Coweight::new(&[1, 1]);
        assert!(a2.leq_dominance(th, th));
        assert!(a2.leq_dominance(Coweight::ZERO, th));
        assert!(!a2.leq_dominance(Coweight::new(&[1, 0]), Coweight::new(&[0, 1])));
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_orbit(Coweight::ZERO).len(), 1);
        assert_eq!(a2.weyl_orbit(Coweight::new(&[1, 1])).len(), 6);
        // C2, alpha_2^vee is a short coroot: orbit {+-e1, +-e2}.
        let c2 = rs("C2");
        assert_eq!(c2.weyl_orbit(Coweight::new(&[0, 1])).len(), 4);
    }

    #[test]
    fn weyl_words_are_consistent() {
        for label in ["A3", "C3", "G2"] {
            let r = rs(label);
            for w in r.weyl_elements() {
                let prod = r
                    .weyl_word(w)
                    .iter()
                    .fold(WeylElt::IDENTITY, |acc, &i| r.mul(acc, r.simple_reflection(i as usize)));
                assert_eq!(prod, w);
                // length = number of positive roots sent negative
                let inv = r.positive_roots().filter(|&a| !r.is_positive(r.act_root(w, a))).count();
                assert_eq!(inv, r.weyl_length(w));
            }
            assert_eq!(r.weyl_length(r.longest_element()), r.n_positive());
        }
    }

    #[test]
    fn reflection_of_highest_root() {
        let a1 = rs("A1");
        assert_eq!(a1.reflection(a1.highest_root()), a1.simple_reflection(0));
        let g2 = rs("G2");
        let s = g2.reflection(g2.highest_root());
        assert_eq!(g2.mul(s, s), WeylElt::IDENTITY);
        let th = g2.highest_root();
        assert_eq!(g2.act_root(s, th), g2.negate(th));
    }

    #[test]
    fn invariant_form_is_weyl_invariant() {
        for label in ["B3", "C3", "G2", "D4"] {
            let r = rs(label);
            let g = r.coweight_gram();
            let n = r.rank();
            let form = |a: Coweight, b: Coweight| -> i64 {
                (0..n).map(|i| (0..n).map(|j| a.0[i] as i64 * g[i][j] * b.0[j] as i64).sum::<i64>()).sum()
            };
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(g[i][j], g[j][i], "{label}");
                }
            }
            for w in r.weyl_elements() {
                for i in 0..n {
                    for j in 0..n {
                        let a = Coweight::simple_coroot(i);
                        let b = Coweight::simple_coroot(j);
                        assert_eq!(form(r.act(w, a), r.act(w, b)), form(a, b));
                    }
                }
            }
        }
    }
}
