//! Dimensions of affine Deligne-Lusztig varieties `X_x(ε^ν)` in the affine
//! flag manifold, and the predictors they are compared against.
//!
//! For every Borel `B_w = w B w^{-1}` containing the torus,
//!
//! ```text
//! dim X_x(ε^ν) = max_w d(x, ε^{wν}, B_w) - <ρ, ν + ν_dom>
//! ```
//!
//! and the variety is empty exactly when every `d(x, ε^{wν}, B_w)` is empty.

use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineElt, AffineWeyl};
use crate::folding::{fold_all, FoldMode, FoldTable, Orientation};
use crate::rootsys::{CartanType, Coweight, WeylElt};
use crate::{Error, Result};

/// Fold tables of one element toward every chamber at infinity.
#[derive(Clone, Debug)]
pub struct FlagFolding<'a> {
    aw: &'a AffineWeyl,
    x: AffineElt,
    len: usize,
    /// Indexed by the chamber's Weyl group index.
    tables: Vec<FoldTable>,
}

impl<'a> FlagFolding<'a> {
    pub fn new(aw: &'a AffineWeyl, x: AffineElt) -> FlagFolding<'a> {
        let word = aw.reduced_word(x);
        FlagFolding::from_word(aw, &word).expect("reduced word")
    }

    /// Folds along a caller-supplied reduced word.
    pub fn from_word(aw: &'a AffineWeyl, word: &[u8]) -> Result<FlagFolding<'a>> {
        let tables = Orientation::all(aw.root_system())
            .into_iter()
            .map(|o| fold_all(aw, word, o, FoldMode::MaxDim))
            .collect::<Result<Vec<_>>>()?;
        Ok(FlagFolding { aw, x: aw.eval_word(word), len: word.len(), tables })
    }

    pub fn element(&self) -> AffineElt {
        self.x
    }

    pub fn table(&self, o: Orientation) -> &FoldTable {
        &self.tables[o.chamber.index()]
    }

    /// `d(x, y, o)`.
    pub fn d(&self, y: AffineElt, o: Orientation) -> Option<u32> {
        self.table(o).dim(y)
    }

    /// `dim X_x(ε^ν)`, `None` when the variety is empty.
    pub fn dim(&self, nu: Coweight) -> Result<Option<u32>> {
        let rs = self.aw.root_system();
        let (nu_dom, _) = rs.dominant_rep(nu);
        let twice = rs.two_rho_pairing(nu + nu_dom);
        if twice % 2 != 0 {
            return Err(Error::Invariant(format!(
                "<rho, nu + nu_dom> is not an integer for nu = {nu:?}"
            )));
        }
        let best = rs
            .weyl_elements()
            .filter_map(|w| {
                let y = self.aw.translation(rs.act(w, nu));
                self.d(y, Orientation::for_borel(rs, w))
            })
            .max();
        let Some(best) = best else {
            return Ok(None);
        };
        let dim = i64::from(best) - twice / 2;
        if dim < 0 || dim > self.len as i64 {
            return Err(Error::Invariant(format!(
                "dimension {dim} outside [0, {}] for x = {:?}, nu = {nu:?}",
                self.len, self.x
            )));
        }
        Ok(Some(dim as u32))
    }

    /// Largest `d(x, 1, o)` over all chambers; equals `dim X_x(1)`.
    pub fn max_d_at_identity(&self) -> Option<u32> {
        self.tables.iter().filter_map(|t| t.dim(AffineElt::IDENTITY)).max()
    }

    /// Shade of `x` in the partial folding picture for `w B^- w^{-1}`.
    pub fn partial_fold_class(&self, w: WeylElt) -> PartialFoldClass {
        let Some(best) = self.max_d_at_identity() else {
            return PartialFoldClass::White;
        };
        match self.d(AffineElt::IDENTITY, Orientation::for_opposite_borel(w)) {
            None => PartialFoldClass::Light,
            Some(d) if d < best => PartialFoldClass::Medium,
            Some(_) => PartialFoldClass::Dark,
        }
    }

    /// Row comparing `X_x(ε^ν)` with `X_x(1)`.
    pub fn compare_b(&self, nu: Coweight) -> Result<CompareBRow> {
        let rs = self.aw.root_system();
        let dim_b = self.dim(nu)?;
        let dim_1 = self.dim(Coweight::ZERO)?;
        let len_b = self.aw.length(self.aw.translation(nu));
        let len_b_dom = self.aw.length(self.aw.translation(rs.dominant_rep(nu).0));
        let conjecture_match = match (dim_b, dim_1) {
            (None, None) => None,
            (Some(b), Some(one)) => Some(2 * b as usize + len_b == 2 * one as usize),
            _ => Some(false),
        };
        Ok(CompareBRow {
            x: self.x,
            len: self.len,
            nu,
            shrunken: self.aw.in_shrunken(self.x),
            nonempty_b: dim_b.is_some(),
            dim_b,
            nonempty_1: dim_1.is_some(),
            dim_1,
            len_b,
            len_b_dom,
            conjecture_match,
        })
    }
}

/// `dim X_x(ε^ν)`.
pub fn dim_flag(aw: &AffineWeyl, x: AffineElt, nu: Coweight) -> Result<Option<u32>> {
    FlagFolding::new(aw, x).dim(nu)
}

/// The prediction from conjugating the finite part of `x` into the chamber
/// containing its alcove.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberPrediction {
    /// `x` lies in the shrunken Weyl chambers.
    pub applicable: bool,
    /// `η_2^{-1} η_1 η_2` involves every simple reflection.
    pub nonempty: bool,
    /// `(ℓ(x) + ℓ(η_2^{-1} η_1 η_2)) / 2` when predicted nonempty.
    pub dim: Option<u32>,
}

pub fn chamber_predict(aw: &AffineWeyl, x: AffineElt) -> Result<ChamberPrediction> {
    let rs = aw.root_system();
    let e = aw.chamber_conjugate(x);
    let nonempty = rs.support_full(e);
    let dim = if nonempty {
        let total = aw.length(x) + rs.weyl_length(e);
        if total % 2 != 0 {
            return Err(Error::Invariant(format!(
                "odd length sum {total} in the predicted dimension for {x:?}"
            )));
        }
        Some((total / 2) as u32)
    } else {
        None
    };
    Ok(ChamberPrediction { applicable: aw.in_shrunken(x), nonempty, dim })
}

/// Power bound `ord(η_1(x)) · (ℓ(x) + 2)` used by [`lau_nonempty`].
pub fn lau_bound(aw: &AffineWeyl, x: AffineElt) -> usize {
    aw.root_system().weyl_order_of(x.fin) * (aw.length(x) + 2)
}

/// Whether some `x^n` with `1 <= n <= n_max` has `ℓ(x^n) < ℓ(x) - 1`.
pub fn lau_scan(aw: &AffineWeyl, x: AffineElt, n_max: usize) -> bool {
    let len = aw.length(x);
    aw.power_lengths(x, n_max).into_iter().any(|l| l + 1 < len)
}

/// Non-emptiness of `X_x(1)` for `SL_3` read off from the lengths of the
/// powers of `x`. Defined for type `A_2` and `ℓ(x) > 1` only.
pub fn lau_nonempty(aw: &AffineWeyl, x: AffineElt) -> Result<bool> {
    let rs = aw.root_system();
    if rs.kind() != CartanType::A || rs.rank() != 2 {
        return Err(Error::Domain(format!(
            "power-length criterion is defined for A2, not {}",
            rs.label()
        )));
    }
    if aw.length(x) <= 1 {
        return Err(Error::Domain("power-length criterion needs length > 1".into()));
    }
    Ok(lau_scan(aw, x, lau_bound(aw, x)))
}

/// Comparison of `X_x(ε^ν)` against `X_x(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareBRow {
    pub x: AffineElt,
    pub len: usize,
    pub nu: Coweight,
    pub shrunken: bool,
    pub nonempty_b: bool,
    pub dim_b: Option<u32>,
    pub nonempty_1: bool,
    pub dim_1: Option<u32>,
    /// `ℓ(t_ν)`.
    pub len_b: usize,
    /// `ℓ(t_{ν_dom})`, always equal to `len_b`.
    pub len_b_dom: usize,
    /// Whether non-emptiness agrees and `dim_b = dim_1 - len_b / 2`;
    /// `None` when both varieties are empty.
    pub conjecture_match: Option<bool>,
}

pub fn compare_b(aw: &AffineWeyl, x: AffineElt, nu: Coweight) -> Result<CompareBRow> {
    FlagFolding::new(aw, x).compare_b(nu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartialFoldClass {
    /// `X_x(1)` is empty.
    White,
    /// Nonempty, but `d(x, 1, w B^- w^{-1})` is empty.
    Light,
    /// `d(x, 1, w B^- w^{-1})` is not the largest over all chambers.
    Medium,
    /// `d(x, 1, w B^- w^{-1})` attains `dim X_x(1)`.
    Dark,
}

pub fn partial_fold_class(aw: &AffineWeyl, x: AffineElt, w: WeylElt) -> PartialFoldClass {
    FlagFolding::new(aw, x).partial_fold_class(w)
}

/// Everything known about one `(x, ν)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdlvRecord {
    pub x: AffineElt,
    pub word: Vec<u8>,
    pub len: usize,
    pub nu: Coweight,
    pub chamber: WeylElt,
    pub nonempty: bool,
    pub dim: Option<u32>,
    pub prediction: ChamberPrediction,
    /// Present for `A_2`, `ν = 0` and `ℓ(x) > 1`.
    pub lau_nonempty: Option<bool>,
}

impl AdlvRecord {
    pub fn compute(aw: &AffineWeyl, word: &[u8], nu: Coweight) -> Result<AdlvRecord> {
        let folding = FlagFolding::from_word(aw, word)?;
        let x = folding.element();
        let dim = folding.dim(nu)?;
        let rs = aw.root_system();
        let lau = (rs.kind() == CartanType::A && rs.rank() == 2 && nu.is_zero() && word.len() > 1)
            .then(|| lau_nonempty(aw, x))
            .transpose()?;
        Ok(AdlvRecord {
            x,
            word: word.to_vec(),
            len: word.len(),
            nu,
            chamber: aw.eta2(x),
            nonempty: dim.is_some(),
            dim,
            prediction: chamber_predict(aw, x)?,
            lau_nonempty: lau,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> AffineWeyl {
        AffineWeyl::from_label(label).unwrap()
    }

    #[test]
    fn identity_and_a1() {
        let g = group("A1");
        assert_eq!(dim_flag(&g, AffineElt::IDENTITY, Coweight::ZERO).unwrap(), Some(0));
        let s0 = g.generator(0);
        assert_eq!(dim_flag(&g, s0, Coweight::ZERO).unwrap(), Some(1));
        let p = chamber_predict(&g, s0).unwrap();
        assert_eq!(p, ChamberPrediction { applicable: true, nonempty: true, dim: Some(1) });
    }

    #[test]
    fn a1_translation_is_compatible_with_its_newton_point() {
        let g = group("A1");
        let a = Coweight::new(&[1]);
        let t = g.translation(a);
        // X_{t_a}(ε^{a}) contains the base point; both signs agree.
        let d = dim_flag(&g, t, a).unwrap();
        assert_eq!(d, dim_flag(&g, t, -a).unwrap());
        assert!(d.is_some());
    }

    #[test]
    fn deep_dominant_translation_is_predicted_empty() {
        let g = group("A2");
        let x = g.translation(Coweight::new(&[3, 3]));
        let p = chamber_predict(&g, x).unwrap();
        assert!(p.applicable);
        assert!(!p.nonempty);
        assert_eq!(p.dim, None);
        assert_eq!(dim_flag(&g, x, Coweight::ZERO).unwrap(), None);
    }

    #[test]
    fn orbit_invariance_small() {
        let g = group("A2");
        let rs = g.root_system();
        for (x, _) in g.enumerate(6) {
            let f = FlagFolding::new(&g, x);
            for a in -1..=1 {
                for b in -1..=1 {
                    let nu = Coweight::new(&[a, b]);
                    let d = f.dim(nu).unwrap();
                    for u in rs.weyl_elements() {
                        assert_eq!(f.dim(rs.act(u, nu)).unwrap(), d, "x={x:?} nu={nu:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn chamber_prediction_small() {
        for label in ["A2", "C2"] {
            let g = group(label);
            for (x, _) in g.enumerate(9) {
                let p = chamber_predict(&g, x).unwrap();
                if p.applicable {
                    assert_eq!(dim_flag(&g, x, Coweight::ZERO).unwrap(), p.dim, "{label} {x:?}");
                }
            }
        }
    }

    #[test]
    fn lau_domain_and_examples() {
        let c2 = group("C2");
        assert!(matches!(lau_nonempty(&c2, c2.generator(0)), Err(Error::Domain(_))));
        let g = group("A2");
        assert!(matches!(lau_nonempty(&g, g.generator(1)), Err(Error::Domain(_))));
        let t = g.translation(Coweight::new(&[1, 1]));
        assert!(!lau_nonempty(&g, t).unwrap());
        let w0 = g.finite(g.root_system().longest_element());
        assert!(lau_nonempty(&g, w0).unwrap());
    }

    #[test]
    fn lau_bound_matches_unbounded_scan() {
        let g = group("A2");
        for (x, _) in g.enumerate(10).into_iter().filter(|(_, w)| w.len() > 1) {
            assert_eq!(lau_nonempty(&g, x).unwrap(), lau_scan(&g, x, 300), "{x:?}");
        }
    }

    #[test]
    fn partial_fold_classes() {
        let g = group("A2");
        let rs = g.root_system();
        for w in rs.weyl_elements() {
            assert_eq!(partial_fold_class(&g, AffineElt::IDENTITY, w), PartialFoldClass::Dark);
        }
        let deep = g.translation(Coweight::new(&[3, 3]));
        for w in rs.weyl_elements() {
            assert_eq!(partial_fold_class(&g, deep, w), PartialFoldClass::White);
        }
    }

    #[test]
    fn compare_b_trivial_for_zero() {
        let g = group("C2");
        for (x, _) in g.enumerate(5) {
            let row = compare_b(&g, x, Coweight::ZERO).unwrap();
            assert_eq!(row.len_b, 0);
            assert_ne!(row.conjecture_match, Some(false));
        }
    }

    #[test]
    fn record_fields() {
        let g = group("A2");
        let word = vec![0, 1, 2, 0];
        let r = AdlvRecord::compute(&g, &word, Coweight::ZERO).unwrap();
        assert_eq!(r.len, 4);
        assert_eq!(r.nonempty, r.dim.is_some());
        assert!(r.lau_nonempty.is_some());
        let r = AdlvRecord::compute(&g, &word, Coweight::new(&[1, 1])).unwrap();
        assert!(r.lau_nonempty.is_none());
        assert!(AdlvRecord::compute(&g, &[1, 1], Coweight::ZERO).is_err());
    }
}
