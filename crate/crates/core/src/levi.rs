//! Levi subgroups and the reduction of affine Grassmannian dimensions to
//! the basic case.
//!
//! A standard Levi `M` is given by a subset `J` of the simple roots.
//! Coweights are compared with the finer order `≤_M` (difference in the
//! non-negative span of the simple coroots indexed by `J`) and projected to
//! `Λ_M = X_*(A) / <α_j^vee : j ∈ J>`. Multiplicities of irreducible
//! `M^vee`-modules in restrictions of `G^vee`-modules come from Freudenthal's
//! recursion on the dual root system followed by peeling off highest weights.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rootsys::{Coweight, LatticeQuotient, RootId, RootSystem, WeylElt};
use crate::{Error, Result};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A standard Levi subgroup `M ⊇ A`.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    rs: Arc<RootSystem>,
    simple: Vec<usize>,
    in_m: Vec<bool>,
    m_positive: Vec<RootId>,
    n_roots: Vec<RootId>,
    weyl_m: Vec<WeylElt>,
    quotient: LatticeQuotient,
    /// Sum of the positive coroots of `M`, that is `2 ρ_M^vee`.
    two_rho_dual: Coweight,
    gram: Vec<Vec<i64>>,
}

impl LeviDatum {
    /// The Levi whose simple roots are `simple` (0-based indices).
    pub fn new(rs: Arc<RootSystem>, simple: &[usize]) -> Result<LeviDatum> {
        let n = rs.rank();
        let mut in_m = vec![false; n];
        for &j in simple {
            if j >= n {
                return Err(Error::Config(format!("simple root index {j} out of range")));
            }
            in_m[j] = true;
        }
        let simple: Vec<usize> = (0..n).filter(|&j| in_m[j]).collect();
        let (m_positive, n_roots): (Vec<RootId>, Vec<RootId>) = rs
            .positive_roots()
            .partition(|&r| rs.root(r).iter().enumerate().all(|(i, &c)| c == 0 || in_m[i]));
        let weyl_m = rs
            .weyl_elements()
            .filter(|&w| rs.weyl_word(w).iter().all(|&i| in_m[i as usize]))
            .collect();
        let gens: Vec<Vec<i64>> = simple
            .iter()
            .map(|&j| (0..n).map(|i| (i == j) as i64).collect())
            .collect();
        let two_rho_dual = m_positive.iter().fold(Coweight::ZERO, |acc, &r| acc + rs.coroot(r));
        let gram = rs.coweight_gram();
        Ok(LeviDatum {
            quotient: LatticeQuotient::new(n, &gens),
            rs,
            simple,
            in_m,
            m_positive,
            n_roots,
            weyl_m,
            two_rho_dual,
            gram,
        })
    }

    /// `M = G`.
    pub fn full(rs: Arc<RootSystem>) -> LeviDatum {
        let all: Vec<usize> = (0..rs.rank()).collect();
        LeviDatum::new(rs, &all).expect("valid indices")
    }

    /// `M = A`.
    pub fn torus(rs: Arc<RootSystem>) -> LeviDatum {
        LeviDatum::new(rs, &[]).expect("valid indices")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Simple roots of `M`, 0-based and ascending.
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    /// `"A"` for the torus, `"G"` for the whole group, otherwise the
    /// 1-based simple root indices, e.g. `"{1,3}"`.
    pub fn label(&self) -> String {
        match self.simple.len() {
            0 => "A".to_string(),
            k if k == self.rs.rank() => "G".to_string(),
            _ => {
                let idx: Vec<String> = self.simple.iter().map(|j| (j + 1).to_string()).collect();
                format!("{{{}}}", idx.join(","))
            }
        }
    }

    pub fn positive_roots(&self) -> &[RootId] {
        &self.m_positive
    }

    /// Positive roots outside `M`, the roots of the unipotent radical.
    pub fn n_roots(&self) -> &[RootId] {
        &self.n_roots
    }

    pub fn weyl_group(&self) -> &[WeylElt] {
        &self.weyl_m
    }

    pub fn quotient(&self) -> &LatticeQuotient {
        &self.quotient
    }

    pub fn is_m_dominant(&self, cw: Coweight) -> bool {
        self.simple.iter().all(|&j| self.rs.pairing(self.rs.simple_root(j), cw) >= 0)
    }

    /// The `M`-dominant element of the `W_M`-orbit of `cw`.
    pub fn m_dominant_rep(&self, cw: Coweight) -> Coweight {
        let mut c = cw;
        while let Some(&j) = self
            .simple
            .iter()
            .find(|&&j| self.rs.pairing(self.rs.simple_root(j), c) < 0)
        {
            c = self.rs.act(self.rs.simple_reflection(j), c);
        }
        c
    }

    /// `a ≤_M b`.
    pub fn leq_m(&self, a: Coweight, b: Coweight) -> bool {
        let d = b - a;
        d.coords(self.rs.rank())
            .iter()
            .enumerate()
            .all(|(i, &c)| if self.in_m[i] { c >= 0 } else { c == 0 })
    }

    /// Sum of the coordinates along `J`.
    fn m_height(&self, cw: Coweight) -> i64 {
        self.simple.iter().map(|&j| cw.0[j] as i64).sum()
    }

    pub fn rho_m_pairing(&self, v: &[BigRational]) -> BigRational {
        half_sum(&self.rs, &self.m_positive, v)
    }

    pub fn rho_n_pairing(&self, v: &[BigRational]) -> BigRational {
        half_sum(&self.rs, &self.n_roots, v)
    }

    /// `p_M(cw)`.
    pub fn project(&self, cw: Coweight) -> Vec<i64> {
        let v: Vec<i64> = cw.coords(self.rs.rank()).iter().map(|&c| c as i64).collect();
        self.quotient.project(&v)
    }

    /// Image in `𝔞_M` of the class of `lift`: its `W_M`-average.
    pub fn newton_point(&self, lift: Coweight) -> Vec<BigRational> {
        let n = self.rs.rank();
        let mut sum = vec![BigRational::zero(); n];
        for &w in &self.weyl_m {
            for (s, &c) in sum.iter_mut().zip(self.rs.act(w, lift).coords(n)) {
                *s += rat(c as i64);
            }
        }
        let k = rat(self.weyl_m.len() as i64);
        sum.into_iter().map(|s| s / &k).collect()
    }

    /// `<α_j, v> = 0` for every `j ∈ J`.
    pub fn is_central(&self, v: &[BigRational]) -> bool {
        self.simple
            .iter()
            .all(|&j| self.rs.pairing_rational(self.rs.simple_root(j), v).is_zero())
    }

    fn form(&self, a: Coweight, b: Coweight) -> i64 {
        let n = self.rs.rank();
        let (a, b) = (a.coords(n), b.coords(n));
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i] as i64 * self.gram[i][j] * b[j] as i64)
            .sum()
    }
}

fn half_sum(rs: &RootSystem, roots: &[RootId], v: &[BigRational]) -> BigRational {
    roots
        .iter()
        .fold(BigRational::zero(), |acc, &r| acc + rs.pairing_rational(r, v))
        / rat(2)
}

fn integral(rs: &RootSystem, cw: Coweight) -> Vec<BigRational> {
    cw.coords(rs.rank()).iter().map(|&c| rat(c as i64)).collect()
}

/// Every standard Levi, ordered by the number of simple roots and then
/// lexicographically.
pub fn standard_levis(rs: &Arc<RootSystem>) -> Vec<LeviDatum> {
    let n = rs.rank();
    let mut subsets: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|m| (0..n).filter(|&j| m & (1 << j) != 0).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
        .into_iter()
        .map(|s| LeviDatum::new(Arc::clone(rs), &s).expect("valid indices"))
        .collect()
}

fn require_dominant(rs: &RootSystem, mu: Coweight) -> Result<()> {
    if rs.is_dominant(mu) {
        Ok(())
    } else {
        Err(Error::Domain(format!("mu = {:?} is not dominant", mu.coords(rs.rank()))))
    }
}

/// Dominant coweights `μ' ≤ μ`.
pub fn dominant_below(rs: &RootSystem, mu: Coweight) -> Result<Vec<Coweight>> {
    require_dominant(rs, mu)?;
    let n = rs.rank();
    let mut out = vec![Coweight::ZERO];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|c| (0..=mu.0[i]).map(move |k| c + k * Coweight::simple_coroot(i)))
            .collect();
    }
    let mut out: Vec<Coweight> = out.into_iter().map(|c| mu - c).filter(|&c| rs.is_dominant(c)).collect();
    out.sort();
    Ok(out)
}

/// `Σ(μ)`: coweights whose dominant representative is at most `μ`.
pub fn sigma_mu(rs: &RootSystem, mu: Coweight) -> Result<BTreeSet<Coweight>> {
    Ok(dominant_below(rs, mu)?
        .into_iter()
        .flat_map(|d| rs.weyl_orbit(d))
        .collect())
}

/// `(Σ(μ)_{M-dom}, Σ(μ)_{M-max})`.
pub fn m_subsets(levi: &LeviDatum, mu: Coweight) -> Result<(BTreeSet<Coweight>, BTreeSet<Coweight>)> {
    let dom: BTreeSet<Coweight> = sigma_mu(levi.root_system(), mu)?
        .into_iter()
        .filter(|&c| levi.is_m_dominant(c))
        .collect();
    let max = dom
        .iter()
        .copied()
        .filter(|&a| !dom.iter().any(|&b| b != a && levi.leq_m(a, b)))
        .collect();
    Ok((dom, max))
}

/// `p_M(Σ(μ)_{M-max}) = p_M(Σ(μ)_{M-dom})`.
pub fn levi_images_agree(levi: &LeviDatum, mu: Coweight) -> Result<bool> {
    let (dom, max) = m_subsets(levi, mu)?;
    let img = |s: &BTreeSet<Coweight>| -> BTreeSet<Vec<i64>> { s.iter().map(|&c| levi.project(c)).collect() };
    Ok(img(&dom) == img(&max))
}

/// Weights of the irreducible `M^vee`-module of highest weight `top`.
fn weight_set(levi: &LeviDatum, top: Coweight) -> HashSet<Coweight> {
    let mut seen = HashSet::from([top]);
    let mut queue = VecDeque::from([top]);
    while let Some(c) = queue.pop_front() {
        for &j in &levi.simple {
            let d = c - Coweight::simple_coroot(j);
            if !seen.contains(&d) && levi.leq_m(levi.m_dominant_rep(d), top) {
                seen.insert(d);
                queue.push_back(d);
            }
        }
    }
    seen
}

/// Full weight multiplicities of the irreducible `M^vee`-module with
/// highest weight `top`, by Freudenthal's recursion.
pub fn weight_multiplicities(levi: &LeviDatum, top: Coweight) -> Result<BTreeMap<Coweight, u64>> {
    if !levi.is_m_dominant(top) {
        return Err(Error::Domain(format!("{:?} is not M-dominant", top.coords(levi.rs.rank()))));
    }
    let weights = weight_set(levi, top);
    let mut dominant: Vec<Coweight> = weights.iter().copied().filter(|&c| levi.is_m_dominant(c)).collect();
    dominant.sort_by_key(|&c| (levi.m_height(top - c), c));
    let coroots: Vec<Coweight> = levi.m_positive.iter().map(|&r| levi.rs.coroot(r)).collect();
    let mut mult: HashMap<Coweight, u64> = HashMap::new();
    for &lam in &dominant {
        if lam == top {
            mult.insert(lam, 1);
            continue;
        }
        let mut num: i128 = 0;
        for &beta in &coroots {
            let mut v = lam + beta;
            while weights.contains(&v) {
                let m = mult[&levi.m_dominant_rep(v)];
                num += m as i128 * levi.form(v, beta) as i128;
                v = v + beta;
            }
        }
        num *= 2;
        let diff = top - lam;
        let den = levi.form(diff, top + lam) as i128 + levi.form(diff, levi.two_rho_dual) as i128;
        if den <= 0 || num % den != 0 || num <= 0 {
            return Err(Error::Invariant(format!(
                "Freudenthal recursion gave {num}/{den} at {:?}",
                lam.coords(levi.rs.rank())
            )));
        }
        mult.insert(lam, (num / den) as u64);
    }
    Ok(weights
        .into_iter()
        .map(|c| (c, mult[&levi.m_dominant_rep(c)]))
        .collect())
}

/// Weyl dimension formula for the irreducible `M^vee`-module of highest
/// weight `lam`.
pub fn weyl_dimension(levi: &LeviDatum, lam: Coweight) -> u64 {
    let rs = &levi.rs;
    let shifted = 2 * lam + levi.two_rho_dual;
    let value = levi.m_positive.iter().fold(BigRational::one(), |acc, &a| {
        acc * rat(rs.pairing(a, shifted) as i64) / rat(rs.pairing(a, levi.two_rho_dual) as i64)
    });
    assert!(value.is_integer() && !value.is_negative(), "Weyl dimension must be a natural number");
    value.to_integer().to_u64().expect("dimension fits in u64")
}

/// Decomposition of a restricted representation: `λ ↦ a_{λμ}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MCharacter {
    pub multiplicities: BTreeMap<Coweight, u64>,
}

impl MCharacter {
    pub fn multiplicity(&self, lam: Coweight) -> u64 {
        self.multiplicities.get(&lam).copied().unwrap_or(0)
    }

    /// `Σ a_λ dim V^M_λ`.
    pub fn total_dimension(&self, levi: &LeviDatum) -> u64 {
        self.multiplicities
            .iter()
            .map(|(&lam, &a)| a * weyl_dimension(levi, lam))
            .sum()
    }
}

/// Restriction of the irreducible `G^vee`-module of highest weight `mu` to
/// `M^vee`.
pub fn branching(levi: &LeviDatum, mu: Coweight) -> Result<MCharacter> {
    require_dominant(&levi.rs, mu)?;
    let full = LeviDatum::full(Arc::clone(&levi.rs));
    let mut remaining: BTreeMap<Coweight, i64> = weight_multiplicities(&full, mu)?
        .into_iter()
        .map(|(c, m)| (c, m as i64))
        .collect();
    let mut out = BTreeMap::new();
    while let Some((&top, &a)) = remaining
        .iter()
        .max_by_key(|&(&c, _)| (levi.m_height(c), c))
    {
        if a <= 0 || !levi.is_m_dominant(top) {
            return Err(Error::Invariant(format!(
                "branching peeled multiplicity {a} at {:?}",
                top.coords(levi.rs.rank())
            )));
        }
        for (c, m) in weight_multiplicities(levi, top)? {
            let slot = remaining.get_mut(&c).ok_or_else(|| {
                Error::Invariant(format!("weight {:?} missing from the restriction", c.coords(levi.rs.rank())))
            })?;
            *slot -= a * m as i64;
            if *slot < 0 {
                return Err(Error::Invariant("negative multiplicity while branching".into()));
            }
            if *slot == 0 {
                remaining.remove(&c);
            }
        }
        out.insert(top, a as u64);
    }
    Ok(MCharacter { multiplicities: out })
}

/// Upper bound for the dimension of `N(L) x_{μ_M} ∩ K x_μ`, whether it is
/// attained, and the number of top-dimensional components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionBound {
    /// `<ρ, μ + μ_M> - 2 <ρ_M, μ_M>`.
    pub bound: BigRational,
    pub attained: bool,
    /// `a_{μ_M μ}`.
    pub components: u64,
}

pub fn d_intersection_with(
    levi: &LeviDatum,
    mu: Coweight,
    mu_m: Coweight,
    restriction: &MCharacter,
) -> IntersectionBound {
    let rs = &levi.rs;
    let bound = rs.rho_pairing(mu + mu_m) - rat(2) * levi.rho_m_pairing(&integral(rs, mu_m));
    let components = restriction.multiplicity(mu_m);
    IntersectionBound { bound, attained: components > 0, components }
}

pub fn d_intersection(levi: &LeviDatum, mu: Coweight, mu_m: Coweight) -> Result<IntersectionBound> {
    if !levi.is_m_dominant(mu_m) {
        return Err(Error::Domain("mu_M must be M-dominant".into()));
    }
    Ok(d_intersection_with(levi, mu, mu_m, &branching(levi, mu)?))
}

/// Dominant representative of a rational coweight.
fn dominant_rational(rs: &RootSystem, v: &[BigRational]) -> Vec<BigRational> {
    let mut c = v.to_vec();
    while let Some(i) = (0..rs.rank()).find(|&i| rs.pairing_rational(rs.simple_root(i), &c).is_negative()) {
        c = rs.act_rational(rs.simple_reflection(i), &c);
    }
    c
}

/// The reduction-to-basic evaluation for one `(μ, M, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutcome {
    /// `μ_M ∈ Σ(μ)_{M-max} ∩ p_M^{-1}(ν)` with `<ρ_M, μ_M> - defect/2 + d(μ, μ_M)`.
    pub terms: Vec<(Coweight, BigRational)>,
    pub sup: BigRational,
    /// `<ρ, ν̄ - ν̄_dom> - <2 ρ_N, ν̄>`.
    pub correction: BigRational,
    /// `sup + correction`.
    pub value: BigRational,
    /// `<ρ, μ - ν̄_dom> - defect / 2`.
    pub closed_form: BigRational,
}

impl ReductionOutcome {
    pub fn consistent(&self) -> bool {
        self.value == self.closed_form
    }
}

/// Evaluates `dim X_μ(b)` for `b` basic in `M` with class `class ∈ Λ_M`,
/// Newton point `nu_bar` and defect `defect`, through the `M`-side
/// dimensions and the intersection dimensions `d(μ, μ_M)`. Returns `None`
/// when the class is not hit by `Σ(μ)_{M-dom}`, i.e. the variety is empty.
pub fn reduction_eval(
    levi: &LeviDatum,
    mu: Coweight,
    class: &[i64],
    nu_bar: &[BigRational],
    defect: u32,
) -> Result<Option<ReductionOutcome>> {
    let rs = &levi.rs;
    require_dominant(rs, mu)?;
    if nu_bar.len() != rs.rank() || !levi.is_central(nu_bar) {
        return Err(Error::Config("Newton point must lie in the center of M".into()));
    }
    let (dom, max) = m_subsets(levi, mu)?;
    if !dom.iter().any(|&c| levi.project(c) == class) {
        return Ok(None);
    }
    let restriction = branching(levi, mu)?;
    let half_defect = BigRational::new(BigInt::from(defect), BigInt::from(2));
    let terms: Vec<(Coweight, BigRational)> = max
        .iter()
        .copied()
        .filter(|&c| levi.project(c) == class)
        .map(|c| {
            let d = d_intersection_with(levi, mu, c, &restriction);
            let m_side = levi.rho_m_pairing(&integral(rs, c)) - &half_defect;
            (c, m_side + d.bound)
        })
        .collect();
    let Some(sup) = terms.iter().map(|(_, v)| v.clone()).max() else {
        return Err(Error::Invariant(format!(
            "class {class:?} is hit by M-dominant but not by M-maximal elements"
        )));
    };
    let nu_dom = dominant_rational(rs, nu_bar);
    let diff: Vec<BigRational> = nu_bar.iter().zip(&nu_dom).map(|(a, b)| a - b).collect();
    let correction = rs.rho_pairing_rational(&diff) - rat(2) * levi.rho_n_pairing(nu_bar);
    let value = &sup + &correction;
    let closed_form = rs.rho_pairing(mu) - rs.rho_pairing_rational(&nu_dom) - half_defect;
    Ok(Some(ReductionOutcome { terms, sup, correction, value, closed_form }))
}

/// `reduction_eval` for the translation `b = ε^ν`, using `ν` itself when it is
/// central in `M` and otherwise the least central `W`-conjugate; `None`
/// when no conjugate is central.
pub fn reduction_translation(levi: &LeviDatum, mu: Coweight, nu: Coweight) -> Result<Option<(Coweight, Option<ReductionOutcome>)>> {
    let rs = &levi.rs;
    let Some(central) = std::iter::once(nu)
        .chain(rs.weyl_orbit(nu))
        .find(|&c| levi.is_central(&integral(rs, c)))
    else {
        return Ok(None);
    };
    let nu_bar = levi.newton_point(central);
    debug_assert_eq!(nu_bar, integral(rs, central));
    let outcome = reduction_eval(levi, mu, &levi.project(central), &nu_bar, 0)?;
    Ok(Some((central, outcome)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::from_label(label).unwrap())
    }

    fn theta(rs: &RootSystem) -> Coweight {
        rs.coroot(rs.highest_root())
    }

    /// Kostant partition function over the positive coroots.
    fn partition(coroots: &[Coweight], v: Coweight, memo: &mut HashMap<(Coweight, usize), i64>, k: usize) -> i64 {
        if v.0.iter().any(|&c| c < 0) {
            return 0;
        }
        if k == coroots.len() {
            return v.is_zero() as i64;
        }
        if let Some(&p) = memo.get(&(v, k)) {
            return p;
        }
        let mut total = 0;
        let mut w = v;
        while w.0.iter().all(|&c| c >= 0) {
            total += partition(coroots, w, memo, k + 1);
            w = w - coroots[k];
        }
        memo.insert((v, k), total);
        total
    }

    /// Kostant multiplicity formula, on doubled vectors.
    fn kostant(r: &RootSystem, mu: Coweight, lam: Coweight) -> i64 {
        let coroots: Vec<Coweight> = r.positive_roots().map(|a| r.coroot(a)).collect();
        let two_rho = coroots.iter().fold(Coweight::ZERO, |a, &b| a + b);
        let mut memo = HashMap::new();
        r.weyl_elements()
            .map(|w| {
                let twice = r.act(w, 2 * mu + two_rho) - (2 * lam + two_rho);
                assert!(twice.0.iter().all(|c| c % 2 == 0));
                let half = Coweight(twice.0.map(|c| c / 2));
                let sign = if r.weyl_length(w) % 2 == 0 { 1 } else { -1 };
                sign * partition(&coroots, half, &mut memo, 0)
            })
            .sum()
    }

    fn small_dominant(r: &RootSystem, bound: i64) -> Vec<Coweight> {
        let mut all = vec![Coweight::ZERO];
        for i in 0..r.rank() {
            all = all
                .into_iter()
                .flat_map(|c| (0..=bound as i32).map(move |k| c + k * Coweight::simple_coroot(i)))
                .collect();
        }
        all.into_iter()
            .filter(|&c| r.is_dominant(c) && r.two_rho_pairing(c) <= bound)
            .collect()
    }

    #[test]
    fn rho_splits() {
        for label in ["A2", "C3", "G2", "D4"] {
            let r = rs(label);
            for levi in standard_levis(&r) {
                let v: Vec<BigRational> = (0..r.rank()).map(|i| rat(i as i64 * 3 - 2)).collect();
                assert_eq!(levi.rho_m_pairing(&v) + levi.rho_n_pairing(&v), r.rho_pairing_rational(&v));
                assert_eq!(levi.positive_roots().len() + levi.n_roots().len(), r.n_positive());
            }
            assert_eq!(standard_levis(&r).len(), 1 << r.rank());
        }
    }

    #[test]
    fn sigma_examples() {
        let r = rs("A2");
        assert_eq!(sigma_mu(&r, Coweight::ZERO).unwrap().len(), 1);
        let t = theta(&r);
        let s = sigma_mu(&r, t).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.contains(&Coweight::ZERO));
        assert!(sigma_mu(&r, -t).is_err());
        // Box scan oracle.
        for label in ["C2", "G2", "B3"] {
            let r = rs(label);
            for mu in small_dominant(&r, 12) {
                let s = sigma_mu(&r, mu).unwrap();
                let mut brute = BTreeSet::new();
                let k = 12;
                let mut all = vec![Coweight::ZERO];
                for i in 0..r.rank() {
                    all = all
                        .into_iter()
                        .flat_map(|c| (-k..=k).map(move |j| c + j * Coweight::simple_coroot(i)))
                        .collect();
                }
                for c in all {
                    if r.leq_dominance(r.dominant_rep(c).0, mu) {
                        brute.insert(c);
                    }
                }
                assert_eq!(s, brute, "{label} {mu:?}");
            }
        }
    }

    #[test]
    fn m_subset_extremes() {
        let r = rs("C2");
        let mu = theta(&r);
        let (dom, max) = m_subsets(&LeviDatum::full(r.clone()), mu).unwrap();
        assert!(dom.iter().all(|&c| r.is_dominant(c)));
        assert_eq!(max, BTreeSet::from([mu]));
        let (dom, max) = m_subsets(&LeviDatum::torus(r.clone()), mu).unwrap();
        assert_eq!(dom, sigma_mu(&r, mu).unwrap());
        assert_eq!(max, dom);
    }

    #[test]
    fn a2_levi_subsets() {
        let r = rs("A2");
        let levi = LeviDatum::new(r.clone(), &[0]).unwrap();
        assert_eq!(levi.label(), "{1}");
        let mu = theta(&r);
        let (dom, max) = m_subsets(&levi, mu).unwrap();
        // Sigma(θ^vee) = {0, ±(1,0), ±(0,1), ±(1,1)}; M-dominant means 2c_1 - c_2 ≥ 0.
        let expect_dom: BTreeSet<Coweight> =
            [[0, 0], [1, 1], [1, 0], [0, -1]].iter().map(|c| Coweight::new(c)).collect();
        let all_sigma: BTreeSet<Coweight> = sigma_mu(&r, mu).unwrap();
        assert_eq!(dom, all_sigma.iter().copied().filter(|&c| levi.is_m_dominant(c)).collect());
        assert!(dom.is_subset(&all_sigma));
        assert_eq!(dom, expect_dom);
        for &a in &max {
            for &b in &dom {
                assert!(a == b || !levi.leq_m(a, b));
            }
        }
        for &a in &dom {
            assert!(max.iter().any(|&b| levi.leq_m(a, b)));
        }
    }

    #[test]
    fn freudenthal_matches_kostant() {
        for label in ["A2", "C2", "G2", "B3", "A3"] {
            let r = rs(label);
            let full = LeviDatum::full(r.clone());
            for mu in small_dominant(&r, 10) {
                let diagram = weight_multiplicities(&full, mu).unwrap();
                assert_eq!(diagram.keys().copied().collect::<BTreeSet<_>>(), sigma_mu(&r, mu).unwrap());
                for (&lam, &m) in &diagram {
                    if r.is_dominant(lam) {
                        assert_eq!(m as i64, kostant(&r, mu, lam), "{label} mu={mu:?} lam={lam:?}");
                    }
                }
                assert_eq!(diagram.values().sum::<u64>(), weyl_dimension(&full, mu));
            }
        }
    }

    #[test]
    fn known_dimensions_and_multiplicities() {
        let a2 = rs("A2");
        let full = LeviDatum::full(a2.clone());
        assert_eq!(weyl_dimension(&full, theta(&a2)), 8);
        let m = weight_multiplicities(&full, theta(&a2)).unwrap();
        assert_eq!(m[&Coweight::ZERO], 2);
        let torus = branching(&LeviDatum::torus(a2.clone()), theta(&a2)).unwrap();
        assert_eq!(torus.multiplicity(Coweight::ZERO), 2);
        let c2 = rs("C2");
        assert_eq!(weyl_dimension(&LeviDatum::full(c2.clone()), theta(&c2)), 5);
        assert_eq!(branching(&LeviDatum::full(a2.clone()), Coweight::ZERO).unwrap().multiplicities, BTreeMap::from([(Coweight::ZERO, 1)]));
    }

    #[test]
    fn branching_matches_alternating_sum() {
        for label in ["A2", "C2", "G2", "B3"] {
            let r = rs(label);
            let full = LeviDatum::full(r.clone());
            for mu in small_dominant(&r, 10) {
                let diagram = weight_multiplicities(&full, mu).unwrap();
                for levi in standard_levis(&r) {
                    let br = branching(&levi, mu).unwrap();
                    assert_eq!(br.total_dimension(&levi), weyl_dimension(&full, mu));
                    let (dom, _) = m_subsets(&levi, mu).unwrap();
                    for &lam in &dom {
                        let doubled = 2 * lam + levi.two_rho_dual;
                        let expected: i64 = levi
                            .weyl_group()
                            .iter()
                            .map(|&w| {
                                let t = r.act(w, doubled) - levi.two_rho_dual;
                                let half = Coweight(t.0.map(|c| c / 2));
                                let sign = if r.weyl_length(w) % 2 == 0 { 1 } else { -1 };
                                sign * diagram.get(&half).copied().unwrap_or(0) as i64
                            })
                            .sum();
                        assert_eq!(br.multiplicity(lam) as i64, expected, "{label} {} {mu:?} {lam:?}", levi.label());
                    }
                    assert!(br.multiplicities.keys().all(|k| dom.contains(k)));
                }
            }
        }
    }

    #[test]
    fn newton_points_are_central() {
        let r = rs("B3");
        for levi in standard_levis(&r) {
            for c in sigma_mu(&r, theta(&r)).unwrap() {
                let nb = levi.newton_point(c);
                assert!(levi.is_central(&nb));
                // The image only depends on the class.
                let shifted = levi.simple().iter().fold(c, |acc, &j| acc + Coweight::simple_coroot(j));
                assert_eq!(levi.newton_point(shifted), nb);
            }
        }
    }

    #[test]
    fn reduction_formula_examples() {
        let r = rs("A2");
        let mu = theta(&r);
        let full = LeviDatum::full(r.clone());
        let out = reduction_eval(&full, mu, &full.project(Coweight::ZERO), &[rat(0), rat(0)], 0)
            .unwrap()
            .unwrap();
        assert!(out.consistent());
        assert_eq!(out.value, rat(2));
        let torus = LeviDatum::torus(r.clone());
        for nu in sigma_mu(&r, mu).unwrap() {
            let (_, out) = reduction_translation(&torus, mu, nu).unwrap().unwrap();
            let out = out.unwrap();
            assert!(out.consistent());
            let d = crate::adlv_grass::dim_grass(&r, mu, nu).unwrap().unwrap();
            assert_eq!(out.value, rat(d as i64));
        }
        // b basic in the Levi of α_1 with Newton point (1/2, 1): its
        // centralizer has F-rank 1, so the defect is 1.
        let levi = LeviDatum::new(r.clone(), &[0]).unwrap();
        let lift = Coweight::new(&[0, 1]);
        let nb = levi.newton_point(lift);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(nb, vec![half, rat(1)]);
        let out = reduction_eval(&levi, mu, &levi.project(lift), &nb, 1).unwrap().unwrap();
        assert!(out.consistent());
        assert_eq!(out.value, rat(0));
        let newton = crate::adlv_grass::NewtonInput::new(&r, nb.clone(), 1).unwrap();
        assert_eq!(crate::adlv_grass::rapoport_dim(&r, mu, &newton).unwrap(), 0);
        let other_class = levi.project(Coweight::new(&[0, 2]));
        assert!(reduction_eval(&levi, mu, &other_class, &levi.newton_point(Coweight::new(&[0, 2])), 0).unwrap().is_none());
        assert!(reduction_eval(&levi, mu, &levi.project(lift), &[rat(1), rat(0)], 0).is_err());
    }

    #[test]
    fn levi_images_agree_on_small_weights() {
        for label in ["A2", "C2", "G2"] {
            let r = rs(label);
            for mu in small_dominant(&r, 12) {
                for levi in standard_levis(&r) {
                    assert!(levi_images_agree(&levi, mu).unwrap());
                }
            }
        }
    }
}
