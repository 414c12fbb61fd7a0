//! Closed-form dimensions in the affine Grassmannian.
//!
//! For `b = ε^ν` the variety `X_μ(b)` is nonempty exactly when
//! `ν_dom ≤ μ`, and then has dimension `<ρ, μ - ν_dom>`. The intersection
//! of the `K`-orbit of `ε^μ` with the `U(L)`-orbit of `ε^ν` has dimension
//! `<ρ, μ + ν>`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::rootsys::{Coweight, RootSystem};
use crate::{Error, Result};

fn require_dominant(rs: &RootSystem, mu: Coweight) -> Result<()> {
    if rs.is_dominant(mu) {
        Ok(())
    } else {
        Err(Error::Domain(format!("mu = {:?} is not dominant", mu.coords(rs.rank()))))
    }
}

fn rho(rs: &RootSystem, cw: Coweight) -> i64 {
    let v = rs.two_rho_pairing(cw);
    debug_assert!(v % 2 == 0);
    v / 2
}

/// `dim X_μ(ε^ν)`, or `None` when `ν_dom` is not below `μ`.
pub fn dim_grass(rs: &RootSystem, mu: Coweight, nu: Coweight) -> Result<Option<u32>> {
    require_dominant(rs, mu)?;
    let (nu_dom, _) = rs.dominant_rep(nu);
    if !rs.leq_dominance(nu_dom, mu) {
        return Ok(None);
    }
    let d = rho(rs, mu - nu_dom);
    u32::try_from(d)
        .map(Some)
        .map_err(|_| Error::Invariant(format!("negative dimension {d}")))
}

/// `dim (K ε^μ K/K ∩ U(L) ε^ν K/K) = <ρ, μ + ν>` when nonempty.
pub fn mv_dim(rs: &RootSystem, mu: Coweight, nu: Coweight) -> Result<Option<i64>> {
    require_dominant(rs, mu)?;
    let (nu_dom, _) = rs.dominant_rep(nu);
    Ok(rs.leq_dominance(nu_dom, mu).then(|| rho(rs, mu + nu)))
}

/// `dim (K ε^μ K ε^{-ν} ∩ U(L)) = <ρ, μ - ν>` when nonempty.
pub fn mv_dim_unipotent(rs: &RootSystem, mu: Coweight, nu: Coweight) -> Result<Option<i64>> {
    require_dominant(rs, mu)?;
    let (nu_dom, _) = rs.dominant_rep(nu);
    Ok(rs.leq_dominance(nu_dom, mu).then(|| rho(rs, mu - nu)))
}

/// `<ρ, ν - ν_dom>`, which equals the sum of `min(<α, ν>, 0)` over `α > 0`.
pub fn rho_defect(rs: &RootSystem, nu: Coweight) -> i64 {
    rho(rs, nu - rs.dominant_rep(nu).0)
}

/// Newton point and defect of a `σ`-conjugacy class, supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonInput {
    nu_bar: Vec<BigRational>,
    defect: u32,
}

impl NewtonInput {
    pub fn new(rs: &RootSystem, nu_bar: Vec<BigRational>, defect: u32) -> Result<NewtonInput> {
        if nu_bar.len() != rs.rank() {
            return Err(Error::Config(format!(
                "Newton point has {} coordinates, expected {}",
                nu_bar.len(),
                rs.rank()
            )));
        }
        let dominant = (0..rs.rank())
            .all(|i| rs.pairing_rational(rs.simple_root(i), &nu_bar) >= BigRational::zero());
        if !dominant {
            return Err(Error::Domain("Newton point must be dominant".into()));
        }
        if defect as usize > rs.rank() {
            return Err(Error::Domain(format!("defect {defect} exceeds the rank")));
        }
        Ok(NewtonInput { nu_bar, defect })
    }

    /// Newton point and defect of `ε^ν`: `(ν_dom, 0)`.
    pub fn translation(rs: &RootSystem, nu: Coweight) -> NewtonInput {
        let dom = rs.dominant_rep(nu).0;
        let nu_bar = dom
            .coords(rs.rank())
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        NewtonInput { nu_bar, defect: 0 }
    }

    pub fn nu_bar(&self) -> &[BigRational] {
        &self.nu_bar
    }

    pub fn defect(&self) -> u32 {
        self.defect
    }
}

/// `<ρ, μ - ν̄> - defect / 2`, which must be an integer.
pub fn rapoport_dim(rs: &RootSystem, mu: Coweight, nb: &NewtonInput) -> Result<i64> {
    require_dominant(rs, mu)?;
    let half = BigRational::new(BigInt::from(nb.defect), BigInt::from(2));
    let value = rs.rho_pairing(mu) - rs.rho_pairing_rational(&nb.nu_bar) - half;
    if !value.is_integer() {
        return Err(Error::Invariant(format!("non-integral dimension {value}")));
    }
    let n = value.to_integer();
    n.to_i64()
        .ok_or_else(|| Error::Invariant(format!("dimension {n} out of range")))
}
