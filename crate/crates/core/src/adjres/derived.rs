//! `T = GRFQ`, the transformations `ι` and `π`, and point-set derived functors.

use super::{AdjError, CMor, CObj, Category, DMor, DObj, DeformableAdjunction};

pub fn t_obj<A: DeformableAdjunction>(adj: &A, x: &CObj<A>) -> Result<CObj<A>, AdjError> {
    adj.g(&adj.r(&adj.f(&adj.q(x)?)?)?)
}

pub fn t_map<A: DeformableAdjunction>(adj: &A, h: &CMor<A>) -> Result<CMor<A>, AdjError> {
    adj.g_map(&adj.r_map(&adj.f_map(&adj.q_map(h)?)?)?)
}

/// `(QGRF)^j` applied to a map of `C`.
pub fn qgrf<A: DeformableAdjunction>(adj: &A, h: &CMor<A>, j: usize) -> Result<CMor<A>, AdjError> {
    let mut h = h.clone();
    for _ in 0..j {
        h = adj.q_map(&adj.g_map(&adj.r_map(&adj.f_map(&h)?)?)?)?;
    }
    Ok(h)
}

/// `(RFQG)^j` applied to a map of `D`.
pub fn rfqg<A: DeformableAdjunction>(adj: &A, k: &DMor<A>, j: usize) -> Result<DMor<A>, AdjError> {
    let mut k = k.clone();
    for _ in 0..j {
        k = adj.r_map(&adj.f_map(&adj.q_map(&adj.g_map(&k)?)?)?)?;
    }
    Ok(k)
}

/// `ι_X = QG(r_{FQX}) ∘ Q(η_{QX}) ∘ δ_X : QX -> QGRFQX`.
pub fn iota<A: DeformableAdjunction>(adj: &A, x: &CObj<A>) -> Result<CMor<A>, AdjError> {
    let c = adj.c();
    let qx = adj.q(x)?;
    let first = adj.delta(x)?;
    let second = adj.q_map(&adj.eta(&qx)?)?;
    let third = adj.q_map(&adj.g_map(&adj.r_unit(&adj.f(&qx)?)?)?)?;
    c.compose(&third, &c.compose(&second, &first)?)
}

/// `π_Y = μ_Y ∘ R(ε_{RY}) ∘ RF(q_{GRY}) : RFQGRY -> RY`.
pub fn pi<A: DeformableAdjunction>(adj: &A, y: &DObj<A>) -> Result<DMor<A>, AdjError> {
    let d = adj.d();
    let ry = adj.r(y)?;
    let first = adj.r_map(&adj.f_map(&adj.q_counit(&adj.g(&ry)?)?)?)?;
    let second = adj.r_map(&adj.eps(&ry)?)?;
    let third = adj.mu(y)?;
    d.compose(&third, &d.compose(&second, &first)?)
}

/// `FQ` with its comparison `F(q_X) : FQX -> FX`.
pub fn left_derived<A: DeformableAdjunction>(adj: &A, x: &CObj<A>) -> Result<(DObj<A>, DMor<A>), AdjError> {
    Ok((adj.f(&adj.q(x)?)?, adj.f_map(&adj.q_counit(x)?)?))
}

/// `GR` with its comparison `G(r_Y) : GY -> GRY`.
pub fn right_derived<A: DeformableAdjunction>(adj: &A, y: &DObj<A>) -> Result<(CObj<A>, CMor<A>), AdjError> {
    Ok((adj.g(&adj.r(y)?)?, adj.g_map(&adj.r_unit(y)?)?))
}

/// Composite of `maps` in order of application.
pub(crate) fn compose_all<K: Category>(cat: &K, maps: &[K::Mor]) -> Result<K::Mor, AdjError> {
    let mut it = maps.iter();
    let mut acc = it.next().expect("nonempty chain").clone();
    for m in it {
        acc = cat.compose(m, &acc)?;
    }
    Ok(acc)
}
