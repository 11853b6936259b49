//! Identity checks as literal map equalities, collected into reports.

use serde_json::{json, Value};

use super::derived::{compose_all, iota, pi, qgrf, rfqg, t_obj};
use super::{AdjError, CMor, CObj, Category, DMor, DObj, DeformableAdjunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub object: String,
    pub pass: bool,
    /// First discrepancy (or evaluation error) when the check fails.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// Compare `lhs` against `rhs`; evaluation errors count as failures.
    pub fn record<K: Category>(
        &mut self,
        cat: &K,
        name: impl Into<String>,
        object: impl Into<String>,
        lhs: Result<K::Mor, AdjError>,
        rhs: Result<K::Mor, AdjError>,
    ) {
        let witness = match (lhs, rhs) {
            (Ok(a), Ok(b)) => cat.discrepancy(&a, &b),
            (Err(e), _) | (_, Err(e)) => Some(format!("evaluation failed: {e}")),
        };
        self.checks.push(Check { name: name.into(), object: object.into(), pass: witness.is_none(), witness });
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"identity": c.name, "object": c.object, "pass": c.pass, "witness": c.witness}))
            .collect();
        json!({"all_pass": self.all_pass(), "checks": checks})
    }
}

fn label<K: Category>(cat: &K, x: &K::Obj) -> String {
    cat.describe(x).to_string()
}

/// Triangle identities on objects, naturality of `η`, `ε` on maps.
pub fn check_adjunction<A: DeformableAdjunction>(
    adj: &A,
    xs: &[CObj<A>],
    ys: &[DObj<A>],
    hs: &[CMor<A>],
    ks: &[DMor<A>],
) -> CheckReport {
    let (c, d) = (adj.c(), adj.d());
    let mut rep = CheckReport::default();
    for x in xs {
        let lhs = (|| {
            let fx = adj.f(x)?;
            d.compose(&adj.eps(&fx)?, &adj.f_map(&adj.eta(x)?)?)
        })();
        rep.record(d, "εF∘Fη = 1", label(c, x), lhs, adj.f(x).map(|fx| d.identity(&fx)));
    }
    for y in ys {
        let lhs = (|| {
            let gy = adj.g(y)?;
            c.compose(&adj.g_map(&adj.eps(y)?)?, &adj.eta(&gy)?)
        })();
        rep.record(c, "Gε∘ηG = 1", label(d, y), lhs, adj.g(y).map(|gy| c.identity(&gy)));
    }
    for h in hs {
        let lhs = (|| c.compose(&adj.eta(&c.target(h))?, h))();
        let rhs = (|| c.compose(&adj.g_map(&adj.f_map(h)?)?, &adj.eta(&c.source(h))?))();
        rep.record(c, "η natural", label(c, &c.source(h)), lhs, rhs);
    }
    for k in ks {
        let lhs = (|| d.compose(k, &adj.eps(&d.source(k))?))();
        let rhs = (|| d.compose(&adj.eps(&d.target(k))?, &adj.f_map(&adj.g_map(k)?)?))();
        rep.record(d, "ε natural", label(d, &d.source(k)), lhs, rhs);
    }
    rep
}

/// Comonad laws for `(Q, q, δ)` and monad laws for `(R, r, μ)`.
pub fn check_deformation<A: DeformableAdjunction>(adj: &A, xs: &[CObj<A>], ys: &[DObj<A>]) -> CheckReport {
    let (c, d) = (adj.c(), adj.d());
    let mut rep = CheckReport::default();
    for x in xs {
        let o = label(c, x);
        let qx = adj.q(x);
        let id = qx.clone().map(|qx| c.identity(&qx));
        let counit_left = (|| c.compose(&adj.q_counit(&adj.q(x)?)?, &adj.delta(x)?))();
        rep.record(c, "qQ∘δ = 1", o.clone(), counit_left, id.clone());
        let counit_right = (|| c.compose(&adj.q_map(&adj.q_counit(x)?)?, &adj.delta(x)?))();
        rep.record(c, "Qq∘δ = 1", o.clone(), counit_right, id);
        let lhs = (|| c.compose(&adj.delta(&adj.q(x)?)?, &adj.delta(x)?))();
        let rhs = (|| c.compose(&adj.q_map(&adj.delta(x)?)?, &adj.delta(x)?))();
        rep.record(c, "δQ∘δ = Qδ∘δ", o, lhs, rhs);
    }
    for y in ys {
        let o = label(d, y);
        let id = adj.r(y).map(|ry| d.identity(&ry));
        let unit_left = (|| d.compose(&adj.mu(y)?, &adj.r_unit(&adj.r(y)?)?))();
        rep.record(d, "μ∘rR = 1", o.clone(), unit_left, id.clone());
        let unit_right = (|| d.compose(&adj.mu(y)?, &adj.r_map(&adj.r_unit(y)?)?))();
        rep.record(d, "μ∘Rr = 1", o.clone(), unit_right, id);
        let lhs = (|| d.compose(&adj.mu(y)?, &adj.mu(&adj.r(y)?)?))();
        let rhs = (|| d.compose(&adj.mu(y)?, &adj.r_map(&adj.mu(y)?)?))();
        rep.record(d, "μ∘μR = μ∘Rμ", o, lhs, rhs);
    }
    rep
}

/// `π ∘ RFι = 1_{RFQ}` on each `X` and `QGπ ∘ ι = 1_{QGR}` on each `Y`.
pub fn check_lemma_identities<A: DeformableAdjunction>(adj: &A, xs: &[CObj<A>], ys: &[DObj<A>]) -> CheckReport {
    let (c, d) = (adj.c(), adj.d());
    let mut rep = CheckReport::default();
    for x in xs {
        let lhs = (|| {
            let fqx = adj.f(&adj.q(x)?)?;
            d.compose(&pi(adj, &fqx)?, &adj.r_map(&adj.f_map(&iota(adj, x)?)?)?)
        })();
        let rhs = (|| Ok(d.identity(&adj.r(&adj.f(&adj.q(x)?)?)?)))();
        rep.record(d, "π∘RFι = 1", label(c, x), lhs, rhs);
    }
    for y in ys {
        let lhs = (|| {
            let gry = adj.g(&adj.r(y)?)?;
            c.compose(&adj.q_map(&adj.g_map(&pi(adj, y)?)?)?, &iota(adj, &gry)?)
        })();
        let rhs = (|| Ok(c.identity(&adj.q(&adj.g(&adj.r(y)?)?)?)))();
        rep.record(c, "QGπ∘ι = 1", label(d, y), lhs, rhs);
    }
    rep
}

/// `π ∘ π_{FQGR} = π ∘ RFQGπ` on each `Y` and `ι_{GRFQ} ∘ ι = QGRFι ∘ ι` on each `X`.
pub fn check_associativity<A: DeformableAdjunction>(adj: &A, xs: &[CObj<A>], ys: &[DObj<A>]) -> CheckReport {
    let (c, d) = (adj.c(), adj.d());
    let mut rep = CheckReport::default();
    for y in ys {
        let lhs = (|| {
            let fqgry = adj.f(&adj.q(&adj.g(&adj.r(y)?)?)?)?;
            compose_all(d, &[pi(adj, &fqgry)?, pi(adj, y)?])
        })();
        let rhs = (|| compose_all(d, &[rfqg(adj, &pi(adj, y)?, 1)?, pi(adj, y)?]))();
        rep.record(d, "π∘πFQGR = π∘RFQGπ", label(d, y), lhs, rhs);
    }
    for x in xs {
        let lhs = (|| compose_all(c, &[iota(adj, x)?, iota(adj, &t_obj(adj, x)?)?]))();
        let rhs = (|| compose_all(c, &[iota(adj, x)?, qgrf(adj, &iota(adj, x)?, 1)?]))();
        rep.record(c, "ιGRFQ∘ι = QGRFι∘ι", label(c, x), lhs, rhs);
    }
    rep
}

/// Naturality of `ι` on maps of `C` and of `π` on maps of `D`.
pub fn check_naturality<A: DeformableAdjunction>(adj: &A, hs: &[CMor<A>], ks: &[DMor<A>]) -> CheckReport {
    let (c, d) = (adj.c(), adj.d());
    let mut rep = CheckReport::default();
    for h in hs {
        let lhs = (|| compose_all(c, &[adj.q_map(h)?, iota(adj, &c.target(h))?]))();
        let rhs = (|| {
            let tq = adj.q_map(&adj.g_map(&adj.r_map(&adj.f_map(&adj.q_map(h)?)?)?)?)?;
            compose_all(c, &[iota(adj, &c.source(h))?, tq])
        })();
        rep.record(c, "ι natural", label(c, &c.source(h)), lhs, rhs);
    }
    for k in ks {
        let lhs = (|| compose_all(d, &[pi(adj, &d.source(k))?, adj.r_map(k)?]))();
        let rhs = (|| {
            let rk = adj.r_map(&adj.f_map(&adj.q_map(&adj.g_map(&adj.r_map(k)?)?)?)?)?;
            compose_all(d, &[rk, pi(adj, &d.target(k))?])
        })();
        rep.record(d, "π natural", label(d, &d.source(k)), lhs, rhs);
    }
    rep
}
