//! The four resolutions, homotopy `T`-algebras, their bar construction, and
//! the comparison cells that make the assignment lax and colax.

use super::checks::CheckReport;
use super::derived::{compose_all, iota, pi, qgrf, rfqg, t_map, t_obj};
use super::diagram::{Splitting, TruncatedDiagram, Variance};
use super::{AdjError, CMor, CObj, Category, DMor, DObj, DeformableAdjunction};

pub type CDiagram<A> = TruncatedDiagram<CObj<A>, CMor<A>>;
pub type DDiagram<A> = TruncatedDiagram<DObj<A>, DMor<A>>;

fn check_levels(n: usize) -> Result<(), AdjError> {
    if n == 0 {
        return Err(AdjError::Invalid("truncation level must be at least 1".into()));
    }
    Ok(())
}

/// `X, TX, .., T^n X`.
fn t_powers<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, n: usize) -> Result<Vec<CObj<A>>, AdjError> {
    let mut out = vec![x.clone()];
    for _ in 0..n {
        out.push(t_obj(adj, out.last().unwrap())?);
    }
    Ok(out)
}

/// `Y, FQGRY, .., (FQGR)^n Y`.
fn s_powers<A: DeformableAdjunction>(adj: &A, y: &DObj<A>, n: usize) -> Result<Vec<DObj<A>>, AdjError> {
    let mut out = vec![y.clone()];
    for _ in 0..n {
        let w = out.last().unwrap();
        out.push(adj.f(&adj.q(&adj.g(&adj.r(w)?)?)?)?);
    }
    Ok(out)
}

/// `Q -> QT ⇉ QT² ..` in `C`, level `k` being `QT^k X`; level 0 is the coaugmentation.
pub fn cobar_resolution<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, n: usize) -> Result<CDiagram<A>, AdjError> {
    check_levels(n)?;
    let t = t_powers(adj, x, n)?;
    let levels = t.iter().map(|z| adj.q(z)).collect::<Result<Vec<_>, _>>()?;
    let mut diag = TruncatedDiagram::new("cobar", Variance::Cosimplicial, true, levels);
    for k in 0..n {
        diag.faces[k] = (0..=k).map(|j| qgrf(adj, &iota(adj, &t[k - j])?, j)).collect::<Result<_, _>>()?;
    }
    for k in 2..=n {
        diag.degeneracies[k] = (0..k - 1)
            .map(|j| {
                let fq = adj.f(&adj.q(&t[k - 2 - j])?)?;
                qgrf(adj, &adj.q_map(&adj.g_map(&pi(adj, &fq)?)?)?, j)
            })
            .collect::<Result<_, _>>()?;
    }
    Ok(diag)
}

/// `R <- R(FQGR) ⇇ ..` in `D`, level `k` being `R(FQGR)^k Y`.
pub fn bar_resolution<A: DeformableAdjunction>(adj: &A, y: &DObj<A>, n: usize) -> Result<DDiagram<A>, AdjError> {
    check_levels(n)?;
    let w = s_powers(adj, y, n)?;
    let levels = w.iter().map(|z| adj.r(z)).collect::<Result<Vec<_>, _>>()?;
    let mut diag = TruncatedDiagram::new("bar", Variance::Simplicial, true, levels);
    for k in 1..=n {
        diag.faces[k] = (0..k).map(|i| rfqg(adj, &pi(adj, &w[k - 1 - i])?, i)).collect::<Result<_, _>>()?;
        if k < n {
            diag.degeneracies[k] = (0..k)
                .map(|i| {
                    let gr = adj.g(&adj.r(&w[k - 1 - i])?)?;
                    rfqg(adj, &adj.r_map(&adj.f_map(&iota(adj, &gr)?)?)?, i)
                })
                .collect::<Result<_, _>>()?;
        }
    }
    Ok(diag)
}

/// `RFQ <- RFQT ⇇ ..` in `D` with the forwards contracting homotopy.
pub fn split_forward<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, n: usize) -> Result<DDiagram<A>, AdjError> {
    check_levels(n)?;
    let t = t_powers(adj, x, n)?;
    let levels = t.iter().map(|z| adj.r(&adj.f(&adj.q(z)?)?)).collect::<Result<Vec<_>, _>>()?;
    let mut diag = TruncatedDiagram::new("split-forward", Variance::Simplicial, true, levels);
    let deg = |k: usize, i: usize| rfqg(adj, &adj.r_map(&adj.f_map(&iota(adj, &t[k - i])?)?)?, i);
    let mut extra = Vec::new();
    for k in 0..=n {
        if k >= 1 {
            diag.faces[k] = (0..k)
                .map(|i| {
                    let fq = adj.f(&adj.q(&t[k - 1 - i])?)?;
                    rfqg(adj, &pi(adj, &fq)?, i)
                })
                .collect::<Result<_, _>>()?;
        }
        if k < n {
            diag.degeneracies[k] = (0..k).map(|i| deg(k, i)).collect::<Result<_, _>>()?;
            extra.push(deg(k, k)?);
        }
    }
    diag.extra = Some((Splitting::Forward, extra));
    Ok(diag)
}

/// `QGR <- QGR(FQGR) ⇇ ..` in `C` with the backwards contracting homotopy.
pub fn split_backward<A: DeformableAdjunction>(adj: &A, y: &DObj<A>, n: usize) -> Result<CDiagram<A>, AdjError> {
    check_levels(n)?;
    let w = s_powers(adj, y, n)?;
    let gr = w.iter().map(|z| adj.g(&adj.r(z)?)).collect::<Result<Vec<_>, _>>()?;
    let levels = gr.iter().map(|z| adj.q(z)).collect::<Result<Vec<_>, _>>()?;
    let mut diag = TruncatedDiagram::new("split-backward", Variance::Simplicial, true, levels);
    let t = |k: usize, i: usize| qgrf(adj, &iota(adj, &gr[k - i])?, i);
    let mut extra = Vec::new();
    for k in 0..=n {
        if k >= 1 {
            diag.faces[k] = (0..k)
                .map(|i| qgrf(adj, &adj.q_map(&adj.g_map(&pi(adj, &w[k - 1 - i])?)?)?, i))
                .collect::<Result<_, _>>()?;
        }
        if k < n {
            diag.degeneracies[k] = (0..k).map(|j| t(k, j + 1)).collect::<Result<_, _>>()?;
            extra.push(t(k, 0)?);
        }
    }
    diag.extra = Some((Splitting::Backward, extra));
    Ok(diag)
}

/// `Qh ∘ ι = 1` and `h ∘ Gπ = h ∘ Th` for `h : TX -> X`.
pub fn homotopy_algebra_check<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, h: &CMor<A>) -> CheckReport {
    let c = adj.c();
    let o = c.describe(x).to_string();
    let mut rep = CheckReport::default();
    let unit = (|| compose_all(c, &[iota(adj, x)?, adj.q_map(h)?]))();
    rep.record(c, "Qh∘ι = 1", o.clone(), unit, adj.q(x).map(|qx| c.identity(&qx)));
    let action = (|| {
        let gpi = adj.g_map(&pi(adj, &adj.f(&adj.q(x)?)?)?)?;
        compose_all(c, &[gpi, h.clone()])
    })();
    let iterated = (|| compose_all(c, &[t_map(adj, h)?, h.clone()]))();
    rep.record(c, "h∘Gπ = h∘Th", o, action, iterated);
    rep
}

/// `(TX, Gπ_{FQX})`.
pub fn free_algebra<A: DeformableAdjunction>(adj: &A, x: &CObj<A>) -> Result<(CObj<A>, CMor<A>), AdjError> {
    let tx = t_obj(adj, x)?;
    let h = adj.g_map(&pi(adj, &adj.f(&adj.q(x)?)?)?)?;
    Ok((tx, h))
}

/// `f ∘ h = h' ∘ Tf` for `f : (X, h) -> (X', h')`.
pub fn check_algebra_map<A: DeformableAdjunction>(adj: &A, f: &CMor<A>, h: &CMor<A>, h2: &CMor<A>) -> CheckReport {
    let c = adj.c();
    let mut rep = CheckReport::default();
    let lhs = compose_all(c, &[h.clone(), f.clone()]);
    let rhs = (|| compose_all(c, &[t_map(adj, f)?, h2.clone()]))();
    rep.record(c, "f∘h = h'∘Tf", c.describe(&c.source(f)).to_string(), lhs, rhs);
    rep
}

fn require_algebra<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, h: &CMor<A>) -> Result<(), AdjError> {
    let rep = homotopy_algebra_check(adj, x, h);
    match rep.failures().first() {
        None => Ok(()),
        Some(f) => Err(AdjError::Invalid(format!("not a homotopy algebra: {} fails: {}", f.name, f.witness.clone().unwrap_or_default()))),
    }
}

/// `RFQX <= RFQTX ..` in `D`, with last face `RFQT^{k-1}h`; not augmented.
pub fn algebra_bar<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, h: &CMor<A>, n: usize) -> Result<DDiagram<A>, AdjError> {
    check_levels(n)?;
    require_algebra(adj, x, h)?;
    algebra_bar_unchecked(adj, x, h, n)
}

fn algebra_bar_unchecked<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, h: &CMor<A>, n: usize) -> Result<DDiagram<A>, AdjError> {
    let t = t_powers(adj, x, n)?;
    let levels = t.iter().map(|z| adj.r(&adj.f(&adj.q(z)?)?)).collect::<Result<Vec<_>, _>>()?;
    let mut diag = TruncatedDiagram::new("algebra-bar", Variance::Simplicial, false, levels);
    let mut th = h.clone();
    for k in 0..=n {
        if k >= 1 {
            let mut faces = (0..k)
                .map(|i| {
                    let fq = adj.f(&adj.q(&t[k - 1 - i])?)?;
                    rfqg(adj, &pi(adj, &fq)?, i)
                })
                .collect::<Result<Vec<_>, _>>()?;
            faces.push(adj.r_map(&adj.f_map(&adj.q_map(&th)?)?)?);
            diag.faces[k] = faces;
            if k < n {
                th = t_map(adj, &th)?;
            }
        }
        if k < n {
            diag.degeneracies[k] = (0..=k).map(|i| rfqg(adj, &adj.r_map(&adj.f_map(&iota(adj, &t[k - i])?)?)?, i)).collect::<Result<_, _>>()?;
        }
    }
    Ok(diag)
}

/// `QG` applied to the algebra bar construction, augmented by `Qh` and split
/// backwards by `ι`; levels `QX, QTX, .., QT^n X`.
pub fn algebra_bar_q_image<A: DeformableAdjunction>(adj: &A, x: &CObj<A>, h: &CMor<A>, n: usize) -> Result<CDiagram<A>, AdjError> {
    check_levels(n)?;
    require_algebra(adj, x, h)?;
    let bar = if n >= 2 { Some(algebra_bar_unchecked(adj, x, h, n - 1)?) } else { None };
    let t = t_powers(adj, x, n)?;
    let levels = t.iter().map(|z| adj.q(z)).collect::<Result<Vec<_>, _>>()?;
    let mut diag = TruncatedDiagram::new("algebra-bar-q", Variance::Simplicial, true, levels);
    let qg = |k: &DMor<A>| adj.q_map(&adj.g_map(k)?);
    diag.faces[1] = vec![adj.q_map(h)?];
    if let Some(bar) = &bar {
        for k in 1..bar.levels.len() {
            diag.faces[k + 1] = bar.faces[k].iter().map(qg).collect::<Result<_, _>>()?;
        }
        for k in 0..bar.levels.len() {
            diag.degeneracies[k + 1] = bar.degeneracies[k].iter().map(qg).collect::<Result<_, _>>()?;
        }
    }
    let extra = (0..n).map(|k| iota(adj, &t[k])).collect::<Result<_, _>>()?;
    diag.extra = Some((Splitting::Backward, extra));
    Ok(diag)
}

/// Comparison cells `(QGRF)^m δ_{T^n X}` and `(RFQG)^m μ_{(FQGR)^n Y}` with
/// their unit and associativity coherences.
pub fn check_homotopical_laxity<A: DeformableAdjunction>(adj: &A, m: usize, n: usize, x: &CObj<A>, y: &DObj<A>) -> CheckReport {
    let (c, d) = (adj.c(), adj.d());
    let mut rep = CheckReport::default();
    let ox = c.describe(x).to_string();
    let oy = d.describe(y).to_string();

    // Colax side on C.
    let tp = |k: usize| -> Result<CObj<A>, AdjError> { Ok(t_powers(adj, x, k)?.pop().unwrap()) };
    let comp = |k: usize, l: usize, z: &CObj<A>| -> Result<CMor<A>, AdjError> {
        let mut w = z.clone();
        for _ in 0..l {
            w = t_obj(adj, &w)?;
        }
        qgrf(adj, &adj.delta(&w)?, k)
    };
    let id_c = (|| Ok(c.identity(&adj.q(&tp(m + n)?)?)))();
    let lax = comp(m, n, x);
    let counit_l = (|| compose_all(c, &[lax.clone()?, qgrf(adj, &adj.q_counit(&adj.q(&tp(n)?)?)?, m)?]))();
    rep.record(c, format!("qQ∘c({m},{n}) = 1"), ox.clone(), counit_l, id_c.clone());
    let counit_r = (|| compose_all(c, &[lax.clone()?, qgrf(adj, &adj.q_map(&adj.q_counit(&tp(n)?)?)?, m)?]))();
    rep.record(c, format!("Qq∘c({m},{n}) = 1"), ox.clone(), counit_r, id_c.clone());
    if adj.is_strict() {
        rep.record(c, format!("c({m},{n}) = 1"), ox.clone(), lax.clone(), id_c);
    }
    for (l, a, b) in [(m, n, 0), (0, m, n)] {
        let way1 = (|| {
            let qtb = adj.q(&tp(b)?)?;
            compose_all(c, &[comp(l + a, b, x)?, comp(l, a, &qtb)?])
        })();
        let way2 = (|| {
            let inner = adj.q_map(&comp(a, b, x)?)?;
            compose_all(c, &[comp(l, a + b, x)?, qgrf(adj, &inner, l)?])
        })();
        rep.record(c, format!("c-associativity({l},{a},{b})"), ox.clone(), way1, way2);
    }

    // Lax side on D.
    let sp = |k: usize, z: &DObj<A>| -> Result<DObj<A>, AdjError> { Ok(s_powers(adj, z, k)?.pop().unwrap()) };
    let mcell = |k: usize, l: usize, z: &DObj<A>| -> Result<DMor<A>, AdjError> { rfqg(adj, &adj.mu(&sp(l, z)?)?, k) };
    let id_d = (|| Ok(d.identity(&adj.r(&sp(m + n, y)?)?)))();
    let lax = mcell(m, n, y);
    let unit_l = (|| compose_all(d, &[rfqg(adj, &adj.r_unit(&adj.r(&sp(n, y)?)?)?, m)?, lax.clone()?]))();
    rep.record(d, format!("m({m},{n})∘rR = 1"), oy.clone(), unit_l, id_d.clone());
    let unit_r = (|| compose_all(d, &[rfqg(adj, &adj.r_map(&adj.r_unit(&sp(n, y)?)?)?, m)?, lax.clone()?]))();
    rep.record(d, format!("m({m},{n})∘Rr = 1"), oy.clone(), unit_r, id_d.clone());
    if adj.is_strict() {
        rep.record(d, format!("m({m},{n}) = 1"), oy.clone(), lax, id_d);
    }
    for (l, a, b) in [(m, n, 0), (0, m, n)] {
        let way1 = (|| {
            let rwb = adj.r(&sp(b, y)?)?;
            compose_all(d, &[mcell(l, a, &rwb)?, mcell(l + a, b, y)?])
        })();
        let way2 = (|| {
            let inner = adj.r_map(&mcell(a, b, y)?)?;
            compose_all(d, &[rfqg(adj, &inner, l)?, mcell(l, a + b, y)?])
        })();
        rep.record(d, format!("m-associativity({l},{a},{b})"), oy.clone(), way1, way2);
    }
    rep
}
