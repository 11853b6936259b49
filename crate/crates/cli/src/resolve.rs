//! `resolve`: the four resolutions and the deformation and lemma checks on
//! one of the shipped instances.

use std::path::PathBuf;
use std::sync::Arc;

use homres::adjres::finvect::{FreeForget, LinMap};
use homres::adjres::sset::{CylinderPath, IdentityAdjunction};
use homres::adjres::{
    bar_resolution, check_associativity, check_deformation, check_lemma_identities, cobar_resolution, split_backward, split_forward,
    AdjError, CMor, CObj, Category, CheckReport, DMor, DObj, DeformableAdjunction, TruncatedDiagram,
};
use homres::scomplex::{boundary, SimplicialSet};
use serde_json::{json, Value};

use crate::report::{read_json, Failure, Report, EXIT_CHECK, EXIT_OK};

pub struct ResolveConfig {
    pub instance: String,
    pub object: Option<PathBuf>,
    pub levels: usize,
    pub max_stages: usize,
    pub budget: u64,
    pub maps: bool,
    pub corrupt_mu: bool,
}

/// An adjunction whose `μ` has been tampered with; everything else delegates.
struct CorruptMu<A: DeformableAdjunction> {
    inner: A,
    corrupt: fn(DMor<A>) -> DMor<A>,
}

impl<A: DeformableAdjunction> DeformableAdjunction for CorruptMu<A> {
    type C = A::C;
    type D = A::D;

    fn name(&self) -> String {
        format!("{}-corrupted-mu", self.inner.name())
    }
    fn c(&self) -> &A::C {
        self.inner.c()
    }
    fn d(&self) -> &A::D {
        self.inner.d()
    }
    fn f(&self, x: &CObj<A>) -> Result<DObj<A>, AdjError> {
        self.inner.f(x)
    }
    fn f_map(&self, h: &CMor<A>) -> Result<DMor<A>, AdjError> {
        self.inner.f_map(h)
    }
    fn g(&self, y: &DObj<A>) -> Result<CObj<A>, AdjError> {
        self.inner.g(y)
    }
    fn g_map(&self, k: &DMor<A>) -> Result<CMor<A>, AdjError> {
        self.inner.g_map(k)
    }
    fn eta(&self, x: &CObj<A>) -> Result<CMor<A>, AdjError> {
        self.inner.eta(x)
    }
    fn eps(&self, y: &DObj<A>) -> Result<DMor<A>, AdjError> {
        self.inner.eps(y)
    }
    fn q(&self, x: &CObj<A>) -> Result<CObj<A>, AdjError> {
        self.inner.q(x)
    }
    fn q_map(&self, h: &CMor<A>) -> Result<CMor<A>, AdjError> {
        self.inner.q_map(h)
    }
    fn q_counit(&self, x: &CObj<A>) -> Result<CMor<A>, AdjError> {
        self.inner.q_counit(x)
    }
    fn delta(&self, x: &CObj<A>) -> Result<CMor<A>, AdjError> {
        self.inner.delta(x)
    }
    fn r(&self, y: &DObj<A>) -> Result<DObj<A>, AdjError> {
        self.inner.r(y)
    }
    fn r_map(&self, k: &DMor<A>) -> Result<DMor<A>, AdjError> {
        self.inner.r_map(k)
    }
    fn r_unit(&self, y: &DObj<A>) -> Result<DMor<A>, AdjError> {
        self.inner.r_unit(y)
    }
    fn mu(&self, y: &DObj<A>) -> Result<DMor<A>, AdjError> {
        self.inner.mu(y).map(self.corrupt)
    }
    fn is_strict(&self) -> bool {
        self.inner.is_strict()
    }
}

/// Flip the first matrix entry.
fn flip_corner(mut m: LinMap) -> LinMap {
    if m.rows > 0 && m.cols > 0 {
        let v = m.get(0, 0);
        m.set(0, 0, !v);
    }
    m
}

fn diagram_entry<K: Category>(cat: &K, kind: &str, object: Value, diag: &TruncatedDiagram<K::Obj, K::Mor>, maps: bool) -> (Value, CheckReport) {
    let checks = diag.check_identities(cat);
    let v = json!({"kind": kind, "object": object, "diagram": diag.to_json(cat, maps), "checks": checks.to_json()});
    (v, checks)
}

fn summary(name: &str, rep: &CheckReport) -> String {
    let failed = rep.failures();
    let mut line = format!("{name}: {}/{} pass", rep.len() - failed.len(), rep.len());
    if let Some(f) = failed.first() {
        line.push_str(&format!("; first failure `{}` on {}: {}", f.name, f.object, f.witness.clone().unwrap_or_default()));
    }
    line
}

fn run<A: DeformableAdjunction>(adj: &A, xs: &[CObj<A>], ys: &[DObj<A>], cfg: &ResolveConfig) -> Result<Report, Failure> {
    let (c, d) = (adj.c(), adj.d());
    let n = cfg.levels;
    let mut entries = Vec::new();
    let mut lines = vec![format!("instance {} ({}), levels {n}", cfg.instance, adj.name())];
    let mut all = CheckReport::default();
    let mut push = |(v, rep): (Value, CheckReport), name: String| {
        lines.push(summary(&name, &rep));
        entries.push(v);
        all.extend(rep);
    };
    for x in xs {
        let o = c.describe(x);
        push(diagram_entry(c, "cobar", o.clone(), &cobar_resolution(adj, x, n)?, cfg.maps), format!("cobar {o}"));
        push(diagram_entry(d, "split-forward", o.clone(), &split_forward(adj, x, n)?, cfg.maps), format!("split-forward {o}"));
    }
    for y in ys {
        let o = d.describe(y);
        push(diagram_entry(d, "bar", o.clone(), &bar_resolution(adj, y, n)?, cfg.maps), format!("bar {o}"));
        push(diagram_entry(c, "split-backward", o.clone(), &split_backward(adj, y, n)?, cfg.maps), format!("split-backward {o}"));
    }
    let mut lemma = CheckReport::default();
    for (name, rep) in [
        ("deformation", check_deformation(adj, xs, ys)),
        ("lemma identities", check_lemma_identities(adj, xs, ys)),
        ("associativity", check_associativity(adj, xs, ys)),
    ] {
        lines.push(summary(name, &rep));
        lemma.extend(rep);
    }
    let pass = all.all_pass() && lemma.all_pass();
    let json = json!({
        "instance": cfg.instance,
        "adjunction": adj.name(),
        "levels": n,
        "resolutions": entries,
        "lemma_checks": lemma.to_json(),
        "all_pass": pass,
    });
    Ok(Report { json, text: lines.join("\n") + "\n", code: if pass { EXIT_OK } else { EXIT_CHECK } })
}

fn discrete(n: usize) -> Arc<SimplicialSet> {
    let names = (0..n).map(|i| format!("v{i}")).collect();
    Arc::new(SimplicialSet::new(0, vec![names], vec![vec![Vec::new(); n]]).expect("a discrete set"))
}

fn sizes(v: &Value, key: &str) -> Result<Vec<usize>, Failure> {
    let list = v[key].as_array().ok_or_else(|| Failure::parse(format!("expected a `{key}` list of sizes")))?;
    list.iter().map(|s| s.as_u64().map(|s| s as usize).ok_or_else(|| Failure::parse("sizes must be non-negative integers"))).collect()
}

/// Either one simplicial set or `{"objects": [..]}`.
fn sets(v: &Value) -> Result<Vec<Arc<SimplicialSet>>, Failure> {
    match v.get("objects").and_then(Value::as_array) {
        Some(list) => list.iter().map(|x| Ok(Arc::new(SimplicialSet::from_json(x)?))).collect(),
        None => Ok(vec![Arc::new(SimplicialSet::from_json(v)?)]),
    }
}

fn uniform_bound(xs: &[Arc<SimplicialSet>]) -> Result<usize, Failure> {
    let d = xs.first().map_or(0, |x| x.dim_bound());
    if xs.iter().any(|x| x.dim_bound() != d) {
        return Err(Failure::parse("objects must share one dim_bound"));
    }
    Ok(d)
}

pub fn resolve(cfg: &ResolveConfig) -> Result<Report, Failure> {
    if cfg.levels == 0 {
        return Err(Failure::parse("--levels must be positive"));
    }
    let input = cfg.object.as_deref().map(read_json).transpose()?;
    if cfg.corrupt_mu && cfg.instance != "a" {
        return Err(Failure::parse("--corrupt-mu is only available on instance a"));
    }
    match cfg.instance.as_str() {
        "a" => {
            let (xs, ys) = match &input {
                Some(v) => (sizes(v, "c")?, sizes(v, "d")?),
                None => (vec![0, 1, 2], vec![0, 1]),
            };
            if cfg.corrupt_mu {
                run(&CorruptMu { inner: FreeForget::new(), corrupt: flip_corner }, &xs, &ys, cfg)
            } else {
                run(&FreeForget::new(), &xs, &ys, cfg)
            }
        }
        "b" => {
            let xs = match &input {
                Some(v) => sets(v)?,
                None => vec![Arc::new(boundary(1, 1)?)],
            };
            let adj = IdentityAdjunction::new(uniform_bound(&xs)?, cfg.max_stages, cfg.budget)?;
            run(&adj, &xs, &xs, cfg)
        }
        "c" => {
            let xs = match &input {
                Some(v) => sets(v)?,
                None => vec![discrete(0), discrete(1)],
            };
            if uniform_bound(&xs)? != 0 {
                return Err(Failure::parse("instance c works with 0-truncated simplicial sets"));
            }
            let adj = CylinderPath::new(cfg.max_stages, cfg.budget)?;
            run(&adj, &xs, &xs, cfg)
        }
        other => Err(Failure::parse(format!("unknown instance `{other}`; expected a, b or c"))),
    }
}
