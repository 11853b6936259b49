//! Pasting words over `F`, `G`, `η`, `ε`: tokenizer, parser and type checker.
//!
//! Grammar, loosest first: `a ∘ b` is vertical composition (`b` first),
//! juxtaposition `A B` is horizontal composition (`A` outer), and atoms are
//! `F`, `G`, `eta`, `eps`, `1` (also `1_C`, `1_D` to fix the object).

use std::fmt;

use super::FreeAdjError;

/// The two objects: `C` (0) and `D` (1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obj {
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `F : C -> D`.
    F,
    /// `G : D -> C`.
    G,
}

impl Letter {
    pub fn dom(self) -> Obj {
        match self {
            Letter::F => Obj::C,
            Letter::G => Obj::D,
        }
    }

    pub fn cod(self) -> Obj {
        match self {
            Letter::F => Obj::D,
            Letter::G => Obj::C,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Letter::F => "F",
            Letter::G => "G",
        }
    }
}

/// A 1-cell: letters in applicative order (the rightmost acts first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub letters: Vec<Letter>,
    pub dom: Obj,
    pub cod: Obj,
}

impl Path {
    pub fn new(letters: Vec<Letter>, dom: Obj, cod: Obj) -> Option<Self> {
        let mut obj = dom;
        for l in letters.iter().rev() {
            if l.dom() != obj {
                return None;
            }
            obj = l.cod();
        }
        (obj == cod).then_some(Self { letters, dom, cod })
    }

    /// Object of each region, left to right: `letters.len() + 1` of them.
    pub fn regions(&self) -> Vec<Obj> {
        let mut out = vec![self.cod];
        out.extend(self.letters.iter().map(|l| l.dom()));
        out
    }

    pub fn d_regions(&self) -> usize {
        self.regions().iter().filter(|&&o| o == Obj::D).count()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1_{:?}", self.dom);
        }
        let parts: Vec<&str> = self.letters.iter().map(|l| l.as_str()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Letter(Letter),
    Eta,
    Eps,
    Unit,
    /// Horizontal composite, outermost first.
    H(Vec<Node>),
    /// Vertical composite, last applied first.
    V(Vec<Node>),
}

/// A typed subterm with its boundary 1-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub kind: NodeKind,
    /// Column (1-based) where the subterm starts.
    pub pos: usize,
    pub src: Path,
    pub tgt: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PastingWord {
    pub text: String,
    pub root: Node,
}

impl PastingWord {
    pub fn source(&self) -> &Path {
        &self.root.src
    }

    pub fn target(&self) -> &Path {
        &self.root.tgt
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Compose,
    Open,
    Close,
    Atom(String),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, FreeAdjError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '∘' {
            out.push((Tok::Compose, col));
            i += 1;
        } else if c == '(' {
            out.push((Tok::Open, col));
            i += 1;
        } else if c == ')' {
            out.push((Tok::Close, col));
            i += 1;
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Atom(chars[start..i].iter().collect()), col));
        } else {
            return Err(FreeAdjError::Parse { pos: col, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ObjT {
    Known(Obj),
    Var(usize),
}

/// Untyped tree for the parser.
enum Raw {
    Atom(String, usize),
    H(Vec<Raw>, usize),
    V(Vec<Raw>, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn vertical(&mut self) -> Result<Raw, FreeAdjError> {
        let pos = self.col();
        let mut parts = vec![self.horizontal()?];
        while self.peek() == Some(&Tok::Compose) {
            self.at += 1;
            parts.push(self.horizontal()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Raw::V(parts, pos) })
    }

    fn horizontal(&mut self) -> Result<Raw, FreeAdjError> {
        let pos = self.col();
        let mut parts = Vec::new();
        while let Some(t) = self.peek() {
            match t {
                Tok::Atom(a) => {
                    parts.push(Raw::Atom(a.clone(), self.col()));
                    self.at += 1;
                }
                Tok::Open => {
                    let open = self.col();
                    self.at += 1;
                    let inner = self.vertical()?;
                    if self.peek() != Some(&Tok::Close) {
                        return Err(FreeAdjError::Parse { pos: open, msg: "unbalanced parenthesis".into() });
                    }
                    self.at += 1;
                    parts.push(inner);
                }
                _ => break,
            }
        }
        match parts.len() {
            0 => Err(FreeAdjError::Parse { pos, msg: "expected a term".into() }),
            1 => Ok(parts.pop().unwrap()),
            _ => Ok(Raw::H(parts, pos)),
        }
    }
}

struct Infer {
    parent: Vec<usize>,
    value: Vec<Option<Obj>>,
}

/// A node whose objects may still be unknown.
struct Pending {
    kind: PendingKind,
    pos: usize,
    src: Vec<Letter>,
    tgt: Vec<Letter>,
    dom: ObjT,
    cod: ObjT,
}

enum PendingKind {
    Letter(Letter),
    Eta,
    Eps,
    Unit,
    H(Vec<Pending>),
    V(Vec<Pending>),
}

impl Infer {
    fn fresh(&mut self) -> ObjT {
        self.parent.push(self.parent.len());
        self.value.push(None);
        ObjT::Var(self.parent.len() - 1)
    }

    fn find(&mut self, v: usize) -> usize {
        let p = self.parent[v];
        if p == v {
            return v;
        }
        let r = self.find(p);
        self.parent[v] = r;
        r
    }

    fn resolve(&mut self, o: ObjT) -> Option<Obj> {
        match o {
            ObjT::Known(k) => Some(k),
            ObjT::Var(v) => {
                let r = self.find(v);
                self.value[r]
            }
        }
    }

    fn unify(&mut self, a: ObjT, b: ObjT) -> bool {
        match (a, b) {
            (ObjT::Known(x), ObjT::Known(y)) => x == y,
            (ObjT::Known(x), ObjT::Var(v)) | (ObjT::Var(v), ObjT::Known(x)) => {
                let r = self.find(v);
                match self.value[r] {
                    Some(y) => x == y,
                    None => {
                        self.value[r] = Some(x);
                        true
                    }
                }
            }
            (ObjT::Var(u), ObjT::Var(v)) => {
                let (ru, rv) = (self.find(u), self.find(v));
                if ru == rv {
                    return true;
                }
                match (self.value[ru], self.value[rv]) {
                    (Some(x), Some(y)) if x != y => false,
                    (x, y) => {
                        self.parent[ru] = rv;
                        self.value[rv] = y.or(x);
                        true
                    }
                }
            }
        }
    }

    fn show(&mut self, letters: &[Letter], o: ObjT) -> String {
        if letters.is_empty() {
            return match self.resolve(o) {
                Some(k) => format!("1_{k:?}"),
                None => "1".into(),
            };
        }
        letters.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(" ")
    }

    fn infer(&mut self, raw: Raw) -> Result<Pending, FreeAdjError> {
        match raw {
            Raw::Atom(a, pos) => {
                let known = ObjT::Known;
                let (kind, src, tgt, dom, cod) = match a.as_str() {
                    "F" => (PendingKind::Letter(Letter::F), vec![Letter::F], vec![Letter::F], known(Obj::C), known(Obj::D)),
                    "G" => (PendingKind::Letter(Letter::G), vec![Letter::G], vec![Letter::G], known(Obj::D), known(Obj::C)),
                    "eta" => (PendingKind::Eta, vec![], vec![Letter::G, Letter::F], known(Obj::C), known(Obj::C)),
                    "eps" => (PendingKind::Eps, vec![Letter::F, Letter::G], vec![], known(Obj::D), known(Obj::D)),
                    "1" => {
                        let v = self.fresh();
                        (PendingKind::Unit, vec![], vec![], v, v)
                    }
                    "1_C" => (PendingKind::Unit, vec![], vec![], known(Obj::C), known(Obj::C)),
                    "1_D" => (PendingKind::Unit, vec![], vec![], known(Obj::D), known(Obj::D)),
                    other => return Err(FreeAdjError::Parse { pos, msg: format!("unknown atom {other:?}") }),
                };
                Ok(Pending { kind, pos, src, tgt, dom, cod })
            }
            Raw::H(parts, pos) => {
                let mut nodes = parts.into_iter().map(|p| self.infer(p)).collect::<Result<Vec<_>, _>>()?;
                let (mut src, mut tgt) = (Vec::new(), Vec::new());
                let dom = nodes.last().unwrap().dom;
                let cod = nodes[0].cod;
                for w in (1..nodes.len()).rev() {
                    let (outer, inner) = (&nodes[w - 1], &nodes[w]);
                    if !self.unify(outer.dom, inner.cod) {
                        return Err(FreeAdjError::IllTyped {
                            pos: outer.pos,
                            msg: format!("cannot whisker: {} does not end where {} starts", self.show(&outer.src, outer.dom), self.show(&inner.src, inner.cod)),
                        });
                    }
                }
                for n in &mut nodes {
                    src.append(&mut n.src.clone());
                    tgt.append(&mut n.tgt.clone());
                }
                Ok(Pending { kind: PendingKind::H(nodes), pos, src, tgt, dom, cod })
            }
            Raw::V(parts, pos) => {
                let nodes = parts.into_iter().map(|p| self.infer(p)).collect::<Result<Vec<_>, _>>()?;
                for w in (1..nodes.len()).rev() {
                    let (after, before) = (&nodes[w - 1], &nodes[w]);
                    let objects = self.unify(after.dom, before.dom) && self.unify(after.cod, before.cod);
                    if !objects || after.src != before.tgt {
                        let (a, b) = (self.show(&after.src, after.dom), self.show(&before.tgt, before.dom));
                        return Err(FreeAdjError::IllTyped { pos: after.pos, msg: format!("cannot compose: source {a} does not match target {b}") });
                    }
                }
                let first = nodes.last().unwrap();
                let (src, dom, cod) = (first.src.clone(), first.dom, first.cod);
                let tgt = nodes[0].tgt.clone();
                Ok(Pending { kind: PendingKind::V(nodes), pos, src, tgt, dom, cod })
            }
        }
    }

    /// Fix every object, defaulting unconstrained identities to `C`.
    fn finish(&mut self, p: Pending) -> Node {
        let dom = self.resolve(p.dom).unwrap_or(Obj::C);
        let cod = self.resolve(p.cod).unwrap_or(Obj::C);
        let kind = match p.kind {
            PendingKind::Letter(l) => NodeKind::Letter(l),
            PendingKind::Eta => NodeKind::Eta,
            PendingKind::Eps => NodeKind::Eps,
            PendingKind::Unit => NodeKind::Unit,
            PendingKind::H(ns) => NodeKind::H(ns.into_iter().map(|n| self.finish(n)).collect()),
            PendingKind::V(ns) => NodeKind::V(ns.into_iter().map(|n| self.finish(n)).collect()),
        };
        let src = Path::new(p.src, dom, cod).expect("typed boundary");
        let tgt = Path::new(p.tgt, dom, cod).expect("typed boundary");
        Node { kind, pos: p.pos, src, tgt }
    }
}

pub fn parse_word(text: &str) -> Result<PastingWord, FreeAdjError> {
    let toks = tokenize(text)?;
    let end = text.chars().count() + 1;
    let mut parser = Parser { toks, at: 0, end };
    let raw = parser.vertical()?;
    if parser.at < parser.toks.len() {
        let msg = match parser.peek() {
            Some(Tok::Close) => "unbalanced parenthesis",
            _ => "unexpected token",
        };
        return Err(FreeAdjError::Parse { pos: parser.col(), msg: msg.into() });
    }
    let mut inf = Infer { parent: Vec::new(), value: Vec::new() };
    let pending = inf.infer(raw)?;
    let root = inf.finish(pending);
    Ok(PastingWord { text: text.to_string(), root })
}
