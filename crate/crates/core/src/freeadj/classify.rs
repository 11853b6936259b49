//! Normal forms: a 2-cell of the free adjunction is determined by its
//! boundary and where it sends the `D`-regions of its source.

use std::fmt;

use super::ordinal::{glued_sum, ordinal_sum, OrdinalMap};
use super::word::{parse_word, Letter, Node, NodeKind, Obj, Path, PastingWord};
use super::FreeAdjError;

/// Which presentation of the hom-category a 2-cell lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomTag {
    /// `C -> C`: all monotone maps.
    Delta,
    /// `D -> D`: monotone maps of gaps, reversed.
    DeltaOp,
    /// `D -> C`: maps preserving the top element.
    DeltaInfinity,
    /// `C -> D`: maps preserving the bottom element.
    DeltaMinusInfinity,
}

impl HomTag {
    pub fn of(dom: Obj, cod: Obj) -> Self {
        match (dom, cod) {
            (Obj::C, Obj::C) => HomTag::Delta,
            (Obj::D, Obj::D) => HomTag::DeltaOp,
            (Obj::D, Obj::C) => HomTag::DeltaInfinity,
            (Obj::C, Obj::D) => HomTag::DeltaMinusInfinity,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            HomTag::Delta => "Delta+",
            HomTag::DeltaOp => "Delta+^op",
            HomTag::DeltaInfinity => "Delta_inf",
            HomTag::DeltaMinusInfinity => "Delta_-inf",
        }
    }
}

/// A classified 2-cell: boundary plus the map of `D`-regions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Classified {
    pub source: Path,
    pub target: Path,
    pub regions: OrdinalMap,
}

impl Classified {
    pub fn tag(&self) -> HomTag {
        HomTag::of(self.source.dom, self.source.cod)
    }

    /// The ordinal map in the presentation named by `tag`.
    pub fn normal_form(&self) -> OrdinalMap {
        match self.tag() {
            HomTag::DeltaOp => self.regions.gap_dual().expect("ends are preserved"),
            _ => self.regions.clone(),
        }
    }
}

impl fmt::Display for Classified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {} in {}, {}", self.source, self.target, self.tag().as_str(), self.normal_form())
    }
}

fn regions_of(node: &Node) -> OrdinalMap {
    match &node.kind {
        NodeKind::Letter(_) => OrdinalMap::identity(1),
        NodeKind::Eta => OrdinalMap::new(0, 1, vec![]).unwrap(),
        NodeKind::Eps => OrdinalMap::new(2, 1, vec![0, 0]).unwrap(),
        NodeKind::Unit => OrdinalMap::identity(usize::from(node.src.dom == Obj::D)),
        NodeKind::H(parts) => {
            let mut acc = regions_of(parts.last().unwrap());
            for p in parts.iter().rev().skip(1) {
                let outer = regions_of(p);
                acc = match p.src.dom {
                    Obj::C => ordinal_sum(&outer, &acc),
                    Obj::D => glued_sum(&outer, &acc).expect("shared region is fixed"),
                };
            }
            acc
        }
        NodeKind::V(parts) => {
            let mut acc = regions_of(parts.last().unwrap());
            for p in parts.iter().rev().skip(1) {
                acc = regions_of(p).after(&acc).expect("typed composite");
            }
            acc
        }
    }
}

pub fn classify(word: &PastingWord) -> Classified {
    Classified { source: word.source().clone(), target: word.target().clone(), regions: regions_of(&word.root) }
}

pub fn classify_text(text: &str) -> Result<Classified, FreeAdjError> {
    Ok(classify(&parse_word(text)?))
}

/// Equal 2-cells have the same boundary and the same normal form.
pub fn equal_2cells(a: &PastingWord, b: &PastingWord) -> Result<bool, FreeAdjError> {
    if a.source() != b.source() || a.target() != b.target() {
        return Err(FreeAdjError::BoundaryMismatch(format!(
            "{} => {} versus {} => {}",
            a.source(),
            a.target(),
            b.source(),
            b.target()
        )));
    }
    Ok(classify(a) == classify(b))
}

/// The alternating word with the given ends and `D`-region count.
pub fn standard_path(dom: Obj, cod: Obj, d_regions: usize) -> Option<Path> {
    let mut letters = Vec::new();
    let mut obj = dom;
    let mut count = usize::from(dom == Obj::D);
    loop {
        if obj == cod && count == d_regions {
            break;
        }
        if count > d_regions {
            return None;
        }
        let l = if obj == Obj::C { Letter::F } else { Letter::G };
        letters.insert(0, l);
        obj = l.cod();
        if obj == Obj::D {
            count += 1;
        }
    }
    Path::new(letters, dom, cod)
}

/// The `D`-region map behind a normal form of the given hom.
pub fn regions_from_normal_form(tag: HomTag, nf: &OrdinalMap) -> Option<OrdinalMap> {
    let regions = match tag {
        HomTag::DeltaOp => {
            let values = (0..=nf.target_size).map(|i| nf.values.iter().filter(|&&v| v < i).count()).collect();
            OrdinalMap::new(nf.target_size + 1, nf.source_size + 1, values)?
        }
        _ => nf.clone(),
    };
    let ok = match tag {
        HomTag::Delta => true,
        HomTag::DeltaOp => regions.preserves_bottom() && regions.preserves_top(),
        HomTag::DeltaInfinity => regions.preserves_top(),
        HomTag::DeltaMinusInfinity => regions.preserves_bottom(),
    };
    ok.then_some(regions)
}

fn layer(letters: &[Letter], at: usize, atom: &str) -> String {
    let mut parts: Vec<&str> = letters[..at].iter().map(|l| l.as_str()).collect();
    parts.push(atom);
    parts.extend(letters[at..].iter().map(|l| l.as_str()));
    parts.join(" ")
}

/// A word realizing the given `D`-region map out of `source`: counits merge
/// regions left to right, then units insert the missing ones.
pub fn canonical_word(source: &Path, regions: &OrdinalMap) -> Option<String> {
    if regions.source_size != source.d_regions() {
        return None;
    }
    match HomTag::of(source.dom, source.cod) {
        HomTag::Delta => {}
        HomTag::DeltaOp => {
            if !(regions.preserves_bottom() && regions.preserves_top()) {
                return None;
            }
        }
        HomTag::DeltaInfinity => {
            if !regions.preserves_top() {
                return None;
            }
        }
        HomTag::DeltaMinusInfinity => {
            if !regions.preserves_bottom() {
                return None;
            }
        }
    }
    let (dom, cod) = (source.dom, source.cod);
    let mut letters = source.letters.clone();
    let mut images = regions.values.clone();
    let mut layers = Vec::new();
    let d_positions = |letters: &[Letter]| -> Vec<usize> {
        let path = Path { letters: letters.to_vec(), dom, cod };
        path.regions().iter().enumerate().filter(|(_, &o)| o == Obj::D).map(|(r, _)| r).collect()
    };
    let mut i = 0;
    while i + 1 < images.len() {
        if images[i] == images[i + 1] {
            let a = d_positions(&letters)[i];
            let mut rest = letters.clone();
            rest.drain(a..a + 2);
            layers.push(layer(&rest, a, "eps"));
            letters = rest;
            images.remove(i + 1);
        } else {
            i += 1;
        }
    }
    for t in 0..regions.target_size {
        if images.contains(&t) {
            continue;
        }
        let k = images.iter().filter(|&&v| v < t).count();
        let pos = d_positions(&letters);
        let r = if k == 0 {
            match pos.first() {
                Some(&p) => p.checked_sub(1)?,
                None => 0,
            }
        } else {
            pos[k - 1] + 1
        };
        if r > letters.len() {
            return None;
        }
        layers.push(layer(&letters, r, "eta"));
        letters.splice(r..r, [Letter::G, Letter::F]);
        images.insert(k, t);
    }
    if layers.is_empty() {
        return Some(source.to_string());
    }
    layers.reverse();
    Some(layers.join(" ∘ "))
}
