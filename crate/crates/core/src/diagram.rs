//! Decorated partial matchings on two columns of vertices.
//!
//! A diagram of size `n` has `2n` slots: slots `1..=n` are the left column
//! (top to bottom) and slots `n+1..=2n` the right column. Each slot is either
//! isolated or matched to one other slot; edges may carry a blob.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A vertex `index` (1-based) on one side of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn left(index: usize) -> Self {
        Vertex {
            side: Side::Left,
            index,
        }
    }

    pub fn right(index: usize) -> Self {
        Vertex {
            side: Side::Right,
            index,
        }
    }

    /// The 1-based slot of this vertex in a diagram of size `n`.
    pub fn slot(&self, n: usize) -> usize {
        match self.side {
            Side::Left => self.index,
            Side::Right => n + self.index,
        }
    }

    pub fn from_slot(slot: usize, n: usize) -> Self {
        if slot <= n {
            Vertex::left(slot)
        } else {
            Vertex::right(slot - n)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "{}", self.index),
            Side::Right => write!(f, "{}'", self.index),
        }
    }
}

/// The diagram families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyTag {
    RookBrauer,
    Motzkin,
    Rook,
    PlanarRook,
    Brauer,
    WalledBrauer { r: usize, s: usize },
    TemperleyLieb,
    Blob,
    DiluteTL,
}

impl FamilyTag {
    pub const NAMES: [&'static str; 9] = [
        "rb",
        "motzkin",
        "rook",
        "planar-rook",
        "brauer",
        "walled",
        "tl",
        "blob",
        "dtl",
    ];

    /// Looks a family up by short name. `walled` takes its wall from `r`/`s`.
    pub fn from_name(name: &str, r: Option<usize>, s: Option<usize>) -> Result<Self> {
        let tag = match name.to_ascii_lowercase().as_str() {
            "rb" | "rook-brauer" => FamilyTag::RookBrauer,
            "motzkin" => FamilyTag::Motzkin,
            "rook" => FamilyTag::Rook,
            "planar-rook" | "pr" => FamilyTag::PlanarRook,
            "brauer" => FamilyTag::Brauer,
            "walled" | "walled-brauer" => match (r, s) {
                (Some(r), Some(s)) => FamilyTag::WalledBrauer { r, s },
                _ => {
                    return Err(Error::ParamMismatch {
                        family: "walled".into(),
                        reason: "needs both r and s".into(),
                    })
                }
            },
            "tl" | "temperley-lieb" => FamilyTag::TemperleyLieb,
            "blob" => FamilyTag::Blob,
            "dtl" | "dilute-tl" => FamilyTag::DiluteTL,
            other => {
                return Err(Error::ParamMismatch {
                    family: other.to_string(),
                    reason: format!(
                        "unknown family (expected one of {})",
                        Self::NAMES.join(", ")
                    ),
                })
            }
        };
        Ok(tag)
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            FamilyTag::RookBrauer => "rb",
            FamilyTag::Motzkin => "motzkin",
            FamilyTag::Rook => "rook",
            FamilyTag::PlanarRook => "planar-rook",
            FamilyTag::Brauer => "brauer",
            FamilyTag::WalledBrauer { .. } => "walled",
            FamilyTag::TemperleyLieb => "tl",
            FamilyTag::Blob => "blob",
            FamilyTag::DiluteTL => "dtl",
        }
    }

    pub fn is_planar(&self) -> bool {
        matches!(
            self,
            FamilyTag::Motzkin
                | FamilyTag::PlanarRook
                | FamilyTag::TemperleyLieb
                | FamilyTag::Blob
                | FamilyTag::DiluteTL
        )
    }

    pub fn allows_isolated(&self) -> bool {
        matches!(
            self,
            FamilyTag::RookBrauer
                | FamilyTag::Motzkin
                | FamilyTag::Rook
                | FamilyTag::PlanarRook
                | FamilyTag::DiluteTL
        )
    }

    pub fn allows_arcs(&self) -> bool {
        !matches!(self, FamilyTag::Rook | FamilyTag::PlanarRook)
    }

    /// Subalgebras of the rook-Brauer algebra (everything but blob and dilute).
    pub fn is_rook_brauer_subfamily(&self) -> bool {
        !matches!(self, FamilyTag::Blob | FamilyTag::DiluteTL)
    }

    /// Largest `n` accepted by [`enumerate`] without an explicit cap.
    pub fn default_cap(&self) -> usize {
        if self.is_planar() {
            8
        } else {
            6
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::WalledBrauer { r, s } => write!(f, "walled({r},{s})"),
            other => write!(f, "{}", other.short_name()),
        }
    }
}

/// A diagram: partner array over `2n` slots plus blobbed slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    /// `partner[s - 1]` is the slot joined to slot `s`, or 0.
    partner: Vec<u8>,
    /// Bit `s - 1` is set for both endpoints of every blobbed edge.
    blobs: u64,
}

pub(crate) const MAX_N: usize = 31;

impl Diagram {
    /// The all-isolated diagram.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_N, "diagram size {n} above {MAX_N}");
        Diagram {
            n,
            partner: vec![0; 2 * n],
            blobs: 0,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut d = Self::empty(n);
        for i in 1..=n {
            d.join(i, n + i);
        }
        d
    }

    /// Builds a diagram from 1-based partner slots (0 = isolated) and a list
    /// of blobbed edges given as slot pairs.
    pub fn from_partner(partner: &[usize], blobs: &[(usize, usize)]) -> Result<Self> {
        if !partner.len().is_multiple_of(2) {
            return Err(Error::MalformedDiagram(
                "partner array has odd length".into(),
            ));
        }
        let n = partner.len() / 2;
        if n > MAX_N {
            return Err(Error::SizeTooLarge {
                size: n,
                cap: MAX_N,
            });
        }
        let mut d = Self::empty(n);
        for (i, &p) in partner.iter().enumerate() {
            let s = i + 1;
            if p > 2 * n {
                return Err(Error::MalformedDiagram(format!("slot {s} points to {p}")));
            }
            if p == s {
                return Err(Error::MalformedDiagram(format!(
                    "slot {s} joined to itself"
                )));
            }
            if p != 0 && partner[p - 1] != s {
                return Err(Error::MalformedDiagram(format!(
                    "slots {s} and {p} disagree"
                )));
            }
            d.partner[i] = p as u8;
        }
        for &(a, b) in blobs {
            if a == 0 || a > 2 * n || d.partner_slot(a) != Some(b) {
                return Err(Error::MalformedDiagram(format!(
                    "blob on non-edge ({a},{b})"
                )));
            }
            d.set_blob(a, true);
        }
        Ok(d)
    }

    /// Builds a diagram from vertex pairs; `blobbed` lists which of the edges
    /// carry a blob.
    pub fn from_edges(
        n: usize,
        edges: &[(Vertex, Vertex)],
        blobbed: &[(Vertex, Vertex)],
    ) -> Result<Self> {
        let mut partner = vec![0usize; 2 * n];
        for &(a, b) in edges.iter() {
            for v in [a, b] {
                if v.index == 0 || v.index > n {
                    return Err(Error::MalformedDiagram(format!("vertex {v} out of range")));
                }
            }
            let (sa, sb) = (a.slot(n), b.slot(n));
            if sa == sb || partner[sa - 1] != 0 || partner[sb - 1] != 0 {
                return Err(Error::MalformedDiagram(format!(
                    "vertex reused in edge {a}-{b}"
                )));
            }
            partner[sa - 1] = sb;
            partner[sb - 1] = sa;
        }
        let blobs: Vec<_> = blobbed
            .iter()
            .map(|(a, b)| (a.slot(n), b.slot(n)))
            .collect();
        Self::from_partner(&partner, &blobs)
    }

    /// Parses a compact edge list such as `"1-2' 3-4 1'-2'*"`: plain numbers
    /// are left vertices, primed numbers right vertices, and a trailing `*`
    /// marks a blobbed edge.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let bad = |t: &str| Error::MalformedDiagram(format!("cannot parse edge {t:?}"));
        let vertex = |t: &str| -> Result<Vertex> {
            let (num, side) = match t.strip_suffix('\'') {
                Some(rest) => (rest, Side::Right),
                None => (t, Side::Left),
            };
            let index = num.trim().parse().map_err(|_| bad(t))?;
            Ok(Vertex { side, index })
        };
        let mut edges = Vec::new();
        let mut blobbed = Vec::new();
        for tok in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let (body, blob) = match tok.strip_suffix('*') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let (a, b) = body.split_once('-').ok_or_else(|| bad(tok))?;
            let e = (vertex(a)?, vertex(b)?);
            edges.push(e);
            if blob {
                blobbed.push(e);
            }
        }
        Self::from_edges(n, &edges, &blobbed)
    }

    pub(crate) fn join(&mut self, a: usize, b: usize) {
        self.partner[a - 1] = b as u8;
        self.partner[b - 1] = a as u8;
    }

    pub(crate) fn set_blob(&mut self, slot: usize, on: bool) {
        let other = self.partner_slot(slot).expect("blob on an edge");
        let mask = (1u64 << (slot - 1)) | (1u64 << (other - 1));
        if on {
            self.blobs |= mask;
        } else {
            self.blobs &= !mask;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The slot joined to `slot`, if any.
    pub fn partner_slot(&self, slot: usize) -> Option<usize> {
        match self.partner[slot - 1] {
            0 => None,
            p => Some(p as usize),
        }
    }

    pub fn partner_of(&self, v: Vertex) -> Option<Vertex> {
        self.partner_slot(v.slot(self.n))
            .map(|s| Vertex::from_slot(s, self.n))
    }

    pub fn is_blobbed_slot(&self, slot: usize) -> bool {
        self.blobs >> (slot - 1) & 1 == 1
    }

    pub fn has_blobs(&self) -> bool {
        self.blobs != 0
    }

    /// The partner array in 1-based slot form.
    pub fn partner_array(&self) -> Vec<usize> {
        self.partner.iter().map(|&p| p as usize).collect()
    }

    /// Edges as slot pairs `(a, b, blobbed)` with `a < b`, by increasing `a`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        (1..=2 * self.n).filter_map(move |a| match self.partner_slot(a) {
            Some(b) if a < b => Some((a, b, self.is_blobbed_slot(a))),
            _ => None,
        })
    }

    pub fn is_propagating_slot_pair(&self, a: usize, b: usize) -> bool {
        (a <= self.n) != (b <= self.n)
    }

    /// Propagating edges as `(left index, right index, blobbed)` by left index.
    pub fn propagating(&self) -> Vec<(usize, usize, bool)> {
        (1..=self.n)
            .filter_map(|i| match self.partner_slot(i) {
                Some(p) if p > self.n => Some((i, p - self.n, self.is_blobbed_slot(i))),
                _ => None,
            })
            .collect()
    }

    pub fn propagating_count(&self) -> usize {
        (1..=self.n)
            .filter(|&i| matches!(self.partner_slot(i), Some(p) if p > self.n))
            .count()
    }

    pub fn is_permutation(&self) -> bool {
        self.propagating_count() == self.n
    }

    pub fn is_identity(&self) -> bool {
        self.blobs == 0 && (1..=self.n).all(|i| self.partner_slot(i) == Some(self.n + i))
    }

    /// Swaps the two columns.
    pub fn flip(&self) -> Diagram {
        let n = self.n;
        let swap = |s: usize| {
            if s == 0 {
                0
            } else if s <= n {
                s + n
            } else {
                s - n
            }
        };
        let mut d = Diagram::empty(n);
        for s in 1..=2 * n {
            d.partner[swap(s) - 1] = swap(self.partner[s - 1] as usize) as u8;
        }
        for s in 1..=2 * n {
            if self.is_blobbed_slot(s) {
                d.blobs |= 1 << (swap(s) - 1);
            }
        }
        d
    }

    /// Position of a slot in the boundary cyclic order `1..n, n'..1'`.
    fn cyclic_position(&self, slot: usize) -> usize {
        if slot <= self.n {
            slot
        } else {
            3 * self.n + 1 - slot
        }
    }

    /// No two edges interleave in the boundary order.
    pub fn is_planar(&self) -> bool {
        let spans: Vec<(usize, usize)> = self
            .edges()
            .map(|(a, b, _)| {
                let (x, y) = (self.cyclic_position(a), self.cyclic_position(b));
                (x.min(y), x.max(y))
            })
            .collect();
        spans.iter().enumerate().all(|(i, &(a, b))| {
            spans[i + 1..]
                .iter()
                .all(|&(c, d)| (a < c && c < b) == (a < d && d < b))
        })
    }

    fn is_walled(&self, r: usize) -> bool {
        let n = self.n;
        let side_block = |slot: usize| {
            let idx = if slot <= n { slot } else { slot - n };
            idx <= r
        };
        self.edges().all(|(a, b, _)| {
            if self.is_propagating_slot_pair(a, b) {
                side_block(a) == side_block(b)
            } else {
                side_block(a) != side_block(b)
            }
        })
    }

    fn blob_rule_violation(&self) -> Option<String> {
        let n = self.n;
        let prop = self.propagating();
        let top = prop.first().copied();
        for &(l, r, b) in &prop {
            if b {
                let (tl, tr, _) = top.unwrap();
                if l != tl || r != tr || prop.iter().any(|&(_, rr, _)| rr < r) {
                    return Some(format!(
                        "blob on propagating edge {l}-{r}' below the top one"
                    ));
                }
            }
        }
        for side in [Side::Left, Side::Right] {
            let base = if side == Side::Left { 0 } else { n };
            let top_end = top.map(|(l, r, _)| if side == Side::Left { l } else { r });
            let arcs: Vec<(usize, usize, bool)> = (1..=n)
                .filter_map(|i| match self.partner_slot(base + i) {
                    Some(p) if p > base && p <= base + n && p - base > i => {
                        Some((i, p - base, self.is_blobbed_slot(base + i)))
                    }
                    _ => None,
                })
                .collect();
            for &(a, b, blobbed) in &arcs {
                if !blobbed {
                    continue;
                }
                if arcs.iter().any(|&(c, d, _)| c < a && b < d) {
                    return Some(format!("blob on nested arc {a}-{b}"));
                }
                if let Some(t) = top_end {
                    if b >= t {
                        return Some(format!(
                            "blob on arc {a}-{b} below the top propagating edge"
                        ));
                    }
                }
            }
        }
        None
    }

    /// The first family rule this diagram breaks, if any.
    pub fn family_violation(&self, fam: FamilyTag) -> Option<String> {
        if let FamilyTag::WalledBrauer { r, s } = fam {
            if r + s != self.n {
                return Some(format!("walled({r},{s}) needs size {}", r + s));
            }
        }
        if self.blobs != 0 && fam != FamilyTag::Blob {
            return Some("blobs only occur in blob diagrams".into());
        }
        if !fam.allows_isolated() && self.partner.contains(&0) {
            return Some("isolated vertex".into());
        }
        if !fam.allows_arcs()
            && self
                .edges()
                .any(|(a, b, _)| !self.is_propagating_slot_pair(a, b))
        {
            return Some("non-propagating edge".into());
        }
        if fam.is_planar() && !self.is_planar() {
            return Some("crossing edges".into());
        }
        if let FamilyTag::WalledBrauer { r, .. } = fam {
            if !self.is_walled(r) {
                return Some("edge on the wrong side of the wall".into());
            }
        }
        if fam == FamilyTag::Blob {
            return self.blob_rule_violation();
        }
        None
    }

    pub fn is_member(&self, fam: FamilyTag) -> bool {
        self.family_violation(fam).is_none()
    }

    pub(crate) fn check_member(&self, fam: FamilyTag) -> Result<()> {
        match self.family_violation(fam) {
            None => Ok(()),
            Some(reason) => Err(Error::FamilyViolation {
                family: fam.to_string(),
                reason,
            }),
        }
    }

    /// Ordering key: more propagating edges first, then the partner array,
    /// then the blob mask. The identity is the least diagram of its size.
    pub fn canonical_key(&self) -> (usize, usize, Vec<u8>, u64) {
        (
            self.n,
            self.n - self.propagating_count(),
            self.partner.clone(),
            self.blobs,
        )
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| other.propagating_count().cmp(&self.propagating_count()))
            .then_with(|| self.partner.cmp(&other.partner))
            .then_with(|| self.blobs.cmp(&other.blobs))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges()
            .map(|(a, b, blob)| {
                format!(
                    "{}-{}{}",
                    Vertex::from_slot(a, self.n),
                    Vertex::from_slot(b, self.n),
                    if blob { "*" } else { "" }
                )
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// Parses `n:edges`, e.g. `2:1-2 1'-2'`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::MalformedDiagram(format!("expected n:edges, got {s:?}")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::MalformedDiagram(format!("bad size in {s:?}")))?;
        Diagram::parse(n, rest.trim().trim_start_matches('[').trim_end_matches(']'))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    partner: Vec<usize>,
    blobs: Vec<[usize; 2]>,
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            n: self.n,
            partner: self.partner_array(),
            blobs: self
                .edges()
                .filter(|e| e.2)
                .map(|(a, b, _)| [a, b])
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(de)?;
        if raw.partner.len() != 2 * raw.n {
            return Err(serde::de::Error::custom("partner length must be 2n"));
        }
        let blobs: Vec<_> = raw.blobs.iter().map(|b| (b[0], b[1])).collect();
        Diagram::from_partner(&raw.partner, &blobs).map_err(serde::de::Error::custom)
    }
}

/// The outcome of stacking two diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionResult {
    /// `None` exactly when the product vanishes (dilute floating edges).
    pub diagram: Option<Diagram>,
    /// Closed loops in the middle column (unblobbed ones only, for blob diagrams).
    pub loops: u32,
    /// Middle components that are not loops: isolated vertices and open paths.
    pub isolated_middle: u32,
    pub blobbed_loops: u32,
    pub is_zero: bool,
}

impl CompositionResult {
    pub fn exponents(&self) -> (u32, u32, u32) {
        (self.loops, self.isolated_middle, self.blobbed_loops)
    }
}

/// Stacks `d1` to the left of `d2` and reads off the composite.
pub fn compose(d1: &Diagram, d2: &Diagram, fam: FamilyTag) -> Result<CompositionResult> {
    if d1.n != d2.n {
        return Err(Error::SizeMismatch(d1.n, d2.n));
    }
    d1.check_member(fam)?;
    d2.check_member(fam)?;
    Ok(compose_unchecked(d1, d2, fam))
}

/// [`compose`] without size and membership checks.
pub(crate) fn compose_unchecked(d1: &Diagram, d2: &Diagram, fam: FamilyTag) -> CompositionResult {
    let n = d1.n;
    // Vertices: left column 0..n, middle n..2n, right 2n..3n.
    let lmap = |s: usize| s - 1;
    let rmap = |s: usize| n + s - 1;

    if fam == FamilyTag::DiluteTL {
        for m in 1..=n {
            let deg = d1.partner_slot(n + m).is_some() as u8 + d2.partner_slot(m).is_some() as u8;
            if deg == 1 {
                return CompositionResult {
                    diagram: None,
                    loops: 0,
                    isolated_middle: 0,
                    blobbed_loops: 0,
                    is_zero: true,
                };
            }
        }
    }

    let total = 3 * n;
    let mut uf = UnionFind::<usize>::new(total);
    let mut edges: Vec<(usize, usize, bool)> = Vec::with_capacity(2 * n);
    for (a, b, blob) in d1.edges() {
        edges.push((lmap(a), lmap(b), blob));
    }
    for (a, b, blob) in d2.edges() {
        edges.push((rmap(a), rmap(b), blob));
    }
    for &(a, b, _) in &edges {
        uf.union(a, b);
    }

    let mut vertex_count = vec![0u32; total];
    let mut edge_count = vec![0u32; total];
    let mut blobbed = vec![false; total];
    let mut outer: Vec<Vec<usize>> = vec![Vec::new(); total];
    for v in 0..total {
        let root = uf.find(v);
        vertex_count[root] += 1;
        if v < n || v >= 2 * n {
            outer[root].push(v);
        }
    }
    for &(a, _, blob) in &edges {
        let root = uf.find(a);
        edge_count[root] += 1;
        blobbed[root] |= blob;
    }

    let mut out = Diagram::empty(n);
    let slot_of = |v: usize| if v < n { v + 1 } else { n + (v - 2 * n) + 1 };
    let (mut loops, mut isolated, mut blob_loops) = (0u32, 0u32, 0u32);
    for root in 0..total {
        if vertex_count[root] == 0 {
            continue;
        }
        match outer[root].as_slice() {
            [] => {
                if edge_count[root] == vertex_count[root] {
                    if blobbed[root] && fam == FamilyTag::Blob {
                        blob_loops += 1;
                    } else {
                        loops += 1;
                    }
                } else if fam != FamilyTag::DiluteTL {
                    isolated += 1;
                }
            }
            [a, b] => {
                let (sa, sb) = (slot_of(*a), slot_of(*b));
                out.join(sa, sb);
                if blobbed[root] {
                    out.set_blob(sa, true);
                }
            }
            _ => {}
        }
    }
    CompositionResult {
        diagram: Some(out),
        loops,
        isolated_middle: isolated,
        blobbed_loops: blob_loops,
        is_zero: false,
    }
}

/// All member diagrams of size `n`, in canonical order.
pub fn enumerate(fam: FamilyTag, n: usize) -> Result<Vec<Diagram>> {
    enumerate_with_cap(fam, n, fam.default_cap())
}

pub fn enumerate_with_cap(fam: FamilyTag, n: usize, cap: usize) -> Result<Vec<Diagram>> {
    if n > cap.min(MAX_N) {
        return Err(Error::SizeTooLarge {
            size: n,
            cap: cap.min(MAX_N),
        });
    }
    if let FamilyTag::WalledBrauer { r, s } = fam {
        if r + s != n {
            return Err(Error::ParamMismatch {
                family: fam.to_string(),
                reason: format!("size {n} differs from r + s = {}", r + s),
            });
        }
    }
    let mut shapes = Vec::new();
    if fam.is_planar() {
        planar_matchings(n, fam.allows_isolated(), &mut shapes);
    } else {
        all_matchings(n, fam.allows_isolated(), &mut shapes);
    }
    let mut out: Vec<Diagram> = Vec::new();
    for d in shapes {
        if fam == FamilyTag::Blob {
            out.extend(blob_decorations(&d));
        } else if d.is_member(fam) {
            out.push(d);
        }
    }
    out.sort();
    Ok(out)
}

/// Every legal blob decoration of a Temperley-Lieb diagram.
fn blob_decorations(d: &Diagram) -> Vec<Diagram> {
    if !d.is_member(FamilyTag::TemperleyLieb) {
        return Vec::new();
    }
    let edges: Vec<usize> = d.edges().map(|e| e.0).collect();
    (0u32..1 << edges.len())
        .filter_map(|mask| {
            let mut x = d.clone();
            for (k, &a) in edges.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    x.set_blob(a, true);
                }
            }
            x.is_member(FamilyTag::Blob).then_some(x)
        })
        .collect()
}

fn all_matchings(n: usize, isolated: bool, out: &mut Vec<Diagram>) {
    fn go(d: &mut Diagram, s: usize, isolated: bool, out: &mut Vec<Diagram>) {
        let m = 2 * d.n;
        if s > m {
            out.push(d.clone());
            return;
        }
        if d.partner[s - 1] != 0 {
            go(d, s + 1, isolated, out);
            return;
        }
        if isolated {
            go(d, s + 1, isolated, out);
        }
        for t in s + 1..=m {
            if d.partner[t - 1] == 0 {
                d.join(s, t);
                go(d, s + 1, isolated, out);
                d.partner[s - 1] = 0;
                d.partner[t - 1] = 0;
            }
        }
    }
    let mut d = Diagram::empty(n);
    go(&mut d, 1, isolated, out);
}

/// Non-crossing partial matchings, built along the boundary cyclic order.
fn planar_matchings(n: usize, isolated: bool, out: &mut Vec<Diagram>) {
    let slot_at = |pos: usize| if pos <= n { pos } else { 3 * n + 1 - pos };
    fn go(
        d: &mut Diagram,
        pos: usize,
        stack: &mut Vec<usize>,
        isolated: bool,
        slot_at: &dyn Fn(usize) -> usize,
        out: &mut Vec<Diagram>,
    ) {
        let m = 2 * d.n;
        if stack.len() > m + 1 - pos {
            return;
        }
        if pos > m {
            if stack.is_empty() {
                out.push(d.clone());
            }
            return;
        }
        let s = slot_at(pos);
        if isolated {
            go(d, pos + 1, stack, isolated, slot_at, out);
        }
        stack.push(s);
        go(d, pos + 1, stack, isolated, slot_at, out);
        stack.pop();
        if let Some(top) = stack.pop() {
            d.join(top, s);
            go(d, pos + 1, stack, isolated, slot_at, out);
            d.partner[top - 1] = 0;
            d.partner[s - 1] = 0;
            stack.push(top);
        }
    }
    let mut d = Diagram::empty(n);
    go(&mut d, 1, &mut Vec::new(), isolated, &slot_at, out);
}
