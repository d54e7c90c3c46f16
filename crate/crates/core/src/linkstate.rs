//! One column of a sliced diagram, the moves between such columns, and the
//! graphs obtained by gluing columns and diagrams together.
//!
//! Vertices are numbered `1..=n` from the top. Each vertex carries a defect
//! (the stub of a cut propagating edge), an arc to another vertex, or
//! nothing.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSpec;
use crate::diagram::{compose, enumerate, Diagram, FamilyTag};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Slot {
    Defect,
    Isolated,
    Arc(u8),
}

/// A right (or left) link state.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkState {
    n: usize,
    slots: Vec<Slot>,
    /// Bit `v - 1` marks a blob at vertex `v`; both ends of a blobbed arc are set.
    blobs: u64,
}

impl LinkState {
    /// Builds a link state from its parts. `blobbed` lists vertices; naming
    /// either end of an arc blobs the whole arc.
    pub fn new(
        n: usize,
        arcs: &[(usize, usize)],
        defects: &[usize],
        isolated: &[usize],
        blobbed: &[usize],
    ) -> Result<Self> {
        let bad = |m: String| Error::MalformedDiagram(m);
        if n > 63 {
            return Err(Error::SizeTooLarge { size: n, cap: 63 });
        }
        let mut slots: Vec<Option<Slot>> = vec![None; n];
        let mut put = |v: usize, s: Slot| -> Result<()> {
            if v == 0 || v > n {
                return Err(bad(format!("vertex {v} out of range")));
            }
            if slots[v - 1].replace(s).is_some() {
                return Err(bad(format!("vertex {v} used twice")));
            }
            Ok(())
        };
        for &(a, b) in arcs {
            if a == b {
                return Err(bad(format!("arc {a}-{b} is a loop")));
            }
            put(a, Slot::Arc(b as u8))?;
            put(b, Slot::Arc(a as u8))?;
        }
        for &d in defects {
            put(d, Slot::Defect)?;
        }
        for &i in isolated {
            put(i, Slot::Isolated)?;
        }
        let slots: Vec<Slot> = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| bad(format!("vertex {} unassigned", i + 1))))
            .collect::<Result<_>>()?;
        let mut p = LinkState { n, slots, blobs: 0 };
        for &v in blobbed {
            if v == 0 || v > n {
                return Err(bad(format!("blob on vertex {v} out of range")));
            }
            match p.slots[v - 1] {
                Slot::Isolated => return Err(bad(format!("blob on isolated vertex {v}"))),
                Slot::Defect => p.blobs |= 1 << (v - 1),
                Slot::Arc(w) => p.blobs |= (1 << (v - 1)) | (1 << (w - 1)),
            }
        }
        Ok(p)
    }

    /// The state with `n` unblobbed defects.
    pub fn all_defects(n: usize) -> Self {
        LinkState {
            n,
            slots: vec![Slot::Defect; n],
            blobs: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_defect(&self, v: usize) -> bool {
        self.slots[v - 1] == Slot::Defect
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.slots[v - 1] == Slot::Isolated
    }

    pub fn arc_partner(&self, v: usize) -> Option<usize> {
        match self.slots[v - 1] {
            Slot::Arc(w) => Some(w as usize),
            _ => None,
        }
    }

    pub fn is_blobbed(&self, v: usize) -> bool {
        self.blobs >> (v - 1) & 1 == 1
    }

    pub fn has_blobs(&self) -> bool {
        self.blobs != 0
    }

    pub fn defects(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_defect(v)).collect()
    }

    pub fn defect_count(&self) -> usize {
        self.slots.iter().filter(|s| **s == Slot::Defect).count()
    }

    pub fn isolated(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_isolated(v)).collect()
    }

    /// Arcs `(a, b, blobbed)` with `a < b`, by increasing `a`.
    pub fn arcs(&self) -> Vec<(usize, usize, bool)> {
        (1..=self.n)
            .filter_map(|a| match self.arc_partner(a) {
                Some(b) if a < b => Some((a, b, self.is_blobbed(a))),
                _ => None,
            })
            .collect()
    }

    /// The top-most defect.
    pub fn top_defect(&self) -> Option<usize> {
        (1..=self.n).find(|&v| self.is_defect(v))
    }

    /// The first family rule this link state breaks, if any.
    pub fn family_violation(&self, fam: FamilyTag) -> Option<String> {
        if let FamilyTag::WalledBrauer { r, s } = fam {
            if r + s != self.n {
                return Some(format!("walled({r},{s}) needs size {}", r + s));
            }
        }
        if self.blobs != 0 && fam != FamilyTag::Blob {
            return Some("blobs only occur in blob link states".into());
        }
        if !fam.allows_isolated() && self.slots.contains(&Slot::Isolated) {
            return Some("isolated vertex".into());
        }
        let arcs = self.arcs();
        if !fam.allows_arcs() && !arcs.is_empty() {
            return Some("non-propagating edge".into());
        }
        if fam.is_planar() {
            for &(a, b, _) in &arcs {
                if arcs.iter().any(|&(c, d, _)| a < c && c < b && b < d) {
                    return Some(format!("arc {a}-{b} crosses another arc"));
                }
                if (a + 1..b).any(|v| self.is_defect(v)) {
                    return Some(format!("arc {a}-{b} separates a defect"));
                }
            }
        }
        if let FamilyTag::WalledBrauer { r, .. } = fam {
            if let Some(&(a, b, _)) = arcs.iter().find(|&&(a, b, _)| (a <= r) == (b <= r)) {
                return Some(format!("arc {a}-{b} does not cross the wall"));
            }
        }
        if fam == FamilyTag::Blob {
            let top = self.top_defect();
            if let Some(v) = self.defects().into_iter().find(|&v| self.is_blobbed(v)) {
                if Some(v) != top {
                    return Some(format!("blob on defect {v} below the top one"));
                }
            }
            for &(a, b, blob) in &arcs {
                if !blob {
                    continue;
                }
                if arcs.iter().any(|&(c, d, _)| c < a && b < d) {
                    return Some(format!("blob on nested arc {a}-{b}"));
                }
                if top.is_some_and(|t| b > t) {
                    return Some(format!("blob on arc {a}-{b} below the top defect"));
                }
            }
        }
        None
    }

    pub fn is_legal(&self, fam: FamilyTag) -> bool {
        self.family_violation(fam).is_none()
    }
}

impl fmt::Display for LinkState {
    /// Arcs as `a-b`, defects as `v|`, isolated vertices as `v.`; a `*`
    /// marks a blob.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for v in 1..=self.n {
            let star = if self.is_blobbed(v) { "*" } else { "" };
            match self.slots[v - 1] {
                Slot::Defect => parts.push(format!("{v}|{star}")),
                Slot::Isolated => parts.push(format!("{v}.")),
                Slot::Arc(w) if v < w as usize => parts.push(format!("{v}-{w}{star}")),
                Slot::Arc(_) => {}
            }
        }
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct LinkStateJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
    defects: Vec<usize>,
    isolated: Vec<usize>,
    /// Blobbed arcs as pairs, blobbed defects as singletons.
    blobbed: Vec<Vec<usize>>,
}

impl Serialize for LinkState {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let arcs = self.arcs();
        let mut blobbed: Vec<Vec<usize>> = arcs
            .iter()
            .filter(|a| a.2)
            .map(|&(a, b, _)| vec![a, b])
            .collect();
        blobbed.extend(
            self.defects()
                .into_iter()
                .filter(|&v| self.is_blobbed(v))
                .map(|v| vec![v]),
        );
        LinkStateJson {
            n: self.n,
            arcs: arcs.iter().map(|&(a, b, _)| [a, b]).collect(),
            defects: self.defects(),
            isolated: self.isolated(),
            blobbed,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LinkState {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = LinkStateJson::deserialize(de)?;
        let arcs: Vec<_> = raw.arcs.iter().map(|a| (a[0], a[1])).collect();
        let blobbed: Vec<usize> = raw
            .blobbed
            .iter()
            .filter_map(|b| b.first().copied())
            .collect();
        LinkState::new(raw.n, &arcs, &raw.defects, &raw.isolated, &blobbed)
            .map_err(serde::de::Error::custom)
    }
}

/// Cuts every propagating edge of `d` and keeps the right column.
pub fn right_link_state(d: &Diagram) -> LinkState {
    let n = d.n();
    let mut p = LinkState {
        n,
        slots: vec![Slot::Isolated; n],
        blobs: 0,
    };
    for v in 1..=n {
        let slot = n + v;
        p.slots[v - 1] = match d.partner_slot(slot) {
            None => Slot::Isolated,
            Some(s) if s <= n => Slot::Defect,
            Some(s) => Slot::Arc((s - n) as u8),
        };
        if d.is_blobbed_slot(slot) {
            p.blobs |= 1 << (v - 1);
        }
    }
    p
}

/// Cuts every propagating edge of `d` and keeps the left column.
pub fn left_link_state(d: &Diagram) -> LinkState {
    right_link_state(&d.flip())
}

/// Pairs `(left vertex, right vertex)` joined by propagating edges.
pub fn defect_matching(d: &Diagram) -> Vec<(usize, usize)> {
    d.propagating()
        .into_iter()
        .map(|(l, r, _)| (l, r))
        .collect()
}

/// Rebuilds a diagram from its two link states and the matching of their
/// defects. A propagating edge is blobbed when either of its defects is.
pub fn glue(left: &LinkState, right: &LinkState, matching: &[(usize, usize)]) -> Result<Diagram> {
    if left.n != right.n {
        return Err(Error::SizeMismatch(left.n, right.n));
    }
    let n = left.n;
    let mut partner = vec![0usize; 2 * n];
    let mut blobs = Vec::new();
    for (base, p) in [(0, left), (n, right)] {
        for (a, b, blob) in p.arcs() {
            partner[base + a - 1] = base + b;
            partner[base + b - 1] = base + a;
            if blob {
                blobs.push((base + a, base + b));
            }
        }
    }
    let (ld, rd) = (left.defects(), right.defects());
    if matching.len() != ld.len() || matching.len() != rd.len() {
        return Err(Error::MalformedDiagram(
            "matching does not cover the defects".into(),
        ));
    }
    for &(l, r) in matching {
        if l == 0 || r == 0 || l > n || r > n || !left.is_defect(l) || !right.is_defect(r) {
            return Err(Error::MalformedDiagram(format!(
                "{l}-{r}' does not join two defects"
            )));
        }
        if partner[l - 1] != 0 || partner[n + r - 1] != 0 {
            return Err(Error::MalformedDiagram(format!(
                "defect reused in {l}-{r}'"
            )));
        }
        partner[l - 1] = n + r;
        partner[n + r - 1] = l;
        if left.is_blobbed(l) || right.is_blobbed(r) {
            blobs.push((l, n + r));
        }
    }
    Diagram::from_partner(&partner, &blobs)
}

fn illegal(msg: impl Into<String>) -> Error {
    Error::IllegalMove(msg.into())
}

fn check_vertex(p: &LinkState, v: usize) -> Result<()> {
    if v == 0 || v > p.n {
        return Err(illegal(format!("vertex {v} out of range")));
    }
    if !p.is_defect(v) {
        return Err(illegal(format!("vertex {v} is not a defect")));
    }
    Ok(())
}

/// Joins defects `i` and `j` by an arc.
pub fn splice(p: &LinkState, i: usize, j: usize, fam: FamilyTag) -> Result<LinkState> {
    check_vertex(p, i)?;
    check_vertex(p, j)?;
    if i == j {
        return Err(illegal("a defect cannot be spliced with itself"));
    }
    if !fam.allows_arcs() {
        return Err(illegal(format!("{fam} has no non-propagating edges")));
    }
    let (a, b) = (i.min(j), i.max(j));
    if fam.is_planar() {
        if let Some(c) = (a + 1..b).find(|&c| p.is_defect(c)) {
            return Err(illegal(format!("arc {a}-{b} would separate defect {c}")));
        }
    }
    if let FamilyTag::WalledBrauer { r, .. } = fam {
        if (a <= r) == (b <= r) {
            return Err(illegal(format!(
                "defects {a} and {b} lie on the same side of the wall"
            )));
        }
    }
    let mut q = p.clone();
    q.slots[a - 1] = Slot::Arc(b as u8);
    q.slots[b - 1] = Slot::Arc(a as u8);
    if p.is_blobbed(a) || p.is_blobbed(b) {
        q.blobs |= (1 << (a - 1)) | (1 << (b - 1));
    }
    if let Some(reason) = q.family_violation(fam) {
        return Err(illegal(reason));
    }
    Ok(q)
}

/// Turns defect `i` into an isolated vertex.
pub fn delete(p: &LinkState, i: usize, fam: FamilyTag) -> Result<LinkState> {
    check_vertex(p, i)?;
    let allowed = matches!(
        fam,
        FamilyTag::RookBrauer | FamilyTag::Motzkin | FamilyTag::Rook | FamilyTag::PlanarRook
    );
    if !allowed {
        return Err(illegal(format!("{fam} does not allow deletions")));
    }
    let mut q = p.clone();
    q.slots[i - 1] = Slot::Isolated;
    Ok(q)
}

/// Puts a blob on the top-most defect.
pub fn blob_move(p: &LinkState) -> Result<LinkState> {
    let top = p.top_defect().ok_or_else(|| illegal("no defect to blob"))?;
    if p.is_blobbed(top) {
        return Err(illegal(format!("defect {top} already carries a blob")));
    }
    let mut q = p.clone();
    q.blobs |= 1 << (top - 1);
    if let Some(reason) = q.family_violation(FamilyTag::Blob) {
        return Err(illegal(reason));
    }
    Ok(q)
}

/// Every link state reachable from `p` by legal moves, `p` included, sorted.
pub fn move_closure(p: &LinkState, fam: FamilyTag) -> Vec<LinkState> {
    let mut seen: BTreeSet<LinkState> = BTreeSet::new();
    let mut queue = VecDeque::from([p.clone()]);
    seen.insert(p.clone());
    while let Some(q) = queue.pop_front() {
        let defects = q.defects();
        let mut next = Vec::new();
        for (k, &i) in defects.iter().enumerate() {
            for &j in &defects[k + 1..] {
                next.extend(splice(&q, i, j, fam).ok());
            }
            next.extend(delete(&q, i, fam).ok());
        }
        if fam == FamilyTag::Blob {
            next.extend(blob_move(&q).ok());
        }
        for r in next {
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen.into_iter().collect()
}

/// The basis diagrams whose right link state is reachable from `p`.
pub fn reachable_ideal_basis(p: &LinkState, spec: &AlgebraSpec) -> Result<Vec<Diagram>> {
    let fam = spec.family();
    if p.n != spec.n() {
        return Err(Error::SizeMismatch(p.n, spec.n()));
    }
    let basis = enumerate(fam, spec.n())?;
    Ok(reachable_in(p, fam, &basis))
}

/// [`reachable_ideal_basis`] against a prepared basis.
pub fn reachable_in(p: &LinkState, fam: FamilyTag, basis: &[Diagram]) -> Vec<Diagram> {
    let closure: BTreeSet<LinkState> = move_closure(p, fam).into_iter().collect();
    basis
        .iter()
        .filter(|d| closure.contains(&right_link_state(d)))
        .cloned()
        .collect()
}

/// The indexing sets of link states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkStateSet {
    /// Right link states with exactly `i` defects.
    P,
    /// Blob link states with `i` defects, none blobbed.
    Q,
    /// Blob link states with `i` defects, the top-most blobbed.
    QBlobbed,
    /// `Q` at `i - 1` together with `QBlobbed` at `i`; `Q` alone at 0 and
    /// `QBlobbed` alone at 1.
    R,
}

/// Lists a set of right link states of size-`n` diagrams, sorted.
pub fn link_state_sets(
    fam: FamilyTag,
    n: usize,
    set: LinkStateSet,
    i: usize,
) -> Result<Vec<LinkState>> {
    let states: BTreeSet<LinkState> = enumerate(fam, n)?.iter().map(right_link_state).collect();
    let blobbed_top = |p: &LinkState| p.top_defect().is_some_and(|t| p.is_blobbed(t));
    let pick = |k: usize, top: bool| -> Vec<LinkState> {
        states
            .iter()
            .filter(|p| p.defect_count() == k && (k == 0 || blobbed_top(p) == top))
            .cloned()
            .collect()
    };
    Ok(match set {
        LinkStateSet::P => states
            .iter()
            .filter(|p| p.defect_count() == i)
            .cloned()
            .collect(),
        LinkStateSet::Q => pick(i, false),
        LinkStateSet::QBlobbed if i == 0 => Vec::new(),
        LinkStateSet::QBlobbed => pick(i, true),
        LinkStateSet::R if i == 0 => pick(0, false),
        LinkStateSet::R if i == 1 => pick(1, true),
        LinkStateSet::R => {
            let mut out = pick(i - 1, false);
            out.extend(pick(i, true));
            out.sort();
            out.dedup();
            out
        }
    })
}

/// A vertex of a glued graph: `column` counts from the left, `index` from the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Node {
    pub column: usize,
    pub index: usize,
}

impl Node {
    pub fn new(column: usize, index: usize) -> Self {
        Node { column, index }
    }
}

/// A connected piece of a [`StrandGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub nodes: Vec<Node>,
    pub blobbed: bool,
    /// A cycle with no loose ends.
    pub closed: bool,
    /// Number of defect stubs attached.
    pub stubs: usize,
}

/// Columns of vertices joined by strands, with optional hanging stubs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandGraph {
    n: usize,
    columns: usize,
    edges: Vec<(Node, Node, bool)>,
    stubs: Vec<(Node, bool)>,
}

impl StrandGraph {
    fn new(n: usize, columns: usize) -> Self {
        StrandGraph {
            n,
            columns,
            edges: Vec::new(),
            stubs: Vec::new(),
        }
    }

    fn id(&self, v: Node) -> usize {
        v.column * self.n + v.index - 1
    }

    fn add_link_state(&mut self, p: &LinkState, column: usize) {
        for (a, b, blob) in p.arcs() {
            self.edges
                .push((Node::new(column, a), Node::new(column, b), blob));
        }
        for d in p.defects() {
            self.stubs.push((Node::new(column, d), p.is_blobbed(d)));
        }
    }

    fn add_diagram(&mut self, d: &Diagram, left: usize) {
        let n = self.n;
        let node = |s: usize| {
            if s <= n {
                Node::new(left, s)
            } else {
                Node::new(left + 1, s - n)
            }
        };
        for (a, b, blob) in d.edges() {
            self.edges.push((node(a), node(b), blob));
        }
    }

    fn union_find(&self) -> UnionFind<usize> {
        let mut uf = UnionFind::new(self.n * self.columns);
        for &(a, b, _) in &self.edges {
            uf.union(self.id(a), self.id(b));
        }
        uf
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn connected(&self, a: Node, b: Node) -> bool {
        let uf = self.union_find();
        uf.equiv(self.id(a), self.id(b))
    }

    /// All components, ordered by their first node.
    pub fn components(&self) -> Vec<Component> {
        let uf = self.union_find();
        let total = self.n * self.columns;
        let mut groups: Vec<Vec<Node>> = vec![Vec::new(); total];
        for column in 0..self.columns {
            for index in 1..=self.n {
                let v = Node::new(column, index);
                groups[uf.find(self.id(v))].push(v);
            }
        }
        let mut edge_count = vec![0usize; total];
        let mut blobbed = vec![false; total];
        let mut stubs = vec![0usize; total];
        for &(a, _, blob) in &self.edges {
            let r = uf.find(self.id(a));
            edge_count[r] += 1;
            blobbed[r] |= blob;
        }
        for &(v, blob) in &self.stubs {
            let r = uf.find(self.id(v));
            stubs[r] += 1;
            blobbed[r] |= blob;
        }
        let mut out: Vec<Component> = groups
            .into_iter()
            .enumerate()
            .filter(|(_, g)| !g.is_empty())
            .map(|(r, nodes)| Component {
                closed: stubs[r] == 0 && edge_count[r] == nodes.len(),
                nodes,
                blobbed: blobbed[r],
                stubs: stubs[r],
            })
            .collect();
        out.sort_by(|a, b| a.nodes[0].cmp(&b.nodes[0]));
        out
    }

    /// The closed components.
    pub fn loops(&self) -> Vec<Component> {
        self.components().into_iter().filter(|c| c.closed).collect()
    }
}

/// `d1` and `d2` side by side with the right column of `d1` glued to the left
/// column of `d2`; columns 0, 1, 2.
pub fn double_diagram(d1: &Diagram, d2: &Diagram) -> Result<StrandGraph> {
    if d1.n() != d2.n() {
        return Err(Error::SizeMismatch(d1.n(), d2.n()));
    }
    let mut g = StrandGraph::new(d1.n(), 3);
    g.add_diagram(d1, 0);
    g.add_diagram(d2, 1);
    Ok(g)
}

/// A right link state glued to the left column of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesquiDiagram {
    pub state: LinkState,
    pub diagram: Diagram,
    /// Column 0 holds the glued vertices `1'..n'`, column 1 the right
    /// column `1̄..n̄` of the diagram.
    pub graph: StrandGraph,
}

pub fn sesqui(p: &LinkState, d: &Diagram) -> Result<SesquiDiagram> {
    if p.n != d.n() {
        return Err(Error::SizeMismatch(p.n, d.n()));
    }
    let mut g = StrandGraph::new(p.n, 2);
    g.add_link_state(p, 0);
    g.add_diagram(d, 0);
    Ok(SesquiDiagram {
        state: p.clone(),
        diagram: d.clone(),
        graph: g,
    })
}

/// Two link states drawn on either side of one shared column.
pub fn juxtapose(q: &LinkState, q2: &LinkState) -> Result<StrandGraph> {
    if q.n != q2.n {
        return Err(Error::SizeMismatch(q.n, q2.n));
    }
    let mut g = StrandGraph::new(q.n, 1);
    g.add_link_state(q, 0);
    g.add_link_state(q2, 0);
    Ok(g)
}

/// Right link states of `x · y` over every basis pair, grouped by the right
/// link state of `y`. Used to check the move rules against composition.
pub fn realized_states(fam: FamilyTag, n: usize) -> Result<Vec<(LinkState, BTreeSet<LinkState>)>> {
    let basis = enumerate(fam, n)?;
    let mut by_state: std::collections::BTreeMap<LinkState, BTreeSet<LinkState>> =
        Default::default();
    for y in &basis {
        let entry = by_state.entry(right_link_state(y)).or_default();
        for x in &basis {
            if let Some(z) = compose(x, y, fam)?.diagram {
                entry.insert(right_link_state(&z));
            }
        }
    }
    Ok(by_state.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::in_ideal;
    use crate::coeff::RingSpec;

    fn d(n: usize, s: &str) -> Diagram {
        Diagram::parse(n, s).unwrap()
    }

    const FAMILIES: [FamilyTag; 9] = [
        FamilyTag::RookBrauer,
        FamilyTag::Motzkin,
        FamilyTag::Rook,
        FamilyTag::PlanarRook,
        FamilyTag::Brauer,
        FamilyTag::WalledBrauer { r: 1, s: 2 },
        FamilyTag::TemperleyLieb,
        FamilyTag::Blob,
        FamilyTag::DiluteTL,
    ];

    #[test]
    fn walled_example_right_link_state() {
        let x = d(4, "4-3' 1-2' 3-2 4'-1'");
        let p = right_link_state(&x);
        assert_eq!(p.arcs(), vec![(1, 4, false)]);
        assert_eq!(p.defects(), vec![2, 3]);
        let fam = FamilyTag::WalledBrauer { r: 2, s: 2 };
        let q = splice(&p, 2, 3, fam).unwrap();
        assert_eq!(q.arcs(), vec![(1, 4, false), (2, 3, false)]);
        assert!(q.defects().is_empty());
        let left = left_link_state(&x);
        assert_eq!(left.arcs(), vec![(2, 3, false)]);
        assert_eq!(left.defects(), vec![1, 4]);
    }

    #[test]
    fn trivial_link_states() {
        assert_eq!(
            right_link_state(&Diagram::identity(3)),
            LinkState::all_defects(3)
        );
        assert_eq!(
            right_link_state(&Diagram::empty(3)).isolated(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn illegal_splices() {
        let tl = LinkState::all_defects(3);
        let err = splice(&tl, 1, 3, FamilyTag::TemperleyLieb).unwrap_err();
        assert!(matches!(err, Error::IllegalMove(_)));
        assert!(splice(&tl, 1, 2, FamilyTag::TemperleyLieb).is_ok());
        let walled = FamilyTag::WalledBrauer { r: 1, s: 1 };
        assert!(splice(&LinkState::all_defects(2), 1, 2, walled).is_ok());
        let w = FamilyTag::WalledBrauer { r: 1, s: 2 };
        assert!(splice(&LinkState::all_defects(3), 2, 3, w).is_err());
        assert!(splice(&tl, 1, 2, FamilyTag::Rook).is_err());
    }

    #[test]
    fn deletions() {
        let p = LinkState::all_defects(1);
        assert_eq!(
            delete(&p, 1, FamilyTag::RookBrauer).unwrap().isolated(),
            vec![1]
        );
        for fam in [
            FamilyTag::TemperleyLieb,
            FamilyTag::DiluteTL,
            FamilyTag::Brauer,
            FamilyTag::Blob,
        ] {
            assert!(delete(&p, 1, fam).is_err(), "{fam}");
        }
    }

    #[test]
    fn blobbing() {
        let p = LinkState::all_defects(2);
        let q = blob_move(&p).unwrap();
        assert!(q.is_blobbed(1) && !q.is_blobbed(2));
        assert!(blob_move(&q).is_err());
        let none = LinkState::new(2, &[(1, 2)], &[], &[], &[]).unwrap();
        assert!(blob_move(&none).is_err());
        // splicing with a blobbed defect blobs the arc
        let r = splice(&q, 1, 2, FamilyTag::Blob).unwrap();
        assert_eq!(r.arcs(), vec![(1, 2, true)]);
        assert_eq!(
            splice(&p, 1, 2, FamilyTag::Blob).unwrap().arcs(),
            vec![(1, 2, false)]
        );
    }

    #[test]
    fn reachable_examples() {
        let z = RingSpec::Integers;
        let tl = AlgebraSpec::with_ints(FamilyTag::TemperleyLieb, 2, z, 1, 1, 1).unwrap();
        assert_eq!(
            reachable_ideal_basis(&LinkState::all_defects(2), &tl)
                .unwrap()
                .len(),
            2
        );
        let rook = AlgebraSpec::with_ints(FamilyTag::Rook, 1, z, 1, 1, 1).unwrap();
        assert_eq!(
            reachable_ideal_basis(&LinkState::all_defects(1), &rook)
                .unwrap()
                .len(),
            2
        );
        let br = AlgebraSpec::with_ints(FamilyTag::Brauer, 2, z, 1, 1, 1).unwrap();
        let cap = LinkState::new(2, &[(1, 2)], &[], &[], &[]).unwrap();
        let got = reachable_ideal_basis(&cap, &br).unwrap();
        assert!(got.iter().all(|x| right_link_state(x) == cap));
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn set_examples() {
        let p0 = link_state_sets(FamilyTag::Brauer, 2, LinkStateSet::P, 0).unwrap();
        assert_eq!(p0.len(), 1);
        let r1 = link_state_sets(FamilyTag::Blob, 2, LinkStateSet::R, 1).unwrap();
        assert_eq!(
            r1,
            link_state_sets(FamilyTag::Blob, 2, LinkStateSet::QBlobbed, 1).unwrap()
        );
        let r1 = link_state_sets(FamilyTag::Blob, 3, LinkStateSet::R, 1).unwrap();
        assert!(!r1.is_empty());
        assert!(r1
            .iter()
            .all(|p| p.defect_count() == 1 && p.is_blobbed(p.top_defect().unwrap())));
        for fam in FAMILIES {
            let top = link_state_sets(fam, 3, LinkStateSet::P, 3).unwrap();
            if fam == FamilyTag::Blob {
                assert_eq!(top.len(), 2);
                assert_eq!(
                    link_state_sets(fam, 3, LinkStateSet::Q, 3).unwrap(),
                    vec![LinkState::all_defects(3)]
                );
            } else {
                assert_eq!(top, vec![LinkState::all_defects(3)], "{fam}");
            }
        }
    }

    #[test]
    fn juxtaposition_examples() {
        let q = LinkState::new(6, &[(1, 4), (2, 3), (5, 6)], &[], &[], &[1]).unwrap();
        assert!(q.is_legal(FamilyTag::Blob));
        let q2 = LinkState::new(6, &[(1, 2), (4, 5), (3, 6)], &[], &[], &[]).unwrap();
        let loops = juxtapose(&q, &q2).unwrap().loops();
        assert_eq!(loops.len(), 1);
        assert!(loops[0].blobbed);
        let arc = LinkState::new(2, &[(1, 2)], &[], &[], &[]).unwrap();
        assert_eq!(juxtapose(&arc, &arc).unwrap().loops().len(), 1);
        assert!(matches!(
            juxtapose(&arc, &q),
            Err(Error::SizeMismatch(2, 6))
        ));
    }

    #[test]
    fn walled_sesqui_example() {
        let p = LinkState::new(4, &[(1, 4)], &[2, 3], &[], &[]).unwrap();
        let x = d(4, "1-1' 4-4' 2-3 2'-3'");
        let s = sesqui(&p, &x).unwrap();
        let comps = s.graph.components();
        assert_eq!(comps.len(), 3);
        let (m, r) = (|i| Node::new(0, i), |i| Node::new(1, i));
        assert!(s.graph.connected(r(1), r(4)));
        assert!(s.graph.connected(m(2), m(3)));
        assert!(s.graph.connected(r(2), r(3)));
        assert!(!s.graph.connected(m(2), r(2)));
        let stubbed = comps.iter().find(|c| c.nodes.contains(&m(2))).unwrap();
        assert_eq!(stubbed.stubs, 2);
        assert!(comps.iter().all(|c| !c.closed));
    }

    #[test]
    fn double_diagram_loop_count_matches_composition() {
        for fam in FAMILIES {
            let basis = enumerate(fam, 3).unwrap();
            for x in basis.iter().step_by(3) {
                for y in basis.iter().step_by(2) {
                    let g = double_diagram(x, y).unwrap();
                    let res = compose(x, y, fam).unwrap();
                    if res.is_zero {
                        continue;
                    }
                    let loops = g.loops();
                    let blobbed = loops.iter().filter(|c| c.blobbed).count() as u32;
                    if fam == FamilyTag::Blob {
                        assert_eq!(res.blobbed_loops, blobbed);
                        assert_eq!(res.loops, loops.len() as u32 - blobbed);
                    } else {
                        assert_eq!(res.loops, loops.len() as u32);
                    }
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let p = LinkState::new(4, &[(1, 2)], &[3], &[4], &[1]).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["arcs"], serde_json::json!([[1, 2]]));
        assert_eq!(v["blobbed"], serde_json::json!([[1, 2]]));
        let back: LinkState = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "[1-2* 3| 4.]");
    }

    #[test]
    fn slicing_and_regluing() {
        for fam in FAMILIES {
            for x in enumerate(fam, 3).unwrap() {
                let (l, r) = (left_link_state(&x), right_link_state(&x));
                assert!(l.is_legal(fam) && r.is_legal(fam), "{fam} {x}");
                let y = glue(&l, &r, &defect_matching(&x)).unwrap();
                assert_eq!(x, y, "{fam}");
            }
        }
    }

    /// Moves from the right link state of `y` reach exactly the right link
    /// states of the products `x · y`.
    #[test]
    fn moves_match_composition() {
        for fam in FAMILIES {
            for n in 1..=3 {
                if let FamilyTag::WalledBrauer { .. } = fam {
                    if n != 3 {
                        continue;
                    }
                }
                for (p, realized) in realized_states(fam, n).unwrap() {
                    let closure: BTreeSet<_> = move_closure(&p, fam).into_iter().collect();
                    assert_eq!(closure, realized, "{fam} n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn distinct_states_meet_in_lower_ideal() {
        for fam in FAMILIES {
            if fam == FamilyTag::Blob {
                continue;
            }
            let basis = enumerate(fam, 3).unwrap();
            for i in 0..=3 {
                let ps = link_state_sets(fam, 3, LinkStateSet::P, i).unwrap();
                let reach: Vec<BTreeSet<Diagram>> = ps
                    .iter()
                    .map(|p| reachable_in(p, fam, &basis).into_iter().collect())
                    .collect();
                for a in 0..ps.len() {
                    for b in a + 1..ps.len() {
                        for x in reach[a].intersection(&reach[b]) {
                            assert!(in_ideal(x, fam, i as i64 - 1), "{fam} {x}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn blob_r_sets_span_quotients() {
        let fam = FamilyTag::Blob;
        for n in 1..=3 {
            let basis = enumerate(fam, n).unwrap();
            for i in 0..=n {
                let level = i as i64;
                let want: BTreeSet<Diagram> = basis
                    .iter()
                    .filter(|x| in_ideal(x, fam, level) && !in_ideal(x, fam, level - 1))
                    .cloned()
                    .collect();
                let got: BTreeSet<Diagram> = link_state_sets(fam, n, LinkStateSet::R, i)
                    .unwrap()
                    .iter()
                    .flat_map(|q| reachable_in(q, fam, &basis))
                    .filter(|x| !in_ideal(x, fam, level - 1))
                    .collect();
                assert_eq!(got, want, "n={n} i={i}");
            }
        }
    }
}
