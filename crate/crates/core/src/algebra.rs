//! Diagram algebras over a coefficient ring, their augmentations, ideals,
//! quotients, and finite group algebras.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{RingSpec, Scalar};
use crate::diagram::{compose_unchecked, enumerate, Diagram, FamilyTag};
use crate::error::{Error, Result};

/// Which parameters a family carries.
fn required_params(fam: FamilyTag) -> (bool, bool, bool) {
    match fam {
        FamilyTag::RookBrauer | FamilyTag::Motzkin => (true, true, false),
        FamilyTag::Rook | FamilyTag::PlanarRook => (false, true, false),
        FamilyTag::Brauer
        | FamilyTag::WalledBrauer { .. }
        | FamilyTag::TemperleyLieb
        | FamilyTag::DiluteTL => (true, false, false),
        FamilyTag::Blob => (true, false, true),
    }
}

/// A diagram algebra: family, size, ground ring and parameter values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    family: FamilyTag,
    n: usize,
    ring: RingSpec,
    delta: Option<Scalar>,
    epsilon: Option<Scalar>,
    gamma: Option<Scalar>,
}

impl AlgebraSpec {
    /// Parameters must be given exactly for the family: δ and ε for
    /// rook-Brauer and Motzkin, ε for (planar) rook, δ and γ for blob, and δ
    /// alone otherwise.
    pub fn new(
        family: FamilyTag,
        n: usize,
        ring: RingSpec,
        delta: Option<Scalar>,
        epsilon: Option<Scalar>,
        gamma: Option<Scalar>,
    ) -> Result<Self> {
        let (need_d, need_e, need_g) = required_params(family);
        let mismatch = |reason: String| Error::ParamMismatch {
            family: family.to_string(),
            reason,
        };
        for (name, need, val) in [
            ("delta", need_d, &delta),
            ("epsilon", need_e, &epsilon),
            ("gamma", need_g, &gamma),
        ] {
            match (need, val) {
                (true, None) => return Err(mismatch(format!("{name} is required"))),
                (false, Some(_)) => {
                    return Err(mismatch(format!(
                        "{name} is not a parameter of this family"
                    )))
                }
                (true, Some(v)) if v.ring() != ring => {
                    return Err(Error::RingMismatch(v.ring(), ring))
                }
                _ => {}
            }
        }
        if let FamilyTag::WalledBrauer { r, s } = family {
            if r + s != n {
                return Err(mismatch(format!("n = {n} but r + s = {}", r + s)));
            }
        }
        Ok(AlgebraSpec {
            family,
            n,
            ring,
            delta,
            epsilon,
            gamma,
        })
    }

    /// Like [`AlgebraSpec::new`] with small integer parameter values; values
    /// for parameters the family does not carry are ignored.
    pub fn with_ints(
        family: FamilyTag,
        n: usize,
        ring: RingSpec,
        delta: i64,
        epsilon: i64,
        gamma: i64,
    ) -> Result<Self> {
        let (d, e, g) = required_params(family);
        Self::new(
            family,
            n,
            ring,
            d.then(|| ring.from_i64(delta)),
            e.then(|| ring.from_i64(epsilon)),
            g.then(|| ring.from_i64(gamma)),
        )
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn ring(&self) -> RingSpec {
        self.ring
    }
    pub fn delta(&self) -> Option<&Scalar> {
        self.delta.as_ref()
    }
    pub fn epsilon(&self) -> Option<&Scalar> {
        self.epsilon.as_ref()
    }
    pub fn gamma(&self) -> Option<&Scalar> {
        self.gamma.as_ref()
    }

    /// `δ^loops ε^isolated γ^blobbed`, with `x^0 = 1` for every `x`.
    pub fn weight(&self, (loops, isolated, blobbed): (u32, u32, u32)) -> Scalar {
        let mut w = self.ring.one();
        for (param, e, name) in [
            (&self.delta, loops, "delta"),
            (&self.epsilon, isolated, "epsilon"),
            (&self.gamma, blobbed, "gamma"),
        ] {
            if e > 0 {
                let p = param
                    .as_ref()
                    .unwrap_or_else(|| panic!("{name} needed by a {} product", self.family));
                w = &w * &p.pow(e);
            }
        }
        w
    }

    /// Largest ideal level for this family.
    pub fn max_ideal_level(&self) -> i64 {
        if self.family == FamilyTag::Blob {
            self.n as i64
        } else {
            self.n as i64 - 1
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut params = Vec::new();
        for (name, v) in [
            ("delta", &self.delta),
            ("epsilon", &self.epsilon),
            ("gamma", &self.gamma),
        ] {
            if let Some(v) = v {
                params.push(format!("{name}={v}"));
            }
        }
        write!(
            f,
            "{}_{}({}) over {}",
            self.family,
            self.n,
            params.join(","),
            self.ring
        )
    }
}

#[derive(Serialize)]
struct SpecJson<'a> {
    family: &'a str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<String>,
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let (r, s) = match self.family {
            FamilyTag::WalledBrauer { r, s } => (Some(r), Some(s)),
            _ => (None, None),
        };
        SpecJson {
            family: self.family.short_name(),
            n: self.n,
            r,
            s,
            ring: self.ring.to_string(),
            delta: self.delta.as_ref().map(|v| v.to_string()),
            epsilon: self.epsilon.as_ref().map(|v| v.to_string()),
            gamma: self.gamma.as_ref().map(|v| v.to_string()),
        }
        .serialize(ser)
    }
}

/// The augmentation on a single basis diagram.
pub fn augmentation_of_diagram(d: &Diagram, fam: FamilyTag) -> bool {
    match fam {
        FamilyTag::Blob => d.is_identity(),
        FamilyTag::DiluteTL => d.propagating_count() == d.n(),
        _ => d.is_permutation(),
    }
}

/// Membership of a basis diagram in the ideal of the given level: at most
/// `level` propagating edges, except for blob diagrams where level `i >= 1`
/// holds diagrams with at most `i - 1` propagating edges together with those
/// having exactly `i`, at least one blob, and a blob on the top-most
/// propagating edge.
pub fn in_ideal(d: &Diagram, fam: FamilyTag, level: i64) -> bool {
    if level < 0 {
        return false;
    }
    let p = d.propagating_count() as i64;
    if fam != FamilyTag::Blob || level == 0 {
        return p <= level;
    }
    if p < level {
        return true;
    }
    if p > level {
        return false;
    }
    let top_blobbed = d.propagating().first().is_some_and(|e| e.2);
    d.has_blobs() && top_blobbed
}

/// A finite-rank algebra given by its structure constants on a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    pub ring: RingSpec,
    pub labels: Vec<String>,
    /// `products[i][j]` is `b_i · b_j` as a sparse vector sorted by index.
    pub products: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub unit: Vec<(usize, Scalar)>,
    pub augmentation: Vec<Scalar>,
}

impl StructureTable {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// JSON multiplication table: basis labels plus, for every ordered pair,
    /// the list of `[coefficient, index]` terms.
    pub fn to_json(&self, basis: serde_json::Value) -> serde_json::Value {
        let table: Vec<Vec<Vec<(String, usize)>>> = self
            .products
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|(k, c)| (c.to_string(), *k)).collect())
                    .collect()
            })
            .collect();
        serde_json::json!({ "basis": basis, "table": table })
    }
}

/// One basis product: target index and exponents `(loops, isolated, blobbed)`.
type Product = Option<(u32, (u32, u32, u32))>;

/// A diagram algebra with its basis and cached products.
#[derive(Debug)]
pub struct Algebra {
    spec: AlgebraSpec,
    basis: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    table: Vec<Product>,
}

impl Algebra {
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        let basis = enumerate(spec.family, spec.n)?;
        let index: HashMap<Diagram, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, d)| (d, i))
            .collect();
        let dim = basis.len();
        let fam = spec.family;
        let table: Vec<Product> = (0..dim * dim)
            .into_par_iter()
            .map(|ij| {
                let res = compose_unchecked(&basis[ij / dim], &basis[ij % dim], fam);
                res.diagram
                    .as_ref()
                    .map(|d| (index[d] as u32, res.exponents()))
            })
            .collect();
        Ok(Algebra {
            spec,
            basis,
            index,
            table,
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn basis(&self) -> &[Diagram] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// `b_i · b_j` as (target index, coefficient), or `None` when it vanishes.
    pub fn basis_product(&self, i: usize, j: usize) -> Option<(usize, Scalar)> {
        self.table[i * self.dim() + j].and_then(|(k, e)| {
            let w = self.spec.weight(e);
            (!w.is_zero()).then_some((k as usize, w))
        })
    }

    pub fn identity(&self) -> AlgebraElement {
        identity(&self.spec)
    }

    /// Structure constants on the full basis.
    pub fn structure_table(&self) -> StructureTable {
        self.table_on(&(0..self.dim()).collect::<Vec<_>>())
    }

    /// Structure constants of the quotient by the ideal of the given level.
    pub fn quotient_table(&self, level: i64) -> Result<StructureTable> {
        let max = self.spec.max_ideal_level();
        if level < -1 || level > max {
            return Err(Error::InvalidIdealLevel {
                level,
                min: -1,
                max,
            });
        }
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&i| !in_ideal(&self.basis[i], self.spec.family, level))
            .collect();
        Ok(self.table_on(&keep))
    }

    fn table_on(&self, keep: &[usize]) -> StructureTable {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let products = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| match self.basis_product(i, j) {
                        Some((k, c)) => pos.get(&k).map(|&p| vec![(p, c)]).unwrap_or_default(),
                        None => Vec::new(),
                    })
                    .collect()
            })
            .collect();
        let mut unit: Vec<(usize, Scalar)> = self
            .identity()
            .terms
            .iter()
            .filter_map(|(d, c)| pos.get(&self.index[d]).map(|&p| (p, c.clone())))
            .collect();
        unit.sort_by_key(|t| t.0);
        let augmentation = keep
            .iter()
            .map(|&i| {
                if augmentation_of_diagram(&self.basis[i], self.spec.family) {
                    self.spec.ring.one()
                } else {
                    self.spec.ring.zero()
                }
            })
            .collect();
        StructureTable {
            ring: self.spec.ring,
            labels: keep.iter().map(|&i| self.basis[i].to_string()).collect(),
            products,
            unit,
            augmentation,
        }
    }

    /// Checks `τ(x·y) = τ(x)τ(y)` on all basis pairs.
    pub fn check_augmentation(&self) -> Result<()> {
        let fam = self.spec.family;
        let ring = self.spec.ring;
        let tau = |i: usize| augmentation_of_diagram(&self.basis[i], fam);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = match self.basis_product(i, j) {
                    Some((k, c)) if tau(k) => c,
                    _ => ring.zero(),
                };
                let rhs = if tau(i) && tau(j) {
                    ring.one()
                } else {
                    ring.zero()
                };
                if lhs != rhs {
                    return Err(Error::NotAnAlgebraMap(format!(
                        "tau({} * {}) = {lhs} but tau * tau = {rhs}",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
        }
        if augmentation(&self.identity()) != ring.one() {
            return Err(Error::NotAnAlgebraMap("tau(1) != 1".into()));
        }
        Ok(())
    }
}

/// Whether the augmentation is multiplicative and unital on `spec`.
pub fn is_algebra_map_augmentation(spec: &AlgebraSpec) -> Result<bool> {
    Algebra::new(spec.clone())?
        .check_augmentation()
        .map(|_| true)
}

/// A quotient of a diagram algebra by one of its standard ideals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientSpec {
    pub base: AlgebraSpec,
    pub ideal_level: i64,
}

impl QuotientSpec {
    pub fn new(base: AlgebraSpec, ideal_level: i64) -> Result<Self> {
        let max = base.max_ideal_level();
        if ideal_level < -1 || ideal_level > max {
            return Err(Error::InvalidIdealLevel {
                level: ideal_level,
                min: -1,
                max,
            });
        }
        Ok(QuotientSpec { base, ideal_level })
    }
}

/// The surviving basis and structure constants of a quotient.
pub fn quotient_structure(q: &QuotientSpec) -> Result<(Vec<Diagram>, StructureTable)> {
    let alg = Algebra::new(q.base.clone())?;
    let table = alg.quotient_table(q.ideal_level)?;
    let basis = alg
        .basis()
        .iter()
        .filter(|d| !in_ideal(d, q.base.family, q.ideal_level))
        .cloned()
        .collect();
    Ok((basis, table))
}

/// A finite linear combination of diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    spec: Arc<AlgebraSpec>,
    terms: BTreeMap<Diagram, Scalar>,
}

impl AlgebraElement {
    pub fn zero(spec: &AlgebraSpec) -> Self {
        AlgebraElement {
            spec: Arc::new(spec.clone()),
            terms: BTreeMap::new(),
        }
    }

    /// A single basis diagram, which must belong to the family.
    pub fn basis(spec: &AlgebraSpec, d: Diagram) -> Result<Self> {
        Self::from_terms(spec, [(d, spec.ring.one())])
    }

    pub fn from_terms(
        spec: &AlgebraSpec,
        terms: impl IntoIterator<Item = (Diagram, Scalar)>,
    ) -> Result<Self> {
        let mut x = Self::zero(spec);
        for (d, c) in terms {
            if d.n() != spec.n {
                return Err(Error::SizeMismatch(d.n(), spec.n));
            }
            d.check_member(spec.family)?;
            if c.ring() != spec.ring {
                return Err(Error::RingMismatch(c.ring(), spec.ring));
            }
            x.add_term(d, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, d: Diagram, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, d: &Diagram) -> Scalar {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.spec.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut out = Self {
            spec: self.spec.clone(),
            terms: BTreeMap::new(),
        };
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = self.clone();
        for (d, v) in &other.terms {
            out.add_term(d.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&-&self.spec.ring.one()))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("{c}*{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The unit: the all-horizontal diagram, or for dilute Temperley-Lieb the sum
/// of all its sub-diagrams.
pub fn identity(spec: &AlgebraSpec) -> AlgebraElement {
    let n = spec.n;
    let mut x = AlgebraElement::zero(spec);
    if spec.family == FamilyTag::DiluteTL {
        for mask in 0u64..1 << n {
            let mut d = Diagram::empty(n);
            for i in 1..=n {
                if mask >> (i - 1) & 1 == 1 {
                    d.join(i, n + i);
                }
            }
            x.add_term(d, spec.ring.one());
        }
    } else {
        x.add_term(Diagram::identity(n), spec.ring.one());
    }
    x
}

/// Bilinear extension of diagram composition.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if x.spec != y.spec {
        return Err(Error::SpecMismatch);
    }
    let spec = &x.spec;
    let mut out = AlgebraElement {
        spec: spec.clone(),
        terms: BTreeMap::new(),
    };
    for (d1, c1) in &x.terms {
        for (d2, c2) in &y.terms {
            let res = compose_unchecked(d1, d2, spec.family);
            let w = spec.weight(res.exponents());
            if let Some(d3) = res.diagram {
                out.add_term(d3, &(c1 * c2) * &w);
            }
        }
    }
    Ok(out)
}

/// The augmentation, extended linearly.
pub fn augmentation(x: &AlgebraElement) -> Scalar {
    let ring = x.spec.ring;
    x.terms
        .iter()
        .filter(|(d, _)| augmentation_of_diagram(d, x.spec.family))
        .fold(ring.zero(), |acc, (_, c)| &acc + c)
}

/// Finite groups used for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupSpec {
    Symmetric(usize),
    Cyclic(usize),
    ProductSymmetric(usize, usize),
    Trivial,
}

/// Default cap on group order.
pub const GROUP_ORDER_CAP: usize = 5040;

impl GroupSpec {
    pub fn order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match *self {
            GroupSpec::Symmetric(n) => fact(n),
            GroupSpec::Cyclic(n) => n.max(1) as u64,
            GroupSpec::ProductSymmetric(r, s) => fact(r) * fact(s),
            GroupSpec::Trivial => 1,
        }
    }

    /// Elements as permutations in one-line notation (0-based images), in
    /// lexicographic order, so the identity comes first.
    pub fn elements(&self) -> Vec<Vec<usize>> {
        let mut out = match *self {
            GroupSpec::Symmetric(n) => permutations(n),
            GroupSpec::Cyclic(n) => (0..n.max(1))
                .map(|k| (0..n).map(|i| (i + k) % n).collect())
                .collect(),
            GroupSpec::ProductSymmetric(r, s) => {
                let mut v = Vec::new();
                for a in permutations(r) {
                    for b in permutations(s) {
                        v.push(a.iter().copied().chain(b.iter().map(|x| x + r)).collect());
                    }
                }
                v
            }
            GroupSpec::Trivial => vec![Vec::new()],
        };
        out.sort();
        out
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::ProductSymmetric(r, s) => write!(f, "S{r}xS{s}"),
            GroupSpec::Trivial => write!(f, "1"),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `s3`, `c2`, `s1xs2`, `trivial` or `1` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let bad = || Error::ParamMismatch {
            family: s.to_string(),
            reason: "unknown group (expected sN, cN, sRxsS or trivial)".into(),
        };
        if t == "trivial" || t == "1" {
            return Ok(GroupSpec::Trivial);
        }
        if let Some((a, b)) = t.split_once('x') {
            let r = a
                .strip_prefix('s')
                .and_then(|x| x.parse().ok())
                .ok_or_else(bad)?;
            let q = b
                .strip_prefix('s')
                .and_then(|x| x.parse().ok())
                .ok_or_else(bad)?;
            return Ok(GroupSpec::ProductSymmetric(r, q));
        }
        if let Some(n) = t.strip_prefix('s') {
            return n.parse().map(GroupSpec::Symmetric).map_err(|_| bad());
        }
        if let Some(n) = t.strip_prefix('c') {
            return n.parse().map(GroupSpec::Cyclic).map_err(|_| bad());
        }
        Err(bad())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

/// `(σ·π)(i) = σ(π(i))`.
pub fn compose_permutations(sigma: &[usize], pi: &[usize]) -> Vec<usize> {
    pi.iter().map(|&i| sigma[i]).collect()
}

/// The group algebra `k[G]` with every element augmented to 1.
pub fn group_algebra(group: GroupSpec, ring: RingSpec) -> Result<StructureTable> {
    group_algebra_with_cap(group, ring, GROUP_ORDER_CAP)
}

pub fn group_algebra_with_cap(
    group: GroupSpec,
    ring: RingSpec,
    cap: usize,
) -> Result<StructureTable> {
    let order = group.order() as usize;
    if order > cap {
        return Err(Error::SizeTooLarge { size: order, cap });
    }
    let elems = group.elements();
    let index: HashMap<&Vec<usize>, usize> =
        elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let products = elems
        .iter()
        .map(|g| {
            elems
                .iter()
                .map(|h| vec![(index[&compose_permutations(g, h)], ring.one())])
                .collect()
        })
        .collect();
    let labels = elems
        .iter()
        .map(|g| {
            format!(
                "[{}]",
                g.iter()
                    .map(|x| (x + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    Ok(StructureTable {
        ring,
        labels,
        products,
        unit: vec![(0, ring.one())],
        augmentation: vec![ring.one(); elems.len()],
    })
}
