//! Explicit idempotents attached to link states, and checks that they absorb
//! and generate the corresponding left ideals.

use serde::Serialize;

use crate::algebra::{multiply, AlgebraElement, AlgebraSpec};
use crate::coeff::{reduce, Scalar, SparseMatrix};
use crate::diagram::{compose, enumerate, Diagram, FamilyTag};
use crate::error::{Error, Result};
use crate::linkstate::{reachable_in, right_link_state, sesqui, LinkState, Node};

/// The diagram whose right link state is `p` and whose left link state is the
/// mirror image of `p`. Blobs are doubled.
pub fn mirror_dp(p: &LinkState, fam: FamilyTag) -> Result<Diagram> {
    let n = p.n();
    let mut partner = vec![0usize; 2 * n];
    let mut blobs = Vec::new();
    for (a, b, blob) in p.arcs() {
        for base in [0, n] {
            partner[base + a - 1] = base + b;
            partner[base + b - 1] = base + a;
            if blob {
                blobs.push((base + a, base + b));
            }
        }
    }
    for v in p.defects() {
        partner[v - 1] = n + v;
        partner[n + v - 1] = v;
        if p.is_blobbed(v) {
            blobs.push((v, n + v));
        }
    }
    let d = Diagram::from_partner(&partner, &blobs)?;
    d.check_member(fam)?;
    Ok(d)
}

/// Exponents `(loops, isolated, blobbed loops)` produced by `y · mirror_dp(p)`
/// for `y` reachable from `p`.
pub fn mirror_exponents(p: &LinkState, fam: FamilyTag) -> (u32, u32, u32) {
    let arcs = p.arcs();
    let blobbed = arcs.iter().filter(|a| a.2).count() as u32;
    let plain = arcs.len() as u32 - blobbed;
    let isolated = if fam == FamilyTag::DiluteTL {
        0
    } else {
        p.isolated().len() as u32
    };
    if fam == FamilyTag::Blob {
        (plain, isolated, blobbed)
    } else {
        (plain + blobbed, isolated, 0)
    }
}

/// Result of testing `y · e` against `c · y` over a left ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorptionReport {
    pub holds: bool,
    /// Loop, isolated-vertex and blobbed-loop counts, when `e` is one diagram.
    pub exponents: Option<(u32, u32, u32)>,
    /// The common scalar `c`, when one exists.
    pub scalar: Option<String>,
    pub witness: Option<Diagram>,
    /// Number of diagrams checked.
    pub checked: usize,
}

/// Checks that every basis diagram `y` reachable from `p` satisfies
/// `y · e = c · y` for one scalar `c`.
pub fn check_absorption(
    p: &LinkState,
    e: &AlgebraElement,
    spec: &AlgebraSpec,
) -> Result<AbsorptionReport> {
    let fam = spec.family();
    let basis = enumerate(fam, spec.n())?;
    let ideal = reachable_in(p, fam, &basis);
    let single = match e.terms().iter().next() {
        Some((d, c)) if e.len() == 1 && c.is_one() => Some(d.clone()),
        _ => None,
    };
    let mut exponents: Option<(u32, u32, u32)> = None;
    let mut scalar: Option<Scalar> = None;
    let fail = |y: &Diagram, exponents, scalar: Option<Scalar>, checked| AbsorptionReport {
        holds: false,
        exponents,
        scalar: scalar.map(|s| s.to_string()),
        witness: Some(y.clone()),
        checked,
    };
    for (k, y) in ideal.iter().enumerate() {
        if let Some(d) = &single {
            let res = compose(y, d, fam)?;
            if res.diagram.as_ref() != Some(y) || exponents.is_some_and(|x| x != res.exponents()) {
                return Ok(fail(y, exponents, scalar, k + 1));
            }
            exponents = Some(res.exponents());
        }
        let ye = multiply(&AlgebraElement::basis(spec, y.clone())?, e)?;
        let c = ye.coefficient(y);
        let is_multiple = ye.len() <= 1 && (ye.is_zero() || ye.terms().contains_key(y));
        if !is_multiple || scalar.as_ref().is_some_and(|s| *s != c) {
            return Ok(fail(y, exponents, scalar, k + 1));
        }
        scalar = Some(c);
    }
    Ok(AbsorptionReport {
        holds: true,
        exponents,
        scalar: scalar.map(|s| s.to_string()),
        witness: None,
        checked: ideal.len(),
    })
}

/// `mirror_dp(p)` divided by its self-absorption scalar.
pub fn normalized_idempotent(p: &LinkState, spec: &AlgebraSpec) -> Result<AlgebraElement> {
    let fam = spec.family();
    let d = mirror_dp(p, fam)?;
    let (loops, isolated, blobbed) = mirror_exponents(p, fam);
    let ring = spec.ring();
    let mut coeff = ring.one();
    for (param, e, name) in [
        (spec.delta(), loops, "delta"),
        (spec.epsilon(), isolated, "epsilon"),
        (spec.gamma(), blobbed, "gamma"),
    ] {
        if e == 0 {
            continue;
        }
        let v = param
            .ok_or_else(|| Error::DimensionMismatch(format!("{fam} has no parameter {name}")))?;
        let inv = v.invert().map_err(|_| Error::ParameterNotInvertible {
            name,
            value: v.to_string(),
            ring,
        })?;
        coeff = &coeff * &inv.pow(e);
    }
    AlgebraElement::from_terms(spec, [(d, coeff)])
}

/// Rotates a perfect matching on `0..m` one step towards the start.
fn rotate(matching: &[usize]) -> Vec<usize> {
    let m = matching.len();
    let back = |i: usize| (i + m - 1) % m;
    let mut out = vec![0; m];
    for (i, &j) in matching.iter().enumerate() {
        out[back(i)] = back(j);
    }
    out
}

/// Threads the vertices `lo..=hi` of `q`, which hold at most one defect and
/// only arcs internal to the range. Returns the new arcs and, if there is a
/// defect, the vertex that takes the propagating edge to it.
fn thread_block(q: &LinkState, lo: usize, hi: usize) -> (Vec<(usize, usize)>, Option<usize>) {
    let defect = (lo..=hi).find(|&v| q.is_defect(v));
    // Points: an optional virtual point on top, then the vertices in order.
    let shift = usize::from(defect.is_some());
    let point = |v: usize| v - lo + shift;
    let vertex = |i: usize| i + lo - shift;
    let m = hi - lo + 1 + shift;
    let mut matching = vec![0usize; m];
    for v in lo..=hi {
        matching[point(v)] = match q.arc_partner(v) {
            Some(w) => point(w),
            None => 0,
        };
    }
    if let Some(d) = defect {
        matching[0] = point(d);
    }
    let rotated = rotate(&matching);
    let mut arcs = Vec::new();
    let mut prop = None;
    for (i, &j) in rotated.iter().enumerate() {
        if i >= j {
            continue;
        }
        if shift == 1 && i == 0 {
            prop = Some(vertex(j));
        } else {
            arcs.push((vertex(i), vertex(j)));
        }
    }
    (arcs, prop)
}

/// A zero-defect link state `q'` whose juxtaposition with `q` is one loop.
pub fn blobbed_loop_completion(q: &LinkState) -> Result<LinkState> {
    if q.defect_count() > 0 || !q.isolated().is_empty() {
        return Err(Error::IllegalMove(format!("{q} is not a perfect matching")));
    }
    if q.n() == 0 {
        return Ok(q.clone());
    }
    let (arcs, _) = thread_block(q, 1, q.n());
    LinkState::new(q.n(), &arcs, &[], &[], &[])
}

/// Splits the vertices into consecutive blocks `(lo, hi)`, each holding one
/// defect, except a leading block with every blobbed arc and no defect.
pub fn vertex_split(q: &LinkState) -> Result<Vec<(usize, usize)>> {
    let defects = q.defects();
    let Some(&top) = defects.first() else {
        return Err(Error::NoDefects);
    };
    let mut blocks = Vec::new();
    let mut start = 1;
    if q.arcs().iter().any(|a| a.2) {
        blocks.push((1, top - 1));
        start = top;
    }
    for &d in &defects[..defects.len() - 1] {
        blocks.push((start, d));
        start = d + 1;
    }
    blocks.push((start, q.n()));
    Ok(blocks)
}

/// Assembles a diagram from left arcs, right arcs taken from `q`, and
/// propagating edges `(left, right)`.
fn assemble(
    q: &LinkState,
    left: &[(usize, usize)],
    props: &[(usize, usize)],
    fam: FamilyTag,
) -> Result<Diagram> {
    let n = q.n();
    let mut partner = vec![0usize; 2 * n];
    let mut blobs = Vec::new();
    for &(a, b) in left {
        partner[a - 1] = b;
        partner[b - 1] = a;
    }
    for (a, b, blob) in q.arcs() {
        partner[n + a - 1] = n + b;
        partner[n + b - 1] = n + a;
        if blob {
            blobs.push((n + a, n + b));
        }
    }
    for &(l, r) in props {
        partner[l - 1] = n + r;
        partner[n + r - 1] = l;
        if q.is_blobbed(r) {
            blobs.push((l, n + r));
        }
    }
    let d = Diagram::from_partner(&partner, &blobs)?;
    d.check_member(fam)?;
    Ok(d)
}

/// Planar threading for Temperley-Lieb and blob link states: a diagram `e`
/// with right link state `q` such that `y · e = y` for `y` reachable from
/// `q`, or `y · e = γ y` when `q` has blobbed arcs.
pub fn blob_eq(q: &LinkState, fam: FamilyTag) -> Result<Diagram> {
    if !matches!(fam, FamilyTag::Blob | FamilyTag::TemperleyLieb) {
        return Err(Error::FamilyViolation {
            family: fam.to_string(),
            reason: "planar threading needs a Temperley-Lieb or blob link state".into(),
        });
    }
    if let Some(reason) = q.family_violation(fam) {
        return Err(Error::FamilyViolation {
            family: fam.to_string(),
            reason,
        });
    }
    let blocks = if q.defect_count() == 0 && q.arcs().iter().any(|a| a.2) {
        vec![(1, q.n())]
    } else {
        vertex_split(q)?
    };
    let mut left = Vec::new();
    let mut props = Vec::new();
    for (lo, hi) in blocks {
        if lo > hi {
            continue;
        }
        let (arcs, prop) = thread_block(q, lo, hi);
        left.extend(arcs);
        if let Some(v) = prop {
            let d = (lo..=hi).find(|&v| q.is_defect(v)).expect("block defect");
            props.push((v, d));
        }
    }
    assemble(q, &left, &props, fam)
}

/// Non-planar threading for Brauer and walled Brauer link states: every
/// defect but the bottom one goes straight across, and the bottom one is
/// routed through all arcs before returning to its own vertex.
pub fn threaded_ep(p: &LinkState, fam: FamilyTag) -> Result<Diagram> {
    if let Some(reason) = p.family_violation(fam) {
        return Err(Error::FamilyViolation {
            family: fam.to_string(),
            reason,
        });
    }
    let defects = p.defects();
    let Some(&a) = defects.last() else {
        return Err(Error::NoDefects);
    };
    let mut props: Vec<(usize, usize)> = defects[..defects.len() - 1]
        .iter()
        .map(|&d| (d, d))
        .collect();
    // Arcs in increasing order of their upper end, written (first, second)
    // so that the path enters at `first` and leaves at `second`.
    let arcs: Vec<(usize, usize)> = match fam {
        FamilyTag::WalledBrauer { r, .. } => p
            .arcs()
            .into_iter()
            .map(|(x, y, _)| {
                let (top, bottom) = if x <= r { (x, y) } else { (y, x) };
                if a > r {
                    (bottom, top)
                } else {
                    (top, bottom)
                }
            })
            .collect(),
        _ => p.arcs().into_iter().map(|(x, y, _)| (x, y)).collect(),
    };
    let mut left = Vec::new();
    match arcs.first() {
        None => props.push((a, a)),
        Some(&(first, _)) => {
            props.push((first, a));
            for w in arcs.windows(2) {
                left.push((w[0].1, w[1].0));
            }
            left.push((arcs.last().unwrap().1, a));
        }
    }
    assemble(p, &left, &props, fam)
}

/// The walled Brauer threading diagram for a link state of size `r + s`.
pub fn walled_ep(p: &LinkState, r: usize, s: usize) -> Result<Diagram> {
    threaded_ep(p, FamilyTag::WalledBrauer { r, s })
}

/// Whether `e` has right link state `p`, joins each defect of `p` through
/// the sesqui-diagram to the same vertex on the right, and leaves no other
/// closed components except one blobbed loop through all blobbed arcs of `p`
/// (when there are any), with every remaining glued vertex reaching the
/// right column.
pub fn threading_conditions(p: &LinkState, e: &Diagram) -> Result<bool> {
    if right_link_state(e) != *p {
        return Ok(false);
    }
    let s = sesqui(p, e)?;
    let g = &s.graph;
    if !p
        .defects()
        .into_iter()
        .all(|b| g.connected(Node::new(0, b), Node::new(1, b)))
    {
        return Ok(false);
    }
    let blobbed_arcs: Vec<usize> = p.arcs().iter().filter(|a| a.2).map(|a| a.0).collect();
    let comps = g.components();
    let loops: Vec<_> = comps.iter().filter(|c| c.closed).collect();
    if blobbed_arcs.is_empty() {
        if !loops.is_empty() {
            return Ok(false);
        }
    } else {
        let [only] = loops.as_slice() else {
            return Ok(false);
        };
        if !only.blobbed
            || !blobbed_arcs
                .iter()
                .all(|&v| only.nodes.contains(&Node::new(0, v)))
        {
            return Ok(false);
        }
    }
    Ok(comps
        .iter()
        .filter(|c| !c.closed)
        .all(|c| c.nodes.iter().any(|v| v.column == 1)))
}

/// Compares the left ideal generated by `e` with the span of the diagrams
/// reachable from `p`, as submodules of the free module on the basis.
pub fn check_ideal_generation(
    e: &AlgebraElement,
    p: &LinkState,
    spec: &AlgebraSpec,
) -> Result<bool> {
    let fam = spec.family();
    let basis = enumerate(fam, spec.n())?;
    let ideal = reachable_in(p, fam, &basis);
    let position: std::collections::BTreeMap<&Diagram, usize> =
        ideal.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut columns = Vec::with_capacity(basis.len());
    for x in &basis {
        let xe = multiply(&AlgebraElement::basis(spec, x.clone())?, e)?;
        let mut col = Vec::with_capacity(xe.len());
        for (d, c) in xe.terms() {
            match position.get(d) {
                Some(&i) => col.push((i, c.clone())),
                None => return Ok(false),
            }
        }
        columns.push(col);
    }
    let m = SparseMatrix::from_columns(ideal.len(), spec.ring(), columns)?;
    let red = reduce(&m)?;
    Ok(red.rank == ideal.len() && red.torsion.is_empty())
}

/// Each element squares to itself and every pair commutes.
pub fn check_commuting_idempotents(es: &[AlgebraElement]) -> Result<bool> {
    for (i, e) in es.iter().enumerate() {
        if multiply(e, e)? != *e {
            return Ok(false);
        }
        for f in &es[i + 1..] {
            if multiply(e, f)? != multiply(f, e)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// How an idempotent was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// The mirror diagram divided by its absorption scalar.
    Mirror,
    /// Non-planar threading through the arcs.
    Threaded,
    /// Planar threading block by block.
    Planar,
    /// Planar threading with a blobbed loop, divided by γ.
    PlanarBlobbedLoop,
}

/// Verification record for one link state.
#[derive(Debug, Clone, Serialize)]
pub struct IdempotentReport {
    pub state: LinkState,
    pub construction: Construction,
    pub element: String,
    pub idempotent: bool,
    pub absorption: AbsorptionReport,
    pub generates: bool,
}

impl IdempotentReport {
    /// Idempotent, absorbing with scalar one, and generating.
    pub fn passes(&self) -> bool {
        self.idempotent
            && self.absorption.holds
            && self.absorption.scalar.as_deref() == Some("1")
            && self.generates
    }
}

fn invertible(x: Option<&Scalar>) -> bool {
    x.is_some_and(Scalar::is_unit)
}

/// The idempotent used for `p` under the given parameters, if the parameters
/// allow one.
pub fn idempotent_for(p: &LinkState, spec: &AlgebraSpec) -> Result<(Construction, AlgebraElement)> {
    let fam = spec.family();
    let delta_ok = invertible(spec.delta());
    let mirror = || normalized_idempotent(p, spec).map(|e| (Construction::Mirror, e));
    match fam {
        FamilyTag::Blob if delta_ok && invertible(spec.gamma()) => mirror(),
        FamilyTag::Blob => {
            let e = AlgebraElement::basis(spec, blob_eq(p, fam)?)?;
            if p.arcs().iter().any(|a| a.2) {
                let g = spec.gamma().expect("blob algebras carry gamma");
                let inv = g.invert().map_err(|_| Error::ParameterNotInvertible {
                    name: "gamma",
                    value: g.to_string(),
                    ring: spec.ring(),
                })?;
                Ok((Construction::PlanarBlobbedLoop, e.scale(&inv)))
            } else {
                Ok((Construction::Planar, e))
            }
        }
        FamilyTag::TemperleyLieb if !delta_ok => Ok((
            Construction::Planar,
            AlgebraElement::basis(spec, blob_eq(p, fam)?)?,
        )),
        FamilyTag::Brauer | FamilyTag::WalledBrauer { .. } if !delta_ok => Ok((
            Construction::Threaded,
            AlgebraElement::basis(spec, threaded_ep(p, fam)?)?,
        )),
        _ => mirror(),
    }
}

/// Link states covered by the filtration used for `spec`: every state with
/// `l..` defects (up to `n - 1`, or the sets `R_i` up to `n` for blob
/// algebras), where `l` is 1 when threading replaces non-invertible
/// parameters and 0 otherwise.
pub fn covered_states(spec: &AlgebraSpec) -> Result<Vec<LinkState>> {
    let fam = spec.family();
    let n = spec.n();
    let all_invertible = [spec.delta(), spec.epsilon(), spec.gamma()]
        .into_iter()
        .all(|x| x.is_none() || invertible(x));
    let lowest = usize::from(!all_invertible);
    let mut out = Vec::new();
    if fam == FamilyTag::Blob {
        for i in lowest..=n {
            out.extend(crate::linkstate::link_state_sets(
                fam,
                n,
                crate::linkstate::LinkStateSet::R,
                i,
            )?);
        }
    } else {
        for i in lowest..n {
            out.extend(crate::linkstate::link_state_sets(
                fam,
                n,
                crate::linkstate::LinkStateSet::P,
                i,
            )?);
        }
    }
    Ok(out)
}

/// Builds and checks the idempotent for every covered link state.
pub fn idempotent_reports(spec: &AlgebraSpec) -> Result<Vec<IdempotentReport>> {
    use rayon::prelude::*;
    covered_states(spec)?
        .par_iter()
        .map(|p| {
            let (construction, e) = idempotent_for(p, spec)?;
            Ok(IdempotentReport {
                state: p.clone(),
                construction,
                element: e.to_string(),
                idempotent: multiply(&e, &e)? == e,
                absorption: check_absorption(p, &e, spec)?,
                generates: check_ideal_generation(&e, p, spec)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::identity;
    use crate::coeff::RingSpec;
    use crate::linkstate::juxtapose;

    fn d(n: usize, s: &str) -> Diagram {
        Diagram::parse(n, s).unwrap()
    }

    fn ls(
        n: usize,
        arcs: &[(usize, usize)],
        defects: &[usize],
        isolated: &[usize],
        blobbed: &[usize],
    ) -> LinkState {
        LinkState::new(n, arcs, defects, isolated, blobbed).unwrap()
    }

    #[test]
    fn mirror_examples() {
        let p = ls(4, &[(1, 4)], &[3], &[2], &[]);
        assert_eq!(
            mirror_dp(&p, FamilyTag::RookBrauer).unwrap(),
            d(4, "1-4 1'-4' 3-3'")
        );
        assert_eq!(
            mirror_dp(&LinkState::all_defects(3), FamilyTag::Brauer).unwrap(),
            Diagram::identity(3)
        );
        let b = ls(1, &[], &[1], &[], &[1]);
        assert_eq!(mirror_dp(&b, FamilyTag::Blob).unwrap(), d(1, "1-1'*"));
    }

    #[test]
    fn rook_brauer_absorption_scalar() {
        let z = RingSpec::Integers;
        let fam = FamilyTag::RookBrauer;
        for (n, p) in [
            (3, ls(3, &[(1, 2)], &[], &[3], &[])),
            (4, ls(4, &[(1, 2)], &[4], &[3], &[])),
        ] {
            let spec = AlgebraSpec::with_ints(fam, n, z, 2, 3, 1).unwrap();
            let e = AlgebraElement::basis(&spec, mirror_dp(&p, fam).unwrap()).unwrap();
            let rep = check_absorption(&p, &e, &spec).unwrap();
            assert!(rep.holds, "{p}");
            assert_eq!(rep.exponents, Some((1, 1, 0)));
            assert_eq!(rep.scalar.as_deref(), Some("6"));
        }
    }

    #[test]
    fn normalized_examples() {
        let z = RingSpec::Integers;
        let arc = ls(2, &[(1, 2)], &[], &[], &[]);
        let tl = AlgebraSpec::with_ints(FamilyTag::TemperleyLieb, 2, z, 1, 1, 1).unwrap();
        let e = normalized_idempotent(&arc, &tl).unwrap();
        assert_eq!(
            e,
            AlgebraElement::basis(&tl, mirror_dp(&arc, tl.family()).unwrap()).unwrap()
        );
        assert_eq!(multiply(&e, &e).unwrap(), e);
        let z5 = RingSpec::integers_mod(5).unwrap();
        let rb = AlgebraSpec::with_ints(FamilyTag::RookBrauer, 2, z5, 2, 3, 1).unwrap();
        let e = normalized_idempotent(&arc, &rb).unwrap();
        assert_eq!(e.terms().values().next().unwrap(), &z5.from_i64(3));
        let br = AlgebraSpec::with_ints(FamilyTag::Brauer, 2, z, 0, 1, 1).unwrap();
        assert!(matches!(
            normalized_idempotent(&arc, &br),
            Err(Error::ParameterNotInvertible { name: "delta", .. })
        ));
    }

    #[test]
    fn walled_worked_example() {
        let p = ls(5, &[(1, 3)], &[2, 4, 5], &[], &[]);
        let e = walled_ep(&p, 2, 3).unwrap();
        assert_eq!(e, d(5, "3-5' 4-4' 2-2' 1'-3' 1-5"));
        assert!(threading_conditions(&p, &e).unwrap());
        assert_eq!(
            walled_ep(&LinkState::all_defects(3), 1, 2).unwrap(),
            Diagram::identity(3)
        );
        assert!(matches!(
            walled_ep(&ls(2, &[(1, 2)], &[], &[], &[]), 1, 1),
            Err(Error::NoDefects)
        ));
    }

    #[test]
    fn walled_threading_is_unique_when_forced() {
        let fam = FamilyTag::WalledBrauer { r: 1, s: 2 };
        let p = ls(3, &[(1, 2)], &[3], &[], &[]);
        let good: Vec<Diagram> = enumerate(fam, 3)
            .unwrap()
            .into_iter()
            .filter(|e| threading_conditions(&p, e).unwrap())
            .collect();
        assert_eq!(good, vec![walled_ep(&p, 1, 2).unwrap()]);
    }

    #[test]
    fn blob_seven_vertex_example() {
        let q = ls(7, &[(1, 2), (6, 7)], &[3, 4, 5], &[], &[3]);
        assert_eq!(vertex_split(&q).unwrap(), vec![(1, 3), (4, 4), (5, 7)]);
        let e = blob_eq(&q, FamilyTag::Blob).unwrap();
        assert_eq!(e, d(7, "1-3'* 4-4' 7-5' 2-3 5-6 1'-2' 6'-7'"));
        assert!(threading_conditions(&q, &e).unwrap());
    }

    #[test]
    fn blob_ten_vertex_example() {
        let q = ls(
            10,
            &[(1, 4), (2, 3), (6, 7), (8, 9)],
            &[5, 10],
            &[],
            &[1, 5],
        );
        assert!(q.is_legal(FamilyTag::Blob));
        let e = blob_eq(&q, FamilyTag::Blob).unwrap();
        assert!(threading_conditions(&q, &e).unwrap());
        let loops = sesqui(&q, &e).unwrap().graph.loops();
        assert_eq!(loops.len(), 1);
        assert!(loops[0].blobbed);
        let figure = d(10, "1-2 3-4 7-5'* 5-6 8-10' 9-10 1'-4'* 2'-3' 6'-7' 8'-9'");
        assert!(threading_conditions(&q, &figure).unwrap());
        assert_eq!(vertex_split(&q).unwrap(), vec![(1, 4), (5, 5), (6, 10)]);
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            vertex_split(&LinkState::all_defects(1)).unwrap(),
            vec![(1, 1)]
        );
        assert_eq!(
            vertex_split(&LinkState::all_defects(2)).unwrap(),
            vec![(1, 1), (2, 2)]
        );
        assert!(matches!(
            vertex_split(&ls(2, &[(1, 2)], &[], &[], &[])),
            Err(Error::NoDefects)
        ));
        assert_eq!(
            blob_eq(&LinkState::all_defects(3), FamilyTag::Blob).unwrap(),
            Diagram::identity(3)
        );
    }

    /// All non-crossing perfect matchings on `1..=m` as link states.
    fn planar_matchings(m: usize) -> Vec<LinkState> {
        let mut states: Vec<LinkState> = crate::linkstate::link_state_sets(
            FamilyTag::TemperleyLieb,
            m,
            crate::linkstate::LinkStateSet::P,
            0,
        )
        .unwrap();
        states.sort();
        states
    }

    #[test]
    fn loop_completion_against_meander_search() {
        for m in [2, 4, 6, 8] {
            for q in planar_matchings(m) {
                let q2 = blobbed_loop_completion(&q).unwrap();
                assert_eq!(juxtapose(&q, &q2).unwrap().loops().len(), 1, "{q}");
            }
        }
        let single = ls(2, &[(1, 2)], &[], &[], &[1]);
        let q2 = blobbed_loop_completion(&single).unwrap();
        let loops = juxtapose(&single, &q2).unwrap().loops();
        assert_eq!(loops.len(), 1);
        assert!(loops[0].blobbed);
        let nested = ls(6, &[(1, 6), (2, 5), (3, 4)], &[], &[], &[1]);
        let oracle: Vec<LinkState> = planar_matchings(6)
            .into_iter()
            .filter(|c| juxtapose(&nested, c).unwrap().loops().len() == 1)
            .collect();
        let q2 = blobbed_loop_completion(&nested).unwrap();
        assert!(oracle.contains(&q2));
        let figure_q = ls(6, &[(1, 4), (2, 3), (5, 6)], &[], &[], &[1]);
        assert_eq!(
            blobbed_loop_completion(&figure_q).unwrap(),
            ls(6, &[(1, 2), (4, 5), (3, 6)], &[], &[], &[])
        );
    }

    #[test]
    fn zero_defect_blobbed_state() {
        let z = RingSpec::Integers;
        let spec = AlgebraSpec::with_ints(FamilyTag::Blob, 2, z, 0, 1, 1).unwrap();
        let q = ls(2, &[(1, 2)], &[], &[], &[1]);
        let e = AlgebraElement::basis(&spec, blob_eq(&q, FamilyTag::Blob).unwrap()).unwrap();
        let rep = check_absorption(&q, &e, &spec).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.exponents, Some((0, 0, 1)));
    }

    #[test]
    fn commuting_examples() {
        let z = RingSpec::Integers;
        let spec = AlgebraSpec::with_ints(FamilyTag::RookBrauer, 2, z, 1, 1, 1).unwrap();
        let one = identity(&spec);
        assert!(check_commuting_idempotents(std::slice::from_ref(&one)).unwrap());
        let e = normalized_idempotent(&ls(2, &[(1, 2)], &[], &[], &[]), &spec).unwrap();
        let f = one.sub(&e).unwrap();
        assert!(check_commuting_idempotents(&[e.clone(), f]).unwrap());
        // the cup-cap and the projection onto the first strand do not commute
        let rho = normalized_idempotent(&ls(2, &[], &[2], &[1], &[]), &spec).unwrap();
        assert!(check_commuting_idempotents(std::slice::from_ref(&rho)).unwrap());
        assert!(!check_commuting_idempotents(&[e, rho]).unwrap());
        assert!(
            !check_commuting_idempotents(&[AlgebraElement::basis(&spec, d(2, "1-2 2'-1'"))
                .unwrap()
                .scale(&z.from_i64(2))])
            .unwrap()
        );
    }

    #[test]
    fn generation_examples() {
        let z = RingSpec::Integers;
        let tl = AlgebraSpec::with_ints(FamilyTag::TemperleyLieb, 2, z, 1, 1, 1).unwrap();
        let arc = ls(2, &[(1, 2)], &[], &[], &[]);
        let e = normalized_idempotent(&arc, &tl).unwrap();
        assert!(check_ideal_generation(&e, &arc, &tl).unwrap());
        assert!(!check_ideal_generation(&AlgebraElement::zero(&tl), &arc, &tl).unwrap());
        let w =
            AlgebraSpec::with_ints(FamilyTag::WalledBrauer { r: 1, s: 2 }, 3, z, 0, 1, 1).unwrap();
        let p = ls(3, &[(1, 2)], &[3], &[], &[]);
        let e = AlgebraElement::basis(&w, walled_ep(&p, 1, 2).unwrap()).unwrap();
        assert!(check_ideal_generation(&e, &p, &w).unwrap());
    }

    fn assert_suite(spec: &AlgebraSpec) -> usize {
        let reports = idempotent_reports(spec).unwrap();
        for r in &reports {
            assert!(r.passes(), "{spec} {}: {:?}", r.state, r);
        }
        reports.len()
    }

    #[test]
    fn suite_invertible_parameters() {
        let q = RingSpec::Rationals;
        let mut total = 0;
        for fam in [
            FamilyTag::RookBrauer,
            FamilyTag::Motzkin,
            FamilyTag::Rook,
            FamilyTag::PlanarRook,
            FamilyTag::Brauer,
            FamilyTag::TemperleyLieb,
            FamilyTag::DiluteTL,
        ] {
            for n in 1..=3 {
                total += assert_suite(&AlgebraSpec::with_ints(fam, n, q, 2, 3, 5).unwrap());
            }
        }
        for n in 1..=4 {
            total += assert_suite(&AlgebraSpec::with_ints(FamilyTag::Blob, n, q, 2, 3, 5).unwrap());
        }
        assert!(total > 100, "{total}");
    }

    #[test]
    fn suite_threading() {
        let z = RingSpec::Integers;
        let mut total = 0;
        for n in 1..=3 {
            total += assert_suite(
                &AlgebraSpec::with_ints(FamilyTag::TemperleyLieb, n, z, 0, 1, 1).unwrap(),
            );
            total +=
                assert_suite(&AlgebraSpec::with_ints(FamilyTag::Brauer, n, z, 0, 1, 1).unwrap());
        }
        for n in 1..=4 {
            total += assert_suite(&AlgebraSpec::with_ints(FamilyTag::Blob, n, z, 0, 1, 1).unwrap());
            for r in 0..=n {
                let fam = FamilyTag::WalledBrauer { r, s: n - r };
                total += assert_suite(&AlgebraSpec::with_ints(fam, n, z, 0, 1, 1).unwrap());
            }
        }
        assert!(total > 30, "{total}");
    }

    #[test]
    fn mirror_exponents_match_composition() {
        let q = RingSpec::Rationals;
        for fam in [
            FamilyTag::RookBrauer,
            FamilyTag::Motzkin,
            FamilyTag::Rook,
            FamilyTag::PlanarRook,
            FamilyTag::Brauer,
            FamilyTag::WalledBrauer { r: 1, s: 2 },
            FamilyTag::TemperleyLieb,
            FamilyTag::Blob,
            FamilyTag::DiluteTL,
        ] {
            let spec = AlgebraSpec::with_ints(fam, 3, q, 2, 3, 5).unwrap();
            for p in crate::linkstate::link_state_sets(fam, 3, crate::linkstate::LinkStateSet::P, 0)
                .unwrap()
                .into_iter()
                .chain(
                    crate::linkstate::link_state_sets(fam, 3, crate::linkstate::LinkStateSet::P, 1)
                        .unwrap(),
                )
            {
                let e = AlgebraElement::basis(&spec, mirror_dp(&p, fam).unwrap()).unwrap();
                let rep = check_absorption(&p, &e, &spec).unwrap();
                assert!(rep.holds, "{fam} {p}");
                assert_eq!(rep.exponents, Some(mirror_exponents(&p, fam)), "{fam} {p}");
            }
        }
    }
}
