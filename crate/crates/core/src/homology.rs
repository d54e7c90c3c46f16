//! Reduced bar complexes and Tor/Ext with trivial coefficients.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    group_algebra, quotient_structure, Algebra, AlgebraSpec, GroupSpec, QuotientSpec,
    StructureTable,
};
use crate::coeff::{
    homology_from_reductions, reduce, AbelianInvariants, Reduction, RingSpec, Scalar, SparseMatrix,
};
use crate::error::{Error, Result};

/// Default cap on the dimension of any chain group.
pub const DEFAULT_BUDGET: usize = 250_000;

/// An algebra with a unit-normalized augmentation and a chosen complement of
/// the unit.
#[derive(Debug, Clone)]
pub struct AugmentedAlgebra {
    table: StructureTable,
    pivot: usize,
    /// Basis indices other than the pivot; `reduced[i]` labels the i-th
    /// element `b - τ(b)·1` of the augmentation ideal.
    reduced: Vec<usize>,
    products: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl AugmentedAlgebra {
    pub fn new(table: StructureTable) -> Result<Self> {
        let ring = table.ring;
        let dim = table.dim();
        let tau_of = |v: &[(usize, Scalar)]| {
            v.iter().fold(ring.zero(), |acc, (k, c)| {
                &acc + &(c * &table.augmentation[*k])
            })
        };
        if !tau_of(&table.unit).is_one() {
            return Err(Error::NotAnAlgebraMap("tau(1) != 1".into()));
        }
        for i in 0..dim {
            for j in 0..dim {
                let lhs = tau_of(&table.products[i][j]);
                let rhs = &table.augmentation[i] * &table.augmentation[j];
                if lhs != rhs {
                    return Err(Error::NotAnAlgebraMap(format!(
                        "tau({} * {}) = {lhs} but tau * tau = {rhs}",
                        table.labels[i], table.labels[j]
                    )));
                }
            }
        }
        let pivot = table
            .unit
            .iter()
            .find(|(_, c)| c.is_unit())
            .map(|(k, _)| *k)
            .ok_or(Error::NoUnitPivot)?;
        let reduced: Vec<usize> = (0..dim).filter(|&k| k != pivot).collect();
        let mut alg = AugmentedAlgebra {
            table,
            pivot,
            reduced,
            products: Vec::new(),
        };
        alg.products = alg.reduced_products()?;
        Ok(alg)
    }

    /// The ground ring itself.
    pub fn trivial(ring: RingSpec) -> Self {
        let table = StructureTable {
            ring,
            labels: vec!["1".into()],
            products: vec![vec![vec![(0, ring.one())]]],
            unit: vec![(0, ring.one())],
            augmentation: vec![ring.one()],
        };
        AugmentedAlgebra::new(table).expect("k is augmented")
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        AugmentedAlgebra::new(Algebra::new(spec.clone())?.structure_table())
    }

    pub fn from_quotient(q: &QuotientSpec) -> Result<Self> {
        AugmentedAlgebra::new(quotient_structure(q)?.1)
    }

    pub fn group(g: GroupSpec, ring: RingSpec) -> Result<Self> {
        AugmentedAlgebra::new(group_algebra(g, ring)?)
    }

    pub fn ring(&self) -> RingSpec {
        self.table.ring
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    /// Dimension of the augmentation ideal.
    pub fn reduced_dim(&self) -> usize {
        self.reduced.len()
    }

    /// The augmentation ideal basis, each element in coordinates of the
    /// full basis.
    pub fn augmentation_ideal_basis(&self) -> Vec<Vec<(usize, Scalar)>> {
        self.reduced
            .iter()
            .map(|&b| self.ideal_element(b))
            .collect()
    }

    /// Labels like `b - 1` for the augmentation ideal basis.
    pub fn augmentation_ideal_labels(&self) -> Vec<String> {
        let one = &self.table.labels[self.pivot];
        self.reduced
            .iter()
            .map(|&b| {
                let t = &self.table.augmentation[b];
                let label = &self.table.labels[b];
                if t.is_zero() {
                    label.clone()
                } else if t.is_one() {
                    format!("{label} - {one}")
                } else {
                    format!("{label} - {t}*{one}")
                }
            })
            .collect()
    }

    /// `a_i · a_j` in augmentation ideal coordinates.
    pub fn reduced_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i][j]
    }

    fn ideal_element(&self, b: usize) -> Vec<(usize, Scalar)> {
        let t = &self.table.augmentation[b];
        let mut v = vec![(b, self.ring().one())];
        v.extend(self.table.unit.iter().map(|(k, c)| (*k, -&(t * c))));
        v
    }

    fn reduced_products(&self) -> Result<Vec<Vec<Vec<(usize, Scalar)>>>> {
        let ring = self.ring();
        let dim = self.dim();
        let elems = self.augmentation_ideal_basis();
        let pivot_inv = self
            .table
            .unit
            .iter()
            .find(|(k, _)| *k == self.pivot)
            .map(|(_, c)| c.invert())
            .expect("pivot lies in the unit")?;
        let mut unit_dense = vec![ring.zero(); dim];
        for (k, c) in &self.table.unit {
            unit_dense[*k] = c.clone();
        }
        let mut pos = vec![usize::MAX; dim];
        for (p, &b) in self.reduced.iter().enumerate() {
            pos[b] = p;
        }
        elems
            .iter()
            .map(|x| {
                elems
                    .iter()
                    .map(|y| {
                        let mut prod = vec![ring.zero(); dim];
                        for (i, a) in x {
                            for (j, b) in y {
                                let ab = a * b;
                                for (k, c) in &self.table.products[*i][*j] {
                                    prod[*k] = &prod[*k] + &(&ab * c);
                                }
                            }
                        }
                        // prod = Σ y_b (b - τ(b)·1) with Σ y_b τ(b) = s
                        // and the pivot coordinate equal to -s·1_u.
                        let s = -&(&prod[self.pivot] * &pivot_inv);
                        let mut out = Vec::new();
                        let mut tau = ring.zero();
                        for &b in &self.reduced {
                            let yb = &prod[b] + &(&s * &unit_dense[b]);
                            if !yb.is_zero() {
                                tau = &tau + &(&yb * &self.table.augmentation[b]);
                                out.push((pos[b], yb));
                            }
                        }
                        if tau != s {
                            return Err(Error::NotAnAlgebraMap(
                                "augmentation ideal is not closed under products".into(),
                            ));
                        }
                        Ok(out)
                    })
                    .collect()
            })
            .collect()
    }
}

/// A bounded chain complex `C_{top} -> ... -> C_0 -> 0`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub ring: RingSpec,
    /// `boundaries[k]` is `d_k : C_k -> C_{k-1}`; `d_0` has no rows.
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn top(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn rank_of(&self, k: usize) -> usize {
        self.boundaries[k].cols()
    }

    /// Checks `d_{k-1} ∘ d_k = 0` throughout.
    pub fn check_square_zero(&self) -> Result<()> {
        let bad = (1..self.boundaries.len())
            .into_par_iter()
            .map(|k| {
                self.boundaries[k - 1]
                    .mul(&self.boundaries[k])
                    .map(|m| m.is_zero())
            })
            .collect::<Result<Vec<bool>>>()?;
        if bad.iter().all(|&ok| ok) {
            Ok(())
        } else {
            Err(Error::CompositionNotZero)
        }
    }

    /// The dual cochain complex, returned as boundaries `δ^k : C^k -> C^{k+1}`
    /// stored at index `k`, i.e. the transpose of `d_{k+1}`.
    pub fn dual(&self) -> Vec<SparseMatrix> {
        self.boundaries[1..]
            .par_iter()
            .map(|d| d.transpose())
            .collect()
    }
}

/// The reduced bar complex of `a` through degree `top`.
pub fn bar_complex_through(
    a: &AugmentedAlgebra,
    top: usize,
    budget: usize,
) -> Result<ChainComplex> {
    let ring = a.ring();
    let m = a.reduced_dim();
    let mut dims = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let dim =
            m.checked_pow(k as u32)
                .filter(|&d| d <= budget)
                .ok_or(Error::BudgetExceeded {
                    degree: k,
                    dim: m.saturating_pow(k as u32),
                    budget,
                })?;
        dims.push(dim);
    }
    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(SparseMatrix::zero(0, 1, ring));
    if top >= 1 {
        boundaries.push(SparseMatrix::zero(1, m, ring));
    }
    for k in 2..=top {
        let columns: Vec<Vec<(usize, Scalar)>> = (0..dims[k])
            .into_par_iter()
            .map(|c| bar_column(a, k, c, &dims))
            .collect();
        boundaries.push(SparseMatrix::from_columns(dims[k - 1], ring, columns)?);
    }
    let complex = ChainComplex { ring, boundaries };
    complex.check_square_zero()?;
    Ok(complex)
}

/// The reduced bar complex built through degree `d + 1`, so that degrees
/// `0..=d` of its homology are exact.
pub fn bar_complex(a: &AugmentedAlgebra, d: usize) -> Result<ChainComplex> {
    bar_complex_through(a, d + 1, DEFAULT_BUDGET)
}

fn bar_column(a: &AugmentedAlgebra, k: usize, c: usize, dims: &[usize]) -> Vec<(usize, Scalar)> {
    let m = a.reduced_dim();
    let mut digits = vec![0usize; k];
    let mut rest = c;
    for slot in digits.iter_mut().rev() {
        *slot = rest % m;
        rest /= m;
    }
    let mut out = Vec::new();
    for i in 0..k - 1 {
        // Tensor factors before the merged pair contribute `prefix`; the ones
        // after it contribute `suffix`.
        let prefix = digits[..i].iter().fold(0, |acc, &x| acc * m + x);
        let tail = k - i - 2;
        let suffix = digits[i + 2..].iter().fold(0, |acc, &x| acc * m + x);
        let scale = dims[tail];
        for (l, coef) in a.reduced_product(digits[i], digits[i + 1]) {
            let row = (prefix * m + l) * scale + suffix;
            // inner faces are numbered from 1, so face i+1 has sign (-1)^(i+1)
            let v = if i % 2 == 0 { -coef } else { coef.clone() };
            out.push((row, v));
        }
    }
    out
}

/// Per-degree invariants of a graded module computed up to a truncation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedInvariants {
    pub ring: String,
    pub truncation: usize,
    pub degrees: Vec<AbelianInvariants>,
    /// Degree k is exact when the complex reached degree k+1.
    pub reliable: Vec<bool>,
}

impl GradedInvariants {
    pub fn get(&self, k: usize) -> Option<&AbelianInvariants> {
        self.degrees.get(k)
    }

    /// Whether the module is the ground ring in degree 0 and zero above.
    pub fn is_concentrated_in_degree_zero(&self) -> bool {
        self.degrees.first() == Some(&AbelianInvariants::free(1))
            && self.degrees[1..].iter().all(|g| g.is_zero())
    }

    /// Dimensions (free ranks) per degree.
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|g| g.free_rank).collect()
    }
}

impl fmt::Display for GradedInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .degrees
            .iter()
            .map(|g| show_over(g, &self.ring))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Renders invariants with the ground ring's own symbol, e.g. `Q^2`.
pub fn show_over(g: &AbelianInvariants, ring: &str) -> String {
    if ring == "Z" || g.is_zero() {
        return g.to_string();
    }
    match g.free_rank {
        1 => ring.to_string(),
        r => format!("{ring}^{r}"),
    }
}

/// Reductions of every boundary of a complex, computed in parallel.
fn reductions(ms: &[SparseMatrix]) -> Result<Vec<Reduction>> {
    ms.par_iter().map(reduce).collect()
}

fn graded(
    ring: RingSpec,
    d: usize,
    degrees: Vec<AbelianInvariants>,
    built: usize,
) -> GradedInvariants {
    let reliable = (0..degrees.len()).map(|k| k < built).collect();
    GradedInvariants {
        ring: ring.to_string(),
        truncation: d,
        degrees,
        reliable,
    }
}

/// Homology of a complex in degrees `0..=d`; needs `top >= d + 1`.
pub fn tor_of_complex(c: &ChainComplex, d: usize) -> Result<GradedInvariants> {
    if c.top() < d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "complex stops at degree {}",
            c.top()
        )));
    }
    let red = reductions(&c.boundaries[..=d + 1])?;
    let degrees = (0..=d)
        .map(|k| homology_from_reductions(c.rank_of(k), &red[k], &red[k + 1]))
        .collect::<Result<Vec<_>>>()?;
    Ok(graded(c.ring, d, degrees, c.top()))
}

/// Cohomology of the dual of a complex in degrees `0..=d`.
pub fn ext_of_complex(c: &ChainComplex, d: usize) -> Result<GradedInvariants> {
    if c.top() < d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "complex stops at degree {}",
            c.top()
        )));
    }
    let dual = c.dual();
    let red = reductions(&dual[..=d])?;
    let zero = Reduction {
        rank: 0,
        torsion: Vec::new(),
    };
    let degrees = (0..=d)
        .map(|k| {
            let incoming = if k == 0 { &zero } else { &red[k - 1] };
            homology_from_reductions(c.rank_of(k), &red[k], incoming)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(graded(c.ring, d, degrees, c.top()))
}

pub fn tor(a: &AugmentedAlgebra, d: usize) -> Result<GradedInvariants> {
    tor_of_complex(&bar_complex(a, d)?, d)
}

pub fn ext(a: &AugmentedAlgebra, d: usize) -> Result<GradedInvariants> {
    ext_of_complex(&bar_complex(a, d)?, d)
}

/// Tor and Ext from a single bar complex.
pub fn tor_ext(
    a: &AugmentedAlgebra,
    d: usize,
    budget: usize,
) -> Result<(GradedInvariants, GradedInvariants)> {
    let c = bar_complex_through(a, d + 1, budget)?;
    let (t, e) = rayon::join(|| tor_of_complex(&c, d), || ext_of_complex(&c, d));
    Ok((t?, e?))
}

pub fn tor_of_quotient(q: &QuotientSpec, d: usize) -> Result<GradedInvariants> {
    tor(&AugmentedAlgebra::from_quotient(q)?, d)
}

pub fn ext_of_quotient(q: &QuotientSpec, d: usize) -> Result<GradedInvariants> {
    ext(&AugmentedAlgebra::from_quotient(q)?, d)
}

/// Tor and Ext of one algebra, in the JSON shape used by the command line.
#[derive(Debug, Clone, Serialize)]
pub struct HomologyReport {
    pub algebra: serde_json::Value,
    pub ring: String,
    #[serde(rename = "D")]
    pub truncation: usize,
    pub tor: Vec<AbelianInvariants>,
    pub ext: Vec<AbelianInvariants>,
}

impl HomologyReport {
    pub fn new(algebra: serde_json::Value, tor: &GradedInvariants, ext: &GradedInvariants) -> Self {
        HomologyReport {
            algebra,
            ring: tor.ring.clone(),
            truncation: tor.truncation,
            tor: tor.degrees.clone(),
            ext: ext.degrees.clone(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,free_rank_tor,torsion_tor,free_rank_ext,torsion_ext\n");
        let torsion = |g: &AbelianInvariants| {
            g.torsion
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        for (k, (t, e)) in self.tor.iter().zip(&self.ext).enumerate() {
            out.push_str(&format!(
                "{k},{},{},{},{}\n",
                t.free_rank,
                torsion(t),
                e.free_rank,
                torsion(e)
            ));
        }
        out
    }
}

/// Outcome of comparing an algebra's Tor and Ext with those of a group.
#[derive(Debug, Clone, Serialize)]
pub struct CentredReport {
    pub group: String,
    pub ring: String,
    #[serde(rename = "D")]
    pub truncation: usize,
    pub agrees: bool,
    pub tor_algebra: GradedInvariants,
    pub tor_group: GradedInvariants,
    pub ext_algebra: GradedInvariants,
    pub ext_group: GradedInvariants,
    /// `("tor" | "ext", degree)` of the first mismatch.
    pub first_disagreement: Option<(&'static str, usize)>,
}

/// Compares Tor and Ext of `a` with group (co)homology of `g` over the ring
/// of `a`, degree by degree.
pub fn g_centred_check(a: &AugmentedAlgebra, g: GroupSpec, d: usize) -> Result<CentredReport> {
    let ring = a.ring();
    let ka = AugmentedAlgebra::group(g, ring)?;
    let ((ta, ea), (tg, eg)) = {
        let (x, y) = rayon::join(
            || tor_ext(a, d, DEFAULT_BUDGET),
            || tor_ext(&ka, d, DEFAULT_BUDGET),
        );
        (x?, y?)
    };
    let first = |x: &GradedInvariants, y: &GradedInvariants| {
        (0..=d).find(|&k| x.degrees[k] != y.degrees[k])
    };
    let first_disagreement = first(&ta, &tg)
        .map(|k| ("tor", k))
        .or_else(|| first(&ea, &eg).map(|k| ("ext", k)));
    Ok(CentredReport {
        group: g.to_string(),
        ring: ring.to_string(),
        truncation: d,
        agrees: first_disagreement.is_none(),
        tor_algebra: ta,
        tor_group: tg,
        ext_algebra: ea,
        ext_group: eg,
        first_disagreement,
    })
}

/// Runs [`g_centred_check`] once per ring, rebuilding the algebra each time.
pub fn g_centred_check_rings<F>(
    build: F,
    g: GroupSpec,
    d: usize,
    rings: &[RingSpec],
) -> Result<Vec<CentredReport>>
where
    F: Fn(RingSpec) -> Result<AugmentedAlgebra>,
{
    rings
        .iter()
        .map(|&r| g_centred_check(&build(r)?, g, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::FamilyTag;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn inv(free: usize, torsion: &[u64]) -> AbelianInvariants {
        AbelianInvariants::new(free, torsion.iter().copied())
    }

    #[test]
    fn augmentation_ideal_examples() {
        let tl = AugmentedAlgebra::from_spec(
            &AlgebraSpec::with_ints(FamilyTag::TemperleyLieb, 2, z(), 1, 0, 0).unwrap(),
        )
        .unwrap();
        assert_eq!(tl.reduced_dim(), 1);
        let s2 = AugmentedAlgebra::group(GroupSpec::Symmetric(2), z()).unwrap();
        assert_eq!(s2.augmentation_ideal_labels(), vec!["[2,1] - [1,2]"]);
        // (σ-1)² = -2(σ-1)
        assert_eq!(s2.reduced_product(0, 0), &[(0, z().from_i64(-2))]);
        let br = AugmentedAlgebra::from_spec(
            &AlgebraSpec::with_ints(FamilyTag::Brauer, 2, z(), 1, 0, 0).unwrap(),
        )
        .unwrap();
        assert_eq!(br.reduced_dim(), 2);
    }

    #[test]
    fn trivial_algebra() {
        let k = AugmentedAlgebra::trivial(z());
        assert_eq!(k.reduced_dim(), 0);
        let t = tor(&k, 3).unwrap();
        assert!(t.is_concentrated_in_degree_zero());
        assert!(ext(&k, 5).unwrap().is_concentrated_in_degree_zero());
    }

    #[test]
    fn cyclic_of_order_two() {
        let s2 = AugmentedAlgebra::group(GroupSpec::Symmetric(2), z()).unwrap();
        let t = tor(&s2, 4).unwrap();
        assert_eq!(
            t.degrees,
            vec![
                inv(1, &[]),
                inv(0, &[2]),
                inv(0, &[]),
                inv(0, &[2]),
                inv(0, &[])
            ]
        );
        let e = ext(&s2, 4).unwrap();
        assert_eq!(
            e.degrees,
            vec![
                inv(1, &[]),
                inv(0, &[]),
                inv(0, &[2]),
                inv(0, &[]),
                inv(0, &[2])
            ]
        );
        assert_eq!(t.to_string(), "[Z, Z/2, 0, Z/2, 0]");
    }

    #[test]
    fn symmetric_three_over_integers() {
        let s3 = AugmentedAlgebra::group(GroupSpec::Symmetric(3), z()).unwrap();
        let t = tor(&s3, 3).unwrap();
        assert_eq!(
            t.degrees,
            vec![inv(1, &[]), inv(0, &[2]), inv(0, &[]), inv(0, &[6])]
        );
    }

    #[test]
    fn bar_dimensions() {
        let s3 = AugmentedAlgebra::group(GroupSpec::Symmetric(3), z()).unwrap();
        let c = bar_complex(&s3, 2).unwrap();
        assert_eq!(
            (0..=3).map(|k| c.rank_of(k)).collect::<Vec<_>>(),
            vec![1, 5, 25, 125]
        );
        let err = bar_complex_through(&s3, 6, 1000).unwrap_err();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                degree: 5,
                dim: 3125,
                ..
            }
        ));
    }

    #[test]
    fn maschke_over_rationals() {
        for g in [
            GroupSpec::Symmetric(2),
            GroupSpec::Symmetric(3),
            GroupSpec::Cyclic(3),
        ] {
            let a = AugmentedAlgebra::group(g, RingSpec::Rationals).unwrap();
            let (t, e) = tor_ext(&a, 2, DEFAULT_BUDGET).unwrap();
            assert!(t.is_concentrated_in_degree_zero(), "{g}");
            assert!(e.is_concentrated_in_degree_zero(), "{g}");
        }
    }

    #[test]
    fn temperley_lieb_vanishing() {
        let spec =
            AlgebraSpec::with_ints(FamilyTag::TemperleyLieb, 3, RingSpec::Rationals, 1, 0, 0)
                .unwrap();
        let t = tor(&AugmentedAlgebra::from_spec(&spec).unwrap(), 3).unwrap();
        assert_eq!(t.ranks(), vec![1, 0, 0, 0]);
        assert_eq!(t.to_string(), "[Q, 0, 0, 0]");
    }

    #[test]
    fn quotient_matches_group() {
        let rb = AlgebraSpec::with_ints(FamilyTag::RookBrauer, 2, z(), 1, 1, 0).unwrap();
        let q = QuotientSpec::new(rb, 1).unwrap();
        let s2 = AugmentedAlgebra::group(GroupSpec::Symmetric(2), z()).unwrap();
        assert_eq!(tor_of_quotient(&q, 3).unwrap(), tor(&s2, 3).unwrap());
        assert_eq!(ext_of_quotient(&q, 3).unwrap(), ext(&s2, 3).unwrap());
    }

    #[test]
    fn rook_is_sigma_centred() {
        let spec = AlgebraSpec::with_ints(FamilyTag::Rook, 2, z(), 0, 1, 0).unwrap();
        let a = AugmentedAlgebra::from_spec(&spec).unwrap();
        let r = g_centred_check(&a, GroupSpec::Symmetric(2), 3).unwrap();
        assert!(r.agrees, "{r:?}");
        let k = AugmentedAlgebra::trivial(z());
        assert!(g_centred_check(&k, GroupSpec::Trivial, 3).unwrap().agrees);
        let r = g_centred_check(&k, GroupSpec::Symmetric(2), 2).unwrap();
        assert_eq!(r.first_disagreement, Some(("tor", 1)));
    }

    #[test]
    fn dilute_unit_has_several_terms() {
        let spec =
            AlgebraSpec::with_ints(FamilyTag::DiluteTL, 2, RingSpec::Rationals, 1, 0, 0).unwrap();
        let a = AugmentedAlgebra::from_spec(&spec).unwrap();
        assert!(a.table().unit.len() > 1);
        assert!(tor(&a, 3).unwrap().is_concentrated_in_degree_zero());
    }

    #[test]
    fn report_csv() {
        let s2 = AugmentedAlgebra::group(GroupSpec::Symmetric(2), z()).unwrap();
        let (t, e) = tor_ext(&s2, 2, DEFAULT_BUDGET).unwrap();
        let r = HomologyReport::new(serde_json::json!("S2"), &t, &e);
        assert_eq!(r.to_csv(), "degree,free_rank_tor,torsion_tor,free_rank_ext,torsion_ext\n0,1,,1,\n1,0,2,0,\n2,0,,0,2\n");
        let j = serde_json::to_string(&r).unwrap();
        assert!(j.starts_with("{\"algebra\":\"S2\",\"ring\":\"Z\",\"D\":2,"));
    }
}
