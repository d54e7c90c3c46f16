//! The norm map and the integer-graded Tate splice.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::GroupSpec;
use crate::coeff::{AbelianInvariants, RingSpec, Scalar};
use crate::error::{Error, Result};
use crate::homology::{
    g_centred_check, show_over, tor_ext, AugmentedAlgebra, GradedInvariants, DEFAULT_BUDGET,
};

/// The norm `H_0 -> H^0` on trivial coefficients: multiplication by `|G|`.
pub fn norm_map(g: GroupSpec, ring: RingSpec) -> Scalar {
    ring.from_i64(g.order() as i64)
}

/// Kernel and cokernel of multiplication by `s` on the ground ring.
fn kernel_cokernel(s: &Scalar) -> (AbelianInvariants, AbelianInvariants) {
    match s {
        Scalar::Integer(v) => {
            let v = v.magnitude();
            if v == &0u32.into() {
                (AbelianInvariants::free(1), AbelianInvariants::free(1))
            } else {
                let t: u64 = v.try_into().expect("group orders fit in 64 bits");
                (AbelianInvariants::zero(), AbelianInvariants::new(0, [t]))
            }
        }
        _ if s.is_zero() => (AbelianInvariants::free(1), AbelianInvariants::free(1)),
        _ if s.is_unit() => (AbelianInvariants::zero(), AbelianInvariants::zero()),
        _ => unreachable!("homology rings are Z or fields"),
    }
}

/// Tate groups in degrees `[-D-1, D]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TateTable {
    pub ring: String,
    pub group: String,
    pub norm: Scalar,
    pub groups: BTreeMap<i64, AbelianInvariants>,
}

impl TateTable {
    /// Splices Tor below and Ext above the norm.
    pub fn splice(
        g: GroupSpec,
        tor: &GradedInvariants,
        ext: &GradedInvariants,
        ring: RingSpec,
    ) -> Self {
        let d = tor.truncation.min(ext.truncation) as i64;
        let norm = norm_map(g, ring);
        let (ker, coker) = kernel_cokernel(&norm);
        let groups = (-d - 1..=d)
            .map(|p| {
                let h = match p {
                    0 => coker.clone(),
                    -1 => ker.clone(),
                    p if p >= 1 => ext.degrees[p as usize].clone(),
                    p => tor.degrees[(-p - 1) as usize].clone(),
                };
                (p, h)
            })
            .collect();
        TateTable {
            ring: ring.to_string(),
            group: g.to_string(),
            norm,
            groups,
        }
    }

    pub fn range(&self) -> (i64, i64) {
        let lo = *self.groups.keys().next().expect("nonempty range");
        let hi = *self.groups.keys().next_back().expect("nonempty range");
        (lo, hi)
    }

    pub fn get(&self, p: i64) -> Option<&AbelianInvariants> {
        self.groups.get(&p)
    }

    pub fn is_zero(&self) -> bool {
        self.groups.values().all(|g| g.is_zero())
    }

    /// Two rows, degrees over groups, with columns padded to a common width.
    pub fn pretty(&self) -> String {
        let cells: Vec<(String, String)> = self
            .groups
            .iter()
            .map(|(p, g)| (p.to_string(), show_over(g, &self.ring)))
            .collect();
        let mut top = String::from("p |");
        let mut bottom = String::from("H |");
        for (p, g) in &cells {
            let w = p.len().max(g.len());
            top.push_str(&format!(" {p:>w$}"));
            bottom.push_str(&format!(" {g:>w$}"));
        }
        format!("{top}\n{bottom}\n")
    }
}

impl fmt::Display for TateTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Serialize for TateTable {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        struct Groups<'a>(&'a BTreeMap<i64, AbelianInvariants>);
        impl Serialize for Groups<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = ser.serialize_map(Some(self.0.len()))?;
                for (p, g) in self.0 {
                    m.serialize_entry(&p.to_string(), g)?;
                }
                m.end()
            }
        }
        let (lo, hi) = self.range();
        let mut m = ser.serialize_map(Some(5))?;
        m.serialize_entry("range", &[lo, hi])?;
        m.serialize_entry("group", &self.group)?;
        m.serialize_entry("ring", &self.ring)?;
        m.serialize_entry("norm", &self.norm.to_string())?;
        m.serialize_entry("groups", &Groups(&self.groups))?;
        m.end()
    }
}

/// Tate table of an algebra that is `g`-centred through degree `d`.
pub fn tate_table(a: &AugmentedAlgebra, g: GroupSpec, d: usize) -> Result<TateTable> {
    let report = g_centred_check(a, g, d)?;
    if let Some((which, degree)) = report.first_disagreement {
        return Err(Error::NotGCentred {
            group: g.to_string(),
            which,
            degree,
        });
    }
    Ok(TateTable::splice(
        g,
        &report.tor_algebra,
        &report.ext_algebra,
        a.ring(),
    ))
}

/// Tate cohomology of the group itself.
pub fn tate_group(g: GroupSpec, d: usize, ring: RingSpec) -> Result<TateTable> {
    let (t, e) = tor_ext(&AugmentedAlgebra::group(g, ring)?, d, DEFAULT_BUDGET)?;
    Ok(TateTable::splice(g, &t, &e, ring))
}
