//! Named checks, one per published (co)homology isomorphism.

use diagalg::algebra::{multiply, AlgebraElement, AlgebraSpec, GroupSpec, QuotientSpec};
use diagalg::coeff::{RingSpec, Scalar};
use diagalg::diagram::{Diagram, FamilyTag};
use diagalg::homology::{g_centred_check, AugmentedAlgebra, CentredReport};
use diagalg::tate::{tate_group, tate_table};
use serde::Serialize;
use serde_json::json;

use crate::CliError;

/// Which group the algebra is compared with.
#[derive(Debug, Clone, Copy)]
pub enum Target {
    Trivial,
    SymmetricN,
    WallProduct,
}

impl Target {
    fn group(self, spec: &AlgebraSpec) -> GroupSpec {
        match (self, spec.family()) {
            (Target::Trivial, _) => GroupSpec::Trivial,
            (Target::WallProduct, FamilyTag::WalledBrauer { r, s }) => {
                GroupSpec::ProductSymmetric(r, s)
            }
            _ => GroupSpec::Symmetric(spec.n()),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Claim {
    /// Tor and Ext of the algebra agree with those of the group.
    Centred(Target),
    /// The same for the quotient by the ideal of the given level.
    Quotient(i64, Target),
    /// The Tate table of the algebra agrees with that of the group.
    Tate(Target),
    /// `e1 ρ1 e1 = ε e1` in the two-strand rook-Brauer algebra.
    RookBrauerRelation,
}

#[derive(Debug, Clone, Copy)]
pub enum Hypothesis {
    Invertible(&'static [&'static str]),
    OddN,
    OddWall,
    NAtLeastTwo,
}

/// Default arguments for a registry entry; every field can be overridden.
#[derive(Debug, Clone, Copy)]
pub struct Defaults {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub delta: i64,
    pub epsilon: i64,
    pub gamma: i64,
    pub ring: &'static str,
    pub degree: usize,
}

const BASE: Defaults = Defaults {
    n: 2,
    r: 0,
    s: 0,
    delta: 1,
    epsilon: 1,
    gamma: 1,
    ring: "z",
    degree: 3,
};

#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub id: &'static str,
    pub family: &'static str,
    pub statement: &'static str,
    pub hypotheses: &'static [Hypothesis],
    pub claim: Claim,
    pub defaults: Defaults,
}

pub const REGISTRY: &[Entry] = &[
    Entry {
        id: "rb-invertible",
        family: "rb",
        statement: "rook-Brauer with delta and epsilon invertible has the (co)homology of the symmetric group",
        hypotheses: &[Hypothesis::Invertible(&["delta", "epsilon"])],
        claim: Claim::Centred(Target::SymmetricN),
        defaults: BASE,
    },
    Entry {
        id: "motzkin-invertible",
        family: "motzkin",
        statement: "Motzkin with delta and epsilon invertible has vanishing positive-degree (co)homology",
        hypotheses: &[Hypothesis::Invertible(&["delta", "epsilon"])],
        claim: Claim::Centred(Target::Trivial),
        defaults: BASE,
    },
    Entry {
        id: "tl-invertible",
        family: "tl",
        statement: "Temperley-Lieb with delta invertible has vanishing positive-degree (co)homology",
        hypotheses: &[Hypothesis::Invertible(&["delta"])],
        claim: Claim::Centred(Target::Trivial),
        defaults: Defaults { n: 3, ..BASE },
    },
    Entry {
        id: "tl-quotient",
        family: "tl",
        statement: "Temperley-Lieb modulo its no-propagating-edge ideal has vanishing positive-degree (co)homology for any delta",
        hypotheses: &[Hypothesis::NAtLeastTwo],
        claim: Claim::Quotient(0, Target::Trivial),
        defaults: Defaults { n: 4, delta: 0, ..BASE },
    },
    Entry {
        id: "tl-odd",
        family: "tl",
        statement: "Temperley-Lieb on an odd number of strands has vanishing positive-degree (co)homology for any delta",
        hypotheses: &[Hypothesis::OddN],
        claim: Claim::Centred(Target::Trivial),
        defaults: Defaults { n: 3, delta: 0, ..BASE },
    },
    Entry {
        id: "brauer-quotient",
        family: "brauer",
        statement: "Brauer modulo its no-propagating-edge ideal has the (co)homology of the symmetric group for any delta",
        hypotheses: &[Hypothesis::NAtLeastTwo],
        claim: Claim::Quotient(0, Target::SymmetricN),
        defaults: Defaults { delta: 0, ..BASE },
    },
    Entry {
        id: "brauer-odd",
        family: "brauer",
        statement: "Brauer on an odd number of strands has the (co)homology of the symmetric group for any delta",
        hypotheses: &[Hypothesis::OddN],
        claim: Claim::Centred(Target::SymmetricN),
        defaults: Defaults { n: 3, delta: 0, ..BASE },
    },
    Entry {
        id: "brauer-invertible",
        family: "brauer",
        statement: "Brauer with delta invertible has the (co)homology of the symmetric group",
        hypotheses: &[Hypothesis::Invertible(&["delta"])],
        claim: Claim::Centred(Target::SymmetricN),
        defaults: BASE,
    },
    Entry {
        id: "rook-invertible",
        family: "rook",
        statement: "rook with epsilon invertible has the (co)homology of the symmetric group",
        hypotheses: &[Hypothesis::Invertible(&["epsilon"])],
        claim: Claim::Centred(Target::SymmetricN),
        defaults: BASE,
    },
    Entry {
        id: "planar-rook-invertible",
        family: "planar-rook",
        statement: "planar rook with epsilon invertible has vanishing positive-degree (co)homology",
        hypotheses: &[Hypothesis::Invertible(&["epsilon"])],
        claim: Claim::Centred(Target::Trivial),
        defaults: Defaults { n: 3, ..BASE },
    },
    Entry {
        id: "walled-invertible",
        family: "walled",
        statement: "walled Brauer with delta invertible has the (co)homology of the product of symmetric groups",
        hypotheses: &[Hypothesis::Invertible(&["delta"])],
        claim: Claim::Centred(Target::WallProduct),
        defaults: Defaults { r: 1, s: 1, ..BASE },
    },
    Entry {
        id: "walled-quotient",
        family: "walled",
        statement: "walled Brauer modulo its no-propagating-edge ideal has the (co)homology of the product of symmetric groups",
        hypotheses: &[],
        claim: Claim::Quotient(0, Target::WallProduct),
        defaults: Defaults { r: 1, s: 1, delta: 0, ..BASE },
    },
    Entry {
        id: "thm-walled-odd",
        family: "walled",
        statement: "walled Brauer with r+s odd has the (co)homology of the product of symmetric groups for any delta",
        hypotheses: &[Hypothesis::OddWall],
        claim: Claim::Centred(Target::WallProduct),
        defaults: Defaults { r: 1, s: 2, delta: 0, ..BASE },
    },
    Entry {
        id: "blob-invertible",
        family: "blob",
        statement: "blob with delta and gamma invertible has vanishing positive-degree (co)homology",
        hypotheses: &[Hypothesis::Invertible(&["delta", "gamma"])],
        claim: Claim::Centred(Target::Trivial),
        defaults: BASE,
    },
    Entry {
        id: "blob-quotient",
        family: "blob",
        statement: "blob modulo its no-propagating-edge ideal has vanishing positive-degree (co)homology when gamma is invertible",
        hypotheses: &[Hypothesis::Invertible(&["gamma"])],
        claim: Claim::Quotient(0, Target::Trivial),
        defaults: Defaults { n: 4, delta: 0, ring: "z2", degree: 2, ..BASE },
    },
    Entry {
        id: "blob-odd",
        family: "blob",
        statement: "blob on an odd number of strands with gamma invertible has vanishing positive-degree (co)homology",
        hypotheses: &[Hypothesis::OddN, Hypothesis::Invertible(&["gamma"])],
        claim: Claim::Centred(Target::Trivial),
        defaults: Defaults { n: 3, delta: 0, ring: "z2", ..BASE },
    },
    Entry {
        id: "dtl-invertible",
        family: "dtl",
        statement: "dilute Temperley-Lieb with delta invertible has vanishing positive-degree (co)homology",
        hypotheses: &[Hypothesis::Invertible(&["delta"])],
        claim: Claim::Centred(Target::Trivial),
        defaults: Defaults { ring: "q", ..BASE },
    },
    Entry {
        id: "rb-remark",
        family: "rb",
        statement: "e1 rho1 e1 = epsilon e1 in the two-strand rook-Brauer algebra",
        hypotheses: &[],
        claim: Claim::RookBrauerRelation,
        defaults: Defaults { delta: 2, epsilon: 3, ..BASE },
    },
    Entry {
        id: "tate-rook",
        family: "rook",
        statement: "the Tate table of rook with epsilon invertible is that of the symmetric group",
        hypotheses: &[Hypothesis::Invertible(&["epsilon"])],
        claim: Claim::Tate(Target::SymmetricN),
        defaults: BASE,
    },
    Entry {
        id: "tate-tl-odd",
        family: "tl",
        statement: "the Tate table of Temperley-Lieb on an odd number of strands vanishes",
        hypotheses: &[Hypothesis::OddN],
        claim: Claim::Tate(Target::Trivial),
        defaults: Defaults { n: 3, delta: 0, ..BASE },
    },
];

pub fn lookup(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id == id)
}

impl Entry {
    /// Returns the reason the hypothesis fails, if it does.
    pub fn hypothesis_violation(&self, spec: &AlgebraSpec) -> Option<String> {
        self.hypotheses.iter().find_map(|h| h.violation(spec))
    }
}

impl Hypothesis {
    fn violation(&self, spec: &AlgebraSpec) -> Option<String> {
        match *self {
            Hypothesis::Invertible(names) => names.iter().find_map(|&name| {
                let v = match name {
                    "delta" => spec.delta(),
                    "epsilon" => spec.epsilon(),
                    _ => spec.gamma(),
                };
                (!v.is_some_and(Scalar::is_unit))
                    .then(|| format!("{name} must be invertible in {}", spec.ring()))
            }),
            Hypothesis::OddN => {
                (spec.n().is_multiple_of(2)).then(|| format!("n = {} must be odd", spec.n()))
            }
            Hypothesis::OddWall => {
                (spec.n().is_multiple_of(2)).then(|| format!("r + s = {} must be odd", spec.n()))
            }
            Hypothesis::NAtLeastTwo => (spec.n() < 2).then(|| "n must be at least 2".to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub id: &'static str,
    pub statement: &'static str,
    pub algebra: serde_json::Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_violation: Option<String>,
    pub details: serde_json::Value,
}

fn centred_details(r: &CentredReport) -> serde_json::Value {
    json!({
        "group": r.group,
        "ring": r.ring,
        "D": r.truncation,
        "tor": r.tor_algebra.degrees,
        "tor_group": r.tor_group.degrees,
        "ext": r.ext_algebra.degrees,
        "ext_group": r.ext_group.degrees,
        "first_disagreement": r.first_disagreement,
    })
}

/// Runs an entry on a fully specified algebra.
/// With `force`, a failed hypothesis is recorded instead of refused.
pub fn run(
    entry: &'static Entry,
    spec: &AlgebraSpec,
    degree: usize,
    force: bool,
) -> Result<Verdict, CliError> {
    let violation = entry.hypothesis_violation(spec);
    if let (Some(reason), false) = (&violation, force) {
        return Err(CliError::Usage(format!(
            "{}: hypothesis not met: {reason}",
            entry.id
        )));
    }
    let algebra = serde_json::to_value(spec).expect("specs serialize");
    let (pass, details) = match entry.claim {
        Claim::Centred(target) => {
            let a = AugmentedAlgebra::from_spec(spec)?;
            let r = g_centred_check(&a, target.group(spec), degree)?;
            (r.agrees, centred_details(&r))
        }
        Claim::Quotient(level, target) => {
            let q = QuotientSpec::new(spec.clone(), level)?;
            let a = AugmentedAlgebra::from_quotient(&q)?;
            let r = g_centred_check(&a, target.group(spec), degree)?;
            let mut d = centred_details(&r);
            d["ideal_level"] = json!(level);
            (r.agrees, d)
        }
        Claim::Tate(target) => {
            let g = target.group(spec);
            let a = AugmentedAlgebra::from_spec(spec)?;
            let expected = tate_group(g, degree, spec.ring())?;
            match tate_table(&a, g, degree) {
                Ok(t) => (t == expected, json!({ "tate": t, "tate_group": expected })),
                Err(e) => (
                    false,
                    json!({ "error": e.to_string(), "tate_group": expected }),
                ),
            }
        }
        Claim::RookBrauerRelation => rb_relation(spec)?,
    };
    Ok(Verdict {
        id: entry.id,
        statement: entry.statement,
        algebra,
        pass,
        hypothesis_violation: violation,
        details,
    })
}

fn rb_relation(spec: &AlgebraSpec) -> Result<(bool, serde_json::Value), CliError> {
    if spec.family() != FamilyTag::RookBrauer || spec.n() != 2 {
        return Err(CliError::Usage(
            "rb-remark needs the rook-Brauer family with n = 2".into(),
        ));
    }
    let e1 = AlgebraElement::basis(spec, Diagram::parse(2, "1-2 1'-2'")?)?;
    let rho1 = AlgebraElement::basis(spec, Diagram::parse(2, "2-2'")?)?;
    let lhs = multiply(&multiply(&e1, &rho1)?, &e1)?;
    let eps = spec
        .epsilon()
        .cloned()
        .unwrap_or_else(|| spec.ring().zero());
    let rhs = e1.scale(&eps);
    Ok((
        lhs == rhs,
        json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() }),
    ))
}

/// The default spec of an entry.
pub fn default_spec(entry: &Entry) -> Result<AlgebraSpec, CliError> {
    let d = entry.defaults;
    let ring: RingSpec = d.ring.parse()?;
    let fam = FamilyTag::from_name(entry.family, Some(d.r), Some(d.s))?;
    let n = match fam {
        FamilyTag::WalledBrauer { r, s } => r + s,
        _ => d.n,
    };
    Ok(AlgebraSpec::with_ints(
        fam, n, ring, d.delta, d.epsilon, d.gamma,
    )?)
}
