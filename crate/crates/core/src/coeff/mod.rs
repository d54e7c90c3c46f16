//! Exact coefficient rings and sparse exact linear algebra.

mod eliminate;
mod matrix;
mod ring;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use eliminate::{diagonalize, divisibility_chain, BigZ, Fp, SmallZ};

pub use matrix::SparseMatrix;
pub(crate) use ring::is_prime;
pub use ring::{scalar_invert, RingSpec, Scalar};

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk`, or
/// a vector space of dimension `free_rank` when `torsion` is empty and the
/// ground ring is a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Builds invariants from arbitrary torsion orders: units are dropped and
    /// the rest is brought into divisibility order.
    pub fn new(free_rank: usize, torsion: impl IntoIterator<Item = u64>) -> Self {
        let chain = divisibility_chain(torsion.into_iter().map(BigInt::from).collect());
        AbelianInvariants {
            free_rank,
            torsion: chain
                .into_iter()
                .filter(|d| !d.is_one())
                .map(|d| d.to_u64().expect("lcm of u64 values fits"))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Whether every torsion entry lies in `1 < t` and `t_i | t_{i+1}`.
    pub fn is_well_formed(&self) -> bool {
        self.torsion.iter().all(|&t| t >= 2) && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rank and non-unit invariant factors of a matrix. Over a field the factor
/// list is always empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

fn check_supported(ring: RingSpec) -> Result<()> {
    match ring {
        RingSpec::IntegersMod(m) if !is_prime(m) => Err(Error::UnsupportedRing(ring)),
        _ => Ok(()),
    }
}

/// Vectors of the matrix in whichever orientation has fewer of them.
fn vectors<E>(
    m: &SparseMatrix,
    conv: impl Fn(&Scalar) -> Option<E>,
) -> Option<(usize, Vec<Vec<(u32, E)>>)> {
    let src = if m.cols() <= m.rows() {
        std::borrow::Cow::Borrowed(m)
    } else {
        std::borrow::Cow::Owned(m.transpose())
    };
    let vecs = src
        .columns()
        .iter()
        .map(|col| {
            col.iter()
                .map(|(r, v)| conv(v).map(|e| (*r as u32, e)))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    Some((src.rows(), vecs))
}

/// Integer matrix for a rational one: each column is scaled by the lcm of its
/// denominators, which preserves the rank.
fn clear_denominators(m: &SparseMatrix) -> SparseMatrix {
    let z = RingSpec::Integers;
    let columns = m
        .columns()
        .iter()
        .map(|col| {
            let l = col.iter().fold(BigInt::one(), |acc, (_, v)| match v {
                Scalar::Rational(q) => acc.lcm(q.denom()),
                _ => acc,
            });
            col.iter()
                .map(|(r, v)| {
                    let Scalar::Rational(q) = v else {
                        unreachable!()
                    };
                    (*r, z.from_bigint(&(q.numer() * (&l / q.denom()))))
                })
                .collect()
        })
        .collect();
    SparseMatrix::from_columns(m.rows(), z, columns).expect("same shape")
}

fn integer_diagonal(m: &SparseMatrix) -> Vec<BigInt> {
    let small = vectors(m, |s| s.to_bigint().and_then(|b| b.to_i64()));
    if let Some((dim, vecs)) = small {
        if let Ok(d) = diagonalize(&SmallZ, dim, vecs) {
            return d.into_iter().map(BigInt::from).collect();
        }
    }
    let (dim, vecs) = vectors(m, |s| s.to_bigint()).expect("integer entries");
    diagonalize(&BigZ, dim, vecs).expect("arbitrary precision cannot overflow")
}

/// Rank and non-unit invariant factors of `m`. Over Q and Z/p only the rank
/// is meaningful.
pub fn reduce(m: &SparseMatrix) -> Result<Reduction> {
    check_supported(m.ring())?;
    match m.ring() {
        RingSpec::Integers => {
            let factors = divisibility_chain(integer_diagonal(m));
            Ok(Reduction {
                rank: factors.len(),
                torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
            })
        }
        RingSpec::Rationals => Ok(Reduction {
            rank: integer_diagonal(&clear_denominators(m)).len(),
            torsion: Vec::new(),
        }),
        RingSpec::IntegersMod(p) => {
            let (dim, vecs) = vectors(m, |s| match s {
                Scalar::Residue { value, .. } => Some(*value),
                _ => None,
            })
            .expect("residue entries");
            let d = diagonalize(&Fp(p), dim, vecs).expect("field arithmetic cannot overflow");
            Ok(Reduction {
                rank: d.len(),
                torsion: Vec::new(),
            })
        }
    }
}

pub fn rank(m: &SparseMatrix) -> Result<usize> {
    reduce(m).map(|r| r.rank)
}

/// The nonzero invariant factors `d1 | d2 | ... | dr` of an integer matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<Vec<BigInt>> {
    if m.ring() != RingSpec::Integers {
        return Err(Error::RingMismatch(m.ring(), RingSpec::Integers));
    }
    Ok(divisibility_chain(integer_diagonal(m)))
}

/// Invariants of `ker(d_k) / im(d_k1)` from already reduced boundaries.
///
/// Over Z the kernel of `d_k` is a direct summand of the chains, so the
/// torsion of the quotient is the non-unit part of the Smith form of `d_k1`.
pub fn homology_from_reductions(
    chains: usize,
    outgoing: &Reduction,
    incoming: &Reduction,
) -> Result<AbelianInvariants> {
    let torsion = incoming
        .torsion
        .iter()
        .map(|t| {
            t.abs()
                .to_u64()
                .ok_or_else(|| Error::Overflow(t.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AbelianInvariants {
        free_rank: chains - outgoing.rank - incoming.rank,
        torsion,
    })
}

/// Homology at the middle of `C_{k+1} --d_k1--> C_k --d_k--> C_{k-1}`.
pub fn homology_at(
    d_k: &SparseMatrix,
    d_k1: &SparseMatrix,
    ring: RingSpec,
) -> Result<AbelianInvariants> {
    if d_k.ring() != ring {
        return Err(Error::RingMismatch(d_k.ring(), ring));
    }
    if d_k1.ring() != ring {
        return Err(Error::RingMismatch(d_k1.ring(), ring));
    }
    check_supported(ring)?;
    if !d_k.mul(d_k1)?.is_zero() {
        return Err(Error::CompositionNotZero);
    }
    homology_from_reductions(d_k.cols(), &reduce(d_k)?, &reduce(d_k1)?)
}
