//! Explicit constructions and bound arguments behind the two extremal
//! tables, packaged as certificates.
//!
//! `constructions` transcribes the per-family witnesses (closed-form signed
//! combinations), `bounds` produces the lower/upper-bound certificates, and
//! `verify` re-checks any certificate independently of its producer.

mod bounds;
mod certificate;
mod constructions;
mod verify;

pub use bounds::{
    best_balanced_lower_bound, coordinate_parity_bound, e7_cocardinality_bound,
    pair_count_parity_bound, wellbalanced_upper_bound,
};
pub use certificate::{
    Certificate, CertificateBody, CoordinateParityCertificate, E7PairScanCertificate,
    LatticeObstructionCertificate, PairCountParityCertificate, SoBoundArgument,
    SoSizeBoundCertificate, TrivialBoundCertificate, WellBalancedCertificate,
    WitnessCertificate,
};
pub use constructions::{identity_sum, thm32_witness, thm41_witness, IdentitySum, PairKind};
pub use verify::{verify_certificate, verify_well_balanced};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A sign word `nu: {1..k} -> {0,1}` indexing the half-spin roots; the root
/// carries coefficient `(-1)^{nu(i)}` on `e_i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SignPattern {
    nu: Vec<u8>,
}

impl SignPattern {
    pub fn new(nu: Vec<u8>) -> Result<Self> {
        if nu.iter().any(|&b| b > 1) {
            return Err(Error::internal("sign pattern entries must be 0 or 1"));
        }
        Ok(SignPattern { nu })
    }

    pub fn len(&self) -> usize {
        self.nu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nu.is_empty()
    }

    /// `nu(i)`, 1-based.
    pub fn value(&self, i: usize) -> u8 {
        self.nu[i - 1]
    }

    /// `(-1)^{nu(i)}`, 1-based.
    pub fn coefficient(&self, i: usize) -> i64 {
        if self.nu[i - 1] == 0 {
            1
        } else {
            -1
        }
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.nu.iter().map(|&b| b as usize).sum())
    }

    /// The involution partner `1 - nu`.
    pub fn complemented(&self) -> SignPattern {
        SignPattern {
            nu: self.nu.iter().map(|&b| 1 - b).collect(),
        }
    }

    /// All patterns of length `k` with the given parity, in lexicographic
    /// order on `(nu(1), ..., nu(k))`.
    pub fn all_with_parity(k: usize, parity: Parity) -> Vec<SignPattern> {
        let mut out = Vec::new();
        for raw in 0u32..(1 << k) {
            let nu: Vec<u8> = (0..k).map(|pos| ((raw >> (k - 1 - pos)) & 1) as u8).collect();
            let p = SignPattern { nu };
            if p.parity() == parity {
                out.push(p);
            }
        }
        out
    }
}
